//! Command-line front end: parse parity-check or cyclic specs, run the
//! validity / dimension / distance / CSS / barrier / fractal analyses, and
//! emit human-readable text plus deterministic JSON reports.
//!
//! Exit codes: 0 ok, 2 parse or usage error, 3 budget exceeded (partial
//! results still written), 4 internal-consistency failure.

mod report;

use clap::{Args, Parser, Subcommand};
use report::*;
use std::path::PathBuf;
use std::process::ExitCode;
use xyzprod::css::{css_convert, css_distance_capped};
use xyzprod::cyclic::{energy_barrier_path, fractal_operator, phi_kernel_dimension, CyclicSpec};
use xyzprod::dimension::dimension_formula;
use xyzprod::distance::{
    disjoint_representative_bound, distance_capped, dstar, max_row_weight, sandwich_holds,
    DstarStrategy,
};
use xyzprod::io::{parse_cyclic_spec, parse_matrix, write_alist, write_cyclic_spec, write_matrix};
use xyzprod::matrix::BitMatrix;
use xyzprod::xyz::{chamon_matrix, in_t, xyz3d_matrix, XYZCode};
use xyzprod::Error;

#[derive(Parser)]
#[command(name = "xyzprod", version, about = "XYZ product code analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check validity: Abelian generators, -1 membership, dimension-1 family.
    Validate(AnalyzeArgs),
    /// Code dimension by brute force, relation kernel and the gcd formula.
    Dim(AnalyzeArgs),
    /// Weight-capped exact logical search, optionally with the decoupled d*.
    Distance(DistanceArgs),
    /// Convert to the 4n-qubit CSS code and report its parameters.
    Css(CssArgs),
    /// Energy-barrier path for a cyclic code with identical first two
    /// polynomials.
    Barrier(BarrierArgs),
    /// Fractal operator weights and the plane-map kernel for a cyclic spec.
    Fractal(FractalArgs),
}

#[derive(Args, Clone)]
struct InputArgs {
    /// First parity-check matrix file (dense or "circ n: ..." form).
    #[arg(long, requires = "h2", requires = "h3")]
    h1: Option<PathBuf>,
    /// Second parity-check matrix file.
    #[arg(long, requires = "h1")]
    h2: Option<PathBuf>,
    /// Third parity-check matrix file.
    #[arg(long, requires = "h1")]
    h3: Option<PathBuf>,
    /// Cyclic spec file: sizes line plus P1/P2/P3 exponent lines.
    #[arg(long, conflicts_with_all = ["h1", "h2", "h3"])]
    cyclic: Option<PathBuf>,
    /// Chamon family 1 + Omega at the given sizes.
    #[arg(long, num_args = 3, value_names = ["N1", "N2", "N3"],
          conflicts_with_all = ["h1", "h2", "h3", "cyclic"])]
    chamon: Option<Vec<usize>>,
    /// Weight-3 family 1 + Omega + Omega^T at the given sizes.
    #[arg(long = "3dxyz", num_args = 3, value_names = ["N1", "N2", "N3"],
          conflicts_with_all = ["h1", "h2", "h3", "cyclic", "chamon"])]
    xyz3d: Option<Vec<usize>>,
}

#[derive(Args)]
struct CommonArgs {
    /// Seed for all randomized strategies.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Worker threads (0 = all cores). Output does not depend on this.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Maximum operator weight searched exhaustively.
    #[arg(long, default_value_t = 3)]
    cap: usize,
    /// Budget in enumerated supports.
    #[arg(long, default_value_t = 10_000_000_000)]
    budget: u64,
    /// Also minimize the decoupled objective with this strategy.
    #[arg(long, value_parser = ["exhaustive", "greedy"])]
    dstar: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CssArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Capped search for the converted code's distance (0 = skip).
    #[arg(long, default_value_t = 0)]
    cap: usize,
    /// Budget in enumerated supports.
    #[arg(long, default_value_t = 10_000_000_000)]
    budget: u64,
    /// Write PREFIX.hx.txt / PREFIX.hz.txt (matrix text format) and
    /// PREFIX.hx.alist / PREFIX.hz.alist.
    #[arg(long, value_name = "PREFIX")]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct BarrierArgs {
    /// First lattice size.
    n1: usize,
    /// Second lattice size (coprime with the first).
    n2: usize,
    /// Third lattice size.
    #[arg(long, default_value_t = 2)]
    n3: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct FractalArgs {
    /// Cyclic spec file.
    #[arg(long)]
    cyclic: PathBuf,
    /// Fractal exponent: the operator is (Q_a + Q_b)^(2^p - 1).
    #[arg(long, default_value_t = 1)]
    p: u32,
    /// Also compute the kernel dimension of the plane map (x, y axes).
    #[arg(long, default_value_t = false)]
    kernel: bool,
    #[command(flatten)]
    common: CommonArgs,
}

/// Matrices plus a description and canonical hash of each input.
struct LoadedInput {
    h: [BitMatrix; 3],
    digests: Vec<InputDigest>,
}

fn load_input(input: &InputArgs) -> Result<LoadedInput, Error> {
    let digest = |source: String, m: &BitMatrix| InputDigest {
        hash: fnv1a_hex(write_matrix(m).as_bytes()),
        source,
    };
    if let Some(sizes) = &input.chamon {
        let h: Vec<BitMatrix> = sizes.iter().map(|&n| chamon_matrix(n)).collect();
        let digests = sizes
            .iter()
            .zip(&h)
            .map(|(n, m)| digest(format!("--chamon {n}"), m))
            .collect();
        return Ok(LoadedInput {
            h: [h[0].clone(), h[1].clone(), h[2].clone()],
            digests,
        });
    }
    if let Some(sizes) = &input.xyz3d {
        let h: Vec<BitMatrix> = sizes.iter().map(|&n| xyz3d_matrix(n)).collect();
        let digests = sizes
            .iter()
            .zip(&h)
            .map(|(n, m)| digest(format!("--3dxyz {n}"), m))
            .collect();
        return Ok(LoadedInput {
            h: [h[0].clone(), h[1].clone(), h[2].clone()],
            digests,
        });
    }
    if let Some(path) = &input.cyclic {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        let spec = parse_cyclic_spec(&text)?;
        let h = [spec.matrix(0), spec.matrix(1), spec.matrix(2)];
        let digests = vec![InputDigest {
            source: path.display().to_string(),
            hash: fnv1a_hex(write_cyclic_spec(&spec).as_bytes()),
        }];
        return Ok(LoadedInput { h, digests });
    }
    match (&input.h1, &input.h2, &input.h3) {
        (Some(p1), Some(p2), Some(p3)) => {
            let mut h = Vec::new();
            let mut digests = Vec::new();
            for p in [p1, p2, p3] {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))?;
                let m = parse_matrix(&text)?;
                digests.push(digest(p.display().to_string(), &m));
                h.push(m);
            }
            Ok(LoadedInput {
                h: [h[0].clone(), h[1].clone(), h[2].clone()],
                digests,
            })
        }
        _ => Err(Error::Input(
            "provide --h1/--h2/--h3, --cyclic, --chamon or --3dxyz".into(),
        )),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::Input(_) => 2,
        Error::Budget(_) => 3,
        Error::Internal(_) => 4,
    }
}

fn emit<T: serde::Serialize>(
    common: &CommonArgs,
    command: &str,
    cap: Option<usize>,
    budget: Option<u64>,
    digests: Vec<InputDigest>,
    result: T,
) -> Result<(), Error> {
    if let Some(path) = &common.json {
        let envelope = Envelope {
            tool: "xyzprod",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            seed: common.seed,
            cap,
            budget,
            workers: Some(common.workers),
            inputs: digests,
            result,
        };
        let body = serde_json::to_string_pretty(&envelope)
            .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
        std::fs::write(path, body + "\n")
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn configure_workers(workers: usize) {
    if workers > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
}

fn cmd_validate(args: &AnalyzeArgs) -> Result<u8, Error> {
    let loaded = load_input(&args.input)?;
    let code = XYZCode::build(
        loaded.h[0].clone(),
        loaded.h[1].clone(),
        loaded.h[2].clone(),
    )?;
    let abelian = code.check_abelian()?;
    let minus_one = code.group().minus_one_in_group()?;
    let t = in_t(&loaded.h[0], &loaded.h[1], &loaded.h[2])?;
    let mut syndromes_zero = true;
    for g in code.generators() {
        if !code.syndrome(g)?.is_zero() {
            syndromes_zero = false;
            break;
        }
    }
    println!(
        "abelian: {}, minus_one: {}, in_T: {}{}",
        if abelian { "yes" } else { "no" },
        if minus_one { "yes" } else { "no" },
        if t.is_member { "yes" } else { "no" },
        t.diagnostic
            .as_deref()
            .map(|d| format!(" ({d})"))
            .unwrap_or_default()
    );
    println!(
        "qubits: {}, checks: {}, generator syndromes zero: {}",
        code.n_qubits(),
        code.n_checks(),
        if syndromes_zero { "yes" } else { "no" }
    );
    let result = ValidateResult {
        n_qubits: code.n_qubits(),
        n_checks: code.n_checks(),
        abelian,
        minus_one_in_group: minus_one,
        in_t: t.is_member,
        in_t_diagnostic: t.diagnostic,
        generator_syndromes_zero: syndromes_zero,
    };
    emit(&args.common, "validate", None, None, loaded.digests, result)?;
    Ok(if abelian && syndromes_zero { 0 } else { 4 })
}

fn cmd_dim(args: &AnalyzeArgs) -> Result<u8, Error> {
    let loaded = load_input(&args.input)?;
    let code = XYZCode::build(
        loaded.h[0].clone(),
        loaded.h[1].clone(),
        loaded.h[2].clone(),
    )?;
    let report = dimension_formula(&code)?;
    // closed form for the weight-3 cyclic family, when the input matches it
    let closed = {
        let sizes = [loaded.h[0].rows(), loaded.h[1].rows(), loaded.h[2].rows()];
        let is_family = (0..3).all(|i| {
            loaded.h[i].rows() == loaded.h[i].cols() && loaded.h[i] == xyz3d_matrix(sizes[i])
        });
        if is_family {
            xyzprod::cyclic::xyz3d_closed_form_dimension(sizes[0], sizes[1], sizes[2]).ok()
        } else {
            None
        }
    };
    match report.k_formula {
        Some(k) => println!(
            "k = {} (brute force {}, relation kernel {:?}, formula {k})",
            report.k_bruteforce, report.k_bruteforce, report.r_direct
        ),
        None => println!(
            "k = {} (brute force; gcd formula inapplicable, bounds-only route for that method; relation kernel {:?})",
            report.k_bruteforce, report.r_direct
        ),
    }
    if let Some(c) = closed {
        println!("closed form (weight-3 cyclic family): {c}");
    }
    let agreement = report.agreement && closed.is_none_or(|c| c == report.k_bruteforce);
    if !agreement {
        eprintln!("dimension routes disagree; this is a defect signal");
    }
    let result = DimResult {
        n_qubits: report.n_qubits,
        k_bruteforce: report.k_bruteforce,
        r_direct: report.r_direct,
        s_gcd: report.s_gcd,
        k_formula: report.k_formula,
        formula_applicable: report.k_formula.is_some(),
        agreement,
        closed_form_3dxyz: closed,
    };
    emit(&args.common, "dim", None, None, loaded.digests, result)?;
    Ok(if agreement { 0 } else { 4 })
}

fn cmd_distance(args: &DistanceArgs) -> Result<u8, Error> {
    let loaded = load_input(&args.input)?;
    let code = XYZCode::build(
        loaded.h[0].clone(),
        loaded.h[1].clone(),
        loaded.h[2].clone(),
    )?;
    let outcome = distance_capped(&code, args.cap, args.budget)?;
    let witness = outcome
        .best_logical
        .as_ref()
        .map(|op| code.describe_operator(op));
    match outcome.exact_d {
        Some(d) => println!(
            "d = {d}, witness: {}",
            witness.as_deref().unwrap_or("(none)")
        ),
        None => println!(
            "d > {} (no logical found up to the completed cap{})",
            outcome.completed_cap,
            if outcome.budget_exhausted {
                "; budget exhausted"
            } else {
                ""
            }
        ),
    }
    let representative_bound = disjoint_representative_bound(&code).ok();
    if let Some(b) = representative_bound {
        println!("disjoint-representative lower bound: {b}");
    }

    let mut dstar_result = None;
    if let Some(mode) = &args.dstar {
        let h = [&loaded.h[0], &loaded.h[1], &loaded.h[2]];
        let strategy = match mode.as_str() {
            "exhaustive" => DstarStrategy::Exhaustive,
            _ => DstarStrategy::Greedy {
                restarts: 32,
                seed: args.common.seed,
            },
        };
        let rep = dstar(&h, strategy)?;
        let w = max_row_weight(&h);
        let sandwich = outcome.exact_d.map(|d| {
            let holds = sandwich_holds(rep.value, d, w);
            println!(
                "d* = {}, sandwich: {}/{} <= {} <= 3*{}*{}/2 {}",
                rep.value,
                rep.value,
                w,
                d,
                w,
                rep.value,
                if holds { "ok" } else { "VIOLATED" }
            );
            SandwichResult {
                d,
                lower: format!("{}/{}", rep.value, w),
                upper: format!("3*{}*{}/2", w, rep.value),
                holds,
            }
        });
        if sandwich.is_none() {
            println!(
                "d* = {} ({}); no exact d to sandwich",
                rep.value,
                if rep.exact { "exact" } else { "upper bound" }
            );
        }
        dstar_result = Some(DstarResult {
            value: rep.value,
            exact: rep.exact,
            strategy: mode.clone(),
            permutation: rep.permutation,
            witness_cells: rep.witness.cells().collect(),
            max_row_weight: w,
            sandwich,
        });
    }

    let budget_exhausted = outcome.budget_exhausted;
    let sandwich_violated = dstar_result
        .as_ref()
        .and_then(|d| d.sandwich.as_ref())
        .is_some_and(|s| !s.holds);
    let result = DistanceResult {
        n_qubits: code.n_qubits(),
        cap: outcome.cap,
        exact_d: outcome.exact_d,
        lower_bound: outcome.lower_bound,
        upper_bound: outcome.upper_bound,
        completed_cap: outcome.completed_cap,
        budget_exhausted,
        supports_examined: outcome.supports_examined,
        witness,
        representative_lower_bound: representative_bound,
        dstar: dstar_result,
    };
    emit(
        &args.common,
        "distance",
        Some(args.cap),
        Some(args.budget),
        loaded.digests,
        result,
    )?;
    Ok(if sandwich_violated {
        4
    } else if budget_exhausted {
        3
    } else {
        0
    })
}

fn cmd_css(args: &CssArgs) -> Result<u8, Error> {
    let loaded = load_input(&args.input)?;
    let code = XYZCode::build(
        loaded.h[0].clone(),
        loaded.h[1].clone(),
        loaded.h[2].clone(),
    )?;
    let css = css_convert(code.generators())?;
    let k = css.dimension();
    let dual = css.dual_containment_holds();
    let ratio_ok = code
        .generators()
        .iter()
        .zip((code.n_qubits()..css.hx.rows()).map(|i| css.hx.row(i)))
        .all(|(orig, row)| row.weight() <= 2 * orig.weight());
    println!(
        "css: n = {}, k = {}, hx*hz^T = {}",
        css.n(),
        k,
        if dual { "0" } else { "NONZERO" }
    );
    let mut distance = None;
    let mut budget_exhausted = false;
    if args.cap > 0 {
        let rep = css_distance_capped(&css, args.cap, args.budget)?;
        budget_exhausted = rep.x_side.budget_exhausted || rep.z_side.budget_exhausted;
        println!(
            "css distance (cap {}): dx = {:?}, dz = {:?}, d = {:?}",
            args.cap, rep.x_side.exact_d, rep.z_side.exact_d, rep.d
        );
        distance = Some(CssDistanceResult {
            cap: args.cap,
            dx: rep.x_side.exact_d,
            dz: rep.z_side.exact_d,
            d: rep.d,
            budget_exhausted,
        });
    }
    let mut written_files = Vec::new();
    if let Some(prefix) = &args.out {
        let base = prefix.display().to_string();
        for (suffix, body) in [
            (".hx.txt", write_matrix(&css.hx)),
            (".hz.txt", write_matrix(&css.hz)),
            (".hx.alist", write_alist(&css.hx)),
            (".hz.alist", write_alist(&css.hz)),
        ] {
            let path = format!("{base}{suffix}");
            std::fs::write(&path, body)
                .map_err(|e| Error::Input(format!("cannot write {path}: {e}")))?;
            written_files.push(path);
        }
        for f in &written_files {
            println!("wrote {f}");
        }
    }
    let result = CssResult {
        original_n: code.n_qubits(),
        n: css.n(),
        k,
        dual_containment: dual,
        max_weight_ratio_ok: ratio_ok,
        distance,
        written_files,
    };
    emit(
        &args.common,
        "css",
        Some(args.cap),
        Some(args.budget),
        loaded.digests,
        result,
    )?;
    Ok(if !dual || !ratio_ok {
        4
    } else if budget_exhausted {
        3
    } else {
        0
    })
}

fn cmd_barrier(args: &BarrierArgs) -> Result<u8, Error> {
    let spec = CyclicSpec::chamon(args.n1, args.n2, args.n3);
    let rep = energy_barrier_path(&spec)?;
    let profile: Vec<usize> = rep.steps.iter().map(|s| s.syndrome_weight).collect();
    println!(
        "path length {}, max syndrome weight {}, endpoint is two-slice logical: {}",
        rep.path_len,
        rep.max_syndrome_weight,
        if rep.endpoint_is_two_slice_logical && rep.endpoint_is_nonstabilizer {
            "yes"
        } else {
            "NO"
        }
    );
    println!("syndrome profile: {profile:?}");
    let ok = rep.endpoint_is_two_slice_logical && rep.endpoint_is_nonstabilizer;
    let digest = InputDigest {
        source: format!("--barrier {} {} --n3 {}", args.n1, args.n2, args.n3),
        hash: fnv1a_hex(write_cyclic_spec(&spec).as_bytes()),
    };
    let result = BarrierResult {
        n1: args.n1,
        n2: args.n2,
        n3: args.n3,
        path_len: rep.path_len,
        max_syndrome_weight: rep.max_syndrome_weight,
        endpoint_is_two_slice_logical: rep.endpoint_is_two_slice_logical,
        endpoint_is_nonstabilizer: rep.endpoint_is_nonstabilizer,
        syndrome_profile: profile,
    };
    emit(&args.common, "barrier", None, None, vec![digest], result)?;
    Ok(if ok { 0 } else { 4 })
}

fn cmd_fractal(args: &FractalArgs) -> Result<u8, Error> {
    let text = std::fs::read_to_string(&args.cyclic)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", args.cyclic.display())))?;
    let spec = parse_cyclic_spec(&text)?;
    let rep = fractal_operator(&spec, (0, 1), args.p)?;
    let bound_holds = rep.image_weight <= rep.image_weight_bound;
    println!(
        "fractal p = {}: operator weight {}, image weight {} (bound {})",
        args.p,
        rep.operator.weight(),
        rep.image_weight,
        rep.image_weight_bound
    );
    let kernel = if args.kernel {
        let dim = phi_kernel_dimension(&spec, (0, 1))?;
        println!("plane-map kernel dimension: {dim}");
        Some(dim)
    } else {
        None
    };
    let digest = InputDigest {
        source: args.cyclic.display().to_string(),
        hash: fnv1a_hex(write_cyclic_spec(&spec).as_bytes()),
    };
    let result = FractalResult {
        moduli: spec.moduli,
        p: args.p,
        axes: (0, 1),
        operator_weight: rep.operator.weight(),
        image_weight: rep.image_weight,
        image_weight_bound: rep.image_weight_bound,
        bound_holds,
        phi_kernel_dimension: kernel,
    };
    emit(&args.common, "fractal", None, None, vec![digest], result)?;
    Ok(if bound_holds { 0 } else { 4 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::Validate(a) | Command::Dim(a) => &a.common,
        Command::Distance(a) => &a.common,
        Command::Css(a) => &a.common,
        Command::Barrier(a) => &a.common,
        Command::Fractal(a) => &a.common,
    };
    configure_workers(common.workers);
    let outcome = match &cli.command {
        Command::Validate(a) => cmd_validate(a),
        Command::Dim(a) => cmd_dim(a),
        Command::Distance(a) => cmd_distance(a),
        Command::Css(a) => cmd_css(a),
        Command::Barrier(a) => cmd_barrier(a),
        Command::Fractal(a) => cmd_fractal(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
