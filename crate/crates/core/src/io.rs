//! Text formats: parity-check matrices ("m n" header plus 0/1 rows, or the
//! circulant shorthand "circ n: e1,e2,..."), cyclic code specs, and an
//! alist-style sparse listing for interoperability with classical tools.

use crate::cyclic::CyclicSpec;
use crate::error::{Error, Result};
use crate::matrix::BitMatrix;
use crate::xyz::circulant;

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

/// Parse a parity-check matrix file.
///
/// Dense form: first line `m n`, then `m` lines of `n` characters from
/// `{0, 1}`. Circulant shorthand: a single line `circ n: e1,e2,...`
/// meaning `sum_i Omega^(e_i)` with exponents reduced mod n. Blank lines
/// and `#` comments are ignored.
pub fn parse_matrix(text: &str) -> Result<BitMatrix> {
    let numbered: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let Some(&(first_no, first)) = numbered.first() else {
        return parse_err(1, "empty matrix file");
    };
    if let Some(rest) = first.strip_prefix("circ") {
        let rest = rest.trim();
        let (n_str, exps_str) = rest.split_once(':').ok_or(Error::Parse {
            line: first_no,
            msg: "circulant line must look like 'circ n: e1,e2,...'".into(),
        })?;
        let n: usize = n_str.trim().parse().map_err(|_| Error::Parse {
            line: first_no,
            msg: format!("bad circulant size '{}'", n_str.trim()),
        })?;
        if n == 0 {
            return parse_err(first_no, "circulant size must be positive");
        }
        let mut exps = Vec::new();
        for piece in exps_str.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let e: i64 = piece.parse().map_err(|_| Error::Parse {
                line: first_no,
                msg: format!("bad exponent '{piece}'"),
            })?;
            exps.push(e);
        }
        if numbered.len() > 1 {
            return parse_err(numbered[1].0, "unexpected content after circulant line");
        }
        return Ok(circulant(n, &exps));
    }
    let mut dims = first.split_whitespace();
    let (m, n): (usize, usize) = match (dims.next(), dims.next(), dims.next()) {
        (Some(m), Some(n), None) => {
            let m = m.parse().map_err(|_| Error::Parse {
                line: first_no,
                msg: format!("bad row count '{m}'"),
            })?;
            let n = n.parse().map_err(|_| Error::Parse {
                line: first_no,
                msg: format!("bad column count '{n}'"),
            })?;
            (m, n)
        }
        _ => return parse_err(first_no, "expected 'm n' header or 'circ n: ...'"),
    };
    if m == 0 || n == 0 {
        return parse_err(first_no, "matrix dimensions must be positive");
    }
    if numbered.len() != m + 1 {
        return parse_err(
            first_no,
            format!(
                "expected {m} rows after the header, found {}",
                numbered.len() - 1
            ),
        );
    }
    let mut rows = Vec::with_capacity(m);
    for &(line_no, line) in &numbered[1..] {
        if line.len() != n {
            return parse_err(
                line_no,
                format!("row has {} characters, expected {n}", line.len()),
            );
        }
        match crate::bits::BitVector::from_01(line) {
            Some(v) => rows.push(v),
            None => return parse_err(line_no, "rows must contain only '0' and '1'"),
        }
    }
    Ok(BitMatrix::from_rows(rows))
}

/// Serialize a matrix in the dense text form.
pub fn write_matrix(m: &BitMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(if m.get(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Parse a cyclic code spec:
///
/// ```text
/// n1 n2 n3
/// P1: e,e,...
/// P2: e,e,...
/// P3: e,e,...
/// ```
pub fn parse_cyclic_spec(text: &str) -> Result<CyclicSpec> {
    let numbered: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if numbered.len() != 4 {
        let line = numbered.last().map_or(1, |&(l, _)| l);
        return parse_err(line, "cyclic spec needs 4 lines: sizes then P1, P2, P3");
    }
    let (sizes_no, sizes_line) = numbered[0];
    let sizes: Vec<usize> = sizes_line
        .split_whitespace()
        .map(|s| {
            s.parse().map_err(|_| Error::Parse {
                line: sizes_no,
                msg: format!("bad size '{s}'"),
            })
        })
        .collect::<Result<_>>()?;
    if sizes.len() != 3 || sizes.contains(&0) {
        return parse_err(sizes_no, "first line must hold three positive sizes");
    }
    let mut exponents: [Vec<i64>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for (idx, &(line_no, line)) in numbered[1..].iter().enumerate() {
        let tag = format!("P{}", idx + 1);
        let rest = line
            .strip_prefix(&tag)
            .and_then(|r| r.trim_start().strip_prefix(':'));
        let Some(rest) = rest else {
            return parse_err(line_no, format!("expected '{tag}: e,e,...'"));
        };
        for piece in rest.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let e: i64 = piece.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad exponent '{piece}'"),
            })?;
            exponents[idx].push(e);
        }
        if exponents[idx].is_empty() {
            return parse_err(line_no, format!("{tag} has no exponents"));
        }
    }
    Ok(CyclicSpec::new((sizes[0], sizes[1], sizes[2]), exponents))
}

pub fn write_cyclic_spec(spec: &CyclicSpec) -> String {
    let fmt_exps = |v: &[i64]| {
        v.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!(
        "{} {} {}\nP1: {}\nP2: {}\nP3: {}\n",
        spec.moduli.0,
        spec.moduli.1,
        spec.moduli.2,
        fmt_exps(&spec.exponents[0]),
        fmt_exps(&spec.exponents[1]),
        fmt_exps(&spec.exponents[2]),
    )
}

/// MacKay alist serialization (1-based indices, zero-padded degree lists).
pub fn write_alist(m: &BitMatrix) -> String {
    let n = m.cols();
    let rows = m.rows();
    let col_deg: Vec<usize> = (0..n)
        .map(|j| (0..rows).filter(|&i| m.get(i, j)).count())
        .collect();
    let row_deg: Vec<usize> = (0..rows).map(|i| m.row(i).weight()).collect();
    let max_col = col_deg.iter().max().copied().unwrap_or(0);
    let max_row = row_deg.iter().max().copied().unwrap_or(0);
    let mut out = format!("{n} {rows}\n{max_col} {max_row}\n");
    out.push_str(
        &col_deg
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    out.push('\n');
    out.push_str(
        &row_deg
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    out.push('\n');
    for j in 0..n {
        let mut entries: Vec<String> = (0..rows)
            .filter(|&i| m.get(i, j))
            .map(|i| (i + 1).to_string())
            .collect();
        while entries.len() < max_col {
            entries.push("0".into());
        }
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    for i in 0..rows {
        let mut entries: Vec<String> = m.row(i).ones().map(|j| (j + 1).to_string()).collect();
        while entries.len() < max_row {
            entries.push("0".into());
        }
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    out
}
