//! Minimum-distance machinery: exact weight-capped logical search, the
//! slice-representative lower bound, the equal-pair diagonal logical, the
//! decoupled combinatorial objective d* with its sandwich bound, the
//! tightness construction, permutation invariance, and the non-expanding
//! error family.

use crate::bits::BitVector;
use crate::error::{input_err, Error, Result};
use crate::matrix::BitMatrix;
use crate::pauli::{Membership, Pauli, PauliOperator};
use crate::tensor::Tensor3;
use crate::xyz::{in_t, Block, XYZCode};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

/// Outcome of a weight-capped logical search.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub cap: usize,
    pub budget: u64,
    pub supports_examined: u64,
    /// Exact minimum distance, when a logical was found with all smaller
    /// weights exhausted.
    pub exact_d: Option<usize>,
    pub best_logical: Option<PauliOperator>,
    /// Every weight up to this value was fully searched.
    pub completed_cap: usize,
    pub budget_exhausted: bool,
    /// d is at least this (completed_cap + 1 when nothing was found).
    pub lower_bound: usize,
    /// Weight of the best logical found, if any.
    pub upper_bound: Option<usize>,
}

/// Precomputed structures for repeated searches on one code.
pub struct DistanceSearch<'a> {
    code: &'a XYZCode,
    /// Per qubit: (generator id, 2-bit coefficient) with bit 0 the
    /// coefficient of the x-unknown (the generator's z bit) and bit 1 the
    /// coefficient of the z-unknown (the generator's x bit).
    adjacency: Vec<Vec<(u32, u32)>>,
}

const MAX_CAP: usize = 12;

impl<'a> DistanceSearch<'a> {
    pub fn new(code: &'a XYZCode) -> Self {
        let n = code.n_qubits();
        let mut adjacency = vec![Vec::new(); n];
        for (g, gen) in code.generators().iter().enumerate() {
            for q in gen.support() {
                let coeff = (gen.z_part().get(q) as u32) | ((gen.x_part().get(q) as u32) << 1);
                adjacency[q].push((g as u32, coeff));
            }
        }
        DistanceSearch { code, adjacency }
    }

    /// Enumerate all Pauli operators of weight up to `cap` (ascending weight,
    /// supports in lexicographic order, letters ordered X < Y < Z), keep the
    /// zero-syndrome ones outside the stabilizer group, and report the
    /// minimum-weight logical. The reported minimum is exact whenever every
    /// smaller weight class was exhausted. `budget` caps the number of
    /// candidate supports.
    pub fn capped(&self, cap: usize, budget: u64) -> Result<SearchOutcome> {
        if cap == 0 {
            return input_err("distance search needs cap >= 1");
        }
        if cap > MAX_CAP {
            return input_err(format!("cap {cap} exceeds the supported maximum {MAX_CAP}"));
        }
        let n = self.code.n_qubits();
        let mut outcome = SearchOutcome {
            cap,
            budget,
            supports_examined: 0,
            exact_d: None,
            best_logical: None,
            completed_cap: 0,
            budget_exhausted: false,
            lower_bound: 1,
            upper_bound: None,
        };
        for w in 1..=cap.min(n) {
            let planned = binomial(n as u64, w as u64);
            if outcome.supports_examined.saturating_add(planned) > budget {
                outcome.budget_exhausted = true;
                break;
            }
            let found = self.scan_weight(w)?;
            outcome.supports_examined += planned;
            outcome.completed_cap = w;
            if let Some(op) = found {
                outcome.exact_d = Some(w);
                outcome.upper_bound = Some(w);
                outcome.best_logical = Some(op);
                break;
            }
        }
        outcome.lower_bound = match outcome.exact_d {
            Some(d) => d,
            None => outcome.completed_cap + 1,
        };
        Ok(outcome)
    }

    /// Scan one weight class; returns the lexicographically first minimal
    /// logical (by support, then letter ranks) if any exists.
    fn scan_weight(&self, w: usize) -> Result<Option<PauliOperator>> {
        let n = self.code.n_qubits();
        let results: Vec<Option<Candidate>> = (0..n)
            .into_par_iter()
            .map(|q0| self.scan_prefix(q0, w))
            .collect();
        let best = results.into_iter().flatten().min();
        match best {
            Some(c) => {
                let op = self.materialize(&c)?;
                Ok(Some(op))
            }
            None => Ok(None),
        }
    }

    fn scan_prefix(&self, q0: usize, w: usize) -> Option<Candidate> {
        let n = self.code.n_qubits();
        if n - q0 < w {
            return None;
        }
        let mut support = Vec::with_capacity(w);
        support.push(q0);
        let merged: Vec<(u32, u32)> = self.adjacency[q0].clone();
        let mut best: Option<Candidate> = None;
        if w == 1 {
            let mut leaf = MergeIter::new(&merged, &[], 0);
            if let Some(c) = self.solve_leaf(&support, &mut leaf) {
                best = Some(c);
            }
        } else {
            self.recurse(&mut support, &merged, w, &mut best);
        }
        best
    }

    fn recurse(
        &self,
        support: &mut Vec<usize>,
        merged: &[(u32, u32)],
        w: usize,
        best: &mut Option<Candidate>,
    ) {
        let depth = support.len();
        if depth == w {
            return; // handled at the leaf level below
        }
        let n = self.code.n_qubits();
        let last = *support.last().unwrap();
        let remaining = w - depth;
        for q in last + 1..=n - remaining {
            support.push(q);
            if depth + 1 == w {
                // leaf: merge on the fly into the eliminator
                let shift = 2 * depth as u32;
                let mut leaf = MergeIter::new(merged, &self.adjacency[q], shift);
                if let Some(c) = self.solve_leaf(support, &mut leaf) {
                    if best.as_ref().is_none_or(|b| c < *b) {
                        *best = Some(c);
                    }
                }
            } else {
                let shift = 2 * depth as u32;
                let next = merge_lists(merged, &self.adjacency[q], shift);
                self.recurse(support, &next, w, best);
            }
            support.pop();
        }
    }

    /// Solve the per-support GF(2) system for letter assignments with zero
    /// syndrome; among the valid full-weight assignments that are not in the
    /// stabilizer group, return the smallest by letter rank.
    fn solve_leaf(&self, support: &[usize], rows: &mut MergeIter) -> Option<Candidate> {
        let w = support.len();
        let nbits = 2 * w;
        let mut pivots = [0u32; 2 * MAX_CAP];
        let mut pivot_mask: u32 = 0;
        let mut rank = 0usize;
        while let Some(mask) = rows.next() {
            let mut r = mask;
            while r != 0 {
                let low = r.trailing_zeros() as usize;
                if pivot_mask >> low & 1 == 1 {
                    r ^= pivots[low];
                } else {
                    pivots[low] = r;
                    pivot_mask |= 1 << low;
                    rank += 1;
                    break;
                }
            }
            if rank == nbits {
                return None;
            }
        }
        if rank == nbits {
            return None;
        }
        // kernel basis by back-substitution over the triangular pivots
        let free: Vec<usize> = (0..nbits).filter(|b| pivot_mask >> b & 1 == 0).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v: u32 = 1 << f;
            for p in (0..nbits).rev() {
                if pivot_mask >> p & 1 == 1 {
                    let row = pivots[p];
                    if ((row & v) & !(1u32 << p)).count_ones() % 2 == 1 {
                        v |= 1 << p;
                    }
                }
            }
            basis.push(v);
        }
        let mut best: Option<Candidate> = None;
        for combo in 1u32..(1 << basis.len()) {
            let mut v = 0u32;
            for (b, &vec) in basis.iter().enumerate() {
                if combo >> b & 1 == 1 {
                    v ^= vec;
                }
            }
            // all sites must be non-identity for an exact-weight candidate
            let mut ok = true;
            for s in 0..w {
                if v >> (2 * s) & 3 == 0 {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let cand = Candidate {
                support: support.to_vec(),
                letter_bits: v,
            };
            if best.as_ref().is_none_or(|b| cand < *b) && self.is_logical(&cand) {
                best = Some(cand);
            }
        }
        best
    }

    fn candidate_operator(&self, c: &Candidate) -> PauliOperator {
        let n = self.code.n_qubits();
        let mut x = BitVector::zeros(n);
        let mut z = BitVector::zeros(n);
        for (s, &q) in c.support.iter().enumerate() {
            let bits = c.letter_bits >> (2 * s) & 3;
            if bits & 1 == 1 {
                x.set(q, true);
            }
            if bits & 2 == 2 {
                z.set(q, true);
            }
        }
        let mut op = PauliOperator::from_parts(x, z, 0);
        op = op.normalized_plus();
        op
    }

    fn is_logical(&self, c: &Candidate) -> bool {
        let op = self.candidate_operator(c);
        debug_assert!(self
            .code
            .syndrome(&op)
            .map(|s| s.is_zero())
            .unwrap_or(false));
        matches!(
            self.code.group().contains(&op, false),
            Ok(Membership::NotInGroup)
        )
    }

    fn materialize(&self, c: &Candidate) -> Result<PauliOperator> {
        let op = self.candidate_operator(c);
        if !self.code.syndrome(&op)?.is_zero() {
            return Err(Error::Internal(
                "candidate logical has nonzero syndrome".into(),
            ));
        }
        Ok(op)
    }
}

/// A candidate logical: support plus per-slot (x, z) bits. The ordering is
/// the normative lexicographic one: supports first, then letter ranks in
/// X < Y < Z order per slot.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Candidate {
    support: Vec<usize>,
    letter_bits: u32,
}

impl Candidate {
    fn letter_ranks(&self) -> Vec<u8> {
        (0..self.support.len())
            .map(|s| match self.letter_bits >> (2 * s) & 3 {
                1 => 0, // X
                3 => 1, // Y
                2 => 2, // Z
                _ => 3, // identity, never ranked
            })
            .collect()
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.support
            .cmp(&other.support)
            .then_with(|| self.letter_ranks().cmp(&other.letter_ranks()))
    }
}

/// Streaming merge of the prefix list with one shifted adjacency list,
/// OR-ing coefficient masks of equal generator ids.
struct MergeIter<'a> {
    prefix: &'a [(u32, u32)],
    rest: &'a [(u32, u32)],
    shift: u32,
}

impl<'a> MergeIter<'a> {
    fn new(prefix: &'a [(u32, u32)], rest: &'a [(u32, u32)], shift: u32) -> Self {
        MergeIter {
            prefix,
            rest,
            shift,
        }
    }

    fn next(&mut self) -> Option<u32> {
        match (self.prefix.first(), self.rest.first()) {
            (None, None) => None,
            (Some(&(_, m)), None) => {
                self.prefix = &self.prefix[1..];
                Some(m)
            }
            (None, Some(&(_, m))) => {
                self.rest = &self.rest[1..];
                Some(m << self.shift)
            }
            (Some(&(ga, ma)), Some(&(gb, mb))) => {
                if ga < gb {
                    self.prefix = &self.prefix[1..];
                    Some(ma)
                } else if gb < ga {
                    self.rest = &self.rest[1..];
                    Some(mb << self.shift)
                } else {
                    self.prefix = &self.prefix[1..];
                    self.rest = &self.rest[1..];
                    Some(ma | (mb << self.shift))
                }
            }
        }
    }
}

fn merge_lists(prefix: &[(u32, u32)], adj: &[(u32, u32)], shift: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(prefix.len() + adj.len());
    let (mut i, mut j) = (0, 0);
    while i < prefix.len() || j < adj.len() {
        if j >= adj.len() || (i < prefix.len() && prefix[i].0 < adj[j].0) {
            out.push(prefix[i]);
            i += 1;
        } else if i >= prefix.len() || adj[j].0 < prefix[i].0 {
            out.push((adj[j].0, adj[j].1 << shift));
            j += 1;
        } else {
            out.push((prefix[i].0, prefix[i].1 | (adj[j].1 << shift)));
            i += 1;
            j += 1;
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Convenience wrapper building the search structures once.
pub fn distance_capped(code: &XYZCode, cap: usize, budget: u64) -> Result<SearchOutcome> {
    DistanceSearch::new(code).capped(cap, budget)
}

/// Certified lower bound from the translated slice representatives: each of
/// the three logical families has `2 n_axis` pairwise disjoint zero-syndrome
/// representatives, so any logical error must weigh at least `2 min n_i`.
pub fn disjoint_representative_bound(code: &XYZCode) -> Result<usize> {
    let t = in_t(code.h(0), code.h(1), code.h(2))?;
    if !t.is_member {
        return input_err(format!(
            "disjoint representatives need a T triple: {}",
            t.diagnostic.unwrap_or_default()
        ));
    }
    let dims = code.n_dims();
    for axis in 0..3 {
        let mut family = Vec::new();
        for variant in 0..2 {
            for idx in 0..dims[axis] {
                let rep = code.slice_logical_pair(axis, variant, idx)?;
                if !code.syndrome(&rep)?.is_zero() {
                    return Err(Error::Internal(format!(
                        "representative (axis {axis}, variant {variant}, index {idx}) has nonzero syndrome"
                    )));
                }
                if code.group().contains(&rep, false)? != Membership::NotInGroup {
                    return Err(Error::Internal(
                        "slice representative is a stabilizer element".into(),
                    ));
                }
                family.push(rep);
            }
        }
        // pairwise disjoint supports within the family
        let mut seen = BitVector::zeros(code.n_qubits());
        for rep in &family {
            let sup = rep.x_part().or(rep.z_part());
            if !seen.and(&sup).is_zero() {
                return Err(Error::Internal(
                    "slice representatives are not pairwise disjoint".into(),
                ));
            }
            seen.xor_with(&sup);
        }
    }
    Ok(2 * dims.iter().min().copied().unwrap_or(0))
}

/// The diagonal sigma_3 logical available whenever H1 == H2 (square):
/// support on cells (i, i, 0) of blocks A and D, weight 2n, zero syndrome,
/// anticommuting with the sigma_1 and sigma_2 slice operators.
pub fn equal_pair_logical(code: &XYZCode) -> Result<PauliOperator> {
    if code.h(0) != code.h(1) {
        return input_err("equal_pair_logical requires H1 == H2");
    }
    if code.h(0).rows() != code.h(0).cols() {
        return input_err("equal_pair_logical requires square H1 == H2");
    }
    let n = code.h(0).rows();
    let mut letters = Vec::with_capacity(2 * n);
    for i in 0..n {
        letters.push((code.qubit_index(Block::A, i, i, 0), Pauli::Z));
        letters.push((code.qubit_index(Block::D, i, i, 0), Pauli::Z));
    }
    let op = PauliOperator::from_letters(code.n_qubits(), letters);
    if !code.syndrome(&op)?.is_zero() {
        return Err(Error::Internal(
            "equal-pair diagonal operator has nonzero syndrome".into(),
        ));
    }
    Ok(op)
}

/// Strategy for the decoupled minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DstarStrategy {
    /// Full enumeration of all M tensors; exact. Requires n1*n2*n3 <= 24.
    Exhaustive,
    /// Seeded single-bit-flip descent with restarts; upper bound only.
    Greedy { restarts: u32, seed: u64 },
}

/// Result of the decoupled combinatorial minimum.
#[derive(Clone, Debug)]
pub struct DstarReport {
    /// The minimized value (exact for the exhaustive strategy, an upper
    /// bound for greedy).
    pub value: usize,
    pub exact: bool,
    pub witness: Tensor3,
    /// Axis roles (i, j, k): axis k carries the reference plane.
    pub permutation: [usize; 3],
    pub strategy: DstarStrategy,
}

fn dstar_preconditions(h: &[&BitMatrix; 3]) -> Result<()> {
    for (i, m) in h.iter().enumerate() {
        if m.rows() != m.cols() || *m != &m.transpose() {
            return input_err(format!(
                "d* needs symmetric square matrices; H{} is not",
                i + 1
            ));
        }
    }
    let t = in_t(h[0], h[1], h[2])?;
    if !t.is_member {
        return input_err(format!(
            "d* is defined for T triples: {}",
            t.diagnostic.unwrap_or_default()
        ));
    }
    Ok(())
}

/// Objective terms for a fixed M: returns twice the objective value so the
/// halved pair term stays integral.
fn dstar_objective_doubled(sq_m: &[Tensor3; 3], planes: &[Tensor3; 3], perm: [usize; 3]) -> usize {
    let [i, j, k] = perm;
    let t1 = sq_m[i].add(&sq_m[k]).add(&planes[k]).weight();
    let t2 = sq_m[j].add(&sq_m[k]).add(&planes[k]).weight();
    let t3 = sq_m[i].add(&sq_m[j]).weight();
    2 * t1 + 2 * t2 + t3
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Minimize `|(Hi^2+Hk^2)M + R_k| + |(Hj^2+Hk^2)M + R_k| + |(Hi^2+Hj^2)M|/2`
/// over binary tensors M and the six axis-role permutations. The reference
/// plane `R_k` is the index-0 slice orthogonal to axis k.
pub fn dstar(h: &[&BitMatrix; 3], strategy: DstarStrategy) -> Result<DstarReport> {
    dstar_preconditions(h)?;
    let dims = [h[0].rows(), h[1].rows(), h[2].rows()];
    let shape = (dims[0], dims[1], dims[2]);
    let volume = dims[0] * dims[1] * dims[2];
    let squares: Vec<BitMatrix> = h.iter().map(|m| m.mat_mul(m)).collect();
    let planes = [
        Tensor3::plane(shape, 0, 0)?,
        Tensor3::plane(shape, 1, 0)?,
        Tensor3::plane(shape, 2, 0)?,
    ];

    let evaluate = |m: &Tensor3| -> Result<(usize, [usize; 3])> {
        let sq_m = [
            m.apply_axis(&squares[0], 0)?,
            m.apply_axis(&squares[1], 1)?,
            m.apply_axis(&squares[2], 2)?,
        ];
        let mut best = (usize::MAX, [0, 1, 2]);
        for perm in PERMS {
            let doubled = dstar_objective_doubled(&sq_m, &planes, perm);
            if !doubled.is_multiple_of(2) {
                return Err(Error::Internal(
                    "pair term is odd; matrices violate the T-triple parity".into(),
                ));
            }
            let val = doubled / 2;
            if val < best.0 {
                best = (val, perm);
            }
        }
        Ok(best)
    };

    match strategy {
        DstarStrategy::Exhaustive => {
            if volume > 24 {
                return Err(Error::Budget(format!(
                    "exhaustive d* needs n1*n2*n3 <= 24, got {volume}"
                )));
            }
            let mut best_val = usize::MAX;
            let mut best_m = Tensor3::zeros(shape);
            let mut best_perm = [0, 1, 2];
            for bits in 0u64..(1u64 << volume) {
                let mut m = Tensor3::zeros(shape);
                for idx in 0..volume {
                    if bits >> idx & 1 == 1 {
                        let (i, j, k) = m.coords(idx);
                        m.set(i, j, k, true);
                    }
                }
                let (val, perm) = evaluate(&m)?;
                if val < best_val {
                    best_val = val;
                    best_m = m;
                    best_perm = perm;
                }
            }
            Ok(DstarReport {
                value: best_val,
                exact: true,
                witness: best_m,
                permutation: best_perm,
                strategy,
            })
        }
        DstarStrategy::Greedy { restarts, seed } => {
            let mut rng = StdRng::seed_from_u64(seed);
            let mut best_val = usize::MAX;
            let mut best_m = Tensor3::zeros(shape);
            let mut best_perm = [0, 1, 2];
            for _ in 0..restarts.max(1) {
                let mut m = Tensor3::random(shape, &mut rng);
                let (mut cur, mut cur_perm) = evaluate(&m)?;
                loop {
                    let mut improved = false;
                    for idx in 0..volume {
                        let (i, j, k) = m.coords(idx);
                        m.flip(i, j, k);
                        let (val, perm) = evaluate(&m)?;
                        if val < cur {
                            cur = val;
                            cur_perm = perm;
                            improved = true;
                        } else {
                            m.flip(i, j, k);
                        }
                    }
                    if !improved {
                        break;
                    }
                }
                if cur < best_val {
                    best_val = cur;
                    best_m = m;
                    best_perm = cur_perm;
                }
            }
            // M = 0 is always a candidate: value 2|R| for the best k.
            let (zero_val, zero_perm) = evaluate(&Tensor3::zeros(shape))?;
            if zero_val < best_val {
                best_val = zero_val;
                best_m = Tensor3::zeros(shape);
                best_perm = zero_perm;
            }
            Ok(DstarReport {
                value: best_val,
                exact: false,
                witness: best_m,
                permutation: best_perm,
                strategy,
            })
        }
    }
}

/// Check the sandwich `d*/w <= d <= (3/2) w d*` with integer arithmetic,
/// where `w` is the maximum row weight of the three matrices.
pub fn sandwich_holds(dstar_value: usize, d: usize, w: usize) -> bool {
    // d*/w <= d  <=>  d* <= d w ; d <= 3/2 w d*  <=>  2 d <= 3 w d*
    dstar_value <= d * w && 2 * d <= 3 * w * dstar_value
}

/// Max row weight over the three parity-check matrices.
pub fn max_row_weight(h: &[&BitMatrix; 3]) -> usize {
    h.iter()
        .flat_map(|m| (0..m.rows()).map(move |i| m.row(i).weight()))
        .max()
        .unwrap_or(0)
}

/// The tightness construction: from a tensor M build the stabilizer choice
/// (S, T, U, V) = (xyM, x^2 M, yzM, xzM), multiply by the sigma_3 two-slice
/// base, and bound the resulting weight.
#[derive(Clone, Debug)]
pub struct TightnessReport {
    pub operator: PauliOperator,
    pub weight: usize,
    /// `(w/2)(3|(x^2+y^2)M| + 3|(x^2+z^2)M + R| + |(y^2+z^2)M + R|)` holds as
    /// `2*weight <= w * (3 a + 3 b + c)`.
    pub bound_terms: (usize, usize, usize),
    pub bound_holds: bool,
    pub c_block_weight: usize,
}

pub fn tightness_logical(code: &XYZCode, m: &Tensor3) -> Result<TightnessReport> {
    let h: [&BitMatrix; 3] = [code.h(0), code.h(1), code.h(2)];
    dstar_preconditions(&h)?;
    let shape = (h[0].rows(), h[1].rows(), h[2].rows());
    if m.shape() != shape {
        return input_err("tightness tensor must have the code's full shape");
    }
    let apply = |mat: &BitMatrix, axis: usize, t: &Tensor3| t.apply_axis(mat, axis);
    let s = apply(h[0], 0, &apply(h[1], 1, m)?)?;
    let t = apply(h[0], 0, &apply(h[0], 0, m)?)?;
    let u = apply(h[1], 1, &apply(h[2], 2, m)?)?;
    let v = apply(h[0], 0, &apply(h[2], 2, m)?)?;
    let stab = code.stabilizer_element(&s, &t, &u, &v)?;
    // sigma_3 base: z = 0 planes on A and D
    let mut base = PauliOperator::identity(code.n_qubits());
    for block in [Block::A, Block::D] {
        let plane = Tensor3::plane(code.block_shape(block), 2, 0)?;
        base = base.multiply(&code.block_operator(block, Pauli::Z, &plane)?)?;
    }
    let op = stab.multiply(&base)?;
    if !code.syndrome(&op)?.is_zero() {
        return Err(Error::Internal(
            "tightness operator has nonzero syndrome".into(),
        ));
    }
    let c_block_weight = op
        .support()
        .iter()
        .filter(|&&q| {
            let (b, _, _, _) = code.qubit_coords(q);
            b == Block::C
        })
        .count();
    let sq: Vec<BitMatrix> = h.iter().map(|x| x.mat_mul(x)).collect();
    let r = Tensor3::plane(shape, 2, 0)?;
    let a_term = m
        .apply_axis(&sq[0], 0)?
        .add(&m.apply_axis(&sq[1], 1)?)
        .weight();
    let b_term = m
        .apply_axis(&sq[0], 0)?
        .add(&m.apply_axis(&sq[2], 2)?)
        .add(&r)
        .weight();
    let c_term = m
        .apply_axis(&sq[1], 1)?
        .add(&m.apply_axis(&sq[2], 2)?)
        .add(&r)
        .weight();
    let w = max_row_weight(&h);
    let bound_holds = 2 * op.weight() <= w * (3 * a_term + 3 * b_term + c_term);
    Ok(TightnessReport {
        weight: op.weight(),
        operator: op,
        bound_terms: (a_term, b_term, c_term),
        bound_holds,
        c_block_weight,
    })
}

/// Row/column permutations for the invariance check.
#[derive(Clone, Debug)]
pub struct PermutationTriple {
    /// Permutation image maps; the matrices are built as `pi * H * tau`
    /// with `P |j> = |map(j)>`.
    pub pi: [Vec<usize>; 3],
    pub tau: [Vec<usize>; 3],
}

impl PermutationTriple {
    pub fn random(dims: [usize; 3], rng: &mut impl Rng) -> Self {
        let mut perm = |n: usize| -> Vec<usize> {
            let mut v: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.gen_range(0..=i);
                v.swap(i, j);
            }
            v
        };
        PermutationTriple {
            pi: [perm(dims[0]), perm(dims[1]), perm(dims[2])],
            tau: [perm(dims[0]), perm(dims[1]), perm(dims[2])],
        }
    }

    fn matrix(map: &[usize]) -> BitMatrix {
        // permutation matrix P with P |j> = |map[j]>
        BitMatrix::from_fn(map.len(), map.len(), |i, j| map[j] == i)
    }

    pub fn apply(&self, h: &[&BitMatrix; 3]) -> [BitMatrix; 3] {
        let mut out = Vec::new();
        for axis in 0..3 {
            let p = Self::matrix(&self.pi[axis]);
            let t = Self::matrix(&self.tau[axis]);
            out.push(p.mat_mul(h[axis]).mat_mul(&t));
        }
        [out.remove(0), out.remove(0), out.remove(0)]
    }
}

/// Capped-search minima on the base triple and a permuted triple, plus the
/// explicit logical remap check.
#[derive(Clone, Debug)]
pub struct PermInvarianceOutcome {
    pub base: SearchOutcome,
    pub permuted: SearchOutcome,
    pub minima_match: bool,
    pub remap_verified: bool,
}

/// Permutation invariance: the capped-search minimum of Q(H1, H2, H3) equals
/// that of Q(pi1 H1 tau1, pi2 H2 tau2, pi3 H3 tau3); additionally the found
/// base logical is remapped block-wise onto the permuted code and
/// re-verified there with equal weight.
pub fn permutation_invariance_check(
    h: &[&BitMatrix; 3],
    perms: &PermutationTriple,
    cap: usize,
    budget: u64,
) -> Result<PermInvarianceOutcome> {
    let t = in_t(h[0], h[1], h[2])?;
    if !t.is_member {
        return input_err(format!(
            "permutation invariance needs a T triple: {}",
            t.diagnostic.unwrap_or_default()
        ));
    }
    let base_code = XYZCode::build(h[0].clone(), h[1].clone(), h[2].clone())?;
    let permuted_h = perms.apply(h);
    let permuted_t = in_t(&permuted_h[0], &permuted_h[1], &permuted_h[2])?;
    if !permuted_t.is_member {
        return Err(Error::Internal(
            "permuted triple escaped the T family".into(),
        ));
    }
    let permuted_code = XYZCode::build(
        permuted_h[0].clone(),
        permuted_h[1].clone(),
        permuted_h[2].clone(),
    )?;
    let base = distance_capped(&base_code, cap, budget)?;
    let permuted = distance_capped(&permuted_code, cap, budget)?;
    let minima_match =
        base.exact_d == permuted.exact_d && base.completed_cap == permuted.completed_cap;

    // Remap a found base logical onto the permuted code and re-verify.
    let mut remap_verified = true;
    if let Some(logical) = &base.best_logical {
        let remapped = remap_logical(&base_code, &permuted_code, perms, logical)?;
        remap_verified = permuted_code.syndrome(&remapped)?.is_zero()
            && remapped.weight() == logical.weight()
            && permuted_code.group().contains(&remapped, false)? == Membership::NotInGroup;
    }
    Ok(PermInvarianceOutcome {
        base,
        permuted,
        minima_match,
        remap_verified,
    })
}

/// Block-wise coordinate remap sending logicals of the base code to
/// logicals of the permuted code with equal weight.
fn remap_logical(
    base: &XYZCode,
    permuted: &XYZCode,
    perms: &PermutationTriple,
    op: &PauliOperator,
) -> Result<PauliOperator> {
    let pi: Vec<BitMatrix> = perms
        .pi
        .iter()
        .map(|p| PermutationTriple::matrix(p))
        .collect();
    let tau_t: Vec<BitMatrix> = perms
        .tau
        .iter()
        .map(|t| PermutationTriple::matrix(t).transpose())
        .collect();
    // per-block axis operators
    let block_ops: [[&BitMatrix; 3]; 4] = [
        [&tau_t[0], &tau_t[1], &tau_t[2]], // A
        [&tau_t[0], &pi[1], &pi[2]],       // B
        [&pi[0], &tau_t[1], &pi[2]],       // C
        [&pi[0], &pi[1], &tau_t[2]],       // D
    ];
    let mut x = BitVector::zeros(permuted.n_qubits());
    let mut z = BitVector::zeros(permuted.n_qubits());
    for block in Block::ALL {
        let shape = base.block_shape(block);
        let mut xs = Tensor3::zeros(shape);
        let mut zs = Tensor3::zeros(shape);
        for q in op.support() {
            let (b, i, j, k) = base.qubit_coords(q);
            if b == block {
                if op.x_part().get(q) {
                    xs.set(i, j, k, true);
                }
                if op.z_part().get(q) {
                    zs.set(i, j, k, true);
                }
            }
        }
        let ops = block_ops[block.index()];
        for (tensor, target) in [(xs, &mut x), (zs, &mut z)] {
            let moved = tensor
                .apply_axis(ops[0], 0)?
                .apply_axis(ops[1], 1)?
                .apply_axis(ops[2], 2)?;
            for (i, j, k) in moved.cells() {
                target.set(permuted.qubit_index(block, i, j, k), true);
            }
        }
    }
    Ok(PauliOperator::from_parts(x, z, 0))
}

/// The non-expanding error family on two horizontal slices: the S-side
/// syndrome cancels exactly and the T-side collapses to a closed form
/// supported on few rows and columns.
#[derive(Clone, Debug)]
pub struct NonexpandingReport {
    pub p: BitMatrix,
    pub q: BitMatrix,
    pub s_block: BitMatrix,
    pub t_block: BitMatrix,
    pub t_closed_form: BitMatrix,
    pub s_is_zero: bool,
    pub t_matches_closed_form: bool,
    pub error_weight: usize,
    pub syndrome_weight: usize,
}

/// Build `P = H1^T (sum_l (H1 H1^T)^l X (H2 H2^T)^(k-l-1)) H2` and
/// `Q = (H1 H1^T) (same sum)`; then `S = H1 P + Q H2` vanishes exactly and
/// `T = P H2^T + H1^T Q = H1^T (X (H2 H2^T)^k + (H1 H1^T)^k X)`.
pub fn nonexpanding_error(
    h1: &BitMatrix,
    h2: &BitMatrix,
    x: &BitMatrix,
    k: usize,
) -> Result<NonexpandingReport> {
    if x.rows() != h1.rows() || x.cols() != h2.rows() {
        return input_err(format!("seed matrix must be {} x {}", h1.rows(), h2.rows()));
    }
    let a = h1.mat_mul(&h1.transpose()); // m1 x m1
    let b = h2.mat_mul(&h2.transpose()); // m2 x m2
    let mut sum = BitMatrix::zeros(h1.rows(), h2.rows());
    for l in 0..k {
        let term = a.pow(l).mat_mul(x).mat_mul(&b.pow(k - l - 1));
        sum = sum.add(&term);
    }
    let p = h1.transpose().mat_mul(&sum).mat_mul(h2);
    let q = a.mat_mul(&sum);
    let s_block = h1.mat_mul(&p).add(&q.mat_mul(h2));
    let t_block = p.mat_mul(&h2.transpose()).add(&h1.transpose().mat_mul(&q));
    let t_closed_form = h1
        .transpose()
        .mat_mul(&x.mat_mul(&b.pow(k)).add(&a.pow(k).mat_mul(x)));
    let s_is_zero = s_block.is_zero();
    let t_matches = t_block == t_closed_form;
    let error_weight = (0..p.rows()).map(|i| p.row(i).weight()).sum::<usize>()
        + (0..q.rows()).map(|i| q.row(i).weight()).sum::<usize>();
    let syndrome_weight = (0..s_block.rows())
        .map(|i| s_block.row(i).weight())
        .sum::<usize>()
        + (0..t_block.rows())
            .map(|i| t_block.row(i).weight())
            .sum::<usize>();
    Ok(NonexpandingReport {
        p,
        q,
        s_block,
        t_block,
        t_closed_form,
        s_is_zero,
        t_matches_closed_form: t_matches,
        error_weight,
        syndrome_weight,
    })
}
