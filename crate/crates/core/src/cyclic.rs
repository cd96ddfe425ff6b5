//! Polynomial formalism for translation-invariant codes: elements of
//! `F2[x,y,z]/(x^n1 + 1, y^n2 + 1, z^n3 + 1)` represented by their support
//! tensor, circulant bridges to parity-check matrices, fractal operators,
//! the weight-3 cyclic 3D family, the Chamon low-weight logical
//! construction, and energy-barrier paths.

use crate::bits::BitVector;
use crate::error::{input_err, Error, Result};
use crate::matrix::BitMatrix;
use crate::pauli::{Membership, Pauli, PauliOperator};
use crate::tensor::Tensor3;
use crate::xyz::{chamon_matrix, circulant, Block, XYZCode};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn gcd3(a: usize, b: usize, c: usize) -> usize {
    gcd(gcd(a, b), c)
}

/// Element of `F2[x,y,z]/(x^n1+1, y^n2+1, z^n3+1)`; the support tensor holds
/// one bit per monomial, cell (i, j, k) <-> x^i y^j z^k. The weight of a
/// polynomial is its number of monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingPoly3 {
    moduli: (usize, usize, usize),
    support: Tensor3,
}

impl RingPoly3 {
    pub fn zero(moduli: (usize, usize, usize)) -> Self {
        RingPoly3 {
            moduli,
            support: Tensor3::zeros(moduli),
        }
    }

    pub fn one(moduli: (usize, usize, usize)) -> Self {
        RingPoly3::monomial(moduli, 0, 0, 0)
    }

    /// `x^i y^j z^k` with signed exponents reduced modulo the moduli.
    pub fn monomial(moduli: (usize, usize, usize), i: i64, j: i64, k: i64) -> Self {
        let mut t = Tensor3::zeros(moduli);
        t.set(
            i.rem_euclid(moduli.0 as i64) as usize,
            j.rem_euclid(moduli.1 as i64) as usize,
            k.rem_euclid(moduli.2 as i64) as usize,
            true,
        );
        RingPoly3 { moduli, support: t }
    }

    pub fn from_terms(moduli: (usize, usize, usize), terms: &[(i64, i64, i64)]) -> Self {
        let mut p = RingPoly3::zero(moduli);
        for &(i, j, k) in terms {
            p = p.add(&RingPoly3::monomial(moduli, i, j, k));
        }
        p
    }

    pub fn from_support(support: Tensor3) -> Self {
        RingPoly3 {
            moduli: support.shape(),
            support,
        }
    }

    pub fn moduli(&self) -> (usize, usize, usize) {
        self.moduli
    }

    pub fn support(&self) -> &Tensor3 {
        &self.support
    }

    pub fn weight(&self) -> usize {
        self.support.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    pub fn add(&self, other: &RingPoly3) -> RingPoly3 {
        assert_eq!(self.moduli, other.moduli, "ring moduli differ");
        RingPoly3 {
            moduli: self.moduli,
            support: self.support.add(&other.support),
        }
    }

    /// Exact product in the quotient ring: exponent-wise convolution with
    /// wraparound and GF(2) cancellation.
    pub fn mul(&self, other: &RingPoly3) -> Result<RingPoly3> {
        if self.moduli != other.moduli {
            return input_err("ring_mul: moduli mismatch");
        }
        let (n1, n2, n3) = self.moduli;
        let mut out = Tensor3::zeros(self.moduli);
        for (ai, aj, ak) in self.support.cells() {
            for (bi, bj, bk) in other.support.cells() {
                out.flip((ai + bi) % n1, (aj + bj) % n2, (ak + bk) % n3);
            }
        }
        Ok(RingPoly3 {
            moduli: self.moduli,
            support: out,
        })
    }

    /// Frobenius square: supports map to doubled exponents.
    pub fn square(&self) -> RingPoly3 {
        let (n1, n2, n3) = self.moduli;
        let mut out = Tensor3::zeros(self.moduli);
        for (i, j, k) in self.support.cells() {
            out.flip((2 * i) % n1, (2 * j) % n2, (2 * k) % n3);
        }
        RingPoly3 {
            moduli: self.moduli,
            support: out,
        }
    }

    pub fn pow(&self, e: usize) -> Result<RingPoly3> {
        let mut acc = RingPoly3::one(self.moduli);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.square();
            e >>= 1;
        }
        Ok(acc)
    }

    /// Substitute each variable by a power: v -> v^e, a weight-preserving
    /// remap when each e is coprime to its modulus.
    pub fn substitute(&self, ex: i64, ey: i64, ez: i64) -> RingPoly3 {
        let (n1, n2, n3) = self.moduli;
        let mut out = Tensor3::zeros(self.moduli);
        for (i, j, k) in self.support.cells() {
            out.flip(
                (i as i64 * ex).rem_euclid(n1 as i64) as usize,
                (j as i64 * ey).rem_euclid(n2 as i64) as usize,
                (k as i64 * ez).rem_euclid(n3 as i64) as usize,
            );
        }
        RingPoly3 {
            moduli: self.moduli,
            support: out,
        }
    }
}

/// The xy-plane polynomial `R = sum_{i<n1, j<n2} x^i y^j` (z-degree 0).
pub fn plane_r(moduli: (usize, usize, usize)) -> RingPoly3 {
    let mut t = Tensor3::zeros(moduli);
    for i in 0..moduli.0 {
        for j in 0..moduli.1 {
            t.set(i, j, 0, true);
        }
    }
    RingPoly3::from_support(t)
}

/// Cyclic code specification: moduli and the three defining exponent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSpec {
    pub moduli: (usize, usize, usize),
    pub exponents: [Vec<i64>; 3],
}

impl CyclicSpec {
    pub fn new(moduli: (usize, usize, usize), exponents: [Vec<i64>; 3]) -> Self {
        CyclicSpec { moduli, exponents }
    }

    /// The weight-3 symmetric family `P_i = 1 + v + v^{-1}`.
    pub fn xyz3d(n1: usize, n2: usize, n3: usize) -> Self {
        CyclicSpec {
            moduli: (n1, n2, n3),
            exponents: [vec![0, 1, -1], vec![0, 1, -1], vec![0, 1, -1]],
        }
    }

    /// The Chamon family `P_i = 1 + v`.
    pub fn chamon(n1: usize, n2: usize, n3: usize) -> Self {
        CyclicSpec {
            moduli: (n1, n2, n3),
            exponents: [vec![0, 1], vec![0, 1], vec![0, 1]],
        }
    }

    pub fn matrix(&self, axis: usize) -> BitMatrix {
        let n = [self.moduli.0, self.moduli.1, self.moduli.2][axis];
        circulant(n, &self.exponents[axis])
    }

    pub fn build_code(&self) -> Result<XYZCode> {
        XYZCode::build(self.matrix(0), self.matrix(1), self.matrix(2))
    }

    /// `P_i` as an element of the full quotient ring, in variable `axis`.
    pub fn p_poly(&self, axis: usize) -> RingPoly3 {
        let terms: Vec<(i64, i64, i64)> = self.exponents[axis]
            .iter()
            .map(|&e| match axis {
                0 => (e, 0, 0),
                1 => (0, e, 0),
                _ => (0, 0, e),
            })
            .collect();
        RingPoly3::from_terms(self.moduli, &terms)
    }

    /// `Q_i = (1 + P_i)^2`.
    pub fn q_poly(&self, axis: usize) -> RingPoly3 {
        self.p_poly(axis).add(&RingPoly3::one(self.moduli)).square()
    }
}

/// Exponents of a circulant matrix, or `None` if it is not circulant.
pub fn circulant_exponents(m: &BitMatrix) -> Option<Vec<usize>> {
    if m.rows() != m.cols() || m.rows() == 0 {
        return None;
    }
    let n = m.rows();
    let exps: Vec<usize> = (0..n).filter(|&i| m.get(i, 0)).collect();
    let rebuilt = circulant(n, &exps.iter().map(|&e| e as i64).collect::<Vec<_>>());
    if &rebuilt == m {
        Some(exps)
    } else {
        None
    }
}

/// Matrix of multiplication by `g` on the 2-variable subring spanned by the
/// monomials with third exponent zero (columns and rows in row-major (i, j)
/// order).
fn mul_matrix_xy(g: &RingPoly3) -> BitMatrix {
    let (n1, n2, _) = g.moduli();
    let dim = n1 * n2;
    let mut cols = Vec::with_capacity(dim);
    for i in 0..n1 {
        for j in 0..n2 {
            let m = RingPoly3::monomial(g.moduli(), i as i64, j as i64, 0);
            let img = g.mul(&m).expect("same moduli");
            let mut col = BitVector::zeros(dim);
            for (ci, cj, ck) in img.support().cells() {
                debug_assert_eq!(ck, 0, "xy multiplication left the plane");
                col.set(ci * n2 + cj, true);
            }
            cols.push(col);
        }
    }
    BitMatrix::from_rows(cols).transpose()
}

/// A fractal operator and its image under multiplication by `Q_a + Q_b`.
#[derive(Clone, Debug)]
pub struct FractalReport {
    pub operator: RingPoly3,
    pub image: RingPoly3,
    pub image_weight: usize,
    pub image_weight_bound: usize,
}

/// `(Q_a + Q_b)^(2^p - 1)` on the axes pair, together with its image
/// `(Q_a + Q_b)^(2^p) = Q_a(v^(2^p)) + Q_b(w^(2^p))`, whose weight is at
/// most `|Q_a| + |Q_b|`.
pub fn fractal_operator(spec: &CyclicSpec, axes: (usize, usize), p: u32) -> Result<FractalReport> {
    if p == 0 {
        return input_err("fractal operator needs p >= 1");
    }
    if axes.0 == axes.1 || axes.0 > 2 || axes.1 > 2 {
        return input_err("axes pair must be two distinct axes in 0..3");
    }
    let qa = spec.q_poly(axes.0);
    let qb = spec.q_poly(axes.1);
    let base = qa.add(&qb);
    let bound = qa.weight() + qb.weight();
    let operator = base.pow((1usize << p) - 1)?;
    let image = base.mul(&operator)?;
    debug_assert_eq!(image, base.pow(1usize << p)?);
    Ok(FractalReport {
        image_weight: image.weight(),
        image_weight_bound: bound,
        operator,
        image,
    })
}

/// Kernel dimension of multiplication by `Q_a + Q_b` on the 2-variable ring
/// (third exponent fixed to zero). Equals 1 exactly when the map is "almost
/// bijective" with kernel {0, all-ones plane}.
pub fn phi_kernel_dimension(spec: &CyclicSpec, axes: (usize, usize)) -> Result<usize> {
    if axes != (0, 1) {
        return input_err("phi kernel currently defined on the (x, y) plane");
    }
    let g = spec.q_poly(0).add(&spec.q_poly(1));
    Ok(mul_matrix_xy(&g).kernel_dim())
}

/// Row-collapsing operator report.
#[derive(Clone, Debug)]
pub struct RowCollapse {
    pub p13: RingPoly3,
    pub image: RingPoly3,
    pub image_weight: usize,
    pub single_row: bool,
}

/// `P_13 = (Q_1 + Q_3)^(2^(n3-1) - 1) + 1`. Its image under multiplication
/// by `Q_1 + Q_3` collapses to `Q_1^(2^(n3-1)) + Q_1`, a single row of
/// x-monomials of weight at most n1 (using `2^(n3-1) = 1 mod n3`).
pub fn p13_row_collapser(spec: &CyclicSpec) -> Result<RowCollapse> {
    let n3 = spec.moduli.2;
    if n3.is_multiple_of(2) {
        return input_err("p13 row collapser needs odd n3");
    }
    if n3 > 63 {
        return input_err("p13 exponent 2^(n3-1) - 1 only fits for n3 <= 63");
    }
    let q1 = spec.q_poly(0);
    let q3 = spec.q_poly(2);
    let base = q1.add(&q3);
    // square-and-multiply costs only n3 - 1 squarings despite the huge
    // exponent, thanks to the Frobenius structure of the ring
    let exponent = (1usize << (n3 - 1)) - 1;
    let p13 = base.pow(exponent)?.add(&RingPoly3::one(spec.moduli));
    let image = base.mul(&p13)?;
    let single_row = image.support().cells().all(|(_, j, k)| j == 0 && k == 0);
    Ok(RowCollapse {
        image_weight: image.weight(),
        single_row,
        p13,
        image,
    })
}

/// Objective value `|(1+xy)(1+x/y) P| + |(1+xz)(1+x/z) P + R|` of the
/// weight-3 cyclic family after the halving change of variables.
pub fn dmin3d_objective(spec: &CyclicSpec, p: &RingPoly3) -> Result<usize> {
    let (n1, n2, n3) = spec.moduli;
    for (i, n) in [n1, n2, n3].iter().enumerate() {
        if n % 2 == 0 || n % 3 == 0 {
            return input_err(format!(
                "dmin3d objective needs odd moduli that are not multiples of 3; axis {i} has {n}"
            ));
        }
    }
    if gcd3(n1, n2, n3) != 1 || gcd(n1, n2) != 1 || gcd(n1, n3) != 1 || gcd(n2, n3) != 1 {
        return input_err("dmin3d objective needs pairwise coprime moduli");
    }
    if spec.exponents != [vec![0, 1, -1], vec![0, 1, -1], vec![0, 1, -1]] {
        return input_err("dmin3d objective is defined for the 1 + v + v^-1 family");
    }
    if p.moduli() != spec.moduli {
        return input_err("polynomial moduli do not match the spec");
    }
    let m = spec.moduli;
    let f_xy = RingPoly3::from_terms(m, &[(0, 0, 0), (1, 1, 0)])
        .mul(&RingPoly3::from_terms(m, &[(0, 0, 0), (1, -1, 0)]))?;
    let f_xz = RingPoly3::from_terms(m, &[(0, 0, 0), (1, 0, 1)])
        .mul(&RingPoly3::from_terms(m, &[(0, 0, 0), (1, 0, -1)]))?;
    let r = plane_r(m);
    Ok(f_xy.mul(p)?.weight() + f_xz.mul(p)?.add(&r).weight())
}

/// Closed-form dimension of the weight-3 cyclic 3D family:
/// `4 (gcd(n1, n2, n3) - 1) + 1` for odd moduli that are not multiples of 3.
pub fn xyz3d_closed_form_dimension(n1: usize, n2: usize, n3: usize) -> Result<usize> {
    for n in [n1, n2, n3] {
        if n % 2 == 0 {
            return input_err(format!("closed-form dimension needs odd sizes, got {n}"));
        }
        if n % 3 == 0 {
            return input_err(format!(
                "closed-form dimension needs sizes that are not multiples of 3, got {n}"
            ));
        }
    }
    Ok(4 * (gcd3(n1, n2, n3) - 1) + 1)
}

/// Report of the Chamon-family square-root logical construction.
#[derive(Clone, Debug)]
pub struct ChamonSqrtReport {
    /// Sizes in the order actually used (the y/z roles may be swapped to
    /// pick the larger progression step).
    pub sizes: (usize, usize, usize),
    pub swapped_yz: bool,
    pub m1: usize,
    pub w1: usize,
    pub q1: usize,
    /// Objective weight of the main construction P'.
    pub objective_prime: usize,
    /// Paper bound `2 q1 n3 + n2 (n1 - q1 w1)` for P'.
    pub bound: usize,
    /// Objective weight after the correction P'' (when one was found).
    pub objective_refined: Option<usize>,
    /// Best objective value achieved (min over 0, P', P' + P'').
    pub objective_best: usize,
    /// The minimizing polynomial, in the possibly-swapped ring.
    pub best_poly: RingPoly3,
    pub refinement_diagnostic: Option<String>,
    /// Pauli weight of the verified logical operator on the Chamon code,
    /// when verification ran.
    pub operator_weight: Option<usize>,
}

fn modular_solve(a: usize, b: usize, n: usize) -> Option<usize> {
    // smallest m with m*a = b mod n
    (0..n).find(|&m| (m * a) % n == b % n)
}

/// Objective `|(1 + x y^-1) P| + |(1 + x z^-1) P + R|` for the Chamon family.
fn chamon_objective(moduli: (usize, usize, usize), p: &RingPoly3) -> Result<usize> {
    let f_xy = RingPoly3::from_terms(moduli, &[(0, 0, 0), (1, -1, 0)]);
    let f_xz = RingPoly3::from_terms(moduli, &[(0, 0, 0), (1, 0, -1)]);
    let r = plane_r(moduli);
    Ok(f_xy.mul(p)?.weight() + f_xz.mul(p)?.add(&r).weight())
}

/// Geometric series `sum_{i<count} x^(step*i)` (in x only).
fn x_series(moduli: (usize, usize, usize), step: i64, count: usize) -> RingPoly3 {
    let terms: Vec<(i64, i64, i64)> = (0..count as i64).map(|i| (step * i, 0, 0)).collect();
    RingPoly3::from_terms(moduli, &terms)
}

/// The Chamon O(sqrt N) logical construction for pairwise coprime sizes:
/// builds P' (and the correction P'' when a valid (r, s) pair exists within
/// the search window), evaluates the objective exactly, and optionally
/// verifies the resulting operator on the actual code.
pub fn chamon_sqrt_logical(
    n1: usize,
    n2: usize,
    n3: usize,
    verify_on_code: bool,
) -> Result<ChamonSqrtReport> {
    if n1 < 2 || n2 < 2 || n3 < 2 {
        return input_err("sizes must be at least 2");
    }
    if gcd(n1, n2) != 1 || gcd(n1, n3) != 1 || gcd(n2, n3) != 1 {
        return input_err("sizes must be pairwise coprime");
    }

    // Pick the (y, z) role order giving the larger progression step w1;
    // either m1 or its modular inverse is Omega(sqrt n1).
    let candidates = [(n2, n3, false), (n3, n2, true)];
    let mut chosen: Option<(usize, usize, bool, usize, usize)> = None;
    for (b, c, swapped) in candidates {
        let m1 = modular_solve(b % n1, c % n1, n1)
            .ok_or_else(|| Error::Internal("coprime sizes admit a modular solution".into()))?;
        if m1 == 0 {
            continue;
        }
        let w1 = if 2 * m1 <= n1 { 2 * m1 } else { 2 * (n1 - m1) };
        if chosen.is_none_or(|(_, _, _, _, best_w1)| w1 > best_w1) {
            chosen = Some((b, c, swapped, m1, w1));
        }
    }
    let (b, c, swapped_yz, m1, w1) = chosen
        .ok_or_else(|| Error::Input("no usable progression (n1 divides both sizes?)".into()))?;
    let moduli = (n1, b, c);
    let q1 = n1 / w1;
    let bound = 2 * q1 * c + b * (n1 - q1 * w1);

    // P = (sum_{i<m1} x^{i n2}) (sum_j (x y^-1)^j) (sum_k (x z^-1)^k)
    let diag_y: Vec<(i64, i64, i64)> = (0..b as i64).map(|j| (j, -j, 0)).collect();
    let diag_z: Vec<(i64, i64, i64)> = (0..c as i64).map(|k| (k, 0, -k)).collect();
    let p_core = x_series(moduli, b as i64, m1)
        .mul(&RingPoly3::from_terms(moduli, &diag_y))?
        .mul(&RingPoly3::from_terms(moduli, &diag_z))?;
    let p_prime = x_series(moduli, 2 * m1 as i64 * b as i64, q1).mul(&p_core)?;
    let objective_prime = chamon_objective(moduli, &p_prime)?;

    // Correction P'': cover the leftover arithmetic progression of length
    // L = n1 - q1 w1 with (r, s) satisfying s m1 = r mod n1, s small.
    let leftover = n1 - q1 * w1;
    let mut objective_refined = None;
    let mut best_poly = p_prime.clone();
    let mut refinement_diagnostic = None;
    if leftover > 0 {
        let s_max = 4 * (c as f64).sqrt().ceil() as usize + 4;
        let mut best: Option<(usize, RingPoly3)> = None;
        for s in 1..=s_max.min(n1.saturating_sub(1)) {
            let r = (s * m1) % n1;
            if r == 0 || r > leftover {
                continue;
            }
            let p_dd = RingPoly3::monomial(moduli, (2 * m1 * q1 * b) as i64, 0, 0)
                .mul(&x_series(moduli, b as i64, r))?
                .mul(&x_series(moduli, c as i64, s))?
                .mul(&RingPoly3::from_terms(moduli, &diag_y))?
                .mul(&RingPoly3::from_terms(moduli, &diag_z))?;
            let candidate = p_prime.add(&p_dd);
            let obj = chamon_objective(moduli, &candidate)?;
            if best.as_ref().is_none_or(|(w, _)| obj < *w) {
                best = Some((obj, candidate));
            }
        }
        match best {
            Some((obj, poly)) => {
                objective_refined = Some(obj);
                if obj < objective_prime {
                    best_poly = poly;
                }
            }
            None => {
                refinement_diagnostic = Some(format!(
                    "no (r, s) with s m1 = r mod n1, r <= {leftover}, s <= {s_max}"
                ));
            }
        }
    }

    let trivial = chamon_objective(moduli, &RingPoly3::zero(moduli))?;
    debug_assert_eq!(trivial, n1 * b);
    let objective_best = objective_prime
        .min(objective_refined.unwrap_or(usize::MAX))
        .min(trivial);
    if trivial <= objective_prime.min(objective_refined.unwrap_or(usize::MAX)) {
        best_poly = RingPoly3::zero(moduli);
    }

    let mut report = ChamonSqrtReport {
        sizes: moduli,
        swapped_yz,
        m1,
        w1,
        q1,
        objective_prime,
        bound,
        objective_refined,
        objective_best,
        best_poly,
        refinement_diagnostic,
        operator_weight: None,
    };

    if verify_on_code {
        report.operator_weight = Some(verify_chamon_logical(&report)?);
    }
    Ok(report)
}

/// Build the actual Pauli operator behind a Chamon construction report and
/// verify it is a zero-syndrome non-stabilizer logical; returns its weight.
///
/// The operator is the four-slice Z-type logical (one z = 0 plane of
/// sigma_3 per block, or sigma_2 planes when the y/z roles were swapped)
/// multiplied by the stabilizer element with S = T = U = V = M.
pub fn verify_chamon_logical(report: &ChamonSqrtReport) -> Result<usize> {
    let (a, b, c) = report.sizes;
    // The code is built in the same (possibly swapped) order, which is the
    // same code up to qubit relabeling.
    let code = XYZCode::build(chamon_matrix(a), chamon_matrix(b), chamon_matrix(c))?;
    let m_tensor = report.best_poly.support().clone();
    let stab = code.stabilizer_element(&m_tensor, &m_tensor, &m_tensor, &m_tensor)?;
    // Four-slice base logical: a z = 0 plane of sigma_3 in every block.
    let mut base = PauliOperator::identity(code.n_qubits());
    for block in Block::ALL {
        let plane = Tensor3::plane(code.block_shape(block), 2, 0)?;
        base = base.multiply(&code.block_operator(block, Pauli::Z, &plane)?)?;
    }
    let op = stab.multiply(&base)?;
    if !code.syndrome(&op)?.is_zero() {
        return Err(Error::Internal(
            "constructed Chamon logical has nonzero syndrome".into(),
        ));
    }
    if code.group().contains(&op, false)? != Membership::NotInGroup {
        return Err(Error::Internal(
            "constructed Chamon logical is a stabilizer element".into(),
        ));
    }
    Ok(op.weight())
}

/// One step of an energy-barrier path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarrierStep {
    pub step: usize,
    pub syndrome_weight: usize,
    pub flipped_qubits: usize,
}

/// Energy-barrier path report.
#[derive(Clone, Debug)]
pub struct BarrierReport {
    pub path_len: usize,
    pub steps: Vec<BarrierStep>,
    pub max_syndrome_weight: usize,
    pub endpoint_is_two_slice_logical: bool,
    pub endpoint_is_nonstabilizer: bool,
}

/// Walk the error path `E(k) = sum_{l<k} (x_A y_A)^l + (x_D y_D)^l` for a
/// cyclic code whose first two polynomials are identical, flipping one
/// A-cell and one D-cell per step, and record the exact syndrome weight at
/// every step. The endpoint is the two-slice sigma_3 logical.
pub fn energy_barrier_path(spec: &CyclicSpec) -> Result<BarrierReport> {
    let (n1, n2, _n3) = spec.moduli;
    if gcd(n1, n2) != 1 {
        return input_err("energy barrier path needs coprime n1, n2");
    }
    if spec.exponents[0] != spec.exponents[1] {
        return input_err("energy barrier path needs identical first two polynomials");
    }
    let code = spec.build_code()?;
    let path_len = n1 * n2;
    let n = code.n_qubits();
    let x = BitVector::zeros(n);
    let mut z = BitVector::zeros(n);
    let mut steps = Vec::with_capacity(path_len + 1);
    steps.push(BarrierStep {
        step: 0,
        syndrome_weight: 0,
        flipped_qubits: 0,
    });
    for k in 0..path_len {
        let (i, j) = (k % n1, k % n2);
        let qa = code.qubit_index(Block::A, i, j, 0);
        let qd = code.qubit_index(Block::D, i, j, 0);
        z.flip(qa);
        z.flip(qd);
        let op = PauliOperator::from_parts(x.clone(), z.clone(), 0);
        steps.push(BarrierStep {
            step: k + 1,
            syndrome_weight: code.syndrome(&op)?.weight(),
            flipped_qubits: 2,
        });
    }
    let endpoint = PauliOperator::from_parts(x, z, 0);
    let mut expected = PauliOperator::identity(n);
    for block in [Block::A, Block::D] {
        let plane = Tensor3::plane(code.block_shape(block), 2, 0)?;
        expected = expected.multiply(&code.block_operator(block, Pauli::Z, &plane)?)?;
    }
    let endpoint_is_two_slice_logical = endpoint.x_part() == expected.x_part()
        && endpoint.z_part() == expected.z_part()
        && code.syndrome(&endpoint)?.is_zero();
    let endpoint_is_nonstabilizer =
        code.group().contains(&endpoint, false)? == Membership::NotInGroup;
    let max_syndrome_weight = steps.iter().map(|s| s.syndrome_weight).max().unwrap_or(0);
    Ok(BarrierReport {
        path_len,
        steps,
        max_syndrome_weight,
        endpoint_is_two_slice_logical,
        endpoint_is_nonstabilizer,
    })
}
