//! Phased N-qubit Pauli algebra in the symplectic representation.
//!
//! An operator is stored as `i^phase * X^x Z^z` with `x`, `z` bit vectors
//! and `phase` an exponent of `i` modulo 4. The letter at a site follows
//! the convention `Y = i X Z`:
//!
//! | stored (x, z) | operator           |
//! |---------------|--------------------|
//! | (0, 0)        | identity           |
//! | (1, 0)        | X (sigma_1)        |
//! | (1, 1)        | i^-1 Y, i.e. X Z   |
//! | (0, 1)        | Z (sigma_3)        |
//!
//! so the plain letter Y at one site is `(x, z, phase) = (1, 1, 1)`.
//! Multiplication is `(x1,z1,p1) * (x2,z2,p2) =
//! (x1+x2, z1+z2, p1+p2+2*<z1,x2>)` where the cross term counts the Z-past-X
//! swaps. This reproduces `sigma_1 sigma_2 sigma_3 = i * 1`.

use crate::bits::BitVector;
use crate::error::{input_err, Error, Result};
use crate::matrix::Echelon;
use rand::Rng;
use std::fmt;

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    /// Phase exponent of the canonical single-letter operator in XZ form:
    /// Y = i·XZ carries exponent 1, the others 0.
    fn xz_phase(self) -> u8 {
        if self == Pauli::Y {
            1
        } else {
            0
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        };
        write!(f, "{c}")
    }
}

/// N-qubit Pauli operator with exact phase tracking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    x: BitVector,
    z: BitVector,
    phase: u8,
}

/// Result of testing an operator against a stabilizer group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Membership {
    /// Equal to a product of generators, including the phase.
    InGroup,
    /// Product of generators times -1.
    InGroupUpToSign,
    /// Not in the group even ignoring phases.
    NotInGroup,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            n,
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    /// Operator with the given letters, as the plain tensor product of the
    /// letters themselves (each Y contributing its i·XZ phase).
    pub fn from_letters(n: usize, letters: impl IntoIterator<Item = (usize, Pauli)>) -> Self {
        let mut op = PauliOperator::identity(n);
        for (site, letter) in letters {
            assert!(site < n, "site out of range");
            let (x, z) = letter.bits();
            assert!(
                !op.x.get(site) && !op.z.get(site),
                "duplicate site in from_letters"
            );
            op.x.set(site, x);
            op.z.set(site, z);
            op.phase = (op.phase + letter.xz_phase()) % 4;
        }
        op
    }

    pub fn from_parts(x: BitVector, z: BitVector, phase: u8) -> Self {
        assert_eq!(x.len(), z.len());
        PauliOperator {
            n: x.len(),
            x,
            z,
            phase: phase % 4,
        }
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let letters: Vec<(usize, Pauli)> = (0..n)
            .map(|q| {
                let letter = match rng.gen_range(0..4) {
                    0 => Pauli::I,
                    1 => Pauli::X,
                    2 => Pauli::Y,
                    _ => Pauli::Z,
                };
                (q, letter)
            })
            .collect();
        PauliOperator::from_letters(n, letters)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_part(&self) -> &BitVector {
        &self.x
    }

    pub fn z_part(&self) -> &BitVector {
        &self.z
    }

    /// Phase exponent of i, modulo 4.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn letter(&self, site: usize) -> Pauli {
        Pauli::from_bits(self.x.get(site), self.z.get(site))
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> usize {
        self.x.or(&self.z).weight()
    }

    pub fn support(&self) -> Vec<usize> {
        self.x.or(&self.z).ones().collect()
    }

    pub fn is_identity_support(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// The symplectic row `[x | z]` of length 2n.
    pub fn symplectic_row(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    /// Exact product `self * other`.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        if self.n != other.n {
            return input_err("multiply: operator sizes differ");
        }
        let cross = self.z.and(&other.x).weight() as u8; // Z moving past X
        Ok(PauliOperator {
            n: self.n,
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: (self.phase + other.phase + 2 * (cross % 2)) % 4,
        })
    }

    /// True when the operators commute; the symplectic inner product
    /// `<x1,z2> + <z1,x2>` is 0 exactly in that case.
    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        if self.n != other.n {
            return input_err("commutes: operator sizes differ");
        }
        Ok(!(self.x.dot(&other.z) ^ self.z.dot(&other.x)))
    }

    /// Phase exponent of the canonical Hermitian "+1" representative with
    /// this support: the plain tensor product of letters, i.e. i^{#Y}.
    pub fn canonical_plus_phase(&self) -> u8 {
        (self.x.and(&self.z).weight() % 4) as u8
    }

    /// Hermitian operators satisfy phase = #Y mod 2.
    pub fn is_hermitian(&self) -> bool {
        self.phase % 2 == self.canonical_plus_phase() % 2
    }

    /// Sign relative to the canonical Hermitian representative:
    /// `+1`, `-1`, or `None` for non-Hermitian phases.
    pub fn sign(&self) -> Option<i8> {
        let diff = (4 + self.phase - self.canonical_plus_phase()) % 4;
        match diff {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Same support, phase normalized to the canonical "+1" representative.
    pub fn normalized_plus(&self) -> PauliOperator {
        let mut op = self.clone();
        op.phase = op.canonical_plus_phase();
        op
    }

    /// Letters string like "XIZY" (small operators only).
    pub fn letters_string(&self) -> String {
        (0..self.n).map(|q| self.letter(q).to_string()).collect()
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i^{} ", self.phase)?;
        let mut wrote = false;
        for q in self.support() {
            if wrote {
                write!(f, ".")?;
            }
            write!(f, "{}{}", self.letter(q), q)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Pauli weight of `sigma_1^ax sigma_2^ay sigma_3^az` from the three support
/// tensors: half the sum of pairwise symmetric differences.
pub fn pauli_weight_identity(
    ax: &crate::tensor::Tensor3,
    ay: &crate::tensor::Tensor3,
    az: &crate::tensor::Tensor3,
) -> Result<usize> {
    if ax.shape() != ay.shape() || ax.shape() != az.shape() {
        return input_err("pauli_weight_identity: shapes differ");
    }
    let s = ax.add(ay).weight() + ax.add(az).weight() + ay.add(az).weight();
    debug_assert!(s.is_multiple_of(2));
    Ok(s / 2)
}

/// A group generated by commuting Pauli operators, with the GF(2) row space
/// of the symplectic rows cached for membership tests.
pub struct PauliGroup {
    n: usize,
    generators: Vec<PauliOperator>,
    echelon: Echelon,
}

impl PauliGroup {
    /// Build without verifying commutation.
    pub fn new(generators: Vec<PauliOperator>) -> Self {
        let n = generators.first().map_or(0, |g| g.n());
        assert!(generators.iter().all(|g| g.n() == n));
        let rows: Vec<BitVector> = generators.iter().map(|g| g.symplectic_row()).collect();
        let echelon = Echelon::new(rows.iter(), 2 * n, true);
        PauliGroup {
            n,
            generators,
            echelon,
        }
    }

    /// Build and verify that all generator pairs commute.
    pub fn new_checked(generators: Vec<PauliOperator>) -> Result<Self> {
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if !a.commutes(b)? {
                    return input_err("generators do not pairwise commute");
                }
            }
        }
        Ok(PauliGroup::new(generators))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Rank of the symplectic generator matrix, i.e. the number of
    /// independent generators modulo phases.
    pub fn symplectic_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Exact product of the generators selected by `word`, multiplied in
    /// ascending index order.
    pub fn product_of_word(&self, word: &BitVector) -> Result<PauliOperator> {
        let mut acc = PauliOperator::identity(self.n);
        for i in word.ones() {
            acc = acc.multiply(&self.generators[i])?;
        }
        Ok(acc)
    }

    /// Membership of `p` in the group.
    ///
    /// Solves the GF(2) system over the symplectic rows; when `respect_phase`
    /// is set and the support is reachable, the exact product of the solving
    /// word is compared against `p`'s phase.
    pub fn contains(&self, p: &PauliOperator, respect_phase: bool) -> Result<Membership> {
        if p.n() != self.n {
            return input_err("contains: size mismatch");
        }
        let (residual, word) = self.echelon.reduce(&p.symplectic_row());
        if !residual.is_zero() {
            return Ok(Membership::NotInGroup);
        }
        if !respect_phase {
            return Ok(Membership::InGroup);
        }
        let product = self.product_of_word(&word)?;
        debug_assert_eq!(product.x_part(), p.x_part());
        debug_assert_eq!(product.z_part(), p.z_part());
        match (4 + p.phase() - product.phase()) % 4 {
            0 => Ok(Membership::InGroup),
            2 => Ok(Membership::InGroupUpToSign),
            _ => Err(Error::Input(
                "phase-exact membership needs a Hermitian operator".into(),
            )),
        }
    }

    /// A basis of the relations: words over the generators whose symplectic
    /// rows cancel.
    pub fn relation_basis(&self) -> &[BitVector] {
        self.echelon.relations()
    }

    /// Does the group contain `-1`?
    ///
    /// Every relation word multiplies to an identity-support operator with
    /// phase 0 or 2; `-1` is in the group iff some relation has phase 2.
    /// Phases of relation products are additive for commuting Hermitian
    /// generators; this is re-verified on 200 random basis combinations and
    /// any discrepancy is a hard error.
    pub fn minus_one_in_group(&self) -> Result<bool> {
        let basis = self.echelon.relations();
        let mut phases = Vec::with_capacity(basis.len());
        for word in basis {
            let prod = self.product_of_word(word)?;
            if !prod.is_identity_support() {
                return Err(Error::Internal(
                    "relation word does not cancel supports".into(),
                ));
            }
            if prod.phase() % 2 != 0 {
                return Err(Error::Internal(
                    "relation product has an i phase; generators not Hermitian?".into(),
                ));
            }
            phases.push(prod.phase());
        }
        // Consistency: random combinations must have the additive phase.
        if !basis.is_empty() {
            let mut rng = crate::splitmix::SplitMix::new(0x5eed_c0de);
            for _ in 0..200 {
                let mut combined = BitVector::zeros(self.generators.len());
                let mut predicted: u8 = 0;
                for (word, &ph) in basis.iter().zip(&phases) {
                    if rng.next_bool() {
                        combined.xor_with(word);
                        predicted = (predicted + ph) % 4;
                    }
                }
                let prod = self.product_of_word(&combined)?;
                if !prod.is_identity_support() || prod.phase() != predicted {
                    return Err(Error::Internal(
                        "relation phases are not additive on a random combination".into(),
                    ));
                }
            }
        }
        Ok(phases.contains(&2))
    }

    /// Extract an independent generating set modulo phases, normalized to the
    /// Hermitian "+1" representatives, and report for each original generator
    /// the sign with which it lies in the group generated by that set.
    pub fn fix_signs(&self) -> Result<(Vec<PauliOperator>, Vec<i8>)> {
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                if !a.commutes(b)? {
                    return input_err("fix_signs requires commuting generators");
                }
            }
        }
        // Greedily keep generators whose symplectic rows extend the span,
        // reducing each row once against the pivots collected so far.
        let mut pivot_rows: Vec<BitVector> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut independent = Vec::new();
        for g in &self.generators {
            let mut row = g.symplectic_row();
            for (r, &c) in pivot_rows.iter().zip(&pivot_cols) {
                if row.get(c) {
                    row.xor_with(r);
                }
            }
            if let Some(lead) = row.first_one() {
                pivot_rows.push(row);
                pivot_cols.push(lead);
                independent.push(g.normalized_plus());
            }
        }
        let subgroup = PauliGroup::new(independent.clone());
        let mut signs = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            match subgroup.contains(&g.normalized_plus(), true)? {
                Membership::InGroup => {
                    // The normalized generator is a plain product; the sign of
                    // the original is its own sign relative to canonical.
                    signs.push(g.sign().ok_or_else(|| {
                        Error::Input("fix_signs: generator is not Hermitian".into())
                    })?);
                }
                Membership::InGroupUpToSign => {
                    let s = g.sign().ok_or_else(|| {
                        Error::Input("fix_signs: generator is not Hermitian".into())
                    })?;
                    signs.push(-s);
                }
                Membership::NotInGroup => {
                    return Err(Error::Internal(
                        "original generator escaped its own span".into(),
                    ))
                }
            }
        }
        Ok((independent, signs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::Tensor3;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn single(letter: Pauli) -> PauliOperator {
        PauliOperator::from_letters(1, [(0, letter)])
    }

    #[test]
    fn xz_product_is_minus_i_y() {
        // X·Z = (x=1, z=1, phase 0); Y = i XZ so XZ = -iY = i^0 XZ.
        let xz = single(Pauli::X).multiply(&single(Pauli::Z)).unwrap();
        assert_eq!((xz.x_part().get(0), xz.z_part().get(0)), (true, true));
        assert_eq!(xz.phase(), 0);
        // and Y itself is stored with phase 1
        assert_eq!(single(Pauli::Y).phase(), 1);
    }

    #[test]
    fn sigma1_sigma2_sigma3_is_i() {
        let p = single(Pauli::X)
            .multiply(&single(Pauli::Y))
            .unwrap()
            .multiply(&single(Pauli::Z))
            .unwrap();
        assert!(p.is_identity_support());
        assert_eq!(p.phase(), 1);
    }

    #[test]
    fn hermitian_squares_to_identity() {
        let mut rng = StdRng::seed_from_u64(53);
        for _ in 0..1000 {
            let p = PauliOperator::random(6, &mut rng);
            assert!(p.is_hermitian());
            let sq = p.multiply(&p).unwrap();
            assert!(sq.is_identity_support());
            assert_eq!(sq.phase(), 0);
        }
    }

    #[test]
    fn multiply_exhaustive_single_qubit_associative() {
        let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
        for &a in &letters {
            for &b in &letters {
                for &c in &letters {
                    let ab_c = single(a)
                        .multiply(&single(b))
                        .unwrap()
                        .multiply(&single(c))
                        .unwrap();
                    let a_bc = single(a)
                        .multiply(&single(b).multiply(&single(c)).unwrap())
                        .unwrap();
                    assert_eq!(ab_c, a_bc, "associativity for {a:?} {b:?} {c:?}");
                }
            }
        }
    }

    #[test]
    fn commutes_matches_phase_algebra() {
        let mut rng = StdRng::seed_from_u64(59);
        for _ in 0..500 {
            let p = PauliOperator::random(5, &mut rng);
            let q = PauliOperator::random(5, &mut rng);
            let pq = p.multiply(&q).unwrap();
            let qp = q.multiply(&p).unwrap();
            let anticommute = (4 + pq.phase() - qp.phase()) % 4 == 2;
            assert_eq!(p.commutes(&q).unwrap(), !anticommute);
        }
    }

    #[test]
    fn commutes_basics() {
        assert!(!single(Pauli::X).commutes(&single(Pauli::Z)).unwrap());
        let a = PauliOperator::from_letters(3, [(0, Pauli::X)]);
        let b = PauliOperator::from_letters(3, [(2, Pauli::Z)]);
        assert!(a.commutes(&b).unwrap());
    }

    #[test]
    fn group_contains_generators_and_products() {
        let mut rng = StdRng::seed_from_u64(61);
        // CSS-style group: X-type and Z-type rows on 6 qubits that commute.
        let g1 = PauliOperator::from_letters(6, [(0, Pauli::X), (1, Pauli::X)]);
        let g2 = PauliOperator::from_letters(6, [(2, Pauli::X), (3, Pauli::X)]);
        let g3 = PauliOperator::from_letters(
            6,
            [(0, Pauli::Z), (1, Pauli::Z), (2, Pauli::Z), (3, Pauli::Z)],
        );
        let group = PauliGroup::new_checked(vec![g1.clone(), g2.clone(), g3.clone()]).unwrap();

        for g in group.generators() {
            assert_eq!(group.contains(g, true).unwrap(), Membership::InGroup);
        }
        // product of two generators, phase respected (X-type only: no phase)
        let p = g1.multiply(&g2).unwrap();
        assert_eq!(group.contains(&p, true).unwrap(), Membership::InGroup);
        // -product is only in up to sign
        let minus_p = PauliOperator::from_parts(p.x_part().clone(), p.z_part().clone(), 2);
        assert_eq!(
            group.contains(&minus_p, true).unwrap(),
            Membership::InGroupUpToSign
        );
        // something outside
        let out = PauliOperator::from_letters(6, [(5, Pauli::Y)]);
        assert_eq!(group.contains(&out, true).unwrap(), Membership::NotInGroup);

        // random generator subsets stay in the group with exact phase
        for _ in 0..1000 {
            let word =
                BitVector::from_bools(&[rng.gen_bool(0.5), rng.gen_bool(0.5), rng.gen_bool(0.5)]);
            let prod = group.product_of_word(&word).unwrap();
            assert_eq!(group.contains(&prod, true).unwrap(), Membership::InGroup);
        }
    }

    #[test]
    fn minus_one_detection() {
        // CSS group: never contains -1.
        let g1 = PauliOperator::from_letters(2, [(0, Pauli::X), (1, Pauli::X)]);
        let g2 = PauliOperator::from_letters(2, [(0, Pauli::Z), (1, Pauli::Z)]);
        let group = PauliGroup::new(vec![g1, g2]);
        assert!(!group.minus_one_in_group().unwrap());

        // Explicit <-1>: identity support with phase 2, duplicated so the
        // relation basis sees it.
        let minus_one = PauliOperator::from_parts(BitVector::zeros(1), BitVector::zeros(1), 2);
        let group = PauliGroup::new(vec![minus_one]);
        assert!(group.minus_one_in_group().unwrap());
    }

    #[test]
    fn fix_signs_extracts_independent_set() {
        let g = PauliOperator::from_letters(4, [(0, Pauli::X), (1, Pauli::X)]);
        let h = PauliOperator::from_letters(4, [(2, Pauli::Z), (3, Pauli::Z)]);
        let gh = g.multiply(&h).unwrap();
        let group = PauliGroup::new(vec![g.clone(), h.clone(), gh]);
        let (independent, signs) = group.fix_signs().unwrap();
        assert_eq!(independent.len(), 2);
        assert_eq!(signs, vec![1, 1, 1]);

        // A generator handed in with a negative sign is reported as such.
        let minus_g = PauliOperator::from_parts(g.x_part().clone(), g.z_part().clone(), 2);
        let group = PauliGroup::new(vec![minus_g, h]);
        let (independent, signs) = group.fix_signs().unwrap();
        assert_eq!(independent.len(), 2);
        // the stored independent representative is re-normalized to +
        assert_eq!(independent[0].sign(), Some(1));
        assert_eq!(signs, vec![-1, 1]);
    }

    #[test]
    fn weight_identity_examples_and_oracle() {
        let shape = (4, 4, 4);
        let one_cell = Tensor3::from_cells(shape, [(0, 0, 0)]);
        let zero = Tensor3::zeros(shape);
        assert_eq!(pauli_weight_identity(&one_cell, &zero, &zero).unwrap(), 1);
        // equal supports give sigma1 sigma2 sigma3 ~ identity at each site
        assert_eq!(
            pauli_weight_identity(&one_cell, &one_cell, &one_cell).unwrap(),
            0
        );

        let mut rng = StdRng::seed_from_u64(67);
        for _ in 0..50 {
            let ax = Tensor3::random(shape, &mut rng);
            let ay = Tensor3::random(shape, &mut rng);
            let az = Tensor3::random(shape, &mut rng);
            // per-site case analysis oracle
            let mut expected = 0;
            for i in 0..4 {
                for j in 0..4 {
                    for k in 0..4 {
                        let (a, b, c) = (ax.get(i, j, k), ay.get(i, j, k), az.get(i, j, k));
                        let x = a ^ b;
                        let z = b ^ c;
                        if x || z {
                            expected += 1;
                        }
                    }
                }
            }
            assert_eq!(pauli_weight_identity(&ax, &ay, &az).unwrap(), expected);
            // set identity: |union| - |triple intersection|
            let union_minus_triple = {
                let mut count = 0;
                for i in 0..4 {
                    for j in 0..4 {
                        for k in 0..4 {
                            let (a, b, c) = (ax.get(i, j, k), ay.get(i, j, k), az.get(i, j, k));
                            if (a || b || c) && !(a && b && c) {
                                count += 1;
                            }
                        }
                    }
                }
                count
            };
            assert_eq!(
                pauli_weight_identity(&ax, &ay, &az).unwrap(),
                union_minus_triple
            );
        }
    }
}
