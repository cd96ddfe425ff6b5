use crate::bits::BitVector;
use crate::error::{input_err, Result};
use rand::Rng;
use std::fmt;

/// Dense bit-packed matrix over GF(2), stored row-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVector>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Build from `0`/`1` strings, one per row.
    pub fn from_01(rows: &[&str]) -> Self {
        BitMatrix::from_rows(
            rows.iter()
                .map(|s| BitVector::from_01(s).expect("rows must be 0/1 strings"))
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.data[i].set(j, true);
                }
            }
        }
        m
    }

    pub fn random(rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.data[i].ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        BitMatrix::from_rows(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.xor(b))
                .collect(),
        )
    }

    /// Matrix product over GF(2).
    pub fn mat_mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must match");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.data[i].ones() {
                out.data[i].xor_with(&other.data[k]);
            }
        }
        out
    }

    /// Matrix-vector product `self * x`.
    pub fn mul_vec(&self, x: &BitVector) -> BitVector {
        assert_eq!(self.cols, x.len(), "vector length must match columns");
        BitVector::from_bools(&self.data.iter().map(|r| r.dot(x)).collect::<Vec<_>>())
    }

    /// `self^k` for square matrices.
    pub fn pow(&self, k: usize) -> BitMatrix {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc = BitMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mat_mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.data.clone();
        rows.extend(other.data.iter().cloned());
        BitMatrix::from_rows(rows)
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows);
        BitMatrix::from_rows(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.concat(b))
                .collect(),
        )
    }

    /// Rank over GF(2) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        Echelon::new(self.data.iter(), self.cols, false).rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of the right kernel `{x : self * x = 0}`.
    ///
    /// Basis size is always `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let ech = Echelon::new(self.data.iter(), self.cols, false);
        let mut pivot_of_col = vec![usize::MAX; self.cols];
        for (r, &c) in ech.pivots.iter().enumerate() {
            pivot_of_col[c] = r;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free] != usize::MAX {
                continue;
            }
            let mut v = BitVector::zeros(self.cols);
            v.set(free, true);
            // Back-substitute: pivot rows are fully reduced, so each pivot
            // variable is determined by the free column alone.
            for (r, &pc) in ech.pivots.iter().enumerate() {
                if ech.rows[r].get(free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Dimension of the right kernel.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Some solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>> {
        if b.len() != self.rows {
            return input_err(format!(
                "solve: rhs length {} does not match {} rows",
                b.len(),
                self.rows
            ));
        }
        // Eliminate the augmented matrix [self | b].
        let augmented: Vec<BitVector> = (0..self.rows)
            .map(|i| {
                let mut bit = BitVector::zeros(1);
                bit.set(0, b.get(i));
                self.data[i].concat(&bit)
            })
            .collect();
        let ech = Echelon::new(augmented.iter(), self.cols + 1, false);
        // Inconsistent iff some pivot lands in the augmented column.
        if ech.pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVector::zeros(self.cols);
        for (r, &pc) in ech.pivots.iter().enumerate() {
            if ech.rows[r].get(self.cols) {
                x.set(pc, true);
            }
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form of a set of GF(2) rows, kept around for repeated
/// membership tests and solves against the same row space.
///
/// When `track_combos` is set, each stored row carries the combination of
/// input rows that produced it, and input rows that reduced to zero are
/// reported as relations.
pub struct Echelon {
    width: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    combos: Vec<BitVector>,
    relations: Vec<BitVector>,
    n_inputs: usize,
}

impl Echelon {
    pub fn new<'a>(
        inputs: impl Iterator<Item = &'a BitVector>,
        width: usize,
        track_combos: bool,
    ) -> Self {
        let inputs: Vec<&BitVector> = inputs.collect();
        let n_inputs = inputs.len();
        let mut ech = Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            relations: Vec::new(),
            n_inputs,
        };
        for (idx, row) in inputs.into_iter().enumerate() {
            assert_eq!(row.len(), width);
            let combo = if track_combos {
                BitVector::from_ones(n_inputs, [idx])
            } else {
                BitVector::zeros(0)
            };
            ech.insert(row.clone(), combo, track_combos);
        }
        ech
    }

    // Invariant: stored rows are fully reduced, i.e. no stored row has a bit
    // in another stored row's pivot column, and pivots stay sorted.
    fn insert(&mut self, mut row: BitVector, mut combo: BitVector, track: bool) {
        for i in 0..self.rows.len() {
            if row.get(self.pivots[i]) {
                row.xor_with(&self.rows[i]);
                if track {
                    combo.xor_with(&self.combos[i]);
                }
            }
        }
        let Some(lead) = row.first_one() else {
            if track {
                self.relations.push(combo);
            }
            return;
        };
        let pos = self.pivots.binary_search(&lead).unwrap_err();
        for r in 0..self.rows.len() {
            if self.rows[r].get(lead) {
                self.rows[r].xor_with(&row);
                if track {
                    self.combos[r].xor_with(&combo);
                }
            }
        }
        self.rows.insert(pos, row);
        self.pivots.insert(pos, lead);
        if track {
            self.combos.insert(pos, combo);
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after reduction, plus the input-row combination that
    /// was subtracted (empty vector when combos are not tracked).
    pub fn reduce(&self, v: &BitVector) -> (BitVector, BitVector) {
        assert_eq!(v.len(), self.width);
        let mut r = v.clone();
        let mut combo = BitVector::zeros(self.n_inputs);
        for i in 0..self.rows.len() {
            if r.get(self.pivots[i]) {
                r.xor_with(&self.rows[i]);
                if !self.combos.is_empty() {
                    combo.xor_with(&self.combos[i]);
                }
            }
        }
        (r, combo)
    }

    /// Is `v` in the row space?
    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Input-row combinations that vanish, i.e. a basis of the left kernel.
    pub fn relations(&self) -> &[BitVector] {
        &self.relations
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    /// Independent dense row-reduction oracle over Vec<Vec<u8>>.
    fn rank_oracle(m: &BitMatrix) -> usize {
        let mut a: Vec<Vec<u8>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j) as u8).collect())
            .collect();
        let (rows, cols) = (m.rows(), m.cols());
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..rows).find(|&r| a[r][c] == 1) {
                a.swap(rank, p);
                for r in 0..rows {
                    if r != rank && a[r][c] == 1 {
                        for j in 0..cols {
                            a[r][j] ^= a[rank][j];
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn rank_identity_and_duplicates() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::from_01(&["11", "11"]).rank(), 1);
    }

    #[test]
    fn rank_matches_independent_oracle() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let m = BitMatrix::random(6, 8, &mut rng);
            assert_eq!(m.rank(), rank_oracle(&m));
        }
    }

    #[test]
    fn kernel_identity_is_empty() {
        assert!(BitMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        assert_eq!(BitMatrix::zeros(2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn kernel_example_by_brute_force() {
        // Spec fixture: [[1,1,0],[0,1,1]] has kernel spanned by (1,1,1),
        // confirmed by scanning all 8 vectors.
        let m = BitMatrix::from_01(&["110", "011"]);
        let mut kernel_members = Vec::new();
        for bits in 0u8..8 {
            let v = BitVector::from_bools(&[bits & 1 != 0, bits & 2 != 0, bits & 4 != 0]);
            if m.mul_vec(&v).is_zero() && !v.is_zero() {
                kernel_members.push(v);
            }
        }
        assert_eq!(kernel_members, vec![BitVector::from_ones(3, [0, 1, 2])]);
        assert_eq!(m.kernel_basis(), kernel_members);
    }

    #[test]
    fn kernel_vectors_annihilate_and_count() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let m = BitMatrix::random(5, 9, &mut rng);
            let basis = m.kernel_basis();
            assert_eq!(basis.len(), m.cols() - m.rank());
            for v in &basis {
                assert!(m.mul_vec(v).is_zero());
            }
        }
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = BitMatrix::identity(4);
        let b = BitVector::from_ones(4, [1, 3]);
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));

        let zero = BitMatrix::zeros(3, 3);
        assert_eq!(zero.solve(&BitVector::from_ones(3, [0])).unwrap(), None);

        assert!(id.solve(&BitVector::zeros(3)).is_err());
    }

    #[test]
    fn solve_random_consistent_systems() {
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..50 {
            let m = BitMatrix::random(6, 9, &mut rng);
            let x = BitVector::from_bools(&(0..9).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            let b = m.mul_vec(&x);
            let sol = m.solve(&b).unwrap().expect("consistent by construction");
            assert!(m.mul_vec(&sol).xor(&b).is_zero());
        }
    }

    #[test]
    fn echelon_tracks_relations() {
        // Rows: r0, r1, r0+r1 -> one relation (1,1,1).
        let r0 = BitVector::from_ones(4, [0, 1]);
        let r1 = BitVector::from_ones(4, [2]);
        let r2 = r0.xor(&r1);
        let ech = Echelon::new([r0, r1, r2].iter(), 4, true);
        assert_eq!(ech.rank(), 2);
        assert_eq!(ech.relations().len(), 1);
        assert_eq!(ech.relations()[0], BitVector::from_ones(3, [0, 1, 2]));
    }

    #[test]
    fn echelon_reduce_reports_combination() {
        let mut rng = StdRng::seed_from_u64(17);
        let m = BitMatrix::random(6, 10, &mut rng);
        let ech = Echelon::new(m.data.iter(), 10, true);
        // A random combination of rows must reduce to zero with the right combo.
        for _ in 0..20 {
            let word: Vec<usize> = (0..6).filter(|_| rng.gen_bool(0.5)).collect();
            let mut v = BitVector::zeros(10);
            for &i in &word {
                v.xor_with(m.row(i));
            }
            let (residual, combo) = ech.reduce(&v);
            assert!(residual.is_zero());
            // Re-apply the reported combo; it must reproduce v.
            let mut back = BitVector::zeros(10);
            for i in combo.ones() {
                back.xor_with(m.row(i));
            }
            assert_eq!(back, v);
        }
    }
}
