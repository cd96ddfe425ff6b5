//! The XYZ product code: three parity-check matrices H1 (m1 x n1),
//! H2 (m2 x n2), H3 (m3 x n3) produce a non-CSS stabilizer code on four
//! blocks of qubits indexed by 3-tensors
//!
//! ```text
//!   A : n1 x n2 x n3      B : n1 x m2 x m3
//!   C : m1 x n2 x m3      D : m1 x m2 x n3
//! ```
//!
//! with checks indexed by
//!
//! ```text
//!   S : m1 x n2 x n3      T : n1 x m2 x n3
//!   U : n1 x n2 x m3      V : m1 x m2 x m3
//! ```
//!
//! Each check acts along the x-, y- and z-directions with sigma_1, sigma_2
//! and sigma_3 respectively; the block shapes force the routing
//!
//! ```text
//!   S: sigma_1 on A via H1^T, sigma_3 on C via H3, sigma_2 on D via H2
//!   T: sigma_2 on A via H2^T, sigma_3 on B via H3, sigma_1 on D via H1
//!   U: sigma_3 on A via H3^T, sigma_2 on B via H2, sigma_1 on C via H1
//!   V: sigma_1 on B via H1^T, sigma_2 on C via H2^T, sigma_3 on D via H3^T
//! ```
//!
//! Qubits are numbered block A first, then B, C, D, each in row-major
//! order; the same order applies to checks (S, T, U, V). Both orders are
//! normative for serialized operators, syndromes and witnesses.

use crate::bits::BitVector;
use crate::error::{input_err, Result};
use crate::matrix::BitMatrix;
use crate::pauli::{Pauli, PauliGroup, PauliOperator};
use crate::tensor::Tensor3;
use std::fmt;

/// Qubit block label.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Block {
    A,
    B,
    C,
    D,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::A, Block::B, Block::C, Block::D];

    pub fn index(self) -> usize {
        match self {
            Block::A => 0,
            Block::B => 1,
            Block::C => 2,
            Block::D => 3,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Check block label.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Check {
    S,
    T,
    U,
    V,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::S, Check::T, Check::U, Check::V];

    pub fn index(self) -> usize {
        match self {
            Check::S => 0,
            Check::T => 1,
            Check::U => 2,
            Check::V => 3,
        }
    }
}

/// Syndrome of an error, one tensor per check block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Syndrome {
    pub s: Tensor3,
    pub t: Tensor3,
    pub u: Tensor3,
    pub v: Tensor3,
}

impl Syndrome {
    pub fn weight(&self) -> usize {
        self.s.weight() + self.t.weight() + self.u.weight() + self.v.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.t.is_zero() && self.u.is_zero() && self.v.is_zero()
    }
}

/// Verdict of the dimension-1 membership test, with the first failing
/// condition as a diagnostic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TMembership {
    pub is_member: bool,
    pub diagnostic: Option<String>,
}

/// An XYZ product code with its generators materialized.
pub struct XYZCode {
    h: [BitMatrix; 3],
    n_dims: [usize; 3],
    m_dims: [usize; 3],
    block_shapes: [(usize, usize, usize); 4],
    check_shapes: [(usize, usize, usize); 4],
    qubit_offsets: [usize; 4],
    check_offsets: [usize; 4],
    n_qubits: usize,
    group: PauliGroup,
}

impl XYZCode {
    pub fn build(h1: BitMatrix, h2: BitMatrix, h3: BitMatrix) -> Result<XYZCode> {
        if h1.rows() == 0
            || h1.cols() == 0
            || h2.rows() == 0
            || h2.cols() == 0
            || h3.rows() == 0
            || h3.cols() == 0
        {
            return input_err("parity-check matrices must be nonempty");
        }
        let (m1, n1) = (h1.rows(), h1.cols());
        let (m2, n2) = (h2.rows(), h2.cols());
        let (m3, n3) = (h3.rows(), h3.cols());
        let block_shapes = [
            (n1, n2, n3), // A
            (n1, m2, m3), // B
            (m1, n2, m3), // C
            (m1, m2, n3), // D
        ];
        let check_shapes = [
            (m1, n2, n3), // S
            (n1, m2, n3), // T
            (n1, n2, m3), // U
            (m1, m2, m3), // V
        ];
        let vol = |s: (usize, usize, usize)| s.0 * s.1 * s.2;
        let mut qubit_offsets = [0; 4];
        for b in 1..4 {
            qubit_offsets[b] = qubit_offsets[b - 1] + vol(block_shapes[b - 1]);
        }
        let n_qubits = qubit_offsets[3] + vol(block_shapes[3]);
        let mut check_offsets = [0; 4];
        for c in 1..4 {
            check_offsets[c] = check_offsets[c - 1] + vol(check_shapes[c - 1]);
        }

        let mut shell = XYZCode {
            h: [h1, h2, h3],
            n_dims: [n1, n2, n3],
            m_dims: [m1, m2, m3],
            block_shapes,
            check_shapes,
            qubit_offsets,
            check_offsets,
            n_qubits,
            group: PauliGroup::new(Vec::new()),
        };
        let mut generators = Vec::with_capacity(shell.n_checks());
        for check in Check::ALL {
            let (ci, cj, ck) = shell.check_shapes[check.index()];
            for i in 0..ci {
                for j in 0..cj {
                    for k in 0..ck {
                        generators.push(shell.generator_at(check, i, j, k));
                    }
                }
            }
        }
        shell.group = PauliGroup::new(generators);
        Ok(shell)
    }

    pub fn h(&self, axis: usize) -> &BitMatrix {
        &self.h[axis]
    }

    pub fn n_dims(&self) -> [usize; 3] {
        self.n_dims
    }

    pub fn m_dims(&self) -> [usize; 3] {
        self.m_dims
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_checks(&self) -> usize {
        let vol = |s: (usize, usize, usize)| s.0 * s.1 * s.2;
        self.check_shapes.iter().map(|&s| vol(s)).sum()
    }

    pub fn block_shape(&self, b: Block) -> (usize, usize, usize) {
        self.block_shapes[b.index()]
    }

    pub fn check_shape(&self, c: Check) -> (usize, usize, usize) {
        self.check_shapes[c.index()]
    }

    pub fn qubit_index(&self, b: Block, i: usize, j: usize, k: usize) -> usize {
        let (a, bb, c) = self.block_shapes[b.index()];
        debug_assert!(i < a && j < bb && k < c);
        self.qubit_offsets[b.index()] + (i * bb + j) * c + k
    }

    pub fn qubit_coords(&self, q: usize) -> (Block, usize, usize, usize) {
        for b in Block::ALL.into_iter().rev() {
            if q >= self.qubit_offsets[b.index()] {
                let rel = q - self.qubit_offsets[b.index()];
                let (_, bb, c) = self.block_shapes[b.index()];
                return (b, rel / (bb * c), (rel / c) % bb, rel % c);
            }
        }
        unreachable!("qubit index out of range")
    }

    pub fn check_index(&self, c: Check, i: usize, j: usize, k: usize) -> usize {
        let (a, bb, cc) = self.check_shapes[c.index()];
        debug_assert!(i < a && j < bb && k < cc);
        self.check_offsets[c.index()] + (i * bb + j) * cc + k
    }

    pub fn group(&self) -> &PauliGroup {
        &self.group
    }

    pub fn generators(&self) -> &[PauliOperator] {
        self.group.generators()
    }

    /// The generator for a unit tensor at one check cell.
    fn generator_at(&self, check: Check, i: usize, j: usize, k: usize) -> PauliOperator {
        let [h1, h2, h3] = &self.h;
        let mut letters: Vec<(usize, Pauli)> = Vec::new();
        match check {
            Check::S => {
                for ii in h1.row(i).ones() {
                    letters.push((self.qubit_index(Block::A, ii, j, k), Pauli::X));
                }
                for kk in 0..h3.rows() {
                    if h3.get(kk, k) {
                        letters.push((self.qubit_index(Block::C, i, j, kk), Pauli::Z));
                    }
                }
                for jj in 0..h2.rows() {
                    if h2.get(jj, j) {
                        letters.push((self.qubit_index(Block::D, i, jj, k), Pauli::Y));
                    }
                }
            }
            Check::T => {
                for jj in h2.row(j).ones() {
                    letters.push((self.qubit_index(Block::A, i, jj, k), Pauli::Y));
                }
                for kk in 0..h3.rows() {
                    if h3.get(kk, k) {
                        letters.push((self.qubit_index(Block::B, i, j, kk), Pauli::Z));
                    }
                }
                for ii in 0..h1.rows() {
                    if h1.get(ii, i) {
                        letters.push((self.qubit_index(Block::D, ii, j, k), Pauli::X));
                    }
                }
            }
            Check::U => {
                for kk in h3.row(k).ones() {
                    letters.push((self.qubit_index(Block::A, i, j, kk), Pauli::Z));
                }
                for jj in 0..h2.rows() {
                    if h2.get(jj, j) {
                        letters.push((self.qubit_index(Block::B, i, jj, k), Pauli::Y));
                    }
                }
                for ii in 0..h1.rows() {
                    if h1.get(ii, i) {
                        letters.push((self.qubit_index(Block::C, ii, j, k), Pauli::X));
                    }
                }
            }
            Check::V => {
                for ii in h1.row(i).ones() {
                    letters.push((self.qubit_index(Block::B, ii, j, k), Pauli::X));
                }
                for jj in h2.row(j).ones() {
                    letters.push((self.qubit_index(Block::C, i, jj, k), Pauli::Y));
                }
                for kk in h3.row(k).ones() {
                    letters.push((self.qubit_index(Block::D, i, j, kk), Pauli::Z));
                }
            }
        }
        PauliOperator::from_letters(self.n_qubits, letters)
    }

    /// Syndrome of an error: bit g is set where the error anticommutes with
    /// generator g. Stabilizer elements and logical operators map to zero.
    pub fn syndrome(&self, e: &PauliOperator) -> Result<Syndrome> {
        if e.n() != self.n_qubits {
            return input_err(format!(
                "syndrome: operator on {} qubits, code has {}",
                e.n(),
                self.n_qubits
            ));
        }
        let mut bits = Vec::with_capacity(self.n_checks());
        for g in self.group.generators() {
            bits.push(!e.commutes(g)?);
        }
        let vec = BitVector::from_bools(&bits);
        let vol = |s: (usize, usize, usize)| s.0 * s.1 * s.2;
        let mut tensors = Vec::new();
        for c in Check::ALL {
            let shape = self.check_shapes[c.index()];
            let slice = vec.slice(self.check_offsets[c.index()], vol(shape));
            tensors.push(Tensor3::unflatten(&slice, shape)?);
        }
        let mut it = tensors.into_iter();
        Ok(Syndrome {
            s: it.next().unwrap(),
            t: it.next().unwrap(),
            u: it.next().unwrap(),
            v: it.next().unwrap(),
        })
    }

    /// All generator pairs commute. True for every well-formed construction.
    pub fn check_abelian(&self) -> Result<bool> {
        let gens = self.group.generators();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if !a.commutes(b)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Build an operator from per-block sigma_1/sigma_2/sigma_3 support
    /// tensors: at each site the letters compose as sigma_1^a sigma_2^b
    /// sigma_3^c.
    pub fn operator_from_components(
        &self,
        parts: &[(Block, Tensor3, Tensor3, Tensor3)],
    ) -> Result<PauliOperator> {
        let mut x = BitVector::zeros(self.n_qubits);
        let mut z = BitVector::zeros(self.n_qubits);
        let mut phase: u8 = 0;
        for (block, ax, ay, az) in parts {
            let shape = self.block_shape(*block);
            if ax.shape() != shape || ay.shape() != shape || az.shape() != shape {
                return input_err("operator_from_components: tensor shape mismatch");
            }
            for i in 0..shape.0 {
                for j in 0..shape.1 {
                    for k in 0..shape.2 {
                        let (a, b, c) = (ax.get(i, j, k), ay.get(i, j, k), az.get(i, j, k));
                        if !(a || b || c) {
                            continue;
                        }
                        let q = self.qubit_index(*block, i, j, k);
                        // sigma_1^a sigma_2^b sigma_3^c = i^b X^(a+b) Z^(b+c)
                        if a ^ b {
                            x.set(q, true);
                        }
                        if b ^ c {
                            z.set(q, true);
                        }
                        if b {
                            phase = (phase + 1) % 4;
                        }
                    }
                }
            }
        }
        Ok(PauliOperator::from_parts(x, z, phase))
    }

    /// A single-block uniform operator: `letter` on every cell of `tensor`.
    pub fn block_operator(
        &self,
        block: Block,
        letter: Pauli,
        tensor: &Tensor3,
    ) -> Result<PauliOperator> {
        if tensor.shape() != self.block_shape(block) {
            return input_err("block_operator: tensor shape mismatch");
        }
        let letters: Vec<(usize, Pauli)> = tensor
            .cells()
            .map(|(i, j, k)| (self.qubit_index(block, i, j, k), letter))
            .collect();
        Ok(PauliOperator::from_letters(self.n_qubits, letters))
    }

    /// Exact product of the generators selected by the four check tensors,
    /// multiplied in the canonical S, T, U, V order.
    pub fn stabilizer_element(
        &self,
        s: &Tensor3,
        t: &Tensor3,
        u: &Tensor3,
        v: &Tensor3,
    ) -> Result<PauliOperator> {
        let tensors = [s, t, u, v];
        for (c, tensor) in Check::ALL.into_iter().zip(tensors) {
            if tensor.shape() != self.check_shape(c) {
                return input_err("stabilizer_element: tensor shape mismatch");
            }
        }
        let mut word = BitVector::zeros(self.n_checks());
        for (c, tensor) in Check::ALL.into_iter().zip(tensors) {
            for (i, j, k) in tensor.cells() {
                word.set(self.check_index(c, i, j, k), true);
            }
        }
        self.group.product_of_word(&word)
    }

    /// The two-slice logical representatives of a dimension-1 code:
    /// sigma_1 slices on (A, B), sigma_2 on (A, C), sigma_3 on (A, D).
    pub fn logical_representatives(&self) -> Result<[PauliOperator; 3]> {
        let t = in_t(&self.h[0], &self.h[1], &self.h[2])?;
        if !t.is_member {
            return input_err(format!(
                "logical_representatives requires a T triple: {}",
                t.diagnostic.unwrap_or_default()
            ));
        }
        Ok([
            self.slice_logical_pair(0, 0, 0)?,
            self.slice_logical_pair(1, 0, 0)?,
            self.slice_logical_pair(2, 0, 0)?,
        ])
    }

    /// Slice representative of one logical family on a square code.
    ///
    /// `axis` 0/1/2 selects the sigma_1/sigma_2/sigma_3 logical; `variant` 0
    /// uses the block pair containing A, `variant` 1 the complementary pair;
    /// `index` translates the slice along the axis. All `2 n_axis`
    /// representatives of one family are pairwise disjoint.
    pub fn slice_logical_pair(
        &self,
        axis: usize,
        variant: usize,
        index: usize,
    ) -> Result<PauliOperator> {
        let (letter, pair) = match (axis, variant) {
            (0, 0) => (Pauli::X, [Block::A, Block::B]),
            (0, 1) => (Pauli::X, [Block::C, Block::D]),
            (1, 0) => (Pauli::Y, [Block::A, Block::C]),
            (1, 1) => (Pauli::Y, [Block::B, Block::D]),
            (2, 0) => (Pauli::Z, [Block::A, Block::D]),
            (2, 1) => (Pauli::Z, [Block::B, Block::C]),
            _ => return input_err("axis must be 0, 1 or 2 and variant 0 or 1"),
        };
        let mut letters = Vec::new();
        for b in pair {
            let plane = Tensor3::plane(self.block_shape(b), axis, index)?;
            for (i, j, k) in plane.cells() {
                letters.push((self.qubit_index(b, i, j, k), letter));
            }
        }
        Ok(PauliOperator::from_letters(self.n_qubits, letters))
    }

    /// Matrix of the relation system: its kernel counts the GF(2) relations
    /// among the generators. Unknowns are the flattened (S, T, U, V).
    pub fn relation_system_matrix(&self) -> BitMatrix {
        let [h1, h2, h3] = &self.h;
        let h1t = h1.transpose();
        let h2t = h2.transpose();
        let h3t = h3.transpose();
        let s_shape = self.check_shape(Check::S);
        let t_shape = self.check_shape(Check::T);
        let u_shape = self.check_shape(Check::U);
        let v_shape = self.check_shape(Check::V);

        // Sparse assembly: columns are unit check tensors, rows the stacked
        // block equations. Work per unknown and scatter into the big matrix.
        let vol = |s: (usize, usize, usize)| s.0 * s.1 * s.2;
        let widths = [vol(s_shape), vol(t_shape), vol(u_shape), vol(v_shape)];
        let col_offset = [
            0,
            widths[0],
            widths[0] + widths[1],
            widths[0] + widths[1] + widths[2],
        ];
        let total_cols = widths.iter().sum::<usize>();

        // The eight block equations, each "lhs-term + rhs-term = 0":
        // 1: H1^T S = H2^T T     (A shape)   2: H2^T T = H3^T U (A shape)
        // 3: H1 T   = H2 S       (D shape)   4: H2 S   = H3^T V (D shape)
        // 5: H1 U   = H2^T V     (C shape)   6: H2^T V = H3 S   (C shape)
        // 7: H1^T V = H2 U       (B shape)   8: H2 U   = H3 T   (B shape)
        struct Term<'a> {
            unknown: usize,
            op: &'a BitMatrix,
            axis: usize,
        }
        let equations: Vec<(usize, [Term; 2])> = vec![
            (
                0,
                [
                    Term {
                        unknown: 0,
                        op: &h1t,
                        axis: 0,
                    },
                    Term {
                        unknown: 1,
                        op: &h2t,
                        axis: 1,
                    },
                ],
            ),
            (
                0,
                [
                    Term {
                        unknown: 1,
                        op: &h2t,
                        axis: 1,
                    },
                    Term {
                        unknown: 2,
                        op: &h3t,
                        axis: 2,
                    },
                ],
            ),
            (
                3,
                [
                    Term {
                        unknown: 1,
                        op: h1,
                        axis: 0,
                    },
                    Term {
                        unknown: 0,
                        op: h2,
                        axis: 1,
                    },
                ],
            ),
            (
                3,
                [
                    Term {
                        unknown: 0,
                        op: h2,
                        axis: 1,
                    },
                    Term {
                        unknown: 3,
                        op: &h3t,
                        axis: 2,
                    },
                ],
            ),
            (
                2,
                [
                    Term {
                        unknown: 2,
                        op: h1,
                        axis: 0,
                    },
                    Term {
                        unknown: 3,
                        op: &h2t,
                        axis: 1,
                    },
                ],
            ),
            (
                2,
                [
                    Term {
                        unknown: 3,
                        op: &h2t,
                        axis: 1,
                    },
                    Term {
                        unknown: 0,
                        op: h3,
                        axis: 2,
                    },
                ],
            ),
            (
                1,
                [
                    Term {
                        unknown: 3,
                        op: &h1t,
                        axis: 0,
                    },
                    Term {
                        unknown: 2,
                        op: h2,
                        axis: 1,
                    },
                ],
            ),
            (
                1,
                [
                    Term {
                        unknown: 2,
                        op: h2,
                        axis: 1,
                    },
                    Term {
                        unknown: 1,
                        op: h3,
                        axis: 2,
                    },
                ],
            ),
        ];

        let check_shapes = [s_shape, t_shape, u_shape, v_shape];
        let mut rows: Vec<BitVector> = Vec::new();
        for (out_block, terms) in &equations {
            let out_shape = self.block_shapes[*out_block];
            let n_rows = vol(out_shape);
            let mut block_rows = vec![BitVector::zeros(total_cols); n_rows];
            for term in terms {
                let in_shape = check_shapes[term.unknown];
                // image of each unit tensor of this unknown
                for i in 0..in_shape.0 {
                    for j in 0..in_shape.1 {
                        for k in 0..in_shape.2 {
                            let col =
                                col_offset[term.unknown] + (i * in_shape.1 + j) * in_shape.2 + k;
                            let coord = [i, j, k];
                            let in_axis = coord[term.axis];
                            for r in 0..term.op.rows() {
                                if term.op.get(r, in_axis) {
                                    let mut out = coord;
                                    out[term.axis] = r;
                                    let row_idx =
                                        (out[0] * out_shape.1 + out[1]) * out_shape.2 + out[2];
                                    block_rows[row_idx].flip(col);
                                }
                            }
                        }
                    }
                }
            }
            rows.extend(block_rows);
        }
        BitMatrix::from_rows(rows)
    }

    /// Human-readable support listing, block-wise: `X A[0,0,0] Y D[1,0,2]`.
    pub fn describe_operator(&self, op: &PauliOperator) -> String {
        let mut parts = Vec::new();
        for q in op.support() {
            let (b, i, j, k) = self.qubit_coords(q);
            parts.push(format!("{}{}[{},{},{}]", op.letter(q), b, i, j, k));
        }
        parts.join(" ")
    }
}

/// Membership test for the dimension-1 family: square invertible matrices of
/// odd dimension whose only common `H x = H^T x = x` solution is the all-ones
/// vector, and whose `H_i H_i^T` share no eigenvalue beyond 1.
///
/// The spectral condition is checked rationally: the gcd of the three
/// characteristic polynomials must be a power of (x+1), and each
/// `ker(H_i H_i^T + 1)` must be one-dimensional.
pub fn in_t(h1: &BitMatrix, h2: &BitMatrix, h3: &BitMatrix) -> Result<TMembership> {
    let hs = [h1, h2, h3];
    let fail = |msg: String| {
        Ok(TMembership {
            is_member: false,
            diagnostic: Some(msg),
        })
    };
    for (i, h) in hs.iter().enumerate() {
        if h.rows() != h.cols() {
            return fail(format!(
                "H{} is not square ({}x{})",
                i + 1,
                h.rows(),
                h.cols()
            ));
        }
        if h.rows() % 2 == 0 {
            return fail(format!("H{} has even dimension {}", i + 1, h.rows()));
        }
        if !h.is_invertible() {
            return fail(format!("H{} is singular", i + 1));
        }
    }
    for (i, h) in hs.iter().enumerate() {
        let n = h.rows();
        let id = BitMatrix::identity(n);
        let fixed = h.add(&id).vstack(&h.transpose().add(&id));
        let kernel = fixed.kernel_basis();
        let all_ones = BitVector::from_ones(n, 0..n);
        if kernel.len() != 1 || kernel[0] != all_ones {
            return fail(format!(
                "H{} does not uniquely fix the all-ones vector (fixed space dim {})",
                i + 1,
                kernel.len()
            ));
        }
    }
    let mut char_polys = Vec::new();
    for h in hs {
        let hht = h.mat_mul(&h.transpose());
        char_polys.push(crate::invariants::char_poly(&hht)?);
    }
    let gcd = char_polys[0].gcd(&char_polys[1]).gcd(&char_polys[2]);
    let d = gcd.degree().unwrap_or(0);
    let x_plus_1 = crate::poly::F2Polynomial::from_exponents(&[0, 1]);
    let mut power = crate::poly::F2Polynomial::one();
    for _ in 0..d {
        power = power.mul(&x_plus_1);
    }
    if d == 0 || gcd != power {
        return fail(format!(
            "common char-poly gcd {gcd} is not a positive power of x + 1"
        ));
    }
    for (i, h) in hs.iter().enumerate() {
        let n = h.rows();
        let hht = h.mat_mul(&h.transpose());
        let dim = hht.add(&BitMatrix::identity(n)).kernel_dim();
        if dim != 1 {
            return fail(format!(
                "eigenvalue 1 of H{}H{}^T has geometric multiplicity {dim}",
                i + 1,
                i + 1
            ));
        }
    }
    Ok(TMembership {
        is_member: true,
        diagnostic: None,
    })
}

/// Circulant matrix `sum_e Omega^e` of size n, where `Omega |j> = |j+1 mod n>`.
pub fn circulant(n: usize, exponents: &[i64]) -> BitMatrix {
    let mut m = BitMatrix::zeros(n, n);
    for &e in exponents {
        let shift = e.rem_euclid(n as i64) as usize;
        for j in 0..n {
            let i = (j + shift) % n;
            // XOR semantics: repeated exponents cancel over GF(2)
            let cur = m.get(i, j);
            m.set(i, j, !cur);
        }
    }
    m
}

/// `1 + Omega_n`, the repetition-code check pattern of the Chamon family.
pub fn chamon_matrix(n: usize) -> BitMatrix {
    circulant(n, &[0, 1])
}

/// `1 + Omega_n + Omega_n^T`, the weight-3 symmetric circulant.
pub fn xyz3d_matrix(n: usize) -> BitMatrix {
    circulant(n, &[0, 1, -1])
}
