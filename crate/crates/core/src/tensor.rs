use crate::bits::BitVector;
use crate::error::{input_err, Result};
use crate::matrix::BitMatrix;
use rand::Rng;
use std::fmt;

/// Binary 3-tensor with the fixed row-major flattening
/// `(i, j, k) -> i*b*c + j*c + k` for shape `(a, b, c)`.
///
/// The flattening order is normative: every module and file format relies on
/// it so that syndromes and witnesses are bit-for-bit reproducible.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    shape: (usize, usize, usize),
    data: BitVector,
}

impl Tensor3 {
    pub fn zeros(shape: (usize, usize, usize)) -> Self {
        Tensor3 {
            shape,
            data: BitVector::zeros(shape.0 * shape.1 * shape.2),
        }
    }

    pub fn from_cells(
        shape: (usize, usize, usize),
        cells: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Self {
        let mut t = Tensor3::zeros(shape);
        for (i, j, k) in cells {
            t.set(i, j, k, true);
        }
        t
    }

    pub fn random(shape: (usize, usize, usize), rng: &mut impl Rng) -> Self {
        let mut t = Tensor3::zeros(shape);
        for idx in 0..t.volume() {
            if rng.gen_bool(0.5) {
                t.data.set(idx, true);
            }
        }
        t
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize, usize) {
        self.shape
    }

    pub fn axis_len(&self, axis: usize) -> usize {
        match axis {
            0 => self.shape.0,
            1 => self.shape.1,
            2 => self.shape.2,
            _ => panic!("axis must be 0, 1 or 2"),
        }
    }

    #[inline]
    pub fn volume(&self) -> usize {
        self.shape.0 * self.shape.1 * self.shape.2
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.shape.0 && j < self.shape.1 && k < self.shape.2);
        (i * self.shape.1 + j) * self.shape.2 + k
    }

    pub fn coords(&self, idx: usize) -> (usize, usize, usize) {
        let k = idx % self.shape.2;
        let j = (idx / self.shape.2) % self.shape.1;
        let i = idx / (self.shape.1 * self.shape.2);
        (i, j, k)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> bool {
        self.data.get(self.index(i, j, k))
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: bool) {
        let idx = self.index(i, j, k);
        self.data.set(idx, value);
    }

    pub fn flip(&mut self, i: usize, j: usize, k: usize) {
        let idx = self.index(i, j, k);
        self.data.flip(idx);
    }

    pub fn weight(&self) -> usize {
        self.data.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_zero()
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.shape, other.shape, "tensor shapes must match");
        Tensor3 {
            shape: self.shape,
            data: self.data.xor(&other.data),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.data.ones().map(|idx| self.coords(idx))
    }

    /// The flattened bit vector (a copy; the ordering is the fixed one).
    pub fn flatten(&self) -> BitVector {
        self.data.clone()
    }

    pub fn unflatten(v: &BitVector, shape: (usize, usize, usize)) -> Result<Tensor3> {
        if v.len() != shape.0 * shape.1 * shape.2 {
            return input_err(format!(
                "unflatten: vector length {} does not match shape {:?}",
                v.len(),
                shape
            ));
        }
        Ok(Tensor3 {
            shape,
            data: v.clone(),
        })
    }

    /// Apply `h` along one axis: computes `(H ⊗ 1 ⊗ 1)`, `(1 ⊗ H ⊗ 1)` or
    /// `(1 ⊗ 1 ⊗ H)` applied to `self` without materializing the Kronecker
    /// product. The chosen axis length changes from `h.cols()` to `h.rows()`.
    pub fn apply_axis(&self, h: &BitMatrix, axis: usize) -> Result<Tensor3> {
        if h.cols() != self.axis_len(axis) {
            return input_err(format!(
                "apply_axis: operator has {} columns but axis {} has length {}",
                h.cols(),
                axis,
                self.axis_len(axis)
            ));
        }
        let out_shape = match axis {
            0 => (h.rows(), self.shape.1, self.shape.2),
            1 => (self.shape.0, h.rows(), self.shape.2),
            2 => (self.shape.0, self.shape.1, h.rows()),
            _ => return input_err("axis must be 0, 1 or 2"),
        };
        let mut out = Tensor3::zeros(out_shape);
        for (i, j, k) in self.cells() {
            let col = [i, j, k][axis];
            for r in 0..h.rows() {
                if h.get(r, col) {
                    let (oi, oj, ok) = match axis {
                        0 => (r, j, k),
                        1 => (i, r, k),
                        _ => (i, j, r),
                    };
                    out.flip(oi, oj, ok);
                }
            }
        }
        Ok(out)
    }

    /// All-ones plane: cells whose `fixed_axis` coordinate equals `index`.
    pub fn plane(shape: (usize, usize, usize), fixed_axis: usize, index: usize) -> Result<Tensor3> {
        let axis_len = match fixed_axis {
            0 => shape.0,
            1 => shape.1,
            2 => shape.2,
            _ => return input_err("axis must be 0, 1 or 2"),
        };
        if index >= axis_len {
            return input_err(format!(
                "plane index {index} out of range for axis {fixed_axis} of length {axis_len}"
            ));
        }
        let mut t = Tensor3::zeros(shape);
        for i in 0..shape.0 {
            for j in 0..shape.1 {
                for k in 0..shape.2 {
                    if [i, j, k][fixed_axis] == index {
                        t.set(i, j, k, true);
                    }
                }
            }
        }
        Ok(t)
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3{:?}{{", self.shape)?;
        for (n, c) in self.cells().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, "}}")
    }
}
