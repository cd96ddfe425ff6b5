use std::fmt;

/// Univariate polynomial over GF(2), coefficients packed into words.
///
/// Bit `i` is the coefficient of `x^i`. The representation is normalized:
/// no trailing zero words, so `degree` is O(1) off the last word. Over GF(2)
/// every nonzero polynomial is monic, so no scaling is ever needed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Polynomial {
    words: Vec<u64>,
}

impl F2Polynomial {
    pub fn zero() -> Self {
        F2Polynomial { words: Vec::new() }
    }

    pub fn one() -> Self {
        F2Polynomial { words: vec![1] }
    }

    pub fn x() -> Self {
        F2Polynomial { words: vec![2] }
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut words = vec![0u64; d / 64 + 1];
        words[d / 64] = 1u64 << (d % 64);
        F2Polynomial { words }
    }

    /// Polynomial with ones exactly at the given exponents.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = F2Polynomial::zero();
        for &e in exps {
            p = p.add(&F2Polynomial::monomial(e));
        }
        p
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree, or `None` for the zero polynomial (the "minus infinity"
    /// sentinel; never a numeric -1).
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn add(&self, other: &F2Polynomial) -> F2Polynomial {
        let mut words = vec![0u64; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = F2Polynomial { words };
        p.normalize();
        p
    }

    /// Carry-less product.
    pub fn mul(&self, other: &F2Polynomial) -> F2Polynomial {
        if self.is_zero() || other.is_zero() {
            return F2Polynomial::zero();
        }
        let mut words = vec![0u64; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for b in 0..64 {
                if (a >> b) & 1 == 1 {
                    // shift `other` by i*64 + b and xor in
                    for (j, &ow) in other.words.iter().enumerate() {
                        if ow == 0 {
                            continue;
                        }
                        let lo = ow << b;
                        words[i + j] ^= lo;
                        if b != 0 {
                            words[i + j + 1] ^= ow >> (64 - b);
                        }
                    }
                }
            }
        }
        let mut p = F2Polynomial { words };
        p.normalize();
        p
    }

    /// Multiply by `x^k`.
    pub fn shl(&self, k: usize) -> F2Polynomial {
        self.mul(&F2Polynomial::monomial(k))
    }

    /// Quotient and remainder of `self / divisor`.
    ///
    /// Panics on division by zero.
    pub fn divmod(&self, divisor: &F2Polynomial) -> (F2Polynomial, F2Polynomial) {
        let d = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = F2Polynomial::zero();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let shift = rd - d;
            quot = quot.add(&F2Polynomial::monomial(shift));
            rem = rem.add(&divisor.shl(shift));
        }
        (quot, rem)
    }

    pub fn rem(&self, divisor: &F2Polynomial) -> F2Polynomial {
        self.divmod(divisor).1
    }

    pub fn divides(&self, other: &F2Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Euclidean gcd; `gcd(0, q) = q`. The result is monic by construction.
    pub fn gcd(&self, other: &F2Polynomial) -> F2Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Evaluate at a square matrix, i.e. `sum c_i M^i`.
    pub fn eval_matrix(&self, m: &crate::matrix::BitMatrix) -> crate::matrix::BitMatrix {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        let mut acc = crate::matrix::BitMatrix::zeros(n, n);
        let mut pow = crate::matrix::BitMatrix::identity(n);
        let deg = match self.degree() {
            None => return acc,
            Some(d) => d,
        };
        for i in 0..=deg {
            if self.coeff(i) {
                acc = acc.add(&pow);
            }
            if i != deg {
                pow = pow.mat_mul(m);
            }
        }
        acc
    }

    /// Fibonacci polynomial `F_n` over GF(2): `F_0 = 0`, `F_1 = 1`,
    /// `F_{n+1} = x F_n + F_{n-1}`.
    pub fn fibonacci(n: usize) -> F2Polynomial {
        let mut prev = F2Polynomial::zero();
        let mut cur = F2Polynomial::one();
        if n == 0 {
            return prev;
        }
        for _ in 1..n {
            let next = F2Polynomial::x().mul(&cur).add(&prev);
            prev = cur;
            cur = next;
        }
        cur
    }
}

impl fmt::Debug for F2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for F2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=deg).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
