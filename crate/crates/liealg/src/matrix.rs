use num_rational::Rational64;
use num_traits::Zero;

use crate::LieError;

/// Dense square matrix with exact rational entries, 1-based accessors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational64>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { n, entries: vec![Rational64::zero(); n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Rational64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational64) {
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn add_entry(&mut self, i: usize, j: usize, v: Rational64) {
        self.entries[(i - 1) * self.n + (j - 1)] += v;
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.n, o.n);
        Matrix { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: Rational64) -> Matrix {
        Matrix { n: self.n, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix, LieError> {
        if self.n != o.n {
            return Err(LieError::SizeMismatch(self.n, o.n));
        }
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `ab - ba`.
    pub fn commutator(&self, o: &Matrix) -> Result<Matrix, LieError> {
        let ab = self.mul(o)?;
        let ba = o.mul(self)?;
        Ok(ab.add(&ba.scale(-Rational64::from_integer(1))))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// `A[i][j] = -A[N+1-j][N+1-i]` for all entries.
    pub fn is_antidiagonal_antisymmetric(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| (1..=n).all(|j| self.get(i, j) == -self.get(n + 1 - j, n + 1 - i)))
    }
}
