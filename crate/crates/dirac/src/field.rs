use std::collections::BTreeMap;
use std::fmt;

use liealg::Q;
use num_traits::{One, Zero};

use crate::clifford::Clifford;
use crate::DiracError;

/// Exponent vector over the variables `x[i,j]`, stored row-major:
/// variable `x[i,j]` sits at `(i - 1) * n + (j - 1)`.
pub type Exponents = Vec<u8>;

/// Polynomial in `k * n` commuting variables with Clifford coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyField {
    k: usize,
    n: usize,
    terms: BTreeMap<Exponents, Clifford>,
}

impl PolyField {
    pub fn zero(k: usize, n: usize) -> Self {
        PolyField { k, n, terms: BTreeMap::new() }
    }

    pub fn constant(k: usize, n: usize, c: Clifford) -> Result<Self, DiracError> {
        Self::monomial(k, n, &vec![0; k * n], c)
    }

    pub fn monomial(k: usize, n: usize, exps: &[u8], c: Clifford) -> Result<Self, DiracError> {
        if exps.len() != k * n {
            return Err(DiracError::Arity { expected: k * n, found: exps.len() });
        }
        if c.dim() != n {
            return Err(DiracError::DimensionMismatch { left: n, right: c.dim() });
        }
        let mut f = Self::zero(k, n);
        f.add_term(exps.to_vec(), &c);
        Ok(f)
    }

    /// Monomial from a list of `(i, j)` variable occurrences.
    pub fn from_vars(k: usize, n: usize, vars: &[(usize, usize)], c: Clifford) -> Result<Self, DiracError> {
        let mut exps = vec![0u8; k * n];
        for &(i, j) in vars {
            if i == 0 || i > k {
                return Err(DiracError::IndexOutOfRange { index: i, bound: k });
            }
            if j == 0 || j > n {
                return Err(DiracError::IndexOutOfRange { index: j, bound: n });
            }
            exps[(i - 1) * n + j - 1] += 1;
        }
        Self::monomial(k, n, &exps, c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Clifford)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (monomial, blade) pairs with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(Clifford::len).sum()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, exps: Exponents, c: &Clifford) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(|| Clifford::zero(self.n));
        slot.add_scaled(c, &Q::one());
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    fn check(&self, other: &PolyField) -> Result<(), DiracError> {
        if self.n != other.n {
            return Err(DiracError::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.k != other.k {
            return Err(DiracError::Arity { expected: self.k, found: other.k });
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyField) -> Result<Self, DiracError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyField) -> Result<Self, DiracError> {
        self.add(&other.scaled(&-Q::one()))
    }

    pub fn scaled(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::zero(self.k, self.n);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c.scaled(q))).collect();
        PolyField { k: self.k, n: self.n, terms }
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-Q::one())
    }

    fn var(&self, i: usize, j: usize) -> Result<usize, DiracError> {
        if i == 0 || i > self.k {
            return Err(DiracError::IndexOutOfRange { index: i, bound: self.k });
        }
        if j == 0 || j > self.n {
            return Err(DiracError::IndexOutOfRange { index: j, bound: self.n });
        }
        Ok((i - 1) * self.n + j - 1)
    }

    /// `∂/∂x[i,j]`.
    pub fn partial(&self, i: usize, j: usize) -> Result<Self, DiracError> {
        let v = self.var(i, j)?;
        let mut out = Self::zero(self.k, self.n);
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[v] -= 1;
            out.add_term(e2, &c.scaled(&Q::from_integer(e[v].into())));
        }
        Ok(out)
    }

    /// `D_i f = Σ_j e_j ∂f/∂x[i,j]`.
    pub fn dirac(&self, i: usize) -> Result<Self, DiracError> {
        self.var(i, 1)?;
        let mut out = Self::zero(self.k, self.n);
        for (e, c) in &self.terms {
            for j in 1..=self.n {
                let v = (i - 1) * self.n + j - 1;
                if e[v] == 0 {
                    continue;
                }
                let mut e2 = e.clone();
                e2[v] -= 1;
                out.add_term(e2, &c.left_gen(j).scaled(&Q::from_integer(e[v].into())));
            }
        }
        Ok(out)
    }

    /// `Δ_i f = Σ_j ∂²f/∂x[i,j]²`.
    pub fn laplacian(&self, i: usize) -> Result<Self, DiracError> {
        let mut out = Self::zero(self.k, self.n);
        for j in 1..=self.n {
            out = out.add(&self.partial(i, j)?.partial(i, j)?)?;
        }
        Ok(out)
    }

    /// `Σ_m ∂_{i,m} ∂_{j,m} f`.
    pub fn mixed(&self, i: usize, j: usize) -> Result<Self, DiracError> {
        let mut out = Self::zero(self.k, self.n);
        for m in 1..=self.n {
            out = out.add(&self.partial(j, m)?.partial(i, m)?)?;
        }
        Ok(out)
    }
}

pub fn dirac(i: usize, f: &PolyField) -> Result<PolyField, DiracError> {
    f.dirac(i)
}

/// `D_i D_i f + Δ_i f`, identically zero.
pub fn laplacian_identity(i: usize, f: &PolyField) -> Result<PolyField, DiracError> {
    f.dirac(i)?.dirac(i)?.add(&f.laplacian(i)?)
}

impl fmt::Display for PolyField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, (e, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let (i, j) = (v / self.n + 1, v % self.n + 1);
                if p == 1 {
                    write!(f, "*x[{i},{j}]")?;
                } else {
                    write!(f, "*x[{i},{j}]^{p}")?;
                }
            }
        }
        Ok(())
    }
}
