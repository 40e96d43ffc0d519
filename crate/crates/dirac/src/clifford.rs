use std::collections::BTreeMap;
use std::fmt;

use liealg::Q;
use num_traits::{One, Signed, Zero};

use crate::DiracError;

/// Element of the real Clifford algebra with `e_i e_i = -1`.
///
/// A basis blade is a bitmask; bit `j - 1` stands for `e_j`, and the blade is
/// the product of its generators in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clifford {
    n: usize,
    terms: BTreeMap<u32, Q>,
}

/// Sign of `e_a * e_b` for blades given as masks.
pub fn blade_sign(a: u32, b: u32) -> i32 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        // generators of `a` above `bit` must move past it
        swaps += (a >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps += (a & b).count_ones();
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Clifford {
    pub const MAX_DIM: usize = 16;

    pub fn zero(n: usize) -> Self {
        Clifford { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, q: Q) -> Self {
        Self::basis(n, 0, q)
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Q::one())
    }

    pub fn basis(n: usize, mask: u32, q: Q) -> Self {
        let mut c = Self::zero(n);
        c.add_blade(mask, q);
        c
    }

    /// `e_j` for `1 <= j <= n`.
    pub fn generator(n: usize, j: usize) -> Result<Self, DiracError> {
        if j == 0 || j > n {
            return Err(DiracError::IndexOutOfRange { index: j, bound: n });
        }
        Ok(Self::basis(n, 1 << (j - 1), Q::one()))
    }

    /// The ordered product `e_{j1} e_{j2} ...`; indices may repeat.
    pub fn word(n: usize, js: &[usize]) -> Result<Self, DiracError> {
        let mut acc = Self::one(n);
        for &j in js {
            acc = acc.mul(&Self::generator(n, j)?)?;
        }
        Ok(acc)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Q)> {
        self.terms.iter().map(|(m, q)| (*m, q))
    }

    pub fn coefficient(&self, mask: u32) -> Q {
        self.terms.get(&mask).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_blade(&mut self, mask: u32, q: Q) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(Q::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add_scaled(&mut self, other: &Clifford, q: &Q) {
        for (m, c) in &other.terms {
            self.add_blade(*m, c * q);
        }
    }

    pub fn add(&self, other: &Clifford) -> Result<Self, DiracError> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        Ok(out)
    }

    pub fn scaled(&self, q: &Q) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, q);
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-Q::one())
    }

    fn check(&self, other: &Clifford) -> Result<(), DiracError> {
        if self.n != other.n {
            return Err(DiracError::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Clifford) -> Result<Self, DiracError> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let prod = x * y;
                let prod = if blade_sign(*a, *b) < 0 { -prod } else { prod };
                out.add_blade(a ^ b, prod);
            }
        }
        Ok(out)
    }

    /// `e_j * self`, the only product the operators need.
    pub fn left_gen(&self, j: usize) -> Self {
        let g = 1u32 << (j - 1);
        let mut out = Self::zero(self.n);
        for (m, q) in &self.terms {
            let q = if blade_sign(g, *m) < 0 { -q.clone() } else { q.clone() };
            out.add_blade(g ^ m, q);
        }
        out
    }

    pub fn max_grade(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.count_ones()).max()
    }
}

pub fn clifford_mul(a: &Clifford, b: &Clifford) -> Result<Clifford, DiracError> {
    a.mul(b)
}

pub(crate) fn render_blade(mask: u32) -> String {
    let idx: Vec<String> = (0..32).filter(|b| mask >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
    format!("e[{}]", idx.join(","))
}

impl fmt::Display for Clifford {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mask, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = q.abs();
            if *mask == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", render_blade(*mask))?;
            } else {
                write!(f, "{a}*{}", render_blade(*mask))?;
            }
        }
        Ok(())
    }
}
