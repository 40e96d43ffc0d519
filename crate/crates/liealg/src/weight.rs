//! Weights in the orthogonal epsilon basis, stored as doubled integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::Signed;

use crate::LieError;

/// A weight `[a_1, ..., a_m]` with half-integer coordinates.
///
/// Coordinates are kept as `2 a_i`, so equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight {
    twice: Vec<i64>,
}

/// Renders a doubled coordinate as an integer or a `p/2` fraction.
pub fn fmt_half(t: i64) -> String {
    if t % 2 == 0 {
        (t / 2).to_string()
    } else {
        format!("{}/2", t)
    }
}

impl Weight {
    pub fn from_twice(twice: Vec<i64>) -> Self {
        Weight { twice }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight { twice: v.iter().map(|x| 2 * x).collect() }
    }

    /// Builds `1/2 [t_1, ..., t_m]`; same as [`Weight::from_twice`].
    pub fn halves(v: &[i64]) -> Self {
        Weight { twice: v.to_vec() }
    }

    pub fn from_rationals(v: &[Rational64]) -> Result<Self, LieError> {
        let mut twice = Vec::with_capacity(v.len());
        for x in v {
            let d = *x * Rational64::from_integer(2);
            if !d.is_integer() {
                return Err(LieError::NotHalfIntegral(x.to_string()));
            }
            twice.push(d.to_integer());
        }
        Ok(Weight { twice })
    }

    pub fn zero(rank: usize) -> Self {
        Weight { twice: vec![0; rank] }
    }

    /// The unit vector `e_i` (0-based `i`).
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut twice = vec![0; rank];
        twice[i] = 2;
        Weight { twice }
    }

    pub fn rank(&self) -> usize {
        self.twice.len()
    }

    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    pub fn coord(&self, i: usize) -> Rational64 {
        Rational64::new(self.twice[i], 2)
    }

    pub fn coords(&self) -> Vec<Rational64> {
        (0..self.rank()).map(|i| self.coord(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|t| *t == 0)
    }

    /// Four times the standard inner product.
    pub fn dot4(&self, other: &Weight) -> i64 {
        self.twice.iter().zip(&other.twice).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight { twice: self.twice.iter().map(|t| t * c).collect() }
    }

    /// `c * self`, provided the result still has half-integer coordinates.
    pub fn scale_rational(&self, c: Rational64) -> Option<Weight> {
        let mut twice = Vec::with_capacity(self.rank());
        for t in &self.twice {
            let v = c * Rational64::from_integer(*t);
            if !v.is_integer() {
                return None;
            }
            twice.push(v.to_integer());
        }
        Some(Weight { twice })
    }

    /// Sum of the first `k` coordinates.
    pub fn prefix_sum(&self, k: usize) -> Rational64 {
        Rational64::new(self.twice[..k].iter().sum(), 2)
    }

    /// Comma separated coordinates with an optional bar after position `bar`.
    pub fn render(&self, bar: Option<usize>) -> String {
        let mut s = String::from("[");
        for (i, t) in self.twice.iter().enumerate() {
            if i > 0 {
                s.push(if bar == Some(i) { '|' } else { ',' });
            }
            s.push_str(&fmt_half(*t));
        }
        s.push(']');
        s
    }

    /// First nonzero coordinate is positive.
    pub fn is_positive_vector(&self) -> bool {
        self.twice.iter().find(|t| **t != 0).map(|t| *t > 0).unwrap_or(false)
    }

    pub fn abs_sorted_desc(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.twice.iter().map(|t| t.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        assert_eq!(self.rank(), o.rank(), "rank mismatch");
        Weight { twice: self.twice.iter().zip(&o.twice).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        assert_eq!(self.rank(), o.rank(), "rank mismatch");
        Weight { twice: self.twice.iter().zip(&o.twice).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { twice: self.twice.iter().map(|a| -a).collect() }
    }
}

/// `2 (w, g) / (g, g)`.
pub fn coroot_pairing(w: &Weight, gamma: &Weight) -> Result<Rational64, LieError> {
    let gg = gamma.dot4(gamma);
    if gg == 0 {
        return Err(LieError::ZeroRoot);
    }
    Ok(Rational64::new(2 * w.dot4(gamma), gg))
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().abs(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Weight {
    pub fn is_integral(&self) -> bool {
        self.twice.iter().all(|t| t % 2 == 0)
    }
}
