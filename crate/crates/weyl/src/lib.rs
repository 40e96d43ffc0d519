//! Weyl groups of types B and D acting on weights by signed permutations.
//!
//! Convention: `w(mu)[i] = signs[i] * mu[perm^{-1}(i)]`, so `perm[j]` is the
//! position that coordinate `j` is moved to.

use std::collections::{HashSet, VecDeque};

use itertools::Itertools;
use liealg::{coroot_pairing, AlgebraSpec, LieError, Rational64, Series, Weight};

/// Largest rank for which the whole group may be enumerated.
pub const ENUMERATION_RANK_LIMIT: usize = 7;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("{0} is not a root")]
    NotARoot(Weight),
    #[error("invalid signed permutation")]
    Invalid,
    #[error("rank {0} exceeds the enumeration guard ({ENUMERATION_RANK_LIMIT})")]
    Guard(usize),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(rank: usize) -> Self {
        SignedPermutation { perm: (0..rank).collect(), signs: vec![1; rank] }
    }

    /// `perm` is 0-based; `signs[i]` is the sign placed at output position `i`.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self, WeylError> {
        let m = perm.len();
        if signs.len() != m || signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(WeylError::Invalid);
        }
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || seen[p] {
                return Err(WeylError::Invalid);
            }
            seen[p] = true;
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negative_signs(&self) -> usize {
        self.signs.iter().filter(|s| **s < 0).count()
    }

    pub fn apply(&self, mu: &Weight) -> Result<Weight, WeylError> {
        if mu.rank() != self.rank() {
            return Err(WeylError::RankMismatch(mu.rank(), self.rank()));
        }
        let mut out = vec![0i64; self.rank()];
        for (j, &t) in mu.twice().iter().enumerate() {
            let i = self.perm[j];
            out[i] = self.signs[i] as i64 * t;
        }
        Ok(Weight::from_twice(out))
    }

    /// `self o other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let m = self.rank();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for j in 0..m {
            let mid = other.perm[j];
            let i = self.perm[mid];
            perm[j] = i;
            signs[i] = self.signs[i] * other.signs[mid];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let m = self.rank();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for j in 0..m {
            let i = self.perm[j];
            perm[i] = j;
            signs[j] = self.signs[i];
        }
        SignedPermutation { perm, signs }
    }

    /// The reflection `s_gamma` as a signed permutation.
    pub fn reflection(spec: AlgebraSpec, gamma: &Weight) -> Result<Self, WeylError> {
        let m = spec.rank;
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for j in 0..m {
            let img = reflect(spec, gamma, &Weight::unit(m, j))?;
            let (i, t) = img
                .twice()
                .iter()
                .enumerate()
                .find(|(_, t)| **t != 0)
                .map(|(i, t)| (i, *t))
                .ok_or(WeylError::Invalid)?;
            perm[j] = i;
            signs[i] = if t > 0 { 1 } else { -1 };
        }
        SignedPermutation::new(perm, signs)
    }
}

fn is_root(spec: AlgebraSpec, gamma: &Weight) -> bool {
    if gamma.rank() != spec.rank {
        return false;
    }
    let t = gamma.twice();
    let nonzero: Vec<i64> = t.iter().copied().filter(|x| *x != 0).collect();
    match (spec.series, nonzero.as_slice()) {
        (Series::B, [a]) => a.abs() == 2,
        (_, [a, b]) => a.abs() == 2 && b.abs() == 2,
        _ => false,
    }
}

/// `s_gamma(mu) = mu - <mu, H_gamma> gamma`.
pub fn reflect(spec: AlgebraSpec, gamma: &Weight, mu: &Weight) -> Result<Weight, WeylError> {
    if !is_root(spec, gamma) {
        return Err(WeylError::NotARoot(gamma.clone()));
    }
    if mu.rank() != spec.rank {
        return Err(WeylError::RankMismatch(mu.rank(), spec.rank));
    }
    let p = coroot_pairing(mu, gamma)?;
    let shift = gamma.scale_rational(p).ok_or(WeylError::Invalid)?;
    Ok(mu - &shift)
}

/// `w . mu = w(mu + delta) - delta`.
pub fn affine_apply(spec: AlgebraSpec, w: &SignedPermutation, mu: &Weight) -> Result<Weight, WeylError> {
    let d = spec.delta();
    Ok(&w.apply(&(mu + &d))? - &d)
}

pub fn affine_reflect(spec: AlgebraSpec, gamma: &Weight, mu: &Weight) -> Result<Weight, WeylError> {
    let d = spec.delta();
    Ok(&reflect(spec, gamma, &(mu + &d))? - &d)
}

/// Number of positive roots sent to negative roots.
pub fn length(spec: AlgebraSpec, w: &SignedPermutation) -> usize {
    spec.positive_roots()
        .iter()
        .filter(|g| !w.apply(g).expect("rank matches").is_positive_vector())
        .count()
}

pub fn is_member(spec: AlgebraSpec, w: &SignedPermutation) -> bool {
    w.rank() == spec.rank && (spec.series == Series::B || w.negative_signs() % 2 == 0)
}

/// Every element of the group; guarded by [`ENUMERATION_RANK_LIMIT`].
pub fn enumerate_group(spec: AlgebraSpec) -> Result<Vec<SignedPermutation>, WeylError> {
    let m = spec.rank;
    if m > ENUMERATION_RANK_LIMIT {
        return Err(WeylError::Guard(m));
    }
    let mut out = Vec::new();
    for p in (0..m).permutations(m) {
        for mask in 0u32..(1 << m) {
            if spec.series == Series::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            let signs = (0..m).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push(SignedPermutation { perm: p.clone(), signs });
        }
    }
    Ok(out)
}

/// Closure of `{mu}` under the simple reflections.
pub fn orbit(spec: AlgebraSpec, mu: &Weight) -> Result<HashSet<Weight>, WeylError> {
    if spec.rank > ENUMERATION_RANK_LIMIT {
        return Err(WeylError::Guard(spec.rank));
    }
    let simple = spec.simple_roots();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(mu.clone());
    queue.push_back(mu.clone());
    while let Some(x) = queue.pop_front() {
        for a in &simple {
            let y = reflect(spec, a, &x)?;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// A positive root `gamma` with `s_gamma(mu) = nu`, first in root order.
pub fn reflection_connecting(spec: AlgebraSpec, mu: &Weight, nu: &Weight) -> Option<Weight> {
    if mu == nu {
        return None;
    }
    spec.positive_roots().into_iter().find(|g| reflect(spec, g, mu).ok().as_ref() == Some(nu))
}

/// Coordinates of `v` in the basis of simple roots.
pub fn simple_coords(spec: AlgebraSpec, v: &Weight) -> Vec<Rational64> {
    let m = spec.rank;
    let t = v.twice();
    let mut partial = Vec::with_capacity(m);
    let mut s = 0i64;
    for x in t {
        s += x;
        partial.push(s);
    }
    let half = |x: i64| Rational64::new(x, 2);
    match spec.series {
        Series::B => partial.into_iter().map(half).collect(),
        Series::D => {
            let mut c: Vec<Rational64> = partial[..m - 2].iter().map(|x| half(*x)).collect();
            let s1 = partial[m - 2];
            c.push(Rational64::new(s1 + t[m - 1], 4));
            c.push(Rational64::new(s1 - t[m - 1], 4));
            c
        }
    }
}

/// `mu <= lambda`: the difference is a nonnegative integral sum of simple roots.
pub fn weight_le(spec: AlgebraSpec, mu: &Weight, lambda: &Weight) -> bool {
    simple_coords(spec, &(lambda - mu)).iter().all(|c| c.is_integer() && *c >= Rational64::from_integer(0))
}

/// The dominant element of the orbit of `mu`, together with an element taking it to `mu`.
pub fn dominant_representative(spec: AlgebraSpec, mu: &Weight) -> (Weight, SignedPermutation) {
    let m = spec.rank;
    let t = mu.twice();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|a, b| t[*b].abs().cmp(&t[*a].abs()).then(a.cmp(b)));
    let mut dom: Vec<i64> = order.iter().map(|&j| t[j].abs()).collect();
    let negatives = t.iter().filter(|x| **x < 0).count();
    if spec.series == Series::D && negatives % 2 == 1 && dom[m - 1] != 0 {
        dom[m - 1] = -dom[m - 1];
    }
    // w(dom) = mu: coordinate p of dom goes to position order[p].
    let mut perm = vec![0; m];
    let mut signs = vec![1i8; m];
    for p in 0..m {
        let i = order[p];
        perm[p] = i;
        signs[i] = if dom[p] == t[i] { 1 } else { -1 };
    }
    let mut w = SignedPermutation { perm, signs };
    if spec.series == Series::D && w.negative_signs() % 2 == 1 {
        // Only possible when a zero coordinate exists; flip its sign.
        let zero_pos = (0..m).find(|i| t[*i] == 0).expect("zero coordinate");
        w.signs[zero_pos] = -w.signs[zero_pos];
    }
    (Weight::from_twice(dom), w)
}
