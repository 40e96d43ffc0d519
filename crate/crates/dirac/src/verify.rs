use std::fmt;

use liealg::{BigRational, Q};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::clifford::Clifford;
use crate::field::{laplacian_identity, PolyField};
use crate::sequence::DiracSequence;
use crate::DiracError;

pub const MAX_DIM: usize = 6;
pub const MAX_DEGREE: usize = 6;
pub const MAX_TRIALS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSet {
    /// Every monomial up to the degree bound times every blade of grade <= 2.
    Exhaustive,
    Random { trials: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    First,
    Second,
    Laplacian(usize),
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::First => write!(f, "stage2.stage1"),
            Check::Second => write!(f, "stage3.stage2"),
            Check::Laplacian(i) => write!(f, "laplacian{i}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Residual {
    pub check: Check,
    pub input: String,
    pub residual: String,
    pub terms: usize,
}

#[derive(Clone, Debug)]
pub struct ComplexReport {
    pub convention: &'static str,
    pub n: usize,
    pub max_degree: usize,
    pub mode: FieldSet,
    pub stage1_inputs: usize,
    /// Inputs on which the first operator does not vanish.
    pub stage1_nonzero: usize,
    pub stage2_inputs: usize,
    pub stage2_nonzero: usize,
    pub laplacian_checks: usize,
    pub failures: Vec<Residual>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exponent vectors over `vars` variables with total degree `<= max`.
pub fn monomials(vars: usize, max: usize) -> Vec<Vec<u8>> {
    fn rec(pos: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for p in 0..=left {
            cur[pos] = p as u8;
            rec(pos + 1, left - p, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, max, &mut vec![0; vars], &mut out);
    out.sort_by_key(|e| e.iter().map(|&x| x as usize).sum::<usize>());
    out
}

/// Blade masks of grade at most `g` in dimension `n`.
pub fn low_grade_blades(n: usize, g: u32) -> Vec<u32> {
    (0u32..1 << n).filter(|m| m.count_ones() <= g).collect()
}

/// The exhaustive single-field input set for `k = 2`.
pub fn basis_fields(n: usize, max_degree: usize) -> Vec<PolyField> {
    let blades = low_grade_blades(n, 2);
    let mut out = Vec::new();
    for e in monomials(2 * n, max_degree) {
        for &b in &blades {
            out.push(PolyField::monomial(2, n, &e, Clifford::basis(n, b, Q::one())).expect("shape"));
        }
    }
    out
}

fn random_field(rng: &mut ChaCha8Rng, n: usize, max_degree: usize) -> PolyField {
    let mut f = PolyField::zero(2, n);
    for _ in 0..rng.random_range(1..=4) {
        let deg = rng.random_range(0..=max_degree);
        let mut e = vec![0u8; 2 * n];
        for _ in 0..deg {
            e[rng.random_range(0..2 * n)] += 1;
        }
        let mut c = Clifford::zero(n);
        for _ in 0..rng.random_range(1..=3) {
            let q = BigRational::new(rng.random_range(-5i64..=5).into(), rng.random_range(1i64..=4).into());
            c.add_blade(rng.random_range(0..1u32 << n), q);
        }
        f.add_term(e, &c);
    }
    f
}

fn residual(check: Check, input: String, r: &PolyField) -> Option<Residual> {
    if r.is_zero() {
        return None;
    }
    Some(Residual { check, input, residual: r.to_string(), terms: r.term_count() })
}

struct Outcome {
    nonzero: bool,
    failures: Vec<Residual>,
}

fn check_single(seq: &dyn DiracSequence, f: &PolyField) -> Result<Outcome, DiracError> {
    let mut failures = Vec::new();
    let g = seq.stage1(f)?;
    let nonzero = g.iter().any(|x| !x.is_zero());
    let r = seq.stage2(&g)?;
    for part in &r {
        if let Some(res) = residual(Check::First, f.to_string(), part) {
            failures.push(res);
        }
    }
    for i in 1..=2 {
        if let Some(res) = residual(Check::Laplacian(i), f.to_string(), &laplacian_identity(i, f)?) {
            failures.push(res);
        }
    }
    Ok(Outcome { nonzero, failures })
}

fn check_pair(seq: &dyn DiracSequence, g: &[PolyField; 2]) -> Result<Outcome, DiracError> {
    let h = seq.stage2(g)?;
    let nonzero = h.iter().any(|x| !x.is_zero());
    let r = seq.stage3(&h)?;
    let input = format!("({}, {})", g[0], g[1]);
    Ok(Outcome { nonzero, failures: residual(Check::Second, input, &r).into_iter().collect() })
}

/// Checks that both compositions of `seq` vanish, together with
/// `D_i D_i = -Δ_i`, on the chosen field set.
pub fn verify_complex(
    seq: &dyn DiracSequence,
    n: usize,
    max_degree: usize,
    mode: FieldSet,
) -> Result<ComplexReport, DiracError> {
    if !(2..=MAX_DIM).contains(&n) {
        return Err(DiracError::Guard(format!("dimension {n} outside 2..={MAX_DIM}")));
    }
    if max_degree > MAX_DEGREE {
        return Err(DiracError::Guard(format!("degree {max_degree} above {MAX_DEGREE}")));
    }
    let (singles, pairs): (Vec<PolyField>, Vec<[PolyField; 2]>) = match mode {
        FieldSet::Exhaustive => {
            let basis = basis_fields(n, max_degree);
            let zero = PolyField::zero(2, n);
            let pairs = basis
                .iter()
                .flat_map(|f| [[f.clone(), zero.clone()], [zero.clone(), f.clone()]])
                .collect();
            (basis, pairs)
        }
        FieldSet::Random { trials, seed } => {
            if trials > MAX_TRIALS {
                return Err(DiracError::Guard(format!("{trials} trials above {MAX_TRIALS}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let singles = (0..trials).map(|_| random_field(&mut rng, n, max_degree)).collect();
            let pairs = (0..trials)
                .map(|_| [random_field(&mut rng, n, max_degree), random_field(&mut rng, n, max_degree)])
                .collect();
            (singles, pairs)
        }
    };
    let first: Vec<Outcome> = singles.par_iter().map(|f| check_single(seq, f)).collect::<Result<_, _>>()?;
    let second: Vec<Outcome> = pairs.par_iter().map(|g| check_pair(seq, g)).collect::<Result<_, _>>()?;
    let mut failures = Vec::new();
    let stage1_nonzero = first.iter().filter(|o| o.nonzero).count();
    let stage2_nonzero = second.iter().filter(|o| o.nonzero).count();
    for o in first.into_iter().chain(second) {
        failures.extend(o.failures);
    }
    Ok(ComplexReport {
        convention: seq.name(),
        n,
        max_degree,
        mode,
        stage1_inputs: singles.len(),
        stage1_nonzero,
        stage2_inputs: pairs.len(),
        stage2_nonzero,
        laplacian_checks: 2 * singles.len(),
        failures,
    })
}
