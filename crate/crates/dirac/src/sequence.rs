use crate::field::PolyField;
use crate::DiracError;

/// The three operators of the two-variable Dirac sequence.
///
/// Stage 1 takes one field to two, stage 2 two to two, stage 3 two to one.
pub trait DiracSequence: Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn stage1(&self, f: &PolyField) -> Result<[PolyField; 2], DiracError> {
        check_k2(f)?;
        Ok([f.dirac(1)?, f.dirac(2)?])
    }
    fn stage2(&self, g: &[PolyField; 2]) -> Result<[PolyField; 2], DiracError>;
    fn stage3(&self, h: &[PolyField; 2]) -> Result<PolyField, DiracError>;
}

fn check_k2(f: &PolyField) -> Result<(), DiracError> {
    if f.k() != 2 {
        return Err(DiracError::Arity { expected: 2, found: f.k() });
    }
    Ok(())
}

/// `(D1 D1 g2 - D2 D1 g1, D1 D2 g2 - D2 D2 g1)`
fn second_order(g: &[PolyField; 2]) -> Result<[PolyField; 2], DiracError> {
    check_k2(&g[0])?;
    let first = g[1].dirac(1)?.dirac(1)?.sub(&g[0].dirac(1)?.dirac(2)?)?;
    let second = g[1].dirac(2)?.dirac(1)?.sub(&g[0].dirac(2)?.dirac(2)?)?;
    Ok([first, second])
}

pub struct Standard;

impl DiracSequence for Standard {
    fn name(&self) -> &'static str {
        "standard"
    }
    fn describe(&self) -> &'static str {
        "f -> (D1 f, D2 f) -> (D1D1g2 - D2D1g1, D1D2g2 - D2D2g1) -> D1h2 - D2h1"
    }
    fn stage2(&self, g: &[PolyField; 2]) -> Result<[PolyField; 2], DiracError> {
        second_order(g)
    }
    fn stage3(&self, h: &[PolyField; 2]) -> Result<PolyField, DiracError> {
        check_k2(&h[0])?;
        h[1].dirac(1)?.sub(&h[0].dirac(2)?)
    }
}

/// Second stage seen through `C^2` instead of its dual: the components swap
/// and one changes sign.
pub struct Alternate;

impl DiracSequence for Alternate {
    fn name(&self) -> &'static str {
        "alternate"
    }
    fn describe(&self) -> &'static str {
        "f -> (D1 f, D2 f) -> (D1D2g2 - D2D2g1, D2D1g1 - D1D1g2) -> D1h1 + D2h2"
    }
    fn stage2(&self, g: &[PolyField; 2]) -> Result<[PolyField; 2], DiracError> {
        let [a, b] = second_order(g)?;
        Ok([b, a.neg()])
    }
    fn stage3(&self, h: &[PolyField; 2]) -> Result<PolyField, DiracError> {
        check_k2(&h[0])?;
        h[0].dirac(1)?.add(&h[1].dirac(2)?)
    }
}

/// Stage 2 with the sign between its two summands flipped. Not a complex;
/// kept as a negative control for the checker.
pub struct Mutated;

impl DiracSequence for Mutated {
    fn name(&self) -> &'static str {
        "mutated"
    }
    fn describe(&self) -> &'static str {
        "standard with stage 2 = (D1D1g2 + D2D1g1, D1D2g2 + D2D2g1)"
    }
    fn stage2(&self, g: &[PolyField; 2]) -> Result<[PolyField; 2], DiracError> {
        check_k2(&g[0])?;
        let first = g[1].dirac(1)?.dirac(1)?.add(&g[0].dirac(1)?.dirac(2)?)?;
        let second = g[1].dirac(2)?.dirac(1)?.add(&g[0].dirac(2)?.dirac(2)?)?;
        Ok([first, second])
    }
    fn stage3(&self, h: &[PolyField; 2]) -> Result<PolyField, DiracError> {
        Standard.stage3(h)
    }
}

static CONVENTIONS: [&dyn DiracSequence; 3] = [&Standard, &Alternate, &Mutated];

pub fn conventions() -> &'static [&'static dyn DiracSequence] {
    &CONVENTIONS
}

pub fn convention(name: &str) -> Option<&'static dyn DiracSequence> {
    CONVENTIONS.iter().copied().find(|c| c.name() == name)
}

/// Runs one stage of the standard sequence on a slice of fields.
pub fn sequence_k2(stage: u8, input: &[PolyField]) -> Result<Vec<PolyField>, DiracError> {
    let want = if stage == 1 { 1 } else { 2 };
    if input.len() != want {
        return Err(DiracError::Arity { expected: want, found: input.len() });
    }
    match stage {
        1 => Ok(Standard.stage1(&input[0])?.to_vec()),
        2 => Ok(Standard.stage2(&[input[0].clone(), input[1].clone()])?.to_vec()),
        3 => Ok(vec![Standard.stage3(&[input[0].clone(), input[1].clone()])?]),
        s => Err(DiracError::Stage(s)),
    }
}

/// Last component of the second operator for `k` variables,
/// `D_{k-1} D_k g_k - D_k D_k g_{k-1}`.
pub fn last_second_order_component(g: &[PolyField]) -> Result<PolyField, DiracError> {
    let k = g.len();
    if k < 2 || g.iter().any(|f| f.k() != k) {
        return Err(DiracError::Arity { expected: k.max(2), found: g.first().map_or(0, PolyField::k) });
    }
    g[k - 1].dirac(k)?.dirac(k - 1)?.sub(&g[k - 2].dirac(k)?.dirac(k)?)
}
