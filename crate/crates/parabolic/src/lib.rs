//! Parabolic data for a single crossed node: dominance, W^p, Hasse graphs,
//! BGG graphs and the standard-map tests.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use liealg::{coroot_pairing, AlgebraSpec, GradingElement, LieError, Rational64, Weight};
use weyl::{affine_reflect, dominant_representative, length, reflect, weight_le, SignedPermutation, WeylError};

/// Largest rank accepted by the graph builders.
pub const GRAPH_RANK_LIMIT: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum ParabolicError {
    #[error("{0} is not p-dominant")]
    NotDominant(Weight),
    #[error("{0} is not p-integral")]
    NotIntegral(Weight),
    #[error("rank {0} exceeds the graph guard ({GRAPH_RANK_LIMIT})")]
    Guard(usize),
    #[error("no true Verma module homomorphism from {0} into {1}")]
    NoTrueHom(Weight, Weight),
    #[error("extremal check failed: {0}")]
    Evidence(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicSpec {
    pub algebra: AlgebraSpec,
    /// crossed node, 1-based
    pub k: usize,
}

impl ParabolicSpec {
    pub fn new(algebra: AlgebraSpec, k: usize) -> Result<Self, ParabolicError> {
        GradingElement::new(algebra, &[k])?;
        Ok(ParabolicSpec { algebra, k })
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank
    }

    pub fn grading(&self) -> GradingElement {
        GradingElement::new(self.algebra, &[self.k]).expect("validated")
    }

    /// Evaluation of the grading element.
    pub fn eval(&self, w: &Weight) -> Rational64 {
        self.grading().eval(w)
    }

    pub fn uncrossed_simple_roots(&self) -> Vec<Weight> {
        self.algebra
            .simple_roots()
            .into_iter()
            .enumerate()
            .filter(|(i, _)| i + 1 != self.k)
            .map(|(_, a)| a)
            .collect()
    }

    /// Render with the bar after the crossed block.
    pub fn render(&self, w: &Weight) -> String {
        w.render(if self.k < self.rank() { Some(self.k) } else { None })
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} cross {}", self.algebra, self.k)
    }
}

fn pairings(spec: &ParabolicSpec, mu: &Weight) -> Vec<Rational64> {
    spec.uncrossed_simple_roots().iter().map(|a| coroot_pairing(mu, a).expect("root")).collect()
}

pub fn is_p_dominant(spec: &ParabolicSpec, mu: &Weight) -> bool {
    pairings(spec, mu).iter().all(|p| *p >= Rational64::from_integer(0))
}

pub fn is_strictly_p_dominant(spec: &ParabolicSpec, mu: &Weight) -> bool {
    pairings(spec, mu).iter().all(|p| *p > Rational64::from_integer(0))
}

pub fn is_p_integral(spec: &ParabolicSpec, mu: &Weight) -> bool {
    pairings(spec, mu).iter().all(|p| p.is_integer())
}

fn check_guard(spec: &ParabolicSpec) -> Result<(), ParabolicError> {
    if spec.rank() > GRAPH_RANK_LIMIT {
        return Err(ParabolicError::Guard(spec.rank()));
    }
    Ok(())
}

/// Elements w with w(delta) strictly p-dominant, sorted by length.
/// Grown from the identity by right multiplication with simple reflections.
pub fn wp_elements(spec: &ParabolicSpec) -> Result<Vec<SignedPermutation>, ParabolicError> {
    check_guard(spec)?;
    let alg = spec.algebra;
    let delta = alg.delta();
    let simple: Vec<SignedPermutation> =
        alg.simple_roots().iter().map(|a| SignedPermutation::reflection(alg, a)).collect::<Result<_, _>>()?;
    let id = SignedPermutation::identity(alg.rank);
    let mut seen: HashSet<SignedPermutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for s in &simple {
            let w2 = w.compose(s);
            if !seen.contains(&w2) && is_strictly_p_dominant(spec, &w2.apply(&delta)?) {
                seen.insert(w2.clone());
                queue.push_back(w2);
            }
        }
        out.push(w);
    }
    out.sort_by_key(|w| (length(alg, w), std::cmp::Reverse(w.apply(&delta).expect("rank"))));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Standard,
    Nonstandard,
    Conjectural,
}

impl EdgeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EdgeKind::Standard => "standard",
            EdgeKind::Nonstandard => "nonstandard",
            EdgeKind::Conjectural => "conjectural",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "standard" => Some(EdgeKind::Standard),
            "nonstandard" => Some(EdgeKind::Nonstandard),
            "conjectural" => Some(EdgeKind::Conjectural),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub weight: Weight,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    /// grading-element drop; `None` when unknown
    pub order: Option<i64>,
    pub kind: Option<EdgeKind>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub spec: ParabolicSpec,
    pub lambda: Option<Weight>,
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
}

impl LabeledGraph {
    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.vertices.iter().position(|v| &v.weight == w)
    }

    pub fn has_arrow(&self, from: &Weight, to: &Weight) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => self.arrows.iter().any(|e| e.from == a && e.to == b),
            _ => false,
        }
    }

    pub fn arrow(&self, from: &Weight, to: &Weight) -> Option<&Arrow> {
        let (a, b) = (self.index_of(from)?, self.index_of(to)?);
        self.arrows.iter().find(|e| e.from == a && e.to == b)
    }

    pub fn out_neighbours(&self, v: usize) -> Vec<usize> {
        self.arrows.iter().filter(|e| e.from == v).map(|e| e.to).collect()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|e| e.to == v).count()
    }

    pub fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            if !seen[v] {
                seen[v] = true;
                stack.extend(self.out_neighbours(v));
            }
        }
        false
    }

    /// Connected components of the underlying undirected graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![];
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for e in &self.arrows {
                    let u = if e.from == v { e.to } else if e.to == v { e.from } else { continue };
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }
}

fn label(spec: &ParabolicSpec, mu: &Weight) -> String {
    let shifted = mu + &spec.algebra.delta();
    format!("{} ; +delta {}", spec.render(mu), spec.render(&shifted))
}

/// (lambda - mu)(E).
pub fn operator_order(spec: &ParabolicSpec, lambda: &Weight, mu: &Weight) -> Rational64 {
    spec.eval(&(lambda - mu))
}

/// Integral orders only; mixed-parity orbits can produce half-integral drops.
fn int_order(spec: &ParabolicSpec, a: &Weight, b: &Weight) -> Option<i64> {
    let o = operator_order(spec, a, b);
    o.is_integer().then(|| o.to_integer())
}

/// Arrows w -> s_gamma w of W^p with length increasing by one, as index pairs.
fn regular_arrows(spec: &ParabolicSpec, wp: &[SignedPermutation]) -> Result<Vec<(usize, usize)>, ParabolicError> {
    let alg = spec.algebra;
    let delta = alg.delta();
    let lens: Vec<usize> = wp.iter().map(|w| length(alg, w)).collect();
    let by_weight: HashMap<Weight, usize> =
        wp.iter().enumerate().map(|(i, w)| (w.apply(&delta).expect("rank"), i)).collect();
    let roots = alg.positive_roots();
    let mut out = Vec::new();
    for (i, w) in wp.iter().enumerate() {
        let wd = w.apply(&delta)?;
        for g in &roots {
            if let Some(&j) = by_weight.get(&reflect(alg, g, &wd)?) {
                if lens[j] == lens[i] + 1 {
                    out.push((i, j));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Hasse graph on W^p; vertex weights are w(delta).
pub fn regular_hasse_graph(spec: &ParabolicSpec) -> Result<LabeledGraph, ParabolicError> {
    let wp = wp_elements(spec)?;
    let delta = spec.algebra.delta();
    let vertices: Vec<Vertex> = wp
        .iter()
        .map(|w| {
            let wd = w.apply(&delta).expect("rank");
            Vertex { label: spec.render(&wd), weight: wd }
        })
        .collect();
    let arrows = regular_arrows(spec, &wp)?
        .into_iter()
        .map(|(i, j)| Arrow {
            from: i,
            to: j,
            order: int_order(spec, &vertices[i].weight, &vertices[j].weight),
            kind: None,
        })
        .collect();
    Ok(LabeledGraph { spec: *spec, lambda: None, vertices, arrows })
}

fn require_dominant_integral(spec: &ParabolicSpec, lambda: &Weight) -> Result<(), ParabolicError> {
    if lambda.rank() != spec.rank() {
        return Err(WeylError::RankMismatch(lambda.rank(), spec.rank()).into());
    }
    if !is_p_dominant(spec, lambda) {
        return Err(ParabolicError::NotDominant(lambda.clone()));
    }
    if !is_p_integral(spec, lambda) {
        return Err(ParabolicError::NotIntegral(lambda.clone()));
    }
    Ok(())
}

/// Dominant representative of lambda + delta, shifted back by delta.
pub fn dominant_shift(spec: &ParabolicSpec, lambda: &Weight) -> Weight {
    let delta = spec.algebra.delta();
    let (dom, _) = dominant_representative(spec.algebra, &(lambda + &delta));
    &dom - &delta
}

/// Projection of the regular Hasse graph onto the affine orbit of lambda.
pub fn singular_hasse_graph(spec: &ParabolicSpec, lambda: &Weight) -> Result<LabeledGraph, ParabolicError> {
    require_dominant_integral(spec, lambda)?;
    let alg = spec.algebra;
    let delta = alg.delta();
    let top = &dominant_shift(spec, lambda) + &delta;
    let wp = wp_elements(spec)?;
    let images: Vec<Weight> = wp.iter().map(|w| &w.apply(&top).expect("rank") - &delta).collect();
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut index: HashMap<Weight, usize> = HashMap::new();
    for mu in &images {
        if !index.contains_key(mu) && is_p_dominant(spec, mu) && is_p_integral(spec, mu) {
            index.insert(mu.clone(), vertices.len());
            vertices.push(Vertex { weight: mu.clone(), label: label(spec, mu) });
        }
    }
    let mut arrows = BTreeSet::new();
    for (i, j) in regular_arrows(spec, &wp)? {
        if let (Some(&a), Some(&b)) = (index.get(&images[i]), index.get(&images[j])) {
            if a != b {
                arrows.insert(Arrow { from: a, to: b, order: int_order(spec, &images[i], &images[j]), kind: None });
            }
        }
    }
    Ok(LabeledGraph { spec: *spec, lambda: Some(lambda.clone()), vertices, arrows: arrows.into_iter().collect() })
}

/// Whether M(mu) embeds in M(lambda): a descending chain of affine reflections
/// with positive integral pairings leads from lambda to mu.
pub fn true_verma_hom_exists(spec: &ParabolicSpec, mu: &Weight, lambda: &Weight) -> bool {
    let alg = spec.algebra;
    if mu == lambda {
        return true;
    }
    let delta = alg.delta();
    let roots = alg.positive_roots();
    let mut seen = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(x) = queue.pop_front() {
        let shifted = &x + &delta;
        for g in &roots {
            let p = coroot_pairing(&shifted, g).expect("root");
            if !p.is_integer() || p <= Rational64::from_integer(0) {
                continue;
            }
            let y = affine_reflect(alg, g, &x).expect("root");
            if &y == mu {
                return true;
            }
            if weight_le(alg, mu, &y) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    false
}

/// Zero-map criterion for the standard map M_p(mu) -> M_p(lambda).
pub fn standard_map_is_zero(spec: &ParabolicSpec, mu: &Weight, lambda: &Weight) -> Result<bool, ParabolicError> {
    if !true_verma_hom_exists(spec, mu, lambda) {
        return Err(ParabolicError::NoTrueHom(mu.clone(), lambda.clone()));
    }
    for a in spec.uncrossed_simple_roots() {
        let s = affine_reflect(spec.algebra, &a, lambda)?;
        if true_verma_hom_exists(spec, mu, &s) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Source of homomorphisms beyond the standard ones.
pub trait HomEvidence {
    /// Dimension of the space of singular vectors of weight `mu` in M_p(lambda).
    fn extremal_dimension(&self, spec: &ParabolicSpec, lambda: &Weight, mu: &Weight) -> Result<usize, String>;
}

/// BGG graph on the singular orbit of lambda. Hasse arrows without a nonzero
/// standard map are confirmed by `evidence` when given, otherwise they are
/// kept as conjectural.
pub fn bgg_graph(
    spec: &ParabolicSpec,
    lambda: &Weight,
    evidence: Option<&dyn HomEvidence>,
) -> Result<LabeledGraph, ParabolicError> {
    let hasse = singular_hasse_graph(spec, lambda)?;
    let n = hasse.vertices.len();
    let w = |i: usize| &hasse.vertices[i].weight;
    let mut kinds: HashMap<(usize, usize), EdgeKind> = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || operator_order(spec, w(a), w(b)) <= Rational64::from_integer(0) {
                continue;
            }
            if true_verma_hom_exists(spec, w(b), w(a)) && !standard_map_is_zero(spec, w(b), w(a))? {
                kinds.insert((a, b), EdgeKind::Standard);
            }
        }
    }
    for e in &hasse.arrows {
        if kinds.contains_key(&(e.from, e.to)) {
            continue;
        }
        let kind = match evidence {
            Some(ev) => {
                let dim = ev.extremal_dimension(spec, w(e.from), w(e.to)).map_err(ParabolicError::Evidence)?;
                if dim == 0 {
                    continue;
                }
                EdgeKind::Nonstandard
            }
            None => EdgeKind::Conjectural,
        };
        kinds.insert((e.from, e.to), kind);
    }
    // drop arrows that factor through a longer path; orders strictly drop so this is a DAG
    let succ = |v: usize| kinds.keys().filter(move |(a, _)| *a == v).map(|(_, b)| *b);
    let mut arrows: Vec<Arrow> = Vec::new();
    for (&(a, b), &kind) in &kinds {
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = succ(a).filter(|&c| c != b).collect();
        let mut factors = false;
        while let Some(c) = stack.pop() {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            if kinds.contains_key(&(c, b)) {
                factors = true;
                break;
            }
            stack.extend(succ(c));
        }
        if !factors {
            arrows.push(Arrow { from: a, to: b, order: int_order(spec, w(a), w(b)), kind: Some(kind) });
        }
    }
    arrows.sort();
    Ok(LabeledGraph { spec: *spec, lambda: Some(lambda.clone()), vertices: hasse.vertices, arrows })
}
