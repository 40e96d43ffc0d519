use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::weight::Weight;
use crate::LieError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Series {
    B,
    D,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Series::B => "B",
            Series::D => "D",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraSpec {
    pub series: Series,
    pub rank: usize,
}

impl AlgebraSpec {
    pub fn new(series: Series, rank: usize) -> Result<Self, LieError> {
        let min = match series {
            Series::B => 1,
            Series::D => 2,
        };
        if rank < min {
            return Err(LieError::RankOutOfRange { series, rank });
        }
        Ok(AlgebraSpec { series, rank })
    }

    pub fn b(rank: usize) -> Self {
        Self::new(Series::B, rank).expect("valid B rank")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Series::D, rank).expect("valid D rank")
    }

    pub fn matrix_size(&self) -> usize {
        match self.series {
            Series::B => 2 * self.rank + 1,
            Series::D => 2 * self.rank,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let m = self.rank;
        match self.series {
            Series::B => m * m,
            Series::D => m * (m - 1),
        }
    }

    pub fn dimension(&self) -> usize {
        self.rank + 2 * self.num_positive_roots()
    }

    /// Half sum of the positive roots.
    pub fn delta(&self) -> Weight {
        let m = self.rank as i64;
        match self.series {
            Series::D => Weight::from_ints(&(0..m).map(|i| m - 1 - i).collect::<Vec<_>>()),
            Series::B => Weight::halves(&(0..m).map(|i| 2 * (m - i) - 1).collect::<Vec<_>>()),
        }
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        let m = self.rank;
        let mut out = Vec::with_capacity(m);
        for i in 0..m - 1 {
            out.push(&Weight::unit(m, i) - &Weight::unit(m, i + 1));
        }
        match self.series {
            Series::B => out.push(Weight::unit(m, m - 1)),
            Series::D => {
                // Node m-1 carries e_{m-1} + e_m so that the fundamental weights
                // read 1/2[1,...,1] (node m-1) and 1/2[1,...,1,-1] (node m).
                out[m - 2] = &Weight::unit(m, m - 2) + &Weight::unit(m, m - 1);
                out.push(&Weight::unit(m, m - 2) - &Weight::unit(m, m - 1));
            }
        }
        out
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let m = self.rank;
        let ones = |j: usize| {
            Weight::from_ints(&(0..m).map(|i| if i < j { 1 } else { 0 }).collect::<Vec<_>>())
        };
        let mut out = Vec::with_capacity(m);
        match self.series {
            Series::B => {
                for j in 1..m {
                    out.push(ones(j));
                }
                out.push(Weight::halves(&vec![1; m]));
            }
            Series::D => {
                for j in 1..m.saturating_sub(1) {
                    out.push(ones(j));
                }
                out.push(Weight::halves(&vec![1; m]));
                let mut t = vec![1; m];
                t[m - 1] = -1;
                out.push(Weight::halves(&t));
            }
        }
        out
    }

    /// Positive roots in the order of their raising generators.
    pub fn positive_roots(&self) -> Vec<Weight> {
        self.raise_positions().into_iter().map(|(i, j)| self.root_at(i, j)).collect()
    }

    /// 1-based positions `(i, j)`, `i < j`, `i + j <= N`, in lexicographic order.
    fn raise_positions(&self) -> Vec<(usize, usize)> {
        let n = self.matrix_size();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if i + j <= n {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Root of the raising generator at 1-based position `(i, j)`.
    fn root_at(&self, i: usize, j: usize) -> Weight {
        let m = self.rank;
        let n = self.matrix_size();
        let e = |a: usize| Weight::unit(m, a - 1);
        if j <= m {
            return &e(i) - &e(j);
        }
        match self.series {
            Series::B if j == m + 1 => e(i),
            _ => &e(i) + &e(n + 1 - j),
        }
    }

    /// The matrix `E_{ij} - E_{N+1-j, N+1-i}`.
    pub fn elementary(&self, i: usize, j: usize) -> Matrix {
        let n = self.matrix_size();
        let mut mat = Matrix::zero(n);
        mat.add_entry(i, j, Rational64::one());
        mat.add_entry(n + 1 - j, n + 1 - i, -Rational64::one());
        mat
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GenKind {
    Cartan,
    Raise,
    Lower,
}

/// A basis element of the algebra, indexed by its matrix position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GeneratorId {
    pub kind: GenKind,
    pub i: usize,
    pub j: usize,
}

impl GeneratorId {
    pub fn x(i: usize, j: usize) -> Self {
        GeneratorId { kind: GenKind::Raise, i, j }
    }
    pub fn y(i: usize, j: usize) -> Self {
        GeneratorId { kind: GenKind::Lower, i, j }
    }
    pub fn h(i: usize) -> Self {
        GeneratorId { kind: GenKind::Cartan, i, j: i }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Cartan => write!(f, "h[{}]", self.i),
            GenKind::Raise => write!(f, "x[{},{}]", self.i, self.j),
            GenKind::Lower => write!(f, "y[{},{}]", self.i, self.j),
        }
    }
}

/// Generator table with exact structure constants.
#[derive(Debug)]
pub struct Algebra {
    spec: AlgebraSpec,
    gens: Vec<GeneratorId>,
    roots: Vec<Weight>,
    index: HashMap<GeneratorId, usize>,
    by_position: HashMap<(usize, usize), usize>,
    by_root: HashMap<Weight, usize>,
    brackets: Vec<Vec<(usize, i64)>>,
}

impl Algebra {
    /// Cartan elements first, then raising generators, then lowering ones.
    pub fn build(spec: AlgebraSpec) -> Result<Self, LieError> {
        let spec = AlgebraSpec::new(spec.series, spec.rank)?;
        let m = spec.rank;
        let mut gens = Vec::with_capacity(spec.dimension());
        let mut roots = Vec::with_capacity(spec.dimension());
        for i in 1..=m {
            gens.push(GeneratorId::h(i));
            roots.push(Weight::zero(m));
        }
        let pos = spec.raise_positions();
        for &(i, j) in &pos {
            gens.push(GeneratorId::x(i, j));
            roots.push(spec.root_at(i, j));
        }
        for &(i, j) in &pos {
            gens.push(GeneratorId::y(j, i));
            roots.push(-&spec.root_at(i, j));
        }
        let index: HashMap<_, _> = gens.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let by_position = gens.iter().enumerate().map(|(k, g)| ((g.i, g.j), k)).collect();
        let by_root = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.kind != GenKind::Cartan)
            .map(|(k, _)| (roots[k].clone(), k))
            .collect();
        let mut alg = Algebra { spec, gens, roots, index, by_position, by_root, brackets: Vec::new() };
        alg.brackets = alg.structure_constants();
        Ok(alg)
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.gens
    }

    pub fn generator(&self, idx: usize) -> GeneratorId {
        self.gens[idx]
    }

    pub fn index_of(&self, g: &GeneratorId) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index of `g`, or an error naming it.
    pub fn require(&self, g: &GeneratorId) -> Result<usize, LieError> {
        self.index_of(g).ok_or(LieError::UnknownGenerator(*g))
    }

    pub fn root(&self, idx: usize) -> &Weight {
        &self.roots[idx]
    }

    /// Generator whose root is `r` (never a Cartan element).
    pub fn generator_for_root(&self, r: &Weight) -> Option<usize> {
        self.by_root.get(r).copied()
    }

    pub fn kind(&self, idx: usize) -> GenKind {
        self.gens[idx].kind
    }

    pub fn matrix(&self, idx: usize) -> Matrix {
        let g = self.gens[idx];
        match g.kind {
            GenKind::Cartan => self.spec.elementary(g.i, g.i),
            _ => self.spec.elementary(g.i, g.j),
        }
    }

    /// Expansion of `[g_a, g_b]` in the generator basis.
    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.brackets[a * self.len() + b]
    }

    pub fn bracket_matrix(a: &Matrix, b: &Matrix) -> Result<Matrix, LieError> {
        a.commutator(b)
    }

    /// Exact expansion of an algebra element in the generator basis.
    pub fn decompose(&self, m: &Matrix) -> Result<Vec<(GeneratorId, Rational64)>, LieError> {
        let n = self.spec.matrix_size();
        if m.size() != n {
            return Err(LieError::SizeMismatch(m.size(), n));
        }
        let mut out = Vec::new();
        let mut rebuilt = Matrix::zero(n);
        for (k, g) in self.gens.iter().enumerate() {
            let c = m.get(g.i, g.j);
            if !c.is_zero() {
                out.push((*g, c));
                rebuilt = rebuilt.add(&self.matrix(k).scale(c));
            }
        }
        if &rebuilt != m {
            return Err(LieError::NotInAlgebra);
        }
        Ok(out)
    }

    fn sparse(&self, idx: usize) -> Vec<(usize, usize, i64)> {
        let g = self.gens[idx];
        let n = self.spec.matrix_size();
        let (i, j) = (g.i, g.j);
        vec![(i, j, 1), (n + 1 - j, n + 1 - i, -1)]
    }

    fn structure_constants(&self) -> Vec<Vec<(usize, i64)>> {
        let d = self.len();
        let sp: Vec<_> = (0..d).map(|k| self.sparse(k)).collect();
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let mut acc: HashMap<(usize, usize), i64> = HashMap::new();
                for &(r1, c1, v1) in &sp[a] {
                    for &(r2, c2, v2) in &sp[b] {
                        if c1 == r2 {
                            *acc.entry((r1, c2)).or_insert(0) += v1 * v2;
                        }
                        if c2 == r1 {
                            *acc.entry((r2, c1)).or_insert(0) -= v1 * v2;
                        }
                    }
                }
                let mut combo: Vec<(usize, i64)> = acc
                    .into_iter()
                    .filter(|(_, v)| *v != 0)
                    .filter_map(|(p, v)| self.by_position.get(&p).map(|k| (*k, v)))
                    .collect();
                combo.sort_unstable();
                table.push(combo);
            }
        }
        table
    }
}

/// Evaluation of weights against the grading element of a single crossed node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradingElement {
    pub spec: AlgebraSpec,
    pub k: usize,
}

impl GradingElement {
    /// `sigma` holds 1-based simple root indices; exactly one is supported.
    pub fn new(spec: AlgebraSpec, sigma: &[usize]) -> Result<Self, LieError> {
        if sigma.len() != 1 {
            return Err(LieError::CrossedNodes(sigma.len()));
        }
        let k = sigma[0];
        if k == 0 || k > spec.rank {
            return Err(LieError::CrossOutOfRange { k, rank: spec.rank });
        }
        Ok(GradingElement { spec, k })
    }

    /// The fundamental coweight of node `k`, as a doubled vector.
    fn coweight_twice(&self) -> Vec<i64> {
        let m = self.spec.rank;
        let k = self.k;
        match self.spec.series {
            Series::D if k + 1 == m => vec![1; m],
            Series::D if k == m => (0..m).map(|i| if i + 1 == m { -1 } else { 1 }).collect(),
            _ => (0..m).map(|i| if i < k { 2 } else { 0 }).collect(),
        }
    }

    /// `w(E)`; for `k <= m - 2` this is `a_1 + ... + a_k`.
    pub fn eval(&self, w: &Weight) -> Rational64 {
        let e = self.coweight_twice();
        let s: i64 = e.iter().zip(w.twice()).map(|(a, b)| a * b).sum();
        Rational64::new(s, 4)
    }

    /// Degree of a generator in the induced grading.
    pub fn degree(&self, alg: &Algebra, idx: usize) -> i64 {
        self.eval(alg.root(idx)).to_integer()
    }

    /// `diag(1^k, 0, ..., 0, -1^k)` when `k <= m - 2`.
    pub fn matrix(&self) -> Matrix {
        let n = self.spec.matrix_size();
        let mut m = Matrix::zero(n);
        for (i, t) in self.coweight_twice().into_iter().enumerate() {
            let v = Rational64::new(t, 2);
            m.add_entry(i + 1, i + 1, v);
            m.add_entry(n - i, n - i, -v);
        }
        m
    }
}
