//! Generalized Verma modules `M_p(lambda) = U(g_-) (x) L(lambda)` with exact
//! coefficients, and the singular vectors that give homomorphisms between them.
//!
//! Lowering generators are numbered by PBW position: grading degree ascending
//! (so `g_{-2}` comes first), then matrix position `(i, j)` descending. A
//! monomial is a nondecreasing list of positions. `L(lambda)` is the quotient of
//! the `g_0` Verma module by the span of `u Y_a^{<lambda,H_a>+1} v`.

pub mod linalg;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use liealg::{coroot_pairing, Algebra, GenKind, GeneratorId, LieError, Weight, Q};
use num_traits::{One, Signed, Zero};
use parabolic::{is_p_dominant, is_p_integral, HomEvidence, ParabolicSpec};

pub type Mono = Vec<u16>;

#[derive(Debug, thiserror::Error)]
pub enum VermaError {
    #[error("{0} is not p-dominant")]
    NotDominant(Weight),
    #[error("{0} is not p-integral")]
    NotIntegral(Weight),
    #[error("vector is not a weight vector")]
    Inhomogeneous,
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: Weight, found: Weight },
    #[error("solution fails to be annihilated by {0}")]
    NotSingular(GeneratorId),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `mono (x) basis[idx]` of `L(lambda)_nu`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub mono: Mono,
    pub nu: Weight,
    pub idx: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VermaVector {
    pub terms: BTreeMap<TermKey, Q>,
}

impl VermaVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: TermKey) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, Q::one());
        VermaVector { terms }
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

    pub fn add_term(&mut self, key: TermKey, c: &Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &VermaVector, c: &Q) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn scaled(&self, c: &Q) -> VermaVector {
        let mut out = VermaVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    /// Divide by the first coefficient.
    pub fn normalized(&self) -> VermaVector {
        match self.terms.values().next() {
            Some(c) => self.scaled(&(Q::one() / c)),
            None => self.clone(),
        }
    }

    /// Equal up to a nonzero scalar.
    pub fn proportional(&self, other: &VermaVector) -> bool {
        self.normalized() == other.normalized()
    }
}

/// Weight space of the inducing module.
#[derive(Debug)]
pub struct LSpace {
    pub nu: Weight,
    /// representative `Y` monomials, shortest first
    pub basis: Vec<Mono>,
    reduce: HashMap<Mono, Vec<(usize, Q)>>,
}

impl LSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Class of `mono v_lambda` in this weight space.
    pub fn reduce(&self, mono: &Mono) -> &[(usize, Q)] {
        self.reduce.get(mono).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

#[derive(Debug)]
pub struct ExtremalSolution {
    pub lambda: Weight,
    pub mu: Weight,
    pub candidates: Vec<TermKey>,
    pub basis: Vec<VermaVector>,
}

impl ExtremalSolution {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

type Combo = Vec<(Mono, i64)>;
type TermCombo = Vec<(TermKey, Q)>;

/// `M_p(lambda)` for one crossed node.
pub struct VermaModule {
    spec: ParabolicSpec,
    alg: Algebra,
    lambda: Weight,
    degree: Vec<i64>,
    /// generator index -> PBW position (lowering generators only)
    pos_of: Vec<Option<u16>>,
    /// PBW position -> generator index
    gen_at: Vec<usize>,
    /// simple coordinates of minus the root, per position
    depth: Vec<Vec<i64>>,
    lmul: Mutex<HashMap<(u16, Mono), Arc<Combo>>>,
    lspaces: Mutex<HashMap<Weight, Arc<LSpace>>>,
    g0: Mutex<HashMap<(usize, Mono), Arc<Vec<(Mono, Q)>>>>,
    acts: Mutex<HashMap<(usize, TermKey), Arc<TermCombo>>>,
}

fn simple_coords_int(spec: &ParabolicSpec, v: &Weight) -> Option<Vec<i64>> {
    weyl::simple_coords(spec.algebra, v).iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

impl VermaModule {
    pub fn new(spec: ParabolicSpec, lambda: Weight) -> Result<Self, VermaError> {
        if !is_p_dominant(&spec, &lambda) {
            return Err(VermaError::NotDominant(lambda));
        }
        if !is_p_integral(&spec, &lambda) {
            return Err(VermaError::NotIntegral(lambda));
        }
        let alg = Algebra::build(spec.algebra)?;
        let grading = spec.grading();
        let degree: Vec<i64> = (0..alg.len()).map(|i| grading.degree(&alg, i)).collect();
        let mut lowering: Vec<usize> = (0..alg.len()).filter(|&i| alg.kind(i) == GenKind::Lower).collect();
        lowering.sort_by_key(|&i| {
            let g = alg.generator(i);
            (degree[i], std::cmp::Reverse((g.i, g.j)))
        });
        let mut pos_of = vec![None; alg.len()];
        for (p, &i) in lowering.iter().enumerate() {
            pos_of[i] = Some(p as u16);
        }
        let depth = lowering.iter().map(|&i| simple_coords_int(&spec, &-alg.root(i)).expect("root")).collect();
        Ok(VermaModule {
            spec,
            alg,
            lambda,
            degree,
            pos_of,
            gen_at: lowering,
            depth,
            lmul: Mutex::default(),
            lspaces: Mutex::default(),
            g0: Mutex::default(),
            acts: Mutex::default(),
        })
    }

    pub fn spec(&self) -> &ParabolicSpec {
        &self.spec
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn position(&self, g: &GeneratorId) -> Option<u16> {
        self.alg.index_of(g).and_then(|i| self.pos_of[i])
    }

    pub fn generator_at(&self, pos: u16) -> GeneratorId {
        self.alg.generator(self.gen_at[pos as usize])
    }

    fn mono_root(&self, mono: &[u16]) -> Weight {
        mono.iter().fold(Weight::zero(self.lambda.rank()), |acc, &p| &acc + self.alg.root(self.gen_at[p as usize]))
    }

    pub fn weight_of_term(&self, key: &TermKey) -> Weight {
        &self.mono_root(&key.mono) + &key.nu
    }

    /// Common weight of all terms; `None` for the zero vector.
    pub fn weight_of(&self, v: &VermaVector) -> Result<Option<Weight>, VermaError> {
        let mut it = v.terms.keys().map(|k| self.weight_of_term(k));
        let Some(w) = it.next() else { return Ok(None) };
        if it.any(|x| x != w) {
            return Err(VermaError::Inhomogeneous);
        }
        Ok(Some(w))
    }

    /// `1 (x) v_lambda`.
    pub fn highest(&self) -> VermaVector {
        VermaVector::term(TermKey { mono: vec![], nu: self.lambda.clone(), idx: 0 })
    }

    // ---- straightening inside U(n^-)

    /// `g * mono` rewritten in PBW order; `g` is a lowering position.
    fn left_mul(&self, p: u16, mono: &[u16]) -> Arc<Combo> {
        if mono.first().is_none_or(|&f| p <= f) {
            let mut m = Vec::with_capacity(mono.len() + 1);
            m.push(p);
            m.extend_from_slice(mono);
            return Arc::new(vec![(m, 1)]);
        }
        let key = (p, mono.to_vec());
        if let Some(r) = self.lmul.lock().unwrap().get(&key) {
            return r.clone();
        }
        let y1 = mono[0];
        let rest = &mono[1..];
        let mut acc: HashMap<Mono, i64> = HashMap::new();
        for (m, c) in self.left_mul(p, rest).iter() {
            for (m2, c2) in self.left_mul(y1, m).iter() {
                *acc.entry(m2.clone()).or_default() += c.checked_mul(*c2).expect("overflow");
            }
        }
        for &(z, cz) in self.alg.bracket(self.gen_at[p as usize], self.gen_at[y1 as usize]) {
            let pz = self.pos_of[z].expect("lowering brackets stay lowering");
            for (m, c) in self.left_mul(pz, rest).iter() {
                *acc.entry(m.clone()).or_default() += cz.checked_mul(*c).expect("overflow");
            }
        }
        let mut out: Combo = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort();
        let out = Arc::new(out);
        self.lmul.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Product of a word (applied right to left) with a monomial.
    fn word_times(&self, word: &[u16], mono: &[u16]) -> Combo {
        let mut cur: HashMap<Mono, i64> = HashMap::from([(mono.to_vec(), 1)]);
        for &p in word.iter().rev() {
            let mut next: HashMap<Mono, i64> = HashMap::new();
            for (m, c) in &cur {
                for (m2, c2) in self.left_mul(p, m).iter() {
                    *next.entry(m2.clone()).or_default() += c * c2;
                }
            }
            next.retain(|_, c| *c != 0);
            cur = next;
        }
        cur.into_iter().collect()
    }

    // ---- the inducing module

    /// Nondecreasing monomials of positions in `allowed` whose minus-root sums to `target` (simple coordinates).
    fn monomials_with_depth(&self, allowed: &[u16], target: &[i64]) -> Vec<Mono> {
        fn go(me: &VermaModule, allowed: &[u16], start: usize, rem: &mut Vec<i64>, cur: &mut Mono, out: &mut Vec<Mono>) {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
                return;
            }
            for s in start..allowed.len() {
                let d = &me.depth[allowed[s] as usize];
                if d.iter().zip(rem.iter()).any(|(a, b)| a > b) {
                    continue;
                }
                for (r, a) in rem.iter_mut().zip(d) {
                    *r -= a;
                }
                cur.push(allowed[s]);
                go(me, allowed, s, rem, cur, out);
                cur.pop();
                for (r, a) in rem.iter_mut().zip(d) {
                    *r += a;
                }
            }
        }
        let mut out = Vec::new();
        if target.iter().any(|&x| x < 0) {
            return out;
        }
        go(self, allowed, 0, &mut target.to_vec(), &mut Vec::new(), &mut out);
        out
    }

    fn y_positions(&self) -> Vec<u16> {
        (0..self.gen_at.len() as u16).filter(|&p| self.degree[self.gen_at[p as usize]] == 0).collect()
    }

    fn minus_positions(&self) -> Vec<u16> {
        (0..self.gen_at.len() as u16).filter(|&p| self.degree[self.gen_at[p as usize]] < 0).collect()
    }

    /// `lambda - nu` in simple coordinates if it lies in the `g_0` cone.
    fn g0_depth(&self, nu: &Weight) -> Option<Vec<i64>> {
        let c = simple_coords_int(&self.spec, &(&self.lambda - nu))?;
        (c.iter().all(|&x| x >= 0) && c[self.spec.k - 1] == 0).then_some(c)
    }

    pub fn l_space(&self, nu: &Weight) -> Arc<LSpace> {
        if let Some(s) = self.lspaces.lock().unwrap().get(nu) {
            return s.clone();
        }
        let space = Arc::new(self.build_l_space(nu));
        self.lspaces.lock().unwrap().insert(nu.clone(), space.clone());
        space
    }

    pub fn l_dim(&self, nu: &Weight) -> usize {
        self.l_space(nu).dim()
    }

    fn build_l_space(&self, nu: &Weight) -> LSpace {
        let empty = || LSpace { nu: nu.clone(), basis: vec![], reduce: HashMap::new() };
        let Some(target) = self.g0_depth(nu) else { return empty() };
        let ys = self.y_positions();
        let mut cols = self.monomials_with_depth(&ys, &target);
        if cols.is_empty() {
            return empty();
        }
        cols.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let col_of: HashMap<&Mono, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let sr = self.spec.algebra.simple_roots();
        for (a, alpha) in sr.iter().enumerate() {
            if a + 1 == self.spec.k {
                continue;
            }
            let c = coroot_pairing(&self.lambda, alpha).expect("root").to_integer() + 1;
            let pa = self.pos_of[self.alg.generator_for_root(&-alpha).expect("root")].expect("lowering");
            let mut rem = target.clone();
            rem[a] -= c;
            let base: Mono = vec![pa; c as usize];
            for u in self.monomials_with_depth(&ys, &rem) {
                let mut row = vec![Q::zero(); cols.len()];
                for (m, k) in self.word_times(&u, &base) {
                    row[col_of[&m]] += Q::from_integer(k.into());
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let pivots = linalg::rref(&mut rows, cols.len());
        let mut free: Vec<usize> = (0..cols.len()).filter(|c| !pivots.contains(c)).collect();
        free.sort_by(|&a, &b| cols[a].len().cmp(&cols[b].len()).then(cols[a].cmp(&cols[b])));
        let basis: Vec<Mono> = free.iter().map(|&c| cols[c].clone()).collect();
        let slot: HashMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut reduce = HashMap::new();
        for (&c, &i) in &slot {
            reduce.insert(cols[c].clone(), vec![(i, Q::one())]);
        }
        for (row, &p) in rows.iter().zip(&pivots) {
            let coords: Vec<(usize, Q)> =
                free.iter().filter(|&&f| !row[f].is_zero()).map(|&f| (slot[&f], -row[f].clone())).collect();
            reduce.insert(cols[p].clone(), coords);
        }
        LSpace { nu: nu.clone(), basis, reduce }
    }

    /// `g (mono v)` in the `g_0` Verma module, for `g` of degree zero.
    fn g0_act_mono(&self, g: usize, mono: &[u16]) -> Arc<Vec<(Mono, Q)>> {
        let key = (g, mono.to_vec());
        if let Some(r) = self.g0.lock().unwrap().get(&key) {
            return r.clone();
        }
        let out: Vec<(Mono, Q)> = match self.alg.kind(g) {
            GenKind::Lower => {
                self.left_mul(self.pos_of[g].unwrap(), mono).iter().map(|(m, c)| (m.clone(), Q::from_integer((*c).into()))).collect()
            }
            GenKind::Cartan => {
                let i = self.alg.generator(g).i - 1;
                let c = rat((&self.lambda + &self.mono_root(mono)).coord(i));
                if c.is_zero() {
                    vec![]
                } else {
                    vec![(mono.to_vec(), c)]
                }
            }
            GenKind::Raise => {
                if mono.is_empty() {
                    vec![]
                } else {
                    let y1 = mono[0];
                    let rest = &mono[1..];
                    let mut acc: HashMap<Mono, Q> = HashMap::new();
                    for (m, c) in self.g0_act_mono(g, rest).iter() {
                        for (m2, c2) in self.left_mul(y1, m).iter() {
                            *acc.entry(m2.clone()).or_insert_with(Q::zero) += c * Q::from_integer((*c2).into());
                        }
                    }
                    for &(z, cz) in self.alg.bracket(g, self.gen_at[y1 as usize]) {
                        for (m, c) in self.g0_act_mono(z, rest).iter() {
                            *acc.entry(m.clone()).or_insert_with(Q::zero) += c * Q::from_integer(cz.into());
                        }
                    }
                    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
                }
            }
        };
        let out = Arc::new(out);
        self.g0.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Action of a degree-zero generator on a basis vector of `L(lambda)_nu`.
    pub fn act_on_l(&self, g: usize, nu: &Weight, idx: usize) -> Vec<(Weight, usize, Q)> {
        let src = self.l_space(nu);
        let target = nu + self.alg.root(g);
        let dst = self.l_space(&target);
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (m, c) in self.g0_act_mono(g, &src.basis[idx]).iter() {
            for (i, r) in dst.reduce(m) {
                *acc.entry(*i).or_insert_with(Q::zero) += c * r;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (target.clone(), i, c)).collect()
    }

    // ---- the parabolic Verma module

    fn act_term(&self, g: usize, key: &TermKey) -> Arc<TermCombo> {
        let ck = (g, key.clone());
        if let Some(r) = self.acts.lock().unwrap().get(&ck) {
            return r.clone();
        }
        let mut acc: BTreeMap<TermKey, Q> = BTreeMap::new();
        let mut push = |k: TermKey, c: Q| {
            *acc.entry(k).or_insert_with(Q::zero) += c;
        };
        let deg = self.degree[g];
        if self.alg.kind(g) == GenKind::Cartan {
            let c = rat(self.weight_of_term(key).coord(self.alg.generator(g).i - 1));
            push(key.clone(), c);
        } else if deg < 0 {
            for (m, c) in self.left_mul(self.pos_of[g].unwrap(), &key.mono).iter() {
                push(TermKey { mono: m.clone(), nu: key.nu.clone(), idx: key.idx }, Q::from_integer((*c).into()));
            }
        } else if key.mono.is_empty() {
            if deg == 0 {
                for (nu, idx, c) in self.act_on_l(g, &key.nu, key.idx) {
                    push(TermKey { mono: vec![], nu, idx }, c);
                }
            }
        } else {
            let y1 = key.mono[0];
            let rest = TermKey { mono: key.mono[1..].to_vec(), nu: key.nu.clone(), idx: key.idx };
            for (k, c) in self.act_term(g, &rest).iter() {
                for (m2, c2) in self.left_mul(y1, &k.mono).iter() {
                    push(TermKey { mono: m2.clone(), nu: k.nu.clone(), idx: k.idx }, c * Q::from_integer((*c2).into()));
                }
            }
            for &(z, cz) in self.alg.bracket(g, self.gen_at[y1 as usize]) {
                for (k, c) in self.act_term(z, &rest).iter() {
                    push(k.clone(), c * Q::from_integer(cz.into()));
                }
            }
        }
        let out: TermCombo = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let out = Arc::new(out);
        self.acts.lock().unwrap().insert(ck, out.clone());
        out
    }

    pub fn act_index(&self, g: usize, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (k, c) in &v.terms {
            for (k2, c2) in self.act_term(g, k).iter() {
                out.add_term(k2.clone(), &(c * c2));
            }
        }
        out
    }

    pub fn act(&self, g: &GeneratorId, v: &VermaVector) -> Result<VermaVector, VermaError> {
        Ok(self.act_index(self.alg.require(g)?, v))
    }

    /// Apply a word written left to right, so the rightmost letter acts first.
    pub fn act_word(&self, word: &[GeneratorId], v: &VermaVector) -> Result<VermaVector, VermaError> {
        let mut cur = v.clone();
        for g in word.iter().rev() {
            cur = self.act(g, &cur)?;
        }
        Ok(cur)
    }

    /// Apply `sum c_i word_i`.
    pub fn act_element(&self, element: &[(Q, Vec<GeneratorId>)], v: &VermaVector) -> Result<VermaVector, VermaError> {
        let mut out = VermaVector::zero();
        for (c, w) in element {
            out.add_scaled(&self.act_word(w, v)?, c);
        }
        Ok(out)
    }

    /// Basis of `M_p(lambda)_mu` as single terms, in sorted order.
    pub fn weight_space_basis(&self, mu: &Weight) -> Vec<TermKey> {
        let Some(target) = simple_coords_int(&self.spec, &(&self.lambda - mu)) else { return vec![] };
        if target.iter().any(|&x| x < 0) {
            return vec![];
        }
        let k = self.spec.k - 1;
        let gm = self.minus_positions();
        let mut out = Vec::new();
        // choose the g_- part exhausting the crossed coordinate; the rest lives in L
        fn go(me: &VermaModule, gm: &[u16], start: usize, k: usize, rem: &mut Vec<i64>, cur: &mut Mono, out: &mut Vec<(Mono, Vec<i64>)>) {
            if rem[k] == 0 {
                out.push((cur.clone(), rem.clone()));
                return;
            }
            for s in start..gm.len() {
                let d = &me.depth[gm[s] as usize];
                if d.iter().zip(rem.iter()).any(|(a, b)| a > b) {
                    continue;
                }
                for (r, a) in rem.iter_mut().zip(d) {
                    *r -= a;
                }
                cur.push(gm[s]);
                go(me, gm, s, k, rem, cur, out);
                cur.pop();
                for (r, a) in rem.iter_mut().zip(d) {
                    *r += a;
                }
            }
        }
        let mut splits = Vec::new();
        go(self, &gm, 0, k, &mut target.clone(), &mut Vec::new(), &mut splits);
        for (mono, _) in splits {
            let nu = mu - &self.mono_root(&mono);
            let dim = self.l_dim(&nu);
            for idx in 0..dim {
                out.push(TermKey { mono: mono.clone(), nu: nu.clone(), idx });
            }
        }
        out.sort();
        out
    }

    /// Singular vectors of weight `mu`.
    pub fn extremal_vectors(&self, mu: &Weight) -> Result<ExtremalSolution, VermaError> {
        let candidates = self.weight_space_basis(mu);
        let n = candidates.len();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let mut row_of: HashMap<TermKey, usize> = HashMap::new();
        for alpha in self.spec.algebra.simple_roots() {
            let g = self.alg.generator_for_root(&alpha).expect("root");
            row_of.clear();
            let start = rows.len();
            for (j, key) in candidates.iter().enumerate() {
                for (k, c) in self.act_term(g, key).iter() {
                    let r = *row_of.entry(k.clone()).or_insert_with(|| {
                        rows.push(vec![Q::zero(); n]);
                        rows.len() - 1
                    });
                    debug_assert!(r >= start);
                    rows[r][j] += c;
                }
            }
        }
        let kernel = linalg::nullspace(rows, n);
        let basis: Vec<VermaVector> = kernel
            .iter()
            .map(|coef| {
                let mut v = VermaVector::zero();
                for (key, c) in candidates.iter().zip(coef) {
                    v.add_term(key.clone(), c);
                }
                v
            })
            .collect();
        for v in &basis {
            for g in 0..self.alg.len() {
                if self.alg.kind(g) == GenKind::Raise && !self.act_index(g, v).is_zero() {
                    return Err(VermaError::NotSingular(self.alg.generator(g)));
                }
            }
        }
        Ok(ExtremalSolution { lambda: self.lambda.clone(), mu: mu.clone(), candidates, basis })
    }

    /// Whether `v` is killed by every raising generator.
    pub fn is_singular(&self, v: &VermaVector) -> bool {
        (0..self.alg.len()).filter(|&g| self.alg.kind(g) == GenKind::Raise).all(|g| self.act_index(g, v).is_zero())
    }

    /// The `U(g)` word behind a term: `g_-` factors then the `L` representative.
    pub fn term_word(&self, key: &TermKey) -> Vec<GeneratorId> {
        let l = self.l_space(&key.nu);
        key.mono.iter().chain(l.basis[key.idx].iter()).map(|&p| self.generator_at(p)).collect()
    }

    /// Image of `u (x) v_mu` under the homomorphism `M_p(mu) -> M_p(lambda)` given by `ext`.
    pub fn hom_apply(&self, ext: &VermaVector, u: &[GeneratorId]) -> Result<VermaVector, VermaError> {
        self.act_word(u, ext)
    }

    /// `g_-` factors and `L` representative factors of a term, left to right.
    pub fn term_factors(&self, key: &TermKey) -> (Vec<GeneratorId>, Vec<GeneratorId>) {
        let l = self.l_space(&key.nu);
        let lower = key.mono.iter().map(|&p| self.generator_at(p)).collect();
        let levi = l.basis[key.idx].iter().map(|&p| self.generator_at(p)).collect();
        (lower, levi)
    }

    pub fn render_term(&self, key: &TermKey) -> String {
        let (lower, levi) = self.term_factors(key);
        let mut parts: Vec<String> = lower.into_iter().map(|g| render_gen(g, true)).collect();
        parts.extend(levi.into_iter().map(|g| render_gen(g, false)));
        if parts.is_empty() {
            "v".to_string()
        } else {
            format!("{} v", parts.join("*"))
        }
    }

    pub fn render(&self, v: &VermaVector) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (k, c)) in v.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if !a.is_one() {
                s.push_str(&format!("{a}*"));
            }
            s.push_str(&self.render_term(k));
        }
        s
    }
}

fn render_gen(g: GeneratorId, lower_case: bool) -> String {
    format!("{}[{},{}]", if lower_case { 'y' } else { 'Y' }, g.i, g.j)
}

fn rat(c: liealg::Rational64) -> Q {
    Q::new((*c.numer()).into(), (*c.denom()).into())
}

/// Image under `outer: M_p(mu) -> M_p(lambda)` of the singular vector `inner` in `M_p(mu)`.
pub fn compose(
    outer_module: &VermaModule,
    outer: &VermaVector,
    inner_module: &VermaModule,
    inner: &VermaVector,
) -> Result<VermaVector, VermaError> {
    match outer_module.weight_of(outer)? {
        Some(w) if &w != inner_module.lambda() => {
            return Err(VermaError::WeightMismatch { expected: inner_module.lambda().clone(), found: w })
        }
        None => return Ok(VermaVector::zero()),
        _ => {}
    }
    let mut out = VermaVector::zero();
    for (key, c) in &inner.terms {
        let word = inner_module.term_word(key);
        out.add_scaled(&outer_module.act_word(&word, outer)?, c);
    }
    Ok(out)
}

pub fn compose_is_zero(
    outer_module: &VermaModule,
    outer: &VermaVector,
    inner_module: &VermaModule,
    inner: &VermaVector,
) -> Result<(bool, VermaVector), VermaError> {
    let r = compose(outer_module, outer, inner_module, inner)?;
    Ok((r.is_zero(), r))
}

/// Solver-backed evidence for nonstandard arrows.
#[derive(Default)]
pub struct ExtremalEvidence {
    modules: Mutex<HashMap<(ParabolicSpec, Weight), Arc<VermaModule>>>,
}

impl ExtremalEvidence {
    pub fn module(&self, spec: &ParabolicSpec, lambda: &Weight) -> Result<Arc<VermaModule>, VermaError> {
        let key = (*spec, lambda.clone());
        if let Some(m) = self.modules.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let m = Arc::new(VermaModule::new(*spec, lambda.clone())?);
        self.modules.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }
}

impl HomEvidence for ExtremalEvidence {
    fn extremal_dimension(&self, spec: &ParabolicSpec, lambda: &Weight, mu: &Weight) -> Result<usize, String> {
        let m = self.module(spec, lambda).map_err(|e| e.to_string())?;
        m.extremal_vectors(mu).map(|s| s.dim()).map_err(|e| e.to_string())
    }
}
