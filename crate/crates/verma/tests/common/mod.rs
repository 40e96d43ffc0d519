#![allow(dead_code)]

use liealg::{AlgebraSpec, GeneratorId, Weight, Q};
use parabolic::ParabolicSpec;
use verma::VermaModule;

pub type Elem = Vec<(Q, Vec<GeneratorId>)>;

pub fn y(i: usize, j: usize) -> GeneratorId {
    GeneratorId::y(i, j)
}

pub fn q(a: i64) -> Q {
    Q::from_integer(a.into())
}

pub fn word(c: i64, w: &[(usize, usize)]) -> (Q, Vec<GeneratorId>) {
    (q(c), w.iter().map(|&(i, j)| y(i, j)).collect())
}

pub fn mul(a: &Elem, b: &Elem) -> Elem {
    let mut out = Vec::new();
    for (ca, wa) in a {
        for (cb, wb) in b {
            let mut w = wa.clone();
            w.extend(wb.iter().copied());
            out.push((ca * cb, w));
        }
    }
    out
}

pub fn plus(a: &Elem, b: &Elem) -> Elem {
    a.iter().chain(b.iter()).cloned().collect()
}

/// y_{n+3,i} - sum_{j=3}^{n+1} y_{j,i} Y_{n+3,j}
pub fn d_plus(n: usize, i: usize) -> Elem {
    let mut e = vec![word(1, &[(n + 3, i)])];
    e.extend((3..=n + 1).map(|j| word(-1, &[(j, i), (n + 3, j)])));
    e
}

/// y_{n+2,i} - sum_{j=3}^{n+1} y_{j,i} Y_{n+2,j}
pub fn d_minus(n: usize, i: usize) -> Elem {
    let mut e = vec![word(1, &[(n + 2, i)])];
    e.extend((3..=n + 1).map(|j| word(-1, &[(j, i), (n + 2, j)])));
    e
}

pub fn spec(alg: AlgebraSpec, k: usize) -> ParabolicSpec {
    ParabolicSpec::new(alg, k).unwrap()
}

pub fn from_shifted(spec: &ParabolicSpec, halves: &[i64]) -> Weight {
    &Weight::halves(halves) - &spec.algebra.delta()
}

/// Shifted weights 1/2[2k-1, ..., 3, s*1 | 2n-1, ..., 3, t*1].
pub fn dirac_shifted(k: usize, n: usize, s: i64, t: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..k).map(|i| 2 * (k - i) as i64 - 1).collect();
    *v.last_mut().unwrap() *= s;
    let mut b: Vec<i64> = (0..n).map(|i| 2 * (n - i) as i64 - 1).collect();
    *b.last_mut().unwrap() *= t;
    v.extend(b);
    v
}

/// The S_2 chain lambda, mu, nu, xi in D_{2+n}, cross 2.
pub fn s2_chain(n: usize) -> (ParabolicSpec, Vec<Weight>) {
    let sp = spec(AlgebraSpec::d(2 + n), 2);
    let b: Vec<i64> = (0..n).map(|i| 2 * (n - i) as i64 - 1).collect();
    let mk = |a: [i64; 2], flip: bool| {
        let mut t = a.to_vec();
        let mut bb = b.clone();
        if flip {
            *bb.last_mut().unwrap() *= -1;
        }
        t.extend(bb);
        from_shifted(&sp, &t)
    };
    let chain = vec![mk([3, 1], false), mk([3, -1], true), mk([1, -3], true), mk([-1, -3], false)];
    (sp, chain)
}

pub fn module(sp: &ParabolicSpec, l: &Weight) -> VermaModule {
    VermaModule::new(*sp, l.clone()).unwrap()
}

/// The second-order singular vector D_1^+ D_2^- + D_2^+ D_2^- Y_21 - y_{2n+3,1}.
pub fn second_order(n: usize) -> Elem {
    let a = mul(&d_plus(n, 1), &d_minus(n, 2));
    let b = mul(&mul(&d_plus(n, 2), &d_minus(n, 2)), &vec![word(1, &[(2, 1)])]);
    plus(&plus(&a, &b), &vec![word(-1, &[(2 * n + 3, 1)])])
}

/// D_1^- + D_2^- Y_21
pub fn third_order(n: usize) -> Elem {
    plus(&d_minus(n, 1), &mul(&d_minus(n, 2), &vec![word(1, &[(2, 1)])]))
}
