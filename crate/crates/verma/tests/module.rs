mod common;

use common::*;
use liealg::{AlgebraSpec, GeneratorId, Weight};
use verma::*;

fn dirac_d4() -> (VermaModule, Weight, Weight) {
    let sp = spec(AlgebraSpec::d(4), 1);
    let l = Weight::halves(&[-5, 1, 1, 1]);
    let m = Weight::halves(&[-7, 1, 1, -1]);
    (module(&sp, &l), l, m)
}

#[test]
fn inducing_module_weight_spaces() {
    let (m, l, _) = dirac_d4();
    assert_eq!(m.l_dim(&l), 1);
    let alg = m.algebra();
    let root = |g: GeneratorId| alg.root(alg.index_of(&g).unwrap()).clone();
    assert_eq!(m.l_dim(&(&l + &root(y(3, 2)))), 0);
    assert_eq!(m.l_dim(&(&l + &root(y(5, 2)))), 1);
    assert_eq!(m.l_space(&(&l + &root(y(5, 2)))).basis.len(), 1);
    let v = m.act(&y(3, 2), &m.highest()).unwrap();
    assert!(v.is_zero());
    assert!(!m.act(&y(5, 2), &m.highest()).unwrap().is_zero());
    // weights above lambda are empty
    assert_eq!(m.l_dim(&(&l - &root(y(5, 2)))), 0);
}

#[test]
fn inducing_module_dimensions_match_weyl_formula() {
    // g_0 = so(6) part for D_4 cross 1 acting on 1/2[1,1,1]: the 4-dim spin rep, weights +-1/2 with even minus count
    let (m, l, _) = dirac_d4();
    let mut total = 0;
    for s in [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1], [-1, -1, -1], [1, 1, -1]] {
        let nu = Weight::halves(&[-5, s[0], s[1], s[2]]);
        total += m.l_dim(&nu);
    }
    assert_eq!(total, 4);
    // vector rep of gl(2) x so(4) in D_4 cross 2 for lambda = [0,0|1,0]: 4-dim so(4) vector
    let sp = spec(AlgebraSpec::d(4), 2);
    let m2 = module(&sp, &Weight::from_ints(&[0, 0, 1, 0]));
    let dims: usize = [[1, 0], [0, 1], [0, -1], [-1, 0]].iter().map(|b| m2.l_dim(&Weight::from_ints(&[0, 0, b[0], b[1]]))).sum();
    assert_eq!(dims, 4);
    assert_eq!(m2.l_dim(&Weight::from_ints(&[0, 0, 0, 0])), 0);
}

#[test]
fn action_examples() {
    let (m, l, _) = dirac_d4();
    let v = m.highest();
    let y51 = m.act(&y(5, 1), &v).unwrap();
    let r = m.act(&GeneratorId::x(1, 2), &y51).unwrap();
    let y52v = m.act(&y(5, 2), &v).unwrap();
    assert_eq!(r, y52v.scaled(&q(-1)));
    let w = m.act_word(&[y(2, 1), y(5, 2)], &v).unwrap();
    assert_eq!(m.act(&GeneratorId::x(1, 2), &w).unwrap(), y52v.scaled(&q(-2)));
    for i in 1..=4 {
        let h = m.act(&GeneratorId::h(i), &v).unwrap();
        let c = l.coord(i - 1);
        assert_eq!(h, v.scaled(&liealg::Q::new((*c.numer()).into(), (*c.denom()).into())));
    }
    assert_eq!(m.render(&y51), "y[5,1] v");
    assert_eq!(m.render(&w), "y[2,1]*Y[5,2] v");
    assert_eq!(m.render(&v), "v");
    assert_eq!(m.render(&y52v.scaled(&q(-3))), "-3*Y[5,2] v");
}

#[test]
fn weight_space_dimensions() {
    let (m, l, mu) = dirac_d4();
    assert_eq!(m.weight_space_basis(&mu).len(), 3);
    assert_eq!(m.weight_space_basis(&l).len(), 1);
    assert!(m.weight_space_basis(&(&l + &Weight::from_ints(&[1, 0, 0, 0]))).is_empty());
    assert!(m.weight_space_basis(&Weight::halves(&[-5, 1, 1, 2])).is_empty());
}

#[test]
fn one_variable_dirac_vector() {
    let (m, _, mu) = dirac_d4();
    let s = m.extremal_vectors(&mu).unwrap();
    assert_eq!(s.dim(), 1);
    assert_eq!(m.render(&s.basis[0]), "y[5,1] v - y[3,1]*Y[5,3] v - y[2,1]*Y[5,2] v");
    let sp = spec(AlgebraSpec::d(4), 1);
    let lp = Weight::halves(&[-5, 1, 1, -1]);
    let mp = Weight::halves(&[-7, 1, 1, 1]);
    let m2 = module(&sp, &lp);
    let s2 = m2.extremal_vectors(&mp).unwrap();
    assert_eq!(s2.dim(), 1);
    assert_eq!(m2.render(&s2.basis[0]), "y[4,1] v - y[3,1]*Y[4,3] v - y[2,1]*Y[4,2] v");
}

#[test]
fn trivial_and_empty_solutions() {
    let (m, l, _) = dirac_d4();
    let s = m.extremal_vectors(&l).unwrap();
    assert_eq!(s.dim(), 1);
    assert_eq!(m.render(&s.basis[0]), "v");
    // a lower weight without singular vectors
    let s = m.extremal_vectors(&(&l - &Weight::from_ints(&[1, 1, 0, 0]))).unwrap();
    assert_eq!(s.dim(), 0);
}

#[test]
fn k_variable_first_order_vectors() {
    for (k, n) in [(2, 2), (2, 3), (3, 3), (1, 2), (3, 2)] {
        let sp = spec(AlgebraSpec::d(k + n), k);
        let l = from_shifted(&sp, &dirac_shifted(k, n, 1, 1));
        let mu = from_shifted(&sp, &dirac_shifted(k, n, -1, -1));
        let m = module(&sp, &l);
        let s = m.extremal_vectors(&mu).unwrap();
        assert_eq!(s.dim(), 1, "k={k} n={n}");
        let mut e = vec![word(1, &[(k + n + 1, k)])];
        e.extend((1..n).map(|j| word(-1, &[(k + j, k), (k + n + 1, k + j)])));
        let expected = m.act_element(&e, &m.highest()).unwrap();
        assert_eq!(s.basis[0], expected.normalized(), "k={k} n={n}");
        // primed pair
        let lp = from_shifted(&sp, &dirac_shifted(k, n, 1, -1));
        let mp = from_shifted(&sp, &dirac_shifted(k, n, -1, 1));
        let m2 = module(&sp, &lp);
        let s2 = m2.extremal_vectors(&mp).unwrap();
        assert_eq!(s2.dim(), 1);
        let mut e2 = vec![word(1, &[(k + n, k)])];
        e2.extend((1..n).map(|j| word(-1, &[(k + j, k), (k + n, k + j)])));
        assert_eq!(s2.basis[0], m2.act_element(&e2, &m2.highest()).unwrap().normalized());
    }
}

#[test]
fn six_term_second_order_vector() {
    let (sp, chain) = s2_chain(2);
    let m = module(&sp, &chain[1]);
    let s = m.extremal_vectors(&chain[2]).unwrap();
    assert_eq!(s.dim(), 1);
    let e = vec![
        word(1, &[(5, 1), (4, 2)]),
        word(1, &[(5, 2), (4, 2), (2, 1)]),
        word(1, &[(6, 2), (3, 1)]),
        word(1, &[(6, 2), (3, 2), (2, 1)]),
        word(1, &[(5, 2), (3, 1), (4, 3)]),
        word(-1, &[(5, 1), (3, 2), (4, 3)]),
    ];
    let expected = m.act_element(&e, &m.highest()).unwrap();
    assert_eq!(expected.len(), 6);
    assert_eq!(s.basis[0], expected);
    assert_eq!(
        m.render(&s.basis[0]),
        "y[6,2]*y[3,2]*Y[2,1] v + y[6,2]*y[3,1] v + y[5,2]*y[4,2]*Y[2,1] v + y[5,2]*y[3,1]*Y[4,3] v + y[5,1]*y[4,2] v - y[5,1]*y[3,2]*Y[4,3] v"
    );
    assert!(parabolic::true_verma_hom_exists(&sp, &chain[2], &chain[1]));
    assert!(parabolic::standard_map_is_zero(&sp, &chain[2], &chain[1]).unwrap());
}

#[test]
fn second_and_third_order_vectors_general_n() {
    for n in 2..=3 {
        let (sp, chain) = s2_chain(n);
        let m1 = module(&sp, &chain[1]);
        let s = m1.extremal_vectors(&chain[2]).unwrap();
        assert_eq!(s.dim(), 1, "n={n}");
        let expected = m1.act_element(&second_order(n), &m1.highest()).unwrap();
        assert!(s.basis[0].proportional(&expected), "n={n}");
        let m2 = module(&sp, &chain[2]);
        let t = m2.extremal_vectors(&chain[3]).unwrap();
        assert_eq!(t.dim(), 1);
        let expected3 = m2.act_element(&third_order(n), &m2.highest()).unwrap();
        assert!(t.basis[0].proportional(&expected3));
        let m0 = module(&sp, &chain[0]);
        let f = m0.extremal_vectors(&chain[1]).unwrap();
        assert_eq!(f.dim(), 1);
        assert!(f.basis[0].proportional(&m0.act_element(&d_plus(n, 2), &m0.highest()).unwrap()));
    }
}

#[test]
fn chain_compositions_vanish() {
    for n in 2..=3 {
        let (sp, chain) = s2_chain(n);
        let ms: Vec<VermaModule> = chain.iter().map(|l| module(&sp, l)).collect();
        let ext: Vec<VermaVector> =
            (0..3).map(|i| ms[i].extremal_vectors(&chain[i + 1]).unwrap().basis[0].clone()).collect();
        let (z1, _) = compose_is_zero(&ms[0], &ext[0], &ms[1], &ext[1]).unwrap();
        let (z2, _) = compose_is_zero(&ms[1], &ext[1], &ms[2], &ext[2]).unwrap();
        assert!(z1 && z2, "n={n}");
        // skipping a step is a weight mismatch
        assert!(compose(&ms[0], &ext[0], &ms[2], &ext[2]).is_err());
    }
}

#[test]
fn compose_with_identity() {
    let (m, l, mu) = dirac_d4();
    let ext = m.extremal_vectors(&mu).unwrap().basis[0].clone();
    let sp = spec(AlgebraSpec::d(4), 1);
    let inner = module(&sp, &mu);
    let r = compose(&m, &ext, &inner, &inner.highest()).unwrap();
    assert_eq!(r, ext);
    let r2 = compose(&m, &m.highest(), &m, &ext).unwrap();
    assert_eq!(r2, ext);
    assert_eq!(m.weight_of(&r2).unwrap(), Some(mu.clone()));
    let _ = l;
}

#[test]
fn hom_apply_examples() {
    let (m, l, mu) = dirac_d4();
    let ext = m.extremal_vectors(&mu).unwrap().basis[0].clone();
    assert_eq!(m.hom_apply(&ext, &[]).unwrap(), ext);
    let moved = m.hom_apply(&ext, &[y(2, 1)]).unwrap();
    let alg = m.algebra();
    let r = alg.root(alg.index_of(&y(2, 1)).unwrap());
    assert_eq!(m.weight_of(&moved).unwrap(), Some(&mu + r));
    let _ = l;
}

#[test]
fn delta_two_identity() {
    for n in 2..=3 {
        let (sp, chain) = s2_chain(n);
        let m = module(&sp, &chain[0]);
        let lhs = m.act_element(&mul(&d_minus(n, 2), &d_plus(n, 2)), &m.highest()).unwrap();
        let rhs_e: Elem = (0..n).map(|t| word(1, &[(2 * n + 2 - t, 2), (3 + t, 2)])).collect();
        let rhs = m.act_element(&rhs_e, &m.highest()).unwrap();
        assert!(!lhs.is_zero());
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn weights_are_tracked() {
    let (sp, chain) = s2_chain(2);
    let m = module(&sp, &chain[1]);
    for key in m.weight_space_basis(&chain[2]) {
        assert_eq!(m.weight_of_term(&key), chain[2]);
        let v = VermaVector::term(key);
        for g in 0..m.algebra().len() {
            let r = m.act_index(g, &v);
            if let Some(w) = m.weight_of(&r).unwrap() {
                assert_eq!(w, &chain[2] + m.algebra().root(g));
            }
        }
    }
}

#[test]
fn rejects_bad_lambda() {
    let sp = spec(AlgebraSpec::d(4), 1);
    assert!(matches!(VermaModule::new(sp, Weight::halves(&[-5, 1, 1, -3])), Err(VermaError::NotDominant(_))));
}


/// k = 3: both composites along lambda -> mu -> nu -> xi vanish. The second one
/// has to, since M_p(mu) has no singular vector of weight xi at all.
#[test]
fn three_variable_chain_compositions() {
    let (k, n) = (3usize, 3usize);
    let sp = spec(AlgebraSpec::d(k + n), k);
    let shifted = |a: [i64; 3], last: i64| {
        let mut t = a.to_vec();
        t.extend([5, 3, last]);
        from_shifted(&sp, &t)
    };
    let chain = [shifted([5, 3, 1], 1), shifted([5, 3, -1], -1), shifted([5, 1, -3], -1), shifted([5, -1, -3], 1)];
    let ms: Vec<VermaModule> = chain.iter().map(|l| module(&sp, l)).collect();
    let mut ext = Vec::new();
    for i in 0..3 {
        let s = ms[i].extremal_vectors(&chain[i + 1]).unwrap();
        assert_eq!(s.dim(), 1, "step {i}");
        ext.push(s.basis[0].clone());
    }
    // second-order vector D_2^+ D_3^- + D_3^+ D_3^- Y_32 - y_{2n+4,2}, shifted by one index
    let dp = |i: usize| {
        let mut e = vec![word(1, &[(n + 4, i)])];
        e.extend((4..=n + 2).map(|j| word(-1, &[(j, i), (n + 4, j)])));
        e
    };
    let dm = |i: usize| {
        let mut e = vec![word(1, &[(n + 3, i)])];
        e.extend((4..=n + 2).map(|j| word(-1, &[(j, i), (n + 3, j)])));
        e
    };
    let second = plus(
        &plus(&mul(&dp(2), &dm(3)), &mul(&mul(&dp(3), &dm(3)), &vec![word(1, &[(3, 2)])])),
        &vec![word(-1, &[(2 * n + 4, 2)])],
    );
    assert!(ext[1].proportional(&ms[1].act_element(&second, &ms[1].highest()).unwrap()));
    let (z1, _) = compose_is_zero(&ms[0], &ext[0], &ms[1], &ext[1]).unwrap();
    assert!(z1);
    assert_eq!(ms[1].extremal_vectors(&chain[3]).unwrap().dim(), 0);
    let (z2, _) = compose_is_zero(&ms[1], &ext[1], &ms[2], &ext[2]).unwrap();
    assert!(z2);
}
