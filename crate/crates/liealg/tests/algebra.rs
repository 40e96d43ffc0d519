use liealg::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn entry_matrix(n: usize, entries: &[(usize, usize, i64)]) -> Matrix {
    let mut m = Matrix::zero(n);
    for &(i, j, v) in entries {
        m.add_entry(i, j, r(v));
    }
    m
}

fn all_specs(max_rank: usize) -> Vec<AlgebraSpec> {
    let mut v = Vec::new();
    for m in 1..=max_rank {
        v.push(AlgebraSpec::b(m));
        if m >= 2 {
            v.push(AlgebraSpec::d(m));
        }
    }
    v
}

#[test]
fn d3_lowering_generator_matrix_and_root() {
    let alg = Algebra::build(AlgebraSpec::d(3)).unwrap();
    let k = alg.index_of(&GeneratorId::y(4, 1)).unwrap();
    assert_eq!(alg.matrix(k), entry_matrix(6, &[(4, 1, 1), (6, 3, -1)]));
    assert_eq!(alg.root(k), &Weight::from_ints(&[-1, 0, -1]));
}

#[test]
fn d4_lowering_generator_in_the_square_block() {
    let alg = Algebra::build(AlgebraSpec::d(4)).unwrap();
    let k = alg.index_of(&GeneratorId::y(4, 1)).unwrap();
    assert_eq!(alg.matrix(k), entry_matrix(8, &[(4, 1, 1), (8, 5, -1)]));
    assert_eq!(alg.root(k), &Weight::from_ints(&[-1, 0, 0, 1]));
}

#[test]
fn small_cases_have_expected_root_counts() {
    let b1 = AlgebraSpec::b(1);
    assert_eq!(b1.positive_roots(), vec![Weight::from_ints(&[1])]);
    let alg = Algebra::build(b1).unwrap();
    assert_eq!(alg.generators().iter().filter(|g| g.kind == GenKind::Raise).count(), 1);
    let d4 = Algebra::build(AlgebraSpec::d(4)).unwrap();
    assert_eq!(d4.generators().iter().filter(|g| g.kind == GenKind::Raise).count(), 12);
    for spec in all_specs(6) {
        assert_eq!(spec.positive_roots().len(), spec.num_positive_roots());
        let alg = Algebra::build(spec).unwrap();
        assert_eq!(alg.len(), spec.dimension());
    }
    assert!(AlgebraSpec::new(Series::D, 1).is_err());
    assert!(AlgebraSpec::new(Series::B, 0).is_err());
}

#[test]
fn brackets_from_hand_written_matrices() {
    // D_4, N = 8: x12 = E12 - E78, y21 = E21 - E87, y51 = E51 - E84, y52 = E52 - E74.
    let x12 = entry_matrix(8, &[(1, 2, 1), (7, 8, -1)]);
    let y21 = entry_matrix(8, &[(2, 1, 1), (8, 7, -1)]);
    let y51 = entry_matrix(8, &[(5, 1, 1), (8, 4, -1)]);
    let y52 = entry_matrix(8, &[(5, 2, 1), (7, 4, -1)]);
    let h1_minus_h2 = entry_matrix(8, &[(1, 1, 1), (8, 8, -1), (2, 2, -1), (7, 7, 1)]);
    assert_eq!(x12.commutator(&y21).unwrap(), h1_minus_h2);
    assert_eq!(x12.commutator(&y51).unwrap(), y52.scale(r(-1)));

    let alg = Algebra::build(AlgebraSpec::d(4)).unwrap();
    assert_eq!(alg.matrix(alg.index_of(&GeneratorId::x(1, 2)).unwrap()), x12);
    let dec = alg.decompose(&x12.commutator(&y51).unwrap()).unwrap();
    assert_eq!(dec, vec![(GeneratorId::y(5, 2), r(-1))]);
    let dec = alg.decompose(&h1_minus_h2).unwrap();
    assert_eq!(dec, vec![(GeneratorId::h(1), r(1)), (GeneratorId::h(2), r(-1))]);
    assert!(alg.decompose(&Matrix::zero(8)).unwrap().is_empty());

    let a = alg.index_of(&GeneratorId::x(1, 2)).unwrap();
    let b = alg.index_of(&GeneratorId::y(5, 1)).unwrap();
    let c = alg.index_of(&GeneratorId::y(5, 2)).unwrap();
    assert_eq!(alg.bracket(a, b), &[(c, -1)]);
}

#[test]
fn cartan_elements_commute() {
    let alg = Algebra::build(AlgebraSpec::b(3)).unwrap();
    for i in 1..=3 {
        for j in 1..=3 {
            let a = alg.index_of(&GeneratorId::h(i)).unwrap();
            let b = alg.index_of(&GeneratorId::h(j)).unwrap();
            assert!(alg.bracket(a, b).is_empty());
        }
    }
}

#[test]
fn decompose_rejects_matrices_outside_the_algebra() {
    let alg = Algebra::build(AlgebraSpec::d(3)).unwrap();
    let bad = entry_matrix(6, &[(1, 2, 1)]);
    assert_eq!(alg.decompose(&bad), Err(LieError::NotInAlgebra));
    assert!(alg.decompose(&Matrix::zero(5)).is_err());
}

#[test]
fn coroot_pairings() {
    let spec = AlgebraSpec::d(4);
    for a in spec.simple_roots() {
        assert_eq!(coroot_pairing(&spec.delta(), &a).unwrap(), Rational64::one());
    }
    let b3 = AlgebraSpec::b(3);
    for a in b3.simple_roots() {
        assert_eq!(coroot_pairing(&b3.delta(), &a).unwrap(), Rational64::one());
    }
    let w = Weight::halves(&[1, 5, 3, 1]);
    assert_eq!(coroot_pairing(&w, &Weight::from_ints(&[1, 0, 0, 1])).unwrap(), r(1));
    let w = Weight::from_ints(&[0, 0, 1]);
    assert_eq!(coroot_pairing(&w, &Weight::from_ints(&[0, 0, 1])).unwrap(), r(2));
    assert_eq!(coroot_pairing(&w, &Weight::zero(3)), Err(LieError::ZeroRoot));
}

#[test]
fn delta_and_fundamental_weights() {
    assert_eq!(AlgebraSpec::d(4).delta(), Weight::from_ints(&[3, 2, 1, 0]));
    assert_eq!(AlgebraSpec::b(3).delta(), Weight::halves(&[5, 3, 1]));
    let fw = AlgebraSpec::d(4).fundamental_weights();
    assert_eq!(fw[3], Weight::halves(&[1, 1, 1, -1]));
    assert_eq!(fw[2], Weight::halves(&[1, 1, 1, 1]));
    assert_eq!(fw[0], Weight::from_ints(&[1, 0, 0, 0]));
    // Fundamental weights are dual to the simple coroots.
    for spec in all_specs(6) {
        let fw = spec.fundamental_weights();
        let sr = spec.simple_roots();
        for (i, w) in fw.iter().enumerate() {
            for (j, a) in sr.iter().enumerate() {
                let expect = if i == j { r(1) } else { r(0) };
                assert_eq!(coroot_pairing(w, a).unwrap(), expect, "{spec} {i} {j}");
            }
        }
        // delta is the sum of the fundamental weights and half the sum of positive roots.
        let mut s = Weight::zero(spec.rank);
        for w in &fw {
            s = &s + w;
        }
        assert_eq!(s, spec.delta());
        let mut p = Weight::zero(spec.rank);
        for g in spec.positive_roots() {
            p = &p + &g;
        }
        assert_eq!(p, spec.delta().scale(2));
    }
}

#[test]
fn grading_element_examples() {
    let spec = AlgebraSpec::d(4);
    let e = GradingElement::new(spec, &[1]).unwrap();
    assert_eq!(e.eval(&Weight::halves(&[1, 5, 3, 1])), Rational64::new(1, 2));
    assert_eq!(e.eval(&Weight::zero(4)), Rational64::zero());
    let alg = Algebra::build(spec).unwrap();
    let y51 = alg.index_of(&GeneratorId::y(5, 1)).unwrap();
    assert_eq!(e.degree(&alg, y51), -1);
    let e2 = GradingElement::new(spec, &[2]).unwrap();
    let y71 = alg.index_of(&GeneratorId::y(7, 1)).unwrap();
    assert_eq!(e2.degree(&alg, y71), -2);
    assert_eq!(e2.degree(&alg, 0), 0);
    let m = e2.matrix();
    let diag: Vec<i64> = (1..=8).map(|i| m.get(i, i).to_integer()).collect();
    assert_eq!(diag, vec![1, 1, 0, 0, 0, 0, -1, -1]);
    assert!(GradingElement::new(spec, &[1, 2]).is_err());
    assert!(GradingElement::new(spec, &[]).is_err());
    assert!(GradingElement::new(spec, &[5]).is_err());
}

#[test]
fn grading_element_brackets_by_root_value() {
    for spec in all_specs(5) {
        let alg = Algebra::build(spec).unwrap();
        for k in 1..=spec.rank {
            let e = GradingElement::new(spec, &[k]).unwrap();
            let em = e.matrix();
            for idx in 0..alg.len() {
                let g = alg.matrix(idx);
                let lhs = em.commutator(&g).unwrap();
                assert_eq!(lhs, g.scale(e.eval(alg.root(idx))), "{spec} k={k} {}", alg.generator(idx));
            }
        }
    }
}

#[test]
fn generator_matrices_round_trip_and_match_roots() {
    for spec in all_specs(5) {
        let alg = Algebra::build(spec).unwrap();
        for idx in 0..alg.len() {
            let m = alg.matrix(idx);
            assert!(m.is_antidiagonal_antisymmetric());
            assert_eq!(alg.decompose(&m).unwrap(), vec![(alg.generator(idx), r(1))]);
            // [h_i, g] = root_i * g
            for i in 1..=spec.rank {
                let h = alg.matrix(alg.index_of(&GeneratorId::h(i)).unwrap());
                assert_eq!(h.commutator(&m).unwrap(), m.scale(alg.root(idx).coord(i - 1)));
            }
        }
    }
}

#[test]
fn structure_table_matches_matrix_commutators() {
    for spec in all_specs(4) {
        let alg = Algebra::build(spec).unwrap();
        for a in 0..alg.len() {
            for b in 0..alg.len() {
                let c = alg.matrix(a).commutator(&alg.matrix(b)).unwrap();
                assert!(c.is_antidiagonal_antisymmetric());
                let mut expect: Vec<(usize, i64)> = alg
                    .decompose(&c)
                    .unwrap()
                    .into_iter()
                    .map(|(g, v)| (alg.index_of(&g).unwrap(), v.to_integer()))
                    .collect();
                expect.sort_unstable();
                assert_eq!(alg.bracket(a, b), expect.as_slice());
                if !expect.is_empty() && alg.kind(a) != GenKind::Cartan && alg.kind(b) != GenKind::Cartan {
                    let sum = alg.root(a) + alg.root(b);
                    for (k, _) in &expect {
                        if alg.kind(*k) == GenKind::Cartan {
                            assert!(sum.is_zero());
                        } else {
                            assert_eq!(alg.root(*k), &sum);
                        }
                    }
                }
            }
        }
    }
}

fn combo_bracket(alg: &Algebra, x: &[(usize, i64)], y: &[(usize, i64)]) -> Vec<i64> {
    let mut out = vec![0; alg.len()];
    for &(a, ca) in x {
        for &(b, cb) in y {
            for &(c, cc) in alg.bracket(a, b) {
                out[c] += ca * cb * cc;
            }
        }
    }
    out
}

fn sparse(v: &[i64]) -> Vec<(usize, i64)> {
    v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i, *c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn jacobi_and_antisymmetry(series in 0..2usize, rank in 2..6usize, a in 0..1000usize, b in 0..1000usize, c in 0..1000usize) {
        let spec = if series == 0 { AlgebraSpec::b(rank) } else { AlgebraSpec::d(rank) };
        let alg = Algebra::build(spec).unwrap();
        let (a, b, c) = (a % alg.len(), b % alg.len(), c % alg.len());
        let ab = combo_bracket(&alg, &[(a, 1)], &[(b, 1)]);
        let ba = combo_bracket(&alg, &[(b, 1)], &[(a, 1)]);
        prop_assert!(ab.iter().zip(&ba).all(|(x, y)| x + y == 0));
        let bc = combo_bracket(&alg, &[(b, 1)], &[(c, 1)]);
        let ca = combo_bracket(&alg, &[(c, 1)], &[(a, 1)]);
        let t1 = combo_bracket(&alg, &[(a, 1)], &sparse(&bc));
        let t2 = combo_bracket(&alg, &[(b, 1)], &sparse(&ca));
        let t3 = combo_bracket(&alg, &[(c, 1)], &sparse(&ab));
        prop_assert!(t1.iter().zip(&t2).zip(&t3).all(|((x, y), z)| x + y + z == 0));
    }

    #[test]
    fn decompose_is_linear(rank in 2..5usize, a in 0..1000usize, b in 0..1000usize, p in -3i64..4, q in -3i64..4) {
        let alg = Algebra::build(AlgebraSpec::d(rank)).unwrap();
        let (a, b) = (a % alg.len(), b % alg.len());
        prop_assume!(a != b);
        let m = alg.matrix(a).scale(r(p)).add(&alg.matrix(b).scale(r(q)));
        let mut dec = alg.decompose(&m).unwrap();
        dec.sort();
        let mut expect: Vec<(GeneratorId, Rational64)> = vec![(alg.generator(a), r(p)), (alg.generator(b), r(q))]
            .into_iter().filter(|(_, c)| !c.is_zero()).collect();
        expect.sort();
        prop_assert_eq!(dec, expect);
    }
}

#[test]
fn weight_rendering() {
    let w = Weight::halves(&[-5, 1, 1, 1]);
    assert_eq!(w.render(Some(1)), "[-5/2|1/2,1/2,1/2]");
    assert_eq!(Weight::from_ints(&[3, 2, 1, 0]).render(None), "[3,2,1,0]");
    assert_eq!(fmt_rational(&Rational64::new(-3, 2)), "-3/2");
}
