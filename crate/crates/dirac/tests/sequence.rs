use dirac::{
    basis_fields, convention, conventions, last_second_order_component, sequence_k2, verify_complex, Alternate, Check,
    Clifford, DiracError, DiracSequence, FieldSet, Mutated, PolyField, Standard,
};
use liealg::Q;

fn field(n: usize, vars: &[(usize, usize)], c: Clifford) -> PolyField {
    PolyField::from_vars(2, n, vars, c).unwrap()
}

#[test]
fn stage_examples() {
    let n = 3;
    let f = field(n, &[(1, 1), (2, 1)], Clifford::word(n, &[1]).unwrap());
    let g = sequence_k2(1, &[f]).unwrap();
    assert_eq!(g.len(), 2);
    assert!(!g[0].is_zero() && !g[1].is_zero());
    let r = sequence_k2(2, &g).unwrap();
    assert!(r.iter().all(PolyField::is_zero));

    let g1 = field(n, &[(1, 2), (1, 2)], Clifford::one(n));
    let g2 = field(n, &[(2, 1), (2, 2)], Clifford::word(n, &[2]).unwrap());
    let h = sequence_k2(2, &[g1, g2]).unwrap();
    // each summand differentiates in the wrong variable group
    assert!(h.iter().all(PolyField::is_zero));
    assert!(sequence_k2(3, &h).unwrap()[0].is_zero());
    let g1 = field(n, &[(1, 2), (2, 2), (2, 3)], Clifford::one(n));
    let g2 = field(n, &[(1, 1), (1, 2), (2, 1)], Clifford::word(n, &[2, 3]).unwrap());
    let h = sequence_k2(2, &[g1, g2]).unwrap();
    assert!(h.iter().any(|x| !x.is_zero()));
    assert!(sequence_k2(3, &h).unwrap()[0].is_zero());

    let c = PolyField::constant(2, n, Clifford::one(n)).unwrap();
    assert!(sequence_k2(1, &[c.clone()]).unwrap().iter().all(PolyField::is_zero));
    assert!(matches!(sequence_k2(2, &[c.clone()]), Err(DiracError::Arity { expected: 2, found: 1 })));
    assert!(matches!(sequence_k2(4, &[c.clone(), c]), Err(DiracError::Stage(4))));
}

#[test]
fn registry_lookup() {
    let names: Vec<_> = conventions().iter().map(|c| c.name()).collect();
    assert_eq!(names, ["standard", "alternate", "mutated"]);
    assert_eq!(convention("alternate").unwrap().name(), "alternate");
    assert!(convention("nope").is_none());
}

#[test]
fn exhaustive_complex_standard() {
    for n in 2..=4 {
        let r = verify_complex(&Standard, n, 4, FieldSet::Exhaustive).unwrap();
        assert!(r.passed(), "n={n}: {:?}", r.failures.first());
        let blades = 1 + n + n * (n - 1) / 2;
        let monos = (1..=4).fold(1usize, |acc, i| acc * (2 * n + i) / i);
        assert_eq!(r.stage1_inputs, monos * blades);
        assert_eq!(r.stage2_inputs, 2 * r.stage1_inputs);
        assert_eq!(r.laplacian_checks, 2 * r.stage1_inputs);
        // only constants are killed by stage 1
        assert_eq!(r.stage1_nonzero, r.stage1_inputs - blades);
        assert!(r.stage2_nonzero > 0);
    }
}

#[test]
fn exhaustive_complex_alternate() {
    for n in 2..=3 {
        let r = verify_complex(&Alternate, n, 4, FieldSet::Exhaustive).unwrap();
        assert!(r.passed(), "n={n}: {:?}", r.failures.first());
    }
}

#[test]
fn alternate_third_operator_needs_diagonal_pairing() {
    // with stage 2 swapped as (D2-part, -D1-part), pairing h1 with D2 and h2
    // with D1 does not give zero
    let n = 2;
    let mut broken = 0;
    for f in basis_fields(n, 3) {
        let z = PolyField::zero(2, n);
        for g in [[f.clone(), z.clone()], [z.clone(), f.clone()]] {
            let h = Alternate.stage2(&g).unwrap();
            let crossed = h[1].dirac(1).unwrap().add(&h[0].dirac(2).unwrap()).unwrap();
            if !crossed.is_zero() {
                broken += 1;
            }
            assert!(Alternate.stage3(&h).unwrap().is_zero());
        }
    }
    assert!(broken > 0);
}

#[test]
fn mutated_stage_is_caught() {
    let r = verify_complex(&Mutated, 2, 3, FieldSet::Exhaustive).unwrap();
    assert!(!r.passed());
    assert!(r.failures.iter().any(|f| f.check == Check::First));
    assert!(r.failures.iter().all(|f| f.terms > 0 && f.residual != "0"));
    // the defect is third order, so quadratic fields cannot see it
    assert!(verify_complex(&Mutated, 2, 2, FieldSet::Exhaustive).unwrap().passed());
    let r = verify_complex(&Mutated, 3, 3, FieldSet::Random { trials: 20, seed: 1 }).unwrap();
    assert!(!r.passed());
}

#[test]
fn random_mode() {
    for seq in [&Standard as &dyn DiracSequence, &Alternate] {
        let r = verify_complex(seq, 5, 5, FieldSet::Random { trials: 40, seed: 2024 }).unwrap();
        assert!(r.passed(), "{}", seq.name());
        assert_eq!(r.stage1_inputs, 40);
        assert!(r.stage1_nonzero > 0);
    }
}

#[test]
fn vacuous_and_guarded() {
    let r = verify_complex(&Standard, 2, 0, FieldSet::Exhaustive).unwrap();
    assert!(r.passed());
    assert_eq!(r.stage1_nonzero, 0);
    assert_eq!(r.stage2_nonzero, 0);
    assert!(matches!(verify_complex(&Standard, 7, 2, FieldSet::Exhaustive), Err(DiracError::Guard(_))));
    assert!(matches!(verify_complex(&Standard, 1, 2, FieldSet::Exhaustive), Err(DiracError::Guard(_))));
    assert!(matches!(verify_complex(&Standard, 3, 9, FieldSet::Exhaustive), Err(DiracError::Guard(_))));
    let many = FieldSet::Random { trials: 1_000_000, seed: 0 };
    assert!(matches!(verify_complex(&Standard, 3, 2, many), Err(DiracError::Guard(_))));
}

#[test]
fn k_variable_last_component_kills_gradients() {
    for k in 3..=4 {
        let n = 2;
        for e in dirac::monomials(k * n, 3) {
            for b in 0u32..1 << n {
                let f = PolyField::monomial(k, n, &e, Clifford::basis(n, b, Q::from_integer(1.into()))).unwrap();
                let g: Vec<PolyField> = (1..=k).map(|i| f.dirac(i).unwrap()).collect();
                assert!(last_second_order_component(&g).unwrap().is_zero());
            }
        }
    }
    let f = PolyField::zero(3, 2);
    assert!(last_second_order_component(&[f.clone(), f]).is_err());
}
