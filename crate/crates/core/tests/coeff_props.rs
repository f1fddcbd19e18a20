use std::collections::BTreeMap;

use affschub::theory::{level_zero_act, node_factor, reflect};
use affschub::{AffineWeylGroup, Coefficient, Cohomology, KTheory, Theory, Vector};
use proptest::prelude::*;

fn group() -> AffineWeylGroup {
    AffineWeylGroup::of_type("C", 2).unwrap()
}

fn terms(lo: i32) -> impl Strategy<Value = BTreeMap<Vector, i64>> {
    prop::collection::btree_map(
        (lo..=2, lo..=2).prop_map(|(a, b)| Vector::from_slice(&[a, b])),
        -3i64..=3,
        0..5,
    )
}

fn laurent() -> impl Strategy<Value = <KTheory as Theory>::Coeff> {
    terms(-2).prop_map(Coefficient::from_terms)
}

fn poly() -> impl Strategy<Value = <Cohomology as Theory>::Coeff> {
    terms(0).prop_map(Coefficient::from_terms)
}

fn check_operators<T: Theory>(f: &T::Coeff, h: &T::Coeff) -> Result<(), TestCaseError> {
    let g = group();
    for i in g.nodes() {
        let d = |q: &T::Coeff| T::demazure(&g, i, q);
        // D_i^2 = square * D_i
        prop_assert_eq!(d(&d(f)), d(f).scale(T::GENERATOR_SQUARE));
        // s_i = 1 + c_i D_i
        prop_assert_eq!(reflect::<T>(&g, i, f), f.add_ref(&node_factor::<T>(&g, i).mul_ref(&d(f))));
        // twisted Leibniz rule
        let lhs = d(&f.mul_ref(h));
        let rhs = d(f).mul_ref(h).add_ref(&reflect::<T>(&g, i, f).mul_ref(&d(h)));
        prop_assert_eq!(lhs, rhs);
        // s_i is a ring involution
        prop_assert_eq!(reflect::<T>(&g, i, &reflect::<T>(&g, i, f)), f.clone());
        prop_assert_eq!(
            reflect::<T>(&g, i, &f.mul_ref(h)),
            reflect::<T>(&g, i, f).mul_ref(&reflect::<T>(&g, i, h))
        );
    }
    Ok(())
}

fn check_group_action<T: Theory>(a: &[usize], b: &[usize], f: &T::Coeff) -> Result<(), TestCaseError> {
    let g = group();
    let x = g.from_word(a).unwrap();
    let y = g.from_word(b).unwrap();
    let xy = g.mul(&x, &y);
    prop_assert_eq!(level_zero_act::<T>(&g, &xy, f), level_zero_act::<T>(&g, &x, &level_zero_act::<T>(&g, &y, f)));
    // translations act trivially
    let t = g.translation_part(&x);
    prop_assert_eq!(level_zero_act::<T>(&g, &t, f), f.clone());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn k_operators(f in laurent(), h in laurent()) {
        check_operators::<KTheory>(&f, &h)?;
    }

    #[test]
    fn h_operators(f in poly(), h in poly()) {
        check_operators::<Cohomology>(&f, &h)?;
    }

    #[test]
    fn level_zero_action_is_an_action(
        a in prop::collection::vec(0usize..=2, 0..6),
        b in prop::collection::vec(0usize..=2, 0..6),
        f in laurent(),
        h in poly(),
    ) {
        check_group_action::<KTheory>(&a, &b, &f)?;
        check_group_action::<Cohomology>(&a, &b, &h)?;
    }

    #[test]
    fn exact_division_inverts_multiplication(f in laurent(), h in laurent()) {
        prop_assume!(!h.is_zero());
        prop_assert_eq!(f.mul_ref(&h).exact_div(&h).unwrap(), f.clone());
    }

    #[test]
    fn polynomial_division_inverts_multiplication(f in poly(), h in poly()) {
        prop_assume!(!h.is_zero());
        prop_assert_eq!(f.mul_ref(&h).exact_div(&h).unwrap(), f.clone());
    }

    #[test]
    fn coefficients_round_trip_through_json(f in laurent(), h in poly()) {
        let s = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<<KTheory as Theory>::Coeff>(&s).unwrap(), f);
        let s = serde_json::to_string(&h).unwrap();
        prop_assert_eq!(serde_json::from_str::<<Cohomology as Theory>::Coeff>(&s).unwrap(), h);
    }
}

#[test]
fn inexact_division_is_an_error() {
    let one = <KTheory as Theory>::Coeff::one(2);
    let c = KTheory::root_factor(&[2, -1]);
    assert!(one.exact_div(&c).is_err());
    let x = Cohomology::weight_class(&[1, 0]);
    assert!(<Cohomology as Theory>::Coeff::one(2).exact_div(&x).is_err());
}
