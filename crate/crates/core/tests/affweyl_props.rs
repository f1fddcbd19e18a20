use std::collections::HashMap;

use affschub::{AffineWeylElement, AffineWeylGroup, FactorizationMode};
use proptest::prelude::*;

fn groups() -> Vec<AffineWeylGroup> {
    vec![
        AffineWeylGroup::of_type("A", 2).unwrap(),
        AffineWeylGroup::of_type("C", 2).unwrap(),
        AffineWeylGroup::of_type("G", 2).unwrap(),
    ]
}

fn word(max: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0usize..3).prop_flat_map(move |gi| (Just(gi), prop::collection::vec(0usize..=2, 0..=max)))
}

/// Products of all subwords of a word.
fn subword_products(g: &AffineWeylGroup, w: &[usize]) -> Vec<AffineWeylElement> {
    (0u32..1 << w.len())
        .map(|mask| {
            let sub: Vec<usize> = w.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
            g.from_word(&sub).unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_word_round_trips((gi, w) in word(8)) {
        let g = &groups()[gi];
        let x = g.from_word(&w).unwrap();
        let red = g.word(&x);
        prop_assert_eq!(red.len(), g.length(&x));
        prop_assert!(red.len() <= w.len() && (w.len() - red.len()).is_multiple_of(2));
        prop_assert_eq!(g.from_word(&red).unwrap(), x.clone());
        prop_assert_eq!(g.mul(&x, &g.inverse(&x)), g.identity());
    }

    #[test]
    fn demazure_product_bounds((gi, a) in word(4), b in prop::collection::vec(0usize..=2, 0..=4)) {
        let g = &groups()[gi];
        let x = g.from_word(&a).unwrap();
        let y = g.from_word(&b).unwrap();
        let d = g.demazure(&x, &y);
        prop_assert!(g.length(&d) <= g.length(&x) + g.length(&y));
        prop_assert!(g.bruhat_leq(&x, &d));
        prop_assert!(g.bruhat_leq(&y, &d));
        prop_assert!(g.bruhat_leq(&g.mul(&x, &y), &d));
        let mut concat = g.word(&x);
        concat.extend(g.word(&y));
        prop_assert_eq!(g.demazure_word(&concat), d);
    }

    #[test]
    fn bruhat_matches_subword_oracle((gi, a) in word(5), b in prop::collection::vec(0usize..=2, 0..=5)) {
        let g = &groups()[gi];
        let w = g.from_word(&a).unwrap();
        let v = g.from_word(&b).unwrap();
        let below = subword_products(g, &g.word(&w)).contains(&v);
        prop_assert_eq!(g.bruhat_leq(&v, &w), below);
    }

    #[test]
    fn coset_decomposition((gi, w) in word(7)) {
        let g = &groups()[gi];
        let x = g.from_word(&w).unwrap();
        let c = g.coset_data(&x);
        prop_assert_eq!(g.mul(&c.translation, &c.finite), x.clone());
        prop_assert!(g.is_finite(&c.finite));
        let m = c.min_coset_rep;
        prop_assert!(g.is_grassmannian(&m));
        prop_assert!(g.is_finite(&g.mul(&g.inverse(&m), &x)));
        prop_assert_eq!(c.grassmannian, m == x);
    }
}

#[test]
fn each_coset_has_one_grassmannian_element() {
    for g in groups() {
        let ball = g.ball(6).unwrap();
        let mut reps: HashMap<AffineWeylElement, usize> = HashMap::new();
        for x in &ball {
            if g.is_grassmannian(x) {
                *reps.entry(g.min_coset_rep(x)).or_default() += 1;
            }
        }
        assert!(reps.values().all(|&k| k == 1));
        // every element of the ball lies over a Grassmannian element of no greater length
        for x in &ball {
            let m = g.min_coset_rep(x);
            assert!(g.length(&m) <= g.length(x));
            assert!(g.bruhat_leq(&m, x));
        }
    }
}

#[test]
fn factorizations_have_finite_right_factors() {
    for g in groups() {
        for w in g.ball(4).unwrap() {
            let lw = g.length(&w);
            for f in g.factorizations(&w, FactorizationMode::Demazure, true) {
                assert!(g.is_finite(&f.right));
                assert_eq!(g.demazure(&f.left, &f.right), w);
                let excess = g.length(&f.left) + g.length(&f.right) - lw;
                assert_eq!(f.sign, if excess % 2 == 0 { 1 } else { -1 });
            }
            let additive = g.factorizations(&w, FactorizationMode::LengthAdditive, true);
            assert!(additive.iter().any(|f| g.is_identity(&f.right)));
            for f in additive {
                assert_eq!(g.mul(&f.left, &f.right), w);
                assert_eq!(g.length(&f.left) + g.length(&f.right), lw);
            }
        }
    }
}

#[test]
fn bruhat_intervals_have_alternating_moebius_function() {
    // sum over v <= u <= w of (-1)^{l(u)} vanishes unless v = w
    let g = AffineWeylGroup::of_type("A", 2).unwrap();
    for w in g.ball(4).unwrap() {
        let below = g.lower_interval(&w);
        for v in &below {
            let s: i64 = below
                .iter()
                .filter(|u| g.bruhat_leq(v, u))
                .map(|u| if g.length(u).is_multiple_of(2) { 1 } else { -1 })
                .sum();
            assert_eq!(s == 0, *v != w);
        }
    }
}
