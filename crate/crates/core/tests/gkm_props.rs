use std::collections::HashMap;

use affschub::gkm::{LocalizedClass, Localization};
use affschub::nilhecke::NilHecke;
use affschub::{AffineWeylElement, AffineWeylGroup, Coefficient, Cohomology, KTheory, Theory};

/// Coefficients of a class in the Schubert basis, by triangular solve over the table.
fn schubert_coordinates<T: Theory>(loc: &Localization<'_, T>, psi: &LocalizedClass<T>) -> HashMap<AffineWeylElement, T::Coeff> {
    let g = loc.group();
    let mut out: HashMap<AffineWeylElement, T::Coeff> = HashMap::new();
    for u in loc.ball(psi.radius()).unwrap() {
        let mut rest = psi.get(u).unwrap().clone();
        for (x, a) in &out {
            if g.bruhat_lt(x, u) {
                rest = rest.sub_ref(&a.mul_ref(&loc.value(x, u).unwrap()));
            }
        }
        let a = rest.exact_div(&loc.value(u, u).unwrap()).unwrap();
        if !a.is_zero() {
            out.insert(u.clone(), a);
        }
    }
    out
}

fn schubert_classes_are_triangular<T: Theory>(g: &AffineWeylGroup, r: usize) {
    let loc = Localization::<T>::new(g, r).unwrap();
    for v in loc.ball(r).unwrap() {
        let psi = loc.schubert(v, r).unwrap();
        assert_eq!(loc.gkm_violation(&psi).unwrap(), None, "{}", g.display(v));
        assert!(!psi.get(v).unwrap().is_zero());
        for z in loc.ball(r).unwrap() {
            if !g.bruhat_leq(v, z) {
                assert!(psi.get(z).unwrap().is_zero());
            }
        }
        let coords = schubert_coordinates(&loc, &psi);
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[v], T::Coeff::one(g.rank()));
    }
}

#[test]
fn schubert_classes_in_a2_and_c2() {
    let a2 = AffineWeylGroup::of_type("A", 2).unwrap();
    let c2 = AffineWeylGroup::of_type("C", 2).unwrap();
    schubert_classes_are_triangular::<KTheory>(&a2, 4);
    schubert_classes_are_triangular::<Cohomology>(&a2, 4);
    schubert_classes_are_triangular::<KTheory>(&c2, 4);
    schubert_classes_are_triangular::<Cohomology>(&c2, 4);
}

#[test]
fn ideal_sheaf_classes_are_dual_to_y() {
    for g in [AffineWeylGroup::of_type("A", 2).unwrap(), AffineWeylGroup::of_type("C", 2).unwrap()] {
        let r = 4;
        let loc = Localization::<KTheory>::new(&g, r).unwrap();
        let nh = NilHecke::<KTheory>::new(&g);
        let ball = loc.ball(r).unwrap().to_vec();
        let ys: Vec<_> = ball.iter().map(|w| nh.y(w).unwrap()).collect();
        for v in &ball {
            let psibar = loc.ideal_sheaf(v, r).unwrap();
            assert_eq!(loc.gkm_violation(&psibar).unwrap(), None);
            let coords = schubert_coordinates(&loc, &psibar);
            for (w, y) in ball.iter().zip(&ys) {
                let mut pairing = <KTheory as Theory>::Coeff::zero();
                for (u, c) in y.terms() {
                    if let Some(a) = coords.get(u) {
                        pairing = pairing.add_ref(&c.mul_ref(a));
                    }
                }
                let expected = if v == w { 1 } else { 0 };
                assert_eq!(pairing, <KTheory as Theory>::Coeff::constant(2, expected), "{} {}", g.display(v), g.display(w));
            }
        }
    }
}

#[test]
fn schubert_classes_sum_ideal_sheaf_classes() {
    let g = AffineWeylGroup::of_type("A", 2).unwrap();
    let r = 4;
    let loc = Localization::<KTheory>::new(&g, r).unwrap();
    let ball = loc.ball(r).unwrap().to_vec();
    for v in &ball {
        let psi = loc.schubert(v, r).unwrap();
        let mut sum = loc.constant(&<KTheory as Theory>::Coeff::zero(), r).unwrap();
        for x in ball.iter().filter(|x| g.bruhat_leq(v, x)) {
            sum = loc.add(&sum, &loc.ideal_sheaf(x, r).unwrap()).unwrap();
        }
        assert!(psi.agrees_with(&sum, &loc).unwrap());
    }
    assert!(Localization::<Cohomology>::new(&g, 2).unwrap().ideal_sheaf(&g.identity(), 2).is_err());
}

fn maps_preserve_gkm<T: Theory>() {
    let g = AffineWeylGroup::of_type("A", 2).unwrap();
    let r = 6;
    let loc = Localization::<T>::new(&g, r).unwrap();
    for v in loc.ball(3).unwrap() {
        let psi = loc.schubert(v, r).unwrap();
        let theta = loc.theta(&psi).unwrap();
        let eta = loc.eta(&psi).unwrap();
        assert_eq!(loc.gkm_violation(&theta).unwrap(), None);
        assert_eq!(loc.gkm_violation(&eta).unwrap(), None);
        let lb = loc.line_bundle(&[1, -1], r).unwrap();
        assert_eq!(loc.gkm_violation(&loc.cup(&psi, &lb).unwrap()).unwrap(), None);
    }
}

#[test]
fn derived_classes_satisfy_the_gkm_condition() {
    maps_preserve_gkm::<KTheory>();
    maps_preserve_gkm::<Cohomology>();
}

#[test]
fn classes_round_trip_through_json() {
    let g = AffineWeylGroup::of_type("C", 2).unwrap();
    let loc = Localization::<KTheory>::new(&g, 3).unwrap();
    let psi = loc.schubert(&g.from_word(&[0, 1]).unwrap(), 3).unwrap();
    let json = serde_json::to_string(&psi.to_document(&loc).unwrap()).unwrap();
    let back = LocalizedClass::from_document(&loc, &serde_json::from_str(&json).unwrap()).unwrap();
    assert!(psi.agrees_with(&back, &loc).unwrap());
}
