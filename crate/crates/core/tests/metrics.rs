//! Quality indicator properties on random fronts.

use proptest::prelude::*;
use rfqmst::metrics::{
    build_reference_front, epsilon_additive, gd, hypervolume, igd, normalize, spread,
    summarize_runs, Front, Indicators,
};
use rfqmst::{dominates, ObjectivePair};

fn arb_points(max: usize) -> impl Strategy<Value = Vec<ObjectivePair<f64>>> {
    prop::collection::vec((0.0..100.0f64, 0.0..100.0f64), 1..max).prop_map(|v| {
        v.into_iter()
            .map(|(a, b)| ObjectivePair::new(a, b))
            .collect()
    })
}

proptest! {
    #[test]
    fn fronts_are_nondominated(points in arb_points(60)) {
        let f = Front::new(points.clone());
        for a in f.points() {
            prop_assert!(f.points().iter().all(|b| !dominates(b, a)));
        }
        for p in &points {
            prop_assert!(f.points().iter().any(|q| q == p || dominates(q, p)));
        }
    }

    #[test]
    fn self_comparison_is_zero(points in arb_points(40)) {
        let f = Front::new(points);
        let nf = normalize(&f, &f);
        prop_assert_eq!(gd(&nf, &nf), 0.0);
        prop_assert_eq!(igd(&nf, &nf), 0.0);
        prop_assert_eq!(epsilon_additive(&nf, &nf), 0.0);
    }

    #[test]
    fn hypervolume_monotone_and_bounded(points in arb_points(40), extra in arb_points(10)) {
        let reference = build_reference_front(&[
            Front::new(points.clone()),
            Front::new(extra.clone()),
        ]);
        let f = Front::new(points.clone());
        let hv = hypervolume(&normalize(&f, &reference));
        prop_assert!((0.0..=1.0).contains(&hv));
        for p in &extra {
            if f.points().iter().any(|q| dominates(q, p)) {
                continue;
            }
            let mut more = points.clone();
            more.push(*p);
            let hv2 = hypervolume(&normalize(&Front::new(more), &reference));
            prop_assert!(hv2 + 1e-12 >= hv);
        }
    }

    #[test]
    fn indicators_permutation_invariant(points in arb_points(30), other in arb_points(30)) {
        let reference = Front::new(other);
        let mut rev = points.clone();
        rev.reverse();
        let a = Indicators::compute(&Front::new(points), &reference);
        let b = Indicators::compute(&Front::new(rev), &reference);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn epsilon_sign(points in arb_points(30), other in arb_points(30)) {
        let reference = build_reference_front(&[Front::new(points.clone()), Front::new(other)]);
        let f = Front::new(points);
        let (nf, nr) = (normalize(&f, &reference), normalize(&reference, &reference));
        prop_assert!(epsilon_additive(&nf, &nr) >= 0.0);
        prop_assert!(spread(&nf, &nr) >= 0.0);
        prop_assert!(epsilon_additive(&nr, &nf) <= 0.0 + 1e-12);
    }

    #[test]
    fn run_statistics_are_nonnegative(values in prop::collection::vec(-1e3..1e3f64, 1..50)) {
        let s = summarize_runs(&values);
        prop_assert!(s.sd >= 0.0 && s.iqr >= 0.0);
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(s.median >= lo && s.median <= hi);
        prop_assert!(s.mean >= lo - 1e-9 && s.mean <= hi + 1e-9);
    }
}

#[test]
fn origin_has_unit_hypervolume() {
    let f = Front::new(vec![ObjectivePair::new(0.0, 0.0)]);
    assert_eq!(hypervolume(&f), 1.0);
}
