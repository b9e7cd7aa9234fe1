//! Property-based checks of the dimension oracle and the public invariants.

use proptest::prelude::*;

use kummer_codes::oracle::{dim_l, is_gap, is_pure_gap, one_point_gaps};
use kummer_codes::output::{render, Envelope, Format, Meta, Payload};
use kummer_codes::puregap::check_pure_finite;
use kummer_codes::{Divisor, KummerCurve, Place};

fn curve_strategy() -> impl Strategy<Value = KummerCurve> {
    prop::sample::select(vec![
        (2i64, 3i64),
        (3, 2),
        (3, 4),
        (4, 3),
        (5, 2),
        (5, 4),
        (7, 2),
        (7, 3),
        (8, 3),
        (9, 4),
    ])
    .prop_map(|(m, r)| KummerCurve::new(m, r).expect("coprime pool"))
}

fn divisor_strategy() -> impl Strategy<Value = Vec<(Place, i64)>> {
    let place = prop::sample::select(vec![Place::Infinity, Place::Finite(1), Place::Finite(2)]);
    prop::collection::vec((place, -25i64..=25), 0..=3)
}

proptest! {
    // above degree 2g-2 the dimension is forced: l(D) = deg D + 1 - g
    #[test]
    fn dimension_is_exact_above_2g_minus_2(
        curve in curve_strategy(),
        parts in divisor_strategy(),
        extra in 0i64..=10,
    ) {
        let g = curve.genus();
        let base = Divisor::of(&parts);
        // push the degree past 2g-2 through the infinite place
        let lift = (2 * g - 1 - base.degree()).max(0) + extra;
        let d = base.with(Place::Infinity, lift);
        prop_assert!(d.degree() > 2 * g - 2);
        prop_assert_eq!(dim_l(&curve, &d).unwrap(), d.degree() + 1 - g);
    }

    #[test]
    fn negative_degree_has_dimension_zero(
        curve in curve_strategy(),
        parts in divisor_strategy(),
    ) {
        let d = Divisor::of(&parts);
        if d.degree() < 0 {
            prop_assert_eq!(dim_l(&curve, &d).unwrap(), 0);
        }
    }

    #[test]
    fn zero_divisor_has_dimension_one(curve in curve_strategy()) {
        prop_assert_eq!(dim_l(&curve, &Divisor::zero()).unwrap(), 1);
    }

    // adding a single place to D grows l(D) by exactly 0 or 1
    #[test]
    fn dimension_steps_are_zero_or_one(
        curve in curve_strategy(),
        parts in divisor_strategy(),
        step_infty in proptest::bool::ANY,
    ) {
        let d = Divisor::of(&parts);
        let p = if step_infty { Place::Infinity } else { Place::Finite(1) };
        let lo = dim_l(&curve, &d).unwrap();
        let hi = dim_l(&curve, &d.with(p, 1)).unwrap();
        prop_assert!(hi == lo || hi == lo + 1, "step was {}", hi - lo);
    }

    // the finite places are interchangeable, so the pure-gap predicate
    // must not depend on the order of the entries
    #[test]
    fn pure_check_is_permutation_invariant(
        curve in curve_strategy(),
        entries in prop::collection::vec(1i64..=12, 2),
        swap in proptest::bool::ANY,
    ) {
        let mut permuted = entries.clone();
        if swap {
            permuted.reverse();
        }
        prop_assert_eq!(
            check_pure_finite(&curve, &entries).unwrap(),
            check_pure_finite(&curve, &permuted).unwrap()
        );
    }

    #[test]
    fn pure_gaps_are_gaps_and_degree_bounded(
        curve in curve_strategy(),
        entries in prop::collection::vec(1i64..=15, 2),
    ) {
        let places = [Place::Finite(1), Place::Finite(2)];
        if is_pure_gap(&curve, &places, &entries).unwrap() {
            prop_assert!(is_gap(&curve, &places, &entries).unwrap());
            prop_assert!(entries.iter().sum::<i64>() < 2 * curve.genus());
        }
    }

    #[test]
    fn gap_count_equals_genus(curve in curve_strategy(), finite in proptest::bool::ANY) {
        let place = if finite { Place::Finite(1) } else { Place::Infinity };
        let gaps = one_point_gaps(&curve, place).unwrap();
        prop_assert_eq!(gaps.len() as i64, curve.genus());
    }

    #[test]
    fn u_parameter_round_trips(u in 1i64..=5, r in 2i64..=8) {
        let curve = KummerCurve::new(u * r + 1, r).unwrap();
        prop_assert_eq!(curve.u_parameter(), Some(u));
        prop_assert!(curve.require_u(u).is_ok());
    }

    #[test]
    fn json_envelope_round_trips(gaps in prop::collection::vec(1i64..=40, 0..=8)) {
        let envelope = Envelope::new(
            "gaps",
            Meta::new(Some(5), Some(4), None),
            Payload::Gaps { place: "infty".to_string(), gaps },
        );
        let rendered = render(&envelope, Format::Json);
        let value: serde_json::Value = serde_json::from_str(&rendered).unwrap();
        prop_assert_eq!(value["command"].as_str(), Some("gaps"));
        prop_assert_eq!(value["meta"]["tool"].as_str(), Some("kummer-codes"));
        prop_assert!(value["payload"]["gaps"].is_array());
        // a reparse of the reserialization is the same value
        let again: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        prop_assert_eq!(value, again);
    }
}
