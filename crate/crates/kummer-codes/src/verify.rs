//! Cross-route verification: every closed form in the library is recomputed
//! here against the exact dimension oracle, over bounded parameter sweeps.
//! Each check returns a report with a deterministic list of failure witnesses;
//! the CLI turns a non-empty list into exit code 3.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::curve::{gcd, Divisor, KummerCurve, Place};
use crate::designer::{defect_bound_finite, defect_bound_infty, design_from_box, hermitian_table};
use crate::error::Result;
use crate::oracle::{dim_l, is_gap, is_pure_gap, one_point_gaps};
use crate::puregap::{
    check_pure_finite, check_pure_with_infty, family_many_finite, family_many_infty,
    family_two_point,
};
use crate::semigroup::{closed_form_counts, count_gaps_two_points, semigroup_box, Flavor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        CheckReport {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All admissible (m, r) with genus at most max_genus, ordered by (m, r).
pub fn curves_up_to_genus(max_genus: i64) -> Vec<KummerCurve> {
    let mut out = Vec::new();
    if max_genus < 1 {
        return out;
    }
    // for r = 2 the genus is (m-1)/2, so m is bounded by 2 max_genus + 1
    let hi = 2 * max_genus + 1;
    for m in 2..=hi {
        for r in 2..=hi {
            if gcd(m, r) == 1 {
                let c = KummerCurve::new(m, r).expect("validated parameters");
                if c.genus() <= max_genus {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Ground-truth two-place gap count: scan [0, 2g-1]^2 with the oracle.
/// Tuples with a zero coordinate count when the nonzero part is a gap, so the
/// scan starts at 0, not 1.
pub fn brute_two_point_gap_count(curve: &KummerCurve, flavor: Flavor) -> Result<i64> {
    let places = flavor.places();
    let top = 2 * curve.genus() - 1;
    let mut count = 0;
    for a in 0..=top {
        for b in 0..=top {
            if is_gap(curve, &places, &[a, b])? {
                count += 1;
            }
        }
    }
    Ok(count)
}

fn oracle_semigroup_member(
    curve: &KummerCurve,
    places: [Place; 2],
    pair: (i64, i64),
) -> Result<bool> {
    let d = Divisor::of(&[(places[0], pair.0), (places[1], pair.1)]);
    let l = dim_l(curve, &d)?;
    Ok(l > dim_l(curve, &d.with(places[0], -1))? && l > dim_l(curve, &d.with(places[1], -1))?)
}

/// Generating-pair structure: exactly g pairs per flavor, coordinates project
/// bijectively onto the one-place gap sets, and each pair is an actual
/// semigroup member by the oracle.
pub fn check_gamma_structure(curves: &[KummerCurve]) -> CheckReport {
    let mut rep = CheckReport::new("gamma-structure");
    for c in curves {
        for flavor in [Flavor::FiniteFinite, Flavor::InftyFinite] {
            rep.cases += 1;
            let tag = match flavor {
                Flavor::FiniteFinite => "ff",
                Flavor::InftyFinite => "inf",
            };
            let gamma = match flavor {
                Flavor::FiniteFinite => crate::semigroup::gamma_finite_finite(c),
                Flavor::InftyFinite => crate::semigroup::gamma_infty_finite(c),
            };
            let g = c.genus();
            if gamma.len() as i64 != g {
                rep.failures.push(format!(
                    "m={} r={} flavor={tag}: {} pairs, expected g={g}",
                    c.m(),
                    c.r(),
                    gamma.len()
                ));
                continue;
            }
            let places = flavor.places();
            let mut firsts: Vec<i64> = gamma.pairs().iter().map(|p| p.0).collect();
            let mut seconds: Vec<i64> = gamma.pairs().iter().map(|p| p.1).collect();
            firsts.sort_unstable();
            firsts.dedup();
            seconds.sort_unstable();
            seconds.dedup();
            let gaps_first = one_point_gaps(c, places[0]).expect("valid place");
            let gaps_second = one_point_gaps(c, places[1]).expect("valid place");
            if firsts != gaps_first || seconds != gaps_second {
                rep.failures.push(format!(
                    "m={} r={} flavor={tag}: projections do not match the gap sets",
                    c.m(),
                    c.r()
                ));
                continue;
            }
            for &pair in gamma.pairs() {
                if !oracle_semigroup_member(c, places, pair).expect("valid places") {
                    rep.failures.push(format!(
                        "m={} r={} flavor={tag}: pair ({},{}) is not a semigroup member",
                        c.m(),
                        c.r(),
                        pair.0,
                        pair.1
                    ));
                }
            }
        }
    }
    rep
}

/// total = sum of first-place gaps + sum of second-place gaps - inversions,
/// compared against the brute-force oracle scan.
pub fn check_two_point_count_assembly(curves: &[KummerCurve]) -> CheckReport {
    let mut rep = CheckReport::new("two-point-count-assembly");
    for c in curves {
        for flavor in [Flavor::FiniteFinite, Flavor::InftyFinite] {
            rep.cases += 1;
            let assembled = count_gaps_two_points(c, flavor)
                .expect("valid flavor")
                .total;
            let brute = brute_two_point_gap_count(c, flavor).expect("valid flavor");
            if assembled != brute {
                rep.failures.push(format!(
                    "m={} r={} flavor={}: assembled {assembled} != brute {brute}",
                    c.m(),
                    c.r(),
                    if flavor == Flavor::FiniteFinite {
                        "ff"
                    } else {
                        "inf"
                    }
                ));
            }
        }
    }
    rep
}

/// A candidate closed form: maps (curve, u) to the two flavor totals.
pub type CountFormula = dyn Fn(&KummerCurve, i64) -> Result<(i64, i64)>;

/// Closed-form totals against the brute-force scan, for every curve of
/// m = u r + 1 shape in the list.  The candidate is injectable so the test
/// suite can prove a wrong formula is actually caught.
pub fn check_closed_form_counts_with(
    curves: &[KummerCurve],
    candidate: &CountFormula,
) -> CheckReport {
    let mut rep = CheckReport::new("closed-form-counts");
    for c in curves {
        let Some(u) = c.u_parameter() else { continue };
        rep.cases += 1;
        let (ff, inf) = candidate(c, u).expect("u validated");
        let brute_ff = brute_two_point_gap_count(c, Flavor::FiniteFinite).expect("valid");
        let brute_if = brute_two_point_gap_count(c, Flavor::InftyFinite).expect("valid");
        if (ff, inf) != (brute_ff, brute_if) {
            rep.failures.push(format!(
                "m={} r={} u={u}: closed form ({ff},{inf}) != brute ({brute_ff},{brute_if})",
                c.m(),
                c.r()
            ));
        }
    }
    rep
}

pub fn check_closed_form_counts(curves: &[KummerCurve]) -> CheckReport {
    check_closed_form_counts_with(curves, &|c, u| closed_form_counts(c, u))
}

fn for_each_bounded_tuple(s: usize, cap: i64, f: &mut impl FnMut(&[i64])) {
    fn rec(cur: &mut Vec<i64>, left: usize, budget: i64, f: &mut impl FnMut(&[i64])) {
        if left == 0 {
            f(cur);
            return;
        }
        // leave at least 1 per remaining coordinate
        let max = budget - (left as i64 - 1);
        for v in 1..=max {
            cur.push(v);
            rec(cur, left - 1, budget - v, f);
            cur.pop();
        }
    }
    if (s as i64) <= cap {
        rec(&mut Vec::with_capacity(s), s, cap, f);
    }
}

/// Exhaustive equivalence of the floor characterizations with the oracle over
/// every tuple of positive entries summing to at most 2g-1, for signature
/// sizes up to s_cap.  Runs per-curve in parallel; failure order stays
/// deterministic because results are flattened in curve order.
pub fn check_pure_characterizations(curves: &[KummerCurve], s_cap: i64) -> CheckReport {
    let mut rep = CheckReport::new("pure-gap-characterizations");
    let per_curve: Vec<(u64, Vec<String>)> = curves
        .par_iter()
        .map(|c| {
            let mut cases = 0u64;
            let mut failures = Vec::new();
            let cap = 2 * c.genus() - 1;
            let s_max = s_cap.min(c.r()) as usize;
            for s in 1..=s_max {
                let finite_places: Vec<Place> = (1..=s as i64).map(Place::Finite).collect();
                for_each_bounded_tuple(s, cap, &mut |t| {
                    cases += 1;
                    let fast = check_pure_finite(c, t).expect("validated tuple");
                    let slow = is_pure_gap(c, &finite_places, t).expect("validated tuple");
                    if fast != slow {
                        failures.push(format!(
                            "m={} r={} s={s} tuple={t:?}: finite characterization {fast} vs oracle {slow}",
                            c.m(),
                            c.r()
                        ));
                    }
                });
                let mut infty_places = vec![Place::Infinity];
                infty_places.extend((1..=s as i64).map(Place::Finite));
                for_each_bounded_tuple(s + 1, cap, &mut |t| {
                    cases += 1;
                    let fast = check_pure_with_infty(c, t).expect("validated tuple");
                    let slow = is_pure_gap(c, &infty_places, t).expect("validated tuple");
                    if fast != slow {
                        failures.push(format!(
                            "m={} r={} s={s} tuple={t:?}: infty characterization {fast} vs oracle {slow}",
                            c.m(),
                            c.r()
                        ));
                    }
                });
            }
            (cases, failures)
        })
        .collect();
    for (cases, failures) in per_curve {
        rep.cases += cases;
        rep.failures.extend(failures);
    }
    rep
}

/// Every tuple emitted by the family generators must pass the oracle at the
/// family's place signature.
pub fn check_families(curves: &[KummerCurve]) -> CheckReport {
    let mut rep = CheckReport::new("pure-gap-families");
    for c in curves {
        let Some(u) = c.u_parameter() else { continue };
        let r = c.r();
        let inf2 = [Place::Infinity, Place::Finite(1)];
        let fin2 = [Place::Finite(1), Place::Finite(2)];
        let fam = family_two_point(c, u).expect("u validated");
        for (label, list, places) in [
            ("infty-single", &fam.infty_single, &inf2),
            ("infty-column", &fam.infty_column, &inf2),
            ("finite-grid", &fam.finite_grid, &fin2),
        ] {
            for &(a, b) in list {
                rep.cases += 1;
                if !is_pure_gap(c, places, &[a, b]).expect("valid tuple") {
                    rep.failures.push(format!(
                        "m={} r={} family={label} tuple=({a},{b}) fails the oracle",
                        c.m(),
                        c.r()
                    ));
                }
            }
        }
        for s in 1..r {
            let places: Vec<Place> = (1..=s).map(Place::Finite).collect();
            for t in family_many_finite(c, u, s).expect("range validated") {
                rep.cases += 1;
                if !is_pure_gap(c, &places, &t).expect("valid tuple") {
                    rep.failures.push(format!(
                        "m={} r={} s={s} finite family tuple={t:?} fails the oracle",
                        c.m(),
                        c.r()
                    ));
                }
            }
        }
        for s in 1..(r - 1) {
            let mut places = vec![Place::Infinity];
            places.extend((1..=s).map(Place::Finite));
            for t in family_many_infty(c, u, s).expect("range validated") {
                rep.cases += 1;
                if !is_pure_gap(c, &places, &t).expect("valid tuple") {
                    rep.failures.push(format!(
                        "m={} r={} s={s} infty family tuple={t:?} fails the oracle",
                        c.m(),
                        c.r()
                    ));
                }
            }
        }
    }
    rep
}

/// Canonical defect boxes: build the design with the synthetic length
/// n = 2 deg G + 1 whenever the degree window opens, and require the design's
/// Singleton defect to equal the closed-form bound exactly.  The box corners
/// are additionally re-checked against the oracle.
pub fn check_defect_boxes(curves: &[KummerCurve]) -> CheckReport {
    let mut rep = CheckReport::new("defect-bound-boxes");
    for c in curves {
        let Some(u) = c.u_parameter() else { continue };
        let r = c.r();
        let g = c.genus();
        let mut jobs: Vec<(bool, i64)> = (1..r).map(|s| (false, s)).collect();
        jobs.extend((1..r - 1).map(|s| (true, s)));
        for (with_infty, s) in jobs {
            let (bound, pgbox) = if with_infty {
                defect_bound_infty(c, u, s).expect("range validated")
            } else {
                defect_bound_finite(c, u, s).expect("range validated")
            };
            let places = pgbox.places();
            for corner in [pgbox.low().to_vec(), pgbox.high().to_vec()] {
                rep.cases += 1;
                if !is_pure_gap(c, &places, &corner).expect("valid corner") {
                    rep.failures.push(format!(
                        "m={} r={} s={s} with_infty={with_infty}: corner {corner:?} fails the oracle",
                        c.m(),
                        c.r()
                    ));
                }
            }
            let deg_g = pgbox.deg_g();
            if deg_g <= 2 * g - 2 {
                continue; // window never opens for this box shape
            }
            rep.cases += 1;
            let n = 2 * deg_g + 1;
            match design_from_box(c, &pgbox, n) {
                Ok(d) if d.delta_bound == bound => {}
                Ok(d) => rep.failures.push(format!(
                    "m={} r={} s={s} with_infty={with_infty}: delta {} != bound {bound}",
                    c.m(),
                    c.r(),
                    d.delta_bound
                )),
                Err(e) => rep.failures.push(format!(
                    "m={} r={} s={s} with_infty={with_infty}: design failed: {e}",
                    c.m(),
                    c.r()
                )),
            }
        }
    }
    rep
}

/// The lub-closure box must equal oracle membership over [0, 2g]^2.
pub fn check_semigroup_boxes(curves: &[KummerCurve]) -> CheckReport {
    let mut rep = CheckReport::new("semigroup-boxes");
    for c in curves {
        for flavor in [Flavor::FiniteFinite, Flavor::InftyFinite] {
            rep.cases += 1;
            let bound = 2 * c.genus();
            let fast = semigroup_box(c, flavor, bound).expect("valid bound");
            let places = flavor.places();
            let mut slow = Vec::new();
            for a in 0..=bound {
                for b in 0..=bound {
                    if oracle_semigroup_member(c, places, (a, b)).expect("valid places") {
                        slow.push((a, b));
                    }
                }
            }
            if fast != slow {
                rep.failures.push(format!(
                    "m={} r={} flavor={}: closure box differs from oracle membership",
                    c.m(),
                    c.r(),
                    if flavor == Flavor::FiniteFinite {
                        "ff"
                    } else {
                        "inf"
                    }
                ));
            }
        }
    }
    rep
}

/// Every table row must be reproduced by the generic design path on the
/// canonical box with the table's own n.
pub fn check_hermitian_designs(max_genus: i64) -> CheckReport {
    let mut rep = CheckReport::new("hermitian-designs");
    for q in [4i64, 5, 7, 8, 9] {
        if q * (q - 1) / 2 > max_genus {
            continue;
        }
        let c = KummerCurve::new(q + 1, q).expect("validated parameters");
        for row in hermitian_table(q).expect("prime power") {
            rep.cases += 1;
            let (_, pgbox) = defect_bound_finite(&c, 1, row.s).expect("range validated");
            match design_from_box(&c, &pgbox, row.n) {
                Ok(d) if (d.n, d.k, d.d_bound) == (row.n, row.k, row.d_bound) => {}
                Ok(d) => rep.failures.push(format!(
                    "q={q} s={}: table ({},{},{}) != design ({},{},{})",
                    row.s, row.n, row.k, row.d_bound, d.n, d.k, d.d_bound
                )),
                Err(e) => rep
                    .failures
                    .push(format!("q={q} s={}: design failed: {e}", row.s)),
            }
        }
    }
    rep
}

/// Randomized self-consistency of the dimension oracle: exactness above
/// 2g-2, zero below degree 0, l(0) = 1, single steps under adding a place,
/// and g gaps at every single place.
pub fn check_oracle_consistency(max_genus: Option<i64>, seed: u64, cases: u64) -> CheckReport {
    let mut rep = CheckReport::new("oracle-consistency");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<KummerCurve> = {
        let mut v = Vec::new();
        for m in 2..=12 {
            for r in 2..=12 {
                if gcd(m, r) == 1 {
                    let c = KummerCurve::new(m, r).expect("validated");
                    if max_genus.is_none_or(|mg| c.genus() <= mg) {
                        v.push(c);
                    }
                }
            }
        }
        v
    };
    if pool.is_empty() {
        return rep;
    }
    for _ in 0..cases {
        rep.cases += 1;
        let c = pool[rng.gen_range(0..pool.len())];
        let g = c.genus();
        let r = c.r();
        let mut d = Divisor::zero();
        let support = rng.gen_range(0..=3usize);
        for _ in 0..support {
            let place = if rng.gen_bool(0.3) {
                Place::Infinity
            } else {
                Place::Finite(rng.gen_range(1..=r))
            };
            let coeff = rng.gen_range(-(2 * g + 5)..=(2 * g + 5));
            d = d.with(place, coeff);
        }
        let l = dim_l(&c, &d).expect("valid support");
        let deg = d.degree();
        if deg > 2 * g - 2 && l != deg + 1 - g {
            rep.failures.push(format!(
                "m={} r={} divisor={d:?}: l={l} != deg+1-g={}",
                c.m(),
                c.r(),
                deg + 1 - g
            ));
        }
        if deg < 0 && l != 0 {
            rep.failures.push(format!(
                "m={} r={} divisor={d:?}: negative degree but l={l}",
                c.m(),
                c.r()
            ));
        }
        if l < 0 {
            rep.failures.push(format!(
                "m={} r={} divisor={d:?}: negative dimension {l}",
                c.m(),
                c.r()
            ));
        }
        let p = if rng.gen_bool(0.3) {
            Place::Infinity
        } else {
            Place::Finite(rng.gen_range(1..=r))
        };
        let step = dim_l(&c, &d.with(p, 1)).expect("valid support") - l;
        if step != 0 && step != 1 {
            rep.failures.push(format!(
                "m={} r={} divisor={d:?} place={p}: dimension step {step}",
                c.m(),
                c.r()
            ));
        }
        if dim_l(&c, &Divisor::zero()).expect("valid") != 1 {
            rep.failures
                .push(format!("m={} r={}: l(0) != 1", c.m(), c.r()));
        }
        let gaps = one_point_gaps(&c, p).expect("valid place");
        if gaps.len() as i64 != g {
            rep.failures.push(format!(
                "m={} r={} place={p}: {} gaps, expected g={g}",
                c.m(),
                c.r(),
                gaps.len()
            ));
        }
    }
    rep
}

/// The full sweep behind `verify --max-genus G`.  Grid-driven checks use the
/// curve list up to the genus bound; family and defect grids additionally cap
/// u <= 3 and r <= 8 to keep enumeration sizes sane.
pub fn run_all(max_genus: i64, seed: u64) -> Vec<CheckReport> {
    let curves = curves_up_to_genus(max_genus);
    let family_grid: Vec<KummerCurve> = curves
        .iter()
        .filter(|c| {
            c.u_parameter()
                .is_some_and(|u| (u <= 3 && c.r() <= 6) || (u == 1 && c.r() <= 8))
        })
        .copied()
        .collect();
    vec![
        check_gamma_structure(&curves),
        check_two_point_count_assembly(&curves),
        check_closed_form_counts(&curves),
        check_pure_characterizations(&curves, 3),
        check_families(&family_grid),
        check_defect_boxes(&family_grid),
        check_semigroup_boxes(&curves),
        check_hermitian_designs(max_genus),
        check_oracle_consistency(Some(max_genus), seed, 10_000),
    ]
}
