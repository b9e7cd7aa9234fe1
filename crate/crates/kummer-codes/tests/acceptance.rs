//! End-to-end acceptance checks.  Each criterion prints one line,
//! PASS or FAIL with its wall time; the test fails if any line fails.
//!
//! Run with: cargo test --test acceptance -- --nocapture

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use kummer_codes::designer::hermitian_table;
use kummer_codes::verify::{
    check_closed_form_counts, check_defect_boxes, check_families, check_gamma_structure,
    check_oracle_consistency, check_pure_characterizations, check_two_point_count_assembly,
    curves_up_to_genus, CheckReport,
};
use kummer_codes::KummerCurve;

fn assert_clean(report: CheckReport) {
    assert!(report.cases > 0, "{}: no cases ran", report.name);
    assert!(
        report.passed(),
        "{}: {} of {} cases failed, first: {}",
        report.name,
        report.failures.len(),
        report.cases,
        report.failures[0]
    );
}

/// m = u*r + 1 curves for every u <= max_u, r <= max_r.
fn ur_grid(max_u: i64, max_r: i64) -> Vec<KummerCurve> {
    let mut curves = Vec::new();
    for u in 1..=max_u {
        for r in 2..=max_r {
            curves.push(KummerCurve::new(u * r + 1, r).expect("m = ur+1 is coprime to r"));
        }
    }
    curves
}

/// Twelve frozen reference rows of improved Hermitian code parameters:
/// every (q^2, s, n, k, d) row must come out of `hermitian_table` exactly.
fn table_reproduction() {
    let expected: &[(i64, i64, i64, i64, i64)] = &[
        (16, 1, 64, 48, 12),
        (16, 2, 63, 55, 6),
        (25, 1, 125, 97, 20),
        (25, 2, 124, 106, 12),
        (49, 2, 342, 295, 30),
        (49, 3, 341, 307, 20),
        (64, 1, 512, 430, 56),
        (64, 2, 511, 445, 42),
        (64, 3, 510, 459, 30),
        (64, 4, 509, 472, 20),
        (81, 3, 727, 656, 42),
        (81, 4, 726, 671, 30),
    ];
    let mut rows = Vec::new();
    for q in [4, 5, 7, 8, 9] {
        for row in hermitian_table(q).expect("prime powers") {
            rows.push((row.q_sq, row.s, row.n, row.k, row.d_bound));
        }
    }
    for want in expected {
        assert!(
            rows.contains(want),
            "missing row (q^2, s, n, k, d) = {want:?}"
        );
    }
}

fn closed_form_gap_counts() {
    assert_clean(check_closed_form_counts(&ur_grid(3, 7)));
}

fn gamma_sets() {
    assert_clean(check_gamma_structure(&curves_up_to_genus(15)));
}

fn two_point_assembly() {
    assert_clean(check_two_point_count_assembly(&curves_up_to_genus(15)));
}

fn pure_gap_characterization() {
    assert_clean(check_pure_characterizations(&curves_up_to_genus(12), 3));
}

fn family_soundness() {
    assert_clean(check_families(&ur_grid(3, 6)));
}

fn defect_bounds() {
    let mut grid = ur_grid(3, 6);
    for r in 7..=8 {
        grid.push(KummerCurve::new(r + 1, r).expect("coprime"));
    }
    assert_clean(check_defect_boxes(&grid));
}

fn oracle_self_consistency() {
    assert_clean(check_oracle_consistency(None, 0xACCE5, 10_000));
}

type Criterion = (&'static str, Option<f64>, fn());

#[test]
fn acceptance_criteria() {
    let criteria: &[Criterion] = &[
        ("table-reproduction", Some(1.0), table_reproduction),
        (
            "closed-form-gap-counts",
            Some(120.0),
            closed_form_gap_counts,
        ),
        ("gamma-sets", Some(60.0), gamma_sets),
        ("two-point-assembly", None, two_point_assembly),
        (
            "pure-gap-characterization",
            Some(300.0),
            pure_gap_characterization,
        ),
        ("family-soundness", None, family_soundness),
        ("defect-bounds", None, defect_bounds),
        ("oracle-self-consistency", None, oracle_self_consistency),
    ];
    let mut failures = Vec::new();
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let secs = start.elapsed().as_secs_f64();
        let in_time = limit.is_none_or(|cap| secs < cap);
        let ok = outcome.is_ok() && in_time;
        let verdict = if ok {
            "PASS"
        } else if outcome.is_ok() {
            "FAIL (over time limit)"
        } else {
            "FAIL"
        };
        println!("criterion {}: {name}: {verdict} ({secs:.2}s)", i + 1);
        if !ok {
            failures.push(*name);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
