//! From verified pure-gap boxes to AG-code parameter claims.
//!
//! For a box [low, high] of pure gaps at places Q_1..Q_s' set
//! G = sum (low_i + high_i - 1) Q_i and evaluate at the remaining rational
//! places.  Inside the window 2g-2 < deg G < n the dimension is exact,
//! k = n + g - 1 - deg G, and the minimum distance satisfies
//! d >= deg G - (2g-2) + s' + sum (high_i - low_i).

use serde::Serialize;

use crate::curve::{is_prime_power, KummerCurve};
use crate::error::{KummerError, Result};
use crate::puregap::{first_impure, PureGapBox};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeDesign {
    /// Code length (number of evaluation places); caller-supplied.
    pub n: i64,
    pub deg_g: i64,
    /// Exact dimension inside the degree window.
    pub k: i64,
    /// Lower bound on the minimum distance.
    pub d_bound: i64,
    /// n + 1 - k - d_bound; how far the design can sit from Singleton.
    pub delta_bound: i64,
    /// Places in the box signature, the infinite place included when present.
    pub s: i64,
    pub with_infty: bool,
}

pub fn design_from_box(curve: &KummerCurve, pgbox: &PureGapBox, n: i64) -> Result<CodeDesign> {
    if let Some(witness) = first_impure(curve, pgbox)? {
        return Err(KummerError::BoxNotPure { witness });
    }
    let g = curve.genus();
    let deg_g = pgbox.deg_g();
    if deg_g <= 2 * g - 2 || deg_g >= n {
        return Err(KummerError::DegreeOutOfRange {
            deg_g,
            lower: 2 * g - 2,
            upper: n,
        });
    }
    let s = pgbox.arity() as i64;
    let k = n + g - 1 - deg_g;
    let d_bound = deg_g - (2 * g - 2) + s + pgbox.span();
    Ok(CodeDesign {
        n,
        deg_g,
        k,
        d_bound,
        delta_bound: n + 1 - k - d_bound,
        s,
        with_infty: pgbox.with_infty(),
    })
}

fn finite_canonical_box(curve: &KummerCurve, u: i64, s: i64) -> Result<PureGapBox> {
    let (m, r) = (curve.m(), curve.r());
    if s < 1 || s > r - 1 {
        return Err(KummerError::SOutOfRange { s, max: r - 1 });
    }
    let base = (r - s - 1) * m;
    let mut low = vec![base + 1];
    let mut high = vec![base + s * u];
    for i in 2..=s {
        low.push(1);
        high.push((s + 1 - i) * u);
    }
    PureGapBox::new(low, high, false)
}

fn infty_canonical_box(curve: &KummerCurve, u: i64, s: i64) -> Result<PureGapBox> {
    let (m, r) = (curve.m(), curve.r());
    if s < 1 || s > r - 2 {
        return Err(KummerError::SOutOfRange { s, max: r - 2 });
    }
    let base = (r - s - 1) * m - r;
    let mut low = vec![base];
    let mut high = vec![base + s];
    for i in 1..=s {
        low.push(1);
        high.push(i * u);
    }
    PureGapBox::new(low, high, true)
}

fn u_times(u: i64, v: i64) -> Result<i64> {
    u.checked_mul(v).ok_or(KummerError::Overflow)
}

/// Singleton-defect bound u (r(r-1) - s(s+1)) / 2 for the canonical all-finite
/// box at s places, returned together with that box.  Any design built from
/// the box with an in-window n meets the bound with equality.
pub fn defect_bound_finite(curve: &KummerCurve, u: i64, s: i64) -> Result<(i64, PureGapBox)> {
    curve.require_u(u)?;
    let r = curve.r();
    let pgbox = finite_canonical_box(curve, u, s)?;
    let num = u_times(u, r * (r - 1) - s * (s + 1))?;
    debug_assert_eq!(num % 2, 0);
    Ok((num / 2, pgbox))
}

/// Same bound minus s + 1 for the canonical box at (P_infty, P_1, .., P_s).
pub fn defect_bound_infty(curve: &KummerCurve, u: i64, s: i64) -> Result<(i64, PureGapBox)> {
    curve.require_u(u)?;
    let r = curve.r();
    let pgbox = infty_canonical_box(curve, u, s)?;
    let num = u_times(u, r * (r - 1) - s * (s + 1))?;
    debug_assert_eq!(num % 2, 0);
    Ok((num / 2 - s - 1, pgbox))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HermitianRow {
    pub q_sq: i64,
    pub s: i64,
    pub n: i64,
    pub k: i64,
    pub d_bound: i64,
}

/// Two-point-improved code parameters on the Hermitian curve y^{q+1} = x^q + x
/// over F_{q^2}: for each s with the degree window open,
///   n = q^3 + 1 - s,
///   deg G = 2 (q-s-1)(q+1) + s(s+1)/2,
///   k = n + g - 1 - deg G,
///   d >= q^2 - (2s-1) q + s^2 - s.
/// Out-of-window values of s are skipped.  This is the closed-form route; the
/// verification sweep rebuilds every row independently via design_from_box.
pub fn hermitian_table(q: i64) -> Result<Vec<HermitianRow>> {
    if q < 3 {
        return Err(KummerError::ParameterTooSmall {
            name: "q",
            value: q,
            min: 3,
        });
    }
    if !is_prime_power(q) {
        return Err(KummerError::NotPrimePower { q });
    }
    let g = q * (q - 1) / 2;
    let q3 = q
        .checked_mul(q)
        .and_then(|v| v.checked_mul(q))
        .ok_or(KummerError::Overflow)?;
    let mut rows = Vec::new();
    for s in 1..=(q - 1) {
        let n = q3 + 1 - s;
        let deg_g = 2 * (q - s - 1) * (q + 1) + s * (s + 1) / 2;
        if deg_g <= 2 * g - 2 || deg_g >= n {
            continue;
        }
        let k = n + g - 1 - deg_g;
        let d_bound = q * q - (2 * s - 1) * q + s * s - s;
        rows.push(HermitianRow {
            q_sq: q * q,
            s,
            n,
            k,
            d_bound,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(m: i64, r: i64) -> KummerCurve {
        KummerCurve::new(m, r).unwrap()
    }

    fn rows(v: &[(i64, i64, i64, i64, i64)]) -> Vec<HermitianRow> {
        v.iter()
            .map(|&(q_sq, s, n, k, d_bound)| HermitianRow {
                q_sq,
                s,
                n,
                k,
                d_bound,
            })
            .collect()
    }

    #[test]
    fn hermitian_tables_small_q() {
        assert_eq!(
            hermitian_table(4).unwrap(),
            rows(&[(16, 1, 64, 48, 12), (16, 2, 63, 55, 6)])
        );
        assert_eq!(
            hermitian_table(5).unwrap(),
            rows(&[(25, 1, 125, 97, 20), (25, 2, 124, 106, 12)])
        );
        assert_eq!(
            hermitian_table(7).unwrap(),
            rows(&[
                (49, 1, 343, 282, 42),
                (49, 2, 342, 295, 30),
                (49, 3, 341, 307, 20),
                (49, 4, 340, 318, 12)
            ])
        );
        assert_eq!(
            hermitian_table(8).unwrap(),
            rows(&[
                (64, 1, 512, 430, 56),
                (64, 2, 511, 445, 42),
                (64, 3, 510, 459, 30),
                (64, 4, 509, 472, 20)
            ])
        );
        assert_eq!(
            hermitian_table(9).unwrap(),
            rows(&[
                (81, 1, 729, 623, 72),
                (81, 2, 728, 640, 56),
                (81, 3, 727, 656, 42),
                (81, 4, 726, 671, 30),
                (81, 5, 725, 685, 20)
            ])
        );
    }

    #[test]
    fn hermitian_rejects_bad_q() {
        assert_eq!(
            hermitian_table(2),
            Err(KummerError::ParameterTooSmall {
                name: "q",
                value: 2,
                min: 3
            })
        );
        assert_eq!(hermitian_table(6), Err(KummerError::NotPrimePower { q: 6 }));
    }

    #[test]
    fn hermitian_rows_re_derive_via_design_from_box() {
        for q in [4, 5, 7, 8, 9] {
            let c = curve(q + 1, q);
            for row in hermitian_table(q).unwrap() {
                let (_, pgbox) = defect_bound_finite(&c, 1, row.s).unwrap();
                let d = design_from_box(&c, &pgbox, row.n).unwrap();
                assert_eq!(
                    (d.n, d.k, d.d_bound),
                    (row.n, row.k, row.d_bound),
                    "q={q} s={}",
                    row.s
                );
                assert_eq!(
                    d.deg_g,
                    2 * (q - row.s - 1) * (q + 1) + row.s * (row.s + 1) / 2
                );
            }
        }
    }

    #[test]
    fn defect_bounds_known_values() {
        assert_eq!(defect_bound_finite(&curve(5, 4), 1, 1).unwrap().0, 5);
        assert_eq!(defect_bound_finite(&curve(9, 8), 1, 2).unwrap().0, 25);
        assert_eq!(defect_bound_finite(&curve(3, 2), 1, 1).unwrap().0, 0);
        assert_eq!(defect_bound_infty(&curve(5, 4), 1, 1).unwrap().0, 3);
        assert_eq!(defect_bound_infty(&curve(9, 8), 1, 2).unwrap().0, 22);
        assert_eq!(defect_bound_infty(&curve(7, 3), 2, 1).unwrap().0, 2);
    }

    #[test]
    fn canonical_boxes_known_shapes() {
        let (_, b) = defect_bound_finite(&curve(5, 4), 1, 1).unwrap();
        assert_eq!((b.low(), b.high()), (&[11][..], &[11][..]));
        let (_, b) = defect_bound_finite(&curve(9, 8), 1, 2).unwrap();
        assert_eq!((b.low(), b.high()), (&[46, 1][..], &[47, 1][..]));
        let (_, b) = defect_bound_finite(&curve(5, 4), 1, 2).unwrap();
        assert_eq!((b.low(), b.high()), (&[6, 1][..], &[7, 1][..]));
        let (_, b) = defect_bound_finite(&curve(5, 4), 1, 3).unwrap();
        assert_eq!((b.low(), b.high()), (&[1, 1, 1][..], &[3, 2, 1][..]));
        let (_, b) = defect_bound_infty(&curve(5, 4), 1, 1).unwrap();
        assert_eq!((b.low(), b.high()), (&[6, 1][..], &[7, 1][..]));
        assert!(b.with_infty());
        let (_, b) = defect_bound_infty(&curve(9, 8), 1, 2).unwrap();
        assert_eq!((b.low(), b.high()), (&[37, 1, 1][..], &[39, 1, 2][..]));
    }

    #[test]
    fn defect_bound_range_errors() {
        assert_eq!(
            defect_bound_finite(&curve(5, 4), 1, 4),
            Err(KummerError::SOutOfRange { s: 4, max: 3 })
        );
        assert_eq!(
            defect_bound_infty(&curve(5, 4), 1, 3),
            Err(KummerError::SOutOfRange { s: 3, max: 2 })
        );
        assert_eq!(
            defect_bound_finite(&curve(8, 3), 1, 1),
            Err(KummerError::NotUrPlusOne { m: 8, r: 3 })
        );
    }

    #[test]
    fn canonical_box_designs_meet_bound_with_equality() {
        for (u, r, s) in [
            (1i64, 4i64, 1i64),
            (1, 4, 2),
            (2, 3, 1),
            (1, 5, 2),
            (2, 4, 2),
        ] {
            let c = curve(u * r + 1, r);
            let (bound, pgbox) = defect_bound_finite(&c, u, s).unwrap();
            let n = 2 * pgbox.deg_g() + 1;
            let d = design_from_box(&c, &pgbox, n).unwrap();
            assert_eq!(d.delta_bound, bound, "finite u={u} r={r} s={s}");
        }
        // samples chosen with deg G > 2g-2 so the window admits them
        for (u, r, s) in [
            (1i64, 4i64, 1i64),
            (2, 4, 1),
            (1, 5, 1),
            (1, 6, 2),
            (3, 3, 1),
        ] {
            let c = curve(u * r + 1, r);
            let (bound, pgbox) = defect_bound_infty(&c, u, s).unwrap();
            let n = 2 * pgbox.deg_g() + 1;
            let d = design_from_box(&c, &pgbox, n).unwrap();
            assert_eq!(d.delta_bound, bound, "infty u={u} r={r} s={s}");
        }
    }

    #[test]
    fn design_rejects_bad_boxes_and_windows() {
        let c = curve(5, 4);
        let impure = PureGapBox::new(vec![4, 4], vec![4, 4], false).unwrap();
        assert_eq!(
            design_from_box(&c, &impure, 100),
            Err(KummerError::BoxNotPure {
                witness: vec![4, 4]
            })
        );
        let (_, pgbox) = defect_bound_finite(&c, 1, 1).unwrap(); // deg G = 21
        assert_eq!(
            design_from_box(&c, &pgbox, 21),
            Err(KummerError::DegreeOutOfRange {
                deg_g: 21,
                lower: 10,
                upper: 21
            })
        );
        // window also fails below: a tiny pure box on a large-genus curve
        let c = curve(9, 8); // g = 28
        let small = PureGapBox::new(vec![1, 1], vec![1, 1], false).unwrap();
        let err = design_from_box(&c, &small, 100).unwrap_err();
        assert_eq!(
            err,
            KummerError::DegreeOutOfRange {
                deg_g: 2,
                lower: 54,
                upper: 100
            }
        );
    }

    #[test]
    fn degenerate_box_distance_bound() {
        let c = curve(5, 4);
        let b = PureGapBox::new(vec![11], vec![11], false).unwrap();
        let d = design_from_box(&c, &b, 64).unwrap();
        // span 0: d_bound = deg_g - (2g-2) + s
        assert_eq!(d.d_bound, d.deg_g - (2 * c.genus() - 2) + 1);
        assert_eq!(d.delta_bound, d.n + 1 - d.k - d.d_bound);
    }
}
