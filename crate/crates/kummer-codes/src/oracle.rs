//! Exact Riemann-Roch dimensions for divisors supported on the fully ramified
//! places of y^m = f(x).
//!
//! The function field F = k(x, y) decomposes over k(x) into the m eigenspaces
//! y^t * k(x), 0 <= t < m.  Intersecting L(D) with each eigenspace reduces the
//! dimension count to m independent rational function fields, one floor
//! expression per place.  Everything below is integer arithmetic, so the
//! dimensions are exact and serve as the ground truth the closed forms are
//! checked against.

use crate::curve::{div_floor, Divisor, KummerCurve, Place};
use crate::error::{KummerError, Result};

/// One effective degree per eigenspace index t = 0..m-1.
///
/// Component t has degree  floor((a_0 - r t)/m) + sum_i floor((a_i + t)/m)
/// where a_0 is the coefficient at the infinite place and a_i the coefficient
/// at the i-th finite ramified place.  Places absent from the divisor
/// contribute 0 for every t in 0..m, so only the support matters.
pub fn restriction_profile(curve: &KummerCurve, divisor: &Divisor) -> Result<Vec<i64>> {
    let m = curve.m();
    let r = curve.r();
    for (p, _) in divisor.iter() {
        curve.validate_place(p)?;
    }
    let a0 = divisor.coeff(Place::Infinity);
    let finite: Vec<i64> = divisor
        .iter()
        .filter_map(|(p, c)| match p {
            Place::Finite(_) => Some(c),
            Place::Infinity => None,
        })
        .collect();
    let mut profile = Vec::with_capacity(m as usize);
    for t in 0..m {
        let mut deg = div_floor(a0 - r * t, m);
        for &a in &finite {
            deg += div_floor(a + t, m);
        }
        profile.push(deg);
    }
    Ok(profile)
}

/// dim L(D): sum over the profile of max(0, deg_t + 1).
pub fn dim_l(curve: &KummerCurve, divisor: &Divisor) -> Result<i64> {
    Ok(restriction_profile(curve, divisor)?
        .iter()
        .map(|&d| (d + 1).max(0))
        .sum())
}

fn tuple_divisor(
    curve: &KummerCurve,
    places: &[Place],
    tuple: &[i64],
    min_entry: i64,
) -> Result<Divisor> {
    curve.validate_places(places)?;
    if tuple.len() != places.len() {
        return Err(KummerError::ArityMismatch {
            expected: places.len(),
            got: tuple.len(),
        });
    }
    for &a in tuple {
        if a < min_entry {
            return Err(KummerError::EntryOutOfRange {
                value: a,
                min: min_entry,
            });
        }
    }
    let pairs: Vec<(Place, i64)> = places.iter().copied().zip(tuple.iter().copied()).collect();
    Ok(Divisor::of(&pairs))
}

/// Is the tuple a gap at (P_j1, .., P_js)?  True iff removing some single place
/// from D = sum a_j P_j leaves the dimension unchanged, i.e. the tuple is not
/// realized as an exact pole-order vector.  Entries may be zero.
pub fn is_gap(curve: &KummerCurve, places: &[Place], tuple: &[i64]) -> Result<bool> {
    let d = tuple_divisor(curve, places, tuple, 0)?;
    let l = dim_l(curve, &d)?;
    for &p in places {
        if dim_l(curve, &d.with(p, -1))? == l {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Is the tuple a pure gap?  True iff the dimension stays unchanged when every
/// listed place is removed at once, which forces it unchanged under removing
/// any subset.  Entries must be positive.
pub fn is_pure_gap(curve: &KummerCurve, places: &[Place], tuple: &[i64]) -> Result<bool> {
    let d = tuple_divisor(curve, places, tuple, 1)?;
    let mut stripped = d.clone();
    for &p in places {
        stripped = stripped.with(p, -1);
    }
    Ok(dim_l(curve, &d)? == dim_l(curve, &stripped)?)
}

/// The g gap numbers at a single fully ramified place, ascending.
/// Every gap lies in [1, 2g-1].
pub fn one_point_gaps(curve: &KummerCurve, place: Place) -> Result<Vec<i64>> {
    curve.validate_place(place)?;
    let g = curve.genus();
    let mut gaps = Vec::with_capacity(g as usize);
    let mut prev = dim_l(curve, &Divisor::zero())?;
    let mut d = Divisor::zero();
    for n in 1..=(2 * g - 1) {
        d = d.with(place, 1);
        let cur = dim_l(curve, &d)?;
        if cur == prev {
            gaps.push(n);
        }
        prev = cur;
    }
    debug_assert_eq!(gaps.len() as i64, g);
    Ok(gaps)
}
