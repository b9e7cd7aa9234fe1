//! Pure-gap machinery: fast arithmetic characterizations (one floor test per
//! eigenspace index), the explicit tuple families that come with proofs of
//! purity, bounded exhaustive enumeration, and box verification.

use crate::curve::{div_floor, KummerCurve, Place};
use crate::error::{KummerError, Result};
use crate::oracle::is_pure_gap;

/// Shared core of both characterizations.  A tuple is pure iff for every
/// t in 0..m the eigenspace degree is negative, or it is non-negative and
/// dropping any listed place by one does not change any floor term.
fn pure_by_floors(m: i64, r: i64, infty_entry: Option<i64>, finite: &[i64]) -> bool {
    for t in 0..m {
        let a0 = infty_entry.unwrap_or(0);
        let inf_term = div_floor(a0 - r * t, m);
        let total: i64 = inf_term + finite.iter().map(|&a| div_floor(a + t, m)).sum::<i64>();
        if total < 0 {
            continue;
        }
        if infty_entry.is_some() && inf_term != div_floor(a0 - 1 - r * t, m) {
            return false;
        }
        if finite
            .iter()
            .any(|&a| div_floor(a + t, m) != div_floor(a - 1 + t, m))
        {
            return false;
        }
    }
    true
}

fn validate_entries(entries: &[i64]) -> Result<()> {
    for &a in entries {
        if a < 1 {
            return Err(KummerError::EntryOutOfRange { value: a, min: 1 });
        }
    }
    Ok(())
}

/// Pure-gap test at (P_1, .., P_s), s = entries.len().  Agrees with the
/// dimension oracle everywhere; costs O(m s) instead of divisor arithmetic.
pub fn check_pure_finite(curve: &KummerCurve, entries: &[i64]) -> Result<bool> {
    let s = entries.len();
    if s == 0 {
        return Err(KummerError::EmptyPlaces);
    }
    if s as i64 > curve.r() {
        return Err(KummerError::TooManyPlaces {
            s,
            max: curve.r() as usize,
        });
    }
    validate_entries(entries)?;
    Ok(pure_by_floors(curve.m(), curve.r(), None, entries))
}

/// Pure-gap test at (P_infty, P_1, .., P_s); entries = (a_0, a_1, .., a_s),
/// so entries.len() >= 2.
pub fn check_pure_with_infty(curve: &KummerCurve, entries: &[i64]) -> Result<bool> {
    if entries.is_empty() {
        return Err(KummerError::EmptyPlaces);
    }
    let s = entries.len() - 1;
    if s == 0 {
        return Err(KummerError::SOutOfRange {
            s: 0,
            max: curve.r(),
        });
    }
    if s as i64 > curve.r() {
        return Err(KummerError::TooManyPlaces {
            s,
            max: curve.r() as usize,
        });
    }
    validate_entries(entries)?;
    Ok(pure_by_floors(
        curve.m(),
        curve.r(),
        Some(entries[0]),
        &entries[1..],
    ))
}

/// The three closed-form two-place families for m = u r + 1.  A list is empty
/// when its first entry would be non-positive for these parameters (small r);
/// the generators never emit an unproven tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPointFamilies {
    /// ((r-1)m - 2r, 1) at (P_infty, P_1).
    pub infty_single: Vec<(i64, i64)>,
    /// ((r-2)m - r, b), b = 1..u+1, at (P_infty, P_1).
    pub infty_column: Vec<(i64, i64)>,
    /// ((r-3)m + 1 + alpha, 1 + beta), alpha < 2u, beta < u, at (P_1, P_2).
    pub finite_grid: Vec<(i64, i64)>,
}

pub fn family_two_point(curve: &KummerCurve, u: i64) -> Result<TwoPointFamilies> {
    curve.require_u(u)?;
    let (m, r) = (curve.m(), curve.r());

    let mut infty_single = Vec::new();
    let a = (r - 1) * m - 2 * r;
    if a >= 1 {
        infty_single.push((a, 1));
    }

    let mut infty_column = Vec::new();
    let a = (r - 2) * m - r;
    if a >= 1 {
        for b in 1..=(u + 1) {
            infty_column.push((a, b));
        }
    }

    let mut finite_grid = Vec::new();
    let base = (r - 3) * m + 1;
    if base >= 1 {
        for alpha in 0..(2 * u) {
            for beta in 0..u {
                finite_grid.push((base + alpha, 1 + beta));
            }
        }
    }
    finite_grid.sort_unstable();

    Ok(TwoPointFamilies {
        infty_single,
        infty_column,
        finite_grid,
    })
}

/// Odometer over a product of ranges, lexicographic.  ranges[i] = (start, count).
fn product_tuples(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur: Vec<i64> = ranges.iter().map(|&(s, _)| s).collect();
    'outer: loop {
        out.push(cur.clone());
        for i in (0..ranges.len()).rev() {
            let (start, count) = ranges[i];
            if cur[i] + 1 < start + count {
                cur[i] += 1;
                continue 'outer;
            }
            cur[i] = start;
        }
        break;
    }
    out
}

/// All u^s s! tuples ((r-s-1)m + 1 + a_1, 1 + a_2, .., 1 + a_s) with
/// a_i < (s+1-i) u, pure at (P_1, .., P_s).  Requires 1 <= s < r.
pub fn family_many_finite(curve: &KummerCurve, u: i64, s: i64) -> Result<Vec<Vec<i64>>> {
    curve.require_u(u)?;
    let (m, r) = (curve.m(), curve.r());
    if s < 1 || s >= r {
        return Err(KummerError::SOutOfRange { s, max: r - 1 });
    }
    let base = (r - s - 1) * m + 1;
    let mut ranges = vec![(base, s * u)];
    for i in 2..=s {
        ranges.push((1, (s + 1 - i) * u));
    }
    Ok(product_tuples(&ranges))
}

/// All (s+1)! u^s tuples ((r-s-1)m - r + alpha, 1 + b_1, .., 1 + b_s) with
/// alpha <= s and b_i < i u, pure at (P_infty, P_1, .., P_s).
/// Requires 1 <= s < r - 1; the first entry is then automatically positive.
pub fn family_many_infty(curve: &KummerCurve, u: i64, s: i64) -> Result<Vec<Vec<i64>>> {
    curve.require_u(u)?;
    let (m, r) = (curve.m(), curve.r());
    if s < 1 || s >= r - 1 {
        return Err(KummerError::SOutOfRange { s, max: r - 2 });
    }
    let base = (r - s - 1) * m - r;
    debug_assert!(base >= 1);
    let mut ranges = vec![(base, s + 1)];
    for i in 1..=s {
        ranges.push((1, i * u));
    }
    Ok(product_tuples(&ranges))
}

/// An axis-aligned lattice box of candidate pure-gap tuples.
/// When with_infty, index 0 of low/high is the P_infty coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureGapBox {
    low: Vec<i64>,
    high: Vec<i64>,
    with_infty: bool,
}

impl PureGapBox {
    pub fn new(low: Vec<i64>, high: Vec<i64>, with_infty: bool) -> Result<Self> {
        if low.is_empty()
            || low.len() != high.len()
            || low.iter().zip(&high).any(|(&a, &b)| a < 1 || a > b)
        {
            return Err(KummerError::InvalidBox);
        }
        if with_infty && low.len() < 2 {
            return Err(KummerError::InvalidBox);
        }
        Ok(PureGapBox {
            low,
            high,
            with_infty,
        })
    }

    pub fn low(&self) -> &[i64] {
        &self.low
    }

    pub fn high(&self) -> &[i64] {
        &self.high
    }

    pub fn with_infty(&self) -> bool {
        self.with_infty
    }

    /// Number of coordinates (P_infty included when present).
    pub fn arity(&self) -> usize {
        self.low.len()
    }

    /// Sum of high_i - low_i.
    pub fn span(&self) -> i64 {
        self.high.iter().zip(&self.low).map(|(&b, &a)| b - a).sum()
    }

    /// Degree of G = sum (low_i + high_i - 1) P_i.
    pub fn deg_g(&self) -> i64 {
        self.low
            .iter()
            .zip(&self.high)
            .map(|(&a, &b)| a + b - 1)
            .sum()
    }

    /// The place signature the box refers to.
    pub fn places(&self) -> Vec<Place> {
        let mut out = Vec::with_capacity(self.arity());
        if self.with_infty {
            out.push(Place::Infinity);
            for i in 1..self.arity() as i64 {
                out.push(Place::Finite(i));
            }
        } else {
            for i in 1..=self.arity() as i64 {
                out.push(Place::Finite(i));
            }
        }
        out
    }

    /// Lattice points, lexicographic.
    pub fn tuples(&self) -> Vec<Vec<i64>> {
        let ranges: Vec<(i64, i64)> = self
            .low
            .iter()
            .zip(&self.high)
            .map(|(&a, &b)| (a, b - a + 1))
            .collect();
        product_tuples(&ranges)
    }
}

fn check_box_arity(curve: &KummerCurve, pgbox: &PureGapBox) -> Result<()> {
    let finite = if pgbox.with_infty() {
        pgbox.arity() - 1
    } else {
        pgbox.arity()
    };
    if finite as i64 > curve.r() {
        return Err(KummerError::TooManyPlaces {
            s: finite,
            max: curve.r() as usize,
        });
    }
    Ok(())
}

/// First lattice point of the box failing the pure-gap characterization,
/// in lexicographic order; None when the whole box is pure.
pub fn first_impure(curve: &KummerCurve, pgbox: &PureGapBox) -> Result<Option<Vec<i64>>> {
    check_box_arity(curve, pgbox)?;
    for t in pgbox.tuples() {
        let ok = if pgbox.with_infty() {
            check_pure_with_infty(curve, &t)?
        } else {
            check_pure_finite(curve, &t)?
        };
        if !ok {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Is every lattice point of the box a pure gap?
pub fn verify_box(curve: &KummerCurve, pgbox: &PureGapBox) -> Result<bool> {
    Ok(first_impure(curve, pgbox)?.is_none())
}

/// Which pure-gap test to use while enumerating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CheckMode {
    /// The floor-based characterization (fast path).
    #[default]
    Characterization,
    /// The dimension oracle (ground truth; slower).
    Oracle,
}

/// All pure gaps at the given places with entry sum <= bound, lexicographic.
/// The effective bound is capped at 2g-1, past which nothing can be a gap.
/// Default bound: 2g-1.  The signature needs at least one finite place; the
/// infinite place, when present, comes first and owns entry 0.
pub fn enumerate_pure_gaps(
    curve: &KummerCurve,
    places: &[Place],
    bound: Option<i64>,
    mode: CheckMode,
) -> Result<Vec<Vec<i64>>> {
    curve.validate_places(places)?;
    let with_infty = places[0] == Place::Infinity;
    if with_infty && places.len() == 1 {
        return Err(KummerError::SOutOfRange {
            s: 0,
            max: curve.r(),
        });
    }
    let cap = 2 * curve.genus() - 1;
    let cap = bound.unwrap_or(cap).min(cap);
    let s = places.len();
    let mut out = Vec::new();
    let mut cur = vec![1i64; s];
    if (s as i64) > cap {
        return Ok(out);
    }
    loop {
        let sum: i64 = cur.iter().sum();
        if sum <= cap {
            let ok = match mode {
                CheckMode::Characterization => {
                    if with_infty {
                        check_pure_with_infty(curve, &cur)?
                    } else {
                        check_pure_finite(curve, &cur)?
                    }
                }
                CheckMode::Oracle => is_pure_gap(curve, places, &cur)?,
            };
            if ok {
                out.push(cur.clone());
            }
        }
        // advance lexicographically, skipping suffixes once the sum overflows
        let mut i = s;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            cur[i] += 1;
            for v in cur[i + 1..].iter_mut() {
                *v = 1;
            }
            if cur[..=i].iter().sum::<i64>() + (s - 1 - i) as i64 <= cap {
                break;
            }
            if i == 0 {
                return Ok(out);
            }
            cur[i] = 1;
        }
    }
}

/// Greedy box growth around a pure seed tuple: repeatedly extend one face by
/// one while the added slab stays pure.  Plumbing for design exploration; the
/// result is maximal for single-step extensions, nothing stronger is claimed.
pub fn grow_box(curve: &KummerCurve, seed: &[i64], with_infty: bool) -> Result<PureGapBox> {
    let seed_box = PureGapBox::new(seed.to_vec(), seed.to_vec(), with_infty)?;
    if let Some(w) = first_impure(curve, &seed_box)? {
        return Err(KummerError::BoxNotPure { witness: w });
    }
    let mut low = seed.to_vec();
    let mut high = seed.to_vec();
    let arity = seed.len();
    loop {
        let mut grew = false;
        for i in 0..arity {
            // upper face
            let mut slab_low = low.clone();
            let mut slab_high = high.clone();
            slab_low[i] = high[i] + 1;
            slab_high[i] = high[i] + 1;
            let slab = PureGapBox::new(slab_low, slab_high, with_infty)?;
            if first_impure(curve, &slab)?.is_none() {
                high[i] += 1;
                grew = true;
            }
            // lower face
            if low[i] > 1 {
                let mut slab_low = low.clone();
                let mut slab_high = high.clone();
                slab_low[i] = low[i] - 1;
                slab_high[i] = low[i] - 1;
                let slab = PureGapBox::new(slab_low, slab_high, with_infty)?;
                if first_impure(curve, &slab)?.is_none() {
                    low[i] -= 1;
                    grew = true;
                }
            }
        }
        if !grew {
            return PureGapBox::new(low, high, with_infty);
        }
    }
}
