//! Two-place gap structure: the minimal generating pairs of the joint
//! Weierstrass semigroup, inversion counts, and the closed-form totals they
//! assemble into.

use std::collections::BTreeSet;

use crate::curve::{div_ceil, div_floor, KummerCurve, Place};
use crate::error::{KummerError, Result};
use crate::oracle::one_point_gaps;

/// Which pair of fully ramified places a two-place quantity refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// (P_1, P_2): two finite ramified places.
    FiniteFinite,
    /// (P_infty, P_1): the infinite place first.
    InftyFinite,
}

impl Flavor {
    pub fn places(self) -> [Place; 2] {
        match self {
            Flavor::FiniteFinite => [Place::Finite(1), Place::Finite(2)],
            Flavor::InftyFinite => [Place::Infinity, Place::Finite(1)],
        }
    }
}

/// The set of pairs (a, b) where a is a gap at the first place, b a gap at the
/// second, yet some function has pole divisor exactly aP + bQ.  These are the
/// minimal generators of the joint semigroup beyond the two axes; for the
/// curves here there are exactly g of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    flavor: Flavor,
    pairs: Vec<(i64, i64)>,
}

impl GammaSet {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Generating pairs for two finite ramified places, in closed form:
///   (m i - j,  m (ceil(r j / m) - i) - j)
/// over 1 + floor(m/r) <= j <= m-1 and 1 <= i <= ceil(r j / m) - 1.
pub fn gamma_finite_finite(curve: &KummerCurve) -> GammaSet {
    let (m, r) = (curve.m(), curve.r());
    let mut pairs = Vec::new();
    for j in (1 + div_floor(m, r))..=(m - 1) {
        let top = div_ceil(r * j, m);
        for i in 1..top {
            pairs.push((m * i - j, m * (top - i) - j));
        }
    }
    pairs.sort_unstable();
    debug_assert_eq!(pairs.len() as i64, curve.genus());
    GammaSet {
        flavor: Flavor::FiniteFinite,
        pairs,
    }
}

/// Generating pairs for (P_infty, P_1), in closed form:
///   (m r - m j - r i,  i + m (j - 1))
/// over 1 <= i <= m - 1 - floor(m/r) and 1 <= j <= r - 1 - floor(r i / m).
/// First coordinate is the pole order at the infinite place.
pub fn gamma_infty_finite(curve: &KummerCurve) -> GammaSet {
    let (m, r) = (curve.m(), curve.r());
    let mut pairs = Vec::new();
    for i in 1..=(m - 1 - div_floor(m, r)) {
        for j in 1..=(r - 1 - div_floor(r * i, m)) {
            pairs.push((m * r - m * j - r * i, i + m * (j - 1)));
        }
    }
    pairs.sort_unstable();
    debug_assert_eq!(pairs.len() as i64, curve.genus());
    GammaSet {
        flavor: Flavor::InftyFinite,
        pairs,
    }
}

/// Number of unordered pairs in the set that strictly disagree in both
/// coordinates (one up, the other down).  O(g^2) over the definition; no
/// case-split shortcut, so it stays valid for every parameter shape.
pub fn inversions(gamma: &GammaSet) -> i64 {
    let p = &gamma.pairs;
    let mut count = 0;
    for x in 0..p.len() {
        for y in (x + 1)..p.len() {
            let ((a, b), (c, d)) = (p[x], p[y]);
            if (a < c && b > d) || (a > c && b < d) {
                count += 1;
            }
        }
    }
    count
}

/// Two-place gap count assembled from one-place data:
/// total = sum of gaps at the first place + sum of gaps at the second
///         - inversion count of the generating pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoPointGapCount {
    pub flavor: Flavor,
    pub sum_first: i64,
    pub sum_second: i64,
    pub inversions: i64,
    pub total: i64,
}

pub fn count_gaps_two_points(curve: &KummerCurve, flavor: Flavor) -> Result<TwoPointGapCount> {
    let [p, q] = flavor.places();
    let sum_first: i64 = one_point_gaps(curve, p)?.iter().sum();
    let sum_second: i64 = one_point_gaps(curve, q)?.iter().sum();
    let gamma = match flavor {
        Flavor::FiniteFinite => gamma_finite_finite(curve),
        Flavor::InftyFinite => gamma_infty_finite(curve),
    };
    let inv = inversions(&gamma);
    Ok(TwoPointGapCount {
        flavor,
        sum_first,
        sum_second,
        inversions: inv,
        total: sum_first + sum_second - inv,
    })
}

fn checked_poly(terms: &[(i64, i64)]) -> Result<i64> {
    // sum of coefficient * value products, all checked
    let mut acc: i64 = 0;
    for &(c, v) in terms {
        let t = c.checked_mul(v).ok_or(KummerError::Overflow)?;
        acc = acc.checked_add(t).ok_or(KummerError::Overflow)?;
    }
    Ok(acc)
}

/// Closed-form totals of the two-place gap counts for m = u r + 1:
///   finite/finite: u r (r-1) (3 u r^2 - 5 u r + 4 r + 4 u - 2) / 12
///   infty/finite:  u r (r-1) (3 u r^2 - 3 u r + 2 r + 2) / 12
/// Returns (finite_finite, infty_finite).  Both numerators are divisible by
/// 12 for every admissible (u, r); that divisibility is asserted.
pub fn closed_form_counts(curve: &KummerCurve, u: i64) -> Result<(i64, i64)> {
    curve.require_u(u)?;
    let r = curve.r();
    let r2 = r.checked_mul(r).ok_or(KummerError::Overflow)?;
    let ur = u.checked_mul(r).ok_or(KummerError::Overflow)?;
    let urr1 = ur
        .checked_mul(r.checked_sub(1).ok_or(KummerError::Overflow)?)
        .ok_or(KummerError::Overflow)?;

    let ff_inner = checked_poly(&[(3 * u, r2), (-5, ur), (4, r), (4, u), (-2, 1)])?;
    let if_inner = checked_poly(&[(3 * u, r2), (-3, ur), (2, r), (2, 1)])?;

    let ff_num = urr1.checked_mul(ff_inner).ok_or(KummerError::Overflow)?;
    let if_num = urr1.checked_mul(if_inner).ok_or(KummerError::Overflow)?;
    assert_eq!(
        ff_num % 12,
        0,
        "finite/finite numerator must be divisible by 12"
    );
    assert_eq!(
        if_num % 12,
        0,
        "infty/finite numerator must be divisible by 12"
    );
    Ok((ff_num / 12, if_num / 12))
}

fn lub(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0.max(y.0), x.1.max(y.1))
}

/// All semigroup elements (a, b) with 0 <= a, b <= bound.
///
/// The joint semigroup is the least-upper-bound closure of the generating
/// pairs together with the two axis copies of the one-place semigroups; a
/// single closure pass suffices because every element is the lub of at most
/// two generators.
pub fn semigroup_box(curve: &KummerCurve, flavor: Flavor, bound: i64) -> Result<Vec<(i64, i64)>> {
    if bound < 0 {
        return Err(KummerError::ParameterTooSmall {
            name: "bound",
            value: bound,
            min: 0,
        });
    }
    let [p, q] = flavor.places();
    let gaps_p = one_point_gaps(curve, p)?;
    let gaps_q = one_point_gaps(curve, q)?;
    let gamma = match flavor {
        Flavor::FiniteFinite => gamma_finite_finite(curve),
        Flavor::InftyFinite => gamma_infty_finite(curve),
    };

    let mut gens: Vec<(i64, i64)> = Vec::new();
    for a in 0..=bound {
        if !gaps_p.contains(&a) {
            gens.push((a, 0));
        }
    }
    for b in 0..=bound {
        if !gaps_q.contains(&b) {
            gens.push((0, b));
        }
    }
    gens.extend(
        gamma
            .pairs()
            .iter()
            .copied()
            .filter(|&(a, b)| a <= bound && b <= bound),
    );

    let mut out = BTreeSet::new();
    for x in 0..gens.len() {
        for y in x..gens.len() {
            let v = lub(gens[x], gens[y]);
            if v.0 <= bound && v.1 <= bound {
                out.insert(v);
            }
        }
    }
    Ok(out.into_iter().collect())
}
