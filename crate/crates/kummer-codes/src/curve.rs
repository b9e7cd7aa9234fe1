use std::collections::BTreeMap;
use std::fmt;

use crate::error::{KummerError, Result};

/// Floor of a/b for b > 0, exact on negative numerators.
pub(crate) fn div_floor(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// Ceiling of a/b for b > 0, exact on negative numerators.
pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a.rem_euclid(b));
    }
    a.abs()
}

/// Is q = p^k for some prime p and k >= 1?
pub(crate) fn is_prime_power(q: i64) -> bool {
    if q < 2 {
        return false;
    }
    let mut n = q;
    let mut p = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            p = d;
            while n % d == 0 {
                n /= d;
            }
            break;
        }
        d += 1;
    }
    if p == 0 {
        return true; // q itself is prime
    }
    n == 1
}

/// Smallest prime factor; caller guarantees q >= 2.
fn least_prime_factor(q: i64) -> i64 {
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return d;
        }
        d += 1;
    }
    q
}

/// A curve y^m = f(x) over a field whose characteristic does not divide m,
/// with f squarefree of degree r coprime to m.  Only the numerical data
/// (m, r, optionally the field size q) is retained: every quantity computed
/// here depends on the ramification structure alone.
///
/// The places of interest are the r fully ramified places over the roots of f
/// (written P_1..P_r) and the unique place at infinity P_infty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KummerCurve {
    m: i64,
    r: i64,
    q: Option<i64>,
}

impl KummerCurve {
    /// Purely numerical curve: no base field pinned down.
    pub fn new(m: i64, r: i64) -> Result<Self> {
        if m < 2 {
            return Err(KummerError::ParameterTooSmall {
                name: "m",
                value: m,
                min: 2,
            });
        }
        if r < 2 {
            return Err(KummerError::ParameterTooSmall {
                name: "r",
                value: r,
                min: 2,
            });
        }
        if gcd(m, r) != 1 {
            return Err(KummerError::NonCoprime { m, r });
        }
        Ok(KummerCurve { m, r, q: None })
    }

    /// Curve over F_q.  The characteristic must not divide m, or y^m - f(x)
    /// would be inseparable.
    pub fn with_field(m: i64, r: i64, q: i64) -> Result<Self> {
        let mut c = Self::new(m, r)?;
        if !is_prime_power(q) {
            return Err(KummerError::NotPrimePower { q });
        }
        if m % least_prime_factor(q) == 0 {
            return Err(KummerError::CharDividesM { m, q });
        }
        c.q = Some(q);
        Ok(c)
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn q(&self) -> Option<i64> {
        self.q
    }

    /// (m-1)(r-1)/2; always a positive integer since gcd(m,r)=1 forces
    /// at least one of m-1, r-1 to be even.
    pub fn genus(&self) -> i64 {
        (self.m - 1) * (self.r - 1) / 2
    }

    /// Some(u) when m = u*r + 1; the shape required by the closed-form counts
    /// and the pure-gap family generators.
    pub fn u_parameter(&self) -> Option<i64> {
        if (self.m - 1) % self.r == 0 {
            Some((self.m - 1) / self.r)
        } else {
            None
        }
    }

    /// Fails with NotUrPlusOne unless m = u*r + 1 for the given u.
    pub fn require_u(&self, u: i64) -> Result<()> {
        if u < 1 {
            return Err(KummerError::ParameterTooSmall {
                name: "u",
                value: u,
                min: 1,
            });
        }
        if self.m != u * self.r + 1 {
            return Err(KummerError::NotUrPlusOne {
                m: self.m,
                r: self.r,
            });
        }
        Ok(())
    }

    /// Is `place` one of the fully ramified places of this curve?
    pub fn validate_place(&self, place: Place) -> Result<()> {
        match place {
            Place::Infinity => Ok(()),
            Place::Finite(i) if i >= 1 && i <= self.r => Ok(()),
            Place::Finite(i) => Err(KummerError::PlaceOutOfRange {
                index: i,
                max: self.r,
            }),
        }
    }

    /// Distinct valid places; when the infinite place appears it must come first
    /// (tuple conventions elsewhere rely on that).
    pub fn validate_places(&self, places: &[Place]) -> Result<()> {
        if places.is_empty() {
            return Err(KummerError::EmptyPlaces);
        }
        for (k, &p) in places.iter().enumerate() {
            self.validate_place(p)?;
            if p == Place::Infinity && k != 0 {
                return Err(KummerError::InftyNotFirst);
            }
            if places[..k].contains(&p) {
                return Err(KummerError::DuplicatePlace);
            }
        }
        Ok(())
    }
}

/// A fully ramified place: the place at infinity or the place over the i-th
/// root of f (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Finite(i64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "infty"),
            Place::Finite(i) => write!(f, "{i}"),
        }
    }
}

/// Divisor supported on the fully ramified places, as a sparse coefficient map.
/// Immutable by convention: `with` returns a new divisor.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Divisor {
    coeffs: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn of(pairs: &[(Place, i64)]) -> Self {
        let mut d = Divisor::zero();
        for &(p, c) in pairs {
            let e = d.coeffs.entry(p).or_insert(0);
            *e += c;
        }
        d.coeffs.retain(|_, c| *c != 0);
        d
    }

    /// New divisor with `delta` added at `place`.
    pub fn with(&self, place: Place, delta: i64) -> Self {
        let mut d = self.clone();
        let e = d.coeffs.entry(place).or_insert(0);
        *e += delta;
        if *e == 0 {
            d.coeffs.remove(&place);
        }
        d
    }

    pub fn coeff(&self, place: Place) -> i64 {
        self.coeffs.get(&place).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Place, i64)> + '_ {
        self.coeffs.iter().map(|(&p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(
            KummerCurve::new(4, 2),
            Err(KummerError::NonCoprime { m: 4, r: 2 })
        );
    }

    #[test]
    fn rejects_tiny_parameters() {
        assert!(KummerCurve::new(1, 3).is_err());
        assert!(KummerCurve::new(3, 1).is_err());
    }

    #[test]
    fn genus_values() {
        assert_eq!(KummerCurve::new(5, 4).unwrap().genus(), 6);
        assert_eq!(KummerCurve::new(3, 2).unwrap().genus(), 1);
        assert_eq!(KummerCurve::new(7, 3).unwrap().genus(), 6);
        assert_eq!(KummerCurve::new(8, 3).unwrap().genus(), 7);
        // Hermitian shape m=q+1, r=q
        assert_eq!(KummerCurve::new(5, 4).unwrap().genus(), 4 * 3 / 2);
    }

    #[test]
    fn u_parameter_round_trip() {
        let c = KummerCurve::new(9, 4).unwrap();
        assert_eq!(c.u_parameter(), Some(2));
        assert!(c.require_u(2).is_ok());
        assert_eq!(
            c.require_u(1),
            Err(KummerError::NotUrPlusOne { m: 9, r: 4 })
        );
        let c = KummerCurve::new(7, 3).unwrap();
        assert_eq!(c.u_parameter(), Some(2));
        let c = KummerCurve::new(8, 3).unwrap();
        assert_eq!(c.u_parameter(), None);
    }

    #[test]
    fn field_validation() {
        assert!(KummerCurve::with_field(5, 4, 4).is_ok());
        assert_eq!(
            KummerCurve::with_field(5, 4, 6),
            Err(KummerError::NotPrimePower { q: 6 })
        );
        // char 2 divides m=4? m=4, r=3 coprime; q=8 has char 2, 2 | 4
        assert_eq!(
            KummerCurve::with_field(4, 3, 8),
            Err(KummerError::CharDividesM { m: 4, q: 8 })
        );
    }

    #[test]
    fn prime_power_detection() {
        let powers: Vec<i64> = (2..100).filter(|&q| is_prime_power(q)).collect();
        assert!(powers.contains(&2));
        assert!(powers.contains(&27));
        assert!(powers.contains(&64));
        assert!(powers.contains(&81));
        assert!(!powers.contains(&6));
        assert!(!powers.contains(&12));
        assert!(!powers.contains(&100));
        assert!(!is_prime_power(1));
        assert!(!is_prime_power(0));
    }

    #[test]
    fn place_ordering_and_display() {
        assert!(Place::Infinity < Place::Finite(1));
        assert_eq!(Place::Infinity.to_string(), "infty");
        assert_eq!(Place::Finite(3).to_string(), "3");
    }

    #[test]
    fn place_validation() {
        let c = KummerCurve::new(5, 4).unwrap();
        assert!(c.validate_place(Place::Finite(4)).is_ok());
        assert!(c.validate_place(Place::Finite(5)).is_err());
        assert!(c.validate_place(Place::Finite(0)).is_err());
        assert!(c
            .validate_places(&[Place::Infinity, Place::Finite(1)])
            .is_ok());
        assert_eq!(
            c.validate_places(&[Place::Finite(1), Place::Infinity]),
            Err(KummerError::InftyNotFirst)
        );
        assert_eq!(
            c.validate_places(&[Place::Finite(1), Place::Finite(1)]),
            Err(KummerError::DuplicatePlace)
        );
        assert_eq!(c.validate_places(&[]), Err(KummerError::EmptyPlaces));
    }

    #[test]
    fn divisor_arithmetic() {
        let d = Divisor::of(&[(Place::Infinity, 7), (Place::Finite(1), 1)]);
        assert_eq!(d.degree(), 8);
        assert_eq!(d.coeff(Place::Infinity), 7);
        assert_eq!(d.coeff(Place::Finite(2)), 0);
        let e = d.with(Place::Finite(1), -1);
        assert_eq!(e.coeff(Place::Finite(1)), 0);
        assert_eq!(e.degree(), 7);
        assert_eq!(d.coeff(Place::Finite(1)), 1); // original untouched
        assert!(Divisor::zero().is_zero());
        assert!(Divisor::of(&[(Place::Finite(2), 5), (Place::Finite(2), -5)]).is_zero());
    }

    #[test]
    fn floor_and_ceil_division() {
        assert_eq!(div_floor(7, 5), 1);
        assert_eq!(div_floor(-7, 5), -2);
        assert_eq!(div_floor(-10, 5), -2);
        assert_eq!(div_ceil(7, 5), 2);
        assert_eq!(div_ceil(-7, 5), -1);
        assert_eq!(div_ceil(10, 5), 2);
    }
}
