//! Weierstrass gap structure and AG-code parameter design for Kummer
//! extensions y^m = f(x) with gcd(m, deg f) = 1.
//!
//! The function field F = Fq(x, y) has one fully ramified place over
//! x = infinity and one over each root of f.  Everything here is computed
//! at those places:
//!
//! - [`oracle`]: exact Riemann-Roch dimensions via the eigenspace
//!   decomposition of L(D), and gap / pure-gap predicates built on them.
//!   Slow but authoritative; every closed form is checked against it.
//! - [`semigroup`]: the minimal generating pairs of the joint Weierstrass
//!   semigroup at two places, gap counts, and a lub-closure of the
//!   semigroup inside a box.
//! - [`puregap`]: a floor-comparison characterization of pure gaps, the
//!   closed-form families, axis-aligned boxes of pure gaps, and bounded
//!   enumeration.
//! - [`designer`]: differential code parameters from a pure-gap box,
//!   canonical boxes with their defect bounds, and the improved two-point
//!   table for the Hermitian curve y^{q+1} = x^q + x.
//! - [`verify`]: re-derives every closed form from the oracle over curve
//!   sweeps; the `verify` subcommand and the acceptance tests drive this.
//!
//! Entries of divisor tuples are kept as `i64` with overflow checks at the
//! formula sites, so parameter validation errors surface as
//! [`KummerError`] instead of silent wraparound.

pub mod cli;
pub mod curve;
pub mod designer;
pub mod error;
pub mod oracle;
pub mod output;
pub mod puregap;
pub mod semigroup;
pub mod verify;

pub use curve::{Divisor, KummerCurve, Place};
pub use error::{KummerError, Result};
