//! The minimal generating set of the Weierstrass semigroup at a pair of
//! fully ramified places, and the two-point gap count it induces.
//!
//! Run with: cargo run --example two_point_structure

use kummer_codes::semigroup::{
    count_gaps_two_points, gamma_finite_finite, gamma_infty_finite, inversions, Flavor,
};
use kummer_codes::{KummerCurve, Result};

fn main() -> Result<()> {
    let curve = KummerCurve::new(5, 4)?;
    let g = curve.genus();

    let gamma = gamma_finite_finite(&curve);
    println!("Gamma(P_1, P_2) for y^5 = f(x), deg f = 4 (genus {g}):");
    for &(a, b) in gamma.pairs() {
        println!("  ({a}, {b})");
    }
    // the generating set always has exactly g elements
    assert_eq!(gamma.len() as i64, g);
    println!("inversions contributed: {}", inversions(&gamma));
    println!();

    let gamma_inf = gamma_infty_finite(&curve);
    println!("Gamma(P_infty, P_1):");
    for &(a, b) in gamma_inf.pairs() {
        println!("  ({a}, {b})");
    }
    println!();

    for flavor in [Flavor::FiniteFinite, Flavor::InftyFinite] {
        let count = count_gaps_two_points(&curve, flavor)?;
        println!(
            "{flavor:?}: {} + {} - {} = {} gap pairs",
            count.sum_first, count.sum_second, count.inversions, count.total
        );
    }
    Ok(())
}
