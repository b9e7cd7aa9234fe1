//! Closed-form families of pure gaps when m = u*r + 1, re-checked against
//! the exact dimension oracle.
//!
//! Run with: cargo run --example pure_gap_families

use kummer_codes::oracle::is_pure_gap;
use kummer_codes::puregap::{family_many_finite, family_many_infty, family_two_point};
use kummer_codes::{KummerCurve, Place, Result};

fn main() -> Result<()> {
    let curve = KummerCurve::new(9, 4)?;
    let u = curve.u_parameter().expect("9 = 2*4 + 1");
    println!("y^9 = f(x), deg f = 4, u = {u}, genus {}", curve.genus());

    let fam = family_two_point(&curve, u)?;
    println!("(P_infty, P_1) singles: {:?}", fam.infty_single);
    println!("(P_infty, P_1) column:  {:?}", fam.infty_column);
    println!("(P_1, P_2) grid:        {:?}", fam.finite_grid);

    for &(a, b) in &fam.infty_single {
        assert!(is_pure_gap(
            &curve,
            &[Place::Infinity, Place::Finite(1)],
            &[a, b]
        )?);
    }
    for &(a, b) in &fam.finite_grid {
        assert!(is_pure_gap(
            &curve,
            &[Place::Finite(1), Place::Finite(2)],
            &[a, b]
        )?);
    }

    // the s-place generalizations, here at three finite places
    let many = family_many_finite(&curve, u, 3)?;
    println!("\n3 finite places, {} tuples:", many.len());
    for t in &many {
        let places = [Place::Finite(1), Place::Finite(2), Place::Finite(3)];
        assert!(is_pure_gap(&curve, &places, t)?);
        println!("  {t:?}");
    }

    let many_inf = family_many_infty(&curve, u, 2)?;
    println!("\nP_infty plus 2 finite places, {} tuples", many_inf.len());
    let places = [Place::Infinity, Place::Finite(1), Place::Finite(2)];
    for t in &many_inf {
        assert!(is_pure_gap(&curve, &places, t)?);
    }
    println!("all re-checked against the dimension oracle");
    Ok(())
}
