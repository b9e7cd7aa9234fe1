//! Grow a maximal axis-aligned box of pure gaps from a seed tuple, then
//! price the code it designs.
//!
//! Run with: cargo run --example pure_gap_boxes

use kummer_codes::designer::design_from_box;
use kummer_codes::puregap::{enumerate_pure_gaps, grow_box, CheckMode};
use kummer_codes::{KummerCurve, Place, Result};

fn main() -> Result<()> {
    let curve = KummerCurve::new(5, 4)?;
    let places = [Place::Finite(1), Place::Finite(2)];

    let tuples = enumerate_pure_gaps(&curve, &places, None, CheckMode::Characterization)?;
    println!("pure gaps at (P_1, P_2) on y^5 = f(x), deg f = 4:");
    for t in &tuples {
        println!("  {t:?}");
    }

    let pgbox = grow_box(&curve, &[6, 1], false)?;
    println!(
        "\nbox grown from [6, 1]: [{:?} .. {:?}]",
        pgbox.low(),
        pgbox.high()
    );

    let design = design_from_box(&curve, &pgbox, 30)?;
    println!(
        "code with n = 30: k = {}, d >= {}, defect {}",
        design.k, design.d_bound, design.delta_bound
    );
    Ok(())
}
