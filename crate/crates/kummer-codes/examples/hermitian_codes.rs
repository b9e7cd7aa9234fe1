//! Improved two-point code parameters on the Hermitian curve
//! y^{q+1} = x^q + x over F_{q^2}, plus the box each row comes from.
//!
//! Run with: cargo run --example hermitian_codes

use kummer_codes::designer::{defect_bound_finite, design_from_box, hermitian_table};
use kummer_codes::{KummerCurve, Result};

fn main() -> Result<()> {
    for q in [4, 5, 7, 8] {
        println!("q = {q} (field size {}):", q * q);
        println!(
            "  {:>4} {:>3} {:>5} {:>5} {:>7}",
            "q^2", "s", "n", "k", "d>="
        );
        for row in hermitian_table(q)? {
            println!(
                "  {:>4} {:>3} {:>5} {:>5} {:>7}",
                row.q_sq, row.s, row.n, row.k, row.d_bound
            );
        }
    }

    // each row is a code on a box of pure gaps at s finite places;
    // re-derive the q = 4, s = 2 row from its box
    let q = 4;
    let curve = KummerCurve::with_field(q + 1, q, q * q)?;
    let (_, pgbox) = defect_bound_finite(&curve, 1, 2)?;
    let n = q * q * q + 1 - 2;
    let design = design_from_box(&curve, &pgbox, n)?;
    println!(
        "\nq=4 s=2 from box [{:?} .. {:?}]: n={} k={} d>={}",
        pgbox.low(),
        pgbox.high(),
        design.n,
        design.k,
        design.d_bound
    );
    assert_eq!((design.n, design.k, design.d_bound), (63, 55, 6));
    Ok(())
}
