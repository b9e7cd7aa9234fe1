//! Gap numbers at a single fully ramified place of y^m = f(x).
//!
//! Run with: cargo run --example one_point_gaps

use kummer_codes::oracle::one_point_gaps;
use kummer_codes::{KummerCurve, Place, Result};

fn main() -> Result<()> {
    for (m, r) in [(3, 2), (5, 4), (7, 3), (8, 3)] {
        let curve = KummerCurve::new(m, r)?;
        let g = curve.genus();
        println!("y^{m} = f(x), deg f = {r}, genus {g}");
        for place in [Place::Infinity, Place::Finite(1)] {
            let gaps = one_point_gaps(&curve, place)?;
            // exactly g gaps, all of them at most 2g-1
            assert_eq!(gaps.len() as i64, g);
            assert!(gaps.iter().all(|&n| n < 2 * g));
            let shown: Vec<String> = gaps.iter().map(|n| n.to_string()).collect();
            println!("  gaps at {place}: {}", shown.join(" "));
        }
        println!();
    }
    Ok(())
}
