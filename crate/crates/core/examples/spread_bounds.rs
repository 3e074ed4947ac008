//! Exhaustive maximum partial spreads in small hyperbolic spaces.

use spinspread::forms::QuadForm;
use spinspread::spreads::{max_partial_spread_bruteforce, spread_bound};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in 1..=3 {
        let b = max_partial_spread_bruteforce(&QuadForm::hyperbolic(r))?;
        println!(
            "dim {}: {} maximal totally singular subspaces, max partial spread {}, bound {}",
            2 * r,
            b.maximal_subspaces,
            b.max_partial_spread,
            spread_bound(r)
        );
    }
    Ok(())
}
