//! Spin modules of the symmetric groups from two-row Specht modules.

use spinspread::specht::{spin_rep, SpechtData, TwoRowShape};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 3..=12 {
        let shape = TwoRowShape::spin(n)?;
        let d = SpechtData::new(shape)?;
        println!(
            "n = {n:2}  shape {shape}  tabloids {:4}  Specht {:3}  irreducible {:3}",
            d.tabloids().len(),
            d.specht_dim(),
            d.irreducible_dim()
        );
    }
    let rep = spin_rep(7)?;
    println!(
        "{} of degree {} with {} generators",
        rep.kind(),
        rep.degree(),
        rep.n_generators()
    );
    Ok(())
}
