//! Bit-packed GF(2) matrices and subspaces.

use spinspread::gf2::{BitMat, Subspace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = BitMat::from_row_strings(5, &["11000", "01100", "10100", "00011"])?;
    println!("rank {} nullity {}", a.rank(), a.kernel().dim());
    println!("rref:");
    for row in a.rref().matrix.row_strings() {
        println!("  {row}");
    }

    let u = Subspace::row_space(&a);
    let w = Subspace::row_space(&BitMat::from_row_strings(5, &["10000", "00001"])?);
    let (sum, int) = (u.sum(&w)?, u.intersect(&w)?);
    println!(
        "dim U {} dim W {} dim U+W {} dim U^W {}",
        u.dim(),
        w.dim(),
        sum.dim(),
        int.dim()
    );

    let g = BitMat::from_row_strings(3, &["110", "011", "001"])?;
    let inv = g.inverse()?;
    println!("g * g^-1 is identity: {}", g.mul(&inv)?.is_identity());
    Ok(())
}
