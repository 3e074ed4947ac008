//! A complete orthogonal spread of nine 4-spaces permuted by A9.

use spinspread::spreads::{a9_spread, imprimitivity_report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = a9_spread(1)?;
    println!(
        "members {}  complete {}",
        a.report.member_count, a.report.complete
    );
    println!(
        "A8-submodule structure {:?}, irreducible under A7: {}",
        a.u_structure, a.u_a7_irreducible
    );
    let imp = imprimitivity_report(&a.spread)?;
    println!(
        "{} singular vectors in an orbit of {}; {} blocks of {}; doubly transitive stabilizer: {}",
        imp.singular_vectors, imp.singular_orbit, imp.blocks, imp.block_size, imp.doubly_transitive
    );
    Ok(())
}
