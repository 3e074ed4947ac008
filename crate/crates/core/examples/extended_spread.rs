//! Extending the sigma spread by the two alternating summands when m = 3 mod 4.

use spinspread::spreads::extend_spread;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = extend_spread(3)?;
    let r = &e.report;
    if let (Some(c), Some(t)) = (r.singular_coverage, r.total_singular) {
        println!(
            "members {}  complete {}  singular coverage {c} of {t}",
            r.member_count, r.complete
        );
    }
    println!(
        "odd generator swaps the summands: {}",
        e.odd_generator_swaps
    );
    match extend_spread(4) {
        Ok(_) => println!("m = 4 unexpectedly extended"),
        Err(err) => println!("m = 4: {err}"),
    }
    Ok(())
}
