//! Translates of the socle under S_{2m+1} and their spread checks.

use spinspread::spreads::sigma_spread;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 3..=5 {
        let s = sigma_spread(m)?;
        let r = &s.report;
        println!(
            "m = {m}: {} members of dim {} in dim {}, bound {}, all checks pass: {}",
            r.member_count,
            r.member_dim,
            r.ambient_dim,
            r.bound,
            r.all_pass()
        );
    }
    Ok(())
}
