//! Invariant quadratic forms, Witt index and singular-vector counts.

use spinspread::forms::{invariant_quadratic, is_quadratic_type_tworow, QuadForm};
use spinspread::specht::{spin_rep, TwoRowShape};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let plus = QuadForm::hyperbolic(3);
    let minus = QuadForm::hyperbolic(2).orthogonal_sum(&QuadForm::anisotropic_plane());
    for (name, q) in [("plus type", &plus), ("minus type", &minus)] {
        println!(
            "{name}: dim {} Witt index {} singular {}",
            q.dim(),
            q.witt_index()?,
            q.count_singular()?
        );
    }

    for n in 5..=11 {
        let rep = spin_rep(n)?;
        let s = TwoRowShape::spin(n)?;
        let criterion = is_quadratic_type_tworow(s.a(), s.b())?;
        match invariant_quadratic(&rep)? {
            Some(q) => println!(
                "n = {n:2}: invariant form, degree {}, Witt index {} (criterion {criterion})",
                q.dim(),
                q.witt_index()?
            ),
            None => println!("n = {n:2}: no invariant form (criterion {criterion})"),
        }
    }
    Ok(())
}
