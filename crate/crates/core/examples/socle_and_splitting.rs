//! Endomorphism algebras, socles and idempotent splittings of restrictions.

use spinspread::meataxe::{
    are_isomorphic, dual_rep, end_algebra, irreducible_socle_component, restrict_symmetric,
    restrict_to_alternating, split_by_idempotent,
};
use spinspread::specht::spin_rep;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 3..=5 {
        let n = 2 * m + 1;
        let res = restrict_symmetric(&spin_rep(n)?, n - 1)?;
        let comp = irreducible_socle_component(&res, 1)?;
        println!(
            "S{n} -> S{}: End dim {}, {:?}, socle dim {}",
            n - 1,
            end_algebra(&res)?.dim(),
            comp.structure,
            comp.subspace.dim()
        );
    }
    for m in [3, 4] {
        let n = 2 * m + 1;
        let s = split_by_idempotent(&restrict_to_alternating(&spin_rep(n)?)?)?;
        let self_dual = are_isomorphic(&s.rep1, &dual_rep(&s.rep1)?)?;
        println!(
            "S{n} -> A{n}: summands of dims {} and {}, self-dual: {self_dual}",
            s.u1.dim(),
            s.u2.dim()
        );
    }
    Ok(())
}
