//! Small groups acting on spreads through their regular representations.

use spinspread::spreads::{a9_spread, group_action_on_spread, sigma_spread, Spread};
use spinspread::symgrp::{CayleyTable, Perm};

fn show(
    name: &str,
    s: &Spread,
    n: usize,
    g: &CayleyTable,
) -> Result<(), Box<dyn std::error::Error>> {
    let perms: Vec<Perm> = g
        .regular_embedding()
        .iter()
        .map(|p| p.extend_to(n))
        .collect::<Result<_, _>>()?;
    let r = group_action_on_spread(s, &perms)?;
    println!(
        "{name:6} orbits {:?} regular {}",
        r.orbit_sizes(),
        r.regular
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seven = sigma_spread(3)?.spread;
    for k in 3..=7 {
        show(&format!("C{k}"), &seven, 7, &CayleyTable::cyclic(k)?)?;
    }
    let nine = a9_spread(1)?.spread;
    show("C9", &nine, 9, &CayleyTable::cyclic(9)?)?;
    show("C3xC3", &nine, 9, &CayleyTable::elementary_abelian(3, 2)?)?;
    show("C2^3", &nine, 9, &CayleyTable::elementary_abelian(2, 3)?)?;
    show("D4", &nine, 9, &CayleyTable::dihedral(4)?)?;
    show("Q8", &nine, 9, &CayleyTable::quaternion()?)?;
    Ok(())
}
