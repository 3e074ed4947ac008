//! Invariant orthogonal spreads from spin modules of symmetric and
//! alternating groups over GF(2).
//!
//! The pipeline builds two-row irreducible modules `D^λ` from polytabloids
//! ([`specht`]), finds invariant quadratic forms ([`forms`]), extracts
//! socles and summands with MeatAxe-style tools ([`meataxe`]), and
//! assembles and certifies spreads ([`spreads`]).

pub mod cli;
pub mod error;
pub mod forms;
pub mod gf2;
pub mod json;
pub mod meataxe;
pub mod rep;
pub mod specht;
pub mod spreads;
pub mod symgrp;

pub use error::{Error, Result};
