//! Command-line front end. Exit codes: 0 when every check passes, 1 when a
//! mathematical check fails, 2 for usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::forms::is_quadratic_type_tworow;
use crate::json::{
    read_json, read_spread, write_json, Certificate, Check, GroupRepJson, SpreadJson,
};
use crate::meataxe::{are_isomorphic, dual_rep, is_irreducible};
use crate::rep::GroupKind;
use crate::specht::{spin_rep, TwoRowShape};
use crate::spreads::{
    a9_spread, extend_spread, group_action_on_spread, imprimitivity_report, sigma_spread,
    verify_spread, Spread, SpreadReport,
};
use crate::symgrp::{CayleyTable, Perm};

#[derive(Parser, Debug)]
#[command(
    name = "spinspread",
    version,
    about = "Invariant orthogonal spreads from spin modules over GF(2)"
)]
struct Cli {
    /// Seed for randomized procedures.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the spin module of S_n and print its degree.
    Spin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the S_{2m+1}-invariant spread, optionally extended by the A_{2m+1} summands.
    Spread {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        extend: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the complete A9-invariant spread in dimension 8.
    A9 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether D^(a,b) is of quadratic type.
    Quadtype {
        /// The partition as `a,b`.
        #[arg(long)]
        parts: String,
    },
    /// Re-check a stored spread.
    Verify {
        #[arg(long)]
        spread: PathBuf,
    },
    /// Orbits of a group, embedded by its regular representation, on a stored spread.
    Action {
        /// cyclic:K, elemabelian:P^K (or its order), dihedral:K (order 2K),
        /// quaternion8, abelian:AxBx.., or cayley:PATH.
        #[arg(long)]
        group: String,
        #[arg(long)]
        spread: PathBuf,
    },
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Certification(_)
        | Error::NotInSpread(_)
        | Error::Indecomposable
        | Error::GaloisConjugate
        | Error::UnexpectedEndDimension(_)
        | Error::Inconclusive(_)
        | Error::Degenerate
        | Error::NotInvariant(_)
        | Error::ZeroQuotient(_)
        | Error::InconsistentAction(_) => 1,
        _ => 2,
    }
}

/// `out.json` becomes `out.cert.json`.
#[must_use]
pub fn certificate_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map_or_else(|| "out".into(), |s| s.to_string_lossy().into_owned());
    out.with_file_name(format!("{stem}.cert.json"))
}

struct Outcome {
    checks: Vec<Check>,
}

fn report_checks(report: &SpreadReport) -> Vec<Check> {
    vec![
        Check::new(
            "equal_dims",
            report.equal_dims,
            format!("member_dim={}", report.member_dim),
        ),
        Check::new(
            "maximal",
            report.maximal,
            format!("ambient_dim={}", report.ambient_dim),
        ),
        Check::new("pairwise_trivial", report.pairwise_trivial, ""),
        Check::new("totally_singular", report.totally_singular, ""),
        Check::new("distinct", report.distinct, ""),
        Check::new(
            "set_invariant",
            report.not_invariant_under.is_empty(),
            format!("under {}", report.set_invariant_under.join(" ")),
        ),
        Check::new(
            "within_bound",
            report.within_bound,
            format!("{} <= {}", report.member_count, report.bound),
        ),
    ]
}

fn print_checks(out: &mut dyn Write, checks: &[Check]) -> Result<()> {
    for c in checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        if c.details.is_empty() {
            writeln!(out, "{status} {}", c.name)?;
        } else {
            writeln!(out, "{status} {} ({})", c.name, c.details)?;
        }
    }
    Ok(())
}

fn print_report(out: &mut dyn Write, r: &SpreadReport) -> Result<()> {
    writeln!(out, "members: {}", r.member_count)?;
    writeln!(out, "member_dim: {}", r.member_dim)?;
    writeln!(out, "ambient_dim: {}", r.ambient_dim)?;
    writeln!(out, "bound: {}", r.bound)?;
    writeln!(out, "complete: {}", r.complete)?;
    if let (Some(c), Some(t)) = (r.singular_coverage, r.total_singular) {
        writeln!(out, "singular_coverage: {c} of {t}")?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn emit_spread(
    out: &mut dyn Write,
    command: &str,
    inputs: serde_json::Value,
    seed: u64,
    spread: &Spread,
    report: &SpreadReport,
    extra_checks: Vec<Check>,
    extra_outputs: serde_json::Value,
    path: Option<&Path>,
) -> Result<Outcome> {
    print_report(out, report)?;
    let mut checks = report_checks(report);
    checks.extend(extra_checks);
    print_checks(out, &checks)?;
    if let Some(path) = path {
        let sj = SpreadJson::new(spread, Some(report));
        write_json(path, &sj)?;
        let cert = Certificate {
            command: command.into(),
            inputs,
            outputs: json!({ "spread": sj, "extra": extra_outputs }),
            checks: checks.clone(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            seed,
        };
        let cpath = certificate_path(path);
        write_json(&cpath, &cert)?;
        writeln!(out, "wrote {} and {}", path.display(), cpath.display())?;
    }
    Ok(Outcome { checks })
}

fn parse_group(spec: &str) -> Result<CayleyTable> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let num = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .map_err(|_| usage(format!("bad number {s:?} in group spec {spec:?}")))
    };
    match kind {
        "cyclic" => CayleyTable::cyclic(num(arg)?),
        "elemabelian" => {
            let (p, k) = if let Some((p, k)) = arg.split_once('^') {
                (num(p)?, num(k)?)
            } else {
                let order = num(arg)?;
                if order < 2 {
                    return Err(usage("elementary abelian order must be at least 2"));
                }
                let p = (2..=order).find(|p| order % p == 0).unwrap_or(order);
                let mut k = 0;
                let mut q = order;
                while q % p == 0 {
                    q /= p;
                    k += 1;
                }
                if q != 1 {
                    return Err(usage(format!("{order} is not a prime power")));
                }
                (p, k)
            };
            CayleyTable::elementary_abelian(p, k)
        }
        "dihedral" => CayleyTable::dihedral(num(arg)?),
        "quaternion8" if arg.is_empty() => CayleyTable::quaternion(),
        "abelian" => {
            let orders = arg.split('x').map(num).collect::<Result<Vec<_>>>()?;
            CayleyTable::abelian(&orders)
        }
        "cayley" => read_json::<CayleyTable>(Path::new(arg)),
        _ => Err(usage(format!("unknown group spec {spec:?}"))),
    }
}

fn cmd_spin(out: &mut dyn Write, n: usize, path: Option<&Path>) -> Result<Outcome> {
    let shape = TwoRowShape::spin(n)?;
    let rep = spin_rep(n)?;
    writeln!(out, "spin module D^{shape} of S{n}")?;
    writeln!(out, "degree: {}", rep.degree())?;
    if let Some(path) = path {
        write_json(path, &GroupRepJson::from(&rep))?;
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(Outcome { checks: Vec::new() })
}

fn summand_checks(ext: &crate::spreads::ExtendedSpread, seed: u64) -> Result<Vec<Check>> {
    let s = &ext.splitting;
    let irr1 = is_irreducible(&s.rep1, seed)?;
    let irr2 = is_irreducible(&s.rep2, seed)?;
    let iso = are_isomorphic(&s.rep1, &s.rep2)?;
    let dual1 = dual_rep(&s.rep1)?;
    let self_dual = are_isomorphic(&s.rep1, &dual1)?;
    let dual_is_other = are_isomorphic(&dual1, &s.rep2)?;
    Ok(vec![
        Check::new(
            "summands_irreducible",
            irr1 && irr2,
            format!("dims {} {}", s.u1.dim(), s.u2.dim()),
        ),
        Check::new("summands_non_isomorphic", !iso, ""),
        Check::new("odd_generator_swaps", ext.odd_generator_swaps, ""),
        Check::new("summand_not_self_dual", !self_dual, ""),
        Check::new("dual_of_u1_is_u2", dual_is_other, ""),
    ])
}

fn cmd_spread(
    out: &mut dyn Write,
    m: usize,
    extend: bool,
    seed: u64,
    path: Option<&Path>,
) -> Result<Outcome> {
    let inputs = json!({ "m": m, "extend": extend });
    if extend {
        let ext = extend_spread(m)?;
        let checks = summand_checks(&ext, seed)?;
        emit_spread(
            out,
            "spread",
            inputs,
            seed,
            &ext.spread,
            &ext.report,
            checks,
            json!({}),
            path,
        )
    } else {
        let s = sigma_spread(m)?;
        let extra = json!({ "socle_structure": s.socle_structure });
        emit_spread(
            out,
            "spread",
            inputs,
            seed,
            &s.spread,
            &s.report,
            Vec::new(),
            extra,
            path,
        )
    }
}

fn cmd_a9(out: &mut dyn Write, seed: u64, path: Option<&Path>) -> Result<Outcome> {
    let a9 = a9_spread(seed)?;
    let imp = imprimitivity_report(&a9.spread)?;
    writeln!(out, "A8-submodule structure: {:?}", a9.u_structure)?;
    writeln!(
        out,
        "singular vectors: {} (orbit {}), blocks: {} of {}, block orbit: {}, pair orbits of block stabilizer: {}",
        imp.singular_vectors,
        imp.singular_orbit,
        imp.blocks,
        imp.block_size,
        imp.block_orbit,
        imp.stabilizer_pair_orbits
    )?;
    let coverage_ok = a9.report.complete && a9.report.singular_coverage == a9.report.total_singular;
    let checks = vec![
        Check::new(
            "complete",
            a9.report.complete,
            format!("{} members", a9.report.member_count),
        ),
        Check::new(
            "singular_coverage",
            coverage_ok,
            match (a9.report.singular_coverage, a9.report.total_singular) {
                (Some(c), Some(t)) => format!("{c} of {t}"),
                _ => "not computed".to_string(),
            },
        ),
        Check::new("u_restricted_to_a7_irreducible", a9.u_a7_irreducible, ""),
        Check::new(
            "transitive_on_singular_vectors",
            imp.transitive,
            format!("{}", imp.singular_orbit),
        ),
        Check::new(
            "blocks_partition_singular_vectors",
            imp.blocks_partition,
            "",
        ),
        Check::new("blocks_preserved", imp.blocks_preserved, ""),
        Check::new(
            "block_orbit",
            imp.block_orbit == imp.blocks,
            format!("{}", imp.block_orbit),
        ),
        Check::new(
            "block_stabilizer_doubly_transitive",
            imp.doubly_transitive,
            "",
        ),
    ];
    let extra = json!({ "imprimitivity": imp, "u_structure": a9.u_structure });
    emit_spread(
        out,
        "a9",
        json!({}),
        seed,
        &a9.spread,
        &a9.report,
        checks,
        extra,
        path,
    )
}

fn cmd_quadtype(out: &mut dyn Write, parts: &str) -> Result<Outcome> {
    let nums = parts
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("bad partition {parts:?}")))?;
    let [a, b] = nums[..] else {
        return Err(usage(format!("expected two parts, got {parts:?}")));
    };
    writeln!(out, "{}", is_quadratic_type_tworow(a, b)?)?;
    Ok(Outcome { checks: Vec::new() })
}

fn cmd_verify(out: &mut dyn Write, path: &Path) -> Result<Outcome> {
    let spread = read_spread(path)?;
    let report = verify_spread(&spread)?;
    print_report(out, &report)?;
    let checks = report_checks(&report);
    print_checks(out, &checks)?;
    for f in &report.failures {
        writeln!(out, "failure: {f}")?;
    }
    Ok(Outcome { checks })
}

fn cmd_action(out: &mut dyn Write, spec: &str, path: &Path) -> Result<Outcome> {
    let group = parse_group(spec)?;
    let spread = read_spread(path)?;
    let rep = spread
        .rep
        .as_ref()
        .ok_or_else(|| usage("spread file has no representation"))?;
    let n = match rep.kind() {
        GroupKind::Symmetric(n) | GroupKind::Alternating(n) => n,
        GroupKind::Abstract => {
            return Err(usage("spread representation is not a permutation group"))
        }
    };
    if group.order() > n {
        return Err(usage(format!(
            "a group of order {} does not embed regularly in degree {n}",
            group.order()
        )));
    }
    let elements = group
        .regular_embedding()
        .iter()
        .map(|p| p.extend_to(n))
        .collect::<Result<Vec<Perm>>>()?;
    let r = group_action_on_spread(&spread, &elements)?;
    writeln!(out, "group order: {}", r.group_order)?;
    for (orbit, stab) in r.orbits.iter().zip(&r.stabilizer_orders) {
        writeln!(out, "orbit {orbit:?} stabilizer order {stab}")?;
    }
    writeln!(out, "transitive: {}", r.transitive)?;
    writeln!(out, "regular: {}", r.regular)?;
    let checks = vec![Check::new(
        "set_invariant",
        true,
        "every image lies in the spread",
    )];
    print_checks(out, &checks)?;
    Ok(Outcome { checks })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    let seed = cli.seed;
    match cli.command {
        Command::Spin { n, out: path } => cmd_spin(out, n, path.as_deref()),
        Command::Spread {
            m,
            extend,
            out: path,
        } => cmd_spread(out, m, extend, seed, path.as_deref()),
        Command::A9 { out: path } => cmd_a9(out, seed, path.as_deref()),
        Command::Quadtype { parts } => cmd_quadtype(out, &parts),
        Command::Verify { spread } => cmd_verify(out, &spread),
        Command::Action { group, spread } => cmd_action(out, &group, &spread),
    }
}

/// Runs the CLI on `args` (including the program name), writing the report
/// to `out` and errors to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(outcome) if outcome.checks.iter().all(|c| c.pass) => 0,
        Ok(_) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
