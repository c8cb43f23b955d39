//! Command-line front end.
//!
//! Exit codes: 0 all good, 1 verification failures, 2 usage errors, 3
//! internal certification failures (the implementation caught itself being
//! wrong). JSON output is canonical: sorted keys, identical bytes for
//! identical invocations.

use std::fs;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{
    decompose_product, projective_coords, relation_scan, verify_group, ClaimStatus, GroupReport,
};
use crate::error::Error;
use crate::groups::{FiniteSubgroup, GroupName};
use crate::invariants::{fundamental, syzygy, InvariantSystem};
use crate::report;
use crate::sphere::Multiplet;

#[derive(Parser)]
#[command(
    name = "trisphere",
    about = "Exact workbench for function algebras on quotients of the 3-sphere by finite subgroups of SU(2)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Group family: cyclic, binary-dihedral, binary-tetrahedral,
    /// binary-octahedral, binary-icosahedral
    group: String,

    /// Order parameter for the cyclic and binary dihedral families
    #[arg(long)]
    n: Option<u32>,

    /// Degree bound for tables and scans
    #[arg(long, default_value_t = 60)]
    max_degree: usize,

    /// Emit the canonical JSON report instead of text
    #[arg(long)]
    json: bool,

    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group, certify it, and print its data
    Group(GroupArgs),
    /// The fundamental (semi-)invariant system, syzygy, and Molien table
    Invariants(GroupArgs),
    /// The coordinate multiplet generated by the group's seed
    Multiplet(GroupArgs),
    /// Spin components of the coordinate multiplet paired with itself
    Decompose(GroupArgs),
    /// Scan binary and ternary products of the seed multiplets for
    /// relations and descendants
    Relations(GroupArgs),
    /// Molien dimensions of the invariant ring, degree by degree
    Molien(GroupArgs),
    /// Run the verification battery for one group, or `all`
    Verify(GroupArgs),
}

/// Parses argv and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            2
        }
        Err(CliError::Internal(e)) => {
            eprintln!("certification failure: {}", e);
            3
        }
    }
}

enum CliError {
    Usage(String),
    Internal(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedParameter(_) | Error::UnsupportedGroup(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Internal(other),
        }
    }
}

fn parse_group(args: &GroupArgs) -> Result<GroupName, CliError> {
    let name = match args.group.as_str() {
        "cyclic" => GroupName::Cyclic(require_n(args)?),
        "binary-dihedral" => GroupName::BinaryDihedral(require_n(args)?),
        "binary-tetrahedral" => reject_n(args, GroupName::BinaryTetrahedral)?,
        "binary-octahedral" => reject_n(args, GroupName::BinaryOctahedral)?,
        "binary-icosahedral" => reject_n(args, GroupName::BinaryIcosahedral)?,
        other => {
            return Err(CliError::Usage(format!(
                "unknown group `{}` (expected cyclic, binary-dihedral, binary-tetrahedral, binary-octahedral or binary-icosahedral)",
                other
            )))
        }
    };
    Ok(name)
}

fn require_n(args: &GroupArgs) -> Result<u32, CliError> {
    args.n.ok_or_else(|| {
        CliError::Usage(format!("`{}` needs --n <order parameter>", args.group))
    })
}

fn reject_n(args: &GroupArgs, name: GroupName) -> Result<GroupName, CliError> {
    if args.n.is_some() {
        return Err(CliError::Usage(format!(
            "`{}` takes no --n parameter",
            args.group
        )));
    }
    Ok(name)
}

fn emit(args: &GroupArgs, text: String) -> Result<(), CliError> {
    match &args.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {}", path, e))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Usage(format!("cannot write stdout: {}", e)))
        }
    }
}

fn build_system(name: GroupName) -> Result<InvariantSystem, CliError> {
    let group = FiniteSubgroup::build(name)?;
    Ok(fundamental(&group)?)
}

fn coordinate_multiplet(sys: &InvariantSystem) -> (String, Multiplet, u32) {
    match sys.group.name {
        GroupName::Cyclic(_) | GroupName::BinaryDihedral(_) => {
            let m = Multiplet::from_highest_weight(&sys.seed.form);
            (sys.seed.name.clone(), m, sys.seed.character.order())
        }
        _ => {
            let (m, chi) = projective_coords(sys).expect("generic family");
            ("projective seed".to_string(), m, chi.order())
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Group(args) => {
            let name = parse_group(&args)?;
            let group = FiniteSubgroup::build(name)?;
            let value = report::group(&group);
            if args.json {
                emit(&args, report::to_pretty_string(&value))?;
            } else {
                let mut text = String::new();
                text.push_str(&format!("group: {}\n", group.name));
                text.push_str(&format!("order: {}\n", group.order()));
                text.push_str(&format!("center size: {}\n", group.center().len()));
                for (i, g) in group.generators.iter().enumerate() {
                    text.push_str(&format!(
                        "generator {}:\n  [{} , {}]\n  [{} , {}]\n",
                        i + 1,
                        pretty(g.entry(0, 0)),
                        pretty(g.entry(0, 1)),
                        pretty(g.entry(1, 0)),
                        pretty(g.entry(1, 1)),
                    ));
                }
                emit(&args, text)?;
            }
            Ok(0)
        }
        Command::Invariants(args) => {
            let name = parse_group(&args)?;
            let sys = build_system(name)?;
            let syz = syzygy(&sys).ok();
            let molien: Vec<(usize, usize)> = (0..=args.max_degree)
                .map(|d| Ok((d, sys.group.molien_dim(d, None)?)))
                .collect::<Result<_, Error>>()?;
            let value = report::invariant_system(&sys, syz.as_ref(), &molien, None);
            if args.json {
                emit(&args, report::to_pretty_string(&value))?;
            } else {
                let mut text = String::new();
                text.push_str(&format!("fundamental system of {}\n", sys.group.name));
                for nf in sys.named_forms() {
                    text.push_str(&format!(
                        "  {} (degree {}, character order {}): {}\n",
                        nf.name,
                        nf.degree(),
                        nf.character.order(),
                        nf.form
                    ));
                }
                if let Some(s) = &syz {
                    text.push_str(&format!("syzygy at degree {}:\n", s.degree));
                    for (&(a, b, c), coeff) in s.terms().filter(|(_, c)| !c.is_zero()) {
                        text.push_str(&format!(
                            "  ({}) * P^{} Q^{} R^{}\n",
                            pretty(coeff),
                            a,
                            b,
                            c
                        ));
                    }
                }
                text.push_str("molien dimensions (degree: dim, zero rows skipped):\n");
                for &(d, dim) in molien.iter().filter(|&&(_, dim)| dim > 0) {
                    text.push_str(&format!("  {}: {}\n", d, dim));
                }
                emit(&args, text)?;
            }
            Ok(0)
        }
        Command::Multiplet(args) => {
            let name = parse_group(&args)?;
            let sys = build_system(name)?;
            let (label, m, chi_order) = coordinate_multiplet(&sys);
            let value = json!({
                "group": sys.group.name.to_string(),
                "seed": label,
                "character_order": chi_order,
                "multiplet": report::multiplet(&m),
            });
            if args.json {
                emit(&args, report::to_pretty_string(&value))?;
            } else {
                let mut text = String::new();
                text.push_str(&format!(
                    "coordinate multiplet of {} (seed {}, 2j = {}, character order {})\n",
                    sys.group.name,
                    label,
                    m.two_j(),
                    chi_order
                ));
                for (l, c) in m.components().iter().enumerate() {
                    text.push_str(&format!("  component {}: {}\n", l, c));
                }
                emit(&args, text)?;
            }
            Ok(0)
        }
        Command::Decompose(args) => {
            let name = parse_group(&args)?;
            let sys = build_system(name)?;
            let (label, m, _) = coordinate_multiplet(&sys);
            let seed_char = match sys.group.name {
                GroupName::Cyclic(_) | GroupName::BinaryDihedral(_) => &sys.seed.character,
                GroupName::BinaryTetrahedral | GroupName::BinaryOctahedral => {
                    &sys.quartic_seed.as_ref().expect("stored").character
                }
                GroupName::BinaryIcosahedral => &sys.seed.character,
            };
            let comps = decompose_product(&sys, &label, &m, seed_char, &label, &m, seed_char)?;
            let value = json!({
                "group": sys.group.name.to_string(),
                "components": comps.iter().map(report::spin_component).collect::<Vec<_>>(),
            });
            if args.json {
                emit(&args, report::to_pretty_string(&value))?;
            } else {
                let mut text = format!(
                    "quadratic decomposition of the {} coordinate multiplet\n",
                    sys.group.name
                );
                for c in &comps {
                    text.push_str(&format!(
                        "  k = {:2}  spin {:5}  degree {:3}  {}\n",
                        c.k,
                        format_spin(c.result_two_spin),
                        c.degree(),
                        describe_classification(c)
                    ));
                }
                emit(&args, text)?;
            }
            Ok(0)
        }
        Command::Relations(args) => {
            let name = parse_group(&args)?;
            let sys = build_system(name)?;
            let comps = relation_scan(&sys, args.max_degree)?;
            let value = json!({
                "group": sys.group.name.to_string(),
                "max_degree": args.max_degree,
                "components": comps.iter().map(report::spin_component).collect::<Vec<_>>(),
            });
            if args.json {
                emit(&args, report::to_pretty_string(&value))?;
            } else {
                let mut text = format!(
                    "scan of products of the {} seed multiplets up to degree {}\n",
                    sys.group.name, args.max_degree
                );
                for c in &comps {
                    text.push_str(&format!(
                        "  {:30} k = {:2}  spin {:5}  {}\n",
                        c.source,
                        c.k,
                        format_spin(c.result_two_spin),
                        describe_classification(c)
                    ));
                }
                emit(&args, text)?;
            }
            Ok(0)
        }
        Command::Molien(args) => {
            let name = parse_group(&args)?;
            let group = FiniteSubgroup::build(name)?;
            let molien: Vec<(usize, usize)> = (0..=args.max_degree)
                .map(|d| Ok((d, group.molien_dim(d, None)?)))
                .collect::<Result<_, Error>>()?;
            let value = json!({
                "group": group.name.to_string(),
                "dims": molien
                    .iter()
                    .map(|&(d, dim)| json!({"degree": d, "dim": dim}))
                    .collect::<Vec<_>>(),
            });
            if args.json {
                emit(&args, report::to_pretty_string(&value))?;
            } else {
                let mut text = format!("molien dimensions for {}\n", group.name);
                for &(d, dim) in &molien {
                    text.push_str(&format!("  degree {:3}: {}\n", d, dim));
                }
                emit(&args, text)?;
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let reports = if args.group == "all" {
                let mut reports = Vec::new();
                for n in 2..=6 {
                    reports.push(verify_group(GroupName::Cyclic(n), args.max_degree)?);
                    reports.push(verify_group(GroupName::BinaryDihedral(n), args.max_degree)?);
                }
                reports.push(verify_group(GroupName::BinaryTetrahedral, args.max_degree)?);
                reports.push(verify_group(GroupName::BinaryOctahedral, args.max_degree)?);
                reports.push(verify_group(GroupName::BinaryIcosahedral, args.max_degree)?);
                reports
            } else {
                let name = parse_group(&args)?;
                vec![verify_group(name, args.max_degree)?]
            };
            let passed = reports.iter().all(GroupReport::all_passed);
            let value: Value = json!({
                "passed": passed,
                "groups": reports.iter().map(report::group_report).collect::<Vec<_>>(),
            });
            if args.json {
                emit(&args, report::to_pretty_string(&value))?;
            } else {
                let mut text = String::new();
                for r in &reports {
                    for c in &r.claims {
                        let status = match c.status {
                            ClaimStatus::Pass => "PASS",
                            ClaimStatus::Fail => "FAIL",
                        };
                        text.push_str(&format!("{} {} {}\n", status, r.group, c.id));
                    }
                }
                text.push_str(&format!(
                    "{}: {} claims across {} groups\n",
                    if passed { "all passed" } else { "FAILURES" },
                    reports.iter().map(|r| r.claims.len()).sum::<usize>(),
                    reports.len()
                ));
                emit(&args, text)?;
            }
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn format_spin(two_j: u32) -> String {
    if two_j % 2 == 0 {
        format!("{}", two_j / 2)
    } else {
        format!("{}/2", two_j)
    }
}

fn describe_classification(c: &crate::algebra::SpinComponent) -> String {
    use crate::algebra::Classification::*;
    match &c.classification {
        Zero => "zero (relation)".to_string(),
        DescendantOf { expression, .. } => format!("descendant: {}", expression),
        NormalizationConstant(v) => format!("normalization constant {}", pretty(v)),
        Unclassified => "unclassified".to_string(),
    }
}

/// Exact value plus a float approximation, for the text reports.
fn pretty(c: &crate::cyclo::CycloNum) -> String {
    if let Some(q) = c.as_rational() {
        return q.to_string();
    }
    let (re, im) = c.approx();
    format!("{} (~{:.6}{:+.6}i)", c, re, im)
}
