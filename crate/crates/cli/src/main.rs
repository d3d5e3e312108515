//! `menonforge` — exact verification of order-theoretic identities on finite
//! groups.
//!
//! Exit codes: 0 = every check passed, 1 = at least one identity check
//! failed, 2 = usage or input error.

mod report;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use menonforge_core::groups::{load_cayley_table, AssociativityCoverage, DEFAULT_MAX_ORDER};
use menonforge_core::identities::{
    psi_cyclic_bounds_check, psi_of_group, sigma_cyclic, verify_burnside, verify_corollary2,
    verify_corollary3, verify_eq3, verify_menon_classical, verify_theorem1,
};
use menonforge_core::{
    build_group, parse_group_spec, validate_group, FiniteGroup, Identity, IdentityReport,
    UnitsAction,
};

use report::{emit, Format, Record};

const MAX_ORDER_ENV: &str = "MENONFORGE_MAX_ORDER";

#[derive(Parser)]
#[command(name = "menonforge", version)]
#[command(about = "Exact verification of Menon-type identities on finite groups")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,

    /// Omit timing fields, making report bodies reproducible byte-for-byte.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one identity on one target (a group spec like `S3`, `C2xC4`,
    /// `table:<path>`, `perm:(1 2 3);(1 2)` — or a modulus like `60`).
    Verify { target: String, identity: IdentityArg },

    /// Verify an identity across a modulus range or a group family.
    Sweep {
        /// Identity to check; `all` expands to every identity that fits the
        /// target kind.
        #[arg(long, value_enum)]
        identity: IdentityArg,

        /// Inclusive modulus range `A..B`.
        #[arg(long, value_name = "A..B")]
        moduli: Option<RangeArg>,

        /// Group family to sweep (`catalog` is the standard order-<=200 set).
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,

        /// Inclusive family parameter range `A..B`; for `abelian` this is an
        /// order range.
        #[arg(long, value_name = "A..B")]
        param: Option<RangeArg>,

        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,

        /// Group order cap for this sweep (defaults to the hard cap).
        #[arg(long)]
        max_order: Option<u64>,
    },

    /// Print psi, sigma, the cyclic-subgroup counts, orbit count and per-unit
    /// fixed-set sizes of a group.
    Invariants { spec: String },

    /// Check the group axioms of a Cayley table file.
    ValidateTable { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Menon,
    Theorem1,
    Eq3,
    Corollary2,
    Corollary3,
    PsiBounds,
    Burnside,
    All,
}

impl IdentityArg {
    /// The concrete identity, or `None` for `all`.
    pub fn concrete(self) -> Option<Identity> {
        match self {
            IdentityArg::Menon => Some(Identity::MenonClassical),
            IdentityArg::Theorem1 => Some(Identity::Theorem1),
            IdentityArg::Eq3 => Some(Identity::Eq3),
            IdentityArg::Corollary2 => Some(Identity::Corollary2),
            IdentityArg::Corollary3 => Some(Identity::Corollary3),
            IdentityArg::PsiBounds => Some(Identity::PsiCyclicBounds),
            IdentityArg::Burnside => Some(Identity::Burnside),
            IdentityArg::All => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Cyclic,
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
    Abelian,
    Catalog,
}

/// Inclusive integer range written `A..B` (or a single `N`).
#[derive(Debug, Clone, Copy)]
pub struct RangeArg {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<RangeArg, String> {
        let parse = |w: &str| {
            w.parse::<u64>()
                .map_err(|_| format!("`{w}` is not a nonnegative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("range {lo}..{hi} is empty"));
        }
        Ok(RangeArg { lo, hi })
    }
}

/// An input or configuration problem; mapped to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, UsageError> {
    let cap = hard_cap()?;
    let timing = !cli.no_timing;
    match cli.command {
        Command::Verify { target, identity } => {
            let reports = run_verify(&target, identity, cap)?;
            let records: Vec<Record> = reports
                .iter()
                .map(|r| Record::from_report(r, timing))
                .collect();
            let stdout = std::io::stdout();
            emit(&mut stdout.lock(), cli.format, &records, timing)
                .map_err(|e| UsageError(e.to_string()))?;
            Ok(reports.iter().all(|r| r.ok))
        }
        Command::Sweep {
            identity,
            moduli,
            family,
            param,
            jobs,
            max_order,
        } => {
            if jobs == 0 {
                return Err(UsageError("--jobs must be at least 1".into()));
            }
            let sweep_cap = match max_order {
                Some(requested) if requested > cap => {
                    return Err(UsageError(format!(
                        "--max-order {requested} exceeds the hard cap {cap} (override with {MAX_ORDER_ENV})"
                    )));
                }
                Some(requested) => requested,
                None => cap,
            };
            let items = match (moduli, family) {
                (Some(range), None) => sweep::modulus_items(identity, range.lo, range.hi)?,
                (None, Some(fam)) => {
                    sweep::family_items(identity, fam, param.map(|r| (r.lo, r.hi)), sweep_cap)?
                }
                (Some(_), Some(_)) => {
                    return Err(UsageError("--moduli and --family are mutually exclusive".into()))
                }
                (None, None) => {
                    return Err(UsageError("sweep needs --moduli A..B or --family <name>".into()))
                }
            };
            let started = Instant::now();
            let reports = sweep::run_parallel(&items, jobs, |item| sweep::execute(item, sweep_cap));
            let mut records: Vec<Record> = reports
                .iter()
                .map(|r| Record::from_report(r, timing))
                .collect();
            records.sort_by_key(Record::sort_key);
            let stdout = std::io::stdout();
            emit(&mut stdout.lock(), cli.format, &records, timing)
                .map_err(|e| UsageError(e.to_string()))?;
            let passed = records.iter().filter(|r| r.ok).count();
            let failed = records.len() - passed;
            eprintln!(
                "sweep: {passed} passed, {failed} failed in {:.2?}",
                started.elapsed()
            );
            Ok(failed == 0)
        }
        Command::Invariants { spec } => {
            run_invariants(&spec, cli.format, cap)?;
            Ok(true)
        }
        Command::ValidateTable { path } => run_validate_table(&path, cli.format),
    }
}

fn hard_cap() -> Result<u64, UsageError> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(text) => match text.trim().parse::<u64>() {
            Ok(cap) if cap >= 1 => Ok(cap),
            _ => Err(UsageError(format!(
                "{MAX_ORDER_ENV} must be a positive integer, got `{text}`"
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_ORDER),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(UsageError(format!("{MAX_ORDER_ENV} is not valid UTF-8")))
        }
    }
}

enum Target {
    Modulus(u64),
    Group(Box<FiniteGroup>),
}

fn parse_target(text: &str, cap: u64) -> Result<Target, UsageError> {
    if text.chars().all(|c| c.is_ascii_digit()) && !text.is_empty() {
        let n: u64 = text
            .parse()
            .map_err(|_| UsageError(format!("modulus `{text}` out of range")))?;
        if n == 0 {
            return Err(UsageError("modulus must be at least 1".into()));
        }
        return Ok(Target::Modulus(n));
    }
    let spec = parse_group_spec(text).map_err(|e| UsageError(e.to_string()))?;
    let group = build_group(&spec, cap).map_err(|e| UsageError(e.to_string()))?;
    Ok(Target::Group(Box::new(group)))
}

fn run_verify(
    target: &str,
    identity: IdentityArg,
    cap: u64,
) -> Result<Vec<IdentityReport>, UsageError> {
    match parse_target(target, cap)? {
        Target::Modulus(n) => {
            let run_one = |id: Identity| -> Result<IdentityReport, UsageError> {
                if n < 2 && matches!(id, Identity::Corollary3 | Identity::PsiCyclicBounds) {
                    return Err(UsageError(format!("identity `{id}` needs a modulus >= 2")));
                }
                Ok(match id {
                    Identity::MenonClassical => verify_menon_classical(n),
                    Identity::Corollary2 => verify_corollary2(n),
                    Identity::Corollary3 => verify_corollary3(n),
                    Identity::PsiCyclicBounds => psi_cyclic_bounds_check(n),
                    other => {
                        return Err(UsageError(format!(
                            "identity `{other}` needs a group spec, not a modulus"
                        )))
                    }
                })
            };
            match identity.concrete() {
                Some(id) => Ok(vec![run_one(id)?]),
                None => {
                    let mut ids = vec![Identity::MenonClassical, Identity::Corollary2];
                    if n >= 2 {
                        ids.push(Identity::Corollary3);
                        ids.push(Identity::PsiCyclicBounds);
                    }
                    ids.into_iter().map(run_one).collect()
                }
            }
        }
        Target::Group(group) => {
            let run_one = |id: Identity| -> Result<IdentityReport, UsageError> {
                Ok(match id {
                    Identity::Theorem1 => verify_theorem1(&group),
                    Identity::Eq3 => verify_eq3(&group),
                    Identity::Burnside => verify_burnside(&group),
                    other => {
                        return Err(UsageError(format!(
                            "identity `{other}` needs a modulus, not a group spec"
                        )))
                    }
                })
            };
            match identity.concrete() {
                Some(id) => Ok(vec![run_one(id)?]),
                None => [Identity::Theorem1, Identity::Eq3, Identity::Burnside]
                    .into_iter()
                    .map(run_one)
                    .collect(),
            }
        }
    }
}

#[derive(Serialize)]
struct InvariantsOutput {
    instance: String,
    n: u64,
    psi: u128,
    sigma: u128,
    n_d: BTreeMap<u64, u64>,
    orbits: u64,
    fix_set_sizes: BTreeMap<u64, u64>,
}

fn run_invariants(spec_text: &str, format: Format, cap: u64) -> Result<(), UsageError> {
    let spec = parse_group_spec(spec_text).map_err(|e| UsageError(e.to_string()))?;
    let group = build_group(&spec, cap).map_err(|e| UsageError(e.to_string()))?;
    let action = UnitsAction::new(&group);
    let output = InvariantsOutput {
        instance: group.name().to_string(),
        n: group.order() as u64,
        psi: psi_of_group(&group),
        sigma: sigma_cyclic(&group),
        n_d: menonforge_core::identities::n_d_counts(&group),
        orbits: action.orbits().orbit_count() as u64,
        fix_set_sizes: action
            .units()
            .iter()
            .map(|&a| (a, action.fix_set(a).len() as u64))
            .collect(),
    };
    let mut stdout = std::io::stdout().lock();
    let print = |stdout: &mut dyn Write, out: &InvariantsOutput| -> std::io::Result<()> {
        writeln!(stdout, "instance: {}", out.instance)?;
        writeln!(stdout, "n: {}", out.n)?;
        writeln!(stdout, "psi: {}", out.psi)?;
        writeln!(stdout, "sigma: {}", out.sigma)?;
        let n_d: Vec<String> = out.n_d.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        writeln!(stdout, "n_d: {}", n_d.join(" "))?;
        writeln!(stdout, "orbits: {}", out.orbits)?;
        let fixes: Vec<String> = out
            .fix_set_sizes
            .iter()
            .map(|(a, size)| format!("a={a}:{size}"))
            .collect();
        writeln!(stdout, "fix_set_sizes: {}", fixes.join(" "))
    };
    match format {
        Format::Plain => print(&mut stdout, &output).map_err(|e| UsageError(e.to_string())),
        Format::Json => {
            serde_json::to_writer(&mut stdout, &output).map_err(|e| UsageError(e.to_string()))?;
            writeln!(stdout).map_err(|e| UsageError(e.to_string()))
        }
        _ => Err(UsageError(
            "invariants supports --format plain or json".into(),
        )),
    }
}

#[derive(Serialize)]
struct ValidationOutput {
    path: String,
    order: u64,
    valid: bool,
    failures: Vec<String>,
    truncated: bool,
    associativity: AssociativityOutput,
}

#[derive(Serialize)]
struct AssociativityOutput {
    mode: &'static str,
    triples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

fn run_validate_table(path: &Path, format: Format) -> Result<bool, UsageError> {
    let group = load_cayley_table(path).map_err(|e| UsageError(e.to_string()))?;
    let report = validate_group(&group);
    let output = ValidationOutput {
        path: path.display().to_string(),
        order: report.order as u64,
        valid: report.is_group(),
        failures: report.failures.iter().map(|f| f.to_string()).collect(),
        truncated: report.truncated,
        associativity: match report.associativity {
            AssociativityCoverage::Exhaustive { triples } => AssociativityOutput {
                mode: "exhaustive",
                triples,
                seed: None,
            },
            AssociativityCoverage::Sampled { triples, seed } => AssociativityOutput {
                mode: "sampled",
                triples,
                seed: Some(seed),
            },
        },
    };
    let mut stdout = std::io::stdout().lock();
    match format {
        Format::Plain => {
            writeln!(stdout, "table: {}", output.path)
                .and_then(|()| writeln!(stdout, "order: {}", output.order))
                .and_then(|()| writeln!(stdout, "valid: {}", output.valid))
                .and_then(|()| {
                    writeln!(
                        stdout,
                        "associativity: {} ({} triples)",
                        output.associativity.mode, output.associativity.triples
                    )
                })
                .map_err(|e| UsageError(e.to_string()))?;
            for failure in &output.failures {
                writeln!(stdout, "failure: {failure}").map_err(|e| UsageError(e.to_string()))?;
            }
            if output.truncated {
                writeln!(stdout, "failure: (more failures omitted)")
                    .map_err(|e| UsageError(e.to_string()))?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut stdout, &output).map_err(|e| UsageError(e.to_string()))?;
            writeln!(stdout).map_err(|e| UsageError(e.to_string()))?;
        }
        _ => {
            return Err(UsageError(
                "validate-table supports --format plain or json".into(),
            ))
        }
    }
    Ok(output.valid)
}
