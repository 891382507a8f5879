//! `quandle`: command-line front end.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 overflow or cap exceeded.

mod inputs;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use quandle_core::enumeration::{enumerate_group, enumerate_quandle, Caps, EnumOutcome};
use quandle_core::groups::{coxeter_quandle, dehn_quandle, CoxeterMatrix, DEFAULT_GROUP_CAP};
use quandle_core::presentation::{augment_n, env_presentation};
use quandle_core::quandle::{find_isomorphism, smallest_nontrivial_quotient, DEFAULT_CONGRUENCE_BUDGET, DEFAULT_QUANDLE_CAP};
use quandle_core::symplectic::{centralizer_generation_check, p_quandle, transvection_centralizer_check};
use quandle_core::{Error, FiniteQuandle};

#[derive(Parser)]
#[command(name = "quandle", version, about = "Finite quandles, presentations and enumeration")]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the quandle axioms for a JSON table.
    Validate {
        table: PathBuf,
        /// Skip the self-distributivity scan.
        #[arg(long)]
        unchecked: bool,
    },
    /// Enumerate the quandle of a presentation (file, DSL text, or built-in name).
    Enumerate {
        presentation: String,
        /// Add x *^n y = x for all generator pairs first.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = quandle_core::enumeration::DEFAULT_QUANDLE_ROWS)]
        cap: usize,
        /// Write the table here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Progress on stderr every 10^4 definitions.
        #[arg(long)]
        progress: bool,
    },
    /// Order of a presented group by coset enumeration.
    GroupOrder {
        presentation: String,
        /// Append s^K for every generator s.
        #[arg(long)]
        power: Option<i64>,
        #[arg(long, default_value_t = quandle_core::enumeration::DEFAULT_GROUP_ROWS)]
        cap: usize,
        #[arg(long)]
        progress: bool,
    },
    /// Dehn quandle D(A^G) of a finite group.
    Dehn {
        /// `S5`, `D4` (dihedral of order 8), a Coxeter type (`B3`), or `DEG:CYCLES;CYCLES..`.
        #[arg(long)]
        group: String,
        /// `;`-separated cycle notation, `gens` for the group's generators, or `all`.
        #[arg(long)]
        subset: String,
        #[arg(long, default_value_t = DEFAULT_QUANDLE_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coxeter quandle of a type name or matrix.
    CoxeterQuandle {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Projective primitive homological quandle P_{g,n}.
    Pquandle {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_QUANDLE_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for an isomorphism between two tables.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        unchecked: bool,
    },
    /// Smallest quotient with at least two elements (`-` or nothing reads stdin).
    MinQuotient {
        table: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CONGRUENCE_BUDGET)]
        budget: usize,
        #[arg(long)]
        unchecked: bool,
    },
    /// Symplectic checks.
    Symp {
        #[command(subcommand)]
        command: SympCommand,
    },
    /// Print the enveloping-group presentation.
    Env {
        presentation: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum SympCommand {
    /// Centralizer of the twist along a_1 in Sp(2g, Z_p).
    CheckLemma {
        #[arg(value_enum)]
        which: Check,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    /// Centralizer equals the matrices of the predicted shape.
    #[value(name = "5.1", alias = "shape")]
    Shape,
    /// Centralizer is generated by the listed twists and -I.
    #[value(name = "5.2", alias = "generators")]
    Generators,
}

impl Check {
    fn label(self) -> &'static str {
        match self {
            Check::Shape => "5.1",
            Check::Generators => "5.2",
        }
    }
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::CapExceeded { .. } | Error::BudgetExceeded(_)) => 2,
            _ => 1,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

type Outcome = std::result::Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}

fn print_json(value: &serde_json::Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{value}");
}

/// Writes the table to `out`, or to stdout when absent.
fn emit_table(q: &FiniteQuandle, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, q.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
            print_json(&json!({"size": q.size(), "out": path.display().to_string()}));
        }
        None => println!("{}", q.to_json()),
    }
    Ok(())
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { table, unchecked } => {
            let q = inputs::read_table(Some(&table), unchecked)?;
            print_json(&json!({
                "valid": true,
                "size": q.size(),
                "orbits": q.orbits().len(),
                "nu": q.nu_profile(),
            }));
            Ok(0)
        }
        Command::Enumerate { presentation, n, cap, out, progress } => {
            let p = inputs::presentation(&presentation)?
                .quandle
                .context("enumerate needs a quandle presentation")?;
            let p = match n {
                Some(n) if n < 2 => return Err(anyhow::anyhow!("--n must be at least 2").into()),
                Some(n) => augment_n(&p, n),
                None => p,
            };
            let caps = Caps::rows(cap).with_progress(progress);
            let outcome = enumerate_quandle(&p, caps)?;
            print_json(&serde_json::from_str(&outcome.to_json(|r| r.size())).expect("valid json"));
            match outcome {
                EnumOutcome::Finished(r) => {
                    if let Some(path) = &out {
                        std::fs::write(path, r.quandle.to_json() + "\n")
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                    Ok(0)
                }
                EnumOutcome::Overflow { .. } => Ok(2),
            }
        }
        Command::GroupOrder { presentation, power, cap, progress } => {
            let b = inputs::presentation(&presentation)?;
            let mut gp = match (b.group, b.quandle) {
                (Some(g), _) => g,
                (None, Some(q)) => env_presentation(&q, None),
                (None, None) => unreachable!(),
            };
            if let Some(k) = power {
                if k == 0 {
                    return Err(anyhow::anyhow!("--power must be non-zero").into());
                }
                gp = gp.with_generator_powers(k);
            }
            let outcome = enumerate_group(&gp, Caps::rows(cap).with_progress(progress));
            match &outcome {
                EnumOutcome::Finished(r) => {
                    print_json(&json!({"status": "finished", "size": r.order, "order": r.order}));
                    Ok(0)
                }
                EnumOutcome::Overflow { .. } => {
                    print_json(&serde_json::from_str(&outcome.to_json(|r| r.order)).expect("valid json"));
                    Ok(2)
                }
            }
        }
        Command::Dehn { group, subset, cap, out } => {
            let (g, gens) = inputs::group(&group)?;
            let subset = inputs::subset(&subset, &g, &gens)?;
            let q = dehn_quandle(&g, &subset, cap)?;
            emit_table(&q, out.as_ref())?;
            Ok(0)
        }
        Command::CoxeterQuandle { ty, out } => {
            let m: CoxeterMatrix = ty.parse()?;
            let q = coxeter_quandle(&m)?;
            emit_table(&q, out.as_ref())?;
            Ok(0)
        }
        Command::Pquandle { g, n, cap, out } => {
            let q = p_quandle(g, n, cap)?;
            emit_table(&q, out.as_ref())?;
            Ok(0)
        }
        Command::Iso { first, second, unchecked } => {
            let a = inputs::read_table(Some(&first), unchecked)?;
            let b = inputs::read_table(Some(&second), unchecked)?;
            let mapping = find_isomorphism(&a, &b);
            print_json(&json!({"isomorphic": mapping.is_some(), "mapping": mapping}));
            Ok(0)
        }
        Command::MinQuotient { table, budget, unchecked } => {
            let q = inputs::read_table(table.as_ref(), unchecked)?;
            let r = smallest_nontrivial_quotient(&q, budget)?;
            print_json(&json!({
                "size": r.order,
                "smallest": r.smallest,
                "smallest_proper": r.smallest_proper,
                "congruences_visited": r.visited,
                "witness": r.witness.map(|c| c.blocks()),
            }));
            Ok(0)
        }
        Command::Symp { command: SympCommand::CheckLemma { which, g, p, cap } } => {
            let report = match which {
                Check::Shape => transvection_centralizer_check(g, p, cap)?,
                Check::Generators => centralizer_generation_check(g, p, cap)?,
            };
            print_json(&json!({
                "lemma": which.label(),
                "g": report.g,
                "p": report.p,
                "group_order": report.group_order,
                "order_formula": report.order_formula.to_string(),
                "centralizer_order": report.centralizer_order,
                "compared_order": report.compared_order,
                "equal": report.equal,
                "counterexample": report.counterexample,
            }));
            if report.equal && report.order_formula == report.group_order as u128 {
                Ok(0)
            } else {
                Ok(1)
            }
        }
        Command::Env { presentation, n } => {
            let b = inputs::presentation(&presentation)?;
            let Some(q) = b.quandle else {
                bail_failure("env needs a quandle presentation")?
            };
            if n.is_some_and(|n| n < 2) {
                bail_failure("--n must be at least 2")?;
            }
            println!("{}", env_presentation(&q, n));
            Ok(0)
        }
    }
}

fn bail_failure<T>(message: &str) -> std::result::Result<T, Failure> {
    let r: anyhow::Result<T> = (|| bail!("{message}"))();
    r.map_err(Failure::from)
}
