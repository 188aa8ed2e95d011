//! The `pialg` command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::fgab::FgAbGroup;
use crate::io::Problem;
use crate::pi_functors::gamma_tilde;
use crate::quadratic::{brute_force_quad_tensor, quad_tensor, QuadraticModule, DEFAULT_ORACLE_BOUND};
use crate::realizability::{all_realizable_in_stem, check, survey_stem, three_stage_obstruction, SurveyOptions};
use crate::report::Report;
use crate::selftest::run_selftest;
use crate::tables::{parse_group, StableTables};

#[derive(Parser, Debug)]
#[command(name = "pialg", version, about = "Realizability of Π-algebras concentrated in two degrees")]
pub struct Cli {
    /// Table overlay applied on top of the defaults (repeatable, in order).
    #[arg(long = "tables", global = true, value_name = "PATH")]
    pub tables: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for completion and survey enumeration.
    #[arg(long, global = true, value_name = "N")]
    pub parallel: Option<usize>,
    /// Also write the output to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// JSON report.
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide a problem file (2-stage or 3-stage).
    Check {
        /// JSON problem file.
        problem: PathBuf,
    },
    /// Print Γ̃ₙᵏ(A) with the generator order `eta` matrices use.
    GammaTilde {
        /// Bottom degree.
        #[arg(long)]
        n: u32,
        /// Gap between the two degrees.
        #[arg(long)]
        k: u32,
        /// A group such as `Z + Z/4`.
        #[arg(long)]
        group: String,
    },
    /// Compute A ⊗ᑫ M.
    QuadTensor {
        /// A group such as `Z/2 + Z/4`.
        #[arg(long)]
        group: String,
        /// Builtin name (Z_Gamma, Z_Lambda, pi5S3, ...) or a JSON literal.
        #[arg(long, default_value = "Z_Gamma")]
        module: String,
        /// Cross-check against the direct presentation.
        #[arg(long)]
        oracle: bool,
    },
    /// Inspect the loaded tables.
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
    /// Count verdicts over small groups and every η in one stem (n = k + 2).
    Survey {
        /// The stem k.
        #[arg(long)]
        stem: u32,
        /// Target group A_{n+k} (repeatable).
        #[arg(long = "target")]
        targets: Vec<String>,
        /// Largest finite cyclic summand of A_n.
        #[arg(long, default_value_t = 4)]
        max_order: u64,
        /// Most summands in A_n.
        #[arg(long, default_value_t = 1)]
        max_summands: usize,
        /// Leave ℤ out of the summands of A_n.
        #[arg(long)]
        no_free: bool,
        /// Cap on the maps η examined per (A_n, target) pair.
        #[arg(long, default_value_t = 100_000)]
        max_maps: usize,
    },
    /// Run the built-in regression examples.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum TablesAction {
    /// Summaries of every tabulated stem, or of one.
    Show {
        #[arg(long)]
        stem: Option<u32>,
    },
    /// The tables in overlay syntax.
    Dump,
}

/// What a command produced.
pub struct Outcome {
    pub exit_code: i32,
    pub text: String,
    pub report: Report,
}

impl Outcome {
    /// The output in the requested format.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Machine => self.report.to_json() + "\n",
        }
    }
}

/// Exit code for errors.
pub const ERROR_EXIT: i32 = 3;
/// Exit code when selftest cases fail.
pub const SELFTEST_FAILED_EXIT: i32 = 4;

fn group_arg(s: &str) -> Result<FgAbGroup> {
    parse_group(s).map_err(Error::InvalidGroup)
}

pub fn run(cli: &Cli, argv: Vec<String>) -> Result<Outcome> {
    if let Some(n) = cli.parallel {
        // Only the first configuration in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let start = Instant::now();
    let tables = StableTables::with_overlays(&cli.tables)?;
    let mut report = Report::new(argv, tables.sources.clone());
    let mut text = String::new();
    let mut exit_code = 0;

    match &cli.command {
        Command::Check { problem } => match Problem::load(problem)? {
            Problem::TwoStage(p) => {
                let pa = p.to_algebra(&tables)?;
                let v = check(&pa, &tables)?;
                let _ = writeln!(
                    text,
                    "Γ̃_{}^{}({}) = {}  [{}]",
                    pa.n,
                    pa.k,
                    pa.a_n,
                    pa.gamma_tilde.group,
                    pa.gamma_tilde.regime
                );
                let _ = writeln!(text, "η: {}", pa.eta);
                text.push_str(&v.to_string());
                exit_code = v.status.exit_code();
                report.gamma_tilde = Some((&pa.gamma_tilde).into());
                report.verdicts.push(v);
            }
            Problem::ThreeStage(p) => {
                let (o, v) = three_stage_obstruction(&p.to_input()?)?;
                let _ = writeln!(text, "O: {o}");
                text.push_str(&v.to_string());
                exit_code = v.status.exit_code();
                report.obstruction_map = Some(o);
                report.verdicts.push(v);
            }
        },
        Command::GammaTilde { n, k, group } => {
            let a = group_arg(group)?;
            let r = gamma_tilde(*n, *k, &a, &tables)?;
            let _ = writeln!(text, "Γ̃_{n}^{k}({a}) = {}", r.group);
            let _ = writeln!(text, "regime: {}", r.regime);
            if r.coverage == crate::tables::Coverage::Fragment {
                let _ = writeln!(text, "coverage: α family fragment of Q_{k}^S only");
            }
            if r.group.ngens() > 0 {
                let _ = writeln!(text, "generators (η columns in this order):");
            }
            for i in 0..r.group.ngens() {
                let d = r.group.order_of(i);
                let order = if d.is_zero() { "∞".to_string() } else { d.to_string() };
                let _ = writeln!(text, "  {}: {}  (order {order})", i + 1, r.group.label(i));
            }
            report.gamma_tilde = Some((&r).into());
        }
        Command::QuadTensor { group, module, oracle } => {
            let a = group_arg(group)?;
            let m = QuadraticModule::parse(module)?;
            let q = quad_tensor(&a, &m);
            let shown = if a.ngens() > 1 { format!("({a})") } else { a.to_string() };
            let _ = writeln!(text, "{shown} ⊗ᑫ {} = {}", m.builtin_name().unwrap_or("M"), q.group);
            if *oracle {
                let b = brute_force_quad_tensor(&a, &m, DEFAULT_ORACLE_BOUND)?;
                let agree = b.is_isomorphic(&q.group);
                let _ = writeln!(text, "direct presentation: {b} ({})", if agree { "agrees" } else { "DISAGREES" });
                if !agree {
                    exit_code = SELFTEST_FAILED_EXIT;
                }
            }
            report.group = Some(q.group);
        }
        Command::Tables { action } => match action {
            TablesAction::Dump => text = tables.dump(),
            TablesAction::Show { stem } => {
                let _ = writeln!(text, "sources: {}", tables.sources.join(", "));
                let stems: Vec<u32> = match stem {
                    Some(k) => vec![*k],
                    None => {
                        let mut s: Vec<u32> = tables.pi_stable.keys().chain(tables.q_stable.keys()).copied().collect();
                        s.sort_unstable();
                        s.dedup();
                        s
                    }
                };
                for k in stems {
                    text.push_str(&tables.describe_stem(k));
                    if let Ok(v) = all_realizable_in_stem(k, &tables) {
                        let _ = writeln!(text, "  all 2-stage Π-algebras realizable: {} ({})", v.answer, v.reason);
                        report.stems.push(v);
                    }
                }
                if stem.is_none() {
                    text.push_str("ring relations:\n");
                    for (r, holds) in tables.check_ring_relations() {
                        let state = match holds {
                            Some(true) => "holds",
                            Some(false) => "FAILS",
                            None => "not covered by the product table",
                        };
                        let _ = writeln!(text, "  {r}: {state}");
                    }
                    for (m, g) in &tables.em_homology {
                        let _ = writeln!(text, "HZ_{m}HZ = {g}");
                    }
                    for ((k, n), g) in &tables.q_unstable {
                        let _ = writeln!(text, "Q_{{{k},{n}}} = {g}");
                    }
                    for (n, m) in &tables.metastable_qm {
                        let _ = writeln!(text, "Q_{}{{S^{n}}} = {}", n - 1, m.builtin_name().unwrap_or("(literal)"));
                    }
                    let _ = writeln!(text, "torsion exponent rule: {}", tables.torsion_exponent_rule);
                }
            }
        },
        Command::Survey { stem, targets, max_order, max_summands, no_free, max_maps } => {
            let targets = targets.iter().map(|t| group_arg(t)).collect::<Result<Vec<_>>>()?;
            let opts = SurveyOptions {
                max_cyclic_order: *max_order,
                max_summands: *max_summands,
                include_free: !no_free,
                targets,
                max_maps: *max_maps,
            };
            let r = survey_stem(*stem, &tables, &opts)?;
            text = r.to_string();
            report.survey = Some(r);
        }
        Command::Selftest => {
            let cases = run_selftest(&tables);
            for c in &cases {
                let _ = writeln!(
                    text,
                    "{} {}: {} ({:.1} ms)",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail,
                    c.elapsed_us as f64 / 1000.0
                );
            }
            let failed = cases.iter().filter(|c| !c.passed).count();
            let _ = writeln!(text, "{} passed, {failed} failed", cases.len() - failed);
            if failed > 0 {
                exit_code = SELFTEST_FAILED_EXIT;
            }
            report.selftest = cases;
        }
    }
    report.elapsed_us = start.elapsed().as_micros() as u64;
    Ok(Outcome { exit_code, text, report })
}

