//! `rainbow-sat` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parameter or input error,
//! 3 resource or budget exhaustion. JSON reports carry `"schema": 1`;
//! integers are exact and floating-point values have 12 significant digits.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::codes::{
    balanced_type_family, concat_product, exact_max_family, greedy_search, rate_report,
    verify_family, SearchConfig, StringFamily, DEFAULT_ENUMERATION_BUDGET, DEFAULT_LIMIT,
};
use crate::construct::{build_bipartite, construction_report, maximal_extension, report_for_family};
use crate::error::{Error, Result};
use crate::graph::{is_rainbow_saturated, ColoredGraph};
use crate::oracle::{bound_formulas, exact_rsat, lower_bound_witness_check};
use crate::par;

/// Environment variable overriding the default enumeration budget.
pub const BUDGET_ENV: &str = "RAINBOW_SAT_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "rainbow-sat", version, about = "Rainbow saturation: codes, constructions and exhaustive oracles")]
struct Cli {
    /// Worker threads for data-parallel loops.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// String families with the clique-family pair property.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Colored graphs: build from a code, extend, verify.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Exhaustive rainbow saturation numbers.
    #[command(subcommand)]
    Rsat(RsatCmd),
    /// Lower-bound accounting on a saturated graph.
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Asymptotic lower bound and trivial upper bound.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Args, Debug)]
struct OutArg {
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Tsk {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    /// Check the pair property on every pair of members.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Balanced-type family for the clique on 1..=s (t must divide k).
    Construct {
        #[command(flatten)]
        tsk: Tsk,
        #[command(flatten)]
        out: OutArg,
    },
    /// Seeded greedy search over shuffled strings.
    Greedy {
        #[command(flatten)]
        tsk: Tsk,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Exact maximum family via maximum clique.
    Exact {
        #[command(flatten)]
        tsk: Tsk,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        /// Cap on branch-and-bound nodes.
        #[arg(long)]
        node_budget: Option<u64>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Concatenation product of the given families, in order.
    Product {
        #[arg(long = "in", required = true, num_args = 1..)]
        inputs: Vec<PathBuf>,
        /// Verify the product for this clique size.
        #[arg(long)]
        s: Option<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Rate and bound report of a verified family.
    Rate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Complete bipartite colored graph of a code.
    Build {
        #[arg(long)]
        code: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Saturating extension for rainbow K_s.
    Extend {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Rainbow K_s-saturation check.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Triangle construction report, from a code file or by searching.
    Report {
        #[arg(long, conflicts_with_all = ["t", "n"])]
        code: Option<PathBuf>,
        #[arg(long, required_unless_present = "code")]
        t: Option<usize>,
        #[arg(long, required_unless_present = "code")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
}

#[derive(Subcommand, Debug)]
enum RsatCmd {
    /// Minimum saturated edge count by exhaustive enumeration.
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Colored graphs the enumeration may visit.
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
        /// Count every saturated graph at the minimum.
        #[arg(long)]
        all_witnesses: bool,
    },
}

#[derive(Subcommand, Debug)]
enum WitnessCmd {
    /// Replay the lower-bound argument on a saturated graph.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        d: usize,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
    },
}

/// Formats a float with 12 significant digits, trailing zeros trimmed.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:?}");
    }
    let exp = x.abs().log10().floor() as i32;
    let s = if (-5..=15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    };
    if s.contains('.') && !s.contains('e') {
        let trimmed = s.trim_end_matches('0');
        if trimmed.ends_with('.') {
            format!("{trimmed}0")
        } else {
            trimmed.to_string()
        }
    } else {
        s
    }
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) => {
            let text = n.to_string();
            if text.contains(['.', 'e', 'E']) {
                if let Some(x) = n.as_f64() {
                    if let Ok(num) = sig12(x).parse() {
                        *n = num;
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// JSON text of a report with the schema tag added and floats rounded.
pub fn report_json<T: Serialize>(report: &T) -> Result<String> {
    let mut v = serde_json::to_value(report).map_err(|e| Error::param(e.to_string()))?;
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(1));
    }
    round_floats(&mut v);
    serde_json::to_string_pretty(&v).map_err(|e| Error::param(e.to_string()))
}

struct Io<'a> {
    out: &'a mut (dyn Write + Send),
}

impl Io<'_> {
    fn json<T: Serialize>(&mut self, report: &T) -> Result<()> {
        writeln!(self.out, "{}", report_json(report)?)?;
        Ok(())
    }

    fn emit(&mut self, text: &str, out: &OutArg) -> Result<()> {
        match &out.out {
            Some(path) => std::fs::write(path, text)?,
            None => self.out.write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn family(&mut self, header: &str, fam: &StringFamily, out: &OutArg) -> Result<()> {
        self.emit(&format!("# {header}\n{fam}"), out)
    }
}

fn load_family(path: &Path) -> Result<StringFamily> {
    StringFamily::load(path)
}

fn load_graph(path: &Path) -> Result<ColoredGraph> {
    ColoredGraph::load(path)
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    VerificationFailed,
}

fn run_code(cmd: CodeCmd, io: &mut Io) -> Result<Outcome> {
    match cmd {
        CodeCmd::Verify { input, s } => {
            let fam = load_family(&input)?;
            let verdict = verify_family(&fam, s)?;
            io.json(&json!({
                "t": fam.t(),
                "k": fam.k(),
                "s": s,
                "size": fam.len(),
                "ok": verdict.ok,
                // 1-based member numbers, in file order
                "violation": verdict.violation.map(|(i, j)| [i + 1, j + 1]),
            }))?;
            Ok(if verdict.ok { Outcome::Ok } else { Outcome::VerificationFailed })
        }
        CodeCmd::Construct { tsk, out } => {
            let fam = balanced_type_family(tsk.t, tsk.s, tsk.k)?;
            let header = format!(
                "balanced type family t={} s={} k={}: {} strings",
                tsk.t,
                tsk.s,
                tsk.k,
                fam.len()
            );
            io.family(&header, &fam, &out)?;
            Ok(Outcome::Ok)
        }
        CodeCmd::Greedy {
            tsk,
            seed,
            restarts,
            limit,
            out,
        } => {
            let cfg = SearchConfig {
                seed,
                restarts,
                limit,
                ..SearchConfig::default()
            };
            let fam = greedy_search(tsk.t, tsk.s, tsk.k, &cfg)?;
            let header = format!(
                "greedy t={} s={} k={} seed={seed} restarts={restarts}: {} strings",
                tsk.t,
                tsk.s,
                tsk.k,
                fam.len()
            );
            io.family(&header, &fam, &out)?;
            Ok(Outcome::Ok)
        }
        CodeCmd::Exact {
            tsk,
            limit,
            node_budget,
            out,
        } => {
            let cfg = SearchConfig {
                limit,
                node_budget,
                ..SearchConfig::default()
            };
            let r = exact_max_family(tsk.t, tsk.s, tsk.k, &cfg)?;
            let header = format!(
                "exact maximum t={} s={} k={}: {} strings",
                tsk.t, tsk.s, tsk.k, r.size
            );
            io.family(&header, &r.family, &out)?;
            Ok(Outcome::Ok)
        }
        CodeCmd::Product { inputs, s, out } => {
            let mut fams = inputs.iter().map(|p| load_family(p));
            let mut acc = fams.next().expect("clap requires one input")?;
            for f in fams {
                acc = concat_product(&acc, &f?)?;
            }
            if let Some(s) = s {
                if !verify_family(&acc, s)?.ok {
                    return Err(Error::Contract(format!(
                        "product lacks the pair property for s = {s}; check the inputs"
                    )));
                }
            }
            let header = format!("product of {} families: {} strings", inputs.len(), acc.len());
            io.family(&header, &acc, &out)?;
            Ok(Outcome::Ok)
        }
        CodeCmd::Rate { input, s } => {
            let fam = load_family(&input)?;
            let verdict = verify_family(&fam, s)?;
            if !verdict.ok {
                return Err(Error::Contract(format!(
                    "family fails the pair property for s = {s} at members {:?}",
                    verdict.violation.map(|(i, j)| (i + 1, j + 1))
                )));
            }
            io.json(&rate_report(&fam, s)?)?;
            Ok(Outcome::Ok)
        }
    }
}

fn run_graph(cmd: GraphCmd, io: &mut Io) -> Result<Outcome> {
    match cmd {
        GraphCmd::Build { code, out } => {
            let g = build_bipartite(&load_family(&code)?)?;
            io.emit(&g.to_string(), &out)?;
            Ok(Outcome::Ok)
        }
        GraphCmd::Extend { input, s, out } => {
            let g = maximal_extension(&load_graph(&input)?, s)?;
            io.emit(&g.to_string(), &out)?;
            Ok(Outcome::Ok)
        }
        GraphCmd::Verify { input, s } => {
            let report = is_rainbow_saturated(&load_graph(&input)?, s)?;
            io.json(&report)?;
            Ok(if report.saturated {
                Outcome::Ok
            } else {
                Outcome::VerificationFailed
            })
        }
        GraphCmd::Report {
            code,
            t,
            n,
            seed,
            restarts,
            limit,
        } => {
            let report = match code {
                Some(path) => report_for_family(&load_family(&path)?)?,
                None => {
                    let cfg = SearchConfig {
                        seed,
                        restarts,
                        limit,
                        ..SearchConfig::default()
                    };
                    construction_report(t.unwrap_or(0), n.unwrap_or(0), &cfg)?
                }
            };
            io.json(&report)?;
            Ok(Outcome::Ok)
        }
    }
}

fn dispatch_command(cmd: Command, io: &mut Io) -> Result<Outcome> {
    match cmd {
        Command::Code(c) => run_code(c, io),
        Command::Graph(c) => run_graph(c, io),
        Command::Rsat(RsatCmd::Exact {
            n,
            s,
            t,
            budget,
            all_witnesses,
        }) => {
            let r = exact_rsat(n, s, t, budget, all_witnesses)?;
            io.json(&r)?;
            Ok(Outcome::Ok)
        }
        Command::Witness(WitnessCmd::Check { input, s, d, json }) => {
            let r = lower_bound_witness_check(&load_graph(&input)?, s, d)?;
            if json {
                io.json(&r)?;
            } else {
                writeln!(io.out, "A: {:?} (k = {}), B: {:?} (m = {})", r.a, r.k, r.b, r.m)?;
                writeln!(
                    io.out,
                    "qualifying pairs: {}, all disjoint: {}",
                    r.pairs.len(),
                    r.all_disjoint
                )?;
                writeln!(io.out, "max partners {} <= d^2: {}", r.max_partners, r.neighborhood_ok)?;
                writeln!(
                    io.out,
                    "t*sum d' >= (s-2)*sum d: {} ({} vs {})",
                    r.color_share_ok, r.sum_d_prime, r.sum_d
                )?;
                writeln!(io.out, "(d^2+1) q^k >= sum q^(k-d+d'): {} ({} vs {})", r.jensen_ok, r.jensen_lhs, r.jensen_rhs)?;
                writeln!(io.out, "passed: {}", r.passed)?;
            }
            Ok(if r.passed { Outcome::Ok } else { Outcome::VerificationFailed })
        }
        Command::Bounds { n, s, t } => {
            io.json(&bound_formulas(n, s, t)?)?;
            Ok(Outcome::Ok)
        }
    }
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
pub fn dispatch<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let to_out = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            let _ = if to_out { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if to_out { 0 } else { 2 };
        }
    };
    let threads = cli.threads;
    let mut io = Io { out };
    let result = par::with_threads(threads, move || dispatch_command(cli.command, &mut io));
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::VerificationFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
