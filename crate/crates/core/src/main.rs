use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use glp_core::bench::{self, Family};
use glp_core::decider;
use glp_core::formula;
use glp_core::qbf;
use glp_core::selftest::{self, Sizes, Suite};

/// Modality indices above this trigger a cost warning.
const INDEX_WARN: usize = 12;

#[derive(Parser)]
#[command(
    name = "glp",
    version,
    about = "Decision procedure for closed GLP formulas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide provability of a closed formula
    Decide(DecideArgs),
    /// Reduce a QBF to a closed formula
    ReduceQbf(ReduceArgs),
    /// Run the built-in property suites
    Selftest(SelftestArgs),
    /// Time a family of instances and emit CSV
    Bench(BenchArgs),
}

#[derive(Args)]
struct DecideArgs {
    /// Formula text; read from --file or standard input when absent
    formula: Option<String>,
    #[arg(long, conflicts_with = "formula")]
    file: Option<PathBuf>,
    /// Print a refuting world when not provable
    #[arg(long)]
    witness: bool,
    /// Print level, maximum code measures and elapsed time
    #[arg(long)]
    stats: bool,
    /// Dump code measures of every subformula (format not stable)
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct ReduceArgs {
    /// QBF text such as "E0 A1 : x0 & ~x1"; standard input when absent
    qbf: Option<String>,
    /// Also decide the reduction and compare with brute-force evaluation
    #[arg(long)]
    decide: bool,
}

#[derive(Args)]
struct SelftestArgs {
    /// ordinal, setcode, gl-agreement, axioms, fact1, schemas, qbf-roundtrip or all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// words, random or qbf
    #[arg(long, default_value = "words")]
    family: String,
    /// Comma-separated sizes (variables for the qbf family)
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Output path; standard output when absent
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    ExitCode::from(run(cli.command, &mut out, &mut err))
}

type Sink<'a> = &'a mut dyn Write;

/// Reported on standard error with exit status 2.
struct Failure(String);

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(e.to_string())
    }
}

fn run(command: Command, out: Sink, err: Sink) -> u8 {
    let result = match command {
        Command::Decide(a) => cmd_decide(a, out, err),
        Command::ReduceQbf(a) => cmd_reduce(a, out),
        Command::Selftest(a) => cmd_selftest(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    result.unwrap_or_else(|Failure(msg)| {
        let _ = writeln!(err, "error: {msg}");
        2
    })
}

fn read_input(arg: Option<String>, file: Option<PathBuf>) -> Result<String, Failure> {
    match (arg, file) {
        (Some(text), _) => Ok(text),
        (None, Some(path)) => {
            std::fs::read_to_string(&path).map_err(|e| Failure(format!("{}: {e}", path.display())))
        }
        (None, None) => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn cmd_decide(a: DecideArgs, out: Sink, err: Sink) -> Result<u8, Failure> {
    let text = read_input(a.formula, a.file)?;
    let f = formula::parse(text.trim()).map_err(|e| Failure(e.to_string()))?;
    let level = decider::required_level(&f);
    if level > INDEX_WARN + 1 {
        writeln!(
            err,
            "warning: modality index {} above {INDEX_WARN}; cost grows like |phi|^(n+3) with n = {level}",
            level - 1
        )?;
    }
    let (v, traces) = if a.trace {
        decider::decide_traced(&f)
    } else {
        (decider::decide(&f), Vec::new())
    };
    writeln!(
        out,
        "{}",
        if v.provable {
            "PROVABLE"
        } else {
            "NOT PROVABLE"
        }
    )?;
    if let Some(w) = v.witness.as_ref().filter(|_| a.witness) {
        writeln!(out, "witness: {w}")?;
    }
    if a.stats {
        writeln!(
            out,
            "n={} max_w={} max_oc={} millis={:.3}",
            v.stats.level,
            v.stats.max_width,
            v.stats.max_ord_cost,
            v.stats.elapsed.as_secs_f64() * 1e3
        )?;
    }
    for t in &traces {
        writeln!(out, "trace: {t}")?;
    }
    Ok(if v.provable { 0 } else { 1 })
}

fn cmd_reduce(a: ReduceArgs, out: Sink) -> Result<u8, Failure> {
    let text = read_input(a.qbf, None)?;
    let q = qbf::parse(text.trim()).map_err(|e| Failure(e.to_string()))?;
    let reduced = q.reduce();
    writeln!(out, "{reduced}")?;
    if !a.decide {
        return Ok(0);
    }
    let truth = q.eval_brute();
    let provable = decider::decide(&reduced).provable;
    writeln!(
        out,
        "QBF={truth} DECIDE={} {}",
        if provable { "provable" } else { "not-provable" },
        if truth == provable {
            "MATCH"
        } else {
            "MISMATCH"
        }
    )?;
    Ok(if truth == provable { 0 } else { 3 })
}

fn cmd_selftest(a: SelftestArgs, out: Sink) -> Result<u8, Failure> {
    let suites = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse::<Suite>().map_err(Failure)?]
    };
    let sizes = Sizes::default();
    let mut all_ok = true;
    for s in suites {
        let report = selftest::run(s, a.seed, &sizes);
        writeln!(out, "{report}")?;
        for f in &report.failures {
            writeln!(out, "  failed: {f}")?;
        }
        for v in report.audit.violations.iter().take(5) {
            writeln!(out, "  audit: {v}")?;
        }
        let bounds = [
            ("w <= |psi|", &report.bounds.width),
            ("oc <= n|psi|+1", &report.bounds.ord_cost),
        ];
        for (name, b) in bounds {
            if let Some(first) = &b.first {
                writeln!(
                    out,
                    "  bound {name}: {} violations, first {first}",
                    b.violations
                )?;
            }
        }
        all_ok &= report.ok_with_bounds();
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_bench(a: BenchArgs, out: Sink) -> Result<u8, Failure> {
    let family: Family = a.family.parse().map_err(Failure)?;
    let sizes = if a.sizes.is_empty() {
        match family {
            Family::Words => vec![100, 200, 400, 800],
            Family::Random => vec![50, 100, 200, 400],
            Family::Qbf => vec![1, 2, 3],
        }
    } else {
        a.sizes
    };
    let mut file = match &a.csv {
        Some(path) => Some(BufWriter::new(
            File::create(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?,
        )),
        None => None,
    };
    let rows = bench::run(family, &sizes, a.seed);
    match file.as_mut() {
        Some(f) => {
            bench::write_csv(&mut *f, &rows)?;
            f.flush()?;
        }
        None => bench::write_csv(out, &rows)?,
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn glp(args: &[&str]) -> (u8, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("glp").chain(args.iter().copied()))
            .expect("valid arguments");
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let status = run(cli.command, &mut out, &mut err);
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn decide_contract() {
        assert_eq!(
            glp(&["decide", "~<0>~T"]),
            (0, "PROVABLE\n".into(), String::new())
        );
        let (status, out, _) = glp(&["decide", "<0>T -> <0><0>T", "--witness"]);
        assert_eq!((status, out.as_str()), (1, "NOT PROVABLE\nwitness: (1)\n"));
        let (status, out, err) = glp(&["decide", "<0>T &"]);
        assert_eq!((status, out.as_str()), (2, ""));
        assert!(err.starts_with("error: "));
    }

    #[test]
    fn decide_warns_on_high_indices() {
        let (status, _, err) = glp(&["decide", "<13>T"]);
        assert_eq!(status, 1);
        assert!(err.starts_with("warning: modality index 13"));
        assert_eq!(glp(&["decide", "<12>T"]).2, "");
    }

    #[test]
    fn decide_stats_line() {
        let (_, out, _) = glp(&["decide", "T", "--stats"]);
        assert!(
            out.starts_with("PROVABLE\nn=0 max_w=1 max_oc=1 millis="),
            "{out}"
        );
    }

    #[test]
    fn reduce_contract() {
        let (status, out, _) = glp(&["reduce-qbf", "A0 : x0", "--decide"]);
        assert_eq!(status, 0);
        assert!(out.ends_with("\nQBF=false DECIDE=not-provable MATCH\n"));
        assert_eq!(glp(&["reduce-qbf", "E0 A1 : x9"]).0, 2);
    }

    #[test]
    fn selftest_contract() {
        assert_eq!(
            glp(&["selftest", "--suite=fact1"]),
            (0, "fact1: 364/364 rejected\n".into(), String::new())
        );
        assert_eq!(glp(&["selftest", "--suite=bogus"]).0, 2);
    }

    #[test]
    fn bench_contract() {
        let (status, out, _) = glp(&["bench", "--family=words", "--sizes=100,200,400"]);
        assert_eq!(status, 0);
        assert_eq!(out.lines().count(), 4);
        assert!(out.starts_with("family,size,n_modal,millis,max_w,max_oc\nwords,100,1,"));
        assert_eq!(glp(&["bench", "--csv=/nonexistent/dir/out.csv"]).0, 2);
        assert_eq!(glp(&["bench", "--family=nope"]).0, 2);
    }
}
