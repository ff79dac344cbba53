//! The `vk` command line.
//!
//! Exit status 0 means success, 1 means a verification failure and 2 means
//! a usage, parse or precondition error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use super::{parse_expr, parse_signature, print_signature};
use crate::error::{KernelError, Result};
use crate::report::VerifyReport;
use crate::suites::{run_suite, Suite, SuiteOptions, DEFAULT_DEPTH};
use crate::universe::{el, enumerate_codes, CodeBudget, PredicateSpec, Universe, VSignature};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "vk", version, about = "Decide equality of codes in a partially univalent universe of finite sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a signature file and print its canonical form.
    Check { sig: PathBuf },
    /// Print the size of a code's decoding.
    El {
        sig: PathBuf,
        #[arg(short = 'e', long = "expr")]
        expr: String,
    },
    /// Decide whether two codes are equal.
    Eq {
        sig: PathBuf,
        #[arg(short = 'e', long = "expr")]
        left: String,
        #[arg(short = 'f', long = "with")]
        right: String,
        #[arg(long, default_value = "isprop")]
        pred: PredicateSpec,
        /// Also print every path and its equality witness.
        #[arg(long)]
        witnesses: bool,
    },
    /// List every code within a node and decoding budget.
    Enumerate {
        sig: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_nodes: usize,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Run verification suites.
    Verify {
        sig: PathBuf,
        #[arg(long, default_value = "isprop")]
        pred: PredicateSpec,
        #[arg(long, value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Run the truncation suite even when the predicate does not imply
        /// propositionality.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = 5)]
        max_nodes: usize,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
}

fn load(path: &Path) -> Result<VSignature> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| KernelError::precondition(format!("cannot read {}: {e}", path.display())))?;
    parse_signature(&text)
}

fn print_reports(out: &mut dyn Write, reports: &[VerifyReport], json: bool) -> std::io::Result<()> {
    if json {
        let text = if let [one] = reports {
            serde_json::to_string_pretty(one)
        } else {
            serde_json::to_string_pretty(reports)
        };
        return writeln!(out, "{}", text.expect("reports serialize"));
    }
    for r in reports {
        writeln!(out, "{}", r.summary())?;
        for f in &r.failures {
            writeln!(out, "  failure: {} expected {} got {}", f.inputs, f.expected, f.got)?;
        }
        let hidden = r.failure_count.saturating_sub(r.failures.len() as u64);
        if hidden > 0 {
            writeln!(out, "  ... {hidden} more failures")?;
        }
        for n in &r.notes {
            writeln!(out, "  note: {n}")?;
        }
    }
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| KernelError::precondition(format!("cannot write output: {e}"));
    match cmd {
        Command::Check { sig } => {
            let s = load(&sig)?;
            write!(out, "{}", print_signature(&s)).map_err(io)?;
        }
        Command::El { sig, expr } => {
            let s = load(&sig)?;
            let c = parse_expr(&expr, &s)?;
            writeln!(out, "{}", el(&s, &c)?.size()).map_err(io)?;
        }
        Command::Eq { sig, left, right, pred, witnesses } => {
            let s = load(&sig)?;
            let (c0, c1) = (parse_expr(&left, &s)?, parse_expr(&right, &s)?);
            let mut u = Universe::new(&s, pred);
            if witnesses {
                let all = u.eqv_total(&c0, &c1)?;
                writeln!(out, "{}", if all.is_empty() { "unequal" } else { "equal" }).map_err(io)?;
                for (p, w) in all {
                    writeln!(out, "  {p}: {w}").map_err(io)?;
                }
            } else {
                let eq = u.is_equal(&c0, &c1)?;
                writeln!(out, "{}", if eq { "equal" } else { "unequal" }).map_err(io)?;
            }
        }
        Command::Enumerate { sig, max_nodes, max_size } => {
            let s = load(&sig)?;
            let codes = enumerate_codes(&s, max_nodes, max_size)?;
            for c in &codes {
                writeln!(out, "{c} ; {}", el(&s, c)?.size()).map_err(io)?;
            }
            writeln!(out, "; {} codes", codes.len()).map_err(io)?;
        }
        Command::Verify { sig, pred, suite, depth, seed, json, force, max_nodes, max_size } => {
            let s = load(&sig)?;
            let opts = SuiteOptions {
                pred,
                seed,
                depth,
                budget: CodeBudget { max_nodes, max_el: max_size },
                force,
            };
            let reports = run_suite(&s, suite.parse()?, &opts)?;
            print_reports(out, &reports, json).map_err(io)?;
            if reports.iter().any(|r| !r.passed) {
                return Ok(EXIT_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs the command line with explicit arguments and output streams and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the `vk` binary.
pub fn main() -> i32 {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vk(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["vk"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn sig_file() -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "(signature (nullary bool 2) (nullary tri 3) (formers unit empty sum sigma pi id po0))").unwrap();
        f
    }

    #[test]
    fn eq_prints_a_verdict() {
        let f = sig_file();
        let p = f.path().to_str().unwrap();
        let (code, out, _) = vk(&["eq", p, "-e", "(unit)", "-f", "(empty)", "--pred", "isprop"]);
        assert_eq!((code, out.as_str()), (0, "unequal\n"));
        let (code, out, _) = vk(&["eq", p, "-e", "(n bool)", "-f", "(n bool)", "--pred", "size=2", "--witnesses"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3, "{out}");
    }

    #[test]
    fn exit_codes() {
        let f = sig_file();
        let p = f.path().to_str().unwrap();
        assert_eq!(vk(&["verify", p, "--pred", "size=2", "--suite", "truncation"]).0, 2);
        assert_eq!(vk(&["verify", p, "--suite", "nonsense"]).0, 2);
        assert_eq!(vk(&["el", p, "-e", "(id (n bool) 0 2)"]).0, 2);
        assert_eq!(vk(&["el", "/nonexistent/sig.vk", "-e", "(unit)"]).0, 2);
        assert_eq!(vk(&["verify", p, "--pred", "size=2", "--suite", "truncation", "--force", "--max-nodes", "2"]).0, 1);
        let (code, out, _) = vk(&["el", p, "-e", "(po0 (unit) (n bool) (n bool) (0) (0))"]);
        assert_eq!((code, out.as_str()), (0, "3\n"));
    }

    #[test]
    fn enumerate_lists_parseable_codes() {
        let f = sig_file();
        let p = f.path().to_str().unwrap();
        let (code, out, _) = vk(&["enumerate", p, "--max-nodes", "1", "--max-size", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "(n bool) ; 2\n(n tri) ; 3\n(unit) ; 1\n(empty) ; 0\n; 4 codes\n");
    }
}
