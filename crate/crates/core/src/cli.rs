//! Command-line front end.
//!
//! [`run`] takes the argument list and standard input and returns the exit
//! code and the complete output, so the binary is a thin wrapper and every
//! subcommand can be tested in-process. Exit codes: 0 success, 1 a
//! verification found a counterexample, 2 usage or parse error.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith;
use crate::diagram::{parse_diagram, RenderFormat};
use crate::groups::{self, cycle_type, Claim, Mode, Oracle, VerificationReport, VerifyOptions};
use crate::hyperoct::SignedPermutation;
use crate::perm::Permutation;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sbrauer", version, about = "Signed Brauer diagrams and signed permutations in S_2n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderChoice {
    Ascii,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleChoice {
    Enumeration,
    Bsgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply two signed permutations given in window notation
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the image of a signed permutation in S_2n
    Embed {
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Canonical cycles of a permutation, or its preimage with --invert
    Decompose {
        cycles: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        invert: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List the group (or its even-sign subgroup) in enumeration order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        even: bool,
        #[arg(long, default_value_t = groups::DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check claims about the embedding and the even-sign subgroup
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        claim: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OracleChoice::Enumeration)]
        oracle: OracleChoice,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Largest n checked exhaustively; above it elements are sampled
        #[arg(long, default_value_t = groups::DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
        #[arg(long, default_value_t = groups::DEFAULT_SAMPLES)]
        samples: u64,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check the 2-adic valuation and divisibility statements up to a limit
    Valuation {
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value_t = arith::DEFAULT_EXACT_LIMIT)]
        exact_limit: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Render a diagram read from standard input
    Render {
        #[arg(long, value_enum, default_value_t = RenderChoice::Ascii)]
        format: RenderChoice,
    },
}

/// Runs one command. Returns the exit code and everything written to
/// standard output (or the error message, for non-zero usage exits).
pub fn run<I, T>(args: I, input: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    match execute(cli.command, input) {
        Ok(result) => result,
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn lines(text: &[String]) -> String {
    let mut out = text.join("\n");
    out.push('\n');
    out
}

fn emit(format: Format, text: Vec<String>, value: Value) -> (i32, String) {
    match format {
        Format::Text => (EXIT_OK, lines(&text)),
        Format::Json => (EXIT_OK, format!("{value}\n")),
    }
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "claim": r.claim,
        "n": r.n,
        "checked": r.checked,
        "failures": r.failures(),
        "mode": match r.mode { Mode::Exhaustive => "exhaustive", Mode::Sampled => "sampled" },
        "duration_ms": r.duration.as_secs_f64() * 1e3,
        "notes": r.notes,
        "counterexamples": r.counterexamples.iter().map(|c| json!({
            "element": c.element.as_ref().map(ToString::to_string),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn emit_reports(format: Format, reports: &[VerificationReport]) -> (i32, String) {
    let code = if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    let out = match format {
        Format::Text => reports.iter().map(ToString::to_string).collect(),
        Format::Json => {
            let values: Vec<Value> = reports.iter().map(report_json).collect();
            format!("{}\n", Value::Array(values))
        }
    };
    (code, out)
}

fn execute(command: Command, input: &mut dyn Read) -> Result<(i32, String), Error> {
    match command {
        Command::Mul { a, b, out } => {
            let a = SignedPermutation::parse_window(&a)?;
            let b = SignedPermutation::parse_window(&b)?;
            let product = a.mul(&b)?;
            let image = product.embed();
            Ok(emit(
                out.format,
                vec![product.to_string(), image.to_string()],
                json!({ "product": product.to_string(), "embedding": image.to_string() }),
            ))
        }
        Command::Embed { element, out } => {
            let s = SignedPermutation::parse_window(&element)?;
            let image = s.embed();
            Ok(emit(
                out.format,
                vec![image.to_string()],
                json!({ "element": s.to_string(), "embedding": image.to_string() }),
            ))
        }
        Command::Decompose {
            cycles,
            degree,
            invert,
            out,
        } => {
            let p = Permutation::parse_cycles(&cycles, degree)?;
            if invert {
                let s = SignedPermutation::from_embedded(&p)?;
                Ok(emit(
                    out.format,
                    vec![s.to_string()],
                    json!({ "permutation": p.to_string(), "element": s.to_string() }),
                ))
            } else {
                let t = cycle_type(&p);
                Ok(emit(
                    out.format,
                    vec![p.to_string(), format!("type={t} parity={}", p.parity())],
                    json!({
                        "cycles": p.to_string(),
                        "cycle_type": t.parts(),
                        "parity": p.parity().to_string(),
                    }),
                ))
            }
        }
        Command::Enumerate { n, even, cap, out } => {
            let stream = if even {
                groups::enumerate_even_with_cap(n, cap)?
            } else {
                groups::enumerate_signed_with_cap(n, cap)?
            };
            let elements: Vec<String> = stream.map(|s| s.to_string()).collect();
            let value = json!(elements);
            Ok(emit(out.format, elements, value))
        }
        Command::Verify {
            claim,
            all,
            n,
            oracle,
            jobs,
            cap,
            samples,
            seed,
            out,
        } => {
            let opts = VerifyOptions {
                cap,
                jobs: jobs.max(1),
                samples,
                seed,
                oracle: match oracle {
                    OracleChoice::Enumeration => Oracle::Enumeration,
                    OracleChoice::Bsgs => Oracle::Bsgs,
                },
            };
            let reports = if all {
                groups::verify_all(n, &opts)?
            } else {
                let claim: Claim = claim.expect("clap enforces --claim or --all").parse()?;
                vec![groups::verify(claim, n, &opts)?]
            };
            Ok(emit_reports(out.format, &reports))
        }
        Command::Valuation {
            limit,
            exact_limit,
            out,
        } => {
            let corollary = arith::verify_corollary(limit, exact_limit)?;
            let divisibility = arith::verify_divisibility(limit, exact_limit)?;
            let failed = !(corollary.passed() && divisibility.passed());
            let code = if failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK };
            let text = match out.format {
                Format::Text => {
                    let mut text = String::new();
                    for r in [&corollary, &divisibility] {
                        for c in &r.counterexamples {
                            text.push_str(&format!("n={} {}\n", c.rank.unwrap_or_default(), c.detail));
                        }
                    }
                    for (name, r) in [("valuation", &corollary), ("divisibility", &divisibility)] {
                        text.push_str(&format!(
                            "{name} limit={limit} exact_limit={exact_limit} checked={} failures={}\n",
                            r.checked,
                            r.failures()
                        ));
                    }
                    text
                }
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "limit": limit,
                        "exact_limit": exact_limit,
                        "valuation": report_json(&corollary),
                        "divisibility": report_json(&divisibility),
                    })
                ),
            };
            Ok((code, text))
        }
        Command::Render { format } => {
            let mut text = String::new();
            input
                .read_to_string(&mut text)
                .map_err(|e| Error::parse("diagram", "<stdin>", e.to_string()))?;
            let d = parse_diagram(&text)?;
            let out = match format {
                RenderChoice::Ascii => d.render(RenderFormat::Ascii),
                RenderChoice::Dot => d.render(RenderFormat::Dot),
                RenderChoice::Json => format!(
                    "{}\n",
                    json!({
                        "n": d.n(),
                        "vertical": d.is_vertical(),
                        "edges": d.edges().map(|e| json!([e.a, e.b, e.sign.to_string()])).collect::<Vec<_>>(),
                        "line": d.serialize(),
                    })
                ),
            };
            Ok((EXIT_OK, out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let argv = std::iter::once("sbrauer").chain(args.iter().copied());
        run(argv, &mut std::io::empty())
    }

    #[test]
    fn embed_golden() {
        assert_eq!(call(&["embed", "+2 +1"]), (0, "(1 2)(3 4)\n".into()));
    }

    #[test]
    fn mul_golden() {
        assert_eq!(call(&["mul", "+2 +1", "-1 +2"]), (0, "+2 -1\n(1 2 3 4)\n".into()));
    }

    #[test]
    fn parse_errors_exit_2_with_token() {
        let (code, out) = call(&["embed", "+1 x"]);
        assert_eq!(code, 2);
        assert!(out.contains("`x`"), "{out}");
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn verify_summary() {
        let (code, out) = call(&["verify", "--claim", "thm_3_1", "--n", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "claim=thm_3_1 n=4 checked=384 failures=0\n");
        assert_eq!(call(&["verify", "--claim", "nope", "--n", "4"]).0, 2);
        assert_eq!(call(&["verify", "--n", "4"]).0, 2);
    }
}
