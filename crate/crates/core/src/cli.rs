//! Command-line front end. Exit status: 0 on success, 1 when a
//! verification fails, 2 on usage or input errors.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::scattered::{cut_types, cuts::ordinal_cut_types, end_data, gap_profile, spectrum};
use crate::seq::flatten::flatten_check;
use crate::seq::{label, tail_equiv, tail_equiv2, EvPeriodicSeq};
use crate::term::{iso_check, normalize, parse, OrderTerm};
use crate::verify::{verify_all, Config};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "lexorder",
    version,
    about = "Order types under the lexicographic product"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an expression and print it back.
    Parse { expr: String },
    /// Print the normal form of an expression.
    Normalize { expr: String },
    /// Decide isomorphism where a complete criterion applies.
    Iso { left: String, right: String },
    /// Spectrum of an RJ4 order such as `L(0)`.
    Spectrum {
        expr: String,
        #[arg(long, default_value_t = 20)]
        len: usize,
    },
    /// Cut classes realized in an ordinal, RJ4 order, or Z-sum.
    Cuts { expr: String },
    /// Tail equivalence of two `seq{pre=[..]; per=[..]}` literals.
    TailEquiv {
        left: String,
        right: String,
        /// Require prefixes of equal parity.
        #[arg(long)]
        mod2: bool,
    },
    /// Even/odd/full label of a sequence.
    Label { seq: String },
    /// Seeded flattening-map and density check.
    FlattenDemo {
        /// Symbols are drawn from `±1..=alphabet`.
        #[arg(long, default_value_t = 5)]
        alphabet: i64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every check group.
    Verify {
        /// Index range for the L-family product law.
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        range: Option<Vec<i64>>,
        /// Index range for pairwise non-isomorphism.
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        pairs: Option<Vec<i64>>,
        /// Seed for the sampled groups.
        #[arg(long)]
        seed: Option<u64>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

/// Replaces `@path` arguments by the trimmed contents of the file.
fn substitute_files(args: Vec<String>) -> std::io::Result<Vec<String>> {
    args.into_iter()
        .enumerate()
        .map(|(i, a)| match a.strip_prefix('@') {
            Some(path) if i > 0 => Ok(std::fs::read_to_string(path)?.trim().to_string()),
            _ => Ok(a),
        })
        .collect()
}

fn term(src: &str) -> Result<OrderTerm> {
    parse(src)
}

fn seq(src: &str) -> Result<EvPeriodicSeq> {
    src.parse()
}

fn fmt_list(xs: &[i64]) -> String {
    let body: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("({}, ...)", body.join(", "))
}

fn pair(v: Option<Vec<i64>>) -> Option<(i64, i64)> {
    v.map(|v| (v[0], v[1]))
}

/// Runs one command line, writing to `out` and `err`; returns the exit
/// status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = match substitute_files(argv.into_iter().map(Into::into).collect()) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read argument file: {e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    // arithmetic on inputs too large for u64 coefficients panics
    match panic::catch_unwind(AssertUnwindSafe(|| execute(cli.command, out))) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal error".into());
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Config(format!("output error: {e}"));
    match cmd {
        Command::Parse { expr } => {
            writeln!(out, "{}", term(&expr)?).map_err(io)?;
        }
        Command::Normalize { expr } => {
            writeln!(out, "{}", normalize(&term(&expr)?)).map_err(io)?;
        }
        Command::Iso { left, right } => {
            writeln!(out, "{}", iso_check(&term(&left)?, &term(&right)?)).map_err(io)?;
        }
        Command::Spectrum { expr, len } => match normalize(&term(&expr)?) {
            OrderTerm::Rj4(r) => {
                let s = spectrum(&r);
                writeln!(out, "{}", fmt_list(&s.prefix(len))).map_err(io)?;
                writeln!(out, "runs: {}", s.runs()).map_err(io)?;
            }
            other => {
                return Err(Error::Precondition(format!("{other} is not an RJ4 order")));
            }
        },
        Command::Cuts { expr } => {
            let t = normalize(&term(&expr)?);
            let line = match &t {
                OrderTerm::Rj4(r) => {
                    let e = end_data(r);
                    let types: Vec<String> = cut_types(r).iter().map(ToString::to_string).collect();
                    format!(
                        "cuts: {}\ncoinitiality: {}\ncofinality: {}",
                        types.join(" "),
                        e.coinitiality,
                        e.cofinality
                    )
                }
                OrderTerm::ZSum(z) => {
                    let p = gap_profile(z);
                    let interior: Vec<String> =
                        p.interior.iter().map(ToString::to_string).collect();
                    format!(
                        "interior: {}\nblock boundaries: {}\ngaps only at block boundaries: {}",
                        interior.join(" "),
                        p.boundary,
                        p.gaps_only_at_boundaries
                    )
                }
                OrderTerm::Ord(o) if !o.is_zero() => ordinal_cuts(o),
                other => {
                    return Err(Error::Precondition(format!(
                        "cut classes are computed for ordinals, RJ4 orders and Z-sums, not {other}"
                    )))
                }
            };
            writeln!(out, "{line}").map_err(io)?;
        }
        Command::TailEquiv { left, right, mod2 } => {
            let (u, v) = (seq(&left)?, seq(&right)?);
            let r = if mod2 {
                tail_equiv2(&u, &v)
            } else {
                tail_equiv(&u, &v)
            };
            writeln!(out, "{r}").map_err(io)?;
        }
        Command::Label { seq: s } => {
            writeln!(out, "{}", label(&seq(&s)?)).map_err(io)?;
        }
        Command::FlattenDemo {
            alphabet,
            samples,
            seed,
        } => {
            let r = flatten_check(alphabet, samples, seed)?;
            let summary = serde_json::json!({
                "checked": r.checked,
                "violations": r.violations,
                "first_witness": r.first_witness,
            });
            writeln!(out, "{summary}").map_err(io)?;
            return Ok(if r.passed() { EXIT_OK } else { EXIT_FAIL });
        }
        Command::Verify {
            range,
            pairs,
            seed,
            json,
        } => {
            let d = Config::default();
            let cfg = Config {
                range_i: pair(range).unwrap_or(d.range_i),
                pair_range: pair(pairs).unwrap_or(d.pair_range),
                seed: seed.unwrap_or(d.seed),
                ..d
            };
            let report = verify_all(&cfg)?;
            if json {
                writeln!(out, "{}", report.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{report}").map_err(io)?;
            }
            return Ok(if report.passed { EXIT_OK } else { EXIT_FAIL });
        }
    }
    Ok(EXIT_OK)
}

fn ordinal_cuts(o: &Ordinal) -> String {
    let types: Vec<String> = ordinal_cut_types(o)
        .iter()
        .map(ToString::to_string)
        .collect();
    format!(
        "cuts: {}\ncofinality: {:?}",
        types.join(" "),
        o.cofinality()
    )
    .to_lowercase()
}
