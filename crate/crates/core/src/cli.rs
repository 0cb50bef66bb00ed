//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on malformed input, 2 when the input is well
//! formed but violates a precondition (or an internal cross-check fails).

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gkdim::gk_dimension;
use crate::hecke::{HeckeOracle, DEFAULT_RANK_BOUND};
use crate::hermitian::{
    gk_pq, gkdim_series, series_zero_threshold, unitary_gkdim, unitary_interval,
};
use crate::perm::a_value_of_permutation;
use crate::rational::{parse_rational, to_string, Rational};
use crate::weight::{PqContext, Weight};

const WEIGHT_HELP: &str = "Weight in λ+ρ coordinates, comma separated (integers, a/b or decimals)";

#[derive(Debug, Parser)]
#[command(
    name = "gkdim",
    version,
    about = "GK dimensions of simple highest weight modules of sl(n) and su(p,q)",
    long_about = "GK dimensions of simple highest weight modules of sl(n) and su(p,q).\n\n\
                  Every weight is entered in λ+ρ coordinates: \"3,3.5,2\" means λ+ρ = (3, 7/2, 2)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Pretty,
}

#[derive(Debug, Args)]
struct WeightArgs {
    #[arg(long, help = WEIGHT_HELP, allow_hyphen_values = true, required_unless_present = "batch")]
    weight: Option<String>,

    /// Read one weight (λ+ρ coordinates) per line from standard input and
    /// print one JSON object per line.
    #[arg(long, conflicts_with = "weight")]
    batch: bool,

    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// GK dimension, a-value and tableaux of L(λ) for sl(n).
    Gkdim {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Second column, ball signature, GK dimension and associated variety
    /// of L(λ) for a (p,q)-dominant weight.
    Hermitian {
        #[command(flatten)]
        weight: WeightArgs,
        /// Signature p,q with p + q = n.
        #[arg(long)]
        pq: String,
    },
    /// GKdim L(λ̃ + zζ) for each integer z in a range.
    Series {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        pq: String,
        /// Inclusive integer range "from,to".
        #[arg(long, allow_hyphen_values = true)]
        z_range: String,
    },
    /// Unitary interval of λ̃ and GKdim L(λ̃ + zζ) at a unitary point z.
    Unitary {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        pq: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Compare the Hecke algebra a-function with the tableau statistic on
    /// all of S_1, …, S_rank.
    VerifyOracle {
        #[arg(long, default_value_t = 4)]
        rank: usize,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
}

/// Runs one command on the text of a weight.
type Task = Box<dyn Fn(&str) -> Result<Rendered>>;

/// A rendered result: the JSON value plus its pretty form.
struct Rendered {
    json: Value,
    pretty: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 1,
        _ => 2,
    }
}

fn error_json(e: &Error) -> Value {
    json!({
        "error": e.kind(),
        "message": e.to_string(),
        "indices": e.indices(),
    })
}

fn write_line(out: &mut dyn Write, text: &str) {
    // Output failures (e.g. a closed pipe) are not recoverable here.
    let _ = writeln!(out, "{text}");
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };

    let (weight_args, task): (&WeightArgs, Task) = match &cli.command {
        Command::VerifyOracle { rank, output } => {
            return finish(verify_oracle(*rank), *output, out, err);
        }
        Command::Gkdim { weight } => (weight, Box::new(gkdim_command)),
        Command::Hermitian { weight, pq } => {
            let pq = pq.clone();
            (weight, Box::new(move |w| hermitian_command(w, &pq)))
        }
        Command::Series {
            weight,
            pq,
            z_range,
        } => {
            let (pq, z_range) = (pq.clone(), z_range.clone());
            (weight, Box::new(move |w| series_command(w, &pq, &z_range)))
        }
        Command::Unitary { weight, pq, z } => {
            let (pq, z) = (pq.clone(), z.clone());
            (weight, Box::new(move |w| unitary_command(w, &pq, &z)))
        }
    };

    if !weight_args.batch {
        let text = weight_args.weight.as_deref().unwrap_or_default();
        return finish(task(text), weight_args.output, out, err);
    }

    let mut status = 0;
    for line in stdin.lines() {
        let line = match line {
            Ok(line) => line,
            Err(e) => {
                write_line(err, &format!("error reading standard input: {e}"));
                return 1;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        match task(&line) {
            Ok(r) => write_line(out, &r.json.to_string()),
            Err(e) => {
                write_line(out, &error_json(&e).to_string());
                if status == 0 {
                    status = exit_code(&e);
                }
            }
        }
    }
    status
}

fn finish(
    result: Result<Rendered>,
    output: Output,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match result {
        Ok(r) => {
            match output {
                Output::Json => write_line(out, &serde_json::to_string_pretty(&r.json).unwrap()),
                Output::Pretty => write_line(out, r.pretty.trim_end()),
            }
            r.json
                .get("ok")
                .and_then(Value::as_bool)
                .map_or(0, |ok| if ok { 0 } else { 2 })
        }
        Err(e) => {
            match output {
                Output::Json => {
                    write_line(out, &serde_json::to_string_pretty(&error_json(&e)).unwrap())
                }
                Output::Pretty => write_line(err, &format!("error: {e}")),
            }
            exit_code(&e)
        }
    }
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize to JSON")
}

/// `key: value` lines for every scalar or list field of a JSON object.
fn pretty_fields(json: &Value, keys: &[&str]) -> String {
    let mut s = String::new();
    for key in keys {
        let value = match &json[*key] {
            Value::String(x) => x.clone(),
            Value::Array(items) => items
                .iter()
                .map(|v| v.as_str().map_or_else(|| v.to_string(), str::to_string))
                .collect::<Vec<_>>()
                .join(","),
            other => other.to_string(),
        };
        s.push_str(&format!("{key}: {value}\n"));
    }
    s
}

fn gkdim_command(text: &str) -> Result<Rendered> {
    let w = Weight::parse(text)?;
    let report = gk_dimension(&w);
    let json = to_value(report.to_json());
    let mut pretty = pretty_fields(&json, &["n", "nu0", "a_value", "gk_dimension", "integral"]);
    for (class, tableau) in report
        .decomposition
        .classes
        .iter()
        .zip(&report.tableaux.tableaux)
    {
        let indices: Vec<String> = class.indices.iter().map(ToString::to_string).collect();
        pretty.push_str(&format!("class {}:\n", indices.join(",")));
        for row in tableau.rows() {
            let row: Vec<String> = row.iter().map(to_string).collect();
            pretty.push_str(&format!("  {}\n", row.join(" ")));
        }
    }
    Ok(Rendered { json, pretty })
}

fn weight_and_context(text: &str, pq: &str) -> Result<(Weight, PqContext)> {
    let w = Weight::parse(text)?;
    let ctx = PqContext::parse(pq)?;
    ctx.check(&w)?;
    Ok((w, ctx))
}

const HERMITIAN_KEYS: [&str; 9] = [
    "p",
    "q",
    "integral",
    "m",
    "second_column",
    "xi",
    "gk_dimension",
    "orbit_index",
    "orbit_dimension",
];

fn hermitian_command(text: &str, pq: &str) -> Result<Rendered> {
    let (w, ctx) = weight_and_context(text, pq)?;
    let json = to_value(gk_pq(&w, ctx)?.to_json());
    let pretty = pretty_fields(&json, &HERMITIAN_KEYS);
    Ok(Rendered { json, pretty })
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let parse = |s: &str| {
        s.parse::<i64>()
            .map_err(|_| Error::Parse(format!("invalid integer {s:?} in z range")))
    };
    match parts[..] {
        [from, to] => Ok((parse(from)?, parse(to)?)),
        _ => Err(Error::Parse(format!("expected \"from,to\", got {text:?}"))),
    }
}

fn series_command(text: &str, pq: &str, z_range: &str) -> Result<Rendered> {
    let (w, ctx) = weight_and_context(text, pq)?;
    let (from, to) = parse_range(z_range)?;
    let series = gkdim_series(&w, ctx, from, to)?;
    let threshold = series_zero_threshold(&w, ctx)?;
    let json = json!({
        "p": ctx.p(),
        "q": ctx.q(),
        "zero_beyond": threshold,
        "series": to_value(&series),
    });
    let mut pretty = pretty_fields(&json, &["p", "q", "zero_beyond"]);
    for point in &series {
        pretty.push_str(&format!(
            "z = {}: gk_dimension = {}\n",
            point.z, point.gk_dimension
        ));
    }
    Ok(Rendered { json, pretty })
}

fn unitary_command(text: &str, pq: &str, z: &str) -> Result<Rendered> {
    let (w, ctx) = weight_and_context(text, pq)?;
    let z: Rational = parse_rational(z)?;
    let interval = unitary_interval(&w, ctx)?;
    let gk = unitary_gkdim(&w, ctx, &z)?;
    let json = json!({
        "p": ctx.p(),
        "q": ctx.q(),
        "z": to_string(&z),
        "p_prime": interval.p_prime,
        "q_prime": interval.q_prime,
        "threshold_real": to_string(&interval.threshold_real()),
        "threshold_int": interval.threshold_int(),
        "gk_dimension": gk,
    });
    let pretty = pretty_fields(
        &json,
        &[
            "p",
            "q",
            "z",
            "p_prime",
            "q_prime",
            "threshold_real",
            "threshold_int",
            "gk_dimension",
        ],
    );
    Ok(Rendered { json, pretty })
}

fn verify_oracle(rank: usize) -> Result<Rendered> {
    if rank > DEFAULT_RANK_BOUND {
        return Err(Error::RankBound {
            n: rank,
            bound: DEFAULT_RANK_BOUND,
        });
    }
    let oracle = HeckeOracle::default();
    let mut checked = 0;
    let mut discrepancies = Vec::new();
    for n in 1..=rank {
        for (sigma, hecke) in oracle.a_function_table(n)? {
            checked += 1;
            let tableau = a_value_of_permutation(&sigma);
            if hecke != tableau {
                discrepancies.push(json!({
                    "permutation": sigma.to_string(),
                    "hecke": hecke,
                    "tableau": tableau,
                }));
            }
        }
    }
    let ok = discrepancies.is_empty();
    let json = json!({
        "rank": rank,
        "checked": checked,
        "discrepancies": discrepancies,
        "ok": ok,
    });
    let mut pretty = pretty_fields(&json, &["rank", "checked", "ok"]);
    for d in &discrepancies {
        pretty.push_str(&format!(
            "discrepancy at {}: hecke {} vs tableau {}\n",
            d["permutation"].as_str().unwrap_or_default(),
            d["hecke"],
            d["tableau"]
        ));
    }
    Ok(Rendered { json, pretty })
}
