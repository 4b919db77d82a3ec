//! Command-line surface. Every subcommand builds a [`Report`], printed either
//! as JSON or as line-oriented `key = value` text flattened from the same
//! JSON value, so both formats carry identical numbers.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chain::{constraint_residual, generate_chain};
use crate::error::Error;
use crate::exact::{parse_integer, Integer};
use crate::oracle::{brute_force_search, errata_audit};
use crate::solutions::{enumerate_solutions, verify_integer_pair, Verification};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_A_SOLUTION: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "biquadrate",
    version,
    about = "Pairs whose sum is a square and whose sum of squares is a fourth power"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Seed and alternating jumps with an exact on-curve check per node
    Chain {
        #[arg(long, default_value_t = 4)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Certified integer solutions from the chain
    Solutions {
        #[arg(long, default_value_t = 4)]
        steps: usize,
        #[arg(long)]
        positive_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check that X+Y is a square and X²+Y² a fourth power
    Verify {
        #[arg(long, allow_negative_numbers = true, value_parser = integer_arg)]
        x: Integer,
        #[arg(long, allow_negative_numbers = true, value_parser = integer_arg)]
        y: Integer,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute the historically printed chain values
    Audit {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustive search for positive solutions with X²+Y² = b⁴, b ≤ max-b
    Brute {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        max_b: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn integer_arg(s: &str) -> Result<Integer, String> {
    parse_integer(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Value,
    pub status: Status,
    pub error_message: Option<String>,
}

impl Report {
    fn ok(command: &str, inputs: BTreeMap<String, String>, results: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            results,
            status: Status::Ok,
            error_message: None,
        }
    }

    fn failed(
        command: &str,
        inputs: BTreeMap<String, String>,
        results: Value,
        message: String,
    ) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            results,
            status: Status::Error,
            error_message: Some(message),
        }
    }

    pub fn render(&self, format: Format) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut lines = Vec::new();
                flatten("", &value, &mut lines);
                let mut s = lines.join("\n");
                s.push('\n');
                s
            }
        }
    }
}

/// Flattens a JSON value into `path = scalar` lines; object keys keep their
/// serialized order and array elements are addressed by index.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<String>) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            if map.is_empty() {
                out.push(format!("{prefix} = {{}}"));
            }
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push(format!("{prefix} = []"));
            }
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix} = {s}")),
        Value::Null => out.push(format!("{prefix} = null")),
        other => out.push(format!("{prefix} = {other}")),
    }
}

/// Result of one invocation: exit code plus what goes to each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    exit_code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };

    let (report, format, exit_code) = match cli.command {
        Command::Chain { steps, format } => finish(chain_report(steps), format),
        Command::Solutions {
            steps,
            positive_only,
            format,
        } => finish(solutions_report(steps, positive_only), format),
        Command::Verify { x, y, format } => {
            let report = verify_report(&x, &y);
            let code = if report.status == Status::Ok {
                EXIT_OK
            } else {
                EXIT_NOT_A_SOLUTION
            };
            (report, format, code)
        }
        Command::Audit { format } => (audit_report(), format, EXIT_OK),
        Command::Brute { max_b, format } => (brute_report(max_b), format, EXIT_OK),
    };

    Outcome {
        exit_code,
        stdout: report.render(format),
        stderr: report
            .error_message
            .as_ref()
            .map(|m| format!("error: {m}\n"))
            .unwrap_or_default(),
    }
}

fn finish(result: (Report, Option<Error>), format: Format) -> (Report, Format, i32) {
    let code = if result.1.is_some() {
        EXIT_USAGE
    } else {
        EXIT_OK
    };
    (result.0, format, code)
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn chain_report(steps: usize) -> (Report, Option<Error>) {
    let inputs = inputs([("steps", steps.to_string())]);
    match generate_chain(steps) {
        Ok(nodes) => {
            let results = nodes
                .iter()
                .map(|node| {
                    let residual = constraint_residual(&node.t, &node.u);
                    json!({
                        "index": node.index.to_string(),
                        "t": node.t,
                        "u": node.u,
                        "produced_by": node.produced_by,
                        "residual": residual,
                        "on_curve": residual.is_zero(),
                    })
                })
                .collect();
            (Report::ok("chain", inputs, Value::Array(results)), None)
        }
        Err(e) => (
            Report::failed("chain", inputs, Value::Null, e.to_string()),
            Some(e),
        ),
    }
}

fn solutions_report(steps: usize, positive_only: bool) -> (Report, Option<Error>) {
    let inputs = inputs([
        ("steps", steps.to_string()),
        ("positive_only", positive_only.to_string()),
    ]);
    match enumerate_solutions(steps, positive_only) {
        Ok(sols) => {
            let results = serde_json::to_value(sols).expect("solutions serialize");
            (Report::ok("solutions", inputs, results), None)
        }
        Err(e) => (
            Report::failed("solutions", inputs, Value::Null, e.to_string()),
            Some(e),
        ),
    }
}

fn verify_report(x: &Integer, y: &Integer) -> Report {
    let inputs = inputs([("X", x.to_string()), ("Y", y.to_string())]);
    let verification = verify_integer_pair(x, y);
    match &verification {
        Verification::Certified { a, b } => Report::ok(
            "verify",
            inputs,
            json!({
                "X": x.to_string(),
                "Y": y.to_string(),
                "a": a.to_string(),
                "b": b.to_string(),
                "certified": true,
            }),
        ),
        _ => {
            let reason = verification.failure_reason().expect("not certified");
            Report::failed(
                "verify",
                inputs,
                json!({
                    "X": x.to_string(),
                    "Y": y.to_string(),
                    "certified": false,
                    "reason": reason,
                }),
                reason,
            )
        }
    }
}

fn audit_report() -> Report {
    let findings = serde_json::to_value(errata_audit()).expect("findings serialize");
    Report::ok("audit", BTreeMap::new(), findings)
}

fn brute_report(max_b: u64) -> Report {
    let hits = serde_json::to_value(brute_force_search(max_b)).expect("hits serialize");
    Report::ok("brute", inputs([("max_b", max_b.to_string())]), hits)
}
