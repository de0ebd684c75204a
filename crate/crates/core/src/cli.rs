//! Command-line front end: identity verification, basis listings,
//! decompositions, tables and oracle runs, as text or versioned JSON.

use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::{self, VerifyReport};
use crate::error::{Error, Result};
use crate::ncopies::gr_table;
use crate::partition::Partition;
use crate::sip::{
    basis_table, decompose, enumerate_basis, max_basis_largest, recompose, SipClassSpec,
};

pub const SCHEMA: &str = "sipq-report/1";

const GRAMMAR: &str = "\
Input grammar:
  --spec       k=K,c=C1:...:CK,d=D1:...:DK, e.g. k=2,c=1:2,d=2:3, or a preset name
               (natural, distinct, rogers-ramanujan, gollnitz-gordon, schur, glasgow)
  --partition  comma-separated positive integers, e.g. 2,7
  n-copies     parts are value:subscript pairs with an optional trailing ' for an
               overline, e.g. 3:1,1:1'

Exit status: 0 all checks passed, 1 a check failed, 2 usage error, 3 unknown identity.";

#[derive(Debug, Parser)]
#[command(name = "sipq", version, about = "Verify q-series identities and explore separable partition classes", after_help = GRAMMAR)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub output: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare the sum and product sides of one identity.
    Verify {
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
        trunc: u64,
    },
    /// Verify every registered identity.
    VerifyAll {
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
        trunc: u64,
    },
    /// List the basis elements with a given number of parts.
    Basis {
        #[arg(long)]
        spec: SpecArg,
        #[arg(long)]
        n: usize,
    },
    /// Split a class member into basis element and padding.
    Decompose {
        #[arg(long)]
        spec: SpecArg,
        #[arg(long)]
        partition: PartitionArg,
    },
    /// Dump a recurrence table.
    Table(TableArgs),
    /// Compare enumeration oracles against both sides of an identity.
    Oracle {
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 20)]
        total_max: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TableSource {
    /// Basis table `b(n, h)` of a class.
    #[arg(long)]
    pub spec: Option<SpecArg>,
    /// Table `g_r(n, m, j)` of exact weighted-difference chains.
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<i64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub source: TableSource,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Largest part (or largest value for `--r`).
    #[arg(long, default_value_t = 12)]
    pub max_h: u64,
}

/// A class given inline or by preset name.
#[derive(Clone, Debug)]
pub struct SpecArg(pub SipClassSpec);

impl FromStr for SpecArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s).map(SpecArg)
    }
}

#[derive(Clone, Debug)]
pub struct PartitionArg(pub Partition);

impl FromStr for PartitionArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("part `{x}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
            .map(PartitionArg)
            .ok_or_else(|| Error::Parse(format!("`{s}` has a zero part")))
    }
}

/// Parses `k=K,c=...,d=...` (lists separated by `:`) or a preset name.
pub fn parse_spec(s: &str) -> Result<SipClassSpec> {
    if let Some((_, spec)) = SipClassSpec::named_presets()
        .into_iter()
        .find(|(name, _)| *name == s)
    {
        return Ok(spec);
    }
    let (mut k, mut c, mut d) = (None, None, None);
    let list = |v: &str| -> Result<Vec<u64>> {
        v.split(':')
            .map(|x| {
                x.parse::<u64>()
                    .map_err(|e| Error::Parse(format!("`{x}` in `{v}`: {e}")))
            })
            .collect()
    };
    for field in s.split(',') {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{field}`")))?;
        match key.trim() {
            "k" => {
                k = Some(
                    value
                        .parse::<u64>()
                        .map_err(|e| Error::Parse(format!("k: {e}")))?,
                )
            }
            "c" => c = Some(list(value)?),
            "d" => d = Some(list(value)?),
            other => return Err(Error::Parse(format!("unknown key `{other}`"))),
        }
    }
    match (k, c, d) {
        (Some(k), Some(c), Some(d)) => SipClassSpec::new(k, c, d),
        _ => Err(Error::Parse(format!("`{s}` needs k, c and d"))),
    }
}

/// The machine-readable outcome of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub results: Vec<VerifyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            results: Vec::new(),
            payload: None,
        }
    }

    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN_IDENTITY: i32 = 3;

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::UnknownIdentity(_) => EXIT_UNKNOWN_IDENTITY,
        Error::NotInClass(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

/// Executes `cli`, writing the report to `out` and errors to `err`, and
/// returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(&cli.command) {
        Ok((report, text)) => {
            let written = match cli.output {
                OutputFormat::Text => out.write_all(text.as_bytes()),
                OutputFormat::Json => serde_json::to_writer_pretty(&mut *out, &report)
                    .map_err(std::io::Error::from)
                    .and_then(|_| writeln!(out)),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "sipq: {e}");
                return EXIT_USAGE;
            }
            if report.pass() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "sipq: {e}");
            exit_code_for(&e)
        }
    }
}

fn verify_line(r: &VerifyReport) -> String {
    match r.first_mismatch {
        None => format!("PASS {} (trunc {})\n", r.id, r.trunc),
        Some(e) => format!(
            "FAIL {} (trunc {}): first mismatch at q^{e}\n",
            r.id, r.trunc
        ),
    }
}

fn execute(command: &Command) -> Result<(Report, String)> {
    match command {
        Command::Verify { identity, trunc } => {
            let r = catalog::verify(identity, *trunc as usize)?;
            let mut report = Report::new("verify");
            let text = verify_line(&r);
            report.results.push(r);
            Ok((report, text))
        }
        Command::VerifyAll { trunc } => {
            let mut report = Report::new("verify-all");
            let mut text = String::new();
            for entry in catalog::registry() {
                let r = catalog::verify_entry(&entry, *trunc as usize);
                text += &verify_line(&r);
                report.results.push(r);
            }
            Ok((report, text))
        }
        Command::Basis { spec, n } => {
            let spec = &spec.0;
            let elements: Vec<Vec<u64>> = if *n == 0 {
                vec![vec![]]
            } else {
                enumerate_basis(spec, *n, max_basis_largest(spec, *n))
                    .into_iter()
                    .map(|b| b.parts().to_vec())
                    .collect()
            };
            let text = elements
                .iter()
                .map(|b| {
                    format!(
                        "{}\n",
                        Partition::new(b.clone()).expect("basis parts are positive")
                    )
                })
                .collect();
            let mut report = Report::new("basis");
            report.payload = Some(json!({ "n": n, "count": elements.len(), "elements": elements }));
            Ok((report, text))
        }
        Command::Decompose { spec, partition } => {
            let d = decompose(&partition.0, &spec.0)?;
            let back = recompose(&d);
            let round_trip = back == partition.0;
            let mut report = Report::new("decompose");
            report.results.push(VerifyReport {
                id: "round-trip".into(),
                pass: round_trip,
                trunc: 0,
                first_mismatch: None,
            });
            report.payload = Some(json!({
                "partition": partition.0.parts(),
                "basis": d.basis().parts(),
                "padding": d.padding(),
                "round_trip": round_trip,
            }));
            let text = format!(
                "partition {}\nbasis     {:?}\npadding   {:?}\nround trip {}\n",
                partition.0,
                d.basis().parts(),
                d.padding(),
                if round_trip { "ok" } else { "FAILED" }
            );
            Ok((report, text))
        }
        Command::Table(args) => table(args),
        Command::Oracle {
            identity,
            total_max,
        } => {
            let r = catalog::oracle_concordance(identity, *total_max)?;
            let mut report = Report::new("oracle");
            let mut text = String::new();
            for c in &r.checks {
                let ok = c.lhs_mismatch.is_none() && c.rhs_mismatch.is_none();
                let first = [c.lhs_mismatch, c.rhs_mismatch].into_iter().flatten().min();
                text += &format!(
                    "{} {}: {} (total <= {})\n",
                    if ok { "PASS" } else { "FAIL" },
                    identity,
                    c.oracle,
                    total_max
                );
                report.results.push(VerifyReport {
                    id: format!("{identity}/{}", c.oracle),
                    pass: ok,
                    trunc: *total_max as usize,
                    first_mismatch: first,
                });
            }
            report.payload = Some(serde_json::to_value(&r).expect("plain data"));
            Ok((report, text))
        }
    }
}

fn table(args: &TableArgs) -> Result<(Report, String)> {
    let mut report = Report::new("table");
    let mut rows = Vec::new();
    let mut text = String::new();
    if let Some(spec) = &args.source.spec {
        let t = basis_table(&spec.0, args.max_n, args.max_h);
        for n in 1..=args.max_n {
            for h in 1..=args.max_h {
                let s = t.get(n, h);
                if !s.is_zero() {
                    let poly = polynomial_text(&s.to_string());
                    text += &format!("b({n},{h}) = {poly}\n");
                    rows.push(json!({ "n": n, "h": h, "series": poly }));
                }
            }
        }
    } else if let Some(r) = args.source.r {
        if r < -1 {
            return Err(Error::ConstraintViolation(format!("r = {r} is below -1")));
        }
        let t = gr_table(
            r,
            args.max_n,
            args.max_h,
            args.max_n.max(1) * args.max_h as usize * 2,
        );
        for n in 1..=args.max_n {
            for m in 1..=args.max_h as i64 {
                for j in 1..=m {
                    let s = t.get(n, m, j);
                    if !s.is_zero() {
                        let poly = polynomial_text(&s.to_string());
                        text += &format!("g_{r}({n},{m},{j}) = {poly}\n");
                        rows.push(json!({ "n": n, "m": m, "j": j, "series": poly }));
                    }
                }
            }
        }
    }
    report.payload = Some(json!({ "entries": rows }));
    Ok((report, text))
}

/// Drops the `O(q^N)` tail: table entries are exact polynomials.
fn polynomial_text(s: &str) -> String {
    match s.rfind(" + O(q^") {
        Some(i) => s[..i].to_string(),
        None => s.to_string(),
    }
}
