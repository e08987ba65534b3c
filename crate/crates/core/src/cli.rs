//! The `lahbell` command line: `table`, `poly`, `value` and `verify`.
//!
//! Payloads go to stdout and diagnostics to stderr. Exit status is 0 on
//! success, 1 when a verification fails and 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bell::{
    complete_bell, complete_lah_bell, complete_r_lah_bell, complete_r_lah_bell_expanded,
    incomplete_bell, incomplete_lah_bell, incomplete_r_lah_bell, lah_bell_polynomial,
    moments_from_cumulants, Scalar, SequenceSpec,
};
use crate::exact::{lah, lah_bell_number, r_lah_bell_number, rlah, ExactInteger};
use crate::poly::{Family, Polynomial};
use crate::verify::{self, Bounds, Suite, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lahbell",
    version,
    about = "Exact Lah, r-Lah and Lah-Bell numbers and polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a triangle L(n,k) / L_r(n,k) or a Lah-Bell sequence.
    Table(TableArgs),
    /// Print a polynomial in canonical form.
    Poly(PolyArgs),
    /// Print a single exact value.
    Value(ValueArgs),
    /// Run identity checks; exit 1 if any fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    Lah,
    Rlah,
    LahBell,
    RLahBell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFamily {
    CompleteBell,
    IncompleteBell,
    CompleteLahBell,
    IncompleteLahBell,
    IncompleteRLahBell,
    CompleteRLahBell,
    Theorem7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ValueFamily {
    Lah,
    Rlah,
    LahBell,
    RLahBell,
    LahBellPoly,
    Moments,
}

/// `--x`: an integer or the literal `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarArg(pub Scalar);

impl FromStr for ScalarArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "x" {
            return Ok(ScalarArg(Scalar::Indeterminate));
        }
        s.parse::<ExactInteger>()
            .map(|v| ScalarArg(Scalar::Value(v)))
            .map_err(|_| format!("expected an integer or 'x', got '{s}'"))
    }
}

/// `--seq-a` / `--seq-b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqArg {
    Ones,
    Factorials,
    Symbolic,
    Explicit(Vec<ExactInteger>),
}

impl SeqArg {
    fn spec(&self, symbolic: Family) -> SequenceSpec {
        match self {
            SeqArg::Ones => SequenceSpec::Ones,
            SeqArg::Factorials => SequenceSpec::Factorials,
            SeqArg::Symbolic => SequenceSpec::Symbolic(symbolic),
            SeqArg::Explicit(v) => SequenceSpec::Explicit(v.clone()),
        }
    }
}

impl FromStr for SeqArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ones" => Ok(SeqArg::Ones),
            "factorials" => Ok(SeqArg::Factorials),
            "symbolic" => Ok(SeqArg::Symbolic),
            _ => s
                .split(',')
                .map(|v| v.trim().parse::<ExactInteger>())
                .collect::<Result<Vec<_>, _>>()
                .map(SeqArg::Explicit)
                .map_err(|_| {
                    format!("expected ones, factorials, symbolic or a comma-separated integer list, got '{s}'")
                }),
        }
    }
}

impl std::fmt::Display for SeqArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeqArg::Ones => f.write_str("ones"),
            SeqArg::Factorials => f.write_str("factorials"),
            SeqArg::Symbolic => f.write_str("symbolic"),
            SeqArg::Explicit(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub family: TableFamily,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(value_enum)]
    pub family: PolyFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<ScalarArg>,
    #[arg(long, allow_hyphen_values = true)]
    pub seq_a: Option<SeqArg>,
    #[arg(long, allow_hyphen_values = true)]
    pub seq_b: Option<SeqArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ValueArgs {
    #[arg(value_enum)]
    pub family: ValueFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<ScalarArg>,
    /// Cumulants for `moments`.
    #[arg(long, allow_hyphen_values = true)]
    pub seq_a: Option<SeqArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = Bounds::default().n_max)]
    pub n_max: usize,
    #[arg(long, default_value_t = Bounds::default().r_max)]
    pub r_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Echo of the request that produced a record.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seq_a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seq_b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub suite: Option<String>,
}

/// Numbers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Payload {
    Number(String),
    Sequence(Vec<String>),
    Triangle(Vec<Vec<String>>),
    Polynomial(Polynomial),
    Verdict(Verdict),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub query: Query,
    #[serde(flatten)]
    pub payload: Payload,
}

impl OutputRecord {
    /// Renders the record; `None` if the format does not apply to this kind.
    pub fn render(&self, format: Format) -> Option<String> {
        match format {
            Format::Json => Some(serde_json::to_string(self).expect("records serialize") + "\n"),
            Format::Text => Some(self.render_text()),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Number(v) => out.push_str(v),
            Payload::Sequence(v) => out.push_str(&v.join(", ")),
            Payload::Triangle(rows) => {
                let lines: Vec<String> = rows.iter().map(|row| row.join(", ")).collect();
                out.push_str(&lines.join("\n"));
            }
            Payload::Polynomial(p) => out.push_str(&p.to_string()),
            Payload::Verdict(v) => {
                for o in &v.outcomes {
                    let status = if o.passed { "PASS" } else { "FAIL" };
                    out.push_str(&format!(
                        "{status} {} [{}] {} cases\n",
                        o.identity, o.bound, o.cases
                    ));
                    if let Some(c) = &o.counterexample {
                        out.push_str(&format!("  counterexample: {c}\n"));
                    }
                }
                let status = if v.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{status} suite {} (n_max={}, r_max={})",
                    v.suite, v.bounds.n_max, v.bounds.r_max
                ));
            }
        }
        out.push('\n');
        out
    }

    fn render_csv(&self) -> Option<String> {
        let mut out = String::new();
        match &self.payload {
            Payload::Sequence(v) => {
                out.push_str("n,value\n");
                for (n, x) in v.iter().enumerate() {
                    out.push_str(&format!("{n},{x}\n"));
                }
            }
            Payload::Triangle(rows) => {
                out.push_str("n,k,value\n");
                for (n, row) in rows.iter().enumerate() {
                    for (k, x) in row.iter().enumerate() {
                        out.push_str(&format!("{n},{k},{x}\n"));
                    }
                }
            }
            _ => return None,
        }
        Some(out)
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(Box<OutputRecord>),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str, what: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{what} requires --{flag}")))
}

fn table(args: &TableArgs) -> Result<OutputRecord, Failure> {
    let name = args
        .family
        .to_possible_value()
        .expect("no skipped variants");
    let mut query = Query {
        command: "table".into(),
        family: Some(name.get_name().into()),
        n_max: Some(args.n_max),
        r: args.r,
        ..Default::default()
    };
    let range = 0..=args.n_max;
    let payload = match args.family {
        TableFamily::Lah => {
            query.r = None;
            Payload::Triangle(
                range
                    .map(|n| (0..=n).map(|k| lah(n, k).to_string()).collect())
                    .collect(),
            )
        }
        TableFamily::Rlah => {
            let r = require(args.r, "r", "table rlah")?;
            Payload::Triangle(
                range
                    .map(|n| (0..=n).map(|k| rlah(n, k, r).to_string()).collect())
                    .collect(),
            )
        }
        TableFamily::LahBell => {
            query.r = None;
            Payload::Sequence(range.map(|n| lah_bell_number(n).to_string()).collect())
        }
        TableFamily::RLahBell => {
            let r = require(args.r, "r", "table r-lah-bell")?;
            Payload::Sequence(range.map(|n| r_lah_bell_number(n, r).to_string()).collect())
        }
    };
    Ok(OutputRecord { query, payload })
}

fn poly(args: &PolyArgs) -> Result<OutputRecord, Failure> {
    let name = args
        .family
        .to_possible_value()
        .expect("no skipped variants");
    let what = format!("poly {}", name.get_name());
    let query = Query {
        command: "poly".into(),
        family: Some(name.get_name().into()),
        n: Some(args.n),
        k: args.k,
        r: args.r,
        x: args.x.as_ref().map(|x| x.0.to_polynomial().to_string()),
        seq_a: args.seq_a.as_ref().map(|s| s.to_string()),
        seq_b: args.seq_b.as_ref().map(|s| s.to_string()),
        ..Default::default()
    };
    let seq = |arg: &Option<SeqArg>, family| arg.as_ref().unwrap_or(&SeqArg::Symbolic).spec(family);
    let n = args.n;
    let p = match args.family {
        PolyFamily::CompleteBell => complete_bell(n, &seq(&args.seq_a, Family::X))?,
        PolyFamily::IncompleteBell => incomplete_bell(
            n,
            require(args.k, "k", &what)?,
            &seq(&args.seq_a, Family::X),
        )?,
        PolyFamily::CompleteLahBell => complete_lah_bell(n, &seq(&args.seq_a, Family::X))?,
        PolyFamily::IncompleteLahBell => incomplete_lah_bell(
            n,
            require(args.k, "k", &what)?,
            &seq(&args.seq_a, Family::X),
        )?,
        PolyFamily::IncompleteRLahBell => incomplete_r_lah_bell(
            n,
            require(args.k, "k", &what)?,
            require(args.r, "r", &what)?,
            &seq(&args.seq_a, Family::A),
            &seq(&args.seq_b, Family::B),
        )?,
        PolyFamily::CompleteRLahBell => complete_r_lah_bell(
            n,
            require(args.r, "r", &what)?,
            &args
                .x
                .as_ref()
                .map_or(Scalar::Indeterminate, |x| x.0.clone()),
            &seq(&args.seq_a, Family::A),
            &seq(&args.seq_b, Family::B),
        )?,
        PolyFamily::Theorem7 => complete_r_lah_bell_expanded(
            n,
            require(args.r, "r", &what)?,
            &seq(&args.seq_a, Family::X),
            &seq(&args.seq_b, Family::Y),
        )?,
    };
    Ok(OutputRecord {
        query,
        payload: Payload::Polynomial(p),
    })
}

fn value(args: &ValueArgs) -> Result<OutputRecord, Failure> {
    let name = args
        .family
        .to_possible_value()
        .expect("no skipped variants");
    let what = format!("value {}", name.get_name());
    let mut query = Query {
        command: "value".into(),
        family: Some(name.get_name().into()),
        n: Some(args.n),
        k: args.k,
        r: args.r,
        x: args.x.as_ref().map(|x| x.0.to_polynomial().to_string()),
        seq_a: args.seq_a.as_ref().map(|s| s.to_string()),
        ..Default::default()
    };
    let n = args.n;
    let v = match args.family {
        ValueFamily::Lah => lah(n, require(args.k, "k", &what)?),
        ValueFamily::Rlah => rlah(
            n,
            require(args.k, "k", &what)?,
            require(args.r, "r", &what)?,
        ),
        ValueFamily::LahBell => lah_bell_number(n),
        ValueFamily::RLahBell => r_lah_bell_number(n, require(args.r, "r", &what)?),
        ValueFamily::LahBellPoly => {
            let r = args.r.unwrap_or(0);
            let x = match &args.x {
                None => Scalar::from(1),
                Some(ScalarArg(Scalar::Indeterminate)) => {
                    return Err(Failure::Usage(format!(
                        "{what} needs an integer --x; use poly for symbolic x"
                    )))
                }
                Some(ScalarArg(x)) => x.clone(),
            };
            query.r = Some(r);
            query.x = Some(x.to_polynomial().to_string());
            lah_bell_polynomial(n, r, &x)
                .as_constant()
                .expect("integer x gives a number")
        }
        ValueFamily::Moments => {
            let spec = args
                .seq_a
                .as_ref()
                .ok_or_else(|| {
                    Failure::Usage(format!("{what} requires --seq-a with the cumulants"))
                })?
                .spec(Family::X);
            let kappas = (1..=n)
                .map(|i| {
                    spec.term(i)?.as_constant().ok_or_else(|| {
                        crate::Error::Parse(format!("{what} needs numeric cumulants"))
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            moments_from_cumulants(&kappas, n)?
        }
    };
    Ok(OutputRecord {
        query,
        payload: Payload::Number(v.to_string()),
    })
}

fn verify_cmd(args: &VerifyArgs) -> Result<OutputRecord, Failure> {
    let bounds = Bounds {
        n_max: args.n_max,
        r_max: args.r_max,
    };
    let verdict = verify::run(args.suite, bounds);
    let record = OutputRecord {
        query: Query {
            command: "verify".into(),
            suite: Some(args.suite.name().into()),
            n_max: Some(args.n_max),
            r_max: Some(args.r_max),
            ..Default::default()
        },
        payload: Payload::Verdict(verdict.clone()),
    };
    if verdict.passed {
        Ok(record)
    } else {
        Err(Failure::Verification(Box::new(record)))
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out` / `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (result, format) = match &cli.command {
        Command::Table(a) => (table(a), a.format),
        Command::Poly(a) => (poly(a), a.format),
        Command::Value(a) => (value(a), a.format),
        Command::Verify(a) => (verify_cmd(a), a.format),
    };
    let (record, code) = match result {
        Ok(record) => (record, EXIT_OK),
        Err(Failure::Verification(record)) => {
            let _ = writeln!(err, "lahbell: verification failed");
            (*record, EXIT_FAILED)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "lahbell: {msg}");
            return EXIT_USAGE;
        }
    };
    match record.render(format) {
        Some(text) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        None => {
            let _ = writeln!(err, "lahbell: --format csv applies only to table output");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("lahbell").chain(args.split_whitespace()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn table_examples() {
        let (code, out, _) = call("table lah --n-max 3");
        assert_eq!(code, 0);
        assert_eq!(out.lines().nth(3), Some("0, 6, 6, 1"));
        assert_eq!(call("table lah-bell --n-max 3").1, "1, 1, 3, 13\n");
        assert_eq!(call("table rlah --r 0 --n-max 3").1, out);
    }

    #[test]
    fn poly_examples() {
        assert_eq!(call("poly complete-bell --n 3").1, "x1^3 + 3*x1*x2 + x3\n");
        assert_eq!(call("poly incomplete-lah-bell --n 3 --k 2").1, "6*x1*x2\n");
        assert_eq!(call("poly theorem7 --n 1 --r 1").1, "x1*y1^2 + 2*y1*y2\n");
        assert_eq!(
            call("poly theorem7 --n 1 --r 1 --seq-a ones --seq-b ones").1,
            "3\n"
        );
        assert_eq!(
            call("poly complete-r-lah-bell --n 1 --r 1 --seq-a ones --seq-b ones").1,
            "x + 2\n"
        );
    }

    #[test]
    fn value_examples() {
        assert_eq!(call("value lah --n 4 --k 2").1, "36\n");
        assert_eq!(call("value r-lah-bell --n 0 --r 5").1, "1\n");
        assert_eq!(call("value lah-bell-poly --n 2 --r 0 --x 2").1, "8\n");
        assert_eq!(call("value lah-bell-poly --n 3").1, "13\n");
        assert_eq!(call("value moments --n 3 --seq-a ones").1, "5\n");
        assert_eq!(call("value moments --n 4 --seq-a 0,1,0,0").1, "3\n");
        assert_eq!(call("value lah-bell-poly --n 2 --x -3").1, "3\n");
        assert_eq!(call("value moments --n 2 --seq-a -2,1").1, "5\n");
    }

    #[test]
    fn verify_examples() {
        assert_eq!(call("verify --suite theorem1 --n-max 20").0, 0);
        assert_eq!(call("verify --suite all --n-max 0 --r-max 0").0, 0);
        let (code, out, _) = call("verify --suite corollary6 --n-max 12 --r-max 3");
        assert_eq!(code, 0);
        assert!(out.ends_with("PASS suite corollary6 (n_max=12, r_max=3)\n"));
    }

    #[test]
    fn usage_errors_exit_2() {
        for args in [
            "table rlah --n-max 3",
            "value lah --n 3",
            "poly incomplete-bell --n 3",
            "poly theorem7 --n 2",
            "value moments --n 3 --seq-a 1,2",
            "value lah-bell-poly --n 2 --x x",
            "poly complete-bell --n 2 --format csv",
            "verify --suite nope",
            "table nope",
            "frobnicate",
        ] {
            let (code, out, err) = call(args);
            assert_eq!(code, EXIT_USAGE, "{args}");
            assert!(out.is_empty(), "{args}");
            assert!(!err.is_empty(), "{args}");
        }
    }

    #[test]
    fn csv_tables() {
        assert_eq!(
            call("table lah-bell --n-max 2 --format csv").1,
            "n,value\n0,1\n1,1\n2,3\n"
        );
        assert_eq!(
            call("table lah --n-max 1 --format csv").1,
            "n,k,value\n0,0,1\n1,0,0\n1,1,1\n"
        );
    }

    #[test]
    fn json_round_trips() {
        for args in [
            "table lah --n-max 4 --format json",
            "table r-lah-bell --r 2 --n-max 4 --format json",
            "poly complete-r-lah-bell --n 2 --r 1 --format json",
            "value lah --n 30 --k 3 --format json",
            "verify --suite eq28 --n-max 4 --format json",
        ] {
            let (code, out, _) = call(args);
            assert_eq!(code, 0, "{args}");
            let record: OutputRecord = serde_json::from_str(&out).unwrap();
            assert_eq!(record.render(Format::Json).unwrap(), out, "{args}");
        }
    }

    #[test]
    fn text_and_json_agree() {
        let (_, text, _) = call("poly complete-lah-bell --n 4");
        let (_, json, _) = call("poly complete-lah-bell --n 4 --format json");
        let record: OutputRecord = serde_json::from_str(&json).unwrap();
        let Payload::Polynomial(p) = record.payload else {
            panic!("not a polynomial")
        };
        assert_eq!(text.trim_end().parse::<Polynomial>().unwrap(), p);
    }

    #[test]
    fn big_values_are_decimal() {
        let (_, out, _) = call("value lah-bell --n 40");
        assert!(out.trim_end().bytes().all(|b| b.is_ascii_digit()));
        assert_eq!(out.trim_end(), lah_bell_number(40).to_string());
    }
}
