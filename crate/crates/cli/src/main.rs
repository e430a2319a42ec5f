//! `forest-homfly` command-line front end.
//!
//! Exit codes: 0 ok, 1 bad input, 2 methods disagree.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use forest_homfly::invariants::{self, InvariantError};
use forest_homfly::plabic::{construct_from_forest, corpus, homfly_skein};
use forest_homfly::{parse_forest, BivariateLaurent, Forest, Format, InvariantReport, PlabicError, PlabicMap};
use serde_json::json;

#[derive(Parser)]
#[command(name = "forest-homfly", version, about = "HOMFLY-type invariants of forest quivers")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[arg(long, value_enum, global = true, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// HOMFLY polynomial of a forest quiver.
    Homfly {
        /// Preset (`A4`, `D5+A1`, `T9`, ...), edge list, or a file holding either.
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// Alexander polynomial (matching formula, checked against the HOMFLY specialization).
    Alexander { input: String },
    /// Alexander–Conway coefficients b_i.
    Conway { input: String },
    /// Point-count polynomial.
    Rpoly { input: String },
    /// Every applicable method, with agreement report.
    Verify {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Strand permutation of a plabic map (JSON file or bundled map name).
    StrandPerm { map: String },
    /// Plabic map JSON realizing the given forest quiver.
    PlabicFrom { input: String },
    /// HOMFLY polynomial of a plabic map by the skein recursion.
    Skein { map: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursive,
    Closed,
    Skein,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Latex,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Latex => Format::Latex,
            OutFormat::Json => Format::Json,
        }
    }
}

enum Failure {
    Input(String),
    Mismatch(String),
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::InternalMismatch(m) => Failure::Mismatch(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<PlabicError> for Failure {
    fn from(e: PlabicError) -> Self {
        match e {
            PlabicError::InternalMismatch(m) => Failure::Mismatch(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// File contents when `input` names an existing file, else `input` itself.
fn read_input(input: &str) -> Result<String, Failure> {
    let p = Path::new(input);
    if p.is_file() {
        fs::read_to_string(p).map_err(|e| Failure::Input(format!("{input}: {e}")))
    } else {
        Ok(input.to_string())
    }
}

fn forest(input: &str) -> Result<Forest, Failure> {
    parse_forest(&read_input(input)?).map_err(|e| Failure::Input(e.to_string()))
}

fn plabic(input: &str) -> Result<PlabicMap, Failure> {
    if !Path::new(input).is_file() {
        if let Some(g) = corpus::load(input) {
            return Ok(g);
        }
    }
    Ok(PlabicMap::from_json(&read_input(input)?)?)
}

fn skein_of_forest(f: &Forest) -> Result<BivariateLaurent, Failure> {
    Ok(homfly_skein(&construct_from_forest(f))?)
}

fn homfly(f: &Forest, method: Method, fmt: Format) -> Result<String, Failure> {
    let p = match method {
        Method::Recursive => invariants::homfly_recursive(f),
        Method::Closed => invariants::homfly_closed(f),
        Method::Skein => skein_of_forest(f)?,
        Method::All => {
            let r = invariants::homfly_recursive(f);
            let c = invariants::homfly_closed(f);
            let s = skein_of_forest(f)?;
            if r != c || r != s {
                return Err(Failure::Mismatch(format!("recursive {r}, closed {c}, skein {s}")));
            }
            r
        }
    };
    Ok(p.render(fmt))
}

fn conway(f: &Forest, fmt: Format) -> String {
    let b = invariants::conway_coefficients(f);
    let n = f.len() as i32;
    let poly: BivariateLaurent = b
        .iter()
        .enumerate()
        .map(|(i, c)| BivariateLaurent::monomial(*c as i64, 0, n - 2 * i as i32))
        .sum();
    match fmt {
        Format::Json => json!({ "b": b, "polynomial": poly.to_string() }).to_string(),
        _ => poly.render(fmt),
    }
}

fn verify(f: &Forest, method: Method, fmt: Format) -> Result<(String, bool), Failure> {
    let mut report = InvariantReport::compute(f)?;
    if matches!(method, Method::Skein | Method::All) {
        let s = skein_of_forest(f)?;
        report.add_check("homfly skein = recursive", &s);
    }
    let ok = report.methods_agreed;
    let verdict = if ok { "methods agree" } else { "methods disagree" };
    let out = if fmt == Format::Json {
        let checks: Vec<_> = report.checks.iter().map(|(l, a)| json!({ "check": l, "agreed": a })).collect();
        json!({ "checks": checks, "methods_agreed": ok }).to_string()
    } else {
        let mut lines: Vec<String> = report
            .checks
            .iter()
            .map(|(l, a)| format!("{} {l}", if *a { "ok  " } else { "FAIL" }))
            .collect();
        lines.push(verdict.to_string());
        lines.join("\n")
    };
    Ok((out, ok))
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let fmt = Format::from(cli.format);
    let out = match &cli.verb {
        Verb::Homfly { input, method } => homfly(&forest(input)?, *method, fmt)?,
        Verb::Alexander { input } => invariants::alexander(&forest(input)?)?.render(fmt),
        Verb::Conway { input } => conway(&forest(input)?, fmt),
        Verb::Rpoly { input } => invariants::r_polynomial(&forest(input)?)?.render(fmt),
        Verb::Verify { input, method } => return verify(&forest(input)?, *method, fmt),
        Verb::StrandPerm { map } => {
            let p = plabic(map)?.strand_permutation()?;
            match fmt {
                Format::Json => json!({ "images": p.images(), "cycles": p.to_string() }).to_string(),
                _ => p.to_string(),
            }
        }
        Verb::PlabicFrom { input } => construct_from_forest(&forest(input)?).to_json(),
        Verb::Skein { map } => homfly_skein(&plabic(map)?)?.render(fmt),
    };
    Ok((out, true))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    let body = format!("{text}\n");
    match &cli.out {
        Some(p) => fs::write(p, body).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli).and_then(|(text, ok)| {
        emit(&cli, &text)?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("mismatch: {m}");
            ExitCode::from(2)
        }
    }
}
