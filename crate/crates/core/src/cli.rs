//! Command-line front end.
//!
//! Exit codes: 0 success or valid, 1 invalid code, 2 usage error, 3 infeasible
//! or unsupported parameters, 4 timeout without a proof.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::gcd;

use crate::bounds::{theta_best_upper, theta_upper};
use crate::code::{classify, difference_profile, Code};
use crate::constructions::{construct_optimal, route};
use crate::error::Error;
use crate::io::{matrix_export, CodeFile, Metadata};
use crate::search::{max_code, search_regular, SearchOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_TIMEOUT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "oospc", version, about = "Weight-3 OOSPCs over Z_m x Z_n: bounds, constructions, verification, search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Params {
    #[arg(short = 'm')]
    m: u32,
    #[arg(short = 'n')]
    n: u32,
    /// Auto-correlation limit.
    #[arg(long = "la")]
    lambda_a: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Shift,
    Diff,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the upper bound on the code size.
    Bound {
        #[command(flatten)]
        params: Params,
        /// The closed-form bound as stated.
        #[arg(long, conflicts_with = "effective")]
        raw: bool,
        /// The tightest available bound (default).
        #[arg(long)]
        effective: bool,
    },
    /// Build an optimal code for m = n = 2 (mod 4).
    Construct {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        out: PathBuf,
        /// Also write the 0/1 matrices here.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Check a code file.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "shift")]
        method: Method,
    },
    /// Exhaustive search for a maximum code, or for a regular one.
    Search {
        #[command(flatten)]
        params: Params,
        /// Give up after this many seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Require the leave to be the subgroup of order s*t, minus zero.
        #[arg(long, num_args = 2, value_names = ["S", "T"])]
        regular: Option<Vec<u32>>,
        /// Write the witness here.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Search past the closed-form bound instead of stopping there.
        #[arg(long)]
        no_bound: bool,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bound values for m, n >= 2 with gcd(m, n) > 1 and 4 | mn.
    Table {
        #[arg(long, default_value_t = 150)]
        max_mn: u32,
        /// Only this auto-correlation; both 3 and 2 otherwise.
        #[arg(long = "la")]
        lambda_a: Option<u32>,
        /// Also try a search of this many seconds per cell without a construction.
        #[arg(long)]
        search: Option<f64>,
    },
    /// Type census and per-codeword labels of a code file.
    Classify { path: PathBuf },
    /// Print a code file as 0/1 matrices.
    Matrix { path: PathBuf },
}

/// Parse `args` (program name first), run the command, return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Bound { params, raw, .. } => bound(out, &params, raw),
        Command::Construct { params, out: path, matrix } => construct(out, &params, &path, matrix.as_deref()),
        Command::Verify { path, method } => verify(out, &path, method),
        Command::Search { params, timeout, regular, emit, no_bound, workers, seed } => {
            let opts = SearchOptions {
                timeout: timeout.map(Duration::from_secs_f64),
                use_theorem_bound: !no_bound,
                workers,
                seed,
                ..SearchOptions::default()
            };
            let regular = regular.map(|v| (v[0], v[1]));
            search(out, err, &params, regular, emit.as_deref(), &opts)
        }
        Command::Table { max_mn, lambda_a, search } => table(out, max_mn, lambda_a, search),
        Command::Classify { path } => classify_file(out, &path),
        Command::Matrix { path } => matrix(out, &path),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidCode(_) => EXIT_INVALID,
        Error::Unsupported(_) | Error::NoSuchDesign(_) => EXIT_INFEASIBLE,
        Error::Timeout { .. } => EXIT_TIMEOUT,
        Error::InvalidParameter(_) | Error::UnknownCatalogEntry(_) | Error::Io { .. } | Error::Format(_) => {
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, Error>;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_owned(), source }
}

fn load(path: &Path) -> Result<Code, Error> {
    CodeFile::read(path)?.to_code()
}

/// Verify, then write. Nothing invalid ever reaches disk.
fn write_verified(code: &Code, path: &Path, meta: Metadata) -> Result<(), Error> {
    code.ensure_valid()?;
    CodeFile::from_code(code, Some(meta)).write(path)
}

fn fmt_regularity(r: Option<(u32, u32)>) -> String {
    match r {
        Some((s, t)) => format!("({s},{t})-regular"),
        None => "not regular".into(),
    }
}

fn bound(out: &mut dyn Write, p: &Params, raw: bool) -> CmdResult {
    let (m, n) = (p.m as u64, p.n as u64);
    let v = if raw { theta_upper(m, n, p.lambda_a)? } else { theta_best_upper(m, n, p.lambda_a)? };
    writeln!(out, "{v}").map_err(io_err(Path::new("<stdout>")))?;
    Ok(EXIT_OK)
}

fn construct(out: &mut dyn Write, p: &Params, path: &Path, matrix: Option<&Path>) -> CmdResult {
    let (r, _) = route(p.m, p.n, p.lambda_a)?;
    let code = construct_optimal(p.m, p.n, p.lambda_a)?;
    let reg = code.regularity()?;
    let meta = Metadata { construction: Some(r.describe().into()), regularity: reg };
    write_verified(&code, path, meta)?;
    if let Some(mp) = matrix {
        std::fs::write(mp, matrix_export(&code)).map_err(io_err(mp))?;
    }
    writeln!(
        out,
        "wrote {} codewords to {}; {}; {}",
        code.len(),
        path.display(),
        fmt_regularity(reg),
        r.describe()
    )
    .map_err(io_err(Path::new("<stdout>")))?;
    Ok(EXIT_OK)
}

fn verify(out: &mut dyn Write, path: &Path, method: Method) -> CmdResult {
    let code = load(path)?;
    let verdict = match method {
        Method::Shift => code.verify_shift(),
        Method::Diff => code.verify_diff()?,
    };
    let stdout = io_err(Path::new("<stdout>"));
    match verdict.violation() {
        None => {
            writeln!(out, "valid: {} codewords", code.len()).map_err(stdout)?;
            Ok(EXIT_OK)
        }
        Some(v) => {
            writeln!(out, "invalid: {v}").map_err(stdout)?;
            Ok(EXIT_INVALID)
        }
    }
}

fn search(
    out: &mut dyn Write,
    err: &mut dyn Write,
    p: &Params,
    regular: Option<(u32, u32)>,
    emit: Option<&Path>,
    opts: &SearchOptions,
) -> CmdResult {
    let found = match regular {
        Some((s, t)) => match search_regular(p.m, p.n, p.lambda_a, s, t, opts) {
            Ok(r) => r,
            Err(Error::NoSuchDesign(why)) => {
                writeln!(out, "infeasible").map_err(io_err(Path::new("<stdout>")))?;
                let _ = writeln!(err, "{why}");
                return Ok(EXIT_INFEASIBLE);
            }
            Err(Error::Timeout { nodes }) => {
                writeln!(out, "timeout after {nodes} nodes").map_err(io_err(Path::new("<stdout>")))?;
                return Ok(EXIT_TIMEOUT);
            }
            Err(e) => return Err(e),
        },
        None => max_code(p.m, p.n, p.lambda_a, opts)?,
    };
    if let Some(path) = emit {
        let meta = Metadata {
            construction: Some("search".into()),
            regularity: found.witness.regularity()?,
        };
        write_verified(&found.witness, path, meta)?;
    }
    let status = if found.proven_optimal { "proven" } else { "best found, not proven" };
    writeln!(out, "{} ({status})", found.best_size).map_err(io_err(Path::new("<stdout>")))?;
    let _ = writeln!(
        err,
        "{} nodes in {:.3}s",
        found.nodes_explored,
        found.elapsed.as_secs_f64()
    );
    Ok(if found.proven_optimal { EXIT_OK } else { EXIT_TIMEOUT })
}

/// Cells listed by `table`, ordered by `mn` then `m`.
pub fn table_cells(max_mn: u32) -> Vec<(u32, u32)> {
    let mut cells: Vec<(u32, u32)> = (2..=max_mn / 2)
        .flat_map(|m| (2..=max_mn / m).map(move |n| (m, n)))
        .filter(|&(m, n)| (m * n) % 4 == 0 && gcd(m, n) > 1)
        .collect();
    cells.sort_by_key(|&(m, n)| (m * n, m));
    cells
}

fn witnessed(m: u32, n: u32, lambda_a: u32, value: u64, search: Option<f64>) -> bool {
    if m % 4 == 2 && n % 4 == 2 {
        return construct_optimal(m, n, lambda_a).is_ok_and(|c| c.len() as u64 == value);
    }
    let Some(secs) = search else { return false };
    let opts = SearchOptions {
        timeout: Some(Duration::from_secs_f64(secs)),
        lower_bound_hint: Some(value as usize),
        ..SearchOptions::default()
    };
    max_code(m, n, lambda_a, &opts).is_ok_and(|r| r.best_size as u64 == value)
}

fn table(out: &mut dyn Write, max_mn: u32, lambda_a: Option<u32>, search: Option<f64>) -> CmdResult {
    let las: Vec<u32> = match lambda_a {
        Some(la) => vec![la],
        None => vec![3, 2],
    };
    let stdout = || io_err(Path::new("<stdout>"));
    let mut header = format!("{:>4} {:>4}", "m", "n");
    for la in &las {
        header.push_str(&format!(" {:>7}", format!("la={la}")));
    }
    writeln!(out, "{header}").map_err(stdout())?;
    for (m, n) in table_cells(max_mn) {
        let mut line = format!("{m:>4} {n:>4}");
        for &la in &las {
            let v = theta_best_upper(m as u64, n as u64, la)?;
            let mark = if witnessed(m, n, la, v, search) { "*" } else { " " };
            line.push_str(&format!(" {:>6}{mark}", v));
        }
        writeln!(out, "{}", line.trim_end()).map_err(stdout())?;
    }
    writeln!(out, "* a code of this size was constructed or found").map_err(stdout())?;
    Ok(EXIT_OK)
}

fn classify_file(out: &mut dyn Write, path: &Path) -> CmdResult {
    let code = load(path)?;
    let g = code.group();
    let census = code.census();
    let line: Vec<String> = census.entries().iter().map(|(k, v)| format!("{k}={v}")).collect();
    let stdout = || io_err(Path::new("<stdout>"));
    writeln!(out, "census: {}", line.join(" ")).map_err(stdout())?;
    for (i, c) in code.codewords().iter().enumerate() {
        let prof = difference_profile(&g, c);
        writeln!(out, "#{i} {c} type {} lambda {}", classify(&g, c), prof.lambda_x).map_err(stdout())?;
    }
    Ok(EXIT_OK)
}

fn matrix(out: &mut dyn Write, path: &Path) -> CmdResult {
    let code = load(path)?;
    out.write_all(matrix_export(&code).as_bytes()).map_err(io_err(Path::new("<stdout>")))?;
    Ok(EXIT_OK)
}
