//! Command-line frontend for the normalized Bargmann transform toolkit.
//!
//! Subcommands: `gen` (signal files), `transform` (forward transforms),
//! `inverse` (inverse transforms), `bench` (accuracy / roundtrip /
//! complexity / compare tables as CSV).
//!
//! Exit codes: 0 success, 1 I/O error, 2 usage error, 3 grid-constraint
//! violation (or another numerical precondition failure).

mod io;

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{SQRT_2, TAU};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bargmann_core::bench::{
    accuracy_sweep, compare_methods, predicted_real_mults, roundtrip_nmse, Method,
    RoundtripMethod,
};
use bargmann_core::direct::{forward_direct, inverse_direct, to_unnormalized};
use bargmann_core::error::Error as LibError;
use bargmann_core::field::Field;
use bargmann_core::gabor::{forward_gabor, inverse_gabor_1d, inverse_gabor_2d};
use bargmann_core::grid::{make_centered_grid, FieldGrid, SampleGrid};
use bargmann_core::gyrator::{forward_gyrator, inverse_gyrator};
use bargmann_core::hermite::{build_hg_basis, forward_hg, inverse_hg};
use bargmann_core::nslct::{forward_nslct, inverse_nslct};
use bargmann_core::signal::{make_test_signal, Signal};
use bargmann_core::special::sample_hg;

use io::format_f64;

#[derive(Debug)]
pub enum CliError {
    Io { source: std::io::Error, path: PathBuf },
    Usage(String),
    Format(String),
    Lib(LibError),
}

impl CliError {
    fn io(source: std::io::Error, path: &Path) -> Self {
        CliError::Io { source, path: path.to_path_buf() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Format(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                LibError::OddLengthRequired { .. }
                | LibError::NonpositiveSpacing { .. }
                | LibError::UnknownMethod { .. }
                | LibError::ParameterOutOfRange { .. }
                | LibError::CouplingIndex { .. }
                | LibError::InvalidWignerIndices { .. } => 2,
                _ => 3,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { source, path } => write!(f, "{}: {source}", path.display()),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Format(msg) => write!(f, "{msg}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> Self {
        CliError::Lib(e)
    }
}

const USAGE: &str = "usage: bargmann <command> [options]

commands:
  gen        --n <odd> --dt <spacing> --kind <demo|hg:<order>> -o <file.sig>
  transform  --method <direct|gabor|hg|gyrator|nslct> -i <file.sig> -o <file.grid>
             [--dx <spacing>] [--dy <spacing>] [--unnormalized]
  inverse    --method <direct|gabor|hg|gyrator|nslct> [--variant <2d|1d>]
             -i <file.grid> -o <file.sig> [--n <odd> --dt <spacing>]
  bench      <accuracy|roundtrip|complexity|compare> [options] [-o <file.csv>]

bench options:
  accuracy   --n <odd=127> --delta <spacing=0.2224> --orders <a:b=0:120>
  roundtrip  [--method <name>] [--variant <2d|1d>] --n <odd=255> --dt <spacing=0.157>
  complexity --n <int=256>
  compare    --n <odd=255> --dt <spacing=0.157>";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(args: &[String]) -> Result<(), CliError> {
    let Some((command, rest)) = args.split_first() else {
        return Err(CliError::usage(USAGE));
    };
    match command.as_str() {
        "gen" => cmd_gen(rest),
        "transform" => cmd_transform(rest),
        "inverse" => cmd_inverse(rest),
        "bench" => cmd_bench(rest),
        "--help" | "-h" | "help" => {
            println!("{USAGE}");
            Ok(())
        }
        other => Err(CliError::usage(format!("unknown command {other:?}\n{USAGE}"))),
    }
}

// ---------------------------------------------------------------------------
// flag parsing
// ---------------------------------------------------------------------------

struct Parsed {
    opts: BTreeMap<String, String>,
    switches: BTreeSet<String>,
}

fn parse_flags(args: &[String], opts: &[&str], switches: &[&str]) -> Result<Parsed, CliError> {
    let mut parsed = Parsed { opts: BTreeMap::new(), switches: BTreeSet::new() };
    let mut it = args.iter();
    while let Some(token) = it.next() {
        let (key, inline) = match token.split_once('=') {
            Some((k, v)) => (k, Some(v.to_string())),
            None => (token.as_str(), None),
        };
        if switches.contains(&key) {
            if inline.is_some() {
                return Err(CliError::usage(format!("{key} takes no value")));
            }
            parsed.switches.insert(key.to_string());
        } else if opts.contains(&key) {
            let value = match inline {
                Some(v) => v,
                None => it
                    .next()
                    .ok_or_else(|| CliError::usage(format!("{key} needs a value")))?
                    .clone(),
            };
            if parsed.opts.insert(key.to_string(), value).is_some() {
                return Err(CliError::usage(format!("{key} given twice")));
            }
        } else {
            return Err(CliError::usage(format!("unknown option {token:?}")));
        }
    }
    Ok(parsed)
}

impl Parsed {
    fn req(&self, key: &str) -> Result<&str, CliError> {
        self.opts
            .get(key)
            .map(|s| s.as_str())
            .ok_or_else(|| CliError::usage(format!("missing required option {key}")))
    }

    fn opt(&self, key: &str) -> Option<&str> {
        self.opts.get(key).map(|s| s.as_str())
    }

    fn f64(&self, key: &str) -> Result<f64, CliError> {
        let raw = self.req(key)?;
        raw.parse::<f64>()
            .map_err(|_| CliError::usage(format!("{key} must be a number, got {raw:?}")))
    }

    fn usize(&self, key: &str) -> Result<usize, CliError> {
        let raw = self.req(key)?;
        raw.parse::<usize>()
            .map_err(|_| CliError::usage(format!("{key} must be an integer, got {raw:?}")))
    }

    fn f64_or(&self, key: &str, default: f64) -> Result<f64, CliError> {
        match self.opt(key) {
            Some(_) => self.f64(key),
            None => Ok(default),
        }
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize, CliError> {
        match self.opt(key) {
            Some(_) => self.usize(key),
            None => Ok(default),
        }
    }
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

fn cmd_gen(args: &[String]) -> Result<(), CliError> {
    let p = parse_flags(args, &["--n", "--dt", "--kind", "-o"], &[])?;
    let n = p.usize("--n")?;
    let dt = p.f64("--dt")?;
    let kind = p.req("--kind")?;
    let out = PathBuf::from(p.req("-o")?);

    let grid = make_centered_grid(n, dt)?;
    let signal = match kind {
        "demo" => make_test_signal(&grid),
        other => match other.strip_prefix("hg:") {
            Some(order) => {
                let order: usize = order
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad HG order in --kind {other:?}")))?;
                sample_hg(order, &grid)?
            }
            None => {
                return Err(CliError::usage(format!(
                    "--kind must be demo or hg:<order>, got {other:?}"
                )))
            }
        },
    };
    io::write_signal(&out, &signal)
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

/// Fixed output spacings of the constrained methods; the direct method
/// accepts any grid.
fn pinned_spacings(method: Method, signal_grid: &SampleGrid) -> Option<(f64, f64)> {
    let dt = signal_grid.spacing();
    let n = signal_grid.count() as f64;
    match method {
        Method::Direct => None,
        Method::Gabor => Some((dt / SQRT_2, TAU / (n * dt * SQRT_2))),
        Method::Hg | Method::Gyrator | Method::Nslct => Some((dt, dt)),
    }
}

fn check_requested_spacing(requested: Option<f64>, pinned: f64) -> Result<(), CliError> {
    if let Some(req) = requested {
        if (req - pinned).abs() > 1e-12 * pinned {
            return Err(CliError::Lib(LibError::SpacingConstraint {
                required: pinned,
                actual: req,
            }));
        }
    }
    Ok(())
}

fn cmd_transform(args: &[String]) -> Result<(), CliError> {
    let p = parse_flags(
        args,
        &["--method", "-i", "-o", "--dx", "--dy"],
        &["--unnormalized"],
    )?;
    let method: Method = p.req("--method")?.parse()?;
    let input = PathBuf::from(p.req("-i")?);
    let out = PathBuf::from(p.req("-o")?);
    let dx = p.opt("--dx").map(|_| p.f64("--dx")).transpose()?;
    let dy = p.opt("--dy").map(|_| p.f64("--dy")).transpose()?;

    let signal = io::read_signal(&input)?;
    let field: Field = match method {
        Method::Direct => {
            let n = signal.grid().count();
            let gx = make_centered_grid(n, dx.unwrap_or(signal.grid().spacing()))?;
            let gy = make_centered_grid(n, dy.unwrap_or(signal.grid().spacing()))?;
            forward_direct(&signal, &FieldGrid::new(gx, gy))?
        }
        constrained => {
            let (px, py) = pinned_spacings(constrained, signal.grid()).expect("constrained");
            check_requested_spacing(dx, px)?;
            check_requested_spacing(dy, py)?;
            match constrained {
                Method::Gabor => forward_gabor(&signal)?,
                Method::Hg => {
                    let basis = build_hg_basis(signal.grid())?;
                    forward_hg(&signal, &basis)?
                }
                Method::Gyrator => forward_gyrator(&signal)?,
                Method::Nslct => forward_nslct(&signal)?,
                Method::Direct => unreachable!(),
            }
        }
    };

    let field = if p.switches.contains("--unnormalized") {
        let converted = to_unnormalized(&field)?;
        if !converted.saturated.is_empty() {
            let cells: Vec<String> = converted
                .saturated
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect();
            eprintln!(
                "warning: {} cells saturated in the unnormalized conversion: {}",
                cells.len(),
                cells.join(" ")
            );
        }
        converted.field
    } else {
        field
    };
    io::write_field(&out, &field)
}

// ---------------------------------------------------------------------------
// inverse
// ---------------------------------------------------------------------------

fn cmd_inverse(args: &[String]) -> Result<(), CliError> {
    let p = parse_flags(args, &["--method", "--variant", "-i", "-o", "--n", "--dt"], &[])?;
    let method: Method = p.req("--method")?.parse()?;
    let input = PathBuf::from(p.req("-i")?);
    let out = PathBuf::from(p.req("-o")?);
    let variant = p.opt("--variant");
    if variant.is_some() && method != Method::Gabor {
        return Err(CliError::usage("--variant applies only to --method gabor"));
    }

    let field = io::read_field(&input)?;
    let signal: Signal = match method {
        Method::Direct => {
            let n = p.usize("--n")?;
            let dt = p.f64("--dt")?;
            inverse_direct(&field, &make_centered_grid(n, dt)?)?
        }
        Method::Gabor => match variant.unwrap_or("2d") {
            "2d" => {
                let ny = field.ny();
                let dt = TAU / (ny as f64 * SQRT_2 * field.grid().y.spacing());
                let out_grid = make_centered_grid(ny, dt)?;
                check_derived_grid(&p, &out_grid)?;
                inverse_gabor_2d(&field, &out_grid)?
            }
            "1d" => {
                let s = inverse_gabor_1d(&field)?;
                check_derived_grid(&p, s.grid())?;
                s
            }
            other => {
                return Err(CliError::usage(format!(
                    "--variant must be 2d or 1d, got {other:?}"
                )))
            }
        },
        Method::Hg => {
            let basis = build_hg_basis(&field.grid().x)?;
            let s = inverse_hg(&field, &basis)?;
            check_derived_grid(&p, s.grid())?;
            s
        }
        Method::Gyrator => {
            let s = inverse_gyrator(&field)?;
            check_derived_grid(&p, s.grid())?;
            s
        }
        Method::Nslct => {
            let s = inverse_nslct(&field)?;
            check_derived_grid(&p, s.grid())?;
            s
        }
    };
    io::write_signal(&out, &signal)
}

/// Methods with a derived output grid reject conflicting --n/--dt requests
/// rather than resampling.
fn check_derived_grid(p: &Parsed, derived: &SampleGrid) -> Result<(), CliError> {
    if p.opt("--n").is_some() {
        let n = p.usize("--n")?;
        if n != derived.count() {
            return Err(CliError::Lib(LibError::GridMismatch));
        }
    }
    if p.opt("--dt").is_some() {
        let dt = p.f64("--dt")?;
        if (dt - derived.spacing()).abs() > 1e-12 * derived.spacing() {
            return Err(CliError::Lib(LibError::SpacingConstraint {
                required: derived.spacing(),
                actual: dt,
            }));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

fn cmd_bench(args: &[String]) -> Result<(), CliError> {
    let Some((sub, rest)) = args.split_first() else {
        return Err(CliError::usage(
            "bench needs a subcommand: accuracy | roundtrip | complexity | compare",
        ));
    };
    let (text, path) = match sub.as_str() {
        "accuracy" => bench_accuracy(rest)?,
        "roundtrip" => bench_roundtrip(rest)?,
        "complexity" => bench_complexity(rest)?,
        "compare" => bench_compare(rest)?,
        other => {
            return Err(CliError::usage(format!(
                "unknown bench subcommand {other:?} (accuracy | roundtrip | complexity | compare)"
            )))
        }
    };
    if path.as_os_str().is_empty() {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(&path, text).map_err(|e| CliError::io(e, &path))
    }
}

fn out_path(p: &Parsed) -> PathBuf {
    PathBuf::from(p.opt("-o").unwrap_or(""))
}

fn parse_orders(raw: &str) -> Result<Vec<usize>, CliError> {
    let (a, b) = raw
        .split_once(':')
        .ok_or_else(|| CliError::usage(format!("--orders must be <a>:<b>, got {raw:?}")))?;
    let a: usize = a
        .parse()
        .map_err(|_| CliError::usage(format!("bad order range start {a:?}")))?;
    let b: usize = b
        .parse()
        .map_err(|_| CliError::usage(format!("bad order range end {b:?}")))?;
    if b < a {
        return Err(CliError::usage(format!("empty order range {raw:?}")));
    }
    Ok((a..=b).collect())
}

fn bench_accuracy(args: &[String]) -> Result<(String, PathBuf), CliError> {
    let p = parse_flags(args, &["--n", "--delta", "--orders", "-o"], &[])?;
    let n = p.usize_or("--n", 127)?;
    let delta = p.f64_or("--delta", 0.2224)?;
    let orders = parse_orders(p.opt("--orders").unwrap_or("0:120"))?;
    let rows = accuracy_sweep(&Method::ALL, &orders, n, delta)?;
    let lines: Vec<String> = rows
        .iter()
        .map(|r| format!("{},{},{}", r.method, r.order, format_f64(r.nmse)))
        .collect();
    Ok((io::render_csv("method,order,nmse", &lines), out_path(&p)))
}

fn bench_roundtrip(args: &[String]) -> Result<(String, PathBuf), CliError> {
    let p = parse_flags(args, &["--method", "--variant", "--n", "--dt", "-o"], &[])?;
    let n = p.usize_or("--n", 255)?;
    let dt = p.f64_or("--dt", 0.157)?;
    let grid = make_centered_grid(n, dt)?;
    let signal = make_test_signal(&grid);

    let methods: Vec<RoundtripMethod> = match p.opt("--method") {
        None => RoundtripMethod::ALL.to_vec(),
        Some(name) => {
            let full = match (name, p.opt("--variant")) {
                ("gabor", Some("1d")) => "gabor-1d".to_string(),
                ("gabor", Some("2d")) | ("gabor", None) => "gabor-2d".to_string(),
                (_, Some(_)) => {
                    return Err(CliError::usage("--variant applies only to --method gabor"))
                }
                (other, None) => other.to_string(),
            };
            vec![full.parse()?]
        }
    };
    let mut lines = Vec::new();
    for m in methods {
        let nmse = roundtrip_nmse(m, &signal)?;
        lines.push(format!("{m},{}", format_f64(nmse)));
    }
    Ok((io::render_csv("method,nmse", &lines), out_path(&p)))
}

fn bench_complexity(args: &[String]) -> Result<(String, PathBuf), CliError> {
    let p = parse_flags(args, &["--n", "-o"], &[])?;
    let n = p.usize_or("--n", 256)? as u64;
    let mut lines = Vec::new();
    for m in Method::ALL {
        lines.push(format!("{m},{}", predicted_real_mults(m, n)?));
    }
    Ok((io::render_csv("method,real_mults", &lines), out_path(&p)))
}

fn bench_compare(args: &[String]) -> Result<(String, PathBuf), CliError> {
    let p = parse_flags(args, &["--n", "--dt", "-o"], &[])?;
    let n = p.usize_or("--n", 255)?;
    let dt = p.f64_or("--dt", 0.157)?;
    let grid = make_centered_grid(n, dt)?;
    let signal = make_test_signal(&grid);
    let cm = compare_methods(&signal)?;
    let lines: Vec<String> = cm
        .rows()
        .iter()
        .map(|(a, b, v)| format!("{a},{b},{}", format_f64(*v)))
        .collect();
    Ok((io::render_csv("method_a,method_b,nmse", &lines), out_path(&p)))
}
