//! Signal, field and CSV file formats.
//!
//! `.sig`: header `NBSIG 1 <N> <dt>`, then N lines `<re> <im>` in centered
//! index order -(N-1)/2 ..= (N-1)/2.
//!
//! `.grid`: header `NBGRID 1 <Nx> <Ny> <dx> <dy> <kind>`, then Nx*Ny lines
//! `<re> <im>`, x index as the outer loop, both axes ascending from the
//! most negative index. `kind` is one of normalized, unnormalized, gabor.
//!
//! Floats are written in their shortest round-trip decimal form (scientific
//! notation), so write-then-read is bit-lossless and byte-deterministic.
//! CSV tables are comma-separated with `.` decimals, LF line endings and a
//! mandatory header row.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use bargmann_core::field::{Field, FieldKind};
use bargmann_core::grid::{make_centered_grid, FieldGrid};
use bargmann_core::signal::Signal;
use num_complex::Complex64;

use crate::CliError;

/// Shortest round-trip decimal form of an f64.
pub fn format_f64(v: f64) -> String {
    format!("{v:e}")
}

fn parse_f64(s: &str, what: &str) -> Result<f64, CliError> {
    s.parse::<f64>()
        .map_err(|_| CliError::Format(format!("malformed {what}: {s:?}")))
}

fn parse_usize(s: &str, what: &str) -> Result<usize, CliError> {
    s.parse::<usize>()
        .map_err(|_| CliError::Format(format!("malformed {what}: {s:?}")))
}

pub fn write_signal(path: &Path, signal: &Signal) -> Result<(), CliError> {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "NBSIG 1 {} {}",
        signal.grid().count(),
        format_f64(signal.grid().spacing())
    );
    for v in signal.samples() {
        let _ = writeln!(out, "{} {}", format_f64(v.re), format_f64(v.im));
    }
    fs::write(path, out).map_err(|e| CliError::io(e, path))
}

pub fn read_signal(path: &Path) -> Result<Signal, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(e, path))?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Format("empty signal file".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "NBSIG" || parts[1] != "1" {
        return Err(CliError::Format(format!("bad signal header: {header:?}")));
    }
    let n = parse_usize(parts[2], "sample count")?;
    let dt = parse_f64(parts[3], "spacing")?;
    let grid = make_centered_grid(n, dt).map_err(CliError::Lib)?;
    let samples = read_complex_lines(&mut lines, n)?;
    Signal::new(grid, samples).map_err(CliError::Lib)
}

pub fn write_field(path: &Path, field: &Field) -> Result<(), CliError> {
    let kind = match field.kind() {
        FieldKind::Normalized => "normalized",
        FieldKind::Unnormalized => "unnormalized",
        FieldKind::Gabor => "gabor",
        FieldKind::Plain => {
            return Err(CliError::Format(
                "plain (pipeline-internal) fields are not serializable".into(),
            ))
        }
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "NBGRID 1 {} {} {} {} {}",
        field.nx(),
        field.ny(),
        format_f64(field.grid().x.spacing()),
        format_f64(field.grid().y.spacing()),
        kind
    );
    for v in field.values() {
        let _ = writeln!(out, "{} {}", format_f64(v.re), format_f64(v.im));
    }
    fs::write(path, out).map_err(|e| CliError::io(e, path))
}

pub fn read_field(path: &Path) -> Result<Field, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(e, path))?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Format("empty field file".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 7 || parts[0] != "NBGRID" || parts[1] != "1" {
        return Err(CliError::Format(format!("bad field header: {header:?}")));
    }
    let nx = parse_usize(parts[2], "x count")?;
    let ny = parse_usize(parts[3], "y count")?;
    let dx = parse_f64(parts[4], "x spacing")?;
    let dy = parse_f64(parts[5], "y spacing")?;
    let kind = match parts[6] {
        "normalized" => FieldKind::Normalized,
        "unnormalized" => FieldKind::Unnormalized,
        "gabor" => FieldKind::Gabor,
        other => return Err(CliError::Format(format!("unknown field kind {other:?}"))),
    };
    let grid = FieldGrid::new(
        make_centered_grid(nx, dx).map_err(CliError::Lib)?,
        make_centered_grid(ny, dy).map_err(CliError::Lib)?,
    );
    let values = read_complex_lines(&mut lines, nx * ny)?;
    Field::new(grid, values, kind).map_err(CliError::Lib)
}

fn read_complex_lines<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
    expected: usize,
) -> Result<Vec<Complex64>, CliError> {
    let mut values = Vec::with_capacity(expected);
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let re = parse_f64(
            it.next()
                .ok_or_else(|| CliError::Format("missing real part".into()))?,
            "real part",
        )?;
        let im = parse_f64(
            it.next()
                .ok_or_else(|| CliError::Format("missing imaginary part".into()))?,
            "imaginary part",
        )?;
        if it.next().is_some() {
            return Err(CliError::Format(format!("trailing data on line: {line:?}")));
        }
        values.push(Complex64::new(re, im));
    }
    if values.len() != expected {
        return Err(CliError::Format(format!(
            "expected {expected} samples, found {}",
            values.len()
        )));
    }
    Ok(values)
}

/// Renders a CSV table (header + rows) with LF endings.
pub fn render_csv(header: &str, rows: &[String]) -> String {
    let mut out = String::with_capacity(header.len() + 1 + rows.iter().map(|r| r.len() + 1).sum::<usize>());
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(row);
        out.push('\n');
    }
    out
}
