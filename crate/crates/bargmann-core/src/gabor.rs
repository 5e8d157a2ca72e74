//! Computation through the Gabor transform.
//!
//! The Gabor transform (Gaussian-window STFT, unit variance window)
//!
//! ```text
//! G(tau, w) = (2pi)^(-1/2) Int s(t) e^(-(tau - t)^2/2) e^(-j w t) dt
//! ```
//!
//! relates to the normalized Bargmann transform by a pure phase:
//!
//! ```text
//! S_NB(x, y) = 2^(1/2) pi^(-1/4) e^(-jxy) G(sqrt(2) x, -sqrt(2) y).
//! ```
//!
//! One Gaussian window multiply plus one centered FFT per time sample gives
//! the O(N^2 log N) forward path. Two inversion routes are provided: a 2D
//! route (pointwise e^(jxy), a weighted sum along x, one FFT along y) that
//! recovers the signal on a caller-chosen compatible grid, and a cheaper 1D
//! route (a single weighted sum along y per sample) whose output spacing is
//! forced to sqrt(2) dx.
//!
//! The frequency step is pinned to dw = 2pi/(N dt) (the FFT-compatible
//! choice) and the window hop to dtau = dt, so the output lands on
//! dx = dtau/sqrt(2), dy = dw/sqrt(2). The e^(-jxy) factor is applied after
//! the Gabor stage, never folded into the window, keeping the Gabor field
//! reusable on its own.

use std::f64::consts::{PI, SQRT_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind};
use crate::grid::{FieldGrid, SampleGrid};
use crate::signal::Signal;
use crate::spectral::{centered_dft_1d, Direction};

/// Output grid of [`forward_gabor`] for a given signal grid:
/// dx = dt/sqrt(2), dy = 2pi/(N dt sqrt(2)), N x N.
pub fn gabor_output_grid(grid: &SampleGrid) -> Result<FieldGrid> {
    let n = grid.count();
    let dt = grid.spacing();
    let dw = TAU / (n as f64 * dt);
    Ok(FieldGrid::new(
        SampleGrid::centered(n, dt / SQRT_2)?,
        SampleGrid::centered(n, dw / SQRT_2)?,
    ))
}

/// Gabor transform on the grid dtau = dt, dw = 2pi/(N dt).
pub fn gabor_transform(signal: &Signal) -> Result<Field> {
    let n = signal.grid().count();
    let dt = signal.grid().spacing();
    let dw = TAU / (n as f64 * dt);
    let grid = FieldGrid::new(SampleGrid::centered(n, dt)?, SampleGrid::centered(n, dw)?);

    // window values depend only on the index offset p - i
    let window: Vec<f64> = (-(n as i64 - 1)..=(n as i64 - 1))
        .map(|k| {
            let u = k as f64 * dt;
            (-u * u / 2.0).exp()
        })
        .collect();

    let scale = TAU.sqrt().recip();
    let mut values = Vec::with_capacity(n * n);
    for p in 0..n {
        let windowed = Signal::new(
            *signal.grid(),
            signal
                .samples()
                .iter()
                .enumerate()
                .map(|(i, s)| s * window[p + (n - 1) - i])
                .collect(),
        )?;
        let spectrum = centered_dft_1d(&windowed, Direction::Forward, dw)?;
        values.extend(spectrum.samples().iter().map(|v| v * scale));
    }
    Field::new(grid, values, FieldKind::Gabor)
}

/// Forward normalized Bargmann transform via the Gabor route; output grid
/// dx = dtau/sqrt(2), dy = dw/sqrt(2).
pub fn forward_gabor(signal: &Signal) -> Result<Field> {
    let g = gabor_transform(signal)?;
    let n = g.nx();
    let m = g.grid().x.half();
    let dx = g.grid().x.spacing() / SQRT_2;
    let dy = g.grid().y.spacing() / SQRT_2;
    let grid = FieldGrid::new(SampleGrid::centered(n, dx)?, SampleGrid::centered(n, dy)?);

    let c = SQRT_2 * PI.powf(-0.25);
    let mut out = Field::zeros(grid, FieldKind::Normalized);
    for p in -m..=m {
        let x = p as f64 * dx;
        for q in -m..=m {
            let y = q as f64 * dy;
            // the -sqrt(2) y argument is an index reversal on the centered grid
            let v = g.at(p, -q) * Complex64::from_polar(c, -x * y);
            out.set(p, q, v);
        }
    }
    Ok(out)
}

/// 2D inversion route: pointwise e^(jxy), weighted column sum, one centered
/// DFT along y evaluated at frequency sqrt(2) t. The output grid must
/// satisfy dt * (sqrt(2) dy) = 2pi/N_y.
pub fn inverse_gabor_2d(field: &Field, out: &SampleGrid) -> Result<Signal> {
    field.expect_kind(FieldKind::Normalized)?;
    let ny = field.ny();
    let dy = field.grid().y.spacing();
    let required = TAU / (ny as f64 * SQRT_2 * dy);
    if out.count() != ny {
        return Err(Error::GridMismatch);
    }
    if (out.spacing() - required).abs() > 1e-12 * required {
        return Err(Error::SpacingConstraint { required, actual: out.spacing() });
    }

    let dx = field.grid().x.spacing();
    let mx = field.grid().x.half();
    let my = field.grid().y.half();
    // h[q] = dx * sum_p S[p, q] e^(j x_p y_q)
    let h = Signal::new(
        field.grid().y,
        (-my..=my)
            .map(|q| {
                let y = q as f64 * dy;
                let mut acc = Complex64::new(0.0, 0.0);
                for p in -mx..=mx {
                    let x = p as f64 * dx;
                    acc += field.at(p, q) * Complex64::from_polar(1.0, x * y);
                }
                acc * dx
            })
            .collect(),
    )?;
    let spectrum = centered_dft_1d(&h, Direction::Forward, SQRT_2 * out.spacing())?;
    let c = 2.0f64.powf(-0.5) * PI.powf(-0.75);
    Signal::new(*out, spectrum.samples().iter().map(|v| v * c).collect())
}

/// 1D inversion route: a single weighted sum along y per output sample,
/// s(sqrt(2) x_p) = 2^(-1/2) pi^(-1/4) Int S_NB(x_p, y) e^(-j x_p y) dy.
/// The recovered grid spacing is forced to sqrt(2) dx.
pub fn inverse_gabor_1d(field: &Field) -> Result<Signal> {
    field.expect_kind(FieldKind::Normalized)?;
    let dx = field.grid().x.spacing();
    let dy = field.grid().y.spacing();
    let mx = field.grid().x.half();
    let my = field.grid().y.half();
    let grid = SampleGrid::centered(field.nx(), SQRT_2 * dx)?;
    let c = 2.0f64.powf(-0.5) * PI.powf(-0.25) * dy;
    let samples = (-mx..=mx)
        .map(|p| {
            let x = p as f64 * dx;
            let mut acc = Complex64::new(0.0, 0.0);
            for q in -my..=my {
                let y = q as f64 * dy;
                acc += field.at(p, q) * Complex64::from_polar(1.0, -x * y);
            }
            acc * c
        })
        .collect();
    Signal::new(grid, samples)
}
