//! Computation through the discrete gyrator transform.
//!
//! The gyrator transform rotates the twisted (x, w_y)/(y, w_x) phase-space
//! planes by an angle alpha:
//!
//! ```text
//! G_a{s}(x, y) = |csc a|/(2pi) Int e^(j(xy + t tau)/tan a - j(x tau + y t)/sin a)
//!                s(t, tau) dt dtau.
//! ```
//!
//! At alpha = -pi/4 it turns HG_n(t) HG_0(tau) into LG_(0,n), which is what
//! the normalized Bargmann transform does to HG_n — so embedding the signal
//! as s(t) e^(-tau^2/2) and rotating by -pi/4 computes the transform:
//! S_NB = pi^(-1/4) G_(-pi/4){s(t) e^(-tau^2/2)}.
//!
//! Discretely, the rotation factors into a chirp multiply, a circular chirp
//! convolution and a second identical chirp multiply, with
//!
//! ```text
//! C1 = C2 = ((cos a - 1)/sin a) antidiag(1,1) = -tan(a/2) antidiag(1,1),
//! B  = sin a antidiag(1,1),
//! ```
//!
//! the CM-CC-CM split of the gyrator's 4x4 symplectic matrix. Reversibility
//! is exact at the pipeline level: the stages of G_(-a) cancel those of G_a
//! factor by factor, so round trips sit at the rounding floor regardless of
//! the field content.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind};
use crate::grid::{FieldGrid, SampleGrid};
use crate::mat2::CMat2;
use crate::signal::Signal;
use crate::spectral::{apply_cm_cc_cm, apply_cm_cc_row0, ChirpMatrix2};

/// Rotation angle of the gyrator transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GyratorAngle {
    alpha: f64,
}

const DEGENERATE_TOL: f64 = 1e-12;

impl GyratorAngle {
    pub fn new(alpha: f64) -> Self {
        GyratorAngle { alpha }
    }

    pub fn radians(&self) -> f64 {
        self.alpha
    }

    /// True when alpha = 0 (mod 2pi): the transform is the identity.
    pub fn is_identity(&self) -> bool {
        self.alpha.sin().abs() < DEGENERATE_TOL && self.alpha.cos() > 0.0
    }

    /// True when alpha = pi (mod 2pi): the transform is a point reflection.
    pub fn is_reflection(&self) -> bool {
        self.alpha.sin().abs() < DEGENERATE_TOL && self.alpha.cos() < 0.0
    }

    /// Chirp-multiply parameter -tan(alpha/2) antidiag(1,1).
    fn cm_matrix(&self) -> Result<ChirpMatrix2> {
        let g = -(self.alpha / 2.0).tan();
        ChirpMatrix2::antidiag(Complex64::new(g, 0.0))
    }

    /// Chirp-convolution parameter sin(alpha) antidiag(1,1).
    fn cc_matrix(&self) -> CMat2 {
        CMat2::antidiag(Complex64::new(self.alpha.sin(), 0.0))
    }
}

/// Embeds a 1D signal as the 2D field s(t) e^(-tau^2/2).
pub fn embed_gaussian(signal: &Signal, tau_grid: &SampleGrid) -> Result<Field> {
    let grid = FieldGrid::new(*signal.grid(), *tau_grid);
    let taus: Vec<f64> = tau_grid.positions().collect();
    let mut values = Vec::with_capacity(grid.len());
    for s in signal.samples() {
        for tau in &taus {
            values.push(s * (-tau * tau / 2.0).exp());
        }
    }
    Field::new(grid, values, FieldKind::Plain)
}

/// Discrete gyrator transform of a 2D field. Angles with sin(alpha) = 0 are
/// handled by the closed-form branch (identity or point reflection), never
/// by the chirp pipeline.
pub fn gyrator_apply(field: &Field, angle: GyratorAngle) -> Result<Field> {
    if angle.is_identity() {
        return Ok(field.clone());
    }
    if angle.is_reflection() {
        let (mx, my) = (field.grid().x.half(), field.grid().y.half());
        let mut out = field.clone();
        for p in -mx..=mx {
            for q in -my..=my {
                out.set(p, q, field.at(-p, -q));
            }
        }
        return Ok(out);
    }
    let cm = angle.cm_matrix()?;
    apply_cm_cc_cm(field, &cm, &angle.cc_matrix(), &cm)
}

/// Forward normalized Bargmann transform via the gyrator route,
/// S_NB = pi^(-1/4) G_(-pi/4){s(t) e^(-tau^2/2)}; output grid dx = dy = dt.
pub fn forward_gyrator(signal: &Signal) -> Result<Field> {
    let embedded = embed_gaussian(signal, signal.grid())?;
    let rotated = gyrator_apply(&embedded, GyratorAngle::new(-FRAC_PI_4))?;
    Ok(rotated
        .scale(Complex64::new(PI.powf(-0.25), 0.0))
        .with_kind(FieldKind::Normalized))
}

/// Inverse via the reverse rotation, s(t) = pi^(1/4) [G_(pi/4){S_NB}] at
/// tau = 0. Only the tau = 0 row survives the final chirp stage, so the
/// pipeline computes just that row after the convolution.
pub fn inverse_gyrator(field: &Field) -> Result<Signal> {
    field.expect_kind(FieldKind::Normalized)?;
    if !field.grid().x.approx_eq(&field.grid().y) {
        return Err(Error::GridMismatch);
    }
    let angle = GyratorAngle::new(FRAC_PI_4);
    let cm = angle.cm_matrix()?;
    // the final chirp multiply is antidiagonal: its x^2 coefficient is zero
    let row = apply_cm_cc_row0(field, &cm, &angle.cc_matrix(), cm.entries().m[0][0])?;
    let scale = PI.powf(0.25);
    Signal::new(
        field.grid().x,
        row.into_iter().map(|v| v * scale).collect(),
    )
}
