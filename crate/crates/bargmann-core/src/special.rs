//! Analytic Hermite-Gaussian and Laguerre-Gaussian evaluators.
//!
//! HG_n(t) = (2^n n! sqrt(pi))^(-1/2) e^(-t^2/2) H_n(t) with the physicists'
//! Hermite polynomial H_n. Evaluation runs the three-term recurrence on the
//! Gaussian-weighted functions themselves,
//!
//! ```text
//! hg_n = sqrt(2/n) t hg_(n-1) - sqrt((n-1)/n) hg_(n-2),
//! ```
//!
//! which stays bounded where evaluating H_n first would overflow near
//! n = 150.
//!
//! LG_(0,n)(x, y) = (pi n!)^(-1/2) (x + jy)^n e^(-(x^2+y^2)/2) is evaluated
//! in log-magnitude / phase form so that orders up to a few hundred stay
//! finite.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::factorial::ln_factorial;
use crate::field::{Field, FieldKind};
use crate::grid::{FieldGrid, SampleGrid};
use crate::signal::Signal;

/// HG_n evaluated at an arbitrary sequence of positions.
pub(crate) fn hg_values(order: usize, positions: impl Iterator<Item = f64>) -> Vec<f64> {
    positions.map(|t| hg_at(order, t)).collect()
}

fn hg_at(order: usize, t: f64) -> f64 {
    let h0 = PI.powf(-0.25) * (-t * t / 2.0).exp();
    if order == 0 {
        return h0;
    }
    let h1 = std::f64::consts::SQRT_2 * t * h0;
    if order == 1 {
        return h1;
    }
    let (mut prev, mut cur) = (h0, h1);
    for n in 2..=order {
        let nf = n as f64;
        let next = (2.0 / nf).sqrt() * t * cur - ((nf - 1.0) / nf).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Samples the order-n Hermite-Gaussian function on a centered grid.
pub fn sample_hg(order: usize, grid: &SampleGrid) -> Result<Signal> {
    let values = hg_values(order, grid.positions());
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::HermiteOverflow { order });
    }
    Signal::new(
        *grid,
        values.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
    )
}

/// Samples the order-n Laguerre-Gaussian LG_(0,n) on a 2D grid.
pub fn sample_lg0(order: usize, grid: &FieldGrid) -> Field {
    let log_norm = -0.5 * (PI.ln() + ln_factorial(order));
    let n = order as f64;
    Field::from_fn(*grid, FieldKind::Normalized, |x, y| {
        let r2 = x * x + y * y;
        let rho = r2.sqrt();
        if rho == 0.0 {
            if order == 0 {
                return Complex64::new(log_norm.exp(), 0.0);
            }
            return Complex64::new(0.0, 0.0);
        }
        let log_mag = log_norm + n * rho.ln() - r2 / 2.0;
        Complex64::from_polar(log_mag.exp(), n * y.atan2(x))
    })
}
