//! 1D complex signals on centered time grids, and the deterministic
//! reference signal used by the round-trip benchmarks.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::SampleGrid;

/// A complex sample sequence over a centered [`SampleGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    grid: SampleGrid,
    samples: Vec<Complex64>,
}

impl Signal {
    pub fn new(grid: SampleGrid, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.count() {
            return Err(Error::LengthMismatch {
                expected: grid.count(),
                actual: samples.len(),
            });
        }
        Ok(Signal { grid, samples })
    }

    pub fn zeros(grid: SampleGrid) -> Self {
        Signal {
            samples: vec![Complex64::new(0.0, 0.0); grid.count()],
            grid,
        }
    }

    /// Builds a signal by evaluating `f` at every grid position.
    pub fn from_fn(grid: SampleGrid, mut f: impl FnMut(f64) -> Complex64) -> Self {
        let samples = grid.positions().map(&mut f).collect();
        Signal { grid, samples }
    }

    pub fn grid(&self) -> &SampleGrid {
        &self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [Complex64] {
        &mut self.samples
    }

    /// Value at centered index `i`.
    pub fn at(&self, i: i64) -> Complex64 {
        self.samples[(i + self.grid.half()) as usize]
    }

    /// Discrete energy dt*sum |s|^2.
    pub fn energy(&self) -> f64 {
        self.grid.spacing() * self.samples.iter().map(|s| s.norm_sqr()).sum::<f64>()
    }

    pub fn scale(&self, factor: Complex64) -> Signal {
        Signal {
            grid: self.grid,
            samples: self.samples.iter().map(|s| s * factor).collect(),
        }
    }
}

/// Deterministic reference signal: a sinusoidal FM tone under a Gaussian
/// envelope plus two displaced Hermite-Gaussians,
///
/// ```text
/// s(t) = exp(j*3*sin(0.6 t)) * exp(-t^2/12) + HG_6(t - 4) + HG_3(t + 5).
/// ```
///
/// The envelope and FM rate keep the signal below ~1e-14 of its peak at the
/// canonical grid edges and essentially band-limited inside the Gabor-plane
/// window, so every transform path round-trips it at the rounding floor.
pub fn make_test_signal(grid: &SampleGrid) -> Signal {
    let fm = Signal::from_fn(*grid, |t| {
        Complex64::from_polar((-t * t / 12.0).exp(), 3.0 * (0.6 * t).sin())
    });
    let hg6 = hg_shifted(6, grid, 4.0);
    let hg3 = hg_shifted(3, grid, -5.0);
    let samples = fm
        .samples
        .iter()
        .zip(hg6.iter().zip(hg3.iter()))
        .map(|(a, (b, c))| a + b + c)
        .collect();
    Signal { grid: *grid, samples }
}

/// Samples HG_n(t - shift) on the grid.
fn hg_shifted(order: usize, grid: &SampleGrid, shift: f64) -> Vec<Complex64> {
    // The recurrence is evaluated on the shifted positions directly; the
    // shifted grid is no longer centered, so go through the raw evaluator.
    crate::special::hg_values(order, grid.positions().map(|t| t - shift))
        .into_iter()
        .map(|v| Complex64::new(v, 0.0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_centered_grid;

    #[test]
    fn sample_count_must_match_grid() {
        let g = make_centered_grid(5, 1.0).unwrap();
        assert!(matches!(
            Signal::new(g, vec![Complex64::new(1.0, 0.0); 4]),
            Err(Error::LengthMismatch { expected: 5, actual: 4 })
        ));
    }

    #[test]
    fn test_signal_is_deterministic_with_finite_energy() {
        let g = make_centered_grid(255, 0.157).unwrap();
        let a = make_test_signal(&g);
        let b = make_test_signal(&g);
        assert_eq!(a.samples(), b.samples());
        let e = a.energy();
        assert!(e.is_finite() && e > 0.0);
    }

    #[test]
    fn test_signal_decays_at_grid_endpoints() {
        let g = make_centered_grid(255, 0.157).unwrap();
        let s = make_test_signal(&g);
        let peak = s.samples().iter().map(|v| v.norm()).fold(0.0, f64::max);
        let edge = s.at(-127).norm().max(s.at(127).norm());
        assert!(edge < 1e-3 * peak, "edge {edge:e} vs peak {peak:e}");
    }

    #[test]
    fn test_signal_matches_formula_at_origin() {
        let g = make_centered_grid(255, 0.157).unwrap();
        let s = make_test_signal(&g);
        // At t = 0: exp(j*0)*1 + HG_6(-4) + HG_3(5), all terms real-addable.
        let expected = Complex64::new(
            1.0 + crate::special::hg_values(6, [-4.0].into_iter())[0]
                + crate::special::hg_values(3, [5.0].into_iter())[0],
            0.0,
        );
        assert!((s.at(0) - expected).norm() < 1e-15);
    }
}
