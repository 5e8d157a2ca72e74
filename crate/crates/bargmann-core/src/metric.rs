//! Error metrics.
//!
//! NMSE = sum |s - s_r|^2 / sum |s|^2 and MSE = (1/N) sum |s - s_r|^2,
//! taken over all samples. NMSE is used throughout because it is invariant
//! under a common rescaling of both operands.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::signal::Signal;

/// NMSE/MSE pair between a reference and a test sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metric {
    /// Normalized mean-square error; NaN when the reference has zero energy.
    pub nmse: f64,
    /// Mean-square error, defined regardless of reference energy.
    pub mse: f64,
}

impl Metric {
    /// Core computation over two equally long complex slices.
    pub fn between(reference: &[Complex64], test: &[Complex64]) -> Result<Metric> {
        if reference.len() != test.len() || reference.is_empty() {
            return Err(Error::ShapeMismatch);
        }
        let mut diff = 0.0f64;
        let mut energy = 0.0f64;
        for (r, t) in reference.iter().zip(test) {
            diff += (r - t).norm_sqr();
            energy += r.norm_sqr();
        }
        let mse = diff / reference.len() as f64;
        let nmse = if energy > 0.0 { diff / energy } else { f64::NAN };
        Ok(Metric { nmse, mse })
    }

    pub fn signals(reference: &Signal, test: &Signal) -> Result<Metric> {
        if reference.grid().count() != test.grid().count() {
            return Err(Error::ShapeMismatch);
        }
        Metric::between(reference.samples(), test.samples())
    }

    pub fn fields(reference: &Field, test: &Field) -> Result<Metric> {
        if reference.nx() != test.nx() || reference.ny() != test.ny() {
            return Err(Error::ShapeMismatch);
        }
        Metric::between(reference.values(), test.values())
    }
}

/// Convenience wrapper returning both metrics for two signals.
pub fn nmse_signals(reference: &Signal, test: &Signal) -> Result<Metric> {
    Metric::signals(reference, test)
}

/// Convenience wrapper returning both metrics for two fields.
pub fn nmse_fields(reference: &Field, test: &Field) -> Result<Metric> {
    Metric::fields(reference, test)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identical_inputs_give_zero() {
        let a = [c(1.0, 2.0), c(-0.5, 0.25)];
        let m = Metric::between(&a, &a).unwrap();
        assert_eq!(m.nmse, 0.0);
        assert_eq!(m.mse, 0.0);
    }

    #[test]
    fn direct_formula_values() {
        // reference (1,1), test (1,0) -> nmse 0.5
        let m = Metric::between(&[c(1.0, 0.0), c(1.0, 0.0)], &[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(m.nmse, 0.5);
        assert_eq!(m.mse, 0.5);
        // test = 2*reference -> nmse 1
        let r = [c(0.3, -1.2), c(2.0, 0.5), c(-0.7, 0.0)];
        let t: Vec<_> = r.iter().map(|v| v * 2.0).collect();
        let m = Metric::between(&r, &t).unwrap();
        assert!((m.nmse - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_energy_reference_keeps_mse() {
        let m = Metric::between(&[c(0.0, 0.0); 4], &[c(1.0, 0.0); 4]).unwrap();
        assert!(m.nmse.is_nan());
        assert_eq!(m.mse, 1.0);
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(Metric::between(&[c(1.0, 0.0)], &[c(1.0, 0.0); 2]).is_err());
        assert!(Metric::between(&[], &[]).is_err());
    }

    #[test]
    fn scale_invariance_property() {
        // nmse(alpha a, alpha b) == nmse(a, b); exact for power-of-two alpha,
        // and within rounding for arbitrary complex alpha. Deterministic
        // pseudo-random inputs stand in for a fuzz harness.
        let mut state = 0x1234_5678_u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for _ in 0..25 {
            let a: Vec<_> = (0..17).map(|_| c(rnd(), rnd())).collect();
            let b: Vec<_> = (0..17).map(|_| c(rnd(), rnd())).collect();
            let base = Metric::between(&a, &b).unwrap().nmse;

            let pow2 = c(4.0, 0.0);
            let a2: Vec<_> = a.iter().map(|v| v * pow2).collect();
            let b2: Vec<_> = b.iter().map(|v| v * pow2).collect();
            assert_eq!(Metric::between(&a2, &b2).unwrap().nmse, base);

            let alpha = c(rnd() + 2.0, rnd());
            let aa: Vec<_> = a.iter().map(|v| v * alpha).collect();
            let ba: Vec<_> = b.iter().map(|v| v * alpha).collect();
            let scaled = Metric::between(&aa, &ba).unwrap().nmse;
            assert!((scaled - base).abs() <= 1e-12 * base.max(1.0));
        }
    }
}
