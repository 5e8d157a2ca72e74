//! Direct summation of the sampled transform kernel.
//!
//! The forward map is the plain Riemann sum
//!
//! ```text
//! S_NB(p dx, q dy) = pi^(-3/4) dt sum_n e^(-p^2 dx^2 - j p q dx dy
//!                     + sqrt(2)(p dx + j q dy) n dt - n^2 dt^2 / 2) s[n],
//! ```
//!
//! and the inverse uses the complex-conjugate kernel with dx dy weights.
//! O(N^3), kept deliberately simple: this is the reference the fast paths
//! are validated against, so per-cell summation runs in ascending index
//! order and nothing is factored beyond the separable exponentials. The
//! real exponent combines to -(x - t/sqrt(2))^2, which keeps every
//! intermediate bounded.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::Result;
use crate::field::{Field, FieldKind};
use crate::grid::{FieldGrid, SampleGrid};
use crate::signal::Signal;

fn norm_const() -> f64 {
    PI.powf(-0.75)
}

/// Forward normalized Bargmann transform by direct summation; supports any
/// positive output spacings.
pub fn forward_direct(signal: &Signal, out: &FieldGrid) -> Result<Field> {
    let ts: Vec<f64> = signal.grid().positions().collect();
    let xs: Vec<f64> = out.x.positions().collect();
    let ys: Vec<f64> = out.y.positions().collect();
    let dt = signal.grid().spacing();
    let nt = ts.len();
    let ny = ys.len();

    // e^(j sqrt(2) y_q t_n), indexed [q * nt + n]
    let mut phase_yt = Vec::with_capacity(ny * nt);
    for y in &ys {
        for t in &ts {
            phase_yt.push(Complex64::from_polar(1.0, SQRT_2 * y * t));
        }
    }

    let c = norm_const() * dt;
    let mut values = Vec::with_capacity(xs.len() * ny);
    let mut weighted = vec![Complex64::new(0.0, 0.0); nt];
    for &x in &xs {
        for (w, (&t, s)) in weighted.iter_mut().zip(ts.iter().zip(signal.samples())) {
            let u = x - t / SQRT_2;
            *w = s * (-u * u).exp();
        }
        for (q, &y) in ys.iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            let row = &phase_yt[q * nt..(q + 1) * nt];
            for (ph, w) in row.iter().zip(&weighted) {
                acc += ph * w;
            }
            values.push(acc * Complex64::from_polar(c, -x * y));
        }
    }
    Field::new(*out, values, FieldKind::Normalized)
}

/// Inverse normalized Bargmann transform by direct summation over the field.
pub fn inverse_direct(field: &Field, out: &SampleGrid) -> Result<Signal> {
    field.expect_kind(FieldKind::Normalized)?;
    let xs: Vec<f64> = field.grid().x.positions().collect();
    let ys: Vec<f64> = field.grid().y.positions().collect();
    let ts: Vec<f64> = out.positions().collect();
    let (nx, ny) = (xs.len(), ys.len());
    let w = field.grid().x.spacing() * field.grid().y.spacing();

    // e^(j x_p y_q), indexed [p * ny + q]
    let mut phase_xy = Vec::with_capacity(nx * ny);
    for x in &xs {
        for y in &ys {
            phase_xy.push(Complex64::from_polar(1.0, x * y));
        }
    }

    let c = norm_const() * w;
    let mut samples = Vec::with_capacity(ts.len());
    for &t in &ts {
        // e^(-j sqrt(2) y_q t)
        let phase_yt: Vec<Complex64> = ys
            .iter()
            .map(|y| Complex64::from_polar(1.0, -SQRT_2 * y * t))
            .collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (p, &x) in xs.iter().enumerate() {
            let u = x - t / SQRT_2;
            let envelope = (-u * u).exp();
            let mut inner = Complex64::new(0.0, 0.0);
            let row = &field.values()[p * ny..(p + 1) * ny];
            for ((ph_xy, ph_yt), v) in phase_xy[p * ny..(p + 1) * ny]
                .iter()
                .zip(&phase_yt)
                .zip(row)
            {
                inner += ph_xy * ph_yt * v;
            }
            acc += inner * envelope;
        }
        samples.push(acc * c);
    }
    Signal::new(*out, samples)
}

/// Result of the normalized -> unnormalized conversion. Cells whose
/// magnitude would exceed the f64 range are clamped to f64::MAX (keeping
/// their phase) and reported; the unnormalized transform carries very large
/// energy toward the grid boundary by construction.
#[derive(Debug, Clone)]
pub struct Unnormalized {
    pub field: Field,
    /// Centered (p, q) indices of saturated cells, ascending row-major.
    pub saturated: Vec<(i64, i64)>,
}

/// Converts S_NB to the unnormalized Bargmann transform,
/// S_B = 2^(-1/4) pi^(1/4) e^((x^2+y^2)/2) S_NB.
pub fn to_unnormalized(field: &Field) -> Result<Unnormalized> {
    field.expect_kind(FieldKind::Normalized)?;
    let ln_const = 0.25 * (PI.ln() - 2.0f64.ln());
    let ln_max = f64::MAX.ln();
    let ny = field.ny();
    let xs: Vec<f64> = field.grid().x.positions().collect();
    let ys: Vec<f64> = field.grid().y.positions().collect();
    let mx = field.grid().x.half();
    let my = field.grid().y.half();

    let mut saturated = Vec::new();
    let mut values = Vec::with_capacity(field.values().len());
    for (p, &x) in xs.iter().enumerate() {
        for (q, &y) in ys.iter().enumerate() {
            let v = field.values()[p * ny + q];
            let mag = v.norm();
            if mag == 0.0 {
                values.push(Complex64::new(0.0, 0.0));
                continue;
            }
            let exponent = ln_const + (x * x + y * y) / 2.0 + mag.ln();
            if exponent > ln_max {
                saturated.push((p as i64 - mx, q as i64 - my));
                values.push(Complex64::from_polar(f64::MAX, v.arg()));
            } else {
                values.push(Complex64::from_polar(exponent.exp(), v.arg()));
            }
        }
    }
    let field = Field::new(*field.grid(), values, FieldKind::Unnormalized)?;
    Ok(Unnormalized { field, saturated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorial::ln_factorial;
    use crate::grid::make_centered_grid;
    use crate::metric::Metric;
    use crate::special::{sample_hg, sample_lg0};

    #[test]
    fn hg0_maps_to_lg00() {
        let g = make_centered_grid(127, 0.2224).unwrap();
        let fg = FieldGrid::square(g);
        let s = sample_hg(0, &g).unwrap();
        let out = forward_direct(&s, &fg).unwrap();
        let nm = Metric::fields(&sample_lg0(0, &fg), &out).unwrap().nmse;
        assert!(nm <= 1e-8, "nmse {nm:e}");
    }

    #[test]
    fn zero_signal_and_linearity() {
        let g = make_centered_grid(31, 0.3).unwrap();
        let fg = FieldGrid::square(g);
        let zero = Signal::zeros(g);
        let out = forward_direct(&zero, &fg).unwrap();
        assert!(out.values().iter().all(|v| v.norm() == 0.0));

        let s = sample_hg(2, &g).unwrap();
        let alpha = Complex64::new(-1.5, 0.25);
        let lhs = forward_direct(&s.scale(alpha), &fg).unwrap();
        let rhs = forward_direct(&s, &fg).unwrap().scale(alpha);
        let peak = rhs.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
        for (a, b) in lhs.values().iter().zip(rhs.values()) {
            assert!((a - b).norm() <= 1e-14 * peak);
        }
    }

    #[test]
    fn roundtrip_on_contained_signal() {
        let g = make_centered_grid(81, 0.25).unwrap();
        let s = Signal::new(
            g,
            sample_hg(3, &g)
                .unwrap()
                .samples()
                .iter()
                .zip(sample_hg(0, &g).unwrap().samples())
                .map(|(a, b)| a + Complex64::new(0.0, 0.5) * b)
                .collect(),
        )
        .unwrap();
        let fg = FieldGrid::square(g);
        let field = forward_direct(&s, &fg).unwrap();
        let back = inverse_direct(&field, &g).unwrap();
        let nm = Metric::signals(&s, &back).unwrap().nmse;
        assert!(nm <= 1e-20, "nmse {nm:e}");
    }

    #[test]
    fn inverse_of_lg00_recovers_hg0() {
        let g = make_centered_grid(127, 0.2224).unwrap();
        let fg = FieldGrid::square(g);
        let back = inverse_direct(&sample_lg0(0, &fg), &g).unwrap();
        let nm = Metric::signals(&sample_hg(0, &g).unwrap(), &back).unwrap().nmse;
        assert!(nm <= 1e-8, "nmse {nm:e}");
    }

    #[test]
    fn zero_field_gives_zero_signal_and_kind_checked() {
        let g = make_centered_grid(9, 0.5).unwrap();
        let fg = FieldGrid::square(g);
        let z = Field::zeros(fg, FieldKind::Normalized);
        let out = inverse_direct(&z, &g).unwrap();
        assert!(out.samples().iter().all(|v| v.norm() == 0.0));

        let wrong = Field::zeros(fg, FieldKind::Gabor);
        assert!(inverse_direct(&wrong, &g).is_err());
        assert!(to_unnormalized(&wrong).is_err());
    }

    #[test]
    fn inverse_kernel_is_conjugate_of_forward_kernel() {
        let g = make_centered_grid(11, 0.4).unwrap();
        let fg = FieldGrid::square(g);
        let dt = 0.4;
        let w = 0.4 * 0.4;
        // one-hot signal at index k -> field samples the forward kernel;
        // one-hot field at (p, q) -> signal samples the inverse kernel.
        for (k, p, q) in [(0i64, 0i64, 0i64), (2, -3, 1), (-4, 5, -2), (5, 5, 5)] {
            let mut s = Signal::zeros(g);
            s.samples_mut()[(k + 5) as usize] = Complex64::new(1.0, 0.0);
            let fwd = forward_direct(&s, &fg).unwrap();
            let mut f = Field::zeros(fg, FieldKind::Normalized);
            f.set(p, q, Complex64::new(1.0, 0.0));
            let inv = inverse_direct(&f, &g).unwrap();
            let k_fwd = fwd.at(p, q) / dt;
            let k_inv = inv.at(k) / w;
            assert!((k_fwd.conj() - k_inv).norm() <= 1e-14 * k_fwd.norm().max(1.0));
        }
    }

    #[test]
    fn unnormalized_conversion_origin_and_radial_growth() {
        let g = make_centered_grid(31, 0.5).unwrap();
        let fg = FieldGrid::square(g);
        let s = sample_hg(0, &g).unwrap();
        let nb = forward_direct(&s, &fg).unwrap();
        let un = to_unnormalized(&nb).unwrap();
        assert!(un.saturated.is_empty());
        assert_eq!(un.field.kind(), FieldKind::Unnormalized);
        let c = 2.0f64.powf(-0.25) * PI.powf(0.25);
        assert!((un.field.at(0, 0) - nb.at(0, 0) * c).norm() < 1e-15);
        // consecutive radial cells grow by the conversion envelope
        let x1 = 0.5f64;
        let x2 = 1.0f64;
        let expect = ((x2 * x2 - x1 * x1) / 2.0).exp();
        let got = (un.field.at(2, 0) / un.field.at(1, 0)).norm()
            / (nb.at(2, 0) / nb.at(1, 0)).norm();
        assert!((got - expect).abs() < 1e-12);
    }

    #[test]
    fn unnormalized_matches_analytic_bargmann_of_hg() {
        // B{HG_n}(z) = (2pi)^(-1/4) (n!)^(-1/2) z^n on the disk x^2+y^2 <= 36,
        // where the normalized field sits far above the rounding floor.
        let g = make_centered_grid(127, 0.2224).unwrap();
        let fg = FieldGrid::square(g);
        for n in 0..=4usize {
            let s = sample_hg(n, &g).unwrap();
            let nb = forward_direct(&s, &fg).unwrap();
            let un = to_unnormalized(&nb).unwrap();
            assert!(un.saturated.is_empty());
            let norm = (2.0 * PI).powf(-0.25) * (-0.5 * ln_factorial(n)).exp();
            let mut worst = 0.0f64;
            for p in -63i64..=63 {
                for q in -63i64..=63 {
                    let (x, y) = (p as f64 * 0.2224, q as f64 * 0.2224);
                    if x * x + y * y > 36.0 || (n > 0 && p == 0 && q == 0) {
                        continue;
                    }
                    let z = Complex64::new(x, y);
                    let analytic = z.powu(n as u32) * norm;
                    let rel = (un.field.at(p, q) - analytic).norm() / analytic.norm();
                    worst = worst.max(rel);
                }
            }
            assert!(worst <= 1e-6, "n={n} worst rel err {worst:e}");
        }
    }

    #[test]
    fn saturation_reported_for_out_of_range_cells() {
        let g = make_centered_grid(9, 10.0).unwrap();
        let fg = FieldGrid::square(g);
        let f = Field::from_fn(fg, FieldKind::Normalized, |_, _| Complex64::new(1.0, 0.0));
        let un = to_unnormalized(&f).unwrap();
        // corner cells sit at x^2+y^2 = 3200, far past the exponent range
        assert!(un.saturated.contains(&(4, 4)));
        assert!(un.field.at(4, 4).norm() == f64::MAX);
        assert!(un.field.at(0, 0).norm().is_finite());
        assert!(!un.saturated.contains(&(0, 0)));
    }
}
