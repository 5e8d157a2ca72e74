//! Centered discrete Fourier transforms and chirp primitives.
//!
//! The centered forward DFT of a signal on spacing `d_in` is
//!
//! ```text
//! X[q] = d_in * sum_n x[n] e^(-j q d_out n d_in),   d_out * d_in = 2pi/N,
//! ```
//!
//! with n and q running over the symmetric index range -M..=M. The inverse
//! carries the 1/(2pi) convention, so inverse(forward(x)) = x. With the
//! compatibility constraint the kernel collapses to the plain DFT twiddle
//! e^(-j 2pi q n / N); centering is handled by exact index rotations around
//! the FFT (odd N makes the rotations exact, no phase ramps are rounded).
//!
//! Chirp multiplication scales a field pointwise by e^((j/2) z^T C z); chirp
//! convolution applies the kernel (2pi sqrt(-det B))^(-1) e^((j/2) t^T B^(-1) t)
//! through the spectral domain, where its Fourier image is exactly
//! e^(-(j/2) w^T B w) — the kernel normalization cancels against the Fresnel
//! integral, so no square-root branch survives in the implementation.

use std::cell::RefCell;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grid::{FieldGrid, SampleGrid};
use crate::mat2::CMat2;
use crate::signal::Signal;

/// Transform direction for the centered DFT pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Relative tolerance on the `d_in * d_out = 2pi/N` constraint.
const SPACING_REL_TOL: f64 = 1e-12;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn fft_in_place(buf: &mut [Complex64], direction: Direction) {
    PLANNER.with(|p| {
        let mut planner = p.borrow_mut();
        let fft = match direction {
            Direction::Forward => planner.plan_fft_forward(buf.len()),
            Direction::Inverse => planner.plan_fft_inverse(buf.len()),
        };
        fft.process(buf);
    });
}

/// Centered DFT of a buffer in centered order; `spacing_in` is the input
/// grid spacing. Scales by d_in (forward) or d_in/(2pi) (inverse).
fn centered_dft_buf(buf: &mut [Complex64], spacing_in: f64, direction: Direction) {
    let n = buf.len();
    let m = (n - 1) / 2;
    buf.rotate_left(m); // centered -> standard order
    fft_in_place(buf, direction);
    buf.rotate_left(m + 1); // standard -> centered order
    let scale = match direction {
        Direction::Forward => spacing_in,
        Direction::Inverse => spacing_in / TAU,
    };
    for v in buf.iter_mut() {
        *v *= scale;
    }
}

fn check_spacing(n: usize, spacing_in: f64, spacing_out: f64) -> Result<()> {
    let required = TAU / (n as f64 * spacing_in);
    if !(spacing_out.is_finite() && spacing_out > 0.0)
        || (spacing_out - required).abs() > SPACING_REL_TOL * required
    {
        return Err(Error::SpacingConstraint { required, actual: spacing_out });
    }
    Ok(())
}

/// Centered 1D DFT with an explicit output spacing, which must satisfy
/// `output_spacing * input_spacing = 2pi/N` to relative 1e-12.
pub fn centered_dft_1d(signal: &Signal, direction: Direction, output_spacing: f64) -> Result<Signal> {
    let n = signal.grid().count();
    check_spacing(n, signal.grid().spacing(), output_spacing)?;
    let mut buf = signal.samples().to_vec();
    centered_dft_buf(&mut buf, signal.grid().spacing(), direction);
    Signal::new(SampleGrid::centered(n, output_spacing)?, buf)
}

/// Centered 2D DFT, axis-wise, with the natural output spacings
/// 2pi/(N dx) and 2pi/(N dy). The kind tag rides along.
pub fn centered_dft_2d(field: &Field, direction: Direction) -> Result<Field> {
    let (nx, ny) = (field.nx(), field.ny());
    let (dx, dy) = (field.grid().x.spacing(), field.grid().y.spacing());
    let mut values = field.values().to_vec();

    // rows: transform along y (contiguous)
    for row in values.chunks_exact_mut(ny) {
        centered_dft_buf(row, dy, direction);
    }
    // columns: transform along x through a scratch buffer
    let mut col = vec![Complex64::new(0.0, 0.0); nx];
    for q in 0..ny {
        for p in 0..nx {
            col[p] = values[p * ny + q];
        }
        centered_dft_buf(&mut col, dx, direction);
        for p in 0..nx {
            values[p * ny + q] = col[p];
        }
    }

    let out_grid = FieldGrid::new(
        SampleGrid::centered(nx, TAU / (nx as f64 * dx))?,
        SampleGrid::centered(ny, TAU / (ny as f64 * dy))?,
    );
    Field::new(out_grid, values, field.kind())
}

/// Symmetric 2x2 chirp parameter with a non-growing Gaussian envelope.
///
/// Used multiplicatively as e^((j/2)(c11 x^2 + 2 c12 xy + c22 y^2)); the
/// imaginary part of the quadratic form must be positive semidefinite so the
/// factor magnitude e^(-Im(q)/2) never exceeds 1. Both properties are
/// checked at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChirpMatrix2 {
    entries: CMat2,
}

impl ChirpMatrix2 {
    pub fn new(entries: CMat2) -> Result<Self> {
        let scale = entries.max_abs().max(1.0);
        if entries.m[0][1].norm() > 0.0 || entries.m[1][0].norm() > 0.0 {
            let diff = (entries.m[0][1] - entries.m[1][0]).norm();
            if diff > 1e-12 * scale {
                return Err(Error::AsymmetricChirp);
            }
        }
        // store the exactly symmetric part
        let off = (entries.m[0][1] + entries.m[1][0]) * 0.5;
        let sym = CMat2::new(entries.m[0][0], off, off, entries.m[1][1]);
        let (a, b, d) = (sym.m[0][0].im, off.im, sym.m[1][1].im);
        let tol = 1e-12 * scale;
        if a < -tol || d < -tol || a * d - b * b < -tol * scale {
            return Err(Error::GrowingChirp);
        }
        Ok(ChirpMatrix2 { entries: sym })
    }

    pub fn zero() -> Self {
        ChirpMatrix2 { entries: CMat2::zero() }
    }

    /// antidiag(g, g) chirp, e^(j g x y) when used multiplicatively.
    pub fn antidiag(g: Complex64) -> Result<Self> {
        ChirpMatrix2::new(CMat2::antidiag(g))
    }

    pub fn entries(&self) -> &CMat2 {
        &self.entries
    }
}

/// Pointwise multiply by e^((j/2) z^T C z) over the field grid.
pub fn chirp_multiply_2d(field: &Field, c: &ChirpMatrix2) -> Field {
    let mut out = field.clone();
    let ny = field.ny();
    let xs: Vec<f64> = field.grid().x.positions().collect();
    let ys: Vec<f64> = field.grid().y.positions().collect();
    for (p, x) in xs.iter().enumerate() {
        for (q, y) in ys.iter().enumerate() {
            let quad = c.entries.quad(*x, *y);
            // e^((j/2)(qr + j qi)) = e^(-qi/2) e^(j qr/2)
            let factor = Complex64::from_polar((-quad.im / 2.0).exp(), quad.re / 2.0);
            out.values_mut()[p * ny + q] *= factor;
        }
    }
    out
}

/// Circular chirp convolution with kernel
/// (2pi sqrt(-det B))^(-1) e^((j/2) t^T B^(-1) t), realized in the spectral
/// domain with the kernel's analytic Fourier image e^(-(j/2) w^T B w).
pub fn chirp_convolve_2d(field: &Field, b: &CMat2) -> Result<Field> {
    let scale = b.max_abs();
    if b.det().norm() <= 1e-14 * scale * scale {
        return Err(Error::SingularConvolutionMatrix);
    }
    // only the symmetric part enters the quadratic form
    let off = (b.m[0][1] + b.m[1][0]) * 0.5;
    let sym = CMat2::new(b.m[0][0], off, off, b.m[1][1]);
    // the spectral factor magnitude is e^(Im(w^T B w)/2): reject growth
    let (a, bb, d) = (sym.m[0][0].im, off.im, sym.m[1][1].im);
    let tol = 1e-12 * scale.max(1.0);
    if a > tol || d > tol || (a * d - bb * bb) < -tol * scale.max(1.0) {
        return Err(Error::GrowingChirp);
    }

    let spectrum = centered_dft_2d(field, Direction::Forward)?;
    let mut spectrum = spectrum;
    let ny = spectrum.ny();
    let wx: Vec<f64> = spectrum.grid().x.positions().collect();
    let wy: Vec<f64> = spectrum.grid().y.positions().collect();
    for (p, u) in wx.iter().enumerate() {
        for (q, v) in wy.iter().enumerate() {
            let quad = sym.quad(*u, *v);
            let factor = Complex64::from_polar((quad.im / 2.0).exp(), -quad.re / 2.0);
            spectrum.values_mut()[p * ny + q] *= factor;
        }
    }
    let back = centered_dft_2d(&spectrum, Direction::Inverse)?;
    // rebuild on the exact input grid to avoid ulp drift from 2pi/(N d) chains
    Field::new(*field.grid(), back.values().to_vec(), field.kind())
}

/// CM - CC - CM pipeline: chirp multiply by `c1`, chirp convolve with `b`,
/// chirp multiply by `c2`. The composition realizes the LCT with block
/// matrix (I,0;C2,I)(I,B;0,I)(I,0;C1,I).
pub(crate) fn apply_cm_cc_cm(
    field: &Field,
    c1: &ChirpMatrix2,
    b: &CMat2,
    c2: &ChirpMatrix2,
) -> Result<Field> {
    let stage1 = chirp_multiply_2d(field, c1);
    let stage2 = chirp_convolve_2d(&stage1, b)?;
    Ok(chirp_multiply_2d(&stage2, c2))
}

/// Same pipeline restricted to the y = 0 output row: the final chirp
/// multiply is pointwise, so only its x^2 coefficient survives there. Saves
/// the full-grid final stage when only that row is consumed, and sidesteps
/// materializing a final chirp whose off-row envelope may grow.
pub(crate) fn apply_cm_cc_row0(
    field: &Field,
    c1: &ChirpMatrix2,
    b: &CMat2,
    c2_xx: Complex64,
) -> Result<Vec<Complex64>> {
    if c2_xx.im < -1e-12 * c2_xx.norm().max(1.0) {
        return Err(Error::GrowingChirp);
    }
    let stage1 = chirp_multiply_2d(field, c1);
    let stage2 = chirp_convolve_2d(&stage1, b)?;
    let mut row = stage2.row_at_y0();
    for (v, x) in row.iter_mut().zip(field.grid().x.positions()) {
        let quad = c2_xx * (x * x);
        *v *= Complex64::from_polar((-quad.im / 2.0).exp(), quad.re / 2.0);
    }
    Ok(row)
}
