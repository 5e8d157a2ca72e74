//! 2D nonseparable linear canonical transform with complex symplectic
//! parameter matrices.
//!
//! For a 4x4 symplectic M = (A, B; C, D) acting on t = (t, tau) with output
//! z = (x, y):
//!
//! ```text
//! B != 0:  (2pi sqrt(-det B))^(-1) Int e^((j/2)(z^T D B^(-1) z
//!            - 2 t^T B^(-1) z + t^T B^(-1) A t)) s(t) dt
//! B  = 0:  sqrt(det D) e^((j/2) t^T C D^T t) s(D^T t)
//! ```
//!
//! The B != 0 branch runs through the CM-CC-CM factorization
//! C1 = B^(-1)(A - I), C2 = (D - I) B^(-1), which recomposes to M exactly
//! as block matrices. The normalized Bargmann transform is the single
//! matrix M_NB = M_(-pi/4) M_G — the gyrator rotation with the Gaussian
//! embedding folded into the input-side chirp — applied to the signal
//! cloned along tau, scaled by pi^(-1/4).
//!
//! The inverse uses M_NB^(-1) = (D^T, -B^T; -C^T, A^T) restricted to the
//! tau = 0 output row, where the final chirp stage (whose full-plane
//! envelope e^(+tau^2/2) grows) is exactly 1. The general `nslct_apply`
//! deliberately rejects growing chirp stages, so matrices like M_NB^(-1)
//! are only evaluated through the row-restricted inverse.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind};
use crate::grid::FieldGrid;
use crate::mat2::CMat2;
use crate::signal::Signal;
use crate::spectral::{apply_cm_cc_cm, apply_cm_cc_row0, ChirpMatrix2};

/// Tolerance for the symplectic identity M J M^T = J.
pub const SYMPLECTIC_TOL: f64 = 1e-12;

/// 4x4 complex parameter matrix in 2x2 blocks (A, B; C, D).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamMatrix4 {
    pub a: CMat2,
    pub b: CMat2,
    pub c: CMat2,
    pub d: CMat2,
}

impl ParamMatrix4 {
    pub fn new(a: CMat2, b: CMat2, c: CMat2, d: CMat2) -> Self {
        ParamMatrix4 { a, b, c, d }
    }

    pub fn identity() -> Self {
        ParamMatrix4::new(CMat2::identity(), CMat2::zero(), CMat2::zero(), CMat2::identity())
    }

    /// Gyrator rotation matrix: A = D = cos(a) I, B = sin(a) E,
    /// C = -sin(a) E with E the antidiagonal unit matrix.
    pub fn gyrator(alpha: f64) -> Self {
        let (s, c) = alpha.sin_cos();
        let ci = CMat2::identity().scale(Complex64::new(c, 0.0));
        let e = CMat2::antidiag(Complex64::new(1.0, 0.0));
        ParamMatrix4::new(ci, e.scale(Complex64::new(s, 0.0)), e.scale(Complex64::new(-s, 0.0)), ci)
    }

    /// Gaussian mask matrix M_G: multiplies the field by e^(-tau^2/2)
    /// through the B = 0 branch (C = diag(0, j), everything else identity).
    pub fn gaussian_mask() -> Self {
        let mut c = CMat2::zero();
        c.m[1][1] = Complex64::new(0.0, 1.0);
        ParamMatrix4::new(CMat2::identity(), CMat2::zero(), c, CMat2::identity())
    }

    /// The normalized-Bargmann matrix M_NB = M_(-pi/4) * M_G in closed form.
    pub fn bargmann() -> Self {
        let r = FRAC_1_SQRT_2;
        let c = Complex64::from;
        let a = CMat2::new(c(r), Complex64::new(0.0, -r), c(0.0), c(r));
        let b = CMat2::from_real(0.0, -r, -r, 0.0);
        let cc = CMat2::new(c(0.0), c(r), c(r), Complex64::new(0.0, r));
        let d = CMat2::from_real(r, 0.0, 0.0, r);
        ParamMatrix4::new(a, b, cc, d)
    }

    /// Chirp-multiplication embedding (I, 0; C, I).
    pub fn cm(c: &CMat2) -> Self {
        ParamMatrix4::new(CMat2::identity(), CMat2::zero(), *c, CMat2::identity())
    }

    /// Chirp-convolution embedding (I, B; 0, I).
    pub fn cc(b: &CMat2) -> Self {
        ParamMatrix4::new(CMat2::identity(), *b, CMat2::zero(), CMat2::identity())
    }

    pub fn mul(&self, o: &ParamMatrix4) -> Self {
        ParamMatrix4::new(
            self.a.mul(&o.a).add(&self.b.mul(&o.c)),
            self.a.mul(&o.b).add(&self.b.mul(&o.d)),
            self.c.mul(&o.a).add(&self.d.mul(&o.c)),
            self.c.mul(&o.b).add(&self.d.mul(&o.d)),
        )
    }

    /// Closed-form symplectic inverse (D^T, -B^T; -C^T, A^T).
    pub fn inverse(&self) -> Self {
        let neg = Complex64::new(-1.0, 0.0);
        ParamMatrix4::new(
            self.d.transpose(),
            self.b.transpose().scale(neg),
            self.c.transpose().scale(neg),
            self.a.transpose(),
        )
    }

    pub fn max_abs_diff(&self, o: &ParamMatrix4) -> f64 {
        self.a
            .max_abs_diff(&o.a)
            .max(self.b.max_abs_diff(&o.b))
            .max(self.c.max_abs_diff(&o.c))
            .max(self.d.max_abs_diff(&o.d))
    }

    pub fn max_abs(&self) -> f64 {
        self.a.max_abs().max(self.b.max_abs()).max(self.c.max_abs()).max(self.d.max_abs())
    }
}

/// Largest entry of M J M^T - J; zero for symplectic matrices.
pub fn symplectic_defect(m: &ParamMatrix4) -> f64 {
    // M J M^T = (A B^T - B A^T, A D^T - B C^T; C B^T - D A^T, C D^T - D C^T)
    let tl = m.a.mul(&m.b.transpose()).sub(&m.b.mul(&m.a.transpose()));
    let tr = m.a.mul(&m.d.transpose()).sub(&m.b.mul(&m.c.transpose()));
    let bl = m.c.mul(&m.b.transpose()).sub(&m.d.mul(&m.a.transpose()));
    let br = m.c.mul(&m.d.transpose()).sub(&m.d.mul(&m.c.transpose()));
    tl.max_abs()
        .max(tr.max_abs_diff(&CMat2::identity()))
        .max(bl.max_abs_diff(&CMat2::identity().scale(Complex64::new(-1.0, 0.0))))
        .max(br.max_abs())
}

/// True when M J M^T = J within 1e-12.
pub fn check_symplectic(m: &ParamMatrix4) -> bool {
    symplectic_defect(m) <= SYMPLECTIC_TOL
}

/// CM-CC-CM factorization of a symplectic matrix with invertible B:
/// C1 = B^(-1)(A - I), C2 = (D - I) B^(-1).
pub fn cmccm_decompose(m: &ParamMatrix4) -> Result<(ChirpMatrix2, CMat2, ChirpMatrix2)> {
    let scale = m.b.max_abs();
    if m.b.det().norm() <= 1e-14 * scale * scale || scale == 0.0 {
        return Err(Error::SingularConvolutionMatrix);
    }
    let b_inv = m.b.inverse();
    let c1 = ChirpMatrix2::new(b_inv.mul(&m.a.sub(&CMat2::identity())))?;
    let c2 = ChirpMatrix2::new(m.d.sub(&CMat2::identity()).mul(&b_inv))?;
    Ok((c1, m.b, c2))
}

fn b_is_zero(m: &ParamMatrix4) -> bool {
    m.b.max_abs() <= 1e-12 * m.max_abs().max(1.0)
}

/// Applies the 2D NsLCT with parameter matrix `m` to a field. Rejects
/// non-symplectic matrices; B = 0 requires D^T to map the sampling grid
/// onto itself (entries in {0, +-1}, one per row and column).
pub fn nslct_apply(field: &Field, m: &ParamMatrix4) -> Result<Field> {
    if !check_symplectic(m) {
        return Err(Error::NotSymplectic);
    }
    if b_is_zero(m) {
        return apply_b_zero(field, m);
    }
    let (c1, b, c2) = cmccm_decompose(m)?;
    apply_cm_cc_cm(field, &c1, &b, &c2)
}

fn apply_b_zero(field: &Field, m: &ParamMatrix4) -> Result<Field> {
    // D^T must be a signed permutation on the grid indices
    let dt = m.d.transpose();
    let mut idx = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let v = dt.m[i][j];
            if v.im.abs() > 1e-12 {
                return Err(Error::GridNotPreserved);
            }
            let r = v.re.round();
            if (v.re - r).abs() > 1e-12 || r.abs() > 1.0 {
                return Err(Error::GridNotPreserved);
            }
            idx[i][j] = r as i64;
        }
    }
    if (idx[0][0] != 0) == (idx[0][1] != 0) || (idx[1][0] != 0) == (idx[1][1] != 0) {
        return Err(Error::GridNotPreserved);
    }
    let swaps = idx[0][1] != 0;
    if swaps && !field.grid().x.approx_eq(&field.grid().y) {
        return Err(Error::GridNotPreserved);
    }

    // chirp factor e^((j/2) t^T (C D^T) t); symmetry and decay checked
    let chirp = ChirpMatrix2::new(m.c.mul(&dt))?;
    let root_det_d = m.d.det().sqrt();

    let (mx, my) = (field.grid().x.half(), field.grid().y.half());
    let mut out = Field::zeros(*field.grid(), field.kind());
    let (dx, dy) = (field.grid().x.spacing(), field.grid().y.spacing());
    for p in -mx..=mx {
        for q in -my..=my {
            let src_p = idx[0][0] * p + idx[0][1] * q;
            let src_q = idx[1][0] * p + idx[1][1] * q;
            let quad = chirp.entries().quad(p as f64 * dx, q as f64 * dy);
            let factor = Complex64::from_polar((-quad.im / 2.0).exp(), quad.re / 2.0);
            out.set(p, q, field.at(src_p, src_q) * factor * root_det_d);
        }
    }
    Ok(out)
}

/// Forward normalized Bargmann transform as a single NsLCT:
/// S_NB = pi^(-1/4) NsLCT_(M_NB){s(t, tau)} with s(t, tau) = s(t);
/// output grid dx = dy = dt.
pub fn forward_nslct(signal: &Signal) -> Result<Field> {
    let grid = FieldGrid::square(*signal.grid());
    let n = signal.grid().count();
    let mut values = Vec::with_capacity(n * n);
    for s in signal.samples() {
        values.extend(std::iter::repeat_n(*s, n));
    }
    let cloned = Field::new(grid, values, FieldKind::Plain)?;
    let out = nslct_apply(&cloned, &ParamMatrix4::bargmann())?;
    Ok(out
        .scale(Complex64::new(PI.powf(-0.25), 0.0))
        .with_kind(FieldKind::Normalized))
}

/// Inverse via M_NB^(-1), restricted to the tau = 0 output row where the
/// final (growing-envelope) chirp stage equals 1.
pub fn inverse_nslct(field: &Field) -> Result<Signal> {
    field.expect_kind(FieldKind::Normalized)?;
    if !field.grid().x.approx_eq(&field.grid().y) {
        return Err(Error::GridMismatch);
    }
    let m = ParamMatrix4::bargmann().inverse();
    if !check_symplectic(&m) {
        return Err(Error::NotSymplectic);
    }
    let b_inv = m.b.inverse();
    let c1 = ChirpMatrix2::new(b_inv.mul(&m.a.sub(&CMat2::identity())))?;
    let c2_xx = m.d.sub(&CMat2::identity()).mul(&b_inv).m[0][0];
    let row = apply_cm_cc_row0(field, &c1, &m.b, c2_xx)?;
    let scale = PI.powf(0.25);
    Signal::new(
        field.grid().x,
        row.into_iter().map(|v| v * scale).collect(),
    )
}
