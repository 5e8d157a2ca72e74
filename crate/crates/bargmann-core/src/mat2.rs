//! Small 2x2 complex matrix used for chirp parameters and symplectic blocks.

use num_complex::Complex64;

/// A 2x2 complex matrix in row-major order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat2 {
    pub m: [[Complex64; 2]; 2],
}

impl CMat2 {
    pub fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        CMat2 { m: [[m00, m01], [m10, m11]] }
    }

    pub fn from_real(m00: f64, m01: f64, m10: f64, m11: f64) -> Self {
        let c = Complex64::from;
        CMat2::new(c(m00), c(m01), c(m10), c(m11))
    }

    pub fn zero() -> Self {
        CMat2::from_real(0.0, 0.0, 0.0, 0.0)
    }

    pub fn identity() -> Self {
        CMat2::from_real(1.0, 0.0, 0.0, 1.0)
    }

    /// antidiag(a, a): zeros on the diagonal, `a` on both antidiagonal slots.
    pub fn antidiag(a: Complex64) -> Self {
        CMat2::new(Complex64::new(0.0, 0.0), a, a, Complex64::new(0.0, 0.0))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for row in &mut out.m {
            for v in row {
                *v *= s;
            }
        }
        out
    }

    pub fn add(&self, o: &CMat2) -> Self {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] += o.m[i][j];
            }
        }
        out
    }

    pub fn sub(&self, o: &CMat2) -> Self {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] -= o.m[i][j];
            }
        }
        out
    }

    pub fn mul(&self, o: &CMat2) -> Self {
        let mut out = CMat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[i][0] * o.m[0][j] + self.m[i][1] * o.m[1][j];
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        CMat2::new(self.m[0][0], self.m[1][0], self.m[0][1], self.m[1][1])
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Inverse; the caller is responsible for checking the determinant.
    pub fn inverse(&self) -> Self {
        let d = self.det();
        CMat2::new(
            self.m[1][1] / d,
            -self.m[0][1] / d,
            -self.m[1][0] / d,
            self.m[0][0] / d,
        )
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise difference magnitude.
    pub fn max_abs_diff(&self, o: &CMat2) -> f64 {
        self.sub(o).max_abs()
    }

    /// Quadratic form v^T M v for v = (a, b).
    pub fn quad(&self, a: f64, b: f64) -> Complex64 {
        self.m[0][0] * (a * a)
            + (self.m[0][1] + self.m[1][0]) * (a * b)
            + self.m[1][1] * (b * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrips() {
        let a = CMat2::new(
            Complex64::new(1.0, 0.5),
            Complex64::new(0.0, -1.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(0.5, 0.25),
        );
        let prod = a.mul(&a.inverse());
        assert!(prod.max_abs_diff(&CMat2::identity()) < 1e-14);
    }

    #[test]
    fn antidiag_squares_to_identity() {
        let e = CMat2::antidiag(Complex64::new(1.0, 0.0));
        assert!(e.mul(&e).max_abs_diff(&CMat2::identity()) == 0.0);
    }
}
