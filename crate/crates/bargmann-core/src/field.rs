//! Two-dimensional complex fields over centered (x, y) grids.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::FieldGrid;

/// Normalization semantics carried by a field.
///
/// The tag is preserved by arithmetic and changed only by explicit
/// conversion (`to_unnormalized`) or by the forward transforms stamping
/// their output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    /// Normalized Bargmann transform S_NB(x, y).
    Normalized,
    /// Unnormalized Bargmann transform S_B(x, y).
    Unnormalized,
    /// Gabor transform G(tau, omega).
    Gabor,
    /// A plain 2D signal with no normalization semantics (embedded inputs
    /// and chirp-pipeline intermediates). Never serialized.
    Plain,
}

impl FieldKind {
    pub fn name(&self) -> &'static str {
        match self {
            FieldKind::Normalized => "normalized",
            FieldKind::Unnormalized => "unnormalized",
            FieldKind::Gabor => "gabor",
            FieldKind::Plain => "plain",
        }
    }
}

/// An Nx x Ny complex matrix over a [`FieldGrid`]; element (p, q) sits at
/// (p*dx, q*dy). Stored row-major with the x index as the outer loop.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: FieldGrid,
    values: Vec<Complex64>,
    kind: FieldKind,
}

impl Field {
    pub fn new(grid: FieldGrid, values: Vec<Complex64>, kind: FieldKind) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                actual: values.len(),
            });
        }
        Ok(Field { grid, values, kind })
    }

    pub fn zeros(grid: FieldGrid, kind: FieldKind) -> Self {
        Field {
            values: vec![Complex64::new(0.0, 0.0); grid.len()],
            grid,
            kind,
        }
    }

    /// Builds a field by evaluating `f` at every grid position (x, y).
    pub fn from_fn(grid: FieldGrid, kind: FieldKind, mut f: impl FnMut(f64, f64) -> Complex64) -> Self {
        let mut values = Vec::with_capacity(grid.len());
        for x in grid.x.positions() {
            for y in grid.y.positions() {
                values.push(f(x, y));
            }
        }
        Field { grid, values, kind }
    }

    pub fn grid(&self) -> &FieldGrid {
        &self.grid
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn nx(&self) -> usize {
        self.grid.x.count()
    }

    pub fn ny(&self) -> usize {
        self.grid.y.count()
    }

    fn offset(&self, p: i64, q: i64) -> usize {
        let row = (p + self.grid.x.half()) as usize;
        let col = (q + self.grid.y.half()) as usize;
        row * self.ny() + col
    }

    /// Value at centered indices (p, q).
    pub fn at(&self, p: i64, q: i64) -> Complex64 {
        self.values[self.offset(p, q)]
    }

    pub fn set(&mut self, p: i64, q: i64, v: Complex64) {
        let idx = self.offset(p, q);
        self.values[idx] = v;
    }

    /// Returns a copy with a different kind tag (explicit conversion point).
    pub fn with_kind(mut self, kind: FieldKind) -> Self {
        self.kind = kind;
        self
    }

    /// Requires the field to carry `kind`, for inverse-transform preconditions.
    pub fn expect_kind(&self, kind: FieldKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::WrongFieldKind {
                expected: kind.name(),
                actual: self.kind.name(),
            });
        }
        Ok(())
    }

    /// Discrete energy dx*dy*sum |v|^2.
    pub fn energy(&self) -> f64 {
        let w = self.grid.x.spacing() * self.grid.y.spacing();
        w * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    /// Pointwise scaling; the kind tag rides along.
    pub fn scale(&self, factor: Complex64) -> Field {
        Field {
            grid: self.grid,
            values: self.values.iter().map(|v| v * factor).collect(),
            kind: self.kind,
        }
    }

    /// The row of values along x at y-index 0 (the tau = 0 slice). The grid
    /// is odd by construction, so the slice always exists.
    pub fn row_at_y0(&self) -> Vec<Complex64> {
        let m = self.grid.x.half();
        (-m..=m).map(|p| self.at(p, 0)).collect()
    }
}
