//! Centered sampling grids.
//!
//! Every axis in this crate is sampled symmetrically about 0: an odd number
//! of samples N = 2M+1 at positions n*spacing for n = -M..=M. Odd length is
//! mandatory so that the grid contains the exact point 0 (the gyrator and
//! NsLCT inverses read the tau = 0 row, and the centered DFT needs the
//! symmetric index range).

use crate::error::{Error, Result};

/// Relative tolerance for comparing spacings of grids that should coincide.
pub const GRID_REL_TOL: f64 = 1e-12;

/// A centered 1D sampling grid: `count` samples at `index * spacing`,
/// index running over -(count-1)/2 ..= (count-1)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleGrid {
    count: usize,
    spacing: f64,
}

/// Builds a centered grid, rejecting even lengths and nonpositive spacings.
pub fn make_centered_grid(count: usize, spacing: f64) -> Result<SampleGrid> {
    SampleGrid::centered(count, spacing)
}

impl SampleGrid {
    /// Same contract as [`make_centered_grid`].
    pub fn centered(count: usize, spacing: f64) -> Result<Self> {
        if count == 0 || count % 2 == 0 {
            return Err(Error::OddLengthRequired { count });
        }
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(Error::NonpositiveSpacing { spacing });
        }
        Ok(SampleGrid { count, spacing })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Largest centered index M = (N-1)/2.
    pub fn half(&self) -> i64 {
        (self.count as i64 - 1) / 2
    }

    /// Position of centered index `i` (i in -M..=M).
    pub fn position(&self, i: i64) -> f64 {
        i as f64 * self.spacing
    }

    /// Centered indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = i64> {
        let m = self.half();
        -m..=m
    }

    /// Sample positions in ascending order.
    pub fn positions(&self) -> impl Iterator<Item = f64> + '_ {
        self.indices().map(|i| self.position(i))
    }

    /// Half-width of the grid, position of the last sample.
    pub fn extent(&self) -> f64 {
        self.position(self.half())
    }

    /// True when the two grids agree in length and (to relative tolerance)
    /// in spacing. Spacings that come out of 2pi/(N*dt) chains differ by a
    /// few ulp from their nominal values, so bitwise equality is too strict.
    pub fn approx_eq(&self, other: &SampleGrid) -> bool {
        self.count == other.count
            && (self.spacing - other.spacing).abs()
                <= GRID_REL_TOL * self.spacing.max(other.spacing)
    }
}

/// A 2D grid as a pair of centered axes (x varies along rows, y along columns).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldGrid {
    pub x: SampleGrid,
    pub y: SampleGrid,
}

impl FieldGrid {
    pub fn new(x: SampleGrid, y: SampleGrid) -> Self {
        FieldGrid { x, y }
    }

    /// Square grid with the same axis on both coordinates.
    pub fn square(axis: SampleGrid) -> Self {
        FieldGrid { x: axis, y: axis }
    }

    pub fn len(&self) -> usize {
        self.x.count() * self.y.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn approx_eq(&self, other: &FieldGrid) -> bool {
        self.x.approx_eq(&other.x) && self.y.approx_eq(&other.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centered_grid_positions_span_symmetrically() {
        let g = make_centered_grid(255, 0.157).unwrap();
        assert_eq!(g.half(), 127);
        assert!((g.extent() - 19.939).abs() < 1e-12);
        assert!((g.position(-127) + 19.939).abs() < 1e-12);

        let g = make_centered_grid(127, 0.2224).unwrap();
        assert!((g.extent() - 14.0112).abs() < 1e-12);
        assert!((g.position(-63) + 14.0112).abs() < 1e-12);
    }

    #[test]
    fn degenerate_single_point_grid() {
        let g = make_centered_grid(1, 1.0).unwrap();
        assert_eq!(g.positions().collect::<Vec<_>>(), vec![0.0]);
    }

    #[test]
    fn even_count_rejected() {
        assert_eq!(
            make_centered_grid(128, 0.1).unwrap_err(),
            Error::OddLengthRequired { count: 128 }
        );
        assert_eq!(
            make_centered_grid(0, 0.1).unwrap_err(),
            Error::OddLengthRequired { count: 0 }
        );
    }

    #[test]
    fn bad_spacing_rejected() {
        assert!(matches!(
            make_centered_grid(11, 0.0),
            Err(Error::NonpositiveSpacing { .. })
        ));
        assert!(matches!(
            make_centered_grid(11, -0.5),
            Err(Error::NonpositiveSpacing { .. })
        ));
        assert!(matches!(
            make_centered_grid(11, f64::INFINITY),
            Err(Error::NonpositiveSpacing { .. })
        ));
    }

    #[test]
    fn approx_eq_tolerates_ulp_noise() {
        let a = make_centered_grid(255, 0.157).unwrap();
        let b = make_centered_grid(255, 0.157 * (1.0 + 1e-15)).unwrap();
        assert!(a.approx_eq(&b));
        let c = make_centered_grid(255, 0.158).unwrap();
        assert!(!a.approx_eq(&c));
    }
}
