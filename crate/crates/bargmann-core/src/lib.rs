//! Normalized Bargmann transform toolkit.
//!
//! The normalized Bargmann transform maps a 1D signal s(t) to a 2D complex
//! field over z = x + jy,
//!
//! ```text
//! S_NB(x, y) = pi^(-3/4) Int e^(-x^2 - jxy + sqrt(2)(x + jy) t - t^2/2) s(t) dt,
//! ```
//!
//! a bounded, unitary cousin of the Bargmann transform. This crate computes
//! it (and its inverse) by five routes that share centered sampling grids:
//!
//! - [`direct`]: direct summation of the sampled kernel — the slow, simple
//!   reference every fast path is checked against;
//! - [`gabor`]: through the Gabor transform (Gaussian-window STFT) plus a
//!   pointwise phase, with two inversion routes;
//! - [`hermite`]: Hermite-Gaussian analysis / Laguerre-Gaussian synthesis in
//!   matrix form;
//! - [`gyrator`]: Gaussian embedding followed by a discrete gyrator transform
//!   built from chirp multiplications and a circular chirp convolution;
//! - [`nslct`]: a single 2D nonseparable linear canonical transform with a
//!   complex symplectic parameter matrix, CM-CC-CM decomposed.
//!
//! [`mod@bench`] reproduces the accuracy sweep, round-trip table, complexity
//! formulas and cross-method agreement used by the acceptance suite.

pub mod bench;
pub mod direct;
pub mod error;
mod factorial;
pub mod field;
pub mod gabor;
pub mod grid;
pub mod gyrator;
pub mod hermite;
pub mod mat2;
pub mod metric;
pub mod nslct;
pub mod signal;
pub mod special;
pub mod spectral;

pub use error::{Error, Result};
pub use field::{Field, FieldKind};
pub use grid::{make_centered_grid, FieldGrid, SampleGrid};
pub use metric::{nmse_fields, nmse_signals, Metric};
pub use signal::{make_test_signal, Signal};
pub use special::{sample_hg, sample_lg0};
