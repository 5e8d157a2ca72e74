//! Hermite-Gaussian analysis / Laguerre-Gaussian synthesis.
//!
//! Any signal expands over the HG functions, s = sum_n shat_n HG_n, and the
//! normalized Bargmann transform maps every HG_n to LG_(0,n), so the output
//! is synthesized with the same coefficients. The 2D synthesis runs through
//! products of 1D functions,
//!
//! ```text
//! LG_(0,n)(x, y) = sum_k c[n,k] HG_k(x) HG_(n-k)(y),
//! c[n,k] = j^(n-k) 2^(-n/2) sqrt(binom(n, k)),
//! ```
//!
//! where |c\[n,k\]| is the Wigner small-d value d^(n/2)_(n/2-k, n/2)(pi/2).
//! In matrix form, with H the orthonormal discrete HG basis:
//! shat = H^T s, a banded coefficient matrix with entries
//! shat_(k+l) c[k+l, k] at (k, l), and S_NB = H S~ H^T.
//!
//! The discrete basis comes from sampling the continuous HG functions and
//! orthonormalizing with an ascending double-pass modified Gram-Schmidt.
//! Ascending order matters: high-order sampled HGs whose oscillatory region
//! spills past the grid are corrected against the well-sampled low orders,
//! never the other way around, so columns below the spill threshold keep
//! machine-level fidelity to the sampled functions (a symmetric/polar
//! orthonormalization mixes the ill-sampled tail into every column).
//!
//! Internal coefficient vectors live in discrete normalization (H^T applied
//! to raw samples, unit column norms); forward_hg/inverse_hg carry the
//! single sqrt(dt) factor that converts between those coefficients and
//! function values, so at the public surface fields and signals are plain
//! function samples throughout.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::factorial::ln_factorial;
use crate::field::{Field, FieldKind};
use crate::grid::{FieldGrid, SampleGrid};
use crate::signal::Signal;
use crate::special::sample_hg;

/// Residual 2-norm below which a sampled column is treated as linearly
/// dependent on its predecessors.
const RANK_TOL: f64 = 1e-10;

/// Wigner small-d function d^J_(M,M')(pi/2) for half-integer indices passed
/// in doubled form (two_j = 2J, ...). Evaluated by the factorial sum formula
/// with log-factorial stabilization; at beta = pi/2 every term carries the
/// common factor 2^(-J).
pub fn wigner_d_pi2(two_j: i64, two_m: i64, two_mp: i64) -> Result<f64> {
    if two_j < 0
        || two_m.abs() > two_j
        || two_mp.abs() > two_j
        || (two_j - two_m) % 2 != 0
        || (two_j - two_mp) % 2 != 0
    {
        return Err(Error::InvalidWignerIndices { two_j, two_m, two_mp });
    }
    // wiki convention d^j_(m', m): m' = M, m = M'
    let j_p_mp = (two_j + two_m) / 2; // j + m'
    let j_m_mp = (two_j - two_m) / 2; // j - m'
    let j_p_m = (two_j + two_mp) / 2; // j + m
    let j_m_m = (two_j - two_mp) / 2; // j - m
    let ln_pre = 0.5
        * (ln_factorial(j_p_mp as usize)
            + ln_factorial(j_m_mp as usize)
            + ln_factorial(j_p_m as usize)
            + ln_factorial(j_m_m as usize));
    let ln_half = 0.5f64.ln();
    let j = two_j as f64 / 2.0;

    let s_min = 0.max(j_p_m - j_p_mp); // max(0, m - m')
    let s_max = j_p_m.min(j_m_mp);
    let mut sum = 0.0f64;
    for s in s_min..=s_max {
        let mmp_s = (j_p_mp - j_p_m) + s; // m' - m + s
        let ln_den = ln_factorial((j_p_m - s) as usize)
            + ln_factorial(s as usize)
            + ln_factorial(mmp_s as usize)
            + ln_factorial((j_m_mp - s) as usize);
        let sign = if mmp_s % 2 == 0 { 1.0 } else { -1.0 };
        // every term carries cos^a sin^b (pi/4) with a + b = 2j, i.e. (1/2)^j
        sum += sign * (ln_pre - ln_den + j * ln_half).exp();
    }
    Ok(sum)
}

/// Coupling coefficient c\[n,k\] = j^(n-k) 2^(-n/2) sqrt(binom(n,k)) linking
/// the 1D HG expansion to the 2D HG product synthesis.
pub fn coupling_coefficient(n: usize, k: usize) -> Result<Complex64> {
    if k > n {
        return Err(Error::CouplingIndex { n, k });
    }
    let ln_binom = ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
    let mag = (0.5 * ln_binom + (n as f64) * FRAC_1_SQRT_2.ln()).exp();
    Ok(unit_power_of_j(n - k) * mag)
}

fn unit_power_of_j(e: usize) -> Complex64 {
    match e % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Triangular table of coupling coefficients for 0 <= k <= n <= max_order.
#[derive(Debug, Clone)]
pub struct CouplingTable {
    max_order: usize,
    coeffs: Vec<Complex64>, // row n starts at n(n+1)/2
}

impl CouplingTable {
    pub fn new(max_order: usize) -> Self {
        let mut coeffs = Vec::with_capacity((max_order + 1) * (max_order + 2) / 2);
        for n in 0..=max_order {
            for k in 0..=n {
                coeffs.push(coupling_coefficient(n, k).expect("k <= n by construction"));
            }
        }
        CouplingTable { max_order, coeffs }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn get(&self, n: usize, k: usize) -> Result<Complex64> {
        if k > n || n > self.max_order {
            return Err(Error::CouplingIndex { n, k });
        }
        Ok(self.coeffs[n * (n + 1) / 2 + k])
    }

    /// sum_k |c\[n,k\]|^2, which is 1 for every n (the change of basis from
    /// 1D HG coefficients to 2D HG products is unitary row by row).
    pub fn row_energy(&self, n: usize) -> Result<f64> {
        if n > self.max_order {
            return Err(Error::CouplingIndex { n, k: 0 });
        }
        Ok(self.coeffs[n * (n + 1) / 2..(n + 1) * (n + 2) / 2]
            .iter()
            .map(|c| c.norm_sqr())
            .sum())
    }
}

/// Orthonormal discrete Hermite-Gaussian basis over a centered grid.
/// Column n (unit 2-norm, n sign changes, positive overlap with the
/// sampled HG_n) approximates sample_hg(n) * sqrt(dt).
#[derive(Debug, Clone)]
pub struct HGBasis {
    grid: SampleGrid,
    // column-major: column n occupies [n*N, (n+1)*N)
    matrix: Vec<f64>,
}

/// Builds the basis by sampling HG_0..HG_(N-1) and orthonormalizing with an
/// ascending double-pass modified Gram-Schmidt.
pub fn build_hg_basis(grid: &SampleGrid) -> Result<HGBasis> {
    let n = grid.count();
    let sqrt_dt = grid.spacing().sqrt();
    let mut matrix = vec![0.0f64; n * n];
    for order in 0..n {
        let sampled = sample_hg(order, grid)?;
        let mut v: Vec<f64> = sampled.samples().iter().map(|c| c.re * sqrt_dt).collect();
        for _ in 0..2 {
            for k in 0..order {
                let col = &matrix[k * n..(k + 1) * n];
                let dot: f64 = col.iter().zip(&v).map(|(a, b)| a * b).sum();
                for (vi, ci) in v.iter_mut().zip(col) {
                    *vi -= dot * ci;
                }
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < RANK_TOL {
            return Err(Error::RankDeficient { order });
        }
        for (dst, vi) in matrix[order * n..(order + 1) * n].iter_mut().zip(&v) {
            *dst = vi / norm;
        }
    }
    Ok(HGBasis { grid: *grid, matrix })
}

impl HGBasis {
    pub fn grid(&self) -> &SampleGrid {
        &self.grid
    }

    pub fn size(&self) -> usize {
        self.grid.count()
    }

    /// Column of mode `order` (length N, unit 2-norm).
    pub fn column(&self, order: usize) -> &[f64] {
        let n = self.size();
        &self.matrix[order * n..(order + 1) * n]
    }

    /// Largest deviation of H^T H from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let n = self.size();
        let mut worst = 0.0f64;
        for a in 0..n {
            let ca = self.column(a);
            for b in a..n {
                let dot: f64 = ca.iter().zip(self.column(b)).map(|(x, y)| x * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Analysis coefficients shat = H^T s, an exact matrix-vector product on the
/// raw samples; the 2-norm of shat equals the 2-norm of the samples up to
/// rounding.
pub fn hg_coefficients(signal: &Signal, basis: &HGBasis) -> Result<Vec<Complex64>> {
    if !signal.grid().approx_eq(basis.grid()) {
        return Err(Error::GridMismatch);
    }
    let n = basis.size();
    let mut out = Vec::with_capacity(n);
    for mode in 0..n {
        let col = basis.column(mode);
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, s) in col.iter().zip(signal.samples()) {
            acc += s * *c;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Forward normalized Bargmann transform via HG analysis and LG synthesis;
/// output grid dx = dy = dt, N x N.
pub fn forward_hg(signal: &Signal, basis: &HGBasis) -> Result<Field> {
    let shat = hg_coefficients(signal, basis)?;
    let n = basis.size();
    let table = CouplingTable::new(n - 1);

    // banded coefficient matrix: entry (k, l) = shat_(k+l) c[k+l, k]
    let mut st = vec![Complex64::new(0.0, 0.0); n * n];
    for total in 0..n {
        for k in 0..=total {
            st[k * n + (total - k)] = shat[total] * table.get(total, k)?;
        }
    }

    let values = sandwich(&basis.matrix, &st, n);
    let scale = basis.grid().spacing().sqrt().recip();
    let grid = FieldGrid::square(*basis.grid());
    Field::new(
        grid,
        values.into_iter().map(|v| v * scale).collect(),
        FieldKind::Normalized,
    )
}

/// Inverse transform: project the field back onto the 2D HG products, read
/// each shat_n by least squares over the anti-diagonal k + l = n (for exact
/// fields all entries agree; averaging damps rounding), then resynthesize
/// s = H shat.
pub fn inverse_hg(field: &Field, basis: &HGBasis) -> Result<Signal> {
    field.expect_kind(FieldKind::Normalized)?;
    let n = basis.size();
    if field.nx() != n
        || field.ny() != n
        || !field.grid().x.approx_eq(basis.grid())
        || !field.grid().y.approx_eq(basis.grid())
    {
        return Err(Error::GridMismatch);
    }
    let table = CouplingTable::new(n - 1);

    let st = sandwich_transposed(&basis.matrix, field.values(), n);
    let scale = basis.grid().spacing().sqrt();

    let mut shat = vec![Complex64::new(0.0, 0.0); n];
    for total in 0..n {
        let mut num = Complex64::new(0.0, 0.0);
        let mut den = 0.0f64;
        for k in 0..=total {
            let c = table.get(total, k)?;
            num += c.conj() * st[k * n + (total - k)] * scale;
            den += c.norm_sqr();
        }
        shat[total] = num / den;
    }

    let mut samples = vec![Complex64::new(0.0, 0.0); n];
    for mode in 0..n {
        let col = basis.column(mode);
        let coef = shat[mode];
        for (dst, h) in samples.iter_mut().zip(col) {
            *dst += coef * *h;
        }
    }
    Signal::new(*basis.grid(), samples)
}

/// H * M * H^T for real H (column-major) and complex M (row-major).
fn sandwich(h: &[f64], m: &[Complex64], n: usize) -> Vec<Complex64> {
    // tmp = H * M: tmp[p][l] = sum_k H[p,k] M[k][l]; H column-major means
    // H[p,k] = h[k*n + p].
    let mut tmp = vec![Complex64::new(0.0, 0.0); n * n];
    for k in 0..n {
        let col = &h[k * n..(k + 1) * n];
        let row = &m[k * n..(k + 1) * n];
        for p in 0..n {
            let hp = col[p];
            if hp == 0.0 {
                continue;
            }
            let dst = &mut tmp[p * n..(p + 1) * n];
            for (d, v) in dst.iter_mut().zip(row) {
                *d += v * hp;
            }
        }
    }
    // out[p][q] = sum_l tmp[p][l] H[q,l]
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for l in 0..n {
        let col = &h[l * n..(l + 1) * n];
        for p in 0..n {
            let t = tmp[p * n + l];
            if t.re == 0.0 && t.im == 0.0 {
                continue;
            }
            let dst = &mut out[p * n..(p + 1) * n];
            for (d, hq) in dst.iter_mut().zip(col) {
                *d += t * *hq;
            }
        }
    }
    out
}

/// H^T * M * H for real H (column-major) and complex M (row-major).
fn sandwich_transposed(h: &[f64], m: &[Complex64], n: usize) -> Vec<Complex64> {
    // tmp[k][q] = sum_p H[p,k] M[p][q]
    let mut tmp = vec![Complex64::new(0.0, 0.0); n * n];
    for k in 0..n {
        let col = &h[k * n..(k + 1) * n];
        let dst = &mut tmp[k * n..(k + 1) * n];
        for p in 0..n {
            let hp = col[p];
            if hp == 0.0 {
                continue;
            }
            let row = &m[p * n..(p + 1) * n];
            for (d, v) in dst.iter_mut().zip(row) {
                *d += v * hp;
            }
        }
    }
    // out[k][l] = sum_q tmp[k][q] H[q,l]
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for k in 0..n {
        let row = &tmp[k * n..(k + 1) * n];
        let dst = &mut out[k * n..(k + 1) * n];
        for l in 0..n {
            let col = &h[l * n..(l + 1) * n];
            let mut acc = Complex64::new(0.0, 0.0);
            for (v, hq) in row.iter().zip(col) {
                acc += v * *hq;
            }
            dst[l] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_centered_grid;
    use crate::metric::Metric;
    use crate::special::sample_lg0;

    fn grid_127() -> SampleGrid {
        make_centered_grid(127, 0.2224).unwrap()
    }

    fn sign_changes(col: &[f64]) -> usize {
        let peak = col.iter().fold(0.0f64, |a, b| a.max(b.abs()));
        let mut count = 0;
        let mut last = 0.0f64;
        for &v in col {
            if v.abs() <= 1e-12 * peak {
                continue;
            }
            if last != 0.0 && v.signum() != last.signum() {
                count += 1;
            }
            last = v;
        }
        count
    }

    #[test]
    fn wigner_examples() {
        assert_eq!(wigner_d_pi2(0, 0, 0).unwrap(), 1.0);
        let d = wigner_d_pi2(1, 1, 1).unwrap(); // J = M = M' = 1/2
        assert!((d - (std::f64::consts::PI / 4.0).cos()).abs() < 1e-15);
        assert!(wigner_d_pi2(1, 3, 1).is_err());
        assert!(wigner_d_pi2(2, 1, 0).is_err()); // J - M not an integer
        assert!(wigner_d_pi2(-2, 0, 0).is_err());
    }

    #[test]
    fn wigner_magnitudes_match_coupling() {
        for n in 0..=30i64 {
            for k in 0..=n {
                let d = wigner_d_pi2(n, n - 2 * k, n).unwrap();
                let c = coupling_coefficient(n as usize, k as usize).unwrap();
                assert!(
                    (d.abs() - c.norm()).abs() <= 1e-12,
                    "n={n} k={k} d={d} |c|={}",
                    c.norm()
                );
            }
        }
    }

    #[test]
    fn coupling_examples() {
        let c00 = coupling_coefficient(0, 0).unwrap();
        assert_eq!(c00, Complex64::new(1.0, 0.0));
        let c10 = coupling_coefficient(1, 0).unwrap();
        assert!((c10 - Complex64::new(0.0, FRAC_1_SQRT_2)).norm() < 1e-15);
        let c21 = coupling_coefficient(2, 1).unwrap();
        assert!((c21 - Complex64::new(0.0, FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!(coupling_coefficient(3, 4).is_err());
    }

    #[test]
    fn coupling_table_invariants() {
        let table = CouplingTable::new(126);
        // magnitudes against exact u128 binomials
        for n in (0..=126).step_by(21) {
            for k in 0..=n {
                let binom = exact_binom(n, k);
                let expect = 2.0f64.powf(-(n as f64) / 2.0) * binom.sqrt();
                let got = table.get(n, k).unwrap().norm();
                assert!(
                    (got - expect).abs() <= 1e-12 * expect,
                    "n={n} k={k} got {got:e} expect {expect:e}"
                );
            }
            let e = table.row_energy(n).unwrap();
            assert!((e - 1.0).abs() <= 1e-10, "n={n} energy {e}");
        }
    }

    fn exact_binom(n: usize, k: usize) -> f64 {
        // Pascal row in f64: pure additions of positive terms, relative error
        // bounded by ~n*eps, independent of the log-factorial route.
        let mut row = vec![0.0f64; n + 1];
        row[0] = 1.0;
        for m in 1..=n {
            for i in (1..=m).rev() {
                row[i] += row[i - 1];
            }
        }
        row[k]
    }

    #[test]
    fn basis_structure() {
        let g = grid_127();
        let basis = build_hg_basis(&g).unwrap();
        assert!(basis.orthonormality_defect() <= 1e-10);

        // column 0 against the sampled HG_0 (both unit vectors up to dt)
        let hg0 = sample_hg(0, &g).unwrap();
        let norm = hg0.samples().iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        let corr: f64 = basis
            .column(0)
            .iter()
            .zip(hg0.samples())
            .map(|(a, b)| a * b.re / norm)
            .sum();
        assert!(corr >= 0.9999, "corr {corr}");

        assert_eq!(sign_changes(basis.column(1)), 1);
        for n in [0usize, 5, 33, 80, 126] {
            assert_eq!(sign_changes(basis.column(n)), n, "column {n}");
        }

        // sign convention: positive overlap with the sampled function
        for n in [0usize, 7, 60, 120] {
            let hg = sample_hg(n, &g).unwrap();
            let ip: f64 = basis
                .column(n)
                .iter()
                .zip(hg.samples())
                .map(|(a, b)| a * b.re)
                .sum();
            assert!(ip > 0.0, "column {n} overlap {ip}");
        }
    }

    #[test]
    fn basis_rank_deficiency_detected() {
        // a grid far too narrow to hold 31 modes
        let g = make_centered_grid(31, 0.02).unwrap();
        assert!(matches!(
            build_hg_basis(&g),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn coefficients_pick_out_basis_columns() {
        let g = make_centered_grid(63, 0.25).unwrap();
        let basis = build_hg_basis(&g).unwrap();
        let col3 = Signal::new(
            g,
            basis.column(3).iter().map(|v| Complex64::new(*v, 0.0)).collect(),
        )
        .unwrap();
        let shat = hg_coefficients(&col3, &basis).unwrap();
        for (i, c) in shat.iter().enumerate() {
            let target = if i == 3 { 1.0 } else { 0.0 };
            assert!((c - Complex64::new(target, 0.0)).norm() <= 1e-12, "i={i}");
        }

        let zero = hg_coefficients(&Signal::zeros(g), &basis).unwrap();
        assert!(zero.iter().all(|c| c.norm() == 0.0));

        // norm preservation
        let s = crate::signal::make_test_signal(&g);
        let shat = hg_coefficients(&s, &basis).unwrap();
        let n1 = s.samples().iter().map(|v| v.norm_sqr()).sum::<f64>();
        let n2 = shat.iter().map(|v| v.norm_sqr()).sum::<f64>();
        assert!((n1 - n2).abs() <= 1e-13 * n1);

        let other = make_centered_grid(63, 0.3).unwrap();
        assert!(hg_coefficients(&Signal::zeros(other), &basis).is_err());
    }

    #[test]
    fn forward_maps_hg_to_lg() {
        let g = grid_127();
        let basis = build_hg_basis(&g).unwrap();
        for n in [3usize, 40] {
            let s = sample_hg(n, &g).unwrap();
            let f = forward_hg(&s, &basis).unwrap();
            let nm = Metric::fields(&sample_lg0(n, f.grid()), &f).unwrap().nmse;
            assert!(nm <= 1e-6, "n={n} nmse {nm:e}");
        }
        // a pure basis column maps to the sampled LG of the same order
        let col60 = Signal::new(
            g,
            basis.column(60).iter().map(|v| Complex64::new(*v, 0.0)).collect(),
        )
        .unwrap();
        let f = forward_hg(&col60, &basis).unwrap();
        // basis columns carry discrete (unit 2-norm) scaling, LG samples are
        // function values: compare against sqrt(dt)-scaled LG
        let lg = sample_lg0(60, f.grid()).scale(Complex64::new(g.spacing().sqrt(), 0.0));
        let nm = Metric::fields(&lg, &f).unwrap().nmse;
        assert!(nm <= 1e-6, "column-60 nmse {nm:e}");

        let z = forward_hg(&Signal::zeros(g), &basis).unwrap();
        assert!(z.values().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn matrix_path_equals_lg_synthesis_and_stays_in_span() {
        let n = 63usize;
        let g = make_centered_grid(n, 0.32).unwrap();
        let basis = build_hg_basis(&g).unwrap();
        let s = crate::signal::make_test_signal(&g);
        let f = forward_hg(&s, &basis).unwrap();

        // direct synthesis sum_n shat_n * LG_n with discrete LGs built from
        // the same coupling expansion
        let shat = hg_coefficients(&s, &basis).unwrap();
        let table = CouplingTable::new(n - 1);
        let scale = g.spacing().sqrt().recip();
        let mut synth = vec![Complex64::new(0.0, 0.0); n * n];
        for total in 0..n {
            for k in 0..=total {
                let coef = shat[total] * table.get(total, k).unwrap() * scale;
                let cx = basis.column(k);
                let cy = basis.column(total - k);
                for p in 0..n {
                    if cx[p] == 0.0 {
                        continue;
                    }
                    let w = coef * cx[p];
                    for q in 0..n {
                        synth[p * n + q] += w * cy[q];
                    }
                }
            }
        }
        let nm = Metric::between(&synth, f.values()).unwrap().nmse;
        assert!(nm <= 1e-20, "synthesis mismatch {nm:e}");

        // projecting onto the discrete LG span changes the output by ~rounding
        let mut projected = vec![Complex64::new(0.0, 0.0); n * n];
        for total in 0..n {
            // inner product of the field with discrete LG_total
            let mut ip = Complex64::new(0.0, 0.0);
            let mut lg = vec![Complex64::new(0.0, 0.0); n * n];
            for k in 0..=total {
                let coef = table.get(total, k).unwrap();
                let cx = basis.column(k);
                let cy = basis.column(total - k);
                for p in 0..n {
                    if cx[p] == 0.0 {
                        continue;
                    }
                    let w = coef * cx[p];
                    for q in 0..n {
                        lg[p * n + q] += w * cy[q];
                    }
                }
            }
            for (l, v) in lg.iter().zip(f.values()) {
                ip += l.conj() * v;
            }
            for (dst, l) in projected.iter_mut().zip(&lg) {
                *dst += ip * l;
            }
        }
        let num: f64 = projected
            .iter()
            .zip(f.values())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        let den: f64 = f.values().iter().map(|v| v.norm_sqr()).sum();
        assert!((num / den).sqrt() <= 1e-10, "span deviation {:e}", (num / den).sqrt());
    }

    #[test]
    fn inverse_recovers_signal_and_coefficients() {
        let g = grid_127();
        let basis = build_hg_basis(&g).unwrap();
        let s = crate::signal::make_test_signal(&g);
        let f = forward_hg(&s, &basis).unwrap();
        let back = inverse_hg(&f, &basis).unwrap();
        let nm = Metric::signals(&s, &back).unwrap().nmse;
        assert!(nm <= 1e-20, "roundtrip nmse {nm:e}");

        // analytic LG field concentrates on mode n
        for n in [0usize, 6] {
            let lg = sample_lg0(n, &FieldGrid::square(g));
            let rec = inverse_hg(&lg, &basis).unwrap();
            let nm = Metric::signals(&sample_hg(n, &g).unwrap(), &rec).unwrap().nmse;
            assert!(nm <= 1e-6, "n={n} nmse {nm:e}");
            let shat = hg_coefficients(&rec, &basis).unwrap();
            let total: f64 = shat.iter().map(|c| c.norm_sqr()).sum();
            assert!(shat[n].norm_sqr() / total >= 1.0 - 1e-6, "n={n}");
        }

        let z = inverse_hg(&Field::zeros(FieldGrid::square(g), FieldKind::Normalized), &basis)
            .unwrap();
        assert!(z.samples().iter().all(|v| v.norm() == 0.0));
    }
}
