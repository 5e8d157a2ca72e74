//! Benchmark harness: accuracy sweep, round-trip table, complexity
//! formulas and cross-method agreement.

use std::fmt;
use std::str::FromStr;

use crate::direct::{forward_direct, inverse_direct};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gabor::{forward_gabor, gabor_output_grid, inverse_gabor_1d, inverse_gabor_2d};
use crate::grid::{make_centered_grid, FieldGrid};
use crate::gyrator::{forward_gyrator, inverse_gyrator};
use crate::hermite::{build_hg_basis, forward_hg, inverse_hg};
use crate::metric::Metric;
use crate::nslct::{forward_nslct, inverse_nslct};
use crate::signal::Signal;
use crate::special::{sample_hg, sample_lg0};

/// Forward-transform evaluation paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Gabor,
    Hg,
    Gyrator,
    Nslct,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Direct,
        Method::Gabor,
        Method::Hg,
        Method::Gyrator,
        Method::Nslct,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Gabor => "gabor",
            Method::Hg => "hg",
            Method::Gyrator => "gyrator",
            Method::Nslct => "nslct",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Method::Direct),
            "gabor" => Ok(Method::Gabor),
            "hg" => Ok(Method::Hg),
            "gyrator" => Ok(Method::Gyrator),
            "nslct" => Ok(Method::Nslct),
            other => Err(Error::UnknownMethod { name: other.to_string() }),
        }
    }
}

/// Inverse-route selection for round trips; the Gabor method has two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundtripMethod {
    Direct,
    Gabor2d,
    Gabor1d,
    Hg,
    Gyrator,
    Nslct,
}

impl RoundtripMethod {
    pub const ALL: [RoundtripMethod; 6] = [
        RoundtripMethod::Direct,
        RoundtripMethod::Gabor2d,
        RoundtripMethod::Gabor1d,
        RoundtripMethod::Hg,
        RoundtripMethod::Gyrator,
        RoundtripMethod::Nslct,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RoundtripMethod::Direct => "direct",
            RoundtripMethod::Gabor2d => "gabor-2d",
            RoundtripMethod::Gabor1d => "gabor-1d",
            RoundtripMethod::Hg => "hg",
            RoundtripMethod::Gyrator => "gyrator",
            RoundtripMethod::Nslct => "nslct",
        }
    }
}

impl fmt::Display for RoundtripMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RoundtripMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(RoundtripMethod::Direct),
            "gabor" | "gabor-2d" => Ok(RoundtripMethod::Gabor2d),
            "gabor-1d" => Ok(RoundtripMethod::Gabor1d),
            "hg" => Ok(RoundtripMethod::Hg),
            "gyrator" => Ok(RoundtripMethod::Gyrator),
            "nslct" => Ok(RoundtripMethod::Nslct),
            other => Err(Error::UnknownMethod { name: other.to_string() }),
        }
    }
}

/// One accuracy-sweep cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub method: Method,
    pub order: usize,
    pub nmse: f64,
}

/// Forward-transforms sampled HG functions and measures the NMSE against
/// the sampled LG ground truth on each method's own output grid. The direct
/// method is evaluated on the Gabor grid, where the two are the identical
/// discrete sum; on the dt output grid the direct sum aliases along y for
/// higher orders and stops tracking the Gabor curve.
pub fn accuracy_sweep(
    methods: &[Method],
    orders: &[usize],
    n: usize,
    delta: f64,
) -> Result<Vec<SweepRow>> {
    let grid = make_centered_grid(n, delta)?;
    let square = FieldGrid::square(grid);
    let gabor_grid = gabor_output_grid(&grid)?;
    for &order in orders {
        if order >= n {
            return Err(Error::ParameterOutOfRange { what: "order", value: order, max: n - 1 });
        }
    }
    let basis = if methods.contains(&Method::Hg) {
        Some(build_hg_basis(&grid)?)
    } else {
        None
    };

    let mut rows = Vec::with_capacity(methods.len() * orders.len());
    for &method in methods {
        for &order in orders {
            let input = sample_hg(order, &grid)?;
            let (field, reference) = match method {
                Method::Direct => (
                    forward_direct(&input, &gabor_grid)?,
                    sample_lg0(order, &gabor_grid),
                ),
                Method::Gabor => {
                    let f = forward_gabor(&input)?;
                    let r = sample_lg0(order, f.grid());
                    (f, r)
                }
                Method::Hg => (
                    forward_hg(&input, basis.as_ref().expect("basis built above"))?,
                    sample_lg0(order, &square),
                ),
                Method::Gyrator => (forward_gyrator(&input)?, sample_lg0(order, &square)),
                Method::Nslct => (forward_nslct(&input)?, sample_lg0(order, &square)),
            };
            let nmse = Metric::fields(&reference, &field)?.nmse;
            rows.push(SweepRow { method, order, nmse });
        }
    }
    Ok(rows)
}

/// inverse(forward(signal)) error for one method; both values of the
/// metric are returned (nmse is NaN for a zero-energy input, mse is 0
/// whenever recovery is exact).
pub fn roundtrip(method: RoundtripMethod, signal: &Signal) -> Result<Metric> {
    let recovered = match method {
        RoundtripMethod::Direct => {
            let field = forward_direct(signal, &FieldGrid::square(*signal.grid()))?;
            inverse_direct(&field, signal.grid())?
        }
        RoundtripMethod::Gabor2d => {
            let field = forward_gabor(signal)?;
            inverse_gabor_2d(&field, signal.grid())?
        }
        RoundtripMethod::Gabor1d => {
            let field = forward_gabor(signal)?;
            inverse_gabor_1d(&field)?
        }
        RoundtripMethod::Hg => {
            let basis = build_hg_basis(signal.grid())?;
            let field = forward_hg(signal, &basis)?;
            inverse_hg(&field, &basis)?
        }
        RoundtripMethod::Gyrator => {
            let field = forward_gyrator(signal)?;
            inverse_gyrator(&field)?
        }
        RoundtripMethod::Nslct => {
            let field = forward_nslct(signal)?;
            inverse_nslct(&field)?
        }
    };
    Metric::signals(signal, &recovered)
}

/// NMSE of the round trip (see [`roundtrip`]).
pub fn roundtrip_nmse(method: RoundtripMethod, signal: &Signal) -> Result<f64> {
    Ok(roundtrip(method, signal)?.nmse)
}

/// Predicted number of real multiplications per method for N input samples
/// and an N x N output. Exact integer arithmetic whenever every term is an
/// integer (always for direct/hg; powers of two for the log-bearing ones).
pub fn predicted_real_mults(method: Method, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::ParameterOutOfRange { what: "n", value: n as usize, max: usize::MAX });
    }
    let nf = n as f64;
    let n2 = nf * nf;
    let log2 = nf.log2();
    let value = match method {
        Method::Direct => 4.0 * n2 * nf,
        Method::Gabor => 2.0 * n2 * log2 + 6.0 * n2,
        Method::Hg => 3.0 * n2 * nf + 5.0 * n2 + 2.0 * nf,
        Method::Gyrator => 8.0 * n2 * log2 + 14.0 * n2,
        Method::Nslct => 8.0 * n2 * log2 + 12.0 * n2,
    };
    Ok(value.round() as u64)
}

/// Pairwise agreement of the forward methods on interior cells.
///
/// Methods share a grid in two groups: direct and gabor on the Gabor grid
/// (dt/sqrt(2)); direct, hg, gyrator and nslct on the dt grid. The direct
/// method is computed on both, so it pairs with everything; gabor pairs
/// only with direct. Pairs without a common grid carry no entry.
///
/// Entries are a symmetrized NMSE (difference energy over the mean of the
/// two field energies) over the interior region, excluding the outer 5%
/// ring of each axis where truncation dominates.
#[derive(Debug, Clone)]
pub struct CompareMatrix {
    entries: [[Option<f64>; 5]; 5],
}

impl CompareMatrix {
    /// Value for an ordered pair of methods (symmetric).
    pub fn get(&self, a: Method, b: Method) -> Option<f64> {
        self.entries[method_index(a)][method_index(b)]
    }

    /// All defined upper-triangle entries (including the zero diagonal) in
    /// a deterministic order.
    pub fn rows(&self) -> Vec<(Method, Method, f64)> {
        let mut out = Vec::new();
        for (i, a) in Method::ALL.iter().enumerate() {
            for (j, b) in Method::ALL.iter().enumerate().skip(i) {
                if let Some(v) = self.entries[i][j] {
                    out.push((*a, *b, v));
                }
            }
        }
        out
    }
}

fn method_index(m: Method) -> usize {
    Method::ALL.iter().position(|x| *x == m).expect("method in ALL")
}

/// Interior cells of a field: centered indices with |p| <= M - margin on
/// both axes, margin = ceil(0.05 N).
fn interior_values(field: &Field) -> Vec<num_complex::Complex64> {
    let (mx, my) = (field.grid().x.half(), field.grid().y.half());
    let margin_x = (0.05 * field.nx() as f64).ceil() as i64;
    let margin_y = (0.05 * field.ny() as f64).ceil() as i64;
    let (bx, by) = (mx - margin_x, my - margin_y);
    let mut out = Vec::new();
    for p in -bx..=bx {
        for q in -by..=by {
            out.push(field.at(p, q));
        }
    }
    out
}

fn symmetric_nmse(a: &Field, b: &Field) -> f64 {
    let (va, vb) = (interior_values(a), interior_values(b));
    let diff: f64 = va.iter().zip(&vb).map(|(x, y)| (x - y).norm_sqr()).sum();
    let ea: f64 = va.iter().map(|v| v.norm_sqr()).sum();
    let eb: f64 = vb.iter().map(|v| v.norm_sqr()).sum();
    diff / (0.5 * (ea + eb))
}

/// Computes the pairwise agreement matrix for a signal.
pub fn compare_methods(signal: &Signal) -> Result<CompareMatrix> {
    let dt_grid = FieldGrid::square(*signal.grid());
    let gabor_grid = gabor_output_grid(signal.grid())?;

    let direct_gabor = forward_direct(signal, &gabor_grid)?;
    let gabor = forward_gabor(signal)?;
    let direct_dt = forward_direct(signal, &dt_grid)?;
    let basis = build_hg_basis(signal.grid())?;
    let hg = forward_hg(signal, &basis)?;
    let gyr = forward_gyrator(signal)?;
    let ns = forward_nslct(signal)?;

    // fields on the dt grid, indexed like Method::ALL (gabor absent)
    let on_dt: [Option<&Field>; 5] = [Some(&direct_dt), None, Some(&hg), Some(&gyr), Some(&ns)];

    let mut entries = [[None; 5]; 5];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = Some(0.0);
    }
    let gi = method_index(Method::Gabor);
    let di = method_index(Method::Direct);
    let v = symmetric_nmse(&direct_gabor, &gabor);
    entries[di][gi] = Some(v);
    entries[gi][di] = Some(v);
    for i in 0..5 {
        for j in (i + 1)..5 {
            if let (Some(a), Some(b)) = (on_dt[i], on_dt[j]) {
                let v = symmetric_nmse(a, b);
                entries[i][j] = Some(v);
                entries[j][i] = Some(v);
            }
        }
    }
    Ok(CompareMatrix { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::make_test_signal;

    #[test]
    fn method_names_parse() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        for m in RoundtripMethod::ALL {
            assert_eq!(m.name().parse::<RoundtripMethod>().unwrap(), m);
        }
        assert_eq!("gabor".parse::<RoundtripMethod>().unwrap(), RoundtripMethod::Gabor2d);
        assert!(matches!(
            "frft".parse::<Method>(),
            Err(Error::UnknownMethod { .. })
        ));
    }

    #[test]
    fn complexity_formula_values() {
        assert_eq!(predicted_real_mults(Method::Direct, 255).unwrap(), 66_325_500);
        assert_eq!(predicted_real_mults(Method::Gabor, 256).unwrap(), 1_441_792);
        assert_eq!(predicted_real_mults(Method::Nslct, 256).unwrap(), 4_980_736);
        assert_eq!(predicted_real_mults(Method::Gyrator, 256).unwrap(), 5_111_808);
        // gyrator exceeds nslct by exactly 2 N^2 at every size
        for n in [4u64, 64, 256, 1024] {
            let g = predicted_real_mults(Method::Gyrator, n).unwrap();
            let s = predicted_real_mults(Method::Nslct, n).unwrap();
            assert_eq!(g - s, 2 * n * n);
        }
        // exact integer arithmetic for powers of two
        for k in 2..=16u32 {
            let n = 1u64 << k;
            let expect = 2 * n * n * k as u64 + 6 * n * n;
            assert_eq!(predicted_real_mults(Method::Gabor, n).unwrap(), expect);
        }
        assert!(predicted_real_mults(Method::Direct, 1).is_err());
    }

    #[test]
    fn sweep_is_deterministic_and_ordered() {
        let orders = [0usize, 1, 2, 3];
        let a = accuracy_sweep(&Method::ALL, &orders, 31, 0.45).unwrap();
        let b = accuracy_sweep(&Method::ALL, &orders, 31, 0.45).unwrap();
        assert_eq!(a.len(), 20);
        assert_eq!(a, b);
        let mut k = 0;
        for m in Method::ALL {
            for o in orders {
                assert_eq!(a[k].method, m);
                assert_eq!(a[k].order, o);
                assert!(a[k].nmse <= 1e-6, "{m} order {o}: {:e}", a[k].nmse);
                k += 1;
            }
        }
        assert!(matches!(
            accuracy_sweep(&Method::ALL, &[31], 31, 0.45),
            Err(Error::ParameterOutOfRange { .. })
        ));

        // per-cell values do not depend on the method evaluation order
        let rev = [Method::Nslct, Method::Hg, Method::Direct];
        let fwd = [Method::Direct, Method::Hg, Method::Nslct];
        let a = accuracy_sweep(&rev, &orders, 31, 0.45).unwrap();
        let b = accuracy_sweep(&fwd, &orders, 31, 0.45).unwrap();
        for row in &a {
            let twin = b
                .iter()
                .find(|r| r.method == row.method && r.order == row.order)
                .unwrap();
            assert_eq!(row.nmse, twin.nmse);
        }
    }

    #[test]
    fn zero_signal_roundtrip_has_zero_mse() {
        let g = make_centered_grid(63, 0.3158).unwrap();
        let zero = Signal::zeros(g);
        for m in RoundtripMethod::ALL {
            let metric = roundtrip(m, &zero).unwrap();
            assert!(metric.nmse.is_nan(), "{m}");
            assert_eq!(metric.mse, 0.0, "{m}");
        }
    }

    #[test]
    fn compare_matrix_structure() {
        let g = make_centered_grid(63, 0.3158).unwrap();
        let s = make_test_signal(&g);
        let cm = compare_methods(&s).unwrap();
        for m in Method::ALL {
            assert_eq!(cm.get(m, m), Some(0.0));
        }
        // symmetric where defined
        for a in Method::ALL {
            for b in Method::ALL {
                assert_eq!(cm.get(a, b), cm.get(b, a));
            }
        }
        // gabor shares a grid only with direct
        assert!(cm.get(Method::Gabor, Method::Hg).is_none());
        assert!(cm.get(Method::Gabor, Method::Gyrator).is_none());
        assert!(cm.get(Method::Gabor, Method::Direct).is_some());
        // identical discrete sums agree at rounding level even on this
        // small grid
        assert!(cm.get(Method::Direct, Method::Gabor).unwrap() <= 1e-18);
        assert!(cm.get(Method::Gyrator, Method::Nslct).unwrap() <= 1e-18);
        // row listing is deterministic upper triangle
        let rows = cm.rows();
        assert_eq!(rows.len(), 5 + 7); // 5 diagonal + 7 defined off-diagonal
    }
}
