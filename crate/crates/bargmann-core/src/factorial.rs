//! Log-factorials with compensated summation, shared by the Hermite/Laguerre
//! evaluators and the mode-coupling coefficients.

use std::sync::OnceLock;

const TABLE_LEN: usize = 2049;

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(TABLE_LEN);
        t.push(0.0);
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for k in 1..TABLE_LEN {
            // Kahan summation keeps ln(n!) accurate to ~1 ulp over the table.
            let term = (k as f64).ln() - comp;
            let next = sum + term;
            comp = (next - sum) - term;
            sum = next;
            t.push(sum);
        }
        t
    })
}

/// ln(n!) for nonnegative n.
pub(crate) fn ln_factorial(n: usize) -> f64 {
    let t = table();
    if n < t.len() {
        return t[n];
    }
    let mut sum = t[t.len() - 1];
    for k in t.len()..=n {
        sum += (k as f64).ln();
    }
    sum
}
