//! Inputs shared by the criterion benchmarks.

use chowcalc_core::scalars::{int, Rational};

/// Degrees spanning the special cases and the generic range.
pub const DEGREES: [u64; 4] = [4, 10, 20, 40];

/// `(d, A(d))` sample points for interpolation benchmarks.
pub fn abc_points(from: u64, to: u64) -> Vec<(Rational, Rational)> {
    chowcalc_core::theorems::abc_table(from, to)
        .expect("valid range")
        .into_iter()
        .map(|r| (int(r.d as i64), r.a))
        .collect()
}
