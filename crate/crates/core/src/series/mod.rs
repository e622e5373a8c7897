//! Truncated series algebra.
//!
//! Shifts `t ↦ t ± λ/2π` act on `q^n` as multiplication by `e^{±inλ}`, and
//! `(1/2π ∂_t)^2m` acts as `(-1)^m θ_q^2m`. Both only ever appear in even
//! combinations, so every operator here has rational coefficients and the
//! imaginary unit never needs to be represented.

mod lambda;
mod poly;
mod qseries;
mod ratfunc;

pub use lambda::{LambdaSeries, MIN_EXP};
pub use poly::Poly;
pub use qseries::{Coefficient, QSeries};
pub use ratfunc::RatFunc;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{factorial_q, sign, Rational};
use crate::error::{Error, Result};

/// `e^{inλ} - 2 + e^{-inλ} = 2cos(nλ) - 2 = Σ_{k≥1} 2(-1)^k (nλ)^2k / (2k)!`,
/// truncated at `λ^max_exp`.
///
/// This is the symbol of the central second difference in `t` on the
/// `q^n` mode. `n = 0` gives the zero series (the shift is the identity on
/// terms independent of the shifted variable).
pub fn central_difference_symbol(n: u32, max_exp: i32) -> Result<LambdaSeries> {
    if max_exp < 0 {
        return Err(Error::TruncationTooLow { got: max_exp.into(), min: 0 });
    }
    let n_sq = Rational::from_integer(BigInt::from(n) * BigInt::from(n));
    let mut power = Rational::from_integer(BigInt::from(1));
    let coeffs: Vec<Rational> = (0..=max_exp)
        .map(|e| {
            if e == 0 || e % 2 == 1 {
                return Rational::zero();
            }
            let k = e / 2;
            power *= &n_sq;
            sign(k.into()) * Rational::from_integer(BigInt::from(2)) * &power / factorial_q(e as u32)
        })
        .collect();
    LambdaSeries::from_coeffs(0, coeffs)
}
