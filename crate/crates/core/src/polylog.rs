//! Integer-order polylogarithms `Li_s(q) = Σ_{n≥1} q^n / n^s`.
//!
//! Every integer order has a truncated-series form. Non-positive orders are
//! also rational functions of `q`, obtained either by repeatedly applying
//! `θ_q` to `Li_0 = q/(1-q)` or from the Eulerian polynomials.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{eulerian, int, powi, Rational};
use crate::series::{Poly, QSeries, RatFunc};

/// `Li_s(q)` through `q^trunc`. The sum starts at `n = 1`.
pub fn polylog_series(s: i32, trunc: u32) -> QSeries<Rational> {
    QSeries::from_terms(trunc, (1..=trunc).map(|n| (n, powi(&int(n.into()), -s))))
}

/// `Li_1(q) = -log(1 - q)` through `q^trunc`.
pub fn li1_series(trunc: u32) -> QSeries<Rational> {
    QSeries::from_terms(trunc, (1..=trunc).map(|n| (n, Rational::new(BigInt::one(), BigInt::from(n)))))
}

fn li0() -> RatFunc {
    RatFunc::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, -1])).expect("nonzero denominator")
}

/// `Li_{-m}(q) = θ_q^m [q/(1-q)]` as a reduced rational function.
pub fn polylog_negative_closed(m: u32) -> RatFunc {
    (0..m).fold(li0(), |f, _| f.theta())
}

/// `Li_{-m}(q) = q A_m(q) / (1-q)^{m+1}` with `A_m` the Eulerian polynomial
/// (`A_0 = 1`). Agrees with [`polylog_negative_closed`].
pub fn polylog_negative_eulerian(m: u32) -> RatFunc {
    let eulerian_poly = if m == 0 {
        Poly::from_ints(&[1])
    } else {
        let coeffs: Vec<Rational> = (0..m).map(|k| Rational::from_integer(eulerian(m, k).expect("k < m"))).collect();
        Poly::new(coeffs)
    };
    let den = Poly::from_ints(&[1, -1]).pow(m + 1);
    RatFunc::new(eulerian_poly.shift(1), den).expect("nonzero denominator")
}
