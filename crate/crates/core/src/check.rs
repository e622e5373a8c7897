//! Exact verification of the conifold difference equation
//!
//! ```text
//! F̃(λ, t + λ/2π) - 2 F̃(λ, t) + F̃(λ, t - λ/2π) = (1/2π ∂_t)^2 F̃^0(t)
//! ```
//!
//! of the genus recursion it implies, and of the Bernoulli generating-function
//! identity behind it. All comparisons are rational equalities.
//!
//! On the `q^n` mode the left side is `(2cos(nλ) - 2) f_n(λ)` and the right
//! side is `-n^2` times the `q^n` coefficient of `Li_3`, so the whole check
//! splits into independent per-degree checks.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{bernoulli, factorial_q, sign, GenusCoeff, Rational};
use crate::error::{Error, Result};
use crate::polylog::polylog_series;
use crate::potential::{free_energy_genus, potential, PotentialSeries};
use crate::series::{central_difference_symbol, LambdaSeries, QSeries};

/// Location and values of the first coefficient where a check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// `q`-degree (`k` for multi-cover checks); `None` for pure `λ`-series
    /// identities.
    pub q_degree: Option<u32>,
    pub lambda_exp: i32,
    pub expected: Rational,
    pub actual: Rational,
    /// Curve class label, for multi-class checks.
    pub class: Option<String>,
}

/// Outcome of one verification. `passed` is true iff there is no mismatch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_name: String,
    pub passed: bool,
    pub trunc_lambda: i32,
    pub trunc_q: u32,
    pub first_failure: Option<Mismatch>,
}

impl CheckReport {
    pub fn new(check_name: &str, trunc_lambda: i32, trunc_q: u32, first_failure: Option<Mismatch>) -> Self {
        Self {
            check_name: check_name.to_string(),
            passed: first_failure.is_none(),
            trunc_lambda,
            trunc_q,
            first_failure,
        }
    }
}

/// First exponent in `lo..=hi` where `actual` and `expected` differ.
pub(crate) fn first_difference(
    actual: &LambdaSeries,
    expected: &LambdaSeries,
    lo: i32,
    hi: i32,
    q_degree: Option<u32>,
) -> Option<Mismatch> {
    (lo..=hi).find_map(|e| {
        let (a, x) = (actual.coeff(e).unwrap_or_default(), expected.coeff(e).unwrap_or_default());
        (a != x).then_some(Mismatch { q_degree, lambda_exp: e, expected: x, actual: a, class: None })
    })
}

// Σ_{k≥1} 2 w^{2k}/(2k)! = e^w - 2 + e^{-w}
fn two_cosh_minus_two(max_exp: i32) -> LambdaSeries {
    LambdaSeries::from_fn(0, max_exp, |e| {
        if e == 0 || e % 2 == 1 {
            Rational::zero()
        } else {
            Rational::from_integer(BigInt::from(2)) / factorial_q(e as u32)
        }
    })
    .expect("min exponent is 0")
}

fn exp_series(max_exp: i32) -> LambdaSeries {
    LambdaSeries::from_fn(0, max_exp, |e| factorial_q(e as u32).recip()).expect("min exponent is 0")
}

// B_2g / (2g (2g-2)!)
fn bernoulli_weight(g: u32) -> Rational {
    bernoulli(2 * g) / (factorial_q(2 * g - 2) * BigInt::from(2 * g))
}

/// Checks, through `w^max_exp`,
///
/// - `(e^w - 2 + e^{-w}) (1/w^2 - Σ_g B_2g/(2g (2g-2)!) w^{2g-2}) = 1`, and
/// - `w^2 e^w / (e^w - 1)^2 = 1 - Σ_g B_2g/(2g (2g-2)!) w^2g`,
///
/// with the Bernoulli side built from [`bernoulli`] and the exponential side
/// from plain Taylor coefficients.
pub fn check_generating_identity(max_exp: i32) -> Result<CheckReport> {
    const NAME: &str = "generating_identity";
    if max_exp < 0 {
        return Err(Error::TruncationTooLow { got: max_exp.into(), min: 0 });
    }
    if max_exp % 2 != 0 {
        return Err(Error::OddOrder(max_exp));
    }
    let one = LambdaSeries::one(max_exp)?;

    // bracket known through w^{max_exp-2}, cosh factor through w^{max_exp+2}:
    // the product is then determined through w^max_exp
    let bracket_max = max_exp - 2;
    let bracket = LambdaSeries::from_fn(-2, bracket_max, |e| {
        if e == -2 {
            Rational::one()
        } else if e % 2 != 0 {
            Rational::zero()
        } else {
            -bernoulli_weight(((e + 2) / 2) as u32)
        }
    })?;
    let product = two_cosh_minus_two(max_exp + 2).mul(&bracket)?;
    if let Some(m) = first_difference(&product, &one, 0, max_exp, None) {
        return Ok(CheckReport::new(NAME, max_exp, 0, Some(m)));
    }

    // w/(e^w - 1) as the inverse of (e^w - 1)/w = Σ w^k/(k+1)!
    let shifted_exp = LambdaSeries::from_fn(0, max_exp, |e| factorial_q(e as u32 + 1).recip())?;
    let w_over = shifted_exp.invert()?;
    let lhs = w_over.mul(&w_over)?.mul(&exp_series(max_exp))?;
    let rhs = LambdaSeries::from_fn(0, max_exp, |e| {
        if e == 0 {
            Rational::one()
        } else if e % 2 != 0 {
            Rational::zero()
        } else {
            -bernoulli_weight((e / 2) as u32)
        }
    })?;
    let failure = first_difference(&lhs, &rhs, 0, max_exp, None);
    Ok(CheckReport::new(NAME, max_exp, 0, failure))
}

/// Checks the difference equation on a single `q^n` mode of `potential`:
/// `(2cos(nλ) - 2) f_n(λ) = -n^2 [q^n] Li_3` through `λ^{2G}`.
///
/// With `f_n` known through `λ^{2G-2}` and a `λ^-2` pole, the product is
/// determined through `λ^{2G}`, which is where `c_G` first enters. A wrong
/// `c_g` therefore shows up at `λ^{2g}`.
pub fn check_theorem_degree(potential: &PotentialSeries, n: u32) -> Option<Mismatch> {
    let f = potential.degree(n)?;
    let top = potential.lambda_order() + 2;
    let shift = central_difference_symbol(n, top + 2).expect("nonnegative order");
    let lhs = shift.mul(f).expect("regular product");

    let li3 = polylog_series(3, n);
    let n_sq = Rational::from_integer(BigInt::from(n) * BigInt::from(n));
    let rhs_value = -n_sq * li3.coeff(n).cloned().unwrap_or_default();
    let rhs = LambdaSeries::monomial(0, rhs_value, top).expect("regular monomial");

    first_difference(&lhs, &rhs, 0, top, Some(n))
}

/// Difference equation for an arbitrary (possibly wrong) potential, all
/// degrees `1..=q_cut`. Reports the lowest failing degree.
pub fn check_difference_equation(potential: &PotentialSeries) -> CheckReport {
    let failure = (1..=potential.q_cut()).find_map(|n| check_theorem_degree(potential, n));
    CheckReport::new("difference_equation", potential.lambda_order(), potential.q_cut(), failure)
}

/// Difference equation for the conifold potential with genera `0..=G` and
/// `q`-degrees `1..=N`.
pub fn check_theorem(genus_cut: u32, q_cut: u32) -> Result<CheckReport> {
    Ok(check_difference_equation(&potential(genus_cut, q_cut)?))
}

/// `Σ_{k=0}^{g} (-1)^{g-k+1} c_k / (2g-2k+2)!` with `c_0 = 1`. Vanishes for
/// every `g ≥ 1`; it is the genus recursion divided by `n^{2g-1}`.
pub fn genus_recursion_residual(g: u32) -> Rational {
    GenusCoeff::table(g)
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let m = g - k as u32 + 1;
            sign(m.into()) * c / factorial_q(2 * m)
        })
        .sum()
}

// Σ_{k<g} (-1)^{g-k+1} θ^{2(g-k+1)} F^k / (2(g-k+1))!
fn recursion_lower_terms(g: u32, lower: &[QSeries<Rational>], trunc: u32) -> QSeries<Rational> {
    lower.iter().enumerate().take(g as usize).fold(QSeries::zero(trunc), |acc, (k, f)| {
        let m = g - k as u32 + 1;
        let weight = sign(m.into()) / factorial_q(2 * m);
        acc.add(&f.theta_pow(2 * m).scale(&weight))
    })
}

/// Checks the genus-`g` recursion
/// `Σ_{k=0}^{g} (1/(2g-2k+2)!) (1/2π ∂_t)^{2g-2k+2} F̃^k = 0`
/// as a `q`-series through `q^N`, using `(1/2π ∂_t)^2m = (-1)^m θ_q^2m`.
///
/// Also checks the scalar form of the same identity first.
pub fn check_recursion(g: u32, q_cut: u32) -> Result<CheckReport> {
    const NAME: &str = "genus_recursion";
    if g == 0 {
        return Err(Error::GenusOutOfRange { genus: 0, min: 1 });
    }
    let order = 2 * g as i32;
    let residual = genus_recursion_residual(g);
    if !residual.is_zero() {
        let m =
            Mismatch { q_degree: None, lambda_exp: order, expected: Rational::zero(), actual: residual, class: None };
        return Ok(CheckReport::new(NAME, order, q_cut, Some(m)));
    }

    let genera: Vec<QSeries<Rational>> = (0..=g).map(|k| free_energy_genus(k, q_cut)).collect();
    let top = genera[g as usize].theta_pow(2).scale(&sign(1)).scale(&factorial_q(2).recip());
    let total = recursion_lower_terms(g, &genera, q_cut).add(&top);
    let failure = total.iter().next().map(|(n, c)| Mismatch {
        q_degree: Some(n),
        lambda_exp: order,
        expected: Rational::zero(),
        actual: c.clone(),
        class: None,
    });
    Ok(CheckReport::new(NAME, order, q_cut, failure))
}

/// Run [`check_recursion`] for every genus `1..=max_genus` and return the
/// first failing report, or a passing one.
pub fn check_recursion_upto(max_genus: u32, q_cut: u32) -> Result<CheckReport> {
    for g in 1..=max_genus {
        let report = check_recursion(g, q_cut)?;
        if !report.passed {
            return Ok(report);
        }
    }
    Ok(CheckReport::new("genus_recursion", 2 * max_genus as i32, q_cut, None))
}

/// Use the genus recursion as an algorithm: starting from `F̃^0 = Li_3`
/// alone, solve for `θ_q^2 F̃^g` from the lower genera and invert `θ_q^2`
/// degree-wise with zero constant term.
pub fn solve_recursion(genus_cut: u32, q_cut: u32) -> Result<BTreeMap<u32, QSeries<Rational>>> {
    if genus_cut == 0 {
        return Err(Error::GenusOutOfRange { genus: 0, min: 1 });
    }
    let mut genera = Vec::with_capacity(genus_cut as usize + 1);
    genera.push(polylog_series(3, q_cut));
    for g in 1..=genus_cut {
        // k = g term is -θ^2 F^g / 2!
        let theta_sq = recursion_lower_terms(g, &genera, q_cut).scale(&Rational::from_integer(BigInt::from(2)));
        genera.push(theta_sq.theta_inverse()?.theta_inverse()?);
    }
    Ok(genera.into_iter().enumerate().skip(1).map(|(g, f)| (g as u32, f)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn generating_identity_small_orders() {
        for max in [0, 2, 4, 20] {
            let r = check_generating_identity(max).unwrap();
            assert!(r.passed, "{r:?}");
        }
        assert!(check_generating_identity(3).is_err());
    }

    #[test]
    fn hand_computed_degree_two_leading_order() {
        let p = potential(1, 2).unwrap();
        let f2 = p.degree(2).unwrap();
        let lhs = central_difference_symbol(2, 4).unwrap().mul(f2).unwrap();
        assert_eq!(lhs.coeff(0), Some(rat(-1, 2)));
    }

    #[test]
    fn theorem_small() {
        let r = check_theorem(1, 5).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!((r.trunc_lambda, r.trunc_q), (0, 5));
    }

    #[test]
    fn corrupted_c2_fails_at_lambda4() {
        let mut coeffs = GenusCoeff::table(4);
        coeffs[2] += rat(1, 7);
        let p = PotentialSeries::from_genus_coeffs(&coeffs, 6).unwrap();
        let r = check_difference_equation(&p);
        assert!(!r.passed);
        let m = r.first_failure.unwrap();
        assert_eq!((m.q_degree, m.lambda_exp), (Some(1), 4));
        // residual: (-λ^2)·(1/7)λ^2 at n = 1
        assert_eq!(m.actual - m.expected, rat(-1, 7));
    }

    #[test]
    fn recursion_g1_by_hand() {
        // per degree n: n/24 - (1/12) n / 2 = 0
        assert_eq!(genus_recursion_residual(1), int(0));
        assert!(check_recursion(1, 10).unwrap().passed);
        assert!(check_recursion(2, 10).unwrap().passed);
        assert!(check_recursion(0, 10).is_err());
    }

    #[test]
    fn solve_recursion_low_genus() {
        let sol = solve_recursion(2, 12).unwrap();
        assert_eq!(sol[&1], free_energy_genus(1, 12));
        assert_eq!(sol[&2], free_energy_genus(2, 12));
        assert!(sol.values().all(|s| s.coeff(0).is_none()));
    }
}
