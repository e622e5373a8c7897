//! The non-constant-map potential of the resolved conifold,
//! `F̃(λ, q) = Σ_g λ^{2g-2} F̃^g(q)` with `F̃^0 = Li_3` and
//! `F̃^g = c_g Li_{3-2g}` for `g ≥ 1`.
//!
//! The potential is stored per `q`-degree: the `q^n` coefficient is the
//! Laurent series `f_n(λ) = Σ_g c_g n^{2g-3} λ^{2g-2}`. Shifts in `t` and
//! derivatives `∂_t` are both diagonal in `n`, so every identity about `F̃`
//! becomes a family of independent identities about the `f_n`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{gw_genus_coeff, int, powi, GenusCoeff, Rational};
use crate::error::{Error, Result};
use crate::polylog::polylog_series;
use crate::series::{LambdaSeries, QSeries};

/// Genus-`g` free energy `F̃^g` through `q^trunc`.
pub fn free_energy_genus(g: u32, trunc: u32) -> QSeries<Rational> {
    let li = polylog_series(3 - 2 * g as i32, trunc);
    if g == 0 {
        li
    } else {
        li.scale(&gw_genus_coeff(g).expect("g >= 1"))
    }
}

/// Double-truncated potential: genera `0..=genus_cut`, `q`-degrees
/// `1..=q_cut`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialSeries {
    genus_cut: u32,
    q_cut: u32,
    per_degree: BTreeMap<u32, LambdaSeries>,
}

impl PotentialSeries {
    /// Assemble `f_n = Σ_g coeffs[g] n^{2g-3} λ^{2g-2}` from an explicit list
    /// of genus coefficients (`coeffs[0]` multiplies `Li_3`). With the true
    /// `c_g` this is [`potential`]; other inputs are useful for checking
    /// that the verifiers actually detect wrong data.
    pub fn from_genus_coeffs(coeffs: &[Rational], q_cut: u32) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::GenusOutOfRange { genus: coeffs.len().saturating_sub(1) as u32, min: 1 });
        }
        if q_cut == 0 {
            return Err(Error::TruncationTooLow { got: 0, min: 1 });
        }
        let genus_cut = coeffs.len() as u32 - 1;
        let max_exp = 2 * genus_cut as i32 - 2;
        let per_degree = (1..=q_cut)
            .map(|n| {
                let n_q = int(n.into());
                let f = LambdaSeries::from_fn(-2, max_exp, |e| {
                    if e % 2 != 0 {
                        return Rational::zero();
                    }
                    let g = ((e + 2) / 2) as usize;
                    &coeffs[g] * powi(&n_q, e - 1)
                })
                .expect("min exponent is -2");
                (n, f)
            })
            .collect();
        Ok(Self { genus_cut, q_cut, per_degree })
    }

    pub fn genus_cut(&self) -> u32 {
        self.genus_cut
    }

    pub fn q_cut(&self) -> u32 {
        self.q_cut
    }

    /// Highest `λ` exponent carried: `2G - 2`.
    pub fn lambda_order(&self) -> i32 {
        2 * self.genus_cut as i32 - 2
    }

    /// `f_n(λ)`, the coefficient of `q^n`.
    pub fn degree(&self, n: u32) -> Option<&LambdaSeries> {
        self.per_degree.get(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &LambdaSeries)> + '_ {
        self.per_degree.iter().map(|(n, f)| (*n, f))
    }

    /// The `λ^{2g-2}` slice as a `q`-series, i.e. `F̃^g` through `q^q_cut`.
    pub fn genus_component(&self, g: u32) -> QSeries<Rational> {
        let exp = 2 * g as i32 - 2;
        QSeries::from_terms(self.q_cut, self.iter().map(|(n, f)| (n, f.coeff(exp).unwrap_or_default())))
    }
}

/// `F̃` for genera `0..=genus_cut` and `q`-degrees `1..=q_cut`.
pub fn potential(genus_cut: u32, q_cut: u32) -> Result<PotentialSeries> {
    if genus_cut == 0 {
        return Err(Error::GenusOutOfRange { genus: 0, min: 1 });
    }
    PotentialSeries::from_genus_coeffs(&GenusCoeff::table(genus_cut), q_cut)
}

/// Taylor series of `2 sin(s/2)` through `s^max_exp`.
fn two_sin_half(max_exp: i32) -> LambdaSeries {
    let mut term = Rational::from_integer(BigInt::from(1));
    let coeffs: Vec<Rational> = (0..=max_exp)
        .map(|e| {
            if e == 0 || e % 2 == 0 {
                return Rational::zero();
            }
            // (-1)^j 2 (1/2)^{2j+1} / (2j+1)!, updated incrementally
            if e > 1 {
                term = -term.clone() / (BigInt::from(4) * BigInt::from(e) * BigInt::from(e - 1));
            }
            term.clone()
        })
        .collect();
    LambdaSeries::from_coeffs(0, coeffs).expect("min exponent is 0")
}

/// Laurent expansion of `(2 sin(s/2))^{-2}` through `s^max_exp`, obtained
/// by squaring the Taylor series of `2 sin(s/2)` and inverting.
///
/// The `s^{2g-2}` coefficient equals [`gw_genus_coeff`]`(g)`, but nothing
/// here uses Bernoulli numbers.
pub fn sin_expansion(max_exp: i32) -> Result<LambdaSeries> {
    if max_exp < 0 {
        return Err(Error::TruncationTooLow { got: max_exp.into(), min: 0 });
    }
    if max_exp % 2 != 0 {
        return Err(Error::OddOrder(max_exp));
    }
    // valuation 2 on both sides of the inversion: need the square through
    // s^{max_exp+4}, hence the sine through s^{max_exp+3}
    let s = two_sin_half(max_exp + 3);
    let inv = s.mul(&s)?.invert()?;
    Ok(inv.truncate(max_exp))
}

/// `f_n(λ) = (1/n) (2 sin(nλ/2))^{-2}` through `λ^{2G-2}`.
pub fn coefficient_closed_form(n: u32, genus_cut: u32) -> Result<LambdaSeries> {
    if genus_cut == 0 {
        return Err(Error::GenusOutOfRange { genus: 0, min: 1 });
    }
    if n == 0 {
        return Err(Error::TruncationTooLow { got: 0, min: 1 });
    }
    let n_q = int(n.into());
    Ok(sin_expansion(2 * genus_cut as i32 - 2)?.rescale_variable(&n_q).scale(&n_q.recip()))
}
