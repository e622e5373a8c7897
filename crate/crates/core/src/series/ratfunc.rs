use core::fmt;

use num_traits::Zero;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::series::{Poly, QSeries};

/// Reduced quotient of two polynomials in `q`.
///
/// Canonical form: numerator and denominator are coprime, and the
/// denominator's lowest-degree nonzero coefficient is exactly 1. Equal
/// rational functions therefore compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (num, den) =
            if g.is_zero() || g.degree() == Some(0) { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let (_, low) = den.lowest().expect("nonzero denominator");
        let norm = low.recip();
        Ok(Self { num: num.scale(&norm), den: den.scale(&norm) })
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::new(p, Poly::from_ints(&[1])).expect("constant denominator")
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `θ_q f = q f'`, with `f' = (N'D - N D') / D^2`, reduced.
    pub fn theta(&self) -> Self {
        let top = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::new(top.shift(1), self.den.mul(&self.den)).expect("square of a nonzero denominator")
    }

    /// Power-series expansion through `q^trunc`. Needs the denominator to be
    /// nonzero at `q = 0`.
    pub fn expand(&self, trunc: u32) -> Result<QSeries<Rational>> {
        if self.den.coeff(0).is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let inv = self.den.to_series(trunc).invert()?;
        self.num.to_series(trunc).mul(&inv)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
