use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{powi, Rational};
use crate::error::{Error, Result};

/// Lowest exponent any [`LambdaSeries`] may carry: the potential's worst
/// pole is `λ^-2`.
pub const MIN_EXP: i32 = -2;

/// Truncated Laurent series `Σ a_e λ^e` for `min_exp <= e <= max_exp`.
///
/// `max_exp` is a truncation order, not a statement that higher terms
/// vanish: two series are only compared when they share it. Leading zeros
/// below the first nonzero term are allowed in storage and ignored by
/// every operation.
#[derive(Clone, Debug)]
pub struct LambdaSeries {
    min_exp: i32,
    max_exp: i32,
    coeffs: Vec<Rational>,
}

impl LambdaSeries {
    /// Series with coefficients `coeffs[i]` at `λ^(min_exp + i)`, known
    /// through `λ^(min_exp + coeffs.len() - 1)`.
    pub fn from_coeffs(min_exp: i32, coeffs: Vec<Rational>) -> Result<Self> {
        if min_exp < MIN_EXP {
            return Err(Error::PoleTooDeep(-min_exp));
        }
        let max_exp = min_exp + coeffs.len() as i32 - 1;
        Ok(Self { min_exp, max_exp, coeffs })
    }

    /// The zero series known through `λ^max_exp`.
    pub fn zero(max_exp: i32) -> Result<Self> {
        if max_exp < MIN_EXP - 1 {
            return Err(Error::TruncationTooLow { got: max_exp.into(), min: (MIN_EXP - 1).into() });
        }
        Ok(Self { min_exp: max_exp + 1, max_exp, coeffs: Vec::new() })
    }

    pub fn one(max_exp: i32) -> Result<Self> {
        Self::monomial(0, Rational::one(), max_exp)
    }

    /// `c λ^exp`, truncated at `max_exp` (so it is zero if `exp > max_exp`).
    pub fn monomial(exp: i32, c: Rational, max_exp: i32) -> Result<Self> {
        if exp < MIN_EXP {
            return Err(Error::PoleTooDeep(-exp));
        }
        if exp > max_exp {
            return Self::zero(max_exp);
        }
        let mut coeffs = vec![Rational::zero(); (max_exp - exp + 1) as usize];
        coeffs[0] = c;
        Ok(Self { min_exp: exp, max_exp, coeffs })
    }

    /// Build from a coefficient function on `[min_exp, max_exp]`.
    pub fn from_fn(min_exp: i32, max_exp: i32, f: impl FnMut(i32) -> Rational) -> Result<Self> {
        if min_exp < MIN_EXP {
            return Err(Error::PoleTooDeep(-min_exp));
        }
        if max_exp < min_exp - 1 {
            return Err(Error::TruncationTooLow { got: max_exp.into(), min: (min_exp - 1).into() });
        }
        Ok(Self { min_exp, max_exp, coeffs: (min_exp..=max_exp).map(f).collect() })
    }

    pub fn min_exp(&self) -> i32 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i32 {
        self.max_exp
    }

    /// Coefficient of `λ^exp`, or `None` above the truncation order.
    pub fn coeff(&self, exp: i32) -> Option<Rational> {
        if exp > self.max_exp {
            None
        } else if exp < self.min_exp {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[(exp - self.min_exp) as usize].clone())
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.min_exp + i as i32, c))
    }

    /// Exponent of the lowest nonzero term, `None` for the zero series.
    pub fn valuation(&self) -> Option<i32> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.min_exp + i as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    // Valuation, with the zero series treated as "zero through max_exp".
    fn effective_valuation(&self) -> i32 {
        self.valuation().unwrap_or(self.max_exp + 1)
    }

    /// Drop every term above `λ^max_exp`. Never extends precision.
    pub fn truncate(&self, max_exp: i32) -> Self {
        let max_exp = max_exp.min(self.max_exp);
        if max_exp < self.min_exp {
            let min_exp = (max_exp + 1).max(MIN_EXP);
            return Self { min_exp, max_exp: min_exp - 1, coeffs: Vec::new() };
        }
        let len = (max_exp - self.min_exp + 1) as usize;
        Self { min_exp: self.min_exp, max_exp, coeffs: self.coeffs[..len].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let min_exp = self.min_exp.min(other.min_exp);
        let max_exp = self.max_exp.min(other.max_exp);
        let coeffs = (min_exp..=max_exp)
            .map(|e| self.coeff(e).unwrap_or_default() + other.coeff(e).unwrap_or_default())
            .collect();
        Self { min_exp, max_exp, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect(), ..*self }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * k).collect(), ..*self }
    }

    /// Product, known through the largest order both factors determine.
    /// Errors if the product's pole would be worse than `λ^-2`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (va, vb) = (self.effective_valuation(), other.effective_valuation());
        let max_exp = (va + other.max_exp).min(vb + self.max_exp);
        let min_exp = va + vb;
        if self.is_zero() || other.is_zero() {
            return Self::zero(max_exp.max(MIN_EXP - 1));
        }
        if min_exp < MIN_EXP {
            return Err(Error::PoleTooDeep(-min_exp));
        }
        let mut coeffs = vec![Rational::zero(); (max_exp - min_exp + 1).max(0) as usize];
        for (ea, a) in self.terms() {
            for (eb, b) in other.terms() {
                let e = ea + eb;
                if e > max_exp {
                    break;
                }
                coeffs[(e - min_exp) as usize] += a * b;
            }
        }
        Ok(Self { min_exp, max_exp, coeffs })
    }

    /// Multiplicative inverse. The lowest exponent of the result is minus
    /// that of `self`, and the relative precision is preserved.
    pub fn invert(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::NotInvertible)?;
        if -v < MIN_EXP {
            return Err(Error::PoleTooDeep(v));
        }
        let unit = &self.coeffs[(v - self.min_exp) as usize..];
        let lead_inv = unit[0].recip();
        let mut inv: Vec<Rational> = Vec::with_capacity(unit.len());
        inv.push(lead_inv.clone());
        for m in 1..unit.len() {
            let mut acc = Rational::zero();
            for j in 1..=m {
                if !unit[j].is_zero() {
                    acc += &unit[j] * &inv[m - j];
                }
            }
            inv.push(-acc * &lead_inv);
        }
        Self::from_coeffs(-v, inv)
    }

    /// Substitute `λ ↦ k λ`, i.e. multiply the `λ^e` coefficient by `k^e`.
    pub fn rescale_variable(&self, k: &Rational) -> Self {
        assert!(!k.is_zero(), "cannot rescale the series variable by zero");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if c.is_zero() { c.clone() } else { c * powi(k, self.min_exp + i as i32) })
            .collect();
        Self { coeffs, ..*self }
    }
}

impl PartialEq for LambdaSeries {
    fn eq(&self, other: &Self) -> bool {
        self.max_exp == other.max_exp
            && (self.min_exp.min(other.min_exp)..=self.max_exp).all(|e| self.coeff(e) == other.coeff(e))
    }
}

impl Eq for LambdaSeries {}

impl fmt::Display for LambdaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}·λ^{e}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn pole_times_regular() {
        let a = LambdaSeries::monomial(-2, int(1), 4).unwrap();
        let b = LambdaSeries::monomial(2, int(1), 8).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coeff(0), Some(int(1)));
        assert_eq!(p.valuation(), Some(0));
        // a known through λ^4 with valuation -2, b through λ^8 with valuation 2
        assert_eq!(p.max_exp(), 6);
    }

    #[test]
    fn double_pole_product_is_rejected() {
        let a = LambdaSeries::monomial(-2, int(1), 2).unwrap();
        assert_eq!(a.mul(&a), Err(Error::PoleTooDeep(4)));
        assert!(LambdaSeries::monomial(-3, int(1), 2).is_err());
    }

    #[test]
    fn invert_rejects_zero_and_deep_valuation() {
        assert_eq!(LambdaSeries::zero(4).unwrap().invert(), Err(Error::NotInvertible));
        let cube = LambdaSeries::monomial(3, int(1), 8).unwrap();
        assert_eq!(cube.invert(), Err(Error::PoleTooDeep(3)));
    }

    #[test]
    fn invert_one() {
        let one = LambdaSeries::one(6).unwrap();
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn truncation_is_minimum_on_add() {
        let a = LambdaSeries::from_coeffs(0, vec![int(1), int(2), int(3)]).unwrap();
        let b = LambdaSeries::from_coeffs(-2, vec![int(1)]).unwrap();
        let s = a.add(&b);
        assert_eq!(s.max_exp(), -2);
        assert_eq!(s.coeff(-2), Some(int(1)));
    }

    #[test]
    fn rescale() {
        let s = LambdaSeries::from_coeffs(-2, vec![int(1), int(0), rat(1, 12)]).unwrap();
        let r = s.rescale_variable(&int(2));
        assert_eq!(r.coeff(-2), Some(rat(1, 4)));
        assert_eq!(r.coeff(0), Some(rat(1, 12)));
    }

    #[test]
    fn display() {
        let s = LambdaSeries::from_coeffs(-2, vec![int(1), int(0), rat(-1, 12)]).unwrap();
        assert_eq!(alloc::format!("{s}"), "1·λ^-2 + -1/12·λ^0");
        assert_eq!(alloc::format!("{}", LambdaSeries::zero(2).unwrap()), "0");
    }
}
