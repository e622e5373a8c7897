use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::series::QSeries;

/// Dense univariate polynomial in `q` over the rationals, lowest degree first.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c q^n`
    pub fn monomial(n: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|c| Rational::from_integer(BigInt::from(*c))).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest-degree nonzero coefficient and its degree.
    pub fn lowest(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    /// Ordinary derivative `d/dq`.
    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Euclidean division: `(quotient, remainder)`. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + j] -= &c * d;
                }
            }
            quot[top - dd] = c;
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => {
                let inv = l.recip();
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// The polynomial as a power series truncated at `q^trunc`.
    pub fn to_series(&self, trunc: u32) -> QSeries<Rational> {
        QSeries::from_terms(trunc, self.coeffs.iter().enumerate().map(|(n, c)| (n as u32, c.clone())))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·q")?,
                _ => write!(f, "{c}·q^{n}")?,
            }
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

    #[test]
    fn division_identity() {
        let a = Poly::from_ints(&[1, 0, -3, 2, 7]);
        let b = Poly::from_ints(&[2, 1, -1]);
        let (qt, r) = a.div_rem(&b);
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(qt.mul(&b).add(&r), a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let one_minus_q = Poly::from_ints(&[1, -1]);
        let a = one_minus_q.pow(3).mul(&Poly::from_ints(&[0, 1]));
        let b = one_minus_q.pow(2).mul(&Poly::from_ints(&[1, 1]));
        // monic: q - 1 squared
        assert_eq!(a.gcd(&b), Poly::from_ints(&[-1, 1]).pow(2));
    }

    #[test]
    fn derivative_and_shift() {
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(p.derivative(), Poly::from_ints(&[2, 6]));
        assert_eq!(p.shift(2), Poly::from_ints(&[0, 0, 1, 2, 3]));
        assert_eq!(alloc::format!("{p}"), "1 + 2·q + 3·q^2");
    }
}
