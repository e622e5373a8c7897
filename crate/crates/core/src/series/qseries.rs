use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::series::LambdaSeries;

/// Coefficient ring of a [`QSeries`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn coeff_is_zero(&self) -> bool;
    fn coeff_add(&self, other: &Self) -> Self;
    fn coeff_neg(&self) -> Self;
    fn coeff_scale(&self, k: &Rational) -> Self;
    fn coeff_mul(&self, other: &Self) -> Result<Self>;
}

impl Coefficient for Rational {
    fn coeff_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn coeff_add(&self, other: &Self) -> Self {
        self + other
    }
    fn coeff_neg(&self) -> Self {
        -self
    }
    fn coeff_scale(&self, k: &Rational) -> Self {
        self * k
    }
    fn coeff_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
}

impl Coefficient for LambdaSeries {
    fn coeff_is_zero(&self) -> bool {
        LambdaSeries::is_zero(self)
    }
    fn coeff_add(&self, other: &Self) -> Self {
        LambdaSeries::add(self, other)
    }
    fn coeff_neg(&self) -> Self {
        LambdaSeries::neg(self)
    }
    fn coeff_scale(&self, k: &Rational) -> Self {
        LambdaSeries::scale(self, k)
    }
    fn coeff_mul(&self, other: &Self) -> Result<Self> {
        LambdaSeries::mul(self, other)
    }
}

/// Power series in one variable `q`, known through `q^trunc`.
///
/// Storage is sparse; an absent degree means a zero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<C> {
    trunc: u32,
    coeffs: BTreeMap<u32, C>,
}

impl<C: Coefficient> QSeries<C> {
    pub fn zero(trunc: u32) -> Self {
        Self { trunc, coeffs: BTreeMap::new() }
    }

    /// Collect `(degree, coefficient)` pairs, summing repeats and dropping
    /// zeros and anything above `trunc`.
    pub fn from_terms(trunc: u32, terms: impl IntoIterator<Item = (u32, C)>) -> Self {
        let mut s = Self::zero(trunc);
        for (n, c) in terms {
            s.add_term(n, c);
        }
        s
    }

    fn add_term(&mut self, n: u32, c: C) {
        if n > self.trunc || c.coeff_is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&n) {
            Some(old) => old.coeff_add(&c),
            None => c,
        };
        if !sum.coeff_is_zero() {
            self.coeffs.insert(n, sum);
        }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn coeff(&self, n: u32) -> Option<&C> {
        self.coeffs.get(&n)
    }

    /// Nonzero coefficients in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &C)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, trunc: u32) -> Self {
        let trunc = trunc.min(self.trunc);
        Self { trunc, coeffs: self.coeffs.range(..=trunc).map(|(n, c)| (*n, c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.trunc);
        for (n, c) in other.iter() {
            out.add_term(n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|_, c| c.coeff_neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        self.map(|_, c| c.coeff_scale(k))
    }

    /// Apply `f(degree, coeff)` to every stored coefficient.
    pub fn map(&self, mut f: impl FnMut(u32, &C) -> C) -> Self {
        Self::from_terms(self.trunc, self.iter().map(|(n, c)| (n, f(n, c))))
    }

    /// Same as [`map`](Self::map) but with a fallible, possibly
    /// type-changing coefficient map.
    pub fn try_map<D: Coefficient>(&self, mut f: impl FnMut(u32, &C) -> Result<D>) -> Result<QSeries<D>> {
        let mut out = QSeries::zero(self.trunc);
        for (n, c) in self.iter() {
            out.add_term(n, f(n, c)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                if i + j > trunc {
                    break;
                }
                out.add_term(i + j, a.coeff_mul(b)?);
            }
        }
        Ok(out)
    }

    /// `θ_q = q d/dq`: the degree-`n` coefficient is multiplied by `n`.
    pub fn theta(&self) -> Self {
        self.theta_pow(1)
    }

    /// `θ_q^k`.
    pub fn theta_pow(&self, k: u32) -> Self {
        self.map(|n, c| c.coeff_scale(&Rational::from_integer(num_traits::pow(BigInt::from(n), k as usize))))
    }

    /// Anti-derivative of `θ_q` with zero constant term: the degree-`n`
    /// coefficient is divided by `n`. Fails if `self` has a constant term.
    pub fn theta_inverse(&self) -> Result<Self> {
        if self.coeffs.contains_key(&0) {
            return Err(Error::NoAntiDerivative);
        }
        Ok(self.map(|n, c| c.coeff_scale(&Rational::new(BigInt::one(), BigInt::from(n)))))
    }
}

impl QSeries<Rational> {
    pub fn one(trunc: u32) -> Self {
        Self::from_terms(trunc, [(0, Rational::one())])
    }

    /// Dense coefficient vector for degrees `0..=trunc`.
    pub fn to_dense(&self) -> Vec<Rational> {
        (0..=self.trunc).map(|n| self.coeff(n).cloned().unwrap_or_default()).collect()
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let a = self.to_dense();
        if Zero::is_zero(&a[0]) {
            return Err(Error::NotInvertible);
        }
        let lead_inv = a[0].recip();
        let mut inv: Vec<Rational> = Vec::with_capacity(a.len());
        inv.push(lead_inv.clone());
        for m in 1..a.len() {
            let mut acc = Rational::zero();
            for j in 1..=m {
                if !Zero::is_zero(&a[j]) {
                    acc += &a[j] * &inv[m - j];
                }
            }
            inv.push(-acc * &lead_inv);
        }
        Ok(Self::from_terms(self.trunc, inv.into_iter().enumerate().map(|(n, c)| (n as u32, c))))
    }
}

impl<C: Coefficient> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for (n, c) in self.iter() {
            writeln!(f, "{c} · q^{n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn q(trunc: u32, dense: &[i64]) -> QSeries<Rational> {
        QSeries::from_terms(trunc, dense.iter().enumerate().map(|(n, c)| (n as u32, int(*c))))
    }

    #[test]
    fn cancellation_drops_terms() {
        let s = q(4, &[1, 1]).add(&q(4, &[1, -1]));
        assert_eq!(s, q(4, &[2]));
        assert_eq!(s.coeff(1), None);
    }

    #[test]
    fn geometric_inverse() {
        let inv = q(3, &[1, -1]).invert().unwrap();
        assert_eq!(inv, q(3, &[1, 1, 1, 1]));
        assert_eq!(q(3, &[0, 1]).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn theta_on_li3_gives_li2() {
        let li3 = QSeries::from_terms(3, [(1, int(1)), (2, rat(1, 8)), (3, rat(1, 27))]);
        let li2 = QSeries::from_terms(3, [(1, int(1)), (2, rat(1, 4)), (3, rat(1, 9))]);
        assert_eq!(li3.theta(), li2);
        assert!(q(3, &[5]).theta().is_zero());
    }

    #[test]
    fn theta_inverse_requires_no_constant_term() {
        assert_eq!(q(3, &[1, 1]).theta_inverse(), Err(Error::NoAntiDerivative));
        let s = q(3, &[0, 1, 2, 3]);
        assert_eq!(s.theta().theta_inverse().unwrap(), s);
    }

    #[test]
    fn mixed_truncation_takes_minimum() {
        let s = q(5, &[1, 1, 1, 1, 1, 1]).mul(&q(2, &[1, 1])).unwrap();
        assert_eq!(s.trunc(), 2);
        assert_eq!(s, q(2, &[1, 2, 2]));
    }

    #[test]
    fn display_is_sparse() {
        let s = QSeries::from_terms(4, [(1, int(1)), (3, rat(-1, 2))]);
        assert_eq!(alloc::format!("{s}"), "1 · q^1\n-1/2 · q^3\n");
    }
}
