//! Exact scalars: rationals and the integer/rational sequences the series
//! code is built from.
//!
//! Bernoulli numbers follow the `w/(e^w - 1)` convention, so `B_1 = -1/2`.
//! Only even-index values ever enter the potential, so the sign of `B_1`
//! is invisible downstream.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use spin::RwLock;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `num/den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(-1)^k`
pub(crate) fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Integer power with a signed exponent: `base^exp` for `base != 0`.
pub(crate) fn powi(base: &Rational, exp: i32) -> Rational {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!`, memoized.
pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    if let Some(v) = FACTORIALS.read().get(n) {
        return v.clone();
    }
    let mut table = FACTORIALS.write();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

pub(crate) fn factorial_q(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

// Akiyama-Tanigawa state: `row` is the working row after the last computed
// index, `values[m]` is B_m in the B_1 = +1/2 convention of the algorithm.
struct BernoulliTable {
    row: Vec<Rational>,
    values: Vec<Rational>,
}

impl BernoulliTable {
    const fn new() -> Self {
        Self { row: Vec::new(), values: Vec::new() }
    }

    fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let m = self.values.len();
            self.row.push(Rational::new(BigInt::one(), BigInt::from(m + 1)));
            for j in (1..=m).rev() {
                let diff = &self.row[j - 1] - &self.row[j];
                self.row[j - 1] = diff * BigInt::from(j);
            }
            self.values.push(self.row[0].clone());
        }
    }
}

static BERNOULLI: RwLock<BernoulliTable> = RwLock::new(BernoulliTable::new());

/// Bernoulli number `B_n` with generating function `w/(e^w - 1)`.
pub fn bernoulli(n: u32) -> Rational {
    if n == 1 {
        return rat(-1, 2);
    }
    if n % 2 == 1 {
        return Rational::zero();
    }
    let idx = n as usize;
    if let Some(v) = BERNOULLI.read().values.get(idx) {
        return v.clone();
    }
    let mut table = BERNOULLI.write();
    table.extend_to(idx);
    table.values[idx].clone()
}

/// `c_g = (-1)^(g-1) B_2g / (2g (2g-2)!)`, the rational prefactor of
/// `Li_{3-2g}` in the genus-`g` free energy. Defined for `g >= 1`.
pub fn gw_genus_coeff(g: u32) -> Result<Rational> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { genus: g, min: 1 });
    }
    let denom = factorial_q(2 * g - 2) * BigInt::from(2 * g);
    Ok(sign(i64::from(g) - 1) * bernoulli(2 * g) / denom)
}

/// Constant-map contribution at genus `g >= 2`:
/// `χ (-1)^(g-1) B_2g B_{2g-2} / (4g (2g-2) (2g-2)!)`.
pub fn constant_map_coeff(g: u32, euler_char: i64) -> Result<Rational> {
    if g < 2 {
        return Err(Error::GenusOutOfRange { genus: g, min: 2 });
    }
    let denom = factorial_q(2 * g - 2) * BigInt::from(4 * g) * BigInt::from(2 * g - 2);
    Ok(int(euler_char) * sign(i64::from(g) - 1) * bernoulli(2 * g) * bernoulli(2 * g - 2) / denom)
}

/// Genus coefficient of the conifold potential, including genus zero
/// (where the coefficient of `Li_3` is 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusCoeff {
    pub genus: u32,
    pub value: Rational,
}

impl GenusCoeff {
    pub fn of(genus: u32) -> Self {
        let value = if genus == 0 { Rational::one() } else { gw_genus_coeff(genus).expect("genus >= 1") };
        Self { genus, value }
    }

    /// `c_0, ..., c_max_genus`.
    pub fn table(max_genus: u32) -> Vec<Rational> {
        (0..=max_genus).map(|g| Self::of(g).value).collect()
    }
}

static EULERIAN: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

/// Eulerian number `A(n, k)`: permutations of `n` elements with exactly `k`
/// descents. Requires `0 <= k < n`.
pub fn eulerian(n: u32, k: u32) -> Result<BigInt> {
    if k >= n {
        return Err(Error::EulerianOutOfRange { n, k });
    }
    let (n, k) = (n as usize, k as usize);
    if let Some(row) = EULERIAN.read().get(n - 1) {
        return Ok(row[k].clone());
    }
    let mut rows = EULERIAN.write();
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() < n {
        // rows[i] holds A(i + 1, ·)
        let prev = &rows[rows.len() - 1];
        let m = rows.len() + 1;
        let next: Vec<BigInt> = (0..m)
            .map(|j| {
                let stay = prev.get(j).map(|a| a * BigInt::from(j + 1)).unwrap_or_default();
                let rise = if j > 0 { &prev[j - 1] * BigInt::from(m - j) } else { BigInt::zero() };
                stay + rise
            })
            .collect();
        rows.push(next);
    }
    Ok(rows[n - 1][k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
    fn bernoulli_by_recurrence(max: usize) -> Vec<Rational> {
        let mut b: Vec<Rational> = vec![Rational::one()];
        for n in 1..=max {
            let mut acc = Rational::zero();
            let mut binom = BigInt::one(); // C(n+1, 0)
            for (k, bk) in b.iter().enumerate() {
                acc += bk * &binom;
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            b.push(-acc / BigInt::from(n + 1));
        }
        b
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_matches_recurrence_oracle() {
        let oracle = bernoulli_by_recurrence(60);
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(&bernoulli(n as u32), expected, "B_{n}");
        }
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for n in 1..=20 {
            assert!(bernoulli(2 * n + 1).is_zero());
        }
    }

    #[test]
    fn genus_coeffs() {
        assert_eq!(gw_genus_coeff(1).unwrap(), rat(1, 12));
        assert_eq!(gw_genus_coeff(2).unwrap(), rat(1, 240));
        assert_eq!(gw_genus_coeff(3).unwrap(), rat(1, 6048));
        assert_eq!(gw_genus_coeff(0), Err(Error::GenusOutOfRange { genus: 0, min: 1 }));
        assert_eq!(GenusCoeff::of(0).value, int(1));
    }

    #[test]
    fn constant_maps() {
        assert_eq!(constant_map_coeff(2, 1).unwrap(), rat(1, 5760));
        assert_eq!(constant_map_coeff(2, 0).unwrap(), int(0));
        assert_eq!(constant_map_coeff(2, 2).unwrap(), rat(1, 2880));
        assert!(constant_map_coeff(1, 2).is_err());
        assert!(constant_map_coeff(0, 2).is_err());
    }

    // Brute force: count permutations of 0..n with exactly k descents.
    fn descents_brute(n: usize, k: usize) -> u64 {
        fn rec(perm: &mut Vec<usize>, used: &mut [bool], n: usize, k: usize, count: &mut u64) {
            if perm.len() == n {
                if perm.windows(2).filter(|w| w[0] > w[1]).count() == k {
                    *count += 1;
                }
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    perm.push(i);
                    rec(perm, used, n, k, count);
                    perm.pop();
                    used[i] = false;
                }
            }
        }
        let mut count = 0;
        rec(&mut Vec::new(), &mut vec![false; n], n, k, &mut count);
        count
    }

    #[test]
    fn eulerian_against_brute_force() {
        assert_eq!(eulerian(1, 0).unwrap(), BigInt::from(1));
        assert_eq!(eulerian(3, 1).unwrap(), BigInt::from(4));
        assert_eq!(eulerian(4, 2).unwrap(), BigInt::from(11));
        for n in 1..=7u32 {
            for k in 0..n {
                assert_eq!(eulerian(n, k).unwrap(), BigInt::from(descents_brute(n as usize, k as usize)));
            }
        }
    }

    #[test]
    fn eulerian_row_sums_are_factorials() {
        for n in 1..=12u32 {
            let sum: BigInt = (0..n).map(|k| eulerian(n, k).unwrap()).sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn eulerian_rejects_out_of_range() {
        assert_eq!(eulerian(3, 3), Err(Error::EulerianOutOfRange { n: 3, k: 3 }));
        assert!(eulerian(0, 0).is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(20), BigInt::from(2_432_902_008_176_640_000u64));
    }
}
