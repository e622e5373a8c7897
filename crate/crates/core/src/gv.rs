//! Genus-zero Gopakumar-Vafa resummation for arbitrary curve-class data,
//!
//! ```text
//! F̃_GV0(λ, t) = Σ_β n0_β Σ_{k≥1} (1/k) (2 sin(kλ/2))^{-2} (q^β)^k,
//! ```
//!
//! and its difference equation in the variable `t^α` of one chosen class.
//!
//! Each class carries its own formal variable `q^β`; there are no relations
//! between classes. The multi-cover index `k` is the `q^β`-degree.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{gw_genus_coeff, int, Rational};
use crate::check::{first_difference, CheckReport};
use crate::error::{Error, Result};
use crate::polylog::polylog_series;
use crate::potential::sin_expansion;
use crate::series::{central_difference_symbol, LambdaSeries, QSeries};

/// One effective curve class with its genus-zero GV invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GvClass {
    pub label: String,
    pub n0: BigInt,
}

/// Finite list of curve classes with distinct labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GvDataset {
    classes: Vec<GvClass>,
}

impl GvDataset {
    pub fn new(classes: Vec<GvClass>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for c in &classes {
            if !seen.insert(c.label.as_str()) {
                return Err(Error::DuplicateLabel(c.label.clone()));
            }
        }
        Ok(Self { classes })
    }

    pub fn classes(&self) -> &[GvClass] {
        &self.classes
    }

    pub fn get(&self, label: &str) -> Option<&GvClass> {
        self.classes.iter().find(|c| c.label == label)
    }

    /// Multiply every invariant by `k`.
    pub fn scaled(&self, k: &BigInt) -> Self {
        let classes = self.classes.iter().map(|c| GvClass { label: c.label.clone(), n0: &c.n0 * k }).collect();
        Self { classes }
    }
}

/// Per-class series in `q^β` with Laurent-series coefficients in `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiClassSeries {
    per_class: Vec<(String, QSeries<LambdaSeries>)>,
}

impl MultiClassSeries {
    pub fn get(&self, label: &str) -> Option<&QSeries<LambdaSeries>> {
        self.per_class.iter().find(|(l, _)| l == label).map(|(_, s)| s)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &QSeries<LambdaSeries>)> + '_ {
        self.per_class.iter().map(|(l, s)| (l.as_str(), s))
    }

    /// The `λ^{2g-2}` slice of one class as a series in `q^β`.
    pub fn genus_component(&self, label: &str, g: u32) -> Option<QSeries<Rational>> {
        let series = self.get(label)?;
        let exp = 2 * g as i32 - 2;
        Some(QSeries::from_terms(series.trunc(), series.iter().map(|(k, f)| (k, f.coeff(exp).unwrap_or_default()))))
    }
}

fn check_cuts(genus_cut: u32, k_cut: u32) -> Result<()> {
    if genus_cut == 0 {
        return Err(Error::GenusOutOfRange { genus: 0, min: 1 });
    }
    if k_cut == 0 {
        return Err(Error::TruncationTooLow { got: 0, min: 1 });
    }
    Ok(())
}

/// Multi-cover form: for each class, `Σ_{k=1}^{K} n0_β (1/k) S(kλ) (q^β)^k`
/// with `S(s)` the Laurent expansion of `(2 sin(s/2))^{-2}` through
/// `λ^{2G-2}`.
pub fn resum_genus0(data: &GvDataset, genus_cut: u32, k_cut: u32) -> Result<MultiClassSeries> {
    check_cuts(genus_cut, k_cut)?;
    let base = sin_expansion(2 * genus_cut as i32 - 2)?;
    let covers: Vec<LambdaSeries> = (1..=k_cut)
        .map(|k| {
            let k_q = int(k.into());
            base.rescale_variable(&k_q).scale(&k_q.recip())
        })
        .collect();
    let per_class = data
        .classes
        .iter()
        .map(|c| {
            let n0 = Rational::from_integer(c.n0.clone());
            let series = QSeries::from_terms(k_cut, (1..=k_cut).zip(&covers).map(|(k, f)| (k, f.scale(&n0))));
            (c.label.clone(), series)
        })
        .collect();
    Ok(MultiClassSeries { per_class })
}

/// Per-genus form: the `λ^{2g-2}` part of class `β` is
/// `n0_β c_g Li_{3-2g}(q^β)` (with `c_0 = 1`). Returns, per class, the
/// series for `g = 0..=G` in order.
pub fn resum_genus0_by_genus(
    data: &GvDataset,
    genus_cut: u32,
    k_cut: u32,
) -> Result<Vec<(String, Vec<QSeries<Rational>>)>> {
    check_cuts(genus_cut, k_cut)?;
    Ok(data
        .classes
        .iter()
        .map(|c| {
            let n0 = Rational::from_integer(c.n0.clone());
            let genera = (0..=genus_cut)
                .map(|g| {
                    let li = polylog_series(3 - 2 * g as i32, k_cut).scale(&n0);
                    if g == 0 {
                        li
                    } else {
                        li.scale(&gw_genus_coeff(g).expect("g >= 1"))
                    }
                })
                .collect();
            (c.label.clone(), genera)
        })
        .collect())
}

/// Compare the multi-cover and per-genus forms coefficient by coefficient.
pub fn check_resummation_forms(data: &GvDataset, genus_cut: u32, k_cut: u32) -> Result<CheckReport> {
    let lambda_order = 2 * genus_cut as i32 - 2;
    let covers = resum_genus0(data, genus_cut, k_cut)?;
    let by_genus = resum_genus0_by_genus(data, genus_cut, k_cut)?;
    for (label, genera) in &by_genus {
        for (g, expected) in genera.iter().enumerate() {
            let actual = covers.genus_component(label, g as u32).expect("same labels");
            for k in 1..=k_cut {
                let (a, x) =
                    (actual.coeff(k).cloned().unwrap_or_default(), expected.coeff(k).cloned().unwrap_or_default());
                if a != x {
                    let m = crate::check::Mismatch {
                        q_degree: Some(k),
                        lambda_exp: 2 * g as i32 - 2,
                        expected: x,
                        actual: a,
                        class: Some(label.clone()),
                    };
                    return Ok(CheckReport::new("gv_resummation_forms", lambda_order, k_cut, Some(m)));
                }
            }
        }
    }
    Ok(CheckReport::new("gv_resummation_forms", lambda_order, k_cut, None))
}

// Degree of q^α in (q^β)^k.
fn alpha_degree(label: &str, alpha: &str, k: u32) -> u32 {
    if label == alpha {
        k
    } else {
        0
    }
}

/// Left side of the corollary: the central second difference in `t^α`
/// applied to every class. A class `β ≠ α` does not depend on `t^α`, so its
/// shift symbol is the zero series and its contribution vanishes
/// identically. Results are known through `λ^{2G}`.
pub fn second_difference(series: &MultiClassSeries, alpha: &str) -> Result<MultiClassSeries> {
    if series.get(alpha).is_none() {
        return Err(Error::UnknownClass(alpha.into()));
    }
    let per_class = series
        .per_class
        .iter()
        .map(|(label, s)| {
            let out = s.try_map(|k, f| {
                let top = f.max_exp() + 2;
                central_difference_symbol(alpha_degree(label, alpha, k), top + 2)?.mul(f)
            })?;
            Ok((label.clone(), out))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiClassSeries { per_class })
}

/// Right side: `(1/2π ∂_{t^α})^2 Σ_β n0_β Li_3(q^β)`. On `(q^β)^k` the
/// operator multiplies by `-(deg_α)^2`, which is zero for `β ≠ α`.
pub fn alpha_derivative_squared(data: &GvDataset, alpha: &str, k_cut: u32) -> Result<Vec<(String, QSeries<Rational>)>> {
    if data.get(alpha).is_none() {
        return Err(Error::UnknownClass(alpha.into()));
    }
    Ok(data
        .classes
        .iter()
        .map(|c| {
            let genus0 = polylog_series(3, k_cut).scale(&Rational::from_integer(c.n0.clone()));
            let rhs = genus0.map(|k, v| {
                let d = BigInt::from(alpha_degree(&c.label, alpha, k));
                -(v * (&d * &d))
            });
            (c.label.clone(), rhs)
        })
        .collect())
}

/// Verify the difference equation of the genus-zero resummed potential in
/// the variable `t^α`, class by class and cover by cover, through `λ^{2G}`.
pub fn check_gv_corollary(data: &GvDataset, alpha: &str, genus_cut: u32, k_cut: u32) -> Result<CheckReport> {
    const NAME: &str = "gv_difference_equation";
    if data.get(alpha).is_none() {
        return Err(Error::UnknownClass(alpha.into()));
    }
    let lambda_order = 2 * genus_cut as i32 - 2;
    let top = lambda_order + 2;
    let lhs = second_difference(&resum_genus0(data, genus_cut, k_cut)?, alpha)?;
    let rhs = alpha_derivative_squared(data, alpha, k_cut)?;

    for ((label, lhs_class), (_, rhs_class)) in lhs.iter().zip(&rhs) {
        for k in 1..=k_cut {
            let actual = match lhs_class.coeff(k) {
                Some(f) => f.clone(),
                None => LambdaSeries::zero(top)?,
            };
            let value = rhs_class.coeff(k).cloned().unwrap_or_else(Rational::zero);
            let expected = LambdaSeries::monomial(0, value, top)?;
            if let Some(mut m) = first_difference(&actual, &expected, 0, top, Some(k)) {
                m.class = Some(label.into());
                return Ok(CheckReport::new(NAME, lambda_order, k_cut, Some(m)));
            }
        }
    }
    Ok(CheckReport::new(NAME, lambda_order, k_cut, None))
}
