//! Exact truncated-series machinery for the all-genus Gromov-Witten potential
//! of the resolved conifold.
//!
//! Everything here works over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate is `no_std` and only needs `alloc`.
//!
//! The pieces, bottom-up:
//!
//! - [`arith`]: rationals, Bernoulli and Eulerian numbers, genus coefficients.
//! - [`series`]: Laurent series in the coupling `λ`, power series in `q`,
//!   rational functions of `q`, and the central-difference symbol.
//! - [`polylog`]: integer-order polylogarithms.
//! - [`potential`]: the conifold potential, stored per `q`-degree.
//! - [`check`]: exact verification of the difference equation, the genus
//!   recursion and the Bernoulli generating identity.
//! - [`gv`]: genus-zero Gopakumar-Vafa resummation for arbitrary curve-class
//!   data and its difference equation.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod check;
mod error;
pub mod gv;
pub mod polylog;
pub mod potential;
pub mod series;

pub use arith::{bernoulli, constant_map_coeff, eulerian, factorial, gw_genus_coeff, int, rat, GenusCoeff, Rational};
pub use check::{
    check_difference_equation, check_generating_identity, check_recursion, check_recursion_upto, check_theorem,
    check_theorem_degree, genus_recursion_residual, solve_recursion, CheckReport, Mismatch,
};
pub use error::{Error, Result};
pub use gv::{
    alpha_derivative_squared, check_gv_corollary, check_resummation_forms, resum_genus0, resum_genus0_by_genus,
    second_difference, GvClass, GvDataset, MultiClassSeries,
};
pub use polylog::{li1_series, polylog_negative_closed, polylog_negative_eulerian, polylog_series};
pub use potential::{coefficient_closed_form, free_energy_genus, potential, sin_expansion, PotentialSeries};
pub use series::{central_difference_symbol, Coefficient, LambdaSeries, Poly, QSeries, RatFunc};
