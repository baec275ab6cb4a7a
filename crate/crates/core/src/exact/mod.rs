//! Exact and validated arithmetic: rationals, Bernoulli numbers, dyadic
//! intervals and rational reconstruction.

mod bernoulli;
mod interval;
mod rational;
mod reconstruct;

pub use bernoulli::{bernoulli, bernoulli_polynomial, binomial};
pub use interval::{decimal_string, RealInterval, DEFAULT_PRECISION};
pub use rational::{rat, ExactRational};
pub use reconstruct::{convergents, rational_reconstruct, round_to_integer};
