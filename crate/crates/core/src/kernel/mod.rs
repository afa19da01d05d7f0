//! Exact arithmetic: rationals, polynomials, rational functions and the
//! λ = x² embedding.

pub mod lambda;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use lambda::{lambda_embed, lambda_extract, LambdaPoly};
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use rational::{format_rational, int, parse_rational, parse_rational_list, rat, Rational};
