//! Exact scalars: rationals, cyclotomic fields and generalized binomials.

mod binomial;
mod cyclo;
mod intpoly;
mod rational;

pub use binomial::{binomial_i64, factorial, gen_binomial};
pub use cyclo::{cyclo_arith, CycloOp, CycloScalar};
pub use intpoly::{cyclotomic_polynomial, euler_phi, IntPolynomial};
pub use rational::{format_rational, parse_rational, rat, Rational};

/// Least common multiple of two positive integers.
pub fn lcm_u32(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

/// Greatest common divisor, always non-negative.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}
