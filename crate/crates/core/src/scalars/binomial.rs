use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;

/// Generalized binomial coefficient `alpha (alpha-1) ... (alpha-k+1) / k!`.
pub fn gen_binomial(alpha: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= alpha - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `k!` as a big integer.
pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, i| a * i)
}

/// Ordinary binomial `C(n, k)` for machine integers; zero outside `0 <= k <= n`.
pub fn binomial_i64(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn examples() {
        assert_eq!(gen_binomial(&rat(5, 1), 2), rat(10, 1));
        assert_eq!(gen_binomial(&rat(2, 1), 3), rat(0, 1));
        assert_eq!(gen_binomial(&rat(-2, 1), 2), rat(3, 1));
        // (-1)^k C(a, k) = C(k - a - 1, k)
        for k in 0..7u32 {
            for a in -6..6i64 {
                let lhs = gen_binomial(&rat(a, 1), k) * rat(if k % 2 == 0 { 1 } else { -1 }, 1);
                let rhs = gen_binomial(&rat(k as i64 - a - 1, 1), k);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn integer_binomial_matches_general() {
        for n in 0..12i64 {
            for k in 0..14i64 {
                let g = gen_binomial(&rat(n, 1), k as u32);
                assert_eq!(g, Rational::from_integer(binomial_i64(n, k)));
            }
        }
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
