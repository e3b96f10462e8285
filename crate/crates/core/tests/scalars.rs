use asinv::scalars::{cyclotomic_polynomial, gen_binomial, rat, CycloScalar, IntPolynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn w(m: u32, e: i64) -> CycloScalar {
    CycloScalar::root(m, e)
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic_polynomial(1), IntPolynomial::from_i64(&[-1, 1]));
    assert_eq!(cyclotomic_polynomial(4), IntPolynomial::from_i64(&[1, 0, 1]));
    assert_eq!(cyclotomic_polynomial(6), IntPolynomial::from_i64(&[1, -1, 1]));
    // x^12 - 1 is the product of Φ_d over d | 12
    let prod = [1u32, 2, 3, 4, 6, 12].iter().fold(IntPolynomial::from_i64(&[1]), |acc, &d| acc.mul(&cyclotomic_polynomial(d)));
    assert_eq!(prod, IntPolynomial::x_pow_minus_one(12));
}

#[test]
fn arithmetic_examples() {
    assert_eq!(&w(2, 1) * &w(2, 1), CycloScalar::one());
    assert_eq!(w(4, 1).pow(2).unwrap(), CycloScalar::from_int(-1));
    assert!((CycloScalar::one() + w(3, 1) + w(3, 2)).is_zero());
    assert!(CycloScalar::zero().inv().is_err());
    assert_eq!(w(7, 3).pow(-3).unwrap(), w(7, -9));
}

#[test]
fn root_of_unity_sums() {
    for n in 1..=12u32 {
        for i in -2 * n as i64..=2 * n as i64 {
            let s = (0..n as i64).fold(CycloScalar::zero(), |acc, j| acc + w(n, i * j));
            let want = if i % n as i64 == 0 { n as i64 } else { 0 };
            assert_eq!(s, CycloScalar::from_int(want), "n={n}, i={i}");
        }
    }
}

#[test]
fn binomial_examples() {
    assert_eq!(gen_binomial(&rat(5, 1), 2), rat(10, 1));
    assert_eq!(gen_binomial(&rat(2, 1), 3), rat(0, 1));
    assert_eq!(gen_binomial(&rat(-2, 1), 2), rat(3, 1));
    // (-1)^k C(α, k) = C(k - α - 1, k)
    for k in 0..6u32 {
        for a in -5..6i64 {
            let alpha = rat(a, 3);
            let lhs = gen_binomial(&alpha, k) * Rational::from_integer(BigInt::from((-1i64).pow(k)));
            let rhs = gen_binomial(&(rat(k as i64 - 1, 1) - &alpha), k);
            assert_eq!(lhs, rhs);
        }
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| rat(n, d))
}

fn cyclo(m: u32) -> impl Strategy<Value = CycloScalar> {
    proptest::collection::vec(-5i64..6, m as usize).prop_map(move |cs| {
        cs.iter().enumerate().fold(CycloScalar::zero(), |acc, (e, &c)| acc + w(m, e as i64) * CycloScalar::from_int(c))
    })
}

proptest! {
    #[test]
    fn chu_vandermonde(a in small_rational(), b in small_rational(), n in 0u32..=8) {
        let lhs = (0..=n).fold(Rational::zero(), |acc, k| acc + gen_binomial(&a, k) * gen_binomial(&b, n - k));
        prop_assert_eq!(lhs, gen_binomial(&(&a + &b), n));
    }

    #[test]
    fn field_axioms(a in cyclo(12), b in cyclo(12), c in cyclo(5)) {
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn promotion_is_consistent(a in cyclo(6), b in cyclo(6)) {
        let direct = &a * &b;
        let promoted = &a.promote(12) * &b.promote(12);
        prop_assert_eq!(&direct, &promoted);
        prop_assert_eq!(&a + &b, a.promote(12) + b.promote(12));
    }
}
