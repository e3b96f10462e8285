use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intpoly::{cyclotomic_polynomial, euler_phi};
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Per-order reduction data: `x^e mod Φ_m` for every `0 <= e < m`.
struct Ctx {
    phi: usize,
    pow: Vec<Vec<i64>>,
    modulus: Vec<Rational>,
}

fn ctx(m: u32) -> Arc<Ctx> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Ctx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(c) = cache.read().unwrap().get(&m) {
        return c.clone();
    }
    let poly = cyclotomic_polynomial(m);
    let phi = euler_phi(m) as usize;
    let low: Vec<i64> = poly.coeffs()[..phi]
        .iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect();
    let mut pow = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..m {
        pow.push(cur.clone());
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        for i in 0..phi {
            let shifted = if i > 0 { cur[i - 1] } else { 0 };
            next[i] = shifted
                .checked_sub(top.checked_mul(low[i]).expect("overflow"))
                .expect("overflow");
        }
        cur = next;
    }
    let modulus = poly.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect();
    let c = Arc::new(Ctx { phi, pow, modulus });
    cache.write().unwrap().insert(m, c.clone());
    c
}

/// Exact element of the cyclotomic field `Q(ω_m)` in the power basis modulo `Φ_m`.
///
/// Stored as integer numerators over one positive common denominator. Rational values are
/// always kept at order 1 so that equality is a coefficient comparison.
#[derive(Clone, Debug)]
pub struct CycloScalar {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

/// Binary operations accepted by [`cyclo_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycloOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(i64),
}

/// Dispatches one field operation; `Pow` ignores `b`.
pub fn cyclo_arith(a: &CycloScalar, b: &CycloScalar, op: CycloOp) -> Result<CycloScalar> {
    Ok(match op {
        CycloOp::Add => a + b,
        CycloOp::Sub => a - b,
        CycloOp::Mul => a * b,
        CycloOp::Div => a.checked_div(b)?,
        CycloOp::Pow(e) => a.pow(e)?,
    })
}

impl CycloScalar {
    fn raw(order: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut s = CycloScalar { order, num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.order > 1 && self.num[1..].iter().all(Zero::is_zero) {
            self.order = 1;
            self.num.truncate(1);
        }
        if self.num[0].is_zero() && self.order == 1 {
            self.den = BigInt::one();
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        CycloScalar { order: 1, num: vec![r.numer().clone()], den: r.denom().clone() }
    }

    pub fn from_int(n: i64) -> Self {
        CycloScalar { order: 1, num: vec![BigInt::from(n)], den: BigInt::one() }
    }

    /// `ω_m^e` for the fixed primitive root `ω_m = exp(2πi/m)`; negative exponents allowed.
    pub fn root(m: u32, e: i64) -> Self {
        assert!(m >= 1, "root order must be positive");
        let e = e.rem_euclid(m as i64) as usize;
        let c = ctx(m);
        let num = c.pow[e].iter().map(|&x| BigInt::from(x)).collect();
        Self::raw(m, num, BigInt::one())
    }

    /// Builds from power-basis coordinates, which must number `φ(m)`.
    pub fn from_coeffs(m: u32, coeffs: &[Rational]) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameters("cyclotomic order must be positive".into()));
        }
        let phi = euler_phi(m) as usize;
        if coeffs.len() != phi {
            return Err(Error::InvalidParameters(format!(
                "order {m} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::raw(m, num, den))
    }

    /// Builds `Σ_e counts[e] ω_m^e / den` from coefficients in the cyclic basis (length `m`).
    pub fn from_cyclic(m: u32, counts: &[BigInt], den: BigInt) -> Self {
        assert_eq!(counts.len(), m as usize);
        let c = ctx(m);
        let mut num = vec![BigInt::zero(); c.phi];
        for (e, k) in counts.iter().enumerate() {
            if k.is_zero() {
                continue;
            }
            if e < c.phi {
                num[e] += k;
            } else {
                for (slot, &t) in num.iter_mut().zip(&c.pow[e]) {
                    if t != 0 {
                        *slot += k * t;
                    }
                }
            }
        }
        Self::raw(m, num, den)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|n| Rational::new(n.clone(), self.den.clone())).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Rewrites the element at order `target`, which must be a multiple of the current order.
    pub fn promote(&self, target: u32) -> Self {
        assert!(target % self.order == 0, "cannot promote order {} to {target}", self.order);
        if target == self.order {
            return self.clone();
        }
        if self.is_rational() {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut counts = vec![BigInt::zero(); target as usize];
        for (i, c) in self.num.iter().enumerate() {
            counts[i * step] = c.clone();
        }
        Self::from_cyclic(target, &counts, self.den.clone())
    }

    /// Coordinates at order `m` without demoting rationals.
    fn coords_at(&self, m: u32) -> Vec<BigInt> {
        let phi = euler_phi(m) as usize;
        if self.is_rational() {
            let mut v = vec![BigInt::zero(); phi];
            v[0] = self.num[0].clone();
            return v;
        }
        if self.order == m {
            return self.num.clone();
        }
        let step = (m / self.order) as usize;
        let c = ctx(m);
        let mut v = vec![BigInt::zero(); phi];
        for (i, k) in self.num.iter().enumerate() {
            if k.is_zero() {
                continue;
            }
            for (slot, &t) in v.iter_mut().zip(&c.pow[i * step]) {
                if t != 0 {
                    *slot += k * t;
                }
            }
        }
        v
    }

    pub fn is_root_of_unity(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let m = self.order as i64 * 2;
        self.pow(m).map(|p| p.is_one()).unwrap_or(false)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_m`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(CycloScalar {
                order: 1,
                num: vec![if self.num[0].is_negative() { -self.den.clone() } else { self.den.clone() }],
                den: self.num[0].abs(),
            });
        }
        let c = ctx(self.order);
        let a: Vec<Rational> = self.coeffs();
        let (mut r0, mut r1) = (c.modulus.clone(), trim(a));
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let k = r1.first().cloned().ok_or_else(|| Error::Inconsistency("cyclotomic gcd vanished".into()))?;
        let (_, s) = poly_divrem(&s1, &c.modulus);
        let mut coeffs: Vec<Rational> = s.into_iter().map(|x| x / &k).collect();
        coeffs.resize(c.phi, Rational::zero());
        Self::from_coeffs(self.order, &coeffs)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::raw(self.order, num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let num = self.num.iter().map(|c| c * k).collect();
        Self::raw(self.order, num, self.den.clone())
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let m = num_integer::lcm(self.order, other.order);
        let a = self.coords_at(m);
        let b = other.coords_at(m);
        let num = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                let l = x * &other.den;
                let r = y * &self.den;
                if negate { l - r } else { l + r }
            })
            .collect();
        Self::raw(m, num, &self.den * &other.den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_rational() {
            return other.scale(&Rational::new(self.num[0].clone(), self.den.clone()));
        }
        if other.is_rational() {
            return self.scale(&Rational::new(other.num[0].clone(), other.den.clone()));
        }
        let m = num_integer::lcm(self.order, other.order);
        let a = self.coords_at(m);
        let b = other.coords_at(m);
        let mu = m as usize;
        let mut counts = vec![BigInt::zero(); mu];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                counts[(i + j) % mu] += x * y;
            }
        }
        Self::from_cyclic(m, &counts, &self.den * &other.den)
    }

    fn render_coeff(r: &Rational) -> String {
        format_rational(r)
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

impl Zero for CycloScalar {
    fn zero() -> Self {
        CycloScalar { order: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }
    fn is_zero(&self) -> bool {
        self.order == 1 && self.num[0].is_zero()
    }
}

impl One for CycloScalar {
    fn one() -> Self {
        CycloScalar { order: 1, num: vec![BigInt::one()], den: BigInt::one() }
    }
    fn is_one(&self) -> bool {
        self.order == 1 && self.num[0].is_one() && self.den.is_one()
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.num == other.num && self.den == other.den;
        }
        if self.is_rational() || other.is_rational() {
            return false;
        }
        let m = num_integer::lcm(self.order, other.order);
        let a = self.coords_at(m);
        let b = other.coords_at(m);
        a.iter().zip(&b).all(|(x, y)| x * &other.den == y * &self.den)
    }
}

impl Eq for CycloScalar {}

impl From<i64> for CycloScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for CycloScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

impl From<&Rational> for CycloScalar {
    fn from(r: &Rational) -> Self {
        Self::from_rational(r)
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar { order: self.order, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycloScalar> for &CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: &CycloScalar) -> CycloScalar {
                let f: fn(&CycloScalar, &CycloScalar) -> CycloScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: &CycloScalar) -> CycloScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<CycloScalar> for &CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: CycloScalar) -> CycloScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
// Panics on a zero divisor; use `checked_div` to get an error instead.
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycloScalar> for CycloScalar {
    fn mul_assign(&mut self, rhs: &CycloScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for CycloScalar {
    /// Rationals print as `p/q`; other elements as `(c0 + c1*w_m + c2*w_m^2 ...)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        let mut parts = Vec::new();
        for (e, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let body = match (e, a.is_one()) {
                (0, _) => Self::render_coeff(&a),
                (1, true) => format!("w{}", self.order),
                (1, false) => format!("{}*w{}", Self::render_coeff(&a), self.order),
                (_, true) => format!("w{}^{e}", self.order),
                (_, false) => format!("{}*w{}^{e}", Self::render_coeff(&a), self.order),
            };
            parts.push((neg, body));
        }
        write!(f, "(")?;
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Wire {
    Rational(String),
    Cyclo { order: u32, coeffs: Vec<String> },
}

impl Serialize for CycloScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let w = match self.to_rational() {
            Some(r) => Wire::Rational(format_rational(&r)),
            None => Wire::Cyclo {
                order: self.order,
                coeffs: self.coeffs().iter().map(format_rational).collect(),
            },
        };
        w.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Wire::deserialize(d)? {
            Wire::Rational(s) => parse_rational(&s).map(|r| Self::from_rational(&r)).map_err(D::Error::custom),
            Wire::Cyclo { order, coeffs } => {
                let cs = coeffs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>().map_err(D::Error::custom)?;
                Self::from_coeffs(order, &cs).map_err(D::Error::custom)
            }
        }
    }
}
