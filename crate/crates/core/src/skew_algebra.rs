//! Normal-form arithmetic in the quantum plane (`vu = q uv`) and the Jordan plane (`vu = uv + u^2`).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{binomial_i64, factorial, CycloScalar, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Quantum,
    Jordan,
}

/// Which plane we are working in; the commutative plane is the quantum plane with `q = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub kind: AlgebraKind,
    q: Option<CycloScalar>,
    /// `q = ω_m^e` when `q` is a root of unity, as `(m, e)`.
    q_root: Option<(u32, u32)>,
}

impl AlgebraSpec {
    pub fn quantum(q: CycloScalar) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidParameters("q must be nonzero".into()));
        }
        let q_root = find_root(&q);
        Ok(AlgebraSpec { kind: AlgebraKind::Quantum, q: Some(q), q_root })
    }

    /// Quantum plane with `q = ω_m`.
    pub fn quantum_root(m: u32) -> Self {
        AlgebraSpec { kind: AlgebraKind::Quantum, q: Some(CycloScalar::root(m, 1)), q_root: Some((m, 1)) }
    }

    pub fn qminus1() -> Self {
        AlgebraSpec { kind: AlgebraKind::Quantum, q: Some(CycloScalar::from_int(-1)), q_root: Some((2, 1)) }
    }

    pub fn commutative() -> Self {
        AlgebraSpec { kind: AlgebraKind::Quantum, q: Some(CycloScalar::one()), q_root: Some((1, 0)) }
    }

    pub fn jordan() -> Self {
        AlgebraSpec { kind: AlgebraKind::Jordan, q: None, q_root: None }
    }

    pub fn q(&self) -> Option<&CycloScalar> {
        self.q.as_ref()
    }

    pub fn is_jordan(&self) -> bool {
        self.kind == AlgebraKind::Jordan
    }

    pub fn is_commutative(&self) -> bool {
        self.q.as_ref().is_some_and(One::is_one)
    }

    pub fn is_qminus1(&self) -> bool {
        self.q.as_ref().is_some_and(|q| *q == CycloScalar::from_int(-1))
    }

    /// `q^e`, cheap when `q` is a known root of unity.
    pub fn q_pow(&self, e: i64) -> CycloScalar {
        match (self.q_root, &self.q) {
            (Some((m, k)), _) => CycloScalar::root(m, k as i64 * e),
            (None, Some(q)) => q.pow(e).expect("q is nonzero"),
            (None, None) => CycloScalar::one(),
        }
    }

    /// Short human-readable label.
    pub fn label(&self) -> String {
        match (&self.kind, &self.q) {
            (AlgebraKind::Jordan, _) => "jordan".into(),
            (_, Some(q)) if q.is_one() => "commutative".into(),
            (_, Some(q)) => match self.q_root {
                Some((2, 1)) => "quantum(-1)".into(),
                Some((m, 1)) => format!("quantum(w{m})"),
                _ => format!("quantum({q})"),
            },
            _ => unreachable!(),
        }
    }
}

fn find_root(q: &CycloScalar) -> Option<(u32, u32)> {
    if q.is_one() {
        return Some((1, 0));
    }
    if *q == CycloScalar::from_int(-1) {
        return Some((2, 1));
    }
    if q.is_rational() {
        return None;
    }
    let m = q.order() * 2;
    (0..m).find(|&e| CycloScalar::root(m, e as i64) == *q).map(|e| (m, e))
}

/// `u^i v^j`, ordered lexicographically by `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub fn new(i: u32, j: u32) -> Self {
        Monomial { i, j }
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j
    }
}

impl From<(u32, u32)> for Monomial {
    fn from((i, j): (u32, u32)) -> Self {
        Monomial { i, j }
    }
}

/// Element of the plane in normal form `Σ c u^i v^j`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElt {
    terms: BTreeMap<Monomial, CycloScalar>,
}

impl AlgebraElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        Self::term(CycloScalar::one(), i, j)
    }

    pub fn term(c: CycloScalar, i: u32, j: u32) -> Self {
        let mut e = Self::zero();
        e.add_term(Monomial::new(i, j), c);
        e
    }

    pub fn u() -> Self {
        Self::monomial(1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, CycloScalar)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> CycloScalar {
        self.terms.get(&Monomial::new(i, j)).cloned().unwrap_or_else(CycloScalar::zero)
    }

    /// The common degree of all terms, if the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next().copied()
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElt { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&CycloScalar::from_rational(r))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        AlgebraElt { terms: self.terms.iter().map(|(m, x)| (*m, -x)).collect() }
    }

    /// Coordinates in degree `d` indexed by the `u`-exponent, for homogeneous pieces.
    pub fn degree_part(&self, d: u32) -> Vec<(usize, CycloScalar)> {
        self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.i as usize, c.clone())).collect()
    }

    /// Inverse of [`AlgebraElt::degree_part`].
    pub fn from_degree_part(d: u32, v: &[(usize, CycloScalar)]) -> Self {
        Self::from_terms(v.iter().map(|(i, c)| (Monomial::new(*i as u32, d - *i as u32), c.clone())))
    }
}

impl fmt::Display for AlgebraElt {
    /// Canonical rendering such as `u^3 - 2*u*v^2 + (w5)*v^3`, in `(i, j)`-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            match m.i {
                0 => {}
                1 => factors.push("u".to_string()),
                i => factors.push(format!("u^{i}")),
            }
            match m.j {
                0 => {}
                1 => factors.push("v".to_string()),
                j => factors.push(format!("v^{j}")),
            }
            let (neg, mag) = match c.to_rational() {
                Some(r) if r.is_negative() => (true, CycloScalar::from_rational(&-r)),
                _ => (false, c.clone()),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() || factors.is_empty() {
                factors.insert(0, mag.to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    i: u32,
    j: u32,
    coeff: CycloScalar,
}

impl Serialize for AlgebraElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<WireTerm> =
            self.terms.iter().map(|(m, c)| WireTerm { i: m.i, j: m.j, coeff: c.clone() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<WireTerm>::deserialize(d)?;
        Ok(Self::from_terms(v.into_iter().map(|t| (Monomial::new(t.i, t.j), t.coeff))))
    }
}

/// Terms `(extra u, consumed v, coefficient)` of the Jordan rewrite of `v^i u^j`.
fn jordan_reorder_terms(i: u32, j: u32) -> Vec<(u32, u32, BigInt)> {
    if j == 0 {
        return vec![(0, 0, BigInt::one())];
    }
    (0..=i)
        .map(|k| {
            let c = factorial(k) * binomial_i64((j + k) as i64 - 1, k as i64) * binomial_i64(i as i64, k as i64);
            (k, k, c)
        })
        .collect()
}

/// Normal form of `v^i u^j`.
pub fn reorder(spec: &AlgebraSpec, i: u32, j: u32) -> AlgebraElt {
    match spec.kind {
        AlgebraKind::Quantum => AlgebraElt::term(spec.q_pow(i as i64 * j as i64), j, i),
        AlgebraKind::Jordan => AlgebraElt::from_terms(
            jordan_reorder_terms(i, j)
                .into_iter()
                .map(|(k, _, c)| (Monomial::new(j + k, i - k), CycloScalar::from_rational(&Rational::from_integer(c)))),
        ),
    }
}

/// Product of two elements, in normal form.
pub fn mul(spec: &AlgebraSpec, a: &AlgebraElt, b: &AlgebraElt) -> AlgebraElt {
    let mut out: BTreeMap<Monomial, CycloScalar> = BTreeMap::new();
    let mut push = |m: Monomial, c: CycloScalar| {
        let slot = out.entry(m).or_insert_with(CycloScalar::zero);
        *slot += &c;
    };
    for (m1, c1) in &a.terms {
        for (m2, c2) in &b.terms {
            let c = c1 * c2;
            match spec.kind {
                AlgebraKind::Quantum => {
                    let q = spec.q_pow(m1.j as i64 * m2.i as i64);
                    push(Monomial::new(m1.i + m2.i, m1.j + m2.j), &c * &q);
                }
                AlgebraKind::Jordan => {
                    for (k, _, coef) in jordan_reorder_terms(m1.j, m2.i) {
                        let m = Monomial::new(m1.i + m2.i + k, m1.j - k + m2.j);
                        push(m, c.scale_int(&coef));
                    }
                }
            }
        }
    }
    AlgebraElt { terms: out.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
}

/// `a^e` for `e >= 0`.
pub fn pow(spec: &AlgebraSpec, a: &AlgebraElt, e: u32) -> AlgebraElt {
    let mut acc = AlgebraElt::one();
    for _ in 0..e {
        acc = mul(spec, &acc, a);
    }
    acc
}

/// Product of a sequence of elements, left to right.
pub fn product<'a, I: IntoIterator<Item = &'a AlgebraElt>>(spec: &AlgebraSpec, it: I) -> AlgebraElt {
    it.into_iter().fold(AlgebraElt::one(), |acc, x| mul(spec, &acc, x))
}

/// `ab - ba`.
pub fn commutator(spec: &AlgebraSpec, a: &AlgebraElt, b: &AlgebraElt) -> AlgebraElt {
    mul(spec, a, b).sub(&mul(spec, b, a))
}

/// A 2x2 matrix `[[a, b], [c, d]]` acting by `u -> a u + c v`, `v -> b u + d v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: CycloScalar,
    pub b: CycloScalar,
    pub c: CycloScalar,
    pub d: CycloScalar,
}

impl Mat2 {
    pub fn new(a: CycloScalar, b: CycloScalar, c: CycloScalar, d: CycloScalar) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::diag(CycloScalar::one(), CycloScalar::one())
    }

    pub fn diag(a: CycloScalar, d: CycloScalar) -> Self {
        Mat2 { a, b: CycloScalar::zero(), c: CycloScalar::zero(), d }
    }

    /// `[[0, b], [c, 0]]`.
    pub fn antidiag(b: CycloScalar, c: CycloScalar) -> Self {
        Mat2 { a: CycloScalar::zero(), b, c, d: CycloScalar::zero() }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn pow(&self, e: u32) -> Mat2 {
        (0..e).fold(Mat2::identity(), |acc, _| acc.mul(self))
    }

    pub fn det(&self) -> CycloScalar {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn is_diagonal(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_antidiagonal(&self) -> bool {
        self.a.is_zero() && self.d.is_zero()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Coordinates of a degree-2 free-algebra element in the basis `uu, uv, vu, vv`.
type Quad = [CycloScalar; 4];

fn relation_vector(spec: &AlgebraSpec) -> Quad {
    let z = CycloScalar::zero;
    match spec.kind {
        AlgebraKind::Quantum => [z(), -spec.q().unwrap(), CycloScalar::one(), z()],
        AlgebraKind::Jordan => [CycloScalar::from_int(-1), CycloScalar::from_int(-1), CycloScalar::one(), z()],
    }
}

/// Image of the defining relation under the free-algebra lift of `m`.
fn relation_image(spec: &AlgebraSpec, m: &Mat2) -> Quad {
    // images of u and v as (coefficient of U, coefficient of V)
    let img = [(&m.a, &m.c), (&m.b, &m.d)];
    let r = relation_vector(spec);
    let mut out: Quad = std::array::from_fn(|_| CycloScalar::zero());
    for (w, coef) in r.iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        let (x, y) = (img[w / 2], img[w % 2]);
        let parts = [x.0 * y.0, x.0 * y.1, x.1 * y.0, x.1 * y.1];
        for (slot, p) in out.iter_mut().zip(parts) {
            *slot += &(coef * &p);
        }
    }
    out
}

/// Checks that `m` preserves the relation span and returns the scalar it acts by there.
pub fn validate_aut(spec: &AlgebraSpec, m: &Mat2) -> Result<CycloScalar> {
    if m.det().is_zero() {
        return Err(Error::InvalidAutomorphism(format!("matrix {m} is not invertible")));
    }
    let r = relation_vector(spec);
    let img = relation_image(spec, m);
    let lambda = img[2].clone();
    let ok = img.iter().zip(&r).all(|(x, y)| *x == &lambda * y);
    if ok {
        return Ok(lambda);
    }
    let why = match spec.kind {
        AlgebraKind::Jordan => "the Jordan plane only admits matrices [[a, b], [0, a]]".to_string(),
        AlgebraKind::Quantum if spec.is_qminus1() => {
            "the quantum plane with q = -1 only admits diagonal or antidiagonal matrices".to_string()
        }
        AlgebraKind::Quantum => format!("the quantum plane with q = {} only admits diagonal matrices", spec.q().unwrap()),
    };
    Err(Error::InvalidAutomorphism(format!("{m} does not preserve the defining relation: {why}")))
}

/// Applies the graded automorphism `m` to `a`.
pub fn apply_aut(spec: &AlgebraSpec, m: &Mat2, a: &AlgebraElt) -> Result<AlgebraElt> {
    validate_aut(spec, m)?;
    Ok(apply_unchecked(spec, m, a))
}

/// [`apply_aut`] without the validity check; callers must have validated `m`.
pub fn apply_unchecked(spec: &AlgebraSpec, m: &Mat2, a: &AlgebraElt) -> AlgebraElt {
    if m.is_diagonal() {
        return AlgebraElt::from_terms(a.terms().map(|(mo, c)| {
            let s = &m.a.pow(mo.i as i64).unwrap() * &m.d.pow(mo.j as i64).unwrap();
            (*mo, c * &s)
        }));
    }
    if m.is_antidiagonal() {
        let mut out = AlgebraElt::zero();
        for (mo, c) in a.terms() {
            let s = &m.c.pow(mo.i as i64).unwrap() * &m.b.pow(mo.j as i64).unwrap();
            out = out.add(&reorder(spec, mo.i, mo.j).scale(&(c * &s)));
        }
        return out;
    }
    let gu = AlgebraElt::from_terms([(Monomial::new(1, 0), m.a.clone()), (Monomial::new(0, 1), m.c.clone())]);
    let gv = AlgebraElt::from_terms([(Monomial::new(1, 0), m.b.clone()), (Monomial::new(0, 1), m.d.clone())]);
    let maxi = a.terms().map(|(mo, _)| mo.i).max().unwrap_or(0);
    let maxj = a.terms().map(|(mo, _)| mo.j).max().unwrap_or(0);
    let pu = powers(spec, &gu, maxi);
    let pv = powers(spec, &gv, maxj);
    let mut out = AlgebraElt::zero();
    for (mo, c) in a.terms() {
        out = out.add(&mul(spec, &pu[mo.i as usize], &pv[mo.j as usize]).scale(c));
    }
    out
}

/// `[1, x, x^2, ..., x^n]`.
pub fn powers(spec: &AlgebraSpec, x: &AlgebraElt, n: u32) -> Vec<AlgebraElt> {
    let mut v = vec![AlgebraElt::one()];
    for k in 0..n as usize {
        let next = mul(spec, &v[k], x);
        v.push(next);
    }
    v
}

/// All monomials of degree `d`, in `(i, j)`-lex order.
pub fn monomials(d: u32) -> impl Iterator<Item = Monomial> {
    (0..=d).map(move |i| Monomial::new(i, d - i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycloScalar {
        CycloScalar::from_int(n)
    }

    #[test]
    fn reorder_examples() {
        let q = AlgebraSpec::quantum_root(5);
        assert_eq!(reorder(&q, 1, 1), AlgebraElt::term(CycloScalar::root(5, 1), 1, 1));
        let j = AlgebraSpec::jordan();
        assert_eq!(reorder(&j, 1, 1), AlgebraElt::from_terms([(Monomial::new(1, 1), c(1)), (Monomial::new(2, 0), c(1))]));
        let expect = AlgebraElt::from_terms([
            (Monomial::new(1, 2), c(1)),
            (Monomial::new(2, 1), c(2)),
            (Monomial::new(3, 0), c(2)),
        ]);
        assert_eq!(reorder(&j, 2, 1), expect);
    }

    #[test]
    fn mul_examples() {
        let q = AlgebraSpec::quantum_root(5);
        assert_eq!(mul(&q, &AlgebraElt::u(), &AlgebraElt::v()), AlgebraElt::monomial(1, 1));
        let uv = AlgebraElt::monomial(1, 1);
        assert_eq!(mul(&q, &uv, &uv), AlgebraElt::term(CycloScalar::root(5, 1), 2, 2));
    }

    #[test]
    fn aut_validity() {
        let w = CycloScalar::root(3, 1);
        let j = AlgebraSpec::jordan();
        assert!(validate_aut(&j, &Mat2::new(w.clone(), c(5), c(0), w.clone())).is_ok());
        let e = validate_aut(&j, &Mat2::diag(w.clone(), c(1))).unwrap_err();
        assert!(e.to_string().contains("[[a, b], [0, a]]"));
        let qm = AlgebraSpec::qminus1();
        assert!(validate_aut(&qm, &Mat2::antidiag(c(1), c(1))).is_ok());
        assert!(validate_aut(&qm, &Mat2::new(c(1), c(1), c(0), c(1))).is_err());
        let q5 = AlgebraSpec::quantum_root(5);
        assert!(validate_aut(&q5, &Mat2::antidiag(c(1), c(1))).is_err());
        assert!(validate_aut(&AlgebraSpec::commutative(), &Mat2::new(c(1), c(2), c(3), c(4))).is_ok());
        assert!(validate_aut(&AlgebraSpec::commutative(), &Mat2::new(c(1), c(2), c(2), c(4))).is_err());
    }

    #[test]
    fn antidiagonal_on_uv() {
        let qm = AlgebraSpec::qminus1();
        let (b, cc) = (CycloScalar::root(8, 1), CycloScalar::root(8, 3));
        let out = apply_aut(&qm, &Mat2::antidiag(b.clone(), cc.clone()), &AlgebraElt::monomial(1, 1)).unwrap();
        assert_eq!(out, AlgebraElt::term(-(&b * &cc), 1, 1));
    }

    #[test]
    fn display_is_canonical() {
        let e = AlgebraElt::from_terms([(Monomial::new(0, 7), c(-1)), (Monomial::new(7, 0), c(1))]);
        assert_eq!(e.to_string(), "-v^7 + u^7");
        assert_eq!(AlgebraElt::one().to_string(), "1");
    }
}
