//! Finite groups of graded automorphisms: construction, enumeration, trace series,
//! quasi-reflections, homological determinant and smallness.

mod roots;
mod series;

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

pub use roots::RootMatrix;
pub use series::{RationalFunction, TruncatedSeries};

use crate::error::{Error, Result};
use crate::scalars::{lcm_u32, CycloScalar};
use crate::skew_algebra::{mul, powers, validate_aut, AlgebraElt, AlgebraSpec, Mat2, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Diagonal,
    Antidiagonal,
    JordanTriangular,
    General,
}

impl Shape {
    pub fn of(m: &Mat2) -> Shape {
        if m.is_diagonal() {
            Shape::Diagonal
        } else if m.is_antidiagonal() {
            Shape::Antidiagonal
        } else if m.c.is_zero() && m.a == m.d {
            Shape::JordanTriangular
        } else {
            Shape::General
        }
    }
}

/// A graded automorphism given by its action on degree one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradedAut {
    pub matrix: Mat2,
    pub shape: Shape,
    /// Exponent form, when the matrix is monomial in powers of one root of unity.
    #[serde(skip)]
    pub roots: Option<RootMatrix>,
}

impl GradedAut {
    pub fn new(matrix: Mat2) -> Result<Self> {
        if matrix.det().is_zero() {
            return Err(Error::InvalidAutomorphism(format!("matrix {matrix} is not invertible")));
        }
        Ok(GradedAut { shape: Shape::of(&matrix), matrix, roots: None })
    }

    pub fn from_roots(r: RootMatrix) -> Self {
        let matrix = r.to_mat2();
        GradedAut { shape: Shape::of(&matrix), matrix, roots: Some(r) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GroupVariant {
    Trivial,
    /// Generated by `diag(ω_n, ω_n^a)`.
    CyclicDiag { n: u32, a: u32 },
    /// Generated by `diag(ω_n, ω_n^{-1})` and `antidiag(ω_{2k}, ω_{2k})`.
    Gnk { n: u32, k: u32 },
    /// Binary dihedral type: `diag(ω_{2q}, ω_{2q}^{-1})` and `antidiag(ω_{4(m-q)}, ω_{4(m-q)})`.
    Dihedral { m: u32, q: u32 },
}

impl std::fmt::Display for GroupVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupVariant::Trivial => write!(f, "trivial"),
            GroupVariant::CyclicDiag { n, a } => write!(f, "cyclic({n}, {a})"),
            GroupVariant::Gnk { n, k } => write!(f, "G({n}, {k})"),
            GroupVariant::Dihedral { m, q } => write!(f, "dihedral({m}, {q})"),
        }
    }
}

/// A finite group acting on a fixed ambient plane.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpec {
    pub variant: GroupVariant,
    pub ambient: AlgebraSpec,
}

impl GroupSpec {
    pub fn trivial(ambient: AlgebraSpec) -> Self {
        GroupSpec { variant: GroupVariant::Trivial, ambient }
    }

    /// Cyclic diagonal group `1/n(1, a)` with `1 <= a < n`, `gcd(a, n) = 1`.
    pub fn cyclic(ambient: AlgebraSpec, n: u32, a: u32) -> Result<Self> {
        if n < 2 || a == 0 || a >= n || n.gcd(&a) != 1 {
            return Err(Error::InvalidParameters(format!("cyclic group needs 1 <= a < n and gcd(a, n) = 1, got n={n}, a={a}")));
        }
        Self::cyclic_raw(ambient, n, a)
    }

    /// Cyclic diagonal group without the coprimality requirement (enumeration only).
    pub fn cyclic_raw(ambient: AlgebraSpec, n: u32, a: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("cyclic group order must be positive".into()));
        }
        Self::checked(GroupVariant::CyclicDiag { n, a: a % n }, ambient)
    }

    /// `G_{n,k}` acting on the `q = -1` plane.
    pub fn gnk(n: u32, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidParameters(format!("G(n, k) needs n, k >= 1, got ({n}, {k})")));
        }
        Self::checked(GroupVariant::Gnk { n, k }, AlgebraSpec::qminus1())
    }

    pub fn dihedral(ambient: AlgebraSpec, m: u32, q: u32) -> Result<Self> {
        if q <= 1 || q >= m || m.gcd(&q) != 1 {
            return Err(Error::InvalidParameters(format!("dihedral group needs 1 < q < m, gcd(m, q) = 1, got ({m}, {q})")));
        }
        Self::checked(GroupVariant::Dihedral { m, q }, ambient)
    }

    fn checked(variant: GroupVariant, ambient: AlgebraSpec) -> Result<Self> {
        let g = GroupSpec { variant, ambient };
        for r in g.generators() {
            validate_aut(&g.ambient, &r.to_mat2())?;
        }
        Ok(g)
    }

    /// The order of the root of unity all element entries are powers of.
    pub fn root_order(&self) -> u32 {
        match self.variant {
            GroupVariant::Trivial => 1,
            GroupVariant::CyclicDiag { n, .. } => n,
            GroupVariant::Gnk { n, k } => 2 * n * k,
            GroupVariant::Dihedral { m, q } => 4 * q * (m - q),
        }
    }

    pub fn generators(&self) -> Vec<RootMatrix> {
        let big = self.root_order();
        match self.variant {
            GroupVariant::Trivial => vec![RootMatrix::identity(1)],
            GroupVariant::CyclicDiag { n, a } => vec![RootMatrix::diag(n, 1, a as i64)],
            GroupVariant::Gnk { n, k } => {
                vec![RootMatrix::diag(big, 2 * k as i64, -2 * k as i64), RootMatrix::antidiag(big, n as i64, n as i64)]
            }
            GroupVariant::Dihedral { m, q } => {
                let e = 2 * (m - q) as i64;
                vec![RootMatrix::diag(big, e, -e), RootMatrix::antidiag(big, q as i64, q as i64)]
            }
        }
    }

    /// Duplicate-free element list in exponent form, closure-checked.
    pub fn elements(&self) -> Result<Vec<RootMatrix>> {
        let big = self.root_order();
        let listed: Vec<RootMatrix> = match self.variant {
            GroupVariant::CyclicDiag { n, a } => (0..n).map(|i| RootMatrix::diag(n, i as i64, (a * i) as i64)).collect(),
            GroupVariant::Gnk { n, k } => {
                let (n, k) = (n as i64, k as i64);
                let mut v = Vec::with_capacity((2 * n * k) as usize);
                for i in 0..n {
                    for j in 0..k {
                        v.push(RootMatrix::diag(big, 2 * (n * j + k * i), 2 * (n * j - k * i)));
                    }
                }
                for i in 0..n {
                    for j in 0..k {
                        v.push(RootMatrix::antidiag(big, (2 * j + 1) * n + 2 * k * i, (2 * j + 1) * n - 2 * k * i));
                    }
                }
                v
            }
            GroupVariant::Trivial | GroupVariant::Dihedral { .. } => return Ok(self.closure()),
        };
        let mut seen = HashSet::new();
        let elems: Vec<RootMatrix> = listed.into_iter().filter(|x| seen.insert(*x)).collect();
        for s in self.generators() {
            for x in &elems {
                if !seen.contains(&s.mul(x)) {
                    return Err(Error::Inconsistency(format!("element list of {} is not closed", self.variant)));
                }
            }
        }
        Ok(elems)
    }

    fn closure(&self) -> Vec<RootMatrix> {
        let gens = self.generators();
        let id = RootMatrix::identity(self.root_order());
        let mut seen = HashSet::from([id]);
        let mut out = vec![id];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = s.mul(&x);
                if seen.insert(y) {
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }
}

/// Full element list as graded automorphisms.
pub fn enumerate_group(g: &GroupSpec) -> Result<Vec<GradedAut>> {
    Ok(g.elements()?.into_iter().map(GradedAut::from_roots).collect())
}

/// Image of `u^i v^j` under a monomial matrix: `ω_order^e · u^i' v^j'`, as `(monomial, e, order)`.
///
/// The matrix must be valid for `spec`.
pub fn root_monomial_image(spec: &AlgebraSpec, r: &RootMatrix, i: u32, j: u32) -> (Monomial, u32, u32) {
    let m = lcm_u32(r.order, 2);
    let x = r.at_order(m);
    let (i64_, j64) = (i as u64, j as u64);
    let mm = m as u64;
    if !x.anti {
        let e = (x.e1 as u64 * i64_ + x.e2 as u64 * j64) % mm;
        return (Monomial::new(i, j), e as u32, m);
    }
    // u^i v^j -> (c v)^i (b u)^j = c^i b^j q^{ij} u^j v^i
    let mut e = (x.e2 as u64 * i64_ + x.e1 as u64 * j64) % mm;
    if spec.is_qminus1() && i % 2 == 1 && j % 2 == 1 {
        e = (e + mm / 2) % mm;
    }
    (Monomial::new(j, i), e as u32, m)
}

/// Applies a monomial matrix valid for `spec`.
pub fn apply_root(spec: &AlgebraSpec, r: &RootMatrix, a: &AlgebraElt) -> AlgebraElt {
    AlgebraElt::from_terms(a.terms().map(|(mo, c)| {
        let (img, e, m) = root_monomial_image(spec, r, mo.i, mo.j);
        (img, c * &CycloScalar::root(m, e as i64))
    }))
}

/// Trace series with its closed form when one is known.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trace {
    pub series: TruncatedSeries,
    pub closed_form: Option<RationalFunction>,
}

/// Degreewise trace of `g` on `A_0, ..., A_N`, summed from the diagonal entries on monomials.
pub fn trace_series(spec: &AlgebraSpec, g: &Mat2, n: usize) -> TruncatedSeries {
    if g.is_diagonal() {
        let pa = scalar_powers(&g.a, n);
        let pd = scalar_powers(&g.d, n);
        let coeffs = (0..=n)
            .map(|d| (0..=d).fold(CycloScalar::zero(), |acc, i| &acc + &(&pa[i] * &pd[d - i])))
            .collect();
        return TruncatedSeries::new(coeffs);
    }
    let gu = AlgebraElt::from_terms([((1, 0).into(), g.a.clone()), ((0, 1).into(), g.c.clone())]);
    let gv = AlgebraElt::from_terms([((1, 0).into(), g.b.clone()), ((0, 1).into(), g.d.clone())]);
    let pu = powers(spec, &gu, n as u32);
    let pv = powers(spec, &gv, n as u32);
    let coeffs = (0..=n)
        .map(|d| {
            (0..=d).fold(CycloScalar::zero(), |acc, i| {
                let img = mul(spec, &pu[i], &pv[d - i]);
                &acc + &img.coeff(i as u32, (d - i) as u32)
            })
        })
        .collect();
    TruncatedSeries::new(coeffs)
}

fn scalar_powers(x: &CycloScalar, n: usize) -> Vec<CycloScalar> {
    let mut v = vec![CycloScalar::one()];
    for i in 0..n {
        let next = &v[i] * x;
        v.push(next);
    }
    v
}

/// Closed-form trace, when a formula applies.
pub fn trace_closed_form(spec: &AlgebraSpec, g: &Mat2) -> Option<RationalFunction> {
    let one = vec![CycloScalar::one()];
    let den = match Shape::of(g) {
        Shape::Diagonal => RationalFunction::product_of(&[(g.a.clone(), 1), (g.d.clone(), 1)]),
        Shape::Antidiagonal if spec.is_qminus1() => RationalFunction::product_of(&[(-(&g.b * &g.c), 2)]),
        Shape::Antidiagonal if spec.is_commutative() => RationalFunction::product_of(&[(&g.b * &g.c, 2)]),
        Shape::JordanTriangular if spec.is_jordan() => RationalFunction::product_of(&[(g.a.clone(), 1), (g.a.clone(), 1)]),
        _ if spec.is_commutative() => vec![CycloScalar::one(), -(&g.a + &g.d), g.det()],
        _ => return None,
    };
    RationalFunction::new(one, den).ok()
}

/// Trace series through degree `n`, checked against the closed form when there is one.
pub fn trace(spec: &AlgebraSpec, g: &GradedAut, n: usize) -> Result<Trace> {
    validate_aut(spec, &g.matrix)?;
    let series = trace_series(spec, &g.matrix, n);
    let closed_form = trace_closed_form(spec, &g.matrix);
    if let Some(f) = &closed_form {
        if f.expand(n) != series {
            return Err(Error::Inconsistency(format!("closed-form trace of {} disagrees with its series", g.matrix)));
        }
    }
    Ok(Trace { series, closed_form })
}

/// Homological determinant: the scalar by which `g` acts on the defining relation.
pub fn hdet(spec: &AlgebraSpec, g: &GradedAut) -> Result<CycloScalar> {
    validate_aut(spec, &g.matrix)
}

/// Homological determinant of a monomial root matrix as `(order, exponent)`.
pub fn hdet_root(spec: &AlgebraSpec, r: &RootMatrix) -> Result<(u32, u32)> {
    let m = lcm_u32(r.order, 2);
    let x = r.at_order(m);
    let e = match (r.anti, spec.is_jordan()) {
        (false, false) => x.e1 + x.e2,
        (false, true) if x.e1 == x.e2 => 2 * x.e1,
        (true, false) if spec.is_qminus1() => x.e1 + x.e2,
        (true, false) if spec.is_commutative() => x.e1 + x.e2 + m / 2,
        _ => {
            validate_aut(spec, &r.to_mat2())?;
            unreachable!("every valid monomial matrix is covered above")
        }
    };
    Ok((m, e % m))
}

/// Quasi-reflection test by the closed-form rules.
pub fn is_quasi_reflection(spec: &AlgebraSpec, g: &GradedAut) -> Result<bool> {
    validate_aut(spec, &g.matrix)?;
    if let Some(r) = &g.roots {
        return Ok(root_is_quasi_reflection(spec, r));
    }
    let m = &g.matrix;
    let infinite = || Error::InfiniteOrder(format!("{m} does not have finite order"));
    match g.shape {
        Shape::Diagonal => {
            if !m.a.is_root_of_unity() || !m.d.is_root_of_unity() {
                return Err(infinite());
            }
            Ok(m.a.is_one() != m.d.is_one())
        }
        Shape::Antidiagonal => {
            let bc = &m.b * &m.c;
            if !bc.is_root_of_unity() {
                return Err(infinite());
            }
            if spec.is_qminus1() {
                Ok(bc == CycloScalar::from_int(-1))
            } else {
                Ok(bc.is_one())
            }
        }
        Shape::JordanTriangular => Err(infinite()),
        Shape::General => {
            if finite_order(m, 1000).is_none() {
                return Err(infinite());
            }
            let minus = Mat2::new(&m.a - &CycloScalar::one(), m.b.clone(), m.c.clone(), &m.d - &CycloScalar::one());
            Ok(minus.det().is_zero())
        }
    }
}

/// Quasi-reflection test for an element in exponent form.
pub fn root_is_quasi_reflection(spec: &AlgebraSpec, r: &RootMatrix) -> bool {
    if spec.is_jordan() {
        return false;
    }
    if !r.anti {
        return (r.e1 == 0) != (r.e2 == 0);
    }
    let s = (r.e1 + r.e2) % r.order;
    if spec.is_qminus1() {
        r.order % 2 == 0 && s == r.order / 2
    } else {
        s == 0
    }
}

fn finite_order(m: &Mat2, bound: u32) -> Option<u32> {
    let id = Mat2::identity();
    let mut p = m.clone();
    for k in 1..=bound {
        if p == id {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

/// Series oracle: `g` is a quasi-reflection iff `(1 - t) Tr(g)` is geometric with ratio `λ != 1`.
pub fn is_quasi_reflection_series(spec: &AlgebraSpec, g: &GradedAut, n: usize) -> Result<bool> {
    let s = trace(spec, g, n)?.series;
    let p = s.mul_poly(&[CycloScalar::one(), CycloScalar::from_int(-1)]);
    if !p.coeffs[0].is_one() || n == 0 {
        return Ok(false);
    }
    let lambda = p.coeffs[1].clone();
    if lambda.is_one() {
        return Ok(false);
    }
    let mut expect = CycloScalar::one();
    for c in &p.coeffs {
        if *c != expect {
            return Ok(false);
        }
        expect = &expect * &lambda;
    }
    Ok(true)
}

/// Classification summary for a group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupReport {
    pub algebra: String,
    pub group: GroupVariant,
    pub order: usize,
    pub is_small: bool,
    pub hdet_trivial: bool,
    /// Equals `hdet_trivial`; meaningful when the group is small.
    pub gorenstein_flag: bool,
    /// Whether the invariant ring is commutative (`G(n, k)` only).
    pub commutative_invariants_flag: Option<bool>,
    /// `(n/2, k)` when `G(n, k)` coincides with that smaller group.
    pub reduces_to: Option<(u32, u32)>,
}

/// Closed-form smallness predicate.
pub fn closed_form_small(g: &GroupSpec) -> Option<bool> {
    match g.variant {
        GroupVariant::Trivial => Some(true),
        GroupVariant::CyclicDiag { n, a } => Some(g.ambient.is_jordan() || n.gcd(&a) == 1),
        GroupVariant::Gnk { n, k } => Some(k % 4 != 2 && n.gcd(&k) <= 2),
        GroupVariant::Dihedral { .. } => None,
    }
}

pub fn group_report(g: &GroupSpec) -> Result<GroupReport> {
    let elems = g.elements()?;
    let is_small = !elems.iter().any(|r| root_is_quasi_reflection(&g.ambient, r));
    if let Some(cf) = closed_form_small(g) {
        if cf != is_small {
            return Err(Error::Inconsistency(format!(
                "smallness of {} by element scan ({is_small}) disagrees with the closed form ({cf})",
                g.variant
            )));
        }
    }
    let mut hdet_trivial = true;
    for r in &elems {
        if hdet_root(&g.ambient, r)?.1 != 0 {
            hdet_trivial = false;
            break;
        }
    }
    let (commutative_invariants_flag, reduces_to) = match g.variant {
        GroupVariant::Gnk { n, k } => {
            (Some(n % 2 == 0 || k % 2 == 0), (n % 4 == 2 && k % 4 == 0).then_some((n / 2, k)))
        }
        _ => (None, None),
    };
    Ok(GroupReport {
        algebra: g.ambient.label(),
        group: g.variant,
        order: elems.len(),
        is_small,
        hdet_trivial,
        gorenstein_flag: hdet_trivial,
        commutative_invariants_flag,
        reduces_to,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycloScalar {
        CycloScalar::from_int(n)
    }

    #[test]
    fn trace_examples() {
        let id = GradedAut::new(Mat2::identity()).unwrap();
        let t = trace(&AlgebraSpec::jordan(), &id, 5).unwrap();
        assert_eq!(t.series, TruncatedSeries::from_ints(&[1, 2, 3, 4, 5, 6]));
        let h = GradedAut::new(Mat2::antidiag(c(1), c(1))).unwrap();
        let t = trace(&AlgebraSpec::qminus1(), &h, 6).unwrap();
        assert_eq!(t.series, TruncatedSeries::from_ints(&[1, 0, -1, 0, 1, 0, -1]));
        let t = trace(&AlgebraSpec::commutative(), &h, 6).unwrap();
        assert_eq!(t.series, TruncatedSeries::from_ints(&[1, 0, 1, 0, 1, 0, 1]));
        let jt = GradedAut::new(Mat2::new(CycloScalar::root(3, 1), c(2), c(0), CycloScalar::root(3, 1))).unwrap();
        assert!(trace(&AlgebraSpec::jordan(), &jt, 8).unwrap().closed_form.is_some());
    }

    #[test]
    fn quasi_reflection_examples() {
        let q5 = AlgebraSpec::quantum_root(5);
        let g = GradedAut::new(Mat2::diag(c(1), CycloScalar::root(3, 1))).unwrap();
        assert!(is_quasi_reflection(&q5, &g).unwrap());
        assert!(is_quasi_reflection_series(&q5, &g, 12).unwrap());
        let qm = AlgebraSpec::qminus1();
        let g = GradedAut::new(Mat2::diag(CycloScalar::root(3, 1), CycloScalar::root(3, -1))).unwrap();
        assert!(!is_quasi_reflection(&qm, &g).unwrap());
        assert!(!is_quasi_reflection_series(&qm, &g, 12).unwrap());
        let g = GradedAut::new(Mat2::antidiag(CycloScalar::root(4, 1), CycloScalar::root(4, 1))).unwrap();
        assert!(is_quasi_reflection(&qm, &g).unwrap());
        assert!(is_quasi_reflection_series(&qm, &g, 12).unwrap());
        let j = GradedAut::new(Mat2::new(c(1), c(1), c(0), c(1))).unwrap();
        assert!(matches!(is_quasi_reflection(&AlgebraSpec::jordan(), &j), Err(Error::InfiniteOrder(_))));
        let refl = GradedAut::new(Mat2::new(c(0), c(1), c(1), c(0))).unwrap();
        let cm = AlgebraSpec::commutative();
        assert!(is_quasi_reflection(&cm, &refl).unwrap());
        let rot = GradedAut::new(Mat2::new(c(0), c(-1), c(1), c(-1))).unwrap();
        assert!(!is_quasi_reflection(&cm, &rot).unwrap());
        assert!(!is_quasi_reflection_series(&cm, &rot, 12).unwrap());
    }

    #[test]
    fn hdet_examples() {
        let q = AlgebraSpec::quantum_root(7);
        let (a, d) = (CycloScalar::root(5, 2), CycloScalar::root(3, 1));
        let g = GradedAut::new(Mat2::diag(a.clone(), d.clone())).unwrap();
        assert_eq!(hdet(&q, &g).unwrap(), &a * &d);
        let qm = AlgebraSpec::qminus1();
        let (b, cc) = (CycloScalar::root(8, 3), CycloScalar::root(6, 1));
        let h = GradedAut::new(Mat2::antidiag(b.clone(), cc.clone())).unwrap();
        assert_eq!(hdet(&qm, &h).unwrap(), &b * &cc);
    }

    #[test]
    fn enumeration_examples() {
        let q5 = AlgebraSpec::quantum_root(5);
        assert_eq!(GroupSpec::cyclic(q5, 3, 1).unwrap().order().unwrap(), 3);
        assert_eq!(GroupSpec::gnk(3, 1).unwrap().order().unwrap(), 6);
        let big: Vec<Mat2> = enumerate_group(&GroupSpec::gnk(2, 4).unwrap()).unwrap().into_iter().map(|g| g.matrix).collect();
        let small: Vec<Mat2> = enumerate_group(&GroupSpec::gnk(1, 4).unwrap()).unwrap().into_iter().map(|g| g.matrix).collect();
        assert_eq!(big.len(), small.len());
        assert!(big.iter().all(|x| small.contains(x)));
        assert!(GroupSpec::cyclic(AlgebraSpec::jordan(), 3, 2).is_err());
        assert!(GroupSpec::cyclic(AlgebraSpec::qminus1(), 4, 2).is_err());
        assert_eq!(GroupSpec::cyclic_raw(AlgebraSpec::qminus1(), 4, 2).unwrap().order().unwrap(), 4);
    }

    #[test]
    fn report_examples() {
        let r = group_report(&GroupSpec::gnk(3, 2).unwrap()).unwrap();
        assert!(!r.is_small);
        let r = group_report(&GroupSpec::gnk(5, 1).unwrap()).unwrap();
        assert!(r.is_small && r.hdet_trivial);
        let r = group_report(&GroupSpec::cyclic(AlgebraSpec::jordan(), 4, 1).unwrap()).unwrap();
        assert!(r.is_small);
        let r = group_report(&GroupSpec::dihedral(AlgebraSpec::commutative(), 5, 2).unwrap()).unwrap();
        assert_eq!(r.order, 4 * 2 * 3);
    }

    #[test]
    fn root_action_matches_matrix_action() {
        use crate::skew_algebra::apply_aut;
        let qm = AlgebraSpec::qminus1();
        let a = AlgebraElt::from_terms([((3, 2).into(), c(2)), ((1, 1).into(), c(-1)), ((0, 5).into(), c(1))]);
        for r in GroupSpec::gnk(3, 2).unwrap().elements().unwrap() {
            assert_eq!(apply_root(&qm, &r, &a), apply_aut(&qm, &r.to_mat2(), &a).unwrap());
        }
    }
}
