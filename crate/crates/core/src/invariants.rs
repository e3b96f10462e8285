//! Fixed spaces, Molien series, Reynolds operators and generating sets of invariant rings.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_actions::{
    apply_root, enumerate_group, group_report, root_monomial_image, trace, GroupSpec, GroupVariant, RootMatrix,
    TruncatedSeries,
};
use crate::hj_series::{nc_series, type_a_data, type_d_data, Branch};
use crate::linalg::{nullspace, Echelon, SparseVec};
use crate::scalars::{factorial, lcm_u32, CycloScalar, Rational};
use crate::skew_algebra::{apply_unchecked, monomials, mul, pow, AlgebraElt, AlgebraSpec, Mat2, Monomial};

/// Basis of `A^G_d`: one orbit sum per monomial orbit on which the generators act consistently.
pub fn fixed_space(g: &GroupSpec, d: u32) -> Vec<AlgebraElt> {
    let spec = &g.ambient;
    let gens = g.generators();
    let size = d as usize + 1;
    let mut visited = vec![false; size];
    let mut out = Vec::new();
    for base in 0..size {
        if visited[base] {
            continue;
        }
        // exponent of ω_m on each orbit member, relative to the base
        let m = lcm_u32(g.root_order(), 2);
        let mut exps: HashMap<u32, u32> = HashMap::from([(base as u32, 0)]);
        let mut stack = vec![base as u32];
        let mut consistent = true;
        visited[base] = true;
        while let Some(i) = stack.pop() {
            let e = exps[&i];
            for s in &gens {
                let (img, mu, mo) = root_monomial_image(spec, s, i, d - i);
                let mu = mu * (m / mo);
                let target = (e + mu) % m;
                match exps.get(&img.i) {
                    Some(&x) => consistent &= x == target,
                    None => {
                        exps.insert(img.i, target);
                        visited[img.i as usize] = true;
                        stack.push(img.i);
                    }
                }
            }
        }
        if consistent {
            out.push(AlgebraElt::from_terms(
                exps.into_iter().map(|(i, e)| (Monomial::new(i, d - i), CycloScalar::root(m, e as i64))),
            ));
        }
    }
    out
}

/// Fixed space by a dense nullspace of the stacked `s - I` over arbitrary generator matrices.
pub fn fixed_space_dense(spec: &AlgebraSpec, gens: &[Mat2], d: u32) -> Vec<AlgebraElt> {
    let size = d as usize + 1;
    let mut rows = Vec::new();
    for s in gens {
        let images: Vec<AlgebraElt> = monomials(d).map(|mo| apply_unchecked(spec, s, &AlgebraElt::monomial(mo.i, mo.j))).collect();
        for r in 0..size {
            let row: Vec<CycloScalar> = (0..size)
                .map(|c| {
                    let x = images[c].coeff(r as u32, d - r as u32);
                    if r == c {
                        &x - &CycloScalar::one()
                    } else {
                        x
                    }
                })
                .collect();
            rows.push(row);
        }
    }
    nullspace(&rows, size)
        .into_iter()
        .map(|v| AlgebraElt::from_terms(v.into_iter().enumerate().map(|(i, c)| (Monomial::new(i as u32, d - i as u32), c))))
        .collect()
}

/// Per-degree bases of `A^G`, degrees `0..=n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradedBasis {
    pub degrees: Vec<Vec<AlgebraElt>>,
}

pub fn graded_basis(g: &GroupSpec, n: u32) -> GradedBasis {
    GradedBasis { degrees: (0..=n).map(|d| fixed_space(g, d)).collect() }
}

/// Molien series by counting root-of-unity exponents of the degreewise traces.
pub fn molien(g: &GroupSpec, n: usize) -> Result<TruncatedSeries> {
    let spec = &g.ambient;
    let elems = g.elements()?;
    let m = lcm_u32(g.root_order(), 2);
    let mut counts = vec![vec![0u64; m as usize]; n + 1];
    let mm = m as u64;
    for r in &elems {
        let x = r.at_order(m);
        let (e1, e2) = (x.e1 as u64, x.e2 as u64);
        if !x.anti {
            for (d, row) in counts.iter_mut().enumerate() {
                let d = d as u64;
                let mut e = (e2 * d) % mm;
                let step = (e1 + mm - e2) % mm;
                for _ in 0..=d {
                    row[e as usize] += 1;
                    e = (e + step) % mm;
                }
            }
        } else {
            // only u^i v^i contributes, at degree 2i
            for (d, row) in counts.iter_mut().enumerate().step_by(2) {
                let i = (d / 2) as u64;
                let mut e = ((e1 + e2) * i) % mm;
                if spec.is_qminus1() && i % 2 == 1 {
                    e = (e + mm / 2) % mm;
                }
                row[e as usize] += 1;
            }
        }
    }
    let order = BigInt::from(elems.len());
    let mut coeffs = Vec::with_capacity(n + 1);
    for (d, row) in counts.into_iter().enumerate() {
        let big: Vec<BigInt> = row.into_iter().map(BigInt::from).collect();
        let c = CycloScalar::from_cyclic(m, &big, order.clone());
        if !c.is_rational() {
            return Err(Error::Inconsistency(format!("Molien coefficient in degree {d} is not rational: {c}")));
        }
        coeffs.push(c);
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// Molien series as the plain group average of trace series.
pub fn molien_generic(g: &GroupSpec, n: usize) -> Result<TruncatedSeries> {
    let elems = enumerate_group(g)?;
    let mut acc: Option<TruncatedSeries> = None;
    for x in &elems {
        let t = trace(&g.ambient, x, n)?.series;
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    let inv = CycloScalar::from_rational(&Rational::new(BigInt::one(), BigInt::from(elems.len())));
    let out = acc.expect("groups are nonempty").scale(&inv);
    if out.rational_coeffs().is_none() {
        return Err(Error::Inconsistency("Molien series has non-rational coefficients".into()));
    }
    Ok(out)
}

/// Group sum of `a`, divided by `|G|` when `normalized`.
pub fn reynolds(g: &GroupSpec, a: &AlgebraElt, normalized: bool) -> Result<AlgebraElt> {
    let elems = g.elements()?;
    let mut out = AlgebraElt::zero();
    for r in &elems {
        out = out.add(&apply_root(&g.ambient, r, a));
    }
    if normalized {
        out = out.scale_rational(&Rational::new(BigInt::one(), BigInt::from(elems.len())));
    }
    Ok(out)
}

/// Whether `a` is fixed by every generator of `g`.
pub fn is_invariant(g: &GroupSpec, a: &AlgebraElt) -> bool {
    g.generators().iter().all(|s| apply_root(&g.ambient, s, a) == *a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    TypeAFormula,
    TypeDFormula,
    JordanFormula,
    NcFormula,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorSet {
    pub generators: Vec<AlgebraElt>,
    pub degrees: Vec<u32>,
    pub provenance: Provenance,
}

impl GeneratorSet {
    /// Checks invariance of every element before accepting the set.
    pub fn new(g: &GroupSpec, generators: Vec<AlgebraElt>, provenance: Provenance) -> Result<Self> {
        let mut degrees = Vec::with_capacity(generators.len());
        for x in &generators {
            let d = x
                .homogeneous_degree()
                .ok_or_else(|| Error::DegreeMismatch(format!("generator {x} is not homogeneous")))?;
            if !is_invariant(g, x) {
                return Err(Error::Inconsistency(format!("generator {x} is not invariant under {}", g.variant)));
            }
            degrees.push(d);
        }
        Ok(GeneratorSet { generators, degrees, provenance })
    }

    pub fn without(&self, idx: usize) -> GeneratorSet {
        let mut out = self.clone();
        out.generators.remove(idx);
        out.degrees.remove(idx);
        out
    }
}

/// `(u^e + sign v^e) (uv)^r` computed in the ambient algebra.
pub fn binomial_times_uv(spec: &AlgebraSpec, e: u32, sign: i64, r: u32) -> AlgebraElt {
    let head = AlgebraElt::from_terms([(Monomial::new(e, 0), CycloScalar::one()), (Monomial::new(0, e), CycloScalar::from_int(sign))]);
    mul(spec, &head, &pow(spec, &AlgebraElt::monomial(1, 1), r))
}

fn parity_sign(x: i64) -> i64 {
    if x.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Explicit generators of `A^G` for a small group, by case.
pub fn generator_set(g: &GroupSpec) -> Result<GeneratorSet> {
    let spec = &g.ambient;
    let report = group_report(g)?;
    if !report.is_small {
        return Err(Error::NotSmall(format!("{} contains a quasi-reflection", g.variant)));
    }
    match g.variant {
        GroupVariant::CyclicDiag { n, .. } if spec.is_jordan() => {
            let gens = (0..=n)
                .map(|i| {
                    let c = Rational::new(BigInt::from(parity_sign(i as i64)), factorial(i));
                    AlgebraElt::term(CycloScalar::from_rational(&c), n - i, i)
                })
                .collect();
            GeneratorSet::new(g, gens, Provenance::JordanFormula)
        }
        GroupVariant::CyclicDiag { n, a } => {
            let data = type_a_data(n as i64, a as i64)?;
            let gens = data.i.iter().zip(&data.j).map(|(&i, &j)| AlgebraElt::monomial(i as u32, j as u32)).collect();
            GeneratorSet::new(g, gens, Provenance::TypeAFormula)
        }
        GroupVariant::Dihedral { m, q } => {
            let data = type_d_data(m as i64, q as i64)?;
            let mut gens: Vec<AlgebraElt> = (0..data.s.len())
                .map(|k| binomial_times_uv(spec, (2 * data.q * data.s[k]) as u32, parity_sign(data.t[k]), data.r[k] as u32))
                .collect();
            gens.push(pow(spec, &AlgebraElt::monomial(1, 1), 2 * (m - q)));
            GeneratorSet::new(g, gens, Provenance::TypeDFormula)
        }
        GroupVariant::Gnk { n, k } if n % 2 == 1 && k % 2 == 1 && n != k => {
            let series = nc_series(n as i64, k as i64)?;
            let nn = n as i64;
            let mut gens: Vec<AlgebraElt> = series
                .generator_exponents()
                .into_iter()
                .map(|(r, s)| binomial_times_uv(spec, (nn * s) as u32, parity_sign(r + nn * s), r as u32))
                .collect();
            if series.branch == Branch::NGtK {
                gens.push(pow(spec, &AlgebraElt::monomial(1, 1), 2 * k));
            }
            GeneratorSet::new(g, gens, Provenance::NcFormula)
        }
        _ => brute_force_generators(g),
    }
}

/// Degreewise spans of the subalgebra generated by a set of homogeneous elements.
struct SubalgebraSpan {
    basis: Vec<Vec<AlgebraElt>>,
    echelons: Vec<Echelon>,
}

fn coords(a: &AlgebraElt, d: u32) -> SparseVec {
    a.degree_part(d)
}

impl SubalgebraSpan {
    fn new() -> Self {
        let mut e = Echelon::new();
        e.insert(&coords(&AlgebraElt::one(), 0));
        SubalgebraSpan { basis: vec![vec![AlgebraElt::one()]], echelons: vec![e] }
    }

    /// Computes degree `d = basis.len()` from lower degrees; stops early once `cap` is reached.
    fn push_degree(&mut self, spec: &AlgebraSpec, gens: &[(AlgebraElt, u32)], cap: Option<usize>) {
        let d = self.basis.len() as u32;
        let mut ech = Echelon::new();
        let mut basis = Vec::new();
        'outer: for (x, e) in gens {
            if *e > d || *e == 0 {
                continue;
            }
            for b in &self.basis[(d - e) as usize] {
                if cap.is_some_and(|c| ech.rank() >= c) {
                    break 'outer;
                }
                let p = mul(spec, b, x);
                if ech.insert(&coords(&p, d)) {
                    basis.push(p);
                }
            }
        }
        self.basis.push(basis);
        self.echelons.push(ech);
    }

    fn add(&mut self, x: AlgebraElt, d: u32) -> bool {
        let ok = self.echelons[d as usize].insert(&coords(&x, d));
        if ok {
            self.basis[d as usize].push(x);
        }
        ok
    }

    fn dim(&self, d: u32) -> usize {
        self.basis[d as usize].len()
    }
}

fn brute_force_generators(g: &GroupSpec) -> Result<GeneratorSet> {
    let spec = &g.ambient;
    let order = g.order()? as u32;
    let limit0 = order + 2;
    let molien_dims = molien(g, (2 * limit0) as usize)?.integer_coeffs()?;
    let mut span = SubalgebraSpan::new();
    let mut gens: Vec<(AlgebraElt, u32)> = Vec::new();
    let mut d = 1u32;
    loop {
        let max_deg = gens.iter().map(|x| x.1).max().unwrap_or(0);
        let limit = limit0.max(2 * max_deg);
        if d > limit {
            break;
        }
        if d as usize >= molien_dims.len() {
            return Err(Error::Inconsistency("generator search outran its Molien window".into()));
        }
        let target = molien_dims[d as usize] as usize;
        span.push_degree(spec, &gens, Some(target));
        if span.dim(d) < target {
            let mut cands = fixed_space(g, d);
            cands.sort_by_key(|x| x.leading_monomial());
            for f in cands {
                if span.dim(d) == target {
                    break;
                }
                if span.add(f.clone(), d) {
                    gens.push((f, d));
                }
            }
        }
        if span.dim(d) != target {
            return Err(Error::Inconsistency(format!("degree {d}: spanned {} of {target} invariants", span.dim(d))));
        }
        d += 1;
    }
    GeneratorSet::new(g, gens.into_iter().map(|x| x.0).collect(), Provenance::BruteForce)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationReport {
    pub n: u32,
    pub span_dims: Vec<usize>,
    pub molien_dims: Vec<i64>,
    pub first_failure: Option<u32>,
    pub success: bool,
}

/// Compares the generated subalgebra with the Molien series degree by degree through `n`.
pub fn verify_generation(g: &GroupSpec, gens: &GeneratorSet, n: u32) -> Result<GenerationReport> {
    let molien_dims = molien(g, n as usize)?.integer_coeffs()?;
    let pairs: Vec<(AlgebraElt, u32)> = gens.generators.iter().cloned().zip(gens.degrees.iter().copied()).collect();
    let mut span = SubalgebraSpan::new();
    let mut first_failure = None;
    for d in 1..=n {
        span.push_degree(&g.ambient, &pairs, Some(molien_dims[d as usize] as usize));
        if span.dim(d) as i64 != molien_dims[d as usize] && first_failure.is_none() {
            first_failure = Some(d);
        }
    }
    let span_dims = (0..=n).map(|d| span.dim(d)).collect();
    Ok(GenerationReport { n, span_dims, molien_dims, first_failure, success: first_failure.is_none() })
}

/// Basis of `A^G_d` for `G(n, k)` with `n, k` odd and coprime, from the `(r, s, t)` parametrisation.
pub fn gnk_basis(n: u32, k: u32, d: u32) -> Result<Vec<AlgebraElt>> {
    if n % 2 == 0 || k % 2 == 0 || n.gcd(&k) != 1 {
        return Err(Error::InvalidParameters(format!("basis formula needs n, k odd and coprime, got ({n}, {k})")));
    }
    let spec = AlgebraSpec::qminus1();
    let mut out = Vec::new();
    if d % (4 * k) == 0 {
        out.push(pow(&spec, &AlgebraElt::monomial(1, 1), d / 2));
    }
    if d % k == 0 {
        let kt = d as i64;
        let nn = n as i64;
        for s in 1..=kt / nn {
            if (kt - nn * s) % 2 != 0 {
                continue;
            }
            let r = (kt - nn * s) / 2;
            out.push(binomial_times_uv(&spec, (nn * s) as u32, parity_sign(r + nn * s), r as u32));
        }
    }
    Ok(out)
}

/// Image group of the commutative correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Target {
    Cyclic { order: u32, weight: u32 },
    Dihedral { m: u32, q: u32 },
}

/// `(n, k) -> (m, q)` for `n >= 3`, `gcd(n, k) = 1`, `n - k` odd, `k != 2 mod 4`.
pub fn theta(n: u32, k: u32) -> Result<(u32, u32)> {
    if n < 3 || n.gcd(&k) != 1 || (n + k) % 2 == 0 || k % 4 == 2 {
        return Err(Error::InvalidParameters(format!("({n}, {k}) is outside the domain of theta")));
    }
    Ok(if n % 2 == 1 { (n + k / 2, n) } else { (n / 2 + k, n / 2) })
}

/// Inverse of [`theta`], defined for `1 < q < m`, `gcd(m, q) = 1`.
pub fn eta(m: u32, q: u32) -> Result<(u32, u32)> {
    if q <= 1 || q >= m || m.gcd(&q) != 1 {
        return Err(Error::InvalidParameters(format!("({m}, {q}) is outside the domain of eta")));
    }
    Ok(if (m - q) % 2 == 0 { (q, 2 * (m - q)) } else { (2 * q, m - q) })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThetaEvidence {
    pub n: u32,
    pub invariant_series: Vec<i64>,
    pub target_series: Vec<i64>,
    pub series_equal: bool,
    pub invariant_degrees: Vec<u32>,
    pub target_degrees: Vec<u32>,
    pub degrees_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThetaReport {
    pub target: Target,
    pub evidence: ThetaEvidence,
}

impl Target {
    pub fn group(&self) -> Result<GroupSpec> {
        let c = AlgebraSpec::commutative();
        match *self {
            Target::Cyclic { order, weight } => GroupSpec::cyclic(c, order, weight),
            Target::Dihedral { m, q } => GroupSpec::dihedral(c, m, q),
        }
    }

    /// Generator degrees from the closed-form generating sets.
    pub fn generator_degrees(&self) -> Result<Vec<u32>> {
        Ok(match *self {
            Target::Cyclic { order, weight } => {
                let a = type_a_data(order as i64, weight as i64)?;
                a.i.iter().zip(&a.j).map(|(i, j)| (i + j) as u32).collect()
            }
            Target::Dihedral { m, q } => {
                let data = type_d_data(m as i64, q as i64)?;
                let mut v: Vec<u32> = data.s.iter().zip(&data.r).map(|(s, r)| (2 * data.q * s + 2 * r) as u32).collect();
                v.push(4 * (m - q));
                v
            }
        })
    }
}

/// Commutative invariant rings of `G(n, k)` matched with a classical quotient, to depth `depth`.
pub fn theta_correspondence(n: u32, k: u32, depth: u32) -> Result<ThetaReport> {
    if n % 2 == 1 && k % 2 == 1 {
        return Err(Error::InvalidParameters(format!("invariants of G({n}, {k}) are not commutative")));
    }
    let target = match n {
        1 => Target::Cyclic { order: 2 * k, weight: k + 1 },
        2 => Target::Cyclic { order: 4 * k, weight: 2 * k + 1 },
        _ => {
            let (m, q) = theta(n, k)?;
            Target::Dihedral { m, q }
        }
    };
    let g = GroupSpec::gnk(n, k)?;
    let h = target.group()?;
    let invariant_series = molien(&g, depth as usize)?.integer_coeffs()?;
    let target_series = molien(&h, depth as usize)?.integer_coeffs()?;
    let mut invariant_degrees = generator_set(&g)?.degrees;
    let mut target_degrees = target.generator_degrees()?;
    invariant_degrees.sort_unstable();
    target_degrees.sort_unstable();
    let evidence = ThetaEvidence {
        n: depth,
        series_equal: invariant_series == target_series,
        degrees_equal: invariant_degrees == target_degrees,
        invariant_series,
        target_series,
        invariant_degrees,
        target_degrees,
    };
    Ok(ThetaReport { target, evidence })
}

/// Two invariants that do not commute, for `n, k` odd: `u^i v^j - u^j v^i` and its cube-exponent analogue.
pub fn noncommuting_pair(n: u32, k: u32) -> Result<(AlgebraElt, AlgebraElt)> {
    if n % 2 == 0 || k % 2 == 0 {
        return Err(Error::InvalidParameters(format!("need n, k odd, got ({n}, {k})")));
    }
    let m = (1..).step_by(2).find(|m| m * k > n).expect("unbounded search");
    let (i, j) = ((m * k + n) / 2, (m * k - n) / 2);
    let one = CycloScalar::one();
    let minus = CycloScalar::from_int(-1);
    let a = AlgebraElt::from_terms([(Monomial::new(i, j), one.clone()), (Monomial::new(j, i), minus.clone())]);
    let b = AlgebraElt::from_terms([(Monomial::new(3 * i, 3 * j), one), (Monomial::new(3 * j, 3 * i), minus)]);
    Ok((a, b))
}

/// Checks monomial group elements produce the same fixed space as the dense computation.
pub fn fixed_space_cross_check(g: &GroupSpec, d: u32) -> bool {
    let mats: Vec<Mat2> = g.generators().iter().map(RootMatrix::to_mat2).collect();
    let fast = fixed_space(g, d);
    let dense = fixed_space_dense(&g.ambient, &mats, d);
    if fast.len() != dense.len() {
        return false;
    }
    let mut e = Echelon::new();
    for x in &dense {
        e.insert(&coords(x, d));
    }
    fast.iter().all(|x| e.contains(&coords(x, d)))
}
