//! Presentations of invariant rings by generators and relations, relation evaluation,
//! and degreewise dimensions of truncated free-algebra quotients.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group_actions::GroupSpec;
use crate::hj_series::type_a_data;
use crate::invariants::molien;
use crate::linalg::{nullspace, sparse_from_pairs, Echelon, SparseVec};
use crate::scalars::{binomial_i64, parse_rational, CycloScalar, Rational};
use crate::skew_algebra::{mul, AlgebraElt, AlgebraSpec};

/// Word in the free algebra, as a sequence of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord(pub Vec<usize>);

impl FreeWord {
    pub fn new(letters: Vec<usize>) -> Self {
        FreeWord(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        FreeWord(v)
    }

    pub fn degree(&self, degrees: &[u32]) -> u32 {
        self.0.iter().map(|&g| degrees[g]).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: CycloScalar,
    pub word: FreeWord,
}

/// Formal linear combination of words. Terms keep their first-appearance order.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Relation {
    pub terms: Vec<Term>,
}

impl Relation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (CycloScalar, Vec<usize>)>>(it: I) -> Self {
        let mut r = Relation::new();
        for (c, w) in it {
            r.add(c, FreeWord(w));
        }
        r
    }

    /// Adds `c * w`, merging with an existing term for `w`.
    pub fn add(&mut self, c: CycloScalar, w: FreeWord) {
        if let Some(t) = self.terms.iter_mut().find(|t| t.word == w) {
            t.coeff += &c;
        } else {
            self.terms.push(Term { coeff: c, word: w });
        }
        self.terms.retain(|t| !t.coeff.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self, degrees: &[u32]) -> Option<u32> {
        let d = self.terms.first()?.word.degree(degrees);
        self.terms.iter().all(|t| t.word.degree(degrees) == d).then_some(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

/// `a, b, c, ...` for up to 26 generators, otherwise `x0, x1, ...`.
pub fn default_names(count: usize) -> Vec<String> {
    if count <= 26 {
        (0..count).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..count).map(|i| format!("x{i}")).collect()
    }
}

impl Presentation {
    /// Builds a presentation and checks every relation is homogeneous.
    pub fn new(degrees: Vec<u32>, relations: Vec<Relation>) -> Result<Self> {
        let names = default_names(degrees.len());
        Self::with_names(names, degrees, relations)
    }

    pub fn with_names(names: Vec<String>, degrees: Vec<u32>, relations: Vec<Relation>) -> Result<Self> {
        if names.len() != degrees.len() {
            return Err(Error::InvalidParameters("name and degree lists differ in length".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidParameters("generator degrees must be positive".into()));
        }
        let generators = names.into_iter().zip(degrees).map(|(name, degree)| Generator { name, degree }).collect();
        let p = Presentation { generators, relations };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let degs = self.degrees();
        for r in &self.relations {
            if let Some(t) = r.terms.iter().find(|t| t.word.0.iter().any(|&g| g >= degs.len())) {
                return Err(Error::InvalidParameters(format!("word {:?} uses an unknown generator", t.word.0)));
            }
            if !r.is_zero() && r.degree(&degs).is_none() {
                return Err(Error::DegreeMismatch(format!("relation {} is not homogeneous", self.format_relation(r))));
            }
        }
        Ok(())
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    fn format_word(&self, w: &FreeWord) -> String {
        let mut out = String::new();
        let mut k = 0;
        while k < w.0.len() {
            let g = w.0[k];
            let run = w.0[k..].iter().take_while(|&&x| x == g).count();
            out.push_str(&self.generators[g].name);
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            k += run;
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    /// Pretty form such as `ba + 2a^2 - ab`.
    pub fn format_relation(&self, r: &Relation) -> String {
        if r.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, t) in r.terms.iter().enumerate() {
            let w = self.format_word(&t.word);
            let (neg, body) = match t.coeff.to_rational() {
                Some(q) => {
                    let a = q.abs();
                    let body = if a.is_one() { w } else { format!("{}{w}", crate::scalars::format_rational(&a)) };
                    (q.is_negative(), body)
                }
                None => (false, format!("{}*{w}", t.coeff)),
            };
            match (idx, neg) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }

    /// Parses a relation written with this presentation's generator names, e.g. `ca + ac - 2b^4 - 4d^3`.
    pub fn parse_relation(&self, s: &str) -> Result<Relation> {
        parse_relation(&self.names(), s)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| format!("{} (deg {})", g.name, g.degree)).collect();
        writeln!(f, "generators: {}", gens.join(", "))?;
        for r in &self.relations {
            writeln!(f, "  {}", self.format_relation(r))?;
        }
        Ok(())
    }
}

/// Parses `term (+|- term)*` where a term is an optional rational coefficient followed by
/// generator names with optional `^e` exponents. Names are matched longest first.
pub fn parse_relation(names: &[String], s: &str) -> Result<Relation> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(names[i].len()));
    let mut pos = 0;
    let mut rel = Relation::new();
    let err = |msg: &str, pos: usize| Error::Parse(format!("{msg} at position {pos} in {s:?}"));
    if chars.is_empty() {
        return Err(err("empty relation", 0));
    }
    while pos < chars.len() {
        let mut sign = 1i64;
        while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        }
        let start = pos;
        while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
            pos += 1;
        }
        let coeff = if pos > start {
            let txt: String = chars[start..pos].iter().collect();
            parse_rational(&txt)?
        } else {
            Rational::one()
        };
        if pos < chars.len() && chars[pos] == '*' {
            pos += 1;
        }
        let mut word = Vec::new();
        while pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
            if chars[pos] == '*' {
                pos += 1;
                continue;
            }
            let rest: String = chars[pos..].iter().collect();
            let g = order
                .iter()
                .copied()
                .find(|&i| rest.starts_with(names[i].as_str()))
                .ok_or_else(|| err("unknown generator", pos))?;
            pos += names[g].chars().count();
            let mut e = 1usize;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let st = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if st == pos {
                    return Err(err("missing exponent", pos));
                }
                let txt: String = chars[st..pos].iter().collect();
                e = txt.parse().map_err(|_| err("bad exponent", st))?;
            }
            word.extend(std::iter::repeat(g).take(e));
        }
        if word.is_empty() && pos == start {
            return Err(err("empty term", pos));
        }
        let c = CycloScalar::from_rational(&(coeff * Rational::from_integer(BigInt::from(sign))));
        rel.add(c, FreeWord(word));
    }
    Ok(rel)
}

fn int(n: BigInt) -> CycloScalar {
    CycloScalar::from_rational(&Rational::from_integer(n))
}

/// Relations among `X_0, ..., X_n` (all of degree `n`) for the Jordan plane invariants under `diag(ω_n, ω_n)`.
pub fn jordan_presentation(n: u32) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("Jordan presentation needs n >= 2, got {n}")));
    }
    let n = n as i64;
    let mut rels = Vec::new();
    for j in 0..=n {
        for i in 0..j {
            let mut r = Relation::new();
            for k in 0..=j {
                r.add(int(binomial_i64(n - i, k)), FreeWord(vec![(j - k) as usize, i as usize]));
            }
            for l in 0..=i {
                r.add(-int(binomial_i64(n - j, l)), FreeWord(vec![(i - l) as usize, j as usize]));
            }
            rels.push(r);
        }
    }
    for i in 1..n {
        for j in i..n {
            let mut r = Relation::new();
            r.add(CycloScalar::from_int(i), FreeWord(vec![i as usize, j as usize]));
            r.add(CycloScalar::from_int(-(j + 1)), FreeWord(vec![(i - 1) as usize, (j + 1) as usize]));
            r.add(CycloScalar::from_int(n - 1 - (j - i)), FreeWord(vec![(i - 1) as usize, j as usize]));
            rels.push(r);
        }
    }
    Presentation::new(vec![n as u32; (n + 1) as usize], rels)
}

/// Relations among the monomial generators `x_k = u^{i_k} v^{j_k}` of the quantum plane invariants
/// under `diag(ω_n, ω_n^a)`. Indices are 1-based in the formulas below.
pub fn quantum_presentation(n: u32, a: u32, q: &CycloScalar) -> Result<Presentation> {
    if q.is_zero() {
        return Err(Error::InvalidParameters("q must be nonzero".into()));
    }
    let data = type_a_data(n as i64, a as i64)?;
    let d = data.d;
    let i = |k: usize| data.i[k - 1];
    let j = |k: usize| data.j[k - 1];
    let beta = |k: usize| data.beta[k - 1];
    let qp = |e: i64| q.pow(e);
    let w = |ks: &[usize]| FreeWord(ks.iter().map(|k| k - 1).collect());
    let mut rels = Vec::new();
    for k in 1..=d {
        for l in k + 1..=d {
            let mut r = Relation::new();
            r.add(CycloScalar::one(), w(&[l, k]));
            r.add(-qp(i(k) * j(l) - i(l) * j(k))?, w(&[k, l]));
            rels.push(r);
        }
    }
    for k in 2..d {
        let b = beta(k - 1);
        let e = i(k) * j(k) * b * (b - 1) / 2 - i(k + 1) * j(k - 1);
        let mut r = Relation::new();
        r.add(CycloScalar::one(), FreeWord(vec![k - 1; b as usize]));
        r.add(-qp(e)?, w(&[k - 1, k + 1]));
        rels.push(r);
    }
    for k in 1..=d {
        for l in k + 3..=d {
            let gamma = |m: usize| beta(m - 1) - 2 + (m == k + 1) as i64 + (m == l - 1) as i64;
            let mut a_sum = 0;
            let mut b_sum = 0;
            for m in k + 1..l {
                let g = gamma(m);
                a_sum += i(m) * j(m) * g * (g - 1) / 2;
                if m >= k + 2 {
                    for r in k + 1..m {
                        b_sum += i(m) * j(r) * g * gamma(r);
                    }
                }
            }
            let mut word = Vec::new();
            for m in k + 1..l {
                word.extend(std::iter::repeat(m - 1).take(gamma(m) as usize));
            }
            let mut r = Relation::new();
            r.add(qp(a_sum + b_sum - i(l) * j(k))?, w(&[k, l]));
            r.add(-CycloScalar::one(), FreeWord(word));
            rels.push(r);
        }
    }
    let degrees = (1..=d).map(|k| (i(k) + j(k)) as u32).collect();
    Presentation::new(degrees, rels)
}

/// Four generators `a, b, c, d` of degrees 15, 9, 21, 12 and nine relations for the
/// `k_{-1}[u,v]` invariants of `G_{7,3}`.
pub fn gnk73_presentation() -> Presentation {
    let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let texts = [
        "ba + ab + 4d^2",
        "ca + ac - 2b^4 - 4d^3",
        "cb + bc - 2b^2d",
        "da - ad",
        "db - bd",
        "dc - cd",
        "a^2 + b^2d",
        "ab^2 + cd + bd^2",
        "ac + abd - b^4",
    ];
    let rels = texts.iter().map(|t| parse_relation(&names, t).expect("fixture parses")).collect();
    Presentation::with_names(names, vec![15, 9, 21, 12], rels).expect("fixture is homogeneous")
}

/// Value of a word under an assignment of generators.
pub fn eval_word(spec: &AlgebraSpec, assignment: &[AlgebraElt], w: &FreeWord) -> AlgebraElt {
    w.0.iter().fold(AlgebraElt::one(), |acc, &g| mul(spec, &acc, &assignment[g]))
}

pub fn eval_relation(spec: &AlgebraSpec, assignment: &[AlgebraElt], r: &Relation) -> AlgebraElt {
    r.terms.iter().fold(AlgebraElt::zero(), |acc, t| acc.add(&eval_word(spec, assignment, &t.word).scale(&t.coeff)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    pub residuals: Vec<AlgebraElt>,
    pub vanishing: Vec<bool>,
    pub all_vanish: bool,
}

fn check_assignment(assignment: &[AlgebraElt], pres: &Presentation) -> Result<()> {
    if assignment.len() != pres.num_generators() {
        return Err(Error::InvalidParameters(format!(
            "assignment has {} elements, presentation has {} generators",
            assignment.len(),
            pres.num_generators()
        )));
    }
    for (x, g) in assignment.iter().zip(&pres.generators) {
        if x.homogeneous_degree() != Some(g.degree) {
            return Err(Error::DegreeMismatch(format!("{} has degree {} but is assigned {x}", g.name, g.degree)));
        }
    }
    Ok(())
}

/// Substitutes the assignment into every relation and reduces in the ambient algebra.
pub fn eval_relations(spec: &AlgebraSpec, assignment: &[AlgebraElt], pres: &Presentation) -> Result<EvalReport> {
    check_assignment(assignment, pres)?;
    let residuals: Vec<AlgebraElt> = pres.relations.iter().map(|r| eval_relation(spec, assignment, r)).collect();
    let vanishing: Vec<bool> = residuals.iter().map(|r| r.is_zero()).collect();
    let all_vanish = vanishing.iter().all(|&b| b);
    Ok(EvalReport { residuals, vanishing, all_vanish })
}

/// One degree `e` of the quotient `Q = F / I`.
///
/// `Q_e` is computed as `(⊕_g X_g ⊗ Q_{e - deg g}) / span{ρ w'}` with `w'` running over
/// representative words of `Q_{e - deg ρ}`, which is the same as `F_e / I_e`.
struct Level {
    offsets: Vec<Option<usize>>,
    ncols: usize,
    ech: Echelon,
    /// Column of `V_e` to index in the basis of `Q_e`, for non-pivot columns.
    index: HashMap<usize, usize>,
    reps: Vec<FreeWord>,
    memo: HashMap<FreeWord, SparseVec>,
}

/// Incremental degreewise computation of `F/I` for a homogeneous presentation.
pub struct QuotientBuilder {
    degrees: Vec<u32>,
    relations: Vec<(u32, Relation)>,
    levels: Vec<Level>,
}

impl QuotientBuilder {
    pub fn new(pres: &Presentation) -> Result<Self> {
        pres.validate()?;
        let degrees = pres.degrees();
        let mut b = QuotientBuilder { degrees: degrees.clone(), relations: Vec::new(), levels: Vec::new() };
        for r in &pres.relations {
            b.add_relation(r.clone())?;
        }
        Ok(b)
    }

    pub fn add_relation(&mut self, r: Relation) -> Result<()> {
        if r.is_zero() {
            return Ok(());
        }
        let d = r.degree(&self.degrees).ok_or_else(|| Error::DegreeMismatch("relation is not homogeneous".into()))?;
        self.relations.push((d, r));
        Ok(())
    }

    /// Number of degrees computed so far.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn dim(&self, e: usize) -> usize {
        self.levels[e].reps.len()
    }

    pub fn reps(&self, e: usize) -> &[FreeWord] {
        &self.levels[e].reps
    }

    /// Coordinates of `w` in `V_e` before reduction modulo `K_e`.
    fn lift(&mut self, w: &FreeWord, e: usize) -> SparseVec {
        let g = w.0[0];
        let rest = FreeWord(w.0[1..].to_vec());
        let lower = e - self.degrees[g] as usize;
        let off = self.levels[e].offsets[g].expect("word degree matches");
        self.normal_form(&rest, lower).into_iter().map(|(c, x)| (off + c, x)).collect()
    }

    /// Coordinates of `w` (of degree `e`) in the representative basis of `Q_e`.
    pub fn normal_form(&mut self, w: &FreeWord, e: usize) -> SparseVec {
        if w.is_empty() {
            return vec![(0, CycloScalar::one())];
        }
        if let Some(v) = self.levels[e].memo.get(w) {
            return v.clone();
        }
        let lifted = self.lift(w, e);
        let level = &self.levels[e];
        let out: SparseVec = level.ech.reduce_full(&lifted).into_iter().map(|(c, x)| (level.index[&c], x)).collect();
        self.levels[e].memo.insert(w.clone(), out.clone());
        out
    }

    /// Computes the next degree from the current relation list.
    pub fn push_level(&mut self) {
        let e = self.levels.len();
        if e == 0 {
            self.levels.push(Level {
                offsets: vec![None; self.degrees.len()],
                ncols: 1,
                ech: Echelon::new(),
                index: HashMap::from([(0, 0)]),
                reps: vec![FreeWord::default()],
                memo: HashMap::new(),
            });
            return;
        }
        let mut offsets = Vec::with_capacity(self.degrees.len());
        let mut ncols = 0;
        for &dg in &self.degrees {
            if dg as usize <= e {
                offsets.push(Some(ncols));
                ncols += self.levels[e - dg as usize].reps.len();
            } else {
                offsets.push(None);
            }
        }
        self.levels.push(Level { offsets, ncols, ech: Echelon::new(), index: HashMap::new(), reps: Vec::new(), memo: HashMap::new() });
        let rels: Vec<Relation> = self.relations.iter().filter(|(d, _)| *d as usize <= e).map(|(_, r)| r.clone()).collect();
        let deg_of = |r: &Relation, degs: &[u32]| r.degree(degs).unwrap_or(0) as usize;
        'outer: for r in &rels {
            let below = e - deg_of(r, &self.degrees);
            let tails = self.levels[below].reps.clone();
            for tail in &tails {
                let mut pairs = Vec::new();
                for t in &r.terms {
                    let w = t.word.concat(tail);
                    for (c, x) in self.lift(&w, e) {
                        pairs.push((c, &t.coeff * &x));
                    }
                }
                let v = sparse_from_pairs(pairs);
                let lvl = &mut self.levels[e];
                lvl.ech.insert(&v);
                if lvl.ech.rank() == lvl.ncols {
                    break 'outer;
                }
            }
        }
        let mut index = HashMap::new();
        let mut reps = Vec::new();
        for c in 0..ncols {
            if self.levels[e].ech.is_pivot(c) {
                continue;
            }
            let (g, off) = self.levels[e]
                .offsets
                .iter()
                .enumerate()
                .filter_map(|(g, o)| o.map(|o| (g, o)))
                .filter(|&(_, o)| o <= c)
                .max_by_key(|&(_, o)| o)
                .expect("column belongs to a generator block");
            let lower = e - self.degrees[g] as usize;
            let mut word = vec![g];
            word.extend_from_slice(&self.levels[lower].reps[c - off].0);
            index.insert(c, reps.len());
            reps.push(FreeWord(word));
        }
        let lvl = &mut self.levels[e];
        lvl.index = index;
        lvl.reps = reps;
    }

    /// Discards the most recent degree so it can be recomputed with new relations.
    pub fn pop_level(&mut self) {
        self.levels.pop();
    }
}

/// Dimensions of `k<X>/I` in degrees `0..=n`.
pub fn truncated_quotient_dims(pres: &Presentation, n: u32) -> Result<Vec<u64>> {
    let mut b = QuotientBuilder::new(pres)?;
    for _ in 0..=n {
        b.push_level();
    }
    Ok((0..=n as usize).map(|e| b.dim(e) as u64).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PresentationReport {
    pub n: u32,
    pub quotient_dims: Vec<u64>,
    pub molien_dims: Vec<i64>,
    pub first_mismatch: Option<u32>,
    pub relations_vanish: bool,
    pub failing_relations: Vec<usize>,
    pub success: bool,
}

/// Relations vanish under the assignment and the quotient has the Molien dimensions through degree `n`.
pub fn verify_presentation(g: &GroupSpec, pres: &Presentation, assignment: &[AlgebraElt], n: u32) -> Result<PresentationReport> {
    let eval = eval_relations(&g.ambient, assignment, pres)?;
    let quotient_dims = truncated_quotient_dims(pres, n)?;
    let molien_dims = molien(g, n as usize + 1)?.integer_coeffs()?;
    let first_mismatch = (0..=n).find(|&d| quotient_dims[d as usize] as i64 != molien_dims[d as usize]);
    let failing_relations = eval.vanishing.iter().enumerate().filter(|(_, &ok)| !ok).map(|(i, _)| i).collect();
    Ok(PresentationReport {
        n,
        quotient_dims,
        molien_dims,
        first_mismatch,
        relations_vanish: eval.all_vanish,
        failing_relations,
        success: eval.all_vanish && first_mismatch.is_none(),
    })
}

/// Searches for relations among `assignment` degree by degree up to `max_degree`.
///
/// At each degree the representative words of the current quotient are evaluated, and
/// the nullspace of that evaluation is added as new relations. The result is a presentation
/// whose relations are minimal through `max_degree`; nothing is claimed beyond that degree.
pub fn discover_relations(spec: &AlgebraSpec, assignment: &[AlgebraElt], max_degree: u32) -> Result<Presentation> {
    let degrees = assignment
        .iter()
        .map(|x| x.homogeneous_degree().filter(|&d| d > 0).ok_or_else(|| Error::DegreeMismatch(format!("{x} is not homogeneous of positive degree"))))
        .collect::<Result<Vec<u32>>>()?;
    let base = Presentation::new(degrees.clone(), Vec::new())?;
    let mut b = QuotientBuilder::new(&base)?;
    let mut found = Vec::new();
    for e in 0..=max_degree as usize {
        b.push_level();
        let reps = b.reps(e).to_vec();
        if reps.is_empty() || e == 0 {
            continue;
        }
        let values: Vec<AlgebraElt> = reps.iter().map(|w| eval_word(spec, assignment, w)).collect();
        let rows: Vec<Vec<CycloScalar>> = (0..=e)
            .map(|i| values.iter().map(|x| x.coeff(i as u32, (e - i) as u32)).collect())
            .collect();
        let kernel = nullspace(&rows, reps.len());
        if kernel.is_empty() {
            continue;
        }
        for v in kernel {
            let r = Relation::from_terms(v.into_iter().zip(&reps).filter(|(c, _)| !c.is_zero()).map(|(c, w)| (c, w.0.clone())));
            b.add_relation(r.clone())?;
            found.push(r);
        }
        b.pop_level();
        b.push_level();
    }
    Presentation::new(degrees, found)
}
