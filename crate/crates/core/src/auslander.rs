//! Smash products `A # G`, the ideal generated by `ḡ = Σ g`, and degree-window checks that
//! the quotient `(A # G)/⟨ḡ⟩` vanishes in high degree.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_actions::{apply_root, GroupSpec, GroupVariant, RootMatrix};
use crate::linalg::{sparse_from_pairs, Echelon, SparseVec};
use crate::scalars::CycloScalar;
use crate::skew_algebra::{monomials, mul, pow, AlgebraElt, AlgebraSpec};

/// `Σ a_g g` with `g` given by its index in the attached group's element list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmashElt {
    terms: BTreeMap<usize, AlgebraElt>,
}

impl SmashElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(g: usize, a: AlgebraElt) -> Self {
        let mut s = Self::zero();
        s.add_part(g, &a);
        s
    }

    pub fn add_part(&mut self, g: usize, a: &AlgebraElt) {
        let slot = self.terms.entry(g).or_default();
        *slot = slot.add(a);
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn part(&self, g: usize) -> AlgebraElt {
        self.terms.get(&g).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&usize, &AlgebraElt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of `(group element, monomial)` pairs with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.values().map(|a| a.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, o: &SmashElt) -> SmashElt {
        let mut out = self.clone();
        for (g, a) in &o.terms {
            out.add_part(*g, a);
        }
        out
    }

    pub fn sub(&self, o: &SmashElt) -> SmashElt {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> SmashElt {
        self.scale(&CycloScalar::from_int(-1))
    }

    pub fn scale(&self, c: &CycloScalar) -> SmashElt {
        if c.is_zero() {
            return SmashElt::zero();
        }
        SmashElt { terms: self.terms.iter().map(|(g, a)| (*g, a.scale(c))).collect() }
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.values().map(|a| a.homogeneous_degree());
        let first = it.next()??;
        it.all(|d| d == Some(first)).then_some(first)
    }
}

/// Group data needed to multiply in `A # G`.
#[derive(Clone, Debug)]
pub struct SmashContext {
    pub group: GroupSpec,
    pub elements: Vec<RootMatrix>,
    index: HashMap<RootMatrix, usize>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl SmashContext {
    pub fn new(group: &GroupSpec) -> Result<Self> {
        let elements = group.elements()?;
        let index: HashMap<RootMatrix, usize> = elements.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let mut table = Vec::with_capacity(elements.len());
        for x in &elements {
            let row = elements
                .iter()
                .map(|y| {
                    index
                        .get(&x.mul(y))
                        .copied()
                        .ok_or_else(|| Error::Inconsistency(format!("{} is not closed under products", group.variant)))
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        let identity = index
            .get(&RootMatrix::identity(group.root_order()))
            .copied()
            .ok_or_else(|| Error::Inconsistency("identity missing from element list".into()))?;
        Ok(SmashContext { group: group.clone(), elements, index, table, identity })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.group.ambient
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, r: &RootMatrix) -> Option<usize> {
        let m = self.group.root_order();
        if m % r.order != 0 {
            return None;
        }
        self.index.get(&r.at_order(m)).copied()
    }

    pub fn product_index(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    /// `g · a` for the group element with index `g`.
    pub fn act(&self, g: usize, a: &AlgebraElt) -> AlgebraElt {
        apply_root(self.spec(), &self.elements[g], a)
    }

    /// `1 · g`.
    pub fn group_element(&self, g: usize) -> SmashElt {
        SmashElt::single(g, AlgebraElt::one())
    }

    /// `a · e`.
    pub fn algebra(&self, a: &AlgebraElt) -> SmashElt {
        SmashElt::single(self.identity, a.clone())
    }

    /// `(a g)(b h) = a (g·b) gh`.
    pub fn mul(&self, x: &SmashElt, y: &SmashElt) -> SmashElt {
        let mut out = SmashElt::zero();
        for (g, a) in &x.terms {
            for (h, b) in &y.terms {
                let twisted = self.act(*g, b);
                out.add_part(self.table[*g][*h], &mul(self.spec(), a, &twisted));
            }
        }
        out
    }

    pub fn left_alg(&self, a: &AlgebraElt, x: &SmashElt) -> SmashElt {
        SmashElt { terms: x.terms.iter().map(|(g, b)| (*g, mul(self.spec(), a, b))).filter(|(_, b)| !b.is_zero()).collect() }
    }

    pub fn right_alg(&self, x: &SmashElt, a: &AlgebraElt) -> SmashElt {
        self.mul(x, &self.algebra(a))
    }

    /// `ḡ = Σ_{g ∈ G} g`.
    pub fn gbar(&self) -> SmashElt {
        let mut out = SmashElt::zero();
        for g in 0..self.order() {
            out.add_part(g, &AlgebraElt::one());
        }
        out
    }

    /// Coordinates of the degree-`d` part; column `g (d+1) + i` holds the coefficient of `u^i v^{d-i} g`.
    pub fn coords(&self, x: &SmashElt, d: u32) -> SparseVec {
        let w = d as usize + 1;
        x.terms.iter().flat_map(|(g, a)| a.degree_part(d).into_iter().map(move |(i, c)| (g * w + i, c))).collect()
    }

    pub fn from_coords(&self, v: &[(usize, CycloScalar)], d: u32) -> SmashElt {
        let w = d as usize + 1;
        let mut out = SmashElt::zero();
        for (col, c) in v {
            out.add_part(col / w, &AlgebraElt::term(c.clone(), (col % w) as u32, d - (col % w) as u32));
        }
        out
    }
}

pub fn smash_mul(ctx: &SmashContext, x: &SmashElt, y: &SmashElt) -> SmashElt {
    ctx.mul(x, y)
}

pub fn gbar(ctx: &SmashContext) -> SmashElt {
    ctx.gbar()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GHKind {
    G,
    H,
}

fn gnk_params(ctx: &SmashContext) -> Result<(i64, i64)> {
    match ctx.group.variant {
        GroupVariant::Gnk { n, k } => Ok((n as i64, k as i64)),
        ref v => Err(Error::InvalidParameters(format!("G/H elements are defined for G(n, k), not {v}"))),
    }
}

/// `G_ℓ = Σ ω^{2ℓ(nj+ki)} g^i h^{2j}` or `H_ℓ = Σ ω^{ℓ(n(2j+1)-2ki)} g^i h^{2j+1}`, `ω = ω_{2nk}`.
pub fn gh_element(ctx: &SmashContext, l: i64, kind: GHKind) -> Result<SmashElt> {
    let (n, k) = gnk_params(ctx)?;
    let big = (2 * n * k) as u32;
    let mut out = SmashElt::zero();
    for i in 0..n {
        for j in 0..k {
            let (r, e) = match kind {
                GHKind::G => (RootMatrix::diag(big, 2 * (n * j + k * i), 2 * (n * j - k * i)), 2 * l * (n * j + k * i)),
                GHKind::H => (
                    RootMatrix::antidiag(big, (2 * j + 1) * n + 2 * k * i, (2 * j + 1) * n - 2 * k * i),
                    l * (n * (2 * j + 1) - 2 * k * i),
                ),
            };
            let idx = ctx.index_of(&r).ok_or_else(|| Error::Inconsistency(format!("{r:?} missing from G({n}, {k})")))?;
            out.add_part(idx, &AlgebraElt::term(CycloScalar::root(big, e), 0, 0));
        }
    }
    Ok(out)
}

/// Per-degree dimensions of an ideal inside `(A # G)_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealDim {
    pub degree: u32,
    pub ideal_dim: usize,
    pub ambient_dim: usize,
}

impl IdealDim {
    pub fn is_full(&self) -> bool {
        self.ideal_dim == self.ambient_dim
    }
}

/// Degreewise spans of the two-sided ideal generated by a homogeneous seed.
///
/// Uses `I_d = u I_{d-1} + v I_{d-1} + span{g · seed · m h}` with `m` running over monomials.
pub struct IdealSpan<'a> {
    ctx: &'a SmashContext,
    left_seeds: Vec<SmashElt>,
    seed_degree: u32,
    levels: Vec<Echelon>,
}

impl<'a> IdealSpan<'a> {
    pub fn new(ctx: &'a SmashContext, seed: &SmashElt) -> Result<Self> {
        let seed_degree = if seed.is_zero() {
            0
        } else {
            seed.homogeneous_degree().ok_or_else(|| Error::DegreeMismatch("ideal seed must be homogeneous".into()))?
        };
        let mut left_seeds: Vec<SmashElt> = Vec::new();
        for g in 0..ctx.order() {
            let s = ctx.mul(&ctx.group_element(g), seed);
            if !s.is_zero() && !left_seeds.contains(&s) {
                left_seeds.push(s);
            }
        }
        Ok(IdealSpan { ctx, left_seeds, seed_degree, levels: Vec::new() })
    }

    pub fn ambient_dim(&self, d: u32) -> usize {
        self.ctx.order() * (d as usize + 1)
    }

    pub fn push(&mut self) -> IdealDim {
        let d = self.levels.len() as u32;
        let full = self.ambient_dim(d);
        let mut ech = Echelon::new();
        if d > 0 {
            let prev: Vec<SparseVec> = self.levels[d as usize - 1].rows().to_vec();
            'outer: for row in &prev {
                let x = self.ctx.from_coords(row, d - 1);
                for a in [AlgebraElt::u(), AlgebraElt::v()] {
                    ech.insert(&self.ctx.coords(&self.ctx.left_alg(&a, &x), d));
                    if ech.rank() == full {
                        break 'outer;
                    }
                }
            }
        }
        if d >= self.seed_degree && ech.rank() < full {
            'seed: for s in &self.left_seeds {
                for m in monomials(d - self.seed_degree) {
                    let sm = self.ctx.right_alg(s, &AlgebraElt::monomial(m.i, m.j));
                    for h in 0..self.ctx.order() {
                        let y = self.ctx.mul(&sm, &self.ctx.group_element(h));
                        ech.insert(&self.ctx.coords(&y, d));
                        if ech.rank() == full {
                            break 'seed;
                        }
                    }
                }
            }
        }
        let rec = IdealDim { degree: d, ideal_dim: ech.rank(), ambient_dim: full };
        self.levels.push(ech);
        rec
    }

    /// Whether a homogeneous element of an already computed degree lies in the ideal.
    pub fn contains(&self, x: &SmashElt) -> Option<bool> {
        if x.is_zero() {
            return Some(true);
        }
        let d = x.homogeneous_degree()?;
        self.levels.get(d as usize).map(|e| e.contains(&self.ctx.coords(x, d)))
    }
}

/// Ideal dimensions for an arbitrary homogeneous seed, by direct spanning in `(A # G)_d`.
pub fn ideal_dims(ctx: &SmashContext, seed: &SmashElt, n: u32) -> Result<Vec<IdealDim>> {
    let mut span = IdealSpan::new(ctx, seed)?;
    Ok((0..=n).map(|_| span.push()).collect())
}

/// Ideal dimensions for the seed `ḡ`, block by block.
///
/// With `D` the diagonal subgroup and `h` an antidiagonal element (if any), `A # G` splits as
/// `⊕_λ (A ⊕ A h) e_λ` over characters `λ` of `D`, and `⟨ḡ⟩` meets block `λ` in the left
/// `A`-submodule generated by `(b, h·b)` for `b` in the `λ`-isotypic part of `A`.
pub fn gbar_ideal_dims(ctx: &SmashContext, n: u32) -> Vec<IdealDim> {
    let spec = ctx.spec();
    let diag: Vec<usize> = (0..ctx.order()).filter(|&g| !ctx.elements[g].anti).collect();
    let h = (0..ctx.order()).find(|&g| ctx.elements[g].anti);
    let cosets = if h.is_some() { 2 } else { 1 };
    let char_key = |i: u32, j: u32| -> Vec<u32> {
        diag.iter()
            .map(|&g| {
                let r = &ctx.elements[g];
                ((r.e1 as u64 * i as u64 + r.e2 as u64 * j as u64) % r.order as u64) as u32
            })
            .collect()
    };
    let mut blocks: HashMap<Vec<u32>, Echelon> = HashMap::new();
    let mut out = Vec::with_capacity(n as usize + 1);
    for d in 0..=n {
        let w = d as usize + 1;
        let block_full = cosets * w;
        let to_pair = |row: &SparseVec, dd: u32| -> (AlgebraElt, AlgebraElt) {
            let ww = dd as usize + 1;
            let first: Vec<(usize, CycloScalar)> = row.iter().filter(|(c, _)| *c < ww).cloned().collect();
            let second: Vec<(usize, CycloScalar)> = row.iter().filter(|(c, _)| *c >= ww).map(|(c, x)| (c - ww, x.clone())).collect();
            (AlgebraElt::from_degree_part(dd, &first), AlgebraElt::from_degree_part(dd, &second))
        };
        let pair_coords = |x: &AlgebraElt, y: &AlgebraElt| -> SparseVec {
            sparse_from_pairs(x.degree_part(d).into_iter().chain(y.degree_part(d).into_iter().map(|(c, v)| (c + w, v))))
        };
        let mut seeds: BTreeMap<Vec<u32>, Vec<AlgebraElt>> = BTreeMap::new();
        for m in monomials(d) {
            seeds.entry(char_key(m.i, m.j)).or_default().push(AlgebraElt::monomial(m.i, m.j));
        }
        let mut keys: Vec<Vec<u32>> = blocks.keys().cloned().collect();
        keys.extend(seeds.keys().cloned());
        keys.sort();
        keys.dedup();
        let mut next_blocks = HashMap::new();
        let mut total = 0;
        for key in keys {
            let mut ech = Echelon::new();
            if let Some(prev) = blocks.get(&key) {
                'grow: for row in prev.rows() {
                    let (x, y) = to_pair(row, d - 1);
                    for a in [AlgebraElt::u(), AlgebraElt::v()] {
                        ech.insert(&pair_coords(&mul(spec, &a, &x), &mul(spec, &a, &y)));
                        if ech.rank() == block_full {
                            break 'grow;
                        }
                    }
                }
            }
            if ech.rank() < block_full {
                for b in seeds.get(&key).into_iter().flatten() {
                    let hb = match h {
                        Some(h) => ctx.act(h, b),
                        None => AlgebraElt::zero(),
                    };
                    ech.insert(&pair_coords(b, &hb));
                    if ech.rank() == block_full {
                        break;
                    }
                }
            }
            total += ech.rank();
            next_blocks.insert(key, ech);
        }
        blocks = next_blocks;
        out.push(IdealDim { degree: d, ideal_dim: total, ambient_dim: ctx.order() * w });
    }
    out
}

/// Outcome of the witness search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub group: String,
    pub algebra: String,
    pub bound: u32,
    pub tail_required: u32,
    pub dims: Vec<IdealDim>,
    /// Smallest `s` with `(A # G)_d ⊆ ⟨ḡ⟩` for `s <= d <= bound`, when the covered tail is long enough.
    pub witness: Option<u32>,
}

/// Minimum number of fully covered trailing degrees before a witness is claimed.
pub const MIN_TAIL: u32 = 4;

/// Searches degrees `0..=n` for the start of full coverage by `⟨ḡ⟩`.
pub fn finite_dim_witness(g: &GroupSpec, n: u32) -> Result<WitnessReport> {
    let ctx = SmashContext::new(g)?;
    let dims = gbar_ideal_dims(&ctx, n);
    let start = dims.iter().rev().take_while(|r| r.is_full()).last().map(|r| r.degree);
    let tail_required = MIN_TAIL;
    let witness = start.filter(|&s| n + 1 - s >= tail_required);
    Ok(WitnessReport { group: g.variant.to_string(), algebra: g.ambient.label(), bound: n, tail_required, dims, witness })
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GHReport {
    pub n: u32,
    pub k: u32,
    pub bezout: (i64, i64),
    pub m: i64,
    pub checks: Vec<IdentityCheck>,
    pub all_hold: bool,
}

fn power(spec: &AlgebraSpec, i: u32, j: u32) -> AlgebraElt {
    mul(spec, &pow(spec, &AlgebraElt::u(), i), &pow(spec, &AlgebraElt::v(), j))
}

fn binom(spec: &AlgebraSpec, e: u32, sign: i64) -> AlgebraElt {
    power(spec, e, 0).add(&power(spec, 0, e).scale(&CycloScalar::from_int(sign)))
}

/// Checks the `G_ℓ`/`H_ℓ` identities for `0 <= ℓ <= bound` and certifies the memberships in `⟨ḡ⟩`
/// that lead to `u^{(n+1)k} v^{(n+1)k} ∈ ⟨ḡ⟩` by exhibiting explicit combinations.
pub fn verify_gh_identities(n: u32, k: u32, bound: u32) -> Result<GHReport> {
    if n % 2 == 0 || k % 2 == 0 || n.gcd(&k) != 1 {
        return Err(Error::InvalidParameters(format!("G/H identities need odd coprime n, k, got ({n}, {k})")));
    }
    let g = GroupSpec::gnk(n, k)?;
    let ctx = SmashContext::new(&g)?;
    let spec = ctx.spec().clone();
    let (ni, ki) = (n as i64, k as i64);
    let nk = ni * ki;
    let ext = ni.extended_gcd(&ki);
    let (a, b) = (ext.x, ext.y);
    let m = (a * ni - b * ki).rem_euclid(2 * nk);
    let gl = |l: i64| gh_element(&ctx, l, GHKind::G);
    let hl = |l: i64| gh_element(&ctx, l, GHKind::H);
    let mut checks = Vec::new();
    let mut record = |name: String, holds: bool| checks.push(IdentityCheck { name, holds });

    let mut periodic_g = true;
    let mut periodic_h = true;
    let mut commute_u = true;
    let mut commute_v = true;
    let g0 = gl(0)?;
    let h0 = hl(0)?;
    for l in 0..=bound as i64 {
        let (gl_, hl_) = (gl(l)?, hl(l)?);
        for r in [-1i64, 1, 2] {
            periodic_g &= gl(l + nk * r)? == gl_;
            let sign = if (ni * r).rem_euclid(2) == 0 { 1 } else { -1 };
            periodic_h &= hl(l + nk * r)?.scale(&CycloScalar::from_int(sign)) == hl_;
        }
        let (ul, vl) = (ctx.algebra(&power(&spec, l as u32, 0)), ctx.algebra(&power(&spec, 0, l as u32)));
        commute_u &= ctx.mul(&g0, &ul) == ctx.mul(&ul, &gl_);
        commute_u &= ctx.mul(&h0, &ul) == ctx.mul(&vl, &hl_);
        commute_v &= ctx.mul(&g0, &vl) == ctx.mul(&vl, &gl(m * l)?);
        commute_v &= ctx.mul(&h0, &vl) == ctx.mul(&ul, &hl(m * l)?);
    }
    record("G_l = G_{l+nkr}".into(), periodic_g);
    record("H_l = (-1)^{nr} H_{l+nkr}".into(), periodic_h);
    let mut sum = SmashElt::zero();
    for l in 0..nk {
        sum = sum.add(&gl(l)?);
    }
    record("sum of G_l over one period is nk".into(), sum == ctx.algebra(&AlgebraElt::one()).scale(&CycloScalar::from_int(nk)));
    let gbar = ctx.gbar();
    record("gbar = G_0 + H_0".into(), gbar == g0.add(&h0));
    record("G_0 u^l = u^l G_l and H_0 u^l = v^l H_l".into(), commute_u);
    record(format!("G_0 v^l = v^l G_(ml) and H_0 v^l = u^l H_(ml) with m = {m}"), commute_v);

    // (u^{nk} - δ v^{nk}) G_0 = ḡ u^{nk} - δ v^{nk} ḡ
    let e = nk as u32;
    let left = ctx.right_alg(&gbar, &power(&spec, e, 0));
    let right = ctx.left_alg(&power(&spec, 0, e), &gbar);
    let found = [1i64, -1].iter().any(|&delta| {
        let comb = left.sub(&right.scale(&CycloScalar::from_int(delta)));
        comb == ctx.left_alg(&binom(&spec, e, -delta), &g0)
    });
    record("(u^nk +- v^nk) G_0 in <gbar>".into(), found);

    // (u^{l+r} ∓ v^{l+r}) G_l = u^r ḡ u^l ∓ v^l ḡ v^r with r ≡ m l mod 2nk
    let mut all_sums = true;
    for l in 1..nk {
        let r = (m * l).rem_euclid(2 * nk);
        let (lu, ru) = (l as u32, r as u32);
        let x = ctx.right_alg(&ctx.left_alg(&power(&spec, ru, 0), &gbar), &power(&spec, lu, 0));
        let y = ctx.right_alg(&ctx.left_alg(&power(&spec, 0, lu), &gbar), &power(&spec, 0, ru));
        let target_g = gl(l)?;
        all_sums &= [1i64, -1].iter().any(|&s| {
            x.add(&y.scale(&CycloScalar::from_int(s))) == ctx.left_alg(&binom(&spec, lu + ru, s), &target_g)
        });
    }
    record("(u^{l+r} +- v^{l+r}) G_l in <gbar>".into(), all_sums);

    // u^k v^k G_0 = ½ (ḡ u^k v^k + u^k v^k ḡ)
    let ukvk = power(&spec, k, k);
    let half = CycloScalar::from_rational(&crate::scalars::rat(1, 2));
    let cert = ctx.right_alg(&gbar, &ukvk).add(&ctx.left_alg(&ukvk, &gbar)).scale(&half);
    record("u^k v^k G_0 in <gbar>".into(), cert == ctx.left_alg(&ukvk, &g0));

    // nk u^{(n+1)k} v^{(n+1)k} = Σ_ℓ ± u^{nk-ℓ} v^{nk} (u^k v^k G_0) u^ℓ
    let top = power(&spec, (n + 1) * k, (n + 1) * k);
    let mut total = SmashElt::zero();
    let mut signs_ok = true;
    for l in 0..nk {
        let lu = l as u32;
        let term = ctx.right_alg(&ctx.left_alg(&power(&spec, e - lu, e), &cert), &power(&spec, lu, 0));
        let expect = ctx.left_alg(&top, &gl(l)?);
        if term == expect {
            total = total.add(&term);
        } else if term == expect.neg() {
            total = total.sub(&term);
        } else {
            signs_ok = false;
        }
    }
    record("u^{(n+1)k} v^{(n+1)k} in <gbar>".into(), signs_ok && total == ctx.algebra(&top).scale(&CycloScalar::from_int(nk)));

    let all_hold = checks.iter().all(|c| c.holds);
    Ok(GHReport { n, k, bezout: (a, b), m, checks, all_hold })
}

/// `Σ_j u^{n-1-j} ḡ u^j = n u^{n-1}` and the same with `v`, for a cyclic diagonal group of order `n`.
pub fn verify_diagonal_identity(g: &GroupSpec) -> Result<bool> {
    let GroupVariant::CyclicDiag { n, .. } = g.variant else {
        return Err(Error::InvalidParameters(format!("expected a cyclic diagonal group, got {}", g.variant)));
    };
    let ctx = SmashContext::new(g)?;
    let spec = ctx.spec().clone();
    let gbar = ctx.gbar();
    let mut ok = true;
    for (x, y) in [(1u32, 0u32), (0, 1)] {
        let mut sum = SmashElt::zero();
        for j in 0..n {
            let l = power(&spec, x * (n - 1 - j), y * (n - 1 - j));
            let r = power(&spec, x * j, y * j);
            sum = sum.add(&ctx.right_alg(&ctx.left_alg(&l, &gbar), &r));
        }
        let expect = ctx.algebra(&pow(&spec, &power(&spec, x, y), n - 1)).scale(&CycloScalar::from_int(n as i64));
        ok &= sum == expect;
    }
    Ok(ok)
}

impl SmashContext {
    /// The unit `1 · e`.
    pub fn one(&self) -> SmashElt {
        self.algebra(&AlgebraElt::one())
    }

    pub fn is_one(&self, x: &SmashElt) -> bool {
        *x == self.one()
    }
}
