//! Hirzebruch–Jung continued fractions and the integer series built from them.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::Rational;

/// `[a_1, ..., a_N]` meaning `a_1 - 1/(a_2 - 1/(... - 1/a_N))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HJExpansion {
    pub entries: Vec<i64>,
}

impl HJExpansion {
    /// The rational number the expansion represents.
    pub fn value(&self) -> Rational {
        let mut it = self.entries.iter().rev();
        let mut x = Rational::from_integer((*it.next().expect("nonempty expansion")).into());
        for &a in it {
            x = Rational::from_integer(a.into()) - x.recip();
        }
        x
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Expansion of `num/den` by the ceiling recursion `x -> 1/(ceil(x) - x)`.
pub fn hj_expand(num: i64, den: i64) -> Result<HJExpansion> {
    if num <= 0 || den <= 0 {
        return Err(Error::InvalidParameters(format!("continued fraction needs positive input, got {num}/{den}")));
    }
    let (mut p, mut q) = (num, den);
    let mut entries = Vec::new();
    loop {
        let a = Integer::div_ceil(&p, &q);
        entries.push(a);
        let rem = a * q - p;
        if rem == 0 {
            break;
        }
        (p, q) = (q, rem);
    }
    Ok(HJExpansion { entries })
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Inconsistency(what()))
    }
}

/// `x_k = u^{i_k} v^{j_k}` generating the invariants of `1/n(1, a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeAData {
    pub n: i64,
    pub a: i64,
    pub beta: Vec<i64>,
    pub i: Vec<i64>,
    pub j: Vec<i64>,
    pub d: usize,
}

pub fn type_a_data(n: i64, a: i64) -> Result<TypeAData> {
    if a < 1 || a >= n || n.gcd(&a) != 1 {
        return Err(Error::InvalidParameters(format!("type A data needs 1 <= a < n, gcd(a, n) = 1, got n={n}, a={a}")));
    }
    let beta = hj_expand(n, n - a)?.entries;
    let d = beta.len() + 2;
    let mut i = vec![n, n - a];
    let mut j = vec![0, 1];
    for k in 2..d {
        i.push(beta[k - 2] * i[k - 1] - i[k - 2]);
        j.push(beta[k - 2] * j[k - 1] - j[k - 2]);
    }
    check(i[d - 1] == 0 && j[d - 1] == n, || format!("type A series for ({n}, {a}) do not end at (0, n)"))?;
    check((0..d).all(|k| (i[k] + a * j[k]) % n == 0), || format!("type A exponents for ({n}, {a}) are not invariant"))?;
    Ok(TypeAData { n, a, beta, i, j, d })
}

/// Series giving the generators of the binary dihedral invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeDData {
    pub m: i64,
    pub q: i64,
    /// Expansion of `m/q` (self-intersection data).
    pub alpha: Vec<i64>,
    /// Expansion of `m/(m-q)`.
    pub beta: Vec<i64>,
    pub s: Vec<i64>,
    pub t: Vec<i64>,
    pub r: Vec<i64>,
    pub d: usize,
}

pub fn type_d_data(m: i64, q: i64) -> Result<TypeDData> {
    if q <= 1 || q >= m || m.gcd(&q) != 1 {
        return Err(Error::InvalidParameters(format!("type D data needs 1 < q < m, gcd(m, q) = 1, got m={m}, q={q}")));
    }
    let alpha = hj_expand(m, q)?.entries;
    let beta = hj_expand(m, m - q)?.entries;
    let d = beta.len() + 2;
    let mut s = vec![1, 1];
    let mut t = vec![beta[0], beta[0] - 1];
    if d > 3 {
        s.push(beta[1]);
        t.push(beta[1] * (beta[0] - 1) - 1);
        for k in 3..d - 1 {
            s.push(beta[k - 1] * s[k - 1] - s[k - 2]);
            t.push(beta[k - 1] * t[k - 1] - t[k - 2]);
        }
    }
    let r: Vec<i64> = s.iter().zip(&t).map(|(&s, &t)| (m - q) * t - q * s).collect();
    check(r.iter().all(|&x| x >= 0), || format!("type D exponents for ({m}, {q}) went negative"))?;
    Ok(TypeDData { m, q, alpha, beta, s, t, r, d })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    NGtK,
    NLtK,
}

/// Series for the noncommutative invariants of `G(n, k)`, `n, k` odd and coprime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NCSeries {
    pub n: i64,
    pub k: i64,
    pub branch: Branch,
    pub gamma: Vec<i64>,
    pub beta: Vec<i64>,
    pub r: Vec<i64>,
    pub s: Vec<i64>,
    pub t: Vec<i64>,
    pub d: usize,
    /// 0 when the recurrences read `x_i = β_i x_{i-1} - x_{i-2}`, 1 for `β_{i-1}`.
    pub beta_shift: usize,
}

impl NCSeries {
    /// `(r_i, s_i)` for the generators `(u^{n s} ± v^{n s}) (uv)^r`.
    pub fn generator_exponents(&self) -> Vec<(i64, i64)> {
        self.r.iter().copied().zip(self.s.iter().copied()).collect()
    }

    /// Exponent `e` of the extra generator `(uv)^e`, present when `n > k`.
    pub fn uv_power(&self) -> Option<i64> {
        (self.branch == Branch::NGtK).then_some(2 * self.k)
    }
}

fn run_recurrence(beta: &[i64], first: [i64; 2], len: usize, shift: usize) -> Option<Vec<i64>> {
    let mut v = first.to_vec();
    // beta is 1-indexed in the recurrence
    for i in 3..=len {
        let b = *beta.get((i - shift).checked_sub(1)?)?;
        v.push(b * v[i - 2] - v[i - 3]);
    }
    v.truncate(len);
    Some(v)
}

pub fn nc_series(n: i64, k: i64) -> Result<NCSeries> {
    if n <= 0 || k <= 0 || n % 2 == 0 || k % 2 == 0 || n.gcd(&k) != 1 || n == k {
        return Err(Error::InvalidParameters(format!("series need n, k odd, coprime and distinct, got ({n}, {k})")));
    }
    let gamma = hj_expand(n, (n + k) / 2)?.entries;
    let d = gamma.len() + 1;
    let mut beta = gamma.clone();
    let (branch, len, t_first) = if n > k {
        if beta.len() > 2 {
            beta[2] += 1;
        }
        (Branch::NGtK, d - 1, [2 * beta[1] + 1, 2 * beta[1] - 1])
    } else {
        beta[1] += 2;
        (Branch::NLtK, d, [3, 1])
    };
    let mut chosen = None;
    for shift in [0, 1] {
        let (Some(s), Some(t)) = (run_recurrence(&beta, [1, 1], len, shift), run_recurrence(&beta, t_first, len, shift)) else {
            continue;
        };
        if s[len - 1] == k && t[len - 1] == n {
            chosen = Some((shift, s, t));
            break;
        }
    }
    let (beta_shift, s, t) =
        chosen.ok_or_else(|| Error::Inconsistency(format!("no recurrence indexing reaches s = {k}, t = {n}")))?;
    let r: Vec<i64> = s.iter().zip(&t).map(|(&s, &t)| (k * t - n * s) / 2).collect();
    let out = NCSeries { n, k, branch, gamma, beta, r, s, t, d, beta_shift };
    out.validate()?;
    Ok(out)
}

impl NCSeries {
    fn validate(&self) -> Result<()> {
        let (n, k, r, s, t) = (self.n, self.k, &self.r, &self.s, &self.t);
        let len = r.len();
        let tag = || format!("series for ({n}, {k})");
        check(s.iter().zip(t).zip(r).all(|((&s, &t), &r)| 2 * r + n * s == k * t), || format!("{}: 2r + ns != kt", tag()))?;
        check(r.windows(2).all(|w| w[0] > w[1]), || format!("{}: r is not strictly decreasing", tag()))?;
        check(r[len - 1] == 0 && r[len - 2] == 1, || format!("{}: r does not end with 1, 0", tag()))?;
        check(s[len - 1] == k && t[len - 1] == n, || format!("{}: terminal values", tag()))?;
        // both branches: the r/s determinant is k and the r/t determinant is n
        for i in 0..len - 1 {
            check(r[i] * s[i + 1] - r[i + 1] * s[i] == k, || format!("{}: r/s cross identity at {}", tag(), i + 1))?;
            check(r[i] * t[i + 1] - r[i + 1] * t[i] == n, || format!("{}: r/t cross identity at {}", tag(), i + 1))?;
        }
        if self.branch == Branch::NLtK {
            check(r[0] == (3 * k - n) / 2 && r[1] == (k - n) / 2, || format!("{}: leading r values", tag()))?;
        }
        Ok(())
    }
}

/// Non-negative `c` with `(r, s, t) = Σ c_i (r_i, s_i, t_i)`, found greedily from the largest `r_i <= r`.
pub fn decompose_triple(series: &NCSeries, r: i64, s: i64, t: i64) -> Result<Vec<i64>> {
    let n = series.r.len();
    let fail = || Error::NoDecomposition(format!("({r}, {s}, {t}) has no decomposition over the series of ({}, {})", series.n, series.k));
    if 2 * r + series.n * s != series.k * t || r < 0 || s < 0 || t < 0 {
        return Err(fail());
    }
    let mut c = vec![0i64; n];
    let (mut r0, mut s0, mut t0) = (r, s, t);
    while r0 > 0 {
        let i = (0..n).find(|&i| series.r[i] <= r0).ok_or_else(fail)?;
        r0 -= series.r[i];
        s0 -= series.s[i];
        t0 -= series.t[i];
        if s0 < 0 || t0 < 0 {
            return Err(fail());
        }
        c[i] += 1;
    }
    let last = n - 1;
    if s0 % series.s[last] != 0 || t0 != (s0 / series.s[last]) * series.t[last] {
        return Err(fail());
    }
    c[last] += s0 / series.s[last];
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansions() {
        assert_eq!(hj_expand(5, 4).unwrap().entries, vec![2, 2, 2, 2]);
        assert_eq!(hj_expand(7, 5).unwrap().entries, vec![2, 2, 3]);
        assert_eq!(hj_expand(17, 14).unwrap().entries, vec![2, 2, 2, 2, 3, 2]);
        assert!(hj_expand(0, 3).is_err());
    }

    #[test]
    fn type_a() {
        let a = type_a_data(4, 1).unwrap();
        assert_eq!(a.i, vec![4, 3, 2, 1, 0]);
        assert_eq!(a.j, vec![0, 1, 2, 3, 4]);
        let a = type_a_data(6, 5).unwrap();
        assert_eq!((a.i, a.j, a.d), (vec![6, 1, 0], vec![0, 1, 6], 3));
    }

    #[test]
    fn type_d() {
        let d = type_d_data(3, 2).unwrap();
        assert_eq!((d.s, d.t, d.r, d.d), (vec![1, 1], vec![3, 2], vec![1, 0], 3));
        let d = type_d_data(5, 2).unwrap();
        assert_eq!((d.s, d.t, d.r), (vec![1, 1, 3], vec![2, 1, 2], vec![4, 1, 0]));
        assert!(type_d_data(7, 6).unwrap().alpha.iter().all(|&b| b == 2));
    }

    #[test]
    fn nc_examples() {
        let x = nc_series(17, 11).unwrap();
        assert_eq!(x.r, vec![19, 8, 5, 2, 1, 0]);
        assert_eq!(x.s, vec![1, 1, 2, 3, 7, 11]);
        assert_eq!(x.t, vec![5, 3, 4, 5, 11, 17]);
        assert_eq!(x.beta, vec![2, 2, 3, 2, 3, 2]);
        let x = nc_series(7, 3).unwrap();
        assert_eq!((x.r.clone(), x.s.clone(), x.t.clone()), (vec![4, 1, 0], vec![1, 1, 3], vec![5, 3, 7]));
        assert_eq!(decompose_triple(&x, 5, 2, 8).unwrap(), vec![1, 1, 0]);
        assert_eq!(decompose_triple(&x, 0, 6, 14).unwrap(), vec![0, 0, 2]);
        let x = nc_series(9, 1).unwrap();
        assert_eq!((x.beta.clone(), x.r.clone(), x.t.clone()), (vec![2, 5], vec![1, 0], vec![11, 9]));
        let x = nc_series(1, 5).unwrap();
        assert_eq!((x.r.clone(), x.s.clone(), x.t.clone()), (vec![7, 2, 1, 0], vec![1, 1, 3, 5], vec![3, 1, 1, 1]));
        assert_eq!(x.beta_shift, 1);
        assert!(nc_series(3, 3).is_err());
        assert!(nc_series(4, 3).is_err());
    }
}
