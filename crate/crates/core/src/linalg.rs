//! Exact linear algebra over cyclotomic fields: incremental sparse echelon forms and nullspaces.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::scalars::CycloScalar;

/// Sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseVec = Vec<(usize, CycloScalar)>;

/// Builds a sparse vector from arbitrary `(column, value)` pairs, summing duplicates.
pub fn sparse_from_pairs<I: IntoIterator<Item = (usize, CycloScalar)>>(pairs: I) -> SparseVec {
    let mut map: BTreeMap<usize, CycloScalar> = BTreeMap::new();
    for (c, v) in pairs {
        let slot = map.entry(c).or_insert_with(CycloScalar::zero);
        *slot += &v;
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a - c * b` for sparse vectors.
fn axpy(a: &SparseVec, c: &CycloScalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|x| x.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|x| x.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(c * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained row echelon basis of a subspace.
///
/// Each stored row has leading coefficient 1 at a distinct pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot.contains_key(&col)
    }

    /// Reduces until the leading column is not a pivot; returns the remainder (empty if dependent).
    pub fn reduce_leading(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        while let Some((c, x)) = v.first() {
            match self.pivot.get(c) {
                Some(&r) => {
                    let x = x.clone();
                    v = axpy(&v, &x, &self.rows[r]);
                }
                None => break,
            }
        }
        v
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce_full(&self, v: &SparseVec) -> SparseVec {
        let mut work: BTreeMap<usize, CycloScalar> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).find(|(c, _)| self.pivot.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, x)) = next else { break };
            let row = &self.rows[self.pivot[&c]];
            for (rc, rv) in row {
                let slot = work.entry(*rc).or_insert_with(CycloScalar::zero);
                *slot -= &(&x * rv);
                if slot.is_zero() {
                    work.remove(rc);
                }
            }
            cursor = c + 1;
        }
        work.into_iter().collect()
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce_leading(v);
        let Some((c, lead)) = r.first().cloned() else { return false };
        let row = if lead.is_one() {
            r
        } else {
            let inv = lead.inv().expect("nonzero leading entry");
            r.into_iter().map(|(k, x)| (k, &x * &inv)).collect()
        };
        self.pivot.insert(c, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_leading(v).is_empty()
    }
}

/// Basis of the nullspace `{x : M x = 0}` of a dense matrix with `ncols` columns.
pub fn nullspace(rows: &[Vec<CycloScalar>], ncols: usize) -> Vec<Vec<CycloScalar>> {
    let mut m: Vec<Vec<CycloScalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycloScalar::zero(); ncols];
            v[f] = CycloScalar::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[i][f];
            }
            v
        })
        .collect()
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<CycloScalar>]) -> usize {
    let mut e = Echelon::new();
    for row in rows {
        let v: SparseVec = row.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        e.insert(&v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> SparseVec {
        v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, CycloScalar::from_int(x))).collect()
    }

    #[test]
    fn echelon_rank_and_reduction() {
        let mut e = Echelon::new();
        assert!(e.insert(&s(&[1, 2, 0])));
        assert!(e.insert(&s(&[0, 1, 1])));
        assert!(!e.insert(&s(&[2, 5, 1])));
        assert_eq!(e.rank(), 2);
        let r = e.reduce_full(&s(&[0, 0, 3]));
        assert_eq!(r, s(&[0, 0, 3]));
        let r = e.reduce_full(&s(&[1, 0, 0]));
        // e0 = row0 - 2 row1 + 2 e2
        assert_eq!(r, s(&[0, 0, 2]));
    }

    #[test]
    fn nullspace_small() {
        let w = CycloScalar::root(3, 1);
        let rows = vec![vec![CycloScalar::one(), w.clone(), CycloScalar::zero()]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = &v[0] + &(&w * &v[1]);
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&rows), 1);
    }
}
