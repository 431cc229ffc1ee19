//! Exact linear algebra over ℚ(i).
//!
//! Vectors are sparse, sorted by index. Rank and kernel computations use
//! incremental echelon insertion with deterministic pivoting: the pivot of a
//! vector is its first nonzero coordinate.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Gq;

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Gq)>;

/// Builds a sparse vector from unordered `(index, coefficient)` pairs, summing duplicates.
pub fn sparse_from<I: IntoIterator<Item = (usize, Gq)>>(it: I) -> SparseVec {
    let mut map: BTreeMap<usize, Gq> = BTreeMap::new();
    for (k, c) in it {
        *map.entry(k).or_insert_with(Gq::zero) += &c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `v - a·w`.
pub fn axpy(v: &[(usize, Gq)], a: &Gq, w: &[(usize, Gq)]) -> SparseVec {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_w {
            out.push((w[j].0, -(a * &w[j].1)));
            j += 1;
        } else {
            let c = &v[i].1 - &(a * &w[j].1);
            if !c.is_zero() {
                out.push((v[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &[(usize, Gq)], a: &Gq) -> SparseVec {
    if a.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(k, c)| (*k, c * a)).collect()
}

/// Incrementally built echelon basis of a subspace.
///
/// Each stored row has leading coefficient 1. When `track` is set, every row
/// carries the combination of inserted vectors that produced it, so vectors
/// reducing to zero yield kernel relations.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, (SparseVec, SparseVec)>,
    track: bool,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn tracking() -> Self {
        Echelon { track: true, ..Echelon::default() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the stored rows; returns the remainder and, when
    /// tracking, the combination `c` of inserted vectors with
    /// `remainder = v + Σ c_k·v_k`.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        let mut combo: SparseVec = Vec::new();
        loop {
            let Some((lead, coef)) = v.first().cloned() else { break };
            match self.pivots.get(&lead) {
                Some((row, rc)) => {
                    v = axpy(&v, &coef, row);
                    if self.track {
                        combo = axpy(&combo, &coef, rc);
                    }
                }
                None => {
                    // leading entry is new; clean the tail so rows stay short
                    let mut k = 1;
                    while k < v.len() {
                        let (idx, c) = v[k].clone();
                        if let Some((row, rc)) = self.pivots.get(&idx) {
                            v = axpy(&v, &c, row);
                            if self.track {
                                combo = axpy(&combo, &c, rc);
                            }
                            k = v.iter().position(|(j, _)| *j > idx).unwrap_or(v.len());
                        } else {
                            k += 1;
                        }
                    }
                    break;
                }
            }
        }
        (v, combo)
    }

    /// True if `v` lies in the span.
    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        while let Some((lead, coef)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                Some((row, _)) => v = axpy(&v, &coef, row),
                None => return false,
            }
        }
        true
    }

    /// Inserts `v`. Returns `None` if it was independent, otherwise (when
    /// tracking) the kernel relation among inserted vectors it produced,
    /// indexed by insertion order.
    pub fn insert(&mut self, v: SparseVec) -> Option<SparseVec> {
        let id = self.inserted;
        self.inserted += 1;
        let (rem, mut combo) = self.reduce(v);
        if self.track {
            // remainder = v_id + Σ combo_k·v_k, all k < id
            combo.push((id, Gq::one()));
        }
        match rem.first() {
            None => Some(combo),
            Some((lead, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                let row = scale(&rem, &inv);
                let rc = if self.track { scale(&combo, &inv) } else { Vec::new() };
                self.pivots.insert(*lead, (row, rc));
                None
            }
        }
    }
}

/// Rank of the span of `vectors`.
pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v.clone());
    }
    e.rank()
}

/// Basis of `{c : Σ c_k · images[k] = 0}`, in reduced row echelon form
/// (first nonzero coordinate of each vector equal to 1).
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::tracking();
    let mut rel = Vec::new();
    for v in images {
        if let Some(r) = e.insert(v.clone()) {
            rel.push(r);
        }
    }
    rref(&rel)
}

/// Reduced row echelon form of the span of `rows`, as a list of nonzero rows
/// sorted by pivot.
pub fn rref(rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.clone());
    }
    let mut out: Vec<(usize, SparseVec)> = e.pivots.into_iter().map(|(k, (row, _))| (k, row)).collect();
    // back-substitute so each pivot column is zero in the other rows
    let n = out.len();
    for a in (0..n).rev() {
        let (pa, ra) = out[a].clone();
        for (_, rb) in out.iter_mut().take(a) {
            if let Some((_, c)) = rb.iter().find(|(k, _)| *k == pa).cloned() {
                *rb = axpy(rb, &c, &ra);
            }
        }
    }
    out.into_iter().map(|(_, r)| r).collect()
}

/// Inverse of a dense square matrix.
pub fn invert(m: &[Vec<Gq>]) -> Result<Vec<Vec<Gq>>> {
    let n = m.len();
    let mut a: Vec<Vec<Gq>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Gq::one() } else { Gq::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
        a.swap(col, piv);
        let inv = a[col][col].inv()?;
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &(&f * p);
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[(usize, i64)]) -> SparseVec {
        sparse_from(xs.iter().map(|&(k, c)| (k, Gq::from_int(c))))
    }

    #[test]
    fn rank_and_kernel() {
        let imgs = vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(2, 1)]), v(&[])];
        assert_eq!(rank(&imgs), 2);
        let k = kernel(&imgs);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], v(&[(0, 1)]).into_iter().chain(vec![(1, Gq::ratio(-1, 2))]).collect::<Vec<_>>());
        assert_eq!(k[1], v(&[(3, 1)]));
    }

    #[test]
    fn inverse() {
        let m = vec![vec![Gq::from_int(1), Gq::i()], vec![Gq::zero(), Gq::from_int(2)]];
        let inv = invert(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let mut s = Gq::zero();
                for k in 0..2 {
                    s += &(&m[i][k] * &inv[k][j]);
                }
                assert_eq!(s, if i == j { Gq::one() } else { Gq::zero() });
            }
        }
    }
}
