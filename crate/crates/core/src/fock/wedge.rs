//! Finite wedge powers of the natural level-0 module and the Fock embedding.

use super::Multipartition;
use std::collections::BTreeMap;

/// Basis wedge v_{i_1} ^ ... ^ v_{i_m} with strictly increasing indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct WedgeVector {
    pub indices: Vec<i64>,
}

/// Integer formal sum of wedges.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WedgeSum {
    pub terms: BTreeMap<WedgeVector, i64>,
}

impl WedgeSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(v: WedgeVector) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(v, 1);
        WedgeSum { terms }
    }

    pub fn add_term(&mut self, v: WedgeVector, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(v).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &WedgeSum) -> WedgeSum {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), *c);
        }
        out
    }
}

/// Normalize an index tuple into a sorted wedge with sign; None when two
/// indices collide.
pub fn normalize(mut indices: Vec<i64>) -> Option<(WedgeVector, i64)> {
    let mut sign = 1i64;
    // insertion sort with parity tracking
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((WedgeVector { indices }, sign))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WedgeOp {
    /// f_i: v_{j+1} -> v_j when j = i mod e
    F(i64),
    /// e_i: v_j -> v_{j+1} when j = i mod e
    E(i64),
    /// e_0 with the final-factor monomial dropped (the truncation making the
    /// Fock embedding an intertwiner)
    TruncatedE0,
}

pub fn wedge_apply(op: WedgeOp, w: &WedgeVector, e: i64) -> WedgeSum {
    let mut out = WedgeSum::zero();
    let m = w.indices.len();
    for k in 0..m {
        let idx = w.indices[k];
        let (applies, delta) = match op {
            WedgeOp::F(i) => ((idx - 1).rem_euclid(e) == i.rem_euclid(e), -1),
            WedgeOp::E(i) => (idx.rem_euclid(e) == i.rem_euclid(e), 1),
            WedgeOp::TruncatedE0 => {
                let is_last = k == m - 1;
                (idx.rem_euclid(e) == 0 && !is_last, 1)
            }
        };
        if !applies {
            continue;
        }
        let mut v = w.indices.clone();
        v[k] += delta;
        if let Some((nv, sign)) = normalize(v) {
            out.add_term(nv, sign);
        }
    }
    out
}

pub fn wedge_apply_sum(op: WedgeOp, s: &WedgeSum, e: i64) -> WedgeSum {
    let mut out = WedgeSum::zero();
    for (v, c) in &s.terms {
        let part = wedge_apply(op, v, e);
        for (nv, nc) in part.terms {
            out.add_term(nv, nc * c);
        }
    }
    out
}

/// The Fock embedding at level 1: |lambda> -> v_{1-m-l_1} ^ ... ^ v_0,
/// defined for partitions with fewer than m rows.
pub fn fock_to_wedge(l: &Multipartition, m: usize) -> WedgeVector {
    assert_eq!(l.level(), 1);
    let p = &l.components[0];
    assert!(p.len() < m, "partition needs fewer than m rows");
    let indices: Vec<i64> = (1..=m)
        .map(|j| {
            let lj = p.get(j - 1).copied().unwrap_or(0) as i64;
            j as i64 - m as i64 - lj
        })
        .collect();
    debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
    debug_assert_eq!(*indices.last().unwrap(), 0);
    WedgeVector { indices }
}

/// Recover the partition from a wedge through lambda_j = j + d - i_j with
/// d = -m; None when the wedge is off the image.
pub fn wedge_to_fock(w: &WedgeVector) -> Option<Multipartition> {
    let m = w.indices.len();
    let mut rows = Vec::new();
    for (j, &i) in w.indices.iter().enumerate() {
        let lj = (j + 1) as i64 - m as i64 - i;
        if lj < 0 {
            return None;
        }
        rows.push(lj);
    }
    if !rows.windows(2).all(|p| p[0] >= p[1]) {
        return None;
    }
    let parts: Vec<u32> = rows
        .into_iter()
        .take_while(|&x| x > 0)
        .map(|x| x as u32)
        .collect();
    if !parts.windows(2).all(|p| p[0] >= p[1]) {
        return None;
    }
    Some(Multipartition::new(vec![parts]))
}
