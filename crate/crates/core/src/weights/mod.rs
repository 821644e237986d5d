//! Weight combinatorics for the Kac-Moody action: Littelmann operators on the
//! finite and affine weight sets, stabilizers, dot-polynomial families, bubble
//! polynomials, and crossing degrees.

pub mod bubbles;
pub mod crossings;
pub mod dots;

pub use bubbles::{bubble, bubble_demazure_oracle, BubbleMode};
pub use crossings::{crossing_degree, CrossingDegree, CrossingKind};
pub use dots::{verify_dot_properties, DotFamily, DotReport};

use crate::coxeter::{CoxKind, CoxeterSystem, Gen, ParabolicSubset};

/// A weight in the finite set (1 <= l_1 <= ... <= l_n <= e) or the affine
/// fundamental window (l_1 <= ... <= l_n <= l_1 + e).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(pub Vec<i64>);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WeightCtx {
    pub kind: CoxKind,
    pub n: usize,
    pub e: i64,
}

impl WeightCtx {
    pub fn finite(n: usize, e: i64) -> Self {
        WeightCtx {
            kind: CoxKind::Finite,
            n,
            e,
        }
    }

    pub fn affine(n: usize, e: i64) -> Self {
        WeightCtx {
            kind: CoxKind::Affine,
            n,
            e,
        }
    }

    pub fn coxeter(&self) -> CoxeterSystem {
        match self.kind {
            CoxKind::Finite => CoxeterSystem::finite(self.n),
            CoxKind::Affine => CoxeterSystem::affine(self.n),
        }
    }

    pub fn is_member(&self, w: &Weight) -> bool {
        let l = &w.0;
        if l.len() != self.n {
            return false;
        }
        let sorted = l.windows(2).all(|p| p[0] <= p[1]);
        match self.kind {
            CoxKind::Finite => sorted && l[0] >= 1 && l[self.n - 1] <= self.e,
            CoxKind::Affine => sorted && l[self.n - 1] <= l[0] + self.e,
        }
    }

    /// All members (finite kind), i.e. Lambda_{n,e}.
    pub fn enumerate_finite(&self) -> Vec<Weight> {
        assert_eq!(self.kind, CoxKind::Finite);
        let mut out = Vec::new();
        let mut cur = vec![1i64; self.n];
        loop {
            out.push(Weight(cur.clone()));
            // next weakly increasing vector with entries in 1..=e
            let mut i = self.n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.e {
                    cur[i] += 1;
                    for j in i + 1..self.n {
                        cur[j] = cur[i];
                    }
                    break;
                }
            }
        }
    }

    /// Affine window members with l_1 in the given range.
    pub fn enumerate_affine_window(&self, lo: i64, hi: i64) -> Vec<Weight> {
        assert_eq!(self.kind, CoxKind::Affine);
        let mut out = Vec::new();
        fn rec(ctx: &WeightCtx, acc: &mut Vec<i64>, lo: i64, hi: i64, out: &mut Vec<Weight>) {
            if acc.len() == ctx.n {
                out.push(Weight(acc.clone()));
                return;
            }
            let min = *acc.last().unwrap();
            let max = acc[0] + ctx.e;
            for v in min..=max {
                acc.push(v);
                rec(ctx, acc, lo, hi, out);
                acc.pop();
            }
            let _ = (lo, hi);
        }
        for first in lo..=hi {
            let mut acc = vec![first];
            rec(self, &mut acc, lo, hi, &mut out);
        }
        out
    }

    /// Littelmann operator F_j: increment one entry congruent to j. Finite
    /// colors are 1..=e-1 (increment a j to j+1); affine colors live mod e.
    /// Returns None for the formal zero.
    pub fn littelmann_f(&self, w: &Weight, j: i64) -> Option<Weight> {
        debug_assert!(self.is_member(w));
        match self.kind {
            CoxKind::Finite => {
                assert!((1..self.e).contains(&j), "finite color out of range");
                // replace the last entry equal to j by j+1
                let pos = w.0.iter().rposition(|&x| x == j)?;
                let mut v = w.0.clone();
                v[pos] += 1;
                debug_assert!(self.is_member(&Weight(v.clone())));
                Some(Weight(v))
            }
            CoxKind::Affine => {
                let jm = j.rem_euclid(self.e);
                let mut found = None;
                for i in 0..self.n {
                    if (w.0[i] - jm).rem_euclid(self.e) != 0 {
                        continue;
                    }
                    let mut v = w.0.clone();
                    v[i] += 1;
                    if self.is_member(&Weight(v.clone())) {
                        assert!(found.is_none(), "affine F_j increment not unique");
                        found = Some(Weight(v));
                    }
                }
                found
            }
        }
    }

    pub fn littelmann_e(&self, w: &Weight, j: i64) -> Option<Weight> {
        debug_assert!(self.is_member(w));
        match self.kind {
            CoxKind::Finite => {
                assert!((1..self.e).contains(&j));
                let pos = w.0.iter().position(|&x| x == j + 1)?;
                let mut v = w.0.clone();
                v[pos] -= 1;
                debug_assert!(self.is_member(&Weight(v.clone())));
                Some(Weight(v))
            }
            CoxKind::Affine => {
                let jm = (j + 1).rem_euclid(self.e);
                let mut found = None;
                for i in 0..self.n {
                    if (w.0[i] - jm).rem_euclid(self.e) != 0 {
                        continue;
                    }
                    let mut v = w.0.clone();
                    v[i] -= 1;
                    if self.is_member(&Weight(v.clone())) {
                        assert!(found.is_none(), "affine E_j decrement not unique");
                        found = Some(Weight(v));
                    }
                }
                found
            }
        }
    }

    pub fn littelmann_f_pow(&self, w: &Weight, j: i64, k: usize) -> Option<Weight> {
        let mut cur = w.clone();
        for _ in 0..k {
            cur = self.littelmann_f(&cur, j)?;
        }
        Some(cur)
    }

    /// The index incremented by F_j, when F_j is defined.
    pub fn increment_index(&self, w: &Weight, j: i64) -> Option<usize> {
        let next = self.littelmann_f(w, j)?;
        Some(
            w.0.iter()
                .zip(&next.0)
                .position(|(a, b)| a != b)
                .expect("increment changed nothing"),
        )
    }

    /// Stabilizer subset I(lambda) in the Coxeter system.
    pub fn stabilizer(&self, w: &Weight) -> ParabolicSubset {
        let mut gens: Vec<Gen> = Vec::new();
        for i in 1..self.n {
            if w.0[i - 1] == w.0[i] {
                gens.push(i as Gen);
            }
        }
        if self.kind == CoxKind::Affine && w.0[self.n - 1] == w.0[0] + self.e {
            gens.push(0);
        }
        ParabolicSubset::new(gens)
    }

    pub fn stabilizer_pair(&self, a: &Weight, b: &Weight) -> ParabolicSubset {
        let ia = self.stabilizer(a);
        let ib = self.stabilizer(b);
        ParabolicSubset::new(ia.members.intersection(&ib.members).copied())
    }

    /// r_j counts for the finite kind: how many entries equal j.
    pub fn r_counts(&self, w: &Weight) -> Vec<usize> {
        assert_eq!(self.kind, CoxKind::Finite);
        let mut r = vec![0usize; self.e as usize];
        for &x in &w.0 {
            r[(x - 1) as usize] += 1;
        }
        r
    }

    pub fn from_r_counts(&self, r: &[usize]) -> Weight {
        assert_eq!(r.len(), self.e as usize);
        let mut v = Vec::new();
        for (j, &c) in r.iter().enumerate() {
            v.extend(std::iter::repeat(j as i64 + 1).take(c));
        }
        Weight(v)
    }

    /// The k-sequence (k_0 <= k_1 <= ... <= k_e) of cumulative counts.
    pub fn k_sequence(&self, w: &Weight) -> Vec<usize> {
        let r = self.r_counts(w);
        let mut k = vec![0usize];
        for c in r {
            k.push(k.last().unwrap() + c);
        }
        k
    }

    pub fn from_k_sequence(&self, k: &[usize]) -> Weight {
        let r: Vec<usize> = k.windows(2).map(|p| p[1] - p[0]).collect();
        self.from_r_counts(&r)
    }
}
