//! Multipartitions with multicharge: residues, Fock operators, crystal and
//! dual-crystal operators, the order structures, and the bridges to virtual
//! multipartitions and wedge spaces.

pub mod companion;
pub mod crystal;
pub mod virtualmp;
pub mod wedge;

pub use companion::{check_c, check_ctilde, companions, marked_pairs, Witness};
pub use crystal::{CrystalOp, ReadingOrder, SigEntry, Signature};
pub use virtualmp::{classify, j_parabolic, to_virtual, xj_leq, Classified, VirtualMultipartition};
pub use wedge::{fock_to_wedge, WedgeOp, WedgeSum, WedgeVector};

use serde::{Deserialize, Serialize};
use std::fmt;

/// An l-tuple of partitions; parts strictly positive, weakly decreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Multipartition {
    pub components: Vec<Vec<u32>>,
}

/// Lifted integer charges s_0..s_{l-1} for level l at quantum parameter e.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Multicharge {
    pub e: i64,
    pub charges: Vec<i64>,
}

/// A box address: component, row, column (rows and columns 1-based).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Box {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Multicharge {
    pub fn new(e: i64, charges: Vec<i64>) -> Self {
        assert!(e >= 2);
        Multicharge { e, charges }
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    /// Shifted content c(b) = row - col + s_i (lifted).
    pub fn content(&self, b: &Box) -> i64 {
        b.row as i64 - b.col as i64 + self.charges[b.comp]
    }

    /// Shifted residue mod e.
    pub fn residue(&self, b: &Box) -> i64 {
        self.content(b).rem_euclid(self.e)
    }
}

impl Multipartition {
    pub fn empty(level: usize) -> Self {
        Multipartition {
            components: vec![Vec::new(); level],
        }
    }

    pub fn new(components: Vec<Vec<u32>>) -> Self {
        for c in &components {
            assert!(c.windows(2).all(|w| w[0] >= w[1]), "rows must weakly decrease");
            assert!(c.iter().all(|&p| p > 0), "no trailing zeros");
        }
        Multipartition { components }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.iter().map(|&p| p as usize).sum::<usize>())
            .sum()
    }

    pub fn boxes(&self) -> Vec<Box> {
        let mut out = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            for (r, &len) in c.iter().enumerate() {
                for col in 1..=len as usize {
                    out.push(Box {
                        comp: i,
                        row: r + 1,
                        col,
                    });
                }
            }
        }
        out
    }

    pub fn addable_boxes(&self, comp: usize) -> Vec<Box> {
        let c = &self.components[comp];
        let mut out = Vec::new();
        for r in 1..=c.len() + 1 {
            let here = c.get(r - 1).copied().unwrap_or(0);
            let above = if r == 1 { u32::MAX } else { c[r - 2] };
            if here < above {
                out.push(Box {
                    comp,
                    row: r,
                    col: here as usize + 1,
                });
            }
        }
        out
    }

    pub fn removable_boxes(&self, comp: usize) -> Vec<Box> {
        let c = &self.components[comp];
        let mut out = Vec::new();
        for r in 1..=c.len() {
            let here = c[r - 1];
            let below = c.get(r).copied().unwrap_or(0);
            if here > below {
                out.push(Box {
                    comp,
                    row: r,
                    col: here as usize,
                });
            }
        }
        out
    }

    pub fn add_box(&self, b: &Box) -> Multipartition {
        let mut m = self.clone();
        let c = &mut m.components[b.comp];
        if b.row == c.len() + 1 {
            assert_eq!(b.col, 1);
            c.push(1);
        } else {
            assert_eq!(c[b.row - 1] as usize + 1, b.col);
            c[b.row - 1] += 1;
        }
        debug_assert!(c.windows(2).all(|w| w[0] >= w[1]));
        m
    }

    pub fn remove_box(&self, b: &Box) -> Multipartition {
        let mut m = self.clone();
        let c = &mut m.components[b.comp];
        assert_eq!(c[b.row - 1] as usize, b.col);
        if c[b.row - 1] == 1 {
            assert_eq!(b.row, c.len());
            c.pop();
        } else {
            c[b.row - 1] -= 1;
        }
        debug_assert!(c.windows(2).all(|w| w[0] >= w[1]));
        m
    }

    /// Fock operator f_j: all results of adding one j-box.
    pub fn fock_f(&self, charge: &Multicharge, j: i64) -> Vec<Multipartition> {
        let mut out = Vec::new();
        for comp in 0..self.level() {
            for b in self.addable_boxes(comp) {
                if charge.residue(&b) == j.rem_euclid(charge.e) {
                    out.push(self.add_box(&b));
                }
            }
        }
        out
    }

    /// Fock operator e_j: all results of removing one j-box.
    pub fn fock_e(&self, charge: &Multicharge, j: i64) -> Vec<Multipartition> {
        let mut out = Vec::new();
        for comp in 0..self.level() {
            for b in self.removable_boxes(comp) {
                if charge.residue(&b) == j.rem_euclid(charge.e) {
                    out.push(self.remove_box(&b));
                }
            }
        }
        out
    }

    pub fn addable_count(&self, charge: &Multicharge, j: i64) -> usize {
        (0..self.level())
            .flat_map(|c| self.addable_boxes(c))
            .filter(|b| charge.residue(b) == j.rem_euclid(charge.e))
            .count()
    }

    pub fn removable_count(&self, charge: &Multicharge, j: i64) -> usize {
        (0..self.level())
            .flat_map(|c| self.removable_boxes(c))
            .filter(|b| charge.residue(b) == j.rem_euclid(charge.e))
            .count()
    }

    /// The involution lambda* = (transpose of the last component, ..., transpose
    /// of the first).
    pub fn star(&self) -> Multipartition {
        let components = self
            .components
            .iter()
            .rev()
            .map(|c| transpose(c))
            .collect();
        Multipartition { components }
    }

    /// Parse "2,2|3,1,1,1" (empty component written as "-" or "").
    pub fn parse(s: &str) -> Result<Multipartition, String> {
        let mut components = Vec::new();
        for part in s.split('|') {
            let part = part.trim();
            if part.is_empty() || part == "-" {
                components.push(Vec::new());
                continue;
            }
            let rows: Result<Vec<u32>, _> = part.split(',').map(|t| t.trim().parse::<u32>()).collect();
            let rows = rows.map_err(|e| format!("bad partition '{}': {}", part, e))?;
            if !rows.windows(2).all(|w| w[0] >= w[1]) || rows.iter().any(|&p| p == 0) {
                return Err(format!("'{}' is not a partition", part));
            }
            components.push(rows);
        }
        Ok(Multipartition { components })
    }
}

pub fn transpose(p: &[u32]) -> Vec<u32> {
    if p.is_empty() {
        return Vec::new();
    }
    let cols = p[0] as usize;
    (1..=cols)
        .map(|c| p.iter().filter(|&&r| r as usize >= c).count() as u32)
        .collect()
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                if c.is_empty() {
                    "-".to_string()
                } else {
                    c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "({})", parts.join("|"))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All l-multipartitions of n.
pub fn multipartitions(level: usize, n: usize) -> Vec<Multipartition> {
    fn partitions(n: usize) -> Vec<Vec<u32>> {
        fn rec(n: usize, max: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if n == 0 {
                out.push(acc.clone());
                return;
            }
            for p in (1..=n.min(max)).rev() {
                acc.push(p as u32);
                rec(n - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
    fn rec(level: usize, n: usize, acc: &mut Vec<Vec<u32>>, out: &mut Vec<Multipartition>) {
        if level == 0 {
            if n == 0 {
                out.push(Multipartition {
                    components: acc.clone(),
                });
            }
            return;
        }
        for k in 0..=n {
            for p in partitions(k) {
                acc.push(p);
                rec(level - 1, n - k, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(level, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The two comparison orders on multipartitions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MpOrder {
    /// boxwise matching through the content order on boxes
    Boxwise,
    /// the cumulative (dominance-style) Schur order
    Cumulative,
}

/// lambda <= mu in the requested order.
pub fn order_leq(a: &Multipartition, b: &Multipartition, charge: &Multicharge, order: MpOrder) -> bool {
    match order {
        MpOrder::Cumulative => {
            let level = a.level().max(b.level());
            let rows = |m: &Multipartition, i: usize| -> Vec<u32> {
                m.components.get(i).cloned().unwrap_or_default()
            };
            for mcomp in 0..level {
                let head_a: usize = (0..mcomp).map(|i| rows(a, i).iter().map(|&x| x as usize).sum::<usize>()).sum();
                let head_b: usize = (0..mcomp).map(|i| rows(b, i).iter().map(|&x| x as usize).sum::<usize>()).sum();
                let ra = rows(a, mcomp);
                let rb = rows(b, mcomp);
                for k in 0..=ra.len().max(rb.len()) {
                    let pa: usize = ra.iter().take(k).map(|&x| x as usize).sum();
                    let pb: usize = rb.iter().take(k).map(|&x| x as usize).sum();
                    if head_a + pa > head_b + pb {
                        return false;
                    }
                }
            }
            true
        }
        MpOrder::Boxwise => {
            if a.size() != b.size() {
                return false;
            }
            let boxes_a = a.boxes();
            let boxes_b = b.boxes();
            // b_i <= b'_j iff residues agree mod e and (c, comp) lexicographically smaller-or-equal
            let leq = |x: &Box, y: &Box| -> bool {
                let (cx, cy) = (charge.content(x), charge.content(y));
                if (cx - cy).rem_euclid(charge.e) != 0 {
                    return false;
                }
                cx < cy || (cx == cy && x.comp <= y.comp)
            };
            bipartite_perfect_matching(&boxes_a, &boxes_b, leq)
        }
    }
}

fn bipartite_perfect_matching<F: Fn(&Box, &Box) -> bool>(left: &[Box], right: &[Box], ok: F) -> bool {
    let n = left.len();
    if n != right.len() {
        return false;
    }
    let mut match_r: Vec<Option<usize>> = vec![None; n];
    fn augment<F: Fn(&Box, &Box) -> bool>(
        i: usize,
        left: &[Box],
        right: &[Box],
        ok: &F,
        seen: &mut [bool],
        match_r: &mut [Option<usize>],
    ) -> bool {
        for j in 0..right.len() {
            if !seen[j] && ok(&left[i], &right[j]) {
                seen[j] = true;
                if match_r[j].is_none()
                    || augment(match_r[j].unwrap(), left, right, ok, seen, match_r)
                {
                    match_r[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, left, right, &ok, &mut seen, &mut match_r) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_examples() {
        let ch = Multicharge::new(2, vec![0]);
        assert_eq!(
            ch.residue(&Box {
                comp: 0,
                row: 1,
                col: 1
            }),
            0
        );
        assert_eq!(
            ch.residue(&Box {
                comp: 0,
                row: 1,
                col: 2
            }),
            1
        );
    }

    #[test]
    fn paper_example_residue_one_boxes() {
        // e = 2, charges (11, 0), lambda = ((2,2),(3,1,1,1))
        let ch = Multicharge::new(2, vec![11, 0]);
        let l = Multipartition::new(vec![vec![2, 2], vec![3, 1, 1, 1]]);
        let mut res1 = Vec::new();
        for comp in 0..2 {
            for b in l.addable_boxes(comp) {
                if ch.residue(&b) == 1 {
                    res1.push((b, '+'));
                }
            }
            for b in l.removable_boxes(comp) {
                if ch.residue(&b) == 1 {
                    res1.push((b, '-'));
                }
            }
        }
        assert_eq!(res1.len(), 5);
    }

    #[test]
    fn fock_operators_and_commutator() {
        let ch = Multicharge::new(2, vec![0]);
        let empty = Multipartition::empty(1);
        assert_eq!(
            empty.fock_f(&ch, 0),
            vec![Multipartition::new(vec![vec![1]])]
        );
        assert!(empty.fock_e(&ch, 0).is_empty());
        // [e_i, f_i] acts by (addable - removable) counts
        for e in [2i64, 3] {
            for level in 1..=3usize {
                let ch = Multicharge::new(e, (0..level as i64).map(|k| 3 * k + 1).collect());
                for n in 0..=3usize {
                    for l in multipartitions(level, n) {
                        for i in 0..e {
                            let ef: usize = l
                                .fock_f(&ch, i)
                                .iter()
                                .map(|m| m.fock_e(&ch, i).iter().filter(|x| *x == &l).count())
                                .sum();
                            let fe: usize = l
                                .fock_e(&ch, i)
                                .iter()
                                .map(|m| m.fock_f(&ch, i).iter().filter(|x| *x == &l).count())
                                .sum();
                            let diff = ef as i64 - fe as i64;
                            let expected =
                                l.addable_count(&ch, i) as i64 - l.removable_count(&ch, i) as i64;
                            assert_eq!(diff, expected, "lambda {:?} i {}", l, i);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn star_involution() {
        let l = Multipartition::new(vec![vec![2], vec![1, 1]]);
        let s = l.star();
        assert_eq!(s, Multipartition::new(vec![vec![2], vec![1, 1]]));
        for n in 0..=4 {
            for l in multipartitions(2, n) {
                assert_eq!(l.star().star(), l);
            }
        }
        assert_eq!(
            Multipartition::empty(3).star(),
            Multipartition::empty(3)
        );
    }

    #[test]
    fn parse_round_trip() {
        let l = Multipartition::parse("2,2|3,1,1,1").unwrap();
        assert_eq!(l, Multipartition::new(vec![vec![2, 2], vec![3, 1, 1, 1]]));
        assert!(Multipartition::parse("1,2").is_err());
    }

    #[test]
    fn orders() {
        let ch = Multicharge::new(2, vec![0]);
        for n in 0..=4 {
            for l in multipartitions(1, n) {
                assert!(order_leq(&l, &l, &ch, MpOrder::Boxwise));
                assert!(order_leq(&l, &l, &ch, MpOrder::Cumulative));
            }
        }
        // boxwise comparability requires equal residue multisets per class
        let a = Multipartition::new(vec![vec![2]]);
        let b = Multipartition::new(vec![vec![1, 1]]);
        // contents: a: 0,-1 ; b: 0,1 -> residues mod 2: {0,1} both; matching: -1 <= 1 (same class), 0 <= 0
        assert!(order_leq(&a, &b, &ch, MpOrder::Boxwise));
        assert!(!order_leq(&b, &a, &ch, MpOrder::Boxwise));
    }

    #[test]
    fn cumulative_table_p2_2() {
        // the cumulative order on 2-multipartitions of 2
        let all = multipartitions(2, 2);
        let ch = Multicharge::new(2, vec![0, 0]);
        let leq = |x: &Multipartition, y: &Multipartition| order_leq(x, y, &ch, MpOrder::Cumulative);
        let top = Multipartition::new(vec![vec![2], vec![]]);
        let bot = Multipartition::new(vec![vec![], vec![1, 1]]);
        for m in &all {
            assert!(leq(m, &top), "{:?}", m);
            assert!(leq(&bot, m), "{:?}", m);
        }
    }
}
