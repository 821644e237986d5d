//! Companion multipartitions and the faithfulness conditions.

use super::crystal::{
    c_word, crystal, is_cosingular, is_singular, signature, sigma, CrystalOp, ReadingOrder,
};
use super::{multipartitions, order_leq, MpOrder, Multicharge, Multipartition};
use crate::coxeter::CoxeterSystem;
use std::collections::BTreeSet;

/// Marked pairs of the i-signature: the removable/addable box pairs erased
/// together during cancellation.
pub fn marked_pairs(
    l: &Multipartition,
    charge: &Multicharge,
    i: i64,
    order: ReadingOrder,
) -> Vec<(super::Box, super::Box)> {
    let sig = signature(l, charge, i, order, false);
    sig.pairs
        .iter()
        .map(|&(mi, pi)| (*sig.raw[mi].bx(), *sig.raw[pi].bx()))
        .collect()
}

/// lambda[p]: move the box of the minus in the marked pair to the plus.
pub fn lambda_bracket(
    l: &Multipartition,
    pair: &(super::Box, super::Box),
) -> Multipartition {
    l.remove_box(&pair.0).add_box(&pair.1)
}

/// Companions of w lambda along a reduced expression, built inductively. The
/// expression is applied first-letter-first; lambda must be singular and the
/// word reduced in the affine symmetric group on e strands.
pub fn companions(
    l: &Multipartition,
    charge: &Multicharge,
    word: &[i64],
    order: ReadingOrder,
) -> Result<(Multipartition, BTreeSet<Multipartition>), String> {
    if !is_singular(l, charge, order) {
        return Err("companions need a singular start".into());
    }
    let sys = CoxeterSystem::affine(charge.e as usize);
    let gens: Vec<u8> = word.iter().map(|&i| i.rem_euclid(charge.e) as u8).collect();
    if sys.from_word(&gens).len() != gens.len() {
        return Err("expression is not reduced".into());
    }
    // base case: singular mu < lambda outside every i-family, plus the bracket moves
    let n = l.size();
    let mut comps: BTreeSet<Multipartition> = BTreeSet::new();
    for mu in multipartitions(l.level(), n) {
        if mu == *l || !is_singular(&mu, charge, order) {
            continue;
        }
        if !order_leq(&mu, l, charge, MpOrder::Boxwise) {
            continue;
        }
        if (0..charge.e).any(|i| in_same_family(&mu, l, charge, i)) {
            continue;
        }
        comps.insert(mu);
    }
    for i in 0..charge.e {
        for p in marked_pairs(l, charge, i, order) {
            comps.insert(lambda_bracket(l, &p));
        }
    }
    let mut cur = l.clone();
    for &i in word {
        let next = sigma(&cur, charge, i, order, false)?;
        let mut next_comps: BTreeSet<Multipartition> = BTreeSet::new();
        for xi in &comps {
            // push a companion through sigma_i when it is i-highest and not in
            // the i-family of the current element
            if crystal(CrystalOp::E, xi, charge, i, order).is_none()
                && !in_same_family(xi, &cur, charge, i)
            {
                if let Ok(pushed) = sigma(xi, charge, i, order, false) {
                    next_comps.insert(pushed);
                }
            }
        }
        for p in marked_pairs(&next, charge, i, order) {
            next_comps.insert(lambda_bracket(&next, &p));
        }
        comps = next_comps;
        cur = next;
    }
    Ok((cur, comps))
}

/// Same i-family: the multipartitions differ only in boxes of residue i.
pub fn in_same_family(a: &Multipartition, b: &Multipartition, charge: &Multicharge, i: i64) -> bool {
    if a.level() != b.level() {
        return false;
    }
    let sa: BTreeSet<super::Box> = a.boxes().into_iter().collect();
    let sb: BTreeSet<super::Box> = b.boxes().into_iter().collect();
    sa.symmetric_difference(&sb)
        .all(|bx| charge.residue(bx) == i.rem_euclid(charge.e))
}

/// A witness for the faithfulness conditions.
#[derive(Clone, Debug)]
pub struct Witness {
    pub a: i64,
    pub m: usize,
    pub word: Vec<i64>,
}

/// Condition C: search the C_{a,m} family for w with w lambda not <= w* mu.
pub fn check_c(
    l: &Multipartition,
    mu: &Multipartition,
    charge: &Multicharge,
    order: ReadingOrder,
    max_m: usize,
) -> Option<Witness> {
    assert!(is_singular(l, charge, order), "lambda must be singular");
    assert!(is_cosingular(mu, charge, order), "mu must be cosingular");
    assert_eq!(l.size(), mu.size());
    for m in 0..=max_m {
        for a in 0..charge.e {
            let word = c_word(a, m, charge.e);
            let Ok(wl) = super::crystal::apply_word(l, charge, &word, order, false) else {
                continue;
            };
            let Ok(wmu) = super::crystal::apply_word(mu, charge, &word, order, true) else {
                continue;
            };
            if !order_leq(&wl, &wmu, charge, MpOrder::Boxwise) {
                return Some(Witness { a, m, word });
            }
        }
    }
    None
}

/// Condition C-tilde: w such that w lambda and every companion xi of w lambda
/// satisfy xi not <= w* mu.
pub fn check_ctilde(
    l: &Multipartition,
    mu: &Multipartition,
    charge: &Multicharge,
    order: ReadingOrder,
    max_m: usize,
) -> Option<Witness> {
    assert!(is_singular(l, charge, order), "lambda must be singular");
    assert!(is_cosingular(mu, charge, order), "mu must be cosingular");
    assert_eq!(l.size(), mu.size());
    for m in 0..=max_m {
        for a in 0..charge.e {
            let word = c_word(a, m, charge.e);
            let Ok((wl, comps)) = companions(l, charge, &word, order) else {
                continue;
            };
            let Ok(wmu) = super::crystal::apply_word(mu, charge, &word, order, true) else {
                continue;
            };
            let bad = order_leq(&wl, &wmu, charge, MpOrder::Boxwise)
                || comps
                    .iter()
                    .any(|xi| order_leq(xi, &wmu, charge, MpOrder::Boxwise));
            if !bad {
                return Some(Witness { a, m, word });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marked_pairs_examples() {
        let ch = Multicharge::new(2, vec![11, 0]);
        let l = Multipartition::new(vec![vec![2, 2], vec![3, 1, 1, 1]]);
        // residue-1 signature is +-++-: one matched pair (the b2-b3 cancellation)
        let pairs = marked_pairs(&l, &ch, 1, ReadingOrder::Schur);
        assert_eq!(pairs.len(), 1);
        let moved = lambda_bracket(&l, &pairs[0]);
        assert_eq!(moved.size(), l.size());
        // empty: none
        assert!(marked_pairs(&Multipartition::empty(2), &ch, 1, ReadingOrder::Schur).is_empty());
    }

    #[test]
    fn pairing_lemma_for_c0n() {
        // marked i-pairs of C_{0,n} lambda (Schur reading): the removable i-box
        // of lambda in a row with number > n pairs with the addable box in the
        // next row. Exact instance at n = 1; for n past the last row of lambda
        // the pair set is empty.
        let ch = Multicharge::new(3, vec![0]);
        let o = ReadingOrder::Schur;
        let l = Multipartition::new(vec![vec![3, 3]]); // singular at e = 3
        assert!(is_singular(&l, &ch, o));
        {
            let word = c_word(0, 1, 3);
            let wl = super::super::crystal::apply_word(&l, &ch, &word, o, false).unwrap();
            let mut pairs = Vec::new();
            for i in 0..3 {
                pairs.extend(marked_pairs(&wl, &ch, i, o));
            }
            assert_eq!(pairs.len(), 1);
            let (minus, plus) = pairs[0];
            assert!(minus.row > 1);
            assert_eq!(plus.row, minus.row + 1);
        }
        {
            let word = c_word(0, 3, 3);
            let wl = super::super::crystal::apply_word(&l, &ch, &word, o, false).unwrap();
            for i in 0..3 {
                assert!(marked_pairs(&wl, &ch, i, o).is_empty());
            }
        }
    }

    #[test]
    fn companions_stable_and_sane() {
        let ch = Multicharge::new(3, vec![0]);
        let o = ReadingOrder::Schur;
        let l = Multipartition::new(vec![vec![3]]);
        assert!(is_singular(&l, &ch, o));
        let (_wl, c1) = companions(&l, &ch, &[], o).unwrap();
        let (_wl2, c2) = companions(&l, &ch, &[], o).unwrap();
        assert_eq!(c1, c2);
        // companions never contain lambda itself
        assert!(!c1.contains(&l));
        // empty lambda: empty companion set
        let (_we, ce) = companions(&Multipartition::empty(1), &ch, &[], o).unwrap();
        assert!(ce.is_empty());
        // non-reduced expression rejected
        assert!(companions(&l, &ch, &[0, 0], o).is_err());
    }

    #[test]
    fn ctilde_small_witnesses() {
        // l = 1, e = 3: witnesses exist for all pairs 0 < n <= 4 (subset of
        // criterion 10, kept small here)
        let ch = Multicharge::new(3, vec![0]);
        let o = ReadingOrder::NegativeLevel;
        for n in 1..=4usize {
            for l in multipartitions(1, n) {
                if !is_singular(&l, &ch, o) {
                    continue;
                }
                for mu in multipartitions(1, n) {
                    if !is_cosingular(&mu, &ch, o) {
                        continue;
                    }
                    let w = check_ctilde(&l, &mu, &ch, o, 24);
                    assert!(w.is_some(), "no witness for {:?} vs {:?}", l, mu);
                }
            }
        }
    }
}
