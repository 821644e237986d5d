//! Crystal and dual-crystal operators via signature cancellation.

use super::{Box, Multicharge, Multipartition};

/// Reading order for signatures. The two orders are genuinely inequivalent and
/// are never defaulted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReadingOrder {
    /// component-major, boxes right-to-left inside each diagram
    Schur,
    /// decreasing shifted content, ties by larger component first
    NegativeLevel,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SigEntry {
    Plus(Box),
    Minus(Box),
}

impl SigEntry {
    pub fn is_plus(&self) -> bool {
        matches!(self, SigEntry::Plus(_))
    }

    pub fn bx(&self) -> &Box {
        match self {
            SigEntry::Plus(b) | SigEntry::Minus(b) => b,
        }
    }
}

/// Raw and reduced i-signature of a multipartition, with the box assignment
/// and the matched (canceled) pairs.
#[derive(Clone, Debug)]
pub struct Signature {
    pub raw: Vec<SigEntry>,
    /// indices into `raw` surviving the cancellation, in order
    pub survivors: Vec<usize>,
    /// matched (minus-index, plus-index) pairs that were erased together
    pub pairs: Vec<(usize, usize)>,
    pub dual: bool,
}

impl Signature {
    pub fn raw_string(&self) -> String {
        self.raw
            .iter()
            .map(|e| if e.is_plus() { '+' } else { '-' })
            .collect()
    }

    pub fn reduced_string(&self) -> String {
        self.survivors
            .iter()
            .map(|&i| if self.raw[i].is_plus() { '+' } else { '-' })
            .collect()
    }
}

/// All addable/removable i-boxes of lambda in the decreasing reading order.
pub fn raw_signature(
    l: &Multipartition,
    charge: &Multicharge,
    i: i64,
    order: ReadingOrder,
) -> Vec<SigEntry> {
    let i = i.rem_euclid(charge.e);
    let mut entries: Vec<SigEntry> = Vec::new();
    for comp in 0..l.level() {
        for b in l.addable_boxes(comp) {
            if charge.residue(&b) == i {
                entries.push(SigEntry::Plus(b));
            }
        }
        for b in l.removable_boxes(comp) {
            if charge.residue(&b) == i {
                entries.push(SigEntry::Minus(b));
            }
        }
    }
    match order {
        ReadingOrder::Schur => {
            entries.sort_by_key(|e| {
                let b = e.bx();
                (b.comp, std::cmp::Reverse(b.col))
            });
        }
        ReadingOrder::NegativeLevel => {
            entries.sort_by_key(|e| {
                let b = e.bx();
                (std::cmp::Reverse(charge.content(b)), std::cmp::Reverse(b.comp))
            });
        }
    }
    entries
}

/// Cancel matched pairs: the normal crystal erases adjacent "-+", the dual
/// crystal erases adjacent "+-". The matching is bracket-matching, hence
/// independent of cancellation order.
pub fn reduce_signature(raw: &[SigEntry], dual: bool) -> Signature {
    // normal: '-' opens, '+' closes; dual: '+' opens, '-' closes.
    let mut stack: Vec<usize> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut canceled = vec![false; raw.len()];
    for (i, e) in raw.iter().enumerate() {
        let opens = if dual { e.is_plus() } else { !e.is_plus() };
        if opens {
            stack.push(i);
        } else if let Some(j) = stack.pop() {
            canceled[i] = true;
            canceled[j] = true;
            if dual {
                pairs.push((i, j)); // (minus, plus)
            } else {
                pairs.push((j, i));
            }
        }
    }
    let survivors = (0..raw.len()).filter(|&i| !canceled[i]).collect();
    Signature {
        raw: raw.to_vec(),
        survivors,
        pairs,
        dual,
    }
}

pub fn signature(
    l: &Multipartition,
    charge: &Multicharge,
    i: i64,
    order: ReadingOrder,
    dual: bool,
) -> Signature {
    reduce_signature(&raw_signature(l, charge, i, order), dual)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrystalOp {
    E,
    F,
    EStar,
    FStar,
}

/// Apply a crystal operator; None is the formal zero.
pub fn crystal(
    op: CrystalOp,
    l: &Multipartition,
    charge: &Multicharge,
    i: i64,
    order: ReadingOrder,
) -> Option<Multipartition> {
    let dual = matches!(op, CrystalOp::EStar | CrystalOp::FStar);
    let sig = signature(l, charge, i, order, dual);
    match op {
        CrystalOp::E => {
            // leftmost surviving minus
            let idx = sig
                .survivors
                .iter()
                .find(|&&k| !sig.raw[k].is_plus())
                .copied()?;
            Some(l.remove_box(sig.raw[idx].bx()))
        }
        CrystalOp::F => {
            // rightmost surviving plus
            let idx = sig
                .survivors
                .iter()
                .rev()
                .find(|&&k| sig.raw[k].is_plus())
                .copied()?;
            Some(l.add_box(sig.raw[idx].bx()))
        }
        CrystalOp::EStar => {
            // rightmost surviving minus
            let idx = sig
                .survivors
                .iter()
                .rev()
                .find(|&&k| !sig.raw[k].is_plus())
                .copied()?;
            Some(l.remove_box(sig.raw[idx].bx()))
        }
        CrystalOp::FStar => {
            // leftmost surviving plus
            let idx = sig
                .survivors
                .iter()
                .find(|&&k| sig.raw[k].is_plus())
                .copied()?;
            Some(l.add_box(sig.raw[idx].bx()))
        }
    }
}

pub fn is_singular(l: &Multipartition, charge: &Multicharge, order: ReadingOrder) -> bool {
    (0..charge.e).all(|i| crystal(CrystalOp::E, l, charge, i, order).is_none())
}

pub fn is_cosingular(l: &Multipartition, charge: &Multicharge, order: ReadingOrder) -> bool {
    (0..charge.e).all(|i| crystal(CrystalOp::EStar, l, charge, i, order).is_none())
}

/// sigma_i lambda = f_i^max lambda, defined when e_i lambda = 0.
pub fn sigma(
    l: &Multipartition,
    charge: &Multicharge,
    i: i64,
    order: ReadingOrder,
    dual: bool,
) -> Result<Multipartition, String> {
    let (e_op, f_op) = if dual {
        (CrystalOp::EStar, CrystalOp::FStar)
    } else {
        (CrystalOp::E, CrystalOp::F)
    };
    if crystal(e_op, l, charge, i, order).is_some() {
        return Err(format!("sigma_{} needs e_{} lambda = 0", i, i));
    }
    let mut cur = l.clone();
    while let Some(next) = crystal(f_op, &cur, charge, i, order) {
        cur = next;
    }
    Ok(cur)
}

/// Apply a word of sigma operators, first letter first.
pub fn apply_word(
    l: &Multipartition,
    charge: &Multicharge,
    word: &[i64],
    order: ReadingOrder,
    dual: bool,
) -> Result<Multipartition, String> {
    let mut cur = l.clone();
    for &i in word {
        cur = sigma(&cur, charge, i, order, dual)?;
    }
    Ok(cur)
}

/// The word of C_{a,m} = sigma_{a+1-m} ... sigma_{a-1} sigma_a, as a list
/// applied first-to-last: [a, a-1, ..., a+1-m] mod e.
pub fn c_word(a: i64, m: usize, e: i64) -> Vec<i64> {
    (0..m as i64).map(|k| (a - k).rem_euclid(e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_setup() -> (Multipartition, Multicharge) {
        (
            Multipartition::new(vec![vec![2, 2], vec![3, 1, 1, 1]]),
            Multicharge::new(2, vec![11, 0]),
        )
    }

    #[test]
    fn paper_signatures() {
        let (l, ch) = paper_setup();
        let s1 = signature(&l, &ch, 1, ReadingOrder::Schur, false);
        assert_eq!(s1.raw_string(), "+-++-");
        assert_eq!(s1.reduced_string(), "++-");
        let s1d = signature(&l, &ch, 1, ReadingOrder::Schur, true);
        assert_eq!(s1d.reduced_string(), "+");
        let s0 = signature(&l, &ch, 0, ReadingOrder::Schur, false);
        assert_eq!(s0.raw_string(), "-++");
        assert_eq!(s0.reduced_string(), "+");
        let s0d = signature(&l, &ch, 0, ReadingOrder::Schur, true);
        assert_eq!(s0d.reduced_string(), "-++");
        // empty multipartition: no removable entries, so every e-operator dies
        let empty = Multipartition::empty(2);
        let se = signature(&empty, &ch, 1, ReadingOrder::Schur, false);
        assert!(se.raw.iter().all(|x| x.is_plus()));
        assert!(crystal(CrystalOp::E, &empty, &ch, 1, ReadingOrder::Schur).is_none());
    }

    #[test]
    fn paper_crystal_values() {
        let (l, ch) = paper_setup();
        let o = ReadingOrder::Schur;
        let mp = |s: &str| Multipartition::parse(s).unwrap();
        assert_eq!(crystal(CrystalOp::F, &l, &ch, 1, o), Some(mp("2,2|4,1,1,1")));
        assert_eq!(crystal(CrystalOp::E, &l, &ch, 1, o), Some(mp("2,2|3,1,1")));
        assert_eq!(crystal(CrystalOp::EStar, &l, &ch, 1, o), None);
        assert_eq!(
            crystal(CrystalOp::FStar, &l, &ch, 1, o),
            Some(mp("2,2,1|3,1,1,1"))
        );
        assert_eq!(crystal(CrystalOp::E, &l, &ch, 0, o), None);
        assert_eq!(crystal(CrystalOp::F, &l, &ch, 0, o), Some(mp("2,2|3,1,1,1,1")));
        assert_eq!(
            crystal(CrystalOp::EStar, &l, &ch, 0, o),
            Some(mp("2,2|2,1,1,1"))
        );
        assert_eq!(
            crystal(CrystalOp::FStar, &l, &ch, 0, o),
            Some(mp("2,2|3,2,1,1"))
        );
    }

    #[test]
    fn ef_inverse_property() {
        for e in [2i64, 3, 4] {
            for level in 1..=2usize {
                let ch = Multicharge::new(e, (0..level as i64).map(|k| 5 * k).collect());
                for n in 0..=5usize {
                    for l in super::super::multipartitions(level, n) {
                        for i in 0..e {
                            for o in [ReadingOrder::Schur, ReadingOrder::NegativeLevel] {
                                if let Some(f) = crystal(CrystalOp::F, &l, &ch, i, o) {
                                    assert_eq!(crystal(CrystalOp::E, &f, &ch, i, o), Some(l.clone()));
                                }
                                if let Some(f) = crystal(CrystalOp::FStar, &l, &ch, i, o) {
                                    assert_eq!(
                                        crystal(CrystalOp::EStar, &f, &ch, i, o),
                                        Some(l.clone())
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_signature_shape_and_confluence() {
        // reduced signatures are +...+-...- and the matching is canonical:
        // brute-force all cancellation orders on short signatures
        use SigEntry::*;
        let dummy = Box {
            comp: 0,
            row: 1,
            col: 1,
        };
        let from_bits = |bits: &[bool]| -> Vec<SigEntry> {
            bits.iter()
                .map(|&b| if b { Plus(dummy) } else { Minus(dummy) })
                .collect()
        };
        for len in 0..=8usize {
            for mask in 0..(1u32 << len) {
                let bits: Vec<bool> = (0..len).map(|k| mask & (1 << k) != 0).collect();
                let raw = from_bits(&bits);
                let sig = reduce_signature(&raw, false);
                let red = sig.reduced_string();
                // shape check
                let firstminus = red.find('-').unwrap_or(red.len());
                assert!(red[firstminus..].chars().all(|c| c == '-'));
                // confluence: survivors from any greedy cancellation order agree
                let mut alive: Vec<usize> = (0..len).collect();
                let mut rng = 1234567u64;
                for _ in 0..3 {
                    let mut alive2: Vec<usize> = (0..len).collect();
                    loop {
                        let cands: Vec<usize> = (0..alive2.len().saturating_sub(1))
                            .filter(|&k| !bits[alive2[k]] && bits[alive2[k + 1]])
                            .collect();
                        if cands.is_empty() {
                            break;
                        }
                        rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1);
                        let pick = cands[(rng >> 32) as usize % cands.len()];
                        alive2.drain(pick..=pick + 1);
                    }
                    alive = alive2;
                }
                assert_eq!(alive, sig.survivors);
            }
        }
    }

    #[test]
    fn singular_partitions_divisible_by_e() {
        // level 1: singular iff the partition is divisible by e partwise
        for e in [2i64, 3] {
            let ch = Multicharge::new(e, vec![0]);
            for n in 0..=8usize {
                for l in super::super::multipartitions(1, n) {
                    let divisible = l.components[0].iter().all(|&p| p as i64 % e == 0);
                    assert_eq!(
                        is_singular(&l, &ch, ReadingOrder::Schur),
                        divisible,
                        "e={} lambda={:?}",
                        e,
                        l
                    );
                }
            }
        }
        assert!(is_singular(
            &Multipartition::empty(1),
            &Multicharge::new(2, vec![0]),
            ReadingOrder::Schur
        ));
        // the paper's example is not singular
        let (l, ch) = (
            Multipartition::new(vec![vec![2, 2], vec![3, 1, 1, 1]]),
            Multicharge::new(2, vec![11, 0]),
        );
        assert!(!is_singular(&l, &ch, ReadingOrder::Schur));
    }

    #[test]
    fn sigma_and_staircase() {
        // C_{0,m} on the empty partition at level 1 builds the e-staircase
        let ch = Multicharge::new(2, vec![0]);
        let empty = Multipartition::empty(1);
        let o = ReadingOrder::Schur;
        let nu2 = apply_word(&empty, &ch, &c_word(0, 2, 2), o, false).unwrap();
        assert_eq!(nu2, Multipartition::new(vec![vec![2, 1]]));
        let nu3 = apply_word(&empty, &ch, &c_word(0, 3, 2), o, false).unwrap();
        assert_eq!(nu3, Multipartition::new(vec![vec![3, 2, 1]]));
        // identity word
        assert_eq!(apply_word(&empty, &ch, &[], o, false).unwrap(), empty);
        // sigma precondition violation
        let one = Multipartition::new(vec![vec![1]]);
        assert!(sigma(&one, &ch, 0, o, false).is_err());
    }

    #[test]
    fn sigma_word_independence_on_singular() {
        // w lambda independent of the reduced expression, short words
        use crate::coxeter::CoxeterSystem;
        for e in [2i64, 3] {
            let sys = CoxeterSystem::affine(e as usize);
            let ch = Multicharge::new(e, vec![0]);
            let o = ReadingOrder::Schur;
            for n in (0..=6).step_by(2) {
                for l in super::super::multipartitions(1, n) {
                    if !is_singular(&l, &ch, o) {
                        continue;
                    }
                    for w in sys.enumerate_up_to_length(3) {
                        // all reduced words of w: braid graph scan
                        let words = all_reduced_words(&sys, w.word());
                        let mut vals = std::collections::BTreeSet::new();
                        for word in words {
                            let word_i: Vec<i64> = word.iter().map(|&g| g as i64).collect();
                            // the sigma-word reads right-to-left: w = s_{ik}...s_{i1}
                            let mut rev = word_i.clone();
                            rev.reverse();
                            if let Ok(v) = apply_word(&l, &ch, &rev, o, false) {
                                vals.insert(v);
                            }
                        }
                        assert!(vals.len() <= 1, "w = {:?} lambda = {:?}", w, l);
                    }
                }
            }
        }
    }

    fn all_reduced_words(sys: &crate::coxeter::CoxeterSystem, word: &[u8]) -> Vec<Vec<u8>> {
        let mut set = std::collections::BTreeSet::new();
        let mut queue = vec![word.to_vec()];
        set.insert(word.to_vec());
        while let Some(w) = queue.pop() {
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                if a == b {
                    continue;
                }
                match sys.coxeter_m(a, b) {
                    Some(2) => {
                        let mut n = w.clone();
                        n.swap(i, i + 1);
                        if set.insert(n.clone()) {
                            queue.push(n);
                        }
                    }
                    Some(3) if i + 2 < w.len() && w[i + 2] == a => {
                        let mut n = w.clone();
                        n[i] = b;
                        n[i + 1] = a;
                        n[i + 2] = b;
                        if set.insert(n.clone()) {
                            queue.push(n);
                        }
                    }
                    _ => {}
                }
            }
        }
        set.into_iter().collect()
    }
}
