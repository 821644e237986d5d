//! Subexpressions of Bott-Samelson words with their U/D decorations and defects.

use crate::coxeter::{CosetSide, CoxeterElement, CoxeterSystem, Gen};

/// A Bott-Samelson word: a sequence of simple reflections.
pub type BSWord = Vec<Gen>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Decoration {
    U0,
    U1,
    D0,
    D1,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subexpression {
    pub bits: Vec<bool>,
    pub decorations: Vec<Decoration>,
    pub target: CoxeterElement,
    pub defect: i64,
}

impl Subexpression {
    pub fn mask(&self) -> u32 {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |m, (i, &b)| if b { m | (1 << i) } else { m })
    }
}

/// Decorate one subexpression of a word, given by its bitmask.
pub fn decorate(sys: &CoxeterSystem, word: &[Gen], mask: u32) -> Subexpression {
    let mut x = CoxeterElement::identity();
    let mut bits = Vec::with_capacity(word.len());
    let mut decorations = Vec::with_capacity(word.len());
    let mut defect = 0i64;
    for (j, &s) in word.iter().enumerate() {
        let used = mask & (1 << j) != 0;
        let xs = sys.mul_gen(&x, s, CosetSide::Right);
        let up = xs.len() > x.len();
        let dec = match (up, used) {
            (true, true) => Decoration::U1,
            (true, false) => {
                defect += 1;
                Decoration::U0
            }
            (false, true) => Decoration::D1,
            (false, false) => {
                defect -= 1;
                Decoration::D0
            }
        };
        if used {
            x = xs;
        }
        bits.push(used);
        decorations.push(dec);
    }
    Subexpression {
        bits,
        decorations,
        target: x,
        defect,
    }
}

/// Enumerate all subexpressions of a word, optionally filtered by target.
pub fn subexpressions(
    sys: &CoxeterSystem,
    word: &[Gen],
    target: Option<&CoxeterElement>,
) -> Vec<Subexpression> {
    assert!(word.len() <= 31, "word too long for mask enumeration");
    let mut out = Vec::new();
    for mask in 0..(1u32 << word.len()) {
        let e = decorate(sys, word, mask);
        if target.map_or(true, |t| e.target == *t) {
            out.push(e);
        }
    }
    out
}

/// Distinct targets expressed by subexpressions of a word.
pub fn expressed_targets(sys: &CoxeterSystem, word: &[Gen]) -> Vec<CoxeterElement> {
    let mut set = std::collections::BTreeSet::new();
    for mask in 0..(1u32 << word.len()) {
        set.insert(decorate(sys, word, mask).target);
    }
    set.into_iter().collect()
}
