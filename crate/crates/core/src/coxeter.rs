//! Finite (S_n) and affine type A Coxeter groups.
//!
//! Elements are stored as shortlex-minimal reduced words. Internally, length
//! and descent computations go through the (affine) permutation model, which
//! keeps canonicalization exact without relation tables.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// Generator index. Finite rank n uses 1..=n-1; affine rank n uses 0..=n-1.
pub type Gen = u8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum CoxKind {
    Finite,
    Affine,
}

/// A type A Coxeter system of rank n: S_n (finite) or the affine group on n strands.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CoxeterSystem {
    pub kind: CoxKind,
    pub rank: usize,
}

/// Group element, canonical shortlex-minimal reduced word.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoxeterElement {
    word: Vec<Gen>,
}

/// A subset of the simple reflections.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ParabolicSubset {
    pub members: BTreeSet<Gen>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CosetSide {
    Left,
    Right,
}

/// A coset of a standard parabolic subgroup, stored by its minimal-length representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coset {
    pub side: CosetSide,
    pub parabolic: ParabolicSubset,
    pub representative: CoxeterElement,
}

impl ParabolicSubset {
    pub fn new<I: IntoIterator<Item = Gen>>(gens: I) -> Self {
        ParabolicSubset {
            members: gens.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        ParabolicSubset {
            members: BTreeSet::new(),
        }
    }

    pub fn contains(&self, s: Gen) -> bool {
        self.members.contains(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = Gen> + '_ {
        self.members.iter().copied()
    }
}

impl fmt::Debug for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "e")
        } else {
            let parts: Vec<String> = self.word.iter().map(|g| format!("s{}", g)).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl PartialOrd for CoxeterElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Length-then-lex ordering; convenient for deterministic table output.
impl Ord for CoxeterElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl CoxeterElement {
    pub fn identity() -> Self {
        CoxeterElement { word: Vec::new() }
    }

    pub fn generator(s: Gen) -> Self {
        CoxeterElement { word: vec![s] }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Construct from a word that the caller asserts is already canonical.
    pub fn from_canonical_word(word: Vec<Gen>) -> Self {
        CoxeterElement { word }
    }
}

/// Window model of a (possibly affine) permutation: `window[i-1] = w(i)` for
/// 1 <= i <= n, extended by w(x + n) = w(x) + n in the affine case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Window {
    pub vals: Vec<i64>,
}

impl CoxeterSystem {
    pub fn finite(rank: usize) -> Self {
        assert!(rank >= 1);
        CoxeterSystem {
            kind: CoxKind::Finite,
            rank,
        }
    }

    pub fn affine(rank: usize) -> Self {
        assert!(rank >= 2);
        CoxeterSystem {
            kind: CoxKind::Affine,
            rank,
        }
    }

    pub fn generators(&self) -> Vec<Gen> {
        match self.kind {
            CoxKind::Finite => (1..self.rank as Gen).collect(),
            CoxKind::Affine => (0..self.rank as Gen).collect(),
        }
    }

    /// Coxeter matrix entry m(s,t) for distinct generators; `None` encodes infinity
    /// (affine rank 2 only).
    pub fn coxeter_m(&self, s: Gen, t: Gen) -> Option<u32> {
        assert_ne!(s, t);
        let n = self.rank as i64;
        let (a, b) = (s as i64, t as i64);
        let adjacent = match self.kind {
            CoxKind::Finite => (a - b).abs() == 1,
            CoxKind::Affine => {
                let d = (a - b).rem_euclid(n);
                d == 1 || d == n - 1
            }
        };
        match self.kind {
            CoxKind::Affine if self.rank == 2 => None,
            _ => Some(if adjacent { 3 } else { 2 }),
        }
    }

    pub fn identity_window(&self) -> Window {
        Window {
            vals: (1..=self.rank as i64).collect(),
        }
    }

    /// Right multiplication by a generator: permutes window positions.
    pub fn window_mul_gen_right(&self, w: &Window, s: Gen) -> Window {
        let n = self.rank;
        let mut v = w.vals.clone();
        if s == 0 {
            debug_assert_eq!(self.kind, CoxKind::Affine);
            let first = v[0];
            let last = v[n - 1];
            v[0] = last - n as i64;
            v[n - 1] = first + n as i64;
        } else {
            let i = s as usize;
            v.swap(i - 1, i);
        }
        Window { vals: v }
    }

    /// Left multiplication by a generator: acts on window values.
    pub fn window_mul_gen_left(&self, w: &Window, s: Gen) -> Window {
        let n = self.rank as i64;
        let v = w
            .vals
            .iter()
            .map(|&x| {
                let r = (x - s as i64).rem_euclid(n);
                if r == 0 {
                    x + 1
                } else if r == 1 {
                    x - 1
                } else {
                    x
                }
            })
            .collect();
        Window { vals: v }
    }

    pub fn window_of(&self, w: &CoxeterElement) -> Window {
        let mut win = self.identity_window();
        for &s in w.word() {
            win = self.window_mul_gen_right(&win, s);
        }
        win
    }

    /// Number of inversions of a window (= Coxeter length).
    pub fn window_length(&self, w: &Window) -> usize {
        let n = self.rank;
        let mut len = 0i64;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = w.vals[j] - w.vals[i];
                len += (d as f64 / n as f64).floor().abs() as i64;
            }
        }
        len as usize
    }

    /// True iff s w < w (left descent).
    pub fn window_left_descent(&self, w: &Window, s: Gen) -> bool {
        // s w < w iff position of value `s` (mod-n-periodically) is after position of `s+1`.
        let n = self.rank as i64;
        let pos = |target: i64| -> i64 {
            // unique x with w(x) = target: find j, k with vals[j] + k n = target
            for (j, &v) in w.vals.iter().enumerate() {
                if (target - v).rem_euclid(n) == 0 {
                    let k = (target - v) / n;
                    return (j as i64 + 1) + k * n;
                }
            }
            unreachable!("window values cover all residues")
        };
        pos(s as i64) > pos(s as i64 + 1)
    }

    /// True iff w s < w (right descent).
    pub fn window_right_descent(&self, w: &Window, s: Gen) -> bool {
        if s == 0 {
            w.vals[self.rank - 1] - self.rank as i64 > w.vals[0]
        } else {
            let i = s as usize;
            w.vals[i - 1] > w.vals[i]
        }
    }

    /// Canonical shortlex-minimal reduced word of a window.
    pub fn canonicalize(&self, win: &Window) -> CoxeterElement {
        let mut cur = win.clone();
        let mut word = Vec::new();
        let id = self.identity_window();
        let gens = self.generators();
        while cur != id {
            let mut found = false;
            for &s in &gens {
                if self.window_left_descent(&cur, s) {
                    word.push(s);
                    cur = self.window_mul_gen_left(&cur, s);
                    found = true;
                    break;
                }
            }
            assert!(found, "no descent found; corrupt window");
        }
        CoxeterElement { word }
    }

    pub fn from_word(&self, word: &[Gen]) -> CoxeterElement {
        let mut win = self.identity_window();
        for &s in word {
            win = self.window_mul_gen_right(&win, s);
        }
        self.canonicalize(&win)
    }

    pub fn multiply(&self, a: &CoxeterElement, b: &CoxeterElement) -> CoxeterElement {
        let mut win = self.window_of(a);
        for &s in b.word() {
            win = self.window_mul_gen_right(&win, s);
        }
        self.canonicalize(&win)
    }

    pub fn mul_gen(&self, a: &CoxeterElement, s: Gen, side: CosetSide) -> CoxeterElement {
        match side {
            CosetSide::Right => self.multiply(a, &CoxeterElement::generator(s)),
            CosetSide::Left => self.multiply(&CoxeterElement::generator(s), a),
        }
    }

    pub fn inverse(&self, a: &CoxeterElement) -> CoxeterElement {
        let mut word: Vec<Gen> = a.word().to_vec();
        word.reverse();
        self.from_word(&word)
    }

    pub fn length(&self, a: &CoxeterElement) -> usize {
        a.len()
    }

    pub fn is_right_descent(&self, a: &CoxeterElement, s: Gen) -> bool {
        self.window_right_descent(&self.window_of(a), s)
    }

    pub fn is_left_descent(&self, a: &CoxeterElement, s: Gen) -> bool {
        self.window_left_descent(&self.window_of(a), s)
    }

    /// Standard Bruhat order via the lifting property. The paper's inverse
    /// order is `bruhat_leq(b, a)`.
    pub fn bruhat_leq(&self, a: &CoxeterElement, b: &CoxeterElement) -> bool {
        if a.len() > b.len() {
            return false;
        }
        if a.is_identity() {
            return true;
        }
        // lifting property on the first letter of b's canonical word
        let s = b.word()[0];
        let sb = CoxeterElement::from_canonical_word(b.word()[1..].to_vec());
        let sa = self.mul_gen(a, s, CosetSide::Left);
        if sa.len() < a.len() {
            self.bruhat_leq(&sa, &sb)
        } else {
            self.bruhat_leq(a, &sb)
        }
    }

    /// Inverse-order comparison as used throughout the paper ("1 is maximal").
    pub fn bruhat_leq_inverse_order(&self, a: &CoxeterElement, b: &CoxeterElement) -> bool {
        self.bruhat_leq(b, a)
    }

    /// All elements of length <= max_len, in length-nondecreasing (shortlex within
    /// a length) order. Finite groups simply stop growing.
    pub fn enumerate_up_to_length(&self, max_len: usize) -> Vec<CoxeterElement> {
        let mut out = vec![CoxeterElement::identity()];
        let mut frontier: BTreeSet<CoxeterElement> = out.iter().cloned().collect();
        for _ in 1..=max_len {
            let mut next = BTreeSet::new();
            for w in &frontier {
                for &s in &self.generators() {
                    let ws = self.mul_gen(w, s, CosetSide::Right);
                    if ws.len() == w.len() + 1 {
                        next.insert(ws);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        out
    }

    /// Elements of the parabolic subgroup W_I (I must be finitary).
    pub fn parabolic_elements(&self, i_set: &ParabolicSubset) -> Vec<CoxeterElement> {
        assert!(self.is_finitary(i_set), "parabolic subset is not finitary");
        let mut seen: BTreeSet<CoxeterElement> = BTreeSet::new();
        let mut queue = VecDeque::new();
        queue.push_back(CoxeterElement::identity());
        seen.insert(CoxeterElement::identity());
        while let Some(w) = queue.pop_front() {
            for s in i_set.iter() {
                let ws = self.mul_gen(&w, s, CosetSide::Right);
                if !seen.contains(&ws) {
                    seen.insert(ws.clone());
                    queue.push_back(ws);
                }
            }
        }
        let mut v: Vec<_> = seen.into_iter().collect();
        v.sort();
        v
    }

    pub fn is_finitary(&self, i_set: &ParabolicSubset) -> bool {
        match self.kind {
            CoxKind::Finite => true,
            CoxKind::Affine => i_set.members.len() < self.rank,
        }
    }

    /// Longest element of W_I. Errors (panics) on non-finitary input.
    pub fn longest_element(&self, i_set: &ParabolicSubset) -> CoxeterElement {
        assert!(self.is_finitary(i_set), "longest element needs finitary I");
        let mut w = CoxeterElement::identity();
        loop {
            let mut grew = false;
            for s in i_set.iter() {
                let ws = self.mul_gen(&w, s, CosetSide::Right);
                if ws.len() > w.len() {
                    w = ws;
                    grew = true;
                    break;
                }
            }
            if !grew {
                return w;
            }
        }
    }

    /// The relative longest element w_I^J = w_I w_J^{-1}, J subset of I.
    pub fn relative_longest(&self, i_set: &ParabolicSubset, j_set: &ParabolicSubset) -> CoxeterElement {
        assert!(j_set.members.is_subset(&i_set.members));
        let wi = self.longest_element(i_set);
        let wj = self.longest_element(j_set);
        let rel = self.multiply(&wi, &self.inverse(&wj));
        debug_assert_eq!(rel.len() + wj.len(), wi.len());
        rel
    }

    /// Minimal-length representative of the coset (left: W_I w, right: w W_I).
    pub fn coset_minimal(&self, w: &CoxeterElement, i_set: &ParabolicSubset, side: CosetSide) -> Coset {
        assert!(self.is_finitary(i_set));
        let mut cur = w.clone();
        loop {
            let mut reduced = false;
            for s in i_set.iter() {
                let next = match side {
                    CosetSide::Left => self.mul_gen(&cur, s, CosetSide::Left),
                    CosetSide::Right => self.mul_gen(&cur, s, CosetSide::Right),
                };
                if next.len() < cur.len() {
                    cur = next;
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                return Coset {
                    side,
                    parabolic: i_set.clone(),
                    representative: cur,
                };
            }
        }
    }

    /// Minimal representative of the double coset W_I w W_J.
    pub fn double_coset_minimal(
        &self,
        w: &CoxeterElement,
        i_set: &ParabolicSubset,
        j_set: &ParabolicSubset,
    ) -> CoxeterElement {
        let mut cur = w.clone();
        loop {
            let left = self.coset_minimal(&cur, i_set, CosetSide::Left).representative;
            let right = self.coset_minimal(&left, j_set, CosetSide::Right).representative;
            if right == cur {
                return cur;
            }
            cur = right;
        }
    }

    /// Longest element of the finite coset (left: W_I w), i.e. w_I * (minimal rep).
    pub fn coset_longest(&self, w: &CoxeterElement, i_set: &ParabolicSubset, side: CosetSide) -> CoxeterElement {
        let min = self.coset_minimal(w, i_set, side).representative;
        let wi = self.longest_element(i_set);
        let long = match side {
            CosetSide::Left => self.multiply(&wi, &min),
            CosetSide::Right => self.multiply(&min, &wi),
        };
        debug_assert_eq!(long.len(), min.len() + wi.len());
        long
    }

    /// Affine action on Z^n ("level -e"): s_0(l_1,...,l_n) = (l_n - e, ..., l_1 + e),
    /// finite generators permute coordinates. For the finite kind e is ignored.
    pub fn weight_apply_gen(&self, lambda: &[i64], s: Gen, e: i64) -> Vec<i64> {
        let n = self.rank;
        let mut v = lambda.to_vec();
        if s == 0 {
            assert_eq!(self.kind, CoxKind::Affine, "s_0 needs affine kind");
            let first = v[0];
            let last = v[n - 1];
            v[0] = last - e;
            v[n - 1] = first + e;
        } else {
            let i = s as usize;
            v.swap(i - 1, i);
        }
        v
    }

    /// Left action: w(lambda), word applied right-to-left.
    pub fn act_on_weight(&self, w: &CoxeterElement, lambda: &[i64], e: i64) -> Vec<i64> {
        let mut v = lambda.to_vec();
        for &s in w.word().iter().rev() {
            v = self.weight_apply_gen(&v, s, e);
        }
        v
    }

    /// Right action: lambda . w, word applied left-to-right.
    pub fn act_on_weight_right(&self, lambda: &[i64], w: &CoxeterElement, e: i64) -> Vec<i64> {
        let mut v = lambda.to_vec();
        for &s in w.word().iter() {
            v = self.weight_apply_gen(&v, s, e);
        }
        v
    }

    /// Stabilizer of a weight inside this system (simple reflections fixing it).
    pub fn weight_stabilizer(&self, lambda: &[i64], e: i64) -> ParabolicSubset {
        let gens = self.generators();
        ParabolicSubset::new(
            gens.into_iter()
                .filter(|&s| self.weight_apply_gen(lambda, s, e) == lambda),
        )
    }

    /// All reflections expressible as u s u^{-1} with l(u) <= bound; complete for
    /// finite groups once bound >= l(w_0).
    pub fn reflections_up_to(&self, bound: usize) -> Vec<CoxeterElement> {
        let mut out = BTreeSet::new();
        for u in self.enumerate_up_to_length(bound) {
            let ui = self.inverse(&u);
            for &s in &self.generators() {
                let t = self.multiply(&self.multiply(&u, &CoxeterElement::generator(s)), &ui);
                out.insert(t);
            }
        }
        out.into_iter().collect()
    }
}

/// Brute-force canonicalization by word rewriting: braid moves plus deletion of
/// adjacent equal letters. Independent of the window model; used as an oracle.
pub fn canonical_by_rewriting(sys: &CoxeterSystem, word: &[Gen]) -> Vec<Gen> {
    // All words reachable by braid moves from `word`; if any admits an ss-cancellation,
    // cancel and recurse. Otherwise the word is reduced: return the shortlex-least word
    // in its braid class.
    let mut class: BTreeSet<Vec<Gen>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    class.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        // cancellation?
        for i in 0..w.len().saturating_sub(1) {
            if w[i] == w[i + 1] {
                let mut shorter = w.clone();
                shorter.drain(i..=i + 1);
                return canonical_by_rewriting(sys, &shorter);
            }
        }
        // braid moves
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a == b {
                continue;
            }
            match sys.coxeter_m(a, b) {
                Some(2) => {
                    let mut next = w.clone();
                    next.swap(i, i + 1);
                    if class.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
                Some(3) => {
                    if i + 2 < w.len() && w[i + 2] == a {
                        let mut next = w.clone();
                        next[i] = b;
                        next[i + 1] = a;
                        next[i + 2] = b;
                        if class.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
                _ => {}
            }
        }
    }
    class.into_iter().next().unwrap()
}

/// Bruhat order oracle: chain of reflections with strictly increasing length.
pub fn bruhat_leq_by_reflections(sys: &CoxeterSystem, a: &CoxeterElement, b: &CoxeterElement) -> bool {
    if a == b {
        return true;
    }
    if a.len() >= b.len() {
        return false;
    }
    let refl_bound = b.len() + 3;
    let refls = sys.reflections_up_to(refl_bound);
    let mut frontier = vec![a.clone()];
    let mut seen: BTreeSet<CoxeterElement> = frontier.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for t in &refls {
            let tx = sys.multiply(t, &x);
            if tx.len() > x.len() && tx.len() <= b.len() && seen.insert(tx.clone()) {
                if tx == *b {
                    return true;
                }
                frontier.push(tx);
            }
        }
    }
    false
}
