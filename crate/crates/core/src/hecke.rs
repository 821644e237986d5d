//! Hecke algebra of a type A Coxeter system over Z[v, v^-1].
//!
//! Normalization: T_s^2 = T_e + (v^-1 - v) T_s and b_s = T_s + v T_e, so that
//! Bott-Samelson characters have nonnegative coefficients and KL polynomials
//! h_{x,w} lie in v Z[v] for x < w.

use crate::coxeter::{CosetSide, CoxeterElement, CoxeterSystem, Gen};
use crate::laurent::LaurentPoly;
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

/// Finitely supported Z[v,v^-1]-combination of standard basis elements T_w.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HeckeElement {
    pub support: BTreeMap<CoxeterElement, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    pub fn unit() -> Self {
        HeckeElement::standard(CoxeterElement::identity())
    }

    pub fn standard(w: CoxeterElement) -> Self {
        let mut support = BTreeMap::new();
        support.insert(w, LaurentPoly::one());
        HeckeElement { support }
    }

    pub fn coeff(&self, w: &CoxeterElement) -> LaurentPoly {
        self.support.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_term(&mut self, w: CoxeterElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.support.entry(w).or_insert_with(LaurentPoly::zero);
        *entry += c;
        if entry.is_zero() {
            // prune; recompute key is awkward, so collect and remove
        }
        self.prune();
    }

    fn prune(&mut self) {
        self.support.retain(|_, c| !c.is_zero());
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = HeckeElement::zero();
        for (w, a) in &self.support {
            out.add_term(w.clone(), &(a * c));
        }
        out
    }

    pub fn add(&self, other: &HeckeElement) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.support {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.support {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Longest element in the support (ties broken by shortlex).
    pub fn top_term(&self) -> Option<&CoxeterElement> {
        self.support.keys().next_back()
    }
}

/// Hecke algebra context: the Coxeter system plus a memoized KL basis cache.
/// The cache takes concurrent readers and a single logical writer at a time.
pub struct HeckeCtx {
    pub sys: CoxeterSystem,
    kl_cache: RwLock<HashMap<Vec<Gen>, HeckeElement>>,
}

impl HeckeCtx {
    pub fn new(sys: CoxeterSystem) -> Self {
        HeckeCtx {
            sys,
            kl_cache: RwLock::new(HashMap::new()),
        }
    }

    /// T_s . h
    pub fn mul_gen_left(&self, s: Gen, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in &h.support {
            let sw = self.sys.mul_gen(w, s, CosetSide::Left);
            if sw.len() > w.len() {
                out.add_term(sw, c);
            } else {
                // T_s T_w = T_{sw} + (v^-1 - v) T_w when sw < w
                out.add_term(sw, c);
                let q = &LaurentPoly::v(-1) - &LaurentPoly::v(1);
                out.add_term(w.clone(), &(c * &q));
            }
        }
        out
    }

    /// h . T_s
    pub fn mul_gen_right(&self, h: &HeckeElement, s: Gen) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in &h.support {
            let ws = self.sys.mul_gen(w, s, CosetSide::Right);
            if ws.len() > w.len() {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, c);
                let q = &LaurentPoly::v(-1) - &LaurentPoly::v(1);
                out.add_term(w.clone(), &(c * &q));
            }
        }
        out
    }

    /// T_x . h for x given by its canonical reduced word.
    pub fn mul_standard_left(&self, x: &CoxeterElement, h: &HeckeElement) -> HeckeElement {
        let mut acc = h.clone();
        for &s in x.word().iter().rev() {
            acc = self.mul_gen_left(s, &acc);
        }
        acc
    }

    pub fn mul_standard(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (x, c) in &a.support {
            let xb = self.mul_standard_left(x, b);
            out = out.add(&xb.scale(c));
        }
        out
    }

    /// bar involution: v -> v^-1, T_w -> (T_{w^-1})^-1.
    pub fn bar(&self, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in &h.support {
            let bar_tw = self.bar_standard(w);
            out = out.add(&bar_tw.scale(&c.bar()));
        }
        out
    }

    /// bar(T_w) computed as a product of bar(T_s) = T_s + (v - v^-1) T_e over a
    /// reduced word.
    fn bar_standard(&self, w: &CoxeterElement) -> HeckeElement {
        let mut acc = HeckeElement::unit();
        let bar_ts = |s: Gen| -> HeckeElement {
            let mut h = HeckeElement::standard(CoxeterElement::generator(s));
            h.add_term(
                CoxeterElement::identity(),
                &(&LaurentPoly::v(1) - &LaurentPoly::v(-1)),
            );
            h
        };
        for &s in w.word() {
            acc = self.mul_standard(&acc, &bar_ts(s));
        }
        acc
    }

    /// b_s = T_s + v T_e.
    pub fn b_gen(&self, s: Gen) -> HeckeElement {
        let mut h = HeckeElement::standard(CoxeterElement::generator(s));
        h.add_term(CoxeterElement::identity(), &LaurentPoly::v(1));
        h
    }

    /// Kazhdan-Lusztig basis element b_w (characteristic-zero oracle), memoized.
    pub fn kl_basis(&self, w: &CoxeterElement) -> HeckeElement {
        if let Some(hit) = self.kl_cache.read().unwrap().get(w.word()) {
            return hit.clone();
        }
        let result = self.kl_basis_compute(w);
        self.kl_cache
            .write()
            .unwrap()
            .insert(w.word().to_vec(), result.clone());
        result
    }

    fn kl_basis_compute(&self, w: &CoxeterElement) -> HeckeElement {
        if w.is_identity() {
            return HeckeElement::unit();
        }
        let s = *w.word().last().unwrap();
        let ws = self.sys.mul_gen(w, s, CosetSide::Right);
        debug_assert!(ws.len() + 1 == w.len());
        let mut c = self.mul_standard(&self.kl_basis(&ws), &self.b_gen(s));
        // subtract mu-corrections: c = b_w + sum_{x < w} mu_x b_x with mu_x constants
        loop {
            let mut correction: Option<(CoxeterElement, i64)> = None;
            for (x, coeff) in c.support.iter().rev() {
                if x == w {
                    continue;
                }
                let m = coeff.coeff(0);
                if m != 0 {
                    correction = Some((x.clone(), m));
                    break;
                }
            }
            match correction {
                Some((x, m)) => {
                    let bx = self.kl_basis(&x);
                    c = c.sub(&bx.scale(&LaurentPoly::from_const(m)));
                }
                None => break,
            }
        }
        // sanity: unitriangular with h_{x,w} in vZ[v]
        debug_assert_eq!(c.coeff(w), LaurentPoly::one());
        debug_assert!(c
            .support
            .iter()
            .all(|(x, h)| x == w || h.in_v_zv()));
        c
    }

    /// Character of the Bott-Samelson object for a word: the product of b_s.
    pub fn bs_character(&self, word: &[Gen]) -> HeckeElement {
        let mut acc = HeckeElement::unit();
        for &s in word {
            acc = self.mul_standard(&acc, &self.b_gen(s));
        }
        acc
    }

    /// The coefficientwise standard form <sum a_x T_x, sum b_x T_x> = sum a_x b_x.
    /// On Bott-Samelson characters it computes graded double-leaf counts.
    pub fn standard_pairing(&self, a: &HeckeElement, b: &HeckeElement) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (x, ca) in &a.support {
            let cb = b.coeff(x);
            if !cb.is_zero() {
                out += &(ca * &cb);
            }
        }
        out
    }

    /// Expand an element in the KL basis: returns the coefficient map x -> c_x
    /// with a = sum c_x b_x.
    pub fn kl_expand(&self, a: &HeckeElement) -> BTreeMap<CoxeterElement, LaurentPoly> {
        let mut rest = a.clone();
        let mut out = BTreeMap::new();
        while let Some(x) = rest.top_term().cloned() {
            let c = rest.coeff(&x);
            rest = rest.sub(&self.kl_basis(&x).scale(&c));
            out.insert(x, c);
            debug_assert!(rest.top_term().map_or(true, |t| t.len() <= out.keys().next_back().unwrap().len()));
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}
