//! The p-canonical basis engine: decompose Bott-Samelson characters by graded
//! Gram multiplicities and recurse.

use super::gram::{graded_gram_multiplicity, intersection_form, Mode};
use super::leaves::LeafCtx;
use super::subexpr::expressed_targets;
use crate::coxeter::{CoxeterElement, Gen};
use crate::hecke::HeckeElement;
use crate::laurent::LaurentPoly;
use crate::par::par_map;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

/// One computed p-canonical basis element: the expansion of [B_w] in the
/// standard basis, plus the multiplicities consumed by the recursion.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PCanonicalEntry {
    pub word: Vec<Gen>,
    /// None encodes rational (characteristic-zero) mode.
    pub prime: Option<u64>,
    /// target canonical word -> coefficient of T_target
    pub expansion: BTreeMap<Vec<Gen>, LaurentPoly>,
    /// multiplicities ^p m_x(v) of lower terms in BS(rex(w)) used on the way
    pub provenance: BTreeMap<Vec<Gen>, LaurentPoly>,
}

impl PCanonicalEntry {
    pub fn to_hecke(&self) -> HeckeElement {
        let mut h = HeckeElement::zero();
        for (w, c) in &self.expansion {
            h.add_term(CoxeterElement::from_canonical_word(w.clone()), c);
        }
        h
    }

    pub fn coeff(&self, x: &CoxeterElement) -> LaurentPoly {
        self.expansion
            .get(x.word())
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }
}

/// p-canonical engine with a per-(mode, element) memo cache.
pub struct PCanCtx {
    pub leaf: LeafCtx,
    cache: RwLock<HashMap<(Mode, Vec<Gen>), PCanonicalEntry>>,
}

impl PCanCtx {
    pub fn new(leaf: LeafCtx) -> Self {
        PCanCtx {
            leaf,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn insert_cached(&self, mode: Mode, entry: PCanonicalEntry) {
        self.cache
            .write()
            .unwrap()
            .insert((mode, entry.word.clone()), entry);
    }

    pub fn cached(&self, mode: Mode, w: &CoxeterElement) -> Option<PCanonicalEntry> {
        self.cache
            .read()
            .unwrap()
            .get(&(mode, w.word().to_vec()))
            .cloned()
    }

    /// ^p b_w: bar-invariant, unitriangular, nonnegative; rational mode
    /// reproduces the Kazhdan-Lusztig basis. For Mode::Rational this takes the
    /// characteristic-zero oracle route through the KL recursion, which the
    /// Gram-based route (`p_canonical_gram`) is checked against at desk scale;
    /// prime modes always run the intersection-form engine.
    pub fn p_canonical(&self, w: &CoxeterElement, mode: Mode) -> PCanonicalEntry {
        if let Some(hit) = self.cached(mode, w) {
            return hit;
        }
        let entry = match mode {
            Mode::Rational => self.kl_entry(w),
            Mode::Prime(_) => self.compute(w, mode),
        };
        self.insert_cached(mode, entry.clone());
        entry
    }

    /// The intersection-form engine in any mode, including rational.
    pub fn p_canonical_gram(&self, w: &CoxeterElement, mode: Mode) -> PCanonicalEntry {
        self.compute(w, mode)
    }

    /// Characteristic-zero entry via the KL recursion, with provenance from
    /// the KL expansion of the Bott-Samelson character.
    fn kl_entry(&self, w: &CoxeterElement) -> PCanonicalEntry {
        let b = self.leaf.hecke.kl_basis(w);
        let mut provenance = BTreeMap::new();
        if !w.is_identity() {
            let ch = self.leaf.hecke.bs_character(w.word());
            for (x, c) in self.leaf.hecke.kl_expand(&ch) {
                if &x != w {
                    provenance.insert(x.word().to_vec(), c);
                }
            }
        }
        PCanonicalEntry {
            word: w.word().to_vec(),
            prime: None,
            expansion: b
                .support
                .iter()
                .map(|(x, c)| (x.word().to_vec(), c.clone()))
                .collect(),
            provenance,
        }
    }

    fn compute(&self, w: &CoxeterElement, mode: Mode) -> PCanonicalEntry {
        let sys = *self.leaf.sys();
        let rex = w.word().to_vec();
        let mut class = self.leaf.hecke.bs_character(&rex);
        let mut provenance = BTreeMap::new();
        if !w.is_identity() {
            let mut targets = expressed_targets(&sys, &rex);
            targets.retain(|x| x != w);
            // Gram multiplicities are independent across targets
            let mults: Vec<(CoxeterElement, LaurentPoly)> =
                par_map(self.leaf.parallel, targets, |x| {
                    let g = intersection_form(&self.leaf, &x, &rex);
                    let m = graded_gram_multiplicity(&g, mode);
                    (x, m)
                });
            // the top multiplicity is 1: the all-ones leaf is the only one
            {
                let g_top = intersection_form(&self.leaf, w, &rex);
                let m_top = graded_gram_multiplicity(&g_top, mode);
                assert_eq!(m_top, LaurentPoly::one(), "top multiplicity is not 1");
            }
            for (x, m) in mults {
                if m.is_zero() {
                    continue;
                }
                let bx = self.p_canonical(&x, mode);
                class = class.sub(&bx.to_hecke().scale(&m));
                provenance.insert(x.word().to_vec(), m);
            }
        }
        // consistency: bar-invariant, unitriangular, nonnegative
        let expansion: BTreeMap<Vec<Gen>, LaurentPoly> = class
            .support
            .iter()
            .map(|(x, c)| (x.word().to_vec(), c.clone()))
            .collect();
        assert_eq!(
            class.coeff(w),
            LaurentPoly::one(),
            "^p h_{{w,w}} != 1 for {:?}",
            w
        );
        for (x, c) in &class.support {
            assert!(
                c.is_nonnegative(),
                "negative coefficient in ^p b_{:?} at {:?}: consistency failure",
                w,
                x
            );
            assert!(
                self.leaf.hecke.sys.bruhat_leq(x, w),
                "support not Bruhat-below the top"
            );
        }
        let barred = self.leaf.hecke.bar(&class);
        assert_eq!(barred, class, "^p b_w is not bar invariant");
        PCanonicalEntry {
            word: rex,
            prime: match mode {
                Mode::Rational => None,
                Mode::Prime(p) => Some(p),
            },
            expansion,
            provenance,
        }
    }

    /// P^p_{y,w}(v): the coefficient of T_w in [B_y].
    pub fn pkl_poly(&self, y: &CoxeterElement, w: &CoxeterElement, mode: Mode) -> LaurentPoly {
        self.p_canonical(y, mode).coeff(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;
    use crate::poly::Realization;

    #[test]
    fn pcan_identity_and_generator() {
        let ctx = PCanCtx::new(LeafCtx::new(Realization::finite(3)));
        let e = CoxeterElement::identity();
        for mode in [Mode::Rational, Mode::Prime(2), Mode::Prime(3)] {
            let be = ctx.p_canonical(&e, mode);
            assert_eq!(be.to_hecke(), HeckeElement::unit());
            let s = CoxeterElement::generator(1);
            let bs = ctx.p_canonical(&s, mode);
            assert_eq!(bs.to_hecke(), ctx.leaf.hecke.b_gen(1));
        }
    }

    #[test]
    fn rational_mode_matches_kl_in_s3() {
        let ctx = PCanCtx::new(LeafCtx::new(Realization::finite(3)));
        let sys = CoxeterSystem::finite(3);
        for w in sys.enumerate_up_to_length(3) {
            let p = ctx.p_canonical_gram(&w, Mode::Rational);
            let kl = ctx.leaf.hecke.kl_basis(&w);
            assert_eq!(p.to_hecke(), kl, "mismatch at {:?}", w);
        }
    }

    #[test]
    fn rational_mode_matches_kl_affine_short() {
        let ctx = PCanCtx::new(LeafCtx::new(Realization::affine(2)));
        let sys = CoxeterSystem::affine(2);
        for w in sys.enumerate_up_to_length(4) {
            let p = ctx.p_canonical_gram(&w, Mode::Rational);
            let kl = ctx.leaf.hecke.kl_basis(&w);
            assert_eq!(p.to_hecke(), kl, "mismatch at {:?}", w);
        }
    }
}
