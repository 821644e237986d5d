//! Polynomial-valued intersection forms of light leaves and their graded
//! local elimination, which extracts indecomposable-summand multiplicities.

use super::leaves::{flipped_leaf_top_col, leaf_top_row, LeafCtx};
use super::subexpr::{subexpressions, BSWord, Subexpression};
use crate::coxeter::CoxeterElement;
use crate::laurent::LaurentPoly;
use crate::par::par_map;
use crate::poly::{FieldCoeff, Fp, MultiPoly, Poly, RatFunc};
use num::rational::BigRational;
use num::Zero;

/// The light-leaves Gram matrix of an element x inside BS(word): entry (f, e)
/// is the scalar by which the double leaf acts on the top standard summand of
/// BS(rex(x)). Entries are genuine polynomials of degree defect(f) + defect(e).
#[derive(Clone, Debug)]
pub struct GramForm {
    pub element: CoxeterElement,
    pub word: BSWord,
    pub leaves: Vec<Subexpression>,
    /// row-major: entries[i * n + j] pairs leaf i against leaf j
    pub entries: Vec<Poly>,
}

impl GramForm {
    pub fn size(&self) -> usize {
        self.leaves.len()
    }

    pub fn defects(&self) -> Vec<i64> {
        self.leaves.iter().map(|l| l.defect).collect()
    }
}

/// Pair two leaves targeting the same element: the (top, top) localized entry
/// of LL_e composed with the flipped LL_f. The result must be a polynomial.
pub fn pair_leaves(ctx: &LeafCtx, word: &BSWord, f: &Subexpression, e: &Subexpression) -> Poly {
    assert_eq!(f.target, e.target, "leaves target different elements");
    let row = leaf_top_row(ctx, word, e);
    let col = flipped_leaf_top_col(ctx, word, f);
    pair_row_col(&row.entries, &col.entries)
}

fn pair_row_col(
    row: &std::collections::HashMap<u32, RatFunc>,
    col: &std::collections::HashMap<u32, RatFunc>,
) -> Poly {
    let mut acc = RatFunc::zero();
    for (mask, rv) in row {
        if let Some(cv) = col.get(mask) {
            acc = acc.add(&rv.mul(cv));
        }
    }
    acc.as_polynomial()
        .expect("Gram entry has a surviving denominator: integrality violated")
        .clone()
}

/// Full light-leaves Gram form for x in BS(word). Entry computation is
/// independent per pair and parallelizes over the leaf rows.
pub fn intersection_form(ctx: &LeafCtx, x: &CoxeterElement, word: &BSWord) -> GramForm {
    let leaves = subexpressions(ctx.sys(), word, Some(x));
    let rows: Vec<_> = par_map(ctx.parallel, leaves.clone(), |e| {
        leaf_top_row(ctx, word, &e).entries
    });
    let cols: Vec<_> = par_map(ctx.parallel, leaves.clone(), |f| {
        flipped_leaf_top_col(ctx, word, &f).entries
    });
    let n = leaves.len();
    let idx: Vec<usize> = (0..n * n).collect();
    let entries = par_map(ctx.parallel, idx, |k| {
        let (i, j) = (k / n, k % n);
        // entry (i, j): leaf f = leaves[i] flipped, leaf e = leaves[j]
        let p = pair_row_col(&rows[j], &cols[i]);
        // degree bookkeeping: defect(f) + defect(e)
        if !p.is_zero() {
            debug_assert!(p.is_homogeneous());
            debug_assert_eq!(p.degree(), Some(leaves[k / n].defect + leaves[k % n].defect));
        }
        p
    });
    GramForm {
        element: x.clone(),
        word: word.clone(),
        leaves,
        entries,
    }
}

/// Coefficient mode for multiplicity extraction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    Rational,
    Prime(u64),
}

/// Graded local elimination of a Gram form: repeatedly pivot on defect-sum-0
/// entries whose (scalar) value is a unit, accumulating v^{defect(row)} per
/// pivot. Homogeneity makes every pivot an honest scalar, so no power-series
/// truncation is needed. Returns the graded multiplicity.
pub fn graded_gram_multiplicity(g: &GramForm, mode: Mode) -> LaurentPoly {
    match mode {
        Mode::Rational => eliminate(g, |p| p.to_rational()),
        Mode::Prime(p) => eliminate(g, move |q| q.reduce_mod_p(p)),
    }
}

fn eliminate<F, C>(g: &GramForm, convert: F) -> LaurentPoly
where
    C: FieldCoeff,
    F: Fn(&Poly) -> MultiPoly<C>,
{
    let n = g.size();
    let defects = g.defects();
    let mut m: Vec<MultiPoly<C>> = g.entries.iter().map(&convert).collect();
    // entries below defect-sum 0 must vanish identically
    for i in 0..n {
        for j in 0..n {
            if defects[i] + defects[j] < 0 {
                assert!(
                    m[i * n + j].is_zero(),
                    "negative-degree Gram entry is nonzero"
                );
            }
        }
    }
    let mut row_alive = vec![true; n];
    let mut col_alive = vec![true; n];
    let mut mult = LaurentPoly::zero();
    loop {
        // find a unit pivot: defect sum 0 and nonzero constant
        let mut pivot = None;
        'search: for i in 0..n {
            if !row_alive[i] {
                continue;
            }
            for j in 0..n {
                if !col_alive[j] || defects[i] + defects[j] != 0 {
                    continue;
                }
                let c = m[i * n + j].constant_term();
                if !c.is_zero() {
                    pivot = Some((i, j, c));
                    break 'search;
                }
            }
        }
        let Some((pi, pj, pc)) = pivot else { break };
        mult.add_term(defects[pi] as i32, 1);
        let inv = pc.inv();
        row_alive[pi] = false;
        col_alive[pj] = false;
        // Schur complement update
        let prow: Vec<MultiPoly<C>> = (0..n).map(|j| m[pi * n + j].clone()).collect();
        let pcol: Vec<MultiPoly<C>> = (0..n).map(|i| m[i * n + pj].clone()).collect();
        for i in 0..n {
            if !row_alive[i] || pcol[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !col_alive[j] || prow[j].is_zero() {
                    continue;
                }
                let mut corr = pcol[i].mul(&prow[j]);
                corr = scale_field(&corr, &inv);
                m[i * n + j] = m[i * n + j].sub(&corr);
            }
        }
    }
    mult
}

fn scale_field<C: FieldCoeff>(p: &MultiPoly<C>, c: &C) -> MultiPoly<C> {
    let mut out = MultiPoly::zero();
    for (mono, v) in &p.terms {
        out.add_term(mono.clone(), v.mul(c));
    }
    out
}

/// Run the rational elimination recording pivot constants; returns the
/// multiplicity together with the pivot list. When every pivot is +-1 and the
/// eliminated matrix carries no residual constants in any characteristic, the
/// rational multiplicities are valid for all primes simultaneously.
pub fn unit_pivot_certificate(g: &GramForm) -> (LaurentPoly, Vec<BigRational>, bool) {
    let n = g.size();
    let defects = g.defects();
    let mut m: Vec<MultiPoly<BigRational>> = g.entries.iter().map(|p| p.to_rational()).collect();
    let mut row_alive = vec![true; n];
    let mut col_alive = vec![true; n];
    let mut mult = LaurentPoly::zero();
    let mut pivots = Vec::new();
    loop {
        let mut pivot = None;
        'search: for i in 0..n {
            if !row_alive[i] {
                continue;
            }
            for j in 0..n {
                if !col_alive[j] || defects[i] + defects[j] != 0 {
                    continue;
                }
                let c = m[i * n + j].constant_term();
                if !c.is_zero() {
                    pivot = Some((i, j, c));
                    break 'search;
                }
            }
        }
        let Some((pi, pj, pc)) = pivot else { break };
        mult.add_term(defects[pi] as i32, 1);
        pivots.push(pc.clone());
        let inv = pc.inv();
        row_alive[pi] = false;
        col_alive[pj] = false;
        let prow: Vec<MultiPoly<BigRational>> = (0..n).map(|j| m[pi * n + j].clone()).collect();
        let pcol: Vec<MultiPoly<BigRational>> = (0..n).map(|i| m[i * n + pj].clone()).collect();
        for i in 0..n {
            if !row_alive[i] || pcol[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !col_alive[j] || prow[j].is_zero() {
                    continue;
                }
                let mut corr = pcol[i].mul(&prow[j]);
                corr = scale_field(&corr, &inv);
                m[i * n + j] = m[i * n + j].sub(&corr);
            }
        }
    }
    // certificate: all pivots +-1 and residual degree-0 entries integral-zero
    use num::Signed;
    let all_unit = pivots.iter().all(|c| c.abs() == BigRational::from_integer(1.into()));
    let mut residual_clear = true;
    for i in 0..n {
        for j in 0..n {
            if row_alive[i] && col_alive[j] && defects[i] + defects[j] == 0 {
                if !m[i * n + j].constant_term().is_zero() {
                    residual_clear = false;
                }
            }
        }
    }
    (mult, pivots, all_unit && residual_clear)
}

/// Multiplicity of B_x summands mod p requires entries mod p; convenience to
/// expose the mod-p Gram matrix itself for inspection.
pub fn gram_mod_p(g: &GramForm, p: u64) -> Vec<MultiPoly<Fp>> {
    g.entries.iter().map(|q| q.reduce_mod_p(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Realization;
    use crate::soergel::subexpr::decorate;

    #[test]
    fn gram_x_e_in_bs_s() {
        // x = e in BS(s): single leaf (the dot), Gram = [alpha_s]
        let ctx = LeafCtx::new(Realization::finite(2));
        let e = CoxeterElement::identity();
        let g = intersection_form(&ctx, &e, &vec![1]);
        assert_eq!(g.size(), 1);
        assert_eq!(g.entries[0], ctx.real.simple_root(1));
        // no B_e summand for any p (constant term 0)
        for mode in [Mode::Rational, Mode::Prime(2), Mode::Prime(3)] {
            assert!(graded_gram_multiplicity(&g, mode).is_zero());
        }
    }

    #[test]
    fn gram_x_s_in_bs_s() {
        let ctx = LeafCtx::new(Realization::finite(2));
        let s = ctx.sys().from_word(&[1]);
        let g = intersection_form(&ctx, &s, &vec![1]);
        assert_eq!(g.size(), 1);
        assert_eq!(g.entries[0], ctx.real.one());
        assert_eq!(
            graded_gram_multiplicity(&g, Mode::Rational),
            LaurentPoly::one()
        );
    }

    #[test]
    fn gram_x_s_in_bs_ss() {
        // 2x2 Gram with a unit pivot in degree 0; multiplicity v + v^-1
        let ctx = LeafCtx::new(Realization::finite(2));
        let s = ctx.sys().from_word(&[1]);
        let g = intersection_form(&ctx, &s, &vec![1, 1]);
        assert_eq!(g.size(), 2);
        let m = graded_gram_multiplicity(&g, Mode::Rational);
        assert_eq!(m, LaurentPoly::quantum_int(2));
        for p in [2u64, 3, 5] {
            assert_eq!(graded_gram_multiplicity(&g, Mode::Prime(p)), LaurentPoly::quantum_int(2));
        }
    }

    #[test]
    fn rational_multiplicities_on_thick_words() {
        // the KL-expansion oracle on non-reduced words too
        use crate::hecke::HeckeCtx;
        use crate::soergel::subexpr::expressed_targets;
        let ctx = LeafCtx::new(Realization::finite(3));
        let hecke = HeckeCtx::new(*ctx.sys());
        let words: Vec<Vec<u8>> = vec![
            vec![1, 1],
            vec![1, 1, 1],
            vec![1, 2, 1, 2],
            vec![2, 1, 1, 2],
            vec![1, 2, 2, 1],
        ];
        for w in words {
            let expansion = hecke.kl_expand(&hecke.bs_character(&w));
            for x in expressed_targets(ctx.sys(), &w) {
                let g = intersection_form(&ctx, &x, &w);
                let m = graded_gram_multiplicity(&g, Mode::Rational);
                let expected = expansion.get(&x).cloned().unwrap_or_else(LaurentPoly::zero);
                assert_eq!(m, expected, "word {:?} target {:?}", w, x);
            }
        }
    }

    #[test]
    fn dot_dot_pairing_is_alpha() {
        let ctx = LeafCtx::new(Realization::finite(2));
        let word = vec![1u8];
        let e = decorate(ctx.sys(), &word, 0);
        let p = pair_leaves(&ctx, &word, &e, &e);
        assert_eq!(p, ctx.real.simple_root(1));
    }
}
