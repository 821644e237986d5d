//! The gl_n realization (finite) and its affine extension: W-action on the
//! polynomial ring, Demazure operators, Frobenius traces, positive roots,
//! product-coproduct invariants, and dual bases.

use super::coeff::Coeff;
use super::{MultiPoly, Poly};
use crate::coxeter::{CoxKind, CoxeterElement, CoxeterSystem, Gen, ParabolicSubset};
use num::bigint::BigInt;
use num::{One, Signed};

/// Realization data: variables x_1..x_n (plus y at slot n when affine),
/// simple roots, and the generator action on variables.
#[derive(Clone, Debug)]
pub struct Realization {
    pub sys: CoxeterSystem,
}

impl Realization {
    pub fn new(sys: CoxeterSystem) -> Self {
        Realization { sys }
    }

    pub fn finite(rank: usize) -> Self {
        Realization::new(CoxeterSystem::finite(rank))
    }

    pub fn affine(rank: usize) -> Self {
        Realization::new(CoxeterSystem::affine(rank))
    }

    pub fn nvars(&self) -> usize {
        match self.sys.kind {
            CoxKind::Finite => self.sys.rank,
            CoxKind::Affine => self.sys.rank + 1,
        }
    }

    pub fn x(&self, i: usize) -> Poly {
        assert!((1..=self.sys.rank).contains(&i));
        Poly::var(i - 1, self.nvars())
    }

    pub fn y(&self) -> Poly {
        assert_eq!(self.sys.kind, CoxKind::Affine);
        Poly::var(self.sys.rank, self.nvars())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.nvars())
    }

    pub fn int(&self, k: i64) -> Poly {
        Poly::int(k, self.nvars())
    }

    /// Simple root: alpha_i = x_i - x_{i+1} for i >= 1; alpha_0 = x_n - x_1 + y.
    pub fn simple_root(&self, s: Gen) -> Poly {
        let n = self.sys.rank;
        if s == 0 {
            assert_eq!(self.sys.kind, CoxKind::Affine);
            self.x(n).sub(&self.x(1)).add(&self.y())
        } else {
            let i = s as usize;
            assert!(i < n);
            self.x(i).sub(&self.x(i + 1))
        }
    }

    /// Coroot pairing <x_j, alpha_s^v>.
    pub fn coroot_pairing(&self, j: usize, s: Gen) -> i64 {
        let n = self.sys.rank;
        if s == 0 {
            // alpha_0^v = eps_n - eps_1
            if j == n {
                1
            } else if j == 1 {
                -1
            } else {
                0
            }
        } else {
            let i = s as usize;
            if j == i {
                1
            } else if j == i + 1 {
                -1
            } else {
                0
            }
        }
    }

    /// Images of all variables under a generator.
    fn gen_images(&self, s: Gen) -> Vec<Poly> {
        let n = self.sys.rank;
        let mut imgs: Vec<Poly> = (1..=n).map(|i| self.x(i)).collect();
        if s == 0 {
            assert_eq!(self.sys.kind, CoxKind::Affine);
            imgs[0] = self.x(n).add(&self.y()); // s_0(x_1) = x_n + y
            imgs[n - 1] = self.x(1).sub(&self.y()); // s_0(x_n) = x_1 - y
        } else {
            let i = s as usize;
            imgs.swap(i - 1, i);
        }
        if self.sys.kind == CoxKind::Affine {
            imgs.push(self.y()); // y is W-invariant
        }
        imgs
    }

    pub fn act_gen(&self, s: Gen, f: &Poly) -> Poly {
        f.substitute(&self.gen_images(s))
    }

    /// Left action w(f): letters applied right-to-left.
    pub fn act(&self, w: &CoxeterElement, f: &Poly) -> Poly {
        let mut acc = f.clone();
        for &s in w.word().iter().rev() {
            acc = self.act_gen(s, &acc);
        }
        acc
    }

    /// Divided difference: (f - s f) / alpha_s. Exact by construction.
    pub fn demazure(&self, s: Gen, f: &Poly) -> Poly {
        let num = f.sub(&self.act_gen(s, f));
        num.exact_div(&self.simple_root(s))
            .expect("Demazure division failed: action bug")
    }

    /// Iterated Demazure over a word; the word must be reduced (checked), and
    /// by the braid relations for this realization the result only depends on
    /// the underlying element.
    pub fn demazure_word(&self, word: &[Gen], f: &Poly) -> Poly {
        assert_eq!(
            self.sys.from_word(word).len(),
            word.len(),
            "demazure_word requires a reduced word"
        );
        let mut acc = f.clone();
        for &s in word.iter().rev() {
            acc = self.demazure(s, &acc);
        }
        acc
    }

    /// Frobenius trace: the Demazure operator of the relative longest element
    /// w_I^J, mapping R^J to R^I (J subset of I, I finitary).
    pub fn frobenius_trace(&self, i_set: &ParabolicSubset, j_set: &ParabolicSubset, f: &Poly) -> Poly {
        let rel = self.sys.relative_longest(i_set, j_set);
        self.demazure_word(rel.word(), f)
    }

    pub fn is_invariant(&self, s: Gen, f: &Poly) -> bool {
        self.act_gen(s, f) == *f
    }

    pub fn is_parabolic_invariant(&self, i_set: &ParabolicSubset, f: &Poly) -> bool {
        i_set.iter().all(|s| self.is_invariant(s, f))
    }

    /// Positive roots of a finitary parabolic subset: w(alpha_s) for w in W_I,
    /// s in I with ws > w.
    pub fn positive_roots(&self, i_set: &ParabolicSubset) -> Vec<Poly> {
        let mut roots = std::collections::BTreeSet::new();
        for w in self.sys.parabolic_elements(i_set) {
            for s in i_set.iter() {
                let ws = self.sys.mul_gen(&w, s, crate::coxeter::CosetSide::Right);
                if ws.len() > w.len() {
                    roots.insert(self.act(&w, &self.simple_root(s)).terms);
                }
            }
        }
        let out: Vec<Poly> = roots.into_iter().map(|terms| Poly { terms }).collect();
        let expected = self.sys.longest_element(i_set).len();
        assert_eq!(out.len(), expected, "positive root count mismatch");
        out
    }

    /// Product-coproduct invariant mu_I^J: product of the positive roots of I
    /// that are not roots of J.
    pub fn mu_invariant(&self, i_set: &ParabolicSubset, j_set: &ParabolicSubset) -> Poly {
        assert!(j_set.members.is_subset(&i_set.members));
        let roots_j: std::collections::BTreeSet<_> = self
            .positive_roots(j_set)
            .into_iter()
            .map(|p| p.terms)
            .collect();
        let mut mu = self.one();
        for r in self.positive_roots(i_set) {
            if !roots_j.contains(&r.terms) {
                mu = mu.mul(&r);
            }
        }
        mu
    }

    /// mu^{J,K}_I = product of positive roots of I in neither J nor K.
    pub fn mu_invariant_pair(
        &self,
        i_set: &ParabolicSubset,
        j_set: &ParabolicSubset,
        k_set: &ParabolicSubset,
    ) -> Poly {
        let in_j: std::collections::BTreeSet<_> =
            self.positive_roots(j_set).into_iter().map(|p| p.terms).collect();
        let in_k: std::collections::BTreeSet<_> =
            self.positive_roots(k_set).into_iter().map(|p| p.terms).collect();
        let mut mu = self.one();
        for r in self.positive_roots(i_set) {
            if !in_j.contains(&r.terms) && !in_k.contains(&r.terms) {
                mu = mu.mul(&r);
            }
        }
        mu
    }

    /// Dual bases for R over R^s with respect to the Demazure trace:
    /// ({b_i}, {b_i^*}) with d_s(b_i b_j^*) = delta_ij.
    /// Finite s_i: ({x_i, 1}, {1, -x_{i+1}}); affine s_0: ({x_n, 1}, {1, -(x_1 - y)}).
    pub fn dual_bases(&self, s: Gen) -> (Vec<Poly>, Vec<Poly>) {
        let n = self.sys.rank;
        if s == 0 {
            let basis = vec![self.x(n), self.one()];
            let dual = vec![self.one(), self.x(1).sub(&self.y()).neg()];
            (basis, dual)
        } else {
            let i = s as usize;
            let basis = vec![self.x(i), self.one()];
            let dual = vec![self.one(), self.x(i + 1).neg()];
            (basis, dual)
        }
    }

    /// Coproduct element Delta_s = sum_i b_i (x) b_i^* as a list of tensor pairs.
    pub fn coproduct_element(&self, s: Gen) -> Vec<(Poly, Poly)> {
        let (b, bd) = self.dual_bases(s);
        b.into_iter().zip(bd).collect()
    }

    /// Complete homogeneous symmetric polynomial h_p of the given values
    /// (h_p = 0 for p < 0, h_0 = 1).
    pub fn h_sym(&self, p: i64, vals: &[Poly]) -> Poly {
        if p < 0 {
            return Poly::zero();
        }
        let p = p as usize;
        // dp over variables: h_p(v_1..v_k)
        let mut table = vec![Poly::zero(); p + 1];
        table[0] = self.one();
        for v in vals {
            for d in 1..=p {
                let prev = table[d - 1].mul(v);
                table[d] = table[d].add(&prev);
            }
        }
        table[p].clone()
    }

    /// Elementary symmetric polynomial e_q (0 for q < 0 or q > #vals).
    pub fn e_sym(&self, q: i64, vals: &[Poly]) -> Poly {
        if q < 0 || q as usize > vals.len() {
            return Poly::zero();
        }
        let q = q as usize;
        let mut table = vec![Poly::zero(); q + 1];
        table[0] = self.one();
        for v in vals {
            for d in (1..=q).rev() {
                let prev = table[d - 1].mul(v);
                table[d] = table[d].add(&prev);
            }
        }
        table[q].clone()
    }

    /// Schur polynomial s_mu of the given values via Jacobi-Trudi
    /// (determinant of h_{mu_i - i + j}).
    pub fn schur(&self, mu: &[usize], vals: &[Poly]) -> Poly {
        let r = mu.len();
        if r == 0 {
            return self.one();
        }
        let mut mat = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in 0..r {
                let idx = mu[i] as i64 - i as i64 + j as i64;
                mat.push(self.h_sym(idx, vals));
            }
        }
        det_poly(&mat, r)
    }

    /// Dual bases for the edge extension R^I in R^J where I = J + {s}:
    /// a free R^I-basis {b_k} of R^J together with {b_k^*} satisfying
    /// d_I^J(b_k b_l^*) = delta_kl. The Gram solve must be unimodular; this is
    /// asserted at runtime.
    pub fn edge_dual_bases(
        &self,
        i_set: &ParabolicSubset,
        j_set: &ParabolicSubset,
    ) -> (Vec<Poly>, Vec<Poly>) {
        // the edge: I = J + {s}
        let extra: Vec<Gen> = i_set.members.difference(&j_set.members).copied().collect();
        assert_eq!(extra.len(), 1, "edge_dual_bases needs |I \\ J| = 1");
        let s = extra[0];
        // Identify the I-block containing s and its split into two J-blocks.
        let (block, split_at) = self.block_of(i_set, s);
        let b1: Vec<Poly> = block[..split_at].to_vec();
        let b2: Vec<Poly> = block[split_at..].to_vec();
        let (p, q) = (b1.len(), b2.len());
        // Free basis of R^J over R^I: Schur polynomials s_mu(first part) for mu
        // inside a p x q box.
        let mus = partitions_in_box(p, q);
        let basis: Vec<Poly> = mus.iter().map(|mu| self.schur(mu, &b1)).collect();
        let r = basis.len();
        // Gram matrix over R^I is forced scalar in complementary degrees; solve
        // for duals with polynomial coefficients by inverting over R^I.
        // deg b_k + deg b^*_l complementarity: choose candidate duals as the
        // complementary Schur basis and correct by the inverse Gram matrix.
        let trace = |f: &Poly| self.frobenius_trace(i_set, j_set, f);
        // Gram over R^I: G_{kl} = trace(b_k * b_l'): with b' the same basis.
        // We solve B* = (G^{-1})^T B over R^I via exact adjugate; unimodularity
        // is asserted by checking det in degree 0 and equal to +-1.
        let g: Vec<Poly> = (0..r * r)
            .map(|idx| trace(&basis[idx / r].mul(&basis[idx % r])))
            .collect();
        let (det, adj) = det_and_adjugate(&g, r);
        let det_const = det.constant_term();
        assert!(
            det == Poly::constant(det_const.clone(), self.nvars()) && det_const.abs().is_one(),
            "edge dual-basis Gram solve is not unimodular"
        );
        let sign = det_const; // +-1
        let mut duals = Vec::with_capacity(r);
        for l in 0..r {
            // b*_l = sum_k (G^{-1})_{lk} b_k ; G^{-1} = adj / det
            let mut acc = Poly::zero();
            for k in 0..r {
                let c = adj[l * r + k].scale_int(&sign); // adj/det with det = sign
                acc = acc.add(&c.mul(&basis[k]));
            }
            duals.push(acc);
        }
        // verify the dual-basis property exactly
        for k in 0..r {
            for l in 0..r {
                let t = trace(&basis[k].mul(&duals[l]));
                let expected = if k == l { self.one() } else { Poly::zero() };
                assert_eq!(t, expected, "dual basis property failed at ({}, {})", k, l);
            }
        }
        (basis, duals)
    }

    /// The (possibly cyclic) variable block of the I-component containing s,
    /// as polynomials, with the index at which removing s splits it.
    fn block_of(&self, i_set: &ParabolicSubset, s: Gen) -> (Vec<Poly>, usize) {
        let n = self.sys.rank;
        // connected component of s in the Dynkin graph restricted to I
        let mut comp = vec![s];
        loop {
            let mut grew = false;
            for t in i_set.iter() {
                if !comp.contains(&t)
                    && comp
                        .iter()
                        .any(|&u| self.sys.coxeter_m(u, t).map_or(true, |m| m == 3))
                {
                    comp.push(t);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        // Arrange the component as a path a, a+1, ..., a+k (indices mod n for
        // affine). Find the start: a generator whose predecessor is absent.
        let has = |g: i64| -> bool {
            let gg = g.rem_euclid(n as i64) as Gen;
            comp.contains(&gg)
        };
        let mut start = comp[0] as i64;
        for _ in 0..n {
            if has(start - 1) {
                start -= 1;
            } else {
                break;
            }
        }
        let k = comp.len(); // generators in the path
        // Variables: the path s_a, ..., s_{a+k-1} acts on k+1 consecutive
        // "virtual" variables starting at position a (x wraps with a -y shift
        // per full lap past n).
        let virt = |pos: i64| -> Poly {
            // variable x_j with j = ((pos - 1) mod n) + 1, shifted by -y per wrap
            let j = (pos - 1).rem_euclid(n as i64) as usize + 1;
            let wraps = (pos - 1).div_euclid(n as i64);
            let mut v = self.x(j);
            if wraps != 0 {
                assert_eq!(self.sys.kind, CoxKind::Affine);
                v = v.sub(&self.y().scale_int(&BigInt::from(wraps)));
            }
            v
        };
        let vars: Vec<Poly> = (start..=start + k as i64).map(virt).collect();
        // split: removing s separates variables [a..s] and [s+1..]
        let split_at = (s as i64 - start).rem_euclid(n as i64) as usize + 1;
        (vars, split_at)
    }
}

/// Determinant of an r x r polynomial matrix (row-major), by cofactor expansion.
pub fn det_poly(mat: &[Poly], r: usize) -> Poly {
    assert_eq!(mat.len(), r * r);
    if r == 0 {
        panic!("empty determinant");
    }
    if r == 1 {
        return mat[0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..r {
        if mat[j].is_zero() {
            continue;
        }
        let minor: Vec<Poly> = (1..r)
            .flat_map(|i| (0..r).filter(|&c| c != j).map(move |c| (i, c)))
            .map(|(i, c)| mat[i * r + c].clone())
            .collect();
        let cof = det_poly(&minor, r - 1).mul(&mat[j]);
        if j % 2 == 0 {
            acc = acc.add(&cof);
        } else {
            acc = acc.sub(&cof);
        }
    }
    acc
}

/// Determinant and adjugate (transpose of cofactor matrix), row-major.
pub fn det_and_adjugate(mat: &[Poly], r: usize) -> (Poly, Vec<Poly>) {
    let det = det_poly(mat, r);
    let mut adj = vec![Poly::zero(); r * r];
    for i in 0..r {
        for j in 0..r {
            let minor: Vec<Poly> = (0..r)
                .filter(|&a| a != i)
                .flat_map(|a| (0..r).filter(|&b| b != j).map(move |b| (a, b)))
                .map(|(a, b)| mat[a * r + b].clone())
                .collect();
            let m = if r == 1 {
                Poly::constant(BigInt::from(1), 0)
            } else {
                det_poly(&minor, r - 1)
            };
            let m = if (i + j) % 2 == 0 { m } else { m.neg() };
            adj[j * r + i] = m; // transpose
        }
    }
    (det, adj)
}

fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    // weakly decreasing sequences of length <= rows with entries <= cols,
    // padded variably; ordered by size then lex for determinism
    fn rec(rows: usize, maxpart: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(acc.clone());
        if rows == 0 {
            return;
        }
        for p in (1..=maxpart).rev() {
            acc.push(p);
            rec(rows - 1, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort_by_key(|mu| (mu.iter().sum::<usize>(), mu.clone()));
    out
}

/// A generic exact-division helper for coefficient polynomials over any
/// coefficient domain, dividing by an integer polynomial with unit lead.
pub fn exact_div_unit_lead<C: Coeff>(f: &MultiPoly<C>, divisor: &Poly) -> Option<MultiPoly<C>> {
    f.exact_div_by_int_poly(divisor)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_examples() {
        let r = Realization::finite(3);
        assert_eq!(r.act_gen(1, &r.x(1)), r.x(2));
        let ra = Realization::affine(3);
        assert_eq!(ra.act_gen(0, &ra.x(1)), ra.x(3).add(&ra.y()));
        assert_eq!(ra.act_gen(0, &ra.x(3)), ra.x(1).sub(&ra.y()));
        // s_0(alpha_0) = -alpha_0
        let a0 = ra.simple_root(0);
        assert_eq!(ra.act_gen(0, &a0), a0.neg());
    }

    #[test]
    fn action_is_ring_hom() {
        let r = Realization::affine(2);
        let f = r.x(1).mul(&r.x(2)).add(&r.y().pow(2));
        let g = r.x(1).sub(&r.int(3));
        let w = r.sys.from_word(&[0, 1, 0]);
        assert_eq!(r.act(&w, &f.mul(&g)), r.act(&w, &f).mul(&r.act(&w, &g)));
    }

    #[test]
    fn demazure_examples() {
        let r = Realization::finite(3);
        assert_eq!(r.demazure(1, &r.x(1)), r.one());
        let a1 = r.simple_root(1);
        assert_eq!(r.demazure(1, &a1), r.int(2));
        assert_eq!(r.demazure(1, &r.int(5)), Poly::zero());
        // d_s^2 = 0
        let f = r.x(1).pow(3).mul(&r.x(2));
        assert_eq!(r.demazure(1, &r.demazure(1, &f)), Poly::zero());
    }

    #[test]
    fn twisted_leibniz() {
        for r in [Realization::finite(3), Realization::affine(2)] {
            let gens = r.sys.generators();
            let f = r.x(1).pow(2).add(&r.x(2));
            let g = r.x(1).mul(&r.x(2)).add(&r.int(1));
            for &s in &gens {
                let lhs = r.demazure(s, &f.mul(&g));
                let rhs = r
                    .demazure(s, &f)
                    .mul(&g)
                    .add(&r.act_gen(s, &f).mul(&r.demazure(s, &g)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn braid_relation_for_demazure() {
        let r = Realization::finite(3);
        // monomials of degree <= 8 (exponent sum <= 4) in 3 vars
        for a in 0..=4u16 {
            for b in 0..=4 - a {
                for c in 0..=4 - a - b {
                    let mut p = Poly::zero();
                    p.add_term(vec![a, b, c], BigInt::from(1));
                    let lhs = r.demazure(1, &r.demazure(2, &r.demazure(1, &p)));
                    let rhs = r.demazure(2, &r.demazure(1, &r.demazure(2, &p)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn demazure_word_reduced_independence() {
        for (r, maxlen) in [(Realization::finite(4), 5usize), (Realization::affine(3), 5)] {
            let elts = r.sys.enumerate_up_to_length(maxlen);
            let f = r.x(1).pow(2).mul(&r.x(2)).add(&r.x(1).mul(&r.x(2).mul(&r.x(3))));
            for w in elts.iter().filter(|w| w.len() <= maxlen) {
                // find all reduced words by BFS over braid moves of the canonical word
                let canon = r.demazure_word(w.word(), &f);
                // a second reduced word: reverse of the inverse's canonical word
                let mut alt = r.sys.inverse(w).word().to_vec();
                alt.reverse();
                assert_eq!(r.demazure_word(&alt, &f), canon, "w = {:?}", w);
            }
        }
    }

    #[test]
    fn frobenius_trace_examples() {
        let r = Realization::finite(3);
        let full = ParabolicSubset::new([1, 2]);
        let empty = ParabolicSubset::empty();
        // top Schubert class x1^2 x2 has trace 1
        let top = r.x(1).pow(2).mul(&r.x(2));
        assert_eq!(r.frobenius_trace(&full, &empty, &top), r.one());
        // d^{emptyset}_{{s}} = d_s
        let i1 = ParabolicSubset::new([1]);
        let f = r.x(1).pow(2);
        assert_eq!(r.frobenius_trace(&i1, &empty, &f), r.demazure(1, &f));
    }

    #[test]
    fn trace_compatibility() {
        // d^J_K o d^I_J = d^I_K on R^I-elements: here I c J c K ordering is
        // K c J c I in subset terms; check on random symmetric-ish elements.
        let r = Realization::finite(4);
        let k = ParabolicSubset::empty();
        let j = ParabolicSubset::new([1]);
        let i = ParabolicSubset::new([1, 2]);
        let f = r.x(1).mul(&r.x(2)).mul(&r.x(3)).add(&r.x(4).pow(3));
        let via_j = r.frobenius_trace(&i, &j, &r.frobenius_trace(&j, &k, &f));
        let direct = r.frobenius_trace(&i, &k, &f);
        assert_eq!(via_j, direct);
    }

    #[test]
    fn roots_and_mu() {
        let r = Realization::finite(3);
        let i1 = ParabolicSubset::new([1]);
        let full = ParabolicSubset::new([1, 2]);
        assert_eq!(r.mu_invariant(&i1, &ParabolicSubset::empty()), r.simple_root(1));
        // mu_{st}^{s} = alpha_t (alpha_s + alpha_t) for m = 3
        let mu = r.mu_invariant(&full, &i1);
        let expected = r
            .simple_root(2)
            .mul(&r.simple_root(1).add(&r.simple_root(2)));
        assert_eq!(mu, expected);
        assert_eq!(r.mu_invariant(&full, &full), r.one());
        // degree 2(l(I) - l(J))
        assert_eq!(mu.degree(), Some(4));
    }

    #[test]
    fn dual_bases_single() {
        let r = Realization::finite(3);
        let (b, bd) = r.dual_bases(1);
        for (i, bi) in b.iter().enumerate() {
            for (j, bj) in bd.iter().enumerate() {
                let t = r.demazure(1, &bi.mul(bj));
                let expected = if i == j { r.one() } else { Poly::zero() };
                assert_eq!(t, expected);
            }
        }
        // coproduct element pairs to alpha_s under p_e and 0 under p_s
        let delta = r.coproduct_element(1);
        let p_e: Poly = delta
            .iter()
            .fold(Poly::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
        let p_s: Poly = delta
            .iter()
            .fold(Poly::zero(), |acc, (a, b)| acc.add(&a.mul(&r.act_gen(1, b))));
        assert_eq!(p_e, r.simple_root(1));
        assert!(p_s.is_zero());
    }

    #[test]
    fn symmetric_functions() {
        let r = Realization::finite(3);
        let vars = vec![r.x(1), r.x(2), r.x(3)];
        assert_eq!(r.h_sym(0, &vars), r.one());
        assert_eq!(r.e_sym(4, &vars), Poly::zero());
        // Newton-ish check: h2 - h1 e1 + e2 = 0 on 1 variable fails, use 3 vars identity
        // h2 = e1 h1 - e2 (for any number of variables)
        let h2 = r.h_sym(2, &vars);
        let rhs = r.e_sym(1, &vars).mul(&r.h_sym(1, &vars)).sub(&r.e_sym(2, &vars));
        assert_eq!(h2, rhs);
    }

    #[test]
    fn edge_dual_bases_rank2() {
        // R^{st} c R^{s} in S_3: rank 3 extension
        let r = Realization::finite(3);
        let i = ParabolicSubset::new([1, 2]);
        let j = ParabolicSubset::new([1]);
        let (b, _bd) = r.edge_dual_bases(&i, &j);
        assert_eq!(b.len(), 3);
        // and the simplest edge: R^s c R
        let (b2, _) = r.edge_dual_bases(&ParabolicSubset::new([1]), &ParabolicSubset::empty());
        assert_eq!(b2.len(), 2);
    }

    #[test]
    fn edge_dual_bases_affine_block() {
        // affine rank 3: I = {s_0} crossing the wrap; R^{s0} c R
        let r = Realization::affine(3);
        let i = ParabolicSubset::new([0]);
        let j = ParabolicSubset::empty();
        let (b, bd) = r.edge_dual_bases(&i, &j);
        assert_eq!(b.len(), 2);
        // property is already asserted inside; spot-check degrees
        assert!(b.iter().zip(&bd).all(|(x, y)| {
            let d = x.degree().unwrap_or(0) + y.degree().unwrap_or(0);
            d == 2
        }));
    }

    #[test]
    fn affine_identities_specialize_at_y_zero() {
        let ra = Realization::affine(3);
        let rf = Realization::finite(3);
        // d_1 agrees after killing y
        let f = ra.x(1).pow(2).mul(&ra.x(3));
        let d = ra.demazure(1, &f);
        let kill_y = |p: &Poly| -> Poly {
            let imgs: Vec<Poly> = (1..=3)
                .map(|i| ra.x(i))
                .chain(std::iter::once(Poly::zero().add(&Poly::int(0, 4))))
                .collect();
            p.substitute(&imgs)
        };
        let d0 = kill_y(&d);
        // compare term-by-term against the finite computation (3-var monomials padded)
        let f_fin = rf.x(1).pow(2).mul(&rf.x(3));
        let d_fin = rf.demazure(1, &f_fin);
        let pad = |p: &Poly| -> Poly {
            let mut out = Poly::zero();
            for (m, c) in &p.terms {
                let mut mm = m.clone();
                mm.push(0);
                out.add_term(mm, c.clone());
            }
            out
        };
        assert_eq!(d0, pad(&d_fin));
    }
}
