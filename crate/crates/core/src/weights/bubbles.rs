//! Bubble polynomials: closed symmetric-function forms and the Demazure-trace
//! oracle for the circle evaluations.
//!
//! Conventions: the configuration has a+1 copies of the color i and b copies
//! of i+1; variables y_1..y_a, f, z_1..z_b sit at x_1..x_n with n = a+1+b.
//! pi_m = (-1)^{m+b} sum_{p+q=m+b-a} (-1)^p h_p(y,f) e_q(z), and the xi family
//! is its series inverse, xi_m = (-1)^{m+b} sum_{p+q=m+a-b} (-1)^p h_p(z)
//! e_q(y,f); both degenerate to (-1)^a when the defining index hits zero.

use crate::coxeter::ParabolicSubset;
use crate::poly::{Poly, Realization};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BubbleMode {
    Pi,
    Xi,
}

/// Closed-form bubble polynomial in the realization S_n, n = a + 1 + b.
pub fn bubble(real: &Realization, m: i64, a: usize, b: usize, mode: BubbleMode) -> Poly {
    assert_eq!(real.sys.rank, a + 1 + b, "rank must be a + 1 + b");
    let ys: Vec<Poly> = (1..=a).map(|i| real.x(i)).collect();
    let f = real.x(a + 1);
    let zs: Vec<Poly> = (a + 2..=a + 1 + b).map(|i| real.x(i)).collect();
    let mut yf = ys.clone();
    yf.push(f);
    match mode {
        BubbleMode::Pi => {
            let n = m + b as i64 - a as i64;
            if n < 0 {
                return Poly::zero();
            }
            let mut acc = Poly::zero();
            for p in 0..=n {
                let q = n - p;
                let term = real.h_sym(p, &yf).mul(&real.e_sym(q, &zs));
                acc = if p % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            if (m + b as i64).rem_euclid(2) == 1 {
                acc = acc.neg();
            }
            acc
        }
        BubbleMode::Xi => {
            let n = m + a as i64 - b as i64;
            if n < 0 {
                return Poly::zero();
            }
            let mut acc = Poly::zero();
            for p in 0..=n {
                let q = n - p;
                let term = real.h_sym(p, &zs).mul(&real.e_sym(q, &yf));
                acc = if p % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            if (m + b as i64).rem_euclid(2) == 1 {
                acc = acc.neg();
            }
            acc
        }
    }
}

/// Direct Demazure evaluation of the bubble circles.
///
/// Pi: the clockwise circle, d^L_{Ls}(f^m mu^L_{Lt}) with L the common
/// stabilizer, s = s_a joining f into the y-block, mu^L_{Lt} = prod (f - z_j).
///
/// Xi: the counterclockwise circle, d^K_{Ku}(g^m mu^K_{Kt}) with g = z_1,
/// K = S_{a+1}(y,f) x S_{b-1}(z_2..z_b), u = s_{a+2}, and mu^K_{Kt} =
/// prod_{v in (y,f)} (v - g). The circle with m dots carries the fake-bubble
/// index normalization xi_m = -circle(m - 2); `bubble_demazure_oracle`
/// returns the circle value at the already-normalized index, so it can be
/// compared directly with `bubble`.
pub fn bubble_demazure_oracle(
    real: &Realization,
    m: i64,
    a: usize,
    b: usize,
    mode: BubbleMode,
) -> Option<Poly> {
    assert_eq!(real.sys.rank, a + 1 + b);
    let n = a + 1 + b;
    match mode {
        BubbleMode::Pi => {
            if m < 0 {
                return None; // circles need honest dot counts
            }
            let f = real.x(a + 1);
            let mut op = f.pow(m as usize);
            for jz in a + 2..=n {
                op = op.mul(&f.sub(&real.x(jz)));
            }
            // trace from L up to Ls: relative longest of S_{a+1}(y,f) over S_a(y)
            let l_set = block_parabolic(1, a).union_with(&block_parabolic(a + 2, n));
            let ls_set = block_parabolic(1, a + 1).union_with(&block_parabolic(a + 2, n));
            Some(real.frobenius_trace(&ls_set, &l_set, &op))
        }
        BubbleMode::Xi => {
            let mdots = m - 2;
            if mdots < 0 || b == 0 {
                return None;
            }
            let g = real.x(a + 2);
            let mut op = g.pow(mdots as usize);
            for jy in 1..=a + 1 {
                op = op.mul(&real.x(jy).sub(&g));
            }
            let k_set = block_parabolic(1, a + 1).union_with(&block_parabolic(a + 3, n));
            let ku_set = block_parabolic(1, a + 1).union_with(&block_parabolic(a + 2, n));
            Some(real.frobenius_trace(&ku_set, &k_set, &op).neg())
        }
    }
}

/// Generators of the symmetric group on positions lo..=hi (1-indexed block).
fn block_parabolic(lo: usize, hi: usize) -> ParabolicSubset {
    if hi <= lo {
        return ParabolicSubset::empty();
    }
    ParabolicSubset::new((lo..hi).map(|i| i as u8))
}

trait UnionWith {
    fn union_with(&self, other: &ParabolicSubset) -> ParabolicSubset;
}

impl UnionWith for ParabolicSubset {
    fn union_with(&self, other: &ParabolicSubset) -> ParabolicSubset {
        ParabolicSubset::new(self.members.union(&other.members).copied())
    }
}
