//! Degree bookkeeping for the quiver-Hecke crossings as realized in the
//! singular Soergel picture.

use super::{Weight, WeightCtx};
use crate::coxeter::CoxKind;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossingKind {
    /// F_j F_j
    SameColor,
    /// F_j F_i with j = i +- 1 (e > 2)
    Adjacent,
    /// F_k F_i with distant colors
    Distant,
    /// the e = 2 crossing of the two colors
    Funky,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossingDegree {
    /// source or target 1-morphism vanishes: the crossing is the zero map
    ZeroMap,
    Deg(i32),
}

/// Degree of the crossing F_j F_i 1_lambda -> F_i F_j 1_lambda per the tables:
/// same-color -2, adjacent +1, distant 0, funky (e = 2) +2, with explicit
/// zero-map detection from the weight configuration.
pub fn crossing_degree(
    ctx: &WeightCtx,
    kind: CrossingKind,
    lambda: &Weight,
    i: i64,
    j: i64,
) -> CrossingDegree {
    let fi_fj = ctx
        .littelmann_f(lambda, i)
        .and_then(|m| ctx.littelmann_f(&m, j));
    let fj_fi = ctx
        .littelmann_f(lambda, j)
        .and_then(|m| ctx.littelmann_f(&m, i));
    match kind {
        CrossingKind::SameColor => {
            assert_eq!(i, j);
            if fi_fj.is_none() {
                CrossingDegree::ZeroMap
            } else {
                CrossingDegree::Deg(-2)
            }
        }
        CrossingKind::Adjacent => {
            assert_ne!(i, j);
            // target F_i F_j vanishes => zero map (source may be nonzero)
            if fj_fi.is_none() {
                CrossingDegree::ZeroMap
            } else {
                CrossingDegree::Deg(1)
            }
        }
        CrossingKind::Distant => {
            debug_assert!(fi_fj.is_some() == fj_fi.is_some());
            if fj_fi.is_none() {
                CrossingDegree::ZeroMap
            } else {
                CrossingDegree::Deg(0)
            }
        }
        CrossingKind::Funky => {
            assert_eq!(ctx.e, 2);
            assert_eq!(ctx.kind, CoxKind::Affine);
            // a = even entries, b = odd entries: either zero kills the crossing
            let a = lambda.0.iter().filter(|&&x| x.rem_euclid(2) == 0).count();
            let b = ctx.n - a;
            if a == 0 || b == 0 || fj_fi.is_none() {
                CrossingDegree::ZeroMap
            } else {
                CrossingDegree::Deg(2)
            }
        }
    }
}
