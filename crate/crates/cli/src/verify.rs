//! The verify subcommand: fast self-checks by default, the slower
//! acceptance-grade computations with --full.

use crate::CmdError;
use pkl_core::coxeter::{CoxKind, CoxeterSystem};
use pkl_core::fock::crystal::{crystal, CrystalOp, ReadingOrder};
use pkl_core::fock::{Multicharge, Multipartition};
use pkl_core::poly::Realization;
use pkl_core::soergel::gram::Mode;
use pkl_core::soergel::leaves::LeafCtx;
use pkl_core::soergel::pcan::PCanCtx;
use pkl_core::soergel::subexpr::subexpressions;
use pkl_core::weights::dots::{verify_dot_properties, DotFamily};
use pkl_core::weights::{bubble, bubble_demazure_oracle, BubbleMode, Weight, WeightCtx};

pub fn run(full: bool) -> Result<(), CmdError> {
    let mut all_ok = true;
    let mut check = |name: &str, ok: bool| {
        println!("{} {}", if ok { "PASS" } else { "FAIL" }, name);
        all_ok &= ok;
    };

    check("worked crystal example (e=2, charges (11,0))", worked_example());
    check("Littelmann replays", littelmann());
    check("bubble closed forms vs Demazure oracle", bubbles());
    check("dot-family conformance (n<=3)", dots());
    check("hom formula, S_3 words of total length <= 6", hom_formula(6));
    if full {
        check(
            "rational p-canonical = KL (S_3 exhaustive, affine rank 2 length <= 6)",
            pcan_oracle(),
        );
    }
    if all_ok {
        Ok(())
    } else {
        Err(CmdError::Consistency("verification failed".into()))
    }
}

fn worked_example() -> bool {
    let l = Multipartition::new(vec![vec![2, 2], vec![3, 1, 1, 1]]);
    let ch = Multicharge::new(2, vec![11, 0]);
    let o = ReadingOrder::Schur;
    let mp = |s: &str| Multipartition::parse(s).ok();
    crystal(CrystalOp::F, &l, &ch, 1, o) == mp("2,2|4,1,1,1")
        && crystal(CrystalOp::E, &l, &ch, 1, o) == mp("2,2|3,1,1")
        && crystal(CrystalOp::EStar, &l, &ch, 1, o).is_none()
        && crystal(CrystalOp::FStar, &l, &ch, 1, o) == mp("2,2,1|3,1,1,1")
        && crystal(CrystalOp::E, &l, &ch, 0, o).is_none()
        && crystal(CrystalOp::F, &l, &ch, 0, o) == mp("2,2|3,1,1,1,1")
        && crystal(CrystalOp::EStar, &l, &ch, 0, o) == mp("2,2|2,1,1,1")
        && crystal(CrystalOp::FStar, &l, &ch, 0, o) == mp("2,2|3,2,1,1")
}

fn littelmann() -> bool {
    let fin = WeightCtx::finite(5, 3);
    let w = Weight(vec![1, 2, 2, 3, 3]);
    let ok1 = fin.littelmann_f(&w, 2) == Some(Weight(vec![1, 2, 3, 3, 3]))
        && fin.littelmann_f_pow(&w, 2, 2) == Some(Weight(vec![1, 3, 3, 3, 3]))
        && fin.littelmann_f_pow(&w, 2, 3).is_none();
    let aff = WeightCtx::affine(6, 3);
    let chain = [
        vec![0, 0, 0, 2, 3, 3],
        vec![0, 0, 1, 2, 3, 3],
        vec![0, 1, 1, 2, 3, 3],
        vec![1, 1, 1, 2, 3, 3],
        vec![1, 1, 1, 2, 3, 4],
        vec![1, 1, 1, 2, 4, 4],
    ];
    let ok2 = chain
        .windows(2)
        .all(|p| aff.littelmann_f(&Weight(p[0].clone()), 0) == Some(Weight(p[1].clone())));
    ok1 && ok2
}

fn bubbles() -> bool {
    for (a, b) in [(1usize, 1usize), (2, 1), (1, 2)] {
        let real = Realization::finite(a + 1 + b);
        for m in 0..4i64 {
            if bubble(&real, m, a, b, BubbleMode::Pi)
                != bubble_demazure_oracle(&real, m, a, b, BubbleMode::Pi).unwrap()
            {
                return false;
            }
        }
        for m in 2..5i64 {
            if bubble(&real, m, a, b, BubbleMode::Xi)
                != bubble_demazure_oracle(&real, m, a, b, BubbleMode::Xi).unwrap()
            {
                return false;
            }
        }
    }
    true
}

fn dots() -> bool {
    for (kind, n, e) in [
        (CoxKind::Finite, 3usize, 2i64),
        (CoxKind::Finite, 3, 3),
        (CoxKind::Affine, 2, 2),
        (CoxKind::Affine, 3, 3),
    ] {
        let (ctx, real) = match kind {
            CoxKind::Finite => (WeightCtx::finite(n, e), Realization::finite(n)),
            CoxKind::Affine => (WeightCtx::affine(n, e), Realization::affine(n)),
        };
        let fam = DotFamily::standard(&real);
        if !verify_dot_properties(&fam, &ctx, &real).passed() {
            return false;
        }
    }
    true
}

fn hom_formula(total: usize) -> bool {
    let sys = CoxeterSystem::finite(3);
    let hecke = pkl_core::hecke::HeckeCtx::new(sys);
    let gens = [1u8, 2];
    let words = |len: usize| -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    gens.iter().map(move |&g| {
                        let mut v = w.clone();
                        v.push(g);
                        v
                    })
                })
                .collect();
        }
        out
    };
    for la in 0..=total {
        for lb in 0..=(total - la) {
            for u in words(la) {
                for w in words(lb) {
                    let pairing =
                        hecke.standard_pairing(&hecke.bs_character(&u), &hecke.bs_character(&w));
                    let mut count = pkl_core::laurent::LaurentPoly::zero();
                    for eu in subexpressions(&sys, &u, None) {
                        for ew in subexpressions(&sys, &w, None) {
                            if eu.target == ew.target {
                                count.add_term((eu.defect + ew.defect) as i32, 1);
                            }
                        }
                    }
                    if pairing != count {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn pcan_oracle() -> bool {
    for (real, bound) in [(Realization::finite(3), 3usize), (Realization::affine(2), 6)] {
        let sys = real.sys;
        let ctx = PCanCtx::new(LeafCtx::new(real));
        for w in sys.enumerate_up_to_length(bound) {
            let p = ctx.p_canonical(&w, Mode::Rational);
            if p.to_hecke() != ctx.leaf.hecke.kl_basis(&w) {
                return false;
            }
        }
    }
    true
}
