//! Laurent polynomials in one variable `v` over the integers.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An element of Z[v, v^-1], stored as a finitely supported exponent -> coefficient map.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `c * v^k`
    pub fn monomial(exp: i32, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn v(exp: i32) -> Self {
        LaurentPoly::monomial(exp, 1)
    }

    pub fn from_const(c: i64) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn set(&mut self, exp: i32, c: i64) {
        if c == 0 {
            self.coeffs.remove(&exp);
        } else {
            self.coeffs.insert(exp, c);
        }
    }

    pub fn add_term(&mut self, exp: i32, c: i64) {
        let new = self.coeff(exp).checked_add(c).expect("laurent overflow");
        self.set(exp, new);
    }

    /// The bar involution v -> v^-1.
    pub fn bar(&self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&e, &c) in &self.coeffs {
            out.set(-e, c);
        }
        out
    }

    /// Multiply by v^k.
    pub fn shift(&self, k: i32) -> Self {
        let mut out = LaurentPoly::zero();
        for (&e, &c) in &self.coeffs {
            out.set(e + k, c);
        }
        out
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// True if supported in strictly positive exponents (v Z[v]).
    pub fn in_v_zv(&self) -> bool {
        self.coeffs.keys().all(|&e| e > 0)
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// `v + v^-1` style quantum integer [n] = v^{n-1} + v^{n-3} + ... + v^{1-n}.
    pub fn quantum_int(n: u32) -> Self {
        let mut out = LaurentPoly::zero();
        let n = n as i32;
        let mut e = n - 1;
        while e >= 1 - n {
            out.add_term(e, 1);
            e -= 2;
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.coeffs {
            self.add_term(e, -c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e, &c) in &self.coeffs {
            out.set(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("laurent overflow"));
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest power first
        for (&e, &c) in self.coeffs.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{}", a)?,
                1 => {
                    if a == 1 {
                        write!(f, "v")?
                    } else {
                        write!(f, "{}v", a)?
                    }
                }
                _ => {
                    if a == 1 {
                        write!(f, "v^{}", e)?
                    } else {
                        write!(f, "{}v^{}", a, e)?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_basics() {
        let a = LaurentPoly::v(1);
        let b = LaurentPoly::v(-1);
        let s = &a + &b;
        assert_eq!(s, LaurentPoly::quantum_int(2));
        assert_eq!((&s * &s).coeff(0), 2);
        assert_eq!(s.eval_at_one(), 2);
        assert!(s.is_bar_invariant());
    }

    #[test]
    fn display_is_readable() {
        let p = &LaurentPoly::v(2) - &LaurentPoly::from_const(3);
        assert_eq!(format!("{}", p), "v^2 - 3");
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-5i32..=5, -20i64..=20), 0..6).prop_map(|ts| {
            let mut p = LaurentPoly::zero();
            for (e, c) in ts {
                p.add_term(e, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn bar_is_involutive(p in arb_laurent()) {
            prop_assert_eq!(p.bar().bar(), p);
        }

        #[test]
        fn bar_is_multiplicative(p in arb_laurent(), q in arb_laurent()) {
            prop_assert_eq!((&p * &q).bar(), &p.bar() * &q.bar());
        }
    }
}
