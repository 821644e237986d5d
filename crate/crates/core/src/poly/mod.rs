//! Exact multivariate polynomial ring for the gl_n and affine realizations.
//!
//! Variables are x_1..x_n plus, in the affine case, the null-root variable y
//! stored at index n. Every variable has degree 2.

pub mod coeff;
pub mod ratfunc;
pub mod realization;

pub use coeff::{Coeff, FieldCoeff, Fp, LinExpr, RingCoeff};
pub use ratfunc::RatFunc;
pub use realization::Realization;

use num::bigint::BigInt;
use num::{One, Signed};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector; length = number of variables of the ambient ring.
pub type Monomial = Vec<u16>;

/// Sparse multivariate polynomial with coefficients in `C`. Monomials are kept
/// in the BTreeMap's (graded-compatible) lexicographic order with no zero terms.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<C: Coeff> {
    pub terms: BTreeMap<Monomial, C>,
}

/// Integer-coefficient polynomial, the workhorse type.
pub type Poly = MultiPoly<BigInt>;

impl<C: Coeff> Default for MultiPoly<C> {
    fn default() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let new = old.add(&c);
                if new.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = new;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if *k == BigInt::from(0) {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul_int(k));
        }
        out
    }

    /// Multiply by an integer-coefficient polynomial (valid for every
    /// coefficient domain, including unknown-linear ones).
    pub fn mul_int_poly(&self, other: &Poly) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(mono_mul(m1, m2), c1.mul_int(c2));
            }
        }
        out
    }

    /// Total degree in the grading where every variable has degree 2.
    pub fn degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| 2 * m.iter().map(|&e| e as i64).sum::<i64>())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.iter().map(|&e| e as i64).sum::<i64>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn constant_term(&self) -> C {
        let nvars = self.terms.keys().next().map_or(0, |m| m.len());
        self.terms
            .get(&vec![0u16; nvars])
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Exact division by an integer-coefficient divisor whose leading
    /// coefficient is +-1. Returns None when the division is not exact.
    pub fn exact_div_by_int_poly(&self, divisor: &Poly) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (lead_m, lead_c) = divisor.terms.iter().next_back().unwrap();
        assert!(
            lead_c.abs().is_one(),
            "divisor leading coefficient must be a unit: {:?}",
            divisor
        );
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = mono_div(&m, lead_m)?;
            let qc = if lead_c.is_negative() { c.neg() } else { c };
            quot.add_term(qm.clone(), qc.clone());
            // rem -= qc * x^qm * divisor
            let mut single = Self::zero();
            single.add_term(qm, qc);
            rem = rem.sub(&single.mul_int_poly(divisor));
        }
        Some(quot)
    }
}

impl<C: RingCoeff> MultiPoly<C> {
    pub fn constant(c: C, nvars: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![0u16; nvars], c);
        p
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut m = vec![0u16; nvars];
        m[i] = 1;
        let mut p = Self::zero();
        p.add_term(m, C::one());
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(mono_mul(m1, m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let nvars = self.terms.keys().next().map_or(0, |m| m.len());
        let mut acc = Self::constant(C::one(), nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Poly {
    pub fn one(nvars: usize) -> Self {
        Self::constant(BigInt::from(1), nvars)
    }

    pub fn int(k: i64, nvars: usize) -> Self {
        Self::constant(BigInt::from(k), nvars)
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.len())
    }

    /// Exact division over the integers (general leading coefficients); None
    /// when not exactly divisible.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero());
        let (lead_m, lead_c) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = mono_div(&m, lead_m)?;
            if (&c % lead_c) != BigInt::from(0) {
                return None;
            }
            let qc = &c / lead_c;
            quot.add_term(qm.clone(), qc.clone());
            let mut single = Poly::zero();
            single.add_term(qm, qc);
            rem = rem.sub(&single.mul(divisor));
        }
        Some(quot)
    }

    /// Substitute polynomials for each variable.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let nvars = images.len();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone(), nvars);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e as usize));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Reduce coefficients mod p (p prime).
    pub fn reduce_mod_p(&self, p: u64) -> MultiPoly<Fp> {
        assert!(is_prime(p), "modulus {} is not prime", p);
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), Fp::from_bigint(c, p));
        }
        out
    }

    pub fn to_rational(&self) -> MultiPoly<num::BigRational> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), num::BigRational::from_integer(c.clone()));
        }
        out
    }

    /// Normalize sign so the leading coefficient is positive; returns the sign
    /// applied (+1 or -1).
    pub fn normalize_sign(&self) -> (Poly, i8) {
        match self.terms.iter().next_back() {
            Some((_, c)) if c.is_negative() => (self.neg(), -1),
            _ => (self.clone(), 1),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    assert_eq!(a.len(), b.len(), "mixed variable arity");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    if a.len() != b.len() {
        return None;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y))
        .collect::<Option<Vec<_>>>()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let nvars = self.nvars().unwrap();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = if i + 1 == nvars && e > 0 && i >= 1 && is_y_slot(nvars, i) {
                        "y".to_string()
                    } else {
                        format!("x{}", i + 1)
                    };
                    if e == 1 {
                        name
                    } else {
                        format!("{}^{}", name, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", a, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

// Display cannot know whether the last slot is y; callers that care print
// through Realization. Here we guess "no y" to keep output unambiguous.
fn is_y_slot(_nvars: usize, _i: usize) -> bool {
    false
}
