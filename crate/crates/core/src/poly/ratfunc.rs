//! Rational functions whose denominators are products of (orbit-of-simple-)
//! root factors, kept factored. Reduction only ever needs exact division by a
//! linear irreducible factor, so no general multivariate gcd is required.

use super::{Monomial, Poly};
use num::bigint::BigInt;
use std::collections::BTreeMap;

/// num / prod factor^mult, with each factor primitive and sign-normalized so
/// its leading coefficient is positive.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    pub num: Poly,
    pub den: BTreeMap<BTreeMap<Monomial, BigInt>, u32>,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn den_poly(&self) -> Poly {
        let mut d = match self.num.nvars() {
            Some(n) => Poly::one(n),
            None => {
                // numerator zero: use any factor to size, else 0-var one
                match self.den.keys().next() {
                    Some(f) => Poly::one(f.keys().next().map_or(0, |m| m.len())),
                    None => Poly::one(0),
                }
            }
        };
        for (f, &k) in &self.den {
            let fp = Poly { terms: f.clone() };
            for _ in 0..k {
                d = d.mul(&fp);
            }
        }
        d
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        loop {
            let mut progressed = false;
            let factors: Vec<_> = self.den.keys().cloned().collect();
            for f in factors {
                let fp = Poly { terms: f.clone() };
                while self.den.get(&f).copied().unwrap_or(0) > 0 {
                    match self.num.exact_div(&fp) {
                        Some(q) => {
                            self.num = q;
                            let k = self.den.get_mut(&f).unwrap();
                            *k -= 1;
                            if *k == 0 {
                                self.den.remove(&f);
                            }
                            progressed = true;
                        }
                        None => break,
                    }
                }
            }
            if !progressed {
                return self;
            }
        }
    }

    /// 1 / factor (factor normalized to positive leading coefficient).
    pub fn inv_factor(factor: &Poly) -> Self {
        let (norm, sign) = factor.normalize_sign();
        let mut den = BTreeMap::new();
        den.insert(norm.terms.clone(), 1);
        let nvars = norm.nvars().unwrap();
        let num = if sign < 0 {
            Poly::int(-1, nvars)
        } else {
            Poly::one(nvars)
        };
        RatFunc { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // common denominator: factorwise max multiplicity
        let mut den: BTreeMap<BTreeMap<Monomial, BigInt>, u32> = self.den.clone();
        for (f, &k) in &other.den {
            let e = den.entry(f.clone()).or_insert(0);
            *e = (*e).max(k);
        }
        let scale = |x: &RatFunc| -> Poly {
            let mut p = x.num.clone();
            for (f, &k) in &den {
                let have = x.den.get(f).copied().unwrap_or(0);
                let fp = Poly { terms: f.clone() };
                for _ in have..k {
                    p = p.mul(&fp);
                }
            }
            p
        };
        let num = scale(self).add(&scale(other));
        (RatFunc { num, den }).reduce()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let mut den = self.den.clone();
        for (f, &k) in &other.den {
            *den.entry(f.clone()).or_insert(0) += k;
        }
        let num = self.num.mul(&other.num);
        (RatFunc { num, den }).reduce()
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    /// Multiplicative inverse; the numerator must itself be a unit times a
    /// product of tracked root factors (callers only invert such entries).
    pub fn inv_with_factors(&self, allowed_factors: &[Poly]) -> Option<Self> {
        // factor the numerator over the allowed linear factors
        let mut rest = self.num.clone();
        let mut num_factors: BTreeMap<BTreeMap<Monomial, BigInt>, u32> = BTreeMap::new();
        let mut progress = true;
        while progress {
            progress = false;
            for f in allowed_factors {
                let (norm, _) = f.normalize_sign();
                while let Some(q) = rest.exact_div(&norm) {
                    rest = q;
                    *num_factors.entry(norm.terms.clone()).or_insert(0) += 1;
                    progress = true;
                }
            }
        }
        // rest must be a constant +-1 or +-c with c invertible: demand +-1
        let nvars = self.num.nvars()?;
        let c = rest.constant_term();
        if rest != Poly::constant(c.clone(), nvars) {
            return None;
        }
        use num::Signed;
        if !c.abs().eq(&BigInt::from(1)) {
            return None;
        }
        // inverse = sign * den_poly / num_factors
        let mut num = self.den_poly();
        if c < BigInt::from(0) {
            num = num.neg();
        }
        Some((RatFunc { num, den: num_factors }).reduce())
    }

    /// Homogeneous degree (deg num - deg den) when both are homogeneous.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let dn = self.num.degree()?;
        let dd: i64 = self
            .den
            .iter()
            .map(|(f, &k)| {
                let fp = Poly { terms: f.clone() };
                fp.degree().unwrap_or(0) * k as i64
            })
            .sum();
        Some(dn - dd)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.num.is_homogeneous()
            && self.den.keys().all(|f| Poly { terms: f.clone() }.is_homogeneous())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Realization;

    #[test]
    fn add_and_cancel() {
        let r = Realization::finite(3);
        let a = r.simple_root(1);
        // 1/a + (a - 1)/a = 1
        let inv_a = RatFunc::inv_factor(&a);
        let part = RatFunc::from_poly(a.sub(&r.one())).mul(&inv_a);
        let s = inv_a.add(&part);
        assert!(s.is_polynomial());
        assert_eq!(s.num, r.one());
    }

    #[test]
    fn sign_normalization() {
        let r = Realization::finite(3);
        let a = r.simple_root(1);
        let inv_neg = RatFunc::inv_factor(&a.neg());
        let prod = inv_neg.mul_poly(&a);
        assert!(prod.is_polynomial());
        assert_eq!(prod.num, r.int(-1));
    }

    #[test]
    fn inverse_of_factored_unit() {
        let r = Realization::finite(3);
        let a1 = r.simple_root(1);
        let a2 = r.simple_root(2);
        let x = RatFunc::from_poly(a1.mul(&a2)).mul(&RatFunc::inv_factor(&a1));
        // x = a2; inverse should be 1/a2
        let inv = x.inv_with_factors(&[a1.clone(), a2.clone()]).unwrap();
        let prod = x.mul(&inv);
        assert!(prod.is_polynomial());
        assert_eq!(prod.num, r.one());
    }
}
