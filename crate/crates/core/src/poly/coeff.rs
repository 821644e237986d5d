//! Coefficient domains for exact polynomial arithmetic: arbitrary-precision
//! integers, prime fields, rationals, and unknown-linear expressions used by
//! the braid-morphism solver.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Additive coefficient operations plus scaling by integers. Multiplication of
/// two coefficients lives in [`RingCoeff`] so that unknown-linear expressions
/// can implement this trait without admitting quadratic terms.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_int(&self, k: &BigInt) -> Self;
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

pub trait RingCoeff: Coeff {
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
}

pub trait FieldCoeff: RingCoeff {
    fn inv(&self) -> Self;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        self * k
    }
}

impl RingCoeff for BigInt {
    fn one() -> Self {
        One::one()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        self * BigRational::from_integer(k.clone())
    }
}

impl RingCoeff for BigRational {
    fn one() -> Self {
        One::one()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl FieldCoeff for BigRational {
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "division by zero");
        self.recip()
    }
}

/// Prime field element; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        let m = v.rem_euclid(p as i64) as u64;
        Fp { v: m, p }
    }

    pub fn from_bigint(v: &BigInt, p: u64) -> Self {
        let m = v % BigInt::from(p);
        let m = if m.is_negative() { m + BigInt::from(p) } else { m };
        Fp {
            v: m.try_into().unwrap(),
            p,
        }
    }

    fn check(&self, other: &Fp) {
        assert_eq!(self.p, other.p, "mixed moduli");
    }
}

impl Coeff for Fp {
    fn zero() -> Self {
        // modulus 0 marks a neutral zero; it unifies with anything
        Fp { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, other: &Self) -> Self {
        if self.p == 0 {
            return *other;
        }
        if other.p == 0 {
            return *self;
        }
        self.check(other);
        Fp {
            v: (self.v + other.v) % self.p,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        if self.p == 0 {
            return *self;
        }
        Fp {
            v: (self.p - self.v) % self.p,
            p: self.p,
        }
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        if self.p == 0 {
            return *self;
        }
        let k = Fp::from_bigint(k, self.p);
        RingCoeff::mul(self, &k)
    }
}

impl RingCoeff for Fp {
    fn one() -> Self {
        panic!("Fp::one needs a modulus; use Fp::new(1, p)")
    }
    fn mul(&self, other: &Self) -> Self {
        if self.p == 0 || other.p == 0 {
            return Fp { v: 0, p: self.p.max(other.p) };
        }
        self.check(other);
        Fp {
            v: (self.v as u128 * other.v as u128 % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl FieldCoeff for Fp {
    fn inv(&self) -> Self {
        assert!(self.v != 0, "division by zero mod p");
        // extended Euclid
        let (mut a, mut b) = (self.v as i128, self.p as i128);
        let (mut x0, mut x1) = (1i128, 0i128);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        assert_eq!(a, 1, "modulus not prime or value not invertible");
        Fp {
            v: (x0.rem_euclid(self.p as i128)) as u64,
            p: self.p,
        }
    }
}

/// Affine-linear expression `c + sum_i a_i u_i` in formal unknowns, with
/// rational coefficients. Supports everything but coefficient-by-coefficient
/// multiplication.
#[derive(Clone, PartialEq, Debug)]
pub struct LinExpr {
    /// index 0 is the constant term; index i+1 the coefficient of unknown i.
    pub coeffs: Vec<BigRational>,
}

impl LinExpr {
    pub fn constant(c: BigRational, nunknowns: usize) -> Self {
        let mut coeffs = vec![<BigRational as Zero>::zero(); nunknowns + 1];
        coeffs[0] = c;
        LinExpr { coeffs }
    }

    pub fn unknown(i: usize, nunknowns: usize) -> Self {
        let mut coeffs = vec![<BigRational as Zero>::zero(); nunknowns + 1];
        coeffs[i + 1] = <BigRational as One>::one();
        LinExpr { coeffs }
    }

    pub fn evaluate(&self, values: &[BigRational]) -> BigRational {
        let mut acc = self.coeffs[0].clone();
        for (i, v) in values.iter().enumerate() {
            acc += &self.coeffs[i + 1] * v;
        }
        acc
    }
}

impl Coeff for LinExpr {
    fn zero() -> Self {
        LinExpr { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![<BigRational as Zero>::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        LinExpr { coeffs }
    }
    fn neg(&self) -> Self {
        LinExpr {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        LinExpr {
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }
}
