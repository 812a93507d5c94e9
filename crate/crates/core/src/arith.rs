//! Exact coefficient arithmetic: rationals, quadratic fields Q(sqrt(d)),
//! and the biquadratic tower Q(sqrt(d1), sqrt(d2)) used at evaluation points.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Coefficient field operations shared by Q, Q(sqrt d) and the function fields
/// built on top of them.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
}

impl Coeff for Rat {
    fn zero() -> Self {
        crate::arith::rat_int(0)
    }
    fn one() -> Self {
        crate::arith::rat_int(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        rat_int(n)
    }
}

/// Element a + b*sqrt(d) of a quadratic field Q(sqrt d), d squarefree, d != 0, 1.
///
/// A value with `b = 0` is rational and combines with any field tag; `d = 0`
/// marks such an untagged rational so that constants like `Quad::from_i64`
/// work in every field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quad {
    pub d: i64,
    pub a: Rat,
    pub b: Rat,
}

impl Quad {
    pub fn new(d: i64, a: Rat, b: Rat) -> Self {
        assert!(d != 1, "d = 1 is not a quadratic extension");
        let mut q = Quad { d, a, b };
        q.normalize();
        q
    }

    pub fn rational(a: Rat) -> Self {
        Quad { d: 0, a, b: crate::arith::rat_int(0) }
    }

    /// sqrt(d) in Q(sqrt d).
    pub fn root(d: i64) -> Self {
        Quad::new(d, crate::arith::rat_int(0), crate::arith::rat_int(1))
    }

    /// i = sqrt(-1).
    pub fn i() -> Self {
        Quad::root(-1)
    }

    fn normalize(&mut self) {
        if Zero::is_zero(&self.b) {
            self.d = 0;
        }
    }

    fn unify(&self, o: &Self) -> i64 {
        match (self.d, o.d) {
            (0, d) | (d, 0) => d,
            (d1, d2) => {
                assert_eq!(d1, d2, "mixed quadratic fields: sqrt({d1}) vs sqrt({d2})");
                d1
            }
        }
    }

    /// Field conjugate a - b*sqrt(d).
    pub fn conj(&self) -> Self {
        Quad { d: self.d, a: self.a.clone(), b: -self.b.clone() }
    }

    /// Complex conjugate under the standard embedding: negates sqrt(d) for d < 0.
    pub fn complex_conj(&self) -> Self {
        if self.d < 0 {
            self.conj()
        } else {
            self.clone()
        }
    }

    pub fn norm(&self) -> Rat {
        &self.a * &self.a - rat_int(self.d) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    /// Exact sign for real values (d > 0 or rational). Panics otherwise.
    pub fn sign(&self) -> i32 {
        assert!(self.d >= 0, "sign of a non-real quadratic value");
        if self.is_zero() {
            return 0;
        }
        if Zero::is_zero(&self.b) {
            return if self.a.is_positive() { 1 } else { -1 };
        }
        if Zero::is_zero(&self.a) {
            return if self.b.is_positive() { 1 } else { -1 };
        }
        let sa = self.a.is_positive();
        let sb = self.b.is_positive();
        if sa == sb {
            return if sa { 1 } else { -1 };
        }
        // a and b*sqrt(d) have opposite signs: compare a^2 with d*b^2
        let cmp = (&self.a * &self.a).cmp(&(rat_int(self.d) * &self.b * &self.b));
        match cmp {
            std::cmp::Ordering::Greater => {
                if sa { 1 } else { -1 }
            }
            std::cmp::Ordering::Less => {
                if sb { 1 } else { -1 }
            }
            std::cmp::Ordering::Equal => 0,
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            return write!(f, "{}", self.a);
        }
        write!(f, "({} + {}*sqrt({}))", self.a, self.b, self.d)
    }
}

impl Coeff for Quad {
    fn zero() -> Self {
        Quad::rational(crate::arith::rat_int(0))
    }
    fn one() -> Self {
        Quad::rational(crate::arith::rat_int(1))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, o: &Self) -> Self {
        let d = self.unify(o);
        Quad::new(d, &self.a + &o.a, &self.b + &o.b)
    }
    fn sub(&self, o: &Self) -> Self {
        let d = self.unify(o);
        Quad::new(d, &self.a - &o.a, &self.b - &o.b)
    }
    fn neg(&self) -> Self {
        Quad { d: self.d, a: -self.a.clone(), b: -self.b.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        let d = self.unify(o);
        let a = &self.a * &o.a + rat_int(d) * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        Quad::new(d, a, b)
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.norm();
        Quad::new(self.d, &self.a / &n, -(&self.b / &n))
    }
    fn from_i64(n: i64) -> Self {
        Quad::rational(rat_int(n))
    }
}

/// Element of the biquadratic tower Q(sqrt(d1), sqrt(d2)), stored on the basis
/// (1, sqrt(d1), sqrt(d2), sqrt(d1)*sqrt(d2)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiQuad {
    pub d1: i64,
    pub d2: i64,
    pub c: [Rat; 4],
}

impl BiQuad {
    pub fn new(d1: i64, d2: i64, c: [Rat; 4]) -> Self {
        assert!(d1 != d2 && d1 != 0 && d2 != 0, "degenerate biquadratic tower");
        BiQuad { d1, d2, c }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.c[1..].iter().all(|x| Zero::is_zero(x)) {
            self.d1 = 0;
            self.d2 = 0;
        }
        self
    }

    pub fn rational(a: Rat) -> Self {
        BiQuad { d1: 0, d2: 0, c: [a, crate::arith::rat_int(0), crate::arith::rat_int(0), crate::arith::rat_int(0)] }
    }

    pub fn from_quad(q: &Quad, d1: i64, d2: i64) -> Self {
        let mut c = [crate::arith::rat_int(0), crate::arith::rat_int(0), crate::arith::rat_int(0), crate::arith::rat_int(0)];
        c[0] = q.a.clone();
        if !Zero::is_zero(&q.b) {
            if q.d == d1 {
                c[1] = q.b.clone();
            } else if q.d == d2 {
                c[2] = q.b.clone();
            } else {
                panic!("quadratic value sqrt({}) outside tower ({}, {})", q.d, d1, d2);
            }
        }
        BiQuad { d1, d2, c }
    }

    fn unify(&self, o: &Self) -> (i64, i64) {
        match ((self.d1, self.d2), (o.d1, o.d2)) {
            ((0, 0), p) | (p, (0, 0)) => p,
            (p, q) => {
                assert_eq!(p, q, "mixed biquadratic towers");
                p
            }
        }
    }

    /// Complex conjugation: negate sqrt(d) components for each negative d.
    pub fn complex_conj(&self) -> Self {
        let mut c = self.c.clone();
        let neg1 = self.d1 < 0;
        let neg2 = self.d2 < 0;
        if neg1 {
            c[1] = -c[1].clone();
        }
        if neg2 {
            c[2] = -c[2].clone();
        }
        if neg1 != neg2 {
            c[3] = -c[3].clone();
        }
        BiQuad { d1: self.d1, d2: self.d2, c }
    }

    /// Exact sign for real values (all imaginary components zero, remaining
    /// part in Q(sqrt(d)) with d > 0).
    pub fn sign(&self) -> i32 {
        let mut real = Quad::rational(self.c[0].clone());
        for (k, d) in [(1usize, self.d1), (2, self.d2)] {
            if Zero::is_zero(&self.c[k]) {
                continue;
            }
            assert!(d > 0, "sign of a non-real biquadratic value");
            real = real.add(&Quad::new(d, crate::arith::rat_int(0), self.c[k].clone()));
        }
        assert!(
            Zero::is_zero(&self.c[3]) || (self.d1 > 0 && self.d2 > 0),
            "sign of a non-real biquadratic value"
        );
        assert!(
            Zero::is_zero(&self.c[3]),
            "sign with sqrt(d1 d2) component not supported"
        );
        real.sign()
    }
}

impl fmt::Display for BiQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} + {}*sqrt({}) + {}*sqrt({}) + {}*sqrt({}*{}))",
            self.c[0], self.c[1], self.d1, self.c[2], self.d2, self.c[3], self.d1, self.d2
        )
    }
}

impl Coeff for BiQuad {
    fn zero() -> Self {
        BiQuad::rational(crate::arith::rat_int(0))
    }
    fn one() -> Self {
        BiQuad::rational(crate::arith::rat_int(1))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| Zero::is_zero(x))
    }
    fn add(&self, o: &Self) -> Self {
        let (d1, d2) = self.unify(o);
        let c = [
            &self.c[0] + &o.c[0],
            &self.c[1] + &o.c[1],
            &self.c[2] + &o.c[2],
            &self.c[3] + &o.c[3],
        ];
        BiQuad { d1, d2, c }.normalized()
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn neg(&self) -> Self {
        let c = [
            -self.c[0].clone(),
            -self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        ];
        BiQuad { d1: self.d1, d2: self.d2, c }
    }
    fn mul(&self, o: &Self) -> Self {
        let (d1, d2) = self.unify(o);
        let r1 = rat_int(d1);
        let r2 = rat_int(d2);
        let (a, b) = (&self.c, &o.c);
        // basis products: s1^2 = d1, s2^2 = d2, s1 s2 = basis 3, s3^2 = d1 d2
        let c0 = &a[0] * &b[0] + &r1 * &a[1] * &b[1] + &r2 * &a[2] * &b[2] + &r1 * &r2 * &a[3] * &b[3];
        let c1 = &a[0] * &b[1] + &a[1] * &b[0] + &r2 * (&a[2] * &b[3] + &a[3] * &b[2]);
        let c2 = &a[0] * &b[2] + &a[2] * &b[0] + &r1 * (&a[1] * &b[3] + &a[3] * &b[1]);
        let c3 = &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1];
        BiQuad { d1, d2, c: [c0, c1, c2, c3] }.normalized()
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        // invert via the relative extension Q(s1)(s2): x = p + q s2, p,q in Q(s1)
        let (d1, d2) = (self.d1, self.d2);
        let p = Quad { d: if Zero::is_zero(&self.c[1]) { 0 } else { d1 }, a: self.c[0].clone(), b: self.c[1].clone() };
        let q = Quad { d: if Zero::is_zero(&self.c[3]) { 0 } else { d1 }, a: self.c[2].clone(), b: self.c[3].clone() };
        // (p + q s2)^-1 = (p - q s2) / (p^2 - q^2 d2)
        let den = p.mul(&p).sub(&q.mul(&q).mul(&Quad::from_i64(d2)));
        let deninv = den.inv();
        let np = p.mul(&deninv);
        let nq = q.mul(&deninv).neg();
        BiQuad { d1, d2, c: [np.a, np.b, nq.a, nq.b] }.normalized()
    }
    fn from_i64(n: i64) -> Self {
        BiQuad::rational(rat_int(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_field_ops() {
        // omega = (1 + sqrt(-3))/2 satisfies omega^2 = omega - 1
        let w = Quad::new(-3, rat(1, 2), rat(1, 2));
        let w2 = w.mul(&w);
        assert_eq!(w2, w.sub(&Quad::one()));
        // 1/omega = conj(omega) since |omega| = 1
        assert_eq!(w.inv(), w.complex_conj());
    }

    #[test]
    fn quad_sign() {
        // sqrt(7) - 2 > 0, sqrt(7) - 3 < 0
        let s7 = Quad::root(7);
        assert_eq!(s7.sub(&Quad::from_i64(2)).sign(), 1);
        assert_eq!(s7.sub(&Quad::from_i64(3)).sign(), -1);
        assert_eq!(Quad::from_i64(0).sign(), 0);
    }

    #[test]
    fn biquad_tower() {
        // (i + sqrt7)^2 = -1 + 7 + 2 i sqrt7 = 6 + 2 i sqrt7
        let x = BiQuad::new(-1, 7, [rat_int(0), rat_int(1), rat_int(1), rat_int(0)]);
        let sq = x.mul(&x);
        assert_eq!(sq.c, [rat_int(6), rat_int(0), rat_int(0), rat_int(2)]);
        let inv = x.inv();
        assert_eq!(x.mul(&inv), BiQuad::one());
        // complex conj negates i-components
        let c = x.complex_conj();
        assert_eq!(c.c, [rat_int(0), rat_int(-1), rat_int(1), rat_int(0)]);
    }
}
