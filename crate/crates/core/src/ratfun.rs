//! Rational functions: gcd-reduced fractions of polynomials over a coefficient
//! field, with the denominator normalized monic under deglex.

use crate::arith::Coeff;
use crate::poly::gcd::{exact_div, gcd_poly};
use crate::poly::{align, MonomialOrder, Poly, Vars};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct RatFun<C: Coeff> {
    pub num: Poly<C>,
    pub den: Poly<C>,
}

impl<C: Coeff> RatFun<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = align(&num, &den);
        let mut rf = RatFun { num, den };
        rf.reduce();
        rf
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        let one = Poly::one(&p.vars);
        RatFun { num: p, den: one }
    }

    pub fn zero(vars: &Vars) -> Self {
        RatFun { num: Poly::zero(vars), den: Poly::one(vars) }
    }

    pub fn one(vars: &Vars) -> Self {
        RatFun { num: Poly::one(vars), den: Poly::one(vars) }
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        RatFun { num: Poly::var(vars, name), den: Poly::one(vars) }
    }

    pub fn constant(vars: &Vars, c: C) -> Self {
        RatFun { num: Poly::constant(vars, c), den: Poly::one(vars) }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(&self.den.vars);
            return;
        }
        let g = gcd_poly(&self.num, &self.den);
        if !g.is_constant() {
            self.num = exact_div(&self.num, &g).unwrap();
            self.den = exact_div(&self.den, &g).unwrap();
        }
        // monic denominator under deglex
        let lc = self.den.leading_term(&MonomialOrder::DegLex).unwrap().1.clone();
        if lc != C::one() {
            let inv = lc.inv();
            self.den = self.den.mul_scalar(&inv);
            self.num = self.num.mul_scalar(&inv);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        RatFun::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFun::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Evaluate at a full point; panics on vanishing denominator.
    pub fn eval(&self, point: &[C]) -> C {
        let d = self.den.eval(point);
        assert!(!d.is_zero(), "denominator vanishes at the point");
        self.num.eval(point).div(&d)
    }

    /// Evaluate with an error on vanishing denominator.
    pub fn try_eval(&self, point: &[C]) -> Option<C> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(point).div(&d))
        }
    }

    /// Substitute rational functions for the variables.
    pub fn compose(&self, subs: &[RatFun<C>]) -> RatFun<C> {
        assert_eq!(subs.len(), self.num.vars.len());
        let vars = &subs[0].num.vars;
        let eval_poly = |p: &Poly<C>| -> RatFun<C> {
            let mut acc = RatFun::zero(vars);
            for (m, c) in &p.terms {
                let mut term = RatFun::constant(vars, c.clone());
                for (i, &e) in m.0.iter().enumerate() {
                    for _ in 0..e {
                        term = term.mul(&subs[i]);
                    }
                }
                acc = acc.add(&term);
            }
            acc
        };
        eval_poly(&self.num).div(&eval_poly(&self.den))
    }
}

impl<C: Coeff> fmt::Display for RatFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_value() == Some(C::one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use crate::poly::parse::poly_parse;

    fn v(names: &[&str]) -> Vars {
        Vars::new(names.to_vec())
    }

    fn rf(n: &str, d: &str, vars: &Vars) -> RatFun<Rat> {
        RatFun::new(poly_parse(n, vars).unwrap(), poly_parse(d, vars).unwrap())
    }

    #[test]
    fn reduces() {
        let vars = v(&["x", "y"]);
        let f = rf("x^2 - y^2", "x + y", &vars);
        assert!(f.is_polynomial());
        assert_eq!(f.num, poly_parse("x - y", &vars).unwrap());
    }

    #[test]
    fn field_ops() {
        let vars = v(&["x"]);
        let a = rf("1", "x", &vars);
        let b = rf("x", "x + 1", &vars);
        let s = a.add(&b);
        // 1/x + x/(x+1) = (x+1+x^2)/(x(x+1))
        assert_eq!(s.num, poly_parse("x^2 + x + 1", &vars).unwrap());
        let p = a.mul(&a.inv());
        assert_eq!(p, RatFun::one(&vars));
    }

    #[test]
    fn composition() {
        let vars = v(&["x"]);
        let f = rf("x^2 + 1", "x", &vars);
        // x -> 1/(1-x)
        let sub = rf("1", "1 - x", &vars);
        let g = f.compose(&[sub]);
        // ( (1/(1-x))^2 + 1 ) / (1/(1-x)) = (1 + (1-x)^2) / (1-x)
        let expect = rf("1 + (1-x)^2", "1 - x", &vars);
        assert_eq!(g, expect);
    }
}
