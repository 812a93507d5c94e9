//! Sparse exact multivariate polynomials with pluggable monomial orders.

pub mod factor;
pub mod gcd;
pub mod parse;
pub mod resultant;
pub mod sqfree;

use crate::arith::{Coeff, Rat};
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Shared, ordered variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let v: Vec<String> = names.into_iter().map(|s| s.into()).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &v {
            assert!(seen.insert(n.clone()), "duplicate variable {n}");
        }
        Vars(Arc::new(v))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Union of two lists in lexicographic-by-name order.
    pub fn union(&self, other: &Vars) -> Vars {
        let mut all: Vec<String> = self.0.iter().chain(other.0.iter()).cloned().collect();
        all.sort();
        all.dedup();
        Vars(Arc::new(all))
    }

    /// Variables minus a dropped subset, preserving order.
    pub fn without(&self, drop: &[String]) -> Vars {
        Vars(Arc::new(
            self.0.iter().filter(|n| !drop.contains(n)).cloned().collect(),
        ))
    }
}

/// Exponent vector over a shared variable list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize, e: u16) -> Self {
        let mut m = vec![0; n];
        m[i] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// o / self, assuming divisibility.
    pub fn div_into(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Total monomial orders. `Block` is the elimination order: front-block
/// variables dominate, graded reverse-lex within each block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Graded lexicographic; used for canonical serialization.
    DegLex,
    Block { front: Vec<usize> },
}

fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable means larger
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn cmp_deglex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => cmp_lex(a, b),
        o => o,
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(&a.0, &b.0),
            MonomialOrder::GrevLex => cmp_grevlex(&a.0, &b.0),
            MonomialOrder::DegLex => cmp_deglex(&a.0, &b.0),
            MonomialOrder::Block { front } => {
                let pick = |m: &Monomial, idx: &[usize]| -> Vec<u16> {
                    idx.iter().map(|&i| m.0[i]).collect()
                };
                let fa = pick(a, front);
                let fb = pick(b, front);
                match cmp_grevlex(&fa, &fb) {
                    Ordering::Equal => {}
                    o => return o,
                }
                let n = a.0.len();
                let back: Vec<usize> = (0..n).filter(|i| !front.contains(i)).collect();
                cmp_grevlex(&pick(a, &back), &pick(b, &back))
            }
        }
    }

    pub fn tag(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::DegLex => "deglex".into(),
            MonomialOrder::Block { front } => format!("block{:?}", front),
        }
    }
}

/// Sparse polynomial in canonical form: terms sorted descending by deglex,
/// no zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: Coeff> {
    pub vars: Vars,
    pub terms: Vec<(Monomial, C)>,
}

pub type QPoly = Poly<Rat>;

impl<C: Coeff> Poly<C> {
    pub fn zero(vars: &Vars) -> Self {
        Poly { vars: vars.clone(), terms: vec![] }
    }

    pub fn constant(vars: &Vars, c: C) -> Self {
        if c.is_zero() {
            return Self::zero(vars);
        }
        Poly { vars: vars.clone(), terms: vec![(Monomial::one(vars.len()), c)] }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        let i = vars.index_of(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        Poly { vars: vars.clone(), terms: vec![(Monomial::var(vars.len(), i, 1), C::one())] }
    }

    pub fn from_terms(vars: &Vars, terms: Vec<(Monomial, C)>) -> Self {
        let mut p = Poly { vars: vars.clone(), terms };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        self.terms.sort_by(|a, b| cmp_deglex(&b.0 .0, &a.0 .0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<C> {
        if self.is_zero() {
            Some(C::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = align(self, o);
        let mut terms = a.terms.clone();
        terms.extend(b.terms.iter().cloned());
        Poly::from_terms(&a.vars, terms)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = align(self, o);
        if a.is_zero() || b.is_zero() {
            return Poly::zero(&a.vars);
        }
        let mut acc: std::collections::HashMap<Monomial, C> = std::collections::HashMap::new();
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                let m = m1.mul(m2);
                let c = c1.mul(c2);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut p = Poly { vars: a.vars.clone(), terms: acc.into_iter().collect() };
        p.canonicalize();
        p
    }

    pub fn mul_scalar(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Coefficient polynomials of powers of one variable: index k holds the
    /// coefficient of var^k.
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly<C>> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Poly::zero(&self.vars); d + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut mm = m.clone();
            mm.0[var] = 0;
            out[k].terms.push((mm, c.clone()));
        }
        for p in &mut out {
            p.canonicalize();
        }
        out
    }

    /// Rebuild from coefficients in one variable.
    pub fn from_coeffs_in(vars: &Vars, var: usize, coeffs: &[Poly<C>]) -> Self {
        let mut terms = vec![];
        for (k, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut mm = m.clone();
                mm.0[var] += k as u16;
                terms.push((mm, c.clone()));
            }
        }
        Poly::from_terms(vars, terms)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut terms = vec![];
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm.0[var] = e - 1;
            terms.push((mm, c.mul(&C::from_i64(e as i64))));
        }
        Poly::from_terms(&self.vars, terms)
    }

    /// Evaluate at a full point.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute a constant for one variable.
    pub fn eval_var(&self, var: usize, value: &C) -> Self {
        let coeffs = self.coeffs_in(var);
        let mut acc = Poly::zero(&self.vars);
        let mut power = C::one();
        for c in coeffs {
            acc = acc.add(&c.mul_scalar(&power));
            power = power.mul(value);
        }
        acc
    }

    /// Embed into a superset variable list.
    pub fn embed(&self, target: &Vars) -> Self {
        if self.vars == *target {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .unwrap_or_else(|| panic!("variable {n} missing from target list"))
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mm = vec![0u16; target.len()];
                for (i, &e) in m.0.iter().enumerate() {
                    mm[map[i]] = e;
                }
                (Monomial(mm), c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Restrict to a smaller variable list; panics if the polynomial uses a
    /// dropped variable.
    pub fn restrict(&self, target: &Vars) -> Self {
        let map: Vec<Option<usize>> =
            self.vars.names().iter().map(|n| target.index_of(n)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mm = vec![0u16; target.len()];
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        let j = map[i].unwrap_or_else(|| {
                            panic!("variable {} used but dropped", self.vars.names()[i])
                        });
                        mm[j] = e;
                    }
                }
                (Monomial(mm), c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[var] > 0)
    }

    pub fn map_coeff<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        )
    }
}

/// Align two polynomials onto a common variable list (union, sorted by name).
pub fn align<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> (Poly<C>, Poly<C>) {
    if a.vars == b.vars {
        (a.clone(), b.clone())
    } else {
        let u = a.vars.union(&b.vars);
        (a.embed(&u), b.embed(&u))
    }
}

impl QPoly {
    /// Primitive integer form: multiply by the rational that clears
    /// denominators and divides out the integer content; sign chosen so the
    /// deglex-leading coefficient is positive. Returns the normalized
    /// polynomial (the forgotten constant is a positive rational times sign).
    pub fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            let int = c.numer() * (&den / c.denom());
            num = num.gcd(&int);
        }
        if num.is_zero() {
            num = BigInt::one();
        }
        let scale = Rat::new(den, num);
        let mut p = self.mul_scalar(&scale);
        if p.terms[0].1.is_negative() {
            p = p.neg();
        }
        p
    }

    /// Monic under the given order.
    pub fn monic(&self, order: &MonomialOrder) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_term(order).unwrap().1.clone();
        self.mul_scalar(&lc.recip())
    }

    /// Equality up to a nonzero rational constant; returns the constant c with
    /// self = c * other when equal.
    pub fn eq_up_to_constant(&self, other: &QPoly) -> Option<Rat> {
        let (a, b) = align(self, other);
        if a.is_zero() && b.is_zero() {
            return Some(crate::arith::rat_int(1));
        }
        if a.terms.len() != b.terms.len() || a.is_zero() || b.is_zero() {
            return None;
        }
        let c = &a.terms[0].1 / &b.terms[0].1;
        for ((ma, ca), (mb, cb)) in a.terms.iter().zip(&b.terms) {
            if ma != mb || *ca != cb * &c {
                return None;
            }
        }
        Some(c)
    }
}

fn format_coeff_prefix<C: Coeff>(c: &C, first: bool, out: &mut String) -> String {
    // returns the absolute coefficient string; pushes sign/separator to out
    let s = format!("{c}");
    let (neg, abs) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    };
    if first {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    abs
}

impl<C: Coeff> Poly<C> {
    /// Serialize with terms sorted descending by `order`.
    pub fn to_string_ordered(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<&(Monomial, C)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let abs = format_coeff_prefix(c, k == 0, &mut out);
            let mut factors: Vec<String> = vec![];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.vars.names()[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.vars.names()[i], e));
                }
            }
            if factors.is_empty() {
                out.push_str(&abs);
            } else {
                if abs != "1" {
                    out.push_str(&abs);
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_ordered(&MonomialOrder::DegLex))
    }
}
