//! Buchberger engine with reduction, membership, saturation, elimination,
//! ideal sum/intersection, Hilbert dimension and radical membership.
//!
//! Internals work on integer-primitive polynomials sorted by the active
//! order; pair handling uses the Gebauer-Moeller criteria and sugar-strategy
//! selection. Outputs are reduced bases normalized to primitive integer
//! coefficients with positive leading coefficient, which makes them unique
//! for a fixed order.

use crate::arith::Rat;
use crate::poly::{Monomial, MonomialOrder, Poly, QPoly, Vars};
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct Ideal {
    pub vars: Vars,
    pub gens: Vec<QPoly>,
}

impl Ideal {
    pub fn new(vars: Vars, gens: Vec<QPoly>) -> Self {
        let gens = gens
            .into_iter()
            .map(|g| g.embed(&vars))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { vars, gens }
    }

    pub fn serialize_text(&self) -> String {
        let mut out = format!("vars: {}\n", self.vars.names().join(", "));
        for g in &self.gens {
            out.push_str(&g.to_string_ordered(&MonomialOrder::DegLex));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub vars: Vars,
    /// Reduced basis, primitive integer coefficients, positive leading
    /// coefficient under `order`; sorted by leading monomial ascending.
    pub basis: Vec<QPoly>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum GbError {
    /// Step or coefficient budget exhausted; distinct from mathematical failure.
    BudgetExceeded { reductions: u64, detail: String },
}

impl std::fmt::Display for GbError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GbError::BudgetExceeded { reductions, detail } => {
                write!(f, "budget exceeded after {reductions} reductions: {detail}")
            }
        }
    }
}

impl std::error::Error for GbError {}

#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_reductions: u64,
    pub max_coeff_bits: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_reductions: 1_000_000, max_coeff_bits: 1 << 20 }
    }
}

// ---------------------------------------------------------------------------
// internal integer-primitive representation
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct IP {
    /// terms sorted descending by the active order
    t: Vec<(Monomial, BigInt)>,
    sugar: u32,
}

fn ip_from_qpoly(p: &QPoly, order: &MonomialOrder) -> IP {
    let prim = p.primitive();
    let mut t: Vec<(Monomial, BigInt)> = prim
        .terms
        .iter()
        .map(|(m, c)| {
            debug_assert!(c.denom().is_one());
            (m.clone(), c.numer().clone())
        })
        .collect();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let sugar = p.total_degree();
    IP { t, sugar }
}

fn ip_to_qpoly(p: &IP, vars: &Vars) -> QPoly {
    Poly::from_terms(
        vars,
        p.t.iter()
            .map(|(m, c)| (m.clone(), Rat::from_integer(c.clone())))
            .collect(),
    )
}

impl IP {
    fn is_zero(&self) -> bool {
        self.t.is_empty()
    }
    fn lm(&self) -> &Monomial {
        &self.t[0].0
    }
    fn lc(&self) -> &BigInt {
        &self.t[0].1
    }
    fn primitivize(&mut self) {
        if self.t.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.t {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.t[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.t {
                *c = &*c / &g;
            }
        }
    }
    fn scale(&mut self, k: &BigInt) {
        if k.is_one() {
            return;
        }
        for (_, c) in &mut self.t {
            *c = &*c * k;
        }
    }
    fn max_bits(&self) -> u64 {
        self.t.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }
    /// self -= g * coeff * mon ; both inputs sorted by `order`.
    fn sub_mul(&mut self, g: &IP, coeff: &BigInt, mon: &Monomial, order: &MonomialOrder) {
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(self.t.len() + g.t.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.t.len() && j < g.t.len() {
            let gm = g.t[j].0.mul(mon);
            match order.cmp(&self.t[i].0, &gm) {
                std::cmp::Ordering::Greater => {
                    out.push(self.t[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((gm, -(&g.t[j].1 * coeff)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &self.t[i].1 - &g.t[j].1 * coeff;
                    if !c.is_zero() {
                        out.push((gm, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.t[i..]);
        while j < g.t.len() {
            out.push((g.t[j].0.mul(mon), -(&g.t[j].1 * coeff)));
            j += 1;
        }
        self.t = out;
    }
}

struct Engine {
    order: MonomialOrder,
    budget: Budget,
    reductions: u64,
}

impl Engine {
    fn step(&mut self, bits: u64) -> Result<(), GbError> {
        self.reductions += 1;
        if self.reductions > self.budget.max_reductions {
            return Err(GbError::BudgetExceeded {
                reductions: self.reductions,
                detail: "S-pair reduction limit".into(),
            });
        }
        if bits > self.budget.max_coeff_bits {
            return Err(GbError::BudgetExceeded {
                reductions: self.reductions,
                detail: format!("coefficient size alarm ({bits} bits)"),
            });
        }
        Ok(())
    }

    /// Full normal form of p against basis.
    fn normal_form(&mut self, p: IP, basis: &[IP]) -> Result<IP, GbError> {
        let order = self.order.clone();
        let mut head: Vec<(Monomial, BigInt)> = vec![];
        let mut tail = p;
        let mut sugar = tail.sugar;
        'outer: while !tail.is_zero() {
            let (m, c) = tail.t[0].clone();
            for g in basis {
                if g.lm().divides(&m) {
                    self.step(tail.max_bits())?;
                    let d = c.gcd(g.lc());
                    let a = g.lc() / &d; // positive (basis lc > 0)
                    let b = &c / &d;
                    if !a.is_one() {
                        for (_, cc) in &mut head {
                            *cc = &*cc * &a;
                        }
                        tail.scale(&a);
                    }
                    let mon = g.lm().div_into(&m);
                    let red_sugar = g.sugar + mon.degree();
                    sugar = sugar.max(red_sugar);
                    tail.sub_mul(g, &b, &mon, &order);
                    continue 'outer;
                }
            }
            head.push((m.clone(), c.clone()));
            tail.t.remove(0);
        }
        let mut out = IP { t: head, sugar };
        out.primitivize();
        Ok(out)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Buchberger with Gebauer-Moeller pair update and sugar selection.
pub fn buchberger_with_budget(
    ideal: &Ideal,
    order: &MonomialOrder,
    budget: Budget,
) -> Result<GroebnerBasis, GbError> {
    let vars = &ideal.vars;
    let mut eng = Engine { order: order.clone(), budget, reductions: 0 };
    let mut basis: Vec<IP> = vec![];

    // deterministic input order: sort generators canonically
    let mut gens: Vec<IP> = ideal
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ip_from_qpoly(g, order))
        .collect();
    gens.sort_by(|a, b| {
        order
            .cmp(a.lm(), b.lm())
            .then_with(|| a.t.len().cmp(&b.t.len()))
            .then_with(|| format!("{:?}", a.t).cmp(&format!("{:?}", b.t)))
    });

    let mut pairs: Vec<Pair> = vec![];

    for g in gens {
        let g = eng.normal_form(g, &basis)?;
        if g.is_zero() {
            continue;
        }
        add_generator(&mut basis, &mut pairs, g, order);
    }

    while !pairs.is_empty() {
        // sugar strategy: min sugar, then min lcm, then min indices
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let f = &basis[pair.i];
        let g = &basis[pair.j];
        // s-polynomial (integer): (lcm/lm_f)*f*(lc_g/d) - (lcm/lm_g)*g*(lc_f/d)
        let d = f.lc().gcd(g.lc());
        let cf = g.lc() / &d;
        let cg = f.lc() / &d;
        let mf = f.lm().div_into(&pair.lcm);
        let mg = g.lm().div_into(&pair.lcm);
        let mut s = IP { t: vec![], sugar: pair.sugar };
        s.t = f
            .t
            .iter()
            .map(|(m, c)| (m.mul(&mf), c * &cf))
            .collect();
        s.sub_mul(g, &cg, &mg, order);
        s.primitivize();
        let r = eng.normal_form(s, &basis)?;
        if !r.is_zero() {
            add_generator(&mut basis, &mut pairs, r, order);
        }
    }

    // minimalize: drop elements whose lm is divisible by another's lm
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && keep[i]
                && basis[j].lm().divides(basis[i].lm())
                && (basis[j].lm() != basis[i].lm() || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<IP> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(b, _)| b.clone())
        .collect();
    // tail-reduce each against the others
    let mut reduced: Vec<IP> = vec![];
    for i in 0..minimal.len() {
        let others: Vec<IP> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, b)| b.clone())
            .collect();
        let r = eng.normal_form(minimal[i].clone(), &others)?;
        debug_assert!(!r.is_zero());
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(GroebnerBasis {
        order: order.clone(),
        vars: vars.clone(),
        basis: reduced.iter().map(|p| ip_to_qpoly(p, vars)).collect(),
    })
}

fn add_generator(basis: &mut Vec<IP>, pairs: &mut Vec<Pair>, g: IP, _order: &MonomialOrder) {
    let new_idx = basis.len();
    let glm = g.lm().clone();
    // Gebauer-Moeller: prune old pairs whose lcm is a proper multiple of
    // lcm with the new element
    pairs.retain(|p| {
        let li = basis[p.i].lm().lcm(&glm);
        let lj = basis[p.j].lm().lcm(&glm);
        !(glm.divides(&p.lcm) && p.lcm != li && p.lcm != lj)
    });
    // build new pairs
    let mut fresh: Vec<Pair> = vec![];
    for (i, b) in basis.iter().enumerate() {
        let lcm = b.lm().lcm(&glm);
        let sugar = (b.sugar + b.lm().div_into(&lcm).degree())
            .max(g.sugar + glm.div_into(&lcm).degree());
        fresh.push(Pair { i, j: new_idx, lcm, sugar });
    }
    // first criterion: coprime leading monomials reduce to zero
    let coprime: Vec<bool> = fresh
        .iter()
        .map(|p| basis[p.i].lm().coprime(&glm))
        .collect();
    // Gebauer-Moeller M/F criteria among the fresh pairs
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        for b in 0..fresh.len() {
            if a == b || !keep[a] || !keep[b] {
                continue;
            }
            if fresh[b].lcm.divides(&fresh[a].lcm) && fresh[a].lcm != fresh[b].lcm {
                keep[a] = false;
            }
        }
    }
    // among equal lcms keep one
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in a + 1..fresh.len() {
            if keep[b] && fresh[a].lcm == fresh[b].lcm {
                keep[b] = false;
            }
        }
    }
    for (k, p) in fresh.into_iter().enumerate() {
        if keep[k] && !coprime[k] {
            pairs.push(p);
        }
    }
    basis.push(g);
}

pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, GbError> {
    buchberger_with_budget(ideal, order, Budget::default())
}

impl GroebnerBasis {
    /// Normal form of f against the reduced basis.
    pub fn normal_form(&self, f: &QPoly) -> QPoly {
        let f = f.embed(&self.vars);
        let mut eng = Engine {
            order: self.order.clone(),
            budget: Budget { max_reductions: u64::MAX, max_coeff_bits: u64::MAX },
            reductions: 0,
        };
        let basis: Vec<IP> = self.basis.iter().map(|b| ip_from_qpoly(b, &self.order)).collect();
        let r = eng
            .normal_form(ip_from_qpoly(&f, &self.order), &basis)
            .expect("unbounded budget");
        // normal form is taken monic-free: scale is irrelevant for zero tests;
        // return the primitive representative
        ip_to_qpoly(&r, &self.vars)
    }

    pub fn contains(&self, f: &QPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant() && !self.basis[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(self.vars.clone(), self.basis.clone())
    }
}

/// Membership f in I via a reduced basis.
pub fn ideal_member(f: &QPoly, gb: &GroebnerBasis) -> bool {
    gb.contains(f)
}

fn fresh_var_name(vars: &Vars, base: &str) -> String {
    let mut name = base.to_string();
    while vars.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

/// Saturation I : f^inf via the t-trick: (I + <t f - 1>) cap Q[vars].
pub fn saturate(ideal: &Ideal, f: &QPoly, budget: Budget) -> Result<Ideal, GbError> {
    let f = f.embed(&ideal.vars);
    assert!(!f.is_zero(), "saturation by zero");
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let tname = fresh_var_name(&ideal.vars, "t");
    let mut names: Vec<String> = vec![tname.clone()];
    names.extend(ideal.vars.names().iter().cloned());
    let ext = Vars::new(names);
    let t = Poly::var(&ext, &tname);
    let mut gens: Vec<QPoly> = ideal.gens.iter().map(|g| g.embed(&ext)).collect();
    gens.push(t.mul(&f.embed(&ext)).sub(&Poly::one(&ext)));
    let tidx = ext.index_of(&tname).unwrap();
    let order = MonomialOrder::Block { front: vec![tidx] };
    let gb = buchberger_with_budget(&Ideal::new(ext.clone(), gens), &order, budget)?;
    let kept: Vec<QPoly> = gb
        .basis
        .iter()
        .filter(|g| !g.uses_var(tidx))
        .map(|g| g.restrict(&ideal.vars))
        .collect();
    Ok(Ideal::new(ideal.vars.clone(), kept))
}

/// Iterated saturation by a list.
pub fn saturate_many(ideal: &Ideal, fs: &[QPoly], budget: Budget) -> Result<Ideal, GbError> {
    let mut acc = ideal.clone();
    for f in fs {
        if f.is_constant() && !f.is_zero() {
            continue;
        }
        acc = saturate(&acc, f, budget)?;
    }
    Ok(acc)
}

/// Elimination ideal I cap Q[vars minus drop].
pub fn eliminate(ideal: &Ideal, drop: &[String], budget: Budget) -> Result<Ideal, GbError> {
    if drop.is_empty() {
        return Ok(ideal.clone());
    }
    for d in drop {
        assert!(ideal.vars.index_of(d).is_some(), "unknown variable {d}");
    }
    let front: Vec<usize> = drop.iter().map(|d| ideal.vars.index_of(d).unwrap()).collect();
    let order = MonomialOrder::Block { front };
    let gb = buchberger_with_budget(ideal, &order, budget)?;
    let keep_vars = ideal.vars.without(drop);
    let kept: Vec<QPoly> = gb
        .basis
        .iter()
        .filter(|g| drop.iter().all(|d| !g.uses_var(ideal.vars.index_of(d).unwrap())))
        .map(|g| g.restrict(&keep_vars))
        .collect();
    Ok(Ideal::new(keep_vars, kept))
}

/// Sum: concatenated generators over the union variable list.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Ideal {
    let vars = a.vars.union(&b.vars);
    let mut gens: Vec<QPoly> = a.gens.iter().map(|g| g.embed(&vars)).collect();
    gens.extend(b.gens.iter().map(|g| g.embed(&vars)));
    Ideal::new(vars, gens)
}

/// Intersection via t I + (1-t) J and elimination of t.
pub fn ideal_intersect(a: &Ideal, b: &Ideal, budget: Budget) -> Result<Ideal, GbError> {
    let vars = a.vars.union(&b.vars);
    let tname = fresh_var_name(&vars, "t");
    let mut names = vec![tname.clone()];
    names.extend(vars.names().iter().cloned());
    let ext = Vars::new(names);
    let t = Poly::var(&ext, &tname);
    let one_minus_t = Poly::one(&ext).sub(&t);
    let mut gens: Vec<QPoly> = vec![];
    for g in &a.gens {
        gens.push(t.mul(&g.embed(&ext)));
    }
    for g in &b.gens {
        gens.push(one_minus_t.mul(&g.embed(&ext)));
    }
    let joined = Ideal::new(ext, gens);
    let out = eliminate(&joined, &[tname], budget)?;
    Ok(Ideal::new(vars, out.gens))
}

/// Radical membership: f in rad(I) iff 1 in I + <t f - 1>.
pub fn radical_member(f: &QPoly, ideal: &Ideal, budget: Budget) -> Result<bool, GbError> {
    let f = f.embed(&ideal.vars);
    assert!(!f.is_zero());
    let tname = fresh_var_name(&ideal.vars, "t");
    let mut names = vec![tname.clone()];
    names.extend(ideal.vars.names().iter().cloned());
    let ext = Vars::new(names);
    let t = Poly::var(&ext, &tname);
    let mut gens: Vec<QPoly> = ideal.gens.iter().map(|g| g.embed(&ext)).collect();
    gens.push(t.mul(&f.embed(&ext)).sub(&Poly::one(&ext)));
    let gb = buchberger_with_budget(&Ideal::new(ext, gens), &MonomialOrder::GrevLex, budget)?;
    Ok(gb.is_unit_ideal())
}

/// Ideal equality via mutual membership against each other's bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal, budget: Budget) -> Result<bool, GbError> {
    let vars = a.vars.union(&b.vars);
    let ga = buchberger_with_budget(&Ideal::new(vars.clone(), a.gens.clone()), &MonomialOrder::GrevLex, budget)?;
    let gbb = buchberger_with_budget(&Ideal::new(vars.clone(), b.gens.clone()), &MonomialOrder::GrevLex, budget)?;
    Ok(a.gens.iter().all(|g| gbb.contains(&g.embed(&vars)))
        && b.gens.iter().all(|g| ga.contains(&g.embed(&vars))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dimension {
    /// Unit ideal: empty variety.
    Empty,
    Dim(usize),
}

/// Hilbert (Krull) dimension of the quotient ring from leading terms:
/// the largest set S of variables such that no leading monomial is supported
/// entirely inside S.
pub fn hilbert_dimension(gb: &GroebnerBasis) -> Dimension {
    if gb.is_unit_ideal() {
        return Dimension::Empty;
    }
    let n = gb.vars.len();
    let leads: Vec<Vec<usize>> = gb
        .basis
        .iter()
        .map(|g| {
            let (m, _) = g.leading_term(&gb.order).unwrap();
            (0..n).filter(|&i| m.0[i] > 0).collect()
        })
        .collect();
    // enumerate subsets by decreasing size (n <= ~26 here, but prune cheaply:
    // test sizes from n downward and stop at the first independent set)
    for size in (0..=n).rev() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let independent = leads
                .iter()
                .all(|support| !support.iter().all(|v| subset.contains(v)));
            if independent {
                return Dimension::Dim(size);
            }
            // next combination of `size` out of n
            if size == 0 {
                break;
            }
            let mut i = size;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if subset[i] != i + n - size {
                    subset[i] += 1;
                    for j in i + 1..size {
                        subset[j] = subset[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    // leads contains the empty-support monomial only for the unit ideal,
    // handled above
    Dimension::Dim(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::poly_parse;

    fn v(names: &[&str]) -> Vars {
        Vars::new(names.to_vec())
    }

    fn p(s: &str, vars: &Vars) -> QPoly {
        poly_parse(s, vars).unwrap()
    }

    fn ideal(gens: &[&str], vars: &Vars) -> Ideal {
        Ideal::new(vars.clone(), gens.iter().map(|s| p(s, vars)).collect())
    }

    #[test]
    fn gb_lex_textbook() {
        let vars = v(&["x", "y"]);
        let i = ideal(&["x^2 - 1", "x*y - 1"], &vars);
        let gb = buchberger(&i, &MonomialOrder::Lex).unwrap();
        let strs: Vec<String> = gb.basis.iter().map(|b| b.to_string()).collect();
        assert_eq!(strs, vec!["y^2 - 1", "x - y"]);
    }

    #[test]
    fn gb_unit_and_zero() {
        let vars = v(&["x"]);
        let gb = buchberger(&ideal(&["1"], &vars), &MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_unit_ideal());
        let gb = buchberger(&Ideal::new(vars.clone(), vec![]), &MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_zero_ideal());
    }

    #[test]
    fn membership() {
        let vars = v(&["x", "y"]);
        let gb = buchberger(&ideal(&["x", "y"], &vars), &MonomialOrder::GrevLex).unwrap();
        assert!(gb.contains(&p("x + y", &vars)));
        let gb = buchberger(&ideal(&["x"], &vars), &MonomialOrder::GrevLex).unwrap();
        assert!(!gb.contains(&p("1", &vars)));
        let gb = buchberger(&ideal(&["x^2 - 1", "x*y - 1"], &vars), &MonomialOrder::GrevLex).unwrap();
        assert!(gb.contains(&p("x - y", &vars)));
    }

    #[test]
    fn saturation_examples() {
        let vars = v(&["x", "y"]);
        let b = Budget::default();
        // <x^2 y> : x^inf = <y>
        let s = saturate(&ideal(&["x^2*y"], &vars), &p("x", &vars), b).unwrap();
        assert!(ideal_equal(&s, &ideal(&["y"], &vars), b).unwrap());
        // <x> : y^inf = <x>
        let s = saturate(&ideal(&["x"], &vars), &p("y", &vars), b).unwrap();
        assert!(ideal_equal(&s, &ideal(&["x"], &vars), b).unwrap());
        // <xy, x^2> : x^inf: x^2 is itself a generator, so 1 is pushed in;
        // the t-trick oracle confirms the unit ideal
        let s = saturate(&ideal(&["x*y", "x^2"], &vars), &p("x", &vars), b).unwrap();
        assert!(ideal_equal(&s, &ideal(&["1"], &vars), b).unwrap());
        // idempotence
        let s2 = saturate(&s, &p("x", &vars), b).unwrap();
        assert!(ideal_equal(&s, &s2, b).unwrap());
    }

    #[test]
    fn elimination_twisted_cubic() {
        let vars = v(&["t", "x", "y"]);
        let i = ideal(&["x - t^2", "y - t^3"], &vars);
        let out = eliminate(&i, &["t".to_string()], Budget::default()).unwrap();
        let expect = Ideal::new(v(&["x", "y"]), vec![p("x^3 - y^2", &v(&["x", "y"]))]);
        assert!(ideal_equal(&out, &expect, Budget::default()).unwrap());
    }

    #[test]
    fn sum_and_intersection() {
        let vars = v(&["x", "y"]);
        let b = Budget::default();
        let i = ideal(&["x"], &vars);
        let j = ideal(&["y"], &vars);
        let s = ideal_sum(&i, &j);
        assert!(ideal_equal(&s, &ideal(&["x", "y"], &vars), b).unwrap());
        let m = ideal_intersect(&i, &j, b).unwrap();
        assert!(ideal_equal(&m, &ideal(&["x*y"], &vars), b).unwrap());
        let u = ideal_sum(&i, &ideal(&["1"], &vars));
        let gb = buchberger(&u, &MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn radical_membership() {
        let vars = v(&["x", "y"]);
        let b = Budget::default();
        assert!(radical_member(&p("x", &vars), &ideal(&["x^2"], &vars), b).unwrap());
        assert!(!radical_member(&p("y", &vars), &ideal(&["x^2"], &vars), b).unwrap());
        assert!(radical_member(&p("x + y", &vars), &ideal(&["x^3", "y^3"], &vars), b).unwrap());
    }

    #[test]
    fn dimensions() {
        let vars = v(&["x", "y"]);
        let gb = buchberger(&ideal(&["x"], &vars), &MonomialOrder::GrevLex).unwrap();
        assert_eq!(hilbert_dimension(&gb), Dimension::Dim(1));
        let gb = buchberger(&ideal(&["x", "y"], &vars), &MonomialOrder::GrevLex).unwrap();
        assert_eq!(hilbert_dimension(&gb), Dimension::Dim(0));
        let gb = buchberger(&ideal(&["1"], &vars), &MonomialOrder::GrevLex).unwrap();
        assert_eq!(hilbert_dimension(&gb), Dimension::Empty);
        // principal ideal in 3 vars has dim 2
        let vars3 = v(&["x", "y", "z"]);
        let gb = buchberger(&ideal(&["x^2*y - z^3 + 1"], &vars3), &MonomialOrder::GrevLex).unwrap();
        assert_eq!(hilbert_dimension(&gb), Dimension::Dim(2));
    }

    #[test]
    fn reduced_gb_unique_under_permutation() {
        let vars = v(&["x", "y", "z"]);
        let g1 = ideal(&["x^2 + y", "y*z - 1", "x*z + y^2"], &vars);
        let g2 = ideal(&["y*z - 1", "x*z + y^2", "x^2 + y"], &vars);
        let b1 = buchberger(&g1, &MonomialOrder::GrevLex).unwrap();
        let b2 = buchberger(&g2, &MonomialOrder::GrevLex).unwrap();
        let s1: Vec<String> = b1.basis.iter().map(|b| b.to_string()).collect();
        let s2: Vec<String> = b2.basis.iter().map(|b| b.to_string()).collect();
        assert_eq!(s1, s2);
    }
}
