//! Squarefree parts, exact polynomial square roots, and the square test.

use super::gcd::{exact_div, gcd_poly};
use super::{MonomialOrder, Poly, QPoly};
use crate::arith::Coeff;
use num::Signed;

/// Product of the distinct irreducible factors of f, up to constant.
/// Char-0 formula: f / gcd(f, df/dx1, ..., df/dxn).
pub fn squarefree_part<C: Coeff>(f: &Poly<C>) -> Poly<C> {
    assert!(!f.is_zero(), "squarefree part of zero");
    if f.is_constant() {
        return Poly::one(&f.vars);
    }
    let mut g = f.clone();
    for i in 0..f.vars.len() {
        if !f.uses_var(i) {
            continue;
        }
        g = gcd_poly(&g, &f.derivative(i));
        if g.is_constant() {
            break;
        }
    }
    exact_div(f, &g).expect("gcd divides f").clone()
}

/// Attempt an exact square root of a monic-normalized polynomial: returns g
/// with g^2 = f / lc(f) when it exists.
fn monic_sqrt(f: &QPoly) -> Option<QPoly> {
    let order = MonomialOrder::DegLex;
    let (lm, lc) = {
        let (m, c) = f.leading_term(&order)?;
        (m.clone(), c.clone())
    };
    if lm.0.iter().any(|e| e % 2 != 0) {
        return None;
    }
    let target = f.mul_scalar(&lc.inv());
    let half = super::Monomial(lm.0.iter().map(|e| e / 2).collect());
    let mut g = Poly::from_terms(&f.vars, vec![(half.clone(), crate::arith::rat_int(1))]);
    let two_lead = Poly::from_terms(&f.vars, vec![(half, crate::arith::rat_int(2))]);
    loop {
        let r = target.sub(&g.mul(&g));
        if r.is_zero() {
            return Some(g);
        }
        // next term t satisfies 2*lead(g)*t = lead(r)
        let (rm, rc) = {
            let (m, c) = r.leading_term(&order).unwrap();
            (m.clone(), c.clone())
        };
        let (tm, tc) = {
            let (m, c) = two_lead.leading_term(&order).unwrap();
            (m.clone(), c.clone())
        };
        if !tm.divides(&rm) {
            return None;
        }
        let qm = tm.div_into(&rm);
        let qc = rc.div(&tc);
        // termination: the new term must be strictly below g's lead
        let newg = g.add(&Poly::from_terms(&f.vars, vec![(qm.clone(), qc)]));
        if order.cmp(&qm, &g.leading_term(&order).unwrap().0) != std::cmp::Ordering::Less {
            return None;
        }
        if newg.total_degree() * 2 > f.total_degree() {
            return None;
        }
        g = newg;
    }
}

/// Decide whether f = c * g^2 for a rational constant c; returns the witness g.
pub fn is_square_up_to_constant(f: &QPoly) -> Option<QPoly> {
    assert!(!f.is_zero(), "square test on zero");
    if f.is_constant() {
        return Some(Poly::one(&f.vars));
    }
    let prim = f.primitive();
    let g = monic_sqrt(&prim)?;
    // g may have rational coefficients; certify exactly
    let c = prim
        .eq_up_to_constant(&g.mul(&g))
        .expect("monic_sqrt postcondition");
    debug_assert!(c.is_positive() || !c.is_positive());
    Some(g.primitive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::poly_parse;
    use crate::poly::Vars;

    fn v(names: &[&str]) -> Vars {
        Vars::new(names.to_vec())
    }

    fn p(s: &str, vars: &Vars) -> QPoly {
        poly_parse(s, vars).unwrap()
    }

    #[test]
    fn sqfree_examples() {
        let vars = v(&["x", "y"]);
        let f = p("(x+y)^2", &vars);
        assert!(squarefree_part(&f).eq_up_to_constant(&p("x+y", &vars)).is_some());
        let g = p("x^2 + y^2", &vars);
        assert!(squarefree_part(&g).eq_up_to_constant(&g).is_some());
        let c = p("12", &vars);
        assert!(squarefree_part(&c).is_constant());
    }

    #[test]
    fn square_tests() {
        let vars = v(&["x", "y"]);
        let f = p("4*(x-y)^2", &vars);
        let w = is_square_up_to_constant(&f).unwrap();
        assert!(w.eq_up_to_constant(&p("x - y", &vars)).is_some());
        assert!(is_square_up_to_constant(&p("x^2 - 4*y", &vars)).is_none());
        // constants are squares up to constant
        assert!(is_square_up_to_constant(&p("-9", &vars)).is_some());
        // x^2 y^4 is a square; x^2 y^3 is not
        assert!(is_square_up_to_constant(&p("x^2*y^4", &vars)).is_some());
        assert!(is_square_up_to_constant(&p("x^2*y^3", &vars)).is_none());
        // disc of x^2-y^2 is 4y^2: a constant times a square
        assert!(is_square_up_to_constant(&p("4*y^2", &vars)).is_some());
    }
}
