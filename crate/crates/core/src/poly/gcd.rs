//! Multivariate division, exact division, and gcd via primitive subresultant
//! PRS recursing over one variable.

use super::{align, Monomial, MonomialOrder, Poly};
use crate::arith::Coeff;

/// Multivariate division with remainder: f = sum q_i d_i + r where no monomial
/// of r is divisible by any divisor's leading monomial under `order`.
pub fn poly_divmod<C: Coeff>(
    f: &Poly<C>,
    divisors: &[Poly<C>],
    order: &MonomialOrder,
) -> (Vec<Poly<C>>, Poly<C>) {
    let vars = &f.vars;
    for d in divisors {
        assert_eq!(d.vars, *vars, "divisors must share the variable list");
        assert!(!d.is_zero(), "zero divisor");
    }
    let leads: Vec<(Monomial, C)> = divisors
        .iter()
        .map(|d| {
            let (m, c) = d.leading_term(order).unwrap();
            (m.clone(), c.clone())
        })
        .collect();
    let mut quot = vec![Poly::zero(vars); divisors.len()];
    let mut rem: Vec<(Monomial, C)> = vec![];
    let mut work = f.clone();
    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let mut reduced = false;
        for (i, (dm, dc)) in leads.iter().enumerate() {
            if dm.divides(&lm) {
                let m = dm.div_into(&lm);
                let c = lc.div(dc);
                quot[i] = quot[i].add(&Poly::from_terms(vars, vec![(m.clone(), c.clone())]));
                work = work.sub(&divisors[i].mul_term(&m, &c));
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem.push((lm.clone(), lc.clone()));
            work = work.sub(&Poly::from_terms(vars, vec![(lm, lc)]));
        }
    }
    (quot, Poly::from_terms(vars, rem))
}

/// Exact division: returns Some(q) with f = q*g when g divides f.
pub fn exact_div<C: Coeff>(f: &Poly<C>, g: &Poly<C>) -> Option<Poly<C>> {
    assert!(!g.is_zero(), "division by zero polynomial");
    let (f, g) = align(f, g);
    if f.is_zero() {
        return Some(Poly::zero(&f.vars));
    }
    let order = MonomialOrder::DegLex;
    let (q, r) = poly_divmod(&f, std::slice::from_ref(&g), &order);
    if r.is_zero() {
        Some(q.into_iter().next().unwrap())
    } else {
        None
    }
}

/// Pseudo-remainder of f by g in variable `var`: prem = lc(g)^(df-dg+1) f mod g.
fn pseudo_rem<C: Coeff>(f: &Poly<C>, g: &Poly<C>, var: usize) -> Poly<C> {
    let dg = g.degree_in(var) as i64;
    assert!(dg > 0 || !g.is_zero());
    let g_coeffs = g.coeffs_in(var);
    let lc_g = g_coeffs.last().unwrap().clone();
    let mut r = f.clone();
    loop {
        let dr = r.degree_in(var) as i64;
        if r.is_zero() || dr < dg {
            return r;
        }
        let r_coeffs = r.coeffs_in(var);
        let lc_r = r_coeffs.last().unwrap().clone();
        // r := lc_g * r - lc_r * x^(dr-dg) * g
        let shift = Monomial::var(f.vars.len(), var, (dr - dg) as u16);
        r = r.mul(&lc_g).sub(&g.mul(&lc_r).mul_term(&shift, &C::one()));
    }
}

/// Content of f wrt `var`: gcd of the coefficient polynomials.
fn content_in<C: Coeff>(f: &Poly<C>, var: usize) -> Poly<C> {
    let coeffs = f.coeffs_in(var);
    let mut acc = Poly::zero(&f.vars);
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        acc = gcd_poly_inner(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

/// Normalization used throughout: for rational-like fields we cannot pick
/// "positive leading coefficient" generically, so make the deglex-leading
/// coefficient one.
fn normalize<C: Coeff>(f: &Poly<C>) -> Poly<C> {
    if f.is_zero() {
        return f.clone();
    }
    let lc = f.leading_term(&MonomialOrder::DegLex).unwrap().1.clone();
    f.mul_scalar(&lc.inv())
}

fn gcd_poly_inner<C: Coeff>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    let (f, g) = align(f, g);
    if f.is_zero() {
        return normalize(&g);
    }
    if g.is_zero() {
        return normalize(&f);
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one(&f.vars);
    }
    // main variable: first variable used by both; if none shared, gcd is the
    // gcd of contents, reached by recursion below
    let n = f.vars.len();
    let var = (0..n).find(|&i| f.uses_var(i) && g.uses_var(i));
    let var = match var {
        Some(v) => v,
        None => {
            // no common variable: gcd divides both contents viewed as constants
            // in disjoint variables, hence is 1 after normalization
            return Poly::one(&f.vars);
        }
    };
    let cf = content_in(&f, var);
    let cg = content_in(&g, var);
    let cont = gcd_poly_inner(&cf, &cg);
    let fp = exact_div(&f, &cf).unwrap();
    let gp = exact_div(&g, &cg).unwrap();

    // primitive subresultant PRS on the primitive parts
    let (mut a, mut b) = if fp.degree_in(var) >= gp.degree_in(var) {
        (fp, gp)
    } else {
        (gp, fp)
    };
    loop {
        if b.is_zero() {
            break;
        }
        if b.degree_in(var) == 0 {
            // nonzero constant in var: primitive parts are coprime in var
            a = Poly::one(&f.vars);
            break;
        }
        let r = pseudo_rem(&a, &b, var);
        let r = if r.is_zero() {
            r
        } else {
            let c = content_in(&r, var);
            exact_div(&r, &c).unwrap()
        };
        a = b;
        b = r;
    }
    let prim = if a.is_constant() { Poly::one(&f.vars) } else { a };
    normalize(&cont.mul(&prim))
}

/// Greatest common divisor, primitive with normalized leading coefficient.
/// Inputs are aligned onto the union variable list first.
pub fn gcd_poly<C: Coeff>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    gcd_poly_inner(f, g)
}

/// gcd of a list.
pub fn gcd_many<C: Coeff>(ps: &[Poly<C>]) -> Poly<C> {
    let mut acc: Option<Poly<C>> = None;
    for p in ps {
        acc = Some(match acc {
            None => normalize(p),
            Some(a) => gcd_poly(&a, p),
        });
        if let Some(a) = &acc {
            if !a.is_zero() && a.is_constant() {
                break;
            }
        }
    }
    acc.expect("gcd of empty list")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::poly_parse;
    use crate::poly::Vars;

    fn v(names: &[&str]) -> Vars {
        Vars::new(names.to_vec())
    }

    fn p(s: &str, vars: &Vars) -> crate::poly::QPoly {
        poly_parse(s, vars).unwrap()
    }

    #[test]
    fn divmod_textbook() {
        // f = x^2 y + x y^2 + y^2 by {xy-1, y^2-1}, lex x>y -> r = x + y + 1
        let vars = v(&["x", "y"]);
        let f = p("x^2*y + x*y^2 + y^2", &vars);
        let d1 = p("x*y - 1", &vars);
        let d2 = p("y^2 - 1", &vars);
        let (q, r) = poly_divmod(&f, &[d1.clone(), d2.clone()], &MonomialOrder::Lex);
        assert_eq!(r, p("x + y + 1", &vars));
        let recon = q[0].mul(&d1).add(&q[1].mul(&d2)).add(&r);
        assert_eq!(recon, f);
    }

    #[test]
    fn divmod_zero_and_self() {
        let vars = v(&["x", "y"]);
        let d = p("x*y - 1", &vars);
        let (q, r) = poly_divmod(&Poly::zero(&vars), &[d.clone()], &MonomialOrder::Lex);
        assert!(r.is_zero() && q[0].is_zero());
        let (q, r) = poly_divmod(&d, &[d.clone()], &MonomialOrder::Lex);
        assert!(r.is_zero());
        assert_eq!(q[0], Poly::one(&vars));
    }

    #[test]
    fn gcd_examples() {
        let vars = v(&["x", "y"]);
        let g = gcd_poly(&p("x^2 - y^2", &vars), &p("x^2 + 2*x*y + y^2", &vars));
        assert!(g.eq_up_to_constant(&p("x + y", &vars)).is_some());
        let g = gcd_poly(&p("x + 1", &vars), &p("x + 2", &vars));
        assert!(g.is_constant() && !g.is_zero());
        let f = p("x^2*y - x", &vars);
        let g = gcd_poly(&f, &Poly::zero(&vars));
        assert!(g.eq_up_to_constant(&f).is_some());
    }

    #[test]
    fn gcd_with_common_factor() {
        let vars = v(&["x", "y", "z"]);
        let h = p("x*z + y + 1", &vars);
        let f = p("x^2 - y", &vars).mul(&h);
        let g = p("y*z + 3", &vars).mul(&h);
        let d = gcd_poly(&f, &g);
        assert!(d.eq_up_to_constant(&h).is_some());
    }
}
