//! Resultants: subresultant-PRS computation plus a Sylvester-determinant
//! route used as the independent oracle in tests.

use super::gcd::exact_div;
use super::{align, Monomial, Poly};
use crate::arith::Coeff;

/// Resultant of f and g with respect to `var`, equal to the Sylvester
/// determinant of the pair viewed as univariate in `var`.
pub fn resultant<C: Coeff>(f: &Poly<C>, g: &Poly<C>, var: usize) -> Poly<C> {
    let (f, g) = align(f, g);
    assert!(
        f.degree_in(var) > 0 && g.degree_in(var) > 0,
        "resultant requires positive degree in the variable"
    );
    subresultant_resultant(&f, &g, var)
}

/// prem(A, B) with multiplier forced to exactly lc(B)^(deg A - deg B + 1).
fn prem<C: Coeff>(a: &Poly<C>, b: &Poly<C>, var: usize) -> Poly<C> {
    let db = b.degree_in(var) as i64;
    let lc_b = b.coeffs_in(var).pop().unwrap();
    let da = a.degree_in(var) as i64;
    let mut r = a.clone();
    let mut mult = da - db + 1;
    loop {
        let dr = r.degree_in(var) as i64;
        if r.is_zero() || dr < db {
            break;
        }
        let lc_r = r.coeffs_in(var).pop().unwrap();
        let shift = Monomial::var(a.vars.len(), var, (dr - db) as u16);
        r = r.mul(&lc_b).sub(&b.mul(&lc_r).mul_term(&shift, &C::one()));
        mult -= 1;
    }
    while mult > 0 {
        r = r.mul(&lc_b);
        mult -= 1;
    }
    r
}

/// Collins' subresultant PRS resultant (Geddes et al., algorithm 9.1).
fn subresultant_resultant<C: Coeff>(f: &Poly<C>, g: &Poly<C>, var: usize) -> Poly<C> {
    let vars = f.vars.clone();
    let one = Poly::one(&vars);
    let mut negate = false;
    let (mut a, mut b) = if f.degree_in(var) >= g.degree_in(var) {
        (f.clone(), g.clone())
    } else {
        if (f.degree_in(var) as u64 * g.degree_in(var) as u64) % 2 == 1 {
            negate = true;
        }
        (g.clone(), f.clone())
    };
    let mut g_scale = one.clone();
    let mut h_scale = one.clone();
    while b.degree_in(var) > 0 {
        let da = a.degree_in(var) as u32;
        let db = b.degree_in(var) as u32;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b, var);
        a = b;
        let divisor = g_scale.mul(&h_scale.pow(delta));
        b = exact_div(&r, &divisor).expect("subresultant exact division");
        g_scale = a.coeffs_in(var).pop().unwrap();
        if delta > 0 {
            let num = g_scale.pow(delta);
            h_scale = exact_div(&num, &h_scale.pow(delta - 1)).expect("h update exact division");
        }
    }
    if b.is_zero() {
        return Poly::zero(&vars);
    }
    // b is nonzero with degree 0 in var
    let da = a.degree_in(var) as u32;
    let last = b.coeffs_in(var).pop().unwrap();
    let num = last.pow(da);
    let res = if da >= 1 {
        exact_div(&num, &h_scale.pow(da - 1)).expect("final exact division")
    } else {
        num
    };
    if negate {
        res.neg()
    } else {
        res
    }
}

/// Sylvester-matrix determinant via fraction-free Gaussian elimination
/// (Bareiss) over the polynomial ring. Exact; the independent oracle.
pub fn sylvester_resultant<C: Coeff>(f: &Poly<C>, g: &Poly<C>, var: usize) -> Poly<C> {
    let (f, g) = align(f, g);
    let vars = f.vars.clone();
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    assert!(m > 0 && n > 0);
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let size = m + n;
    let zero = Poly::zero(&vars);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for row in 0..n {
        for (k, c) in fc.iter().enumerate() {
            // row holds coefficients of x^(m-..) shifted: entry (row, row + m - k)
            mat[row][row + m - k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in gc.iter().enumerate() {
            mat[n + row][row + n - k] = c.clone();
        }
    }
    let mut sign = false;
    let mut prev = Poly::one(&vars);
    for k in 0..size.saturating_sub(1) {
        if mat[k][k].is_zero() {
            match (k + 1..size).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(k, i);
                    sign = !sign;
                }
                None => return Poly::zero(&vars),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = mat[k][k].mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = exact_div(&num, &prev).expect("bareiss exact division");
            }
            mat[i][k] = Poly::zero(&vars);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
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
    fn res_simple() {
        let vars = v(&["x"]);
        let r = resultant(&p("x^2 - 1", &vars), &p("x - 2", &vars), 0);
        assert_eq!(r, p("3", &vars));
        let o = sylvester_resultant(&p("x^2 - 1", &vars), &p("x - 2", &vars), 0);
        assert_eq!(o, p("3", &vars));
    }

    #[test]
    fn res_linear_pair() {
        let vars = v(&["x", "a", "b"]);
        let r = resultant(&p("x - a", &vars), &p("x - b", &vars), 0);
        let o = sylvester_resultant(&p("x - a", &vars), &p("x - b", &vars), 0);
        assert_eq!(r, o);
        let expect = p("b - a", &vars);
        assert!(r == expect || r == expect.neg());
    }

    #[test]
    fn res_common_root_zero() {
        let vars = v(&["x", "y"]);
        let f = p("x^2*y - x + y", &vars);
        let g = f.mul(&p("x + y", &vars));
        let r = resultant(&f, &g, 0);
        assert!(r.is_zero());
    }

    #[test]
    fn res_matches_sylvester() {
        let vars = v(&["x", "y", "z"]);
        let cases = [
            ("x^3*y + x*z + y^2 + 1", "x^2*z - x*y + 3"),
            ("x^2 + y", "x^2 - z"),
            ("x^4 - y*z", "x^2 + 2*x + y"),
            ("2*x^3 - y^2*x + 1", "3*x^3 + z*x^2 - 5"),
        ];
        for (fs, gs) in cases {
            let f = p(fs, &vars);
            let g = p(gs, &vars);
            let a = resultant(&f, &g, 0);
            let b = sylvester_resultant(&f, &g, 0);
            assert_eq!(a, b, "PRS vs Sylvester mismatch for {fs}, {gs}");
            // antisymmetry: res(g,f) = (-1)^(mn) res(f,g)
            let c = resultant(&g, &f, 0);
            let mn = (f.degree_in(0) as u64) * (g.degree_in(0) as u64);
            let expect = if mn % 2 == 1 { b.neg() } else { b };
            assert_eq!(c, expect);
        }
    }
}
