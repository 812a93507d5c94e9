use defvar::poly::factor::factor_rational;
use defvar::poly::parse::poly_parse;
use defvar::poly::Vars;

fn main() {
    let vars = Vars::new(vec!["u43", "v14", "v43"]);
    let p1 = poly_parse("-u43*v14^2*v43^2 + u43^2*v14*v43 + u43*v14^2*v43 + u43*v14*v43^2 - u43^2*v14 - 3*u43*v14*v43 + v14*u43 + u43*v43 + v14*v43 - v43", &vars).unwrap();
    let p2 = poly_parse("-v14^2*v43^2 + 2*v14^2*v43 + v14*v43^2 + u43*v43 - v14^2 - v14*v43 - v43", &vars).unwrap();
    let p3 = poly_parse("u43^5*v14^4*v43^2 + u43^4*v14^4*v43^3 + u43^3*v14^4*v43^4 - u43^5*v14^4*v43 - 3*u43^4*v14^4*v43^2 - u43^4*v14^3*v43^3 - 3*u43^3*v14^4*v43^3 - 2*v14^3*u43^3*v43^4 + 2*v14^4*u43^4*v43 + 2*v14^3*u43^4*v43^2 + 3*u43^3*v43^2*v14^4 + 6*v14^3*u43^3*v43^3 + u43^3*v14^2*v43^4 - u43^4*v14^3*v43 - 3*u43^4*v14^2*v43^2 - u43^3*v14^4*v43 - 6*u43^3*v14^3*v43^2 - 5*u43^3*v14^2*v43^3 - u43^2*v14^3*v43^3 + 3*v14^2*u43^4*v43 + 2*v14^3*u43^3*v43 + 10*u43^3*v43^2*v14^2 + 2*u43^3*v14*v43^3 + 2*u43^2*v14^3*v43^2 + 3*u43^2*v14^2*v43^3 - u43^4*v14*v43 - 6*v14^2*u43^3*v43 - 2*u43^3*v14*v43^2 - v14^3*u43^2*v43 - 6*v14^2*u43^2*v43^2 - 2*u43^2*v14*v43^3 + 2*u43^3*v14*v43 + u43^3*v43^2 + 3*u43^2*v14^2*v43 + 2*u43^2*v14*v43^2 + u43^4 + u43^3*v43 - u43^2*v14*v43 - 2*u43^2*v43^2 - 4*u43^3 - 3*u43^2*v43 + u43*v43^2 + 6*u43^2 + 3*u43*v43 - 4*u43 - v43 + 1", &vars).unwrap();
    let py = p1.mul(&p2).mul(&p3);
    eprintln!("P_Y: {} terms, total degree {}", py.terms.len(), py.total_degree());
    let t0 = std::time::Instant::now();
    let fs = factor_rational(&py).unwrap();
    eprintln!("factored into {} pieces in {:?}", fs.len(), t0.elapsed());
    for (q, m) in &fs {
        let tag = if q.eq_up_to_constant(&p1).is_some() { "= P1" }
            else if q.eq_up_to_constant(&p2).is_some() { "= P2" }
            else if q.eq_up_to_constant(&p3).is_some() { "= P3" }
            else { "???" };
        eprintln!("  mult {m}, deg {}, {} terms  {tag}", q.total_degree(), q.terms.len());
    }
}
