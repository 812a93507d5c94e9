//! Desk-scale rational factorization.
//!
//! Univariate: Zassenhaus (factor mod p, Hensel lift, subset recombination).
//! Multivariate: evaluate all but one variable on an integer grid, factor the
//! univariate images, match image factors by degree, reconstruct coefficients
//! by dense interpolation, certify by exact division. Bounded retries; an
//! honest `Inconclusive` is returned when the strategy fails, and callers can
//! fall back to `verify_factorization`.

use super::gcd::{exact_div, gcd_poly};
use super::sqfree::squarefree_part;
use super::{Monomial, Poly, QPoly, Vars};
use crate::arith::{rat_int, Rat};
use num::bigint::{BigInt, Sign};
use num::{Integer, One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum FactorError {
    ZeroInput,
    Inconclusive(String),
}

impl std::fmt::Display for FactorError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FactorError::ZeroInput => write!(f, "factorization of zero"),
            FactorError::Inconclusive(why) => write!(f, "factorization inconclusive: {why}"),
        }
    }
}

impl std::error::Error for FactorError {}

/// Irreducible-over-Q factors with multiplicities; product equals the input
/// up to a rational constant.
pub fn factor_rational(f: &QPoly) -> Result<Vec<(QPoly, u32)>, FactorError> {
    if f.is_zero() {
        return Err(FactorError::ZeroInput);
    }
    if f.is_constant() {
        return Ok(vec![]);
    }
    let prim = f.primitive();
    let sf = squarefree_part(&prim).primitive();
    let irreducibles = factor_squarefree(&sf)?;
    let mut out = vec![];
    let mut rest = prim;
    for q in irreducibles {
        let mut mult = 0u32;
        while let Some(next) = exact_div(&rest, &q) {
            rest = next;
            mult += 1;
        }
        debug_assert!(mult >= 1);
        out.push((q, mult));
    }
    debug_assert!(rest.is_constant(), "all factors accounted for");
    Ok(out)
}

/// Certify a proposed factorization: the product must equal f up to constant
/// and every candidate must pass an irreducibility probe.
pub fn verify_factorization(f: &QPoly, candidates: &[QPoly]) -> bool {
    if f.is_zero() {
        return false;
    }
    let mut prod = Poly::one(&f.vars);
    for c in candidates {
        prod = prod.mul(&c.embed(&prod.vars.union(&c.vars)));
    }
    let (fa, pa) = super::align(f, &prod);
    if fa.eq_up_to_constant(&pa).is_none() {
        return false;
    }
    candidates.iter().all(|c| probe_irreducible(c).unwrap_or(false))
}

/// Sound irreducibility certificate: a full-degree squarefree univariate
/// specialization that is irreducible over Q certifies irreducibility of the
/// multivariate polynomial (given trivial content in the main variable).
/// Returns None when no certificate could be produced.
pub fn probe_irreducible(q: &QPoly) -> Option<bool> {
    if q.is_constant() {
        return Some(false);
    }
    let used: Vec<usize> = (0..q.vars.len()).filter(|&i| q.uses_var(i)).collect();
    if used.len() == 1 {
        let fs = factor_squarefree_univariate(&q.primitive(), used[0]).ok()?;
        let sf_ok = squarefree_part(q).eq_up_to_constant(&q.primitive()).is_some();
        return Some(sf_ok && fs.len() == 1);
    }
    // pick the main variable of highest degree
    let &x = used
        .iter()
        .max_by_key(|&&i| q.degree_in(i))
        .unwrap();
    let content = content_wrt(q, x);
    if !content.is_constant() {
        return Some(false);
    }
    let d = q.degree_in(x);
    let lc = q.coeffs_in(x).pop().unwrap();
    let mut hits = 0;
    for trial in 0..40u32 {
        let point = eval_point(q.vars.len(), &used, x, trial);
        let lc_val = eval_at(&lc, &point);
        if lc_val.is_zero() {
            continue;
        }
        let img = specialize(q, x, &point);
        if img.degree_in(x) != d {
            continue;
        }
        if !squarefree_part(&img).eq_up_to_constant(&img.primitive()).is_some() {
            continue;
        }
        match factor_squarefree_univariate(&img.primitive(), x) {
            Ok(fs) if fs.len() == 1 => {
                hits += 1;
                if hits >= 3 {
                    return Some(true);
                }
            }
            // a splitting image at one point is inconclusive; keep probing
            Ok(_) => continue,
            Err(_) => continue,
        }
    }
    if hits >= 1 {
        Some(true)
    } else {
        None
    }
}

fn content_wrt(f: &QPoly, var: usize) -> QPoly {
    let coeffs = f.coeffs_in(var);
    let mut acc = Poly::zero(&f.vars);
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        acc = gcd_poly(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

/// Small deterministic evaluation points: trial-indexed offsets.
fn eval_point(nvars: usize, used: &[usize], keep: usize, trial: u32) -> Vec<Option<Rat>> {
    let mut point = vec![None; nvars];
    let seq = [2i64, 3, 5, -2, 7, -3, 11, -5, 13, 17, -7, 19, 23, -11, 29, 31];
    let mut k = 0usize;
    for &i in used {
        if i == keep {
            continue;
        }
        let base = seq[(k + trial as usize) % seq.len()];
        point[i] = Some(rat_int(base + (trial as i64) * seq[k % seq.len()]));
        k += 1;
    }
    point
}

fn eval_at(f: &QPoly, point: &[Option<Rat>]) -> QPoly {
    let mut g = f.clone();
    for (i, v) in point.iter().enumerate() {
        if let Some(val) = v {
            g = g.eval_var(i, val);
        }
    }
    g
}

fn specialize(f: &QPoly, _keep: usize, point: &[Option<Rat>]) -> QPoly {
    eval_at(f, point)
}

/// Factor a squarefree primitive polynomial into irreducibles over Q.
fn factor_squarefree(f: &QPoly) -> Result<Vec<QPoly>, FactorError> {
    let used: Vec<usize> = (0..f.vars.len()).filter(|&i| f.uses_var(i)).collect();
    match used.len() {
        0 => Ok(vec![]),
        1 => factor_squarefree_univariate(f, used[0]),
        _ => factor_squarefree_multivariate(f, &used),
    }
}

// ---------------------------------------------------------------------------
// univariate Zassenhaus
// ---------------------------------------------------------------------------

fn to_int_coeffs(f: &QPoly, var: usize) -> Vec<BigInt> {
    let prim = f.primitive();
    let d = prim.degree_in(var) as usize;
    let mut out = vec![BigInt::zero(); d + 1];
    for (m, c) in &prim.terms {
        debug_assert!(c.denom().is_one());
        out[m.0[var] as usize] = c.numer().clone();
    }
    out
}

fn from_int_coeffs(vars: &Vars, var: usize, coeffs: &[BigInt]) -> QPoly {
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            (
                Monomial::var(vars.len(), var, k as u16),
                Rat::from_integer(c.clone()),
            )
        })
        .collect();
    Poly::from_terms(vars, terms)
}

/// Factor a squarefree primitive univariate polynomial (in variable `var`).
fn factor_squarefree_univariate(f: &QPoly, var: usize) -> Result<Vec<QPoly>, FactorError> {
    let coeffs = to_int_coeffs(f, var);
    let n = coeffs.len() - 1;
    if n <= 1 {
        return Ok(vec![f.primitive()]);
    }
    let factors_int = zassenhaus(&coeffs)
        .map_err(|e| FactorError::Inconclusive(format!("univariate: {e}")))?;
    Ok(factors_int
        .into_iter()
        .map(|c| from_int_coeffs(&f.vars, var, &c).primitive())
        .collect())
}

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283,
    293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401,
    409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509,
    521, 523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631,
    641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751,
    757, 761, 769, 773, 787, 797, 809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877,
    881, 883, 887, 907, 911, 919, 929, 937, 941, 947, 953, 967, 971, 977, 983, 991, 997,
];

fn mod_p(c: &BigInt, p: u64) -> u64 {
    let m = c.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

#[derive(Clone, Debug, PartialEq)]
struct PPoly {
    p: u64,
    c: Vec<u64>, // little-endian, no leading zeros
}

impl PPoly {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last().map_or(false, |&x| x == 0) {
            c.pop();
        }
        PPoly { p, c }
    }
    fn zero(p: u64) -> Self {
        PPoly { p, c: vec![] }
    }
    fn one(p: u64) -> Self {
        PPoly { p, c: vec![1] }
    }
    fn x(p: u64) -> Self {
        PPoly { p, c: vec![0, 1] }
    }
    fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn lc(&self) -> u64 {
        *self.c.last().unwrap()
    }
    fn addm(a: u64, b: u64, p: u64) -> u64 {
        let s = a + b;
        if s >= p {
            s - p
        } else {
            s
        }
    }
    fn subm(a: u64, b: u64, p: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + p - b
        }
    }
    fn mulm(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }
    fn invm(a: u64, p: u64) -> u64 {
        // extended euclid
        let (mut t, mut newt) = (0i128, 1i128);
        let (mut r, mut newr) = (p as i128, a as i128);
        while newr != 0 {
            let q = r / newr;
            (t, newt) = (newt, t - q * newt);
            (r, newr) = (newr, r - q * newr);
        }
        assert_eq!(r, 1, "not invertible mod p");
        (((t % p as i128) + p as i128) % p as i128) as u64
    }
    fn sub(&self, o: &Self) -> Self {
        let p = self.p;
        let n = self.c.len().max(o.c.len());
        let mut c = vec![0u64; n];
        for i in 0..n {
            let a = *self.c.get(i).unwrap_or(&0);
            let b = *o.c.get(i).unwrap_or(&0);
            c[i] = Self::subm(a, b, p);
        }
        PPoly::new(p, c)
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return PPoly::zero(self.p);
        }
        let p = self.p;
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = Self::addm(c[i + j], Self::mulm(a, b, p), p);
            }
        }
        PPoly::new(p, c)
    }
    fn scale(&self, k: u64) -> Self {
        let p = self.p;
        PPoly::new(p, self.c.iter().map(|&a| Self::mulm(a, k, p)).collect())
    }
    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(Self::invm(self.lc(), self.p))
    }
    fn divmod(&self, o: &Self) -> (Self, Self) {
        let p = self.p;
        assert!(!o.is_zero());
        let mut r = self.c.clone();
        let d = o.deg();
        if self.deg() < d {
            return (PPoly::zero(p), self.clone());
        }
        let mut q = vec![0u64; (self.deg() - d + 1) as usize];
        let inv = Self::invm(o.lc(), p);
        for k in (0..q.len()).rev() {
            let idx = k + d as usize;
            let coef = Self::mulm(r[idx], inv, p);
            if coef == 0 {
                continue;
            }
            q[k] = coef;
            for (j, &oc) in o.c.iter().enumerate() {
                r[k + j] = Self::subm(r[k + j], Self::mulm(coef, oc, p), p);
            }
        }
        (PPoly::new(p, q), PPoly::new(p, r))
    }
    fn rem(&self, o: &Self) -> Self {
        self.divmod(o).1
    }
    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
    fn powmod(&self, e: &num::BigUint, m: &Self) -> Self {
        let p = self.p;
        let mut base = self.rem(m);
        let mut acc = PPoly::one(p);
        for bit in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(bit) {
                acc = acc.mul(&base).rem(m);
            }
        }
        let _ = &mut base;
        acc
    }
    fn deriv(&self) -> Self {
        let p = self.p;
        if self.c.len() <= 1 {
            return PPoly::zero(p);
        }
        let c = self.c[1..]
            .iter()
            .enumerate()
            .map(|(i, &a)| Self::mulm(a, ((i + 1) as u64) % p, p))
            .collect();
        PPoly::new(p, c)
    }
}

/// Cantor-Zassenhaus over F_p for squarefree monic input.
fn factor_mod_p(f: &PPoly, seed: &mut u64) -> Vec<PPoly> {
    let p = f.p;
    let mut out = vec![];
    // distinct degree
    let mut rest = f.monic();
    let mut h = PPoly::x(p);
    let mut d = 0i64;
    let mut stacks: Vec<(PPoly, i64)> = vec![];
    while rest.deg() > 0 {
        d += 1;
        if rest.deg() < 2 * d {
            stacks.push((rest.clone(), rest.deg()));
            break;
        }
        h = h.powmod(&num::BigUint::from(p), &rest);
        let g = rest.gcd(&h.sub(&PPoly::x(p)));
        if g.deg() > 0 {
            stacks.push((g.clone(), d));
            rest = rest.divmod(&g).0.monic();
            h = h.rem(&rest);
        }
    }
    // equal degree splitting
    let rng_next = move |seed: &mut u64| {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        *seed >> 11
    };
    for (g, d) in stacks {
        let mut todo = vec![g];
        while let Some(cur) = todo.pop() {
            if cur.deg() == d {
                out.push(cur.monic());
                continue;
            }
            // random split
            loop {
                let deg = cur.deg() as usize;
                let mut rc = vec![0u64; deg];
                for x in rc.iter_mut() {
                    *x = rng_next(seed) % p;
                }
                let r = PPoly::new(p, rc);
                if r.deg() < 1 {
                    continue;
                }
                let e = (num::BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
                let s = r.powmod(&e, &cur);
                let cand = cur.gcd(&s.sub(&PPoly::one(p)));
                if cand.deg() > 0 && cand.deg() < cur.deg() {
                    let other = cur.divmod(&cand).0.monic();
                    todo.push(cand);
                    todo.push(other);
                    break;
                }
            }
        }
    }
    out
}

/// Symmetric representative in (-m/2, m/2].
fn symm(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Hensel lift a factorization f = lc * prod(w_i) from mod p to mod p^K
/// (linear lifting on the full factor list).
fn hensel_lift(f: &[BigInt], factors_p: &[PPoly], p: u64, iters: u32) -> (BigInt, Vec<Vec<BigInt>>) {
    // work with f made monic mod p^k via lc inverse is awkward; use the
    // standard trick: lift the monic factorization of f~ = f / lc scaled as
    // monic with adjusted constant: instead lift w_i monic and track that
    // f ≡ lc * prod w_i (mod p^k).
    let r = factors_p.len();
    let mut modulus = BigInt::from(p);
    let mut w: Vec<Vec<BigInt>> = factors_p
        .iter()
        .map(|g| g.c.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let lc = f.last().unwrap().clone();

    let poly_mul = |a: &[BigInt], b: &[BigInt], m: &BigInt| -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] = (&c[i + j] + x * y).mod_floor(m);
            }
        }
        c
    };

    for _ in 0..iters {
        let next = &modulus * BigInt::from(p);
        // error e = f - lc * prod(w) mod next
        let mut prod = vec![BigInt::one()];
        for wi in &w {
            prod = poly_mul(&prod, wi, &next);
        }
        let mut e = vec![BigInt::zero(); f.len().max(prod.len())];
        for (i, c) in f.iter().enumerate() {
            e[i] = c.clone();
        }
        for (i, c) in prod.iter().enumerate() {
            e[i] = (&e[i] - &lc * c).mod_floor(&next);
        }
        let all_zero = e.iter().all(|c| c.mod_floor(&next).is_zero());
        if all_zero {
            modulus = next;
            continue;
        }
        // e = modulus * d; solve sum_j (prod_{i != j} w_i) * s_j = d/lc mod p
        let d: Vec<u64> = e
            .iter()
            .map(|c| {
                let q = c.mod_floor(&next) / &modulus;
                mod_p(&q, p)
            })
            .collect();
        let dp = PPoly::new(p, d);
        let lcp_inv = PPoly::invm(mod_p(&lc, p), p);
        let dp = dp.scale(lcp_inv);
        let wp: Vec<PPoly> = w
            .iter()
            .map(|wi| PPoly::new(p, wi.iter().map(|c| mod_p(c, p)).collect()))
            .collect();
        // cofactors mod p
        let mut delta = vec![];
        for j in 0..r {
            let mut cof = PPoly::one(p);
            for (i, wi) in wp.iter().enumerate() {
                if i != j {
                    cof = cof.mul(wi);
                }
            }
            // need s_j with sum cof_j s_j = dp, deg s_j < deg w_j
            delta.push(cof);
        }
        // Solve via CRT-style: s_j = dp * (cof_j)^{-1} mod w_j
        let mut s = vec![];
        for j in 0..r {
            let inv = mod_inverse_poly(&delta[j].rem(&wp[j]), &wp[j]);
            let sj = dp.mul(&inv).rem(&wp[j]);
            s.push(sj);
        }
        for j in 0..r {
            for (k, &c) in s[j].c.iter().enumerate() {
                if k >= w[j].len() {
                    w[j].push(BigInt::zero());
                }
                w[j][k] = (&w[j][k] + &modulus * BigInt::from(c)).mod_floor(&next);
            }
        }
        modulus = next;
    }
    (modulus, w)
}

fn mod_inverse_poly(a: &PPoly, m: &PPoly) -> PPoly {
    // extended euclid in F_p[x]
    let p = a.p;
    let (mut r0, mut r1) = (m.clone(), a.rem(m));
    let (mut t0, mut t1) = (PPoly::zero(p), PPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1);
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.deg(), 0, "factors not coprime mod p");
    t0.scale(PPoly::invm(r0.lc(), p)).rem(m)
}

fn zassenhaus(coeffs: &[BigInt]) -> Result<Vec<Vec<BigInt>>, String> {
    let n = coeffs.len() - 1;
    debug_assert!(n >= 2);
    let lc = coeffs.last().unwrap().clone();
    // choose a prime keeping f squarefree with nonvanishing lc
    let mut chosen = None;
    let mut seed = 0x9e3779b97f4a7c15u64;
    for &p in PRIMES {
        if mod_p(&lc, p) == 0 {
            continue;
        }
        let fp = PPoly::new(p, coeffs.iter().map(|c| mod_p(c, p)).collect());
        let g = fp.gcd(&fp.deriv());
        if g.deg() == 0 {
            chosen = Some((p, fp));
            break;
        }
    }
    let (p, fp) = chosen.ok_or("no good prime found")?;
    let fac_p = factor_mod_p(&fp.monic(), &mut seed);
    if fac_p.len() == 1 {
        return Ok(vec![coeffs.to_vec()]);
    }
    // Mignotte-style bound: |coeff of any factor| <= 2^n * ||f||_2 * |lc|
    let norm2: BigInt = {
        let s: BigInt = coeffs.iter().map(|c| c * c).sum();
        s.sqrt() + 1
    };
    let bound: BigInt = (BigInt::one() << n) * norm2 * lc.abs();
    let mut iters = 0u32;
    let mut m = BigInt::from(p);
    while m <= &bound * 2 {
        m = &m * BigInt::from(p);
        iters += 1;
    }
    let (modulus, lifted) = hensel_lift(coeffs, &fac_p, p, iters);
    debug_assert!(modulus > &bound * 2);

    // subset recombination
    let mut avail: Vec<Vec<BigInt>> = lifted;
    let mut rest = coeffs.to_vec();
    let mut out: Vec<Vec<BigInt>> = vec![];
    let poly_mul_mod = |a: &[BigInt], b: &[BigInt], m: &BigInt| -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                c[i + j] = (&c[i + j] + x * y).mod_floor(m);
            }
        }
        c
    };
    let try_subset = |subset: &[usize], avail: &Vec<Vec<BigInt>>, rest: &Vec<BigInt>| -> Option<Vec<BigInt>> {
        let lc_rest = rest.last().unwrap();
        let mut g = vec![lc_rest.mod_floor(&modulus)];
        for &i in subset {
            g = poly_mul_mod(&g, &avail[i], &modulus);
        }
        let g: Vec<BigInt> = g.iter().map(|c| symm(c, &modulus)).collect();
        // primitive part
        let content = g.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
        if content.is_zero() {
            return None;
        }
        let g: Vec<BigInt> = g.iter().map(|c| c / &content).collect();
        // trial divide rest by g over Z
        divide_int_poly(rest, &g)
    };
    let mut size = 1usize;
    'outer: while 2 * size <= avail.len() {
        // iterate subsets of given size
        let idx: Vec<usize> = (0..avail.len()).collect();
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let subset: Vec<usize> = combo.iter().map(|&i| idx[i]).collect();
            if let Some(quot) = try_subset(&subset, &avail, &rest) {
                // recover the factor g = rest / quot
                let g = divide_int_poly(&rest, &quot).expect("consistent division");
                out.push(primitive_int(&g));
                rest = quot;
                let keep: Vec<Vec<BigInt>> = avail
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f)| f.clone())
                    .collect();
                avail = keep;
                continue 'outer;
            }
            // next combination
            let k = combo.len();
            let mut i = k;
            loop {
                if i == 0 {
                    size += 1;
                    if 2 * size > avail.len() {
                        break 'outer;
                    }
                    combo = (0..size).collect();
                    break;
                }
                i -= 1;
                if combo[i] != i + avail.len() - k {
                    combo[i] += 1;
                    for j in i + 1..k {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if rest.len() > 1 {
        out.push(primitive_int(&rest));
    }
    Ok(out)
}

fn primitive_int(c: &[BigInt]) -> Vec<BigInt> {
    let content = c.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    let sign = if c.last().unwrap().sign() == Sign::Minus {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let d = content * sign;
    c.iter().map(|x| x / &d).collect()
}

/// Exact division of integer univariate polynomials; None if not divisible.
fn divide_int_poly(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    if g.len() > f.len() {
        return None;
    }
    let mut r: Vec<BigInt> = f.to_vec();
    let dg = g.len() - 1;
    let lc = g.last().unwrap();
    let mut q = vec![BigInt::zero(); f.len() - g.len() + 1];
    for k in (0..q.len()).rev() {
        let idx = k + dg;
        if r[idx].is_zero() {
            continue;
        }
        let (c, rem) = r[idx].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        q[k] = c.clone();
        for (j, gc) in g.iter().enumerate() {
            r[k + j] -= &c * gc;
        }
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// multivariate: evaluation base + ideal-adic multifactor Hensel lift
// ---------------------------------------------------------------------------

fn factor_squarefree_multivariate(f: &QPoly, used: &[usize]) -> Result<Vec<QPoly>, FactorError> {
    let mut mains: Vec<usize> = used.to_vec();
    mains.sort_by_key(|&i| std::cmp::Reverse(f.degree_in(i)));
    let mut last_err = "exhausted retries".to_string();
    for &x in &mains {
        let content = content_wrt(f, x);
        if !content.is_constant() {
            let inner = exact_div(f, &content).unwrap();
            let mut out = factor_rational(&content)
                .map_err(|e| FactorError::Inconclusive(format!("content: {e}")))?
                .into_iter()
                .map(|(q, m)| {
                    debug_assert_eq!(m, 1);
                    q
                })
                .collect::<Vec<_>>();
            out.extend(factor_squarefree(&inner.primitive())?);
            return Ok(out);
        }
        for attempt in 0..5u32 {
            match try_factor_hensel(f, x, used, attempt) {
                Ok(fs) => return Ok(fs),
                Err(e) => last_err = e,
            }
        }
    }
    Err(FactorError::Inconclusive(last_err))
}

/// Total degree in the non-main variables.
fn wdeg(p: &QPoly, x: usize) -> u32 {
    p.terms
        .iter()
        .map(|(m, _)| m.degree() - m.0[x] as u32)
        .max()
        .unwrap_or(0)
}

/// Drop terms whose non-main total degree exceeds k.
fn wtrunc(p: &QPoly, x: usize, k: u32) -> QPoly {
    Poly::from_terms(
        &p.vars,
        p.terms
            .iter()
            .filter(|(m, _)| m.degree() - m.0[x] as u32 <= k)
            .cloned()
            .collect(),
    )
}

/// The w-homogeneous part of exact degree k (in the non-main variables).
fn wpart(p: &QPoly, x: usize, k: u32) -> QPoly {
    Poly::from_terms(
        &p.vars,
        p.terms
            .iter()
            .filter(|(m, _)| m.degree() - m.0[x] as u32 == k)
            .cloned()
            .collect(),
    )
}

/// Dense univariate coefficient vector (in variable x) of a polynomial whose
/// other variables are absent.
fn uni_coeffs(p: &QPoly, x: usize) -> Vec<Rat> {
    let d = p.degree_in(x) as usize;
    let mut out = vec![Rat::zero(); d + 1];
    for (m, c) in &p.terms {
        debug_assert!(m.degree() == m.0[x] as u32, "not univariate in main var");
        out[m.0[x] as usize] = c.clone();
    }
    out
}

fn uni_to_poly(vars: &Vars, x: usize, c: &[Rat]) -> QPoly {
    Poly::from_terms(
        vars,
        c.iter()
            .enumerate()
            .filter(|(_, v)| !num::Zero::is_zero(*v))
            .map(|(k, v)| (Monomial::var(vars.len(), x, k as u16), v.clone()))
            .collect(),
    )
}

fn uni_trim(c: &mut Vec<Rat>) {
    while c.last().map_or(false, |v| num::Zero::is_zero(v)) {
        c.pop();
    }
}

fn uni_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    uni_trim(&mut c);
    c
}

fn uni_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = a.to_vec();
    uni_trim(&mut r);
    let mut b = b.to_vec();
    uni_trim(&mut b);
    assert!(!b.is_empty());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    for k in (0..q.len()).rev() {
        let idx = k + b.len() - 1;
        if num::Zero::is_zero(&r[idx]) {
            continue;
        }
        let c = &r[idx] / &lead;
        q[k] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[k + j] -= t;
        }
    }
    uni_trim(&mut r);
    (q, r)
}

/// Extended gcd over Q[x] on dense vectors: returns (g, s, t) with
/// s a + t b = g.
fn uni_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    uni_trim(&mut r0);
    uni_trim(&mut r1);
    let (mut s0, mut s1) = (vec![Rat::one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![Rat::one()]);
    while !r1.is_empty() {
        let (q, r) = uni_divmod(&r0, &r1);
        let qs = uni_mul(&q, &s1);
        let qt = uni_mul(&q, &t1);
        let new_s = uni_sub(&s0, &qs);
        let new_t = uni_sub(&t0, &qt);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = new_s;
        t0 = t1;
        t1 = new_t;
    }
    (r0, s0, t0)
}

fn uni_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut c = vec![Rat::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| crate::arith::rat_int(0));
        let y = b.get(i).cloned().unwrap_or_else(|| crate::arith::rat_int(0));
        c[i] = x - y;
    }
    uni_trim(&mut c);
    c
}

/// Hensel-based factorization of a squarefree primitive f with trivial
/// content in the main variable x.
fn try_factor_hensel(
    f: &QPoly,
    x: usize,
    used: &[usize],
    attempt: u32,
) -> Result<Vec<QPoly>, String> {
    let vars = &f.vars;
    let others: Vec<usize> = used.iter().copied().filter(|&i| i != x).collect();
    let d = f.degree_in(x);
    let lc = f.coeffs_in(x).pop().unwrap();

    // shift point with nonvanishing lc and squarefree base image
    let offsets: Vec<i64> = others
        .iter()
        .enumerate()
        .map(|(k, _)| {
            let seq = [0i64, 1, -1, 2, -2, 3, -3, 5, -5, 7];
            seq[(k + attempt as usize) % seq.len()] + attempt as i64
        })
        .collect();
    let mut img = f.clone();
    for (&i, &a) in others.iter().zip(&offsets) {
        img = img.eval_var(i, &rat_int(a));
    }
    if img.degree_in(x) != d {
        return Err("leading coefficient vanishes at base point".into());
    }
    if squarefree_part(&img).eq_up_to_constant(&img.primitive()).is_none() {
        return Err("base image not squarefree".into());
    }

    // monicize: F(X, y) = lc^(d-1) f(X / lc, y), monic in X
    let monic_input = lc.is_constant();
    let big_f = if monic_input {
        let c = lc.constant_value().unwrap();
        f.mul_scalar(&c.recip())
    } else {
        let coeffs = f.coeffs_in(x);
        // F(X) = lc^(d-1) f(X/lc) = X^d + sum_{k<d} c_k lc^(d-1-k) X^k
        let mut acc = Poly::from_terms(
            vars,
            vec![(Monomial::var(vars.len(), x, d), Rat::one())],
        );
        for (k, c) in coeffs.iter().enumerate().take(d as usize) {
            let pw = lc.pow((d as u32 - 1) - k as u32);
            let xk = Poly::from_terms(
                vars,
                vec![(Monomial::var(vars.len(), x, k as u16), Rat::one())],
            );
            acc = acc.add(&c.mul(&pw).mul(&xk));
        }
        acc
    };
    // shift others so the base point is the origin
    let mut shifted = big_f.clone();
    for (&i, &a) in others.iter().zip(&offsets) {
        if a != 0 {
            let sub = Poly::var(vars, &vars.names()[i]).add(&Poly::constant(vars, rat_int(a)));
            shifted = subst_var(&shifted, i, &sub);
        }
    }

    // base univariate factorization of shifted(x, 0)
    let mut base = shifted.clone();
    for &i in &others {
        base = base.eval_var(i, &rat_int(0));
    }
    let base = base; // monic univariate in x
    let base_factors =
        factor_squarefree_univariate(&base.primitive(), x).map_err(|e| e.to_string())?;
    if base_factors.len() == 1 {
        return Ok(vec![f.primitive()]);
    }
    // monic versions as dense coefficient vectors
    let g0: Vec<Vec<Rat>> = base_factors
        .iter()
        .map(|g| {
            let mut c = uni_coeffs(g, x);
            let lead = c.last().unwrap().clone();
            for v in &mut c {
                *v = &*v / &lead;
            }
            c
        })
        .collect();
    let r = g0.len();

    // Bezout data: b_j = (prod_{i!=j} g_i)^{-1} mod g_j
    let mut bez = vec![];
    for j in 0..r {
        let mut cof = vec![Rat::one()];
        for (i, gi) in g0.iter().enumerate() {
            if i != j {
                cof = uni_mul(&cof, gi);
            }
        }
        let (_, cof_rem) = uni_divmod(&cof, &g0[j]);
        let (g, s, _) = uni_ext_gcd(&cof_rem, &g0[j]);
        if g.len() != 1 {
            return Err("base factors not coprime".into());
        }
        let ginv = g[0].clone().recip();
        let mut b: Vec<Rat> = s.iter().map(|c| c * &ginv).collect();
        let (_, brem) = uni_divmod(&b, &g0[j]);
        b = brem;
        bez.push(b);
    }

    // ideal-adic lift to total w-degree K
    let kmax = wdeg(&shifted, x) + 1;
    let mut lifted: Vec<QPoly> = g0.iter().map(|c| uni_to_poly(vars, x, c)).collect();
    for k in 1..kmax {
        let mut prod = Poly::one(vars);
        for g in &lifted {
            prod = wtrunc(&prod.mul(g), x, k);
        }
        let err = wpart(&shifted.sub(&prod), x, k);
        if err.is_zero() {
            continue;
        }
        // group error terms by their w-monomial
        let mut by_mu: std::collections::HashMap<Vec<u16>, Vec<(u16, Rat)>> = Default::default();
        for (m, c) in &err.terms {
            let mut mu = m.0.clone();
            let xe = mu[x];
            mu[x] = 0;
            by_mu.entry(mu).or_default().push((xe, c.clone()));
        }
        for (mu, terms) in by_mu {
            let mut e = vec![Rat::zero(); d as usize];
            for (xe, c) in terms {
                if (xe as usize) < e.len() {
                    e[xe as usize] = c;
                } else {
                    return Err("error degree too large during lift".into());
                }
            }
            uni_trim(&mut e);
            if e.is_empty() {
                continue;
            }
            for j in 0..r {
                // s_j = e * b_j mod g_j
                let sj = {
                    let prod = uni_mul(&e, &bez[j]);
                    uni_divmod(&prod, &g0[j]).1
                };
                if sj.is_empty() {
                    continue;
                }
                let mono = Monomial(mu.clone());
                let corr = uni_to_poly(vars, x, &sj).mul_term(&mono, &Rat::one());
                lifted[j] = lifted[j].add(&corr);
            }
        }
    }

    // recombination with exact division against the monic shifted polynomial
    let mut pool: Vec<QPoly> = lifted;
    let mut rest = shifted.clone();
    let mut out_monic: Vec<QPoly> = vec![];
    let mut size = 1usize;
    'outer: while 2 * size <= pool.len() {
        let n = pool.len();
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mut cand = Poly::one(vars);
            for &i in &combo {
                cand = wtrunc(&cand.mul(&pool[i]), x, kmax - 1);
            }
            if let Some(quot) = exact_div(&rest, &cand) {
                out_monic.push(cand);
                rest = quot;
                let keep: Vec<QPoly> = pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                pool = keep;
                size = 1;
                continue 'outer;
            }
            // next combination
            let klen = combo.len();
            let mut i = klen;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if combo[i] != i + n - klen {
                    combo[i] += 1;
                    for j in i + 1..klen {
                        combo[j] = combo[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                size += 1;
                if 2 * size > pool.len() {
                    break 'outer;
                }
                combo = (0..size).collect();
            }
        }
    }
    if !rest.is_constant() {
        out_monic.push(rest);
    }
    if out_monic.len() <= 1 {
        // lift produced nothing: f is irreducible only if the base had one
        // factor, which was handled above
        return Err("recombination found no factors".into());
    }

    // map factors back: unshift, un-monicize, primitive part
    let mut result = vec![];
    for g in out_monic {
        let mut h = g;
        for (&i, &a) in others.iter().zip(&offsets) {
            if a != 0 {
                let sub = Poly::var(vars, &vars.names()[i]).sub(&Poly::constant(vars, rat_int(a)));
                h = subst_var(&h, i, &sub);
            }
        }
        if !monic_input {
            // X -> lc * x
            let e = h.degree_in(x);
            let coeffs = h.coeffs_in(x);
            let mut acc = Poly::zero(vars);
            for (k, c) in coeffs.iter().enumerate() {
                let xk = Poly::from_terms(
                    vars,
                    vec![(Monomial::var(vars.len(), x, k as u16), Rat::one())],
                );
                acc = acc.add(&c.mul(&lc.pow(k as u32)).mul(&xk));
            }
            let _ = e;
            h = acc;
            // strip the polynomial content in the other variables that the
            // substitution X -> lc*x introduces
            let cont = content_wrt(&h, x);
            if !cont.is_constant() {
                h = exact_div(&h, &cont).unwrap();
            }
        }
        result.push(h.primitive());
    }
    // certify
    let mut prod = Poly::one(vars);
    for g in &result {
        prod = prod.mul(g);
    }
    if f.eq_up_to_constant(&prod).is_none() {
        return Err("hensel product mismatch".into());
    }
    Ok(result)
}

/// Substitute a polynomial for one variable.
fn subst_var(f: &QPoly, var: usize, value: &QPoly) -> QPoly {
    let coeffs = f.coeffs_in(var);
    let mut acc = Poly::zero(&f.vars);
    let mut pw = Poly::one(&f.vars);
    for c in coeffs {
        acc = acc.add(&c.mul(&pw));
        pw = pw.mul(value);
    }
    acc
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

    #[test]
    fn univariate_basic() {
        let vars = v(&["x"]);
        let f = p("x^2 - 1", &vars);
        let fs = factor_rational(&f).unwrap();
        assert_eq!(fs.len(), 2);
        let f = p("x^2 + 1", &vars);
        let fs = factor_rational(&f).unwrap();
        assert_eq!(fs.len(), 1);
        // (x^2+x+1)(x^3-2)(x-5)
        let f = p("(x^2+x+1)*(x^3-2)*(x-5)", &vars);
        let fs = factor_rational(&f).unwrap();
        let degs: Vec<u32> = {
            let mut d: Vec<u32> = fs.iter().map(|(q, _)| q.total_degree()).collect();
            d.sort_unstable();
            d
        };
        assert_eq!(degs, vec![1, 2, 3]);
    }

    #[test]
    fn univariate_multiplicity() {
        let vars = v(&["x"]);
        let f = p("(x-1)^3*(x+2)^2", &vars);
        let mut fs = factor_rational(&f).unwrap();
        fs.sort_by_key(|(_, m)| *m);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].1, 2);
        assert_eq!(fs[1].1, 3);
    }

    #[test]
    fn multivariate_spec_example() {
        let vars = v(&["x", "y"]);
        let f = p("x^2*y^2 - 1", &vars);
        let fs = factor_rational(&f).unwrap();
        assert_eq!(fs.len(), 2);
        let p1 = p("x*y - 1", &vars);
        let p2 = p("x*y + 1", &vars);
        for (q, m) in &fs {
            assert_eq!(*m, 1);
            assert!(q.eq_up_to_constant(&p1).is_some() || q.eq_up_to_constant(&p2).is_some());
        }
    }

    #[test]
    fn multivariate_planted() {
        let vars = v(&["x", "y", "z"]);
        let a = p("x^2 + y*z + 3", &vars);
        let b = p("x*z - y + 1", &vars);
        let f = a.mul(&b);
        let fs = factor_rational(&f).unwrap();
        assert_eq!(fs.len(), 2, "got {:?}", fs.iter().map(|(q, _)| q.to_string()).collect::<Vec<_>>());
        for (q, _) in &fs {
            assert!(q.eq_up_to_constant(&a).is_some() || q.eq_up_to_constant(&b).is_some());
        }
    }

    #[test]
    fn verify_mode() {
        let vars = v(&["x", "y"]);
        let f = p("x^2 - y^2", &vars);
        assert!(verify_factorization(&f, &[p("x - y", &vars), p("x + y", &vars)]));
        assert!(!verify_factorization(&f, &[p("x - y", &vars)]));
    }

    #[test]
    fn probe_soundness() {
        let vars = v(&["x", "y"]);
        assert_eq!(probe_irreducible(&p("x^2 - y", &vars)), Some(true));
        assert_eq!(probe_irreducible(&p("x^2*y + y", &vars)), Some(false)); // content y
    }
}
