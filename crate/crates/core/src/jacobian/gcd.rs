//! Multivariate gcd by recursion on the variables: split off the content
//! with respect to the main variable and run a subresultant remainder
//! sequence on the primitive parts.

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};

/// Coefficients of `f` as a polynomial in variable `v`, lowest power first.
fn coefficients_in(f: &Polynomial, v: usize) -> Vec<Polynomial> {
    let deg = f.degree_in(v).unwrap_or(0) as usize;
    let mut out = vec![f.zero_like(); deg + 1];
    for (m, c) in f.terms() {
        let mut rest = *m;
        let e = rest.0[v] as usize;
        rest.0[v] = 0;
        out[e].add_term(rest, c);
    }
    out
}

fn from_coefficients(coeffs: &[Polynomial], v: usize, like: &Polynomial) -> Polynomial {
    let mut out = like.zero_like();
    for (e, c) in coeffs.iter().enumerate() {
        let mut shift = Monomial::ONE;
        shift.0[v] = e as u32;
        let k = like.field().one();
        out = &out + &c.mul_term(&shift, &k);
    }
    out
}

/// Exact quotient `f / g`, or `None` when `g` does not divide `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    let k = f.field().clone();
    let (mg, cg) = g.leading_term()?;
    let inv = k.inv(&cg)?;
    let mut rem = f.clone();
    let mut q = f.zero_like();
    while let Some((m, c)) = rem.leading_term() {
        if !mg.divides(&m) {
            return None;
        }
        let t = mg.quotient_of(&m);
        let factor = k.mul(&c, &inv);
        rem = &rem - &g.mul_term(&t, &factor);
        q.add_term(t, &factor);
    }
    Some(q)
}

fn main_variable(f: &Polynomial, g: &Polynomial) -> Option<usize> {
    (0..3).rev().find(|&v| f.degree_in(v).unwrap_or(0) > 0 || g.degree_in(v).unwrap_or(0) > 0)
}

/// A gcd of `f` and `g`, made monic in the fixed monomial order. The gcd of
/// two zero polynomials is zero.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    gcd_rec(f, g).monic()
}

fn gcd_rec(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let Some(v) = main_variable(f, g) else {
        return f.constant_like(1);
    };
    let cf = content(f, v);
    let cg = content(g, v);
    let c = gcd_rec(&cf, &cg);
    let pf = divide_exact(f, &cf).expect("content divides");
    let pg = divide_exact(g, &cg).expect("content divides");
    let h = subresultant_primitive_gcd(&pf, &pg, v);
    &c * &h
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `v`.
fn content(f: &Polynomial, v: usize) -> Polynomial {
    let mut acc = f.zero_like();
    for c in coefficients_in(f, v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c);
        if acc.is_constant() {
            return f.constant_like(1);
        }
    }
    acc
}

fn degree(coeffs: &[Polynomial]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

fn trim(mut p: Vec<Polynomial>) -> Vec<Polynomial> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`, as coefficient lists.
fn pseudo_remainder(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = degree(b).expect("nonzero divisor");
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = 0;
    let da = degree(a).unwrap_or(0);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = lb * &*c;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[dr - db + i] = &r[dr - db + i] - &t;
        }
        steps += 1;
    }
    // bring the multiplier up to the full power so the sequence stays exact
    let full = da + 1 - db;
    for _ in steps..full {
        for c in r.iter_mut() {
            *c = lb * &*c;
        }
    }
    trim(r)
}

fn primitive_part(coeffs: &[Polynomial], v: usize, like: &Polynomial) -> Polynomial {
    let p = from_coefficients(coeffs, v, like);
    let c = content(&p, v);
    divide_exact(&p, &c).expect("content divides")
}

/// Gcd of two polynomials that are primitive with respect to `v`.
fn subresultant_primitive_gcd(f: &Polynomial, g: &Polynomial, v: usize) -> Polynomial {
    let mut a = trim(coefficients_in(f, v));
    let mut b = trim(coefficients_in(g, v));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    if degree(&b) == Some(0) {
        return f.constant_like(1);
    }
    let one = f.constant_like(1);
    let mut gg = one.clone();
    let mut h = one;
    loop {
        let delta = degree(&a).unwrap() - degree(&b).unwrap();
        let r = pseudo_remainder(&a, &b);
        match degree(&r) {
            None => return primitive_part(&b, v, f),
            Some(0) if r[0].is_zero() => return primitive_part(&b, v, f),
            Some(0) => return f.constant_like(1),
            Some(_) => {}
        }
        let divisor = &gg * &h.pow(delta as u32);
        a = b;
        b = r.iter().map(|c| divide_exact(c, &divisor).expect("subresultant division is exact")).collect();
        gg = a[degree(&a).unwrap()].clone();
        h = if delta == 0 {
            h
        } else {
            let num = gg.pow(delta as u32);
            let den = h.pow(delta as u32 - 1);
            divide_exact(&num, &den).expect("subresultant division is exact")
        };
    }
}

/// Monic gcd of the three partial derivatives.
pub fn gcd_partials(omega: &Polynomial) -> Result<Polynomial> {
    let parts = [omega.partial(0), omega.partial(1), omega.partial(2)];
    if parts.iter().all(Polynomial::is_zero) {
        return Err(Error::Domain("all partial derivatives vanish (constant potential)".into()));
    }
    if !omega.field().is_rationals() {
        return Err(Error::Unsupported("gcd of partials is implemented over the rationals".into()));
    }
    let g = parts.iter().fold(omega.zero_like(), |acc, p| gcd(&acc, p));
    Ok(g)
}
