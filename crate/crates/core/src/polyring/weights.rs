use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Degrees `(a, b, c)` of the generators `x, y, z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weights {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Weights {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::Config(format!("weights must be positive, got ({a},{b},{c})")));
        }
        if a.gcd(&b).gcd(&c) != 1 {
            return Err(Error::Config(format!("weights ({a},{b},{c}) must have gcd 1")));
        }
        Ok(Weights { a, b, c })
    }

    pub fn standard() -> Self {
        Weights { a: 1, b: 1, c: 1 }
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    pub fn of(&self, var: usize) -> i64 {
        self.as_array()[var] as i64
    }

    /// `a + b + c`, the degree a potential needs for a degree-zero bracket.
    pub fn total(&self) -> i64 {
        (self.a + self.b + self.c) as i64
    }

    pub fn max(&self) -> i64 {
        self.a.max(self.b).max(self.c) as i64
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// Exponent triple `x^i y^j z^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial([i, j, k])
    }

    pub fn var(v: usize) -> Self {
        let mut e = [0; 3];
        e[v] = 1;
        Monomial(e)
    }

    pub fn degree(&self, w: &Weights) -> i64 {
        let [i, j, k] = self.0;
        w.a as i64 * i as i64 + w.b as i64 * j as i64 + w.c as i64 * k as i64
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|t| self.0[t] <= other.0[t])
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial([other.0[0] - self.0[0], other.0[1] - self.0[1], other.0[2] - self.0[2]])
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].min(other.0[0]),
            self.0[1].min(other.0[1]),
            self.0[2].min(other.0[2]),
        ])
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, &e) in ["x", "y", "z"].iter().zip(self.0.iter()) {
            match e {
                0 => {}
                1 => parts.push(v.to_string()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// The fixed monomial order: weighted degree first, ties broken
/// reverse-lexicographically (smaller power of the last variable is larger).
pub fn monomial_cmp(w: &Weights, m1: &Monomial, m2: &Monomial) -> Ordering {
    m1.degree(w).cmp(&m2.degree(w)).then_with(|| {
        for t in (0..3).rev() {
            match m1.0[t].cmp(&m2.0[t]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// All monomials of weighted degree exactly `d`, largest first in the fixed order.
pub fn monomial_basis(w: &Weights, d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let (a, b, c) = (w.a as i64, w.b as i64, w.c as i64);
    for k in 0..=d / c {
        let r1 = d - c * k;
        for j in 0..=r1 / b {
            let r2 = r1 - b * j;
            if r2 % a == 0 {
                out.push(Monomial([(r2 / a) as u32, j as u32, k as u32]));
            }
        }
    }
    out.sort_by(|p, q| monomial_cmp(w, q, p));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_count(w: &Weights, d: i64) -> usize {
        let mut n = 0;
        for i in 0..=d.max(0) {
            for j in 0..=d.max(0) {
                for k in 0..=d.max(0) {
                    if Monomial::new(i as u32, j as u32, k as u32).degree(w) == d {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    #[test]
    fn basis_sizes_match_enumeration() {
        let w = Weights::new(1, 1, 2).unwrap();
        assert_eq!(brute_count(&w, 4), 9);
        assert_eq!(monomial_basis(&w, 4).len(), 9);
        let w = Weights::new(1, 2, 3).unwrap();
        assert_eq!(brute_count(&w, 6), 7);
        assert_eq!(monomial_basis(&w, 6).len(), 7);
        assert!(monomial_basis(&w, -1).is_empty());
        for d in 0..12 {
            assert_eq!(monomial_basis(&w, d).len(), brute_count(&w, d));
        }
    }

    #[test]
    fn order_is_graded_revlex() {
        let w = Weights::standard();
        let x = Monomial::new(1, 0, 0);
        let y = Monomial::new(0, 1, 0);
        let z = Monomial::new(0, 0, 1);
        assert_eq!(monomial_cmp(&w, &x, &y), Ordering::Greater);
        assert_eq!(monomial_cmp(&w, &y, &z), Ordering::Greater);
        let xyz = Monomial::new(1, 1, 1);
        let z3 = Monomial::new(0, 0, 3);
        let y3 = Monomial::new(0, 3, 0);
        assert_eq!(monomial_cmp(&w, &xyz, &z3), Ordering::Greater);
        assert_eq!(monomial_cmp(&w, &y3, &xyz), Ordering::Greater);
        // degree dominates
        let w2 = Weights::new(1, 1, 2).unwrap();
        assert_eq!(monomial_cmp(&w2, &Monomial::new(0, 0, 1), &Monomial::new(1, 0, 0)), Ordering::Greater);
    }

    #[test]
    fn weights_validation() {
        assert!(Weights::new(2, 4, 6).is_err());
        assert!(Weights::new(0, 1, 1).is_err());
        assert!(Weights::new(2, 3, 5).is_ok());
    }
}
