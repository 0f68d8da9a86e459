use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, FieldElement};
use super::weights::{monomial_cmp, Monomial, Weights};
use crate::error::{Error, Result};

/// Sparse polynomial in `x, y, z` over an exact field, with a weighted grading.
///
/// Terms are keyed by exponent triple; zero coefficients are never stored, so
/// structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    weights: Weights,
    field: Field,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(weights: Weights, field: Field) -> Self {
        Polynomial { weights, field, terms: BTreeMap::new() }
    }

    pub fn constant(weights: Weights, field: Field, c: FieldElement) -> Self {
        Self::monomial(weights, field, Monomial::ONE, c)
    }

    pub fn from_int(weights: Weights, field: Field, n: i64) -> Self {
        let c = field.from_int(n);
        Self::constant(weights, field, c)
    }

    pub fn one(weights: Weights, field: Field) -> Self {
        Self::from_int(weights, field, 1)
    }

    /// The generator `x` (0), `y` (1) or `z` (2).
    pub fn var(weights: Weights, field: Field, v: usize) -> Self {
        let one = field.one();
        Self::monomial(weights, field, Monomial::var(v), one)
    }

    pub fn monomial(weights: Weights, field: Field, m: Monomial, c: FieldElement) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { weights, field, terms }
    }

    pub fn from_terms<I>(weights: Weights, field: Field, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let mut p = Self::zero(weights, field);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Same ambient data, no terms.
    pub fn zero_like(&self) -> Self {
        Self::zero(self.weights, self.field.clone())
    }

    pub fn constant_like(&self, n: i64) -> Self {
        Self::from_int(self.weights, self.field.clone(), n)
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = self.field.add(existing, c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Largest weighted degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.degree(&self.weights)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree(&self.weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The common degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.degree()
        }
    }

    pub fn homogeneous_component(&self, d: i64) -> Polynomial {
        Polynomial {
            weights: self.weights,
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(&self.weights) == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_components(&self) -> BTreeMap<i64, Polynomial> {
        let mut out: BTreeMap<i64, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree(&self.weights))
                .or_insert_with(|| self.zero_like())
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// Terms from largest to smallest in the fixed monomial order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, FieldElement)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|p, q| monomial_cmp(&self.weights, &q.0, &p.0));
        v
    }

    pub fn leading_term(&self) -> Option<(Monomial, FieldElement)> {
        self.terms
            .iter()
            .max_by(|p, q| monomial_cmp(&self.weights, p.0, q.0))
            .map(|(m, c)| (*m, c.clone()))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.leading_term().map(|(m, _)| m)
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.weights != other.weights {
            return Err(Error::Config(format!(
                "weight mismatch: ({}) vs ({})",
                self.weights, other.weights
            )));
        }
        if self.field != other.field {
            return Err(Error::Config(format!(
                "field mismatch: {} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &self.field.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.zero_like();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return self.zero_like();
        }
        Polynomial {
            weights: self.weights,
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, self.field.mul(a, c))).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Polynomial {
        self.scale(&self.field.from_int(n))
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return self.zero_like();
        }
        Polynomial {
            weights: self.weights,
            field: self.field.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), self.field.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.constant_like(1);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative in variable `v` (0 = x, 1 = y, 2 = z).
    pub fn partial(&self, v: usize) -> Polynomial {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[v] -= 1;
            out.add_term(dm, &self.field.scale_int(c, e as i64));
        }
        out
    }

    /// Substitutes `x -> images[0]`, `y -> images[1]`, `z -> images[2]`.
    pub fn compose(&self, images: &[Polynomial; 3]) -> Result<Polynomial> {
        for img in images {
            self.check_compatible(img)?;
        }
        let mut powers: [Vec<Polynomial>; 3] = Default::default();
        for (v, img) in images.iter().enumerate() {
            let max_e = self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0);
            let mut pw = vec![self.constant_like(1)];
            for e in 1..=max_e as usize {
                let next = &pw[e - 1] * img;
                pw.push(next);
            }
            powers[v] = pw;
        }
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let t = &(&powers[0][m.0[0] as usize] * &powers[1][m.0[1] as usize])
                * &powers[2][m.0[2] as usize];
            out = &out + &t.scale(c);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over `target`, which must contain this
    /// polynomial's coefficients (currently: rationals into any field).
    pub fn promote(&self, target: &Field) -> Result<Polynomial> {
        if &self.field == target {
            return Ok(self.clone());
        }
        if !self.field.is_rationals() {
            return Err(Error::Config(format!("cannot move coefficients from {} to {}", self.field, target)));
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let r = c.as_rational().expect("rational coefficient").clone();
            (*m, target.from_rational(r))
        });
        Ok(Polynomial::from_terms(self.weights, target.clone(), terms))
    }

    /// Same polynomial regarded under different weights.
    pub fn with_weights(&self, weights: Weights) -> Polynomial {
        Polynomial { weights, field: self.field.clone(), terms: self.terms.clone() }
    }

    /// Largest power of each variable dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
        }
    }

    /// Divides every exponent by `m`; caller guarantees divisibility.
    pub fn div_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            weights: self.weights,
            field: self.field.clone(),
            terms: self.terms.iter().map(|(t, c)| (m.quotient_of(t), c.clone())).collect(),
        }
    }

    /// Makes the leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&self.field.inv(&lc).expect("nonzero leading coefficient")),
        }
    }

    /// Exponent of `v` in the highest power of `v` occurring.
    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[v]).max()
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            weights: self.weights,
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::format_poly(self))
    }
}
