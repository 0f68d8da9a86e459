//! Exact coefficient fields: the rationals and simple extensions `Q[s]/(m(s))`.
//!
//! Coefficients are plain data ([`FieldElement`]); every arithmetic operation
//! goes through the owning [`Field`], which carries the modulus for extensions.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
enum FieldKind {
    Rationals,
    /// Monic integer modulus, coefficients from constant term upwards.
    Extension { modulus: Vec<BigInt> },
}

/// A coefficient field. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldKind>);

/// An element of a [`Field`].
///
/// Rational fields hold `Rational`; an extension of degree `k` holds an
/// `Extension` vector of exactly `k` coefficients (constant term first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Extension(Vec<BigRational>),
}

impl Default for Field {
    fn default() -> Self {
        Field::rationals()
    }
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldKind::Rationals))
    }

    /// `Q[s]/(m)` for a monic integer polynomial `m` given constant term first.
    ///
    /// Irreducibility of `m` is the caller's responsibility; with a reducible
    /// modulus some nonzero elements have no inverse.
    pub fn extension(modulus: &[i64]) -> Result<Self> {
        Self::extension_big(modulus.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn extension_big(mut modulus: Vec<BigInt>) -> Result<Self> {
        while modulus.last().is_some_and(Zero::is_zero) {
            modulus.pop();
        }
        if modulus.len() < 2 {
            return Err(Error::Config(
                "extension modulus must have degree at least 1".into(),
            ));
        }
        if !modulus.last().unwrap().is_one() {
            return Err(Error::Config("extension modulus must be monic".into()));
        }
        Ok(Field(Arc::new(FieldKind::Extension { modulus })))
    }

    /// The `n`-th cyclotomic polynomial as an extension field.
    pub fn cyclotomic(n: u32) -> Result<Self> {
        Self::extension_big(cyclotomic_polynomial(n))
    }

    pub fn is_rationals(&self) -> bool {
        matches!(*self.0, FieldKind::Rationals)
    }

    /// Extension degree over Q (1 for the rationals).
    pub fn degree(&self) -> usize {
        match &*self.0 {
            FieldKind::Rationals => 1,
            FieldKind::Extension { modulus } => modulus.len() - 1,
        }
    }

    pub fn modulus(&self) -> Option<&[BigInt]> {
        match &*self.0 {
            FieldKind::Rationals => None,
            FieldKind::Extension { modulus } => Some(modulus),
        }
    }

    pub fn zero(&self) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement::Rational(BigRational::zero()),
            FieldKind::Extension { .. } => {
                FieldElement::Extension(vec![BigRational::zero(); self.degree()])
            }
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, r: BigRational) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement::Rational(r),
            FieldKind::Extension { .. } => {
                let mut v = vec![BigRational::zero(); self.degree()];
                v[0] = r;
                FieldElement::Extension(v)
            }
        }
    }

    /// The adjoined root `s`, or `None` over the rationals.
    pub fn generator(&self) -> Option<FieldElement> {
        match &*self.0 {
            FieldKind::Rationals => None,
            FieldKind::Extension { .. } => {
                let mut v = vec![BigRational::zero(); self.degree()];
                if v.len() == 1 {
                    // degree-1 modulus s + c: s = -c
                    let m = self.modulus().unwrap();
                    v[0] = BigRational::from_integer(-m[0].clone());
                } else {
                    v[1] = BigRational::one();
                }
                Some(FieldElement::Extension(v))
            }
        }
    }

    /// Element from a coefficient vector in `s` of any length, reduced mod m.
    pub fn from_s_coeffs(&self, coeffs: Vec<BigRational>) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => {
                FieldElement::Rational(coeffs.into_iter().next().unwrap_or_else(BigRational::zero))
            }
            FieldKind::Extension { modulus } => FieldElement::Extension(reduce_mod(coeffs, modulus)),
        }
    }

    pub fn contains(&self, e: &FieldElement) -> bool {
        match (&*self.0, e) {
            (FieldKind::Rationals, FieldElement::Rational(_)) => true,
            (FieldKind::Extension { .. }, FieldElement::Extension(v)) => v.len() == self.degree(),
            _ => false,
        }
    }

    pub fn add(&self, u: &FieldElement, v: &FieldElement) -> FieldElement {
        match (u, v) {
            (FieldElement::Rational(p), FieldElement::Rational(q)) => FieldElement::Rational(p + q),
            (FieldElement::Extension(p), FieldElement::Extension(q)) => {
                FieldElement::Extension(p.iter().zip(q).map(|(a, b)| a + b).collect())
            }
            _ => panic!("field element mismatch in add"),
        }
    }

    pub fn sub(&self, u: &FieldElement, v: &FieldElement) -> FieldElement {
        self.add(u, &self.neg(v))
    }

    pub fn neg(&self, u: &FieldElement) -> FieldElement {
        match u {
            FieldElement::Rational(p) => FieldElement::Rational(-p),
            FieldElement::Extension(p) => FieldElement::Extension(p.iter().map(|a| -a).collect()),
        }
    }

    pub fn mul(&self, u: &FieldElement, v: &FieldElement) -> FieldElement {
        match (u, v, &*self.0) {
            (FieldElement::Rational(p), FieldElement::Rational(q), _) => {
                FieldElement::Rational(p * q)
            }
            (FieldElement::Extension(p), FieldElement::Extension(q), FieldKind::Extension { modulus }) => {
                let mut prod = vec![BigRational::zero(); p.len() + q.len() - 1];
                for (i, a) in p.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in q.iter().enumerate() {
                        if !b.is_zero() {
                            prod[i + j] += a * b;
                        }
                    }
                }
                FieldElement::Extension(reduce_mod(prod, modulus))
            }
            _ => panic!("field element mismatch in mul"),
        }
    }

    pub fn scale_int(&self, u: &FieldElement, n: i64) -> FieldElement {
        let k = BigRational::from_integer(n.into());
        match u {
            FieldElement::Rational(p) => FieldElement::Rational(p * &k),
            FieldElement::Extension(p) => FieldElement::Extension(p.iter().map(|a| a * &k).collect()),
        }
    }

    /// Multiplicative inverse; `None` for zero (or a zero divisor when the
    /// modulus is reducible).
    pub fn inv(&self, u: &FieldElement) -> Option<FieldElement> {
        match (u, &*self.0) {
            (FieldElement::Rational(p), _) => {
                if p.is_zero() {
                    None
                } else {
                    Some(FieldElement::Rational(p.recip()))
                }
            }
            (FieldElement::Extension(p), FieldKind::Extension { modulus }) => {
                let m: Vec<BigRational> =
                    modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                ext_inverse(p, &m).map(FieldElement::Extension)
            }
            _ => panic!("field element mismatch in inv"),
        }
    }

    pub fn div(&self, u: &FieldElement, v: &FieldElement) -> Option<FieldElement> {
        self.inv(v).map(|vi| self.mul(u, &vi))
    }

    pub fn pow(&self, u: &FieldElement, mut e: u32) -> FieldElement {
        let mut base = u.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Rationals => write!(f, "QQ"),
            FieldKind::Extension { modulus } => {
                let coeffs: Vec<BigRational> =
                    modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                write!(f, "QQ[s]/({})", format_s_poly(&coeffs))
            }
        }
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(p) => p.is_zero(),
            FieldElement::Extension(v) => v.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(p) => p.is_one(),
            FieldElement::Extension(v) => {
                v[0].is_one() && v[1..].iter().all(Zero::is_zero)
            }
        }
    }

    /// The value as a rational number, if it lies in the prime field.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(p) => Some(p),
            FieldElement::Extension(v) => {
                if v[1..].iter().all(Zero::is_zero) {
                    Some(&v[0])
                } else {
                    None
                }
            }
        }
    }

    /// Coefficients in `s`, constant term first (length 1 for rationals).
    pub fn s_coeffs(&self) -> Vec<BigRational> {
        match self {
            FieldElement::Rational(p) => vec![p.clone()],
            FieldElement::Extension(v) => v.clone(),
        }
    }

    /// True when the printed form needs parentheses to act as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        match self {
            FieldElement::Rational(_) => false,
            FieldElement::Extension(v) => v.iter().filter(|c| !c.is_zero()).count() > 1,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(p) => write!(f, "{}", p),
            FieldElement::Extension(v) => write!(f, "{}", format_s_poly(v)),
        }
    }
}

/// Renders `c0 + c1*s + ...` in descending powers, using the expression grammar.
fn format_s_poly(coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let var = match k {
            0 => String::new(),
            1 => "s".to_string(),
            _ => format!("s^{}", k),
        };
        if var.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&format!("{}*{}", mag, var));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn reduce_mod(mut p: Vec<BigRational>, modulus: &[BigInt]) -> Vec<BigRational> {
    let k = modulus.len() - 1;
    while p.len() > k {
        let lead = p.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        // s^k = -(m_0 + ... + m_{k-1} s^{k-1})
        let shift = p.len() - k;
        for (i, mi) in modulus[..k].iter().enumerate() {
            if !mi.is_zero() {
                p[shift + i] -= &lead * BigRational::from_integer(mi.clone());
            }
        }
    }
    p.resize(k, BigRational::zero());
    p
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Dense polynomial division with remainder over Q.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `p` modulo `m` by the extended Euclidean algorithm.
fn ext_inverse(p: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = m.len() - 1;
    let mut r0 = m.to_vec();
    let mut r1 = p.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut t0: Vec<BigRational> = vec![];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    // r0 is the gcd; invertible iff it is a nonzero constant
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let mut inv: Vec<BigRational> = t0.into_iter().map(|t| t * &c).collect();
    let (_, rem) = poly_divrem(&inv, m);
    inv = rem;
    inv.resize(k, BigRational::zero());
    Some(inv)
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // Phi_n = (s^n - 1) / prod_{d | n, d < n} Phi_d
    let to_q = |v: Vec<BigInt>| -> Vec<BigRational> {
        v.into_iter().map(BigRational::from_integer).collect()
    };
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, _) = poly_divrem(&num, &to_q(cyclotomic_polynomial(d)));
            num = q;
        }
    }
    num.into_iter().map(|c| c.to_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rational_axioms() {
        let f = Field::rationals();
        let u = q(3, 7);
        let v = q(-5, 2);
        assert_eq!(f.sub(&f.add(&u, &v), &v), u);
        assert_eq!(f.div(&f.mul(&u, &v), &v).unwrap(), u);
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn cube_root_of_unity_sums_to_zero() {
        let f = Field::extension(&[1, 1, 1]).unwrap();
        let s = f.generator().unwrap();
        let s2 = f.mul(&s, &s);
        let total = f.add(&f.add(&f.one(), &s), &s2);
        assert!(total.is_zero());
        assert!(f.pow(&s, 3).is_one());
    }

    #[test]
    fn extension_inverse_round_trips() {
        let f = Field::extension(&[1, 0, 1]).unwrap(); // s^2 + 1
        let i = f.generator().unwrap();
        let u = f.add(&f.from_int(2), &f.scale_int(&i, 3));
        let ui = f.inv(&u).unwrap();
        assert!(f.mul(&u, &ui).is_one());
    }

    #[test]
    fn cyclotomics() {
        let to_i = |v: Vec<BigInt>| v.into_iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(to_i(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn non_monic_modulus_rejected() {
        assert!(Field::extension(&[2, 1]).is_ok());
        assert!(Field::extension(&[1, 2]).is_err());
        assert!(Field::extension(&[1, 0, 2]).is_err());
        assert!(Field::extension(&[5]).is_err());
    }

    #[test]
    fn display() {
        let f = Field::extension(&[1, 1, 1]).unwrap();
        let s = f.generator().unwrap();
        let e = f.add(&f.from_int(-2), &f.scale_int(&s, 3));
        assert_eq!(e.to_string(), "3*s-2");
        assert_eq!(f.to_string(), "QQ[s]/(s^2+s+1)");
    }
}
