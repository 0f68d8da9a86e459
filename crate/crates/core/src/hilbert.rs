//! Hilbert series as exact rational functions `N(t) / prod (1 - t^e)` with a
//! Laurent numerator, plus the closed forms used to cross-check computations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::Weights;

/// Laurent polynomial in `t` with integer coefficients, zero terms pruned.
pub type Laurent = BTreeMap<i64, BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numer: Laurent,
    /// Exponents `e >= 1`, sorted; each contributes a factor `1 - t^e`.
    denom: Vec<u32>,
}

fn prune(mut p: Laurent) -> Laurent {
    p.retain(|_, c| !c.is_zero());
    p
}

fn laurent_mul(p: &Laurent, q: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (i, a) in p {
        for (j, b) in q {
            *out.entry(i + j).or_insert_with(BigInt::zero) += a * b;
        }
    }
    prune(out)
}

fn laurent_add(p: &Laurent, q: &Laurent, sign: i64) -> Laurent {
    let mut out = p.clone();
    for (j, b) in q {
        *out.entry(*j).or_insert_with(BigInt::zero) += b * sign;
    }
    prune(out)
}

/// `1 - t^e` for any integer `e` (zero when `e = 0`).
fn one_minus(e: i64) -> Laurent {
    let mut p = Laurent::new();
    *p.entry(0).or_insert_with(BigInt::zero) += 1;
    *p.entry(e).or_insert_with(BigInt::zero) -= 1;
    prune(p)
}

impl HilbertSeries {
    /// Builds `numer / prod (1 - t^e)`; zero exponents in `denom` are rejected.
    pub fn new(numer: Laurent, denom: &[u32]) -> Result<Self> {
        if denom.contains(&0) {
            return Err(Error::Domain("denominator factor 1 - t^0 vanishes".into()));
        }
        let mut denom = denom.to_vec();
        denom.sort_unstable();
        Ok(HilbertSeries { numer: prune(numer), denom })
    }

    /// `sum_k c_k t^{e_k} / prod (1 - t^d)` from `(e_k, c_k)` pairs.
    pub fn from_terms(terms: &[(i64, i64)], denom: &[u32]) -> Result<Self> {
        let mut n = Laurent::new();
        for &(e, c) in terms {
            *n.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::new(n, denom)
    }

    pub fn zero() -> Self {
        HilbertSeries { numer: Laurent::new(), denom: Vec::new() }
    }

    /// `t^k`.
    pub fn monomial(k: i64) -> Self {
        Self::from_terms(&[(k, 1)], &[]).expect("no denominator")
    }

    /// `1 / prod (1 - t^w)` over the generator weights.
    pub fn polynomial_ring(w: &Weights) -> Self {
        Self::from_terms(&[(0, 1)], &[w.a, w.b, w.c]).expect("positive weights")
    }

    pub fn numerator(&self) -> &Laurent {
        &self.numer
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    /// Multiplies the numerator by `prod (1 - t^e)` over `factors`.
    pub fn times_factors(&self, factors: &[i64]) -> Self {
        let mut n = self.numer.clone();
        for &e in factors {
            n = laurent_mul(&n, &one_minus(e));
        }
        HilbertSeries { numer: n, denom: self.denom.clone() }
    }

    pub fn shift(&self, k: i64) -> Self {
        HilbertSeries {
            numer: self.numer.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            denom: self.denom.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        HilbertSeries {
            numer: self.numer.iter().map(|(e, c)| (*e, -c)).collect(),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denom = self.denom.clone();
        denom.extend_from_slice(&other.denom);
        denom.sort_unstable();
        HilbertSeries { numer: laurent_mul(&self.numer, &other.numer), denom }
    }

    /// Rewrites both series over the smallest common multiset of factors.
    fn common(&self, other: &Self) -> (Laurent, Laurent, Vec<u32>) {
        let count = |v: &[u32]| {
            let mut m: BTreeMap<u32, usize> = BTreeMap::new();
            for &e in v {
                *m.entry(e).or_default() += 1;
            }
            m
        };
        let (ca, cb) = (count(&self.denom), count(&other.denom));
        let mut union = ca.clone();
        for (e, k) in &cb {
            let slot = union.entry(*e).or_default();
            *slot = (*slot).max(*k);
        }
        let lift = |numer: &Laurent, own: &BTreeMap<u32, usize>| {
            let mut n = numer.clone();
            for (e, k) in &union {
                for _ in own.get(e).copied().unwrap_or(0)..*k {
                    n = laurent_mul(&n, &one_minus(*e as i64));
                }
            }
            n
        };
        let denom = union.iter().flat_map(|(e, k)| std::iter::repeat_n(*e, *k)).collect();
        (lift(&self.numer, &ca), lift(&other.numer, &cb), denom)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (p, q, denom) = self.common(other);
        HilbertSeries { numer: laurent_add(&p, &q, 1), denom }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (p, q, denom) = self.common(other);
        HilbertSeries { numer: laurent_add(&p, &q, -1), denom }
    }

    /// Coefficients of `t^d` for `d_min <= d <= d_max`.
    pub fn expand(&self, d_min: i64, d_max: i64) -> Vec<BigInt> {
        if d_max < d_min {
            return Vec::new();
        }
        let lo = self.numer.keys().next().copied().unwrap_or(d_min).min(d_min);
        let len = (d_max - lo + 1) as usize;
        let mut c = vec![BigInt::zero(); len];
        for (e, v) in self.numer.range(lo..=d_max) {
            c[(e - lo) as usize] += v;
        }
        for &e in &self.denom {
            let e = e as usize;
            for i in e..len {
                let prev = c[i - e].clone();
                c[i] += prev;
            }
        }
        c.split_off((d_min - lo) as usize)
    }

    /// Single coefficient of `t^d`.
    pub fn coefficient(&self, d: i64) -> BigInt {
        self.expand(d, d).pop().unwrap_or_default()
    }

    /// Order of the pole at `t = 1`: the number of denominator factors minus
    /// the multiplicity of `t = 1` as a root of the numerator. The zero
    /// series has no pole.
    pub fn pole_order_at_one(&self) -> i64 {
        if self.numer.is_empty() {
            return 0;
        }
        let lo = *self.numer.keys().next().unwrap();
        let hi = *self.numer.keys().last().unwrap();
        // ordinary polynomial after removing t^lo, constant term first
        let mut p: Vec<BigInt> = (lo..=hi).map(|e| self.numer.get(&e).cloned().unwrap_or_default()).collect();
        let mut mult = 0;
        loop {
            let at_one: BigInt = p.iter().sum();
            if !at_one.is_zero() || p.len() < 2 {
                break;
            }
            // divide by (t - 1) synthetically, highest degree first
            let deg = p.len() - 1;
            let mut q = vec![BigInt::zero(); deg];
            let mut carry = BigInt::zero();
            for i in (1..=deg).rev() {
                carry += &p[i];
                q[i - 1] = carry.clone();
            }
            p = q;
            mult += 1;
        }
        self.denom.len() as i64 - mult
    }

    /// Substitutes `t -> t^(1/g)`: every exponent is divided by `g`.
    pub fn divide_degrees(&self, g: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::Domain("cannot divide degrees by zero".into()));
        }
        let gi = g as i64;
        if self.numer.keys().any(|e| e % gi != 0) || self.denom.iter().any(|e| e % g != 0) {
            return Err(Error::Domain(format!("not every exponent is divisible by {g}")));
        }
        Ok(HilbertSeries {
            numer: self.numer.iter().map(|(e, c)| (e / gi, c.clone())).collect(),
            denom: self.denom.iter().map(|e| e / g).collect(),
        })
    }
}

/// Exact equality of rational functions.
pub fn series_equal(h1: &HilbertSeries, h2: &HilbertSeries) -> bool {
    let (p, q, _) = h1.common(h2);
    p == q
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        for (e, c) in &self.numer {
            let neg = c.is_negative();
            let mag = c.abs();
            if num.is_empty() {
                if neg {
                    num.push('-');
                }
            } else {
                num.push_str(if neg { " - " } else { " + " });
            }
            let var = match *e {
                0 => String::new(),
                1 => "t".into(),
                e => format!("t^{e}"),
            };
            if var.is_empty() {
                num.push_str(&mag.to_string());
            } else if mag.is_one() {
                num.push_str(&var);
            } else {
                num.push_str(&format!("{mag}*{var}"));
            }
        }
        if num.is_empty() {
            num.push('0');
        }
        if self.denom.is_empty() {
            return write!(f, "{num}");
        }
        let den: Vec<String> = self
            .denom
            .iter()
            .map(|&e| if e == 1 { "(1-t)".to_string() } else { format!("(1-t^{e})") })
            .collect();
        write!(f, "({num})/({})", den.join(""))
    }
}

/// Serializable rendering used by reports.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesText {
    pub numerator: Vec<(i64, String)>,
    pub denominator: Vec<u32>,
    pub text: String,
}

impl From<&HilbertSeries> for SeriesText {
    fn from(h: &HilbertSeries) -> Self {
        SeriesText {
            numerator: h.numer.iter().map(|(e, c)| (*e, c.to_string())).collect(),
            denominator: h.denom.clone(),
            text: h.to_string(),
        }
    }
}

/// Poisson cohomology series for a balanced irreducible potential of degree
/// `n = a + b + c`.
pub fn closed_form_ph(w: &Weights, i: usize) -> Result<HilbertSeries> {
    closed_form_ph_general(w, w.total(), i)
}

/// The general-degree version, valid for potentials of degree `n` satisfying
/// the cohomological hypotheses (centre `k[Omega]`, H-ozone, a degree-zero
/// non-ozone derivation, no Poisson derivation of degree `-n`). With
/// `n = a + b + c` this is [`closed_form_ph`].
pub fn closed_form_ph_general(w: &Weights, n: i64, i: usize) -> Result<HilbertSeries> {
    if n <= 0 {
        return Err(Error::Precondition(format!("potential degree must be positive, got {n}")));
    }
    let (a, b, c) = (w.a as i64, w.b as i64, w.c as i64);
    let nn = n as u32;
    let z = HilbertSeries::from_terms(&[(0, 1)], &[nn])?;
    match i {
        0 | 1 => Ok(z),
        2 => {
            let r = HilbertSeries::from_terms(&[(0, 1)], &[nn, w.a, w.b, w.c])?
                .times_factors(&[n - a, n - b, n - c]);
            Ok(r.sub(&HilbertSeries::monomial(0)).shift(-(a + b + c)))
        }
        3 => Ok(HilbertSeries::from_terms(&[(-(a + b + c), 1)], &[nn, w.a, w.b, w.c])?
            .times_factors(&[n - a, n - b, n - c])),
        _ => Err(Error::Domain(format!("cohomology index {i} out of range 0..=3"))),
    }
}

/// Series of the lower part of the second Poisson cohomology for a potential
/// of degree `n` whose PH^0 and PH^1 both have series `1/(1-t^n)`.
pub fn closed_form_lph2(w: &Weights, n: i64) -> Result<HilbertSeries> {
    if n <= w.max() {
        return Err(Error::Precondition(format!(
            "degree {n} must exceed every weight of ({w})"
        )));
    }
    closed_form_ph_general(w, n, 2)
}

/// First Koszul homology of `xyz + g(x, y)` in the grading `(a', b', c')`
/// with `c' = a'b' - a' - b'`: `t^(c'+a'b') / (1 - t^c')`.
pub fn closed_form_koszul_h1(a1: u32, b1: u32) -> Result<HilbertSeries> {
    if a1 < 3 || b1 < 3 {
        return Err(Error::Precondition(format!("need a', b' >= 3, got ({a1}, {b1})")));
    }
    let c1 = a1 * b1 - a1 - b1;
    HilbertSeries::from_terms(&[((c1 + a1 * b1) as i64, 1)], &[c1])
}

/// Right-hand side of the Euler characteristic identity
/// `sum_i (-t^-w)^i h_{PH^i} = -t^-(3w+a+b+c) prod (1-t^(w+v)) / prod (1-t^v)`.
pub fn euler_characteristic_rhs(w: &Weights, n: i64) -> HilbertSeries {
    let (a, b, c) = (w.a as i64, w.b as i64, w.c as i64);
    let ww = n - a - b - c;
    HilbertSeries::polynomial_ring(w)
        .times_factors(&[ww + a, ww + b, ww + c])
        .shift(-(3 * ww + a + b + c))
        .neg()
}

/// Integer coefficient vector helper for comparisons with computed tables.
pub fn expand_i64(h: &HilbertSeries, d_min: i64, d_max: i64) -> Vec<i64> {
    h.expand(d_min, d_max)
        .into_iter()
        .map(|c| i64::try_from(c).expect("coefficient fits in i64"))
        .collect()
}

/// `gcd` of a list of positive integers; used when passing between gradings.
pub fn gcd_all(v: &[u32]) -> u32 {
    v.iter().fold(0u32, |acc, &x| acc.gcd(&x))
}
