//! Seeded randomized property suites, runnable from the command line.
//!
//! Each suite draws its cases from a ChaCha stream keyed by the seed and the
//! suite name, so a suite gives the same cases whether run alone or with the
//! others.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank, Matrix};
use crate::poisson::PoissonStructure;
use crate::polyring::{monomial_basis, Field, FieldElement, Monomial, PolyVector, Polynomial, Weights};
use crate::textio::{format_poly, parse_poly};

pub const SUITES: [&str; 4] = ["bracket", "rank-nullity", "curl-grad", "roundtrip"];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    /// Descriptions of the failing cases, empty on success.
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_suite(name: &str, seed: u64, cases: usize) -> Result<SuiteResult> {
    let offset = SUITES
        .iter()
        .position(|s| *s == name)
        .ok_or_else(|| Error::Config(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", "))))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(offset as u64);
    let mut failures = Vec::new();
    for case in 0..cases {
        let outcome = match name {
            "bracket" => bracket_case(&mut rng),
            "rank-nullity" => rank_nullity_case(&mut rng),
            "curl-grad" => curl_grad_case(&mut rng),
            _ => roundtrip_case(&mut rng),
        };
        if let Some(msg) = outcome {
            failures.push(format!("case {case}: {msg}"));
        }
    }
    Ok(SuiteResult { suite: name.to_string(), seed, cases, failures })
}

pub fn run_all(seed: u64, cases: usize) -> Vec<SuiteResult> {
    SUITES.iter().map(|s| run_suite(s, seed, cases).expect("known suite")).collect()
}

fn weights(rng: &mut ChaCha8Rng) -> Weights {
    const CHOICES: [(u32, u32, u32); 6] = [(1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 3, 5), (1, 2, 2), (3, 4, 5)];
    let (a, b, c) = CHOICES[rng.gen_range(0..CHOICES.len())];
    Weights::new(a, b, c).expect("valid weights")
}

fn field(rng: &mut ChaCha8Rng) -> Field {
    match rng.gen_range(0..4) {
        0 => Field::extension(&[1, 0, 1]).expect("s^2+1"),
        1 => Field::extension(&[1, 1, 1]).expect("s^2+s+1"),
        _ => Field::rationals(),
    }
}

fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=4);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn scalar(rng: &mut ChaCha8Rng, k: &Field) -> FieldElement {
    let coeffs = (0..k.degree()).map(|_| rational(rng)).collect();
    k.from_s_coeffs(coeffs)
}

fn poly(rng: &mut ChaCha8Rng, w: Weights, k: &Field) -> Polynomial {
    let terms = rng.gen_range(0..=5);
    Polynomial::from_terms(
        w,
        k.clone(),
        (0..terms).map(|_| {
            let m = Monomial::new(rng.gen_range(0..4), rng.gen_range(0..4), rng.gen_range(0..4));
            (m, scalar(rng, k))
        }),
    )
}

fn homogeneous(rng: &mut ChaCha8Rng, w: Weights, k: &Field, d: i64) -> Polynomial {
    let basis = monomial_basis(&w, d);
    let mut p = Polynomial::zero(w, k.clone());
    for m in basis {
        if rng.gen_bool(0.5) {
            p.add_term(m, &scalar(rng, k));
        }
    }
    p
}

/// Antisymmetry and Leibniz for an arbitrary skew biderivation, and the
/// Jacobi identity for a bracket coming from a homogeneous potential.
fn bracket_case(rng: &mut ChaCha8Rng) -> Option<String> {
    let w = weights(rng);
    let k = field(rng);
    let s = PoissonStructure::new(poly(rng, w, &k), poly(rng, w, &k), poly(rng, w, &k)).ok()?;
    let (f, g, h) = (poly(rng, w, &k), poly(rng, w, &k), poly(rng, w, &k));
    let fg = s.bracket(&f, &g);
    if fg != -&s.bracket(&g, &f) {
        return Some(format!("antisymmetry fails for f = {f}, g = {g}"));
    }
    let lhs = s.bracket(&f, &(&g * &h));
    let rhs = &(&s.bracket(&f, &g) * &h) + &(&g * &s.bracket(&f, &h));
    if lhs != rhs {
        return Some(format!("Leibniz fails for f = {f}, g = {g}, h = {h}"));
    }
    let d = rng.gen_range(1..=2 * w.total());
    let omega = homogeneous(rng, w, &k, d);
    if omega.is_zero() {
        return None;
    }
    let pi = PoissonStructure::from_potential(&omega).ok()?;
    let jac = pi.jacobiator();
    if !jac.is_zero() {
        return Some(format!("Jacobi fails for Ω = {omega}: {jac}"));
    }
    None
}

fn rank_nullity_case(rng: &mut ChaCha8Rng) -> Option<String> {
    let k = field(rng);
    let rows = rng.gen_range(1..=7);
    let cols = rng.gen_range(1..=7);
    // low rank matrices are likely when a few rows are combinations of others
    let mut entries: Vec<Vec<FieldElement>> = Vec::new();
    for _ in 0..rows {
        let row = if entries.len() >= 2 && rng.gen_bool(0.4) {
            let (i, j) = (rng.gen_range(0..entries.len()), rng.gen_range(0..entries.len()));
            let (u, v) = (scalar(rng, &k), scalar(rng, &k));
            (0..cols).map(|c| k.add(&k.mul(&u, &entries[i][c]), &k.mul(&v, &entries[j][c]))).collect()
        } else {
            (0..cols).map(|_| if rng.gen_bool(0.3) { k.zero() } else { scalar(rng, &k) }).collect()
        };
        entries.push(row);
    }
    let m = Matrix::from_rows(&k, entries).ok()?;
    let r = rank(&m);
    let kernel = kernel_basis(&m);
    if r + kernel.len() != cols {
        return Some(format!("rank {r} + nullity {} != {cols} for\n{m}", kernel.len()));
    }
    for v in &kernel {
        if m.mul_vec(v).ok()?.iter().any(|e| !e.is_zero()) {
            return Some(format!("kernel vector not annihilated by\n{m}"));
        }
    }
    if rank(&m.transpose()) != r {
        return Some(format!("row rank differs from column rank for\n{m}"));
    }
    None
}

fn curl_grad_case(rng: &mut ChaCha8Rng) -> Option<String> {
    let w = weights(rng);
    let k = field(rng);
    let f = poly(rng, w, &k);
    if !PolyVector::gradient(&f).curl().is_zero() {
        return Some(format!("curl grad f != 0 for f = {f}"));
    }
    let v = PolyVector::new(poly(rng, w, &k), poly(rng, w, &k), poly(rng, w, &k));
    if !v.curl().div().is_zero() {
        return Some("div curl F != 0".into());
    }
    None
}

fn roundtrip_case(rng: &mut ChaCha8Rng) -> Option<String> {
    let w = weights(rng);
    let k = field(rng);
    let f = poly(rng, w, &k);
    let text = format_poly(&f);
    match parse_poly(&text, w, &k) {
        Ok(g) if g == f => {
            let again = format_poly(&g);
            (again != text).then(|| format!("format is not idempotent: `{text}` then `{again}`"))
        }
        Ok(g) => Some(format!("`{text}` parsed back as `{g}`")),
        Err(e) => Some(format!("`{text}` does not parse: {e}")),
    }
}
