use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{coordinate_matrix, from_coordinates, kernel_basis, rank, Matrix};
use crate::poisson::{potential_degree, PoissonStructure};
use crate::polyring::{monomial_basis, Field, Monomial, PolyVector, Polynomial, Weights};

/// A derivation of `k[x,y,z]`, stored by its values on `x`, `y`, `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation(PolyVector);

impl Derivation {
    pub fn new(values: PolyVector) -> Self {
        Derivation(values)
    }

    pub fn zero(weights: Weights, field: Field) -> Self {
        Derivation(PolyVector::zero(weights, field))
    }

    pub fn vector(&self) -> &PolyVector {
        &self.0
    }

    pub fn weights(&self) -> &Weights {
        self.0.weights()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `δ(f) = Σ δ(x_i) ∂f/∂x_i`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        self.0.dot(&PolyVector::gradient(f))
    }

    pub fn div(&self) -> Polynomial {
        self.0.div()
    }

    /// Common degree `d` with `δ(x_i)` homogeneous of degree `d + deg x_i`.
    /// `None` for the zero derivation and for inhomogeneous ones.
    pub fn degree(&self) -> Option<i64> {
        let w = self.weights();
        let mut out = None;
        for v in 0..3 {
            let p = self.0.get(v);
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree()? - w.of(v);
            match out {
                None => out = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        out
    }

    /// Zero, or homogeneous of degree `d`.
    pub fn has_degree(&self, d: i64) -> bool {
        self.is_zero() || self.degree() == Some(d)
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation(self.0.add(&other.0))
    }

    pub fn scale(&self, c: &Polynomial) -> Derivation {
        Derivation(self.0.scale(c))
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `E = (a x, b y, c z)`.
pub fn euler_derivation(weights: Weights, field: &Field) -> Derivation {
    let comp = |v| Polynomial::var(weights, field.clone(), v).scale_int(weights.of(v));
    Derivation(PolyVector::new(comp(0), comp(1), comp(2)))
}

/// Result of a graded twist together with whether it is still Poisson.
#[derive(Clone, Debug)]
pub struct Twist {
    pub structure: PoissonStructure,
    pub is_poisson: bool,
}

/// `π + E ∧ δ` for `δ` of degree zero:
/// `{u,v}_new = {u,v} + E(u) δ(v) - δ(u) E(v)` on generators.
pub fn graded_twist(s: &PoissonStructure, delta: &Derivation) -> Result<Twist> {
    if delta.weights() != s.weights() {
        return Err(Error::Config("derivation and structure use different weights".into()));
    }
    if !delta.has_degree(0) {
        return Err(Error::Domain("a graded twist needs a homogeneous derivation of degree 0".into()));
    }
    let e = euler_derivation(*s.weights(), s.field());
    let wedge = |u: usize, v: usize| {
        let a = e.vector().get(u) * delta.vector().get(v);
        let b = delta.vector().get(u) * e.vector().get(v);
        &a - &b
    };
    let structure = PoissonStructure::new(
        s.pxy() + &wedge(0, 1),
        s.pyz() + &wedge(1, 2),
        s.pzx() + &wedge(2, 0),
    )?;
    let is_poisson = structure.is_poisson();
    Ok(Twist { structure, is_poisson })
}

/// Monomial bases of `A_{d+a}`, `A_{d+b}`, `A_{d+c}`: the coordinates of a
/// degree `d` derivation.
pub(crate) fn derivation_bases(w: &Weights, d: i64) -> Vec<Vec<Monomial>> {
    (0..3).map(|v| monomial_basis(w, d + w.of(v))).collect()
}

/// Derivations `m ∂/∂x_i` spanning the degree `d` piece, in coordinate order.
fn unit_derivations(like: &Polynomial, bases: &[Vec<Monomial>]) -> Vec<PolyVector> {
    let (w, k) = (*like.weights(), like.field().clone());
    let mut out = Vec::new();
    for (i, b) in bases.iter().enumerate() {
        for m in b {
            out.push(PolyVector::unit(Polynomial::monomial(w, k.clone(), *m, k.one()), i));
        }
    }
    out
}

/// Matrix of `δ ↦ div(δ) ∇Ω - ∇(δ(Ω))` on degree `d` derivations.
fn poisson_condition_matrix(omega: &Polynomial, d: i64) -> Result<(Matrix, Vec<Vec<Monomial>>)> {
    let n = potential_degree(omega)?;
    let w = *omega.weights();
    let src = derivation_bases(&w, d);
    let grad = PolyVector::gradient(omega);
    let target: Vec<Vec<Monomial>> = (0..3).map(|j| monomial_basis(&w, d + n - w.of(j))).collect();
    let columns: Vec<Vec<Polynomial>> = unit_derivations(omega, &src)
        .into_iter()
        .map(|delta| {
            let dv = delta.div();
            let image = grad.scale(&dv).sub(&PolyVector::gradient(&delta.dot(&grad)));
            image.0.to_vec()
        })
        .collect();
    Ok((coordinate_matrix(omega.field(), &target, &columns)?, src))
}

/// Basis of the Poisson derivations of `π_Ω` of degree `d`.
pub fn graded_derivation_space(s: &PoissonStructure, d: i64) -> Result<Vec<Derivation>> {
    let omega = s.require_potential()?;
    let (m, src) = poisson_condition_matrix(omega, d)?;
    Ok(kernel_basis(&m)
        .into_iter()
        .map(|v| {
            let comps = from_coordinates(omega, &src, &v);
            Derivation(PolyVector::new(comps[0].clone(), comps[1].clone(), comps[2].clone()))
        })
        .collect())
}

/// Dimension of the degree `d` Poisson derivations of `π_Ω`.
pub fn pd_dim(omega: &Polynomial, d: i64) -> Result<usize> {
    let (m, _) = poisson_condition_matrix(omega, d)?;
    Ok(m.cols() - rank(&m))
}

fn require_balanced_degree(omega: &Polynomial) -> Result<()> {
    let n = potential_degree(omega)?;
    let w = omega.weights();
    if n != w.total() {
        return Err(Error::Unsupported(format!(
            "needs deg Ω = a+b+c = {}, got {n}",
            w.total()
        )));
    }
    Ok(())
}

/// `dim {δ ∈ Der(A)_0 : div δ = 0, δ(Ω) = 0}`.
pub fn semi_poisson_kernel_dim(omega: &Polynomial) -> Result<usize> {
    require_balanced_degree(omega)?;
    let w = *omega.weights();
    let n = w.total();
    let src = derivation_bases(&w, 0);
    let grad = PolyVector::gradient(omega);
    let target = vec![monomial_basis(&w, 0), monomial_basis(&w, n)];
    let columns: Vec<Vec<Polynomial>> =
        unit_derivations(omega, &src).into_iter().map(|delta| vec![delta.div(), delta.dot(&grad)]).collect();
    let m = coordinate_matrix(omega.field(), &target, &columns)?;
    Ok(m.cols() - rank(&m))
}

/// Rigidity: minus the dimension of the divergence-free degree zero
/// derivations killing `Ω`.
pub fn rgt(omega: &Polynomial) -> Result<i64> {
    Ok(-(semi_poisson_kernel_dim(omega)? as i64))
}

/// Dimensions of the Poisson derivations in degrees `-max(a,b,c) ..= -1`;
/// lower degrees have no nonzero derivations at all.
pub fn negative_degree_pd_dims(omega: &Polynomial) -> Result<BTreeMap<i64, usize>> {
    require_balanced_degree(omega)?;
    let lo = -omega.weights().max();
    (lo..=-1).map(|d| Ok((d, pd_dim(omega, d)?))).collect()
}
