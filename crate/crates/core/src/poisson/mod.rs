//! Poisson structures on `k[x,y,z]`: brackets from a potential, derivations,
//! graded twists, rigidity and automorphism checks.

mod automorphism;
mod derivation;

pub use automorphism::{
    jacobian_determinant, verify_automorphism, verify_quotient_automorphism, AutomorphismReport,
    QuotientAutomorphismReport,
};
pub use derivation::{
    euler_derivation, graded_derivation_space, graded_twist, negative_degree_pd_dims, pd_dim, rgt,
    semi_poisson_kernel_dim, Derivation, Twist,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Field, PolyVector, Polynomial, Weights};

/// A skew biderivation on `k[x,y,z]`, given by its values on generators.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonStructure {
    pxy: Polynomial,
    pyz: Polynomial,
    pzx: Polynomial,
    potential: Option<Polynomial>,
}

/// Checks that `omega` is nonzero and homogeneous of positive degree and
/// returns that degree.
pub fn potential_degree(omega: &Polynomial) -> Result<i64> {
    match omega.homogeneous_degree() {
        Some(n) if n > 0 && !omega.is_zero() => Ok(n),
        _ => Err(Error::Domain("the potential must be nonzero and homogeneous of positive degree".into())),
    }
}

impl PoissonStructure {
    /// Structure with `{x,y} = pxy`, `{y,z} = pyz`, `{z,x} = pzx`. The Jacobi
    /// identity is not required.
    pub fn new(pxy: Polynomial, pyz: Polynomial, pzx: Polynomial) -> Result<Self> {
        if pxy.weights() != pyz.weights() || pxy.weights() != pzx.weights() {
            return Err(Error::Config("structure polynomials use different weights".into()));
        }
        if pxy.field() != pyz.field() || pxy.field() != pzx.field() {
            return Err(Error::Config("structure polynomials use different fields".into()));
        }
        Ok(PoissonStructure { pxy, pyz, pzx, potential: None })
    }

    /// `π_Ω`: `{x,y} = Ω_z`, `{y,z} = Ω_x`, `{z,x} = Ω_y`.
    pub fn from_potential(omega: &Polynomial) -> Result<Self> {
        potential_degree(omega)?;
        Ok(PoissonStructure {
            pxy: omega.partial(2),
            pyz: omega.partial(0),
            pzx: omega.partial(1),
            potential: Some(omega.clone()),
        })
    }

    pub fn pxy(&self) -> &Polynomial {
        &self.pxy
    }

    pub fn pyz(&self) -> &Polynomial {
        &self.pyz
    }

    pub fn pzx(&self) -> &Polynomial {
        &self.pzx
    }

    pub fn potential(&self) -> Option<&Polynomial> {
        self.potential.as_ref()
    }

    pub(crate) fn require_potential(&self) -> Result<&Polynomial> {
        self.potential
            .as_ref()
            .ok_or_else(|| Error::Unsupported("operation needs a structure built from a potential".into()))
    }

    pub fn weights(&self) -> &Weights {
        self.pxy.weights()
    }

    pub fn field(&self) -> &Field {
        self.pxy.field()
    }

    /// `({y,z}, {z,x}, {x,y})`, so that `{f,g} = (∇f × ∇g) · P`.
    pub fn bivector(&self) -> PolyVector {
        PolyVector::new(self.pyz.clone(), self.pzx.clone(), self.pxy.clone())
    }

    /// Degree `w` with `deg {u,v} = deg u + deg v + w` on generators, when the
    /// structure is homogeneous in that sense and nonzero.
    pub fn bracket_degree(&self) -> Option<i64> {
        let w = self.weights();
        let pairs = [(&self.pyz, w.of(1) + w.of(2)), (&self.pzx, w.of(2) + w.of(0)), (&self.pxy, w.of(0) + w.of(1))];
        let mut out = None;
        for (p, shift) in pairs {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree()? - shift;
            match out {
                None => out = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        out
    }

    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        PolyVector::gradient(f).cross(&PolyVector::gradient(g)).dot(&self.bivector())
    }

    /// `{x,{y,z}} + {y,{z,x}} + {z,{x,y}}`; zero iff the Jacobi identity holds.
    pub fn jacobiator(&self) -> Polynomial {
        let x = self.generator(0);
        let y = self.generator(1);
        let z = self.generator(2);
        let t1 = self.bracket(&x, &self.pyz);
        let t2 = self.bracket(&y, &self.pzx);
        let t3 = self.bracket(&z, &self.pxy);
        &(&t1 + &t2) + &t3
    }

    pub fn is_poisson(&self) -> bool {
        self.jacobiator().is_zero()
    }

    pub(crate) fn generator(&self, v: usize) -> Polynomial {
        Polynomial::var(*self.weights(), self.field().clone(), v)
    }

    /// `H_f = {f, -}`.
    pub fn hamiltonian(&self, f: &Polynomial) -> Derivation {
        Derivation::new(PolyVector::new(
            self.bracket(f, &self.generator(0)),
            self.bracket(f, &self.generator(1)),
            self.bracket(f, &self.generator(2)),
        ))
    }

    /// `m(v) = -div(H_v)` on generators.
    pub fn modular_derivation(&self) -> Derivation {
        let comp = |v| -&self.hamiltonian(&self.generator(v)).div();
        Derivation::new(PolyVector::new(comp(0), comp(1), comp(2)))
    }

    pub fn is_unimodular(&self) -> bool {
        self.modular_derivation().is_zero()
    }
}

impl fmt::Display for PoissonStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{x,y}} = {}, {{y,z}} = {}, {{z,x}} = {}", self.pxy, self.pyz, self.pzx)
    }
}
