use crate::error::{Error, Result};
use crate::jacobian::buchberger;
use crate::poisson::PoissonStructure;
use crate::polyring::{FieldElement, PolyVector, Polynomial};

/// Jacobian determinant of the map `(x,y,z) ↦ images`.
pub fn jacobian_determinant(images: &[Polynomial; 3]) -> Polynomial {
    let g: Vec<PolyVector> = images.iter().map(PolyVector::gradient).collect();
    g[0].dot(&g[1].cross(&g[2]))
}

#[derive(Clone, Debug)]
pub struct AutomorphismReport {
    pub determinant: Polynomial,
    /// `φ(Ω)`.
    pub image: Polynomial,
    /// `φ(Ω) = det(φ) Ω`.
    pub holds: bool,
}

fn check_ring(omega: &Polynomial, map: &[Polynomial; 3]) -> Result<()> {
    for p in map {
        if p.weights() != omega.weights() || p.field() != omega.field() {
            return Err(Error::Config("map and potential live in different rings".into()));
        }
    }
    Ok(())
}

/// Checks `φ(Ω) = det(φ) Ω`, the condition for `φ` to preserve `π_Ω`.
/// Invertibility of `φ` is not checked.
pub fn verify_automorphism(omega: &Polynomial, map: &[Polynomial; 3]) -> Result<AutomorphismReport> {
    check_ring(omega, map)?;
    let determinant = jacobian_determinant(map);
    let image = omega.compose(map)?;
    let holds = image == &determinant * omega;
    Ok(AutomorphismReport { determinant, image, holds })
}

#[derive(Clone, Debug)]
pub struct QuotientAutomorphismReport {
    /// `φ(Ω - ξ) ∈ (Ω - ξ)`.
    pub preserves_ideal: bool,
    /// `φ({u,v}) ≡ {φu, φv}` for the three generator pairs.
    pub preserves_bracket: bool,
    /// `φ(ψ(v)) ≡ v` on generators.
    pub inverse_ok: bool,
}

impl QuotientAutomorphismReport {
    pub fn holds(&self) -> bool {
        self.preserves_ideal && self.preserves_bracket && self.inverse_ok
    }
}

/// Checks that `φ` induces a Poisson automorphism of `A / (Ω - ξ)` with
/// inverse induced by `ψ`. All congruences are modulo the principal ideal.
pub fn verify_quotient_automorphism(
    omega: &Polynomial,
    xi: &FieldElement,
    phi: &[Polynomial; 3],
    psi: &[Polynomial; 3],
) -> Result<QuotientAutomorphismReport> {
    check_ring(omega, phi)?;
    check_ring(omega, psi)?;
    let s = PoissonStructure::from_potential(omega)?;
    let h = omega - &Polynomial::constant(*omega.weights(), omega.field().clone(), xi.clone());
    let ideal = buchberger(std::slice::from_ref(&h))?;
    let preserves_ideal = ideal.contains(&h.compose(phi)?);

    let gens: Vec<Polynomial> = (0..3).map(|v| s.generator(v)).collect();
    let mut preserves_bracket = true;
    for (u, v) in [(0, 1), (1, 2), (2, 0)] {
        let lhs = s.bracket(&gens[u], &gens[v]).compose(phi)?;
        let rhs = s.bracket(&phi[u], &phi[v]);
        if !ideal.contains(&(&lhs - &rhs)) {
            preserves_bracket = false;
        }
    }

    let mut inverse_ok = true;
    for v in 0..3 {
        let round = psi[v].compose(phi)?;
        if !ideal.contains(&(&round - &gens[v])) {
            inverse_ok = false;
        }
    }
    Ok(QuotientAutomorphismReport { preserves_ideal, preserves_bracket, inverse_ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, Weights};
    use crate::textio::{parse_map, parse_poly};

    #[test]
    fn ungraded_automorphism_of_a_weyl_potential() {
        let w = Weights::new(1, 1, 2).unwrap();
        let k = Field::rationals();
        let omega = parse_poly("z^2+x^3*y", w, &k).unwrap();
        let phi = parse_map("x->x; y->y-x^3-2*z; z->z+x^3", w, &k).unwrap();
        let r = verify_automorphism(&omega, &phi).unwrap();
        assert!(r.holds);
        assert_eq!(r.determinant, omega.constant_like(1));
        assert_eq!(r.image, omega);
        let id = parse_map("x->x; y->y; z->z", w, &k).unwrap();
        assert!(verify_automorphism(&omega, &id).unwrap().holds);
        let bad = parse_map("x->2*x; y->y; z->z", w, &k).unwrap();
        assert!(!verify_automorphism(&omega, &bad).unwrap().holds);
    }

    #[test]
    fn diagonal_cube_roots() {
        let k = Field::extension(&[1, 1, 1]).unwrap();
        let w = Weights::standard();
        let omega = parse_poly("x^3+y^3+z^3+2*x*y*z", w, &k).unwrap();
        let phi = parse_map("x->x; y->s*y; z->s^2*z", w, &k).unwrap();
        let r = verify_automorphism(&omega, &phi).unwrap();
        assert!(r.holds);
        assert_eq!(r.determinant, omega.constant_like(1));
    }

    #[test]
    fn quotient_automorphisms() {
        // s^2 + 1 = 0
        let k = Field::extension(&[1, 0, 1]).unwrap();
        let w = Weights::new(1, 1, 2).unwrap();
        let omega = parse_poly("x^4+y^4+z^2+3*x*y*z", w, &k).unwrap();
        let one = k.one();
        let swap = parse_map("x->s*y; y->s*x; z->z+3*x*y", w, &k).unwrap();
        let swap_inv = parse_map("x->-s*y; y->-s*x; z->z+3*x*y", w, &k).unwrap();
        assert!(verify_quotient_automorphism(&omega, &one, &swap, &swap_inv).unwrap().holds());
        let diag = parse_map("x->s*x; y->-s*y; z->z", w, &k).unwrap();
        let diag_inv = parse_map("x->-s*x; y->s*y; z->z", w, &k).unwrap();
        assert!(verify_quotient_automorphism(&omega, &one, &diag, &diag_inv).unwrap().holds());
        let id = parse_map("x->x; y->y; z->z", w, &k).unwrap();
        assert!(verify_quotient_automorphism(&omega, &one, &id, &id).unwrap().holds());
        // a wrong inverse is caught
        assert!(!verify_quotient_automorphism(&omega, &one, &diag, &diag).unwrap().inverse_ok);
    }

    #[test]
    fn scaling_outside_sixth_roots_fails() {
        let k = Field::rationals();
        let w = Weights::new(1, 2, 3).unwrap();
        let omega = parse_poly("x^6+y^3+z^2+x*y*z", w, &k).unwrap();
        let phi = parse_map("x->2*x; y->4*y; z->8*z", w, &k).unwrap();
        let psi = parse_map("x->1/2*x; y->1/4*y; z->1/8*z", w, &k).unwrap();
        let r = verify_quotient_automorphism(&omega, &k.one(), &phi, &psi).unwrap();
        assert!(r.inverse_ok);
        assert!(!r.holds());
    }
}
