//! Brackets from a potential, the Jacobi identity, unimodularity, and a
//! graded twist by a degree-zero derivation.

use graded_poisson::poisson::{graded_twist, Derivation, PoissonStructure};
use graded_poisson::polyring::{Field, PolyVector, Weights};
use graded_poisson::textio::{format_poly, parse_poly};

fn main() -> graded_poisson::Result<()> {
    let w = Weights::new(1, 1, 2)?;
    let k = Field::rationals();
    let omega = parse_poly("z^2+x^3*y", w, &k)?;
    let pi = PoissonStructure::from_potential(&omega)?;
    let p = |s: &str| parse_poly(s, w, &k);

    println!("Ω = {}", format_poly(&omega));
    println!("{{x,y}} = {}", format_poly(pi.pxy()));
    println!("{{y,z}} = {}", format_poly(pi.pyz()));
    println!("{{z,x}} = {}", format_poly(pi.pzx()));
    println!("{{x^2, y*z}} = {}", format_poly(&pi.bracket(&p("x^2")?, &p("y*z")?)));
    println!("jacobiator = {}", format_poly(&pi.jacobiator()));
    println!("unimodular: {}", pi.modular_derivation().is_zero());

    // x ∂/∂x - y ∂/∂y has degree 0
    let delta = Derivation::new(PolyVector::new(p("x")?, p("-y")?, p("0")?));
    let twist = graded_twist(&pi, &delta)?;
    println!("twisted {{x,y}} = {}", format_poly(twist.structure.pxy()));
    println!("twist is Poisson: {}", twist.is_poisson);
    Ok(())
}
