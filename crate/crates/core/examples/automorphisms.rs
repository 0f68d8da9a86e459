//! Automorphism checks on A and on the quotient A/(Ω - 1).

use graded_poisson::poisson::{verify_automorphism, verify_quotient_automorphism};
use graded_poisson::polyring::{Field, Weights};
use graded_poisson::textio::{format_poly, parse_map, parse_poly};

fn main() -> graded_poisson::Result<()> {
    let q = Field::rationals();
    let w = Weights::new(1, 1, 2)?;
    let omega = parse_poly("z^2+x^3*y", w, &q)?;
    let phi = parse_map("x->x; y->y-x^3-2*z; z->z+x^3", w, &q)?;
    let r = verify_automorphism(&omega, &phi)?;
    println!("det = {}, φ(Ω) = {}, preserves π: {}", format_poly(&r.determinant), format_poly(&r.image), r.holds);

    // s^2 = -1
    let k = Field::extension(&[1, 0, 1])?;
    let omega = parse_poly("x^4+y^4+z^2+3*x*y*z", w, &k)?;
    let swap = parse_map("x->s*y; y->s*x; z->z+3*x*y", w, &k)?;
    let inverse = parse_map("x->-s*y; y->-s*x; z->z+3*x*y", w, &k)?;
    let r = verify_quotient_automorphism(&omega, &k.one(), &swap, &inverse)?;
    println!("swap on A/(Ω-1): {r:?}");
    Ok(())
}
