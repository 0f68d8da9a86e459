//! GK dimension of the Jacobian quotient and the isolated-singularity test
//! across a one-parameter family.

use graded_poisson::jacobian::{a_sing_series, gkdim, has_isolated_singularity};
use graded_poisson::polyring::{Field, Weights};
use graded_poisson::textio::parse_poly;

fn main() -> graded_poisson::Result<()> {
    let k = Field::rationals();
    let w = Weights::new(1, 1, 2)?;
    for lambda in ["0", "1", "2", "(-2)", "3"] {
        let omega = parse_poly(&format!("z^2+x*y^3+{lambda}*x^2*y^2+x^3*y"), w, &k)?;
        println!(
            "λ = {lambda:>4}: GK = {}, isolated = {}, h(t) = {}",
            gkdim(&omega)?,
            has_isolated_singularity(&omega)?,
            a_sing_series(&omega)?
        );
    }
    Ok(())
}
