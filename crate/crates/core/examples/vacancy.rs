//! Upper second cohomology, ozone derivations and negative-degree Poisson
//! derivations: a vacant potential next to a non-vacant one.

use graded_poisson::complexes::{ozone_vs_hamiltonian, vacancy_check};
use graded_poisson::poisson::negative_degree_pd_dims;
use graded_poisson::polyring::{Field, Weights};
use graded_poisson::textio::parse_poly;

fn main() -> graded_poisson::Result<()> {
    let k = Field::rationals();
    for (text, w) in [("z^2+x^2*y^2+x^3*y", Weights::new(1, 1, 2)?), ("z^2+y^3", Weights::new(1, 2, 3)?)] {
        let omega = parse_poly(text, w, &k)?;
        let vac = vacancy_check(&omega, 20)?;
        let oz = ozone_vs_hamiltonian(&omega, 20)?;
        println!("Ω = {text} on ({w})");
        println!("  uPH2 nonzero in degrees {:?}", vac.nonzero_degrees());
        println!("  ozone != Hamiltonian in degrees {:?}", oz.discrepancies());
        println!("  negative-degree Poisson derivations {:?}", negative_degree_pd_dims(&omega)?);
    }
    Ok(())
}
