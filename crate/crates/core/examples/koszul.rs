//! Koszul homology of the partials and the sealed part of H1.

use graded_poisson::complexes::{koszul_dims, sealed_k1_dims};
use graded_poisson::polyring::{Field, Weights};
use graded_poisson::textio::parse_poly;

fn main() -> graded_poisson::Result<()> {
    let k = Field::rationals();
    for (text, w) in [("x*y*z+x^4+y^4", Weights::new(1, 1, 2)?), ("z^2+y^3", Weights::new(1, 2, 3)?)] {
        let omega = parse_poly(text, w, &k)?;
        let table = koszul_dims(&omega, 14)?;
        let sealed = sealed_k1_dims(&omega, 14)?;
        println!("Ω = {text} on ({w})");
        println!("  H0 {:?}", table.row(0));
        println!("  H1 {:?}", table.row(1));
        println!("  H2 {:?}", table.row(2));
        println!("  sK1 {:?}", sealed.dims().values().collect::<Vec<_>>());
        println!("  sealed up to 14: {}", sealed.sealed());
    }
    Ok(())
}
