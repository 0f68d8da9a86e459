//! rgt for a few potentials: zero exactly for the irreducible ones.

use graded_poisson::poisson::rgt;
use graded_poisson::polyring::{Field, Weights};
use graded_poisson::textio::parse_poly;

fn main() -> graded_poisson::Result<()> {
    let k = Field::rationals();
    let cases = [
        ("x^3+y^3+z^3", (1, 1, 1)),
        ("x*y*z", (1, 1, 1)),
        ("z^2+x^3*y", (1, 1, 2)),
        ("x^2*z+x*y^3", (1, 1, 2)),
        ("x^4", (1, 1, 2)),
        ("z^2+y^3", (1, 2, 3)),
        ("y^3", (1, 2, 3)),
    ];
    for (text, (a, b, c)) in cases {
        let omega = parse_poly(text, Weights::new(a, b, c)?, &k)?;
        println!("({a},{b},{c}) {text:<14} rgt = {}", rgt(&omega)?);
    }
    Ok(())
}
