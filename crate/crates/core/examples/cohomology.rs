//! Poisson cohomology of the Hesse potential, compared with the closed forms.

use graded_poisson::complexes::ph_dims;
use graded_poisson::hilbert::{closed_form_ph, expand_i64};
use graded_poisson::polyring::{Field, Weights};
use graded_poisson::textio::parse_poly;

fn main() -> graded_poisson::Result<()> {
    let w = Weights::standard();
    let omega = parse_poly("x^3+y^3+z^3+x*y*z", w, &Field::rationals())?;
    let ph = ph_dims(&omega, 12)?;
    println!("{:>6} {:>4} {:>4} {:>4} {:>4}", "degree", "PH0", "PH1", "PH2", "PH3");
    for d in ph.degrees() {
        println!("{d:>6} {:>4} {:>4} {:>4} {:>4}", ph.get(0, d), ph.get(1, d), ph.get(2, d), ph.get(3, d));
    }
    for i in 0..4 {
        let series = closed_form_ph(&w, i)?;
        let expected = expand_i64(&series, ph.min_degree, ph.max_degree);
        let agrees = ph.degrees().zip(expected).all(|(d, v)| ph.get(i, d) as i64 == v);
        println!("PH{i}: {series}  agrees up to 12: {agrees}");
    }
    Ok(())
}
