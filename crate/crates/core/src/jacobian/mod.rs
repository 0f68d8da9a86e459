//! The Jacobian ideal `(Ω_x, Ω_y, Ω_z)` and its quotient `A_sing`.

mod gcd;
mod groebner;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use gcd::{divide_exact, gcd, gcd_partials};
pub use groebner::{buchberger, normal_form, GroebnerBasis};

use crate::error::{Error, Result};
use crate::hilbert::{HilbertSeries, Laurent};
use crate::polyring::{monomial_basis, Monomial, PolyVector, Polynomial, Weights};

/// Hilbert data of `A_sing`.
#[derive(Clone, Debug)]
pub struct ASing {
    /// `dims[d]` is the dimension of the degree `d` piece, `0 <= d <= D`.
    pub dims: Vec<usize>,
    pub series: HilbertSeries,
    pub basis: GroebnerBasis,
}

fn require_homogeneous(omega: &Polynomial) -> Result<()> {
    if omega.is_zero() || !omega.is_homogeneous() {
        return Err(Error::Domain("the potential must be a nonzero homogeneous polynomial".into()));
    }
    Ok(())
}

/// Gröbner basis of the Jacobian ideal.
pub fn jacobian_ideal(omega: &Polynomial) -> Result<GroebnerBasis> {
    buchberger(&PolyVector::gradient(omega).0)
}

/// Drops generators divisible by another generator.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_exponent());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N(t)` of `h_{A/I} = N(t) / prod (1 - t^w)` for a monomial ideal
/// `I`, via `N(I + (m)) = N(I) - t^{deg m} N(I : m)`.
pub fn monomial_ideal_numerator(w: &Weights, gens: &[Monomial]) -> Laurent {
    let gens = minimalize(gens.to_vec());
    let mut one = Laurent::new();
    one.insert(0, BigInt::one());
    if gens.is_empty() {
        return one;
    }
    if gens.iter().any(Monomial::is_one) {
        return Laurent::new();
    }
    // pairwise coprime generators: product of (1 - t^deg)
    let coprime = gens.iter().enumerate().all(|(i, g)| gens[i + 1..].iter().all(|h| g.gcd(h).is_one()));
    if coprime {
        let mut acc = one;
        for g in &gens {
            let d = g.degree(w);
            let mut next = Laurent::new();
            for (e, c) in &acc {
                *next.entry(*e).or_insert_with(BigInt::zero) += c;
                *next.entry(e + d).or_insert_with(BigInt::zero) -= c;
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        return acc;
    }
    let (last, rest) = gens.split_last().unwrap();
    let base = monomial_ideal_numerator(w, rest);
    let colon: Vec<Monomial> = rest.iter().map(|g| g.gcd(last).quotient_of(g)).collect();
    let quot = monomial_ideal_numerator(w, &colon);
    let d = last.degree(w);
    let mut out = base;
    for (e, c) in quot {
        *out.entry(e + d).or_insert_with(BigInt::zero) -= c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Dimensions of `A_sing` in degrees `0..=max_degree` from standard
/// monomials, with the exact series from the initial ideal.
pub fn a_sing_hilbert(omega: &Polynomial, max_degree: i64) -> Result<ASing> {
    require_homogeneous(omega)?;
    let basis = jacobian_ideal(omega)?;
    let w = *omega.weights();
    let heads = basis.leading_monomials();
    let dims = (0..=max_degree.max(-1))
        .map(|d| monomial_basis(&w, d).into_iter().filter(|m| !heads.iter().any(|h| h.divides(m))).count())
        .collect();
    let numer = monomial_ideal_numerator(&w, &heads);
    let series = HilbertSeries::new(numer, &w.as_array())?;
    Ok(ASing { dims, series, basis })
}

/// Hilbert series of `A_sing`.
pub fn a_sing_series(omega: &Polynomial) -> Result<HilbertSeries> {
    Ok(a_sing_hilbert(omega, -1)?.series)
}

/// GK dimension of `A_sing`: the pole order of its Hilbert series at `t = 1`.
pub fn gkdim(omega: &Polynomial) -> Result<i64> {
    Ok(a_sing_series(omega)?.pole_order_at_one())
}

/// True iff `A_sing` is finite-dimensional.
pub fn has_isolated_singularity(omega: &Polynomial) -> Result<bool> {
    Ok(gkdim(omega)? == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::expand_i64;
    use crate::linalg::{rank, Matrix};
    use crate::polyring::Field;
    use crate::textio::parse_poly;

    fn omega(s: &str, a: u32, b: u32, c: u32) -> Polynomial {
        parse_poly(s, Weights::new(a, b, c).unwrap(), &Field::rationals()).unwrap()
    }

    /// dim A_d minus the rank of the span of `m * Ω_v` in degree `d`.
    fn quotient_dim_by_rank(f: &Polynomial, d: i64) -> usize {
        let w = *f.weights();
        let target = monomial_basis(&w, d);
        let k = f.field().clone();
        let mut cols = Vec::new();
        for v in 0..3 {
            let p = f.partial(v);
            if p.is_zero() {
                continue;
            }
            let pd = p.homogeneous_degree().unwrap();
            for m in monomial_basis(&w, d - pd) {
                let q = p.mul_term(&m, &k.one());
                cols.push(target.iter().map(|t| q.coeff(t)).collect::<Vec<_>>());
            }
        }
        if cols.is_empty() {
            return target.len();
        }
        let m = Matrix::from_rows(&k, cols).unwrap();
        target.len() - rank(&m)
    }

    #[test]
    fn weyl_type_hilbert_function() {
        let f = omega("z^2+x^3*y", 1, 1, 2);
        let h = a_sing_hilbert(&f, 8).unwrap();
        assert_eq!(h.dims, vec![1, 2, 3, 2, 2, 2, 2, 2, 2]);
        assert_eq!(expand_i64(&h.series, 0, 8), vec![1, 2, 3, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn matches_direct_linear_algebra() {
        for (s, w) in [
            ("x^3+y^3+z^3+x*y*z", (1, 1, 1)),
            ("x*y*z+x^4+y^4", (1, 1, 2)),
            ("z^2+y^3", (1, 2, 3)),
            ("x^2*z+x*y^3", (1, 1, 2)),
            ("x^4", (1, 1, 2)),
        ] {
            let f = omega(s, w.0, w.1, w.2);
            let h = a_sing_hilbert(&f, 20).unwrap();
            for d in 0..=20 {
                assert_eq!(h.dims[d as usize], quotient_dim_by_rank(&f, d), "{s} degree {d}");
            }
            let e = expand_i64(&h.series, 0, 20);
            assert_eq!(e.iter().map(|&x| x as usize).collect::<Vec<_>>(), h.dims, "{s}");
        }
    }

    #[test]
    fn explicit_basis_series() {
        // 1/(1-t^2) + 2(t - t^4)/(1-t)
        let f = omega("x*y*z+x^4+y^4", 1, 1, 2);
        let h = a_sing_series(&f).unwrap();
        let expect = HilbertSeries::from_terms(&[(0, 1)], &[2])
            .unwrap()
            .add(&HilbertSeries::from_terms(&[(1, 2), (4, -2)], &[1]).unwrap());
        assert!(crate::hilbert::series_equal(&h, &expect));
    }

    #[test]
    fn gk_dimensions() {
        assert_eq!(gkdim(&omega("z^2+x*y^3+5*x^2*y^2+x^3*y", 1, 1, 2)).unwrap(), 0);
        assert_eq!(gkdim(&omega("z^2+x^3*y", 1, 1, 2)).unwrap(), 1);
        assert_eq!(gkdim(&omega("x^4", 1, 1, 2)).unwrap(), 2);
        assert_eq!(gkdim(&omega("x*y*z", 1, 1, 1)).unwrap(), 1);
    }

    #[test]
    fn isolated_singularity_boundaries() {
        let hesse = |l: &str| omega(&format!("x^3+y^3+z^3+{l}*x*y*z"), 1, 1, 1);
        assert!(has_isolated_singularity(&hesse("1")).unwrap());
        assert!(!has_isolated_singularity(&hesse("(-3)")).unwrap());
        let t2 = |l: &str| omega(&format!("z^2+x*y^3+{l}*x^2*y^2+x^3*y"), 1, 1, 2);
        assert!(has_isolated_singularity(&t2("0")).unwrap());
        assert!(!has_isolated_singularity(&t2("2")).unwrap());
        assert!(!has_isolated_singularity(&t2("(-2)")).unwrap());
        let t6 = |l: &str| omega(&format!("z^2+y^3+{l}*x^2*y^2+x^4*y"), 1, 2, 3);
        assert!(has_isolated_singularity(&t6("0")).unwrap());
        assert!(!has_isolated_singularity(&t6("2")).unwrap());
    }

    #[test]
    fn monomial_ideal_numerators() {
        let w = Weights::standard();
        // (x^2, xy): 1 - 2t^2 + t^3
        let n = monomial_ideal_numerator(&w, &[Monomial::new(2, 0, 0), Monomial::new(1, 1, 0)]);
        let expect: Laurent = [(0, 1), (2, -2), (3, 1)].iter().map(|&(e, c)| (e, BigInt::from(c))).collect();
        assert_eq!(n, expect);
        assert!(monomial_ideal_numerator(&w, &[Monomial::ONE]).is_empty());
    }

    #[test]
    fn rejects_inhomogeneous() {
        assert!(a_sing_hilbert(&omega("x^2+y", 1, 1, 1), 3).is_err());
    }
}
