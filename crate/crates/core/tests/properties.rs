//! Randomized invariants of the ring, linear algebra, bracket, Gröbner and
//! complex layers, plus catalog-wide sweeps at small truncation bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use graded_poisson::catalog::{Catalog, CatalogEntry};
use graded_poisson::complexes::{
    composes_to_zero, derham_maps, m2_inclusions, ph_dims, sealed_k1_dims, Cochain, Koszul,
};
use graded_poisson::hilbert::{series_equal, HilbertSeries};
use graded_poisson::jacobian::{a_sing_hilbert, buchberger, gcd_partials, gkdim};
use graded_poisson::linalg::{coordinate_matrix, kernel_basis, rank, Matrix};
use graded_poisson::poisson::{rgt, Derivation, PoissonStructure};
use graded_poisson::polyring::{monomial_basis, Field, FieldElement, Monomial, PolyVector, Polynomial, Weights};
use graded_poisson::textio::{format_poly, parse_poly};

const WEIGHTS: [(u32, u32, u32); 7] = [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3), (2, 3, 5), (1, 3, 4), (3, 4, 5)];

fn weights() -> impl Strategy<Value = Weights> {
    prop::sample::select(&WEIGHTS[..]).prop_map(|(a, b, c)| Weights::new(a, b, c).unwrap())
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        2 => Just(Field::rationals()),
        1 => Just(Field::extension(&[1, 0, 1]).unwrap()),
        1 => Just(Field::extension(&[1, 1, 1]).unwrap()),
    ]
}

fn scalar_parts() -> impl Strategy<Value = [(i64, i64); 2]> {
    [(-9i64..=9, 1i64..=5), (-3i64..=3, 1i64..=3)]
}

fn element(k: &Field, parts: [(i64, i64); 2]) -> FieldElement {
    let q = |(n, d): (i64, i64)| BigRational::new(BigInt::from(n), BigInt::from(d));
    let coeffs = (0..k.degree()).map(|i| q(parts[i.min(1)])).collect();
    k.from_s_coeffs(coeffs)
}

type Terms = Vec<([u32; 3], [(i64, i64); 2])>;

fn terms(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec(([0..=max_exp, 0..=max_exp, 0..=max_exp], scalar_parts()), 0..=max_terms)
}

fn build(w: Weights, k: &Field, t: &Terms) -> Polynomial {
    Polynomial::from_terms(w, k.clone(), t.iter().map(|(e, c)| (Monomial(*e), element(k, *c))))
}

/// A homogeneous polynomial of degree `d` with coefficients picked from `coeffs`.
fn homogeneous(w: Weights, k: &Field, d: i64, coeffs: &[i64]) -> Polynomial {
    let basis = monomial_basis(&w, d);
    Polynomial::from_terms(
        w,
        k.clone(),
        basis.iter().zip(coeffs.iter().cycle()).map(|(m, c)| (*m, k.from_int(*c))),
    )
}

fn catalog() -> Catalog {
    Catalog::builtin()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn homogeneous_products_are_nonzero_and_add_degrees(
        w in weights(), d1 in 0i64..8, d2 in 0i64..8,
        c1 in prop::collection::vec(-3i64..=3, 1..6), c2 in prop::collection::vec(-3i64..=3, 1..6),
    ) {
        let k = Field::rationals();
        let f = homogeneous(w, &k, d1, &c1);
        let g = homogeneous(w, &k, d2, &c2);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = &f * &g;
        prop_assert!(!fg.is_zero());
        prop_assert_eq!(fg.homogeneous_degree(), Some(d1 + d2));
    }

    #[test]
    fn vector_calculus_identities(w in weights(), k in field(), f in terms(4, 6), u in prop::array::uniform3(terms(3, 3)), v in prop::array::uniform3(terms(3, 3))) {
        let f = build(w, &k, &f);
        prop_assert!(PolyVector::gradient(&f).curl().is_zero());
        let u = PolyVector::new(build(w, &k, &u[0]), build(w, &k, &u[1]), build(w, &k, &u[2]));
        let v = PolyVector::new(build(w, &k, &v[0]), build(w, &k, &v[1]), build(w, &k, &v[2]));
        prop_assert!(u.curl().div().is_zero());
        prop_assert!(u.dot(&u.cross(&v)).is_zero());
    }

    #[test]
    fn bracket_axioms(w in weights(), k in field(), p in prop::array::uniform3(terms(3, 3)), fgh in prop::array::uniform3(terms(3, 4))) {
        let s = PoissonStructure::new(build(w, &k, &p[0]), build(w, &k, &p[1]), build(w, &k, &p[2])).unwrap();
        let (f, g, h) = (build(w, &k, &fgh[0]), build(w, &k, &fgh[1]), build(w, &k, &fgh[2]));
        prop_assert_eq!(s.bracket(&f, &g), -&s.bracket(&g, &f));
        let lhs = s.bracket(&f, &(&g * &h));
        let rhs = &(&s.bracket(&f, &g) * &h) + &(&g * &s.bracket(&f, &h));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn potential_brackets_are_poisson_and_graded(
        w in weights(), k in field(), n in 1i64..10, c in prop::collection::vec(-3i64..=3, 1..8),
        df in 0i64..6, dg in 0i64..6, cf in prop::collection::vec(-2i64..=2, 1..5), cg in prop::collection::vec(-2i64..=2, 1..5),
    ) {
        let omega = homogeneous(w, &k, n, &c);
        prop_assume!(!omega.is_zero());
        let s = PoissonStructure::from_potential(&omega).unwrap();
        prop_assert!(s.jacobiator().is_zero());
        prop_assert!(s.modular_derivation().is_zero());
        let f = homogeneous(w, &k, df, &cf);
        let g = homogeneous(w, &k, dg, &cg);
        let b = s.bracket(&f, &g);
        if !b.is_zero() {
            prop_assert_eq!(b.homogeneous_degree(), Some(df + dg + n - w.total()));
        }
    }

    #[test]
    fn parse_format_roundtrip(w in weights(), k in field(), t in terms(5, 6)) {
        let f = build(w, &k, &t);
        let text = format_poly(&f);
        let g = parse_poly(&text, w, &k).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(format_poly(&g), text);
    }

    #[test]
    fn monomial_counts_match_the_ring_series(w in weights()) {
        let h = HilbertSeries::polynomial_ring(&w);
        for d in 0..=40 {
            prop_assert_eq!(BigInt::from(monomial_basis(&w, d).len()), h.coefficient(d));
        }
    }

    #[test]
    fn normal_forms_and_cofactors(
        w in weights(), gens in prop::collection::vec(terms(3, 3), 1..=3), cof in prop::collection::vec(terms(2, 3), 3), h in terms(4, 5),
    ) {
        let k = Field::rationals();
        let gens: Vec<Polynomial> = gens.iter().map(|t| build(w, &k, t)).collect();
        let gb = buchberger(&gens).unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion());
        let mut f = Polynomial::zero(w, k.clone());
        for (g, q) in gens.iter().zip(&cof) {
            f = &f + &(&build(w, &k, q) * g);
        }
        prop_assert!(gb.normal_form(&f).is_zero());
        prop_assert!(gb.contains(&f));
        let h = build(w, &k, &h);
        let r = gb.normal_form(&h);
        prop_assert!(gb.contains(&(&h - &r)));
        prop_assert_eq!(gb.normal_form(&r), r.clone());
        prop_assert_eq!(gb.contains(&h), r.is_zero());
    }

    #[test]
    fn series_equality_is_sound(
        num in prop::collection::vec((0i64..10, -3i64..=3), 0..5), den in prop::collection::vec(1u32..4, 0..3), extra in 1i64..4,
    ) {
        let h = HilbertSeries::from_terms(&num, &den).unwrap();
        // multiply numerator and denominator by 1 - t^extra
        let mut wider = den.clone();
        wider.push(extra as u32);
        let g = HilbertSeries::from_terms(&num, &wider).unwrap().times_factors(&[extra]);
        prop_assert!(series_equal(&h, &g));
        prop_assert_eq!(h.expand(-2, 30), g.expand(-2, 30));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn rank_nullity_on_large_matrices(
        rows in 1usize..=40, cols in 1usize..=40, seed in prop::collection::vec(-2i64..=2, 1600), dup in 0usize..10,
    ) {
        let k = Field::rationals();
        let mut entries: Vec<Vec<FieldElement>> = (0..rows)
            .map(|i| (0..cols).map(|j| k.from_int(seed[i * cols + j])).collect())
            .collect();
        // force some dependent rows
        for i in 0..dup.min(rows / 2) {
            let copy = entries[i].clone();
            entries[rows - 1 - i] = copy;
        }
        let m = Matrix::from_rows(&k, entries).unwrap();
        let r = rank(&m);
        let kernel = kernel_basis(&m);
        prop_assert_eq!(r + kernel.len(), cols);
        prop_assert_eq!(rank(&m.transpose()), r);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn differential_of_a_degree_zero_derivation(idx in 0usize..110, c in prop::collection::vec(-3i64..=3, 3..12)) {
        let cat = catalog();
        let e = &cat.all()[idx % cat.all().len()];
        let omega = &e.omega;
        let (w, k) = (*omega.weights(), omega.field().clone());
        let comp = |v: usize, off: usize| homogeneous(w, &k, w.of(v), &c[off..]);
        let delta = Derivation::new(PolyVector::new(comp(0, 0), comp(1, 1), comp(2, 2)));
        let s = PoissonStructure::from_potential(omega).unwrap();
        // cochain route
        let via_matrix = Cochain::new(omega).unwrap().map(1).apply(&delta.vector().0);
        // div(δ) π_Ω - π_{δ(Ω)}
        let grad = PolyVector::gradient(omega);
        let direct = grad.scale(&delta.div()).sub(&PolyVector::gradient(&delta.apply(omega)));
        prop_assert_eq!(&via_matrix[..], &direct.0[..]);
        // {δu,v} + {u,δv} - δ{u,v} on the generators, in the order (yz, zx, xy)
        let gen = |v| Polynomial::var(w, k.clone(), v);
        let lie = |u: usize, v: usize| {
            let (gu, gv) = (gen(u), gen(v));
            let a = delta.apply(&s.bracket(&gu, &gv));
            let b = s.bracket(&delta.apply(&gu), &gv);
            let c = s.bracket(&gu, &delta.apply(&gv));
            &(&b + &c) - &a
        };
        let bivector = [lie(1, 2), lie(2, 0), lie(0, 1)];
        prop_assert_eq!(&bivector[..], &direct.0[..]);
    }

    #[test]
    fn rgt_is_invariant_under_scaling(idx in 0usize..110, num in 1i64..7, den in 1i64..5, neg in any::<bool>()) {
        let cat = catalog();
        let e = &cat.all()[idx % cat.all().len()];
        let lambda = BigRational::new(BigInt::from(if neg { -num } else { num }), BigInt::from(den));
        let scaled = e.omega.scale(&e.omega.field().from_rational(lambda));
        prop_assert_eq!(rgt(&scaled).unwrap(), rgt(&e.omega).unwrap());
    }
}

fn entries_with_bound() -> Vec<(CatalogEntry, i64)> {
    catalog().all().iter().map(|e| (e.clone(), e.degree() + 4)).collect()
}

#[test]
fn rigid_exactly_when_irreducible() {
    for e in catalog().all() {
        assert_eq!(rgt(&e.omega).unwrap() == 0, e.irreducible, "{}", e.id);
    }
}

#[test]
fn small_gk_forces_coprime_partials() {
    for e in catalog().all() {
        if gkdim(&e.omega).unwrap() <= 1 {
            assert!(gcd_partials(&e.omega).unwrap().is_constant(), "{}", e.id);
        }
    }
}

#[test]
fn jacobian_quotient_counts_agree_with_linear_algebra() {
    for e in catalog().all().iter().step_by(3) {
        let omega = &e.omega;
        let (w, k) = (*omega.weights(), omega.field().clone());
        let partials: Vec<Polynomial> = (0..3).map(|v| omega.partial(v)).collect();
        let a = a_sing_hilbert(omega, 20).unwrap();
        for d in 0..=20 {
            let target = vec![monomial_basis(&w, d)];
            let mut columns = Vec::new();
            for p in partials.iter().filter(|p| !p.is_zero()) {
                let dp = p.homogeneous_degree().unwrap();
                for m in monomial_basis(&w, d - dp) {
                    columns.push(vec![p.mul_term(&m, &k.one())]);
                }
            }
            let span = if columns.is_empty() || target[0].is_empty() {
                0
            } else {
                rank(&coordinate_matrix(&k, &target, &columns).unwrap())
            };
            assert_eq!(a.dims[d as usize], target[0].len() - span, "{} degree {d}", e.id);
        }
    }
}

#[test]
fn complexes_compose_to_zero() {
    let derham = derham_maps(Weights::new(2, 3, 5).unwrap(), &Field::rationals());
    for d in 0..=20 {
        assert!(composes_to_zero(&derham[0], &derham[1], d).unwrap());
        assert!(composes_to_zero(&derham[1], &derham[2], d).unwrap());
    }
    for (e, bound) in entries_with_bound().iter().step_by(2) {
        let cx = Cochain::new(&e.omega).unwrap();
        let kz = Koszul::new(&e.omega).unwrap();
        for d in -e.weights.total()..=*bound {
            assert!(composes_to_zero(cx.map(0), cx.map(1), d).unwrap(), "{} δ¹δ⁰ degree {d}", e.id);
            assert!(composes_to_zero(cx.map(1), cx.map(2), d).unwrap(), "{} δ²δ¹ degree {d}", e.id);
            if d >= 0 {
                assert!(composes_to_zero(kz.boundary(3), kz.boundary(2), d).unwrap(), "{} ∂₂∂₃ degree {d}", e.id);
                assert!(composes_to_zero(kz.boundary(2), kz.boundary(1), d).unwrap(), "{} ∂₁∂₂ degree {d}", e.id);
            }
        }
    }
}

#[test]
fn casimirs_of_balanced_irreducibles_are_powers_of_the_potential() {
    for (e, bound) in entries_with_bound() {
        if !e.kind.is_balanced_irreducible() {
            continue;
        }
        let n = e.degree();
        let ph = ph_dims(&e.omega, bound).unwrap();
        for d in ph.degrees() {
            let want = usize::from(d >= 0 && d % n == 0);
            assert_eq!(ph.get(0, d), want, "{} PH0 degree {d}", e.id);
        }
    }
}

#[test]
fn m2_and_sealed_sandwiches() {
    for (e, bound) in entries_with_bound().iter().step_by(4) {
        for d in -e.weights.total()..=*bound {
            assert!(m2_inclusions(&e.omega, d).unwrap(), "{} degree {d}", e.id);
        }
        let sealed = sealed_k1_dims(&e.omega, *bound).unwrap();
        for (d, (cycles, sealed_cycles, boundaries, _)) in &sealed.degrees {
            assert!(boundaries <= sealed_cycles && sealed_cycles <= cycles, "{} degree {d}", e.id);
        }
    }
}

#[test]
fn extension_generator_satisfies_its_modulus() {
    let k = Field::extension(&[1, 1, 1]).unwrap();
    let s = k.generator().unwrap();
    let sum = k.add(&k.add(&k.one(), &s), &k.mul(&s, &s));
    assert!(sum.is_zero());
    let k = Field::extension(&[1, 0, 1]).unwrap();
    let s = k.generator().unwrap();
    assert_eq!(k.mul(&s, &s), k.from_int(-1));
}
