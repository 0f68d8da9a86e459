use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::polyring::{monomial_cmp, Monomial, Polynomial};

/// Reduced Gröbner basis under the fixed weighted-degree reverse-lex order,
/// together with the generators it was computed from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Monic elements, sorted by increasing leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading_monomial().expect("nonzero")).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.basis)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// The unit ideal.
    pub fn is_trivial(&self) -> bool {
        self.basis.iter().any(Polynomial::is_constant)
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                if !normal_form(&s_polynomial(&self.basis[i], &self.basis[j]), &self.basis).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(&mg);
    let k = f.field();
    let a = f.mul_term(&mf.quotient_of(&l), &k.inv(&cf).expect("nonzero"));
    let b = g.mul_term(&mg.quotient_of(&l), &k.inv(&cg).expect("nonzero"));
    &a - &b
}

/// Full reduction of `f` by `divisors`; the remainder has no term divisible
/// by any leading monomial.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let k = f.field().clone();
    let heads: Vec<(Monomial, _)> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading_term().unwrap();
            (m, k.inv(&c).expect("nonzero"))
        })
        .collect();
    let live: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut r = f.zero_like();
    while let Some((m, c)) = p.leading_term() {
        match heads.iter().position(|(h, _)| h.divides(&m)) {
            Some(i) => {
                let (h, inv) = &heads[i];
                let factor = k.mul(&c, inv);
                p = &p - &live[i].mul_term(&h.quotient_of(&m), &factor);
            }
            None => {
                p.add_term(m, &k.neg(&c));
                r.add_term(m, &c);
            }
        }
    }
    r
}

pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let first = gens.first().ok_or_else(|| Error::Precondition("empty generator list".into()))?;
    for g in gens {
        if g.weights() != first.weights() || g.field() != first.field() {
            return Err(Error::Config("generators live in different rings".into()));
        }
    }
    let w = *first.weights();
    let mut g: Vec<Polynomial> = gens.iter().filter(|p| !p.is_zero()).map(Polynomial::monic).collect();
    if g.is_empty() {
        return Ok(GroebnerBasis { generators: gens.to_vec(), basis: Vec::new() });
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let lm = |p: &Polynomial| p.leading_monomial().unwrap();
    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first
        let &(i, j) = pending
            .iter()
            .min_by(|p, q| {
                let lp = lm(&g[p.0]).lcm(&lm(&g[p.1]));
                let lq = lm(&g[q.0]).lcm(&lm(&g[q.1]));
                monomial_cmp(&w, &lp, &lq).then(p.cmp(q))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (mi, mj) = (lm(&g[i]), lm(&g[j]));
        if mi.gcd(&mj).is_one() {
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && lm(&g[k]).divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&g[i], &g[j]), &g);
        if !r.is_zero() {
            let n = g.len();
            g.push(r.monic());
            for k in 0..n {
                pending.insert((k, n));
            }
        }
    }
    Ok(GroebnerBasis { generators: gens.to_vec(), basis: reduce_basis(g) })
}

fn reduce_basis(g: Vec<Polynomial>) -> Vec<Polynomial> {
    let w = *g[0].weights();
    let lm = |p: &Polynomial| p.leading_monomial().unwrap();
    // drop elements whose head is divisible by another head
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let mp = lm(p);
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let mq = lm(q);
            j != i && mq.divides(&mp) && (mq != mp || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
        out.push(normal_form(&keep[i], &others).monic());
    }
    out.sort_by(|p, q| monomial_cmp(&w, &lm(p), &lm(q)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, PolyVector, Weights};
    use crate::textio::parse_poly;

    fn p(s: &str, w: Weights) -> Polynomial {
        parse_poly(s, w, &Field::rationals()).unwrap()
    }

    #[test]
    fn single_generators() {
        let w = Weights::standard();
        let gb = buchberger(&[p("x", w)]).unwrap();
        assert_eq!(gb.basis(), &[p("x", w)]);
        let f = p("x^3+y^3+z^3+x*y*z-1", w);
        let gb = buchberger(std::slice::from_ref(&f)).unwrap();
        assert_eq!(gb.basis(), &[f.monic()]);
        assert!(buchberger(&[]).is_err());
    }

    #[test]
    fn gradient_of_a_weyl_potential() {
        let w = Weights::new(1, 1, 2).unwrap();
        let omega = p("z^2+x^3*y", w);
        let grad = PolyVector::gradient(&omega);
        let gb = buchberger(&grad.0).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        let mut heads = gb.leading_monomials();
        heads.sort();
        let mut expect = vec![Monomial::new(2, 1, 0), Monomial::new(3, 0, 0), Monomial::new(0, 0, 1)];
        expect.sort();
        assert_eq!(heads, expect);
    }

    #[test]
    fn normal_forms() {
        let w = Weights::standard();
        let gens = [p("x*y-z^2", w), p("y^2-x*z", w)];
        let gb = buchberger(&gens).unwrap();
        for g in &gens {
            assert!(gb.normal_form(g).is_zero());
        }
        // principal ideal: remainder with no term divisible by the head
        let w2 = Weights::new(1, 1, 2).unwrap();
        let h = p("z^2+x^3*y-1", w2);
        let gb = buchberger(std::slice::from_ref(&h)).unwrap();
        let r = p("x*y+3", w2);
        let f = &(&p("z", w2) * &h) + &r;
        assert_eq!(gb.normal_form(&f), r);
    }

    #[test]
    fn standard_monomials_match_explicit_basis_count() {
        // A/(grad) for xyz+x^4+y^4 has basis z^i, x..x^3, y..y^3; our order
        // picks different standard monomials but the same count per degree
        let w = Weights::new(1, 1, 2).unwrap();
        let omega = p("x*y*z+x^4+y^4", w);
        let gb = buchberger(&PolyVector::gradient(&omega).0).unwrap();
        let heads = gb.leading_monomials();
        for d in 0..=12i64 {
            let standard = crate::polyring::monomial_basis(&w, d)
                .into_iter()
                .filter(|m| !heads.iter().any(|h| h.divides(m)))
                .count();
            let explicit = usize::from(d % 2 == 0) + if (1..=3).contains(&d) { 2 } else { 0 };
            assert_eq!(standard, explicit, "degree {d}");
        }
    }
}
