//! The Poisson cochain complex of `π_Ω` in the vector-calculus form
//!
//! `A → A[w+a]⊕A[w+b]⊕A[w+c] → A[2w+b+c]⊕A[2w+a+c]⊕A[2w+a+b] → A[3w+a+b+c]`
//!
//! with `δ⁰f = ∇f × ∇Ω`, `δ¹F = -∇(F·∇Ω) + div(F) ∇Ω`, `δ²F = -div(F × ∇Ω)`.
//! In complex degree `d` the group `C^i` consists of `i`-vector fields of
//! natural degree `d + i w`.

use std::collections::BTreeMap;

use crate::complexes::graded::GradedMap;
use crate::complexes::DimsTable;
use crate::error::{Error, Result};
use crate::hilbert::euler_characteristic_rhs;
use crate::linalg::{column_span_contains, coordinate_matrix, rank, Matrix};
use crate::poisson::potential_degree;
use crate::polyring::{monomial_basis, PolyVector, Polynomial};

fn vector(p: &[Polynomial]) -> PolyVector {
    PolyVector::new(p[0].clone(), p[1].clone(), p[2].clone())
}

/// The three differentials of the cochain complex of `π_Ω`.
#[derive(Clone, Debug)]
pub struct Cochain {
    omega: Polynomial,
    n: i64,
    w: i64,
    maps: [GradedMap; 3],
}

impl Cochain {
    pub fn new(omega: &Polynomial) -> Result<Self> {
        let n = potential_degree(omega)?;
        let wt = *omega.weights();
        let (a, b, c) = (wt.of(0), wt.of(1), wt.of(2));
        let w = n - a - b - c;
        let k = omega.field().clone();
        let grad = PolyVector::gradient(omega);
        let c1 = vec![w + a, w + b, w + c];
        let c2 = vec![2 * w + b + c, 2 * w + a + c, 2 * w + a + b];
        let c3 = vec![3 * w + a + b + c];
        let g0 = grad.clone();
        let d0 = GradedMap::new(wt, k.clone(), vec![0], c1.clone(), move |f| {
            PolyVector::gradient(&f[0]).cross(&g0).0.to_vec()
        });
        let g1 = grad.clone();
        let d1 = GradedMap::new(wt, k.clone(), c1, c2.clone(), move |f| {
            let f = vector(f);
            g1.scale(&f.div()).sub(&PolyVector::gradient(&f.dot(&g1))).0.to_vec()
        });
        let g2 = grad;
        let d2 = GradedMap::new(wt, k, c2, c3, move |f| vec![-&vector(f).cross(&g2).div()]);
        Ok(Cochain { omega: omega.clone(), n, w, maps: [d0, d1, d2] })
    }

    pub fn potential(&self) -> &Polynomial {
        &self.omega
    }

    /// `deg Ω`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// `w = n - a - b - c`.
    pub fn w(&self) -> i64 {
        self.w
    }

    /// `δ^i` for `i` in `0..3`.
    pub fn map(&self, i: usize) -> &GradedMap {
        &self.maps[i]
    }

    /// `dim C^i` in complex degree `d`.
    pub fn cochain_dim(&self, i: usize, d: i64) -> usize {
        if i < 3 {
            self.maps[i].source_dim(d)
        } else {
            self.maps[2].target_dim(d)
        }
    }

    /// Matrices of `δ⁰, δ¹, δ²` in complex degree `d`.
    pub fn matrices(&self, d: i64) -> Result<[Matrix; 3]> {
        Ok([self.maps[0].matrix(d)?, self.maps[1].matrix(d)?, self.maps[2].matrix(d)?])
    }
}

/// Matrices of `δ⁰, δ¹, δ²` in complex degree `d`.
pub fn cochain_matrices(omega: &Polynomial, d: i64) -> Result<[Matrix; 3]> {
    Cochain::new(omega)?.matrices(d)
}

/// Ranks of the three differentials, cached per complex degree.
struct Ranks<'a> {
    cx: &'a Cochain,
    cache: BTreeMap<(usize, i64), usize>,
}

impl<'a> Ranks<'a> {
    fn new(cx: &'a Cochain) -> Self {
        Ranks { cx, cache: BTreeMap::new() }
    }

    fn rank(&mut self, i: usize, d: i64) -> Result<usize> {
        if let Some(&r) = self.cache.get(&(i, d)) {
            return Ok(r);
        }
        let map = self.cx.map(i);
        let r = if map.source_dim(d) == 0 || map.target_dim(d) == 0 { 0 } else { rank(&map.matrix(d)?) };
        self.cache.insert((i, d), r);
        Ok(r)
    }

    /// `dim PH^i` in complex degree `d`.
    fn cohomology(&mut self, i: usize, d: i64) -> Result<usize> {
        let dim = self.cx.cochain_dim(i, d);
        let outgoing = if i < 3 { self.rank(i, d)? } else { 0 };
        let incoming = if i > 0 { self.rank(i - 1, d)? } else { 0 };
        Ok(dim - outgoing - incoming)
    }
}

/// `dim PH^i_e` for `i = 0..=3` and natural degrees `-(a+b+c) <= e <= D`.
pub fn ph_dims(omega: &Polynomial, max_degree: i64) -> Result<DimsTable> {
    let cx = Cochain::new(omega)?;
    let wt = *omega.weights();
    let s = wt.total();
    let mins = vec![0, -wt.max(), -(s - wt.of(0).min(wt.of(1)).min(wt.of(2))), -s];
    let mut table = DimsTable::new(4, -s, max_degree, mins);
    let mut ranks = Ranks::new(&cx);
    for i in 0..4 {
        for e in -s..=max_degree {
            let v = ranks.cohomology(i, e - i as i64 * cx.w())?;
            table.set(i, e, v);
        }
    }
    Ok(table)
}

fn require_w_zero(omega: &Polynomial) -> Result<()> {
    let n = potential_degree(omega)?;
    let total = omega.weights().total();
    if n != total {
        return Err(Error::Unsupported(format!("needs deg Ω = a+b+c = {total}, got {n}")));
    }
    Ok(())
}

/// Spanning set of `M²(A)` in degree `d` (for `w = 0`): `m ∇Ω` and `∇m`.
fn m2_matrix(cx: &Cochain, d: i64) -> Result<Matrix> {
    let omega = cx.potential();
    let wt = *omega.weights();
    let k = omega.field().clone();
    let grad = PolyVector::gradient(omega);
    let target = cx.map(2).source_bases(d);
    let mut cols: Vec<Vec<Polynomial>> = Vec::new();
    for m in monomial_basis(&wt, d + cx.w()) {
        let p = Polynomial::monomial(wt, k.clone(), m, k.one());
        cols.push(grad.scale(&p).0.to_vec());
    }
    for m in monomial_basis(&wt, d + 2 * cx.w() + wt.total()) {
        let p = Polynomial::monomial(wt, k.clone(), m, k.one());
        cols.push(PolyVector::gradient(&p).0.to_vec());
    }
    coordinate_matrix(&k, &target, &cols)
}

/// `dim M²(A)_d` for `-(a+b+c) <= d <= D`.
pub fn m2_dims(omega: &Polynomial, max_degree: i64) -> Result<BTreeMap<i64, usize>> {
    let cx = Cochain::new(omega)?;
    let lo = -omega.weights().total();
    (lo..=max_degree).map(|d| Ok((d, rank(&m2_matrix(&cx, d)?)))).collect()
}

/// Per-degree comparison of `ker δ²` with `M²(A)`.
#[derive(Clone, Debug)]
pub struct VacancyReport {
    pub max_degree: i64,
    /// degree → (dim ker δ², dim M², dim uPH²)
    pub degrees: BTreeMap<i64, (usize, usize, usize)>,
}

impl VacancyReport {
    /// No upper cohomology up to the truncation bound.
    pub fn vacant(&self) -> bool {
        self.degrees.values().all(|t| t.2 == 0)
    }

    pub fn nonzero_degrees(&self) -> Vec<i64> {
        self.degrees.iter().filter(|(_, t)| t.2 != 0).map(|(d, _)| *d).collect()
    }
}

/// `uPH²_d = dim ker δ²_d - dim M²(A)_d` for `-(a+b+c) <= d <= D`.
pub fn vacancy_check(omega: &Polynomial, max_degree: i64) -> Result<VacancyReport> {
    require_w_zero(omega)?;
    let cx = Cochain::new(omega)?;
    let mut ranks = Ranks::new(&cx);
    let mut degrees = BTreeMap::new();
    for d in -omega.weights().total()..=max_degree {
        let kernel = cx.cochain_dim(2, d) - ranks.rank(2, d)?;
        let m2 = rank(&m2_matrix(&cx, d)?);
        degrees.insert(d, (kernel, m2, kernel - m2));
    }
    Ok(VacancyReport { max_degree, degrees })
}

/// Whether `im δ¹_d ⊆ M²_d ⊆ ker δ²_d`.
pub fn m2_inclusions(omega: &Polynomial, d: i64) -> Result<bool> {
    let cx = Cochain::new(omega)?;
    let m2 = m2_matrix(&cx, d)?;
    let d1 = cx.map(1).matrix(d)?;
    let d2 = cx.map(2).matrix(d)?;
    Ok(column_span_contains(&m2, &d1)? && d2.mul(&m2)?.is_zero())
}

/// Per-degree dimensions of ozone derivations (`div δ = 0`, `δ(Ω) = 0`) and
/// of Hamiltonian derivations.
#[derive(Clone, Debug)]
pub struct OzoneReport {
    pub max_degree: i64,
    /// degree → (dim Od, dim Hd)
    pub degrees: BTreeMap<i64, (usize, usize)>,
}

impl OzoneReport {
    pub fn h_ozone(&self) -> bool {
        self.degrees.values().all(|(o, h)| o == h)
    }

    pub fn discrepancies(&self) -> Vec<i64> {
        self.degrees.iter().filter(|(_, (o, h))| o != h).map(|(d, _)| *d).collect()
    }
}

pub fn ozone_vs_hamiltonian(omega: &Polynomial, max_degree: i64) -> Result<OzoneReport> {
    require_w_zero(omega)?;
    let cx = Cochain::new(omega)?;
    let wt = *omega.weights();
    let n = cx.n();
    let grad = PolyVector::gradient(omega);
    let ozone = GradedMap::new(wt, omega.field().clone(), cx.map(1).source_shifts().to_vec(), vec![0, n], move |f| {
        let f = vector(f);
        vec![f.div(), f.dot(&grad)]
    });
    let mut ranks = Ranks::new(&cx);
    let mut degrees = BTreeMap::new();
    for d in -wt.max()..=max_degree {
        let dim = ozone.source_dim(d);
        let od = if dim == 0 { 0 } else { dim - rank(&ozone.matrix(d)?) };
        degrees.insert(d, (od, ranks.rank(0, d)?));
    }
    Ok(OzoneReport { max_degree, degrees })
}

/// Per degree `0..=D`: whether `dim PH¹` matches `k[Ω] E` (one dimension at
/// multiples of `n`, none elsewhere).
pub fn ph1_minimality_check(omega: &Polynomial, max_degree: i64) -> Result<BTreeMap<i64, bool>> {
    let cx = Cochain::new(omega)?;
    let n = cx.n();
    let mut ranks = Ranks::new(&cx);
    (0..=max_degree)
        .map(|e| {
            let expect = usize::from(e % n == 0);
            Ok((e, ranks.cohomology(1, e - cx.w())? == expect))
        })
        .collect()
}

/// Alternating sums of cohomology per complex degree against the rational
/// function `-t^{-(3w+a+b+c)} Π(1-t^{w+a_i}) / Π(1-t^{a_i})`.
#[derive(Clone, Debug)]
pub struct EulerReport {
    /// complex degree → (Σ(-1)^i dim PH^i, expected coefficient)
    pub degrees: BTreeMap<i64, (i64, i64)>,
}

impl EulerReport {
    pub fn holds(&self) -> bool {
        self.degrees.values().all(|(a, b)| a == b)
    }
}

pub fn euler_characteristic_check(omega: &Polynomial, max_degree: i64) -> Result<EulerReport> {
    let cx = Cochain::new(omega)?;
    let rhs = euler_characteristic_rhs(omega.weights(), cx.n());
    let lo = (0..3).map(|i| cx.map(i).source_min_degree()).chain([-(3 * cx.w() + omega.weights().total())]).min().unwrap();
    let mut ranks = Ranks::new(&cx);
    let mut degrees = BTreeMap::new();
    for d in lo.min(max_degree)..=max_degree {
        let mut sum = 0i64;
        for i in 0..4 {
            let h = ranks.cohomology(i, d)? as i64;
            sum += if i % 2 == 0 { h } else { -h };
        }
        let expect = i64::try_from(rhs.coefficient(d)).map_err(|_| Error::Domain("coefficient overflow".into()))?;
        degrees.insert(d, (sum, expect));
    }
    Ok(EulerReport { degrees })
}
