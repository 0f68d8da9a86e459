//! The Koszul complex on `(Ω_x, Ω_y, Ω_z)`
//!
//! `A[a+b+c-3n] → A[b+c-2n]⊕A[a+c-2n]⊕A[a+b-2n] → A[a-n]⊕A[b-n]⊕A[c-n] → A`
//!
//! with maps `f ↦ f∇Ω`, `G ↦ ∇Ω × G`, `F ↦ ∇Ω · F`, and the de Rham complex
//! of `A`.

use std::collections::BTreeMap;

use crate::complexes::graded::GradedMap;
use crate::complexes::DimsTable;
use crate::error::Result;
use crate::jacobian::{jacobian_ideal, GroebnerBasis};
use crate::linalg::rank;
use crate::poisson::potential_degree;
use crate::polyring::{PolyVector, Polynomial, Weights, Field};

fn vector(p: &[Polynomial]) -> PolyVector {
    PolyVector::new(p[0].clone(), p[1].clone(), p[2].clone())
}

/// `∂₃, ∂₂, ∂₁` of the Koszul complex, indexed by their source.
#[derive(Clone, Debug)]
pub struct Koszul {
    /// `maps[i]` goes from `K_{i+1}` to `K_i`.
    maps: [GradedMap; 3],
}

impl Koszul {
    pub fn new(omega: &Polynomial) -> Result<Self> {
        let n = potential_degree(omega)?;
        let wt = *omega.weights();
        let (a, b, c) = (wt.of(0), wt.of(1), wt.of(2));
        let k = omega.field().clone();
        let k3 = vec![a + b + c - 3 * n];
        let k2 = vec![b + c - 2 * n, a + c - 2 * n, a + b - 2 * n];
        let k1 = vec![a - n, b - n, c - n];
        let grad = PolyVector::gradient(omega);
        let g = grad.clone();
        let d1 = GradedMap::new(wt, k.clone(), k1.clone(), vec![0], move |f| vec![g.dot(&vector(f))]);
        let g = grad.clone();
        let d2 = GradedMap::new(wt, k.clone(), k2.clone(), k1, move |f| g.cross(&vector(f)).0.to_vec());
        let d3 = GradedMap::new(wt, k, k3, k2, move |f| grad.scale(&f[0]).0.to_vec());
        Ok(Koszul { maps: [d1, d2, d3] })
    }

    /// `∂_i : K_i → K_{i-1}` for `i` in `1..=3`.
    pub fn boundary(&self, i: usize) -> &GradedMap {
        &self.maps[i - 1]
    }

    pub fn chain_dim(&self, i: usize, d: i64) -> usize {
        if i == 0 {
            self.maps[0].target_dim(d)
        } else {
            self.maps[i - 1].source_dim(d)
        }
    }

    fn rank(&self, i: usize, d: i64) -> Result<usize> {
        if !(1..=3).contains(&i) {
            return Ok(0);
        }
        let m = self.boundary(i);
        if m.source_dim(d) == 0 || m.target_dim(d) == 0 {
            return Ok(0);
        }
        Ok(rank(&m.matrix(d)?))
    }

    /// `dim H_i` in degree `d`.
    pub fn homology(&self, i: usize, d: i64) -> Result<usize> {
        Ok(self.chain_dim(i, d) - self.rank(i, d)? - self.rank(i + 1, d)?)
    }
}

/// `dim H_i(K(∇Ω))_d` for `i = 0..=3` and `0 <= d <= D`.
pub fn koszul_dims(omega: &Polynomial, max_degree: i64) -> Result<DimsTable> {
    let kz = Koszul::new(omega)?;
    let n = potential_degree(omega)?;
    let wt = omega.weights();
    let s = wt.total();
    let mins = vec![0, n - wt.max(), 2 * n - (s - wt.of(0).min(wt.of(1)).min(wt.of(2))), 3 * n - s];
    let mut table = DimsTable::new(4, 0, max_degree, mins);
    for i in 0..4 {
        for d in 0..=max_degree {
            table.set(i, d, kz.homology(i, d)?);
        }
    }
    Ok(table)
}

/// Per-degree sealed first Koszul homology.
#[derive(Clone, Debug)]
pub struct SealedReport {
    pub max_degree: i64,
    /// degree → (dim ker ∂₁, dim sealed cycles, dim im ∂₂, dim sK₁)
    pub degrees: BTreeMap<i64, (usize, usize, usize, usize)>,
}

impl SealedReport {
    pub fn sealed(&self) -> bool {
        self.degrees.values().all(|t| t.3 == 0)
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.degrees.iter().map(|(d, t)| (*d, t.3)).collect()
    }
}

/// Cycles `F` of `K₁` with `div F` in the Jacobian ideal, modulo boundaries,
/// for `0 <= d <= D`.
pub fn sealed_k1_dims(omega: &Polynomial, max_degree: i64) -> Result<SealedReport> {
    let kz = Koszul::new(omega)?;
    let n = potential_degree(omega)?;
    let gb: GroebnerBasis = jacobian_ideal(omega)?;
    let grad = PolyVector::gradient(omega);
    let wt = *omega.weights();
    let shifts = kz.boundary(1).source_shifts().to_vec();
    let sealing = GradedMap::new(wt, omega.field().clone(), shifts, vec![0, -n], move |f| {
        let f = vector(f);
        vec![grad.dot(&f), gb.normal_form(&f.div())]
    });
    let mut degrees = BTreeMap::new();
    for d in 0..=max_degree {
        let dim = kz.chain_dim(1, d);
        let cycles = dim - kz.rank(1, d)?;
        let sealed = if dim == 0 { 0 } else { dim - rank(&sealing.matrix(d)?) };
        let boundaries = kz.rank(2, d)?;
        degrees.insert(d, (cycles, sealed, boundaries, sealed - boundaries));
    }
    Ok(SealedReport { max_degree, degrees })
}

/// The de Rham complex `A → A[-a]⊕A[-b]⊕A[-c] → A[-b-c]⊕A[-a-c]⊕A[-a-b] → A[-a-b-c]`
/// with `∇`, `curl`, `div`.
pub fn derham_maps(weights: Weights, field: &Field) -> [GradedMap; 3] {
    let (a, b, c) = (weights.of(0), weights.of(1), weights.of(2));
    let k = field.clone();
    let one = vec![-a, -b, -c];
    let two = vec![-b - c, -a - c, -a - b];
    [
        GradedMap::new(weights, k.clone(), vec![0], one.clone(), |f| PolyVector::gradient(&f[0]).0.to_vec()),
        GradedMap::new(weights, k.clone(), one, two.clone(), |f| vector(f).curl().0.to_vec()),
        GradedMap::new(weights, k, two, vec![-a - b - c], |f| vec![vector(f).div()]),
    ]
}

/// Whether `0 → k → A → Ω¹ → Ω² → Ω³ → 0` is exact in degrees `0..=D`.
pub fn derham_exactness_check(weights: Weights, max_degree: i64) -> Result<bool> {
    let k = Field::rationals();
    let maps = derham_maps(weights, &k);
    for d in 0..=max_degree {
        let r: Vec<usize> = maps
            .iter()
            .map(|m| if m.source_dim(d) == 0 || m.target_dim(d) == 0 { Ok(0) } else { Ok(rank(&m.matrix(d)?)) })
            .collect::<Result<_>>()?;
        let dims = [maps[0].source_dim(d), maps[1].source_dim(d), maps[2].source_dim(d), maps[2].target_dim(d)];
        let constants = usize::from(d == 0);
        let exact = dims[0] - r[0] == constants
            && dims[1] - r[1] == r[0]
            && dims[2] - r[2] == r[1]
            && dims[3] == r[2];
        if !exact {
            return Ok(false);
        }
    }
    Ok(true)
}
