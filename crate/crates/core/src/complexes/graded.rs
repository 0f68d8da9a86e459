use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::linalg::{coordinate_matrix, Matrix};
use crate::polyring::{monomial_basis, Field, Monomial, Polynomial, Weights};

type LinearFn = dyn Fn(&[Polynomial]) -> Vec<Polynomial> + Send + Sync;

/// A degree zero linear map `⊕ A[s_i] → ⊕ A[t_j]` between sums of shifted
/// copies of `A`, where `A[s]_d = A_{d+s}`. The closure receives one
/// polynomial per source summand and must be linear.
#[derive(Clone)]
pub struct GradedMap {
    weights: Weights,
    field: Field,
    source: Vec<i64>,
    target: Vec<i64>,
    apply: Arc<LinearFn>,
}

impl fmt::Debug for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedMap").field("source", &self.source).field("target", &self.target).finish()
    }
}

impl GradedMap {
    pub fn new<F>(weights: Weights, field: Field, source: Vec<i64>, target: Vec<i64>, apply: F) -> Self
    where
        F: Fn(&[Polynomial]) -> Vec<Polynomial> + Send + Sync + 'static,
    {
        GradedMap { weights, field, source, target, apply: Arc::new(apply) }
    }

    pub fn source_shifts(&self) -> &[i64] {
        &self.source
    }

    pub fn target_shifts(&self) -> &[i64] {
        &self.target
    }

    pub fn source_bases(&self, d: i64) -> Vec<Vec<Monomial>> {
        self.source.iter().map(|s| monomial_basis(&self.weights, d + s)).collect()
    }

    pub fn target_bases(&self, d: i64) -> Vec<Vec<Monomial>> {
        self.target.iter().map(|s| monomial_basis(&self.weights, d + s)).collect()
    }

    pub fn source_dim(&self, d: i64) -> usize {
        self.source_bases(d).iter().map(Vec::len).sum()
    }

    pub fn target_dim(&self, d: i64) -> usize {
        self.target_bases(d).iter().map(Vec::len).sum()
    }

    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        (self.apply)(v)
    }

    /// Images of the source monomial basis in degree `d`, in basis order.
    pub fn basis_images(&self, d: i64) -> Vec<Vec<Polynomial>> {
        let zero = Polynomial::zero(self.weights, self.field.clone());
        let one = self.field.one();
        let mut out = Vec::new();
        for (i, basis) in self.source_bases(d).iter().enumerate() {
            for m in basis {
                let mut v = vec![zero.clone(); self.source.len()];
                v[i] = Polynomial::monomial(self.weights, self.field.clone(), *m, one.clone());
                out.push(self.apply(&v));
            }
        }
        out
    }

    /// The restriction to degree `d` on the monomial bases.
    pub fn matrix(&self, d: i64) -> Result<Matrix> {
        coordinate_matrix(&self.field, &self.target_bases(d), &self.basis_images(d))
    }

    /// Lowest degree in which the source is nonzero.
    pub fn source_min_degree(&self) -> i64 {
        -self.source.iter().copied().max().unwrap_or(0)
    }
}

/// Whether `second ∘ first` vanishes in degree `d`.
pub fn composes_to_zero(first: &GradedMap, second: &GradedMap, d: i64) -> Result<bool> {
    Ok(second.matrix(d)?.mul(&first.matrix(d)?)?.is_zero())
}
