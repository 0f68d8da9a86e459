//! Degree-truncated homology of the Poisson cochain, Koszul and de Rham
//! complexes, with the diagnostics built on them.
//!
//! Every "up to D" answer is a claim about degrees `<= D` only.

mod cochain;
mod graded;
mod koszul;

use std::collections::BTreeMap;

use serde::Serialize;

pub use cochain::{
    cochain_matrices, euler_characteristic_check, m2_dims, m2_inclusions, ozone_vs_hamiltonian, ph1_minimality_check,
    ph_dims, vacancy_check, Cochain, EulerReport, OzoneReport, VacancyReport,
};
pub use graded::{composes_to_zero, GradedMap};
pub use koszul::{
    derham_exactness_check, derham_maps, koszul_dims, sealed_k1_dims, Koszul, SealedReport,
};

/// Truncation bound used when none is given: `3n + 12`.
pub fn default_max_degree(n: i64) -> i64 {
    3 * n + 12
}

/// Dimensions indexed by (homological index, degree) over a degree window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimsTable {
    pub min_degree: i64,
    pub max_degree: i64,
    /// Lowest degree in which index `i` can be nonzero.
    pub structural_min: Vec<i64>,
    rows: Vec<Vec<usize>>,
}

impl DimsTable {
    pub fn new(indices: usize, min_degree: i64, max_degree: i64, structural_min: Vec<i64>) -> Self {
        let len = (max_degree - min_degree + 1).max(0) as usize;
        DimsTable { min_degree, max_degree, structural_min, rows: vec![vec![0; len]; indices] }
    }

    pub fn indices(&self) -> usize {
        self.rows.len()
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.min_degree..=self.max_degree
    }

    /// Zero outside the window.
    pub fn get(&self, i: usize, d: i64) -> usize {
        if d < self.min_degree || d > self.max_degree {
            return 0;
        }
        self.rows[i][(d - self.min_degree) as usize]
    }

    pub fn set(&mut self, i: usize, d: i64, v: usize) {
        let at = (d - self.min_degree) as usize;
        self.rows[i][at] = v;
    }

    /// Row `i` over the window, lowest degree first.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn row_map(&self, i: usize) -> BTreeMap<i64, usize> {
        self.degrees().map(|d| (d, self.get(i, d))).collect()
    }
}
