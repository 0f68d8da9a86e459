use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polyring::{Field, Monomial, Polynomial};

/// Matrix whose `j`-th column holds the coordinates of `columns[j]` in the
/// concatenated monomial bases: component `i` of every column is expanded in
/// `bases[i]`, and the row blocks are stacked in that order.
pub fn coordinate_matrix(field: &Field, bases: &[Vec<Monomial>], columns: &[Vec<Polynomial>]) -> Result<Matrix> {
    let mut offsets = Vec::with_capacity(bases.len());
    let mut index: Vec<HashMap<Monomial, usize>> = Vec::with_capacity(bases.len());
    let mut rows = 0;
    for b in bases {
        offsets.push(rows);
        index.push(b.iter().enumerate().map(|(i, m)| (*m, i)).collect());
        rows += b.len();
    }
    let mut out = Matrix::zeros(rows, columns.len(), field);
    for (j, col) in columns.iter().enumerate() {
        if col.len() != bases.len() {
            return Err(Error::Config(format!("column with {} components for {} bases", col.len(), bases.len())));
        }
        for (i, p) in col.iter().enumerate() {
            for (m, c) in p.terms() {
                let r = index[i]
                    .get(m)
                    .ok_or_else(|| Error::Domain(format!("term outside the target basis in component {i}")))?;
                out.set(offsets[i] + r, j, c.clone());
            }
        }
    }
    Ok(out)
}

/// Inverse of [`coordinate_matrix`] for a single vector.
pub fn from_coordinates(like: &Polynomial, bases: &[Vec<Monomial>], v: &[crate::polyring::FieldElement]) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(bases.len());
    let mut pos = 0;
    for b in bases {
        let mut p = like.zero_like();
        for m in b {
            p.add_term(*m, &v[pos]);
            pos += 1;
        }
        out.push(p);
    }
    out
}
