//! Exact dense linear algebra over a coefficient field.
//!
//! Ranks over Q split the matrix into independent blocks (connected
//! components of its nonzero pattern) first. Small blocks are eliminated
//! fraction-free over Z; large ones go through [`modular`], whose answer is
//! certified by an exact kernel check.

mod assemble;
mod modular;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Field, FieldElement};

pub use assemble::{coordinate_matrix, from_coordinates};

/// Blocks with at most this many entries are eliminated exactly over Z.
const EXACT_BLOCK_LIMIT: usize = 48 * 48;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: &Field) -> Self {
        Matrix { rows, cols, field: field.clone(), data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: &Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Config("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, field: field.clone(), data: rows.into_iter().flatten().collect() })
    }

    /// Rational matrix from integer rows; handy in tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let k = Field::rationals();
        let data = rows.iter().map(|r| r.iter().map(|&x| k.from_int(x)).collect()).collect();
        Self::from_rows(&k, data).expect("rectangular rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows, &self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::Config(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let k = &self.field;
        let mut out = Matrix::zeros(self.rows, other.cols, k);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = k.add(&out.data[idx], &k.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::Config(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let k = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(k.zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        k.add(&acc, &k.mul(a, b))
                    }
                })
            })
            .collect())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Config("hstack needs equal row counts".into()));
        }
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols, &self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Config("vstack needs equal column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field.clone(), data })
    }

    /// Integer rows after clearing denominators row by row (rationals only).
    fn integer_rows(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|&i| {
                let vals: Vec<_> =
                    cols.iter().map(|&j| self.get(i, j).as_rational().expect("rational entry")).collect();
                let l = vals.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                vals.iter().map(|r| r.numer() * (&l / r.denom())).collect()
            })
            .collect()
    }

    /// Row and column index sets of the connected components of the
    /// bipartite nonzero pattern. Zero rows and columns are dropped.
    fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.rows + self.cols;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut used = vec![false; n];
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j).is_zero() {
                    used[i] = true;
                    used[self.rows + j] = true;
                    let (a, b) = (find(&mut parent, i), find(&mut parent, self.rows + j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut index = std::collections::BTreeMap::new();
        let mut out: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for x in 0..n {
            if !used[x] {
                continue;
            }
            let root = find(&mut parent, x);
            let k = *index.entry(root).or_insert_with(|| {
                out.push((Vec::new(), Vec::new()));
                out.len() - 1
            });
            if x < self.rows {
                out[k].0.push(x);
            } else {
                out[k].1.push(x - self.rows);
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact rank.
pub fn rank(m: &Matrix) -> usize {
    if !m.field.is_rationals() {
        return gauss_jordan(m).1.len();
    }
    m.blocks()
        .into_iter()
        .map(|(rows, cols)| {
            let a = m.integer_rows(&rows, &cols);
            if rows.len() * cols.len() <= EXACT_BLOCK_LIMIT {
                integer_rank(a, cols.len())
            } else {
                modular::certified_rank(&a, cols.len()).unwrap_or_else(|| integer_rank(a, cols.len()))
            }
        })
        .sum()
}

/// Rank by exact fraction-free elimination only, without block splitting or
/// modular shortcuts. Slow; meant as a reference.
pub fn rank_exact(m: &Matrix) -> usize {
    if !m.field.is_rationals() {
        return gauss_jordan(m).1.len();
    }
    let rows: Vec<usize> = (0..m.rows).collect();
    let cols: Vec<usize> = (0..m.cols).collect();
    integer_rank(m.integer_rows(&rows, &cols), m.cols)
}

/// Fraction-free elimination over Z with content removal after every row
/// update. Pivot: the entry of smallest magnitude in the current column.
fn integer_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].bits());
        let Some(pi) = pivot else { continue };
        a.swap(r, pi);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        let pv = &prow[c];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let s = pv / &g;
            let t = &row[c] / &g;
            for j in c..cols {
                let v = &s * &row[j] - &t * &prow[j];
                row[j] = v;
            }
            let content = row[c + 1..].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for x in row[c + 1..].iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced row echelon form over the field and its pivot columns.
fn gauss_jordan(m: &Matrix) -> (Matrix, Vec<usize>) {
    let k = m.field.clone();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(pi) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        if pi != r {
            for j in 0..a.cols {
                a.data.swap(pi * a.cols + j, r * a.cols + j);
            }
        }
        let inv = k.inv(a.get(r, c)).expect("nonzero pivot is invertible");
        for j in c..a.cols {
            let v = k.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                if a.get(r, j).is_zero() {
                    continue;
                }
                let v = k.sub(a.get(i, j), &k.mul(&f, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of the right null space: one vector per non-pivot column, with a 1
/// in that column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<FieldElement>> {
    let k = &m.field;
    let (rref, pivots) = gauss_jordan(m);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![k.zero(); m.cols];
            v[f] = k.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(rref.get(i, f));
            }
            v
        })
        .collect()
}

/// Whether `v` is a combination of the columns of `m`; when it is, returns
/// coefficients `c` with `m c = v`.
pub fn in_column_span(m: &Matrix, v: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
    if v.len() != m.rows {
        return Err(Error::Config(format!("vector of length {} for {} rows", v.len(), m.rows)));
    }
    let k = &m.field;
    let mut aug = Matrix::zeros(m.rows, m.cols + 1, k);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, v[i].clone());
    }
    let (rref, pivots) = gauss_jordan(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut w = vec![k.zero(); m.cols];
    for (i, &pc) in pivots.iter().enumerate() {
        w[pc] = rref.get(i, m.cols).clone();
    }
    Ok(Some(w))
}

/// Whether every column of `b` lies in the column span of `a`.
pub fn column_span_contains(a: &Matrix, b: &Matrix) -> Result<bool> {
    if b.cols == 0 {
        return Ok(true);
    }
    let joined = a.hstack(b)?;
    Ok(rank(&joined) == rank(a))
}

/// Largest absolute value among the entries' numerators; diagnostics only.
pub fn max_entry_bits(m: &Matrix) -> u64 {
    m.data
        .iter()
        .filter_map(|e| e.as_rational().map(|r| r.numer().abs().bits()))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let k = Field::rationals();
        assert_eq!(rank(&Matrix::identity(3, &k)), 3);
        assert_eq!(rank(&Matrix::zeros(5, 7, &k)), 0);
        assert_eq!(rank(&Matrix::from_int_rows(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
        assert_eq!(rank(&Matrix::zeros(0, 4, &k)), 0);
    }

    #[test]
    fn kernels() {
        let k = Field::rationals();
        assert!(kernel_basis(&Matrix::identity(4, &k)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3, &k)).len(), 3);
        let m = Matrix::from_int_rows(&[&[1, 1, 0]]);
        let ker = kernel_basis(&m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).unwrap().iter().all(FieldElement::is_zero));
        }
    }

    #[test]
    fn column_span() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4], &[5, 6]]);
        let col = m.column(0);
        let w = in_column_span(&m, &col).unwrap().unwrap();
        assert_eq!(m.mul_vec(&w).unwrap(), col);
        let k = Field::rationals();
        let zero = vec![k.zero(); 3];
        let w = in_column_span(&m, &zero).unwrap().unwrap();
        assert!(w.iter().all(FieldElement::is_zero));
        let e = Matrix::from_int_rows(&[&[1], &[0]]);
        assert_eq!(in_column_span(&e, &[k.zero(), k.one()]).unwrap(), None);
        assert!(in_column_span(&e, &[k.one()]).is_err());
    }

    #[test]
    fn extension_field_rank() {
        let k = Field::extension(&[1, 1, 1]).unwrap();
        let s = k.generator().unwrap();
        let s2 = k.mul(&s, &s);
        // rows (1, s) and (s, s^2) are dependent
        let m = Matrix::from_rows(&k, vec![vec![k.one(), s.clone()], vec![s.clone(), s2]]).unwrap();
        assert_eq!(rank(&m), 1);
        assert_eq!(kernel_basis(&m).len(), 1);
    }

    #[test]
    fn block_split_matches_reference() {
        // two disjoint blocks plus a zero column
        let m = Matrix::from_int_rows(&[
            &[1, 2, 0, 0, 0],
            &[2, 4, 0, 0, 0],
            &[0, 0, 1, 1, 0],
            &[0, 0, 1, -1, 0],
        ]);
        assert_eq!(m.blocks().len(), 2);
        assert_eq!(rank(&m), 3);
        assert_eq!(rank_exact(&m), 3);
    }

    #[test]
    fn modular_route_on_a_large_block() {
        // 60x60 matrix of rank 59: a Vandermonde-like block with one row a
        // combination of two others
        let n = 60;
        let mut rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| ((i as i64 + 1) * (j as i64 + 2)) % 17 - 8 + if i == j { 40 } else { 0 }).collect())
            .collect();
        let dep: Vec<i64> = (0..n).map(|j| 3 * rows[0][j] - 2 * rows[1][j]).collect();
        rows[n - 1] = dep;
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = Matrix::from_int_rows(&refs);
        assert!(m.rows() * m.cols() > EXACT_BLOCK_LIMIT);
        assert_eq!(rank(&m), rank_exact(&m));
        assert_eq!(rank(&m), 59);
        assert_eq!(rank(&m.transpose()), 59);
    }
}
