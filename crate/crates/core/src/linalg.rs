//! Exact linear algebra: dense matrices for adjoint operators and sparse
//! row echelon forms for the invariant-space solver.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Coeff, Field};

/// Dense square-or-rectangular matrix over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Coeff::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<Coeff> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let s = out.get(i, j) + &(a * b);
                    out.set(i, j, s);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Restriction to the given row/column indices.
    pub fn submatrix(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, idx.len(), idx.len());
        for (a, &r) in idx.iter().enumerate() {
            for (b, &c) in idx.iter().enumerate() {
                out.set(a, b, self.get(r, c).clone());
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<&Coeff> = (0..self.cols).map(|c| self.get(r, c)).collect();
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

/// Sparse vector: `(column, value)` pairs with strictly increasing columns
/// and nonzero values.
pub type SparseRow = Vec<(usize, Coeff)>;

fn axpy(target: &SparseRow, factor: &Coeff, src: &SparseRow) -> SparseRow {
    // target - factor * src
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < src.len() {
        let ti = target.get(i).map(|t| t.0).unwrap_or(usize::MAX);
        let sj = src.get(j).map(|s| s.0).unwrap_or(usize::MAX);
        if ti < sj {
            out.push(target[i].clone());
            i += 1;
        } else if sj < ti {
            out.push((sj, -&(factor * &src[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - &(factor * &src[j].1);
            if !v.is_zero() {
                out.push((ti, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    if let Some(inv) = row.first().and_then(|(_, c)| c.inv()) {
        for (_, c) in row.iter_mut() {
            *c = &*c * &inv;
        }
    }
}

/// Incrementally built row echelon form. Every stored row is monic in its
/// pivot (leading) column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots (leading entries only, until
    /// the leading column has no pivot).
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((lead, c)) = row.first().cloned() else { return row };
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &c, p),
                None => return row,
            }
        }
    }

    /// Fully reduces `row`: every entry in a pivot column is eliminated.
    pub fn reduce_full(&self, mut row: SparseRow) -> SparseRow {
        let mut k = 0;
        while k < row.len() {
            let (col, c) = row[k].clone();
            match self.pivots.get(&col) {
                Some(p) => {
                    row = axpy(&row, &c, p);
                    // Entries before position k are pivot-free and unaffected.
                }
                None => k += 1,
            }
        }
        row
    }

    /// Adds `row` to the span; returns whether it was independent.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        normalize(&mut r);
        self.pivots.insert(r[0].0, r);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Reduced row echelon form of the stored rows, ordered by pivot column.
    pub fn rref(&self) -> Vec<SparseRow> {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for &c in cols.iter().rev() {
            let mut row = self.pivots[&c].clone();
            // Eliminate later pivot columns using already-reduced rows.
            let mut k = 1;
            while k < row.len() {
                let (col, v) = row[k].clone();
                match done.get(&col) {
                    Some(p) => row = axpy(&row, &v, p),
                    None => k += 1,
                }
            }
            done.insert(c, row);
        }
        done.into_values().collect()
    }
}

/// Basis of the null space of the matrix whose rows are `rows` (over
/// `ncols` unknowns), in reduced form: one vector per free column, with a
/// 1 in that column and zeros in the other free columns.
pub fn nullspace(field: Field, rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<SparseRow> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
        if ech.rank() == ncols {
            break;
        }
    }
    let rref = ech.rref();
    let pivot_cols: BTreeMap<usize, usize> = rref.iter().enumerate().map(|(k, r)| (r[0].0, k)).collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains_key(c)) {
        let mut v: SparseRow = vec![(free, field.one())];
        for r in &rref {
            if let Some((_, c)) = r.iter().find(|(col, _)| *col == free) {
                v.push((r[0].0, -c));
            }
        }
        v.sort_by_key(|(c, _)| *c);
        basis.push(v);
    }
    basis
}
