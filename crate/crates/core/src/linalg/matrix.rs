use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::qfield::QRational;

/// A sparse matrix over `Q(q)`, stored column by column.
///
/// Zero entries are never stored. Column `j` of a braiding matrix is the image
/// of the `j`-th basis tensor, which makes column storage the natural layout.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<BTreeMap<usize, QRational>>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FieldMatrix { rows, cols, columns: vec![BTreeMap::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &QRational::one())
    }

    pub fn scalar(n: usize, c: &QRational) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for (j, col) in m.columns.iter_mut().enumerate() {
                col.insert(j, c.clone());
            }
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated addresses are summed.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, QRational)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::OutOfRange(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
            m.add_to(r, c, &v);
        }
        Ok(m)
    }

    /// Builds a matrix whose `j`-th column is `columns[j]` (sparse `(row, value)` lists).
    pub fn from_sparse_columns(rows: usize, columns: Vec<BTreeMap<usize, QRational>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|r, v| {
                    assert!(*r < rows, "row index {r} out of range {rows}");
                    !v.is_zero()
                });
                c
            })
            .collect();
        FieldMatrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> QRational {
        self.entry(r, c).cloned().unwrap_or_default()
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&QRational> {
        self.columns.get(c).and_then(|col| col.get(&r))
    }

    /// Sets an entry; storing zero removes it.
    pub fn set(&mut self, r: usize, c: usize, v: QRational) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) outside {}x{}", self.rows, self.cols);
        if v.is_zero() {
            self.columns[c].remove(&r);
        } else {
            self.columns[c].insert(r, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &QRational) {
        if v.is_zero() {
            return;
        }
        let col = &mut self.columns[c];
        match col.get_mut(&r) {
            Some(x) => {
                *x = &*x + v;
                if x.is_zero() {
                    col.remove(&r);
                }
            }
            None => {
                col.insert(r, v.clone());
            }
        }
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, QRational> {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[BTreeMap<usize, QRational>] {
        &self.columns
    }

    /// All stored entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &QRational)> + '_ {
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v)))
    }

    /// All stored entries in row-major order.
    pub fn entries_row_major(&self) -> Vec<(usize, usize, &QRational)> {
        let mut e: Vec<_> = self.entries().collect();
        e.sort_by_key(|&(r, c, _)| (r, c));
        e
    }

    /// Row-oriented copy of the entries.
    pub fn to_rows(&self) -> Vec<BTreeMap<usize, QRational>> {
        let mut rows = vec![BTreeMap::new(); self.rows];
        for (r, c, v) in self.entries() {
            rows[r].insert(c, v.clone());
        }
        rows
    }

    pub fn try_mul(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let columns = rhs
            .columns
            .iter()
            .map(|bcol| {
                let mut acc: BTreeMap<usize, QRational> = BTreeMap::new();
                for (k, b) in bcol {
                    for (r, a) in &self.columns[*k] {
                        let t = a * b;
                        match acc.get_mut(r) {
                            Some(x) => *x = &*x + &t,
                            None => {
                                acc.insert(*r, t);
                            }
                        }
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            })
            .collect();
        Ok(FieldMatrix { rows: self.rows, cols: rhs.cols, columns })
    }

    fn combine(&self, rhs: &FieldMatrix, sign: &QRational) -> Result<FieldMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = self.clone();
        for (r, c, v) in rhs.entries() {
            out.add_to(r, c, &(v * sign));
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        self.combine(rhs, &QRational::one())
    }

    pub fn try_sub(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        self.combine(rhs, &QRational::from_int(-1))
    }

    pub fn scale(&self, c: &QRational) -> FieldMatrix {
        self.map(|v| v * c)
    }

    /// Entrywise image under `f`; zero results are dropped.
    pub fn map<F: Fn(&QRational) -> QRational>(&self, f: F) -> FieldMatrix {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .filter_map(|(r, v)| {
                        let w = f(v);
                        (!w.is_zero()).then_some((*r, w))
                    })
                    .collect()
            })
            .collect();
        FieldMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            out.columns[r].insert(c, v.clone());
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`, left factor most significant.
    pub fn kron(&self, rhs: &FieldMatrix) -> FieldMatrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut columns = Vec::with_capacity(cols);
        for acol in &self.columns {
            for bcol in &rhs.columns {
                let mut col = BTreeMap::new();
                for (ra, a) in acol {
                    for (rb, b) in bcol {
                        col.insert(ra * rhs.rows + rb, a * b);
                    }
                }
                columns.push(col);
            }
        }
        FieldMatrix { rows, cols, columns }
    }

    /// `M v` for a dense vector.
    pub fn apply(&self, v: &[QRational]) -> Result<Vec<QRational>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let mut out = vec![QRational::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.columns[j] {
                out[*r] = &out[*r] + &(a * x);
            }
        }
        Ok(out)
    }

    /// `M v` for a sparse vector.
    pub fn apply_sparse(&self, v: &BTreeMap<usize, QRational>) -> BTreeMap<usize, QRational> {
        let mut out: BTreeMap<usize, QRational> = BTreeMap::new();
        for (j, x) in v {
            for (r, a) in &self.columns[*j] {
                let t = a * x;
                match out.get_mut(r) {
                    Some(y) => *y = &*y + &t,
                    None => {
                        out.insert(*r, t);
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Column-stacked vectorization as a sparse vector of length `rows * cols`.
    pub fn vectorize(&self) -> BTreeMap<usize, QRational> {
        self.entries().map(|(r, c, v)| (c * self.rows + r, v.clone())).collect()
    }

    /// First address (column-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &FieldMatrix) -> Option<(usize, usize, QRational, QRational)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0, QRational::zero(), QRational::zero()));
        }
        for c in 0..self.cols {
            let (a, b) = (&self.columns[c], &other.columns[c]);
            if a == b {
                continue;
            }
            let mut keys: Vec<usize> = a.keys().chain(b.keys()).copied().collect();
            keys.sort_unstable();
            keys.dedup();
            for r in keys {
                let (x, y) = (self.get(r, c), other.get(r, c));
                if x != y {
                    return Some((r, c, x, y));
                }
            }
        }
        None
    }
}

impl Mul<&FieldMatrix> for &FieldMatrix {
    type Output = FieldMatrix;
    fn mul(self, rhs: &FieldMatrix) -> FieldMatrix {
        self.try_mul(rhs).expect("matrix shapes agree")
    }
}

impl Add<&FieldMatrix> for &FieldMatrix {
    type Output = FieldMatrix;
    fn add(self, rhs: &FieldMatrix) -> FieldMatrix {
        self.try_add(rhs).expect("matrix shapes agree")
    }
}

impl Sub<&FieldMatrix> for &FieldMatrix {
    type Output = FieldMatrix;
    fn sub(self, rhs: &FieldMatrix) -> FieldMatrix {
        self.try_sub(rhs).expect("matrix shapes agree")
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} [", self.rows, self.cols)?;
        for (r, c, v) in self.entries_row_major() {
            writeln!(f, "  ({r}, {c}) = {v}")?;
        }
        write!(f, "]")
    }
}
