//! Fraction-free elimination over `Z[q]`.
//!
//! A matrix is first split into the connected components of its row/column
//! incidence graph; rank and kernel are additive over components, and the
//! braidings handled here preserve weight, so components stay small even when
//! the ambient space has dimension in the thousands. Inside a component each
//! row is cleared of denominators and Bareiss elimination runs on sparse rows,
//! pivoting on the sparsest column (ties broken by lowest column) and, within
//! it, the sparsest row (ties broken by lowest row).

use std::collections::BTreeMap;

use super::matrix::FieldMatrix;
use crate::error::{Error, Result};
use crate::qfield::{IntPoly, QRational};

type PolyRow = BTreeMap<usize, IntPoly>;

/// One pivot of an echelon form: the pivot column, the originating row, and
/// the row as it stood when it was selected.
#[derive(Clone, Debug)]
pub(crate) struct Pivot {
    pub col: usize,
    pub row: usize,
    pub entries: PolyRow,
}

#[derive(Clone, Debug)]
pub(crate) struct Component {
    pub cols: Vec<usize>,
    pub pivots: Vec<Pivot>,
}

pub(crate) struct Echelon {
    pub components: Vec<Component>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.pivots.len()).sum()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

fn lcm(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() || a == b {
        return a.clone();
    }
    let g = IntPoly::gcd(a, b);
    &a.div_exact(&g).expect("gcd divides") * b
}

/// Clears denominators of a row by its lcm and strips the integer content.
fn integral_row(row: &BTreeMap<usize, QRational>) -> PolyRow {
    let mut l = IntPoly::one();
    for v in row.values() {
        l = lcm(&l, v.denom());
    }
    let mut out: PolyRow = row
        .iter()
        .map(|(c, v)| {
            let factor = l.div_exact(v.denom()).expect("lcm is a multiple");
            (*c, v.numer() * &factor)
        })
        .collect();
    let mut g = num_bigint::BigInt::from(0);
    for p in out.values() {
        g = num_integer::Integer::gcd(&g, &p.content());
    }
    if g > num_bigint::BigInt::from(1) {
        for p in out.values_mut() {
            *p = p.div_scalar_exact(&g);
        }
    }
    out
}

/// Computes the echelon data of `m`.
pub(crate) fn echelon(m: &FieldMatrix) -> Echelon {
    let nrows = m.rows();
    let ncols = m.cols();
    // Nodes: rows 0..nrows, columns nrows..nrows+ncols.
    let mut uf = UnionFind::new(nrows + ncols);
    for (r, c, _) in m.entries() {
        uf.union(r, nrows + c);
    }
    let rows = m.to_rows();
    let mut groups: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for c in 0..ncols {
        let root = uf.find(nrows + c);
        groups.entry(root).or_default().1.push(c);
    }
    for (r, row) in rows.iter().enumerate() {
        if !row.is_empty() {
            let root = uf.find(r);
            groups.entry(root).or_default().0.push(r);
        }
    }
    let components = groups
        .into_values()
        .map(|(row_ids, cols)| {
            let pivots = if row_ids.is_empty() {
                Vec::new()
            } else {
                let local: Vec<(usize, PolyRow)> =
                    row_ids.iter().map(|&r| (r, integral_row(&rows[r]))).collect();
                bareiss(local)
            };
            Component { cols, pivots }
        })
        .collect();
    Echelon { components }
}

fn bareiss(mut rows: Vec<(usize, PolyRow)>) -> Vec<Pivot> {
    let mut pivots = Vec::new();
    let mut prev = IntPoly::one();
    rows.retain(|(_, r)| !r.is_empty());
    while !rows.is_empty() {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (_, row) in &rows {
            for c in row.keys() {
                *counts.entry(*c).or_default() += 1;
            }
        }
        let (&col, _) = counts
            .iter()
            .min_by_key(|(c, n)| (**n, **c))
            .expect("nonempty rows have entries");
        let (idx, _) = rows
            .iter()
            .enumerate()
            .filter(|(_, (_, row))| row.contains_key(&col))
            .min_by_key(|(_, (id, row))| (row.len(), *id))
            .expect("column count is positive");
        let (pivot_id, pivot_row) = rows.swap_remove(idx);
        let p = pivot_row[&col].clone();
        for (_, row) in rows.iter_mut() {
            *row = match row.remove(&col) {
                Some(a) => eliminate(row, &pivot_row, col, &p, &a, &prev),
                None => rescale(row, &p, &prev),
            };
        }
        rows.retain(|(_, r)| !r.is_empty());
        // swap_remove perturbed the order; restore it so ties stay deterministic
        rows.sort_by_key(|(id, _)| *id);
        prev = p;
        pivots.push(Pivot { col, row: pivot_id, entries: pivot_row });
    }
    pivots
}

/// `(p * row - a * pivot_row) / prev`, with `row[col]` already removed.
fn eliminate(row: &PolyRow, pivot_row: &PolyRow, col: usize, p: &IntPoly, a: &IntPoly, prev: &IntPoly) -> PolyRow {
    let mut out = PolyRow::new();
    for (c, v) in row {
        out.insert(*c, v * p);
    }
    for (c, v) in pivot_row {
        if *c == col {
            continue;
        }
        let t = v * a;
        match out.get_mut(c) {
            Some(x) => *x = &*x - &t,
            None => {
                out.insert(*c, -t);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    if !prev.is_one() {
        for v in out.values_mut() {
            *v = v.div_exact(prev).expect("Bareiss division is exact");
        }
    }
    out
}

fn rescale(row: &PolyRow, p: &IntPoly, prev: &IntPoly) -> PolyRow {
    if p == prev {
        return row.clone();
    }
    row.iter()
        .map(|(c, v)| (*c, (v * p).div_exact(prev).expect("Bareiss division is exact")))
        .collect()
}

/// Exact rank over `Q(q)`.
pub fn rank(m: &FieldMatrix) -> usize {
    echelon(m).rank()
}

/// `cols - rank`.
pub fn nullity(m: &FieldMatrix) -> usize {
    m.cols() - rank(m)
}

/// Basis of the right kernel, one vector per free column, as sparse columns.
///
/// Each vector has coordinate 1 at its free column and 0 at every other free column.
pub(crate) fn kernel_columns(m: &FieldMatrix) -> Vec<BTreeMap<usize, QRational>> {
    let ech = echelon(m);
    let mut out = Vec::new();
    for comp in &ech.components {
        let pivot_cols: std::collections::BTreeSet<usize> = comp.pivots.iter().map(|p| p.col).collect();
        for &free in comp.cols.iter().filter(|c| !pivot_cols.contains(c)) {
            let mut x: BTreeMap<usize, QRational> = BTreeMap::new();
            x.insert(free, QRational::one());
            for piv in comp.pivots.iter().rev() {
                let mut acc = QRational::zero();
                for (c, v) in &piv.entries {
                    if *c == piv.col {
                        continue;
                    }
                    if let Some(xc) = x.get(c) {
                        acc = &acc + &(&QRational::from_poly(v.clone()) * xc);
                    }
                }
                if !acc.is_zero() {
                    let lead = QRational::from_poly(piv.entries[&piv.col].clone());
                    let val = -(acc.checked_div(&lead).expect("pivot is nonzero"));
                    x.insert(piv.col, val);
                }
            }
            out.push((free, x));
        }
    }
    out.sort_by_key(|(free, _)| *free);
    out.into_iter().map(|(_, x)| x).collect()
}

/// Indices of a maximal independent set of columns, in increasing order.
pub(crate) fn independent_columns(m: &FieldMatrix) -> Vec<usize> {
    let ech = echelon(&m.transpose());
    let mut rows: Vec<usize> = ech.components.iter().flat_map(|c| c.pivots.iter().map(|p| p.row)).collect();
    rows.sort_unstable();
    rows
}

/// Inverse of a square matrix by Gauss-Jordan elimination over `Q(q)`.
pub fn inverse(m: &FieldMatrix) -> Result<FieldMatrix> {
    if !m.is_square() {
        return Err(Error::Shape(format!("cannot invert a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let mut a: Vec<BTreeMap<usize, QRational>> = m.to_rows();
    let mut inv: Vec<BTreeMap<usize, QRational>> =
        (0..n).map(|i| BTreeMap::from([(i, QRational::one())])).collect();
    for col in 0..n {
        let pr = (col..n)
            .filter(|&r| a[r].contains_key(&col))
            .min_by_key(|&r| a[r].len())
            .ok_or_else(|| Error::InvalidArgument("matrix is singular".into()))?;
        a.swap(col, pr);
        inv.swap(col, pr);
        let p = a[col][&col].inv()?;
        scale_row(&mut a[col], &p);
        scale_row(&mut inv[col], &p);
        let (pa, pi) = (a[col].clone(), inv[col].clone());
        for r in 0..n {
            if r == col {
                continue;
            }
            if let Some(f) = a[r].get(&col).cloned() {
                axpy(&mut a[r], &pa, &(-&f));
                axpy(&mut inv[r], &pi, &(-&f));
            }
        }
    }
    let entries = inv.into_iter().enumerate().flat_map(|(r, row)| row.into_iter().map(move |(c, v)| (r, c, v)));
    FieldMatrix::from_entries(n, n, entries)
}

fn scale_row(row: &mut BTreeMap<usize, QRational>, c: &QRational) {
    for v in row.values_mut() {
        *v = &*v * c;
    }
}

fn axpy(row: &mut BTreeMap<usize, QRational>, x: &BTreeMap<usize, QRational>, f: &QRational) {
    for (c, v) in x {
        let t = v * f;
        match row.get_mut(c) {
            Some(y) => *y = &*y + &t,
            None => {
                row.insert(*c, t);
            }
        }
    }
    row.retain(|_, v| !v.is_zero());
}

/// The unique `x` with `m x = b`.
///
/// Fails when the system is inconsistent or `m` has a nontrivial kernel.
pub fn solve_unique(m: &FieldMatrix, b: &[QRational]) -> Result<Vec<QRational>> {
    if b.len() != m.rows() {
        return Err(Error::Shape(format!("right-hand side of length {} for {} rows", b.len(), m.rows())));
    }
    if rank(m) != m.cols() {
        return Err(Error::InvalidArgument("system has more than one solution".into()));
    }
    let mut columns = m.columns().to_vec();
    columns.push(b.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(r, v)| (r, v.clone())).collect());
    let augmented = FieldMatrix::from_sparse_columns(m.rows(), columns);
    let kernel = kernel_columns(&augmented);
    let k = kernel
        .iter()
        .find(|k| k.contains_key(&m.cols()))
        .ok_or_else(|| Error::InvalidArgument("system is inconsistent".into()))?;
    let t = -k[&m.cols()].inv()?;
    Ok((0..m.cols()).map(|c| k.get(&c).map_or_else(QRational::zero, |v| v * &t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unique_solution() {
        let m = FieldMatrix::from_entries(2, 2, [(0, 0, r("q")), (0, 1, r("1")), (1, 1, r("q-1"))]).unwrap();
        let x = solve_unique(&m, &[r("q^2"), r("q^2-q")]).unwrap();
        assert_eq!(x, vec![r("q-1"), r("q")]);
        assert!(solve_unique(&FieldMatrix::zeros(2, 2), &[r("1"), r("0")]).is_err());
    }

    fn r(s: &str) -> QRational {
        s.parse().unwrap()
    }

    #[test]
    fn rank_of_basic_shapes() {
        assert_eq!(rank(&FieldMatrix::identity(4)), 4);
        assert_eq!(rank(&FieldMatrix::zeros(3, 5)), 0);
        // [[q, 1], [q^2, q]] has rank 1
        let m = FieldMatrix::from_entries(2, 2, [(0, 0, r("q")), (0, 1, r("1")), (1, 0, r("q^2")), (1, 1, r("q"))])
            .unwrap();
        assert_eq!(rank(&m), 1);
        let k = kernel_columns(&m);
        assert_eq!(k.len(), 1);
    }

    #[test]
    fn bareiss_on_dense_block() {
        // Vandermonde in (1, q, q^2): full rank 3
        let mut e = Vec::new();
        for (i, x) in ["1", "q", "q^2"].iter().enumerate() {
            let x = r(x);
            for j in 0..3 {
                e.push((i, j, x.pow(j as i64).unwrap()));
            }
        }
        let m = FieldMatrix::from_entries(3, 3, e).unwrap();
        assert_eq!(rank(&m), 3);
        let inv = inverse(&m).unwrap();
        assert_eq!(&inv * &m, FieldMatrix::identity(3));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = FieldMatrix::from_entries(
            2,
            4,
            [(0, 0, r("1")), (0, 1, r("q")), (1, 1, r("1/q")), (1, 2, r("q-1")), (0, 3, r("2"))],
        )
        .unwrap();
        let k = kernel_columns(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply_sparse(v).is_empty());
        }
    }

    #[test]
    fn singular_inverse_is_rejected() {
        let m = FieldMatrix::from_entries(2, 2, [(0, 0, r("1")), (0, 1, r("1"))]).unwrap();
        assert!(inverse(&m).is_err());
    }
}
