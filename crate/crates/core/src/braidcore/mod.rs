//! Braidings on `V ⊗ V` and the braid-group machinery built on them:
//! lifts to `V^{⊗n}`, reduced words, quantum symmetrizers and Hecke tests.
//!
//! Basis tensors `e_i ⊗ e_j` (0-based `i, j < d`) have index `i * d + j`, and
//! more generally `e_{a_1} ⊗ ... ⊗ e_{a_n}` has the base-`d` index with `a_1`
//! most significant. Column `(i, j)` of a braiding matrix is the image of
//! `e_i ⊗ e_j`.

mod hecke;
mod perm;
mod symmetrizer;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{rank, FieldMatrix};
use crate::qfield::QRational;

pub use hecke::{hecke_check, is_diagonal, HeckeFinding, HeckeKind};
pub use perm::{bubble_sort_word, reduced_word, BraidWord, Permutation};
pub use symmetrizer::{
    matsumoto_matrix, matsumoto_matrix_for_word, quantum_symmetrizer, quantum_symmetrizer_direct,
    SymmetrizerTower,
};

/// An invertible solution of the braid equation on `V ⊗ V`, `dim V = d`.
#[derive(Clone, PartialEq, Eq)]
pub struct Braiding {
    dim: usize,
    matrix: FieldMatrix,
}

impl Braiding {
    /// Validates shape, invertibility and the braid equation.
    pub fn new(dim: usize, matrix: FieldMatrix) -> Result<Self> {
        check_shape(dim, &matrix)?;
        if rank(&matrix) != dim * dim {
            return Err(Error::NotBraiding("matrix is singular".into()));
        }
        if let BraidVerdict::Fails(v) = check_braid_equation(dim, &matrix)? {
            return Err(Error::NotBraiding(format!("braid equation fails: {v}")));
        }
        Ok(Braiding { dim, matrix })
    }

    /// Skips validation. Results computed from a non-braiding are meaningless.
    pub fn new_unchecked(dim: usize, matrix: FieldMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), dim * dim);
        Braiding { dim, matrix }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> FieldMatrix {
        self.matrix
    }

    /// Index of `e_i ⊗ e_j` (0-based).
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.dim + j
    }

    /// Image of `e_i ⊗ e_j` as `(k, l) -> coefficient`.
    pub fn image(&self, i: usize, j: usize) -> BTreeMap<(usize, usize), QRational> {
        self.matrix
            .column(self.index(i, j))
            .iter()
            .map(|(r, v)| ((r / self.dim, r % self.dim), v.clone()))
            .collect()
    }

    /// `c · σ`; fails for `c = 0`.
    pub fn scale(&self, c: &QRational) -> Result<Braiding> {
        if c.is_zero() {
            return Err(Error::InvalidArgument("cannot scale a braiding by 0".into()));
        }
        Ok(Braiding { dim: self.dim, matrix: self.matrix.scale(c) })
    }

    /// `σ_i` acting on positions `i, i + 1` of `V^{⊗n}` (1-based `i`).
    pub fn lift(&self, n: usize, i: usize) -> Result<FieldMatrix> {
        lift_matrix(self.dim, &self.matrix, n, i)
    }
}

impl std::fmt::Debug for Braiding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Braiding").field("dim", &self.dim).field("matrix", &self.matrix).finish()
    }
}

fn check_shape(dim: usize, m: &FieldMatrix) -> Result<()> {
    let n = dim * dim;
    if dim == 0 || m.rows() != n || m.cols() != n {
        return Err(Error::Shape(format!(
            "braiding on a space of dimension {dim} must be {n}x{n}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// First entry where `σ_1σ_2σ_1` and `σ_2σ_1σ_2` differ on `V^{⊗3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidViolation {
    /// 0-based basis labels `(a, b, c)` of the output tensor.
    pub row: (usize, usize, usize),
    /// 0-based basis labels of the input tensor.
    pub col: (usize, usize, usize),
    pub left: QRational,
    pub right: QRational,
}

impl std::fmt::Display for BraidViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (a, b, c) = self.row;
        let (x, y, z) = self.col;
        write!(
            f,
            "coefficient of e{}⊗e{}⊗e{} in the image of e{}⊗e{}⊗e{}: {} vs {}",
            a + 1,
            b + 1,
            c + 1,
            x + 1,
            y + 1,
            z + 1,
            self.left,
            self.right
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidVerdict {
    Holds,
    Fails(BraidViolation),
}

impl BraidVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, BraidVerdict::Holds)
    }
}

/// Exact test of `σ_1σ_2σ_1 = σ_2σ_1σ_2` on `V^{⊗3}`.
pub fn check_braid_equation(dim: usize, m: &FieldMatrix) -> Result<BraidVerdict> {
    check_shape(dim, m)?;
    let s1 = lift_matrix(dim, m, 3, 1)?;
    let s2 = lift_matrix(dim, m, 3, 2)?;
    let left = &(&s1 * &s2) * &s1;
    let right = &(&s2 * &s1) * &s2;
    let split = |k: usize| (k / (dim * dim), (k / dim) % dim, k % dim);
    Ok(match left.first_difference(&right) {
        None => BraidVerdict::Holds,
        Some((r, c, l, rr)) => BraidVerdict::Fails(BraidViolation { row: split(r), col: split(c), left: l, right: rr }),
    })
}

/// `I^{⊗(i-1)} ⊗ σ ⊗ I^{⊗(n-i-1)}` for a `d² × d²` matrix `σ`.
pub fn lift_matrix(dim: usize, sigma: &FieldMatrix, n: usize, i: usize) -> Result<FieldMatrix> {
    check_shape(dim, sigma)?;
    if i == 0 || i >= n {
        return Err(Error::OutOfRange(format!("position {i} on {n} tensor factors")));
    }
    let total = dim.pow(n as u32);
    let s_lo = dim.pow((n - i - 1) as u32); // stride of position i + 1
    let s_hi = s_lo * dim; // stride of position i
    let columns = (0..total)
        .map(|b| {
            let a_hi = (b / s_hi) % dim;
            let a_lo = (b / s_lo) % dim;
            let base = b - a_hi * s_hi - a_lo * s_lo;
            sigma
                .column(a_hi * dim + a_lo)
                .iter()
                .map(|(r, v)| (base + (r / dim) * s_hi + (r % dim) * s_lo, v.clone()))
                .collect()
        })
        .collect();
    Ok(FieldMatrix::from_sparse_columns(total, columns))
}
