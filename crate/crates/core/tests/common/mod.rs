//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use nichols_core::braidcore::Permutation;
use nichols_core::families::{GroupData, YDGroupModule};
use nichols_core::linalg::FieldMatrix;
use nichols_core::qfield::{parse, QRational};

pub fn r(s: &str) -> QRational {
    parse(s).unwrap()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dense row-major evaluation at `q = x`.
pub fn dense_at(m: &FieldMatrix, x: &BigRational) -> Vec<Vec<BigRational>> {
    let mut out = vec![vec![BigRational::zero(); m.cols()]; m.rows()];
    for (i, j, v) in m.entries() {
        out[i][j] = v.eval(x).unwrap();
    }
    out
}

/// Textbook Gaussian elimination on a dense rational matrix.
pub fn dense_rank(mut a: Vec<Vec<BigRational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][c].clone();
        for i in 0..rows {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for j in c..cols {
                    let t = &a[rank][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn dense_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

pub fn dense_kron(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let (ar, ac, br, bc) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![BigRational::zero(); ac * bc]; ar * br];
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

pub fn dense_identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect()
}

/// The basis vector `e_{a_1} ⊗ ... ⊗ e_{a_n}` (0-based labels) as an index.
pub fn tensor_index(d: usize, labels: &[usize]) -> usize {
    labels.iter().fold(0, |acc, &a| acc * d + a)
}

/// Hook-content formula `Π_{(r,s)∈λ} (n + s - r) / h(r,s)`.
pub fn hook_content(shape: &[usize], n: usize) -> usize {
    let mut num: i64 = 1;
    let mut den: i64 = 1;
    for (r, &len) in shape.iter().enumerate() {
        for s in 0..len {
            let arm = len - s - 1;
            let leg = shape.iter().skip(r + 1).filter(|&&l| l > s).count();
            num *= (n + s) as i64 - r as i64;
            den *= (arm + leg + 1) as i64;
        }
    }
    (num / den) as usize
}

pub fn partitions(size: usize, max: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=size.min(max)).rev() {
        for mut rest in partitions(size - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Number of permutations of `S_n` with `k` inversions, `k = 0..=n(n-1)/2`.
pub fn mahonian(n: usize) -> Vec<usize> {
    // coefficients of Π_{k=1..n} (1 + x + ... + x^{k-1})
    let mut poly = vec![1usize];
    for k in 1..=n {
        let mut next = vec![0; poly.len() + k - 1];
        for (i, c) in poly.iter().enumerate() {
            for j in 0..k {
                next[i + j] += c;
            }
        }
        poly = next;
    }
    poly
}

/// `S_3` acting through the sign by swapping two basis vectors of different degrees.
pub fn s3_violation() -> YDGroupModule {
    let group = GroupData::symmetric(3);
    let transposition = group.index_of("(2,1,3)").unwrap();
    let swap = FieldMatrix::from_entries(2, 2, [(0, 1, QRational::one()), (1, 0, QRational::one())]).unwrap();
    let action = Permutation::all(3)
        .iter()
        .map(|p| if p.inversions() % 2 == 1 { swap.clone() } else { FieldMatrix::identity(2) })
        .collect();
    YDGroupModule { degrees: vec![transposition, group.identity()], group, action }
}

/// `S_3` on the span of its transpositions: `deg(v_t) = t`, `v_t ◁ g = sgn(g) v_{g⁻¹tg}`.
pub fn s3_transpositions() -> YDGroupModule {
    let group = GroupData::symmetric(3);
    let elems = Permutation::all(3);
    let ts: Vec<usize> = (0..elems.len()).filter(|&k| elems[k].inversions() % 2 == 1 && elems[k].compose(&elems[k]) == Permutation::identity(3)).collect();
    let action = (0..group.order())
        .map(|g| {
            let sign = if elems[g].inversions() % 2 == 1 { -1 } else { 1 };
            let entries = ts.iter().enumerate().map(|(col, &t)| {
                let row = ts.iter().position(|&u| u == group.conjugate(t, g)).unwrap();
                (row, col, QRational::from_int(sign))
            });
            FieldMatrix::from_entries(ts.len(), ts.len(), entries).unwrap()
        })
        .collect();
    YDGroupModule { degrees: ts, group, action }
}
