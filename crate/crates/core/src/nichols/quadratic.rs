//! The quadratic algebra `T(V)/⟨ker A_2⟩`, its quadratic dual, and the numerical
//! Koszul condition relating their Hilbert series.

use std::collections::BTreeMap;

use serde::Serialize;

use super::Ranker;
use crate::braidcore::Braiding;
use crate::error::Result;
use crate::linalg::{image_basis, kernel_basis, FieldMatrix, SubspaceBasis};
use crate::qfield::QRational;

fn one_plus(sigma: &Braiding) -> FieldMatrix {
    &FieldMatrix::identity(sigma.dim() * sigma.dim()) + sigma.matrix()
}

/// Basis of `ker(A_2) = ker(I + σ)`.
pub fn kernel_a2(sigma: &Braiding) -> SubspaceBasis {
    kernel_basis(&one_plus(sigma))
}

/// Basis of `Im(A_2)`.
pub fn image_a2(sigma: &Braiding) -> SubspaceBasis {
    image_basis(&one_plus(sigma))
}

/// `ann(K) ⊂ (V ⊗ V)*` under the dual-basis pairing, in dual coordinates.
pub fn relation_annihilator(relations: &SubspaceBasis) -> SubspaceBasis {
    kernel_basis(&relations.as_matrix().transpose())
}

/// Spanning columns of `Σ_k V^{⊗k} ⊗ R ⊗ V^{⊗(n-2-k)}` inside `V^{⊗n}`, `n >= 2`:
/// each relation placed between every pair of basis tensors.
pub fn quadratic_ideal_matrix(d: usize, relations: &SubspaceBasis, n: usize) -> FieldMatrix {
    assert!(n >= 2, "the ideal starts in degree 2");
    let total = d.pow(n as u32);
    let mut spanning: Vec<BTreeMap<usize, QRational>> = Vec::new();
    for k in 0..=n - 2 {
        let suffix = d.pow((n - 2 - k) as u32);
        let prefix = d.pow(k as u32);
        for p in 0..prefix {
            for s in 0..suffix {
                for r in relations.vectors() {
                    spanning.push(r.iter().map(|(i, v)| ((p * d * d + i) * suffix + s, v.clone())).collect());
                }
            }
        }
    }
    FieldMatrix::from_sparse_columns(total, spanning)
}

/// Degree-`n` dimensions of `T(V)/⟨R⟩` for a relation space `R ⊂ V ⊗ V`, `n = 0..=max_degree`.
pub fn quadratic_dims_for(d: usize, relations: &SubspaceBasis, max_degree: usize, ranker: &Ranker) -> Result<Vec<usize>> {
    let mut dims = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let total = d.pow(n as u32);
        if n < 2 {
            dims.push(total);
        } else {
            dims.push(total - ranker.rank(&quadratic_ideal_matrix(d, relations, n))?);
        }
    }
    Ok(dims)
}

/// Graded dimensions of `T(V)/⟨ker A_2⟩`.
pub fn quadratic_dims(sigma: &Braiding, max_degree: usize) -> Vec<usize> {
    quadratic_dims_for(sigma.dim(), &kernel_a2(sigma), max_degree, &Ranker::Exact).expect("exact")
}

/// Graded dimensions of the quadratic dual `T(V*)/⟨ann(ker A_2)⟩`.
pub fn quadratic_dual_dims(sigma: &Braiding, max_degree: usize) -> Vec<usize> {
    let ann = relation_annihilator(&kernel_a2(sigma));
    quadratic_dims_for(sigma.dim(), &ann, max_degree, &Ranker::Exact).expect("exact")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulDegree {
    pub degree: usize,
    /// `Σ_{k=0..n} (-1)^k a_k b_{n-k}`.
    pub value: i128,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulReport {
    pub quadratic_dims: Vec<usize>,
    pub dual_dims: Vec<usize>,
    pub degrees: Vec<KoszulDegree>,
    pub passes: bool,
}

/// The alternating identity for degrees `1..` the common length of `a` and `b`.
pub fn koszul_identity(a: &[usize], b: &[usize]) -> Vec<KoszulDegree> {
    let top = a.len().min(b.len());
    (1..top)
        .map(|n| {
            let value: i128 = (0..=n)
                .map(|k| {
                    let t = a[k] as i128 * b[n - k] as i128;
                    if k % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum();
            KoszulDegree { degree: n, value, passes: value == 0 }
        })
        .collect()
}

/// Hilbert-series necessary condition for Koszulity of `T(V)/⟨ker A_2⟩`, degrees `1..=max_degree`.
pub fn koszul_check(sigma: &Braiding, max_degree: usize) -> KoszulReport {
    let a = quadratic_dims(sigma, max_degree);
    let b = quadratic_dual_dims(sigma, max_degree);
    koszul_report(a, b)
}

pub(crate) fn koszul_report(a: Vec<usize>, b: Vec<usize>) -> KoszulReport {
    let degrees = koszul_identity(&a, &b);
    let passes = degrees.iter().all(|d| d.passes);
    KoszulReport { quadratic_dims: a, dual_dims: b, degrees, passes }
}
