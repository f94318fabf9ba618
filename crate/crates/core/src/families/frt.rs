//! Type-A R-matrix braidings and the braidings on the cotangent space of
//! quantum projective space `CP^n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::diagonal;
use crate::braidcore::Braiding;
use crate::error::{Error, Result};
use crate::linalg::{inverse, kernel_basis, solve_unique, FieldMatrix, SubspaceBasis};
use crate::qfield::QRational;

/// Which of the two standard type-A R-matrices to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RConvention {
    /// `q` on the diagonal, `ν = q - q⁻¹` on `e_i ⊗ e_j` for `i > j`.
    R,
    /// The inverse braiding: `q⁻¹` on the diagonal, `-ν` on `e_i ⊗ e_j` for `i < j`.
    RBar,
}

impl FromStr for RConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r" => Ok(RConvention::R),
            "rbar" | "r-bar" | "r_bar" => Ok(RConvention::RBar),
            _ => Err(Error::InvalidArgument(format!("unknown R-matrix convention '{s}'"))),
        }
    }
}

impl fmt::Display for RConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RConvention::R => "r",
            RConvention::RBar => "rbar",
        })
    }
}

/// The unscaled `n² × n²` braiding matrix of the given convention.
pub fn frt_matrix(n: usize, convention: RConvention) -> FieldMatrix {
    let nu = QRational::nu();
    let idx = |a: usize, b: usize| a * n + b;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                let diag = match convention {
                    RConvention::R => QRational::q(),
                    RConvention::RBar => QRational::q_pow(-1),
                };
                entries.push((idx(i, i), idx(i, i), diag));
                continue;
            }
            entries.push((idx(j, i), idx(i, j), QRational::one()));
            match convention {
                RConvention::R if i > j => entries.push((idx(i, j), idx(i, j), nu.clone())),
                RConvention::RBar if i < j => entries.push((idx(i, j), idx(i, j), -nu.clone())),
                _ => {}
            }
        }
    }
    FieldMatrix::from_entries(n * n, n * n, entries).expect("indices in range")
}

/// `scale · σ_R` (or `scale · σ_R̄`) on an `n`-dimensional space, verified.
pub fn frt_braiding(n: usize, convention: RConvention, scale: &QRational) -> Result<Braiding> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    if scale.is_zero() {
        return Err(Error::InvalidArgument("scale must be nonzero".into()));
    }
    Braiding::new(n, frt_matrix(n, convention).scale(scale))
}

/// The braiding on the `n`-dimensional anti-holomorphic cotangent space of `CP^n`.
///
/// Defaults to `-q⁻¹ σ_R`, the normalization with `e_i ⊗ e_i ∈ ker(I + σ)`.
/// Its eigenvalues are `-1` and `q⁻²`.
pub fn cpn_cotangent_braiding(n: usize, normalization: Option<&QRational>) -> Result<Braiding> {
    let default = -QRational::q_pow(-1);
    frt_braiding(n, RConvention::R, normalization.unwrap_or(&default))
}

/// [`bundle_braiding_with`] in the `R` convention.
pub fn bundle_braiding(n: usize) -> Result<Braiding> {
    bundle_braiding_with(n, RConvention::R)
}

/// Evaluates the coquasitriangular braiding of the total space on the generators
/// `[u^1_i]`, `2 ≤ i ≤ n + 1`, of the cotangent space of `CP^n`, using `C_q[GL_{n+1}]`.
///
/// With `r(u^a_b ⊗ u^c_d) = R^{ac}_{bd}` and `Δ(u^i_j) = Σ_k u^i_k ⊗ u^k_j`, the
/// coefficient of `[u^1_b] ⊗ [u^1_a]` in `σ([u^1_i] ⊗ [u^1_k])` is
///
/// `Σ r̄(u^{a1}_1 ⊗ u^b_{b4}) r(u^1_{a1} ⊗ u^{b1}_1) r(u^a_{a4} ⊗ u^{b4}_k) r(u^{a4}_i ⊗ S(u^1_{b1}))`
///
/// where the first coproduct legs of `f` and the outer legs of `g` are pinned to
/// the row index 1 by the projection onto cotangent generators.
pub fn bundle_braiding_with(n: usize, convention: RConvention) -> Result<Braiding> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    let big = n + 1;
    let sq = big * big;
    let sigma = frt_matrix(big, convention);
    let pair = |a: usize, b: usize| a * big + b;
    // r^{ac}_{bd} laid out with upper pair as row, lower pair as column
    let mut rt = FieldMatrix::zeros(sq, sq);
    for (row, col, v) in sigma.entries() {
        let (c, a) = (row / big, row % big);
        let (b, d) = (col / big, col % big);
        rt.set(pair(a, c), pair(b, d), v.clone());
    }
    let rbar = inverse(&rt)?;
    // T^{ay}_{xd} = r(u^a_x ⊗ S(u^y_d)) is determined by Σ_{x,y} R^{xc}_{by} T^{ay}_{xd} = δ^a_b δ^c_d
    let mut y = FieldMatrix::zeros(sq, sq);
    for (row, col, v) in rt.entries() {
        let (xx, c) = (row / big, row % big);
        let (b, yy) = (col / big, col % big);
        y.set(pair(xx, yy), pair(b, c), v.clone());
    }
    let x = inverse(&y)?;
    let r = |a, b, c, d| rt.get(pair(a, c), pair(b, d));
    let rb = |a, b, c, d| rbar.get(pair(a, c), pair(b, d));
    let t = |a, yy, xx, d| x.get(pair(a, d), pair(xx, yy));

    let mut entries = Vec::new();
    for i in 1..big {
        for k in 1..big {
            for b3 in 1..big {
                for a3 in 1..big {
                    let mut acc = QRational::zero();
                    for a1 in 0..big {
                        for b1 in 0..big {
                            let r2 = r(0, a1, b1, 0);
                            if r2.is_zero() {
                                continue;
                            }
                            for b4 in 0..big {
                                let r3 = rb(a1, 0, b3, b4);
                                if r3.is_zero() {
                                    continue;
                                }
                                let head = &r2 * &r3;
                                for a4 in 0..big {
                                    let r4 = r(a3, a4, b4, k);
                                    if r4.is_zero() {
                                        continue;
                                    }
                                    let tail = t(a4, 0, i, b1);
                                    if tail.is_zero() {
                                        continue;
                                    }
                                    acc = &acc + &(&head * &(&r4 * &tail));
                                }
                            }
                        }
                    }
                    if !acc.is_zero() {
                        entries.push(((b3 - 1) * n + (a3 - 1), (i - 1) * n + (k - 1), acc));
                    }
                }
            }
        }
    }
    Braiding::new(n, FieldMatrix::from_entries(n * n, n * n, entries)?)
}

/// The twisted flip `e_a ⊗ e_b ↦ q^{δ_{b1}} e_b ⊗ e_a`, index 1 distinguished.
pub fn cpn_yd_braiding(n: usize) -> Result<Braiding> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    let table: Vec<Vec<QRational>> = (0..n)
        .map(|_| (0..n).map(|b| if b == 0 { QRational::q() } else { QRational::one() }).collect())
        .collect();
    let d = diagonal(&table)?;
    Braiding::new(n, d.into_matrix())
}

/// `c` with `a = c · b`, if one exists.
pub fn proportionality_scalar(a: &Braiding, b: &Braiding) -> Option<QRational> {
    if a.dim() != b.dim() {
        return None;
    }
    let mut scalar: Option<QRational> = None;
    for (ca, cb) in a.matrix().columns().iter().zip(b.matrix().columns()) {
        if ca.len() != cb.len() {
            return None;
        }
        for ((ra, va), (rb, vb)) in ca.iter().zip(cb) {
            if ra != rb {
                return None;
            }
            let ratio = va.checked_div(vb).ok()?;
            match &scalar {
                None => scalar = Some(ratio),
                Some(s) if *s == ratio => {}
                Some(_) => return None,
            }
        }
    }
    scalar
}

/// Rescales each column of `base` so that the result agrees with `target` on `subspace`.
///
/// The column factors are the unique solution of a linear system; the result is
/// checked to be a braiding.
pub fn agreement_rescaling(base: &Braiding, target: &Braiding, subspace: &SubspaceBasis) -> Result<Braiding> {
    let dd = base.dim() * base.dim();
    if target.dim() != base.dim() || subspace.ambient() != dd {
        return Err(Error::Shape("braidings and subspace live on different spaces".into()));
    }
    let k = subspace.dim();
    let mut a = FieldMatrix::zeros(k * dd, dd);
    let mut rhs = vec![QRational::zero(); k * dd];
    for (vi, v) in subspace.vectors().iter().enumerate() {
        for (c, vc) in v {
            for (r, s) in base.matrix().column(*c) {
                a.add_to(vi * dd + r, *c, &(vc * s));
            }
        }
        for (r, w) in target.matrix().apply_sparse(v) {
            rhs[vi * dd + r] = w;
        }
    }
    let factors = solve_unique(&a, &rhs)?;
    let columns = base
        .matrix()
        .columns()
        .iter()
        .zip(&factors)
        .map(|(col, t)| col.iter().map(|(r, v)| (*r, v * t)).collect())
        .collect();
    Braiding::new(base.dim(), FieldMatrix::from_sparse_columns(dd, columns))
}

/// The twisted flip rescaled to agree with the default cotangent braiding on `ker(I + σ)`.
pub fn cpn_yd_scaled_braiding(n: usize) -> Result<Braiding> {
    let cpn = cpn_cotangent_braiding(n, None)?;
    let ker = kernel_basis(&(&FieldMatrix::identity(n * n) + cpn.matrix()));
    agreement_rescaling(&cpn_yd_braiding(n)?, &cpn, &ker)
}
