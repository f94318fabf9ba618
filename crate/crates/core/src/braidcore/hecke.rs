//! Hecke-type tests: does `(σ - λ)(σ + 1) = 0` hold, possibly after rescaling?

use num_traits::{One, Signed};
use serde::Serialize;

use super::Braiding;
use crate::error::Result;
use crate::linalg::{minimal_polynomial, FieldPoly};
use crate::qfield::QRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HeckeKind {
    /// `(σ - λ)(σ + 1) = 0` with `λ ≠ -1`.
    Hecke { lambda: QRational, root_of_unity: bool },
    /// `scalar · σ` is of Hecke type with the given `λ`.
    UpToScaling { scalar: QRational, lambda: QRational, root_of_unity: bool },
    /// No scalar multiple of `σ` satisfies a Hecke relation with `λ ≠ -1`.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeFinding {
    #[serde(serialize_with = "ser_poly")]
    pub minimal_polynomial: FieldPoly,
    #[serde(flatten)]
    pub kind: HeckeKind,
}

fn ser_poly<S: serde::Serializer>(p: &FieldPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl HeckeFinding {
    /// `λ` when `σ` itself is of Hecke type.
    pub fn lambda(&self) -> Option<&QRational> {
        match &self.kind {
            HeckeKind::Hecke { lambda, .. } => Some(lambda),
            _ => None,
        }
    }

    pub fn is_hecke(&self) -> bool {
        matches!(self.kind, HeckeKind::Hecke { .. })
    }
}

/// Constant `λ` with `λ^k = 1` for some `k`; over `Q` that means `±1`.
fn is_root_of_unity(x: &QRational) -> bool {
    x.as_constant().is_some_and(|c| c.abs().is_one())
}

fn hecke(lambda: QRational) -> HeckeKind {
    let root_of_unity = is_root_of_unity(&lambda);
    HeckeKind::Hecke { lambda, root_of_unity }
}

pub fn hecke_check(sigma: &Braiding) -> Result<HeckeFinding> {
    let mp = minimal_polynomial(sigma.matrix())?;
    let minus_one = -QRational::one();
    let kind = match mp.degree() {
        Some(1) => {
            let a = -mp.coeffs()[0].clone();
            // σ = -1 satisfies every relation of this shape; report the involutive one
            if a == minus_one {
                hecke(QRational::one())
            } else {
                hecke(a)
            }
        }
        Some(2) if mp.eval(&minus_one).is_zero() => {
            // monic with roots -1 and λ, so the constant term is -λ
            let lambda = -mp.coeffs()[0].clone();
            if lambda == minus_one {
                HeckeKind::None
            } else {
                hecke(lambda)
            }
        }
        Some(2) => match mp.small_roots() {
            Some(roots) if roots[0] != roots[1] => {
                let (a, b) = (&roots[0], &roots[1]);
                // -σ/b has roots -a/b and -1
                let scalar = -b.inv()?;
                let lambda = -a.checked_div(b)?;
                let root_of_unity = is_root_of_unity(&lambda);
                HeckeKind::UpToScaling { scalar, lambda, root_of_unity }
            }
            _ => HeckeKind::None,
        },
        _ => HeckeKind::None,
    };
    Ok(HeckeFinding { minimal_polynomial: mp, kind })
}

/// The table `λ_{ij}` when `σ(e_i ⊗ e_j) = λ_{ij} e_j ⊗ e_i` for all `i, j`.
pub fn is_diagonal(sigma: &Braiding) -> Option<Vec<Vec<QRational>>> {
    let d = sigma.dim();
    let mut table = vec![vec![QRational::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let col = sigma.matrix().column(sigma.index(i, j));
            let target = sigma.index(j, i);
            match col.len() {
                0 => {}
                1 => {
                    let (&r, v) = col.iter().next().unwrap();
                    if r != target {
                        return None;
                    }
                    table[i][j] = v.clone();
                }
                _ => return None,
            }
        }
    }
    Some(table)
}
