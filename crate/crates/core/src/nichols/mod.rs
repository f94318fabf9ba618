//! Graded dimensions of Nichols algebras, `ker(A_2)` relation spaces, the
//! quadratic cover and its dual, and the Hilbert-series Koszul test.

mod quadratic;
mod report;

use num_rational::BigRational;
use serde::Serialize;

use crate::braidcore::{Braiding, SymmetrizerTower};
use crate::error::{Error, Result};
use crate::linalg::{rank, specialize, FieldMatrix, SpecializationPoints};

pub use quadratic::{
    image_a2, kernel_a2, koszul_check, koszul_identity, quadratic_dims, quadratic_dims_for, quadratic_dual_dims,
    quadratic_ideal_matrix,
    relation_annihilator, KoszulDegree, KoszulReport,
};
pub use report::{analyze, DiagonalFinding, GradedDimsReport};

/// Number of specialization points tried before giving up on poles.
pub const MAX_POINT_ATTEMPTS: usize = 5;

/// How ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Backend {
    /// Exact elimination over `Q(q)`.
    Exact,
    /// Screening at a rational point drawn from the seed's stream.
    Specialized { seed: u64 },
}

/// Rank oracle for one run: exact, or evaluation at a fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ranker {
    Exact,
    At(BigRational),
}

impl Ranker {
    pub fn rank(&self, m: &FieldMatrix) -> Result<usize> {
        match self {
            Ranker::Exact => Ok(rank(m)),
            Ranker::At(x) => Ok(specialize(m, x)?.rank()),
        }
    }

    pub fn point(&self) -> Option<&BigRational> {
        match self {
            Ranker::Exact => None,
            Ranker::At(x) => Some(x),
        }
    }
}

/// Runs `job` exactly, or at successive points of the seed's stream until it
/// finishes without hitting a pole (at most [`MAX_POINT_ATTEMPTS`] points).
pub fn with_backend<T>(backend: Backend, mut job: impl FnMut(&Ranker) -> Result<T>) -> Result<(T, Ranker)> {
    match backend {
        Backend::Exact => Ok((job(&Ranker::Exact)?, Ranker::Exact)),
        Backend::Specialized { seed } => {
            let mut last = None;
            for x in SpecializationPoints::from_seed(seed).take(MAX_POINT_ATTEMPTS) {
                let ranker = Ranker::At(x);
                match job(&ranker) {
                    Ok(v) => return Ok((v, ranker)),
                    Err(e @ Error::Pole { .. }) => last = Some(e),
                    Err(e) => return Err(e),
                }
            }
            Err(last.expect("at least one point is tried"))
        }
    }
}

/// `σ` with every entry evaluated at the ranker's point (unchanged when exact).
pub(crate) fn specialized_braiding(sigma: &Braiding, ranker: &Ranker) -> Result<Braiding> {
    match ranker {
        Ranker::Exact => Ok(sigma.clone()),
        Ranker::At(x) => Ok(Braiding::new_unchecked(sigma.dim(), specialize(sigma.matrix(), x)?.to_field())),
    }
}

/// `rank(A_n)` for `n = 0..=max_degree`, exactly.
pub fn graded_dims(sigma: &Braiding, max_degree: usize) -> Vec<usize> {
    graded_dims_with(sigma, max_degree, &Ranker::Exact).expect("exact ranks never hit poles")
}

/// `rank(A_n)` for `n = 0..=max_degree` under the given rank oracle.
///
/// For a point, the symmetrizers are built from the specialized braiding, which
/// equals specializing the exact symmetrizers since `A_n` is polynomial in `σ`.
pub fn graded_dims_with(sigma: &Braiding, max_degree: usize, ranker: &Ranker) -> Result<Vec<usize>> {
    let spec = specialized_braiding(sigma, ranker)?;
    let mut tower = SymmetrizerTower::new(spec);
    let mut dims = vec![1];
    for _ in 1..=max_degree {
        let a = tower.grow()?;
        dims.push(ranker.rank(a)?);
    }
    Ok(dims)
}

/// Outcome of a finite-dimensionality scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteScan {
    pub dims: Vec<usize>,
    /// Largest degree with nonzero component, when a zero degree was reached.
    pub top_degree: Option<usize>,
    /// `Σ d_k`, when a zero degree was reached.
    pub total_dimension: Option<usize>,
}

/// Default degree cap `dim V + 2`.
pub fn default_scan_cap(sigma: &Braiding) -> usize {
    sigma.dim() + 2
}

/// Computes `d_n` until the first vanishing degree or the cap. Since the algebra
/// is generated in degree one, vanishing at `n` forces vanishing beyond `n`.
pub fn finite_dimensionality_scan(sigma: &Braiding, max_degree: usize) -> FiniteScan {
    let mut tower = SymmetrizerTower::new(sigma.clone());
    let mut dims = vec![1];
    for _ in 1..=max_degree {
        let d = rank(tower.grow().expect("lift positions are in range"));
        dims.push(d);
        if d == 0 {
            let top = dims.len() - 2;
            let total = dims.iter().sum();
            return FiniteScan { dims, top_degree: Some(top), total_dimension: Some(total) };
        }
    }
    FiniteScan { dims, top_degree: None, total_dimension: None }
}
