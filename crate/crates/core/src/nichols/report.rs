use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::quadratic::{kernel_a2, quadratic_dims_for, relation_annihilator};
use super::{graded_dims_with, with_backend, Backend};
use crate::braidcore::{hecke_check, is_diagonal, Braiding, HeckeFinding};
use crate::error::Result;
use crate::qfield::QRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalFinding {
    pub is_diagonal: bool,
    /// `λ_{ij}` indexed `[i][j]` when diagonal.
    pub lambda: Option<Vec<Vec<QRational>>>,
}

/// Everything computed about one braiding up to a degree cap.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradedDimsReport {
    pub braiding: String,
    pub dim: usize,
    pub max_degree: usize,
    pub nichols_dims: Vec<usize>,
    pub quadratic_dims: Vec<usize>,
    pub dual_dims: Vec<usize>,
    pub hecke: HeckeFinding,
    pub diagonal: DiagonalFinding,
    /// Top nonzero degree when some `d_n` with `n <= max_degree` vanishes.
    pub finite_dimensional_at: Option<usize>,
    pub total_dimension: Option<usize>,
    pub backend: Backend,
    /// Rational point used in specialized mode.
    pub specialization_point: Option<String>,
    /// True when ranks come from specialization and are screening results only.
    pub screening: bool,
    pub timings_ms: BTreeMap<String, f64>,
}

fn timed<T>(timings: &mut BTreeMap<String, f64>, stage: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.insert(stage.to_string(), start.elapsed().as_secs_f64() * 1e3);
    out
}

pub fn analyze(name: &str, sigma: &Braiding, max_degree: usize, backend: Backend) -> Result<GradedDimsReport> {
    let mut timings = BTreeMap::new();
    let hecke = timed(&mut timings, "hecke", || hecke_check(sigma))?;
    let lambda = timed(&mut timings, "diagonal", || is_diagonal(sigma));
    let diagonal = DiagonalFinding { is_diagonal: lambda.is_some(), lambda };
    let relations = timed(&mut timings, "kernel_a2", || kernel_a2(sigma));
    let dual_relations = relation_annihilator(&relations);
    let start = Instant::now();
    let ((nichols_dims, quadratic_dims, dual_dims), ranker) = with_backend(backend, |r| {
        let n = graded_dims_with(sigma, max_degree, r)?;
        let a = quadratic_dims_for(sigma.dim(), &relations, max_degree, r)?;
        let b = quadratic_dims_for(sigma.dim(), &dual_relations, max_degree, r)?;
        Ok((n, a, b))
    })?;
    timings.insert("dimensions".into(), start.elapsed().as_secs_f64() * 1e3);
    let zero = nichols_dims.iter().position(|&d| d == 0);
    Ok(GradedDimsReport {
        braiding: name.to_string(),
        dim: sigma.dim(),
        max_degree,
        finite_dimensional_at: zero.map(|z| z - 1),
        total_dimension: zero.map(|_| nichols_dims.iter().sum()),
        nichols_dims,
        quadratic_dims,
        dual_dims,
        hecke,
        diagonal,
        backend,
        specialization_point: ranker.point().map(|x| x.to_string()),
        screening: ranker.point().is_some(),
        timings_ms: timings,
    })
}
