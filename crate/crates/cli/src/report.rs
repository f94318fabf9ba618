//! The machine-readable analysis report and its plain-text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nichols_core::braidcore::{HeckeFinding, HeckeKind};
use nichols_core::linalg::SubspaceBasis;
use nichols_core::nichols::{Backend, DiagonalFinding, GradedDimsReport, KoszulReport};
use nichols_core::qfield::QRational;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum InputIdentity {
    Family { name: String, params: BTreeMap<String, String> },
    File { file: String, sha256: String },
    None,
}

#[derive(Clone, Debug, Serialize)]
pub struct BraidCheck {
    pub verdict: bool,
    pub invertible: bool,
    pub braid_equation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

/// One vector, as `(basis tensor, coefficient)` pairs.
pub type SparseVector = Vec<(String, QRational)>;

#[derive(Clone, Debug, Serialize)]
pub struct KernelSection {
    pub dim: usize,
    pub image_dim: usize,
    pub basis: Vec<SparseVector>,
}

pub fn tensor_vectors(d: usize, basis: &SubspaceBasis) -> Vec<SparseVector> {
    basis
        .vectors()
        .iter()
        .map(|v| v.iter().map(|(&k, c)| (format!("e{}⊗e{}", k / d + 1, k % d + 1), c.clone())).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadraticSection {
    pub relations_dim: usize,
    pub quadratic_dims: Vec<usize>,
    pub dual_dims: Vec<usize>,
}

/// Exact recomputation of a screening run.
#[derive(Clone, Debug, Serialize)]
pub struct ExactConfirmation {
    pub nichols_dims: Vec<usize>,
    pub quadratic_dims: Vec<usize>,
    pub dual_dims: Vec<usize>,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableauxSection {
    pub shape: Vec<usize>,
    pub n: usize,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableaux: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetTerm {
    pub permutation: String,
    pub coeff: QRational,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetSection {
    pub n: usize,
    pub terms: Vec<DetTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyEntry {
    pub name: String,
    pub params: String,
    pub summary: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySection {
    pub braiding: String,
    pub dim: usize,
    pub nonzeros: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub emitted: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub version: &'static str,
    pub command: String,
    pub input: InputIdentity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backend: Option<Backend>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub screening: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub specialization_point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braid_equation: Option<BraidCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hecke: Option<HeckeFinding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<DiagonalFinding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded: Option<GradedDimsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_confirmation: Option<ExactConfirmation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_a2: Option<KernelSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadratic: Option<QuadraticSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub koszul: Option<KoszulReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableaux: Option<TableauxSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub det: Option<DetSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub families: Option<Vec<FamilyEntry>>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl AnalysisReport {
    pub fn new(command: &str, input: InputIdentity) -> Self {
        AnalysisReport {
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input,
            dim: None,
            backend: None,
            screening: None,
            specialization_point: None,
            braid_equation: None,
            hecke: None,
            diagonal: None,
            graded: None,
            exact_confirmation: None,
            kernel_a2: None,
            quadratic: None,
            koszul: None,
            tableaux: None,
            det: None,
            family: None,
            families: None,
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "nichols {} :: {}", self.version, self.command);
        match &self.input {
            InputIdentity::Family { name, params } => {
                let p: String = params.iter().map(|(k, v)| format!(" {k}={v}")).collect();
                let _ = writeln!(w, "input: family {name}{p}");
            }
            InputIdentity::File { file, sha256 } => {
                let _ = writeln!(w, "input: file {file} (sha256 {sha256})");
            }
            InputIdentity::None => {}
        }
        if let Some(d) = self.dim {
            let _ = writeln!(w, "dim V: {d}");
        }
        if let Some(b) = &self.backend {
            let mode = match b {
                Backend::Exact => "exact".to_string(),
                Backend::Specialized { seed } => format!("specialized (seed {seed})"),
            };
            let _ = writeln!(w, "backend: {mode}");
        }
        if let Some(x) = &self.specialization_point {
            let _ = writeln!(w, "specialized at q = {x}; dimensions are screening results");
        }
        if let Some(c) = &self.braid_equation {
            let _ = writeln!(
                w,
                "braiding: {} (invertible {}, braid equation {})",
                c.verdict, c.invertible, c.braid_equation
            );
            if let Some(v) = &c.violation {
                let _ = writeln!(w, "  first violation: {v}");
            }
        }
        if let Some(h) = &self.hecke {
            render_hecke(w, h);
        }
        if let Some(d) = &self.diagonal {
            render_diagonal(w, d);
        }
        if let Some(g) = &self.graded {
            if self.hecke.is_none() {
                render_hecke(w, &g.hecke);
                render_diagonal(w, &g.diagonal);
            }
            let _ = writeln!(w, "nichols dims (n = 0..{}): {:?}", g.max_degree, g.nichols_dims);
            let _ = writeln!(w, "quadratic dims: {:?}", g.quadratic_dims);
            let _ = writeln!(w, "quadratic dual dims: {:?}", g.dual_dims);
            match (g.finite_dimensional_at, g.total_dimension) {
                (Some(top), Some(total)) => {
                    let _ = writeln!(w, "finite dimensional: top degree {top}, total dimension {total}");
                }
                _ => {
                    let _ = writeln!(w, "no vanishing degree up to {}", g.max_degree);
                }
            }
        }
        if let Some(c) = &self.exact_confirmation {
            let _ = writeln!(w, "exact confirmation: {} (nichols dims {:?})", c.agrees, c.nichols_dims);
        }
        if let Some(k) = &self.kernel_a2 {
            let _ = writeln!(w, "ker A_2: dim {} (Im A_2: dim {})", k.dim, k.image_dim);
            for v in &k.basis {
                let _ = writeln!(w, "  {}", render_vector(v));
            }
        }
        if let Some(q) = &self.quadratic {
            let _ = writeln!(w, "relations: dim {}", q.relations_dim);
            let _ = writeln!(w, "quadratic dims: {:?}", q.quadratic_dims);
            let _ = writeln!(w, "quadratic dual dims: {:?}", q.dual_dims);
        }
        if let Some(k) = &self.koszul {
            let _ = writeln!(w, "quadratic dims: {:?}", k.quadratic_dims);
            let _ = writeln!(w, "quadratic dual dims: {:?}", k.dual_dims);
            for d in &k.degrees {
                let _ = writeln!(w, "  degree {}: {} {}", d.degree, d.value, if d.passes { "ok" } else { "FAIL" });
            }
            let _ = writeln!(w, "koszul numerical identity: {}", k.passes);
        }
        if let Some(t) = &self.tableaux {
            let _ = writeln!(w, "shape {:?}, n = {}: {} semistandard tableaux", t.shape, t.n, t.count);
            for tab in t.tableaux.iter().flatten() {
                let _ = writeln!(w, "  {tab}");
            }
        }
        if let Some(d) = &self.det {
            let _ = writeln!(w, "quantum determinant, N = {}: {} terms", d.n, d.terms.len());
            for t in &d.terms {
                let _ = writeln!(w, "  {}  {}", t.permutation, t.coeff);
            }
        }
        if let Some(f) = &self.family {
            let _ = writeln!(w, "family {}: dim {}, {} nonzero coefficients", f.braiding, f.dim, f.nonzeros);
            if let Some(p) = &f.emitted {
                let _ = writeln!(w, "spec file written to {p}");
            }
        }
        for f in self.families.iter().flatten() {
            let _ = writeln!(w, "  {:<18} {:<32} {}", f.name, f.params, f.summary);
        }
        out
    }
}

fn render_vector(v: &SparseVector) -> String {
    let terms: Vec<String> = v.iter().map(|(t, c)| format!("({c}) {t}")).collect();
    terms.join(" + ")
}

fn render_hecke(w: &mut String, h: &HeckeFinding) {
    let _ = writeln!(w, "minimal polynomial: {}", h.minimal_polynomial);
    let _ = match &h.kind {
        HeckeKind::Hecke { lambda, root_of_unity } => {
            writeln!(w, "hecke: lambda = {lambda} (root of unity: {root_of_unity})")
        }
        HeckeKind::UpToScaling { scalar, lambda, root_of_unity } => {
            writeln!(w, "hecke after scaling by {scalar}: lambda = {lambda} (root of unity: {root_of_unity})")
        }
        HeckeKind::None => writeln!(w, "hecke: none"),
    };
}

fn render_diagonal(w: &mut String, d: &DiagonalFinding) {
    match &d.lambda {
        Some(rows) => {
            let _ = writeln!(w, "diagonal type:");
            for row in rows {
                let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(w, "  [{}]", r.join(", "));
            }
        }
        None => {
            let _ = writeln!(w, "diagonal type: no");
        }
    }
}
