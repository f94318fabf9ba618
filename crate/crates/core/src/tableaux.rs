//! Dominant weights and semistandard Young tableaux, used to count comodule
//! dimensions of `C_q[GL_n]`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ ... ≥ 0`; trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DominantWeight(Vec<usize>);

impl DominantWeight {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(DominantWeight(parts))
    }

    pub fn empty() -> Self {
        DominantWeight(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of column `s` (0-based).
    pub fn column_len(&self, s: usize) -> usize {
        self.0.iter().take_while(|&&p| p > s).count()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filling of a Young diagram, rows top to bottom, labels from 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    shape: DominantWeight,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Checks the shape and both semistandard order conditions.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = DominantWeight::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidArgument("empty row".into()));
        }
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidArgument("filling is not semistandard".into()));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &DominantWeight {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at row `r`, column `s` (0-based).
    pub fn get(&self, r: usize, s: usize) -> Option<usize> {
        self.rows.get(r).and_then(|row| row.get(s)).copied()
    }

    /// Rows weakly increase, columns strictly increase, labels are at least 1.
    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(s, &x)| {
                x >= 1 && (s == 0 || row[s - 1] <= x) && (r == 0 || self.rows[r - 1][s] < x)
            })
        })
    }

    /// Entries in reading order (row by row, left to right).
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// All semistandard tableaux of shape `λ` with labels in `1..=n`, in
/// lexicographic order of reading words.
pub fn enumerate_sstab(shape: &DominantWeight, n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.rows() > n {
        return out;
    }
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    fill(shape, n, 0, &mut rows, &mut out);
    out
}

fn fill(shape: &DominantWeight, n: usize, r: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if r == shape.rows() {
        out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    let s = rows[r].len();
    if s == shape.parts()[r] {
        fill(shape, n, r + 1, rows, out);
        return;
    }
    let left = if s > 0 { rows[r][s - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][s] + 1 } else { 1 };
    // the column below still needs room for strictly larger labels
    let room = shape.column_len(s) - r - 1;
    for x in left.max(above)..=n.saturating_sub(room) {
        rows[r].push(x);
        fill(shape, n, r, rows, out);
        rows[r].pop();
    }
}

/// `|SSTab_n(λ)|`, the dimension of the corresponding irreducible comodule.
pub fn comodule_dim(shape: &DominantWeight, n: usize) -> usize {
    enumerate_sstab(shape, n).len()
}

/// Content vector: how often each label `1..=n` occurs.
pub fn tableau_weight(t: &Tableau, n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for x in t.reading_word() {
        if (1..=n).contains(&x) {
            w[x - 1] += 1;
        }
    }
    w
}
