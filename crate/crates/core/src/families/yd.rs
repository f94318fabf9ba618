//! Yetter-Drinfeld modules over finite groups: a `G`-graded vector space with a
//! right `G`-action satisfying `deg(v ◁ g) = g⁻¹ deg(v) g`.

use std::fmt;

use serde::Serialize;

use crate::braidcore::{Braiding, Permutation};
use crate::error::{Error, Result};
use crate::linalg::FieldMatrix;
use crate::qfield::QRational;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupData {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let m = table.len();
        if m == 0 || names.len() != m || table.iter().any(|row| row.len() != m || row.iter().any(|&x| x >= m)) {
            return Err(Error::MalformedGroup("table must be a square array of element indices".into()));
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::MalformedGroup(format!(
                            "({0}{1}){2} != {0}({1}{2})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::MalformedGroup("no identity element".into()))?;
        let inverses = (0..m)
            .map(|a| {
                (0..m)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::MalformedGroup(format!("{} has no inverse", names[a])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupData { names, table, identity, inverses })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/m` with elements `g^0, ..., g^{m-1}`.
    pub fn cyclic(m: usize) -> Self {
        assert!(m >= 1, "cyclic group of order 0");
        let names = (0..m).map(|k| format!("g^{k}")).collect();
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        Self::from_table(names, table).expect("cyclic groups are groups")
    }

    /// `S_n` with elements in lexicographic order and product `g·h = g ∘ h`.
    pub fn symmetric(n: usize) -> Self {
        let elems = Permutation::all(n);
        let names = elems.iter().map(|p| p.to_string()).collect();
        let table = elems
            .iter()
            .map(|g| elems.iter().map(|h| elems.binary_search(&g.compose(h)).expect("closed")).collect())
            .collect();
        Self::from_table(names, table).expect("symmetric groups are groups")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A `k`-dimensional graded right module; `action[g]` is the matrix of `v ↦ v ◁ g`
/// acting on coordinate columns, so the action law reads `M(gh) = M(h) M(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDGroupModule {
    pub group: GroupData,
    pub degrees: Vec<usize>,
    pub action: Vec<FieldMatrix>,
}

impl YDGroupModule {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum YdViolation {
    /// `M(e) ≠ I`.
    Identity,
    /// `M(gh) ≠ M(h) M(g)`.
    Action { g: usize, h: usize },
    /// `e_v ◁ g` has a nonzero component along `e_w`, but `deg(w) ≠ g⁻¹ deg(v) g`.
    Compatibility { v: usize, g: usize, w: usize },
}

impl fmt::Display for YdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YdViolation::Identity => write!(f, "identity does not act trivially"),
            YdViolation::Action { g, h } => write!(f, "action law fails for elements {g}, {h}"),
            YdViolation::Compatibility { v, g, w } => {
                write!(f, "e{} ◁ element {g} has a component on e{} of the wrong degree", v + 1, w + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum YdVerdict {
    Valid,
    Invalid(YdViolation),
}

impl YdVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, YdVerdict::Valid)
    }
}

/// Checks the right-action laws and the conjugation compatibility, in that order.
pub fn check_yd(m: &YDGroupModule) -> Result<YdVerdict> {
    let g = &m.group;
    let k = m.dim();
    if m.action.len() != g.order() {
        return Err(Error::MalformedGroup(format!("{} action matrices for a group of order {}", m.action.len(), g.order())));
    }
    if let Some(&bad) = m.degrees.iter().find(|&&d| d >= g.order()) {
        return Err(Error::MalformedGroup(format!("degree index {bad} outside the group")));
    }
    if m.action.iter().any(|a| a.rows() != k || a.cols() != k) {
        return Err(Error::Shape(format!("action matrices must be {k}x{k}")));
    }
    if m.action[g.identity()] != FieldMatrix::identity(k) {
        return Ok(YdVerdict::Invalid(YdViolation::Identity));
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            if m.action[g.mul(a, b)] != &m.action[b] * &m.action[a] {
                return Ok(YdVerdict::Invalid(YdViolation::Action { g: a, h: b }));
            }
        }
    }
    for v in 0..k {
        for a in 0..g.order() {
            let expected = g.conjugate(m.degrees[v], a);
            if let Some(&w) = m.action[a].column(v).keys().find(|&&w| m.degrees[w] != expected) {
                return Ok(YdVerdict::Invalid(YdViolation::Compatibility { v, g: a, w }));
            }
        }
    }
    Ok(YdVerdict::Valid)
}

/// `S_n` acting on the span of its transpositions `v_t` by `v_t ◁ g = sgn(g) v_{g⁻¹tg}`,
/// graded by `deg(v_t) = t`. Basis order follows the lexicographic order of `S_n`.
pub fn transposition_module(n: usize) -> YDGroupModule {
    let group = GroupData::symmetric(n);
    let elems = Permutation::all(n);
    let odd = |k: usize| elems[k].inversions() % 2 == 1;
    let transpositions: Vec<usize> = (0..elems.len())
        .filter(|&k| elems[k].images().iter().enumerate().filter(|(i, &x)| x != i + 1).count() == 2)
        .collect();
    let action = (0..group.order())
        .map(|g| {
            let sign = QRational::from_int(if odd(g) { -1 } else { 1 });
            let entries = transpositions.iter().enumerate().map(|(col, &t)| {
                let image = group.conjugate(t, g);
                let row = transpositions.iter().position(|&u| u == image).expect("conjugate of a transposition");
                (row, col, sign.clone())
            });
            FieldMatrix::from_entries(transpositions.len(), transpositions.len(), entries).expect("in range")
        })
        .collect();
    YDGroupModule { degrees: transpositions, group, action }
}

/// `σ(e_a ⊗ e_b) = e_b ⊗ (e_a ◁ deg(e_b))`.
pub fn yd_group_braiding(m: &YDGroupModule) -> Result<Braiding> {
    if let YdVerdict::Invalid(v) = check_yd(m)? {
        return Err(Error::NotYetterDrinfeld(v.to_string()));
    }
    let k = m.dim();
    let mut entries = Vec::new();
    for a in 0..k {
        for b in 0..k {
            for (c, v) in m.action[m.degrees[b]].column(a) {
                entries.push((b * k + c, a * k + b, v.clone()));
            }
        }
    }
    Braiding::new(k, FieldMatrix::from_entries(k * k, k * k, entries)?)
}
