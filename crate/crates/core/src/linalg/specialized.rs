//! Specialization `q -> x` at a rational point, for fast rank screening.
//!
//! The elimination here is a plain left-to-right sweep over `Q`, written
//! independently of the fraction-free code so that agreement between the two
//! backends is a meaningful check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::FieldMatrix;
use crate::error::{Error, Result};
use crate::qfield::QRational;

/// A sparse matrix over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl RationalMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.entries.iter()
    }

    /// Embeds the constants back into `Q(q)`.
    pub fn to_field(&self) -> FieldMatrix {
        FieldMatrix::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().map(|(&(r, c), v)| (r, c, QRational::from_rational(v))),
        )
        .expect("indices in range")
    }

    /// Rank over `Q` by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].insert(c, v.clone());
        }
        let mut by_col: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (r, row) in rows.iter().enumerate() {
            for c in row.keys() {
                by_col.entry(*c).or_default().push(r);
            }
        }
        let mut used = vec![false; self.rows];
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(candidates) = by_col.get(&col).cloned() else { continue };
            let Some(p) = candidates.iter().copied().find(|&r| !used[r] && rows[r].contains_key(&col)) else {
                continue;
            };
            used[p] = true;
            rank += 1;
            let pivot = rows[p].clone();
            let pv = pivot[&col].clone();
            for r in candidates {
                if used[r] {
                    continue;
                }
                let Some(a) = rows[r].get(&col).cloned() else { continue };
                let f = a / &pv;
                for (c, v) in &pivot {
                    let t = v * &f;
                    let entry = rows[r].entry(*c).or_insert_with(BigRational::zero);
                    *entry -= t;
                    if entry.is_zero() {
                        rows[r].remove(c);
                    } else if *c > col {
                        let list = by_col.entry(*c).or_default();
                        if !list.contains(&r) {
                            list.push(r);
                        }
                    }
                }
            }
        }
        rank
    }
}

/// Evaluates every entry at `q = x`.
pub fn specialize(m: &FieldMatrix, x: &BigRational) -> Result<RationalMatrix> {
    let mut entries = BTreeMap::new();
    for (r, c, v) in m.entries() {
        let value = v.eval(x).map_err(|_| Error::Pole {
            point: x.to_string(),
            denominator: format!("{} at entry ({r}, {c})", v.denom()),
        })?;
        if !value.is_zero() {
            entries.insert((r, c), value);
        }
    }
    Ok(RationalMatrix { rows: m.rows(), cols: m.cols(), entries })
}

/// Deterministic stream of rational specialization points for a seed.
///
/// Points avoid `0` and `±1`, where `q - q^-1` vanishes or `q^-1` has a pole.
#[derive(Clone, Debug)]
pub struct SpecializationPoints {
    rng: ChaCha8Rng,
}

impl SpecializationPoints {
    pub fn from_seed(seed: u64) -> Self {
        SpecializationPoints { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Iterator for SpecializationPoints {
    type Item = BigRational;

    fn next(&mut self) -> Option<BigRational> {
        loop {
            let n: i64 = self.rng.gen_range(2..=97);
            let d: i64 = self.rng.gen_range(1..=97);
            if n.gcd(&d) != 1 {
                continue;
            }
            let sign = if self.rng.gen_bool(0.25) { -1 } else { 1 };
            let x = BigRational::new(BigInt::from(sign * n), BigInt::from(d));
            if x.is_zero() || x.abs().is_one() {
                continue;
            }
            return Some(x);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> QRational {
        s.parse().unwrap()
    }

    #[test]
    fn diagonal_specialization() {
        let m = FieldMatrix::from_entries(2, 2, [(0, 0, r("q")), (1, 1, r("1/q"))]).unwrap();
        let s = specialize(&m, &BigRational::from_integer(2.into())).unwrap();
        assert_eq!(s.get(0, 0), BigRational::from_integer(2.into()));
        assert_eq!(s.get(1, 1), BigRational::new(1.into(), 2.into()));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn pole_names_the_entry() {
        let m = FieldMatrix::from_entries(2, 2, [(1, 0, r("1/(q-1)"))]).unwrap();
        match specialize(&m, &BigRational::one()) {
            Err(Error::Pole { denominator, .. }) => assert!(denominator.contains("(1, 0)")),
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn points_are_reproducible() {
        let a: Vec<_> = SpecializationPoints::from_seed(7).take(5).collect();
        let b: Vec<_> = SpecializationPoints::from_seed(7).take(5).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|x| !x.abs().is_one()));
    }

    #[test]
    fn rational_rank_dependent_rows() {
        let m = FieldMatrix::from_entries(
            3,
            3,
            [(0, 0, r("1")), (0, 1, r("2")), (1, 0, r("2")), (1, 1, r("4")), (2, 2, r("3"))],
        )
        .unwrap();
        let s = specialize(&m, &BigRational::from_integer(5.into())).unwrap();
        assert_eq!(s.rank(), 2);
    }
}
