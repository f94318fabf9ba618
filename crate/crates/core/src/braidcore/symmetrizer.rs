//! Matsumoto section and quantum symmetrizers `A_n = Σ_{π ∈ S_n} T_π`.

use super::perm::{reduced_word, BraidWord, Permutation};
use super::Braiding;
use crate::error::{Error, Result};
use crate::linalg::FieldMatrix;

fn lifts(sigma: &Braiding, n: usize) -> Result<Vec<FieldMatrix>> {
    (1..n).map(|i| sigma.lift(n, i)).collect()
}

fn word_product(lifts: &[FieldMatrix], total: usize, word: &BraidWord) -> Result<FieldMatrix> {
    let mut acc = FieldMatrix::identity(total);
    for &i in word.letters() {
        let l = lifts
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::OutOfRange(format!("generator {i} on {} factors", lifts.len() + 1)))?;
        acc = &acc * l;
    }
    Ok(acc)
}

/// `σ_{i_1} ⋯ σ_{i_k}` on `V^{⊗n}` for an arbitrary positive word.
pub fn matsumoto_matrix_for_word(sigma: &Braiding, n: usize, word: &BraidWord) -> Result<FieldMatrix> {
    word_product(&lifts(sigma, n)?, sigma.dim().pow(n as u32), word)
}

/// `T_π` on `V^{⊗n}` through the canonical reduced word of `π`.
pub fn matsumoto_matrix(sigma: &Braiding, n: usize, pi: &Permutation) -> Result<FieldMatrix> {
    if pi.len() != n {
        return Err(Error::InvalidArgument(format!("permutation of {} letters on {n} factors", pi.len())));
    }
    matsumoto_matrix_for_word(sigma, n, &reduced_word(pi))
}

/// `A_n` as a literal sum over `S_n`. Exponential; meant for cross-checks.
pub fn quantum_symmetrizer_direct(sigma: &Braiding, n: usize) -> Result<FieldMatrix> {
    let total = sigma.dim().pow(n as u32);
    let ls = lifts(sigma, n)?;
    let mut acc = FieldMatrix::zeros(total, total);
    for pi in Permutation::all(n) {
        acc = &acc + &word_product(&ls, total, &reduced_word(&pi))?;
    }
    Ok(acc)
}

/// `A_n` through the coset recursion `A_n = (A_{n-1} ⊗ I)(I + σ_{n-1} + σ_{n-1}σ_{n-2} + ⋯ + σ_{n-1}⋯σ_1)`.
pub fn quantum_symmetrizer(sigma: &Braiding, n: usize) -> Result<FieldMatrix> {
    let mut tower = SymmetrizerTower::new(sigma.clone());
    while tower.top_degree() < n {
        tower.grow()?;
    }
    Ok(tower.level(n).clone())
}

/// The sequence `A_0, A_1, ..., A_n`, grown one degree at a time.
#[derive(Clone, Debug)]
pub struct SymmetrizerTower {
    sigma: Braiding,
    levels: Vec<FieldMatrix>,
}

impl SymmetrizerTower {
    pub fn new(sigma: Braiding) -> Self {
        SymmetrizerTower { sigma, levels: vec![FieldMatrix::identity(1)] }
    }

    pub fn braiding(&self) -> &Braiding {
        &self.sigma
    }

    pub fn top_degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &FieldMatrix {
        &self.levels[n]
    }

    /// Computes `A_{top+1}` and returns it.
    pub fn grow(&mut self) -> Result<&FieldMatrix> {
        let n = self.levels.len();
        let d = self.sigma.dim();
        let prev = self.levels.last().expect("A_0 is always present");
        let next = if n == 1 {
            FieldMatrix::identity(d)
        } else {
            let total = d.pow(n as u32);
            let mut coset = FieldMatrix::identity(total);
            for k in 1..n {
                let l = self.sigma.lift(n, k)?;
                coset = &FieldMatrix::identity(total) + &(&l * &coset);
            }
            &prev.kron(&FieldMatrix::identity(d)) * &coset
        };
        self.levels.push(next);
        Ok(self.levels.last().unwrap())
    }
}
