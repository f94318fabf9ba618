use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From the 1-based image sequence `(π(1), ..., π(n))`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x - 1).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// The adjacent transposition `t_i` swapping `i` and `i + 1` (1-based).
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("generator t_{i} in S_{n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub(crate) fn images0(&self) -> &[usize] {
        &self.images
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Lehmer code: `c_i = #{j > i : π(j) < π(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.images[j] < self.images[i]).count()).collect()
    }

    /// Number of inversions `ℓ(π)`.
    pub fn inversions(&self) -> usize {
        self.lehmer_code().iter().sum()
    }

    /// All of `S_n` in lexicographic order of image sequences.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// A positive braid word `t_{i_1} t_{i_2} ... t_{i_k}` with 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BraidWord(pub Vec<usize>);

impl BraidWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Image in `S_n`: `t_{i_1} ∘ t_{i_2} ∘ ... ∘ t_{i_k}`.
    pub fn permutation(&self, n: usize) -> Result<Permutation> {
        let mut p = Permutation::identity(n);
        for &i in &self.0 {
            p = p.compose(&Permutation::simple(n, i)?);
        }
        Ok(p)
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

/// Canonical reduced word of `π`, read off its Lehmer code.
///
/// Building `π` from the identity one position at a time: the value destined
/// for position `p` sits `c_p` places to its right among the remaining values,
/// which are kept increasing, and is walked left by `t_{p+c_p-1} ... t_p`.
pub fn reduced_word(pi: &Permutation) -> BraidWord {
    let mut word = Vec::new();
    for (p, &c) in pi.lehmer_code().iter().enumerate() {
        let start = p + 1; // 1-based position
        word.extend((start..start + c).rev());
    }
    BraidWord(word)
}

/// A second reduced word, by peeling off the last right descent repeatedly.
pub fn bubble_sort_word(pi: &Permutation) -> BraidWord {
    let mut current = pi.images0().to_vec();
    let mut tail = Vec::new();
    while let Some(i) = (0..current.len().saturating_sub(1)).rev().find(|&i| current[i] > current[i + 1]) {
        // π = (π ∘ t_{i+1}) ∘ t_{i+1} with one inversion fewer on the left
        current.swap(i, i + 1);
        tail.push(i + 1);
    }
    tail.reverse();
    BraidWord(tail)
}
