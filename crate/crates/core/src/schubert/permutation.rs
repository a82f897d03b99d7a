use std::fmt;

use itertools::Itertools;

/// A permutation of `{1..N}` in one-line notation: `images[k - 1] = w(k)`.
///
/// Products are functions composed right to left, so `(u * v)(k) = u(v(k))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (1..=size).collect(),
        }
    }

    /// Builds from one-line notation; `None` unless it is a bijection of `{1..N}`.
    pub fn from_one_line(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x == 0 || x > images.len() || std::mem::replace(&mut seen[x - 1], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_size`.
    pub fn simple_reflection(i: usize, size: usize) -> Self {
        assert!(i >= 1 && i < size, "s_{i} is not a simple reflection of S_{size}");
        let mut w = Self::identity(size);
        w.images.swap(i - 1, i);
        w
    }

    /// `s_{i_1} s_{i_2} ⋯ s_{i_k}`, the rightmost factor applied first.
    pub fn from_word(word: &[usize], size: usize) -> Self {
        let mut w = Self::identity(size);
        for &i in word {
            w.right_multiply_simple(i);
        }
        w
    }

    /// `self ← self · s_i`.
    pub fn right_multiply_simple(&mut self, i: usize) {
        assert!(i >= 1 && i < self.size(), "s_{i} out of range");
        self.images.swap(i - 1, i);
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Number of pairs `k < l` with `w(k) > w(l)`; the Coxeter length.
    pub fn inversions(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .map(|(k, &x)| self.images[k + 1..].iter().filter(|&&y| y < x).count())
            .sum()
    }

    /// `w({1..k})`, sorted.
    pub fn image_of_prefix(&self, k: usize) -> Vec<usize> {
        let mut s = self.images[..k].to_vec();
        s.sort_unstable();
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}
