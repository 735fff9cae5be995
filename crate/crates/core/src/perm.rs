//! Permutations of `[k] = {1, ..., k}` used to order toggle and winching passes.

use crate::error::{Error, Result};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of `{1, ..., k}`, stored as the image list `(nu(1), ..., nu(k))`.
///
/// Passes apply index `nu(1)` first and `nu(k)` last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    /// Validates that `img` is a bijection on `{1, ..., img.len()}`.
    pub fn new(img: Vec<usize>) -> Result<Self> {
        let k = img.len();
        let mut seen = vec![false; k + 1];
        for &v in &img {
            if v == 0 || v > k || seen[v] {
                return Err(Error::InvalidPermutation {
                    expected: format!("[{k}]"),
                    got: img.iter().map(|&x| x as i64).collect(),
                });
            }
            seen[v] = true;
        }
        Ok(Perm { img })
    }

    pub fn identity(k: usize) -> Self {
        Perm {
            img: (1..=k).collect(),
        }
    }

    /// The reversal `(k, k-1, ..., 1)`.
    pub fn reversed(k: usize) -> Self {
        Perm {
            img: (1..=k).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    /// `nu(t)` for 1-based `t`.
    pub fn apply(&self, t: usize) -> usize {
        self.img[t - 1]
    }

    /// Application order of the pass: `nu(1), nu(2), ...`.
    pub fn order(&self) -> &[usize] {
        &self.img
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.img.len()];
        for (t, &i) in self.img.iter().enumerate() {
            inv[i - 1] = t + 1;
        }
        Perm { img: inv }
    }

    /// Position (1-based) at which index `i` is applied; inverse of `apply`.
    pub fn position_of(&self, i: usize) -> usize {
        self.img.iter().position(|&v| v == i).expect("index in range") + 1
    }

    /// The reindexed permutation `t -> k+1 - nu(t)`.
    ///
    /// Column `j` of an ideal pairs with sequence index `k+1-j` under the
    /// column-profile bijections, so a comotion pass with `nu` corresponds to
    /// a winching pass with this permutation.
    pub fn complemented(&self) -> Self {
        let k = self.img.len();
        Perm {
            img: self.img.iter().map(|&v| k + 1 - v).collect(),
        }
    }

    /// All `k!` permutations of `[k]`, in lexicographic order.
    pub fn all(k: usize) -> Vec<Perm> {
        (1..=k)
            .permutations(k)
            .map(|img| Perm { img })
            .collect()
    }

    pub fn random<R: Rng>(k: usize, rng: &mut R) -> Perm {
        let mut img: Vec<usize> = (1..=k).collect();
        img.shuffle(rng);
        Perm { img }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.img.iter().join(","))
    }
}
