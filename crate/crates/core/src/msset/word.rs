use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A degeneracy word `s_{i₁}⋯s_{i_p}` in normal form `i₁ > ⋯ > i_p`.
///
/// The indices are exactly the positions `j` at which the associated
/// surjection `η : [n] -> [n-p]` repeats, `η(j) = η(j+1)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegeneracyWord(Vec<usize>);

impl DegeneracyWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    /// Validates a strictly decreasing index sequence acting on a simplex of
    /// dimension `base`.
    pub fn new(indices: Vec<usize>, base: usize) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::invalid("degeneracy indices must be strictly decreasing"));
        }
        // s_{i_p} acts first on dimension `base`, so i_p ≤ base, then i_{p-1} ≤ base+1, …
        let p = indices.len();
        for (r, &i) in indices.iter().enumerate() {
            if i > base + (p - 1 - r) {
                return Err(Error::invalid("degeneracy index out of range"));
            }
        }
        Ok(Self(indices))
    }

    /// Normal form of an arbitrary set of repeat positions.
    pub fn from_positions(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable_by(|a, b| b.cmp(a));
        positions.dedup();
        Self(positions)
    }

    /// The word of a surjective monotone map given as its value list.
    pub fn from_surjection(eta: &[usize]) -> Self {
        let mut v: Vec<usize> = (0..eta.len().saturating_sub(1))
            .filter(|&j| eta[j] == eta[j + 1])
            .collect();
        v.reverse();
        Self(v)
    }

    /// Indices in normal-form order.
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.contains(&j)
    }

    /// The surjection `η : [n] -> [n - len]` as a value list of length `n+1`.
    pub fn surjection(&self, n: usize) -> Vec<usize> {
        let mut eta = vec![0; n + 1];
        for j in 0..n {
            eta[j + 1] = eta[j] + usize::from(!self.contains(j));
        }
        eta
    }

    /// The word of `s_self ∘ s_inner`, i.e. `inner` applied first. `n` is the
    /// dimension of the result.
    pub fn after(&self, inner: &DegeneracyWord, n: usize) -> DegeneracyWord {
        let outer = self.surjection(n);
        let inner_eta = inner.surjection(n - self.len());
        let eta: Vec<usize> = outer.iter().map(|&v| inner_eta[v]).collect();
        Self::from_surjection(&eta)
    }
}

impl fmt::Display for DegeneracyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// The coface `δⁱ : [n-1] -> [n]` skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|j| if j < i { j } else { j + 1 }).collect()
}

/// The codegeneracy `σʲ : [n+1] -> [n]` hitting `j` twice.
pub fn codegeneracy(n: usize, j: usize) -> Vec<usize> {
    (0..=n + 1).map(|i| if i <= j { i } else { i - 1 }).collect()
}

pub fn is_monotone(alpha: &[usize], n: usize) -> bool {
    alpha.windows(2).all(|w| w[0] <= w[1]) && alpha.iter().all(|&v| v <= n)
}

/// Splits a monotone map into a surjection followed by an injection,
/// returned as `(surjection, image)`.
pub fn epi_mono(alpha: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = alpha.to_vec();
    image.dedup();
    let mut surj = Vec::with_capacity(alpha.len());
    let mut k = 0;
    for (i, &v) in alpha.iter().enumerate() {
        if i > 0 && v != alpha[i - 1] {
            k += 1;
        }
        surj.push(k);
    }
    (surj, image)
}

/// All `r`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    go(0, n, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjection_round_trip() {
        let w = DegeneracyWord::new(vec![3, 1], 2).unwrap();
        assert_eq!(w.surjection(4), vec![0, 1, 1, 2, 2]);
        assert_eq!(DegeneracyWord::from_surjection(&w.surjection(4)), w);
        assert!(DegeneracyWord::new(vec![1, 3], 2).is_err());
        assert!(DegeneracyWord::new(vec![4], 2).is_err());
    }

    #[test]
    fn composition_of_words() {
        // s1 s0 on a vertex is the constant 2-simplex
        let s0 = DegeneracyWord::new(vec![0], 0).unwrap();
        let s1 = DegeneracyWord::new(vec![1], 1).unwrap();
        assert_eq!(s1.after(&s0, 2).indices(), &[1, 0]);
        // s0 s0 = s1 s0
        let s0b = DegeneracyWord::new(vec![0], 1).unwrap();
        assert_eq!(s0b.after(&s0, 2).indices(), &[1, 0]);
    }

    #[test]
    fn epi_mono_factorization() {
        let (e, m) = epi_mono(&[0, 0, 2, 3, 3]);
        assert_eq!(e, vec![0, 0, 1, 2, 2]);
        assert_eq!(m, vec![0, 2, 3]);
        let back: Vec<usize> = e.iter().map(|&i| m[i]).collect();
        assert_eq!(back, vec![0, 0, 2, 3, 3]);
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
