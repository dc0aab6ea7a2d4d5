//! Cycle types of symmetric groups and explicit permutations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition `ν ⊢ n`, stored as multiplicities `λ_i` (number of parts equal to `i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    n: usize,
    multiplicities: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let mut multiplicities = BTreeMap::new();
        for &p in parts {
            if p == 0 {
                return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
            }
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        Ok(CycleType { n: parts.iter().sum(), multiplicities })
    }

    pub fn from_multiplicities(n: usize, multiplicities: &BTreeMap<usize, usize>) -> Result<Self> {
        let total: usize = multiplicities.iter().map(|(i, m)| i * m).sum();
        if multiplicities.contains_key(&0) || total != n {
            return Err(Error::InvalidPartition(format!("Σ i·λ_i = {total} for n = {n}")));
        }
        let multiplicities = multiplicities.iter().filter(|(_, &m)| m > 0).map(|(&i, &m)| (i, m)).collect();
        Ok(CycleType { n, multiplicities })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `λ_i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.multiplicities.get(&i).copied().unwrap_or(0)
    }

    /// Pairs `(i, λ_i)` with `λ_i > 0`, increasing in `i`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities.iter().map(|(&i, &m)| (i, m))
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts: Vec<usize> =
            self.multiplicities.iter().rev().flat_map(|(&i, &m)| std::iter::repeat_n(i, m)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn num_parts(&self) -> usize {
        self.multiplicities.values().sum()
    }

    /// `z_ν = ∏ i^{λ_i} λ_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (&i, &m) in &self.multiplicities {
            z *= BigUint::from(i).pow(m as u32);
            z *= factorial(m);
        }
        z
    }

    /// `n! / z_ν`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n) / self.centralizer_order()
    }

    /// `Σ (i-1) λ_i`.
    pub fn age(&self) -> usize {
        self.multiplicities.iter().map(|(i, m)| (i - 1) * m).sum()
    }

    pub fn all_parts_odd(&self) -> bool {
        self.multiplicities.keys().all(|i| i % 2 == 1)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<CycleType> {
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if remaining == 0 {
            out.push(CycleType::from_parts(current).unwrap());
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A permutation of `{0, …, n-1}` given by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// The cycle `0 → 1 → … → n-1 → 0`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Permutation::identity(self.len()), |acc, _| self.compose(&acc))
    }

    /// Orbits of `⟨self⟩`, each starting at its smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                orbit.push(i);
                i = self.images[i];
            }
            out.push(orbit);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let lengths: Vec<usize> = self.orbits().iter().map(Vec::len).collect();
        CycleType::from_parts(&lengths).unwrap()
    }

    /// Every permutation of `n` letters.
    pub fn all(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (0..n).permutations(n).map(|images| Permutation { images }).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .orbits()
            .into_iter()
            .filter(|o| o.len() > 1)
            .map(|o| format!("({})", o.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        if cycles.is_empty() {
            f.write_str("()")
        } else {
            f.write_str(&cycles.concat())
        }
    }
}

/// Cycle type and orbits of `g` acting on `{0, …, n-1}`.
pub fn orbit_decomposition(g: &Permutation) -> (CycleType, Vec<Vec<usize>>) {
    (g.cycle_type(), g.orbits())
}
