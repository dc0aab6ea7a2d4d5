//! Borel–Weil–Bott for homogeneous bundles on Grassmannians.
//!
//! A bundle `𝕊_{λ_S} S ⊗ 𝕊_{λ_Q} Q` on `Gr(k, n+1)`, with `S` the tautological
//! subbundle of rank `k` and `Q` the quotient of rank `n+1-k`, has weight
//! `(λ_Q, λ_S)` for `GL_{n+1}`. Cohomology is read off from `weight + ρ`.

mod hilb2;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::error::{Error, Result};

pub use hilb2::{hilb2_p2_hkr, Hilb2P2Hkr};

/// Weight of `GL_r`, a vector of integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GLWeight(pub Vec<i64>);

impl GLWeight {
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Weight data of `𝕊_{λ_S} S ⊗ 𝕊_{λ_Q} Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleWeight {
    pub lambda_s: Vec<i64>,
    pub lambda_q: Vec<i64>,
}

impl BundleWeight {
    pub fn new(lambda_s: Vec<i64>, lambda_q: Vec<i64>) -> Self {
        BundleWeight { lambda_s, lambda_q }
    }

    /// `(λ_Q, λ_S)`.
    pub fn concatenated(&self) -> Vec<i64> {
        self.lambda_q.iter().chain(&self.lambda_s).copied().collect()
    }
}

/// Cohomology of a homogeneous bundle: zero, or one irreducible in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BwbResult {
    Zero,
    Cohomology { degree: usize, weight: GLWeight },
}

impl BwbResult {
    /// `(degree, dimension)`, or `None` when all cohomology vanishes.
    pub fn dimension(&self) -> Option<(usize, BigUint)> {
        match self {
            BwbResult::Zero => None,
            BwbResult::Cohomology { degree, weight } => Some((*degree, schur_dim(weight).unwrap())),
        }
    }
}

/// Weyl dimension formula `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn schur_dim(lambda: &GLWeight) -> Result<BigUint> {
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.to_string()));
    }
    let r = lambda.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r {
        for j in i + 1..r {
            num *= BigInt::from(lambda.0[i] - lambda.0[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let q = num / den;
    Ok(q.abs().to_biguint().unwrap())
}

/// Cohomology of `𝕊_{λ_S} S ⊗ 𝕊_{λ_Q} Q` on `Gr(k, n+1)`, `k = len λ_S`.
pub fn bwb_cohomology(w: &BundleWeight, n: usize) -> Result<BwbResult> {
    if w.lambda_s.len() + w.lambda_q.len() != n + 1 || w.lambda_s.is_empty() {
        return Err(Error::InvalidWeight(format!(
            "lengths {} + {} do not give a Grassmannian of subspaces in dimension {}",
            w.lambda_s.len(),
            w.lambda_q.len(),
            n + 1
        )));
    }
    let s = GLWeight(w.lambda_s.clone());
    let q = GLWeight(w.lambda_q.clone());
    if !s.is_dominant() || !q.is_dominant() {
        return Err(Error::NonDominant(format!("{s} ; {q}")));
    }
    let shifted: Vec<i64> = w.concatenated().iter().enumerate().map(|(i, c)| c + (n - i) as i64).collect();
    let mut inversions = 0;
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            if shifted[i] == shifted[j] {
                return Ok(BwbResult::Zero);
            }
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let weight = sorted.iter().enumerate().map(|(i, c)| c - (n - i) as i64).collect();
    Ok(BwbResult::Cohomology { degree: inversions, weight: GLWeight(weight) })
}

/// `h^q(P^n, Ω^p(j))` for every `q` with nonzero cohomology.
pub fn bott(p: usize, j: i64, n: usize) -> Result<BTreeMap<usize, BigUint>> {
    if p > n {
        return Ok(BTreeMap::new());
    }
    let mut lambda_q = vec![0; n];
    for c in lambda_q.iter_mut().skip(n - p) {
        *c = -1;
    }
    let w = BundleWeight::new(vec![p as i64 - j], lambda_q);
    let mut out = BTreeMap::new();
    if let Some((q, d)) = bwb_cohomology(&w, n)?.dimension() {
        out.insert(q, d);
    }
    Ok(out)
}
