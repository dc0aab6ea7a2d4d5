//! Brute-force reference computations.
//!
//! Nothing here goes through generating functions: symmetric powers are counted
//! monomial by monomial, and invariants are averages of signed traces where
//! the sign of each fixed tensor is obtained by sorting its factors with
//! adjacent transpositions.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::geometry::CoefficientFamily;
use crate::multigraded::{direct_sum, AxisSystem, GradedDimension, MultiDegree, SuperAxes};
use crate::partitions::{partitions_of, Permutation};

pub const MAX_SYM_N: usize = 6;
pub const MAX_GENERATORS: u128 = 12;
pub const MAX_ASSIGNMENTS: u128 = 100_000;
pub const MAX_GROUP_ORDER: usize = 720;
pub const MAX_INERTIA_N: usize = 5;

/// `multiplicity` basis vectors sharing one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisBlock {
    pub label: String,
    pub degree: MultiDegree,
    pub multiplicity: u64,
}

/// A graded basis with a Koszul sign rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedBasis {
    axes: AxisSystem,
    super_axes: SuperAxes,
    super_idx: Vec<usize>,
    blocks: Vec<BasisBlock>,
}

impl SignedBasis {
    pub fn new(axes: AxisSystem, super_axes: SuperAxes, blocks: Vec<BasisBlock>) -> Result<Self> {
        for b in &blocks {
            if b.degree.arity() != axes.len() {
                return Err(Error::Arity { expected: axes.len(), found: b.degree.arity() });
            }
        }
        let super_idx = super_axes.resolve(&axes)?;
        Ok(SignedBasis { axes, super_axes, super_idx, blocks })
    }

    /// One block per degree of `v`.
    pub fn from_graded(v: &GradedDimension, super_axes: &SuperAxes) -> Result<Self> {
        let blocks = v
            .iter()
            .map(|(d, c)| {
                Ok(BasisBlock {
                    label: format!("e[{d}]"),
                    degree: d.clone(),
                    multiplicity: c.to_u64().ok_or(Error::Overflow("basis multiplicity"))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(v.axes().clone(), super_axes.clone(), blocks)
    }

    pub fn axes(&self) -> &AxisSystem {
        &self.axes
    }

    pub fn blocks(&self) -> &[BasisBlock] {
        &self.blocks
    }

    pub fn generator_count(&self) -> u128 {
        self.blocks.iter().map(|b| b.multiplicity as u128).sum()
    }
}

/// `Sym^n` by listing multisets of basis vectors, with odd vectors used at most once.
pub fn sym_bruteforce(b: &SignedBasis, n: usize) -> Result<GradedDimension> {
    if n > MAX_SYM_N {
        return Err(Error::SizeGuard { what: "symmetric power", value: n as u128, limit: MAX_SYM_N as u128 });
    }
    let count = b.generator_count();
    if count > MAX_GENERATORS {
        return Err(Error::SizeGuard { what: "generators", value: count, limit: MAX_GENERATORS });
    }
    let gens: Vec<(&MultiDegree, bool)> = b
        .blocks
        .iter()
        .flat_map(|blk| std::iter::repeat_n((&blk.degree, blk.degree.parity(&b.super_idx)), blk.multiplicity as usize))
        .collect();
    let mut out = GradedDimension::zero(b.axes.clone());
    for combo in (0..gens.len()).combinations_with_replacement(n) {
        if combo.windows(2).any(|w| w[0] == w[1] && gens[w[0]].1) {
            continue;
        }
        let mut deg = MultiDegree::zero(b.axes.len());
        for &i in &combo {
            deg = &deg + gens[i].0;
        }
        out.add_at(deg, BigUint::from(1u8))?;
    }
    Ok(out)
}

/// Sign of moving the factor at position `i` to position `g(i)`, computed by
/// bubble-sorting the factors with the Koszul rule on each adjacent swap.
pub fn koszul_sign(degrees: &[&MultiDegree], g: &Permutation, super_idx: &[usize]) -> bool {
    let mut items: Vec<(usize, &MultiDegree)> = degrees.iter().enumerate().map(|(i, d)| (g.apply(i), *d)).collect();
    let mut negative = false;
    let len = items.len();
    for pass in 0..len {
        for j in 0..len.saturating_sub(1 + pass) {
            if items[j].0 > items[j + 1].0 {
                negative ^= items[j].1.koszul_pairing(items[j + 1].1, super_idx);
                items.swap(j, j + 1);
            }
        }
    }
    negative
}

/// `dim (⊗_i factors[i])^G` per degree, as the group average of signed traces.
///
/// Each element of `group` must permute positions carrying equal bases.
pub fn invariants_by_trace(factors: &[SignedBasis], group: &[Permutation]) -> Result<GradedDimension> {
    let first = factors.first().ok_or_else(|| Error::Unsupported("empty tensor product".into()))?;
    if group.len() > MAX_GROUP_ORDER {
        return Err(Error::SizeGuard { what: "group order", value: group.len() as u128, limit: MAX_GROUP_ORDER as u128 });
    }
    for f in factors {
        if f.axes != first.axes || f.super_axes != first.super_axes {
            return Err(Error::AxisMismatch { left: first.axes.to_string(), right: f.axes.to_string() });
        }
    }
    let arity = first.axes.len();
    let mut sums: BTreeMap<MultiDegree, i128> = BTreeMap::new();
    for g in group {
        if g.len() != factors.len() {
            return Err(Error::InvalidPermutation(format!("{g} acts on {} letters, expected {}", g.len(), factors.len())));
        }
        if (0..g.len()).any(|i| factors[i] != factors[g.apply(i)]) {
            return Err(Error::InvalidPermutation(format!("{g} mixes different tensor factors")));
        }
        let cycles = g.orbits();
        let choices: Vec<usize> = cycles.iter().map(|c| factors[c[0]].blocks.len()).collect();
        let assignments: u128 = choices.iter().map(|&c| c as u128).product();
        if assignments > MAX_ASSIGNMENTS {
            return Err(Error::SizeGuard { what: "fixed assignments", value: assignments, limit: MAX_ASSIGNMENTS });
        }
        if choices.contains(&0) {
            continue;
        }
        for pick in choices.iter().map(|&c| 0..c).multi_cartesian_product() {
            let mut degrees: Vec<&MultiDegree> = vec![&first.blocks[0].degree; g.len()];
            let mut total = MultiDegree::zero(arity);
            let mut count: i128 = 1;
            for (cycle, &b) in cycles.iter().zip(&pick) {
                let block = &factors[cycle[0]].blocks[b];
                for &pos in cycle {
                    degrees[pos] = &block.degree;
                }
                total = &total + &block.degree.scaled(cycle.len() as i64);
                count = count.checked_mul(block.multiplicity as i128).ok_or(Error::Overflow("signed trace"))?;
            }
            if koszul_sign(&degrees, g, &first.super_idx) {
                count = -count;
            }
            let e = sums.entry(total).or_insert(0);
            *e = e.checked_add(count).ok_or(Error::Overflow("signed trace"))?;
        }
    }
    let order = group.len() as i128;
    let mut out = GradedDimension::zero(first.axes.clone());
    for (d, s) in sums {
        if s % order != 0 || s < 0 {
            return Err(Error::NonIntegralAverage { degree: d.to_string(), sum: s.to_string(), order: group.len() });
        }
        out.add_at(d, BigUint::from((s / order) as u128))?;
    }
    Ok(out)
}

/// The cyclic group generated by the long cycle on `n` letters.
pub fn cyclic_group(n: usize) -> Vec<Permutation> {
    let c = Permutation::long_cycle(n);
    (0..n).map(|k| c.pow(k)).collect()
}

/// `⊕_{ν ⊢ n} (⊗_{orbits o} H^{#,⋆}(X, F^{⟨|o|⟩}))^{S_ν}` by signed trace averaging
/// over the permutations of equal-length orbits.
pub fn inertia_sum_bruteforce(f: &CoefficientFamily, n: usize) -> Result<GradedDimension> {
    if n > MAX_INERTIA_N {
        return Err(Error::SizeGuard { what: "inertia n", value: n as u128, limit: MAX_INERTIA_N as u128 });
    }
    let k = SuperAxes::new(["p", "q"]);
    let mut total = GradedDimension::zero(AxisSystem::hodge());
    if n == 0 {
        return Ok(GradedDimension::unit(AxisSystem::hodge()));
    }
    'partitions: for nu in partitions_of(n) {
        let mut factors = Vec::new();
        let mut ranges = Vec::new();
        for (i, m) in nu.multiplicities() {
            let table = f.effective_table(i)?;
            if table.is_zero() {
                continue 'partitions;
            }
            let basis = SignedBasis::from_graded(&table, &k)?;
            ranges.push((factors.len(), m));
            factors.extend(std::iter::repeat_n(basis, m));
        }
        let mut group = Vec::new();
        for perms in ranges.iter().map(|&(_, m)| Permutation::all(m)).multi_cartesian_product() {
            let mut images = Vec::with_capacity(factors.len());
            for ((start, _), p) in ranges.iter().zip(&perms) {
                images.extend(p.images().iter().map(|&j| start + j));
            }
            group.push(Permutation::new(images)?);
        }
        total = direct_sum(&total, &invariants_by_trace(&factors, &group)?)?;
    }
    Ok(total)
}
