//! Dimensions of irreducible representations via the Weyl dimension
//! formula, an independent hook-content count for type A, and the
//! bounded-dimension enumeration behind the trivial-summand bound for
//! small `SL(ℓ+1)`-modules.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::root_system::{build_root_system, coroot_pairing, system_name, RootSystem, TypeLabel};

/// `λ = Σ m_i λ_i` over the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantWeight {
    coeffs: Vec<u32>,
}

impl DominantWeight {
    pub fn new(coeffs: Vec<u32>) -> Self {
        DominantWeight { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight { coeffs: vec![0; rank] }
    }

    /// `λ_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coeffs[i - 1] = 1;
        w
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&m| m == 0)
    }

    pub fn level(&self) -> u32 {
        self.coeffs.iter().sum()
    }

    fn bumped(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.coeffs[i] += 1;
        w
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| if m == 1 { format!("λ{}", i + 1) } else { format!("{m}λ{}", i + 1) })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    /// Comma-separated nonnegative integers, e.g. `1,0,0,2`.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parameter(format!("weight entry {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(DominantWeight { coeffs })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepRecord {
    pub weight: DominantWeight,
    pub dimension: u128,
}

fn to_u128(x: &BigInt, what: &str) -> Result<u128> {
    x.to_u128().ok_or_else(|| Error::Overflow(format!("{what} does not fit in u128")))
}

/// `∏ <λ+δ, α^∨> / ∏ <δ, α^∨>` over the positive roots, as one exact quotient.
pub fn weyl_dimension(rs: &RootSystem, weight: &DominantWeight) -> Result<u128> {
    if weight.rank() != rs.rank() {
        return param(format!("weight of length {} for a rank {} system", weight.rank(), rs.rank()));
    }
    let zero = DominantWeight::zero(rs.rank());
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in rs.positive_roots() {
        num *= coroot_pairing(rs, weight, root, true)?;
        den *= coroot_pairing(rs, &zero, root, true)?;
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "Weyl quotient for {weight} in {} is not integral",
            system_name(rs.type_label(), rs.rank())
        )));
    }
    to_u128(&q, "Weyl dimension")
}

/// Row lengths of the Young diagram of `λ`: `m_i` columns of height `i`.
pub fn partition_of(weight: &DominantWeight) -> Vec<u32> {
    let c = weight.coeffs();
    (0..c.len()).map(|k| c[k..].iter().sum()).filter(|&r| r > 0).collect()
}

/// Number of semistandard tableaux of shape `partition_of(λ)` with entries
/// in `1..=ℓ+1`, computed with the hook-content product. Type A only.
pub fn tableau_dimension(label: TypeLabel, rank: usize, weight: &DominantWeight) -> Result<u128> {
    if label != TypeLabel::A {
        return Err(Error::Unsupported(format!("tableau count is defined for type A, not {label}")));
    }
    if weight.rank() != rank {
        return param(format!("weight of length {} for rank {rank}", weight.rank()));
    }
    let rows = partition_of(weight);
    let n = BigInt::from(rank + 1);
    let col_len = |c: u32| rows.iter().filter(|&&r| r > c).count() as i64;
    let mut value = BigRational::one();
    for (r, &len) in rows.iter().enumerate() {
        for c in 0..len {
            let content = BigInt::from(i64::from(c) - r as i64);
            let hook = i64::from(len - c) + col_len(c) - r as i64 - 1;
            value *= BigRational::new(&n + content, BigInt::from(hook));
        }
    }
    if !value.is_integer() {
        return Err(Error::Consistency(format!("hook-content product for {weight} is not integral")));
    }
    to_u128(&value.to_integer(), "tableau count")
}

/// All dominant weights of dimension at most `bound`, sorted by dimension
/// and then by coefficients. Search starts at the trivial weight and only
/// extends weights still within the bound: raising any `m_i` raises every
/// factor `<λ+δ, α^∨>` with `α` involving `α_i` and leaves the rest fixed,
/// so the dimension strictly increases along each extension.
pub fn enumerate_irreps_below(rs: &RootSystem, bound: u128) -> Result<Vec<IrrepRecord>> {
    let mut out = Vec::new();
    if bound == 0 {
        return Ok(out);
    }
    let start = DominantWeight::zero(rs.rank());
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 1u128)]);
    while let Some((w, dim)) = queue.pop_front() {
        for i in 0..rs.rank() {
            let next = w.bumped(i);
            if seen.insert(next.clone()) {
                let d = weyl_dimension(rs, &next)?;
                if d <= bound {
                    queue.push_back((next, d));
                }
            }
        }
        out.push(IrrepRecord { weight: w, dimension: dim });
    }
    out.sort_by(|a, b| a.dimension.cmp(&b.dimension).then_with(|| a.weight.cmp(&b.weight)));
    Ok(out)
}

/// Which hypothesis range admitted `(ℓ, d)` in [`min_trivial_summand`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gate {
    /// `ℓ ≥ 4` and `ℓ+1 < d < 2ℓ`.
    Narrow,
    /// `ℓ ≥ 5` and `ℓ+1 < d < 2(ℓ+1)`.
    Wide,
}

pub fn admitting_gate(rank: usize, dim: usize) -> Option<Gate> {
    if rank >= 4 && rank + 1 < dim && dim < 2 * rank {
        Some(Gate::Narrow)
    } else if rank >= 5 && rank + 1 < dim && dim < 2 * (rank + 1) {
        Some(Gate::Wide)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrivialSummand {
    pub rank: usize,
    pub dim: usize,
    pub gate: Gate,
    /// Dimensions of the nontrivial irreducibles of dimension at most `dim`.
    pub block_dims: Vec<usize>,
    /// Smallest trivial summand over all `dim`-dimensional modules.
    pub min_trivial: usize,
    /// `d - ℓ - 1`.
    pub bound: usize,
}

/// Minimum dimension of the trivial isotypic summand of a `d`-dimensional
/// `SL(ℓ+1)`-module, found by treating modules as multisets of irreducible
/// dimensions. Errors with `Consistency` if the minimum is below `d-ℓ-1`.
pub fn min_trivial_summand(rank: usize, dim: usize) -> Result<TrivialSummand> {
    let Some(gate) = admitting_gate(rank, dim) else {
        return param(format!("(ℓ, d) = ({rank}, {dim}) lies outside both hypothesis ranges"));
    };
    let rs = build_root_system(TypeLabel::A, rank)?;
    let mut block_dims: Vec<usize> = enumerate_irreps_below(&rs, dim as u128)?
        .into_iter()
        .filter(|r| !r.weight.is_zero())
        .map(|r| r.dimension as usize)
        .collect();
    block_dims.dedup();

    let mut reachable = vec![false; dim + 1];
    reachable[0] = true;
    for s in 1..=dim {
        reachable[s] = block_dims.iter().any(|&b| b <= s && reachable[s - b]);
    }
    let best = (0..=dim).rev().find(|&s| reachable[s]).unwrap_or(0);
    let min_trivial = dim - best;
    let bound = dim - rank - 1;
    if min_trivial < bound {
        return Err(Error::Consistency(format!(
            "(ℓ, d) = ({rank}, {dim}): a module with trivial part {min_trivial} < {bound} exists"
        )));
    }
    Ok(TrivialSummand {
        rank,
        dim,
        gate,
        block_dims,
        min_trivial,
        bound,
    })
}
