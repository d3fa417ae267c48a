//! Root systems of types A, B, C, D, E6 and E7, stored as integer
//! coefficient vectors over a base of simple roots.
//!
//! Simple roots are numbered from 1 in the public API. For E6 and E7 the
//! numbering is Bourbaki's: `α2` is the vertex attached to the branch node
//! `α4`, and the long arm is `α1 - α3 - α4 - α5 - α6 (- α7)`. With this
//! numbering `E6 \ {α2}` is the chain `A5` and `E7 \ {α2}` is `A6`.
//!
//! Types F4, G2 and E8 are not built: none of them has a Hermitian
//! symmetric quotient.
//!
//! # Conventions
//!
//! `cartan_matrix[i][j] = <α_i, α_j^∨> = 2(α_i, α_j) / (α_j, α_j)`.
//! Inner products use the Gram matrix of the simple roots with the short
//! roots of B normalized to length 1 and the long roots of C to length 4,
//! so every `(α, α)` is an integer.
//!
//! The coroot of a root `α = Σ c_j α_j` is `α^∨ = Σ c_j (α_j, α_j)/(α, α) α_j^∨`,
//! i.e. coroots are roots of the dual system whose Cartan matrix is the
//! transpose. For simply-laced types this reduces to `α^∨ = Σ c_j α_j^∨`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::rep_theory::DominantWeight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::D => "D",
            TypeLabel::E6 => "E6",
            TypeLabel::E7 => "E7",
        };
        f.write_str(s)
    }
}

/// `A5`, `D4`, `E6`: the rank is implied for exceptional types.
pub fn system_name(label: TypeLabel, rank: usize) -> String {
    match label {
        TypeLabel::E6 | TypeLabel::E7 => label.to_string(),
        _ => format!("{label}{rank}"),
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "C" => Ok(TypeLabel::C),
            "D" => Ok(TypeLabel::D),
            "E6" => Ok(TypeLabel::E6),
            "E7" => Ok(TypeLabel::E7),
            other => param(format!("unknown root system type {other:?}")),
        }
    }
}

/// A root as its coefficients `n_i(α)` over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// The simple root `α_i`, numbered from 1.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i - 1] = 1;
        Root { coeffs }
    }

    /// `α_i + α_{i+1} + ... + α_j` (1-based, inclusive).
    pub fn interval(rank: usize, i: usize, j: usize) -> Self {
        let mut coeffs = vec![0; rank];
        for c in &mut coeffs[i - 1..j] {
            *c = 1;
        }
        Root { coeffs }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `n_r(α)` for 1-based `r`.
    pub fn coefficient(&self, r: usize) -> i64 {
        self.coeffs[r - 1]
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    #[serde(rename = "type")]
    type_label: TypeLabel,
    rank: usize,
    cartan_matrix: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    #[serde(skip)]
    gram: Vec<Vec<i64>>,
}

fn dynkin_edges(label: TypeLabel, rank: usize) -> Vec<(usize, usize)> {
    match label {
        TypeLabel::A | TypeLabel::B | TypeLabel::C => (0..rank - 1).map(|i| (i, i + 1)).collect(),
        TypeLabel::D => {
            let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 1));
            e
        }
        TypeLabel::E6 | TypeLabel::E7 => {
            // Bourbaki, 1-based: 1-3, 3-4, 4-5, 5-6, (6-7), 2-4
            let mut e = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            if label == TypeLabel::E7 {
                e.push((5, 6));
            }
            e
        }
    }
}

fn gram_matrix(label: TypeLabel, rank: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; rank]; rank];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in dynkin_edges(label, rank) {
        g[i][j] = -1;
        g[j][i] = -1;
    }
    let last = rank - 1;
    match label {
        TypeLabel::B => g[last][last] = 1,
        TypeLabel::C => {
            g[last][last] = 4;
            g[last - 1][last] = -2;
            g[last][last - 1] = -2;
        }
        _ => {}
    }
    g
}

/// Number of positive roots for a supported `(type, rank)`.
pub fn classical_positive_count(label: TypeLabel, rank: usize) -> usize {
    match label {
        TypeLabel::A => rank * (rank + 1) / 2,
        TypeLabel::B | TypeLabel::C => rank * rank,
        TypeLabel::D => rank * (rank - 1),
        TypeLabel::E6 => 36,
        TypeLabel::E7 => 63,
    }
}

pub(crate) fn validate_type_rank(label: TypeLabel, rank: usize) -> Result<()> {
    let ok = match label {
        TypeLabel::A => rank >= 1,
        TypeLabel::B | TypeLabel::C => rank >= 2,
        TypeLabel::D => rank >= 3,
        TypeLabel::E6 => rank == 6,
        TypeLabel::E7 => rank == 7,
    };
    if ok {
        Ok(())
    } else {
        param(format!("unsupported root system {label} of rank {rank}"))
    }
}

/// Builds the positive roots by breadth-first reflection closure of the
/// simple roots.
pub fn build_root_system(label: TypeLabel, rank: usize) -> Result<RootSystem> {
    validate_type_rank(label, rank)?;
    let gram = gram_matrix(label, rank);
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
        .collect();

    let simple: Vec<Root> = (1..=rank).map(|i| Root::simple(rank, i)).collect();
    let positive_roots = reflection_closure(&cartan, &simple);

    let rs = RootSystem {
        type_label: label,
        rank,
        cartan_matrix: cartan,
        positive_roots,
        gram,
    };
    let expected = classical_positive_count(label, rank);
    if rs.positive_roots.len() != expected {
        return Err(Error::Consistency(format!(
            "{}: closure produced {} positive roots, expected {expected}",
            system_name(label, rank),
            rs.positive_roots.len()
        )));
    }
    Ok(rs)
}

/// `s_i(β) = β - <β, α_i^∨> α_i` with `i` 0-based.
fn reflect(cartan: &[Vec<i64>], beta: &[i64], i: usize) -> Vec<i64> {
    let pairing: i64 = beta.iter().zip(cartan).map(|(c, row)| c * row[i]).sum();
    let mut out = beta.to_vec();
    out[i] -= pairing;
    out
}

/// Closes `seeds` under simple reflections, keeping only positive roots.
/// Output is sorted by height, then lexicographically.
fn reflection_closure(cartan: &[Vec<i64>], seeds: &[Root]) -> Vec<Root> {
    let rank = cartan.len();
    let mut seen: HashSet<Vec<i64>> = seeds.iter().map(|r| r.coeffs.clone()).collect();
    let mut queue: VecDeque<Vec<i64>> = seeds.iter().map(|r| r.coeffs.clone()).collect();
    while let Some(beta) = queue.pop_front() {
        for i in 0..rank {
            let image = reflect(cartan, &beta, i);
            let positive = image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0);
            if positive && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().map(Root::new).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    roots
}

impl RootSystem {
    pub fn type_label(&self) -> TypeLabel {
        self.type_label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (1..=self.rank).map(|i| Root::simple(self.rank, i)).collect()
    }

    /// Complex dimension of the simple Lie algebra: `rank + 2|Φ⁺|`.
    pub fn algebra_dimension(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    pub fn is_simply_laced(&self) -> bool {
        !matches!(self.type_label, TypeLabel::B | TypeLabel::C)
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.positive_roots.binary_search_by(|r| {
            r.height().cmp(&root.height()).then_with(|| r.coeffs.cmp(&root.coeffs))
        })
        .is_ok()
    }

    /// `(α, β)` under the integer-normalized Gram matrix.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let mut s = 0;
        for (i, ai) in a.coeffs.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                s += ai * self.gram[i][j] * bj;
            }
        }
        s
    }

    /// Coefficients of `α^∨` over the simple coroots.
    pub fn coroot_coefficients(&self, root: &Root) -> Result<Vec<i64>> {
        self.check_len(root.coeffs.len(), "root")?;
        let norm = self.inner(root, root);
        if norm <= 0 {
            return param("zero vector has no coroot");
        }
        root.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let num = c * self.gram[j][j];
                if num % norm != 0 {
                    Err(Error::Consistency(format!(
                        "coroot of {:?} is not integral in the simple coroots",
                        root.coeffs
                    )))
                } else {
                    Ok(num / norm)
                }
            })
            .collect()
    }

    /// Every simple reflection of every positive root other than the
    /// reflecting simple root is again in the list.
    pub fn is_reflection_closed(&self) -> bool {
        let set: HashSet<&Vec<i64>> = self.positive_roots.iter().map(|r| &r.coeffs).collect();
        self.positive_roots.iter().all(|beta| {
            (0..self.rank).all(|i| {
                if beta.coeffs == Root::simple(self.rank, i + 1).coeffs {
                    return true;
                }
                set.contains(&reflect(&self.cartan_matrix, &beta.coeffs, i))
            })
        })
    }

    /// Re-runs the closure seeded with the whole positive system.
    pub fn reclose(&self) -> Vec<Root> {
        reflection_closure(&self.cartan_matrix, &self.positive_roots)
    }

    fn check_len(&self, len: usize, what: &str) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            param(format!("{what} has length {len}, root system has rank {}", self.rank))
        }
    }

    fn check_index(&self, r: usize) -> Result<()> {
        if (1..=self.rank).contains(&r) {
            Ok(())
        } else {
            param(format!("simple root index {r} outside 1..={}", self.rank))
        }
    }
}

/// `<λ, α^∨>` or `<λ + δ, α^∨>` for a dominant weight `λ = Σ m_i λ_i` and a
/// positive root `α`. Uses `<λ_i, α_j^∨> = δ_ij` and the coroot convention
/// in the module docs.
pub fn coroot_pairing(
    rs: &RootSystem,
    weight: &DominantWeight,
    root: &Root,
    with_delta: bool,
) -> Result<i64> {
    rs.check_len(weight.coeffs().len(), "weight")?;
    rs.check_len(root.coeffs.len(), "root")?;
    if !rs.contains(root) {
        return param(format!("{:?} is not a positive root of {}", root.coeffs, system_name(rs.type_label, rs.rank)));
    }
    let coroot = rs.coroot_coefficients(root)?;
    let shift = i64::from(with_delta);
    Ok(coroot
        .iter()
        .zip(weight.coeffs())
        .map(|(c, &m)| c * (i64::from(m) + shift))
        .sum())
}

/// Marked-root decomposition of the positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicSplit {
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub rank: usize,
    pub marked: usize,
    /// Positive roots with `n_r(α) = 0`; the full Levi root set is these
    /// together with their negatives.
    pub phi_1: Vec<Root>,
    /// Positive roots with `n_r(α) > 0`.
    pub phi_n_plus: Vec<Root>,
    /// `|phi_n_plus|`, the complex dimension of `G/P`.
    pub dimension: usize,
}

pub fn parabolic_split(rs: &RootSystem, marked: usize) -> Result<ParabolicSplit> {
    rs.check_index(marked)?;
    let (phi_n_plus, phi_1): (Vec<Root>, Vec<Root>) = rs
        .positive_roots
        .iter()
        .cloned()
        .partition(|r| r.coefficient(marked) > 0);
    Ok(ParabolicSplit {
        type_label: rs.type_label,
        rank: rs.rank,
        marked,
        dimension: phi_n_plus.len(),
        phi_1,
        phi_n_plus,
    })
}

/// One connected component of a Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DynkinComponent {
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub rank: usize,
    /// 1-based vertex labels from the parent diagram.
    pub vertices: Vec<usize>,
}

/// Removes the given vertices (1-based) and classifies each connected
/// component of what remains. `B2` and `C2` coincide; such a component is
/// reported as `B2`.
pub fn delete_vertices(rs: &RootSystem, removed: &BTreeSet<usize>) -> Result<Vec<DynkinComponent>> {
    for &r in removed {
        rs.check_index(r)?;
    }
    let kept: Vec<usize> = (0..rs.rank).filter(|i| !removed.contains(&(i + 1))).collect();
    let a = &rs.cartan_matrix;
    let mut visited = vec![false; rs.rank];
    let mut out = Vec::new();
    for &start in &kept {
        if visited[start] {
            continue;
        }
        let mut comp = vec![start];
        visited[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for &w in &kept {
                if !visited[w] && a[v][w] != 0 {
                    visited[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let (type_label, rank) = classify_component(a, &rs.gram, &comp)?;
        out.push(DynkinComponent {
            type_label,
            rank,
            vertices: comp.iter().map(|v| v + 1).collect(),
        });
    }
    Ok(out)
}

fn classify_component(a: &[Vec<i64>], gram: &[Vec<i64>], comp: &[usize]) -> Result<(TypeLabel, usize)> {
    let n = comp.len();
    let neighbours = |v: usize| comp.iter().copied().filter(move |&w| w != v && a[v][w] != 0);
    let degree = |v: usize| neighbours(v).count();

    let double = comp.iter().flat_map(|&v| neighbours(v).map(move |w| (v, w))).find(|&(v, w)| a[v][w] * a[w][v] == 2);
    if let Some((u, v)) = double {
        if n == 2 {
            return Ok((TypeLabel::B, 2));
        }
        let terminal = if degree(u) == 1 { u } else { v };
        let other = if terminal == u { v } else { u };
        let label = if gram[terminal][terminal] < gram[other][other] {
            TypeLabel::B
        } else {
            TypeLabel::C
        };
        return Ok((label, n));
    }

    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => Ok((TypeLabel::A, n)),
        [centre] if degree(*centre) == 3 => {
            let mut arms: Vec<usize> = neighbours(*centre)
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*centre, start, 1);
                    loop {
                        let next: Vec<usize> = neighbours(cur).filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok((TypeLabel::D, n)),
                [1, 2, 2] => Ok((TypeLabel::E6, 6)),
                [1, 2, 3] => Ok((TypeLabel::E7, 7)),
                _ => Err(Error::Unsupported(format!("Dynkin component with arms {arms:?}"))),
            }
        }
        _ => Err(Error::Unsupported("Dynkin component with several branch nodes".into())),
    }
}
