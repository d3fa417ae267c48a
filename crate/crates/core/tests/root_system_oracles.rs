use std::collections::BTreeSet;

use itertools::Itertools;
use projrank::root_system::{build_root_system, delete_vertices, parabolic_split, RootSystem, TypeLabel};
use proptest::prelude::*;

/// Connected components of the Dynkin graph on `keep` (0-based).
fn components(cartan: &[Vec<i64>], keep: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in keep {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for &w in keep {
                if cartan[v][w] != 0 && v != w && seen.insert(w) {
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Types whose Cartan matrix equals the component's up to relabelling.
fn matching_types(cartan: &[Vec<i64>], comp: &[usize]) -> Vec<(TypeLabel, usize)> {
    let k = comp.len();
    let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| cartan[i][j]).collect()).collect();
    let mut out = Vec::new();
    for label in [TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D, TypeLabel::E6, TypeLabel::E7] {
        let Ok(rs) = build_root_system(label, k) else { continue };
        let target = rs.cartan_matrix();
        let found = (0..k).permutations(k).any(|p| (0..k).all(|i| (0..k).all(|j| sub[p[i]][p[j]] == target[i][j])));
        if found {
            out.push((label, k));
        }
    }
    out
}

fn check_all_deletions(rs: &RootSystem) {
    let n = rs.rank();
    for mask in 0u32..(1 << n) {
        let removed: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let keep: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let got = delete_vertices(rs, &removed).unwrap();
        let comps = components(rs.cartan_matrix(), &keep);
        assert_eq!(got.len(), comps.len(), "mask {mask:b}");
        for c in &got {
            let verts: Vec<usize> = c.vertices.iter().map(|v| v - 1).collect();
            assert!(comps.contains(&verts), "mask {mask:b}: {c:?}");
            let candidates = matching_types(rs.cartan_matrix(), &verts);
            assert!(candidates.contains(&(c.type_label, c.rank)), "mask {mask:b}: {c:?} vs {candidates:?}");
        }
    }
}

#[test]
fn exceptional_deletions_match_permutation_oracle() {
    check_all_deletions(&build_root_system(TypeLabel::E6, 6).unwrap());
    check_all_deletions(&build_root_system(TypeLabel::E7, 7).unwrap());
}

#[test]
fn classical_deletions_match_permutation_oracle() {
    for (label, rank) in [(TypeLabel::B, 5), (TypeLabel::C, 5), (TypeLabel::D, 6), (TypeLabel::A, 6)] {
        check_all_deletions(&build_root_system(label, rank).unwrap());
    }
}

fn any_system() -> impl Strategy<Value = (TypeLabel, usize)> {
    prop_oneof![
        (1usize..=7).prop_map(|r| (TypeLabel::A, r)),
        (2usize..=6).prop_map(|r| (TypeLabel::B, r)),
        (2usize..=6).prop_map(|r| (TypeLabel::C, r)),
        (3usize..=6).prop_map(|r| (TypeLabel::D, r)),
        Just((TypeLabel::E6, 6)),
        Just((TypeLabel::E7, 7)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn positive_roots_are_reflection_closed((label, rank) in any_system()) {
        let rs = build_root_system(label, rank).unwrap();
        prop_assert!(rs.is_reflection_closed());
        prop_assert!(rs.positive_roots().iter().all(|r| r.is_positive()));
        prop_assert_eq!(rs.algebra_dimension(), 2 * rs.positive_roots().len() + rank);
    }

    #[test]
    fn parabolic_split_partitions_roots((label, rank) in any_system(), pick in 0usize..7) {
        let rs = build_root_system(label, rank).unwrap();
        let marked = pick % rank + 1;
        let s = parabolic_split(&rs, marked).unwrap();
        prop_assert_eq!(s.phi_1.len() + s.phi_n_plus.len(), rs.positive_roots().len());
        prop_assert!(s.phi_1.iter().all(|r| r.coefficient(marked) == 0));
        prop_assert!(s.phi_n_plus.iter().all(|r| r.coefficient(marked) > 0));
    }
}
