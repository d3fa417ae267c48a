use projrank::rep_theory::{
    enumerate_irreps_below, partition_of, tableau_dimension, weyl_dimension, DominantWeight,
};
use projrank::root_system::{build_root_system, TypeLabel};
use proptest::prelude::*;

/// Counts semistandard fillings with entries in `1..=n` cell by cell.
fn count_ssyt(shape: &[u32], n: u32) -> u128 {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    fn go(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, n: u32) -> u128 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            total += go(i + 1, cells, grid, n);
        }
        total
    }
    go(0, &cells, &mut grid, n)
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn weyl_matches_brute_force_tableaux() {
    for l in 1..=4 {
        let rs = build_root_system(TypeLabel::A, l).unwrap();
        for coeffs in itertools::Itertools::multi_cartesian_product(std::iter::repeat(0u32..=2).take(l)) {
            if coeffs.iter().sum::<u32>() > 3 {
                continue;
            }
            let w = DominantWeight::new(coeffs);
            let brute = count_ssyt(&partition_of(&w), l as u32 + 1);
            assert_eq!(weyl_dimension(&rs, &w).unwrap(), brute, "A{l} {w}");
            assert_eq!(tableau_dimension(TypeLabel::A, l, &w).unwrap(), brute, "A{l} {w}");
        }
    }
}

#[test]
fn symmetric_and_exterior_powers() {
    for l in 1..=8usize {
        let rs = build_root_system(TypeLabel::A, l).unwrap();
        for m in 0..=5u32 {
            let mut c = vec![0; l];
            c[0] = m;
            let d = weyl_dimension(&rs, &DominantWeight::new(c)).unwrap();
            assert_eq!(d, binomial((l as u128) + m as u128, m as u128), "Sym^{m} for A{l}");
        }
        for i in 1..=l {
            let d = weyl_dimension(&rs, &DominantWeight::fundamental(l, i)).unwrap();
            assert_eq!(d, binomial(l as u128 + 1, i as u128));
        }
    }
}

#[test]
fn enumeration_frontier_is_tight() {
    for (label, rank, bound) in [(TypeLabel::A, 4, 60u128), (TypeLabel::B, 3, 50), (TypeLabel::C, 3, 60), (TypeLabel::D, 4, 60), (TypeLabel::E6, 6, 400)] {
        let rs = build_root_system(label, rank).unwrap();
        let found = enumerate_irreps_below(&rs, bound).unwrap();
        let set: std::collections::BTreeSet<_> = found.iter().map(|r| r.weight.clone()).collect();
        for r in &found {
            assert!(r.dimension <= bound);
            assert_eq!(weyl_dimension(&rs, &r.weight).unwrap(), r.dimension);
            // every one-step raise is either listed or exceeds the bound
            for i in 0..rank {
                let mut c = r.weight.coeffs().to_vec();
                c[i] += 1;
                let w = DominantWeight::new(c);
                assert!(set.contains(&w) || weyl_dimension(&rs, &w).unwrap() > bound);
            }
        }
        assert!(found.windows(2).all(|p| p[0].dimension <= p[1].dimension));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimension_strictly_increases(l in 1usize..=6, coeffs in proptest::collection::vec(0u32..3, 6), i in 0usize..6) {
        let rs = build_root_system(TypeLabel::A, l).unwrap();
        let w = DominantWeight::new(coeffs[..l].to_vec());
        let mut raised = w.coeffs().to_vec();
        raised[i % l] += 1;
        let a = weyl_dimension(&rs, &w).unwrap();
        let b = weyl_dimension(&rs, &DominantWeight::new(raised)).unwrap();
        prop_assert!(b > a);
    }

    #[test]
    fn dual_weight_has_same_dimension(l in 1usize..=6, coeffs in proptest::collection::vec(0u32..3, 6)) {
        let rs = build_root_system(TypeLabel::A, l).unwrap();
        let w = DominantWeight::new(coeffs[..l].to_vec());
        let dual = DominantWeight::new(coeffs[..l].iter().rev().copied().collect());
        prop_assert_eq!(weyl_dimension(&rs, &w).unwrap(), weyl_dimension(&rs, &dual).unwrap());
    }
}
