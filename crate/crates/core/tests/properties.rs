use std::collections::BTreeSet;

use normbundle::{
    count_q, count_qtilde, direct_c_values, matrix_d, phi_table, q, qtilde, splitting_from_phi,
    splitting_oracle, splitting_type, trunc, ExactMatrix, IntervalPartition, MonomialSpace,
    Partition, ValidatedSpace,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn composition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=8, 1..=6).prop_map(|p| Partition::new(p).unwrap())
}

fn block_composition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(2usize..=8, 1..=6).prop_map(|p| Partition::new(p).unwrap())
}

fn valid_space(max_degree: usize) -> impl Strategy<Value = ValidatedSpace> {
    (5..=max_degree)
        .prop_flat_map(|d| {
            let range: Vec<usize> = (2..=d - 2).collect();
            (Just(d), subsequence(range, 1..=d - 3))
        })
        .prop_map(|(d, center)| MonomialSpace::from_center(d, &center).unwrap().validate().unwrap())
}

fn small_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
            .prop_map(|rows| ExactMatrix::from_rows(&rows))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn trunc_is_odd_part_split(z in -1000i64..=1000) {
        prop_assert_eq!(trunc(z) - trunc(-z), z);
    }

    #[test]
    fn closed_forms_match_window_counts(p in composition(), k in 1usize..=40) {
        prop_assert_eq!(qtilde(k, &p), count_qtilde(k, &p));
        prop_assert_eq!(q(k, &p), count_q(k, &p));
    }

    #[test]
    fn qtilde_splits_at_every_cut(p in block_composition(), k in 1usize..=40) {
        let parts = p.parts();
        for i in 1..parts.len() {
            let left = Partition::new(parts[..i].to_vec()).unwrap();
            let right = Partition::new(parts[i..].to_vec()).unwrap();
            let joined = Partition::new(vec![parts[i - 1] + parts[i]]).unwrap();
            let rhs = qtilde(k, &left) as i64 + qtilde(k, &right) as i64 - qtilde(k, &joined) as i64;
            prop_assert_eq!(qtilde(k, &p) as i64, rhs);
        }
    }

    #[test]
    fn q_is_bounded_by_inner_windows(p in composition(), k in 1usize..=40) {
        let bound = trunc(p.lambda() as i64 - k as i64 + 1);
        prop_assert!((q(k, &p) as i64) <= bound);
        prop_assert!(count_q(k, &p) <= count_qtilde(k, &p));
        let parts = p.parts();
        if k < parts[0] && k < parts[parts.len() - 1] {
            prop_assert_eq!(count_q(k, &p), count_qtilde(k, &p));
        }
    }

    #[test]
    fn full_window_is_counted_once(p in composition()) {
        prop_assert_eq!(count_q(p.lambda(), &p), 1);
    }

    #[test]
    fn window_counts_ignore_base_point(p in composition(), base in -50i64..=50, k in 1usize..=30) {
        let here = IntervalPartition::realize(&p, base);
        let there = IntervalPartition::realize(&p, 1);
        prop_assert_eq!(here.count_q(k), there.count_q(k));
        prop_assert_eq!(here.count_qtilde(k), there.count_qtilde(k));
    }

    #[test]
    fn blocks_tile_the_center(space in valid_space(30)) {
        let blocks = space.blocks();
        let covered: Vec<usize> = blocks.iter().flat_map(|b| b.alpha..=b.beta).collect();
        prop_assert_eq!(&covered[..], space.exponents());
        for pair in blocks.windows(2) {
            prop_assert!(pair[1].alpha >= pair[0].beta + 2);
        }
    }

    #[test]
    fn component_bookkeeping(space in valid_space(30)) {
        let components = space.components();
        for comp in &components {
            let gamma_sum: usize = comp.blocks().iter().map(|b| b.gamma()).sum();
            let b_sum: usize = comp.b_values().iter().map(|b| b + 1).sum();
            prop_assert_eq!(comp.lambda(), gamma_sum);
            prop_assert_eq!(comp.lambda(), b_sum + comp.r());
            prop_assert!(comp.partition().parts().iter().all(|&g| g >= 2));
            prop_assert_eq!(comp.apex_degree(), space.degree() + comp.lambda() - 2);
        }
        for pair in components.windows(2) {
            prop_assert!(pair[1].first_alpha() >= pair[0].last_beta() + 3);
        }
        let second_derivative: BTreeSet<usize> = space
            .blocks()
            .iter()
            .flat_map(|b| b.alpha - 2..=b.beta)
            .collect();
        prop_assert_eq!(space.summary().dim_d2t(), second_derivative.len());
    }

    #[test]
    fn inverse_derivative_shrinks(space in valid_space(30)) {
        prop_assert_eq!(space.dim_inverse_derivative(0), space.e() + 1);
        let max_b = space.blocks().iter().map(|b| b.b()).max().unwrap();
        for k in 1..=max_b + 3 {
            prop_assert!(space.dim_inverse_derivative(k) <= space.dim_inverse_derivative(k - 1));
        }
        prop_assert_eq!(space.dim_inverse_derivative(max_b + 1), 0);
    }

    #[test]
    fn splitting_type_bookkeeping(space in valid_space(40)) {
        let summary = space.summary();
        let c = splitting_type(&summary).unwrap();
        prop_assert_eq!(c.sum(), 2 * (space.e() + 1));
        prop_assert_eq!(c.len(), space.s() - 1);

        let table = phi_table(&summary);
        prop_assert_eq!(table.get(0), space.degree() + space.e());
        prop_assert_eq!(table.get(1), 2 * (space.e() + 1));
        prop_assert_eq!(table.get(2), 3 * (space.e() + 1) - summary.dim_d2t());
        prop_assert_eq!(table.second_differences()[0], summary.zero_count() as i64);
        prop_assert_eq!(splitting_from_phi(&table, space.s()).unwrap(), c.clone());

        let mut direct: Vec<usize> = summary.components().iter().flat_map(direct_c_values).collect();
        direct.resize(space.s() - 1, 0);
        prop_assert_eq!(normbundle::SplittingType::new(direct), c);
    }

    #[test]
    fn rank_ignores_assembly_order(
        (m, rows, cols) in small_matrix().prop_flat_map(|m| {
            let (r, c) = (m.rows(), m.cols());
            (Just(m), permutation(r), permutation(c))
        })
    ) {
        prop_assert_eq!(m.permuted(&rows, &cols).rank(), m.rank());
    }

    #[test]
    fn kernel_complements_rank(m in small_matrix()) {
        let kernel = m.kernel();
        prop_assert_eq!(kernel.dim() + m.rank(), m.cols());
        if kernel.dim() > 0 {
            prop_assert!(m.mul(&kernel.to_matrix()).is_zero());
        }
        prop_assert_eq!(m.column_space().dim(), m.rank());
    }

    #[test]
    fn derivative_rank_ignores_assembly_order(
        (k, d, rows, cols) in (1usize..=5, 1usize..=6).prop_flat_map(|(k, d)| {
            (Just(k), Just(d), permutation(k * d), permutation((k + 1) * (d + 1)))
        })
    ) {
        prop_assert_eq!(matrix_d(k, d).permuted(&rows, &cols).rank(), k * d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn formula_matches_oracle_beyond_the_sweep(space in valid_space(15)) {
        let formula = splitting_type(&space.summary()).unwrap();
        prop_assert_eq!(splitting_oracle(&space).unwrap(), formula);
    }
}
