mod common;

use common::{rank_by_span, span_set, subspace_set};
use proptest::prelude::*;
use spinspread::gf2::{BitMat, BitVec, Echelon, Subspace};

fn mat_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMat> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
            let mut m = BitMat::zeros(r, c);
            for (i, b) in bits.into_iter().enumerate() {
                m.set(i / c, i % c, b);
            }
            m
        })
    })
}

fn two_subspaces(max_rows: usize, cols: usize) -> impl Strategy<Value = (BitMat, BitMat)> {
    let one = move || {
        (1..=max_rows).prop_flat_map(move |r| {
            proptest::collection::vec(any::<bool>(), r * cols).prop_map(move |bits| {
                let mut m = BitMat::zeros(r, cols);
                for (i, b) in bits.into_iter().enumerate() {
                    m.set(i / cols, i % cols, b);
                }
                m
            })
        })
    };
    (one(), one())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, ..ProptestConfig::default() })]

    #[test]
    fn rank_nullity(m in mat_strategy(90, 90)) {
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.dim(), m.n_cols());
        for v in ker.basis().rows() {
            prop_assert!(m.mul_vec(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn zassenhaus_dimension_identity((a, b) in two_subspaces(40, 70)) {
        let u = Subspace::row_space(&a);
        let w = Subspace::row_space(&b);
        let sum = u.sum(&w).unwrap();
        let int = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + int.dim(), u.dim() + w.dim());
        prop_assert!(int.is_subspace_of(&u).unwrap());
        prop_assert!(int.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn canonicalization_is_idempotent(m in mat_strategy(70, 130)) {
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(&once.matrix, &twice.matrix);
        prop_assert_eq!(once.rank, twice.rank);
        let w = Subspace::row_space(&m);
        prop_assert_eq!(Subspace::row_space(w.basis()), w.clone());
        prop_assert_eq!(w.dim(), m.rank());
    }

    #[test]
    fn transpose_rank(m in mat_strategy(70, 70)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn inverse_round_trip(n in 1usize..80, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let a = common::random_mat(&mut rng, n, n);
        match a.inverse() {
            Ok(inv) => {
                prop_assert!(a.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&a).unwrap().is_identity());
            }
            Err(_) => prop_assert!(a.rank() < n),
        }
    }

    #[test]
    fn solve_agrees_with_multiplication(m in mat_strategy(60, 60), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let x = common::random_vec(&mut rng, m.n_cols());
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn echelon_rank_matches(m in mat_strategy(50, 100)) {
        let mut e = Echelon::new(m.n_cols());
        for r in m.rows() {
            e.insert(r);
        }
        prop_assert_eq!(e.rank(), m.rank());
        prop_assert_eq!(e.to_subspace(), Subspace::row_space(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn small_cases_match_span_enumeration((a, b) in two_subspaces(6, 12)) {
        let ra: Vec<BitVec> = a.rows().collect();
        let rb: Vec<BitVec> = b.rows().collect();
        prop_assert_eq!(a.rank(), rank_by_span(&ra));
        let (sa, sb) = (span_set(&ra), span_set(&rb));
        let u = Subspace::row_space(&a);
        let w = Subspace::row_space(&b);
        prop_assert_eq!(subspace_set(&u), sa.clone());
        let expected: std::collections::BTreeSet<u32> = sa.intersection(&sb).copied().collect();
        prop_assert_eq!(subspace_set(&u.intersect(&w).unwrap()), expected);
        let mut all = ra.clone();
        all.extend(rb);
        prop_assert_eq!(subspace_set(&u.sum(&w).unwrap()), span_set(&all));
    }
}

#[test]
fn padding_stays_clear_across_word_boundaries() {
    for len in [1, 63, 64, 65, 127, 128, 129] {
        let ones = BitVec::from_bools(&vec![true; len]);
        assert_eq!(ones.weight(), len);
        let w = ones.words();
        let used = len % 64;
        if used != 0 {
            assert_eq!(w[w.len() - 1] >> used, 0);
        }
        assert_eq!(ones.to_string().len(), len);
        assert_eq!(ones.to_string().parse::<BitVec>().unwrap(), ones);
    }
}

#[test]
fn kernel_of_identity_and_zero() {
    assert!(BitMat::identity(70).kernel().is_zero());
    assert_eq!(BitMat::zeros(3, 70).kernel().dim(), 70);
}
