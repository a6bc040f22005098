mod common;

use std::collections::BTreeSet;

use flamingo::tableaux::*;
use num_bigint::BigUint;
use proptest::prelude::*;

use common::R2_TABLE;

fn shape(n: usize, d: usize, r: usize) -> FlamingoShape {
    FlamingoShape::new(n, d, r).unwrap()
}

fn part(n: usize, blocks: &[&[usize]]) -> SetPartition {
    SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
}

#[test]
fn shape_validation() {
    assert!(FlamingoShape::new(5, 2, 3).is_err());
    assert!(FlamingoShape::new(5, 1, 1).is_err());
    assert!(FlamingoShape::new(0, 1, 2).is_err());
    let s = shape(10, 3, 3);
    assert_eq!(s.lambda(), vec![3, 3, 3, 1]);
    assert_eq!(s.conjugate(), vec![4, 3, 3]);
    assert_eq!(s.nu(), 4);
}

#[test]
fn hook_length_examples() {
    assert_eq!(hook_lengths(&shape(10, 3, 3)), vec![vec![6, 4, 3], vec![5, 3, 2], vec![4, 2, 1], vec![1]]);
    assert_eq!(hook_lengths(&shape(3, 1, 3)), vec![vec![3], vec![2], vec![1]]);
    assert_eq!(hook_lengths(&shape(7, 2, 3)), vec![vec![5, 3], vec![4, 2], vec![3, 1], vec![1]]);
}

#[test]
fn count_examples() {
    assert_eq!(count_syt(&shape(7, 2, 3)), BigUint::from(14u32));
    assert_eq!(count_syt(&shape(3, 1, 3)), BigUint::from(1u32));
    assert_eq!(count_syt(&shape(10, 3, 3)), BigUint::from(210u32));
}

/// Every filling of λ by a permutation of `[n]`, kept if standard.
fn brute_force_syt_count(s: &FlamingoShape) -> usize {
    let lambda = s.lambda();
    let mut perm: Vec<usize> = (1..=s.n).collect();
    let mut count = 0;
    loop {
        let mut it = perm.iter().copied();
        let rows: Vec<Vec<usize>> = lambda.iter().map(|&l| (&mut it).take(l).collect()).collect();
        if StandardYoungTableau::new(*s, rows).is_ok() {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    count
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[test]
fn enumerate_syt_matches_brute_force() {
    for s in [shape(6, 2, 3), shape(7, 2, 3), shape(6, 2, 2), shape(6, 3, 2)] {
        let list = enumerate_syt(&s);
        assert_eq!(list.len(), brute_force_syt_count(&s));
        assert_eq!(BigUint::from(list.len()), count_syt(&s));
        let distinct: BTreeSet<_> = list.iter().collect();
        assert_eq!(distinct.len(), list.len());
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }
    let single = enumerate_syt(&shape(3, 1, 3));
    assert_eq!(single.len(), 1);
    assert_eq!(single[0].rows(), &[vec![1], vec![2], vec![3]]);
}

#[test]
fn weakly_noncrossing_examples() {
    assert!(is_r_weakly_noncrossing(&[1, 4, 5], &[2, 3, 6], 3).unwrap());
    assert!(!is_r_weakly_noncrossing(&[1, 3, 4], &[2, 5, 6], 3).unwrap());
    for r in 2..=3 {
        assert!(is_r_weakly_noncrossing(&[1, 2, 3], &[4, 5, 6], r).unwrap());
    }
    assert!(is_r_weakly_noncrossing(&[1, 2, 3], &[3, 4, 5], 3).is_err());
    assert!(is_r_weakly_noncrossing(&[1, 2], &[3, 4, 5], 3).is_err());
}

#[test]
fn fourteen_row_table() {
    let s = shape(7, 2, 3);
    let mut seen = BTreeSet::new();
    for (syt_rows, tail, rect_rows, blocks) in R2_TABLE {
        let mut rows: Vec<Vec<usize>> = syt_rows.iter().map(|r| r.to_vec()).collect();
        rows.push(vec![tail]);
        let t = StandardYoungTableau::new(s, rows).unwrap();
        let rect = syt_to_rect(&t);
        assert_eq!(rect.rows(), rect_rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>().as_slice());
        let pi = rect_to_wnc(&rect);
        assert_eq!(pi, part(7, blocks));
        assert_eq!(wnc_to_rect(&pi, 3).unwrap(), rect);
        assert_eq!(rect_to_syt(&rect), t);
        seen.insert(pi);
    }
    assert_eq!(seen.into_iter().collect::<Vec<_>>(), enumerate_wnc(&s));
}

#[test]
fn sixteen_point_example() {
    let s = shape(16, 4, 3);
    let t = StandardYoungTableau::new(
        s,
        vec![vec![1, 2, 4, 7], vec![3, 5, 8, 13], vec![6, 9, 10, 16], vec![11], vec![12], vec![14], vec![15]],
    )
    .unwrap();
    let rect = syt_to_rect(&t);
    assert_eq!(rect.rows(), &[vec![1, 2, 4, 7], vec![3, 5, 8, 13], vec![9, 10, 12, 16]]);
    assert_eq!(rect_to_syt(&rect), t);

    let arcs = RectTableau::new(s, vec![vec![1, 2, 4, 7], vec![3, 5, 8, 11], vec![9, 10, 12, 16]]).unwrap();
    assert_eq!(rect_to_wnc(&arcs), part(16, &[&[1, 11, 12], &[2, 3, 13, 14, 15, 16], &[4, 5, 6, 10], &[7, 8, 9]]));
}

#[test]
fn condition_three_examples() {
    let s = shape(16, 4, 3);
    assert!(RectTableau::new(s, vec![vec![1, 3, 6, 7], vec![2, 4, 8, 11], vec![9, 13, 14, 16]]).is_ok());
    assert!(RectTableau::new(s, vec![vec![1, 3, 6, 7], vec![2, 4, 11, 13], vec![5, 8, 14, 16]]).is_err());
}

#[test]
fn trivial_column() {
    let s = shape(3, 1, 3);
    let t = StandardYoungTableau::new(s, vec![vec![1], vec![2], vec![3]]).unwrap();
    let rect = syt_to_rect(&t);
    assert_eq!(rect.rows(), t.rows());
    assert_eq!(rect_to_syt(&rect), t);
    let pi = rect_to_wnc(&rect);
    assert_eq!(pi, part(3, &[&[1, 2, 3]]));
    assert_eq!(wnc_to_rect(&pi, 3).unwrap().rows(), &[vec![1], vec![2], vec![3]]);
    assert_eq!(enumerate_wnc(&s), vec![pi.clone()]);
    let keys = wnc_key_sets(&pi, 3);
    assert_eq!(keys, vec![BTreeSet::from([1]), BTreeSet::from([2]), BTreeSet::from([3])]);
}

#[test]
fn key_sets_example_and_injectivity() {
    let pi = part(7, &[&[1, 4, 5, 6], &[2, 3, 7]]);
    assert_eq!(wnc_key_sets(&pi, 2), vec![BTreeSet::from([1, 2]), BTreeSet::from([6, 7])]);
    let s = shape(9, 3, 3);
    let keys: BTreeSet<_> = enumerate_wnc(&s).iter().map(|p| wnc_key_sets(p, 3)).collect();
    assert_eq!(BigUint::from(keys.len()), count_syt(&s));
}

#[test]
fn wnc_to_rect_rejects_crossing() {
    let pi = part(6, &[&[1, 3, 4], &[2, 5, 6]]);
    assert!(wnc_to_rect(&pi, 3).is_err());
}

/// `T(n, d, r)` by choosing the entry set and filling it as a standard rectangle.
fn brute_force_rect(s: &FlamingoShape) -> BTreeSet<RectTableau> {
    let rect = FlamingoShape::new(s.r * s.d, s.d, s.r).unwrap();
    let fillings = enumerate_syt(&rect);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << s.n) {
        if mask.count_ones() as usize != s.r * s.d {
            continue;
        }
        let values: Vec<usize> = (1..=s.n).filter(|&x| mask & (1 << (x - 1)) != 0).collect();
        for f in &fillings {
            let rows = f.rows().iter().map(|row| row.iter().map(|&k| values[k - 1]).collect()).collect();
            if let Ok(t) = RectTableau::new(*s, rows) {
                out.insert(t);
            }
        }
    }
    out
}

#[test]
fn rect_enumeration_matches_direct_search() {
    for s in [shape(7, 2, 3), shape(8, 2, 3), shape(9, 3, 2), shape(8, 2, 4)] {
        let via_bijection: BTreeSet<_> = enumerate_rect(&s).into_iter().collect();
        assert_eq!(via_bijection, brute_force_rect(&s));
    }
}

#[test]
fn mdiagram_example() {
    let pi = part(13, &[&[1, 4, 6, 7, 8], &[2, 3, 9, 10], &[5, 11, 12, 13]]);
    let m = wnc_to_mdiagram(&pi).unwrap();
    let firsts: Vec<_> = m.first_arcs.iter().map(|a| (a.left, a.right)).collect();
    assert_eq!(firsts, vec![(1, 4), (2, 3), (5, 11)]);
    let seconds: Vec<_> = m.second_arcs.iter().map(|a| (a.left, a.right)).collect();
    assert_eq!(seconds, vec![(4, 6), (4, 7), (4, 8), (3, 9), (3, 10), (11, 12), (11, 13)]);
    let tiny = wnc_to_mdiagram(&part(3, &[&[1, 2, 3]])).unwrap();
    assert_eq!((tiny.first_arcs[0].left, tiny.first_arcs[0].right), (1, 2));
    assert_eq!((tiny.second_arcs[0].left, tiny.second_arcs[0].right), (2, 3));
}

#[test]
fn mdiagram_classes_noncrossing() {
    for pi in enumerate_wnc(&shape(8, 2, 3)) {
        let m = wnc_to_mdiagram(&pi).unwrap();
        assert!(arcs_noncrossing(&m.first_arcs));
        assert!(arcs_noncrossing(&m.second_arcs));
    }
}

#[test]
fn partition_json_round_trip() {
    let pi = part(7, &[&[2, 3, 7], &[1, 4, 5, 6]]);
    let json = pi.to_json();
    assert_eq!(json.to_string(), r#"{"blocks":[[1,4,5,6],[2,3,7]],"n":7}"#);
    assert_eq!(SetPartition::from_json(&json).unwrap(), pi);
    let t = enumerate_syt(&shape(7, 2, 3)).remove(3);
    assert_eq!(StandardYoungTableau::from_json(&t.to_json()).unwrap(), t);
}

/// For `r = 2` the definition reduces to ordinary noncrossing of the block-minimum arcs.
#[test]
fn two_weakly_noncrossing_matches_pylyavskyy_for_pairs() {
    for a_mask in 0u32..(1 << 7) {
        for b_mask in 0u32..(1 << 7) {
            if a_mask & b_mask != 0 || a_mask.count_ones() < 2 || b_mask.count_ones() < 2 {
                continue;
            }
            let a: Vec<usize> = (1..=7).filter(|&x| a_mask & (1 << (x - 1)) != 0).collect();
            let b: Vec<usize> = (1..=7).filter(|&x| b_mask & (1 << (x - 1)) != 0).collect();
            let strong = a[1..].iter().all(|&x| b[1..].iter().all(|&y| !arcs_cross((a[0], x), (b[0], y))));
            assert_eq!(is_r_weakly_noncrossing(&a, &b, 2).unwrap(), strong);
        }
    }
}

proptest! {
    #[test]
    fn every_wnc_block_pair_is_weakly_noncrossing(n in 6usize..=10, d in 1usize..=3, r in 2usize..=3, idx in 0usize..1000) {
        prop_assume!(r * d <= n);
        let s = shape(n, d, r);
        let list = enumerate_wnc(&s);
        let pi = &list[idx % list.len()];
        prop_assert!(is_wnc(pi, &s));
        prop_assert_eq!(&rect_to_wnc(&wnc_to_rect(pi, r).unwrap()), pi);
    }

    #[test]
    fn syt_round_trip(n in 4usize..=10, d in 1usize..=3, r in 2usize..=4, idx in 0usize..5000) {
        prop_assume!(r * d <= n);
        let s = shape(n, d, r);
        let list = enumerate_syt(&s);
        let t = &list[idx % list.len()];
        prop_assert_eq!(&rect_to_syt(&syt_to_rect(t)), t);
    }
}
