mod common;

use flamingo::plabic::*;

#[test]
fn tripod_trips() {
    let g = star(3);
    assert!(validate_normal(&g).is_empty());
    assert_eq!(trip_permutation(&g), vec![3, 1, 2]);
    assert_eq!(exceedances(&g), vec![1]);
    let t = trip(&g, 1);
    assert_eq!((t.start, t.end, t.darts.len()), (1, 3, 2));
}

#[test]
fn star_trips_shift_down() {
    for n in 3..=8 {
        let perm = trip_permutation(&star(n));
        let expected: Vec<usize> = (1..=n).map(|i| if i == 1 { n } else { i - 1 }).collect();
        assert_eq!(perm, expected);
    }
}

#[test]
fn tripod_depth() {
    let g = star(3);
    let map = depth_map(&g);
    assert_eq!(map.faces.len(), 3);
    assert_eq!(map.depth[map.f0], 0);
    let mut others: Vec<usize> = (0..3).filter(|&f| f != map.f0).map(|f| map.depth[f]).collect();
    others.sort_unstable();
    assert_eq!(others, vec![1, 1]);
    let by_faces = depth_boundary_edges(&g);
    assert_eq!(by_faces, depth_boundary_edges_by_trips(&g));
    assert_eq!(by_faces.len(), 2);
}

#[test]
fn white_white_edge_is_reported() {
    // Boundary 1..3 on blacks, two whites joined to each other.
    let g = PlabicGraph::new(
        4,
        vec![Color::Black, Color::White, Color::White, Color::Black],
        vec![[0, 4], [1, 4], [4, 5], [5, 6], [4, 6], [5, 7], [6, 7], [2, 7], [3, 7]],
        vec![vec![0, 1, 4, 2], vec![2, 5, 3], vec![3, 6, 4], vec![5, 7, 8, 6]],
    )
    .unwrap();
    let diagnostics = validate_normal(&g);
    assert!(diagnostics.iter().any(|d| d.contains("same-colored adjacency")), "{diagnostics:?}");
}

#[test]
fn eight_point_figure_is_normal() {
    let g = common::aw_8_2();
    assert!(validate_normal(&g).is_empty());
    assert!(scan_bad_features(&g).is_empty());
    assert_eq!(exceedances(&g).len(), 2);
}

#[test]
fn ten_point_figure_is_normal() {
    let g = common::aw_10_3();
    assert!(validate_normal(&g).is_empty(), "{:?}", validate_normal(&g));
    assert!(scan_bad_features(&g).is_empty());
    assert_eq!(exceedances(&g).len(), 3);
}

#[test]
fn double_edge_is_bad() {
    // A black and a white vertex joined by two parallel edges.
    let g = PlabicGraph::new(
        3,
        vec![Color::Black, Color::White, Color::Black],
        vec![[0, 3], [1, 3], [3, 4], [3, 4], [4, 5], [2, 5]],
        vec![vec![0, 1, 2, 3], vec![2, 4, 3], vec![4, 5]],
    )
    .unwrap();
    assert!(!scan_bad_features(&g).is_empty());
}

#[test]
fn rotation_and_reflection() {
    let g = common::aw_10_3();
    let mut h = g.clone();
    for _ in 0..10 {
        h = rotate(&h);
    }
    assert!(isomorphic(&g, &h));
    assert!(isomorphic(&g, &reflect(&reflect(&g))));
    let perm = trip_permutation(&g);
    let rotated = trip_permutation(&rotate(&g));
    for i in 1..=10 {
        assert_eq!(rotated[i % 10], perm[i - 1] % 10 + 1);
    }
}

#[test]
fn encodings() {
    let a = star(3);
    let b = PlabicGraph::new(3, vec![Color::Black], vec![[3, 1], [0, 3], [3, 2]], vec![vec![1, 0, 2]]).unwrap();
    assert_eq!(canonical_encoding(&a).unwrap(), canonical_encoding(&b).unwrap());
    assert_ne!(canonical_encoding(&a).unwrap(), canonical_encoding(&star(4)).unwrap());
}

#[test]
fn json_round_trip() {
    let g = common::aw_8_2();
    let back = PlabicGraph::from_json(&g.to_json()).unwrap();
    assert_eq!(back, g);
}
