mod common;

use ndtree::datasets::{
    generate, in_shell, read_stream, uniform_cube, write_stream, GeneratorSpec, Shape,
    QUALITY_LEVELS,
};
use ndtree::nds::nondominated_subset;
use ndtree::IoError;

#[test]
fn same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    for shape in [Shape::Convex, Shape::NonConvex, Shape::Clustered] {
        let spec = match shape {
            Shape::Clustered => GeneratorSpec::clustered(5, 40, 3, 0.1, 77),
            _ => GeneratorSpec::new(shape, 2000, 3, 0.1, 77),
        };
        let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
        write_stream(&generate(&spec).unwrap(), &a).unwrap();
        write_stream(&generate(&spec).unwrap(), &b).unwrap();
        assert_eq!(
            std::fs::read(&a).unwrap(),
            std::fs::read(&b).unwrap(),
            "{shape}"
        );
        let other = GeneratorSpec { seed: 78, ..spec };
        write_stream(&generate(&other).unwrap(), &b).unwrap();
        assert_ne!(
            std::fs::read(&a).unwrap(),
            std::fs::read(&b).unwrap(),
            "{shape}"
        );
    }
}

#[test]
fn file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.txt");
    let s = generate(&GeneratorSpec::new(Shape::NonConvex, 500, 5, 0.25, 3)).unwrap();
    write_stream(&s, &path).unwrap();
    let back = read_stream(&path).unwrap();
    assert_eq!(back.points, s.points);
    assert_eq!(back.p, 5);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("5 500\n"));
    assert!(text.lines().all(|l| !l.ends_with(' ')));
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(
        read_stream("/nonexistent/stream.txt"),
        Err(IoError::Io { .. })
    ));
}

#[test]
fn header_with_short_row_names_the_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "2 3\n1 2\n3 4\n5\n").unwrap();
    match read_stream(&path) {
        Err(IoError::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    std::fs::write(&path, "").unwrap();
    assert!(matches!(
        read_stream(&path),
        Err(IoError::Parse { line: 1, .. })
    ));
}

#[test]
fn convex_points_lie_in_the_shell_for_all_levels() {
    for (i, eps) in QUALITY_LEVELS.into_iter().enumerate() {
        for p in [2, 4, 7] {
            let s = generate(&GeneratorSpec::convex(400, p, eps, i as u64)).unwrap();
            assert!(s.points.iter().all(|y| in_shell(y, 10_000, eps)));
        }
    }
}

#[test]
fn smaller_scale_is_respected() {
    let s = generate(&GeneratorSpec::convex(300, 3, 0.5, 1).with_v_max(50)).unwrap();
    assert!(s
        .points
        .iter()
        .all(|y| y.iter().all(|&c| (0.0..=50.0).contains(&c)) && in_shell(y, 50, 0.5)));
}

fn nd_fraction(p: usize, eps: f64, n: usize) -> f64 {
    let mut total = 0.0;
    for seed in 0..5 {
        let s = generate(&GeneratorSpec::convex(n, p, eps, 1000 + seed)).unwrap();
        total += nondominated_subset(&s.points).len() as f64 / n as f64;
    }
    total / 5.0
}

#[test]
fn density_grows_with_quality_and_objectives() {
    let n = 3000;
    for p in [2, 3, 4] {
        let fractions: Vec<f64> = QUALITY_LEVELS
            .iter()
            .map(|&e| nd_fraction(p, e, n))
            .collect();
        assert!(
            fractions.windows(2).all(|w| w[0] <= w[1]),
            "p={p}: {fractions:?}"
        );
    }
    let by_p: Vec<f64> = (2..=5).map(|p| nd_fraction(p, 0.1, n)).collect();
    assert!(by_p.windows(2).all(|w| w[0] <= w[1]), "{by_p:?}");
}

#[test]
fn nonconvex_front_is_smaller_than_convex() {
    let c = generate(&GeneratorSpec::convex(5000, 3, 0.5, 9)).unwrap();
    let n = generate(&GeneratorSpec::new(Shape::NonConvex, 5000, 3, 0.5, 9)).unwrap();
    assert!(nondominated_subset(&n.points).len() < nondominated_subset(&c.points).len());
}

#[test]
fn clusters_are_disjoint_pool_slices() {
    let spec = GeneratorSpec::clustered(8, 25, 2, 0.25, 13);
    let s = generate(&spec).unwrap();
    assert_eq!(s.len(), 200);
    let pool = generate(&GeneratorSpec::convex(400, 2, 0.25, 13)).unwrap();
    // Every emitted point comes from the pool, and each pool entry is used
    // at most once.
    let mut counts = std::collections::HashMap::new();
    for y in &pool.points {
        *counts.entry(y.clone()).or_insert(0i32) += 1;
    }
    for y in &s.points {
        let c = counts.get_mut(y).expect("point outside the pool");
        *c -= 1;
        assert!(*c >= 0);
    }
}

#[test]
fn uniform_population_is_in_the_cube() {
    let pts = uniform_cube(1000, 4, 10_000, 2);
    assert_eq!(pts.len(), 1000);
    assert!(pts
        .iter()
        .all(|y| y.dim() == 4 && y.iter().all(|&c| (0.0..=10_000.0).contains(&c))));
}
