#![allow(dead_code)]

use ndtree::{AnyArchive, BackendKind, ParetoArchive, Point, Uncounted};
use proptest::prelude::*;

pub fn pt(c: &[f64]) -> Point {
    Point::new(c.to_vec()).unwrap()
}

/// Small integer coordinates, so ties and duplicates are common.
pub fn grid_stream(p: usize, max_len: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(prop::collection::vec(0u8..12, p), 0..max_len).prop_map(|rows| {
        rows.into_iter()
            .map(|r| pt(&r.iter().map(|&v| v as f64).collect::<Vec<_>>()))
            .collect()
    })
}

/// Points near the plane `Σ y_k = const`, so most of them are mutually
/// non-dominated and archives grow large.
pub fn plane_stream(p: usize, max_len: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(
        (prop::collection::vec(0u32..60, p - 1), 0u32..6),
        0..max_len,
    )
    .prop_map(move |rows| {
        rows.into_iter()
            .map(|(head, noise)| {
                let total = 60 * (p as u32 - 1);
                let last = total - head.iter().sum::<u32>() + noise;
                let mut c: Vec<f64> = head.iter().map(|&v| v as f64).collect();
                c.push(last as f64);
                pt(&c)
            })
            .collect()
    })
}

/// Either flavour, for `p` drawn from `2..=max_p`.
pub fn any_stream(max_p: usize, max_len: usize) -> impl Strategy<Value = Vec<Point>> {
    (2..=max_p)
        .prop_flat_map(move |p| prop_oneof![grid_stream(p, max_len), plane_stream(p, max_len)])
}

pub fn backends_for(p: usize) -> Vec<BackendKind> {
    BackendKind::ALL
        .into_iter()
        .filter(|b| b.supports(p))
        .collect()
}

pub fn feed(kind: BackendKind, stream: &[Point]) -> AnyArchive {
    let mut a = kind.build();
    for y in stream {
        a.update(y.clone(), &mut Uncounted).unwrap();
    }
    a
}

pub fn sorted_points(a: &impl ParetoArchive) -> Vec<Point> {
    let mut v = a.points();
    v.sort_unstable();
    v
}
