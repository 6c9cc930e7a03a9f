use crate::dominance::Point;

/// Biobjective stream that, fed into a tree with leaf size 2 and 2 children,
/// grows a fully unbalanced chain: `(0,0), (1,-1), (2^K,-2^K),
/// (2^(K-1),-2^(K-1)), ..., (2,-2)`.
///
/// The stream has `K + 2` points, all mutually non-dominated.
pub fn worst_case_stream(k: u32) -> Vec<Point> {
    assert!(k >= 1, "worst-case stream needs K >= 1");
    assert!(k < 1000, "2^K must stay finite");
    let mut out = vec![pt(0.0), pt(1.0)];
    out.extend((1..=k).rev().map(|e| pt(2f64.powi(e as i32))));
    out
}

fn pt(v: f64) -> Point {
    Point::new(vec![v, -v]).expect("finite")
}
