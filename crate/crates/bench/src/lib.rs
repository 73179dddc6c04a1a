//! Benchmark fixtures.

use bscurve::{NormalFormData, Poly};

/// Curves of increasing difficulty, by name.
pub const CURVES: &[(&str, &str)] = &[
    ("line", "2*x + 3*y - 1"),
    ("cusp", "y^2 - x^3"),
    ("folium", "x^3 + y^3 - 3*x*y"),
    ("main_example", "(y - x^4)*(y - x^2 - x^4)"),
    ("two_cusps", "(y^2 - x^3)*(x^2 - y^3)"),
    ("quartic", "(x^2 + y^2)^2 + 3*x^2*y - y^3"),
    ("higher_cusp", "y^4 - 2*x^3*y^2 + x^6 - x^7"),
];

pub fn curve(text: &str) -> Poly {
    Poly::parse_xy(text).expect("fixture parses")
}

pub fn data() -> Vec<NormalFormData> {
    [vec![vec![1, 2]], vec![vec![1], vec![1, 1], vec![2]], vec![vec![3], vec![1, 4]]]
        .into_iter()
        .map(NormalFormData::canonicalize)
        .collect()
}
