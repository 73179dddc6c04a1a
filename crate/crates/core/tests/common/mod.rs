#![allow(dead_code)]

use bscurve::{AlgebraicNumber, Poly};

/// Squarefree plane curves used across the integration suites.
pub const CORPUS: &[&str] = &[
    "(y - x^2)*x",
    "x*y",
    "y",
    "x^2 + y^2 - 1",
    "y^2 - x^3",
    "(y - x^2)*(y - x^3)",
    "(y - x^4)*(y - x^2 - x^4)",
    "(y - x^4)*(y - x^3 - x^4)",
    "y^2 - x^2*(x + 1)",
    "x*y - 1",
    "y - x^2",
    "y^2 - x^3 + x",
    "y^3 - x^4",
    "y^3 - x^5",
    "x*y*(x + y - 1)",
    "x*y*(x - y)",
    "(x^2 + y^2)^2 + 3*x^2*y - y^3",
    "y^2 - x^4 - x^5",
    "(y^2 - x^3)*(y^2 + x^3)",
    "x^4 + y^4 - 1",
    "y^2 - (x^2 - 2)^3",
    "(y - x)*(y - x - 1)",
    "x^3 + y^3 - 3*x*y",
    "x*(y - x^2)*(y + x^2)",
    "y^2 - x^5",
    "(x^2 - 1)*(y^2 - 1)",
    "y*(y - x^2)*(y - 2*x^2)",
    "y^4 - 2*x^3*y^2 + x^6 - x^7",
    "x^2*y - 1",
    "y^2 - x^3 + x^2",
    "(x^2 + y^2 - 1)*(x - 1)",
    "(y^2 - x^3)*(x^2 - y^3)",
    "y - x^3",
    "2*x + 3*y - 1",
    "x",
];

pub fn p(s: &str) -> Poly {
    Poly::parse_xy(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn corpus() -> Vec<(&'static str, Poly)> {
    CORPUS.iter().map(|s| (*s, p(s))).collect()
}

pub fn zero() -> AlgebraicNumber {
    AlgebraicNumber::from_int(0)
}

fn factor_text(kind: u8, c: i64, n: u32, m: u32) -> String {
    match kind {
        0 => format!("(y - ({c})*x^{m})"),
        1 => format!("(x - ({c})*y^{m})"),
        2 => format!("(y^{n} - ({c})*x^{})", n + 1 + m % 2),
        _ => format!("(y - ({c})*x - x^{})", m + 1),
    }
}

/// Reduced curves of degree at most 6 through the origin, built from a few
/// branch shapes.
pub fn origin_curve() -> impl proptest::strategy::Strategy<Value = Poly> {
    use proptest::prelude::*;
    let c = prop_oneof![-3i64..=-1, 1i64..=3];
    let factor = (0u8..4, c, 2u32..=3, 1u32..=3).prop_map(|(k, c, n, m)| factor_text(k, c, n, m));
    proptest::collection::vec(factor, 1..=3)
        .prop_map(|fs| p(&fs.join("*")).squarefree_part().unwrap())
        .prop_filter("degree above 6", |f| f.total_degree() <= 6)
}

/// An invertible linear map as an affine substitution without translation.
pub fn linear_map() -> impl proptest::strategy::Strategy<Value = [bscurve::Rat; 6]> {
    use proptest::prelude::*;
    use bscurve::arith::{rat, ratio};
    proptest::array::uniform4((-3i64..=3, 1i64..=2))
        .prop_filter("singular matrix", |m| m[0].0 * m[3].0 * m[1].1 * m[2].1 != m[1].0 * m[2].0 * m[0].1 * m[3].1)
        .prop_map(|m| {
            let e = |i: usize| ratio(m[i].0, m[i].1);
            [e(0), e(1), e(2), e(3), rat(0), rat(0)]
        })
}
