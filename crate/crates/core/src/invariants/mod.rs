//! Local and global invariants: tangent cones, relative multiplicities,
//! δ and Milnor numbers, topology of components, and Lipschitz normal
//! embedding criteria.

pub(crate) mod fulton;
pub(crate) mod points;

use std::collections::BTreeMap;

use crate::algnum::{concrete_roots, AlgebraicNumber};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::puiseux::local::{self, Dir, LineClass, Local};
use crate::puiseux::{infinity_points, point_field, InfPoint};

pub(crate) use points::{components, singular_orbits, PointOrbit};

/// A projective direction `(a : b)`, normalized to `(1 : w)` or `(0 : 1)`.
pub type Direction = (AlgebraicNumber, AlgebraicNumber);

/// Where a local invariant is taken.
#[derive(Clone, Debug)]
pub enum Location {
    Point(AlgebraicNumber, AlgebraicNumber),
    Infinity,
}

#[derive(Clone, Debug)]
pub struct TangentLine {
    pub direction: Direction,
    /// Multiplicity of the line as a factor of the lowest (or top) form.
    pub multiplicity: u32,
}

#[derive(Clone, Debug)]
pub struct LineMultiplicities {
    pub direction: Direction,
    /// Relative multiplicities of the branches tangent to the line, ascending.
    pub weights: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct MultiplicityProfile {
    pub per_line: Vec<LineMultiplicities>,
    /// All relative multiplicities, ascending.
    pub k_vector: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    pub genus: u64,
    pub ends: u32,
    pub euler_characteristic: i64,
}

pub(crate) fn prepare(f: &Poly) -> Result<Poly> {
    if f.nvars() > 2 {
        return Err(Error::TooManyVariables(f.nvars()));
    }
    let f = f.with_vars(&["x", "y"])?;
    f.check_nonconstant()?;
    Ok(f)
}

/// The reduced curve: the squarefree part of a valid plane polynomial.
pub(crate) fn reduce(f: &Poly) -> Result<Poly> {
    prepare(f)?.squarefree_part()
}

fn prepare_squarefree(f: &Poly) -> Result<Poly> {
    let f = prepare(f)?;
    if !f.is_squarefree()? {
        return Err(Error::NotSquarefree);
    }
    Ok(f)
}

fn vertical() -> Direction {
    (AlgebraicNumber::from_int(0), AlgebraicNumber::from_int(1))
}

fn slope_dir(w: AlgebraicNumber) -> Direction {
    (AlgebraicNumber::from_int(1), w)
}

pub(crate) fn sort_dirs<T>(v: &mut [(Direction, T)]) {
    v.sort_by(|a, b| a.0 .0.cmp_canonical(&b.0 .0).then_with(|| a.0 .1.cmp_canonical(&b.0 .1)));
}

/// Concrete lines of one class under the embedding `theta` of the base field.
pub(crate) fn class_lines(c: &LineClass, theta: &AlgebraicNumber) -> Vec<Direction> {
    match &c.dir {
        Dir::Vertical => vec![vertical()],
        Dir::Slopes(p) => concrete_roots(p, theta).into_iter().map(slope_dir).collect(),
    }
}

fn local_at(f: &Poly, x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<(Local, AlgebraicNumber)> {
    let pf = point_field(x, y);
    Ok((local::at_point(f, &pf.px, &pf.py)?, pf.theta))
}

/// Weights of the ends through one point at infinity, ascending.
pub(crate) fn end_weights(loc: &Local) -> Vec<u32> {
    let mut w: Vec<u32> = loc.orbits.iter().flat_map(|o| std::iter::repeat_n(o.e, o.size as usize)).collect();
    w.sort_unstable();
    w
}

/// Points at infinity with their local expansions.
pub(crate) fn infinity_data(f: &Poly) -> Result<Vec<(InfPoint, Local)>> {
    infinity_points(f)?
        .into_iter()
        .map(|ip| {
            let loc = local::at_infinity(f, &ip.k, ip.chart.clone())?;
            Ok((ip, loc))
        })
        .collect()
}

/// Singular points, each listed once, in canonical order.
pub fn singular_points(f: &Poly) -> Result<Vec<(AlgebraicNumber, AlgebraicNumber)>> {
    let f = prepare_squarefree(f)?;
    let mut out: Vec<(AlgebraicNumber, AlgebraicNumber)> =
        singular_orbits(&f)?.iter().flat_map(|o| o.concrete().into_iter().map(|(p, _)| p)).collect();
    out.sort_by(|a, b| a.0.cmp_canonical(&b.0).then_with(|| a.1.cmp_canonical(&b.1)));
    Ok(out)
}

/// Tangent lines with their multiplicities in the lowest form at a point, or
/// in the top form at infinity.
pub fn tangent_cone(f: &Poly, at: &Location) -> Result<Vec<TangentLine>> {
    let f = prepare(f)?;
    let mut lines: Vec<(Direction, u32)> = Vec::new();
    match at {
        Location::Point(x, y) => {
            let (loc, theta) = local_at(&f, x, y)?;
            for c in local::line_classes(&loc) {
                for d in class_lines(&c, &theta) {
                    lines.push((d, c.form_mult));
                }
            }
        }
        Location::Infinity => {
            for ip in infinity_points(&f)? {
                for (d, _) in ip.concrete() {
                    lines.push((d, ip.mult));
                }
            }
        }
    }
    sort_dirs(&mut lines);
    Ok(lines.into_iter().map(|(direction, multiplicity)| TangentLine { direction, multiplicity }).collect())
}

/// Relative multiplicities of the branches (or ends) grouped by tangent line.
pub fn relative_multiplicities(f: &Poly, at: &Location) -> Result<MultiplicityProfile> {
    let f = prepare(f)?;
    let mut lines: Vec<(Direction, Vec<u32>)> = Vec::new();
    match at {
        Location::Point(x, y) => {
            let (loc, theta) = local_at(&f, x, y)?;
            for c in local::line_classes(&loc) {
                for d in class_lines(&c, &theta) {
                    lines.push((d, c.weights.clone()));
                }
            }
        }
        Location::Infinity => {
            for (ip, loc) in infinity_data(&f)? {
                let w = end_weights(&loc);
                for (d, _) in ip.concrete() {
                    lines.push((d, w.clone()));
                }
            }
        }
    }
    sort_dirs(&mut lines);
    let mut k_vector: Vec<u32> = lines.iter().flat_map(|l| l.1.iter().copied()).collect();
    k_vector.sort_unstable();
    Ok(MultiplicityProfile {
        per_line: lines.into_iter().map(|(direction, weights)| LineMultiplicities { direction, weights }).collect(),
        k_vector,
    })
}

/// Total degree.
pub fn degree(f: &Poly) -> Result<u32> {
    Ok(prepare(f)?.total_degree())
}

/// The degree recovered as the sum of the relative multiplicities at infinity.
pub fn degree_via_cone(f: &Poly) -> Result<u32> {
    let f = prepare(f)?;
    let mut total = 0;
    for (ip, loc) in infinity_data(&f)? {
        total += ip.count() * end_weights(&loc).iter().sum::<u32>();
    }
    Ok(total)
}

/// The δ-invariant of the germ at a point of the curve.
pub fn delta_invariant(f: &Poly, x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<u64> {
    let f = prepare_squarefree(f)?;
    Ok(local_at(&f, x, y)?.0.delta())
}

/// The Milnor number, computed as the intersection number of the partial
/// derivatives by Fulton's algorithm.
pub fn milnor_number(f: &Poly, x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<u64> {
    let f = prepare_squarefree(f)?;
    let pf = point_field(x, y);
    if !points::eval_poly(&f, &pf.px, &pf.py).is_zero() {
        return Err(Error::NotOnCurve);
    }
    let fx = local::translate(&f.derivative(0), &pf.px, &pf.py);
    let fy = local::translate(&f.derivative(1), &pf.px, &pf.py);
    fulton::intersection_at_origin(&fx, &fy)
}

/// Genus, number of ends and Euler characteristic of an absolutely
/// irreducible curve.
pub fn component_topology(g: &Poly) -> Result<Topology> {
    let g = prepare(g)?;
    let fac = g.factor()?;
    if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
        return Err(Error::InvalidArgument(format!("`{g}` is not irreducible over the rationals")));
    }
    if !points::absolutely_irreducible(&g)? {
        return Err(Error::NotAbsolutelyIrreducible(g.to_string()));
    }
    topology_unchecked(&g)
}

pub(crate) fn topology_unchecked(g: &Poly) -> Result<Topology> {
    let d = g.total_degree() as i64;
    let mut delta_sum: i64 = 0;
    let mut branch_excess: i64 = 0;
    for o in singular_orbits(g)? {
        let loc = local::at_point(g, &o.px, &o.py)?;
        delta_sum += loc.delta() as i64 * o.size() as i64;
        branch_excess += (loc.branch_count() as i64 - 1) * o.size() as i64;
    }
    let mut ends: i64 = 0;
    for (ip, loc) in infinity_data(g)? {
        delta_sum += loc.delta() as i64 * ip.count() as i64;
        ends += loc.branch_count() as i64 * ip.count() as i64;
    }
    let genus = (d - 1) * (d - 2) / 2 - delta_sum;
    assert!(genus >= 0, "negative genus for {g}");
    Ok(Topology { genus: genus as u64, ends: ends as u32, euler_characteristic: 2 - 2 * genus - ends - branch_excess })
}

fn lne_local(loc: &Local) -> bool {
    let lines: u32 = local::line_classes(loc).iter().map(|c| c.count).sum();
    lines == loc.n()
}

/// Local criterion: as many distinct tangent lines as the multiplicity.
pub fn is_lne_at(f: &Poly, x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<bool> {
    let f = prepare_squarefree(f)?;
    Ok(lne_local(&local_at(&f, x, y)?.0))
}

/// Criterion at infinity: as many distinct directions as the degree.
pub fn is_lne_at_infinity(f: &Poly) -> Result<bool> {
    let f = prepare_squarefree(f)?;
    let dirs: u32 = infinity_points(&f)?.iter().map(|ip| ip.count()).sum();
    Ok(dirs == f.total_degree())
}

/// Whether a rationally irreducible curve is irreducible over the complex
/// numbers.
pub fn is_absolutely_irreducible(g: &Poly) -> Result<bool> {
    points::absolutely_irreducible(&prepare(g)?)
}

/// Whether the curve (which must be connected) is Lipschitz normally embedded.
pub fn is_lne(f: &Poly) -> Result<bool> {
    let f = prepare_squarefree(f)?;
    let orbits = singular_orbits(&f)?;
    check_connected(&f, &orbits)?;
    for o in &orbits {
        if !lne_local(&local::at_point(&f, &o.px, &o.py)?) {
            return Ok(false);
        }
    }
    is_lne_at_infinity(&f)
}

/// Connectedness through shared points of the rational components. A
/// component that splits over the complex numbers is connected when its
/// pieces share a rational point and disconnected when it has no singular
/// point at all.
pub(crate) fn check_connected(f: &Poly, orbits: &[PointOrbit]) -> Result<()> {
    let comps = components(f)?;
    for g in &comps {
        if points::absolutely_irreducible(g)? {
            continue;
        }
        let own = singular_orbits(g)?;
        if own.is_empty() {
            return Err(Error::Disconnected);
        }
        if !own.iter().any(|o| o.k.is_rational()) {
            return Err(Error::NotAbsolutelyIrreducible(g.to_string()));
        }
    }
    let mut parent: Vec<usize> = (0..comps.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for o in orbits {
        let on: Vec<usize> = (0..comps.len()).filter(|&i| o.lies_on(&comps[i])).collect();
        for w in on.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let roots: BTreeMap<usize, ()> = (0..comps.len()).map(|i| (find(&mut parent, i), ())).collect();
    if roots.len() > 1 {
        return Err(Error::Disconnected);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algnum::isolate_roots;
    use crate::UPoly;

    fn p(s: &str) -> Poly {
        Poly::parse_xy(s).unwrap()
    }

    fn int(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_int(n)
    }

    fn o() -> (AlgebraicNumber, AlgebraicNumber) {
        (int(0), int(0))
    }

    fn branches(f: &Poly, x: &AlgebraicNumber, y: &AlgebraicNumber) -> u64 {
        let (loc, _) = local_at(f, x, y).unwrap();
        loc.branch_count() as u64
    }

    #[test]
    fn milnor_of_nodal_cubic() {
        let (x, y) = o();
        assert_eq!(milnor_number(&p("y^2 - x^2*(x + 1)"), &x, &y).unwrap(), 1);
    }

    #[test]
    fn milnor_matches_delta_and_branches() {
        // mu = 2 delta - r + 1, with mu from the polar intersection and delta
        // from the Puiseux expansion
        let (x, y) = o();
        for (s, mu) in [
            ("y^2 - x^3", 2),
            ("y^2 - x^2 - x^3", 1),
            ("y^2 - x^4", 3),
            ("y^3 - x^4", 6),
            ("y^3 - x^5", 8),
            ("(y^2 - x^3)*(y^2 + x^3)", 0),
            ("x*y*(x - y)*(x + y)", 9),
            ("(y^2 - x^3)^2 - x^7", 0),
            ("y^4 - 2*x^3*y^2 + x^6 - x^7", 0),
        ] {
            let f = p(s);
            let m = milnor_number(&f, &x, &y).unwrap();
            let d = delta_invariant(&f, &x, &y).unwrap();
            let r = branches(&f, &x, &y);
            assert_eq!(m, 2 * d + 1 - r, "{s}");
            if mu > 0 {
                assert_eq!(m, mu, "{s}");
            }
        }
    }

    #[test]
    fn smooth_point_has_zero_milnor() {
        assert_eq!(milnor_number(&p("y - x^2"), &int(1), &int(1)).unwrap(), 0);
        assert_eq!(milnor_number(&p("x"), &int(0), &int(5)).unwrap(), 0);
        assert!(matches!(milnor_number(&p("y - x^2"), &int(1), &int(2)), Err(Error::NotOnCurve)));
    }

    #[test]
    fn singular_points_rational_and_conjugate() {
        let pts = singular_points(&p("x*y*(x + y - 1)")).unwrap();
        let got: Vec<_> = pts.iter().map(|(a, b)| (a.as_rat().unwrap(), b.as_rat().unwrap())).collect();
        let r = |n| crate::arith::rat(n);
        assert_eq!(got, vec![(r(0), r(0)), (r(0), r(1)), (r(1), r(0))]);

        let pts = singular_points(&p("y^2 - (x^2 - 2)^3")).unwrap();
        assert_eq!(pts.len(), 2);
        let roots = isolate_roots(&UPoly::from_ints(&[-2, 0, 1])).unwrap();
        for (a, b) in &pts {
            assert!(b.is_zero());
            assert!(roots.iter().any(|r| r.equals(a)));
        }
        assert!(singular_points(&p("x^2 + y^2 - 1")).unwrap().is_empty());
    }

    #[test]
    fn cone_at_node_and_cusp() {
        let (x, y) = o();
        let at = Location::Point(x, y);
        let node = tangent_cone(&p("y^2 - x^2*(x + 1)"), &at).unwrap();
        assert_eq!(node.len(), 2);
        let slopes: Vec<i64> = node.iter().map(|l| l.direction.1.as_rat().unwrap().to_integer().try_into().unwrap()).collect();
        assert_eq!(slopes.iter().map(|s: &i64| s.abs()).collect::<Vec<_>>(), vec![1, 1]);
        assert!(node.iter().all(|l| l.multiplicity == 1));

        let cusp = tangent_cone(&p("y^2 - x^3"), &at).unwrap();
        assert_eq!(cusp.len(), 1);
        assert!(cusp[0].direction.1.is_zero());
        assert_eq!(cusp[0].multiplicity, 2);

        let vert = tangent_cone(&p("x^2 - y^3"), &at).unwrap();
        assert_eq!(vert.len(), 1);
        assert!(vert[0].direction.0.is_zero());
    }

    #[test]
    fn cone_with_conjugate_lines() {
        let (x, y) = o();
        let cone = tangent_cone(&p("x^2 + y^2 + x^3"), &Location::Point(x, y)).unwrap();
        assert_eq!(cone.len(), 2);
        for l in &cone {
            assert!(!l.direction.1.is_real());
        }
        assert!(cone[0].direction.1.equals(&cone[1].direction.1.conjugate()));
    }

    #[test]
    fn relative_multiplicities_at_point_and_infinity() {
        let (x, y) = o();
        let at = Location::Point(x, y);
        let prof = relative_multiplicities(&p("(y^2 - x^3)*(y - x^2)*(x - y)"), &at).unwrap();
        assert_eq!(prof.k_vector, vec![1, 1, 2]);
        assert_eq!(prof.per_line.len(), 2);

        let inf = relative_multiplicities(&p("y - x^2"), &Location::Infinity).unwrap();
        assert_eq!(inf.per_line.len(), 1);
        assert!(inf.per_line[0].direction.0.is_zero());
        assert_eq!(inf.k_vector, vec![2]);

        let hyp = relative_multiplicities(&p("x*y - 1"), &Location::Infinity).unwrap();
        assert_eq!(hyp.k_vector, vec![1, 1]);
    }

    #[test]
    fn degree_from_cone_at_infinity() {
        for s in [
            "y - x^2",
            "x*y - 1",
            "y^2 - x^3 + x",
            "x^2 + y^2 - 1",
            "y^3 - x^5 + x*y",
            "(x - y)^2*(x + y) + 1",
            "x^2*y^2 + x + y",
            "(y - x^2)^2 - x",
            "x^4 + y^4 + x*y + 1",
        ] {
            let f = p(s);
            assert_eq!(degree_via_cone(&f).unwrap(), degree(&f).unwrap(), "{s}");
        }
    }

    #[test]
    fn topology_of_simple_components() {
        let t = |s: &str| component_topology(&p(s)).unwrap();
        assert_eq!(t("y - x^2"), Topology { genus: 0, ends: 1, euler_characteristic: 1 });
        assert_eq!(t("y^2 - x^3"), Topology { genus: 0, ends: 1, euler_characteristic: 1 });
        assert_eq!(t("x^2 + y^2 - 1"), Topology { genus: 0, ends: 2, euler_characteristic: 0 });
        assert_eq!(t("x*y - 1"), Topology { genus: 0, ends: 2, euler_characteristic: 0 });
        assert_eq!(t("y^2 - x^3 + x"), Topology { genus: 1, ends: 1, euler_characteristic: -1 });
        assert_eq!(t("y - x^4"), Topology { genus: 0, ends: 1, euler_characteristic: 1 });
        // nodal cubic: two branches glued at the node
        assert_eq!(t("y^2 - x^2*(x + 1)"), Topology { genus: 0, ends: 1, euler_characteristic: 0 });
        // a smooth quartic with four ends has genus 3
        assert_eq!(t("x^4 + y^4 - 1"), Topology { genus: 3, ends: 4, euler_characteristic: -8 });
    }

    #[test]
    fn absolute_irreducibility() {
        let a = |s: &str| is_absolutely_irreducible(&p(s)).unwrap();
        assert!(a("x^2 + y^2 + 1"));
        assert!(a("y^2 - x^3"));
        assert!(a("x^4 + y^4 - 1"));
        assert!(!a("x^2 + y^2"));
        assert!(!a("(y - x^2)^2 + 1"));
        assert!(!a("x^2 - 2*y^2"));
        assert!(!a("(x*y - 1)^2 - 2"));
        assert!(matches!(component_topology(&p("x^2 + y^2")), Err(Error::NotAbsolutelyIrreducible(_))));
        assert!(matches!(component_topology(&p("x*y")), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn lne_criteria() {
        let l = |s: &str| is_lne(&p(s)).unwrap();
        assert!(l("x*y"));
        assert!(l("x^2 + y^2 - 1"));
        assert!(l("x*y*(x + y - 1)"));
        assert!(!l("y^2 - x^2*(x + 1)"));
        assert!(!l("y^2 - x^3"));
        assert!(!l("y - x^2"));
        assert!(l("x^2 + y^2"));
        assert!(l("x^2 - 2*y^2"));
        let (x, y) = o();
        assert!(!is_lne_at(&p("y^2 - x^3"), &x, &y).unwrap());
        assert!(is_lne_at(&p("x*y"), &x, &y).unwrap());
        assert!(!is_lne_at_infinity(&p("y - x^2")).unwrap());
        assert!(is_lne_at_infinity(&p("x*y - 1")).unwrap());
    }

    #[test]
    fn disconnected_curves_are_rejected() {
        assert!(matches!(is_lne(&p("x*(x - 1)")), Err(Error::Disconnected)));
        assert!(matches!(is_lne(&p("x^2 + 1")), Err(Error::Disconnected)));
        assert!(matches!(is_lne(&p("(x*y - 1)*(x*y - 2)")), Err(Error::Disconnected)));
        assert!(is_lne(&p("x*(x - 1)*y")).is_ok());
    }
}
