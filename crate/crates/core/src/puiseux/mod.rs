//! Newton polygons and Puiseux branches at affine points and at infinity.

pub(crate) mod bipoly;
pub(crate) mod engine;
pub(crate) mod local;

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::algnum::{embeddings, embeddings_over, isolate_roots, AlgebraicNumber, KPoly, Nf, NumberField};
use crate::error::{Error, Result};
use crate::poly::{Part, Poly};
use crate::upoly::UPoly;
use crate::zfactor::factor_upoly;
use crate::Rat;
use engine::{Node, Step};
use local::{Chart, Local};

/// Where a Newton polygon is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Place {
    Origin,
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonEdge {
    pub start: (u32, u32),
    pub end: (u32, u32),
    /// `Δj / Δi` in the `(i, j)` exponent plane.
    pub slope: Rat,
    /// The terms of the polynomial lying on the edge.
    pub terms: Vec<((u32, u32), Rat)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(u32, u32)>,
    pub edges: Vec<NewtonEdge>,
}

/// Compact faces of `conv(S + R≥0²)` listed from left to right.
fn lower_faces(pts: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let start = *pts.iter().min().unwrap();
    let jmin = pts.iter().map(|p| p.1).min().unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    while cur.1 > jmin {
        let mut best: Option<((i64, i64), Rat)> = None;
        for &p in pts {
            if p.1 >= cur.1 {
                continue;
            }
            let s = Rat::new((p.0 - cur.0).into(), (cur.1 - p.1).into());
            let better = match &best {
                None => true,
                Some((bp, bs)) => s < *bs || (s == *bs && p.1 < bp.1),
            };
            if better {
                best = Some((p, s));
            }
        }
        cur = best.unwrap().0;
        hull.push(cur);
    }
    hull
}

/// The Newton polygon at the origin (compact faces of the Newton diagram) or
/// at infinity (outer faces of the Newton polytope with positive normals).
pub fn newton_polygon(f: &Poly, place: Place) -> Result<NewtonPolygon> {
    if f.nvars() > 2 {
        return Err(Error::TooManyVariables(f.nvars()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.with_vars(&["x", "y"]).unwrap_or_else(|_| f.clone());
    let sign = if place == Place::Origin { 1 } else { -1 };
    let pts: Vec<(i64, i64)> = f
        .terms()
        .map(|(e, _)| {
            let e0 = e.first().copied().unwrap_or(0) as i64;
            let e1 = e.get(1).copied().unwrap_or(0) as i64;
            (sign * e0, sign * e1)
        })
        .collect();
    let vertices: Vec<(u32, u32)> =
        lower_faces(&pts).iter().map(|p| ((sign * p.0) as u32, (sign * p.1) as u32)).collect();
    let mut edges = Vec::new();
    for w in vertices.windows(2) {
        let (a, b) = (w[0], w[1]);
        let di = b.0 as i64 - a.0 as i64;
        let dj = b.1 as i64 - a.1 as i64;
        let slope = Rat::new(dj.into(), di.into());
        let terms = f
            .terms()
            .filter_map(|(e, c)| {
                let p = (e.first().copied().unwrap_or(0), e.get(1).copied().unwrap_or(0));
                let cross = (p.0 as i64 - a.0 as i64) * dj - (p.1 as i64 - a.1 as i64) * di;
                (cross == 0).then(|| (p, c.clone()))
            })
            .collect();
        edges.push(NewtonEdge { start: a, end: b, slope, terms });
    }
    Ok(NewtonPolygon { vertices, edges })
}

/// Where a branch is centered.
#[derive(Clone, Debug)]
pub enum Center {
    /// An affine point `(x, y)`.
    Affine(AlgebraicNumber, AlgebraicNumber),
    /// The point at infinity in direction `(a : b)`, normalized to `(1 : c)`
    /// or `(0 : 1)`.
    Infinity(AlgebraicNumber, AlgebraicNumber),
}

impl Center {
    pub fn same_as(&self, o: &Center) -> bool {
        match (self, o) {
            (Center::Affine(a, b), Center::Affine(c, d)) | (Center::Infinity(a, b), Center::Infinity(c, d)) => {
                a.equals(c) && b.equals(d)
            }
            _ => false,
        }
    }
}

/// Local coordinates a parametrization is expressed in.
#[derive(Clone, Debug)]
enum Frame {
    /// Offsets `x - px`, `y - py`.
    Affine { px: Nf, py: Nf },
    Chart(Chart),
}

#[derive(Clone)]
struct Link {
    run: Arc<Local>,
    orbit: usize,
    xis: Vec<AlgebraicNumber>,
}

/// Terms `(exponent, coefficient)` of a truncated series.
pub type Series = Vec<(u32, AlgebraicNumber)>;

/// One complex branch of a curve germ, with a truncated parametrization whose
/// coefficients live in a number field with a fixed complex embedding.
#[derive(Clone)]
pub struct PuiseuxBranch {
    pub center: Center,
    pub ramification_index: u32,
    /// Tangent direction `(1 : w)` or `(0 : 1)`.
    pub tangent: (AlgebraicNumber, AlgebraicNumber),
    /// The parametrization is correct up to and including this power of `t`.
    pub truncation_order: u32,
    /// The parametrization satisfies the equation identically.
    pub exact: bool,
    field: Arc<NumberField>,
    embedding: AlgebraicNumber,
    x_param: KPoly,
    y_param: KPoly,
    frame: Frame,
    link: Option<Link>,
}

impl fmt::Debug for PuiseuxBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PuiseuxBranch")
            .field("center", &self.center)
            .field("ramification_index", &self.ramification_index)
            .field("tangent", &self.tangent)
            .field("x", &self.x_param)
            .field("y", &self.y_param)
            .field("truncation_order", &self.truncation_order)
            .finish()
    }
}

fn rat_kpoly(k: &Arc<NumberField>, terms: &[(u32, Rat)]) -> KPoly {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0) as usize;
    let mut c = vec![Nf::zero(k); deg + 1];
    for (e, v) in terms {
        c[*e as usize] = c[*e as usize].add(&Nf::from_rat(k, v.clone()));
    }
    KPoly::new(k, c)
}

fn valuation(p: &KPoly) -> Option<u32> {
    p.coeffs().iter().position(|c| !c.is_zero()).map(|i| i as u32)
}

fn normalize_dir(a: &Nf, b: &Nf) -> (Nf, Nf) {
    let k = a.field();
    if a.is_zero() {
        (Nf::zero(k), Nf::one(k))
    } else {
        (Nf::one(k), b.div(a))
    }
}

impl PuiseuxBranch {
    /// A branch given by a rational parametrization
    /// `x = cx + Σ a_k t^k`, `y = cy + Σ b_k t^k`.
    pub fn from_rational(center: (Rat, Rat), x: &[(u32, Rat)], y: &[(u32, Rat)], truncation_order: u32) -> Result<Self> {
        let q = NumberField::rationals();
        let xp = rat_kpoly(&q, x);
        let yp = rat_kpoly(&q, y);
        let (vx, vy) = (valuation(&xp), valuation(&yp));
        let e = match (vx, vy) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return Err(Error::InvalidArgument("constant parametrization".into())),
        };
        if e == 0 {
            return Err(Error::InvalidArgument("parametrization must vanish at t = 0".into()));
        }
        let (ta, tb) = normalize_dir(&xp.coeff(e as usize), &yp.coeff(e as usize));
        let zero = AlgebraicNumber::from_int(0);
        Ok(PuiseuxBranch {
            center: Center::Affine(AlgebraicNumber::from_rat(center.0.clone()), AlgebraicNumber::from_rat(center.1.clone())),
            ramification_index: e,
            tangent: (AlgebraicNumber::embed(&ta, &zero), AlgebraicNumber::embed(&tb, &zero)),
            truncation_order,
            exact: false,
            field: q.clone(),
            embedding: zero,
            x_param: xp,
            y_param: yp,
            frame: Frame::Affine { px: Nf::from_rat(&q, center.0), py: Nf::from_rat(&q, center.1) },
            link: None,
        })
    }

    /// Terms `(exponent, coefficient)` of the two coordinate series, in the
    /// local coordinates of the center.
    pub fn param_terms(&self) -> (Series, Series) {
        let conv = |p: &KPoly| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, AlgebraicNumber::embed(c, &self.embedding)))
                .collect()
        };
        (conv(&self.x_param), conv(&self.y_param))
    }
}

/// A number field containing both coordinates of a point, with the
/// coordinates as field elements and the embedding realizing the point.
pub(crate) struct PointField {
    pub px: Nf,
    pub py: Nf,
    pub theta: AlgebraicNumber,
}

pub(crate) fn point_field(x: &AlgebraicNumber, y: &AlgebraicNumber) -> PointField {
    let (k1, a, th1) = match x.as_rat() {
        Some(r) => {
            let q = NumberField::rationals();
            (q.clone(), Nf::from_rat(&q, r), AlgebraicNumber::from_int(0))
        }
        None => {
            let k = NumberField::new(x.minpoly());
            (k.clone(), Nf::generator(&k), x.clone())
        }
    };
    if let Some(r) = y.as_rat() {
        return PointField { px: a, py: Nf::from_rat(&k1, r), theta: th1 };
    }
    let my = KPoly::from_upoly(&k1, y.minpoly());
    for kf in my.factor_squarefree() {
        let ext = kf.extend();
        for rho in embeddings(&ext.field) {
            let base_ok = AlgebraicNumber::embed(&ext.embed, &rho).equals(&th1) || k1.is_rational();
            if base_ok && AlgebraicNumber::embed(&ext.root, &rho).equals(y) {
                return PointField { px: ext.map(&a), py: ext.root.clone(), theta: rho };
            }
        }
    }
    unreachable!("some factor of the minimal polynomial vanishes at y")
}

fn truncation_target(o: &engine::Orbit) -> u32 {
    o.a + 2 * o.e + 2
}

fn concretize(run: &Arc<Local>, theta: &AlgebraicNumber, center: &Center) -> Vec<PuiseuxBranch> {
    let mut out = Vec::new();
    for (idx, orbit) in run.orbits.iter().enumerate() {
        let mut o = orbit.clone();
        o.extend_to(truncation_target(&o));
        let k = o.field.clone();
        let x_mono = {
            let mut c = vec![Nf::zero(&k); o.e as usize];
            c.push(o.lam.clone());
            KPoly::new(&k, c)
        };
        let y = o.y_poly();
        let (x_param, frame) = match &run.chart {
            Chart::Affine { px, py, kappa } => {
                let kk = Nf::from_rat(&k, Rat::from_integer((*kappa).into()));
                let x = x_mono.sub(&y.scale(&kk));
                (x, Frame::Affine { px: px.map_into(&o.gen), py: py.map_into(&o.gen) })
            }
            Chart::InfX { c } => (x_mono.clone(), Frame::Chart(Chart::InfX { c: c.map_into(&o.gen) })),
            Chart::InfY => (x_mono.clone(), Frame::Chart(Chart::InfY)),
        };
        let (ta, tb) = match &run.chart {
            Chart::Affine { .. } => {
                let e = o.e as usize;
                normalize_dir(&x_param.coeff(e), &y.coeff(e))
            }
            _ => (Nf::zero(&k), Nf::zero(&k)),
        };
        for rho in embeddings_over(&k, &o.gen, theta) {
            let tangent = match center {
                Center::Affine(..) => (AlgebraicNumber::embed(&ta, &rho), AlgebraicNumber::embed(&tb, &rho)),
                Center::Infinity(a, b) => (a.clone(), b.clone()),
            };
            let xis = o.xis.iter().map(|x| AlgebraicNumber::embed(x, &rho)).collect();
            out.push(PuiseuxBranch {
                center: center.clone(),
                ramification_index: o.e,
                tangent,
                truncation_order: o.a,
                exact: o.is_exact(),
                field: k.clone(),
                embedding: rho,
                x_param: x_param.clone(),
                y_param: y.clone(),
                frame: frame.clone(),
                link: Some(Link { run: run.clone(), orbit: idx, xis }),
            });
        }
    }
    out
}

fn check_curve(f: &Poly) -> Result<Poly> {
    if f.nvars() > 2 {
        return Err(Error::TooManyVariables(f.nvars()));
    }
    let f = f.with_vars(&["x", "y"])?;
    f.check_nonconstant()?;
    Ok(f)
}

/// Branches of `f = 0` at the affine point `(x, y)`.
pub fn branches_at(f: &Poly, x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<Vec<PuiseuxBranch>> {
    let f = check_curve(f)?;
    let pf = point_field(x, y);
    let run = Arc::new(local::at_point(&f, &pf.px, &pf.py)?);
    Ok(concretize(&run, &pf.theta, &Center::Affine(x.clone(), y.clone())))
}

/// A point at infinity together with its Galois orbit.
#[derive(Clone, Debug)]
pub(crate) struct InfPoint {
    pub k: Arc<NumberField>,
    pub chart: Chart,
    /// Defining polynomial of the direction slopes `c` (absent for `[0:1:0]`).
    pub slope_poly: Option<UPoly>,
    /// Multiplicity of the direction as a factor of the top form.
    pub mult: u32,
}

impl InfPoint {
    pub fn count(&self) -> u32 {
        self.slope_poly.as_ref().map(|p| p.deg() as u32).unwrap_or(1)
    }

    /// Concrete directions with the matching embedding of `k`.
    pub fn concrete(&self) -> Vec<((AlgebraicNumber, AlgebraicNumber), AlgebraicNumber)> {
        match (&self.chart, &self.slope_poly) {
            (Chart::InfY, _) => vec![((AlgebraicNumber::from_int(0), AlgebraicNumber::from_int(1)), AlgebraicNumber::from_int(0))],
            (Chart::InfX { .. }, Some(p)) => {
                let roots = isolate_roots(p).expect("irreducible");
                roots
                    .into_iter()
                    .map(|r| {
                        let theta = if self.k.is_rational() { AlgebraicNumber::from_int(0) } else { r.clone() };
                        ((AlgebraicNumber::from_int(1), r), theta)
                    })
                    .collect()
            }
            _ => unreachable!(),
        }
    }
}

pub(crate) fn infinity_points(f: &Poly) -> Result<Vec<InfPoint>> {
    let top = f.homogeneous_part(Part::Highest)?;
    let d = f.total_degree();
    let mut h = vec![Rat::zero(); d as usize + 1];
    for (e, c) in top.terms() {
        h[e[1] as usize] = c.clone();
    }
    let h = UPoly::new(h);
    let mut out = Vec::new();
    let (_, facs) = factor_upoly(&h);
    for (g, m) in facs {
        let g = g.monic();
        if g.deg() == 1 {
            let q = NumberField::rationals();
            let c = Nf::from_rat(&q, -g.coeff(0));
            out.push(InfPoint { k: q, chart: Chart::InfX { c }, slope_poly: Some(g), mult: m });
        } else {
            let k = NumberField::new(&g);
            out.push(InfPoint { k: k.clone(), chart: Chart::InfX { c: Nf::generator(&k) }, slope_poly: Some(g), mult: m });
        }
    }
    let vm = d - h.deg() as u32;
    if vm > 0 {
        out.push(InfPoint { k: NumberField::rationals(), chart: Chart::InfY, slope_poly: None, mult: vm });
    }
    Ok(out)
}

/// Ends of `f = 0`: the branches at its points at infinity.
pub fn branches_at_infinity(f: &Poly) -> Result<Vec<PuiseuxBranch>> {
    let f = check_curve(f)?;
    let mut out = Vec::new();
    for ip in infinity_points(&f)? {
        let run = Arc::new(local::at_infinity(&f, &ip.k, ip.chart.clone())?);
        for (dir, theta) in ip.concrete() {
            out.extend(concretize(&run, &theta, &Center::Infinity(dir.0, dir.1)));
        }
    }
    Ok(out)
}

/// Branches of the union of several curves at one point, each tagged with the
/// index of the curve containing it. Contact orders and intersection numbers
/// between these branches are available because they share one expansion.
pub fn branches_at_curves(fs: &[Poly], x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<Vec<(usize, PuiseuxBranch)>> {
    let fs: Vec<Poly> = fs.iter().map(check_curve).collect::<Result<_>>()?;
    let mut g = fs[0].clone();
    for f in &fs[1..] {
        g = &g * f;
    }
    let bound: u32 = fs.iter().map(|f| f.total_degree()).sum::<u32>().pow(2) + 1;
    let pf = point_field(x, y);
    let run = Arc::new(local::at_point(&g, &pf.px, &pf.py)?);
    let mut run_deep = Local::clone(&run);
    for o in run_deep.orbits.iter_mut() {
        o.extend_to(bound.max(truncation_target(o)));
    }
    let run_deep = Arc::new(run_deep);
    let branches = concretize(&run_deep, &pf.theta, &Center::Affine(x.clone(), y.clone()));
    let mut out = Vec::new();
    for b in branches {
        let mut best = (0usize, 0u32);
        for (i, f) in fs.iter().enumerate() {
            let v = branch_valuation(f, &b)?.unwrap_or(u32::MAX);
            if v > best.1 {
                best = (i, v);
            }
        }
        out.push((best.0, b));
    }
    Ok(out)
}

/// `ord_t f(x(t), y(t))` along the parametrization, `None` if identically zero.
fn branch_valuation(f: &Poly, b: &PuiseuxBranch) -> Result<Option<u32>> {
    let f = check_curve(f)?;
    let poly = match &b.frame {
        Frame::Affine { px, py } => local::translate(&f, px, py),
        Frame::Chart(ch) => local::chart_poly(&f, &b.field, ch),
    };
    let v = poly.eval_polys(&b.x_param, &b.y_param);
    Ok(valuation(&v))
}

/// True if substituting the parametrization into `f` vanishes beyond the
/// truncation order.
pub fn verify_branch(f: &Poly, b: &PuiseuxBranch) -> Result<bool> {
    Ok(match branch_valuation(f, b)? {
        None => true,
        Some(v) => v > b.truncation_order,
    })
}

/// A contact order, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(Rat),
    Infinite,
}

fn linked<'a>(b1: &'a PuiseuxBranch, b2: &'a PuiseuxBranch) -> Result<(&'a Link, &'a Link)> {
    if !b1.center.same_as(&b2.center) {
        return Err(Error::CentersDiffer);
    }
    match (&b1.link, &b2.link) {
        (Some(l1), Some(l2)) if Arc::ptr_eq(&l1.run, &l2.run) => Ok((l1, l2)),
        _ => Err(Error::DifferentExpansions),
    }
}

fn branch_roots(node: &Node, path: &[Step]) -> u32 {
    match path[0] {
        Step::YZero => 1,
        Step::Edge(e, k) => {
            let q = node.edges[e].q;
            if path.len() == 1 {
                q
            } else {
                q * branch_roots(&node.edges[e].factors[k].child, &path[1..])
            }
        }
    }
}

fn slope_of(node: &Node, s: Step) -> Option<Rat> {
    match s {
        Step::YZero => None,
        Step::Edge(e, _) => Some(node.edges[e].slope()),
    }
}

/// Contact order and intersection number of two concrete branches in `X`
/// units; `None` if they are the same branch.
fn concrete_pair(
    node: &Node,
    p1: &[Step],
    x1: &[AlgebraicNumber],
    p2: &[Step],
    x2: &[AlgebraicNumber],
) -> Option<(Rat, Rat)> {
    let r1 = Rat::from_integer(branch_roots(node, p1).into());
    let r2 = Rat::from_integer(branch_roots(node, p2).into());
    if let (Step::Edge(e1, k1), Step::Edge(e2, k2)) = (p1[0], p2[0]) {
        if e1 == e2 && k1 == k2 {
            let edge = &node.edges[e1];
            if !x1[0].equals(&x2[0]) {
                return Some((edge.slope(), r1 * r2 * edge.slope()));
            }
            if p1.len() == 1 || p2.len() == 1 {
                return None;
            }
            let (c, p) = concrete_pair(&edge.factors[k1].child, &p1[1..], &x1[1..], &p2[1..], &x2[1..])?;
            let q = Rat::from_integer(edge.q.into());
            return Some(((Rat::from_integer(edge.m.into()) + c) / q, r1 * r2 * edge.slope() + p));
        }
    }
    let s = match (slope_of(node, p1[0]), slope_of(node, p2[0])) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return None,
    };
    Some((s.clone(), r1 * r2 * s))
}

fn pair_of(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<Option<(Rat, Rat)>> {
    let (l1, l2) = linked(b1, b2)?;
    let run = &l1.run;
    let p1 = &run.orbits[l1.orbit].path;
    let p2 = &run.orbits[l2.orbit].path;
    Ok(concrete_pair(&run.root, p1, &l1.xis, p2, &l2.xis))
}

/// Order of contact of two branches with the same center.
pub fn contact_order(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<Order> {
    Ok(match pair_of(b1, b2)? {
        None => Order::Infinite,
        Some((c, _)) => Order::Finite(c),
    })
}

/// Local intersection number of two distinct branches with the same center.
pub fn intersection_multiplicity(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<u64> {
    match pair_of(b1, b2)? {
        None => Err(Error::EqualBranches),
        Some((_, p)) => {
            debug_assert!(p.is_integer());
            Ok(p.to_integer().try_into().expect("small intersection number"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn p(s: &str) -> Poly {
        Poly::parse_xy(s).unwrap()
    }

    fn origin() -> (AlgebraicNumber, AlgebraicNumber) {
        (AlgebraicNumber::from_int(0), AlgebraicNumber::from_int(0))
    }

    fn delta_at_origin(s: &str) -> u64 {
        let q = NumberField::rationals();
        let z = Nf::zero(&q);
        local::at_point(&p(s), &z, &z).unwrap().delta()
    }

    #[test]
    fn cusp_polygon() {
        let np = newton_polygon(&p("y^2 - x^3"), Place::Origin).unwrap();
        assert_eq!(np.edges.len(), 1);
        assert_eq!((np.edges[0].start, np.edges[0].end), ((0, 2), (3, 0)));
        assert_eq!(np.edges[0].slope, ratio(-2, 3));
    }

    #[test]
    fn parabola_polygon_at_infinity() {
        let np = newton_polygon(&p("y - x^2"), Place::Infinity).unwrap();
        assert_eq!(np.edges.len(), 1);
        assert_eq!((np.edges[0].start, np.edges[0].end), ((2, 0), (0, 1)));
    }

    #[test]
    fn monomial_has_no_compact_edge() {
        let np = newton_polygon(&p("x*y"), Place::Origin).unwrap();
        assert_eq!(np.vertices, vec![(1, 1)]);
        assert!(np.edges.is_empty());
    }

    #[test]
    fn cusp_branch() {
        let (x, y) = origin();
        let bs = branches_at(&p("y^2 - x^3"), &x, &y).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].ramification_index, 2);
        assert!(bs[0].exact);
        assert_eq!(bs[0].tangent.1.as_rat(), Some(rat(0)));
        assert!(verify_branch(&p("y^2 - x^3"), &bs[0]).unwrap());
    }

    #[test]
    fn node_branches() {
        let (x, y) = origin();
        let bs = branches_at(&p("x*y"), &x, &y).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.ramification_index == 1));
        assert_eq!(intersection_multiplicity(&bs[0], &bs[1]).unwrap(), 1);
        assert_eq!(contact_order(&bs[0], &bs[1]).unwrap(), Order::Finite(rat(1)));
        assert_eq!(contact_order(&bs[0], &bs[0]).unwrap(), Order::Infinite);
    }

    #[test]
    fn conjugate_lines() {
        let (x, y) = origin();
        let bs = branches_at(&p("x^2 + y^2"), &x, &y).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(!bs[0].tangent.1.equals(&bs[1].tangent.1));
        assert_eq!(intersection_multiplicity(&bs[0], &bs[1]).unwrap(), 1);
    }

    #[test]
    fn tangent_parabola_pair() {
        let (x, y) = origin();
        let bs = branches_at(&p("(y - x^2)*(y - x^3)"), &x, &y).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(contact_order(&bs[0], &bs[1]).unwrap(), Order::Finite(rat(2)));
        assert_eq!(intersection_multiplicity(&bs[0], &bs[1]).unwrap(), 2);
    }

    #[test]
    fn contacts_across_curves() {
        let (x, y) = origin();
        let bs = branches_at_curves(&[p("y - x^4"), p("y - x^2 - x^4")], &x, &y).unwrap();
        assert_eq!(bs.len(), 2);
        assert_ne!(bs[0].0, bs[1].0);
        assert_eq!(contact_order(&bs[0].1, &bs[1].1).unwrap(), Order::Finite(rat(2)));
        let bs = branches_at_curves(&[p("y - x^4"), p("y - x^3 - x^4")], &x, &y).unwrap();
        assert_eq!(contact_order(&bs[0].1, &bs[1].1).unwrap(), Order::Finite(rat(3)));
    }

    #[test]
    fn separate_expansions_are_rejected() {
        let (x, y) = origin();
        let a = branches_at(&p("y - x^4"), &x, &y).unwrap();
        let b = branches_at(&p("y - x^3"), &x, &y).unwrap();
        assert_eq!(contact_order(&a[0], &b[0]), Err(Error::DifferentExpansions));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_at_origin("y^2 - x^3"), 1);
        assert_eq!(delta_at_origin("x*y"), 1);
        assert_eq!(delta_at_origin("y^2 - x^4"), 2);
        assert_eq!(delta_at_origin("y^3 - x^4"), 3);
        assert_eq!(delta_at_origin("x^5 - y^5 + x^6"), 10);
        assert_eq!(delta_at_origin("(y^2 - x^3)*(y^2 - 2*x^3)"), 8);
        assert_eq!(delta_at_origin("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7"), 8);
    }

    #[test]
    fn ends() {
        let e = branches_at_infinity(&p("y - x^2")).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].ramification_index, 2);
        let e = branches_at_infinity(&p("x^2 + y^2 - 1")).unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.iter().all(|b| b.ramification_index == 1));
        let e = branches_at_infinity(&p("y^2 - x^3")).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].ramification_index, 3);
        let e = branches_at_infinity(&p("x*y - 1")).unwrap();
        assert_eq!(e.len(), 2);
        for b in &e {
            assert!(verify_branch(&p("x*y - 1"), b).unwrap());
        }
    }

    #[test]
    fn truncated_parametrization() {
        let f = p("y - x^2 - x^4");
        let b3 = PuiseuxBranch::from_rational((rat(0), rat(0)), &[(1, rat(1))], &[(2, rat(1))], 3).unwrap();
        let b4 = PuiseuxBranch::from_rational((rat(0), rat(0)), &[(1, rat(1))], &[(2, rat(1))], 4).unwrap();
        assert!(verify_branch(&f, &b3).unwrap());
        assert!(!verify_branch(&f, &b4).unwrap());
    }

    #[test]
    fn algebraic_center() {
        let f = p("y^2 - (x^2 - 2)^3");
        let roots = isolate_roots(&UPoly::from_ints(&[-2, 0, 1])).unwrap();
        let zero = AlgebraicNumber::from_int(0);
        for r in &roots {
            let bs = branches_at(&f, r, &zero).unwrap();
            assert_eq!(bs.len(), 1);
            assert_eq!(bs[0].ramification_index, 2);
            assert!(verify_branch(&f, &bs[0]).unwrap());
        }
    }
}
