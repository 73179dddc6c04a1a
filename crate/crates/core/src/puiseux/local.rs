//! Local expansion problems at affine points and at points at infinity.

use std::sync::Arc;

use super::bipoly::BiPoly;
use super::engine::{self, Node, Orbit, Step};
use crate::algnum::{KPoly, Nf, NumberField};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::Rat;

/// How the local coordinates `(X, Y)` of an expansion relate to the plane.
#[derive(Clone, Debug)]
pub(crate) enum Chart {
    /// `x = px + X - κY`, `y = py + Y`.
    Affine { px: Nf, py: Nf, kappa: i64 },
    /// Point `[1 : c : 0]`: `X = 1/x`, `Y = y/x - c`.
    InfX { c: Nf },
    /// Point `[0 : 1 : 0]`: `X = 1/y`, `Y = x/y`.
    InfY,
}

#[derive(Clone, Debug)]
pub(crate) struct Local {
    pub base: Arc<NumberField>,
    pub root: Node,
    pub chart: Chart,
    pub orbits: Vec<Orbit>,
}

impl Local {
    pub fn delta(&self) -> u64 {
        engine::delta(&self.root, &self.orbits)
    }

    pub fn branch_count(&self) -> u32 {
        self.orbits.iter().map(|o| o.size).sum()
    }

    /// Multiplicity of the point (affine charts) or intersection number with
    /// the line at infinity (charts at infinity).
    pub fn n(&self) -> u32 {
        self.root.n
    }
}

fn build(base: &Arc<NumberField>, poly: BiPoly, chart: Chart) -> Result<Local> {
    let root = engine::expand(&poly)?;
    let orbits = engine::orbits(&root, base);
    Ok(Local { base: base.clone(), root, chart, orbits })
}

/// `f(px + u, py + v)` as a polynomial in `(u, v)`.
pub(crate) fn translate(f: &Poly, px: &Nf, py: &Nf) -> BiPoly {
    let k = px.field();
    let one = Nf::one(k);
    let zero = Nf::zero(k);
    BiPoly::compose_rational(f, &BiPoly::linear(&one, &zero, px), &BiPoly::linear(&zero, &one, py))
}

pub(crate) fn at_point(f: &Poly, px: &Nf, py: &Nf) -> Result<Local> {
    let k = px.field().clone();
    let f0 = translate(f, px, py);
    if f0.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f0.coeff(0, 0).is_some() {
        return Err(Error::NotOnCurve);
    }
    let one = Nf::one(&k);
    let kappa = (0i64..)
        .find(|c| !f0.lowest_form_at(&Nf::from_rat(&k, Rat::from_integer((-c).into())), &one).is_zero())
        .unwrap();
    let poly = if kappa == 0 {
        f0
    } else {
        let zero = Nf::zero(&k);
        let mk = Nf::from_rat(&k, Rat::from_integer((-kappa).into()));
        let lx = BiPoly::linear(&one, &mk, px);
        let ly = BiPoly::linear(&zero, &one, py);
        BiPoly::compose_rational(f, &lx, &ly)
    };
    build(&k, poly, Chart::Affine { px: px.clone(), py: py.clone(), kappa })
}

/// The curve in a chart around a point at infinity, as a polynomial in
/// `(X, Y)` vanishing at the origin.
pub(crate) fn chart_poly(f: &Poly, k: &Arc<NumberField>, chart: &Chart) -> BiPoly {
    let d = f.total_degree();
    let mut out = BiPoly::zero(k);
    match chart {
        Chart::InfX { c } => {
            let lin = KPoly::new(k, vec![c.clone(), Nf::one(k)]);
            for (e, a) in f.terms() {
                let (i, j) = (e[0], e[1]);
                let p = lin.pow(j);
                let a = Nf::from_rat(k, a.clone());
                for (b, cb) in p.coeffs().iter().enumerate() {
                    out.add_term(d - i - j, b as u32, cb.mul(&a));
                }
            }
        }
        Chart::InfY => {
            for (e, a) in f.terms() {
                out.add_term(d - e[0] - e[1], e[0], Nf::from_rat(k, a.clone()));
            }
        }
        Chart::Affine { .. } => unreachable!(),
    }
    out
}

pub(crate) fn at_infinity(f: &Poly, k: &Arc<NumberField>, chart: Chart) -> Result<Local> {
    let poly = chart_poly(f, k, &chart);
    build(k, poly, chart)
}

/// Direction data of a set of tangent lines that are conjugate over the base
/// field of an expansion.
#[derive(Clone, Debug)]
pub(crate) enum Dir {
    /// Lines `y = w x` for the roots `w` of the polynomial.
    Slopes(KPoly),
    Vertical,
}

#[derive(Clone, Debug)]
pub(crate) struct LineClass {
    pub dir: Dir,
    /// Number of conjugate lines in the class.
    pub count: u32,
    pub form_mult: u32,
    /// Multiplicities of the branches tangent to one line of the class.
    pub weights: Vec<u32>,
}

/// Tangent lines at an affine point, grouped into conjugacy classes.
pub(crate) fn line_classes(loc: &Local) -> Vec<LineClass> {
    let Chart::Affine { kappa, .. } = loc.chart else { unreachable!() };
    let k = &loc.base;
    let root = &loc.root;
    let mut out = Vec::new();
    let mut horizontal: Vec<u32> = Vec::new();
    let mut hmult = root.n;
    let first_is_tangent = root.edges.first().map(|e| e.q == 1 && e.m == 1).unwrap_or(false);
    if first_is_tangent {
        let edge = &root.edges[0];
        for (fi, fac) in edge.factors.iter().enumerate() {
            hmult -= fac.d * fac.r;
            let mut weights = Vec::new();
            for o in &loc.orbits {
                if o.path[0] == Step::Edge(0, fi) {
                    for _ in 0..o.size / fac.d {
                        weights.push(o.e);
                    }
                }
            }
            weights.sort_unstable();
            let xi = &fac.xi;
            // the root ξ gives the sheared direction (1, ξ), i.e. (1 - κξ, ξ)
            let dir = if fac.d == 1 && kappa != 0 && xi.as_rat() == Some(Rat::new(1.into(), kappa.into())) {
                Dir::Vertical
            } else {
                Dir::Slopes(slope_poly(&fac.g, kappa))
            };
            out.push(LineClass { dir, count: fac.d, form_mult: fac.r, weights });
        }
    }
    for o in &loc.orbits {
        let tangent_here = first_is_tangent && matches!(o.path[0], Step::Edge(0, _));
        if !tangent_here {
            for _ in 0..o.size {
                horizontal.push(o.e);
            }
        }
    }
    if hmult > 0 {
        horizontal.sort_unstable();
        let dir = Dir::Slopes(KPoly::new(k, vec![Nf::zero(k), Nf::one(k)]));
        out.push(LineClass { dir, count: 1, form_mult: hmult, weights: horizontal });
    }
    out
}

/// `(1 + κw)^n g(w / (1 + κw))`, whose roots are the slopes `ξ / (1 - κξ)`.
fn slope_poly(g: &KPoly, kappa: i64) -> KPoly {
    let k = g.field();
    let n = g.deg() as u32;
    let kk = Nf::from_rat(k, Rat::from_integer(kappa.into()));
    let lin = KPoly::new(k, vec![Nf::one(k), kk]);
    let w = KPoly::new(k, vec![Nf::zero(k), Nf::one(k)]);
    let mut out = KPoly::zero(k);
    for (i, c) in g.coeffs().iter().enumerate() {
        let t = w.pow(i as u32).mul(&lin.pow(n - i as u32)).scale(c);
        out = out.add(&t);
    }
    out
}
