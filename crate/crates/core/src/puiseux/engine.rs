//! Rational Newton-Puiseux expansion with Galois orbits kept together.
//!
//! Every node holds a polynomial `F(X, Y)` with `F(0, 0) = 0` and `X ∤ F`.
//! An edge of slope `m/q` and an irreducible factor of its characteristic
//! polynomial with root `ξ` lead to the child `F(λT^q, T^m(μ + Y1)) / T^l`,
//! where `λ = ξ^v`, `μ = ξ^u` and `uq - vm = 1`.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use super::bipoly::BiPoly;
use crate::algnum::{Extension, KPoly, Nf, NumberField};
use crate::error::{Error, Result};
use crate::Rat;

#[derive(Clone, Debug)]
pub(crate) struct Node {
    /// Number of roots `Y(X) → 0`, i.e. `ord_Y F(0, Y)`.
    pub n: u32,
    /// `Y` divides `F`, so `Y ≡ 0` is a root.
    pub y_zero: bool,
    pub edges: Vec<Edge>,
    /// The polynomial itself when `n == 1`.
    pub leaf: Option<BiPoly>,
}

#[derive(Clone, Debug)]
pub(crate) struct Edge {
    pub q: u32,
    pub m: u32,
    /// Vertical extent of the edge: the number of roots with valuation `m/q`.
    pub height: u32,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug)]
pub(crate) struct Factor {
    /// The monic irreducible factor of the edge polynomial.
    pub g: KPoly,
    pub d: u32,
    pub r: u32,
    pub ext: Extension,
    pub xi: Nf,
    pub lambda: Nf,
    pub mu: Nf,
    pub child: Node,
}

impl Edge {
    pub fn slope(&self) -> Rat {
        Rat::new(self.m.into(), self.q.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Edge(usize, usize),
    YZero,
}

/// Lower Newton polygon vertices from `(0, n)` down to the lowest row.
pub(crate) fn lower_hull(pts: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let jmin = pts.iter().map(|p| p.1).min().unwrap();
    let start = *pts.iter().filter(|p| p.0 == 0).min_by_key(|p| p.1).unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    while cur.1 > jmin {
        let mut best: Option<((u32, u32), Rat)> = None;
        for &p in pts {
            if p.1 >= cur.1 {
                continue;
            }
            let s = Rat::new((p.0 as i64 - cur.0 as i64).into(), ((cur.1 - p.1) as i64).into());
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

pub(crate) fn expand(f: &BiPoly) -> Result<Node> {
    expand_node(f, true)
}

fn expand_node(f: &BiPoly, root: bool) -> Result<Node> {
    let n = f.ord_y_at_x0().ok_or(Error::NonIsolated)?;
    if n == 0 || f.coeff(0, 0).is_some() {
        return Err(Error::NotOnCurve);
    }
    if n == 1 && !root {
        return Ok(Node { n, y_zero: false, edges: vec![], leaf: Some(f.clone()) });
    }
    let jmin = f.min_j();
    if jmin >= 2 {
        return Err(Error::NotSquarefree);
    }
    let mut rows: std::collections::BTreeMap<u32, u32> = Default::default();
    for (&(i, j), _) in f.terms() {
        if j <= n {
            let e = rows.entry(j).or_insert(i);
            *e = (*e).min(i);
        }
    }
    let pts: Vec<(u32, u32)> = rows.into_iter().map(|(j, i)| (i, j)).collect();
    let hull = lower_hull(&pts);
    let k = f.field().clone();
    let mut edges = Vec::new();
    for w in hull.windows(2) {
        let ((i0, j0), (i1, j1)) = (w[0], w[1]);
        let g = (i1 - i0).gcd(&(j0 - j1));
        let (m, q) = ((i1 - i0) / g, (j0 - j1) / g);
        let l = q * i0 + m * j0;
        let deg = ((j0 - j1) / q) as usize;
        let mut c = vec![Nf::zero(&k); deg + 1];
        for (&(i, j), a) in f.terms() {
            if q * i + m * j == l {
                c[((j - j1) / q) as usize] = a.clone();
            }
        }
        let phi = KPoly::new(&k, c);
        let v = (0..q).find(|v| (v * m + 1) % q == 0).unwrap();
        let u = (1 + v * m) / q;
        let mut factors = Vec::new();
        for (kf, r) in phi.factor() {
            let ext = kf.extend();
            let xi = ext.root.clone();
            let lambda = xi.pow(v as i64);
            let mu = xi.pow(u as i64);
            let f1 = f.map(&ext).duval_substitute(q, m, l, &lambda, &mu);
            let child = expand_node(&f1, false)?;
            debug_assert_eq!(child.n, r);
            factors.push(Factor { g: kf.g.clone(), d: kf.degree() as u32, r, ext, xi, lambda, mu, child });
        }
        edges.push(Edge { q, m, height: j0 - j1, factors });
    }
    Ok(Node { n, y_zero: jmin == 1, edges, leaf: None })
}

/// One Galois orbit of branches, with a parametrization of a representative
/// `X = lam T^e`, `Y = P(T) + c T^a Y_k`.
#[derive(Clone, Debug)]
pub(crate) struct Orbit {
    pub path: Vec<Step>,
    pub size: u32,
    pub e: u32,
    pub field: Arc<NumberField>,
    pub lam: Nf,
    pub p: Vec<(u32, Nf)>,
    pub c: Nf,
    pub a: u32,
    /// Image of the base field generator in `field`.
    pub gen: Nf,
    /// The root `ξ` chosen at each edge step, as elements of `field`.
    pub xis: Vec<Nf>,
    /// `F_k` at the end of the path, or `None` when `Y_k ≡ 0`.
    pub rest: Option<BiPoly>,
}

impl Orbit {
    /// Computes further terms until the truncation exponent reaches `target`
    /// or the expansion becomes exact.
    pub fn extend_to(&mut self, target: u32) {
        while self.a < target {
            let Some(f) = self.rest.take() else { return };
            if f.min_j() >= 1 {
                return;
            }
            let i1 = f.terms().filter(|((_, j), _)| *j == 0).map(|((i, _), _)| *i).min().unwrap();
            let xi = f.coeff(i1, 0).unwrap().neg().div(f.coeff(0, 1).unwrap());
            self.p.push((self.a + i1, self.c.mul(&xi)));
            self.a += i1;
            let one = Nf::one(f.field());
            self.rest = Some(f.duval_substitute(1, i1, i1, &one, &xi));
        }
    }

    pub fn y_poly(&self) -> KPoly {
        let deg = self.p.iter().map(|t| t.0).max().unwrap_or(0) as usize;
        let mut c = vec![Nf::zero(&self.field); deg + 1];
        for (e, v) in &self.p {
            c[*e as usize] = c[*e as usize].add(v);
        }
        KPoly::new(&self.field, c)
    }

    pub fn is_exact(&self) -> bool {
        self.rest.is_none()
    }
}

pub(crate) fn orbits(root: &Node, base: &Arc<NumberField>) -> Vec<Orbit> {
    let mut out = Vec::new();
    let start = Orbit {
        path: vec![],
        size: 1,
        e: 1,
        field: base.clone(),
        lam: Nf::one(base),
        p: vec![],
        c: Nf::one(base),
        a: 0,
        gen: Nf::generator(base),
        xis: vec![],
        rest: None,
    };
    collect(root, start, &mut out);
    out
}

fn collect(node: &Node, cur: Orbit, out: &mut Vec<Orbit>) {
    if node.y_zero {
        let mut o = cur.clone();
        o.path.push(Step::YZero);
        out.push(o);
    }
    for (ei, e) in node.edges.iter().enumerate() {
        for (fi, fac) in e.factors.iter().enumerate() {
            let ext = &fac.ext;
            let lam = ext.map(&cur.lam);
            let c = ext.map(&cur.c);
            let mut p: Vec<(u32, Nf)> = cur
                .p
                .iter()
                .map(|(k, v)| (k * e.q, ext.map(v).mul(&fac.lambda.pow(*k as i64))))
                .collect();
            let ca = c.mul(&fac.lambda.pow(cur.a as i64));
            p.push((e.q * cur.a + e.m, ca.mul(&fac.mu)));
            let mut xis: Vec<Nf> = cur.xis.iter().map(|x| ext.map(x)).collect();
            xis.push(fac.xi.clone());
            let mut path = cur.path.clone();
            path.push(Step::Edge(ei, fi));
            let next = Orbit {
                path,
                size: cur.size * fac.d,
                e: cur.e * e.q,
                field: ext.field.clone(),
                lam: lam.mul(&fac.lambda.pow(cur.e as i64)),
                p,
                c: ca,
                a: e.q * cur.a + e.m,
                gen: ext.map(&cur.gen),
                xis,
                rest: None,
            };
            if fac.child.n == 1 {
                let mut leaf = next;
                leaf.rest = fac.child.leaf.clone();
                out.push(leaf);
            } else {
                collect(&fac.child, next, out);
            }
        }
    }
}

/// `Σ_{i≠j} v_X(y_i - y_j)` over all roots of the node.
pub(crate) fn pair_sum(node: &Node) -> Rat {
    let mut s = Rat::zero();
    for a in &node.edges {
        for b in &node.edges {
            let h = Rat::from_integer(((a.height * b.height) as i64).into());
            s += h * a.slope().min(b.slope());
        }
        let hs = Rat::from_integer((a.height as i64).into()) * a.slope();
        s -= hs.clone();
        if node.y_zero {
            s += hs * Rat::from_integer(2.into());
        }
        for f in &a.factors {
            if f.child.n > 1 {
                s += pair_sum(&f.child) * Rat::from_integer((f.d as i64).into());
            }
        }
    }
    s
}

/// `δ = (S - N + r) / 2`.
pub(crate) fn delta(node: &Node, orbits: &[Orbit]) -> u64 {
    let r: u32 = orbits.iter().map(|o| o.size).sum();
    let two_delta = pair_sum(node) - Rat::from_integer((node.n as i64).into()) + Rat::from_integer((r as i64).into());
    debug_assert!(two_delta.is_integer() && two_delta.to_integer().is_even());
    let v: i64 = (two_delta.to_integer() / 2i64).try_into().unwrap();
    v as u64
}
