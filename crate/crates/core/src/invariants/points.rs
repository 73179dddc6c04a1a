//! Singular points as Galois orbits, components, and absolute irreducibility.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use crate::algnum::{embeddings, AlgebraicNumber, KPoly, Nf, NumberField};
use crate::error::{Error, Result};
use crate::poly::{BPoly, Poly};
use crate::puiseux::bipoly::BiPoly;
use crate::puiseux::local;
use crate::upoly::UPoly;
use crate::zfactor::{factor_upoly, irreducible_factors};
use crate::Rat;

/// A Galois orbit of points `(px, py)` with `Q(px, py) = k`.
#[derive(Clone, Debug)]
pub(crate) struct PointOrbit {
    pub k: Arc<NumberField>,
    pub px: Nf,
    pub py: Nf,
}

impl PointOrbit {
    pub fn size(&self) -> u32 {
        self.k.degree() as u32
    }

    /// Concrete points, each with the embedding of `k` realizing it.
    pub fn concrete(&self) -> Vec<((AlgebraicNumber, AlgebraicNumber), AlgebraicNumber)> {
        embeddings(&self.k)
            .into_iter()
            .map(|rho| ((AlgebraicNumber::embed(&self.px, &rho), AlgebraicNumber::embed(&self.py, &rho)), rho))
            .collect()
    }

    pub fn lies_on(&self, f: &Poly) -> bool {
        eval_poly(f, &self.px, &self.py).is_zero()
    }
}

pub(crate) fn eval_upoly(u: &UPoly, a: &Nf) -> Nf {
    let mut acc = Nf::zero(a.field());
    for c in u.coeffs().iter().rev() {
        acc = acc.mul(a).add(&Nf::from_rat(a.field(), c.clone()));
    }
    acc
}

pub(crate) fn eval_poly(f: &Poly, x: &Nf, y: &Nf) -> Nf {
    let k = x.field();
    let mut acc = Nf::zero(k);
    for (e, c) in f.terms() {
        acc = acc.add(&x.pow(e[0] as i64).mul(&y.pow(e[1] as i64)).scale(c));
    }
    acc
}

/// `b(α, y)` for `b ∈ Q[x][y]`.
fn specialize(b: &BPoly, alpha: &Nf) -> KPoly {
    KPoly::new(alpha.field(), b.coeffs().iter().map(|c| eval_upoly(c, alpha)).collect())
}

fn field_of(r: &UPoly) -> (Arc<NumberField>, Nf) {
    if r.deg() == 1 {
        let q = NumberField::rationals();
        let root = -r.coeff(0) / r.coeff(1);
        (q.clone(), Nf::from_rat(&q, root))
    } else {
        let k = NumberField::new(r);
        (k.clone(), Nf::generator(&k))
    }
}

/// Singular points of a squarefree curve, grouped into Galois orbits.
pub(crate) fn singular_orbits(f: &Poly) -> Result<Vec<PointOrbit>> {
    let b = f.to_bpoly();
    let content = b.content();
    let g = b.primitive_part();
    let mut xs: Vec<UPoly> = Vec::new();
    if g.deg_y() >= 1 {
        let r = crate::poly::resultant_y(&g, &g.d_y());
        xs.extend(irreducible_factors(&r));
    }
    if content.deg() >= 1 {
        for c in irreducible_factors(&content) {
            if !xs.contains(&c) {
                xs.push(c);
            }
        }
    }
    let (gx, gy) = (g.d_x(), g.d_y());
    let mut out = Vec::new();
    for r in xs {
        let (_, alpha) = field_of(&r);
        let ga = specialize(&g, &alpha);
        let on_vertical = eval_upoly(&content, &alpha).is_zero();
        let h = if on_vertical {
            ga
        } else {
            let t = KPoly::gcd(&ga, &specialize(&gx, &alpha));
            KPoly::gcd(&t, &specialize(&gy, &alpha))
        };
        if h.deg() == 0 {
            continue;
        }
        for (kf, _) in h.factor() {
            let ext = kf.extend();
            out.push(PointOrbit { k: ext.field.clone(), px: ext.map(&alpha), py: ext.root.clone() });
        }
    }
    Ok(out)
}

/// Irreducible rational components of a squarefree curve.
pub(crate) fn components(f: &Poly) -> Result<Vec<Poly>> {
    let fac = f.factor()?;
    Ok(fac.factors.into_iter().map(|(p, _)| p).collect())
}

fn is_homogeneous(g: &Poly) -> bool {
    let d = g.total_degree();
    g.terms().all(|(e, _)| e[0] + e[1] == d)
}

/// Degrees of the rational factors of `g(a, y)` for small integers `a`,
/// skipping non-squarefree or constant specializations.
fn fiber_degree_gcd(b: &BPoly, mut acc: u64) -> (u64, Option<(Rat, UPoly)>) {
    let mut smooth_fiber = None;
    for a in (0i64..12).flat_map(|k| [k, -k]).skip(1) {
        let a = Rat::from_integer(a.into());
        let u = b.eval_x(&a);
        if u.deg() == 0 || !u.is_squarefree() {
            continue;
        }
        let (_, facs) = factor_upoly(&u);
        for (p, _) in &facs {
            acc = acc.gcd(&(p.deg() as u64));
        }
        if smooth_fiber.is_none() {
            let best = facs.iter().map(|(p, _)| p.clone()).min_by_key(|p| p.deg()).unwrap();
            smooth_fiber = Some((a.clone(), best));
        }
        if acc == 1 {
            break;
        }
    }
    (acc, smooth_fiber)
}

/// Norm from `K[x, y]` to `Q[x, y]` via the determinant of multiplication.
fn norm_bivariate(h: &BiPoly) -> BPoly {
    let k = h.field().clone();
    let n = k.degree();
    let theta = Nf::generator(&k);
    let mut m: Vec<Vec<BPoly>> = Vec::with_capacity(n);
    for i in 0..n {
        let ti = theta.pow(i as i64);
        let mut row: Vec<Vec<(u32, u32, Rat)>> = vec![vec![]; n];
        for (&(a, b), c) in h.terms() {
            let v = c.mul(&ti);
            for (j, r) in v.poly().coeffs().iter().enumerate() {
                if !r.is_zero() {
                    row[j].push((a, b, r.clone()));
                }
            }
        }
        m.push(row.into_iter().map(BPoly::from_terms).collect());
    }
    bareiss(m)
}

fn bareiss(mut m: Vec<Vec<BPoly>>) -> BPoly {
    let n = m.len();
    let mut sign = false;
    let mut prev = BPoly::from_terms([(0, 0, Rat::from_integer(1.into()))]);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BPoly::new(vec![]);
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        BPoly::new(vec![]).sub(&d)
    } else {
        d
    }
}

/// Branch orbits centered at rational points, as `(size, coefficient field)`.
/// A smooth rational point yields a single orbit of size 1 and stops the
/// search.
fn rational_center_orbits(g: &Poly) -> Result<Vec<(u32, Arc<NumberField>)>> {
    let (gx, gy) = (g.derivative(0), g.derivative(1));
    for (b, swap) in [(g.to_bpoly(), false), (g.to_bpoly().transpose(), true)] {
        for a in -4i64..=4 {
            let a = Rat::from_integer(a.into());
            let u = b.eval_x(&a);
            if u.is_zero() {
                continue;
            }
            for (p, _) in factor_upoly(&u).1.iter().filter(|(p, _)| p.deg() == 1) {
                let r = -p.coeff(0) / p.coeff(1);
                let pt = if swap { [r, a.clone()] } else { [a.clone(), r] };
                if !gx.eval(&pt).is_zero() || !gy.eval(&pt).is_zero() {
                    return Ok(vec![(1, NumberField::rationals())]);
                }
            }
        }
    }
    let mut out = Vec::new();
    for o in singular_orbits(g)?.iter().filter(|o| o.k.is_rational()) {
        out.extend(local::at_point(g, &o.px, &o.py)?.orbits.iter().map(|b| (b.size, b.field.clone())));
    }
    for (ip, loc) in super::infinity_data(g)? {
        if ip.k.is_rational() {
            out.extend(loc.orbits.iter().map(|b| (b.size, b.field.clone())));
        }
    }
    Ok(out)
}

/// Decides whether a rationally irreducible curve stays irreducible over the
/// complex numbers.
///
/// The Galois group permutes the complex components transitively, so their
/// number divides the size of every Galois orbit of branches at a rational
/// center and the degree of every factor of a smooth rational fiber. A
/// component through a branch or point defined over `K` is defined over `K`,
/// so the last resort is Trager's test for irreducibility over such a `K`.
pub(crate) fn absolutely_irreducible(g: &Poly) -> Result<bool> {
    let d = g.total_degree();
    if d <= 1 {
        return Ok(true);
    }
    if is_homogeneous(g) {
        return Ok(false);
    }
    let orbits = rational_center_orbits(g)?;
    let b = g.to_bpoly();
    let mut acc = (b.deg_x() as u64).gcd(&(b.deg_y() as u64)).gcd(&(d as u64));
    for (size, _) in &orbits {
        acc = acc.gcd(&(*size as u64));
    }
    if acc == 1 {
        return Ok(true);
    }
    let (acc, fiber) = fiber_degree_gcd(&b, acc);
    if acc == 1 {
        return Ok(true);
    }
    let (acc, fiber2) = fiber_degree_gcd(&b.transpose(), acc);
    if acc == 1 {
        return Ok(true);
    }
    // the smallest field known to carry a component
    let branch_field = orbits.iter().filter(|(s, k)| k.degree() == *s as usize).min_by_key(|(s, _)| *s).map(|(_, k)| k.clone());
    let fiber_field = match (fiber, fiber2) {
        (Some((a, u)), _) => Some((false, a, u)),
        (None, Some((a, u))) => Some((true, a, u)),
        (None, None) => None,
    };
    let (g, k, beta, a) = match (branch_field, fiber_field) {
        (Some(k), f) if f.as_ref().is_none_or(|f| k.degree() <= f.2.deg()) => {
            let beta = Nf::generator(&k);
            (g.clone(), k, beta, Rat::zero())
        }
        (_, Some((swap, a, u))) => {
            let (k, beta) = field_of(&u.monic());
            (if swap { g.swap_xy() } else { g.clone() }, k, beta, a)
        }
        (_, None) => return Err(Error::NotAbsolutelyIrreducible(g.to_string())),
    };
    let one = Nf::one(&k);
    let zero = Nf::zero(&k);
    let ax = Nf::from_rat(&k, a);
    let swapped = g.swap_xy();
    for s in 1i64..20 {
        // Trager: when the norm of g(x + a, y - sβ) is squarefree its rational
        // factors match the factors of g over K
        let sb = beta.scale(&Rat::from_integer(s.into()));
        for h in [&g, &swapped] {
            let h = BiPoly::compose_rational(h, &BiPoly::linear(&one, &zero, &ax), &BiPoly::linear(&zero, &one, &sb.neg()));
            let np = Poly::from_bpoly(&norm_bivariate(&h), &["x", "y"]);
            if np.is_squarefree()? {
                return Ok(np.factor()?.factors.len() == 1);
            }
        }
    }
    Err(Error::NotAbsolutelyIrreducible(g.to_string()))
}
