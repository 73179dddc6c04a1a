//! Certified complex root isolation on rational rectangles.

use num_traits::{One, Signed, Zero};

use crate::arith::{ratio, Rat};
use crate::upoly::{cauchy_bound, count_real_roots, sign, UPoly};

/// Closed axis-aligned rectangle `[re.0, re.1] × [im.0, im.1]`; degenerate in
/// the imaginary direction for real numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatBox {
    pub re: (Rat, Rat),
    pub im: (Rat, Rat),
}

impl RatBox {
    pub fn point(re: Rat, im: Rat) -> Self {
        RatBox { re: (re.clone(), re), im: (im.clone(), im) }
    }

    pub fn width(&self) -> Rat {
        let w = &self.re.1 - &self.re.0;
        let h = &self.im.1 - &self.im.0;
        if w > h {
            w
        } else {
            h
        }
    }

    pub fn intersects(&self, o: &RatBox) -> bool {
        self.re.0 <= o.re.1 && o.re.0 <= self.re.1 && self.im.0 <= o.im.1 && o.im.0 <= self.im.1
    }

    pub fn intersection(&self, o: &RatBox) -> Option<RatBox> {
        if !self.intersects(o) {
            return None;
        }
        let mx = |a: &Rat, b: &Rat| if a > b { a.clone() } else { b.clone() };
        let mn = |a: &Rat, b: &Rat| if a < b { a.clone() } else { b.clone() };
        Some(RatBox {
            re: (mx(&self.re.0, &o.re.0), mn(&self.re.1, &o.re.1)),
            im: (mx(&self.im.0, &o.im.0), mn(&self.im.1, &o.im.1)),
        })
    }

    pub fn conjugate(&self) -> RatBox {
        RatBox { re: self.re.clone(), im: (-&self.im.1, -&self.im.0) }
    }

    pub fn is_real(&self) -> bool {
        self.im.0.is_zero() && self.im.1.is_zero()
    }

    pub fn contains_zero(&self) -> bool {
        self.re.0 <= Rat::zero() && self.re.1 >= Rat::zero() && self.im.0 <= Rat::zero() && self.im.1 >= Rat::zero()
    }
}

/// Complex rational interval arithmetic on rectangles.
pub(crate) mod ival {
    use super::RatBox;
    use crate::arith::Rat;

    fn rmul(a: &(Rat, Rat), b: &(Rat, Rat)) -> (Rat, Rat) {
        let p = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        (lo, hi)
    }

    fn radd(a: &(Rat, Rat), b: &(Rat, Rat)) -> (Rat, Rat) {
        (&a.0 + &b.0, &a.1 + &b.1)
    }

    fn rsub(a: &(Rat, Rat), b: &(Rat, Rat)) -> (Rat, Rat) {
        (&a.0 - &b.1, &a.1 - &b.0)
    }

    pub fn add(a: &RatBox, b: &RatBox) -> RatBox {
        RatBox { re: radd(&a.re, &b.re), im: radd(&a.im, &b.im) }
    }

    pub fn mul(a: &RatBox, b: &RatBox) -> RatBox {
        RatBox {
            re: rsub(&rmul(&a.re, &b.re), &rmul(&a.im, &b.im)),
            im: radd(&rmul(&a.re, &b.im), &rmul(&a.im, &b.re)),
        }
    }

    /// Encloses `p(z)` for all `z` in the box.
    pub fn eval(p: &crate::upoly::UPoly, z: &RatBox) -> RatBox {
        let mut acc = RatBox::point(Rat::default(), Rat::default());
        for c in p.coeffs().iter().rev() {
            acc = add(&mul(&acc, z), &RatBox::point(c.clone(), Rat::default()));
        }
        acc
    }
}

/// `p(z0 + s (z1 - z0))` split into real and imaginary parts in `Q[s]`.
fn edge_parts(p: &UPoly, z0: (&Rat, &Rat), z1: (&Rat, &Rat)) -> (UPoly, UPoly) {
    let zr = UPoly::new(vec![z0.0.clone(), z1.0 - z0.0]);
    let zi = UPoly::new(vec![z0.1.clone(), z1.1 - z0.1]);
    let (mut u, mut v) = (UPoly::zero(), UPoly::zero());
    for c in p.coeffs().iter().rev() {
        let nu = &(&(&u * &zr) - &(&v * &zi)) + &UPoly::constant(c.clone());
        let nv = &(&u * &zi) + &(&v * &zr);
        u = nu;
        v = nv;
    }
    (u, v)
}

/// Cauchy index of `v/u` on `[0, 1]`, or `None` if `u + iv` vanishes on the edge.
fn edge_index(u: &UPoly, v: &UPoly) -> Option<i64> {
    let g = UPoly::gcd(u, v);
    if g.deg() > 0 {
        let seq = g.sturm_sequence();
        if g.eval(&Rat::zero()).is_zero() || count_real_roots(&seq, &Rat::zero(), &Rat::one()) > 0 {
            return None;
        }
    }
    if v.is_zero() {
        return Some(0);
    }
    let mut seq = vec![u.clone(), v.clone()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    let var = |x: &Rat| crate::upoly::sign_variations(&seq, x) as i64;
    Some(var(&Rat::zero()) - var(&Rat::one()))
}

/// Number of roots of `p` in the open rectangle, or `None` if a root lies on
/// the boundary. The rectangle must be nondegenerate.
pub fn count_in_rect(p: &UPoly, bx: &RatBox) -> Option<usize> {
    let corners = [
        (&bx.re.0, &bx.im.0),
        (&bx.re.1, &bx.im.0),
        (&bx.re.1, &bx.im.1),
        (&bx.re.0, &bx.im.1),
    ];
    // rotate p by a constant so that no corner value is purely imaginary
    let rotations = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2)];
    let values: Vec<(Rat, Rat)> = corners
        .iter()
        .map(|(x, y)| {
            let (u, v) = edge_parts(p, (x, y), (x, y));
            (u.coeff(0), v.coeff(0))
        })
        .collect();
    if values.iter().any(|(a, b)| a.is_zero() && b.is_zero()) {
        return None;
    }
    let (ra, rb) = rotations
        .iter()
        .map(|&(a, b)| (Rat::from_integer(a.into()), Rat::from_integer(b.into())))
        .find(|(a, b)| values.iter().all(|(u, v)| !(a * u - b * v).is_zero()))
        .unwrap();
    let mut total = 0i64;
    for i in 0..4 {
        let (u, v) = edge_parts(p, corners[i], corners[(i + 1) % 4]);
        let ru = &u.scale(&ra) - &v.scale(&rb);
        let rv = &u.scale(&rb) + &v.scale(&ra);
        total += edge_index(&ru, &rv)?;
    }
    debug_assert!(total <= 0 && total % 2 == 0, "winding index {total}");
    Some((-total / 2) as usize)
}

/// Split points tried in order, as fractions of the interval.
fn split_fractions() -> impl Iterator<Item = Rat> {
    [(1, 2), (3, 7), (4, 7), (5, 11), (6, 11), (7, 17), (10, 17), (11, 23), (12, 23)]
        .into_iter()
        .map(|(a, b)| ratio(a, b))
        .chain((3..).map(|k: i64| ratio(k, 2 * k + 1)))
}

fn lerp(a: &Rat, b: &Rat, t: &Rat) -> Rat {
    a + (b - a) * t
}

/// Splits a rectangle into four with known root counts.
fn quadrisect(p: &UPoly, bx: &RatBox) -> Vec<(RatBox, usize)> {
    for t in split_fractions() {
        let xm = lerp(&bx.re.0, &bx.re.1, &t);
        let ym = lerp(&bx.im.0, &bx.im.1, &t);
        let parts = [
            RatBox { re: (bx.re.0.clone(), xm.clone()), im: (bx.im.0.clone(), ym.clone()) },
            RatBox { re: (xm.clone(), bx.re.1.clone()), im: (bx.im.0.clone(), ym.clone()) },
            RatBox { re: (bx.re.0.clone(), xm.clone()), im: (ym.clone(), bx.im.1.clone()) },
            RatBox { re: (xm.clone(), bx.re.1.clone()), im: (ym.clone(), bx.im.1.clone()) },
        ];
        let counts: Option<Vec<usize>> = parts.iter().map(|b| count_in_rect(p, b)).collect();
        if let Some(c) = counts {
            return parts.into_iter().zip(c).collect();
        }
    }
    unreachable!()
}

/// Real roots of an irreducible polynomial of degree ≥ 2 as isolating intervals.
fn isolate_real(p: &UPoly) -> Vec<(Rat, Rat)> {
    let seq = p.sturm_sequence();
    let b = Rat::from_integer(crate::arith::abs_ceil(&cauchy_bound(p)));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((a, c)) = stack.pop() {
        match count_real_roots(&seq, &a, &c) {
            0 => {}
            1 => out.push((a, c)),
            _ => {
                let m = (&a + &c) / Rat::from_integer(2.into());
                stack.push((m.clone(), c));
                stack.push((a, m));
            }
        }
    }
    out.sort();
    out
}

/// Upper half-plane roots of an irreducible polynomial.
fn isolate_upper(p: &UPoly, n_upper: usize) -> Vec<RatBox> {
    if n_upper == 0 {
        return vec![];
    }
    let b = Rat::from_integer(crate::arith::abs_ceil(&cauchy_bound(p)) + 1);
    let mut delta = Rat::one();
    let start = loop {
        let bx = RatBox { re: (-b.clone(), b.clone()), im: (delta.clone(), b.clone()) };
        match count_in_rect(p, &bx) {
            Some(c) if c == n_upper => break bx,
            Some(_) => delta /= Rat::from_integer(2.into()),
            None => delta *= ratio(3, 4),
        }
    };
    let mut out = Vec::new();
    let mut stack = vec![(start, n_upper)];
    while let Some((bx, c)) = stack.pop() {
        if c == 1 {
            out.push(bx);
            continue;
        }
        for (sub, k) in quadrisect(p, &bx) {
            if k > 0 {
                stack.push((sub, k));
            }
        }
    }
    out
}

/// Isolating boxes for all complex roots of an irreducible polynomial.
pub(crate) fn isolate_irreducible(p: &UPoly) -> Vec<RatBox> {
    if p.deg() == 1 {
        let r = -p.coeff(0) / p.coeff(1);
        return vec![RatBox::point(r, Rat::zero())];
    }
    let reals = isolate_real(p);
    let n_upper = (p.deg() - reals.len()) / 2;
    let mut out: Vec<RatBox> =
        reals.into_iter().map(|(a, c)| RatBox { re: (a, c), im: (Rat::zero(), Rat::zero()) }).collect();
    let upper = isolate_upper(p, n_upper);
    for bx in upper {
        out.push(bx.conjugate());
        out.push(bx);
    }
    out
}

/// Halves the box around the unique root it isolates.
pub(crate) fn refine_once(p: &UPoly, bx: &RatBox) -> RatBox {
    if bx.width().is_zero() {
        return bx.clone();
    }
    if bx.is_real() {
        let (a, c) = &bx.re;
        let m = (a + c) / Rat::from_integer(2.into());
        let sm = sign(&p.eval(&m));
        if sm == 0 {
            return RatBox::point(m, Rat::zero());
        }
        return if sign(&p.eval(a)) * sm < 0 {
            RatBox { re: (a.clone(), m), im: bx.im.clone() }
        } else {
            RatBox { re: (m, c.clone()), im: bx.im.clone() }
        };
    }
    quadrisect(p, bx).into_iter().find(|(_, k)| *k == 1).map(|(b, _)| b).expect("root stays isolated")
}

/// Roots of `p` in the closed box (real interval or proper rectangle),
/// `None` when undecided because a root sits on the boundary.
pub(crate) fn count_in_box(p: &UPoly, bx: &RatBox) -> Option<usize> {
    if bx.is_real() {
        if p.eval(&bx.re.0).is_zero() || p.eval(&bx.re.1).is_zero() {
            return None;
        }
        let seq = p.sturm_sequence();
        return Some(count_real_roots(&seq, &bx.re.0, &bx.re.1));
    }
    if bx.im.0 == bx.im.1 || bx.re.0 == bx.re.1 {
        return None;
    }
    count_in_rect(p, bx)
}

/// A lower bound on the distance between distinct roots.
pub(crate) fn separation_bound(p: &UPoly) -> Rat {
    let n = p.deg() as u32;
    let ints = p.to_primitive_ints();
    let norm1: crate::arith::Int = ints.iter().map(|c| c.abs()).sum();
    let e = (n + 3) / 2;
    let denom = num_traits::pow(crate::arith::Int::from(n.max(2)), e as usize)
        * num_traits::pow(norm1, n.saturating_sub(1) as usize);
    Rat::new(crate::arith::Int::one(), denom)
}
