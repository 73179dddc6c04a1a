//! Exact complex algebraic numbers and simple number fields.

mod field;
mod isolate;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{fmt_rat, Rat};
use crate::error::{Error, Result};
use crate::upoly::UPoly;
use crate::zfactor::irreducible_factors;

pub use field::{Extension, KFactor, KPoly, Nf, NumberField};
pub use isolate::RatBox;
pub(crate) use isolate::ival;

/// A complex algebraic number: an irreducible primitive integer polynomial and
/// a rational box isolating one of its roots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    minpoly: UPoly,
    bx: RatBox,
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rat() {
            Some(r) => write!(f, "{}", fmt_rat(&r)),
            None => write!(
                f,
                "root of {} in [{}, {}]x[{}, {}]",
                self.minpoly.display("t"),
                fmt_rat(&self.bx.re.0),
                fmt_rat(&self.bx.re.1),
                fmt_rat(&self.bx.im.0),
                fmt_rat(&self.bx.im.1)
            ),
        }
    }
}

impl AlgebraicNumber {
    pub fn from_rat(r: Rat) -> Self {
        AlgebraicNumber {
            minpoly: UPoly::new(vec![-r.clone(), Rat::from_integer(1.into())]).primitive_rat(),
            bx: RatBox::point(r, Rat::zero()),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(crate::arith::rat(n))
    }

    /// Builds the root of `p` lying in `bx`. `p` may be reducible; the factor
    /// with a root in the box is selected. Fails unless exactly one root of
    /// `p` lies in the box.
    pub fn from_poly_box(p: &UPoly, bx: RatBox) -> Result<Self> {
        if p.is_zero() || p.deg() == 0 {
            return Err(Error::InvalidArgument("polynomial has no roots".into()));
        }
        let sq = p.squarefree_part();
        let n = isolate::count_in_box(&sq, &bx)
            .ok_or_else(|| Error::InvalidArgument("root on box boundary".into()))?;
        if n != 1 && !(bx.width().is_zero() && sq.eval(&bx.re.0).is_zero() && bx.im.0.is_zero()) {
            return Err(Error::InvalidArgument(format!("box contains {n} roots")));
        }
        for f in irreducible_factors(&sq) {
            let inside = if bx.width().is_zero() {
                bx.im.0.is_zero() && f.eval(&bx.re.0).is_zero()
            } else {
                isolate::count_in_box(&f, &bx) == Some(1)
            };
            if inside {
                let minpoly = f.primitive_rat();
                let bx = if minpoly.deg() == 1 {
                    RatBox::point(-minpoly.coeff(0) / minpoly.coeff(1), Rat::zero())
                } else if bx.im.0.is_negative() && bx.im.1.is_positive() {
                    // shrink away from the real axis for nonreal roots
                    let mut b = bx;
                    while b.im.0.is_negative() && b.im.1.is_positive() {
                        b = isolate::refine_once(&minpoly, &b);
                    }
                    b
                } else {
                    bx
                };
                return Ok(AlgebraicNumber { minpoly, bx });
            }
        }
        Err(Error::InvalidArgument("no factor has a root in the box".into()))
    }

    pub fn minpoly(&self) -> &UPoly {
        &self.minpoly
    }

    pub fn bbox(&self) -> &RatBox {
        &self.bx
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        (self.minpoly.deg() == 1).then(|| -self.minpoly.coeff(0) / self.minpoly.coeff(1))
    }

    pub fn is_real(&self) -> bool {
        self.bx.is_real()
    }

    pub fn is_zero(&self) -> bool {
        self.as_rat().is_some_and(|r| r.is_zero())
    }

    /// A new representation whose box has width and height at most `width`.
    pub fn refine(&self, width: &Rat) -> Self {
        let mut b = self.bx.clone();
        while &b.width() > width {
            b = isolate::refine_once(&self.minpoly, &b);
        }
        AlgebraicNumber { minpoly: self.minpoly.clone(), bx: b }
    }

    fn refine_half(&self) -> Self {
        let w = self.bx.width() / Rat::from_integer(2.into());
        self.refine(&w)
    }

    /// Exact equality of the denoted complex numbers.
    pub fn equals(&self, o: &AlgebraicNumber) -> bool {
        if self.minpoly != o.minpoly {
            return false;
        }
        if let (Some(a), Some(b)) = (self.as_rat(), o.as_rat()) {
            return a == b;
        }
        if self.is_real() != o.is_real() {
            return false;
        }
        if !self.is_real() && self.bx.im.0.is_positive() != o.bx.im.0.is_positive() {
            return false;
        }
        let sep = isolate::separation_bound(&self.minpoly) / Rat::from_integer(4.into());
        let (mut a, mut b) = (self.clone(), o.clone());
        loop {
            let Some(inter) = a.bx.intersection(&b.bx) else {
                return false;
            };
            if isolate::count_in_box(&self.minpoly, &inter) == Some(1) {
                return true;
            }
            if a.bx.width() < sep && b.bx.width() < sep {
                return true;
            }
            a = a.refine_half();
            b = b.refine_half();
        }
    }

    pub fn conjugate(&self) -> Self {
        AlgebraicNumber { minpoly: self.minpoly.clone(), bx: self.bx.conjugate() }
    }

    /// A deterministic total order (for output): rationals first, then by degree,
    /// minimal polynomial, and position of the isolating box after refinement.
    pub fn cmp_canonical(&self, o: &AlgebraicNumber) -> Ordering {
        if self.equals(o) {
            return Ordering::Equal;
        }
        match (self.as_rat(), o.as_rat()) {
            (Some(a), Some(b)) => return a.cmp(&b),
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            _ => {}
        }
        let c = self
            .degree()
            .cmp(&o.degree())
            .then_with(|| self.minpoly.coeffs().iter().rev().cmp(o.minpoly.coeffs().iter().rev()));
        if c != Ordering::Equal {
            return c;
        }
        // same minimal polynomial, distinct roots: refine until boxes separate
        let (mut a, mut b) = (self.clone(), o.clone());
        loop {
            if a.bx.re.1 < b.bx.re.0 {
                return Ordering::Less;
            }
            if b.bx.re.1 < a.bx.re.0 {
                return Ordering::Greater;
            }
            if a.bx.im.1 < b.bx.im.0 {
                return Ordering::Less;
            }
            if b.bx.im.1 < a.bx.im.0 {
                return Ordering::Greater;
            }
            a = a.refine_half();
            b = b.refine_half();
        }
    }

    pub fn to_json(&self) -> Value {
        match self.as_rat() {
            Some(r) => Value::String(fmt_rat(&r)),
            None => json!({
                "minpoly": self.minpoly.display("t"),
                "box": [
                    [fmt_rat(&self.bx.re.0), fmt_rat(&self.bx.re.1)],
                    [fmt_rat(&self.bx.im.0), fmt_rat(&self.bx.im.1)]
                ],
            }),
        }
    }

    /// Value of the field element `a` when the generator of its field is sent
    /// to `theta` (a root of the field's defining polynomial).
    pub fn embed(a: &Nf, theta: &AlgebraicNumber) -> AlgebraicNumber {
        if let Some(r) = a.as_rat() {
            return AlgebraicNumber::from_rat(r);
        }
        let mp = a.minpoly();
        let roots: Vec<AlgebraicNumber> = isolate::isolate_irreducible(&mp)
            .into_iter()
            .map(|bx| AlgebraicNumber { minpoly: mp.primitive_rat(), bx })
            .collect();
        let mut th = theta.clone();
        let mut cands = roots;
        loop {
            let val = ival::eval(a.poly(), &th.bx);
            cands.retain(|r| r.bx.intersects(&val));
            if cands.len() == 1 {
                return cands.pop().unwrap();
            }
            assert!(!cands.is_empty(), "interval evaluation lost the value");
            th = th.refine_half();
            cands = cands.iter().map(|r| r.refine_half()).collect();
        }
    }
}

/// One algebraic number per distinct complex root of a squarefree polynomial.
pub fn isolate_roots(p: &UPoly) -> Result<Vec<AlgebraicNumber>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let mut out = Vec::new();
    for f in irreducible_factors(p) {
        let mp = f.primitive_rat();
        for bx in isolate::isolate_irreducible(&mp) {
            out.push(AlgebraicNumber { minpoly: mp.clone(), bx });
        }
    }
    // make boxes of different factors pairwise disjoint
    loop {
        let mut changed = false;
        for i in 0..out.len() {
            for j in i + 1..out.len() {
                if out[i].bx.intersects(&out[j].bx) {
                    out[i] = out[i].refine_half();
                    out[j] = out[j].refine_half();
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    out.sort_by(|a, b| {
        (a.bx.re.0.clone(), a.bx.im.0.clone()).cmp(&(b.bx.re.0.clone(), b.bx.im.0.clone()))
    });
    Ok(out)
}

/// All concrete embeddings of `field`: one algebraic number per root of its
/// defining polynomial.
pub fn embeddings(field: &NumberField) -> Vec<AlgebraicNumber> {
    let mp = field.minpoly().primitive_rat();
    isolate::isolate_irreducible(&mp).into_iter().map(|bx| AlgebraicNumber { minpoly: mp.clone(), bx }).collect()
}

/// The distinct roots of `h^σ`, where `σ` sends the generator of the
/// coefficient field to `theta`.
pub fn concrete_roots(h: &KPoly, theta: &AlgebraicNumber) -> Vec<AlgebraicNumber> {
    if h.deg() == 0 {
        return vec![];
    }
    let hs = h.div_exact(&KPoly::gcd(h, &h.derivative())).expect("gcd divides");
    if let Some(u) = hs.to_upoly() {
        return isolate_roots(&u).expect("squarefree");
    }
    let want = hs.deg();
    let norm = hs.norm().squarefree_part();
    let mut cands = isolate_roots(&norm).expect("squarefree");
    let mut th = theta.clone();
    loop {
        let coeffs: Vec<RatBox> = hs.coeffs().iter().map(|c| ival::eval(c.poly(), &th.bx)).collect();
        cands.retain(|z| {
            let mut acc = RatBox::point(Rat::zero(), Rat::zero());
            for c in coeffs.iter().rev() {
                acc = ival::add(&ival::mul(&acc, &z.bx), c);
            }
            acc.contains_zero()
        });
        if cands.len() == want {
            return cands;
        }
        assert!(cands.len() > want, "lost a root while filtering");
        th = th.refine_half();
        cands = cands.iter().map(|z| z.refine_half()).collect();
    }
}

/// Roots of the defining polynomial of `field` that send `gen` (an element of
/// `field`) to `target`.
pub fn embeddings_over(field: &NumberField, gen: &Nf, target: &AlgebraicNumber) -> Vec<AlgebraicNumber> {
    embeddings(field).into_iter().filter(|r| AlgebraicNumber::embed(gen, r).equals(target)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn boxed(re: (i64, i64, i64), im: (i64, i64, i64)) -> RatBox {
        RatBox { re: (ratio(re.0, re.2), ratio(re.1, re.2)), im: (ratio(im.0, im.2), ratio(im.1, im.2)) }
    }

    #[test]
    fn isolate_examples() {
        let r = isolate_roots(&UPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|a| !a.is_real()));
        let r = isolate_roots(&UPoly::from_ints(&[-3, 1])).unwrap();
        assert_eq!(r[0].as_rat(), Some(crate::arith::rat(3)));
        let r = isolate_roots(&UPoly::from_ints(&[0, -1, 0, 1])).unwrap();
        let vals: Vec<Rat> = r.iter().map(|a| a.as_rat().unwrap()).collect();
        assert_eq!(vals, vec![crate::arith::rat(-1), crate::arith::rat(0), crate::arith::rat(1)]);
        assert_eq!(isolate_roots(&UPoly::from_ints(&[1, 2, 1])), Err(Error::NotSquarefree));
    }

    #[test]
    fn refine_sqrt2() {
        let a = AlgebraicNumber::from_poly_box(&UPoly::from_ints(&[-2, 0, 1]), boxed((1, 2, 1), (0, 0, 1))).unwrap();
        let b = a.refine(&ratio(1, 100));
        assert!(b.bbox().width() <= ratio(1, 100));
        assert!(b.bbox().re.0 <= ratio(141421, 100000) && b.bbox().re.1 >= ratio(141422, 100000));
        let i = AlgebraicNumber::from_poly_box(&UPoly::from_ints(&[1, 0, 1]), boxed((-1, 1, 2), (1, 3, 2))).unwrap();
        let j = i.refine(&ratio(1, 1000));
        assert!(j.bbox().width() <= ratio(1, 1000));
        assert!(j.equals(&i));
    }

    #[test]
    fn equality_examples() {
        let p = UPoly::from_ints(&[-2, 0, 1]);
        let a = AlgebraicNumber::from_poly_box(&p, boxed((1, 2, 1), (0, 0, 1))).unwrap();
        let b = AlgebraicNumber::from_poly_box(&p, boxed((-2, -1, 1), (0, 0, 1))).unwrap();
        assert!(a.equals(&a.clone()));
        assert!(!a.equals(&b));
        let i1 = AlgebraicNumber::from_poly_box(&UPoly::from_ints(&[1, 0, 1]), boxed((-1, 1, 2), (1, 3, 2))).unwrap();
        let i2 = AlgebraicNumber::from_poly_box(&UPoly::from_ints(&[-1, 0, 0, 0, 1]), boxed((-1, 1, 3), (2, 4, 3))).unwrap();
        assert!(i1.equals(&i2));
        assert!(!i1.equals(&i1.conjugate()));
    }

    #[test]
    fn embedding_values() {
        // θ = i, a = θ + 1 -> 1 + i, whose minimal polynomial is t^2 - 2t + 2
        let k = NumberField::new(&UPoly::from_ints(&[1, 0, 1]));
        let a = Nf::new(&k, UPoly::from_ints(&[1, 1]));
        let thetas = embeddings(&k);
        let vals: Vec<AlgebraicNumber> = thetas.iter().map(|t| AlgebraicNumber::embed(&a, t)).collect();
        assert_eq!(vals[0].minpoly(), &UPoly::from_ints(&[2, -2, 1]));
        assert!(!vals[0].equals(&vals[1]));
        assert!(vals[0].equals(&vals[1].conjugate()));
    }
}
