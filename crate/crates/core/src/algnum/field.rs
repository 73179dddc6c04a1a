//! Simple algebraic extensions `Q(θ)` and polynomials over them.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::Rat;
use crate::poly::BPoly;
use crate::upoly::UPoly;
use crate::zfactor::irreducible_factors;

/// `Q[t] / (m(t))` with `m` monic irreducible. The rationals are the degree-one
/// field with `m = t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    minpoly: UPoly,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/({})", self.minpoly.display("t"))
    }
}

impl NumberField {
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField { minpoly: UPoly::x() })
    }

    /// `minpoly` must be irreducible; it is made monic.
    pub fn new(minpoly: &UPoly) -> Arc<Self> {
        Arc::new(NumberField { minpoly: minpoly.monic() })
    }

    pub fn minpoly(&self) -> &UPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }
}

/// An element of a number field, stored as a reduced polynomial in the generator.
#[derive(Clone)]
pub struct Nf {
    k: Arc<NumberField>,
    v: UPoly,
}

impl PartialEq for Nf {
    fn eq(&self, o: &Self) -> bool {
        self.v == o.v
    }
}

impl Eq for Nf {}

impl fmt::Debug for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.v.display("t"))
    }
}

impl Nf {
    pub fn new(k: &Arc<NumberField>, v: UPoly) -> Self {
        let v = if k.is_rational() { UPoly::constant(v.eval(&Rat::zero())) } else { v.reduce(&k.minpoly) };
        Nf { k: k.clone(), v }
    }

    pub fn from_rat(k: &Arc<NumberField>, r: Rat) -> Self {
        Nf { k: k.clone(), v: UPoly::constant(r) }
    }

    pub fn zero(k: &Arc<NumberField>) -> Self {
        Nf { k: k.clone(), v: UPoly::zero() }
    }

    pub fn one(k: &Arc<NumberField>) -> Self {
        Nf::from_rat(k, Rat::one())
    }

    /// The generator `θ`.
    pub fn generator(k: &Arc<NumberField>) -> Self {
        Nf::new(k, UPoly::x())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.k
    }

    pub fn poly(&self) -> &UPoly {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.v == UPoly::one()
    }

    /// `Some(r)` when the element is rational.
    pub fn as_rat(&self) -> Option<Rat> {
        (self.v.deg() == 0).then(|| self.v.coeff(0))
    }

    pub fn add(&self, o: &Nf) -> Nf {
        Nf { k: self.k.clone(), v: &self.v + &o.v }
    }

    pub fn sub(&self, o: &Nf) -> Nf {
        Nf { k: self.k.clone(), v: &self.v - &o.v }
    }

    pub fn neg(&self) -> Nf {
        Nf { k: self.k.clone(), v: -&self.v }
    }

    pub fn mul(&self, o: &Nf) -> Nf {
        if self.k.is_rational() {
            return Nf { k: self.k.clone(), v: &self.v * &o.v };
        }
        Nf { k: self.k.clone(), v: (&self.v * &o.v).reduce(&self.k.minpoly) }
    }

    pub fn scale(&self, r: &Rat) -> Nf {
        Nf { k: self.k.clone(), v: self.v.scale(r) }
    }

    pub fn inv(&self) -> Nf {
        assert!(!self.is_zero(), "inverse of zero");
        if let Some(r) = self.as_rat() {
            return Nf::from_rat(&self.k, r.recip());
        }
        let (g, s, _) = UPoly::xgcd(&self.v, &self.k.minpoly);
        debug_assert_eq!(g.deg(), 0);
        Nf::new(&self.k, s.scale(&g.coeff(0).recip()))
    }

    pub fn div(&self, o: &Nf) -> Nf {
        self.mul(&o.inv())
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Nf {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Nf::one(&self.k);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Image under the embedding that sends the generator of `self`'s field
    /// to `image` (an element of the target field).
    pub fn map_into(&self, image: &Nf) -> Nf {
        let mut acc = Nf::zero(&image.k);
        for c in self.v.coeffs().iter().rev() {
            acc = acc.mul(image).add(&Nf::from_rat(&image.k, c.clone()));
        }
        acc
    }

    /// Minimal polynomial over the rationals (monic).
    pub fn minpoly(&self) -> UPoly {
        let cp = self.charpoly();
        let facs = irreducible_factors(&cp);
        if facs.len() == 1 {
            return facs[0].clone();
        }
        // the minimal polynomial is the factor annihilating the element
        facs.into_iter()
            .find(|f| {
                let mut acc = Nf::zero(&self.k);
                for c in f.coeffs().iter().rev() {
                    acc = acc.mul(self).add(&Nf::from_rat(&self.k, c.clone()));
                }
                acc.is_zero()
            })
            .expect("some factor of the characteristic polynomial vanishes")
    }

    /// Characteristic polynomial `Res_t(m(t), z - a(t))`, monic of degree `[K:Q]`.
    pub fn charpoly(&self) -> UPoly {
        if self.k.is_rational() {
            return UPoly::new(vec![-self.v.coeff(0), Rat::one()]);
        }
        // BPoly in (x = z, y = t)
        let mut terms = vec![(1u32, 0u32, Rat::one())];
        for (j, c) in self.v.coeffs().iter().enumerate() {
            terms.push((0, j as u32, -c.clone()));
        }
        let h = BPoly::from_terms(terms);
        let m = BPoly::from_upoly_in_y(&self.k.minpoly);
        crate::poly::resultant_y(&m, &h).monic()
    }
}

/// Univariate polynomial over a number field, coefficients low degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct KPoly {
    k: Arc<NumberField>,
    c: Vec<Nf>,
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KPoly{:?}", self.c)
    }
}

impl KPoly {
    pub fn new(k: &Arc<NumberField>, mut c: Vec<Nf>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        KPoly { k: k.clone(), c }
    }

    pub fn from_upoly(k: &Arc<NumberField>, u: &UPoly) -> Self {
        KPoly::new(k, u.coeffs().iter().map(|r| Nf::from_rat(k, r.clone())).collect())
    }

    pub fn zero(k: &Arc<NumberField>) -> Self {
        KPoly { k: k.clone(), c: vec![] }
    }

    pub fn one(k: &Arc<NumberField>) -> Self {
        KPoly::new(k, vec![Nf::one(k)])
    }

    /// `z - a`.
    pub fn linear(a: &Nf) -> Self {
        KPoly::new(a.field(), vec![a.neg(), Nf::one(a.field())])
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.k
    }

    pub fn coeffs(&self) -> &[Nf] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Nf {
        self.c.get(i).cloned().unwrap_or_else(|| Nf::zero(&self.k))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Nf {
        self.coeff(self.deg())
    }

    pub fn add(&self, o: &KPoly) -> KPoly {
        let n = self.c.len().max(o.c.len());
        KPoly::new(&self.k, (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &KPoly) -> KPoly {
        let n = self.c.len().max(o.c.len());
        KPoly::new(&self.k, (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn mul(&self, o: &KPoly) -> KPoly {
        if self.is_zero() || o.is_zero() {
            return KPoly::zero(&self.k);
        }
        let mut c = vec![Nf::zero(&self.k); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        KPoly::new(&self.k, c)
    }

    pub fn scale(&self, a: &Nf) -> KPoly {
        KPoly::new(&self.k, self.c.iter().map(|x| x.mul(a)).collect())
    }

    pub fn monic(&self) -> KPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    pub fn pow(&self, e: u32) -> KPoly {
        let mut acc = KPoly::one(&self.k);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> KPoly {
        KPoly::new(
            &self.k,
            self.c.iter().enumerate().skip(1).map(|(i, a)| a.scale(&Rat::from_integer(i.into()))).collect(),
        )
    }

    pub fn eval(&self, x: &Nf) -> Nf {
        let mut acc = Nf::zero(&self.k);
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self(z + a)`.
    pub fn shift(&self, a: &Nf) -> KPoly {
        let lin = KPoly::new(&self.k, vec![a.clone(), Nf::one(&self.k)]);
        let mut acc = KPoly::zero(&self.k);
        for c in self.c.iter().rev() {
            acc = acc.mul(&lin).add(&KPoly::new(&self.k, vec![c.clone()]));
        }
        acc
    }

    pub fn div_rem(&self, d: &KPoly) -> (KPoly, KPoly) {
        assert!(!d.is_zero());
        if self.c.len() < d.c.len() {
            return (KPoly::zero(&self.k), self.clone());
        }
        let dd = d.deg();
        let inv = d.lc().inv();
        let mut r = self.c.clone();
        let mut q = vec![Nf::zero(&self.k); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = r[k + dd].mul(&inv);
            if !coef.is_zero() {
                for (i, dc) in d.c.iter().enumerate() {
                    r[k + i] = r[k + i].sub(&coef.mul(dc));
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (KPoly::new(&self.k, q), KPoly::new(&self.k, r))
    }

    pub fn rem(&self, d: &KPoly) -> KPoly {
        self.div_rem(d).1
    }

    pub fn div_exact(&self, d: &KPoly) -> Option<KPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd.
    pub fn gcd(a: &KPoly, b: &KPoly) -> KPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.deg() == 0 || KPoly::gcd(self, &self.derivative()).deg() == 0
    }

    /// Yun's algorithm over `K`.
    pub fn squarefree_decomposition(&self) -> Vec<(KPoly, u32)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = KPoly::gcd(&f, &fp);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = fp.div_exact(&a0).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.deg() > 0 {
            let a = KPoly::gcd(&b, &d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).unwrap();
            c = d.div_exact(&a).unwrap();
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Maps coefficients through a field embedding (generator to `image`).
    pub fn map_into(&self, image: &Nf) -> KPoly {
        KPoly::new(image.field(), self.c.iter().map(|a| a.map_into(image)).collect())
    }

    /// Lift to `Q[z][t]` as a `BPoly` with `x = z`, `y = t`.
    fn lift(&self) -> BPoly {
        let mut terms = Vec::new();
        for (i, a) in self.c.iter().enumerate() {
            for (j, r) in a.poly().coeffs().iter().enumerate() {
                terms.push((i as u32, j as u32, r.clone()));
            }
        }
        BPoly::from_terms(terms)
    }

    /// Norm `Res_t(m(t), h(t, z))` over the rationals.
    pub fn norm(&self) -> UPoly {
        if self.k.is_rational() {
            return UPoly::new(self.c.iter().map(|a| a.poly().coeff(0)).collect());
        }
        let m = BPoly::from_upoly_in_y(&self.k.minpoly);
        crate::poly::resultant_y(&m, &self.lift())
    }

    /// Factors a squarefree polynomial into monic irreducibles over `K`.
    pub fn factor_squarefree(&self) -> Vec<KFactor> {
        assert!(self.deg() >= 1);
        let f = self.monic();
        if f.deg() == 1 {
            return vec![KFactor { g: f.clone(), norm: None, shift: 0 }];
        }
        let theta = Nf::generator(&self.k);
        for s in (0i64..).flat_map(|k| [k, -k]).skip(1).chain(std::iter::once(0)).take(40) {
            let s = if self.k.is_rational() { 0 } else { s };
            let st = theta.scale(&Rat::from_integer(s.into()));
            let hs = f.shift(&st.neg());
            let n = hs.norm();
            if !n.is_squarefree() {
                if self.k.is_rational() {
                    panic!("factor_squarefree called on a non-squarefree polynomial");
                }
                continue;
            }
            let mut out = Vec::new();
            for ni in irreducible_factors(&n) {
                let gi = KPoly::gcd(&hs, &KPoly::from_upoly(&self.k, &ni));
                if gi.deg() == 0 {
                    continue;
                }
                let g = gi.shift(&st);
                out.push(KFactor { norm: (g.deg() > 1).then_some(ni), g, shift: s });
            }
            out.sort_by_key(|f| f.g.deg());
            return out;
        }
        unreachable!("no squarefree norm found")
    }

    /// Full factorization: monic irreducible factors with multiplicities.
    pub fn factor(&self) -> Vec<(KFactor, u32)> {
        let mut out = Vec::new();
        for (g, m) in self.squarefree_decomposition() {
            for f in g.factor_squarefree() {
                out.push((f, m));
            }
        }
        out
    }

    /// Rational coefficients, if all are rational.
    pub fn to_upoly(&self) -> Option<UPoly> {
        Some(UPoly::new(self.c.iter().map(|a| a.as_rat()).collect::<Option<Vec<_>>>()?))
    }
}

/// An irreducible factor over `K`, remembering the data needed to build the
/// stem field as a simple extension of the rationals.
#[derive(Clone, Debug)]
pub struct KFactor {
    pub g: KPoly,
    /// Minimal polynomial over the rationals of `α + sθ` (α a root of `g`),
    /// present when `deg g > 1`.
    norm: Option<UPoly>,
    shift: i64,
}

/// A field `L ⊇ K` containing a root of a factor.
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: Arc<NumberField>,
    /// Image of the generator of `K` in `L`.
    pub embed: Nf,
    /// A root of the factor in `L`.
    pub root: Nf,
}

impl Extension {
    pub fn map(&self, a: &Nf) -> Nf {
        if Arc::ptr_eq(a.field(), &self.field) {
            return a.clone();
        }
        a.map_into(&self.embed)
    }
}

impl KFactor {
    pub fn degree(&self) -> usize {
        self.g.deg()
    }

    /// Adjoins a root of this factor.
    pub fn extend(&self) -> Extension {
        let k = self.g.field();
        if self.g.deg() == 1 {
            return Extension {
                field: k.clone(),
                embed: Nf::generator(k),
                root: self.g.coeff(0).neg().div(&self.g.coeff(1)),
            };
        }
        let n = self.norm.as_ref().expect("norm recorded for nonlinear factors");
        if k.is_rational() {
            let l = NumberField::new(n);
            return Extension { field: l.clone(), embed: Nf::zero(&l), root: Nf::generator(&l) };
        }
        let l = NumberField::new(n);
        let gamma = Nf::generator(&l);
        let s = Rat::from_integer(self.shift.into());
        // θ is the common root in L of m(t) and g(t, γ - s t)
        let m = KPoly::from_upoly(&l, k.minpoly());
        let zl = KPoly::new(&l, vec![gamma.clone(), Nf::from_rat(&l, -s.clone())]);
        let mut g_t = KPoly::zero(&l);
        for c in self.g.coeffs().iter().rev() {
            let ct = KPoly::from_upoly(&l, c.poly());
            g_t = g_t.mul(&zl).add(&ct);
        }
        let lin = KPoly::gcd(&m, &g_t);
        assert_eq!(lin.deg(), 1, "primitive element gcd must be linear");
        let theta = lin.coeff(0).neg();
        let root = gamma.sub(&theta.scale(&s));
        Extension { field: l, embed: theta, root }
    }
}
