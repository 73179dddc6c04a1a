//! Sparse bivariate polynomials over a number field.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algnum::{Extension, KPoly, Nf, NumberField};
use crate::arith::binomial;
use crate::poly::Poly;
use crate::Rat;

/// Keys are `(i, j)` for the monomial `X^i Y^j`.
#[derive(Clone, Debug)]
pub struct BiPoly {
    k: Arc<NumberField>,
    t: BTreeMap<(u32, u32), Nf>,
}

impl BiPoly {
    pub fn zero(k: &Arc<NumberField>) -> Self {
        BiPoly { k: k.clone(), t: BTreeMap::new() }
    }

    pub fn constant(c: Nf) -> Self {
        let mut p = BiPoly::zero(c.field());
        p.add_term(0, 0, c);
        p
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Nf)> {
        self.t.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Option<&Nf> {
        self.t.get(&(i, j))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Nf) {
        if c.is_zero() {
            return;
        }
        match self.t.get_mut(&(i, j)) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.t.remove(&(i, j));
                }
            }
            None => {
                self.t.insert((i, j), c);
            }
        }
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (&(i, j), c) in &o.t {
            p.add_term(i, j, c.clone());
        }
        p
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        let mut p = BiPoly::zero(&self.k);
        for (&(i1, j1), a) in &self.t {
            for (&(i2, j2), b) in &o.t {
                p.add_term(i1 + i2, j1 + j2, a.mul(b));
            }
        }
        p
    }

    pub fn scale(&self, c: &Nf) -> BiPoly {
        let mut p = BiPoly::zero(&self.k);
        for (&(i, j), a) in &self.t {
            p.add_term(i, j, a.mul(c));
        }
        p
    }

    /// Linear form `a X + b Y + c`.
    pub fn linear(a: &Nf, b: &Nf, c: &Nf) -> BiPoly {
        let mut p = BiPoly::zero(a.field());
        p.add_term(1, 0, a.clone());
        p.add_term(0, 1, b.clone());
        p.add_term(0, 0, c.clone());
        p
    }

    /// `f(lx, ly)` for a rational bivariate polynomial and two bivariate
    /// substitutions over `K`.
    pub fn compose_rational(f: &Poly, lx: &BiPoly, ly: &BiPoly) -> BiPoly {
        let k = lx.k.clone();
        let dx = f.degree_in(0) as usize;
        let dy = f.degree_in(1) as usize;
        let mut px = vec![BiPoly::constant(Nf::one(&k))];
        for _ in 0..dx {
            px.push(px.last().unwrap().mul(lx));
        }
        let mut py = vec![BiPoly::constant(Nf::one(&k))];
        for _ in 0..dy {
            py.push(py.last().unwrap().mul(ly));
        }
        let mut out = BiPoly::zero(&k);
        for (e, c) in f.terms() {
            let term = px[e[0] as usize].mul(&py[e[1] as usize]).scale(&Nf::from_rat(&k, c.clone()));
            out = out.add(&term);
        }
        out
    }

    /// Maps coefficients into an extension field.
    pub fn map(&self, ext: &Extension) -> BiPoly {
        let mut p = BiPoly::zero(&ext.field);
        for (&(i, j), a) in &self.t {
            p.add_term(i, j, ext.map(a));
        }
        p
    }

    /// `ord_Y F(0, Y)`, or `None` if `X` divides `F`.
    pub fn ord_y_at_x0(&self) -> Option<u32> {
        self.t.keys().filter(|(i, _)| *i == 0).map(|(_, j)| *j).min()
    }

    pub fn min_j(&self) -> u32 {
        self.t.keys().map(|(_, j)| *j).min().unwrap_or(0)
    }

    pub fn lowest_degree(&self) -> u32 {
        self.t.keys().map(|(i, j)| i + j).min().unwrap_or(0)
    }

    /// The lowest-degree homogeneous form evaluated at `(X, Y) = (x, y)`.
    pub fn lowest_form_at(&self, x: &Nf, y: &Nf) -> Nf {
        let m = self.lowest_degree();
        let mut acc = Nf::zero(&self.k);
        for (&(i, j), c) in &self.t {
            if i + j == m {
                acc = acc.add(&c.mul(&x.pow(i as i64)).mul(&y.pow(j as i64)));
            }
        }
        acc
    }

    /// `F(λ T^q, T^m (μ + Y1)) / T^l`.
    pub fn duval_substitute(&self, q: u32, m: u32, l: u32, lambda: &Nf, mu: &Nf) -> BiPoly {
        let k = &self.k;
        let maxj = self.t.keys().map(|(_, j)| *j).max().unwrap_or(0);
        // (μ + Y1)^j expanded once per j
        let mut pows: Vec<Vec<Nf>> = Vec::with_capacity(maxj as usize + 1);
        for j in 0..=maxj {
            let row = (0..=j)
                .map(|b| mu.pow((j - b) as i64).scale(&Rat::from_integer(binomial(j, b))))
                .collect();
            pows.push(row);
        }
        let mut out = BiPoly::zero(k);
        for (&(i, j), a) in &self.t {
            let e = q * i + m * j - l;
            let base = a.mul(&lambda.pow(i as i64));
            for (b, c) in pows[j as usize].iter().enumerate() {
                out.add_term(e, b as u32, base.mul(c));
            }
        }
        out
    }

    /// `F(x(T), y(T))`.
    pub fn eval_polys(&self, x: &KPoly, y: &KPoly) -> KPoly {
        let k = &self.k;
        let maxi = self.t.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let maxj = self.t.keys().map(|(_, j)| *j).max().unwrap_or(0);
        let mut xp = vec![KPoly::one(k)];
        for _ in 0..maxi {
            xp.push(xp.last().unwrap().mul(x));
        }
        let mut yp = vec![KPoly::one(k)];
        for _ in 0..maxj {
            yp.push(yp.last().unwrap().mul(y));
        }
        let mut out = KPoly::zero(k);
        for (&(i, j), a) in &self.t {
            out = out.add(&xp[i as usize].mul(&yp[j as usize]).scale(a));
        }
        out
    }
}
