//! Sparse multivariate polynomials over the rationals.

mod bivar;
mod factor;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_rat, Rat};
use crate::error::{Error, Result};
use crate::upoly::UPoly;

pub use bivar::{resultant as resultant_y, BPoly};
pub use factor::Factorization;

/// Which homogeneous component to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Lowest,
    Highest,
}

/// Exponent vectors ordered by total degree, then lexicographically with the
/// first variable most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rat>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&a), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero(vars: &[&str]) -> Self {
        Poly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_like(&self) -> Self {
        Poly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant_like(&self, c: Rat) -> Self {
        let mut p = self.zero_like();
        p.add_term(vec![0; self.vars.len()], c);
        p
    }

    /// The `i`-th variable as a polynomial.
    pub fn var_like(&self, i: usize) -> Self {
        let mut e = vec![0; self.vars.len()];
        e[i] = 1;
        let mut p = self.zero_like();
        p.add_term(e, Rat::one());
        p
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = Poly::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Parses an expression in the given variables.
    pub fn parse(text: &str, vars: &[&str]) -> Result<Self> {
        parse::parse(text, vars)
    }

    /// Parses in the default variables `x, y`.
    pub fn parse_xy(text: &str) -> Result<Self> {
        parse::parse(text, &["x", "y"])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        debug_assert_eq!(e.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        let m = Monomial(e);
        let v = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(&Monomial(e.to_vec())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            p.add_term(m.0.clone(), c * r);
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.constant_like(Rat::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut e = m.0.clone();
                e[i] -= 1;
                p.add_term(e, c * Rat::from_integer(m.0[i].into()));
            }
        }
        p
    }

    pub fn eval(&self, pt: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in pt.iter().zip(&m.0) {
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a polynomial (in the same variables) for each variable.
    pub fn compose(&self, subs: &[Poly]) -> Self {
        assert_eq!(subs.len(), self.vars.len());
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let mut t = self.constant_like(c.clone());
            for (s, &e) in subs.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &s.pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Sum of the terms of lowest or highest total degree.
    pub fn homogeneous_part(&self, which: Part) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = match which {
            Part::Lowest => self.terms.keys().map(|m| m.degree()).min().unwrap(),
            Part::Highest => self.total_degree(),
        };
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            if m.degree() == d {
                p.add_term(m.0.clone(), c.clone());
            }
        }
        Ok(p)
    }

    /// Scales to integer coefficients with content 1 and a positive leading
    /// coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = crate::arith::denom_lcm(self.terms.values());
        let g = crate::arith::numer_gcd(self.terms.values().map(|c| c * Rat::from_integer(l.clone())).collect::<Vec<_>>().iter());
        let mut s = Rat::new(l, g);
        if self.leading_coeff().is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Leading coefficient for normalization: the term maximizing the exponent
    /// vector read from the last variable backwards (for `x, y`: highest power
    /// of `y`, then of `x`).
    pub fn leading_coeff(&self) -> Rat {
        self.terms
            .iter()
            .max_by(|a, b| a.0 .0.iter().rev().cmp(b.0 .0.iter().rev()))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Reinterprets the polynomial over a different variable list; every
    /// variable in use must appear in `vars`.
    pub fn with_vars(&self, vars: &[&str]) -> Result<Self> {
        let mut p = Poly::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    let j = vars
                        .iter()
                        .position(|w| *w == self.vars[i])
                        .ok_or_else(|| Error::UnknownVariable(self.vars[i].clone()))?;
                    e[j] = k;
                }
            }
            p.add_term(e, c.clone());
        }
        Ok(p)
    }

    /// Applies the affine map `(x, y) -> (a x + b y + e, c x + d y + f)` to a
    /// bivariate polynomial, i.e. returns `self ∘ map`.
    pub fn affine_substitute(&self, m: &[Rat; 6]) -> Self {
        assert_eq!(self.vars.len(), 2);
        let x = self.var_like(0);
        let y = self.var_like(1);
        let lin = |a: &Rat, b: &Rat, c: &Rat| &(&x.scale(a) + &y.scale(b)) + &self.constant_like(c.clone());
        self.compose(&[lin(&m[0], &m[1], &m[4]), lin(&m[2], &m[3], &m[5])])
    }

    /// Bivariate view as a polynomial in the second variable with
    /// coefficients in the first.
    pub fn to_bpoly(&self) -> BPoly {
        assert_eq!(self.vars.len(), 2, "bivariate polynomial expected");
        BPoly::from_terms(self.terms.iter().map(|(m, c)| (m.0[0], m.0[1], c.clone())))
    }

    pub fn from_bpoly(b: &BPoly, vars: &[&str]) -> Self {
        let mut p = Poly::zero(vars);
        for (j, cj) in b.coeffs().iter().enumerate() {
            for (i, c) in cj.coeffs().iter().enumerate() {
                p.add_term(vec![i as u32, j as u32], c.clone());
            }
        }
        p
    }

    /// Univariate view in variable `i` (all other exponents must be zero).
    pub fn to_upoly(&self, i: usize) -> Option<UPoly> {
        let mut c = vec![Rat::zero(); self.degree_in(i) as usize + 1];
        for (m, v) in &self.terms {
            if m.0.iter().enumerate().any(|(k, &e)| k != i && e > 0) {
                return None;
            }
            c[m.0[i] as usize] = v.clone();
        }
        Some(UPoly::new(c))
    }

    pub fn from_upoly(u: &UPoly, vars: &[&str], i: usize) -> Self {
        let mut p = Poly::zero(vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = k as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Product of the distinct irreducible factors, primitive with positive
    /// leading coefficient.
    pub fn squarefree_part(&self) -> Result<Self> {
        self.check_nonconstant()?;
        let vars = self.var_refs();
        match self.nvars() {
            1 => Ok(Poly::from_upoly(&self.to_upoly(0).unwrap().squarefree_part(), &vars, 0).primitive()),
            2 => Ok(Poly::from_bpoly(&self.to_bpoly().squarefree_part(), &vars).primitive()),
            n => Err(Error::TooManyVariables(n)),
        }
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(self.squarefree_part()?.total_degree() == self.total_degree())
    }

    pub(crate) fn check_nonconstant(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroPolynomial)
        } else if self.is_constant() {
            Err(Error::ConstantPolynomial)
        } else {
            Ok(())
        }
    }

    /// Complete factorization over the rationals.
    pub fn factor(&self) -> Result<Factorization> {
        factor::factor(self)
    }

    /// Resultant with respect to the named variable.
    pub fn resultant(&self, g: &Poly, var: &str) -> Result<Poly> {
        if self.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let Some(vi) = self.var_index(var) else {
            return Err(Error::MissingVariable(var.into()));
        };
        let g = g.with_vars(&self.var_refs())?;
        if self.degree_in(vi) == 0 && g.degree_in(vi) == 0 {
            return Err(Error::MissingVariable(var.into()));
        }
        let vars = self.var_refs();
        match self.nvars() {
            1 => {
                let r = bivar::resultant(
                    &BPoly::from_upoly_in_y(&self.to_upoly(0).unwrap()),
                    &BPoly::from_upoly_in_y(&g.to_upoly(0).unwrap()),
                );
                Ok(self.constant_like(r.coeff(0)))
            }
            2 => {
                let other = 1 - vi;
                let a = self.with_order(other, vi).to_bpoly();
                let b = g.with_order(other, vi).to_bpoly();
                let r = bivar::resultant(&a, &b);
                Ok(Poly::from_upoly(&r, &vars, other))
            }
            n => Err(Error::TooManyVariables(n)),
        }
    }

    /// Reorders a bivariate polynomial so that variable `a` comes first.
    fn with_order(&self, a: usize, b: usize) -> Poly {
        let mut p = Poly::zero(&[self.vars[a].as_str(), self.vars[b].as_str()]);
        for (m, c) in &self.terms {
            p.add_term(vec![m.0[a], m.0[b]], c.clone());
        }
        p
    }

    /// Exact division (bivariate or univariate); `None` if not divisible.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let vars = self.var_refs();
        match self.nvars() {
            1 => Some(Poly::from_upoly(&self.to_upoly(0)?.div_exact(&d.to_upoly(0)?)?, &vars, 0)),
            2 => Some(Poly::from_bpoly(&self.to_bpoly().div_exact(&d.to_bpoly())?, &vars)),
            _ => None,
        }
    }

    /// Swaps the two variables of a bivariate polynomial (names kept in place).
    pub fn swap_xy(&self) -> Poly {
        let mut p = self.zero_like();
        for (m, c) in &self.terms {
            p.add_term(vec![m.0[1], m.0[0]], c.clone());
        }
        p
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.0.clone(), c.clone());
        }
        p
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.0.clone(), -c);
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

#[allow(clippy::suspicious_arithmetic_impl)] // exponents add
impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut p = self.zero_like();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}

pub fn parse_poly(text: &str, vars: &[&str]) -> Result<Poly> {
    Poly::parse(text, vars)
}

pub fn squarefree_part(f: &Poly) -> Result<Poly> {
    f.squarefree_part()
}

/// Content and irreducible factors over the rationals, with multiplicities.
pub fn factor_rational(f: &Poly) -> Result<Factorization> {
    f.factor()
}

pub fn resultant(f: &Poly, g: &Poly, var: &str) -> Result<Poly> {
    f.resultant(g, var)
}

pub fn homogeneous_part(f: &Poly, which: Part) -> Result<Poly> {
    f.homogeneous_part(which)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_display() {
        let p = Poly::parse_xy("(y-x^2)*x").unwrap();
        assert_eq!(p.to_string(), "x*y - x^3");
        assert_eq!(Poly::parse_xy("y^2 - x^3").unwrap().to_string(), "y^2 - x^3");
        assert_eq!(Poly::parse_xy("1-(y+x)").unwrap().to_string(), "1 - y - x");
        assert_eq!(Poly::parse_xy("1/2*x - 3/4").unwrap().to_string(), "-3/4 + 1/2*x");
    }

    #[test]
    fn homogeneous_parts() {
        let f = Poly::parse_xy("y^2-x^3").unwrap();
        assert_eq!(f.homogeneous_part(Part::Lowest).unwrap(), Poly::parse_xy("y^2").unwrap());
        let g = Poly::parse_xy("x*y-x^3").unwrap();
        assert_eq!(g.homogeneous_part(Part::Highest).unwrap(), Poly::parse_xy("-x^3").unwrap());
        let h = Poly::parse_xy("x*y").unwrap();
        assert_eq!(h.homogeneous_part(Part::Lowest).unwrap(), h);
    }

    #[test]
    fn squarefree_examples() {
        let sf = |s: &str| Poly::parse_xy(s).unwrap().squarefree_part().unwrap();
        assert_eq!(sf("x^2*y"), Poly::parse_xy("x*y").unwrap());
        assert_eq!(sf("y^2-x^3"), Poly::parse_xy("y^2-x^3").unwrap());
        assert_eq!(sf("(y-x^2)^2*x"), Poly::parse_xy("(y-x^2)*x").unwrap());
        assert_eq!(sf("4*(y-x)^3*(x+1)^2"), Poly::parse_xy("(y-x)*(x+1)").unwrap());
    }

    #[test]
    fn resultant_examples() {
        let p = |s: &str| Poly::parse_xy(s).unwrap();
        let r = p("y-x^2").resultant(&p("y-x^3"), "y").unwrap();
        assert!(r == p("x^2-x^3") || r == p("x^3-x^2"));
        let r = p("y").resultant(&p("y-1"), "y").unwrap();
        assert_eq!(r.eval(&[Rat::zero(), Rat::zero()]).abs(), Rat::one());
        assert!(r.is_constant());
        let r = p("y^2-x^3").resultant(&p("2*y"), "y").unwrap();
        assert!(r == p("4*x^3") || r == p("-4*x^3"));
        assert_eq!(p("x").resultant(&p("x+1"), "y"), Err(Error::MissingVariable("y".into())));
    }

    #[test]
    fn affine_substitution() {
        let f = Poly::parse_xy("x*y").unwrap();
        let one = Rat::one();
        let z = Rat::zero();
        let g = f.affine_substitute(&[one.clone(), one.clone(), z.clone(), one.clone(), one.clone(), z]);
        assert_eq!(g, Poly::parse_xy("(x+y+1)*y").unwrap());
    }
}
