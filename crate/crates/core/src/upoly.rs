//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{denom_lcm, fmt_rat, numer_gcd, Int, Rat};

/// Coefficients are stored low degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Rat>,
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self.display("t"))
    }
}

impl UPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
    }

    pub fn from_big_ints(c: &[Int]) -> Self {
        Self::new(c.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    pub fn zero() -> Self {
        UPoly { c: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        Self::new(vec![r])
    }

    /// The monomial `t`.
    pub fn x() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn monomial(coef: Rat, deg: usize) -> Self {
        let mut c = vec![Rat::zero(); deg + 1];
        c[deg] = coef;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(self.c.iter().map(|x| x * r).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &UPoly) -> Self {
        let mut acc = UPoly::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * g) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// `self(t + a)`.
    pub fn shift(&self, a: &Rat) -> Self {
        self.compose(&UPoly::new(vec![a.clone(), Rat::one()]))
    }

    /// `self(a t)`.
    pub fn scale_var(&self, a: &Rat) -> Self {
        let mut p = Rat::one();
        let mut out = Vec::with_capacity(self.c.len());
        for c in &self.c {
            out.push(c * &p);
            p *= a;
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        if self.c.len() < d.c.len() {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut r = self.c.clone();
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &inv;
            if !coef.is_zero() {
                for (i, dc) in d.c.iter().enumerate() {
                    r[k + i] -= &coef * dc;
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    /// Exact quotient; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let mut a = a.primitive_rat();
        let mut b = b.primitive_rat();
        while !b.is_zero() {
            let r = a.rem(&b).primitive_rat();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn xgcd(a: &UPoly, b: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Scales to integer coefficients with unit content and positive leading coefficient.
    pub fn primitive_rat(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let ints = self.to_primitive_ints();
        UPoly::from_big_ints(&ints)
    }

    /// Integer coefficient vector with content 1 and positive leading coefficient.
    pub fn to_primitive_ints(&self) -> Vec<Int> {
        if self.is_zero() {
            return vec![];
        }
        let l = denom_lcm(&self.c);
        let scaled: Vec<Rat> = self.c.iter().map(|x| x * Rat::from_integer(l.clone())).collect();
        let g = numer_gcd(&scaled);
        let sign = if self.lc().is_negative() { -Int::one() } else { Int::one() };
        scaled
            .iter()
            .map(|x| x.numer() / &g * &sign)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.deg() == 0 {
            return true;
        }
        UPoly::gcd(self, &self.derivative()).deg() == 0
    }

    pub fn squarefree_part(&self) -> UPoly {
        if self.deg() == 0 {
            return UPoly::one();
        }
        let g = UPoly::gcd(self, &self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: monic squarefree factors with multiplicities.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, u32)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = UPoly::gcd(&f, &fp);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = fp.div_exact(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.deg() > 0 {
            let a = UPoly::gcd(&b, &d);
            if a.deg() > 0 {
                out.push((a.monic(), i));
            }
            b = b.div_exact(&a).unwrap();
            c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                s.push_str(&fmt_rat(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", fmt_rat(&a), mono));
            }
        }
        s
    }

    /// Reduces modulo `m` (used for number-field elements).
    pub fn reduce(&self, m: &UPoly) -> UPoly {
        if self.c.len() < m.c.len() {
            self.clone()
        } else {
            self.rem(m)
        }
    }

    /// Sturm sequence of `self` and its derivative.
    pub fn sturm_sequence(&self) -> Vec<UPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        seq
    }

    pub fn content_gcd(&self) -> Int {
        numer_gcd(&self.c).gcd(&Int::one())
    }
}

impl<'a> Add<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            });
        }
        UPoly::new(c)
    }
}

impl<'a> Sub<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        self + &(-o)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }
}

impl<'a> Mul<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }
}

/// Sign of a rational as -1, 0, 1.
pub(crate) fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of sign variations of a Sturm sequence evaluated at `x`.
pub(crate) fn sign_variations(seq: &[UPoly], x: &Rat) -> usize {
    let mut last = 0;
    let mut v = 0;
    for p in seq {
        let s = sign(&p.eval(x));
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Number of distinct real roots of a squarefree `p` in the half-open interval `(a, b]`.
pub(crate) fn count_real_roots(seq: &[UPoly], a: &Rat, b: &Rat) -> usize {
    sign_variations(seq, a).saturating_sub(sign_variations(seq, b))
}

/// Cauchy upper bound on the modulus of the complex roots.
pub(crate) fn cauchy_bound(p: &UPoly) -> Rat {
    let lc = p.lc().abs();
    let mut m = Rat::zero();
    for c in &p.c[..p.c.len() - 1] {
        let r = c.abs() / &lc;
        if r > m {
            m = r;
        }
    }
    m + Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_division() {
        let a = UPoly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = UPoly::from_ints(&[1, 1]); // t + 1
        assert_eq!(UPoly::gcd(&a, &b), b);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn yun_multiplicities() {
        // (t-1)^2 (t+2)
        let f = &UPoly::from_ints(&[-1, 1]).pow(2) * &UPoly::from_ints(&[2, 1]);
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(UPoly::from_ints(&[2, 1]), 1), (UPoly::from_ints(&[-1, 1]), 2)]);
    }

    #[test]
    fn sturm_counts_roots() {
        let f = UPoly::from_ints(&[0, -1, 0, 1]); // t^3 - t
        let seq = f.sturm_sequence();
        assert_eq!(count_real_roots(&seq, &Rat::from_integer((-2).into()), &Rat::from_integer(2.into())), 3);
        assert_eq!(count_real_roots(&seq, &Rat::new(1.into(), 2.into()), &Rat::from_integer(2.into())), 1);
    }

    #[test]
    fn xgcd_bezout() {
        let a = UPoly::from_ints(&[1, 0, 1]);
        let b = UPoly::from_ints(&[0, 1, 1]);
        let (g, s, t) = UPoly::xgcd(&a, &b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, UPoly::one());
    }
}
