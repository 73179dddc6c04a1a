//! Dense polynomials in `Q[x][y]`, stored as coefficients of `y^j`.

use num_traits::Zero;

use crate::arith::Rat;
use crate::upoly::UPoly;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BPoly {
    c: Vec<UPoly>,
}

impl BPoly {
    pub fn new(mut c: Vec<UPoly>) -> Self {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        BPoly { c }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (u32, u32, Rat)>) -> Self {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for (i, j, v) in it {
            let (i, j) = (i as usize, j as usize);
            if rows.len() <= j {
                rows.resize(j + 1, Vec::new());
            }
            if rows[j].len() <= i {
                rows[j].resize(i + 1, Rat::zero());
            }
            rows[j][i] += v;
        }
        BPoly::new(rows.into_iter().map(UPoly::new).collect())
    }

    pub fn from_upoly_in_y(u: &UPoly) -> Self {
        BPoly::new(u.coeffs().iter().map(|c| UPoly::constant(c.clone())).collect())
    }

    pub fn from_upoly_in_x(u: &UPoly) -> Self {
        BPoly::new(vec![u.clone()])
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.c
    }

    pub fn coeff(&self, j: usize) -> UPoly {
        self.c.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg_y(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn deg_x(&self) -> usize {
        self.c.iter().map(|p| p.deg()).max().unwrap_or(0)
    }

    pub fn lc(&self) -> UPoly {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &BPoly) -> BPoly {
        let n = self.c.len().max(o.c.len());
        BPoly::new((0..n).map(|j| &self.coeff(j) + &o.coeff(j)).collect())
    }

    pub fn sub(&self, o: &BPoly) -> BPoly {
        let n = self.c.len().max(o.c.len());
        BPoly::new((0..n).map(|j| &self.coeff(j) - &o.coeff(j)).collect())
    }

    pub fn mul(&self, o: &BPoly) -> BPoly {
        if self.is_zero() || o.is_zero() {
            return BPoly::default();
        }
        let mut c = vec![UPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        BPoly::new(c)
    }

    pub fn scale_x(&self, u: &UPoly) -> BPoly {
        BPoly::new(self.c.iter().map(|p| p * u).collect())
    }

    pub fn d_y(&self) -> BPoly {
        BPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, p)| p.scale(&Rat::from_integer(j.into())))
                .collect(),
        )
    }

    pub fn d_x(&self) -> BPoly {
        BPoly::new(self.c.iter().map(|p| p.derivative()).collect())
    }

    /// `f(a, y)` as a univariate polynomial in `y`.
    pub fn eval_x(&self, a: &Rat) -> UPoly {
        UPoly::new(self.c.iter().map(|p| p.eval(a)).collect())
    }

    /// `f(x + a, y)`.
    pub fn shift_x(&self, a: &Rat) -> BPoly {
        BPoly::new(self.c.iter().map(|p| p.shift(a)).collect())
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> BPoly {
        let mut terms = Vec::new();
        for (j, p) in self.c.iter().enumerate() {
            for (i, v) in p.coeffs().iter().enumerate() {
                terms.push((j as u32, i as u32, v.clone()));
            }
        }
        BPoly::from_terms(terms)
    }

    /// Gcd of the coefficients in `Q[x]` (monic).
    pub fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for p in &self.c {
            g = UPoly::gcd(&g, p);
            if g.deg() == 0 && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// Primitive part with respect to `y`, normalized to integer coefficients
    /// and a leading coefficient whose own leading coefficient is positive.
    pub fn primitive_part(&self) -> BPoly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.content();
        let q = BPoly::new(self.c.iter().map(|p| p.div_exact(&g).unwrap()).collect());
        q.normalize_rat()
    }

    /// Rescales by a rational so coefficients are coprime integers and the
    /// leading coefficient is positive.
    pub fn normalize_rat(&self) -> BPoly {
        if self.is_zero() {
            return self.clone();
        }
        let all: Vec<Rat> = self.c.iter().flat_map(|p| p.coeffs().iter().cloned()).collect();
        let l = crate::arith::denom_lcm(&all);
        let scaled: Vec<Rat> = all.iter().map(|c| c * Rat::from_integer(l.clone())).collect();
        let g = crate::arith::numer_gcd(&scaled);
        let mut s = Rat::new(l, g);
        if self.lc().lc() < Rat::zero() {
            s = -s;
        }
        BPoly::new(self.c.iter().map(|p| p.scale(&s)).collect())
    }

    /// Pseudo-remainder of `self` by `d` with respect to `y`.
    pub fn prem(&self, d: &BPoly) -> BPoly {
        let dd = d.deg_y();
        let lc = d.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.deg_y() >= dd {
            let k = r.deg_y() - dd;
            let rl = r.lc();
            // r = lc * r - rl * y^k * d
            let mut shifted = vec![UPoly::zero(); k];
            shifted.extend(d.c.iter().map(|p| p * &rl));
            r = r.scale_x(&lc).sub(&BPoly::new(shifted));
        }
        r
    }

    /// Gcd in `Q[x][y]`, primitive-normalized.
    pub fn gcd(a: &BPoly, b: &BPoly) -> BPoly {
        if a.is_zero() {
            return b.primitive_part().scale_x(&b.content()).normalize_rat();
        }
        if b.is_zero() {
            return a.primitive_part().scale_x(&a.content()).normalize_rat();
        }
        let c = UPoly::gcd(&a.content(), &b.content());
        let (mut p, mut q) = (a.primitive_part(), b.primitive_part());
        if p.deg_y() < q.deg_y() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            if q.deg_y() == 0 {
                p = BPoly::new(vec![UPoly::one()]);
                break;
            }
            let r = p.prem(&q);
            p = q;
            q = if r.is_zero() { r } else { r.primitive_part() };
        }
        p.primitive_part().scale_x(&c).normalize_rat()
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &BPoly) -> Option<BPoly> {
        if d.is_zero() {
            return None;
        }
        let dd = d.deg_y();
        let lc = d.lc();
        let mut r = self.clone();
        if r.is_zero() {
            return Some(r);
        }
        if r.deg_y() < dd {
            return None;
        }
        let mut q = vec![UPoly::zero(); r.deg_y() - dd + 1];
        while !r.is_zero() {
            if r.deg_y() < dd {
                return None;
            }
            let k = r.deg_y() - dd;
            let t = r.lc().div_exact(&lc)?;
            let mut shifted = vec![UPoly::zero(); k];
            shifted.extend(d.c.iter().map(|p| p * &t));
            r = r.sub(&BPoly::new(shifted));
            q[k] = &q[k] + &t;
        }
        Some(BPoly::new(q))
    }

    /// Squarefree decomposition of the primitive part (Yun over `Q(x)[y]`).
    pub fn squarefree_decomposition_y(&self) -> Vec<(BPoly, u32)> {
        let f = self.primitive_part();
        let mut out = Vec::new();
        if f.deg_y() == 0 {
            return out;
        }
        let fp = f.d_y();
        let a0 = BPoly::gcd(&f, &fp);
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = fp.div_exact(&a0).unwrap();
        let mut d = c.sub(&b.d_y());
        let mut i = 1;
        while b.deg_y() > 0 {
            let a = BPoly::gcd(&b, &d);
            if a.deg_y() > 0 {
                out.push((a.primitive_part(), i));
            }
            b = b.div_exact(&a).unwrap();
            c = d.div_exact(&a).unwrap();
            d = c.sub(&b.d_y());
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> BPoly {
        let cont = self.content().squarefree_part();
        // a repeated factor of positive y-degree survives in every fiber whose
        // leading coefficient does not vanish
        let pp = self.primitive_part();
        let clean_fiber = (0i64..8).map(|a| Rat::from_integer(a.into())).any(|a| !pp.lc().eval(&a).is_zero() && pp.eval_x(&a).is_squarefree());
        if clean_fiber {
            return BPoly::new(vec![cont]).mul(&pp).normalize_rat();
        }
        let mut acc = BPoly::new(vec![cont]);
        for (g, _) in self.squarefree_decomposition_y() {
            acc = acc.mul(&g);
        }
        acc.normalize_rat()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.eval_x(x).eval(y)
    }
}

/// Determinant of a square matrix over `Q[x]` by Bareiss elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<UPoly>>) -> UPoly {
    let n = m.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut sign = 1;
    let mut prev = UPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return UPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&d
    } else {
        d
    }
}

/// Resultant with respect to `y` via the Sylvester matrix.
pub fn resultant(a: &BPoly, b: &BPoly) -> UPoly {
    let (m, n) = (a.deg_y(), b.deg_y());
    if a.is_zero() || b.is_zero() {
        return UPoly::zero();
    }
    if m == 0 && n == 0 {
        return UPoly::one();
    }
    if m == 0 {
        return a.lc().pow(n as u32);
    }
    if n == 0 {
        return b.lc().pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![UPoly::zero(); size]; size];
    for r in 0..n {
        for (j, c) in a.c.iter().rev().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in b.c.iter().rev().enumerate() {
            mat[n + r][r + j] = c.clone();
        }
    }
    bareiss_det(mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn bp(s: &str) -> BPoly {
        Poly::parse_xy(s).unwrap().to_bpoly()
    }

    #[test]
    fn gcd_of_products() {
        let g = BPoly::gcd(&bp("(y-x^2)*(y+x)"), &bp("(y-x^2)*(x*y-1)"));
        assert_eq!(g, bp("y-x^2"));
        let g = BPoly::gcd(&bp("x*(y-1)"), &bp("x^2*(y+1)"));
        assert_eq!(g, bp("x"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(bp("y^2-x^2").div_exact(&bp("y-x")), Some(bp("y+x")));
        assert_eq!(bp("y^2-x^3").div_exact(&bp("y-x")), None);
    }

    #[test]
    fn resultant_of_lines() {
        let r = resultant(&bp("y-x"), &bp("y+x-2"));
        assert_eq!(r.degree(), Some(1));
        assert!(r.eval(&crate::arith::rat(1)).is_zero());
    }
}
