//! Irreducible factorization over the rationals (univariate and bivariate).

use num_traits::{One, Zero};

use super::bivar::BPoly;
use super::Poly;
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::upoly::UPoly;
use crate::zfactor::{factor_squarefree_int, factor_upoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self, like: &Poly) -> Poly {
        let mut acc = like.constant_like(self.unit.clone());
        for (g, m) in &self.factors {
            acc = &acc * &g.pow(*m);
        }
        acc
    }
}

pub(super) fn factor(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let mut factors: Vec<(Poly, u32)> = match f.nvars() {
        0 => vec![],
        1 => {
            let (_, fs) = factor_upoly(&f.to_upoly(0).unwrap());
            fs.into_iter().map(|(g, m)| (Poly::from_upoly(&g, &vars, 0).primitive(), m)).collect()
        }
        2 => factor_bivariate(&f.to_bpoly())
            .into_iter()
            .map(|(g, m)| (Poly::from_bpoly(&g, &vars).primitive(), m))
            .collect(),
        n => return Err(Error::TooManyVariables(n)),
    };
    factors.sort_by(|a, b| {
        a.0.total_degree()
            .cmp(&b.0.total_degree())
            .then_with(|| a.0.to_string().cmp(&b.0.to_string()))
    });
    let mut prod = f.constant_like(Rat::one());
    for (g, m) in &factors {
        prod = &prod * &g.pow(*m);
    }
    let unit = f.leading_coeff() / prod.leading_coeff();
    Ok(Factorization { unit, factors })
}

/// Irreducible factors of a bivariate polynomial with multiplicities.
pub(crate) fn factor_bivariate(f: &BPoly) -> Vec<(BPoly, u32)> {
    let mut out = Vec::new();
    let (_, cont) = factor_upoly(&f.content());
    for (g, m) in cont {
        out.push((BPoly::from_upoly_in_x(&g), m));
    }
    for (g, m) in f.squarefree_decomposition_y() {
        for h in factor_squarefree_primitive(&g) {
            out.push((h, m));
        }
    }
    out
}

/// Factors a squarefree polynomial, primitive in `y` with positive `y`-degree.
pub(crate) fn factor_squarefree_primitive(f: &BPoly) -> Vec<BPoly> {
    let f = f.primitive_part();
    if f.deg_y() <= 1 {
        return vec![f];
    }
    if f.deg_x() == 0 {
        let u = f.eval_x(&Rat::zero());
        return factor_squarefree_int(&u.to_primitive_ints())
            .into_iter()
            .map(|g| BPoly::from_upoly_in_y(&UPoly::from_big_ints(&g)))
            .collect();
    }
    // a specialization x = a that keeps the degree and squarefreeness
    let a = (0i64..)
        .flat_map(|k| [k, -k - 1])
        .map(|k| Rat::from_integer(k.into()))
        .find(|a| !f.lc().eval(a).is_zero() && f.eval_x(a).is_squarefree())
        .unwrap();
    let uni = f.eval_x(&a);
    let base: Vec<UPoly> =
        factor_squarefree_int(&uni.to_primitive_ints()).into_iter().map(|g| UPoly::from_big_ints(&g).monic()).collect();
    if base.len() == 1 {
        return vec![f];
    }
    let g = f.shift_x(&a);
    let prec = 2 * f.deg_x() + 2;
    let lifted = hensel_lift_series(&g, &base, prec);
    let lc = g.lc();
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = false;
        for subset in subsets(remaining.len(), size) {
            let mut cand = Series2::constant(&lc, prec);
            for &i in &subset {
                cand = cand.mul(&lifted[remaining[i]]);
            }
            let cand = cand.to_bpoly().primitive_part().shift_x(&-a.clone()).primitive_part();
            if cand.deg_y() == 0 {
                continue;
            }
            if let Some(q) = current.div_exact(&cand) {
                out.push(cand);
                current = q.primitive_part();
                let chosen: Vec<usize> = subset.iter().map(|&i| remaining[i]).collect();
                remaining.retain(|i| !chosen.contains(i));
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if current.deg_y() > 0 {
        out.push(current.primitive_part());
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Polynomial in `y` whose coefficients are truncated power series in `t`;
/// `c[j]` is the series coefficient of `y^j`, each of length `prec`.
#[derive(Clone, Debug)]
struct Series2 {
    c: Vec<Vec<Rat>>,
    prec: usize,
}

impl Series2 {
    fn constant(u: &UPoly, prec: usize) -> Self {
        let mut s = vec![Rat::zero(); prec];
        for (i, v) in u.coeffs().iter().enumerate().take(prec) {
            s[i] = v.clone();
        }
        Series2 { c: vec![s], prec }
    }

    fn from_upoly_y(u: &UPoly, prec: usize) -> Self {
        let c = u
            .coeffs()
            .iter()
            .map(|v| {
                let mut s = vec![Rat::zero(); prec];
                s[0] = v.clone();
                s
            })
            .collect();
        Series2 { c, prec }
    }

    fn mul(&self, o: &Series2) -> Series2 {
        let prec = self.prec;
        let mut c = vec![vec![Rat::zero(); prec]; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                for (ka, va) in a.iter().enumerate() {
                    if va.is_zero() {
                        continue;
                    }
                    for (kb, vb) in b.iter().enumerate().take(prec - ka) {
                        c[i + j][ka + kb] += va * vb;
                    }
                }
            }
        }
        Series2 { c, prec }
    }

    /// Coefficient of `t^k` as a polynomial in `y`.
    fn slice(&self, k: usize) -> UPoly {
        UPoly::new(self.c.iter().map(|s| s[k].clone()).collect())
    }

    fn add_at(&mut self, k: usize, d: &UPoly) {
        for (j, v) in d.coeffs().iter().enumerate() {
            while self.c.len() <= j {
                self.c.push(vec![Rat::zero(); self.prec]);
            }
            self.c[j][k] += v;
        }
    }

    fn to_bpoly(&self) -> BPoly {
        BPoly::new(self.c.iter().map(|s| UPoly::new(s.clone())).collect())
    }
}

/// Lifts `g(t, y)/lc(g) = prod base_i (mod t)` to precision `t^prec`
/// with monic-in-`y` factors.
fn hensel_lift_series(g: &BPoly, base: &[UPoly], prec: usize) -> Vec<Series2> {
    // monic target: g / lc(g) as series in t
    let lc = g.lc();
    let inv = series_inverse(&lc, prec);
    let target = Series2 {
        c: g.coeffs().iter().map(|p| series_mul(&series_from(p, prec), &inv)).collect(),
        prec,
    };
    let n = base.len();
    // s_i = (prod_{l != i} u_l)^{-1} mod u_i
    let s: Vec<UPoly> = (0..n)
        .map(|i| {
            let mut other = UPoly::one();
            for (l, u) in base.iter().enumerate() {
                if l != i {
                    other = &other * u;
                }
            }
            let (gg, a, _) = UPoly::xgcd(&other, &base[i]);
            debug_assert!(gg.deg() == 0);
            a.rem(&base[i])
        })
        .collect();
    let mut facs: Vec<Series2> = base.iter().map(|u| Series2::from_upoly_y(u, prec)).collect();
    for k in 1..prec {
        let mut prod = facs[0].clone();
        for f in &facs[1..] {
            prod = prod.mul(f);
        }
        let e = &target.slice_or_zero(k) - &prod.slice(k);
        if e.is_zero() {
            continue;
        }
        for i in 0..n {
            let d = (&e * &s[i]).rem(&base[i]);
            facs[i].add_at(k, &d);
        }
    }
    facs
}

impl Series2 {
    fn slice_or_zero(&self, k: usize) -> UPoly {
        if k < self.prec {
            self.slice(k)
        } else {
            UPoly::zero()
        }
    }
}

fn series_from(p: &UPoly, prec: usize) -> Vec<Rat> {
    let mut s = vec![Rat::zero(); prec];
    for (i, v) in p.coeffs().iter().enumerate().take(prec) {
        s[i] = v.clone();
    }
    s
}

fn series_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let prec = a.len();
    let mut c = vec![Rat::zero(); prec];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(prec - i) {
            c[i + j] += x * y;
        }
    }
    c
}

/// Inverse of a power series with nonzero constant term.
pub(crate) fn series_inverse(p: &UPoly, prec: usize) -> Vec<Rat> {
    let a = series_from(p, prec);
    let mut inv = vec![Rat::zero(); prec];
    let a0inv = a[0].recip();
    inv[0] = a0inv.clone();
    for k in 1..prec {
        let mut s = Rat::zero();
        for i in 1..=k {
            s += &a[i] * &inv[k - i];
        }
        inv[k] = -s * &a0inv;
    }
    inv
}
