//! Univariate factorization over the integers (Berlekamp mod p, Hensel lifting,
//! subset recombination).

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{Int, Rat};
use crate::upoly::UPoly;

const PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

// ---------- arithmetic in F_p[x], coefficients low degree first ----------

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    trim(&mut c);
    c
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut c: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut c);
    c
}

fn fp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut c: Vec<u64> = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut c);
    c
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    let mut q = vec![0; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        q[k] = c;
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[k + i] = (r[k + i] + p - c * bc % p) % p;
            }
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn fp_monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => vec![],
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|&x| x * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// Returns `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let inv = inv_mod(r0[0], p);
    (
        s0.iter().map(|&x| x * inv % p).collect(),
        t0.iter().map(|&x| x * inv % p).collect(),
    )
}

fn fp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    let mut d: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (i as u64 % p) * c % p)
        .collect();
    trim(&mut d);
    d
}

fn reduce_int(c: &Int, p: u64) -> u64 {
    c.mod_floor(&Int::from(p)).to_u64().unwrap()
}

/// Berlekamp splitting of a monic squarefree polynomial over F_p.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // rows: x^{ip} mod f
    let xp = {
        let mut acc = vec![1u64];
        let mut base = vec![0, 1];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_divrem(&fp_mul(&acc, &base, p), f, p).1;
            }
            base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
            e >>= 1;
        }
        acc
    };
    let mut q = vec![vec![0u64; n]; n];
    let mut cur = vec![1u64];
    for row in q.iter_mut() {
        for (j, &c) in cur.iter().enumerate() {
            row[j] = c;
        }
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // nullspace of (Q - I)^T: vectors v with v (Q - I) = 0
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|j| (0..n).map(|i| (q[i][j] + if i == j { p - 1 } else { 0 }) % p).collect())
        .collect();
    let basis = nullspace(&mut m, p);
    let k = basis.len();
    let mut factors = vec![f.to_vec()];
    if k == 1 {
        return factors;
    }
    for v in basis.iter().skip(1) {
        let mut vp = v.clone();
        trim(&mut vp);
        let mut next = Vec::new();
        for g in factors {
            if g.len() <= 2 || next.len() >= k {
                next.push(g);
                continue;
            }
            let mut rest = g.clone();
            for s in 0..p {
                if rest.len() <= 1 {
                    break;
                }
                let shifted = fp_sub(&vp, &[s], p);
                let h = fp_gcd(&rest, &shifted, p);
                if h.len() > 1 && h.len() < rest.len() {
                    rest = fp_divrem(&rest, &h, p).0;
                    next.push(h);
                }
            }
            if rest.len() > 1 {
                next.push(fp_monic(&rest, p));
            }
        }
        factors = next;
        if factors.len() == k {
            break;
        }
    }
    factors
}

/// Nullspace basis of a square matrix over F_p (row-reduced in place).
fn nullspace(m: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(r) = (row..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, r);
        let inv = inv_mod(m[row][col], p);
        for x in m[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r2 in 0..n {
            if r2 != row && m[r2][col] != 0 {
                let c = m[r2][col];
                for j in 0..cols {
                    m[r2][j] = (m[r2][j] + p - c * m[row][j] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &fc in &free {
        let mut v = vec![0u64; cols];
        v[fc] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[r][fc]) % p;
        }
        out.push(v);
    }
    // keep the constant vector first so the splitting loop can skip it
    out.sort_by_key(|v| v.iter().skip(1).any(|&x| x != 0));
    out
}

// ---------- Hensel lifting over Z / p^k ----------

fn zmod(v: &[Int], m: &Int) -> Vec<Int> {
    let mut out: Vec<Int> = v.iter().map(|c| c.mod_floor(m)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn zmul(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn to_int(a: &[u64]) -> Vec<Int> {
    a.iter().map(|&x| Int::from(x)).collect()
}

fn to_fp(a: &[Int], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|c| reduce_int(c, p)).collect();
    trim(&mut v);
    v
}

/// Lifts `f = g h (mod p)` with `h` monic to a factorization modulo `p^k`.
/// The leading coefficient of `g` is forced to `lc(f)`.
fn hensel_lift(f: &[Int], g: &[u64], h: &[u64], p: u64, k: u32) -> (Vec<Int>, Vec<Int>) {
    let (s, t) = fp_bezout(g, h, p);
    let pk = Int::from(p).pow(k);
    let lc = f.last().unwrap().clone();
    let mut gz = to_int(g);
    *gz.last_mut().unwrap() = lc.clone();
    let mut hz = to_int(h);
    let mut pj = Int::from(p);
    for _ in 1..k {
        let next = &pj * Int::from(p);
        let prod = zmul(&gz, &hz);
        let n = f.len().max(prod.len());
        let e: Vec<Int> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next) / &pj
            })
            .collect();
        let e = to_fp(&e, p);
        if !e.is_empty() {
            // g dh + h dg = e with deg dh < deg h
            let se = fp_mul(&s, &e, p);
            let (qd, dh) = fp_divrem(&se, h, p);
            let dg = fp_add(&fp_mul(&t, &e, p), &fp_mul(&qd, g, p), p);
            for (i, c) in dg.iter().enumerate() {
                if i < gz.len() {
                    gz[i] += &pj * Int::from(*c);
                } else {
                    gz.push(&pj * Int::from(*c));
                }
            }
            for (i, c) in dh.iter().enumerate() {
                hz[i] += &pj * Int::from(*c);
            }
            gz = gz.iter().map(|c| c.mod_floor(&next)).collect();
            let l = gz.len();
            gz[l - 1] = lc.mod_floor(&next);
        }
        pj = next;
    }
    (zmod(&gz, &pk), zmod(&hz, &pk))
}

/// Lifts all monic modular factors of `f` to monic factors modulo `p^k`.
fn multi_lift(f: &[Int], factors: &[Vec<u64>], p: u64, k: u32) -> Vec<Vec<Int>> {
    let pk = Int::from(p).pow(k);
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc.extended_gcd(&pk).x.mod_floor(&pk);
        return vec![zmod(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), &pk)];
    }
    let mid = factors.len() / 2;
    let lcp = reduce_int(f.last().unwrap(), p);
    let mut g = vec![lcp];
    for a in &factors[..mid] {
        g = fp_mul(&g, a, p);
    }
    let mut h = vec![1u64];
    for b in &factors[mid..] {
        h = fp_mul(&h, b, p);
    }
    let (gz, hz) = hensel_lift(f, &g, &h, p, k);
    let mut out = multi_lift(&gz, &factors[..mid], p, k);
    out.extend(multi_lift(&hz, &factors[mid..], p, k));
    out
}

fn symmetric(v: &[Int], m: &Int) -> Vec<Int> {
    let half = m / 2;
    v.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn primitive(v: Vec<Int>) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |a, c| a.gcd(c));
    let sign = if v.last().is_some_and(|c| c.is_negative()) { -Int::one() } else { Int::one() };
    let mut out: Vec<Int> = v.into_iter().map(|c| c / &g * &sign).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn int_poly(v: &[Int]) -> UPoly {
    UPoly::from_big_ints(v)
}

/// Factors a primitive squarefree integer polynomial of positive degree into
/// irreducible primitive factors with positive leading coefficients.
pub fn factor_squarefree_int(f: &[Int]) -> Vec<Vec<Int>> {
    let f = primitive(f.to_vec());
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    // pick a prime with good reduction and few modular factors
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        if reduce_int(f.last().unwrap(), p) == 0 {
            continue;
        }
        let fp = fp_monic(&to_fp(&f, p), p);
        if fp_gcd(&fp, &fp_derivative(&fp, p), p).len() > 1 {
            continue;
        }
        let facs = berlekamp(&fp, p);
        if facs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let Some((p, modfacs)) = best else {
        return factor_by_large_prime(&f);
    };
    recombine(&f, p, &modfacs)
}

/// Mignotte-type bound: `2^n ||f||_2 |lc|`, doubled for symmetric representatives.
fn coefficient_bound(f: &[Int]) -> Int {
    let n = f.len() - 1;
    let norm2: Int = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + Int::one();
    let lc = f.last().unwrap().abs();
    (Int::one() << (n + 1)) * norm * lc
}

fn recombine(f: &[Int], p: u64, modfacs: &[Vec<u64>]) -> Vec<Vec<Int>> {
    let bound = coefficient_bound(f) * 2;
    let mut k = 1u32;
    let mut pk = Int::from(p);
    while pk <= bound {
        pk *= Int::from(p);
        k += 1;
    }
    let lifted = multi_lift(f, modfacs, p, k);
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = false;
        for subset in subsets(remaining.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut cand = vec![lc.clone()];
            for &i in &subset {
                cand = zmod(&zmul(&cand, &lifted[remaining[i]]), &pk);
            }
            let cand = primitive(symmetric(&cand, &pk));
            if cand.len() < 2 {
                continue;
            }
            if let Some(q) = int_poly(&f).div_exact(&int_poly(&cand)) {
                out.push(cand);
                f = q.to_primitive_ints();
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
    if f.len() > 1 {
        out.push(primitive(f));
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Fallback when every small prime divides the discriminant: larger primes.
fn factor_by_large_prime(f: &[Int]) -> Vec<Vec<Int>> {
    let mut p = 101u64;
    loop {
        if is_prime(p) && reduce_int(f.last().unwrap(), p) != 0 {
            let fp = fp_monic(&to_fp(f, p), p);
            if fp_gcd(&fp, &fp_derivative(&fp, p), p).len() == 1 {
                let facs = berlekamp(&fp, p);
                if facs.len() == 1 {
                    return vec![f.to_vec()];
                }
                return recombine(f, p, &facs);
            }
        }
        p += 2;
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Complete factorization of a rational univariate polynomial: returns the unit and
/// primitive irreducible factors with multiplicities.
pub fn factor_upoly(f: &UPoly) -> (Rat, Vec<(UPoly, u32)>) {
    if f.deg() == 0 {
        return (f.lc(), vec![]);
    }
    let mut factors = Vec::new();
    for (sq, m) in f.squarefree_decomposition() {
        for g in factor_squarefree_int(&sq.to_primitive_ints()) {
            factors.push((int_poly(&g), m));
        }
    }
    factors.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| cmp_coeffs(&a.0, &b.0)));
    let mut prod = UPoly::one();
    for (g, m) in &factors {
        prod = &prod * &g.pow(*m);
    }
    let unit = f.lc() / prod.lc();
    (unit, factors)
}

fn cmp_coeffs(a: &UPoly, b: &UPoly) -> std::cmp::Ordering {
    a.coeffs().iter().rev().cmp(b.coeffs().iter().rev())
}

/// Monic irreducible factors over the rationals (multiplicities dropped).
pub fn irreducible_factors(f: &UPoly) -> Vec<UPoly> {
    factor_upoly(f).1.into_iter().map(|(g, _)| g.monic()).collect()
}
