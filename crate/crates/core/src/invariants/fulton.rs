//! Local intersection numbers at the origin by Fulton's algorithm.

use crate::algnum::Nf;
use crate::error::{Error, Result};
use crate::puiseux::bipoly::BiPoly;

/// `F(x, 0)` as `(degree, order, leading coefficient)`, or `None` if zero.
fn axis_data(f: &BiPoly) -> Option<(u32, u32, Nf)> {
    let row: Vec<(u32, &Nf)> = f.terms().filter(|((_, j), _)| *j == 0).map(|((i, _), c)| (*i, c)).collect();
    let deg = row.iter().map(|t| t.0).max()?;
    let ord = row.iter().map(|t| t.0).min()?;
    let lc = row.iter().find(|t| t.0 == deg).unwrap().1.clone();
    Some((deg, ord, lc))
}

fn div_y(f: &BiPoly) -> BiPoly {
    let mut out = BiPoly::zero(f.field());
    for (&(i, j), c) in f.terms() {
        out.add_term(i, j - 1, c.clone());
    }
    out
}

/// Intersection number of `f` and `g` at the origin.
pub(crate) fn intersection_at_origin(f: &BiPoly, g: &BiPoly) -> Result<u64> {
    let (mut f, mut g) = (f.clone(), g.clone());
    let mut acc = 0u64;
    loop {
        // a unit generates the whole local ring, even beside zero
        if f.coeff(0, 0).is_some() || g.coeff(0, 0).is_some() {
            return Ok(acc);
        }
        if f.is_zero() || g.is_zero() {
            return Err(Error::NonIsolated);
        }
        match (axis_data(&f), axis_data(&g)) {
            (None, None) => return Err(Error::NonIsolated),
            (None, Some((_, ord, _))) => {
                // I(yF', G) = I(y, G) + I(F', G)
                acc += ord as u64;
                f = div_y(&f);
            }
            (Some((_, ord, _)), None) => {
                acc += ord as u64;
                g = div_y(&g);
            }
            (Some((r, _, a)), Some((s, _, b))) => {
                if r > s {
                    std::mem::swap(&mut f, &mut g);
                    continue;
                }
                // kill the leading term of G(x, 0)
                let mut shift = BiPoly::zero(f.field());
                shift.add_term(s - r, 0, b.div(&a));
                g = g.add(&shift.mul(&f).scale(&Nf::one(f.field()).neg()));
            }
        }
    }
}
