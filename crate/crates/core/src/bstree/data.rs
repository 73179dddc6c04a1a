//! Combinatorial summaries of curves: the data the trees are made of.

use crate::algnum::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::invariants::points::absolutely_irreducible;
use crate::invariants::{
    class_lines, components, end_weights, infinity_data as inf_points, reduce, singular_orbits, topology_unchecked, Direction,
};
use crate::poly::Poly;
use crate::puiseux::local;

/// Relative multiplicities of the branches (or ends) tangent to one line.
/// Within a point, or at infinity, equal ids denote the same line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionData {
    pub id: u32,
    pub weights: Vec<u32>,
}

/// A singular point of the curve lying on a component. Equal ids across
/// components denote the same point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointData {
    pub id: u32,
    pub directions: Vec<DirectionData>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentData {
    pub euler_characteristic: i64,
    pub points: Vec<PointData>,
    pub ends: Vec<DirectionData>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    pub components: Vec<ComponentData>,
}

fn same_dir(a: &Direction, b: &Direction) -> bool {
    a.0.equals(&b.0) && a.1.equals(&b.1)
}

fn same_point(a: &(AlgebraicNumber, AlgebraicNumber), b: &(AlgebraicNumber, AlgebraicNumber)) -> bool {
    a.0.equals(&b.0) && a.1.equals(&b.1)
}

fn cmp_pair(a: &(AlgebraicNumber, AlgebraicNumber), b: &(AlgebraicNumber, AlgebraicNumber)) -> std::cmp::Ordering {
    a.0.cmp_canonical(&b.0).then_with(|| a.1.cmp_canonical(&b.1))
}

/// Numbers the distinct directions 1, 2, ... in canonical order and returns
/// the weights grouped by (component, direction id).
fn number_directions(per_comp: Vec<Vec<(Direction, Vec<u32>)>>) -> Vec<Vec<DirectionData>> {
    let mut all: Vec<Direction> = Vec::new();
    for (d, _) in per_comp.iter().flatten() {
        if !all.iter().any(|e| same_dir(e, d)) {
            all.push(d.clone());
        }
    }
    all.sort_by(cmp_pair);
    per_comp
        .into_iter()
        .map(|lines| {
            let mut out: Vec<DirectionData> = Vec::new();
            for (d, w) in lines {
                let id = all.iter().position(|e| same_dir(e, &d)).unwrap() as u32 + 1;
                match out.iter_mut().find(|x| x.id == id) {
                    Some(x) => x.weights.extend(w),
                    None => out.push(DirectionData { id, weights: w }),
                }
            }
            for x in &mut out {
                x.weights.sort_unstable();
            }
            out.sort_by_key(|x| x.id);
            out
        })
        .collect()
}

fn ends_of(g: &Poly) -> Result<Vec<(Direction, Vec<u32>)>> {
    let mut out = Vec::new();
    for (ip, loc) in inf_points(g)? {
        let w = end_weights(&loc);
        for (d, _) in ip.concrete() {
            out.push((d, w.clone()));
        }
    }
    Ok(out)
}

/// The data of the tree at infinity, as a single pseudo-component.
pub fn infinity_data(f: &Poly) -> Result<CurveData> {
    let f = reduce(f)?;
    let ends = number_directions(vec![ends_of(&f)?]).pop().unwrap();
    Ok(CurveData { components: vec![ComponentData { euler_characteristic: 0, points: vec![], ends }] })
}

/// Full data of a curve whose components are irreducible over the complex
/// numbers.
pub fn curve_data(f: &Poly) -> Result<CurveData> {
    let f = reduce(f)?;
    let comps = components(&f)?;
    for g in &comps {
        if !absolutely_irreducible(g)? {
            return Err(Error::NotAbsolutelyIrreducible(g.to_string()));
        }
    }
    let orbits = singular_orbits(&f)?;

    // concrete singular points with, per component through them, the lines
    // and branch weights of the component's germ
    type Germs = Vec<(usize, Vec<(Direction, Vec<u32>)>)>;
    let mut pts: Vec<((AlgebraicNumber, AlgebraicNumber), Germs)> = Vec::new();
    for o in &orbits {
        let locals: Vec<(usize, local::Local)> = comps
            .iter()
            .enumerate()
            .filter(|(_, g)| o.lies_on(g))
            .map(|(j, g)| Ok((j, local::at_point(g, &o.px, &o.py)?)))
            .collect::<Result<_>>()?;
        for (p, rho) in o.concrete() {
            let germs = locals
                .iter()
                .map(|(j, loc)| {
                    let lines = local::line_classes(loc)
                        .iter()
                        .flat_map(|c| class_lines(c, &rho).into_iter().map(|d| (d, c.weights.clone())))
                        .collect();
                    (*j, lines)
                })
                .collect();
            pts.push((p, germs));
        }
    }
    pts.sort_by(|a, b| cmp_pair(&a.0, &b.0));
    debug_assert!(pts.windows(2).all(|w| !same_point(&w[0].0, &w[1].0)));

    let mut out: Vec<ComponentData> = comps
        .iter()
        .map(|g| Ok(ComponentData { euler_characteristic: topology_unchecked(g)?.euler_characteristic, points: vec![], ends: vec![] }))
        .collect::<Result<_>>()?;
    for (i, (_, germs)) in pts.into_iter().enumerate() {
        let (js, lines): (Vec<usize>, Vec<_>) = germs.into_iter().unzip();
        for (j, directions) in js.into_iter().zip(number_directions(lines)) {
            out[j].points.push(PointData { id: i as u32 + 1, directions });
        }
    }
    let ends = comps.iter().map(ends_of).collect::<Result<Vec<_>>>()?;
    for (c, e) in out.iter_mut().zip(number_directions(ends)) {
        c.ends = e;
    }
    Ok(CurveData { components: out })
}
