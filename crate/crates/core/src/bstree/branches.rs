//! Branch-list documents: curve data supplied directly, for curves that are
//! not given by a plane equation.
//!
//! ```json
//! {"degree": 3,
//!  "ends": [{"direction": [1, 0, 0, 0], "k": 1}, {"direction": [0, 0, 1, 0], "k": 2}],
//!  "points": [{"coords": [0, 0, 0, 0],
//!              "branches": [{"direction": [1, 0, 0, 0], "k": 1}]}],
//!  "euler_characteristic": 1}
//! ```
//!
//! Vectors list complex coordinates as `re, im` pairs; reals are integers or
//! strings `"p/q"`. A document may instead hold `"components": [...]`, each
//! entry of the form above; equal coordinates then denote a shared point.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::Value;

use super::data::{ComponentData, CurveData, DirectionData, PointData};
use super::BsTree;
use crate::arith::parse_rat;
use crate::error::{Error, Result};
use crate::Rat;

type Complex = (Rat, Rat);
type Weighted = Vec<(Vec<Complex>, u32)>;

/// Curve data read from a branch-list document.
#[derive(Clone, Debug)]
pub struct BranchList {
    pub data: CurveData,
    pub degree: u32,
    euler_known: bool,
}

impl BranchList {
    pub fn infinity_tree(&self) -> BsTree {
        self.data.infinity_tree()
    }

    pub fn global_tree(&self) -> Result<BsTree> {
        if !self.euler_known {
            return Err(schema("global trees need `euler_characteristic` for every component"));
        }
        Ok(self.data.global_tree())
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn real(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| Rat::from_integer(i.into())).ok_or_else(|| schema(format!("`{n}` is not an exact rational"))),
        Value::String(s) => parse_rat(s).ok_or_else(|| schema(format!("`{s}` is not a rational"))),
        _ => Err(schema("coordinates must be integers or rational strings")),
    }
}

fn vector(v: &Value, what: &str) -> Result<Vec<Complex>> {
    let a = v.as_array().ok_or_else(|| schema(format!("`{what}` must be an array")))?;
    if a.is_empty() || a.len() % 2 != 0 {
        return Err(schema(format!("`{what}` needs an even, nonzero number of reals")));
    }
    a.chunks(2).map(|c| Ok((real(&c[0])?, real(&c[1])?))).collect()
}

fn cdiv(a: &Complex, b: &Complex) -> Complex {
    let n = &b.0 * &b.0 + &b.1 * &b.1;
    ((&a.0 * &b.0 + &a.1 * &b.1) / &n, (&a.1 * &b.0 - &a.0 * &b.1) / &n)
}

/// Projective normalization: the first nonzero coordinate becomes 1.
fn direction(v: &Value) -> Result<Vec<Complex>> {
    let d = vector(v, "direction")?;
    let lead = d.iter().find(|c| !c.0.is_zero() || !c.1.is_zero()).cloned().ok_or_else(|| schema("zero direction"))?;
    Ok(d.iter().map(|c| cdiv(c, &lead)).collect())
}

fn field<'a>(o: &'a Value, key: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| schema(format!("missing `{key}`")))
}

fn weight(o: &Value) -> Result<u32> {
    let k = field(o, "k")?.as_u64().ok_or_else(|| schema("`k` must be a positive integer"))?;
    if k == 0 || k > u32::MAX as u64 {
        return Err(schema("`k` must be a positive integer"));
    }
    Ok(k as u32)
}

fn weighted_dirs(v: &Value, what: &str) -> Result<Weighted> {
    let a = v.as_array().ok_or_else(|| schema(format!("`{what}` must be an array")))?;
    a.iter().map(|b| Ok((direction(field(b, "direction")?)?, weight(b)?))).collect()
}

struct RawComponent {
    degree: Option<u32>,
    euler: Option<i64>,
    ends: Weighted,
    points: Vec<(Vec<Complex>, Weighted)>,
}

fn raw_component(o: &Value) -> Result<RawComponent> {
    let obj = o.as_object().ok_or_else(|| schema("component must be an object"))?;
    for key in obj.keys() {
        if !["degree", "ends", "points", "euler_characteristic"].contains(&key.as_str()) {
            return Err(schema(format!("unknown field `{key}`")));
        }
    }
    let degree = match o.get("degree") {
        Some(d) => Some(d.as_u64().filter(|&d| d >= 1).ok_or_else(|| schema("`degree` must be a positive integer"))? as u32),
        None => None,
    };
    let euler = match o.get("euler_characteristic") {
        Some(e) => Some(e.as_i64().ok_or_else(|| schema("`euler_characteristic` must be an integer"))?),
        None => None,
    };
    let ends = weighted_dirs(field(o, "ends")?, "ends")?;
    if ends.is_empty() {
        return Err(schema("a curve has at least one end"));
    }
    let mut points = Vec::new();
    if let Some(ps) = o.get("points") {
        for p in ps.as_array().ok_or_else(|| schema("`points` must be an array"))? {
            let coords = vector(field(p, "coords")?, "coords")?;
            let br = weighted_dirs(field(p, "branches")?, "branches")?;
            if br.is_empty() {
                return Err(schema("a point needs at least one branch"));
            }
            points.push((coords, br));
        }
    }
    Ok(RawComponent { degree, euler, ends, points })
}

/// Groups weights by direction, numbering directions through `ids`.
fn group(items: &[(Vec<Complex>, u32)], ids: &BTreeMap<Vec<Complex>, u32>) -> Vec<DirectionData> {
    let mut m: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (d, k) in items {
        m.entry(ids[d]).or_default().push(*k);
    }
    m.into_iter()
        .map(|(id, mut weights)| {
            weights.sort_unstable();
            DirectionData { id, weights }
        })
        .collect()
}

fn number<'a>(keys: impl Iterator<Item = &'a Vec<Complex>>) -> BTreeMap<Vec<Complex>, u32> {
    let mut m: BTreeMap<Vec<Complex>, u32> = keys.map(|k| (k.clone(), 0)).collect();
    for (i, v) in m.values_mut().enumerate() {
        *v = i as u32 + 1;
    }
    m
}

/// Reads a branch-list document and checks that end weights add up to the
/// declared degree.
pub fn parse_branch_list(text: &str) -> Result<BranchList> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    let (raws, total) = match v.get("components") {
        Some(cs) => {
            let obj = v.as_object().unwrap();
            if obj.keys().any(|k| k != "components" && k != "degree") {
                return Err(schema("a component list admits only `degree` beside it"));
            }
            let arr = cs.as_array().filter(|a| !a.is_empty()).ok_or_else(|| schema("`components` must be a nonempty array"))?;
            let total = v.get("degree").map(|d| d.as_u64().ok_or_else(|| schema("`degree` must be a positive integer"))).transpose()?;
            (arr.iter().map(raw_component).collect::<Result<Vec<_>>>()?, total.map(|d| d as u32))
        }
        None => {
            let r = raw_component(&v)?;
            if r.degree.is_none() {
                return Err(schema("missing `degree`"));
            }
            let d = r.degree;
            (vec![r], d)
        }
    };
    let mut degree = 0u32;
    for r in &raws {
        let s: u32 = r.ends.iter().map(|e| e.1).sum();
        if let Some(d) = r.degree {
            if d != s {
                return Err(schema(format!("end weights add up to {s}, but the degree is {d}")));
            }
        }
        degree += s;
    }
    if let Some(t) = total {
        if t != degree {
            return Err(schema(format!("end weights add up to {degree}, but the degree is {t}")));
        }
    }
    let dims: Vec<usize> = raws
        .iter()
        .flat_map(|r| r.ends.iter().map(|e| e.0.len()).chain(r.points.iter().flat_map(|p| std::iter::once(p.0.len()).chain(p.1.iter().map(|b| b.0.len())))))
        .collect();
    if dims.windows(2).any(|w| w[0] != w[1]) {
        return Err(schema("all vectors must have the same dimension"));
    }

    let point_ids = number(raws.iter().flat_map(|r| r.points.iter().map(|p| &p.0)));
    let end_ids = number(raws.iter().flat_map(|r| r.ends.iter().map(|e| &e.0)));
    let mut line_ids: BTreeMap<u32, BTreeMap<Vec<Complex>, u32>> = BTreeMap::new();
    for r in &raws {
        for (c, br) in &r.points {
            line_ids.entry(point_ids[c]).or_default().extend(br.iter().map(|b| (b.0.clone(), 0)));
        }
    }
    for m in line_ids.values_mut() {
        for (i, v) in m.values_mut().enumerate() {
            *v = i as u32 + 1;
        }
    }

    let euler_known = raws.iter().all(|r| r.euler.is_some());
    let mut components = Vec::new();
    for r in &raws {
        let mut pts: BTreeMap<u32, Vec<(Vec<Complex>, u32)>> = BTreeMap::new();
        for (c, br) in &r.points {
            pts.entry(point_ids[c]).or_default().extend(br.iter().cloned());
        }
        let points = pts.into_iter().map(|(id, br)| PointData { id, directions: group(&br, &line_ids[&id]) }).collect();
        components.push(ComponentData { euler_characteristic: r.euler.unwrap_or(0), points, ends: group(&r.ends, &end_ids) });
    }
    Ok(BranchList { data: CurveData { components }, degree, euler_known })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn directions_are_projective() {
        let a = direction(&serde_json::json!([2, 0, 4, 2])).unwrap();
        let b = direction(&serde_json::json!([1, 0, 2, 1])).unwrap();
        assert_eq!(a, b);
        assert!(a[0].0.is_one());
    }

    #[test]
    fn degree_must_match() {
        let bad = r#"{"degree": 2, "ends": [{"direction": [1,0,0,0], "k": 1}]}"#;
        assert!(matches!(parse_branch_list(bad), Err(Error::Schema(_))));
        let ok = r#"{"degree": 2, "ends": [{"direction": [1,0,0,0], "k": 2}]}"#;
        assert_eq!(parse_branch_list(ok).unwrap().degree, 2);
    }

    #[test]
    fn global_tree_needs_euler_characteristic() {
        let doc = r#"{"degree": 1, "ends": [{"direction": ["1/2",0,0,0], "k": 1}]}"#;
        let bl = parse_branch_list(doc).unwrap();
        assert!(bl.global_tree().is_err());
        assert_eq!(bl.infinity_tree().degree(), 1);
    }
}
