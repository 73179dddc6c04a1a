//! JSON reports for the `invariants` subcommand.

use bscurve::invariants::{self, LineMultiplicities, TangentLine};
use bscurve::puiseux::branches_at;
use bscurve::{AlgebraicNumber, Direction, Error, Location, Poly, Result};
use serde_json::{json, Value};

fn dir_json(d: &Direction) -> Value {
    json!([d.0.to_json(), d.1.to_json()])
}

fn lines_json(cone: &[TangentLine], rel: &[LineMultiplicities]) -> Vec<Value> {
    cone.iter()
        .zip(rel)
        .map(|(t, r)| json!({ "direction": dir_json(&t.direction), "multiplicity": t.multiplicity, "weights": r.weights }))
        .collect()
}

pub fn at_point(f: &Poly, x: &AlgebraicNumber, y: &AlgebraicNumber) -> Result<Value> {
    let at = Location::Point(x.clone(), y.clone());
    let cone = invariants::tangent_cone(f, &at)?;
    let rel = invariants::relative_multiplicities(f, &at)?;
    Ok(json!({
        "point": [x.to_json(), y.to_json()],
        "multiplicity": cone.iter().map(|t| t.multiplicity).sum::<u32>(),
        "lines": lines_json(&cone, &rel.per_line),
        "k_vector": rel.k_vector,
        "delta": invariants::delta_invariant(f, x, y)?,
        "milnor": invariants::milnor_number(f, x, y)?,
        "branches": branches_at(f, x, y)?.len(),
        "lne": invariants::is_lne_at(f, x, y)?,
    }))
}

pub fn at_infinity(f: &Poly) -> Result<Value> {
    let cone = invariants::tangent_cone(f, &Location::Infinity)?;
    let rel = invariants::relative_multiplicities(f, &Location::Infinity)?;
    Ok(json!({
        "lines": lines_json(&cone, &rel.per_line),
        "k_vector": rel.k_vector,
        "lne": invariants::is_lne_at_infinity(f)?,
    }))
}

fn component(g: &Poly) -> Value {
    match invariants::component_topology(g) {
        Ok(t) => json!({
            "polynomial": g.to_string(),
            "genus": t.genus,
            "ends": t.ends,
            "euler_characteristic": t.euler_characteristic,
        }),
        Err(e) => json!({ "polynomial": g.to_string(), "error": e.to_string() }),
    }
}

pub fn full(f: &Poly) -> Result<Value> {
    let points = invariants::singular_points(f)?
        .iter()
        .map(|(x, y)| at_point(f, x, y))
        .collect::<Result<Vec<_>>>()?;
    let comps: Vec<Value> = f.factor()?.factors.iter().map(|(g, _)| component(g)).collect();
    let lne = match invariants::is_lne(f) {
        Ok(b) => json!(b),
        Err(e @ (Error::Disconnected | Error::NotAbsolutelyIrreducible(_))) => json!({ "error": e.to_string() }),
        Err(e) => return Err(e),
    };
    Ok(json!({
        "polynomial": f.to_string(),
        "degree": invariants::degree(f)?,
        "degree_via_cone": invariants::degree_via_cone(f)?,
        "singular_points": points,
        "infinity": at_infinity(f)?,
        "components": comps,
        "lne": lne,
    }))
}
