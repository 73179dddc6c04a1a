mod common;

use bscurve::invariants::{self, Location};
use bscurve::puiseux::branches_at;
use bscurve::Poly;
use common::{linear_map, origin_curve, zero};
use proptest::prelude::*;

fn origin() -> Location {
    Location::Point(zero(), zero())
}

fn multiplicity(f: &Poly, at: &Location) -> u32 {
    invariants::tangent_cone(f, at).unwrap().iter().map(|t| t.multiplicity).sum()
}

fn topologies(f: &Poly) -> Vec<(u64, u32, i64)> {
    let mut v: Vec<_> = f
        .factor()
        .unwrap()
        .factors
        .iter()
        .filter_map(|(g, _)| invariants::component_topology(g).ok())
        .map(|t| (t.genus, t.ends, t.euler_characteristic))
        .collect();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn weights_add_up_to_the_multiplicity(f in origin_curve()) {
        for at in [origin(), Location::Infinity] {
            let rel = invariants::relative_multiplicities(&f, &at).unwrap();
            let by_line: u32 = rel.per_line.iter().flat_map(|l| &l.weights).sum();
            prop_assert_eq!(by_line, multiplicity(&f, &at));
            prop_assert_eq!(rel.k_vector.iter().sum::<u32>(), by_line);
        }
        prop_assert_eq!(multiplicity(&f, &Location::Infinity), f.total_degree());
    }

    #[test]
    fn milnor_and_delta_agree(f in origin_curve()) {
        let (o, z) = (zero(), zero());
        let mu = invariants::milnor_number(&f, &o, &z).unwrap() as i64;
        let delta = invariants::delta_invariant(&f, &o, &z).unwrap() as i64;
        let r = branches_at(&f, &o, &z).unwrap().len() as i64;
        prop_assert_eq!(mu, 2 * delta - r + 1);
    }

    #[test]
    fn degree_through_the_cone(f in origin_curve()) {
        let d = invariants::degree(&f).unwrap();
        let dc = invariants::degree_via_cone(&f).unwrap();
        prop_assert_eq!(d, dc);
        prop_assert_eq!(dc == 1, f.total_degree() == 1);
    }

    #[test]
    fn invariants_survive_linear_changes(f in origin_curve(), m in linear_map()) {
        let g = f.affine_substitute(&m);
        let (o, z) = (zero(), zero());
        let kv = |h: &Poly| invariants::relative_multiplicities(h, &origin()).unwrap().k_vector;
        prop_assert_eq!(kv(&f), kv(&g));
        let kinf = |h: &Poly| invariants::relative_multiplicities(h, &Location::Infinity).unwrap().k_vector;
        prop_assert_eq!(kinf(&f), kinf(&g));
        prop_assert_eq!(invariants::degree(&f).unwrap(), invariants::degree(&g).unwrap());
        prop_assert_eq!(invariants::delta_invariant(&f, &o, &z).unwrap(), invariants::delta_invariant(&g, &o, &z).unwrap());
        prop_assert_eq!(invariants::milnor_number(&f, &o, &z).unwrap(), invariants::milnor_number(&g, &o, &z).unwrap());
        prop_assert_eq!(topologies(&f), topologies(&g));
    }
}
