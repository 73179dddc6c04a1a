mod common;

use bscurve::puiseux::{branches_at, branches_at_infinity, contact_order, verify_branch, Order, PuiseuxBranch};
use bscurve::{Part, Poly, Rat};
use common::{corpus, linear_map, origin_curve, zero};
use proptest::prelude::*;

fn order(a: &PuiseuxBranch, b: &PuiseuxBranch) -> Option<Rat> {
    match contact_order(a, b).unwrap() {
        Order::Finite(c) => Some(c),
        Order::Infinite => None,
    }
}

fn lowest_degree(f: &Poly) -> u32 {
    f.homogeneous_part(Part::Lowest).unwrap().total_degree()
}

fn contact_profile(bs: &[PuiseuxBranch]) -> Vec<Option<Rat>> {
    let mut v = Vec::new();
    for (i, a) in bs.iter().enumerate() {
        for b in &bs[i + 1..] {
            v.push(order(a, b));
        }
    }
    v.sort();
    v
}

#[test]
fn conservation_on_the_corpus() {
    for (s, f) in corpus() {
        let ends: u32 = branches_at_infinity(&f).unwrap().iter().map(|b| b.ramification_index).sum();
        assert_eq!(ends, f.total_degree(), "{s}");
        for (x, y) in bscurve::invariants::singular_points(&f).unwrap() {
            for b in branches_at(&f, &x, &y).unwrap() {
                assert!(verify_branch(&f, &b).unwrap(), "{s}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn multiplicity_is_conserved(f in origin_curve()) {
        let bs = branches_at(&f, &zero(), &zero()).unwrap();
        let total: u32 = bs.iter().map(|b| b.ramification_index).sum();
        prop_assert_eq!(total, lowest_degree(&f));
        for b in &bs {
            prop_assert!(verify_branch(&f, b).unwrap());
        }
    }

    #[test]
    fn degree_is_conserved_at_infinity(f in origin_curve()) {
        let total: u32 = branches_at_infinity(&f).unwrap().iter().map(|b| b.ramification_index).sum();
        prop_assert_eq!(total, f.total_degree());
    }

    #[test]
    fn contact_orders_are_symmetric_and_ultrametric(f in origin_curve()) {
        let bs = branches_at(&f, &zero(), &zero()).unwrap();
        for a in &bs {
            for b in &bs {
                prop_assert_eq!(order(a, b), order(b, a));
                for c in &bs {
                    let (ab, ac, bc) = (order(a, b), order(a, c), order(b, c));
                    // `None` is infinite contact, above every finite order
                    let key = |o: &Option<Rat>| o.clone().map_or((1, Rat::from_integer(0.into())), |r| (0, r));
                    prop_assert!(key(&ab) >= key(&ac).min(key(&bc)));
                }
            }
        }
    }

    #[test]
    fn branches_are_linearly_equivariant(f in origin_curve(), m in linear_map()) {
        let g = f.affine_substitute(&m);
        let (bf, bg) = (branches_at(&f, &zero(), &zero()).unwrap(), branches_at(&g, &zero(), &zero()).unwrap());
        prop_assert_eq!(bf.len(), bg.len());
        let ram = |bs: &[PuiseuxBranch]| {
            let mut v: Vec<u32> = bs.iter().map(|b| b.ramification_index).collect();
            v.sort();
            v
        };
        prop_assert_eq!(ram(&bf), ram(&bg));
        prop_assert_eq!(contact_profile(&bf), contact_profile(&bg));
    }
}
