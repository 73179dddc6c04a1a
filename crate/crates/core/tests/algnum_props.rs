use bscurve::algnum::isolate_roots;
use bscurve::arith::ratio;
use bscurve::UPoly;
use proptest::prelude::*;

fn squarefree_upoly() -> impl Strategy<Value = UPoly> {
    proptest::collection::vec(-4i64..=4, 2..=7)
        .prop_map(|c| UPoly::from_ints(&c).squarefree_part())
        .prop_filter("constant", |p| !p.is_constant())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn one_root_per_degree(p in squarefree_upoly()) {
        prop_assert_eq!(isolate_roots(&p).unwrap().len(), p.deg());
    }

    #[test]
    fn equality_is_an_equivalence(p in squarefree_upoly()) {
        let roots = isolate_roots(&p).unwrap();
        let refined: Vec<_> = roots.iter().map(|r| r.refine(&ratio(1, 1000))).collect();
        for (i, a) in roots.iter().enumerate() {
            prop_assert!(a.equals(a));
            prop_assert!(a.equals(&refined[i]));
            for (j, b) in roots.iter().enumerate() {
                prop_assert_eq!(a.equals(b), i == j);
                prop_assert_eq!(a.equals(b), b.equals(a));
                prop_assert_eq!(refined[i].equals(&refined[j]), i == j);
            }
        }
    }

    #[test]
    fn roots_are_closed_under_conjugation(p in squarefree_upoly()) {
        let roots = isolate_roots(&p).unwrap();
        for r in &roots {
            let c = r.conjugate();
            prop_assert_eq!(roots.iter().filter(|s| s.equals(&c)).count(), 1);
            prop_assert!(c.conjugate().equals(r));
            prop_assert_eq!(c.equals(r), r.is_real());
        }
    }
}
