use super::*;

fn p(s: &str) -> Poly {
    Poly::parse_xy(s).unwrap()
}

/// Leaf weights per direction vertex, sorted.
fn shape(t: &BsTree) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = t.root.children.iter().map(|d| d.children.iter().map(|l| l.edge_weight.unwrap()).collect()).collect();
    v.sort();
    v
}

fn code(t: &BsTree) -> String {
    canonical_code(t).unwrap()
}

#[test]
fn trees_at_infinity_of_the_figures() {
    assert_eq!(shape(&build_infinity_tree(&p("(y - x^2)*x")).unwrap()), vec![vec![1, 2]]);
    assert_eq!(shape(&build_infinity_tree(&p("x*y")).unwrap()), vec![vec![1], vec![1]]);
    assert_eq!(shape(&build_infinity_tree(&p("y")).unwrap()), vec![vec![1]]);
    assert_eq!(shape(&build_infinity_tree(&p("x^2 + y^2 - 1")).unwrap()), vec![vec![1], vec![1]]);
}

#[test]
fn cusp_global_tree() {
    let t = build_global_tree(&p("y^2 - x^3")).unwrap();
    let c = &t.root.children;
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].edge_weight, Some(1));
    let point = c[0].children.iter().find(|v| v.kind == Kind::Point).unwrap();
    let inf = c[0].children.iter().find(|v| v.kind == Kind::Infinity).unwrap();
    assert_eq!(point.children.len(), 1);
    assert_eq!(point.leaf_weight(), 2);
    assert_eq!(inf.children.len(), 1);
    assert_eq!(inf.leaf_weight(), 3);
    assert_eq!(t.degree(), 3);
}

#[test]
fn crossing_lines_global_tree() {
    let t = build_global_tree(&p("x*y")).unwrap();
    assert_eq!(t.root.children.len(), 2);
    for c in &t.root.children {
        assert_eq!(c.edge_weight, Some(1));
        let pts: Vec<_> = c.children.iter().filter(|v| v.kind == Kind::Point).collect();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].label, Some(1));
        assert_eq!(pts[0].children.len(), 1);
        assert_eq!(pts[0].leaf_weight(), 1);
    }
    // the two lines are tangent to different directions at the shared point
    let labels: Vec<_> = t.root.children.iter().map(|c| c.children[0].children[0].label).collect();
    assert_ne!(labels[0], labels[1]);
}

#[test]
fn main_example_is_equivalent() {
    let a = p("(y - x^4)*(y - x^2 - x^4)");
    let b = p("(y - x^4)*(y - x^3 - x^4)");
    let t = build_global_tree(&a).unwrap();
    for c in &t.root.children {
        assert_eq!(c.edge_weight, Some(1));
        let inf = c.children.iter().find(|v| v.kind == Kind::Infinity).unwrap();
        assert_eq!(inf.leaf_weight(), 4);
    }
    assert!(equiv_global(&a, &b).unwrap());
    assert!(!equiv_global(&p("y^2 - x^3"), &p("y")).unwrap());
    assert!(equiv_global(&a, &a).unwrap());
}

#[test]
fn infinity_equivalences() {
    assert!(equiv_at_infinity(&p("x*y"), &p("x^2 + y^2 - 1")).unwrap());
    assert!(!equiv_at_infinity(&p("y"), &p("x^2 + y^2 - 1")).unwrap());
    assert!(!equiv_at_infinity(&p("(y - x^2)*x"), &p("x*y")).unwrap());
    assert!(matches!(build_infinity_tree(&p("5")), Err(Error::ConstantPolynomial)));
}

#[test]
fn dot_of_first_figure() {
    let dot = build_infinity_tree(&p("(y - x^2)*x")).unwrap().to_dot();
    let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
    assert_eq!(nodes, 4);
    assert_eq!(edges.len(), 3);
    let mut labels: Vec<&str> = edges.iter().filter_map(|e| e.split("label=\"").nth(1)).map(|s| s.trim_end_matches("\"];")).collect();
    labels.sort();
    assert_eq!(labels, vec!["1", "2"]);
}

#[test]
fn json_round_trip() {
    let t = build_global_tree(&p("y^2 - x^3")).unwrap();
    assert_eq!(BsTree::from_json(&t.to_json()).unwrap(), t);
    assert!(matches!(BsTree::from_json(""), Err(Error::Schema(_))));
    assert!(matches!(BsTree::from_json("{\"flavor\":\"infinity\"}"), Err(Error::Schema(_))));
    let bad = r#"{"flavor":"infinity","root":{"kind":"infinity","children":[{"kind":"direction","children":[{"kind":"leaf","edge_weight":0}]}]}}"#;
    assert!(matches!(BsTree::from_json(bad), Err(Error::MalformedTree(_))));
}

fn component(chi: i64, points: &[u32], inf: u32) -> TreeNode {
    let mut kids: Vec<TreeNode> = points
        .iter()
        .map(|&l| TreeNode::new(Kind::Point).labeled(l).with_children(vec![dir(1, &[1])]))
        .collect();
    kids.push(TreeNode::new(Kind::Infinity).with_children(vec![dir(1, &[inf])]));
    TreeNode::new(Kind::Component).weighted(chi).with_children(kids)
}

fn dir(label: u32, w: &[u32]) -> TreeNode {
    TreeNode::new(Kind::Direction).labeled(label).with_children(w.iter().map(|&w| TreeNode::leaf(w)).collect())
}

fn global(comps: Vec<TreeNode>) -> BsTree {
    BsTree { flavor: Flavor::Global, root: TreeNode::new(Kind::Curve).with_children(comps) }
}

#[test]
fn codes_respect_point_sharing() {
    // same components, different sharing of the singular points
    let a = global(vec![component(1, &[1], 1), component(1, &[1, 2], 1), component(0, &[2], 2)]);
    let b = global(vec![component(1, &[1], 1), component(1, &[2, 1], 1), component(0, &[1], 2)]);
    let c = global(vec![component(0, &[7], 2), component(1, &[7, 3], 1), component(1, &[3], 1)]);
    assert_ne!(code(&a), code(&b));
    assert_eq!(code(&a), code(&c));
}

#[test]
fn codes_respect_line_sharing() {
    let shared = |l1, l2| {
        global(vec![
            TreeNode::new(Kind::Component).weighted(1).with_children(vec![
                TreeNode::new(Kind::Point).labeled(1).with_children(vec![dir(l1, &[1])]),
                TreeNode::new(Kind::Infinity).with_children(vec![dir(1, &[1])]),
            ]),
            TreeNode::new(Kind::Component).weighted(1).with_children(vec![
                TreeNode::new(Kind::Point).labeled(1).with_children(vec![dir(l2, &[1])]),
                TreeNode::new(Kind::Infinity).with_children(vec![dir(2, &[1])]),
            ]),
        ])
    };
    assert_ne!(code(&shared(1, 1)), code(&shared(1, 2)));
    assert_eq!(code(&shared(1, 2)), code(&shared(2, 1)));
}

#[test]
fn symmetric_trees_canonize_quickly() {
    // many identical components through one point
    let comps = (0..12).map(|_| component(1, &[1], 1)).collect();
    let t = global(comps);
    assert!(code(&t).starts_with("R["));
}

#[test]
fn branch_list_matches_polynomial() {
    let doc = r#"{"components": [
        {"degree": 1, "euler_characteristic": 1, "ends": [{"direction": [1,0,0,0], "k": 1}],
         "points": [{"coords": [0,0,0,0], "branches": [{"direction": [1,0,0,0], "k": 1}]}]},
        {"degree": 1, "euler_characteristic": 1, "ends": [{"direction": [0,0,1,0], "k": 1}],
         "points": [{"coords": [0,0,0,0], "branches": [{"direction": [0,0,3,0], "k": 1}]}]}]}"#;
    let bl = parse_branch_list(doc).unwrap();
    assert_eq!(code(&bl.global_tree().unwrap()), code(&build_global_tree(&p("x*y")).unwrap()));
    assert_eq!(code(&bl.infinity_tree()), code(&build_infinity_tree(&p("x*y")).unwrap()));
}

#[test]
fn canonical_forms_coincide_for_isomorphic_trees() {
    let a = global(vec![component(1, &[1], 1), component(1, &[1, 2], 1), component(0, &[2], 2)]);
    let c = global(vec![component(0, &[7], 2), component(1, &[7, 3], 1), component(1, &[3], 1)]);
    assert_eq!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
    let f = canonical_form(&build_global_tree(&p("x*y*(x + y - 1)")).unwrap()).unwrap();
    assert_eq!(canonical_code(&f).unwrap(), code(&build_global_tree(&p("x*y*(x + y - 1)")).unwrap()));
}
