//! Blow-spherical trees at infinity and global blow-spherical trees.
//!
//! Trees are built from a [`CurveData`] summary, which is computed from a
//! plane polynomial or read from a branch-list document.

mod branches;
mod canon;
mod data;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

pub use branches::{parse_branch_list, BranchList};
pub use canon::{canonical_code, canonical_form};
pub use data::{curve_data, infinity_data as infinity_summary, ComponentData, CurveData, DirectionData, PointData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Infinity,
    Global,
}

/// Vertex kinds. The root of a tree at infinity has kind `Infinity`; the root
/// of a global tree has kind `Curve`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Curve,
    Component,
    Point,
    Infinity,
    Direction,
    Leaf,
}

impl Kind {
    pub(crate) fn tag(self) -> char {
        match self {
            Kind::Curve => 'R',
            Kind::Component => 'C',
            Kind::Point => 'P',
            Kind::Infinity => 'I',
            Kind::Direction => 'D',
            Kind::Leaf => 'L',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeNode {
    pub kind: Kind,
    /// Identity of a singular point, or of a tangent line within its point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<u32>,
    /// Weight of the edge to the parent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_weight: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<TreeNode>,
}

impl TreeNode {
    pub fn new(kind: Kind) -> Self {
        TreeNode { kind, label: None, edge_weight: None, children: Vec::new() }
    }

    pub fn labeled(mut self, label: u32) -> Self {
        self.label = Some(label);
        self
    }

    pub fn weighted(mut self, w: i64) -> Self {
        self.edge_weight = Some(w);
        self
    }

    pub fn with_children(mut self, children: Vec<TreeNode>) -> Self {
        self.children = children;
        self
    }

    fn leaf(w: u32) -> Self {
        TreeNode::new(Kind::Leaf).weighted(w as i64)
    }

    pub fn count(&self) -> usize {
        1 + self.children.iter().map(TreeNode::count).sum::<usize>()
    }

    /// Sum of the leaf weights below this vertex.
    pub fn leaf_weight(&self) -> i64 {
        if self.kind == Kind::Leaf {
            return self.edge_weight.unwrap_or(0);
        }
        self.children.iter().map(TreeNode::leaf_weight).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BsTree {
    pub flavor: Flavor,
    pub root: TreeNode,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedTree(msg.into())
}

fn expect_children(n: &TreeNode, kinds: &[Kind], weighted: bool, nonempty: bool) -> Result<()> {
    if nonempty && n.children.is_empty() {
        return Err(malformed(format!("{:?} vertex without children", n.kind)));
    }
    for c in &n.children {
        if !kinds.contains(&c.kind) {
            return Err(malformed(format!("{:?} vertex under {:?}", c.kind, n.kind)));
        }
        if c.edge_weight.is_some() != weighted {
            let what = if weighted { "missing" } else { "unexpected" };
            return Err(malformed(format!("{what} edge weight above {:?} vertex", c.kind)));
        }
    }
    Ok(())
}

fn check_direction(d: &TreeNode) -> Result<()> {
    expect_children(d, &[Kind::Leaf], true, true)?;
    for l in &d.children {
        if l.edge_weight.unwrap() <= 0 {
            return Err(malformed("leaf weights must be positive"));
        }
        if !l.children.is_empty() {
            return Err(malformed("leaf with children"));
        }
    }
    Ok(())
}

fn distinct_labels(n: &TreeNode, kind: Kind) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for c in n.children.iter().filter(|c| c.kind == kind) {
        let l = c.label.ok_or_else(|| malformed(format!("{kind:?} vertex without label")))?;
        if !seen.insert(l) {
            return Err(malformed(format!("repeated {kind:?} label {l}")));
        }
    }
    Ok(())
}

impl BsTree {
    /// Checks the structural invariants of the flavor.
    pub fn validate(&self) -> Result<()> {
        let r = &self.root;
        if r.edge_weight.is_some() {
            return Err(malformed("root with an edge weight"));
        }
        match self.flavor {
            Flavor::Infinity => {
                if r.kind != Kind::Infinity {
                    return Err(malformed("tree at infinity must have an infinity root"));
                }
                expect_children(r, &[Kind::Direction], false, true)?;
                r.children.iter().try_for_each(check_direction)
            }
            Flavor::Global => {
                if r.kind != Kind::Curve {
                    return Err(malformed("global tree must have a curve root"));
                }
                expect_children(r, &[Kind::Component], true, true)?;
                for c in &r.children {
                    expect_children(c, &[Kind::Point, Kind::Infinity], false, true)?;
                    if c.children.iter().filter(|v| v.kind == Kind::Infinity).count() != 1 {
                        return Err(malformed("each component needs exactly one infinity vertex"));
                    }
                    distinct_labels(c, Kind::Point)?;
                    for v in &c.children {
                        expect_children(v, &[Kind::Direction], false, true)?;
                        distinct_labels(v, Kind::Direction)?;
                        v.children.iter().try_for_each(check_direction)?;
                    }
                }
                Ok(())
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trees serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("trees serialize")
    }

    pub fn from_json(text: &str) -> Result<BsTree> {
        let t: BsTree = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        t.validate()?;
        Ok(t)
    }

    /// Graphviz rendering with the root on top and weighted edges labeled.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bstree {\n  node [shape=circle, fontsize=10];\n");
        let mut next = 0usize;
        dot_node(&self.root, &mut next, &mut out);
        out.push_str("}\n");
        out
    }

    /// Degree of the curve as the total weight at infinity.
    pub fn degree(&self) -> i64 {
        match self.flavor {
            Flavor::Infinity => self.root.leaf_weight(),
            Flavor::Global => self
                .root
                .children
                .iter()
                .flat_map(|c| c.children.iter().filter(|v| v.kind == Kind::Infinity))
                .map(TreeNode::leaf_weight)
                .sum(),
        }
    }
}

fn dot_label(n: &TreeNode) -> String {
    match (n.kind, n.label) {
        (Kind::Infinity, _) => "∞".into(),
        (Kind::Curve, _) => "C".into(),
        (Kind::Component, _) => "Cj".into(),
        (Kind::Point, Some(l)) => format!("p{l}"),
        (Kind::Direction, Some(l)) => format!("{l}"),
        (Kind::Direction, None) => "D".into(),
        _ => String::new(),
    }
}

fn dot_node(n: &TreeNode, next: &mut usize, out: &mut String) -> usize {
    let id = *next;
    *next += 1;
    let shape = if n.kind == Kind::Leaf { ", shape=point" } else { "" };
    out.push_str(&format!("  n{id} [label=\"{}\"{shape}];\n", dot_label(n)));
    for c in &n.children {
        let cid = dot_node(c, next, out);
        match c.edge_weight {
            Some(w) => out.push_str(&format!("  n{id} -> n{cid} [label=\"{w}\"];\n")),
            None => out.push_str(&format!("  n{id} -> n{cid};\n")),
        }
    }
    id
}

/// The blow-spherical tree at infinity of the curve (its squarefree part).
pub fn build_infinity_tree(f: &Poly) -> Result<BsTree> {
    Ok(infinity_summary(f)?.infinity_tree())
}

/// The global blow-spherical tree. Every component must be irreducible over
/// the complex numbers.
pub fn build_global_tree(f: &Poly) -> Result<BsTree> {
    Ok(curve_data(f)?.global_tree())
}

pub fn equiv_at_infinity(f: &Poly, g: &Poly) -> Result<bool> {
    Ok(canonical_code(&build_infinity_tree(f)?)? == canonical_code(&build_infinity_tree(g)?)?)
}

pub fn equiv_global(f: &Poly, g: &Poly) -> Result<bool> {
    Ok(canonical_code(&build_global_tree(f)?)? == canonical_code(&build_global_tree(g)?)?)
}

impl CurveData {
    /// Ends grouped by direction, merged over the components.
    pub fn infinity_tree(&self) -> BsTree {
        let mut dirs: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for c in &self.components {
            for d in &c.ends {
                dirs.entry(d.id).or_default().extend(&d.weights);
            }
        }
        let children = dirs
            .into_values()
            .map(|mut w| {
                w.sort_unstable();
                TreeNode::new(Kind::Direction).with_children(w.into_iter().map(TreeNode::leaf).collect())
            })
            .collect();
        BsTree { flavor: Flavor::Infinity, root: TreeNode::new(Kind::Infinity).with_children(children) }
    }

    pub fn global_tree(&self) -> BsTree {
        let dir = |d: &DirectionData| {
            TreeNode::new(Kind::Direction)
                .labeled(d.id)
                .with_children(d.weights.iter().map(|&w| TreeNode::leaf(w)).collect())
        };
        let comps = self
            .components
            .iter()
            .map(|c| {
                let mut kids: Vec<TreeNode> = c
                    .points
                    .iter()
                    .map(|p| TreeNode::new(Kind::Point).labeled(p.id).with_children(p.directions.iter().map(dir).collect()))
                    .collect();
                kids.push(TreeNode::new(Kind::Infinity).with_children(c.ends.iter().map(dir).collect()));
                TreeNode::new(Kind::Component).weighted(c.euler_characteristic).with_children(kids)
            })
            .collect();
        BsTree { flavor: Flavor::Global, root: TreeNode::new(Kind::Curve).with_children(comps) }
    }
}

#[cfg(test)]
mod tests;
