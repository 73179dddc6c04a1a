//! Canonical codes.
//!
//! A code is the nested string of the tree with children sorted, each child
//! prefixed by its edge weight. Global trees additionally carry shared
//! identities (singular points, and lines within a point or at infinity);
//! these are first renumbered canonically by canonical labeling of an
//! auxiliary graph, found by color refinement and individualization.

use std::collections::BTreeMap;

use super::{BsTree, Flavor, Kind, TreeNode};
use crate::error::Result;

/// Identity classes of the labeled vertices of a global tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Ident {
    Point(u32),
    /// A line at a point (`Some(point)`) or at infinity (`None`).
    Line(Option<u32>, u32),
}

/// Deterministic code; equal codes exactly for isomorphic trees.
pub fn canonical_code(t: &BsTree) -> Result<String> {
    t.validate()?;
    let code = match t.flavor {
        Flavor::Infinity => node_code(&t.root, &|_, _| None, None),
        Flavor::Global => {
            let ranks = canonical_ranks(&t.root);
            node_code(&t.root, &|n, ctx| ident(n, ctx).map(|id| ranks[&id]), None)
        }
    };
    Ok(code)
}

/// The tree with identities renumbered canonically and children sorted by
/// their codes, so that isomorphic trees become equal.
pub fn canonical_form(t: &BsTree) -> Result<BsTree> {
    t.validate()?;
    let ranks = match t.flavor {
        Flavor::Infinity => BTreeMap::new(),
        Flavor::Global => canonical_ranks(&t.root),
    };
    let rank = |n: &TreeNode, ctx| ident(n, ctx).map(|id| ranks[&id]);
    Ok(BsTree { flavor: t.flavor, root: relabel(&t.root, &rank, None).0 })
}

fn relabel(n: &TreeNode, rank: &dyn Fn(&TreeNode, Option<u32>) -> Option<usize>, ctx: Option<u32>) -> (TreeNode, String) {
    let inner = if n.kind == Kind::Point { n.label } else { ctx };
    let mut kids: Vec<(TreeNode, String)> = n.children.iter().map(|c| relabel(c, rank, inner)).collect();
    kids.sort_by(|a, b| a.1.cmp(&b.1));
    let mut out = TreeNode { kind: n.kind, label: rank(n, ctx).map(|r| r as u32), edge_weight: n.edge_weight, children: vec![] };
    out.children = kids.into_iter().map(|k| k.0).collect();
    let code = node_code(n, rank, ctx);
    let code = match n.edge_weight {
        Some(w) => format!("{w}:{code}"),
        None => code,
    };
    (out, code)
}

fn ident(n: &TreeNode, ctx: Option<u32>) -> Option<Ident> {
    match n.kind {
        Kind::Point => Some(Ident::Point(n.label?)),
        Kind::Direction => Some(Ident::Line(ctx, n.label?)),
        _ => None,
    }
}

fn node_code(n: &TreeNode, rank: &dyn Fn(&TreeNode, Option<u32>) -> Option<usize>, ctx: Option<u32>) -> String {
    let mut s = String::new();
    s.push(n.kind.tag());
    if let Some(r) = rank(n, ctx) {
        s.push_str(&format!("#{r}"));
    }
    if n.children.is_empty() {
        return s;
    }
    let inner = if n.kind == Kind::Point { n.label } else { ctx };
    let mut kids: Vec<String> = n
        .children
        .iter()
        .map(|c| {
            let body = node_code(c, rank, inner);
            match c.edge_weight {
                Some(w) => format!("{w}:{body}"),
                None => body,
            }
        })
        .collect();
    kids.sort();
    s.push('[');
    s.push_str(&kids.join(","));
    s.push(']');
    s
}

/// Vertex-colored graph: tree vertices plus one vertex per identity, joined
/// to its occurrences.
struct Graph {
    color: Vec<String>,
    adj: Vec<Vec<usize>>,
    idents: Vec<(usize, Ident)>,
}

fn add_vertex(g: &mut Graph, color: String) -> usize {
    g.color.push(color);
    g.adj.push(Vec::new());
    g.color.len() - 1
}

fn add_edge(g: &mut Graph, a: usize, b: usize) {
    g.adj[a].push(b);
    g.adj[b].push(a);
}

fn ident_vertex(g: &mut Graph, seen: &mut BTreeMap<Ident, usize>, id: Ident) -> usize {
    if let Some(&v) = seen.get(&id) {
        return v;
    }
    let color = match id {
        Ident::Point(_) => "#P".to_string(),
        Ident::Line(Some(_), _) => "#D".to_string(),
        Ident::Line(None, _) => "#I".to_string(),
    };
    let v = add_vertex(g, color);
    g.idents.push((v, id));
    seen.insert(id, v);
    v
}

fn embed(n: &TreeNode, ctx: Option<u32>, g: &mut Graph, seen: &mut BTreeMap<Ident, usize>) -> usize {
    let w = n.edge_weight.map(|w| w.to_string()).unwrap_or_default();
    let v = add_vertex(g, format!("{}{}", n.kind.tag(), w));
    if let Some(id) = ident(n, ctx) {
        let iv = ident_vertex(g, seen, id);
        add_edge(g, v, iv);
    }
    let inner = if n.kind == Kind::Point { n.label } else { ctx };
    for c in &n.children {
        let cv = embed(c, inner, g, seen);
        add_edge(g, v, cv);
    }
    v
}

/// Canonical rank of every identity, counted separately within points and
/// within each family of lines.
fn canonical_ranks(root: &TreeNode) -> BTreeMap<Ident, usize> {
    let mut g = Graph { color: Vec::new(), adj: Vec::new(), idents: Vec::new() };
    let mut seen = BTreeMap::new();
    embed(root, None, &mut g, &mut seen);
    let order = canonical_order(&g);
    let mut pos = vec![0usize; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut ids = g.idents.clone();
    ids.sort_by_key(|&(v, _)| pos[v]);
    let mut ranks = BTreeMap::new();
    let mut counters: BTreeMap<String, usize> = BTreeMap::new();
    for (v, id) in ids {
        let c = counters.entry(g.color[v].clone()).or_default();
        *c += 1;
        ranks.insert(id, *c);
    }
    ranks
}

type Coloring = Vec<usize>;

/// Renumbers keys by their sorted order.
fn compress<K: Ord + Clone>(keys: &[K]) -> Coloring {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

fn refine(adj: &[Vec<usize>], mut col: Coloring) -> Coloring {
    let mut classes = col.iter().max().map_or(0, |m| m + 1);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..col.len())
            .map(|v| {
                let mut ns: Vec<usize> = adj[v].iter().map(|&u| col[u]).collect();
                ns.sort_unstable();
                (col[v], ns)
            })
            .collect();
        let next = compress(&sigs);
        let n = next.iter().max().map_or(0, |m| m + 1);
        col = next;
        if n == classes {
            return col;
        }
        classes = n;
    }
}

fn individualize(adj: &[Vec<usize>], col: &Coloring, v: usize) -> Coloring {
    let keys: Vec<(usize, bool)> = (0..col.len()).map(|u| (col[u], u != v)).collect();
    refine(adj, compress(&keys))
}

/// First non-singleton color class, if any.
fn target_cell(col: &Coloring) -> Option<Vec<usize>> {
    let mut count = vec![0usize; col.len()];
    for &c in col {
        count[c] += 1;
    }
    let c = (0..col.len()).find(|&c| count[c] > 1)?;
    Some((0..col.len()).filter(|&v| col[v] == c).collect())
}

type Certificate = (Vec<String>, Vec<(usize, usize)>);

fn certificate(g: &Graph, col: &Coloring) -> Certificate {
    let mut order = vec![0usize; col.len()];
    for (v, &c) in col.iter().enumerate() {
        order[c] = v;
    }
    let colors = order.iter().map(|&v| g.color[v].clone()).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (v, ns) in g.adj.iter().enumerate() {
        for &u in ns {
            if col[v] < col[u] {
                edges.push((col[v], col[u]));
            }
        }
    }
    edges.sort_unstable();
    (colors, edges)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Certificate, Coloring)>,
    first: Option<(Certificate, Coloring)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, col: Coloring) {
        let cert = certificate(self.g, &col);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == cert {
                // the two discrete colorings differ by an automorphism
                let mut perm = vec![0usize; col.len()];
                let mut at = vec![0usize; col.len()];
                for (v, &c) in known.1.iter().enumerate() {
                    at[c] = v;
                }
                for (v, &c) in col.iter().enumerate() {
                    perm[at[c]] = v;
                }
                self.autos.push(perm);
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), col.clone()));
        }
        if self.best.as_ref().is_none_or(|b| cert < b.0) {
            self.best = Some((cert, col));
        }
    }

    /// Orbits of the discovered automorphisms fixing `prefix` pointwise.
    fn orbit_reps(&self, prefix: &[usize], cell: &[usize]) -> Vec<usize> {
        let n = self.g.color.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut i = i;
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for a in self.autos.iter().filter(|a| prefix.iter().all(|&v| a[v] == v)) {
            for v in 0..n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, a[v]));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let mut reps = Vec::new();
        let mut roots = Vec::new();
        for &v in cell {
            let r = find(&mut parent, v);
            if !roots.contains(&r) {
                roots.push(r);
                reps.push(v);
            }
        }
        reps
    }

    fn run(&mut self, col: Coloring, prefix: &mut Vec<usize>) {
        let Some(cell) = target_cell(&col) else {
            self.leaf(col);
            return;
        };
        let mut done: Vec<usize> = Vec::new();
        for &v in &cell {
            // skip vertices equivalent to one already explored
            if done.iter().any(|&d| self.same_orbit(prefix, d, v)) {
                continue;
            }
            done.push(v);
            prefix.push(v);
            let next = individualize(&self.g.adj, &col, v);
            self.run(next, prefix);
            prefix.pop();
        }
    }

    fn same_orbit(&self, prefix: &[usize], a: usize, b: usize) -> bool {
        let reps = self.orbit_reps(prefix, &[a, b]);
        reps.len() == 1
    }
}

/// A canonical ordering of the vertices.
fn canonical_order(g: &Graph) -> Vec<usize> {
    let start = refine(&g.adj, compress(&g.color));
    let mut s = Search { g, best: None, first: None, autos: Vec::new() };
    s.run(start, &mut Vec::new());
    let (_, col) = s.best.expect("search reaches a leaf");
    let mut order = vec![0usize; col.len()];
    for (v, &c) in col.iter().enumerate() {
        order[c] = v;
    }
    order
}
