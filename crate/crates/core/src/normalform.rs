//! Normal forms at infinity: the combinatorial data `A` and their
//! realizations `X_A`.

use std::cmp::Ordering;

use serde_json::Value;

use crate::arith::rat;
use crate::bstree::build_infinity_tree;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Groups of relative multiplicities, one group per direction at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalFormData {
    pub groups: Vec<Vec<u32>>,
}

/// Order on groups: by size, then lexicographically.
fn group_order(a: &[u32], b: &[u32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl NormalFormData {
    pub fn new(groups: Vec<Vec<u32>>) -> Self {
        NormalFormData { groups }
    }

    /// Sorts each group and the list of groups into canonical order.
    pub fn canonicalize(mut groups: Vec<Vec<u32>>) -> Self {
        for g in &mut groups {
            g.sort_unstable();
        }
        groups.sort_by(|a, b| group_order(a, b));
        NormalFormData { groups }
    }

    pub fn degree(&self) -> u32 {
        self.groups.iter().flatten().sum()
    }

    /// Reads `[[k11, k12, ...], [k21, ...], ...]`; the ordering is checked,
    /// not repaired.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidNormalForm(e.to_string()))?;
        let bad = || Error::InvalidNormalForm("expected a list of lists of positive integers".into());
        let groups = v
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|g| {
                g.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|k| k.as_u64().filter(|&k| k >= 1 && k <= u32::MAX as u64).map(|k| k as u32).ok_or_else(bad))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let a = NormalFormData { groups };
        if let Some(why) = a.violation() {
            return Err(Error::InvalidNormalForm(why));
        }
        Ok(a)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.groups).expect("lists serialize")
    }

    fn violation(&self) -> Option<String> {
        if self.groups.is_empty() {
            return Some("at least one group is required".into());
        }
        for g in &self.groups {
            if g.is_empty() {
                return Some("groups must be nonempty".into());
            }
            if g.contains(&0) {
                return Some("weights must be positive".into());
            }
            if g.windows(2).any(|w| w[0] > w[1]) {
                return Some(format!("weights within {g:?} must ascend"));
            }
        }
        for w in self.groups.windows(2) {
            if group_order(&w[0], &w[1]) == Ordering::Greater {
                return Some(format!("group {:?} must come before {:?}", w[1], w[0]));
            }
        }
        None
    }
}

pub fn validate(a: &NormalFormData) -> bool {
    a.violation().is_none()
}

/// `∏_i ∏_j (j (y - i x)^(k_ij - 1) - (y + i x)^k_ij)`, indices from 1.
pub fn realize(a: &NormalFormData) -> Result<Poly> {
    if let Some(why) = a.violation() {
        return Err(Error::InvalidNormalForm(why));
    }
    let vars = ["x", "y"];
    let x = Poly::from_terms(&vars, [(vec![1, 0], rat(1))]);
    let y = Poly::from_terms(&vars, [(vec![0, 1], rat(1))]);
    let mut out = Poly::from_terms(&vars, [(vec![0, 0], rat(1))]);
    for (i, g) in a.groups.iter().enumerate() {
        let ix = x.scale(&rat(i as i64 + 1));
        let minus = &y - &ix;
        let plus = &y + &ix;
        for (j, &k) in g.iter().enumerate() {
            let factor = &minus.pow(k - 1).scale(&rat(j as i64 + 1)) - &plus.pow(k);
            out = &out * &factor;
        }
    }
    Ok(out)
}

/// The unique datum whose realization has the same tree at infinity.
pub fn extract(f: &Poly) -> Result<NormalFormData> {
    let t = build_infinity_tree(f)?;
    let groups = t.root.children.iter().map(|d| d.children.iter().map(|l| l.edge_weight.unwrap() as u32).collect()).collect();
    Ok(NormalFormData::canonicalize(groups))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bstree::equiv_at_infinity;

    fn nf(g: &[&[u32]]) -> NormalFormData {
        NormalFormData::new(g.iter().map(|v| v.to_vec()).collect())
    }

    fn p(s: &str) -> Poly {
        Poly::parse_xy(s).unwrap()
    }

    #[test]
    fn validity() {
        assert!(validate(&nf(&[&[1]])));
        assert!(!validate(&nf(&[&[2, 1]])));
        assert!(!validate(&nf(&[&[1, 2], &[1]])));
        assert!(validate(&nf(&[&[1], &[1, 2]])));
        assert!(validate(&nf(&[&[1, 1], &[1, 2]])));
        assert!(!validate(&nf(&[&[1, 2], &[1, 1]])));
        assert!(!validate(&nf(&[])));
        assert!(!validate(&nf(&[&[]])));
    }

    #[test]
    fn realizations_by_hand() {
        assert_eq!(realize(&nf(&[&[1]])).unwrap(), p("1 - (y + x)"));
        assert_eq!(realize(&nf(&[&[2]])).unwrap(), p("(y - x) - (y + x)^2"));
        assert_eq!(realize(&nf(&[&[1], &[1]])).unwrap(), p("(1 - (y + x))*(1 - (y + 2*x))"));
        assert_eq!(realize(&nf(&[&[1]])).unwrap().to_string(), "1 - y - x");
        assert!(matches!(realize(&nf(&[&[2, 1]])), Err(Error::InvalidNormalForm(_))));
    }

    #[test]
    fn extraction() {
        assert_eq!(extract(&p("(y - x^2)*x")).unwrap(), nf(&[&[1, 2]]));
        assert_eq!(extract(&p("x*y")).unwrap(), nf(&[&[1], &[1]]));
        assert_eq!(extract(&p("x^2 + y^2 - 1")).unwrap(), nf(&[&[1], &[1]]));
        // two parallel lines: repeated weights on one direction
        assert_eq!(extract(&p("(y - x)*(y - x - 1)")).unwrap(), nf(&[&[1, 1]]));
    }

    #[test]
    fn realization_is_equivalent_to_source() {
        for s in ["(y - x^2)*x", "x*y*(x - y)", "y^3 - x^2", "(y^2 - x^3)*(y - x)"] {
            let f = p(s);
            let a = extract(&f).unwrap();
            assert!(equiv_at_infinity(&f, &realize(&a).unwrap()).unwrap(), "{s}");
        }
    }

    #[test]
    fn json_form() {
        let a = NormalFormData::from_json("[[1],[1,2]]").unwrap();
        assert_eq!(a, nf(&[&[1], &[1, 2]]));
        assert_eq!(a.to_json(), "[[1],[1,2]]");
        assert!(NormalFormData::from_json("[[2,1]]").is_err());
        assert!(NormalFormData::from_json("[[0]]").is_err());
        assert!(NormalFormData::from_json("{}").is_err());
    }
}
