use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Two disjoint vertex sets with every cross pair adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicliqueWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Finds `K_{s,t}` as a (not necessarily induced) subgraph: `left` has `s`
/// vertices and `right` has `t`.
///
/// Enumerates sets of the smaller size in increasing index order while
/// maintaining their common neighborhood, which is automatically disjoint
/// from the set itself. Exact.
pub fn contains_biclique_subgraph(g: &Graph, s: usize, t: usize) -> Option<BicliqueWitness> {
    let (small, large) = (s.min(t), s.max(t));
    let n = g.vertex_count();
    let (a, b) = if small == 0 {
        if n < large {
            return None;
        }
        (Vec::new(), (0..large).collect())
    } else {
        let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= large).collect();
        let mut chosen = Vec::with_capacity(small);
        let common = extend(g, &candidates, 0, small, large, None, &mut chosen)?;
        (chosen, common[..large].to_vec())
    };
    Some(if s <= t {
        BicliqueWitness { left: a, right: b }
    } else {
        BicliqueWitness { left: b, right: a }
    })
}

fn extend(
    g: &Graph,
    candidates: &[usize],
    from: usize,
    size: usize,
    need: usize,
    common: Option<&[usize]>,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == size {
        return common.map(<[usize]>::to_vec);
    }
    let slots_left = size - chosen.len();
    for i in from..candidates.len() {
        if candidates.len() - i < slots_left {
            break;
        }
        let v = candidates[i];
        let next: Vec<usize> = match common {
            None => g.neighbors(v).to_vec(),
            Some(c) => intersect_sorted(c, g.neighbors(v)),
        };
        if next.len() < need {
            continue;
        }
        chosen.push(v);
        if let Some(found) = extend(g, candidates, i + 1, size, need, Some(&next), chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::witness::validate_biclique;

    #[test]
    fn examples() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let w = contains_biclique_subgraph(&c4, 2, 2).unwrap();
        assert!(validate_biclique(&c4, &w, 2, 2).is_ok());

        let tree = generate(&FamilySpec::Grid { rows: 1, cols: 7 }).unwrap();
        assert!(contains_biclique_subgraph(&tree, 2, 2).is_none());

        let k33 = generate(&FamilySpec::Biclique { s: 3, t: 3 }).unwrap();
        let w = contains_biclique_subgraph(&k33, 2, 2).unwrap();
        assert!(validate_biclique(&k33, &w, 2, 2).is_ok());
        assert!(contains_biclique_subgraph(&k33, 3, 3).is_some());
        assert!(contains_biclique_subgraph(&k33, 3, 4).is_none());
    }

    #[test]
    fn argument_order_is_respected() {
        let g = generate(&FamilySpec::Biclique { s: 2, t: 4 }).unwrap();
        let w = contains_biclique_subgraph(&g, 4, 2).unwrap();
        assert_eq!((w.left.len(), w.right.len()), (4, 2));
        assert!(validate_biclique(&g, &w, 4, 2).is_ok());
    }
}
