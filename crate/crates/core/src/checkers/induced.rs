use crate::graph::Graph;
use crate::{Error, Result};

/// Default largest pattern handled by the induced-subgraph search.
pub const DEFAULT_INDUCED_LIMIT: usize = 8;

/// Searches for `h` as an induced subgraph of `g`. The certificate maps each
/// vertex of `h` to a distinct vertex of `g`, preserving both edges and
/// non-edges.
pub fn contains_induced(g: &Graph, h: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let k = h.vertex_count();
    if k > limit {
        return Err(Error::SizeLimit {
            what: "induced pattern search",
            size: k,
            limit,
        });
    }
    if k > g.vertex_count() {
        return Ok(None);
    }
    // Place pattern vertices so that each one has as many already placed
    // neighbors as possible; adjacency constraints then prune early.
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = h.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, h.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; g.vertex_count()];
    Ok(place(g, h, &order, 0, &mut image, &mut used).then_some(image))
}

fn place(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for v in 0..g.vertex_count() {
        if used[v] || g.degree(v) < h.degree(x) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&y| h.has_edge(x, y) == g.has_edge(v, image[y]));
        if !consistent {
            continue;
        }
        image[x] = v;
        used[v] = true;
        if place(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[v] = false;
    }
    image[x] = usize::MAX;
    false
}
