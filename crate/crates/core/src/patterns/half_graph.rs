use serde::{Deserialize, Serialize};

use super::HalfGraphWitness;
use crate::bits::Bits;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfGraphOrder {
    pub order: usize,
    pub witness: HalfGraphWitness,
    /// `false` when the order is a greedy lower bound beyond the exact limit.
    pub exact: bool,
}

/// Largest semi-induced half-graph.
///
/// Ladders of order up to `exact_limit / 2` are searched exhaustively: a
/// ladder's prefixes are ladders, so a depth-first extension at the end
/// reaches every one of them. If the search hits that cap while a larger
/// ladder could still fit, the best ladder is extended greedily and the
/// result is flagged as a lower bound.
pub fn half_graph_order(g: &Graph, exact_limit: usize) -> HalfGraphOrder {
    let n = g.vertex_count();
    let cap = exact_limit / 2;
    let rows: Vec<Bits> = (0..n).map(|v| Bits::from_iter(n, g.neighbors(v).iter().copied())).collect();

    let mut search = Ladder {
        rows: &rows,
        cap,
        current: HalfGraphWitness::default(),
        best: HalfGraphWitness::default(),
    };
    let all = Bits::full(n);
    search.extend(&all, &all);
    let mut witness = search.best;

    let order = witness.order();
    let exact = order < cap || 2 * (order + 1) > n;
    if !exact {
        greedy_extend(g, &mut witness);
    }
    HalfGraphOrder {
        order: witness.order(),
        witness,
        exact,
    }
}

/// Appends `(a, b)` pairs scanned in index order while any pair fits.
fn greedy_extend(g: &Graph, w: &mut HalfGraphWitness) {
    let n = g.vertex_count();
    'grow: loop {
        for a in 0..n {
            if w.a.contains(&a) || w.b.contains(&a) || w.b.iter().any(|&y| g.has_edge(a, y)) {
                continue;
            }
            for b in 0..n {
                if b == a
                    || w.a.contains(&b)
                    || w.b.contains(&b)
                    || !g.has_edge(a, b)
                    || !w.a.iter().all(|&x| g.has_edge(x, b))
                {
                    continue;
                }
                w.a.push(a);
                w.b.push(b);
                continue 'grow;
            }
        }
        break;
    }
}

struct Ladder<'a> {
    rows: &'a [Bits],
    cap: usize,
    current: HalfGraphWitness,
    best: HalfGraphWitness,
}

impl Ladder<'_> {
    /// `a_side`: vertices non-adjacent to every `b` so far and unused.
    /// `b_side`: vertices adjacent to every `a` so far and unused.
    fn extend(&mut self, a_side: &Bits, b_side: &Bits) {
        let depth = self.current.order();
        if depth > self.best.order() {
            self.best = self.current.clone();
        }
        if depth == self.cap {
            return;
        }
        let room = a_side.count().min(b_side.count());
        if depth + room <= self.best.order() || self.best.order() == self.cap {
            return;
        }
        for a in a_side.iter() {
            let bs = b_side.and(&self.rows[a]);
            for b in bs.iter() {
                let mut next_a = a_side.and_not(&self.rows[b]);
                next_a.clear(a);
                next_a.clear(b);
                let mut next_b = b_side.and(&self.rows[a]);
                next_b.clear(a);
                next_b.clear(b);
                self.current.a.push(a);
                self.current.b.push(b);
                self.extend(&next_a, &next_b);
                self.current.a.pop();
                self.current.b.pop();
                if self.best.order() == self.cap {
                    return;
                }
            }
        }
    }
}
