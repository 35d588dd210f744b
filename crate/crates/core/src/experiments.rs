//! Seeded sweeps that run the finite cores of the extraction and
//! composition arguments on random partitions.
//!
//! Trial `k` of a sweep with base seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(s + k)` (wrapping), so single trials can be
//! replayed and results do not depend on evaluation order.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checkers::{compute_treedepth, contains_biclique_subgraph, make_checker, BicliqueWitness};
use crate::decomposition::{random_labels, Decomposition};
use crate::extremal::{densest_part_pair, kst_bound, rational_to_f64, KstQuery};
use crate::graph::{generate, FamilySpec};
use crate::patterns::{half_graph_pigeonhole, HalfGraphWitness};
use crate::subsets::Colex;
use crate::witness::{validate_biclique, validate_half_graph};
use crate::{Error, Result};

pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeaklySparseTrial {
    pub seed: u64,
    pub pair: (usize, usize),
    pub edges: usize,
    pub union_vertices: usize,
    /// Certified KST bound for `K_{2,2}` on the pair union, as a decimal
    /// approximation; the comparison itself is exact.
    pub kst_bound: f64,
    pub exceeds_bound: bool,
    /// A `K_{2,2}` in the pair union, in original vertex indices.
    pub witness: Option<BicliqueWitness>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeaklySparseReport {
    pub n: usize,
    pub parts: usize,
    pub pigeonhole_floor: usize,
    pub trials: Vec<WeaklySparseTrial>,
    pub violations: usize,
}

/// Partitions `K_{n,n}` at random into `parts` parts and takes the densest
/// part pair. A trial is fine when the pair holds at least `⌈n²/N²⌉` edges
/// and, whenever its edge count beats the KST bound for `K_{2,2}` on the
/// pair union, a validated `K_{2,2}` is found there.
pub fn weakly_sparse(n: usize, parts: usize, trials: usize, seed: u64) -> Result<WeaklySparseReport> {
    if n == 0 || parts == 0 {
        return Err(Error::input("weakly-sparse sweep needs n >= 1 and parts >= 1"));
    }
    let g = Arc::new(generate(&FamilySpec::Biclique { s: n, t: n })?);
    let floor = g.edge_count().div_ceil(parts * parts);
    let mut out = Vec::with_capacity(trials);
    for k in 0..trials {
        let mut rng = trial_rng(seed, k);
        let labels = random_labels(g.vertex_count(), parts, &mut rng);
        let d = Decomposition::from_labels(Arc::clone(&g), &labels, 2)?;
        let (i, j, edges) = densest_part_pair(&g, &d)?;
        let (union, map) = d.union_parts(&[i, j])?;
        let bound = kst_bound(KstQuery::new(union.vertex_count() as u64, 2, 2)?);
        let exceeds = BigRational::from_integer(edges.into()) > bound;
        let witness = if exceeds {
            contains_biclique_subgraph(&union, 2, 2).map(|w| BicliqueWitness {
                left: w.left.iter().map(|&v| map[v]).collect(),
                right: w.right.iter().map(|&v| map[v]).collect(),
            })
        } else {
            None
        };
        let certified = witness
            .as_ref()
            .is_some_and(|w| validate_biclique(&g, w, 2, 2).is_ok());
        out.push(WeaklySparseTrial {
            seed: seed.wrapping_add(k as u64),
            pair: (i, j),
            edges,
            union_vertices: union.vertex_count(),
            kst_bound: rational_to_f64(&bound),
            exceeds_bound: exceeds,
            witness,
            ok: edges >= floor && (!exceeds || certified),
        });
    }
    let violations = out.iter().filter(|t| !t.ok).count();
    Ok(WeaklySparseReport {
        n,
        parts,
        pigeonhole_floor: floor,
        trials: out,
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PigeonholeTrial {
    pub seed: u64,
    pub parts: (usize, usize),
    pub order: usize,
    pub witness: HalfGraphWitness,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PigeonholeReport {
    pub m: usize,
    pub parts: usize,
    pub guaranteed: usize,
    pub trials: Vec<PigeonholeTrial>,
    pub violations: usize,
}

/// Random `parts`-part partitions of the half-graph of order `m`; each
/// trial must yield a validated half-graph of order `⌈m/N²⌉` inside at most
/// two parts.
pub fn half_graph_pigeonhole_sweep(
    m: usize,
    parts: usize,
    trials: usize,
    seed: u64,
) -> Result<PigeonholeReport> {
    if m == 0 || parts == 0 {
        return Err(Error::input("pigeonhole sweep needs m >= 1 and parts >= 1"));
    }
    let g = Arc::new(generate(&FamilySpec::HalfGraph { n: m })?);
    let guaranteed = m.div_ceil(parts * parts);
    let mut out = Vec::with_capacity(trials);
    for k in 0..trials {
        let mut rng = trial_rng(seed, k);
        let labels = random_labels(g.vertex_count(), parts, &mut rng);
        let d = Decomposition::from_labels(Arc::clone(&g), &labels, 2)?;
        let r = half_graph_pigeonhole(m, &d)?;
        let inside: BTreeSet<usize> = r
            .witness
            .a
            .iter()
            .chain(&r.witness.b)
            .map(|&v| d.part_of(v))
            .collect();
        let ok = r.witness.order() >= guaranteed
            && inside.len() <= 2
            && validate_half_graph(&g, &r.witness).is_ok();
        out.push(PigeonholeTrial {
            seed: seed.wrapping_add(k as u64),
            parts: r.parts,
            order: r.witness.order(),
            witness: r.witness,
            ok,
        });
    }
    let violations = out.iter().filter(|t| !t.ok).count();
    Ok(PigeonholeReport {
        m,
        parts,
        guaranteed,
        trials: out,
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionTrial {
    pub seed: u64,
    pub vertices: usize,
    pub outer_parts: usize,
    pub max_inner_parts: usize,
    pub checker: String,
    pub composed_parts: usize,
    #[serde(with = "crate::decimal")]
    pub bound: BigUint,
    pub verified: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionReport {
    pub p: usize,
    pub trials: Vec<CompositionTrial>,
    pub violations: usize,
}

/// One random composition instance: a `G(n, 0.4)` graph on `4..=max_vertices`
/// vertices, an outer partition into `2..=max_outer` parts, and for every
/// outer `p`-union an inner partition into `1..=max_inner` parts.
pub struct CompositionInstance {
    pub outer: Decomposition,
    pub inner: BTreeMap<Vec<usize>, Decomposition>,
}

pub fn random_composition_instance<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_outer: usize,
    max_inner: usize,
    p: usize,
) -> Result<CompositionInstance> {
    if max_vertices < 4 || max_outer < 2 || max_inner < 1 || p == 0 {
        return Err(Error::input("composition instance parameters too small"));
    }
    let n = rng.gen_range(4..=max_vertices);
    let g = Arc::new(generate(&FamilySpec::Gnp {
        n,
        p: 0.4,
        seed: rng.gen(),
    })?);
    let outer_parts = rng.gen_range(2..=max_outer.min(n));
    let outer = Decomposition::from_labels(Arc::clone(&g), &random_labels(n, outer_parts, rng), p)?;
    let mut inner = BTreeMap::new();
    for subset in Colex::new(outer.part_count(), p) {
        let (union, _) = outer.union_parts(&subset)?;
        let parts = rng.gen_range(1..=max_inner);
        let labels = random_labels(union.vertex_count(), parts, rng);
        inner.insert(subset, Decomposition::from_labels(Arc::new(union), &labels, p)?);
    }
    Ok(CompositionInstance { outer, inner })
}

/// Random compositions checked against the part-count bound and against a
/// treedepth checker every inner decomposition is known to pass (its
/// threshold is the largest treedepth among the inner `p`-unions).
pub fn composition_sweep(trials: usize, seed: u64) -> Result<CompositionReport> {
    const P: usize = 2;
    let mut out = Vec::with_capacity(trials);
    for k in 0..trials {
        let mut rng = trial_rng(seed, k);
        let inst = random_composition_instance(&mut rng, 12, 4, 3, P)?;
        let mut threshold = 0;
        for d in inst.inner.values() {
            for subset in Colex::new(d.part_count(), d.union_size()) {
                let (u, _) = d.union_parts(&subset)?;
                threshold = threshold.max(compute_treedepth(&u, 16)?.value);
            }
        }
        let checker = make_checker("treedepth_le", &[threshold])?;
        let composed = inst.outer.compose(&inst.inner)?;
        let verified = composed.decomposition.verify(&checker)?.passed();
        let parts = composed.decomposition.part_count();
        out.push(CompositionTrial {
            seed: seed.wrapping_add(k as u64),
            vertices: inst.outer.graph().vertex_count(),
            outer_parts: inst.outer.part_count(),
            max_inner_parts: inst.inner.values().map(Decomposition::part_count).max().unwrap_or(1),
            checker: checker.name(),
            composed_parts: parts,
            ok: verified && BigUint::from(parts) <= composed.bound,
            bound: composed.bound,
            verified,
        });
    }
    let violations = out.iter().filter(|t| !t.ok).count();
    Ok(CompositionReport {
        p: P,
        trials: out,
        violations,
    })
}
