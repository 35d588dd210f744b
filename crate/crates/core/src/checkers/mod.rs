//! Hereditary graph properties used as the target classes of
//! decompositions.
//!
//! Every built-in checker is hereditary: if it accepts a graph it accepts
//! all induced subgraphs of that graph. Custom predicates may declare
//! otherwise, and verification refuses them.

mod biclique;
mod degree;
mod induced;
mod subdivision;
mod treedepth;

use std::fmt;
use std::sync::Arc;

use crate::graph::Graph;
use crate::{Error, Result};

pub use biclique::{contains_biclique_subgraph, BicliqueWitness};
pub use degree::min_deletions_to_degree;
pub use induced::{contains_induced, DEFAULT_INDUCED_LIMIT};
pub use subdivision::{
    contains_clique_subdivision, SubdivisionWitness, DEFAULT_SUBDIVISION_BRANCH_LIMIT,
    DEFAULT_SUBDIVISION_VERTEX_LIMIT,
};
pub use treedepth::{
    compute_treedepth, treedepth_or_bound, treedepth_upper_bound, Treedepth, TreedepthForest,
    DEFAULT_TREEDEPTH_LIMIT,
};

/// Size limits of the exact procedures behind the checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactLimits {
    /// Largest connected component for exact treedepth.
    pub treedepth_vertices: usize,
    /// Largest pattern for induced-subgraph search.
    pub induced_pattern_vertices: usize,
    /// Largest `q` for clique-subdivision search.
    pub subdivision_branch: usize,
    /// Largest host graph for clique-subdivision search.
    pub subdivision_vertices: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            treedepth_vertices: DEFAULT_TREEDEPTH_LIMIT,
            induced_pattern_vertices: DEFAULT_INDUCED_LIMIT,
            subdivision_branch: DEFAULT_SUBDIVISION_BRANCH_LIMIT,
            subdivision_vertices: DEFAULT_SUBDIVISION_VERTEX_LIMIT,
        }
    }
}

type Predicate = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

#[derive(Clone)]
pub enum CheckerKind {
    MaxDegreeLe(usize),
    ComponentsLe(usize),
    TreedepthLe(usize),
    DegreeAfterDeletionsLe { k: usize, d: usize },
    BicliqueFree { s: usize, t: usize },
    ExcludesInduced(Graph),
    CliqueSubdivisionFree { p: usize, q: usize },
    Custom {
        name: String,
        hereditary: bool,
        predicate: Predicate,
    },
}

/// A named graph property with an exact decision procedure.
#[derive(Clone)]
pub struct PropertyChecker {
    kind: CheckerKind,
    limits: ExactLimits,
}

impl fmt::Debug for PropertyChecker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PropertyChecker")
            .field("name", &self.name())
            .field("hereditary", &self.is_hereditary())
            .finish()
    }
}

impl PropertyChecker {
    pub fn new(kind: CheckerKind) -> Self {
        PropertyChecker {
            kind,
            limits: ExactLimits::default(),
        }
    }

    pub fn with_limits(mut self, limits: ExactLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn excludes_induced(h: Graph) -> Self {
        Self::new(CheckerKind::ExcludesInduced(h))
    }

    /// Wraps an arbitrary predicate. `hereditary` is the caller's claim and
    /// is not checked.
    pub fn custom<F>(name: impl Into<String>, hereditary: bool, predicate: F) -> Self
    where
        F: Fn(&Graph) -> bool + Send + Sync + 'static,
    {
        Self::new(CheckerKind::Custom {
            name: name.into(),
            hereditary,
            predicate: Arc::new(predicate),
        })
    }

    pub fn kind(&self) -> &CheckerKind {
        &self.kind
    }

    pub fn is_hereditary(&self) -> bool {
        match &self.kind {
            CheckerKind::Custom { hereditary, .. } => *hereditary,
            _ => true,
        }
    }

    /// The checker in `name:k1,k2` form. Excluded patterns print their
    /// vertex and edge counts since the graph itself lives in a file.
    pub fn name(&self) -> String {
        match &self.kind {
            CheckerKind::MaxDegreeLe(d) => format!("max_degree_le:{d}"),
            CheckerKind::ComponentsLe(s) => format!("components_le:{s}"),
            CheckerKind::TreedepthLe(t) => format!("treedepth_le:{t}"),
            CheckerKind::DegreeAfterDeletionsLe { k, d } => {
                format!("degree_after_deletions_le:{k},{d}")
            }
            CheckerKind::BicliqueFree { s, t } => format!("biclique_free:{s},{t}"),
            CheckerKind::ExcludesInduced(h) => format!(
                "excludes_induced:[{} vertices, {} edges]",
                h.vertex_count(),
                h.edge_count()
            ),
            CheckerKind::CliqueSubdivisionFree { p, q } => {
                format!("clique_subdivision_free:{p},{q}")
            }
            CheckerKind::Custom { name, .. } => name.clone(),
        }
    }

    /// Decides membership. Errors only when an exact procedure is asked to
    /// go beyond its configured limit.
    pub fn check(&self, g: &Graph) -> Result<bool> {
        let limits = &self.limits;
        Ok(match &self.kind {
            CheckerKind::MaxDegreeLe(d) => g.max_degree() <= *d,
            CheckerKind::ComponentsLe(s) => g.components().iter().all(|c| c.len() <= *s),
            CheckerKind::TreedepthLe(t) => match compute_treedepth(g, limits.treedepth_vertices) {
                Ok(td) => td.value <= *t,
                Err(err) => {
                    // A greedy forest within the bound still settles the question.
                    if treedepth_upper_bound(g).value <= *t {
                        true
                    } else {
                        return Err(err);
                    }
                }
            },
            CheckerKind::DegreeAfterDeletionsLe { k, d } => {
                min_deletions_to_degree(g, *d, *k).is_some()
            }
            CheckerKind::BicliqueFree { s, t } => contains_biclique_subgraph(g, *s, *t).is_none(),
            CheckerKind::ExcludesInduced(h) => {
                contains_induced(g, h, limits.induced_pattern_vertices)?.is_none()
            }
            CheckerKind::CliqueSubdivisionFree { p, q } => contains_clique_subdivision(
                g,
                *p,
                *q,
                limits.subdivision_branch,
                limits.subdivision_vertices,
            )?
            .is_none(),
            CheckerKind::Custom { predicate, .. } => predicate(g),
        })
    }
}

/// Builds one of the integer-parameterized built-in checkers.
///
/// Recognized tags: `max_degree_le(d)`, `components_le(s)`,
/// `treedepth_le(t)`, `degree_after_deletions_le(k, d)`,
/// `biclique_free(s, t)`, `clique_subdivision_free(p, q)`.
/// `excludes_induced` takes a graph; use
/// [`PropertyChecker::excludes_induced`] or [`parse_checker`].
pub fn make_checker(tag: &str, params: &[usize]) -> Result<PropertyChecker> {
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::input(format!(
                "checker {tag} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let kind = match tag {
        "max_degree_le" => {
            arity(1)?;
            CheckerKind::MaxDegreeLe(params[0])
        }
        "components_le" => {
            arity(1)?;
            CheckerKind::ComponentsLe(params[0])
        }
        "treedepth_le" => {
            arity(1)?;
            CheckerKind::TreedepthLe(params[0])
        }
        "degree_after_deletions_le" => {
            arity(2)?;
            CheckerKind::DegreeAfterDeletionsLe {
                k: params[0],
                d: params[1],
            }
        }
        "biclique_free" => {
            arity(2)?;
            if params[0] == 0 || params[1] == 0 {
                return Err(Error::input("biclique_free needs s, t >= 1"));
            }
            CheckerKind::BicliqueFree {
                s: params[0],
                t: params[1],
            }
        }
        "clique_subdivision_free" => {
            arity(2)?;
            if params[1] == 0 {
                return Err(Error::input("clique_subdivision_free needs q >= 1"));
            }
            CheckerKind::CliqueSubdivisionFree {
                p: params[0],
                q: params[1],
            }
        }
        "excludes_induced" => {
            return Err(Error::input(
                "excludes_induced takes a pattern graph, not integers",
            ))
        }
        other => return Err(Error::input(format!("unknown checker {other:?}"))),
    };
    Ok(PropertyChecker::new(kind))
}

/// Parses `name:k1,k2`. For `excludes_induced:<arg>` the argument is handed
/// to `load_pattern` (typically an edge-list path).
pub fn parse_checker<F>(spec: &str, load_pattern: F) -> Result<PropertyChecker>
where
    F: FnOnce(&str) -> Result<Graph>,
{
    let (tag, args) = spec.split_once(':').unwrap_or((spec, ""));
    if tag == "excludes_induced" {
        if args.is_empty() {
            return Err(Error::input("excludes_induced needs a pattern argument"));
        }
        return Ok(PropertyChecker::excludes_induced(load_pattern(args)?));
    }
    let params = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|a| {
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::input(format!("bad checker parameter {a:?} in {spec:?}")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    make_checker(tag, &params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn make_checker_examples() {
        let c7 = gen(FamilySpec::Cycle { n: 7 });
        assert!(make_checker("max_degree_le", &[2]).unwrap().check(&c7).unwrap());
        let p4 = gen(FamilySpec::Path { n: 4 });
        assert!(!make_checker("components_le", &[3]).unwrap().check(&p4).unwrap());
        assert!(!make_checker("treedepth_le", &[2]).unwrap().check(&p4).unwrap());
        assert!(make_checker("treedepth_le", &[3]).unwrap().check(&p4).unwrap());
    }

    #[test]
    fn unknown_and_malformed() {
        assert!(make_checker("planar", &[]).is_err());
        assert!(make_checker("max_degree_le", &[1, 2]).is_err());
        assert!(parse_checker("treedepth_le:x", |_| unreachable!()).is_err());
        let c = parse_checker("degree_after_deletions_le:1,2", |_| unreachable!()).unwrap();
        assert_eq!(c.name(), "degree_after_deletions_le:1,2");
    }

    #[test]
    fn parse_excluded_pattern() {
        let c = parse_checker("excludes_induced:k3", |arg| {
            assert_eq!(arg, "k3");
            generate(&FamilySpec::Complete { n: 3 })
        })
        .unwrap();
        assert!(!c.check(&gen(FamilySpec::Complete { n: 4 })).unwrap());
        assert!(c.check(&gen(FamilySpec::Cycle { n: 5 })).unwrap());
    }

    #[test]
    fn treedepth_checker_beyond_exact_limit() {
        // 40-vertex path: greedy forest of depth <= 7 decides treedepth_le:8.
        let p40 = gen(FamilySpec::Path { n: 40 });
        let c = make_checker("treedepth_le", &[8]).unwrap();
        assert!(c.check(&p40).unwrap());
        let tight = make_checker("treedepth_le", &[2]).unwrap();
        assert!(tight.check(&p40).is_err());
    }

    #[test]
    fn custom_heredity_flag() {
        let c = PropertyChecker::custom("even_order", false, |g| g.vertex_count() % 2 == 0);
        assert!(!c.is_hereditary());
        assert!(c.check(&Graph::empty(2)).unwrap());
    }
}
