//! Versioned JSON reports and their re-validation.

use std::collections::BTreeMap;
use std::fs;
use std::sync::Arc;

use pidecomp::checkers::{parse_checker, BicliqueWitness};
use pidecomp::decomposition::DecompositionDocument;
use pidecomp::graph::{generate, load_edge_list, FamilySpec};
use pidecomp::patterns::{HalfGraphWitness, ShatterWitness};
use pidecomp::witness::{
    validate_biclique, validate_half_graph, validate_independent_set, validate_shatter,
};
use pidecomp::{Decomposition, Graph};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const REPORT_FORMAT: &str = "pidecomp-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format: String,
    pub version: u32,
    pub toolkit: Toolkit,
    pub command: Vec<String>,
    pub inputs: Vec<InputFile>,
    /// `ok`, `refuted` or `error`.
    pub status: String,
    pub results: serde_json::Value,
    pub witnesses: Vec<EmbeddedWitness>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Toolkit {
    pub name: String,
    pub version: String,
}

impl Default for Toolkit {
    fn default() -> Self {
        Toolkit {
            name: "pidecomp".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

/// A file read by the command, identified by the role it played.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputFile {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

/// Where a witness's host graph comes from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum GraphSource {
    /// An input file, by role.
    Input { role: String },
    /// A generated family.
    Family { spec: FamilySpec },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EmbeddedWitness {
    HalfGraph {
        graph: GraphSource,
        a: Vec<usize>,
        b: Vec<usize>,
        pattern: Vec<String>,
    },
    Shatter {
        graph: GraphSource,
        set: Vec<usize>,
        realizers: Vec<usize>,
        pattern: Vec<String>,
    },
    Biclique {
        graph: GraphSource,
        s: usize,
        t: usize,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    IndependentSet {
        graph: GraphSource,
        set: Vec<usize>,
    },
    /// A union of parts the checker rejects.
    Counterexample {
        graph: GraphSource,
        decomposition: String,
        checker: String,
        subset: Vec<usize>,
    },
}

impl EmbeddedWitness {
    pub fn half_graph(graph: GraphSource, g: &Graph, w: &HalfGraphWitness) -> Self {
        EmbeddedWitness::HalfGraph {
            graph,
            a: w.a.clone(),
            b: w.b.clone(),
            pattern: w.pattern_matrix(g),
        }
    }

    pub fn shatter(graph: GraphSource, g: &Graph, w: &ShatterWitness) -> Self {
        EmbeddedWitness::Shatter {
            graph,
            set: w.set.clone(),
            realizers: w.realizers.clone(),
            pattern: w.pattern_matrix(g),
        }
    }

    pub fn biclique(graph: GraphSource, s: usize, t: usize, w: &BicliqueWitness) -> Self {
        EmbeddedWitness::Biclique {
            graph,
            s,
            t,
            left: w.left.clone(),
            right: w.right.clone(),
        }
    }

    fn graph(&self) -> &GraphSource {
        match self {
            EmbeddedWitness::HalfGraph { graph, .. }
            | EmbeddedWitness::Shatter { graph, .. }
            | EmbeddedWitness::Biclique { graph, .. }
            | EmbeddedWitness::IndependentSet { graph, .. }
            | EmbeddedWitness::Counterexample { graph, .. } => graph,
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Outcome of re-validating a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Revalidation {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Problems that prevent re-validation altogether (missing or changed
/// inputs, malformed report).
#[derive(Debug)]
pub struct RevalidationError(pub String);

/// Re-reads the report's inputs, checks their hashes, and re-validates every
/// embedded witness with the independent validators.
pub fn revalidate(report: &Report) -> Result<Revalidation, RevalidationError> {
    if report.format != REPORT_FORMAT || report.version != REPORT_VERSION {
        return Err(RevalidationError(format!(
            "unsupported report {:?} version {}",
            report.format, report.version
        )));
    }
    let mut files: BTreeMap<&str, (String, &str)> = BTreeMap::new();
    for input in &report.inputs {
        let bytes = fs::read(&input.path)
            .map_err(|e| RevalidationError(format!("{} ({}): {e}", input.role, input.path)))?;
        if sha256_hex(&bytes) != input.sha256 {
            return Err(RevalidationError(format!(
                "{} ({}) changed since the report was written",
                input.role, input.path
            )));
        }
        let text = String::from_utf8(bytes)
            .map_err(|_| RevalidationError(format!("{} is not UTF-8", input.path)))?;
        files.insert(input.role.as_str(), (text, input.path.as_str()));
    }
    let load = |source: &GraphSource| -> Result<Graph, String> {
        match source {
            GraphSource::Input { role } => {
                let (text, _) = files
                    .get(role.as_str())
                    .ok_or_else(|| format!("no input with role {role:?}"))?;
                load_edge_list(text).map_err(|e| e.to_string())
            }
            GraphSource::Family { spec } => generate(spec).map_err(|e| e.to_string()),
        }
    };
    let mut failures = Vec::new();
    for (i, w) in report.witnesses.iter().enumerate() {
        let outcome = load(w.graph()).and_then(|g| check_one(w, g, &files));
        if let Err(e) = outcome {
            failures.push(format!("witness {i}: {e}"));
        }
    }
    Ok(Revalidation {
        checked: report.witnesses.len(),
        failures,
    })
}

fn check_one(
    w: &EmbeddedWitness,
    g: Graph,
    files: &BTreeMap<&str, (String, &str)>,
) -> Result<(), String> {
    let same = |pattern: &[String], fresh: Vec<String>| {
        if pattern == fresh.as_slice() {
            Ok(())
        } else {
            Err("pattern matrix does not match the graph".to_string())
        }
    };
    match w {
        EmbeddedWitness::HalfGraph { a, b, pattern, .. } => {
            let hw = HalfGraphWitness {
                a: a.clone(),
                b: b.clone(),
            };
            validate_half_graph(&g, &hw).map_err(|e| e.to_string())?;
            same(pattern, hw.pattern_matrix(&g))
        }
        EmbeddedWitness::Shatter {
            set,
            realizers,
            pattern,
            ..
        } => {
            let sw = ShatterWitness {
                set: set.clone(),
                realizers: realizers.clone(),
            };
            validate_shatter(&g, &sw).map_err(|e| e.to_string())?;
            same(pattern, sw.pattern_matrix(&g))
        }
        EmbeddedWitness::Biclique {
            s, t, left, right, ..
        } => {
            let bw = BicliqueWitness {
                left: left.clone(),
                right: right.clone(),
            };
            validate_biclique(&g, &bw, *s, *t).map_err(|e| e.to_string())
        }
        EmbeddedWitness::IndependentSet { set, .. } => {
            validate_independent_set(&g, set).map_err(|e| e.to_string())
        }
        EmbeddedWitness::Counterexample {
            decomposition,
            checker,
            subset,
            ..
        } => {
            let (text, _) = files
                .get(decomposition.as_str())
                .ok_or_else(|| format!("no input with role {decomposition:?}"))?;
            let d: Decomposition = DecompositionDocument::from_json(text)
                .and_then(|doc| doc.into_decomposition(Arc::new(g)))
                .map_err(|e| e.to_string())?;
            let c = parse_checker(checker, |arg| {
                let (text, _) = files
                    .get("pattern")
                    .filter(|(_, path)| *path == arg)
                    .ok_or_else(|| pidecomp::Error::Input(format!("pattern {arg} is not a report input")))?;
                load_edge_list(text)
            })
            .map_err(|e| e.to_string())?;
            let (union, _) = d.union_parts(subset).map_err(|e| e.to_string())?;
            match c.check(&union) {
                Ok(false) => Ok(()),
                Ok(true) => Err(format!("checker {checker} accepts the union of parts {subset:?}")),
                Err(e) => Err(e.to_string()),
            }
        }
    }
}
