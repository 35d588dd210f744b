use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_traits::ToPrimitive;
use pidecomp::baker::{
    baker_guarantee, baker_mis, bfs_layers, exact_mis, layers_to_decomposition, MisMode as Mode,
};
use pidecomp::checkers::{contains_biclique_subgraph, parse_checker, PropertyChecker};
use pidecomp::coloring::decompose_power_coloring;
use pidecomp::decomposition::{random_labels, DecompositionDocument, Verdict};
use pidecomp::experiments::{composition_sweep, half_graph_pigeonhole_sweep, weakly_sparse};
use pidecomp::extremal::{kst_bound, rational_to_f64, KstQuery};
use pidecomp::graph::{generate, load_edge_list, FamilySpec};
use pidecomp::patterns::{half_graph_order, vc_dimension};
use pidecomp::subsets::Colex;
use pidecomp::{Decomposition, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::report::{
    revalidate, sha256_hex, EmbeddedWitness, GraphSource, InputFile, Report, Toolkit,
    REPORT_FORMAT, REPORT_VERSION,
};
use crate::{
    Command, ComposeArgs, DecomposeArgs, ExperimentArgs, ExperimentKind, Family, GenArgs,
    IntersectArgs, KstArgs, MineArgs, MisArgs, MisMode, Output, Pattern, RevalidateArgs, Strategy,
    VerifyArgs, EXIT_OK, EXIT_REFUTED,
};

type CmdResult = Result<Output, String>;

pub(crate) fn run(command: Command, echo: Vec<String>) -> CmdResult {
    let mut ctx = Context {
        echo,
        inputs: Vec::new(),
    };
    match command {
        Command::Gen(a) => gen(&mut ctx, a),
        Command::Decompose(a) => decompose(&mut ctx, a),
        Command::Verify(a) => verify(&mut ctx, a),
        Command::Compose(a) => compose(&mut ctx, a),
        Command::Intersect(a) => intersect(&mut ctx, a),
        Command::Mine(a) => mine(&mut ctx, a),
        Command::Kst(a) => kst(&mut ctx, a),
        Command::Mis(a) => mis(&mut ctx, a),
        Command::Experiment(a) => experiment(&mut ctx, a),
        Command::Revalidate(a) => revalidate_report(&mut ctx, a),
    }
}

struct Context {
    echo: Vec<String>,
    inputs: Vec<InputFile>,
}

fn display(path: &Path) -> String {
    path.to_string_lossy().into_owned()
}

impl Context {
    fn read(&mut self, role: &str, path: &Path) -> Result<String, String> {
        let bytes = fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
        self.inputs.push(InputFile {
            role: role.to_string(),
            path: display(path),
            sha256: sha256_hex(&bytes),
        });
        String::from_utf8(bytes).map_err(|_| format!("{}: not UTF-8 text", path.display()))
    }

    fn graph(&mut self, role: &str, path: &Path) -> Result<Arc<Graph>, String> {
        let text = self.read(role, path)?;
        load_edge_list(&text)
            .map(Arc::new)
            .map_err(|e| format!("{}: {e}", path.display()))
    }

    fn decomposition(&mut self, role: &str, path: &Path, g: &Arc<Graph>) -> Result<Decomposition, String> {
        let text = self.read(role, path)?;
        DecompositionDocument::from_json(&text)
            .and_then(|doc| doc.into_decomposition(Arc::clone(g)))
            .map_err(|e| format!("{}: {e}", path.display()))
    }

    fn checker(&mut self, spec: &str) -> Result<PropertyChecker, String> {
        let mut pattern = None;
        let parsed = parse_checker(spec, |arg| {
            let path = PathBuf::from(arg);
            match fs::read(&path) {
                Ok(bytes) => {
                    pattern = Some((path.clone(), bytes.clone()));
                    let text = String::from_utf8(bytes)
                        .map_err(|_| pidecomp::Error::Input(format!("{arg}: not UTF-8 text")))?;
                    load_edge_list(&text)
                }
                Err(e) => Err(pidecomp::Error::Input(format!("{arg}: {e}"))),
            }
        });
        if let Some((path, bytes)) = pattern {
            self.inputs.push(InputFile {
                role: "pattern".into(),
                path: display(&path),
                sha256: sha256_hex(&bytes),
            });
        }
        parsed.map_err(|e| e.to_string())
    }

    fn finish(
        self,
        code: i32,
        results: Value,
        witnesses: Vec<EmbeddedWitness>,
        report_out: Option<&Path>,
    ) -> CmdResult {
        let report = Report {
            format: REPORT_FORMAT.into(),
            version: REPORT_VERSION,
            toolkit: Toolkit::default(),
            command: self.echo,
            inputs: self.inputs,
            status: if code == EXIT_OK { "ok" } else { "refuted" }.into(),
            results,
            witnesses,
            elapsed_ms: 0,
        };
        Ok(Output::Report {
            code,
            report: Box::new(report),
            out: report_out.map(Path::to_path_buf),
        })
    }
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn input_graph(role: &str) -> GraphSource {
    GraphSource::Input { role: role.into() }
}

fn required<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, String> {
    value.ok_or_else(|| format!("--{flag} is required for family {family}"))
}

fn family_spec(a: &GenArgs) -> Result<FamilySpec, String> {
    let name = format!("{:?}", a.family);
    Ok(match a.family {
        Family::Complete => FamilySpec::Complete { n: required(a.n, "n", &name)? },
        Family::Biclique => FamilySpec::Biclique {
            s: required(a.s, "s", &name)?,
            t: required(a.t, "t", &name)?,
        },
        Family::HalfGraph => FamilySpec::HalfGraph { n: required(a.n, "n", &name)? },
        Family::Path => FamilySpec::Path { n: required(a.n, "n", &name)? },
        Family::Cycle => FamilySpec::Cycle { n: required(a.n, "n", &name)? },
        Family::Grid => FamilySpec::Grid {
            rows: required(a.rows, "rows", &name)?,
            cols: required(a.cols, "cols", &name)?,
        },
        Family::RandomRegular => FamilySpec::RandomRegular {
            n: required(a.n, "n", &name)?,
            d: required(a.d, "d", &name)?,
            seed: a.seed,
        },
        Family::Gnp => FamilySpec::Gnp {
            n: required(a.n, "n", &name)?,
            p: required(a.prob, "prob", &name)?,
            seed: a.seed,
        },
    })
}

fn gen(ctx: &mut Context, a: GenArgs) -> CmdResult {
    let spec = family_spec(&a)?;
    let g = generate(&spec).map_err(|e| e.to_string())?;
    let text = g.to_edge_list();
    let Some(out) = &a.out else {
        return Ok(Output::Text(text));
    };
    write(out, &text)?;
    let results = json!({
        "family": spec,
        "vertex_count": g.vertex_count(),
        "edge_count": g.edge_count(),
        "graph_sha256": g.content_hash(),
        "written": display(out),
    });
    std::mem::replace(ctx, empty()).finish(EXIT_OK, results, vec![], None)
}

fn empty() -> Context {
    Context {
        echo: Vec::new(),
        inputs: Vec::new(),
    }
}

fn part_sizes(d: &Decomposition) -> Vec<usize> {
    d.parts().iter().map(Vec::len).collect()
}

fn decompose(ctx: &mut Context, a: DecomposeArgs) -> CmdResult {
    let g = ctx.graph("graph", &a.graph)?;
    let (d, details) = match a.strategy {
        Strategy::Baker => {
            let l = bfs_layers(&g, a.root).map_err(|e| e.to_string())?;
            let d = layers_to_decomposition(Arc::clone(&g), &l, a.d, a.p).map_err(|e| e.to_string())?;
            let details = json!({
                "strategy": "baker",
                "root": a.root,
                "d": a.d,
                "layer_sizes": l.layers.iter().map(Vec::len).collect::<Vec<_>>(),
            });
            (d, details)
        }
        Strategy::PowerColoring => {
            let r = decompose_power_coloring(Arc::clone(&g), a.p).map_err(|e| e.to_string())?;
            let within = r.bounds.within_degree_power_bound();
            let details = json!({
                "strategy": "power_coloring",
                "bounds": r.bounds,
                "within_degree_power_bound": within,
            });
            (r.decomposition, details)
        }
        Strategy::FromFile => {
            let path = a
                .decomp
                .as_ref()
                .ok_or("--decomp is required for strategy from-file")?;
            let d = ctx.decomposition("decomposition", path, &g)?;
            (d, json!({ "strategy": "from_file" }))
        }
    };
    let doc = DecompositionDocument::from_decomposition(&d);
    if let Some(out) = &a.out {
        write(out, &format!("{}\n", doc.to_json()))?;
    }
    let results = json!({
        "details": details,
        "p": d.p(),
        "part_count": d.part_count(),
        "part_sizes": part_sizes(&d),
        "graph_sha256": g.content_hash(),
        "written": a.out.as_deref().map(display),
    });
    std::mem::replace(ctx, empty()).finish(EXIT_OK, results, vec![], None)
}

fn verify(ctx: &mut Context, a: VerifyArgs) -> CmdResult {
    let g = ctx.graph("graph", &a.graph)?;
    let d = ctx.decomposition("decomposition", &a.decomp, &g)?;
    let checker = ctx.checker(&a.checker)?;
    let verdict = d.verify(&checker).map_err(|e| e.to_string())?;
    let mut results = json!({
        "checker": checker.name(),
        "p": d.p(),
        "part_count": d.part_count(),
        "union_size": d.union_size(),
        "verdict": verdict,
    });
    let mut witnesses = Vec::new();
    let code = match &verdict {
        Verdict::Pass { .. } => EXIT_OK,
        Verdict::Fail { subset, .. } => {
            let (union, map) = d.union_parts(subset).map_err(|e| e.to_string())?;
            results["counterexample"] = json!({
                "parts": subset,
                "vertices": map,
                "edges": union.edges().map(|(u, v)| [map[u], map[v]]).collect::<Vec<_>>(),
            });
            witnesses.push(EmbeddedWitness::Counterexample {
                graph: input_graph("graph"),
                decomposition: "decomposition".into(),
                checker: a.checker.clone(),
                subset: subset.clone(),
            });
            EXIT_REFUTED
        }
    };
    std::mem::replace(ctx, empty()).finish(code, results, witnesses, a.out.as_deref())
}

#[derive(Deserialize)]
struct InnerEntry {
    subset: Vec<usize>,
    parts: Vec<Vec<usize>>,
}

fn compose(ctx: &mut Context, a: ComposeArgs) -> CmdResult {
    let g = ctx.graph("graph", &a.graph)?;
    let outer = ctx.decomposition("outer", &a.outer, &g)?;
    let p = outer.p();
    let mut inner = std::collections::BTreeMap::new();
    if let Some(path) = &a.inner {
        let text = ctx.read("inner", path)?;
        let entries: Vec<InnerEntry> =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        for e in entries {
            let mut subset = e.subset.clone();
            subset.sort_unstable();
            let (union, map) = outer.union_parts(&subset).map_err(|e| e.to_string())?;
            let local = e
                .parts
                .iter()
                .map(|part| {
                    part.iter()
                        .map(|v| {
                            map.binary_search(v).map_err(|_| {
                                format!("vertex {v} is not in the union of parts {subset:?}")
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let d = Decomposition::from_parts(Arc::new(union), &local, p).map_err(|e| e.to_string())?;
            inner.insert(subset, d);
        }
    } else {
        let k = a.inner_random.expect("clap enforces one inner source");
        if k == 0 {
            return Err("--inner-random needs at least one part".into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        for subset in Colex::new(outer.part_count(), p) {
            let (union, _) = outer.union_parts(&subset).map_err(|e| e.to_string())?;
            let labels = random_labels(union.vertex_count(), k, &mut rng);
            let d = Decomposition::from_labels(Arc::new(union), &labels, p).map_err(|e| e.to_string())?;
            inner.insert(subset, d);
        }
    }
    let comp = outer.compose(&inner).map_err(|e| e.to_string())?;
    let composed = &comp.decomposition;
    let within = num_bigint::BigUint::from(composed.part_count()) <= comp.bound;
    let mut results = json!({
        "p": p,
        "outer_parts": outer.part_count(),
        "max_inner_parts": inner.values().map(Decomposition::part_count).max().unwrap_or(1),
        "composed_parts": composed.part_count(),
        "bound": comp.bound.to_string(),
        "within_bound": within,
        "degenerate": comp.degenerate,
    });
    let mut code = if within { EXIT_OK } else { EXIT_REFUTED };
    if let Some(spec) = &a.checker {
        let checker = ctx.checker(spec)?;
        let verdict = composed.verify(&checker).map_err(|e| e.to_string())?;
        if !verdict.passed() {
            code = EXIT_REFUTED;
        }
        results["checker"] = json!(checker.name());
        results["verdict"] = json!(verdict);
    }
    if let Some(out) = &a.out {
        write(out, &format!("{}\n", DecompositionDocument::from_decomposition(composed).to_json()))?;
        results["written"] = json!(display(out));
    }
    std::mem::replace(ctx, empty()).finish(code, results, vec![], None)
}

fn intersect(ctx: &mut Context, a: IntersectArgs) -> CmdResult {
    let g = ctx.graph("graph", &a.graph)?;
    let d1 = ctx.decomposition("first", &a.first, &g)?;
    let d2 = ctx.decomposition("second", &a.second, &g)?;
    let both = d1.intersect(&d2).map_err(|e| e.to_string())?;
    let within = both.part_count() <= d1.part_count() * d2.part_count();
    let mut code = if within { EXIT_OK } else { EXIT_REFUTED };
    let mut verdicts = Vec::new();
    for spec in &a.checker {
        let checker = ctx.checker(spec)?;
        let verdict = both.verify(&checker).map_err(|e| e.to_string())?;
        if !verdict.passed() {
            code = EXIT_REFUTED;
        }
        verdicts.push(json!({ "checker": checker.name(), "verdict": verdict }));
    }
    let mut results = json!({
        "p": both.p(),
        "first_parts": d1.part_count(),
        "second_parts": d2.part_count(),
        "parts": both.part_count(),
        "within_product": within,
        "verdicts": verdicts,
    });
    if let Some(out) = &a.out {
        write(out, &format!("{}\n", DecompositionDocument::from_decomposition(&both).to_json()))?;
        results["written"] = json!(display(out));
    }
    std::mem::replace(ctx, empty()).finish(code, results, vec![], None)
}

fn mine(ctx: &mut Context, a: MineArgs) -> CmdResult {
    let g = ctx.graph("graph", &a.graph)?;
    let source = input_graph("graph");
    let (results, witnesses) = match a.pattern {
        Pattern::HalfGraph => {
            let limit = a.limit.unwrap_or(16);
            let r = half_graph_order(&g, limit);
            let w = EmbeddedWitness::half_graph(source, &g, &r.witness);
            (json!({ "pattern": "half_graph", "order": r.order, "exact": r.exact, "limit": limit }), vec![w])
        }
        Pattern::Vc => {
            let limit = a.limit.unwrap_or(8);
            let r = vc_dimension(&g, limit);
            let w = EmbeddedWitness::shatter(source, &g, &r.witness);
            (json!({ "pattern": "vc", "dimension": r.dim, "exact": r.exact, "limit": limit }), vec![w])
        }
        Pattern::Biclique => {
            let found = contains_biclique_subgraph(&g, a.s, a.t);
            let witnesses = found
                .iter()
                .map(|w| EmbeddedWitness::biclique(source.clone(), a.s, a.t, w))
                .collect();
            (json!({ "pattern": "biclique", "s": a.s, "t": a.t, "found": found.is_some() }), witnesses)
        }
    };
    std::mem::replace(ctx, empty()).finish(EXIT_OK, results, witnesses, a.out.as_deref())
}

fn kst(ctx: &mut Context, a: KstArgs) -> CmdResult {
    let q = KstQuery::new(a.n, a.s, a.t).map_err(|e| e.to_string())?;
    let bound = kst_bound(q);
    let floor = bound.floor().to_integer();
    let results = json!({
        "n": a.n,
        "s": a.s,
        "t": a.t,
        "bound": bound.to_string(),
        "bound_decimal": rational_to_f64(&bound),
        "max_edges_allowed": floor.to_u64().map_or_else(|| json!(floor.to_string()), |v| json!(v)),
    });
    std::mem::replace(ctx, empty()).finish(EXIT_OK, results, vec![], a.out.as_deref())
}

fn mis(ctx: &mut Context, a: MisArgs) -> CmdResult {
    let g = ctx.graph("graph", &a.graph)?;
    let (r, mut results) = match a.mode {
        MisMode::Exact => {
            let r = exact_mis(&g, a.limit).map_err(|e| e.to_string())?;
            (r, json!({ "mode": "exact" }))
        }
        MisMode::Baker => {
            let r = baker_mis(&g, a.root, a.d, a.limit).map_err(|e| e.to_string())?;
            let Mode::Baker { d, shift } = r.mode else {
                unreachable!("baker_mis reports baker mode")
            };
            (r, json!({ "mode": "baker", "root": a.root, "d": d, "shift": shift }))
        }
    };
    results["size"] = json!(r.len());
    results["set"] = json!(r.set);
    let mut code = EXIT_OK;
    if a.mode == MisMode::Baker {
        // Compare against the optimum when it is within reach.
        match exact_mis(&g, a.limit) {
            Ok(opt) => {
                let need = baker_guarantee(opt.len(), a.d);
                results["optimum"] = json!(opt.len());
                results["guarantee"] = json!(need);
                results["meets_guarantee"] = json!(r.len() >= need);
                if r.len() < need {
                    code = EXIT_REFUTED;
                }
            }
            Err(e) => results["optimum"] = json!(format!("unavailable: {e}")),
        }
    }
    let w = EmbeddedWitness::IndependentSet {
        graph: input_graph("graph"),
        set: r.set.clone(),
    };
    std::mem::replace(ctx, empty()).finish(code, results, vec![w], a.out.as_deref())
}

fn experiment(ctx: &mut Context, a: ExperimentArgs) -> CmdResult {
    let err = |e: pidecomp::Error| e.to_string();
    let (violations, results, witnesses) = match a.kind {
        ExperimentKind::WeaklySparse => {
            let parts = a.parts.unwrap_or(2);
            let r = weakly_sparse(a.n, parts, a.trials.unwrap_or(100), a.seed).map_err(err)?;
            let whole = kst_bound(KstQuery::new(2 * a.n as u64, 2, 2).map_err(err)?);
            let source = GraphSource::Family {
                spec: FamilySpec::Biclique { s: a.n, t: a.n },
            };
            let witnesses = r
                .trials
                .iter()
                .filter_map(|t| t.witness.as_ref())
                .map(|w| EmbeddedWitness::biclique(source.clone(), 2, 2, w))
                .collect();
            let summary = json!({
                "experiment": "weakly_sparse",
                "seed": a.seed,
                "kst_bound_whole_graph": rational_to_f64(&whole),
                "fewest_edges": r.trials.iter().map(|t| t.edges).min(),
                "report": r,
            });
            (r.violations, summary, witnesses)
        }
        ExperimentKind::HalfGraphPigeonhole => {
            let parts = a.parts.unwrap_or(3);
            let r = half_graph_pigeonhole_sweep(a.m, parts, a.trials.unwrap_or(100), a.seed).map_err(err)?;
            let g = generate(&FamilySpec::HalfGraph { n: a.m }).map_err(err)?;
            let source = GraphSource::Family {
                spec: FamilySpec::HalfGraph { n: a.m },
            };
            let witnesses = r
                .trials
                .iter()
                .map(|t| EmbeddedWitness::half_graph(source.clone(), &g, &t.witness))
                .collect();
            let summary = json!({
                "experiment": "half_graph_pigeonhole",
                "seed": a.seed,
                "smallest_order": r.trials.iter().map(|t| t.order).min(),
                "report": r,
            });
            (r.violations, summary, witnesses)
        }
        ExperimentKind::Composition => {
            let r = composition_sweep(a.trials.unwrap_or(200), a.seed).map_err(err)?;
            let summary = json!({
                "experiment": "composition",
                "seed": a.seed,
                "largest_composed": r.trials.iter().map(|t| t.composed_parts).max(),
                "report": r,
            });
            (r.violations, summary, vec![])
        }
    };
    let code = if violations == 0 { EXIT_OK } else { EXIT_REFUTED };
    std::mem::replace(ctx, empty()).finish(code, results, witnesses, a.out.as_deref())
}

fn revalidate_report(ctx: &mut Context, a: RevalidateArgs) -> CmdResult {
    let text = fs::read_to_string(&a.report).map_err(|e| format!("{}: {e}", a.report.display()))?;
    let report: Report =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", a.report.display()))?;
    let outcome = revalidate(&report).map_err(|e| e.0)?;
    ctx.inputs = report.inputs.clone();
    let code = if outcome.failures.is_empty() { EXIT_OK } else { EXIT_REFUTED };
    let results = json!({
        "report": display(&a.report),
        "report_command": report.command,
        "witnesses_checked": outcome.checked,
        "failures": outcome.failures,
    });
    std::mem::replace(ctx, empty()).finish(code, results, vec![], None)
}
