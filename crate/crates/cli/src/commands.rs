use std::fmt::Write as _;
use std::time::Duration;

use magicsets::assign::{enumerate_assignments, AssignError, SynthesisOptions};
use magicsets::bound::{
    brute_force_bound, hypergraph_bound, matches_printed, noncontextual_bound_capped, render_decimal, BoundError,
    BoundReport,
};
use magicsets::dataset::{self, DatasetEntry};
use magicsets::gram::{self, GramError};
use magicsets::hypergraph::Hypergraph;
use magicsets::orbits::{candidate_hypergraphs, subset_orbits};
use magicsets::pauli::{verify_assignment, Assignment, VerificationReport};
use magicsets::planarity::is_planar_via_gram;
use magicsets::reduce::{
    apply_recipe, find_minimal_descendants, reduce_with, CanonicalForm, Dedup, ReduceError, ReductionTrace,
    SearchBudget,
};
use serde_json::{json, Value};

use crate::input;
use crate::{CliError, Outcome};

fn parse_json(text: &str) -> Value {
    serde_json::from_str(text).expect("library JSON is valid")
}

fn title(h: &Hypergraph) -> String {
    let profile = h.degree_profile();
    format!(
        "{}: {} observables ({}), {} contexts ({})",
        h.name().unwrap_or("hypergraph"),
        h.vertex_count(),
        profile.observables(),
        h.edge_count(),
        profile.contexts()
    )
}

/// Decimal with at most three places and no trailing zeros, as the tables print it.
fn short_decimal(r: &num_rational::Ratio<i64>) -> String {
    let s = render_decimal(r, 3);
    let s = s.trim_end_matches('0');
    s.strip_suffix('.').unwrap_or(s).to_string()
}

fn gram_input_error(e: GramError) -> CliError {
    CliError::input("gram", e)
}

pub fn check(file: &str, cap: usize, dump_gram: Option<&str>) -> Result<Outcome, CliError> {
    let h = input::hypergraph(file)?.hypergraph;
    let (proper, diagnostics) = h.is_proper_eulerian();
    let profile = h.degree_profile();
    let mut text = format!("{}\n", title(&h));
    let mut report = json!({
        "name": h.name(),
        "vertices": h.vertex_count(),
        "edges": h.edge_count(),
        "observables": profile.observables(),
        "contexts": profile.contexts(),
        "proper_eulerian": proper,
    });
    if !proper {
        let problems = diagnostics.problems();
        report["problems"] = json!(problems);
        let _ = writeln!(text, "not proper Eulerian: {}", problems.join("; "));
        return Ok(Outcome {
            report,
            text,
            ok: false,
        });
    }
    let space = gram::valid_gram_space(&h).map_err(gram_input_error)?;
    report["gram_dimension"] = json!(space.dimension());
    let Some(magic) = space.magic_affine_space() else {
        report["magic"] = json!(false);
        let _ = writeln!(text, "not magic (valid Gram space dimension {})", space.dimension());
        return Ok(Outcome {
            report,
            text,
            ok: false,
        });
    };
    let minimal = magic.find_reducible().is_none();
    let mq = magic.min_qubits(cap);
    let g = magic.space().to_matrix(&mq.witness);
    if let Some(path) = dump_gram {
        input::write(path, &g.to_json())?;
    }
    report["magic"] = json!(true);
    report["magic_dimension"] = json!(magic.dimension());
    report["minimal"] = json!(minimal);
    report["min_qubits"] = json!({
        "qubits": mq.qubits,
        "rank": mq.rank,
        "exact": mq.exact,
        "examined": mq.examined,
    });
    let bound_word = if mq.exact { "" } else { " (upper bound)" };
    let _ = writeln!(text, "magic; minimum qubits {}{bound_word}", mq.qubits);
    let _ = writeln!(
        text,
        "{}; valid Gram space dimension {}, magic Gram matrices 2^{}",
        if minimal { "minimal" } else { "not minimal" },
        space.dimension(),
        magic.dimension()
    );
    Ok(Outcome {
        report,
        text,
        ok: true,
    })
}

fn verification_json(r: &VerificationReport) -> Value {
    json!({
        "valid": r.valid,
        "magic": r.magic,
        "negative_contexts": r.negatives,
        "context_signs": r.context_signs.to_string(),
        "violations": r.violations,
    })
}

pub fn assign(
    file: &str,
    qubits: usize,
    gram_file: Option<&str>,
    count: usize,
    node_budget: u64,
    out: Option<&str>,
) -> Result<Outcome, CliError> {
    let h = input::hypergraph(file)?.hypergraph;
    let g = match gram_file {
        Some(path) => input::gram(path)?,
        None => {
            let magic = gram::magic_affine_space(&h).map_err(gram_input_error)?;
            let Some(magic) = magic else {
                return Ok(Outcome {
                    report: json!({"magic": false}),
                    text: "not magic; no magic assignment exists\n".into(),
                    ok: false,
                });
            };
            let mq = magic.min_qubits(gram::DEFAULT_ENUMERATION_CAP);
            if mq.exact && mq.qubits > qubits {
                return Ok(Outcome {
                    report: json!({"magic": true, "min_qubits": mq.qubits}),
                    text: format!("no magic assignment on {qubits} qubits; at least {} are needed\n", mq.qubits),
                    ok: false,
                });
            }
            magic.space().to_matrix(&mq.witness)
        }
    };
    let opts = SynthesisOptions {
        node_budget,
        ..SynthesisOptions::default()
    };
    let mut stream = match enumerate_assignments(&h, &g, qubits, count.max(1), &opts) {
        Ok(s) => s,
        Err(AssignError::Gram(e)) => return Err(gram_input_error(e)),
        Err(AssignError::QubitRange { .. }) => {
            return Err(CliError::input("assign", format!("qubit count {qubits} is out of range")))
        }
        Err(e) => {
            return Ok(Outcome {
                report: json!({"error": e.to_string()}),
                text: format!("{e}\n"),
                ok: false,
            })
        }
    };
    let found: Vec<Assignment> = stream.by_ref().collect();
    if found.is_empty() {
        let reason = stream
            .failure()
            .map(ToString::to_string)
            .unwrap_or_else(|| {
                if stream.budget_exhausted() {
                    "node budget exhausted".into()
                } else {
                    "no embedding exists".into()
                }
            });
        return Ok(Outcome {
            report: json!({"error": reason}),
            text: format!("no assignment found: {reason}\n"),
            ok: false,
        });
    }
    if let Some(path) = out {
        input::write(path, &found[0].to_json())?;
    }
    let mut text = String::new();
    let mut items = Vec::new();
    let mut ok = true;
    for a in &found {
        let v = verify_assignment(&h, a);
        ok &= v.valid && v.magic;
        let listing: Vec<String> = a
            .ops()
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{}: {}", i + 1, p.decode()))
            .collect();
        let _ = writeln!(text, "{{{}}}", listing.join(", "));
        let _ = writeln!(
            text,
            "  {}, {} negative contexts",
            if v.magic { "valid and magic" } else if v.valid { "valid, not magic" } else { "invalid" },
            v.negatives
        );
        items.push(json!({
            "assignment": parse_json(&a.to_json()),
            "verification": verification_json(&v),
        }));
    }
    Ok(Outcome {
        report: json!({"qubits": qubits, "gram_rank": g.rank(), "assignments": items}),
        text,
        ok,
    })
}

fn bound_error(e: BoundError) -> CliError {
    CliError::input("bound", e)
}

fn bound_row(name: &str, r: &BoundReport) -> String {
    format!(
        "{:<12} {:>7}  {:<6} ({}){}\n",
        name,
        format!("{}/{}", r.b, r.q),
        short_decimal(&r.epsilon),
        r.epsilon,
        if r.exact { "" } else { "  [b is a lower bound]" }
    )
}

pub fn bound(
    file: &str,
    signs: Option<&str>,
    assignment: Option<&str>,
    brute_force: bool,
    pauli_only: bool,
    cap: usize,
) -> Result<Outcome, CliError> {
    let loaded = input::hypergraph(file)?;
    let h = loaded.hypergraph;
    let name = h.name().unwrap_or("hypergraph").to_string();
    let mut notes = Vec::new();
    let signs = match (signs, assignment, loaded.entry.and_then(|e| e.assignment)) {
        (Some(s), _, _) => Some(input::signs(s, h.edge_count())?),
        (None, Some(path), _) => {
            let a = input::assignment(path)?;
            let v = verify_assignment(&h, &a);
            if !v.valid {
                return Err(CliError::input(
                    "pauli",
                    format!(
                        "assignment is not valid: {}",
                        v.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
                    ),
                ));
            }
            Some(v.context_signs)
        }
        (None, None, Some(a)) => {
            notes.push("signs from the bundled assignment".to_string());
            Some(a.context_signs(&h))
        }
        (None, None, None) => None,
    };
    let (report, candidates) = match signs {
        Some(s) => (noncontextual_bound_capped(&h, &s, cap).map_err(bound_error)?, None),
        None => {
            let hb = hypergraph_bound(&h, pauli_only, cap).map_err(bound_error)?;
            notes.push(format!(
                "minimum over {} {}",
                hb.candidates,
                if pauli_only { "magic Gram matrices" } else { "odd sign cosets" }
            ));
            (hb.report, Some(hb.candidates))
        }
    };
    let mut text = format!("{:<12} {:>7}  epsilon\n", "hypergraph", "b/Q");
    text.push_str(&bound_row(&name, &report));
    let mut body = report.to_json_value();
    body["name"] = json!(name);
    if let Some(c) = candidates {
        body["candidates"] = json!(c);
    }
    let mut ok = report.magic;
    if !report.magic {
        notes.push("sign pattern has an even number of negative contexts (not magic)".into());
    }
    if brute_force {
        let brute = brute_force_bound(&h, &report.signs).map_err(bound_error)?;
        let agree = brute.b == report.b;
        ok &= agree;
        notes.push(format!(
            "brute force over 2^{} assignments: b = {} ({})",
            h.vertex_count(),
            brute.b,
            if agree { "agrees" } else { "DISAGREES" }
        ));
        body["brute_force"] = json!({"b": brute.b, "agrees": agree});
    }
    for n in &notes {
        let _ = writeln!(text, "  {n}");
    }
    body["notes"] = json!(notes);
    Ok(Outcome {
        report: body,
        text,
        ok,
    })
}

pub struct ReduceOptions<'a> {
    pub file: &'a str,
    pub recipe: Option<&'a str>,
    pub gram: Option<&'a str>,
    pub search: bool,
    pub max_reductions: u64,
    pub time_limit: Option<u64>,
    pub up_to_isomorphism: bool,
    pub out: Option<&'a str>,
}

fn hypergraph_json(h: &Hypergraph) -> Value {
    parse_json(&h.to_json())
}

fn trace_outcome(trace: &ReductionTrace, out: Option<&str>) -> Result<Outcome, CliError> {
    if let Some(path) = out {
        input::write(path, &trace.output.to_json())?;
    }
    let classes = trace.recipe.identify.as_deref().unwrap_or_default();
    let merged = classes.iter().filter(|c| c.len() > 1).count();
    let text = format!(
        "deleted {} vertices, merged {merged} classes, dropped {} isolated\n{}\n{}\n",
        trace.recipe.deleted.len(),
        trace.steps.isolated_removed.len(),
        title(&trace.output),
        trace.output.to_edge_list()
    );
    Ok(Outcome {
        report: json!({
            "recipe": parse_json(&trace.recipe.to_json()),
            "isolated_removed": trace.steps.isolated_removed.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "output": hypergraph_json(&trace.output),
            "reduced_gram": parse_json(&trace.reduced_gram.to_json()),
            "output_minimal": gram::is_minimal(&trace.output).ok(),
        }),
        text,
        ok: true,
    })
}

fn reduce_error(e: ReduceError) -> Result<Outcome, CliError> {
    match e {
        ReduceError::AlreadyReduced | ReduceError::NotMagic => Ok(Outcome {
            report: json!({"error": e.to_string()}),
            text: format!("{e}\n"),
            ok: false,
        }),
        other => Err(CliError::input("reduce", other)),
    }
}

pub fn reduce(o: &ReduceOptions<'_>) -> Result<Outcome, CliError> {
    let h = input::hypergraph(o.file)?.hypergraph;
    if let Some(path) = o.recipe {
        let recipe = input::recipe(path)?;
        let output = apply_recipe(&h, &recipe).map_err(|e| CliError::input("reduce", e))?;
        if let Some(out) = o.out {
            input::write(out, &output.to_json())?;
        }
        let (proper, diagnostics) = output.is_proper_eulerian();
        let mut text = format!("{}\n{}\n", title(&output), output.to_edge_list());
        if !proper {
            let _ = writeln!(text, "not proper Eulerian: {}", diagnostics.problems().join("; "));
        }
        return Ok(Outcome {
            report: json!({"output": hypergraph_json(&output), "proper_eulerian": proper}),
            text,
            ok: proper,
        });
    }
    if let Some(path) = o.gram {
        let g = input::gram(path)?;
        return match reduce_with(&h, &g) {
            Ok(trace) => trace_outcome(&trace, o.out),
            Err(e) => reduce_error(e),
        };
    }
    if o.search {
        let budget = SearchBudget {
            max_reductions: o.max_reductions,
            time_limit: o.time_limit.map(Duration::from_secs),
            dedup: if o.up_to_isomorphism {
                Dedup::Isomorphism
            } else {
                Dedup::Labeled
            },
            ..SearchBudget::default()
        };
        let report = match find_minimal_descendants(&h, &budget) {
            Ok(r) => r,
            Err(ReduceError::Gram(GramError::NoMagic)) => {
                return Ok(Outcome {
                    report: json!({"magic": false}),
                    text: "not magic; nothing to reduce\n".into(),
                    ok: false,
                })
            }
            Err(e) => return Err(CliError::input("reduce", e)),
        };
        let classes = report.isomorphism_classes();
        if let Some(path) = o.out {
            let files: Vec<Value> = report.minimal.values().map(hypergraph_json).collect();
            input::write(path, &serde_json::to_string_pretty(&files).expect("serializable"))?;
        }
        let mut text = if report.already_minimal {
            "already minimal\n".to_string()
        } else {
            format!(
                "{} minimal descendants ({} up to isomorphism); {} reductions, {} nodes{}\n",
                report.minimal.len(),
                classes.len(),
                report.reductions,
                report.nodes_visited,
                if report.exhaustive { ", exhaustive" } else { ", search incomplete" }
            )
        };
        for key in report.minimal.keys() {
            let profile = report.minimal[key].degree_profile();
            let _ = writeln!(
                text,
                "  {} vertices, {} edges ({}; {})",
                key.vertex_count,
                key.edges.len(),
                profile.observables(),
                profile.contexts()
            );
        }
        let descendants: Vec<Value> = report
            .minimal
            .iter()
            .map(|(key, d)| {
                json!({
                    "vertices": key.vertex_count,
                    "edges": key.edges.iter().map(|e| e.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "isomorphism_class": classes.iter().position(|c| c.contains(&key)).expect("classified"),
                    "observables": d.degree_profile().observables(),
                    "contexts": d.degree_profile().contexts(),
                })
            })
            .collect();
        return Ok(Outcome {
            report: json!({
                "already_minimal": report.already_minimal,
                "exhaustive": report.exhaustive,
                "budget_exhausted": report.budget_exhausted,
                "reductions": report.reductions,
                "nodes_visited": report.nodes_visited,
                "isomorphism_classes": classes.len(),
                "descendants": descendants,
            }),
            text,
            ok: true,
        });
    }
    let Some(magic) = gram::magic_affine_space(&h).map_err(gram_input_error)? else {
        return Ok(Outcome {
            report: json!({"magic": false}),
            text: "not magic; nothing to reduce\n".into(),
            ok: false,
        });
    };
    let Some((_, x)) = magic.find_reducible() else {
        return Ok(Outcome {
            report: json!({"minimal": true}),
            text: "minimal; every magic Gram matrix is reduced\n".into(),
            ok: true,
        });
    };
    let g = magic.space().to_matrix(&x);
    match reduce_with(&h, &g) {
        Ok(trace) => trace_outcome(&trace, o.out),
        Err(e) => reduce_error(e),
    }
}

pub fn planarity(file: &str) -> Result<Outcome, CliError> {
    let g = input::hypergraph(file)?.hypergraph;
    let report = is_planar_via_gram(&g).map_err(|e| CliError::input("planarity", e))?;
    let text = if report.planar {
        format!("planar (dual Gram space dimension {}, no magic element)\n", report.dual_dimension)
    } else {
        format!(
            "nonplanar (magic Gram matrix on {} dual vertices certifies it)\n",
            report.certificate.as_ref().map_or(0, |c| c.size())
        )
    };
    Ok(Outcome {
        report: report.to_json_value(),
        text,
        ok: true,
    })
}

pub fn orbits(generators: &str, size: usize, cap: usize) -> Result<Outcome, CliError> {
    let group = input::group(generators)?;
    let orbits = subset_orbits(&group, size, cap).map_err(|e| CliError::input("orbits", e))?;
    let candidates = candidate_hypergraphs(&group, size, cap).map_err(|e| CliError::input("orbits", e))?;
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let mut text = format!(
        "{} orbits on {size}-subsets of {} points (transitive group: {})\n{} candidate hypergraphs with {} edges\n",
        orbits.len(),
        group.degree(),
        group.is_transitive(),
        candidates.len(),
        if (4 * group.degree()) % size == 0 { (4 * group.degree() / size).to_string() } else { "-".into() }
    );
    let mut items = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let magic = gram::magic_affine_space(c).map_err(gram_input_error)?;
        let min_qubits = magic.as_ref().map(|m| m.min_qubits(gram::DEFAULT_ENUMERATION_CAP));
        let minimal = magic.as_ref().map(|m| m.find_reducible().is_none());
        let _ = writeln!(
            text,
            "  candidate {}: {}{}",
            i + 1,
            if magic.is_some() { "magic" } else { "not magic" },
            match (&min_qubits, minimal) {
                (Some(mq), Some(min)) => format!(
                    ", minimum qubits {}{}, {}",
                    mq.qubits,
                    if mq.exact { "" } else { " (upper bound)" },
                    if min { "minimal" } else { "not minimal" }
                ),
                _ => String::new(),
            }
        );
        items.push(json!({
            "edges": c.canonical_edges().iter().map(|e| e.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "magic": magic.is_some(),
            "minimal": minimal,
            "min_qubits": min_qubits.as_ref().map(|m| m.qubits),
            "min_qubits_exact": min_qubits.as_ref().map(|m| m.exact),
        }));
    }
    Ok(Outcome {
        report: json!({
            "degree": group.degree(),
            "size": size,
            "orbit_count": orbits.len(),
            "orbit_sizes": sizes,
            "candidates": items,
        }),
        text,
        ok: true,
    })
}

struct EntryChecks {
    name: String,
    checks: Vec<(String, Value, Value, bool)>,
}

impl EntryChecks {
    fn push(&mut self, check: &str, expected: Value, actual: Value, pass: bool) {
        self.checks.push((check.to_string(), expected, actual, pass));
    }
}

fn verify_entry(e: &DatasetEntry) -> Result<EntryChecks, CliError> {
    let h = &e.hypergraph;
    let mut c = EntryChecks {
        name: e.name.clone(),
        checks: Vec::new(),
    };
    let proper = h.is_proper_eulerian().0;
    c.push("proper_eulerian", json!(true), json!(proper), proper);
    let profile = h.degree_profile();
    for (key, actual) in [("observables", profile.observables()), ("contexts", profile.contexts())] {
        if let Some(expected) = e.expected_str(key) {
            c.push(key, json!(expected), json!(actual), expected == actual);
        }
    }
    let magic = gram::magic_affine_space(h).map_err(gram_input_error)?;
    if let Some(expected) = e.expected_bool("magic") {
        c.push("magic", json!(expected), json!(magic.is_some()), expected == magic.is_some());
    }
    if let Some(expected) = e.expected_bool("minimal") {
        let actual = magic.as_ref().is_some_and(|m| m.find_reducible().is_none());
        c.push("minimal", json!(expected), json!(actual), expected == actual);
    }
    if let Some(expected) = e.expected_usize("qubits") {
        let mq = magic.as_ref().map(|m| m.min_qubits(gram::DEFAULT_ENUMERATION_CAP));
        let actual = mq.as_ref().map(|m| m.qubits);
        let exact = mq.as_ref().is_some_and(|m| m.exact);
        c.push("min_qubits", json!(expected), json!(actual), exact && actual == Some(expected));
    }
    if let Some(a) = &e.assignment {
        let v = verify_assignment(h, a);
        c.push(
            "assignment",
            json!("valid and magic"),
            json!(if v.magic { "valid and magic" } else if v.valid { "valid, not magic" } else { "invalid" }),
            v.magic,
        );
        if let (Some((b, q)), Some(printed)) = (e.expected_bound(), e.expected_str("epsilon")) {
            let r = noncontextual_bound_capped(h, &v.context_signs, magicsets::gf2::DEFAULT_COSET_CAP)
                .map_err(bound_error)?;
            c.push(
                "bound",
                json!(format!("{b}/{q}")),
                json!(format!("{}/{}", r.b, r.q)),
                r.b == b as i64 && r.q == q,
            );
            c.push(
                "epsilon",
                json!(printed),
                json!(r.epsilon.to_string()),
                matches_printed(&r.epsilon, printed),
            );
        }
    }
    if let Some((parent, recipe)) = &e.derivation {
        let parent_h = dataset::load(parent)
            .map_err(|err| CliError::input("dataset", err))?
            .hypergraph;
        let replay = apply_recipe(&parent_h, recipe).map_err(|err| CliError::input("reduce", err))?;
        let pass = CanonicalForm::of(&replay) == CanonicalForm::of(h);
        c.push(
            "recipe_replay",
            json!(format!("{parent} reduces to {}", e.name)),
            json!(if pass { "identical" } else { "differs" }),
            pass,
        );
    }
    if let Some(expected) = e.expected("descendants").and_then(Value::as_array) {
        let report = find_minimal_descendants(h, &SearchBudget::default()).map_err(|err| CliError::input("reduce", err))?;
        let mut found: Vec<String> = Vec::new();
        for class in report.isomorphism_classes() {
            let rep = &report.minimal[class[0]];
            let named = dataset::all()
                .map_err(|err| CliError::input("dataset", err))?
                .into_iter()
                .find(|d| d.hypergraph.is_isomorphic(rep))
                .map_or_else(|| format!("unnamed {}-vertex structure", rep.vertex_count()), |d| d.name);
            found.push(named);
        }
        let want: Vec<String> = expected.iter().filter_map(|v| v.as_str().map(String::from)).collect();
        let pass = report.exhaustive && found == want;
        c.push("descendants_up_to_isomorphism", json!(want), json!(found), pass);
    }
    if let Some(expected) = e.expected_usize("descendant_count") {
        c.push(
            "descendant_count",
            json!(expected),
            json!("skipped: long search, run `reduce --search`"),
            true,
        );
    }
    Ok(c)
}

pub fn verify_dataset() -> Result<Outcome, CliError> {
    let entries = dataset::all().map_err(|e| CliError::input("dataset", e))?;
    let mut text = String::new();
    let mut items = Vec::new();
    let mut ok = true;
    for e in &entries {
        let c = verify_entry(e)?;
        let pass = c.checks.iter().all(|t| t.3);
        ok &= pass;
        let failed: Vec<&str> = c.checks.iter().filter(|t| !t.3).map(|t| t.0.as_str()).collect();
        let _ = writeln!(
            text,
            "{:<10} {} ({} checks{})",
            c.name,
            if pass { "ok" } else { "FAIL" },
            c.checks.len(),
            if failed.is_empty() { String::new() } else { format!("; failed: {}", failed.join(", ")) }
        );
        items.push(json!({
            "name": c.name,
            "pass": pass,
            "checks": c.checks.iter().map(|(check, expected, actual, pass)| json!({
                "check": check,
                "expected": expected,
                "actual": actual,
                "pass": pass,
            })).collect::<Vec<_>>(),
        }));
    }
    Ok(Outcome {
        report: json!({"entries": items}),
        text,
        ok,
    })
}

pub fn dataset_list() -> Result<Outcome, CliError> {
    let entries = dataset::all().map_err(|e| CliError::input("dataset", e))?;
    let mut text = String::new();
    let mut items = Vec::new();
    for e in &entries {
        let h = &e.hypergraph;
        let _ = writeln!(
            text,
            "{:<10} {:>3} observables {:>3} contexts{}{}",
            e.name,
            h.vertex_count(),
            h.edge_count(),
            if e.assignment.is_some() { "  assignment" } else { "" },
            e.derivation.as_ref().map(|(p, _)| format!("  from {p}")).unwrap_or_default()
        );
        items.push(json!({
            "name": e.name,
            "vertices": h.vertex_count(),
            "edges": h.edge_count(),
            "assignment": e.assignment.is_some(),
            "parent": e.derivation.as_ref().map(|(p, _)| p),
        }));
    }
    Ok(Outcome {
        report: json!({"entries": items}),
        text,
        ok: true,
    })
}

pub fn dataset_show(name: &str) -> Result<Outcome, CliError> {
    let raw = dataset::raw(name).ok_or_else(|| CliError::input("dataset", format!("unknown dataset {name:?}")))?;
    Ok(Outcome {
        report: json!({"entry": parse_json(raw)}),
        text: raw.to_string(),
        ok: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use magicsets::gf2::BitVec;
    use num_rational::Ratio;

    #[test]
    fn short_decimals() {
        assert_eq!(short_decimal(&Ratio::new(1, 5)), "0.2");
        assert_eq!(short_decimal(&Ratio::new(1, 8)), "0.125");
        assert_eq!(short_decimal(&Ratio::new(1, 6)), "0.167");
        assert_eq!(short_decimal(&Ratio::new(0, 6)), "0");
    }

    #[test]
    fn signs_parse() {
        assert_eq!(input::signs("+-+", 3).unwrap(), BitVec::from_bools(&[false, true, false]));
        assert_eq!(input::signs("[1, -1, 1]", 3).unwrap(), BitVec::from_bools(&[false, true, false]));
        assert_eq!(input::signs("0 1 1", 3).unwrap(), BitVec::from_bools(&[false, true, true]));
        assert!(input::signs("01", 3).is_err());
        assert!(input::signs("0x1", 3).is_err());
    }
}
