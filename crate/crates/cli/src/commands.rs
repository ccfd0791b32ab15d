use std::collections::BTreeMap;
use std::path::Path;
use std::time::Duration;

use antiramsey::orientations::{self, OrderingKind};
use antiramsey::registry::{Known, Validity};
use antiramsey::search::Goal;
use antiramsey::{
    check_hierarchy, critical_colors, emit_witness, enumerate_copies, find_canonical_clique, generate, load_witness,
    parse_graph, parse_pattern, search, verify_lower_bound, Budget, ClassShape, EdgeColoring, Error, Graph,
    PhiKind, Registry, Result, SearchConfig, SearchOutcome, Witness,
};
use serde_json::{json, Value};

use crate::{Command, Output, SearchOpts};

/// Exit status for results cut short by the budget.
const INEXACT: i32 = 2;

pub fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Compute {
            graph,
            n,
            phi,
            search,
            out,
            out_file,
        } => compute(&graph, n, &phi, &search, &out, out_file.as_deref()),
        Command::Decide {
            graph,
            n,
            m,
            phi,
            search,
            out,
            out_file,
        } => decide(&graph, n, m, &phi, &search, &out, out_file.as_deref()),
        Command::Verify {
            pattern,
            n,
            graph,
            phi,
            witness,
            out,
        } => match witness {
            Some(path) => verify_file(&path, &out),
            None => verify_pattern(
                pattern.as_deref().unwrap_or_default(),
                n.unwrap_or_default(),
                graph.as_deref().unwrap_or_default(),
                phi.as_deref().unwrap_or_default(),
                &out,
            ),
        },
        Command::Construct {
            pattern,
            n,
            out,
            out_file,
        } => construct(&pattern, n, &out, out_file.as_deref()),
        Command::Orient { graph, kind, out } => orient(&graph, &kind, &out),
        Command::CountOrient { graph, kind, out } => count_orient(&graph, &kind, &out),
        Command::Table {
            n,
            max_edges,
            registry,
            search,
            out,
        } => {
            let reg = load_registry(registry.as_deref())?;
            table(n, max_edges, &reg, &search, &out)
        }
        Command::CheckHierarchy {
            graph,
            n,
            values,
            search,
            out,
        } => hierarchy(graph.as_deref(), n, values.as_deref(), &search, &out),
        Command::Known {
            graph,
            n,
            phi,
            registry,
            out,
        } => {
            let reg = load_registry(registry.as_deref())?;
            let kind: PhiKind = phi.parse()?;
            let known = reg.known(kind, &graph, n)?;
            if out.json {
                print_json(&json!({ "graph": graph, "n": n, "kind": kind, "known": known }));
            } else {
                println!("{}({n}, {graph}): {}", kind.function_name(), describe_known(&known));
            }
            Ok(0)
        }
        Command::CanonicalClique { pattern, n, k, out } => canonical_clique(&pattern, n, k, &out),
        Command::Critical {
            pattern,
            n,
            vertex,
            out,
        } => critical(&pattern, n, vertex, &out),
        Command::ExperimentOmoBipartite { max_order, out } => {
            let report = orientations::experiment_omo_bipartite(max_order)?;
            if out.json {
                print_json(&serde_json::to_value(&report).expect("report serializes"));
            } else {
                println!("bipartite graphs up to order {max_order} (no isolated vertices)");
                println!("  scanned:              {}", report.scanned);
                println!("  even set independent: {}", report.hypothesis_holds);
                println!("  of those with an OMO: {}", report.with_omo);
                if report.counterexamples.is_empty() {
                    println!("  no counterexamples");
                } else {
                    println!("  counterexamples (up to isomorphism):");
                    for c in &report.counterexamples {
                        println!("    {c}");
                    }
                }
            }
            Ok(0)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn config(opts: &SearchOpts) -> Result<SearchConfig> {
    if !(opts.budget_secs > 0.0 && opts.budget_secs.is_finite()) {
        return Err(Error::Domain("--budget-secs must be positive".into()));
    }
    let budget = Budget::new(opts.budget_nodes, Duration::from_secs_f64(opts.budget_secs))?;
    Ok(SearchConfig::default().with_threads(opts.threads).with_budget(budget))
}

fn load_registry(path: Option<&Path>) -> Result<Registry> {
    match path {
        Some(p) => Registry::from_path(p),
        None => Ok(Registry::builtin().clone()),
    }
}

fn describe_known(k: &Known) -> String {
    match k {
        Known::Exact {
            value,
            validity,
            small_n_caveat,
            ..
        } => {
            let mut s = value.to_string();
            if *validity == Validity::Asymptotic {
                s += " (large n only)";
            }
            if *small_n_caveat {
                s += " (may fail for small n)";
            }
            s
        }
        Known::Bounds { lo, hi, .. } => format!(
            "between {} and {}",
            lo.map_or("?".into(), |x| x.to_string()),
            hi.map_or("?".into(), |x| x.to_string())
        ),
        Known::Unknown => "unknown".into(),
    }
}

fn run_search(g: &Graph, n: usize, kind: PhiKind, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let idx = enumerate_copies(g, n)?;
    search(&idx, kind, Goal::AllCounts, cfg)
}

fn compute(
    graph: &str,
    n: usize,
    phi: &str,
    opts: &SearchOpts,
    out: &Output,
    out_file: Option<&Path>,
) -> Result<i32> {
    let g = parse_graph(graph)?;
    let kind: PhiKind = phi.parse()?;
    let res = run_search(&g, n, kind, &config(opts)?)?;
    let known = Registry::builtin().known_for_graph(kind, &g, n)?;
    let witness = match &res.witness {
        Some(_) => Some(Witness::from_outcome(&res, graph)?),
        None => None,
    };
    if out.json {
        print_json(&json!({
            "graph": graph,
            "n": n,
            "kind": kind,
            "phi": res.phi,
            "exhausted": res.exhausted,
            "achievable": res.achievable,
            "gaps": res.exhausted.then(|| res.gaps()),
            "witness": witness,
            "stats": res.stats,
            "known": known,
        }));
    } else {
        let name = kind.function_name();
        if res.exhausted {
            println!("{name}({n}, {graph}) = {}", res.phi);
        } else {
            println!("{name}({n}, {graph}) >= {} (budget exhausted, not exact)", res.phi);
        }
        let set: Vec<String> = res.achievable.iter().map(|m| m.to_string()).collect();
        println!("avoiding color counts: {{{}}}", set.join(", "));
        if res.exhausted && !res.gaps().is_empty() {
            println!("gaps below the maximum: {:?}", res.gaps());
        }
        match &witness {
            Some(w) => println!("witness at m={}: {:?}", w.m, w.colors),
            None => println!("no avoiding coloring"),
        }
        println!("registry: {}", describe_known(&known));
        println!(
            "nodes {}, prunes {}, bound cuts {}, {} ms",
            res.stats.nodes, res.stats.prunes, res.stats.bound_cuts, res.stats.elapsed_ms
        );
    }
    if let Some(path) = out_file {
        emit_witness(&res, graph, path)?;
    }
    Ok(if res.exhausted { 0 } else { INEXACT })
}

fn decide(
    graph: &str,
    n: usize,
    m: usize,
    phi: &str,
    opts: &SearchOpts,
    out: &Output,
    out_file: Option<&Path>,
) -> Result<i32> {
    let g = parse_graph(graph)?;
    let kind: PhiKind = phi.parse()?;
    let idx = enumerate_copies(&g, n)?;
    let res = search(&idx, kind, Goal::Exactly(m), &config(opts)?)?;
    let found = res.witness.is_some();
    let status = if found || res.exhausted { 0 } else { INEXACT };
    if out.json {
        print_json(&json!({
            "graph": graph,
            "n": n,
            "m": m,
            "kind": kind,
            "avoidable": if found { json!(true) } else if res.exhausted { json!(false) } else { Value::Null },
            "exhausted": res.exhausted,
            "witness": res.witness.as_ref().map(EdgeColoring::colors),
            "stats": res.stats,
        }));
    } else if let Some(w) = &res.witness {
        println!("avoidable with {m} colors: yes");
        println!("witness: {:?}", w.colors());
    } else if res.exhausted {
        println!("avoidable with {m} colors: no");
    } else {
        println!("avoidable with {m} colors: undecided (budget exhausted)");
    }
    if let Some(path) = out_file {
        emit_witness(&res, graph, path)?;
    }
    Ok(status)
}

fn verify_pattern(pattern: &str, n: usize, graph: &str, phi: &str, out: &Output) -> Result<i32> {
    let spec = parse_pattern(pattern, n)?;
    let coloring = generate(&spec)?;
    let g = parse_graph(graph)?;
    let kind: PhiKind = phi.parse()?;
    let ok = verify_lower_bound(&coloring, &g, kind)?;
    let m = coloring.color_count();
    if out.json {
        print_json(&json!({
            "pattern": spec.to_string(),
            "n": n,
            "graph": graph,
            "kind": kind,
            "colors": m,
            "certificate": ok,
            "implied_lower_bound": if ok { Some(m + 1) } else { None },
        }));
    } else {
        println!("{spec} on K_{n} uses {m} colors");
        println!("certificate: {ok}");
        if ok {
            println!("implied bound: {}({n}, {graph}) >= {}", kind.function_name(), m + 1);
        } else {
            println!("a {kind}-good copy of {graph} exists");
        }
    }
    Ok(0)
}

fn verify_file(path: &Path, out: &Output) -> Result<i32> {
    let (w, _) = load_witness(path)?;
    if out.json {
        print_json(&json!({
            "certificate": true,
            "witness": w,
            "implied_lower_bound": w.m + 1,
        }));
    } else {
        println!("certificate: true");
        println!("implied bound: {}({}, {}) >= {}", w.kind.function_name(), w.n, w.pattern, w.m + 1);
    }
    Ok(0)
}

fn color_matrix(c: &EdgeColoring) -> String {
    let n = c.n();
    let width = (c.color_count().max(1) - 1).to_string().len().max(1);
    let mut s = String::new();
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| {
                if i == j {
                    format!("{:>width$}", ".")
                } else {
                    format!("{:>width$}", c.color(i, j))
                }
            })
            .collect();
        s += &row.join(" ");
        s.push('\n');
    }
    s
}

fn construct(pattern: &str, n: usize, out: &Output, out_file: Option<&Path>) -> Result<i32> {
    let spec = parse_pattern(pattern, n)?;
    let coloring = generate(&spec)?;
    let claimed = antiramsey::claimed_colors(&spec).ok();
    let doc = json!({
        "pattern": spec.to_string(),
        "n": n,
        "edge_order": antiramsey::witness::EDGE_ORDER,
        "colors": coloring.colors(),
        "m": coloring.color_count(),
        "claimed": claimed,
    });
    if let Some(path) = out_file {
        std::fs::write(path, serde_json::to_string_pretty(&doc).expect("json") + "\n")?;
    }
    if out.json {
        print_json(&doc);
    } else {
        match claimed {
            Some(c) => println!("{spec} on K_{n}: {} colors (formula {c})", coloring.color_count()),
            None => println!("{spec} on K_{n}: {} colors", coloring.color_count()),
        }
        print!("{}", color_matrix(&coloring));
    }
    Ok(0)
}

fn orient(graph: &str, kind: &str, out: &Output) -> Result<i32> {
    let g = parse_graph(graph)?;
    let kind: OrderingKind = kind.parse()?;
    let res = orientations::solve(&g, kind)?;
    if out.json {
        print_json(&json!({ "graph": graph, "kind": kind, "result": res }));
        return Ok(0);
    }
    match res {
        None => println!("{graph} has no {kind} ordering"),
        Some(r) => {
            println!("{kind} ordering of {graph} ({:?}):", r.method);
            let perm: Vec<String> = r.perm.iter().map(|v| v.to_string()).collect();
            println!("  order: {}", perm.join(" "));
            for &v in &r.perm {
                println!("  vertex {v}: {} backward ({:?})", r.backward[v], r.status[v]);
            }
        }
    }
    Ok(0)
}

fn count_orient(graph: &str, kind: &str, out: &Output) -> Result<i32> {
    let g = parse_graph(graph)?;
    let kind: OrderingKind = kind.parse()?;
    let count = orientations::count(&g, kind)?;
    if out.json {
        print_json(&json!({ "graph": graph, "kind": kind, "count": count }));
    } else {
        println!("{count} {kind} orderings of {graph}");
    }
    Ok(0)
}

/// Patterns of the registry with at most `max_edges` edges that fit in K_n,
/// smallest first.
fn table_patterns(reg: &Registry, n: usize, max_edges: usize) -> Result<Vec<(String, Graph)>> {
    let mut seen: Vec<String> = Vec::new();
    let mut out = Vec::new();
    for r in reg.records() {
        if seen.contains(&r.pattern) {
            continue;
        }
        seen.push(r.pattern.clone());
        let Ok(g) = parse_graph(&r.pattern) else { continue };
        if g.size() <= max_edges && g.order() <= n {
            out.push((r.pattern.clone(), g));
        }
    }
    out.sort_by_key(|(name, g)| (g.size(), g.order(), name.clone()));
    Ok(out)
}

fn cell_status(computed: usize, exhausted: bool, known: &Known) -> &'static str {
    let v = computed as i64;
    if !exhausted {
        return "inexact";
    }
    match known {
        Known::Exact {
            value,
            validity,
            small_n_caveat,
            ..
        } => {
            if *value == v {
                "match"
            } else if *validity == Validity::Asymptotic {
                "asymptotic"
            } else if *small_n_caveat {
                "caveat"
            } else {
                "mismatch"
            }
        }
        Known::Bounds { .. } if known.admits(v) => "within-bounds",
        Known::Bounds { .. } => "mismatch",
        Known::Unknown => "unknown",
    }
}

fn table(n: usize, max_edges: usize, reg: &Registry, opts: &SearchOpts, out: &Output) -> Result<i32> {
    let cfg = config(opts)?;
    let mut rows = Vec::new();
    let mut any_inexact = false;
    let mut mismatches = 0;
    for (name, g) in table_patterns(reg, n, max_edges)? {
        let mut cells = Vec::new();
        let mut values = BTreeMap::new();
        for kind in PhiKind::ALL {
            let res = run_search(&g, n, kind, &cfg)?;
            let known = reg.known_for_graph(kind, &g, n)?;
            let status = cell_status(res.phi, res.exhausted, &known);
            any_inexact |= !res.exhausted;
            mismatches += (status == "mismatch") as usize;
            if res.exhausted {
                values.insert(kind, res.phi as i64);
            }
            cells.push((kind, res.phi, status, known));
        }
        let violations = check_hierarchy(&values);
        rows.push((name, cells, violations));
    }
    if out.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(name, cells, violations)| {
                json!({
                    "pattern": name,
                    "cells": cells.iter().map(|(kind, v, status, known)| json!({
                        "kind": kind, "value": v, "status": status, "known": known,
                    })).collect::<Vec<_>>(),
                    "hierarchy_violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        print_json(&json!({ "n": n, "max_edges": max_edges, "rows": rows }));
    } else {
        print!("{:<16}", "pattern");
        for kind in PhiKind::ALL {
            print!("{:>6}", kind.function_name());
        }
        println!();
        for (name, cells, violations) in &rows {
            print!("{name:<16}");
            for (_, v, status, _) in cells {
                let mark = match *status {
                    "match" | "within-bounds" => "",
                    "caveat" => "*",
                    "mismatch" => "!",
                    "inexact" => ">",
                    "asymptotic" => "~",
                    _ => "?",
                };
                print!("{:>6}", format!("{v}{mark}"));
            }
            println!();
            for v in violations {
                println!("    hierarchy violation {v}");
            }
        }
        println!();
        println!("* differs from a table value that may fail for small n");
        println!("~ registry value holds only for large n");
        println!("! contradicts the registry");
        println!("? no registry value");
        println!("> lower bound only (budget exhausted)");
    }
    if mismatches > 0 {
        eprintln!("{mismatches} cell(s) contradict the registry");
    }
    Ok(if any_inexact { INEXACT } else { 0 })
}

fn parse_values(text: &str) -> Result<BTreeMap<PhiKind, i64>> {
    let mut map = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected kind=value, got `{item}`")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad value in `{item}`")))?;
        map.insert(k.parse()?, v);
    }
    Ok(map)
}

fn hierarchy(
    graph: Option<&str>,
    n: Option<usize>,
    values: Option<&str>,
    opts: &SearchOpts,
    out: &Output,
) -> Result<i32> {
    let mut status = 0;
    let map = match values {
        Some(text) => parse_values(text)?,
        None => {
            let graph = graph.ok_or_else(|| Error::Domain("need --graph or --values".into()))?;
            let n = n.ok_or_else(|| Error::Domain("need --n with --graph".into()))?;
            let g = parse_graph(graph)?;
            let cfg = config(opts)?;
            let mut map = BTreeMap::new();
            for kind in PhiKind::ALL {
                let res = run_search(&g, n, kind, &cfg)?;
                if res.exhausted {
                    map.insert(kind, res.phi as i64);
                } else {
                    status = INEXACT;
                }
            }
            map
        }
    };
    let violations = check_hierarchy(&map);
    if out.json {
        print_json(&json!({
            "values": map.iter().map(|(k, v)| (k.as_str().to_string(), *v)).collect::<BTreeMap<_, _>>(),
            "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }));
    } else {
        let shown: Vec<String> = map.iter().map(|(k, v)| format!("{}={v}", k.function_name())).collect();
        println!("{}", shown.join(" "));
        if violations.is_empty() {
            println!("no violations");
        }
        for v in &violations {
            println!("violation {v}");
        }
    }
    Ok(status)
}

fn canonical_clique(pattern: &str, n: usize, k: usize, out: &Output) -> Result<i32> {
    let spec = parse_pattern(pattern, n)?;
    let coloring = generate(&spec)?;
    let found = find_canonical_clique(&coloring, k)?;
    if out.json {
        print_json(&json!({
            "pattern": spec.to_string(),
            "n": n,
            "k": k,
            "clique": found.as_ref().map(|(vs, tag)| json!({ "vertices": vs, "type": format!("{tag:?}").to_lowercase() })),
        }));
    } else {
        match found {
            Some((vs, tag)) => println!("{tag:?} K_{k} on {vs:?}"),
            None => println!("no canonical K_{k} in {spec} on K_{n}"),
        }
    }
    Ok(0)
}

fn critical(pattern: &str, n: usize, vertex: usize, out: &Output) -> Result<i32> {
    let spec = parse_pattern(pattern, n)?;
    let coloring = generate(&spec)?;
    let crit = critical_colors(&coloring, vertex)?;
    if out.json {
        let list: Vec<Value> = crit.iter().map(|(c, s)| json!({ "color": c, "shape": s })).collect();
        print_json(&json!({ "pattern": spec.to_string(), "n": n, "vertex": vertex, "critical": list }));
    } else if crit.is_empty() {
        println!("no critical colors at {vertex}");
    } else {
        for (c, s) in crit {
            let shape = match s {
                ClassShape::SingleEdge => "single edge",
                ClassShape::Star => "star",
            };
            println!("color {c}: {shape} at {vertex}");
        }
    }
    Ok(0)
}
