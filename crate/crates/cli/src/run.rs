use std::path::Path;

use qgadget::{catalog, fill_cycle_general, gadget_for_state, verify, FillPolicy, GadgetGraph, IntState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reduction::{
    clock_projectors, decide_homology, kernel_oracle, reduce_to_graph, sparse_projectors, Circuit, ClockOptions, Mode,
    ProjectorTerm, ReduceOptions, SatInstance,
};
use serde_json::{json, Value};
use topo::complex::full_clique_complex;
use topo::homology::clique_betti;
use topo::{homology_report, Exec, Graph, Limits};

use crate::error::{CliError, Result};
use crate::{Cli, Command, ComplexCommand, GadgetCommand, Global, GraphCommand, ModeArg, Policy, SourceArgs, SusyCommand};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn read_graph(path: &Path) -> Result<Graph> {
    Ok(Graph::parse_any(&read(path)?)?)
}

fn to_pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable report") + "\n"
}

/// `key: value` lines for nested JSON; arrays of scalars on one line.
fn human(v: &Value, prefix: &str, out: &mut String) {
    let scalar = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                human(x, &key, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: {}\n", items.join(" ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                human(x, &format!("{prefix}[{i}]"), out);
            }
        }
        other => {
            let key = if prefix.is_empty() { "value" } else { prefix };
            out.push_str(&format!("{key}: {}\n", scalar(other)));
        }
    }
}

fn render(g: &Global, v: &Value) -> String {
    if g.human {
        let mut s = String::new();
        human(v, "", &mut s);
        s
    } else {
        to_pretty(v)
    }
}

/// Primary report goes to `--out` when given, else to stdout.
fn emit(g: &Global, v: &Value) -> Result<()> {
    let text = render(g, v);
    match &g.out {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn limits(g: &Global) -> Limits {
    let mut l = Limits::from_env();
    if let Some(d) = g.max_dim {
        l.max_dim = d;
    }
    if let Some(d) = g.dense_cap {
        l.dense_cap = d;
    }
    l
}

fn exec(g: &Global) -> Exec {
    if g.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn policy(p: Policy) -> FillPolicy {
    match p {
        Policy::Edge => FillPolicy::Edge,
        Policy::EdgeOrVertex => FillPolicy::EdgeOrVertex,
        Policy::EdgeAndFans => FillPolicy::EdgeAndVertexFans,
    }
}

fn mode_name(m: ModeArg) -> &'static str {
    match m {
        ModeArg::Clique => "clique",
        ModeArg::Independence => "independence",
    }
}

fn code(yes: bool) -> u8 {
    if yes {
        0
    } else {
        1
    }
}

fn load_instance(src: &SourceArgs) -> Result<SatInstance> {
    if let Some(p) = &src.instance {
        return Ok(SatInstance::from_json(&read(p)?)?);
    }
    let p = src.circuit.as_ref().ok_or_else(|| CliError::Usage("need --circuit or --instance".into()))?;
    let c = Circuit::parse(&read(p)?)?;
    Ok(if src.sparsify { sparse_projectors(&c)? } else { clock_projectors(&c, ClockOptions::default())? })
}

pub fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    let lim = limits(g);
    let ex = exec(g);
    match &cli.command {
        Command::Reduce(a) => {
            let inst = load_instance(&a.source)?;
            if let Some(p) = &a.emit_instance {
                write(p, &(inst.to_json() + "\n"))?;
            }
            let r = reduce_to_graph(&inst, &ReduceOptions::default())?;
            let (graph, max_degree, edges) = if a.complement {
                let c = r.graph.to_graph()?.complement();
                (c.to_json(), c.max_degree(), c.edge_count())
            } else {
                (r.graph.to_json(), r.graph.max_degree(), r.graph.edge_count())
            };
            let summary = json!({
                "qubits": inst.n,
                "terms": inst.terms.len(),
                "locality": inst.locality(),
                "max_incidence": inst.max_incidence(),
                "dim": r.l,
                "mode": if a.complement { "clique" } else { "independence" },
                "vertices": r.graph.vertex_count(),
                "edges": edges,
                "max_degree": max_degree,
                "mediators": r.mediators,
            });
            match &g.out {
                Some(p) => {
                    write(p, &to_pretty(&graph))?;
                    print!("{}", render(g, &summary));
                }
                None => print!("{}", to_pretty(&graph)),
            }
            Ok(0)
        }
        Command::Betti { graph, dim, mode } => {
            let gr = read_graph(graph)?;
            let m = match mode {
                ModeArg::Clique => Mode::Clique,
                ModeArg::Independence => Mode::Independence,
            };
            let d = decide_homology(&gr, *dim, m, &lim, ex)?;
            emit(g, &json!({ "mode": mode_name(*mode), "dim": d.l, "betti": d.betti, "nontrivial": d.nontrivial }))?;
            Ok(code(d.nontrivial))
        }
        Command::Complex { command: ComplexCommand::Betti { graph, dim, mode } } => {
            let gr = read_graph(graph)?;
            let gr = match mode {
                ModeArg::Clique => gr,
                ModeArg::Independence => gr.complement(),
            };
            match dim {
                Some(p) => {
                    if p + 1 > lim.max_dim {
                        return Err(topo::TopoError::Resource(format!("dimension {p} exceeds max-dim {}", lim.max_dim)).into());
                    }
                    let plain = clique_betti(&gr, *p, false, ex);
                    let reduced = if *p == 0 && gr.vertex_count() > 0 { plain - 1 } else { plain };
                    emit(g, &json!({ "mode": mode_name(*mode), "dim": p, "betti": plain, "betti_reduced": reduced }))?;
                    Ok(code(reduced > 0))
                }
                None => {
                    let k = full_clique_complex(&gr, &lim, ex)?;
                    let r = homology_report(&k, ex)?;
                    let nontrivial = r.betti_reduced.iter().any(|&b| b > 0);
                    let mut v = serde_json::to_value(&r).expect("report");
                    v["mode"] = json!(mode_name(*mode));
                    emit(g, &v)?;
                    Ok(code(nontrivial))
                }
            }
        }
        Command::Graph { command: GraphCommand::Complement { graph } } => {
            let c = read_graph(graph)?.complement();
            emit(g, &serde_json::to_value(c.to_json()).expect("graph"))?;
            Ok(0)
        }
        Command::Gadget { command } => gadget(g, command, ex),
        Command::Oracle(src) => {
            let inst = load_instance(src)?;
            let k = kernel_oracle(&inst, lim.dense_cap)?;
            emit(g, &json!({ "qubits": inst.n, "terms": inst.terms.len(), "kernel_dim": k, "satisfiable": k > 0 }))?;
            Ok(code(k > 0))
        }
        Command::Susy { command: SusyCommand::Check { graph, cap } } => {
            let r = susy::susy_check(&read_graph(graph)?, *cap, ex)?;
            emit(g, &serde_json::to_value(&r).expect("report"))?;
            Ok(code(r.matches_homology && r.forms_agree))
        }
        Command::Selfcheck { cases } => {
            let v = selfcheck(g.seed, *cases, &lim, ex)?;
            let ok = v["passes"] == json!(true);
            emit(g, &v)?;
            Ok(code(ok))
        }
    }
}

fn gadget(g: &Global, cmd: &GadgetCommand, ex: Exec) -> Result<u8> {
    match cmd {
        GadgetCommand::List => {
            emit(g, &json!(catalog::CATALOG))?;
            Ok(0)
        }
        GadgetCommand::Build { name, state } => {
            let gad: GadgetGraph = match (name, state) {
                (Some(n), _) => catalog::build_named(n)?,
                (None, Some(s)) => {
                    let s = IntState::parse(s)?;
                    let qubits: Vec<usize> = (0..s.n()).collect();
                    match g.policy {
                        Some(p) => fill_cycle_general("g", &qubits, &s.normalized(), policy(p))?,
                        None => gadget_for_state("g", &qubits, &s)?,
                    }
                }
                (None, None) => return Err(CliError::Usage("need a gadget name or --state".into())),
            };
            let text = gad.to_json() + "\n";
            match &g.out {
                Some(p) => write(p, &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        GadgetCommand::Verify { gadget } => {
            let gad = GadgetGraph::from_json(&read(gadget)?)?;
            let v = verify(&gad, ex)?;
            emit(g, &serde_json::to_value(&v).expect("verdict"))?;
            Ok(code(v.passes))
        }
    }
}

fn random_state(rng: &mut ChaCha8Rng, k: usize) -> IntState {
    let bits = |x: usize| (0..k).map(|j| (x >> (k - 1 - j) & 1) as u8).collect::<Vec<u8>>();
    let a = rng.random_range(0..1usize << k);
    if rng.random_bool(0.5) {
        return IntState::basis(&bits(a));
    }
    let mut b = rng.random_range(0..1usize << k);
    while b == a {
        b = rng.random_range(0..1usize << k);
    }
    IntState::new(k, [(bits(a), 1), (bits(b), -1)]).expect("valid state")
}

/// Kernel oracle vs reduced-graph homology on random small instances, and
/// ground-space dimensions vs reduced Betti numbers on random graphs.
fn selfcheck(seed: u64, cases: usize, lim: &Limits, ex: Exec) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parsimony_failures = Vec::new();
    for case in 0..cases {
        let n = rng.random_range(1..=3usize);
        let count = rng.random_range(1..=3usize);
        let mut terms = Vec::new();
        for t in 0..count {
            let k = rng.random_range(1..=n.min(2));
            let mut qubits: Vec<usize> = Vec::new();
            while qubits.len() < k {
                let q = rng.random_range(0..n);
                if !qubits.contains(&q) {
                    qubits.push(q);
                }
            }
            terms.push(ProjectorTerm { provenance: format!("case{case}.t{t}"), qubits, state: random_state(&mut rng, k) });
        }
        let inst = SatInstance::new(n, terms)?;
        let expected = kernel_oracle(&inst, lim.dense_cap)?;
        let r = reduce_to_graph(&inst, &ReduceOptions::default())?;
        let d = decide_homology(&r.graph.to_graph()?, r.l, Mode::Independence, lim, ex)?;
        if d.betti != expected {
            parsimony_failures.push(json!({ "case": case, "instance": inst, "oracle": expected, "betti": d.betti }));
        }
    }
    let mut susy_failures = Vec::new();
    for case in 0..cases {
        let v = rng.random_range(1..=8u32);
        let mut gr = Graph::with_vertices(v as usize);
        for a in 0..v {
            for b in a + 1..v {
                if rng.random_bool(0.4) {
                    gr.add_edge(a, b)?;
                }
            }
        }
        let r = susy::susy_check(&gr, susy::DEFAULT_STATE_CAP, ex)?;
        if !(r.matches_homology && r.forms_agree) {
            susy_failures.push(json!({ "case": case, "graph": gr.to_json(), "report": r }));
        }
    }
    Ok(json!({
        "seed": seed,
        "cases": cases,
        "parsimony_failures": parsimony_failures,
        "susy_failures": susy_failures,
        "passes": parsimony_failures.is_empty() && susy_failures.is_empty(),
    }))
}
