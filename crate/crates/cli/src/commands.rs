use std::fs;
use std::io::Write;
use std::time::Duration;

use gpkd_core::export::{to_dot, vertex_list_csv};
use gpkd_core::families::{diamond_center, diamond_set, j_set, path_block_set, thin_grid_a, thin_grid_b};
use gpkd_core::formulas::{gp_cycle, gp_path, gp_prism_case};
use gpkd_core::geodesy::GeodesicWitness;
use gpkd_core::solver::{default_method, lattice_table_with, solve, solve_bruteforce, LatticeTable};
use gpkd_core::{find_violation, is_kgdp, DistMatrix, Family, Graph, Method, PositionParams, SearchOptions, VertexSet};
use log::info;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{
    Command, ConstructionKind, ExportFormat, FormulaFamily, GraphArgs, MethodArg, OutputArgs, ParamArgs, SearchArgs,
};
use crate::{CliError, CliResult};

pub fn execute(command: Command, out: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Compute { graph, params, search, output } => compute(&graph, &params, &search, &output, out),
        Command::Check { graph, params, set, output } => check(&graph, &params, &set, &output, out),
        Command::Formula { family, n, k, d, output } => formula(family, n, k, d, &output, out),
        Command::Table { graph, kmax, formula, search, output } => table(&graph, kmax, formula, &search, &output, out),
        Command::Construct { kind, n, k, d, m, r, rows, cols, center, output } => {
            let req = ConstructRequest { kind, n, k, d, m, r, rows, cols, center };
            construct(&req, &output, out)
        }
        Command::Verify { family, random, n_max, k_max, d_max, count, seed, search, output } => {
            let grid = Grid { n_max, k_max, d_max };
            match family {
                Some(family) if !random => verify_family(family, &grid, &search, &output, out),
                _ => verify_random(&grid, count, seed, &search, &output, out),
            }
        }
        Command::Export { graph, set, format, output } => {
            let (g, _) = load_graph(&graph)?;
            let marked = match set {
                Some(text) => parse_set(&text, &g)?,
                None => VertexSet::new(),
            };
            let text = match format {
                ExportFormat::Dot => to_dot(&g, &marked),
                ExportFormat::Csv => vertex_list_csv(&g, &marked),
            };
            match output {
                Some(path) => fs::write(&path, text).map_err(|source| CliError::File { path, source }),
                None => Ok(out.write_all(text.as_bytes())?),
            }
        }
    }
}

fn load_graph(args: &GraphArgs) -> CliResult<(Graph, String)> {
    match (&args.graph, &args.graph_file) {
        (Some(desc), _) => Ok((Graph::from_descriptor(desc)?, desc.clone())),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::File { path: path.clone(), source })?;
            Ok((Graph::parse_edge_list(&text)?, path.display().to_string()))
        }
        (None, None) => Err(CliError::Input("a graph is required (--graph or --graph-file)".into())),
    }
}

/// Comma-separated labels; on grid families `row.col` pairs (1-based) are
/// accepted as well.
fn parse_set(text: &str, g: &Graph) -> CliResult<VertexSet> {
    let mut set = VertexSet::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v = match token.split_once('.') {
            Some((row, col)) => {
                let Some(Family::Grid { rows, cols }) = g.family_tag() else {
                    return Err(CliError::Input(format!("`{token}`: row.col pairs need a grid or prism graph")));
                };
                let parse = |s: &str| s.parse::<usize>().map_err(|_| CliError::Input(format!("bad pair `{token}`")));
                let (i, j) = (parse(row)?, parse(col)?);
                if !(1..=rows).contains(&i) || !(1..=cols).contains(&j) {
                    return Err(CliError::Input(format!("pair `{token}` is outside the {rows}x{cols} grid")));
                }
                (i - 1) * cols + (j - 1)
            }
            None => token.parse().map_err(|_| CliError::Input(format!("bad vertex `{token}`")))?,
        };
        if v >= g.n() {
            return Err(gpkd_core::Error::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
        set.insert(v);
    }
    Ok(set)
}

fn position_params(args: &ParamArgs, dm: &DistMatrix) -> CliResult<PositionParams> {
    Ok(PositionParams::new(args.k, args.d.unwrap_or(dm.diameter().max(1)))?)
}

fn search_options(args: &SearchArgs) -> CliResult<SearchOptions> {
    let time_budget = match args.time_budget {
        Some(secs) if !(secs.is_finite() && secs >= 0.0) => {
            return Err(CliError::Input(format!("time budget must be a nonnegative number of seconds, got {secs}")))
        }
        Some(secs) => Some(Duration::from_secs_f64(secs)),
        None => None,
    };
    Ok(SearchOptions {
        node_budget: args.node_budget,
        time_budget,
        workers: args.workers,
        warm_start: !args.no_warm_start,
        full_check: false,
    })
}

fn method_for(arg: MethodArg, g: &Graph) -> Method {
    match arg {
        MethodArg::Auto => default_method(g),
        MethodArg::Brute => Method::Brute,
        MethodArg::BranchAndBound => Method::BranchAndBound,
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Output(e.into()))?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct ComputeReport<'a> {
    graph: &'a str,
    vertices: usize,
    k: usize,
    requested_d: u32,
    effective_d: u32,
    value: usize,
    witness: &'a VertexSet,
    method: Method,
    nodes_explored: u64,
}

fn compute(
    graph: &GraphArgs,
    params: &ParamArgs,
    search: &SearchArgs,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> CliResult<()> {
    let (g, label) = load_graph(graph)?;
    let dm = DistMatrix::new(&g);
    let p = position_params(params, &dm)?;
    let method = method_for(search.method, &g);
    info!("solving {label} with k={} d={} by {method}", p.k(), p.d());
    let r = solve(&g, p, method, &search_options(search)?)?;
    if output.json {
        return write_json(
            out,
            &ComputeReport {
                graph: &label,
                vertices: g.n(),
                k: r.k,
                requested_d: r.requested_d,
                effective_d: r.effective_d,
                value: r.value,
                witness: &r.witness,
                method: r.method,
                nodes_explored: r.nodes_explored,
            },
        );
    }
    if output.csv {
        out.write_all(vertex_list_csv(&g, &r.witness).as_bytes())?;
        return Ok(());
    }
    writeln!(out, "value: {}", r.value)?;
    writeln!(out, "witness: {}", r.witness)?;
    writeln!(out, "k: {}", r.k)?;
    writeln!(out, "d: {} (effective {})", r.requested_d, r.effective_d)?;
    writeln!(out, "method: {} ({} nodes)", r.method, r.nodes_explored)?;
    Ok(())
}

#[derive(Serialize)]
struct CheckReport<'a> {
    valid: bool,
    set: &'a VertexSet,
    k: usize,
    requested_d: u32,
    effective_d: u32,
    violation: Option<GeodesicWitness>,
}

fn check(graph: &GraphArgs, params: &ParamArgs, set: &str, output: &OutputArgs, out: &mut dyn Write) -> CliResult<()> {
    let (g, _) = load_graph(graph)?;
    let dm = DistMatrix::new(&g);
    let p = position_params(params, &dm)?;
    let s = parse_set(set, &g)?;
    let violation = find_violation(&g, &dm, &s, p)?.map(|v| v.witness);
    let report = CheckReport {
        valid: violation.is_none(),
        set: &s,
        k: p.k(),
        requested_d: p.d(),
        effective_d: p.effective_d(dm.diameter()),
        violation,
    };
    if output.json {
        return write_json(out, &report);
    }
    if output.csv {
        writeln!(out, "valid,k,requested_d,effective_d")?;
        writeln!(out, "{},{},{},{}", report.valid, report.k, report.requested_d, report.effective_d)?;
        return Ok(());
    }
    match &report.violation {
        None => writeln!(out, "valid")?,
        Some(w) => {
            let path: Vec<String> = w.vertices.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "invalid: geodesic {} of length {} holds {} vertices of the set",
                path.join("-"),
                w.length,
                w.count_in_s
            )?
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FormulaReport {
    family: &'static str,
    n: usize,
    k: usize,
    d: u32,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    case: Option<String>,
}

fn family_name(family: FormulaFamily) -> &'static str {
    match family {
        FormulaFamily::Path => "path",
        FormulaFamily::Cycle => "cycle",
        FormulaFamily::Prism => "prism",
    }
}

fn evaluate(family: FormulaFamily, n: usize, p: PositionParams) -> CliResult<(usize, Option<String>)> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    Ok(match family {
        FormulaFamily::Path => (gp_path(n, p), None),
        FormulaFamily::Cycle => (gp_cycle(n, p)?, None),
        FormulaFamily::Prism => {
            let (case, value) = gp_prism_case(n, p);
            (value, Some(case.to_string()))
        }
    })
}

fn formula(family: FormulaFamily, n: usize, k: usize, d: u32, output: &OutputArgs, out: &mut dyn Write) -> CliResult<()> {
    let p = PositionParams::new(k, d)?;
    let (value, case) = evaluate(family, n, p).map_err(|e| match e {
        CliError::Core(gpkd_core::Error::Domain(msg)) => {
            CliError::Input(format!("{msg}; use `gpkd compute --graph cycle:{n}` to search instead"))
        }
        other => other,
    })?;
    if output.json {
        return write_json(out, &FormulaReport { family: family_name(family), n, k, d, value, case });
    }
    if output.csv {
        writeln!(out, "family,n,k,d,value")?;
        writeln!(out, "{},{n},{k},{d},{value}", family_name(family))?;
        return Ok(());
    }
    writeln!(out, "{value}")?;
    Ok(())
}

/// Closed-form evaluator matching a graph's family, if there is one.
fn family_formula(g: &Graph) -> Option<(FormulaFamily, usize)> {
    match g.family_tag()? {
        Family::Path { n } => Some((FormulaFamily::Path, n)),
        Family::Cycle { n } => Some((FormulaFamily::Cycle, n)),
        Family::Grid { rows, cols: 2 } => Some((FormulaFamily::Prism, rows)),
        _ => None,
    }
}

fn render_table(t: &LatticeTable) -> String {
    let width = t.values.iter().flatten().chain([&t.k_max]).map(|v| v.to_string().len()).max().unwrap_or(1) + 1;
    let mut s = format!("{:>4}", "d\\k");
    for k in 2..=t.k_max {
        s += &format!("{k:>width$}");
    }
    s.push('\n');
    for (i, row) in t.values.iter().enumerate() {
        s += &format!("{:>4}", i + 1);
        for v in row {
            s += &format!("{v:>width$}");
        }
        s.push('\n');
    }
    s
}

fn table(
    graph: &GraphArgs,
    kmax: usize,
    use_formula: bool,
    search: &SearchArgs,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> CliResult<()> {
    let (g, label) = load_graph(graph)?;
    let t = if use_formula {
        let (family, n) = family_formula(&g)
            .ok_or_else(|| CliError::Input(format!("no closed form for `{label}`; drop --formula to search")))?;
        let mut failure = None;
        let t = lattice_table_with(&g, kmax, |p| match evaluate(family, n, p) {
            Ok((v, _)) => Ok(v),
            Err(CliError::Core(e)) => Err(e),
            Err(other) => {
                let msg = other.to_string();
                failure = Some(other);
                Err(gpkd_core::Error::InvalidParams(msg))
            }
        });
        match (t, failure) {
            (_, Some(e)) => return Err(e),
            (t, None) => t?,
        }
    } else {
        let method = method_for(search.method, &g);
        let opts = search_options(search)?;
        lattice_table_with(&g, kmax, |p| Ok(solve(&g, p, method, &opts)?.value))?
    };
    if output.json {
        return write_json(out, &t);
    }
    if output.csv {
        out.write_all(t.to_csv().as_bytes())?;
        return Ok(());
    }
    out.write_all(render_table(&t).as_bytes())?;
    Ok(())
}

struct ConstructRequest {
    kind: ConstructionKind,
    n: Option<usize>,
    k: Option<usize>,
    d: Option<usize>,
    m: Option<usize>,
    r: Option<usize>,
    rows: Option<usize>,
    cols: Option<usize>,
    center: Option<String>,
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Input(format!("{kind} needs --{flag}")))
}

#[derive(Serialize)]
struct ConstructReport<'a> {
    kind: &'a str,
    graph: String,
    size: usize,
    vertices: &'a VertexSet,
}

fn construct(req: &ConstructRequest, output: &OutputArgs, out: &mut dyn Write) -> CliResult<()> {
    use ConstructionKind::*;
    let kind = match req.kind {
        Jset => "jset",
        PathBlocks => "path-blocks",
        ThinA => "thin-a",
        ThinB => "thin-b",
        Diamond => "diamond",
    };
    let (set, host) = match req.kind {
        Jset => {
            let n = need(req.n, "n", kind)?;
            let set = j_set(n, need(req.m, "m", kind)?, req.r.unwrap_or(0))?;
            (set, Family::Cycle { n })
        }
        PathBlocks | ThinA | ThinB => {
            let (n, k, d) = (need(req.n, "n", kind)?, need(req.k, "k", kind)?, need(req.d, "d", kind)?);
            match req.kind {
                PathBlocks => (path_block_set(k, d, n)?, Family::Path { n }),
                ThinA => (thin_grid_a(k, d, n)?, Family::Grid { rows: n, cols: 2 }),
                _ => (thin_grid_b(k, d, n)?, Family::Grid { rows: n, cols: 2 }),
            }
        }
        Diamond => {
            let r = need(req.r, "r", kind)?;
            let rows = need(req.rows, "rows", kind)?;
            let cols = need(req.cols, "cols", kind)?;
            let center = match &req.center {
                Some(text) => {
                    let bad = || CliError::Input(format!("bad center `{text}`, expected row.col"));
                    let (a, b) = text.split_once('.').ok_or_else(bad)?;
                    (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
                }
                None => diamond_center(r + 2),
            };
            (diamond_set(r, center, rows, cols)?, Family::Grid { rows, cols })
        }
    };
    if output.json {
        return write_json(out, &ConstructReport { kind, graph: host.to_string(), size: set.len(), vertices: &set });
    }
    if output.csv {
        let text = match Graph::family(host) {
            Ok(g) => vertex_list_csv(&g, &set),
            Err(_) => set.iter().fold(String::from("vertex\n"), |acc, v| acc + &format!("{v}\n")),
        };
        out.write_all(text.as_bytes())?;
        return Ok(());
    }
    writeln!(out, "{set}")?;
    Ok(())
}

struct Grid {
    n_max: usize,
    k_max: usize,
    d_max: u32,
}

#[derive(Serialize)]
struct Mismatch {
    graph: String,
    k: usize,
    d: u32,
    expected: usize,
    found: usize,
}

#[derive(Serialize)]
struct VerifyReport {
    checked: usize,
    mismatches: Vec<Mismatch>,
}

fn finish_verify(report: VerifyReport, output: &OutputArgs, out: &mut dyn Write) -> CliResult<()> {
    if output.json {
        write_json(out, &report)?;
    } else if output.csv {
        writeln!(out, "graph,k,d,expected,found")?;
        for m in &report.mismatches {
            writeln!(out, "{},{},{},{},{}", m.graph, m.k, m.d, m.expected, m.found)?;
        }
    } else {
        for m in &report.mismatches {
            writeln!(out, "mismatch: {} k={} d={}: expected {}, found {}", m.graph, m.k, m.d, m.expected, m.found)?;
        }
        writeln!(out, "checked {} points, {} mismatches", report.checked, report.mismatches.len())?;
    }
    match report.mismatches.len() {
        0 => Ok(()),
        bad => Err(CliError::Mismatch(bad)),
    }
}

fn verify_family(
    family: FormulaFamily,
    grid: &Grid,
    search: &SearchArgs,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> CliResult<()> {
    let opts = search_options(search)?;
    let mut report = VerifyReport { checked: 0, mismatches: Vec::new() };
    let first = if family == FormulaFamily::Cycle { 3 } else { 1 };
    for n in first..=grid.n_max {
        let desc = format!("{}:{n}", family_name(family));
        let g = Graph::from_descriptor(&desc)?;
        let method = method_for(search.method, &g);
        for k in 2..=grid.k_max {
            for d in 1..=grid.d_max {
                let p = PositionParams::new(k, d)?;
                let expected = match evaluate(family, n, p) {
                    Ok((v, _)) => v,
                    Err(CliError::Core(gpkd_core::Error::Domain(_))) => continue,
                    Err(e) => return Err(e),
                };
                let found = solve(&g, p, method, &opts)?.value;
                report.checked += 1;
                if found != expected {
                    report.mismatches.push(Mismatch { graph: desc.clone(), k, d, expected, found });
                }
            }
        }
    }
    finish_verify(report, output, out)
}

fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> CliResult<Graph> {
    let extra = rng.gen_range(0.0..0.5);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, rng.gen_range(0..i))).collect();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(extra) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Branch-and-bound against brute force on seeded random connected graphs.
fn verify_random(grid: &Grid, count: usize, seed: u64, search: &SearchArgs, output: &OutputArgs, out: &mut dyn Write) -> CliResult<()> {
    if grid.n_max == 0 || grid.n_max > 20 {
        return Err(CliError::Input("random verification needs 1 <= --n-max <= 20".into()));
    }
    if grid.k_max < 2 || grid.d_max < 1 {
        return Err(CliError::Input("need --k-max >= 2 and --d-max >= 1".into()));
    }
    let opts = search_options(search)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport { checked: 0, mismatches: Vec::new() };
    for i in 0..count {
        let n = rng.gen_range(1..=grid.n_max);
        let g = random_connected_graph(&mut rng, n)?;
        let p = PositionParams::new(rng.gen_range(2..=grid.k_max), rng.gen_range(1..=grid.d_max))?;
        let dm = DistMatrix::new(&g);
        let brute = solve_bruteforce(&g, p)?;
        let exact = gpkd_core::solve_exact(&g, p, &opts)?;
        report.checked += 1;
        let valid = is_kgdp(&g, &dm, &exact.witness, p)? && exact.witness.len() == exact.value;
        if exact.value != brute.value || !valid {
            let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            report.mismatches.push(Mismatch {
                graph: format!("random #{i} n={n} edges {}", edges.join(" ")),
                k: p.k(),
                d: p.d(),
                expected: brute.value,
                found: if valid { exact.value } else { usize::MAX },
            });
        }
    }
    finish_verify(report, output, out)
}
