use std::fmt::Write as _;

use cforce::exact::{self, SearchOptions, SolveResult};
use cforce::forcing::forcing_closure;
use cforce::generators::{self, FamilySpec};
use cforce::graph::{compute_r_sets, edge_list, Graph, VertexSet};
use cforce::structural::{self, classify_extremal, detect_single_clique, Extremal};
use cforce::verify::{self, Suite};

use crate::Method;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(cforce::Error),
    Io(std::io::Error),
    /// A suite failed; carries the report that should still be printed.
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) | CliError::Io(_) => 1,
            CliError::VerifyFailed(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::VerifyFailed(_) => write!(f, "verification failed"),
        }
    }
}

impl From<cforce::Error> for CliError {
    fn from(e: cforce::Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    Ok(edge_list::parse(text)?)
}

pub fn gen(family: &str, params: &[String], seed: u64) -> Result<String, CliError> {
    let graph = if family == "random_tree" {
        let [n] = params else {
            return Err(CliError::Usage("random_tree takes one parameter: n".into()));
        };
        let n = n
            .parse()
            .map_err(|e| CliError::Usage(format!("bad parameter {n:?}: {e}")))?;
        generators::random_tree(n, seed)?
    } else {
        let params: Vec<&str> = params.iter().map(String::as_str).collect();
        generators::make(&FamilySpec::parse(family, &params)?)?
    };
    Ok(edge_list::write(&graph))
}

fn options(all: bool, budget: Option<u64>) -> SearchOptions {
    SearchOptions {
        collect_all: all,
        budget,
    }
}

fn write_witnesses(out: &mut String, g: &Graph, sets: &[VertexSet], trace: bool) {
    for w in sets {
        writeln!(out, "witness = {w}").unwrap();
        if trace {
            out.push_str(
                &forcing_closure(g, w)
                    .expect("witness fits graph")
                    .to_lines(),
            );
        }
    }
}

/// Appends a comparison with the `n/4 + 2` bound when the input is exactly the
/// generator's flower snark.
fn snark_note(out: &mut String, g: &Graph, value: usize) {
    let k = g.order() / 4;
    if !g.order().is_multiple_of(4) {
        return;
    }
    if let Ok(snark) = generators::flower_snark(k) {
        if &snark == g {
            let bound = k + 2;
            let verdict = if value == bound { "holds" } else { "fails" };
            writeln!(
                out,
                "note = flower snark bound n/4+2 = {bound}, equality {verdict}"
            )
            .unwrap();
        }
    }
}

pub fn fc(
    g: &Graph,
    method: Method,
    witness: bool,
    all: bool,
    trace: bool,
    budget: Option<u64>,
) -> Result<String, CliError> {
    if all && method == Method::Structural {
        return Err(CliError::Usage("--all needs an exhaustive method".into()));
    }
    if !g.is_connected() {
        return Err(cforce::Error::Disconnected.into());
    }
    let show = witness || trace;
    let structural_solution = match method {
        Method::Brute => None,
        Method::Auto if all => None,
        Method::Auto | Method::Structural => {
            if classify_extremal(g) == Extremal::FcIsOne || g.is_tree() {
                Some(structural::tree_connected_forcing(g)?)
            } else if detect_single_clique(g)?.is_single_clique_graph {
                Some(structural::single_clique_connected_forcing(g)?)
            } else if method == Method::Structural {
                return Err(cforce::Error::Precondition(
                    "no closed-form solver applies: the graph is neither a tree nor a single-clique graph"
                        .into(),
                )
                .into());
            } else {
                None
            }
        }
    };
    let mut out = String::new();
    match structural_solution {
        Some(sol) => {
            writeln!(out, "Fc = {}", sol.value).unwrap();
            if show {
                write_witnesses(&mut out, g, &[sol.witness], trace);
            }
        }
        None => {
            let SolveResult {
                value, witnesses, ..
            } = exact::connected_forcing_number_with(g, &options(all, budget))?;
            writeln!(out, "Fc = {value}").unwrap();
            snark_note(&mut out, g, value);
            if all {
                writeln!(out, "count = {}", witnesses.len()).unwrap();
            }
            if show || all {
                write_witnesses(&mut out, g, &witnesses, trace);
            }
        }
    }
    Ok(out)
}

pub fn f(
    g: &Graph,
    witness: bool,
    all: bool,
    trace: bool,
    budget: Option<u64>,
) -> Result<String, CliError> {
    let SolveResult {
        value, witnesses, ..
    } = exact::forcing_number_with(g, &options(all, budget))?;
    let mut out = format!("F = {value}\n");
    if all {
        writeln!(out, "count = {}", witnesses.len()).unwrap();
    }
    if witness || trace || all {
        write_witnesses(&mut out, g, &witnesses, trace);
    }
    Ok(out)
}

pub fn sets(g: &Graph, connected: bool) -> Result<String, CliError> {
    let sets = if connected {
        exact::minimum_connected_forcing_sets(g)?
    } else {
        exact::minimum_forcing_sets(g)?
    };
    Ok(sets.iter().map(|s| format!("{s}\n")).collect())
}

pub fn spread(g: &Graph, v: usize, connected: bool) -> Result<String, CliError> {
    let value = if connected {
        exact::connected_forcing_spread(g, v)?
    } else {
        exact::forcing_spread(g, v)?
    };
    Ok(format!("spread = {value}\n"))
}

pub fn info(g: &Graph) -> Result<String, CliError> {
    let report = compute_r_sets(g)?;
    let mut out = String::new();
    writeln!(out, "n = {}", g.order()).unwrap();
    writeln!(out, "m = {}", g.size()).unwrap();
    writeln!(out, "R1 = {}", report.r1).unwrap();
    writeln!(out, "R2 = {}", report.r2).unwrap();
    writeln!(out, "R3 = {}", report.r3_reduced).unwrap();
    writeln!(out, "leaves = {}", report.leaves).unwrap();
    writeln!(out, "L = {}", report.leaf_number).unwrap();
    writeln!(out, "curly_L = {}", report.curly_l).unwrap();
    writeln!(out, "articulation_points = {}", report.articulation_points).unwrap();
    let blocks: Vec<String> = report.blocks.iter().map(ToString::to_string).collect();
    writeln!(out, "blocks = {}", blocks.join(" ")).unwrap();
    match &report.reduced {
        None => writeln!(out, "reduced = none").unwrap(),
        Some(red) => {
            let kept = VertexSet::from_ids(g.order(), red.original.iter().copied());
            writeln!(out, "reduced_vertices = {kept}").unwrap();
            let edges: Vec<String> = red
                .graph
                .edges()
                .map(|(u, v)| format!("{}-{}", red.original[u], red.original[v]))
                .collect();
            writeln!(out, "reduced_edges = {}", edges.join(" ")).unwrap();
        }
    }
    Ok(out)
}

pub fn verify(suites: &[Suite]) -> Result<String, CliError> {
    let mut out = String::new();
    let mut ok = true;
    for &suite in suites {
        let report = verify::run(suite)?;
        for check in &report.checks {
            let tag = if check.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "[{tag}] {suite}: {} ({})",
                check.property, check.detail
            )
            .unwrap();
        }
        for note in &report.notes {
            writeln!(out, "note {suite}: {note}").unwrap();
        }
        ok &= report.passed();
    }
    writeln!(out, "result = {}", if ok { "pass" } else { "fail" }).unwrap();
    if ok {
        Ok(out)
    } else {
        Err(CliError::VerifyFailed(out))
    }
}
