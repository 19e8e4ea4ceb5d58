//! Command-line front end for the polycover library: covering-polyhedron
//! vertices, Newton and irreducible polyhedra, Rees-cone facets, Hilbert
//! bases, filtration powers, normality and max-flow min-cut tests, graph
//! bounds, Waldschmidt constants, and ic-resurgence — with stable JSON
//! output, replayable bundled examples, and independent certificate
//! verification.
//!
//! Exit codes: 0 success, 1 malformed input, 2 domain errors or failed
//! checks, 3 size-guard refusals. Timing goes to stderr so stdout stays
//! byte-identical across runs.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use polycover::graphs;
use polycover::ideals::{Clutter, Graph, Monomial, MonomialIdeal};
use polycover::linalg::QMatrix;
use polycover::lp::{self, LpStatus};
use polycover::polyhedra::{
    covering_polyhedron, irreducible_polyhedron, newton_polyhedron, rees_cone, rees_cone_facets,
    simis_cone, CoveringPolyhedron,
};
use polycover::rational::{primitive_integer, Int, Rat};
use polycover::semigroup::{
    hilbert_basis, integral_closure_power, is_mfmc, is_normal, np_equals_ip,
    rees_filtration_generators, symbolic_power, Filtration,
};
use polycover::Error;

#[derive(Parser)]
#[command(
    name = "polycover",
    about = "Exact polyhedral invariants of monomial ideals and filtrations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertices of a covering polyhedron, with binding-constraint certificates.
    Vertices {
        /// Monomial ideal JSON {"vars": s, "gens": [[e1,...,es], ...]}.
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// Covering matrix JSON {"rows": [["p/q", ...], ...]} (s rows, one per variable).
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Facet rows of the Newton polyhedron of an ideal.
    Newton {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Facet rows of the intersection of the Newton polyhedra of the
    /// irreducible components.
    IrreduciblePolyhedron {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Support hyperplanes of the Rees cone of an ideal.
    ReesFacets {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Hilbert basis of the cone over a covering polyhedron (--matrix) or of
    /// the Rees cone of an ideal (--ideal).
    HilbertBasis {
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Rees-algebra generators of the filtration of a covering polyhedron,
    /// beyond the base ring, with their levels.
    ReesGenerators {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Plain n-th power of an ideal (--ideal) or the n-th piece of the
    /// filtration of a covering polyhedron (--matrix).
    Power {
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        n: u64,
    },
    /// n-th symbolic power of a squarefree ideal. Non-squarefree input needs
    /// --acknowledge-normal-components and assumes every isolated primary
    /// component is normal.
    SymbolicPower {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        acknowledge_normal_components: bool,
    },
    /// Integral closure of the n-th power of an ideal.
    ClosurePower {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        n: u64,
    },
    /// Normality of an ideal, with a witness monomial when it fails.
    Normal {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Max-flow min-cut property of the clutter of a graph or squarefree ideal.
    Mfmc {
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// Graph JSON {"vertices": s, "edges": [[i,j], ...]} (1-based).
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Whether the Newton polyhedron equals the irreducible intersection;
    /// --max-n additionally cross-checks the closure-intersection identity.
    NpEqIp {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Waldschmidt constant of the filtration of a covering matrix, with the
    /// optimal vertex and its binding rows.
    Waldschmidt {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// ic-resurgence. Routes: --ideal (symbolic filtration of a squarefree
    /// ideal), --ideal with --matrix (filtration of Q(C) against the Newton
    /// polyhedron of the ideal), or --graph with --edge-ideal/--cover-ideal.
    ResurgenceIc {
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Use the symbolic filtration (default for --ideal).
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        edge_ideal: bool,
        #[arg(long)]
        cover_ideal: bool,
        /// Accept the filtration as strictly decreasing without evidence.
        #[arg(long)]
        assume_strict: bool,
    },
    /// Clique number, covering number, minimal covers, perfectness,
    /// bipartiteness.
    GraphInvariants {
        #[arg(long)]
        graph: PathBuf,
    },
    /// The bound 2(w-1)/w on the ic-resurgence of the cover ideal, exact for
    /// perfect graphs.
    CoverBound {
        #[arg(long)]
        graph: PathBuf,
    },
    /// The induced-subgraph lower bound max_H 2a0(H)/|V(H)| on the
    /// ic-resurgence of the edge ideal.
    EdgeBound {
        #[arg(long)]
        graph: PathBuf,
        /// Raise or lower the vertex-count guard for the subgraph sweep.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Re-run a bundled worked example (a1-a4); --check diffs the output
    /// against the committed golden file.
    Replay {
        /// Which example: a1 (vertices), a2 (Hilbert basis), a3 (Rees facets
        /// and resurgence), a4 (resurgence pipeline).
        #[arg(long)]
        which: String,
        #[arg(long)]
        check: bool,
        /// Directory holding the bundled fixture and golden files.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Re-validate the certificate in a saved report without re-running the
    /// solver: vertices, waldschmidt, resurgence-ic, or normal payloads.
    Verify {
        /// Which command produced the report.
        #[arg(long)]
        command: String,
        /// The saved JSON payload.
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        edge_ideal: bool,
        #[arg(long)]
        cover_ideal: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeGuard { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    let label = std::env::args().nth(1).unwrap_or_else(|| "run".into());
    let started = Instant::now();
    match run(cli.command) {
        Ok(payload) => {
            println!("{payload}");
            eprintln!("# {label}: {:.3}s", started.elapsed().as_secs_f64());
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

// ---------- input loading ----------

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    serde_json::from_str(&read_file(path)?)
        .map_err(|e| Failure::input(format!("bad ideal in {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    serde_json::from_str(&read_file(path)?)
        .map_err(|e| Failure::input(format!("bad graph in {}: {e}", path.display())))
}

fn parse_rat(value: &Value) -> Option<Rat> {
    match value {
        Value::Number(n) => n.as_i64().map(|v| Rat::from_int(Int::from(v))),
        Value::String(s) => {
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (p, q),
                None => (s.as_str(), "1"),
            };
            let numer = Int::from_str(p.trim()).ok()?;
            let denom = Int::from_str(q.trim()).ok()?;
            if denom == Int::from(0) {
                return None;
            }
            Some(Rat::new(numer, denom))
        }
        _ => None,
    }
}

fn load_matrix(path: &Path) -> Result<QMatrix, Failure> {
    let value: Value = serde_json::from_str(&read_file(path)?)
        .map_err(|e| Failure::input(format!("bad matrix in {}: {e}", path.display())))?;
    let rows = value
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::input(format!("{}: expected {{\"rows\": [...]}}", path.display())))?;
    let parsed: Option<Vec<Vec<Rat>>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .map(|cells| cells.iter().map(parse_rat).collect::<Option<Vec<Rat>>>())
                .flatten()
        })
        .collect();
    let parsed = parsed
        .ok_or_else(|| Failure::input(format!("{}: matrix entries must be numbers or \"p/q\"", path.display())))?;
    Ok(QMatrix::from_rows(parsed)?)
}

fn load_polyhedron(path: &Path) -> Result<CoveringPolyhedron, Failure> {
    Ok(CoveringPolyhedron::new(load_matrix(path)?)?)
}

fn polyhedron_from(
    ideal: &Option<PathBuf>,
    matrix: &Option<PathBuf>,
) -> Result<CoveringPolyhedron, Failure> {
    match (ideal, matrix) {
        (Some(path), None) => Ok(covering_polyhedron(&load_ideal(path)?)?),
        (None, Some(path)) => load_polyhedron(path),
        _ => Err(Failure::input("pass exactly one of --ideal and --matrix")),
    }
}

// ---------- output shaping ----------

fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_row(coords: &[Rat]) -> Value {
    Value::Array(coords.iter().map(|c| Value::String(rat_str(c))).collect())
}

fn int_value(i: &Int) -> Value {
    match i64::try_from(i) {
        Ok(v) => json!(v),
        Err(_) => Value::String(i.to_string()),
    }
}

fn int_rows(rows: &[Vec<Int>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(int_value).collect()))
            .collect(),
    )
}

fn ideal_value(ideal: &MonomialIdeal) -> Value {
    json!({
        "gens": ideal.gens().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
        "vars": ideal.vars(),
    })
}

fn one_based(vertices: &[usize]) -> Vec<usize> {
    vertices.iter().map(|v| v + 1).collect()
}

fn vertices_payload(q: &CoveringPolyhedron) -> Result<Value, Failure> {
    let vertices = q.vertices()?;
    Ok(json!({
        "binding": vertices.iter().map(|v| v.binding.clone()).collect::<Vec<_>>(),
        "vertices": vertices.iter().map(|v| rat_row(&v.coords)).collect::<Vec<_>>(),
    }))
}

/// Clears a rational constraint column into the primitive homogeneous facet
/// row (a, -d) meaning <a, x> >= d.
fn facet_row_of_column(col: &[Rat]) -> Vec<Int> {
    let mut lifted = col.to_vec();
    lifted.push(-Rat::one());
    primitive_integer(&lifted)
}

fn polyhedron_facets(q: &CoveringPolyhedron) -> Vec<Vec<Int>> {
    let mut rows: Vec<Vec<Int>> = (0..q.constraint_count())
        .map(|j| facet_row_of_column(&q.column(j)))
        .collect();
    rows.sort();
    rows.dedup();
    rows
}

fn resurgence_payload(report: &lp::ResurgenceReport) -> Value {
    json!({
        "note": report.note,
        "strictness": report.strictness.as_str(),
        "value": rat_str(&report.value),
        "vertex": rat_row(&report.vertex),
        "witness_facet": Value::Array(report.witness_facet.iter().map(int_value).collect()),
    })
}

// ---------- dispatch ----------

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Vertices { ideal, matrix } => {
            vertices_payload(&polyhedron_from(&ideal, &matrix)?)
        }
        Command::Newton { ideal } => {
            let np = newton_polyhedron(&load_ideal(&ideal)?)?;
            let mut rows = np.homogeneous_rows();
            rows.sort();
            Ok(json!({ "facets": int_rows(&rows) }))
        }
        Command::IrreduciblePolyhedron { ideal } => {
            let ip = irreducible_polyhedron(&load_ideal(&ideal)?)?;
            Ok(json!({ "facets": int_rows(&polyhedron_facets(&ip)) }))
        }
        Command::ReesFacets { ideal } => {
            let rows = rees_cone_facets(&load_ideal(&ideal)?)?;
            Ok(json!({ "facets": int_rows(&rows) }))
        }
        Command::HilbertBasis { ideal, matrix } => {
            let cone = match (&ideal, &matrix) {
                (Some(path), None) => rees_cone(&load_ideal(path)?)?,
                (None, Some(path)) => simis_cone(&load_polyhedron(path)?)?,
                _ => return Err(Failure::input("pass exactly one of --ideal and --matrix")),
            };
            let basis = hilbert_basis(&cone)?;
            Ok(json!({ "elements": int_rows(&basis.elements) }))
        }
        Command::ReesGenerators { matrix } => {
            let f = Filtration::new(load_polyhedron(&matrix)?);
            let generators = rees_filtration_generators(&f)?;
            let rows: Vec<Value> = generators
                .iter()
                .map(|(m, d)| json!({ "degree": d, "exponents": m.exponents().to_vec() }))
                .collect();
            Ok(json!({ "generators": rows }))
        }
        Command::Power { ideal, matrix, n } => {
            if n == 0 {
                return Err(Failure::check("powers are indexed from 1"));
            }
            let result = match (&ideal, &matrix) {
                (Some(path), None) => load_ideal(path)?.power(n),
                (None, Some(path)) => Filtration::new(load_polyhedron(path)?).ideal(n)?,
                _ => return Err(Failure::input("pass exactly one of --ideal and --matrix")),
            };
            Ok(ideal_value(&result))
        }
        Command::SymbolicPower { ideal, n, acknowledge_normal_components } => {
            let i = load_ideal(&ideal)?;
            let result = if i.is_squarefree() {
                symbolic_power(&i, n)?
            } else if acknowledge_normal_components {
                symbolic_power_via_components(&i, n)?
            } else {
                return Err(Failure::check(
                    "ideal is not squarefree; pass --acknowledge-normal-components to compute \
                     the symbolic power assuming every isolated primary component is normal",
                ));
            };
            Ok(ideal_value(&result))
        }
        Command::ClosurePower { ideal, n } => {
            Ok(ideal_value(&integral_closure_power(&load_ideal(&ideal)?, n)?))
        }
        Command::Normal { ideal } => {
            let report = is_normal(&load_ideal(&ideal)?)?;
            let witness = match &report.witness {
                None => Value::Null,
                Some((monomial, degree)) => json!({
                    "degree": degree,
                    "exponents": monomial.exponents().to_vec(),
                }),
            };
            Ok(json!({ "normal": report.normal, "witness": witness }))
        }
        Command::Mfmc { ideal, graph } => {
            let clutter = clutter_from(&ideal, &graph)?;
            Ok(json!({ "mfmc": is_mfmc(&clutter)? }))
        }
        Command::NpEqIp { ideal, max_n } => {
            let i = load_ideal(&ideal)?;
            let equal = np_equals_ip(&i)?;
            if let Some(cap) = max_n {
                cross_check_closure_intersection(&i, equal, cap)?;
                Ok(json!({ "cross_checked_to": cap, "equal": equal }))
            } else {
                Ok(json!({ "equal": equal }))
            }
        }
        Command::Waldschmidt { matrix } => {
            let q = load_polyhedron(&matrix)?;
            let solution = lp::solve(&lp::covering_program(&q))?;
            if solution.status != LpStatus::Optimal {
                return Err(Failure::check("covering program has no optimum"));
            }
            Ok(json!({
                "binding": solution.binding,
                "value": rat_str(&solution.value),
                "vertex": rat_row(&solution.point),
            }))
        }
        Command::ResurgenceIc {
            ideal,
            matrix,
            graph,
            symbolic,
            edge_ideal,
            cover_ideal,
            assume_strict,
        } => {
            let report = match (&ideal, &graph) {
                (Some(path), None) => {
                    let i = load_ideal(path)?;
                    match &matrix {
                        Some(c) => {
                            if symbolic {
                                return Err(Failure::input(
                                    "--symbolic and --matrix are mutually exclusive",
                                ));
                            }
                            let q = load_polyhedron(c)?;
                            lp::ic_resurgence(&q, &newton_polyhedron(&i)?, assume_strict)?
                        }
                        None => lp::ic_resurgence_of_squarefree(&i)?,
                    }
                }
                (None, Some(path)) => {
                    if matrix.is_some() {
                        return Err(Failure::input("--matrix cannot be combined with --graph"));
                    }
                    let g = load_graph(path)?;
                    let i = match (edge_ideal, cover_ideal) {
                        (true, false) => g.edge_ideal()?,
                        (false, true) => g.cover_ideal()?,
                        _ => {
                            return Err(Failure::input(
                                "with --graph pass exactly one of --edge-ideal and --cover-ideal",
                            ))
                        }
                    };
                    lp::ic_resurgence_of_squarefree(&i)?
                }
                _ => return Err(Failure::input("pass exactly one of --ideal and --graph")),
            };
            Ok(resurgence_payload(&report))
        }
        Command::GraphInvariants { graph } => {
            let inv = graphs::invariants(&load_graph(&graph)?)?;
            Ok(json!({
                "alpha0": inv.alpha0,
                "bipartite": inv.bipartite,
                "clique": one_based(&inv.clique),
                "cover": one_based(&inv.cover),
                "minimal_covers": inv.minimal_covers.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
                "omega": inv.omega,
                "perfect": inv.perfect,
            }))
        }
        Command::CoverBound { graph } => {
            let bound = graphs::cover_resurgence_bound(&load_graph(&graph)?);
            Ok(json!({
                "bound": rat_str(&bound.bound),
                "clique": one_based(&bound.clique),
                "exact": bound.exact,
                "omega": bound.omega,
            }))
        }
        Command::EdgeBound { graph, cap } => {
            let bound = graphs::edge_resurgence_lower_bound(&load_graph(&graph)?, cap)?;
            Ok(json!({
                "alpha0": bound.alpha0,
                "bound": rat_str(&bound.bound),
                "subgraph": one_based(&bound.subgraph),
            }))
        }
        Command::Replay { which, check, fixtures } => replay(&which, check, fixtures),
        Command::Verify {
            command,
            report,
            ideal,
            matrix,
            graph,
            edge_ideal,
            cover_ideal,
        } => verify(&command, &report, &ideal, &matrix, &graph, edge_ideal, cover_ideal),
    }
}

fn clutter_from(
    ideal: &Option<PathBuf>,
    graph: &Option<PathBuf>,
) -> Result<Clutter, Failure> {
    match (ideal, graph) {
        (Some(path), None) => Ok(load_ideal(path)?.clutter()?),
        (None, Some(path)) => Ok(load_graph(path)?.clutter()?),
        _ => Err(Failure::input("pass exactly one of --ideal and --graph")),
    }
}

/// Symbolic power of a non-squarefree ideal under the assumption that every
/// isolated primary component is normal: intersect the closures of the n-th
/// powers of the isolated primary components.
fn symbolic_power_via_components(ideal: &MonomialIdeal, n: u64) -> Result<MonomialIdeal, Failure> {
    if n == 0 {
        return Err(Failure::check("powers are indexed from 1"));
    }
    let components = ideal.irreducible_decomposition()?;
    let mut by_support: Vec<(Vec<usize>, MonomialIdeal)> = Vec::new();
    for component in &components {
        let support = component.support();
        let piece = component.ideal(ideal.vars());
        match by_support.iter_mut().find(|(s, _)| *s == support) {
            Some((_, acc)) => *acc = acc.intersect(&piece),
            None => by_support.push((support, piece)),
        }
    }
    let isolated: Vec<&(Vec<usize>, MonomialIdeal)> = by_support
        .iter()
        .filter(|(support, _)| {
            !by_support.iter().any(|(other, _)| {
                other != support && other.iter().all(|v| support.contains(v))
            })
        })
        .collect();
    let mut result: Option<MonomialIdeal> = None;
    for (_, primary) in isolated {
        let closed = integral_closure_power(primary, n)?;
        result = Some(match result {
            None => closed,
            Some(acc) => acc.intersect(&closed),
        });
    }
    result.ok_or_else(|| Failure::check("ideal has no isolated components"))
}

/// When the Newton polyhedron equals the irreducible intersection, closures
/// of powers must factor through the component closures; check the first
/// `cap` powers and treat any disagreement with a positive verdict as an
/// internal inconsistency.
fn cross_check_closure_intersection(
    ideal: &MonomialIdeal,
    equal: bool,
    cap: u64,
) -> Result<(), Failure> {
    let components: Vec<MonomialIdeal> = ideal
        .irreducible_decomposition()?
        .into_iter()
        .map(|c| c.ideal(ideal.vars()))
        .collect();
    for n in 1..=cap {
        let direct = integral_closure_power(ideal, n)?;
        let intersected = components
            .iter()
            .map(|c| integral_closure_power(c, n))
            .reduce(|a, b| Ok(a?.intersect(&b?)))
            .transpose()?
            .ok_or_else(|| Failure::check("ideal has no irreducible components"))?;
        let same = direct == intersected;
        if equal && !same {
            return Err(Failure::check(format!(
                "internal consistency failure: polyhedra agree but closure of power {n} \
                 differs from the component intersection"
            )));
        }
        if !equal && !same {
            return Ok(()); // Divergence confirms the negative verdict early.
        }
    }
    Ok(())
}

// ---------- replay ----------

fn default_fixtures() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

fn replay(which: &str, check: bool, fixtures: Option<PathBuf>) -> Result<Value, Failure> {
    let dir = fixtures.unwrap_or_else(default_fixtures);
    let name = which.to_ascii_lowercase();
    let payload = match name.as_str() {
        "a1" => {
            let ideal = load_ideal(&dir.join("ex71.json"))?;
            vertices_payload(&covering_polyhedron(&ideal)?)?
        }
        "a2" => {
            let q = load_polyhedron(&dir.join("c73.json"))?;
            let basis = hilbert_basis(&simis_cone(&q)?)?;
            json!({ "elements": int_rows(&basis.elements) })
        }
        "a3" => {
            let graph = load_graph(&dir.join("bowtie.json"))?;
            let edge_ideal = graph.edge_ideal()?;
            let facets = rees_cone_facets(&edge_ideal)?;
            let report = lp::ic_resurgence_of_squarefree(&edge_ideal)?;
            json!({
                "facets": int_rows(&facets),
                "value": rat_str(&report.value),
                "vertex": rat_row(&report.vertex),
                "witness_facet": Value::Array(report.witness_facet.iter().map(int_value).collect()),
            })
        }
        "a4" => {
            let graph = load_graph(&dir.join("bowtie.json"))?;
            let report = lp::ic_resurgence_of_squarefree(&graph.edge_ideal()?)?;
            resurgence_payload(&report)
        }
        _ => return Err(Failure::input("replay takes --which a1|a2|a3|a4")),
    };
    if check {
        let golden_path = dir.join("golden").join(format!("{name}.json"));
        let golden = read_file(&golden_path)?;
        let rendered = payload.to_string();
        if golden.trim() != rendered {
            return Err(Failure::check(format!(
                "replay {name} diverges from {}:\n  expected: {}\n  got:      {rendered}",
                golden_path.display(),
                golden.trim(),
            )));
        }
        eprintln!("# replay {name}: matches golden file");
    }
    Ok(payload)
}

// ---------- verify ----------

fn field<'v>(report: &'v Value, key: &str) -> Result<&'v Value, Failure> {
    report
        .get(key)
        .ok_or_else(|| Failure::input(format!("report is missing \"{key}\"")))
}

fn rat_field(report: &Value, key: &str) -> Result<Rat, Failure> {
    parse_rat(field(report, key)?)
        .ok_or_else(|| Failure::input(format!("report field \"{key}\" is not a rational")))
}

fn rat_array(value: &Value) -> Result<Vec<Rat>, Failure> {
    value
        .as_array()
        .and_then(|cells| cells.iter().map(parse_rat).collect::<Option<Vec<Rat>>>())
        .ok_or_else(|| Failure::input("expected an array of rationals"))
}

fn int_array(value: &Value) -> Result<Vec<Int>, Failure> {
    let rats = rat_array(value)?;
    rats.iter()
        .map(|r| {
            if r.is_integer() {
                Ok(r.numer().clone())
            } else {
                Err(Failure::input("expected integers"))
            }
        })
        .collect()
}

fn rank_of_rows(rows: Vec<Vec<Rat>>) -> Result<usize, Failure> {
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(QMatrix::from_rows(rows)?.rank())
}

fn verify(
    command: &str,
    report_path: &Path,
    ideal: &Option<PathBuf>,
    matrix: &Option<PathBuf>,
    graph: &Option<PathBuf>,
    edge_ideal: bool,
    cover_ideal: bool,
) -> Result<Value, Failure> {
    let report: Value = serde_json::from_str(&read_file(report_path)?)
        .map_err(|e| Failure::input(format!("bad report in {}: {e}", report_path.display())))?;
    let checked = match command {
        "vertices" => {
            let q = polyhedron_from(ideal, matrix)?;
            verify_vertices(&q, &report)?
        }
        "waldschmidt" => {
            let q = match matrix {
                Some(path) => load_polyhedron(path)?,
                None => return Err(Failure::input("verify waldschmidt needs --matrix")),
            };
            verify_waldschmidt(&q, &report)?
        }
        "resurgence-ic" => {
            let (q, np) = match (ideal, graph) {
                (Some(path), None) => {
                    let i = load_ideal(path)?;
                    match matrix {
                        Some(c) => (load_polyhedron(c)?, newton_polyhedron(&i)?),
                        None => symbolic_resurgence_inputs(&i)?,
                    }
                }
                (None, Some(path)) => {
                    let g = load_graph(path)?;
                    let i = match (edge_ideal, cover_ideal) {
                        (true, false) => g.edge_ideal()?,
                        (false, true) => g.cover_ideal()?,
                        _ => {
                            return Err(Failure::input(
                                "with --graph pass exactly one of --edge-ideal and --cover-ideal",
                            ))
                        }
                    };
                    symbolic_resurgence_inputs(&i)?
                }
                _ => return Err(Failure::input("pass exactly one of --ideal and --graph")),
            };
            verify_resurgence(&q, &np, &report)?
        }
        "normal" => {
            let i = match ideal {
                Some(path) => load_ideal(path)?,
                None => return Err(Failure::input("verify normal needs --ideal")),
            };
            verify_normal(&i, &report)?
        }
        other => {
            return Err(Failure::input(format!(
                "verify supports vertices, waldschmidt, resurgence-ic, and normal; got {other}"
            )))
        }
    };
    Ok(json!({ "checked": checked, "command": command, "verified": true }))
}

fn verify_vertices(q: &CoveringPolyhedron, report: &Value) -> Result<String, Failure> {
    let vertices = field(report, "vertices")?
        .as_array()
        .ok_or_else(|| Failure::input("\"vertices\" must be an array"))?;
    let bindings = field(report, "binding")?
        .as_array()
        .ok_or_else(|| Failure::input("\"binding\" must be an array"))?;
    if vertices.len() != bindings.len() {
        return Err(Failure::check("vertex and binding lists differ in length"));
    }
    let s = q.ambient();
    let m = q.constraint_count();
    for (vertex_value, binding_value) in vertices.iter().zip(bindings) {
        let point = rat_array(vertex_value)?;
        if point.len() != s {
            return Err(Failure::check("vertex has the wrong dimension"));
        }
        if !q.contains_point(&point)? {
            return Err(Failure::check(format!(
                "claimed vertex {} is not in the polyhedron",
                vertex_value
            )));
        }
        let indices: Vec<usize> = binding_value
            .as_array()
            .and_then(|cells| cells.iter().map(Value::as_u64).collect::<Option<Vec<u64>>>())
            .ok_or_else(|| Failure::input("binding rows must be integers"))?
            .into_iter()
            .map(|v| v as usize)
            .collect();
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(indices.len());
        for index in &indices {
            if *index < m {
                let col = q.column(*index);
                let value = col
                    .iter()
                    .zip(&point)
                    .fold(Rat::zero(), |acc, (c, x)| acc + c.clone() * x.clone());
                if value != Rat::one() {
                    return Err(Failure::check(format!(
                        "constraint {index} is not binding at {vertex_value}"
                    )));
                }
                rows.push(col);
            } else if *index < m + s {
                if !point[index - m].is_zero() {
                    return Err(Failure::check(format!(
                        "coordinate {} is not zero at {vertex_value}",
                        index - m
                    )));
                }
                let mut row = vec![Rat::zero(); s];
                row[index - m] = Rat::one();
                rows.push(row);
            } else {
                return Err(Failure::check(format!("binding index {index} out of range")));
            }
        }
        if rank_of_rows(rows)? != s {
            return Err(Failure::check(format!(
                "binding rows at {vertex_value} do not pin a unique point"
            )));
        }
    }
    Ok(format!("{} vertices with binding certificates", vertices.len()))
}

fn verify_waldschmidt(q: &CoveringPolyhedron, report: &Value) -> Result<String, Failure> {
    let value = rat_field(report, "value")?;
    let point = rat_array(field(report, "vertex")?)?;
    let program = lp::covering_program(q);
    if point.len() != q.ambient() {
        return Err(Failure::check("optimal point has the wrong dimension"));
    }
    for (row, constraint) in program.constraints.iter().enumerate() {
        if !constraint.satisfied_at(&point) {
            return Err(Failure::check(format!("constraint {row} fails at the claimed point")));
        }
    }
    let total = point.iter().fold(Rat::zero(), |acc, x| acc + x.clone());
    if total != value {
        return Err(Failure::check("claimed value is not the coordinate sum of the point"));
    }
    let binding_rows: Vec<Vec<Rat>> = program
        .constraints
        .iter()
        .filter(|c| c.binding_at(&point))
        .map(|c| c.coeffs.clone())
        .collect();
    if rank_of_rows(binding_rows)? != q.ambient() {
        return Err(Failure::check("claimed point is feasible but not a vertex"));
    }
    Ok("optimum certificate".into())
}

/// The covering polyhedron and Newton data the symbolic-filtration resurgence
/// pipeline runs on: Q of the Alexander dual, and the Rees-cone facet rows
/// with negative last coordinate read back as covering columns.
fn symbolic_resurgence_inputs(
    ideal: &MonomialIdeal,
) -> Result<(CoveringPolyhedron, polycover::NewtonHRep), Failure> {
    if !ideal.is_squarefree() {
        return Err(Failure::check("resurgence verification needs a squarefree ideal"));
    }
    let s = ideal.vars();
    let mut columns = Vec::new();
    let mut denominators = Vec::new();
    for row in rees_cone_facets(ideal)? {
        if row[s] < Int::from(0) {
            let d = Rat::from_int(-row[s].clone());
            columns.push(
                row[..s]
                    .iter()
                    .map(|v| Rat::from_int(v.clone()) / d.clone())
                    .collect::<Vec<Rat>>(),
            );
            denominators.push(-row[s].clone());
        }
    }
    let q = covering_polyhedron(&ideal.alexander_dual()?)?;
    Ok((q, polycover::NewtonHRep { columns, denominators }))
}

fn verify_resurgence(
    q: &CoveringPolyhedron,
    np: &polycover::NewtonHRep,
    report: &Value,
) -> Result<String, Failure> {
    let value = rat_field(report, "value")?;
    let vertex = rat_array(field(report, "vertex")?)?;
    let witness = int_array(field(report, "witness_facet")?)?;
    let s = q.ambient();
    if vertex.is_empty() && value == Rat::one() {
        return Ok("height-one short circuit (value 1, no program)".into());
    }
    if vertex.len() != s + 3 {
        return Err(Failure::check("optimal vertex has the wrong dimension"));
    }
    let j = (0..np.len())
        .find(|&j| {
            let mut lifted = np.columns[j].clone();
            lifted.push(-Rat::one());
            primitive_integer(&lifted) == witness
        })
        .ok_or_else(|| Failure::check("witness facet is not a Newton facet of the ideal"))?;
    let program = lp::resurgence_lp(q, np, j);
    for (row, constraint) in program.constraints.iter().enumerate() {
        if !constraint.satisfied_at(&vertex) {
            return Err(Failure::check(format!("constraint {row} fails at the claimed vertex")));
        }
    }
    if vertex[s] != value {
        return Err(Failure::check("claimed value does not match the objective coordinate"));
    }
    let binding_rows: Vec<Vec<Rat>> = program
        .constraints
        .iter()
        .filter(|c| c.binding_at(&vertex))
        .map(|c| c.coeffs.clone())
        .collect();
    if rank_of_rows(binding_rows)? != s + 3 {
        return Err(Failure::check("claimed point is feasible but not a vertex"));
    }
    Ok(format!("feasible vertex certificate for facet program {j}"))
}

fn verify_normal(ideal: &MonomialIdeal, report: &Value) -> Result<String, Failure> {
    let normal = field(report, "normal")?
        .as_bool()
        .ok_or_else(|| Failure::input("\"normal\" must be a boolean"))?;
    if normal {
        return Ok("positive verdict carries no witness to check".into());
    }
    let witness = field(report, "witness")?;
    let degree = field(witness, "degree")?
        .as_u64()
        .ok_or_else(|| Failure::input("witness degree must be an integer"))?;
    let exponents: Vec<u64> = field(witness, "exponents")?
        .as_array()
        .and_then(|cells| cells.iter().map(Value::as_u64).collect::<Option<Vec<u64>>>())
        .ok_or_else(|| Failure::input("witness exponents must be integers"))?;
    let monomial = Monomial::new(exponents.clone());
    let np = newton_polyhedron(ideal)?.polyhedron()?;
    let scaled: Vec<Rat> = exponents
        .iter()
        .map(|&e| Rat::new(Int::from(e), Int::from(degree)))
        .collect();
    if !np.contains_point(&scaled)? {
        return Err(Failure::check(
            "witness is not integral over the claimed power (outside the Newton polyhedron)",
        ));
    }
    if ideal.power(degree).contains_monomial(&monomial) {
        return Err(Failure::check("witness lies in the plain power"));
    }
    Ok(format!("witness escapes power {degree} while staying integral over it"))
}
