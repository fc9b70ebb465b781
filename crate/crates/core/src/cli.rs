//! Command-line front end. Every command reads one input in the text
//! formats of [`crate::io`], computes with one or two independent
//! pipelines and prints the result in the polynomial output grammar.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::check::{render_reports, run_all, run_suite, CheckConfig};
use crate::delta::{adjacency_delta_matroid, SetSystem};
use crate::error::{Error, Result};
use crate::euler::{enumerate_transitions, euler_circuits, eulerian_system, martin, Host};
use crate::graph::Graph;
use crate::interlace::{
    global_recursive, global_statesum, q_matrix, q_matrix_recursive, q_nullity_recursive,
    q_nullity_statesum, q_twovar_recursive, q_twovar_statesum,
};
use crate::io::{format_poly1, format_poly2, parse, Input};
use crate::isotropic::{
    default_presentation, from_four_regular, inconsistent_transitions, Labelling,
};
use crate::matroid::{tutte_matroid, tutte_rank_sum};
use crate::plane::{oriented_medial, PlaneGraph};
use crate::poly::{IntPoly1, IntPoly2};
use crate::tutte;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "interlace",
    version,
    about = "Exact interlace, Martin, Tutte-Martin and delta-matroid polynomials"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Input file; standard input when omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Expected input header (graph, digraph4, graph4, plane, setsystem).
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// First pipeline (statesum), second pipeline (recursive), or both compared.
    #[arg(long, global = true, value_enum, default_value_t = Method::Statesum)]
    pub method: Method,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 20)]
    pub trials: usize,
    /// Vertex cap for randomized suites.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Statesum,
    Recursive,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Vertex-nullity interlace polynomial q_N of a graph.
    #[command(name = "q")]
    QNullity,
    /// Two-variable interlace polynomial q(x, y) of a graph.
    #[command(name = "q2")]
    QTwoVar,
    /// Global interlace polynomial Q of a graph.
    #[command(name = "Q")]
    QGlobal,
    /// Interlace polynomial of the adjacency matrix, by matrix pipelines.
    #[command(name = "qm")]
    QMatrix,
    /// Martin polynomial of a digraph4 or graph4 host.
    Martin,
    /// Number of Eulerian circuits of a digraph4 host.
    EulerCount,
    /// Diagonal Tutte polynomial t(x, x) of a graph or plane graph.
    TutteDiag,
    /// Restricted and global Tutte-Martin polynomials of the associated isotropic system.
    Tm,
    /// Delta-matroid polynomials of a set system (or of M_G for a graph).
    Delta {
        #[arg(value_enum)]
        which: DeltaPoly,
    },
    /// Cross-validation batteries.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DeltaPoly {
    #[value(name = "q")]
    Q,
    #[value(name = "Q")]
    Global,
    Qbar,
    Tutte,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Interlace,
    Euler,
    Plane,
    Isotropic,
    Delta,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Interlace => "interlace",
            Suite::Euler => "euler",
            Suite::Plane => "plane",
            Suite::Isotropic => "isotropic",
            Suite::Delta => "delta",
            Suite::All => "all",
        }
    }
}

/// Report text and exit status of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            code: EXIT_OK,
        }
    }
}

/// Exit status for an error: all library errors are input or usage faults.
pub fn error_code(_: &Error) -> u8 {
    EXIT_USAGE
}

/// A computed value printed as a human line plus its grammar form.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    One(IntPoly1),
    Two(IntPoly2),
    Count(u64),
}

impl Value {
    fn render(&self, name: &str) -> String {
        match self {
            Value::One(p) => format!("{name} = {p}\n{}", format_poly1(p)),
            Value::Two(p) => format!("{name} = {p}\n{}", format_poly2(p)),
            Value::Count(c) => format!("{name} = {c}"),
        }
    }
}

/// A labelled computation; labels name the route, e.g. `statesum`.
type Pipeline<'a> = (&'static str, Box<dyn Fn() -> Result<Value> + 'a>);

fn pipe<'a>(label: &'static str, f: impl Fn() -> Result<Value> + 'a) -> Pipeline<'a> {
    (label, Box::new(f))
}

/// Runs one or both pipelines and renders the verdict. `--method statesum`
/// selects the first pipeline and `--method recursive` the second.
fn emit(
    name: &str,
    method: Method,
    first: Pipeline<'_>,
    second: Option<Pipeline<'_>>,
) -> Result<Outcome> {
    let second = match (method, second) {
        (Method::Statesum, _) => return Ok(Outcome::ok(first.1()?.render(name) + "\n")),
        (_, None) => {
            return Err(Error::UnsupportedInput(format!(
                "{name} has a single pipeline; use --method statesum"
            )))
        }
        (Method::Recursive, Some(r)) => return Ok(Outcome::ok(r.1()?.render(name) + "\n")),
        (Method::Both, Some(r)) => r,
    };
    let a = first.1()?;
    let b = second.1()?;
    let mut text = String::new();
    for (label, v) in [(first.0, &a), (second.0, &b)] {
        for line in v.render(name).lines() {
            writeln!(text, "{label:<12}{line}").expect("string write");
        }
    }
    let pass = a == b;
    text.push_str(if pass { "MATCH\n" } else { "MISMATCH\n" });
    Ok(Outcome {
        text,
        code: if pass { EXIT_OK } else { EXIT_FAILURE },
    })
}

fn read_input(cfg: &RunConfig) -> Result<Input> {
    let text = match &cfg.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
        None => std::io::read_to_string(std::io::stdin())
            .map_err(|e| Error::Io(format!("stdin: {e}")))?,
    };
    let input = parse(&text)?;
    if let Some(f) = &cfg.format {
        if f != input.kind() {
            return Err(Error::UnsupportedInput(format!(
                "--format {f} but the input header is `{}`",
                input.kind()
            )));
        }
    }
    Ok(input)
}

fn wrong_kind(cmd: &str, input: &Input, wanted: &str) -> Error {
    Error::UnsupportedInput(format!(
        "`{cmd}` takes {wanted} input, found `{}`",
        input.kind()
    ))
}

fn graph_input(cmd: &str, input: &Input) -> Result<Graph> {
    match input {
        Input::Graph(g) => Ok(g.clone()),
        other => Err(wrong_kind(cmd, other, "graph")),
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    if let Command::Check { suite } = cfg.command {
        return run_check(cfg, suite);
    }
    let input = read_input(cfg)?;
    let m = cfg.method;
    match &cfg.command {
        Command::QNullity => {
            let g = graph_input("q", &input)?;
            emit(
                "q_N",
                m,
                pipe("statesum", || Ok(Value::One(q_nullity_statesum(&g)))),
                Some(pipe("recursive", || {
                    q_nullity_recursive(&g).map(Value::One)
                })),
            )
        }
        Command::QTwoVar => {
            let g = graph_input("q2", &input)?;
            emit(
                "q",
                m,
                pipe("statesum", || Ok(Value::Two(q_twovar_statesum(&g)))),
                Some(pipe("recursive", || q_twovar_recursive(&g).map(Value::Two))),
            )
        }
        Command::QGlobal => {
            let g = graph_input("Q", &input)?;
            emit(
                "Q",
                m,
                pipe("statesum", || Ok(Value::One(global_statesum(&g)))),
                Some(pipe("recursive", || global_recursive(&g).map(Value::One))),
            )
        }
        Command::QMatrix => {
            let a = graph_input("qm", &input)?.adjacency_matrix();
            emit(
                "q",
                m,
                pipe("statesum", || q_matrix(&a).map(Value::One)),
                Some(pipe("recursive", || q_matrix_recursive(&a).map(Value::One))),
            )
        }
        Command::Martin => match &input {
            Input::Digraph(d) => martin_outcome("m", d, m, q_nullity_statesum),
            Input::FourRegular(g) => martin_outcome("M", g, m, global_statesum),
            other => Err(wrong_kind("martin", other, "digraph4 or graph4")),
        },
        Command::EulerCount => {
            let Input::Digraph(d) = &input else {
                return Err(wrong_kind("euler-count", &input, "digraph4"));
            };
            emit(
                "euler circuits",
                m,
                pipe("transitions", || {
                    let single = enumerate_transitions(d)?
                        .iter()
                        .filter(|t| t.1 == 1)
                        .count();
                    Ok(Value::Count(single as u64))
                }),
                Some(pipe("backtrack", || {
                    let count = match euler_circuits(d) {
                        Ok(c) => c.len(),
                        Err(Error::Disconnected) => 0,
                        Err(e) => return Err(e),
                    };
                    Ok(Value::Count(count as u64))
                })),
            )
        }
        Command::TutteDiag => {
            let (n, edges) = match &input {
                Input::Graph(g) => graph_edge_list(g),
                Input::Plane(pg) => (pg.n(), pg.edges()),
                other => return Err(wrong_kind("tutte-diag", other, "graph or plane")),
            };
            let medial = match &input {
                Input::Plane(pg) if pg.components() == 1 => Some(pg),
                _ => None,
            };
            let mut out = emit(
                "t(x,x)",
                m,
                pipe("rank-sum", || {
                    Ok(Value::One(tutte::tutte_rank_sum(n, &edges).diagonal()))
                }),
                Some(pipe("deletion", || {
                    Ok(Value::One(tutte::tutte(n, &edges).diagonal()))
                })),
            )?;
            if let Some(pg) = medial {
                medial_line(&mut out, pg)?;
            }
            Ok(out)
        }
        Command::Tm => tm_outcome(&input, m),
        Command::Delta { which } => {
            let d = match &input {
                Input::SetSystem(s) => s.clone(),
                Input::Graph(g) => adjacency_delta_matroid(g),
                other => return Err(wrong_kind("delta", other, "setsystem or graph")),
            };
            delta_outcome(&d, *which, m)
        }
        Command::Check { .. } => unreachable!("handled above"),
    }
}

fn graph_edge_list(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let mut edges: Vec<(usize, usize)> = (0..g.n())
        .filter(|&v| g.is_looped(v))
        .map(|v| (v, v))
        .collect();
    edges.extend(g.edges());
    (g.n(), edges)
}

fn medial_line(out: &mut Outcome, pg: &PlaneGraph) -> Result<()> {
    let mm = martin(&oriented_medial(pg)?)?;
    writeln!(out.text, "m(medial) = {mm}\n{}", format_poly1(&mm)).expect("string write");
    Ok(())
}

/// Martin polynomial by transition enumeration against the interlace
/// route through an Eulerian system.
fn martin_outcome(
    name: &str,
    host: &impl Host,
    m: Method,
    interlace: impl Fn(&Graph) -> IntPoly1,
) -> Result<Outcome> {
    emit(
        name,
        m,
        pipe("transitions", || martin(host).map(Value::One)),
        Some(pipe("interlace", || {
            let c = eulerian_system(host)?;
            Ok(Value::One(interlace(&c.interlace_graph(host.graph()))))
        })),
    )
}

fn tm_outcome(input: &Input, m: Method) -> Result<Outcome> {
    let (s, c, reference, global_ref): (_, _, IntPoly1, IntPoly1) = match input {
        Input::Graph(g) => {
            let s = default_presentation(g)?;
            let n = g.n();
            let c = crate::isotropic::KVector::constant(n, crate::isotropic::KElem::Z);
            (s, c, q_nullity_statesum(g), global_statesum(g))
        }
        Input::Digraph(d) => {
            let lambda = Labelling::standard(d.graph().n());
            let s = from_four_regular(d, &lambda)?;
            let t = inconsistent_transitions(d).expect("directed host");
            (s, lambda.of_transitions(&t), martin(d)?, martin(d.graph())?)
        }
        Input::FourRegular(g) => {
            let lambda = Labelling::standard(g.n());
            let s = from_four_regular(g, &lambda)?;
            let m_poly = martin(g)?;
            (
                s,
                crate::isotropic::KVector::zero(),
                IntPoly1::zero(),
                m_poly,
            )
        }
        other => return Err(wrong_kind("tm", other, "graph, digraph4 or graph4")),
    };
    let restricted = !matches!(input, Input::FourRegular(_));
    let mut out = Outcome::ok(String::new());
    if restricted {
        let r = emit(
            "tm",
            m,
            pipe("isotropic", || s.restricted_tm(&c).map(Value::One)),
            Some(pipe("direct", || Ok(Value::One(reference.clone())))),
        )?;
        out.text += &r.text;
        out.code = out.code.max(r.code);
    }
    let r = emit(
        "TM",
        m,
        pipe("isotropic", || s.global_tm().map(Value::One)),
        Some(pipe("direct", || Ok(Value::One(global_ref.clone())))),
    )?;
    out.text += &r.text;
    out.code = out.code.max(r.code);
    Ok(out)
}

fn delta_outcome(d: &SetSystem, which: DeltaPoly, m: Method) -> Result<Outcome> {
    match which {
        DeltaPoly::Q => emit(
            "q_Δ",
            m,
            pipe("statesum", || d.q_delta().map(Value::One)),
            Some(pipe("recursive", || d.q_delta_recursive().map(Value::One))),
        ),
        DeltaPoly::Global => emit(
            "Q_Δ",
            m,
            pipe("statesum", || d.q_delta_global().map(Value::One)),
            None,
        ),
        DeltaPoly::Qbar => emit(
            "q̄",
            m,
            pipe("statesum", || d.q_bar().map(Value::Two)),
            Some(pipe("recursive", || d.q_bar_recursive().map(Value::Two))),
        ),
        DeltaPoly::Tutte => emit(
            "t",
            m,
            pipe("rank-sum", || tutte_rank_sum(d).map(Value::Two)),
            Some(pipe("deletion", || tutte_matroid(d).map(Value::Two))),
        ),
    }
}

fn run_check(cfg: &RunConfig, suite: Suite) -> Result<Outcome> {
    let cc = CheckConfig {
        seed: cfg.seed,
        trials: cfg.trials,
        max_n: cfg.max_n,
    };
    let reports = match suite {
        Suite::All => run_all(&cc)?,
        s => vec![run_suite(s.name(), &cc)?.expect("known suite")],
    };
    let fails: usize = reports.iter().map(|r| r.failures()).sum();
    Ok(Outcome {
        text: render_reports(&reports),
        code: if fails == 0 { EXIT_OK } else { EXIT_FAILURE },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("interlace").chain(args.iter().copied())).unwrap()
    }

    fn with_file(name: &str, body: &str, args: &[&str]) -> Outcome {
        let dir = std::env::temp_dir().join(format!("interlace-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        std::fs::write(&path, body).unwrap();
        let mut all: Vec<&str> = args.to_vec();
        let p = path.to_str().unwrap().to_string();
        all.push("--input");
        all.push(&p);
        run(&cfg(&all)).unwrap()
    }

    #[test]
    fn q_both_on_k2() {
        let out = with_file("k2.lg", "graph 2\ne 0 1\n", &["q", "--method", "both"]);
        assert!(out.text.contains("q_N = 2x"), "{}", out.text);
        assert!(out.text.ends_with("MATCH\n"));
        assert_eq!(out.code, EXIT_OK);
    }

    #[test]
    fn euler_count_two_loops() {
        let out = with_file(
            "loops1.dg",
            "digraph4 1\na 0 0\na 0 0\n",
            &["euler-count", "--method", "both"],
        );
        assert!(out.text.contains("euler circuits = 1"), "{}", out.text);
        assert_eq!(out.code, EXIT_OK);
    }

    #[test]
    fn single_pipeline_rejects_both() {
        let c = cfg(&["delta", "Q", "--method", "both"]);
        assert!(matches!(
            c.command,
            Command::Delta {
                which: DeltaPoly::Global
            }
        ));
        let s = SetSystem::from_words("a", &["", "a"]).unwrap();
        assert!(delta_outcome(&s, DeltaPoly::Global, Method::Both).is_err());
    }

    #[test]
    fn format_tag_must_match() {
        let dir = std::env::temp_dir().join(format!("interlace-cli-fmt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.lg");
        std::fs::write(&path, "graph 1\n").unwrap();
        let c = cfg(&["q", "--format", "plane", "--input", path.to_str().unwrap()]);
        assert!(matches!(run(&c), Err(Error::UnsupportedInput(_))));
    }
}
