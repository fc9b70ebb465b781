//! Text formats for inputs and the polynomial output grammar.
//!
//! All formats are UTF-8, whitespace separated, with `#` starting a comment.
//! The first content line is a header naming the format and a size:
//!
//! ```text
//! graph <n>        e u v            (e v v is a loop)
//! digraph4 <n>     a u v            (arc u -> v)
//! graph4 <n>       e u v            (repeats are parallel edges)
//! plane <n>        e <id> u v       then  rot v <id:end> ...
//! setsystem <n>    f <elements...>  (bare f is the empty set)
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::delta::SetSystem;
use crate::error::{Error, Result};
use crate::euler::{FourRegularGraph, TwoInTwoOutDigraph};
use crate::graph::{bit, bits, Graph, MAX_VERTICES};
use crate::plane::PlaneGraph;
use crate::poly::{IntPoly1, IntPoly2};

#[derive(Debug, Clone)]
pub enum Input {
    Graph(Graph),
    Digraph(TwoInTwoOutDigraph),
    FourRegular(FourRegularGraph),
    Plane(PlaneGraph),
    SetSystem(SetSystem),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Graph(_) => "graph",
            Input::Digraph(_) => "digraph4",
            Input::FourRegular(_) => "graph4",
            Input::Plane(_) => "plane",
            Input::SetSystem(_) => "setsystem",
        }
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Content lines as `(line number, tokens)`.
fn tokenize(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let body = l.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            (!toks.is_empty()).then_some((i + 1, toks))
        })
        .collect()
}

fn parse_index(line: usize, tok: &str, n: usize, what: &str) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| perr(line, format!("expected {what} index, found `{tok}`")))?;
    if v >= n {
        return Err(perr(line, format!("{what} {v} out of range 0..{n}")));
    }
    Ok(v)
}

fn expect_args(line: usize, toks: &[&str], count: usize) -> Result<()> {
    if toks.len() != count + 1 {
        return Err(perr(
            line,
            format!(
                "`{}` takes {count} arguments, found {}",
                toks[0],
                toks.len() - 1
            ),
        ));
    }
    Ok(())
}

/// Parses any supported format, dispatching on the header.
pub fn parse(text: &str) -> Result<Input> {
    let lines = tokenize(text);
    let Some((hline, header)) = lines.first() else {
        return Err(perr(1, "empty input"));
    };
    if header.len() != 2 {
        return Err(perr(*hline, "header must be `<format> <size>`"));
    }
    let n: usize = header[1]
        .parse()
        .map_err(|_| perr(*hline, format!("invalid size `{}`", header[1])))?;
    let body = &lines[1..];
    match header[0] {
        "graph" => parse_graph_body(n, body).map(Input::Graph),
        "digraph4" => parse_pairs(n, body, "a")
            .and_then(|arcs| TwoInTwoOutDigraph::from_arcs(n, &arcs).map(Input::Digraph)),
        "graph4" => parse_pairs(n, body, "e")
            .and_then(|edges| FourRegularGraph::from_edges(n, &edges).map(Input::FourRegular)),
        "plane" => parse_plane_body(n, body).map(Input::Plane),
        "setsystem" => parse_setsystem_body(n, *hline, body).map(Input::SetSystem),
        other => Err(perr(*hline, format!("unknown format `{other}`"))),
    }
}

fn parse_pairs(n: usize, body: &[(usize, Vec<&str>)], tag: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (line, toks) in body {
        if toks[0] != tag {
            return Err(perr(
                *line,
                format!("expected `{tag}`, found `{}`", toks[0]),
            ));
        }
        expect_args(*line, toks, 2)?;
        out.push((
            parse_index(*line, toks[1], n, "vertex")?,
            parse_index(*line, toks[2], n, "vertex")?,
        ));
    }
    Ok(out)
}

fn parse_graph_body(n: usize, body: &[(usize, Vec<&str>)]) -> Result<Graph> {
    if n > MAX_VERTICES {
        return Err(Error::SizeCap {
            what: "graph vertex count",
            actual: n,
            cap: MAX_VERTICES,
        });
    }
    let mut g = Graph::empty(n);
    for (u, v) in parse_pairs(n, body, "e")? {
        g.add_edge(u, v);
    }
    Ok(g)
}

fn parse_plane_body(n: usize, body: &[(usize, Vec<&str>)]) -> Result<PlaneGraph> {
    let mut edges: Vec<(String, usize, usize)> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut rot_lines: Vec<(usize, usize, Vec<&str>)> = Vec::new();
    for (line, toks) in body {
        match toks[0] {
            "e" => {
                expect_args(*line, toks, 3)?;
                let id = toks[1].to_string();
                if ids.insert(id.clone(), edges.len()).is_some() {
                    return Err(perr(*line, format!("duplicate edge id `{id}`")));
                }
                edges.push((
                    id,
                    parse_index(*line, toks[2], n, "vertex")?,
                    parse_index(*line, toks[3], n, "vertex")?,
                ));
            }
            "rot" => {
                if toks.len() < 2 {
                    return Err(perr(*line, "`rot` needs a vertex"));
                }
                let v = parse_index(*line, toks[1], n, "vertex")?;
                rot_lines.push((*line, v, toks[2..].to_vec()));
            }
            other => {
                return Err(perr(
                    *line,
                    format!("expected `e` or `rot`, found `{other}`"),
                ))
            }
        }
    }
    let mut rotation = vec![Vec::new(); n];
    let mut given = vec![false; n];
    for (line, v, ends) in rot_lines {
        if given[v] {
            return Err(perr(line, format!("second rotation for vertex {v}")));
        }
        given[v] = true;
        for tok in ends {
            let (id, end) = tok
                .rsplit_once(':')
                .ok_or_else(|| perr(line, format!("expected `<id>:<end>`, found `{tok}`")))?;
            let e = *ids
                .get(id)
                .ok_or_else(|| perr(line, format!("unknown edge id `{id}`")))?;
            let end: usize = match end {
                "0" => 0,
                "1" => 1,
                _ => {
                    return Err(perr(
                        line,
                        format!("edge end must be 0 or 1, found `{end}`"),
                    ))
                }
            };
            rotation[v].push(2 * e + end);
        }
    }
    PlaneGraph::new(n, edges, rotation)
}

fn parse_setsystem_body(n: usize, hline: usize, body: &[(usize, Vec<&str>)]) -> Result<SetSystem> {
    if n > 64 {
        return Err(perr(hline, format!("ground set size {n} exceeds 64")));
    }
    let mut fam = Vec::new();
    for (line, toks) in body {
        if toks[0] != "f" {
            return Err(perr(*line, format!("expected `f`, found `{}`", toks[0])));
        }
        let mut m = 0u64;
        for t in &toks[1..] {
            m |= bit(parse_index(*line, t, n, "element")?);
        }
        fam.push(m);
    }
    SetSystem::numbered(n, fam)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for v in 0..g.n() {
        if g.is_looped(v) {
            writeln!(s, "e {v} {v}").expect("string write");
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").expect("string write");
    }
    s
}

pub fn write_digraph(d: &TwoInTwoOutDigraph) -> String {
    let mut s = format!("digraph4 {}\n", d.graph().n());
    for (u, v) in d.arcs() {
        writeln!(s, "a {u} {v}").expect("string write");
    }
    s
}

pub fn write_four_regular(g: &FourRegularGraph) -> String {
    let mut s = format!("graph4 {}\n", g.n());
    for (a, b) in g.edges() {
        writeln!(s, "e {} {}", a / 4, b / 4).expect("string write");
    }
    s
}

pub fn write_plane(pg: &PlaneGraph) -> String {
    let mut s = format!("plane {}\n", pg.n());
    for (i, (u, v)) in pg.edges().into_iter().enumerate() {
        writeln!(s, "e {} {u} {v}", pg.edge_ids()[i]).expect("string write");
    }
    for v in 0..pg.n() {
        let ends: Vec<String> = pg
            .rotation(v)
            .iter()
            .map(|&d| format!("{}:{}", pg.edge_ids()[d / 2], d % 2))
            .collect();
        writeln!(s, "rot {v} {}", ends.join(" ")).expect("string write");
    }
    s
}

pub fn write_setsystem(d: &SetSystem) -> String {
    let mut s = format!("setsystem {}\n", d.n());
    for &f in d.feasible() {
        let elems: Vec<String> = bits(f).map(|i| i.to_string()).collect();
        if elems.is_empty() {
            s.push_str("f\n");
        } else {
            writeln!(s, "f {}", elems.join(" ")).expect("string write");
        }
    }
    s
}

/// `poly x: c0 c1 c2 ...`, ascending exponents.
pub fn format_poly1(p: &IntPoly1) -> String {
    format!("poly x: {}", p.coeff_line())
}

/// One `coef i j c` line per nonzero term.
pub fn format_poly2(p: &IntPoly2) -> String {
    let lines = p.coef_lines();
    if lines.is_empty() {
        "coef 0 0 0".into()
    } else {
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_each_format() {
        let g = parse("# K2\ngraph 2\ne 0 1\n").unwrap();
        assert!(matches!(g, Input::Graph(ref g) if *g == Graph::complete(2)));
        let d = parse("digraph4 1\na 0 0\na 0 0\n").unwrap();
        assert_eq!(d.kind(), "digraph4");
        let f = parse("graph4 1\ne 0 0\ne 0 0").unwrap();
        assert_eq!(f.kind(), "graph4");
        let p = parse(
            "plane 3\ne x 0 1\ne y 1 2\ne z 2 0\nrot 0 x:0 z:1\nrot 1 y:0 x:1\nrot 2 z:0 y:1\n",
        )
        .unwrap();
        assert!(matches!(p, Input::Plane(ref pg) if pg.edge_count() == 3));
        let s = parse("setsystem 2\nf\nf 0 1\n").unwrap();
        assert!(matches!(s, Input::SetSystem(ref s) if s.feasible() == [0, 3]));
    }

    #[test]
    fn errors_name_lines() {
        assert_eq!(
            parse("graph 2\n\ne 0 5\n").unwrap_err(),
            Error::Parse {
                line: 3,
                msg: "vertex 5 out of range 0..2".into()
            }
        );
        assert!(matches!(
            parse("graph x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse("nonsense 3"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("graph 2\ne 0"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse("digraph4 2\na 0 1\na 0 1\na 1 0\na 0 1\n"),
            Err(Error::NotTwoInTwoOut { .. })
        ));
        assert!(matches!(parse("graph 65"), Err(Error::SizeCap { .. })));
        assert!(matches!(
            parse("plane 2\ne a 0 1\nrot 0 a:0\nrot 1 b:1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
    }

    #[test]
    fn poly_grammar() {
        assert_eq!(format_poly1(&IntPoly1::from_coeffs([0, 2])), "poly x: 0 2");
        let q = IntPoly2::monomial(1, 2, 0)
            + IntPoly2::monomial(-2, 1, 0)
            + IntPoly2::monomial(2, 0, 1);
        assert_eq!(format_poly2(&q), "coef 0 1 2\ncoef 1 0 -2\ncoef 2 0 1");
    }

    #[test]
    fn plane_round_trip() {
        let pg = PlaneGraph::k4();
        let Input::Plane(back) = parse(&write_plane(&pg)).unwrap() else {
            panic!("wrong kind")
        };
        assert_eq!(back, pg);
    }

    proptest! {
        #[test]
        fn graph_round_trip(n in 1usize..10, raw in proptest::collection::vec((0usize..10, 0usize..10), 0..20)) {
            let edges: Vec<_> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
            let g = Graph::from_edges(n, &edges);
            let Input::Graph(back) = parse(&write_graph(&g)).unwrap() else { panic!("wrong kind") };
            prop_assert_eq!(back, g);
        }

        #[test]
        fn setsystem_round_trip(n in 0usize..6, fam in proptest::collection::vec(0u64..64, 0..10)) {
            let d = SetSystem::numbered(n, fam.into_iter().map(|f| f & ((1 << n) - 1))).unwrap();
            let Input::SetSystem(back) = parse(&write_setsystem(&d)).unwrap() else { panic!("wrong kind") };
            prop_assert_eq!(back, d);
        }
    }
}
