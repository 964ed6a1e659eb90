//! Text and JSON serialization for graphs, monomials, ideals, structure
//! parameters, and Betti tables.
//!
//! Graph text format: a header line `n m`, then `m` lines `u v` with
//! `1 <= u < v <= n`. Graph JSON: `{"n": int, "edges": [[u,v], ...]}`.
//! Both parsers reject loops, duplicate edges, and out-of-range labels.
//! Monomial syntax: `*`-separated variables with exponent suffixes, e.g.
//! `x3^2*x5`; the constant monomial is `1`. Ideal JSON:
//! `{"n": int, "gens": [[e1,...,en], ...]}` (exponent vectors).

use serde::{Deserialize, Serialize};

use crate::cw::CWParams;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{Monomial, MonomialIdeal};
use crate::resolution::BettiTable;

// ── graphs ─────────────────────────────────────────────────────────────────

/// Parses the `n m` / `u v` text format. Endpoint order within an edge
/// line is normalized; duplicates, loops, bad labels, and a line count
/// that disagrees with the header are rejected.
pub fn parse_graph_text(input: &str) -> Result<Graph> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph input".into()))?;
    let (n, m) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        [n, m] => (parse_int(n, "vertex count")?, parse_int(m, "edge count")?),
        _ => return Err(Error::Parse(format!("header must be \"n m\", got {header:?}"))),
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let [u, v] = line.split_whitespace().collect::<Vec<_>>()[..] else {
            return Err(Error::Parse(format!("edge line must be \"u v\", got {line:?}")));
        };
        edges.push((parse_int(u, "vertex label")?, parse_int(v, "vertex label")?));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header promises {m} edges but {} edge lines follow",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

/// Renders the `n m` / `u v` text format, newline-terminated.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses `{"n": int, "edges": [[u,v], ...]}`; unknown fields are ignored.
pub fn parse_graph_json(input: &str) -> Result<Graph> {
    serde_json::from_str(input).map_err(|e| Error::Parse(format!("graph JSON: {e}")))
}

/// Renders graph JSON.
pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization cannot fail")
}

/// Renders graph JSON with an extra `"params"` field recording the
/// structure parameters the graph was generated from.
pub fn graph_to_json_with_params(g: &Graph, params: &CWParams) -> String {
    let mut value = serde_json::to_value(g).expect("graph serialization cannot fail");
    value["params"] = serde_json::to_value(params).expect("params serialization cannot fail");
    serde_json::to_string(&value).expect("value serialization cannot fail")
}

/// Parses either graph format, sniffing JSON by a leading `{`.
pub fn parse_graph_auto(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        parse_graph_json(input)
    } else {
        parse_graph_text(input)
    }
}

// ── monomials and ideals ───────────────────────────────────────────────────

/// Parses monomial syntax such as `x3^2*x5` over `n` variables; `1` is
/// the constant monomial. Exponents must be positive and each variable may
/// appear once.
pub fn parse_monomial(input: &str, n: usize) -> Result<Monomial> {
    let s = input.trim();
    if s == "1" {
        return Ok(Monomial::unit(n));
    }
    let mut exps = vec![0u32; n];
    for factor in s.split('*') {
        let body = factor
            .strip_prefix('x')
            .ok_or_else(|| Error::Parse(format!("factor {factor:?} must start with 'x'")))?;
        let (idx_str, exp) = match body.split_once('^') {
            Some((i, e)) => (i, parse_int(e, "exponent")? as u32),
            None => (body, 1),
        };
        let idx: usize = parse_int(idx_str, "variable index")?;
        if idx < 1 || idx > n {
            return Err(Error::Parse(format!(
                "variable x{idx} out of range for {n} variables"
            )));
        }
        if exp == 0 {
            return Err(Error::Parse(format!("exponent of x{idx} must be positive")));
        }
        if exps[idx - 1] != 0 {
            return Err(Error::Parse(format!("variable x{idx} appears twice")));
        }
        exps[idx - 1] = exp;
    }
    Ok(Monomial::new(exps))
}

/// Renders monomial syntax, `1` for the constant monomial.
pub fn monomial_to_string(m: &Monomial) -> String {
    let factors: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{e}", i + 1)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    gens: Vec<Vec<u32>>,
}

/// Parses `{"n": int, "gens": [[e1,...,en], ...]}`. Exponent vectors must
/// all have length `n`; the generating set is minimalized.
pub fn parse_ideal_json(input: &str) -> Result<MonomialIdeal> {
    let raw: IdealJson =
        serde_json::from_str(input).map_err(|e| Error::Parse(format!("ideal JSON: {e}")))?;
    for g in &raw.gens {
        if g.len() != raw.n {
            return Err(Error::Parse(format!(
                "exponent vector of length {} in an ideal over {} variables",
                g.len(),
                raw.n
            )));
        }
    }
    Ok(MonomialIdeal::new(raw.n, raw.gens.into_iter().map(Monomial::new).collect()))
}

/// Renders ideal JSON with the minimal generators as exponent vectors.
pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    let raw = IdealJson {
        n: ideal.n_vars(),
        gens: ideal.gens().iter().map(|g| g.exps().to_vec()).collect(),
    };
    serde_json::to_string(&raw).expect("ideal serialization cannot fail")
}

// ── structure parameters ───────────────────────────────────────────────────

/// Parses the `{"kind": ..., ...}` parameter JSON.
pub fn parse_params_json(input: &str) -> Result<CWParams> {
    serde_json::from_str(input).map_err(|e| Error::Parse(format!("params JSON: {e}")))
}

/// Renders parameter JSON.
pub fn params_to_json(params: &CWParams) -> String {
    serde_json::to_string(params).expect("params serialization cannot fail")
}

// ── Betti tables ───────────────────────────────────────────────────────────

/// Renders the coarse Betti table as CSV with header `i,j,rank`, rows
/// sorted by `(i, j)`.
pub fn betti_to_csv(table: &BettiTable) -> String {
    let mut out = String::from("i,j,rank\n");
    for ((i, j), rank) in table.coarse() {
        out.push_str(&format!("{i},{j},{rank}\n"));
    }
    out
}

/// Renders the multigraded Betti table as
/// `{"field_char": c, "multigraded": [[i, [e1,...,en], rank], ...]}`.
pub fn betti_to_json(table: &BettiTable) -> String {
    let entries: Vec<(usize, &Vec<u32>, usize)> = table
        .multigraded()
        .iter()
        .map(|(&(i, ref b), &rank)| (i, b, rank))
        .collect();
    let value = serde_json::json!({
        "field_char": table.field_char(),
        "multigraded": entries,
    });
    serde_json::to_string(&value).expect("betti serialization cannot fail")
}

fn parse_int(token: &str, what: &str) -> Result<usize> {
    token
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("{what} {token:?} is not a nonnegative integer")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::ideal::edge_ideal;
    use crate::resolution::{betti_table, CoefficientField};

    #[test]
    fn graph_text_roundtrip_and_rejections() {
        let g = graph::cycle(4);
        assert_eq!(graph_to_text(&g), "4 4\n1 2\n1 4\n2 3\n3 4\n");
        assert_eq!(parse_graph_text(&graph_to_text(&g)).unwrap(), g);
        // Swapped endpoints normalize to the same graph.
        assert_eq!(parse_graph_text("3 2\n2 1\n3 2\n").unwrap(), graph::path(3));

        assert!(matches!(parse_graph_text(""), Err(Error::Parse(_))));
        assert!(matches!(parse_graph_text("3\n1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph_text("3 2\n1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph_text("3 1\n1 2 3\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph_text("3 1\n2 2\n"), Err(Error::LoopEdge(2))));
        assert!(matches!(
            parse_graph_text("3 2\n1 2\n2 1\n"),
            Err(Error::DuplicateEdge(1, 2))
        ));
        assert!(matches!(
            parse_graph_text("3 1\n1 4\n"),
            Err(Error::InvalidVertex { vertex: 4, n: 3 })
        ));
    }

    #[test]
    fn graph_json_roundtrip() {
        let g = graph::star(3);
        assert_eq!(graph_to_json(&g), r#"{"n":4,"edges":[[1,2],[1,3],[1,4]]}"#);
        assert_eq!(parse_graph_json(&graph_to_json(&g)).unwrap(), g);
        assert_eq!(parse_graph_auto(&graph_to_json(&g)).unwrap(), g);
        assert_eq!(parse_graph_auto(&graph_to_text(&g)).unwrap(), g);
        // Extra fields (such as generation provenance) are ignored.
        let with_params = graph_to_json_with_params(&g, &CWParams::Star { m: 3 });
        assert!(with_params.contains(r#""params":{"kind":"star","m":3}"#));
        assert_eq!(parse_graph_json(&with_params).unwrap(), g);
        // Structural errors surface through the JSON route too.
        assert!(parse_graph_json(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
        assert!(matches!(parse_graph_json("not json"), Err(Error::Parse(_))));
    }

    #[test]
    fn monomial_syntax() {
        let m = parse_monomial("x3^2*x5", 5).unwrap();
        assert_eq!(m.exps(), &[0, 0, 2, 0, 1]);
        assert_eq!(monomial_to_string(&m), "x3^2*x5");
        assert_eq!(parse_monomial("1", 3).unwrap(), Monomial::unit(3));
        assert_eq!(monomial_to_string(&Monomial::unit(3)), "1");
        assert_eq!(parse_monomial("x1", 1).unwrap().exps(), &[1]);

        for bad in ["", "x0", "x6", "x2^0", "x2^-1", "x1*x1", "y3", "x", "x1**x2"] {
            assert!(parse_monomial(bad, 5).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn ideal_json_roundtrip_minimalizes() {
        let ideal = edge_ideal(&graph::complete(3));
        let json = ideal_to_json(&ideal);
        assert_eq!(json, r#"{"n":3,"gens":[[1,1,0],[1,0,1],[0,1,1]]}"#);
        assert_eq!(parse_ideal_json(&json).unwrap(), ideal);
        // Non-minimal generators collapse to the minimal basis.
        let redundant = r#"{"n":3,"gens":[[1,1,0],[1,1,1]]}"#;
        let parsed = parse_ideal_json(redundant).unwrap();
        assert_eq!(parsed.gens(), &[Monomial::new(vec![1, 1, 0])]);
        // Length mismatches are rejected.
        assert!(parse_ideal_json(r#"{"n":3,"gens":[[1,1]]}"#).is_err());
    }

    #[test]
    fn params_json_helpers() {
        let p = CWParams::StarTriangle { t: 2 };
        assert_eq!(params_to_json(&p), r#"{"kind":"star_triangle","t":2}"#);
        assert_eq!(parse_params_json(&params_to_json(&p)).unwrap(), p);
        assert!(matches!(parse_params_json("{}"), Err(Error::Parse(_))));
    }

    #[test]
    fn betti_output_formats() {
        let table =
            betti_table(&edge_ideal(&graph::complete(3)), CoefficientField::rationals()).unwrap();
        assert_eq!(betti_to_csv(&table), "i,j,rank\n0,2,3\n1,3,2\n");
        assert_eq!(
            betti_to_json(&table),
            concat!(
                r#"{"field_char":0,"multigraded":"#,
                r#"[[0,[0,1,1],1],[0,[1,0,1],1],[0,[1,1,0],1],[1,[1,1,1],2]]}"#
            )
        );
    }
}
