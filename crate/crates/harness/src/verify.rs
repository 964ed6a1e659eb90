//! Verification drivers.
//!
//! Each driver walks a deterministic graph collection, runs exact
//! computations per `(graph, s)` task, and assembles a
//! [`VerificationReport`]. Tasks are independent and pure, so they fan out
//! over the ambient rayon pool; results are merged back in task order, which
//! makes parallel and serial runs produce identical rows. Regularities are
//! memoized through the [`Cache`] (probe before the parallel phase, append
//! after it, single writer).
//!
//! Driver inventory:
//! - [`verify_theorem_sweep`]: reg of the s-th symbolic power of every
//!   enumerated Cameron-Walker family graph (plus disjoint unions of pairs
//!   from a fixed prefix) must equal `2s + ind_match - 1`.
//! - [`verify_lower_bound`]: on every labeled connected graph up to a small
//!   vertex bound, reg of the s-th symbolic power is at least that value.
//! - [`verify_colon_sweep`] / [`verify_colon_lemmas`]: colon of the s-th
//!   symbolic power by a pendant-triangle product drops two symbolic steps;
//!   by a pendant-edge product, one step. `s <= 0` powers are the unit ideal.
//! - [`verify_proof_trace_sweep`] / [`proof_trace`]: the nine regularity
//!   inequalities of the inductive proof, each side computed exactly, plus
//!   the colon-monotonicity instance used alongside them.
//! - [`verify_ordinary_sweep`]: ordinary powers satisfy the same formula,
//!   bipartite members have ordinary = symbolic as ideals, and whenever both
//!   regularities are computed they agree.
//! - [`verify_bipartite_corpus`]: symbolic = ordinary as ideals on an
//!   exhaustive small-bipartite corpus plus named bipartite graphs up to 8
//!   vertices.

use std::time::Instant;

use cwreg_core::cw::{self, FamilyBounds};
use cwreg_core::graph::{self, Graph};
use cwreg_core::ideal::{self, Monomial, MonomialIdeal};
use cwreg_core::resolution::{self, CoefficientField};
use cwreg_core::{Error, Result};
use rayon::prelude::*;

use crate::cache::{Cache, CachedValue, PowerKind};
use crate::report::{csv_safe, graph_hash, make_graph_id, ReportRow, VerificationReport};

/// How many leading family members participate in pairwise disjoint unions
/// in the theorem sweep. The prefix covers all stars and star triangles
/// within bounds, so the unions exercise the disconnected branch with both
/// family shapes.
const UNION_PREFIX: usize = 12;

/// Result-affecting sweep parameters. Scheduling (`--jobs`) is deliberately
/// not part of this struct: it cannot change any row.
#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub max_vertices: usize,
    pub s_min: i64,
    pub s_max: i64,
    pub field: CoefficientField,
    /// Generator cap for constructing symbolic and ordinary powers; rows
    /// whose construction exceeds it are reported as skipped with the cap
    /// named.
    pub gen_cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_vertices: 11,
            s_min: 1,
            s_max: 3,
            field: CoefficientField::rationals(),
            gen_cap: ideal::DEFAULT_GEN_CAP,
        }
    }
}

impl SweepOptions {
    fn s_values(&self) -> Vec<i64> {
        (self.s_min..=self.s_max).collect()
    }

    fn config(&self, op: &str) -> String {
        format!(
            "op={op} max_vertices={} s={}..{} field_char={} gen_cap={}",
            self.max_vertices,
            self.s_min,
            self.s_max,
            self.field.characteristic(),
            self.gen_cap
        )
    }
}

/// A graph in a verification collection, with its stable identifiers.
#[derive(Debug, Clone)]
pub struct SweepGraph {
    pub graph: Graph,
    pub provenance: String,
    /// SHA-256 of the canonical edge list (the cache key component).
    pub hash: String,
    /// `[ordinal]-[hash prefix]` report identifier.
    pub id: String,
}

fn tag_graphs(graphs: Vec<(Graph, String)>) -> Vec<SweepGraph> {
    graphs
        .into_iter()
        .enumerate()
        .map(|(k, (graph, provenance))| {
            let hash = graph_hash(&graph);
            let id = make_graph_id(k, &hash);
            SweepGraph { graph, provenance, hash, id }
        })
        .collect()
}

/// The theorem-sweep collection: every family member within the bounds, then
/// disjoint unions of pairs drawn from the leading [`UNION_PREFIX`] members
/// whose combined vertex count stays within `max_vertices` (second summand's
/// labels offset past the first), deduplicated on canonical edge lists.
pub fn sweep_graphs(max_vertices: usize) -> Vec<SweepGraph> {
    let family = cw::enumerate_family(&FamilyBounds::new(max_vertices));
    let provenances: Vec<String> = family
        .iter()
        .map(|g| {
            cw::decompose(g).map(|d| d.describe()).unwrap_or_else(|_| "family-member".into())
        })
        .collect();

    let mut list: Vec<(Graph, String)> =
        family.iter().cloned().zip(provenances.iter().cloned()).collect();

    let prefix = family.len().min(UNION_PREFIX);
    for i in 0..prefix {
        for j in i..prefix {
            if family[i].n() + family[j].n() > max_vertices {
                continue;
            }
            if let Ok(u) = family[i].disjoint_union(&family[j]) {
                list.push((u, format!("union({}+{})", provenances[i], provenances[j])));
            }
        }
    }

    let mut seen = std::collections::BTreeSet::new();
    list.retain(|(g, _)| seen.insert((g.n(), g.edge_list_string())));
    tag_graphs(list)
}

/// Every labeled connected graph with 2..=`max_vertices` vertices.
fn exhaustive_graphs(max_vertices: usize) -> Vec<SweepGraph> {
    let graphs = graph::all_connected_graphs(max_vertices)
        .into_iter()
        .map(|g| {
            let provenance = format!("exhaustive(n={})", g.n());
            (g, provenance)
        })
        .collect();
    tag_graphs(graphs)
}

/// matching and induced matching numbers, as a fallible pair.
fn matching_invariants(g: &Graph) -> Result<(usize, usize)> {
    let m = g.matching_number()?;
    let im = g.induced_matching_number()?;
    Ok((m, im))
}

fn compute_symbolic_reg(
    g: &Graph,
    s: i64,
    field: CoefficientField,
    gen_cap: usize,
) -> CachedValue {
    match ideal::symbolic_power_with_cap(g, s, gen_cap)
        .and_then(|i| resolution::regularity(&i, field))
    {
        Ok(r) => CachedValue::Reg(r),
        Err(e) => CachedValue::Skip(csv_safe(&e.to_string())),
    }
}

fn compute_ordinary_reg(
    g: &Graph,
    s: i64,
    field: CoefficientField,
    gen_cap: usize,
) -> CachedValue {
    let result = u32::try_from(s)
        .map_err(|_| Error::PreconditionFailed(format!("ordinary power needs s >= 1; got {s}")))
        .and_then(|s| ideal::edge_ideal(g).power_with_cap(s, gen_cap))
        .and_then(|i| resolution::regularity(&i, field));
    match result {
        Ok(r) => CachedValue::Reg(r),
        Err(e) => CachedValue::Skip(csv_safe(&e.to_string())),
    }
}

/// How a computed regularity is judged against `2s + ind_match - 1`.
#[derive(Clone, Copy)]
enum Judge {
    Equality,
    LowerBound,
}

/// Shared driver for the theorem sweep and the lower-bound sweep: one row
/// per `(graph, s)`, regularity of the symbolic power memoized in `cache`.
fn regularity_sweep(
    op: &str,
    opts: &SweepOptions,
    graphs: Vec<SweepGraph>,
    cache: &mut Cache,
    judge: Judge,
) -> VerificationReport {
    let field_char = opts.field.characteristic();
    let tasks: Vec<(&SweepGraph, i64)> = graphs
        .iter()
        .flat_map(|sg| opts.s_values().into_iter().map(move |s| (sg, s)))
        .collect();

    let probes: Vec<Option<CachedValue>> =
        tasks.iter().map(|(sg, s)| cache.get(&sg.hash, *s, field_char, PowerKind::Symbolic)).collect();

    let results: Vec<(Result<(usize, usize)>, CachedValue, bool, u128)> = tasks
        .par_iter()
        .zip(probes.par_iter())
        .map(|((sg, s), probe)| {
            let start = Instant::now();
            let invariants = matching_invariants(&sg.graph);
            let (value, fresh) = match probe {
                Some(v) => (v.clone(), false),
                None => (compute_symbolic_reg(&sg.graph, *s, opts.field, opts.gen_cap), true),
            };
            (invariants, value, fresh, start.elapsed().as_millis())
        })
        .collect();

    let mut rows = Vec::with_capacity(tasks.len());
    for (((sg, s), probeless), (invariants, value, fresh, elapsed_ms)) in
        tasks.iter().zip(probes.iter().map(|p| p.is_none())).zip(results)
    {
        if fresh && probeless {
            if let Err(e) = cache.put(&sg.hash, *s, field_char, PowerKind::Symbolic, value.clone())
            {
                eprintln!("warning: cache write failed: {e}");
            }
        }
        let (matching, ind_match, inv_err) = match invariants {
            Ok((m, im)) => (m, im, None),
            Err(e) => (0, 0, Some(e)),
        };
        let formula_value = 2 * s + ind_match as i64 - 1;
        let (reg_symbolic, status) = match (&inv_err, &value) {
            (Some(e), _) => (None, format!("skipped:{}", csv_safe(&e.to_string()))),
            (None, CachedValue::Reg(r)) => {
                let holds = match judge {
                    Judge::Equality => *r as i64 == formula_value,
                    Judge::LowerBound => *r as i64 >= formula_value,
                };
                (Some(*r), if holds { "ok".into() } else { "violated".into() })
            }
            (None, CachedValue::Skip(reason)) => (None, format!("skipped:{reason}")),
        };
        rows.push(ReportRow {
            graph_id: sg.id.clone(),
            provenance: sg.provenance.clone(),
            n: sg.graph.n(),
            m: sg.graph.m(),
            matching,
            ind_match,
            s: *s,
            field_char,
            reg_symbolic,
            reg_ordinary: None,
            formula_value,
            status,
            elapsed_ms,
        });
    }
    VerificationReport::new(opts.config(op), rows)
}

/// Theorem sweep: `reg(I(G)^(s)) = 2s + ind_match(G) - 1` over the family
/// collection (members plus prefix disjoint unions).
pub fn verify_theorem_sweep(opts: &SweepOptions, cache: &mut Cache) -> VerificationReport {
    regularity_sweep(
        "verify-theorem",
        opts,
        sweep_graphs(opts.max_vertices),
        cache,
        Judge::Equality,
    )
}

/// Largest vertex count the exhaustive lower-bound sweep accepts.
pub const LOWER_BOUND_MAX_VERTICES: usize = 7;

/// Lower bound `reg(I(G)^(s)) >= 2s + ind_match(G) - 1` over every labeled
/// connected graph with at most `max_vertices` vertices (exhaustive, so the
/// bound is capped at [`LOWER_BOUND_MAX_VERTICES`]).
pub fn verify_lower_bound(opts: &SweepOptions, cache: &mut Cache) -> Result<VerificationReport> {
    if opts.max_vertices > LOWER_BOUND_MAX_VERTICES {
        return Err(Error::PreconditionFailed(format!(
            "the lower-bound sweep enumerates every connected graph; max_vertices {} exceeds the supported limit {}",
            opts.max_vertices, LOWER_BOUND_MAX_VERTICES
        )));
    }
    Ok(regularity_sweep(
        "verify-lower-bound",
        opts,
        exhaustive_graphs(opts.max_vertices),
        cache,
        Judge::LowerBound,
    ))
}

/// Per-feature colon checks on one graph: for every pendant triangle with
/// vertex product `t`, `(I^(s) : t) = I^(s-2)`; for every pendant edge with
/// product `e`, `(I^(s) : e) = I^(s-1)`. Powers with `s <= 0` are the unit
/// ideal. Returns `(feature label, holds)` pairs.
pub fn verify_colon_lemmas(g: &Graph, s: i64, gen_cap: usize) -> Result<Vec<(String, bool)>> {
    if s < 1 {
        return Err(Error::PreconditionFailed(format!("colon checks need s >= 1; got {s}")));
    }
    let base = ideal::symbolic_power_with_cap(g, s, gen_cap)?;
    let mut checks = Vec::new();

    let triangles = g.pendant_triangles();
    if !triangles.is_empty() {
        let expected = ideal::symbolic_power_with_cap(g, s - 2, gen_cap)?;
        for t in triangles {
            let product = Monomial::from_vars(&t.vertices(), g.n())?;
            let label = format!("triangle{{{}-{}-{}}}", t.apex, t.base.0, t.base.1);
            checks.push((label, base.colon(&product)? == expected));
        }
    }

    let pendant_edges = g.pendant_edges();
    if !pendant_edges.is_empty() {
        let expected = ideal::symbolic_power_with_cap(g, s - 1, gen_cap)?;
        for (u, v) in pendant_edges {
            let product = Monomial::from_vars(&[u, v], g.n())?;
            let label = format!("pendant-edge{{{u}-{v}}}");
            checks.push((label, base.colon(&product)? == expected));
        }
    }
    Ok(checks)
}

/// Colon sweep: runs [`verify_colon_lemmas`] on every sweep graph and `s`,
/// one row per pendant feature (graphs without pendant features contribute
/// no rows; every Cameron-Walker graph has at least one).
pub fn verify_colon_sweep(opts: &SweepOptions) -> VerificationReport {
    let graphs = sweep_graphs(opts.max_vertices);
    let tasks: Vec<(&SweepGraph, i64)> = graphs
        .iter()
        .flat_map(|sg| opts.s_values().into_iter().map(move |s| (sg, s)))
        .collect();

    let rows: Vec<ReportRow> = tasks
        .par_iter()
        .flat_map_iter(|(sg, s)| {
            let start = Instant::now();
            let (matching, ind_match) = matching_invariants(&sg.graph).unwrap_or((0, 0));
            let formula_value = 2 * s + ind_match as i64 - 1;
            let outcomes: Vec<(String, String)> =
                match verify_colon_lemmas(&sg.graph, *s, opts.gen_cap) {
                    Ok(checks) => checks
                        .into_iter()
                        .map(|(label, holds)| {
                            (label, if holds { "ok".into() } else { "violated".into() })
                        })
                        .collect(),
                    Err(e) => {
                        vec![("colon".into(), format!("skipped:{}", csv_safe(&e.to_string())))]
                    }
                };
            let elapsed_ms = start.elapsed().as_millis();
            let sg = (*sg).clone();
            let s = *s;
            outcomes.into_iter().map(move |(label, status)| ReportRow {
                graph_id: sg.id.clone(),
                provenance: format!("{}:{}", label, sg.provenance),
                n: sg.graph.n(),
                m: sg.graph.m(),
                matching,
                ind_match,
                s,
                field_char: opts.field.characteristic(),
                reg_symbolic: None,
                reg_ordinary: None,
                formula_value,
                status,
                elapsed_ms,
            })
        })
        .collect();
    VerificationReport::new(opts.config("verify-colon"), rows)
}

/// One checked inequality of the proof trace: `lhs <= rhs` with both sides
/// computed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLine {
    /// 1..=9 for the numbered inequalities; 10 for the colon-monotonicity
    /// instance invoked alongside them.
    pub index: usize,
    pub label: String,
    pub lhs: usize,
    pub rhs: usize,
}

impl TraceLine {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

/// Computes every ideal in the inductive regularity argument for one graph
/// and power, and evaluates the nine numbered inequalities plus the
/// colon-monotonicity instance.
///
/// Writing `P = I(G)^(s)` after relabeling a pendant triangle so that `x1`
/// is its apex and `x2, x3` are its degree-2 base vertices, the checked
/// lines are:
///
/// 1. `reg(P) <= max(reg(P:x1)+1, reg(P+(x1)))`
/// 2. `reg(P+(x1)) <= 2s+im-1`
/// 3. `reg(P:x1) <= max(reg(P:x1x2)+1, reg((P:x1)+(x2)))`
/// 4. `reg(P:x1x2) <= max(reg(P:x1x2x3)+1, reg((P:x1x2)+(x3)))`
/// 5. `reg(P:x1x2x3) <= 2s+im-5`
/// 6. `reg((P:x1x2)+(x3)) <= 2s+im-3`
/// 7. `reg((P:x1)+(x2)) <= max(reg(((P:x1)+(x2)):x3)+1, reg((P:x1)+(x2,x3)))`
/// 8. `reg(((P:x1)+(x2)):x3) <= 2s+im-3`
/// 9. `reg((P:x1)+(x2,x3)) <= 2s+im-2`
/// 10. `reg(Q:x1) <= reg(Q)` for `Q = I(G - x2 - x3)^(s)` (emitted whenever
///     the deletion leaves an edge).
///
/// Preconditions: `s >= 2`, `G` connected Cameron-Walker with at least one
/// pendant triangle.
pub fn proof_trace(
    g: &Graph,
    s: i64,
    field: CoefficientField,
    gen_cap: usize,
) -> Result<Vec<TraceLine>> {
    if s < 2 {
        return Err(Error::PreconditionFailed(format!("proof trace needs s >= 2; got {s}")));
    }
    cw::decompose(g)?;
    let triangles = g.pendant_triangles();
    let Some(t) = triangles.first() else {
        return Err(Error::PreconditionFailed("graph has no pendant triangle".into()));
    };

    // Relabel so the chosen triangle is {x1, x2, x3} with x1 the apex.
    let n = g.n();
    let mut perm = vec![0usize; n];
    perm[t.apex - 1] = 1;
    perm[t.base.0 - 1] = 2;
    perm[t.base.1 - 1] = 3;
    let mut next = 4;
    for v in 1..=n {
        if perm[v - 1] == 0 {
            perm[v - 1] = next;
            next += 1;
        }
    }
    let g = g.relabel(&perm)?;

    let im = g.induced_matching_number()? as i64;
    let x1 = Monomial::var(1, n)?;
    let x2 = Monomial::var(2, n)?;
    let x3 = Monomial::var(3, n)?;

    let p = ideal::symbolic_power_with_cap(&g, s, gen_cap)?;
    let p_c1 = p.colon(&x1)?; // (P : x1)
    let p_p1 = p.plus_monomial(&x1)?; // (P, x1)
    let p_c12 = p.colon(&x1.mul(&x2))?; // (P : x1x2)
    let p_c1_p2 = p_c1.plus_monomial(&x2)?; // ((P : x1), x2)
    let p_c123 = p.colon(&x1.mul(&x2).mul(&x3))?; // (P : x1x2x3)
    let p_c12_p3 = p_c12.plus_monomial(&x3)?; // ((P : x1x2), x3)
    let p_c1_p23 = p_c1_p2.plus_monomial(&x3)?; // ((P : x1), x2, x3)
    let p_c1_p2_c3 = p_c1_p2.colon(&x3)?; // (((P : x1), x2) : x3)

    let reg = |i: &MonomialIdeal| resolution::regularity(i, field);
    let r = reg(&p)?;
    let r_c1 = reg(&p_c1)?;
    let r_p1 = reg(&p_p1)?;
    let r_c12 = reg(&p_c12)?;
    let r_c1_p2 = reg(&p_c1_p2)?;
    let r_c123 = reg(&p_c123)?;
    let r_c12_p3 = reg(&p_c12_p3)?;
    let r_c1_p23 = reg(&p_c1_p23)?;
    let r_c1_p2_c3 = reg(&p_c1_p2_c3)?;

    let bound = |d: i64| {
        usize::try_from(2 * s + im + d).expect("trace bounds are nonnegative for s >= 2")
    };
    let mut lines = vec![
        TraceLine {
            index: 1,
            label: "reg(P)<=max(reg(P:x1)+1;reg(P+(x1)))".into(),
            lhs: r,
            rhs: (r_c1 + 1).max(r_p1),
        },
        TraceLine {
            index: 2,
            label: "reg(P+(x1))<=2s+im-1".into(),
            lhs: r_p1,
            rhs: bound(-1),
        },
        TraceLine {
            index: 3,
            label: "reg(P:x1)<=max(reg(P:x1x2)+1;reg((P:x1)+(x2)))".into(),
            lhs: r_c1,
            rhs: (r_c12 + 1).max(r_c1_p2),
        },
        TraceLine {
            index: 4,
            label: "reg(P:x1x2)<=max(reg(P:x1x2x3)+1;reg((P:x1x2)+(x3)))".into(),
            lhs: r_c12,
            rhs: (r_c123 + 1).max(r_c12_p3),
        },
        TraceLine {
            index: 5,
            label: "reg(P:x1x2x3)<=2s+im-5".into(),
            lhs: r_c123,
            rhs: bound(-5),
        },
        TraceLine {
            index: 6,
            label: "reg((P:x1x2)+(x3))<=2s+im-3".into(),
            lhs: r_c12_p3,
            rhs: bound(-3),
        },
        TraceLine {
            index: 7,
            label: "reg((P:x1)+(x2))<=max(reg(((P:x1)+(x2)):x3)+1;reg((P:x1)+(x2;x3)))".into(),
            lhs: r_c1_p2,
            rhs: (r_c1_p2_c3 + 1).max(r_c1_p23),
        },
        TraceLine {
            index: 8,
            label: "reg(((P:x1)+(x2)):x3)<=2s+im-3".into(),
            lhs: r_c1_p2_c3,
            rhs: bound(-3),
        },
        TraceLine {
            index: 9,
            label: "reg((P:x1)+(x2;x3))<=2s+im-2".into(),
            lhs: r_c1_p23,
            rhs: bound(-2),
        },
    ];

    // Colon monotonicity after deleting the triangle base: only meaningful
    // when an edge survives the deletion (always the case off a lone
    // triangle component).
    let (g_del, _) = g.delete_vertices(&[2, 3])?;
    if g_del.m() > 0 {
        let q = ideal::symbolic_power_with_cap(&g_del, s, gen_cap)?;
        let q_c1 = q.colon(&Monomial::var(1, g_del.n())?)?;
        lines.push(TraceLine {
            index: 10,
            label: "reg(Q:x1)<=reg(Q) for Q=sympow(G-x2-x3;s)".into(),
            lhs: reg(&q_c1)?,
            rhs: reg(&q)?,
        });
    }
    Ok(lines)
}

/// Proof-trace sweep: picks the first `num_graphs` non-chordal family
/// members with a pendant triangle (smallest first, family order) and runs
/// [`proof_trace`] for every `s >= 2` in range; one row per trace line.
pub fn verify_proof_trace_sweep(
    opts: &SweepOptions,
    num_graphs: usize,
) -> VerificationReport {
    let mut graphs: Vec<SweepGraph> = sweep_graphs(opts.max_vertices)
        .into_iter()
        .filter(|sg| {
            sg.graph.is_connected()
                && !sg.graph.is_chordal()
                && !sg.graph.pendant_triangles().is_empty()
        })
        .collect();
    // Trace the smallest eligible graphs: the chain recomputes nine
    // regularities per (graph, s), so vertex count dominates the cost.
    graphs.sort_by(|a, b| (a.graph.n(), a.graph.m(), &a.id).cmp(&(b.graph.n(), b.graph.m(), &b.id)));
    graphs.truncate(num_graphs);
    let s_values: Vec<i64> = opts.s_values().into_iter().filter(|&s| s >= 2).collect();
    let tasks: Vec<(&SweepGraph, i64)> = graphs
        .iter()
        .flat_map(|sg| s_values.iter().map(move |&s| (sg, s)))
        .collect();

    let rows: Vec<ReportRow> = tasks
        .par_iter()
        .flat_map_iter(|(sg, s)| {
            let start = Instant::now();
            let (matching, ind_match) = matching_invariants(&sg.graph).unwrap_or((0, 0));
            let formula_value = 2 * s + ind_match as i64 - 1;
            let outcomes: Vec<(String, String)> =
                match proof_trace(&sg.graph, *s, opts.field, opts.gen_cap) {
                    Ok(lines) => lines
                        .into_iter()
                        .map(|line| {
                            let status = if line.holds() { "ok" } else { "violated" };
                            (
                                format!(
                                    "trace({}):{}:lhs={}:rhs={}",
                                    line.index, line.label, line.lhs, line.rhs
                                ),
                                status.into(),
                            )
                        })
                        .collect(),
                    Err(e) => {
                        vec![("trace".into(), format!("skipped:{}", csv_safe(&e.to_string())))]
                    }
                };
            let elapsed_ms = start.elapsed().as_millis();
            let sg = (*sg).clone();
            let s = *s;
            outcomes.into_iter().map(move |(label, status)| ReportRow {
                graph_id: sg.id.clone(),
                provenance: label,
                n: sg.graph.n(),
                m: sg.graph.m(),
                matching,
                ind_match,
                s,
                field_char: opts.field.characteristic(),
                reg_symbolic: None,
                reg_ordinary: None,
                formula_value,
                status,
                elapsed_ms,
            })
        })
        .collect();
    VerificationReport::new(
        format!("{} num_graphs={}", opts.config("verify-proof-trace"), num_graphs),
        rows,
    )
}

/// Ordinary-power sweep over the connected family members: checks
/// `reg(I(G)^s) = 2s + ind_match - 1`, ideal equality of ordinary and
/// symbolic powers for bipartite members, and regularity agreement whenever
/// both powers' regularities were computed.
pub fn verify_ordinary_sweep(opts: &SweepOptions, cache: &mut Cache) -> VerificationReport {
    let family = cw::enumerate_family(&FamilyBounds::new(opts.max_vertices));
    let graphs = tag_graphs(
        family
            .into_iter()
            .map(|g| {
                let provenance = cw::decompose(&g)
                    .map(|d| d.describe())
                    .unwrap_or_else(|_| "family-member".into());
                (g, provenance)
            })
            .collect(),
    );
    let field_char = opts.field.characteristic();
    let tasks: Vec<(&SweepGraph, i64)> = graphs
        .iter()
        .flat_map(|sg| opts.s_values().into_iter().map(move |s| (sg, s)))
        .collect();

    let probes: Vec<(Option<CachedValue>, Option<CachedValue>)> = tasks
        .iter()
        .map(|(sg, s)| {
            (
                cache.get(&sg.hash, *s, field_char, PowerKind::Ordinary),
                cache.get(&sg.hash, *s, field_char, PowerKind::Symbolic),
            )
        })
        .collect();

    type OrdinaryOutcome =
        (Result<(usize, usize)>, CachedValue, CachedValue, Option<Result<bool>>, u128);
    let results: Vec<OrdinaryOutcome> = tasks
        .par_iter()
        .zip(probes.par_iter())
        .map(|((sg, s), (ord_probe, sym_probe))| {
            let start = Instant::now();
            let invariants = matching_invariants(&sg.graph);
            let ord = ord_probe
                .clone()
                .unwrap_or_else(|| compute_ordinary_reg(&sg.graph, *s, opts.field, opts.gen_cap));
            let sym = sym_probe
                .clone()
                .unwrap_or_else(|| compute_symbolic_reg(&sg.graph, *s, opts.field, opts.gen_cap));
            // For bipartite members the two powers must agree as ideals.
            let ideals_equal = sg.graph.is_bipartite().then(|| {
                let symbolic = ideal::symbolic_power_with_cap(&sg.graph, *s, opts.gen_cap)?;
                let ordinary = ideal::edge_ideal(&sg.graph)
                    .power_with_cap(u32::try_from(*s).expect("s >= 1 in sweeps"), opts.gen_cap)?;
                Ok(symbolic == ordinary)
            });
            (invariants, ord, sym, ideals_equal, start.elapsed().as_millis())
        })
        .collect();

    let mut rows = Vec::with_capacity(tasks.len());
    for (((sg, s), (ord_probe, sym_probe)), (invariants, ord, sym, ideals_equal, elapsed_ms)) in
        tasks.iter().zip(probes.iter()).zip(results)
    {
        for (probe, kind, value) in [
            (ord_probe, PowerKind::Ordinary, &ord),
            (sym_probe, PowerKind::Symbolic, &sym),
        ] {
            if probe.is_none() {
                if let Err(e) = cache.put(&sg.hash, *s, field_char, kind, value.clone()) {
                    eprintln!("warning: cache write failed: {e}");
                }
            }
        }
        let (matching, ind_match, inv_err) = match invariants {
            Ok((m, im)) => (m, im, None),
            Err(e) => (0, 0, Some(e)),
        };
        let formula_value = 2 * s + ind_match as i64 - 1;
        let reg_ordinary = match &ord {
            CachedValue::Reg(r) => Some(*r),
            CachedValue::Skip(_) => None,
        };
        let reg_symbolic = match &sym {
            CachedValue::Reg(r) => Some(*r),
            CachedValue::Skip(_) => None,
        };
        let status = if let Some(e) = inv_err {
            format!("skipped:{}", csv_safe(&e.to_string()))
        } else {
            match (&ord, &ideals_equal) {
                (CachedValue::Skip(reason), _) => format!("skipped:{reason}"),
                (CachedValue::Reg(_), Some(Err(e))) => {
                    format!("skipped:{}", csv_safe(&e.to_string()))
                }
                (CachedValue::Reg(r), equal) => {
                    let formula_holds = *r as i64 == formula_value;
                    let regularities_agree = reg_symbolic.map(|sr| sr == *r).unwrap_or(true);
                    let equality_holds = match equal {
                        Some(Ok(eq)) => *eq,
                        _ => true,
                    };
                    if formula_holds && regularities_agree && equality_holds {
                        "ok".into()
                    } else {
                        "violated".into()
                    }
                }
            }
        };
        rows.push(ReportRow {
            graph_id: sg.id.clone(),
            provenance: sg.provenance.clone(),
            n: sg.graph.n(),
            m: sg.graph.m(),
            matching,
            ind_match,
            s: *s,
            field_char,
            reg_symbolic,
            reg_ordinary,
            formula_value,
            status,
            elapsed_ms,
        });
    }
    VerificationReport::new(opts.config("verify-ordinary"), rows)
}

/// The bipartite equality corpus: every labeled connected bipartite graph
/// with at most 6 vertices, named bipartite graphs on 7-8 vertices (paths,
/// cycles, stars, complete bipartite), and two disconnected unions.
pub fn bipartite_corpus() -> Vec<SweepGraph> {
    let mut list: Vec<(Graph, String)> = graph::all_connected_graphs(6)
        .into_iter()
        .filter(|g| g.is_bipartite())
        .map(|g| {
            let provenance = format!("exhaustive-bipartite(n={})", g.n());
            (g, provenance)
        })
        .collect();
    let named: Vec<(Graph, &str)> = vec![
        (graph::path(7), "path(7)"),
        (graph::path(8), "path(8)"),
        (graph::cycle(8), "cycle(8)"),
        (graph::star(6), "star(6)"),
        (graph::star(7), "star(7)"),
        (graph::complete_bipartite(2, 5), "complete_bipartite(2;5)"),
        (graph::complete_bipartite(2, 6), "complete_bipartite(2;6)"),
        (graph::complete_bipartite(3, 4), "complete_bipartite(3;4)"),
        (graph::complete_bipartite(3, 5), "complete_bipartite(3;5)"),
        (graph::complete_bipartite(4, 4), "complete_bipartite(4;4)"),
        (
            graph::cycle(6).disjoint_union(&graph::path(2)).expect("disjoint union stays in bounds"),
            "union(cycle(6)+path(2))",
        ),
        (
            graph::cycle(4).disjoint_union(&graph::cycle(4)).expect("disjoint union stays in bounds"),
            "union(cycle(4)+cycle(4))",
        ),
    ];
    list.extend(named.into_iter().map(|(g, p)| (g, p.to_string())));
    for (g, p) in &list {
        debug_assert!(g.is_bipartite(), "corpus graph {p} must be bipartite");
        debug_assert!(g.n() <= 8, "corpus graph {p} must have at most 8 vertices");
    }
    tag_graphs(list)
}

/// Bipartite equality check: symbolic and ordinary powers agree as ideals on
/// every corpus graph and `s` in range. One row per `(graph, s)`.
pub fn verify_bipartite_corpus(opts: &SweepOptions) -> VerificationReport {
    let graphs = bipartite_corpus();
    let tasks: Vec<(&SweepGraph, i64)> = graphs
        .iter()
        .flat_map(|sg| opts.s_values().into_iter().map(move |s| (sg, s)))
        .collect();
    let rows: Vec<ReportRow> = tasks
        .par_iter()
        .map(|(sg, s)| {
            let start = Instant::now();
            let (matching, ind_match) = matching_invariants(&sg.graph).unwrap_or((0, 0));
            let formula_value = 2 * s + ind_match as i64 - 1;
            let equal = ideal::symbolic_power_with_cap(&sg.graph, *s, opts.gen_cap).and_then(
                |symbolic| {
                    let ordinary = ideal::edge_ideal(&sg.graph)
                        .power_with_cap(u32::try_from(*s).expect("s >= 1 in sweeps"), opts.gen_cap)?;
                    Ok(symbolic == ordinary)
                },
            );
            let status = match equal {
                Ok(true) => "ok".into(),
                Ok(false) => "violated".into(),
                Err(e) => format!("skipped:{}", csv_safe(&e.to_string())),
            };
            ReportRow {
                graph_id: sg.id.clone(),
                provenance: sg.provenance.clone(),
                n: sg.graph.n(),
                m: sg.graph.m(),
                matching,
                ind_match,
                s: *s,
                field_char: opts.field.characteristic(),
                reg_symbolic: None,
                reg_ordinary: None,
                formula_value,
                status,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect();
    VerificationReport::new(opts.config("verify-bipartite"), rows)
}
