//! Acceptance suite: one test per verification criterion, each ending in a
//! single `criterion N (...): PASS/FAIL` line followed by an assertion.
//!
//! The status lines are written directly to the process's stdout (bypassing
//! the test harness's capture buffer) so they appear in plain `cargo test`
//! output. Tests are numbered so the default alphabetical ordering runs them
//! 1 through 9, and the expensive shared artifacts — the on-disk result
//! cache and the full theorem sweep — are computed once via lazy statics.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::Command;
use std::time::Instant;

use cwreg::cache::Cache;
use cwreg::randideal::random_ideal;
use cwreg::report::{graph_hash, VerificationReport, CSV_HEADER};
use cwreg::verify::{
    bipartite_corpus, sweep_graphs, verify_bipartite_corpus, verify_colon_sweep,
    verify_lower_bound, verify_ordinary_sweep, verify_proof_trace_sweep, verify_theorem_sweep,
    SweepGraph, SweepOptions,
};
use cwreg_core::resolution::{
    betti_table, betti_table_full_box, regularity, regularity_via_polarization,
    regularity_via_polarization_with_caps, DEFAULT_POLAR_VAR_CAP,
};
use cwreg_core::{graph, ideal, CoefficientField, Graph, MonomialIdeal};
use once_cell::sync::Lazy;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

/// Reduced face budget for the polarization route in criterion 7: large
/// sweep ideals whose Stanley-Reisner scan would dominate the suite's
/// runtime fail this cap cleanly and are counted as capped, not compared.
const CROSS_CHECK_FACE_BUDGET: usize = 20_000;

static CACHE_DIR: Lazy<TempDir> = Lazy::new(|| tempfile::tempdir().expect("create cache dir"));

fn shared_cache() -> Cache {
    Cache::open(Some(CACHE_DIR.path())).expect("open shared cache")
}

/// The full theorem sweep at the acceptance bounds, shared by criteria 1, 5
/// (through the cache) and 7 (as the Koszul-route reference values).
static THEOREM: Lazy<VerificationReport> = Lazy::new(|| {
    let mut cache = shared_cache();
    verify_theorem_sweep(&SweepOptions::default(), &mut cache)
});

/// Colon-lemma sweep shared by criteria 3 and 4.
static COLON: Lazy<VerificationReport> = Lazy::new(|| verify_colon_sweep(&SweepOptions::default()));

/// Write one line straight to stdout, bypassing libtest's output capture so
/// the pass/fail line is visible in ordinary `cargo test` runs.
fn report_line(line: &str) {
    use std::io::Write as _;
    let mut out = std::io::stdout();
    let _ = out.write_all(line.as_bytes());
    let _ = out.write_all(b"\n");
    let _ = out.flush();
}

fn conclude(criterion: &str, faults: &[String], detail: String) {
    let verdict = if faults.is_empty() { "PASS" } else { "FAIL" };
    report_line(&format!("criterion {criterion}: {verdict} — {detail}"));
    assert!(faults.is_empty(), "criterion {criterion} failed:\n{}", faults.join("\n"));
}

fn find_row<'a>(
    report: &'a VerificationReport,
    hash: &str,
    s: i64,
) -> Option<&'a cwreg::report::ReportRow> {
    let suffix = &hash[..12];
    report.rows.iter().find(|r| r.s == s && r.graph_id.ends_with(suffix))
}

#[test]
fn criterion_1_theorem_sweep() {
    let t0 = Instant::now();
    let report = &*THEOREM;
    let graphs = sweep_graphs(11);
    let total = report.rows.len();
    let (ok, violated, skipped) = (report.num_ok(), report.num_violated(), report.num_skipped());
    let mut faults = Vec::new();

    if violated != 0 {
        faults.push(format!("{violated} rows violate the regularity formula"));
    }
    if ok < 200 {
        faults.push(format!("only {ok} non-skipped rows (need at least 200)"));
    }
    if skipped * 5 >= total {
        faults.push(format!("{skipped} of {total} rows skipped (at least 20%)"));
    }
    if total != graphs.len() * 3 {
        faults.push(format!(
            "expected one row per (graph, s): {} graphs x 3 powers != {total} rows",
            graphs.len()
        ));
    }
    if !report.rows.iter().any(|r| r.provenance.contains("union(")) {
        faults.push("no disjoint-union members in the sweep".into());
    }
    for row in &report.rows {
        if row.is_skipped() {
            continue;
        }
        if row.formula_value != 2 * row.s + row.ind_match as i64 - 1 {
            faults.push(format!(
                "row {} s={} formula column {} != 2s + ind_match - 1",
                row.graph_id, row.s, row.formula_value
            ));
            break;
        }
        if row.is_ok() && row.reg_symbolic != Some(row.formula_value as usize) {
            faults.push(format!(
                "row {} s={} marked ok but reg {:?} != formula {}",
                row.graph_id, row.s, row.reg_symbolic, row.formula_value
            ));
            break;
        }
    }

    // Spot instances with independently known values: the single edge has
    // reg I(K2)^(s) = 2s, and the 5-vertex graph with one pendant edge and
    // one pendant triangle on a 2-vertex spine has ind_match = 2.
    let k2 = graph_hash(&Graph::new(2, vec![(1, 2)]).expect("K2"));
    match find_row(report, &k2, 3) {
        Some(r) if r.reg_symbolic == Some(6) && r.is_ok() => {}
        other => faults.push(format!("single-edge s=3 row wrong: {other:?}")),
    }
    let g5 = graph_hash(
        &Graph::new(5, vec![(1, 2), (1, 3), (2, 4), (2, 5), (4, 5)]).expect("5-vertex example"),
    );
    match find_row(report, &g5, 2) {
        Some(r) if r.reg_symbolic == Some(5) && r.formula_value == 5 && r.is_ok() => {}
        other => faults.push(format!("pendant-edge-plus-triangle s=2 row wrong: {other:?}")),
    }

    conclude(
        "1 (theorem sweep: family and unions up to 11 vertices, s=1..3)",
        &faults,
        format!(
            "{ok} ok / {violated} violated / {skipped} skipped of {total} rows in {:.1?}",
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_2_lower_bound_exhaustive() {
    let t0 = Instant::now();
    let opts = SweepOptions { max_vertices: 6, s_min: 1, s_max: 2, ..SweepOptions::default() };
    let mut cache = shared_cache();
    let report = verify_lower_bound(&opts, &mut cache).expect("6 vertices is within bounds");
    let mut faults = Vec::new();

    let total = report.rows.len();
    if report.num_violated() != 0 {
        faults.push(format!("{} rows fall below the lower bound", report.num_violated()));
    }
    if report.num_skipped() != 0 {
        faults.push(format!("{} rows skipped; exhaustive run must compute all", report.num_skipped()));
    }
    // All labeled connected graphs on 2..=6 vertices, two powers each.
    let expected = graph::all_connected_graphs(6).len() * 2;
    if total != expected {
        faults.push(format!("expected {expected} rows, got {total}"));
    }
    // The 5-cycle is a strict instance: reg I(C5) = 3 > 2 = 2s + ind_match - 1.
    let c5 = graph_hash(&graph::cycle(5));
    match find_row(&report, &c5, 1) {
        Some(r) if r.reg_symbolic == Some(3) && r.formula_value == 2 => {}
        other => faults.push(format!("5-cycle strictness instance wrong: {other:?}")),
    }

    conclude(
        "2 (lower bound on all connected graphs up to 6 vertices, s=1..2)",
        &faults,
        format!(
            "{} rows all satisfy reg >= 2s + ind_match - 1, 5-cycle strict, in {:.1?}",
            total,
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_3_pendant_triangle_colon() {
    let t0 = Instant::now();
    let report = &*COLON;
    let mut faults = Vec::new();

    // One row per (pendant triangle, s); any construction failure surfaces
    // as a missing row against this count.
    let expected: usize =
        sweep_graphs(11).iter().map(|sg| sg.graph.pendant_triangles().len()).sum::<usize>() * 3;
    let rows: Vec<_> =
        report.rows.iter().filter(|r| r.provenance.starts_with("triangle{")).collect();
    let bad = rows.iter().filter(|r| !r.is_ok()).count();
    if bad != 0 {
        faults.push(format!("{bad} triangle colon checks violated"));
    }
    if rows.len() != expected {
        faults.push(format!(
            "expected {expected} triangle colon checks, got {} (skipped constructions?)",
            rows.len()
        ));
    }
    if expected == 0 {
        faults.push("sweep contains no pendant triangles".into());
    }
    for s in 1..=3 {
        if !rows.iter().any(|r| r.s == s) {
            faults.push(format!("no triangle colon checks at s={s}"));
        }
    }

    conclude(
        "3 (pendant-triangle colon equals (s-2)-nd symbolic power, s=1..3)",
        &faults,
        format!("{} checks across the sweep in {:.1?}", rows.len(), t0.elapsed()),
    );
}

#[test]
fn criterion_4_pendant_edge_colon() {
    let t0 = Instant::now();
    let report = &*COLON;
    let mut faults = Vec::new();

    let expected: usize =
        sweep_graphs(11).iter().map(|sg| sg.graph.pendant_edges().len()).sum::<usize>() * 3;
    let rows: Vec<_> =
        report.rows.iter().filter(|r| r.provenance.starts_with("pendant-edge{")).collect();
    let bad = rows.iter().filter(|r| !r.is_ok()).count();
    if bad != 0 {
        faults.push(format!("{bad} pendant-edge colon checks violated"));
    }
    if rows.len() != expected {
        faults.push(format!(
            "expected {expected} pendant-edge colon checks, got {} (skipped constructions?)",
            rows.len()
        ));
    }
    if expected == 0 {
        faults.push("sweep contains no pendant edges".into());
    }

    conclude(
        "4 (pendant-edge colon equals (s-1)-st symbolic power, s=1..3)",
        &faults,
        format!("{} checks across the sweep in {:.1?}", rows.len(), t0.elapsed()),
    );
}

#[test]
fn criterion_5_ordinary_vs_symbolic() {
    let t0 = Instant::now();
    let mut faults = Vec::new();

    // Part A: ordinary power equals symbolic power as ideals on the whole
    // bipartite corpus (exhaustive to 6 vertices plus named 7-8 vertex
    // graphs and two disconnected unions), s = 1..3.
    let corpus = bipartite_corpus();
    let bip = verify_bipartite_corpus(&SweepOptions::default());
    if bip.num_violated() != 0 {
        faults.push(format!("{} bipartite ideal-equality rows violated", bip.num_violated()));
    }
    if bip.num_skipped() != 0 {
        faults.push(format!("{} bipartite ideal-equality rows skipped", bip.num_skipped()));
    }
    if bip.rows.len() != corpus.len() * 3 {
        faults.push(format!(
            "expected {} bipartite rows, got {}",
            corpus.len() * 3,
            bip.rows.len()
        ));
    }
    if corpus.len() < 100 {
        faults.push(format!("bipartite corpus has only {} graphs", corpus.len()));
    }

    // Part B: ordinary-power regularity over the connected family up to 9
    // vertices — formula check plus agreement with the symbolic-power
    // regularity wherever both routes produced a value.
    let opts = SweepOptions { max_vertices: 9, ..SweepOptions::default() };
    let mut cache = shared_cache();
    let ord = verify_ordinary_sweep(&opts, &mut cache);
    if ord.num_violated() != 0 {
        faults.push(format!("{} ordinary-power rows violated", ord.num_violated()));
    }
    let both: Vec<_> = ord
        .rows
        .iter()
        .filter(|r| r.reg_symbolic.is_some() && r.reg_ordinary.is_some())
        .collect();
    let disagree = both.iter().filter(|r| r.reg_symbolic != r.reg_ordinary).count();
    if disagree != 0 {
        faults.push(format!(
            "{disagree} rows compute different ordinary and symbolic regularities"
        ));
    }
    if both.len() < 100 {
        faults.push(format!(
            "only {} rows computed both regularities (need at least 100)",
            both.len()
        ));
    }

    conclude(
        "5 (bipartite powers equal as ideals; ordinary regularity agrees)",
        &faults,
        format!(
            "{} ideal equalities + {} double-regularity agreements in {:.1?}",
            bip.rows.len(),
            both.len(),
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_6_proof_chain_inequalities() {
    let t0 = Instant::now();
    let report = verify_proof_trace_sweep(&SweepOptions::default(), 10);
    let mut faults = Vec::new();

    if report.num_violated() != 0 {
        faults.push(format!("{} trace inequalities violated", report.num_violated()));
    }
    if report.num_skipped() != 0 {
        faults.push(format!("{} traces skipped", report.num_skipped()));
    }
    let distinct: BTreeSet<&str> = report.rows.iter().map(|r| r.graph_id.as_str()).collect();
    if distinct.len() < 10 {
        faults.push(format!("only {} distinct graphs traced (need 10)", distinct.len()));
    }
    for s in [2, 3] {
        if !report.rows.iter().any(|r| r.s == s) {
            faults.push(format!("no traces at s={s}"));
        }
    }
    // Every (graph, s) trace must contain the full chain of nine bounds.
    let mut seen: BTreeMap<(&str, i64), BTreeSet<usize>> = BTreeMap::new();
    for row in &report.rows {
        let index = row
            .provenance
            .strip_prefix("trace(")
            .and_then(|rest| rest.split(')').next())
            .and_then(|k| k.parse::<usize>().ok());
        if let Some(k) = index {
            seen.entry((row.graph_id.as_str(), row.s)).or_default().insert(k);
        }
    }
    for ((id, s), indices) in &seen {
        if !(1..=9).all(|k| indices.contains(&k)) {
            faults.push(format!("trace {id} s={s} is missing inequality steps: {indices:?}"));
        }
    }

    conclude(
        "6 (nine-step regularity bound chain on 10 non-chordal graphs, s=2..3)",
        &faults,
        format!(
            "{} inequalities hold across {} graphs in {:.1?}",
            report.rows.len(),
            distinct.len(),
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_7_independent_regularity_routes() {
    let t0 = Instant::now();
    let rationals = CoefficientField::rationals();
    let f2 = CoefficientField::prime(2).expect("2 is prime");
    let mut faults = Vec::new();

    // Part A: random monomial ideals, both routes, both characteristics.
    // The Koszul route must handle every sample at these sizes (<= 6
    // variables, exponents <= 3); the polarization route may cap out on
    // heavy samples (its polarized complex can be much larger), so capped
    // samples are counted and the comparison floor is enforced on the rest.
    let mut rng = ChaCha8Rng::seed_from_u64(0xC7);
    let (mut random_compared, mut random_capped) = (0usize, 0usize);
    for k in 0..160 {
        let sample = random_ideal(&mut rng, 6, 10, 3);
        let mut complete = true;
        for field in [rationals, f2] {
            match (regularity(&sample, field), regularity_via_polarization(&sample, field)) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(_), Err(cwreg_core::Error::SizeCapExceeded { .. })) => complete = false,
                (a, b) => {
                    complete = false;
                    faults.push(format!(
                        "random ideal {k} char {}: Koszul {a:?} vs polarization {b:?}",
                        field.characteristic()
                    ));
                }
            }
        }
        if complete {
            random_compared += 1;
        } else {
            random_capped += 1;
        }
    }
    if random_compared < 100 {
        faults.push(format!(
            "only {random_compared} random ideals fully compared (need >= 100)"
        ));
    }

    // Part B: every theorem-sweep ideal whose regularity was computed.
    // Char 0 compares the polarization route against the sweep's Koszul
    // value; char 2 recomputes both routes. Ideals whose polarization scan
    // exceeds the reduced face budget are counted as capped.
    let graphs = sweep_graphs(11);
    let by_id: HashMap<&str, &SweepGraph> = graphs.iter().map(|sg| (sg.id.as_str(), sg)).collect();
    let (mut char0_compared, mut char2_compared, mut capped) = (0usize, 0usize, 0usize);
    let mut small_box: Vec<MonomialIdeal> = Vec::new();
    for row in &THEOREM.rows {
        let Some(reference) = row.reg_symbolic else {
            capped += 1;
            continue;
        };
        let sg = by_id[row.graph_id.as_str()];
        let power = match ideal::symbolic_power_with_cap(&sg.graph, row.s, ideal::DEFAULT_GEN_CAP) {
            Ok(p) => p,
            Err(e) => {
                faults.push(format!("{} s={}: power construction failed: {e}", row.graph_id, row.s));
                continue;
            }
        };
        if power.n_vars() <= 4 && power.max_exponents().iter().all(|&e| e <= 2) {
            small_box.push(power.clone());
        }
        match regularity_via_polarization_with_caps(
            &power,
            rationals,
            DEFAULT_POLAR_VAR_CAP,
            CROSS_CHECK_FACE_BUDGET,
        ) {
            Ok(b) if b == reference => char0_compared += 1,
            Ok(b) => faults.push(format!(
                "{} s={}: polarization {b} != Koszul {reference} (char 0)",
                row.graph_id, row.s
            )),
            Err(_) => capped += 1,
        }
        match regularity_via_polarization_with_caps(
            &power,
            f2,
            DEFAULT_POLAR_VAR_CAP,
            CROSS_CHECK_FACE_BUDGET,
        ) {
            Ok(b2) => match regularity(&power, f2) {
                Ok(k2) if k2 == b2 => char2_compared += 1,
                Ok(k2) => faults.push(format!(
                    "{} s={}: polarization {b2} != Koszul {k2} (char 2)",
                    row.graph_id, row.s
                )),
                Err(_) => capped += 1,
            },
            Err(_) => capped += 1,
        }
    }
    if char0_compared < 300 {
        faults.push(format!("only {char0_compared} char-0 sweep comparisons (need >= 300)"));
    }
    if char2_compared < 300 {
        faults.push(format!("only {char2_compared} char-2 sweep comparisons (need >= 300)"));
    }

    // Part C: lcm-closure Betti tables equal full-exponent-box Betti tables
    // on every small-box ideal (all sweep ideals on <= 4 variables with
    // exponents <= 2, plus a random batch of the same shape).
    let mut rng2 = ChaCha8Rng::seed_from_u64(0xC7C7);
    for _ in 0..60 {
        small_box.push(random_ideal(&mut rng2, 4, 8, 2));
    }
    let mut box_compared = 0usize;
    for sample in &small_box {
        for field in [rationals, f2] {
            match (betti_table(sample, field), betti_table_full_box(sample, field)) {
                (Ok(a), Ok(b)) if a == b => box_compared += 1,
                (a, b) => faults.push(format!(
                    "full-box Betti mismatch (char {}): {a:?} vs {b:?}",
                    field.characteristic()
                )),
            }
        }
    }

    conclude(
        "7 (Koszul route vs polarization route vs full-box Betti tables)",
        &faults,
        format!(
            "{random_compared} random ({random_capped} capped) + {char0_compared} char-0 + \
             {char2_compared} char-2 sweep + {box_compared} full-box comparisons agree \
             ({capped} sweep-capped) in {:.1?}",
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_8_invariants_vs_subset_enumeration() {
    let t0 = Instant::now();
    let mut faults = Vec::new();
    let mut checked = 0usize;

    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let np = pairs.len();
        for mask in 0u32..(1u32 << np) {
            let edges: Vec<(usize, usize)> =
                (0..np).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::new(n, edges.clone()).expect("enumerated edges are valid");
            let m = edges.len();
            let endpoint_masks: Vec<u32> =
                edges.iter().map(|&(u, v)| 1u32 << (u - 1) | 1u32 << (v - 1)).collect();

            // Matchings: edge subsets with pairwise disjoint endpoints. A
            // matching is induced when every graph edge inside its vertex
            // set is one of the chosen edges.
            let (mut best_matching, mut best_induced) = (0usize, 0usize);
            for sub in 0u32..(1u32 << m) {
                let mut union = 0u32;
                let mut disjoint = true;
                let mut w = sub;
                while w != 0 {
                    let i = w.trailing_zeros() as usize;
                    w &= w - 1;
                    if union & endpoint_masks[i] != 0 {
                        disjoint = false;
                        break;
                    }
                    union |= endpoint_masks[i];
                }
                if !disjoint {
                    continue;
                }
                let size = sub.count_ones() as usize;
                best_matching = best_matching.max(size);
                let induced = (0..m)
                    .all(|i| endpoint_masks[i] & !union != 0 || sub >> i & 1 == 1);
                if induced {
                    best_induced = best_induced.max(size);
                }
            }

            // Vertex covers: subsets meeting every edge, restricted to
            // inclusion-minimal ones.
            let covering: Vec<u32> = (0u32..(1u32 << n))
                .filter(|&vs| endpoint_masks.iter().all(|&em| em & vs != 0))
                .collect();
            let minimal: BTreeSet<Vec<usize>> = covering
                .iter()
                .copied()
                .filter(|&vs| covering.iter().all(|&other| other == vs || other & !vs != 0))
                .map(|vs| (0..n).filter(|i| vs >> i & 1 == 1).map(|i| i + 1).collect())
                .collect();

            let lib_matching = g.matching_number().expect("matching within caps");
            let lib_induced = g.induced_matching_number().expect("induced matching within caps");
            let lib_covers: BTreeSet<Vec<usize>> = g
                .minimal_vertex_covers()
                .expect("covers within caps")
                .into_iter()
                .map(|mut c| {
                    c.sort_unstable();
                    c
                })
                .collect();

            if lib_matching != best_matching
                || lib_induced != best_induced
                || lib_covers != minimal
            {
                faults.push(format!(
                    "n={n} edges={edges:?}: library ({lib_matching}, {lib_induced}, {} covers) \
                     vs enumeration ({best_matching}, {best_induced}, {} covers)",
                    lib_covers.len(),
                    minimal.len()
                ));
                if faults.len() >= 5 {
                    break;
                }
            }
            checked += 1;
        }
        if faults.len() >= 5 {
            break;
        }
    }

    conclude(
        "8 (matching, induced matching, minimal covers vs subset enumeration)",
        &faults,
        format!("{checked} labeled graphs up to 6 vertices in {:.1?}", t0.elapsed()),
    );
}

/// Zero out the trailing elapsed_ms field of every data row.
fn normalize_elapsed(csv: &str) -> String {
    csv.lines()
        .enumerate()
        .map(|(i, line)| {
            if i == 0 {
                line.to_string()
            } else {
                match line.rsplit_once(',') {
                    Some((head, _)) => format!("{head},0"),
                    None => line.to_string(),
                }
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn criterion_9_cli_determinism() {
    let t0 = Instant::now();
    let exe = env!("CARGO_BIN_EXE_cwreg");
    let mut faults = Vec::new();

    let run = |extra: &[&str]| -> (String, i32) {
        let mut cmd = Command::new(exe);
        cmd.args(["verify", "theorem", "--max-vertices", "7", "--s", "1..2"]);
        cmd.args(extra);
        let out = cmd.output().expect("run cwreg");
        (String::from_utf8_lossy(&out.stdout).into_owned(), out.status.code().unwrap_or(-1))
    };

    // Thread count must not affect the report.
    let (serial, code1) = run(&["--jobs", "1"]);
    let (parallel, code4) = run(&["--jobs", "4"]);
    if code1 != 0 || code4 != 0 {
        faults.push(format!("verify runs exited with {code1} and {code4}"));
    }
    if !serial.starts_with(CSV_HEADER) {
        faults.push("report does not start with the documented CSV header".into());
    }
    if normalize_elapsed(&serial) != normalize_elapsed(&parallel) {
        faults.push("--jobs 4 report differs from --jobs 1 after timing normalization".into());
    }

    // A warm cache must reproduce the cold run byte-for-byte (modulo timing).
    let cache_dir = tempfile::tempdir().expect("create cache dir");
    let dir_arg = cache_dir.path().to_str().expect("utf-8 temp path").to_string();
    let (cold, code_cold) = run(&["--jobs", "1", "--cache-dir", &dir_arg]);
    let (warm, code_warm) = run(&["--jobs", "1", "--cache-dir", &dir_arg]);
    if code_cold != 0 || code_warm != 0 {
        faults.push(format!("cached runs exited with {code_cold} and {code_warm}"));
    }
    if normalize_elapsed(&cold) != normalize_elapsed(&warm) {
        faults.push("warm-cache report differs from cold run after timing normalization".into());
    }
    if normalize_elapsed(&cold) != normalize_elapsed(&serial) {
        faults.push("cached report differs from uncached report".into());
    }
    let cache_file = cache_dir.path().join("cache.jsonl");
    if std::fs::metadata(&cache_file).map(|md| md.len()).unwrap_or(0) == 0 {
        faults.push("cold run left no cache entries behind".into());
    }

    let rows = serial.lines().count().saturating_sub(1);
    conclude(
        "9 (CLI determinism: thread count and cache reuse leave reports unchanged)",
        &faults,
        format!("{rows} rows identical across 4 runs in {:.1?}", t0.elapsed()),
    );
}
