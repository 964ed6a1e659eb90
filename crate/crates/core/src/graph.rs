//! Finite simple graphs on labeled vertices `1..=n` and the exact invariants
//! needed downstream: matching number, induced matching number, minimal vertex
//! covers, structural predicates, vertex deletion, and pendant features
//! (pendant edges and pendant triangles).
//!
//! Everything here is exact and deterministic: enumerations are exponential
//! searches guarded by explicit caps, results come back in a canonical sorted
//! order, and no randomization or floating point is involved.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Sorted, duplicate-free list of vertex labels.
pub type VertexSet = Vec<usize>;

/// Vertex sets are stored as `u64` bitmasks internally, so graphs are capped
/// at 64 vertices. Desk-scale inputs stay far below this.
pub const MAX_VERTICES: usize = 64;

/// Default cap on edge count for the exponential matching searches.
pub const DEFAULT_EDGE_CAP: usize = 24;

/// Default cap on the number of minimal vertex covers enumerated.
pub const DEFAULT_COVER_CAP: usize = 100_000;

/// A triangle whose two `base` vertices have degree 2 (their only neighbors
/// are each other and the apex). An isolated triangle component reports its
/// lowest-label vertex as the apex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PendantTriangle {
    pub apex: usize,
    pub base: (usize, usize),
}

impl PendantTriangle {
    /// All three vertex labels, sorted ascending.
    pub fn vertices(&self) -> [usize; 3] {
        let mut v = [self.apex, self.base.0, self.base.1];
        v.sort_unstable();
        v
    }
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Graph> {
        Graph::new(raw.n, raw.edges)
    }
}

/// A finite simple graph on vertices `1..=n` with a canonical edge list:
/// every edge stored as `(u, v)` with `u < v`, sorted ascending, no
/// duplicates, no loops.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` and sorting the
    /// list. Rejects out-of-range labels, loops, and duplicate edges
    /// (including duplicates that differ only in endpoint order).
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::BoundsExceeded(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph { n, edges: norm })
    }

    /// Number of vertices (the label space is `1..=n`).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Adjacency bitmasks indexed by `vertex - 1`; bit `j` set means vertex
    /// `j + 1` is a neighbor.
    fn adj_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        adj
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Compact string form `"n:u-v,u-v,..."`; stable across runs, suitable
    /// for hashing and report keys.
    pub fn edge_list_string(&self) -> String {
        let body: Vec<String> = self.edges.iter().map(|&(u, v)| format!("{u}-{v}")).collect();
        format!("{}:{}", self.n, body.join(","))
    }

    // ── connectivity ────────────────────────────────────────────────────

    /// Connected components as sorted vertex sets, ordered by smallest label.
    /// Isolated vertices are singleton components.
    pub fn components(&self) -> Vec<VertexSet> {
        let adj = self.adj_masks();
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let mut grown = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    grown |= adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(mask_to_set(comp));
        }
        comps
    }

    /// True when the graph has exactly one connected component (single
    /// vertices count as connected; the empty graph does not).
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Two-colors the graph if possible. Returns `(left, right)` where each
    /// component's lowest-label vertex is put in `left`; `None` when an odd
    /// cycle exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let adj = self.adj_masks();
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                let mut m = adj[v];
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| color[v] == 0).map(|v| v + 1).collect();
        let right = (0..self.n).filter(|&v| color[v] == 1).map(|v| v + 1).collect();
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Chordality via maximum-cardinality search: the reverse MCS order is a
    /// perfect elimination order exactly when the graph is chordal, which is
    /// then verified directly (later neighbors of each vertex must form a
    /// clique).
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return true;
        }
        let adj = self.adj_masks();
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            visited[v] = true;
            order.push(v);
            let mut m = adj[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                if !visited[w] {
                    weight[w] += 1;
                }
            }
        }
        // Elimination order = reverse visit order. Check that the neighbors
        // of each vertex that come later in elimination order are pairwise
        // adjacent.
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = n - 1 - i;
        }
        for v in 0..n {
            let later: Vec<usize> = {
                let mut m = adj[v];
                let mut out = Vec::new();
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if position[w] > position[v] {
                        out.push(w);
                    }
                }
                out
            };
            for (i, &a) in later.iter().enumerate() {
                for &b in &later[i + 1..] {
                    if adj[a] & (1 << b) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    // ── matchings ───────────────────────────────────────────────────────

    /// Maximum matching size, by exact branch-and-bound over edge subsets.
    /// Errors with `SizeCapExceeded` when the edge count exceeds `cap`.
    pub fn matching_number_with_cap(&self, cap: usize) -> Result<usize> {
        if self.m() > cap {
            return Err(Error::SizeCapExceeded { what: "matching search edge", cap });
        }
        let compat = self.edge_compat_masks(false);
        Ok(max_compatible_set(&compat))
    }

    /// Maximum matching size with the default edge cap.
    pub fn matching_number(&self) -> Result<usize> {
        self.matching_number_with_cap(DEFAULT_EDGE_CAP)
    }

    /// Maximum induced matching size: the largest matching `M` such that no
    /// further edge of the graph joins two edges of `M`. Exact search, same
    /// cap as [`matching_number_with_cap`](Self::matching_number_with_cap).
    pub fn induced_matching_number_with_cap(&self, cap: usize) -> Result<usize> {
        if self.m() > cap {
            return Err(Error::SizeCapExceeded { what: "matching search edge", cap });
        }
        let compat = self.edge_compat_masks(true);
        Ok(max_compatible_set(&compat))
    }

    /// Maximum induced matching size with the default edge cap.
    pub fn induced_matching_number(&self) -> Result<usize> {
        self.induced_matching_number_with_cap(DEFAULT_EDGE_CAP)
    }

    /// Pairwise compatibility of edges as bitmasks over edge indices. Two
    /// edges are compatible when vertex-disjoint; for the induced variant they
    /// must additionally have no edge of the graph between their endpoints.
    fn edge_compat_masks(&self, induced: bool) -> Vec<u64> {
        let m = self.m();
        let masks: Vec<u64> = self
            .edges
            .iter()
            .map(|&(u, v)| (1u64 << (u - 1)) | (1u64 << (v - 1)))
            .collect();
        let mut compat = vec![0u64; m];
        for i in 0..m {
            for j in i + 1..m {
                if masks[i] & masks[j] != 0 {
                    continue;
                }
                if induced {
                    let (a, b) = self.edges[i];
                    let (c, d) = self.edges[j];
                    let cross = [(a, c), (a, d), (b, c), (b, d)];
                    if cross.iter().any(|&(x, y)| self.has_edge(x, y)) {
                        continue;
                    }
                }
                compat[i] |= 1 << j;
                compat[j] |= 1 << i;
            }
        }
        compat
    }

    // ── vertex covers ───────────────────────────────────────────────────

    /// All minimal vertex covers, as complements of maximal independent sets
    /// (Bron-Kerbosch with pivoting on the complement graph). Sorted by size,
    /// then lexicographically. The edgeless graph has the single minimal
    /// cover `{}`.
    pub fn minimal_vertex_covers_with_cap(&self, cap: usize) -> Result<Vec<VertexSet>> {
        let mis = self.maximal_independent_sets(cap)?;
        let full = self.full_mask();
        let mut covers: Vec<VertexSet> = mis.into_iter().map(|s| mask_to_set(full & !s)).collect();
        covers.sort_unstable_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        Ok(covers)
    }

    /// Minimal vertex covers with the default cap.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        self.minimal_vertex_covers_with_cap(DEFAULT_COVER_CAP)
    }

    /// Maximal independent sets as bitmasks, via Bron-Kerbosch with pivoting
    /// on the complement graph (cliques there are independent sets here).
    fn maximal_independent_sets(&self, cap: usize) -> Result<Vec<u64>> {
        let full = self.full_mask();
        if self.n == 0 {
            return Ok(vec![0]);
        }
        let adj = self.adj_masks();
        let comp: Vec<u64> = (0..self.n).map(|v| full & !adj[v] & !(1u64 << v)).collect();
        let mut out = Vec::new();
        bron_kerbosch(&comp, 0, full, 0, &mut out, cap)?;
        Ok(out)
    }

    // ── vertex deletion ─────────────────────────────────────────────────

    /// Deletes the vertices in `dels` and compacts labels. Returns the new
    /// graph together with `old_label`, where `old_label[i]` is the original
    /// label of new vertex `i + 1`. Edges meeting a deleted vertex vanish;
    /// surviving neighbors may become isolated.
    pub fn delete_vertices(&self, dels: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let del_mask = self.set_to_mask(dels)?;
        let old_label: Vec<usize> =
            (1..=self.n).filter(|&v| del_mask & (1 << (v - 1)) == 0).collect();
        let mut new_of = vec![0usize; self.n + 1];
        for (i, &old) in old_label.iter().enumerate() {
            new_of[old] = i + 1;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_of[u] != 0 && new_of[v] != 0)
            .map(|&(u, v)| (new_of[u], new_of[v]))
            .collect();
        Ok((Graph::new(old_label.len(), edges)?, old_label))
    }

    /// Keeps the label space `1..=n` but removes every edge meeting a vertex
    /// in `dels`, leaving those vertices isolated. This is vertex deletion
    /// viewed inside a fixed ambient polynomial ring.
    pub fn isolate_vertices(&self, dels: &[usize]) -> Result<Graph> {
        let del_mask = self.set_to_mask(dels)?;
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| del_mask & ((1 << (u - 1)) | (1 << (v - 1))) == 0)
            .copied()
            .collect();
        Graph::new(self.n, edges)
    }

    /// Applies a relabeling permutation: `perm[old - 1]` is the new label of
    /// `old`. `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch(perm.len(), self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p < 1 || p > self.n {
                return Err(Error::InvalidVertex { vertex: p, n: self.n });
            }
            if seen[p - 1] {
                return Err(Error::Parse(format!("relabeling maps two vertices to {p}")));
            }
            seen[p - 1] = true;
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect();
        Graph::new(self.n, edges)
    }

    /// Disjoint union: `other`'s labels are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::new(self.n + other.n, edges)
    }

    // ── pendant features ────────────────────────────────────────────────

    /// Edges with at least one endpoint of degree 1, in canonical edge order.
    pub fn pendant_edges(&self) -> Vec<(usize, usize)> {
        let deg = self.degrees();
        self.edges
            .iter()
            .filter(|&&(u, v)| deg[u - 1] == 1 || deg[v - 1] == 1)
            .copied()
            .collect()
    }

    /// All triangles `(a, b, c)` with `a < b < c`.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let adj = self.adj_masks();
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            let mut common = adj[a - 1] & adj[b - 1];
            while common != 0 {
                let c = common.trailing_zeros() as usize + 1;
                common &= common - 1;
                if c > b {
                    out.push((a, b, c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Triangles hanging off the rest of the graph: exactly two of the three
    /// vertices have degree 2 (those form the `base`; the third vertex is the
    /// `apex`). A triangle that is its own connected component has all three
    /// degrees equal to 2 and reports its lowest label as the apex. Sorted by
    /// `(apex, base)`.
    pub fn pendant_triangles(&self) -> Vec<PendantTriangle> {
        let deg = self.degrees();
        let mut out = Vec::new();
        for (a, b, c) in self.triangles() {
            let two: Vec<usize> = [a, b, c].into_iter().filter(|&v| deg[v - 1] == 2).collect();
            match two.len() {
                2 => {
                    let apex = [a, b, c].into_iter().find(|v| !two.contains(v)).unwrap();
                    out.push(PendantTriangle { apex, base: (two[0], two[1]) });
                }
                3 => out.push(PendantTriangle { apex: a, base: (b, c) }),
                _ => {}
            }
        }
        out.sort_unstable();
        out
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }

    fn set_to_mask(&self, set: &[usize]) -> Result<u64> {
        let mut mask = 0u64;
        for &v in set {
            if v < 1 || v > self.n {
                return Err(Error::InvalidVertex { vertex: v, n: self.n });
            }
            mask |= 1 << (v - 1);
        }
        Ok(mask)
    }
}

fn mask_to_set(mask: u64) -> VertexSet {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

/// Size of the largest set of indices that are pairwise related by `compat`
/// (maximum clique in the compatibility graph), by ordered branch-and-bound.
fn max_compatible_set(compat: &[u64]) -> usize {
    fn go(compat: &[u64], cand: u64, size: usize, best: &mut usize) {
        let mut c = cand;
        while c != 0 {
            if size + c.count_ones() as usize <= *best {
                return;
            }
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            if size + 1 > *best {
                *best = size + 1;
            }
            go(compat, c & compat[v], size + 1, best);
        }
    }
    let full = if compat.len() == 64 { u64::MAX } else { (1u64 << compat.len()) - 1 };
    let mut best = 0;
    go(compat, full, 0, &mut best);
    best
}

/// Bron-Kerbosch with pivoting; collects maximal cliques of the graph given
/// by `adj` into `out`, failing once more than `cap` cliques appear.
fn bron_kerbosch(
    adj: &[u64],
    r: u64,
    p: u64,
    x: u64,
    out: &mut Vec<u64>,
    cap: usize,
) -> Result<()> {
    if p == 0 && x == 0 {
        if out.len() >= cap {
            return Err(Error::SizeCapExceeded { what: "minimal vertex cover", cap });
        }
        out.push(r);
        return Ok(());
    }
    // Pivot on the vertex of p ∪ x with the most neighbors in p.
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    let mut m = p | x;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let missed = (p & !adj[v]).count_ones() as usize;
        if missed < best {
            best = missed;
            pivot = v;
        }
    }
    let mut cand = p & !adj[pivot];
    let mut p = p;
    let mut x = x;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out, cap)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}

/// Every connected graph with vertex set exactly `{1..n}` for each
/// `2 <= n <= max_vertices`, enumerated as edge subsets of the complete
/// graph (labeled enumeration, no isomorphism reduction). Spanning
/// connectivity is required, so every vertex has degree >= 1 and every graph
/// has at least one edge.
pub fn all_connected_graphs(max_vertices: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_vertices.max(1) {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        let count = pairs.len();
        for mask in 1u64..(1 << count) {
            let mut adj = vec![0u64; n];
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                let (u, v) = pairs[i];
                adj[u - 1] |= 1 << (v - 1);
                adj[v - 1] |= 1 << (u - 1);
            }
            // Spanning connectivity check from vertex 1.
            let full = (1u64 << n) - 1;
            let mut comp = 1u64;
            loop {
                let mut grown = comp;
                let mut w = comp;
                while w != 0 {
                    let v = w.trailing_zeros() as usize;
                    w &= w - 1;
                    grown |= adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            if comp != full {
                continue;
            }
            let edges: Vec<(usize, usize)> = (0..count)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| pairs[i])
                .collect();
            out.push(Graph::new(n, edges).expect("enumerated edges are valid"));
        }
    }
    out
}

// ── small named graphs used throughout the tests ──────────────────────────

/// Path on `n` vertices: edges `{i, i+1}`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i, i + 1)).collect()).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    Graph::new(n, edges).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    Graph::new(n, edges).unwrap()
}

/// Star `K_{1,m}`: center 1 joined to leaves `2..=m+1`.
pub fn star(m: usize) -> Graph {
    Graph::new(m + 1, (2..=m + 1).map(|v| (1, v)).collect()).unwrap()
}

/// Complete bipartite `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v))).collect();
    Graph::new(a + b, edges).unwrap()
}
