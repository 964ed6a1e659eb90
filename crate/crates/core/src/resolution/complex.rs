//! Simplicial complexes on small ground sets, with exact reduced homology.
//!
//! A complex is stored by its maximal faces (facets) as bitmasks over the
//! positions of a sorted ground set. Two degenerate complexes are
//! distinguished: the void complex (no faces at all, every reduced homology
//! vanishes) and the irrelevant complex `{∅}` (exactly one face, the empty
//! one, with one-dimensional reduced homology in degree -1).
//!
//! Reduced homology is computed from exact ranks of boundary matrices.
//! Two shortcuts keep the common cases cheap without changing any answer:
//!
//! - cone detection: if some vertex lies in every facet the complex is
//!   contractible and all reduced homology vanishes;
//! - nerve replacement: the nerve of the facet cover is homotopy equivalent
//!   to the complex (all intersections of faces of the cover are simplices,
//!   hence contractible), so when there are fewer facets than vertices we
//!   compute homology of the nerve instead.

use std::collections::HashSet;

use super::CoefficientField;
use crate::error::{Error, Result};
use crate::resolution::linalg::{rank_mod_p, rank_over_q};

/// Largest allowed boundary matrix, in entries.
const MAX_BOUNDARY_ENTRIES: usize = 600_000;
/// Largest vertex count for direct face enumeration (2^k faces).
const MAX_DIRECT_VERTICES: u32 = 20;
/// Largest facet count for the nerve construction (2^f subsets).
const MAX_NERVE_FACETS: usize = 20;
/// Largest total face count for bounded-cardinality enumeration.
const MAX_LOW_LEVEL_FACES: usize = 200_000;

/// A simplicial complex given by its facets over a fixed ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// Sorted vertex labels; bit `p` of a face mask refers to `ground[p]`.
    ground: Vec<usize>,
    /// Maximal faces, deduplicated and sorted. Empty means the void
    /// complex; `[0]` means the irrelevant complex `{∅}`.
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// The void complex (no faces): every reduced homology group is zero.
    pub fn void(ground: Vec<usize>) -> Self {
        Self::check_ground(&ground);
        SimplicialComplex { ground, facets: Vec::new() }
    }

    /// Builds a complex from faces known to contain all the given ones;
    /// non-maximal entries and duplicates are dropped.
    pub fn from_facets(ground: Vec<usize>, faces: Vec<u64>) -> Self {
        Self::check_ground(&ground);
        assert!(ground.len() <= 64, "ground set too large for bitmask faces");
        let full: u64 = if ground.is_empty() { 0 } else { (!0u64) >> (64 - ground.len()) };
        for &f in &faces {
            assert_eq!(f & !full, 0, "face mask outside ground set");
        }
        SimplicialComplex { ground, facets: maximal_masks(faces) }
    }

    fn check_ground(ground: &[usize]) {
        assert!(
            ground.windows(2).all(|w| w[0] < w[1]),
            "ground set must be strictly increasing"
        );
    }

    /// Sorted vertex labels of the ground set.
    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    /// Facet bitmasks over ground-set positions, sorted ascending.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Facets as sorted lists of ground-set labels.
    pub fn facet_vertex_sets(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|&f| {
                self.ground
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| f >> p & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect()
    }

    /// True for the void complex (no faces whatsoever).
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the irrelevant complex `{∅}`.
    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    /// Dimension: `None` for void, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
    }

    /// Whether the given position mask is a face.
    pub fn contains_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & !f == 0)
    }

    /// Dimensions of reduced homology over the given field.
    ///
    /// Entry `k` of the result is `dim H̃_{k-1}`, so index 0 reports degree
    /// -1 and the vector has length `dim + 2` (empty for the void complex).
    pub fn reduced_homology(&self, field: CoefficientField) -> Result<Vec<usize>> {
        let h = homology_from_facets(&self.facets, field)?;
        let want = match self.dim() {
            None => 0,
            Some(d) => (d + 2) as usize,
        };
        Ok(normalize_len(h, want))
    }
}

/// Pads with zeros or truncates (dropping only zeros) to the given length.
fn normalize_len(mut h: Vec<usize>, want: usize) -> Vec<usize> {
    debug_assert!(h.len() <= want || h[want..].iter().all(|&x| x == 0));
    h.resize(want, 0);
    h
}

/// Keeps only maximal masks, deduplicated, sorted ascending.
pub(crate) fn maximal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// Reduced homology dimensions from a facet list (maximal faces assumed).
///
/// Returns `h` with `h[k] = dim H̃_{k-1}`; the length may be shorter than
/// `dim + 2` when a homotopy-equivalent model was used — missing entries
/// are zero.
pub(crate) fn homology_from_facets(
    facets: &[u64],
    field: CoefficientField,
) -> Result<Vec<usize>> {
    if facets.is_empty() {
        return Ok(Vec::new()); // void complex
    }
    if facets == [0] {
        return Ok(vec![1]); // {∅}: one class in degree -1
    }
    let facets = strong_collapse(facets.to_vec());
    if facets.len() <= 1 {
        return Ok(Vec::new()); // collapsed to a simplex: contractible
    }
    let vertex_count = facets.iter().fold(0u64, |acc, &f| acc | f).count_ones();
    if facets.len() < vertex_count as usize && facets.len() <= MAX_NERVE_FACETS {
        return homology_of_faces(&nerve_faces(&facets), field);
    }
    if vertex_count > MAX_DIRECT_VERTICES {
        return Err(Error::SizeCapExceeded {
            what: "complex face enumeration",
            cap: 1usize << MAX_DIRECT_VERTICES,
        });
    }
    homology_of_faces(&faces_by_cardinality(&facets), field)
}

/// Iterated strong collapse: while some vertex `v` is dominated (every
/// facet containing `v` also contains some other fixed vertex `w`, so the
/// link of `v` is a cone), deleting `v` from every face preserves the
/// homotopy type. Returns the maximal faces of the core; a result with at
/// most one facet means the complex was contractible. A cone collapses in
/// one round per vertex, so this subsumes the classical apex shortcut.
pub(crate) fn strong_collapse(mut facets: Vec<u64>) -> Vec<u64> {
    loop {
        if facets.len() <= 1 {
            return facets;
        }
        let mut union: u64 = facets.iter().fold(0, |acc, &f| acc | f);
        let mut dominated = 0u64;
        while union != 0 {
            let bit = union & union.wrapping_neg();
            union ^= bit;
            let common = facets
                .iter()
                .filter(|&&f| f & bit != 0)
                .fold(!0u64, |acc, &f| acc & f);
            if common != bit {
                dominated = bit;
                break;
            }
        }
        if dominated == 0 {
            return facets;
        }
        facets = maximal_masks(facets.iter().map(|f| f & !dominated).collect());
    }
}

/// All faces of the union of the facet subcubes, grouped by vertex count
/// (`result[k]` lists the k-vertex faces, sorted).
pub(crate) fn faces_by_cardinality(facets: &[u64]) -> Vec<Vec<u64>> {
    let mut seen: HashSet<u64> = HashSet::new();
    for &f in facets {
        let mut sub = f;
        loop {
            seen.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    group_by_cardinality(seen)
}

pub(crate) fn group_by_cardinality(faces: impl IntoIterator<Item = u64>) -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = Vec::new();
    for mask in faces {
        let k = mask.count_ones() as usize;
        if levels.len() <= k {
            levels.resize_with(k + 1, Vec::new);
        }
        levels[k].push(mask);
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    levels
}

/// Faces of the nerve of the facet cover: a set of facets spans a nerve
/// face exactly when it has a common vertex. Nerve faces are masks over
/// facet indices, computed by a subset DP over the (at most 2^f) index
/// sets.
fn nerve_faces(facets: &[u64]) -> Vec<Vec<u64>> {
    let f = facets.len();
    debug_assert!(f <= MAX_NERVE_FACETS);
    let mut meet = vec![0u64; 1 << f];
    meet[0] = !0u64;
    let mut faces: Vec<u64> = vec![0];
    for s in 1..(1u64 << f) {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let m = meet[rest as usize] & facets[low];
        meet[s as usize] = m;
        if m != 0 {
            faces.push(s);
        }
    }
    group_by_cardinality(faces)
}

/// Reduced homology dimensions of an explicit face list (`faces[k]` = the
/// k-vertex faces, each level sorted). Entry `k` of the result is
/// `dim H̃_{k-1}`.
pub(crate) fn homology_of_faces(
    faces: &[Vec<u64>],
    field: CoefficientField,
) -> Result<Vec<usize>> {
    let levels = faces.len();
    if levels == 0 {
        return Ok(Vec::new());
    }
    let mut ranks = vec![0usize; levels + 1];
    for k in 1..levels {
        ranks[k] = boundary_rank(&faces[k], &faces[k - 1], field)?;
    }
    Ok((0..levels)
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect())
}

/// Reduced homology dimensions `h[k] = dim H̃_{k-1}` for `k <= max_level`
/// only. Exact despite ignoring higher levels, because each group needs
/// only the two adjacent boundary ranks; only faces of cardinality up to
/// `max_level + 1` are enumerated, which keeps low-degree queries cheap on
/// complexes whose full face lattice is large. Facets should be maximal.
pub(crate) fn homology_low_levels(
    facets: &[u64],
    max_level: usize,
    field: CoefficientField,
) -> Result<Vec<usize>> {
    let mut h = vec![0usize; max_level + 1];
    if facets.is_empty() {
        return Ok(h); // void complex
    }
    if facets == [0] {
        h[0] = 1; // {∅}: one class in degree -1
        return Ok(h);
    }
    let facets = strong_collapse(facets.to_vec());
    if facets.len() <= 1 {
        return Ok(h); // collapsed to a simplex: contractible
    }
    let levels = faces_up_to_cardinality(&facets, max_level + 1)?;
    let mut ranks = vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        ranks[k] = boundary_rank(&levels[k], &levels[k - 1], field)?;
    }
    for k in 0..levels.len().min(max_level + 1) {
        h[k] = levels[k].len() - ranks[k] - ranks[k + 1];
    }
    Ok(h)
}

/// Faces with at most `max_card` vertices, grouped by vertex count, each
/// level sorted. Faces are grown canonically (only by vertices above their
/// current highest bit), so each appears once; enumeration stops early at
/// the first empty level and is capped at [`MAX_LOW_LEVEL_FACES`] faces.
pub(crate) fn faces_up_to_cardinality(facets: &[u64], max_card: usize) -> Result<Vec<Vec<u64>>> {
    let union: u64 = facets.iter().fold(0, |acc, &f| acc | f);
    let mut levels: Vec<Vec<u64>> = vec![vec![0u64]];
    let mut total = 1usize;
    for k in 1..=max_card {
        let mut next: Vec<u64> = Vec::new();
        for &face in &levels[k - 1] {
            let above = match 64 - face.leading_zeros() {
                64 => 0u64,
                shift => !0u64 << shift,
            };
            let mut cand = union & above;
            while cand != 0 {
                let bit = cand & cand.wrapping_neg();
                cand ^= bit;
                let grown = face | bit;
                if facets.iter().any(|&f| grown & !f == 0) {
                    next.push(grown);
                }
            }
        }
        total += next.len();
        if total > MAX_LOW_LEVEL_FACES {
            return Err(Error::SizeCapExceeded {
                what: "complex face enumeration",
                cap: MAX_LOW_LEVEL_FACES,
            });
        }
        let done = next.is_empty();
        next.sort_unstable();
        levels.push(next);
        if done {
            break;
        }
    }
    Ok(levels)
}

/// Largest `k` with `H̃_{k-1}` nonzero, computing boundary ranks from the
/// top dimension downward and stopping at the first nonvanishing group.
pub(crate) fn top_nonvanishing(
    faces: &[Vec<u64>],
    field: CoefficientField,
) -> Result<Option<usize>> {
    let levels = faces.len();
    let mut rank_above = 0usize;
    for k in (0..levels).rev() {
        let rank_k = if k == 0 {
            0
        } else {
            boundary_rank(&faces[k], &faces[k - 1], field)?
        };
        let h = faces[k].len() - rank_k - rank_above;
        if h > 0 {
            return Ok(Some(k));
        }
        rank_above = rank_k;
    }
    Ok(None)
}

/// Rank of the simplicial boundary map from the span of `upper` (k-vertex
/// faces) to the span of `lower` ((k-1)-vertex faces). Both levels must be
/// sorted; signs follow the usual alternating-sum convention by ascending
/// bit position. The k = 1 case is the augmentation onto the empty face.
fn boundary_rank(upper: &[u64], lower: &[u64], field: CoefficientField) -> Result<usize> {
    if upper.is_empty() || lower.is_empty() {
        return Ok(0);
    }
    let rows = upper.len();
    let cols = lower.len();
    let entries_len = rows
        .checked_mul(cols)
        .filter(|&e| e <= MAX_BOUNDARY_ENTRIES)
        .ok_or(Error::SizeCapExceeded {
            what: "boundary matrix",
            cap: MAX_BOUNDARY_ENTRIES,
        })?;
    let mut entries = vec![0i8; entries_len];
    for (r, &face) in upper.iter().enumerate() {
        let mut remaining = face;
        let mut sign = 1i8;
        while remaining != 0 {
            let bit = remaining & remaining.wrapping_neg();
            let sub = face ^ bit;
            let c = lower
                .binary_search(&sub)
                .expect("boundary of a face must be a face");
            entries[r * cols + c] = sign;
            sign = -sign;
            remaining ^= bit;
        }
    }
    Ok(match field.characteristic() {
        0 => rank_over_q(rows, cols, &entries),
        p => rank_mod_p(rows, cols, &entries, p),
    })
}
