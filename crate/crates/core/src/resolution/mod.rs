//! Multigraded Betti numbers and Castelnuovo-Mumford regularity of
//! monomial ideals, by exact arithmetic over the rationals or a prime
//! field.
//!
//! The primary route computes, for every multidegree in the lcm closure of
//! the generators, the reduced homology of the upper Koszul complex at that
//! multidegree; `β_{i,b}` is the dimension of `H̃_{i-1}`. Regularity is the
//! maximum of `|b| - i` over nonzero entries.
//!
//! An independent cross-check route polarizes the ideal to a squarefree
//! one (which preserves regularity), passes to the Stanley-Reisner complex
//! of the polarization, and reads regularity off reduced homology of its
//! restrictions to the union-closed family of generator supports. The two
//! routes share no code beyond the homology kernel and are used to validate
//! each other.
//!
//! All potentially explosive steps (candidate sets, face enumerations,
//! boundary matrices, polarization variable counts) are capped and report
//! honest errors instead of degrading.

mod complex;
mod linalg;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;

pub use complex::SimplicialComplex;

use crate::error::{Error, Result};
use crate::ideal::{lcm_closure, Monomial, MonomialIdeal};
use complex::{
    group_by_cardinality, homology_from_facets, homology_low_levels, maximal_masks,
    top_nonvanishing,
};

/// Default cap on the number of candidate multidegrees (lcm closure or
/// full exponent box) and on restriction supports in the squarefree route.
pub const DEFAULT_CLOSURE_CAP: usize = 200_000;
/// Default cap on the number of polarization variables.
pub const DEFAULT_POLAR_VAR_CAP: usize = 24;
/// Default cap on faces enumerated per restricted Stanley-Reisner complex.
pub const DEFAULT_FACE_BUDGET: usize = 200_000;

/// An exact coefficient field: the rationals (characteristic 0) or a prime
/// field `F_p` with `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoefficientField {
    characteristic: u64,
}

impl CoefficientField {
    /// The field of rational numbers.
    pub fn rationals() -> Self {
        CoefficientField { characteristic: 0 }
    }

    /// The prime field `F_p`. Rejects composites and primes at or above
    /// `2^31` (products must fit in `u64` during elimination).
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::BoundsExceeded(format!(
                "field characteristic {p} exceeds 2^31 - 1"
            )));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CoefficientField { characteristic: p })
    }

    /// Characteristic 0 means the rationals, otherwise a prime.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            Ok(Self::rationals())
        } else {
            Self::prime(characteristic)
        }
    }

    /// 0 for the rationals, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The upper Koszul complex of `ideal` at multidegree `b`: the ground set
/// is the support of `b`, and a subset `σ` is a face exactly when
/// `x^b / x^σ` lies in the ideal. Equivalently it is the union, over
/// generators `g` dividing `x^b`, of the full subcubes on
/// `{v in supp(b) : g_v < b_v}`; those subsets are the facet candidates.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    if ideal.n_vars() != b.n_vars() {
        return Err(Error::DimensionMismatch(ideal.n_vars(), b.n_vars()));
    }
    if b.n_vars() > 64 {
        return Err(Error::BoundsExceeded(format!(
            "upper Koszul complexes support at most 64 variables, got {}",
            b.n_vars()
        )));
    }
    let ground: Vec<usize> = (1..=b.n_vars()).filter(|&i| b.exp(i) > 0).collect();
    let gen_data: Vec<(u64, &[u32])> = ideal
        .gens()
        .iter()
        .map(|g| (g.support_mask(), g.exps()))
        .collect();
    let facets = koszul_facets(&gen_data, b.exps());
    Ok(SimplicialComplex::from_facets(ground, facets))
}

/// Facet candidate masks (over support positions of `b`) of the upper
/// Koszul complex; empty when no generator divides `x^b`.
fn koszul_facets(gens: &[(u64, &[u32])], b: &[u32]) -> Vec<u64> {
    let mut bmask = 0u64;
    let mut supp: Vec<usize> = Vec::new();
    for (i, &e) in b.iter().enumerate() {
        if e > 0 {
            bmask |= 1 << i;
            supp.push(i);
        }
    }
    let mut facets: Vec<u64> = Vec::new();
    'gens: for &(gmask, gexps) in gens {
        if gmask & !bmask != 0 {
            continue; // generator involves a variable outside supp(b)
        }
        let mut allowed = 0u64;
        for (p, &v) in supp.iter().enumerate() {
            if gexps[v] > b[v] {
                continue 'gens; // does not divide x^b
            }
            if gexps[v] < b[v] {
                allowed |= 1 << p;
            }
        }
        facets.push(allowed);
    }
    facets
}

/// Multigraded Betti numbers of a monomial ideal over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field_char: u64,
    /// `(homological degree i, multidegree b) -> β_{i,b}`, nonzero only.
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    /// Characteristic of the coefficient field the table was computed over.
    pub fn field_char(&self) -> u64 {
        self.field_char
    }

    /// Nonzero multigraded entries, keyed by `(i, b)`.
    pub fn multigraded(&self) -> &BTreeMap<(usize, Vec<u32>), usize> {
        &self.entries
    }

    /// Coarsely graded table: `(i, total degree j) -> β_{i,j}`.
    pub fn coarse(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for ((i, b), &d) in &self.entries {
            let j: usize = b.iter().map(|&e| e as usize).sum();
            *out.entry((*i, j)).or_insert(0) += d;
        }
        out
    }

    /// A single coarse Betti number `β_{i,j}`.
    pub fn betti(&self, i: usize, j: usize) -> usize {
        self.coarse().get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`; `None` for the empty table (zero
    /// ideal). For an ideal this equals the regularity of the ideal, and
    /// exceeds the regularity of the quotient ring by exactly one.
    pub fn regularity(&self) -> Option<usize> {
        self.entries
            .iter()
            .map(|((i, b), _)| b.iter().map(|&e| e as usize).sum::<usize>() - i)
            .max()
    }
}

/// Betti table via upper Koszul homology at every lcm-closure multidegree.
pub fn betti_table(ideal: &MonomialIdeal, field: CoefficientField) -> Result<BettiTable> {
    betti_table_with_cap(ideal, field, DEFAULT_CLOSURE_CAP)
}

/// As [`betti_table`], with an explicit cap on candidate multidegrees.
pub fn betti_table_with_cap(
    ideal: &MonomialIdeal,
    field: CoefficientField,
    closure_cap: usize,
) -> Result<BettiTable> {
    let candidates = lcm_closure(ideal, closure_cap)?;
    betti_table_at(ideal, field, candidates.iter().map(|m| m.exps().to_vec()).collect())
}

/// Betti table scanning the entire exponent box `∏ [0, max_i]` instead of
/// the lcm closure — a deliberately redundant route for cross-checking
/// that no multidegree outside the closure carries homology.
pub fn betti_table_full_box(ideal: &MonomialIdeal, field: CoefficientField) -> Result<BettiTable> {
    let maxes = ideal.max_exponents();
    let mut size: usize = 1;
    for &m in &maxes {
        size = size
            .checked_mul(m as usize + 1)
            .filter(|&s| s <= DEFAULT_CLOSURE_CAP)
            .ok_or(Error::SizeCapExceeded {
                what: "full box multidegree",
                cap: DEFAULT_CLOSURE_CAP,
            })?;
    }
    let mut candidates: Vec<Vec<u32>> = Vec::with_capacity(size);
    let mut cur = vec![0u32; maxes.len()];
    loop {
        candidates.push(cur.clone());
        let mut i = 0;
        loop {
            if i == maxes.len() {
                return betti_table_at(ideal, field, candidates);
            }
            if cur[i] < maxes[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

fn betti_table_at(
    ideal: &MonomialIdeal,
    field: CoefficientField,
    candidates: Vec<Vec<u32>>,
) -> Result<BettiTable> {
    if ideal.n_vars() > 64 {
        return Err(Error::BoundsExceeded(format!(
            "Betti tables support at most 64 variables, got {}",
            ideal.n_vars()
        )));
    }
    let gen_data: Vec<(u64, &[u32])> = ideal
        .gens()
        .iter()
        .map(|g| (g.support_mask(), g.exps()))
        .collect();
    let per_candidate: Vec<Vec<(usize, Vec<u32>, usize)>> = candidates
        .par_iter()
        .map(|b| {
            let facets = koszul_facets(&gen_data, b);
            if facets.is_empty() {
                return Ok(Vec::new()); // x^b not in the ideal
            }
            let h = homology_from_facets(&maximal_masks(facets), field)?;
            Ok(h.into_iter()
                .enumerate()
                .filter(|&(_, d)| d > 0)
                .map(|(i, d)| (i, b.clone(), d))
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    for chunk in per_candidate {
        for (i, b, d) in chunk {
            entries.insert((i, b), d);
        }
    }
    Ok(BettiTable { field_char: field.characteristic(), entries })
}

/// Castelnuovo-Mumford regularity of a monomial ideal (not the quotient:
/// `reg(S/I) = reg(I) - 1`). The unit ideal has regularity 0; the zero
/// ideal is rejected.
///
/// Same Koszul-homology route as [`betti_table`], but pruned: candidates
/// are scanned in descending total degree `j` with a running maximum `r`
/// (seeded by the largest generator degree, always a lower bound), so only
/// homology levels `i < j - r` — which could still improve on `r` — are
/// computed, and the scan stops once `j <= r`. The result equals the
/// maximum of `j - i` over the full table.
pub fn regularity(ideal: &MonomialIdeal, field: CoefficientField) -> Result<usize> {
    regularity_with_cap(ideal, field, DEFAULT_CLOSURE_CAP)
}

/// As [`regularity`], with an explicit cap on candidate multidegrees.
pub fn regularity_with_cap(
    ideal: &MonomialIdeal,
    field: CoefficientField,
    closure_cap: usize,
) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.n_vars() > 64 {
        return Err(Error::BoundsExceeded(format!(
            "Betti tables support at most 64 variables, got {}",
            ideal.n_vars()
        )));
    }
    let mut candidates = lcm_closure(ideal, closure_cap)?;
    candidates.sort_unstable_by_key(|m| std::cmp::Reverse(m.total_degree()));
    let gen_data: Vec<(u64, &[u32])> = ideal
        .gens()
        .iter()
        .map(|g| (g.support_mask(), g.exps()))
        .collect();
    let mut best = ideal
        .gens()
        .iter()
        .map(|g| g.total_degree() as usize)
        .max()
        .expect("nonzero ideal has generators");
    for b in &candidates {
        let j = b.total_degree() as usize;
        if j <= best {
            break; // no remaining candidate can beat the current maximum
        }
        let facets = maximal_masks(koszul_facets(&gen_data, b.exps()));
        if facets.is_empty() {
            continue;
        }
        let max_level = j - best - 1;
        let h = homology_low_levels(&facets, max_level, field)?;
        if let Some(i) = h.iter().position(|&d| d > 0) {
            best = j - i;
        }
    }
    Ok(best)
}

/// Polarization: each power `x_i^e` in a generator becomes a product of
/// `e` distinct variables `x_{i,1} … x_{i,e}`. The result is squarefree,
/// has the same Betti table (hence regularity), and lives in `Σ_i max_i`
/// variables, which must not exceed the cap.
pub fn polarize(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    polarize_with_cap(ideal, DEFAULT_POLAR_VAR_CAP)
}

/// As [`polarize`], with an explicit cap on the variable count.
pub fn polarize_with_cap(ideal: &MonomialIdeal, var_cap: usize) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let maxes = ideal.max_exponents();
    let total: usize = maxes.iter().map(|&m| m as usize).sum();
    if total > var_cap {
        return Err(Error::GeneratorCapExceeded { cap: var_cap });
    }
    let mut offsets = Vec::with_capacity(maxes.len());
    let mut acc = 0usize;
    for &m in &maxes {
        offsets.push(acc);
        acc += m as usize;
    }
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; total];
            for (i, &e) in g.exps().iter().enumerate() {
                for c in 0..e as usize {
                    exps[offsets[i] + c] = 1;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    Ok(MonomialIdeal::new(total, gens))
}

/// Regularity by the independent squarefree route: polarize, then take the
/// maximum over restriction supports `W` (the union closure of generator
/// supports) of `2 +` the top degree with nonvanishing reduced homology of
/// the restricted Stanley-Reisner complex. Restrictions are processed by
/// decreasing `|W|` so that the bound `contribution ≤ |W| + 1` prunes the
/// tail once a maximum is established.
pub fn regularity_via_polarization(
    ideal: &MonomialIdeal,
    field: CoefficientField,
) -> Result<usize> {
    regularity_via_polarization_with_caps(
        ideal,
        field,
        DEFAULT_POLAR_VAR_CAP,
        DEFAULT_FACE_BUDGET,
    )
}

/// As [`regularity_via_polarization`], with explicit caps.
pub fn regularity_via_polarization_with_caps(
    ideal: &MonomialIdeal,
    field: CoefficientField,
    var_cap: usize,
    face_budget: usize,
) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Ok(0);
    }
    let polarized = polarize_with_cap(ideal, var_cap)?;
    squarefree_regularity(&polarized, field, face_budget)
}

/// Regularity of a squarefree monomial ideal from reduced homology of
/// restrictions of its Stanley-Reisner complex.
fn squarefree_regularity(
    ideal: &MonomialIdeal,
    field: CoefficientField,
    face_budget: usize,
) -> Result<usize> {
    let gen_masks: Vec<u64> = ideal.gens().iter().map(|g| g.support_mask()).collect();
    debug_assert!(ideal.gens().iter().all(|g| g.exps().iter().all(|&e| e <= 1)));
    // Union closure of generator supports: every multidegree with a nonzero
    // Betti number is such a union.
    let mut seen: BTreeSet<u64> = gen_masks.iter().copied().collect();
    let mut queue: Vec<u64> = seen.iter().copied().collect();
    while let Some(w) = queue.pop() {
        for &g in &gen_masks {
            let u = w | g;
            if seen.insert(u) {
                if seen.len() > DEFAULT_CLOSURE_CAP {
                    return Err(Error::SizeCapExceeded {
                        what: "restriction support candidate",
                        cap: DEFAULT_CLOSURE_CAP,
                    });
                }
                queue.push(u);
            }
        }
    }
    let mut supports: Vec<u64> = seen.into_iter().collect();
    supports.sort_unstable_by_key(|w| std::cmp::Reverse(w.count_ones()));

    let mut best = 0usize;
    for w in supports {
        let k = w.count_ones() as usize;
        if k + 1 <= best {
            break; // sorted by size: nothing later can contribute more
        }
        let faces = restricted_faces(w, &gen_masks, face_budget)?;
        if faces.len() == 1 {
            // Only the empty face: contributes homology in degree -1.
            best = best.max(1);
            continue;
        }
        let face_set: HashSet<u64> = faces.iter().copied().collect();
        let vars: Vec<u32> = (0..64).filter(|&v| w >> v & 1 == 1).collect();
        let facets: Vec<u64> = faces
            .iter()
            .copied()
            .filter(|&f| vars.iter().all(|&v| f >> v & 1 == 1 || !face_set.contains(&(f | 1 << v))))
            .collect();
        if facets.iter().fold(!0u64, |acc, &f| acc & f) != 0 {
            continue; // cone: contractible restriction
        }
        let levels = if facets.len() < k && facets.len() <= 20 {
            nerve_face_levels(&facets)
        } else {
            group_by_cardinality(faces)
        };
        if let Some(level) = top_nonvanishing(&levels, field)? {
            best = best.max(level + 1);
        }
    }
    Ok(best)
}

/// Faces of the Stanley-Reisner complex restricted to the support `w`: all
/// subsets of `w` containing no generator support. Enumerated by depth
/// first search over ascending variable positions; each step only needs to
/// test generators through the newly added variable.
fn restricted_faces(w: u64, gen_masks: &[u64], face_budget: usize) -> Result<Vec<u64>> {
    let vars: Vec<u32> = (0..64).filter(|&v| w >> v & 1 == 1).collect();
    let by_var: Vec<Vec<u64>> = vars
        .iter()
        .map(|&v| {
            gen_masks
                .iter()
                .copied()
                .filter(|&g| g & !w == 0 && g >> v & 1 == 1)
                .collect()
        })
        .collect();
    let mut faces: Vec<u64> = vec![0];
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((sigma, start)) = stack.pop() {
        for idx in start..vars.len() {
            let extended = sigma | 1 << vars[idx];
            if by_var[idx].iter().all(|&g| g & !extended != 0) {
                if faces.len() >= face_budget {
                    return Err(Error::SizeCapExceeded {
                        what: "restricted complex face",
                        cap: face_budget,
                    });
                }
                faces.push(extended);
                stack.push((extended, idx + 1));
            }
        }
    }
    Ok(faces)
}

/// Faces of the nerve of a facet cover, grouped by cardinality; a set of
/// facets spans a nerve face exactly when it has a common vertex. The
/// nerve is homotopy equivalent to the complex itself, since all nonempty
/// intersections of facets are simplices.
fn nerve_face_levels(facets: &[u64]) -> Vec<Vec<u64>> {
    let f = facets.len();
    debug_assert!(f <= 20 && !facets.contains(&0));
    let mut meet = vec![0u64; 1 << f];
    meet[0] = !0u64;
    let mut faces: Vec<u64> = vec![0];
    for s in 1..(1u64 << f) {
        let low = s.trailing_zeros() as usize;
        let m = meet[(s & (s - 1)) as usize] & facets[low];
        meet[s as usize] = m;
        if m != 0 {
            faces.push(s);
        }
    }
    group_by_cardinality(faces)
}
