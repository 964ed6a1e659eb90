//! Monomials and monomial ideals with exact integer exponents.
//!
//! Ideals are kept in a canonical form — the unique minimal generating set,
//! sorted in graded lexicographic order — so structural equality of the type
//! is ideal equality. The zero ideal has no generators; the unit ideal has
//! the single generator 1.
//!
//! Powers of edge ideals are computed two independent ways on purpose:
//! ordinary powers by repeated products, symbolic powers by intersecting
//! powers of the minimal vertex cover primes. Nothing here ever collapses
//! one into the other; verifying when they agree is the caller's job.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// Default cap on the size of a minimal generating set (and, with a fixed
/// safety multiple, on transient candidate lists) during ideal arithmetic.
pub const DEFAULT_GEN_CAP: usize = 5_000;

/// Transient candidate lists may exceed the generator cap by this factor
/// before the computation aborts; only minimalized sets must obey the cap.
const CANDIDATE_SLACK: usize = 64;

/// A monomial in `n` variables, stored as its exponent vector. Variables are
/// 1-based to match graph vertex labels: `exps[i]` is the exponent of
/// `x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn var(i: usize, n: usize) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::InvalidVertex { vertex: i, n });
        }
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Ok(Monomial { exps })
    }

    /// Product of variables `x_i` for each `i` in `vars`.
    pub fn from_vars(vars: &[usize], n: usize) -> Result<Self> {
        let mut exps = vec![0u32; n];
        for &i in vars {
            if i < 1 || i > n {
                return Err(Error::InvalidVertex { vertex: i, n });
            }
            exps[i - 1] += 1;
        }
        Ok(Monomial { exps })
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bitmask of variables with positive exponent (bit `i-1` for `x_i`).
    /// Valid for up to 64 variables, which bounds everything in this crate.
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { exps }
    }

    /// The colon quotient `self / gcd(self, other)`: the minimal `q` with
    /// `other * q` divisible by... more precisely, `q` generates
    /// `((self) : other)`.
    pub fn colon_by(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect();
        Monomial { exps }
    }

    /// Graded lexicographic order: lower total degree first, and within a
    /// degree the lexicographically larger exponent vector first (so
    /// `x1^2 < x1*x2 < x2^2` reads in the usual written order).
    fn grlex(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex(other)
    }
}

impl fmt::Display for Monomial {
    /// Renders like `x3^2*x5`; the unit monomial is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

#[derive(Deserialize)]
struct RawIdeal {
    n: usize,
    gens: Vec<Vec<u32>>,
}

impl TryFrom<RawIdeal> for MonomialIdeal {
    type Error = Error;
    fn try_from(raw: RawIdeal) -> Result<MonomialIdeal> {
        for g in &raw.gens {
            if g.len() != raw.n {
                return Err(Error::DimensionMismatch(g.len(), raw.n));
            }
        }
        Ok(MonomialIdeal::new(raw.n, raw.gens.into_iter().map(Monomial::new).collect()))
    }
}

/// A monomial ideal in `n` variables, stored as its unique minimal
/// generating set in graded lexicographic order. `gens` empty means the zero
/// ideal; `gens == [1]` means the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing and sorting.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.n_vars() == n));
        MonomialIdeal { n, gens: minimalize(gens) }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::unit(n)] }
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    /// Minimal generators in canonical (graded lex) order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// Monomial membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Per-variable maximum exponent over the generators (the exponent box).
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut maxes = vec![0u32; self.n];
        for g in &self.gens {
            for (i, &e) in g.exps().iter().enumerate() {
                maxes[i] = maxes[i].max(e);
            }
        }
        maxes
    }

    /// Intersection via pairwise lcms of generators followed by
    /// minimalization. `cap` bounds the resulting minimal generating set.
    pub fn intersect_with_cap(&self, other: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.n));
        }
        let raw = self.gens.len() * other.gens.len();
        if raw > cap.saturating_mul(CANDIDATE_SLACK) {
            return Err(Error::GeneratorCapExceeded { cap });
        }
        let mut cands = Vec::with_capacity(raw);
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.lcm(b));
            }
        }
        let gens = minimalize(cands);
        if gens.len() > cap {
            return Err(Error::GeneratorCapExceeded { cap });
        }
        Ok(MonomialIdeal { n: self.n, gens })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.intersect_with_cap(other, DEFAULT_GEN_CAP)
    }

    /// Ideal sum (concatenate generators, minimalize).
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal { n: self.n, gens: minimalize(gens) })
    }

    /// Sum with a single extra generator; `(self, m)`.
    pub fn plus_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.n_vars() != self.n {
            return Err(Error::DimensionMismatch(m.n_vars(), self.n));
        }
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        Ok(MonomialIdeal { n: self.n, gens: minimalize(gens) })
    }

    /// Ideal product.
    pub fn multiply_with_cap(&self, other: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.n));
        }
        let raw = self.gens.len() * other.gens.len();
        if raw > cap.saturating_mul(CANDIDATE_SLACK) {
            return Err(Error::GeneratorCapExceeded { cap });
        }
        let mut cands = Vec::with_capacity(raw);
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.mul(b));
            }
        }
        let gens = minimalize(cands);
        if gens.len() > cap {
            return Err(Error::GeneratorCapExceeded { cap });
        }
        Ok(MonomialIdeal { n: self.n, gens })
    }

    /// Ordinary power `self^s` by repeated multiplication; `s = 0` gives the
    /// unit ideal.
    pub fn power_with_cap(&self, s: u32, cap: usize) -> Result<MonomialIdeal> {
        if s == 0 {
            return Ok(MonomialIdeal::unit(self.n));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.multiply_with_cap(self, cap)?;
        }
        Ok(acc)
    }

    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        self.power_with_cap(s, DEFAULT_GEN_CAP)
    }

    /// Colon ideal `(self : m)`: generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.n_vars() != self.n {
            return Err(Error::DimensionMismatch(m.n_vars(), self.n));
        }
        let cands = self.gens.iter().map(|g| g.colon_by(m)).collect();
        Ok(MonomialIdeal { n: self.n, gens: minimalize(cands) })
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }
}

/// Reduces a generating list to the unique minimal generating set, sorted in
/// graded lex order: duplicates collapse, and any monomial divisible by a
/// strictly smaller one is dropped.
fn minimalize(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    cands.sort_unstable();
    cands.dedup();
    // Ascending degree: only earlier (strictly smaller-degree) entries can
    // divide later ones. Support masks give a cheap pre-filter.
    let mut kept: Vec<(u64, u32, Monomial)> = Vec::new();
    'outer: for m in cands {
        let mask = m.support_mask();
        let deg = m.total_degree();
        for (kmask, kdeg, k) in &kept {
            if *kdeg >= deg {
                break;
            }
            if kmask & !mask == 0 && k.divides(&m) {
                continue 'outer;
            }
        }
        kept.push((mask, deg, m));
    }
    kept.into_iter().map(|(_, _, m)| m).collect()
}

/// All monomials of total degree `s` in the variables listed in `vars`
/// (1-based labels), in an ambient ring of `n` variables: the generators of
/// the `s`-th power of the prime ideal on those variables.
pub fn prime_power(vars: &[usize], s: u32, n: usize) -> Result<MonomialIdeal> {
    for &v in vars {
        if v < 1 || v > n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
    }
    if s == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    if vars.is_empty() {
        // The zero prime; its positive powers are zero.
        return Ok(MonomialIdeal::zero(n));
    }
    let mut gens = Vec::new();
    let mut current = Monomial::unit(n);
    fill_degrees(&mut current, vars, 0, s, &mut gens);
    Ok(MonomialIdeal { n, gens: minimalize(gens) })
}

fn fill_degrees(
    current: &mut Monomial,
    vars: &[usize],
    idx: usize,
    remaining: u32,
    out: &mut Vec<Monomial>,
) {
    if idx + 1 == vars.len() {
        let mut m = current.clone();
        m.exps[vars[idx] - 1] += remaining;
        out.push(m);
        return;
    }
    for take in 0..=remaining {
        current.exps[vars[idx] - 1] += take;
        fill_degrees(current, vars, idx + 1, remaining - take, out);
        current.exps[vars[idx] - 1] -= take;
    }
}

/// The edge ideal `(x_u x_v : {u,v} an edge)`. The edgeless graph gives the
/// zero ideal.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    let gens = g
        .edges()
        .iter()
        .map(|&(u, v)| Monomial::from_vars(&[u, v], n).expect("edge labels are in range"))
        .collect();
    MonomialIdeal { n, gens: minimalize(gens) }
}

/// The `s`-th symbolic power of the edge ideal of `g`: the intersection of
/// `p_C^s` over all minimal vertex covers `C`, computed incrementally with
/// minimalization after each step (covers in ascending size order). For
/// `s <= 0` this is the whole ring, i.e. the unit ideal.
pub fn symbolic_power_with_cap(g: &Graph, s: i64, cap: usize) -> Result<MonomialIdeal> {
    let n = g.n();
    if s <= 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let s = u32::try_from(s).expect("positive exponent fits in u32");
    let covers = g.minimal_vertex_covers()?;
    // Covers come back sorted by size ascending already.
    let mut acc: Option<MonomialIdeal> = None;
    for cover in &covers {
        let next = match acc {
            None => prime_power(cover, s, n)?,
            Some(ideal) => intersect_prime_power(&ideal, cover, s, cap)?,
        };
        if next.num_gens() > cap {
            return Err(Error::GeneratorCapExceeded { cap });
        }
        acc = Some(next);
    }
    Ok(acc.expect("a graph with edges has at least one cover"))
}

pub fn symbolic_power(g: &Graph, s: i64) -> Result<MonomialIdeal> {
    symbolic_power_with_cap(g, s, DEFAULT_GEN_CAP)
}

/// Intersection `I ∩ p_C^s`, specialized: a generator `u` of `I` needs its
/// degree on `C` topped up to `s`, so the candidates are `u * w` over the
/// monomials `w` of degree `s - deg_C(u)` in the `C` variables. This produces
/// the same minimalized result as pairwise lcms against `gens(p_C^s)` with
/// far fewer candidates.
fn intersect_prime_power(
    ideal: &MonomialIdeal,
    cover: &[usize],
    s: u32,
    cap: usize,
) -> Result<MonomialIdeal> {
    let n = ideal.n;
    let mut cands: Vec<Monomial> = Vec::new();
    for u in &ideal.gens {
        let have: u32 = cover.iter().map(|&v| u.exp(v)).sum();
        if have >= s {
            cands.push(u.clone());
        } else {
            let mut base = u.clone();
            fill_degrees(&mut base, cover, 0, s - have, &mut cands);
        }
        if cands.len() > cap.saturating_mul(CANDIDATE_SLACK) {
            return Err(Error::GeneratorCapExceeded { cap });
        }
    }
    let gens = minimalize(cands);
    if gens.len() > cap {
        return Err(Error::GeneratorCapExceeded { cap });
    }
    Ok(MonomialIdeal { n, gens })
}

/// Closure of the generator multidegrees under pairwise lcm (the lcm
/// lattice, minus the empty join). Every nonzero Betti multidegree lies in
/// this set. `cap` bounds the candidate count. Output is sorted by
/// exponent vector.
pub fn lcm_closure(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    if ideal.n <= 16 && ideal.gens.iter().all(|g| g.exps().iter().all(|&e| e <= u8::MAX as u32)) {
        lcm_closure_packed(ideal, cap)
    } else {
        lcm_closure_generic(ideal, cap)
    }
}

/// Fast path for at most 16 variables with exponents below 256: exponent
/// vectors pack into one `u128` (joins never exceed generator exponents),
/// so membership checks hash a single word.
fn lcm_closure_packed(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    let n = ideal.n;
    let gens: Vec<[u8; 16]> = ideal
        .gens
        .iter()
        .map(|g| {
            let mut bytes = [0u8; 16];
            for (i, &e) in g.exps().iter().enumerate() {
                bytes[i] = e as u8;
            }
            bytes
        })
        .collect();
    let mut seen: HashSet<u128> = gens.iter().map(|b| u128::from_le_bytes(*b)).collect();
    let mut queue: Vec<[u8; 16]> = gens.clone();
    while let Some(m) = queue.pop() {
        for g in &gens {
            let mut join = [0u8; 16];
            for i in 0..16 {
                join[i] = m[i].max(g[i]);
            }
            if seen.insert(u128::from_le_bytes(join)) {
                if seen.len() > cap {
                    return Err(Error::GeneratorCapExceeded { cap });
                }
                queue.push(join);
            }
        }
    }
    let mut out: Vec<Vec<u32>> = seen
        .into_iter()
        .map(|key| key.to_le_bytes()[..n].iter().map(|&b| b as u32).collect())
        .collect();
    out.sort_unstable();
    Ok(out.into_iter().map(Monomial::new).collect())
}

fn lcm_closure_generic(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    let n = ideal.n;
    let mut seen: BTreeSet<Vec<u32>> = ideal.gens.iter().map(|g| g.exps().to_vec()).collect();
    let mut queue: Vec<Vec<u32>> = seen.iter().cloned().collect();
    let mut join = vec![0u32; n];
    while let Some(m) = queue.pop() {
        for g in &ideal.gens {
            for (j, (&a, &b)) in m.iter().zip(g.exps()).enumerate() {
                join[j] = a.max(b);
            }
            if !seen.contains(join.as_slice()) {
                if seen.len() >= cap {
                    return Err(Error::GeneratorCapExceeded { cap });
                }
                seen.insert(join.clone());
                queue.push(join.clone());
            }
        }
    }
    Ok(seen.into_iter().map(Monomial::new).collect())
}
