//! Exact probability tables on `V(G)^S`, conditionally independent couplings,
//! relative entropy, and the coupling measure of a reflection complex.
//!
//! Probabilities are exact rationals. Entropies involve logarithms and are
//! evaluated in 256-bit binary floating point; inequalities between them are
//! checked against a tolerance (default `1e-9`).

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::ReflectionComplex;
use crate::error::{Error, Result};
use crate::graph::{FrameGraph, TargetGraph};
use crate::setfun::{s_mask, t_is_zero, GroundSet, Rational, Subset, Vertex};

/// High-precision real used for entropies.
pub type Real = FBig<HalfEven, 2>;

/// Significand bits for entropy arithmetic.
pub const PRECISION: usize = 256;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_STATE_CAP: u128 = 10_000_000;

/// An exact distribution on `V(G)^coords`. Tuples hold target vertex
/// indices (positions in the target's vertex list), one per coordinate.
#[derive(Clone, PartialEq, Eq)]
pub struct DistTable {
    target: TargetGraph,
    coords: Vec<Vertex>,
    probs: BTreeMap<Vec<u32>, Rational>,
}

impl fmt::Debug for DistTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DistTable").field("coords", &self.coords).field("support", &self.probs.len()).finish()
    }
}

impl DistTable {
    /// Validates positivity, the exact total of 1, and tuple shapes.
    pub fn new(target: TargetGraph, coords: Vec<Vertex>, probs: BTreeMap<Vec<u32>, Rational>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        if let Some(d) = coords.iter().find(|c| !seen.insert(**c)) {
            return Err(Error::DuplicateVertex(*d));
        }
        let n = target.vertex_count() as u32;
        let mut total = Rational::zero();
        for (t, p) in &probs {
            if t.len() != coords.len() || t.iter().any(|&i| i >= n) {
                return Err(Error::Parse(format!("tuple {t:?} does not fit {} coordinates", coords.len())));
            }
            if !p.is_positive() {
                return Err(Error::Parse(format!("nonpositive probability {p}")));
            }
            total += p;
        }
        if !total.is_one() {
            return Err(Error::Parse(format!("probabilities sum to {total}, not 1")));
        }
        Ok(DistTable { target, coords, probs })
    }

    /// The point mass on the empty tuple.
    pub fn point(target: &TargetGraph) -> Self {
        DistTable { target: target.clone(), coords: Vec::new(), probs: BTreeMap::from([(Vec::new(), Rational::one())]) }
    }

    /// Uniform distribution on all of `V(G)^coords`.
    pub fn uniform(target: &TargetGraph, coords: Vec<Vertex>, cap: u128) -> Result<Self> {
        let n = target.vertex_count() as u32;
        check_states(n, coords.len(), cap)?;
        let total = (n as u128).pow(coords.len() as u32);
        let p = Rational::new(1.into(), total.into());
        let mut probs = BTreeMap::new();
        let mut t = vec![0u32; coords.len()];
        loop {
            probs.insert(t.clone(), p.clone());
            if !advance(&mut t, n) {
                break;
            }
        }
        Ok(DistTable { target: target.clone(), coords, probs })
    }

    pub fn target(&self) -> &TargetGraph {
        &self.target
    }

    pub fn coords(&self) -> &[Vertex] {
        &self.coords
    }

    pub fn support_len(&self) -> usize {
        self.probs.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.probs.iter()
    }

    pub fn prob(&self, tuple: &[u32]) -> Rational {
        self.probs.get(tuple).cloned().unwrap_or_else(Rational::zero)
    }

    fn coord_index(&self, c: Vertex) -> Result<usize> {
        self.coords.iter().position(|&x| x == c).ok_or_else(|| Error::InvalidSubset(format!("{c} is not a coordinate")))
    }

    /// Same table with coordinates renamed position by position.
    pub fn with_coords(&self, coords: Vec<Vertex>) -> Result<Self> {
        if coords.len() != self.coords.len() {
            return Err(Error::InvalidMap("coordinate count differs".into()));
        }
        DistTable::new(self.target.clone(), coords, self.probs.clone())
    }

    pub fn to_file(&self) -> DistFile {
        DistFile {
            coords: self.coords.clone(),
            entries: self
                .probs
                .iter()
                .map(|(t, p)| DistRecord {
                    tuple: t.iter().map(|&i| self.target.vertex(i)).collect(),
                    prob: p.to_string(),
                })
                .collect(),
        }
    }
}

/// Serialized table: coordinates, then `{tuple, prob}` records with target vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistFile {
    pub coords: Vec<Vertex>,
    pub entries: Vec<DistRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistRecord {
    pub tuple: Vec<Vertex>,
    pub prob: String,
}

fn advance(t: &mut [u32], n: u32) -> bool {
    for d in t.iter_mut().rev() {
        *d += 1;
        if *d < n {
            return true;
        }
        *d = 0;
    }
    false
}

fn check_states(n: u32, coords: usize, cap: u128) -> Result<()> {
    let size = (n as u128).checked_pow(coords as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SizeCap { what: "state space", size, cap });
    }
    Ok(())
}

/// `τ(e,G)`: a uniformly random edge with a uniformly random vertex order.
pub fn uniform_edge(g: &TargetGraph) -> DistTable {
    let k = g.arity();
    let mut probs = BTreeMap::new();
    let count: u64 = g.edge_count() as u64 * (1..=k as u64).product::<u64>();
    let p = Rational::new(1.into(), count.into());
    for e in g.edges_idx() {
        for perm in permutations(e) {
            probs.insert(perm, p.clone());
        }
    }
    DistTable { target: g.clone(), coords: (1..=k as Vertex).collect(), probs }
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// `κ`: the vertex marginal of `τ(e,G)`, proportional to degree.
pub fn kappa(g: &TargetGraph) -> DistTable {
    let e = uniform_edge(g);
    marginal(&e, &[(1, 1)]).expect("coordinate 1 exists")
}

/// Pushforward along `beta`: each `(label, coord)` pair makes output
/// coordinate `label` a copy of input coordinate `coord`.
pub fn marginal(mu: &DistTable, beta: &[(Vertex, Vertex)]) -> Result<DistTable> {
    let mut labels = std::collections::HashSet::new();
    let mut used = std::collections::HashSet::new();
    for &(l, c) in beta {
        if !labels.insert(l) || !used.insert(c) {
            return Err(Error::InvalidMap(format!("map is not injective at ({l}, {c})")));
        }
    }
    let idx: Vec<usize> = beta.iter().map(|&(_, c)| mu.coord_index(c)).collect::<Result<_>>()?;
    let mut probs: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (t, p) in &mu.probs {
        let key: Vec<u32> = idx.iter().map(|&i| t[i]).collect();
        *probs.entry(key).or_insert_with(Rational::zero) += p;
    }
    Ok(DistTable { target: mu.target.clone(), coords: beta.iter().map(|b| b.0).collect(), probs })
}

/// Marginal on a coordinate subset, keeping coordinate names (in `coords` order).
pub fn restrict(mu: &DistTable, coords: &[Vertex]) -> Result<DistTable> {
    let beta: Vec<(Vertex, Vertex)> = coords.iter().map(|&c| (c, c)).collect();
    marginal(mu, &beta)
}

/// Result of a coupling: the joint table and where `mu2`'s coordinates went.
#[derive(Clone, Debug)]
pub struct Coupled {
    pub table: DistTable,
    pub tau2: BTreeMap<Vertex, Vertex>,
}

/// Conditionally independent coupling `μ1·μ2/μ3` over the joint factor given
/// by `beta1`, `beta2` (`(label, coord)` pairs with a common label set).
/// `mu1` keeps its coordinates; the unshared coordinates of `mu2` get fresh
/// names after the current maximum, in ascending order.
pub fn ci_coupling(
    mu1: &DistTable,
    mu2: &DistTable,
    beta1: &[(Vertex, Vertex)],
    beta2: &[(Vertex, Vertex)],
) -> Result<Coupled> {
    if mu1.target != mu2.target {
        return Err(Error::GroundMismatch);
    }
    let mut b1 = beta1.to_vec();
    let mut b2 = beta2.to_vec();
    b1.sort_unstable();
    b2.sort_unstable();
    if b1.iter().map(|b| b.0).ne(b2.iter().map(|b| b.0)) {
        return Err(Error::InvalidMap("the two maps have different domains".into()));
    }
    let m1 = marginal(mu1, &b1)?;
    let m3 = marginal(mu2, &b2)?;
    if m1.probs != m3.probs {
        return Err(Error::JointFactorMismatch);
    }
    let shared1: Vec<usize> = b1.iter().map(|&(_, c)| mu1.coord_index(c)).collect::<Result<_>>()?;
    let shared2: Vec<usize> = b2.iter().map(|&(_, c)| mu2.coord_index(c)).collect::<Result<_>>()?;

    let mut tau2: BTreeMap<Vertex, Vertex> = b1.iter().zip(&b2).map(|(&(_, c1), &(_, c2))| (c2, c1)).collect();
    let mut fresh: Vec<(Vertex, usize)> =
        mu2.coords.iter().enumerate().filter(|(_, c)| !tau2.contains_key(c)).map(|(i, &c)| (c, i)).collect();
    fresh.sort_unstable();
    let mut next = mu1.coords.iter().max().map_or(1, |m| m + 1);
    let mut coords = mu1.coords.clone();
    let mut fresh_idx = Vec::new();
    for (c, i) in fresh {
        tau2.insert(c, next);
        coords.push(next);
        fresh_idx.push(i);
        next += 1;
    }

    let mut groups: HashMap<Vec<u32>, Vec<(&Vec<u32>, &Rational)>> = HashMap::new();
    for (t, p) in &mu2.probs {
        groups.entry(shared2.iter().map(|&i| t[i]).collect()).or_default().push((t, p));
    }
    let mut probs = BTreeMap::new();
    for (x1, p1) in &mu1.probs {
        let key: Vec<u32> = shared1.iter().map(|&i| x1[i]).collect();
        let p3 = &m1.probs[&key];
        let Some(group) = groups.get(&key) else { continue };
        for (x2, p2) in group {
            let mut t = x1.clone();
            t.extend(fresh_idx.iter().map(|&i| x2[i]));
            probs.insert(t, p1 * *p2 / p3);
        }
    }
    Ok(Coupled { table: DistTable { target: mu1.target.clone(), coords, probs }, tau2 })
}

/// A relative entropy value in natural-log units.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyReport {
    pub value: Real,
    /// Support points summed over.
    pub terms: usize,
}

impl EntropyReport {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn decimal(&self, digits: usize) -> String {
        format_real(&self.value, digits)
    }
}

pub fn format_real(x: &Real, digits: usize) -> String {
    x.to_decimal().value().with_precision(digits).value().to_string()
}

fn big_to_ibig(n: &num_bigint::BigInt) -> IBig {
    let (sign, bytes) = n.to_bytes_le();
    let mag = IBig::from(dashu_int::UBig::from_le_bytes(&bytes));
    if sign == num_bigint::Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// Converts an exact rational into a 256-bit float.
pub fn real(r: &Rational) -> Real {
    let n = Real::from(big_to_ibig(r.numer())).with_precision(PRECISION).value();
    let d = Real::from(big_to_ibig(r.denom())).with_precision(PRECISION).value();
    n / d
}

pub fn real_zero() -> Real {
    Real::ZERO.with_precision(PRECISION).value()
}

thread_local! {
    static LN_CACHE: RefCell<HashMap<Rational, Real>> = RefCell::new(HashMap::new());
}

/// Natural logarithm of a positive rational, memoized per thread.
pub fn ln_rational(r: &Rational) -> Real {
    assert!(r.is_positive(), "logarithm of a nonpositive number");
    if let Some(v) = LN_CACHE.with(|c| c.borrow().get(r).cloned()) {
        return v;
    }
    let v = real(r).ln();
    LN_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() > 1 << 16 {
            c.clear();
        }
        c.insert(r.clone(), v.clone());
    });
    v
}

/// `Σ μ(x)(log μ(x) − log ν(x))`, summed in tuple order.
pub fn relative_entropy(mu: &DistTable, nu: &DistTable) -> Result<EntropyReport> {
    if mu.coords != nu.coords || mu.target != nu.target {
        return Err(Error::Support("the two tables live on different spaces".into()));
    }
    let mut acc = real_zero();
    for (t, p) in &mu.probs {
        let q = nu.probs.get(t).ok_or_else(|| Error::Support(format!("tuple {t:?} has no reference mass")))?;
        acc += real(p) * ln_rational(&(p / q));
    }
    Ok(EntropyReport { value: acc, terms: mu.probs.len() })
}

/// `D(μ)`: relative entropy against the uniform distribution on `V(G)^S`.
pub fn entropy_vs_uniform(mu: &DistTable) -> EntropyReport {
    let n = Rational::from_integer((mu.target.vertex_count() as u64).pow(mu.coords.len() as u32).into());
    let mut acc = real_zero();
    for p in mu.probs.values() {
        acc += real(p) * ln_rational(&(p * &n));
    }
    EntropyReport { value: acc, terms: mu.probs.len() }
}

/// `D_e = D(τ(e,G))` and `D_v = D(κ)`.
pub fn edge_and_vertex_entropy(g: &TargetGraph) -> (EntropyReport, EntropyReport) {
    (entropy_vs_uniform(&uniform_edge(g)), entropy_vs_uniform(&kappa(g)))
}

/// The coupling measure of `m` on `g`: starting from `τ(e,G)`, each step
/// `(L, X)` couples the current table with its own marginal on `L`, glued
/// conditionally independently over `X`. New coordinates follow the
/// complex's vertex naming, so the result lives on `V(m)`.
pub fn evaluate_scheme(m: &ReflectionComplex, g: &TargetGraph, cap: u128) -> Result<DistTable> {
    if m.arity() != g.arity() {
        return Err(Error::Arity(format!("complex has arity {}, target {}", m.arity(), g.arity())));
    }
    let n = g.vertex_count() as u32;
    check_states(n, m.vertex_count(), cap)?;
    let mut mu = uniform_edge(g);
    for step in m.trace() {
        check_states(n, mu.coords.len() + step.l.len() - step.x.len(), cap)?;
        let lbeta: Vec<(Vertex, Vertex)> = step.l.iter().map(|&c| (c, c)).collect();
        let nu = marginal(&mu, &lbeta)?;
        let xbeta: Vec<(Vertex, Vertex)> = step.x.iter().map(|&c| (c, c)).collect();
        mu = ci_coupling(&mu, &nu, &xbeta, &xbeta)?.table;
    }
    debug_assert_eq!(mu.coords, m.vertices());
    Ok(mu)
}

/// Exact check that `(A, B)` is a conditionally independent pair under `mu`.
pub fn check_ci_pair(mu: &DistTable, a: &[Vertex], b: &[Vertex]) -> Result<bool> {
    for c in a.iter().chain(b) {
        mu.coord_index(*c)?;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    a.dedup();
    b.sort_unstable();
    b.dedup();
    let inter: Vec<Vertex> = a.iter().copied().filter(|c| b.contains(c)).collect();
    let mut union = a.clone();
    union.extend(b.iter().copied().filter(|c| !a.contains(c)));
    union.sort_unstable();
    let (ma, mb, mi, mu_) = (restrict(mu, &a)?, restrict(mu, &b)?, restrict(mu, &inter)?, restrict(mu, &union)?);
    let pos = |set: &[Vertex], c: Vertex| set.iter().position(|&x| x == c).expect("member");
    let b_inter: Vec<usize> = inter.iter().map(|&c| pos(&b, c)).collect();
    let a_inter: Vec<usize> = inter.iter().map(|&c| pos(&a, c)).collect();
    let mut groups: HashMap<Vec<u32>, Vec<(&Vec<u32>, &Rational)>> = HashMap::new();
    for (t, p) in &mb.probs {
        groups.entry(b_inter.iter().map(|&i| t[i]).collect()).or_default().push((t, p));
    }
    let mut checked = 0usize;
    for (xa, pa) in &ma.probs {
        let key: Vec<u32> = a_inter.iter().map(|&i| xa[i]).collect();
        let pi = &mi.probs[&key];
        for (xb, pb) in groups.get(&key).map(Vec::as_slice).unwrap_or(&[]) {
            let joint: Vec<u32> = union
                .iter()
                .map(|c| match a.iter().position(|x| x == c) {
                    Some(i) => xa[i],
                    None => xb[pos(&b, *c)],
                })
                .collect();
            if mu_.prob(&joint) * pi != pa * *pb {
                return Ok(false);
            }
            checked += 1;
        }
    }
    // Every point of the joint support was visited above.
    Ok(checked == mu_.probs.len())
}

/// Both sides of a witness inequality.
#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub holds: bool,
    pub d_mu: EntropyReport,
    /// `|E(H)|·D_e`.
    pub bound: Real,
    pub d_e: EntropyReport,
    pub d_v: EntropyReport,
}

fn frame_index(mu: &DistTable, h: &FrameGraph) -> Result<Vec<Vec<usize>>> {
    let mut hv = h.vertices().to_vec();
    hv.sort_unstable();
    let mut cv = mu.coords.clone();
    cv.sort_unstable();
    if hv != cv {
        return Err(Error::InvalidMap("table coordinates must be the frame's vertices".into()));
    }
    h.edges().iter().map(|e| e.iter().map(|&v| mu.coord_index(v)).collect()).collect()
}

/// `D(μ) ≤ |E(H)|·D_e + tol` for a measure supported on `Hom(H, G)`.
pub fn witness_check(mu: &DistTable, h: &FrameGraph, g: &TargetGraph, tol: f64) -> Result<WitnessReport> {
    if &mu.target != g {
        return Err(Error::GroundMismatch);
    }
    let edges = frame_index(mu, h)?;
    for t in mu.probs.keys() {
        for e in &edges {
            let img: Vec<u32> = e.iter().map(|&i| t[i]).collect();
            if !g.is_edge_idx(&img) {
                return Err(Error::NotAHomomorphismMeasure(format!(
                    "tuple {:?} sends an edge outside G",
                    t.iter().map(|&i| g.vertex(i)).collect::<Vec<_>>()
                )));
            }
        }
    }
    let (d_e, d_v) = edge_and_vertex_entropy(g);
    let d_mu = entropy_vs_uniform(mu);
    let bound = d_e.value.clone() * Real::from(h.edge_count() as u64);
    let holds = (d_mu.value.clone() - bound.clone()).to_f64().value() <= tol;
    Ok(WitnessReport { holds, d_mu, bound, d_e, d_v })
}

#[derive(Clone, Debug)]
pub struct ForestBoundReport {
    pub holds: bool,
    pub d_mu: EntropyReport,
    /// `|E|·D_e − (2|E| − |V|)·D_v`.
    pub bound: Real,
}

/// `D(μ) ≥ |E(H)|·D_e − (2|E(H)| − |V(H)|)·D_v − tol` for forest frames with
/// the edge marginals `τ(e,G)` and vertex marginals `κ`.
pub fn forest_bound_check(mu: &DistTable, h: &FrameGraph, tol: f64) -> Result<ForestBoundReport> {
    if !h.is_forest() {
        return Err(Error::Precondition("the frame is not a forest".into()));
    }
    let edges = frame_index(mu, h)?;
    let g = &mu.target;
    let tau = uniform_edge(g);
    for e in h.edges() {
        let beta: Vec<(Vertex, Vertex)> = e.iter().enumerate().map(|(i, &v)| (i as Vertex + 1, v)).collect();
        if marginal(mu, &beta)?.probs != tau.probs {
            return Err(Error::Precondition(format!("edge {e:?} does not have the uniform-edge marginal")));
        }
    }
    let k = kappa(g);
    for &v in h.vertices() {
        if marginal(mu, &[(1, v)])?.probs != k.probs {
            return Err(Error::Precondition(format!("vertex {v} does not have the degree marginal")));
        }
    }
    let (d_e, d_v) = edge_and_vertex_entropy(g);
    let ne = edges.len() as i64;
    let excess = 2 * ne - h.vertex_count() as i64;
    let bound = d_e.value * Real::from(ne) - d_v.value * Real::from(excess);
    let d_mu = entropy_vs_uniform(mu);
    let holds = (bound.clone() - d_mu.value.clone()).to_f64().value() <= tol;
    Ok(ForestBoundReport { holds, d_mu, bound })
}

/// Pairings of `g(B) = D(μ|_B)` against the cone and subspace generators.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    /// Largest `|⟨g, t_{A,B}⟩|` over relation pairs.
    pub relation_max_abs: f64,
    /// Smallest `⟨g, t_{A,B}⟩` over sampled pairs.
    pub sampled_min: f64,
    pub sampled_pairs: usize,
    /// `⟨g, s_H(V)⟩`.
    pub s_pairing: f64,
    pub holds: bool,
}

/// Evaluates `g(B) = D(f_B(G))` on the coupling measure of `m` and pairs it
/// with `t_{A,B}` for relation pairs (expected 0), sampled pairs (expected
/// ≥ 0), and `s_H(V)` (expected ≥ 0).
pub fn supermodularity_probe(
    m: &ReflectionComplex,
    g: &TargetGraph,
    samples: usize,
    seed: u64,
    tol: f64,
    cap: u128,
) -> Result<ProbeReport> {
    let mu = evaluate_scheme(m, g, cap)?;
    let ground: &GroundSet = m.ground();
    let mut memo: HashMap<Subset, Real> = HashMap::new();
    let mut gval = |s: Subset| -> Result<Real> {
        if let Some(v) = memo.get(&s) {
            return Ok(v.clone());
        }
        let v = entropy_vs_uniform(&restrict(&mu, &ground.labels(s))?).value;
        memo.insert(s, v.clone());
        Ok(v)
    };
    let mut pair = |a: Subset, b: Subset| -> Result<f64> {
        let v = gval(a.union(b))? + gval(a.intersection(b))? - gval(a)? - gval(b)?;
        Ok(v.to_f64().value())
    };

    let mut relation_max_abs: f64 = 0.0;
    for (a, b) in m.base().relation() {
        relation_max_abs = relation_max_abs.max(pair(a, b)?.abs());
    }

    let full = ground.full();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<Subset> = if ground.len() <= 12 { full.subsets().collect() } else { Vec::new() };
    let mut sampled_min = f64::INFINITY;
    let mut sampled_pairs = 0;
    let mut tries = 0;
    while sampled_pairs < samples && tries < samples * 100 {
        tries += 1;
        let (a, b) = if all.is_empty() {
            use rand::Rng;
            (Subset(rng.gen::<u64>() & full.0), Subset(rng.gen::<u64>() & full.0))
        } else {
            (*all.choose(&mut rng).expect("nonempty"), *all.choose(&mut rng).expect("nonempty"))
        };
        if t_is_zero(a, b) {
            continue;
        }
        sampled_min = sampled_min.min(pair(a, b)?);
        sampled_pairs += 1;
    }

    let frame = m.frame_masks();
    let s = s_mask(ground, &frame, full);
    let mut acc = real_zero();
    for (set, c) in s.entries() {
        acc += gval(set)? * real(c);
    }
    let s_pairing = acc.to_f64().value();
    let holds = relation_max_abs <= tol && (sampled_pairs == 0 || sampled_min >= -tol) && s_pairing >= -tol;
    Ok(ProbeReport { relation_max_abs, sampled_min, sampled_pairs, s_pairing, holds })
}

/// Exact rational as `f64` (for reports).
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
