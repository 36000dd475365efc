//! Homomorphism enumeration, exact densities and direct checks of
//! `t(H,G) >= t(e,G)^|E(H)|`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FrameGraph, Hypergraph, TargetGraph};
use crate::measures::{ln_rational, EntropyReport};
use crate::setfun::{Rational, Vertex};

/// All homomorphisms `H → G`, as tuples of target vertex indices in the
/// order of `H`'s vertex list.
#[derive(Clone, Debug)]
pub struct HomomorphismSet {
    pub source: FrameGraph,
    pub target: TargetGraph,
    pub maps: Vec<Vec<u32>>,
}

impl HomomorphismSet {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Search plan: vertices of `H` in assignment order, and for each position
/// the edges that become fully assigned there.
struct Plan {
    order: Vec<usize>,
    /// Edges (as positions into `order`'s assignment slots) closing at each depth.
    closing: Vec<Vec<Vec<usize>>>,
    /// An earlier-assigned neighbour whose image restricts the candidates.
    anchor: Vec<Option<usize>>,
}

fn check_arity(h: &FrameGraph, g: &TargetGraph) -> Result<()> {
    if h.edge_count() > 0 && !h.is_uniform(g.arity()) {
        return Err(Error::Arity(format!("source is not {}-uniform like the target", g.arity())));
    }
    Ok(())
}

// Greedy static order: most edges into the placed set first, then degree,
// then vertex order.
fn plan(h: &FrameGraph) -> Plan {
    let n = h.vertex_count();
    let pos = |v: Vertex| h.vertices().iter().position(|&x| x == v).expect("edge vertex");
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.iter().map(|&v| pos(v)).collect()).collect();
    let degree: Vec<usize> = (0..n).map(|i| edges.iter().filter(|e| e.contains(&i)).count()).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let links = edges.iter().filter(|e| e.contains(&i) && e.iter().any(|&u| placed[u])).count();
                (links, degree[i], std::cmp::Reverse(i))
            })
            .expect("unplaced vertex");
        placed[best] = true;
        order.push(best);
    }
    let depth_of: Vec<usize> = {
        let mut d = vec![0; n];
        for (k, &i) in order.iter().enumerate() {
            d[i] = k;
        }
        d
    };
    let mut closing = vec![Vec::new(); n];
    let mut anchor = vec![None; n];
    for e in &edges {
        let last = e.iter().map(|&i| depth_of[i]).max().expect("nonempty edge");
        closing[last].push(e.clone());
        if anchor[last].is_none() {
            anchor[last] = e.iter().copied().find(|&i| depth_of[i] < last);
        }
    }
    Plan { order, closing, anchor }
}

fn search(plan: &Plan, g: &TargetGraph, assign: &mut [u32], depth: usize, visit: &mut dyn FnMut(&[u32])) {
    if depth == plan.order.len() {
        visit(assign);
        return;
    }
    let slot = plan.order[depth];
    let all: Vec<u32>;
    let candidates: &[u32] = match plan.anchor[depth] {
        Some(a) => g.neighbors_idx(assign[a]),
        None => {
            all = (0..g.vertex_count() as u32).collect();
            &all
        }
    };
    let mut image = Vec::with_capacity(g.arity());
    for &c in candidates {
        assign[slot] = c;
        let ok = plan.closing[depth].iter().all(|e| {
            image.clear();
            image.extend(e.iter().map(|&i| assign[i]));
            g.is_edge_idx(&image)
        });
        if ok {
            search(plan, g, assign, depth + 1, visit);
        }
    }
}

/// Calls `visit` on every homomorphism, in a fixed order.
pub fn for_each_hom(h: &FrameGraph, g: &TargetGraph, mut visit: impl FnMut(&[u32])) -> Result<()> {
    check_arity(h, g)?;
    let p = plan(h);
    let mut assign = vec![0u32; h.vertex_count()];
    search(&p, g, &mut assign, 0, &mut visit);
    Ok(())
}

/// Materializes `Hom(H,G)`; fails once more than `cap` maps would be stored.
pub fn enumerate_hom(h: &FrameGraph, g: &TargetGraph, cap: u128) -> Result<HomomorphismSet> {
    let count = count_hom(h, g)?;
    if count > cap {
        return Err(Error::SizeCap { what: "homomorphism set", size: count, cap });
    }
    let mut maps = Vec::with_capacity(count as usize);
    for_each_hom(h, g, |m| maps.push(m.to_vec()))?;
    maps.sort_unstable();
    Ok(HomomorphismSet { source: h.clone(), target: g.clone(), maps })
}

/// `|Hom(H,G)|` by backtracking.
pub fn count_hom(h: &FrameGraph, g: &TargetGraph) -> Result<u128> {
    let mut n = 0u128;
    for_each_hom(h, g, |_| n += 1)?;
    Ok(n)
}

/// `|Hom(H,G)|` by trying every map; the reference for [`count_hom`].
pub fn count_hom_naive(h: &FrameGraph, g: &TargetGraph, cap: u128) -> Result<u128> {
    check_arity(h, g)?;
    let n = g.vertex_count() as u32;
    let size = (n as u128).checked_pow(h.vertex_count() as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SizeCap { what: "map space", size, cap });
    }
    let pos = |v: Vertex| h.vertices().iter().position(|&x| x == v).expect("edge vertex");
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.iter().map(|&v| pos(v)).collect()).collect();
    let mut t = vec![0u32; h.vertex_count()];
    let mut count = 0;
    let mut image = Vec::new();
    'maps: loop {
        if edges.iter().all(|e| {
            image.clear();
            image.extend(e.iter().map(|&i| t[i]));
            g.is_edge_idx(&image)
        }) {
            count += 1;
        }
        for d in t.iter_mut().rev() {
            *d += 1;
            if *d < n {
                continue 'maps;
            }
            *d = 0;
        }
        return Ok(count);
    }
}

fn pow_rational(base: u128, exp: usize) -> Rational {
    Rational::from_integer(BigInt::from(base).pow(exp as u32))
}

/// `t(H,G) = |Hom(H,G)| / |V(G)|^|V(H)|`.
pub fn density(h: &FrameGraph, g: &TargetGraph) -> Result<Rational> {
    let hom = count_hom(h, g)?;
    Ok(Rational::from_integer(hom.into()) / pow_rational(g.vertex_count() as u128, h.vertex_count()))
}

/// `t(e,G) = k!·|E(G)| / |V(G)|^k`.
pub fn edge_density(g: &TargetGraph) -> Rational {
    let k = g.arity();
    let ordered: u128 = (1..=k as u128).product::<u128>() * g.edge_count() as u128;
    Rational::from_integer(ordered.into()) / pow_rational(g.vertex_count() as u128, k)
}

/// Both sides of the density inequality for one target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidorenkoReport {
    pub homomorphisms: u128,
    /// `t(H,G)`.
    #[serde(with = "crate::setfun::rational_string")]
    pub lhs: Rational,
    /// `t(e,G)^|E(H)|`.
    #[serde(with = "crate::setfun::rational_string")]
    pub rhs: Rational,
    pub holds: bool,
}

impl SidorenkoReport {
    pub fn margin(&self) -> Rational {
        &self.lhs - &self.rhs
    }
}

/// Exact decision of `t(H,G) >= t(e,G)^|E(H)|`.
pub fn sidorenko_check(h: &FrameGraph, g: &TargetGraph) -> Result<SidorenkoReport> {
    let homomorphisms = count_hom(h, g)?;
    let lhs = Rational::from_integer(homomorphisms.into()) / pow_rational(g.vertex_count() as u128, h.vertex_count());
    let te = edge_density(g);
    let rhs = Pow::pow(&te, h.edge_count() as u32);
    let holds = lhs >= rhs;
    Ok(SidorenkoReport { homomorphisms, lhs, rhs, holds })
}

/// `D(τ(H,G)) = −log t(H,G)`.
pub fn d_tau(h: &FrameGraph, g: &TargetGraph) -> Result<EntropyReport> {
    let t = density(h, g)?;
    if t.is_zero() {
        return Err(Error::EmptySupport);
    }
    let terms = count_hom(h, g)? as usize;
    Ok(EntropyReport { value: ln_rational(&(Rational::one() / t)), terms })
}

/// Which targets a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Every labeled target with at least one edge.
    Exhaustive,
    /// `samples` distinct targets drawn with a seeded generator.
    Random { samples: usize, seed: u64 },
}

/// Largest number of possible edges an exhaustive sweep may range over.
pub const MAX_SWEEP_SLOTS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetResult {
    pub edges: Vec<Vec<Vertex>>,
    #[serde(flatten)]
    pub report: SidorenkoReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub vertices: usize,
    pub arity: usize,
    pub targets: Vec<TargetResult>,
}

impl SweepReport {
    pub fn violations(&self) -> impl Iterator<Item = &TargetResult> {
        self.targets.iter().filter(|t| !t.report.holds)
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }

    /// One line per target with both sides as exact fractions.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "targets: {} (vertices {}, arity {}), violations: {}",
            self.targets.len(),
            self.vertices,
            self.arity,
            self.violation_count()
        );
        for t in &self.targets {
            let _ = writeln!(
                out,
                "{} edges={:?} t(H,G)={} t(e,G)^|E|={}",
                if t.report.holds { "ok  " } else { "FAIL" },
                t.edges,
                t.report.lhs,
                t.report.rhs
            );
        }
        out
    }
}

fn k_subsets(n: u32, k: usize) -> Vec<Vec<Vertex>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Labeled `k`-uniform targets on exactly `vertices` vertices, given by
/// bitmasks over the possible edges.
pub fn sweep_target_masks(vertices: usize, arity: usize, mode: SweepMode) -> Result<(Vec<Vec<Vertex>>, Vec<u64>)> {
    if arity < 2 || vertices < arity {
        return Err(Error::Parameter(format!("need at least {arity} >= 2 vertices, got {vertices}")));
    }
    let slots = k_subsets(vertices as u32, arity);
    if slots.len() > 63 {
        return Err(Error::SizeCap { what: "possible target edges", size: slots.len() as u128, cap: 63 });
    }
    let space = (1u64 << slots.len()) - 1;
    let masks = match mode {
        SweepMode::Exhaustive => {
            if slots.len() > MAX_SWEEP_SLOTS {
                return Err(Error::SizeCap {
                    what: "possible target edges",
                    size: slots.len() as u128,
                    cap: MAX_SWEEP_SLOTS as u128,
                });
            }
            (1..=space).collect()
        }
        SweepMode::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let distinct = (samples as u64) <= space;
            let mut seen = std::collections::HashSet::new();
            let mut out = Vec::with_capacity(samples);
            while out.len() < samples {
                let m = rng.gen_range(1..=space);
                if !distinct || seen.insert(m) {
                    out.push(m);
                }
            }
            out
        }
    };
    Ok((slots, masks))
}

/// Runs [`sidorenko_check`] on labeled targets with exactly `vertices`
/// vertices. Targets are checked in parallel; the report keeps sweep order.
pub fn sweep_targets(h: &FrameGraph, vertices: usize, arity: usize, mode: SweepMode) -> Result<SweepReport> {
    if h.edge_count() > 0 && !h.is_uniform(arity) {
        return Err(Error::Arity(format!("source is not {arity}-uniform")));
    }
    let (slots, masks) = sweep_target_masks(vertices, arity, mode)?;
    let targets = masks
        .par_iter()
        .map(|&m| {
            let edges: Vec<Vec<Vertex>> =
                slots.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, e)| e.clone()).collect();
            let g = TargetGraph::new(Hypergraph::new((1..=vertices as Vertex).collect(), edges.clone())?)?;
            Ok(TargetResult { edges, report: sidorenko_check(h, &g)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { vertices, arity, targets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfun::int;

    fn target(n: u32, pairs: &[(Vertex, Vertex)]) -> TargetGraph {
        TargetGraph::new(Hypergraph::from_pairs(n, pairs).unwrap()).unwrap()
    }

    fn c4() -> FrameGraph {
        Hypergraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn counting_examples() {
        let e = Hypergraph::from_pairs(2, &[(1, 2)]).unwrap();
        let ge = target(2, &[(1, 2)]);
        assert_eq!(count_hom(&e, &ge).unwrap(), 2);
        assert_eq!(density(&e, &ge).unwrap(), int(1) / int(2));
        let p = target(3, &[(1, 2), (2, 3)]);
        assert_eq!(count_hom(&c4(), &p).unwrap(), 8);
        assert_eq!(density(&c4(), &p).unwrap(), int(8) / int(81));
        let dot = Hypergraph::new(vec![1], vec![]).unwrap();
        assert_eq!(density(&dot, &p).unwrap(), int(1));
        let set = enumerate_hom(&c4(), &p, 100).unwrap();
        assert_eq!(set.len(), 8);
        assert!(matches!(enumerate_hom(&c4(), &p, 7), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn sidorenko_examples() {
        let p = target(3, &[(1, 2), (2, 3)]);
        let r = sidorenko_check(&c4(), &p).unwrap();
        assert_eq!(r.lhs, int(648) / int(6561));
        assert_eq!(r.rhs, int(256) / int(6561));
        assert!(r.holds);
        let e = Hypergraph::from_pairs(2, &[(1, 2)]).unwrap();
        let r = sidorenko_check(&e, &p).unwrap();
        assert_eq!(r.lhs, r.rhs);
    }

    #[test]
    fn d_tau_examples() {
        let e = Hypergraph::from_pairs(2, &[(1, 2)]).unwrap();
        let d = d_tau(&e, &target(2, &[(1, 2)])).unwrap();
        assert!((d.to_f64() - 2f64.ln()).abs() < 1e-12);
        let d = d_tau(&c4(), &target(3, &[(1, 2), (2, 3)])).unwrap();
        assert!((d.to_f64() - (81.0f64 / 8.0).ln()).abs() < 1e-12);
        let tri = Hypergraph::from_pairs(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(d_tau(&tri, &target(2, &[(1, 2)])).unwrap_err(), Error::EmptySupport);
    }

    #[test]
    fn sweeps() {
        let r = sweep_targets(&c4(), 4, 2, SweepMode::Exhaustive).unwrap();
        assert_eq!(r.targets.len(), 63);
        assert_eq!(r.violation_count(), 0);
        let tri = Hypergraph::from_pairs(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(sweep_targets(&tri, 4, 2, SweepMode::Exhaustive).unwrap().violation_count() > 0);
        let tp = Hypergraph::new(vec![1, 2, 3, 4], vec![vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        let r = sweep_targets(&tp, 4, 3, SweepMode::Exhaustive).unwrap();
        assert_eq!((r.targets.len(), r.violation_count()), (15, 0));
        let mode = SweepMode::Random { samples: 20, seed: 7 };
        let a = sweep_targets(&c4(), 5, 2, mode).unwrap();
        assert_eq!(a, sweep_targets(&c4(), 5, 2, mode).unwrap());
        assert!(a.render().starts_with("targets: 20"));
    }

    #[test]
    fn backtracking_matches_naive() {
        let tri = Hypergraph::from_pairs(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let star = Hypergraph::new(vec![5, 1, 2, 9], vec![vec![5, 1], vec![5, 2], vec![5, 9]]).unwrap();
        for g in [target(3, &[(1, 2), (2, 3)]), target(4, &[(1, 2), (2, 3), (3, 1), (3, 4)])] {
            for h in [c4(), tri.clone(), star.clone()] {
                assert_eq!(count_hom(&h, &g).unwrap(), count_hom_naive(&h, &g, 1 << 20).unwrap());
            }
        }
    }
}
