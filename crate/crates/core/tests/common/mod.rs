//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sidorenko::complex::ReflectionComplex;
use sidorenko::graph::{Hypergraph, TargetGraph};
use sidorenko::measures::DistTable;
use sidorenko::setfun::{Rational, Subset, Vertex};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random trace of arity `k` whose complex stays within `max_vertices`.
pub fn random_trace(rng: &mut ChaCha8Rng, k: usize, max_vertices: usize, steps: usize) -> ReflectionComplex {
    let mut m = ReflectionComplex::trivial(k).unwrap();
    for _ in 0..steps {
        let room = max_vertices - m.vertex_count();
        if room == 0 {
            break;
        }
        let edges: Vec<Subset> = m.base().edges().collect();
        let l = *edges.choose(rng).unwrap();
        let l_labels = m.ground().labels(l);
        // Keep at least |L| - room vertices in X so the copy fits.
        let keep = l_labels.len().saturating_sub(room);
        let mut x: Vec<Vertex> = l_labels.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        let mut rest: Vec<Vertex> = l_labels.iter().copied().filter(|v| !x.contains(v)).collect();
        rest.shuffle(rng);
        while x.len() < keep {
            x.push(rest.pop().unwrap());
        }
        if x.len() == l_labels.len() {
            continue;
        }
        m = m.reflect(&l_labels, &x).unwrap();
    }
    m
}

/// Uniform random labelled tree on `1..=n` (random attachment).
pub fn random_tree(rng: &mut ChaCha8Rng, n: u32) -> Hypergraph {
    let pairs: Vec<(Vertex, Vertex)> = (2..=n).map(|v| (rng.gen_range(1..v), v)).collect();
    Hypergraph::from_pairs(n, &pairs).unwrap()
}

/// Random forest on `1..=n`: a random tree with some edges dropped.
pub fn random_forest(rng: &mut ChaCha8Rng, n: u32) -> Hypergraph {
    let t = random_tree(rng, n);
    let edges = t.edges().iter().filter(|_| rng.gen_bool(0.75)).cloned().collect();
    Hypergraph::new(t.vertices().to_vec(), edges).unwrap()
}

/// Random graph on `1..=n` with at least one edge.
pub fn random_target(rng: &mut ChaCha8Rng, n: u32) -> TargetGraph {
    let all: Vec<(Vertex, Vertex)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    loop {
        let pairs: Vec<(Vertex, Vertex)> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !pairs.is_empty() {
            return TargetGraph::new(Hypergraph::from_pairs(n, &pairs).unwrap()).unwrap();
        }
    }
}

fn all_tuples(n: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..n).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

/// Random positive weights normalized to a distribution; `density` is the
/// chance a tuple gets mass (at least one always does).
pub fn random_weights(rng: &mut ChaCha8Rng, tuples: Vec<Vec<u32>>, density: f64) -> BTreeMap<Vec<u32>, Rational> {
    let mut w: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for t in &tuples {
        if rng.gen_bool(density) {
            w.insert(t.clone(), rng.gen_range(1..=9));
        }
    }
    if w.is_empty() {
        w.insert(tuples.choose(rng).unwrap().clone(), 1);
    }
    let total: i64 = w.values().sum();
    w.into_iter().map(|(t, x)| (t, Rational::new(x.into(), total.into()))).collect()
}

/// Random distribution on `V(G)^coords`.
pub fn random_table(rng: &mut ChaCha8Rng, g: &TargetGraph, coords: Vec<Vertex>, density: f64) -> DistTable {
    let tuples = all_tuples(g.vertex_count() as u32, coords.len());
    let probs = random_weights(rng, tuples, density);
    DistTable::new(g.clone(), coords, probs).unwrap()
}

/// A table on `coords` whose marginal on the first `shared` coordinates is
/// `base` (given on those coordinates), with a random kernel for the rest.
pub fn extend_table(
    rng: &mut ChaCha8Rng,
    base: &DistTable,
    coords: Vec<Vertex>,
    density: f64,
) -> DistTable {
    let g = base.target();
    let extra = coords.len() - base.coords().len();
    let mut probs = BTreeMap::new();
    for (x, p) in base.entries() {
        let kernel = random_weights(rng, all_tuples(g.vertex_count() as u32, extra), density);
        for (y, q) in kernel {
            probs.insert([x.clone(), y].concat(), p * q);
        }
    }
    DistTable::new(g.clone(), coords, probs).unwrap()
}
