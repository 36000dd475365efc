//! b-hypergraphs, the two gluing operations, reflections, and reflection
//! complexes with replayable construction traces.
//!
//! Vertex naming is deterministic: glued vertices keep the first operand's
//! identifiers and fresh copies get consecutive identifiers after the current
//! maximum, in ascending order of their source identifiers. Since fresh
//! vertices are always appended, bitmask positions of existing vertices never
//! move while a complex grows.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FrameGraph, Hypergraph};
use crate::setfun::{GroundSet, Subset, Vertex};

/// Whether an edge or relation pair came from the plain gluing or was added by `∪*`.
/// Carried as metadata only; it does not take part in equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    First,
    Second,
}

/// A hypergraph with a symmetric relation on vertex subsets.
#[derive(Clone, Debug)]
pub struct BHypergraph {
    ground: GroundSet,
    edges: BTreeMap<Subset, Kind>,
    relation: BTreeMap<(Subset, Subset), Kind>,
}

impl PartialEq for BHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground
            && self.edges.keys().eq(other.edges.keys())
            && self.relation.keys().eq(other.relation.keys())
    }
}

impl Eq for BHypergraph {}

fn ordered(a: Subset, b: Subset) -> (Subset, Subset) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl BHypergraph {
    pub fn new(ground: GroundSet, edges: impl IntoIterator<Item = Subset>, relation: impl IntoIterator<Item = (Subset, Subset)>) -> Result<Self> {
        let mut m = BHypergraph { ground, edges: BTreeMap::new(), relation: BTreeMap::new() };
        for e in edges {
            m.ground.check_subset(e)?;
            m.add_edge(e, Kind::First);
        }
        for (a, b) in relation {
            m.ground.check_subset(a)?;
            m.ground.check_subset(b)?;
            m.add_pair(a, b, Kind::First);
        }
        Ok(m)
    }

    /// Builds from vertex-labelled edges and relation pairs.
    pub fn from_labels(vertices: &[Vertex], edges: &[Vec<Vertex>], relation: &[(Vec<Vertex>, Vec<Vertex>)]) -> Result<Self> {
        let ground = GroundSet::new(vertices.iter().copied())?;
        let edges = edges.iter().map(|e| ground.subset(e)).collect::<Result<Vec<_>>>()?;
        let relation = relation
            .iter()
            .map(|(a, b)| Ok((ground.subset(a)?, ground.subset(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, edges, relation)
    }

    fn add_edge(&mut self, e: Subset, kind: Kind) {
        self.edges.entry(e).or_insert(kind);
    }

    fn add_pair(&mut self, a: Subset, b: Subset, kind: Kind) {
        self.relation.entry(ordered(a, b)).or_insert(kind);
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn vertex_count(&self) -> usize {
        self.ground.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Subset> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_kind(&self, e: Subset) -> Option<Kind> {
        self.edges.get(&e).copied()
    }

    pub fn is_edge(&self, e: Subset) -> bool {
        self.edges.contains_key(&e)
    }

    /// Relation pairs, each stored once with the smaller mask first.
    pub fn relation(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.relation.keys().copied()
    }

    pub fn relation_len(&self) -> usize {
        self.relation.len()
    }

    pub fn relation_kind(&self, a: Subset, b: Subset) -> Option<Kind> {
        self.relation.get(&ordered(a, b)).copied()
    }

    pub fn related(&self, a: Subset, b: Subset) -> bool {
        self.relation.contains_key(&ordered(a, b))
    }

    pub fn labels(&self, s: Subset) -> Vec<Vertex> {
        self.ground.labels(s)
    }

    pub fn subset(&self, vertices: &[Vertex]) -> Result<Subset> {
        self.ground.subset(vertices)
    }

    /// Size-k edges as masks.
    pub fn frame_masks(&self, k: usize) -> Vec<Subset> {
        self.edges.keys().copied().filter(|e| e.len() == k).collect()
    }

    /// The sub-b-hypergraph spanned on `w`: its ground set lists the vertices
    /// of `w` in this ground set's order.
    pub fn spanned(&self, w: Subset) -> Result<BHypergraph> {
        self.ground.check_subset(w)?;
        let positions: Vec<usize> = w.positions().collect();
        let ground = GroundSet::new(positions.iter().map(|&p| self.ground.vertices()[p]))?;
        let compress = |s: Subset| {
            let mut out = Subset::EMPTY;
            for (i, &p) in positions.iter().enumerate() {
                if s.contains(p) {
                    out = out.insert(i);
                }
            }
            out
        };
        let mut sub = BHypergraph { ground, edges: BTreeMap::new(), relation: BTreeMap::new() };
        for (&e, &k) in &self.edges {
            if e.is_subset_of(w) {
                sub.edges.insert(compress(e), k);
            }
        }
        for (&(a, b), &k) in &self.relation {
            if a.is_subset_of(w) && b.is_subset_of(w) {
                sub.relation.insert(ordered(compress(a), compress(b)), k);
            }
        }
        Ok(sub)
    }

    pub fn edge_labels(&self) -> Vec<Vec<Vertex>> {
        self.edges.keys().map(|&e| self.labels(e)).collect()
    }

    pub fn relation_labels(&self) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
        self.relation.keys().map(|&(a, b)| (self.labels(a), self.labels(b))).collect()
    }
}

/// Output of a gluing: the glued b-hypergraph and where the second operand's
/// vertices landed (the first operand keeps its identifiers).
#[derive(Clone, Debug)]
pub struct Glued {
    pub result: BHypergraph,
    pub tau2: BTreeMap<Vertex, Vertex>,
}

fn check_maps(m1: &BHypergraph, m2: &BHypergraph, pairs: &[(Vertex, Vertex)]) -> Result<()> {
    let mut seen1 = HashSet::new();
    let mut seen2 = HashSet::new();
    for &(v1, v2) in pairs {
        if !m1.ground.contains(v1) {
            return Err(Error::InvalidMap(format!("{v1} is not a vertex of the first operand")));
        }
        if !m2.ground.contains(v2) {
            return Err(Error::InvalidMap(format!("{v2} is not a vertex of the second operand")));
        }
        if !seen1.insert(v1) || !seen2.insert(v2) {
            return Err(Error::InvalidMap(format!("map is not injective at ({v1}, {v2})")));
        }
    }
    Ok(())
}

fn glue_impl(m1: &BHypergraph, m2: &BHypergraph, pairs: &[(Vertex, Vertex)], star: bool) -> Result<Glued> {
    check_maps(m1, m2, pairs)?;
    let mut tau2: BTreeMap<Vertex, Vertex> = pairs.iter().map(|&(v1, v2)| (v2, v1)).collect();
    let mut fresh: Vec<Vertex> = m2.ground.vertices().iter().copied().filter(|v| !tau2.contains_key(v)).collect();
    fresh.sort_unstable();
    let mut next = m1.ground.max_vertex().map_or(1, |m| m + 1);
    let mut new_ids = Vec::with_capacity(fresh.len());
    for v in fresh {
        tau2.insert(v, next);
        new_ids.push(next);
        next += 1;
    }
    let ground = m1.ground.extended(new_ids)?;
    let pos_map: Vec<usize> = m2
        .ground
        .vertices()
        .iter()
        .map(|v| ground.position(tau2[v]).expect("image is in the glued ground set"))
        .collect();
    let map2 = |s: Subset| {
        let mut out = Subset::EMPTY;
        for p in s.positions() {
            out = out.insert(pos_map[p]);
        }
        out
    };

    let mut out = BHypergraph { ground, edges: m1.edges.clone(), relation: m1.relation.clone() };
    for &e in m2.edges.keys() {
        out.add_edge(map2(e), Kind::First);
    }
    for &(a, b) in m2.relation.keys() {
        out.add_pair(map2(a), map2(b), Kind::First);
    }
    if star {
        let f1 = m1.ground.subset(&pairs.iter().map(|p| p.0).collect::<Vec<_>>())?;
        let f2 = m2.ground.subset(&pairs.iter().map(|p| p.1).collect::<Vec<_>>())?;
        let k1: Vec<Subset> = m1.edges.keys().copied().filter(|k| f1.is_subset_of(*k)).collect();
        let k2: Vec<Subset> = m2.edges.keys().copied().filter(|k| f2.is_subset_of(*k)).map(map2).collect();
        for &a in &k1 {
            for &b in &k2 {
                out.add_edge(a.union(b), Kind::Second);
                out.add_pair(a, b, Kind::Second);
            }
        }
    }
    Ok(Glued { result: out, tau2 })
}

/// `M1 ∪_{φ1,φ2} M2`; `pairs` lists `(φ1(f), φ2(f))` for each label `f`.
pub fn glue(m1: &BHypergraph, m2: &BHypergraph, pairs: &[(Vertex, Vertex)]) -> Result<Glued> {
    glue_impl(m1, m2, pairs, false)
}

/// `M1 ∪*_{φ1,φ2} M2`: the plain gluing plus, for every `K1 ⊇ φ1(F)` and
/// `K2 ⊇ φ2(F)`, the edge `τ1(K1) ∪ τ2(K2)` and the pair `(τ1(K1), τ2(K2))`.
pub fn glue_star(m1: &BHypergraph, m2: &BHypergraph, pairs: &[(Vertex, Vertex)]) -> Result<Glued> {
    glue_impl(m1, m2, pairs, true)
}

/// One reflection `r_{L,X}` in a trace; vertex lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    #[serde(rename = "L")]
    pub l: Vec<Vertex>,
    #[serde(rename = "X")]
    pub x: Vec<Vertex>,
}

impl Step {
    pub fn new(l: &[Vertex], x: &[Vertex]) -> Self {
        let mut l = l.to_vec();
        let mut x = x.to_vec();
        l.sort_unstable();
        x.sort_unstable();
        Step { l, x }
    }
}

/// A reflection complex of arity `k` together with the trace that builds it
/// from the trivial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionComplex {
    arity: usize,
    base: BHypergraph,
    trace: Vec<Step>,
}

/// Result of [`ReflectionComplex::reflect_traced`].
#[derive(Clone, Debug)]
pub struct Reflected {
    pub complex: ReflectionComplex,
    /// Vertex of `L` ↦ its image in the reflected copy (identity on `X`).
    pub copy: BTreeMap<Vertex, Vertex>,
}

impl ReflectionComplex {
    /// The single edge `{1, …, k}` with empty relation.
    pub fn trivial(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Arity(format!("arity must be at least 2, got {k}")));
        }
        let ground = GroundSet::range(k)?;
        let full = ground.full();
        Ok(ReflectionComplex { arity: k, base: BHypergraph::new(ground, [full], [])?, trace: Vec::new() })
    }

    /// Replays `trace` from the trivial complex of arity `k`.
    pub fn from_trace(k: usize, trace: &[Step]) -> Result<Self> {
        let mut m = Self::trivial(k)?;
        for step in trace {
            m = m.reflect(&step.l, &step.x)?;
        }
        Ok(m)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn base(&self) -> &BHypergraph {
        &self.base
    }

    pub fn trace(&self) -> &[Step] {
        &self.trace
    }

    pub fn ground(&self) -> &GroundSet {
        self.base.ground()
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.base.ground().vertices()
    }

    pub fn reflect(&self, l: &[Vertex], x: &[Vertex]) -> Result<Self> {
        Ok(self.reflect_traced(l, x)?.complex)
    }

    /// `r_{L,X}(M) = M ∪* N` with `N` spanned on `L`, glued along the identity on `X`.
    pub fn reflect_traced(&self, l: &[Vertex], x: &[Vertex]) -> Result<Reflected> {
        let l_mask = self.base.subset(l).map_err(|_| Error::NotAnEdge(sorted(l)))?;
        if !self.base.is_edge(l_mask) {
            return Err(Error::NotAnEdge(sorted(l)));
        }
        let x_mask = self.base.subset(x)?;
        if !x_mask.is_subset_of(l_mask) {
            return Err(Error::InvalidSubset(format!("X = {:?} is not contained in L = {:?}", sorted(x), sorted(l))));
        }
        let n = self.base.spanned(l_mask)?;
        let pairs: Vec<(Vertex, Vertex)> = self.base.labels(x_mask).into_iter().map(|v| (v, v)).collect();
        let glued = glue_star(&self.base, &n, &pairs)?;
        let mut trace = self.trace.clone();
        trace.push(Step { l: self.base.labels(l_mask), x: self.base.labels(x_mask) });
        Ok(Reflected {
            complex: ReflectionComplex { arity: self.arity, base: glued.result, trace },
            copy: glued.tau2,
        })
    }

    /// The complexes `M_0, …, M_n` visited while replaying the trace.
    pub fn states(&self) -> Result<Vec<ReflectionComplex>> {
        let mut cur = Self::trivial(self.arity)?;
        let mut out = vec![cur.clone()];
        for step in &self.trace {
            cur = cur.reflect(&step.l, &step.x)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub fn frame(&self) -> FrameGraph {
        frame(&self.base, self.arity)
    }

    pub fn frame_masks(&self) -> Vec<Subset> {
        self.base.frame_masks(self.arity)
    }

    pub fn is_reducible(&self) -> Reducibility {
        is_k_reducible(&self.base, self.arity)
    }
}

fn sorted(v: &[Vertex]) -> Vec<Vertex> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// The size-k edges of `m` as a k-uniform hypergraph on `V(m)`.
pub fn frame(m: &BHypergraph, k: usize) -> FrameGraph {
    Hypergraph::new(
        m.ground.vertices().to_vec(),
        m.frame_masks(k).into_iter().map(|e| m.labels(e)).collect(),
    )
    .expect("frame edges are subsets of the ground set")
}

/// A proof of k-reducibility: the chosen proper split of every edge
/// reachable from the full vertex set. Edges of size at most `k` are leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub root: Subset,
    pub splits: BTreeMap<Subset, (Subset, Subset)>,
}

impl Decomposition {
    pub fn leaves(&self) -> BTreeSet<Subset> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self.root];
        let mut seen = HashSet::new();
        while let Some(s) = stack.pop() {
            if !seen.insert(s) {
                continue;
            }
            match self.splits.get(&s) {
                Some(&(a, b)) => {
                    stack.push(a);
                    stack.push(b);
                }
                None => {
                    out.insert(s);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reducibility {
    Reducible(Decomposition),
    /// `witness` is the full vertex set when it is not an edge, otherwise an
    /// edge of size above `k` without a proper decomposition.
    Irreducible { witness: Vec<Vertex>, full_set_missing: bool },
}

impl Reducibility {
    pub fn is_reducible(&self) -> bool {
        matches!(self, Reducibility::Reducible(_))
    }
}

/// Checks that `V ∈ E` and every edge `T` with `|T| > k` splits as
/// `T = A1 ∪ A2` with `A1, A2` smaller edges and `(A1, A2)` in the relation.
pub fn is_k_reducible(m: &BHypergraph, k: usize) -> Reducibility {
    let full = m.ground.full();
    if !m.is_edge(full) {
        return Reducibility::Irreducible { witness: m.labels(full), full_set_missing: true };
    }
    let mut split_of: BTreeMap<Subset, (Subset, Subset)> = BTreeMap::new();
    for (a, b) in m.relation() {
        let u = a.union(b);
        if a.len() < u.len() && b.len() < u.len() && m.is_edge(a) && m.is_edge(b) && m.is_edge(u) {
            split_of.entry(u).or_insert((a, b));
        }
    }
    // Smallest offending edge first, so witnesses are easy to read.
    let mut big: Vec<Subset> = m.edges().filter(|e| e.len() > k).collect();
    big.sort_by_key(|e| (e.len(), *e));
    if let Some(&bad) = big.iter().find(|e| !split_of.contains_key(e)) {
        return Reducibility::Irreducible { witness: m.labels(bad), full_set_missing: false };
    }
    let mut splits = BTreeMap::new();
    let mut stack = vec![full];
    while let Some(s) = stack.pop() {
        if s.len() <= k || splits.contains_key(&s) {
            continue;
        }
        let (a, b) = split_of[&s];
        splits.insert(s, (a, b));
        stack.push(a);
        stack.push(b);
    }
    Reducibility::Reducible(Decomposition { root: full, splits })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(m: &BHypergraph) -> (Vec<Vec<Vertex>>, Vec<(Vec<Vertex>, Vec<Vertex>)>) {
        (m.edge_labels(), m.relation_labels())
    }

    fn set(v: &[&[Vertex]]) -> BTreeSet<Vec<Vertex>> {
        v.iter().map(|e| e.to_vec()).collect()
    }

    #[test]
    fn trivial_complexes() {
        let t2 = ReflectionComplex::trivial(2).unwrap();
        assert_eq!(t2.vertices(), &[1, 2]);
        assert_eq!(labels(t2.base()), (vec![vec![1, 2]], vec![]));
        let t3 = ReflectionComplex::trivial(3).unwrap();
        assert_eq!(t3.base().edge_labels(), vec![vec![1, 2, 3]]);
        assert_eq!(t2.frame(), Hypergraph::from_pairs(2, &[(1, 2)]).unwrap());
        assert!(matches!(ReflectionComplex::trivial(1), Err(Error::Arity(_))));
    }

    #[test]
    fn glue_along_nothing_is_disjoint_union() {
        let e = ReflectionComplex::trivial(2).unwrap();
        let g = glue(e.base(), e.base(), &[]).unwrap();
        assert_eq!(g.result.ground().vertices(), &[1, 2, 3, 4]);
        assert_eq!(set(&[&[1, 2], &[3, 4]]), g.result.edge_labels().into_iter().collect());
        assert_eq!(g.result.relation_len(), 0);
    }

    #[test]
    fn glue_two_edges_into_a_path() {
        let e = ReflectionComplex::trivial(2).unwrap();
        let g = glue(e.base(), e.base(), &[(2, 1)]).unwrap();
        assert_eq!(g.result.ground().vertices(), &[1, 2, 3]);
        assert_eq!(g.result.edge_labels(), vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(g.tau2, BTreeMap::from([(1, 2), (2, 3)]));
    }

    #[test]
    fn glue_fully_identified_is_identity() {
        let m = ReflectionComplex::trivial(2).unwrap().reflect(&[1, 2], &[1]).unwrap();
        let pairs: Vec<_> = m.vertices().iter().map(|&v| (v, v)).collect();
        let g = glue(m.base(), m.base(), &pairs).unwrap();
        assert_eq!(&g.result, m.base());
    }

    #[test]
    fn glue_rejects_bad_maps() {
        let e = ReflectionComplex::trivial(2).unwrap();
        assert!(matches!(glue(e.base(), e.base(), &[(1, 1), (1, 2)]), Err(Error::InvalidMap(_))));
        assert!(matches!(glue(e.base(), e.base(), &[(5, 1)]), Err(Error::InvalidMap(_))));
    }

    #[test]
    fn glue_star_two_edges_over_a_vertex() {
        let e = ReflectionComplex::trivial(2).unwrap();
        let g = glue_star(e.base(), e.base(), &[(1, 1)]).unwrap();
        let m = &g.result;
        assert_eq!(m.ground().vertices(), &[1, 2, 3]);
        let e123 = m.subset(&[1, 2, 3]).unwrap();
        assert_eq!(m.edge_kind(e123), Some(Kind::Second));
        let a = m.subset(&[1, 2]).unwrap();
        let b = m.subset(&[1, 3]).unwrap();
        assert_eq!(m.relation_kind(a, b), Some(Kind::Second));
        assert_eq!(m.relation_len(), 1);
    }

    #[test]
    fn glue_star_over_empty_set_adds_full_union() {
        let e = ReflectionComplex::trivial(2).unwrap();
        let g = glue_star(e.base(), e.base(), &[]).unwrap();
        let m = &g.result;
        assert!(m.is_edge(m.ground().full()));
        assert!(m.related(m.subset(&[1, 2]).unwrap(), m.subset(&[3, 4]).unwrap()));
    }

    #[test]
    fn reflect_over_a_vertex() {
        let m = ReflectionComplex::trivial(2).unwrap().reflect(&[1, 2], &[1]).unwrap();
        assert_eq!(m.vertices(), &[1, 2, 3]);
        assert_eq!(m.frame().edges(), &[vec![1, 2], vec![1, 3]]);
        assert_eq!(m.base().edge_kind(m.base().subset(&[1, 2, 3]).unwrap()), Some(Kind::Second));
        assert_eq!(m.base().relation_labels(), vec![(vec![1, 2], vec![1, 3])]);
        assert_eq!(m.trace(), &[Step::new(&[1, 2], &[1])]);
    }

    #[test]
    fn reflect_over_nothing() {
        let m = ReflectionComplex::trivial(2).unwrap().reflect(&[1, 2], &[]).unwrap();
        assert_eq!(m.frame().edges(), &[vec![1, 2], vec![3, 4]]);
        assert!(m.base().is_edge(m.ground().full()));
        assert_eq!(m.base().relation_labels(), vec![(vec![1, 2], vec![3, 4])]);
    }

    #[test]
    fn two_reflections_give_c4() {
        let m = ReflectionComplex::from_trace(2, &[Step::new(&[1, 2], &[1]), Step::new(&[1, 2, 3], &[2, 3])]).unwrap();
        let c4 = Hypergraph::from_pairs(4, &[(1, 2), (2, 4), (4, 3), (3, 1)]).unwrap();
        assert_eq!(m.frame(), c4);
        assert!(m.is_reducible().is_reducible());
    }

    #[test]
    fn reflect_errors() {
        let m = ReflectionComplex::trivial(2).unwrap().reflect(&[1, 2], &[1]).unwrap();
        assert_eq!(m.reflect(&[2, 3], &[2]).unwrap_err(), Error::NotAnEdge(vec![2, 3]));
        assert!(matches!(m.reflect(&[1, 2], &[3]), Err(Error::InvalidSubset(_))));
    }

    #[test]
    fn reducibility() {
        let t = ReflectionComplex::trivial(2).unwrap();
        match t.is_reducible() {
            Reducibility::Reducible(d) => assert!(d.splits.is_empty()),
            other => panic!("{other:?}"),
        }
        let bad = BHypergraph::from_labels(&[1, 2, 3], &[vec![1, 2, 3]], &[]).unwrap();
        assert_eq!(
            is_k_reducible(&bad, 2),
            Reducibility::Irreducible { witness: vec![1, 2, 3], full_set_missing: false }
        );
        let no_full = BHypergraph::from_labels(&[1, 2, 3], &[vec![1, 2]], &[]).unwrap();
        assert!(matches!(is_k_reducible(&no_full, 2), Reducibility::Irreducible { full_set_missing: true, .. }));
    }

    #[test]
    fn decomposition_leaves_are_frame_edges() {
        let m = ReflectionComplex::from_trace(2, &[Step::new(&[1, 2], &[1]), Step::new(&[1, 2, 3], &[2, 3])]).unwrap();
        let Reducibility::Reducible(d) = m.is_reducible() else { panic!() };
        let frame: BTreeSet<Subset> = m.frame_masks().into_iter().collect();
        assert!(d.leaves().iter().all(|l| frame.contains(l)));
    }
}
