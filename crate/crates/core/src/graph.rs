//! Graphs and uniform hypergraphs: the frames whose densities are at stake
//! and the finite targets they are counted in.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setfun::{GroundSet, Subset, Vertex};

/// Plain serialized form `{vertices: […], edges: [[…], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Vec<Vertex>>,
}

/// A finite hypergraph with a fixed vertex order. Edges are stored sorted and
/// deduplicated; parallel edges collapse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct Hypergraph {
    vertices: Vec<Vertex>,
    edges: Vec<Vec<Vertex>>,
}

/// A frame: the size-k edges of a complex, viewed as a k-uniform hypergraph.
pub type FrameGraph = Hypergraph;

impl TryFrom<GraphFile> for Hypergraph {
    type Error = Error;
    fn try_from(f: GraphFile) -> Result<Self> {
        Hypergraph::new(f.vertices, f.edges)
    }
}

impl From<Hypergraph> for GraphFile {
    fn from(h: Hypergraph) -> Self {
        GraphFile { vertices: h.vertices, edges: h.edges }
    }
}

impl Hypergraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        let vset: HashSet<Vertex> = vertices.iter().copied().collect();
        if vset.len() != vertices.len() {
            let mut seen = HashSet::new();
            let dup = vertices.iter().find(|v| !seen.insert(**v)).copied().unwrap_or_default();
            return Err(Error::DuplicateVertex(dup));
        }
        let mut canon = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            if e.is_empty() {
                return Err(Error::Parse("empty edge".into()));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse(format!("edge {e:?} repeats a vertex")));
            }
            if let Some(v) = e.iter().find(|v| !vset.contains(v)) {
                return Err(Error::Parse(format!("edge {e:?} uses unknown vertex {v}")));
            }
            canon.insert(e);
        }
        Ok(Hypergraph { vertices, edges: canon.into_iter().collect() })
    }

    /// Graph on `1..=n` with the given pairs.
    pub fn from_pairs(n: u32, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new((1..=n).collect(), pairs.iter().map(|&(a, b)| vec![a, b]).collect())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Common edge size, or `None` for an edgeless or non-uniform hypergraph.
    pub fn arity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    pub fn has_edge(&self, e: &[Vertex]) -> bool {
        let mut e = e.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    pub fn ground(&self) -> Result<GroundSet> {
        GroundSet::new(self.vertices.iter().copied())
    }

    pub fn edge_masks(&self, ground: &GroundSet) -> Result<Vec<Subset>> {
        self.edges.iter().map(|e| ground.subset(e)).collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn degrees(&self) -> BTreeMap<Vertex, usize> {
        let mut d: BTreeMap<Vertex, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            for v in e {
                *d.entry(*v).or_default() += 1;
            }
        }
        d
    }

    /// Vertices sharing an edge with `v`.
    pub fn neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.edges
            .iter()
            .filter(|e| e.contains(&v))
            .flat_map(|e| e.iter().copied())
            .filter(|&w| w != v)
            .collect()
    }

    /// Sub-hypergraph spanned on `keep` (edges entirely inside it).
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Hypergraph {
        Hypergraph {
            vertices: self.vertices.iter().copied().filter(|v| keep.contains(v)).collect(),
            edges: self.edges.iter().filter(|e| e.iter().all(|v| keep.contains(v))).cloned().collect(),
        }
    }

    pub fn relabeled(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Hypergraph> {
        Hypergraph::new(
            self.vertices.iter().map(|&v| f(v)).collect(),
            self.edges.iter().map(|e| e.iter().map(|&v| f(v)).collect()).collect(),
        )
    }

    /// Disjoint union; the second operand's vertices are shifted past the first's maximum.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let shift = self.vertices.iter().copied().max().unwrap_or(0);
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| v + shift));
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.iter().map(|v| v + shift).collect()));
        Hypergraph::new(vertices, edges)
    }

    fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A 2-uniform graph without cycles.
    pub fn is_forest(&self) -> bool {
        self.is_uniform(2) && self.edges.len() + self.components().len() == self.vertices.len()
    }

    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty() && self.is_forest() && self.is_connected()
    }

    /// Proper 2-coloring (values 1 and 2) that gives the smallest vertex of
    /// each component color 1, following the vertex order. `None` if not bipartite.
    pub fn two_coloring(&self) -> Option<BTreeMap<Vertex, u8>> {
        if !self.is_uniform(2) {
            return None;
        }
        let mut color: BTreeMap<Vertex, u8> = BTreeMap::new();
        let mut order = self.vertices.clone();
        order.sort_unstable();
        for start in order {
            if color.contains_key(&start) {
                continue;
            }
            color.insert(start, 1);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[&v];
                for w in self.neighbors(v) {
                    match color.get(&w) {
                        Some(&cw) if cw == c => return None,
                        Some(_) => {}
                        None => {
                            color.insert(w, 3 - c);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        Some(color)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile { vertices: self.vertices.clone(), edges: self.edges.clone() }
    }

    /// Brute-force isomorphism test for small graphs (test and validation helper).
    pub fn is_isomorphic_to(&self, other: &Hypergraph) -> bool {
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut da: Vec<usize> = self.degrees().into_values().collect();
        let mut db: Vec<usize> = other.degrees().into_values().collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let n = self.vertices.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        fn rec(
            a: &Hypergraph,
            b: &Hypergraph,
            depth: usize,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let n = a.vertices.len();
            if depth == n {
                let map: HashMap<Vertex, Vertex> =
                    (0..n).map(|i| (a.vertices[i], b.vertices[perm[i]])).collect();
                return a.edges.iter().all(|e| b.has_edge(&e.iter().map(|v| map[v]).collect::<Vec<_>>()));
            }
            let va = a.vertices[depth];
            let deg = a.degree(va);
            for j in 0..n {
                if used[j] || b.degree(b.vertices[j]) != deg {
                    continue;
                }
                used[j] = true;
                perm[depth] = j;
                if rec(a, b, depth + 1, perm, used) {
                    return true;
                }
                used[j] = false;
            }
            false
        }
        rec(self, other, 0, &mut perm, &mut used)
    }
}

/// The finite structure densities and measures are evaluated in: a
/// k-uniform hypergraph (k = 2 for graphs) with at least one edge.
#[derive(Clone, Debug)]
pub struct TargetGraph {
    graph: Hypergraph,
    arity: usize,
    index: HashMap<Vertex, usize>,
    edge_set: HashSet<Vec<u32>>,
    adjacency: Vec<Vec<u32>>,
}

impl PartialEq for TargetGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

impl Eq for TargetGraph {}

impl TargetGraph {
    pub fn new(graph: Hypergraph) -> Result<Self> {
        let arity = match graph.edges.first() {
            None => return Err(Error::EmptyTarget),
            Some(e) => e.len(),
        };
        if arity < 2 || !graph.is_uniform(arity) {
            return Err(Error::Arity("target must be a k-uniform hypergraph with k >= 2".into()));
        }
        let index: HashMap<Vertex, usize> = graph.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edge_set = HashSet::new();
        let mut adjacency = vec![BTreeSet::new(); graph.vertices.len()];
        for e in &graph.edges {
            let mut idx: Vec<u32> = e.iter().map(|v| index[v] as u32).collect();
            idx.sort_unstable();
            for &a in &idx {
                for &b in &idx {
                    if a != b {
                        adjacency[a as usize].insert(b);
                    }
                }
            }
            edge_set.insert(idx);
        }
        Ok(TargetGraph {
            graph,
            arity,
            index,
            edge_set,
            adjacency: adjacency.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges.len()
    }

    pub fn vertex(&self, idx: u32) -> Vertex {
        self.graph.vertices[idx as usize]
    }

    pub fn index_of(&self, v: Vertex) -> Option<u32> {
        self.index.get(&v).map(|&i| i as u32)
    }

    /// Whether the (unordered) index tuple is an edge; repeated indices never are.
    pub fn is_edge_idx(&self, idx: &[u32]) -> bool {
        let mut key = idx.to_vec();
        key.sort_unstable();
        self.edge_set.contains(&key)
    }

    pub fn neighbors_idx(&self, idx: u32) -> &[u32] {
        &self.adjacency[idx as usize]
    }

    /// Edges as sorted index tuples.
    pub fn edges_idx(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.edge_set.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forest_and_tree_detection() {
        let path = Hypergraph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(path.is_tree());
        let two = Hypergraph::from_pairs(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(two.is_forest() && !two.is_tree());
        let c4 = Hypergraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(!c4.is_forest());
        assert_eq!(c4.two_coloring().unwrap().values().filter(|&&c| c == 1).count(), 2);
        let tri = Hypergraph::from_pairs(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(tri.two_coloring().is_none());
    }

    #[test]
    fn target_requires_an_edge() {
        let empty = Hypergraph::new(vec![1, 2], vec![]).unwrap();
        assert_eq!(TargetGraph::new(empty), Err(Error::EmptyTarget));
        let t = TargetGraph::new(Hypergraph::from_pairs(2, &[(1, 2)]).unwrap()).unwrap();
        assert!(t.is_edge_idx(&[1, 0]));
        assert!(!t.is_edge_idx(&[0, 0]));
    }

    #[test]
    fn rejects_loops_and_unknown_vertices() {
        assert!(Hypergraph::new(vec![1], vec![vec![1, 1]]).is_err());
        assert!(Hypergraph::new(vec![1, 2], vec![vec![1, 3]]).is_err());
    }

    #[test]
    fn isomorphism_helper() {
        let c4a = Hypergraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let c4b = Hypergraph::from_pairs(4, &[(1, 3), (3, 2), (2, 4), (1, 4)]).unwrap();
        let p4 = Hypergraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(c4a.is_isomorphic_to(&c4b));
        assert!(!c4a.is_isomorphic_to(&p4));
    }
}
