//! Built-in reflection complexes: trees, reflection trees, tree-arrangeable
//! graphs, box products and subdivisions, hypercubes and grids, the
//! three-on-one-side bipartite family, and hypergraph forests.
//!
//! Constructors return complexes whose traces replay from the trivial
//! complex, so every claim made about an entry can be re-checked.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::certify::{certificate_from_trace, certificate_transport_subdivision, MembershipCertificate};
use crate::complex::ReflectionComplex;
use crate::error::{Error, Result};
use crate::graph::{FrameGraph, Hypergraph};
use crate::setfun::{Subset, Vertex};

/// A complex together with where the vertices of the graph it was built from ended up.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub complex: ReflectionComplex,
    /// Source vertex ↦ complex vertex.
    pub labels: BTreeMap<Vertex, Vertex>,
}

fn require_graph(h: &Hypergraph, what: &str) -> Result<()> {
    if h.edge_count() > 0 && !h.is_uniform(2) {
        return Err(Error::Arity(format!("{what} must be a graph")));
    }
    Ok(())
}

/// Parent-before-child order of a tree rooted at its smallest vertex.
fn bfs_edges(t: &Hypergraph) -> Vec<(Vertex, Vertex)> {
    let root = *t.vertices().iter().min().expect("nonempty");
    let mut seen = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        for w in t.neighbors(v) {
            if seen.insert(w) {
                out.push((v, w));
                queue.push_back(w);
            }
        }
    }
    out
}

/// Grows a tree one leaf at a time: a new child `c` of `p` is the reflected
/// copy of an already placed neighbour `q` of `p`, via `r_{{p,q},{p}}`.
pub fn tree_complex(t: &Hypergraph) -> Result<Embedded> {
    require_graph(t, "a tree")?;
    if !t.is_tree() || t.vertex_count() < 2 {
        return Err(Error::NotATree);
    }
    let edges = bfs_edges(t);
    let (root, first) = edges[0];
    let mut m = ReflectionComplex::trivial(2)?;
    let mut labels = BTreeMap::from([(root, 1), (first, 2)]);
    for &(p, c) in &edges[1..] {
        let q = t
            .neighbors(p)
            .into_iter()
            .find(|q| labels.contains_key(q))
            .expect("a placed vertex has a placed neighbour");
        let (mp, mq) = (labels[&p], labels[&q]);
        let r = m.reflect_traced(&[mp, mq], &[mp])?;
        labels.insert(c, r.copy[&mq]);
        m = r.complex;
    }
    Ok(Embedded { complex: m, labels })
}

/// The tree complex of `t` followed by reflections `r_{E_i, X_i}`, with `E_i`
/// and `X_i` given as vertex sets of `t`.
pub fn reflection_tree(t: &Hypergraph, steps: &[(Vec<Vertex>, Vec<Vertex>)]) -> Result<ReflectionComplex> {
    let Embedded { mut complex, labels } = tree_complex(t)?;
    let tr = |vs: &[Vertex]| -> Result<Vec<Vertex>> {
        vs.iter()
            .map(|v| labels.get(v).copied().ok_or_else(|| Error::InvalidSubset(format!("{v} is not a tree vertex"))))
            .collect()
    };
    for (e, x) in steps {
        let (me, mx) = (tr(e)?, tr(x)?);
        complex = complex.reflect(&me, &mx).map_err(|err| match err {
            Error::NotAnEdge(_) => Error::NotAnEdge(e.clone()),
            other => other,
        })?;
    }
    Ok(complex)
}

/// Path on `1..=n`.
pub fn path_graph(n: u32) -> Result<Hypergraph> {
    let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Hypergraph::from_pairs(n, &pairs)
}

/// Star with centre 1 and leaves `2..=leaves+1`.
pub fn star_graph(leaves: u32) -> Result<Hypergraph> {
    let pairs: Vec<_> = (2..=leaves + 1).map(|i| (1, i)).collect();
    Hypergraph::from_pairs(leaves + 1, &pairs)
}

/// `C_{2m}`: the path on `m + 1` vertices reflected across its two ends.
pub fn even_cycle(m: u32) -> Result<ReflectionComplex> {
    if m < 2 {
        return Err(Error::Parameter(format!("even cycles need m >= 2, got {m}")));
    }
    let p = path_graph(m + 1)?;
    reflection_tree(&p, &[(p.vertices().to_vec(), vec![1, m + 1])])
}

/// One operation building a tree-arrangeable graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrangeOp {
    /// Attach a new neighbour to `v`: `r_{{v,w},{v}}` with `w` the smallest neighbour of `v`.
    Leaf(Vertex),
    /// Add a new vertex with neighbourhood `S ⊆ N(v)`: `r_{{v}∪S, S}`.
    Twin(Vertex, Vec<Vertex>),
}

/// Starts from the edge `{1,2}` and applies the operations in order.
pub fn tree_arrangeable(ops: &[ArrangeOp]) -> Result<ReflectionComplex> {
    let mut m = ReflectionComplex::trivial(2)?;
    for op in ops {
        m = match op {
            ArrangeOp::Leaf(v) => {
                let w = m
                    .frame()
                    .neighbors(*v)
                    .into_iter()
                    .next()
                    .ok_or_else(|| Error::Parameter(format!("{v} has no neighbour")))?;
                m.reflect(&[*v, w], &[*v])?
            }
            ArrangeOp::Twin(v, s) => {
                let mut l = s.clone();
                l.push(*v);
                m.reflect(&l, s)?
            }
        };
    }
    Ok(m)
}

/// Cartesian product. Vertex `(a, b)` (by position in the sorted vertex lists)
/// gets label `a·|V2| + b + 1`.
pub fn box_product(h1: &FrameGraph, h2: &FrameGraph) -> Result<FrameGraph> {
    require_graph(h1, "a box-product factor")?;
    require_graph(h2, "a box-product factor")?;
    let mut v1 = h1.vertices().to_vec();
    let mut v2 = h2.vertices().to_vec();
    v1.sort_unstable();
    v2.sort_unstable();
    let n2 = v2.len() as u32;
    let idx1: BTreeMap<Vertex, u32> = v1.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let idx2: BTreeMap<Vertex, u32> = v2.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let id = |a: u32, b: u32| a * n2 + b + 1;
    let mut edges = Vec::new();
    for e in h1.edges() {
        for b in 0..n2 {
            edges.push(vec![id(idx1[&e[0]], b), id(idx1[&e[1]], b)]);
        }
    }
    for e in h2.edges() {
        for a in 0..v1.len() as u32 {
            edges.push(vec![id(a, idx2[&e[0]]), id(a, idx2[&e[1]])]);
        }
    }
    Hypergraph::new((0..v1.len() as u32 * n2).map(|i| i + 1).collect(), edges)
}

/// `T □ e` as a complex, with `J1 = T × {1}` and `J2 = T × {2}`.
#[derive(Clone, Debug)]
pub struct BoxEdge {
    pub complex: ReflectionComplex,
    pub j1: Vec<Vertex>,
    pub j2: Vec<Vertex>,
}

/// Builds `T □ e`: for each tree edge `v → w`, `r_{{v1,v2},{v1}}` creates
/// `w1`, then `r_{{v1,v2,w1},{v2,w1}}` creates `w2`.
pub fn tree_box_edge(t: &Hypergraph) -> Result<BoxEdge> {
    require_graph(t, "a tree")?;
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let mut m = ReflectionComplex::trivial(2)?;
    let root = *t.vertices().iter().min().expect("nonempty");
    let mut side: BTreeMap<Vertex, (Vertex, Vertex)> = BTreeMap::from([(root, (1, 2))]);
    if t.vertex_count() > 1 {
        for (v, w) in bfs_edges(t) {
            let (v1, v2) = side[&v];
            let r = m.reflect_traced(&[v1, v2], &[v1])?;
            let w1 = r.copy[&v2];
            let r2 = r.complex.reflect_traced(&[v1, v2, w1], &[v2, w1])?;
            let w2 = r2.copy[&v1];
            side.insert(w, (w1, w2));
            m = r2.complex;
        }
    }
    Ok(BoxEdge {
        complex: m,
        j1: side.values().map(|s| s.0).collect(),
        j2: side.values().map(|s| s.1).collect(),
    })
}

/// A subdivision of a host complex by an inserted complex, with the maps
/// needed to move certificates across it.
#[derive(Clone, Debug)]
pub struct SubdivisionData {
    pub host: ReflectionComplex,
    pub insert: ReflectionComplex,
    /// `J1`, `J2` as masks over the inserted complex (and, since positions
    /// are stable, over the subdivided one).
    pub j1: Subset,
    pub j2: Subset,
    /// Host-frame coloring; color 1 vertices are blown up into copies of `J1`.
    pub coloring: BTreeMap<Vertex, u8>,
    pub complex: ReflectionComplex,
    /// Host vertex ↦ its blown-up block `J'_v`.
    pub blocks: BTreeMap<Vertex, Subset>,
    /// Host frame edge ↦ position map from the inserted ground set into the subdivided one.
    pub edge_copies: BTreeMap<(Vertex, Vertex), Vec<usize>>,
}

fn map_positions(pos: &[usize], s: Subset) -> Subset {
    Subset(s.positions().fold(0, |acc, p| acc | (1 << pos[p])))
}

impl SubdivisionData {
    /// `γ(S)`: the blocks of the vertices of `S` together with the copies of
    /// the inserted complex on frame edges inside `S`.
    pub fn gamma(&self, s: Subset) -> Subset {
        let host = self.host.ground();
        let mut out = Subset::EMPTY;
        for p in s.positions() {
            out = out.union(self.blocks[&host.vertices()[p]]);
        }
        let full = self.insert.ground().full();
        for (&(a, b), pos) in &self.edge_copies {
            let (pa, pb) = (host.position(a).expect("host vertex"), host.position(b).expect("host vertex"));
            if s.contains(pa) && s.contains(pb) {
                out = out.union(map_positions(pos, full));
            }
        }
        out
    }

    /// The copy of the inserted vertex set sitting on host edge `(a, b)`.
    pub fn edge_copy(&self, a: Vertex, b: Vertex) -> Option<Subset> {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.edge_copies.get(&key).map(|pos| map_positions(pos, self.insert.ground().full()))
    }
}

/// The coloring a trace induces on its frame: vertex 1 gets color 1, vertex 2
/// color 2, and reflected copies inherit their source's color.
pub fn trace_coloring(m: &ReflectionComplex) -> Result<BTreeMap<Vertex, u8>> {
    let mut cur = ReflectionComplex::trivial(2)?;
    let mut color = BTreeMap::from([(1, 1u8), (2, 2u8)]);
    for step in m.trace() {
        let r = cur.reflect_traced(&step.l, &step.x)?;
        for (src, dst) in &r.copy {
            color.insert(*dst, color[src]);
        }
        cur = r.complex;
    }
    Ok(color)
}

/// Replays the host trace starting from `insert`, with host vertex 1 blown up
/// into `J1` and vertex 2 into `J2` (swapped if `coloring` says so).
///
/// Copies of blocks follow copies of host vertices, so the only colorings
/// compatible with the trace are the one it induces and its swap.
pub fn subdivide(
    host: &ReflectionComplex,
    insert: &ReflectionComplex,
    j1: &[Vertex],
    j2: &[Vertex],
    coloring: Option<&BTreeMap<Vertex, u8>>,
) -> Result<SubdivisionData> {
    if host.arity() != 2 || insert.arity() != 2 {
        return Err(Error::Arity("subdivision is defined for graph complexes".into()));
    }
    let j1m = insert.ground().subset(j1)?;
    let j2m = insert.ground().subset(j2)?;
    if !j1m.intersection(j2m).is_empty() {
        return Err(Error::Disjointness);
    }
    if j1m.is_empty() || j2m.is_empty() {
        return Err(Error::Parameter("J1 and J2 must be nonempty".into()));
    }
    let induced = trace_coloring(host)?;
    let frame = host.frame();
    let coloring = match coloring {
        None => induced,
        Some(c) => {
            if frame.edges().iter().any(|e| c.get(&e[0]) == c.get(&e[1]))
                || host.vertices().iter().any(|v| !matches!(c.get(v), Some(1 | 2)))
            {
                return Err(Error::Bipartition("not a proper 2-coloring of the host frame".into()));
            }
            let same = induced.iter().all(|(v, col)| c[v] == *col);
            let swapped = induced.iter().all(|(v, col)| c[v] == 3 - *col);
            if !same && !swapped {
                return Err(Error::Bipartition(
                    "the coloring must be the one induced by the host trace or its swap".into(),
                ));
            }
            c.clone()
        }
    };
    let block_of = |col: u8| if col == 1 { j1m } else { j2m };

    let mut data = SubdivisionData {
        host: ReflectionComplex::trivial(2)?,
        insert: insert.clone(),
        j1: j1m,
        j2: j2m,
        coloring: coloring.clone(),
        complex: insert.clone(),
        blocks: BTreeMap::from([(1, block_of(coloring[&1])), (2, block_of(coloring[&2]))]),
        edge_copies: BTreeMap::from([((1, 2), (0..insert.vertex_count()).collect())]),
    };
    for step in host.trace() {
        let hg = data.host.ground().clone();
        let l = hg.subset(&step.l)?;
        let x = hg.subset(&step.x)?;
        let (gl, gx) = (data.gamma(l), data.gamma(x));
        let hat = data.complex.reflect_traced(&data.complex.ground().labels(gl), &data.complex.ground().labels(gx))?;
        let hr = data.host.reflect_traced(&step.l, &step.x)?;
        let old = data.complex.ground();
        let new = hat.complex.ground();
        let pos: Vec<usize> = old
            .vertices()
            .iter()
            .map(|v| new.position(*hat.copy.get(v).unwrap_or(v)).expect("image in ground"))
            .collect();
        for (&src, &dst) in &hr.copy {
            if src != dst {
                let b = map_positions(&pos, data.blocks[&src]);
                data.blocks.insert(dst, b);
            }
        }
        let host_frame = data.host.frame();
        let copied: Vec<((Vertex, Vertex), Vec<usize>)> = host_frame
            .edges()
            .iter()
            .filter(|e| l.contains(hg.position(e[0]).unwrap()) && l.contains(hg.position(e[1]).unwrap()))
            .filter(|e| !(x.contains(hg.position(e[0]).unwrap()) && x.contains(hg.position(e[1]).unwrap())))
            .map(|e| {
                let (a, b) = (hr.copy[&e[0]], hr.copy[&e[1]]);
                let key = if a <= b { (a, b) } else { (b, a) };
                let src = &data.edge_copies[&(e[0], e[1])];
                (key, src.iter().map(|&p| pos[p]).collect())
            })
            .collect();
        data.edge_copies.extend(copied);
        data.complex = hat.complex;
        data.host = hr.complex;
    }
    debug_assert!(data.host == *host);
    data.host = host.clone();
    Ok(data)
}

/// A complex with a certificate obtained without an LP.
#[derive(Clone, Debug)]
pub struct Certified {
    pub complex: ReflectionComplex,
    pub certificate: MembershipCertificate,
}

fn subdivide_certified(host: &Certified, insert: &BoxEdge) -> Result<Certified> {
    let data = subdivide(&host.complex, &insert.complex, &insert.j1, &insert.j2, None)?;
    let cert_n = certificate_from_trace(&insert.complex)?;
    let certificate = certificate_transport_subdivision(&host.certificate, &cert_n, &data)?;
    Ok(Certified { complex: data.complex, certificate })
}

/// The n-cube: `Q_n = Q_{n−1}` subdivided by `e □ e`, starting from `Q_1 = e`.
pub fn hypercube_certified(n: u32) -> Result<Certified> {
    if n < 1 {
        return Err(Error::Parameter("hypercube dimension must be at least 1".into()));
    }
    if n > 6 {
        return Err(Error::SizeCap { what: "hypercube vertices", size: 1u128 << n, cap: 64 });
    }
    let e = path_graph(2)?;
    let insert = tree_box_edge(&e)?;
    let mut cur = Certified { complex: ReflectionComplex::trivial(2)?, certificate: MembershipCertificate::empty() };
    for _ in 1..n {
        cur = subdivide_certified(&cur, &insert)?;
    }
    Ok(cur)
}

pub fn hypercube_complex(n: u32) -> Result<ReflectionComplex> {
    Ok(hypercube_certified(n)?.complex)
}

/// `P_{a1} □ … □ P_{ad}` with every `a_i >= 2` vertices.
pub fn grid_certified(paths: &[u32]) -> Result<Certified> {
    if paths.is_empty() || paths.iter().any(|&a| a < 2) {
        return Err(Error::Parameter("grid sides must be at least 2".into()));
    }
    let total: u128 = paths.iter().map(|&a| a as u128).product();
    if total > 64 {
        return Err(Error::SizeCap { what: "grid vertices", size: total, cap: 64 });
    }
    let first = tree_complex(&path_graph(paths[0])?)?.complex;
    let mut cur = Certified { certificate: certificate_from_trace(&first)?, complex: first };
    for &a in &paths[1..] {
        cur = subdivide_certified(&cur, &tree_box_edge(&path_graph(a)?)?)?;
    }
    Ok(cur)
}

pub fn grid_complex(paths: &[u32]) -> Result<ReflectionComplex> {
    Ok(grid_certified(paths)?.complex)
}

/// Bipartite graphs with left side `{1,2,3}` and `v_j` right vertices whose
/// neighbourhood is `{1,2,3} ∖ {j}`. Built from the six-cycle
/// `1 – z2 – 3 – z1 – 2 – z3 – 1` by reflecting it across all vertices but `z_j`.
#[derive(Clone, Debug)]
pub struct ThreeSide {
    pub complex: ReflectionComplex,
    /// Complex labels of the left vertices 1, 2, 3.
    pub left: [Vertex; 3],
    /// Complex labels of the right vertices, grouped by missing neighbour.
    pub right: [Vec<Vertex>; 3],
}

pub fn bipartite_3side(v: [u32; 3]) -> Result<ThreeSide> {
    if v.iter().any(|&c| c < 1) {
        return Err(Error::Parameter(format!("right-side counts must be positive, got {v:?}")));
    }
    // Path 1-2-3-4 reflected across {1,4}: copies 5 (of 2) and 6 (of 3).
    let mut m = even_cycle(3)?;
    let left = [1, 6, 3];
    let mut right = [vec![4], vec![2], vec![5]];
    let w: Vec<Vertex> = (1..=6).collect();
    for j in 0..3 {
        let z = right[j][0];
        let x: Vec<Vertex> = w.iter().copied().filter(|&u| u != z).collect();
        for _ in 1..v[j] {
            let r = m.reflect_traced(&w, &x)?;
            right[j].push(r.copy[&z]);
            m = r.complex;
        }
    }
    Ok(ThreeSide { complex: m, left, right })
}

/// Reflections `r_{L,X}` of arity `k` starting from the single k-edge, where
/// each `L` is a k-edge; gluing along part of an edge keeps the result a
/// hypergraph forest.
pub fn k_forest(k: usize, spec: &[(Vec<Vertex>, Vec<Vertex>)]) -> Result<ReflectionComplex> {
    let mut m = ReflectionComplex::trivial(k)?;
    for (l, x) in spec {
        if l.len() != k {
            return Err(Error::Parameter(format!("{l:?} is not a {k}-edge")));
        }
        m = m.reflect(l, x)?;
    }
    Ok(m)
}

/// The tight path with edges `{i, …, i+k−1}` for `i = 1..=n−k+1`.
pub fn tight_path(k: usize, n: usize) -> Result<ReflectionComplex> {
    if k < 2 || n < k {
        return Err(Error::Parameter(format!("tight path needs 2 <= k <= n, got k = {k}, n = {n}")));
    }
    let spec: Vec<(Vec<Vertex>, Vec<Vertex>)> = (1..=(n - k) as u32)
        .map(|i| ((i..i + k as u32).collect(), (i + 1..i + k as u32).collect()))
        .collect();
    k_forest(k, &spec)
}

/// Complete k-partite k-uniform hypergraph with parts of sizes `a`. Vertex
/// `j` of the starting edge is the first member of part `j`; part `j` then
/// grows by reflecting the whole current set across everything but `j`.
pub fn complete_k_partite(a: &[usize]) -> Result<ReflectionComplex> {
    let k = a.len();
    if k < 2 || a.iter().any(|&s| s < 1) {
        return Err(Error::Parameter(format!("need at least two positive part sizes, got {a:?}")));
    }
    let mut m = ReflectionComplex::trivial(k)?;
    for (j, &size) in a.iter().enumerate() {
        let q = j as Vertex + 1;
        let l: Vec<Vertex> = m.vertices().to_vec();
        let x: Vec<Vertex> = l.iter().copied().filter(|&u| u != q).collect();
        for _ in 1..size {
            m = m.reflect(&l, &x)?;
        }
    }
    Ok(m)
}

/// One catalog entry: a named construction, optionally with a certificate
/// that needs no LP (entries built by subdivision carry one).
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub complex: ReflectionComplex,
    pub certificate: Option<MembershipCertificate>,
}

/// Name, parameter usage, description.
pub const NAMES: &[(&str, &str, &str)] = &[
    ("edge", "", "a single edge (the trivial complex)"),
    ("path", "N", "path on N >= 2 vertices"),
    ("star", "L", "star with L >= 1 leaves"),
    ("even-cycle", "M", "cycle on 2M vertices, M >= 2"),
    ("c4", "", "four-cycle"),
    ("c6", "", "six-cycle"),
    ("reflection-tree", "", "path 1-2-3-4-5 reflected across {2,3,4} along {2,4}, then across all of it along {1,5}"),
    ("tree-arrangeable", "", "edge grown by leaf and twin operations into a bipartite graph on 8 vertices"),
    ("bipartite-3side", "V1 V2 V3", "left side {1,2,3}; Vj right vertices adjacent to all left vertices but j"),
    ("bipartite-4side", "", "four vertices on one side (not constructed)"),
    ("hypercube", "N", "N-dimensional cube, 1 <= N <= 6"),
    ("grid", "A1 A2 ...", "product of paths with A_i >= 2 vertices"),
    ("tight-path", "K N", "K-uniform tight path on N vertices"),
    ("complete-partite", "A1 ... AK", "complete K-partite K-uniform hypergraph"),
];

pub const UNSUPPORTED_4SIDE: &str = "unsupported: bipartite graphs with 4 vertices on one side are not constructed";

fn want(name: &str, params: &[u32], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::Parameter(format!("{name} takes {n} parameter(s), got {}", params.len())));
    }
    Ok(())
}

/// Builds a catalog entry by name.
pub fn build(name: &str, params: &[u32]) -> Result<Entry> {
    let plain = |complex| Ok::<_, Error>((complex, None));
    let (complex, certificate) = match name {
        "edge" => {
            want(name, params, 0)?;
            plain(ReflectionComplex::trivial(2)?)?
        }
        "path" => {
            want(name, params, 1)?;
            plain(tree_complex(&path_graph(params[0])?)?.complex)?
        }
        "star" => {
            want(name, params, 1)?;
            plain(tree_complex(&star_graph(params[0])?)?.complex)?
        }
        "even-cycle" => {
            want(name, params, 1)?;
            plain(even_cycle(params[0])?)?
        }
        "c4" => {
            want(name, params, 0)?;
            plain(even_cycle(2)?)?
        }
        "c6" => {
            want(name, params, 0)?;
            plain(even_cycle(3)?)?
        }
        "reflection-tree" => {
            want(name, params, 0)?;
            plain(reflection_tree_example()?)?
        }
        "tree-arrangeable" => {
            want(name, params, 0)?;
            plain(tree_arrangeable_example()?)?
        }
        "bipartite-3side" => {
            want(name, params, 3)?;
            plain(bipartite_3side([params[0], params[1], params[2]])?.complex)?
        }
        "bipartite-4side" => return Err(Error::Unsupported(UNSUPPORTED_4SIDE.into())),
        "hypercube" => {
            want(name, params, 1)?;
            let c = hypercube_certified(params[0])?;
            (c.complex, Some(c.certificate))
        }
        "grid" => {
            let c = grid_certified(params)?;
            (c.complex, Some(c.certificate))
        }
        "tight-path" => {
            want(name, params, 2)?;
            plain(tight_path(params[0] as usize, params[1] as usize)?)?
        }
        "complete-partite" => {
            let a: Vec<usize> = params.iter().map(|&p| p as usize).collect();
            plain(complete_k_partite(&a)?)?
        }
        other => return Err(Error::Parameter(format!("unknown catalog entry {other:?}"))),
    };
    Ok(Entry { name: name.to_string(), complex, certificate })
}

/// Path on 5 vertices with two reflections; the frame has a vertex complete
/// to the other side.
pub fn reflection_tree_example() -> Result<ReflectionComplex> {
    let p = path_graph(5)?;
    reflection_tree(&p, &[(vec![2, 3, 4], vec![2, 4]), (vec![1, 2, 3, 4, 5], vec![1, 5])])
}

/// Leaf and twin operations producing a bipartite graph on 8 vertices.
pub fn tree_arrangeable_example() -> Result<ReflectionComplex> {
    use ArrangeOp::*;
    tree_arrangeable(&[Leaf(1), Leaf(2), Leaf(1), Twin(1, vec![2, 3]), Leaf(3), Twin(2, vec![1, 4])])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Step;
    use crate::certify::{in_class_c, in_class_ck, thickness_problem, verify_certificate, Claim};

    fn cycle(n: u32) -> Hypergraph {
        let mut pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        pairs.push((n, 1));
        Hypergraph::from_pairs(n, &pairs).unwrap()
    }

    fn thick_by_construction(m: &ReflectionComplex) {
        assert!(in_class_c(m).unwrap().member, "{:?}", m.trace());
        let p = thickness_problem(m.base(), 2, Claim::Thick).unwrap();
        assert!(verify_certificate(&p, &certificate_from_trace(m).unwrap()).unwrap());
    }

    #[test]
    fn tree_complexes() {
        let e = tree_complex(&path_graph(2).unwrap()).unwrap();
        assert_eq!(e.complex, ReflectionComplex::trivial(2).unwrap());
        let p3 = tree_complex(&path_graph(3).unwrap()).unwrap();
        assert_eq!(p3.complex.trace(), &[Step::new(&[1, 2], &[2])]);
        let star = tree_complex(&star_graph(3).unwrap()).unwrap();
        assert!(star.complex.frame().is_isomorphic_to(&star_graph(3).unwrap()));
        thick_by_construction(&star.complex);
        let bad = cycle(4);
        assert!(matches!(tree_complex(&bad), Err(Error::NotATree)));
    }

    #[test]
    fn tree_complex_edges_are_subtrees() {
        let t = Hypergraph::from_pairs(5, &[(1, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let e = tree_complex(&t).unwrap();
        let frame = e.complex.frame();
        assert!(frame.is_isomorphic_to(&t));
        for s in e.complex.ground().full().subsets().filter(|s| !s.is_empty()) {
            let keep: BTreeSet<Vertex> = e.complex.ground().labels(s).into_iter().collect();
            let connected = s.len() >= 2 && frame.induced(&keep).is_connected();
            assert_eq!(e.complex.base().is_edge(s), connected, "{keep:?}");
        }
    }

    #[test]
    fn reflection_trees_and_cycles() {
        let p3 = path_graph(3).unwrap();
        let c4 = reflection_tree(&p3, &[(vec![1, 2, 3], vec![1, 3])]).unwrap();
        assert!(c4.frame().is_isomorphic_to(&cycle(4)));
        for m in 2..5 {
            let c = even_cycle(m).unwrap();
            assert!(c.frame().is_isomorphic_to(&cycle(2 * m)));
            thick_by_construction(&c);
        }
        assert_eq!(reflection_tree(&p3, &[]).unwrap(), tree_complex(&p3).unwrap().complex);
        assert!(matches!(reflection_tree(&p3, &[(vec![1, 3], vec![1])]), Err(Error::NotAnEdge(_))));
        let ex = reflection_tree_example().unwrap();
        thick_by_construction(&ex);
        assert!(ex.frame().two_coloring().is_some());
    }

    #[test]
    fn tree_arrangeable_ops() {
        let star = tree_arrangeable(&[ArrangeOp::Leaf(1), ArrangeOp::Leaf(1)]).unwrap();
        assert!(star.frame().is_isomorphic_to(&star_graph(3).unwrap()));
        let twin = tree_arrangeable(&[ArrangeOp::Leaf(1), ArrangeOp::Twin(1, vec![2, 3])]).unwrap();
        let f = twin.frame();
        assert_eq!(f.neighbors(4), f.neighbors(1));
        let ex = tree_arrangeable_example().unwrap();
        assert_eq!(ex.vertex_count(), 8);
        thick_by_construction(&ex);
        assert!(matches!(tree_arrangeable(&[ArrangeOp::Twin(1, vec![2, 3])]), Err(Error::NotAnEdge(_))));
    }

    #[test]
    fn box_products() {
        let e = path_graph(2).unwrap();
        let c4 = box_product(&e, &e).unwrap();
        assert!(c4.is_isomorphic_to(&cycle(4)));
        let q3 = box_product(&c4, &e).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let p3 = path_graph(3).unwrap();
        let g = box_product(&p3, &c4).unwrap();
        assert_eq!(g.edge_count(), 3 * 4 + 4 * 2);
    }

    #[test]
    fn tree_box_edge_is_the_product() {
        for t in [path_graph(2).unwrap(), path_graph(3).unwrap(), star_graph(3).unwrap()] {
            let b = tree_box_edge(&t).unwrap();
            let e = path_graph(2).unwrap();
            assert!(b.complex.frame().is_isomorphic_to(&box_product(&t, &e).unwrap()));
            thick_by_construction(&b.complex);
            assert_eq!(b.j1.len(), t.vertex_count());
        }
    }

    #[test]
    fn identity_subdivision() {
        let host = even_cycle(2).unwrap();
        let e = ReflectionComplex::trivial(2).unwrap();
        let d = subdivide(&host, &e, &[1], &[2], None).unwrap();
        assert!(d.complex.frame().is_isomorphic_to(&host.frame()));
        let cert_m = certificate_from_trace(&host).unwrap();
        let cert = certificate_transport_subdivision(&cert_m, &MembershipCertificate::empty(), &d).unwrap();
        let p = thickness_problem(d.complex.base(), 2, Claim::Thick).unwrap();
        assert!(verify_certificate(&p, &cert).unwrap());
        assert!(matches!(subdivide(&host, &e, &[1], &[1], None), Err(Error::Disjointness)));
    }

    #[test]
    fn subdivision_of_trivial_host_is_the_insert() {
        let b = tree_box_edge(&path_graph(3).unwrap()).unwrap();
        let host = ReflectionComplex::trivial(2).unwrap();
        let d = subdivide(&host, &b.complex, &b.j1, &b.j2, None).unwrap();
        assert_eq!(d.complex, b.complex);
    }

    #[test]
    fn gamma_invariants() {
        let host = even_cycle(2).unwrap();
        let b = tree_box_edge(&path_graph(2).unwrap()).unwrap();
        let d = subdivide(&host, &b.complex, &b.j1, &b.j2, None).unwrap();
        let full = host.ground().full();
        for a in full.subsets() {
            for c in full.subsets() {
                assert_eq!(d.gamma(a.intersection(c)), d.gamma(a).intersection(d.gamma(c)));
                let u = d.gamma(a).union(d.gamma(c));
                assert!(u.is_subset_of(d.gamma(a.union(c))));
                if host.base().related(a, c) {
                    assert_eq!(u, d.gamma(a.union(c)));
                }
            }
        }
    }

    #[test]
    fn p3_box_c4_by_subdivision() {
        let host = even_cycle(2).unwrap();
        let b = tree_box_edge(&path_graph(3).unwrap()).unwrap();
        let d = subdivide(&host, &b.complex, &b.j1, &b.j2, None).unwrap();
        let expect = box_product(&path_graph(3).unwrap(), &cycle(4)).unwrap();
        assert!(d.complex.frame().is_isomorphic_to(&expect));
        let cert = certificate_transport_subdivision(
            &certificate_from_trace(&host).unwrap(),
            &certificate_from_trace(&b.complex).unwrap(),
            &d,
        )
        .unwrap();
        let p = thickness_problem(d.complex.base(), 2, Claim::Thick).unwrap();
        assert!(verify_certificate(&p, &cert).unwrap());
    }

    #[test]
    fn coloring_options() {
        let host = even_cycle(2).unwrap();
        let b = tree_box_edge(&path_graph(2).unwrap()).unwrap();
        let induced = trace_coloring(&host).unwrap();
        let swapped: BTreeMap<_, _> = induced.iter().map(|(v, c)| (*v, 3 - c)).collect();
        let d = subdivide(&host, &b.complex, &b.j1, &b.j2, Some(&swapped)).unwrap();
        assert_eq!(d.blocks[&1], d.j2);
        let mut bad = induced.clone();
        bad.insert(1, 2);
        assert!(matches!(subdivide(&host, &b.complex, &b.j1, &b.j2, Some(&bad)), Err(Error::Bipartition(_))));
    }

    #[test]
    fn hypercubes() {
        assert_eq!(hypercube_complex(1).unwrap(), ReflectionComplex::trivial(2).unwrap());
        assert!(hypercube_complex(2).unwrap().frame().is_isomorphic_to(&cycle(4)));
        let e = path_graph(2).unwrap();
        let mut q = e.clone();
        for n in 2..=4 {
            q = box_product(&q, &e).unwrap();
            let c = hypercube_certified(n).unwrap();
            assert_eq!(c.complex.frame().edge_count(), q.edge_count());
            if n <= 3 {
                assert!(c.complex.frame().is_isomorphic_to(&q));
            }
            let p = thickness_problem(c.complex.base(), 2, Claim::Thick).unwrap();
            assert!(verify_certificate(&p, &c.certificate).unwrap(), "Q{n}");
        }
    }

    #[test]
    fn grids() {
        let c = grid_certified(&[3, 2]).unwrap();
        let expect = box_product(&path_graph(3).unwrap(), &path_graph(2).unwrap()).unwrap();
        assert!(c.complex.frame().is_isomorphic_to(&expect));
        let p = thickness_problem(c.complex.base(), 2, Claim::Thick).unwrap();
        assert!(verify_certificate(&p, &c.certificate).unwrap());
        assert!(grid_certified(&[1, 3]).is_err());
    }

    #[test]
    fn three_side_family() {
        let c6 = bipartite_3side([1, 1, 1]).unwrap();
        assert!(c6.complex.frame().is_isomorphic_to(&cycle(6)));
        let f = c6.complex.frame();
        for (j, zs) in c6.right.iter().enumerate() {
            for &z in zs {
                let nb = f.neighbors(z);
                let expect: BTreeSet<Vertex> = (0..3).filter(|&i| i != j).map(|i| c6.left[i]).collect();
                assert_eq!(nb, expect);
            }
        }
        let b = bipartite_3side([2, 1, 1]).unwrap();
        assert_eq!(b.complex.vertex_count(), 7);
        assert_eq!(b.right[0].len(), 2);
        thick_by_construction(&b.complex);
        thick_by_construction(&bipartite_3side([2, 3, 1]).unwrap().complex);
        assert!(bipartite_3side([0, 1, 1]).is_err());
    }

    #[test]
    fn hypergraph_families() {
        let p = tight_path(2, 4).unwrap();
        assert!(p.frame().is_isomorphic_to(&path_graph(4).unwrap()));
        let t = tight_path(3, 4).unwrap();
        assert_eq!(t.frame().edges(), &[vec![1, 2, 3], vec![2, 3, 4]]);
        assert!(in_class_ck(&t).member);
        let k = complete_k_partite(&[1, 1, 2]).unwrap();
        assert_eq!(k.frame().edge_count(), 2);
        let oct = complete_k_partite(&[2, 2, 2]).unwrap();
        assert_eq!((oct.vertex_count(), oct.frame().edge_count()), (6, 8));
        assert!(in_class_ck(&oct).member);
        assert!(tight_path(3, 2).is_err());
        assert!(k_forest(3, &[(vec![1, 2], vec![1])]).is_err());
    }

    #[test]
    fn registry() {
        for (name, _, _) in NAMES {
            let params: Vec<u32> = match *name {
                "path" => vec![4],
                "star" => vec![3],
                "even-cycle" => vec![3],
                "bipartite-3side" => vec![1, 1, 1],
                "hypercube" => vec![3],
                "grid" => vec![2, 3],
                "tight-path" => vec![3, 5],
                "complete-partite" => vec![2, 2, 2],
                _ => vec![],
            };
            let r = build(name, &params);
            if *name == "bipartite-4side" {
                assert!(matches!(r, Err(Error::Unsupported(_))));
            } else {
                let e = r.unwrap();
                let replay = ReflectionComplex::from_trace(e.complex.arity(), e.complex.trace()).unwrap();
                assert_eq!(replay, e.complex);
            }
        }
        assert!(build("nope", &[]).is_err());
    }
}
