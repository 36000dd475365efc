//! Exact rational set functions on the subsets of a small ground set.
//!
//! Subsets are bitmasks against the fixed vertex order of a [`GroundSet`].
//! A [`SetFunction`] stores only its nonzero values, so two functions are
//! equal exactly when their entry maps are equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Vertex = u32;

/// Hard limit imposed by the `u64` subset encoding.
pub const MAX_GROUND: usize = 64;
/// Default cap on ground sets built for certification.
pub const DEFAULT_GROUND_CAP: usize = 16;

/// A subset of a ground set, as a bitmask over vertex positions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(pos: usize) -> Self {
        Subset(1 << pos)
    }

    /// The first `n` positions.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, pos: usize) -> bool {
        self.0 >> pos & 1 == 1
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(self, pos: usize) -> Subset {
        Subset(self.0 | 1 << pos)
    }

    pub fn remove(self, pos: usize) -> Subset {
        Subset(self.0 & !(1 << pos))
    }

    /// Positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some((s.wrapping_sub(full)) & full) };
            Some(Subset(s))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.positions().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "#{p}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered list of distinct vertex identifiers.
#[derive(Clone)]
pub struct GroundSet {
    vertices: Arc<[Vertex]>,
    index: Arc<HashMap<Vertex, usize>>,
}

impl GroundSet {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let vertices: Vec<Vertex> = vertices.into_iter().collect();
        if vertices.len() > MAX_GROUND {
            return Err(Error::SizeCap {
                what: "ground set",
                size: vertices.len() as u128,
                cap: MAX_GROUND as u128,
            });
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if index.insert(v, i).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(GroundSet { vertices: vertices.into(), index: Arc::new(index) })
    }

    /// The ground set `{1, …, n}`.
    pub fn range(n: usize) -> Result<Self> {
        Self::new(1..=n as Vertex)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index.contains_key(&v)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn check_cap(&self, cap: usize) -> Result<()> {
        if self.len() > cap {
            return Err(Error::SizeCap { what: "ground set", size: self.len() as u128, cap: cap as u128 });
        }
        Ok(())
    }

    pub fn subset(&self, vertices: &[Vertex]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for &v in vertices {
            let p = self
                .position(v)
                .ok_or_else(|| Error::InvalidSubset(format!("vertex {v} is not in the ground set")))?;
            s = s.insert(p);
        }
        Ok(s)
    }

    pub fn singleton(&self, v: Vertex) -> Result<Subset> {
        self.subset(&[v])
    }

    /// Vertex labels of `s`, sorted ascending.
    pub fn labels(&self, s: Subset) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = s.positions().map(|p| self.vertices[p]).collect();
        out.sort_unstable();
        out
    }

    pub fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::InvalidSubset(format!("{s:?} has positions outside a ground set of size {}", self.len())))
        }
    }

    /// Appends fresh vertices, keeping existing positions stable.
    pub fn extended(&self, extra: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        Self::new(self.vertices.iter().copied().chain(extra))
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.vertices.iter().copied().max()
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vertices, &other.vertices) || self.vertices == other.vertices
    }
}

impl Eq for GroundSet {}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("GroundSet").field(&self.vertices).finish()
    }
}

/// A rational-valued function on the subsets of a ground set, stored sparsely.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFunction {
    ground: GroundSet,
    entries: BTreeMap<Subset, Rational>,
}

impl SetFunction {
    pub fn zero(ground: &GroundSet) -> Self {
        SetFunction { ground: ground.clone(), entries: BTreeMap::new() }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, s: Subset) -> Rational {
        self.entries.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (Subset, &Rational)> {
        self.entries.iter().map(|(s, v)| (*s, v))
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// `self[s] += coeff`, keeping the canonical form.
    pub fn add_at(&mut self, s: Subset, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.entries.entry(s).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.entries.remove(&s);
        }
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, coeff: &Rational, other: &SetFunction) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        if coeff.is_zero() {
            return Ok(());
        }
        for (s, v) in &other.entries {
            self.add_at(*s, &(coeff * v));
        }
        Ok(())
    }

    pub fn scaled(&self, coeff: &Rational) -> SetFunction {
        let mut out = SetFunction::zero(&self.ground);
        if !coeff.is_zero() {
            for (s, v) in &self.entries {
                out.entries.insert(*s, coeff * v);
            }
        }
        out
    }

    pub fn negated(&self) -> SetFunction {
        self.scaled(&-Rational::one())
    }

    /// `Σ self(S)·w(S)` over the support of `self`.
    pub fn pair_with(&self, w: impl Fn(Subset) -> Rational) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, (s, v)| acc + v * w(*s))
    }

    /// Pushforward along a subset map: `1_S ↦ 1_{f(S)}` extended linearly.
    pub fn pushforward(&self, ground: &GroundSet, f: impl Fn(Subset) -> Subset) -> SetFunction {
        let mut out = SetFunction::zero(ground);
        for (s, v) in &self.entries {
            out.add_at(f(*s), v);
        }
        out
    }

    pub fn to_records(&self) -> Vec<SetFunctionRecord> {
        self.entries
            .iter()
            .map(|(s, v)| SetFunctionRecord { subset: self.ground.labels(*s), value: v.to_string() })
            .collect()
    }

    pub fn from_records(ground: &GroundSet, records: &[SetFunctionRecord]) -> Result<Self> {
        let mut out = SetFunction::zero(ground);
        for r in records {
            let s = ground.subset(&r.subset)?;
            out.add_at(s, &parse_rational(&r.value)?);
        }
        Ok(out)
    }

    /// Largest `|S|` over the support, if any.
    pub fn max_support_size(&self) -> Option<usize> {
        self.entries.keys().map(|s| s.len()).max()
    }
}

impl fmt::Debug for SetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (s, v) in &self.entries {
            m.entry(&self.ground.labels(*s), &v.to_string());
        }
        m.finish()
    }
}

/// Serialized form of one set-function entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFunctionRecord {
    pub subset: Vec<Vertex>,
    pub value: String,
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod rational_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `1_S`.
pub fn indicator(ground: &GroundSet, s: &[Vertex]) -> Result<SetFunction> {
    Ok(indicator_mask(ground, ground.subset(s)?))
}

pub fn indicator_mask(ground: &GroundSet, s: Subset) -> SetFunction {
    let mut f = SetFunction::zero(ground);
    f.add_at(s, &Rational::one());
    f
}

/// `t_{A,B} = 1_{A∪B} − 1_A − 1_B + 1_{A∩B}`.
pub fn t_vector(ground: &GroundSet, a: &[Vertex], b: &[Vertex]) -> Result<SetFunction> {
    Ok(t_mask(ground, ground.subset(a)?, ground.subset(b)?))
}

pub fn t_mask(ground: &GroundSet, a: Subset, b: Subset) -> SetFunction {
    let mut f = SetFunction::zero(ground);
    add_t(&mut f, &Rational::one(), a, b);
    f
}

/// `f += coeff · t_{A,B}`.
pub fn add_t(f: &mut SetFunction, coeff: &Rational, a: Subset, b: Subset) {
    let neg = -coeff;
    f.add_at(a.union(b), coeff);
    f.add_at(a, &neg);
    f.add_at(b, &neg);
    f.add_at(a.intersection(b), coeff);
}

/// True iff `t_{A,B}` is the zero function.
pub fn t_is_zero(a: Subset, b: Subset) -> bool {
    a.is_subset_of(b) || b.is_subset_of(a)
}

/// `s_H(A) = −1_A + Σ_{e ⊆ A} 1_e` for edges given as masks.
pub fn s_mask(ground: &GroundSet, edges: &[Subset], a: Subset) -> SetFunction {
    let mut f = SetFunction::zero(ground);
    f.add_at(a, &-Rational::one());
    for &e in edges.iter().filter(|e| e.is_subset_of(a)) {
        f.add_at(e, &Rational::one());
    }
    f
}

/// `h_H(X) = s_H(X) − Σ_{v∈X} (deg_F(v) − 1)·1_{v}`, degrees in the graph spanned on `X`.
/// Every edge must have exactly two vertices.
pub fn h_mask(ground: &GroundSet, edges: &[Subset], x: Subset) -> Result<SetFunction> {
    if let Some(e) = edges.iter().find(|e| e.len() != 2) {
        return Err(Error::Arity(format!(
            "h_H needs a 2-uniform graph, found an edge of size {}",
            e.len()
        )));
    }
    let mut f = s_mask(ground, edges, x);
    for p in x.positions() {
        let deg = edges.iter().filter(|e| e.contains(p) && e.is_subset_of(x)).count() as i64;
        f.add_at(Subset::singleton(p), &int(1 - deg));
    }
    Ok(f)
}

/// Edges of a graph with one end in `A1 ∖ A2` and the other in `A2 ∖ A1`.
pub fn crossing_edges(edges: &[Subset], a1: Subset, a2: Subset) -> Vec<Subset> {
    let (only1, only2) = (a1.difference(a2), a2.difference(a1));
    edges.iter().copied().filter(|e| !e.intersection(only1).is_empty() && !e.intersection(only2).is_empty()).collect()
}

/// `h(A1∪A2) − h(A1) − h(A2) + h(A1∩A2) + t_{A1,A2}`, which equals
/// `Σ (1_{ab} − 1_a − 1_b)` over the crossing edges `ab` and vanishes when
/// there are none.
pub fn h_union_defect(ground: &GroundSet, edges: &[Subset], a1: Subset, a2: Subset) -> Result<SetFunction> {
    let mut f = h_mask(ground, edges, a1.union(a2))?;
    let one = Rational::one();
    f.add_scaled(&-one.clone(), &h_mask(ground, edges, a1)?)?;
    f.add_scaled(&-one.clone(), &h_mask(ground, edges, a2)?)?;
    f.add_scaled(&one, &h_mask(ground, edges, a1.intersection(a2))?)?;
    add_t(&mut f, &one, a1, a2);
    Ok(f)
}

/// `s_H(A)` for a graph or hypergraph `H`; the ground set is `V(H)`.
pub fn s_vector(h: &crate::graph::Hypergraph, a: &[Vertex]) -> Result<SetFunction> {
    let ground = h.ground()?;
    let a = ground.subset(a)?;
    Ok(s_mask(&ground, &h.edge_masks(&ground)?, a))
}

/// `h_H(X)` for a 2-uniform graph `H`; the ground set is `V(H)`.
pub fn h_vector(h: &crate::graph::Hypergraph, x: &[Vertex]) -> Result<SetFunction> {
    let ground = h.ground()?;
    let x = ground.subset(x)?;
    h_mask(&ground, &h.edge_masks(&ground)?, x)
}

/// Exact linear combination `Σ cᵢ·fᵢ`; all operands must share one ground set.
pub fn linear_combine(terms: &[(Rational, &SetFunction)]) -> Result<SetFunction> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::Precondition("linear combination of zero terms has no ground set".into()));
    };
    let mut out = SetFunction::zero(first.ground());
    for (c, f) in terms {
        out.add_scaled(c, f)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Hypergraph;

    fn g(n: usize) -> GroundSet {
        GroundSet::range(n).unwrap()
    }

    fn rec(f: &SetFunction) -> Vec<(Vec<Vertex>, String)> {
        f.to_records().into_iter().map(|r| (r.subset, r.value)).collect()
    }

    fn r(v: &[Vertex], val: &str) -> (Vec<Vertex>, String) {
        (v.to_vec(), val.to_string())
    }

    #[test]
    fn indicator_values() {
        let v = g(2);
        assert_eq!(rec(&indicator(&v, &[]).unwrap()), vec![r(&[], "1")]);
        assert_eq!(rec(&indicator(&v, &[1, 2]).unwrap()), vec![r(&[1, 2], "1")]);
        let s = indicator(&v, &[1]).unwrap();
        let twice = linear_combine(&[(int(1), &s), (int(1), &s)]).unwrap();
        assert_eq!(rec(&twice), vec![r(&[1], "2")]);
        assert!(matches!(indicator(&v, &[3]), Err(Error::InvalidSubset(_))));
    }

    #[test]
    fn t_vector_examples() {
        let v = g(2);
        assert!(t_vector(&v, &[1], &[1, 2]).unwrap().is_zero());
        let t = t_vector(&v, &[1], &[2]).unwrap();
        let mut got = rec(&t);
        got.sort();
        let mut want = vec![r(&[], "1"), r(&[1], "-1"), r(&[1, 2], "1"), r(&[2], "-1")];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn t_vector_zero_iff_comparable() {
        let v = g(5);
        for a in v.full().subsets() {
            for b in v.full().subsets() {
                assert_eq!(t_mask(&v, a, b).is_zero(), t_is_zero(a, b));
                assert_eq!(t_mask(&v, a, b), t_mask(&v, b, a));
            }
        }
    }

    #[test]
    fn s_vector_examples() {
        let edge = Hypergraph::new(vec![1, 2], vec![vec![1, 2]]).unwrap();
        assert!(s_vector(&edge, &[1, 2]).unwrap().is_zero());

        let path = Hypergraph::new(vec![1, 2, 3], vec![vec![1, 2], vec![2, 3]]).unwrap();
        let mut got = rec(&s_vector(&path, &[1, 2, 3]).unwrap());
        got.sort();
        assert_eq!(got, vec![r(&[1, 2], "1"), r(&[1, 2, 3], "-1"), r(&[2, 3], "1")]);

        let tri = Hypergraph::new(vec![1, 2, 3], vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(rec(&s_vector(&tri, &[1, 2]).unwrap()), vec![r(&[1, 2], "-1")]);
    }

    #[test]
    fn h_vector_examples() {
        let edge = Hypergraph::new(vec![1, 2], vec![vec![1, 2]]).unwrap();
        assert!(h_vector(&edge, &[1, 2]).unwrap().is_zero());

        let path = Hypergraph::new(vec![1, 2, 3], vec![vec![1, 2], vec![2, 3]]).unwrap();
        let mut got = rec(&h_vector(&path, &[1, 2, 3]).unwrap());
        got.sort();
        // Endpoints have degree 1, so only the middle vertex gets a correction.
        let mut want = vec![r(&[1, 2, 3], "-1"), r(&[1, 2], "1"), r(&[2, 3], "1"), r(&[2], "-1")];
        want.sort();
        assert_eq!(got, want);
        let minus_h = h_vector(&path, &[1, 2, 3]).unwrap().negated();
        assert_eq!(minus_h, t_vector(&minus_h.ground().clone(), &[1, 2], &[2, 3]).unwrap());

        let tri = Hypergraph::new(vec![1, 2, 3], vec![vec![1, 2, 3]]).unwrap();
        assert!(matches!(h_vector(&tri, &[1, 2, 3]), Err(Error::Arity(_))));
    }

    #[test]
    fn h_union_identity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut exact = 0;
        for _ in 0..1000 {
            let n = rng.gen_range(2..=8);
            let ground = GroundSet::range(n).unwrap();
            let edges: Vec<Subset> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| Subset::singleton(i).insert(j)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let full = ground.full().0;
            let (a1, a2) = (Subset(rng.gen::<u64>() & full), Subset(rng.gen::<u64>() & full));
            let defect = h_union_defect(&ground, &edges, a1, a2).unwrap();
            let mut expected = SetFunction::zero(&ground);
            let crossing = crossing_edges(&edges, a1, a2);
            for &e in &crossing {
                expected.add_at(e, &int(1));
                for p in e.positions() {
                    expected.add_at(Subset::singleton(p), &int(-1));
                }
            }
            assert_eq!(defect, expected);
            if crossing.is_empty() {
                assert!(defect.is_zero());
                exact += 1;
            }
        }
        assert!(exact > 100);
    }

    #[test]
    fn s_minus_h_is_degree_excess() {
        let path = Hypergraph::new(vec![1, 2, 3, 4], vec![vec![1, 2], vec![2, 3], vec![2, 4]]).unwrap();
        let all = [1, 2, 3, 4];
        let s = s_vector(&path, &all).unwrap();
        let h = h_vector(&path, &all).unwrap();
        let diff = linear_combine(&[(int(1), &s), (int(-1), &h)]).unwrap();
        assert_eq!(rec(&diff), vec![r(&[2], "2")]);
    }

    #[test]
    fn linear_combine_examples() {
        let v = g(2);
        let f = t_vector(&v, &[1], &[2]).unwrap();
        assert!(linear_combine(&[(int(1), &f), (int(-1), &f)]).unwrap().is_zero());
        assert!(linear_combine(&[(int(0), &f)]).unwrap().is_zero());
        let one = indicator(&v, &[1]).unwrap();
        assert_eq!(rec(&linear_combine(&[(int(2), &one), (int(3), &one)]).unwrap()), vec![r(&[1], "5")]);
        let other = indicator(&g(3), &[1]).unwrap();
        assert_eq!(linear_combine(&[(int(1), &one), (int(1), &other)]), Err(Error::GroundMismatch));
    }

    #[test]
    fn subset_enumeration() {
        let s = Subset(0b1011);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset_of(s)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn records_round_trip() {
        let v = GroundSet::new([5, 3, 9]).unwrap();
        let f = t_vector(&v, &[5], &[3, 9]).unwrap();
        let back = SetFunction::from_records(&v, &f.to_records()).unwrap();
        assert_eq!(back, f);
        assert!(GroundSet::new([1, 1]).is_err());
    }
}
