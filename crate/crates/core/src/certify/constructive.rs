//! Certificates built by replaying a trace instead of solving an LP.
//!
//! Every edge `K` of a complex carries a recipe: it is the starting edge, a
//! copy of an older edge, or `K1 ∪ K2` glued along some `X` with `(K1, K2)` in
//! the relation. For a glued edge
//!
//! `h(K) = h(K1) + h(K2) + (−h(X)) − t_{K1,K2}`
//!
//! (the same with `s` in place of `h` for the hypergraph variant), so a
//! certificate for the full vertex set unrolls into certificates for smaller
//! edges plus a decomposition of `−h(X)` (or `−s(X)`) inside `Q_V`. Positions
//! of existing vertices never move while a complex grows, so certificates of
//! older edges stay valid verbatim.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{Claim, Generator, MembershipCertificate};
use crate::complex::ReflectionComplex;
use crate::error::{Error, Result};
use crate::setfun::{t_is_zero, Rational, Subset};

/// Sparse linear combination of named generators, accumulated in maps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Combination {
    pub subspace: BTreeMap<Generator, Rational>,
    pub line: Rational,
    pub cone: BTreeMap<Generator, Rational>,
}

fn bump(map: &mut BTreeMap<Generator, Rational>, g: Generator, c: &Rational) {
    if g.is_zero() || c.is_zero() {
        return;
    }
    match map.entry(g) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Combination {
    pub fn sub(&mut self, g: Generator, c: &Rational) {
        bump(&mut self.subspace, g, c);
    }

    pub fn cone(&mut self, g: Generator, c: &Rational) {
        bump(&mut self.cone, g, c);
    }

    pub fn line(&mut self, c: &Rational) {
        self.line += c;
    }

    pub fn add(&mut self, other: &Combination, coeff: &Rational) {
        for (g, c) in &other.subspace {
            self.sub(g.clone(), &(c * coeff));
        }
        for (g, c) in &other.cone {
            self.cone(g.clone(), &(c * coeff));
        }
        self.line += &other.line * coeff;
    }

    pub fn mapped(&self, f: &impl Fn(Subset) -> Subset) -> Combination {
        let mut out = Combination { line: self.line.clone(), ..Default::default() };
        for (g, c) in &self.subspace {
            out.sub(g.map(f), c);
        }
        for (g, c) in &self.cone {
            out.cone(g.map(f), c);
        }
        out
    }

    pub fn from_certificate(c: &MembershipCertificate) -> Combination {
        let mut out = Combination { line: c.line.clone(), ..Default::default() };
        for (g, v) in &c.subspace {
            out.sub(g.clone(), v);
        }
        for (g, v) in &c.cone {
            out.cone(g.clone(), v);
        }
        out
    }

    pub fn into_certificate(self) -> MembershipCertificate {
        MembershipCertificate {
            subspace: self.subspace.into_iter().collect(),
            line: self.line,
            cone: self.cone.into_iter().collect(),
        }
    }
}

fn edges_within(edges: &[Subset], x: Subset) -> Vec<Subset> {
    edges.iter().copied().filter(|e| e.is_subset_of(x)).collect()
}

/// Whether the 2-edges inside `x` form a forest.
fn spans_forest(edges: &[Subset], x: Subset) -> bool {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    fn find(parent: &mut HashMap<usize, usize>, v: usize) -> usize {
        let p = *parent.get(&v).unwrap_or(&v);
        if p == v {
            return v;
        }
        let r = find(parent, p);
        parent.insert(v, r);
        r
    }
    for e in edges_within(edges, x) {
        let mut it = e.positions();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return false;
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent.insert(ra, rb);
    }
    true
}

/// Whether the k-edges inside `x` are pairwise disjoint.
fn spans_matching(edges: &[Subset], x: Subset) -> bool {
    let mut used = Subset::EMPTY;
    for e in edges_within(edges, x) {
        if !used.intersection(e).is_empty() {
            return false;
        }
        used = used.union(e);
    }
    true
}

/// Decomposition of `−h(X)` when the 2-edges in `X` form a forest: peel
/// isolated vertices and leaves one at a time.
fn forest_combination(edges: &[Subset], x: Subset) -> Result<Combination> {
    if !spans_forest(edges, x) {
        return Err(Error::Precondition(format!("{x:?} does not span a forest")));
    }
    let one = Rational::one();
    let mut out = Combination::default();
    let mut x = x;
    loop {
        let inner = edges_within(edges, x);
        if x.is_empty() {
            out.line(&one);
            return Ok(out);
        }
        if x.len() == 1 || (x.len() == 2 && inner.len() == 1) {
            return Ok(out);
        }
        let deg = |v: usize| inner.iter().filter(|e| e.contains(v)).count();
        if let Some(v) = x.positions().find(|&v| deg(v) == 0) {
            let rest = x.remove(v);
            out.line(&-one.clone());
            out.cone(Generator::t(Subset::singleton(v), rest), &one);
            x = rest;
            continue;
        }
        let v = x.positions().find(|&v| deg(v) == 1).expect("a nonempty forest has a leaf");
        let e = *inner.iter().find(|e| e.contains(v)).expect("leaf has an edge");
        let rest = x.remove(v);
        out.cone(Generator::t(e, rest), &one);
        x = rest;
    }
}

/// Decomposition of `−s(X)` when the k-edges in `X` are pairwise disjoint:
/// split off one edge or one point at a time.
fn matching_combination(edges: &[Subset], x: Subset) -> Result<Combination> {
    if !spans_matching(edges, x) {
        return Err(Error::Precondition(format!("{x:?} spans intersecting edges")));
    }
    let one = Rational::one();
    let mut out = Combination::default();
    let mut x = x;
    loop {
        if x.is_empty() {
            out.line(&one);
            return Ok(out);
        }
        let part = match edges_within(edges, x).first() {
            Some(&e) => e,
            None => {
                let v = x.positions().next().expect("nonempty");
                let p = Subset::singleton(v);
                out.cone(Generator::Indicator(p), &one);
                p
            }
        };
        let rest = x.difference(part);
        if rest.is_empty() {
            return Ok(out);
        }
        out.line(&-one.clone());
        out.cone(Generator::t(part, rest), &one);
        x = rest;
    }
}

/// Certificate that `−h(X) ∈ Q_V` for a forest spanned on `x`; `edges` are the
/// 2-edges of the ambient graph.
pub fn forest_certificate(edges: &[Subset], x: Subset) -> Result<MembershipCertificate> {
    Ok(forest_combination(edges, x)?.into_certificate())
}

pub(crate) fn forest_certificate_combination(edges: &[Subset], x: Subset) -> Result<Combination> {
    forest_combination(edges, x)
}

/// Per-step membership report for the classes built from forests or matchings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub member: bool,
    /// One flag per trace step.
    pub steps: Vec<bool>,
}

fn class_report(m: &ReflectionComplex, ok: impl Fn(&[Subset], Subset) -> bool) -> ClassReport {
    // Frame edges inside an old vertex set never change later, so the final
    // frame answers every step.
    let frame = m.frame_masks();
    let steps: Vec<bool> = m
        .trace()
        .iter()
        .map(|s| m.ground().subset(&s.x).is_ok_and(|x| ok(&frame, x)))
        .collect();
    ClassReport { member: steps.iter().all(|&b| b), steps }
}

/// Every gluing set spans a forest in the frame at that step.
pub fn in_class_c(m: &ReflectionComplex) -> Result<ClassReport> {
    if m.arity() != 2 {
        return Err(Error::Arity(format!("forest class is defined for graphs, got arity {}", m.arity())));
    }
    Ok(class_report(m, spans_forest))
}

/// Every gluing set spans pairwise disjoint k-edges (plus isolated points).
pub fn in_class_ck(m: &ReflectionComplex) -> ClassReport {
    class_report(m, spans_matching)
}

enum Recipe {
    Origin,
    Copy { src: Subset, step: usize },
    Glue { k1: Subset, k2: Subset, x: Subset },
}

/// Builds the certificate for `h_H(V)` (arity 2) or `s_H(V)` (arity k ≥ 3)
/// by replaying the trace.
pub fn certificate_from_trace(m: &ReflectionComplex) -> Result<MembershipCertificate> {
    let claim = if m.arity() == 2 { Claim::Thick } else { Claim::WeaklyThick };
    constructive_certificate(m, claim)
}

pub(crate) fn constructive_certificate(m: &ReflectionComplex, claim: Claim) -> Result<MembershipCertificate> {
    let report = match claim {
        Claim::Thick => in_class_c(m)?,
        Claim::WeaklyThick => in_class_ck(m),
    };
    if let Some(i) = report.steps.iter().position(|b| !b) {
        let s = &m.trace()[i];
        return Err(Error::NotInClass(format!("step {} glues along {:?}, which is not allowed", i + 1, s.x)));
    }

    let mut cur = ReflectionComplex::trivial(m.arity())?;
    let mut recipes: HashMap<Subset, Recipe> = HashMap::new();
    recipes.insert(cur.ground().full(), Recipe::Origin);
    let mut pos_maps: Vec<Vec<usize>> = Vec::new();
    for step in m.trace() {
        let r = cur.reflect_traced(&step.l, &step.x)?;
        let old = cur.ground();
        let new = r.complex.ground();
        let pos: Vec<usize> = old
            .vertices()
            .iter()
            .map(|v| new.position(*r.copy.get(v).unwrap_or(v)).expect("copy lands in the new ground set"))
            .collect();
        let map = |s: Subset| Subset(s.positions().fold(0, |acc, p| acc | (1 << pos[p])));
        let l = old.subset(&step.l)?;
        let x = old.subset(&step.x)?;
        let inside: Vec<Subset> = cur.base().edges().filter(|e| e.is_subset_of(l)).collect();
        for &k2 in &inside {
            recipes.entry(map(k2)).or_insert(Recipe::Copy { src: k2, step: pos_maps.len() });
        }
        for k1 in cur.base().edges().filter(|e| x.is_subset_of(*e)) {
            for &k2 in inside.iter().filter(|e| x.is_subset_of(**e)) {
                let k2 = map(k2);
                recipes.entry(k1.union(k2)).or_insert(Recipe::Glue { k1, k2, x });
            }
        }
        pos_maps.push(pos);
        cur = r.complex;
    }
    debug_assert!(cur == *m);

    let frame = m.frame_masks();
    let mut memo: HashMap<Subset, Combination> = HashMap::new();
    let root = m.ground().full();
    // Post-order over the recipe graph without recursion.
    let mut stack = vec![(root, false)];
    while let Some((k, expanded)) = stack.pop() {
        if memo.contains_key(&k) {
            continue;
        }
        let recipe = recipes.get(&k).ok_or_else(|| Error::MalformedCertificate(format!("edge {k:?} has no recipe")))?;
        let deps: Vec<Subset> = match recipe {
            Recipe::Origin => vec![],
            Recipe::Copy { src, .. } => vec![*src],
            Recipe::Glue { k1, k2, .. } => vec![*k1, *k2],
        };
        if !expanded {
            stack.push((k, true));
            stack.extend(deps.into_iter().filter(|d| !memo.contains_key(d)).map(|d| (d, false)));
            continue;
        }
        let comb = match recipe {
            Recipe::Origin => Combination::default(),
            Recipe::Copy { src, step } => {
                let pos = &pos_maps[*step];
                memo[src].mapped(&|s: Subset| Subset(s.positions().fold(0, |acc, p| acc | (1 << pos[p]))))
            }
            Recipe::Glue { k1, k2, x } => {
                let mut c = memo[k1].clone();
                c.add(&memo[k2], &Rational::one());
                let local = match claim {
                    Claim::Thick => forest_combination(&frame, *x)?,
                    Claim::WeaklyThick => matching_combination(&frame, *x)?,
                };
                c.add(&local, &Rational::one());
                if !t_is_zero(*k1, *k2) {
                    c.sub(Generator::t(*k1, *k2), &-Rational::one());
                }
                c
            }
        };
        memo.insert(k, comb);
    }
    Ok(memo.remove(&root).expect("root computed").into_certificate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{thickness_problem, verify_certificate};
    use crate::complex::Step;
    use crate::setfun::{h_mask, s_mask, GroundSet, SetFunction};

    fn check(m: &ReflectionComplex, claim: Claim) {
        let p = thickness_problem(m.base(), m.arity(), claim).unwrap();
        let c = constructive_certificate(m, claim).unwrap();
        assert!(verify_certificate(&p, &c).unwrap(), "{:?}", m.trace());
    }

    #[test]
    fn forest_decomposition_matches_minus_h() {
        let g = GroundSet::range(5).unwrap();
        let e = |a: usize, b: usize| Subset::singleton(a).insert(b);
        let edges = vec![e(0, 1), e(1, 2), e(1, 3)];
        for x in g.full().subsets() {
            let c = forest_certificate(&edges, x).unwrap();
            assert!(c.cone.iter().all(|(_, v)| v > &Rational::zero()));
            let target = h_mask(&g, &edges, x).unwrap().negated();
            assert_eq!(c.combination(&g), target, "{x:?}");
        }
        let cycle = vec![e(0, 1), e(1, 2), e(0, 2)];
        assert!(forest_certificate(&cycle, g.full()).is_err());
    }

    #[test]
    fn matching_decomposition_matches_minus_s() {
        let g = GroundSet::range(7).unwrap();
        let edges = vec![Subset(0b111), Subset(0b111000)];
        for x in g.full().subsets() {
            let c = matching_combination(&edges, x).unwrap().into_certificate();
            let mut target = SetFunction::zero(&g);
            target.add_scaled(&-Rational::one(), &s_mask(&g, &edges, x)).unwrap();
            assert_eq!(c.combination(&g), target, "{x:?}");
        }
    }

    #[test]
    fn trivial_certificates_are_empty() {
        for k in 2..5 {
            let t = ReflectionComplex::trivial(k).unwrap();
            assert!(certificate_from_trace(&t).unwrap().is_empty());
        }
    }

    #[test]
    fn traces_in_class_verify() {
        let c4 = ReflectionComplex::from_trace(2, &[Step::new(&[1, 2], &[1]), Step::new(&[1, 2, 3], &[2, 3])]).unwrap();
        assert!(in_class_c(&c4).unwrap().member);
        check(&c4, Claim::Thick);
        check(&c4, Claim::WeaklyThick);

        let path = ReflectionComplex::from_trace(2, &[Step::new(&[1, 2], &[2])]).unwrap();
        check(&path, Claim::Thick);

        let tight = ReflectionComplex::from_trace(3, &[Step::new(&[1, 2, 3], &[2, 3])]).unwrap();
        assert!(in_class_ck(&tight).member);
        check(&tight, Claim::WeaklyThick);

        let gap = ReflectionComplex::from_trace(2, &[Step::new(&[1, 2], &[])]).unwrap();
        check(&gap, Claim::Thick);
    }

    #[test]
    fn cycle_gluing_set_is_rejected() {
        // Build C4, then reflect across all of it.
        let c4 = ReflectionComplex::from_trace(2, &[Step::new(&[1, 2], &[1]), Step::new(&[1, 2, 3], &[2, 3])]).unwrap();
        let all: Vec<u32> = c4.vertices().to_vec();
        let m = c4.reflect(&all, &all).unwrap();
        let r = in_class_c(&m).unwrap();
        assert_eq!(r.steps, vec![true, true, false]);
        assert!(matches!(certificate_from_trace(&m), Err(Error::NotInClass(_))));
    }

    #[test]
    fn class_ck_rejects_intersecting_edges() {
        let m = ReflectionComplex::from_trace(3, &[Step::new(&[1, 2, 3], &[2, 3])]).unwrap();
        let all: Vec<u32> = m.vertices().to_vec();
        let m2 = m.reflect(&all, &all).unwrap();
        assert_eq!(in_class_ck(&m2).steps, vec![true, false]);
    }
}
