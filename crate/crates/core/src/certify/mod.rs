//! Cone-membership certification: deciding whether a set function lies in
//! `W + Q_V`, where `W` is spanned by explicitly listed generators and `Q_V`
//! is the cone of all `t_{A,B}` and `1_A` plus the line through `1_∅`.
//!
//! Answers are exact: a [`MembershipCertificate`] names every generator it
//! uses, and a [`FarkasRefutation`] is a functional that is nonnegative on
//! `Q_V`, vanishes on `W`, and is negative on the target. Both can be checked
//! without trusting the solver.

mod constructive;
pub mod lp;
mod transport;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{BHypergraph, ReflectionComplex};
use crate::error::{Error, Result};
use crate::graph::Hypergraph;
use crate::setfun::{
    add_t, h_mask, parse_rational, s_mask, t_is_zero, GroundSet, Rational, SetFunction, SetFunctionRecord, Subset,
    Vertex, DEFAULT_GROUND_CAP,
};

pub use constructive::{certificate_from_trace, forest_certificate, in_class_c, in_class_ck, ClassReport};
pub use lp::PivotRule;
pub use transport::certificate_transport_subdivision;

/// Default ground-set cap for full-mode LPs.
pub const DEFAULT_FULL_CAP: usize = 10;

/// A named generator vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `t_{A,B}`; stored with the smaller mask first.
    T(Subset, Subset),
    /// `1_A`.
    Indicator(Subset),
    /// `1_A − 1_B`.
    Iso(Subset, Subset),
}

impl Generator {
    pub fn t(a: Subset, b: Subset) -> Self {
        if a <= b {
            Generator::T(a, b)
        } else {
            Generator::T(b, a)
        }
    }

    pub fn is_zero(&self) -> bool {
        match *self {
            Generator::T(a, b) => t_is_zero(a, b),
            Generator::Indicator(_) => false,
            Generator::Iso(a, b) => a == b,
        }
    }

    /// `f += coeff · self`.
    pub fn add_to(&self, f: &mut SetFunction, coeff: &Rational) {
        match *self {
            Generator::T(a, b) => add_t(f, coeff, a, b),
            Generator::Indicator(a) => f.add_at(a, coeff),
            Generator::Iso(a, b) => {
                f.add_at(a, coeff);
                f.add_at(b, &-coeff);
            }
        }
    }

    pub fn vector(&self, ground: &GroundSet) -> SetFunction {
        let mut f = SetFunction::zero(ground);
        self.add_to(&mut f, &Rational::one());
        f
    }

    /// Sparse entries `(subset, coefficient)`, merged.
    pub fn entries(&self) -> Vec<(Subset, i64)> {
        let mut m: BTreeMap<Subset, i64> = BTreeMap::new();
        let raw: Vec<(Subset, i64)> = match *self {
            Generator::T(a, b) => vec![(a.union(b), 1), (a, -1), (b, -1), (a.intersection(b), 1)],
            Generator::Indicator(a) => vec![(a, 1)],
            Generator::Iso(a, b) => vec![(a, 1), (b, -1)],
        };
        for (s, c) in raw {
            *m.entry(s).or_default() += c;
        }
        m.into_iter().filter(|e| e.1 != 0).collect()
    }

    fn subsets(&self) -> Vec<Subset> {
        match *self {
            Generator::T(a, b) | Generator::Iso(a, b) => vec![a, b],
            Generator::Indicator(a) => vec![a],
        }
    }

    /// Same generator on another ground set via a subset map.
    pub fn map(&self, f: &impl Fn(Subset) -> Subset) -> Generator {
        match *self {
            Generator::T(a, b) => Generator::t(f(a), f(b)),
            Generator::Indicator(a) => Generator::Indicator(f(a)),
            Generator::Iso(a, b) => Generator::Iso(f(a), f(b)),
        }
    }

    pub fn to_record(&self, ground: &GroundSet) -> GeneratorRecord {
        match *self {
            Generator::T(a, b) => GeneratorRecord::T { a: ground.labels(a), b: ground.labels(b) },
            Generator::Indicator(a) => GeneratorRecord::Indicator { a: ground.labels(a) },
            Generator::Iso(a, b) => GeneratorRecord::Iso { a: ground.labels(a), b: ground.labels(b) },
        }
    }

    pub fn from_record(ground: &GroundSet, r: &GeneratorRecord) -> Result<Generator> {
        let sub = |v: &[Vertex]| ground.subset(v).map_err(|e| Error::MalformedCertificate(e.to_string()));
        Ok(match r {
            GeneratorRecord::T { a, b } => Generator::t(sub(a)?, sub(b)?),
            GeneratorRecord::Indicator { a } => Generator::Indicator(sub(a)?),
            GeneratorRecord::Iso { a, b } => Generator::Iso(sub(a)?, sub(b)?),
        })
    }
}

/// Serialized generator: `{kind: "t"|"indicator"|"iso", A: […], B: […]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratorRecord {
    T {
        #[serde(rename = "A")]
        a: Vec<Vertex>,
        #[serde(rename = "B")]
        b: Vec<Vertex>,
    },
    Indicator {
        #[serde(rename = "A")]
        a: Vec<Vertex>,
    },
    Iso {
        #[serde(rename = "A")]
        a: Vec<Vertex>,
        #[serde(rename = "B")]
        b: Vec<Vertex>,
    },
}

/// Target plus the generators spanning `W`. `Q_V` is implicit; `hint` lists
/// subsets whose pairs make up the pruned cone used in restricted mode.
#[derive(Clone, Debug)]
pub struct MembershipProblem {
    pub ground: GroundSet,
    pub target: SetFunction,
    pub subspace: Vec<Generator>,
    pub hint: Vec<Subset>,
}

impl MembershipProblem {
    pub fn new(target: SetFunction, subspace: Vec<Generator>) -> Self {
        MembershipProblem { ground: target.ground().clone(), target, subspace, hint: Vec::new() }
    }

    pub fn with_hint(mut self, hint: Vec<Subset>) -> Self {
        self.hint = hint;
        self
    }

}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    /// Coefficients of subspace generators; sign-free. Unlisted generators have coefficient 0.
    pub subspace: Vec<(Generator, Rational)>,
    /// Coefficient of `1_∅`; sign-free.
    pub line: Rational,
    /// Nonnegative coefficients of cone generators.
    pub cone: Vec<(Generator, Rational)>,
}

impl MembershipCertificate {
    pub fn empty() -> Self {
        MembershipCertificate { subspace: Vec::new(), line: Rational::zero(), cone: Vec::new() }
    }

    /// The set function this certificate adds up to.
    pub fn combination(&self, ground: &GroundSet) -> SetFunction {
        let mut f = SetFunction::zero(ground);
        for (g, c) in self.subspace.iter().chain(&self.cone) {
            g.add_to(&mut f, c);
        }
        f.add_at(Subset::EMPTY, &self.line);
        f
    }

    pub fn is_empty(&self) -> bool {
        self.subspace.is_empty() && self.cone.is_empty() && self.line.is_zero()
    }
}

/// A functional `y` separating the target from `W + Q_V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasRefutation {
    pub functional: SetFunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Member(MembershipCertificate),
    NotMember(FarkasRefutation),
    Inconclusive,
}

impl Decision {
    pub fn certificate(&self) -> Option<&MembershipCertificate> {
        match self {
            Decision::Member(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Decision::Member(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Pruned cone; certificates are conclusive, failures are inconclusive.
    Restricted,
    /// All of `Q_V`; always conclusive.
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub full_cap: usize,
    pub restricted_cap: usize,
    pub pivot_rule: PivotRule,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { full_cap: DEFAULT_FULL_CAP, restricted_cap: DEFAULT_GROUND_CAP, pivot_rule: PivotRule::default() }
    }
}

impl Limits {
    /// Raises both caps to at least `n` vertices.
    pub fn with_max_ground(mut self, n: usize) -> Self {
        self.full_cap = n;
        self.restricted_cap = self.restricted_cap.max(n);
        self
    }
}

fn cone_generators(p: &MembershipProblem, mode: Mode) -> Vec<Generator> {
    let n = p.ground.len();
    let family: Vec<Subset> = match mode {
        Mode::Full => p.ground.full().subsets().collect(),
        Mode::Restricted => {
            let mut fam: BTreeSet<Subset> = p.hint.iter().copied().collect();
            fam.extend(p.target.entries().map(|(s, _)| s));
            for g in &p.subspace {
                fam.extend(g.subsets());
            }
            fam.extend((0..n).map(Subset::singleton));
            fam.into_iter().collect()
        }
    };
    let mut gens: Vec<Generator> = family.iter().filter(|s| !s.is_empty()).map(|&s| Generator::Indicator(s)).collect();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !t_is_zero(a, b) {
                gens.push(Generator::t(a, b));
            }
        }
    }
    gens
}

/// Decides `target ∈ W + Q_V` by exact linear programming.
pub fn decide_membership(p: &MembershipProblem, mode: Mode, limits: &Limits) -> Result<Decision> {
    let cap = match mode {
        Mode::Full => limits.full_cap,
        Mode::Restricted => limits.restricted_cap,
    };
    p.ground.check_cap(cap)?;
    if p.target.ground() != &p.ground {
        return Err(Error::GroundMismatch);
    }

    enum Var {
        Sub(usize, i64),
        Line(i64),
        Cone(Generator),
    }
    let mut vars: Vec<Var> = Vec::new();
    let mut cols: Vec<Vec<(Subset, i64)>> = Vec::new();
    for (i, g) in p.subspace.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let e = g.entries();
        for s in [1, -1] {
            vars.push(Var::Sub(i, s));
            cols.push(e.iter().map(|&(x, c)| (x, c * s)).collect());
        }
    }
    for s in [1, -1] {
        vars.push(Var::Line(s));
        cols.push(vec![(Subset::EMPTY, s)]);
    }
    for g in cone_generators(p, mode) {
        cols.push(g.entries());
        vars.push(Var::Cone(g));
    }

    let mut row_of: BTreeMap<Subset, usize> = BTreeMap::new();
    if mode == Mode::Full {
        for s in p.ground.full().subsets() {
            let next = row_of.len();
            row_of.insert(s, next);
        }
    }
    for (s, _) in p.target.entries() {
        let next = row_of.len();
        row_of.entry(s).or_insert(next);
    }
    for c in &cols {
        for (s, _) in c {
            let next = row_of.len();
            row_of.entry(*s).or_insert(next);
        }
    }
    let rows: Vec<Subset> = {
        let mut r = vec![Subset::EMPTY; row_of.len()];
        for (s, i) in &row_of {
            r[*i] = *s;
        }
        r
    };
    let columns: Vec<lp::Column> =
        cols.iter().map(|c| lp::Column { entries: c.iter().map(|(s, v)| (row_of[s], *v)).collect() }).collect();
    let rhs: Vec<Rational> = rows.iter().map(|s| p.target.get(*s)).collect();

    match lp::solve(rows.len(), &columns, &rhs, limits.pivot_rule) {
        lp::Outcome::Feasible(x) => {
            let mut sub = vec![Rational::zero(); p.subspace.len()];
            let mut line = Rational::zero();
            let mut cone = Vec::new();
            for (v, xv) in vars.into_iter().zip(x) {
                if xv.is_zero() {
                    continue;
                }
                match v {
                    Var::Sub(i, s) => sub[i] += xv * Rational::from_integer(s.into()),
                    Var::Line(s) => line += xv * Rational::from_integer(s.into()),
                    Var::Cone(g) => cone.push((g, xv)),
                }
            }
            let subspace = p
                .subspace
                .iter()
                .cloned()
                .zip(sub)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let cert = MembershipCertificate { subspace, line, cone };
            debug_assert!(verify_certificate(p, &cert).unwrap_or(false));
            Ok(Decision::Member(cert))
        }
        lp::Outcome::Infeasible(z) => {
            if mode == Mode::Restricted {
                return Ok(Decision::Inconclusive);
            }
            let mut y = SetFunction::zero(&p.ground);
            for (s, v) in rows.iter().zip(&z) {
                y.add_at(*s, v);
            }
            let r = FarkasRefutation { functional: y };
            debug_assert!(verify_refutation(p, &r).unwrap_or(false));
            Ok(Decision::NotMember(r))
        }
    }
}

/// Re-checks a certificate by exact recombination. Independent of the solver.
pub fn verify_certificate(p: &MembershipProblem, c: &MembershipCertificate) -> Result<bool> {
    for (g, _) in &c.cone {
        if matches!(g, Generator::Iso(..)) {
            return Err(Error::MalformedCertificate("iso generators are not cone generators".into()));
        }
    }
    for (g, _) in c.subspace.iter().chain(&c.cone) {
        for s in g.subsets() {
            p.ground.check_subset(s).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
        }
    }
    let known: HashSet<&Generator> = p.subspace.iter().collect();
    for (g, _) in &c.subspace {
        let flipped = match *g {
            Generator::Iso(a, b) => Some(Generator::Iso(b, a)),
            _ => None,
        };
        if !known.contains(g) && !flipped.is_some_and(|f| known.contains(&f)) {
            return Err(Error::MalformedCertificate(format!("{g:?} is not one of the subspace generators")));
        }
    }
    if c.cone.iter().any(|(_, v)| v.is_negative()) {
        return Ok(false);
    }
    Ok(c.combination(&p.ground) == p.target)
}

/// Checks `y(∅) = 0`, `y ≥ 0` on every `1_A`, `⟨y, t_{A,B}⟩ ≥ 0` for all pairs,
/// `⟨y, w⟩ = 0` on the subspace, and `⟨y, target⟩ < 0`.
pub fn verify_refutation(p: &MembershipProblem, r: &FarkasRefutation) -> Result<bool> {
    let y = &r.functional;
    if y.ground() != &p.ground {
        return Err(Error::GroundMismatch);
    }
    let n = p.ground.len();
    let dense: Vec<Rational> = (0..1u64 << n).map(|s| y.get(Subset(s))).collect();
    let at = |s: Subset| dense[s.0 as usize].clone();
    if !dense[0].is_zero() || dense.iter().any(|v| v.is_negative()) {
        return Ok(false);
    }
    let full = p.ground.full().0;
    for a in 0..=full {
        for b in a + 1..=full {
            let (sa, sb) = (Subset(a), Subset(b));
            if t_is_zero(sa, sb) {
                continue;
            }
            let v = &dense[(a | b) as usize] + &dense[(a & b) as usize] - &dense[a as usize] - &dense[b as usize];
            if v.is_negative() {
                return Ok(false);
            }
        }
    }
    for g in &p.subspace {
        if !g.vector(&p.ground).pair_with(at).is_zero() {
            return Ok(false);
        }
    }
    Ok(p.target.pair_with(at).is_negative())
}

/// Which set function a thickness question is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `h_H(V) ∈ W_B + Q_V` (graphs only).
    Thick,
    /// `s_H(V) ∈ W_B + Q_V`.
    WeaklyThick,
}

/// `W_B` generators: the nonzero `t_{A,B}` over relation pairs.
pub fn relation_generators(m: &BHypergraph) -> Vec<Generator> {
    let mut out: Vec<Generator> =
        m.relation().filter(|&(a, b)| !t_is_zero(a, b)).map(|(a, b)| Generator::t(a, b)).collect();
    out.dedup();
    out
}

/// Builds the membership problem for a thickness claim about `m` with frame arity `k`.
pub fn thickness_problem(m: &BHypergraph, k: usize, claim: Claim) -> Result<MembershipProblem> {
    let ground = m.ground().clone();
    let frame = m.frame_masks(k);
    let target = match claim {
        Claim::Thick => {
            if k != 2 {
                return Err(Error::Arity("thickness is defined for graphs; use weak thickness for hypergraphs".into()));
            }
            h_mask(&ground, &frame, ground.full())?
        }
        Claim::WeaklyThick => s_mask(&ground, &frame, ground.full()),
    };
    let mut hint: BTreeSet<Subset> = m.edges().collect();
    for e in &frame {
        hint.extend(e.subsets());
    }
    Ok(MembershipProblem::new(target, relation_generators(m)).with_hint(hint.into_iter().collect()))
}

fn restricted_hint(m: &ReflectionComplex, base: Vec<Subset>) -> Vec<Subset> {
    let mut hint: BTreeSet<Subset> = base.into_iter().collect();
    for step in m.trace() {
        if let Ok(x) = m.ground().subset(&step.x) {
            if x.len() <= 8 {
                hint.extend(x.subsets());
            }
        }
    }
    hint.into_iter().collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// `None` tries the constructive route, then restricted, then full LP.
    pub mode: Option<Mode>,
    pub limits: Limits,
}

/// Decides by LP under `opts`: the given mode, or restricted then full when
/// no mode is set.
pub fn decide_with_options(p: &MembershipProblem, opts: &Options) -> Result<Decision> {
    match opts.mode {
        Some(mode) => decide_membership(p, mode, &opts.limits),
        None => {
            if p.ground.len() <= opts.limits.restricted_cap {
                if let d @ Decision::Member(_) = decide_membership(p, Mode::Restricted, &opts.limits)? {
                    return Ok(d);
                }
            }
            if p.ground.len() <= opts.limits.full_cap {
                decide_membership(p, Mode::Full, &opts.limits)
            } else if p.ground.len() > opts.limits.restricted_cap {
                Err(Error::SizeCap {
                    what: "ground set",
                    size: p.ground.len() as u128,
                    cap: opts.limits.restricted_cap as u128,
                })
            } else {
                Ok(Decision::Inconclusive)
            }
        }
    }
}

/// Decides `h_H(V) ∈ W_B + Q_V` for the frame `H` of a 2-complex.
pub fn is_thick(m: &ReflectionComplex, opts: &Options) -> Result<Decision> {
    if m.arity() != 2 {
        return Err(Error::Arity("thickness is defined for graphs; use is_weakly_thick for hypergraphs".into()));
    }
    let p = thickness_problem(m.base(), 2, Claim::Thick)?;
    if opts.mode != Some(Mode::Full) && in_class_c(m)?.member {
        let cert = certificate_from_trace(m)?;
        return Ok(Decision::Member(cert));
    }
    let p = p.clone().with_hint(restricted_hint(m, p.hint));
    decide_with_options(&p, opts)
}

/// Decides `s_H(V) ∈ W_B + Q_V` for the frame of a complex of any arity.
pub fn is_weakly_thick(m: &ReflectionComplex, opts: &Options) -> Result<Decision> {
    let k = m.arity();
    let p = thickness_problem(m.base(), k, Claim::WeaklyThick)?;
    if opts.mode != Some(Mode::Full) {
        if k == 2 && in_class_c(m)?.member {
            let thick = certificate_from_trace(m)?;
            if let Some(c) = weak_from_thick(m.base(), &thick) {
                return Ok(Decision::Member(c));
            }
        }
        if in_class_ck(m).member {
            return Ok(Decision::Member(constructive::constructive_certificate(m, Claim::WeaklyThick)?));
        }
    }
    let p = p.clone().with_hint(restricted_hint(m, p.hint));
    decide_with_options(&p, opts)
}

/// Turns a thickness certificate into a weak-thickness one by adding
/// `Σ_v (deg(v) − 1)·1_{v}` to the cone part. `None` if some vertex has degree 0.
pub fn weak_from_thick(m: &BHypergraph, thick: &MembershipCertificate) -> Option<MembershipCertificate> {
    let frame = m.frame_masks(2);
    let mut cone: BTreeMap<Generator, Rational> = thick.cone.iter().cloned().collect();
    for p in 0..m.vertex_count() {
        let deg = frame.iter().filter(|e| e.contains(p)).count() as i64;
        if deg == 0 {
            return None;
        }
        if deg > 1 {
            *cone.entry(Generator::Indicator(Subset::singleton(p))).or_insert_with(Rational::zero) +=
                Rational::from_integer((deg - 1).into());
        }
    }
    Some(MembershipCertificate { subspace: thick.subspace.clone(), line: thick.line.clone(), cone: cone.into_iter().collect() })
}

/// Decides `s_H(A) ∈ C + I + Q_V` with `C` spanned by `t_{A1,A2}` over
/// `ci_pairs` and `I` by `1_{A1} − 1_{A2}` over `is_pairs`. `H` is any graph
/// or uniform hypergraph on `ground`.
pub fn general_certificate(
    ground: &GroundSet,
    h: &Hypergraph,
    a: &[Vertex],
    ci_pairs: &[(Vec<Vertex>, Vec<Vertex>)],
    is_pairs: &[(Vec<Vertex>, Vec<Vertex>)],
    mode: Mode,
    limits: &Limits,
) -> Result<Decision> {
    let a = ground.subset(a)?;
    let edges = h.edge_masks(ground)?;
    let target = s_mask(ground, &edges, a);
    let mut subspace = Vec::new();
    for (x, y) in ci_pairs {
        subspace.push(Generator::t(ground.subset(x)?, ground.subset(y)?));
    }
    for (x, y) in is_pairs {
        subspace.push(Generator::Iso(ground.subset(x)?, ground.subset(y)?));
    }
    let mut hint: BTreeSet<Subset> = edges.iter().copied().collect();
    hint.extend(a.subsets().filter(|s| s.len() <= 2));
    let p = MembershipProblem::new(target, subspace).with_hint(hint.into_iter().collect());
    decide_membership(&p, mode, limits)
}

/// Serialized certificate or refutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<Claim>,
    pub ground: Vec<Vertex>,
    pub target: Vec<SetFunctionRecord>,
    #[serde(default)]
    pub subspace: Vec<CoeffRecord>,
    #[serde(default = "zero_string")]
    pub line: String,
    #[serde(default)]
    pub cone: Vec<CoeffRecord>,
}

fn zero_string() -> String {
    "0".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub gen: GeneratorRecord,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<Claim>,
    pub ground: Vec<Vertex>,
    pub target: Vec<SetFunctionRecord>,
    pub functional: Vec<SetFunctionRecord>,
}

impl CertificateFile {
    pub fn new(p: &MembershipProblem, c: &MembershipCertificate, claim: Option<Claim>) -> Self {
        let rec = |(g, v): &(Generator, Rational)| CoeffRecord { gen: g.to_record(&p.ground), coeff: v.to_string() };
        CertificateFile {
            claim,
            ground: p.ground.vertices().to_vec(),
            target: p.target.to_records(),
            subspace: c.subspace.iter().map(rec).collect(),
            line: c.line.to_string(),
            cone: c.cone.iter().map(rec).collect(),
        }
    }

    pub fn ground_set(&self) -> Result<GroundSet> {
        GroundSet::new(self.ground.iter().copied())
    }

    pub fn target(&self) -> Result<SetFunction> {
        SetFunction::from_records(&self.ground_set()?, &self.target)
    }

    pub fn certificate(&self) -> Result<MembershipCertificate> {
        let ground = self.ground_set()?;
        let parse = |r: &CoeffRecord| -> Result<(Generator, Rational)> {
            Ok((Generator::from_record(&ground, &r.gen)?, parse_rational(&r.coeff)?))
        };
        Ok(MembershipCertificate {
            subspace: self.subspace.iter().map(parse).collect::<Result<_>>()?,
            line: parse_rational(&self.line)?,
            cone: self.cone.iter().map(parse).collect::<Result<_>>()?,
        })
    }
}

impl RefutationFile {
    pub fn new(p: &MembershipProblem, r: &FarkasRefutation, claim: Option<Claim>) -> Self {
        RefutationFile {
            claim,
            ground: p.ground.vertices().to_vec(),
            target: p.target.to_records(),
            functional: r.functional.to_records(),
        }
    }

    pub fn ground_set(&self) -> Result<GroundSet> {
        GroundSet::new(self.ground.iter().copied())
    }

    pub fn target(&self) -> Result<SetFunction> {
        SetFunction::from_records(&self.ground_set()?, &self.target)
    }

    pub fn refutation(&self) -> Result<FarkasRefutation> {
        Ok(FarkasRefutation { functional: SetFunction::from_records(&self.ground_set()?, &self.functional)? })
    }
}
