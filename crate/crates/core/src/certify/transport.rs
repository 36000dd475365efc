//! Moving a thickness certificate through a subdivision.
//!
//! With `γ` the subset map of the subdivision and `γ*` the induced map on set
//! functions,
//!
//! `h_Ĥ(V̂) = γ*(h_H(V)) + Σ_{A ∈ E(H)} h(copy of N on A) + Σ_v (deg(v) − 1)·(−h(J'_v))`
//!
//! and `γ*` sends `Q_V` into `Q_V̂` via
//! `γ*(t_{A,B}) = t_{γA,γB} + t_{C, γA ∪ γB} + 1_C − 1_∅` with
//! `C = γ(A ∪ B) ∖ (γA ∪ γB)`.

use num_traits::One;

use super::constructive::{forest_certificate_combination, Combination};
use super::{Generator, MembershipCertificate};
use crate::catalog::SubdivisionData;
use crate::error::{Error, Result};
use crate::setfun::{Rational, Subset};

/// Builds a thickness certificate for the subdivided complex from one for the
/// host (`cert_m`) and one for the inserted complex (`cert_n`).
pub fn certificate_transport_subdivision(
    cert_m: &MembershipCertificate,
    cert_n: &MembershipCertificate,
    data: &SubdivisionData,
) -> Result<MembershipCertificate> {
    let insert_frame = data.insert.frame_masks();
    for (name, j) in [("J1", data.j1), ("J2", data.j2)] {
        if forest_certificate_combination(&insert_frame, j).is_err() {
            return Err(Error::Precondition(format!("{name} does not span a forest in the inserted frame")));
        }
    }

    let gamma = |s: Subset| data.gamma(s);
    let one = Rational::one();
    let mut out = Combination::default();
    out.line(&cert_m.line);
    for (g, c) in &cert_m.subspace {
        match *g {
            Generator::Indicator(_) => {
                return Err(Error::MalformedCertificate("indicators are not subspace generators".into()));
            }
            _ => out.sub(g.map(&gamma), c),
        }
    }
    for (g, c) in &cert_m.cone {
        match *g {
            Generator::T(a, b) => {
                let (ga, gb) = (gamma(a), gamma(b));
                let u = ga.union(gb);
                let extra = gamma(a.union(b)).difference(u);
                out.cone(Generator::t(ga, gb), c);
                if !extra.is_empty() {
                    out.cone(Generator::t(extra, u), c);
                    out.cone(Generator::Indicator(extra), c);
                    out.line(&-c.clone());
                }
            }
            Generator::Indicator(s) => {
                let gs = gamma(s);
                if gs.is_empty() {
                    out.line(c);
                } else {
                    out.cone(Generator::Indicator(gs), c);
                }
            }
            Generator::Iso(..) => {
                return Err(Error::MalformedCertificate("iso generators are not cone generators".into()));
            }
        }
    }

    let n_cert = Combination::from_certificate(cert_n);
    for pos in data.edge_copies.values() {
        out.add(&n_cert.mapped(&|s: Subset| Subset(s.positions().fold(0, |acc, p| acc | (1 << pos[p])))), &one);
    }

    let frame = data.complex.frame_masks();
    let host_frame = data.host.frame();
    for (&v, &block) in &data.blocks {
        let deg = host_frame.degree(v) as i64;
        if deg > 1 {
            let local = forest_certificate_combination(&frame, block)?;
            out.add(&local, &Rational::from_integer((deg - 1).into()));
        }
    }
    Ok(out.into_certificate())
}
