//! Command-line front end. Exit codes: 0 pass, 1 refuted or failed,
//! 2 inconclusive (including size caps), 3 input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::certify::{
    decide_with_options, is_thick, is_weakly_thick, thickness_problem, verify_certificate, verify_refutation,
    CertificateFile, Claim, Decision, Limits, MembershipProblem, Mode, Options, RefutationFile,
};
use crate::error::{Error, Result};
use crate::graph::FrameGraph;
use crate::homcount::{d_tau, sidorenko_check, sweep_targets, SweepMode};
use crate::io::{read_graph, read_json, read_target, to_json, write_json, ComplexFile, Loaded};
use crate::measures::{
    edge_and_vertex_entropy, entropy_vs_uniform, evaluate_scheme, format_real, supermodularity_probe, witness_check,
    DEFAULT_STATE_CAP,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Digits shown for entropies.
const DIGITS: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "sidorenko", version, about = "Certificates, coupling measures and density checks for reflection complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

/// Flags shared by all commands.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// LP mode; without it the constructive route is tried first, then restricted, then full.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    /// Tolerance for inequalities between entropies.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Largest ground set for full-mode LP.
    #[arg(long, global = true, default_value_t = crate::certify::DEFAULT_FULL_CAP)]
    pub max_ground: usize,
    /// Largest state space |V(G)|^|S| a measure may occupy.
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_CAP)]
    pub max_state: u128,
    /// Seed for sampled pairs and random sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file for the command's main artifact.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Restricted,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
    Thick,
    WeaklyThick,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide (weak) thickness of a complex; writes a certificate or a refutation.
    Certify {
        complex: PathBuf,
        /// Defaults to thick for graphs, weakly-thick otherwise.
        #[arg(long, value_enum)]
        claim: Option<ClaimArg>,
    },
    /// Check a certificate or refutation file against a complex.
    VerifyCert {
        cert: PathBuf,
        #[arg(long)]
        complex: PathBuf,
    },
    /// Build the coupling measure of a complex on a target graph.
    Scheme {
        complex: PathBuf,
        #[arg(long = "g")]
        g: PathBuf,
        /// Check D(mu) <= |E(H)|·D_e.
        #[arg(long)]
        check_witness: bool,
        /// Pair g(B) = D(mu|_B) with relation, sampled and density generators.
        #[arg(long)]
        probe: bool,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Exact check of t(H,G) >= t(e,G)^|E(H)|.
    Sidorenko {
        /// Graph file, or a complex file (its frame is used).
        #[arg(long = "h")]
        h: PathBuf,
        #[arg(long = "g")]
        g: PathBuf,
    },
    /// Run the density check against all (or sampled) targets with N vertices.
    SidorenkoSweep {
        #[arg(long = "h")]
        h: PathBuf,
        #[arg(long)]
        max_g_vertices: usize,
        #[arg(long, default_value_t = 2)]
        arity: usize,
        /// Check this many seeded-random targets instead of all of them.
        #[arg(long)]
        random: Option<usize>,
    },
    /// List or emit catalog constructions.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Emit {
        name: String,
        params: Vec<u32>,
        /// Also write the construction's certificate, when it carries one.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

impl RunConfig {
    fn options(&self) -> Options {
        Options {
            mode: self.mode.map(|m| match m {
                ModeArg::Restricted => Mode::Restricted,
                ModeArg::Full => Mode::Full,
            }),
            limits: Limits::default().with_max_ground(self.max_ground),
        }
    }

    /// Writes JSON to `--out`, or to stdout when none is given.
    fn emit<T: serde::Serialize>(&self, out: &mut dyn Write, value: &T) -> Result<()> {
        match &self.out {
            Some(p) => write_json(p, value),
            None => Ok(out.write_all(to_json(value)?.as_bytes())?),
        }
    }
}

fn default_claim(arity: usize) -> Claim {
    if arity == 2 {
        Claim::Thick
    } else {
        Claim::WeaklyThick
    }
}

fn claim_of(arg: Option<ClaimArg>, arity: usize) -> Claim {
    match arg {
        Some(ClaimArg::Thick) => Claim::Thick,
        Some(ClaimArg::WeaklyThick) => Claim::WeaklyThick,
        None => default_claim(arity),
    }
}

fn load_complex(path: &Path) -> Result<Loaded> {
    read_json::<ComplexFile>(path)?.load()
}

/// A graph file, or the frame of a complex file.
fn load_frame(path: &Path) -> Result<FrameGraph> {
    read_graph(path).or_else(|graph_err| match read_json::<ComplexFile>(path) {
        Ok(f) => {
            let m = f.load()?;
            Ok(crate::complex::frame(m.base(), m.arity()))
        }
        Err(_) => Err(graph_err),
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeCap { .. } => EXIT_INCONCLUSIVE,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_PASS;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Certify { complex, claim } => cmd_certify(cfg, complex, *claim, out),
        Command::VerifyCert { cert, complex } => cmd_verify_cert(cert, complex, out),
        Command::Scheme { complex, g, check_witness, probe, samples } => {
            cmd_scheme(cfg, complex, g, *check_witness, *probe, *samples, out)
        }
        Command::Sidorenko { h, g } => cmd_sidorenko(cfg, h, g, out),
        Command::SidorenkoSweep { h, max_g_vertices, arity, random } => {
            cmd_sweep(cfg, h, *max_g_vertices, *arity, *random, out)
        }
        Command::Catalog { action } => cmd_catalog(cfg, action, out),
    }
}

pub fn cmd_certify(cfg: &RunConfig, path: &Path, claim: Option<ClaimArg>, out: &mut dyn Write) -> Result<i32> {
    let loaded = load_complex(path)?;
    let k = loaded.arity();
    let claim = claim_of(claim, k);
    let problem = thickness_problem(loaded.base(), k, claim)?;
    let opts = cfg.options();
    let decision = match &loaded {
        Loaded::Traced(m) => match claim {
            Claim::Thick => is_thick(m, &opts)?,
            Claim::WeaklyThick => is_weakly_thick(m, &opts)?,
        },
        Loaded::Explicit { .. } => decide_with_options(&problem, &opts)?,
    };
    let what = match claim {
        Claim::Thick => "thick",
        Claim::WeaklyThick => "weakly thick",
    };
    let n = problem.ground.len();
    match decision {
        Decision::Member(c) => {
            let ok = verify_certificate(&problem, &c)?;
            if let Some(p) = &cfg.out {
                write_json(p, &CertificateFile::new(&problem, &c, Some(claim)))?;
            }
            writeln!(
                out,
                "{what}: certificate on {n} vertices ({} subspace terms, {} cone terms), verified: {ok}",
                c.subspace.len(),
                c.cone.len()
            )?;
            if cfg.out.is_none() {
                out.write_all(to_json(&CertificateFile::new(&problem, &c, Some(claim)))?.as_bytes())?;
            }
            Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
        }
        Decision::NotMember(r) => {
            writeln!(out, "not {what}: separating functional found ({} nonzero values)", r.functional.support_len())?;
            cfg.emit(out, &RefutationFile::new(&problem, &r, Some(claim)))?;
            Ok(EXIT_FAIL)
        }
        Decision::Inconclusive => {
            writeln!(out, "inconclusive: the restricted cone does not contain the target; retry with --mode full")?;
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn same_problem(p: &MembershipProblem, ground: &[u32], target: &crate::setfun::SetFunction) -> bool {
    p.ground.vertices() == ground && &p.target == target
}

pub fn cmd_verify_cert(cert: &Path, complex: &Path, out: &mut dyn Write) -> Result<i32> {
    let loaded = load_complex(complex)?;
    let value: serde_json::Value = read_json(cert)?;
    let is_refutation = value.get("functional").is_some();
    let verdict = if is_refutation {
        let file: RefutationFile = serde_json::from_value(value)?;
        let p = thickness_problem(loaded.base(), loaded.arity(), file.claim.unwrap_or(default_claim(loaded.arity())))?;
        if !same_problem(&p, &file.ground, &file.target()?) {
            writeln!(out, "FAIL: refutation is for a different target")?;
            return Ok(EXIT_FAIL);
        }
        verify_refutation(&p, &file.refutation()?)
    } else {
        let file: CertificateFile = serde_json::from_value(value)?;
        let p = thickness_problem(loaded.base(), loaded.arity(), file.claim.unwrap_or(default_claim(loaded.arity())))?;
        if !same_problem(&p, &file.ground, &file.target()?) {
            writeln!(out, "FAIL: certificate is for a different target")?;
            return Ok(EXIT_FAIL);
        }
        file.certificate().and_then(|c| verify_certificate(&p, &c))
    };
    let kind = if is_refutation { "refutation" } else { "certificate" };
    match verdict {
        Ok(true) => {
            writeln!(out, "PASS: {kind} verified")?;
            Ok(EXIT_PASS)
        }
        Ok(false) => {
            writeln!(out, "FAIL: {kind} does not verify")?;
            Ok(EXIT_FAIL)
        }
        Err(e @ (Error::MalformedCertificate(_) | Error::InvalidSubset(_))) => {
            writeln!(out, "FAIL: {e}")?;
            Ok(EXIT_FAIL)
        }
        Err(e) => Err(e),
    }
}

pub fn cmd_scheme(
    cfg: &RunConfig,
    complex: &Path,
    g: &Path,
    check_witness: bool,
    probe: bool,
    samples: usize,
    out: &mut dyn Write,
) -> Result<i32> {
    let loaded = load_complex(complex)?;
    let m = loaded.traced()?;
    let g = read_target(g)?;
    let mu = evaluate_scheme(m, &g, cfg.max_state)?;
    let h = m.frame();
    let (d_e, d_v) = edge_and_vertex_entropy(&g);
    writeln!(out, "measure on {} coordinates, support {}", mu.coords().len(), mu.support_len())?;
    writeln!(out, "D(mu) = {}", format_real(&entropy_vs_uniform(&mu).value, DIGITS))?;
    writeln!(out, "D_e = {}", format_real(&d_e.value, DIGITS))?;
    writeln!(out, "D_v = {}", format_real(&d_v.value, DIGITS))?;
    match d_tau(&h, &g) {
        Ok(d) => writeln!(out, "D(tau(H,G)) = {}", format_real(&d.value, DIGITS))?,
        Err(Error::EmptySupport) => writeln!(out, "D(tau(H,G)) = inf (no homomorphisms)")?,
        Err(e) => return Err(e),
    }
    let mut code = EXIT_PASS;
    if check_witness {
        match witness_check(&mu, &h, &g, cfg.tol) {
            Ok(w) => {
                writeln!(
                    out,
                    "witness: {} D(mu) = {} <= |E|*D_e = {}",
                    if w.holds { "PASS" } else { "FAIL" },
                    format_real(&w.d_mu.value, DIGITS),
                    format_real(&w.bound, DIGITS)
                )?;
                if !w.holds {
                    code = EXIT_FAIL;
                }
            }
            Err(e @ Error::NotAHomomorphismMeasure(_)) => {
                writeln!(out, "witness: FAIL {e}")?;
                code = EXIT_FAIL;
            }
            Err(e) => return Err(e),
        }
    }
    if probe {
        let r = supermodularity_probe(m, &g, samples, cfg.seed, cfg.tol, cfg.max_state)?;
        writeln!(
            out,
            "probe: {} relation max |<g,t>| = {:e}, sampled min <g,t> = {:e} over {} pairs, <g,s_H(V)> = {:e}",
            if r.holds { "PASS" } else { "FAIL" },
            r.relation_max_abs,
            r.sampled_min,
            r.sampled_pairs,
            r.s_pairing
        )?;
        if !r.holds {
            code = EXIT_FAIL;
        }
    }
    if let Some(p) = &cfg.out {
        write_json(p, &mu.to_file())?;
    }
    Ok(code)
}

pub fn cmd_sidorenko(cfg: &RunConfig, h: &Path, g: &Path, out: &mut dyn Write) -> Result<i32> {
    let h = load_frame(h)?;
    let g = read_target(g)?;
    let r = sidorenko_check(&h, &g)?;
    writeln!(out, "homomorphisms = {}", r.homomorphisms)?;
    writeln!(out, "t(H,G) = {}", r.lhs)?;
    writeln!(out, "t(e,G)^|E(H)| = {}", r.rhs)?;
    writeln!(out, "{}", if r.holds { "PASS" } else { "FAIL" })?;
    if let Some(p) = &cfg.out {
        write_json(p, &r)?;
    }
    Ok(if r.holds { EXIT_PASS } else { EXIT_FAIL })
}

pub fn cmd_sweep(
    cfg: &RunConfig,
    h: &Path,
    vertices: usize,
    arity: usize,
    random: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32> {
    let h = load_frame(h)?;
    let mode = match random {
        Some(samples) => SweepMode::Random { samples, seed: cfg.seed },
        None => SweepMode::Exhaustive,
    };
    let report = sweep_targets(&h, vertices, arity, mode)?;
    out.write_all(report.render().as_bytes())?;
    if let Some(p) = &cfg.out {
        write_json(p, &report)?;
    }
    Ok(if report.violation_count() == 0 { EXIT_PASS } else { EXIT_FAIL })
}

pub fn cmd_catalog(cfg: &RunConfig, action: &CatalogAction, out: &mut dyn Write) -> Result<i32> {
    match action {
        CatalogAction::List => {
            for (name, params, about) in catalog::NAMES {
                let usage = if params.is_empty() { name.to_string() } else { format!("{name} {params}") };
                writeln!(out, "{usage:<28} {about}")?;
            }
            Ok(EXIT_PASS)
        }
        CatalogAction::Emit { name, params, cert } => {
            let entry = match catalog::build(name, params) {
                Err(Error::Unsupported(msg)) => {
                    writeln!(out, "{msg}")?;
                    return Ok(EXIT_INCONCLUSIVE);
                }
                r => r?,
            };
            cfg.emit(out, &ComplexFile::from_complex(&entry.complex))?;
            if let Some(path) = cert {
                let c = entry
                    .certificate
                    .as_ref()
                    .ok_or_else(|| Error::Parameter(format!("{name} carries no stored certificate; use certify")))?;
                let p = thickness_problem(entry.complex.base(), 2, Claim::Thick)?;
                write_json(path, &CertificateFile::new(&p, c, Some(Claim::Thick)))?;
            }
            Ok(EXIT_PASS)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn catalog_list_and_errors() {
        let (code, out, _) = run_str(&["sidorenko", "catalog", "list"]);
        assert_eq!(code, 0);
        assert!(out.contains("hypercube N"));
        let (code, out, _) = run_str(&["sidorenko", "catalog", "emit", "bipartite-4side"]);
        assert_eq!(code, EXIT_INCONCLUSIVE);
        assert!(out.starts_with("unsupported"));
        let (code, _, err) = run_str(&["sidorenko", "certify", "/nonexistent.json"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.starts_with("error:"));
        assert_eq!(run_str(&["sidorenko", "bogus"]).0, EXIT_INPUT);
    }
}
