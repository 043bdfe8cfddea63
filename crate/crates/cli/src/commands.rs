use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use sgdim_core::bounds::{best_bound_report, BoundsConfig};
use sgdim_core::groebner::{
    hilbert_samuel_multiplicity, multiplicity_via_reduction, MultiplicityConfig,
};
use sgdim_core::mf::{
    split_product_triangle, stable_annihilator_probe, verify_koszul_binomial, verify_koszul_split,
    Homotopy, HomotopyDocument, MFMorphism, MatrixFactorization, MfDocument, PolyMatrix,
};
use sgdim_core::ring::{
    alpha_exponent, is_regular_sequence, jacobian_ideal, loewy_length, Alpha, CertifiedSubideal,
    DsgAssertion, RingPresentation,
};
use sgdim_core::{
    parse_polynomial, parse_polynomial_list, BoundsError, ErrorKind, GroebnerError, Ideal, MfError,
    ParseError, PolyError, Polynomial, RingError,
};

use crate::args::{BoundsArgs, Cli, Command, Format, MfCommand};

pub const EXIT_HYPOTHESIS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub status: u8,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            status: EXIT_USAGE,
        }
    }

    fn from_kind(kind: ErrorKind, message: String) -> Self {
        let status = match kind {
            ErrorKind::Usage => EXIT_USAGE,
            ErrorKind::Hypothesis => EXIT_HYPOTHESIS,
            ErrorKind::ResourceCap => EXIT_CAP,
        };
        CliError { message, status }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::usage(e.to_string())
    }
}

macro_rules! kinded {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::from_kind(e.kind(), e.to_string())
            }
        }
    )*};
}
kinded!(GroebnerError, RingError, MfError, BoundsError);

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::usage(e.to_string())
    }
}

/// A computed result. `status` is nonzero when the computation finished
/// but a checked hypothesis failed.
pub struct Report {
    pub command: String,
    pub status: u8,
    pub result: Value,
}

impl Report {
    fn ok(command: &str, result: Value) -> Self {
        Report {
            command: command.to_string(),
            status: 0,
            result,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    format: Option<Format>,
    degree_cap: Option<u32>,
    max_candidates: Option<usize>,
    alpha_cap: Option<u32>,
    multiplicity_cap: Option<usize>,
    probe_degree_cap: Option<u32>,
}

pub struct Settings {
    pub format: Format,
    pub degree_cap: u32,
    pub max_candidates: usize,
    pub alpha_cap: u32,
    pub multiplicity_cap: usize,
    pub probe_degree_cap: u32,
}

impl Settings {
    pub fn load(cli: &Cli) -> Result<Settings, CliError> {
        let file = match &cli.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
                toml::from_str::<ConfigFile>(&text)
                    .map_err(|e| CliError::usage(format!("bad config {}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };
        let defaults = BoundsConfig::default();
        Ok(Settings {
            format: cli.format.or(file.format).unwrap_or(Format::Text),
            degree_cap: file.degree_cap.unwrap_or(defaults.degree_cap),
            max_candidates: file.max_candidates.unwrap_or(defaults.max_candidates),
            alpha_cap: file.alpha_cap.unwrap_or(defaults.alpha_cap),
            multiplicity_cap: file
                .multiplicity_cap
                .unwrap_or(MultiplicityConfig::default().cap),
            probe_degree_cap: file.probe_degree_cap.unwrap_or(3),
        })
    }
}

fn ring(text: &str) -> Result<RingPresentation, CliError> {
    Ok(RingPresentation::parse(text)?)
}

fn element(r: &RingPresentation, text: &str) -> Result<Polynomial, CliError> {
    Ok(parse_polynomial(text, r.ring())?)
}

/// `(g1, g2)` or `g1, g2`.
fn ideal(r: &RingPresentation, text: &str) -> Result<Ideal, CliError> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t);
    Ok(r.ideal(parse_polynomial_list(inner, r.ring())?)?)
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn subideal(r: &RingPresentation, text: Option<&str>) -> Result<Ideal, CliError> {
    match text {
        Some(t) => ideal(r, t),
        None => Ok(jacobian_ideal(r)?),
    }
}

pub fn run(command: &Command, s: &Settings) -> Result<Report, CliError> {
    match command {
        Command::Jacobian { ring: rt } => {
            let r = ring(rt)?;
            let j = jacobian_ideal(&r)?;
            Ok(Report::ok(
                "jacobian",
                json!({ "ring": r.to_string(), "jacobian": strings(j.generators()) }),
            ))
        }
        Command::Alpha {
            element: et,
            ring: rt,
            cap,
        } => {
            let r = ring(rt)?;
            let x = element(&r, et)?;
            let j = CertifiedSubideal::jacobian(&r, true)?;
            let cap = cap.unwrap_or(s.alpha_cap);
            match alpha_exponent(&x, &j, &r, cap)? {
                Alpha::Found {
                    exponent,
                    certificate,
                    generators,
                    semantics,
                } => {
                    let terms: Vec<Value> = certificate
                        .combination
                        .iter()
                        .map(|(c, i)| json!({ "coefficient": c.to_string(), "generator": generators[*i].to_string() }))
                        .collect();
                    Ok(Report::ok(
                        "alpha",
                        json!({
                            "ring": r.to_string(),
                            "element": x.to_string(),
                            "alpha": exponent,
                            "semantics": semantics,
                            "certificate": {
                                "element": certificate.element.to_string(),
                                "verified": certificate.verify(&generators),
                                "combination": terms,
                            },
                        }),
                    ))
                }
                Alpha::NotFound { cap } => Err(CliError {
                    message: format!("no power of {x} up to {cap} lies in the Jacobian ideal"),
                    status: EXIT_CAP,
                }),
            }
        }
        Command::Loewy {
            ring: rt,
            ideal: it,
        } => {
            let r = ring(rt)?;
            let j = subideal(&r, it.as_deref())?;
            let l = loewy_length(&r, &j)?;
            Ok(Report::ok(
                "loewy",
                json!({ "ring": r.to_string(), "ideal": j.to_string(), "loewy_length": l.value, "semantics": l.semantics }),
            ))
        }
        Command::Mult {
            ring: rt,
            ideal: it,
            reduction,
            cap,
        } => {
            let r = ring(rt)?;
            let j = subideal(&r, it.as_deref())?;
            let cfg = MultiplicityConfig {
                cap: cap.unwrap_or(s.multiplicity_cap),
                ..Default::default()
            };
            let hs = hilbert_samuel_multiplicity(r.relations(), &j, &cfg)?;
            let mut result = json!({
                "ring": r.to_string(),
                "ideal": j.to_string(),
                "multiplicity": hs.value,
                "dimension": hs.dimension,
                "lengths": hs.lengths,
                "semantics": hs.semantics,
            });
            if let Some(q) = reduction {
                let q = ideal(&r, q)?;
                let red = multiplicity_via_reduction(r.relations(), &j, &q, true, &cfg)?;
                result["reduction"] = json!({
                    "ideal": q.to_string(),
                    "multiplicity": red.value,
                    "reduction_exponent": red.reduction_exponent,
                    "agrees": red.value == hs.value,
                });
            }
            Ok(Report::ok("mult", result))
        }
        Command::RegularSeq { elements, ring: rt } => {
            let r = ring(rt)?;
            let xs = parse_polynomial_list(elements, r.ring())?;
            let regular = is_regular_sequence(&xs, &r)?;
            Ok(Report::ok(
                "regular-seq",
                json!({ "ring": r.to_string(), "elements": strings(&xs), "regular_sequence": regular }),
            ))
        }
        Command::Bounds(args) => bounds(args, s),
        Command::Mf(m) => mf(m, s),
        Command::Verify { .. } => Ok(crate::verify::run_all()),
    }
}

fn bounds(args: &BoundsArgs, s: &Settings) -> Result<Report, CliError> {
    let r = ring(&args.ring)?;
    let mut assertions = Vec::new();
    for a in &args.assert_dim {
        let (rt, v) = a.rsplit_once('=').ok_or_else(|| {
            CliError::usage(format!("--assert-dim expects RING=VALUE, got `{a}`"))
        })?;
        let value = v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad dimension `{v}`")))?;
        assertions.push(DsgAssertion {
            ring: ring(rt)?,
            value,
        });
    }
    let reduction = match &args.reduction {
        Some(q) => Some(ideal(&r, q)?.generators().to_vec()),
        None => None,
    };
    let config = BoundsConfig {
        degree_cap: args.degree_cap.unwrap_or(s.degree_cap),
        max_candidates: args.max_candidates.unwrap_or(s.max_candidates),
        alpha_cap: s.alpha_cap,
        jacobian_hypotheses_asserted: !args.no_jacobian_hypotheses,
        assertions,
        reduction,
        multiplicity: MultiplicityConfig {
            cap: s.multiplicity_cap,
            ..Default::default()
        },
        ..Default::default()
    };
    let report = best_bound_report(&r, &config)?;
    let status = if report.best.is_some() {
        0
    } else {
        EXIT_HYPOTHESIS
    };
    Ok(Report {
        command: "bounds".into(),
        status,
        result: serde_json::to_value(&report).expect("report serializes"),
    })
}

fn load_mf(path: &Path) -> Result<MatrixFactorization, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(MfDocument::from_json(&text)?.to_factorization()?)
}

fn matrix(m: &PolyMatrix) -> Value {
    json!(m
        .to_rows()
        .iter()
        .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn morphism(phi: &MFMorphism) -> Value {
    json!({ "alpha0": matrix(phi.alpha0()), "alpha1": matrix(phi.alpha1()) })
}

fn homotopy(h: &Homotopy) -> Value {
    serde_json::to_value(HomotopyDocument::from_homotopy(h)).expect("homotopy serializes")
}

fn mf(command: &MfCommand, s: &Settings) -> Result<Report, CliError> {
    match command {
        MfCommand::Validate { file } => {
            let text = fs::read_to_string(file)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", file.display())))?;
            let doc = MfDocument::from_json(&text)?;
            match doc.to_factorization() {
                Ok(x) => Ok(Report::ok(
                    "mf validate",
                    json!({ "potential": x.potential().to_string(), "rank": x.rank(), "valid": true }),
                )),
                Err(MfError::Invalid(why)) => Ok(Report {
                    command: "mf validate".into(),
                    status: EXIT_HYPOTHESIS,
                    result: json!({ "potential": doc.potential, "rank": doc.rank, "valid": false, "reason": why }),
                }),
                Err(e) => Err(e.into()),
            }
        }
        MfCommand::Ann { file, degree_cap } => {
            let x = load_mf(file)?;
            let cap = degree_cap.unwrap_or(s.probe_degree_cap);
            let hits = stable_annihilator_probe(&x, cap)?;
            let hits: Vec<Value> = hits
                .iter()
                .map(|(m, h)| json!({ "element": m.to_string(), "homotopy": homotopy(h) }))
                .collect();
            Ok(Report::ok(
                "mf ann",
                json!({ "potential": x.potential().to_string(), "rank": x.rank(), "degree_cap": cap, "annihilators": hits }),
            ))
        }
        MfCommand::KoszulSplit { file, x: et } => {
            let x = load_mf(file)?;
            let e = parse_polynomial(et, x.ring())?;
            let split = verify_koszul_split(&x, &e)?;
            let c = &split.certificate;
            Ok(Report::ok(
                "mf koszul-split",
                json!({
                    "element": e.to_string(),
                    "homotopy": homotopy(&split.homotopy),
                    "tensor_rank": c.source().rank(),
                    "split_rank": c.target().rank(),
                    "forward": morphism(c.forward()),
                    "backward": morphism(c.backward()),
                    "verified": c.verify(),
                }),
            ))
        }
        MfCommand::Prop5 {
            file,
            x: xt,
            y: yt,
            exactness,
        } => {
            let x = load_mf(file)?;
            let ex = parse_polynomial(xt, x.ring())?;
            let ey = parse_polynomial(yt, x.ring())?;
            let t = split_product_triangle(&x, &ex, &ey, *exactness)?;
            Ok(Report::ok(
                "mf prop5",
                json!({
                    "x": ex.to_string(),
                    "y": ey.to_string(),
                    "ranks": [t.left.rank(), t.middle.rank(), t.right.rank()],
                    "u": morphism(&t.u),
                    "v": morphism(&t.v),
                    "composite_homotopy": homotopy(&t.composite),
                    "middle_splits": t.splitting.verify(),
                    "split_rank": t.splitting.target().rank(),
                    "exactness_verified": t.exactness.as_ref().map(|c| c.verify()),
                    "verified": t.check().is_ok(),
                }),
            ))
        }
        MfCommand::Binomial { file, xs } => {
            let x = load_mf(file)?;
            let elts = parse_polynomial_list(xs, x.ring())?;
            let b = verify_koszul_binomial(&x, &elts)?;
            Ok(Report::ok(
                "mf binomial",
                json!({
                    "elements": strings(&elts),
                    "tensor_rank": b.tensor.rank(),
                    "multiplicities": b.multiplicities,
                    "summands": b.summands,
                    "verified": b.certificate.verify(),
                }),
            ))
        }
    }
}
