use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{BoundsError, RingError};
use crate::groebner::{
    hilbert_samuel_multiplicity, monomials_of_degree, multiplicity_via_reduction, Ideal,
    LocalIdeal, MultiplicityConfig, Semantics,
};
use crate::poly::{PolyRing, Polynomial};
use crate::ring::{
    dsg_dimension_lookup, is_nonzerodivisor, is_regular_sequence, quotient_ring,
    simple_singularity_lookup, CertifiedSubideal, DsgAssertion, DsgDimension, Justification,
    RingPresentation, TableEntry,
};

use super::{
    annihilator_exponent_bound, leading_power_bound, loewy_comparison_bound,
    multiplicity_comparison_bound, omega, regular_sequence_bound, sum_over_quotients_bound,
};

#[derive(Clone, Debug)]
pub struct BoundsConfig {
    /// Largest degree of candidate monomials.
    pub degree_cap: u32,
    pub max_candidates: usize,
    /// Largest power tried when looking for `x^n ∈ J`.
    pub alpha_cap: u32,
    /// Longest regular sequence searched.
    pub max_sequence_length: usize,
    /// Whether the user vouches for `jac R ⊆ ann D_sg(R)`. Otherwise the
    /// subideal is recorded as user-asserted.
    pub jacobian_hypotheses_asserted: bool,
    /// Known dimensions of quotient rings.
    pub assertions: Vec<DsgAssertion>,
    /// Parameter reduction of `J` used for the multiplicity; without one the
    /// Hilbert-Samuel function is fitted.
    pub reduction: Option<Vec<Polynomial>>,
    pub multiplicity: MultiplicityConfig,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig {
            degree_cap: 4,
            max_candidates: 200,
            alpha_cap: 24,
            max_sequence_length: 3,
            jacobian_hypotheses_asserted: true,
            assertions: Vec::new(),
            reduction: None,
            multiplicity: MultiplicityConfig::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisStatus {
    Verified,
    Asserted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub statement: String,
    pub status: HypothesisStatus,
}

impl Hypothesis {
    fn verified(s: impl Into<String>) -> Self {
        Hypothesis {
            statement: s.into(),
            status: HypothesisStatus::Verified,
        }
    }

    fn asserted(s: impl Into<String>) -> Self {
        Hypothesis {
            statement: s.into(),
            status: HypothesisStatus::Asserted,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Bound {
    pub name: String,
    pub value: u64,
    pub citation: String,
    pub hypotheses: Vec<Hypothesis>,
    pub inputs: BTreeMap<String, Value>,
}

impl Bound {
    fn asserted_count(&self) -> usize {
        self.hypotheses
            .iter()
            .filter(|h| h.status == HypothesisStatus::Asserted)
            .count()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub element: String,
    pub nonzerodivisor: bool,
    /// Least `n` with `x^n ∈ J` locally, if found below the cap.
    pub alpha: Option<u32>,
    pub quotient: String,
    pub quotient_dimension: Option<u32>,
    pub quotient_source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Subideal {
    pub generators: Vec<String>,
    pub justification: Justification,
}

#[derive(Clone, Debug, Serialize)]
pub struct Best {
    pub name: String,
    pub value: u64,
}

/// A value known from outside results rather than computed here.
#[derive(Clone, Debug, Serialize)]
pub struct Annotation {
    pub statement: String,
    pub known_value: u64,
    pub computed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub ring: String,
    pub semantics: Semantics,
    pub subideal: Option<Subideal>,
    pub candidates: Vec<Candidate>,
    pub bounds: Vec<Bound>,
    pub best: Option<Best>,
    pub annotations: Vec<Annotation>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn bound(&self, name: &str) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.name == name)
    }
}

pub(crate) const LEADING_POWER: &str = "leading-power";
pub(crate) const SUM_OVER_QUOTIENTS: &str = "sum-over-quotients";
pub(crate) const REGULAR_SEQUENCE: &str = "regular-sequence";
pub(crate) const ANNIHILATOR_EXPONENT: &str = "annihilator-exponent";
pub(crate) const LOEWY_COMPARISON: &str = "loewy-comparison";
pub(crate) const MULTIPLICITY_COMPARISON: &str = "multiplicity-comparison";

fn citation(name: &str) -> &'static str {
    match name {
        LEADING_POWER => "dim D_sg(R) <= e - 2 for R = k[[x0,...,xd]]/(x0^e + f) with k[[x1,...,xd]]/(f) simple",
        SUM_OVER_QUOTIENTS => "dim D_sg(R) <= sum_i dim D_sg(R/x_iR) + n - 1 when x_1...x_n is in ann D_sg(R)",
        REGULAR_SEQUENCE => "dim D_sg(R) <= omega(dim D_sg(R/xR) + 1) - 1, omega = m_1...m_n(a_1/m_1 + ... + a_n/m_n)",
        ANNIHILATOR_EXPONENT => "dim D_sg(R) <= alpha(x)(dim D_sg(R/xR) + 1) - 1",
        LOEWY_COMPARISON => "dim D_sg(R) <= 2 ll(R/J) - 1",
        MULTIPLICITY_COMPARISON => "dim D_sg(R) <= e(J) - 1",
        _ => "",
    }
}

fn bound(name: &str, value: u64, hypotheses: Vec<Hypothesis>, inputs: Value) -> Bound {
    let inputs = match inputs {
        Value::Object(m) => m.into_iter().collect(),
        _ => BTreeMap::new(),
    };
    Bound {
        name: name.to_string(),
        value,
        citation: citation(name).to_string(),
        hypotheses,
        inputs,
    }
}

fn describe_dimension(d: &DsgDimension) -> String {
    match d {
        DsgDimension::Regular => "regular".into(),
        DsgDimension::Table { entry, .. } => format!("table: {entry}"),
        DsgDimension::UserAsserted { .. } => "user-asserted".into(),
        DsgDimension::Unknown => "unknown".into(),
    }
}

fn dimension_hypothesis(quotient: &str, d: &DsgDimension) -> Hypothesis {
    let v = d.value().unwrap_or_default();
    let s = format!("dim D_sg({quotient}) = {v} ({})", describe_dimension(d));
    match d {
        DsgDimension::UserAsserted { .. } => Hypothesis::asserted(s),
        _ => Hypothesis::verified(s),
    }
}

struct Context<'a> {
    r: &'a RingPresentation,
    local: LocalIdeal,
    subideal_hypothesis: Hypothesis,
    config: &'a BoundsConfig,
}

impl Context<'_> {
    fn contains(&self, p: &Polynomial) -> Result<bool, BoundsError> {
        Ok(self.local.contains(p).map_err(RingError::from)?)
    }

    /// Least `n ≤ cap` with `x^n ∈ J`, re-verifying the certificate.
    fn alpha(&self, x: &Polynomial) -> Result<Option<u32>, BoundsError> {
        let gens = self.local.decision_ideal().generators();
        let mut power = x.clone();
        for n in 1..=self.config.alpha_cap {
            if self.contains(&power)? {
                let cert = self
                    .local
                    .certify(&power)
                    .map_err(RingError::from)?
                    .expect("member has a certificate");
                if !cert.verify(gens) {
                    return Err(BoundsError::Hypothesis(format!(
                        "certificate for {power} failed"
                    )));
                }
                return Ok(Some(n));
            }
            power = &power * x;
        }
        Ok(None)
    }
}

struct Evaluated {
    element: Polynomial,
    candidate: Candidate,
    dimension: DsgDimension,
}

fn candidates(ring: &std::sync::Arc<PolyRing>, config: &BoundsConfig) -> Vec<Polynomial> {
    let one = ring.field().one();
    let mut out = Vec::new();
    for d in 1..=config.degree_cap {
        for m in monomials_of_degree(ring.nvars(), d) {
            if out.len() >= config.max_candidates {
                return out;
            }
            out.push(Polynomial::monomial(ring, m, one.clone()));
        }
    }
    out
}

fn evaluate(ctx: &Context, x: &Polynomial) -> Result<Evaluated, BoundsError> {
    let r = ctx.r;
    let nzd = is_nonzerodivisor(x, r)?;
    let (quotient, dimension) = match quotient_ring(r, std::slice::from_ref(x)) {
        Ok(q) => {
            let d = dsg_dimension_lookup(&q, &ctx.config.assertions)?;
            (q.to_string(), d)
        }
        Err(RingError::ZeroRing) => ("0".to_string(), DsgDimension::Regular),
        Err(e) => return Err(e.into()),
    };
    let is_variable = x.total_degree() == Some(1);
    let alpha = if nzd && (is_variable || dimension.value().is_some()) {
        ctx.alpha(x)?
    } else {
        None
    };
    Ok(Evaluated {
        element: x.clone(),
        candidate: Candidate {
            element: x.to_string(),
            nonzerodivisor: nzd,
            alpha,
            quotient,
            quotient_dimension: dimension.value(),
            quotient_source: describe_dimension(&dimension),
        },
        dimension,
    })
}

/// `f = c·v^e + g` with `g` free of `v` and simple in the remaining variables.
fn leading_power(ctx: &Context, bounds: &mut Vec<Bound>) -> Result<(), BoundsError> {
    let Some(f) = ctx.r.hypersurface() else {
        return Ok(());
    };
    let ring = ctx.r.ring();
    let n = ring.nvars();
    if n < 2 {
        return Ok(());
    }
    let mut best: Option<Bound> = None;
    for v in 0..n {
        let with_v: Vec<_> = f.terms().iter().filter(|(m, _)| m.exps()[v] > 0).collect();
        let [(m, c)] = with_v.as_slice() else {
            continue;
        };
        if m.support().count() != 1 {
            continue;
        }
        let e = m.exps()[v];
        let p = ring.field().characteristic();
        if e < 2 || [2, 3, 5].contains(&p) || (p != 0 && e % p == 0) {
            continue;
        }
        let rest = f - &Polynomial::monomial(ring, (*m).clone(), c.clone());
        let vars: Vec<String> = ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != v)
            .map(|(_, s)| s.clone())
            .collect();
        let smaller = PolyRing::new(ring.field(), vars).map_err(RingError::from)?;
        let g = rest.restrict_to(&smaller).map_err(RingError::from)?;
        let Some(entry) = simple_singularity_lookup(&g) else {
            continue;
        };
        if entry == TableEntry::CountableA1 {
            continue;
        }
        let x = Polynomial::var(ring, v);
        let power = x.pow(e - 1);
        if !ctx.contains(&power)? {
            continue;
        }
        let value = leading_power_bound(e)?;
        if best.as_ref().is_some_and(|b| b.value <= value) {
            continue;
        }
        best = Some(bound(
            LEADING_POWER,
            value,
            vec![
                Hypothesis::verified(format!(
                    "f = {c}*{x}^{e} + g with g = {g} simple of type {entry}"
                )),
                Hypothesis::verified(format!(
                    "characteristic {p} is not 2, 3, 5 and does not divide {e}"
                )),
                Hypothesis::verified(format!("{power} lies in J")),
                ctx.subideal_hypothesis.clone(),
            ],
            json!({ "element": x.to_string(), "e": e, "simple_type": entry.to_string() }),
        ));
    }
    bounds.extend(best);
    Ok(())
}

fn keep_min(slot: &mut Option<Bound>, b: Bound) {
    if slot.as_ref().is_none_or(|old| b.value < old.value) {
        *slot = Some(b);
    }
}

fn single_element_bounds(
    ctx: &Context,
    evaluated: &[Evaluated],
    bounds: &mut Vec<Bound>,
) -> Result<(), BoundsError> {
    let mut sum_best: Option<Bound> = None;
    let mut alpha_best: Option<Bound> = None;
    for ev in evaluated {
        let (Some(alpha), Some(d)) = (ev.candidate.alpha, ev.dimension.value()) else {
            continue;
        };
        let x = &ev.candidate.element;
        let hyps = vec![
            Hypothesis::verified(format!("{x} is a nonzerodivisor and not a unit")),
            Hypothesis::verified(format!("{x}^{alpha} lies in J (certificate re-verified)")),
            dimension_hypothesis(&ev.candidate.quotient, &ev.dimension),
            ctx.subideal_hypothesis.clone(),
        ];
        let inputs = json!({ "element": x, "alpha": alpha, "d": d });
        keep_min(
            &mut alpha_best,
            bound(
                ANNIHILATOR_EXPONENT,
                annihilator_exponent_bound(Some(alpha), d)?,
                hyps.clone(),
                inputs,
            ),
        );
        let ds = vec![Some(d); alpha as usize];
        keep_min(
            &mut sum_best,
            bound(
                SUM_OVER_QUOTIENTS,
                sum_over_quotients_bound(&ds)?,
                hyps,
                json!({ "elements": vec![x; alpha as usize], "d": ds }),
            ),
        );
    }

    // products of two distinct variables
    let vars: Vec<&Evaluated> = evaluated
        .iter()
        .filter(|e| {
            e.candidate.nonzerodivisor
                && e.element.total_degree() == Some(1)
                && e.dimension.value().is_some()
        })
        .collect();
    for (i, a) in vars.iter().enumerate() {
        for b in &vars[i + 1..] {
            let prod = &a.element * &b.element;
            if !ctx.contains(&prod)? {
                continue;
            }
            let ds = [a.dimension.value(), b.dimension.value()];
            let value = sum_over_quotients_bound(&ds)?;
            let (xa, xb) = (&a.candidate.element, &b.candidate.element);
            keep_min(
                &mut sum_best,
                bound(
                    SUM_OVER_QUOTIENTS,
                    value,
                    vec![
                        Hypothesis::verified(format!(
                            "{xa} and {xb} are nonzerodivisors and not units"
                        )),
                        Hypothesis::verified(format!("{prod} lies in J")),
                        dimension_hypothesis(&a.candidate.quotient, &a.dimension),
                        dimension_hypothesis(&b.candidate.quotient, &b.dimension),
                        ctx.subideal_hypothesis.clone(),
                    ],
                    json!({ "elements": [xa, xb], "d": ds }),
                ),
            );
        }
    }
    bounds.extend(sum_best);
    bounds.extend(alpha_best);
    Ok(())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn all_exponents(m: &[u32]) -> Vec<Vec<u32>> {
    m.iter().fold(vec![vec![]], |acc, &mi| {
        acc.into_iter()
            .flat_map(|v| {
                (0..=mi).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect()
    })
}

fn regular_sequence_bounds(
    ctx: &Context,
    evaluated: &[Evaluated],
    bounds: &mut Vec<Bound>,
) -> Result<(), BoundsError> {
    let vars: Vec<&Evaluated> = evaluated
        .iter()
        .filter(|e| {
            e.element.total_degree() == Some(1)
                && e.candidate.nonzerodivisor
                && e.candidate.alpha.is_some()
        })
        .collect();
    let dim = ctx.r.krull_dimension()?;
    let mut best: Option<Bound> = None;
    for k in 2..=ctx.config.max_sequence_length.min(dim) {
        for idx in subsets(vars.len(), k) {
            let seq: Vec<Polynomial> = idx.iter().map(|&i| vars[i].element.clone()).collect();
            if !is_regular_sequence(&seq, ctx.r)? {
                continue;
            }
            let q = quotient_ring(ctx.r, &seq)?;
            let dq = dsg_dimension_lookup(&q, &ctx.config.assertions)?;
            let Some(d) = dq.value() else { continue };
            let m: Vec<u32> = idx
                .iter()
                .map(|&i| vars[i].candidate.alpha.expect("filtered"))
                .collect();
            let m64: Vec<u64> = m.iter().map(|&v| u64::from(v)).collect();
            let mut found: Option<(u64, Vec<u32>, Polynomial)> = None;
            for a in all_exponents(&m) {
                if a.iter().all(|&ai| ai == 0) {
                    continue;
                }
                let a64: Vec<u64> = a.iter().map(|&v| u64::from(v)).collect();
                let w = omega(&m64, &a64)?;
                if found.as_ref().is_some_and(|(fw, ..)| *fw <= w) {
                    continue;
                }
                let prod = seq
                    .iter()
                    .zip(&a)
                    .fold(Polynomial::one(ctx.r.ring()), |acc, (x, &ai)| {
                        &acc * &x.pow(ai)
                    });
                if ctx.contains(&prod)? {
                    found = Some((w, a, prod));
                }
            }
            let Some((w, a, prod)) = found else { continue };
            let names: Vec<String> = seq.iter().map(|x| x.to_string()).collect();
            let powers: Vec<String> = names
                .iter()
                .zip(&m)
                .map(|(x, mi)| format!("{x}^{mi}"))
                .collect();
            keep_min(
                &mut best,
                bound(
                    REGULAR_SEQUENCE,
                    regular_sequence_bound(w, d)?,
                    vec![
                        Hypothesis::verified(format!("{} is a regular sequence", names.join(", "))),
                        Hypothesis::verified(format!("{} lie in J", powers.join(", "))),
                        Hypothesis::verified(format!("{prod} lies in J")),
                        dimension_hypothesis(&q.to_string(), &dq),
                        ctx.subideal_hypothesis.clone(),
                    ],
                    json!({ "elements": names, "m": m, "a": a, "omega": w, "d": d }),
                ),
            );
        }
    }
    bounds.extend(best);
    Ok(())
}

fn comparison_bounds(
    ctx: &Context,
    j: &Ideal,
    bounds: &mut Vec<Bound>,
    notes: &mut Vec<String>,
) -> Result<(), BoundsError> {
    let Some(llen) = ctx.local.loewy_length().finite() else {
        notes.push("J is not primary to the maximal ideal; comparison bounds do not apply".into());
        return Ok(());
    };
    let primary = Hypothesis::verified(format!(
        "J is primary to the maximal ideal ({} semantics)",
        ctx.local.semantics()
    ));
    bounds.push(bound(
        LOEWY_COMPARISON,
        loewy_comparison_bound(ctx.local.loewy_length())?,
        vec![primary.clone(), ctx.subideal_hypothesis.clone()],
        json!({ "loewy_length": llen }),
    ));

    let relations = ctx.r.relations();
    let (e, how) = match &ctx.config.reduction {
        Some(q) => {
            let q = Ideal::new(ctx.r.ring(), q.clone()).map_err(RingError::from)?;
            let m = multiplicity_via_reduction(relations, j, &q, true, &ctx.config.multiplicity)
                .map_err(RingError::from)?;
            (
                m.value,
                format!(
                    "reduction {q} with J^{} = Q J^{}",
                    m.reduction_exponent + 1,
                    m.reduction_exponent
                ),
            )
        }
        None => {
            let m = hilbert_samuel_multiplicity(relations, j, &ctx.config.multiplicity)
                .map_err(RingError::from)?;
            (m.value, "Hilbert-Samuel function".to_string())
        }
    };
    bounds.push(bound(
        MULTIPLICITY_COMPARISON,
        multiplicity_comparison_bound(e)?,
        vec![
            primary,
            Hypothesis::verified("R is a complete intersection, hence Cohen-Macaulay"),
            Hypothesis::verified(format!("e(J) = {e} via {how}")),
            ctx.subideal_hypothesis.clone(),
        ],
        json!({ "multiplicity": e }),
    ));
    Ok(())
}

/// The two-term curves `x^3 ± y^b` with `b ≥ 6`, where the bound 1 is known
/// to be attained.
fn annotations(r: &RingPresentation) -> Vec<Annotation> {
    let Some(f) = r.hypersurface() else {
        return vec![];
    };
    if r.ring().nvars() != 2 || f.len() != 2 {
        return vec![];
    }
    let mut exps: Vec<(usize, u32)> = Vec::new();
    for (m, _) in f.terms() {
        let mut s = m.support();
        let (Some(i), None) = (s.next(), s.next()) else {
            return vec![];
        };
        exps.push((i, m.exps()[i]));
    }
    if exps[0].0 == exps[1].0 {
        return vec![];
    }
    let (a, b) = (exps[0].1.min(exps[1].1), exps[0].1.max(exps[1].1));
    if a == 3 && b >= 6 {
        vec![Annotation {
            statement: format!(
                "known value: dim D_sg(R) = 1 for x^3 - y^b with b = {b} >= 6 (infinite CM type plus a lower bound); not computed here"
            ),
            known_value: 1,
            computed: false,
        }]
    } else {
        vec![]
    }
}

/// Evaluates every applicable bound for `R` against `J = jac R`.
pub fn best_bound_report(
    r: &RingPresentation,
    config: &BoundsConfig,
) -> Result<BoundReport, BoundsError> {
    let mut notes = Vec::new();
    let regular = dsg_dimension_lookup(r, &[])? == DsgDimension::Regular;
    if regular {
        notes.push("D_sg = 0: the local ring is regular".into());
        return Ok(BoundReport {
            ring: r.to_string(),
            semantics: r.semantics(),
            subideal: None,
            candidates: vec![],
            bounds: vec![],
            best: Some(Best {
                name: "regular".into(),
                value: 0,
            }),
            annotations: vec![],
            notes,
        });
    }

    let j = CertifiedSubideal::jacobian(r, config.jacobian_hypotheses_asserted)?;
    let local = r.local(j.ideal())?;
    let subideal_hypothesis = {
        let s = format!(
            "J = {} lies in ann D_sg(R): {}",
            j.ideal(),
            j.justification()
        );
        match j.justification() {
            Justification::Certificates(_) => Hypothesis::verified(s),
            _ => Hypothesis::asserted(s),
        }
    };
    let semantics = r.semantics().combine(local.semantics());
    let ctx = Context {
        r,
        local,
        subideal_hypothesis,
        config,
    };

    let evaluated: Vec<Evaluated> = candidates(r.ring(), config)
        .par_iter()
        .map(|x| evaluate(&ctx, x))
        .collect::<Result<_, _>>()?;

    let mut bounds = Vec::new();
    leading_power(&ctx, &mut bounds)?;
    single_element_bounds(&ctx, &evaluated, &mut bounds)?;
    regular_sequence_bounds(&ctx, &evaluated, &mut bounds)?;
    comparison_bounds(&ctx, j.ideal(), &mut bounds, &mut notes)?;

    let best = bounds
        .iter()
        .enumerate()
        .min_by_key(|(i, b)| (b.value, b.asserted_count(), *i))
        .map(|(_, b)| Best {
            name: b.name.clone(),
            value: b.value,
        });
    if best.is_none() {
        notes.push("no applicable bound: every quotient dimension is unknown or no power of a candidate lies in J".into());
    }
    notes.push(format!(
        "candidates are limited to {} monomials of degree <= {}; the best value bounds the infimum over all nonzerodivisors from above",
        evaluated.len(),
        config.degree_cap
    ));

    Ok(BoundReport {
        ring: r.to_string(),
        semantics,
        subideal: Some(Subideal {
            generators: j
                .ideal()
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect(),
            justification: j.justification().clone(),
        }),
        candidates: evaluated.into_iter().map(|e| e.candidate).collect(),
        bounds,
        best,
        annotations: annotations(r),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(s: &str, degree_cap: u32) -> BoundReport {
        let r = RingPresentation::parse(s).unwrap();
        best_bound_report(
            &r,
            &BoundsConfig {
                degree_cap,
                ..Default::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn curve_example() {
        let rep = report("QQ[x,y]/(x^4 - y^5)", 4);
        let value = |n: &str| rep.bound(n).map(|b| b.value);
        assert_eq!(value(LEADING_POWER), Some(2));
        assert_eq!(value(LOEWY_COMPARISON), Some(11));
        assert_eq!(value(MULTIPLICITY_COMPARISON), Some(14));
        assert_eq!(value(ANNIHILATOR_EXPONENT), Some(2));
        let best = rep.best.unwrap();
        assert_eq!((best.name.as_str(), best.value), (LEADING_POWER, 2));
        assert!(rep.annotations.is_empty());
        let x = &rep.candidates[0];
        assert_eq!(
            (x.element.as_str(), x.alpha, x.quotient_dimension),
            ("x", Some(3), Some(0))
        );
    }

    #[test]
    fn four_variable_example() {
        let rep = report("QQ[x,y,z,w]/(x^3 + y^3 + x*y*z + w^2)", 4);
        let b = rep.bound(REGULAR_SEQUENCE).unwrap();
        assert_eq!(b.value, 11);
        assert_eq!(b.inputs["m"], json!([3, 3]));
        assert_eq!(b.inputs["a"], json!([1, 1]));
        assert_eq!(b.inputs["d"], json!(1));
        assert!(rep.bound(LOEWY_COMPARISON).is_none());
    }

    #[test]
    fn regular_and_annotated_rings() {
        let rep = report("QQ[x]/()", 2);
        assert_eq!(rep.best.unwrap().value, 0);
        assert!(rep.notes[0].contains("D_sg = 0"));
        let rep = report("QQ[x,y]/(x + y^2)", 2);
        assert_eq!(rep.best.unwrap().value, 0);

        let rep = report("QQ[x,y]/(x^3 - y^7)", 1);
        assert_eq!(rep.annotations.len(), 1);
        assert!(!rep.annotations[0].computed);
        assert_eq!(rep.bound(LEADING_POWER).unwrap().value, 1);
    }
}
