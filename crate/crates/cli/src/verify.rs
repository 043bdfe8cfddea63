//! `verify all`: regression checks over the worked examples.

use serde_json::{json, Value};

use sgdim_core::bounds::{best_bound_report, leading_power_bound, BoundsConfig};
use sgdim_core::groebner::{
    hilbert_samuel_multiplicity, ideal_equal, ideal_member, multiplicity_via_reduction,
    MultiplicityConfig,
};
use sgdim_core::mf::{
    is_nullhomotopic, split_product_triangle, verify_koszul_binomial, verify_koszul_split,
    MFMorphism, MatrixFactorization,
};
use sgdim_core::ring::{
    alpha_exponent, dsg_dimension_lookup, is_regular_sequence, jacobian_ideal, loewy_length,
    quotient_ring, CertifiedSubideal, RingPresentation,
};
use sgdim_core::{parse_polynomial, parse_polynomial_list, Ideal, Length, Polynomial};

use crate::commands::{Report, EXIT_HYPOTHESIS};

type Check = Result<String, String>;
type Named = (&'static str, fn() -> Check);

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn ring(s: &str) -> Result<RingPresentation, String> {
    RingPresentation::parse(s).map_err(err)
}

fn polys(r: &RingPresentation, s: &str) -> Result<Vec<Polynomial>, String> {
    parse_polynomial_list(s, r.ring()).map_err(err)
}

fn ideal(r: &RingPresentation, s: &str) -> Result<Ideal, String> {
    Ideal::new(r.ring(), polys(r, s)?).map_err(err)
}

fn curve_invariants() -> Check {
    let r = ring("QQ[x,y]/(x^4 - y^5)")?;
    let j = jacobian_ideal(&r).map_err(err)?;
    let expected = ideal(&r, "x^3, y^4, x^4 - y^5")?;
    let same = ideal_equal(&j, &expected).map_err(err)?;
    let ll = loewy_length(&r, &j).map_err(err)?.value;
    let cfg = MultiplicityConfig::default();
    let hs = hilbert_samuel_multiplicity(r.relations(), &j, &cfg)
        .map_err(err)?
        .value;
    let q = ideal(&r, "x^3")?;
    let red = multiplicity_via_reduction(r.relations(), &j, &q, true, &cfg).map_err(err)?;
    ensure(
        same && ll == Length::Finite(6) && hs == 15 && red.value == 15 && red.reduction_exponent <= 3,
        format!(
            "J = (x^3, y^4): {same}; loewy {ll}; e(J) = {hs}; reduction (x^3) gives {} with exponent {}",
            red.value, red.reduction_exponent
        ),
    )
}

fn curve_bounds() -> Check {
    let r = ring("QQ[x,y]/(x^4 - y^5)")?;
    let rep = best_bound_report(&r, &BoundsConfig::default()).map_err(err)?;
    let value = |name: &str| rep.bound(name).map(|b| b.value);
    let lp = value("leading-power");
    let lw = value("loewy-comparison");
    let mu = value("multiplicity-comparison");
    let best = rep.best.as_ref().map(|b| b.value);
    ensure(
        lp == Some(2) && lw == Some(11) && mu == Some(14) && best == Some(2),
        format!("leading-power {lp:?}, loewy {lw:?}, multiplicity {mu:?}, best {best:?}"),
    )
}

fn four_variable() -> Check {
    let r = ring("QQ[x,y,z,w]/(x^3 + y^3 + x*y*z + w^2)")?;
    let j = jacobian_ideal(&r).map_err(err)?;
    let mut members = true;
    for p in polys(&r, "x^3, y^3, x*y")? {
        let (ok, cert) = ideal_member(&p, &j, true).map_err(err)?;
        members &= ok && cert.is_some_and(|c| c.verify(j.generators()));
    }
    let xy = polys(&r, "x, y")?;
    let regular = is_regular_sequence(&xy, &r).map_err(err)?;
    let q = quotient_ring(&r, &xy).map_err(err)?;
    let d = dsg_dimension_lookup(&q, &[]).map_err(err)?.value();
    let rep = best_bound_report(&r, &BoundsConfig::default()).map_err(err)?;
    let rs = rep.bound("regular-sequence").map(|b| b.value);
    ensure(
        members && regular && q.to_string() == "QQ[z,w]/(w^2)" && d == Some(1) && rs == Some(11),
        format!("members {members}; regular {regular}; quotient {q}; dimension {d:?}; regular-sequence bound {rs:?}"),
    )
}

fn leading_power_family() -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    for e in 2..=5u32 {
        let r = ring(&format!("QQ[x0,y]/(x0^{e} + y^3)"))?;
        let x = parse_polynomial("x0", r.ring()).map_err(err)?;
        let j = CertifiedSubideal::jacobian(&r, true).map_err(err)?;
        let alpha = alpha_exponent(&x, &j, &r, 24).map_err(err)?.exponent();
        let rep = best_bound_report(&r, &BoundsConfig::default()).map_err(err)?;
        let formula = leading_power_bound(e).map_err(err)?;
        let reported = rep.bound("leading-power").map(|b| b.value);
        ok &= alpha.is_some_and(|a| a < e)
            && formula == u64::from(e) - 2
            && reported.is_some_and(|v| v <= formula);
        parts.push(format!(
            "e={e}: alpha {alpha:?}, e-2 = {formula}, reported {reported:?}"
        ));
    }
    ensure(ok, parts.join("; "))
}

fn mf_suite() -> Check {
    let r = ring("QQ[x]/(x^3)")?;
    let p = |s: &str| parse_polynomial(s, r.ring()).map_err(err);
    let (f, x) = (p("x^3")?, p("x")?);
    let a = MatrixFactorization::rank_one(&f, &p("x^2")?, &x).map_err(err)?;
    let h = is_nullhomotopic(&sgdim_core::mf::mult_morphism(&a, &x)).map_err(err)?;
    let null = h.is_some();
    let split = verify_koszul_split(&a, &x)
        .map_err(err)?
        .certificate
        .verify();
    let tri = split_product_triangle(&a, &x, &x, true).map_err(err)?;
    let triangle = tri.check().is_ok() && tri.splitting.verify();
    let bin = verify_koszul_binomial(&a, &[x.clone(), x.clone()]).map_err(err)?;
    let ranks = bin.multiplicities.clone();
    ensure(
        null && split && triangle && ranks == [1, 2, 1] && bin.certificate.verify(),
        format!("x null-homotopic {null}; K(x) split {split}; product triangle {triangle}; binomial {ranks:?}"),
    )
}

fn negative_controls() -> Check {
    let r = ring("QQ[x]/(x^3)")?;
    let p = |s: &str| parse_polynomial(s, r.ring()).map_err(err);
    let b = MatrixFactorization::rank_one(&p("x^3")?, &p("x")?, &p("x^2")?).map_err(err)?;
    let id = is_nullhomotopic(&MFMorphism::identity(&b)).map_err(err)?;
    let s = ring("QQ[x,y]/()")?;
    let i = ideal(&s, "x^3, y^4, x^4 - y^5")?;
    let x2 = parse_polynomial("x^2", s.ring()).map_err(err)?;
    let (member, _) = ideal_member(&x2, &i, false).map_err(err)?;
    ensure(
        id.is_none() && !member,
        format!(
            "id null-homotopic {}; x^2 in (x^3, y^4, x^4 - y^5) {member}",
            id.is_some()
        ),
    )
}

fn annotation() -> Check {
    let r = ring("QQ[x,y]/(x^3 - y^6)")?;
    let rep = best_bound_report(&r, &BoundsConfig::default()).map_err(err)?;
    let n = rep
        .annotations
        .iter()
        .filter(|a| !a.computed && a.known_value == 1)
        .count();
    ensure(
        n == 1,
        format!("{n} knowledge-base annotation(s) with value 1"),
    )
}

pub fn run_all() -> Report {
    let checks: [Named; 7] = [
        ("curve-invariants", curve_invariants),
        ("curve-bounds", curve_bounds),
        ("four-variable", four_variable),
        ("leading-power-family", leading_power_family),
        ("mf-structure", mf_suite),
        ("negative-controls", negative_controls),
        ("annotation", annotation),
    ];
    let mut failed = 0;
    let results: Vec<Value> = checks
        .iter()
        .map(|(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            failed += usize::from(!passed);
            json!({ "name": name, "passed": passed, "detail": detail })
        })
        .collect();
    Report {
        command: "verify all".into(),
        status: if failed == 0 { 0 } else { EXIT_HYPOTHESIS },
        result: json!({ "checks": results, "failed": failed }),
    }
}
