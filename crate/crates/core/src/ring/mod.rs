//! Presentations `R = k[x_1..x_n]/(g_1..g_k)` viewed locally at the origin,
//! and the invariants of `R` used by the dimension bounds.

mod simple;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{GroebnerError, ParseError, RingError};
use crate::groebner::{
    ideal_equal, ideal_quotient, krull_dimension, quasi_homogeneous_weights, Ideal, Length,
    LocalIdeal, MembershipCertificate, Semantics,
};
use crate::parse::{parse_ring_spec, RingSpec};
use crate::poly::{PolyRing, Polynomial};

pub use simple::{lookup as simple_singularity_lookup, TableEntry};

#[derive(Clone, Debug)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    relations: Ideal,
}

impl RingPresentation {
    pub fn new(ring: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Self, RingError> {
        Ok(RingPresentation {
            ring: ring.clone(),
            relations: Ideal::new(ring, relations)?,
        })
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let RingSpec { ring, relations } = parse_ring_spec(text)?;
        Ok(RingPresentation {
            relations: Ideal::new(&ring, relations).expect("parsed in the same ring"),
            ring,
        })
    }

    /// The ambient polynomial ring `S`.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    /// The single relation `f` when `R = S/(f)`.
    pub fn hypersurface(&self) -> Option<&Polynomial> {
        match self.relations.generators() {
            [f] => Some(f),
            _ => None,
        }
    }

    pub fn is_hypersurface(&self) -> bool {
        self.hypersurface().is_some()
    }

    /// Tag describing how local questions about `R` are answered.
    pub fn semantics(&self) -> Semantics {
        if self.relations.is_zero()
            || quasi_homogeneous_weights(self.relations.generators()).is_some()
        {
            Semantics::GradedExact
        } else {
            Semantics::Polynomial
        }
    }

    pub fn krull_dimension(&self) -> Result<usize, RingError> {
        krull_dimension(&self.relations).map_err(|e| match e {
            GroebnerError::UnitIdeal => RingError::ZeroRing,
            e => e.into(),
        })
    }

    /// `J + relations` as seen in the local ring.
    pub fn local(&self, ideal: &Ideal) -> Result<LocalIdeal, RingError> {
        Ok(LocalIdeal::new(&self.relations.sum(ideal)?)?)
    }

    /// Units of the local ring are the elements not vanishing at the origin.
    pub fn is_unit(&self, x: &Polynomial) -> bool {
        !x.constant_term().is_zero()
    }

    pub fn ideal(&self, generators: Vec<Polynomial>) -> Result<Ideal, RingError> {
        Ok(Ideal::new(&self.ring, generators)?)
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ring, self.relations)
    }
}

impl Serialize for RingPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn determinant(m: &[Vec<Polynomial>], ring: &Arc<PolyRing>) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Polynomial::zero(ring);
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(&minor, ring);
                acc = if col % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Jacobian ideal: the `h × h` minors of the Jacobian matrix of the
/// relations, `h` the height of the relation ideal, together with the
/// relations themselves. Only complete intersections (`h` relations) are
/// accepted.
pub fn jacobian_ideal(r: &RingPresentation) -> Result<Ideal, RingError> {
    let rels = r.relations().generators();
    if rels.is_empty() {
        return Err(RingError::NoRelations);
    }
    let n = r.ring().nvars();
    let h = n - r.krull_dimension()?;
    if h != rels.len() {
        return Err(RingError::Height(format!(
            "relation ideal has height {h} but {} generators; only complete intersections are supported",
            rels.len()
        )));
    }
    let jac: Vec<Vec<Polynomial>> = rels
        .iter()
        .map(|g| {
            (0..n)
                .map(|j| g.partial_derivative(j))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut gens = Vec::new();
    for rows in subsets(rels.len(), h) {
        for cols in subsets(n, h) {
            let m: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| jac[i][j].clone()).collect())
                .collect();
            let d = determinant(&m, r.ring());
            if !d.is_zero() && !gens.contains(&d) {
                gens.push(d);
            }
        }
    }
    gens.extend(rels.iter().cloned());
    r.ideal(gens)
}

/// Why a subideal of the cohomology annihilator is trusted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "detail")]
pub enum Justification {
    /// Jacobian ideal, with the user asserting the setting in which the
    /// Jacobian ideal annihilates the singularity category.
    Jacobian,
    /// Taken on the user's word.
    UserAsserted,
    /// Each generator was checked to annihilate the listed objects.
    Certificates(Vec<String>),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Jacobian => {
                write!(f, "jacobian ideal (annihilation hypotheses asserted)")
            }
            Justification::UserAsserted => write!(f, "user-asserted"),
            Justification::Certificates(c) => {
                write!(f, "stable-annihilation certificates: {}", c.join("; "))
            }
        }
    }
}

/// An ideal taken to lie inside the annihilator of the singularity category,
/// together with the reason.
#[derive(Clone, Debug)]
pub struct CertifiedSubideal {
    ideal: Ideal,
    justification: Justification,
}

impl CertifiedSubideal {
    pub fn new(ideal: Ideal, justification: Justification) -> Self {
        CertifiedSubideal {
            ideal,
            justification,
        }
    }

    /// The Jacobian ideal. Without `hypotheses_asserted` the justification
    /// is downgraded to [`Justification::UserAsserted`].
    pub fn jacobian(r: &RingPresentation, hypotheses_asserted: bool) -> Result<Self, RingError> {
        Ok(CertifiedSubideal {
            ideal: jacobian_ideal(r)?,
            justification: if hypotheses_asserted {
                Justification::Jacobian
            } else {
                Justification::UserAsserted
            },
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn justification(&self) -> &Justification {
        &self.justification
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alpha {
    /// Least `n` with `x^n` in the subideal, with a certificate over the
    /// generators of the local decision ideal.
    Found {
        exponent: u32,
        certificate: MembershipCertificate,
        generators: Vec<Polynomial>,
        semantics: Semantics,
    },
    NotFound {
        cap: u32,
    },
}

impl Alpha {
    pub fn exponent(&self) -> Option<u32> {
        match self {
            Alpha::Found { exponent, .. } => Some(*exponent),
            Alpha::NotFound { .. } => None,
        }
    }
}

/// Least `n ≤ cap` with `x^n ∈ J + relations` in the local ring.
pub fn alpha_exponent(
    x: &Polynomial,
    j: &CertifiedSubideal,
    r: &RingPresentation,
    cap: u32,
) -> Result<Alpha, RingError> {
    let x = x.in_ring(r.ring())?;
    if r.is_unit(&x) {
        return Err(RingError::Unit(x.to_string()));
    }
    let local = r.local(j.ideal())?;
    let mut power = x.clone();
    for n in 1..=cap {
        if local.contains(&power)? {
            let certificate = local.certify(&power)?.expect("member has a certificate");
            return Ok(Alpha::Found {
                exponent: n,
                certificate,
                generators: local.decision_ideal().generators().to_vec(),
                semantics: local.semantics(),
            });
        }
        power = &power * &x;
    }
    Ok(Alpha::NotFound { cap })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LoewyLength {
    pub value: Length,
    pub semantics: Semantics,
}

/// Loewy length of the local ring `R/J`.
pub fn loewy_length(r: &RingPresentation, j: &Ideal) -> Result<LoewyLength, RingError> {
    let local = r.local(j)?;
    Ok(LoewyLength {
        value: local.loewy_length(),
        semantics: local.semantics(),
    })
}

/// `x` is a nonzerodivisor on `S/relations`, i.e. `(relations : x) =
/// relations`. Zero is reported as a zerodivisor.
pub fn is_nonzerodivisor(x: &Polynomial, r: &RingPresentation) -> Result<bool, RingError> {
    nonzerodivisor_mod(x, r.relations())
}

fn nonzerodivisor_mod(x: &Polynomial, ideal: &Ideal) -> Result<bool, RingError> {
    if x.is_zero() {
        return Ok(false);
    }
    let q = ideal_quotient(ideal, x)?;
    Ok(ideal_equal(&q, ideal)?)
}

/// Each element is a nonzerodivisor modulo the previous ones and the final
/// quotient is nonzero locally.
pub fn is_regular_sequence(xs: &[Polynomial], r: &RingPresentation) -> Result<bool, RingError> {
    let mut cur = r.relations().clone();
    for x in xs {
        let x = x.in_ring(r.ring())?;
        if r.is_unit(&x) || !nonzerodivisor_mod(&x, &cur)? {
            return Ok(false);
        }
        cur = cur.with_generators(&[x])?;
    }
    Ok(cur.is_in_maximal())
}

/// `R/(xs)`, eliminating variables that appear linearly as scaled
/// variables among the new relations.
pub fn quotient_ring(
    r: &RingPresentation,
    xs: &[Polynomial],
) -> Result<RingPresentation, RingError> {
    let mut ring = r.ring().clone();
    let mut rels: Vec<Polynomial> = r.relations().generators().to_vec();
    for x in xs {
        rels.push(x.in_ring(&ring)?);
    }
    if rels.iter().any(|g| !g.constant_term().is_zero()) {
        return Err(RingError::ZeroRing);
    }
    while let Some(pos) = rels.iter().position(|g| g.as_scaled_variable().is_some()) {
        let v = rels[pos].as_scaled_variable().expect("checked");
        rels.remove(pos);
        let vars: Vec<String> = ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != v)
            .map(|(_, s)| s.clone())
            .collect();
        let smaller = PolyRing::new(ring.field(), vars)?;
        let mut next = Vec::new();
        for g in &rels {
            let g = g.substitute_zero(v);
            if !g.is_zero() {
                let g = g.restrict_to(&smaller)?;
                if !next.contains(&g) {
                    next.push(g);
                }
            }
        }
        ring = smaller;
        rels = next;
    }
    RingPresentation::new(&ring, rels)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "source")]
pub enum DsgDimension {
    /// The local ring is regular, so the category is zero; its dimension is
    /// reported as 0 (some authors use −∞ instead).
    Regular,
    Table {
        entry: TableEntry,
        value: u32,
    },
    UserAsserted {
        value: u32,
    },
    Unknown,
}

impl DsgDimension {
    pub fn value(&self) -> Option<u32> {
        match self {
            DsgDimension::Regular => Some(0),
            DsgDimension::Table { value, .. } | DsgDimension::UserAsserted { value } => {
                Some(*value)
            }
            DsgDimension::Unknown => None,
        }
    }
}

/// A user-supplied value for the singularity-category dimension of a ring.
#[derive(Clone, Debug)]
pub struct DsgAssertion {
    pub ring: RingPresentation,
    pub value: u32,
}

/// Dimension of the singularity category of `R` from the simple-singularity
/// table or from matching user assertions; never guessed.
pub fn dsg_dimension_lookup(
    r: &RingPresentation,
    assertions: &[DsgAssertion],
) -> Result<DsgDimension, RingError> {
    for a in assertions {
        if a.ring.ring().same_ambient(r.ring()) && ideal_equal(a.ring.relations(), r.relations())? {
            return Ok(DsgDimension::UserAsserted { value: a.value });
        }
    }
    if r.relations().is_zero() {
        return Ok(DsgDimension::Regular);
    }
    let Some(f) = r.hypersurface() else {
        return Ok(DsgDimension::Unknown);
    };
    if !f.constant_term().is_zero() {
        return Err(RingError::ZeroRing);
    }
    // a relation with a nonzero linear part cuts out a smooth germ
    if f.terms().iter().any(|(m, _)| m.degree() == 1) {
        return Ok(DsgDimension::Regular);
    }
    Ok(match simple::lookup(f) {
        Some(entry) => DsgDimension::Table {
            value: entry.dimension(),
            entry,
        },
        None => DsgDimension::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_polynomial_list};

    fn ring(s: &str) -> RingPresentation {
        RingPresentation::parse(s).unwrap()
    }

    fn p(r: &RingPresentation, s: &str) -> Polynomial {
        parse_polynomial(s, r.ring()).unwrap()
    }

    fn ideal(r: &RingPresentation, s: &str) -> Ideal {
        r.ideal(parse_polynomial_list(s, r.ring()).unwrap())
            .unwrap()
    }

    #[test]
    fn jacobian_of_curve() {
        let r = ring("QQ[x,y]/(x^4 - y^5)");
        let j = jacobian_ideal(&r).unwrap();
        assert!(ideal_equal(&j, &ideal(&r, "x^3, y^4")).unwrap());
    }

    #[test]
    fn jacobian_of_surface() {
        let r = ring("QQ[x,y,z,w]/(x^3 + y^3 + x*y*z + w^2)");
        let j = jacobian_ideal(&r).unwrap();
        let expected = ideal(
            &r,
            "3*x^2 + y*z, 3*y^2 + x*z, x*y, 2*w, x^3 + y^3 + x*y*z + w^2",
        );
        assert!(ideal_equal(&j, &expected).unwrap());
        assert_eq!(j.generators().len(), 5);
    }

    #[test]
    fn jacobian_of_smooth_point_and_errors() {
        let r = ring("QQ[x]/(x)");
        assert!(ideal_equal(&jacobian_ideal(&r).unwrap(), &ideal(&r, "1")).unwrap());
        assert_eq!(
            jacobian_ideal(&ring("QQ[x]")).unwrap_err(),
            RingError::NoRelations
        );
        assert!(matches!(
            jacobian_ideal(&ring("QQ[x,y]/(x^2, x*y)")).unwrap_err(),
            RingError::Height(_)
        ));
    }

    #[test]
    fn complete_intersection_minors() {
        let r = ring("QQ[x,y,z]/(x^2 - y*z, y^2 - x*z)");
        let j = jacobian_ideal(&r).unwrap();
        assert!(j.generators().len() >= 3);
    }

    #[test]
    fn alpha_of_curve() {
        let r = ring("QQ[x,y]/(x^4 - y^5)");
        let j = CertifiedSubideal::new(ideal(&r, "x^3, y^4"), Justification::UserAsserted);
        let a = alpha_exponent(&p(&r, "x"), &j, &r, 10).unwrap();
        assert_eq!(a.exponent(), Some(3));
        if let Alpha::Found {
            certificate,
            generators,
            ..
        } = &a
        {
            assert!(certificate.verify(generators));
        }
        assert_eq!(
            alpha_exponent(&p(&r, "x^3"), &j, &r, 10)
                .unwrap()
                .exponent(),
            Some(1)
        );
        assert!(matches!(
            alpha_exponent(&p(&r, "1 + x"), &j, &r, 10),
            Err(RingError::Unit(_))
        ));
        let none = CertifiedSubideal::new(ideal(&r, "x^4 - y^5"), Justification::UserAsserted);
        assert_eq!(
            alpha_exponent(&p(&r, "x"), &none, &r, 4).unwrap(),
            Alpha::NotFound { cap: 4 }
        );
    }

    #[test]
    fn loewy() {
        let r = ring("QQ[x,y]/(x^4 - y^5)");
        let l = loewy_length(&r, &ideal(&r, "x^3, y^4")).unwrap();
        assert_eq!(l.value, Length::Finite(6));
        assert_eq!(
            loewy_length(&r, &ideal(&r, "x, y")).unwrap().value,
            Length::Finite(1)
        );
        assert_eq!(
            loewy_length(&r, &ideal(&r, "1")).unwrap().value,
            Length::Finite(0)
        );
        assert_eq!(
            loewy_length(&r, &ideal(&r, "x")).unwrap().value,
            Length::Finite(5)
        );
        assert_eq!(
            loewy_length(&r, &Ideal::zero(r.ring())).unwrap().value,
            Length::Infinite
        );
    }

    #[test]
    fn zerodivisors_and_sequences() {
        let r = ring("QQ[x,y,z,w]/(x^3 + y^3 + x*y*z + w^2)");
        assert!(is_nonzerodivisor(&p(&r, "x"), &r).unwrap());
        assert!(is_regular_sequence(&[p(&r, "x"), p(&r, "y")], &r).unwrap());
        assert!(!is_regular_sequence(&[p(&r, "x"), p(&r, "x")], &r).unwrap());

        let c = ring("QQ[x,y]/(x*y)");
        assert!(!is_nonzerodivisor(&p(&c, "x"), &c).unwrap());
        assert!(!is_regular_sequence(&[p(&c, "x"), p(&c, "y")], &c).unwrap());
        assert!(!is_nonzerodivisor(&p(&c, "0"), &c).unwrap());
        assert!(c.is_unit(&p(&c, "1")));
    }

    #[test]
    fn quotients() {
        let r = ring("QQ[x,y,z,w]/(x^3 + y^3 + x*y*z + w^2)");
        let q = quotient_ring(&r, &[p(&r, "x"), p(&r, "y")]).unwrap();
        assert_eq!(q.to_string(), "QQ[z,w]/(w^2)");
        let c = ring("QQ[x,y]/(x^3 + y^3)");
        assert_eq!(
            quotient_ring(&c, &[p(&c, "x")]).unwrap().to_string(),
            "QQ[y]/(y^3)"
        );
        assert_eq!(quotient_ring(&c, &[]).unwrap().to_string(), c.to_string());
        assert_eq!(
            quotient_ring(&c, &[p(&c, "x + 1")]).unwrap_err(),
            RingError::ZeroRing
        );
    }

    #[test]
    fn dsg_lookup() {
        let none: &[DsgAssertion] = &[];
        let q = ring("QQ[z,w]/(w^2)");
        assert_eq!(dsg_dimension_lookup(&q, none).unwrap().value(), Some(1));
        let a = ring("QQ[y]/(y^5)");
        assert_eq!(dsg_dimension_lookup(&a, none).unwrap().value(), Some(0));
        assert_eq!(
            dsg_dimension_lookup(&ring("QQ[x,y]"), none).unwrap(),
            DsgDimension::Regular
        );
        let unknown = ring("QQ[x,y]/(x^3 + y^7)");
        assert_eq!(
            dsg_dimension_lookup(&unknown, none).unwrap(),
            DsgDimension::Unknown
        );
        let asserted = [DsgAssertion {
            ring: ring("QQ[x,y]/(x^3 + y^7)"),
            value: 1,
        }];
        assert_eq!(
            dsg_dimension_lookup(&unknown, &asserted).unwrap().value(),
            Some(1)
        );
    }
}
