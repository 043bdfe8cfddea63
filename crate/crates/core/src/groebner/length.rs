//! Colength counting, dimension, and the local (m-adic) view of an ideal.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{GroebnerError, PolyError};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

use super::{
    buchberger, buchberger_certifying, ideal_equal, ideal_quotient, quasi_homogeneous_weights,
    GroebnerBasis, Ideal, MembershipCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Length::Finite(n) => s.serialize_u64(*n),
            Length::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// How a membership or length answer relates to the local ring at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    /// Quasi-homogeneous input: polynomial and local answers coincide.
    GradedExact,
    /// Every point of the zero set is the origin, so again they coincide.
    LocalExact,
    /// Decided modulo `m^N`, which lies in the ideal after localizing.
    Truncated(u32),
    /// Global polynomial answer; a `true` membership is valid locally,
    /// a `false` one may not be.
    Polynomial,
}

impl Semantics {
    /// The weaker of two tags.
    pub fn combine(self, other: Semantics) -> Semantics {
        self.max(other)
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Semantics::GradedExact => write!(f, "graded-exact"),
            Semantics::LocalExact => write!(f, "local-exact"),
            Semantics::Truncated(n) => write!(f, "truncated({n})"),
            Semantics::Polynomial => write!(f, "polynomial"),
        }
    }
}

impl Serialize for Semantics {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn in_lead_ideal(m: &[u32], leads: &[Monomial]) -> bool {
    leads
        .iter()
        .any(|l| l.exps().iter().zip(m).all(|(a, b)| a <= b))
}

/// Number of monomials outside the monomial ideal generated by `leads`.
pub(crate) fn count_standard(leads: &[Monomial], nvars: usize) -> Length {
    if leads.iter().any(|l| l.is_one()) {
        return Length::Finite(0);
    }
    for i in 0..nvars {
        let pure = leads
            .iter()
            .any(|l| l.exps()[i] > 0 && l.support().all(|j| j == i));
        if !pure {
            return Length::Infinite;
        }
    }
    fn go(i: usize, cur: &mut Vec<u32>, leads: &[Monomial]) -> u64 {
        if i == cur.len() {
            return 1;
        }
        let mut total = 0;
        loop {
            if in_lead_ideal(cur, leads) {
                break;
            }
            total += go(i + 1, cur, leads);
            cur[i] += 1;
        }
        cur[i] = 0;
        total
    }
    Length::Finite(go(0, &mut vec![0; nvars], leads))
}

/// `dim_k S/I`: the number of standard monomials.
pub fn quotient_length(ideal: &Ideal) -> Length {
    let gb = buchberger(ideal, ideal.ring().order());
    count_standard(&gb.leading_monomials(), ideal.ring().nvars())
}

/// Krull dimension of `S/I`: the largest set of variables containing the
/// support of no leading monomial.
pub fn krull_dimension(ideal: &Ideal) -> Result<usize, GroebnerError> {
    let gb = buchberger(ideal, &MonomialOrder::grevlex());
    if gb.is_unit() {
        return Err(GroebnerError::UnitIdeal);
    }
    Ok(dimension_from_leads(
        &gb.leading_monomials(),
        ideal.ring().nvars(),
    ))
}

pub(crate) fn dimension_from_leads(leads: &[Monomial], n: usize) -> usize {
    let masks: Vec<u64> = leads
        .iter()
        .map(|l| l.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & !set != 0) {
            best = size;
        }
    }
    best
}

/// `I : x_i^∞`.
pub fn saturation_by_variable(ideal: &Ideal, var: usize) -> Result<Ideal, GroebnerError> {
    let x = Polynomial::var(ideal.ring(), var);
    let mut cur = ideal.clone();
    loop {
        let next = ideal_quotient(&cur, &x)?;
        if ideal_equal(&next, &cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// True when the origin is an isolated point of the zero set (or not on it
/// at all), i.e. the ideal becomes primary to the maximal ideal after
/// localizing at the origin.
pub fn is_locally_m_primary(ideal: &Ideal) -> Result<bool, GroebnerError> {
    if !ideal.is_in_maximal() || quotient_length(ideal).is_finite() {
        return Ok(true);
    }
    // the closure of V(I) minus the origin is the union of the V(I : x_i^∞)
    for i in 0..ideal.ring().nvars() {
        if saturation_by_variable(ideal, i)?.is_in_maximal() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First `N` with `ℓ(S/(I + m^N)) = ℓ(S/(I + m^(N+1)))`, together with that
/// length. Requires `I ⊆ m` and `I` locally m-primary, otherwise it never stops.
fn stabilize(basis: &GroebnerBasis) -> (u32, u64) {
    let ring = basis.ring();
    let order = ring.order().clone();
    let with_power = |n: u32| {
        let mut gens = basis.basis().to_vec();
        gens.extend(Ideal::maximal_power(ring, n).generators().iter().cloned());
        let i = Ideal::new(ring, gens).expect("same ring");
        let gb = buchberger(&i, &order);
        count_standard(&gb.leading_monomials(), ring.nvars())
            .finite()
            .expect("m-primary after truncation")
    };
    let mut n = 1;
    let mut prev = with_power(1);
    loop {
        let next = with_power(n + 1);
        if next == prev {
            return (n, prev);
        }
        prev = next;
        n += 1;
    }
}

/// An ideal viewed in the localization of `S` at the origin.
///
/// Membership is decided in a *decision ideal*: the ideal itself when that is
/// exact, or `I + m^N` once `m^N ⊆ I` is known locally.
#[derive(Debug)]
pub struct LocalIdeal {
    ideal: Ideal,
    decision: Ideal,
    basis: GroebnerBasis,
    certifying: OnceLock<GroebnerBasis>,
    semantics: Semantics,
    length: Length,
    loewy: Length,
}

impl LocalIdeal {
    pub fn new(ideal: &Ideal) -> Result<Self, GroebnerError> {
        let ring = ideal.ring().clone();
        let order = MonomialOrder::grevlex();
        let make = |decision: Ideal, semantics, length, loewy| {
            let basis = buchberger(&decision, &order);
            LocalIdeal {
                ideal: ideal.clone(),
                decision,
                basis,
                certifying: OnceLock::new(),
                semantics,
                length,
                loewy,
            }
        };
        if !ideal.is_in_maximal() {
            let unit = Ideal::unit(&ring);
            return Ok(make(
                unit,
                Semantics::LocalExact,
                Length::Finite(0),
                Length::Finite(0),
            ));
        }
        let gb = buchberger(ideal, &order);
        let global = count_standard(&gb.leading_monomials(), ring.nvars());
        let graded = quasi_homogeneous_weights(ideal.generators()).is_some() || ideal.is_zero();
        if graded {
            let loewy = match global {
                Length::Finite(_) => Length::Finite(stabilize(&gb).0 as u64),
                Length::Infinite => Length::Infinite,
            };
            return Ok(make(ideal.clone(), Semantics::GradedExact, global, loewy));
        }
        if global.is_finite() || is_locally_m_primary(ideal)? {
            let (n, len) = stabilize(&gb);
            let (decision, semantics) = if Length::Finite(len) == global {
                (ideal.clone(), Semantics::LocalExact)
            } else {
                let trunc = ideal.sum(&Ideal::maximal_power(&ring, n))?;
                (trunc, Semantics::Truncated(n))
            };
            return Ok(make(
                decision,
                semantics,
                Length::Finite(len),
                Length::Finite(n as u64),
            ));
        }
        Ok(make(
            ideal.clone(),
            Semantics::Polynomial,
            Length::Infinite,
            Length::Infinite,
        ))
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The ideal membership is actually decided in.
    pub fn decision_ideal(&self) -> &Ideal {
        &self.decision
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    /// Length of the local quotient ring.
    pub fn length(&self) -> Length {
        self.length
    }

    /// Least `n` with `m^n` inside the ideal locally.
    pub fn loewy_length(&self) -> Length {
        self.loewy
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        self.basis.contains(f)
    }

    /// Membership certificate over the generators of [`Self::decision_ideal`].
    pub fn certify(&self, f: &Polynomial) -> Result<Option<MembershipCertificate>, PolyError> {
        let gb = self
            .certifying
            .get_or_init(|| buchberger_certifying(&self.decision, &MonomialOrder::grevlex()));
        let cert = gb.certify(f)?;
        if let Some(c) = &cert {
            assert!(
                c.verify(self.decision.generators()),
                "certificate re-expansion"
            );
        }
        Ok(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial_list;
    use crate::poly::PolyRing;
    use std::sync::Arc;

    fn ideal(ring: &Arc<PolyRing>, s: &str) -> Ideal {
        Ideal::new(ring, parse_polynomial_list(s, ring).unwrap()).unwrap()
    }

    #[test]
    fn lengths() {
        let r = PolyRing::rational(&["x", "y"]);
        assert_eq!(quotient_length(&ideal(&r, "x^3, y^5")), Length::Finite(15));
        assert_eq!(quotient_length(&ideal(&r, "x, y")), Length::Finite(1));
        assert_eq!(quotient_length(&ideal(&r, "x")), Length::Infinite);
        assert_eq!(quotient_length(&ideal(&r, "1")), Length::Finite(0));
    }

    #[test]
    fn dimensions() {
        let r = PolyRing::rational(&["x", "y"]);
        assert_eq!(krull_dimension(&ideal(&r, "x^4 - y^5")).unwrap(), 1);
        assert_eq!(krull_dimension(&Ideal::zero(&r)).unwrap(), 2);
        assert_eq!(krull_dimension(&ideal(&r, "x, y")).unwrap(), 0);
        assert_eq!(
            krull_dimension(&ideal(&r, "x + 1, x")).unwrap_err(),
            GroebnerError::UnitIdeal
        );
    }

    #[test]
    fn graded_loewy() {
        let r = PolyRing::rational(&["x", "y"]);
        let l = LocalIdeal::new(&ideal(&r, "x^3, y^4, x^4 - y^5")).unwrap();
        assert_eq!(l.semantics(), Semantics::GradedExact);
        assert_eq!(l.loewy_length(), Length::Finite(6));
        assert_eq!(l.length(), Length::Finite(12));
    }

    #[test]
    fn non_graded_truncates() {
        // x^2 (1 - x): locally the same as (x^2), globally one extra point
        let r = PolyRing::rational(&["x"]);
        let l = LocalIdeal::new(&ideal(&r, "x^2 - x^3")).unwrap();
        assert_eq!(l.semantics(), Semantics::Truncated(2));
        assert_eq!(l.length(), Length::Finite(2));
        assert!(l.contains(&Polynomial::var(&r, 0).pow(2)).unwrap());
        let cert = l.certify(&Polynomial::var(&r, 0).pow(2)).unwrap().unwrap();
        assert!(cert.verify(l.decision_ideal().generators()));
    }

    #[test]
    fn isolated_origin_with_global_curve() {
        // V = {y = 1} ∪ {origin}
        let r = PolyRing::rational(&["x", "y"]);
        let i = ideal(&r, "x*y - x, y^2 - y");
        assert!(is_locally_m_primary(&i).unwrap());
        let l = LocalIdeal::new(&i).unwrap();
        assert_eq!(l.length(), Length::Finite(1));

        let curve = ideal(&r, "x*y - x^3 + y^2");
        assert!(!is_locally_m_primary(&curve).unwrap());
    }

    #[test]
    fn unit_locally() {
        let r = PolyRing::rational(&["x"]);
        let l = LocalIdeal::new(&ideal(&r, "x - 1")).unwrap();
        assert_eq!(l.length(), Length::Finite(0));
        assert_eq!(l.loewy_length(), Length::Finite(0));
    }
}
