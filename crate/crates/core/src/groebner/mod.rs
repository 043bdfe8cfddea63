//! Reduced Groebner bases and the decision procedures built on them.

mod engine;
mod length;
mod module;
mod multiplicity;
mod weights;

use std::fmt;
use std::sync::Arc;

use crate::error::{GroebnerError, PolyError};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

use engine::{Elem, Engine, Vector};

pub use length::{
    is_locally_m_primary, krull_dimension, quotient_length, saturation_by_variable, Length,
    LocalIdeal, Semantics,
};
pub use module::{module_groebner, module_member, ModuleGB};
pub use multiplicity::{
    hilbert_samuel_multiplicity, multiplicity_via_reduction, Multiplicity, MultiplicityConfig,
    ReductionMultiplicity,
};
pub use weights::quasi_homogeneous_weights;

/// A finitely generated ideal of a polynomial ring. Zero generators are
/// dropped on construction.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.in_ring(ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: vec![Polynomial::one(ring)],
        }
    }

    /// The ideal of the origin, generated by all variables.
    pub fn maximal(ring: &Arc<PolyRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: (0..ring.nvars())
                .map(|i| Polynomial::var(ring, i))
                .collect(),
        }
    }

    /// `m^n`, generated by all monomials of degree `n`.
    pub fn maximal_power(ring: &Arc<PolyRing>, n: u32) -> Self {
        let one = ring.field().one();
        let generators = monomials_of_degree(ring.nvars(), n)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, one.clone()))
            .collect();
        Ideal {
            ring: ring.clone(),
            generators,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// All generators vanish at the origin.
    pub fn is_in_maximal(&self) -> bool {
        self.generators.iter().all(|g| g.constant_term().is_zero())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal, PolyError> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                let p = a.checked_mul(b)?;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn monomials_of_degree(nvars: usize, n: u32) -> Vec<Monomial> {
    fn go(acc: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
        if i + 1 == cur.len() {
            cur[i] = left;
            acc.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(acc, cur, i + 1, left - e);
        }
        cur[i] = 0;
    }
    let mut acc = Vec::new();
    if nvars == 0 {
        if n == 0 {
            acc.push(Monomial::one(0));
        }
        return acc;
    }
    go(&mut acc, &mut vec![0; nvars], 0, n);
    acc
}

/// `sum_i coefficient_i * generator_i = element`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub element: Polynomial,
    pub combination: Vec<(Polynomial, usize)>,
}

impl MembershipCertificate {
    pub fn expand(&self, generators: &[Polynomial]) -> Result<Polynomial, PolyError> {
        let mut acc = Polynomial::zero(self.element.ring());
        for (c, i) in &self.combination {
            let g = generators.get(*i).ok_or(PolyError::AmbientMismatch)?;
            acc = acc.checked_add(&c.checked_mul(g)?)?;
        }
        Ok(acc)
    }

    /// Re-expands the combination and compares with the element.
    pub fn verify(&self, generators: &[Polynomial]) -> bool {
        matches!(self.expand(generators), Ok(p) if p == self.element)
    }
}

/// Reduced Groebner basis of an ideal for a fixed monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    basis: Vec<Polynomial>,
    source: Ideal,
    /// Basis elements with cofactors over the source generators, when requested.
    tracked: Option<Arc<Vec<Elem>>>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order() == other.ring.order() && self.basis == other.basis
    }
}

pub(crate) fn engine_for(ring: &PolyRing, rank_one: bool) -> Engine {
    Engine {
        order: ring.order().clone(),
        rank_one,
    }
}

pub(crate) fn to_vector(engine: &Engine, f: &Polynomial, pos: u32) -> Vector {
    engine.normalize(
        f.terms()
            .iter()
            .map(|(m, c)| (pos, m.clone(), c.clone()))
            .collect(),
    )
}

/// Component `pos` of a vector as a polynomial of `ring`.
pub(crate) fn component(ring: &Arc<PolyRing>, v: &Vector, pos: u32) -> Polynomial {
    let terms = v
        .terms
        .iter()
        .filter(|t| t.0 == pos)
        .map(|t| (t.1.clone(), t.2.clone()))
        .collect();
    Polynomial::from_sorted(ring, terms)
}

fn unit_cofactor(i: usize, nvars: usize, one: &crate::coeff::Coeff) -> Vector {
    Vector {
        terms: vec![(i as u32, Monomial::one(nvars), one.clone())],
    }
}

fn run(ideal: &Ideal, order: &MonomialOrder, track: bool) -> GroebnerBasis {
    let ring = ideal.ring.reordered(order.clone());
    let engine = engine_for(&ring, true);
    let one = ring.field().one();
    let gens: Vec<Elem> = ideal
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| Elem {
            v: to_vector(&engine, g, 0),
            cof: track.then(|| unit_cofactor(i, ring.nvars(), &one)),
        })
        .collect();
    let elems = engine.groebner(gens);
    let basis = elems.iter().map(|e| component(&ring, &e.v, 0)).collect();
    GroebnerBasis {
        ring,
        basis,
        source: ideal.clone(),
        tracked: track.then(|| Arc::new(elems)),
    }
}

/// Reduced Groebner basis of `ideal` with respect to `order`.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    run(ideal, order, false)
}

/// As [`buchberger`], additionally recording how each basis element is
/// built from the source generators so that membership can be certified.
pub fn buchberger_certifying(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    run(ideal, order, true)
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    /// The ambient ring carrying the basis order.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    fn engine(&self) -> Engine {
        engine_for(&self.ring, true)
    }

    fn plain_elems(&self, engine: &Engine) -> Vec<Elem> {
        self.basis
            .iter()
            .map(|g| Elem {
                v: to_vector(engine, g, 0),
                cof: None,
            })
            .collect()
    }

    /// Remainder of `f` on division by the basis, expressed in `f`'s ring.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        let f_here = f.in_ring(&self.ring)?;
        let engine = self.engine();
        let elems = self.plain_elems(&engine);
        let r = engine.reduce(
            Elem {
                v: to_vector(&engine, &f_here, 0),
                cof: None,
            },
            &elems,
        );
        component(&self.ring, &r.v, 0).in_ring(f.ring())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Certificate of membership over the source generators, if `f` is a
    /// member. Requires a basis built by [`buchberger_certifying`].
    pub fn certify(&self, f: &Polynomial) -> Result<Option<MembershipCertificate>, PolyError> {
        let f_here = f.in_ring(&self.ring)?;
        let Some(tracked) = &self.tracked else {
            return Ok(None);
        };
        let engine = self.engine();
        let r = engine.reduce(
            Elem {
                v: to_vector(&engine, &f_here, 0),
                cof: Some(Vector::default()),
            },
            tracked,
        );
        if !r.v.is_zero() {
            return Ok(None);
        }
        // f - sum cof_j g_j = 0 after negation of the tracked subtraction
        let cof = r.cof.expect("tracked");
        let src_ring = self.source.ring();
        let mut combination = Vec::new();
        for j in 0..self.source.generators.len() {
            let c = component(&self.ring, &cof, j as u32);
            if !c.is_zero() {
                combination.push(((-c).in_ring(src_ring)?, j));
            }
        }
        Ok(Some(MembershipCertificate {
            element: f.in_ring(src_ring)?,
            combination,
        }))
    }
}

/// Remainder of `f` modulo `basis`.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial, PolyError> {
    basis.normal_form(f)
}

/// Decides `f ∈ ideal`; with `certify` set, a member comes with a
/// combination of the ideal's generators that has been re-expanded and checked.
pub fn ideal_member(
    f: &Polynomial,
    ideal: &Ideal,
    certify: bool,
) -> Result<(bool, Option<MembershipCertificate>), PolyError> {
    if !f.ring().same_ambient(ideal.ring()) {
        return Err(PolyError::AmbientMismatch);
    }
    if f.is_zero() {
        let cert = certify.then(|| MembershipCertificate {
            element: f.in_ring(ideal.ring()).expect("same ambient"),
            combination: Vec::new(),
        });
        return Ok((true, cert));
    }
    let order = ideal.ring().order().clone();
    if !certify {
        return Ok((buchberger(ideal, &order).contains(f)?, None));
    }
    let gb = buchberger_certifying(ideal, &order);
    match gb.certify(f)? {
        Some(cert) => {
            assert!(
                cert.verify(ideal.generators()),
                "membership certificate failed re-expansion"
            );
            Ok((true, Some(cert)))
        }
        None => Ok((false, None)),
    }
}

/// Equality of ideals via their reduced bases in the default order.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, PolyError> {
    if !a.ring().same_ambient(b.ring()) {
        return Err(PolyError::AmbientMismatch);
    }
    let order = MonomialOrder::default();
    Ok(buchberger(a, &order) == buchberger(b, &order))
}

/// `(I : f) = { g : g f ∈ I }`, read off a module basis of the syzygy-style
/// submodule generated by `(f, 1)` and `(g_i, 0)`.
pub fn ideal_quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, GroebnerError> {
    if !f.ring().same_ambient(ideal.ring()) {
        return Err(PolyError::AmbientMismatch.into());
    }
    if f.is_zero() {
        return Err(GroebnerError::QuotientByZero);
    }
    let ring = ideal.ring().clone();
    let one = Polynomial::one(&ring);
    let zero = Polynomial::zero(&ring);
    let mut gens = vec![vec![f.in_ring(&ring)?, one]];
    for g in ideal.generators() {
        gens.push(vec![g.clone(), zero.clone()]);
    }
    let gb = module_groebner(&ring, 2, &gens)?;
    let quotient: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|v| v[0].is_zero())
        .map(|v| v[1].clone())
        .collect();
    Ok(Ideal::new(&ring, quotient)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_polynomial_list};

    fn ideal(ring: &Arc<PolyRing>, s: &str) -> Ideal {
        Ideal::new(ring, parse_polynomial_list(s, ring).unwrap()).unwrap()
    }

    fn p(ring: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn unit_scaling_is_normalized() {
        let r = PolyRing::rational(&["x", "y"]);
        let gb = buchberger(&ideal(&r, "4*x^3, -5*y^4"), &MonomialOrder::grevlex());
        let shown: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x^3", "y^4"]);
    }

    #[test]
    fn lex_single_reduction() {
        let r = PolyRing::rational(&["x", "y"]);
        let gb = buchberger(&ideal(&r, "x^2 + y, y"), &MonomialOrder::lex());
        let shown: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["y", "x^2"]);
    }

    #[test]
    fn basis_is_idempotent() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let i = ideal(&r, "x*y - z, y*z - x, x*z - y");
        let gb = buchberger(&i, &MonomialOrder::grevlex());
        let again = buchberger(
            &Ideal::new(&r, gb.basis().to_vec()).unwrap(),
            &MonomialOrder::grevlex(),
        );
        assert_eq!(gb, again);
    }

    #[test]
    fn normal_forms() {
        let r = PolyRing::rational(&["x", "y"]);
        let gb = buchberger(&ideal(&r, "x^3, y^4"), &MonomialOrder::grevlex());
        assert!(gb.normal_form(&p(&r, "x^3")).unwrap().is_zero());
        assert_eq!(gb.normal_form(&p(&r, "x^2*y^3")).unwrap(), p(&r, "x^2*y^3"));
    }

    #[test]
    fn membership_certificates_expand() {
        let r = PolyRing::rational(&["x", "y", "z", "w"]);
        let j = ideal(&r, "3*x^2 + y*z, 3*y^2 + x*z, x*y, x^3 + y^3 + x*y*z + w^2");
        for target in ["x^3", "y^3", "x*y"] {
            let (member, cert) = ideal_member(&p(&r, target), &j, true).unwrap();
            assert!(member, "{target}");
            assert!(cert.unwrap().verify(j.generators()));
        }
        let (member, cert) = ideal_member(&p(&r, "x^2"), &j, true).unwrap();
        assert!(!member);
        assert!(cert.is_none());
    }

    #[test]
    fn non_membership_in_jacobian_of_curve() {
        let r = PolyRing::rational(&["x", "y"]);
        let j = ideal(&r, "x^3, y^4, x^4 - y^5");
        assert!(!ideal_member(&p(&r, "x^2"), &j, false).unwrap().0);
        assert!(ideal_member(&Polynomial::zero(&r), &j, false).unwrap().0);
    }

    #[test]
    fn equality() {
        let r = PolyRing::rational(&["x", "y"]);
        assert!(ideal_equal(&ideal(&r, "4*x^3, -5*y^4"), &ideal(&r, "x^3, y^4")).unwrap());
        assert!(!ideal_equal(&ideal(&r, "x"), &ideal(&r, "x^2")).unwrap());
    }

    #[test]
    fn quotients() {
        let r = PolyRing::rational(&["x", "y"]);
        let q = ideal_quotient(&ideal(&r, "x^2"), &p(&r, "x")).unwrap();
        assert!(ideal_equal(&q, &ideal(&r, "x")).unwrap());
        let q = ideal_quotient(&ideal(&r, "x*y"), &p(&r, "x")).unwrap();
        assert!(ideal_equal(&q, &ideal(&r, "y")).unwrap());
        assert_eq!(
            ideal_quotient(&ideal(&r, "x"), &Polynomial::zero(&r)).unwrap_err(),
            GroebnerError::QuotientByZero
        );

        let s = PolyRing::rational(&["x", "y", "z", "w"]);
        let f = ideal(&s, "x^3 + y^3 + x*y*z + w^2");
        let q = ideal_quotient(&f, &p(&s, "x")).unwrap();
        assert!(ideal_equal(&q, &f).unwrap());
    }

    #[test]
    fn maximal_powers() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        assert_eq!(Ideal::maximal_power(&r, 2).generators().len(), 6);
        assert_eq!(Ideal::maximal_power(&r, 0).generators().len(), 1);
    }
}
