//! Sparse multivariate polynomials with dense exponent vectors.
//!
//! A [`Polynomial`] always belongs to a [`PolyRing`], which fixes the
//! coefficient field, the variable names and the monomial order used to keep
//! the terms sorted. Two rings with the same field and variables are the same
//! *ambient* ring even if their orders differ; mixed-order arithmetic converts
//! the right operand into the left operand's order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::{Coeff, Field};
use crate::error::PolyError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// A monomial order together with a variable priority list.
///
/// `priority[k]` is the index of the k-th most significant variable; an empty
/// list means the declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: Vec::new(),
        }
    }

    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            priority: Vec::new(),
        }
    }

    /// Panics unless `priority` is a permutation of `0..priority.len()`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            assert!(
                i < priority.len() && !seen[i],
                "priority must be a permutation"
            );
            seen[i] = true;
        }
        MonomialOrder { kind, priority }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    #[inline]
    fn var_at(&self, k: usize) -> usize {
        if self.priority.is_empty() {
            k
        } else {
            self.priority[k]
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.0.len();
        match self.kind {
            OrderKind::Lex => {
                for k in 0..n {
                    let i = self.var_at(k);
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for k in (0..n).rev() {
                    let i = self.var_at(k);
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Ambient polynomial ring `k[x_1, ..., x_n]` with a fixed term order.
#[derive(Clone, Debug)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>) -> Result<Arc<Self>, PolyError> {
        Self::with_order(field, vars, MonomialOrder::default())
    }

    pub fn with_order(
        field: Field,
        vars: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>, PolyError> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// Shorthand for tests and examples: rational coefficients, grevlex.
    pub fn rational(vars: &[&str]) -> Arc<Self> {
        Self::new(
            Field::Rational,
            vars.iter().map(|s| s.to_string()).collect(),
        )
        .expect("distinct variable names")
    }

    pub fn reordered(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Same field and variable list; the order is irrelevant.
    pub fn same_ambient(&self, other: &PolyRing) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

/// Terms are stored in *ascending* order so the leading term is the last one.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Arc<PolyRing>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length");
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one())
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self, PolyError> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial length");
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order().clone();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusted constructor: terms already ascending and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Less));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Terms in ascending order (leading term last).
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.last()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// True when the polynomial is a single monomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_one() => Some(m),
            _ => None,
        }
    }

    /// Index of the variable when the polynomial is `c * x_i`, `c != 0`.
    pub fn as_scaled_variable(&self) -> Option<usize> {
        match self.terms.as_slice() {
            [(m, _)] if m.degree() == 1 => m.support().next(),
            _ => None,
        }
    }

    /// The same polynomial viewed in another ring with the same ambient.
    pub fn in_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        if !self.ring.same_ambient(ring) {
            return Err(PolyError::AmbientMismatch);
        }
        if self.ring.order() == ring.order() {
            return Ok(Polynomial {
                ring: ring.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut terms = self.terms.clone();
        let order = ring.order().clone();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    fn aligned<'a>(
        &self,
        other: &'a Polynomial,
    ) -> Result<std::borrow::Cow<'a, Polynomial>, PolyError> {
        if !self.ring.same_ambient(&other.ring) {
            return Err(PolyError::AmbientMismatch);
        }
        if self.ring.order() == other.ring.order() {
            Ok(std::borrow::Cow::Borrowed(other))
        } else {
            Ok(std::borrow::Cow::Owned(other.in_ring(&self.ring)?))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let other = self.aligned(other)?;
        Ok(self.merge(&other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let other = self.aligned(other)?;
        Ok(self.merge(&other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let other = self.aligned(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other.as_ref())
        } else {
            (other.as_ref(), self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.merge(&large.mul_term(m, c), false);
        }
        Ok(acc)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `c * m * self`; term order is preserved because orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial, PolyError> {
        if var >= self.ring.nvars() {
            return Err(PolyError::UnknownVariable(format!("#{var}")));
        }
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps()[var] > 0)
            .map(|(m, c)| {
                let mut e = m.exps().to_vec();
                let k = e[var];
                e[var] -= 1;
                (Monomial::new(e), c * &field.from_i64(k as i64))
            })
            .collect();
        // exponent factors can vanish in positive characteristic
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn partial_derivative_by_name(&self, name: &str) -> Result<Polynomial, PolyError> {
        self.partial_derivative(self.ring.var_index(name)?)
    }

    /// Sets the variable to zero.
    pub fn substitute_zero(&self, var: usize) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exps()[var] == 0)
                .cloned()
                .collect(),
        }
    }

    pub fn uses_variable(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exps()[var] > 0)
    }

    /// Re-expresses the polynomial in `ring`, whose variables must be a
    /// subset of this ring's variables covering every variable in use.
    pub fn restrict_to(&self, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        let map: Vec<usize> = ring
            .vars()
            .iter()
            .map(|v| self.ring.var_index(v))
            .collect::<Result<_, _>>()?;
        for (i, name) in self.ring.vars().iter().enumerate() {
            if !map.contains(&i) && self.uses_variable(i) {
                return Err(PolyError::UnknownVariable(name.clone()));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    Monomial::new(map.iter().map(|&i| m.exps()[i]).collect()),
                    c.clone(),
                )
            })
            .collect();
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Embeds into a ring whose variables are a superset of ours.
    pub fn extend_to(&self, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        let map: Vec<usize> = self
            .ring
            .vars()
            .iter()
            .map(|v| ring.var_index(v))
            .collect::<Result<_, _>>()?;
        let n = ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (k, &i) in map.iter().enumerate() {
                    e[i] = m.exps()[k];
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Weighted degrees of the terms are all equal for some positive weight
    /// vector: checked against the supplied weights.
    pub fn is_weighted_homogeneous(&self, weights: &[u64]) -> bool {
        let mut deg = None;
        for (m, _) in &self.terms {
            let d: u64 = m
                .exps()
                .iter()
                .zip(weights)
                .map(|(&e, &w)| e as u64 * w)
                .sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return false,
                _ => {}
            }
        }
        true
    }

    fn write_monomial(&self, f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.vars()[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        match self.aligned(other) {
            Ok(o) => self.terms == o.terms,
            Err(_) => false,
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Canonical rendering: descending terms, `*` between factors, `c*` prefix
/// for non-unit coefficients. The output re-parses to the same polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.abs() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                self.write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics on ambient mismatch; use the `checked_*` methods to get an error instead.
        impl $tr for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ambient ring mismatch")
            }
        }
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(ring: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = PolyRing::rational(&["x", "y"]);
        assert_eq!(&p(&r, "x + y") + &p(&r, "x - y"), p(&r, "2*x"));
        assert_eq!(
            &p(&r, "x^3 - y^5") + &Polynomial::zero(&r),
            p(&r, "x^3 - y^5")
        );
        assert_eq!(&p(&r, "x^3 - y^5") + &p(&r, "y^5"), p(&r, "x^3"));
    }

    #[test]
    fn mul_examples() {
        let r = PolyRing::rational(&["x", "y"]);
        assert_eq!(&p(&r, "x") * &p(&r, "x^2"), p(&r, "x^3"));
        assert_eq!(&p(&r, "x-y") * &p(&r, "x+y"), p(&r, "x^2 - y^2"));
        let f2 = PolyRing::new(Field::prime(2).unwrap(), vec!["x".into(), "y".into()]).unwrap();
        assert_eq!(p(&f2, "x+y").pow(2), p(&f2, "x^2 + y^2"));
    }

    #[test]
    fn derivative_examples() {
        let r = PolyRing::rational(&["x", "y"]);
        assert_eq!(
            p(&r, "x^3 - y^5").partial_derivative_by_name("x").unwrap(),
            p(&r, "3*x^2")
        );
        assert!(p(&r, "7").partial_derivative(0).unwrap().is_zero());
        let r4 = PolyRing::rational(&["x", "y", "z", "w"]);
        assert_eq!(
            p(&r4, "x^3 + y^3 + x*y*z + w^2")
                .partial_derivative_by_name("z")
                .unwrap(),
            p(&r4, "x*y")
        );
        assert_eq!(
            p(&r, "x").partial_derivative_by_name("q"),
            Err(PolyError::UnknownVariable("q".into()))
        );
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let r = PolyRing::rational(&["x", "y"]);
        let s = PolyRing::rational(&["x", "z"]);
        assert_eq!(
            p(&r, "x").checked_add(&p(&s, "x")),
            Err(PolyError::AmbientMismatch)
        );
    }

    #[test]
    fn mixed_orders_share_an_ambient() {
        let r = PolyRing::rational(&["x", "y"]);
        let l = r.reordered(MonomialOrder::lex());
        let f = p(&r, "x + y^2");
        let g = p(&l, "x + y^2");
        assert_eq!(f, g);
        assert_eq!(f.leading_monomial().unwrap().exps(), &[0, 2]);
        assert_eq!(g.leading_monomial().unwrap().exps(), &[1, 0]);
        assert_eq!(&f - &g, Polynomial::zero(&r));
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::grevlex();
        // x*z < y^2 in grevlex with x > y > z
        let xz = Monomial::new(vec![1, 0, 1]);
        let yy = Monomial::new(vec![0, 2, 0]);
        assert_eq!(o.cmp(&xz, &yy), Ordering::Less);
        let lex = MonomialOrder::lex();
        assert_eq!(lex.cmp(&xz, &yy), Ordering::Greater);
    }

    #[test]
    fn display_is_canonical() {
        let r = PolyRing::rational(&["x", "y", "z", "w"]);
        let f = p(&r, "w^2 + x*y*z + y^3 + x^3");
        assert_eq!(f.to_string(), "x^3 + y^3 + x*y*z + w^2");
        assert_eq!(p(&r, "-1/3*x + 2").to_string(), "-1/3*x + 2");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
