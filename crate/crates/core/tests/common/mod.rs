#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;

use sgdim_core::mf::{direct_sum, shift, MFMorphism, MatrixFactorization, PolyMatrix};
use sgdim_core::{Monomial, PolyRing, Polynomial};

pub type Terms = Vec<(Vec<u32>, i64)>;

/// Up to `max_terms` terms in `nvars` variables of total degree at most `deg`.
pub fn terms(nvars: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    let term = (prop::collection::vec(0..=deg, nvars), -5i64..=5).prop_map(move |(mut e, c)| {
        while e.iter().sum::<u32>() > deg {
            let i = e.iter().position(|&x| x > 0).unwrap();
            e[i] -= 1;
        }
        (e, c)
    });
    prop::collection::vec(term, 0..=max_terms)
}

pub fn nonzero_terms(nvars: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    terms(nvars, deg, max_terms).prop_filter("nonzero", |t| t.iter().any(|(_, c)| *c != 0))
}

pub fn build(ring: &Arc<PolyRing>, t: &Terms) -> Polynomial {
    let f = ring.field();
    Polynomial::from_terms(
        ring,
        t.iter()
            .map(|(e, c)| (Monomial::new(e.clone()), f.from_i64(*c)))
            .collect(),
    )
}

pub fn qq3() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z"])
}

pub fn qq2() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y"])
}

/// Textbook multivariate division: repeatedly cancel the leading term by a
/// divisor whose leading monomial divides it, else move it to the remainder.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(ring);
    while let Some((m, c)) = p.leading_term().cloned() {
        let hit = divisors.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            lm.divide_into(&m).map(|q| (q, &c * &lc.inv().unwrap(), g))
        });
        match hit {
            Some((q, k, g)) => p = &p - &g.mul_term(&q, &k),
            None => {
                let t = Polynomial::monomial(ring, m, c);
                rem = &rem + &t;
                p = &p - &t;
            }
        }
    }
    rem
}

pub fn sorted_strings(ps: &[Polynomial]) -> Vec<String> {
    let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

/// `X = (a, b) ⊕ (b, a)` over `QQ[x,y]` with potential `ab`.
pub fn factorization(a: &Terms, b: &Terms) -> MatrixFactorization {
    let ring = qq2();
    let (a, b) = (build(&ring, a), build(&ring, b));
    let x = MatrixFactorization::rank_one(&(&a * &b), &a, &b).unwrap();
    direct_sum(&x, &shift(&x)).unwrap()
}

/// `α0 = A s + t B`, `α1 = s A + B t`: null-homotopic by construction.
pub fn null_morphism(x: &MatrixFactorization, s: &[Terms], t: &[Terms]) -> MFMorphism {
    let ring = x.ring();
    let mat = |e: &[Terms]| {
        PolyMatrix::from_rows(
            ring,
            vec![
                vec![build(ring, &e[0]), build(ring, &e[1])],
                vec![build(ring, &e[2]), build(ring, &e[3])],
            ],
        )
        .unwrap()
    };
    let (s, t) = (mat(s), mat(t));
    let a0 = x.a().mul(&s).add(&t.mul(x.b()));
    let a1 = s.mul(x.a()).add(&x.b().mul(&t));
    MFMorphism::new(x, x, a0, a1).unwrap()
}

pub fn factor_pair() -> impl Strategy<Value = (Terms, Terms)> {
    (nonzero_terms(2, 2, 2), nonzero_terms(2, 2, 2)).prop_filter(
        "non-constant factors",
        |(a, b)| {
            let ring = qq2();
            let (a, b) = (build(&ring, a), build(&ring, b));
            a.total_degree() > Some(0) && b.total_degree() > Some(0)
        },
    )
}
