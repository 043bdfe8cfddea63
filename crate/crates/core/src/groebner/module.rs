//! Groebner bases of submodules of free modules `S^r`.

use std::sync::Arc;

use crate::error::{GroebnerError, PolyError};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

use super::engine::{Elem, Engine, Vector};
use super::{component, engine_for};

/// Reduced basis of a submodule of `S^rank` under the position-over-term
/// extension of the ring's order (component 0 most significant).
#[derive(Clone, Debug)]
pub struct ModuleGB {
    ring: Arc<PolyRing>,
    rank: usize,
    basis: Vec<Vec<Polynomial>>,
    elems: Vec<Elem>,
    ngens: usize,
}

impl ModuleGB {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Vec<Polynomial>] {
        &self.basis
    }

    fn engine(&self) -> Engine {
        engine_for(&self.ring, self.rank == 1)
    }

    /// Coefficients `c` with `v = sum_j c_j gens_j`, if `v` is in the module.
    pub fn lift(&self, v: &[Polynomial]) -> Result<Option<Vec<Polynomial>>, GroebnerError> {
        check_rank(self.rank, v)?;
        let engine = self.engine();
        let start = Elem {
            v: vector_of(&engine, &self.ring, v)?,
            cof: Some(Vector::default()),
        };
        let r = engine.reduce(start, &self.elems);
        if !r.v.is_zero() {
            return Ok(None);
        }
        let cof = r.cof.expect("tracked");
        Ok(Some(
            (0..self.ngens)
                .map(|j| -component(&self.ring, &cof, j as u32))
                .collect(),
        ))
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool, GroebnerError> {
        check_rank(self.rank, v)?;
        let engine = self.engine();
        let plain: Vec<Elem> = self
            .elems
            .iter()
            .map(|e| Elem {
                v: e.v.clone(),
                cof: None,
            })
            .collect();
        let r = engine.reduce(
            Elem {
                v: vector_of(&engine, &self.ring, v)?,
                cof: None,
            },
            &plain,
        );
        Ok(r.v.is_zero())
    }
}

fn check_rank(rank: usize, v: &[Polynomial]) -> Result<(), GroebnerError> {
    if v.len() != rank {
        return Err(GroebnerError::RankMismatch {
            expected: rank,
            found: v.len(),
        });
    }
    Ok(())
}

fn vector_of(engine: &Engine, ring: &Arc<PolyRing>, v: &[Polynomial]) -> Result<Vector, PolyError> {
    let mut terms = Vec::new();
    for (i, p) in v.iter().enumerate() {
        let p = p.in_ring(ring)?;
        terms.extend(
            p.terms()
                .iter()
                .map(|(m, c)| (i as u32, m.clone(), c.clone())),
        );
    }
    Ok(engine.normalize(terms))
}

/// Module basis of the span of `gens` in `S^rank`, with cofactors kept so
/// that [`ModuleGB::lift`] can express members in the original generators.
pub fn module_groebner(
    ring: &Arc<PolyRing>,
    rank: usize,
    gens: &[Vec<Polynomial>],
) -> Result<ModuleGB, GroebnerError> {
    let engine = engine_for(ring, rank == 1);
    let one = ring.field().one();
    let mut input = Vec::with_capacity(gens.len());
    for (j, g) in gens.iter().enumerate() {
        check_rank(rank, g)?;
        input.push(Elem {
            v: vector_of(&engine, ring, g)?,
            cof: Some(Vector {
                terms: vec![(j as u32, Monomial::one(ring.nvars()), one.clone())],
            }),
        });
    }
    let elems = engine.groebner(input);
    let basis = elems
        .iter()
        .map(|e| (0..rank).map(|i| component(ring, &e.v, i as u32)).collect())
        .collect();
    Ok(ModuleGB {
        ring: ring.clone(),
        rank,
        basis,
        elems,
        ngens: gens.len(),
    })
}

/// Decides whether `v` lies in the submodule spanned by `gens`; members come
/// with coefficients that have been re-expanded against `gens`.
pub fn module_member(
    v: &[Polynomial],
    gens: &[Vec<Polynomial>],
) -> Result<(bool, Option<Vec<Polynomial>>), GroebnerError> {
    let Some(first) = v.first() else {
        return Ok((true, Some(vec![])));
    };
    let ring = first.ring().clone();
    if v.iter().all(|p| p.is_zero()) {
        let zero = Polynomial::zero(&ring);
        return Ok((true, Some(vec![zero; gens.len()])));
    }
    let gb = module_groebner(&ring, v.len(), gens)?;
    match gb.lift(v)? {
        Some(c) => {
            assert!(
                expand(&ring, &c, gens)? == v,
                "module combination failed re-expansion"
            );
            Ok((true, Some(c)))
        }
        None => Ok((false, None)),
    }
}

/// `sum_j c_j gens_j`.
pub fn expand(
    ring: &Arc<PolyRing>,
    c: &[Polynomial],
    gens: &[Vec<Polynomial>],
) -> Result<Vec<Polynomial>, PolyError> {
    let rank = gens.first().map_or(0, |g| g.len());
    let mut acc = vec![Polynomial::zero(ring); rank];
    for (cj, g) in c.iter().zip(gens) {
        if cj.is_zero() {
            continue;
        }
        for (a, gi) in acc.iter_mut().zip(g) {
            *a = a.checked_add(&cj.checked_mul(gi)?)?;
        }
    }
    Ok(acc)
}
