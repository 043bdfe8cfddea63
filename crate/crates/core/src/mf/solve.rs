//! Exact decision of null-homotopy through module Groebner bases.
//!
//! For `φ: X → X'` the unknowns are the entries of `s` and `t` (`r'×r`
//! each). The map `(s, t) ↦ (A's + tB, sA + B't)` is `S`-linear, so `φ` is
//! null-homotopic iff `(α0, α1)`, flattened into `S^(2r'r)`, lies in the
//! submodule spanned by the images of the matrix units.

use rayon::prelude::*;

use crate::error::MfError;
use crate::groebner::{module_groebner, monomials_of_degree, ModuleGB};
use crate::poly::Polynomial;

use super::certificate::EquivalenceCertificate;
use super::{cone, mult_morphism, Homotopy, MFMorphism, MatrixFactorization, PolyMatrix};

/// Homotopy solver for a fixed pair of objects. The module basis depends
/// only on the objects, so several morphisms can share it.
pub(crate) struct HomotopySolver {
    source: MatrixFactorization,
    target: MatrixFactorization,
    gb: Option<ModuleGB>,
}

impl HomotopySolver {
    pub(crate) fn new(
        source: &MatrixFactorization,
        target: &MatrixFactorization,
    ) -> Result<Self, MfError> {
        let (r, rp) = (source.rank(), target.rank());
        let n = rp * r;
        let gb = if n == 0 {
            None
        } else {
            let ring = source.ring();
            let (a, b) = (source.a(), source.b());
            let (ap, bp) = (target.a(), target.b());
            let mut gens = Vec::with_capacity(2 * n);
            // s_ij: α0[p][j] += A'[p][i], α1[i][q] += A[j][q]
            for i in 0..rp {
                for j in 0..r {
                    let mut g = vec![Polynomial::zero(ring); 2 * n];
                    for p in 0..rp {
                        g[p * r + j] = ap.get(p, i).clone();
                    }
                    for q in 0..r {
                        g[n + i * r + q] = a.get(j, q).clone();
                    }
                    gens.push(g);
                }
            }
            // t_ij: α0[i][q] += B[j][q], α1[p][j] += B'[p][i]
            for i in 0..rp {
                for j in 0..r {
                    let mut g = vec![Polynomial::zero(ring); 2 * n];
                    for q in 0..r {
                        g[i * r + q] = b.get(j, q).clone();
                    }
                    for p in 0..rp {
                        g[n + p * r + j] = bp.get(p, i).clone();
                    }
                    gens.push(g);
                }
            }
            Some(module_groebner(ring, 2 * n, &gens)?)
        };
        Ok(HomotopySolver {
            source: source.clone(),
            target: target.clone(),
            gb,
        })
    }

    pub(crate) fn solve(&self, phi: &MFMorphism) -> Result<Option<Homotopy>, MfError> {
        if phi.source() != &self.source || phi.target() != &self.target {
            return Err(MfError::Shape(
                "morphism does not match the solver's objects".into(),
            ));
        }
        let Some(gb) = &self.gb else {
            return Ok(Some(Homotopy::zero(phi)));
        };
        let (r, rp) = (self.source.rank(), self.target.rank());
        let n = rp * r;
        let mut v = Vec::with_capacity(2 * n);
        for m in [phi.alpha0(), phi.alpha1()] {
            for p in 0..rp {
                for q in 0..r {
                    v.push(m.get(p, q).clone());
                }
            }
        }
        let Some(c) = gb.lift(&v)? else {
            return Ok(None);
        };
        let ring = self.source.ring();
        let mut s = PolyMatrix::zero(ring, rp, r);
        let mut t = PolyMatrix::zero(ring, rp, r);
        for i in 0..rp {
            for j in 0..r {
                s.set(i, j, c[i * r + j].clone());
                t.set(i, j, c[n + i * r + j].clone());
            }
        }
        let h = Homotopy { s, t };
        if !h.verify(phi) {
            return Err(MfError::Certificate(
                "solver homotopy does not re-expand".into(),
            ));
        }
        Ok(Some(h))
    }
}

/// A verified homotopy `(s, t)` with `φ = (A's + tB, sA + B't)`, or `None`
/// when no such pair exists over `S`.
pub fn is_nullhomotopic(phi: &MFMorphism) -> Result<Option<Homotopy>, MfError> {
    if !phi.is_valid() {
        return Err(MfError::Invalid("morphism squares do not commute".into()));
    }
    if phi.alpha0().is_zero() && phi.alpha1().is_zero() {
        return Ok(Some(Homotopy::zero(phi)));
    }
    HomotopySolver::new(phi.source(), phi.target())?.solve(phi)
}

/// Decides whether `φ` is invertible up to homotopy, by contracting its
/// cone. The inverse and both homotopies are read off the contraction.
pub fn is_homotopy_equivalence(
    phi: &MFMorphism,
) -> Result<Option<EquivalenceCertificate>, MfError> {
    let c = cone(phi)?;
    let Some(h) = is_nullhomotopic(&MFMorphism::identity(&c.object))? else {
        return Ok(None);
    };
    let (x, y) = (phi.source(), phi.target());
    let (r, rp) = (x.rank(), y.rank());
    // C0 = F0' ⊕ F1, C1 = F1' ⊕ F0
    let blk = |m: &PolyMatrix, top: bool, left: bool| {
        let (r0, nr) = if top { (0, rp) } else { (rp, r) };
        let (c0, nc) = if left { (0, rp) } else { (rp, r) };
        m.sub_block(r0, c0, nr, nc)
    };
    let backward = MFMorphism::new(y, x, blk(&h.s, false, true), blk(&h.t, false, true))?;
    let forward_after_back = Homotopy {
        s: blk(&h.s, true, true).neg(),
        t: blk(&h.t, true, true).neg(),
    };
    let back_after_forward = Homotopy {
        s: blk(&h.t, false, false),
        t: blk(&h.s, false, false),
    };
    let cert = EquivalenceCertificate::new(
        phi.clone(),
        backward,
        back_after_forward,
        forward_after_back,
    );
    cert.check()?;
    Ok(Some(cert))
}

/// Monomials of degree at most `degree_cap` acting as zero on `X` up to
/// homotopy, each with its certificate, in order of degree.
pub fn stable_annihilator_probe(
    x: &MatrixFactorization,
    degree_cap: u32,
) -> Result<Vec<(Polynomial, Homotopy)>, MfError> {
    let ring = x.ring();
    let monomials: Vec<Polynomial> = (0..=degree_cap)
        .flat_map(|d| monomials_of_degree(ring.nvars(), d))
        .map(|m| Polynomial::monomial(ring, m, ring.field().one()))
        .collect();
    let solver = HomotopySolver::new(x, x)?;
    let hits: Vec<Option<(Polynomial, Homotopy)>> = monomials
        .into_par_iter()
        .map(|m| {
            let phi = mult_morphism(x, &m);
            Ok(solver.solve(&phi)?.map(|h| (m, h)))
        })
        .collect::<Result<_, MfError>>()?;
    Ok(hits.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::{direct_sum, shift};
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    fn cubic() -> (impl Fn(&str) -> Polynomial, Polynomial) {
        let r = PolyRing::rational(&["x"]);
        let p = move |s: &str| parse_polynomial(s, &r).unwrap();
        let f = p("x^3");
        (p, f)
    }

    #[test]
    fn potential_and_generator_homotopies() {
        let (p, f) = cubic();
        let x = MatrixFactorization::rank_one(&f, &p("x^2"), &p("x")).unwrap();
        assert!(is_nullhomotopic(&mult_morphism(&x, &f)).unwrap().is_some());

        let h = is_nullhomotopic(&mult_morphism(&x, &p("x")))
            .unwrap()
            .unwrap();
        assert!(h.verify(&mult_morphism(&x, &p("x"))));
        // with A = x^2 and B = x the only solution in degree 0 is (0, 1)
        assert_eq!(h.s.to_string(), "[[0]]");
        assert_eq!(h.t.to_string(), "[[1]]");

        let y = MatrixFactorization::rank_one(&f, &p("x"), &p("x^2")).unwrap();
        let h = is_nullhomotopic(&mult_morphism(&y, &p("x")))
            .unwrap()
            .unwrap();
        assert_eq!(
            (h.s.to_string(), h.t.to_string()),
            ("[[1]]".into(), "[[0]]".into())
        );
    }

    #[test]
    fn identity_on_nontrivial_object_is_not_nullhomotopic() {
        let (p, f) = cubic();
        let y = MatrixFactorization::rank_one(&f, &p("x"), &p("x^2")).unwrap();
        assert!(is_nullhomotopic(&MFMorphism::identity(&y))
            .unwrap()
            .is_none());
        assert!(is_nullhomotopic(&mult_morphism(&y, &p("1")))
            .unwrap()
            .is_none());
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let (p, f) = cubic();
        let y = MatrixFactorization::rank_one(&f, &p("x"), &p("x^2")).unwrap();
        let c = cone(&MFMorphism::identity(&y)).unwrap();
        let h = is_nullhomotopic(&MFMorphism::identity(&c.object)).unwrap();
        assert!(h.is_some_and(|h| h.verify(&MFMorphism::identity(&c.object))));
        // a unit-potential factorization is contractible as well
        let u = MatrixFactorization::rank_one(&f, &p("1"), &f).unwrap();
        assert!(is_nullhomotopic(&MFMorphism::identity(&u))
            .unwrap()
            .is_some());
    }

    #[test]
    fn equivalences() {
        let (p, f) = cubic();
        let x = MatrixFactorization::rank_one(&f, &p("x^2"), &p("x")).unwrap();
        let id = is_homotopy_equivalence(&MFMorphism::identity(&x)).unwrap();
        assert!(id.is_some_and(|c| c.verify()));

        let zero = MFMorphism::zero(&x, &x).unwrap();
        assert!(is_homotopy_equivalence(&zero).unwrap().is_none());

        let contractible = cone(&MFMorphism::identity(&x)).unwrap().object;
        let sum = direct_sum(&x, &contractible).unwrap();
        let r = x.ring();
        let incl = PolyMatrix::block(
            &PolyMatrix::identity(r, 1),
            &PolyMatrix::zero(r, 1, 0),
            &PolyMatrix::zero(r, 2, 1),
            &PolyMatrix::zero(r, 2, 0),
        );
        let phi = MFMorphism::new(&x, &sum, incl.clone(), incl).unwrap();
        let cert = is_homotopy_equivalence(&phi).unwrap().unwrap();
        assert!(cert.verify());
        assert_eq!(cert.backward().target(), &x);

        let s = shift(&x);
        assert!(is_homotopy_equivalence(&MFMorphism::zero(&x, &s).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn probe() {
        let (p, f) = cubic();
        let x = MatrixFactorization::rank_one(&f, &p("x^2"), &p("x")).unwrap();
        let hits: Vec<String> = stable_annihilator_probe(&x, 3)
            .unwrap()
            .into_iter()
            .map(|(m, _)| m.to_string())
            .collect();
        assert_eq!(hits, ["x", "x^2", "x^3"]);

        let zero = MatrixFactorization::zero_object(&f);
        assert_eq!(stable_annihilator_probe(&zero, 2).unwrap().len(), 3);
    }
}
