//! Matrix factorizations of a hypersurface potential `f`: pairs `(A, B)`
//! with `AB = BA = f·I`, their morphisms and homotopies.
//!
//! Conventions: `A: F1 → F0`, `B: F0 → F1`; a morphism is `(α0, α1)` with
//! `α0 A = A' α1` and `α1 B = B' α0`; a homotopy `(s, t)` has
//! `s: F0 → F1'`, `t: F1 → F0'` with `α0 = A' s + t B` and `α1 = s A + B' t`.

mod certificate;
mod io;
mod matrix;
mod solve;
mod structure;

use std::sync::Arc;

use crate::error::MfError;
use crate::poly::{PolyRing, Polynomial};

pub use certificate::EquivalenceCertificate;
pub use io::{HomotopyDocument, MfDocument};
pub use matrix::PolyMatrix;
pub use solve::{is_homotopy_equivalence, is_nullhomotopic, stable_annihilator_probe};
pub use structure::{
    koszul_split_from, split_product_triangle, verify_koszul_binomial, verify_koszul_split,
    KoszulBinomial, KoszulSplit, ProductTriangle, Summand,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    potential: Polynomial,
    a: PolyMatrix,
    b: PolyMatrix,
}

impl MatrixFactorization {
    /// Checks shapes only; see [`MatrixFactorization::validate`].
    pub fn new(potential: Polynomial, a: PolyMatrix, b: PolyMatrix) -> Result<Self, MfError> {
        if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
            return Err(MfError::Shape(format!(
                "A is {}x{}, B is {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        let ring = potential.ring().clone();
        Ok(MatrixFactorization {
            a: PolyMatrix::from_rows(&ring, a.to_rows())?,
            b: PolyMatrix::from_rows(&ring, b.to_rows())?,
            potential,
        })
    }

    /// As [`MatrixFactorization::new`], additionally requiring `AB = BA = f·I`.
    pub fn checked(potential: Polynomial, a: PolyMatrix, b: PolyMatrix) -> Result<Self, MfError> {
        let x = Self::new(potential, a, b)?;
        if !x.validate() {
            return Err(MfError::Invalid(
                "AB and BA must both equal f times the identity".into(),
            ));
        }
        Ok(x)
    }

    /// Rank-one factorization `([[a]], [[b]])`.
    pub fn rank_one(
        potential: &Polynomial,
        a: &Polynomial,
        b: &Polynomial,
    ) -> Result<Self, MfError> {
        let ring = potential.ring();
        Self::checked(
            potential.clone(),
            PolyMatrix::from_rows(ring, vec![vec![a.clone()]])?,
            PolyMatrix::from_rows(ring, vec![vec![b.clone()]])?,
        )
    }

    /// The rank-zero factorization.
    pub fn zero_object(potential: &Polynomial) -> Self {
        let ring = potential.ring();
        MatrixFactorization {
            potential: potential.clone(),
            a: PolyMatrix::zero(ring, 0, 0),
            b: PolyMatrix::zero(ring, 0, 0),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.potential.ring()
    }

    pub fn potential(&self) -> &Polynomial {
        &self.potential
    }

    pub fn rank(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &PolyMatrix {
        &self.a
    }

    pub fn b(&self) -> &PolyMatrix {
        &self.b
    }

    /// `AB = BA = f·I`, by direct expansion.
    pub fn validate(&self) -> bool {
        let f = PolyMatrix::scalar(self.ring(), self.rank(), &self.potential);
        self.a.mul(&self.b) == f && self.b.mul(&self.a) == f
    }
}

pub fn validate(x: &MatrixFactorization) -> bool {
    x.validate()
}

/// `(−B, −A)`; applying it twice gives back `X` exactly.
pub fn shift(x: &MatrixFactorization) -> MatrixFactorization {
    MatrixFactorization {
        potential: x.potential.clone(),
        a: x.b.neg(),
        b: x.a.neg(),
    }
}

fn same_potential(x: &MatrixFactorization, y: &MatrixFactorization) -> Result<(), MfError> {
    if !x.ring().same_ambient(y.ring()) || x.potential != y.potential {
        return Err(MfError::PotentialMismatch);
    }
    Ok(())
}

pub fn direct_sum(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
) -> Result<MatrixFactorization, MfError> {
    same_potential(x, y)?;
    Ok(MatrixFactorization {
        potential: x.potential.clone(),
        a: PolyMatrix::block_diag(x.ring(), &[&x.a, &y.a]),
        b: PolyMatrix::block_diag(x.ring(), &[&x.b, &y.b]),
    })
}

/// Block-diagonal sum of several factorizations of `potential`.
pub fn direct_sum_all(
    potential: &Polynomial,
    xs: &[&MatrixFactorization],
) -> Result<MatrixFactorization, MfError> {
    let base = MatrixFactorization::zero_object(potential);
    for x in xs {
        same_potential(&base, x)?;
    }
    let a: Vec<&PolyMatrix> = xs.iter().map(|x| &x.a).collect();
    let b: Vec<&PolyMatrix> = xs.iter().map(|x| &x.b).collect();
    Ok(MatrixFactorization {
        potential: potential.clone(),
        a: PolyMatrix::block_diag(potential.ring(), &a),
        b: PolyMatrix::block_diag(potential.ring(), &b),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFMorphism {
    source: MatrixFactorization,
    target: MatrixFactorization,
    alpha0: PolyMatrix,
    alpha1: PolyMatrix,
}

impl MFMorphism {
    /// Checks shapes and potentials; see [`MFMorphism::is_valid`].
    pub fn new(
        source: &MatrixFactorization,
        target: &MatrixFactorization,
        alpha0: PolyMatrix,
        alpha1: PolyMatrix,
    ) -> Result<Self, MfError> {
        same_potential(source, target)?;
        let shape = (target.rank(), source.rank());
        if (alpha0.rows(), alpha0.cols()) != shape || (alpha1.rows(), alpha1.cols()) != shape {
            return Err(MfError::Shape(format!(
                "morphism blocks must be {}x{}",
                shape.0, shape.1
            )));
        }
        Ok(MFMorphism {
            source: source.clone(),
            target: target.clone(),
            alpha0,
            alpha1,
        })
    }

    pub fn identity(x: &MatrixFactorization) -> Self {
        mult_morphism(x, &Polynomial::one(x.ring()))
    }

    pub fn zero(
        source: &MatrixFactorization,
        target: &MatrixFactorization,
    ) -> Result<Self, MfError> {
        let ring = source.ring();
        Self::new(
            source,
            target,
            PolyMatrix::zero(ring, target.rank(), source.rank()),
            PolyMatrix::zero(ring, target.rank(), source.rank()),
        )
    }

    pub fn source(&self) -> &MatrixFactorization {
        &self.source
    }

    pub fn target(&self) -> &MatrixFactorization {
        &self.target
    }

    pub fn alpha0(&self) -> &PolyMatrix {
        &self.alpha0
    }

    pub fn alpha1(&self) -> &PolyMatrix {
        &self.alpha1
    }

    /// Both squares commute.
    pub fn is_valid(&self) -> bool {
        self.alpha0.mul(self.source.a()) == self.target.a().mul(&self.alpha1)
            && self.alpha1.mul(self.source.b()) == self.target.b().mul(&self.alpha0)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &MFMorphism) -> Result<MFMorphism, MfError> {
        if first.target != self.source {
            return Err(MfError::Shape(
                "composable morphisms must share an object".into(),
            ));
        }
        Ok(MFMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            alpha0: self.alpha0.mul(&first.alpha0),
            alpha1: self.alpha1.mul(&first.alpha1),
        })
    }

    fn parallel(&self, other: &MFMorphism) -> Result<(), MfError> {
        if self.source != other.source || self.target != other.target {
            return Err(MfError::Shape(
                "morphisms must have the same source and target".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &MFMorphism) -> Result<MFMorphism, MfError> {
        self.parallel(other)?;
        Ok(MFMorphism {
            alpha0: self.alpha0.add(&other.alpha0),
            alpha1: self.alpha1.add(&other.alpha1),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &MFMorphism) -> Result<MFMorphism, MfError> {
        self.parallel(other)?;
        Ok(MFMorphism {
            alpha0: self.alpha0.sub(&other.alpha0),
            alpha1: self.alpha1.sub(&other.alpha1),
            ..self.clone()
        })
    }

    pub fn scale(&self, g: &Polynomial) -> MFMorphism {
        MFMorphism {
            alpha0: self.alpha0.scale(g),
            alpha1: self.alpha1.scale(g),
            ..self.clone()
        }
    }

    /// The same morphism between the shifted objects: `(α1, α0)`.
    pub fn shifted(&self) -> MFMorphism {
        MFMorphism {
            source: shift(&self.source),
            target: shift(&self.target),
            alpha0: self.alpha1.clone(),
            alpha1: self.alpha0.clone(),
        }
    }
}

/// Null-homotopy certificate for a morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy {
    pub s: PolyMatrix,
    pub t: PolyMatrix,
}

impl Homotopy {
    pub fn zero(phi: &MFMorphism) -> Homotopy {
        let ring = phi.source.ring();
        let shape = (phi.target.rank(), phi.source.rank());
        Homotopy {
            s: PolyMatrix::zero(ring, shape.0, shape.1),
            t: PolyMatrix::zero(ring, shape.0, shape.1),
        }
    }

    /// Re-expands `α0 = A' s + t B` and `α1 = s A + B' t`.
    pub fn verify(&self, phi: &MFMorphism) -> bool {
        let shape = (phi.target.rank(), phi.source.rank());
        if (self.s.rows(), self.s.cols()) != shape || (self.t.rows(), self.t.cols()) != shape {
            return false;
        }
        let (x, y) = (&phi.source, &phi.target);
        let h0 = y.a().mul(&self.s).add(&self.t.mul(x.b()));
        let h1 = self.s.mul(x.a()).add(&y.b().mul(&self.t));
        h0 == phi.alpha0 && h1 == phi.alpha1
    }

    pub fn add(&self, other: &Homotopy) -> Homotopy {
        Homotopy {
            s: self.s.add(&other.s),
            t: self.t.add(&other.t),
        }
    }

    pub fn scale(&self, g: &Polynomial) -> Homotopy {
        Homotopy {
            s: self.s.scale(g),
            t: self.t.scale(g),
        }
    }

    /// Homotopy for `after ∘ φ ∘ before` given one for `φ`.
    pub fn conjugate(&self, after: &MFMorphism, before: &MFMorphism) -> Homotopy {
        Homotopy {
            s: after.alpha1.mul(&self.s).mul(&before.alpha0),
            t: after.alpha0.mul(&self.t).mul(&before.alpha1),
        }
    }

    /// Homotopy for the shifted morphism.
    pub fn shifted(&self) -> Homotopy {
        Homotopy {
            s: self.t.neg(),
            t: self.s.neg(),
        }
    }
}

/// Multiplication by `r`: `(r·I, r·I)`.
pub fn mult_morphism(x: &MatrixFactorization, r: &Polynomial) -> MFMorphism {
    let m = PolyMatrix::scalar(x.ring(), x.rank(), r);
    MFMorphism {
        source: x.clone(),
        target: x.clone(),
        alpha0: m.clone(),
        alpha1: m,
    }
}

/// Cone of a morphism with its two structure maps.
#[derive(Clone, Debug)]
pub struct Cone {
    pub object: MatrixFactorization,
    /// `X' → cone(φ)`.
    pub inclusion: MFMorphism,
    /// `cone(φ) → shift(X)`.
    pub projection: MFMorphism,
}

/// `C0 = F0' ⊕ F1`, `C1 = F1' ⊕ F0`, `A_C = [[A', α0], [0, −B]]`,
/// `B_C = [[B', α1], [0, −A]]`.
pub fn cone(phi: &MFMorphism) -> Result<Cone, MfError> {
    if !phi.is_valid() {
        return Err(MfError::Invalid(
            "cone of a map whose squares do not commute".into(),
        ));
    }
    let (x, y) = (&phi.source, &phi.target);
    let ring = x.ring();
    let (r, rp) = (x.rank(), y.rank());
    let zero_rp_r = PolyMatrix::zero(ring, r, rp);
    let object = MatrixFactorization {
        potential: x.potential.clone(),
        a: PolyMatrix::block(y.a(), &phi.alpha0, &zero_rp_r, &x.b().neg()),
        b: PolyMatrix::block(y.b(), &phi.alpha1, &zero_rp_r, &x.a().neg()),
    };
    let incl = PolyMatrix::block(
        &PolyMatrix::identity(ring, rp),
        &PolyMatrix::zero(ring, rp, 0),
        &PolyMatrix::zero(ring, r, rp),
        &PolyMatrix::zero(ring, r, 0),
    );
    let proj = PolyMatrix::block(
        &PolyMatrix::zero(ring, r, rp),
        &PolyMatrix::identity(ring, r),
        &PolyMatrix::zero(ring, 0, rp),
        &PolyMatrix::zero(ring, 0, r),
    );
    let inclusion = MFMorphism::new(y, &object, incl.clone(), incl)?;
    let projection = MFMorphism::new(&object, &shift(x), proj.clone(), proj)?;
    Ok(Cone {
        object,
        inclusion,
        projection,
    })
}

/// `K(x) ⊗ X`, realized as the cone of multiplication by `x`.
pub fn koszul_tensor(x: &MatrixFactorization, elt: &Polynomial) -> MatrixFactorization {
    cone(&mult_morphism(x, elt))
        .expect("multiplication maps commute")
        .object
}

/// `K(x) ⊗ φ`: `(diag(φ0, φ1), diag(φ1, φ0))`.
pub fn koszul_morphism(phi: &MFMorphism, elt: &Polynomial) -> MFMorphism {
    let ring = phi.source.ring();
    MFMorphism {
        source: koszul_tensor(&phi.source, elt),
        target: koszul_tensor(&phi.target, elt),
        alpha0: PolyMatrix::block_diag(ring, &[&phi.alpha0, &phi.alpha1]),
        alpha1: PolyMatrix::block_diag(ring, &[&phi.alpha1, &phi.alpha0]),
    }
}

/// Homotopy for `K(x) ⊗ φ` from one for `φ`.
pub fn koszul_homotopy(h: &Homotopy) -> Homotopy {
    let ring = h.s.ring().clone();
    Homotopy {
        s: PolyMatrix::block_diag(&ring, &[&h.s, &h.t.neg()]),
        t: PolyMatrix::block_diag(&ring, &[&h.t, &h.s.neg()]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn setup() -> (Arc<PolyRing>, impl Fn(&str) -> Polynomial) {
        let r = PolyRing::rational(&["x"]);
        let rr = r.clone();
        (r, move |s: &str| parse_polynomial(s, &rr).unwrap())
    }

    #[test]
    fn validation() {
        let (_, p) = setup();
        let f = p("x^3");
        assert!(MatrixFactorization::rank_one(&f, &p("x"), &p("x^2")).is_ok());
        assert!(matches!(
            MatrixFactorization::rank_one(&f, &p("x"), &p("x")),
            Err(MfError::Invalid(_))
        ));
        let r = f.ring();
        let bad = MatrixFactorization::new(
            f.clone(),
            PolyMatrix::identity(r, 2),
            PolyMatrix::identity(r, 1),
        );
        assert!(matches!(bad, Err(MfError::Shape(_))));
    }

    #[test]
    fn shift_and_sums() {
        let (_, p) = setup();
        let f = p("x^3");
        let x = MatrixFactorization::rank_one(&f, &p("x"), &p("x^2")).unwrap();
        let s = shift(&x);
        assert_eq!(s.a().to_string(), "[[-x^2]]");
        assert_eq!(s.b().to_string(), "[[-x]]");
        assert!(s.validate());
        assert_eq!(shift(&s), x);

        let y = MatrixFactorization::rank_one(&f, &p("x^2"), &p("x")).unwrap();
        let sum = direct_sum(&x, &y).unwrap();
        assert_eq!(sum.rank(), 2);
        assert!(sum.validate());
        assert_eq!(
            direct_sum(&x, &MatrixFactorization::zero_object(&f)).unwrap(),
            x
        );

        let g = MatrixFactorization::rank_one(&p("x^2"), &p("x"), &p("x")).unwrap();
        assert_eq!(direct_sum(&x, &g).unwrap_err(), MfError::PotentialMismatch);
    }

    #[test]
    fn cones() {
        let (_, p) = setup();
        let f = p("x^3");
        let x = MatrixFactorization::rank_one(&f, &p("x^2"), &p("x")).unwrap();
        let c = cone(&mult_morphism(&x, &p("x"))).unwrap();
        assert!(c.object.validate());
        assert_eq!(c.object.rank(), 2);
        assert!(c.inclusion.is_valid());
        assert!(c.projection.is_valid());
        assert!(c.projection.after(&c.inclusion).unwrap().alpha0().is_zero());
        assert_eq!(c.object, koszul_tensor(&x, &p("x")));

        let zero = MFMorphism::zero(&x, &x).unwrap();
        assert_eq!(
            cone(&zero).unwrap().object,
            direct_sum(&x, &shift(&x)).unwrap()
        );
    }

    #[test]
    fn potential_is_nullhomotopic_by_b() {
        let (_, p) = setup();
        let f = p("x^3");
        let x = MatrixFactorization::rank_one(&f, &p("x^2"), &p("x")).unwrap();
        let phi = mult_morphism(&x, &f);
        let h = Homotopy {
            s: x.b().clone(),
            t: PolyMatrix::zero(f.ring(), 1, 1),
        };
        assert!(h.verify(&phi));
        assert!(h.shifted().verify(&phi.shifted()));
        let k = koszul_morphism(&phi, &p("x"));
        assert!(k.is_valid());
        assert!(koszul_homotopy(&h).verify(&k));
    }
}
