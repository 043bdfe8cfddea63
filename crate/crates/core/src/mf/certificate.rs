//! Homotopy equivalences with explicit certificates, and the operations
//! that build new certificates from old ones.

use crate::error::MfError;
use crate::poly::Polynomial;

use super::{
    direct_sum_all, koszul_homotopy, koszul_morphism, Homotopy, MFMorphism, MatrixFactorization,
    PolyMatrix,
};

/// `φ: X → Y` and `ψ: Y → X` with homotopies for `ψφ − id` and `φψ − id`.
#[derive(Clone, Debug)]
pub struct EquivalenceCertificate {
    forward: MFMorphism,
    backward: MFMorphism,
    back_after_forward: Homotopy,
    forward_after_back: Homotopy,
}

impl EquivalenceCertificate {
    pub fn new(
        forward: MFMorphism,
        backward: MFMorphism,
        back_after_forward: Homotopy,
        forward_after_back: Homotopy,
    ) -> Self {
        EquivalenceCertificate {
            forward,
            backward,
            back_after_forward,
            forward_after_back,
        }
    }

    pub fn forward(&self) -> &MFMorphism {
        &self.forward
    }

    pub fn backward(&self) -> &MFMorphism {
        &self.backward
    }

    pub fn back_after_forward(&self) -> &Homotopy {
        &self.back_after_forward
    }

    pub fn forward_after_back(&self) -> &Homotopy {
        &self.forward_after_back
    }

    pub fn source(&self) -> &MatrixFactorization {
        self.forward.source()
    }

    pub fn target(&self) -> &MatrixFactorization {
        self.forward.target()
    }

    /// Re-checks both morphisms and both homotopies by matrix expansion.
    pub fn check(&self) -> Result<(), MfError> {
        let fail = |what: &str| Err(MfError::Certificate(what.into()));
        if self.forward.source() != self.backward.target()
            || self.forward.target() != self.backward.source()
        {
            return fail("forward and backward maps are not opposite");
        }
        if !self.forward.is_valid() {
            return fail("forward map is not a morphism");
        }
        if !self.backward.is_valid() {
            return fail("backward map is not a morphism");
        }
        let x = self.source();
        let y = self.target();
        let bf = self
            .backward
            .after(&self.forward)?
            .sub(&MFMorphism::identity(x))?;
        if !self.back_after_forward.verify(&bf) {
            return fail("homotopy for backward after forward");
        }
        let fb = self
            .forward
            .after(&self.backward)?
            .sub(&MFMorphism::identity(y))?;
        if !self.forward_after_back.verify(&fb) {
            return fail("homotopy for forward after backward");
        }
        Ok(())
    }

    pub fn verify(&self) -> bool {
        self.check().is_ok()
    }

    pub fn identity(x: &MatrixFactorization) -> Self {
        let id = MFMorphism::identity(x);
        let h = Homotopy::zero(&id);
        EquivalenceCertificate::new(id.clone(), id, h.clone(), h)
    }

    /// Certificate for a strict isomorphism `forward` with `backward ∘ forward = id`
    /// and `forward ∘ backward = id`.
    pub fn strict(forward: MFMorphism, backward: MFMorphism) -> Result<Self, MfError> {
        let h0 = Homotopy::zero(&MFMorphism::identity(forward.source()));
        let h1 = Homotopy::zero(&MFMorphism::identity(forward.target()));
        let cert = EquivalenceCertificate::new(forward, backward, h0, h1);
        cert.check()?;
        Ok(cert)
    }

    pub fn inverse(&self) -> Self {
        EquivalenceCertificate::new(
            self.backward.clone(),
            self.forward.clone(),
            self.forward_after_back.clone(),
            self.back_after_forward.clone(),
        )
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &EquivalenceCertificate) -> Result<Self, MfError> {
        let forward = next.forward.after(&self.forward)?;
        let backward = self.backward.after(&next.backward)?;
        // ψ1ψ2φ2φ1 − id = ψ1(ψ2φ2 − id)φ1 + (ψ1φ1 − id)
        let bf = next
            .back_after_forward
            .conjugate(&self.backward, &self.forward)
            .add(&self.back_after_forward);
        let fb = self
            .forward_after_back
            .conjugate(&next.forward, &next.backward)
            .add(&next.forward_after_back);
        Ok(EquivalenceCertificate::new(forward, backward, bf, fb))
    }

    /// Block-diagonal sum of certificates.
    pub fn direct_sum(
        potential: &Polynomial,
        parts: &[&EquivalenceCertificate],
    ) -> Result<Self, MfError> {
        let ring = potential.ring();
        let sources: Vec<&MatrixFactorization> = parts.iter().map(|c| c.source()).collect();
        let targets: Vec<&MatrixFactorization> = parts.iter().map(|c| c.target()).collect();
        let x = direct_sum_all(potential, &sources)?;
        let y = direct_sum_all(potential, &targets)?;
        let diag = |f: &dyn Fn(&EquivalenceCertificate) -> &PolyMatrix| {
            let blocks: Vec<&PolyMatrix> = parts.iter().map(|c| f(c)).collect();
            PolyMatrix::block_diag(ring, &blocks)
        };
        let forward = MFMorphism::new(
            &x,
            &y,
            diag(&|c| c.forward.alpha0()),
            diag(&|c| c.forward.alpha1()),
        )?;
        let backward = MFMorphism::new(
            &y,
            &x,
            diag(&|c| c.backward.alpha0()),
            diag(&|c| c.backward.alpha1()),
        )?;
        let bf = Homotopy {
            s: diag(&|c| &c.back_after_forward.s),
            t: diag(&|c| &c.back_after_forward.t),
        };
        let fb = Homotopy {
            s: diag(&|c| &c.forward_after_back.s),
            t: diag(&|c| &c.forward_after_back.t),
        };
        Ok(EquivalenceCertificate::new(forward, backward, bf, fb))
    }

    /// Image under `K(x) ⊗ −`.
    pub fn koszul(&self, elt: &Polynomial) -> Self {
        EquivalenceCertificate::new(
            koszul_morphism(&self.forward, elt),
            koszul_morphism(&self.backward, elt),
            koszul_homotopy(&self.back_after_forward),
            koszul_homotopy(&self.forward_after_back),
        )
    }

    /// Image under the shift.
    pub fn shifted(&self) -> Self {
        EquivalenceCertificate::new(
            self.forward.shifted(),
            self.backward.shifted(),
            self.back_after_forward.shifted(),
            self.forward_after_back.shifted(),
        )
    }
}

/// Reorders bases by `perm0` on `F0` and `perm1` on `F1` (basis vector `p`
/// goes to position `perm[p]`); the target is `(P0 A P1ᵀ, P1 B P0ᵀ)`.
pub(crate) fn permutation_iso(
    x: &MatrixFactorization,
    perm0: &[usize],
    perm1: &[usize],
) -> Result<EquivalenceCertificate, MfError> {
    let ring = x.ring();
    let p0 = PolyMatrix::permutation(ring, perm0);
    let p1 = PolyMatrix::permutation(ring, perm1);
    let y = MatrixFactorization::new(
        x.potential().clone(),
        p0.mul(x.a()).mul(&p1.transpose()),
        p1.mul(x.b()).mul(&p0.transpose()),
    )?;
    let forward = MFMorphism::new(x, &y, p0.clone(), p1.clone())?;
    let backward = MFMorphism::new(&y, x, p0.transpose(), p1.transpose())?;
    EquivalenceCertificate::strict(forward, backward)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::{cone, is_homotopy_equivalence};
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    #[test]
    fn algebra_of_certificates() {
        let r = PolyRing::rational(&["x"]);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let f = p("x^3");
        let x = MatrixFactorization::rank_one(&f, &p("x^2"), &p("x")).unwrap();
        let y = MatrixFactorization::rank_one(&f, &p("x"), &p("x^2")).unwrap();

        let contractible = cone(&MFMorphism::identity(&x)).unwrap().object;
        let sum = crate::mf::direct_sum(&y, &contractible).unwrap();
        let incl = PolyMatrix::block(
            &PolyMatrix::identity(&r, 1),
            &PolyMatrix::zero(&r, 1, 0),
            &PolyMatrix::zero(&r, 2, 1),
            &PolyMatrix::zero(&r, 2, 0),
        );
        let phi = MFMorphism::new(&y, &sum, incl.clone(), incl).unwrap();
        let c = is_homotopy_equivalence(&phi).unwrap().unwrap();
        assert!(c.inverse().verify());
        assert!(c.shifted().verify());
        assert!(c.koszul(&p("x")).verify());
        assert!(c.then(&c.inverse()).unwrap().verify());

        let both =
            EquivalenceCertificate::direct_sum(&f, &[&c, &EquivalenceCertificate::identity(&x)])
                .unwrap();
        assert!(both.verify());
        assert_eq!(both.target().rank(), 4);

        let swap = permutation_iso(&both.target().clone(), &[3, 2, 1, 0], &[1, 0, 3, 2]).unwrap();
        assert!(both.then(&swap).unwrap().verify());
    }
}
