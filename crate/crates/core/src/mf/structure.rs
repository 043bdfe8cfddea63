//! Splittings of Koszul tensors by stable annihilators: `K(x)⊗X ≃ X ⊕ X[1]`,
//! the triangle `K(x)⊗X → K(xy)⊗X → K(y)⊗X`, and the binomial decomposition
//! of `K(x_1, …, x_n)⊗X`.

use serde::Serialize;

use crate::error::MfError;
use crate::poly::Polynomial;

use super::certificate::{permutation_iso, EquivalenceCertificate};
use super::solve::{is_homotopy_equivalence, is_nullhomotopic};
use super::{
    direct_sum, direct_sum_all, koszul_tensor, mult_morphism, shift, Homotopy, MFMorphism,
    MatrixFactorization, PolyMatrix,
};

fn annihilating_homotopy(x: &MatrixFactorization, elt: &Polynomial) -> Result<Homotopy, MfError> {
    is_nullhomotopic(&mult_morphism(x, elt))?
        .ok_or_else(|| MfError::NotAnnihilating(elt.to_string()))
}

/// Certificate `K(x)⊗X ≃ X ⊕ X[1]` built from a homotopy `h` for
/// multiplication by `x`: the inverse map is `([[I, −t], [0, I]], [[I, −s], [0, I]])`.
pub fn koszul_split_from(
    x: &MatrixFactorization,
    elt: &Polynomial,
    h: &Homotopy,
) -> Result<EquivalenceCertificate, MfError> {
    if !h.verify(&mult_morphism(x, elt)) {
        return Err(MfError::NotAnnihilating(elt.to_string()));
    }
    let ring = x.ring();
    let r = x.rank();
    let id = PolyMatrix::identity(ring, r);
    let zero = PolyMatrix::zero(ring, r, r);
    let k = koszul_tensor(x, elt);
    let split = direct_sum(x, &shift(x))?;
    let upper = |m: &PolyMatrix| PolyMatrix::block(&id, m, &zero, &id);
    let into_k = MFMorphism::new(&split, &k, upper(&h.t.neg()), upper(&h.s.neg()))?;
    let out_of_k = MFMorphism::new(&k, &split, upper(&h.t), upper(&h.s))?;
    EquivalenceCertificate::strict(out_of_k, into_k)
}

/// `K(x)⊗X ≃ X ⊕ X[1]`, provided `x` acts as zero on `X` up to homotopy.
pub fn verify_koszul_split(
    x: &MatrixFactorization,
    elt: &Polynomial,
) -> Result<KoszulSplit, MfError> {
    let homotopy = annihilating_homotopy(x, elt)?;
    let certificate = koszul_split_from(x, elt, &homotopy)?;
    Ok(KoszulSplit {
        homotopy,
        certificate,
    })
}

#[derive(Clone, Debug)]
pub struct KoszulSplit {
    /// Null-homotopy of multiplication by the element.
    pub homotopy: Homotopy,
    /// `K(x)⊗X → X ⊕ X[1]`.
    pub certificate: EquivalenceCertificate,
}

/// The triangle `K(x)⊗X →u K(xy)⊗X →v K(y)⊗X` with `u = diag(y, 1)`,
/// `v = diag(1, x)` and `v∘u` null-homotopic.
#[derive(Clone, Debug)]
pub struct ProductTriangle {
    pub left: MatrixFactorization,
    pub middle: MatrixFactorization,
    pub right: MatrixFactorization,
    pub u: MFMorphism,
    pub v: MFMorphism,
    /// Null-homotopy of `v∘u`.
    pub composite: Homotopy,
    /// `K(xy)⊗X ≃ X ⊕ X[1]`.
    pub splitting: EquivalenceCertificate,
    /// `cone(u) ≃ K(y)⊗X` through `v`, when requested.
    pub exactness: Option<EquivalenceCertificate>,
}

impl ProductTriangle {
    /// Re-expands every identity carried by the triangle.
    pub fn check(&self) -> Result<(), MfError> {
        if !self.u.is_valid() || !self.v.is_valid() {
            return Err(MfError::Certificate(
                "triangle maps are not morphisms".into(),
            ));
        }
        if !self.composite.verify(&self.v.after(&self.u)?) {
            return Err(MfError::Certificate("composite homotopy".into()));
        }
        self.splitting.check()?;
        if let Some(e) = &self.exactness {
            e.check()?;
        }
        Ok(())
    }
}

/// Builds the product triangle for `x·y`. With `check_exactness` the map
/// `cone(u) → K(y)⊗X` induced by the homotopy is also shown to be an
/// equivalence through the exact solver.
pub fn split_product_triangle(
    x: &MatrixFactorization,
    ex: &Polynomial,
    ey: &Polynomial,
    check_exactness: bool,
) -> Result<ProductTriangle, MfError> {
    let prod = ex * ey;
    let homotopy = annihilating_homotopy(x, &prod)?;
    let splitting = koszul_split_from(x, &prod, &homotopy)?;

    let ring = x.ring();
    let r = x.rank();
    let id = PolyMatrix::identity(ring, r);
    let left = koszul_tensor(x, ex);
    let middle = koszul_tensor(x, &prod);
    let right = koszul_tensor(x, ey);
    let diag = |a: &Polynomial, b: &Polynomial| {
        PolyMatrix::block_diag(ring, &[&id.scale(a), &id.scale(b)])
    };
    let one = Polynomial::one(ring);
    let u = MFMorphism::new(&left, &middle, diag(ey, &one), diag(ey, &one))?;
    let v = MFMorphism::new(&middle, &right, diag(&one, ex), diag(&one, ex))?;
    let lower = PolyMatrix::block(
        &PolyMatrix::zero(ring, r, r),
        &PolyMatrix::zero(ring, r, r),
        &id,
        &PolyMatrix::zero(ring, r, r),
    );
    let composite = Homotopy {
        s: lower.clone(),
        t: lower,
    };

    let exactness =
        if check_exactness {
            let c = super::cone(&u)?;
            let w0 = PolyMatrix::block(
                v.alpha0(),
                &composite.t,
                &PolyMatrix::zero(ring, 0, 2 * r),
                &PolyMatrix::zero(ring, 0, 2 * r),
            );
            let w1 = PolyMatrix::block(
                v.alpha1(),
                &composite.s,
                &PolyMatrix::zero(ring, 0, 2 * r),
                &PolyMatrix::zero(ring, 0, 2 * r),
            );
            let w = MFMorphism::new(&c.object, &right, w0, w1)?;
            Some(is_homotopy_equivalence(&w)?.ok_or_else(|| {
                MfError::Certificate("cone(u) is not equivalent to K(y)⊗X".into())
            })?)
        } else {
            None
        };

    let t = ProductTriangle {
        left,
        middle,
        right,
        u,
        v,
        composite,
        splitting,
        exactness,
    };
    t.check()?;
    Ok(t)
}

/// One summand `X[shift]` of a decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct Summand {
    pub shift: usize,
    pub rank: usize,
}

#[derive(Clone, Debug)]
pub struct KoszulBinomial {
    /// `K(x_1, …, x_n)⊗X`, tensoring with `x_1` first.
    pub tensor: MatrixFactorization,
    /// Summands in order of shift.
    pub summands: Vec<Summand>,
    /// Number of summands with shift `i`, for `i = 0..=n`.
    pub multiplicities: Vec<usize>,
    /// `tensor → ⊕ X[shift]`.
    pub certificate: EquivalenceCertificate,
}

/// `K(x_1, …, x_n)⊗X ≃ ⊕_i X[i]^(n choose i)`, built by splitting one
/// Koszul factor at a time.
pub fn verify_koszul_binomial(
    x: &MatrixFactorization,
    elts: &[Polynomial],
) -> Result<KoszulBinomial, MfError> {
    let homotopies: Vec<Homotopy> = elts
        .iter()
        .map(|e| annihilating_homotopy(x, e))
        .collect::<Result<_, _>>()?;
    let f = x.potential();
    let shifted = shift(x);
    let object = |i: usize| if i.is_multiple_of(2) { x } else { &shifted };

    let mut tensor = x.clone();
    let mut labels: Vec<usize> = vec![0];
    let mut cert = EquivalenceCertificate::identity(x);
    for (e, h) in elts.iter().zip(&homotopies) {
        tensor = koszul_tensor(&tensor, e);
        let lifted = cert.koszul(e);

        // K⊗(⊕Y_j) → ⊕(K⊗Y_j)
        let ranks: Vec<usize> = labels.iter().map(|&i| object(i).rank()).collect();
        let total: usize = ranks.iter().sum();
        let mut perm = vec![0; 2 * total];
        let mut offset = 0;
        for &rj in &ranks {
            for k in 0..rj {
                perm[offset + k] = 2 * offset + k;
                perm[total + offset + k] = 2 * offset + rj + k;
            }
            offset += rj;
        }
        let regroup = permutation_iso(lifted.target(), &perm, &perm)?;

        // split each K⊗Y_j using the shifted homotopy
        let splits: Vec<EquivalenceCertificate> = labels
            .iter()
            .map(|&i| {
                let hi = if i % 2 == 0 { h.clone() } else { h.shifted() };
                koszul_split_from(object(i), e, &hi)
            })
            .collect::<Result<_, _>>()?;
        let split_refs: Vec<&EquivalenceCertificate> = splits.iter().collect();
        let split_sum = EquivalenceCertificate::direct_sum(f, &split_refs)?;

        // sort the new summands by shift, stably
        let new_labels: Vec<usize> = labels.iter().flat_map(|&i| [i, i + 1]).collect();
        let mut order: Vec<usize> = (0..new_labels.len()).collect();
        order.sort_by_key(|&k| new_labels[k]);
        let r = x.rank();
        let mut sort_perm = vec![0; new_labels.len() * r];
        for (pos, &k) in order.iter().enumerate() {
            for q in 0..r {
                sort_perm[k * r + q] = pos * r + q;
            }
        }
        let sorter = permutation_iso(split_sum.target(), &sort_perm, &sort_perm)?;

        cert = lifted.then(&regroup)?.then(&split_sum)?.then(&sorter)?;
        labels = order.iter().map(|&k| new_labels[k]).collect();
    }

    let parts: Vec<&MatrixFactorization> = labels.iter().map(|&i| object(i)).collect();
    if cert.target() != &direct_sum_all(f, &parts)? || cert.source() != &tensor {
        return Err(MfError::Certificate(
            "binomial decomposition has the wrong endpoints".into(),
        ));
    }
    cert.check()?;
    let mut multiplicities = vec![0; elts.len() + 1];
    for &i in &labels {
        multiplicities[i] += 1;
    }
    Ok(KoszulBinomial {
        tensor,
        summands: labels
            .iter()
            .map(|&i| Summand {
                shift: i,
                rank: object(i).rank(),
            })
            .collect(),
        multiplicities,
        certificate: cert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    fn setup() -> (
        impl Fn(&str) -> Polynomial,
        MatrixFactorization,
        MatrixFactorization,
    ) {
        let r = PolyRing::rational(&["x"]);
        let p = move |s: &str| parse_polynomial(s, &r).unwrap();
        let f = p("x^3");
        let a = MatrixFactorization::rank_one(&f, &p("x^2"), &p("x")).unwrap();
        let b = MatrixFactorization::rank_one(&f, &p("x"), &p("x^2")).unwrap();
        (p, a, b)
    }

    #[test]
    fn koszul_split_cases() {
        let (p, a, b) = setup();
        let s = verify_koszul_split(&a, &p("x")).unwrap();
        assert!(s.certificate.verify());
        assert_eq!(s.certificate.source().rank(), 2);
        assert_eq!(s.certificate.target(), &direct_sum(&a, &shift(&a)).unwrap());

        let s = verify_koszul_split(&b, &p("x")).unwrap();
        assert!(s.certificate.verify());

        // x = 0: the cone is literally the sum and the maps are identities
        let s = verify_koszul_split(&a, &p("0")).unwrap();
        assert_eq!(s.certificate.source(), s.certificate.target());
        assert_eq!(
            s.certificate.forward(),
            &MFMorphism::identity(s.certificate.source())
        );

        assert!(matches!(
            verify_koszul_split(&b, &p("1")),
            Err(MfError::NotAnnihilating(_))
        ));
    }

    #[test]
    fn constructed_split_is_an_equivalence_by_the_solver() {
        let (p, a, _) = setup();
        let s = verify_koszul_split(&a, &p("x")).unwrap();
        let c = is_homotopy_equivalence(s.certificate.forward()).unwrap();
        assert!(c.is_some_and(|c| c.verify()));
    }

    #[test]
    fn product_triangle() {
        let (p, a, b) = setup();
        let t = split_product_triangle(&a, &p("x"), &p("x"), true).unwrap();
        assert!(t.check().is_ok());
        assert!(t.exactness.is_some());
        assert_eq!(t.splitting.target().rank(), 2);

        // the potential annihilates everything
        let t = split_product_triangle(&b, &p("x"), &p("x^2"), false).unwrap();
        assert!(t.check().is_ok());

        // x = 1 makes the left term contractible
        let t = split_product_triangle(&a, &p("1"), &p("x"), true).unwrap();
        assert!(is_nullhomotopic(&MFMorphism::identity(&t.left))
            .unwrap()
            .is_some());

        assert!(split_product_triangle(&b, &p("1"), &p("1"), false).is_err());
    }

    #[test]
    fn binomial() {
        let (p, a, _) = setup();
        let none = verify_koszul_binomial(&a, &[]).unwrap();
        assert_eq!(none.multiplicities, [1]);
        let one = verify_koszul_binomial(&a, &[p("x")]).unwrap();
        assert_eq!(one.multiplicities, [1, 1]);
        let two = verify_koszul_binomial(&a, &[p("x"), p("x")]).unwrap();
        assert_eq!(two.multiplicities, [1, 2, 1]);
        assert_eq!(two.tensor.rank(), 4);
        assert!(two.certificate.verify());
        let solver = is_homotopy_equivalence(two.certificate.forward()).unwrap();
        assert!(solver.is_some_and(|c| c.verify()));
        let three = verify_koszul_binomial(&a, &[p("x"), p("x^2"), p("x")]).unwrap();
        assert_eq!(three.multiplicities, [1, 3, 3, 1]);
        assert_eq!(three.tensor.rank(), 8);
    }
}
