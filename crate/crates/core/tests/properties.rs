mod common;

use proptest::prelude::*;

use sgdim_core::bounds::{omega, regular_sequence_bound, sum_over_quotients_bound};
use sgdim_core::groebner::{buchberger, ideal_member, module_groebner, module_member};
use sgdim_core::mf::{
    cone, direct_sum, is_nullhomotopic, mult_morphism, shift, stable_annihilator_probe,
    MatrixFactorization,
};
use sgdim_core::{parse_polynomial, Field, Ideal, MonomialOrder, PolyRing, Polynomial};

use common::*;

const CASES: u32 = 200;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn ring_axioms(a in terms(3, 4, 4), b in terms(3, 4, 4), c in terms(3, 4, 4), p in prop::sample::select(vec![0u32, 2, 7, 101])) {
        let ring = if p == 0 { qq3() } else { PolyRing::new(Field::prime(p).unwrap(), vec!["x".into(), "y".into(), "z".into()]).unwrap() };
        let (a, b, c) = (build(&ring, &a), build(&ring, &b), build(&ring, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&ring), a.clone());
    }

    #[test]
    fn leibniz_rule(a in terms(3, 4, 4), b in terms(3, 4, 4), v in 0usize..3) {
        let ring = qq3();
        let (a, b) = (build(&ring, &a), build(&ring, &b));
        let lhs = (&a * &b).partial_derivative(v).unwrap();
        let rhs = &(&a.partial_derivative(v).unwrap() * &b) + &(&a * &b.partial_derivative(v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn printed_polynomials_reparse(a in terms(3, 4, 5), p in prop::sample::select(vec![0u32, 5])) {
        let ring = if p == 0 { qq3() } else { PolyRing::new(Field::prime(p).unwrap(), vec!["x".into(), "y".into(), "z".into()]).unwrap() };
        let a = build(&ring, &a);
        let q = a.scale(&ring.field().from_ratio(&2.into(), &3.into()).unwrap_or_else(|_| ring.field().one()));
        prop_assert_eq!(parse_polynomial(&a.to_string(), &ring).unwrap(), a);
        prop_assert_eq!(parse_polynomial(&q.to_string(), &ring).unwrap(), q);
    }

    #[test]
    fn normal_form_matches_division(
        gens in prop::collection::vec(nonzero_terms(3, 4, 3), 1..=3),
        f in terms(3, 4, 5),
    ) {
        let ring = qq3();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&ring, g)).collect();
        let ideal = Ideal::new(&ring, gens.clone()).unwrap();
        let gb = buchberger(&ideal, &MonomialOrder::grevlex());
        let f = build(&ring, &f);
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(&nf, &divide(&f, gb.basis()));
        let leads = gb.leading_monomials();
        for (m, _) in nf.terms() {
            prop_assert!(!leads.iter().any(|l| l.divides(m)));
        }
        let (member, cert) = ideal_member(&(&f - &nf), &ideal, true).unwrap();
        prop_assert!(member);
        prop_assert!(cert.unwrap().verify(ideal.generators()));
        for g in &gens {
            prop_assert!(gb.normal_form(g).unwrap().is_zero());
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(gens in prop::collection::vec(nonzero_terms(3, 3, 3), 2..=3)) {
        let ring = qq3();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&ring, g)).collect();
        let mut rev = gens.clone();
        rev.reverse();
        let a = buchberger(&Ideal::new(&ring, gens).unwrap(), &MonomialOrder::grevlex());
        let b = buchberger(&Ideal::new(&ring, rev).unwrap(), &MonomialOrder::grevlex());
        prop_assert_eq!(sorted_strings(a.basis()), sorted_strings(b.basis()));
    }

    #[test]
    fn module_certificates_expand(
        gens in prop::collection::vec(prop::collection::vec(terms(2, 3, 3), 2), 1..=3),
        coeffs in prop::collection::vec(terms(2, 2, 2), 3),
    ) {
        let ring = qq2();
        let gens: Vec<Vec<Polynomial>> = gens.iter().map(|g| g.iter().map(|t| build(&ring, t)).collect()).collect();
        let mut v = vec![Polynomial::zero(&ring); 2];
        for (g, c) in gens.iter().zip(&coeffs) {
            let c = build(&ring, c);
            for i in 0..2 {
                v[i] = &v[i] + &(&c * &g[i]);
            }
        }
        let (member, cert) = module_member(&v, &gens).unwrap();
        prop_assert!(member);
        let cert = cert.unwrap();
        let mut back = vec![Polynomial::zero(&ring); 2];
        for (g, c) in gens.iter().zip(&cert) {
            for i in 0..2 {
                back[i] = &back[i] + &(c * &g[i]);
            }
        }
        prop_assert_eq!(back, v.clone());
        prop_assert!(module_groebner(&ring, 2, &gens).unwrap().contains(&v).unwrap());
    }

    #[test]
    fn omega_of_a_single_full_exponent(m in prop::collection::vec(1u64..=9, 1..=4)) {
        let mut a = vec![0; m.len()];
        a[0] = m[0];
        prop_assert_eq!(omega(&m, &a).unwrap(), m.iter().product::<u64>());
    }

    #[test]
    fn bounds_are_monotone(w in 1u64..50, d in 0u32..10, ds in prop::collection::vec(0u32..5, 1..4)) {
        prop_assert!(regular_sequence_bound(w, d).unwrap() <= regular_sequence_bound(w + 1, d).unwrap());
        prop_assert!(regular_sequence_bound(w, d).unwrap() <= regular_sequence_bound(w, d + 1).unwrap());
        let d0: Vec<Option<u32>> = ds.iter().map(|&x| Some(x)).collect();
        let mut d1 = d0.clone();
        d1[0] = d1[0].map(|x| x + 1);
        prop_assert!(sum_over_quotients_bound(&d0).unwrap() < sum_over_quotients_bound(&d1).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn solver_is_linear(
        (a, b) in factor_pair(),
        s1 in prop::collection::vec(terms(2, 1, 2), 4), t1 in prop::collection::vec(terms(2, 1, 2), 4),
        s2 in prop::collection::vec(terms(2, 1, 2), 4), t2 in prop::collection::vec(terms(2, 1, 2), 4),
        g in terms(2, 1, 2),
    ) {
        let x = factorization(&a, &b);
        let p = null_morphism(&x, &s1, &t1);
        let q = null_morphism(&x, &s2, &t2);
        let g = build(x.ring(), &g);
        for phi in [p.clone(), p.add(&q).unwrap(), p.scale(&g)] {
            prop_assert!(phi.is_valid());
            let h = is_nullhomotopic(&phi).unwrap();
            prop_assert!(h.is_some_and(|h| h.verify(&phi)));
        }
    }

    #[test]
    fn constructions_stay_factorizations((a, b) in factor_pair(), g in terms(2, 2, 3)) {
        let x = factorization(&a, &b);
        let g = build(x.ring(), &g);
        prop_assert!(x.validate());
        prop_assert!(shift(&x).validate());
        prop_assert!(direct_sum(&x, &shift(&x)).unwrap().validate());
        let c = cone(&mult_morphism(&x, &g)).unwrap();
        prop_assert!(c.object.validate());
        prop_assert!(c.inclusion.is_valid() && c.projection.is_valid());
    }

    #[test]
    fn potential_acts_as_zero((a, b) in factor_pair()) {
        let x = factorization(&a, &b);
        let phi = mult_morphism(&x, x.potential());
        let h = is_nullhomotopic(&phi).unwrap();
        prop_assert!(h.is_some_and(|h| h.verify(&phi)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn probe_hits_form_an_ideal_of_monomials(e in 2u32..=5, k in 1u32..=4) {
        prop_assume!(k < e);
        let ring = PolyRing::rational(&["x"]);
        let xv = Polynomial::var(&ring, 0);
        let x = MatrixFactorization::rank_one(&xv.pow(e), &xv.pow(k), &xv.pow(e - k)).unwrap();
        let hits: Vec<String> = stable_annihilator_probe(&x, e).unwrap().iter().map(|(m, _)| m.to_string()).collect();
        // x^j acts as zero on (x^k, x^(e-k)) exactly when j >= min(k, e-k)
        let expected: Vec<String> = (k.min(e - k)..=e).map(|j| xv.pow(j).to_string()).collect();
        prop_assert_eq!(hits, expected);
    }
}
