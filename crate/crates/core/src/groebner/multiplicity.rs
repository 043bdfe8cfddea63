//! Hilbert-Samuel multiplicity, by fitting lengths and via reductions.

use serde::Serialize;

use crate::error::{GroebnerError, PolyError};
use crate::poly::{MonomialOrder, Polynomial};

use super::length::{krull_dimension, Length, LocalIdeal, Semantics};
use super::{buchberger, Ideal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityConfig {
    /// Largest `n` for which `ℓ(R/I^(n+1))` is computed.
    pub cap: usize,
    /// Consecutive equal finite differences required.
    pub window: usize,
    /// Largest `k` tried when verifying `I^(k+1) = Q I^k`.
    pub reduction_cap: usize,
}

impl Default for MultiplicityConfig {
    fn default() -> Self {
        MultiplicityConfig {
            cap: 12,
            window: 3,
            reduction_cap: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    pub value: u64,
    pub dimension: usize,
    /// `ℓ(R/I^(n+1))` for `n = 0, 1, ...` as far as computed.
    pub lengths: Vec<u64>,
    pub semantics: Semantics,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionMultiplicity {
    /// `ℓ(R/Q)`.
    pub value: u64,
    /// Least `k` with `I^(k+1) = Q I^k`.
    pub reduction_exponent: usize,
    pub semantics: Semantics,
}

fn binomial(n: usize, k: usize) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Reduced generators of `prev * gens + relations`.
fn next_power(
    prev: &[Polynomial],
    gens: &[Polynomial],
    relations: &Ideal,
) -> Result<Vec<Polynomial>, PolyError> {
    let mut out = relations.generators().to_vec();
    for a in prev {
        for b in gens {
            out.push(a.checked_mul(b)?);
        }
    }
    let ideal = Ideal::new(relations.ring(), out)?;
    Ok(buchberger(&ideal, &MonomialOrder::grevlex())
        .basis()
        .to_vec())
}

fn local_length(gens: &[Polynomial], relations: &Ideal) -> Result<(u64, Semantics), GroebnerError> {
    let ideal = relations.with_generators(gens)?;
    let local = LocalIdeal::new(&ideal)?;
    match local.length() {
        Length::Finite(n) => Ok((n, local.semantics())),
        Length::Infinite => Err(GroebnerError::NotMPrimary),
    }
}

/// `e(I)` on `R = S/relations`: the `d`-th finite difference of
/// `n ↦ ℓ(R/I^(n+1))` once it repeats `window` times.
pub fn hilbert_samuel_multiplicity(
    relations: &Ideal,
    ideal: &Ideal,
    config: &MultiplicityConfig,
) -> Result<Multiplicity, GroebnerError> {
    if !relations.ring().same_ambient(ideal.ring()) {
        return Err(PolyError::AmbientMismatch.into());
    }
    let d = krull_dimension(relations)?;
    if !ideal.is_in_maximal() {
        return Err(GroebnerError::NotMPrimary);
    }
    let gens = ideal.generators().to_vec();
    let mut power = next_power(&[Polynomial::one(ideal.ring())], &gens, relations)?;
    let mut lengths: Vec<u64> = Vec::new();
    let mut diffs: Vec<i128> = Vec::new();
    let mut semantics = Semantics::GradedExact;
    for n in 0..=config.cap {
        let (len, sem) = local_length(&power, relations)?;
        semantics = semantics.combine(sem);
        lengths.push(len);
        if n >= d {
            let diff: i128 = (0..=d)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d, k) * lengths[n - k] as i128
                })
                .sum();
            diffs.push(diff);
            let w = config.window.max(1);
            if diffs.len() >= w {
                let tail = &diffs[diffs.len() - w..];
                if tail[0] > 0 && tail.iter().all(|&x| x == tail[0]) {
                    return Ok(Multiplicity {
                        value: tail[0] as u64,
                        dimension: d,
                        lengths,
                        semantics,
                    });
                }
            }
        }
        if n < config.cap {
            power = next_power(&power, &gens, relations)?;
        }
    }
    Err(GroebnerError::NoStabilization {
        cap: config.cap,
        lengths,
    })
}

/// `e(I) = ℓ(R/Q)` for a parameter reduction `Q ⊆ I` of a Cohen-Macaulay
/// ring, after checking `I^(k+1) = Q I^k` for some `k ≤ reduction_cap`.
pub fn multiplicity_via_reduction(
    relations: &Ideal,
    ideal: &Ideal,
    reduction: &Ideal,
    cohen_macaulay: bool,
    config: &MultiplicityConfig,
) -> Result<ReductionMultiplicity, GroebnerError> {
    if !relations.ring().same_ambient(ideal.ring()) || !ideal.ring().same_ambient(reduction.ring())
    {
        return Err(PolyError::AmbientMismatch.into());
    }
    if !cohen_macaulay {
        return Err(GroebnerError::CohenMacaulayNotAsserted);
    }
    let d = krull_dimension(relations)?;
    let q = reduction.generators().to_vec();
    if q.len() != d {
        return Err(GroebnerError::WrongGeneratorCount {
            expected: d,
            found: q.len(),
        });
    }
    let base = LocalIdeal::new(&relations.sum(ideal)?)?;
    for g in &q {
        if !base.contains(g)? {
            return Err(GroebnerError::NotContained);
        }
    }
    let (value, mut semantics) = local_length(&q, relations)?;
    let gens = ideal.generators().to_vec();
    // power holds reduced generators of I^k + relations
    let mut power = vec![Polynomial::one(ideal.ring())];
    for k in 0..=config.reduction_cap {
        let big = next_power(&power, &gens, relations)?;
        let small = next_power(&power, &q, relations)?;
        let small_local = LocalIdeal::new(&relations.with_generators(&small)?)?;
        let mut equal = true;
        for g in &big {
            if !small_local.contains(g)? {
                equal = false;
                break;
            }
        }
        if equal {
            semantics = semantics.combine(small_local.semantics());
            return Ok(ReductionMultiplicity {
                value,
                reduction_exponent: k,
                semantics,
            });
        }
        power = big;
    }
    Err(GroebnerError::ReductionNotVerified {
        cap: config.reduction_cap,
    })
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
    fn curve_multiplicity() {
        let r = PolyRing::rational(&["x", "y"]);
        let rel = ideal(&r, "x^4 - y^5");
        let j = ideal(&r, "x^3, y^4");
        let cfg = MultiplicityConfig::default();
        let m = hilbert_samuel_multiplicity(&rel, &j, &cfg).unwrap();
        assert_eq!((m.value, m.dimension), (15, 1));
        let red = multiplicity_via_reduction(&rel, &j, &ideal(&r, "x^3"), true, &cfg).unwrap();
        assert_eq!((red.value, red.reduction_exponent), (15, 3));
    }

    #[test]
    fn reduction_failures() {
        let r = PolyRing::rational(&["x", "y"]);
        let rel = ideal(&r, "x^4 - y^5");
        let j = ideal(&r, "x^3, y^4");
        let cfg = MultiplicityConfig::default();
        assert_eq!(
            multiplicity_via_reduction(&rel, &j, &ideal(&r, "x^4"), true, &cfg).unwrap_err(),
            GroebnerError::ReductionNotVerified { cap: 10 }
        );
        assert_eq!(
            multiplicity_via_reduction(&rel, &j, &ideal(&r, "x^3"), false, &cfg).unwrap_err(),
            GroebnerError::CohenMacaulayNotAsserted
        );
        assert_eq!(
            multiplicity_via_reduction(&rel, &j, &ideal(&r, "x^3, y^4"), true, &cfg).unwrap_err(),
            GroebnerError::WrongGeneratorCount {
                expected: 1,
                found: 2
            }
        );
        assert_eq!(
            multiplicity_via_reduction(&rel, &j, &ideal(&r, "x^2"), true, &cfg).unwrap_err(),
            GroebnerError::NotContained
        );
    }

    #[test]
    fn trivial_reduction() {
        let r = PolyRing::rational(&["x", "y"]);
        let rel = ideal(&r, "x^4 - y^5");
        let q = ideal(&r, "x^3");
        let red =
            multiplicity_via_reduction(&rel, &q, &q, true, &MultiplicityConfig::default()).unwrap();
        assert_eq!((red.value, red.reduction_exponent), (15, 0));
    }

    #[test]
    fn artinian_and_regular() {
        let r = PolyRing::rational(&["x", "y"]);
        let cfg = MultiplicityConfig::default();
        let art = ideal(&r, "x^2, y^3");
        let m = hilbert_samuel_multiplicity(&art, &Ideal::maximal(&r), &cfg).unwrap();
        assert_eq!((m.value, m.dimension), (6, 0));

        let free = Ideal::zero(&r);
        let m = hilbert_samuel_multiplicity(&free, &ideal(&r, "x^2, y^3"), &cfg).unwrap();
        assert_eq!(m.value, 6);
    }

    #[test]
    fn rejects_non_primary() {
        let r = PolyRing::rational(&["x", "y"]);
        let err = hilbert_samuel_multiplicity(
            &Ideal::zero(&r),
            &ideal(&r, "x"),
            &MultiplicityConfig::default(),
        )
        .unwrap_err();
        assert_eq!(err, GroebnerError::NotMPrimary);
    }
}
