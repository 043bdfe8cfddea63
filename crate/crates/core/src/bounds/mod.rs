//! Upper bounds for the dimension of the singularity category, from
//! annihilator data, quotient dimensions, Loewy lengths and multiplicities.

mod report;

use crate::error::BoundsError;
use crate::groebner::Length;

pub use report::{
    best_bound_report, Annotation, Best, Bound, BoundReport, BoundsConfig, Candidate, Hypothesis,
    HypothesisStatus, Subideal,
};

/// `Σ_i a_i · (m / m_i)` with `m = Π m_i`, i.e. `m (a_1/m_1 + … + a_n/m_n)`.
pub fn omega(m: &[u64], a: &[u64]) -> Result<u64, BoundsError> {
    if m.len() != a.len() {
        return Err(BoundsError::LengthMismatch(m.len(), a.len()));
    }
    if let Some(i) = m.iter().position(|&mi| mi == 0) {
        return Err(BoundsError::NonPositiveExponent(i + 1));
    }
    if a.iter().all(|&ai| ai == 0) {
        return Err(BoundsError::AllZeroExponents);
    }
    let total = m
        .iter()
        .try_fold(1u64, |acc, &mi| acc.checked_mul(mi))
        .ok_or(BoundsError::Overflow)?;
    m.iter().zip(a).try_fold(0u64, |acc, (&mi, &ai)| {
        (total / mi)
            .checked_mul(ai)
            .and_then(|t| acc.checked_add(t))
            .ok_or(BoundsError::Overflow)
    })
}

/// `Σ d_i + n − 1` for elements whose product annihilates, given the
/// dimensions `d_i` of the quotients by each element.
pub fn sum_over_quotients_bound(d: &[Option<u32>]) -> Result<u64, BoundsError> {
    if d.is_empty() {
        return Err(BoundsError::Hypothesis(
            "at least one element is required".into(),
        ));
    }
    let mut sum = 0u64;
    for di in d {
        sum += u64::from(di.ok_or(BoundsError::UnknownDimension)?);
    }
    Ok(sum + d.len() as u64 - 1)
}

/// `ω (d + 1) − 1` for a regular sequence with annihilating powers.
pub fn regular_sequence_bound(omega: u64, d: u32) -> Result<u64, BoundsError> {
    if omega == 0 {
        return Err(BoundsError::Hypothesis("omega must be positive".into()));
    }
    omega
        .checked_mul(u64::from(d) + 1)
        .map(|v| v - 1)
        .ok_or(BoundsError::Overflow)
}

/// `α (d + 1) − 1` where `x^α` annihilates and `d = dim D_sg(R/xR)`.
pub fn annihilator_exponent_bound(alpha: Option<u32>, d: u32) -> Result<u64, BoundsError> {
    match alpha {
        None => Err(BoundsError::NotFound(0)),
        Some(0) => Err(BoundsError::NonPositiveExponent(1)),
        Some(a) => regular_sequence_bound(u64::from(a), d),
    }
}

/// `e − 2` for `x_0^e + f` with `f` a simple singularity in the other variables.
pub fn leading_power_bound(e: u32) -> Result<u64, BoundsError> {
    if e < 2 {
        return Err(BoundsError::Hypothesis(
            "the exponent must be at least 2".into(),
        ));
    }
    Ok(u64::from(e) - 2)
}

/// `2 ℓℓ(R/J) − 1`.
pub fn loewy_comparison_bound(loewy: Length) -> Result<u64, BoundsError> {
    match loewy {
        Length::Infinite => Err(BoundsError::Infinite),
        Length::Finite(0) => Err(BoundsError::Hypothesis("R/J is the zero ring".into())),
        Length::Finite(n) => n.checked_mul(2).map(|v| v - 1).ok_or(BoundsError::Overflow),
    }
}

/// `e(J) − 1`.
pub fn multiplicity_comparison_bound(e: u64) -> Result<u64, BoundsError> {
    if e == 0 {
        return Err(BoundsError::Hypothesis(
            "multiplicity must be positive".into(),
        ));
    }
    Ok(e - 1)
}
