use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Polynomial;

/// Positive integer weights making every polynomial weighted homogeneous,
/// if a small search over the solution space finds one.
///
/// A `None` answer does not prove that no such weights exist; callers fall
/// back to a slower exact procedure in that case.
pub fn quasi_homogeneous_weights(polys: &[Polynomial]) -> Option<Vec<u64>> {
    let n = polys.first().map(|p| p.ring().nvars())?;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for p in polys {
        let Some((first, _)) = p.terms().first() else {
            continue;
        };
        for (m, _) in &p.terms()[1..] {
            rows.push(
                m.exps()
                    .iter()
                    .zip(first.exps())
                    .map(|(&a, &b)| BigRational::from_integer(BigInt::from(a as i64 - b as i64)))
                    .collect(),
            );
        }
    }
    let basis = nullspace(rows, n);
    if basis.is_empty() {
        return (n == 0).then(Vec::new);
    }
    let k = basis.len();
    let span: u32 = if k <= 5 { 3 } else { 1 };
    let total = (span as usize).pow(k as u32);
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(k);
        let mut rest = idx;
        for _ in 0..k {
            coeffs.push(BigRational::from_integer(BigInt::from(
                (rest % span as usize) + 1,
            )));
            rest /= span as usize;
        }
        let mut w = vec![BigRational::zero(); n];
        for (c, v) in coeffs.iter().zip(&basis) {
            for (wi, vi) in w.iter_mut().zip(v) {
                *wi += c * vi;
            }
        }
        if let Some(ints) = integral_positive(&w) {
            if polys.iter().all(|p| p.is_weighted_homogeneous(&ints)) {
                return Some(ints);
            }
        }
    }
    None
}

fn integral_positive(w: &[BigRational]) -> Option<Vec<u64>> {
    if !w.iter().all(|x| x.is_positive()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in w {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = w.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |g, x| num_integer::gcd(g, x.clone()));
    ints.iter().map(|x| (x / &g).to_u64()).collect()
}

/// Basis of `{ v : rows · v = 0 }` via reduced row echelon form.
fn nullspace(mut rows: Vec<Vec<BigRational>>, n: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial_list;
    use crate::poly::PolyRing;

    #[test]
    fn finds_weights() {
        let r = PolyRing::rational(&["x", "y"]);
        let polys = parse_polynomial_list("x^4 - y^5, x^3, y^4", &r).unwrap();
        assert_eq!(quasi_homogeneous_weights(&polys), Some(vec![5, 4]));

        let s = PolyRing::rational(&["x", "y", "z", "w"]);
        let polys = parse_polynomial_list("x^3 + y^3 + x*y*z + w^2", &s).unwrap();
        let w = quasi_homogeneous_weights(&polys).unwrap();
        assert!(polys[0].is_weighted_homogeneous(&w));
    }

    #[test]
    fn rejects_mixed_degrees() {
        let r = PolyRing::rational(&["x", "y"]);
        let polys = parse_polynomial_list("x^2 - x^3", &r).unwrap();
        assert_eq!(quasi_homogeneous_weights(&polys), None);
        let polys = parse_polynomial_list("x + 1", &r).unwrap();
        assert_eq!(quasi_homogeneous_weights(&polys), None);
    }
}
