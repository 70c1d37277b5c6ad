//! Conversion between Dynnikov coordinates and triangle coordinates.

use serde::{Deserialize, Serialize};

use crate::coords::{pos, validate, DynnikovCoordinates, TriangleCoordinates};
use crate::error::{ck, Error, Result};

/// Intermediate quantities of the inversion: `X`, `Y`, the unshifted `beta*`
/// and the uniform shift `R = max(0, 2 c_2 - beta*_{n+1})`.
///
/// Every `beta_i` is `beta*_i + R`. `R` is the smallest even shift that leaves
/// room for `c_2` core loops at the second crosscap; any larger shift would add
/// boundary-parallel components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InversionIntermediates {
    pub x: i64,
    pub y: i64,
    pub beta_star: Vec<i64>,
    pub r: i64,
    /// Straight core components at the first crosscap.
    pub psi: i64,
}

/// Number of straight core components, `max(c1^+ - |b_n|, 0)`.
pub fn straight_cores(c1: i64, b_n: i64) -> Result<i64> {
    Ok(pos(ck::sub(pos(c1), ck::abs(b_n)?)?))
}

pub fn intermediates(coords: &DynnikovCoordinates) -> Result<InversionIntermediates> {
    let v = validate(coords)?;
    let n = v.n;

    // X = 2 max_r { |a_r| + b_r^+ + sum_{j<r} b_j }
    let mut prefix = 0i64;
    let mut best: Option<i64> = None;
    for r in 1..n {
        let term = ck::add(ck::add(ck::abs(v.a_at(r))?, pos(v.b_at(r)))?, prefix)?;
        best = Some(best.map_or(term, |m| m.max(term)));
        prefix = ck::add(prefix, v.b_at(r))?;
    }
    let x = ck::mul(2, best.expect("n >= 2 gives a nonempty range"))?;

    let psi = straight_cores(v.c[0], v.b_at(n))?;
    // after the loop, prefix = sum_{j=1}^{n-1} b_j
    let y = ck::add(
        ck::add(ck::abs(v.t)?, ck::mul(2, pos(v.b_at(n)))?)?,
        ck::add(psi, ck::mul(2, prefix)?)?,
    )?;

    let top = x.max(y);
    let mut beta_star = Vec::with_capacity(n + 1);
    let mut sum = 0i64;
    for i in 1..=n + 1 {
        beta_star.push(ck::sub(top, ck::mul(2, sum)?)?);
        if i <= n {
            sum = ck::add(sum, v.b_at(i))?;
        }
    }
    let r = pos(ck::sub(ck::mul(2, v.c[1])?, beta_star[n])?);
    Ok(InversionIntermediates {
        x,
        y,
        beta_star,
        r,
        psi,
    })
}

/// Whether the vector lies in the image of the triangle-coordinate encoding.
///
/// Counting endpoints on `beta_n` forces `A' + B' + psi` to be even, so `t`
/// and `psi` must share parity. Vectors failing this are valid inputs to
/// [`validate`] but invert to half-integral counts.
pub fn is_realizable(coords: &DynnikovCoordinates) -> Result<bool> {
    let v = validate(coords)?;
    let psi = straight_cores(v.c[0], v.b_at(v.n))?;
    Ok((v.t - psi).rem_euclid(2) == 0)
}

/// Recovers the triangle coordinates of the multicurve with the given
/// Dynnikov coordinates.
///
/// Fails with [`Error::Unrealizable`] when `t` and `psi` differ in parity:
/// the formulas then produce an odd `beta` (so half-integral `alpha`) or an
/// odd `gamma`.
pub fn invert(coords: &DynnikovCoordinates) -> Result<TriangleCoordinates> {
    let im = intermediates(coords)?;
    let v = coords;
    let n = v.n;

    let beta: Vec<i64> = im
        .beta_star
        .iter()
        .map(|&b| ck::add(b, im.r))
        .collect::<Result<_>>()?;

    if !is_realizable(v)? {
        return Err(Error::Unrealizable(format!(
            "t = {} and psi = {} differ in parity (max(X, Y) = {})",
            v.t,
            im.psi,
            im.x.max(im.y)
        )));
    }
    debug_assert!(beta.iter().all(|b| b % 2 == 0));

    let beta_at = |i: usize| beta[i - 1];
    let mut alpha = Vec::with_capacity(2 * n - 2);
    for i in 1..=2 * n - 2 {
        let k = i.div_ceil(2);
        let signed_a = if i % 2 == 0 {
            v.a_at(k)
        } else {
            ck::neg(v.a_at(k))?
        };
        let half_beta = if v.b_at(k) >= 0 {
            beta_at(k) / 2
        } else {
            beta_at(k + 1) / 2
        };
        alpha.push(ck::add(signed_a, half_beta)?);
    }

    // gamma = 2(A' + |b_n| + psi) with 2A' = t - psi + max(beta_n, beta_{n+1}) - 2|b_n|
    let b_n = ck::abs(v.b_at(n))?;
    let widest = beta_at(n).max(beta_at(n + 1));
    let twice_a_prime = ck::sub(ck::add(ck::sub(v.t, im.psi)?, widest)?, ck::mul(2, b_n)?)?;
    let gamma = ck::add(twice_a_prime, ck::mul(2, ck::add(b_n, im.psi)?)?)?;

    Ok(TriangleCoordinates {
        n,
        alpha,
        beta,
        gamma,
        c: v.c,
    })
}

/// Dynnikov coordinates of a triangle-coordinate vector.
///
/// `t` is recovered as `gamma - psi - max(beta_n, beta_{n+1})`, which follows
/// from `gamma = 2(A' + |b_n| + psi)` and `A' + B' = max(beta_n, beta_{n+1}) - psi - 2|b_n|`.
pub fn coordinatize(tri: &TriangleCoordinates) -> Result<DynnikovCoordinates> {
    tri.check_shape()
        .map_err(|e| Error::InconsistentTriangle(e.to_string()))?;
    let n = tri.n;
    let inconsistent = |msg: String| Error::InconsistentTriangle(msg);

    let a: Vec<i64> = (1..n)
        .map(|i| Ok(ck::sub(tri.alpha_at(2 * i), tri.alpha_at(2 * i - 1))? / 2))
        .collect::<Result<_>>()?;
    let b: Vec<i64> = (1..=n)
        .map(|i| Ok(ck::sub(tri.beta_at(i), tri.beta_at(i + 1))? / 2))
        .collect::<Result<_>>()?;

    for i in 1..n {
        let loops = b[i - 1].abs();
        if tri.alpha_at(2 * i - 1) < loops || tri.alpha_at(2 * i) < loops {
            return Err(inconsistent(format!(
                "alpha_{} or alpha_{} is smaller than |b_{i}| = {loops}",
                2 * i - 1,
                2 * i
            )));
        }
    }

    let b_n = b[n - 1].abs();
    let psi = straight_cores(tri.c[0], b[n - 1])?;
    let widest = tri.beta_at(n).max(tri.beta_at(n + 1));
    let half_gamma = tri.gamma / 2;
    // A' = gamma/2 - psi - |b_n| and B' = max(beta_n, beta_{n+1}) - |b_n| - gamma/2
    if ck::sub(ck::sub(half_gamma, psi)?, b_n)? < 0
        || ck::sub(ck::sub(widest, b_n)?, half_gamma)? < 0
    {
        return Err(inconsistent(format!(
            "gamma = {} leaves a negative above/below count at the first crosscap",
            tri.gamma
        )));
    }
    let t = ck::sub(ck::sub(tri.gamma, psi)?, widest)?;

    let coords = DynnikovCoordinates {
        n,
        a,
        b,
        t,
        c: tri.c,
    };
    validate(&coords).map_err(|e| inconsistent(e.to_string()))?;
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::parse_coords;

    fn tri(alpha: &[i64], beta: &[i64], gamma: i64, c: [i64; 2]) -> TriangleCoordinates {
        TriangleCoordinates {
            n: beta.len() - 1,
            alpha: alpha.to_vec(),
            beta: beta.to_vec(),
            gamma,
            c,
        }
    }

    #[test]
    fn example_with_two_straight_cores() {
        let v = parse_coords("(2; 1,0; -2; 2,0)", 2).unwrap();
        assert_eq!(invert(&v).unwrap(), tri(&[1, 5], &[6, 4, 4], 4, [2, 0]));
        let im = intermediates(&v).unwrap();
        assert_eq!((im.x, im.y, im.r, im.psi), (6, 6, 0, 2));
    }

    #[test]
    fn final_worked_example() {
        let v = parse_coords("(-1; 1,0; 1; 1,1)", 2).unwrap();
        assert_eq!(invert(&v).unwrap(), tri(&[3, 1], &[4, 2, 2], 4, [1, 1]));
    }

    #[test]
    fn curve_around_both_crosscaps() {
        // X = 0, Y = 0, beta* = (0, 0, 2), R = 0, A' = 0, gamma = 2(0 + 1 + 0)
        let v = parse_coords("(0; 0,-1; 0; 0,0)", 2).unwrap();
        assert_eq!(invert(&v).unwrap(), tri(&[0, 0], &[0, 0, 2], 2, [0, 0]));
    }

    #[test]
    fn shift_makes_room_for_core_loops() {
        // beta* = (0, 0, 0) but c2 = 2 needs two core loops at the second crosscap
        let v = parse_coords("(0; 0,0; 0; 0,2)", 2).unwrap();
        let im = intermediates(&v).unwrap();
        assert_eq!(im.r, 4);
        assert_eq!(invert(&v).unwrap().beta, vec![4, 4, 4]);
    }

    #[test]
    fn coordinatize_examples() {
        assert_eq!(
            coordinatize(&tri(&[1, 5], &[6, 4, 4], 4, [2, 0])).unwrap(),
            parse_coords("(2; 1,0; -2; 2,0)", 2).unwrap()
        );
        assert_eq!(
            coordinatize(&tri(&[3, 1], &[4, 2, 2], 4, [1, 1])).unwrap(),
            parse_coords("(-1; 1,0; 1; 1,1)", 2).unwrap()
        );
        assert_eq!(
            coordinatize(&tri(&[0, 0], &[0, 0, 0], 0, [-1, 0])).unwrap(),
            parse_coords("(0; 0,0; 0; -1,0)", 2).unwrap()
        );
    }

    #[test]
    fn coordinatize_rejects_parity_and_negativity() {
        assert!(matches!(
            coordinatize(&tri(&[1, 5], &[6, 3, 4], 4, [2, 0])),
            Err(Error::InconsistentTriangle(_))
        ));
        assert!(matches!(
            coordinatize(&tri(&[1, 5], &[6, 4, 4], 5, [2, 0])),
            Err(Error::InconsistentTriangle(_))
        ));
        // gamma too large: B' < 0
        assert!(matches!(
            coordinatize(&tri(&[1, 5], &[6, 4, 4], 12, [2, 0])),
            Err(Error::InconsistentTriangle(_))
        ));
    }

    #[test]
    fn parity_mismatch_is_unrealizable() {
        let v = parse_coords("(0; 0,0; 1; 0,0)", 2).unwrap();
        assert!(!is_realizable(&v).unwrap());
        assert!(matches!(invert(&v), Err(Error::Unrealizable(_))));
        // X dominates: beta stays even but gamma would be odd
        let v = parse_coords("(2; 0,0; 1; 0,0)", 2).unwrap();
        assert!(matches!(invert(&v), Err(Error::Unrealizable(_))));
    }

    #[test]
    fn overflow_is_reported() {
        let v = DynnikovCoordinates::new(2, vec![i64::MAX], vec![0, 0], 0, [0, 0]);
        assert_eq!(invert(&v), Err(Error::Overflow));
    }

    #[test]
    fn zero_vector_rejected() {
        let v = DynnikovCoordinates::new(2, vec![0], vec![0, 0], 0, [0, 0]);
        assert_eq!(invert(&v), Err(Error::ZeroVector));
    }
}
