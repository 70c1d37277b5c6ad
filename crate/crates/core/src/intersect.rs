//! Elementary curves and their intersection numbers with a multicurve.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::components::{profile, ComponentProfile};
use crate::coords::{validate, DynnikovCoordinates, SurfaceSpec, TriangleCoordinates};
use crate::error::{Error, Result};
use crate::inversion::invert;
use crate::large::{large_left, large_over_under, large_right, RegionRange};

/// Curves with fixed coordinates on `K_n`.
///
/// `Cij(i, j)` bounds a disk around punctures `i..=j`. `Cprime1(i)` and
/// `Cprime2(i)` surround punctures `i..=n` together with the first crosscap,
/// or with both. `C` surrounds both crosscaps and `D` passes once through
/// each. `Core(k)` and `Bounding(k)` are the non-primitive curves at
/// crosscap `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ElementaryCurve {
    Cij(usize, usize),
    Cprime1(usize),
    Cprime2(usize),
    C,
    D,
    Core(usize),
    Bounding(usize),
}

impl ElementaryCurve {
    pub fn check(self, n: usize) -> Result<()> {
        SurfaceSpec::new(n)?;
        let ok = match self {
            ElementaryCurve::Cij(i, j) => 1 <= i && i < j && j <= n,
            ElementaryCurve::Cprime1(i) => 1 <= i && i <= n,
            ElementaryCurve::Cprime2(i) => 1 < i && i <= n,
            ElementaryCurve::C | ElementaryCurve::D => true,
            ElementaryCurve::Core(k) | ElementaryCurve::Bounding(k) => k == 1 || k == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parameter(format!("{self} is not a curve on K_{n}")))
        }
    }

    pub fn has_formula(self) -> bool {
        !matches!(
            self,
            ElementaryCurve::Core(_) | ElementaryCurve::Bounding(_)
        )
    }
}

impl fmt::Display for ElementaryCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryCurve::Cij(i, j) => write!(f, "Cij:{i},{j}"),
            ElementaryCurve::Cprime1(i) => write!(f, "Cprime1:{i}"),
            ElementaryCurve::Cprime2(i) => write!(f, "Cprime2:{i}"),
            ElementaryCurve::C => write!(f, "C"),
            ElementaryCurve::D => write!(f, "D"),
            ElementaryCurve::Core(k) => write!(f, "Core:{k}"),
            ElementaryCurve::Bounding(k) => write!(f, "Bounding:{k}"),
        }
    }
}

impl FromStr for ElementaryCurve {
    type Err = Error;

    /// Parses the `Display` form, e.g. `Cij:2,3`, `Cprime2:2`, `D`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("unrecognised curve '{s}'"));
        let (kind, args) = match s.trim().split_once(':') {
            Some((k, a)) => (k.trim(), Some(a)),
            None => (s.trim(), None),
        };
        let nums: Vec<usize> = match args {
            Some(a) => a
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        Ok(match (kind, nums.as_slice()) {
            ("Cij", &[i, j]) => ElementaryCurve::Cij(i, j),
            ("Cprime1", &[i]) => ElementaryCurve::Cprime1(i),
            ("Cprime2", &[i]) => ElementaryCurve::Cprime2(i),
            ("C", &[]) => ElementaryCurve::C,
            ("D", &[]) => ElementaryCurve::D,
            ("Core", &[k]) => ElementaryCurve::Core(k),
            ("Bounding", &[k]) => ElementaryCurve::Bounding(k),
            _ => return Err(bad()),
        })
    }
}

/// Every elementary curve on `K_n` that has an intersection formula.
pub fn catalog(n: usize) -> Vec<ElementaryCurve> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(ElementaryCurve::Cij(i, j));
        }
    }
    out.extend((1..=n).map(ElementaryCurve::Cprime1));
    out.extend((2..=n).map(ElementaryCurve::Cprime2));
    out.push(ElementaryCurve::C);
    out.push(ElementaryCurve::D);
    out
}

/// Coordinates of an elementary curve.
pub fn elementary_coords(curve: ElementaryCurve, n: usize) -> Result<DynnikovCoordinates> {
    curve.check(n)?;
    let mut b = vec![0; n];
    let mut c = [0; 2];
    let mut set = |i: usize, v: i64| b[i - 1] = v;
    match curve {
        ElementaryCurve::Cij(i, j) => {
            if i > 1 {
                set(i - 1, -1);
            }
            set(j - 1, 1);
        }
        ElementaryCurve::Cprime1(i) => {
            if i > 1 {
                set(i - 1, -1);
            }
            set(n, 1);
        }
        ElementaryCurve::Cprime2(i) => set(i - 1, -1),
        ElementaryCurve::C => set(n, -1),
        ElementaryCurve::D => {
            set(n, -1);
            c = [1, 1];
        }
        ElementaryCurve::Core(k) => c[k - 1] = -1,
        ElementaryCurve::Bounding(k) => c[k - 1] = -2,
    }
    Ok(DynnikovCoordinates::new(n, vec![0; n - 1], b, 0, c))
}

/// Which closed form gives the intersection number with `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DFormula {
    /// `max(i(L, C) - c_1 - c_2, |c_1 - c_2|)`.
    Corrected,
    /// `|c_1 - c_2|` if the multicurve misses `C`, else `i(L, C) - c_1 - c_2`.
    /// Goes negative when the multicurve has components parallel to `D`.
    Unadjusted,
}

fn prepared(coords: &DynnikovCoordinates) -> Result<(TriangleCoordinates, ComponentProfile)> {
    validate(coords)?;
    if coords.c.iter().any(|&c| c < 0) {
        return Err(Error::NonprimitiveContent);
    }
    let tri = invert(coords)?;
    let p = profile(&tri)?;
    Ok((tri, p))
}

/// Geometric intersection number of the multicurve with an elementary curve.
pub fn intersect_elementary(coords: &DynnikovCoordinates, curve: ElementaryCurve) -> Result<i64> {
    intersect_with(coords, curve, DFormula::Corrected)
}

pub fn intersect_with(
    coords: &DynnikovCoordinates,
    curve: ElementaryCurve,
    form: DFormula,
) -> Result<i64> {
    if !curve.has_formula() {
        return Err(Error::UnsupportedCurve(curve.to_string()));
    }
    curve.check(coords.n)?;
    let (tri, p) = prepared(coords)?;
    from_profile(&tri, &p, curve, form)
}

fn beta_or_zero(tri: &TriangleCoordinates, i: usize) -> i64 {
    if i == 0 {
        0
    } else {
        tri.beta_at(i)
    }
}

fn from_profile(
    tri: &TriangleCoordinates,
    p: &ComponentProfile,
    curve: ElementaryCurve,
    form: DFormula,
) -> Result<i64> {
    let n = p.n;
    let all_large = |range: RegionRange| -> Result<i64> {
        let (a, b) = large_over_under(p, range)?;
        Ok(a + b + large_right(p, range)? + large_left(p, range)?)
    };
    Ok(match curve {
        ElementaryCurve::Cij(i, j) => {
            let range = RegionRange::Plain { l: i - 1, m: j - 1 };
            beta_or_zero(tri, i - 1) + tri.beta_at(j) - 2 * all_large(range)?
        }
        ElementaryCurve::Cprime1(i) => {
            let range = RegionRange::Crosscap1 { l: i - 1 };
            beta_or_zero(tri, i - 1) + tri.beta_at(n + 1) - 2 * all_large(range)?
        }
        ElementaryCurve::Cprime2(i) => {
            tri.beta_at(i - 1) - 2 * large_right(p, RegionRange::Crosscap2 { l: i - 1 })?
        }
        ElementaryCurve::C => tri.beta_at(n) - 2 * large_right(p, RegionRange::Crosscap2 { l: n })?,
        ElementaryCurve::D => {
            let with_c = from_profile(tri, p, ElementaryCurve::C, form)?;
            let [c1, c2] = tri.c;
            let unadjusted = if with_c == 0 {
                (c1 - c2).abs()
            } else {
                with_c - c1 - c2
            };
            match form {
                DFormula::Unadjusted => unadjusted,
                DFormula::Corrected => (with_c - c1 - c2).max((c1 - c2).abs()),
            }
        }
        ElementaryCurve::Core(_) | ElementaryCurve::Bounding(_) => {
            return Err(Error::UnsupportedCurve(curve.to_string()))
        }
    })
}

/// Intersection numbers with every curve of [`catalog`].
pub fn intersect_all(coords: &DynnikovCoordinates) -> Result<Vec<(ElementaryCurve, i64)>> {
    let (tri, p) = prepared(coords)?;
    catalog(coords.n)
        .into_iter()
        .map(|e| Ok((e, from_profile(&tri, &p, e, DFormula::Corrected)?)))
        .collect()
}
