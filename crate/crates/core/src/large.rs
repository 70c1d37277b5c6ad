//! Large path components over a range of consecutive regions.
//!
//! `S_{l,m}` is `S_l ∪ .. ∪ S_m`; `S'_{l,1}` adds `S_{n-1}`'s right
//! neighbour `S'_1`, and `S'_{l,2}` adds `S'_2` as well. A component is large
//! in a range when it can be isotoped off the elementary curve surrounding
//! that range: it runs entirely above or entirely below the diameter, or it
//! is a loop whose legs do so.
//!
//! Minima over an empty set of regions are `+∞`, which makes the
//! single-region cases fall out of the general formulas.

use serde::{Deserialize, Serialize};

use crate::components::ComponentProfile;
use crate::coords::pos;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionRange {
    /// `S_{l,m}`: `l = 0` or `1 <= l <= m`, and `m <= n - 1`.
    Plain { l: usize, m: usize },
    /// `S'_{l,1}`, `0 <= l <= n`.
    Crosscap1 { l: usize },
    /// `S'_{l,2}`, `0 <= l <= n`.
    Crosscap2 { l: usize },
}

impl RegionRange {
    pub fn check(self, n: usize) -> Result<()> {
        let ok = match self {
            RegionRange::Plain { l, m } => m < n && l <= m,
            RegionRange::Crosscap1 { l } | RegionRange::Crosscap2 { l } => l <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Range(format!(
                "{self} is not a region range for n = {n}"
            )))
        }
    }

    pub fn l(self) -> usize {
        match self {
            RegionRange::Plain { l, .. }
            | RegionRange::Crosscap1 { l }
            | RegionRange::Crosscap2 { l } => l,
        }
    }
}

impl std::fmt::Display for RegionRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegionRange::Plain { l, m } => write!(f, "S_{{{l},{m}}}"),
            RegionRange::Crosscap1 { l } => write!(f, "S'_{{{l},1}}"),
            RegionRange::Crosscap2 { l } => write!(f, "S'_{{{l},2}}"),
        }
    }
}

/// Large counts for `S_{l,m}`, `S'_{l,1}` and `S'_{l,2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LargeComponentCounts {
    pub l: usize,
    pub m: usize,
    pub a_lm: i64,
    pub b_lm: i64,
    pub ap_l1: i64,
    pub bp_l1: i64,
    pub r_lm: i64,
    pub rp_l1: i64,
    pub rp_l2: i64,
    pub l_lm: i64,
    pub lp_l1: i64,
}

fn min_over(l: usize, m: usize, f: impl Fn(usize) -> i64) -> Option<i64> {
    if l == 0 {
        return Some(0);
    }
    (l..=m).map(f).min()
}

/// `(A_{l,m}, B_{l,m})` with `None` for an empty range.
fn plain_min(p: &ComponentProfile, l: usize, m: usize) -> (Option<i64>, Option<i64>) {
    (
        min_over(l, m, |k| p.region(k).above),
        min_over(l, m, |k| p.region(k).below),
    )
}

/// `(A'_{l,1}, B'_{l,1})`.
fn primed_min(p: &ComponentProfile, l: usize) -> (i64, i64) {
    let n = p.n;
    let (a, b) = plain_min(p, l, n - 1);
    let x = &p.crosscap1;
    (
        a.map_or(x.above, |a| a.min(x.above)),
        b.map_or(x.below, |b| b.min(x.below)),
    )
}

fn gap(wider: Option<i64>, narrower: i64) -> Option<i64> {
    wider.map(|w| w - narrower)
}

fn min3(x: Option<i64>, y: Option<i64>, cap: i64) -> i64 {
    pos([x, y].into_iter().flatten().fold(cap, i64::min))
}

/// Large over and under counts. `S'_{l,2}` has none.
pub fn large_over_under(p: &ComponentProfile, range: RegionRange) -> Result<(i64, i64)> {
    range.check(p.n)?;
    match range {
        RegionRange::Plain { l, m } => {
            let (a, b) = plain_min(p, l, m);
            Ok((a.unwrap_or(0), b.unwrap_or(0)))
        }
        RegionRange::Crosscap1 { l: 0 } | RegionRange::Crosscap2 { .. } => Ok((0, 0)),
        RegionRange::Crosscap1 { l } => Ok(primed_min(p, l)),
    }
}

/// Large right loops: both ends on `beta_l`, turning at the right end of the
/// range.
pub fn large_right(p: &ComponentProfile, range: RegionRange) -> Result<i64> {
    range.check(p.n)?;
    let n = p.n;
    Ok(match range {
        _ if range.l() == 0 => 0,
        RegionRange::Plain { l, m } => {
            let (a, b) = plain_min(p, l, m);
            let (wa, wb) = plain_min(p, l, m - 1);
            let (a, b) = (a.unwrap_or(0), b.unwrap_or(0));
            min3(gap(wa, a), gap(wb, b), pos(p.b_at(m)))
        }
        RegionRange::Crosscap1 { l } => {
            let (a, b) = primed_min(p, l);
            let (wa, wb) = plain_min(p, l, n - 1);
            min3(gap(wa, a), gap(wb, b), p.crosscap1.right_noncore_loops())
        }
        RegionRange::Crosscap2 { l } => {
            let (a, b) = primed_min(p, l);
            min3(Some(a), Some(b), p.crosscap2.noncore_loops)
        }
    })
}

/// Large left loops: both ends on the right arc of the range, turning at
/// its left end. `S'_{l,2}` has none, and `S'_{n,1}` has no puncture to
/// turn around.
pub fn large_left(p: &ComponentProfile, range: RegionRange) -> Result<i64> {
    range.check(p.n)?;
    let n = p.n;
    let turn = |l: usize| {
        if l == 0 {
            p.s0_loops
        } else {
            pos(-p.b_at(l))
        }
    };
    Ok(match range {
        RegionRange::Plain { l, m } => {
            let (a, b) = plain_min(p, l, m);
            let (a, b) = (a.unwrap_or(0), b.unwrap_or(0));
            let (na, nb) = plain_min(p, l + 1, m);
            min3(gap(na, a), gap(nb, b), turn(l))
        }
        RegionRange::Crosscap1 { l } if l == n => {
            return Err(Error::Range(format!(
                "{range} has no puncture for a left loop to surround"
            )))
        }
        RegionRange::Crosscap1 { l } => {
            let (a, b) = if l == 0 { (0, 0) } else { primed_min(p, l) };
            let (na, nb) = primed_min(p, l + 1);
            min3(Some(na - a), Some(nb - b), turn(l))
        }
        RegionRange::Crosscap2 { .. } => 0,
    })
}

/// Every large count for `S_{l,m}`, `S'_{l,1}` and `S'_{l,2}`.
pub fn large_counts(p: &ComponentProfile, l: usize, m: usize) -> Result<LargeComponentCounts> {
    let plain = RegionRange::Plain { l, m };
    let one = RegionRange::Crosscap1 { l };
    let two = RegionRange::Crosscap2 { l };
    let (a_lm, b_lm) = large_over_under(p, plain)?;
    let (ap_l1, bp_l1) = large_over_under(p, one)?;
    Ok(LargeComponentCounts {
        l,
        m,
        a_lm,
        b_lm,
        ap_l1,
        bp_l1,
        r_lm: large_right(p, plain)?,
        rp_l1: large_right(p, one)?,
        rp_l2: large_right(p, two)?,
        l_lm: large_left(p, plain)?,
        lp_l1: large_left(p, one)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::profile;
    use crate::coords::TriangleCoordinates;

    fn first_example() -> ComponentProfile {
        profile(&TriangleCoordinates {
            n: 2,
            alpha: vec![1, 5],
            beta: vec![6, 4, 4],
            gamma: 4,
            c: [2, 0],
        })
        .unwrap()
    }

    fn second_example() -> ComponentProfile {
        profile(&TriangleCoordinates {
            n: 2,
            alpha: vec![3, 1],
            beta: vec![4, 2, 2],
            gamma: 4,
            c: [1, 1],
        })
        .unwrap()
    }

    #[test]
    fn over_under_at_first_crosscap() {
        let one = RegionRange::Crosscap1 { l: 1 };
        assert_eq!(large_over_under(&first_example(), one).unwrap(), (0, 2));
        assert_eq!(large_over_under(&second_example(), one).unwrap(), (1, 0));
    }

    #[test]
    fn ranges_from_s0_are_empty_of_over_under_and_right() {
        let p = second_example();
        for range in [
            RegionRange::Plain { l: 0, m: 0 },
            RegionRange::Plain { l: 0, m: 1 },
            RegionRange::Crosscap1 { l: 0 },
        ] {
            assert_eq!(large_over_under(&p, range).unwrap(), (0, 0));
            assert_eq!(large_right(&p, range).unwrap(), 0);
        }
    }

    #[test]
    fn right_loops_at_second_crosscap() {
        let p = second_example();
        assert_eq!(large_right(&p, RegionRange::Crosscap2 { l: 1 }).unwrap(), 0);
        assert_eq!(large_right(&p, RegionRange::Crosscap2 { l: 2 }).unwrap(), 0);
        // A' = 0, so no non-core loop of S'_2 gets past S'_1 above the diameter
        let p = first_example();
        assert_eq!(large_right(&p, RegionRange::Crosscap2 { l: 2 }).unwrap(), 0);
    }

    #[test]
    fn left_loops() {
        let p = first_example();
        assert_eq!(
            large_left(&p, RegionRange::Plain { l: 0, m: 1 }).unwrap(),
            0
        );
        assert_eq!(
            large_left(&p, RegionRange::Plain { l: 0, m: 0 }).unwrap(),
            3
        );
        let p = second_example();
        assert_eq!(large_left(&p, RegionRange::Crosscap1 { l: 1 }).unwrap(), 0);
        assert!(matches!(
            large_left(&p, RegionRange::Crosscap1 { l: 2 }),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn single_region_right_loops_are_all_large() {
        let p = first_example();
        assert_eq!(
            large_right(&p, RegionRange::Plain { l: 1, m: 1 }).unwrap(),
            1
        );
    }

    #[test]
    fn invalid_ranges() {
        let p = second_example();
        for range in [
            RegionRange::Plain { l: 1, m: 2 },
            RegionRange::Plain { l: 2, m: 1 },
            RegionRange::Crosscap1 { l: 3 },
        ] {
            assert!(matches!(large_over_under(&p, range), Err(Error::Range(_))));
        }
    }
}
