//! Path components of a minimal representative, region by region, and the
//! gluing that reassembles them into the multicurve.
//!
//! Regions are numbered left to right: `S_0, S_1, .., S_{n-1}` (each holding
//! one puncture), then `S'_1` and `S'_2` (each holding one crosscap). The arc
//! `beta_i` separates region `i - 1` from region `i`. Endpoint slots on an arc
//! are numbered from the top.

use serde::{Deserialize, Serialize};

use crate::coords::{pos, TriangleCoordinates};
use crate::error::{ck, Error, Result};
use crate::inversion::straight_cores;

/// Which way the loop components of a region turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    None,
}

impl Side {
    fn of(b: i64) -> Side {
        match b.signum() {
            1 => Side::Right,
            -1 => Side::Left,
            _ => Side::None,
        }
    }

    fn sign(self) -> i64 {
        match self {
            Side::Right => 1,
            Side::Left => -1,
            Side::None => 0,
        }
    }
}

/// Components of `S_i`, `1 <= i <= n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PunctureRegion {
    pub above: i64,
    pub below: i64,
    pub loops: i64,
    pub side: Side,
}

/// Components of `S'_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstCrosscap {
    pub above: i64,
    pub below: i64,
    pub straight_cores: i64,
    pub noncore_loops: i64,
    pub core_loops: i64,
    pub side: Side,
}

impl FirstCrosscap {
    /// Non-core loops turning back to `beta_n`.
    pub fn right_noncore_loops(&self) -> i64 {
        if self.side == Side::Right {
            self.noncore_loops
        } else {
            0
        }
    }

    pub fn loops(&self) -> i64 {
        self.noncore_loops + self.core_loops
    }
}

/// Components of `S'_2`; all of them are loops on `beta_{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondCrosscap {
    pub noncore_loops: i64,
    pub core_loops: i64,
}

/// Closed non-primitive components around one crosscap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NonPrimitive {
    pub core: bool,
    pub bounding: i64,
}

impl NonPrimitive {
    /// Decodes a `c` coordinate; nonnegative values carry no closed components.
    pub fn decode(c: i64) -> NonPrimitive {
        if c >= 0 {
            return NonPrimitive::default();
        }
        let m = c.unsigned_abs();
        NonPrimitive {
            core: m % 2 == 1,
            bounding: (m / 2) as i64,
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.core && self.bounding == 0
    }
}

/// Exact counts of every path-component species in every region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentProfile {
    pub n: usize,
    pub s0_loops: i64,
    /// `S_1 ..= S_{n-1}`.
    pub regions: Vec<PunctureRegion>,
    pub crosscap1: FirstCrosscap,
    pub crosscap2: SecondCrosscap,
    pub nonprimitive: [NonPrimitive; 2],
}

impl ComponentProfile {
    /// `S_i` for `1 <= i <= n - 1`.
    pub fn region(&self, i: usize) -> &PunctureRegion {
        &self.regions[i - 1]
    }

    /// Signed loop count `b_i`, `1 <= i <= n`.
    pub fn b_at(&self, i: usize) -> i64 {
        if i == self.n {
            self.crosscap1.side.sign() * self.crosscap1.loops()
        } else {
            let r = self.region(i);
            r.side.sign() * r.loops
        }
    }

    /// Endpoints on `beta_i` contributed by the regions to its left and right.
    pub fn arc_counts(&self, i: usize) -> (i64, i64) {
        let n = self.n;
        let left = if i == 1 {
            2 * self.s0_loops
        } else if i <= n {
            let r = self.region(i - 1);
            r.above + r.below + 2 * pos(-self.b_at(i - 1))
        } else {
            let x = &self.crosscap1;
            x.above + x.below + x.straight_cores + 2 * pos(-self.b_at(n))
        };
        let right = if i < n {
            let r = self.region(i);
            r.above + r.below + 2 * pos(self.b_at(i))
        } else if i == n {
            let x = &self.crosscap1;
            x.above + x.below + x.straight_cores + 2 * pos(self.b_at(n))
        } else {
            2 * (self.crosscap2.noncore_loops + self.crosscap2.core_loops)
        };
        (left, right)
    }

    /// `beta_i` as seen from the left of the arc.
    pub fn beta_at(&self, i: usize) -> i64 {
        self.arc_counts(i).0
    }

    pub fn check_conservation(&self) -> Result<()> {
        for i in 1..=self.n + 1 {
            let (left, right) = self.arc_counts(i);
            if left != right {
                return Err(Error::EndpointMismatch {
                    arc: i,
                    left,
                    right,
                });
            }
        }
        Ok(())
    }

    fn counts(&self) -> impl Iterator<Item = i64> + '_ {
        let x = &self.crosscap1;
        self.regions
            .iter()
            .flat_map(|r| [r.above, r.below, r.loops])
            .chain([
                self.s0_loops,
                x.above,
                x.below,
                x.straight_cores,
                x.noncore_loops,
                x.core_loops,
                self.crosscap2.noncore_loops,
                self.crosscap2.core_loops,
            ])
    }

    /// Sign, exclusivity and conservation invariants.
    pub fn check(&self) -> Result<()> {
        if self.regions.len() + 1 != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{} puncture regions for n = {}",
                self.regions.len(),
                self.n
            )));
        }
        if self.counts().any(|c| c < 0) {
            return Err(Error::InconsistentTriangle(
                "negative component count".into(),
            ));
        }
        let x = &self.crosscap1;
        if x.straight_cores > 0 && x.noncore_loops > 0 {
            return Err(Error::InconsistentTriangle(
                "straight cores and non-core loops at the first crosscap".into(),
            ));
        }
        let sides_ok = self
            .regions
            .iter()
            .map(|r| (r.loops, r.side))
            .chain([(x.loops(), x.side)])
            .all(|(loops, side)| (loops == 0) == (side == Side::None));
        if !sides_ok {
            return Err(Error::InconsistentTriangle(
                "loop side does not match loop count".into(),
            ));
        }
        self.check_conservation()
    }

    pub fn is_empty(&self) -> bool {
        self.counts().all(|c| c == 0)
    }
}

/// `b_i = (beta_i - beta_{i+1}) / 2` for `1 <= i <= n`.
pub fn half_differences(tri: &TriangleCoordinates) -> Result<Vec<i64>> {
    if tri.beta.len() != tri.n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "beta has {} entries, expected {}",
            tri.beta.len(),
            tri.n + 1
        )));
    }
    tri.beta
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let d = ck::sub(w[0], w[1])?;
            if d % 2 != 0 {
                return Err(Error::ParityViolation(format!(
                    "beta_{} - beta_{} = {d} is odd",
                    i + 1,
                    i + 2
                )));
            }
            Ok(d / 2)
        })
        .collect()
}

/// Which pair of formulas gives the above/below counts at the first crosscap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AboveBelowForm {
    /// `A' = (t - psi + max(beta_n, beta_{n+1}) - 2|b_n|) / 2`, and symmetrically for `B'`.
    Halved,
    /// The same expressions without the halving. Kept only to show that they
    /// contradict the worked examples.
    Unhalved,
}

/// `(A', B')` from `t`, `psi`, `max(beta_n, beta_{n+1})` and `|b_n|`.
pub fn crosscap_above_below(
    t: i64,
    psi: i64,
    widest: i64,
    abs_b_n: i64,
    form: AboveBelowForm,
) -> Result<(i64, i64)> {
    let common = ck::sub(ck::sub(widest, psi)?, ck::mul(2, abs_b_n)?)?;
    let above = ck::add(t, common)?;
    let below = ck::sub(common, t)?;
    match form {
        AboveBelowForm::Unhalved => Ok((above, below)),
        AboveBelowForm::Halved => {
            if above % 2 != 0 {
                return Err(Error::InconsistentTriangle(format!(
                    "t - psi + max(beta_n, beta_{{n+1}}) - 2|b_n| = {above} is odd"
                )));
            }
            Ok((above / 2, below / 2))
        }
    }
}

/// Per-region component counts of the multicurve with the given triangle
/// coordinates.
pub fn profile(tri: &TriangleCoordinates) -> Result<ComponentProfile> {
    profile_with(tri, AboveBelowForm::Halved)
}

pub fn profile_with(tri: &TriangleCoordinates, form: AboveBelowForm) -> Result<ComponentProfile> {
    let inconsistent = |e: Error| match e {
        Error::Overflow => Error::Overflow,
        Error::InconsistentTriangle(m) => Error::InconsistentTriangle(m),
        other => Error::InconsistentTriangle(other.to_string()),
    };
    tri.check_shape().map_err(inconsistent)?;
    let n = tri.n;
    let b = half_differences(tri).map_err(inconsistent)?;

    let regions: Vec<PunctureRegion> = (1..n)
        .map(|i| {
            let loops = ck::abs(b[i - 1])?;
            Ok(PunctureRegion {
                above: ck::sub(tri.alpha_at(2 * i - 1), loops)?,
                below: ck::sub(tri.alpha_at(2 * i), loops)?,
                loops,
                side: Side::of(b[i - 1]),
            })
        })
        .collect::<Result<_>>()?;

    let b_n = b[n - 1];
    let abs_b_n = ck::abs(b_n)?;
    let c1 = pos(tri.c[0]);
    let c2 = pos(tri.c[1]);
    let psi = straight_cores(tri.c[0], b_n)?;
    let widest = tri.beta_at(n).max(tri.beta_at(n + 1));
    let t = ck::sub(ck::sub(tri.gamma, psi)?, widest)?;
    let (above, below) = crosscap_above_below(t, psi, widest, abs_b_n, form)?;

    let crosscap1 = FirstCrosscap {
        above,
        below,
        straight_cores: psi,
        noncore_loops: pos(ck::sub(abs_b_n, c1)?),
        core_loops: abs_b_n.min(c1),
        side: Side::of(b_n),
    };
    let crosscap2 = SecondCrosscap {
        noncore_loops: ck::sub(tri.beta_at(n + 1) / 2, c2)?,
        core_loops: c2,
    };

    let profile = ComponentProfile {
        n,
        s0_loops: tri.beta_at(1) / 2,
        regions,
        crosscap1,
        crosscap2,
        nonprimitive: [
            NonPrimitive::decode(tri.c[0]),
            NonPrimitive::decode(tri.c[1]),
        ],
    };
    profile.check().map_err(inconsistent)?;
    Ok(profile)
}

/// Where a path component of one region sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// `S_i`, `0 <= i <= n - 1`.
    Puncture(usize),
    Crosscap1,
    Crosscap2,
}

impl Region {
    /// Position in the left-to-right order, `0 ..= n + 1`.
    pub fn index(self, n: usize) -> usize {
        match self {
            Region::Puncture(i) => i,
            Region::Crosscap1 => n,
            Region::Crosscap2 => n + 1,
        }
    }

    pub fn from_index(i: usize, n: usize) -> Region {
        match i {
            _ if i < n => Region::Puncture(i),
            _ if i == n => Region::Crosscap1,
            _ => Region::Crosscap2,
        }
    }

    pub fn label(self) -> String {
        match self {
            Region::Puncture(i) => format!("S{i}"),
            Region::Crosscap1 => "S'1".into(),
            Region::Crosscap2 => "S'2".into(),
        }
    }
}

/// Path-component species. In the crosscap regions `LeftLoop` and
/// `RightLoop` are the non-core loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Species {
    Above,
    Below,
    LeftLoop,
    RightLoop,
    StraightCore,
    LeftCoreLoop,
    RightCoreLoop,
}

impl Species {
    pub fn is_loop(self) -> bool {
        !matches!(
            self,
            Species::Above | Species::Below | Species::StraightCore
        )
    }

    pub fn crosses_core(self) -> bool {
        matches!(
            self,
            Species::StraightCore | Species::LeftCoreLoop | Species::RightCoreLoop
        )
    }
}

/// A slot on `beta_arc`, numbered from the top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Endpoint {
    pub arc: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathComponent {
    pub species: Species,
    pub ends: [Endpoint; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionComponents {
    pub region: Region,
    pub components: Vec<PathComponent>,
}

/// The components meeting one slot, as indices into the neighbouring
/// regions' component lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotMatch {
    pub slot: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcGluing {
    pub arc: usize,
    pub slots: Vec<SlotMatch>,
}

/// Closed components that meet no reference arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedComponent {
    /// Core curve of crosscap `k`.
    Core(usize),
    /// Curve bounding crosscap `k`.
    Bounding(usize),
}

/// Path components of every region together with the slot-by-slot matching
/// across every arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingDescription {
    pub n: usize,
    /// Indexed by [`Region::index`].
    pub regions: Vec<RegionComponents>,
    /// `beta_1 ..= beta_{n+1}`.
    pub arcs: Vec<ArcGluing>,
    pub closed: Vec<ClosedComponent>,
}

impl GluingDescription {
    pub fn strands_across(&self, arc: usize) -> usize {
        self.arcs[arc - 1].slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closed.is_empty() && self.regions.iter().all(|r| r.components.is_empty())
    }
}

fn ep(arc: usize, slot: i64) -> Endpoint {
    Endpoint {
        arc,
        slot: slot as usize,
    }
}

fn comp(species: Species, a: Endpoint, b: Endpoint) -> PathComponent {
    PathComponent {
        species,
        ends: [a, b],
    }
}

/// Loops on one arc surrounding a crosscap: non-core loops nested outermost,
/// then core loops, each core loop's lower end shifted past the block of
/// upper ends (the crosscap identification turns nesting into a shift).
/// `middle` slots between the upper and lower ends are left to the caller.
#[allow(clippy::too_many_arguments)]
fn crosscap_loops(
    out: &mut Vec<PathComponent>,
    arc: usize,
    base: i64,
    noncore: i64,
    core: i64,
    middle: i64,
    noncore_species: Species,
    core_species: Species,
) {
    for j in 0..noncore {
        let upper = base + j;
        let lower = base + noncore + 2 * core + middle + (noncore - 1 - j);
        out.push(comp(noncore_species, ep(arc, upper), ep(arc, lower)));
    }
    for j in 0..core {
        let upper = base + noncore + j;
        let lower = base + noncore + core + middle + j;
        out.push(comp(core_species, ep(arc, upper), ep(arc, lower)));
    }
}

/// Lays the components of every region out on the arc slots.
///
/// Above components take the top slots and below components the bottom
/// slots of each arc, loops sit between them, nested around their puncture
/// and outside any straight cores. Straight cores reverse their vertical
/// order through the crosscap.
pub fn reconstruct(profile: &ComponentProfile) -> Result<GluingDescription> {
    profile.check_conservation()?;
    let n = profile.n;
    let mut regions = Vec::with_capacity(n + 2);

    let s0 = profile.s0_loops;
    regions.push(RegionComponents {
        region: Region::Puncture(0),
        components: (0..s0)
            .map(|j| comp(Species::LeftLoop, ep(1, j), ep(1, 2 * s0 - 1 - j)))
            .collect(),
    });

    for k in 1..n {
        let r = profile.region(k);
        let (left, right) = (k, k + 1);
        let mut out = Vec::new();
        for j in 0..r.above {
            out.push(comp(Species::Above, ep(left, j), ep(right, j)));
        }
        let (loop_arc, species) = match r.side {
            Side::Right => (left, Species::RightLoop),
            _ => (right, Species::LeftLoop),
        };
        for j in 0..r.loops {
            out.push(comp(
                species,
                ep(loop_arc, r.above + j),
                ep(loop_arc, r.above + 2 * r.loops - 1 - j),
            ));
        }
        let left_base = r.above
            + if r.side == Side::Right {
                2 * r.loops
            } else {
                0
            };
        let right_base = r.above + if r.side == Side::Left { 2 * r.loops } else { 0 };
        for j in 0..r.below {
            out.push(comp(
                Species::Below,
                ep(left, left_base + j),
                ep(right, right_base + j),
            ));
        }
        regions.push(RegionComponents {
            region: Region::Puncture(k),
            components: out,
        });
    }

    let x = &profile.crosscap1;
    let (left, right) = (n, n + 1);
    let mut out = Vec::new();
    for j in 0..x.above {
        out.push(comp(Species::Above, ep(left, j), ep(right, j)));
    }
    let (loop_arc, other, nc, core) = match x.side {
        Side::Left => (right, left, Species::LeftLoop, Species::LeftCoreLoop),
        _ => (left, right, Species::RightLoop, Species::RightCoreLoop),
    };
    crosscap_loops(
        &mut out,
        loop_arc,
        x.above,
        x.noncore_loops,
        x.core_loops,
        x.straight_cores,
        nc,
        core,
    );
    let psi = x.straight_cores;
    let loop_base = x.above + x.noncore_loops + x.core_loops;
    for s in 0..psi {
        let on_loop_arc = ep(loop_arc, loop_base + s);
        let on_other = ep(other, x.above + (psi - 1 - s));
        let (a, b) = if loop_arc == left {
            (on_loop_arc, on_other)
        } else {
            (on_other, on_loop_arc)
        };
        out.push(comp(Species::StraightCore, a, b));
    }
    let loop_side_below = x.above + 2 * x.loops() + psi;
    let other_below = x.above + psi;
    for j in 0..x.below {
        let (a, b) = if loop_arc == left {
            (loop_side_below + j, other_below + j)
        } else {
            (other_below + j, loop_side_below + j)
        };
        out.push(comp(Species::Below, ep(left, a), ep(right, b)));
    }
    regions.push(RegionComponents {
        region: Region::Crosscap1,
        components: out,
    });

    let y = &profile.crosscap2;
    let mut out = Vec::new();
    crosscap_loops(
        &mut out,
        n + 1,
        0,
        y.noncore_loops,
        y.core_loops,
        0,
        Species::RightLoop,
        Species::RightCoreLoop,
    );
    regions.push(RegionComponents {
        region: Region::Crosscap2,
        components: out,
    });

    let arcs = glue(n, &regions, profile)?;

    let mut closed = Vec::new();
    for (k, np) in profile.nonprimitive.iter().enumerate() {
        if np.core {
            closed.push(ClosedComponent::Core(k + 1));
        }
        closed.extend((0..np.bounding).map(|_| ClosedComponent::Bounding(k + 1)));
    }

    Ok(GluingDescription {
        n,
        regions,
        arcs,
        closed,
    })
}

fn glue(
    n: usize,
    regions: &[RegionComponents],
    profile: &ComponentProfile,
) -> Result<Vec<ArcGluing>> {
    let mut arcs = Vec::with_capacity(n + 1);
    for arc in 1..=n + 1 {
        let size = profile.beta_at(arc) as usize;
        let collect = |region: &RegionComponents| -> Vec<Option<usize>> {
            let mut seen = vec![None; size];
            for (idx, c) in region.components.iter().enumerate() {
                for e in c.ends.iter().filter(|e| e.arc == arc) {
                    if e.slot < size {
                        seen[e.slot] = Some(idx);
                    }
                }
            }
            seen
        };
        let left = collect(&regions[arc - 1]);
        let right = collect(&regions[arc]);
        let mut slots = Vec::with_capacity(size);
        for slot in 0..size {
            match (left[slot], right[slot]) {
                (Some(l), Some(r)) => slots.push(SlotMatch {
                    slot,
                    left: l,
                    right: r,
                }),
                _ => {
                    let (l, r) = profile.arc_counts(arc);
                    return Err(Error::EndpointMismatch {
                        arc,
                        left: l,
                        right: r,
                    });
                }
            }
        }
        arcs.push(ArcGluing { arc, slots });
    }
    Ok(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn half_differences_examples() {
        assert_eq!(
            half_differences(&tri(&[1, 5], &[6, 4, 4], 4, [2, 0])).unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            half_differences(&tri(&[3, 1], &[4, 2, 2], 4, [1, 1])).unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            half_differences(&tri(&[0, 0], &[0, 0, 0], 0, [0, 0])).unwrap(),
            vec![0, 0]
        );
        assert!(matches!(
            half_differences(&tri(&[0, 0], &[3, 0, 0], 0, [0, 0])),
            Err(Error::ParityViolation(_))
        ));
    }

    #[test]
    fn profile_with_two_straight_cores() {
        let p = profile(&tri(&[1, 5], &[6, 4, 4], 4, [2, 0])).unwrap();
        assert_eq!(
            *p.region(1),
            PunctureRegion {
                above: 0,
                below: 4,
                loops: 1,
                side: Side::Right
            }
        );
        assert_eq!(
            p.crosscap1,
            FirstCrosscap {
                above: 0,
                below: 2,
                straight_cores: 2,
                noncore_loops: 0,
                core_loops: 0,
                side: Side::None
            }
        );
        assert_eq!(p.s0_loops, 3);
        assert_eq!(
            p.crosscap2,
            SecondCrosscap {
                noncore_loops: 2,
                core_loops: 0
            }
        );
    }

    #[test]
    fn profile_second_example() {
        let p = profile(&tri(&[3, 1], &[4, 2, 2], 4, [1, 1])).unwrap();
        assert_eq!(
            *p.region(1),
            PunctureRegion {
                above: 2,
                below: 0,
                loops: 1,
                side: Side::Right
            }
        );
        assert_eq!(
            (
                p.crosscap1.above,
                p.crosscap1.below,
                p.crosscap1.straight_cores
            ),
            (1, 0, 1)
        );
        assert_eq!(
            p.crosscap2,
            SecondCrosscap {
                noncore_loops: 0,
                core_loops: 1
            }
        );
    }

    #[test]
    fn pure_core_curve() {
        let p = profile(&tri(&[0, 0], &[0, 0, 0], 0, [-1, 0])).unwrap();
        assert!(p.is_empty());
        assert_eq!(
            p.nonprimitive[0],
            NonPrimitive {
                core: true,
                bounding: 0
            }
        );
        assert!(p.nonprimitive[1].is_empty());
        let g = reconstruct(&p).unwrap();
        assert_eq!(g.closed, vec![ClosedComponent::Core(1)]);
    }

    #[test]
    fn nonprimitive_decoding() {
        assert_eq!(
            NonPrimitive::decode(-4),
            NonPrimitive {
                core: false,
                bounding: 2
            }
        );
        assert_eq!(
            NonPrimitive::decode(-5),
            NonPrimitive {
                core: true,
                bounding: 2
            }
        );
        assert_eq!(NonPrimitive::decode(3), NonPrimitive::default());
    }

    #[test]
    fn unhalved_form_contradicts_example() {
        let t = tri(&[1, 5], &[6, 4, 4], 4, [2, 0]);
        // t = -2, psi = 2, widest = 4, |b_n| = 0
        assert_eq!(
            crosscap_above_below(-2, 2, 4, 0, AboveBelowForm::Unhalved).unwrap(),
            (0, 4)
        );
        assert_eq!(
            crosscap_above_below(-2, 2, 4, 0, AboveBelowForm::Halved).unwrap(),
            (0, 2)
        );
        assert!(profile_with(&t, AboveBelowForm::Unhalved).is_err());
    }

    #[test]
    fn profile_rejects_inconsistent_alpha() {
        // alpha_1 + alpha_2 must equal max(beta_1, beta_2)
        let err = profile(&tri(&[3, 5], &[6, 4, 4], 4, [2, 0])).unwrap_err();
        assert!(matches!(err, Error::InconsistentTriangle(_)), "{err:?}");
        let err = profile(&tri(&[0, 4], &[6, 4, 4], 4, [2, 0])).unwrap_err();
        assert!(matches!(err, Error::InconsistentTriangle(_)), "{err:?}");
    }

    #[test]
    fn reconstruct_example_layout() {
        let p = profile(&tri(&[1, 5], &[6, 4, 4], 4, [2, 0])).unwrap();
        let g = reconstruct(&p).unwrap();
        assert_eq!(
            (
                g.strands_across(1),
                g.strands_across(2),
                g.strands_across(3)
            ),
            (6, 4, 4)
        );
        let species = |r: usize, s: Species| {
            g.regions[r]
                .components
                .iter()
                .filter(|c| c.species == s)
                .count()
        };
        assert_eq!(species(0, Species::LeftLoop), 3);
        assert_eq!(species(1, Species::Below), 4);
        assert_eq!(species(1, Species::RightLoop), 1);
        assert_eq!(species(2, Species::Below), 2);
        assert_eq!(species(2, Species::StraightCore), 2);
        assert_eq!(species(3, Species::RightLoop), 2);
        // the right loop of S_1 is nested inside the S_0 loops' slots: slots 0 and 1 of beta_1
        let loop_ends = g.regions[1]
            .components
            .iter()
            .find(|c| c.species == Species::RightLoop)
            .unwrap()
            .ends;
        assert_eq!(loop_ends, [ep(1, 0), ep(1, 1)]);
        // straight cores reverse order through the crosscap
        let cores: Vec<_> = g.regions[2]
            .components
            .iter()
            .filter(|c| c.species == Species::StraightCore)
            .map(|c| (c.ends[0].slot, c.ends[1].slot))
            .collect();
        assert_eq!(cores, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn reconstruct_empty() {
        let p = profile(&tri(&[0, 0], &[0, 0, 0], 0, [0, 0])).unwrap();
        assert!(reconstruct(&p).unwrap().is_empty());
    }

    #[test]
    fn reconstruct_rejects_broken_conservation() {
        let mut p = profile(&tri(&[3, 1], &[4, 2, 2], 4, [1, 1])).unwrap();
        p.s0_loops = 1;
        assert!(matches!(
            reconstruct(&p),
            Err(Error::EndpointMismatch { arc: 1, .. })
        ));
    }
}
