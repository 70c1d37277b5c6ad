//! Intersection numbers counted directly on a reconstructed multicurve,
//! without the large-component formulas.
//!
//! For a curve bounding a range of regions, every strand entering the range
//! is followed through it. Strands that can be pushed off the curve are
//! classified as large by their shape; every other strand crosses the curve
//! twice. `D` lives in the two crosscap regions and crosses `beta_{n+1}`
//! twice; every placement of those two crossings is tried and the crossings
//! with each piece of the multicurve are counted in the universal cover of
//! the region.

mod lift;

use rayon::prelude::*;
use serde::Serialize;

use crate::components::{
    profile, reconstruct, ClosedComponent, ComponentProfile, Endpoint, GluingDescription, Region,
    Species,
};
use crate::coords::{validate, DynnikovCoordinates, TriangleCoordinates};
use crate::error::{Error, Result};
use crate::intersect::{catalog, intersect_all, ElementaryCurve};
use crate::inversion::invert;
use crate::large::RegionRange;
use lift::{Chord, Class, Frame, Topology};

/// A reconstructed multicurve whose pieces embed disjointly in every region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrandDiagram {
    gluing: GluingDescription,
}

impl StrandDiagram {
    pub fn gluing(&self) -> &GluingDescription {
        &self.gluing
    }

    pub fn n(&self) -> usize {
        self.gluing.n
    }

    fn size(&self, arc: usize) -> i64 {
        self.gluing.strands_across(arc) as i64
    }
}

const SLOT_SPACING: i64 = 8;

fn span(size: i64) -> i64 {
    SLOT_SPACING * (size + 1)
}

fn slot_rank(slot: usize) -> i64 {
    SLOT_SPACING * (slot as i64 + 1)
}

struct Geometry {
    frame: Frame,
    /// Index of the region's left arc, equal to the region index.
    left: usize,
    spans: [i64; 2],
}

impl Geometry {
    fn of(d: &StrandDiagram, r: usize) -> Geometry {
        let n = d.n();
        let topology = match Region::from_index(r, n) {
            Region::Puncture(_) => Topology::Annulus,
            _ => Topology::Mobius,
        };
        let left = if r >= 1 {
            span(d.size(r))
        } else {
            SLOT_SPACING
        };
        let right = if r <= n {
            span(d.size(r + 1))
        } else {
            SLOT_SPACING
        };
        Geometry {
            frame: Frame::new(topology, left * right),
            left: r,
            spans: [left, right],
        }
    }

    fn param(&self, arc: usize, rank: i64) -> i64 {
        if arc == self.left {
            self.frame.on_left(rank, self.spans[0])
        } else {
            self.frame.on_right(rank, self.spans[1])
        }
    }

    fn chord(&self, species: Species, ends: [Endpoint; 2]) -> Chord {
        let [p, q] = ends.map(|e| self.param(e.arc, slot_rank(e.slot)));
        self.frame.chord(p, q, class(species))
    }
}

fn class(species: Species) -> Class {
    match species {
        Species::Below => Class::Short,
        Species::Above | Species::LeftLoop | Species::RightLoop => Class::Long,
        Species::StraightCore | Species::LeftCoreLoop | Species::RightCoreLoop => Class::Core,
    }
}

fn region_chords(d: &StrandDiagram, r: usize) -> (Geometry, Vec<Chord>) {
    let geometry = Geometry::of(d, r);
    let chords = d.gluing.regions[r]
        .components
        .iter()
        .map(|c| geometry.chord(c.species, c.ends))
        .collect();
    (geometry, chords)
}

/// Lays out the components of a profile and checks that they embed
/// disjointly.
pub fn build_diagram(profile: &ComponentProfile) -> Result<StrandDiagram> {
    let diagram = StrandDiagram {
        gluing: reconstruct(profile)?,
    };
    for r in 0..diagram.gluing.regions.len() {
        let (g, chords) = region_chords(&diagram, r);
        let label = diagram.gluing.regions[r].region.label();
        for (i, a) in chords.iter().enumerate() {
            if g.frame.self_crossings(a) != 0 {
                return Err(Error::NotEmbedded(format!("component {i} of {label}")));
            }
            for (j, b) in chords.iter().enumerate().skip(i + 1) {
                if g.frame.crossings(a, b) != 0 {
                    return Err(Error::NotEmbedded(format!(
                        "components {i} and {j} of {label} cross"
                    )));
                }
            }
        }
    }
    Ok(diagram)
}

/// Validates, inverts, profiles and lays out a coordinate vector.
pub fn diagram_for(coords: &DynnikovCoordinates) -> Result<StrandDiagram> {
    validate(coords)?;
    build_diagram(&profile(&invert(coords)?)?)
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    left: Option<usize>,
    right: Option<usize>,
    lo: usize,
    hi: usize,
}

impl Bounds {
    fn of(n: usize, range: RegionRange) -> Bounds {
        let (l, right, hi) = match range {
            RegionRange::Plain { l, m } => (l, Some(m + 1), m),
            RegionRange::Crosscap1 { l } => (l, Some(n + 1), n),
            RegionRange::Crosscap2 { l } => (l, None, n + 1),
        };
        Bounds {
            left: (l > 0).then_some(l),
            right,
            lo: l,
            hi,
        }
    }

    fn exits(&self, region: usize, arc: usize) -> bool {
        (region == self.lo && arc == region) || (region == self.hi && arc == region + 1)
    }
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    region: usize,
    species: Species,
}

#[derive(Debug, Clone)]
struct Strand {
    from: usize,
    to: usize,
    pieces: Vec<Piece>,
}

/// Every strand of the multicurve inside the range, from boundary to boundary.
fn strands(d: &StrandDiagram, bounds: Bounds) -> Vec<Strand> {
    let g = &d.gluing;
    let mut out = Vec::new();
    let mut done: Vec<Vec<bool>> = (0..=g.arcs.len())
        .map(|a| vec![false; if a == 0 { 0 } else { g.strands_across(a) }])
        .collect();
    for start in [bounds.left, bounds.right].into_iter().flatten() {
        for slot in 0..g.strands_across(start) {
            if done[start][slot] {
                continue;
            }
            done[start][slot] = true;
            let matched = g.arcs[start - 1].slots[slot];
            let (mut region, mut comp) = if Some(start) == bounds.left {
                (start, matched.right)
            } else {
                (start - 1, matched.left)
            };
            let mut entry = Endpoint { arc: start, slot };
            let mut pieces = Vec::new();
            loop {
                let c = &g.regions[region].components[comp];
                pieces.push(Piece {
                    region,
                    species: c.species,
                });
                let exit = if c.ends[0] == entry {
                    c.ends[1]
                } else {
                    c.ends[0]
                };
                if bounds.exits(region, exit.arc) {
                    done[exit.arc][exit.slot] = true;
                    out.push(Strand {
                        from: start,
                        to: exit.arc,
                        pieces,
                    });
                    break;
                }
                let matched = g.arcs[exit.arc - 1].slots[exit.slot];
                if exit.arc == region {
                    region -= 1;
                    comp = matched.left;
                } else {
                    region += 1;
                    comp = matched.right;
                }
                entry = exit;
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Over,
    Under,
    RightLoop,
    LeftLoop,
    Crossing,
}

fn all(pieces: &[Piece], species: Species) -> bool {
    pieces.iter().all(|p| p.species == species)
}

/// Whether a strand can be pushed off the curve around the range, and how.
fn shape(s: &Strand, bounds: Bounds) -> Shape {
    let turns: Vec<usize> = (0..s.pieces.len())
        .filter(|&i| s.pieces[i].species.is_loop())
        .collect();
    if s.from != s.to {
        return match () {
            _ if all(&s.pieces, Species::Above) => Shape::Over,
            _ if all(&s.pieces, Species::Below) => Shape::Under,
            _ => Shape::Crossing,
        };
    }
    let [t] = turns[..] else {
        return Shape::Crossing;
    };
    let turn = s.pieces[t];
    let from_left = Some(s.from) == bounds.left;
    let far = if from_left { bounds.hi } else { bounds.lo };
    let encloses = matches!(turn.species, Species::LeftLoop | Species::RightLoop);
    let (out, back) = (&s.pieces[..t], &s.pieces[t + 1..]);
    let opposite = (all(out, Species::Above) && all(back, Species::Below))
        || (all(out, Species::Below) && all(back, Species::Above));
    match (turn.region == far && encloses && opposite, from_left) {
        (true, true) => Shape::RightLoop,
        (true, false) => Shape::LeftLoop,
        (false, _) => Shape::Crossing,
    }
}

/// Large strands of a range, found by tracing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct LargeCensus {
    pub over: i64,
    pub under: i64,
    pub right: i64,
    pub left: i64,
    /// Strands that cross the curve around the range.
    pub crossing: i64,
}

pub fn large_census(d: &StrandDiagram, range: RegionRange) -> Result<LargeCensus> {
    range.check(d.n())?;
    let bounds = Bounds::of(d.n(), range);
    let mut census = LargeCensus::default();
    for s in strands(d, bounds) {
        match shape(&s, bounds) {
            Shape::Over => census.over += 1,
            Shape::Under => census.under += 1,
            Shape::RightLoop => census.right += 1,
            Shape::LeftLoop => census.left += 1,
            Shape::Crossing => census.crossing += 1,
        }
    }
    Ok(census)
}

/// The range of regions an elementary curve surrounds.
pub fn surrounded_range(curve: ElementaryCurve, n: usize) -> Option<RegionRange> {
    match curve {
        ElementaryCurve::Cij(i, j) => Some(RegionRange::Plain { l: i - 1, m: j - 1 }),
        ElementaryCurve::Cprime1(i) => Some(RegionRange::Crosscap1 { l: i - 1 }),
        ElementaryCurve::Cprime2(i) => Some(RegionRange::Crosscap2 { l: i - 1 }),
        ElementaryCurve::C => Some(RegionRange::Crosscap2 { l: n }),
        _ => None,
    }
}

/// Geometric intersection number of the diagram's multicurve with an
/// elementary curve.
pub fn count_crossings(d: &StrandDiagram, curve: ElementaryCurve) -> Result<i64> {
    if !curve.has_formula() {
        return Err(Error::UnsupportedCurve(curve.to_string()));
    }
    curve.check(d.n())?;
    match surrounded_range(curve, d.n()) {
        Some(range) => Ok(2 * large_census(d, range)?.crossing),
        None => Ok(d_crossings(d)),
    }
}

/// Minimum over all placements of `D`'s two crossings with `beta_{n+1}`.
fn d_crossings(d: &StrandDiagram) -> i64 {
    let n = d.n();
    let arc = n + 1;
    let size = d.size(arc);
    let sides = [region_chords(d, n), region_chords(d, n + 1)];

    let mut placements = Vec::new();
    for g in 0..=size {
        let base = SLOT_SPACING * g;
        placements.push((base + 3, base + 5));
        for h in g + 1..=size {
            placements.push((base + 4, SLOT_SPACING * h + 4));
        }
    }
    let cost = |(p, q): (i64, i64)| -> usize {
        sides
            .iter()
            .map(|(geometry, chords)| {
                let mine = geometry.frame.chord(
                    geometry.param(arc, p),
                    geometry.param(arc, q),
                    Class::Core,
                );
                chords
                    .iter()
                    .map(|c| geometry.frame.crossings(&mine, c))
                    .sum::<usize>()
            })
            .sum()
    };
    let open = placements.into_iter().map(cost).min().unwrap_or(0) as i64;
    // D crosses a core curve once and the curve bounding a crosscap twice.
    let closed: i64 = d
        .gluing
        .closed
        .iter()
        .map(|c| match c {
            ClosedComponent::Core(_) => 1,
            ClosedComponent::Bounding(_) => 2,
        })
        .sum();
    open + closed
}

/// The bounded test grid: `a`, `b`, `t` in `[-bound, bound]`, `c` in
/// `[0, bound]`, zero vector excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub n: usize,
    pub bound: i64,
}

impl Grid {
    pub fn new(n: usize, bound: i64) -> Grid {
        Grid { n, bound }
    }

    fn width(&self) -> u64 {
        (2 * self.bound + 1) as u64
    }

    /// Number of points, including the zero vector.
    pub fn len(&self) -> u64 {
        let side = (self.bound + 1) as u64;
        self.width().pow(2 * self.n as u32) * side * side
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `index`-th point; `None` for the zero vector.
    pub fn point(&self, mut index: u64) -> Option<DynnikovCoordinates> {
        let mut signed = |count: usize| -> Vec<i64> {
            (0..count)
                .map(|_| {
                    let digit = index % self.width();
                    index /= self.width();
                    digit as i64 - self.bound
                })
                .collect()
        };
        let a = signed(self.n - 1);
        let b = signed(self.n);
        let t = signed(1)[0];
        let side = (self.bound + 1) as u64;
        let c = [(index % side) as i64, (index / side % side) as i64];
        let v = DynnikovCoordinates::new(self.n, a, b, t, c);
        (!v.is_zero()).then_some(v)
    }

    pub fn points(&self) -> impl ParallelIterator<Item = DynnikovCoordinates> + '_ {
        (0..self.len())
            .into_par_iter()
            .filter_map(|i| self.point(i))
    }
}

/// A vector on which the formulas and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub coords: DynnikovCoordinates,
    pub curve: Option<ElementaryCurve>,
    pub formula: std::result::Result<i64, String>,
    pub oracle: std::result::Result<i64, String>,
    pub triangle: Option<TriangleCoordinates>,
    pub profile: Option<ComponentProfile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub n: usize,
    pub bound: i64,
    pub vectors: u64,
    /// Vectors both sides rejected as unrealizable.
    pub unrealizable: u64,
    pub comparisons: u64,
    pub divergences: u64,
    pub first: Option<Divergence>,
}

enum Outcome {
    Compared(u64),
    Unrealizable,
    Diverged(Box<Divergence>),
}

fn compare(v: &DynnikovCoordinates) -> Outcome {
    let diverged = |curve, formula: std::result::Result<i64, String>, oracle| {
        let triangle = invert(v).ok();
        let profile = triangle.as_ref().and_then(|t| profile(t).ok());
        Outcome::Diverged(Box::new(Divergence {
            coords: v.clone(),
            curve,
            formula,
            oracle,
            triangle,
            profile,
        }))
    };
    let formulas = intersect_all(v);
    let diagram = diagram_for(v);
    match (formulas, diagram) {
        (Err(Error::Unrealizable(_)), Err(Error::Unrealizable(_))) => Outcome::Unrealizable,
        (Ok(values), Ok(d)) => {
            for (curve, value) in &values {
                let counted = count_crossings(&d, *curve);
                if counted.as_ref() != Ok(value) {
                    return diverged(Some(*curve), Ok(*value), counted.map_err(|e| e.to_string()));
                }
            }
            Outcome::Compared(values.len() as u64)
        }
        (f, d) => diverged(
            None,
            f.map(|_| 0).map_err(|e| e.to_string()),
            d.map(|_| 0).map_err(|e| e.to_string()),
        ),
    }
}

/// Compares every formula with the oracle on the grid.
pub fn selftest(n: usize, bound: i64) -> Result<SelftestReport> {
    crate::coords::SurfaceSpec::new(n)?;
    if bound < 0 {
        return Err(Error::Parameter(format!(
            "bound must be nonnegative, got {bound}"
        )));
    }
    let grid = Grid::new(n, bound);
    let empty = SelftestReport {
        n,
        bound,
        vectors: 0,
        unrealizable: 0,
        comparisons: 0,
        divergences: 0,
        first: None,
    };
    let merge = |mut acc: SelftestReport, other: SelftestReport| {
        acc.vectors += other.vectors;
        acc.unrealizable += other.unrealizable;
        acc.comparisons += other.comparisons;
        acc.divergences += other.divergences;
        acc.first = match (acc.first, other.first) {
            (Some(a), Some(b)) => Some(if a.coords <= b.coords { a } else { b }),
            (a, b) => a.or(b),
        };
        acc
    };
    let report = grid
        .points()
        .map(|v| {
            let mut r = SelftestReport {
                vectors: 1,
                ..empty.clone()
            };
            match compare(&v) {
                Outcome::Compared(k) => r.comparisons = k,
                Outcome::Unrealizable => r.unrealizable = 1,
                Outcome::Diverged(d) => {
                    r.divergences = 1;
                    r.first = Some(*d);
                }
            }
            r
        })
        .reduce(|| empty.clone(), merge);
    Ok(report)
}

/// Curves the selftest compares for a given `n`.
pub fn compared_curves(n: usize) -> Vec<ElementaryCurve> {
    catalog(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::parse_coords;
    use crate::intersect::elementary_coords;

    fn diagram(text: &str) -> StrandDiagram {
        diagram_for(&parse_coords(text, 2).unwrap()).unwrap()
    }

    #[test]
    fn second_example_counts() {
        let d = diagram("(-1; 1,0; 1; 1,1)");
        assert_eq!((d.size(1), d.size(2), d.size(3)), (4, 2, 2));
        assert_eq!(count_crossings(&d, ElementaryCurve::Cprime2(2)).unwrap(), 4);
        assert_eq!(count_crossings(&d, ElementaryCurve::C).unwrap(), 2);
        assert_eq!(count_crossings(&d, ElementaryCurve::D).unwrap(), 0);
    }

    #[test]
    fn first_example_layout_embeds() {
        let d = diagram("(2; 1,0; -2; 2,0)");
        assert_eq!((d.size(1), d.size(2), d.size(3)), (6, 4, 4));
    }

    #[test]
    fn d_against_simple_curves() {
        let on = |e: ElementaryCurve, with: ElementaryCurve| {
            let d = diagram_for(&elementary_coords(e, 2).unwrap()).unwrap();
            count_crossings(&d, with).unwrap()
        };
        assert_eq!(on(ElementaryCurve::D, ElementaryCurve::D), 0);
        assert_eq!(on(ElementaryCurve::C, ElementaryCurve::D), 0);
        assert_eq!(on(ElementaryCurve::D, ElementaryCurve::C), 0);
        assert_eq!(on(ElementaryCurve::Cprime1(2), ElementaryCurve::D), 2);
        assert_eq!(on(ElementaryCurve::Cprime1(1), ElementaryCurve::D), 2);
    }

    #[test]
    fn closed_components_only() {
        let p = profile(&TriangleCoordinates {
            n: 2,
            alpha: vec![0, 0],
            beta: vec![0, 0, 0],
            gamma: 0,
            c: [-1, 0],
        })
        .unwrap();
        let d = build_diagram(&p).unwrap();
        assert_eq!(d.gluing().closed, vec![ClosedComponent::Core(1)]);
        assert_eq!(count_crossings(&d, ElementaryCurve::C).unwrap(), 0);
        assert_eq!(count_crossings(&d, ElementaryCurve::D).unwrap(), 1);
    }

    #[test]
    fn grid_enumeration() {
        let g = Grid::new(2, 1);
        assert_eq!(g.len(), 3u64.pow(4) * 4);
        assert_eq!(g.points().count() as u64, g.len() - 1);
        assert!(g.point(0).is_some());
        let zero = (0..g.len()).find(|&i| g.point(i).is_none()).unwrap();
        assert_eq!(zero, 1 + 3 + 9 + 27);
    }

    #[test]
    fn rejects_core_curves() {
        let d = diagram("(-1; 1,0; 1; 1,1)");
        assert!(matches!(
            count_crossings(&d, ElementaryCurve::Bounding(1)),
            Err(Error::UnsupportedCurve(_))
        ));
    }
}
