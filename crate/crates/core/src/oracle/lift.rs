//! Crossing counts between arcs in a single region, read off from lifts to
//! the universal cover.
//!
//! A region is an annulus (a disk with one puncture) or a Möbius band (a
//! disk with one crosscap). Its boundary circle has length `4P`, split into
//! four sides of length `P`: left arc `[0, P)` downwards, bottom edge, right
//! arc `[2P, 3P)` upwards, top edge. The universal cover is a strip whose
//! boundary consists of a top line and, for the Möbius band, a bottom line.
//! The annulus deck group is generated by `x -> x + 4P`, the Möbius one by
//! the glide `(x, top) -> (x + 2P, bottom)`. Two arcs in minimal position
//! cross once for every translate of one lift whose endpoints separate the
//! endpoints of the other.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Topology {
    Annulus,
    Mobius,
}

/// Isotopy class of an arc relative to its endpoints `x < y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Class {
    /// Parallel to the boundary segment `[x, y]`.
    Short,
    /// Parallel to the complementary boundary segment.
    Long,
    /// Crosses the core of a Möbius band once.
    Core,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Point {
    bottom: bool,
    x: i64,
}

impl Point {
    /// Position along the boundary of the strip, read as one line.
    fn key(self) -> (bool, i64) {
        (self.bottom, if self.bottom { -self.x } else { self.x })
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Chord([Point; 2]);

#[derive(Debug, Clone, Copy)]
pub(crate) struct Frame {
    topology: Topology,
    side: i64,
}

impl Frame {
    pub fn new(topology: Topology, side: i64) -> Frame {
        Frame { topology, side }
    }

    /// Parameter of a point `rank / span` of the way down the left arc.
    pub fn on_left(&self, rank: i64, span: i64) -> i64 {
        rank * self.side / span
    }

    /// Parameter of a point `rank / span` of the way down the right arc.
    pub fn on_right(&self, rank: i64, span: i64) -> i64 {
        2 * self.side + (span - rank) * self.side / span
    }

    pub fn chord(&self, p: i64, q: i64, class: Class) -> Chord {
        let (x, y) = (p.min(q), p.max(q));
        let circle = 4 * self.side;
        let end = match class {
            Class::Short => Point {
                bottom: false,
                x: y,
            },
            Class::Long => Point {
                bottom: false,
                x: y - circle,
            },
            Class::Core => {
                debug_assert_eq!(self.topology, Topology::Mobius);
                Point {
                    bottom: true,
                    x: y - 2 * self.side,
                }
            }
        };
        Chord([Point { bottom: false, x }, end])
    }

    fn translate(&self, p: Point, k: i64) -> Point {
        match self.topology {
            Topology::Annulus => Point {
                bottom: p.bottom,
                x: p.x + 4 * k * self.side,
            },
            Topology::Mobius => Point {
                bottom: p.bottom ^ (k.rem_euclid(2) == 1),
                x: p.x + 2 * k * self.side,
            },
        }
    }

    /// Translates that can bring two lifts within reach of each other.
    fn reach(&self) -> std::ops::RangeInclusive<i64> {
        match self.topology {
            Topology::Annulus => -2..=2,
            Topology::Mobius => -4..=4,
        }
    }

    fn linked(a: &Chord, b: [Point; 2]) -> bool {
        let (lo, hi) = {
            let (p, q) = (a.0[0].key(), a.0[1].key());
            (p.min(q), p.max(q))
        };
        let inside = b
            .iter()
            .filter(|p| (lo < p.key()) && (p.key() < hi))
            .count();
        inside == 1
    }

    /// Minimal number of crossings between two distinct arcs.
    pub fn crossings(&self, a: &Chord, b: &Chord) -> usize {
        self.reach()
            .filter(|&k| {
                let moved = [self.translate(b.0[0], k), self.translate(b.0[1], k)];
                Frame::linked(a, moved)
            })
            .count()
    }

    /// Self-crossings of an arc; zero exactly when it embeds.
    pub fn self_crossings(&self, a: &Chord) -> usize {
        self.reach()
            .filter(|&k| k != 0)
            .filter(|&k| {
                let moved = [self.translate(a.0[0], k), self.translate(a.0[1], k)];
                Frame::linked(a, moved)
            })
            .count()
    }
}
