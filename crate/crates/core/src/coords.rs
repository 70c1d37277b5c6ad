//! Coordinate systems for multicurves on `K_n`.
//!
//! Two encodings are used throughout the crate:
//!
//! * [`DynnikovCoordinates`] `(a; b; t; c1, c2)`, the canonical integer vector of
//!   dimension `2n + 2`;
//! * [`TriangleCoordinates`] `(alpha; beta; gamma; c1, c2)`, the raw intersection
//!   counts of a minimal representative with the reference arcs and core curves.
//!
//! A negative `c_k` encodes closed non-primitive components around crosscap `k`:
//! `-1` is the core curve, `-2m` is `m` copies of the curve bounding the crosscap,
//! `-2m - 1` is both.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `max(x, 0)`.
#[inline]
pub fn pos(x: i64) -> i64 {
    x.max(0)
}

/// The surface `K_n`: genus two, one boundary component, `n >= 2` punctures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    n: usize,
}

impl SurfaceSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSurface(n));
        }
        Ok(SurfaceSpec { n })
    }

    pub fn punctures(&self) -> usize {
        self.n
    }

    /// Dimension `2n + 2` of the coordinate vector.
    pub fn dimension(&self) -> usize {
        2 * self.n + 2
    }
}

/// Generalized Dynnikov coordinates `(a_1..a_{n-1}; b_1..b_n; t; c_1, c_2)`.
///
/// Vectors are stored zero-based; the `*_at` accessors take the one-based index
/// used in the formulas.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynnikovCoordinates {
    pub n: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub t: i64,
    pub c: [i64; 2],
}

impl DynnikovCoordinates {
    pub fn new(n: usize, a: Vec<i64>, b: Vec<i64>, t: i64, c: [i64; 2]) -> Self {
        DynnikovCoordinates { n, a, b, t, c }
    }

    pub fn a_at(&self, i: usize) -> i64 {
        self.a[i - 1]
    }

    pub fn b_at(&self, i: usize) -> i64 {
        self.b[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.t == 0
            && self.c == [0, 0]
            && self.a.iter().all(|&x| x == 0)
            && self.b.iter().all(|&x| x == 0)
    }

    /// Block lengths match `n` and `n` is a valid puncture count.
    pub fn check_dimensions(&self) -> Result<()> {
        SurfaceSpec::new(self.n)?;
        if self.a.len() != self.n - 1 {
            return Err(Error::DimensionMismatch(format!(
                "a has {} entries, expected {} for n = {}",
                self.a.len(),
                self.n - 1,
                self.n
            )));
        }
        if self.b.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "b has {} entries, expected {} for n = {}",
                self.b.len(),
                self.n,
                self.n
            )));
        }
        Ok(())
    }
}

impl fmt::Display for DynnikovCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coords(self))
    }
}

/// A [`DynnikovCoordinates`] value known to have consistent dimensions and a
/// nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValidatedCoordinates(DynnikovCoordinates);

impl ValidatedCoordinates {
    pub fn coords(&self) -> &DynnikovCoordinates {
        &self.0
    }

    pub fn into_inner(self) -> DynnikovCoordinates {
        self.0
    }
}

impl std::ops::Deref for ValidatedCoordinates {
    type Target = DynnikovCoordinates;

    fn deref(&self) -> &DynnikovCoordinates {
        &self.0
    }
}

/// Accepts every nonzero integer vector of the right shape, negative `c`
/// entries included.
pub fn validate(coords: &DynnikovCoordinates) -> Result<ValidatedCoordinates> {
    coords.check_dimensions()?;
    if coords.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(ValidatedCoordinates(coords.clone()))
}

/// Intersection counts `(alpha_1..alpha_{2n-2}; beta_1..beta_{n+1}; gamma; c_1, c_2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleCoordinates {
    pub n: usize,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub gamma: i64,
    pub c: [i64; 2],
}

impl TriangleCoordinates {
    pub fn alpha_at(&self, i: usize) -> i64 {
        self.alpha[i - 1]
    }

    pub fn beta_at(&self, i: usize) -> i64 {
        self.beta[i - 1]
    }

    /// Dimensions, sign of the raw counts, and the three parity conditions.
    pub fn check_shape(&self) -> Result<()> {
        SurfaceSpec::new(self.n)?;
        let n = self.n;
        if self.alpha.len() != 2 * n - 2 {
            return Err(Error::DimensionMismatch(format!(
                "alpha has {} entries, expected {}",
                self.alpha.len(),
                2 * n - 2
            )));
        }
        if self.beta.len() != n + 1 {
            return Err(Error::DimensionMismatch(format!(
                "beta has {} entries, expected {}",
                self.beta.len(),
                n + 1
            )));
        }
        if self.alpha.iter().chain(&self.beta).any(|&x| x < 0) || self.gamma < 0 {
            return Err(Error::InconsistentTriangle(
                "intersection counts must be nonnegative".into(),
            ));
        }
        if let Some(i) = self.beta.iter().position(|x| x % 2 != 0) {
            return Err(Error::ParityViolation(format!("beta_{} is odd", i + 1)));
        }
        for i in 1..n {
            if (self.alpha_at(2 * i - 1) - self.alpha_at(2 * i)) % 2 != 0 {
                return Err(Error::ParityViolation(format!(
                    "alpha_{} and alpha_{} differ in parity",
                    2 * i - 1,
                    2 * i
                )));
            }
        }
        if self.gamma % 2 != 0 {
            return Err(Error::ParityViolation("gamma is odd".into()));
        }
        Ok(())
    }
}

impl fmt::Display for TriangleCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}; {}; {},{})",
            join(&self.alpha),
            join(&self.beta),
            self.gamma,
            self.c[0],
            self.c[1]
        )
    }
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Canonical text form, e.g. `(2; 1,0; -2; 2,0)`.
pub fn format_coords(coords: &DynnikovCoordinates) -> String {
    format!(
        "({}; {}; {}; {},{})",
        join(&coords.a),
        join(&coords.b),
        coords.t,
        coords.c[0],
        coords.c[1]
    )
}

/// Parses the canonical text form for a surface with `n` punctures.
///
/// Whitespace is ignored, the enclosing parentheses are optional, and the
/// Unicode minus sign is accepted alongside `-`.
pub fn parse_coords(text: &str, n: usize) -> Result<DynnikovCoordinates> {
    SurfaceSpec::new(n)?;
    let coords = parse_blocks(text)?;
    if coords.b.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "b has {} entries, expected {} for n = {}",
            coords.b.len(),
            n,
            n
        )));
    }
    let coords = DynnikovCoordinates { n, ..coords };
    coords.check_dimensions()?;
    Ok(coords)
}

/// Like [`parse_coords`] but takes `n` from the length of the `b` block.
pub fn parse_coords_any(text: &str) -> Result<DynnikovCoordinates> {
    let coords = parse_blocks(text)?;
    coords.check_dimensions()?;
    Ok(coords)
}

/// Parses triangle coordinates written as `(alpha; beta; gamma; c1,c2)`.
///
/// `n` is taken from the length of `beta`, which must be `n + 1`.
pub fn parse_triangle(text: &str) -> Result<TriangleCoordinates> {
    let raw = parse_blocks(text)?;
    let n = raw
        .b
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::DimensionMismatch("beta block is empty".into()))?;
    SurfaceSpec::new(n)?;
    let tri = TriangleCoordinates {
        n,
        alpha: raw.a,
        beta: raw.b,
        gamma: raw.t,
        c: raw.c,
    };
    tri.check_shape()?;
    Ok(tri)
}

fn parse_blocks(text: &str) -> Result<DynnikovCoordinates> {
    let mut body: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, ch)| !ch.is_whitespace())
        .collect();
    let end = text.len();
    if let Some(&(p, '(')) = body.first() {
        match body.last() {
            Some(&(_, ')')) if body.len() >= 2 => {
                body.pop();
                body.remove(0);
            }
            _ => {
                return Err(Error::Syntax {
                    pos: p,
                    msg: "unbalanced parenthesis".into(),
                })
            }
        }
    } else if let Some(&(p, ')')) = body.last() {
        return Err(Error::Syntax {
            pos: p,
            msg: "unbalanced parenthesis".into(),
        });
    }

    let mut blocks: Vec<Vec<i64>> = vec![Vec::new()];
    let mut token = String::new();
    let mut token_start = None;
    let flush = |token: &mut String,
                 start: &mut Option<usize>,
                 at: usize,
                 blocks: &mut Vec<Vec<i64>>|
     -> Result<()> {
        let p = start.take().unwrap_or(at);
        if token.is_empty() {
            return Err(Error::Syntax {
                pos: p,
                msg: "expected an integer".into(),
            });
        }
        let value: i64 = token.parse().map_err(|_| Error::Syntax {
            pos: p,
            msg: format!("invalid integer `{token}`"),
        })?;
        blocks.last_mut().expect("nonempty").push(value);
        token.clear();
        Ok(())
    };

    for &(p, ch) in &body {
        match ch {
            ',' => flush(&mut token, &mut token_start, p, &mut blocks)?,
            ';' => {
                flush(&mut token, &mut token_start, p, &mut blocks)?;
                blocks.push(Vec::new());
            }
            '-' | '\u{2212}' | '+' if token.is_empty() => {
                token_start.get_or_insert(p);
                if ch != '+' {
                    token.push('-');
                }
            }
            '0'..='9' => {
                token_start.get_or_insert(p);
                token.push(ch);
            }
            _ => {
                return Err(Error::Syntax {
                    pos: p,
                    msg: format!("unexpected character `{ch}`"),
                })
            }
        }
    }
    let at = body.last().map(|&(p, _)| p + 1).unwrap_or(end);
    flush(&mut token, &mut token_start, at, &mut blocks)?;

    if blocks.len() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "expected 4 blocks (a; b; t; c), found {}",
            blocks.len()
        )));
    }
    let c = std::mem::take(&mut blocks[3]);
    let t = std::mem::take(&mut blocks[2]);
    let b = std::mem::take(&mut blocks[1]);
    let a = std::mem::take(&mut blocks[0]);
    if t.len() != 1 {
        return Err(Error::DimensionMismatch(format!(
            "t block has {} entries, expected 1",
            t.len()
        )));
    }
    if c.len() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "c block has {} entries, expected 2",
            c.len()
        )));
    }
    let n = b.len();
    Ok(DynnikovCoordinates {
        n,
        a,
        b,
        t: t[0],
        c: [c[0], c[1]],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(n: usize, a: &[i64], b: &[i64], t: i64, c: [i64; 2]) -> DynnikovCoordinates {
        DynnikovCoordinates::new(n, a.to_vec(), b.to_vec(), t, c)
    }

    #[test]
    fn validate_accepts_second_example() {
        let x = v(2, &[-1], &[1, 0], 1, [1, 1]);
        assert_eq!(validate(&x).unwrap().coords(), &x);
    }

    #[test]
    fn validate_rejects_zero() {
        assert_eq!(
            validate(&v(2, &[0], &[0, 0], 0, [0, 0])),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn validate_rejects_short_a() {
        let err = validate(&v(3, &[1], &[0, 0, 0], 0, [0, 0])).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)), "{err:?}");
    }

    #[test]
    fn validate_accepts_negative_c() {
        assert!(validate(&v(2, &[0], &[0, 0], 0, [-3, 0])).is_ok());
    }

    #[test]
    fn validate_rejects_n_one() {
        assert_eq!(
            validate(&v(1, &[], &[0], 1, [0, 0])),
            Err(Error::InvalidSurface(1))
        );
    }

    #[test]
    fn parse_example_text() {
        let x = parse_coords("(2; 1,0; -2; 2,0)", 2).unwrap();
        assert_eq!(x, v(2, &[2], &[1, 0], -2, [2, 0]));
        assert_eq!(format_coords(&x), "(2; 1,0; -2; 2,0)");
    }

    #[test]
    fn parse_is_whitespace_insensitive() {
        let x = parse_coords("  ( \u{2212}1 ;1 , 0;  1;1,\t1 ) ", 2).unwrap();
        assert_eq!(x, v(2, &[-1], &[1, 0], 1, [1, 1]));
        assert_eq!(parse_coords("-1;1,0;1;1,1", 2).unwrap(), x);
    }

    #[test]
    fn parse_wrong_b_length() {
        let err = parse_coords("(1; 1; 0; 0,0)", 2).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)), "{err:?}");
    }

    #[test]
    fn parse_five_block_tuple_is_rejected() {
        let err = parse_coords("(0; 0; 0,-1; 0; 1,1)", 2).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)), "{err:?}");
    }

    #[test]
    fn parse_reports_position() {
        match parse_coords("(2; 1,x; -2; 2,0)", 2) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        match parse_coords("(2; 1,,0; -2; 2,0)", 2) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_coords("(2; 1,0; -2; 2,0", 2),
            Err(Error::Syntax { pos: 0, .. })
        ));
    }

    #[test]
    fn parse_infers_n() {
        let x = parse_coords_any("(0,1; 0,0,-1; 0; 1,1)").unwrap();
        assert_eq!(x.n, 3);
    }

    #[test]
    fn json_shape() {
        let x = v(2, &[2], &[1, 0], -2, [2, 0]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":2,"a":[2],"b":[1,0],"t":-2,"c":[2,0]}"#);
        let back: DynnikovCoordinates = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    fn arb_coords() -> impl Strategy<Value = DynnikovCoordinates> {
        (2usize..6).prop_flat_map(|n| {
            (
                proptest::collection::vec(-1000i64..1000, n - 1),
                proptest::collection::vec(-1000i64..1000, n),
                any::<i64>(),
                any::<[i64; 2]>(),
            )
                .prop_map(move |(a, b, t, c)| DynnikovCoordinates { n, a, b, t, c })
        })
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(x in arb_coords()) {
            let text = format_coords(&x);
            let back = parse_coords(&text, x.n).unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(format_coords(&back), text);
        }

        #[test]
        fn validate_rejects_only_zero(x in arb_coords()) {
            prop_assert_eq!(validate(&x).is_ok(), !x.is_zero());
        }
    }
}
