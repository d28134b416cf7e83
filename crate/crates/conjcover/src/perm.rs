//! Permutations on a fixed number of points, with cycle-notation parsing.
//!
//! Points are 0-based internally and 1-based in cycle notation. Composition
//! is left-to-right throughout the crate: `a.compose(&b)` applies `a` first,
//! then `b`, so it represents the product `ab` acting on the right.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, degree − 1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Perm> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            let img = img as usize;
            if img >= degree {
                return Err(Error::PointOutOfRange {
                    point: img + 1,
                    degree,
                });
            }
            if seen[img] {
                return Err(Error::InvalidParameter(format!(
                    "image array is not a bijection: {} repeated",
                    img + 1
                )));
            }
            seen[img] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    /// Left-to-right product: apply `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// Like [`compose`](Self::compose) but reports degree mismatches.
    pub fn compose_checked(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Perm { images }
    }

    /// Multiplicative order of the permutation.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image(p);
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Disjoint cycles in canonical form: each cycle starts at its smallest
    /// point, cycles sorted by that point, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Parses cycle notation on `degree` points.
    ///
    /// Grammar: one or more parenthesized cycles of 1-based points separated
    /// by spaces or commas; `e` or `()` denotes the identity; cycles within
    /// one expression must be disjoint.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        Parser::new(text, degree).run()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    degree: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, degree: usize) -> Parser<'a> {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            degree,
        }
    }

    fn err<T>(&self, pos: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn run(mut self) -> Result<Perm> {
        self.skip_ws();
        if self.pos >= self.bytes.len() {
            return self.err(self.pos, "empty expression");
        }
        if self.bytes[self.pos] == b'e' {
            self.pos += 1;
            self.skip_ws();
            if self.pos < self.bytes.len() {
                return self.err(self.pos, "trailing input after identity");
            }
            return Ok(Perm::identity(self.degree));
        }

        let mut images: Vec<u16> = (0..self.degree as u16).collect();
        let mut used = vec![false; self.degree];
        let mut saw_cycle = false;
        loop {
            self.skip_ws();
            if self.pos >= self.bytes.len() {
                break;
            }
            if self.bytes[self.pos] != b'(' {
                return self.err(self.pos, "expected '('");
            }
            self.pos += 1;
            let cycle = self.cycle_points(&mut used)?;
            saw_cycle = true;
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                images[from] = to as u16;
            }
        }
        if !saw_cycle {
            return self.err(self.pos, "empty expression");
        }
        Ok(Perm { images })
    }

    /// Parses the interior of one cycle up to and past the closing paren,
    /// returning 0-based points. `()` yields an empty cycle (identity).
    fn cycle_points(&mut self, used: &mut [bool]) -> Result<Vec<usize>> {
        let mut points = Vec::new();
        loop {
            self.skip_ws();
            if self.pos >= self.bytes.len() {
                return self.err(self.pos, "unclosed '('");
            }
            match self.bytes[self.pos] {
                b')' => {
                    self.pos += 1;
                    return Ok(points);
                }
                b',' => {
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    let mut value = 0usize;
                    while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                        value = value * 10 + (self.bytes[self.pos] - b'0') as usize;
                        if value > u16::MAX as usize {
                            return self.err(start, "point too large");
                        }
                        self.pos += 1;
                    }
                    if value == 0 {
                        return self.err(start, "points are 1-based; 0 is not a point");
                    }
                    if value > self.degree {
                        return Err(Error::PointOutOfRange {
                            point: value,
                            degree: self.degree,
                        });
                    }
                    let point = value - 1;
                    if used[point] {
                        return self.err(start, format!("point {value} repeated in expression"));
                    }
                    used[point] = true;
                    points.push(point);
                }
                c => {
                    return self.err(self.pos, format!("unexpected character '{}'", c as char));
                }
            }
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
