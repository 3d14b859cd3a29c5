//! Permutations of `{1..m}`.
//!
//! A [`Permutation`] stores its image table with 1-based values. Composition
//! is diagrammatic: `p.compose(&q)` applies `p` first and then `q`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_transpositions(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl Mul for Parity {
    type Output = Parity;

    fn mul(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A bijection of `{1..m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i - 1] is the image of point i
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// Builds a permutation from its image table, `images[i - 1]` being the
    /// image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for &image in &images {
            if image == 0 || image > degree {
                return Err(Error::PointOutOfRange {
                    point: image,
                    degree,
                });
            }
            if std::mem::replace(&mut seen[image - 1], true) {
                return Err(Error::RepeatedPoint(image));
            }
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection of `1..=images.len()`.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &point in cycle {
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                if std::mem::replace(&mut seen[point - 1], true) {
                    return Err(Error::RepeatedPoint(point));
                }
            }
            for (k, &point) in cycle.iter().enumerate() {
                images[point - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `i`. Panics if `i` is out of range.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `p.compose(q)` maps `i` to `q(p(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| other.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Canonical cycle decomposition.
    pub fn cycles(&self) -> CycleDecomposition {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        // starting from the smallest unvisited point makes every cycle
        // min-first and the list sorted by first element
        for start in 1..=self.degree() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next - 1] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        CycleDecomposition {
            degree: self.degree(),
            cycles,
        }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut count = 0;
        for start in 1..=self.degree() {
            if seen[start - 1] {
                continue;
            }
            count += 1;
            let mut next = start;
            while !seen[next - 1] {
                seen[next - 1] = true;
                next = self.apply(next);
            }
        }
        count
    }

    /// Even iff `degree - cycle_count` is even.
    pub fn parity(&self) -> Parity {
        Parity::from_transpositions(self.degree() - self.cycle_count())
    }

    /// Parses cycle notation such as `(1 3)(2 4)`, `e` or `()`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let trimmed = text.trim();
        if trimmed == "e" {
            return Ok(Permutation::identity(degree));
        }
        if trimmed.is_empty() {
            return Err(Error::parse("cycle notation", "", "empty input"));
        }
        if !trimmed.is_ascii() {
            return Err(Error::parse("cycle notation", trimmed, "non-ASCII input"));
        }

        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::parse("cycle notation", rest, "expected `(`"));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::parse("cycle notation", rest, "unclosed `(`"));
            };
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::parse("cycle notation", rest, "nested `(`"));
            }
            let mut cycle = Vec::new();
            for token in inner.split_whitespace() {
                let point: usize = token
                    .parse()
                    .map_err(|_| Error::parse("cycle notation", token, "expected a positive integer"))?;
                cycle.push(point);
            }
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    /// Canonical cycle notation; the identity formats as `e`.
    pub fn format_cycles(&self) -> String {
        self.cycles().to_string()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] to get an error.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("degree mismatch in permutation product")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.cycles(), f)
    }
}

/// Disjoint cycles of a permutation in canonical form: each cycle starts at
/// its minimum, cycles are sorted by first element, 1-cycles are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn fixed_point_count(&self) -> usize {
        self.degree - self.cycles.iter().map(Vec::len).sum::<usize>()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        let mut moved = vec![false; self.degree];
        for &p in self.cycles.iter().flatten() {
            moved[p - 1] = true;
        }
        (1..=self.degree).filter(|&p| !moved[p - 1]).collect()
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.degree, &self.cycles)
            .expect("canonical decomposition is always valid")
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("e");
        }
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses `degree:cycles`, e.g. `4:(1 2)(3 4)`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some((degree, cycles)) = s.split_once(':') else {
            return Err(Error::parse("permutation", s, "expected `<degree>:<cycles>`"));
        };
        let degree = degree
            .trim()
            .parse()
            .map_err(|_| Error::parse("permutation", degree, "expected a degree"))?;
        Permutation::parse_cycles(cycles, degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn compose_applies_left_first() {
        assert_eq!(Permutation::identity(4).compose(&p("(1 2)", 4)).unwrap(), p("(1 2)", 4));
        assert_eq!(p("(1 2)(3 4)", 4).compose(&p("(1 3)", 4)).unwrap(), p("(1 2 3 4)", 4));
        let q = p("(1 7 3 9)(6 2 8 4)(5 10)", 10);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Permutation::identity(3).compose(&Permutation::identity(4)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn inverse_examples() {
        assert!(Permutation::identity(5).inverse().is_identity());
        assert_eq!(p("(1 2 3 4)", 4).inverse(), p("(1 4 3 2)", 4));
        assert_eq!(p("(1 3)(2 4)", 4).inverse(), p("(1 3)(2 4)", 4));
    }

    #[test]
    fn cycles_canonical_form() {
        let id = Permutation::identity(10).cycles();
        assert!(id.cycles().is_empty());
        assert_eq!(id.fixed_point_count(), 10);

        // 1→3→5→2→4→1 and 6→8→10→7→9→6
        let q = Permutation::from_images(vec![3, 4, 5, 1, 2, 8, 9, 10, 6, 7]).unwrap();
        assert_eq!(q.format_cycles(), "(1 3 5 2 4)(6 8 10 7 9)");

        let r = p("(1 8 4 9)(7 2 10 3)(5 12)(6 11)", 12);
        assert_eq!(r.format_cycles(), "(1 8 4 9)(2 10 3 7)(5 12)(6 11)");
    }

    #[test]
    fn parity_examples() {
        assert_eq!(Permutation::identity(7).parity(), Parity::Even);
        assert_eq!(p("(1 7 3 9)(6 2 8 4)(5 10)", 10).parity(), Parity::Odd);
        assert_eq!(p("(1 8 4 9)(7 2 10 3)(5 12)(6 11)", 12).parity(), Parity::Even);
    }

    #[test]
    fn parity_multiplication_table() {
        use Parity::*;
        assert_eq!(Even * Even, Even);
        assert_eq!(Even * Odd, Odd);
        assert_eq!(Odd * Even, Odd);
        assert_eq!(Odd * Odd, Even);
    }

    #[test]
    fn parse_examples() {
        let q = p("(1 3)(2 4)", 4);
        assert_eq!(q.images(), &[3, 4, 1, 2]);
        assert!(p("e", 4).is_identity());
        assert!(p("()", 4).is_identity());
        assert!(p("  ( 3 )  ", 4).is_identity());
        assert_eq!(p("(1 2 3 4)", 4).format_cycles(), "(1 2 3 4)");
        assert_eq!(Permutation::identity(3).format_cycles(), "e");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Permutation::parse_cycles("(1 2)(2 3)", 4).unwrap_err(),
            Error::RepeatedPoint(2)
        );
        assert_eq!(
            Permutation::parse_cycles("(1 5)", 4).unwrap_err(),
            Error::PointOutOfRange { point: 5, degree: 4 }
        );
        assert!(matches!(
            Permutation::parse_cycles("(1 2", 4),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("1 2", 4),
            Err(Error::Parse { .. })
        ));
        match Permutation::parse_cycles("(1 x)", 4) {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Permutation::parse_cycles("", 4).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 4).is_err());
        assert_eq!(Permutation::parse_cycles("e", 0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn from_images_validates() {
        assert_eq!(
            Permutation::from_images(vec![1, 1, 2]).unwrap_err(),
            Error::RepeatedPoint(1)
        );
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_images(vec![2, 3]).is_err());
    }

    #[test]
    fn fixed_points_listed() {
        let d = p("(2 4)", 5).cycles();
        assert_eq!(d.fixed_points(), vec![1, 3, 5]);
        assert_eq!(d.to_permutation(), p("(2 4)", 5));
    }

    #[test]
    fn from_str_with_degree_prefix() {
        let q: Permutation = "6:(1 2 6)(3 4 5)".parse().unwrap();
        assert_eq!(q.degree(), 6);
        assert_eq!(q.apply(6), 1);
    }
}
