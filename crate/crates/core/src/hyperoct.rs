//! Signed permutations: the group of vertical signed diagrams.
//!
//! A [`SignedPermutation`] of size `n` sends strand `i` from top vertex `i`
//! to bottom vertex `n + underlying(i)` with a sign. Multiplication stacks
//! diagrams top to bottom, so `a.mul(&b)` applies `a` first.
//!
//! [`SignedPermutation::embed`] realises the group inside `S_2n`: a positive
//! strand `i -> k` maps `i -> k` and `i* -> k*`, a negative one maps
//! `i -> k*` and `i* -> k`, where `*` swaps the two halves of `{1..2n}`.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{EdgeSign, SignedDiagram};
use crate::perm::Permutation;
use crate::{Error, Result};

/// Swaps the halves of `{1..2n}`: `i + n` for `i <= n`, `i - n` otherwise.
pub fn star(i: usize, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    match i {
        0 => Err(Error::PointOutOfRange { point: i, degree: 2 * n }),
        i if i <= n => Ok(i + n),
        i if i <= 2 * n => Ok(i - n),
        _ => Err(Error::PointOutOfRange { point: i, degree: 2 * n }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    underlying: Permutation,
    signs: Vec<EdgeSign>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            underlying: Permutation::identity(n),
            signs: vec![EdgeSign::Positive; n],
        }
    }

    pub fn new(underlying: Permutation, signs: Vec<EdgeSign>) -> Result<Self> {
        if signs.len() != underlying.degree() {
            return Err(Error::DegreeMismatch {
                left: underlying.degree(),
                right: signs.len(),
            });
        }
        Ok(SignedPermutation { underlying, signs })
    }

    /// Identity permutation with the given strand signs.
    pub fn sign_flips(signs: Vec<EdgeSign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let n = signs.len();
        SignedPermutation::new(Permutation::identity(n), signs)
    }

    pub fn n(&self) -> usize {
        self.underlying.degree()
    }

    pub fn underlying(&self) -> &Permutation {
        &self.underlying
    }

    pub fn signs(&self) -> &[EdgeSign] {
        &self.signs
    }

    /// Sign of the strand leaving top vertex `i` (1-based).
    pub fn sign(&self, i: usize) -> EdgeSign {
        self.signs[i - 1]
    }

    pub fn neg_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_negative()).count()
    }

    pub fn is_identity(&self) -> bool {
        self.underlying.is_identity() && self.neg_count() == 0
    }

    /// The image of this element in `S_2n`.
    pub fn embed(&self) -> Permutation {
        let n = self.n();
        let mut images = vec![0; 2 * n];
        for i in 1..=n {
            let k = self.underlying.apply(i);
            let (lo, hi) = match self.sign(i) {
                EdgeSign::Positive => (k, k + n),
                EdgeSign::Negative => (k + n, k),
            };
            images[i - 1] = lo;
            images[i + n - 1] = hi;
        }
        Permutation::from_images_unchecked(images)
    }

    /// Recovers the signed permutation whose embedding is `p`, if any.
    pub fn from_embedded(p: &Permutation) -> Result<Self> {
        let degree = p.degree();
        if !degree.is_multiple_of(2) {
            return Err(Error::NotBijection(format!(
                "degree {degree} is odd, so it is not of the form 2n"
            )));
        }
        let n = degree / 2;
        let mut images = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for i in 1..=n {
            let image = p.apply(i);
            let (k, sign) = if image <= n {
                (image, EdgeSign::Positive)
            } else {
                (image - n, EdgeSign::Negative)
            };
            if p.apply(i + n) != star(image, n)? {
                return Err(Error::NotBijection(format!(
                    "{} does not commute with i -> i*: {} maps to {} but {} maps to {}",
                    p,
                    i,
                    image,
                    i + n,
                    p.apply(i + n)
                )));
            }
            images.push(k);
            signs.push(sign);
        }
        SignedPermutation::new(Permutation::from_images(images)?, signs)
    }

    /// Product with `self` applied first.
    pub fn mul(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let underlying = self.underlying.compose(&other.underlying)?;
        let signs = (1..=self.n())
            .map(|i| self.sign(i) * other.sign(self.underlying.apply(i)))
            .collect();
        Ok(SignedPermutation { underlying, signs })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let underlying = self.underlying.inverse();
        let signs = (1..=self.n()).map(|j| self.sign(underlying.apply(j))).collect();
        SignedPermutation { underlying, signs }
    }

    /// `g * self * g^-1`, reading left to right.
    pub fn conjugate_by(&self, g: &SignedPermutation) -> Result<SignedPermutation> {
        g.mul(self)?.mul(&g.inverse())
    }

    pub fn to_diagram(&self) -> SignedDiagram {
        let n = self.n();
        let edges: Vec<_> = (1..=n)
            .map(|i| (i, n + self.underlying.apply(i), self.sign(i)))
            .collect();
        SignedDiagram::new(n, &edges).expect("strands of a signed permutation form a matching")
    }

    pub fn from_diagram(d: &SignedDiagram) -> Result<SignedPermutation> {
        let n = d.n();
        let mut images = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for i in 1..=n {
            let (w, sign) = d.edge_at(i);
            if w <= n {
                return Err(Error::HorizontalEdge(i.min(w), i.max(w)));
            }
            images.push(w - n);
            signs.push(sign);
        }
        SignedPermutation::new(Permutation::from_images(images)?, signs)
    }

    /// Window notation such as `+2 -1`.
    pub fn parse_window(text: &str) -> Result<SignedPermutation> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::parse("window notation", text, "no tokens"));
        }
        let n = tokens.len();
        let mut images = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for token in &tokens {
            let mut chars = token.chars();
            let sign = chars
                .next()
                .and_then(EdgeSign::from_symbol)
                .ok_or_else(|| Error::parse("window notation", *token, "expected `+k` or `-k`"))?;
            let magnitude: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::parse("window notation", *token, "expected `+k` or `-k`"))?;
            if magnitude == 0 || magnitude > n {
                return Err(Error::parse(
                    "window notation",
                    *token,
                    format!("magnitude must lie in 1..={n}"),
                ));
            }
            images.push(magnitude);
            signs.push(sign);
        }
        let underlying = Permutation::from_images(images).map_err(|e| match e {
            Error::RepeatedPoint(k) => {
                Error::NotBijection(format!("magnitude {k} appears more than once in `{}`", text.trim()))
            }
            other => other,
        })?;
        SignedPermutation::new(underlying, signs)
    }

    pub fn format_window(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n() {
            if i > 1 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", self.sign(i), self.underlying.apply(i))?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::parse_window(s)
    }
}
