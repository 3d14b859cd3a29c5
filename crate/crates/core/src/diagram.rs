//! Signed Brauer diagrams.
//!
//! A diagram of size `n` is a perfect matching on the vertices `1..=2n`,
//! with `1..=n` forming the top row and `n+1..=2n` the bottom row. Every edge
//! carries an [`EdgeSign`]. Stacking `d1` above `d2` and joining the middle
//! rows gives a new diagram together with some closed loops; each loop is
//! removed and contributes `x^2` when positive and `x` when negative.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeSign {
    Positive,
    Negative,
}

impl EdgeSign {
    pub fn is_negative(self) -> bool {
        self == EdgeSign::Negative
    }

    pub fn flip(self) -> Self {
        match self {
            EdgeSign::Positive => EdgeSign::Negative,
            EdgeSign::Negative => EdgeSign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            EdgeSign::Positive => '+',
            EdgeSign::Negative => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(EdgeSign::Positive),
            '-' => Some(EdgeSign::Negative),
            _ => None,
        }
    }
}

impl Mul for EdgeSign {
    type Output = EdgeSign;

    fn mul(self, rhs: EdgeSign) -> EdgeSign {
        if self == rhs {
            EdgeSign::Positive
        } else {
            EdgeSign::Negative
        }
    }
}

impl fmt::Display for EdgeSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// One edge of a diagram, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub sign: EdgeSign,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedDiagram {
    n: usize,
    // partner[v - 1] is the other endpoint of the edge at v
    partner: Vec<usize>,
    // sign[v - 1] is the sign of the edge at v; both endpoints agree
    sign: Vec<EdgeSign>,
}

impl SignedDiagram {
    /// Checks that `edges` is a signed perfect matching on `1..=2n`.
    pub fn new(n: usize, edges: &[(usize, usize, EdgeSign)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let vertices = 2 * n;
        let mut partner = vec![0; vertices];
        let mut sign = vec![EdgeSign::Positive; vertices];
        let mut repeated = Vec::new();
        for &(u, v, s) in edges {
            for w in [u, v] {
                if w == 0 || w > vertices {
                    return Err(Error::PointOutOfRange {
                        point: w,
                        degree: vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for (w, other) in [(u, v), (v, u)] {
                if partner[w - 1] != 0 {
                    repeated.push(w);
                } else {
                    partner[w - 1] = other;
                    sign[w - 1] = s;
                }
            }
        }
        let unmatched: Vec<usize> = (1..=vertices).filter(|&w| partner[w - 1] == 0).collect();
        if !repeated.is_empty() || !unmatched.is_empty() {
            repeated.sort_unstable();
            repeated.dedup();
            if repeated.is_empty() && edges.len() != n {
                return Err(Error::WrongEdgeCount {
                    expected: n,
                    found: edges.len(),
                });
            }
            return Err(Error::BadMatching {
                repeated,
                unmatched,
            });
        }
        Ok(SignedDiagram { n, partner, sign })
    }

    pub fn identity(n: usize) -> Self {
        let partner = (1..=n).map(|i| i + n).chain(1..=n).collect();
        SignedDiagram {
            n,
            partner,
            sign: vec![EdgeSign::Positive; 2 * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Other endpoint and sign of the edge at vertex `v`.
    pub fn edge_at(&self, v: usize) -> (usize, EdgeSign) {
        (self.partner[v - 1], self.sign[v - 1])
    }

    /// Edges ordered by their lower endpoint.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (1..=2 * self.n).filter_map(move |v| {
            let (w, sign) = self.edge_at(v);
            (v < w).then_some(Edge { a: v, b: w, sign })
        })
    }

    fn is_top(&self, v: usize) -> bool {
        v <= self.n
    }

    /// True iff every edge joins the top row to the bottom row.
    pub fn is_vertical(&self) -> bool {
        (1..=self.n).all(|v| self.partner[v - 1] > self.n)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges().filter(|e| e.sign.is_negative()).count()
    }

    /// Returns a copy with the sign of the edge at `v` flipped.
    pub fn with_flipped_edge(&self, v: usize) -> Self {
        let mut out = self.clone();
        let w = self.partner[v - 1];
        out.sign[v - 1] = out.sign[v - 1].flip();
        out.sign[w - 1] = out.sign[w - 1].flip();
        out
    }

    /// Stacks `self` above `other` and joins the middle rows.
    ///
    /// Paths that end on the outer rows become edges of the result, signed by
    /// the parity of negative edges along them. Closed loops through the
    /// middle row are removed and counted.
    pub fn compose(&self, other: &SignedDiagram) -> Result<ScaledDiagram> {
        let n = self.n;
        if other.n != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: other.n,
            });
        }

        // middle[j - 1]: middle vertex j (bottom n+j of self, top j of other) visited
        let mut middle = vec![false; n];
        let mut partner = vec![0; 2 * n];
        let mut sign = vec![EdgeSign::Positive; 2 * n];

        // Walk from an outer vertex. `in_upper` tells which diagram the
        // current vertex belongs to.
        let walk = |start: usize, mut in_upper: bool, middle: &mut Vec<bool>| {
            let mut v = start;
            let mut acc = EdgeSign::Positive;
            loop {
                let d = if in_upper { self } else { other };
                let (w, s) = d.edge_at(v);
                acc = acc * s;
                if in_upper && d.is_top(w) {
                    return (w, acc);
                }
                if !in_upper && !d.is_top(w) {
                    return (w, acc);
                }
                // crossed into the middle row
                let j = if in_upper { w - n } else { w };
                middle[j - 1] = true;
                if in_upper {
                    v = j;
                    in_upper = false;
                } else {
                    v = j + n;
                    in_upper = true;
                }
            }
        };

        for start in (1..=n).map(|v| (v, true)).chain((n + 1..=2 * n).map(|v| (v, false))) {
            let (v, in_upper) = start;
            if partner[v - 1] != 0 {
                continue;
            }
            let (end, acc) = walk(v, in_upper, &mut middle);
            partner[v - 1] = end;
            partner[end - 1] = v;
            sign[v - 1] = acc;
            sign[end - 1] = acc;
        }

        let mut positive_loops = 0;
        let mut negative_loops = 0;
        for j0 in 1..=n {
            if middle[j0 - 1] {
                continue;
            }
            // every remaining middle vertex lies on a closed loop; alternate
            // between the lower edge (in `other`) and the upper edge (in `self`)
            let mut acc = EdgeSign::Positive;
            let mut j = j0;
            loop {
                middle[j - 1] = true;
                let (w, s) = other.edge_at(j);
                middle[w - 1] = true;
                acc = acc * s;
                let (w2, s2) = self.edge_at(w + n);
                acc = acc * s2;
                j = w2 - n;
                if j == j0 {
                    break;
                }
            }
            match acc {
                EdgeSign::Positive => positive_loops += 1,
                EdgeSign::Negative => negative_loops += 1,
            }
        }

        Ok(ScaledDiagram {
            positive_loops,
            negative_loops,
            diagram: SignedDiagram { n, partner, sign },
        })
    }

    /// Machine-readable line `n=<n>; <u>-<v>:<sign>; ...`.
    pub fn serialize(&self) -> String {
        let mut out = format!("n={}", self.n);
        for e in self.edges() {
            out.push_str(&format!("; {}-{}:{}", e.a, e.b, e.sign));
        }
        out
    }

    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Ascii => self.render_ascii(),
            RenderFormat::Dot => self.render_dot(),
        }
    }

    fn render_ascii(&self) -> String {
        let n = self.n;
        let width = (2 * n).to_string().len() + 3;
        let cell = |s: String| format!("{s:<width$}");
        let mut lines = vec![String::new(); 4];
        for i in 1..=n {
            lines[0].push_str(&cell(format!("o{i}")));
            lines[1].push_str(&cell(self.stroke(i)));
            lines[2].push_str(&cell(self.stroke(i + n)));
            lines[3].push_str(&cell(format!("o{}", i + n)));
        }
        let mut out = String::new();
        for line in lines {
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out.push_str(&self.serialize());
        out.push('\n');
        out
    }

    // `|+` marks a vertical strand, `=5+` a horizontal edge to vertex 5
    fn stroke(&self, v: usize) -> String {
        let (w, s) = self.edge_at(v);
        if self.is_top(v) != self.is_top(w) {
            format!("|{s}")
        } else {
            format!("={w}{s}")
        }
    }

    fn render_dot(&self) -> String {
        let n = self.n;
        let mut out = format!("// {}\ngraph diagram {{\n", self.serialize());
        for row in [1..=n, n + 1..=2 * n] {
            out.push_str("  { rank=same;");
            for v in row {
                out.push_str(&format!(" v{v} [label=\"{v}\"];"));
            }
            out.push_str(" }\n");
        }
        for e in self.edges() {
            let style = match e.sign {
                EdgeSign::Positive => "solid",
                EdgeSign::Negative => "dashed",
            };
            out.push_str(&format!(
                "  v{} -- v{} [label=\"{}\", style={style}];\n",
                e.a, e.b, e.sign
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Reads a diagram from its machine-readable line.
///
/// The first line whose content (after any leading `//` or `#`) starts with
/// `n=` is used, so the output of [`SignedDiagram::render`] parses back.
pub fn parse_diagram(text: &str) -> Result<SignedDiagram> {
    let line = text
        .lines()
        .map(|l| l.trim().trim_start_matches("//").trim_start_matches('#').trim())
        .find(|l| l.starts_with("n="))
        .ok_or_else(|| Error::parse("diagram", text.trim(), "expected a line starting with `n=`"))?;

    let mut parts = line.split(';').map(str::trim);
    let head = parts.next().unwrap_or_default();
    let n: usize = head["n=".len()..]
        .trim()
        .parse()
        .map_err(|_| Error::parse("diagram", head, "expected `n=<positive integer>`"))?;

    let mut edges = Vec::new();
    for part in parts.filter(|p| !p.is_empty()) {
        let bad = |reason: &str| Error::parse("diagram", part, reason);
        let (ends, sign) = part.split_once(':').ok_or_else(|| bad("expected `<u>-<v>:<sign>`"))?;
        let (u, v) = ends.split_once('-').ok_or_else(|| bad("expected `<u>-<v>`"))?;
        let u = u.trim().parse().map_err(|_| bad("expected a vertex number"))?;
        let v = v.trim().parse().map_err(|_| bad("expected a vertex number"))?;
        let mut chars = sign.trim().chars();
        let sign = match (chars.next().and_then(EdgeSign::from_symbol), chars.next()) {
            (Some(s), None) => s,
            _ => return Err(bad("expected sign `+` or `-`")),
        };
        edges.push((u, v, sign));
    }
    SignedDiagram::new(n, &edges)
}

impl FromStr for SignedDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s)
    }
}

impl fmt::Display for SignedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Dot,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "dot" => Ok(RenderFormat::Dot),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// The product of two diagrams: `x^exponent` times a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledDiagram {
    pub positive_loops: u32,
    pub negative_loops: u32,
    pub diagram: SignedDiagram,
}

impl ScaledDiagram {
    /// `2 * positive_loops + negative_loops`.
    pub fn exponent(&self) -> u32 {
        2 * self.positive_loops + self.negative_loops
    }
}

impl fmt::Display for ScaledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} {}", self.exponent(), self.diagram)
    }
}
