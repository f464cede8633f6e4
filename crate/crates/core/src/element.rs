//! Arithmetic of the Brandt semigroup `B_n = {0} ∪ {(i,j) : 1 ≤ i,j ≤ n}`.
//!
//! Elements are plain values that do not carry their dimension. Products do
//! not depend on `n` at all, so multiplication of [`Element`]s is context free; validity
//! against a particular `n` is checked by [`Brandt`] at the API boundary.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::parse::Cursor;

/// A non-zero element `(row, col)` of `B_n`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub row: u32,
    pub col: u32,
}

impl Pair {
    pub const fn new(row: u32, col: u32) -> Self {
        Pair { row, col }
    }

    pub fn is_idempotent(self) -> bool {
        self.row == self.col
    }

    /// `(e,k)·(l,m) = (e,m)` when `k = l`, otherwise the product is zero.
    pub fn product(self, rhs: Pair) -> Option<Pair> {
        (self.col == rhs.row).then_some(Pair::new(self.row, rhs.col))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An element of `B_n`. The derived order (zero first, then pairs
/// lexicographically) is the enumeration order used everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Zero,
    Pair(Pair),
}

impl Element {
    pub const fn pair(row: u32, col: u32) -> Self {
        Element::Pair(Pair::new(row, col))
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Element::Zero)
    }

    pub fn as_pair(self) -> Option<Pair> {
        match self {
            Element::Zero => None,
            Element::Pair(p) => Some(p),
        }
    }
}

impl Mul for Element {
    type Output = Element;

    fn mul(self, rhs: Element) -> Element {
        match (self, rhs) {
            (Element::Pair(a), Element::Pair(b)) => {
                a.product(b).map_or(Element::Zero, Element::Pair)
            }
            _ => Element::Zero,
        }
    }
}

impl From<Pair> for Element {
    fn from(p: Pair) -> Self {
        Element::Pair(p)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zero => f.write_str("0"),
            Element::Pair(p) => p.fmt(f),
        }
    }
}

/// The semigroup `B_n` for a fixed dimension `n ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Brandt {
    n: u32,
}

impl Brandt {
    /// Largest supported dimension; keeps `n² + 1` and element indices in `u32`.
    pub const MAX_N: u32 = 1 << 15;

    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > Self::MAX_N {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Brandt { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `|B_n| = n² + 1`.
    pub fn cardinality(&self) -> usize {
        let n = self.n as usize;
        n * n + 1
    }

    pub fn check_pair(&self, p: Pair) -> Result<Pair> {
        let in_range = |i: u32| (1..=self.n).contains(&i);
        if in_range(p.row) && in_range(p.col) {
            Ok(p)
        } else {
            Err(Error::IndexOutOfRange {
                row: p.row,
                col: p.col,
                n: self.n,
            })
        }
    }

    pub fn check(&self, e: Element) -> Result<Element> {
        match e {
            Element::Zero => Ok(e),
            Element::Pair(p) => self.check_pair(p).map(Element::Pair),
        }
    }

    /// Checked product: both factors must belong to this `B_n`.
    pub fn multiply(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.check(a)? * self.check(b)?)
    }

    /// All non-zero elements in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = Pair> + Clone {
        let n = self.n;
        (1..=n).flat_map(move |i| (1..=n).map(move |j| Pair::new(i, j)))
    }

    /// All `n² + 1` elements: zero first, then pairs lexicographically.
    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        std::iter::once(Element::Zero).chain(self.pairs().map(Element::Pair))
    }

    /// Position of `e` in [`Brandt::elements`]. `e` must be valid.
    pub fn index_of(&self, e: Element) -> usize {
        match e {
            Element::Zero => 0,
            Element::Pair(p) => 1 + (p.row as usize - 1) * self.n as usize + (p.col as usize - 1),
        }
    }

    /// Parses `0` or `(i,j)`, whitespace allowed around tokens.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let mut cur = Cursor::new(text);
        cur.skip_ws();
        let e = cur.element()?;
        cur.skip_ws();
        cur.expect_end()?;
        self.check(e)
    }
}
