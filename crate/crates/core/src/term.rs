//! One-variable terms over `B_n` and their canonical forms.
//!
//! Every term computes the same function as some [`CanonicalTerm`]. For
//! `n ≥ 2` the `n⁴ + 3n² + 3` canonical terms compute pairwise distinct
//! functions. In `B_1` they collapse to three (`0`, `(1,1)` and `x`).
//!
//! | class | shape | parameters         | count   |
//! |-------|-------|--------------------|---------|
//! | C1    | `b`   | any `b`            | `n²+1`  |
//! | C2    | `x`   |                    | 1       |
//! | C3    | `x^2` |                    | 1       |
//! | C4    | `bx`  | `b ≠ 0`            | `n²`    |
//! | C5    | `xb`  | `b ≠ 0`            | `n²`    |
//! | C6    | `bxd` | `b, d ≠ 0`         | `n⁴`    |

use std::fmt;

use crate::element::{Brandt, Element, Pair};
use crate::error::{Error, Result};
use crate::parse::Cursor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    Const(Element),
    Var,
}

/// A non-empty word over constants and the variable `x`. Equality is
/// syntactic; compare functions through [`Term::normalize`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    factors: Vec<Factor>,
}

impl Term {
    pub(crate) fn new(factors: Vec<Factor>) -> Self {
        debug_assert!(!factors.is_empty());
        Term { factors }
    }

    pub fn from_factors(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyTerm);
        }
        Ok(Term { factors })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Product of the factors with `x` substituted.
    pub fn eval(&self, x: Element) -> Element {
        let mut acc: Option<Element> = None;
        for f in &self.factors {
            let v = match *f {
                Factor::Const(c) => c,
                Factor::Var => x,
            };
            acc = Some(match acc {
                None => v,
                Some(a) => a * v,
            });
            if acc == Some(Element::Zero) {
                return Element::Zero;
            }
        }
        acc.expect("terms are non-empty")
    }

    /// The canonical term computing the same function as `self`.
    ///
    /// Adjacent constants are folded first. What remains is either a power of
    /// `x`, one of `b`, `bx`, `xb`, or a word of length at least three that
    /// contains a constant. A word of the last kind is non-zero at no more
    /// than one point: every junction between neighbouring factors forces
    /// `col(left) = row(right)`, which pins both coordinates of `x`. When the
    /// constraints are consistent at `x = (p,q)` with value `(e1,e2)`, the
    /// word agrees with `(e1,p) x (q,e2)`; otherwise it is identically zero.
    pub fn normalize(&self) -> CanonicalTerm {
        let mut folded: Vec<Factor> = Vec::with_capacity(self.factors.len());
        for &f in &self.factors {
            match (folded.last_mut(), f) {
                (Some(Factor::Const(prev)), Factor::Const(c)) => *prev = *prev * c,
                _ => folded.push(f),
            }
            if folded.last() == Some(&Factor::Const(Element::Zero)) {
                return CanonicalTerm::Const(Element::Zero);
            }
        }

        match folded.as_slice() {
            [Factor::Const(c)] => return CanonicalTerm::Const(*c),
            [Factor::Var] => return CanonicalTerm::X,
            [Factor::Const(Element::Pair(b)), Factor::Var] => return CanonicalTerm::LeftMul(*b),
            [Factor::Var, Factor::Const(Element::Pair(b))] => return CanonicalTerm::RightMul(*b),
            word if word.iter().all(|f| *f == Factor::Var) => return CanonicalTerm::XSquared,
            _ => {}
        }

        match pin_support(&folded) {
            Some(((p, q), value)) => {
                CanonicalTerm::Sandwich(Pair::new(value.row, p), Pair::new(q, value.col))
            }
            None => CanonicalTerm::Const(Element::Zero),
        }
    }
}

/// A coordinate appearing at a junction: a constant's index, or the row
/// (`P`) or column (`Q`) of the unknown `x`.
#[derive(Clone, Copy)]
enum Coord {
    Known(u32),
    P,
    Q,
}

/// For a folded word with no zero constants, finds the only point `x = (p,q)`
/// where it can be non-zero and the value there. `None` when no point works.
fn pin_support(word: &[Factor]) -> Option<((u32, u32), Pair)> {
    let row = |f: &Factor| match f {
        Factor::Const(Element::Pair(p)) => Coord::Known(p.row),
        _ => Coord::P,
    };
    let col = |f: &Factor| match f {
        Factor::Const(Element::Pair(p)) => Coord::Known(p.col),
        _ => Coord::Q,
    };

    let mut p: Option<u32> = None;
    let mut q: Option<u32> = None;
    let mut diagonal = false;
    let bind = |slot: &mut Option<u32>, v: u32| match *slot {
        Some(old) if old != v => false,
        _ => {
            *slot = Some(v);
            true
        }
    };
    for pair in word.windows(2) {
        let ok = match (col(&pair[0]), row(&pair[1])) {
            (Coord::Known(a), Coord::Known(b)) => a == b,
            (Coord::Known(v), Coord::P) | (Coord::P, Coord::Known(v)) => bind(&mut p, v),
            (Coord::Known(v), Coord::Q) | (Coord::Q, Coord::Known(v)) => bind(&mut q, v),
            (Coord::Q, Coord::P) | (Coord::P, Coord::Q) => {
                diagonal = true;
                true
            }
            (Coord::P, Coord::P) | (Coord::Q, Coord::Q) => true,
        };
        if !ok {
            return None;
        }
    }
    if diagonal {
        match (p, q) {
            (Some(a), Some(b)) if a != b => return None,
            (Some(a), _) | (_, Some(a)) => {
                p = Some(a);
                q = Some(a);
            }
            (None, None) => {}
        }
    }
    let (p, q) = (
        p.expect("a word with a constant and three or more factors pins x"),
        q.expect("a word with a constant and three or more factors pins x"),
    );
    let resolve = |c: Coord| match c {
        Coord::Known(v) => v,
        Coord::P => p,
        Coord::Q => q,
    };
    let first = resolve(row(&word[0]));
    let last = resolve(col(&word[word.len() - 1]));
    Some(((p, q), Pair::new(first, last)))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match factor {
                Factor::Const(c) => c.fmt(f)?,
                Factor::Var => f.write_str("x")?,
            }
        }
        Ok(())
    }
}

/// The six canonical classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Constant,
    Identity,
    Square,
    LeftMul,
    RightMul,
    Sandwich,
}

impl Class {
    pub const ALL: [Class; 6] = [
        Class::Constant,
        Class::Identity,
        Class::Square,
        Class::LeftMul,
        Class::RightMul,
        Class::Sandwich,
    ];

    /// `C1` .. `C6`.
    pub fn label(self) -> &'static str {
        match self {
            Class::Constant => "C1",
            Class::Identity => "C2",
            Class::Square => "C3",
            Class::LeftMul => "C4",
            Class::RightMul => "C5",
            Class::Sandwich => "C6",
        }
    }

    /// Number of canonical terms of this class in `B_n`.
    pub fn size(self, n: u32) -> u128 {
        let n2 = u128::from(n) * u128::from(n);
        match self {
            Class::Constant => n2 + 1,
            Class::Identity | Class::Square => 1,
            Class::LeftMul | Class::RightMul => n2,
            Class::Sandwich => n2 * n2,
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The unique representative of a termal function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalTerm {
    Const(Element),
    X,
    XSquared,
    LeftMul(Pair),
    RightMul(Pair),
    Sandwich(Pair, Pair),
}

impl CanonicalTerm {
    pub fn class(self) -> Class {
        match self {
            CanonicalTerm::Const(_) => Class::Constant,
            CanonicalTerm::X => Class::Identity,
            CanonicalTerm::XSquared => Class::Square,
            CanonicalTerm::LeftMul(_) => Class::LeftMul,
            CanonicalTerm::RightMul(_) => Class::RightMul,
            CanonicalTerm::Sandwich(..) => Class::Sandwich,
        }
    }

    /// Closed-form value at `x`.
    pub fn apply(self, x: Element) -> Element {
        let Element::Pair(x) = x else {
            return match self {
                CanonicalTerm::Const(b) => b,
                _ => Element::Zero,
            };
        };
        let hit = |cond: bool, row: u32, col: u32| {
            if cond {
                Element::pair(row, col)
            } else {
                Element::Zero
            }
        };
        match self {
            CanonicalTerm::Const(b) => b,
            CanonicalTerm::X => Element::Pair(x),
            CanonicalTerm::XSquared => hit(x.is_idempotent(), x.row, x.col),
            CanonicalTerm::LeftMul(b) => hit(x.row == b.col, b.row, x.col),
            CanonicalTerm::RightMul(b) => hit(x.col == b.row, x.row, b.col),
            CanonicalTerm::Sandwich(b, d) => hit(x.row == b.col && x.col == d.row, b.row, d.col),
        }
    }

    /// The point where a `C6` term is non-zero, and its value there.
    pub fn sandwich_support(b: Pair, d: Pair) -> (Pair, Pair) {
        (Pair::new(b.col, d.row), Pair::new(b.row, d.col))
    }

    pub fn to_term(self) -> Term {
        use Factor::{Const, Var};
        let factors = match self {
            CanonicalTerm::Const(b) => vec![Const(b)],
            CanonicalTerm::X => vec![Var],
            CanonicalTerm::XSquared => vec![Var, Var],
            CanonicalTerm::LeftMul(b) => vec![Const(b.into()), Var],
            CanonicalTerm::RightMul(b) => vec![Var, Const(b.into())],
            CanonicalTerm::Sandwich(b, d) => vec![Const(b.into()), Var, Const(d.into())],
        };
        Term::new(factors)
    }

    fn constants(self) -> impl Iterator<Item = Element> {
        let (a, b) = match self {
            CanonicalTerm::Const(b) => (Some(b), None),
            CanonicalTerm::X | CanonicalTerm::XSquared => (None, None),
            CanonicalTerm::LeftMul(b) | CanonicalTerm::RightMul(b) => (Some(b.into()), None),
            CanonicalTerm::Sandwich(b, d) => (Some(b.into()), Some(d.into())),
        };
        a.into_iter().chain(b)
    }
}

impl fmt::Display for CanonicalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalTerm::Const(b) => write!(f, "{b}"),
            CanonicalTerm::X => f.write_str("x"),
            CanonicalTerm::XSquared => f.write_str("x^2"),
            CanonicalTerm::LeftMul(b) => write!(f, "{b}x"),
            CanonicalTerm::RightMul(b) => write!(f, "x{b}"),
            CanonicalTerm::Sandwich(b, d) => write!(f, "{b}x{d}"),
        }
    }
}

/// `n⁴ + 3n² + 3`, the number of distinct termal functions.
pub fn canonical_count(n: u32) -> u128 {
    Class::ALL.iter().map(|c| c.size(n)).sum()
}

impl Brandt {
    pub fn check_term(&self, t: &Term) -> Result<()> {
        for f in t.factors() {
            if let Factor::Const(c) = f {
                self.check(*c)?;
            }
        }
        Ok(())
    }

    pub fn check_canonical(&self, c: CanonicalTerm) -> Result<CanonicalTerm> {
        for e in c.constants() {
            self.check(e)?;
        }
        Ok(c)
    }

    pub fn parse_term(&self, text: &str) -> Result<Term> {
        let mut cur = Cursor::new(text);
        let t = cur.term()?;
        cur.skip_ws();
        cur.expect_end()?;
        self.check_term(&t)?;
        Ok(t)
    }

    pub fn evaluate(&self, t: &Term, x: Element) -> Result<Element> {
        self.check_term(t)?;
        Ok(t.eval(self.check(x)?))
    }

    pub fn normalize(&self, t: &Term) -> Result<CanonicalTerm> {
        self.check_term(t)?;
        Ok(t.normalize())
    }

    /// Canonical terms of one class, in lexicographic parameter order.
    pub fn canonical_terms_of(&self, class: Class) -> Vec<CanonicalTerm> {
        match class {
            Class::Constant => self.elements().map(CanonicalTerm::Const).collect(),
            Class::Identity => vec![CanonicalTerm::X],
            Class::Square => vec![CanonicalTerm::XSquared],
            Class::LeftMul => self.pairs().map(CanonicalTerm::LeftMul).collect(),
            Class::RightMul => self.pairs().map(CanonicalTerm::RightMul).collect(),
            Class::Sandwich => self
                .pairs()
                .flat_map(|b| self.pairs().map(move |d| CanonicalTerm::Sandwich(b, d)))
                .collect(),
        }
    }

    /// All canonical terms: C1 in element order, then `x`, `x^2`, C4, C5, C6.
    pub fn canonical_terms(&self) -> Vec<CanonicalTerm> {
        Class::ALL
            .iter()
            .flat_map(|&c| self.canonical_terms_of(c))
            .collect()
    }

    /// Values of `c` at every element, in [`Brandt::elements`] order.
    pub fn value_table(&self, c: CanonicalTerm) -> Vec<Element> {
        self.elements().map(|x| c.apply(x)).collect()
    }
}
