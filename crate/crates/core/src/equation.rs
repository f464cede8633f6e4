//! Equations `f1 = f2` between termal functions and their solutions.
//!
//! [`Brandt::solve`] evaluates both sides at every point. [`count_solutions`]
//! gets the same number in constant time from the equation's type and the
//! equalities among the indices of its constants. It never looks at individual
//! points of `B_n`.

use std::fmt;

use crate::element::{Brandt, Element, Pair};
use crate::error::Result;
use crate::parse::Cursor;
use crate::term::{CanonicalTerm, Class};

/// An ordered pair of canonical terms; `a = b` and `b = a` are distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Equation {
    pub lhs: CanonicalTerm,
    pub rhs: CanonicalTerm,
}

impl Equation {
    pub fn new(lhs: CanonicalTerm, rhs: CanonicalTerm) -> Self {
        Equation { lhs, rhs }
    }

    pub fn classify(&self) -> EquationType {
        EquationType::new(self.lhs.class(), self.rhs.class())
    }

    pub fn swapped(self) -> Self {
        Equation::new(self.rhs, self.lhs)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// The ordered pair of classes of an equation's sides; 36 values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EquationType {
    pub lhs: Class,
    pub rhs: Class,
}

impl EquationType {
    pub fn new(lhs: Class, rhs: Class) -> Self {
        EquationType { lhs, rhs }
    }

    pub fn all() -> impl Iterator<Item = EquationType> {
        Class::ALL
            .into_iter()
            .flat_map(|l| Class::ALL.into_iter().map(move |r| EquationType::new(l, r)))
    }

    /// Number of equations of this type in `B_n`.
    pub fn size(self, n: u32) -> u128 {
        self.lhs.size(n) * self.rhs.size(n)
    }
}

impl fmt::Display for EquationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lhs, self.rhs)
    }
}

/// The solutions of an equation, in element order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionSet {
    members: Vec<Element>,
}

impl SolutionSet {
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.members.binary_search(&e).is_ok()
    }
}

impl Brandt {
    /// Parses `term = term`, normalizing both sides.
    pub fn parse_equation(&self, text: &str) -> Result<Equation> {
        let (lhs, rhs) = Cursor::new(text).equation()?;
        self.check_term(&lhs)?;
        self.check_term(&rhs)?;
        Ok(Equation::new(lhs.normalize(), rhs.normalize()))
    }

    /// All `x` with `lhs(x) = rhs(x)`, found by evaluating both sides as words.
    pub fn solve(&self, eq: &Equation) -> SolutionSet {
        let (lhs, rhs) = (eq.lhs.to_term(), eq.rhs.to_term());
        let members = self
            .elements()
            .filter(|&x| lhs.eval(x) == rhs.eval(x))
            .collect();
        SolutionSet { members }
    }

    pub fn count_solutions(&self, eq: &Equation) -> u64 {
        count_solutions(self.n(), eq)
    }
}

/// `|V(lhs = rhs)|` over `B_n` by case analysis on the equation type.
///
/// The count is symmetric in the two sides, so the 36 ordered types reduce to
/// 21 unordered ones, each handled by its own function below.
pub fn count_solutions(n: u32, eq: &Equation) -> u64 {
    use CanonicalTerm::*;

    let (l, r) = if eq.lhs.class() <= eq.rhs.class() {
        (eq.lhs, eq.rhs)
    } else {
        (eq.rhs, eq.lhs)
    };
    let n = u64::from(n);
    match (l, r) {
        (Const(a), Const(b)) => const_const(n, a, b),
        (Const(_), X) => const_identity(),
        (Const(b), XSquared) => const_square(n, b),
        (Const(a), LeftMul(b)) => const_left(n, a, b),
        (Const(a), RightMul(b)) => const_right(n, a, b),
        (Const(a), Sandwich(b, d)) => const_sandwich(n, a, b, d),
        (X, X) => identity_identity(n),
        (X, XSquared) => identity_square(n),
        (X, LeftMul(b)) => identity_left(n, b),
        (X, RightMul(b)) => identity_right(n, b),
        (X, Sandwich(b, d)) => identity_sandwich(b, d),
        (XSquared, XSquared) => square_square(n),
        (XSquared, LeftMul(b)) => square_left(n, b),
        (XSquared, RightMul(b)) => square_right(n, b),
        (XSquared, Sandwich(b, d)) => square_sandwich(n, b, d),
        (LeftMul(a), LeftMul(b)) => left_left(n, a, b),
        (LeftMul(a), RightMul(b)) => left_right(n, a, b),
        (LeftMul(a), Sandwich(b, d)) => left_sandwich(n, a, b, d),
        (RightMul(a), RightMul(b)) => right_right(n, a, b),
        (RightMul(a), Sandwich(b, d)) => right_sandwich(n, a, b, d),
        (Sandwich(a, c), Sandwich(b, d)) => sandwich_sandwich(n, a, c, b, d),
        _ => unreachable!("sides are ordered by class"),
    }
}

fn all(n: u64) -> u64 {
    n * n + 1
}

// b1 = b2: everything or nothing.
fn const_const(n: u64, a: Element, b: Element) -> u64 {
    if a == b {
        all(n)
    } else {
        0
    }
}

// b = x: exactly x = b.
fn const_identity() -> u64 {
    1
}

// b = x²: x² is (i,i) on the diagonal and 0 elsewhere.
fn const_square(n: u64, b: Element) -> u64 {
    match b {
        Element::Zero => n * n + 1 - n,
        Element::Pair(p) if p.is_idempotent() => 1,
        Element::Pair(_) => 0,
    }
}

// b1 = b2·x: b2·x is (b2.row, i) at x = (b2.col, i), 0 elsewhere.
fn const_left(n: u64, a: Element, b: Pair) -> u64 {
    match a {
        Element::Zero => n * n + 1 - n,
        Element::Pair(a) => u64::from(a.row == b.row),
    }
}

// b1 = x·b2, the mirror image of `const_left`.
fn const_right(n: u64, a: Element, b: Pair) -> u64 {
    match a {
        Element::Zero => n * n + 1 - n,
        Element::Pair(a) => u64::from(a.col == b.col),
    }
}

// b = c·x·d: c·x·d is non-zero only at (c.col, d.row), with value (c.row, d.col).
fn const_sandwich(n: u64, a: Element, c: Pair, d: Pair) -> u64 {
    match a {
        Element::Zero => n * n,
        Element::Pair(a) => u64::from(a == Pair::new(c.row, d.col)),
    }
}

fn identity_identity(n: u64) -> u64 {
    all(n)
}

// x = x²: zero and the diagonal.
fn identity_square(n: u64) -> u64 {
    n + 1
}

// x = b·x: zero, plus the row (i, z) when b = (i,i).
fn identity_left(n: u64, b: Pair) -> u64 {
    if b.is_idempotent() {
        n + 1
    } else {
        1
    }
}

// x = x·b: zero, plus the column (z, i) when b = (i,i).
fn identity_right(n: u64, b: Pair) -> u64 {
    identity_left(n, b)
}

// x = b·x·d: zero, plus the support point when it is a fixed point.
fn identity_sandwich(b: Pair, d: Pair) -> u64 {
    let (point, value) = CanonicalTerm::sandwich_support(b, d);
    1 + u64::from(point == value)
}

fn square_square(n: u64) -> u64 {
    all(n)
}

// x² = b·x. The sides differ on the diagonal off b's column and on the row
// b.col off the diagonal; at (b.col, b.col) they agree iff b is idempotent.
fn square_left(n: u64, b: Pair) -> u64 {
    let bad = 2 * (n - 1) + u64::from(!b.is_idempotent());
    all(n) - bad
}

// x² = x·b, the mirror image of `square_left`.
fn square_right(n: u64, b: Pair) -> u64 {
    square_left(n, b)
}

// x² = b·x·d.
fn square_sandwich(n: u64, b: Pair, d: Pair) -> u64 {
    let (point, value) = CanonicalTerm::sandwich_support(b, d);
    if point.is_idempotent() {
        // the support lies on the diagonal: the other n-1 diagonal points fail,
        // the support point itself works iff the values agree
        let hit = point == value;
        all(n) - (n - 1) - u64::from(!hit)
    } else {
        // the whole diagonal fails, and so does the support point
        all(n) - n - 1
    }
}

// b1·x = b2·x.
fn left_left(n: u64, a: Pair, b: Pair) -> u64 {
    if a == b {
        all(n)
    } else if a.col != b.col {
        // rows a.col and b.col of x each leave one side non-zero
        all(n) - 2 * n
    } else {
        // shared row: both sides non-zero there but with different first coordinates
        all(n) - n
    }
}

// x·b1 = x·b2, the mirror image of `left_left`.
fn right_right(n: u64, a: Pair, b: Pair) -> u64 {
    if a == b {
        all(n)
    } else if a.row != b.row {
        all(n) - 2 * n
    } else {
        all(n) - n
    }
}

// b1·x = x·b2. The left side lives on row b1.col, the right on column b2.row;
// they meet at (b1.col, b2.row), where the values are (b1.row, b2.row) and
// (b1.col, b2.col).
fn left_right(n: u64, a: Pair, b: Pair) -> u64 {
    let meet_ok = a.is_idempotent() && b.is_idempotent();
    all(n) - 2 * (n - 1) - u64::from(!meet_ok)
}

// b·x = c·x·d.
fn left_sandwich(n: u64, b: Pair, c: Pair, d: Pair) -> u64 {
    let (point, value) = CanonicalTerm::sandwich_support(c, d);
    if point.row == b.col {
        // the support sits on b's row: the other n-1 points there fail
        let lhs = Pair::new(b.row, point.col);
        all(n) - (n - 1) - u64::from(lhs != value)
    } else {
        all(n) - n - 1
    }
}

// x·b = c·x·d, the mirror image of `left_sandwich`.
fn right_sandwich(n: u64, b: Pair, c: Pair, d: Pair) -> u64 {
    let (point, value) = CanonicalTerm::sandwich_support(c, d);
    if point.col == b.row {
        let lhs = Pair::new(point.row, b.col);
        all(n) - (n - 1) - u64::from(lhs != value)
    } else {
        all(n) - n - 1
    }
}

// b·x·c = d·x·e: two functions with at most one non-zero point each.
fn sandwich_sandwich(n: u64, b: Pair, c: Pair, d: Pair, e: Pair) -> u64 {
    let (p1, v1) = CanonicalTerm::sandwich_support(b, c);
    let (p2, v2) = CanonicalTerm::sandwich_support(d, e);
    match (p1 == p2, v1 == v2) {
        (true, true) => all(n),
        (true, false) => all(n) - 1,
        (false, _) => all(n) - 2,
    }
}
