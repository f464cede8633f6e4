//! Exact distribution of solution counts over all equations of `B_n`.
//!
//! Three independent routes produce a [`CensusTable`]:
//!
//! - [`Mode::Brute`] evaluates both sides of every equation at every point.
//! - [`Mode::Symbolic`] groups equations by the equality pattern of the
//!   indices of their constants. [`count_solutions`] depends only on that
//!   pattern, so each pattern is counted once and weighted by the number of
//!   index assignments realizing it. This scales to large `n`.
//! - [`Mode::Formula`] evaluates the closed-form polynomial table.
//!
//! [`census_per_equation`] runs [`count_solutions`] on every equation, which
//! ties the symbolic route back to the brute one at small `n`.
//!
//! Enumeration work is spread over the current rayon pool. Partial tables are
//! summed, so the result does not depend on the number of threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Number, Value};

use crate::element::{Brandt, Element, Pair};
use crate::equation::{count_solutions, Equation, EquationType};
use crate::error::{Error, Result};
use crate::formulas::{distribution_formulas, evaluate_rows};
use crate::poly::falling_factorial;
use crate::term::{CanonicalTerm, Class};

/// Largest `n` for which brute-force enumeration runs unless overridden.
pub const DEFAULT_BRUTE_CAP: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Brute,
    Symbolic,
    Formula,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Brute => "brute",
            Mode::Symbolic => "symbolic",
            Mode::Formula => "formula",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(Mode::Brute),
            "symbolic" => Ok(Mode::Symbolic),
            "formula" => Ok(Mode::Formula),
            _ => Err(format!(
                "unknown mode '{s}' (expected brute, symbolic or formula)"
            )),
        }
    }
}

/// Number of equations per number of solutions, ascending by solutions.
/// Rows with no equations are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    n: u32,
    mode: Mode,
    rows: BTreeMap<u64, BigUint>,
}

impl CensusTable {
    pub fn new(n: u32, mode: Mode, mut rows: BTreeMap<u64, BigUint>) -> Self {
        rows.retain(|_, v| !v.is_zero());
        CensusTable { n, mode, rows }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rows(&self) -> &BTreeMap<u64, BigUint> {
        &self.rows
    }

    /// Equations with exactly `solutions` solutions.
    pub fn get(&self, solutions: u64) -> BigUint {
        self.rows.get(&solutions).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.rows.values().sum()
    }

    pub fn unsolvable(&self) -> BigUint {
        self.get(0)
    }

    /// Same distribution, regardless of how it was produced.
    pub fn same_rows(&self, other: &CensusTable) -> bool {
        self.n == other.n && self.rows == other.rows
    }

    /// Mean number of solutions per equation, reduced.
    pub fn average(&self) -> BigRational {
        let weighted: BigUint = self.rows.iter().map(|(&s, c)| c * s).sum();
        BigRational::new(BigInt::from(weighted), BigInt::from(self.total()))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("solutions,equations\n");
        for (s, c) in &self.rows {
            out.push_str(&format!("{s},{c}\n"));
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(s, c)| json!({ "solutions": s, "equations": big_number(c) }))
            .collect();
        let avg = self.average();
        json!({
            "n": self.n,
            "mode": self.mode.as_str(),
            "total": big_number(&self.total()),
            "rows": rows,
            "average": { "num": big_number(avg.numer()), "den": big_number(avg.denom()) },
            "unsolvable": big_number(&self.unsolvable()),
        })
    }

    /// Pretty-printed JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("serializable");
        s.push('\n');
        s
    }
}

fn big_number(v: &impl fmt::Display) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

impl fmt::Display for CensusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, mode = {}", self.n, self.mode)?;
        writeln!(f, "{:>12}  equations", "solutions")?;
        for (s, c) in &self.rows {
            writeln!(f, "{s:>12}  {c}")?;
        }
        writeln!(f, "total: {}", self.total())?;
        writeln!(f, "average: {}", self.average())?;
        writeln!(f, "unsolvable: {}", self.unsolvable())
    }
}

/// The census of all `(n⁴ + 3n² + 3)²` equations.
pub fn census(b: &Brandt, mode: Mode, brute_cap: u32) -> Result<CensusTable> {
    match mode {
        Mode::Formula => Ok(census_from_formulas(b.n())),
        _ => {
            let mut rows = BTreeMap::new();
            for ty in EquationType::all() {
                merge_into(&mut rows, type_census(b, ty, mode, brute_cap)?.rows);
            }
            Ok(CensusTable::new(b.n(), mode, rows))
        }
    }
}

/// The census restricted to equations of one ordered type.
pub fn type_census(
    b: &Brandt,
    ty: EquationType,
    mode: Mode,
    brute_cap: u32,
) -> Result<CensusTable> {
    let rows = match mode {
        Mode::Brute => {
            if b.n() > brute_cap {
                return Err(Error::BruteCapExceeded {
                    n: b.n(),
                    cap: brute_cap,
                });
            }
            let lhs = value_tables(b, ty.lhs);
            let rhs = value_tables(b, ty.rhs);
            tally(lhs.par_iter().map(|l| {
                let mut local = BTreeMap::new();
                for r in &rhs {
                    let hits = l.iter().zip(r).filter(|(a, b)| a == b).count() as u64;
                    *local.entry(hits).or_insert(0u64) += 1;
                }
                local
            }))
        }
        Mode::Symbolic => pattern_census(b.n(), ty),
        Mode::Formula => {
            let table = crate::formulas::family_tables()
                .into_iter()
                .find(|f| f.types.contains(&ty))
                .expect("every type belongs to a family");
            // families group types with identical distributions
            let share = table.types.len() as u32;
            table
                .evaluate(b.n())
                .into_iter()
                .map(|(s, c)| {
                    debug_assert!((&c % share).is_zero());
                    (s, c / share)
                })
                .collect()
        }
    };
    Ok(CensusTable::new(b.n(), mode, rows))
}

/// Runs [`count_solutions`] on every equation; reported as symbolic mode.
pub fn census_per_equation(b: &Brandt, ty: Option<EquationType>) -> CensusTable {
    let n = b.n();
    let types: Vec<EquationType> = match ty {
        Some(t) => vec![t],
        None => EquationType::all().collect(),
    };
    let mut rows = BTreeMap::new();
    for t in types {
        let lhs = b.canonical_terms_of(t.lhs);
        let rhs = b.canonical_terms_of(t.rhs);
        merge_into(
            &mut rows,
            tally(lhs.par_iter().map(|&l| {
                let mut local = BTreeMap::new();
                for &r in &rhs {
                    *local
                        .entry(count_solutions(n, &Equation::new(l, r)))
                        .or_insert(0u64) += 1;
                }
                local
            })),
        );
    }
    CensusTable::new(n, Mode::Symbolic, rows)
}

/// The closed-form table evaluated at `n`, with coinciding rows merged.
pub fn census_from_formulas(n: u32) -> CensusTable {
    CensusTable::new(n, Mode::Formula, evaluate_rows(&distribution_formulas(), n))
}

/// Mean number of solutions of the equations in `table`, which must have been
/// computed for `b`.
pub fn average_solutions(b: &Brandt, table: &CensusTable) -> BigRational {
    assert_eq!(
        b.n(),
        table.n(),
        "census table belongs to a different dimension"
    );
    table.average()
}

fn merge_into(acc: &mut BTreeMap<u64, BigUint>, rows: BTreeMap<u64, BigUint>) {
    for (s, c) in rows {
        *acc.entry(s).or_default() += c;
    }
}

fn tally<I>(parts: I) -> BTreeMap<u64, BigUint>
where
    I: ParallelIterator<Item = BTreeMap<u64, u64>>,
{
    let summed = parts.reduce(BTreeMap::new, |mut a, b| {
        for (k, v) in b {
            *a.entry(k).or_insert(0) += v;
        }
        a
    });
    summed
        .into_iter()
        .map(|(k, v)| (k, BigUint::from(v)))
        .collect()
}

/// Value tables computed by multiplying out each canonical term as a word.
fn value_tables(b: &Brandt, class: Class) -> Vec<Vec<Element>> {
    b.canonical_terms_of(class)
        .into_iter()
        .map(|c| {
            let t = c.to_term();
            b.elements().map(|x| t.eval(x)).collect()
        })
        .collect()
}

type Builder = fn(&[u32]) -> CanonicalTerm;

/// Parameter shapes of a class: how many indices a term needs and how to
/// build it from them. Constants come in two shapes, zero and `(i,j)`.
fn shapes(class: Class) -> &'static [(usize, Builder)] {
    match class {
        Class::Constant => &[
            (0, |_| CanonicalTerm::Const(Element::Zero)),
            (2, |s| CanonicalTerm::Const(Element::pair(s[0], s[1]))),
        ],
        Class::Identity => &[(0, |_| CanonicalTerm::X)],
        Class::Square => &[(0, |_| CanonicalTerm::XSquared)],
        Class::LeftMul => &[(2, |s| CanonicalTerm::LeftMul(Pair::new(s[0], s[1])))],
        Class::RightMul => &[(2, |s| CanonicalTerm::RightMul(Pair::new(s[0], s[1])))],
        Class::Sandwich => &[(4, |s| {
            CanonicalTerm::Sandwich(Pair::new(s[0], s[1]), Pair::new(s[2], s[3]))
        })],
    }
}

/// Visits every set partition of `len` slots as a restricted growth string
/// (slot `i` gets block `a[i] ≤ 1 + max(a[..i])`), with the block count.
fn for_each_partition(len: usize, visit: &mut impl FnMut(&[u32], usize)) {
    fn go(a: &mut Vec<u32>, len: usize, blocks: usize, visit: &mut impl FnMut(&[u32], usize)) {
        if a.len() == len {
            visit(a, blocks);
            return;
        }
        for v in 0..=blocks as u32 {
            a.push(v);
            go(a, len, blocks.max(v as usize + 1), visit);
            a.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, 0, visit);
}

fn pattern_census(n: u32, ty: EquationType) -> BTreeMap<u64, BigUint> {
    let mut rows: BTreeMap<u64, BigUint> = BTreeMap::new();
    for &(lk, lbuild) in shapes(ty.lhs) {
        for &(rk, rbuild) in shapes(ty.rhs) {
            for_each_partition(lk + rk, &mut |blocks, used| {
                let weight = falling_factorial(n, used);
                if weight.is_zero() {
                    return;
                }
                let idx: Vec<u32> = blocks.iter().map(|b| b + 1).collect();
                let eq = Equation::new(lbuild(&idx[..lk]), rbuild(&idx[lk..]));
                let weight = weight
                    .to_biguint()
                    .expect("falling factorial is non-negative");
                *rows.entry(count_solutions(n, &eq)).or_default() += weight;
            });
        }
    }
    rows
}
