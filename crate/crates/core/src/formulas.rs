//! Closed-form solution-count tables as polynomials in `n`.
//!
//! Each row pairs a number of solutions with the number of equations that
//! have it. Distinct rows may evaluate to the same number of solutions for a
//! particular `n` (at `n = 2`, both `1` and `n² - 2n + 1` equal 1); evaluation
//! merges such rows.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::equation::EquationType;
use crate::poly::Poly;
use crate::term::Class;

/// One row of a distribution table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BucketFormula {
    pub solutions: Poly,
    pub equations: Poly,
}

fn p(terms: &[(i64, usize)]) -> Poly {
    Poly::from_terms(terms)
}

fn row(solutions: &[(i64, usize)], equations: &[(i64, usize)]) -> BucketFormula {
    BucketFormula {
        solutions: p(solutions),
        equations: p(equations),
    }
}

/// Evaluates rows at `n`, merging rows whose solution counts coincide and
/// dropping rows with no equations.
pub fn evaluate_rows(rows: &[BucketFormula], n: u32) -> BTreeMap<u64, BigUint> {
    let mut out: BTreeMap<u64, BigUint> = BTreeMap::new();
    for r in rows {
        let solutions = r.solutions.eval_at(n);
        let equations = r.equations.eval_at(n);
        assert!(
            !solutions.is_negative() && !equations.is_negative(),
            "negative table entry at n = {n}"
        );
        if equations.is_zero() {
            continue;
        }
        let key = solutions.to_u64().expect("solution counts fit in u64");
        *out.entry(key).or_default() += equations.magnitude();
    }
    out
}

/// The overall distribution of solution counts over all equations: 13 rows.
pub fn distribution_formulas() -> Vec<BucketFormula> {
    vec![
        row(&[], &[(2, 6), (3, 4), (-4, 3), (3, 2), (-2, 1)]),
        row(&[(1, 0)], &[(4, 4), (4, 3), (4, 2), (-2, 1), (2, 0)]),
        row(&[(2, 0)], &[(2, 2)]),
        row(&[(1, 1), (1, 0)], &[(4, 1), (2, 0)]),
        row(&[(1, 2), (-2, 1), (1, 0)], &[(2, 4), (-2, 3)]),
        row(&[(1, 2), (-2, 1), (2, 0)], &[(2, 4), (2, 2), (-4, 1)]),
        row(&[(1, 2), (-2, 1), (3, 0)], &[(2, 2), (4, 1)]),
        row(&[(1, 2), (-1, 1)], &[(4, 6), (-4, 5), (2, 4), (-2, 3)]),
        row(
            &[(1, 2), (-1, 1), (1, 0)],
            &[(4, 5), (2, 2), (-2, 1), (2, 0)],
        ),
        row(&[(1, 2), (-1, 1), (2, 0)], &[(4, 3), (2, 1)]),
        row(&[(1, 2), (-1, 0)], &[(1, 8), (-1, 6)]),
        row(&[(1, 2)], &[(1, 6), (1, 4)]),
        row(&[(1, 2), (1, 0)], &[(1, 4), (3, 2), (3, 0)]),
    ]
}

/// `|Eq_n| = (n⁴ + 3n² + 3)² = n⁸ + 6n⁶ + 15n⁴ + 18n² + 9`.
pub fn total_poly() -> Poly {
    p(&[(1, 8), (6, 6), (15, 4), (18, 2), (9, 0)])
}

/// Total number of solutions over all equations.
pub fn average_numerator_poly() -> Poly {
    p(&[
        (1, 10),
        (3, 8),
        (-4, 7),
        (9, 6),
        (-6, 5),
        (22, 4),
        (32, 2),
        (8, 1),
        (9, 0),
    ])
}

/// Number of equations with no solution.
pub fn unsolvable_poly() -> Poly {
    p(&[(2, 6), (3, 4), (-4, 3), (3, 2), (-2, 1)])
}

fn ratio(num: &Poly, den: &Poly, n: u32) -> BigRational {
    BigRational::new(num.eval_at(n), den.eval_at(n))
}

/// Average number of solutions of an equation over `B_n`, from the closed form.
pub fn average_formula(n: u32) -> BigRational {
    ratio(&average_numerator_poly(), &total_poly(), n)
}

pub fn unsolvable_count(n: u32) -> BigUint {
    unsolvable_poly()
        .eval_at(n)
        .to_biguint()
        .expect("non-negative for n >= 1")
}

pub fn unsolvable_fraction(n: u32) -> BigRational {
    ratio(&unsolvable_poly(), &total_poly(), n)
}

/// `|average(n) / n² - 1|`; tends to zero like `3/n²`.
pub fn average_deviation(n: u32) -> BigRational {
    let n2 = BigRational::from_integer(BigInt::from(n).pow(2));
    (average_formula(n) / n2 - BigRational::from_integer(1.into())).abs()
}

/// `|unsolvable_fraction(n) · n² / 2 - 1|`; the fraction is asymptotically `2/n²`.
pub fn unsolvable_deviation(n: u32) -> BigRational {
    let scale = BigRational::new(BigInt::from(n).pow(2), BigInt::from(2));
    (unsolvable_fraction(n) * scale - BigRational::from_integer(1.into())).abs()
}

/// The distribution for a family of equation types that share one analysis,
/// such as `b = bx`-style equations, which cover `(C1,C4)`, `(C1,C5)`,
/// `(C4,C1)` and `(C5,C1)` together.
#[derive(Debug, Clone)]
pub struct FamilyTable {
    pub name: &'static str,
    pub types: Vec<EquationType>,
    pub rows: Vec<BucketFormula>,
}

impl FamilyTable {
    pub fn evaluate(&self, n: u32) -> BTreeMap<u64, BigUint> {
        evaluate_rows(&self.rows, n)
    }
}

fn family(name: &'static str, pairs: &[(Class, Class)], rows: Vec<BucketFormula>) -> FamilyTable {
    let types = pairs
        .iter()
        .map(|&(l, r)| EquationType::new(l, r))
        .collect();
    FamilyTable { name, types, rows }
}

/// The sixteen per-family tables; together they cover all 36 ordered types
/// exactly once.
pub fn family_tables() -> Vec<FamilyTable> {
    use Class::*;
    let (c1, c2, c3, c4, c5, c6) = (Constant, Identity, Square, LeftMul, RightMul, Sandwich);
    vec![
        family(
            "b = b",
            &[(c1, c1)],
            vec![
                row(&[], &[(1, 4), (1, 2)]),
                row(&[(1, 2), (1, 0)], &[(1, 2), (1, 0)]),
            ],
        ),
        family(
            "b = x",
            &[(c1, c2), (c2, c1)],
            vec![row(&[(1, 0)], &[(2, 2), (2, 0)])],
        ),
        family(
            "b = x^2",
            &[(c1, c3), (c3, c1)],
            vec![
                row(&[], &[(2, 2), (-2, 1)]),
                row(&[(1, 0)], &[(2, 1)]),
                row(&[(1, 2), (-1, 1), (1, 0)], &[(2, 0)]),
            ],
        ),
        family(
            "b = bx",
            &[(c1, c4), (c1, c5), (c4, c1), (c5, c1)],
            vec![
                row(&[], &[(4, 4), (-4, 3)]),
                row(&[(1, 0)], &[(4, 3)]),
                row(&[(1, 2), (-1, 1), (1, 0)], &[(4, 2)]),
            ],
        ),
        family(
            "b = bxb",
            &[(c1, c6), (c6, c1)],
            vec![
                row(&[], &[(2, 6), (-2, 4)]),
                row(&[(1, 0)], &[(2, 4)]),
                row(&[(1, 2)], &[(2, 4)]),
            ],
        ),
        family(
            "x = x",
            &[(c2, c2)],
            vec![row(&[(1, 2), (1, 0)], &[(1, 0)])],
        ),
        family(
            "x = x^2",
            &[(c2, c3), (c3, c2)],
            vec![row(&[(1, 1), (1, 0)], &[(2, 0)])],
        ),
        family(
            "x = bx",
            &[(c2, c4), (c2, c5), (c4, c2), (c5, c2)],
            vec![
                row(&[(1, 0)], &[(4, 2), (-4, 1)]),
                row(&[(1, 1), (1, 0)], &[(4, 1)]),
            ],
        ),
        family(
            "x = bxb",
            &[(c2, c6), (c6, c2)],
            vec![
                row(&[(1, 0)], &[(2, 4), (-2, 2)]),
                row(&[(2, 0)], &[(2, 2)]),
            ],
        ),
        family(
            "x^2 = x^2",
            &[(c3, c3)],
            vec![row(&[(1, 2), (1, 0)], &[(1, 0)])],
        ),
        family(
            "x^2 = bx",
            &[(c3, c4), (c3, c5), (c4, c3), (c5, c3)],
            vec![
                row(&[(1, 2), (-2, 1), (3, 0)], &[(4, 1)]),
                row(&[(1, 2), (-2, 1), (2, 0)], &[(4, 2), (-4, 1)]),
            ],
        ),
        family(
            "x^2 = bxb",
            &[(c3, c6), (c6, c3)],
            vec![
                row(&[(1, 2), (-1, 1)], &[(2, 4), (-2, 3)]),
                row(&[(1, 2), (-1, 1), (1, 0)], &[(2, 3), (-2, 1)]),
                row(&[(1, 2), (-1, 1), (2, 0)], &[(2, 1)]),
            ],
        ),
        family(
            "bx = bx",
            &[(c4, c4), (c5, c5)],
            vec![
                row(&[(1, 2), (1, 0)], &[(2, 2)]),
                row(&[(1, 2), (-1, 1), (1, 0)], &[(2, 3), (-2, 2)]),
                row(&[(1, 2), (-2, 1), (1, 0)], &[(2, 4), (-2, 3)]),
            ],
        ),
        family(
            "bx = xb",
            &[(c4, c5), (c5, c4)],
            vec![
                row(&[(1, 2), (-2, 1), (3, 0)], &[(2, 2)]),
                row(&[(1, 2), (-2, 1), (2, 0)], &[(2, 4), (-2, 2)]),
            ],
        ),
        family(
            "bx = bxb",
            &[(c4, c6), (c5, c6), (c6, c4), (c6, c5)],
            vec![
                row(&[(1, 2), (-1, 1)], &[(4, 6), (-4, 5)]),
                row(&[(1, 2), (-1, 1), (1, 0)], &[(4, 5), (-4, 3)]),
                row(&[(1, 2), (-1, 1), (2, 0)], &[(4, 3)]),
            ],
        ),
        family(
            "bxb = bxb",
            &[(c6, c6)],
            vec![
                row(&[(1, 2), (-1, 0)], &[(1, 8), (-1, 6)]),
                row(&[(1, 2)], &[(1, 6), (-1, 4)]),
                row(&[(1, 2), (1, 0)], &[(1, 4)]),
            ],
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn equation_counts_sum_to_total() {
        let sum: Poly = distribution_formulas()
            .iter()
            .map(|r| r.equations.clone())
            .sum();
        assert_eq!(sum, total_poly());
        let base = p(&[(1, 4), (3, 2), (3, 0)]);
        assert_eq!(&base * &base, total_poly());
    }

    #[test]
    fn solution_total_matches_average_numerator() {
        let sum: Poly = distribution_formulas()
            .iter()
            .map(|r| &r.solutions * &r.equations)
            .sum();
        assert_eq!(sum, average_numerator_poly());
    }

    #[test]
    fn families_partition_the_types() {
        let all: Vec<_> = family_tables().into_iter().flat_map(|f| f.types).collect();
        let unique: BTreeSet<_> = all.iter().copied().collect();
        assert_eq!(all.len(), 36);
        assert_eq!(unique.len(), 36);
    }

    #[test]
    fn families_sum_to_the_distribution() {
        // group every family row by its solution polynomial and compare with
        // the 13-row table as polynomials
        let mut grouped: Vec<BucketFormula> = Vec::new();
        for f in family_tables() {
            for r in f.rows {
                match grouped.iter_mut().find(|g| g.solutions == r.solutions) {
                    Some(g) => g.equations = &g.equations + &r.equations,
                    None => grouped.push(r),
                }
            }
        }
        let overall = distribution_formulas();
        assert_eq!(grouped.len(), overall.len());
        for want in &overall {
            let got = grouped
                .iter()
                .find(|g| g.solutions == want.solutions)
                .unwrap();
            assert_eq!(got.equations, want.equations, "bucket {}", want.solutions);
        }
    }

    #[test]
    fn family_sizes_match_type_sizes() {
        for f in family_tables() {
            let total: Poly = f.rows.iter().map(|r| r.equations.clone()).sum();
            for n in 1..=6 {
                let want: u128 = f.types.iter().map(|t| t.size(n)).sum();
                assert_eq!(
                    total.eval_at(n),
                    BigInt::from(want),
                    "{} at n = {n}",
                    f.name
                );
            }
        }
    }

    #[test]
    fn formula_examples() {
        let rows = distribution_formulas();
        let by_solutions = |s: Poly| {
            rows.iter()
                .find(|r| r.solutions == s)
                .unwrap()
                .equations
                .clone()
        };
        assert_eq!(
            by_solutions(p(&[(1, 0)])),
            p(&[(4, 4), (4, 3), (4, 2), (-2, 1), (2, 0)])
        );
        assert_eq!(by_solutions(p(&[(1, 1), (1, 0)])), p(&[(4, 1), (2, 0)]));
        assert_eq!(by_solutions(p(&[(1, 2), (-1, 0)])), p(&[(1, 8), (-1, 6)]));
        assert_eq!(rows.len(), 13);
    }

    #[test]
    fn merged_evaluation() {
        let at2 = evaluate_rows(&distribution_formulas(), 2);
        assert_eq!(at2[&1], BigUint::from(126u32));
        assert_eq!(at2[&0], BigUint::from(152u32));
        assert_eq!(at2[&5], BigUint::from(31u32));
        let at1 = evaluate_rows(&distribution_formulas(), 1);
        assert_eq!(at1[&0], BigUint::from(2u32));
        let total: BigUint = evaluate_rows(&distribution_formulas(), 3).values().sum();
        assert_eq!(total, BigUint::from(12_321u32));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(average_formula(1), BigRational::new(74.into(), 49.into()));
        assert_eq!(
            average_formula(2),
            BigRational::new(2169.into(), 961.into())
        );
        assert_eq!(unsolvable_count(1), BigUint::from(2u32));
        assert_eq!(unsolvable_count(2), BigUint::from(152u32));
        assert_eq!(
            unsolvable_fraction(2),
            BigRational::new(152.into(), 961.into())
        );
    }
}
