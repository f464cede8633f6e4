//! Integer polynomials in the dimension `n`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense coefficients, lowest degree first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<i64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds `Σ c·n^d` from `(c, d)` pairs; repeated degrees add up.
    pub fn from_terms(terms: &[(i64, usize)]) -> Self {
        let len = terms.iter().map(|&(_, d)| d + 1).max().unwrap_or(0);
        let mut coeffs = vec![0; len];
        for &(c, d) in terms {
            coeffs[d] += c;
        }
        Poly::new(coeffs)
    }

    pub fn constant(c: i64) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation in exact arithmetic.
    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * n + BigInt::from(c))
    }

    pub fn eval_at(&self, n: u32) -> BigInt {
        self.eval(&BigInt::from(n))
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let at = |p: &Poly, i: usize| p.coeffs.get(i).copied().unwrap_or(0);
        Poly::new((0..len).map(|i| at(self, i) + at(rhs, i)).collect())
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::default();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::default(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a Poly> for Poly {
    fn sum<I: Iterator<Item = &'a Poly>>(iter: I) -> Poly {
        iter.fold(Poly::default(), |acc, p| &acc + p)
    }
}

impl fmt::Display for Poly {
    /// Highest degree first, e.g. `2n^6 + 3n^4 - 4n^3 + 3n^2 - 2n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match (mag, d) {
                (_, 0) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("n")?,
                (1, _) => write!(f, "n^{d}")?,
                (_, 1) => write!(f, "{mag}n")?,
                _ => write!(f, "{mag}n^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `n(n-1)…(n-k+1)`: assignments of `k` distinct values out of `n`.
pub fn falling_factorial(n: u32, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        let f = i64::from(n) - i as i64;
        if f <= 0 {
            BigInt::zero()
        } else {
            acc * f
        }
    })
}
