//! Hand-written scanner shared by the element, term and equation parsers.
//!
//! Grammar:
//!
//! ```text
//! equation := term '=' term
//! term     := factor (sep? factor)*          sep := whitespace | '*'
//! factor   := 'x' | 'x^' INT | '0' | '(' INT ',' INT ')'
//! ```

use crate::element::{Element, Pair};
use crate::error::{Error, Result};
use crate::term::{Factor, Term};

/// `x^k` expands to `k` factors, so the exponent is bounded.
pub const MAX_POWER: u32 = 1 << 16;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    pub(crate) fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn describe_next(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    pub(crate) fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.error(format!("unexpected {}", self.describe_next())),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected '{want}', found {}", self.describe_next()))
        }
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.error(format!(
                "expected an integer, found {}",
                self.describe_next()
            ));
        }
        match self.src[start..self.pos].parse() {
            Ok(v) => Ok(v),
            Err(_) => Err(Error::Syntax {
                offset: start,
                message: "integer too large".into(),
            }),
        }
    }

    /// `0 | ( INT , INT )`; the cursor must sit on the first character.
    pub(crate) fn element(&mut self) -> Result<Element> {
        match self.peek() {
            Some('0') => {
                self.bump();
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return self.error("constants other than 0 must be written as (i,j)");
                }
                Ok(Element::Zero)
            }
            Some('(') => {
                self.bump();
                let row = self.integer()?;
                self.expect(',')?;
                let col = self.integer()?;
                self.expect(')')?;
                Ok(Element::Pair(Pair::new(row, col)))
            }
            _ => self.error(format!(
                "expected an element, found {}",
                self.describe_next()
            )),
        }
    }

    fn factor(&mut self, out: &mut Vec<Factor>) -> Result<()> {
        match self.peek() {
            Some('x') => {
                self.bump();
                let mut power = 1;
                if self.peek() == Some('^') {
                    self.bump();
                    power = self.integer()?;
                    if power == 0 {
                        return self.error("exponent must be at least 1");
                    }
                    if power > MAX_POWER {
                        return self.error(format!("exponent above {MAX_POWER}"));
                    }
                }
                out.extend(std::iter::repeat_n(Factor::Var, power as usize));
                Ok(())
            }
            _ => {
                let e = self.element()?;
                out.push(Factor::Const(e));
                Ok(())
            }
        }
    }

    fn at_factor_start(&self) -> bool {
        matches!(self.peek(), Some('x' | '0' | '('))
    }

    /// Reads factors until the input ends or a character that cannot continue
    /// a term (such as `=`) is reached.
    pub(crate) fn term(&mut self) -> Result<Term> {
        let mut factors = Vec::new();
        self.skip_ws();
        if !self.at_factor_start() {
            return if self.peek().is_none() {
                Err(Error::EmptyTerm)
            } else {
                self.error(format!("expected a factor, found {}", self.describe_next()))
            };
        }
        loop {
            self.factor(&mut factors)?;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
                if !self.at_factor_start() {
                    return self.error(format!(
                        "expected a factor after '*', found {}",
                        self.describe_next()
                    ));
                }
            } else if !self.at_factor_start() {
                break;
            }
        }
        Ok(Term::new(factors))
    }

    pub(crate) fn equation(&mut self) -> Result<(Term, Term)> {
        let lhs = self.term()?;
        self.expect('=')?;
        self.skip_ws();
        if self.peek().is_none() {
            return self.error("missing right-hand side");
        }
        let rhs = self.term()?;
        self.skip_ws();
        self.expect_end()?;
        Ok((lhs, rhs))
    }
}
