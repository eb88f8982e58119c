//! Complex scalar expressions: reals, `i`, `pi`, `sqrt()`, `exp()`,
//! `+ - * /` and parentheses. A number directly followed by `i` is
//! imaginary, so `0.5-2i` reads as `0.5 - 2i`.

use thiserror::Error;

use crate::tensor::Complex;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("column {col}: {msg}")]
pub struct ExprError {
    pub col: usize,
    pub msg: String,
}

/// Character cursor shared by the expression and DSL parsers.
#[derive(Clone, Debug)]
pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

/// Nesting limit for parentheses and unary operators.
const MAX_DEPTH: usize = 64;

impl Cursor {
    pub(crate) fn new(text: &str) -> Self {
        Self { chars: text.chars().collect(), pos: 0 }
    }

    pub(crate) fn col(&self) -> usize {
        self.pos + 1
    }

    pub(crate) fn err(&self, msg: impl Into<String>) -> ExprError {
        ExprError { col: self.col(), msg: msg.into() }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|ch| ch.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn peek_raw(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Consume `s` (after whitespace) if it is next.
    pub(crate) fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, s: &str) -> Result<(), ExprError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    /// A run of `[A-Za-z0-9_]`.
    pub(crate) fn word(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|ch| ch.is_ascii_alphanumeric() || *ch == '_') {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    /// Peek the next word without consuming it.
    pub(crate) fn peek_word(&mut self) -> Option<String> {
        let save = self.pos;
        let w = self.word();
        self.pos = save;
        w
    }

    pub(crate) fn rest(&self) -> String {
        self.chars[self.pos..].iter().collect()
    }

    pub(crate) fn expr(&mut self) -> Result<Complex, ExprError> {
        self.sum(0)
    }

    fn sum(&mut self, depth: usize) -> Result<Complex, ExprError> {
        let mut acc = self.product(depth)?;
        loop {
            if self.eat("+") {
                acc += self.product(depth)?;
            } else if self.peek() == Some('-') && self.chars.get(self.pos + 1) != Some(&'>') {
                self.pos += 1;
                acc -= self.product(depth)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self, depth: usize) -> Result<Complex, ExprError> {
        let mut acc = self.unary(depth)?;
        loop {
            if self.eat("*") {
                acc *= self.unary(depth)?;
            } else if self.eat("/") {
                let d = self.unary(depth)?;
                if d == Complex::new(0.0, 0.0) {
                    return Err(self.err("division by zero"));
                }
                acc /= d;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self, depth: usize) -> Result<Complex, ExprError> {
        if depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        if self.eat("-") {
            // adding zero clears negative zeros, keeping sqrt(-1) on the +i branch
            return Ok(-self.unary(depth + 1)? + Complex::new(0.0, 0.0));
        }
        if self.eat("+") {
            return self.unary(depth + 1);
        }
        self.atom(depth)
    }

    fn atom(&mut self, depth: usize) -> Result<Complex, ExprError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.sum(depth + 1)?;
                self.expect(")")?;
                Ok(v)
            }
            Some(ch) if ch.is_ascii_digit() || ch == '.' => self.number(),
            Some(ch) if ch.is_ascii_alphabetic() => {
                let start = self.col();
                let w = self.word().unwrap_or_default();
                match w.as_str() {
                    "i" => Ok(Complex::new(0.0, 1.0)),
                    "pi" => Ok(Complex::new(std::f64::consts::PI, 0.0)),
                    "sqrt" | "exp" => {
                        self.expect("(")?;
                        let v = self.sum(depth + 1)?;
                        self.expect(")")?;
                        Ok(if w == "sqrt" { v.sqrt() } else { v.exp() })
                    }
                    _ => Err(ExprError { col: start, msg: format!("unknown name `{w}`") }),
                }
            }
            Some(ch) => Err(self.err(format!("unexpected `{ch}`"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }

    fn number(&mut self) -> Result<Complex, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let digits = |s: &mut Self| {
            let from = s.pos;
            while s.peek_raw().is_some_and(|ch| ch.is_ascii_digit()) {
                s.pos += 1;
            }
            s.pos > from
        };
        let mut any = digits(self);
        if self.peek_raw() == Some('.') {
            self.pos += 1;
            any |= digits(self);
        }
        if !any {
            return Err(self.err("malformed number"));
        }
        if matches!(self.peek_raw(), Some('e' | 'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek_raw(), Some('+' | '-')) {
                self.pos += 1;
            }
            if !digits(self) {
                self.pos = save;
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let x: f64 = text.parse().map_err(|_| ExprError { col: start + 1, msg: format!("malformed number `{text}`") })?;
        let next_is_word = |s: &Self| s.chars.get(s.pos + 1).is_some_and(|ch| ch.is_ascii_alphanumeric() || *ch == '_');
        if self.peek_raw() == Some('i') && !next_is_word(self) {
            self.pos += 1;
            Ok(Complex::new(0.0, x))
        } else {
            Ok(Complex::new(x, 0.0))
        }
    }
}

/// Parse a complete expression; the value must be finite.
pub fn parse_cexpr(text: &str) -> Result<Complex, ExprError> {
    let mut cur = Cursor::new(text);
    let v = cur.expr()?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    check_finite(&cur, v)
}

pub(crate) fn check_finite(cur: &Cursor, v: Complex) -> Result<Complex, ExprError> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(cur.err("value is not finite"))
    }
}

/// Text that parses back to exactly `z`.
pub fn format_complex(z: Complex) -> String {
    match (z.re == 0.0, z.im == 0.0) {
        (_, true) => format!("{}", z.re),
        (true, false) => format!("{}i", z.im),
        (false, false) if z.im < 0.0 => format!("{}-{}i", z.re, -z.im),
        _ => format!("{}+{}i", z.re, z.im),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: Complex, b: Complex) -> bool {
        (a - b).norm() < 1e-14
    }

    #[test]
    fn literals_and_constants() {
        assert_eq!(parse_cexpr("2").unwrap(), Complex::new(2.0, 0.0));
        assert_eq!(parse_cexpr("i").unwrap(), Complex::new(0.0, 1.0));
        assert_eq!(parse_cexpr("0.5i").unwrap(), Complex::new(0.0, 0.5));
        assert_eq!(parse_cexpr("1.5e3").unwrap(), Complex::new(1500.0, 0.0));
        assert_eq!(parse_cexpr("0.25-0.5i").unwrap(), Complex::new(0.25, -0.5));
        assert!(close(parse_cexpr("pi").unwrap(), Complex::new(std::f64::consts::PI, 0.0)));
    }

    #[test]
    fn arithmetic() {
        assert!(close(parse_cexpr("2*sqrt(2)").unwrap(), Complex::new(2.0 * 2f64.sqrt(), 0.0)));
        assert!(close(parse_cexpr("1/sqrt(2)").unwrap(), Complex::new(0.5f64.sqrt(), 0.0)));
        assert!(close(parse_cexpr("exp(i*pi/4)").unwrap(), Complex::from_polar(1.0, std::f64::consts::FRAC_PI_4)));
        assert!(close(parse_cexpr("-(1+i)*(1-i)").unwrap(), Complex::new(-2.0, 0.0)));
        assert!(close(parse_cexpr("sqrt(-1)").unwrap(), Complex::new(0.0, 1.0)));
        assert!(close(parse_cexpr("2 - 3 - 4").unwrap(), Complex::new(-5.0, 0.0)));
        assert!(close(parse_cexpr("8/2/2").unwrap(), Complex::new(2.0, 0.0)));
    }

    #[test]
    fn errors() {
        for bad in ["", "1+", "foo", "(1", "1 2", "1/0", "exp(1000)", "sqrt 2", "--", "1e999"] {
            assert!(parse_cexpr(bad).is_err(), "{bad}");
        }
        let deep = "(".repeat(200) + "1" + &")".repeat(200);
        assert!(parse_cexpr(&deep).is_err());
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_complex(Complex::new(1.0, 0.0)), "1");
        assert_eq!(format_complex(Complex::new(0.0, -1.0)), "-1i");
        assert_eq!(format_complex(Complex::new(0.5, -0.25)), "0.5-0.25i");
        assert_eq!(format_complex(Complex::new(-0.5, 2.0)), "-0.5+2i");
    }

    proptest! {
        #[test]
        fn format_round_trips(re in proptest::num::f64::NORMAL | proptest::num::f64::ZERO, im in proptest::num::f64::NORMAL | proptest::num::f64::ZERO) {
            let z = Complex::new(re, im);
            prop_assert_eq!(parse_cexpr(&format_complex(z)).unwrap(), z);
        }
    }
}
