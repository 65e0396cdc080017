//! Recursive-descent parser for the expression grammar. Reports syntax
//! errors with the byte offset and the token set expected there.

use crate::error::{Error, Result};
use crate::Rational;

use super::Expr;

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("end of input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, expected: &str) -> Error {
        let found = match self.bytes.get(self.pos) {
            Some(&b) => format!("{:?}", b as char),
            None => "end of input".to_string(),
        };
        Error::Syntax {
            offset: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.pos), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &str) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            if self.eat(b'+') {
                let r = self.term()?;
                e = Expr::Add(Box::new(e), Box::new(r));
            } else if self.eat(b'-') {
                let r = self.term()?;
                e = Expr::Sub(Box::new(e), Box::new(r));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.factor()?;
        loop {
            if self.eat(b'*') {
                let r = self.factor()?;
                e = Expr::Mul(Box::new(e), Box::new(r));
            } else if self.eat(b'/') {
                let r = self.factor()?;
                e = Expr::Div(Box::new(e), Box::new(r));
            } else {
                return Ok(e);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let (atom, was_bare_number) = self.atom()?;
        if !self.eat(b'^') {
            return Ok(atom);
        }
        // parenthesized exponent, or the bare-alpha shorthand `^a`
        if self.eat(b'a') {
            return Ok(Self::apply_bare_alpha(atom, was_bare_number));
        }
        self.expect(b'(', "'(' or 'a' after '^'")?;
        let exp = self.exponent()?;
        self.expect(b')', "')' closing the exponent")?;
        Ok(match exp {
            Exponent::BareAlpha => Self::apply_bare_alpha(atom, was_bare_number),
            Exponent::Alpha(k) => Expr::PowAlpha(Box::new(atom), k),
            Exponent::Classical(r) => Expr::PowClassical(Box::new(atom), r),
        })
    }

    /// `number^(a)` (and `number^a`) is the alpha-constant; an explicit
    /// multiplier like `^(1a)` stays a PowAlpha node.
    fn apply_bare_alpha(atom: Expr, was_bare_number: bool) -> Expr {
        match atom {
            Expr::Const(c) if was_bare_number => Expr::ConstAlpha(c),
            atom => Expr::PowAlpha(Box::new(atom), Rational::from_integer(1)),
        }
    }

    fn atom(&mut self) -> Result<(Expr, bool)> {
        match self.peek() {
            Some(b'0'..=b'9') => Ok((Expr::Const(self.number()?), true)),
            Some(b'x') => {
                self.pos += 1;
                Ok((Expr::Var, false))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')', "')'")?;
                Ok((e, false))
            }
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(', "'(' after 'E'")?;
                self.expect(b'x', "'x' inside E(...)")?;
                self.expect(b'^', "'^' inside E(...)")?;
                self.expect(b'a', "'a' inside E(...)")?;
                self.expect(b')', "')' closing E(...)")?;
                Ok((Expr::Ml, false))
            }
            Some(b'-') => {
                self.pos += 1;
                let f = self.factor()?;
                Ok((Expr::Neg(Box::new(f)), false))
            }
            _ => Err(self.err("number, 'x', '(', 'E' or '-'")),
        }
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.bytes.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            if !matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
                return Err(self.err("digit after decimal point"));
            }
            while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
                self.pos += 1;
            }
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        s.parse::<f64>().map_err(|_| Error::Syntax {
            offset: start,
            expected: "decimal literal".to_string(),
            found: s.to_string(),
        })
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        if !matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
            return Err(self.err("integer"));
        }
        while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        s.parse::<i64>().map_err(|_| Error::Syntax {
            offset: start,
            expected: "integer exponent (fits in i64)".to_string(),
            found: s.to_string(),
        })
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if self.eat(b'a') {
            return Ok(Exponent::BareAlpha);
        }
        // a decimal point inside an exponent is not a rational
        let num = self.integer()?;
        let mut k = Rational::from_integer(num);
        if self.peek() == Some(b'.') {
            return Err(self.err("rational exponent (no decimal point)"));
        }
        if self.eat(b'/') {
            let den = self.integer()?;
            if den == 0 {
                return Err(Error::Syntax {
                    offset: self.pos,
                    expected: "nonzero denominator".to_string(),
                    found: "0".to_string(),
                });
            }
            k = Rational::new(num, den);
            if self.peek() == Some(b'.') {
                return Err(self.err("rational exponent (no decimal point)"));
            }
        }
        let _ = self.eat(b'*');
        if self.eat(b'a') {
            Ok(Exponent::Alpha(k))
        } else {
            Ok(Exponent::Classical(k))
        }
    }
}

enum Exponent {
    BareAlpha,
    Alpha(Rational),
    Classical(Rational),
}
