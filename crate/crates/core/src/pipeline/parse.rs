use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactpoly::BiPoly;
use crate::scalar::Ring;
use crate::Error;

type Q = BigRational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<BiPoly<Q>, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly<Q>, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                match constant_of(&d) {
                    Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                    Some(_) => return Err(Error::Parse { pos: at, msg: "division by zero".into() }),
                    None => return Err(Error::Parse { pos: at, msg: "division by a non-constant".into() }),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly<Q>, Error> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly<Q>, Error> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected a nonnegative integer exponent");
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = match text.parse() {
                Ok(e) if e <= 1000 => e,
                _ => return Err(Error::Parse { pos: start, msg: "exponent too large".into() }),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly<Q>, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    b"x" => Ok(BiPoly::x()),
                    b"y" => Ok(BiPoly::y()),
                    other => Err(Error::Parse {
                        pos: start,
                        msg: format!(
                            "unknown symbol '{}'; coefficients must be rational and the variables are x and y",
                            String::from_utf8_lossy(other)
                        ),
                    }),
                }
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn number(&mut self) -> Result<BiPoly<Q>, Error> {
        let start = self.pos;
        let mut int_part = BigInt::zero();
        let mut den = BigInt::one();
        let mut seen_digit = false;
        let mut seen_dot = false;
        while let Some(&c) = self.src.get(self.pos) {
            if c.is_ascii_digit() {
                int_part = int_part * 10 + BigInt::from(c - b'0');
                if seen_dot {
                    den *= 10;
                }
                seen_digit = true;
            } else if c == b'.' && !seen_dot {
                seen_dot = true;
            } else {
                break;
            }
            self.pos += 1;
        }
        if !seen_digit {
            return Err(Error::Parse { pos: start, msg: "malformed number".into() });
        }
        Ok(BiPoly::constant(BigRational::new(int_part, den)))
    }
}

fn constant_of(p: &BiPoly<Q>) -> Option<Q> {
    if p.is_zero() {
        return Some(Q::zero());
    }
    (p.total_degree() == 0).then(|| p.coeff(0, 0))
}

/// Parse a polynomial in `x` and `y` with rational coefficients.
///
/// Accepts sums of products of rationals, `x`, `y`, parenthesized
/// subexpressions and nonnegative integer powers; division is only allowed by
/// nonzero constants.
pub fn parse_curve(text: &str) -> Result<BiPoly<Q>, Error> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    if p.peek().is_none() {
        return p.err("empty input");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Canonical text form, readable back by [`parse_curve`]. Terms are listed
/// by decreasing total degree, then decreasing `y` exponent.
pub fn format_curve(p: &BiPoly<Q>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|((i1, j1), _), ((i2, j2), _)| (i2 + j2, j2).cmp(&(i1 + j1, j1)));
    let mut out = String::new();
    for (n, ((i, j), c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !a.is_one() || (*i == 0 && *j == 0) {
            factors.push(a.to_string());
        }
        for (var, e) in [("x", *i), ("y", *j)] {
            match e {
                0 => {}
                1 => factors.push(var.into()),
                _ => factors.push(format!("{var}^{e}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    #[test]
    fn parses_simple_expression() {
        let p = parse_curve("y^2 - x").unwrap();
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.deg_y(), 2);
        assert_eq!(p.coeff(1, 0), qi(-1));
    }

    #[test]
    fn rationals_parentheses_and_decimals() {
        let p = parse_curve("369/364*y^6 + (x+1)^2 - 0.25").unwrap();
        assert_eq!(p.coeff(0, 6), q(369, 364));
        assert_eq!(p.coeff(0, 0), q(3, 4));
        assert_eq!(p.coeff(1, 0), qi(2));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_curve("y^^2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_curve("sqrt(2)*x").is_err());
        assert!(parse_curve("x/y").is_err());
        assert!(parse_curve("x +").is_err());
    }

    #[test]
    fn format_roundtrip() {
        let p = parse_curve("-4/3*y^6 + (-8/9*x^2 + 4*x + 1)*y^4 + x - 7").unwrap();
        assert_eq!(parse_curve(&format_curve(&p)).unwrap(), p);
        assert_eq!(format_curve(&parse_curve("y^2 - x").unwrap()), "y^2 - x");
    }
}
