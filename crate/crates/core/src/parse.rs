//! Text grammars: canonical scalar fractions, element expressions and
//! index tuples. Parsing round-trips with the `Display` impls.

use crate::algebra::{BasisSymbol, Element, SymbolKind};
use crate::error::{Error, Result};
use crate::gamma::GammaElem;
use crate::scalar::{Poly, Scalar};
use num::rational::BigRational;
use num::BigInt;
use num::traits::Zero;

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected {:?}", c as char)),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let d = self.digits()?;
        let v: i64 = d.to_string().parse().map_err(|_| Error::Syntax {
            pos: self.pos,
            msg: "integer out of range".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    /// `int ("/" posint)?`
    fn rational(&mut self) -> Result<BigRational> {
        let numer = self.digits()?;
        // only treat "/" as a fraction bar when followed by digits
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                let denom = self.digits()?;
                if denom.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                return Ok(BigRational::new(numer, denom));
            }
            self.pos = save;
        }
        Ok(BigRational::from(numer))
    }

    /// `u<k> ("^" e)?`
    fn var_factor(&mut self, nvars: usize) -> Result<Poly> {
        self.expect(b'u')?;
        let k = self.digits()?;
        let k: usize = k.to_string().parse().map_err(|_| Error::Syntax {
            pos: self.pos,
            msg: "variable index out of range".into(),
        })?;
        if k == 0 || k > nvars {
            return self.err(format!("unknown indeterminate u{}", k));
        }
        let mut p = Poly::var(k - 1, nvars);
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.digits()?;
            let e: u32 = e.to_string().parse().map_err(|_| Error::Syntax {
                pos: self.pos,
                msg: "exponent out of range".into(),
            })?;
            let base = p.clone();
            p = Poly::one(nvars);
            for _ in 0..e {
                p = p.mul(&base);
            }
        }
        Ok(p)
    }

    /// One signed monomial: `coeff ("*" u<k>("^" e)?)*`, coefficient optional
    /// when a variable factor is present.
    fn monomial(&mut self, nvars: usize, negate: bool) -> Result<Poly> {
        let mut acc = Poly::one(nvars);
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let q = self.rational()?;
                    acc = acc.scale(&q);
                    any = true;
                }
                Some(b'u') => {
                    let v = self.var_factor(nvars)?;
                    acc = acc.mul(&v);
                    any = true;
                }
                _ => {
                    if !any {
                        return self.err("expected monomial");
                    }
                    break;
                }
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    fn polynomial(&mut self, nvars: usize) -> Result<Poly> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                neg = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.monomial(nvars, neg)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let m = self.monomial(nvars, false)?;
                    acc = acc.add(&m);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let m = self.monomial(nvars, true)?;
                    acc = acc.add(&m);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn scalar(&mut self, nvars: usize) -> Result<Scalar> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let num = self.polynomial(nvars)?;
            self.expect(b')')?;
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.expect(b'(')?;
                let den = self.polynomial(nvars)?;
                self.expect(b')')?;
                return Scalar::new(num, den);
            }
            return Ok(Scalar::from_poly(num));
        }
        let p = self.polynomial(nvars)?;
        Ok(Scalar::from_poly(p))
    }

    /// Index list, either bare `1,-2` or parenthesized `(1,-2)`.
    fn index(&mut self, rank: usize) -> Result<GammaElem> {
        let wrapped = self.peek() == Some(b'(');
        if wrapped {
            self.pos += 1;
        }
        let mut coords = vec![self.signed_int()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            coords.push(self.signed_int()?);
        }
        if wrapped {
            self.expect(b')')?;
        }
        if coords.len() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: coords.len(),
            });
        }
        Ok(GammaElem(coords))
    }

    fn symbol(&mut self, rank: usize) -> Result<BasisSymbol> {
        let kind = match self.bump() {
            Some(b'L') => SymbolKind::L,
            Some(b'H') => SymbolKind::H,
            Some(b'C') => return Ok(BasisSymbol::central(rank)),
            Some(b'G') => match self.bump() {
                Some(b'+') => SymbolKind::GPlus,
                Some(b'-') => SymbolKind::GMinus,
                _ => return self.err("expected '+' or '-' after G"),
            },
            _ => return self.err("expected symbol L, H, G+, G- or C"),
        };
        self.expect(b'(')?;
        let idx = self.index(rank)?;
        self.expect(b')')?;
        Ok(BasisSymbol::new(kind, idx))
    }

    /// A balanced parenthesized span, returned without the outer parens.
    fn paren_span(&mut self) -> Result<&'a str> {
        self.expect(b'(')?;
        let start = self.pos;
        let mut depth = 1usize;
        while self.pos < self.text.len() {
            match self.text[self.pos] {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        let span =
                            std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                        self.pos += 1;
                        return Ok(span);
                    }
                }
                _ => {}
            }
            self.pos += 1;
        }
        self.err("unbalanced parenthesis")
    }

    /// `[scalar "*"] symbol`
    fn element_term(&mut self, rank: usize, nvars: usize, negate: bool) -> Result<Element> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let q = self.rational()?;
                self.expect(b'*')?;
                Scalar::from_rational(q, nvars)
            }
            Some(b'(') => {
                let span = self.paren_span()?;
                let s = parse_scalar(span, nvars)?;
                self.expect(b'*')?;
                s
            }
            _ => Scalar::one(nvars),
        };
        let sym = self.symbol(rank)?;
        let coeff = if negate { coeff.neg() } else { coeff };
        Ok(Element::term(sym, coeff))
    }

    fn element(&mut self, rank: usize, nvars: usize) -> Result<Element> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                neg = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.element_term(rank, nvars, neg)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.element_term(rank, nvars, false)?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.element_term(rank, nvars, true)?;
                    acc = acc.add(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

pub fn parse_scalar(text: &str, nvars: usize) -> Result<Scalar> {
    let mut c = Cursor::new(text);
    let s = c.scalar(nvars)?;
    if !c.at_end() {
        return c.err("trailing input");
    }
    Ok(s)
}

pub fn parse_element(text: &str, rank: usize, nvars: usize) -> Result<Element> {
    if text.trim() == "0" {
        return Ok(Element::zero());
    }
    let mut c = Cursor::new(text);
    let e = c.element(rank, nvars)?;
    if !c.at_end() {
        return c.err("trailing input");
    }
    Ok(e)
}

pub fn parse_index(text: &str, rank: usize) -> Result<GammaElem> {
    let mut c = Cursor::new(text);
    let idx = c.index(rank)?;
    if !c.at_end() {
        return c.err("trailing input");
    }
    Ok(idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn scalar_round_trips() {
        let s = parse_scalar("3/4", 0).unwrap();
        assert_eq!(s, rat(3, 4, 0));
        assert_eq!(s.to_string(), "3/4");

        let s = parse_scalar("(2*u1 - u2)/(u1)", 2).unwrap();
        assert_eq!(s.to_string(), "(2*u1 - u2)/(u1)");

        assert_eq!(parse_scalar("1/0", 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn scalar_errors_carry_position() {
        match parse_scalar("2*uz", 1) {
            Err(Error::Syntax { pos, .. }) => assert!(pos >= 2),
            other => panic!("expected syntax error, got {:?}", other),
        }
    }

    #[test]
    fn element_examples() {
        let e = parse_element("L(2) + 3*H(-1)", 1, 0).unwrap();
        assert_eq!(e.to_string(), "L(2) + 3*H(-1)");

        let e = parse_element("1/2*G+(0) - G-(1)", 1, 0).unwrap();
        use crate::algebra::{BasisSymbol, SymbolKind};
        use crate::gamma::GammaElem;
        assert_eq!(
            e.coeff(&BasisSymbol::new(SymbolKind::GPlus, GammaElem(vec![0]))),
            Some(&rat(1, 2, 0))
        );
        assert_eq!(
            e.coeff(&BasisSymbol::new(SymbolKind::GMinus, GammaElem(vec![1]))),
            Some(&rat(-1, 1, 0))
        );
        assert_eq!(e.to_string(), "1/2*G+(0) - G-(1)");

        assert_eq!(
            parse_element("L(1,2)", 1, 0),
            Err(Error::RankMismatch {
                expected: 1,
                got: 2
            })
        );
    }

    #[test]
    fn element_with_generic_coefficients() {
        let e = parse_element("(u1)*L(1,0) - ((u1 + 1)/(u2))*H(0,0)", 2, 2).unwrap();
        let rendered = e.to_string();
        assert_eq!(parse_element(&rendered, 2, 2).unwrap(), e);
    }

    #[test]
    fn index_forms() {
        assert_eq!(parse_index("3", 1).unwrap(), GammaElem(vec![3]));
        assert_eq!(parse_index("(1,-2)", 2).unwrap(), GammaElem(vec![1, -2]));
    }

    #[test]
    fn zero_element() {
        assert!(parse_element("0", 1, 0).unwrap().is_zero());
    }
}
