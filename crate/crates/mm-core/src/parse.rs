//! Text form of polynomials.
//!
//! Grammar: a sum of terms joined by `+` and `-`; a term is a `*`-joined
//! product of factors; a factor is an integer, a variable with an optional
//! `^k` power, or a parenthesized sub-expression, also with an optional
//! power. Variable names follow the ring table (`s`, `f`, `c01`, `b13`,
//! `b10_2`, ...). The printer emits the expanded form with coefficients as
//! signed minimal residues, so `parse(print(p)) == p` for every `p`.

use crate::error::ParseError;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Poly;
use crate::ring::Ring;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// Parses a polynomial in the named variables of `ring`.
pub fn parse_poly(ring: &Arc<Ring>, input: &str) -> Result<Poly, ParseError> {
    Parser {
        ring,
        bytes: input.as_bytes(),
        pos: 0,
    }
    .parse()
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(&mut self) -> Result<Poly, ParseError> {
        let p = self.expr()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let mut sign = self.take_sign().unwrap_or(1i64);
        let mut acc = Poly::zero(self.ring);
        loop {
            let t = self.term()?;
            acc = if sign < 0 {
                acc.sub_ref(&t)
            } else {
                acc.add_ref(&t)
            };
            self.skip_ws();
            match self.take_sign() {
                Some(s) => sign = s,
                None => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                let f = self.factor()?;
                acc = acc.mul_ref(&f);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'0'..=b'9') => {
                let k = self.number()?;
                Ok(Poly::constant(
                    self.ring,
                    k % self.ring.field().modulus(),
                ))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                let e = self.maybe_power()?;
                let mut acc = Poly::one(self.ring);
                for _ in 0..e {
                    acc = acc.mul_ref(&inner);
                }
                Ok(acc)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'@' => {
                let (v, e) = self.var_power()?;
                let mut exps = alloc::vec![0u16; self.ring.num_vars()];
                exps[v] = e;
                Ok(Poly::from_terms(
                    self.ring,
                    alloc::vec![(Monomial::from_exps(&exps), 1)],
                ))
            }
            _ => Err(self.err("expected a coefficient, variable, or `(`")),
        }
    }

    fn maybe_power(&mut self) -> Result<u16, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let k = self.number()?;
        u16::try_from(k).map_err(|_| self.err("exponent too large"))
    }

    fn var_power(&mut self) -> Result<(usize, u16), ParseError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'@' {
                self.pos += 1;
            } else {
                break;
            }
        }
        let name = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let v = self
            .ring
            .table()
            .index_of(name)
            .ok_or_else(|| ParseError {
                at: start,
                msg: format!("unknown variable `{name}`"),
            })?;
        let e = self.maybe_power()?;
        Ok((v, e))
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| self.err("number out of range"))
    }

    fn take_sign(&mut self) -> Option<i64> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(1)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-1)
            }
            _ => None,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            at: self.pos,
            msg: msg.to_string(),
        }
    }
}

/// Renders a polynomial with terms sorted descending under `order` and
/// coefficients as signed minimal residues.
pub fn print_poly(p: &Poly, order: MonomialOrder) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let ring = p.ring();
    let modulus = ring.field().modulus();
    let mut terms: Vec<&(Monomial, u64)> = p.terms().iter().collect();
    terms.sort_by(|a, b| order.compare(&b.0, &a.0));
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let negative = *c > modulus / 2;
        let mag = if negative { modulus - c } else { *c };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let factors = monomial_factors(ring, m);
        if factors.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if mag != 1 {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

fn monomial_factors(ring: &Ring, m: &Monomial) -> Vec<String> {
    let mut out = Vec::new();
    for v in 0..m.num_vars() {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        let name = ring.table().name(v);
        if e == 1 {
            out.push(name.to_string());
        } else {
            out.push(format!("{name}^{e}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn mm_ring(p: u64, d: u64) -> Arc<Ring> {
        Ring::mayr_meyer(2, Field::new(p, d).unwrap()).unwrap()
    }

    #[test]
    fn parses_pinned_example() {
        // b01^2 - b02^2 over F_5 has coefficients {1, 4}.
        let r = mm_ring(5, 2);
        let p = parse_poly(&r, "b01^2 - b02^2").unwrap();
        assert_eq!(p.num_terms(), 2);
        let coeffs: Vec<u64> = p.terms().iter().map(|t| t.1).collect();
        assert!(coeffs.contains(&1) && coeffs.contains(&4));
        assert_eq!(print_poly(&p, MonomialOrder::Grevlex), "b01^2 - b02^2");
    }

    #[test]
    fn parses_products_and_coefficients() {
        let r = mm_ring(13, 2);
        let p = parse_poly(&r, "s*c01 - f*c02").unwrap();
        assert_eq!(p.num_terms(), 2);
        let q = parse_poly(&r, "3*b11^2*c14 + 12").unwrap();
        assert_eq!(q.num_terms(), 2);
        // The variable table lists c-variables before b-variables per level.
        assert_eq!(print_poly(&q, MonomialOrder::Grevlex), "3*c14*b11^2 - 1");
    }

    #[test]
    fn parses_parenthesized_products() {
        let r = mm_ring(13, 2);
        let a = parse_poly(&r, "c01*(s - f*b01^2)").unwrap();
        let b = parse_poly(&r, "s*c01 - f*c01*b01^2").unwrap();
        assert_eq!(a, b);
        let sq = parse_poly(&r, "(b01 - b02)^2").unwrap();
        let expanded = parse_poly(&r, "b01^2 - 2*b01*b02 + b02^2").unwrap();
        assert_eq!(sq, expanded);
        assert!(parse_poly(&r, "(s + f").is_err());
        assert!(parse_poly(&r, "()").is_err());
    }

    #[test]
    fn rejects_garbage_with_position() {
        let r = mm_ring(13, 2);
        let e = parse_poly(&r, "s + q01").unwrap_err();
        assert_eq!(e.at, 4);
        assert!(parse_poly(&r, "s + ").is_err());
        assert!(parse_poly(&r, "s s").is_err());
        assert!(parse_poly(&r, "").is_err());
    }

    #[test]
    fn zero_prints_as_zero() {
        let r = mm_ring(13, 2);
        let z = parse_poly(&r, "s - s").unwrap();
        assert!(z.is_zero());
        assert_eq!(print_poly(&z, MonomialOrder::Grevlex), "0");
    }

    #[test]
    fn cancellation_during_parse() {
        let r = mm_ring(13, 2);
        let p = parse_poly(&r, "7*s + 7*s").unwrap();
        assert_eq!(print_poly(&p, MonomialOrder::Grevlex), "s");
    }

    proptest! {
        // Printing then parsing is the identity on random polynomials.
        #[test]
        fn print_parse_round_trip(seed_terms in proptest::collection::vec(
            (proptest::collection::vec(0u16..4, 18), 1u64..13), 1..8)) {
            let r = mm_ring(13, 2);
            let terms: alloc::vec::Vec<_> = seed_terms
                .into_iter()
                .map(|(e, c)| (crate::monomial::Monomial::from_exps(&e), c))
                .collect();
            let p = Poly::from_terms(&r, terms);
            for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
                let text = print_poly(&p, order);
                let q = parse_poly(&r, &text).unwrap();
                prop_assert_eq!(q.clone(), p.clone());
            }
        }
    }
}
