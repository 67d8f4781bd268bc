//! Text grammars and JSON forms — the wire format shared by the CLI and the
//! golden-file tests.
//!
//! Words:        `factor*` where `factor := ('x'|'y') ['^' int≥1]`, whitespace
//!               ignored; the empty string is the unit word.
//! Compositions: `"(i1,i2,...,ik)"` with optional whitespace; `"()"` is empty.
//! Polynomials:  signed sums of terms `rat '*' word | word | rat`, rationals
//!               written `p/q` (the `/q` omitted when 1).
//! QSym:         signed sums of `rat '*' B '(' parts ')'` with a basis letter
//!               `B ∈ {M, F, E}`; all terms of one expression share the letter.

use crate::poly::{NCPoly, Rat};
use crate::qsym::{Basis, QSymExpr};
use crate::word::{Composition, Letter, Word};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Scanner<'a> {
        Scanner { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    /// A positive integer (≥ 1).
    fn positive(&mut self) -> Result<u64> {
        let start = self.pos;
        let n = self.uint()?;
        if n == 0 {
            return Err(Error::parse(start, "expected a positive integer"));
        }
        Ok(n)
    }

    fn letter(&mut self) -> Result<Letter> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Letter::X)
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Letter::Y)
            }
            _ => Err(Error::parse(self.pos, "expected 'x' or 'y'")),
        }
    }

    /// `letter ['^' exponent]*` repeated; empty input is the unit word.
    fn word(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        while matches!(self.peek(), Some(b'x') | Some(b'y')) {
            let a = self.letter()?;
            let k = if self.eat(b'^') { self.positive()? } else { 1 };
            letters.extend(std::iter::repeat(a).take(k as usize));
        }
        Ok(Word::from_letters(letters))
    }

    /// Unsigned rational `p['/'q]`.
    fn rational(&mut self) -> Result<Rat> {
        let num = self.uint()?;
        let den = if self.eat(b'/') {
            let start = self.pos;
            let d = self.uint()?;
            if d == 0 {
                return Err(Error::parse(start, "zero denominator"));
            }
            d
        } else {
            1
        };
        Ok(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    fn composition(&mut self) -> Result<Composition> {
        self.expect(b'(')?;
        let mut parts = Vec::new();
        if !self.eat(b')') {
            loop {
                let start = self.pos;
                let p = self.positive()?;
                let p = u32::try_from(p).map_err(|_| Error::parse(start, "part too large"))?;
                parts.push(p);
                if self.eat(b')') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        Ok(Composition::new(parts).expect("parts validated positive"))
    }
}

/// Parse a word; see the module docs for the grammar.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut s = Scanner::new(text);
    let w = s.word()?;
    if !s.at_end() {
        return Err(Error::parse(s.pos, "unexpected trailing input"));
    }
    Ok(w)
}

/// Parse a composition written `(i1,i2,...,ik)`.
pub fn parse_composition(text: &str) -> Result<Composition> {
    let mut s = Scanner::new(text);
    let c = s.composition()?;
    if !s.at_end() {
        return Err(Error::parse(s.pos, "unexpected trailing input"));
    }
    Ok(c)
}

/// Parse a polynomial over words, e.g. `"2*xyxy + 4*xxyy"` or `"x - 1/2"`.
pub fn parse_ncpoly(text: &str) -> Result<NCPoly> {
    let mut s = Scanner::new(text);
    let mut out = NCPoly::zero();
    let mut first = true;
    loop {
        let negative = if s.eat(b'-') {
            true
        } else if s.eat(b'+') {
            false
        } else if first {
            false
        } else if s.at_end() {
            break;
        } else {
            return Err(Error::parse(s.pos, "expected '+' or '-'"));
        };
        first = false;
        let mut coeff = if matches!(s.peek(), Some(c) if c.is_ascii_digit()) {
            let c = s.rational()?;
            s.eat(b'*');
            c
        } else {
            Rat::one()
        };
        if negative {
            coeff = -coeff;
        }
        let w = s.word()?;
        out.add_term(w, coeff);
        if s.at_end() {
            break;
        }
    }
    Ok(out)
}

/// Parse a quasi-symmetric expression like `"M(2,3) + M(3,2) - 2*M(5)"`.
/// All terms must use the same basis letter.
pub fn parse_qsym(text: &str) -> Result<QSymExpr> {
    let mut s = Scanner::new(text);
    let mut basis: Option<Basis> = None;
    let mut terms: Vec<(Composition, Rat)> = Vec::new();
    let mut first = true;
    loop {
        let negative = if s.eat(b'-') {
            true
        } else if s.eat(b'+') {
            false
        } else if first {
            false
        } else if s.at_end() {
            break;
        } else {
            return Err(Error::parse(s.pos, "expected '+' or '-'"));
        };
        first = false;
        let mut coeff = if matches!(s.peek(), Some(c) if c.is_ascii_digit()) {
            let c = s.rational()?;
            s.eat(b'*');
            c
        } else {
            Rat::one()
        };
        if negative {
            coeff = -coeff;
        }
        let b = match s.bump() {
            Some(b'M') => Basis::M,
            Some(b'F') => Basis::F,
            Some(b'E') => Basis::E,
            _ => return Err(Error::parse(s.pos.saturating_sub(1), "expected basis letter M, F or E")),
        };
        match basis {
            None => basis = Some(b),
            Some(prev) if prev != b => {
                return Err(Error::parse(s.pos, "mixed basis letters in one expression"))
            }
            _ => {}
        }
        let comp = s.composition()?;
        terms.push((comp, coeff));
        if s.at_end() {
            break;
        }
    }
    let mut expr = QSymExpr::zero(basis.unwrap_or(Basis::M));
    for (comp, coeff) in terms {
        expr.add_term(comp, coeff);
    }
    Ok(expr)
}

/// JSON form of a polynomial: a list of `{"coeff": "p/q", "word": "letters"}`.
pub fn ncpoly_to_json(p: &NCPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(w, c)| {
                json!({
                    "coeff": c.to_string(),
                    "word": if w.is_unit() { String::new() } else { w.to_string() },
                })
            })
            .collect(),
    )
}

/// JSON form of a quasi-symmetric expression: the polynomial schema plus a
/// basis field, compositions given as arrays of parts.
pub fn qsym_to_json(e: &QSymExpr) -> Value {
    json!({
        "basis": e.basis().letter().to_string(),
        "terms": e
            .terms()
            .map(|(i, c)| {
                json!({
                    "coeff": c.to_string(),
                    "composition": i.parts(),
                })
            })
            .collect::<Vec<_>>(),
    })
}
