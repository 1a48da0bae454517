//! Generator words and formal linear combinations over `Q(u)`.
//!
//! Nothing here knows about the relations of the algebra: products are plain
//! concatenation. Reduction lives in [`crate::rewrite`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{parse_rational_function_at, RationalFunction, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("generator index {index} out of range for {n} strands (valid: 1..={max})", max = n.saturating_sub(1))]
    IndexOutOfRange { index: usize, n: usize },
    #[error("elements live on different strand counts ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    T,
    TInv,
    E,
}

/// One letter: `T_i`, `T_i^-1` or `E_i` (1-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn t(index: usize) -> Self {
        Generator { kind: GenKind::T, index }
    }

    pub fn t_inv(index: usize) -> Self {
        Generator { kind: GenKind::TInv, index }
    }

    pub fn e(index: usize) -> Self {
        Generator { kind: GenKind::E, index }
    }

    pub fn check(&self, n: usize) -> Result<(), ElementError> {
        if self.index == 0 || self.index >= n {
            Err(ElementError::IndexOutOfRange { index: self.index, n })
        } else {
            Ok(())
        }
    }
}

// Letter order: T1 < T1^-1 < E1 < T2 < ...
impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.index, self.kind).cmp(&(other.index, other.kind))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::T => write!(f, "T{}", self.index),
            GenKind::TInv => write!(f, "T{}^-1", self.index),
            GenKind::E => write!(f, "E{}", self.index),
        }
    }
}

/// A finite product of generators; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn check(&self, n: usize) -> Result<(), ElementError> {
        self.0.iter().try_for_each(|g| g.check(n))
    }

    /// Parse a single word such as `T1 E2 T1^-1` (or `1`).
    pub fn parse(text: &str, n: usize) -> Result<Word, ElementError> {
        let e = Element::parse(text, n)?;
        let mut terms = e.terms.into_iter();
        match (terms.next(), terms.next()) {
            (Some((w, c)), None) if c.is_one() => Ok(w),
            _ => Err(ElementError::Syntax {
                position: 0,
                message: "expected a single word".into(),
            }),
        }
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// Length-lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A formal linear combination of words on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    n: usize,
    terms: BTreeMap<Word, RationalFunction>,
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Element { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_word(n, Word::identity())
    }

    pub fn from_word(n: usize, w: Word) -> Self {
        Self::term(n, RationalFunction::one(), w)
    }

    pub fn generator(n: usize, g: Generator) -> Self {
        Self::from_word(n, Word(vec![g]))
    }

    pub fn term(n: usize, c: RationalFunction, w: Word) -> Self {
        let mut e = Self::zero(n);
        e.add_term(w, c);
        e
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, RationalFunction)>) -> Self {
        let mut e = Self::zero(n);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn parse(text: &str, n: usize) -> Result<Self, ElementError> {
        ElementParser::new(text, n).element()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, RationalFunction> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> RationalFunction {
        self.terms.get(w).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Accumulate `c * w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn same_ambient(&self, other: &Element) -> Result<(), ElementError> {
        if self.n != other.n {
            return Err(ElementError::AmbientMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element, ElementError> {
        self.same_ambient(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, ElementError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&RationalFunction::from_int(-1))
    }

    pub fn scale(&self, c: &RationalFunction) -> Element {
        if c.is_zero() {
            return Element::zero(self.n);
        }
        Element {
            n: self.n,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Bilinear extension of concatenation; no relations are applied.
    pub fn free_mul(&self, other: &Element) -> Result<Element, ElementError> {
        self.same_ambient(other)?;
        let mut out = Element::zero(self.n);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Same terms, viewed on a larger number of strands.
    pub fn widen(&self, n: usize) -> Element {
        assert!(n >= self.n, "cannot narrow an element");
        Element { n, terms: self.terms.clone() }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = match c.as_constant() {
                Some(q) if q < num_rational::BigRational::from_integer(0.into()) => (true, RationalFunction::from_rational(-q)),
                _ => (false, c.clone()),
            };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{}", mag.to_coefficient_string())?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{}*{w}", mag.to_coefficient_string())?;
            }
        }
        Ok(())
    }
}

fn lift(r: Result<RationalFunction, ScalarError>) -> Result<RationalFunction, ElementError> {
    r.map_err(|e| match e {
        ScalarError::Syntax { position, message } => ElementError::Syntax { position, message },
        other => other.into(),
    })
}

struct ElementParser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> ElementParser<'a> {
    fn new(src: &'a str, n: usize) -> Self {
        ElementParser { src, bytes: src.as_bytes(), pos: 0, n }
    }

    fn error(&self, message: &str) -> ElementError {
        ElementError::Syntax { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn element(&mut self) -> Result<Element, ElementError> {
        let mut out = Element::zero(self.n);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return Err(self.error("empty element")),
                None => break,
                Some(b'+') if !first => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return Err(self.error("expected '+' or '-'")),
            };
            first = false;
            let (c, w) = self.term()?;
            out.add_term(w, if negative { -c } else { c });
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(RationalFunction, Word), ElementError> {
        match self.peek() {
            Some(b'T') | Some(b'E') => Ok((RationalFunction::one(), self.word()?)),
            Some(b'(') => {
                let c = self.parenthesized()?;
                self.optional_word(c)
            }
            Some(c) if c.is_ascii_digit() || c == b'u' => {
                let c = self.literal()?;
                self.optional_word(c)
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn optional_word(&mut self, c: RationalFunction) -> Result<(RationalFunction, Word), ElementError> {
        if self.peek() == Some(b'*') {
            self.pos += 1;
            Ok((c, self.word()?))
        } else {
            Ok((c, Word::identity()))
        }
    }

    fn parenthesized(&mut self) -> Result<RationalFunction, ElementError> {
        let start = self.pos;
        let mut depth = 0usize;
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        self.pos += 1;
                        let inner = &self.src[start + 1..self.pos - 1];
                        return lift(parse_rational_function_at(inner, start + 1));
                    }
                }
                _ => {}
            }
            self.pos += 1;
        }
        Err(ElementError::Syntax { position: start, message: "unbalanced '('".into() })
    }

    fn literal(&mut self) -> Result<RationalFunction, ElementError> {
        let start = self.pos;
        if self.bytes[self.pos] == b'u' {
            self.pos += 1;
            if self.bytes.get(self.pos) == Some(&b'^') {
                self.pos += 1;
                if self.bytes.get(self.pos) == Some(&b'-') {
                    self.pos += 1;
                }
                self.digits().ok_or_else(|| self.error("expected exponent"))?;
            }
        } else {
            self.digits();
        }
        lift(parse_rational_function_at(&self.src[start..self.pos], start))
    }

    fn digits(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        self.src[start..self.pos].parse().ok().or(Some(usize::MAX))
    }

    fn word(&mut self) -> Result<Word, ElementError> {
        if self.peek() == Some(b'1') {
            let save = self.pos;
            self.pos += 1;
            if self.bytes.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos = save;
                return Err(self.error("expected a generator or '1'"));
            }
            return Ok(Word::identity());
        }
        let mut letters = Vec::new();
        while let Some(c @ (b'T' | b'E')) = self.peek() {
            let start = self.pos;
            self.pos += 1;
            let index = self.digits().ok_or_else(|| self.error("expected generator index"))?;
            let mut kind = if c == b'T' { GenKind::T } else { GenKind::E };
            if self.src[self.pos..].starts_with("^-1") {
                if kind == GenKind::E {
                    return Err(self.error("E generators are idempotent and have no inverse"));
                }
                self.pos += 3;
                kind = GenKind::TInv;
            }
            let g = Generator { kind, index };
            g.check(self.n).map_err(|e| match e {
                ElementError::IndexOutOfRange { .. } => e,
                _ => ElementError::Syntax { position: start, message: "bad generator".into() },
            })?;
            letters.push(g);
        }
        if letters.is_empty() {
            return Err(self.error("expected a word"));
        }
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn parses_plain_word() {
        let e = Element::parse("T1 E2 T1", 3).unwrap();
        assert_eq!(e.len(), 1);
        let w = Word(vec![Generator::t(1), Generator::e(2), Generator::t(1)]);
        assert!(e.coeff(&w).is_one());
    }

    #[test]
    fn parses_coefficients_and_identity() {
        let e = Element::parse("(u-1)*E1 T1 + 1", 2).unwrap();
        assert_eq!(e.coeff(&Word(vec![Generator::e(1), Generator::t(1)])), rf("u-1"));
        assert!(e.coeff(&Word::identity()).is_one());
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn rejects_out_of_range_index() {
        assert_eq!(Element::parse("E3", 3), Err(ElementError::IndexOutOfRange { index: 3, n: 3 }));
        assert!(matches!(Element::parse("T0", 3), Err(ElementError::IndexOutOfRange { .. })));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(Element::parse("T1 +", 2), Err(ElementError::Syntax { .. })));
        assert!(matches!(Element::parse("(u-1", 2), Err(ElementError::Syntax { position: 0, .. })));
        assert!(matches!(Element::parse("E1^-1", 2), Err(ElementError::Syntax { .. })));
        assert!(matches!(Element::parse("", 2), Err(ElementError::Syntax { .. })));
        assert!(matches!(Element::parse("(u+*)*T1", 2), Err(ElementError::Syntax { position: 3, .. })));
    }

    #[test]
    fn free_mul_concatenates() {
        let t1 = Element::parse("T1", 2).unwrap();
        let e1 = Element::parse("E1", 2).unwrap();
        assert_eq!(t1.free_mul(&e1).unwrap(), Element::parse("T1 E1", 2).unwrap());
        assert_eq!(Element::one(2).free_mul(&t1).unwrap(), t1);
        let a = Element::parse("u*T1", 2).unwrap();
        let b = Element::parse("(1/u)*T1", 2).unwrap();
        assert_eq!(a.free_mul(&b).unwrap(), Element::parse("T1 T1", 2).unwrap());
        assert!(matches!(t1.free_mul(&Element::one(3)), Err(ElementError::AmbientMismatch { .. })));
    }

    #[test]
    fn addition_drops_zero_terms() {
        let t1 = Element::parse("T1", 2).unwrap();
        assert!(t1.add(&t1.neg()).unwrap().is_zero());
        assert!(t1.scale(&RationalFunction::zero()).is_zero());
        let s = Element::parse("E1", 3).unwrap().add(&Element::parse("E2", 3).unwrap()).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn printing_order_and_format() {
        let e = Element::parse("E1 T1 + 2 - T1^-1 + (1/2)*E2 + T1 + u*E1", 3).unwrap();
        assert_eq!(e.to_string(), "2 + T1 - T1^-1 + u*E1 + (1/2)*E2 + E1 T1");
        assert_eq!(Element::zero(2).to_string(), "0");
        assert_eq!(Element::parse("-T1", 2).unwrap().to_string(), "-T1");
        assert_eq!(Element::parse("(1-u)/u", 2).unwrap_err(), ElementError::Syntax { position: 5, message: "expected '+' or '-'".into() });
    }
}
