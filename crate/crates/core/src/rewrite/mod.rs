//! Reduction in `E_n(u)`.

mod algebra;
pub mod basis;
pub mod completion;
pub mod dimension;
pub mod relations;

pub use algebra::{
    algebra, budget_limit, check_identity, mul_reduced, normal_form, structure_constants, StructureConstants, TieAlgebra,
    DEFAULT_BUDGET,
};
pub use basis::{span_basis, SpanBasis};
pub use dimension::{dimension, generic_dimension, Certificate, Dimension};

use std::collections::HashMap;

use thiserror::Error;

use crate::scalar::RationalFunction as RF;
use crate::word::{Element, ElementError, GenKind, Generator, Word};

use completion::{add_term, poly_mul, Mono, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("rewrite budget of {limit} rule applications exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("unsupported strand count {n}: {reason}")]
    Unsupported { n: usize, reason: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Element(#[from] ElementError),
}

/// Letters `T_i`, `E_i` with the ranks used by the monomial order.
#[derive(Debug, Clone)]
pub struct Alphabet {
    letters: Vec<Generator>,
    rank: HashMap<Generator, u8>,
}

impl Alphabet {
    /// All `E` letters below all `T` letters, each block by index.
    pub fn ties_first(n: usize) -> Self {
        let mut letters: Vec<Generator> = (1..n).map(Generator::e).collect();
        letters.extend((1..n).map(Generator::t));
        Self::from_letters(letters)
    }

    pub fn from_letters(letters: Vec<Generator>) -> Self {
        let rank = letters.iter().enumerate().map(|(k, g)| (*g, k as u8)).collect();
        Alphabet { letters, rank }
    }

    pub fn size(&self) -> u8 {
        self.letters.len() as u8
    }

    pub fn word(&self, m: &Mono) -> Word {
        Word(m.0.iter().map(|&r| self.letters[r as usize]).collect())
    }

    /// Expand a word into a polynomial, eliminating inverses by
    /// `T^-1 = T + (u-1) E T + (1-u) E`.
    pub fn poly_of_word(&self, w: &Word) -> Poly {
        let mut acc = Poly::new();
        acc.insert(Mono::one(), RF::one());
        for g in w.letters() {
            let factor = self.letter_poly(*g);
            acc = poly_mul(&acc, &factor);
        }
        acc
    }

    fn letter_poly(&self, g: Generator) -> Poly {
        let mut p = Poly::new();
        match g.kind {
            GenKind::T | GenKind::E => {
                p.insert(Mono(vec![self.rank[&g]]), RF::one());
            }
            GenKind::TInv => {
                let t = self.rank[&Generator::t(g.index)];
                let e = self.rank[&Generator::e(g.index)];
                let u = RF::u();
                add_term(&mut p, Mono(vec![t]), RF::one());
                add_term(&mut p, Mono(vec![e, t]), &u - &RF::one());
                add_term(&mut p, Mono(vec![e]), &RF::one() - &u);
            }
        }
        p
    }

    pub fn poly(&self, a: &Element) -> Poly {
        let mut out = Poly::new();
        for (w, c) in a.terms() {
            for (m, d) in self.poly_of_word(w) {
                add_term(&mut out, m, c * &d);
            }
        }
        out
    }

    pub fn element(&self, n: usize, p: &Poly) -> Element {
        Element::from_terms(n, p.iter().map(|(m, c)| (self.word(m), c.clone())))
    }
}
