use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::Serialize;

use crate::scalar::RationalFunction as RF;
use crate::word::{Element, Word};

use super::basis::{span_basis, SpanBasis};
use super::completion::{add_term, Budget, GroebnerBasis, Mono, Poly};
use super::relations::defining_relations;
use super::{Alphabet, RewriteError};

pub const DEFAULT_BUDGET: u64 = 1_000_000;
const COMPLETION_BUDGET: u64 = 50_000_000;

/// Rule applications allowed per reduction; `TIEALG_BUDGET` overrides.
pub fn budget_limit() -> u64 {
    std::env::var("TIEALG_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

/// Rows of an echelon form keyed by their largest monomial, each remembering
/// which combination of target words produced it.
#[derive(Default)]
struct Echelon {
    rows: HashMap<Mono, (Poly, Vec<(usize, RF)>)>,
}

impl Echelon {
    /// Reduce `v`, returning the remainder and the combination subtracted.
    fn reduce(&self, mut v: Poly) -> (Poly, HashMap<usize, RF>) {
        let mut comb: HashMap<usize, RF> = HashMap::new();
        let mut rest = Poly::new();
        while let Some((m, c)) = v.pop_last() {
            match self.rows.get(&m) {
                Some((row, rc)) => {
                    // the row is monic with leading term m
                    for (rm, rcoef) in row.iter().rev().skip(1) {
                        add_term(&mut v, rm.clone(), -(&c * rcoef));
                    }
                    for (k, a) in rc {
                        let e = comb.entry(*k).or_insert_with(RF::zero);
                        *e = &*e + &(&c * a);
                    }
                }
                None => {
                    rest.insert(m, c);
                }
            }
        }
        comb.retain(|_, c| !c.is_zero());
        (rest, comb)
    }

    /// Insert `v` (the image of target word `k`); false if dependent.
    fn insert(&mut self, v: Poly, k: usize) -> bool {
        let (rest, comb) = self.reduce(v);
        let Some((lead, lc)) = rest.last_key_value() else { return false };
        let lead = lead.clone();
        let inv = lc.inv().expect("nonzero");
        let row: Poly = rest.into_iter().map(|(m, c)| (m, &c * &inv)).collect();
        let mut rc: Vec<(usize, RF)> = comb.into_iter().map(|(j, c)| (j, -(&c * &inv))).collect();
        rc.push((k, inv));
        self.rows.insert(lead, (row, rc));
        true
    }
}

/// `E_n(u)` with a completed rewriting system and a tower-form target basis.
pub struct TieAlgebra {
    n: usize,
    alphabet: Alphabet,
    gb: GroebnerBasis,
    standard: Vec<Mono>,
    span: SpanBasis,
    basis: Vec<Word>,
    basis_index: HashMap<Word, usize>,
    decode: HashMap<Mono, Vec<(usize, RF)>>,
    span_independent: bool,
    memo: RwLock<HashMap<Word, Poly>>,
}

impl std::fmt::Debug for TieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TieAlgebra")
            .field("n", &self.n)
            .field("rules", &self.gb.len())
            .field("dimension", &self.standard.len())
            .finish()
    }
}

impl TieAlgebra {
    pub fn build(n: usize) -> Result<TieAlgebra, RewriteError> {
        if !(1..=4).contains(&n) {
            return Err(RewriteError::Unsupported { n, reason: "reduction is provided for n ≤ 4".into() });
        }
        let alphabet = Alphabet::ties_first(n);
        let rels = defining_relations(n).iter().map(|r| alphabet.poly(&r.difference())).collect();
        let gb = GroebnerBasis::complete(rels, &mut Budget::new(COMPLETION_BUDGET))?;
        let standard = gb.standard_monomials(alphabet.size(), 100_000).ok_or_else(|| RewriteError::Unsupported {
            n,
            reason: "quotient is not finite dimensional".into(),
        })?;
        let span = span_basis(n)?;

        // Keep, in list order, each spanning word independent of its predecessors.
        let mut echelon = Echelon::default();
        let mut basis = Vec::new();
        let mut budget = Budget::new(COMPLETION_BUDGET);
        for w in &span.words {
            let v = gb.reduce(alphabet.poly_of_word(w), &mut budget)?;
            if echelon.insert(v, basis.len()) {
                basis.push(w.clone());
            }
        }
        let span_independent = basis.len() == span.len();
        if basis.len() != standard.len() {
            return Err(RewriteError::Invariant(format!(
                "spanning list has rank {} but the algebra has dimension {}",
                basis.len(),
                standard.len()
            )));
        }
        let mut decode = HashMap::new();
        for m in &standard {
            let mut p = Poly::new();
            p.insert(m.clone(), RF::one());
            let (rest, comb) = echelon.reduce(p);
            debug_assert!(rest.is_empty());
            let mut c: Vec<(usize, RF)> = comb.into_iter().collect();
            c.sort_by_key(|(k, _)| *k);
            decode.insert(m.clone(), c);
        }
        let basis_index = basis.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        Ok(TieAlgebra {
            n,
            alphabet,
            gb,
            standard,
            span,
            basis,
            basis_index,
            decode,
            span_independent,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension over `Q(u)`, read off the completed system.
    pub fn generic_dimension(&self) -> usize {
        self.standard.len()
    }

    pub fn span(&self) -> &SpanBasis {
        &self.span
    }

    /// The words normal forms are written in.
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn basis_position(&self, w: &Word) -> Option<usize> {
        self.basis_index.get(w).copied()
    }

    /// Whether the spanning list is linearly independent over `Q(u)`.
    pub fn span_is_independent(&self) -> bool {
        self.span_independent
    }

    pub fn rule_count(&self) -> usize {
        self.gb.len()
    }

    /// Irreducible words of the completed system (shortlex-minimal representatives).
    pub fn standard_words(&self) -> Vec<Word> {
        self.standard.iter().map(|m| self.alphabet.word(m)).collect()
    }

    /// Completed rules rendered as elements `lead - tail`.
    pub fn rules(&self) -> Vec<(Word, Element)> {
        self.gb
            .rules()
            .map(|r| (self.alphabet.word(&r.lead), self.alphabet.element(self.n, &r.tail)))
            .collect()
    }

    fn reduce_word(&self, w: &Word, budget: &mut Budget) -> Result<Poly, RewriteError> {
        if let Some(p) = self.memo.read().expect("memo lock").get(w) {
            return Ok(p.clone());
        }
        let p = self.gb.reduce(self.alphabet.poly_of_word(w), budget)?;
        self.memo.write().expect("memo lock").insert(w.clone(), p.clone());
        Ok(p)
    }

    fn check_ambient(&self, a: &Element) -> Result<(), RewriteError> {
        if a.n() != self.n {
            return Err(crate::word::ElementError::AmbientMismatch { left: self.n, right: a.n() }.into());
        }
        Ok(())
    }

    /// Coordinates of `a` on the standard monomials.
    fn standard_poly(&self, a: &Element, budget: &mut Budget) -> Result<Poly, RewriteError> {
        self.check_ambient(a)?;
        let mut acc = Poly::new();
        for (w, c) in a.terms() {
            for (m, d) in self.reduce_word(w, budget)? {
                add_term(&mut acc, m, c * &d);
            }
        }
        Ok(acc)
    }

    /// Coordinates of `a` on [`TieAlgebra::basis`], sparse and sorted.
    pub fn coordinates(&self, a: &Element) -> Result<Vec<(usize, RF)>, RewriteError> {
        let mut budget = Budget::new(budget_limit());
        let p = self.standard_poly(a, &mut budget)?;
        let mut acc: HashMap<usize, RF> = HashMap::new();
        for (m, c) in &p {
            for (k, d) in &self.decode[m] {
                let e = acc.entry(*k).or_insert_with(RF::zero);
                *e = &*e + &(c * d);
            }
        }
        let mut out: Vec<(usize, RF)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by_key(|(k, _)| *k);
        Ok(out)
    }

    pub fn normal_form(&self, a: &Element) -> Result<Element, RewriteError> {
        let coords = self.coordinates(a)?;
        Ok(Element::from_terms(self.n, coords.into_iter().map(|(k, c)| (self.basis[k].clone(), c))))
    }

    pub fn mul_reduced(&self, a: &Element, b: &Element) -> Result<Element, RewriteError> {
        self.normal_form(&a.free_mul(b)?)
    }

    pub fn check_identity(&self, lhs: &Element, rhs: &Element) -> Result<bool, RewriteError> {
        let mut budget = Budget::new(budget_limit());
        Ok(self.standard_poly(&lhs.sub(rhs)?, &mut budget)?.is_empty())
    }

    pub fn structure_constants(&self) -> Result<StructureConstants, RewriteError> {
        let mut table = Vec::with_capacity(self.basis.len());
        for a in &self.basis {
            let mut row = Vec::with_capacity(self.basis.len());
            for b in &self.basis {
                row.push(self.normal_form(&Element::from_word(self.n, a.concat(b)))?);
            }
            table.push(row);
        }
        Ok(StructureConstants { n: self.n, basis: self.basis.clone(), table })
    }
}

/// Shared, lazily built algebras; building is done once per strand count.
pub fn algebra(n: usize) -> Result<Arc<TieAlgebra>, RewriteError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TieAlgebra>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().expect("algebra cache").get(&n) {
        return Ok(a.clone());
    }
    let built = Arc::new(TieAlgebra::build(n)?);
    Ok(cache.lock().expect("algebra cache").entry(n).or_insert(built).clone())
}

pub fn normal_form(a: &Element) -> Result<Element, RewriteError> {
    algebra(a.n())?.normal_form(a)
}

pub fn mul_reduced(a: &Element, b: &Element) -> Result<Element, RewriteError> {
    algebra(a.n())?.mul_reduced(a, b)
}

pub fn check_identity(lhs: &Element, rhs: &Element) -> Result<bool, RewriteError> {
    algebra(lhs.n())?.check_identity(lhs, rhs)
}

pub fn structure_constants(n: usize) -> Result<StructureConstants, RewriteError> {
    if !(2..=3).contains(&n) {
        return Err(RewriteError::Unsupported { n, reason: "structure constants are tabulated for n = 2, 3".into() });
    }
    algebra(n)?.structure_constants()
}

/// `table[i][j]` is the normal form of `basis[i] · basis[j]`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub n: usize,
    pub basis: Vec<Word>,
    pub table: Vec<Vec<Element>>,
}

#[derive(Serialize)]
struct JsonTerm {
    word: String,
    coeff: String,
}

#[derive(Serialize)]
struct JsonTable {
    n: usize,
    basis: Vec<String>,
    table: Vec<Vec<Vec<JsonTerm>>>,
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.table[i][j]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.terms().map(|(w, c)| JsonTerm { word: w.to_string(), coeff: c.to_string() }).collect())
                    .collect()
            })
            .collect();
        let t = JsonTable { n: self.n, basis: self.basis.iter().map(|w| w.to_string()).collect(), table };
        serde_json::to_value(t).expect("serializable")
    }
}
