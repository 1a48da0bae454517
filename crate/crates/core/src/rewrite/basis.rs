//! Tower-form spanning sets.

use std::collections::HashMap;

use serde::Serialize;

use crate::word::{Generator, Word};

use super::RewriteError;

#[derive(Debug, Clone, Serialize)]
pub struct SpanBasis {
    pub n: usize,
    pub words: Vec<Word>,
    #[serde(skip)]
    pub index: HashMap<Word, usize>,
    /// True when the list spans but is known to be linearly dependent.
    pub redundant: bool,
}

impl SpanBasis {
    fn new(n: usize, words: Vec<Word>, redundant: bool) -> Self {
        let index = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        SpanBasis { n, words, index, redundant }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }
}

fn word(gens: &[Generator]) -> Word {
    Word(gens.to_vec())
}

/// `U_0 = {1}`, `U_i = {1} ∪ T_i U_{i-1} ∪ E_i U_{i-1} ∪ T_i E_i U_{i-1}`.
pub fn tower_set(i: usize) -> Vec<Word> {
    if i == 0 {
        return vec![Word::identity()];
    }
    let prev = tower_set(i - 1);
    let mut out = vec![Word::identity()];
    let prefixes = [word(&[Generator::t(i)]), word(&[Generator::e(i)]), word(&[Generator::t(i), Generator::e(i)])];
    for p in &prefixes {
        out.extend(prev.iter().map(|w| p.concat(w)));
    }
    out
}

/// All products `u_1 u_2 ⋯ u_{n-1}` with `u_i ∈ U_i`, in generation order.
pub fn tower_products(n: usize) -> Vec<Word> {
    let mut acc = vec![Word::identity()];
    for i in 1..n {
        let level = tower_set(i);
        acc = acc.iter().flat_map(|a| level.iter().map(move |b| a.concat(b))).collect();
    }
    acc
}

/// The spanning list for `n` strands: exact bases for `n = 2, 3`, the
/// deduplicated tower products for `n = 4`.
pub fn span_basis(n: usize) -> Result<SpanBasis, RewriteError> {
    let t = Generator::t;
    let e = Generator::e;
    match n {
        1 => Ok(SpanBasis::new(1, vec![Word::identity()], false)),
        2 => Ok(SpanBasis::new(
            2,
            vec![Word::identity(), word(&[t(1)]), word(&[e(1)]), word(&[t(1), e(1)])],
            false,
        )),
        3 => {
            let ls = [vec![], vec![t(1)], vec![t(2)], vec![t(1), t(2)], vec![t(2), t(1)], vec![t(1), t(2), t(1)]];
            let tails = [vec![], vec![e(1)], vec![e(2)], vec![e(1), e(2)], vec![e(2), t(1)]];
            let mut words = Vec::with_capacity(30);
            for l in &ls {
                for tl in &tails {
                    words.push(word(&[l.as_slice(), tl.as_slice()].concat()));
                }
            }
            Ok(SpanBasis::new(3, words, false))
        }
        4 => {
            let mut seen = std::collections::HashSet::new();
            let words = tower_products(4).into_iter().filter(|w| seen.insert(w.clone())).collect();
            Ok(SpanBasis::new(4, words, true))
        }
        _ => Err(RewriteError::Unsupported { n, reason: "spanning sets are provided for n ≤ 4".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_set_sizes_follow_recursion() {
        let sizes: Vec<usize> = (0..4).map(|i| tower_set(i).len()).collect();
        assert_eq!(sizes, vec![1, 4, 13, 40]);
    }

    #[test]
    fn small_lists() {
        assert_eq!(span_basis(2).unwrap().len(), 4);
        let b3 = span_basis(3).unwrap();
        assert_eq!(b3.len(), 30);
        assert!(b3.position(&Word::parse("T2 T1 E2 T1", 3).unwrap()).is_some());
        assert_eq!(span_basis(4).unwrap().len(), 2080);
        assert!(matches!(span_basis(5), Err(RewriteError::Unsupported { .. })));
    }

    #[test]
    fn tower_products_of_three_strands_contain_the_exact_list() {
        let all: std::collections::HashSet<Word> = tower_products(3).into_iter().collect();
        assert_eq!(all.len(), 52);
        let missing: Vec<_> = span_basis(3).unwrap().words.into_iter().filter(|w| !all.contains(w)).collect();
        // T2 T1 E2 T1 and its left multiples by T1 are not tower products
        assert!(!missing.is_empty());
    }
}
