//! Noncommutative polynomial reduction and completion over `Q(u)`.
//!
//! Monomials are words over a finite alphabet of letter ranks, compared
//! degree-lexicographically. A [`GroebnerBasis`] is a set of rules
//! `lead -> tail` with `tail < lead`; reduction always terminates because the
//! order is a well-order compatible with concatenation.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use crate::scalar::RationalFunction as RF;

use super::RewriteError;

/// A word of letter ranks under the degree-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub Vec<u8>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn splice(left: &[u8], mid: &[u8], right: &[u8]) -> Mono {
        let mut v = Vec::with_capacity(left.len() + mid.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(mid);
        v.extend_from_slice(right);
        Mono(v)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Poly = BTreeMap<Mono, RF>;

pub fn add_term(p: &mut Poly, m: Mono, c: RF) {
    if c.is_zero() {
        return;
    }
    match p.entry(m) {
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

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(&mut out, Mono::splice(&ma.0, &mb.0, &[]), ca * cb);
        }
    }
    out
}

/// Counts rule applications; exhausting it is an error, never a silent stop.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn tick(&mut self) -> Result<(), RewriteError> {
        self.used += 1;
        if self.used > self.limit {
            Err(RewriteError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone)]
pub struct Rule {
    pub lead: Mono,
    pub tail: Poly,
}

#[derive(Debug, Clone, Default)]
pub struct GroebnerBasis {
    rules: Vec<Option<Rule>>,
    lookup: HashMap<Vec<u8>, usize>,
    max_lead: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    degree: usize,
    left: usize,
    right: usize,
    overlap: usize,
}

impl GroebnerBasis {
    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.lookup.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lookup.is_empty()
    }

    /// Leftmost, then shortest, occurrence of a rule lead inside `m`.
    fn find_divisor(&self, m: &[u8]) -> Option<(usize, usize)> {
        if let Some(&id) = self.lookup.get(&[][..]) {
            return Some((0, id));
        }
        for start in 0..m.len() {
            let top = (start + self.max_lead).min(m.len());
            for end in start + 1..=top {
                if let Some(&id) = self.lookup.get(&m[start..end]) {
                    return Some((start, id));
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, m: &Mono) -> bool {
        self.find_divisor(&m.0).is_some()
    }

    pub fn reduce(&self, p: Poly, budget: &mut Budget) -> Result<Poly, RewriteError> {
        let mut work = p;
        let mut out = Poly::new();
        while let Some((m, c)) = work.pop_last() {
            match self.find_divisor(&m.0) {
                Some((start, id)) => {
                    budget.tick()?;
                    let rule = self.rules[id].as_ref().expect("live rule");
                    let (left, right) = (&m.0[..start], &m.0[start + rule.lead.len()..]);
                    for (t, tc) in &rule.tail {
                        add_term(&mut work, Mono::splice(left, &t.0, right), &c * tc);
                    }
                }
                None => {
                    out.insert(m, c);
                }
            }
        }
        Ok(out)
    }

    /// Complete the given relations (each read as `p = 0`).
    pub fn complete(relations: Vec<Poly>, budget: &mut Budget) -> Result<GroebnerBasis, RewriteError> {
        let mut gb = GroebnerBasis::default();
        let mut pending: Vec<Poly> = relations;
        let mut pairs: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
        loop {
            let p = if let Some(p) = pending.pop() {
                p
            } else if let Some(Reverse(pair)) = pairs.pop() {
                match gb.s_poly(&pair) {
                    Some(p) => p,
                    None => continue,
                }
            } else {
                break;
            };
            let r = gb.reduce(p, budget)?;
            if r.is_empty() {
                continue;
            }
            let id = gb.insert(r, &mut pending);
            gb.push_pairs(id, &mut pairs);
        }
        gb.interreduce(budget)?;
        Ok(gb)
    }

    /// Add the monic rule for `p`; rules whose lead it divides are retired
    /// and queued for re-reduction.
    fn insert(&mut self, mut p: Poly, pending: &mut Vec<Poly>) -> usize {
        let (lead, lc) = p.pop_last().expect("nonzero");
        let scale = -lc.inv().expect("nonzero leading coefficient");
        let tail: Poly = p.into_iter().map(|(m, c)| (m, &c * &scale)).collect();
        for slot in self.rules.iter_mut() {
            let retire = slot.as_ref().is_some_and(|r| contains(&r.lead.0, &lead.0));
            if retire {
                let old = slot.take().unwrap();
                self.lookup.remove(&old.lead.0);
                let mut q = old.tail.into_iter().map(|(m, c)| (m, -c)).collect::<Poly>();
                q.insert(old.lead, RF::one());
                pending.push(q);
            }
        }
        let id = self.rules.len();
        self.max_lead = self.max_lead.max(lead.len());
        self.lookup.insert(lead.0.clone(), id);
        self.rules.push(Some(Rule { lead, tail }));
        id
    }

    fn push_pairs(&self, id: usize, pairs: &mut BinaryHeap<Reverse<Pair>>) {
        let new = &self.rules[id].as_ref().unwrap().lead.0;
        for (other, slot) in self.rules.iter().enumerate() {
            let Some(rule) = slot else { continue };
            let old = &rule.lead.0;
            for (l, r, a, b) in [(id, other, new, old), (other, id, old, new)] {
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] == b[..k] {
                        pairs.push(Reverse(Pair { degree: a.len() + b.len() - k, left: l, right: r, overlap: k }));
                    }
                }
                if l == r {
                    break;
                }
            }
        }
    }

    /// `tail_a * B' - A' * tail_b` for the overlap `A' O B'` of leads `A'O`, `OB'`.
    fn s_poly(&self, pair: &Pair) -> Option<Poly> {
        let a = self.rules[pair.left].as_ref()?;
        let b = self.rules[pair.right].as_ref()?;
        let a_pre = &a.lead.0[..a.lead.len() - pair.overlap];
        let b_suf = &b.lead.0[pair.overlap..];
        let mut out = Poly::new();
        for (m, c) in &a.tail {
            add_term(&mut out, Mono::splice(&m.0, b_suf, &[]), c.clone());
        }
        for (m, c) in &b.tail {
            add_term(&mut out, Mono::splice(a_pre, &m.0, &[]), -c);
        }
        Some(out)
    }

    fn interreduce(&mut self, budget: &mut Budget) -> Result<(), RewriteError> {
        let mut rules: Vec<Rule> = self.rules.drain(..).flatten().collect();
        rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        self.lookup = rules.iter().enumerate().map(|(k, r)| (r.lead.0.clone(), k)).collect();
        self.max_lead = rules.iter().map(|r| r.lead.len()).max().unwrap_or(0);
        self.rules = rules.into_iter().map(Some).collect();
        for k in 0..self.rules.len() {
            let tail = std::mem::take(&mut self.rules[k].as_mut().unwrap().tail);
            let reduced = self.reduce(tail, budget)?;
            self.rules[k].as_mut().unwrap().tail = reduced;
        }
        Ok(())
    }

    /// All irreducible words, shortest first. Requires a finite quotient.
    pub fn standard_monomials(&self, alphabet: u8, limit: usize) -> Option<Vec<Mono>> {
        if self.lookup.contains_key(&[][..]) {
            return Some(Vec::new());
        }
        let mut out = vec![Mono::one()];
        let mut frontier = vec![Mono::one()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                for a in 0..alphabet {
                    let mut w = m.0.clone();
                    w.push(a);
                    // only suffixes can contain a new lead
                    let fresh = (0..w.len()).all(|s| !self.lookup.contains_key(&w[s..]));
                    if fresh {
                        next.push(Mono(w));
                    }
                }
            }
            out.extend(next.iter().cloned());
            if out.len() > limit {
                return None;
            }
            frontier = next;
        }
        out.sort();
        Some(out)
    }
}

fn contains(hay: &[u8], needle: &[u8]) -> bool {
    needle.is_empty() || (needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(v: &[u8]) -> Mono {
        Mono(v.to_vec())
    }

    fn poly(terms: &[(&[u8], i64)]) -> Poly {
        let mut p = Poly::new();
        for (m, c) in terms {
            add_term(&mut p, mono(m), RF::from_int(*c));
        }
        p
    }

    #[test]
    fn deglex_order() {
        assert!(mono(&[1]) < mono(&[0, 0]));
        assert!(mono(&[0, 1]) < mono(&[1, 0]));
        assert!(Mono::one() < mono(&[0]));
    }

    #[test]
    fn commutative_polynomials_in_two_letters() {
        // ba = ab, a^2 = 1, b^2 = 1: group algebra of the Klein four-group
        let rels = vec![poly(&[(&[1, 0], 1), (&[0, 1], -1)]), poly(&[(&[0, 0], 1), (&[], -1)]), poly(&[(&[1, 1], 1), (&[], -1)])];
        let gb = GroebnerBasis::complete(rels, &mut Budget::new(10_000)).unwrap();
        let std = gb.standard_monomials(2, 100).unwrap();
        assert_eq!(std, vec![mono(&[]), mono(&[0]), mono(&[1]), mono(&[0, 1])]);
        let r = gb.reduce(poly(&[(&[1, 0, 1, 0, 1], 1)]), &mut Budget::new(100)).unwrap();
        assert_eq!(r, poly(&[(&[1], 1)]));
    }

    #[test]
    fn completion_finds_hidden_collapse() {
        // ab = 1, ba = 0 forces 1 = a(ba)b = 0
        let rels = vec![poly(&[(&[0, 1], 1), (&[], -1)]), poly(&[(&[1, 0], 1)])];
        let gb = GroebnerBasis::complete(rels, &mut Budget::new(10_000)).unwrap();
        assert!(gb.reduce(poly(&[(&[], 1)]), &mut Budget::new(10)).unwrap().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let rels = vec![poly(&[(&[0, 0], 1), (&[], -1)])];
        let gb = GroebnerBasis::complete(rels, &mut Budget::new(100)).unwrap();
        let long = poly(&[(&[0; 40], 1)]);
        assert!(matches!(gb.reduce(long, &mut Budget::new(3)), Err(RewriteError::BudgetExceeded { .. })));
    }
}
