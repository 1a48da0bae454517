//! Symmetric-group combinatorics: Coxeter generators, the elements `w_{a,b}`,
//! distinguished right coset representatives of Young subgroups and the
//! Deodhar case split.
//!
//! Convention: `p.mul(q)` applies `p` first, then `q`, so
//! `(p·q)(k) = q(p(k))`. Every identity in this module is a word identity or
//! is checked under this convention in the tests.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("not a permutation of 1..={n}: {images:?}")]
    NotAPermutation { images: Vec<usize>, n: usize },
    #[error("Coxeter generator index {index} out of range for S_{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{x} with s_{s} fits neither Deodhar case")]
    CaseViolation { x: Permutation, s: usize },
    #[error("{x} is not a distinguished representative")]
    NotARepresentative { x: Permutation },
}

/// A permutation in one-line notation: `images[k]` is the image of `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, SymError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(SymError::NotAPermutation { images, n });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// `self` first, then `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutations of different degrees");
        Permutation { images: self.images.iter().map(|&k| other.apply(k)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    pub fn pow(&self, e: usize) -> Permutation {
        (0..e).fold(Permutation::identity(self.n()), |acc, _| acc.mul(self))
    }

    /// The product `s_{i_1} s_{i_2} ⋯` of Coxeter generators.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Permutation, SymError> {
        word.iter().try_fold(Permutation::identity(n), |acc, &i| Ok(acc.mul(&coxeter_gen(i, n)?)))
    }

    /// A reduced word `[i_1, …]` with `self = s_{i_1} s_{i_2} ⋯`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Peel a left descent until the identity is reached.
        let mut p = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..p.n()).find(|&i| p.apply(i) > p.apply(i + 1)) {
            word.push(i);
            p = p.swap_positions(i);
        }
        word
    }

    // Swap the values at positions i, i+1; the result q satisfies self = s_i · q.
    fn swap_positions(&self, i: usize) -> Permutation {
        let mut v = self.images.clone();
        v.swap(i - 1, i);
        Permutation { images: v }
    }

    /// All `n!` permutations, lexicographically.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

/// `s_i = (i, i+1)` in `S_n`.
pub fn coxeter_gen(i: usize, n: usize) -> Result<Permutation, SymError> {
    if i == 0 || i >= n {
        return Err(SymError::IndexOutOfRange { index: i, n });
    }
    let mut v: Vec<usize> = (1..=n).collect();
    v.swap(i - 1, i);
    Ok(Permutation { images: v })
}

/// `s_{i,i} = 1`, `s_{i,j} = s_i s_{i+1,j}` for `i < j`, `s_{i,j} = s_{i,j+1} s_j` for `i > j`.
pub fn s_ij(i: usize, j: usize, n: usize) -> Permutation {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => Permutation::identity(n),
        Less => coxeter_gen(i, n).expect("index in range").mul(&s_ij(i + 1, j, n)),
        Greater => s_ij(i, j + 1, n).mul(&coxeter_gen(j, n).expect("index in range")),
    }
}

/// `w_{a,b} = (s_{a+b,1})^b`, or the identity when `a` or `b` is zero.
pub fn w_ab(a: usize, b: usize) -> Permutation {
    let n = a + b;
    if a == 0 || b == 0 {
        return Permutation::identity(n);
    }
    s_ij(n, 1, n).pow(b)
}

/// The Coxeter generators of the Young subgroup `S_a × S_b`: all `s_k`, `k ≠ a`.
pub fn young_generators(a: usize, b: usize) -> Vec<usize> {
    (1..a + b).filter(|&k| k != a).collect()
}

/// Whether `p` lies in `S_a × S_b`, i.e. preserves `{1..a}`.
pub fn in_young(p: &Permutation, a: usize) -> bool {
    (1..=a).all(|k| p.apply(k) <= a)
}

/// Since `(h·x)(k) = x(h(k))`, the right coset `S_(a,b) x` is determined by
/// the image set `x({1..a})`.
fn coset_key(x: &Permutation, a: usize) -> Vec<usize> {
    let mut k: Vec<usize> = (1..=a).map(|i| x.apply(i)).collect();
    k.sort_unstable();
    k
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetSystem {
    pub a: usize,
    pub b: usize,
    /// Distinguished right coset representatives, in breadth-first order.
    pub reps: Vec<Permutation>,
    pub w: Permutation,
    #[serde(skip)]
    index: HashMap<Permutation, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeodharCase {
    /// `x s` is again a representative.
    InX(Permutation),
    /// `x s = s_k x` with `s_k` a generator of the Young subgroup.
    Reflected(usize),
}

impl CosetSystem {
    pub fn n(&self) -> usize {
        self.a + self.b
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn position(&self, x: &Permutation) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.index.contains_key(x)
    }

    /// Which Deodhar case `x s_i` falls into.
    pub fn deodhar_case(&self, x: &Permutation, i: usize) -> Result<DeodharCase, SymError> {
        if !self.contains(x) {
            return Err(SymError::NotARepresentative { x: x.clone() });
        }
        let s = coxeter_gen(i, self.n())?;
        let xs = x.mul(&s);
        let in_x = self.contains(&xs);
        let conj = xs.mul(&x.inverse());
        let reflected = young_generators(self.a, self.b).into_iter().find(|&k| coxeter_gen(k, self.n()).unwrap() == conj);
        match (in_x, reflected) {
            (true, None) => Ok(DeodharCase::InX(xs)),
            (false, Some(k)) => Ok(DeodharCase::Reflected(k)),
            _ => Err(SymError::CaseViolation { x: x.clone(), s: i }),
        }
    }

    /// Write `g = h · x` with `x` a representative and `h` in the Young subgroup.
    pub fn factor(&self, g: &Permutation) -> (Permutation, Permutation) {
        let key = coset_key(g, self.a);
        let x = self.reps.iter().find(|x| coset_key(x, self.a) == key).expect("every coset has a representative").clone();
        (g.mul(&x.inverse()), x)
    }
}

/// Distinguished right coset representatives of `S_a × S_b` in `S_{a+b}`.
///
/// Breadth-first search from the identity along right multiplication by
/// Coxeter generators reaches every element at its length; the first element
/// met in each coset is the minimal one.
pub fn coset_reps(a: usize, b: usize) -> CosetSystem {
    let n = a + b;
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut cosets: HashSet<Vec<usize>> = HashSet::new();
    let mut reps = Vec::new();
    let mut frontier = vec![Permutation::identity(n)];
    seen.insert(Permutation::identity(n));
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            if cosets.insert(coset_key(&p, a)) {
                reps.push(p.clone());
            }
            for i in 1..n {
                let q = p.mul(&coxeter_gen(i, n).unwrap());
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    let index = reps.iter().enumerate().map(|(k, x)| (x.clone(), k)).collect();
    CosetSystem { a, b, reps, w: w_ab(a, b), index }
}

/// For `n = 2m`: the representatives `u` with `u` smaller (one-line, lexicographic)
/// than `w_{m,m} u`. Together with `w Y` they partition `X_(m,m)`.
pub fn split_y(m: usize) -> Vec<Permutation> {
    let sys = coset_reps(m, m);
    sys.reps.iter().filter(|u| **u < sys.w.mul(u)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(coxeter_gen(1, 3).unwrap(), p(&[2, 1, 3]));
        assert_eq!(coxeter_gen(2, 3).unwrap(), p(&[1, 3, 2]));
        assert!(coxeter_gen(3, 3).is_err());
        let s = coxeter_gen(2, 4).unwrap();
        assert!(s.mul(&s).is_identity());
    }

    #[test]
    fn w_small_cases() {
        assert_eq!(w_ab(1, 1), p(&[2, 1]));
        assert!(w_ab(3, 0).is_identity());
        assert!(w_ab(2, 1).mul(&w_ab(1, 2)).is_identity());
    }

    #[test]
    fn reduced_words_multiply_back() {
        for q in Permutation::all(4) {
            let w = q.reduced_word();
            assert_eq!(w.len(), q.length());
            assert_eq!(Permutation::from_word(4, &w).unwrap(), q);
        }
    }

    #[test]
    fn coset_examples() {
        let c = coset_reps(1, 1);
        assert_eq!(c.reps, vec![p(&[1, 2]), p(&[2, 1])]);
        assert_eq!(coset_reps(2, 1).len(), 3);
        assert_eq!(coset_reps(2, 2).len(), 6);
        assert_eq!(split_y(1), vec![p(&[1, 2])]);
        assert_eq!(split_y(2).len(), 3);
    }

    #[test]
    fn deodhar_examples() {
        let c = coset_reps(1, 1);
        assert_eq!(c.deodhar_case(&Permutation::identity(2), 1).unwrap(), DeodharCase::InX(p(&[2, 1])));
        let c = coset_reps(2, 1);
        assert_eq!(c.deodhar_case(&Permutation::identity(3), 1).unwrap(), DeodharCase::Reflected(1));
    }

    #[test]
    fn factor_recovers_element() {
        let c = coset_reps(2, 2);
        for g in Permutation::all(4) {
            let (h, x) = c.factor(&g);
            assert!(in_young(&h, 2));
            assert!(c.contains(&x));
            assert_eq!(h.mul(&x), g);
        }
    }
}
