//! Irreducible rational representations of `S_n` in Young's seminormal form.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{commutant_dim, QMatrix};
use crate::scalar::rat;
use crate::symmetric::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    Invalid(Vec<usize>),
}

/// A partition; the empty partition `φ` has size zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, largest first in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn conjugate_len(&self, col: usize) -> usize {
        self.0.iter().filter(|&&p| p > col).count()
    }

    /// Hook-length formula.
    pub fn hook_dim(&self) -> usize {
        let n = self.size();
        let mut hooks: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                hooks *= (len - c + self.conjugate_len(c) - r - 1) as u128;
            }
        }
        ((1..=n as u128).product::<u128>() / hooks) as usize
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "φ");
        }
        write!(f, "[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A standard tableau stored as the (row, column) cell of each entry `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    cells: Vec<(usize, usize)>,
}

impl Tableau {
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.cells[k - 1];
        c as i64 - r as i64
    }

    /// Entries read row by row, left to right.
    pub fn reading_word(&self, shape: &Partition) -> Vec<usize> {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        for (k, &(r, c)) in self.cells.iter().enumerate() {
            rows[r][c] = k + 1;
        }
        rows.concat()
    }

    fn swapped(&self, k: usize) -> Tableau {
        let mut cells = self.cells.clone();
        cells.swap(k - 1, k);
        Tableau { cells }
    }
}

/// Standard tableaux of the given shape, sorted by reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &[usize], fill: &mut Vec<usize>, cells: &mut Vec<(usize, usize)>, n: usize, out: &mut Vec<Tableau>) {
        if cells.len() == n {
            out.push(Tableau { cells: cells.clone() });
            return;
        }
        for r in 0..shape.len() {
            let c = fill[r];
            if c < shape[r] && (r == 0 || fill[r - 1] > c) {
                fill[r] += 1;
                cells.push((r, c));
                go(shape, fill, cells, n, out);
                cells.pop();
                fill[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(shape.parts(), &mut vec![0; shape.parts().len()], &mut Vec::new(), shape.size(), &mut out);
    out.sort_by_key(|t| t.reading_word(shape));
    out
}

/// Both counts agree; the tableau count is returned.
pub fn rep_dim(shape: &Partition) -> usize {
    let count = standard_tableaux(shape).len();
    debug_assert_eq!(count, shape.hook_dim());
    count
}

/// A representation of `S_n` given by the matrices of `s_1, …, s_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRep {
    pub n: usize,
    pub dim: usize,
    pub gens: Vec<QMatrix>,
}

impl MatrixRep {
    pub fn trivial(n: usize) -> Self {
        MatrixRep { n, dim: 1, gens: vec![QMatrix::identity(1); n.saturating_sub(1)] }
    }

    /// Matrix of `p`, multiplying generator matrices along a reduced word.
    pub fn eval(&self, p: &Permutation) -> QMatrix {
        assert_eq!(p.n(), self.n, "permutation degree");
        p.reduced_word().iter().fold(QMatrix::identity(self.dim), |acc, &i| acc.mul(&self.gens[i - 1]))
    }

    pub fn coxeter_relations_hold(&self) -> bool {
        let id = QMatrix::identity(self.dim);
        let g = &self.gens;
        for i in 0..g.len() {
            if g[i].mul(&g[i]) != id {
                return false;
            }
            for j in i + 1..g.len() {
                let ok = if j == i + 1 {
                    g[i].mul(&g[j]).mul(&g[i]) == g[j].mul(&g[i]).mul(&g[j])
                } else {
                    g[i].mul(&g[j]) == g[j].mul(&g[i])
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn direct_sum(&self, other: &MatrixRep) -> MatrixRep {
        assert_eq!(self.n, other.n);
        MatrixRep {
            n: self.n,
            dim: self.dim + other.dim,
            gens: self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    pub fn commutant_dim(&self) -> usize {
        if self.gens.is_empty() {
            return self.dim * self.dim;
        }
        commutant_dim(&self.gens)
    }
}

/// Seminormal form: with `ρ = c(k+1) - c(k)` the axial distance in `T`,
/// `s_k v_T = (1/ρ) v_T + (1 + 1/ρ) v_{s_k T}`, the second term dropped when
/// `s_k T` is not standard.
pub fn specht_rep(shape: &Partition) -> MatrixRep {
    let n = shape.size();
    let tabs = standard_tableaux(shape);
    let dim = tabs.len();
    let position = |t: &Tableau| tabs.iter().position(|x| x == t);
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        let mut m = QMatrix::zeros(dim, dim);
        for (col, t) in tabs.iter().enumerate() {
            let rho = t.content(k + 1) - t.content(k);
            let inv = rat(1, rho);
            m[(col, col)] = inv.clone();
            if let Some(row) = position(&t.swapped(k)) {
                m[(row, col)] = BigRational::one() + inv;
            }
        }
        gens.push(m);
    }
    MatrixRep { n, dim, gens }
}

/// `α ⊗ εβ`, a representation of `W_a × W_b`: permutations act through
/// `α ⊗ β`, and a sign bit at position `r` acts by `-1` exactly when
/// `r > a` and `sign_on_beta` is set.
#[derive(Debug, Clone)]
pub struct YoungRep {
    pub a: usize,
    pub b: usize,
    pub alpha: MatrixRep,
    pub beta: MatrixRep,
    pub sign_on_beta: bool,
}

impl YoungRep {
    pub fn dim(&self) -> usize {
        self.alpha.dim * self.beta.dim
    }

    /// Matrix of a block-preserving permutation.
    pub fn eval_perm(&self, p: &Permutation) -> QMatrix {
        let a = self.a;
        let first: Vec<usize> = (1..=a).map(|k| p.apply(k)).collect();
        let second: Vec<usize> = (a + 1..=a + self.b).map(|k| p.apply(k) - a).collect();
        let pa = Permutation::new(first).expect("block-preserving permutation");
        let pb = Permutation::new(second).expect("block-preserving permutation");
        self.alpha.eval(&pa).kron(&self.beta.eval(&pb))
    }

    /// Scalar by which a diagonal sign vector acts.
    pub fn sign_value(&self, signs: &[bool]) -> BigRational {
        let flips = signs.iter().enumerate().filter(|(k, &s)| s && *k >= self.a).count();
        if self.sign_on_beta && flips % 2 == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        }
    }
}

pub fn tensor_with_sign_character(alpha: &MatrixRep, beta: &MatrixRep, sign_on_beta: bool) -> YoungRep {
    YoungRep { a: alpha.n, b: beta.n, alpha: alpha.clone(), beta: beta.clone(), sign_on_beta }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(rep_dim(&part(&[2, 1])), 2);
        assert_eq!(rep_dim(&part(&[3])), 1);
        assert_eq!(rep_dim(&part(&[2, 2])), 2);
        assert_eq!(part(&[3, 2]).hook_dim(), 5);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn squares_of_dimensions_sum_to_order() {
        for n in 1..=5 {
            let s: usize = Partition::all(n).iter().map(|p| rep_dim(p).pow(2)).sum();
            assert_eq!(s, (1..=n).product::<usize>());
            for p in Partition::all(n) {
                assert_eq!(rep_dim(&p), p.hook_dim());
            }
        }
    }

    #[test]
    fn trivial_and_sign() {
        let t = specht_rep(&part(&[3]));
        assert!(t.gens.iter().all(|m| m == &QMatrix::identity(1)));
        let s = specht_rep(&part(&[1, 1, 1]));
        assert!(s.gens.iter().all(|m| m[(0, 0)] == rat(-1, 1)));
    }

    #[test]
    fn coxeter_relations_and_irreducibility() {
        for n in 1..=5 {
            for p in Partition::all(n) {
                let r = specht_rep(&p);
                assert!(r.coxeter_relations_hold(), "{p}");
                if n <= 4 {
                    assert_eq!(r.commutant_dim(), 1, "{p}");
                }
            }
        }
        let sum = specht_rep(&part(&[2])).direct_sum(&specht_rep(&part(&[1, 1])));
        assert_eq!(sum.commutant_dim(), 2);
    }

    #[test]
    fn sign_character_on_beta_slot() {
        let r = tensor_with_sign_character(&specht_rep(&part(&[2])), &specht_rep(&part(&[1])), true);
        assert_eq!(r.dim(), 1);
        assert_eq!(r.sign_value(&[true, false, false]), rat(1, 1));
        assert_eq!(r.sign_value(&[false, false, true]), rat(-1, 1));
    }
}
