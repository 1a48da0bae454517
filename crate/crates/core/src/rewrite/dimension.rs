//! Dimensions of `E_n` certified by exact ranks at `u = 1`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::hyperoct::image_matrix;
use crate::linalg::{SparseEchelon, SparseVec};

use super::{algebra, span_basis, RewriteError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// The spanning list is a basis.
    ExactBasis,
    /// Only the rank of an image is known.
    LowerBound,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::ExactBasis => "exact",
            Certificate::LowerBound => "lower-bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub n: usize,
    pub value: usize,
    pub certificate: Certificate,
    /// Length of the spanning list the rank was taken over.
    pub span_len: usize,
}

/// Rank of the images of the spanning words under `φ₀ ⊕ ψ` (`n ≤ 3`) or
/// `φ₀ ⊕ φ₁ ⊕ ψ` (`n = 4`).
///
/// For `n ≤ 3` the rank must equal the length of the list, which together
/// with closure of the reduction onto that list makes it a basis.
pub fn dimension(n: usize) -> Result<Dimension, RewriteError> {
    if !(2..=4).contains(&n) {
        return Err(RewriteError::Unsupported { n, reason: "dimensions are certified for 2 ≤ n ≤ 4".into() });
    }
    let span = span_basis(n)?;
    let im = image_matrix(n, &span.words, n == 4).map_err(|e| RewriteError::Invariant(e.to_string()))?;
    let mut ech: SparseEchelon<BigRational> = SparseEchelon::new();
    for i in 0..im.matrix.rows() {
        let row: SparseVec<BigRational> =
            im.matrix.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect();
        ech.insert(row);
    }
    let rank = ech.rank();
    if n == 4 {
        return Ok(Dimension { n, value: rank, certificate: Certificate::LowerBound, span_len: span.len() });
    }
    if rank != span.len() {
        return Err(RewriteError::Invariant(format!("image rank {rank} is below the span length {}", span.len())));
    }
    let alg = algebra(n)?;
    if !alg.span_is_independent() || alg.generic_dimension() != span.len() {
        return Err(RewriteError::Invariant("reduction does not close onto the spanning list".into()));
    }
    Ok(Dimension { n, value: rank, certificate: Certificate::ExactBasis, span_len: span.len() })
}

/// Dimension over `Q(u)`, counted by the irreducible words of the completed system.
pub fn generic_dimension(n: usize) -> Result<usize, RewriteError> {
    Ok(algebra(n)?.generic_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions_are_exact() {
        let d2 = dimension(2).unwrap();
        assert_eq!((d2.value, d2.certificate), (4, Certificate::ExactBasis));
        let d3 = dimension(3).unwrap();
        assert_eq!((d3.value, d3.certificate), (30, Certificate::ExactBasis));
        assert!(matches!(dimension(5), Err(RewriteError::Unsupported { .. })));
    }
}
