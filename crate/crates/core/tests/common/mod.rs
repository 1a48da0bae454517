#![allow(dead_code)]

//! Shared helpers: random inputs and a tensor-space model of `E_n(u)` at a
//! rational value of `u`, written without the library's reduction code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tiealg::word::{Element, GenKind, Generator, Word};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize, inverses: bool) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word(
        (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n);
                match rng.gen_range(0..if inverses { 3 } else { 2 }) {
                    0 => Generator::t(i),
                    1 => Generator::e(i),
                    _ => Generator::t_inv(i),
                }
            })
            .collect(),
    )
}

/// Coefficients without a pole at `u = 1`.
pub const COEFFS: &[&str] = &["1", "-1", "2", "1/2", "u", "-u", "1/u", "(1-u)/u", "u+1", "u^2", "(u-1)/(u+1)", "-3/2"];

pub fn random_element(rng: &mut impl Rng, n: usize, terms: usize, max_len: usize) -> Element {
    let mut text = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let c = COEFFS[rng.gen_range(0..COEFFS.len())];
        text.push(format!("({c})*{}", random_word(rng, n, max_len, true)));
    }
    Element::parse(&text.join(" + "), n).expect("generated text parses")
}

/// `(C^d ⊗ C^k)^{⊗n}`: a site carries a value in `0..d` and a colour in
/// `0..k`. `E_i` projects onto equal colours at sites `i, i+1`; `T_i` swaps
/// sites of different colours and acts by `g/u` on equal colours, where `g`
/// is the Jimbo matrix on the values.
pub struct TensorModel {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub u: BigRational,
}

impl TensorModel {
    pub fn new(n: usize, d: usize, k: usize, u: BigRational) -> Self {
        TensorModel { n, d, k, u }
    }

    pub fn dim(&self) -> usize {
        (self.d * self.k).pow(self.n as u32)
    }

    fn site(&self, idx: usize, p: usize) -> usize {
        idx / (self.d * self.k).pow((self.n - 1 - p) as u32) % (self.d * self.k)
    }

    fn with_sites(&self, idx: usize, p: usize, a: usize, b: usize) -> usize {
        let base = self.d * self.k;
        let w1 = base.pow((self.n - 1 - p) as u32);
        let w2 = base.pow((self.n - 2 - p) as u32);
        idx - self.site(idx, p) * w1 - self.site(idx, p + 1) * w2 + a * w1 + b * w2
    }

    /// Image of the pair of sites `(s1, s2)` under one letter.
    fn local(&self, kind: GenKind, s1: usize, s2: usize) -> Vec<((usize, usize), BigRational)> {
        let (v1, c1) = (s1 / self.k, s1 % self.k);
        let (v2, c2) = (s2 / self.k, s2 % self.k);
        let u = &self.u;
        let one = BigRational::one();
        match kind {
            GenKind::E => {
                if c1 == c2 {
                    vec![((s1, s2), one)]
                } else {
                    vec![]
                }
            }
            _ if c1 != c2 => vec![((s2, s1), one)],
            GenKind::T => {
                if v1 == v2 {
                    vec![((s1, s2), one)]
                } else if v1 < v2 {
                    vec![((s2, s1), one / u)]
                } else {
                    vec![((s2, s1), one), ((s1, s2), (u - BigRational::one()) / u)]
                }
            }
            GenKind::TInv => {
                if v1 == v2 {
                    vec![((s1, s2), one)]
                } else if v1 < v2 {
                    vec![((s2, s1), one), ((s1, s2), BigRational::one() - u)]
                } else {
                    vec![((s2, s1), u.clone())]
                }
            }
        }
    }

    pub fn apply_letter(&self, g: Generator, v: &[BigRational]) -> Vec<BigRational> {
        let p = g.index - 1;
        let mut out = vec![BigRational::zero(); v.len()];
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for ((a, b), c) in self.local(g.kind, self.site(idx, p), self.site(idx, p + 1)) {
                out[self.with_sites(idx, p, a, b)] += x * c;
            }
        }
        out
    }

    /// The rightmost letter acts first.
    pub fn apply_word(&self, w: &Word, v: &[BigRational]) -> Vec<BigRational> {
        w.letters().iter().rev().fold(v.to_vec(), |acc, &g| self.apply_letter(g, &acc))
    }

    pub fn apply(&self, a: &Element, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); v.len()];
        for (w, c) in a.terms() {
            let c = c.eval_at(&self.u).expect("no pole at the sample point");
            for (o, x) in out.iter_mut().zip(self.apply_word(w, v)) {
                *o += x * &c;
            }
        }
        out
    }

    pub fn test_vectors(&self, count: usize, seed: u64) -> Vec<Vec<BigRational>> {
        let mut r = rng(seed);
        (0..count).map(|_| (0..self.dim()).map(|_| q(r.gen_range(-3..=3), 1)).collect()).collect()
    }

    /// `a` acts as zero on all `vectors`.
    pub fn kills(&self, a: &Element, vectors: &[Vec<BigRational>]) -> bool {
        vectors.iter().all(|v| self.apply(a, v).iter().all(Zero::is_zero))
    }

    /// Images of each word on the given vectors, concatenated.
    pub fn image_rows(&self, words: &[Word], vectors: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        words.iter().map(|w| vectors.iter().flat_map(|v| self.apply_word(w, v)).collect()).collect()
    }
}

/// Row rank by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let prow: Vec<BigRational> = rows[r].iter().map(|x| x / &pivot).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow).skip(c) {
                *x -= &f * y;
            }
        }
        rows[r] = prow;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
