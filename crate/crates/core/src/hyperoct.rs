//! The hyperoctahedral group `W_n = C_2 ≀ S_n`, the morphism `ψ` from
//! `E_n(1)` into its group algebra, the induced modules `V_(α,β)` on Dirac
//! bases, and the representations of `E_n(1)` built from them.
//!
//! Products follow [`crate::symmetric`]: `g.mul(h)` applies `g` first.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{commutant_dim, intertwiners, QMatrix};
use crate::rewrite::relations::defining_relations;
use crate::scalar::{rat, ScalarError};
use crate::specht::{specht_rep, tensor_with_sign_character, Partition, YoungRep};
use crate::symmetric::{coset_reps, coxeter_gen, split_y, CosetSystem, DeodharCase, Permutation, SymError};
use crate::word::{Element, GenKind, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("relation {0} fails in the representation")]
    RelationViolation(String),
    #[error("the swap map is not an intertwiner for {0}")]
    IntertwinerFailure(String),
    #[error("subspace {0} is not invariant")]
    NotInvariant(String),
    #[error("bipartition sizes {a} + {b} do not match n = {n}")]
    SizeMismatch { a: usize, b: usize, n: usize },
    #[error("induced modules are provided for n ≤ 4, got {0}")]
    Unsupported(usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// A signed permutation: `perm` together with the exponents of `t_1, …, t_n`.
///
/// `signs[k]` is set when the entry `k + 1` is sent to `-perm(k + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WElement {
    pub perm: Permutation,
    pub signs: Vec<bool>,
}

impl WElement {
    pub fn identity(n: usize) -> Self {
        WElement { perm: Permutation::identity(n), signs: vec![false; n] }
    }

    pub fn from_perm(perm: Permutation) -> Self {
        let n = perm.n();
        WElement { perm, signs: vec![false; n] }
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn mul(&self, other: &WElement) -> WElement {
        let perm = self.perm.mul(&other.perm);
        let signs = (0..self.n()).map(|k| self.signs[k] ^ other.signs[self.perm.apply(k + 1) - 1]).collect();
        WElement { perm, signs }
    }

    pub fn inverse(&self) -> WElement {
        let perm = self.perm.inverse();
        let mut signs = vec![false; self.n()];
        for k in 0..self.n() {
            signs[self.perm.apply(k + 1) - 1] = self.signs[k];
        }
        WElement { perm, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && !self.signs.iter().any(|&s| s)
    }

    /// All `2^n n!` elements.
    pub fn all(n: usize) -> Vec<WElement> {
        let mut out = Vec::new();
        for p in Permutation::all(n) {
            for mask in 0..1u32 << n {
                out.push(WElement { perm: p.clone(), signs: (0..n).map(|k| mask >> k & 1 == 1).collect() });
            }
        }
        out
    }
}

impl fmt::Display for WElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for k in 0..self.n() {
            if k > 0 {
                write!(f, ",")?;
            }
            let sign = if self.signs[k] { "-" } else { "" };
            write!(f, "{sign}{}", self.perm.apply(k + 1))?;
        }
        write!(f, "]")
    }
}

pub fn s_element(i: usize, n: usize) -> Result<WElement, SymError> {
    Ok(WElement::from_perm(coxeter_gen(i, n)?))
}

/// `t_r`: trivial permutation, a single sign at position `r`.
pub fn t_element(r: usize, n: usize) -> WElement {
    assert!((1..=n).contains(&r), "t index out of range");
    let mut g = WElement::identity(n);
    g.signs[r - 1] = true;
    g
}

/// A finitely supported rational combination of group elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupAlgebra<G: Ord> {
    pub terms: BTreeMap<G, BigRational>,
}

pub type WAlgebra = GroupAlgebra<WElement>;
pub type SAlgebra = GroupAlgebra<Permutation>;

pub trait GroupElement: Ord + Clone {
    fn op(&self, other: &Self) -> Self;
}

impl GroupElement for WElement {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl GroupElement for Permutation {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl<G: GroupElement> GroupAlgebra<G> {
    pub fn zero() -> Self {
        GroupAlgebra { terms: BTreeMap::new() }
    }

    pub fn basis(g: G) -> Self {
        Self::term(g, BigRational::one())
    }

    pub fn term(g: G, c: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &G) -> BigRational {
        self.terms.get(g).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, g: G, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(g).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (g, d) in &self.terms {
            out.add_term(g.clone(), d * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            for (h, d) in &other.terms {
                out.add_term(g.op(h), c * d);
            }
        }
        out
    }
}

/// `e_r = ½(1 + t_r t_{r+1})`.
pub fn e_element(r: usize, n: usize) -> WAlgebra {
    let tt = t_element(r, n).mul(&t_element(r + 1, n));
    let half = rat(1, 2);
    let mut out = WAlgebra::term(WElement::identity(n), half.clone());
    out.add_term(tt, half);
    out
}

fn eval_word<G: GroupElement>(w: &Word, one: GroupAlgebra<G>, letter: impl Fn(GenKind, usize) -> GroupAlgebra<G>) -> GroupAlgebra<G> {
    w.letters().iter().fold(one, |acc, g| if acc.is_zero() { acc } else { acc.mul(&letter(g.kind, g.index)) })
}

fn eval_element<G: GroupElement>(
    a: &Element,
    one: &GroupAlgebra<G>,
    letter: impl Fn(GenKind, usize) -> GroupAlgebra<G> + Copy,
) -> Result<GroupAlgebra<G>, ScalarError> {
    let mut out = GroupAlgebra::zero();
    for (w, c) in a.terms() {
        let c1 = c.eval_at(&BigRational::one())?;
        out = out.add(&eval_word(w, one.clone(), letter).scale(&c1));
    }
    Ok(out)
}

/// `ψ`: `T_i ↦ s_i`, `E_i ↦ e_i`, coefficients specialized at `u = 1`.
/// `T_i^-1` also maps to `s_i`, its value at `u = 1`.
pub fn psi(a: &Element) -> Result<WAlgebra, ScalarError> {
    let n = a.n();
    let one = WAlgebra::basis(WElement::identity(n));
    eval_element(a, &one, |kind, i| match kind {
        GenKind::T | GenKind::TInv => WAlgebra::basis(s_element(i, n).expect("index checked by Element")),
        GenKind::E => e_element(i, n),
    })
}

fn phi(a: &Element, tie: bool) -> Result<SAlgebra, ScalarError> {
    let n = a.n();
    let one = SAlgebra::basis(Permutation::identity(n));
    eval_element(a, &one, |kind, i| match kind {
        GenKind::T | GenKind::TInv => SAlgebra::basis(coxeter_gen(i, n).expect("index checked by Element")),
        GenKind::E if tie => SAlgebra::basis(Permutation::identity(n)),
        GenKind::E => SAlgebra::zero(),
    })
}

/// `φ₀`: `T_i ↦ s_i`, `E_i ↦ 0`.
pub fn phi0(a: &Element) -> Result<SAlgebra, ScalarError> {
    phi(a, false)
}

/// `φ₁`: `T_i ↦ s_i`, `E_i ↦ 1`.
pub fn phi1(a: &Element) -> Result<SAlgebra, ScalarError> {
    phi(a, true)
}

/// An ordered pair of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: &[usize], beta: &[usize]) -> Self {
        Bipartition {
            alpha: Partition::new(alpha.to_vec()).expect("valid partition"),
            beta: Partition::new(beta.to_vec()).expect("valid partition"),
        }
    }

    pub fn n(&self) -> usize {
        self.alpha.size() + self.beta.size()
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition { alpha: self.beta.clone(), beta: self.alpha.clone() }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// `V_(α,β) = Ind_{W_(a,b)}^{W_n} α ⊗ εβ` on the Dirac basis `δ_{x,i}`,
/// `x ∈ X_(a,b)` in breadth-first order, `i` running over `V_α ⊗ V_β`.
#[derive(Debug, Clone)]
pub struct InducedRep {
    pub bipartition: Bipartition,
    pub cosets: CosetSystem,
    pub inner: YoungRep,
    /// Matrices of `s_1, …, s_{n-1}`.
    pub s: Vec<QMatrix>,
    /// Matrices of `t_1, …, t_n`.
    pub t: Vec<QMatrix>,
}

impl InducedRep {
    pub fn n(&self) -> usize {
        self.bipartition.n()
    }

    pub fn dim(&self) -> usize {
        self.cosets.len() * self.inner.dim()
    }

    /// Dirac basis labels `(x, i)`.
    pub fn dirac_index(&self) -> Vec<(Permutation, usize)> {
        let d = self.inner.dim();
        self.cosets.reps.iter().flat_map(|x| (0..d).map(move |i| (x.clone(), i))).collect()
    }

    /// Defining relations of the type-B Coxeter group on `t = t_1, s_1, …`,
    /// plus `t_{r+1} = s_r t_r s_r`.
    pub fn group_relations_hold(&self) -> bool {
        let id = QMatrix::identity(self.dim());
        let n = self.n();
        let t = &self.t[0];
        if t.mul(t) != id {
            return false;
        }
        if n >= 2 {
            let ts = t.mul(&self.s[0]);
            if ts.mul(&ts).mul(&ts).mul(&ts) != id {
                return false;
            }
        }
        for k in 1..self.s.len() {
            if t.mul(&self.s[k]) != self.s[k].mul(t) {
                return false;
            }
        }
        let srep = crate::specht::MatrixRep { n, dim: self.dim(), gens: self.s.clone() };
        if !srep.coxeter_relations_hold() {
            return false;
        }
        (1..n).all(|r| self.t[r] == self.s[r - 1].mul(&self.t[r - 1]).mul(&self.s[r - 1]))
    }
}

pub fn induced_rep(bp: &Bipartition) -> Result<InducedRep, RepError> {
    let (a, b) = (bp.alpha.size(), bp.beta.size());
    let n = a + b;
    if n == 0 || n > 4 {
        return Err(RepError::Unsupported(n));
    }
    let cosets = coset_reps(a, b);
    let inner = tensor_with_sign_character(&specht_rep(&bp.alpha), &specht_rep(&bp.beta), true);
    let d = inner.dim();
    let dim = cosets.len() * d;
    let mut s = Vec::with_capacity(n - 1);
    for k in 1..n {
        let mut m = QMatrix::zeros(dim, dim);
        for (col, x) in cosets.reps.iter().enumerate() {
            match cosets.deodhar_case(x, k)? {
                DeodharCase::InX(xs) => {
                    let row = cosets.position(&xs).expect("representative");
                    for i in 0..d {
                        m[(row * d + i, col * d + i)] = BigRational::one();
                    }
                }
                DeodharCase::Reflected(j) => {
                    let block = inner.eval_perm(&coxeter_gen(j, n)?);
                    for r in 0..d {
                        for c in 0..d {
                            m[(col * d + r, col * d + c)] = block[(r, c)].clone();
                        }
                    }
                }
            }
        }
        s.push(m);
    }
    let mut t = Vec::with_capacity(n);
    for r in 1..=n {
        let mut m = QMatrix::zeros(dim, dim);
        for (col, x) in cosets.reps.iter().enumerate() {
            let xw = WElement::from_perm(x.clone());
            let conj = xw.mul(&t_element(r, n)).mul(&xw.inverse());
            debug_assert!(conj.perm.is_identity());
            let v = inner.sign_value(&conj.signs);
            for i in 0..d {
                m[(col * d + i, col * d + i)] = v.clone();
            }
        }
        t.push(m);
    }
    Ok(InducedRep { bipartition: bp.clone(), cosets, inner, s, t })
}

/// A representation of `E_n(1)`: matrices of the `T_i` and `E_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ERep {
    pub n: usize,
    pub label: String,
    pub t: Vec<QMatrix>,
    pub e: Vec<QMatrix>,
}

#[derive(Serialize)]
struct ERepJson {
    label: String,
    #[serde(rename = "T")]
    t: Vec<Vec<Vec<String>>>,
    #[serde(rename = "E")]
    e: Vec<Vec<Vec<String>>>,
}

pub fn matrix_strings(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(|x| x.to_string()).collect()).collect()
}

impl ERep {
    pub fn dim(&self) -> usize {
        self.t.first().or(self.e.first()).map_or(1, |m| m.rows())
    }

    fn letter(&self, kind: GenKind, i: usize) -> &QMatrix {
        match kind {
            GenKind::T | GenKind::TInv => &self.t[i - 1],
            GenKind::E => &self.e[i - 1],
        }
    }

    pub fn eval_word(&self, w: &Word) -> QMatrix {
        w.letters().iter().fold(QMatrix::identity(self.dim()), |acc, g| acc.mul(self.letter(g.kind, g.index)))
    }

    /// Image of an element, coefficients specialized at `u = 1`.
    pub fn eval(&self, a: &Element) -> Result<QMatrix, ScalarError> {
        let mut out = QMatrix::zeros(self.dim(), self.dim());
        for (w, c) in a.terms() {
            out = out.add(&self.eval_word(w).scale(&c.eval_at(&BigRational::one())?));
        }
        Ok(out)
    }

    /// Relations (1) to (9) at `u = 1`; returns the first failure.
    pub fn check_relations(&self) -> Result<(), RepError> {
        for r in defining_relations(self.n) {
            if self.eval(&r.lhs)? != self.eval(&r.rhs)? {
                return Err(RepError::RelationViolation(format!("{} in {}", r.name, self.label)));
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> Vec<QMatrix> {
        self.t.iter().chain(&self.e).cloned().collect()
    }

    pub fn commutant_dim(&self) -> usize {
        let g = self.generators();
        if g.is_empty() {
            return self.dim() * self.dim();
        }
        commutant_dim(&g)
    }

    /// Traces of the images of `words`.
    pub fn character(&self, words: &[Word]) -> Vec<BigRational> {
        words.iter().map(|w| self.eval_word(w).trace()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = ERepJson {
            label: self.label.clone(),
            t: self.t.iter().map(matrix_strings).collect(),
            e: self.e.iter().map(matrix_strings).collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }
}

/// Pull `V_(α,β)` back along `ψ`: `T_i ↦ s_i`, `E_i ↦ ½(1 + t_i t_{i+1})`.
pub fn to_erep(r: &InducedRep) -> Result<ERep, RepError> {
    let n = r.n();
    let id = QMatrix::identity(r.dim());
    let half = rat(1, 2);
    let e = (1..n).map(|i| id.add(&r.t[i - 1].mul(&r.t[i])).scale(&half)).collect();
    let rep = ERep { n, label: r.bipartition.to_string(), t: r.s.clone(), e };
    rep.check_relations()?;
    Ok(rep)
}

/// The statement that every Dirac vector is fixed by `e_r` for `r ≠ a` and
/// killed by `e_a`. Returns the `(r, coset)` pairs where it fails.
pub fn tie_action_exceptions(r: &InducedRep, rep: &ERep) -> Vec<(usize, Permutation)> {
    let a = r.bipartition.alpha.size();
    let d = r.inner.dim();
    let mut bad = Vec::new();
    for (idx, x) in r.cosets.reps.iter().enumerate() {
        for (k, e) in rep.e.iter().enumerate() {
            let expect = if k + 1 == a { BigRational::zero() } else { BigRational::one() };
            let ok = (0..d).all(|i| {
                let v = idx * d + i;
                (0..rep.dim()).all(|row| e[(row, v)] == if row == v { expect.clone() } else { BigRational::zero() })
            });
            if !ok {
                bad.push((k + 1, x.clone()));
            }
        }
    }
    bad
}

/// Whether `Φ M = M' Φ` for all generators.
pub fn intertwines(phi: &QMatrix, from: &ERep, to: &ERep) -> bool {
    from.generators().iter().zip(to.generators()).all(|(m, m2)| phi.mul(m) == m2.mul(phi))
}

/// The map `δ_{x,(i,j)} ↦ δ_{w^{-1}x,(j,i)}` from `V_(α,β)` to `V_(β,α)`.
pub fn swap_map(r: &InducedRep, r2: &InducedRep) -> QMatrix {
    let (da, db) = (r.inner.alpha.dim, r.inner.beta.dim);
    let d = da * db;
    let w_inv = r.cosets.w.inverse();
    let mut phi = QMatrix::zeros(r2.dim(), r.dim());
    for (cx, x) in r.cosets.reps.iter().enumerate() {
        let y = w_inv.mul(x);
        let cy = r2.cosets.position(&y).expect("w^-1 X_(a,b) = X_(b,a)");
        for i in 0..da {
            for j in 0..db {
                phi[(cy * d + j * da + i, cx * d + i * db + j)] = BigRational::one();
            }
        }
    }
    phi
}

#[derive(Debug, Clone)]
pub struct SwapEquivalence {
    pub from: ERep,
    pub to: ERep,
    pub phi: QMatrix,
}

/// `V_(α,β) ≅ V_(β,α)` through the swap map, verified on every generator.
pub fn swap_intertwiner(bp: &Bipartition) -> Result<SwapEquivalence, RepError> {
    let r = induced_rep(bp)?;
    let r2 = induced_rep(&bp.swapped())?;
    let (from, to) = (to_erep(&r)?, to_erep(&r2)?);
    let phi = swap_map(&r, &r2);
    if phi.inverse().is_none() || !intertwines(&phi, &from, &to) {
        return Err(RepError::IntertwinerFailure(bp.to_string()));
    }
    Ok(SwapEquivalence { from, to, phi })
}

/// Some invertible intertwiner from `a` to `b`, if the modules are isomorphic.
pub fn find_intertwiner(a: &ERep, b: &ERep) -> Option<QMatrix> {
    if a.dim() != b.dim() {
        return None;
    }
    let basis = intertwiners(&a.generators(), &b.generators());
    if a.generators().is_empty() {
        return Some(QMatrix::identity(a.dim()));
    }
    // A generic combination is invertible whenever some combination is.
    let mut acc = QMatrix::zeros(b.dim(), a.dim());
    for (k, m) in basis.iter().enumerate() {
        acc = acc.add(&m.scale(&rat(1 + k as i64 * k as i64, 1)));
        if acc.inverse().is_some() {
            return Some(acc);
        }
    }
    basis.into_iter().find(|m| m.inverse().is_some())
}

/// Restrict `rep` to the column span of `p` (orthogonal columns), checking invariance.
fn restrict(rep: &ERep, p: &QMatrix, label: String) -> Result<ERep, RepError> {
    let pt = p.transpose();
    let gram_inv = pt.mul(p).inverse().expect("independent columns");
    let restrict_one = |m: &QMatrix| -> Result<QMatrix, RepError> {
        let r = gram_inv.mul(&pt).mul(m).mul(p);
        if m.mul(p) != p.mul(&r) {
            return Err(RepError::NotInvariant(label.clone()));
        }
        Ok(r)
    };
    let t = rep.t.iter().map(restrict_one).collect::<Result<_, _>>()?;
    let e = rep.e.iter().map(restrict_one).collect::<Result<_, _>>()?;
    let out = ERep { n: rep.n, label, t, e };
    out.check_relations()?;
    Ok(out)
}

/// `V_(α,α) = V_α^+ ⊕ V_α^-`, spanned by `δ_{x,(i,j)} ± δ_{w x,(j,i)}` for `x ∈ Y`.
pub fn plus_minus_split(alpha: &Partition) -> Result<(ERep, ERep), RepError> {
    let m = alpha.size();
    let bp = Bipartition { alpha: alpha.clone(), beta: alpha.clone() };
    let r = induced_rep(&bp)?;
    let rep = to_erep(&r)?;
    let da = r.inner.alpha.dim;
    let d = da * da;
    let w = r.cosets.w.clone();
    let y = split_y(m);
    let half_dim = y.len() * d;
    let mut plus = QMatrix::zeros(r.dim(), half_dim);
    let mut minus = QMatrix::zeros(r.dim(), half_dim);
    for (k, x) in y.iter().enumerate() {
        let cx = r.cosets.position(x).expect("Y ⊆ X");
        let cw = r.cosets.position(&w.mul(x)).expect("w X = X");
        for i in 0..da {
            for j in 0..da {
                let col = k * d + i * da + j;
                plus[(cx * d + i * da + j, col)] = BigRational::one();
                plus[(cw * d + j * da + i, col)] += BigRational::one();
                minus[(cx * d + i * da + j, col)] = BigRational::one();
                minus[(cw * d + j * da + i, col)] -= BigRational::one();
            }
        }
    }
    Ok((restrict(&rep, &plus, format!("({alpha},+)"))?, restrict(&rep, &minus, format!("({alpha},-)"))?))
}

fn phi_rep(alpha: &Partition, tie: bool) -> ERep {
    let s = specht_rep(alpha);
    let n = s.n;
    let e = if tie { QMatrix::identity(s.dim) } else { QMatrix::zeros(s.dim, s.dim) };
    ERep { n, label: format!("({alpha},{})", u8::from(tie)), t: s.gens.clone(), e: vec![e; n.saturating_sub(1)] }
}

/// `(α,0)`: `T_i ↦ α(s_i)`, `E_i ↦ 0`.
pub fn phi0_rep(alpha: &Partition) -> ERep {
    phi_rep(alpha, false)
}

/// `(α,1)`: `T_i ↦ α(s_i)`, `E_i ↦ 1`.
pub fn phi1_rep(alpha: &Partition) -> ERep {
    phi_rep(alpha, true)
}

/// The eight irreducible representations of `E_3(1)`:
/// `(α,1)` and `(α,0)` for `α = [3], [1,1,1], [2,1]`, then `([2],[1])`, `([1,1],[1])`.
pub fn irreps_e3() -> Result<Vec<ERep>, RepError> {
    let shapes = [vec![3], vec![1, 1, 1], vec![2, 1]];
    let mut out = Vec::new();
    for tie in [true, false] {
        for s in &shapes {
            out.push(phi_rep(&Partition::new(s.clone()).expect("valid"), tie));
        }
    }
    for bp in [Bipartition::new(&[2], &[1]), Bipartition::new(&[1, 1], &[1])] {
        out.push(to_erep(&induced_rep(&bp)?)?);
    }
    Ok(out)
}

/// Column labels and rows of the exact matrix whose rows are the
/// `(φ₀ ⊕ ψ)`-images of `words` (optionally with `φ₁` as well).
#[derive(Debug, Clone)]
pub struct ImageMatrix {
    pub columns: Vec<String>,
    pub phi0_cols: std::ops::Range<usize>,
    pub phi1_cols: Option<std::ops::Range<usize>>,
    pub psi_cols: std::ops::Range<usize>,
    pub matrix: QMatrix,
}

pub fn image_matrix(n: usize, words: &[Word], with_phi1: bool) -> Result<ImageMatrix, ScalarError> {
    let perms = Permutation::all(n);
    let ws = WElement::all(n);
    let mut columns: Vec<String> = perms.iter().map(|p| format!("φ₀:{p}")).collect();
    let phi0_cols = 0..perms.len();
    let phi1_cols = if with_phi1 {
        columns.extend(perms.iter().map(|p| format!("φ₁:{p}")));
        Some(perms.len()..2 * perms.len())
    } else {
        None
    };
    let start = columns.len();
    columns.extend(ws.iter().map(|g| format!("ψ:{g}")));
    let psi_cols = start..columns.len();
    let mut rows = Vec::with_capacity(words.len());
    for w in words {
        let e = Element::from_word(n, w.clone());
        let mut row = Vec::with_capacity(columns.len());
        let p0 = phi0(&e)?;
        row.extend(perms.iter().map(|p| p0.coeff(p)));
        if with_phi1 {
            let p1 = phi1(&e)?;
            row.extend(perms.iter().map(|p| p1.coeff(p)));
        }
        let ps = psi(&e)?;
        row.extend(ws.iter().map(|g| ps.coeff(g)));
        rows.push(row);
    }
    Ok(ImageMatrix { columns, phi0_cols, phi1_cols, psi_cols, matrix: QMatrix::from_rows(rows) })
}

fn column_block(m: &QMatrix, cols: std::ops::Range<usize>) -> QMatrix {
    QMatrix::from_rows((0..m.rows()).map(|i| m.row(i)[cols.clone()].to_vec()).collect())
}

/// Exact rank data for the 30 spanning words of `E_3(1)`.
#[derive(Debug, Clone, Serialize)]
pub struct SemisimplicityCertificate {
    pub words: Vec<String>,
    pub rank: usize,
    pub phi0_rank: usize,
    pub psi_rank: usize,
    /// Labels of columns giving a nonsingular square submatrix.
    pub witness_columns: Vec<String>,
    /// Rows of the `ψ` block spanning its row space (when it is deficient,
    /// a nonzero kernel vector is given in `psi_kernel`).
    pub psi_kernel: Vec<Vec<String>>,
}

pub fn semisimplicity_certificate() -> Result<SemisimplicityCertificate, RepError> {
    let span = crate::rewrite::span_basis(3).expect("n = 3 is supported");
    let im = image_matrix(3, &span.words, false)?;
    let mut reduced = im.matrix.clone();
    let pivots = reduced.rref();
    let phi0_block = column_block(&im.matrix, im.phi0_cols.clone());
    let psi_block = column_block(&im.matrix, im.psi_cols.clone());
    // kernel of the row map: combinations of words with zero ψ-image
    let psi_kernel = psi_block
        .transpose()
        .nullspace()
        .into_iter()
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .collect();
    Ok(SemisimplicityCertificate {
        words: span.words.iter().map(|w| w.to_string()).collect(),
        rank: pivots.len(),
        phi0_rank: phi0_block.rank(),
        psi_rank: psi_block.rank(),
        witness_columns: pivots.iter().map(|&c| im.columns[c].clone()).collect(),
        psi_kernel,
    })
}
