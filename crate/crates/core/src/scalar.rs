//! Exact arithmetic in the rational function field `Q(u)`.
//!
//! Every coefficient in the algebra lives here. Values are kept in a canonical
//! form (coprime numerator and denominator, monic denominator) so that
//! structural equality is field equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at u = {point}")]
    PoleAtPoint { point: BigRational },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial in `u`; `coeffs[k]` is the coefficient of `u^k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// The constant value, if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("polynomial division by zero");
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return Polynomial::one();
        }
        let mut x = primitive_int(a);
        let mut y = primitive_int(b);
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        loop {
            let r = pseudo_rem(&x, &y);
            if r.is_empty() {
                break;
            }
            if r.len() == 1 {
                return Polynomial::one();
            }
            x = y;
            y = primitive_part(r);
        }
        Polynomial::from_coeffs(y.into_iter().map(BigRational::from_integer).collect()).monic()
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (ints, _) = clear_denominators(&[self]);
        let s = fmt_int_poly(&ints[0]);
        let lcm = lcm_of_denominators(&[self]);
        if lcm.is_one() {
            write!(f, "{s}")
        } else if count_terms(&ints[0]) > 1 {
            write!(f, "({s})/{lcm}")
        } else {
            write!(f, "{s}/{lcm}")
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

fn lcm_of_denominators(polys: &[&Polynomial]) -> BigInt {
    polys
        .iter()
        .flat_map(|p| p.coeffs.iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Scale all polynomials by the common denominator lcm; returns integer coefficient vectors.
fn clear_denominators(polys: &[&Polynomial]) -> (Vec<Vec<BigInt>>, BigInt) {
    let l = lcm_of_denominators(polys);
    let ints = polys
        .iter()
        .map(|p| {
            p.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    (ints, l)
}

fn primitive_int(p: &Polynomial) -> Vec<BigInt> {
    let (mut ints, _) = clear_denominators(&[p]);
    primitive_part(ints.pop().unwrap())
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn count_terms(v: &[BigInt]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

/// Integer polynomial text: descending powers, or ascending when the leading
/// coefficient is negative (so `1-u` rather than `-u+1`).
fn fmt_int_poly(v: &[BigInt]) -> String {
    if v.iter().all(|c| c.is_zero()) {
        return "0".to_string();
    }
    let mut degrees: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
    let leading_negative = v.iter().rev().find(|c| !c.is_zero()).unwrap().is_negative();
    if !leading_negative || degrees.len() == 1 {
        degrees.reverse();
    }
    let mut out = String::new();
    for (pos, &k) in degrees.iter().enumerate() {
        let c = &v[k];
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if pos > 0 {
            out.push('+');
        }
        let power = match k {
            0 => String::new(),
            1 => "u".to_string(),
            _ => format!("u^{k}"),
        };
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{mag}*{power}"));
        }
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(short.coeffs.iter()) {
            *c += s;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

/// An element of `Q(u)` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = Polynomial::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().unwrap().recip();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            RationalFunction {
                num: num.scale(&lc),
                den: den.scale(&lc),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The parameter `u`.
    pub fn u() -> Self {
        Self::from_poly(Polynomial::u())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let lc = self.num.leading().unwrap().recip();
        Ok(RationalFunction {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Specialize `u` to an exact rational value.
    pub fn eval_at(&self, x: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint { point: x.clone() });
        }
        Ok(self.num.eval(x) / d)
    }

    /// Textual form suitable as a coefficient in element strings: integers stay
    /// bare, anything else is parenthesized.
    pub fn to_coefficient_string(&self) -> String {
        if let Some(c) = self.as_constant() {
            if c.is_integer() {
                return c.to_string();
            }
        }
        let bare_power = self.den.is_one()
            && self.num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
            && self.num.leading().is_some_and(|c| c.is_one());
        if bare_power {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (ints, _) = clear_denominators(&[&self.num, &self.den]);
        let g = ints
            .iter()
            .flatten()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let norm: Vec<Vec<BigInt>> = ints
            .into_iter()
            .map(|v| v.into_iter().map(|c| c / &g).collect())
            .collect();
        let (n, d) = (&norm[0], &norm[1]);
        let num_s = fmt_int_poly(n);
        let den_s = fmt_int_poly(d);
        let den_atom = count_terms(d) == 1 && d.iter().rev().find(|c| !c.is_zero()).unwrap().is_one();
        let num_s = if count_terms(n) > 1 { format!("({num_s})") } else { num_s };
        let den_s = if den_atom { den_s } else { format!("({den_s})") };
        write!(f, "{num_s}/{den_s}")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RationalFunction::from_poly(num);
            }
            return RationalFunction::reduce(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        if let Some(c) = self.as_constant() {
            return RationalFunction {
                num: rhs.num.scale(&c),
                den: rhs.den.clone(),
            };
        }
        if let Some(c) = rhs.as_constant() {
            return RationalFunction {
                num: self.num.scale(&c),
                den: self.den.clone(),
            };
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for RationalFunction {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl From<BigRational> for RationalFunction {
    fn from(c: BigRational) -> Self {
        Self::from_rational(c)
    }
}

impl FromStr for RationalFunction {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        parse_rational_function(s)
    }
}

/// Parse a rational function over `u`: literals, `u`, `+ - * / ^` and parentheses.
pub fn parse_rational_function(s: &str) -> Result<RationalFunction, ScalarError> {
    let mut p = ExprParser { src: s.as_bytes(), pos: 0, offset: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Parse a rational function embedded in a larger text; positions in errors are
/// reported relative to `offset`.
pub(crate) fn parse_rational_function_at(s: &str, offset: usize) -> Result<RationalFunction, ScalarError> {
    let mut p = ExprParser { src: s.as_bytes(), pos: 0, offset };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
}

impl ExprParser<'_> {
    fn error(&self, message: &str) -> ScalarError {
        ScalarError::Syntax {
            position: self.offset + self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction, ScalarError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, ScalarError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction, ScalarError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let negative = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let digits = self.digits().ok_or_else(|| self.error("expected exponent"))?;
            let e: i32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
            return base.pow(if negative { -e } else { e });
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<RationalFunction, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'u') => {
                self.pos += 1;
                Ok(RationalFunction::u())
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let n: BigInt = d.parse().map_err(|_| self.error("bad integer"))?;
                Ok(RationalFunction::from_rational(BigRational::from_integer(n)))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((rf("u-1") + rf("1-u")).is_zero());
    }

    #[test]
    fn common_denominator() {
        assert_eq!(rf("1/u") + RationalFunction::one(), rf("(u+1)/u"));
        assert_eq!((rf("1/u") + RationalFunction::one()).to_string(), "(u+1)/u");
    }

    #[test]
    fn deformation_coefficient_canonical() {
        let c = rf("u^-1 - 1") + RationalFunction::zero();
        assert_eq!(c, rf("(1-u)/u"));
        assert_eq!(c.to_string(), "(1-u)/u");
        assert_eq!(c.den(), &Polynomial::u());
    }

    #[test]
    fn products_and_inverse() {
        assert_eq!(rf("u-1") * rf("u+1"), rf("u^2-1"));
        assert_eq!(RationalFunction::u().inv().unwrap(), rf("1/u"));
        assert_eq!(rf("u") * rf("u^-1 - 1"), rf("1-u"));
        assert_eq!(RationalFunction::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        let one = BigRational::one();
        assert!(rf("u^-1 - 1").eval_at(&one).unwrap().is_zero());
        assert_eq!(rf("u-1").eval_at(&rat(2, 1)).unwrap(), rat(1, 1));
        assert!(matches!(rf("1/(u-1)").eval_at(&one), Err(ScalarError::PoleAtPoint { .. })));
    }

    #[test]
    fn printing_clears_denominators() {
        assert_eq!(rf("(u^2-1)/(2*u)").to_string(), "(u^2-1)/(2*u)");
        assert_eq!(rf("1/2").to_string(), "1/2");
        assert_eq!(rf("u/2 - 1/3").to_string(), "(3*u-2)/6");
        assert_eq!(rf("-u").to_string(), "-u");
        assert_eq!(rf("(u-1)/u").to_string(), "(u-1)/u");
        assert_eq!(rf("2*u/(u^2+1)").to_string(), "2*u/(u^2+1)");
        assert_eq!(rf("0").to_string(), "0");
    }

    #[test]
    fn gcd_is_monic_and_exact() {
        let a = &Polynomial::from_coeffs(vec![rat(-1, 1), BigRational::zero(), rat(1, 1)]) * &Polynomial::constant(rat(3, 1));
        let b = Polynomial::from_coeffs(vec![rat(-2, 1), rat(2, 1)]);
        assert_eq!(Polynomial::gcd(&a, &b), Polynomial::from_coeffs(vec![rat(-1, 1), rat(1, 1)]));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = "u + * 2".parse::<RationalFunction>().unwrap_err();
        assert_eq!(err, ScalarError::Syntax { position: 4, message: "unexpected character".into() });
        assert_eq!("1/(u-u)".parse::<RationalFunction>(), Err(ScalarError::DivisionByZero));
    }
}
