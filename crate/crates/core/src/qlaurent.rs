//! Integer Laurent polynomials in one variable `q`.
//!
//! Every q-analog in the crate lives in [`IntLaurentPoly`]: a sparse map from
//! (possibly negative) exponents to arbitrary-precision integer coefficients.
//! Quotients whose divisibility is not yet established are carried as
//! [`QRational`] and collapsed with [`QRational::normalize`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("quotient is not a Laurent polynomial")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Sparse Laurent polynomial with integer coefficients. No stored coefficient
/// is zero, so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntLaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl IntLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `q^e - 1`
    pub fn q_pow_minus_one(e: i64) -> Self {
        Self::q_pow(e) - Self::one()
    }

    /// `1 - q^e`
    pub fn one_minus_q_pow(e: i64) -> Self {
        Self::one() - Self::q_pow(e)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `q^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Leading (highest-exponent) term.
    pub fn leading_term(&self) -> Option<(i64, &BigInt)> {
        self.coeffs.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// If the polynomial is a constant (or zero), returns it.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.coeffs.values().any(|c| c.is_negative())
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.min_exponent().is_some_and(|e| e < 0)
    }

    /// True when the polynomial lies in `N[q]`: no negative exponent and no
    /// negative coefficient.
    pub fn is_nonnegative_polynomial(&self) -> bool {
        !self.has_negative_exponent() && !self.has_negative_coefficient()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^a` for `a >= 1`.
    pub fn dilate(&self, a: i64) -> Self {
        assert!(a >= 1, "dilation factor must be positive");
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * a, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Value at `q = 1`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact quotient in `Z[q, q^-1]`, or [`QError::NotDivisible`].
    ///
    /// The divisor is split as `q^b * D` with `D(0) != 0`; since monomials are
    /// units, divisibility reduces to long division by `D` over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, QError> {
        let shift_d = divisor.min_exponent().ok_or(QError::DivisionByZero)?;
        let Some(shift_n) = self.min_exponent() else {
            return Ok(Self::zero());
        };
        let d = divisor.shift(-shift_d);
        let mut rem = self.shift(-shift_n);
        let (deg_d, lc_d) = {
            let (e, c) = d.leading_term().expect("nonzero divisor");
            (e, c.clone())
        };
        let mut quotient = Self::zero();
        while let Some((e, c)) = rem.leading_term() {
            if e < deg_d {
                return Err(QError::NotDivisible);
            }
            let (factor, r) = c.div_rem(&lc_d);
            if !r.is_zero() {
                return Err(QError::NotDivisible);
            }
            let k = e - deg_d;
            for (de, dc) in d.terms() {
                rem.add_term(de + k, -(dc * &factor));
            }
            quotient.add_term(k, factor);
        }
        Ok(quotient.shift(shift_n - shift_d))
    }

    /// Remainder modulo a monic polynomial with nonnegative exponents. The
    /// receiver must have no negative exponents.
    pub fn rem_monic(&self, modulus: &Self) -> Self {
        let (deg_m, lc) = modulus.leading_term().expect("nonzero modulus");
        assert!(lc.is_one(), "modulus must be monic");
        assert!(
            !self.has_negative_exponent() && !modulus.has_negative_exponent(),
            "rem_monic works on ordinary polynomials"
        );
        let mut rem = self.clone();
        while let Some((e, c)) = rem.leading_term() {
            if e < deg_m {
                break;
            }
            let c = c.clone();
            let k = e - deg_m;
            for (me, mc) in modulus.terms() {
                rem.add_term(me + k, -(mc * &c));
            }
        }
        rem
    }
}

impl fmt::Debug for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntLaurentPoly({self})")
    }
}

/// Renders `c_k*q^k + ...` in ascending exponent order, e.g. `-q^-2 + 3 + 2*q^5`.
impl fmt::Display for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntLaurentPoly {
    type Err = QError;

    /// Parses the rendering grammar: signed terms `c`, `c*q`, `q^k`, `c*q^k`
    /// (the `*` may be omitted)
    /// separated by `+`/`-`, whitespace ignored, `k` possibly negative.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || QError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let bytes = compact.as_bytes();
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        if bytes[0] == b'-' || bytes[0] == b'+' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        let mut i = start;
        while i < bytes.len() {
            let b = bytes[i];
            // a sign right after '^' belongs to the exponent
            if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
                terms.push((negative, &compact[start..i]));
                negative = b == b'-';
                start = i + 1;
            }
            i += 1;
        }
        terms.push((negative, &compact[start..]));

        let mut poly = Self::zero();
        for (neg, body) in terms {
            if body.is_empty() {
                return Err(err());
            }
            let (coeff, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| err())?, 0),
                Some(pos) => {
                    let coeff = match &body[..pos] {
                        "" => BigInt::one(),
                        c => c
                            .strip_suffix('*')
                            .unwrap_or(c)
                            .parse::<BigInt>()
                            .map_err(|_| err())?,
                    };
                    let exp = match &body[pos + 1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .ok_or_else(err)?
                            .parse::<i64>()
                            .map_err(|_| err())?,
                    };
                    (coeff, exp)
                }
            };
            poly.add_term(exp, if neg { -coeff } else { coeff });
        }
        Ok(poly)
    }
}

impl Neg for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(mut self) -> Self::Output {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> Self::Output {
        -self.clone()
    }
}

impl AddAssign<&IntLaurentPoly> for IntLaurentPoly {
    fn add_assign(&mut self, rhs: &IntLaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&IntLaurentPoly> for IntLaurentPoly {
    fn sub_assign(&mut self, rhs: &IntLaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl Add<&IntLaurentPoly> for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: &IntLaurentPoly) -> Self::Output {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&IntLaurentPoly> for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: &IntLaurentPoly) -> Self::Output {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&IntLaurentPoly> for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: &IntLaurentPoly) -> Self::Output {
        let (Some(lo_a), Some(hi_a), Some(lo_b), Some(hi_b)) = (
            self.min_exponent(),
            self.max_exponent(),
            rhs.min_exponent(),
            rhs.max_exponent(),
        ) else {
            return IntLaurentPoly::zero();
        };
        let span = (hi_a - lo_a + hi_b - lo_b + 1) as usize;
        let dense_cost = span;
        let sparse_cost = self.num_terms() * rhs.num_terms();
        if dense_cost <= 4 * sparse_cost {
            // accumulate densely, then drop zeros
            let mut acc = vec![BigInt::zero(); span];
            for (ea, ca) in self.terms() {
                for (eb, cb) in rhs.terms() {
                    acc[(ea - lo_a + eb - lo_b) as usize] += ca * cb;
                }
            }
            let base = lo_a + lo_b;
            IntLaurentPoly {
                coeffs: acc
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (base + i as i64, c))
                    .collect(),
            }
        } else {
            let mut out = IntLaurentPoly::zero();
            for (ea, ca) in self.terms() {
                for (eb, cb) in rhs.terms() {
                    out.add_term(ea + eb, ca * cb);
                }
            }
            out
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<IntLaurentPoly> for IntLaurentPoly {
            type Output = IntLaurentPoly;
            fn $m(self, rhs: IntLaurentPoly) -> IntLaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&IntLaurentPoly> for IntLaurentPoly {
            type Output = IntLaurentPoly;
            fn $m(self, rhs: &IntLaurentPoly) -> IntLaurentPoly { (&self).$m(rhs) }
        }
        impl $tr<IntLaurentPoly> for &IntLaurentPoly {
            type Output = IntLaurentPoly;
            fn $m(self, rhs: IntLaurentPoly) -> IntLaurentPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for IntLaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for IntLaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

/// `[m]_{q^a} = 1 + q^a + ... + q^{a(m-1)}`.
pub fn q_number(m: u32, a: u32) -> IntLaurentPoly {
    IntLaurentPoly::from_terms((0..m as i64).map(|i| (i * a as i64, 1)))
}

/// `[m]_{q^a}` extended to all integers through `(q^{am} - 1)/(q^a - 1)`:
/// for `m < 0` this is `-(q^{am} + ... + q^{-a})`.
pub fn q_number_signed(m: i64, a: u32) -> IntLaurentPoly {
    if m >= 0 {
        q_number(m as u32, a)
    } else {
        let a = a as i64;
        -IntLaurentPoly::from_terms((m..0).map(|i| (i * a, 1)))
    }
}

/// `[m]_{q^a}!`
pub fn q_factorial(m: u32, a: u32) -> IntLaurentPoly {
    (1..=m).map(|i| q_number(i, a)).product()
}

/// Gaussian binomial `[n choose k]_{q^a}`, zero when `k > n`.
///
/// Built as the running product `prod_{i<=j} [n-k+i]/[i]`; every prefix is
/// itself a Gaussian binomial, so each division step is exact.
pub fn q_binomial(n: u32, k: u32, a: u32) -> IntLaurentPoly {
    if k > n {
        return IntLaurentPoly::zero();
    }
    let k = k.min(n - k);
    let mut acc = IntLaurentPoly::one();
    for i in 1..=k {
        acc = &acc * &q_number(n - k + i, a);
        acc = acc
            .div_exact(&q_number(i, a))
            .expect("Gaussian binomial prefix is a polynomial");
    }
    acc
}

/// q-multinomial `[sum parts]_{q^a}! / prod [part]_{q^a}!`.
pub fn q_multinomial(parts: &[u32], a: u32) -> IntLaurentPoly {
    assert!(!parts.is_empty(), "q_multinomial needs at least one part");
    let mut total = 0;
    let mut acc = IntLaurentPoly::one();
    for &p in parts {
        total += p;
        acc = &acc * &q_binomial(total, p, a);
    }
    acc
}

/// q-multinomial whose top and parts are given as signed integers, as they
/// arise in the closed Kreweras formulas: a negative part makes the value the
/// falling product `[top][top-1]...` hit `[0]`, hence zero.
pub fn q_multinomial_signed(top: i64, parts: &[i64], a: u32) -> IntLaurentPoly {
    debug_assert_eq!(parts.iter().sum::<i64>(), top, "parts must sum to top");
    if top < 0 || parts.iter().any(|&p| p < 0) {
        return IntLaurentPoly::zero();
    }
    let parts: Vec<u32> = parts.iter().map(|&p| p as u32).collect();
    if parts.is_empty() {
        return IntLaurentPoly::one();
    }
    q_multinomial(&parts, a)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `d`-th cyclotomic polynomial, by dividing `q^d - 1` by `Phi_e` for every
/// proper divisor `e` of `d`.
pub fn cyclotomic(d: u64) -> IntLaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut known: BTreeMap<u64, IntLaurentPoly> = BTreeMap::new();
    for e in divisors(d) {
        let mut p = IntLaurentPoly::q_pow_minus_one(e as i64);
        for f in divisors(e).into_iter().filter(|&f| f < e) {
            p = p.div_exact(&known[&f]).expect("cyclotomic factor divides");
        }
        known.insert(e, p);
    }
    known.remove(&d).expect("d divides itself")
}

/// Value of a polynomial at a primitive `d`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootValue {
    /// The value is the rational integer.
    Integer(BigInt),
    /// Remainder modulo `Phi_d` is not constant: the value is not a rational
    /// integer. The remainder is returned as evidence.
    NonConstant(IntLaurentPoly),
}

impl RootValue {
    pub fn integer(&self) -> Option<&BigInt> {
        match self {
            RootValue::Integer(v) => Some(v),
            RootValue::NonConstant(_) => None,
        }
    }
}

/// Evaluates `p` at a primitive `d`-th root of unity by reduction modulo
/// `Phi_d`. Negative exponents are first cleared by multiplying by the least
/// `q^{kd}` that makes them nonnegative, which does not change the value.
pub fn specialize_at_root(p: &IntLaurentPoly, d: u64) -> RootValue {
    assert!(d >= 1);
    let mut p = p.clone();
    if let Some(lo) = p.min_exponent().filter(|&e| e < 0) {
        let d = d as i64;
        let k = (-lo + d - 1) / d;
        p = p.shift(k * d);
    }
    let rem = p.rem_monic(&cyclotomic(d));
    match rem.as_constant() {
        Some(c) => RootValue::Integer(c),
        None => RootValue::NonConstant(rem),
    }
}

pub fn eval_at_one(p: &IntLaurentPoly) -> BigInt {
    p.eval_at_one()
}

/// Formal quotient of two Laurent polynomials.
#[derive(Clone, Debug)]
pub struct QRational {
    numerator: IntLaurentPoly,
    denominator: IntLaurentPoly,
}

impl QRational {
    /// Panics on a zero denominator.
    pub fn new(numerator: IntLaurentPoly, denominator: IntLaurentPoly) -> Self {
        assert!(!denominator.is_zero(), "QRational with zero denominator");
        Self {
            numerator,
            denominator,
        }
    }

    pub fn from_poly(p: IntLaurentPoly) -> Self {
        Self::new(p, IntLaurentPoly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(IntLaurentPoly::zero())
    }

    pub fn numerator(&self) -> &IntLaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntLaurentPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Exact Laurent polynomial equal to this quotient, or `NotDivisible`.
    pub fn normalize(&self) -> Result<IntLaurentPoly, QError> {
        if self.denominator.is_one() {
            return Ok(self.numerator.clone());
        }
        self.numerator.div_exact(&self.denominator)
    }

    /// Reduces to a polynomial over one if that is possible; otherwise keeps
    /// the quotient as is.
    pub fn simplified(self) -> Self {
        match self.normalize() {
            Ok(p) => Self::from_poly(p),
            Err(_) => self,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.denominator == other.denominator {
            return Self::new(
                &self.numerator + &other.numerator,
                self.denominator.clone(),
            );
        }
        Self::new(
            &self.numerator * &other.denominator + &other.numerator * &self.denominator,
            &self.denominator * &other.denominator,
        )
    }

    /// Exact equality as rational functions (cross-multiplication).
    pub fn equals(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl From<IntLaurentPoly> for QRational {
    fn from(p: IntLaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

/// Normalizes a quotient; free-function form of [`QRational::normalize`].
pub fn normalize(r: &QRational) -> Result<IntLaurentPoly, QError> {
    r.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntLaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn q_number_examples() {
        assert_eq!(q_number(3, 1), p("1 + q + q^2"));
        assert!(q_number(0, 1).is_zero());
        assert_eq!(q_number(2, 2), p("1 + q^2"));
        assert_eq!(q_number_signed(-2, 1), p("-q^-2 - q^-1"));
        assert_eq!(q_number_signed(-2, 1).eval_at_one(), BigInt::from(-2));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(q_multinomial(&[2, 2], 1), p("1 + q + 2*q^2 + q^3 + q^4"));
        for n in 0..6 {
            assert!(q_multinomial(&[n, 0], 1).is_one());
        }
        assert_eq!(q_multinomial(&[1, 1], 2), p("1 + q^2"));
        assert!(q_multinomial_signed(2, &[3, -1], 1).is_zero());
        assert!(q_multinomial_signed(0, &[], 2).is_one());
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), p("-1 + q"));
        assert_eq!(cyclotomic(2), p("1 + q"));
        assert_eq!(cyclotomic(6), p("1 - q + q^2"));
        assert_eq!(cyclotomic(12), p("1 - q^2 + q^4"));
    }

    #[test]
    fn specialize_examples() {
        let int = |v: i64| RootValue::Integer(BigInt::from(v));
        assert_eq!(specialize_at_root(&q_number(10, 1), 2), int(0));
        assert_eq!(specialize_at_root(&p("q^5"), 5), int(1));
        assert_eq!(specialize_at_root(&q_number(6, 1), 3), int(0));
        assert_eq!(specialize_at_root(&p("q^-3"), 3), int(1));
        assert_eq!(specialize_at_root(&p("q^-1 + q"), 4), int(0));
        assert!(matches!(
            specialize_at_root(&p("q"), 3),
            RootValue::NonConstant(_)
        ));
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(q_number(10, 1).eval_at_one(), BigInt::from(10));
        assert_eq!(IntLaurentPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(p("q^-2 + q^2").eval_at_one(), BigInt::from(2));
    }

    #[test]
    fn normalize_examples() {
        let r = QRational::new(q_number(4, 1), q_number(2, 1));
        assert_eq!(r.normalize().unwrap(), p("1 + q^2"));
        let r = QRational::new(q_number(3, 1), q_number(2, 1));
        assert_eq!(r.normalize(), Err(QError::NotDivisible));
        let t = 11;
        let num = [t - 1, t - 5, t - 9].map(|m| q_number(m, 1));
        let den = [2, 6, 10].map(|m| q_number(m, 1));
        let r = QRational::new(num.into_iter().product(), den.into_iter().product());
        assert!(r.normalize().unwrap().is_one());
    }

    #[test]
    fn laurent_division_handles_monomial_factors() {
        let num = p("q^-3 + q^-1");
        let den = p("q^-5 + q^-3");
        assert_eq!(num.div_exact(&den).unwrap(), p("q^2"));
        assert_eq!(
            p("1 + q").div_exact(&IntLaurentPoly::zero()),
            Err(QError::DivisionByZero)
        );
        assert_eq!(p("2 + 2*q").div_exact(&p("2")).unwrap(), p("1 + q"));
        assert_eq!(p("1 + q").div_exact(&p("2")), Err(QError::NotDivisible));
    }

    #[test]
    fn rendering_and_parsing() {
        let poly = p("3 - q^-2 + 2*q^5 - q");
        assert_eq!(poly.to_string(), "-q^-2 + 3 - q + 2*q^5");
        assert_eq!(IntLaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("q^-1 - q^-1"), IntLaurentPoly::zero());
        assert!("".parse::<IntLaurentPoly>().is_err());
        assert!("q^".parse::<IntLaurentPoly>().is_err());
        assert_eq!(p("3q"), p("3*q"));
        assert!("3x".parse::<IntLaurentPoly>().is_err());
        assert!("1 +".parse::<IntLaurentPoly>().is_err());
    }

    #[test]
    fn coefficients_leave_64_bits() {
        let m = q_multinomial(&[4; 8], 1);
        let max = m.terms().map(|(_, c)| c.clone()).max().unwrap();
        assert!(max > BigInt::from(u64::MAX));
    }
}
