//! Products of cyclotomic polynomials in exact factored form.
//!
//! A [`CycloProduct`] is a value
//!
//! ```text
//!     c * q^a * prod_d Phi_d(q)^(m_d),        c in Q*, a in Z, m_d in Z,
//! ```
//!
//! stored as the rational `c`, the exponent `a` and the finitely many
//! nonzero multiplicities `m_d`.  Multiplication, exact division, the
//! substitution `q -> -q` and l-adic valuation all act directly on this
//! data, so no polynomial arithmetic happens after construction.  Negative
//! multiplicities are legal (quotients arise in every degree formula); a
//! value is a genuine polynomial exactly when `a >= 0` and every `m_d >= 0`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul, MulAssign};
use std::str::FromStr;
use thiserror::Error;

/// A sign, used for the `q^k -+ 1` constructors and `eps`-twisted formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `self^k`: Minus flips with the parity of `k`.
    pub fn pow(self, k: u64) -> Sign {
        if self == Sign::Minus && k % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(mut n: u64) -> u64 {
    assert!(n >= 1, "euler_phi needs n >= 1");
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Dense coefficients of the d-th cyclotomic polynomial, constant term
/// first.  Computed by dividing `x^d - 1` by the product of all `Phi_e`
/// with `e | d`, `e < d`.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn phi_poly(d: u32) -> Vec<i64> {
    assert!(d >= 1, "cyclotomic index must be >= 1");
    // x^d - 1, then strip off Phi_e for every proper divisor e.
    let mut num: Vec<i128> = vec![0; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d % e == 0 {
            let div: Vec<i128> = phi_poly(e).into_iter().map(i128::from).collect();
            num = poly_div_exact(&num, &div);
        }
    }
    num.into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient out of i64 range"))
        .collect()
}

// Exact division of integer polynomials with monic divisor; panics on a
// nonzero remainder, which cannot happen for the cyclotomic recursion.
fn poly_div_exact(num: &[i128], div: &[i128]) -> Vec<i128> {
    let dn = num.len() - 1;
    let dd = div.len() - 1;
    assert!(div[dd] == 1, "divisor must be monic");
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![0i128; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dj) in div.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division left a remainder");
    quot
}

/// Evaluate `Phi_d` at an integer point.
pub fn phi_eval(d: u32, q0: i64) -> BigInt {
    let q = BigInt::from(q0);
    let mut acc = BigInt::zero();
    for &c in phi_poly(d).iter().rev() {
        acc = acc * &q + BigInt::from(c);
    }
    acc
}

/// `c * q^a * prod Phi_d^(m_d)` with all three parts explicit.
///
/// The representation is canonical: `c` is a reduced nonzero rational and
/// the factor map never stores a zero multiplicity, so derived equality is
/// semantic equality.
///
/// # Example
///
/// ```
/// use e6baw::cyclopoly::{CycloProduct, Sign};
///
/// // q^6 - 1 = Phi_1 Phi_2 Phi_3 Phi_6, and it evaluates exactly.
/// let f = CycloProduct::signed_qpow_minus(6, Sign::Plus);
/// assert_eq!(f.factor_mult(3), 1);
/// assert_eq!(f.evaluate(2), num::BigRational::from_integer(63.into()));
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloProduct {
    constant: BigRational,
    qexp: i64,
    factors: BTreeMap<u32, i64>,
}

impl CycloProduct {
    /// The multiplicative identity.
    pub fn one() -> CycloProduct {
        CycloProduct {
            constant: BigRational::one(),
            qexp: 0,
            factors: BTreeMap::new(),
        }
    }

    /// A nonzero rational constant.
    ///
    /// # Panics
    ///
    /// Panics on zero: the factored form has no zero element.
    pub fn constant(c: BigRational) -> CycloProduct {
        assert!(!c.is_zero(), "CycloProduct cannot represent zero");
        CycloProduct {
            constant: c,
            qexp: 0,
            factors: BTreeMap::new(),
        }
    }

    /// Integer constant, with the same nonzero requirement.
    pub fn from_integer(n: i64) -> CycloProduct {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational constant `num/den`.
    pub fn fraction(num: i64, den: i64) -> CycloProduct {
        assert!(den != 0, "denominator must be nonzero");
        Self::constant(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `q^a` for any integer `a`.
    pub fn q_power(a: i64) -> CycloProduct {
        CycloProduct {
            constant: BigRational::one(),
            qexp: a,
            factors: BTreeMap::new(),
        }
    }

    /// `Phi_d^m`.
    pub fn phi(d: u32, m: i64) -> CycloProduct {
        assert!(d >= 1, "cyclotomic index must be >= 1");
        let mut factors = BTreeMap::new();
        if m != 0 {
            factors.insert(d, m);
        }
        CycloProduct {
            constant: BigRational::one(),
            qexp: 0,
            factors,
        }
    }

    /// `q^k - 1` (`sign = Plus`) or `q^k + 1` (`sign = Minus`) as a product
    /// of cyclotomic polynomials: the divisors of `k`, respectively the
    /// divisors of `2k` not dividing `k`.
    ///
    /// The sign convention matches `q^k - eps^k` for split (`Plus`) and
    /// twisted (`Minus`) groups... up to the caller applying `Sign::pow`.
    pub fn signed_qpow_minus(k: u32, sign: Sign) -> CycloProduct {
        assert!(k >= 1, "exponent must be >= 1");
        let mut out = CycloProduct::one();
        match sign {
            Sign::Plus => {
                for d in 1..=k {
                    if k % d == 0 {
                        out *= CycloProduct::phi(d, 1);
                    }
                }
            }
            Sign::Minus => {
                for d in 1..=2 * k {
                    if (2 * k) % d == 0 && k % d != 0 {
                        out *= CycloProduct::phi(d, 1);
                    }
                }
            }
        }
        out
    }

    /// `q^k - s` where `s = sign.as_i64()`, as a convenience wrapper.
    pub fn qpow_minus_sign(k: u32, sign: Sign) -> CycloProduct {
        Self::signed_qpow_minus(k, sign)
    }

    pub fn constant_part(&self) -> &BigRational {
        &self.constant
    }

    pub fn qexp(&self) -> i64 {
        self.qexp
    }

    /// Multiplicity of `Phi_d`, zero when absent.
    pub fn factor_mult(&self, d: u32) -> i64 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    /// The nonzero factor multiplicities, ascending in `d`.
    pub fn factors(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.factors.iter().map(|(&d, &m)| (d, m))
    }

    pub fn is_one(&self) -> bool {
        self.constant.is_one() && self.qexp == 0 && self.factors.is_empty()
    }

    /// Whether the value lies in `Q[q]`: no negative exponent anywhere.
    pub fn is_polynomial(&self) -> bool {
        self.qexp >= 0 && self.factors.values().all(|&m| m >= 0)
    }

    /// Degree as a rational function of `q`:
    /// `a + sum m_d * phi(d)`.
    pub fn poly_degree(&self) -> i64 {
        self.qexp
            + self
                .factors
                .iter()
                .map(|(&d, &m)| m * euler_phi(u64::from(d)) as i64)
                .sum::<i64>()
    }

    /// Multiplicative inverse (the factored forms are a group).
    pub fn inverse(&self) -> CycloProduct {
        CycloProduct {
            constant: self.constant.recip(),
            qexp: -self.qexp,
            factors: self.factors.iter().map(|(&d, &m)| (d, -m)).collect(),
        }
    }

    /// Same value with the constant replaced by its absolute value.
    pub fn abs(&self) -> CycloProduct {
        CycloProduct {
            constant: self.constant.abs(),
            qexp: self.qexp,
            factors: self.factors.clone(),
        }
    }

    /// Exact evaluation at an integer `q0` with `|q0| >= 2`.
    ///
    /// # Panics
    ///
    /// Panics for `|q0| < 2`: at `0, 1, -1` some `Phi_d` vanish and the
    /// negative multiplicities would divide by zero.
    pub fn evaluate(&self, q0: i64) -> BigRational {
        assert!(q0.abs() >= 2, "evaluation needs |q0| >= 2");
        let mut num = self.constant.numer().clone();
        let mut den = self.constant.denom().clone();
        let qpow = BigInt::from(q0).pow(self.qexp.unsigned_abs() as u32);
        if self.qexp >= 0 {
            num *= qpow;
        } else {
            den *= qpow;
        }
        for (&d, &m) in &self.factors {
            let v = phi_eval(d, q0).pow(m.unsigned_abs() as u32);
            if m >= 0 {
                num *= v;
            } else {
                den *= v;
            }
        }
        BigRational::new(num, den)
    }

    /// The substitution `q -> -q`, returned in the same factored shape.
    ///
    /// Cyclotomic polynomials permute under the substitution:
    /// `Phi_1 <-> -Phi_2`, `Phi_d -> Phi_2d` for odd `d >= 3`,
    /// `Phi_d -> Phi_(d/2)` for `d = 2 mod 4`, and `Phi_d` fixed for
    /// `4 | d`.  All signs land in the constant, so the factors stay monic
    /// and `ennola` is an exact involution.
    pub fn ennola(&self) -> CycloProduct {
        let mut constant = self.constant.clone();
        if self.qexp % 2 != 0 {
            constant = -constant;
        }
        let mut factors = BTreeMap::new();
        for (&d, &m) in &self.factors {
            let target = match d {
                1 => 2,
                2 => 1,
                d if d % 2 == 1 => 2 * d,
                d if d % 4 == 2 => d / 2,
                d => d,
            };
            if d <= 2 && m % 2 != 0 {
                constant = -constant;
            }
            *factors.entry(target).or_insert(0) += m;
        }
        factors.retain(|_, m| *m != 0);
        CycloProduct {
            constant,
            qexp: self.qexp,
            factors,
        }
    }

    /// l-adic valuation under a fixed [`ValuationContext`], as a
    /// [`ValuationForm`] `alpha * a + beta`.
    ///
    /// Rules for a prime `l >= 5` with `e` the order of `q` mod `l` and
    /// `a = nu_l(Phi_e(q))`:
    /// `nu_l(Phi_e(q)) = a`; `nu_l(Phi_(e*l^j)(q)) = 1` for `j >= 1`;
    /// every other `Phi_d(q)` and `q` itself are prime to `l`.
    pub fn valuation(&self, ctx: &ValuationContext) -> ValuationForm {
        let mut alpha = 0i64;
        let mut beta = int_val(self.constant.numer(), ctx.l) - int_val(self.constant.denom(), ctx.l);
        for (&d, &m) in &self.factors {
            if d == ctx.e {
                alpha += m;
            } else if d % ctx.e == 0 && is_l_power(u64::from(d / ctx.e), ctx.l) {
                beta += m;
            }
        }
        ValuationForm { alpha, beta }
    }
}

fn int_val(n: &BigInt, l: u64) -> i64 {
    assert!(!n.is_zero());
    let l = BigInt::from(l);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &l).is_zero() {
        n /= &l;
        v += 1;
    }
    v
}

// n == l^j for some j >= 1?
fn is_l_power(mut n: u64, l: u64) -> bool {
    if n < l {
        return false;
    }
    while n % l == 0 {
        n /= l;
    }
    n == 1
}

impl Mul for CycloProduct {
    type Output = CycloProduct;
    fn mul(mut self, rhs: CycloProduct) -> CycloProduct {
        self *= rhs;
        self
    }
}

impl Mul<&CycloProduct> for CycloProduct {
    type Output = CycloProduct;
    fn mul(mut self, rhs: &CycloProduct) -> CycloProduct {
        self *= rhs.clone();
        self
    }
}

impl MulAssign for CycloProduct {
    fn mul_assign(&mut self, rhs: CycloProduct) {
        self.constant *= rhs.constant;
        self.qexp += rhs.qexp;
        for (d, m) in rhs.factors {
            let entry = self.factors.entry(d).or_insert(0);
            *entry += m;
            if *entry == 0 {
                self.factors.remove(&d);
            }
        }
    }
}

impl Div for CycloProduct {
    type Output = CycloProduct;
    fn div(self, rhs: CycloProduct) -> CycloProduct {
        self * rhs.inverse()
    }
}

impl Div<&CycloProduct> for CycloProduct {
    type Output = CycloProduct;
    fn div(self, rhs: &CycloProduct) -> CycloProduct {
        self * rhs.inverse()
    }
}

/// The prime `l` and the multiplicative order `e` of `q` modulo `l`,
/// fixing the meaning of the formal symbol `a = nu_l(Phi_e(q))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationContext {
    pub l: u64,
    pub e: u32,
}

impl ValuationContext {
    /// # Panics
    ///
    /// Panics unless `l` is a prime `>= 5` and `e >= 1`; those are the only
    /// regimes the valuation rules cover.
    pub fn new(l: u64, e: u32) -> ValuationContext {
        assert!(e >= 1, "order e must be >= 1");
        assert!(l >= 5 && is_prime(l), "l must be a prime >= 5");
        ValuationContext { l, e }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// A valuation `alpha * a + beta` linear in the formal symbol
/// `a = nu_l(Phi_e(q)) >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ValuationForm {
    pub alpha: i64,
    pub beta: i64,
}

impl ValuationForm {
    pub fn zero() -> ValuationForm {
        ValuationForm { alpha: 0, beta: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.alpha == 0 && self.beta == 0
    }

    /// Whether `alpha * a + beta >= 1` for every integer `a >= 1`.
    ///
    /// Monotone in `a` when `alpha >= 0`, so the two checks
    /// `alpha >= 0` and `alpha + beta >= 1` decide it.
    pub fn positive_for_all_a(&self) -> bool {
        self.alpha >= 0 && self.alpha + self.beta >= 1
    }

    pub fn sub(&self, other: &ValuationForm) -> ValuationForm {
        ValuationForm {
            alpha: self.alpha - other.alpha,
            beta: self.beta - other.beta,
        }
    }

    pub fn add(&self, other: &ValuationForm) -> ValuationForm {
        ValuationForm {
            alpha: self.alpha + other.alpha,
            beta: self.beta + other.beta,
        }
    }
}

impl fmt::Display for ValuationForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.alpha, self.beta) {
            (0, b) => write!(f, "{b}"),
            (1, 0) => write!(f, "a"),
            (x, 0) => write!(f, "{x}a"),
            (1, b) if b > 0 => write!(f, "a+{b}"),
            (1, b) => write!(f, "a{b}"),
            (x, b) if b > 0 => write!(f, "{x}a+{b}"),
            (x, b) => write!(f, "{x}a{b}"),
        }
    }
}

/// Failures while reading the textual form of a [`CycloProduct`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty cyclotomic product expression")]
    Empty,
    #[error("bad token {0:?} in cyclotomic product")]
    BadToken(String),
    #[error("zero constant in cyclotomic product")]
    ZeroConstant,
}

impl fmt::Display for CycloProduct {
    /// Canonical text: constant first, then `q^a` when `a != 0`, then the
    /// `PHI(d)^m` factors ascending in `d`, all joined by `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rational(f, &self.constant)?;
        if self.qexp != 0 {
            write!(f, "*q^{}", self.qexp)?;
        }
        for (&d, &m) in &self.factors {
            write!(f, "*PHI({d})^{m}")?;
        }
        Ok(())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl FromStr for CycloProduct {
    type Err = ParseError;

    /// Accepts the canonical form plus light sugar: `q` and `PHI(d)` with
    /// an optional `^m`, `(q^k-1)`, `(q^k+1)`, `(q-1)`, `(q+1)` also with
    /// an optional power, and integer or `p/q` rational constants.
    fn from_str(s: &str) -> Result<CycloProduct, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut out = CycloProduct::one();
        for raw in s.split('*') {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(ParseError::BadToken(raw.to_string()));
            }
            out *= parse_token(tok)?;
        }
        Ok(out)
    }
}

fn parse_token(tok: &str) -> Result<CycloProduct, ParseError> {
    let bad = || ParseError::BadToken(tok.to_string());
    // Split off a trailing ^exp unless the caret is inside `q^k` with no
    // parenthesis, i.e. only applies after `)` or `PHI(d)` or bare `q`.
    if let Some(body) = tok.strip_prefix("PHI(") {
        let (d, m) = match body.split_once(')') {
            Some((d, rest)) => {
                let m = parse_power_suffix(rest).ok_or_else(bad)?;
                (d.trim().parse::<u32>().map_err(|_| bad())?, m)
            }
            None => return Err(bad()),
        };
        if d == 0 {
            return Err(bad());
        }
        return Ok(CycloProduct::phi(d, m));
    }
    if let Some(body) = tok.strip_prefix('(') {
        let (inner, rest) = body.split_once(')').ok_or_else(bad)?;
        let m = parse_power_suffix(rest).ok_or_else(bad)?;
        let (k, sign) = parse_qpow_pm(inner.trim()).ok_or_else(bad)?;
        let base = CycloProduct::signed_qpow_minus(k, sign);
        let mut out = CycloProduct::one();
        let pow = if m >= 0 { &base } else { &base.inverse() };
        for _ in 0..m.unsigned_abs() {
            out *= pow.clone();
        }
        return Ok(out);
    }
    if tok == "q" {
        return Ok(CycloProduct::q_power(1));
    }
    if let Some(rest) = tok.strip_prefix("q^") {
        let a = rest.parse::<i64>().map_err(|_| bad())?;
        return Ok(CycloProduct::q_power(a));
    }
    // Rational or integer constant.
    let c = match tok.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(tok.parse::<BigInt>().map_err(|_| bad())?),
    };
    if c.is_zero() {
        return Err(ParseError::ZeroConstant);
    }
    Ok(CycloProduct::constant(c))
}

// "" -> 1, "^m" -> m.
fn parse_power_suffix(rest: &str) -> Option<i64> {
    let rest = rest.trim();
    if rest.is_empty() {
        Some(1)
    } else {
        rest.strip_prefix('^')?.trim().parse().ok()
    }
}

// "q^k-1" / "q^k+1" / "q-1" / "q+1" -> (k, sign).
fn parse_qpow_pm(inner: &str) -> Option<(u32, Sign)> {
    let (head, sign) = if let Some(h) = inner.strip_suffix("-1") {
        (h.trim(), Sign::Plus)
    } else if let Some(h) = inner.strip_suffix("+1") {
        (h.trim(), Sign::Minus)
    } else {
        return None;
    };
    if head == "q" {
        Some((1, sign))
    } else {
        head.strip_prefix("q^")?.trim().parse().ok().map(|k| (k, sign))
    }
}

/// Product over an iterator of factored values.
pub fn product<I: IntoIterator<Item = CycloProduct>>(iter: I) -> CycloProduct {
    iter.into_iter().fold(CycloProduct::one(), |acc, f| acc * f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(phi_poly(1), vec![-1, 1]);
        assert_eq!(phi_poly(2), vec![1, 1]);
        assert_eq!(phi_poly(3), vec![1, 1, 1]);
        assert_eq!(phi_poly(4), vec![1, 0, 1]);
        assert_eq!(phi_poly(6), vec![1, -1, 1]);
        assert_eq!(phi_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(phi_poly(18), vec![1, 0, 0, -1, 0, 0, 1]);
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for d in 1..=40 {
            assert_eq!(phi_poly(d).len() as u64 - 1, euler_phi(u64::from(d)));
        }
    }

    #[test]
    fn coefficients_stay_tiny_below_105() {
        for d in 1..105 {
            assert!(phi_poly(d).iter().all(|c| c.abs() <= 1), "d = {d}");
        }
        // 105 = 3*5*7 is the first index with a coefficient of modulus 2.
        assert!(phi_poly(105).iter().any(|c| c.abs() == 2));
    }

    #[test]
    fn qpow_minus_factorizations() {
        let f = CycloProduct::signed_qpow_minus(6, Sign::Plus);
        assert_eq!(
            f.factors().collect::<Vec<_>>(),
            vec![(1, 1), (2, 1), (3, 1), (6, 1)]
        );
        let g = CycloProduct::signed_qpow_minus(6, Sign::Minus);
        assert_eq!(g.factors().collect::<Vec<_>>(), vec![(4, 1), (12, 1)]);
        // q^1 + 1 is Phi_2 itself.
        let h = CycloProduct::signed_qpow_minus(1, Sign::Minus);
        assert_eq!(h.factors().collect::<Vec<_>>(), vec![(2, 1)]);
    }

    #[test]
    fn evaluation_matches_direct_arithmetic() {
        for q0 in [-5i64, -3, -2, 2, 3, 4, 7] {
            for k in 1..=10u32 {
                let minus = CycloProduct::signed_qpow_minus(k, Sign::Plus);
                let plus = CycloProduct::signed_qpow_minus(k, Sign::Minus);
                let qk = BigInt::from(q0).pow(k);
                assert_eq!(minus.evaluate(q0), BigRational::from_integer(&qk - 1));
                assert_eq!(plus.evaluate(q0), BigRational::from_integer(&qk + 1));
            }
        }
    }

    #[test]
    fn division_cancels_factors() {
        let f = CycloProduct::signed_qpow_minus(12, Sign::Plus);
        let g = CycloProduct::signed_qpow_minus(6, Sign::Plus);
        let h = f / g;
        // (q^12-1)/(q^6-1) = Phi_4 Phi_12 = q^6 + 1.
        assert_eq!(h.factors().collect::<Vec<_>>(), vec![(4, 1), (12, 1)]);
        assert!(h.is_polynomial());
        assert_eq!(h.poly_degree(), 6);
    }

    #[test]
    fn non_polynomial_quotient_detected() {
        let f = CycloProduct::signed_qpow_minus(4, Sign::Plus);
        let g = CycloProduct::signed_qpow_minus(3, Sign::Plus);
        assert!(!(f / g).is_polynomial());
    }

    #[test]
    fn ennola_is_exact_substitution() {
        let f = CycloProduct::fraction(1, 2)
            * CycloProduct::q_power(3)
            * CycloProduct::phi(1, 4)
            * CycloProduct::phi(3, 1)
            * CycloProduct::phi(5, -1)
            * CycloProduct::phi(4, 2)
            * CycloProduct::phi(6, 1);
        for q0 in [-7i64, -2, 2, 3, 5] {
            assert_eq!(f.ennola().evaluate(q0), f.evaluate(-q0), "q0 = {q0}");
        }
        assert_eq!(f.ennola().ennola(), f);
    }

    #[test]
    fn ennola_keeps_factors_monic() {
        // q - 1 = Phi_1 maps to -(q + 1) = -Phi_2; the sign sits in the
        // constant, never in the factor.
        let f = CycloProduct::phi(1, 1);
        let g = f.ennola();
        assert_eq!(g.factor_mult(2), 1);
        assert_eq!(*g.constant_part(), rat(-1, 1));
    }

    #[test]
    fn valuation_rules() {
        let ctx = ValuationContext::new(5, 1);
        // Phi_1 carries the formal a, Phi_5 and Phi_25 carry 1 each,
        // everything else is invisible.
        let f = CycloProduct::phi(1, 3)
            * CycloProduct::phi(5, 2)
            * CycloProduct::phi(25, 1)
            * CycloProduct::phi(2, 9)
            * CycloProduct::phi(10, 4)
            * CycloProduct::q_power(12);
        assert_eq!(f.valuation(&ctx), ValuationForm { alpha: 3, beta: 3 });
        // The constant contributes to beta.
        let g = CycloProduct::fraction(25, 3);
        assert_eq!(g.valuation(&ctx), ValuationForm { alpha: 0, beta: 2 });
        let h = CycloProduct::fraction(1, 5);
        assert_eq!(h.valuation(&ctx), ValuationForm { alpha: 0, beta: -1 });
    }

    #[test]
    fn valuation_against_big_integer_arithmetic() {
        // nu_5 at e = 4: 5 divides Phi_4(q) for q = 2, 3 (order of q mod 5
        // is 4), with a = nu_5(Phi_4(q)).
        let ctx = ValuationContext::new(5, 4);
        let f = CycloProduct::signed_qpow_minus(4, Sign::Plus) * CycloProduct::phi(20, 1);
        for q0 in [2i64, 3] {
            let val = f.evaluate(q0);
            let a = int_val(val.numer(), 5);
            let form = f.valuation(&ctx);
            let expected_a = int_val(&phi_eval(4, q0), 5);
            assert_eq!(a, form.alpha * expected_a + form.beta);
        }
    }

    #[test]
    fn positivity_for_all_a() {
        assert!(ValuationForm { alpha: 0, beta: 1 }.positive_for_all_a());
        assert!(ValuationForm { alpha: 1, beta: 0 }.positive_for_all_a());
        assert!(ValuationForm { alpha: 2, beta: -1 }.positive_for_all_a());
        assert!(!ValuationForm { alpha: 0, beta: 0 }.positive_for_all_a());
        assert!(!ValuationForm { alpha: -1, beta: 5 }.positive_for_all_a());
        assert!(!ValuationForm { alpha: 1, beta: -1 }.positive_for_all_a());
    }

    #[test]
    fn render_parse_round_trip() {
        let f = CycloProduct::fraction(-1, 6)
            * CycloProduct::q_power(7)
            * CycloProduct::phi(1, -2)
            * CycloProduct::phi(8, 1);
        let s = f.to_string();
        assert_eq!(s, "-1/6*q^7*PHI(1)^-2*PHI(8)^1");
        assert_eq!(s.parse::<CycloProduct>().unwrap(), f);
    }

    #[test]
    fn parse_sugar_forms() {
        let f: CycloProduct = "(q^6-1)*(q+1)^2*(q^2+1)".parse().unwrap();
        let g = CycloProduct::signed_qpow_minus(6, Sign::Plus)
            * CycloProduct::phi(2, 2)
            * CycloProduct::phi(4, 1);
        assert_eq!(f, g);
        let h: CycloProduct = "1/2 * q^3 * (q^4-1)^-1".parse().unwrap();
        assert_eq!(
            h,
            CycloProduct::fraction(1, 2) * CycloProduct::q_power(3)
                / CycloProduct::signed_qpow_minus(4, Sign::Plus)
        );
    }

    #[test]
    fn parse_rejects_junk() {
        assert!("".parse::<CycloProduct>().is_err());
        assert!("q^".parse::<CycloProduct>().is_err());
        assert!("PHI(0)".parse::<CycloProduct>().is_err());
        assert!("0".parse::<CycloProduct>().is_err());
        assert!("(q^3-2)".parse::<CycloProduct>().is_err());
        assert!("* q".parse::<CycloProduct>().is_err());
    }

    #[test]
    fn sign_parity() {
        assert_eq!(Sign::Minus.pow(3), Sign::Minus);
        assert_eq!(Sign::Minus.pow(4), Sign::Plus);
        assert_eq!(Sign::Plus.pow(7), Sign::Plus);
    }
}
