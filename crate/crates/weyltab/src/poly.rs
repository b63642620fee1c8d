//! Dense univariate polynomials with rational coefficients, just enough for
//! interpolation, exact division, and cyclotomic factor stripping.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type RPoly = Vec<BigRational>;

pub fn trim(p: &mut RPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub fn zero() -> RPoly {
    Vec::new()
}

pub fn is_zero(p: &RPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn from_int_coeffs(coeffs: &[i64]) -> RPoly {
    coeffs
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect()
}

pub fn add(a: &RPoly, b: &RPoly) -> RPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &RPoly, b: &RPoly) -> RPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn scale(a: &RPoly, c: &BigRational) -> RPoly {
    let mut out: RPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

pub fn mul(a: &RPoly, b: &RPoly) -> RPoly {
    if is_zero(a) || is_zero(b) {
        return zero();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division; `None` when the remainder is nonzero.
pub fn div_exact(a: &RPoly, b: &RPoly) -> Option<RPoly> {
    let mut rem = a.clone();
    trim(&mut rem);
    let mut d = b.clone();
    trim(&mut d);
    assert!(!d.is_empty(), "division by zero polynomial");
    if rem.is_empty() {
        return Some(zero());
    }
    if rem.len() < d.len() {
        return None;
    }
    let lead = d.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); rem.len() - d.len() + 1];
    while rem.len() >= d.len() {
        let k = rem.len() - d.len();
        let c = rem.last().unwrap() / &lead;
        quot[k] = c.clone();
        for (i, dc) in d.iter().enumerate() {
            let v = dc * &c;
            rem[k + i] -= v;
        }
        debug_assert!(rem.last().unwrap().is_zero());
        rem.pop();
        trim(&mut rem);
    }
    if rem.is_empty() {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

pub fn eval(p: &RPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn eval_int(p: &RPoly, x: i64) -> BigRational {
    eval(p, &BigRational::from_integer(BigInt::from(x)))
}

/// Unique polynomial of degree < points.len() through the given points,
/// built up in Newton form.
pub fn interpolate(points: &[(i64, BigRational)]) -> RPoly {
    let n = points.len();
    assert!(n > 0);
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(BigInt::from(*x)))
        .collect();
    // divided differences
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs: Vec<BigRational> = vec![table[0].clone()];
    for level in 1..n {
        for i in 0..n - level {
            let num = &table[i + 1] - &table[i];
            let den = &xs[i + level] - &xs[i];
            table[i] = num / den;
        }
        table.truncate(n - level);
        coeffs.push(table[0].clone());
    }
    // expand the Newton form to monomial coefficients
    let mut out = zero();
    for k in (0..n).rev() {
        // out = out * (x - x_k) + c_k
        let shifted = mul(&out, &vec![-xs[k].clone(), BigRational::one()]);
        out = add(&shifted, &vec![coeffs[k].clone()]);
    }
    trim(&mut out);
    out
}

pub fn is_integral(p: &RPoly) -> bool {
    p.iter().all(|c| c.is_integer())
}

pub fn is_nonnegative(p: &RPoly) -> bool {
    p.iter().all(|c| !c.is_negative())
}

/// Lowest exponent with nonzero coefficient; panics on the zero polynomial.
pub fn low_degree(p: &RPoly) -> usize {
    p.iter()
        .position(|c| !c.is_zero())
        .expect("zero polynomial has no valuation")
}

/// `x^n p(1/x)`: reverses the coefficient list of a degree-n polynomial.
pub fn reciprocal(p: &RPoly, n: usize) -> RPoly {
    assert!(p.len() <= n + 1);
    let mut out = vec![BigRational::zero(); n + 1];
    for (i, c) in p.iter().enumerate() {
        out[n - i] = c.clone();
    }
    trim(&mut out);
    out
}
