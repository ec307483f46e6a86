//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's series or evaluation code.
#![allow(dead_code)]

use cubeforge_core::cfinite::RationalGF;
use cubeforge_core::kernel::MultiPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn bis(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// First `count` coefficients of `num/den` by the recurrence
/// `den[0]·a(n) = num[n] - Σ den[i]·a(n-i)`; panics on a non-integral term.
pub fn expand(num: &[BigInt], den: &[BigInt], count: usize) -> Vec<BigInt> {
    let d0 = &den[0];
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let mut acc = num.get(n).cloned().unwrap_or_else(BigInt::zero);
        for i in 1..den.len().min(n + 1) {
            acc -= &den[i] * &out[n - i];
        }
        assert!((&acc % d0).is_zero(), "non-integral series");
        out.push(acc / d0);
    }
    out
}

pub fn expand_i64(num: &[i64], den: &[i64], count: usize) -> Vec<BigInt> {
    expand(&bis(num), &bis(den), count)
}

/// Coefficients of a library generating function, expanded by the oracle.
pub fn terms(g: &RationalGF, count: usize) -> Vec<BigInt> {
    expand(g.num().coeffs(), g.den().coeffs(), count)
}

/// `p` at an integer point, term by term.
pub fn eval_poly(p: &MultiPoly, point: &[BigInt]) -> BigInt {
    let mut total = BigInt::zero();
    for (m, c) in p.terms() {
        let mut t = c.clone();
        for (x, &e) in point.iter().zip(m.exponents()) {
            for _ in 0..e {
                t *= x;
            }
        }
        total += t;
    }
    total
}

/// `p` at a rational point.
pub fn eval_poly_rat(p: &MultiPoly, point: &[BigRational]) -> BigRational {
    let mut total = BigRational::zero();
    for (m, c) in p.terms() {
        let mut t = BigRational::from_integer(c.clone());
        for (x, &e) in point.iter().zip(m.exponents()) {
            for _ in 0..e {
                t *= x;
            }
        }
        total += t;
    }
    total
}

pub fn alternating(n: usize) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn cube(x: &BigInt) -> BigInt {
    x * x * x
}

pub fn is_negative(x: &BigInt) -> bool {
    x.is_negative()
}
