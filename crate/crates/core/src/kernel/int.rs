//! Small integer helpers over [`BigInt`].

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Non-negative gcd of a sequence; zero for an empty or all-zero sequence.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(values: I) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    g
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    a.lcm(b)
}

/// Floor of the square root; `None` for negative input.
pub fn isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        None
    } else {
        Some(n.sqrt())
    }
}

/// Square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = isqrt(n)?;
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

pub fn is_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

/// Binomial coefficient as a machine integer, saturating on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Scale a rational vector to coprime integers with the first nonzero entry
/// positive. The zero vector maps to zeros.
pub fn normalize_rational_vector(v: &[BigRational]) -> alloc::vec::Vec<BigInt> {
    let mut den = BigInt::one();
    for x in v {
        den = lcm(&den, x.denom());
    }
    let ints: alloc::vec::Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    normalize_int_vector(ints)
}

/// Divide by the gcd and flip the sign so the first nonzero entry is positive.
pub fn normalize_int_vector(mut v: alloc::vec::Vec<BigInt>) -> alloc::vec::Vec<BigInt> {
    let g = gcd_all(v.iter());
    if g.is_zero() {
        return v;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
    v
}
