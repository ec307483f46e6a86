//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept in a [`BTreeMap`] keyed by exponent vectors under the graded
//! lexicographic order of the declared variable list, so two equal
//! polynomials always have identical structure and print identically.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::int::gcd_all;
use super::KernelError;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.as_ref().to_owned()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self, KernelError> {
        let mut p = Self::zero(vars);
        let idx = p
            .var_index(name)
            .ok_or_else(|| KernelError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(Monomial(e), BigInt::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; like terms
    /// are merged and zero coefficients dropped.
    ///
    /// Panics if an exponent vector has the wrong length.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Self
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Convenience constructor from small coefficients.
    pub fn from_i64_terms<S: AsRef<str>>(vars: &[S], terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            vars,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// Every term has total degree exactly `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn check_same_vars(&self, other: &MultiPoly) {
        assert!(
            self.vars == other.vars,
            "polynomials over different variable lists: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut acc = Self::constant(&self.vars, 1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a point in any commutative ring that contains the
    /// integers.
    pub fn eval<T>(&self, point: &[T]) -> T
    where
        T: Clone + Zero + One + From<BigInt> + for<'a> Mul<&'a T, Output = T>,
    {
        assert_eq!(point.len(), self.vars.len(), "point dimension mismatch");
        let mut powers: Vec<Vec<T>> = point.iter().map(|x| vec![T::one(), x.clone()]).collect();
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw[pw.len() - 1].clone() * &point[i];
                    pw.push(next);
                }
                t = t * &pw[e as usize];
            }
            acc = acc + t;
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`; all images share one variable
    /// list, which becomes the variable list of the result.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_default();
        for img in images {
            assert!(img.vars == target, "substitution images must share variables");
        }
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::constant(&target, 1), p.clone()])
            .collect();
        let mut acc = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = &pw[pw.len() - 1] * &images[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Content (positive gcd of the coefficients) and primitive part; the
    /// sign stays with the primitive part.
    pub fn content_primitive(&self) -> Result<(BigInt, MultiPoly), KernelError> {
        if self.is_zero() {
            return Err(KernelError::ZeroPolynomial);
        }
        let g = gcd_all(self.terms.values());
        Ok((g.clone(), self.div_scalar_exact(&g)))
    }

    /// Content and primitive part with the leading coefficient made positive.
    pub fn normalized_primitive(&self) -> Result<MultiPoly, KernelError> {
        let (_, p) = self.content_primitive()?;
        Ok(match p.leading_term() {
            Some((_, c)) if c.is_negative() => -p,
            _ => p,
        })
    }

    fn div_scalar_exact(&self, g: &BigInt) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / g)).collect(),
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self` over the
    /// integers.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.check_same_vars(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lm)?;
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let term = MultiPoly {
                vars: self.vars.clone(),
                terms: core::iter::once((qm, qc)).collect(),
            };
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Coefficients with respect to variable `idx`, in ascending powers;
    /// each coefficient keeps the full variable list with exponent 0 at `idx`.
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(idx) as usize;
        let mut out = vec![MultiPoly::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[idx] as usize;
            let mut e = m.0.clone();
            e[idx] = 0;
            out[k].terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Re-expresses the polynomial over a larger (or reordered) variable
    /// list containing every current variable.
    pub fn embed<S: AsRef<str>>(&self, vars: &[S]) -> Result<MultiPoly, KernelError> {
        let target: Vec<String> = vars.iter().map(|s| s.as_ref().to_owned()).collect();
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| KernelError::UnknownVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut out = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] = x;
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Drops every variable not in `vars`; fails if a dropped variable occurs.
    pub fn restrict<S: AsRef<str>>(&self, vars: &[S]) -> Result<MultiPoly, KernelError> {
        let keep: Vec<usize> = vars
            .iter()
            .map(|v| {
                self.var_index(v.as_ref())
                    .ok_or_else(|| KernelError::UnknownVariable(v.as_ref().to_owned()))
            })
            .collect::<Result<_, _>>()?;
        for (i, name) in self.vars.iter().enumerate() {
            if !keep.contains(&i) && self.degree_in(i) > 0 {
                return Err(KernelError::VariableInUse(name.clone()));
            }
        }
        let mut out = MultiPoly::zero(vars);
        for (m, c) in &self.terms {
            let e = keep.iter().map(|&i| m.0[i]).collect();
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Same polynomial with variables renamed positionally.
    pub fn rename<S: AsRef<str>>(&self, vars: &[S]) -> MultiPoly {
        assert_eq!(vars.len(), self.vars.len(), "rename needs one name per variable");
        MultiPoly {
            vars: vars.iter().map(|s| s.as_ref().to_owned()).collect(),
            terms: self.terms.clone(),
        }
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_same_vars(rhs);
        let mut out = MultiPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Prints terms from the leading one down, e.g. `m^2 - 9*m*n - n^2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(alloc::format!("{}^{}", self.vars[i], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    const MN: [&str; 2] = ["m", "n"];

    fn p(terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_i64_terms(&MN, terms)
    }

    #[test]
    fn content_primitive_examples() {
        let f = p(&[(&[2, 0], 36), (&[1, 1], -99), (&[0, 2], 81)]);
        let (c, prim) = f.content_primitive().unwrap();
        assert_eq!(c, BigInt::from(9));
        assert_eq!(prim, p(&[(&[2, 0], 4), (&[1, 1], -11), (&[0, 2], 9)]));

        let (c, prim) = MultiPoly::constant(&MN, 5).content_primitive().unwrap();
        assert_eq!(c, BigInt::from(5));
        assert_eq!(prim, MultiPoly::constant(&MN, 1));

        let sum = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let (c, prim) = sum.content_primitive().unwrap();
        assert_eq!(c, BigInt::one());
        assert_eq!(prim, sum);

        let neg = p(&[(&[1, 0], -4), (&[0, 1], 6)]);
        let (c, prim) = neg.content_primitive().unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(prim, p(&[(&[1, 0], -2), (&[0, 1], 3)]));

        assert_eq!(
            MultiPoly::zero(&MN).content_primitive(),
            Err(KernelError::ZeroPolynomial)
        );
    }

    #[test]
    fn graded_lex_display() {
        let f = p(&[(&[0, 2], -1), (&[2, 0], 1), (&[1, 1], -9), (&[0, 0], 7)]);
        assert_eq!(format!("{f}"), "m^2 - 9*m*n - n^2 + 7");
        assert_eq!(format!("{}", MultiPoly::zero(&MN)), "0");
        assert_eq!(format!("{}", MultiPoly::constant(&MN, -3)), "-3");
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let a = p(&[(&[1, 0], 1), (&[0, 1], -2)]);
        let b = p(&[(&[2, 0], 3), (&[0, 0], 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!((&prod + &MultiPoly::constant(&MN, 1)).div_exact(&a), None);
        assert!((&prod - &prod).is_zero());
        assert_eq!(a.pow(3), &(&a * &a) * &a);
    }

    #[test]
    fn eval_and_substitute() {
        let f = p(&[(&[2, 0], 1), (&[1, 1], -9), (&[0, 2], -1)]);
        let v = f.eval(&[BigInt::from(9), BigInt::from(1)]);
        assert_eq!(v, BigInt::from(81 - 81 - 1));
        let xy = ["x", "y"];
        let images = [
            MultiPoly::from_i64_terms(&xy, &[(&[1, 0], 1), (&[0, 1], 1)]),
            MultiPoly::from_i64_terms(&xy, &[(&[1, 0], 1)]),
        ];
        let g = f.substitute(&images);
        // (x+y)^2 - 9(x+y)x - x^2
        let expect = MultiPoly::from_i64_terms(&xy, &[(&[2, 0], -9), (&[1, 1], -7), (&[0, 2], 1)]);
        assert_eq!(g, expect);
    }

    #[test]
    fn embed_restrict_round_trip() {
        let f = p(&[(&[1, 2], 3)]);
        let e = f.embed(&["x", "n", "m"]).unwrap();
        assert_eq!(e.coeff(&[0, 2, 1]), BigInt::from(3));
        assert_eq!(e.restrict(&MN).unwrap(), f);
        assert!(matches!(e.restrict(&["m"]), Err(KernelError::VariableInUse(_))));
    }
}
