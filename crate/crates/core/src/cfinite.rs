//! C-finite sequences represented by rational generating functions.
//!
//! A sequence is C-finite when it satisfies a linear recurrence with constant
//! coefficients, equivalently when its generating function is `N(t)/D(t)`
//! with `D(0) ≠ 0`. Polynomial expressions in C-finite sequences are again
//! C-finite with a recurrence order bounded in terms of the inputs, so an
//! identity among them is proved by checking finitely many initial terms;
//! [`certify_zero`] does exactly that.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::kernel::int::{binomial, gcd_all};
use crate::kernel::linalg::{solve_consistent, RationalMatrix};
use crate::kernel::{MultiPoly, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CFiniteError {
    #[error("denominator vanishes at t = 0")]
    PoleAtOrigin,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("no recurrence of admissible order fits the data")]
    GuessFailed,
    #[error("reconstructed generating function has non-integer coefficients")]
    NonIntegralGF,
    #[error("symbol `{0}` is not bound to a sequence")]
    UnboundSymbol(String),
}

/// `num(t)/den(t)` in lowest terms with `den(0) > 0` and the integer content
/// of the pair removed, so `den(0) = 1` whenever that is achievable over the
/// integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalGF {
    num: UniPoly,
    den: UniPoly,
}

impl RationalGF {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, CFiniteError> {
        if den.is_zero() {
            return Err(CFiniteError::ZeroDenominator);
        }
        let (mut num, mut den) = if num.is_zero() {
            (UniPoly::zero(), UniPoly::one())
        } else {
            let g = num.gcd(&den);
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.coeff(0).is_zero() {
            return Err(CFiniteError::PoleAtOrigin);
        }
        if den.coeff(0).is_negative() {
            num = -num;
            den = -den;
        }
        let c = gcd_all(num.coeffs().iter().chain(den.coeffs()));
        if !c.is_one() {
            num = UniPoly::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = UniPoly::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        Ok(RationalGF { num, den })
    }

    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<Self, CFiniteError> {
        Self::new(UniPoly::from_i64(num), UniPoly::from_i64(den))
    }

    pub fn zero() -> Self {
        RationalGF { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn neg(&self) -> RationalGF {
        RationalGF { num: -self.num.clone(), den: self.den.clone() }
    }

    /// Dimension of the smallest shift-invariant sequence space holding this
    /// sequence: `max(deg den, deg num + 1)`.
    pub fn state_dimension(&self) -> usize {
        let d = self.den.degree().unwrap_or(0);
        let n = self.num.degree().map_or(0, |k| k + 1);
        d.max(n)
    }

    /// The first `n` Taylor coefficients.
    pub fn taylor(&self, n: usize) -> Vec<BigRational> {
        taylor_coefficients(self, n)
    }

    /// The first `n` coefficients as integers; fails if any is fractional.
    pub fn integer_terms(&self, n: usize) -> Result<Vec<BigInt>, CFiniteError> {
        if self.den.coeff(0).is_one() {
            return Ok(integer_expansion(&self.num, &self.den, n));
        }
        self.taylor(n)
            .into_iter()
            .map(|q| if q.is_integer() { Ok(q.to_integer()) } else { Err(CFiniteError::NonIntegralGF) })
            .collect()
    }
}

fn integer_expansion(num: &UniPoly, den: &UniPoly, n: usize) -> Vec<BigInt> {
    let d = den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num.coeff(k);
        for (i, di) in d.iter().enumerate().skip(1).take(k) {
            if !di.is_zero() {
                acc -= di * &out[k - i];
            }
        }
        out.push(acc);
    }
    out
}

/// Coefficients of `t^0 .. t^(n-1)` in the power series of `g`.
pub fn taylor_coefficients(g: &RationalGF, n: usize) -> Vec<BigRational> {
    let d0 = g.den.coeff(0);
    if d0.is_one() {
        return integer_expansion(&g.num, &g.den, n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
    }
    let d0 = BigRational::from_integer(d0);
    let d = g.den.coeffs();
    let mut out: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = BigRational::from_integer(g.num.coeff(k));
        for (i, di) in d.iter().enumerate().skip(1).take(k) {
            if !di.is_zero() {
                acc -= BigRational::from_integer(di.clone()) * &out[k - i];
            }
        }
        out.push(acc / &d0);
    }
    out
}

/// `s(n+r) = e₁·s(n+r-1) + … + e_r·s(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<BigRational>,
}

impl Recurrence {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Recurrence { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `1 - e₁t - … - e_r t^r`, if every coefficient is an integer.
    pub fn denominator(&self) -> Option<UniPoly> {
        let mut d = vec![BigInt::one()];
        for e in &self.coeffs {
            if !e.is_integer() {
                return None;
            }
            d.push(-e.to_integer());
        }
        Some(UniPoly::new(d))
    }
}

/// Smallest-order recurrence (order ≤ `max_order`) satisfied by `terms`.
///
/// Order `r` is only considered when the data gives at least one equation
/// beyond the `r` unknowns, i.e. `terms.len() ≥ 2r + 1`.
pub fn guess_recurrence(terms: &[BigRational], max_order: usize) -> Option<Recurrence> {
    guess_joint_recurrence(&[terms], max_order)
}

/// Smallest-order recurrence satisfied simultaneously by every sequence.
///
/// Order `r` needs each sequence longer than `r` and at least `r + 1`
/// equations in total.
pub fn guess_joint_recurrence(seqs: &[&[BigRational]], max_order: usize) -> Option<Recurrence> {
    if seqs.is_empty() || seqs.iter().any(|s| s.is_empty()) {
        return None;
    }
    for r in 1..=max_order {
        if seqs.iter().any(|s| s.len() <= r) {
            break;
        }
        let equations: usize = seqs.iter().map(|s| s.len() - r).sum();
        if equations < r + 1 {
            break;
        }
        let mut rows = Vec::with_capacity(equations);
        let mut rhs = Vec::with_capacity(equations);
        for s in seqs {
            for n in 0..s.len() - r {
                rows.push((1..=r).map(|i| s[n + r - i].clone()).collect());
                rhs.push(s[n + r].clone());
            }
        }
        let a = RationalMatrix::from_rows(rows).expect("rows have equal length");
        if let Some(x) = solve_consistent(&a, &rhs) {
            return Some(Recurrence::new(x));
        }
    }
    None
}

/// Generating function whose expansion starts with `terms`, built from a
/// known recurrence: denominator `1 - Σ eᵢtⁱ`, numerator the truncation of
/// `denominator × series` below degree `r`.
pub fn gf_from_recurrence(rec: &Recurrence, terms: &[BigInt]) -> Result<RationalGF, CFiniteError> {
    let den = rec.denominator().ok_or(CFiniteError::NonIntegralGF)?;
    let series = UniPoly::new(terms.iter().take(rec.order()).cloned().collect());
    let num = (&den * &series).truncate(rec.order());
    RationalGF::new(num, den)
}

/// Reconstructs a generating function from initial terms by guessing a
/// recurrence of order at most `max_order`. The result reproduces every
/// input term.
pub fn seq_from_terms(terms: &[BigInt], max_order: usize) -> Result<RationalGF, CFiniteError> {
    let q: Vec<BigRational> = terms.iter().cloned().map(BigRational::from_integer).collect();
    let rec = guess_recurrence(&q, max_order).ok_or(CFiniteError::GuessFailed)?;
    let gf = gf_from_recurrence(&rec, terms)?;
    if gf.integer_terms(terms.len())? != terms {
        return Err(CFiniteError::GuessFailed);
    }
    Ok(gf)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    /// First index at which the expression is nonzero.
    Refuted { witness: usize },
}

/// Outcome of a finite check over indices `0..bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub bound: usize,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }
}

/// Number of initial terms whose vanishing proves that a polynomial of
/// degree `degree` in sequences living in a shift-invariant space of
/// dimension `dim` vanishes identically, when the expression may also carry
/// a constant multiple of `(-1)ⁿ`.
///
/// Products of `k` such sequences span a space of dimension at most
/// `C(dim+k-1, k)`; summing over `k ≤ degree` gives `C(dim+degree, degree)`.
/// The `+ 2` covers adjoining the constant and alternating targets.
pub fn certification_bound(dim: usize, degree: u32) -> usize {
    binomial(dim + degree as usize, degree as usize).saturating_add(2)
}

/// Proves or refutes `expr ≡ 0` where every variable of `expr` except
/// `sign_symbol` is bound to a sequence and `sign_symbol` stands for `(-1)ⁿ`.
///
/// The check runs over `n = 0 .. B-1` with `B` from [`certification_bound`];
/// when the sign symbol multiplies a non-constant polynomial the bound is
/// widened by the dimension of that part.
pub fn certify_zero(
    expr: &MultiPoly,
    bindings: &[(&str, &RationalGF)],
    sign_symbol: Option<&str>,
) -> Result<Certificate, CFiniteError> {
    let sign_idx = sign_symbol.and_then(|s| expr.var_index(s));
    let mut slots: Vec<Option<&RationalGF>> = vec![None; expr.vars().len()];
    for (i, name) in expr.vars().iter().enumerate() {
        if Some(i) == sign_idx || expr.degree_in(i) == 0 {
            continue;
        }
        let gf = bindings
            .iter()
            .find(|(s, _)| s == name)
            .map(|(_, g)| *g)
            .ok_or_else(|| CFiniteError::UnboundSymbol(name.to_string()))?;
        slots[i] = Some(gf);
    }

    let mut lcm = UniPoly::one();
    let mut dim = 0usize;
    for gf in slots.iter().flatten() {
        lcm = lcm.lcm(gf.den());
        dim = dim.max(gf.num().degree().map_or(0, |k| k + 1));
    }
    dim = dim.max(lcm.degree().unwrap_or(0));

    // Degree ignoring the sign symbol, and degree of the part multiplied by
    // an odd power of it.
    let mut degree = 0u32;
    let mut odd_degree: Option<u32> = None;
    for (m, _) in expr.terms() {
        let e = m.exponents();
        let s = sign_idx.map_or(0, |i| e[i]);
        let d = m.degree() - s;
        degree = degree.max(d);
        if s % 2 == 1 {
            odd_degree = Some(odd_degree.map_or(d, |o| o.max(d)));
        }
    }
    let mut bound = certification_bound(dim, degree);
    if let Some(od) = odd_degree.filter(|&d| d > 0) {
        bound = bound.saturating_add(binomial(dim + od as usize, od as usize));
    }

    let series: Vec<Option<Vec<BigRational>>> =
        slots.iter().map(|s| s.map(|g| taylor_coefficients(g, bound))).collect();
    for n in 0..bound {
        let point: Vec<BigRational> = (0..expr.vars().len())
            .map(|i| {
                if Some(i) == sign_idx {
                    let s = if n % 2 == 0 { 1 } else { -1 };
                    BigRational::from_integer(BigInt::from(s))
                } else {
                    series[i].as_ref().map_or_else(BigRational::zero, |v| v[n].clone())
                }
            })
            .collect();
        if !expr.eval(&point).is_zero() {
            return Ok(Certificate { bound, verdict: Verdict::Refuted { witness: n } });
        }
    }
    Ok(Certificate { bound, verdict: Verdict::Certified })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn qs(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn bis(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_series() {
        let g = RationalGF::from_i64(&[1], &[1, -1]).unwrap();
        assert_eq!(g.taylor(5), qs(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn long_division_on_cubic_denominator() {
        let g = RationalGF::from_i64(&[1, 53, 9], &[1, -82, -82, 1]).unwrap();
        // 1; 53 + 82 = 135; 9 + 82·135 + 82·1 = 11161
        assert_eq!(g.taylor(3), qs(&[1, 135, 11161]));
    }

    #[test]
    fn pole_at_origin() {
        assert_eq!(RationalGF::from_i64(&[1], &[0, 1]), Err(CFiniteError::PoleAtOrigin));
        assert_eq!(RationalGF::from_i64(&[1], &[]), Err(CFiniteError::ZeroDenominator));
    }

    #[test]
    fn normalization() {
        // t/(t - t^2) reduces to 1/(1 - t)
        let g = RationalGF::from_i64(&[0, 1], &[0, 1, -1]).unwrap();
        assert_eq!(g, RationalGF::from_i64(&[1], &[1, -1]).unwrap());
        let g = RationalGF::from_i64(&[-2], &[-2, 4]).unwrap();
        assert_eq!(g.num().coeffs(), bis(&[1]).as_slice());
        assert_eq!(g.den().coeffs(), bis(&[1, -2]).as_slice());
        // content that cannot be cleared keeps den(0) > 1
        let g = RationalGF::from_i64(&[1], &[2, 1]).unwrap();
        assert_eq!(g.taylor(2), vec![BigRational::new(1.into(), 2.into()), BigRational::new((-1).into(), 4.into())]);
        assert_eq!(g.integer_terms(2), Err(CFiniteError::NonIntegralGF));
    }

    #[test]
    fn guess_examples() {
        let r = guess_recurrence(&qs(&[0, 1, 9, 82, 747, 6805]), 3).unwrap();
        assert_eq!(r.coeffs(), qs(&[9, 1]).as_slice());
        let r = guess_recurrence(&qs(&[1, 1, 1, 1, 1, 1]), 2).unwrap();
        assert_eq!(r.coeffs(), qs(&[1]).as_slice());
        assert_eq!(guess_recurrence(&qs(&[1, 2, 4, 9, 17, 35, 60]), 2), None);
    }

    #[test]
    fn seq_from_terms_examples() {
        let g = seq_from_terms(&bis(&[0, 1, 9, 82, 747]), 3).unwrap();
        assert_eq!(g, RationalGF::from_i64(&[0, 1], &[1, -9, -1]).unwrap());
        let g = seq_from_terms(&bis(&[1, 1, 1, 1]), 3).unwrap();
        assert_eq!(g, RationalGF::from_i64(&[1], &[1, -1]).unwrap());
        assert_eq!(seq_from_terms(&bis(&[1]), 3), Err(CFiniteError::GuessFailed));
    }

    #[test]
    fn certify_identically_zero() {
        let v = ["A"];
        let a = MultiPoly::var(&v, "A").unwrap();
        let e = &a - &a;
        let g = RationalGF::from_i64(&[3, 1], &[1, -5, 2]).unwrap();
        let c = certify_zero(&e, &[("A", &g)], None).unwrap();
        assert!(c.is_certified());
    }

    #[test]
    fn unbound_symbol() {
        let v = ["A", "B"];
        let e = MultiPoly::var(&v, "B").unwrap();
        let g = RationalGF::from_i64(&[1], &[1, -1]).unwrap();
        assert_eq!(
            certify_zero(&e, &[("A", &g)], None),
            Err(CFiniteError::UnboundSymbol("B".into()))
        );
    }

    #[test]
    fn sign_times_polynomial_widens_bound() {
        // σ·A - (-1)^n·A is zero; the odd part has degree 1.
        let v = ["A", "s"];
        let e = MultiPoly::from_i64_terms(&v, &[(&[1, 1], 1), (&[1, 1], -1)]);
        let g = RationalGF::from_i64(&[1], &[1, -2]).unwrap();
        assert!(certify_zero(&e, &[("A", &g)], Some("s")).unwrap().is_certified());
        let e = MultiPoly::from_i64_terms(&v, &[(&[1, 1], 1)]);
        let c = certify_zero(&e, &[("A", &g)], Some("s")).unwrap();
        assert_eq!(c.bound, certification_bound(1, 1) + 2);
        assert_eq!(c.verdict, Verdict::Refuted { witness: 0 });
    }
}
