//! Binary quadratic forms `qa·m² + qb·mn + qc·n²` and Pell-like orbits.
//!
//! [`sol_quad`] finds an infinite family of representations `Q(mᵢ, nᵢ) = e`
//! (or `e·(-1)ⁱ`) without any reduction theory: collect small solutions,
//! guess a common linear recurrence for the two coordinate sequences, and
//! certify the resulting generating functions. Candidate solutions come from
//! a brute-force box scan first and, when the orbit grows too fast for the
//! box, from the continued-fraction convergents of the form's slopes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cfinite::{
    certify_zero, gf_from_recurrence, guess_joint_recurrence, CFiniteError, Certificate, RationalGF,
};
use crate::kernel::int::{is_square, isqrt};
use crate::kernel::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuadFormError {
    #[error("all three coefficients are zero")]
    ZeroForm,
    #[error("polynomial is not a homogeneous quadratic in two variables")]
    NotBinaryQuadratic,
    #[error("form is definite (negative discriminant): only finitely many solutions per target")]
    DefiniteForm,
    #[error("no orbit found for any target up to the cap")]
    NoOrbitFound,
    #[error("c0·d1 - c1·d0 = 0: initial vectors are dependent")]
    DegenerateInitialVectors,
    #[error("b must be nonzero")]
    ZeroB,
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error(transparent)]
    CFinite(#[from] CFiniteError),
}

/// `qa·m² + qb·mn + qc·n²`, not identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    qa: BigInt,
    qb: BigInt,
    qc: BigInt,
    disc: BigInt,
}

impl QuadForm {
    pub fn new(qa: BigInt, qb: BigInt, qc: BigInt) -> Result<Self, QuadFormError> {
        if qa.is_zero() && qb.is_zero() && qc.is_zero() {
            return Err(QuadFormError::ZeroForm);
        }
        let disc = &qb * &qb - BigInt::from(4) * &qa * &qc;
        Ok(QuadForm { qa, qb, qc, disc })
    }

    pub fn from_i64(qa: i64, qb: i64, qc: i64) -> Result<Self, QuadFormError> {
        Self::new(qa.into(), qb.into(), qc.into())
    }

    /// Reads a homogeneous quadratic in exactly two variables; the first
    /// variable plays the role of `m`.
    pub fn from_poly(p: &MultiPoly) -> Result<Self, QuadFormError> {
        if p.vars().len() != 2 || !p.is_homogeneous(2) {
            return Err(QuadFormError::NotBinaryQuadratic);
        }
        Self::new(p.coeff(&[2, 0]), p.coeff(&[1, 1]), p.coeff(&[0, 2]))
    }

    pub fn to_poly<S: AsRef<str>>(&self, vars: &[S]) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            [
                (vec![2, 0], self.qa.clone()),
                (vec![1, 1], self.qb.clone()),
                (vec![0, 2], self.qc.clone()),
            ],
        )
    }

    pub fn qa(&self) -> &BigInt {
        &self.qa
    }

    pub fn qb(&self) -> &BigInt {
        &self.qb
    }

    pub fn qc(&self) -> &BigInt {
        &self.qc
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn eval(&self, m: &BigInt, n: &BigInt) -> BigInt {
        &self.qa * m * m + &self.qb * m * n + &self.qc * n * n
    }
}

/// A representation `Q(m, n) = value`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Solution {
    pub m: BigInt,
    pub n: BigInt,
    pub value: BigInt,
}

/// `m > 0`, or `m = 0` and `n > 0`: one representative of `±(m, n)`.
fn in_half_plane(m: &BigInt, n: &BigInt) -> bool {
    m.is_positive() || (m.is_zero() && n.is_positive())
}

/// All `(m, n) ≠ (0, 0)` with `0 ≤ m ≤ bound`, `|n| ≤ bound`, `n > 0` when
/// `m = 0`, and `Q(m, n)` in `targets`; sorted by `m` then `n`.
///
/// For each `m` the admissible `n` are the integer roots of a quadratic, so
/// the scan costs `O(bound)` rather than `O(bound²)`.
pub fn enumerate_solutions(q: &QuadForm, targets: &[BigInt], bound: u64) -> Vec<Solution> {
    let targets: BTreeSet<BigInt> = targets.iter().cloned().collect();
    let mut out = Vec::new();
    let (Some(lo_t), Some(hi_t)) = (targets.first(), targets.last()) else {
        return out;
    };
    let bound_i = BigInt::from(bound);
    let push = |out: &mut Vec<Solution>, m: &BigInt, n: BigInt| {
        if n.abs() <= bound_i && in_half_plane(m, &n) {
            let value = q.eval(m, &n);
            out.push(Solution { m: m.clone(), n, value });
        }
    };
    let four_qc = BigInt::from(4) * &q.qc;
    let two_qc = BigInt::from(2) * &q.qc;
    let (lo, hi) = if four_qc.is_positive() {
        (&four_qc * lo_t, &four_qc * hi_t)
    } else {
        (&four_qc * hi_t, &four_qc * lo_t)
    };
    for mi in 0..=bound {
        let m = BigInt::from(mi);
        if q.qc.is_zero() {
            let qbm = &q.qb * &m;
            let qam2 = &q.qa * &m * &m;
            if qbm.is_zero() {
                if targets.contains(&qam2) {
                    let start = if mi == 0 { 1 } else { -(bound as i64) };
                    for n in start..=bound as i64 {
                        push(&mut out, &m, BigInt::from(n));
                    }
                }
                continue;
            }
            for e in &targets {
                let (nq, r) = (e - &qam2).div_rem(&qbm);
                if r.is_zero() {
                    push(&mut out, &m, nq);
                }
            }
            continue;
        }
        // qc·n² + qb·m·n + (qa·m² - e) = 0  ⇔  s² = Δm² + 4qc·e, n = (-qb·m ± s)/(2qc)
        let base = &q.disc * &m * &m;
        let top = &base + &hi;
        let Some(s_hi) = isqrt(&top) else { continue };
        let low = &base + &lo;
        let s_lo = if low.is_positive() {
            let r = isqrt(&low).unwrap();
            if &r * &r == low { r } else { r + 1 }
        } else {
            BigInt::zero()
        };
        let mut s = s_lo;
        let qbm = &q.qb * &m;
        while s <= s_hi {
            let val = &s * &s - &base;
            let (e, r) = val.div_rem(&four_qc);
            if r.is_zero() && targets.contains(&e) {
                for num in [-&qbm + &s, -&qbm - &s] {
                    let (n, r2) = num.div_rem(&two_qc);
                    if r2.is_zero() {
                        push(&mut out, &m, n);
                    }
                    if s.is_zero() {
                        break;
                    }
                }
            }
            s += 1;
        }
    }
    out.sort_by(|a, b| (&a.m, &a.n).cmp(&(&b.m, &b.n)));
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitKind {
    /// `Q(mᵢ, nᵢ) = e` for every `i`.
    Constant,
    /// `Q(mᵢ, nᵢ) = e·(-1)ⁱ`.
    Alternating,
}

/// Where the orbit's seed points came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitSource {
    Box,
    Convergents,
}

/// Coordinate generating functions of a certified family of representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellOrbit {
    pub form: QuadForm,
    pub gf_m: RationalGF,
    pub gf_n: RationalGF,
    pub target: BigInt,
    pub kind: OrbitKind,
    pub certificate: Certificate,
    pub source: OrbitSource,
}

impl PellOrbit {
    /// Order of the shared recurrence.
    pub fn order(&self) -> usize {
        self.gf_m.den().degree().unwrap_or(0)
    }

    /// The first `count` coefficient pairs.
    pub fn pairs(&self, count: usize) -> Vec<(BigInt, BigInt)> {
        let ms = self.gf_m.integer_terms(count).expect("orbit series are integral");
        let ns = self.gf_n.integer_terms(count).expect("orbit series are integral");
        ms.into_iter().zip(ns).collect()
    }

    /// `target` or `target·(-1)ⁱ`.
    pub fn value_at(&self, i: usize) -> BigInt {
        match self.kind {
            OrbitKind::Alternating if i % 2 == 1 => -&self.target,
            _ => self.target.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolQuadOptions {
    /// Maximum recurrence order tried by the guesser.
    pub guess_order: usize,
    /// Targets `e` are scanned for `1 ≤ |e| ≤ target_cap`.
    pub target_cap: u64,
    /// Box half-width for the brute-force stage.
    pub bound: u64,
    /// Number of continued-fraction periods collected after the period is
    /// detected.
    pub cf_periods: usize,
    /// Hard cap on the number of convergents per slope.
    pub cf_max_terms: usize,
}

impl Default for SolQuadOptions {
    fn default() -> Self {
        SolQuadOptions { guess_order: 4, target_cap: 30, bound: 2000, cf_periods: 8, cf_max_terms: 600 }
    }
}

const MAX_STRIDE: usize = 6;

/// Finds a certified Pell-like orbit of `q`.
///
/// Targets are scanned by increasing `|e|`; within one `|e|`, constant orbits
/// beat alternating ones, then lower recurrence order wins, then the first
/// candidate in scan order.
pub fn sol_quad(q: &QuadForm, opts: &SolQuadOptions) -> Result<PellOrbit, QuadFormError> {
    if opts.guess_order < 2 {
        return Err(QuadFormError::InvalidParameter("guess order must be at least 2"));
    }
    if q.disc.is_negative() {
        return Err(QuadFormError::DefiniteForm);
    }
    let cap = opts.target_cap;
    let targets: Vec<BigInt> = (1..=cap as i64).flat_map(|e| [BigInt::from(e), BigInt::from(-e)]).collect();
    let mut box_classes: BTreeMap<BigInt, Vec<Solution>> = BTreeMap::new();
    for s in enumerate_solutions(q, &targets, opts.bound) {
        box_classes.entry(s.value.abs()).or_default().push(s);
    }
    let mut cf_lines: Option<Vec<Vec<Solution>>> = None;

    for e in 1..=cap {
        let e = BigInt::from(e);
        if let Some(sols) = box_classes.get(&e) {
            let q1: Vec<Solution> =
                sols.iter().filter(|s| s.m.is_positive() && !s.n.is_negative()).cloned().collect();
            let q4: Vec<Solution> =
                sols.iter().filter(|s| s.m.is_positive() && s.n.is_negative()).cloned().collect();
            if let Some(o) = best_orbit(q, &[q1, q4], opts.guess_order, OrbitSource::Box) {
                return Ok(o);
            }
        }
        if is_square(&q.disc) {
            continue;
        }
        let lines = cf_lines.get_or_insert_with(|| convergent_points(q, opts));
        let lists: Vec<Vec<Solution>> =
            lines.iter().map(|l| l.iter().filter(|s| s.value.abs() == e).cloned().collect()).collect();
        if let Some(o) = best_orbit(q, &lists, opts.guess_order, OrbitSource::Convergents) {
            return Ok(o);
        }
    }
    Err(QuadFormError::NoOrbitFound)
}

fn best_orbit(q: &QuadForm, lists: &[Vec<Solution>], max_order: usize, source: OrbitSource) -> Option<PellOrbit> {
    let mut best: Option<PellOrbit> = None;
    let mut consider = |cand: Vec<Solution>| {
        if cand.len() < 3 {
            return;
        }
        if let Some(o) = orbit_from_points(q, &cand, max_order, source) {
            let better = match &best {
                None => true,
                Some(b) => (o.kind, o.order()) < (b.kind, b.order()),
            };
            if better {
                best = Some(o);
            }
        }
    };
    for list in lists {
        for sub in strided(list) {
            consider(sub);
        }
        for sign in [1, -1] {
            let class: Vec<Solution> =
                list.iter().filter(|s| s.value.signum() == BigInt::from(sign)).cloned().collect();
            for sub in strided(&class) {
                consider(sub);
            }
        }
    }
    best
}

/// The list itself, then every stride-`s` subsequence for `s = 2 ..`.
fn strided(list: &[Solution]) -> Vec<Vec<Solution>> {
    let mut out = Vec::new();
    for s in 1..=MAX_STRIDE {
        if list.len() < 3 * s {
            break;
        }
        for off in 0..s {
            out.push(list.iter().skip(off).step_by(s).cloned().collect());
        }
    }
    out
}

fn orbit_from_points(q: &QuadForm, pts: &[Solution], max_order: usize, source: OrbitSource) -> Option<PellOrbit> {
    let v0 = &pts[0].value;
    let kind = if pts.iter().all(|p| &p.value == v0) {
        OrbitKind::Constant
    } else if pts
        .iter()
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { &p.value == v0 } else { p.value == -v0 })
    {
        OrbitKind::Alternating
    } else {
        return None;
    };
    let ms: Vec<BigInt> = pts.iter().map(|p| p.m.clone()).collect();
    let ns: Vec<BigInt> = pts.iter().map(|p| p.n.clone()).collect();
    let mq: Vec<BigRational> = ms.iter().cloned().map(BigRational::from_integer).collect();
    let nq: Vec<BigRational> = ns.iter().cloned().map(BigRational::from_integer).collect();
    let rec = guess_joint_recurrence(&[&mq, &nq], max_order)?;
    let den = rec.denominator()?;
    let gf_m = gf_from_recurrence(&rec, &ms).ok()?;
    let gf_n = gf_from_recurrence(&rec, &ns).ok()?;
    if gf_m.den() != &den || gf_n.den() != &den {
        return None;
    }
    if gf_m.integer_terms(ms.len()).ok()? != ms || gf_n.integer_terms(ns.len()).ok()? != ns {
        return None;
    }
    let certificate = certify_orbit(q, &gf_m, &gf_n, v0, kind).ok()?;
    if !certificate.is_certified() {
        return None;
    }
    Some(PellOrbit { form: q.clone(), gf_m, gf_n, target: v0.clone(), kind, certificate, source })
}

/// Certifies `Q(M, N) - e·(1 or (-1)ⁿ) ≡ 0` over the orbit sequences.
pub fn certify_orbit(
    q: &QuadForm,
    gf_m: &RationalGF,
    gf_n: &RationalGF,
    target: &BigInt,
    kind: OrbitKind,
) -> Result<Certificate, CFiniteError> {
    let vars = ["M", "N", "s"];
    let form = q.to_poly(&["M", "N"]).embed(&vars).expect("subset of variables");
    let rhs = match kind {
        OrbitKind::Constant => MultiPoly::constant(&vars, target.clone()),
        OrbitKind::Alternating => MultiPoly::var(&vars, "s").unwrap().scale(target),
    };
    certify_zero(&(form - rhs), &[("M", gf_m), ("N", gf_n)], Some("s"))
}

/// Convergents `p/q` of both roots of `qa·x² + qb·x + qc = 0` as points
/// `(m, n) = ±(p, q)`, keeping those with `|Q| ≤ target_cap`.
fn convergent_points(q: &QuadForm, opts: &SolQuadOptions) -> Vec<Vec<Solution>> {
    if q.qa.is_zero() || is_square(&q.disc) {
        return Vec::new();
    }
    let two_a = BigInt::from(2) * &q.qa;
    let cap = BigInt::from(opts.target_cap);
    [(-q.qb.clone(), two_a.clone()), (q.qb.clone(), -two_a)]
        .into_iter()
        .map(|(p0, q0)| {
            let mut line: Vec<Solution> = Vec::new();
            for (p, d) in continued_fraction_convergents(&q.disc, p0, q0, opts) {
                let (m, n) = if p.is_negative() || (p.is_zero() && d.is_negative()) { (-p, -d) } else { (p, d) };
                if m.is_zero() && n.is_zero() {
                    continue;
                }
                let value = q.eval(&m, &n);
                if value.is_zero() || value.abs() > cap {
                    continue;
                }
                let s = Solution { m, n, value };
                if line.last() != Some(&s) {
                    line.push(s);
                }
            }
            line
        })
        .collect()
}

/// Convergents of `(p0 + √d)/q0` for non-square `d` with `q0 | d - p0²`.
fn continued_fraction_convergents(
    d: &BigInt,
    mut p: BigInt,
    mut q: BigInt,
    opts: &SolQuadOptions,
) -> Vec<(BigInt, BigInt)> {
    let root = isqrt(d).expect("discriminant is non-negative");
    let (mut h2, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k2, mut k1) = (BigInt::one(), BigInt::zero());
    let mut seen: BTreeMap<(BigInt, BigInt), usize> = BTreeMap::new();
    let mut limit = opts.cf_max_terms;
    let mut out = Vec::new();
    let mut k = 0;
    while k < limit {
        if let Some(&first) = seen.get(&(p.clone(), q.clone())) {
            let period = k - first;
            limit = limit.min(first + opts.cf_periods * period);
            if k >= limit {
                break;
            }
        } else {
            seen.insert((p.clone(), q.clone()), k);
        }
        let a: BigInt = if q.is_positive() {
            let fl: BigInt = (&p + &root).div_floor(&q);
            fl
        } else {
            let nq: BigInt = -&q;
            let fl: BigInt = (&p + &root).div_floor(&nq);
            -(fl + BigInt::one())
        };
        let h = &a * &h1 + &h2;
        let kk = &a * &k1 + &k2;
        out.push((h.clone(), kk.clone()));
        h2 = core::mem::replace(&mut h1, h);
        k2 = core::mem::replace(&mut k1, kk);
        let np = &a * &q - &p;
        let nq = (d - &np * &np) / &q;
        p = np;
        q = nq;
        k += 1;
    }
    out
}

/// The normalized form of the two-term theorem: with `a(n)`, `b(n)` the
/// expansions of `(c0 + c1·t)/(1 - k·t + t²)` and `(d0 + d1·t)/(1 - k·t + t²)`,
/// `form(a(n), b(n)) = C` for all `n`, where `C = (c0·d1 - c1·d0)²`.
pub fn general_quadform(
    c0: &BigInt,
    c1: &BigInt,
    d0: &BigInt,
    d1: &BigInt,
    k: &BigInt,
) -> Result<(QuadForm, BigInt), QuadFormError> {
    let det = c0 * d1 - c1 * d0;
    if det.is_zero() {
        return Err(QuadFormError::DegenerateInitialVectors);
    }
    let two = BigInt::from(2);
    let xx = d0 * d1 * k + d0 * d0 + d1 * d1;
    let xy = -(c0 * d1 * k + c1 * d0 * k + &two * c0 * d0 + &two * c1 * d1);
    let yy = c0 * c1 * k + c0 * c0 + c1 * c1;
    Ok((QuadForm::new(xx, xy, yy)?, &det * &det))
}

/// Sequences solving `A² - N·B² = 1` from a Pell-type pair `(k, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSpecial {
    /// `(1 - k·t)/(1 - 2k·t + t²)`
    pub gf_a: RationalGF,
    /// `b·t/(1 - 2k·t + t²)`
    pub gf_b: RationalGF,
    /// `N = (k² - 1)/b²`, possibly fractional.
    pub n: BigRational,
}

impl PellSpecial {
    pub fn is_integral(&self) -> bool {
        self.n.is_integer()
    }
}

pub fn pell_special(k: &BigInt, b: &BigInt) -> Result<PellSpecial, QuadFormError> {
    if b.is_zero() {
        return Err(QuadFormError::ZeroB);
    }
    if k.abs() < BigInt::from(2) {
        return Err(QuadFormError::InvalidParameter("|k| must be at least 2"));
    }
    let den = crate::kernel::UniPoly::new(vec![BigInt::one(), -BigInt::from(2) * k, BigInt::one()]);
    let gf_a = RationalGF::new(crate::kernel::UniPoly::new(vec![BigInt::one(), -k]), den.clone())?;
    let gf_b = RationalGF::new(crate::kernel::UniPoly::new(vec![BigInt::zero(), b.clone()]), den)?;
    let n = BigRational::new(k * k - 1, b * b);
    Ok(PellSpecial { gf_a, gf_b, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn sols(v: &[(i64, i64, i64)]) -> Vec<Solution> {
        v.iter().map(|&(m, n, value)| Solution { m: bi(m), n: bi(n), value: bi(value) }).collect()
    }

    fn naive(q: (i64, i64, i64), targets: &[i64], bound: i64) -> Vec<Solution> {
        let mut out = Vec::new();
        for m in 0..=bound {
            for n in -bound..=bound {
                if m == 0 && n <= 0 {
                    continue;
                }
                let v = q.0 * m * m + q.1 * m * n + q.2 * n * n;
                if targets.contains(&v) {
                    out.push(Solution { m: bi(m), n: bi(n), value: bi(v) });
                }
            }
        }
        out
    }

    #[test]
    fn enumerate_pell_two() {
        let q = QuadForm::from_i64(1, 0, -2).unwrap();
        let got: Vec<Solution> = enumerate_solutions(&q, &[bi(1)], 100)
            .into_iter()
            .filter(|s| !s.n.is_negative())
            .collect();
        assert_eq!(got, sols(&[(1, 0, 1), (3, 2, 1), (17, 12, 1), (99, 70, 1)]));
    }

    #[test]
    fn enumerate_hirschhorn_form() {
        let q = QuadForm::from_i64(-1, 9, 1).unwrap();
        let got: Vec<Solution> = enumerate_solutions(&q, &[bi(1), bi(-1)], 100)
            .into_iter()
            .filter(|s| s.m.is_positive() && !s.n.is_negative())
            .collect();
        assert_eq!(got, sols(&[(1, 0, -1), (9, 1, 1), (82, 9, -1)]));
    }

    #[test]
    fn sum_of_two_squares_misses_three() {
        let q = QuadForm::from_i64(1, 0, 1).unwrap();
        assert!(enumerate_solutions(&q, &[bi(3)], 50).is_empty());
    }

    #[test]
    fn enumerate_matches_naive_on_small_forms() {
        let forms = [(1, 0, -2), (-1, 9, 1), (3, 1, -5), (0, 2, 3), (2, 3, 0), (0, 1, 0), (4, 4, 1), (1, 0, 1)];
        let targets = [-7, -3, -1, 0, 1, 2, 5, 12];
        for f in forms {
            let q = QuadForm::from_i64(f.0, f.1, f.2).unwrap();
            let t: Vec<BigInt> = targets.iter().map(|&x| bi(x)).collect();
            assert_eq!(enumerate_solutions(&q, &t, 40), naive(f, &targets, 40), "form {f:?}");
        }
    }

    #[test]
    fn sol_quad_pell_two() {
        let q = QuadForm::from_i64(1, 0, -2).unwrap();
        let opts = SolQuadOptions { guess_order: 3, ..Default::default() };
        let o = sol_quad(&q, &opts).unwrap();
        assert_eq!(o.gf_m, RationalGF::from_i64(&[1, -3], &[1, -6, 1]).unwrap());
        assert_eq!(o.gf_n, RationalGF::from_i64(&[0, 2], &[1, -6, 1]).unwrap());
        assert_eq!(o.target, bi(1));
        assert_eq!(o.kind, OrbitKind::Constant);
    }

    #[test]
    fn sol_quad_hirschhorn() {
        let q = QuadForm::from_i64(-1, 9, 1).unwrap();
        let opts = SolQuadOptions { guess_order: 3, ..Default::default() };
        let o = sol_quad(&q, &opts).unwrap();
        assert_eq!(o.gf_m, RationalGF::from_i64(&[1], &[1, -9, -1]).unwrap());
        assert_eq!(o.gf_n, RationalGF::from_i64(&[0, 1], &[1, -9, -1]).unwrap());
        assert_eq!(o.target, bi(-1));
        assert_eq!(o.kind, OrbitKind::Alternating);
    }

    #[test]
    fn sol_quad_definite() {
        let q = QuadForm::from_i64(1, 0, 1).unwrap();
        assert_eq!(sol_quad(&q, &SolQuadOptions::default()), Err(QuadFormError::DefiniteForm));
    }

    #[test]
    fn sol_quad_needs_convergents_for_large_units() {
        // Δ = 321, fundamental unit trace 430: the box sees too few points.
        let q = QuadForm::from_i64(24, -15, -1).unwrap();
        let o = sol_quad(&q, &SolQuadOptions::default()).unwrap();
        assert_eq!(o.source, OrbitSource::Convergents);
        for (i, (m, n)) in o.pairs(12).iter().enumerate() {
            assert_eq!(q.eval(m, n), o.value_at(i));
        }
    }

    #[test]
    fn general_quadform_examples() {
        let (f, c) = general_quadform(&bi(1), &bi(0), &bi(0), &bi(1), &bi(7)).unwrap();
        assert_eq!(f, QuadForm::from_i64(1, -7, 1).unwrap());
        assert_eq!(c, bi(1));
        let (f, c) = general_quadform(&bi(2), &bi(1), &bi(1), &bi(1), &bi(3)).unwrap();
        assert_eq!(f, QuadForm::from_i64(5, -15, 11).unwrap());
        assert_eq!(c, bi(1));
        assert_eq!(f.eval(&bi(2), &bi(1)), bi(1));
        assert_eq!(f.eval(&bi(7), &bi(4)), bi(1));
        assert_eq!(
            general_quadform(&bi(1), &bi(2), &bi(2), &bi(4), &bi(5)),
            Err(QuadFormError::DegenerateInitialVectors)
        );
    }

    #[test]
    fn pell_special_examples() {
        let p = pell_special(&bi(3), &bi(2)).unwrap();
        assert_eq!(p.n, BigRational::from_integer(bi(2)));
        assert_eq!(p.gf_a.integer_terms(3).unwrap(), vec![bi(1), bi(3), bi(17)]);
        assert_eq!(p.gf_b.integer_terms(3).unwrap(), vec![bi(0), bi(2), bi(12)]);
        let p = pell_special(&bi(2), &bi(1)).unwrap();
        assert_eq!(p.n, BigRational::from_integer(bi(3)));
        assert_eq!(p.gf_a.integer_terms(3).unwrap(), vec![bi(1), bi(2), bi(7)]);
        assert_eq!(p.gf_b.integer_terms(3).unwrap(), vec![bi(0), bi(1), bi(4)]);
        assert_eq!(pell_special(&bi(5), &bi(0)), Err(QuadFormError::ZeroB));
    }
}
