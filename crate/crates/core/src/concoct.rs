//! Starting from the answer: implicit equations of parametrized solution
//! families, cubics with no nontrivial solutions, and integer forms that are
//! constant along tuples of C-finite sequences.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cfinite::{certify_zero, CFiniteError, Certificate, RationalGF};
use crate::kernel::linalg::bareiss_determinant;
use crate::kernel::{rational_nullspace, resultant, KernelError, Monomial, MultiPoly, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConcoctError {
    #[error("parametrization must consist of nonconstant polynomials in two shared variables")]
    BadParametrization,
    #[error("every elimination order produced an identically zero resultant")]
    EliminationCollapse,
    #[error("substitution matrix is singular")]
    SingularSubstitution,
    #[error("expected a polynomial in {0} variables")]
    WrongArity(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("no form of the requested degree vanishes on the sequences")]
    NoForm,
    #[error("only forms without a constant term exist: {}", display_forms(.0))]
    NoTargetedForm(Vec<MultiPoly>),
    #[error("found form failed certification")]
    CertificationFailed,
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    CFinite(#[from] CFiniteError),
}

fn display_forms(forms: &[MultiPoly]) -> String {
    forms.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

const XYZ: [&str; 3] = ["x", "y", "z"];

/// A polynomial `S(x, y, z)` with `S(P, Q, R) ≡ 0`, obtained by eliminating
/// both parameters with resultants. `S` may carry extraneous factors.
pub fn implicitize(p: &MultiPoly, q: &MultiPoly, r: &MultiPoly) -> Result<MultiPoly, ConcoctError> {
    let params = p.vars().to_vec();
    if params.len() != 2
        || q.vars() != params.as_slice()
        || r.vars() != params.as_slice()
        || [p, q, r].iter().any(|f| f.is_constant())
        || params.iter().any(|v| XYZ.contains(&v.as_str()))
    {
        return Err(ConcoctError::BadParametrization);
    }
    let all: Vec<String> = params.iter().cloned().chain(XYZ.iter().map(|s| s.to_string())).collect();
    let lift = |f: &MultiPoly| f.embed(&all).expect("parameters are a subset");
    let eqs: Vec<MultiPoly> = XYZ
        .iter()
        .zip([p, q, r])
        .map(|(v, f)| MultiPoly::var(&all, v).unwrap() - lift(f))
        .collect();
    let images: Vec<MultiPoly> = [
        MultiPoly::var(&params, &params[0]).unwrap(),
        MultiPoly::var(&params, &params[1]).unwrap(),
        p.clone(),
        q.clone(),
        r.clone(),
    ]
    .into();

    let pairings = [((0, 1), (0, 2)), ((0, 1), (1, 2)), ((0, 2), (1, 2))];
    let orders = [(&params[0], &params[1]), (&params[1], &params[0])];
    for (first, second) in orders {
        for &((i1, j1), (i2, j2)) in &pairings {
            let Some(r1) = eliminate(&eqs[i1], &eqs[j1], first) else { continue };
            let Some(r2) = eliminate(&eqs[i2], &eqs[j2], first) else { continue };
            let Some(s) = eliminate(&r1, &r2, second) else { continue };
            if [first, second].iter().any(|v| s.degree_in(s.var_index(v).unwrap()) > 0) {
                continue;
            }
            let s = s.normalized_primitive()?;
            if !s.substitute(&images).is_zero() {
                continue;
            }
            return Ok(s.restrict(&XYZ)?);
        }
    }
    Err(ConcoctError::EliminationCollapse)
}

/// A nonzero consequence of `f = g = 0` free of `var`: the resultant when
/// both involve `var`, otherwise whichever of them already avoids it.
fn eliminate(f: &MultiPoly, g: &MultiPoly, var: &str) -> Option<MultiPoly> {
    let idx = f.var_index(var)?;
    let out = match (f.degree_in(idx), g.degree_in(idx)) {
        (0, _) => f.clone(),
        (_, 0) => g.clone(),
        _ => resultant(f, g, var).ok()?,
    };
    (!out.is_zero()).then_some(out)
}

/// `F(M·(x, y, z))` for a nonsingular integer matrix `M`: a nontrivial
/// solution of the result would give one of `F` after the (invertible)
/// change of variables.
pub fn twist_no_solution(f: &MultiPoly, m: &[[BigInt; 3]; 3]) -> Result<MultiPoly, ConcoctError> {
    if f.vars().len() != 3 {
        return Err(ConcoctError::WrongArity(3));
    }
    let det = bareiss_determinant(m.iter().map(|row| row.to_vec()).collect());
    if det.is_zero() {
        return Err(ConcoctError::SingularSubstitution);
    }
    let vars = f.vars().to_vec();
    let basis: Vec<MultiPoly> = vars.iter().map(|v| MultiPoly::var(&vars, v).unwrap()).collect();
    let images: Vec<MultiPoly> = m
        .iter()
        .map(|row| {
            row.iter()
                .zip(&basis)
                .fold(MultiPoly::zero(&vars), |acc, (c, v)| acc + v.scale(c))
        })
        .collect();
    Ok(f.substitute(&images))
}

/// Right-hand side pattern requested from [`find_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormTarget {
    /// `P(a(n)) = C`.
    Constant,
    /// `P(a(n)) = C·(-1)ⁿ`.
    Alternating,
    /// `P(a(n)) = 0`.
    None,
}

impl FormTarget {
    pub fn as_str(self) -> &'static str {
        match self {
            FormTarget::Constant => "constant",
            FormTarget::Alternating => "alternating",
            FormTarget::None => "none",
        }
    }
}

/// A homogeneous integer form with `form(a₁(n), …, a_d(n)) = c·pattern(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormResult {
    pub degree: u32,
    pub form: MultiPoly,
    pub c: BigInt,
    pub target: FormTarget,
    pub certificate: Certificate,
}

impl FormResult {
    /// `C = 0`: the form vanishes on the sequences.
    pub fn is_homogeneous_vanishing(&self) -> bool {
        self.c.is_zero()
    }

    /// Exponent vectors and coefficients in ascending graded-lex order.
    pub fn coeffs(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.form.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
    }
}

/// Variable names used for forms in `d` sequences.
pub fn form_vars(d: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["X", "Y", "Z", "W"];
    if d <= SHORT.len() {
        SHORT[..d].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=d).map(|i| format!("X{i}")).collect()
    }
}

/// All exponent vectors of total degree `deg` in `d` variables, ascending.
fn monomials(d: usize, deg: u32) -> Vec<Monomial> {
    fn rec(d: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == d {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(d, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, deg, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Finds a degree-`deg` homogeneous form constant (or alternating, or zero)
/// along the given sequences, from the nullspace of an evaluation matrix,
/// and certifies it.
pub fn find_form(seqs: &[RationalGF], deg: u32, target: FormTarget) -> Result<FormResult, ConcoctError> {
    let d = seqs.len();
    if d < 2 {
        return Err(ConcoctError::InvalidParameter("need at least two sequences"));
    }
    if deg < 2 {
        return Err(ConcoctError::InvalidParameter("degree must be at least 2"));
    }
    let vars = form_vars(d);
    // Leading monomials first, so row reduction pivots on them and the
    // vanishing forms come out with small trailing parts.
    let mut monos = monomials(d, deg);
    monos.reverse();
    let rows = monos.len() + 4;
    let values: Vec<Vec<BigRational>> = seqs.iter().map(|g| g.taylor(rows)).collect();
    let with_target = target != FormTarget::None;
    let matrix: Vec<Vec<BigRational>> = (0..rows)
        .map(|n| {
            let point: Vec<BigRational> = values.iter().map(|v| v[n].clone()).collect();
            let mut row: Vec<BigRational> = monos
                .iter()
                .map(|m| {
                    m.exponents()
                        .iter()
                        .zip(&point)
                        .fold(BigRational::one(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
                })
                .collect();
            match target {
                FormTarget::Constant => row.push(BigRational::one()),
                FormTarget::Alternating => {
                    row.push(if n % 2 == 0 { BigRational::one() } else { -BigRational::one() })
                }
                FormTarget::None => {}
            }
            row
        })
        .collect();
    let cols = monos.len() + usize::from(with_target);
    let basis = rational_nullspace(&RationalMatrix::from_rows_with_cols(matrix, cols).unwrap());
    if basis.is_empty() {
        return Err(ConcoctError::NoForm);
    }
    let to_form = |v: &[BigInt]| {
        MultiPoly::from_terms(&vars, monos.iter().zip(v).map(|(m, c)| (m.exponents().to_vec(), c.clone())))
    };

    let chosen = if with_target {
        let mut targeted: Vec<&Vec<BigInt>> = basis.iter().filter(|v| !v[monos.len()].is_zero()).collect();
        if targeted.is_empty() {
            let forms = basis.iter().map(|v| to_form(v).normalized_primitive()).collect::<Result<_, _>>()?;
            return Err(ConcoctError::NoTargetedForm(forms));
        }
        targeted.sort();
        targeted[0].clone()
    } else {
        basis.iter().min().unwrap().clone()
    };
    let mut form = to_form(&chosen[..monos.len()]);
    let mut c = if with_target { -chosen[monos.len()].clone() } else { BigInt::zero() };
    if form.is_zero() {
        return Err(ConcoctError::NoForm);
    }
    // Vanishing forms get a positive leading term; forms with a right-hand
    // side get a positive lowest term, which keeps `C` as observed at n = 0
    // for the usual two-term orbits.
    let flip = if with_target {
        form.terms().next().is_some_and(|(_, k)| k.is_negative())
    } else {
        form.leading_term().is_some_and(|(_, k)| k.is_negative())
    };
    if flip {
        form = -form;
        c = -c;
    }

    let sign_vars: Vec<String> = vars.iter().cloned().chain(["s".to_string()]).collect();
    let lifted = form.embed(&sign_vars)?;
    let rhs = match target {
        FormTarget::Alternating => MultiPoly::var(&sign_vars, "s").unwrap().scale(&c),
        _ => MultiPoly::constant(&sign_vars, c.clone()),
    };
    let bindings: Vec<(&str, &RationalGF)> = vars.iter().map(String::as_str).zip(seqs).collect();
    let certificate = certify_zero(&(lifted - rhs), &bindings, Some("s"))?;
    if !certificate.is_certified() {
        return Err(ConcoctError::CertificationFailed);
    }
    Ok(FormResult { degree: deg, form, c, target, certificate })
}

/// Builds an integer 3×3 matrix from rows of machine integers.
pub fn matrix_from_i64(rows: [[i64; 3]; 3]) -> [[BigInt; 3]; 3] {
    rows.map(|r| r.map(BigInt::from))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mn(terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_i64_terms(&["m", "n"], terms)
    }

    fn xyz(terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_i64_terms(&XYZ, terms)
    }

    fn gf(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::from_i64(num, den).unwrap()
    }

    #[test]
    fn pythagorean_implicitization() {
        let s = implicitize(
            &mn(&[(&[2, 0], 1), (&[0, 2], -1)]),
            &mn(&[(&[1, 1], 2)]),
            &mn(&[(&[2, 0], 1), (&[0, 2], 1)]),
        )
        .unwrap();
        let target = xyz(&[(&[2, 0, 0], 1), (&[0, 2, 0], 1), (&[0, 0, 2], -1)]);
        assert!(s.div_exact(&target).is_some(), "{s}");
    }

    #[test]
    fn second_conic() {
        let s = implicitize(
            &mn(&[(&[2, 0], 2), (&[0, 2], -3)]),
            &mn(&[(&[1, 1], 2)]),
            &mn(&[(&[2, 0], 1), (&[0, 2], 1)]),
        )
        .unwrap();
        let target = xyz(&[(&[2, 0, 0], 4), (&[1, 0, 1], 4), (&[0, 2, 0], 25), (&[0, 0, 2], -24)]);
        assert!(s.div_exact(&target).is_some(), "{s}");
    }

    #[test]
    fn constant_component_rejected() {
        let c = mn(&[(&[0, 0], 3)]);
        let m = mn(&[(&[1, 0], 1)]);
        assert_eq!(implicitize(&c, &m, &m), Err(ConcoctError::BadParametrization));
    }

    #[test]
    fn twist_of_sum_of_cubes() {
        let f = xyz(&[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], 1)]);
        let m = matrix_from_i64([[6, 7, -9], [6, -5, 4], [-8, -3, 3]]);
        let g = twist_no_solution(&f, &m).unwrap();
        let expected = xyz(&[
            (&[3, 0, 0], -80),
            (&[2, 1, 0], -360),
            (&[2, 0, 1], 36),
            (&[1, 2, 0], 1116),
            (&[1, 1, 1], -2556),
            (&[1, 0, 2], 1530),
            (&[0, 3, 0], 191),
            (&[0, 2, 1], -942),
            (&[0, 1, 2], 1380),
            (&[0, 0, 3], -638),
        ]);
        assert_eq!(g, expected);
        let id = matrix_from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(twist_no_solution(&f, &id).unwrap(), f);
        let singular = matrix_from_i64([[1, 2, 3], [1, 2, 3], [0, 0, 1]]);
        assert_eq!(twist_no_solution(&f, &singular), Err(ConcoctError::SingularSubstitution));
    }

    #[test]
    fn quadratic_form_constant() {
        let den = [1, -3, 1];
        let r = find_form(&[gf(&[1], &den), gf(&[0, 1], &den)], 2, FormTarget::Constant).unwrap();
        let v = form_vars(2);
        assert_eq!(r.form, MultiPoly::from_i64_terms(&v, &[(&[2, 0], 1), (&[1, 1], -3), (&[0, 2], 1)]));
        assert_eq!(r.c, BigInt::from(1));
    }

    #[test]
    fn quadratic_form_alternating() {
        let den = [1, -9, -1];
        let r = find_form(&[gf(&[1], &den), gf(&[0, 1], &den)], 2, FormTarget::Alternating).unwrap();
        let v = form_vars(2);
        assert_eq!(r.form, MultiPoly::from_i64_terms(&v, &[(&[2, 0], -1), (&[1, 1], 9), (&[0, 2], 1)]));
        assert_eq!(r.c, BigInt::from(-1));
    }

    #[test]
    fn equal_sequences_only_vanish() {
        let g = gf(&[1], &[1, -3, 1]);
        let Err(ConcoctError::NoTargetedForm(forms)) = find_form(&[g.clone(), g], 2, FormTarget::Constant) else {
            panic!("expected NoTargetedForm");
        };
        let v = form_vars(2);
        let x2_minus_xy = MultiPoly::from_i64_terms(&v, &[(&[2, 0], 1), (&[1, 1], -1)]);
        assert!(forms.contains(&x2_minus_xy), "{forms:?}");
    }

    #[test]
    fn monomial_order() {
        let m = monomials(2, 2);
        let e: Vec<&[u32]> = m.iter().map(|x| x.exponents()).collect();
        assert_eq!(e, vec![&[0, 2][..], &[1, 1], &[2, 0]]);
        assert_eq!(monomials(3, 3).len(), 10);
    }
}
