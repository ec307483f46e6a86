//! From weights `(a, b)` to certified identities
//! `a·A(n)³ + a·B(n)³ + b·C(n)³ = c` (or `c·(-1)ⁿ`).
//!
//! Pipeline: numeric seeds → morph into quadratics `P1..P4` → solve one
//! `Pj(m, n) = e` along a Pell-like orbit → the other three quadratics,
//! evaluated along the orbit, are the sequences of the theorem.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cfinite::{certify_zero, seq_from_terms, CFiniteError, Certificate, RationalGF};
use crate::cubic::{morph, search_quadruples, ParamQuadruple, WeightedQuadruple};
use crate::kernel::int::binomial;
use crate::kernel::{MultiPoly, UniPoly};
use crate::quadform::{sol_quad, OrbitKind, PellOrbit, QuadForm, SolQuadOptions};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ForgeError {
    #[error("weights must be nonzero")]
    ZeroWeight,
    #[error("no nontrivial seed quadruple within the search bound")]
    EmptySeedSet,
    #[error("malformed theorem: {0}")]
    MalformedTheorem(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForgeOptions {
    pub search_bound: u32,
    pub guess_order: usize,
    pub target_cap: u64,
    pub max_theorems: usize,
    /// Box half-width handed to [`sol_quad`].
    pub pell_bound: u64,
    /// Seeds supplied by the caller in addition to the searched ones.
    pub extra_seeds: Vec<WeightedQuadruple>,
}

impl Default for ForgeOptions {
    fn default() -> Self {
        ForgeOptions {
            search_bound: 12,
            guess_order: 4,
            target_cap: 30,
            max_theorems: 10,
            pell_bound: 2000,
            extra_seeds: Vec::new(),
        }
    }
}

/// How a theorem was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub seed: WeightedQuadruple,
    pub param: ParamQuadruple,
    pub orbit: PellOrbit,
    /// Index (0-based) of the quadratic that was solved.
    pub solved_index: usize,
}

/// `a·A³ + a·B³ + b·C³ = c`, or `= c·(-1)ⁿ` when `rhs_kind` is alternating,
/// where `A, B, C` are the coefficient sequences of `gfs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicTheorem {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub rhs_kind: OrbitKind,
    pub gfs: [RationalGF; 3],
    pub provenance: Option<Provenance>,
    pub certificate: Certificate,
}

impl CubicTheorem {
    /// Builds a theorem from its statement alone and certifies it.
    pub fn new(
        a: BigInt,
        b: BigInt,
        c: BigInt,
        rhs_kind: OrbitKind,
        gfs: [RationalGF; 3],
    ) -> Result<Self, ForgeError> {
        let mut thm = CubicTheorem {
            a,
            b,
            c,
            rhs_kind,
            gfs,
            provenance: None,
            certificate: Certificate { bound: 0, verdict: crate::cfinite::Verdict::Certified },
        };
        thm.certificate = certify_theorem(&thm)?;
        Ok(thm)
    }

    /// Left side minus right side at index `n`, by exact expansion.
    pub fn residual_at(&self, n: usize) -> Result<BigInt, CFiniteError> {
        let mut v = Vec::with_capacity(3);
        for g in &self.gfs {
            v.push(g.integer_terms(n + 1)?.pop().unwrap());
        }
        let cube = |x: &BigInt| x * x * x;
        let lhs = &self.a * (cube(&v[0]) + cube(&v[1])) + &self.b * cube(&v[2]);
        let rhs = match self.rhs_kind {
            OrbitKind::Alternating if n % 2 == 1 => -&self.c,
            _ => self.c.clone(),
        };
        Ok(lhs - rhs)
    }
}

/// Result of a forge run; `theorems` may be empty, in which case
/// `diagnostics` says why each branch failed.
#[derive(Clone, Debug, Default)]
pub struct ForgeReport {
    pub theorems: Vec<CubicTheorem>,
    pub diagnostics: Vec<String>,
}

const SEQ_VARS: [&str; 4] = ["A", "B", "C", "s"];

fn identity_expr(
    vars: &[&str],
    a: &BigInt,
    b: &BigInt,
    parts: [&MultiPoly; 3],
    c: &BigInt,
    kind: OrbitKind,
) -> MultiPoly {
    let cube = |p: &MultiPoly| p.pow(3);
    let lhs = (cube(parts[0]) + cube(parts[1])).scale(a) + cube(parts[2]).scale(b);
    let rhs = match kind {
        OrbitKind::Constant => MultiPoly::constant(vars, c.clone()),
        OrbitKind::Alternating => MultiPoly::var(vars, "s").unwrap().scale(c),
    };
    lhs - rhs
}

/// Re-certifies a theorem from its statement: checks the identity on as many
/// initial terms as the generating functions' shared state space requires.
pub fn certify_theorem(thm: &CubicTheorem) -> Result<Certificate, ForgeError> {
    if thm.a.is_zero() || thm.b.is_zero() {
        return Err(ForgeError::MalformedTheorem("zero weight".into()));
    }
    if thm.c.is_zero() {
        return Err(ForgeError::MalformedTheorem("zero right-hand side".into()));
    }
    let v = |name: &str| MultiPoly::var(&SEQ_VARS, name).unwrap();
    let (pa, pb, pc) = (v("A"), v("B"), v("C"));
    let expr = identity_expr(&SEQ_VARS, &thm.a, &thm.b, [&pa, &pb, &pc], &thm.c, thm.rhs_kind);
    let [ga, gb, gc] = &thm.gfs;
    certify_zero(&expr, &[("A", ga), ("B", gb), ("C", gc)], Some("s"))
        .map_err(|e| ForgeError::MalformedTheorem(format!("{e}")))
}

/// Runs the whole pipeline for weights `(a, b)`.
pub fn forge(a: &BigInt, b: &BigInt, opts: &ForgeOptions) -> Result<ForgeReport, ForgeError> {
    if a.is_zero() || b.is_zero() {
        return Err(ForgeError::ZeroWeight);
    }
    let mut report = ForgeReport::default();
    let mut seeds = search_quadruples(a, b, opts.search_bound);
    for s in &opts.extra_seeds {
        if s.a() != a || s.b() != b {
            report.diagnostics.push(format!("seed {s}: weights do not match ({a}, {b})"));
        } else if s.is_trivial() {
            report.diagnostics.push(format!("seed {s}: trivial"));
        } else if !seeds.contains(s) && !seeds.contains(&s.negated()) {
            seeds.push(s.clone());
        }
    }
    if seeds.is_empty() {
        return Err(ForgeError::EmptySeedSet);
    }

    let quad_opts = SolQuadOptions {
        guess_order: opts.guess_order,
        target_cap: opts.target_cap,
        bound: opts.pell_bound,
        ..SolQuadOptions::default()
    };
    let mut orbits: BTreeMap<QuadForm, Option<PellOrbit>> = BTreeMap::new();
    let mut found: BTreeMap<DedupKey, CubicTheorem> = BTreeMap::new();
    for seed in &seeds {
        let param = match morph(seed) {
            Ok(p) => p,
            Err(e) => {
                report.diagnostics.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        for j in 0..4 {
            let form = match QuadForm::from_poly(&param.polys[j]) {
                Ok(f) => f,
                Err(e) => {
                    report.diagnostics.push(format!("seed {seed}, P{}: {e}", j + 1));
                    continue;
                }
            };
            let orbit = orbits.entry(form.clone()).or_insert_with(|| sol_quad(&form, &quad_opts).ok());
            let Some(orbit) = orbit.clone() else {
                report.diagnostics.push(format!("seed {seed}, P{}: no orbit for {}", j + 1, param.polys[j]));
                continue;
            };
            match theorem_from_orbit(seed, &param, j, orbit) {
                Ok(thm) => {
                    found.entry(dedup_key(&thm)).or_insert(thm);
                }
                Err(msg) => report.diagnostics.push(format!("seed {seed}, P{}: {msg}", j + 1)),
            }
        }
    }
    let mut theorems: Vec<CubicTheorem> = found.into_values().collect();
    theorems.sort_by_key(sort_key);
    theorems.truncate(opts.max_theorems);
    if theorems.is_empty() {
        report.diagnostics.push("no theorem certified".into());
    }
    report.theorems = theorems;
    Ok(report)
}

fn theorem_from_orbit(
    seed: &WeightedQuadruple,
    param: &ParamQuadruple,
    j: usize,
    orbit: PellOrbit,
) -> Result<CubicTheorem, String> {
    // The solved quadratic leaves the equation; the pair that keeps both of
    // its members supplies the theorem's `a` weight.
    let (ta, tb, idx) = if j >= 2 {
        (param.a.clone(), param.b.clone(), [0, 1, 5 - j])
    } else {
        (param.b.clone(), param.a.clone(), [2, 3, 1 - j])
    };
    let e = &orbit.target;
    let c = -(param.weight(j) * e * e * e);

    // Exact identity over the orbit: degree 6 in the orbit coordinates.
    let orbit_vars = ["M", "N", "s"];
    let lifted: Vec<MultiPoly> = idx
        .iter()
        .map(|&i| param.polys[i].rename(&["M", "N"]).embed(&orbit_vars).unwrap())
        .collect();
    let expr = identity_expr(&orbit_vars, &ta, &tb, [&lifted[0], &lifted[1], &lifted[2]], &c, orbit.kind);
    let orbit_cert = certify_zero(&expr, &[("M", &orbit.gf_m), ("N", &orbit.gf_n)], Some("s"))
        .map_err(|e| format!("{e}"))?;
    if !orbit_cert.is_certified() {
        return Err("orbit identity refuted".into());
    }

    let r = orbit.order();
    let cap = binomial(r + 1, 2) + 1;
    let len = (2 * cap + 2).max(DEDUP_TERMS);
    let pairs = orbit.pairs(len);
    let mut gfs = Vec::with_capacity(3);
    for &i in &idx {
        let terms: Vec<BigInt> = pairs.iter().map(|(m, n)| param.polys[i].eval(&[m.clone(), n.clone()])).collect();
        let gf = seq_from_terms(&terms, cap).map_err(|e| format!("{e}"))?;
        if gf.is_zero() {
            return Err("a sequence vanishes identically".into());
        }
        gfs.push(gf);
    }
    let gfs: [RationalGF; 3] = gfs.try_into().unwrap();
    let mut thm = CubicTheorem {
        a: ta,
        b: tb,
        c,
        rhs_kind: orbit.kind,
        gfs,
        provenance: Some(Provenance { seed: seed.clone(), param: param.clone(), orbit, solved_index: j }),
        certificate: orbit_cert,
    };
    canonicalize(&mut thm);
    thm.certificate = certify_theorem(&thm).map_err(|e| format!("{e}"))?;
    if !thm.certificate.is_certified() {
        return Err("reconstructed theorem refuted".into());
    }
    Ok(thm)
}

const DEDUP_TERMS: usize = 12;

fn leading_terms(g: &RationalGF) -> Vec<BigInt> {
    g.integer_terms(DEDUP_TERMS).unwrap_or_default()
}

/// Positive `a` (multiplying the whole equation by -1 if needed), and the
/// equally weighted sequences in ascending order of their terms.
///
/// The solved quadratic always shares its weight class with `C`, so after
/// this `c = -b·e³` holds for the orbit target `e`.
fn canonicalize(thm: &mut CubicTheorem) {
    if thm.a.is_negative() {
        thm.a = -&thm.a;
        thm.b = -&thm.b;
        thm.c = -&thm.c;
    }
    if thm.a == thm.b {
        thm.gfs.sort_by_key(leading_terms);
    } else {
        let [x, y, _] = &mut thm.gfs;
        if leading_terms(x) > leading_terms(y) {
            core::mem::swap(x, y);
        }
    }
}

type DedupKey = (BigInt, BigInt, BigInt, OrbitKind, [Vec<BigInt>; 3]);

/// Negating all three sequences together with `c` gives the same family.
fn dedup_key(thm: &CubicTheorem) -> DedupKey {
    let flip = thm.c.is_negative();
    let mut terms = thm.gfs.clone().map(|g| {
        let t = leading_terms(&g);
        if flip {
            t.into_iter().map(|v| -v).collect()
        } else {
            t
        }
    });
    if thm.a == thm.b {
        terms.sort();
    } else {
        let [x, y, _] = &mut terms;
        if x > y {
            core::mem::swap(x, y);
        }
    }
    (thm.a.clone(), thm.b.clone(), thm.c.abs(), thm.rhs_kind, terms)
}

type SortKey = (BigInt, BigInt, OrbitKind, Vec<(Vec<BigInt>, Vec<BigInt>)>);

fn sort_key(thm: &CubicTheorem) -> SortKey {
    let coeffs = thm
        .gfs
        .iter()
        .map(|g| (g.num().coeffs().to_vec(), g.den().coeffs().to_vec()))
        .collect();
    (thm.c.abs(), thm.c.clone(), thm.rhs_kind, coeffs)
}

/// Output styles of [`render`] handled in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TextFormat {
    Text,
    Latex,
}

const SEQ_NAMES: [&str; 3] = ["a", "b", "c"];

/// Ascending polynomial in `t`: `1 + 53*t + 9*t^2` or `1+53t+9t^{2}`.
pub fn format_series_poly(p: &UniPoly, latex: bool) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        match (out.is_empty(), neg, latex) {
            (true, true, _) => out.push('-'),
            (true, false, _) => {}
            (false, true, false) => out.push_str(" - "),
            (false, false, false) => out.push_str(" + "),
            (false, true, true) => out.push('-'),
            (false, false, true) => out.push('+'),
        }
        let mag = c.abs();
        let show_mag = k == 0 || !mag.is_one();
        if show_mag {
            let _ = write!(out, "{mag}");
        }
        if k > 0 {
            if show_mag && !latex {
                out.push('*');
            }
            out.push('t');
            if k > 1 {
                let _ = if latex { write!(out, "^{{{k}}}") } else { write!(out, "^{k}") };
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn equation_lhs(thm: &CubicTheorem, latex: bool) -> String {
    let weights = [&thm.a, &thm.a, &thm.b];
    let mut out = String::new();
    for (i, w) in weights.iter().enumerate() {
        let name = if latex { format!("{}_n^3", SEQ_NAMES[i]) } else { format!("{}(n)^3", SEQ_NAMES[i]) };
        let neg = w.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = w.abs();
        if !mag.is_one() {
            let _ = if latex { write!(out, "{mag}") } else { write!(out, "{mag}*") };
        }
        out.push_str(&name);
    }
    out
}

/// Statement of the theorem in plain text or LaTeX.
pub fn render(thm: &CubicTheorem, format: TextFormat) -> String {
    let mut out = String::new();
    match format {
        TextFormat::Text => {
            let _ = writeln!(out, "Let a(n), b(n), c(n) be the coefficients of t^n in");
            for (i, g) in thm.gfs.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  {}: ({})/({})",
                    SEQ_NAMES[i],
                    format_series_poly(g.num(), false),
                    format_series_poly(g.den(), false)
                );
            }
            let rhs = match thm.rhs_kind {
                OrbitKind::Constant => format!("{}", thm.c),
                OrbitKind::Alternating => format!("{}*(-1)^n", thm.c),
            };
            let _ = writeln!(out, "Then for all n >= 0:");
            let _ = writeln!(out, "  {} = {}", equation_lhs(thm, false), rhs);
            let _ = writeln!(out, "Certified by checking n = 0..{}.", thm.certificate.bound.saturating_sub(1));
        }
        TextFormat::Latex => {
            let _ = writeln!(out, "\\begin{{theorem}}");
            let _ = writeln!(out, "Let $a_n$, $b_n$, $c_n$ be defined by");
            let _ = writeln!(out, "\\[");
            for (i, g) in thm.gfs.iter().enumerate() {
                let sep = if i < 2 { ", \\quad" } else { "." };
                let _ = writeln!(
                    out,
                    "  \\sum_{{n\\ge 0}} {}_n t^n = \\frac{{{}}}{{{}}}{}",
                    SEQ_NAMES[i],
                    format_series_poly(g.num(), true),
                    format_series_poly(g.den(), true),
                    sep
                );
            }
            let _ = writeln!(out, "\\]");
            let rhs = match thm.rhs_kind {
                OrbitKind::Constant => format!("{}", thm.c),
                OrbitKind::Alternating if thm.c.is_one() => "(-1)^n".into(),
                OrbitKind::Alternating => format!("{}(-1)^n", thm.c),
            };
            let _ = writeln!(out, "Then $${} = {}$$ for all $n \\ge 0$.", equation_lhs(thm, true), rhs);
            let _ = writeln!(out, "\\end{{theorem}}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn gf(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::from_i64(num, den).unwrap()
    }

    fn ramanujan() -> CubicTheorem {
        let den = [1, -82, -82, 1];
        CubicTheorem::new(
            bi(1),
            bi(-1),
            bi(1),
            OrbitKind::Alternating,
            [gf(&[1, 53, 9], &den), gf(&[2, -26, -12], &den), gf(&[2, 8, -10], &den)],
        )
        .unwrap()
    }

    #[test]
    fn ramanujan_certifies_at_depth_22() {
        let thm = ramanujan();
        assert!(thm.certificate.is_certified());
        assert_eq!(thm.certificate.bound, 22);
    }

    #[test]
    fn perturbed_ramanujan_refuted_at_zero() {
        let mut thm = ramanujan();
        thm.gfs[0] = gf(&[2, 53, 9], &[1, -82, -82, 1]);
        let cert = certify_theorem(&thm).unwrap();
        assert_eq!(cert.verdict, crate::cfinite::Verdict::Refuted { witness: 0 });
    }

    #[test]
    fn sample_theorem_certifies() {
        let den = [1, -103683, 103683, -1];
        let thm = CubicTheorem::new(
            bi(2),
            bi(1),
            bi(6859),
            OrbitKind::Constant,
            [
                gf(&[-1, -550798, -237169], &den),
                gf(&[25, -878594, 90601], &den),
                gf(&[-29, 888826, 293155], &den),
            ],
        )
        .unwrap();
        assert!(thm.certificate.is_certified());
        assert_eq!(thm.residual_at(0).unwrap(), bi(0));
        let text = render(&thm, TextFormat::Text);
        assert!(text.contains("= 6859"), "{text}");
        assert!(text.contains("2*a(n)^3 + 2*b(n)^3 + c(n)^3"), "{text}");
    }

    #[test]
    fn rejects_zero_constant() {
        let den = [1, -82, -82, 1];
        let r = CubicTheorem::new(
            bi(1),
            bi(-1),
            bi(0),
            OrbitKind::Constant,
            [gf(&[1], &den), gf(&[1], &den), gf(&[1], &den)],
        );
        assert!(matches!(r, Err(ForgeError::MalformedTheorem(_))));
    }

    #[test]
    fn series_poly_formatting() {
        let p = UniPoly::from_i64(&[1, -82, -82, 1]);
        assert_eq!(format_series_poly(&p, false), "1 - 82*t - 82*t^2 + t^3");
        assert_eq!(format_series_poly(&p, true), "1-82t-82t^{2}+t^{3}");
        assert_eq!(format_series_poly(&UniPoly::from_i64(&[0, -1]), false), "-t");
    }

    #[test]
    fn latex_alternating_rhs() {
        let s = render(&ramanujan(), TextFormat::Latex);
        assert!(s.contains("a_n^3 + b_n^3 - c_n^3 = (-1)^n"), "{s}");
    }

    #[test]
    fn empty_seed_set() {
        let opts = ForgeOptions { search_bound: 2, ..Default::default() };
        assert_eq!(forge(&bi(1), &bi(1), &opts).unwrap_err(), ForgeError::EmptySeedSet);
    }
}
