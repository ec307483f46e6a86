//! Solutions of `a·X³ + a·Y³ + b·Z³ + b·W³ = 0` and Jabotinsky's trick.
//!
//! Two solutions `s`, `s'` combine into a third, `c·s + d·s'`, where the
//! multipliers make every mixed cubic term cancel. Combining a numeric seed
//! with the symbolic trivial solution `(m, -m, n, -n)` ("morphing") gives
//! four quadratics in `m, n` whose weighted cubes sum to zero identically.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::kernel::int::gcd_all;
use crate::kernel::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CubicError {
    #[error("weights must be nonzero")]
    ZeroWeight,
    #[error("quadruple does not satisfy the weighted cubic equation")]
    NotASolution,
    #[error("quadruple is not primitive")]
    NotPrimitive,
    #[error("quadruples carry different weights")]
    WeightMismatch,
    #[error("combination is the zero quadruple")]
    ZeroResult,
    #[error("seed is trivial")]
    TrivialSeed,
    #[error("morph collapsed onto the trivial pattern")]
    DegenerateMorph,
    #[error("polynomials are not homogeneous quadratics in two shared variables")]
    NotQuadratic,
    #[error("weighted cubic identity does not hold")]
    IdentityFails,
}

/// A primitive solution `(x, y, z, w)` of `a·x³ + a·y³ + b·z³ + b·w³ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedQuadruple {
    a: BigInt,
    b: BigInt,
    coords: [BigInt; 4],
}

fn weighted_sum(a: &BigInt, b: &BigInt, t: &[BigInt; 4]) -> BigInt {
    let cube = |v: &BigInt| v * v * v;
    a * (cube(&t[0]) + cube(&t[1])) + b * (cube(&t[2]) + cube(&t[3]))
}

impl WeightedQuadruple {
    pub fn new(a: BigInt, b: BigInt, coords: [BigInt; 4]) -> Result<Self, CubicError> {
        if a.is_zero() || b.is_zero() {
            return Err(CubicError::ZeroWeight);
        }
        if !weighted_sum(&a, &b, &coords).is_zero() {
            return Err(CubicError::NotASolution);
        }
        let g = gcd_all(coords.iter());
        if !g.is_zero() && g != BigInt::from(1) {
            return Err(CubicError::NotPrimitive);
        }
        Ok(WeightedQuadruple { a, b, coords })
    }

    pub fn from_i64(a: i64, b: i64, coords: [i64; 4]) -> Result<Self, CubicError> {
        Self::new(a.into(), b.into(), coords.map(BigInt::from))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn coords(&self) -> &[BigInt; 4] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// True when the four terms cancel in two pairs, e.g. `(m, -m, n, -n)`
    /// or, for `a = b`, `(1, 1, -1, -1)`. Such solutions carry no
    /// information and morph into nothing useful.
    pub fn is_trivial(&self) -> bool {
        is_trivial(&self.a, &self.b, &self.coords)
    }

    pub fn negated(&self) -> Self {
        WeightedQuadruple { a: self.a.clone(), b: self.b.clone(), coords: self.coords.clone().map(|v| -v) }
    }
}

impl fmt::Display for WeightedQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, w] = &self.coords;
        write!(f, "({x}, {y}, {z}, {w})")
    }
}

fn is_trivial(a: &BigInt, b: &BigInt, t: &[BigInt; 4]) -> bool {
    let w = [a, a, b, b];
    let term = |i: usize| w[i] * &t[i] * &t[i] * &t[i];
    [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]
        .iter()
        .any(|&(i, j, k, l)| (term(i) + term(j)).is_zero() && (term(k) + term(l)).is_zero())
}

/// Representative of `t` under `x↔y`, `z↔w` and negation: `x ≤ y`, `z ≥ w`,
/// and the lexicographically larger of the two sign choices.
fn canonical(t: [i64; 4]) -> [i64; 4] {
    let arrange = |[x, y, z, w]: [i64; 4]| [x.min(y), x.max(y), z.max(w), z.min(w)];
    let pos = arrange(t);
    let neg = arrange(t.map(|v| -v));
    pos.max(neg)
}

fn sort_key(t: &[i64; 4]) -> (i64, [i64; 4]) {
    (t.iter().map(|v| v.abs()).max().unwrap_or(0), *t)
}

/// All primitive nontrivial solutions with coordinates in `[-bound, bound]`,
/// one per symmetry class, sorted by largest absolute coordinate and then
/// lexicographically.
pub fn search_quadruples(a: &BigInt, b: &BigInt, bound: u32) -> Vec<WeightedQuadruple> {
    if a.is_zero() || b.is_zero() {
        return Vec::new();
    }
    let bound = i64::from(bound);
    let cube = |v: i64| BigInt::from(v).pow(3);
    let mut zw: BTreeMap<BigInt, Vec<(i64, i64)>> = BTreeMap::new();
    for z in -bound..=bound {
        for w in -bound..=z {
            zw.entry(b * (cube(z) + cube(w))).or_default().push((z, w));
        }
    }
    let mut found: BTreeSet<[i64; 4]> = BTreeSet::new();
    for x in -bound..=bound {
        for y in x..=bound {
            let need = -(a * (cube(x) + cube(y)));
            let Some(list) = zw.get(&need) else { continue };
            for &(z, w) in list {
                let t = [x, y, z, w];
                let big = t.map(BigInt::from);
                if gcd_all(big.iter()) != BigInt::from(1) || is_trivial(a, b, &big) {
                    continue;
                }
                found.insert(canonical(t));
            }
        }
    }
    let mut out: Vec<[i64; 4]> = found.into_iter().collect();
    out.sort_by_key(sort_key);
    out.into_iter()
        .map(|t| WeightedQuadruple { a: a.clone(), b: b.clone(), coords: t.map(BigInt::from) })
        .collect()
}

/// `c·s + d·s'` before any normalization; `combine_raw(s2, s1)` is the
/// negation of `combine_raw(s1, s2)`.
pub fn combine_raw(s1: &WeightedQuadruple, s2: &WeightedQuadruple) -> Result<[BigInt; 4], CubicError> {
    if s1.a != s2.a || s1.b != s2.b {
        return Err(CubicError::WeightMismatch);
    }
    let (a, b) = (&s1.a, &s1.b);
    let [x, y, z, w] = &s1.coords;
    let [x2, y2, z2, w2] = &s2.coords;
    let c = a * (x * x2 * x2 + y * y2 * y2) + b * (z * z2 * z2 + w * w2 * w2);
    let d = -(a * (x * x * x2 + y * y * y2) + b * (z * z * z2 + w * w * w2));
    Ok([
        &c * x + &d * x2,
        &c * y + &d * y2,
        &c * z + &d * z2,
        &c * w + &d * w2,
    ])
}

/// Jabotinsky combination, reduced to its primitive part with the first
/// nonzero coordinate positive. Trivial results are returned as such.
pub fn combine(s1: &WeightedQuadruple, s2: &WeightedQuadruple) -> Result<WeightedQuadruple, CubicError> {
    let raw = combine_raw(s1, s2)?;
    let mut g = gcd_all(raw.iter());
    if g.is_zero() {
        return Err(CubicError::ZeroResult);
    }
    if raw.iter().find(|v| !v.is_zero()).is_some_and(Signed::is_negative) {
        g = -g;
    }
    WeightedQuadruple::new(s1.a.clone(), s1.b.clone(), raw.map(|v| v / &g))
}

/// Four homogeneous quadratics in `m, n` with
/// `a·P1³ + a·P2³ + b·P3³ + b·P4³ = 0`. Fields are open so that arbitrary
/// candidates can be checked with [`verify_param`]; [`ParamQuadruple::validated`]
/// enforces the identity and primitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamQuadruple {
    pub a: BigInt,
    pub b: BigInt,
    pub polys: [MultiPoly; 4],
}

impl ParamQuadruple {
    pub fn validated(a: BigInt, b: BigInt, polys: [MultiPoly; 4]) -> Result<Self, CubicError> {
        if a.is_zero() || b.is_zero() {
            return Err(CubicError::ZeroWeight);
        }
        let vars = polys[0].vars();
        if vars.len() != 2 || polys.iter().any(|p| p.vars() != vars || !p.is_homogeneous(2)) {
            return Err(CubicError::NotQuadratic);
        }
        let pq = ParamQuadruple { a, b, polys };
        if !verify_param(&pq) {
            return Err(CubicError::IdentityFails);
        }
        let content = gcd_all(pq.polys.iter().flat_map(|p| p.terms().map(|(_, c)| c)));
        if content != BigInt::from(1) {
            return Err(CubicError::NotPrimitive);
        }
        Ok(pq)
    }

    /// The weight attached to `polys[j]`.
    pub fn weight(&self, j: usize) -> &BigInt {
        if j < 2 {
            &self.a
        } else {
            &self.b
        }
    }
}

impl fmt::Display for ParamQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p1, p2, p3, p4] = &self.polys;
        write!(f, "({p1}, {p2}, {p3}, {p4})")
    }
}

/// Expands `a·P1³ + a·P2³ + b·P3³ + b·P4³` and tests for zero.
pub fn verify_param(pq: &ParamQuadruple) -> bool {
    let vars = pq.polys[0].vars();
    if pq.polys.iter().any(|p| p.vars() != vars) {
        return false;
    }
    let cube = |p: &MultiPoly| p.pow(3);
    let sum = (cube(&pq.polys[0]) + cube(&pq.polys[1])).scale(&pq.a)
        + (cube(&pq.polys[2]) + cube(&pq.polys[3])).scale(&pq.b);
    sum.is_zero()
}

/// Combines `s` with `(m, -m, n, -n)`.
pub fn morph(s: &WeightedQuadruple) -> Result<ParamQuadruple, CubicError> {
    if s.is_trivial() {
        return Err(CubicError::TrivialSeed);
    }
    const V: [&str; 2] = ["m", "n"];
    let (a, b) = (&s.a, &s.b);
    let [x, y, z, w] = &s.coords;
    let m = MultiPoly::var(&V, "m").unwrap();
    let n = MultiPoly::var(&V, "n").unwrap();
    let c = (&m * &m).scale(&(a * (x + y))) + (&n * &n).scale(&(b * (z + w)));
    let d = -(m.scale(&(a * (x * x - y * y))) + n.scale(&(b * (z * z - w * w))));
    let dm = &d * &m;
    let dn = &d * &n;
    let polys = [
        c.scale(x) + dm.clone(),
        c.scale(y) - dm,
        c.scale(z) + dn.clone(),
        c.scale(w) - dn,
    ];
    let content = gcd_all(polys.iter().flat_map(|p| p.terms().map(|(_, c)| c)));
    if content.is_zero() {
        return Err(CubicError::DegenerateMorph);
    }
    let polys = polys.map(|p| p.div_exact(&MultiPoly::constant(&V, content.clone())).expect("content divides"));
    if (&polys[0] + &polys[1]).is_zero() && (&polys[2] + &polys[3]).is_zero() {
        return Err(CubicError::DegenerateMorph);
    }
    ParamQuadruple::validated(a.clone(), b.clone(), polys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn q(a: i64, b: i64, t: [i64; 4]) -> WeightedQuadruple {
        WeightedQuadruple::from_i64(a, b, t).unwrap()
    }

    fn quad(terms: [i64; 3]) -> MultiPoly {
        MultiPoly::from_i64_terms(&["m", "n"], &[(&[2, 0], terms[0]), (&[1, 1], terms[1]), (&[0, 2], terms[2])])
    }

    fn coords(v: &[WeightedQuadruple]) -> Vec<[i64; 4]> {
        v.iter().map(|s| s.coords().clone().map(|c| i64::try_from(c).unwrap())).collect()
    }

    #[test]
    fn constructor_checks() {
        assert_eq!(WeightedQuadruple::from_i64(1, 1, [1, 2, 3, 4]), Err(CubicError::NotASolution));
        assert_eq!(WeightedQuadruple::from_i64(1, 1, [6, 8, 10, -12]), Err(CubicError::NotPrimitive));
        assert!(q(1, 1, [1, -1, 2, -2]).is_trivial());
        assert!(q(1, 1, [1, 1, -1, -1]).is_trivial());
        assert!(!q(1, 1, [3, 4, 5, -6]).is_trivial());
    }

    #[test]
    fn search_examples() {
        let found = coords(&search_quadruples(&bi(1), &bi(1), 12));
        assert!(found.contains(&[3, 4, 5, -6]));
        assert!(found.contains(&[9, 10, -1, -12]));
        let found = coords(&search_quadruples(&bi(1), &bi(-1), 12));
        assert!(found.contains(&[9, 10, 12, 1]));
        assert!(search_quadruples(&bi(1), &bi(1), 2).is_empty());
    }

    #[test]
    fn combine_examples() {
        let s = q(1, 1, [3, 4, 5, -6]);
        let t = q(1, 1, [9, 10, -1, -12]);
        let r = combine(&s, &t).unwrap();
        assert_eq!(r, q(1, 1, [1, 1, -1, -1]));
        assert!(r.is_trivial());
        assert_eq!(combine(&s, &s), Err(CubicError::ZeroResult));
        let u = q(1, -1, [9, 10, 12, 1]);
        assert_eq!(combine(&u, &u.negated()), Err(CubicError::ZeroResult));
        assert_eq!(combine(&s, &u), Err(CubicError::WeightMismatch));
    }

    #[test]
    fn morph_first_example() {
        let p = morph(&q(1, 1, [-9, 12, -10, 1])).unwrap();
        assert_eq!(
            p.polys,
            [quad([12, -33, 27]), quad([-9, 33, -36]), quad([-10, 21, -3]), quad([1, -21, 30])]
        );
    }

    #[test]
    fn morph_taxicab() {
        let p = morph(&q(1, -1, [9, 10, 12, 1])).unwrap();
        assert_eq!(
            p.polys,
            [quad([190, 143, -117]), quad([171, -143, -130]), quad([228, 19, -13]), quad([19, -19, -156])]
        );
        assert!(verify_param(&p));
    }

    #[test]
    fn morph_rejects_trivial_seed() {
        assert_eq!(morph(&q(1, 1, [2, -2, 1, -1])), Err(CubicError::TrivialSeed));
    }

    #[test]
    fn quadratic_identity_with_unit_weights() {
        let polys = [quad([1, 7, -9]), quad([2, -4, 12]), quad([-2, 0, -10]), quad([-1, 9, 1])];
        let pq = ParamQuadruple::validated(bi(1), bi(1), polys.clone()).unwrap();
        assert!(verify_param(&pq));
        let mut bad = polys;
        bad[0] = quad([1, 7, -8]);
        assert!(!verify_param(&ParamQuadruple { a: bi(1), b: bi(1), polys: bad }));
    }

    #[test]
    fn display() {
        assert_eq!(q(1, 1, [3, 4, 5, -6]).to_string(), "(3, 4, 5, -6)");
    }
}
