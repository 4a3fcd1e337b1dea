//! Pullback action of plane automorphisms on cocycle classes.
//!
//! Automorphisms of the punctured plane are exactly the origin-preserving
//! plane automorphisms, generated by invertible linear maps together with
//! the triangular maps `(x, y) -> (x, y + x^2 s(x))`. A word in these
//! generators acts on classes contravariantly, generator by generator.
//!
//! Convention. For a single generator `psi` the image class `psi* w` is
//! pinned by the pairing rule
//!
//! ```text
//!     (psi* w)(v) = det(D psi)^{-1} * w(v o psi^{-1})
//! ```
//!
//! against binary forms `v`, where `v o psi^{-1}` substitutes the inverse
//! map into the form. This normalization is validated against direct
//! monomial substitution for diagonal matrices, and for antidiagonal ones
//! after the sign that accounts for swapping the two covering charts (the
//! swap reverses the cocycle orientation, matching the determinant twist).
//!
//! Two independent evaluation paths are provided. [`pullback`] works
//! generator by generator: linear generators act weight by weight through
//! the dual model, triangular generators by an exact truncated binomial
//! expansion. [`pullback_dual_path`] instead composes the inverse of the
//! whole word into an explicit polynomial map and reconstructs the image
//! class from its pairings; it exists to cross-check the first path and is
//! exercised as an oracle throughout the test suite.

use std::collections::BTreeMap;

use crate::cech::{decompose, recompose, serre_pair, BinaryForm, CechClass, HomogComponent};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly2, Poly1};
use crate::scalar::{binomial, Scalar};

/// Default bound on the class weights a pullback will process.
pub const DEFAULT_MAX_DEGREE: i64 = 64;

/// A 2x2 matrix `[[a, b], [c, d]]` acting by `(x, y) -> (ax + by, cx + dy)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2<C> {
    pub a: C,
    pub b: C,
    pub c: C,
    pub d: C,
}

impl<C: Scalar> Mat2<C> {
    pub fn new(a: C, b: C, c: C, d: C) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(C::one(), C::zero(), C::zero(), C::one())
    }

    pub fn diagonal(a: C, d: C) -> Self {
        Mat2::new(a, C::zero(), C::zero(), d)
    }

    pub fn det(&self) -> C {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Mat2::new(
            self.d.clone() / det.clone(),
            -self.b.clone() / det.clone(),
            -self.c.clone() / det.clone(),
            self.a.clone() / det,
        ))
    }
}

/// One generator of the automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator<C> {
    /// Invertible linear map.
    Linear(Mat2<C>),
    /// `(x, y) -> (x, y + x^2 s(x))`.
    Triangular(Poly1<C>),
}

/// A word in the generators; composition order is left-to-right application
/// to points, matching the order in which [`pullback`] processes the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneAuto<C> {
    word: Vec<Generator<C>>,
}

impl<C: Scalar> Default for PlaneAuto<C> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<C: Scalar> PlaneAuto<C> {
    pub fn identity() -> Self {
        PlaneAuto { word: Vec::new() }
    }

    pub fn from_generators(word: Vec<Generator<C>>) -> Self {
        PlaneAuto { word }
    }

    pub fn linear(g: Mat2<C>) -> Self {
        PlaneAuto {
            word: vec![Generator::Linear(g)],
        }
    }

    pub fn triangular(s: Poly1<C>) -> Self {
        PlaneAuto {
            word: vec![Generator::Triangular(s)],
        }
    }

    pub fn generators(&self) -> &[Generator<C>] {
        &self.word
    }

    /// `self` applied first, then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        PlaneAuto { word }
    }

    /// Checks that every linear generator is invertible.
    pub fn validate(&self) -> Result<()> {
        for gen in &self.word {
            if let Generator::Linear(g) = gen {
                if g.det().is_zero() {
                    return Err(Error::SingularMatrix);
                }
            }
        }
        Ok(())
    }
}

fn check_weight_guard<C: Scalar>(c: &CechClass<C>, limit: i64) -> Result<()> {
    if let Some(d) = c.max_weight() {
        if d > limit {
            return Err(Error::MaxDegreeExceeded { limit });
        }
    }
    Ok(())
}

/// Pullback along a generator word, evaluated generator by generator.
pub fn pullback<C: Scalar>(a: &PlaneAuto<C>, c: &CechClass<C>) -> Result<CechClass<C>> {
    pullback_with_limit(a, c, DEFAULT_MAX_DEGREE)
}

/// [`pullback`] with an explicit weight guard.
pub fn pullback_with_limit<C: Scalar>(
    a: &PlaneAuto<C>,
    c: &CechClass<C>,
    limit: i64,
) -> Result<CechClass<C>> {
    check_weight_guard(c, limit)?;
    let mut acc = c.clone();
    for gen in a.generators() {
        acc = match gen {
            Generator::Linear(g) => pullback_linear(g, &acc)?,
            Generator::Triangular(s) => pullback_triangular(s, &acc),
        };
    }
    Ok(acc)
}

/// Pullback along a single linear generator.
///
/// Acts weight by weight through the dual model: the image `w'` of a weight
/// component `w` is the unique component with
/// `<w', v> = det(g)^{-1} * <w, v o g^{-1}>` for every monomial form `v`.
/// Substituting a general linear map directly into a negative monomial power
/// would leave the Laurent ring, so this dual route is the only computation
/// path used.
pub fn pullback_linear<C: Scalar>(g: &Mat2<C>, c: &CechClass<C>) -> Result<CechClass<C>> {
    let det = g.det();
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let det_inv = C::one() / det;
    let inv = g.inverse()?;
    let mut out = Vec::new();
    for comp in decompose(c) {
        let d = comp.d();
        let mut coeffs = Vec::with_capacity((d - 1) as usize);
        for k in 1..=(d - 1) {
            // v_k o g^{-1} for the dual monomial v_k = x^{k-1} y^{d-k-1}
            let xk = BinaryForm::linear_power(&inv.a, &inv.b, (k - 1) as u32);
            let yk = BinaryForm::linear_power(&inv.c, &inv.d, (d - 1 - k) as u32);
            let form = xk.mul(&yk);
            coeffs.push(det_inv.clone() * serre_pair(&comp, &form)?);
        }
        out.push(HomogComponent::new(d, coeffs)?);
    }
    Ok(recompose(&out))
}

/// Pullback along a single triangular generator `(x, y) -> (x, y + x^2 s(x))`.
///
/// Each class term `x^{-m} y^{-n}` expands as the binomial series
/// `sum_k C(-n, k) x^{-m} (x^2 s)^k y^{-n-k}`; every term with expansion
/// index `k >= ceil(m/2)` has nonnegative x-exponent, hence is a coboundary,
/// so truncating there and normalizing is exact. The image stays within the
/// weights already present, and the top-weight component is unchanged.
pub fn pullback_triangular<C: Scalar>(s: &Poly1<C>, c: &CechClass<C>) -> CechClass<C> {
    // x^2 s(x) as a Laurent polynomial
    let x2s = LaurentPoly2::from_terms(
        s.coeffs()
            .iter()
            .enumerate()
            .map(|(t, coeff)| ((t as i64 + 2, 0), coeff.clone())),
    );
    let mut acc = LaurentPoly2::zero();
    for ((i, j), coeff) in c.terms() {
        let m = -i;
        let n = -j;
        let kmax = (m + 1) / 2; // ceil(m/2); terms with k >= kmax are coboundaries
        let mut power = LaurentPoly2::one();
        for k in 0..kmax {
            if k > 0 {
                power = power.mul(&x2s);
                if power.is_zero() {
                    break;
                }
            }
            let weight = coeff.clone() * binomial::<C>(-n, k as u32);
            acc = acc.add(&power.mul_monomial(*i, j - k, &weight));
        }
    }
    CechClass::normalize(&acc)
}

/// Independent whole-word evaluation used as an oracle.
///
/// Composes the inverse of the word into one explicit polynomial map, then
/// reconstructs every weight component of the image from its pairings
/// `(psi* w)(v) = det(D psi)^{-1} * w(v o psi^{-1})`, pairing each
/// homogeneous part of the (generally inhomogeneous) polynomial
/// `v o psi^{-1}` against the matching weight component of `w`. The image
/// support is bounded by the weights already present in `w`, so finitely
/// many monomials determine the result.
pub fn pullback_dual_path<C: Scalar>(a: &PlaneAuto<C>, c: &CechClass<C>) -> Result<CechClass<C>> {
    pullback_dual_path_with_limit(a, c, DEFAULT_MAX_DEGREE)
}

/// [`pullback_dual_path`] with an explicit weight guard.
pub fn pullback_dual_path_with_limit<C: Scalar>(
    a: &PlaneAuto<C>,
    c: &CechClass<C>,
    limit: i64,
) -> Result<CechClass<C>> {
    check_weight_guard(c, limit)?;
    if c.is_zero() {
        return Ok(CechClass::zero());
    }
    let dmax = c.max_weight().unwrap();

    // Fold the word into the inverse map psi^{-1} and the determinant twist.
    // Processing the word forward and substituting each generator inverse's
    // formulas at the current components builds g_k^{-1} o ... o g_1^{-1}.
    let mut det_inv = C::one();
    let mut xm = LaurentPoly2::monomial(1, 0, C::one());
    let mut ym = LaurentPoly2::monomial(0, 1, C::one());
    for gen in a.generators() {
        match gen {
            Generator::Linear(g) => {
                let det = g.det();
                if det.is_zero() {
                    return Err(Error::SingularMatrix);
                }
                det_inv = det_inv / det;
                let inv = g.inverse()?;
                let nx = xm.scale(&inv.a).add(&ym.scale(&inv.b));
                let ny = xm.scale(&inv.c).add(&ym.scale(&inv.d));
                xm = nx;
                ym = ny;
            }
            Generator::Triangular(s) => {
                // inverse generator: (x, y) -> (x, y - x^2 s(x))
                let mut s_at = LaurentPoly2::zero();
                for coeff in s.coeffs().iter().rev() {
                    s_at = s_at.mul(&xm).add(&LaurentPoly2::constant(coeff.clone()));
                }
                ym = ym.sub(&xm.mul(&xm).mul(&s_at));
            }
        }
    }

    let components: BTreeMap<i64, HomogComponent<C>> =
        decompose(c).into_iter().map(|h| (h.d(), h)).collect();

    // memoized powers of the map components
    let top = (dmax - 2).max(0) as usize;
    let mut xpow: Vec<LaurentPoly2<C>> = Vec::with_capacity(top + 1);
    let mut ypow: Vec<LaurentPoly2<C>> = Vec::with_capacity(top + 1);
    xpow.push(LaurentPoly2::one());
    ypow.push(LaurentPoly2::one());
    for e in 1..=top {
        xpow.push(xpow[e - 1].mul(&xm));
        ypow.push(ypow[e - 1].mul(&ym));
    }

    let mut out = Vec::new();
    for d in 2..=dmax {
        let mut coeffs = Vec::with_capacity((d - 1) as usize);
        for k in 1..=(d - 1) {
            let substituted = xpow[(k - 1) as usize].mul(&ypow[(d - 1 - k) as usize]);
            let mut val = C::zero();
            for (e, part) in substituted.homogeneous_parts() {
                let Some(h) = components.get(&(e + 2)) else {
                    continue;
                };
                for ((p, _q), coeff) in part.terms() {
                    val = val + coeff.clone() * h.coeff(p + 1);
                }
            }
            coeffs.push(det_inv.clone() * val);
        }
        out.push(HomogComponent::new(d, coeffs)?);
    }
    Ok(recompose(&out))
}

/// Whether the two standard family members can be obtained from each other
/// by a base change of the punctured plane: exactly when `{m, n}` and
/// `{p, q}` agree as multisets.
pub fn base_change_equivalent(m: i64, n: i64, p: i64, q: i64) -> bool {
    let mut left = [m, n];
    let mut right = [p, q];
    left.sort_unstable();
    right.sort_unstable();
    left == right
}
