//! Descent of homogeneous classes to the projective line and the
//! rational-section construction.
//!
//! The scalar action on the punctured plane has the projective line as
//! quotient; a weight component descends along the chart map sending the
//! Laurent monomial `x^i y^j` to `z^{-i}`. The coboundary parts of weight
//! `-d` descend to powers `z^k` with `k <= 0` or `k >= d`, so the normal
//! form on the quotient keeps exactly the exponents `1..d-1`. This pushes
//! the bidegree bookkeeping through the chart map instead of re-deriving
//! trivializations downstairs; the round-trip with weight components is the
//! identity on coefficients.
//!
//! The section constructor takes the transition data `z^d` against a cocycle
//! polynomial `q` (with `q(0) = 0`, `deg q < d`) and produces the rational
//! section `f1(z) = (z - lambda)^{1-d} s(z)` with a single pole of order
//! `d - 1`: split `(z - lambda)^{d-1} q(z)` as `alpha + z^d beta` with
//! `deg alpha <= d - 1`, then `s = -beta`. Admissible poles are the nonzero
//! `lambda` avoiding the roots of an explicit companion polynomial `r`.

use std::collections::BTreeMap;
use std::fmt;

use crate::cech::HomogComponent;
use crate::error::{Error, Result};
use crate::laurent::Poly1;
use crate::scalar::{binomial, pow_int, Scalar};

/// Laurent polynomial in the quotient chart coordinate `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P1Cocycle<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Scalar> Default for P1Cocycle<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> P1Cocycle<C> {
    pub fn zero() -> Self {
        P1Cocycle {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut terms: BTreeMap<i64, C> = BTreeMap::new();
        for (k, c) in iter {
            if c.is_zero() {
                continue;
            }
            let entry = terms.remove(&k).map_or(c.clone(), |old| old + c);
            if !entry.is_zero() {
                terms.insert(k, entry);
            }
        }
        P1Cocycle { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for P1Cocycle<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*z^{k}")?;
        }
        Ok(())
    }
}

/// Normal-form descended class of weight `-d`: coefficients of
/// `z^1 .. z^{d-1}`, with `coeffs[k - 1]` the coefficient of `z^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P1Class<C> {
    d: i64,
    coeffs: Vec<C>,
}

impl<C: Scalar> P1Class<C> {
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Descend a weight component: `x^{-k} y^{-(d-k)}` maps to `z^k`.
///
/// For a homogeneous bundle class `x^{-m} y^{-n} p(x, y)` the image equals
/// `z^m p(z^{-1}, 1)`.
pub fn descend<C: Scalar>(h: &HomogComponent<C>) -> P1Cocycle<C> {
    P1Cocycle::from_terms(
        h.coeffs()
            .iter()
            .enumerate()
            .map(|(idx, c)| (idx as i64 + 1, c.clone())),
    )
}

/// Normal form on the quotient: keeps the coefficients of `z^k` for
/// `1 <= k <= d - 1` and drops the rest (descended coboundaries).
pub fn normalize_p1<C: Scalar>(q: &P1Cocycle<C>, d: i64) -> Result<P1Class<C>> {
    if d < 2 {
        return Err(Error::InvalidCocycle(format!(
            "weight must be >= 2, got {d}"
        )));
    }
    let coeffs = (1..d).map(|k| q.coeff(k)).collect();
    Ok(P1Class { d, coeffs })
}

fn validate_cocycle_poly<C: Scalar>(d: i64, q: &Poly1<C>) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidCocycle(format!(
            "weight must be >= 2, got {d}"
        )));
    }
    if q.is_zero() {
        return Err(Error::ZeroCocycle);
    }
    if !q.coeff(0).is_zero() {
        return Err(Error::InvalidCocycle(
            "cocycle polynomial must vanish at 0".into(),
        ));
    }
    if q.degree().unwrap() as i64 > d - 1 {
        return Err(Error::InvalidCocycle(format!(
            "cocycle degree must be < d = {d}"
        )));
    }
    Ok(())
}

/// The companion polynomial `r(z)` whose nonroots are the admissible poles:
/// for `q = a_1 z + ... + a_{d-1} z^{d-1}`,
/// `r(z) = sum_i (-1)^{i+1} C(d-2, i) a_{i+1} z^i`. Nonzero whenever `q` is,
/// and linear in `q`.
pub fn dg_r_polynomial<C: Scalar>(d: i64, q: &Poly1<C>) -> Result<Poly1<C>> {
    validate_cocycle_poly(d, q)?;
    let coeffs = (0..=(d - 2))
        .map(|i| {
            let sign = if i % 2 == 0 { -C::one() } else { C::one() };
            sign * binomial::<C>(d - 2, i as u32) * q.coeff((i + 1) as usize)
        })
        .collect();
    Ok(Poly1::from_coeffs(coeffs))
}

/// Data of a rational section with a single pole of order `d - 1` at
/// `lambda`: the section is `f1(z) = (z - lambda)^{1-d} s(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionData<C> {
    pub lambda: C,
    pub s: Poly1<C>,
    pub alpha: Poly1<C>,
    pub beta: Poly1<C>,
    pub d: i64,
}

/// Construct the section data at a given pole location.
///
/// Splits `(z - lambda)^{d-1} q(z) = alpha(z) + z^d beta(z)` by literal
/// coefficient slicing at degree `d`, sets `s = -beta`, and verifies the
/// evaluation identities `s(lambda) = lambda^{-d} alpha(lambda) = r(lambda)`
/// before returning; a mismatch is reported as an error, never absorbed.
pub fn dg_find_section<C: Scalar>(d: i64, q: &Poly1<C>, lambda: &C) -> Result<SectionData<C>> {
    let r = dg_r_polynomial(d, q)?;
    if lambda.is_zero() || r.eval(lambda).is_zero() {
        return Err(Error::BadLambda);
    }
    // (z - lambda)^{d-1} q(z)
    let z_minus_lambda = Poly1::from_coeffs(vec![-lambda.clone(), C::one()]);
    let product = z_minus_lambda.pow((d - 1) as u32).mul(q);
    let alpha = Poly1::from_coeffs((0..d as usize).map(|k| product.coeff(k)).collect());
    let beta = Poly1::from_coeffs(
        (d as usize..=product.degree().unwrap_or(0).max(d as usize))
            .map(|k| product.coeff(k))
            .collect(),
    );
    let s = beta.neg();

    let s_at = s.eval(lambda);
    let alpha_route = pow_int(lambda, -d) * alpha.eval(lambda);
    let r_route = r.eval(lambda);
    if s_at != alpha_route || s_at != r_route {
        return Err(Error::IdentityMismatch(
            "section split disagrees with the closed-form evaluation".into(),
        ));
    }
    Ok(SectionData {
        lambda: lambda.clone(),
        s,
        alpha,
        beta,
        d,
    })
}

/// Smallest positive integer pole admissible for `q`: deterministic, and
/// always exists because `r` has only finitely many roots.
pub fn dg_pick_lambda<C: Scalar>(d: i64, q: &Poly1<C>) -> Result<C> {
    let r = dg_r_polynomial(d, q)?;
    let bound = r.degree().unwrap_or(0) as i64 + 1;
    for t in 1..=bound.max(1) {
        let lambda = crate::scalar::from_int::<C>(t);
        if !r.eval(&lambda).is_zero() {
            return Ok(lambda);
        }
    }
    unreachable!("a nonzero polynomial of degree e cannot vanish at e + 1 points")
}
