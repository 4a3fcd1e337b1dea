//! Cocycle classes on the punctured plane for the two-chart covering.
//!
//! A Laurent polynomial represents a transition cocycle over the covering by
//! the charts where `x` resp. `y` is invertible. Terms regular on either
//! chart (any nonnegative exponent) are coboundaries; the classes therefore
//! have canonical representatives supported strictly in the negative
//! quadrant, which makes class equality a structural equality.
//!
//! The `(m, n, p)` dictionary identifies nonzero classes with canonical
//! bundle data, weight decomposition splits a class into its semi-invariant
//! components, and the Serre pairing identifies each weight space with the
//! dual of the binary forms of matching degree.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::scalar::Scalar;

/// Normal-form class: every stored exponent pair has both entries <= -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechClass<C> {
    terms: BTreeMap<(i64, i64), C>,
}

impl<C: Scalar> Default for CechClass<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> CechClass<C> {
    pub fn zero() -> Self {
        CechClass {
            terms: BTreeMap::new(),
        }
    }

    /// Canonical representative of the class of `f`: drops every term with a
    /// nonnegative exponent and keeps the rest verbatim. Linear and
    /// idempotent.
    pub fn normalize(f: &LaurentPoly2<C>) -> Self {
        let mut terms = BTreeMap::new();
        for ((i, j), c) in f.terms() {
            if *i <= -1 && *j <= -1 {
                terms.insert((*i, *j), c.clone());
            }
        }
        CechClass { terms }
    }

    /// Build from raw terms; nonnegative exponents and zero coefficients are
    /// dropped, duplicates merge.
    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), C)>>(iter: I) -> Self {
        Self::normalize(&LaurentPoly2::from_terms(iter))
    }

    /// The single class term `c * x^i * y^j`; zero unless `i, j <= -1`.
    pub fn monomial(i: i64, j: i64, c: C) -> Self {
        Self::normalize(&LaurentPoly2::monomial(i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn to_laurent(&self) -> LaurentPoly2<C> {
        LaurentPoly2::from_terms(self.terms.iter().map(|(k, c)| (*k, c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::normalize(&self.to_laurent().add(&other.to_laurent()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::normalize(&self.to_laurent().sub(&other.to_laurent()))
    }

    pub fn scale(&self, by: &C) -> Self {
        Self::normalize(&self.to_laurent().scale(by))
    }

    /// Weights `d >= 2` present in the class, ascending.
    pub fn weights(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(|(i, j)| -(i + j)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Largest weight present (the lowest homogeneous degree is its negative).
    pub fn max_weight(&self) -> Option<i64> {
        self.weights().into_iter().next_back()
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for CechClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_laurent().fmt(f)
    }
}

/// The scalar `lambda` with `b = lambda * a`, when one exists and is nonzero.
///
/// Requires exact agreement of supports and of every coefficient ratio, so
/// this is only meaningful over an exact field.
pub fn scalar_ratio<C: Scalar>(a: &CechClass<C>, b: &CechClass<C>) -> Option<C> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    if a.num_terms() != b.num_terms() {
        return None;
    }
    let mut ratio: Option<C> = None;
    for ((ka, ca), (kb, cb)) in a.terms().zip(b.terms()) {
        if ka != kb {
            return None;
        }
        let r = cb.clone() / ca.clone();
        match &ratio {
            None => ratio = Some(r),
            Some(prev) => {
                if *prev != r {
                    return None;
                }
            }
        }
    }
    ratio
}

/// Canonical bundle data: either the trivial bundle or the triple
/// `(m, n, p)` cutting out `x^m v - y^n u = p(x, y)` away from the origin
/// fiber.
///
/// Nontrivial invariants: `m, n >= 1`, `p != 0`, `p` divisible neither by
/// `x` nor by `y`, `deg_x p < m`, `deg_y p < n`. Under these the dictionary
/// with nonzero classes is a bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleSpec<C> {
    Trivial,
    Bundle { m: i64, n: i64, p: LaurentPoly2<C> },
}

impl<C: Scalar> BundleSpec<C> {
    /// Validated constructor for the nontrivial case.
    pub fn try_new(m: i64, n: i64, p: LaurentPoly2<C>) -> Result<Self> {
        let spec = BundleSpec::Bundle { m, n, p };
        spec.validate()?;
        Ok(spec)
    }

    /// The family member with `p = 1`.
    pub fn x_mn(m: i64, n: i64) -> Self {
        BundleSpec::Bundle {
            m,
            n,
            p: LaurentPoly2::one(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let BundleSpec::Bundle { m, n, p } = self else {
            return Ok(());
        };
        if *m < 1 || *n < 1 {
            return Err(Error::InvalidBundle(format!(
                "exponents must satisfy m, n >= 1 (got m = {m}, n = {n})"
            )));
        }
        if p.is_zero() {
            return Err(Error::InvalidBundle("p must be nonzero".into()));
        }
        if !p.is_polynomial() {
            return Err(Error::InvalidBundle(
                "p must be an ordinary polynomial".into(),
            ));
        }
        if p.min_exp_x() != Some(0) {
            return Err(Error::InvalidBundle("p must not be divisible by x".into()));
        }
        if p.min_exp_y() != Some(0) {
            return Err(Error::InvalidBundle("p must not be divisible by y".into()));
        }
        if p.max_exp_x().unwrap() >= *m {
            return Err(Error::InvalidBundle(format!("deg_x p must be < m = {m}")));
        }
        if p.max_exp_y().unwrap() >= *n {
            return Err(Error::InvalidBundle(format!("deg_y p must be < n = {n}")));
        }
        Ok(())
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, BundleSpec::Trivial)
    }

    /// The transition cocycle class: `x^{-m} y^{-n} p(x, y)` normalized.
    ///
    /// Under the canonical-form invariants no term is dropped, so the class
    /// of a nontrivial spec is never zero.
    pub fn bundle_class(&self) -> CechClass<C> {
        match self {
            BundleSpec::Trivial => CechClass::zero(),
            BundleSpec::Bundle { m, n, p } => {
                CechClass::normalize(&p.mul_monomial(-m, -n, &C::one()))
            }
        }
    }

    /// Canonical data of the class `x^{-m} y^{-n} p` for an arbitrary
    /// polynomial `p` (only `m, n >= 1` is required of the input).
    ///
    /// Returns the trivial spec when the class vanishes; otherwise the unique
    /// representative satisfying all invariants.
    pub fn canonicalize(m: i64, n: i64, p: &LaurentPoly2<C>) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidBundle(format!(
                "exponents must satisfy m, n >= 1 (got m = {m}, n = {n})"
            )));
        }
        let class = CechClass::normalize(&p.mul_monomial(-m, -n, &C::one()));
        Ok(Self::from_class(&class))
    }

    /// Inverse of `bundle_class` on normal forms.
    pub fn from_class(class: &CechClass<C>) -> Self {
        if class.is_zero() {
            return BundleSpec::Trivial;
        }
        let laurent = class.to_laurent();
        let m = -laurent.min_exp_x().unwrap();
        let n = -laurent.min_exp_y().unwrap();
        let p = laurent.mul_monomial(m, n, &C::one());
        BundleSpec::Bundle { m, n, p }
    }

    /// The total space is affine exactly when the bundle is nontrivial.
    pub fn is_affine(&self) -> bool {
        !self.bundle_class().is_zero()
    }
}

/// A single weight component: `coeffs[k - 1]` is the coefficient of
/// `x^{-k} y^{-(d-k)}` for `1 <= k <= d - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogComponent<C> {
    d: i64,
    coeffs: Vec<C>,
}

impl<C: Scalar> HomogComponent<C> {
    pub fn new(d: i64, coeffs: Vec<C>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidCocycle(format!(
                "weight must be >= 2, got {d}"
            )));
        }
        if coeffs.len() as i64 != d - 1 {
            return Err(Error::InvalidCocycle(format!(
                "weight {d} component needs {} coefficients, got {}",
                d - 1,
                coeffs.len()
            )));
        }
        Ok(HomogComponent { d, coeffs })
    }

    pub fn zero(d: i64) -> Self {
        HomogComponent {
            d,
            coeffs: vec![C::zero(); (d - 1).max(0) as usize],
        }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of the basis monomial `x^{-k} y^{-(d-k)}`, `1 <= k <= d-1`.
    pub fn coeff(&self, k: i64) -> C {
        if k < 1 || k > self.d - 1 {
            return C::zero();
        }
        self.coeffs[(k - 1) as usize].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn to_class(&self) -> CechClass<C> {
        CechClass::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(idx, c)| ((-(idx as i64 + 1), -(self.d - idx as i64 - 1)), c.clone())),
        )
    }
}

/// Binary form of degree `e`: `coeffs[a]` is the coefficient of
/// `x^a y^{e-a}`, so the vector has length `e + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> BinaryForm<C> {
    /// Form from its full coefficient vector; the degree is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree >= 0");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: i64) -> Self {
        BinaryForm {
            coeffs: vec![C::zero(); degree as usize + 1],
        }
    }

    /// The monomial `x^a y^{e-a}` of degree `e`.
    pub fn monomial(degree: i64, a: i64) -> Self {
        let mut form = Self::zero(degree);
        form.coeffs[a as usize] = C::one();
        form
    }

    /// `(xc * x + yc * y)^e`, expanded.
    pub fn linear_power(xc: &C, yc: &C, e: u32) -> Self {
        let mut coeffs = Vec::with_capacity(e as usize + 1);
        for a in 0..=e {
            let c = crate::scalar::binomial::<C>(e as i64, a)
                * crate::scalar::pow_int(xc, a as i64)
                * crate::scalar::pow_int(yc, (e - a) as i64);
            coeffs.push(c);
        }
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, a: i64) -> C {
        if a < 0 || a as usize >= self.coeffs.len() {
            return C::zero();
        }
        self.coeffs[a as usize].clone()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm { coeffs }
    }
}

/// Weight decomposition: partitions the terms by `d = -(i + j)` and returns
/// the components in increasing `d`. Summing the components reproduces the
/// class exactly.
pub fn decompose<C: Scalar>(c: &CechClass<C>) -> Vec<HomogComponent<C>> {
    let mut by_weight: BTreeMap<i64, HomogComponent<C>> = BTreeMap::new();
    for ((i, j), coeff) in c.terms() {
        let d = -(i + j);
        let comp = by_weight
            .entry(d)
            .or_insert_with(|| HomogComponent::zero(d));
        let k = -i;
        comp.coeffs[(k - 1) as usize] = coeff.clone();
    }
    by_weight.into_values().collect()
}

/// Reassemble a class from weight components.
pub fn recompose<C: Scalar>(components: &[HomogComponent<C>]) -> CechClass<C> {
    let mut acc = CechClass::zero();
    for comp in components {
        acc = acc.add(&comp.to_class());
    }
    acc
}

/// The homogeneous degree `-d` when the class is concentrated in a single
/// weight, absent for the zero class and for mixed classes.
pub fn homogeneous_degree<C: Scalar>(c: &CechClass<C>) -> Option<i64> {
    let comps = decompose(c);
    match comps.as_slice() {
        [single] => Some(-single.d()),
        _ => None,
    }
}

/// Serre pairing of a weight-`d` component against a binary form of degree
/// `d - 2`, valued in the weight-2 line (reported as its coefficient).
///
/// The basis `x^{-k} y^{-(d-k)}` is dual to the monomial basis
/// `x^{k-1} y^{d-k-1}`, so the pairing is the coefficient dot product.
pub fn serre_pair<C: Scalar>(h: &HomogComponent<C>, v: &BinaryForm<C>) -> Result<C> {
    if v.degree() != h.d() - 2 {
        return Err(Error::DegreeMismatch {
            expected: h.d() - 2,
            got: v.degree(),
        });
    }
    let mut acc = C::zero();
    for k in 1..=(h.d() - 1) {
        acc = acc + h.coeff(k) * v.coeff(k - 1);
    }
    Ok(acc)
}

/// The binary form with the same coefficient vector as the component, read
/// through the dual bases: `x^{-m} y^{-n}` corresponds to `x^{m-1} y^{n-1}`.
pub fn dual_form<C: Scalar>(h: &HomogComponent<C>) -> BinaryForm<C> {
    BinaryForm::from_coeffs(h.coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_int;
    use crate::Rat;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentPoly2<Rat> {
        LaurentPoly2::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), from_int(c))))
    }

    #[test]
    fn normalize_drops_chart_regular_terms() {
        // x^{-2} y^{-1} + 3x + x^{-1} y^2 -> x^{-2} y^{-1}
        let f = lp(&[(-2, -1, 1), (1, 0, 3), (-1, 2, 1)]);
        let c = CechClass::normalize(&f);
        assert_eq!(c, CechClass::monomial(-2, -1, from_int(1)));
    }

    #[test]
    fn inverse_xy_is_nontrivial() {
        let c = CechClass::normalize(&lp(&[(-1, -1, 1)]));
        assert!(!c.is_zero());
        assert_eq!(c.coeff(-1, -1), from_int::<Rat>(1));
    }

    #[test]
    fn normalize_zero() {
        assert!(CechClass::<Rat>::normalize(&LaurentPoly2::zero()).is_zero());
    }

    #[test]
    fn sl2_bundle_class() {
        let sl2: BundleSpec<Rat> = BundleSpec::x_mn(1, 1);
        assert_eq!(sl2.bundle_class(), CechClass::monomial(-1, -1, from_int(1)));
    }

    #[test]
    fn deformed_x22_class() {
        let spec: BundleSpec<Rat> = BundleSpec::try_new(2, 2, lp(&[(0, 0, 1), (1, 1, 1)])).unwrap();
        let expected = CechClass::from_terms([((-2, -2), from_int(1)), ((-1, -1), from_int(1))]);
        assert_eq!(spec.bundle_class(), expected);
    }

    #[test]
    fn trivial_class_is_zero_and_not_affine() {
        let t: BundleSpec<Rat> = BundleSpec::Trivial;
        assert!(t.bundle_class().is_zero());
        assert!(!t.is_affine());
        assert!(BundleSpec::<Rat>::x_mn(1, 1).is_affine());
        assert!(BundleSpec::try_new(2, 2, lp(&[(0, 0, 1), (1, 1, 1)]))
            .unwrap()
            .is_affine());
    }

    #[test]
    fn canonicalize_shifts_to_normal_form() {
        // (3, 2, x(1+y)) -> (2, 2, 1+y)
        let got = BundleSpec::canonicalize(3, 2, &lp(&[(1, 0, 1), (1, 1, 1)])).unwrap();
        let expected = BundleSpec::try_new(2, 2, lp(&[(0, 0, 1), (0, 1, 1)])).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn canonicalize_fixes_canonical_input() {
        let p = lp(&[(0, 0, 1), (1, 1, 1)]);
        let got = BundleSpec::canonicalize(2, 2, &p).unwrap();
        assert_eq!(got, BundleSpec::try_new(2, 2, p).unwrap());
    }

    #[test]
    fn canonicalize_detects_coboundary() {
        // x^{-1} y^{-1} * x = y^{-1} is regular on the y-chart
        let got = BundleSpec::canonicalize(1, 1, &lp(&[(1, 0, 1)])).unwrap();
        assert_eq!(got, BundleSpec::Trivial);
    }

    #[test]
    fn decompose_splits_by_weight() {
        let c: CechClass<Rat> =
            CechClass::from_terms([((-2, -2), from_int(1)), ((-1, -1), from_int(1))]);
        let comps = decompose(&c);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].d(), 2);
        assert_eq!(comps[1].d(), 4);
        assert_eq!(recompose(&comps), c);

        let single: CechClass<Rat> =
            CechClass::from_terms([((-3, -1), from_int(1)), ((-2, -2), from_int(2))]);
        let comps = decompose(&single);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].d(), 4);

        assert!(decompose(&CechClass::<Rat>::zero()).is_empty());
    }

    #[test]
    fn homogeneous_degree_cases() {
        let xmn: BundleSpec<Rat> = BundleSpec::x_mn(3, 2);
        assert_eq!(homogeneous_degree(&xmn.bundle_class()), Some(-5));
        let mixed: CechClass<Rat> =
            CechClass::from_terms([((-2, -2), from_int(1)), ((-1, -1), from_int(1))]);
        assert_eq!(homogeneous_degree(&mixed), None);
        assert_eq!(homogeneous_degree(&CechClass::<Rat>::zero()), None);
        let w3: CechClass<Rat> =
            CechClass::from_terms([((-2, -1), from_int(1)), ((-1, -2), from_int(1))]);
        assert_eq!(homogeneous_degree(&w3), Some(-3));
    }

    #[test]
    fn serre_pairing_examples() {
        // <x^{-m} y^{-n}, x^{m-1} y^{n-1}> = 1
        for (m, n) in [(1i64, 1i64), (2, 1), (2, 3), (4, 2)] {
            let d = m + n;
            let comps = decompose(&CechClass::<Rat>::monomial(-m, -n, from_int(1)));
            let v = BinaryForm::monomial(d - 2, m - 1);
            assert_eq!(serre_pair(&comps[0], &v).unwrap(), from_int::<Rat>(1));
        }
        // off-diagonal vanishes: <x^{-2} y^{-1}, y> = 0
        let comps = decompose(&CechClass::<Rat>::monomial(-2, -1, from_int(1)));
        let y = BinaryForm::monomial(1, 0);
        assert_eq!(serre_pair(&comps[0], &y).unwrap(), from_int::<Rat>(0));
        // bilinearity: <2 x^{-1} y^{-2} + 3 x^{-2} y^{-1}, x> = 3
        let c: CechClass<Rat> =
            CechClass::from_terms([((-1, -2), from_int(2)), ((-2, -1), from_int(3))]);
        let comps = decompose(&c);
        let x = BinaryForm::monomial(1, 1);
        assert_eq!(serre_pair(&comps[0], &x).unwrap(), from_int::<Rat>(3));
    }

    #[test]
    fn serre_pair_degree_mismatch() {
        let comps = decompose(&CechClass::<Rat>::monomial(-2, -1, from_int(1)));
        let wrong = BinaryForm::monomial(2, 0);
        assert!(matches!(
            serre_pair(&comps[0], &wrong),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn dual_form_examples() {
        let comps = decompose(&CechClass::<Rat>::monomial(-2, -1, from_int(1)));
        assert_eq!(dual_form(&comps[0]), BinaryForm::monomial(1, 1)); // x
        let comps = decompose(&CechClass::<Rat>::monomial(-1, -1, from_int(1)));
        assert_eq!(
            dual_form(&comps[0]),
            BinaryForm::from_coeffs(vec![from_int(1)])
        );
        // x^{-1} y^{-3} + 4 x^{-3} y^{-1} -> y^2 + 4 x^2
        let c: CechClass<Rat> =
            CechClass::from_terms([((-1, -3), from_int(1)), ((-3, -1), from_int(4))]);
        let comps = decompose(&c);
        assert_eq!(
            dual_form(&comps[0]),
            BinaryForm::from_coeffs(vec![from_int(1), from_int(0), from_int(4)])
        );
    }

    #[test]
    fn serre_gram_matrix_is_identity() {
        for d in 2i64..=10 {
            for m in 1..=(d - 1) {
                let comps = decompose(&CechClass::<Rat>::monomial(-m, -(d - m), from_int(1)));
                for a in 0..=(d - 2) {
                    let v = BinaryForm::monomial(d - 2, a);
                    let got = serre_pair(&comps[0], &v).unwrap();
                    let expected = if a == m - 1 { 1 } else { 0 };
                    assert_eq!(got, from_int::<Rat>(expected), "d={d} m={m} a={a}");
                }
            }
        }
    }

    #[test]
    fn scalar_ratio_detects_scaling() {
        let a: CechClass<Rat> =
            CechClass::from_terms([((-1, -1), from_int(1)), ((-2, -2), from_int(2))]);
        let b = a.scale(&from_int(5));
        assert_eq!(scalar_ratio(&a, &b), Some(from_int(5)));
        let c = CechClass::from_terms([((-1, -1), from_int(5)), ((-2, -2), from_int(2))]);
        assert_eq!(scalar_ratio(&a, &c), None);
        assert_eq!(scalar_ratio(&a, &CechClass::zero()), None);
    }

    #[test]
    fn validation_rejects_bad_specs() {
        assert!(BundleSpec::<Rat>::try_new(0, 1, lp(&[(0, 0, 1)])).is_err());
        assert!(BundleSpec::<Rat>::try_new(1, 1, LaurentPoly2::zero()).is_err());
        // divisible by x
        assert!(BundleSpec::<Rat>::try_new(2, 1, lp(&[(1, 0, 1)])).is_err());
        // deg_x p >= m
        assert!(BundleSpec::<Rat>::try_new(1, 2, lp(&[(0, 0, 1), (1, 1, 1)])).is_err());
        // negative exponent
        assert!(BundleSpec::<Rat>::try_new(1, 1, lp(&[(-1, 0, 1)])).is_err());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| crate::scalar::ratio(n, d))
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly2<Rat>> {
        proptest::collection::vec(((-5i64..=3, -5i64..=3), arb_rat()), 0..8)
            .prop_map(LaurentPoly2::from_terms)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn normalize_idempotent_and_additive(f in arb_laurent(), g in arb_laurent()) {
            let nf = CechClass::normalize(&f);
            prop_assert_eq!(CechClass::normalize(&nf.to_laurent()), nf.clone());
            let sum = CechClass::normalize(&f.add(&g));
            prop_assert_eq!(sum, nf.add(&CechClass::normalize(&g)));
        }

        #[test]
        fn normalize_on_monomials(i in -5i64..=5, j in -5i64..=5) {
            let m = LaurentPoly2::<Rat>::monomial(i, j, from_int(1));
            let c = CechClass::normalize(&m);
            if i <= -1 && j <= -1 {
                prop_assert_eq!(c.coeff(i, j), from_int::<Rat>(1));
            } else {
                prop_assert!(c.is_zero());
            }
        }

        #[test]
        fn bundle_dictionary_round_trip(f in arb_laurent()) {
            // canonicalize . bundle_class . canonicalize = canonicalize
            let spec = BundleSpec::canonicalize(1, 1, &f.mul_monomial(1, 1, &from_int(1))).unwrap();
            let class = spec.bundle_class();
            let again = BundleSpec::from_class(&class);
            prop_assert_eq!(again.clone(), spec.clone());
            if let BundleSpec::Bundle { .. } = &again {
                prop_assert!(again.validate().is_ok());
            }
        }

        #[test]
        fn decompose_components_sum_back(f in arb_laurent()) {
            let c = CechClass::normalize(&f);
            let comps = decompose(&c);
            for comp in &comps {
                let ws = comp.to_class().weights();
                prop_assert!(ws.is_empty() || ws == vec![comp.d()]);
            }
            prop_assert_eq!(recompose(&comps), c);
        }
    }
}
