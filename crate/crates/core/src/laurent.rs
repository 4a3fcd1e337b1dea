//! Exact sparse polynomial arithmetic.
//!
//! Four carriers live here: bivariate Laurent polynomials (the raw cocycle
//! carrier), dense univariate polynomials, four-variable polynomials over
//! the ambient coordinate ring of the bundle equations, and the normal form
//! modulo a single relator under the fixed monomial order.
//!
//! Every type stores a canonical representative: no zero coefficient is ever
//! kept, so structural equality coincides with mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A sparse bivariate Laurent polynomial: finite map `(i, j) -> c` standing
/// for `sum c * x^i * y^j` with integer exponents of either sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly2<C> {
    terms: BTreeMap<(i64, i64), C>,
}

impl<C: Scalar> Default for LaurentPoly2<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> LaurentPoly2<C> {
    pub fn zero() -> Self {
        LaurentPoly2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The single term `c * x^i * y^j`; zero `c` yields the zero polynomial.
    pub fn monomial(i: i64, j: i64, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        LaurentPoly2 { terms }
    }

    /// Build from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in iter {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, i: i64, j: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&(i, j)) {
            None => {
                self.terms.insert((i, j), c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert((i, j), sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, by: &C) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.clone() * by.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Multiply by the single term `c * x^i * y^j`.
    pub fn mul_monomial(&self, i: i64, j: i64, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|((a, b), k)| ((a + i, b + j), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn min_exp_x(&self) -> Option<i64> {
        self.terms.keys().map(|(i, _)| *i).min()
    }

    pub fn max_exp_x(&self) -> Option<i64> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn min_exp_y(&self) -> Option<i64> {
        self.terms.keys().map(|(_, j)| *j).min()
    }

    pub fn max_exp_y(&self) -> Option<i64> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    /// True when every exponent is nonnegative (an ordinary polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i >= 0 && j >= 0)
    }

    /// Split into homogeneous parts keyed by total degree `i + j`.
    pub fn homogeneous_parts(&self) -> BTreeMap<i64, LaurentPoly2<C>> {
        let mut parts: BTreeMap<i64, LaurentPoly2<C>> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            parts
                .entry(i + j)
                .or_insert_with(Self::zero)
                .add_term(*i, *j, c.clone());
        }
        parts
    }

    /// Substitute the polynomial map `(x, y) -> (xf, yf)`.
    ///
    /// Only defined for ordinary polynomials: panics if `self` has a negative
    /// exponent (substitution of a general map into a negative power does not
    /// stay a Laurent polynomial).
    pub fn substitute(&self, xf: &Self, yf: &Self) -> Self {
        assert!(
            self.is_polynomial(),
            "substitution requires nonnegative exponents"
        );
        let max_i = self.max_exp_x().unwrap_or(0).max(0) as u32;
        let max_j = self.max_exp_y().unwrap_or(0).max(0) as u32;
        let xpow = power_table(xf, max_i);
        let ypow = power_table(yf, max_j);
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            let t = xpow[*i as usize].mul(&ypow[*j as usize]).scale(c);
            out = out.add(&t);
        }
        out
    }
}

fn power_table<C: Scalar>(base: &LaurentPoly2<C>, max: u32) -> Vec<LaurentPoly2<C>> {
    let mut table = Vec::with_capacity(max as usize + 1);
    table.push(LaurentPoly2::one());
    for e in 1..=max {
        let prev: &LaurentPoly2<C> = &table[(e - 1) as usize];
        table.push(prev.mul(base));
    }
    table
}

impl<C: Scalar> Add for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn add(self, rhs: Self) -> LaurentPoly2<C> {
        LaurentPoly2::add(self, rhs)
    }
}

impl<C: Scalar> Sub for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn sub(self, rhs: Self) -> LaurentPoly2<C> {
        LaurentPoly2::sub(self, rhs)
    }
}

impl<C: Scalar> Mul for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn mul(self, rhs: Self) -> LaurentPoly2<C> {
        LaurentPoly2::mul(self, rhs)
    }
}

impl<C: Scalar> Neg for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn neg(self) -> LaurentPoly2<C> {
        LaurentPoly2::neg(self)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for LaurentPoly2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((i, j), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if *i != 0 {
                write!(f, "*x^{i}")?;
            }
            if *j != 0 {
                write!(f, "*y^{j}")?;
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial in `z`, coefficients in ascending degree.
///
/// Canonical form: empty vector for zero, nonzero trailing coefficient
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly1<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> Default for Poly1<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Poly1<C> {
    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Self::from_coeffs(vec![C::zero(), C::one()])
    }

    /// `c * z^deg`.
    pub fn monomial(c: C, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); deg + 1];
        coeffs[deg] = c;
        Poly1 { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Poly1 { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly1 {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, by: &C) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Poly1 {
            coeffs: self.coeffs.iter().map(|c| c.clone() * by.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

impl<C: Scalar> Add for &Poly1<C> {
    type Output = Poly1<C>;
    fn add(self, rhs: Self) -> Poly1<C> {
        Poly1::add(self, rhs)
    }
}

impl<C: Scalar> Sub for &Poly1<C> {
    type Output = Poly1<C>;
    fn sub(self, rhs: Self) -> Poly1<C> {
        Poly1::sub(self, rhs)
    }
}

impl<C: Scalar> Mul for &Poly1<C> {
    type Output = Poly1<C>;
    fn mul(self, rhs: Self) -> Poly1<C> {
        Poly1::mul(self, rhs)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for Poly1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Monomial in the four ambient variables with nonnegative exponents.
///
/// The ordering is pure lexicographic with `v > u > y > x`: the order under
/// which the bundle relator `x^m v - y^n u - p` has leading monomial `x^m v`.
/// A singleton divisor set is automatically a Groebner basis of its ideal
/// under any monomial order, so remainders are canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono4 {
    pub x: u32,
    pub y: u32,
    pub u: u32,
    pub v: u32,
}

impl Mono4 {
    pub const ONE: Mono4 = Mono4 {
        x: 0,
        y: 0,
        u: 0,
        v: 0,
    };

    pub fn new(x: u32, y: u32, u: u32, v: u32) -> Self {
        Mono4 { x, y, u, v }
    }

    pub fn divides(&self, other: &Mono4) -> bool {
        self.x <= other.x && self.y <= other.y && self.u <= other.u && self.v <= other.v
    }

    /// Componentwise quotient; caller must ensure divisibility.
    pub fn quotient(&self, by: &Mono4) -> Mono4 {
        debug_assert!(by.divides(self));
        Mono4 {
            x: self.x - by.x,
            y: self.y - by.y,
            u: self.u - by.u,
            v: self.v - by.v,
        }
    }

    pub fn product(&self, other: &Mono4) -> Mono4 {
        Mono4 {
            x: self.x + other.x,
            y: self.y + other.y,
            u: self.u + other.u,
            v: self.v + other.v,
        }
    }
}

impl Ord for Mono4 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // lex with v > u > y > x
        (self.v, self.u, self.y, self.x).cmp(&(other.v, other.u, other.y, other.x))
    }
}

impl PartialOrd for Mono4 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x, y, u, v` with nonnegative exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly4<C> {
    terms: BTreeMap<Mono4, C>,
}

impl<C: Scalar> Default for Poly4<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Poly4<C> {
    pub fn zero() -> Self {
        Poly4 {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Mono4::ONE, c)
    }

    pub fn monomial(m: Mono4, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly4 { terms }
    }

    pub fn var_x() -> Self {
        Self::monomial(Mono4::new(1, 0, 0, 0), C::one())
    }

    pub fn var_y() -> Self {
        Self::monomial(Mono4::new(0, 1, 0, 0), C::one())
    }

    pub fn var_u() -> Self {
        Self::monomial(Mono4::new(0, 0, 1, 0), C::one())
    }

    pub fn var_v() -> Self {
        Self::monomial(Mono4::new(0, 0, 0, 1), C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono4, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Embed an ordinary bivariate polynomial (exponents must be >= 0).
    pub fn from_plane_poly(p: &LaurentPoly2<C>) -> Result<Self> {
        let mut out = Self::zero();
        for ((i, j), c) in p.terms() {
            if *i < 0 || *j < 0 {
                return Err(Error::InvalidBundle(
                    "plane polynomial has a negative exponent".into(),
                ));
            }
            out.add_term(Mono4::new(*i as u32, *j as u32, 0, 0), c.clone());
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono4, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono4) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, m: Mono4, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly4 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, by: &C) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Poly4 {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * by.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.product(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Leading term under the fixed order, or `None` for zero.
    pub fn leading(&self) -> Option<(&Mono4, &C)> {
        self.terms.last_key_value()
    }
}

impl<C: Scalar> Add for &Poly4<C> {
    type Output = Poly4<C>;
    fn add(self, rhs: Self) -> Poly4<C> {
        Poly4::add(self, rhs)
    }
}

impl<C: Scalar> Sub for &Poly4<C> {
    type Output = Poly4<C>;
    fn sub(self, rhs: Self) -> Poly4<C> {
        Poly4::sub(self, rhs)
    }
}

impl<C: Scalar> Mul for &Poly4<C> {
    type Output = Poly4<C>;
    fn mul(self, rhs: Self) -> Poly4<C> {
        Poly4::mul(self, rhs)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for Poly4<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (name, e) in [("x", m.x), ("y", m.y), ("u", m.u), ("v", m.v)] {
                if e == 1 {
                    write!(f, "*{name}")?;
                } else if e > 1 {
                    write!(f, "*{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Remainder of multivariate division of `f` by the single relator.
///
/// The quotient map is linear, idempotent, sends the relator (and every
/// multiple of it) to zero, and `nf(f*g) = nf(nf(f)*nf(g))` after one more
/// reduction. A zero relator generates the zero ideal, so `f` is returned
/// unchanged.
pub fn nf_mod_relator<C: Scalar>(f: &Poly4<C>, relator: &Poly4<C>) -> Result<Poly4<C>> {
    let Some((lead, lead_coeff)) = relator.leading() else {
        return Ok(f.clone());
    };
    let lead = *lead;
    let lead_coeff = lead_coeff.clone();
    for (m, _) in relator.terms() {
        if *m != lead && lead.divides(m) {
            return Err(Error::RelatorLeadingTermAmbiguous);
        }
    }
    let tail = relator.sub(&Poly4::monomial(lead, lead_coeff.clone()));
    let mut rem = f.clone();
    loop {
        // largest reducible monomial first; each rewrite replaces it with
        // strictly smaller ones, so the loop terminates
        let next = rem
            .terms
            .iter()
            .rev()
            .find(|(m, _)| lead.divides(m))
            .map(|(m, c)| (*m, c.clone()));
        let Some((m, c)) = next else {
            return Ok(rem);
        };
        let q = m.quotient(&lead);
        let factor = Poly4::monomial(q, c / lead_coeff.clone());
        rem = rem
            .sub(&factor.mul(&Poly4::monomial(lead, lead_coeff.clone())))
            .sub(&factor.mul(&tail));
    }
}
