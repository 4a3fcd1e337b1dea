//! Exact computation with Cech cohomology classes of additive-group bundles
//! over the punctured affine plane.
//!
//! The plane punctured at the origin is covered by the two principal open
//! sets where `x` (resp. `y`) is invertible, and first cohomology with
//! coefficients in the structure sheaf is the quotient of Laurent
//! polynomials by the parts regular on either chart. This crate computes in
//! that quotient with exact coefficient arithmetic:
//!
//! - [`laurent`]: sparse Laurent/ordinary polynomial carriers and the normal
//!   form modulo a single relator,
//! - [`cech`]: canonical cocycle representatives, the `(m, n, p)` bundle
//!   dictionary, weight decomposition and the Serre pairing,
//! - [`autact`]: the pullback representation of plane automorphisms on
//!   classes, with two independent evaluation paths,
//! - [`classify`]: isomorphy verdicts for pairs of bundle total spaces,
//! - [`descent`]: descent of homogeneous classes to the projective line and
//!   the rational-section construction,
//! - [`verify`]: coordinate-ring identity checking modulo bundle relators.
//!
//! All core types are generic over a [`scalar::Scalar`] coefficient field;
//! the aliases at the crate root fix the intended instantiation, exact
//! arbitrary-precision rationals.

pub mod autact;
pub mod cech;
pub mod classify;
pub mod descent;
pub mod error;
pub mod laurent;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational scalar: the default coefficient field.
pub type Rat = num_rational::BigRational;

/// Bivariate Laurent polynomial over [`Rat`].
pub type LaurentPoly2 = laurent::LaurentPoly2<Rat>;
/// Univariate polynomial over [`Rat`].
pub type Poly1 = laurent::Poly1<Rat>;
/// Four-variable polynomial over [`Rat`].
pub type Poly4 = laurent::Poly4<Rat>;
/// Normal-form cocycle class over [`Rat`].
pub type CechClass = cech::CechClass<Rat>;
/// Canonical bundle data over [`Rat`].
pub type BundleSpec = cech::BundleSpec<Rat>;
/// Single weight component over [`Rat`].
pub type HomogComponent = cech::HomogComponent<Rat>;
/// Binary form over [`Rat`].
pub type BinaryForm = cech::BinaryForm<Rat>;
/// Plane automorphism word over [`Rat`].
pub type PlaneAuto = autact::PlaneAuto<Rat>;
/// Classification verdict over [`Rat`].
pub type IsoVerdict = classify::IsoVerdict<Rat>;
/// Descended cocycle on the projective line over [`Rat`].
pub type P1Cocycle = descent::P1Cocycle<Rat>;
/// Normal-form descended class over [`Rat`].
pub type P1Class = descent::P1Class<Rat>;
/// Rational-section data over [`Rat`].
pub type SectionData = descent::SectionData<Rat>;
/// Identity-check outcome over [`Rat`].
pub type IdentityCheck = verify::IdentityCheck<Rat>;
