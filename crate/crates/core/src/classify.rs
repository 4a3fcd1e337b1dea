//! Isomorphy verdicts for pairs of bundle total spaces.
//!
//! The decision procedure is deliberately partial: equal homogeneous degree
//! settles equivariant (hence abstract) isomorphy, the weight-2 coefficient
//! of the cocycle is an algebraic de Rham obstruction, and scalar
//! reparametrization settles bundle isomorphy. Outside the reach of those
//! rules the honest answer is `Unknown`; in particular whether total spaces
//! of different homogeneous degrees `<= -3` can be abstractly isomorphic is
//! not decided here, and no guess is ever made.

use crate::cech::{homogeneous_degree, scalar_ratio, BundleSpec, CechClass};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Outcome kind, ordered from strongest positive to negative knowledge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Isomorphic as bundles over the punctured plane (implies variety
    /// isomorphy).
    BundleIsomorphic,
    /// Isomorphic as abstract varieties.
    VarietyIsomorphic,
    NotIsomorphic,
    Unknown,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::BundleIsomorphic => "BundleIsomorphic",
            Verdict::VarietyIsomorphic => "VarietyIsomorphic",
            Verdict::NotIsomorphic => "NotIsomorphic",
            Verdict::Unknown => "Unknown",
        }
    }
}

/// Data backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness<C> {
    /// `class(b) = scalar * class(a)`.
    Scalar(C),
    /// Shared homogeneous degree (as the actual degree, e.g. `-4`).
    CommonDegree(i64),
    /// The two weight-2 coefficients, exactly one of which vanishes.
    H3Pair(C, C),
    /// Affineness of the two total spaces (nontrivial bundles are affine,
    /// the trivial one is strictly quasi-affine).
    Affineness { left: bool, right: bool },
}

/// A verdict together with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoVerdict<C> {
    pub verdict: Verdict,
    /// Citation tag naming the rule applied, stable across releases.
    pub rule: &'static str,
    pub witness: Option<Witness<C>>,
}

/// Rule tags, in the order `compare` tries them.
pub mod rules {
    pub const TRIVIAL_PAIR: &str = "trivial-pair";
    pub const AFFINE_VS_QUASIAFFINE: &str = "Prop-affine-nontrivial";
    pub const SCALAR: &str = "scalar-reparametrization";
    pub const SAME_DEGREE: &str = "Thm-same-degree";
    pub const DERHAM: &str = "Thm-deRham-coefficient";
    pub const W2_SCALAR: &str = "W2-scalar";
    pub const UNDECIDED: &str = "undecided";
}

/// Coefficient of `x^{-1} y^{-1}` in the bundle cocycle, equivalently of
/// `x^{m-1} y^{n-1}` in `p`.
///
/// Nonzero exactly when a nowhere-vanishing algebraic 3-form on the total
/// space generates top de Rham cohomology; zero exactly when such a form is
/// exact. Vanishing of this coefficient is invariant under pullback by any
/// plane automorphism, so it separates total spaces, not just bundles.
pub fn h3_coefficient<C: Scalar>(spec: &BundleSpec<C>) -> C {
    spec.bundle_class().coeff(-1, -1)
}

/// Total spaces of nontrivial homogeneous bundles are equivariantly
/// isomorphic exactly when the homogeneous degrees agree.
pub fn equivariant_isomorphic(d1: i64, d2: i64) -> bool {
    d1 == d2
}

/// Ordered decision cascade for a pair of bundle specs.
pub fn compare<C: Scalar>(a: &BundleSpec<C>, b: &BundleSpec<C>) -> IsoVerdict<C> {
    // rule 1: two trivial bundles have equal total spaces
    if a.is_trivial() && b.is_trivial() {
        return IsoVerdict {
            verdict: Verdict::VarietyIsomorphic,
            rule: rules::TRIVIAL_PAIR,
            witness: None,
        };
    }
    // rule 2: affine versus strictly quasi-affine
    if a.is_trivial() != b.is_trivial() {
        return IsoVerdict {
            verdict: Verdict::NotIsomorphic,
            rule: rules::AFFINE_VS_QUASIAFFINE,
            witness: Some(Witness::Affineness {
                left: a.is_affine(),
                right: b.is_affine(),
            }),
        };
    }
    let ca = a.bundle_class();
    let cb = b.bundle_class();
    // rule 3: equal up to a nonzero scalar
    if let Some(scalar) = scalar_ratio(&ca, &cb) {
        return IsoVerdict {
            verdict: Verdict::BundleIsomorphic,
            rule: rules::SCALAR,
            witness: Some(Witness::Scalar(scalar)),
        };
    }
    let da = homogeneous_degree(&ca);
    let db = homogeneous_degree(&cb);
    // rule 4: both homogeneous of the same degree
    if let (Some(d1), Some(d2)) = (da, db) {
        if d1 == d2 {
            return IsoVerdict {
                verdict: Verdict::VarietyIsomorphic,
                rule: rules::SAME_DEGREE,
                witness: Some(Witness::CommonDegree(d1)),
            };
        }
    }
    // rule 5: the de Rham coefficient separates when exactly one vanishes
    let h3a = ca.coeff(-1, -1);
    let h3b = cb.coeff(-1, -1);
    if h3a.is_zero() != h3b.is_zero() {
        return IsoVerdict {
            verdict: Verdict::NotIsomorphic,
            rule: rules::DERHAM,
            witness: Some(Witness::H3Pair(h3a, h3b)),
        };
    }
    // rule 6: two weight-2 classes are scalar multiples of the same class
    // (rule 3 already catches this; kept for completeness of the cascade)
    if da == Some(-2) && db == Some(-2) {
        return IsoVerdict {
            verdict: Verdict::VarietyIsomorphic,
            rule: rules::W2_SCALAR,
            witness: Some(Witness::CommonDegree(-2)),
        };
    }
    IsoVerdict {
        verdict: Verdict::Unknown,
        rule: rules::UNDECIDED,
        witness: None,
    }
}

/// Topology and the verdict against the standard sphere for one bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExoticityReport<C> {
    /// The smooth picture, common to every nontrivial bundle here.
    pub smooth_structure: &'static str,
    /// Verdict against the total space of the `(1, 1, 1)` bundle.
    pub vs_sl2: Verdict,
    pub rule: &'static str,
    pub h3: C,
    pub homogeneous_degree: Option<i64>,
}

/// The smooth-structure statement shared by all nontrivial bundles.
pub const SMOOTH_STRUCTURE: &str = "diffeomorphic to the punctured plane times R^2, \
with the real 3-sphere as a strong deformation retract";

/// Report whether a nontrivial bundle's total space is an exotic sphere.
///
/// `NotIsomorphic` when the de Rham coefficient vanishes (it is nonzero on
/// the standard sphere), `BundleIsomorphic` when the class is a scalar
/// multiple of the standard one, `Unknown` otherwise.
pub fn exoticity_report<C: Scalar>(spec: &BundleSpec<C>) -> Result<ExoticityReport<C>> {
    if spec.is_trivial() {
        return Err(Error::TrivialBundle);
    }
    let class = spec.bundle_class();
    let h3 = class.coeff(-1, -1);
    let sl2_class = CechClass::monomial(-1, -1, C::one());
    let (vs_sl2, rule) = if h3.is_zero() {
        (Verdict::NotIsomorphic, rules::DERHAM)
    } else if scalar_ratio(&sl2_class, &class).is_some() {
        (Verdict::BundleIsomorphic, rules::SCALAR)
    } else {
        (Verdict::Unknown, rules::UNDECIDED)
    };
    Ok(ExoticityReport {
        smooth_structure: SMOOTH_STRUCTURE,
        vs_sl2,
        rule,
        h3,
        homogeneous_degree: homogeneous_degree(&class),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly2;
    use crate::scalar::from_int;
    use crate::Rat;
    use num_traits::Zero;

    fn deformed_x22() -> BundleSpec<Rat> {
        BundleSpec::try_new(
            2,
            2,
            LaurentPoly2::from_terms([((0, 0), from_int(1)), ((1, 1), from_int(1))]),
        )
        .unwrap()
    }

    #[test]
    fn h3_values() {
        assert_eq!(h3_coefficient(&BundleSpec::<Rat>::x_mn(1, 1)), from_int(1));
        assert_eq!(h3_coefficient(&BundleSpec::<Rat>::x_mn(3, 1)), from_int(0));
        assert_eq!(h3_coefficient(&deformed_x22()), from_int(1));
        // agrees with the coefficient of x^{m-1} y^{n-1} in p
        let spec = deformed_x22();
        let BundleSpec::Bundle { m, n, p } = &spec else {
            unreachable!()
        };
        assert_eq!(h3_coefficient(&spec), p.coeff(m - 1, n - 1));
    }

    #[test]
    fn equivariant_rule() {
        assert!(equivariant_isomorphic(4, 4));
        assert!(!equivariant_isomorphic(2, 3));
        assert!(equivariant_isomorphic(2, 2));
    }

    #[test]
    fn compare_table() {
        let x11 = BundleSpec::<Rat>::x_mn(1, 1);
        let x21 = BundleSpec::<Rat>::x_mn(2, 1);
        let x22 = BundleSpec::<Rat>::x_mn(2, 2);
        let x31 = BundleSpec::<Rat>::x_mn(3, 1);
        let x41 = BundleSpec::<Rat>::x_mn(4, 1);

        let v = compare(&x22, &x31);
        assert_eq!(v.verdict, Verdict::VarietyIsomorphic);
        assert_eq!(v.rule, rules::SAME_DEGREE);
        assert_eq!(v.witness, Some(Witness::CommonDegree(-4)));

        let v = compare(&x21, &x11);
        assert_eq!(v.verdict, Verdict::NotIsomorphic);
        assert_eq!(v.rule, rules::DERHAM);

        let v = compare(&x22, &deformed_x22());
        assert_eq!(v.verdict, Verdict::NotIsomorphic);
        assert_eq!(v.witness, Some(Witness::H3Pair(from_int(0), from_int(1))));

        let v = compare(&BundleSpec::Trivial, &x11);
        assert_eq!(v.verdict, Verdict::NotIsomorphic);
        assert_eq!(v.rule, rules::AFFINE_VS_QUASIAFFINE);
        assert_eq!(
            v.witness,
            Some(Witness::Affineness {
                left: false,
                right: true
            })
        );

        let scaled = BundleSpec::try_new(1, 1, LaurentPoly2::constant(from_int(5))).unwrap();
        let v = compare(&x11, &scaled);
        assert_eq!(v.verdict, Verdict::BundleIsomorphic);
        assert_eq!(v.rule, rules::SCALAR);
        assert_eq!(v.witness, Some(Witness::Scalar(from_int(5))));

        let v = compare(&x31, &x41);
        assert_eq!(v.verdict, Verdict::Unknown);
        assert_eq!(v.rule, rules::UNDECIDED);
    }

    #[test]
    fn compare_is_reflexive_and_symmetric() {
        let specs = [
            BundleSpec::Trivial,
            BundleSpec::<Rat>::x_mn(1, 1),
            BundleSpec::<Rat>::x_mn(3, 2),
            deformed_x22(),
        ];
        for a in &specs {
            let v = compare(a, a);
            if a.is_trivial() {
                assert_eq!(v.verdict, Verdict::VarietyIsomorphic);
            } else {
                assert_eq!(v.verdict, Verdict::BundleIsomorphic);
            }
            for b in &specs {
                assert_eq!(compare(a, b).verdict, compare(b, a).verdict);
            }
        }
    }

    #[test]
    fn equal_degree_forces_equal_h3_vanishing() {
        // rule 5 can never contradict rule 4
        for d in 2i64..=8 {
            for m1 in 1..d {
                for m2 in 1..d {
                    let a = BundleSpec::<Rat>::x_mn(m1, d - m1);
                    let b = BundleSpec::<Rat>::x_mn(m2, d - m2);
                    assert_eq!(h3_coefficient(&a).is_zero(), h3_coefficient(&b).is_zero());
                }
            }
        }
    }

    #[test]
    fn h3_vanishing_invariant_under_pullback() {
        use crate::autact::{pullback, Generator, Mat2, PlaneAuto};
        use crate::cech::CechClass;
        use crate::laurent::Poly1;
        use crate::scalar::ratio;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};

        let mut rng = StdRng::seed_from_u64(0xd3a);
        for _ in 0..100 {
            let class = loop {
                let nterms = rng.random_range(1..=4);
                let c = CechClass::from_terms((0..nterms).map(|_| {
                    let d = rng.random_range(2..=8);
                    let k = rng.random_range(1..=(d - 1));
                    ((-k, -(d - k)), ratio::<Rat>(rng.random_range(-9..=9), 1))
                }));
                if !c.is_zero() {
                    break c;
                }
            };
            let spec = BundleSpec::from_class(&class);
            let len = rng.random_range(0..=3);
            let word = PlaneAuto::from_generators(
                (0..len)
                    .map(|_| {
                        if rng.random_bool(0.5) {
                            Generator::Linear(loop {
                                let m = Mat2::new(
                                    from_int::<Rat>(rng.random_range(-3..=3)),
                                    from_int(rng.random_range(-3..=3)),
                                    from_int(rng.random_range(-3..=3)),
                                    from_int(rng.random_range(-3..=3)),
                                );
                                if !m.det().is_zero() {
                                    break m;
                                }
                            })
                        } else {
                            let deg = rng.random_range(0..=2);
                            Generator::Triangular(Poly1::from_coeffs(
                                (0..=deg)
                                    .map(|_| from_int(rng.random_range(-2..=2)))
                                    .collect(),
                            ))
                        }
                    })
                    .collect(),
            );
            let image = pullback(&word, &spec.bundle_class()).unwrap();
            let pulled_spec = BundleSpec::from_class(&image);
            assert_eq!(
                h3_coefficient(&spec).is_zero(),
                h3_coefficient(&pulled_spec).is_zero(),
                "word {word:?} on {spec:?}"
            );
        }
    }

    #[test]
    fn exoticity_reports() {
        let r = exoticity_report(&BundleSpec::<Rat>::x_mn(2, 1)).unwrap();
        assert_eq!(r.vs_sl2, Verdict::NotIsomorphic);
        assert_eq!(r.homogeneous_degree, Some(-3));

        let r = exoticity_report(&BundleSpec::<Rat>::x_mn(1, 1)).unwrap();
        assert_eq!(r.vs_sl2, Verdict::BundleIsomorphic);

        let r = exoticity_report(&deformed_x22()).unwrap();
        assert_eq!(r.vs_sl2, Verdict::Unknown);
        assert_eq!(r.h3, from_int(1));

        assert_eq!(
            exoticity_report(&BundleSpec::<Rat>::Trivial),
            Err(Error::TrivialBundle)
        );
    }
}
