//! The built-in verification suite behind `verify-paper`.
//!
//! Each check returns a [`CheckResult`]; the command exits 0 exactly when
//! every check passes. Randomized checks use a fixed seed so output is
//! byte-identical across runs.

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use a2star::autact::{
    base_change_equivalent, pullback, pullback_dual_path, pullback_linear, pullback_triangular,
    Generator, Mat2,
};
use a2star::cech::{decompose, serre_pair};
use a2star::classify::{compare, h3_coefficient, rules, Verdict};
use a2star::descent::{descend, dg_find_section, dg_pick_lambda, dg_r_polynomial, normalize_p1};
use a2star::laurent::Mono4;
use a2star::scalar::{from_int, pow_int, ratio};
use a2star::verify::{
    bundle_relator, nf_bundle, verify_example_x22_x31, x22_check_with, x22_constants, X22_CONSTANTS,
};
use a2star::{
    BinaryForm, BundleSpec, CechClass, Error, LaurentPoly2, PlaneAuto, Poly1, Poly4, Rat,
};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn finish(name: &'static str, failures: Vec<String>, ok_detail: String) -> CheckResult {
    match failures.first() {
        None => CheckResult {
            name,
            pass: true,
            detail: ok_detail,
        },
        Some(first) => CheckResult {
            name,
            pass: false,
            detail: format!("{} failure(s); first: {first}", failures.len()),
        },
    }
}

pub fn random_class(rng: &mut StdRng, dmax: i64) -> CechClass {
    loop {
        let nterms = rng.random_range(1..=4);
        let class = CechClass::from_terms((0..nterms).map(|_| {
            let d = rng.random_range(2..=dmax);
            let k = rng.random_range(1..=(d - 1));
            let c: Rat = ratio(rng.random_range(-9..=9), rng.random_range(1..=4));
            ((-k, -(d - k)), c)
        }));
        // duplicate keys can cancel; the properties need a nonzero class
        if !class.is_zero() {
            return class;
        }
    }
}

pub fn random_linear(rng: &mut StdRng) -> Mat2<Rat> {
    loop {
        let m = Mat2::new(
            from_int::<Rat>(rng.random_range(-3..=3)),
            from_int(rng.random_range(-3..=3)),
            from_int(rng.random_range(-3..=3)),
            from_int(rng.random_range(-3..=3)),
        );
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn random_triangular(rng: &mut StdRng) -> Poly1 {
    let deg = rng.random_range(0..=2);
    Poly1::from_coeffs(
        (0..=deg)
            .map(|_| from_int(rng.random_range(-2..=2)))
            .collect(),
    )
}

pub fn random_word(rng: &mut StdRng, len: usize) -> PlaneAuto {
    let mut word = Vec::new();
    for _ in 0..len {
        if rng.random_bool(0.5) {
            word.push(Generator::Linear(random_linear(rng)));
        } else {
            word.push(Generator::Triangular(random_triangular(rng)));
        }
    }
    PlaneAuto::from_generators(word)
}

pub fn random_poly4(rng: &mut StdRng) -> Poly4 {
    let nterms = rng.random_range(0..6);
    Poly4::from_terms((0..nterms).map(|_| {
        (
            Mono4::new(
                rng.random_range(0..5),
                rng.random_range(0..4),
                rng.random_range(0..3),
                rng.random_range(0..3),
            ),
            from_int(rng.random_range(-9..=9)),
        )
    }))
}

/// Nonzero `q` with `q(0) = 0` and `deg q <= d - 1`.
pub fn random_cocycle_poly(rng: &mut StdRng, d: i64) -> Poly1 {
    loop {
        let mut coeffs = vec![Rat::zero()];
        for _ in 1..d {
            coeffs.push(from_int(rng.random_range(-5..=5)));
        }
        let q = Poly1::from_coeffs(coeffs);
        if !q.is_zero() {
            return q;
        }
    }
}

fn deformed_x22() -> BundleSpec {
    BundleSpec::try_new(
        2,
        2,
        LaurentPoly2::from_terms([((0, 0), from_int::<Rat>(1)), ((1, 1), from_int(1))]),
    )
    .unwrap()
}

/// The explicit second-bundle-structure identity and its mutation suite.
pub fn check_x22_identity() -> CheckResult {
    let mut failures = Vec::new();
    let check = verify_example_x22_x31::<Rat>();
    if !check.passed() {
        failures.push(format!("built-in identity residual: {}", check.residual));
    }
    let base = x22_constants::<Rat>();
    for idx in 0..base.len() {
        let mut mutated = base.clone();
        mutated[idx] = mutated[idx].clone() + ratio::<Rat>(1, 16);
        if x22_check_with(&mutated).passed() {
            failures.push(format!(
                "mutating constant {} left the identity intact",
                X22_CONSTANTS[idx].0
            ));
        }
    }
    finish(
        "x22-x31-cocycle-identity",
        failures,
        format!(
            "residual 0; all {} single-constant mutations fail",
            base.len()
        ),
    )
}

/// The fixed classification table.
pub fn check_classification_table() -> CheckResult {
    let x11 = BundleSpec::x_mn(1, 1);
    let x21 = BundleSpec::x_mn(2, 1);
    let x22 = BundleSpec::x_mn(2, 2);
    let x31 = BundleSpec::x_mn(3, 1);
    let x41 = BundleSpec::x_mn(4, 1);
    let scaled = BundleSpec::try_new(1, 1, LaurentPoly2::constant(from_int(5))).unwrap();

    let table: Vec<(&str, BundleSpec, BundleSpec, Verdict, &str)> = vec![
        (
            "x22 vs x31",
            x22.clone(),
            x31.clone(),
            Verdict::VarietyIsomorphic,
            rules::SAME_DEGREE,
        ),
        (
            "x21 vs sl2",
            x21,
            x11.clone(),
            Verdict::NotIsomorphic,
            rules::DERHAM,
        ),
        (
            "x22 vs deformed",
            x22,
            deformed_x22(),
            Verdict::NotIsomorphic,
            rules::DERHAM,
        ),
        (
            "trivial vs sl2",
            BundleSpec::Trivial,
            x11.clone(),
            Verdict::NotIsomorphic,
            rules::AFFINE_VS_QUASIAFFINE,
        ),
        (
            "sl2 vs 5*class",
            x11,
            scaled,
            Verdict::BundleIsomorphic,
            rules::SCALAR,
        ),
        ("x31 vs x41", x31, x41, Verdict::Unknown, rules::UNDECIDED),
    ];
    let mut failures = Vec::new();
    for (label, a, b, verdict, rule) in &table {
        let got = compare(a, b);
        if got.verdict != *verdict || got.rule != *rule {
            failures.push(format!(
                "{label}: expected {}/{rule}, got {}/{}",
                verdict.as_str(),
                got.verdict.as_str(),
                got.rule
            ));
        }
        if compare(b, a).verdict != got.verdict {
            failures.push(format!("{label}: verdict not symmetric"));
        }
    }
    finish(
        "classification-table",
        failures,
        format!("{} verdicts as expected", table.len()),
    )
}

/// The de Rham coefficient table.
pub fn check_h3_table() -> CheckResult {
    let mut failures = Vec::new();
    let mut count = 0;
    if h3_coefficient(&BundleSpec::x_mn(1, 1)) != from_int(1) {
        failures.push("h3(X(1,1,1)) != 1".into());
    }
    if h3_coefficient(&deformed_x22()) != from_int(1) {
        failures.push("h3(X(2,2,1+xy)) != 1".into());
    }
    for m in 1i64..=7 {
        for n in 1i64..=7 {
            if m + n < 2 || m + n > 8 || (m, n) == (1, 1) {
                continue;
            }
            count += 1;
            let h3 = h3_coefficient(&BundleSpec::x_mn(m, n));
            if !h3.is_zero() {
                failures.push(format!("h3(X({m},{n},1)) = {h3}, expected 0"));
            }
        }
    }
    finish(
        "h3-table",
        failures,
        format!("1 on the two generators, 0 on {count} family members"),
    )
}

/// Same total space for equal weight, same bundle only for equal exponent
/// multiset.
pub fn check_headline_fact() -> CheckResult {
    let mut failures = Vec::new();
    let mut count = 0;
    for total in 4i64..=6 {
        for m in 1..total {
            for p in 1..total {
                let (n, q) = (total - m, total - p);
                count += 1;
                let verdict = compare(&BundleSpec::x_mn(m, n), &BundleSpec::x_mn(p, q));
                let expected = if (m, n) == (p, q) {
                    // identical data: the scalar rule fires first and bundle
                    // isomorphy implies variety isomorphy
                    Verdict::BundleIsomorphic
                } else {
                    Verdict::VarietyIsomorphic
                };
                if verdict.verdict != expected {
                    failures.push(format!(
                        "compare(X({m},{n}), X({p},{q})) = {}",
                        verdict.verdict.as_str()
                    ));
                }
                let bc = base_change_equivalent(m, n, p, q);
                let multiset = (m == p && n == q) || (m == q && n == p);
                if bc != multiset {
                    failures.push(format!("base change for ({m},{n}) vs ({p},{q}): {bc}"));
                }
            }
        }
    }
    finish(
        "headline-fact",
        failures,
        format!("{count} pairs with equal weight: isomorphic total spaces, base change iff equal multiset"),
    )
}

/// Randomized properties of the pullback representation.
pub fn check_representation_properties() -> CheckResult {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(0xa27a);
    let instances = 200;
    for i in 0..instances {
        let c = random_class(&mut rng, 8);

        // two evaluation paths agree on a random word
        let len = rng.random_range(0..=3);
        let word = random_word(&mut rng, len);
        let image = match (pullback(&word, &c), pullback_dual_path(&word, &c)) {
            (Ok(a), Ok(b)) => {
                if a != b {
                    failures.push(format!("instance {i}: paths disagree"));
                }
                a
            }
            _ => {
                failures.push(format!("instance {i}: pullback errored"));
                continue;
            }
        };

        // action law under composition, on both paths
        let len1 = rng.random_range(0..=2);
        let a1 = random_word(&mut rng, len1);
        let len2 = rng.random_range(0..=2);
        let a2 = random_word(&mut rng, len2);
        let combined = pullback(&a1.compose(&a2), &c).unwrap();
        let stepped = pullback(&a2, &pullback(&a1, &c).unwrap()).unwrap();
        if combined != stepped {
            failures.push(format!("instance {i}: action law fails"));
        }
        let combined_dual = pullback_dual_path(&a1.compose(&a2), &c).unwrap();
        let stepped_dual = pullback_dual_path(&a2, &pullback_dual_path(&a1, &c).unwrap()).unwrap();
        if combined_dual != stepped_dual {
            failures.push(format!("instance {i}: dual-path action law fails"));
        }

        // linear generators preserve each weight space and twist the
        // weight-2 line by det^{-1}
        let g = random_linear(&mut rng);
        let lin = pullback_linear(&g, &c).unwrap();
        if lin.weights() != c.weights() {
            failures.push(format!("instance {i}: linear changed the weight set"));
        }
        if lin.coeff(-1, -1) != c.coeff(-1, -1) / g.det() {
            failures.push(format!("instance {i}: weight-2 determinant twist fails"));
        }

        // scalar matrices act on each weight component by lambda^{-d}
        let lambda: Rat = loop {
            let l: Rat = ratio(rng.random_range(-4..=4), rng.random_range(1..=3));
            if !l.is_zero() {
                break l;
            }
        };
        let scalar_mat = Mat2::diagonal(lambda.clone(), lambda.clone());
        let scaled = pullback_linear(&scalar_mat, &c).unwrap();
        let expected = decompose(&c)
            .iter()
            .map(|h| h.to_class().scale(&pow_int(&lambda, -h.d())))
            .fold(CechClass::zero(), |acc, part| acc.add(&part));
        if scaled != expected {
            failures.push(format!("instance {i}: scalar action is not lambda^-d"));
        }

        // triangular generators respect the filtration, fix the top
        // component and the weight-2 coefficient
        let s = random_triangular(&mut rng);
        let tri = pullback_triangular(&s, &c);
        let dtop = c.max_weight().unwrap();
        if tri.max_weight().is_some_and(|d| d > dtop) {
            failures.push(format!("instance {i}: triangular left the filtration"));
        }
        let top = |class: &CechClass| {
            decompose(class)
                .into_iter()
                .find(|h| h.d() == dtop)
                .map(|h| h.to_class())
                .unwrap_or_else(CechClass::zero)
        };
        if top(&tri) != top(&c) {
            failures.push(format!("instance {i}: triangular moved the top component"));
        }
        if tri.coeff(-1, -1) != c.coeff(-1, -1) {
            failures.push(format!("instance {i}: triangular moved the weight-2 line"));
        }

        // vanishing of the weight-2 coefficient is invariant under the
        // full action
        if image.coeff(-1, -1).is_zero() != c.coeff(-1, -1).is_zero() {
            failures.push(format!("instance {i}: weight-2 vanishing not invariant"));
        }
    }
    finish(
        "representation-properties",
        failures,
        format!("{instances} random instances, weights <= 8"),
    )
}

/// Gram matrix of the pairing in dual bases.
pub fn check_serre_gram() -> CheckResult {
    let mut failures = Vec::new();
    for d in 2i64..=10 {
        for m in 1..d {
            let comp = decompose(&CechClass::monomial(-m, -(d - m), from_int(1)))
                .pop()
                .unwrap();
            for a in 0..=(d - 2) {
                let v = BinaryForm::monomial(d - 2, a);
                let got = serre_pair(&comp, &v).unwrap();
                let expected: Rat = from_int(i64::from(a == m - 1));
                if got != expected {
                    failures.push(format!("d={d}, basis {m}, monomial {a}: {got}"));
                }
            }
        }
    }
    finish(
        "serre-gram",
        failures,
        "identity Gram matrix for all weights 2..=10".into(),
    )
}

/// Descent to the quotient line and back.
pub fn check_descent_roundtrip() -> CheckResult {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(0xdece);
    // round trip on random components of every weight
    for d in 2i64..=10 {
        for _ in 0..10 {
            let coeffs: Vec<Rat> = (1..d)
                .map(|_| ratio(rng.random_range(-9..=9), rng.random_range(1..=4)))
                .collect();
            let h = a2star::cech::HomogComponent::new(d, coeffs).unwrap();
            let class = normalize_p1(&descend(&h), d).unwrap();
            if class.coeffs() != h.coeffs() {
                failures.push(format!("weight {d}: round trip changed coefficients"));
            }
        }
    }
    // homogeneous bundles descend to z^m p(z^{-1}, 1)
    let homogeneous: Vec<(i64, i64, LaurentPoly2)> = vec![
        (1, 1, LaurentPoly2::one()),
        (2, 1, LaurentPoly2::one()),
        (3, 1, LaurentPoly2::one()),
        (2, 2, LaurentPoly2::one()),
        (4, 2, LaurentPoly2::one()),
        (
            3,
            3,
            LaurentPoly2::from_terms([((2, 0), from_int::<Rat>(1)), ((0, 2), from_int(3))]),
        ),
        (
            3,
            2,
            LaurentPoly2::from_terms([((1, 0), from_int::<Rat>(2)), ((0, 1), from_int(-1))]),
        ),
    ];
    for (m, n, p) in homogeneous {
        let spec = BundleSpec::try_new(m, n, p.clone()).unwrap();
        let comps = decompose(&spec.bundle_class());
        if comps.len() != 1 {
            failures.push(format!("X({m},{n},..) not homogeneous"));
            continue;
        }
        let got = descend(&comps[0]);
        // z^m p(z^{-1}, 1): the term x^i y^j of p contributes c z^{m-i}
        let expected = a2star::descent::P1Cocycle::from_terms(
            p.terms().map(|(&(i, _), c)| (m - i, c.clone())),
        );
        if got != expected {
            failures.push(format!(
                "X({m},{n},..) descends to {got}, expected {expected}"
            ));
        }
    }
    finish(
        "descent-roundtrip",
        failures,
        "identity on components of weight <= 10; bundle classes match the chart image".into(),
    )
}

/// The rational-section construction.
pub fn check_section_lemma() -> CheckResult {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x5ec7);
    let instances = 100;
    for i in 0..instances {
        let d = rng.random_range(2i64..=8);
        let q = random_cocycle_poly(&mut rng, d);
        let r = dg_r_polynomial(d, &q).unwrap();
        if d == 2 && r != Poly1::constant(-q.coeff(1)) {
            failures.push(format!("instance {i}: d=2 closed form r != -a1"));
        }
        // lambda = 0 is always rejected
        if dg_find_section(d, &q, &Rat::zero()) != Err(Error::BadLambda) {
            failures.push(format!("instance {i}: lambda = 0 accepted"));
        }
        // over small integers, rejection happens exactly at roots of r
        for t in 1..=4i64 {
            let lambda: Rat = from_int(t);
            let outcome = dg_find_section(d, &q, &lambda);
            if r.eval(&lambda).is_zero() {
                if outcome != Err(Error::BadLambda) {
                    failures.push(format!("instance {i}: root lambda = {t} accepted"));
                }
            } else {
                match outcome {
                    Err(e) => failures.push(format!("instance {i}: lambda = {t} rejected: {e}")),
                    Ok(data) => {
                        // degree bound: z^d s + (z - lambda)^{d-1} q = alpha
                        let zd = Poly1::monomial(from_int::<Rat>(1), d as usize);
                        let zl = Poly1::from_coeffs(vec![-lambda.clone(), from_int(1)]);
                        let combo = zd.mul(&data.s).add(&zl.pow((d - 1) as u32).mul(&q));
                        if combo != data.alpha
                            || combo.degree().is_some_and(|deg| deg as i64 > d - 1)
                        {
                            failures.push(format!("instance {i}: degree bound fails"));
                        }
                        if data.s != data.beta.neg() {
                            failures.push(format!("instance {i}: s != -beta"));
                        }
                        let s_at = data.s.eval(&lambda);
                        if s_at != pow_int(&lambda, -d) * data.alpha.eval(&lambda)
                            || s_at != r.eval(&lambda)
                        {
                            failures.push(format!("instance {i}: evaluation identities fail"));
                        }
                        if s_at.is_zero() {
                            failures.push(format!("instance {i}: section degenerates"));
                        }
                    }
                }
            }
        }
        // the deterministic pick is admissible
        let lambda = dg_pick_lambda(d, &q).unwrap();
        if r.eval(&lambda).is_zero() || lambda.is_zero() {
            failures.push(format!("instance {i}: picked lambda inadmissible"));
        }
    }
    finish(
        "section-lemma",
        failures,
        format!("{instances} random instances, weights <= 8"),
    )
}

/// The reduction engine on the three reference bundles.
pub fn check_nf_engine() -> CheckResult {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x4f3e);
    for spec in [
        BundleSpec::x_mn(1, 1),
        BundleSpec::x_mn(2, 2),
        BundleSpec::x_mn(3, 1),
    ] {
        let relator = bundle_relator(&spec).unwrap();
        for i in 0..100 {
            let f = random_poly4(&mut rng);
            let g = random_poly4(&mut rng);
            let nf_f = nf_bundle(&f, &spec).unwrap();
            if nf_bundle(&nf_f, &spec).unwrap() != nf_f {
                failures.push(format!("{spec:?} #{i}: not idempotent"));
            }
            let sum = nf_bundle(&f.add(&g), &spec).unwrap();
            if sum != nf_f.add(&nf_bundle(&g, &spec).unwrap()) {
                failures.push(format!("{spec:?} #{i}: not linear"));
            }
            if !nf_bundle(&g.mul(&relator), &spec).unwrap().is_zero() {
                failures.push(format!("{spec:?} #{i}: relator multiple survives"));
            }
            let prod = nf_bundle(&f.mul(&g), &spec).unwrap();
            let reduced = nf_bundle(&nf_f.mul(&nf_bundle(&g, &spec).unwrap()), &spec).unwrap();
            if prod != reduced {
                failures.push(format!("{spec:?} #{i}: not multiplicative"));
            }
        }
    }
    finish(
        "nf-engine",
        failures,
        "idempotent, linear, sound, multiplicative on 100 instances per bundle".into(),
    )
}

pub fn run_all() -> Vec<CheckResult> {
    vec![
        check_x22_identity(),
        check_classification_table(),
        check_h3_table(),
        check_headline_fact(),
        check_representation_properties(),
        check_serre_gram(),
        check_descent_roundtrip(),
        check_section_lemma(),
        check_nf_engine(),
    ]
}

pub fn to_json(results: &[CheckResult]) -> serde_json::Value {
    serde_json::json!({
        "pass": results.iter().all(|r| r.pass),
        "checks": results.iter().map(|r| serde_json::json!({
            "name": r.name,
            "pass": r.pass,
            "detail": r.detail,
        })).collect::<Vec<_>>(),
    })
}
