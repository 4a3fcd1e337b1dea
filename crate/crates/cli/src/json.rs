//! JSON schemas for every domain type.
//!
//! Rationals serialize as strings `"num"` or `"num/den"` (never floats),
//! reduced, denominator positive. Term lists are emitted sorted by exponent
//! tuple so identical inputs always produce byte-identical output.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use a2star::autact::{Generator, Mat2};
use a2star::cech::decompose;
use a2star::classify::{ExoticityReport, Witness};
use a2star::laurent::Mono4;
use a2star::{
    BundleSpec, CechClass, IsoVerdict, LaurentPoly2, P1Class, P1Cocycle, PlaneAuto, Poly1, Poly4,
    Rat, SectionData,
};

/// Parse `"num"` or `"num/den"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        None => (s.trim(), "1"),
        Some((n, d)) => (n.trim(), d.trim()),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("bad rational numerator {num:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("bad rational denominator {den:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in rational {s:?}"));
    }
    Ok(Rat::new(num, den))
}

/// Format a rational as `"num"` or `"num/den"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDto {
    pub x: i64,
    pub y: i64,
    pub c: String,
}

/// Shared schema of `LaurentPoly2` and `CechClass`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaurentDto {
    pub terms: Vec<TermDto>,
}

pub fn laurent_to_dto(p: &LaurentPoly2) -> LaurentDto {
    LaurentDto {
        terms: p
            .terms()
            .map(|(&(x, y), c)| TermDto {
                x,
                y,
                c: format_rat(c),
            })
            .collect(),
    }
}

pub fn dto_to_laurent(dto: &LaurentDto) -> Result<LaurentPoly2, String> {
    let mut terms = Vec::with_capacity(dto.terms.len());
    for t in &dto.terms {
        terms.push(((t.x, t.y), parse_rat(&t.c)?));
    }
    Ok(LaurentPoly2::from_terms(terms))
}

pub fn class_to_dto(c: &CechClass) -> LaurentDto {
    laurent_to_dto(&c.to_laurent())
}

pub fn dto_to_class(dto: &LaurentDto) -> Result<CechClass, String> {
    Ok(CechClass::normalize(&dto_to_laurent(dto)?))
}

/// `{"trivial": true}` or `{"m": m, "n": n, "p": {...}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BundleDto {
    Trivial { trivial: bool },
    Bundle { m: i64, n: i64, p: LaurentDto },
}

pub fn bundle_to_dto(spec: &BundleSpec) -> BundleDto {
    match spec {
        BundleSpec::Trivial => BundleDto::Trivial { trivial: true },
        BundleSpec::Bundle { m, n, p } => BundleDto::Bundle {
            m: *m,
            n: *n,
            p: laurent_to_dto(p),
        },
    }
}

pub fn dto_to_bundle(dto: &BundleDto) -> Result<BundleSpec, String> {
    match dto {
        BundleDto::Trivial { trivial } => {
            if !trivial {
                return Err("\"trivial\": false is not a bundle spec".into());
            }
            Ok(BundleSpec::Trivial)
        }
        BundleDto::Bundle { m, n, p } => Ok(BundleSpec::Bundle {
            m: *m,
            n: *n,
            p: dto_to_laurent(p)?,
        }),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Poly1Dto {
    pub coeffs: Vec<String>,
}

pub fn poly1_to_dto(p: &Poly1) -> Poly1Dto {
    Poly1Dto {
        coeffs: p.coeffs().iter().map(format_rat).collect(),
    }
}

pub fn dto_to_poly1(dto: &Poly1Dto) -> Result<Poly1, String> {
    let coeffs = dto
        .coeffs
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly1::from_coeffs(coeffs))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Term4Dto {
    pub x: u32,
    pub y: u32,
    pub u: u32,
    pub v: u32,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Poly4Dto {
    pub terms: Vec<Term4Dto>,
}

pub fn poly4_to_dto(p: &Poly4) -> Poly4Dto {
    let mut terms: Vec<Term4Dto> = p
        .terms()
        .map(|(m, c)| Term4Dto {
            x: m.x,
            y: m.y,
            u: m.u,
            v: m.v,
            c: format_rat(c),
        })
        .collect();
    terms.sort_by_key(|t| (t.x, t.y, t.u, t.v));
    Poly4Dto { terms }
}

pub fn dto_to_poly4(dto: &Poly4Dto) -> Result<Poly4, String> {
    let mut terms = Vec::with_capacity(dto.terms.len());
    for t in &dto.terms {
        terms.push((Mono4::new(t.x, t.y, t.u, t.v), parse_rat(&t.c)?));
    }
    Ok(Poly4::from_terms(terms))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriangularDto {
    pub s: Vec<String>,
}

/// Externally tagged: `{"linear": [["a","b"],["c","d"]]}` or
/// `{"triangular": {"s": ["c0", ...]}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorDto {
    Linear([[String; 2]; 2]),
    Triangular(TriangularDto),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WordDto {
    pub word: Vec<GeneratorDto>,
}

pub fn word_to_dto(a: &PlaneAuto) -> WordDto {
    WordDto {
        word: a
            .generators()
            .iter()
            .map(|g| match g {
                Generator::Linear(m) => GeneratorDto::Linear([
                    [format_rat(&m.a), format_rat(&m.b)],
                    [format_rat(&m.c), format_rat(&m.d)],
                ]),
                Generator::Triangular(s) => GeneratorDto::Triangular(TriangularDto {
                    s: s.coeffs().iter().map(format_rat).collect(),
                }),
            })
            .collect(),
    }
}

pub fn dto_to_word(dto: &WordDto) -> Result<PlaneAuto, String> {
    let mut word = Vec::with_capacity(dto.word.len());
    for g in &dto.word {
        match g {
            GeneratorDto::Linear(rows) => {
                word.push(Generator::Linear(Mat2::new(
                    parse_rat(&rows[0][0])?,
                    parse_rat(&rows[0][1])?,
                    parse_rat(&rows[1][0])?,
                    parse_rat(&rows[1][1])?,
                )));
            }
            GeneratorDto::Triangular(t) => {
                let coeffs =
                    t.s.iter()
                        .map(|s| parse_rat(s))
                        .collect::<Result<Vec<_>, _>>()?;
                word.push(Generator::Triangular(Poly1::from_coeffs(coeffs)));
            }
        }
    }
    Ok(PlaneAuto::from_generators(word))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct P1TermDto {
    pub z: i64,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct P1CocycleDto {
    pub terms: Vec<P1TermDto>,
}

pub fn p1_to_dto(q: &P1Cocycle) -> P1CocycleDto {
    P1CocycleDto {
        terms: q
            .terms()
            .map(|(&z, c)| P1TermDto {
                z,
                c: format_rat(c),
            })
            .collect(),
    }
}

pub fn dto_to_p1(dto: &P1CocycleDto) -> Result<P1Cocycle, String> {
    let mut terms = Vec::with_capacity(dto.terms.len());
    for t in &dto.terms {
        terms.push((t.z, parse_rat(&t.c)?));
    }
    Ok(P1Cocycle::from_terms(terms))
}

pub fn decomposition_to_json(c: &CechClass) -> serde_json::Value {
    let comps: Vec<serde_json::Value> = decompose(c)
        .iter()
        .map(|h| {
            serde_json::json!({
                "d": h.d(),
                "coeffs": h.coeffs().iter().map(format_rat).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({ "components": comps })
}

pub fn p1_class_to_json(c: &P1Class) -> serde_json::Value {
    serde_json::json!({
        "d": c.d(),
        "coeffs": c.coeffs().iter().map(format_rat).collect::<Vec<_>>(),
    })
}

fn witness_to_json(w: &Witness<Rat>) -> serde_json::Value {
    match w {
        Witness::Scalar(s) => serde_json::json!({ "scalar": format_rat(s) }),
        Witness::CommonDegree(d) => serde_json::json!({ "common_degree": d }),
        Witness::H3Pair(a, b) => {
            serde_json::json!({ "h3_pair": [format_rat(a), format_rat(b)] })
        }
        Witness::Affineness { left, right } => {
            serde_json::json!({ "affine": [left, right] })
        }
    }
}

pub fn verdict_to_json(v: &IsoVerdict) -> serde_json::Value {
    serde_json::json!({
        "verdict": v.verdict.as_str(),
        "rule": v.rule,
        "witness": v.witness.as_ref().map(witness_to_json),
    })
}

pub fn exotic_report_to_json(r: &ExoticityReport<Rat>) -> serde_json::Value {
    serde_json::json!({
        "smooth_structure": r.smooth_structure,
        "vs_sl2": r.vs_sl2.as_str(),
        "rule": r.rule,
        "h3": format_rat(&r.h3),
        "homogeneous_degree": r.homogeneous_degree,
    })
}

pub fn section_to_json(s: &SectionData) -> serde_json::Value {
    let f1 = format!(
        "f1(z) = (z - ({}))^({}) * ({})",
        format_rat(&s.lambda),
        1 - s.d,
        s.s
    );
    serde_json::json!({
        "d": s.d,
        "lambda": format_rat(&s.lambda),
        "s": poly1_to_dto(&s.s),
        "alpha": poly1_to_dto(&s.alpha),
        "beta": poly1_to_dto(&s.beta),
        "f1": f1,
    })
}

/// Single pretty document with a trailing newline; the one output format.
pub fn render(value: &serde_json::Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable value");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_codec() {
        for s in ["5", "-3/8", "0", "7/2", "-11"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // normalizes on parse
        assert_eq!(format_rat(&parse_rat("2/4").unwrap()), "1/2");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
        // arbitrary precision, far past machine words
        let big = "-100000000000000000000000000007/3";
        assert_eq!(format_rat(&parse_rat(big).unwrap()), big);
    }

    #[test]
    fn bundle_dto_shapes() {
        let trivial: BundleDto = serde_json::from_str(r#"{"trivial": true}"#).unwrap();
        assert!(matches!(
            dto_to_bundle(&trivial).unwrap(),
            BundleSpec::Trivial
        ));
        let spec: BundleDto = serde_json::from_str(
            r#"{"m": 2, "n": 2, "p": {"terms": [{"x":0,"y":0,"c":"1"},{"x":1,"y":1,"c":"1"}]}}"#,
        )
        .unwrap();
        let bundle = dto_to_bundle(&spec).unwrap();
        assert!(bundle.validate().is_ok());
    }

    #[test]
    fn word_dto_round_trip() {
        let raw =
            r#"{"word":[{"linear":[["1","1/2"],["0","1"]]},{"triangular":{"s":["1","-2"]}}]}"#;
        let dto: WordDto = serde_json::from_str(raw).unwrap();
        let word = dto_to_word(&dto).unwrap();
        assert_eq!(word.generators().len(), 2);
        let back = word_to_dto(&word);
        assert!(serde_json::to_string(&back).unwrap().contains("1/2"));
    }
}
