//! End-to-end subcommand behavior: happy paths with inline JSON, exit-code
//! contract, and serialization round trips.

use std::process::{Command, Output};

use a2star::autact::{Generator, Mat2};
use a2star::scalar::{from_int, ratio};
use a2star::{BundleSpec, CechClass, LaurentPoly2, PlaneAuto, Poly1, Rat};
use a2star_cli::json;

fn a2star(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a2star"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn normalize_drops_coboundary_terms() {
    let out = a2star(
        [
            "normalize",
            "--poly",
            r#"{"terms":[{"x":-2,"y":-1,"c":"1"},{"x":1,"y":0,"c":"3"},{"x":-1,"y":2,"c":"1"}]}"#,
        ]
        .as_ref(),
    );
    let doc = stdout_json(&out);
    assert_eq!(
        doc,
        serde_json::json!({"terms": [{"x": -2, "y": -1, "c": "1"}]})
    );
}

#[test]
fn decompose_and_degree() {
    let class = r#"{"terms":[{"x":-2,"y":-2,"c":"1"},{"x":-1,"y":-1,"c":"1"}]}"#;
    let doc = stdout_json(&a2star(["decompose", "--class", class].as_ref()));
    assert_eq!(doc["components"][0]["d"], 2);
    assert_eq!(doc["components"][1]["d"], 4);
    let doc = stdout_json(&a2star(["degree", "--class", class].as_ref()));
    assert_eq!(doc["degree"], serde_json::Value::Null);
    let doc = stdout_json(&a2star(
        [
            "degree",
            "--class",
            r#"{"terms":[{"x":-2,"y":-1,"c":"4"}]}"#,
        ]
        .as_ref(),
    ));
    assert_eq!(doc["degree"], -3);
}

#[test]
fn pullback_both_paths() {
    let word = r#"{"word":[{"triangular":{"s":["1"]}}]}"#;
    let class = r#"{"terms":[{"x":-3,"y":-1,"c":"1"}]}"#;
    let expected = serde_json::json!({"terms": [
        {"x": -3, "y": -1, "c": "1"},
        {"x": -1, "y": -2, "c": "-1"},
    ]});
    let doc = stdout_json(&a2star(
        ["pullback", "--word", word, "--class", class].as_ref(),
    ));
    assert_eq!(doc, expected);
    let doc = stdout_json(&a2star(
        ["pullback", "--word", word, "--class", class, "--dual-path"].as_ref(),
    ));
    assert_eq!(doc, expected);
}

#[test]
fn h3_compare_exotic() {
    let sl2 = r#"{"m":1,"n":1,"p":{"terms":[{"x":0,"y":0,"c":"1"}]}}"#;
    let doc = stdout_json(&a2star(["h3", "--bundle", sl2].as_ref()));
    assert_eq!(doc["coefficient"], "1");

    let scaled = r#"{"m":1,"n":1,"p":{"terms":[{"x":0,"y":0,"c":"5"}]}}"#;
    let doc = stdout_json(&a2star(["compare", "--a", sl2, "--b", scaled].as_ref()));
    assert_eq!(doc["verdict"], "BundleIsomorphic");
    assert_eq!(doc["witness"]["scalar"], "5");

    let pairs = format!(r#"[{{"a":{sl2},"b":{scaled}}},{{"a":{sl2},"b":{{"trivial":true}}}}]"#);
    let doc = stdout_json(&a2star(["compare", "--pairs", &pairs].as_ref()));
    assert_eq!(doc["results"][0]["verdict"], "BundleIsomorphic");
    assert_eq!(doc["results"][1]["verdict"], "NotIsomorphic");

    let doc = stdout_json(&a2star(["exotic", "--bundle", sl2].as_ref()));
    assert_eq!(doc["vs_sl2"], "BundleIsomorphic");
    let x21 = r#"{"m":2,"n":1,"p":{"terms":[{"x":0,"y":0,"c":"1"}]}}"#;
    let doc = stdout_json(&a2star(["exotic", "--bundle", x21].as_ref()));
    assert_eq!(doc["vs_sl2"], "NotIsomorphic");
    assert_eq!(doc["h3"], "0");
}

#[test]
fn descent_subcommands() {
    let doc = stdout_json(&a2star(
        [
            "descend",
            "--class",
            r#"{"terms":[{"x":-2,"y":-1,"c":"1"}]}"#,
        ]
        .as_ref(),
    ));
    assert_eq!(doc["d"], 3);
    assert_eq!(doc["terms"], serde_json::json!([{"z": 2, "c": "1"}]));

    let doc = stdout_json(&a2star(
        [
            "p1-normalize",
            "--cocycle",
            r#"{"terms":[{"z":3,"c":"1"},{"z":1,"c":"1"},{"z":0,"c":"1"}]}"#,
            "--d",
            "3",
        ]
        .as_ref(),
    ));
    assert_eq!(doc["coeffs"], serde_json::json!(["1", "0"]));

    let doc = stdout_json(&a2star(
        [
            "dg-section",
            "--d",
            "2",
            "--q",
            r#"{"coeffs":["0","1"]}"#,
            "--lambda",
            "1",
        ]
        .as_ref(),
    ));
    assert_eq!(doc["s"]["coeffs"], serde_json::json!(["-1"]));
    assert_eq!(doc["alpha"]["coeffs"], serde_json::json!(["0", "-1"]));
    assert_eq!(doc["beta"]["coeffs"], serde_json::json!(["1"]));
    assert_eq!(doc["f1"], "f1(z) = (z - (1))^(-1) * ((-1))");

    // lambda picked automatically
    let doc = stdout_json(&a2star(
        [
            "dg-section",
            "--d",
            "3",
            "--q",
            r#"{"coeffs":["0","0","1"]}"#,
        ]
        .as_ref(),
    ));
    assert_eq!(doc["lambda"], "1");
}

#[test]
fn nf_and_verify() {
    let x22 = r#"{"m":2,"n":2,"p":{"terms":[{"x":0,"y":0,"c":"1"}]}}"#;
    let x2v = r#"{"terms":[{"x":2,"y":0,"u":0,"v":1,"c":"1"}]}"#;
    let doc = stdout_json(&a2star(["nf", "--poly", x2v, "--bundle", x22].as_ref()));
    assert_eq!(
        doc["terms"],
        serde_json::json!([
            {"x": 0, "y": 0, "u": 0, "v": 0, "c": "1"},
            {"x": 0, "y": 2, "u": 1, "v": 0, "c": "1"},
        ])
    );

    let y2u = r#"{"terms":[{"x":0,"y":2,"u":1,"v":0,"c":"1"}]}"#;
    let doc = stdout_json(&a2star(
        ["verify", "--lhs", x2v, "--rhs", y2u, "--bundle", x22].as_ref(),
    ));
    assert_eq!(doc["pass"], false);
    assert_eq!(doc["residual"]["terms"][0]["c"], "1");
}

#[test]
fn exit_codes() {
    // malformed JSON -> 2
    let out = a2star(["normalize", "--poly", r#"{"terms": oops}"#].as_ref());
    assert_eq!(exit_code(&out), 2);
    // unreadable file -> 2
    let out = a2star(["normalize", "--poly", "/nonexistent/f.json"].as_ref());
    assert_eq!(exit_code(&out), 2);
    // bad rational string -> 2
    let out = a2star(
        [
            "normalize",
            "--poly",
            r#"{"terms":[{"x":0,"y":0,"c":"1.5"}]}"#,
        ]
        .as_ref(),
    );
    assert_eq!(exit_code(&out), 2);

    // invalid bundle data (p divisible by x) -> 3
    let bad = r#"{"m":2,"n":1,"p":{"terms":[{"x":1,"y":0,"c":"1"}]}}"#;
    let out = a2star(["h3", "--bundle", bad].as_ref());
    assert_eq!(exit_code(&out), 3);
    // lambda = 0 -> 3
    let out = a2star(
        [
            "dg-section",
            "--d",
            "2",
            "--q",
            r#"{"coeffs":["0","1"]}"#,
            "--lambda",
            "0",
        ]
        .as_ref(),
    );
    assert_eq!(exit_code(&out), 3);
    // singular matrix -> 3
    let out = a2star(
        [
            "pullback",
            "--word",
            r#"{"word":[{"linear":[["1","2"],["2","4"]]}]}"#,
            "--class",
            r#"{"terms":[{"x":-1,"y":-1,"c":"1"}]}"#,
        ]
        .as_ref(),
    );
    assert_eq!(exit_code(&out), 3);
    // weight above the guard -> 3
    let out = a2star(
        [
            "pullback",
            "--word",
            r#"{"word":[]}"#,
            "--class",
            r#"{"terms":[{"x":-70,"y":-1,"c":"1"}]}"#,
        ]
        .as_ref(),
    );
    assert_eq!(exit_code(&out), 3);
    // exotic on the trivial bundle -> 3
    let out = a2star(["exotic", "--bundle", r#"{"trivial":true}"#].as_ref());
    assert_eq!(exit_code(&out), 3);
    // descend on a mixed class -> 3
    let out = a2star(
        [
            "descend",
            "--class",
            r#"{"terms":[{"x":-2,"y":-2,"c":"1"},{"x":-1,"y":-1,"c":"1"}]}"#,
        ]
        .as_ref(),
    );
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn serialization_round_trips() {
    let laurent = LaurentPoly2::from_terms([
        ((-3, 2), ratio::<Rat>(-3, 8)),
        ((0, 0), from_int(5)),
        ((2, -1), ratio(1, 2)),
    ]);
    let dto = json::laurent_to_dto(&laurent);
    assert_eq!(json::dto_to_laurent(&dto).unwrap(), laurent);

    let class = CechClass::from_terms([((-1, -1), ratio::<Rat>(7, 3)), ((-2, -4), from_int(-2))]);
    let dto = json::class_to_dto(&class);
    assert_eq!(json::dto_to_class(&dto).unwrap(), class);

    for spec in [
        BundleSpec::Trivial,
        BundleSpec::x_mn(3, 2),
        BundleSpec::try_new(
            2,
            2,
            LaurentPoly2::from_terms([((0, 0), from_int::<Rat>(1)), ((1, 1), from_int(1))]),
        )
        .unwrap(),
    ] {
        let dto = json::bundle_to_dto(&spec);
        assert_eq!(json::dto_to_bundle(&dto).unwrap(), spec);
    }

    let poly1 = Poly1::from_coeffs(vec![ratio::<Rat>(0, 1), ratio(-2, 3), from_int(4)]);
    let dto = json::poly1_to_dto(&poly1);
    assert_eq!(json::dto_to_poly1(&dto).unwrap(), poly1);

    let word = PlaneAuto::from_generators(vec![
        Generator::Linear(Mat2::new(
            from_int::<Rat>(0),
            from_int(1),
            from_int(-1),
            ratio(1, 2),
        )),
        Generator::Triangular(Poly1::from_coeffs(vec![from_int::<Rat>(1), from_int(-2)])),
    ]);
    let dto = json::word_to_dto(&word);
    assert_eq!(json::dto_to_word(&dto).unwrap(), word);

    let poly4: a2star::Poly4 = {
        use a2star::laurent::Mono4;
        a2star::Poly4::from_terms([
            (Mono4::new(1, 0, 2, 0), ratio::<Rat>(5, 16)),
            (Mono4::new(0, 1, 1, 1), ratio(-5, 4)),
        ])
    };
    let dto = json::poly4_to_dto(&poly4);
    assert_eq!(json::dto_to_poly4(&dto).unwrap(), poly4);

    let p1 = a2star::P1Cocycle::from_terms([(1, ratio::<Rat>(1, 2)), (-2, from_int(3))]);
    let dto = json::p1_to_dto(&p1);
    assert_eq!(json::dto_to_p1(&dto).unwrap(), p1);
}

#[test]
fn verify_paper_smoke() {
    let out = a2star(["verify-paper"].as_ref());
    let doc = stdout_json(&out);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 9);
}
