//! End-to-end tests of the command-line interface, including the file
//! formats and exit-code contract: 0 success, 1 rejection, 2 input error.

use std::io::Write;
use std::path::Path;

use liebax::cli::run;
use liebax::fixtures::fixture;
use liebax::io::{parse_algebra, parse_form, parse_matrix, parse_tensor};
use liebax::{QAlgebra, Rat};

fn cli(args: &[&str]) -> (i32, String) {
    let mut full = vec!["liebax".to_string()];
    full.extend(args.iter().map(ToString::to_string));
    run(full)
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn classify_fixture_verdicts_and_exit_codes() {
    let (code, out) = cli(&["classify", "--fixture", "sl2q", "--tensor", "r1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("TRIANGULAR"));

    let (code, out) = cli(&["classify", "--fixture", "sl2q", "--tensor", "r2"]);
    assert_eq!(code, 0);
    assert!(out.contains("FACTORIZABLE"));

    let (code, out) = cli(&["classify", "--fixture", "sl2q", "--tensor", "r3"]);
    assert_eq!(code, 0);
    assert!(out.contains("ALMOST_FACTORIZABLE"));
    assert!(out.contains("extension discriminant: -1"));
}

#[test]
fn classify_structured_output_carries_witnesses() {
    let (code, out) = cli(&[
        "classify",
        "--fixture",
        "sl2q",
        "--tensor",
        "r3",
        "--format",
        "structured",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["verdict"], "ALMOST_FACTORIZABLE");
    assert_eq!(value["extension_d"], -1);
    // mu is rendered over the extension: quadratic scalar objects
    assert_eq!(value["mu"][0][0]["d"], -1);
    assert_eq!(value["mu"][0][0]["b"], "2");
    assert_eq!(value["nu"][0][0], "4");
    // text and structured renderings agree on the verdict
    let (_, text) = cli(&["classify", "--fixture", "sl2q", "--tensor", "r3"]);
    assert!(text.contains("ALMOST_FACTORIZABLE"));
}

#[test]
fn classify_extended_field_is_factorizable() {
    // over Q(sqrt(-1)) the r3 structure is factorizable outright
    let (code, out) = cli(&[
        "classify",
        "--fixture",
        "sl2q",
        "--tensor",
        "r3",
        "--extend",
        "-1",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: FACTORIZABLE"));
    assert!(out.contains("sqrt(-1)"));
}

#[test]
fn rb_exit_codes() {
    let (code, out) = cli(&["rb", "--fixture", "sl2c6", "--map", "B", "--weight", "2phi"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("identically zero"));

    let (code, out) = cli(&["rb", "--fixture", "sl2q", "--map", "id", "--weight", "zero"]);
    assert_eq!(code, 1);
    assert!(out.contains("fails"));
}

#[test]
fn check_validates_fixture_and_bad_form() {
    let (code, _) = cli(&["check", "--fixture", "sl2q"]);
    assert_eq!(code, 0);

    let dir = tempfile::tempdir().unwrap();
    let f = fixture("sl2q").unwrap();
    let algebra_json = serde_json::to_string(&liebax::io::emit_algebra(&f.algebra, None)).unwrap();
    let algebra_path = write_file(dir.path(), "sl2.json", &algebra_json);
    // the identity gram matrix is not invariant for sl2
    let form_path = write_file(
        dir.path(),
        "form.json",
        r#"{"matrix": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
    );
    let (code, out) = cli(&["check", "--algebra", &algebra_path, "--form", &form_path]);
    assert_eq!(code, 1);
    assert!(out.contains("form invariant: FAILED"));
}

#[test]
fn malformed_and_invalid_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    // malformed JSON
    let bad = write_file(dir.path(), "bad.json", "{ not json");
    let (code, out) = cli(&["classify", "--algebra", &bad, "--tensor", "r1"]);
    assert_eq!(code, 2);
    assert!(out.contains("error:"));
    // antisymmetry-implied entries (i > j) are rejected
    let lower = write_file(
        dir.path(),
        "lower.json",
        r#"{"dim": 2, "brackets": [{"i": 2, "j": 1, "coeffs": ["1", "0"]}],
            "field": {"kind": "Q"}}"#,
    );
    let (code, out) = cli(&["check", "--algebra", &lower]);
    assert_eq!(code, 2);
    assert!(out.contains("antisymmetry"));
    // structure constants violating Jacobi are rejected by classify
    let nonjacobi = write_file(
        dir.path(),
        "nonjacobi.json",
        r#"{"dim": 3,
            "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "0", "1"]},
                          {"i": 2, "j": 3, "coeffs": ["0", "1", "0"]}],
            "field": {"kind": "Q"}}"#,
    );
    let form = write_file(
        dir.path(),
        "someform.json",
        r#"{"matrix": [["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
    );
    let tensor = write_file(
        dir.path(),
        "tensor.json",
        r#"{"coeffs": [["0","1","0"],["-1","0","0"],["0","0","0"]]}"#,
    );
    let (code, out) = cli(&[
        "classify",
        "--algebra",
        &nonjacobi,
        "--form",
        &form,
        "--tensor",
        &tensor,
    ]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("Jacobi"));
    // unknown fixture
    let (code, _) = cli(&["classify", "--fixture", "nope", "--tensor", "r1"]);
    assert_eq!(code, 2);
    // missing required inputs
    let (code, _) = cli(&["classify", "--fixture", "sl2q"]);
    assert_eq!(code, 2);
}

#[test]
fn double_emits_parseable_algebra_files() {
    // operator double D_{R1, 0}: 6-dimensional Lie algebra
    let (code, out) = cli(&[
        "double",
        "--fixture",
        "sl2q",
        "--map",
        "R1",
        "--weight",
        "zero",
    ]);
    assert_eq!(code, 0, "{out}");
    let alg: QAlgebra = parse_algebra(&out).unwrap();
    assert_eq!(alg.dim(), 6);
    assert!(alg.jacobi_check());
    // emitted files round-trip bit-exactly
    let emitted = serde_json::to_string_pretty(&liebax::io::emit_algebra(&alg, None)).unwrap();
    assert_eq!(out.trim_end(), emitted);

    // classical double of the factorizable tensor
    let (code, out) = cli(&["double", "--fixture", "sl2q", "--tensor", "r2"]);
    assert_eq!(code, 0);
    let alg: QAlgebra = parse_algebra(&out).unwrap();
    assert_eq!(alg.dim(), 6);
    assert!(alg.jacobi_check());
    // basis names carry the dual marker
    assert!(out.contains("x*"));
}

#[test]
fn fixtures_listing_and_bundles_match_builtins() {
    let (code, out) = cli(&["fixtures"]);
    assert_eq!(code, 0);
    assert!(out.contains("sl2q") && out.contains("sl2c6"));

    // the checked-in bundle files agree with the programmatic fixtures
    for name in ["sl2q", "sl2c6"] {
        let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let bundle: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let f = fixture(name).unwrap();
        let alg: QAlgebra = parse_algebra::<Rat>(&bundle["algebra"].to_string()).unwrap();
        assert_eq!(alg, f.algebra, "{name} algebra differs from the bundle");
        let form = parse_form::<Rat>(&bundle["form"].to_string(), None).unwrap();
        assert_eq!(&form, &f.form);
        for (tname, tensor) in &f.tensors {
            let parsed = parse_tensor::<Rat>(&bundle["tensors"][tname].to_string(), None).unwrap();
            assert_eq!(&parsed, tensor, "{name}/{tname}");
        }
        for (mname, map) in &f.maps {
            let parsed = parse_matrix::<Rat>(&bundle["maps"][mname].to_string(), None).unwrap();
            assert_eq!(&parsed, map, "{name}/{mname}");
        }
        // and the CLI emits the same bundle
        let (code, emitted) = cli(&["fixtures", "--fixture", name]);
        assert_eq!(code, 0);
        let emitted_value: serde_json::Value = serde_json::from_str(&emitted).unwrap();
        assert_eq!(emitted_value, bundle);
    }
}

#[test]
fn quadratic_extension_files_classify() {
    // emit the sl2 data over Q(sqrt(-1)) and classify r3 from files
    let dir = tempfile::tempdir().unwrap();
    let f = fixture("sl2q").unwrap();
    let d = -1;
    let ext = liebax::liealg::extend_scalars(&f.algebra, d);
    let algebra_path = write_file(
        dir.path(),
        "ext.json",
        &serde_json::to_string(&liebax::io::emit_algebra(&ext, Some(d))).unwrap(),
    );
    let gram = f.form.gram().map(|s| liebax::Scalar::lift_to_quad(s, d));
    let form_path = write_file(
        dir.path(),
        "extform.json",
        &serde_json::to_string(&liebax::io::emit_matrix(&gram)).unwrap(),
    );
    let r3 = f
        .tensor("r3")
        .unwrap()
        .map(|s| liebax::Scalar::lift_to_quad(s, d));
    let tensor_path = write_file(
        dir.path(),
        "extr3.json",
        &serde_json::to_string(&liebax::io::emit_tensor(&r3)).unwrap(),
    );
    let (code, out) = cli(&[
        "classify",
        "--algebra",
        &algebra_path,
        "--form",
        &form_path,
        "--tensor",
        &tensor_path,
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: FACTORIZABLE"));
    // --extend on an already-extended file is rejected
    let (code, _) = cli(&[
        "classify",
        "--algebra",
        &algebra_path,
        "--form",
        &form_path,
        "--tensor",
        &tensor_path,
        "--extend",
        "2",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn centroid_subcommand_reports_dimension() {
    let (code, out) = cli(&["centroid", "--fixture", "sl2c6"]);
    assert_eq!(code, 0);
    assert!(out.contains("centroid dimension: 2"));
}

#[test]
fn extend_discriminants_are_normalized() {
    // Q(sqrt(-4)) is Q(sqrt(-1)): factorizable there
    let (code, out) = cli(&[
        "classify",
        "--fixture",
        "sl2q",
        "--tensor",
        "r3",
        "--extend",
        "-4",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: FACTORIZABLE"));
    // Q(sqrt(8)) is Q(sqrt(2)), which has no sqrt(-4): honest undecided
    let (code, out) = cli(&[
        "classify",
        "--fixture",
        "sl2q",
        "--tensor",
        "r3",
        "--extend",
        "8",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("BIALGEBRA_SUBTYPE_UNDECIDED"));
}

#[test]
fn structured_output_for_check_centroid_rb() {
    let (code, out) = cli(&["check", "--fixture", "sl2q", "--format", "structured"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["jacobi"], true);
    assert_eq!(value["form_invariant"], true);

    let (code, out) = cli(&["centroid", "--fixture", "sl2c6", "--format", "structured"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["dimension"], 2);
    assert_eq!(value["oversized"], false);
    assert_eq!(value["basis"].as_array().unwrap().len(), 2);

    let (code, out) = cli(&[
        "rb",
        "--fixture",
        "sl2c6",
        "--map",
        "B",
        "--weight",
        "2phi",
        "--format",
        "structured",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["residual_zero"], true);

    let (code, out) = cli(&[
        "rb",
        "--fixture",
        "sl2q",
        "--map",
        "id",
        "--format",
        "structured",
    ]);
    assert_eq!(code, 1);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["residual_zero"], false);
    assert_eq!(value["nonzero_pairs"], 6);
}
