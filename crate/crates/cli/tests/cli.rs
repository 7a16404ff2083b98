use std::path::Path;
use std::process::{Command, Output};

use hypsec_core::curves::{elliptic_quintic, eval_point, CurveParam};
use hypsec_core::detrep::SymPencil;
use hypsec_core::exactalg::q;
use hypsec_core::fixtures;
use hypsec_core::io::{rational_vec_strings, read_poly};
use serde_json::Value;

fn hypsec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypsec")).args(args).env_remove("HYPSEC_MAX_HEIGHT").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    let out = hypsec(args);
    out.status.code().unwrap_or_else(|| panic!("{args:?} killed"))
}

fn json(args: &[&str]) -> Value {
    let out = hypsec(args);
    assert!(matches!(out.status.code(), Some(0 | 2 | 3)), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn joined(v: &[hypsec_core::exactalg::Q]) -> String {
    rational_vec_strings(v).join(",")
}

#[test]
fn certify_examples() {
    assert_eq!(code(&["certify", "elliptic-quintic", "--e", "2,0,-3,0,6"]), 0);
    assert_eq!(code(&["certify", "genus2-sextic-secant", "--e", "0,3,-1,0,28", "--lines", "40"]), 0);
    let v = json(&["certify", "fixture:sum-of-squares-quadric", "--e", "1,0,0"]);
    assert_eq!(v["status"], "refuted");
    assert!(v["refutation_witness"].is_array());
    assert_eq!(code(&["certify", "fixture:sum-of-squares-quadric", "--e", "1,0,0"]), 2);
}

#[test]
fn verify_rep_examples() {
    assert_eq!(code(&["verify-rep", "elliptic-pencil", "elliptic-quintic", "--e", "2,0,-3,0,6"]), 0);
    assert_eq!(code(&["verify-rep", "hankel:2", "hankel-det:2", "--e", "uniform:5"]), 0);

    let dir = tempfile::tempdir().unwrap();
    let mut pencil = fixtures::elliptic_pencil().to_json();
    pencil["matrices"][1][0][0] = Value::String("7".into());
    let path = dir.path().join("perturbed.json");
    std::fs::write(&path, pencil.to_string()).unwrap();
    let args = ["verify-rep", path.to_str().unwrap(), "elliptic-quintic", "--e", "2,0,-3,0,6"];
    assert_eq!(code(&args), 2);
    let v = json(&args);
    assert_eq!(v["identity_holds"], false);
    assert!(v["mismatch"]["monomial"].is_array());
}

#[test]
fn member_exit_codes() {
    assert_eq!(code(&["member", "hankel", "--k", "2", "--v", "uniform:5"]), 0);
    assert_eq!(code(&["member", "hankel", "--v", "1,0,0,0,0"]), 3);
    assert_eq!(code(&["member", "hankel", "--v", "1,0,-1,0,1"]), 2);
    assert_eq!(code(&["member", "hankel", "--k", "3", "--v", "uniform:5"]), 1);

    // 2P + 3Q for rational points P, Q lies on the hypersurface, so on the cone boundary
    let c = elliptic_quintic();
    let p = eval_point(&c, &CurveParam::Point { x: q(-1), y: q(0) }).unwrap();
    let r = eval_point(&c, &CurveParam::Point { x: q(0), y: q(0) }).unwrap();
    let s: Vec<_> = p.iter().zip(&r).map(|(a, b)| a * q(2) + b * q(3)).collect();
    let e = "2,0,-3,0,6";
    assert_eq!(code(&["member", "cone", "elliptic-quintic", "--e", e, "--v", &joined(&s)]), 3);
    assert_eq!(code(&["member", "cone", "elliptic-quintic", "--e", e, "--v", e]), 0);
    assert_eq!(code(&["member", "cone", "elliptic-quintic", "--e", e, "--v", "-2,0,3,0,-6"]), 2);

    // projection of a point of S₀ to the visible coordinates of the slack pencil
    let z = [&r[0], &r[2], &r[3], &r[4]].map(|x| x.to_string()).join(",");
    let v = json(&["member", "shadow", "slack-pencil", "--z", &z]);
    assert_eq!(v["member"], true);
    assert!(!v["slack_witness"].is_null() || !v["algebraic_witness"].is_null());
    assert_eq!(code(&["member", "shadow", "slack-pencil", "--z", "-1,1,0,-1"]), 2);
    assert_eq!(code(&["member", "nope", "x"]), 1);
}

#[test]
fn formulas_print_integers() {
    assert_eq!(json(&["formulas", "secant-degree", "5", "1", "1"])["secant_degree"], 5);
    assert_eq!(json(&["formulas", "beta", "2", "5"])["beta"], 5);
    let b = json(&["formulas", "shadow-bounds", "5", "1"]);
    assert_eq!((b["dim_bound"].as_u64(), b["degree_bound"].as_u64()), (Some(6), Some(6)));
    assert_eq!(b["matrix_size_bound_m_curve"], 6);
    let t = String::from_utf8(hypsec(&["formulas", "chi", "2", "1", "3", "--format", "text"]).stdout).unwrap();
    assert!(t.starts_with("chi: "));
}

#[test]
fn construct_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hankel3.json");
    let o = hypsec(&["construct", "hankel", "--k", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    // the written pencil is a valid input and represents its own determinant
    assert_eq!(code(&["verify-rep", out.to_str().unwrap(), "hankel-det:3", "--e", "uniform:7"]), 0);

    let v = json(&["construct", "vastly-real", "elliptic-quintic", "--k", "1"]);
    assert_eq!(v["points_p0"].as_array().unwrap().len(), v["n"].as_u64().unwrap() as usize);
    let d = json(&["construct", "double-cover", "--a", "0", "--b", "1"]);
    assert_eq!(d["identity_holds"], true);
    assert_eq!(code(&["construct", "double-cover", "--a", "-1/2", "--b", "3"]), 0);
    let x = json(&["construct", "dixon", "elliptic-pencil", "--f", "elliptic-quintic"]);
    assert_eq!((x["status"].as_str(), x["h_degree"].as_u64()), (Some("complete"), Some(4)));
    let y = json(&["construct", "dixon", "elliptic-pencil", "--row", "2"]);
    assert_eq!((y["status"].as_str(), y["order"].clone()), (Some("complete"), serde_json::json!([2, 0, 1, 3, 4])));
    assert_eq!(code(&["construct", "dixon", "elliptic-pencil", "--row", "9"]), 1);
}

#[test]
fn fixtures_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let reg = json(&["fixtures"]);
    assert_eq!(reg["version"], fixtures::REGISTRY_VERSION);
    for f in reg["data_files"].as_array().unwrap() {
        assert_eq!(f["sha256"].as_str().unwrap().len(), 64);
    }
    for name in ["elliptic-quintic", "genus2-sextic-secant", "sum-of-squares-quadric", "hankel-det:2"] {
        let v = json(&["fixtures", "poly", name]);
        let want = fixtures::poly_fixture(name).unwrap();
        let text = v["text"].as_str().unwrap();
        assert_eq!(read_poly(text, Some(want.nvars())).unwrap(), want, "{name}");
        // printed form fed back as a file gives the same polynomial and certificate
        let path = dir.path().join(format!("{}.txt", name.replace(':', "_")));
        std::fs::write(&path, format!("# nvars: {}\n{text}\n", want.nvars())).unwrap();
        let e = match name {
            "elliptic-quintic" => "e-quintic",
            "genus2-sextic-secant" => "e-octic",
            "hankel-det:2" => "uniform:5",
            _ => "1,0,0",
        };
        let a = hypsec(&["certify", name, "--e", e, "--lines", "3"]);
        let b = hypsec(&["certify", path.to_str().unwrap(), "--e", e, "--lines", "3"]);
        assert_eq!(a.stdout, b.stdout, "{name}");
        assert_eq!(a.status.code(), b.status.code());
    }
    for name in ["elliptic-pencil", "slack-pencil", "hankel:1", "hankel:4"] {
        let printed = hypsec(&["fixtures", "pencil", name]).stdout;
        let path = dir.path().join("p.json");
        std::fs::write(&path, &printed).unwrap();
        let v: Value = serde_json::from_slice(&printed).unwrap();
        assert_eq!(v, fixtures::pencil_fixture(name).unwrap().to_json());
        let parsed = SymPencil::read(std::str::from_utf8(&printed).unwrap(), None).unwrap();
        assert_eq!(parsed.to_json(), v);
        let again = hypsec(&["fixtures", "pencil", name, "--out", path.to_str().unwrap()]);
        assert!(again.status.success());
        assert_eq!(std::fs::read(&path).unwrap(), printed, "{name}");
    }
    for name in ["e-quintic", "e-octic", "uniform:3"] {
        let v = json(&["fixtures", "point", name]);
        let want = rational_vec_strings(&fixtures::point_fixture(name).unwrap());
        assert_eq!(v, serde_json::json!(want));
    }
    assert!(json(&["fixtures", "curve", "rnc:4"])["components"].is_array());
    assert_eq!(code(&["fixtures", "poly", "nope"]), 1);
}

#[test]
fn seed_reproduces_output_byte_for_byte() {
    for args in [
        &["certify", "elliptic-quintic", "--e", "e-quintic", "--lines", "30", "--seed", "7"][..],
        &["sample", "elliptic-quintic", "--k", "1", "--seed", "11"][..],
        &["sample", "genus2-sextic", "--k", "2", "--seed", "11"][..],
    ] {
        let a = hypsec(args);
        let b = hypsec(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout);
    }
    let a = hypsec(&["sample", "elliptic-quintic", "--seed", "1"]).stdout;
    let b = hypsec(&["sample", "elliptic-quintic", "--seed", "2"]).stdout;
    assert_ne!(a, b);
}

#[test]
fn max_height_env_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_hypsec"))
        .args(["certify", "elliptic-quintic", "--e", "e-quintic", "--lines", "5"])
        .env("HYPSEC_MAX_HEIGHT", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["height"], 3);
    assert_eq!(json(&["certify", "elliptic-quintic", "--e", "e-quintic", "--lines", "5"])["height"], 10);
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["certify", "elliptic-quintic"]), 1);
    assert_eq!(code(&["certify", "elliptic-quintic", "--e", "1,2"]), 1);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "x0^2 + x1^2\n  - 3*x2^2 +* x0\n").unwrap();
    let o = hypsec(&["certify", bad.to_str().unwrap(), "--e", "1,0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 13"));

    let pencil = dir.path().join("p.txt");
    std::fs::write(&pencil, "x0, x1\nx1, x2\n").unwrap();
    let p = pencil.to_str().unwrap();
    assert_eq!(code(&["member", "shadow", p, "--z", "1,0"]), 1);
    assert_eq!(code(&["member", "shadow", p, "--z", "1,0", "--nvars", "3"]), 0);
    assert_eq!(code(&["member", "shadow", p, "--z", "1", "--nvars", "3", "--slack", "2"]), 1);
    assert!(!Path::new("does-not-exist.json").exists());
    assert_eq!(code(&["verify-rep", "does-not-exist.json", "elliptic-quintic", "--e", "e-quintic"]), 1);
}

#[test]
fn shadow_file_carries_slack_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = fixtures::slack_pencil().to_json();
    v["slack"] = Value::from(1);
    let path = dir.path().join("shadow.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(code(&["member", "shadow", p, "--z", "-1,1,0,-1"]), 2);
    v["slack"] = Value::from(4);
    std::fs::write(&path, v.to_string()).unwrap();
    assert_eq!(code(&["member", "shadow", p, "--z", "1"]), 1);
}
