mod common;

use common::{data_dir, geonerve};

fn stdout(o: &std::process::Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &std::process::Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn validate_accepts_the_sample_data() {
    for entry in std::fs::read_dir(data_dir()).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let o = geonerve(&["validate", &name]);
        let want = if name.starts_with("broken") { 1 } else { 0 };
        assert_eq!(o.status.code(), Some(want), "{name}: {}", stderr(&o));
    }
}

#[test]
fn rep_check_prints_the_summary() {
    for fam in ["z3.fam.json", "z2.fam.json"] {
        let o = geonerve(&["rep-check", "--groupoid", "z2.cat.json", "--family", fam]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("classes: 2, homotopy classes: 2, bijection: PASS"));
        assert_eq!(lines.next(), Some("vertex-constrained homotopy classes: 2"));
    }
}

#[test]
fn broken_inputs_name_the_violated_law() {
    let o = geonerve(&["reconstruct", "broken.smap.json", "--dom", "z2.2cat.json", "--cod", "aut-z3.2cat.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("d_1 naturality"), "{}", stderr(&o));

    let o = geonerve(&["validate", "broken.laxfun.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("normality"));
}

#[test]
fn json_errors_are_structured() {
    let o = geonerve(&["--json-errors", "validate", "broken.laxfun.json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(v["kind"], "invalid");
    assert_eq!(v["violations"][0]["law"], "normality");
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(geonerve(&["validate", "missing.2cat.json"]).status.code(), Some(2));
    assert_eq!(geonerve(&["validate", "z2.2cat.json", "--kind", "nope"]).status.code(), Some(2));
    assert_eq!(geonerve(&["h2", "--groupoid", "z2.cat.json"]).status.code(), Some(2));
    assert_eq!(geonerve(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(geonerve(&["--help"]).status.code(), Some(0));
}

#[test]
fn size_guard_stops_the_search() {
    let o = geonerve(&["--max-branches", "5", "h2", "--groupoid", "z2.cat.json", "--family", "z3.fam.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("search limit"));

    let o = std::process::Command::new(env!("CARGO_BIN_EXE_geonerve"))
        .args(["h2", "--groupoid", "z2.cat.json", "--family", "z3.fam.json"])
        .current_dir(data_dir())
        .env("GEONERVE_MAX_BRANCHES", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn outputs_validate() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let runs: &[(&[&str], &str)] = &[
        (&["nerve", "aut-z3.2cat.json"], "a.sset.json"),
        (&["nerve-map", "z2-twisted.laxfun.json"], "m.smap.json"),
        (&["reconstruct", "z2-twisted.smap.json", "--dom", "z2.2cat.json", "--cod", "aut-z3.2cat.json"], "r.laxfun.json"),
        (&["enum-lax", "z2.2cat.json", "aut-z2.2cat.json"], "e.laxfuns.json"),
        (&["enum-lax", "delta2.2cat.json", "z2.2cat.json"], "d.laxfuns.json"),
    ];
    for (args, name) in runs {
        let out = path(name);
        let mut full = args.to_vec();
        full.extend(["-o", out.as_str()]);
        assert_eq!(geonerve(&full).status.code(), Some(0), "{args:?}");
        let o = geonerve(&["validate", &out]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
    }
}

#[test]
fn nerve_map_and_reconstruct_are_inverse() {
    let o = geonerve(&["reconstruct", "z2-twisted.smap.json", "--dom", "z2.2cat.json", "--cod", "aut-z3.2cat.json"]);
    let rebuilt: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let original: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(data_dir().join("z2-twisted.laxfun.json")).unwrap()).unwrap();
    for key in ["F0", "F1", "F2", "sigma"] {
        assert_eq!(rebuilt[key], original[key], "{key}");
    }
}

#[test]
fn reconstruct_rejects_maps_between_other_sets() {
    let o = geonerve(&["reconstruct", "z2-twisted.smap.json", "--dom", "z2.2cat.json", "--cod", "aut-z2.2cat.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn h2_reports_cocycles() {
    let o = geonerve(&["h2", "--groupoid", "z2.cat.json", "--family", "z3.fam.json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["functors"], 4);
    assert_eq!(v["classes"], 2);
    assert_eq!(v["representatives"][0]["size"], 3);
    assert_eq!(v["representatives"][1]["action"]["1"], "*>*:0,2,1");

    let o = geonerve(&["h2", "--groupoid", "z2.cat.json", "--family", "s3.fam.json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // S₃ is complete, so every extension is the product
    let extensions = common::z2_extension_profiles(&common::s3_table());
    assert_eq!(extensions.len(), 1);
    assert_eq!(v["classes"], 1);
}

#[test]
fn homotopy_classes_of_nerves() {
    let o = geonerve(&["homotopy-classes", "z2.sset.json", "aut-z3.sset.json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["maps"], 4);
    assert_eq!(v["sizes"], serde_json::json!([3, 1]));
}
