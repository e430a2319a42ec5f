use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forest-homfly")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn homfly_latex_a4() {
    assert_eq!(
        stdout(&["homfly", "A4", "--format", "latex"]),
        "\\frac{z^4 + 4z^2 + 3}{a^4} - \\frac{z^2 + 2}{a^6}\n"
    );
}

#[test]
fn alexander_e8() {
    assert_eq!(stdout(&["alexander", "E8"]), "t^-4(t^8 - t^7 + t^5 - t^4 + t^3 - t + 1)\n");
}

#[test]
fn verify_d5() {
    let out = run(&["verify", "D5", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with("methods agree\n"), "{text}");
    assert!(text.contains("skein"));
}

#[test]
fn verify_every_preset() {
    for p in ["A1", "A6", "D4", "D7", "E6", "E7", "E8", "S5", "T9", "A2+D4"] {
        assert_eq!(run(&["verify", p]).status.code(), Some(0), "{p}");
    }
}

#[test]
fn methods_print_the_same_value() {
    let want = stdout(&["homfly", "E7"]);
    for m in ["closed", "skein", "all"] {
        assert_eq!(stdout(&["homfly", "E7", "--method", m]), want, "{m}");
    }
}

#[test]
fn other_invariants() {
    assert_eq!(stdout(&["conway", "E6"]), "z^6 + 5z^4 + 5z^2 + 1\n");
    assert_eq!(stdout(&["conway", "A4", "--format", "json"]), "{\"b\":[1,3,1],\"polynomial\":\"z^4 + 3z^2 + 1\"}\n");
    assert_eq!(stdout(&["rpoly", "A2"]), "q^2 + 1\n");
    assert_eq!(stdout(&["rpoly", "A1"]), "(q^2 - q + 1)/(q - 1)\n");
}

#[test]
fn plabic_maps() {
    assert_eq!(stdout(&["strand-perm", "a2_pentagon"]), "(1 4 2 5 3)\n");
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/corpus/hopf_white.json");
    assert_eq!(stdout(&["skein", path]), "(z + z^-1)/a - z^-1/a^3\n");
    assert_eq!(stdout(&["strand-perm", path, "--format", "json"]), "{\"cycles\":\"(1)\",\"images\":[1]}\n");
}

#[test]
fn plabic_from_round_trips_through_a_file() {
    let dir = std::env::temp_dir().join(format!("forest-homfly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let map = dir.join("d4.json");
    let map_s = map.to_str().unwrap();
    assert!(run(&["plabic-from", "D4", "--out", map_s]).status.success());
    assert_eq!(stdout(&["skein", map_s]), stdout(&["homfly", "D4"]));

    let edges = dir.join("tree.txt");
    std::fs::write(&edges, "# A3 as an edge list\n0 > 1\n2 1\n").unwrap();
    assert_eq!(stdout(&["homfly", edges.to_str().unwrap()]), stdout(&["homfly", "A3"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_input_exits_one() {
    for args in [&["homfly", "X9"][..], &["homfly", "0 1\n1 2\n2 0"], &["skein", "{}"], &["nonsense"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_stable() {
    let a = stdout(&["homfly", "T9", "--format", "json"]);
    let b = stdout(&["homfly", "T9", "--format", "json"]);
    assert_eq!(a, b);
    assert!(a.starts_with("[{\"a\":-9,"));
}
