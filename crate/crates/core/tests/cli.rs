use std::path::PathBuf;
use std::process::Command;

use habiro::cli::golden_corpus;
use serde_json::Value;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn cyclo(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclo"))
        .args(args)
        .env_remove("HABIRO_CACHE_DIR")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout, out.stderr)
}

#[test]
fn golden_files() {
    let dir = golden_dir();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    if update {
        std::fs::create_dir_all(&dir).unwrap();
    }
    for (name, args) in golden_corpus() {
        let (code, first, err) = cyclo(&args);
        assert_eq!(code, 0, "{name}: {}", String::from_utf8_lossy(&err));
        let (_, second, _) = cyclo(&args);
        assert_eq!(first, second, "{name} is not deterministic");
        assert!(!first.contains(&b'\r'));
        let path = dir.join(format!("{name}.out"));
        if update {
            std::fs::write(&path, &first).unwrap();
        } else {
            let expect = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
            assert_eq!(String::from_utf8_lossy(&first), String::from_utf8_lossy(&expect), "{name}");
        }
    }
}

#[test]
fn documented_examples() {
    let (_, out, _) = cyclo(&["cyclotomic", "12"]);
    assert_eq!(out, b"{\"coeffs\":[\"1\",\"0\",\"-1\",\"0\",\"1\"],\"n\":12}\n");
    let (_, out, _) = cyclo(&["habiro", "series", "--name", "qinv", "--level", "5", "--check-unit"]);
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["verification"], "q*inv == 1 mod (q)_5: true");
    let (_, out, _) = cyclo(&["graph", "--ring", "Q", "--set", "1,2,6"]);
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
    let (_, out, _) = cyclo(&["habiro", "expand", "--series", "kz", "--center", "1", "--terms", "8"]);
    let text = String::from_utf8(out).unwrap();
    assert_eq!(text.lines().next(), Some("j,coefficient"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn every_subcommand_accepts_every_format() {
    let base: Vec<Vec<&str>> = vec![
        vec!["cyclotomic", "6"],
        vec!["pochhammer", "3"],
        vec!["graph", "--ring", "Z", "--set", "1,2,3"],
        vec!["habiro", "reduce", "--poly", r#"["1","2","3","4"]"#, "--chain", "pochhammer", "--level", "2"],
        vec!["habiro", "digits", "--poly", r#"["1","2","3","4"]"#, "--chain", "product:1,2", "--level", "3"],
        vec![
            "habiro", "rho", "--element",
            r#"{"chain":{"kind":"pochhammer","params":{}},"level":4,"rep":["1","2"]}"#,
            "--target", "adic:1", "--level", "2",
        ],
        vec!["habiro", "series", "--name", "kz", "--level", "3"],
        vec!["habiro", "eval", "--series", "kz", "--orders", "1,2"],
        vec!["habiro", "expand", "--series", "qinv", "--center", "2", "--terms", "2"],
        vec!["qcrt", "split", "--lambda", "1:1,3:1", "--poly", r#"["1","0","2"]"#],
        vec!["qcrt", "witness", "--level", "2"],
    ];
    for args in base {
        for fmt in ["json", "csv", "plain"] {
            let mut full = args.clone();
            full.extend(["--format", fmt]);
            let (code, out, err) = cyclo(&full);
            assert_eq!(code, 0, "{full:?}: {}", String::from_utf8_lossy(&err));
            assert!(!out.is_empty());
            if fmt == "json" {
                serde_json::from_slice::<Value>(&out).unwrap();
            }
        }
    }
}

#[test]
fn errors_are_single_json_lines() {
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["cyclotomic"], 1),
        (vec!["cyclotomic", "x"], 1),
        (vec!["frobnicate"], 1),
        (vec!["graph", "--ring", "F2", "--set", "1"], 1),
        (vec!["graph", "--ring", "Z", "--set", "1,0"], 1),
        (vec!["habiro", "reduce", "--poly", "[1]", "--chain", "pochhammer", "--level", "1"], 1),
        (vec!["habiro", "series", "--name", "nope", "--level", "1"], 1),
        (vec!["habiro", "expand", "--series", "kz", "--center", "0", "--terms", "2"], 1),
        (vec!["habiro", "eval", "--series", "kz", "--orders", "1,2", "--format", "xml"], 1),
        (vec!["qcrt", "witness", "--level", "0"], 1),
        (vec!["qcrt", "split", "--lambda", "1:0", "--poly", r#"["1"]"#], 1),
        (
            vec![
                "habiro", "rho", "--element",
                r#"{"chain":{"kind":"pochhammer","params":{}},"level":2,"rep":["1"]}"#,
                "--target", "adic:3", "--level", "1",
            ],
            2,
        ),
        (vec!["habiro", "digits", "--poly", r#"["1"]"#, "--chain", "explicit:1,2", "--level", "3"], 2),
    ];
    for (args, expect) in cases {
        let (code, out, err) = cyclo(&args);
        assert_eq!(code, expect, "{args:?}: {}", String::from_utf8_lossy(&err));
        assert!(out.is_empty());
        let text = String::from_utf8(err).unwrap();
        assert_eq!(text.lines().count(), 1, "{text}");
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["error"]["exit_code"], expect);
    }
}

#[test]
fn cache_directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cyclo"))
            .args(["cyclotomic", "60"])
            .env("HABIRO_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    let file = dir.path().join("cyclotomic_cache.json");
    let cached: std::collections::BTreeMap<u64, Vec<String>> =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert!(cached.contains_key(&60));
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    // a corrupt cache file is ignored rather than trusted
    std::fs::write(&file, r#"{"60":["1"]}"#).unwrap();
    assert_eq!(run().stdout, first.stdout);
}

#[test]
fn selfcheck_passes() {
    let (code, out, _) = cyclo(&["selfcheck", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), habiro::selfcheck::check_names().len());
}
