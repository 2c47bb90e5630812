use std::fs;
use std::process::{Command, Output};

fn difsets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_difsets"))
        .args(args)
        .env_remove("DIFSETS_RESULTS_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_prints_results_text() {
    let o = difsets(&["enumerate", "--order", "7", "--id", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "difsets-results 1\ngroup 7 1\nparams v=7 k=3 lambda=1\nset 1 2 4\nend 1\n"
    );
    let o = difsets(&["enumerate", "--order", "8", "--id", "1"]);
    assert_eq!(stdout(&o), "difsets-results 1\ngroup 8 1\nend 0\n");
}

#[test]
fn options_do_not_change_results() {
    let base = stdout(&difsets(&["enumerate", "--order", "16", "--id", "3"]));
    for flag in ["--no-brc", "--no-identity-opt"] {
        assert_eq!(
            stdout(&difsets(&["enumerate", "--order", "16", "--id", "3", flag])),
            base
        );
    }
    let oracle = stdout(&difsets(&["oracle", "--order", "16", "--id", "3"]));
    assert_eq!(oracle, base);
}

#[test]
fn results_dir_from_env_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_difsets"))
        .args(["enumerate", "--order", "13", "--id", "1"])
        .env("DIFSETS_RESULTS_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let path = dir.path().join("difsets-13-1.txt");
    assert!(fs::read_to_string(&path)
        .unwrap()
        .contains("set 1 2 4 10\n"));
    let file = path.to_str().unwrap();
    assert_eq!(difsets(&["verify", file]).status.code(), Some(0));

    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, text.replace("set 1 2 4 10", "set 1 2 4 11")).unwrap();
    assert_eq!(difsets(&["verify", file]).status.code(), Some(1));
    fs::write(&path, text.replace("end 1", "end 5")).unwrap();
    assert_eq!(difsets(&["verify", file]).status.code(), Some(1));
    fs::write(&path, text.replace("set 1 2 4 10", "set 1 2 4 x")).unwrap();
    assert_eq!(difsets(&["verify", file]).status.code(), Some(3));
}

#[test]
fn exit_codes() {
    assert_eq!(
        difsets(&["enumerate", "--order", "8", "--id", "7"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        difsets(&["enumerate", "--order", "7"]).status.code(),
        Some(3)
    );
    assert_eq!(difsets(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(
        difsets(&["enumerate", "--order", "7", "--id", "1", "--jobs", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        difsets(&["oracle", "--order", "37", "--id", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(difsets(&["--help"]).status.code(), Some(0));
    let o = difsets(&["enumerate", "--order", "8", "--id", "7"]);
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("[1, 2, 3, 4, 5]"));
}

#[test]
fn sizes_and_info() {
    assert_eq!(
        stdout(&difsets(&["sizes", "--order", "15"])),
        "v=15 k=7 lambda=3\n"
    );
    assert_eq!(stdout(&difsets(&["sizes", "--order", "22"])), "");
    assert_eq!(
        stdout(&difsets(&["sizes", "--order", "22", "--no-brc"])),
        "v=22 k=7 lambda=2\n"
    );
    let info = stdout(&difsets(&["info", "--order", "15", "--id", "1"]));
    assert!(info.contains("order 15\n"));
    assert!(info.contains("normal subgroups 4\n"));
    assert!(info.contains("automorphisms 8\n"));
    assert!(info.contains("chain 15 > 3 > 1\n"));
}
