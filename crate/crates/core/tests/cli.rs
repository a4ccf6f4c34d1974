use std::process::Command;

use vizstate::bench::read_csv;

fn bench() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vizstate-bench"))
}

#[test]
fn writes_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("frames.csv");
    let status = bench()
        .args([
            "--marks",
            "40",
            "--duration-ms",
            "100",
            "--trials",
            "2",
            "--seed",
            "9",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("trial,frame_index,advance_ms,n_onstage,checksum\n"));
    let records = read_csv(text.as_bytes()).unwrap();
    // 100 ms at 16.667 ms per frame: 6 frames to settle, one more to go quiet
    assert_eq!(records.len(), 2 * 7);
    assert_eq!(records.last().unwrap().n_onstage, 40);
    assert!(records.iter().all(|r| r.advance_ms >= 0.0));
}

#[test]
fn modes_print_identical_checksums() {
    let run = |mode: &str| {
        let out = bench()
            .args(["--marks", "30", "--duration-ms", "200", "--trials", "1", "--mode", mode])
            .output()
            .unwrap();
        assert!(out.status.success());
        let records = read_csv(out.stdout.as_slice()).unwrap();
        records
            .iter()
            .map(|r| (r.frame_index, r.n_onstage, r.checksum.to_bits()))
            .collect::<Vec<_>>()
    };
    assert_eq!(run("dirty"), run("naive"));
}

#[test]
fn rejects_bad_config_with_one_line() {
    for args in [
        vec!["--churn", "1.5"],
        vec!["--marks", "0"],
        vec!["--frame-dt", "-1"],
        vec!["--mode", "lazy"],
        vec!["--marks", "many"],
    ] {
        let out = bench().args(&args).output().unwrap();
        assert!(!out.status.success(), "{args:?} accepted");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
}
