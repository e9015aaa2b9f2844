use std::io::Write;
use std::process::{Command, Output, Stdio};

fn glp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn glp_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_glp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn status(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn decide_exit_codes() {
    let o = glp(&["decide", "~<0>~T"]);
    assert_eq!(status(&o), 0);
    assert_eq!(stdout(&o), "PROVABLE\n");

    let o = glp(&["decide", "<0>T -> <0><0>T", "--witness"]);
    assert_eq!(status(&o), 1);
    assert_eq!(stdout(&o), "NOT PROVABLE\nwitness: (1)\n");

    let o = glp(&["decide", "<0>T &"]);
    assert_eq!(status(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn decide_reads_stdin_and_files() {
    let o = glp_stdin(&["decide"], "<1>T -> <0>T\n");
    assert_eq!(status(&o), 0);

    let path = std::env::temp_dir().join(format!("glp-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "T -> <0>T").unwrap();
    let o = glp(&["decide", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(status(&o), 1);

    let o = glp(&["decide", "--file", "/definitely/not/here"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn decide_stats_and_trace() {
    let o = glp(&["decide", "<0>T -> <0>T", "--stats", "--trace"]);
    assert_eq!(status(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("n=1 max_w="), "{out}");
    assert!(out.lines().filter(|l| l.starts_with("trace: ")).count() >= 1);
}

#[test]
fn high_indices_warn() {
    let o = glp(&["decide", "<13>T"]);
    assert_eq!(status(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let o = glp(&["decide", "<12>T"]);
    assert!(o.stderr.is_empty());
}

#[test]
fn decide_is_deterministic() {
    let a = glp(&["decide", "<2><0>T -> <0><2><0>T", "--witness"]);
    let b = glp(&["decide", "<2><0>T -> <0><2><0>T", "--witness"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(status(&a), 1);
}

#[test]
fn reduce_qbf_codes() {
    let o = glp(&["reduce-qbf", "E0 : x0"]);
    assert_eq!(status(&o), 0);
    assert_eq!(
        stdout(&o),
        "((<0><3>T -> <0><3><0><1><2>T) & (<0><3><0><1><2>T -> <0><3>T))\n"
    );

    let o = glp(&["reduce-qbf", "A0 : x0", "--decide"]);
    assert_eq!(status(&o), 0);
    assert!(stdout(&o).ends_with("QBF=false DECIDE=not-provable MATCH\n"));

    let o = glp(&["reduce-qbf", "E0 A1 : x0 | x1", "--decide"]);
    assert_eq!(status(&o), 0);
    assert!(stdout(&o).ends_with("QBF=true DECIDE=provable MATCH\n"));

    assert_eq!(status(&glp(&["reduce-qbf", "E0 A1 : x9"])), 2);
    assert_eq!(status(&glp(&["reduce-qbf", "Q0 : x0"])), 2);
}

#[test]
fn selftest_codes() {
    let o = glp(&["selftest", "--suite=fact1"]);
    assert_eq!(status(&o), 0);
    assert_eq!(stdout(&o), "fact1: 364/364 rejected\n");
    assert_eq!(status(&glp(&["selftest", "--suite=bogus"])), 2);
}

#[test]
fn bench_csv() {
    let o = glp(&["bench", "--family=words", "--sizes=100,200,400"]);
    assert_eq!(status(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "family,size,n_modal,millis,max_w,max_oc");
    assert_eq!(lines.len(), 4);
    for (line, size) in lines[1..].iter().zip([100u64, 200, 400]) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[0], "words");
        assert_eq!(cols[1].parse::<u64>().unwrap(), size);
        assert!(cols[3].parse::<f64>().unwrap().is_finite());
        assert!(cols[4].parse::<u64>().unwrap() <= size);
    }

    assert_eq!(
        status(&glp(&["bench", "--csv=/nonexistent/dir/out.csv"])),
        2
    );
    assert_eq!(status(&glp(&["bench", "--family=nope"])), 2);
}

#[test]
fn bench_is_stable_apart_from_timing() {
    let strip = |o: &Output| -> Vec<String> {
        stdout(o)
            .lines()
            .skip(1)
            .map(|l| {
                let mut c: Vec<&str> = l.split(',').collect();
                c[3] = "";
                c.join(",")
            })
            .collect()
    };
    let args = ["bench", "--family=random", "--sizes=20,40", "--seed=5"];
    assert_eq!(strip(&glp(&args)), strip(&glp(&args)));
    let args = ["bench", "--family=qbf", "--sizes=1,2", "--seed=5"];
    assert_eq!(strip(&glp(&args)), strip(&glp(&args)));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(status(&glp(&[])), 2);
    assert_eq!(status(&glp(&["frobnicate"])), 2);
    assert_eq!(status(&glp(&["decide", "T", "--bogus"])), 2);
}
