use std::process::{Command, Output};

use chromsym::cli::Report;

fn chromsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn claw_text() {
    let o = chromsym(&["expand", "--graph", "spider:1,1,1", "--basis", "s"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "graph: spider:1,1,1\nvertices: 4\nedges: 3\nexpansion: s31 - s22 + 5s211 + 8s1111\n\
         s[3,1]: 1\ns[2,2]: -1\ns[2,1,1]: 5\ns[1,1,1,1]: 8\nstatus: pass\n"
    );
}

#[test]
fn claw_json_round_trips() {
    let o = chromsym(&["--json", "expand", "--graph", "spider:1,1,1", "--basis", "s"]);
    let text = stdout(&o);
    let r: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(r.command, "expand --graph spider:1,1,1 --basis s");
    assert_eq!(r.to_json() + "\n", text);
    assert!(!text.contains("timing_ms"));
}

#[test]
fn path_four_in_e() {
    let o = chromsym(&["expand", "--graph", "path:4", "--basis", "e"]);
    assert!(stdout(&o).contains("expansion: 4e4 + 2e31 + 2e22\n"), "{}", stdout(&o));
}

#[test]
fn ab_six() {
    let o = chromsym(&["analogs", "ab", "--n", "6"]);
    assert_eq!(
        stdout(&o),
        "A_6: 5e6 + 6e42 + 4e33 + e222\nB_6: 6e6 + 10e42 + 6e33 + 2e222\nstatus: pass\n"
    );
}

#[test]
fn de_oracle() {
    let o = chromsym(&["analogs", "de", "--n", "7", "--k", "3", "--check-oracle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("D oracle: pass\nE oracle: pass\n"));
}

#[test]
fn classify_family() {
    let o = chromsym(&["--csv", "classify", "--family", "2,1", "--a-min", "3", "--a-max", "4"]);
    let out = stdout(&o);
    assert!(out.starts_with("key,value\nstatus,pass\n\"S(3,2,1)\",e-positive\n\"S(4,2,1)\",schur-positive\n"), "{out}");
}

#[test]
fn classify_claw_witness() {
    let o = chromsym(&["classify", "--graph", "spider:1,1,1"]);
    assert_eq!(
        stdout(&o),
        "spider:1,1,1: not-schur-positive\nspider:1,1,1 witness: s[2,2]: -1\nstatus: pass\n"
    );
}

#[test]
fn lemma41_printed_form_reported() {
    let o = chromsym(&["verify", "lemma41", "--n", "10", "--k", "5"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.contains("class decomposition: pass\n"));
    assert!(out.contains("six-term form: disagrees\n"));
    assert!(out.contains("kappa=[2,2,2,2,2]: truth=197 classes=197 prefixes=197 printed=197\n"), "{out}");
}

#[test]
fn prop10_fixture_file() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/xy_table.json");
    let o = chromsym(&["verify", "prop10", "--fixture", fixture]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("nonempty contents (stated): 27\nnonempty contents (full): 27\n"));
    assert!(out.contains("full mu=[2,2,2,2,2] t=5: X<=36 Y<=98 X>=15 Y>=20\n"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(chromsym(&["verify", "spider", "--a", "20", "--b", "2"]).status.code(), Some(2));
    assert_eq!(chromsym(&["verify", "spider", "--a", "1", "--b", "2"]).status.code(), Some(64));
    assert_eq!(chromsym(&["expand", "--graph", "file:/nonexistent"]).status.code(), Some(64));
    assert_eq!(chromsym(&["--json", "--csv", "verify", "lemma33"]).status.code(), Some(64));
    assert_eq!(chromsym(&["--help"]).status.code(), Some(0));
}

#[test]
fn graph_file_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("claw.txt");
    std::fs::write(&p, "# claw\n1 2\n1 3\n1 4\n").unwrap();
    let spec = format!("file:{}", p.display());
    let a = chromsym(&["--json", "--threads", "1", "expand", "--graph", &spec]);
    let b = chromsym(&["--json", "--threads", "3", "expand", "--graph", &spec]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("s31 - s22 + 5s211 + 8s1111"));
}
