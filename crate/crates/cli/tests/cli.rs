use std::process::{Command, Output};

fn kronbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn kron_values() {
    let o = kronbound(&["kron", "2,2", "2,2", "3,1"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "0"));
    let o = kronbound(&["kron", "3,2", "3,2", "4,1", "--method", "both"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "1, 1"));
    let o = kronbound(&["kron", "3,2,1", "3,2,1", "3,2,1", "--method", "alternating"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "5"));
}

#[test]
fn kron_errors() {
    assert_eq!(code(&kronbound(&["kron", "2,2", "2,2", "3"])), 2);
    assert_eq!(code(&kronbound(&["kron", "2,a", "2,2", "3,1"])), 2);
    assert_eq!(code(&kronbound(&["kron", "1,2", "2,1", "3"])), 2);
    let o = kronbound(&["kron", "3,2", "3,2", "4,1", "--method", "alternating", "--budget", "2"]);
    assert_eq!(code(&o), 3);
    let o = kronbound(&["kron", "3,2", "3,2", "4,1", "--budget", "1"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn qbinom_outputs() {
    let o = kronbound(&["qbinom", "2", "2", "--poly"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "1,1,2,1,1"));
    let o = kronbound(&["qbinom", "8", "8", "--delta", "2"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "1"));
    let o = kronbound(&["qbinom", "8", "8", "--gapbound", "32"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let margin = text.lines().find_map(|l| l.strip_prefix("margin ")).unwrap();
    assert!(!margin.starts_with('-'), "{text}");
    let o = kronbound(&["qbinom", "7", "8", "--gapbound", "3"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("m >= l >= 8"));
}

#[test]
fn stability_outputs() {
    let o = kronbound(&["stability", "2,2", "2,2", "3,1", "--k", "1", "--tmax", "4"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "0 1 1 1 1 | onset 1 | stable 1"));
    let o = kronbound(&["stability", "", "", "", "--k", "1", "--tmax", "3"]);
    assert!(stdout(&o).starts_with("1 1 1 1 |"), "{}", stdout(&o));
    let o = kronbound(&["stability", "3,1", "3,1", "3,1", "--k", "1", "--tmax", "3"]);
    assert!(stdout(&o).starts_with("1 1 1 1 |"), "{}", stdout(&o));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&kronbound(&["verify", "lemma14", "--lmax", "5"])), 0);
    assert_eq!(code(&kronbound(&["verify", "stanley", "--n", "10"])), 0);
    assert_eq!(code(&kronbound(&["verify", "bounds", "--n", "7"])), 0);
    assert_eq!(code(&kronbound(&["verify", "stanley", "--n", "99"])), 2);
    assert_eq!(code(&kronbound(&["verify", "nonsense"])), 2);
    // the printed window unimodality fails from n = 5 on
    let o = kronbound(&["verify", "almkvist", "--n", "6"]);
    assert_eq!(code(&o), 1);
    assert!(
        stdout(&o).contains("minimal witness (size 2): n=2 k=3"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn json_numbers_are_strings_and_reparse() {
    for args in [
        &["--format", "json", "kron", "3,2", "3,2", "4,1", "--method", "both"][..],
        &["--format", "json", "bounds", "3,2", "3,2", "4,1"],
        &["--format", "json", "stability", "2,2", "2,2", "3,1", "--tmax", "3"],
        &["--format", "json", "qbinom", "3", "3"],
        &["--format", "json", "char", "3,2"],
        &["--format", "json", "verify", "kstab", "--n", "5", "--samples", "20"],
    ] {
        let o = kronbound(args);
        assert_eq!(code(&o), 0, "{args:?}");
        let text = stdout(&o);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(no_json_numbers(&v), "{args:?}: {text}");
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    }
}

fn no_json_numbers(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(_) => false,
        serde_json::Value::Array(a) => a.iter().all(no_json_numbers),
        serde_json::Value::Object(o) => o.values().all(no_json_numbers),
        _ => true,
    }
}

#[test]
fn csv_has_header_and_rows() {
    let o = kronbound(&["--format", "csv", "char", "3"]);
    assert_eq!(
        stdout(&o),
        "shape,class,class_size,value\n3,3,2,1\n3,\"2,1\",3,1\n3,\"1,1,1\",1,1\n"
    );
}

#[test]
fn output_independent_of_jobs() {
    let run = |jobs: &str| {
        let o = kronbound(&[
            "--jobs",
            jobs,
            "--format",
            "json",
            "verify",
            "kstab",
            "--n",
            "6",
            "--samples",
            "50",
        ]);
        stdout(&o)
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let csv = |jobs: &str| {
        stdout(&kronbound(&[
            "--jobs", jobs, "--format", "csv", "verify", "symmetry", "--n", "5",
        ]))
    };
    assert_eq!(csv("1"), csv("3"));
}

#[test]
fn print_config_round_trips() {
    let o = kronbound(&[
        "--print-config",
        "--format",
        "csv",
        "verify",
        "qbin",
        "--n",
        "10",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let v: kronbound_cli::RunConfig = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    assert_eq!(v.format, kronbound_cli::Format::Csv);
}
