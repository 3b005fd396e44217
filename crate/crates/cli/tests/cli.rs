//! End-to-end tests of the `tridend` binary: golden outputs, determinism and
//! exit codes.

use std::process::{Command, Output};

fn tridend(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tridend"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = tridend(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn mul_star_golden_output() {
    let out = stdout(&["mul", "--op", "star", "(|,|)", "(|,|)"]);
    assert_eq!(out, "1*((|,|),|) + 1*(|,(|,|)) + 1*(|,|,|)\n");
}

#[test]
fn mul_accepts_vector_literals() {
    let out = stdout(&["mul", "--op", "left", "1*(|,|) + -1/2*(|,|)", "(|,|)"]);
    assert_eq!(out, "1/2*(|,(|,|))\n");
}

#[test]
fn mul_unit_rules() {
    assert_eq!(stdout(&["mul", "--op", "left", "(|,|)", "|"]), "1*(|,|)\n");
    assert_eq!(stdout(&["mul", "--op", "left", "|", "(|,|)"]), "0\n");
    assert_eq!(stdout(&["mul", "--op", "star", "|", "|"]), "1*|\n");
}

#[test]
fn coprod_pieces() {
    assert_eq!(stdout(&["coprod", "(|,|)"]), "1*|⊗(|,|) + 1*(|,|)⊗|\n");
    assert_eq!(
        stdout(&["coprod", "--piece", "left", "((|,|),|)"]),
        "1*((|,|),|)⊗|\n"
    );
    assert_eq!(
        stdout(&["coprod", "--piece", "right", "((|,|),|)"]),
        "1*|⊗((|,|),|) + 1*(|,|)⊗(|,|)\n"
    );
}

#[test]
fn dual_subcommands() {
    assert_eq!(
        stdout(&["dual", "coprod", "--piece", "mid", "(|,|,|)"]),
        "1*(|,|)⊗(|,|)\n"
    );
    assert_eq!(
        stdout(&["dual", "mul", "(|,|)", "(|,|)"]),
        "1*((|,|),|) + 1*(|,(|,|))\n"
    );
    assert_eq!(stdout(&["dual", "mul", "|", "(|,|,|)"]), "1*(|,|,|)\n");
}

#[test]
fn quotient_subcommands() {
    assert_eq!(
        stdout(&["quotient", "mul", "(|,|)", "(|,|)"]),
        "1*((|,|),|) + 1*(|,(|,|))\n"
    );
    assert_eq!(
        stdout(&["quotient", "coprod", "(|,(|,|))"]),
        "1*|⊗(|,(|,|)) + 1*(|,|)⊗(|,|) + 1*(|,(|,|))⊗|\n"
    );
    // non-binary input is a domain error
    let out = tridend(&["quotient", "mul", "(|,|,|)", "(|,|)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn express_examples() {
    assert_eq!(stdout(&["express", "(|,|)"]), "g\n");
    assert_eq!(stdout(&["express", "(|,|,|)"]), "g·g\n");
    assert_eq!(stdout(&["express", "(|,(|,|))"]), "g≺g\n");
}

#[test]
fn enumerate_canonical_order() {
    assert_eq!(
        stdout(&["enumerate", "--degree", "2"]),
        "((|,|),|)\n(|,(|,|))\n(|,|,|)\n"
    );
    let lines = stdout(&["enumerate", "--degree", "4"]);
    assert_eq!(lines.lines().count(), 45);
}

#[test]
fn verify_exit_zero_with_summary() {
    let out = tridend(&["verify", "--law", "tri", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "law=tri max-degree=4 checked=70 violations=0\n");
}

#[test]
fn verify_lr_reports_the_matching_reading() {
    let out = stdout(&["verify", "--law", "lr", "--max-degree", "3"]);
    assert!(out.contains("lr-product-reading=standard"));
    assert!(out.contains("violations=0"));
}

#[test]
fn verify_all_laws_small_bounds() {
    for law in ["tensor", "bialgebra", "three-two", "cotri", "dual-adjoint"] {
        let out = tridend(&["verify", "--law", law, "--max-degree", "3"]);
        assert_eq!(out.status.code(), Some(0), "law {law}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("violations=0"), "law {law}: {text}");
    }
}

#[test]
fn dims_formats() {
    let csv = stdout(&["dims", "--max-degree", "3", "--format", "csv"]);
    assert_eq!(
        csv,
        "degree,dim_A,dim_prim_coass,dim_prim_codend,dim_prim_left,dim_prim_right\n\
         1,1,1,1,1,1\n2,3,2,1,2,2\n3,11,6,2,6,6\n"
    );
    let json = stdout(&["dims", "--max-degree", "2", "--format", "json"]);
    assert_eq!(
        json,
        "{\"rows\":[{\"degree\":1,\"dim_A\":1,\"dim_prim_coass\":1,\"dim_prim_codend\":1,\
         \"dim_prim_left\":1,\"dim_prim_right\":1},{\"degree\":2,\"dim_A\":3,\
         \"dim_prim_coass\":2,\"dim_prim_codend\":1,\"dim_prim_left\":2,\"dim_prim_right\":2}]}\n"
    );
    let text = stdout(&["dims", "--max-degree", "1"]);
    assert!(text.contains("degree"));
    assert!(text.contains("dim_prim_codend"));
}

#[test]
fn series_tables() {
    assert_eq!(
        stdout(&["series", "--which", "R", "--terms", "5"]),
        "0\t0\n1\t1\n2\t3\n3\t11\n4\t45\n5\t197\n"
    );
    assert_eq!(
        stdout(&["series", "--which", "P", "--terms", "5"]),
        "0\t0\n1\t1\n2\t1\n3\t2\n4\t6\n5\t22\n"
    );
    assert_eq!(
        stdout(&["series", "--which", "primcoass", "--terms", "4"]),
        "0\t0\n1\t1\n2\t2\n3\t6\n4\t22\n"
    );
}

#[test]
fn output_is_deterministic_across_runs() {
    let a = stdout(&["mul", "--op", "star", "(|,(|,|))", "((|,|),|)"]);
    let b = stdout(&["mul", "--op", "star", "(|,(|,|))", "((|,|),|)"]);
    assert_eq!(a, b);
    let a = stdout(&["dims", "--max-degree", "4", "--format", "csv"]);
    let b = stdout(&["dims", "--max-degree", "4", "--format", "csv"]);
    assert_eq!(a, b);
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["mul", "--op", "star", "(|", "(|,|)"][..],
        &["mul", "--op", "star", "(|)", "(|,|)"][..],
        &["express", "x"][..],
        &["dual", "coprod", "--piece", "prec", "|"][..],
        &["mul", "--op", "left", "|", "|"][..],
    ] {
        let out = tridend(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
    // unknown flags are clap parse errors, also exit 2
    let out = tridend(&["mul", "--bogus", "x", "y"]);
    assert_eq!(out.status.code(), Some(2));
}
