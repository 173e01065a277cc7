mod common;

use common::superpoint;

fn expect_error(args: &[&str], name: &str, code: i32) {
    let out = superpoint(args);
    assert_eq!(out.code, code, "{args:?}: {}", out.stderr);
    assert!(
        out.stderr.starts_with(&format!("error: {name}: ")),
        "{args:?}: {}",
        out.stderr
    );
    assert!(out.stdout.is_empty());
}

#[test]
fn documented_examples() {
    let out = superpoint(&["mul", "-q", "2", "xi2", "xi1"]);
    assert_eq!((out.stdout.as_str(), out.code), ("-xi1*xi2\n", 0));
    let out = superpoint(&["lemma1", "-q", "2", "--gens", "xi1; xi2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("m=1\nbeta={1}\nh verified=true"));
}

#[test]
fn every_error_is_named() {
    expect_error(&["parse-check", "--kind", "element", "-q", "1", "xi2"], "IndexOutOfRange", 2);
    expect_error(&["parse-check", "--kind", "element", "-q", "-1", "1"], "NonCanonicalRank", 2);
    expect_error(&["mul", "-q", "65", "1"], "RankTooLarge", 2);
    expect_error(&["parse-check", "--kind", "element", "-q", "2", "xi1 +"], "ParseError", 2);
    expect_error(&["parse-check", "--kind", "element", "-q", "2", "xi1^2"], "ParseError", 2);
    expect_error(&["hom-apply", "-q", "1", "--map", "xi1=1", "xi1"], "NotOdd", 2);
    expect_error(&["invert", "-q", "2", "xi1 + xi1*xi2"], "NotInvertible", 1);
    expect_error(
        &["hom-compose", "-q", "1", "--map", "xi1=xi1", "--then-source", "2", "--then", "xi1=xi1"],
        "RankMismatch",
        1,
    );
    expect_error(&["lemma1", "-q", "2", "--gens", "1 + xi1"], "NotHomogeneous", 1);
    expect_error(&["lemma1", "-q", "3", "--gens", "xi1*xi2; xi2*xi3"], "NoOddSector", 1);
    expect_error(&["class-eq", "--dims", "1,0", "--dims2", "0,1", "x1=1", "th1=xi1"], "DomainMismatch", 1);
    expect_error(&["derham-antider", "--dims", "1,1", "x1*dxi1"], "NotClosed", 1);
    expect_error(
        &["derham-cohomology", "--dims", "2,2", "--max-degree", "3", "--max-weight", "5", "--cap", "5"],
        "BudgetExceeded",
        1,
    );
    expect_error(
        &["derham-derive", "--dims", "1,1", "--parity", "0", "--on", "x1=xi1", "x1"],
        "ParityViolation",
        1,
    );
    expect_error(
        &["derham-derive", "--dims", "1,1", "--parity", "0", "--on", "x1=1", "dx1"],
        "NotAFunction",
        1,
    );
    expect_error(
        &["point-map", "--dims", "0,1", "-q", "1", "--map", "xi1=xi1", "--point", "th1=xi1 + xi2"],
        "IndexOutOfRange",
        2,
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(superpoint(&["frobnicate"]).code, 2);
    assert_eq!(superpoint(&["mul"]).code, 2);
    let out = superpoint(&["derham-antider", "--dims", "0,1", "x1*dx1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error: IndexOutOfRange"));
}

#[test]
fn json_mirrors_text() {
    let out = superpoint(&["--json", "parse-check", "--kind", "element", "-q", "3", "3 + 2*xi1*xi3 - xi2"]);
    assert_eq!(
        out.stdout.trim(),
        r#"{"rank":3,"terms":[{"indices":[],"coeff":"3"},{"indices":[2],"coeff":"-1"},{"indices":[1,3],"coeff":"2"}]}"#
    );
    let out = superpoint(&["--json", "derham-cohomology", "--dims", "0,1", "--max-degree", "2", "--max-weight", "3"]);
    assert_eq!(out.stdout.trim(), "[1,0,0]");
}
