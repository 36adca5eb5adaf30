//! Script language: corpus round trips, printing/parsing of random
//! expressions, and the documented examples.

use std::path::PathBuf;

use proptest::prelude::*;
use socle_lab::script::{parse_script, run_script, ParseErrorKind};
use socle_lab_testkit::gen::poly_expr_text;

fn corpus() -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scripts");
    let mut out: Vec<(PathBuf, String)> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "socle"))
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn corpus_round_trips() {
    for (path, text) in corpus() {
        let script = parse_script(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let printed = script.to_string();
        let again = parse_script(&printed).unwrap();
        assert_eq!(again, script, "{}", path.display());
        assert_eq!(again.to_string(), printed);
    }
}

#[test]
fn corpus_checks_pass() {
    for (path, text) in corpus() {
        let out = run_script(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(out.all_passed(), "{}: {:?}", path.display(), out.checks);
    }
}

#[test]
fn documented_examples() {
    let out = run_script("ring R = F101[x,y] degrevlex; ideal I = (x^2, x*y + y^2); print length(I);").unwrap();
    assert_eq!(out.output, ["4"]);
    let out = run_script("ring R = Q[x]; ideal I = (x^3); print length(I);").unwrap();
    assert_eq!(out.output, ["3"]);
    let err = parse_script("ideal I = (x);").unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::UnboundRing);
}

#[test]
fn runs_are_deterministic() {
    for (_, text) in corpus() {
        let a = run_script(&text).unwrap();
        let b = run_script(&text).unwrap();
        assert_eq!(a.output, b.output);
    }
}

proptest! {
    #[test]
    fn printed_polynomials_reparse(expr in poly_expr_text(&["x", "y", "z"])) {
        let src = format!("ring R = Q[x,y,z]; print nf({expr}, (0));");
        let script = parse_script(&src).unwrap();
        let printed = script.to_string();
        prop_assert_eq!(parse_script(&printed).unwrap(), script);
        // Evaluation agrees before and after printing.
        prop_assert_eq!(run_script(&src).unwrap().output, run_script(&printed).unwrap().output);
    }

    #[test]
    fn parser_never_panics(src in "[ -~\n]{0,80}") {
        let _ = parse_script(&src);
    }

    #[test]
    fn mutated_corpus_never_panics(idx in 0usize..5, cut in 0usize..400, insert in "[(),;=^*+-]{0,3}") {
        let corpus = corpus();
        let text = &corpus[idx % corpus.len()].1;
        let mut at = cut.min(text.len());
        while !text.is_char_boundary(at) {
            at -= 1;
        }
        let mutated = format!("{}{}{}", &text[..at], insert, &text[at..]);
        if let Ok(script) = parse_script(&mutated) {
            prop_assert_eq!(parse_script(&script.to_string()).unwrap(), script);
        }
    }
}
