//! The bundled rewrite-pattern exemplars: each one must simplify to exactly
//! the frozen output sentences, and the compound/clause example must yield
//! exactly its six simple sentences.

use isadl_core::lexicon::Lexicon;
use isadl_core::preprocess::{parse_tagged, preprocess_sentence};
use isadl_core::simplify::{simplify, RuleRegistry};
use isadl_core::token::SourceId;

fn run(line: &str) -> Vec<String> {
    let lex = Lexicon::embedded();
    let rules = RuleRegistry::embedded();
    let s = parse_tagged(line, SourceId::new("table", 1)).expect("parses");
    let s = preprocess_sentence(&s, &lex);
    simplify(&s, &lex, &rules)
        .expect("simplifies")
        .iter()
        .map(|s| s.render_text())
        .collect()
}

#[test]
fn category_of_reverses_subject_and_object() {
    assert_eq!(
        run("Fruit_NN is_VBZ the_DT category_NN of_IN apple_NN ._."),
        vec!["apple is a Fruit"]
    );
}

#[test]
fn comes_under_the_general_group_of() {
    assert_eq!(
        run("Thyroid_NN medicines_NNS comes_VBZ under_IN the_DT general_JJ group_NN \
             of_IN hormone_NN medicines_NNS ._."),
        vec!["Thyroid medicine is a hormone medicine"]
    );
}

#[test]
fn examples_of_distribute_over_the_list() {
    assert_eq!(
        run("A_DT few_JJ examples_NNS of_IN peripherals_NNS are_VBP keyboards_NNS ,_, \
             scanner_NN ,_, printer_NN and_CC tape_NN drive_NN ._."),
        vec![
            "keyboard is a peripheral",
            "scanner is a peripheral",
            "printer is a peripheral",
            "tape drive is a peripheral",
        ]
    );
}

#[test]
fn types_of_distribute_with_dash_separator() {
    assert_eq!(
        run("There_EX are_VBP two_CD kinds_NNS of_IN narcotic_JJ analgesics_NNS -_: \
             the_DT opiates_NNS and_CC the_DT opioids_NNS ._."),
        vec![
            "opiate is a narcotic analgesic",
            "opioid is a narcotic analgesic",
        ]
    );
}

#[test]
fn types_of_accepts_colon_separator() {
    assert_eq!(
        run("There_EX are_VBP two_CD kinds_NNS of_IN narcotic_JJ analgesics_NNS :_: \
             the_DT opiates_NNS and_CC the_DT opioids_NNS ._."),
        vec![
            "opiate is a narcotic analgesic",
            "opioid is a narcotic analgesic",
        ]
    );
}

#[test]
fn it_seems_that_becomes_may_be() {
    assert_eq!(
        run("It_PRP seems_VBZ that_IN John_NNP is_VBZ a_DT good_JJ student_NN ._."),
        vec!["John may be a good student"]
    );
}

#[test]
fn are_alike_becomes_is_similar_to() {
    assert_eq!(
        run("Tangerine_NN and_CC orange_NN are_VBP alike_JJ ._."),
        vec!["Tangerine is similar to orange"]
    );
}

#[test]
fn comparative_with_object_noun_expands() {
    assert_eq!(
        run("John_NNP is_VBZ a_DT taller_JJR player_NN ._."),
        vec!["John is taller than some player"]
    );
}

#[test]
fn compound_with_clause_yields_exactly_six_simple_sentences() {
    assert_eq!(
        run("John_NNP and_CC Joe_NNP ,_, who_WP are_VBP intelligent_JJ students_NNS ,_, \
             are_VBP student_NN body_NN and_CC Greek-house_NN members_NNS ._."),
        vec![
            "John is intelligent student",
            "John is student body member",
            "John is Greek-house member",
            "Joe is intelligent student",
            "Joe is student body member",
            "Joe is Greek-house member",
        ]
    );
}

#[test]
fn either_or_compound_yields_two_compound_sentences() {
    assert_eq!(
        run("Either_CC John_NNP or_CC Joe_NNP ,_, who_WP is_VBZ a_DT good_JJ student_NN ,_, \
             is_VBZ a_DT student_NN body_NN member_NN ._."),
        vec![
            "Either John or Joe is a good student",
            "Either John or Joe is a student body member",
        ]
    );
}

/// Identical inputs must yield identical output lists in identical order.
#[test]
fn simplification_is_deterministic() {
    let line = "A_DT few_JJ examples_NNS of_IN peripherals_NNS are_VBP keyboards_NNS ,_, \
                scanner_NN ,_, printer_NN and_CC tape_NN drive_NN ._.";
    let first = run(line);
    for _ in 0..5 {
        assert_eq!(run(line), first);
    }
}
