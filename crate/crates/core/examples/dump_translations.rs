//! Prints the axioms for the golden sentences (development aid).

use isadl_core::lexicon::Lexicon;
use isadl_core::nss::fit_template;
use isadl_core::preprocess::{parse_tagged, preprocess_sentence};
use isadl_core::simplify::{simplify, RuleRegistry};
use isadl_core::token::SourceId;
use isadl_core::translate::{translate, TranslationContext};

fn main() {
    let lex = Lexicon::embedded();
    let rules = RuleRegistry::embedded();
    let sentences = [
        "John_NNP is_VBZ a_DT student_NN",
        "Priyansh_NNP is_VBZ a_DT student_NN",
        "Wild_JJ cat_NN is_VBZ a_DT mammal_NN",
        "King_NNP Richard_NNP was_VBD an_DT English_JJ ruler_NN",
        "Some_DT students_NNS are_VBP hard-working_JJ",
        "Tangerine_NN is_VBZ like_IN an_DT orange_NN",
        "University_NN includes_VBZ faculty_NN",
        "University_NN includes_VBZ department_NN",
        "Wild_JJ cat_NN includes_VBZ bob_NN cat_NN",
        "At_IN least_JJS one_CD of_IN the_DT students_NNS is_VBZ hard-working_JJ",
        "At_IN least_JJS three_CD candidates_NNS are_VBP qualified_JJ",
        "Only_RB John_NNP is_VBZ a_DT musician_NN",
        "John_NNP was_VBD a_DT teacher_NN",
        "John_NNP was_VBD a_DT teacher_NN three_CD years_NNS ago_RB",
        "John_NNP was_VBD a_DT teacher_NN for_IN three_CD years_NNS",
        "John_NNP may_MD be_VB a_DT good_JJ swimmer_NN",
        "John_NNP can_MD become_VB a_DT diligent_JJ researcher_NN",
        "The_DT dog_NN is_VBZ very_RB clever_JJ",
        "John_NNP ,_, being_VBG a_DT hard-working_JJ student_NN ,_, is_VBZ successful_JJ",
        "The_DT student_NN is_VBZ hard-working_JJ",
        "House_NN boat_NN is_VBZ a_DT kind_NN of_IN vessel_NN",
        "Sea_NN plane_NN is_VBZ an_DT air_NN vehicle_NN",
        "John_NNP Jr._NNP Smith_NNP is_VBZ a_DT student_NN",
    ];
    let mut ctx = TranslationContext::new(&lex, "2020-01-01T00:00:00Z");
    for (i, line) in sentences.iter().enumerate() {
        let s = parse_tagged(line, SourceId::new("golden", i + 1)).unwrap();
        let s = preprocess_sentence(&s, &lex);
        println!("== [{}] {}", i + 1, line);
        for simple in simplify(&s, &lex, &rules).unwrap() {
            let outcome = fit_template(&simple, &lex);
            match &outcome.result {
                Ok(instance) => match translate(instance, &mut ctx) {
                    Ok(axioms) => {
                        let mut lines: Vec<String> = axioms
                            .iter()
                            .map(|t| {
                                let mut s = t.axiom.to_string();
                                if !t.axiom.notes.is_empty() {
                                    s.push_str(&format!("  [{}]", t.axiom.notes.join("; ")));
                                }
                                s
                            })
                            .collect();
                        lines.sort();
                        for l in lines {
                            println!("  {l}");
                        }
                    }
                    Err(e) => println!("  TRANSLATE ERROR: {e}"),
                },
                Err(e) => println!("  FIT ERROR: {e:?}"),
            }
        }
    }
    for (src, w) in &ctx.warnings {
        println!("WARN {src}: {w}");
    }
}
