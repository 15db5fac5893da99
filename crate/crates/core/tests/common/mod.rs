//! Shared fixtures for the integration and acceptance suites: the frozen
//! golden translation table and the synthetic corpus generator.
#![allow(dead_code)] // each test target uses a different subset

use isadl_core::lexicon::Lexicon;
use isadl_core::nss::fit_template;
use isadl_core::preprocess::{parse_tagged, preprocess_sentence};
use isadl_core::simplify::{simplify, RuleRegistry};
use isadl_core::token::SourceId;
use isadl_core::translate::{translate, TranslationContext};

pub const CLOCK: &str = "2020-01-01T00:00:00Z";

/// One golden case: sentences sharing a translation context, each with its
/// frozen axiom set (sorted display lines, notes in brackets).
pub struct GoldenCase {
    pub name: &'static str,
    pub sentences: &'static [(&'static str, &'static [&'static str])],
}

/// Renders one sentence's axioms as sorted display lines, notes appended
/// in brackets, running the full preprocess → simplify → fit → translate
/// chain.
pub fn translate_lines(line: &str, ctx: &mut TranslationContext) -> Vec<String> {
    let lex = Lexicon::embedded();
    let rules = RuleRegistry::embedded();
    let s = parse_tagged(line, SourceId::new("golden", 1)).expect("parses");
    let s = preprocess_sentence(&s, &lex);
    let mut out = Vec::new();
    for simple in simplify(&s, &lex, &rules).expect("simplifies") {
        let outcome = fit_template(&simple, &lex);
        let instance = outcome
            .result
            .unwrap_or_else(|e| panic!("`{line}` must fit, got {e:?}"));
        for traced in translate(&instance, ctx).expect("translates") {
            let mut rendered = traced.axiom.to_string();
            if !traced.axiom.notes.is_empty() {
                rendered.push_str(&format!("  [{}]", traced.axiom.notes.join("; ")));
            }
            out.push(rendered);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Runs one golden case and panics with a diff on the first mismatch.
pub fn check_case(case: &GoldenCase) {
    let lex = Lexicon::embedded();
    let mut ctx = TranslationContext::new(&lex, CLOCK);
    for (line, expected) in case.sentences {
        let actual = translate_lines(line, &mut ctx);
        let expected: Vec<String> = {
            let mut v: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
            v.sort();
            v
        };
        assert_eq!(
            actual, expected,
            "[{}] axiom set mismatch for `{line}`\nactual:\n  {}\nexpected:\n  {}",
            case.name,
            actual.join("\n  "),
            expected.join("\n  ")
        );
    }
    assert!(
        ctx.warnings.is_empty(),
        "[{}] golden sentences must not raise warnings: {:?}",
        case.name,
        ctx.warnings
    );
}

pub fn golden_cases() -> Vec<GoldenCase> {
    vec![
        GoldenCase {
            name: "john_is_a_student",
            sentences: &[(
                "John_NNP is_VBZ a_DT student_NN",
                &["StudentPerson ⊑ (Person ⊓ Student)", "StudentPerson(John)"],
            )],
        },
        GoldenCase {
            name: "priyansh_is_a_student",
            sentences: &[(
                "Priyansh_NNP is_VBZ a_DT student_NN",
                &[
                    "StudentLikePriyansh ≡ (Student ⊓ {Priyansh})",
                    "StudentLikePriyansh(Priyansh)",
                ],
            )],
        },
        GoldenCase {
            name: "wild_cat_is_a_mammal",
            sentences: &[(
                "Wild_JJ cat_NN is_VBZ a_DT mammal_NN",
                &[
                    "WildCat ⊑ Cat",
                    "WildCat ⊑ Mammal",
                    "WildCat ⊑ WildThing",
                    "WildThing ≡ ∃hasAttribute.Wild",
                ],
            )],
        },
        GoldenCase {
            name: "king_richard_was_an_english_ruler",
            sentences: &[(
                "King_NNP Richard_NNP was_VBD an_DT English_JJ ruler_NN",
                &[
                    "EnglishRuler ⊑ EnglishThing",
                    "EnglishRuler ⊑ Ruler",
                    "EnglishRulerLikeKingRichard ≡ (EnglishRuler ⊓ {KingRichard} ⊓ ∃isTrueFor.(ProperInterval ⊓ ∃hasEnd.(Instant ⊓ ∃inDateTime.{tPast1})))",
                    "EnglishRulerLikeKingRichard(KingRichard)",
                    "EnglishThing ≡ ∃hasAttribute.English",
                    "{tPast1} ⊑ Instant  [tPast1 < t_pr = 2020-01-01T00:00:00Z]",
                ],
            )],
        },
        GoldenCase {
            name: "some_students_are_hard_working",
            sentences: &[(
                "Some_DT students_NNS are_VBP hard-working_JJ",
                &[
                    "HardworkingStudent ⊑ (HardworkingThing ⊓ Student)",
                    "HardworkingThing ≡ ∃hasAttribute.Hardworking",
                ],
            )],
        },
        GoldenCase {
            name: "tangerine_is_like_an_orange",
            sentences: &[(
                "Tangerine_NN is_VBZ like_IN an_DT orange_NN",
                &[
                    "Orange ⊑ TangerineOrangeLike",
                    "Tangerine ⊑ TangerineOrangeLike",
                    "TangerineOrangeLike ≡ (OrangeLike ⊓ TangerineLike)",
                ],
            )],
        },
        GoldenCase {
            name: "university_includes_faculty_then_department",
            sentences: &[
                (
                    "University_NN includes_VBZ faculty_NN",
                    &[
                        "Trans(include)",
                        "University ⊑ ∃includeFaculty.Faculty",
                        "includeFaculty ⊑ include",
                    ],
                ),
                (
                    "University_NN includes_VBZ department_NN",
                    &[
                        "Trans(include)",
                        "University ⊑ (∃includeDepartment.Department ⊓ ∃includeFaculty.Faculty)",
                        "includeDepartment ⊑ include",
                    ],
                ),
            ],
        },
        GoldenCase {
            name: "wild_cat_includes_bob_cat",
            sentences: &[(
                "Wild_JJ cat_NN includes_VBZ bob_NN cat_NN",
                &[
                    "BobCat ⊑ Cat",
                    "BobCat ⊑ WildCat",
                    "WildCat ⊑ Cat",
                    "WildCat ⊑ WildThing",
                    "WildThing ≡ ∃hasAttribute.Wild",
                ],
            )],
        },
        GoldenCase {
            name: "at_least_one_of_the_students_is_hard_working",
            sentences: &[(
                "At_IN least_JJS one_CD of_IN the_DT students_NNS is_VBZ hard-working_JJ",
                &[
                    "HardworkingStudent_1_Min1 ≡ (HardworkingThing ⊓ Student_1 ⊓ ∃belongsTo.∃hasCardinality.(Cardinality ⊓ ∃minInclusive.{1}))",
                    "HardworkingThing ≡ ∃hasAttribute.Hardworking",
                    "Student_1 ⊑ (Student ⊓ ∃belongsTo.∃hasCardinality.(Cardinality ⊓ ∃minExclusive.{1}))",
                    "{n1} ⊑ Integer",
                ],
            )],
        },
        GoldenCase {
            name: "at_least_three_candidates_are_qualified",
            sentences: &[(
                "At_IN least_JJS three_CD candidates_NNS are_VBP qualified_JJ",
                &[
                    "Candidate_1 ⊑ (Candidate ⊓ ∃belongsTo.∃hasCardinality.(Cardinality ⊓ ∃minExclusive.{3}))",
                    "QualifiedCandidate_1_Min3 ≡ (Candidate_1 ⊓ QualifiedThing ⊓ ∃belongsTo.∃hasCardinality.(Cardinality ⊓ ∃minInclusive.{3}))",
                    "QualifiedThing ≡ ∃hasAttribute.Qualified",
                    "{n3} ⊑ Integer",
                ],
            )],
        },
        GoldenCase {
            name: "only_john_is_a_musician",
            sentences: &[(
                "Only_RB John_NNP is_VBZ a_DT musician_NN",
                &["Musician_1 ⊑ (Musician ⊓ {John})", "Musician_1(John)"],
            )],
        },
        GoldenCase {
            name: "john_was_a_teacher",
            sentences: &[(
                "John_NNP was_VBD a_DT teacher_NN",
                &[
                    "TeacherPerson ⊑ (Person ⊓ Teacher ⊓ ∃isTrueFor.(ProperInterval ⊓ ∃hasEnd.(Instant ⊓ ∃inDateTime.{tPast1})))",
                    "TeacherPerson(John)",
                    "{tPast1} ⊑ Instant  [tPast1 < t_pr = 2020-01-01T00:00:00Z]",
                ],
            )],
        },
        GoldenCase {
            name: "john_was_a_teacher_three_years_ago",
            sentences: &[(
                "John_NNP was_VBD a_DT teacher_NN three_CD years_NNS ago_RB",
                &[
                    "TeacherPerson ⊑ (Person ⊓ Teacher ⊓ ∃isTrueFor.(ProperInterval ⊓ ∃intervalMeets.(ProperInterval ⊓ ∃hasDurationDescription.(DurationDescription ⊓ Year ⊓ ∃years.{3}) ⊓ ∃hasEnd.(Instant ⊓ ∃inDateTime.{tNow}))))",
                    "TeacherPerson(John)",
                    "{n3} ⊑ Decimal",
                    "{tNow} ⊑ Instant  [tNow = t_pr = 2020-01-01T00:00:00Z]",
                ],
            )],
        },
        GoldenCase {
            name: "john_was_a_teacher_for_three_years",
            sentences: &[(
                "John_NNP was_VBD a_DT teacher_NN for_IN three_CD years_NNS",
                &[
                    "TeacherPerson ⊑ (Person ⊓ Teacher ⊓ ∃isTrueFor.(ProperInterval ⊓ ∃hasDurationDescription.(DurationDescription ⊓ Year ⊓ ∃years.{3}) ⊓ ∃hasEnd.(Instant ⊓ ∃inDateTime.{tPast1})))",
                    "TeacherPerson(John)",
                    "{n3} ⊑ Decimal",
                    "{tPast1} ⊑ Instant  [tPast1 < t_pr = 2020-01-01T00:00:00Z]",
                ],
            )],
        },
        GoldenCase {
            name: "john_may_be_a_good_swimmer",
            sentences: &[(
                "John_NNP may_MD be_VB a_DT good_JJ swimmer_NN",
                &[
                    "GoodSwimmer ⊑ GoodThing",
                    "GoodSwimmer ⊑ Swimmer",
                    "GoodThing ≡ ∃hasAttribute.Good",
                    "MayBeGoodSwimmerPerson ≡ ∃mayBe.GoodSwimmer  [Pr(O(x), t_pr') > 0]",
                    "MayBeGoodSwimmerPerson ⊑ Person",
                    "MayBeGoodSwimmerPerson(John)",
                ],
            )],
        },
        GoldenCase {
            name: "john_can_become_a_diligent_researcher",
            sentences: &[(
                "John_NNP can_MD become_VB a_DT diligent_JJ researcher_NN",
                &[
                    "CanBecomeDiligentResearcherPerson ≡ ∃canBecome.DiligentResearcher  [Pr(O(x), t_pr') > 0 for some t_pr' > t_pr; Pr(O(x), t_pr) = 0]",
                    "CanBecomeDiligentResearcherPerson ⊑ Person",
                    "CanBecomeDiligentResearcherPerson(John)",
                    "DiligentResearcher ⊑ DiligentThing",
                    "DiligentResearcher ⊑ Researcher",
                    "DiligentThing ≡ ∃hasAttribute.Diligent",
                ],
            )],
        },
        GoldenCase {
            name: "the_dog_is_very_clever",
            sentences: &[(
                "The_DT dog_NN is_VBZ very_RB clever_JJ",
                &[
                    "VeryCleverDog ⊑ (Dog ⊓ VeryCleverThing)",
                    "VeryCleverDog(dog_1)",
                    "VeryCleverThing ≡ ∃hasAttribute.VeryClever",
                ],
            )],
        },
        GoldenCase {
            name: "john_being_a_hard_working_student_is_successful",
            sentences: &[(
                "John_NNP ,_, being_VBG a_DT hard-working_JJ student_NN ,_, is_VBZ successful_JJ",
                &[
                    "HardworkingStudent ⊑ HardworkingThing",
                    "HardworkingStudent ⊑ Student",
                    "HardworkingStudentPerson ⊑ (HardworkingStudent ⊓ Person)",
                    "HardworkingStudentPerson(John)",
                    "HardworkingThing ≡ ∃hasAttribute.Hardworking",
                    "SuccessfulPerson ⊑ (Person ⊓ SuccessfulThing)",
                    "SuccessfulPerson(John)",
                    "SuccessfulThing ≡ ∃hasAttribute.Successful",
                ],
            )],
        },
        GoldenCase {
            name: "the_student_is_hard_working",
            sentences: &[(
                "The_DT student_NN is_VBZ hard-working_JJ",
                &[
                    "HardworkingStudent ⊑ (HardworkingThing ⊓ Student)",
                    "HardworkingStudent(student_1)",
                    "HardworkingThing ≡ ∃hasAttribute.Hardworking",
                ],
            )],
        },
        GoldenCase {
            name: "house_boat_is_a_kind_of_vessel",
            sentences: &[(
                "House_NN boat_NN is_VBZ a_DT kind_NN of_IN vessel_NN",
                &["HouseBoat ⊑ Boat", "HouseBoat ⊑ House", "HouseBoat ⊑ Vessel"],
            )],
        },
        GoldenCase {
            name: "sea_plane_is_an_air_vehicle",
            sentences: &[(
                "Sea_NN plane_NN is_VBZ an_DT air_NN vehicle_NN",
                &[
                    "AirVehicle ⊑ Vehicle",
                    "SeaPlane ⊑ AirVehicle",
                    "SeaPlane ⊑ Plane",
                ],
            )],
        },
        GoldenCase {
            name: "john_jr_smith_is_a_student",
            sentences: &[(
                "John_NNP Jr._NNP Smith_NNP is_VBZ a_DT student_NN",
                &[
                    "StudentPerson ⊑ (Person ⊓ Student)",
                    "StudentPerson(JohnJrSmith)",
                ],
            )],
        },
    ]
}

/// Every tagged sentence of the golden suite, in order.
pub fn golden_corpus() -> Vec<String> {
    golden_cases()
        .iter()
        .flat_map(|case| case.sentences.iter().map(|(line, _)| line.to_string()))
        .collect()
}

const NAMES: [&str; 6] = ["John", "Joe", "Mary", "Jill", "Ellen", "Priyansh"];
const NOUNS: [&str; 8] = [
    "student",
    "teacher",
    "musician",
    "swimmer",
    "researcher",
    "engineer",
    "doctor",
    "painter",
];
const ADJECTIVES: [&str; 6] = [
    "good",
    "clever",
    "diligent",
    "successful",
    "intelligent",
    "careful",
];

/// Deterministic synthetic corpus of well-formed tagged sentences cycling
/// through the template inventory.
pub fn variation_corpus(count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    let mut i = 0usize;
    while out.len() < count {
        let name = NAMES[i % NAMES.len()];
        let noun = NOUNS[i % NOUNS.len()];
        let noun2 = NOUNS[(i + 3) % NOUNS.len()];
        let adj = ADJECTIVES[i % ADJECTIVES.len()];
        let line = match i % 10 {
            0 => format!("{name}_NNP is_VBZ a_DT {noun}_NN"),
            1 => format!("{name}_NNP is_VBZ a_DT {adj}_JJ {noun}_NN"),
            2 => format!("Some_DT {noun}s_NNS are_VBP {adj}_JJ"),
            3 => format!("The_DT {noun}_NN is_VBZ {adj}_JJ"),
            4 => format!("{adj}_JJ {noun}_NN is_VBZ a_DT {noun2}_NN"),
            5 => format!("{name}_NNP was_VBD a_DT {noun}_NN"),
            6 => format!("{name}_NNP may_MD be_VB a_DT {adj}_JJ {noun}_NN"),
            7 => format!("At_IN least_JJS three_CD {noun}s_NNS are_VBP {adj}_JJ"),
            8 => format!("{noun}_NN is_VBZ a_DT kind_NN of_IN {noun2}_NN"),
            _ => format!("Only_RB {name}_NNP is_VBZ a_DT {noun}_NN"),
        };
        out.push(line);
        i += 1;
    }
    out
}
