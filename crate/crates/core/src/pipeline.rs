//! End-to-end pipeline: corpus ingestion, preprocess → simplify → fit →
//! translate → classify, artifact emission, and the run manifest. Each
//! stage is also exposed on its own so the CLI subcommands and the staged
//! golden tests run exactly the code `learn` runs.

use crate::dl::KnowledgeBase;
use crate::lexicon::{Lexicon, LexiconError};
use crate::nss::{self, Characterization, FitOutcome};
use crate::preprocess::{self, PreprocessError};
use crate::reasoner::{self, ReasonerError, TaxonomyGraph};
use crate::simplify::{self, RuleError, RuleRegistry, SimplifyError};
use crate::token::{SourceId, TaggedSentence};
use crate::translate::{self, TranslateError, TranslationContext};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InputMode {
    /// One `word_TAG` sentence per line.
    Tagged,
    /// Raw text, tagged by the fallback tagger.
    Raw,
}

/// Configuration of a full `learn` run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: PathBuf,
    pub mode: InputMode,
    pub lexicon_dir: Option<PathBuf>,
    pub rules_file: Option<PathBuf>,
    /// ISO-8601 run clock injected into the tense rules.
    pub clock: String,
    pub out_owl: Option<PathBuf>,
    pub out_json: Option<PathBuf>,
    pub out_taxonomy: Option<PathBuf>,
    pub out_nss: Option<PathBuf>,
    pub out_manifest: Option<PathBuf>,
    /// Worker count for the pure per-sentence stages; translation stays
    /// sequential so the group counters are deterministic.
    pub parallelism: usize,
    pub include_top: bool,
    /// Treat warnings (induction-missing, unsupported patterns) as fatal.
    pub strict: bool,
}

pub const DEFAULT_CLOCK: &str = "1970-01-01T00:00:00Z";

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        RunConfig {
            input: input.into(),
            mode: InputMode::Tagged,
            lexicon_dir: None,
            rules_file: None,
            clock: DEFAULT_CLOCK.to_string(),
            out_owl: None,
            out_json: None,
            out_taxonomy: None,
            out_nss: None,
            out_manifest: None,
            parallelism: 1,
            include_top: false,
            strict: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Rules(#[from] RuleError),
    #[error(transparent)]
    Preprocess(#[from] PreprocessError),
    #[error(transparent)]
    Reasoner(#[from] ReasonerError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("strict mode: {count} warning(s) raised")]
    StrictWarnings { count: usize },
}

/// Counts and per-stage wall-clock timings of one run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub sentences: usize,
    pub simplified: usize,
    pub fitted: usize,
    pub correctly_fitted: usize,
    pub failed: usize,
    pub axioms: usize,
    pub taxonomy_nodes: usize,
    pub characterization: Characterization,
    pub warnings: Vec<String>,
    pub clock: String,
    /// Milliseconds per stage: preprocess, simplify, fit, translate,
    /// classify.
    pub timings_ms: BTreeMap<String, u128>,
}

/// Everything a run produces, before artifact files are written.
#[derive(Debug)]
pub struct LearnResult {
    pub kb: KnowledgeBase,
    pub taxonomy: TaxonomyGraph,
    pub outcomes: Vec<FitOutcome>,
    pub simplified: Vec<TaggedSentence>,
    pub manifest: Manifest,
}

fn read_lines(path: &PathBuf) -> Result<Vec<String>, PipelineError> {
    let text = std::fs::read_to_string(path).map_err(|source| PipelineError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(text.lines().map(|l| l.to_string()).collect())
}

pub fn load_lexicon(cfg_dir: &Option<PathBuf>) -> Result<Lexicon, PipelineError> {
    Ok(match cfg_dir {
        Some(dir) => Lexicon::load_dir(dir)?,
        None => Lexicon::embedded(),
    })
}

pub fn load_rules(cfg_file: &Option<PathBuf>) -> Result<RuleRegistry, PipelineError> {
    Ok(match cfg_file {
        Some(file) => RuleRegistry::load_file(file)?,
        None => RuleRegistry::embedded(),
    })
}

fn with_pool<T: Send>(
    parallelism: usize,
    job: impl FnOnce() -> T + Send,
) -> T {
    if parallelism <= 1 {
        return job();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build();
    match pool {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

/// Stage 1: tokenize/tag + normalize every input line. Line numbers start
/// at 1; blank lines are skipped.
pub fn preprocess_corpus(
    lines: &[String],
    document: &str,
    mode: InputMode,
    lex: &Lexicon,
    parallelism: usize,
) -> (Vec<TaggedSentence>, Vec<String>) {
    let numbered: Vec<(usize, &String)> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    let results: Vec<Result<TaggedSentence, PreprocessError>> = with_pool(parallelism, || {
        numbered
            .par_iter()
            .map(|(line_no, line)| {
                let source = SourceId::new(document, *line_no);
                match mode {
                    InputMode::Tagged => preprocess::preprocess_line(line, source, lex),
                    InputMode::Raw => preprocess::preprocess_raw_line(line, source, lex),
                }
            })
            .collect()
    });
    let mut sentences = Vec::new();
    let mut warnings = Vec::new();
    for result in results {
        match result {
            Ok(s) => sentences.push(s),
            Err(e) => warnings.push(e.to_string()),
        }
    }
    (sentences, warnings)
}

/// Stage 2: pattern rewriting plus compound splitting, order-preserving.
pub fn simplify_corpus(
    sentences: &[TaggedSentence],
    lex: &Lexicon,
    rules: &RuleRegistry,
    parallelism: usize,
) -> (Vec<TaggedSentence>, Vec<String>) {
    let results: Vec<Result<Vec<TaggedSentence>, SimplifyError>> = with_pool(parallelism, || {
        sentences
            .par_iter()
            .map(|s| simplify::simplify(s, lex, rules))
            .collect()
    });
    let mut out = Vec::new();
    let mut warnings = Vec::new();
    for result in results {
        match result {
            Ok(list) => out.extend(list),
            Err(e) => warnings.push(e.to_string()),
        }
    }
    (out, warnings)
}

/// Stage 3: template fitting, one outcome per simplified sentence.
pub fn fit_corpus(
    sentences: &[TaggedSentence],
    lex: &Lexicon,
    parallelism: usize,
) -> Vec<FitOutcome> {
    with_pool(parallelism, || {
        sentences
            .par_iter()
            .map(|s| nss::fit_template(s, lex))
            .collect()
    })
}

/// Stage 4: sequential translation of the fitted instances into one
/// knowledge base, followed by the "only"-rule disjointness post-pass.
pub fn translate_corpus(
    outcomes: &[FitOutcome],
    ctx: &mut TranslationContext,
) -> (KnowledgeBase, Vec<String>) {
    let mut kb = KnowledgeBase::new();
    let mut warnings = Vec::new();
    for outcome in outcomes {
        let Ok(instance) = &outcome.result else {
            continue;
        };
        match translate::translate(instance, ctx) {
            Ok(axioms) => {
                for traced in axioms {
                    if let Err(e) = kb.add_axiom(traced.axiom, traced.provenance) {
                        warnings.push(format!("{}: {e}", outcome.source));
                    }
                }
            }
            Err(TranslateError::UnsupportedPattern { at, what }) => {
                warnings.push(format!("{at}: unsupported pattern: {what}"));
            }
            Err(e) => warnings.push(e.to_string()),
        }
    }
    for traced in translate::finalize_only_rules(ctx, &kb) {
        if let Err(e) = kb.add_axiom(traced.axiom, traced.provenance) {
            warnings.push(e.to_string());
        }
    }
    warnings.extend(
        ctx.warnings
            .iter()
            .map(|(source, message)| format!("{source}: {message}")),
    );
    warnings.extend(kb.induction_warnings());
    (kb, warnings)
}

/// Runs the full pipeline and writes the requested artifacts.
pub fn learn(cfg: &RunConfig) -> Result<LearnResult, PipelineError> {
    let lex = load_lexicon(&cfg.lexicon_dir)?;
    let rules = load_rules(&cfg.rules_file)?;
    let lines = read_lines(&cfg.input)?;
    let document = cfg
        .input
        .file_name()
        .map(|n| n.to_string_lossy().to_string())
        .unwrap_or_else(|| "corpus".to_string());

    let mut timings = BTreeMap::new();
    let mut warnings: Vec<String> = Vec::new();

    let t0 = Instant::now();
    let (sentences, preprocess_warnings) =
        preprocess_corpus(&lines, &document, cfg.mode, &lex, cfg.parallelism);
    warnings.extend(preprocess_warnings);
    timings.insert("preprocess".to_string(), t0.elapsed().as_millis());

    let t1 = Instant::now();
    let (simplified, simplify_warnings) =
        simplify_corpus(&sentences, &lex, &rules, cfg.parallelism);
    warnings.extend(simplify_warnings);
    timings.insert("simplify".to_string(), t1.elapsed().as_millis());

    let t2 = Instant::now();
    let outcomes = fit_corpus(&simplified, &lex, cfg.parallelism);
    timings.insert("fit".to_string(), t2.elapsed().as_millis());

    let t3 = Instant::now();
    let mut ctx = TranslationContext::new(&lex, cfg.clock.clone());
    let (kb, translate_warnings) = translate_corpus(&outcomes, &mut ctx);
    warnings.extend(translate_warnings);
    timings.insert("translate".to_string(), t3.elapsed().as_millis());

    let t4 = Instant::now();
    let taxonomy = reasoner::classify(&kb)?;
    timings.insert("classify".to_string(), t4.elapsed().as_millis());

    let characterization = nss::characterization_scores(&outcomes, &simplified, None);
    let manifest = Manifest {
        sentences: sentences.len(),
        simplified: simplified.len(),
        fitted: characterization.n_f as usize,
        correctly_fitted: characterization.n_cf as usize,
        failed: simplified.len() - characterization.n_f as usize,
        axioms: kb.len(),
        taxonomy_nodes: taxonomy.nodes.len(),
        characterization,
        warnings: warnings.clone(),
        clock: cfg.clock.clone(),
        timings_ms: timings,
    };

    write_artifacts(cfg, &kb, &taxonomy, &outcomes, &manifest)?;

    if cfg.strict && !manifest.warnings.is_empty() {
        return Err(PipelineError::StrictWarnings {
            count: manifest.warnings.len(),
        });
    }

    Ok(LearnResult {
        kb,
        taxonomy,
        outcomes,
        simplified,
        manifest,
    })
}

fn write_artifacts(
    cfg: &RunConfig,
    kb: &KnowledgeBase,
    taxonomy: &TaxonomyGraph,
    outcomes: &[FitOutcome],
    manifest: &Manifest,
) -> Result<(), PipelineError> {
    let write = |path: &PathBuf, contents: String| -> Result<(), PipelineError> {
        std::fs::write(path, contents).map_err(|source| PipelineError::Io {
            path: path.display().to_string(),
            source,
        })
    };
    if let Some(path) = &cfg.out_owl {
        write(path, crate::owl::serialize(kb))?;
    }
    if let Some(path) = &cfg.out_json {
        write(path, axioms_jsonl(kb))?;
    }
    if let Some(path) = &cfg.out_taxonomy {
        write(path, taxonomy.to_edge_list())?;
    }
    if let Some(path) = &cfg.out_nss {
        let mut text = String::new();
        for outcome in outcomes {
            text.push_str(&serde_json::to_string(outcome).expect("outcome serializes"));
            text.push('\n');
        }
        write(path, text)?;
    }
    if let Some(path) = &cfg.out_manifest {
        write(
            path,
            serde_json::to_string_pretty(manifest).expect("manifest serializes"),
        )?;
    }
    Ok(())
}

/// Line-oriented JSON dump of the axioms with provenance, in canonical
/// order.
pub fn axioms_jsonl(kb: &KnowledgeBase) -> String {
    let mut out = String::new();
    for traced in kb.sorted_axioms() {
        out.push_str(&serde_json::to_string(traced).expect("axiom serializes"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    fn write_corpus(lines: &[&str]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        for line in lines {
            writeln!(f, "{line}").unwrap();
        }
        f
    }

    #[test]
    fn empty_corpus_learns_empty_kb() {
        let corpus = write_corpus(&[]);
        let cfg = RunConfig::new(corpus.path());
        let result = learn(&cfg).unwrap();
        assert!(result.kb.is_empty());
        assert_eq!(result.manifest.sentences, 0);
        assert_eq!(result.manifest.fitted, 0);
    }

    #[test]
    fn demo_corpus_produces_axioms_and_taxonomy() {
        let corpus = write_corpus(&[
            "John_NNP is_VBZ a_DT student_NN",
            "Wild_JJ cat_NN is_VBZ a_DT mammal_NN",
            "Some_DT students_NNS are_VBP hard-working_JJ",
            "University_NN includes_VBZ faculty_NN",
        ]);
        let cfg = RunConfig::new(corpus.path());
        let result = learn(&cfg).unwrap();
        assert_eq!(result.manifest.sentences, 4);
        assert_eq!(result.manifest.fitted, 4);
        assert_eq!(result.manifest.failed, 0);
        assert!(result.kb.len() >= 8);
        assert!(result.taxonomy.subsumed_by("WildCat", "Mammal"));
        assert!(result.manifest.warnings.is_empty(), "{:?}", result.manifest.warnings);
        let c = &result.manifest.characterization;
        assert!(c.n_cf <= c.n_f && c.n_f <= c.n);
    }

    #[test]
    fn manifest_reports_stage_timings() {
        let corpus = write_corpus(&["John_NNP is_VBZ a_DT student_NN"]);
        let cfg = RunConfig::new(corpus.path());
        let result = learn(&cfg).unwrap();
        for stage in ["preprocess", "simplify", "fit", "translate", "classify"] {
            assert!(result.manifest.timings_ms.contains_key(stage));
        }
    }
}
