//! `isadl`: learn SHOQ(D)/OWL axioms from English IS-A sentences.
//!
//! The `learn` subcommand runs the whole pipeline; `simplify`, `fit`,
//! `translate`, and `classify` run single stages on the previous stage's
//! serialized output (line-oriented JSON between stages), and `eval`
//! compares a learned taxonomy against a gold one.

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use isadl_core::nss::FitOutcome;
use isadl_core::pipeline::{self, InputMode, PipelineError, RunConfig};
use isadl_core::token::{SourceId, TaggedSentence};
use isadl_core::translate::TranslationContext;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "isadl", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Tagged,
    Raw,
}

impl From<Mode> for InputMode {
    fn from(mode: Mode) -> InputMode {
        match mode {
            Mode::Tagged => InputMode::Tagged,
            Mode::Raw => InputMode::Raw,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitFormat {
    Owl,
    Json,
}

#[derive(Args)]
struct LexiconArgs {
    /// Directory of lexicon TSV tables (defaults to the embedded tables).
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Rewrite-rule table overriding the default registry.
    #[arg(long)]
    rules: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and emit all artifacts.
    Learn {
        /// Input corpus: one sentence per line.
        #[arg(long)]
        input: PathBuf,
        /// Input format: `word_TAG` tokens or raw text.
        #[arg(long, value_enum, default_value = "tagged")]
        mode: Mode,
        #[command(flatten)]
        lexicon: LexiconArgs,
        /// ISO-8601 run clock injected into tense axioms.
        #[arg(long, default_value = pipeline::DEFAULT_CLOCK)]
        clock: String,
        /// OWL functional-syntax output path.
        #[arg(long)]
        out_owl: Option<PathBuf>,
        /// JSON axiom dump (one axiom per line, with provenance).
        #[arg(long)]
        out_json: Option<PathBuf>,
        /// Taxonomy edge list (child<TAB>parent).
        #[arg(long)]
        out_taxonomy: Option<PathBuf>,
        /// Fitted-template dump (one JSON record per sentence).
        #[arg(long)]
        emit_nss: Option<PathBuf>,
        /// Run manifest (counts and per-stage timings).
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Worker count for the per-sentence stages.
        #[arg(long, default_value_t = 1)]
        parallelism: usize,
        /// Exit 2 when any warning is raised.
        #[arg(long)]
        strict: bool,
    },
    /// Preprocess and simplify a corpus into plain IS-A sentences.
    Simplify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "tagged")]
        mode: Mode,
        #[command(flatten)]
        lexicon: LexiconArgs,
        /// Output path (default stdout), one JSON sentence per line.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Fit sentences into the normalized template.
    Fit {
        /// Simplified-sentence JSON lines, or a tagged corpus with
        /// `--from tagged`.
        #[arg(long)]
        input: PathBuf,
        /// Input format: jsonl (simplify output) or tagged corpus.
        #[arg(long, value_enum, default_value = "jsonl")]
        from: FitInput,
        #[command(flatten)]
        lexicon: LexiconArgs,
        /// Optional gold correctness flags: `document:line<TAB>0|1`.
        #[arg(long)]
        gold: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Translate fitted templates into axioms.
    Translate {
        /// Fit-outcome JSON lines.
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[arg(long, default_value = pipeline::DEFAULT_CLOCK)]
        clock: String,
        #[arg(long, value_enum, default_value = "owl")]
        emit: EmitFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Classify a serialized knowledge base into a taxonomy.
    Classify {
        /// OWL functional-syntax input.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare a learned taxonomy against a gold taxonomy.
    Eval {
        /// Learned taxonomy edge list (child<TAB>parent).
        #[arg(long)]
        learned: PathBuf,
        /// Gold taxonomy edge list.
        #[arg(long)]
        gold: PathBuf,
        /// Keep the top concept in the concept sets.
        #[arg(long)]
        include_top: bool,
        /// Report path (default stdout).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FitInput {
    Jsonl,
    Tagged,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn write_output(path: &Option<PathBuf>, contents: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, contents)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            std::io::stdout().write_all(contents.as_bytes())?;
        }
    }
    Ok(())
}

fn read_to_string(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Learn {
            input,
            mode,
            lexicon,
            clock,
            out_owl,
            out_json,
            out_taxonomy,
            emit_nss,
            manifest,
            parallelism,
            strict,
        } => {
            let mut cfg = RunConfig::new(input);
            cfg.mode = mode.into();
            cfg.lexicon_dir = lexicon.lexicon;
            cfg.rules_file = lexicon.rules;
            cfg.clock = clock;
            cfg.out_owl = out_owl;
            cfg.out_json = out_json;
            cfg.out_taxonomy = out_taxonomy;
            cfg.out_nss = emit_nss;
            cfg.out_manifest = manifest;
            cfg.parallelism = parallelism.max(1);
            cfg.strict = strict;
            match pipeline::learn(&cfg) {
                Ok(result) => {
                    eprintln!(
                        "learned {} axioms from {} sentences ({} fitted, {} failed); taxonomy has {} nodes",
                        result.manifest.axioms,
                        result.manifest.sentences,
                        result.manifest.fitted,
                        result.manifest.failed,
                        result.manifest.taxonomy_nodes,
                    );
                    for warning in &result.manifest.warnings {
                        eprintln!("warning: {warning}");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(PipelineError::StrictWarnings { count }) => {
                    eprintln!("error: strict mode: {count} warning(s) raised");
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Simplify {
            input,
            mode,
            lexicon,
            output,
        } => {
            let lex = pipeline::load_lexicon(&lexicon.lexicon)?;
            let rules = pipeline::load_rules(&lexicon.rules)?;
            let text = read_to_string(&input)?;
            let lines: Vec<String> = text.lines().map(|l| l.to_string()).collect();
            let document = file_name(&input);
            let (sentences, warnings) =
                pipeline::preprocess_corpus(&lines, &document, mode.into(), &lex, 1);
            let (simplified, more_warnings) = pipeline::simplify_corpus(&sentences, &lex, &rules, 1);
            for w in warnings.iter().chain(&more_warnings) {
                eprintln!("warning: {w}");
            }
            let mut out = String::new();
            for s in &simplified {
                out.push_str(&serde_json::to_string(s)?);
                out.push('\n');
            }
            write_output(&output, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fit {
            input,
            from,
            lexicon,
            gold,
            output,
        } => {
            let lex = pipeline::load_lexicon(&lexicon.lexicon)?;
            let text = read_to_string(&input)?;
            let sentences: Vec<TaggedSentence> = match from {
                FitInput::Jsonl => text
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(serde_json::from_str)
                    .collect::<Result<_, _>>()
                    .context("parsing simplified-sentence JSON lines")?,
                FitInput::Tagged => {
                    let lines: Vec<String> = text.lines().map(|l| l.to_string()).collect();
                    let document = file_name(&input);
                    let (sentences, warnings) = pipeline::preprocess_corpus(
                        &lines,
                        &document,
                        InputMode::Tagged,
                        &lex,
                        1,
                    );
                    for w in &warnings {
                        eprintln!("warning: {w}");
                    }
                    sentences
                }
            };
            let outcomes = pipeline::fit_corpus(&sentences, &lex, 1);
            let gold_flags = match &gold {
                Some(path) => Some(parse_gold_flags(&read_to_string(path)?)?),
                None => None,
            };
            let characterization = isadl_core::nss::characterization_scores(
                &outcomes,
                &sentences,
                gold_flags.as_ref(),
            );
            let mut out = String::new();
            for outcome in &outcomes {
                out.push_str(&serde_json::to_string(outcome)?);
                out.push('\n');
            }
            write_output(&output, &out)?;
            eprintln!("{}", serde_json::to_string(&characterization)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Translate {
            input,
            lexicon,
            clock,
            emit,
            output,
        } => {
            let lex = pipeline::load_lexicon(&lexicon.lexicon)?;
            let text = read_to_string(&input)?;
            let outcomes: Vec<FitOutcome> = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(serde_json::from_str)
                .collect::<Result<_, _>>()
                .context("parsing fit-outcome JSON lines")?;
            let mut ctx = TranslationContext::new(&lex, clock);
            let (kb, warnings) = pipeline::translate_corpus(&outcomes, &mut ctx);
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            let rendered = match emit {
                EmitFormat::Owl => isadl_core::owl::serialize(&kb),
                EmitFormat::Json => pipeline::axioms_jsonl(&kb),
            };
            write_output(&output, &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { input, output } => {
            let text = read_to_string(&input)?;
            let kb = isadl_core::owl::parse(&text)
                .map_err(|e| anyhow::anyhow!("parsing {}: {e}", input.display()))?;
            let taxonomy = isadl_core::reasoner::classify(&kb)?;
            write_output(&output, &taxonomy.to_edge_list())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval {
            learned,
            gold,
            include_top,
            report,
        } => {
            let learned_graph =
                isadl_core::reasoner::TaxonomyGraph::from_edge_list(&read_to_string(&learned)?)?;
            let gold_graph =
                isadl_core::reasoner::TaxonomyGraph::from_edge_list(&read_to_string(&gold)?)?;
            let result = isadl_core::eval::iim(&learned_graph, &gold_graph, include_top)?;
            write_output(&report, &serde_json::to_string_pretty(&result)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn file_name(path: &std::path::Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().to_string())
        .unwrap_or_else(|| "corpus".to_string())
}

/// Parses `document:line<TAB>0|1` gold correctness flags.
fn parse_gold_flags(text: &str) -> Result<BTreeMap<SourceId, bool>> {
    let mut flags = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (source, flag) = line
            .split_once('\t')
            .with_context(|| format!("gold flags line {}: expected source<TAB>0|1", i + 1))?;
        let (document, line_no) = source
            .rsplit_once(':')
            .with_context(|| format!("gold flags line {}: expected document:line", i + 1))?;
        let source = SourceId::new(document, line_no.parse()?);
        flags.insert(source, flag.trim() == "1");
    }
    Ok(flags)
}
