//! Batch command-line front end for the treebank conversion pipeline.
//!
//! Diagnostics go to stderr as one-line tab-separated records
//! (`severity<TAB>location<TAB>code<TAB>message`); outputs are
//! deterministic for identical inputs and configuration. Exit status: 0 on
//! success, 1 when the run completed but emitted error diagnostics, 2 on
//! usage or I/O failures.

mod pool;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use ktb_core::audit::{
    corpus_stats, split_assignments, substitute_morphology, validate_dependency, AgreementReport,
    SplitManifest, SplitName, SplitSpec,
};
use ktb_core::depconv::to_dependency;
use ktb_core::model::{Config, Mode, Tagset, TagsetRegistry};
use ktb_core::transform::to_penn;
use ktb_core::treeio::{
    serialize_tree, write_conll, ConllOutcome, ConllReader, Diagnostic, MorphOutcome, MorphReader,
    ParseOptions, TreeOutcome, TreebankReader,
};

#[derive(Parser)]
#[command(
    name = "ktb",
    about = "Korean treebank conversion: bracketed constituent trees to Penn-style trees and CoNLL-X dependencies",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Tagset of the input morphology.
    #[arg(long, default_value = "kaist", global = true)]
    tagset: String,
    /// Reject out-of-vocabulary tags and malformed trees outright.
    #[arg(long, conflicts_with = "lenient", global = true)]
    strict: bool,
    /// Pass unknown tags through with a warning.
    #[arg(long, global = true)]
    lenient: bool,
    /// Key/value config file overriding mapping tables and mode.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite source-style trees into Penn-style trees.
    Transform {
        #[command(flatten)]
        common: CommonOpts,
        /// Input treebank (bracketed trees).
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for the per-tree work.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Convert trees to CoNLL-X dependencies (transforming first).
    Convert {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Check trees or CoNLL-X files and report diagnostics.
    Validate {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Tree and token counts, optionally broken down by a split manifest.
    Stats {
        #[command(flatten)]
        common: CommonOpts,
        /// Input file(s); repeat for several corpora.
        #[arg(long = "in", required = true)]
        inputs: Vec<PathBuf>,
        /// Split manifest (single input only).
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition a corpus into train/dev/test files.
    Split {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long = "in")]
        input: PathBuf,
        /// Output prefix; writes `<prefix>.train/.dev/.test` with the input
        /// extension appended.
        #[arg(long)]
        out: PathBuf,
        /// Contiguous split proportions `train,dev,test` summing to 1.
        #[arg(long, conflicts_with = "manifest")]
        ratios: Option<String>,
        /// Explicit ordinal manifest file.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Substitute automatic morphological analyses into a CoNLL-X file.
    Subst {
        #[command(flatten)]
        common: CommonOpts,
        /// Gold CoNLL-X input.
        #[arg(long = "in")]
        input: PathBuf,
        /// Automatic analyses, one sentence per blank-line block.
        #[arg(long)]
        morph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score automatic analyses against gold analyses.
    Agree {
        #[command(flatten)]
        common: CommonOpts,
        /// Gold morphology file.
        #[arg(long)]
        gold: PathBuf,
        /// Automatic morphology file (interpreted with --tagset).
        #[arg(long)]
        auto: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Io(PathBuf, io::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Usage(message) => f.write_str(message),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(false) => std::process::exit(0),
        Ok(true) => std::process::exit(1),
        Err(e) => {
            eprintln!("ktb: {e}");
            std::process::exit(2);
        }
    }
}

/// Execution context shared by every subcommand.
struct Ctx {
    registry: TagsetRegistry,
    tagset: Tagset,
    mode: Mode,
    errors: u64,
}

impl Ctx {
    fn new(common: &CommonOpts) -> Result<Self, CliError> {
        let config = match &common.config {
            Some(path) => {
                let text =
                    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
                Config::parse(&text).map_err(|e| CliError::Usage(e.to_string()))?
            }
            None => Config::default(),
        };
        let registry =
            TagsetRegistry::with_config(&config).map_err(|e| CliError::Usage(e.to_string()))?;
        let mode = if common.strict {
            Mode::Strict
        } else if common.lenient {
            Mode::Lenient
        } else {
            config.mode.unwrap_or_default()
        };
        let tagset: Tagset = common
            .tagset
            .parse()
            .map_err(|e: ktb_core::model::TagError| CliError::Usage(e.to_string()))?;
        Ok(Ctx {
            registry,
            tagset,
            mode,
            errors: 0,
        })
    }

    fn parse_options(&self) -> ParseOptions {
        ParseOptions {
            tagset: self.tagset,
            mode: self.mode,
            expect_sentence_root: true,
        }
    }

    fn report(&mut self, diagnostic: &Diagnostic) {
        if diagnostic.is_error() {
            self.errors += 1;
        }
        eprintln!("{diagnostic}");
    }

    fn report_all(&mut self, diagnostics: &[Diagnostic]) {
        for d in diagnostics {
            self.report(d);
        }
    }
}

fn open_input(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn open_output(path: Option<&PathBuf>) -> Result<BufWriter<Box<dyn Write>>, CliError> {
    match path {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::Io(path.clone(), e))?;
            Ok(BufWriter::new(Box::new(file)))
        }
        None => Ok(BufWriter::new(Box::new(io::stdout()))),
    }
}

fn io_err(path: &Path) -> impl Fn(io::Error) -> CliError + '_ {
    move |e| CliError::Io(path.to_path_buf(), e)
}

/// Sniff whether a file holds bracketed trees (first non-blank byte is a
/// parenthesis) or CoNLL-X rows.
fn looks_like_trees(path: &Path) -> Result<bool, CliError> {
    let mut reader = open_input(path)?;
    let mut buf = String::new();
    loop {
        buf.clear();
        let n = reader
            .read_line(&mut buf)
            .map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        if n == 0 {
            return Ok(true);
        }
        if let Some(c) = buf.trim_start().chars().next() {
            return Ok(c == '(');
        }
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Transform {
            common,
            input,
            out,
            workers,
        } => {
            let mut ctx = Ctx::new(&common)?;
            run_tree_pipeline(
                &mut ctx,
                &input,
                out.as_ref(),
                workers,
                PipelineKind::Transform,
            )
        }
        Command::Convert {
            common,
            input,
            out,
            workers,
        } => {
            let mut ctx = Ctx::new(&common)?;
            run_tree_pipeline(
                &mut ctx,
                &input,
                out.as_ref(),
                workers,
                PipelineKind::Convert,
            )
        }
        Command::Validate { common, input } => {
            let mut ctx = Ctx::new(&common)?;
            run_validate(&mut ctx, &input)
        }
        Command::Stats {
            common,
            inputs,
            manifest,
            out,
        } => {
            let mut ctx = Ctx::new(&common)?;
            run_stats(&mut ctx, &inputs, manifest.as_ref(), out.as_ref())
        }
        Command::Split {
            common,
            input,
            out,
            ratios,
            manifest,
        } => {
            let mut ctx = Ctx::new(&common)?;
            run_split(&mut ctx, &input, &out, ratios.as_deref(), manifest.as_ref())
        }
        Command::Subst {
            common,
            input,
            morph,
            out,
        } => {
            let mut ctx = Ctx::new(&common)?;
            run_subst(&mut ctx, &input, &morph, out.as_ref())
        }
        Command::Agree {
            common,
            gold,
            auto,
            out,
        } => {
            let mut ctx = Ctx::new(&common)?;
            run_agree(&mut ctx, &gold, &auto, out.as_ref())
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum PipelineKind {
    Transform,
    Convert,
}

fn run_tree_pipeline(
    ctx: &mut Ctx,
    input: &Path,
    out: Option<&PathBuf>,
    workers: usize,
    kind: PipelineKind,
) -> Result<bool, CliError> {
    let reader = TreebankReader::new(open_input(input)?, &ctx.registry, ctx.parse_options());
    let mut writer = open_output(out)?;
    let registry = ctx.registry.clone();
    let mode = ctx.mode;
    let mut kept = 0u64;
    let mut dropped = 0u64;
    // Per-tree work (transform, conversion, rendering) runs on the pool;
    // reading, diagnostics and writing stay on this thread, in order.
    let mut io_failure: Option<io::Error> = None;
    let mut errors = 0u64;
    {
        let items = reader.map_while(|outcome| match outcome {
            Ok(outcome) => Some(outcome),
            Err(e) => {
                io_failure = Some(e);
                None
            }
        });
        let map = |outcome: TreeOutcome| -> (Vec<Diagnostic>, Option<String>) {
            match outcome {
                TreeOutcome::Tree {
                    tree,
                    warnings,
                    ordinal,
                } => {
                    let mut diagnostics = warnings;
                    let (penn, transform_diags) = to_penn(&tree, &registry);
                    diagnostics.extend(transform_diags.into_iter().map(|d| d.at_ordinal(ordinal)));
                    let rendered = match kind {
                        PipelineKind::Transform => Some(format!("{}\n", serialize_tree(&penn))),
                        PipelineKind::Convert => match to_dependency(&penn, &registry) {
                            Ok(dep) => match write_conll(&dep, &registry, mode) {
                                Ok(block) => Some(block),
                                Err(d) => {
                                    diagnostics.push(d.at_ordinal(ordinal));
                                    None
                                }
                            },
                            Err(e) => {
                                diagnostics.push(
                                    Diagnostic::error("convert-failed", e.to_string())
                                        .at_ordinal(ordinal),
                                );
                                None
                            }
                        },
                    };
                    (diagnostics, rendered)
                }
                TreeOutcome::Skipped { diagnostics, .. } => (diagnostics, None),
            }
        };
        pool::ordered_map(items, workers, map, |(diagnostics, rendered)| {
            for d in &diagnostics {
                if d.is_error() {
                    errors += 1;
                }
                eprintln!("{d}");
            }
            match rendered {
                Some(text) => {
                    kept += 1;
                    writer.write_all(text.as_bytes())?;
                }
                None => dropped += 1,
            }
            Ok(())
        })
        .map_err(io_err(out.map(PathBuf::as_path).unwrap_or(input)))?;
    }
    ctx.errors += errors;
    if let Some(e) = io_failure {
        return Err(CliError::Io(input.to_path_buf(), e));
    }
    writer.flush().map_err(io_err(input))?;
    eprintln!("# kept={kept} dropped={dropped} errors={}", ctx.errors);
    Ok(ctx.errors > 0)
}

fn run_validate(ctx: &mut Ctx, input: &Path) -> Result<bool, CliError> {
    if looks_like_trees(input)? {
        let reader = TreebankReader::new(open_input(input)?, &ctx.registry, ctx.parse_options());
        let mut kept = 0u64;
        let mut dropped = 0u64;
        for outcome in reader {
            match outcome.map_err(io_err(input))? {
                TreeOutcome::Tree { warnings, .. } => {
                    kept += 1;
                    ctx.report_all(&warnings);
                }
                TreeOutcome::Skipped { diagnostics, .. } => {
                    dropped += 1;
                    ctx.report_all(&diagnostics);
                }
            }
        }
        eprintln!("# kept={kept} dropped={dropped} errors={}", ctx.errors);
    } else {
        let reader = ConllReader::new(open_input(input)?, &ctx.registry, ctx.tagset, ctx.mode);
        let mut kept = 0u64;
        let mut dropped = 0u64;
        for outcome in reader {
            match outcome.map_err(io_err(input))? {
                ConllOutcome::Sentence {
                    tree,
                    warnings,
                    ordinal,
                } => {
                    kept += 1;
                    ctx.report_all(&warnings);
                    let problems = validate_dependency(&tree, None);
                    for d in problems {
                        ctx.report(&d.at_ordinal(ordinal));
                    }
                }
                ConllOutcome::Skipped { diagnostics, .. } => {
                    dropped += 1;
                    ctx.report_all(&diagnostics);
                }
            }
        }
        eprintln!("# kept={kept} dropped={dropped} errors={}", ctx.errors);
    }
    Ok(ctx.errors > 0)
}

/// Token counts per kept tree of one corpus file, at the granularity of the
/// transformed (Penn-style) trees.
fn per_tree_tokens(ctx: &mut Ctx, input: &Path) -> Result<Vec<u64>, CliError> {
    let mut counts = Vec::new();
    if looks_like_trees(input)? {
        let reader = TreebankReader::new(open_input(input)?, &ctx.registry, ctx.parse_options());
        for outcome in reader {
            match outcome.map_err(io_err(input))? {
                TreeOutcome::Tree { tree, warnings, .. } => {
                    ctx.report_all(&warnings);
                    let (penn, _) = to_penn(&tree, &ctx.registry);
                    counts.push(penn.terminal_count() as u64);
                }
                TreeOutcome::Skipped { diagnostics, .. } => ctx.report_all(&diagnostics),
            }
        }
    } else {
        let reader = ConllReader::new(open_input(input)?, &ctx.registry, ctx.tagset, ctx.mode);
        for outcome in reader {
            match outcome.map_err(io_err(input))? {
                ConllOutcome::Sentence { tree, warnings, .. } => {
                    ctx.report_all(&warnings);
                    counts.push(tree.len() as u64);
                }
                ConllOutcome::Skipped { diagnostics, .. } => ctx.report_all(&diagnostics),
            }
        }
    }
    Ok(counts)
}

fn run_stats(
    ctx: &mut Ctx,
    inputs: &[PathBuf],
    manifest: Option<&PathBuf>,
    out: Option<&PathBuf>,
) -> Result<bool, CliError> {
    if manifest.is_some() && inputs.len() != 1 {
        return Err(CliError::Usage(
            "--manifest requires exactly one --in".to_string(),
        ));
    }
    let mut writer = open_output(out)?;
    for input in inputs {
        let counts = per_tree_tokens(ctx, input)?;
        let assignments = match manifest {
            Some(path) => {
                let text =
                    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
                let manifest =
                    SplitManifest::parse(&text).map_err(|e| CliError::Usage(e.to_string()))?;
                Some(
                    manifest
                        .assignments(counts.len())
                        .map_err(|e| CliError::Usage(e.to_string()))?,
                )
            }
            None => None,
        };
        let report = corpus_stats(counts, assignments.as_deref())
            .map_err(|e| CliError::Usage(e.to_string()))?;
        writeln!(writer, "# {}", input.display()).map_err(io_err(input))?;
        writer
            .write_all(report.to_tsv().as_bytes())
            .map_err(io_err(input))?;
    }
    writer
        .flush()
        .map_err(|e| CliError::Io(out.cloned().unwrap_or_else(|| PathBuf::from("-")), e))?;
    Ok(ctx.errors > 0)
}

/// Stream the kept units of a corpus file as canonical block texts. The
/// first pass (`sink` = None, quiet) only counts; the second pass renders
/// and reports, so diagnostics are emitted once.
fn for_each_kept_block(
    ctx: &mut Ctx,
    input: &Path,
    quiet: bool,
    mut sink: impl FnMut(String) -> Result<(), CliError>,
) -> Result<u64, CliError> {
    let mut kept = 0u64;
    if looks_like_trees(input)? {
        let reader = TreebankReader::new(open_input(input)?, &ctx.registry, ctx.parse_options());
        for outcome in reader {
            match outcome.map_err(io_err(input))? {
                TreeOutcome::Tree { tree, warnings, .. } => {
                    if !quiet {
                        ctx.report_all(&warnings);
                    }
                    kept += 1;
                    sink(format!("{}\n", serialize_tree(&tree)))?;
                }
                TreeOutcome::Skipped { diagnostics, .. } => {
                    if !quiet {
                        ctx.report_all(&diagnostics);
                    }
                }
            }
        }
    } else {
        let reader = ConllReader::new(open_input(input)?, &ctx.registry, ctx.tagset, ctx.mode);
        for outcome in reader {
            match outcome.map_err(io_err(input))? {
                ConllOutcome::Sentence { tree, warnings, .. } => {
                    if !quiet {
                        ctx.report_all(&warnings);
                    }
                    match write_conll(&tree, &ctx.registry, ctx.mode) {
                        Ok(block) => {
                            kept += 1;
                            sink(block)?;
                        }
                        Err(d) => {
                            if !quiet {
                                ctx.report(&d);
                            }
                        }
                    }
                }
                ConllOutcome::Skipped { diagnostics, .. } => {
                    if !quiet {
                        ctx.report_all(&diagnostics);
                    }
                }
            }
        }
    }
    Ok(kept)
}

fn run_split(
    ctx: &mut Ctx,
    input: &Path,
    out_prefix: &Path,
    ratios: Option<&str>,
    manifest: Option<&PathBuf>,
) -> Result<bool, CliError> {
    let spec = match (ratios, manifest) {
        (Some(text), None) => {
            let parts: Vec<f64> = text
                .split(',')
                .map(|p| p.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage(format!("bad --ratios `{text}`")))?;
            let [a, b, c]: [f64; 3] = parts
                .try_into()
                .map_err(|_| CliError::Usage("--ratios needs three numbers".to_string()))?;
            SplitSpec::Ratios([a, b, c])
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
            SplitSpec::Manifest(
                SplitManifest::parse(&text).map_err(|e| CliError::Usage(e.to_string()))?,
            )
        }
        _ => {
            return Err(CliError::Usage(
                "split needs exactly one of --ratios or --manifest".to_string(),
            ))
        }
    };
    // Two streaming passes: count the kept units, then route each one to
    // its split file, so the corpus never needs to fit in memory.
    let total = for_each_kept_block(ctx, input, true, |_| Ok(()))? as usize;
    let assignments =
        split_assignments(total, &spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let extension = input
        .extension()
        .map(|e| format!(".{}", e.to_string_lossy()))
        .unwrap_or_default();
    let mut writers = Vec::new();
    for name in SplitName::ALL {
        let path = PathBuf::from(format!("{}.{}{}", out_prefix.display(), name, extension));
        let file = File::create(&path).map_err(|e| CliError::Io(path.clone(), e))?;
        writers.push((path, BufWriter::new(file)));
    }
    let mut counts = [0u64; 3];
    {
        let mut index = 0usize;
        for_each_kept_block(ctx, input, false, |block| {
            let slot = SplitName::ALL
                .iter()
                .position(|s| *s == assignments[index])
                .unwrap();
            index += 1;
            let (path, writer) = &mut writers[slot];
            writer
                .write_all(block.as_bytes())
                .map_err(|e| CliError::Io(path.clone(), e))?;
            counts[slot] += 1;
            Ok(())
        })?;
    }
    for (path, mut writer) in writers {
        writer.flush().map_err(|e| CliError::Io(path, e))?;
    }
    eprintln!(
        "# train={} dev={} test={} errors={}",
        counts[0], counts[1], counts[2], ctx.errors
    );
    Ok(ctx.errors > 0)
}

fn run_subst(
    ctx: &mut Ctx,
    input: &Path,
    morph: &Path,
    out: Option<&PathBuf>,
) -> Result<bool, CliError> {
    let mut conll = ConllReader::new(open_input(input)?, &ctx.registry, Tagset::Kaist, ctx.mode);
    let mut analyses = MorphReader::new(open_input(morph)?, &ctx.registry, ctx.tagset, ctx.mode);
    let mut writer = open_output(out)?;
    loop {
        let sentence = conll.next();
        let analysis = analyses.next();
        match (sentence, analysis) {
            (None, None) => break,
            (Some(sentence), Some(analysis)) => {
                let sentence = sentence.map_err(io_err(input))?;
                let analysis = analysis.map_err(io_err(morph))?;
                let (tree, ordinal) = match sentence {
                    ConllOutcome::Sentence {
                        tree,
                        warnings,
                        ordinal,
                    } => {
                        ctx.report_all(&warnings);
                        (tree, ordinal)
                    }
                    ConllOutcome::Skipped { diagnostics, .. } => {
                        ctx.report_all(&diagnostics);
                        continue;
                    }
                };
                let eojeols = match analysis {
                    MorphOutcome::Sentence {
                        eojeols, warnings, ..
                    } => {
                        ctx.report_all(&warnings);
                        eojeols
                    }
                    MorphOutcome::Skipped { diagnostics, .. } => {
                        ctx.report_all(&diagnostics);
                        // No usable analysis: pass the sentence through.
                        Vec::new()
                    }
                };
                let (substituted, diagnostics) = if eojeols.is_empty() {
                    (tree, Vec::new())
                } else {
                    substitute_morphology(&tree, &eojeols, &ctx.registry)
                };
                for d in diagnostics {
                    ctx.report(&d.at_ordinal(ordinal));
                }
                match write_conll(&substituted, &ctx.registry, ctx.mode) {
                    Ok(block) => writer.write_all(block.as_bytes()).map_err(io_err(input))?,
                    Err(d) => ctx.report(&d.at_ordinal(ordinal)),
                }
            }
            (extra_sentence, _) => {
                let which = if extra_sentence.is_some() {
                    "more sentences than analyses"
                } else {
                    "more analyses than sentences"
                };
                ctx.report(&Diagnostic::error(
                    "subst-length-mismatch",
                    format!("input files disagree: {which}"),
                ));
                break;
            }
        }
    }
    writer.flush().map_err(io_err(input))?;
    eprintln!("# errors={}", ctx.errors);
    Ok(ctx.errors > 0)
}

fn run_agree(
    ctx: &mut Ctx,
    gold: &Path,
    auto: &Path,
    out: Option<&PathBuf>,
) -> Result<bool, CliError> {
    let mut gold_reader =
        MorphReader::new(open_input(gold)?, &ctx.registry, Tagset::Kaist, ctx.mode);
    let mut auto_reader = MorphReader::new(open_input(auto)?, &ctx.registry, ctx.tagset, ctx.mode);
    let mut report = AgreementReport::default();
    loop {
        match (gold_reader.next(), auto_reader.next()) {
            (None, None) => break,
            (Some(g), Some(a)) => {
                let g = g.map_err(io_err(gold))?;
                let a = a.map_err(io_err(auto))?;
                let gold_sentence = match g {
                    MorphOutcome::Sentence {
                        eojeols, warnings, ..
                    } => {
                        ctx.report_all(&warnings);
                        eojeols
                    }
                    MorphOutcome::Skipped { diagnostics, .. } => {
                        ctx.report_all(&diagnostics);
                        continue;
                    }
                };
                let auto_sentence = match a {
                    MorphOutcome::Sentence {
                        eojeols, warnings, ..
                    } => {
                        ctx.report_all(&warnings);
                        eojeols
                    }
                    MorphOutcome::Skipped { diagnostics, .. } => {
                        ctx.report_all(&diagnostics);
                        continue;
                    }
                };
                report.add_sentence(&gold_sentence, &auto_sentence);
            }
            (g, _) => {
                let which = if g.is_some() {
                    "gold has more sentences than auto"
                } else {
                    "auto has more sentences than gold"
                };
                return Err(CliError::Usage(format!("sentence count mismatch: {which}")));
            }
        }
    }
    let mut writer = open_output(out)?;
    writer
        .write_all(report.to_tsv().as_bytes())
        .map_err(io_err(gold))?;
    writer.flush().map_err(io_err(gold))?;
    Ok(ctx.errors > 0)
}
