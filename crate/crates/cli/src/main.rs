use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serrant::pipeline::Inputs;
use serrant::{
    classify_corpus_parallel, emit_m2, emit_report, parse_m2, type_distribution, Arrow,
    Granularity, M2Record, PipelineConfig, ReportFormat, Wordlist,
};

/// Grammatical error classification with UD-informed types.
#[derive(Parser)]
#[command(name = "serrant", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract and type edits from parallel original/corrected text.
    Classify(ClassifyArgs),
    /// Re-type the edits of an existing M2 file.
    Retype(RetypeArgs),
    /// Type distribution of an M2 file.
    Stats(StatsArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Original sentences, one tokenised sentence per line.
    #[arg(long)]
    orig: PathBuf,
    /// Corrected sentences, line-aligned with --orig.
    #[arg(long)]
    cor: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct RetypeArgs {
    #[arg(long)]
    m2: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    m2: PathBuf,
    /// Count only this annotator's edits.
    #[arg(long)]
    annotator: Option<u32>,
    #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
    report_format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CommonArgs {
    /// CoNLL-U annotation of the original sentences.
    #[arg(long)]
    conllu_orig: Option<PathBuf>,
    /// CoNLL-U annotation of the corrected sentences.
    #[arg(long)]
    conllu_cor: Option<PathBuf>,
    /// Word list used for spelling detection, one word per line.
    #[arg(long, env = "SERRANT_WORDLIST")]
    wordlist: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GranularityArg::Upos)]
    granularity: GranularityArg,
    #[arg(long, value_enum, default_value_t = ArrowArg::Ascii)]
    arrow: ArrowArg,
    /// Annotator id for extracted edits.
    #[arg(long, default_value_t = 0)]
    annotator: u32,
    /// Write the typed M2 here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a type distribution to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
    report_format: FormatArg,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum GranularityArg {
    Upos,
    UposFeats,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArrowArg {
    Ascii,
    Unicode,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Tsv => ReportFormat::Tsv,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

enum Failure {
    Input(anyhow::Error),
    Config(anyhow::Error),
}

impl From<serrant::Error> for Failure {
    fn from(e: serrant::Error) -> Self {
        if e.is_config() {
            Failure::Config(e.into())
        } else {
            Failure::Input(e.into())
        }
    }
}

fn input(e: anyhow::Error) -> Failure {
    Failure::Input(e)
}

fn config_err(e: anyhow::Error) -> Failure {
    Failure::Config(e)
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .context("cannot write to stdout"),
    }
}

fn pipeline_config(args: &CommonArgs) -> Result<PipelineConfig, Failure> {
    if args.jobs == 0 {
        return Err(config_err(anyhow!("--jobs must be at least 1")));
    }
    let path = args.wordlist.as_ref().ok_or_else(|| {
        config_err(anyhow!(
            "no word list: pass --wordlist or set SERRANT_WORDLIST"
        ))
    })?;
    let wordlist = read(path)
        .and_then(|text| {
            Wordlist::parse(&text).with_context(|| format!("bad word list {}", path.display()))
        })
        .map_err(config_err)?;
    Ok(PipelineConfig {
        granularity: match args.granularity {
            GranularityArg::Upos => Granularity::Upos,
            GranularityArg::UposFeats => Granularity::UposFeats,
        },
        arrow: match args.arrow {
            ArrowArg::Ascii => Arrow::Ascii,
            ArrowArg::Unicode => Arrow::Unicode,
        },
        annotator_id: args.annotator,
        wordlist: Some(wordlist),
        ..PipelineConfig::default()
    })
}

fn with_annotations(inputs: Inputs, args: &CommonArgs) -> Result<Inputs, Failure> {
    let orig = args
        .conllu_orig
        .as_deref()
        .map(read)
        .transpose()
        .map_err(input)?;
    let cor = args
        .conllu_cor
        .as_deref()
        .map(read)
        .transpose()
        .map_err(input)?;
    Ok(inputs.with_conllu(orig.as_deref(), cor.as_deref())?)
}

fn finish(records: &[M2Record], args: &CommonArgs) -> Result<(), Failure> {
    let text = emit_m2(records)?;
    write_output(args.out.as_deref(), &text).map_err(input)?;
    if let Some(path) = &args.report {
        let report = emit_report(&type_distribution(records, None), args.report_format.into());
        write_output(Some(path), &report).map_err(input)?;
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify(a) => {
            let config = pipeline_config(&a.common)?;
            let orig = read(&a.orig).map_err(input)?;
            let cor = read(&a.cor).map_err(input)?;
            let inputs = with_annotations(Inputs::parallel_text(&orig, &cor)?, &a.common)?;
            let records = classify_corpus_parallel(&config, &inputs, a.common.jobs)?;
            finish(&records, &a.common)
        }
        Command::Retype(a) => {
            let config = pipeline_config(&a.common)?;
            let m2 = read(&a.m2).map_err(input)?;
            let inputs = with_annotations(Inputs::m2_text(&m2)?, &a.common)?;
            let records = classify_corpus_parallel(&config, &inputs, a.common.jobs)?;
            finish(&records, &a.common)
        }
        Command::Stats(a) => {
            let records = parse_m2(&read(&a.m2).map_err(input)?)?;
            let report = emit_report(
                &type_distribution(&records, a.annotator),
                a.report_format.into(),
            );
            write_output(a.out.as_deref(), &report).map_err(input)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Config(e)) => {
            eprintln!("configuration error: {e:#}");
            ExitCode::from(2)
        }
    }
}
