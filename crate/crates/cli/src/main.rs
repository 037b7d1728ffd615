//! `subword`: compute subword complexes of finite Coxeter groups and replay
//! their construction by elementary moves.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input/resource error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use subword_core::coxeter::CoxeterSystem;
use subword_core::io::{to_canonical_json, ComplexDoc, ScriptDoc, SpecDoc, WordDoc};
use subword_core::subword::{
    cluster_spec, is_spherical, multicluster_spec, subword_complex, SubwordSpec,
};
use subword_core::transforms::{
    build_pipeline, run_pipeline, verify_nil_theorem, PipelineMode, StepReport,
};
use subword_core::words::{
    all_words, demazure_product, reduced_word, HeckeReduceOptions, Word,
};
use subword_core::Error;

#[derive(Parser)]
#[command(
    name = "subword",
    about = "Subword complexes of finite Coxeter groups and their nil-move transformations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct WordInput {
    /// Coxeter type descriptor, e.g. A2, B3, H3, I2(7)
    #[arg(long)]
    system: Option<String>,
    /// Comma-separated 1-based generator indices, e.g. "1,2,1"; empty for
    /// the empty word
    #[arg(long)]
    word: Option<String>,
    /// Word document {"system":…,"letters":…} (alternative to --system/--word)
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct SpecInput {
    /// Coxeter type descriptor, e.g. A2, B3, H3, I2(7)
    #[arg(long)]
    system: Option<String>,
    /// The word Q, comma-separated
    #[arg(long)]
    word: Option<String>,
    /// The element rho, given as any word for it
    #[arg(long)]
    rho: Option<String>,
    /// Spec document {"system":…,"word":…,"rho_word":…}
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a reduced word of the Demazure product of a word
    Demazure {
        #[command(flatten)]
        input: WordInput,
    },
    /// Build the subword complex of a spec and report its invariants
    Complex {
        #[command(flatten)]
        input: SpecInput,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the doubling theorem, for a single case or an exhaustive sweep
    VerifyNil {
        #[command(flatten)]
        input: SpecInput,
        /// Doubled position (single-case mode)
        #[arg(long)]
        pos: Option<usize>,
        /// Sweep all words up to this length (requires --exhaustive)
        #[arg(long)]
        maxlen: Option<usize>,
        /// Run the exhaustive sweep over all words, elements, positions
        #[arg(long)]
        exhaustive: bool,
        /// Worker threads for the sweep
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Replay the construction of a complex from the reduced word of its
    /// Demazure product
    Pipeline {
        #[command(flatten)]
        input: SpecInput,
        #[arg(long, value_enum, default_value_t = Mode::Verified)]
        mode: Mode,
        /// Write the transform script to this file
        #[arg(long)]
        script_out: Option<PathBuf>,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for braid-search tie-breaking (reproducible scripts)
        #[arg(long)]
        seed: Option<u64>,
        /// Visited-word budget for the braid-class search
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Write catalog entries for the named complex families
    Catalog {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        system: String,
        /// Multiplicity for the multicluster family
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Output directory (default: $SUBWORD_CATALOG_DIR or ./catalog)
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Coxeter-element word (default: 1,2,…,n)
        #[arg(long)]
        coxeter_word: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Verified,
    Fast,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Cluster,
    Multicluster,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn load_word_input(input: &WordInput) -> Result<(CoxeterSystem, Word), Error> {
    if let Some(path) = &input.json {
        let doc: WordDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        return doc.load();
    }
    let system = input
        .system
        .as_deref()
        .ok_or_else(|| Error::Parse("--system is required without --json".into()))?;
    let word = input
        .word
        .as_deref()
        .ok_or_else(|| Error::Parse("--word is required without --json".into()))?;
    let sys = CoxeterSystem::parse(system)?;
    let word = Word::parse(word)?;
    word.validate(&sys)?;
    Ok((sys, word))
}

fn load_spec_input(input: &SpecInput) -> Result<(CoxeterSystem, SubwordSpec), Error> {
    if let Some(path) = &input.json {
        let doc: SpecDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        return doc.load();
    }
    let system = input
        .system
        .as_deref()
        .ok_or_else(|| Error::Parse("--system is required without --json".into()))?;
    let word = input
        .word
        .as_deref()
        .ok_or_else(|| Error::Parse("--word is required without --json".into()))?;
    let rho = input
        .rho
        .as_deref()
        .ok_or_else(|| Error::Parse("--rho is required without --json".into()))?;
    let sys = CoxeterSystem::parse(system)?;
    let spec = SubwordSpec::from_rho_word(&sys, Word::parse(word)?, &Word::parse(rho)?)?;
    Ok((sys, spec))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Error> {
    if let Some(path) = path {
        std::fs::write(path, text)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ComplexReport {
    system: String,
    word: Vec<usize>,
    rho_word: Vec<usize>,
    complex: ComplexDoc,
    f_vector: Vec<u64>,
    facet_count: usize,
    spherical: bool,
    dim: Option<i64>,
}

#[derive(Serialize)]
struct PipelineReport {
    spec: SpecDoc,
    start: SpecDoc,
    step_count: usize,
    steps: Vec<StepReport>,
    ok: bool,
    final_complex: ComplexDoc,
    f_vector: Vec<u64>,
}

#[derive(Serialize)]
struct CatalogEntry {
    system: String,
    word: Vec<usize>,
    rho_word: Vec<usize>,
    f_vector: Vec<u64>,
    spherical: bool,
    facet_count: usize,
    content_hash: String,
}

fn complex_report(sys: &CoxeterSystem, spec: &SubwordSpec) -> Result<ComplexReport, Error> {
    let complex = subword_complex(sys, spec)?;
    Ok(ComplexReport {
        system: sys.descriptor(),
        word: spec.word.letters().to_vec(),
        rho_word: reduced_word(sys, &spec.rho).letters().to_vec(),
        spherical: is_spherical(sys, spec)?,
        f_vector: complex.f_vector().from_dim_zero(),
        facet_count: complex.facet_count(),
        dim: complex.dim(),
        complex: ComplexDoc::new(&complex),
    })
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Demazure { input } => {
            let (sys, word) = load_word_input(&input)?;
            let delta = demazure_product(&sys, &word)?;
            println!("{}", reduced_word(&sys, &delta));
            Ok(ExitCode::SUCCESS)
        }
        Command::Complex { input, out } => {
            let (sys, spec) = load_spec_input(&input)?;
            let report = complex_report(&sys, &spec)?;
            let text = to_canonical_json(&report)?;
            print!("{text}");
            write_out(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyNil {
            input,
            pos,
            maxlen,
            exhaustive,
            jobs,
        } => {
            if exhaustive {
                let system = input
                    .system
                    .as_deref()
                    .ok_or_else(|| Error::Parse("--system is required for a sweep".into()))?;
                let maxlen = maxlen
                    .ok_or_else(|| Error::Parse("--maxlen is required for a sweep".into()))?;
                run_sweep(system, maxlen, jobs)
            } else {
                let (sys, spec) = load_spec_input(&input)?;
                let pos =
                    pos.ok_or_else(|| Error::Parse("--pos is required for a single case".into()))?;
                let report = verify_nil_theorem(&sys, &spec.word, &spec.rho, pos)?;
                let ok = report.ok();
                print!("{}", to_canonical_json(&report)?);
                Ok(if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            }
        }
        Command::Pipeline {
            input,
            mode,
            script_out,
            out,
            seed,
            budget,
        } => {
            let (sys, spec) = load_spec_input(&input)?;
            let opts = HeckeReduceOptions { budget, seed };
            let script = build_pipeline(&sys, &spec.word, &spec.rho, &opts)?;
            let script_doc = ScriptDoc::new(&sys, &script);
            if let Some(path) = &script_out {
                std::fs::write(path, to_canonical_json(&script_doc)?)?;
            }
            let mode = match mode {
                Mode::Verified => PipelineMode::Verified,
                Mode::Fast => PipelineMode::Fast,
            };
            let run = run_pipeline(&sys, &script, mode)?;
            let report = PipelineReport {
                spec: SpecDoc::new(&sys, &spec),
                start: script_doc.start,
                step_count: script.steps.len(),
                steps: run.steps.clone(),
                ok: run.ok,
                f_vector: run.final_complex.f_vector().from_dim_zero(),
                final_complex: ComplexDoc::new(&run.final_complex),
            };
            let text = to_canonical_json(&report)?;
            print!("{text}");
            write_out(out.as_deref(), &text)?;
            Ok(if run.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Catalog {
            family,
            system,
            k,
            dir,
            coxeter_word,
        } => {
            let sys = CoxeterSystem::parse(&system)?;
            let c = match coxeter_word {
                Some(text) => Word::parse(&text)?,
                None => Word::new((1..=sys.rank()).collect::<Vec<_>>()),
            };
            let spec = match family {
                Family::Cluster => cluster_spec(&sys, &c)?,
                Family::Multicluster => multicluster_spec(&sys, &c, k)?,
            };
            let dir = dir
                .or_else(|| std::env::var_os("SUBWORD_CATALOG_DIR").map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("catalog"));
            std::fs::create_dir_all(&dir)?;
            let report = complex_report(&sys, &spec)?;
            let mut entry = CatalogEntry {
                system: report.system,
                word: report.word,
                rho_word: report.rho_word,
                f_vector: report.f_vector,
                spherical: report.spherical,
                facet_count: report.facet_count,
                content_hash: String::new(),
            };
            let hash = Sha256::digest(to_canonical_json(&entry)?.as_bytes());
            entry.content_hash = hex::encode(hash);
            let path = dir.join(format!("{}.json", entry.content_hash));
            std::fs::write(&path, to_canonical_json(&entry)?)?;
            println!("{}", path.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
struct SweepFailure {
    word: String,
    rho_word: String,
    pos: usize,
}

fn run_sweep(system: &str, maxlen: usize, jobs: Option<usize>) -> Result<ExitCode, Error> {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    }
    let sys = CoxeterSystem::parse(system)?;
    let elements = sys.all_elements();
    // Case keys in canonical order: word, then element, then position.
    let mut cases: Vec<(Word, usize, usize)> = Vec::new();
    for word in all_words(sys.rank(), maxlen) {
        for rho_idx in 0..elements.len() {
            for pos in 1..=word.len() {
                cases.push((word.clone(), rho_idx, pos));
            }
        }
    }
    use rayon::prelude::*;
    let results: Vec<Option<SweepFailure>> = cases
        .par_iter()
        .map(|(word, rho_idx, pos)| {
            let rho = &elements[*rho_idx];
            let report = verify_nil_theorem(&sys, word, rho, *pos).expect("in-range case");
            if report.ok() {
                None
            } else {
                Some(SweepFailure {
                    word: word.to_string(),
                    rho_word: reduced_word(&sys, rho).to_string(),
                    pos: *pos,
                })
            }
        })
        .collect();
    let failures: Vec<&SweepFailure> = results.iter().flatten().collect();
    let total = cases.len();
    for f in &failures {
        println!(
            "FAIL word={} rho={} pos={}",
            f.word, f.rho_word, f.pos
        );
    }
    println!(
        "verify-nil sweep {system} maxlen={maxlen}: {}/{} cases pass",
        total - failures.len(),
        total
    );
    Ok(if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
