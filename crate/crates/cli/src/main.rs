//! `olid`: train, apply and evaluate open-set language identifiers.
//!
//! Exit codes: 0 on success, 2 for usage and input problems (missing or
//! malformed files, bad flag values), 1 for runtime failures such as an
//! unwritable output path.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use olid::error::Error;
use olid::{
    load_corpus, load_model, machine_report, normalize_bytes, render_table, run_protocol,
    save_model, train_sentences, Corpus, HashConfig, TrainConfig,
};

#[derive(Parser)]
#[command(name = "olid", version, about = "Open-set language identification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelParams {
    /// Character n-gram order
    #[arg(long, default_value_t = 4, value_parser = parse_ngram)]
    ngram: usize,

    /// Feature space size as a power of two
    #[arg(long, default_value_t = 18, value_parser = parse_hash_bits)]
    hash_bits: u32,

    /// Upper bound on the training-outlier fraction
    #[arg(long, default_value_t = 0.05, value_parser = parse_nu)]
    nu: f64,

    /// Solver convergence tolerance
    #[arg(long, default_value_t = 1e-4, value_parser = parse_tol)]
    tol: f64,
}

impl ModelParams {
    fn to_config(&self, hash_seed: u32) -> TrainConfig {
        TrainConfig {
            nu: self.nu,
            tol: self.tol,
            ngram_order: self.ngram,
            hash: HashConfig { hash_bits: self.hash_bits, seed: hash_seed },
            ..TrainConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Train a one-class model from a line-per-sentence corpus
    Train {
        /// Corpus file, UTF-8, one sentence per line
        #[arg(long)]
        input: PathBuf,

        /// Where to write the model
        #[arg(long)]
        model: PathBuf,

        /// Feature hash seed, stored in the model
        #[arg(long, default_value_t = 0)]
        seed: u32,

        #[command(flatten)]
        params: ModelParams,
    },

    /// Classify lines from a file or standard input
    Predict {
        /// Trained model file
        #[arg(long)]
        model: PathBuf,

        /// Input file; omit to read standard input
        #[arg(long)]
        input: Option<PathBuf>,
    },

    /// Train and test one model per corpus in a directory
    Eval {
        /// Directory of per-language corpora, one `<tag>.txt` each
        #[arg(long)]
        corpus_dir: PathBuf,

        /// Where to write the machine-readable report
        #[arg(long)]
        out: PathBuf,

        /// Training fraction of each corpus
        #[arg(long, default_value_t = 0.9, value_parser = parse_fraction)]
        split: f64,

        /// Split seed, recorded in the report
        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[command(flatten)]
        params: ModelParams,
    },
}

fn parse_ngram(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|e| format!("{e}"))?;
    if v == 0 {
        return Err("n-gram order must be at least 1".into());
    }
    Ok(v)
}

fn parse_hash_bits(s: &str) -> Result<u32, String> {
    let v: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if !(8..=31).contains(&v) {
        return Err("hash bits must be in 8..=31".into());
    }
    Ok(v)
}

fn parse_nu(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(v > 0.0 && v <= 1.0) {
        return Err("nu must be in (0, 1]".into());
    }
    Ok(v)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(v > 0.0 && v.is_finite()) {
        return Err("tol must be a positive number".into());
    }
    Ok(v)
}

fn parse_fraction(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(v > 0.0 && v < 1.0) {
        return Err("split fraction must be strictly between 0 and 1".into());
    }
    Ok(v)
}

/// A failure plus the exit code it deserves.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { message: message.into(), code: 2 }
    }

    fn runtime(message: impl Into<String>) -> Self {
        Failure { message: message.into(), code: 1 }
    }
}

/// Errors raised while reading what the user handed us are usage-class;
/// everything after that is a runtime failure.
fn input_error(context: &str, err: &Error) -> Failure {
    Failure::input(format!("{context}: {err}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("olid: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Train { input, model, seed, params } => cmd_train(&input, &model, seed, &params),
        Command::Predict { model, input } => cmd_predict(&model, input.as_deref()),
        Command::Eval { corpus_dir, out, split, seed, params } => {
            cmd_eval(&corpus_dir, &out, split, seed, &params)
        }
    }
}

fn cmd_train(input: &Path, model_path: &Path, seed: u32, params: &ModelParams) -> Result<(), Failure> {
    let corpus = load_corpus(input)
        .map_err(|e| input_error(&format!("cannot read corpus {}", input.display()), &e))?;
    let cfg = params.to_config(seed);
    let model = train_sentences(&corpus.sentences, &cfg)
        .map_err(|e| input_error(&format!("cannot train on {}", input.display()), &e))?;

    save_model(&model, model_path)
        .map_err(|e| Failure::runtime(format!("cannot write {}: {e}", model_path.display())))?;

    let vectors: Vec<_> = corpus
        .sentences
        .iter()
        .map(|s| olid::featurize(s, cfg.ngram_order, &cfg.hash))
        .collect();
    let outliers = model
        .training_outlier_fraction(&vectors)
        .map_err(|e| Failure::runtime(format!("scoring training set: {e}")))?;
    println!(
        "n_train={} sv_count={} converged={} outlier_fraction={:.6}",
        model.n_train, model.sv_count, model.converged, outliers
    );
    Ok(())
}

fn cmd_predict(model_path: &Path, input: Option<&Path>) -> Result<(), Failure> {
    let model = load_model(model_path)
        .map_err(|e| input_error(&format!("cannot load model {}", model_path.display()), &e))?;

    let stdin = std::io::stdin();
    let mut reader: Box<dyn BufRead> = match input {
        Some(path) => {
            let file = fs::File::open(path)
                .map_err(|e| Failure::input(format!("cannot open {}: {e}", path.display())))?;
            Box::new(BufReader::new(file))
        }
        None => Box::new(stdin.lock()),
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut buf = Vec::new();
    let mut line_no = 0usize;
    loop {
        buf.clear();
        let n = reader
            .read_until(b'\n', &mut buf)
            .map_err(|e| Failure::runtime(format!("reading input: {e}")))?;
        if n == 0 {
            break;
        }
        line_no += 1;
        if buf.last() == Some(&b'\n') {
            buf.pop();
        }
        if buf.last() == Some(&b'\r') {
            buf.pop();
        }
        let sentence = normalize_bytes(&buf)
            .map_err(|_| Failure::input(format!("invalid UTF-8 on line {line_no}")))?;
        if sentence.is_empty() {
            continue;
        }
        let p = model.predict_sentence(&sentence);
        writeln!(out, "{}\t{:.6}\t{}", p.label, p.score, sentence)
            .map_err(|e| Failure::runtime(format!("writing output: {e}")))?;
    }
    Ok(())
}

fn cmd_eval(
    corpus_dir: &Path,
    out_path: &Path,
    split: f64,
    seed: u64,
    params: &ModelParams,
) -> Result<(), Failure> {
    let mut paths: Vec<PathBuf> = fs::read_dir(corpus_dir)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", corpus_dir.display())))?
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", corpus_dir.display())))?
        .into_iter()
        .map(|entry| entry.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "txt"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Failure::input(format!(
            "no .txt corpora in {}",
            corpus_dir.display()
        )));
    }

    let corpora: Vec<Corpus> = paths
        .iter()
        .map(|p| load_corpus(p).map_err(|e| input_error(&format!("corpus {}", p.display()), &e)))
        .collect::<Result<_, _>>()?;

    let cfg = params.to_config(HashConfig::default().seed);
    let report = run_protocol(&corpora, &cfg, split, seed)
        .map_err(|e| input_error("evaluation", &e))?;

    let table = render_table(&report).map_err(|e| Failure::runtime(format!("rendering: {e}")))?;
    print!("{table}");
    let machine = machine_report(&report)
        .map_err(|e| Failure::runtime(format!("rendering: {e}")))?;
    fs::write(out_path, machine)
        .map_err(|e| Failure::runtime(format!("cannot write {}: {e}", out_path.display())))?;
    Ok(())
}
