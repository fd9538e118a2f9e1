//! Open-set evaluation: one model per language, tested on its own held-out
//! sentences as positives and every other language's full corpus as
//! negatives. Metrics are precision, recall and F1 per language plus
//! unweighted macro averages. Accuracy is deliberately not computed: with
//! negatives outnumbering positives ninety to one it says nothing.

use rayon::prelude::*;

use crate::corpus::{split_indices, Corpus};
use crate::error::Error;
use crate::features::{featurize, murmur3_32, SparseVector};
use crate::svm::{train, TrainConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConfusionCounts {
    pub true_positives: u64,
    pub false_positives: u64,
    pub true_negatives: u64,
    pub false_negatives: u64,
}

impl ConfusionCounts {
    pub fn total(&self) -> u64 {
        self.true_positives + self.false_positives + self.true_negatives + self.false_negatives
    }
}

/// Precision, recall, F1 with the 0/0 = 0 convention.
pub fn prf1(c: &ConfusionCounts) -> (f64, f64, f64) {
    let ratio = |num: u64, den: u64| if den == 0 { 0.0 } else { num as f64 / den as f64 };
    let p = ratio(c.true_positives, c.true_positives + c.false_positives);
    let r = ratio(c.true_positives, c.true_positives + c.false_negatives);
    let f1 = if p + r == 0.0 { 0.0 } else { 2.0 * p * r / (p + r) };
    (p, r, f1)
}

/// Five-number-free summary of one side's decision scores; enough to see
/// how far apart the accepted and rejected populations sit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub count: u64,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

impl SummaryStats {
    fn from_scores(scores: &[f64]) -> Self {
        if scores.is_empty() {
            return SummaryStats { count: 0, mean: 0.0, min: 0.0, max: 0.0 };
        }
        let sum: f64 = scores.iter().sum();
        SummaryStats {
            count: scores.len() as u64,
            mean: sum / scores.len() as f64,
            min: scores.iter().copied().fold(f64::INFINITY, f64::min),
            max: scores.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

/// Decision-score distributions for one language's test run, split by
/// ground truth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreStats {
    pub positives: SummaryStats,
    pub negatives: SummaryStats,
}

#[derive(Debug, Clone)]
pub struct LanguageEval {
    pub tag: String,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub counts: ConfusionCounts,
    pub scores: ScoreStats,
}

#[derive(Debug, Clone)]
pub struct EvalReport {
    /// Sorted by language tag.
    pub languages: Vec<LanguageEval>,
    pub macro_precision: f64,
    pub macro_recall: f64,
    pub macro_f1: f64,
    pub split_seed: u64,
    pub split_fraction: f64,
}

/// Runs the full protocol. Corpora are processed in tag order whatever
/// order they arrive in, each split with a seed derived from `split_seed`
/// and the tag, so the report is reproducible end to end.
pub fn run_protocol(
    corpora: &[Corpus],
    cfg: &TrainConfig,
    split_fraction: f64,
    split_seed: u64,
) -> Result<EvalReport, Error> {
    cfg.validate()?;
    if corpora.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "evaluation needs at least 2 languages, got {}",
            corpora.len()
        )));
    }
    let mut sorted: Vec<&Corpus> = corpora.iter().collect();
    sorted.sort_by(|a, b| a.language_tag.cmp(&b.language_tag));
    for pair in sorted.windows(2) {
        if pair[0].language_tag == pair[1].language_tag {
            return Err(Error::InvalidParameter(format!(
                "duplicate language tag {}",
                pair[0].language_tag
            )));
        }
    }
    for c in &sorted {
        if c.sentences.len() < 10 {
            return Err(Error::InsufficientData(format!(
                "corpus {} has {} sentences, need at least 10",
                c.language_tag,
                c.sentences.len()
            )));
        }
    }

    // featurization depends only on cfg, so every sentence is vectorized
    // once and shared between its roles as positive and negative
    let vectors: Vec<Vec<SparseVector>> = sorted
        .par_iter()
        .map(|c| {
            c.sentences
                .iter()
                .map(|s| featurize(s, cfg.ngram_order, &cfg.hash))
                .collect()
        })
        .collect();

    let languages: Vec<LanguageEval> = (0..sorted.len())
        .into_par_iter()
        .map(|li| evaluate_language(li, &sorted, &vectors, cfg, split_fraction, split_seed))
        .collect::<Result<_, _>>()?;

    let k = languages.len() as f64;
    let report = EvalReport {
        macro_precision: languages.iter().map(|l| l.precision).sum::<f64>() / k,
        macro_recall: languages.iter().map(|l| l.recall).sum::<f64>() / k,
        macro_f1: languages.iter().map(|l| l.f1).sum::<f64>() / k,
        languages,
        split_seed,
        split_fraction,
    };
    Ok(report)
}

fn evaluate_language(
    li: usize,
    sorted: &[&Corpus],
    vectors: &[Vec<SparseVector>],
    cfg: &TrainConfig,
    split_fraction: f64,
    split_seed: u64,
) -> Result<LanguageEval, Error> {
    let tag = &sorted[li].language_tag;
    // tag-derived stream: stable under reordering or adding languages
    let seed = split_seed.wrapping_add(u64::from(murmur3_32(tag.as_bytes(), 0) as u32));
    let (train_idx, test_idx) = split_indices(vectors[li].len(), split_fraction, seed)?;

    let train_set: Vec<SparseVector> =
        train_idx.iter().map(|&i| vectors[li][i].clone()).collect();
    let model = train(&train_set, cfg)?;

    let mut counts = ConfusionCounts::default();
    let mut positive_scores = Vec::with_capacity(test_idx.len());
    let mut negative_scores = Vec::new();

    for &i in &test_idx {
        let score = model.decision(&vectors[li][i])?;
        positive_scores.push(score);
        if score > 0.0 {
            counts.true_positives += 1;
        } else {
            counts.false_negatives += 1;
        }
    }
    for (other, other_vectors) in vectors.iter().enumerate() {
        if other == li {
            continue;
        }
        for v in other_vectors {
            let score = model.decision(v)?;
            negative_scores.push(score);
            if score > 0.0 {
                counts.false_positives += 1;
            } else {
                counts.true_negatives += 1;
            }
        }
    }

    let expected_tests = test_idx.len()
        + (0..sorted.len()).filter(|&o| o != li).map(|o| vectors[o].len()).sum::<usize>();
    debug_assert_eq!(counts.total() as usize, expected_tests);

    let (precision, recall, f1) = prf1(&counts);
    Ok(LanguageEval {
        tag: tag.clone(),
        precision,
        recall,
        f1,
        counts,
        scores: ScoreStats {
            positives: SummaryStats::from_scores(&positive_scores),
            negatives: SummaryStats::from_scores(&negative_scores),
        },
    })
}

/// Fixed-width table: one row per language, then the macro average.
pub fn render_table(report: &EvalReport) -> Result<String, Error> {
    if report.languages.is_empty() {
        return Err(Error::InsufficientData("report covers no languages".into()));
    }
    let width = report
        .languages
        .iter()
        .map(|l| l.tag.chars().count())
        .max()
        .unwrap_or(0)
        .max("Language".len());
    let mut out = String::new();
    out.push_str(&format!("{:<width$} {:>6} {:>6} {:>6}\n", "Language", "P", "R", "F1"));
    for l in &report.languages {
        out.push_str(&format!(
            "{:<width$} {:>6.3} {:>6.3} {:>6.3}\n",
            l.tag, l.precision, l.recall, l.f1
        ));
    }
    out.push_str(&format!(
        "{:<width$} {:>6.3} {:>6.3} {:>6.3}\n",
        "Average", report.macro_precision, report.macro_recall, report.macro_f1
    ));
    Ok(out)
}

/// Flat key/value lines for downstream tooling; identical runs produce
/// identical bytes.
pub fn machine_report(report: &EvalReport) -> Result<String, Error> {
    if report.languages.is_empty() {
        return Err(Error::InsufficientData("report covers no languages".into()));
    }
    let mut out = String::new();
    out.push_str(&format!("seed={}\n", report.split_seed));
    out.push_str(&format!("split={:.6}\n", report.split_fraction));
    for l in &report.languages {
        out.push_str(&format!(
            "lang={} p={:.6} r={:.6} f1={:.6} tp={} fp={} tn={} fn={}\n",
            l.tag,
            l.precision,
            l.recall,
            l.f1,
            l.counts.true_positives,
            l.counts.false_positives,
            l.counts.true_negatives,
            l.counts.false_negatives,
        ));
    }
    out.push_str(&format!(
        "macro p={:.6} r={:.6} f1={:.6}\n",
        report.macro_precision, report.macro_recall, report.macro_f1
    ));
    Ok(out)
}
