//! Corpus files: UTF-8 text, one sentence per line, blank lines skipped.
//! Sentences are normalized at load time so nothing downstream sees raw
//! text, and splitting is seeded so experiments can be replayed.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::text::{normalize_bytes, Sentence};

#[derive(Debug, Clone)]
pub struct Corpus {
    pub language_tag: String,
    pub sentences: Vec<Sentence>,
}

/// Reads one corpus; the file stem becomes the language tag. Lines that
/// normalize to nothing are dropped, and encoding errors name the line.
pub fn load_corpus(path: &Path) -> Result<Corpus, Error> {
    let language_tag = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .filter(|s| !s.is_empty())
        .ok_or_else(|| {
            Error::InvalidParameter(format!("cannot derive a language tag from {}", path.display()))
        })?;

    let mut reader = BufReader::new(File::open(path)?);
    let mut sentences = Vec::new();
    let mut buf = Vec::new();
    let mut line_no = 0usize;
    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
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
            .map_err(|_| Error::InvalidEncoding { line: Some(line_no) })?;
        if !sentence.is_empty() {
            sentences.push(sentence);
        }
    }
    Ok(Corpus { language_tag, sentences })
}

/// Seeded-shuffle split of `0..n` into train and test index sets, both
/// returned sorted. The test side takes floor(n * (1 - fraction)), never
/// fewer than one element on either side.
pub fn split_indices(
    n: usize,
    fraction: f64,
    seed: u64,
) -> Result<(Vec<usize>, Vec<usize>), Error> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "split fraction must be in (0, 1), got {fraction}"
        )));
    }
    if n < 2 {
        return Err(Error::InsufficientData(format!(
            "cannot split {n} sentence(s) into train and test"
        )));
    }
    // the epsilon keeps exact products like 100 * 0.1 from flooring down
    let n_test = ((n as f64 * (1.0 - fraction)) + 1e-9).floor() as usize;
    let n_test = n_test.clamp(1, n - 1);

    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let mut test: Vec<usize> = order[..n_test].to_vec();
    let mut train: Vec<usize> = order[n_test..].to_vec();
    train.sort_unstable();
    test.sort_unstable();
    Ok((train, test))
}

/// [`split_indices`] mapped back onto the corpus sentences.
pub fn split(c: &Corpus, fraction: f64, seed: u64) -> Result<(Vec<Sentence>, Vec<Sentence>), Error> {
    let (train_idx, test_idx) = split_indices(c.sentences.len(), fraction, seed)?;
    let pick = |idx: &[usize]| idx.iter().map(|&i| c.sentences[i].clone()).collect();
    Ok((pick(&train_idx), pick(&test_idx)))
}
