//! Normalization and character n-gram extraction.
//!
//! Every string entering the system passes through [`normalize`] first, so
//! canonically equivalent inputs (precomposed "Ö" vs "O" + combining
//! diaeresis) become byte-identical before any feature is computed.

use std::collections::HashMap;

use icu_normalizer::ComposingNormalizerBorrowed;

use crate::error::Error;

/// A normalized text unit: NFC, single interior spaces, no surrounding
/// whitespace. Only [`normalize`] and [`normalize_bytes`] construct these.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sentence(String);

impl Sentence {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length in code points, the unit n-gram windows slide over.
    pub fn char_len(&self) -> usize {
        self.0.chars().count()
    }
}

impl std::fmt::Display for Sentence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Compose to NFC, collapse whitespace runs to a single ASCII space, trim.
/// Case is left alone: casing carries language signal.
pub fn normalize(raw: &str) -> Sentence {
    let composed = ComposingNormalizerBorrowed::new_nfc().normalize(raw);
    let mut out = String::with_capacity(composed.len());
    let mut in_ws = true; // swallows leading whitespace
    for ch in composed.chars() {
        if ch.is_whitespace() {
            in_ws = true;
        } else {
            if in_ws && !out.is_empty() {
                out.push(' ');
            }
            in_ws = false;
            out.push(ch);
        }
    }
    Sentence(out)
}

/// [`normalize`] for raw bytes; invalid UTF-8 is an error, never replaced.
pub fn normalize_bytes(raw: &[u8]) -> Result<Sentence, Error> {
    let s = std::str::from_utf8(raw).map_err(|_| Error::InvalidEncoding { line: None })?;
    Ok(normalize(s))
}

/// Multiset of character n-grams. Keys are windows of exactly `n` code
/// points, except for a sentence shorter than `n`, which contributes its
/// whole text as the single key (see [`extract_ngrams`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NGramCounts {
    pub entries: HashMap<String, u32>,
    pub n: usize,
}

impl NGramCounts {
    pub fn total(&self) -> u64 {
        self.entries.values().map(|&c| u64::from(c)).sum()
    }
}

/// Overlapping windows of `n` code points, no padding, spaces and
/// punctuation included. A nonempty sentence shorter than `n` yields its
/// entire text as one feature so that short inputs stay vectorizable; an
/// empty sentence yields no features at all.
pub fn extract_ngrams(s: &Sentence, n: usize) -> NGramCounts {
    assert!(n >= 1, "n-gram order must be at least 1");
    let mut entries = HashMap::new();
    let text = s.as_str();
    let starts: Vec<usize> = text.char_indices().map(|(i, _)| i).collect();
    if starts.is_empty() {
        return NGramCounts { entries, n };
    }
    if starts.len() < n {
        entries.insert(text.to_owned(), 1);
        return NGramCounts { entries, n };
    }
    for w in 0..=starts.len() - n {
        let begin = starts[w];
        let end = if w + n < starts.len() { starts[w + n] } else { text.len() };
        *entries.entry(text[begin..end].to_owned()).or_insert(0) += 1;
    }
    NGramCounts { entries, n }
}
