//! Open-set language identification.
//!
//! A model is trained from a monolingual corpus alone and answers one
//! question about arbitrary Unicode text: is this the training language,
//! or something else? There is no closed set of alternatives; text from
//! any script the model has never seen still gets a well-defined answer,
//! which is almost always "something else".
//!
//! The pipeline is: NFC normalization, overlapping character n-grams,
//! signed feature hashing into a fixed-dimension space, and a linear
//! one-class SVM whose decision value is positive inside the language.
//!
//! ```
//! use olid::{train_sentences, normalize, Label, TrainConfig};
//!
//! let corpus: Vec<_> = [
//!     "the cat sat on the mat",
//!     "a dog barked at the gate",
//!     "rain fell on the quiet street",
//!     "the kettle whistled in the kitchen",
//! ]
//! .iter()
//! .map(|s| normalize(s))
//! .collect();
//!
//! let cfg = TrainConfig { nu: 0.5, ..TrainConfig::default() };
//! let model = train_sentences(&corpus, &cfg).unwrap();
//! assert_eq!(model.predict("волна на берегу").label, Label::Outlier);
//! ```

pub mod corpus;
pub mod error;
pub mod eval;
pub mod features;
pub mod model_file;
pub mod svm;
pub mod text;

pub use corpus::{load_corpus, split, Corpus};
pub use error::Error;
pub use eval::{machine_report, prf1, render_table, run_protocol, ConfusionCounts, EvalReport};
pub use features::{featurize, murmur3_32, vectorize, HashConfig, SparseVector};
pub use model_file::{load_model, save_model};
pub use svm::{solve_dual, train, train_sentences, Label, OneClassModel, Prediction, TrainConfig};
pub use text::{extract_ngrams, normalize, normalize_bytes, NGramCounts, Sentence};
