//! Linear one-class SVM: separate the training mass from the origin with
//! maximum margin. Training solves the dual
//!
//!   minimize   1/2 sum_ij a_i a_j (x_i . x_j)
//!   subject to 0 <= a_i <= 1/(nu*n),  sum a_i = 1
//!
//! by pairwise coordinate descent on the maximally violating pair. With a
//! linear kernel the weight vector w = sum a_i x_i is materialized densely,
//! so scoring a sentence costs one sparse-dense dot product.

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::error::Error;
use crate::features::{featurize, HashConfig, SparseVector};
use crate::text::{normalize, Sentence};

/// Training parameters. `nu` upper-bounds the training-outlier fraction and
/// lower-bounds the support-vector fraction. `max_passes` caps the solver at
/// `max_passes * n` pairwise updates (one pass is n updates).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainConfig {
    pub nu: f64,
    pub tol: f64,
    pub max_passes: u64,
    pub ngram_order: usize,
    pub hash: HashConfig,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            nu: 0.05,
            tol: 1e-4,
            max_passes: 10_000,
            ngram_order: 4,
            hash: HashConfig::default(),
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.nu > 0.0 && self.nu <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "nu must be in (0, 1], got {}",
                self.nu
            )));
        }
        // NaN must fail too, hence not `tol <= 0.0`
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if self.max_passes == 0 {
            return Err(Error::InvalidParameter("max_passes must be positive".into()));
        }
        if self.ngram_order == 0 {
            return Err(Error::InvalidParameter("ngram_order must be positive".into()));
        }
        self.hash.validate()
    }
}

/// Solver output: the dual point and everything derived from it.
/// `scores[i]` is w.x_i, kept current throughout optimization.
#[derive(Debug, Clone)]
pub struct DualState {
    pub alpha: Vec<f64>,
    pub scores: Vec<f64>,
    pub rho: f64,
    pub objective: f64,
    pub converged: bool,
    pub updates: u64,
}

/// Kernel columns on demand with FIFO eviction. Column i holds x_i . x_k
/// for all k; recomputing one costs n sparse dots.
struct ColumnCache<'a> {
    points: &'a [SparseVector],
    columns: HashMap<usize, Vec<f64>>,
    order: VecDeque<usize>,
    capacity: usize,
}

impl<'a> ColumnCache<'a> {
    fn new(points: &'a [SparseVector]) -> Self {
        // ~64 MB ceiling regardless of n
        let capacity = (64 << 20) / (points.len().max(1) * 8);
        ColumnCache {
            points,
            columns: HashMap::new(),
            order: VecDeque::new(),
            capacity: capacity.clamp(2, points.len().max(2)),
        }
    }

    fn column(&mut self, i: usize) -> &[f64] {
        if !self.columns.contains_key(&i) {
            if self.columns.len() >= self.capacity {
                if let Some(old) = self.order.pop_front() {
                    self.columns.remove(&old);
                }
            }
            let xi = &self.points[i];
            let col: Vec<f64> = self.points.iter().map(|xk| xi.dot(xk)).collect();
            self.columns.insert(i, col);
            self.order.push_back(i);
        }
        &self.columns[&i]
    }
}

/// Maximal-violating-pair coordinate descent from the uniform start
/// alpha_i = 1/n. Each update moves mass from the highest-score support
/// vector to the lowest-score point with headroom, which is the steepest
/// feasible direction. Ties select the lowest index, so runs are
/// deterministic. Panics if points is empty or dimensions disagree.
pub fn solve_dual(points: &[SparseVector], nu: f64, tol: f64, max_updates: u64) -> DualState {
    let n = points.len();
    assert!(n >= 1, "cannot solve an empty problem");
    assert!(nu > 0.0 && nu <= 1.0 && tol > 0.0);
    let dim = points[0].dim();
    assert!(points.iter().all(|p| p.dim() == dim));

    let c = 1.0 / (nu * n as f64);
    let mut alpha = vec![1.0 / n as f64; n];

    // initial scores via the primal trick: w0 = (1/n) sum x_j, score_i = w0.x_i
    let mut w0 = vec![0.0; dim];
    for p in points {
        p.add_scaled_into(1.0 / n as f64, &mut w0);
    }
    let mut scores: Vec<f64> = points.iter().map(|p| p.dot_dense(&w0)).collect();
    drop(w0);

    let mut cache = ColumnCache::new(points);
    let mut ki_buf = vec![0.0; n];
    let mut updates = 0u64;
    let mut converged = false;
    #[cfg(debug_assertions)]
    let mut prev_objective = f64::INFINITY;

    while updates < max_updates {
        // up: tightest candidate to receive mass; down: to give it up
        let mut up: Option<usize> = None;
        let mut down: Option<usize> = None;
        for k in 0..n {
            if alpha[k] < c && up.is_none_or(|u| scores[k] < scores[u]) {
                up = Some(k);
            }
            if alpha[k] > 0.0 && down.is_none_or(|d| scores[k] > scores[d]) {
                down = Some(k);
            }
        }
        let (Some(i), Some(j)) = (up, down) else {
            converged = true; // fully pinned, e.g. nu = 1
            break;
        };
        let violation = scores[j] - scores[i];
        if violation <= tol {
            converged = true;
            break;
        }

        ki_buf.copy_from_slice(cache.column(i));
        let kj = cache.column(j);
        let eta = ki_buf[i] + kj[j] - 2.0 * ki_buf[j];
        let room = (c - alpha[i]).min(alpha[j]);
        let step = if eta > f64::MIN_POSITIVE {
            (violation / eta).min(room)
        } else {
            room // non-positive curvature: the objective falls all the way
        };

        // snap exactly onto bounds so the selection predicates stay crisp
        if step >= c - alpha[i] {
            alpha[i] = c;
        } else {
            alpha[i] += step;
        }
        if step >= alpha[j] {
            alpha[j] = 0.0;
        } else {
            alpha[j] -= step;
        }

        for k in 0..n {
            scores[k] += step * (ki_buf[k] - kj[k]);
        }
        updates += 1;

        #[cfg(debug_assertions)]
        {
            let sum: f64 = alpha.iter().sum();
            debug_assert!((sum - 1.0).abs() <= 1e-9, "simplex drift: {sum}");
            debug_assert!(
                alpha.iter().all(|&a| (-1e-12..=c + 1e-12).contains(&a)),
                "box violation"
            );
            let objective = 0.5 * alpha.iter().zip(&scores).map(|(a, s)| a * s).sum::<f64>();
            debug_assert!(
                objective <= prev_objective + 1e-9,
                "objective rose: {prev_objective} -> {objective}"
            );
            prev_objective = objective;
        }
    }

    let rho = recover_rho(&alpha, &scores, c);
    let objective = 0.5 * alpha.iter().zip(&scores).map(|(a, s)| a * s).sum::<f64>();
    DualState { alpha, scores, rho, objective, converged, updates }
}

/// rho is the score shared by margin support vectors. Without any strictly
/// interior alpha, every score at C sits below rho and every score at zero
/// above it, so the midpoint of that interval is used; if one side is empty
/// the other bound stands alone.
fn recover_rho(alpha: &[f64], scores: &[f64], c: f64) -> f64 {
    let mut margin_sum = 0.0;
    let mut margin_count = 0usize;
    let mut lower = f64::NEG_INFINITY; // max score among alpha = C
    let mut upper = f64::INFINITY; // min score among alpha = 0
    for (&a, &s) in alpha.iter().zip(scores) {
        if a > 0.0 && a < c {
            margin_sum += s;
            margin_count += 1;
        } else if a >= c {
            lower = lower.max(s);
        } else {
            upper = upper.min(s);
        }
    }
    if margin_count > 0 {
        margin_sum / margin_count as f64
    } else if lower.is_finite() && upper.is_finite() {
        0.5 * (lower + upper)
    } else if lower.is_finite() {
        lower
    } else {
        upper
    }
}

/// In-language or outlier, with the raw margin distance alongside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prediction {
    pub label: Label,
    pub score: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    InLanguage,
    Outlier,
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Label::InLanguage => "in",
            Label::Outlier => "out",
        })
    }
}

/// A trained boundary: dense weights, offset, and the featurization
/// parameters needed to score raw text the same way training did.
#[derive(Debug, Clone)]
pub struct OneClassModel {
    pub w: Vec<f64>,
    pub rho: f64,
    pub config: TrainConfig,
    pub n_train: usize,
    pub sv_count: usize,
    pub converged: bool,
}

impl OneClassModel {
    /// Signed margin distance: positive inside the class, non-positive out.
    pub fn decision(&self, x: &SparseVector) -> Result<f64, Error> {
        if x.dim() != self.w.len() {
            return Err(Error::DimensionMismatch { expected: self.w.len(), found: x.dim() });
        }
        Ok(x.dot_dense(&self.w) - self.rho)
    }

    /// Full pipeline on raw text. An empty or whitespace-only string
    /// vectorizes to zero and scores -rho, an outlier whenever rho > 0.
    pub fn predict(&self, raw: &str) -> Prediction {
        let s = normalize(raw);
        self.predict_sentence(&s)
    }

    pub fn predict_sentence(&self, s: &Sentence) -> Prediction {
        let v = featurize(s, self.config.ngram_order, &self.config.hash);
        let score = v.dot_dense(&self.w) - self.rho;
        let label = if score > 0.0 { Label::InLanguage } else { Label::Outlier };
        Prediction { label, score }
    }

    /// Fraction of training points rejected by more than the solver
    /// tolerance; by the nu property this stays at or below nu. Points in
    /// the tolerance band around the boundary are margin vectors, not
    /// rejections.
    pub fn training_outlier_fraction(&self, points: &[SparseVector]) -> Result<f64, Error> {
        let mut outliers = 0usize;
        for p in points {
            if self.decision(p)? < -self.config.tol {
                outliers += 1;
            }
        }
        Ok(outliers as f64 / points.len().max(1) as f64)
    }
}

/// Trains on pre-featurized vectors. All vectors must share the dimension
/// implied by `cfg.hash`; fewer than two points cannot pin a boundary.
pub fn train(points: &[SparseVector], cfg: &TrainConfig) -> Result<OneClassModel, Error> {
    cfg.validate()?;
    if points.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "training needs at least 2 sentences, got {}",
            points.len()
        )));
    }
    let dim = cfg.hash.dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
    }

    let n = points.len();
    let max_updates = cfg.max_passes.saturating_mul(n as u64);
    let state = solve_dual(points, cfg.nu, cfg.tol, max_updates);

    let mut w = vec![0.0; dim];
    let mut sv_count = 0usize;
    for (p, &a) in points.iter().zip(&state.alpha) {
        if a > 0.0 {
            sv_count += 1;
            p.add_scaled_into(a, &mut w);
        }
    }

    Ok(OneClassModel {
        w,
        rho: state.rho,
        config: *cfg,
        n_train: n,
        sv_count,
        converged: state.converged,
    })
}

/// Featurizes sentences with `cfg`, then trains.
pub fn train_sentences(sentences: &[Sentence], cfg: &TrainConfig) -> Result<OneClassModel, Error> {
    cfg.validate()?;
    let points: Vec<SparseVector> = sentences
        .iter()
        .map(|s| featurize(s, cfg.ngram_order, &cfg.hash))
        .collect();
    train(&points, cfg)
}
