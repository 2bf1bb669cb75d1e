//! Edge-sequence encoders for the time-then-graph pipeline.
//!
//! Two lossy numeric encoders over presence sequences (exponential decay and
//! per-step weights, both squashed by a sigmoid), and the exact injective
//! encoder that interns the whole attribute sequence.

use crate::error::{invalid, Result};
use crate::tgraph::AttrValue;
use crate::wl::{ColorId, Interner};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayParams {
    pub lambda: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightParams {
    pub theta: Vec<f64>,
}

impl WeightParams {
    /// `θ_t = 2^(t-1)`: makes the pre-sigmoid sum of a binary sequence its
    /// little-endian integer value.
    pub fn powers_of_two(horizon: usize) -> Self {
        WeightParams {
            theta: (0..horizon).map(|t| (1u64 << t) as f64).collect(),
        }
    }

    pub fn ones(horizon: usize) -> Self {
        WeightParams {
            theta: vec![1.0; horizon],
        }
    }
}

pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Numeric view of an attribute sequence: Null is 0, anything present is 1.
pub fn presence(seq: &[AttrValue]) -> Vec<f64> {
    seq.iter()
        .map(|a| if a.is_null() { 0.0 } else { 1.0 })
        .collect()
}

fn check_finite(seq: &[f64]) -> Result<()> {
    match seq.iter().position(|v| !v.is_finite()) {
        Some(t) => Err(invalid(format!("non-finite entry {} at step {}", seq[t], t + 1))),
        None => Ok(()),
    }
}

/// `Σ_t e^{λ(T−t+1)}·A_t`, with `t` counted from 1.
pub fn decay_sum(seq: &[f64], params: DecayParams) -> Result<f64> {
    check_finite(seq)?;
    if !params.lambda.is_finite() {
        return Err(invalid("decay rate must be finite"));
    }
    let horizon = seq.len();
    Ok(seq
        .iter()
        .enumerate()
        .map(|(k, &a)| (params.lambda * (horizon - k) as f64).exp() * a)
        .sum())
}

/// Strategy D: sigmoid of the exponentially weighted sum.
pub fn decay_encode(seq: &[f64], params: DecayParams) -> Result<f64> {
    decay_sum(seq, params).map(sigmoid)
}

/// `Σ_t θ_t·A_t`.
pub fn weighted_sum(seq: &[f64], params: &WeightParams) -> Result<f64> {
    check_finite(seq)?;
    if params.theta.len() != seq.len() {
        return Err(invalid(format!(
            "{} weights for a sequence of length {}",
            params.theta.len(),
            seq.len()
        )));
    }
    Ok(seq.iter().zip(&params.theta).map(|(a, w)| w * a).sum())
}

/// Strategy S: sigmoid of the per-step weighted sum.
pub fn weighted_encode(seq: &[f64], params: &WeightParams) -> Result<f64> {
    weighted_sum(seq, params).map(sigmoid)
}

/// Exact encoder: interns the full sequence, Nulls included.
pub fn exact_seq_encode(seq: &[AttrValue], interner: &mut Interner) -> ColorId {
    interner.sequence(seq)
}

/// All `2^horizon` binary presence sequences, step 1 as the lowest bit.
pub fn binary_sequences(horizon: usize) -> Vec<Vec<f64>> {
    (0..1usize << horizon)
        .map(|bits| (0..horizon).map(|t| ((bits >> t) & 1) as f64).collect())
        .collect()
}
