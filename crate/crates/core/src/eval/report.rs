use std::fmt;

use serde::Serialize;

use crate::alphabet::Direction;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Formats `correct / total` as a percentage with two decimals.
///
/// The third decimal is dropped, not rounded. Returns `None` for an empty
/// denominator.
pub fn format_percent(correct: usize, total: usize) -> Option<String> {
    if total == 0 {
        return None;
    }
    let basis = (correct as u128 * 10_000) / total as u128;
    Some(format!("{}.{:02}%", basis / 100, basis % 100))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CategoryRecord {
    pub name: String,
    pub total: usize,
    pub correct: usize,
    pub incorrect: usize,
    /// `None` when `total` is zero.
    pub precision: Option<f64>,
    pub precision_percent: Option<String>,
}

impl CategoryRecord {
    /// Panics if `correct > total`.
    pub fn new(name: impl Into<String>, correct: usize, total: usize) -> Self {
        assert!(
            correct <= total,
            "correct ({correct}) exceeds total ({total})"
        );
        CategoryRecord {
            name: name.into(),
            total,
            correct,
            incorrect: total - correct,
            precision: (total > 0).then(|| correct as f64 / total as f64),
            precision_percent: format_percent(correct, total),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BizrokeSplit {
    pub last_syllable: usize,
    pub other_syllables: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub direction: Direction,
    pub engine_version: &'static str,
    pub categories: Vec<CategoryRecord>,
    /// Present for `ar2la` only.
    pub bizroke_error_split: Option<BizrokeSplit>,
    pub recall: Option<f64>,
    pub overall: CategoryRecord,
}

pub const BIZROKE: &str = "Bizroke detection";
pub const W_U: &str = "w/u detection";
pub const Y_I: &str = "y/î detection";
pub const WHOLE: &str = "whole test set";

impl EvalReport {
    /// Builds an `ar2la` report from `(correct, total)` pairs.
    pub fn ar2la_from_counts(
        bizroke: (usize, usize),
        w_u: (usize, usize),
        y_i: (usize, usize),
        whole: (usize, usize),
        split: BizrokeSplit,
    ) -> Self {
        EvalReport {
            direction: Direction::Ar2La,
            engine_version: ENGINE_VERSION,
            categories: vec![
                CategoryRecord::new(BIZROKE, bizroke.0, bizroke.1),
                CategoryRecord::new(W_U, w_u.0, w_u.1),
                CategoryRecord::new(Y_I, y_i.0, y_i.1),
            ],
            bizroke_error_split: Some(split),
            recall: (whole.1 > 0).then_some(1.0),
            overall: CategoryRecord::new(WHOLE, whole.0, whole.1),
        }
    }

    pub fn la2ar_from_counts(whole: (usize, usize)) -> Self {
        EvalReport {
            direction: Direction::La2Ar,
            engine_version: ENGINE_VERSION,
            categories: Vec::new(),
            bizroke_error_split: None,
            recall: (whole.1 > 0).then_some(1.0),
            overall: CategoryRecord::new(WHOLE, whole.0, whole.1),
        }
    }

    pub fn category(&self, name: &str) -> Option<&CategoryRecord> {
        self.categories
            .iter()
            .chain(std::iter::once(&self.overall))
            .find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "direction: {}", self.direction)?;
        writeln!(
            f,
            "{:<20} {:>8} {:>9} {:>8} {:>10}",
            "category", "correct", "incorrect", "total", "precision"
        )?;
        for c in self.categories.iter().chain(std::iter::once(&self.overall)) {
            writeln!(
                f,
                "{:<20} {:>8} {:>9} {:>8} {:>10}",
                c.name,
                c.correct,
                c.incorrect,
                c.total,
                c.precision_percent.as_deref().unwrap_or("n/a")
            )?;
        }
        if let Some(split) = self.bizroke_error_split {
            writeln!(
                f,
                "Bizroke errors: {} in last syllable, {} elsewhere",
                split.last_syllable, split.other_syllables
            )?;
        }
        let recall = match self.recall {
            Some(r) => format!("{:.2}%", r * 100.0),
            None => "n/a".to_string(),
        };
        writeln!(f, "recall: {recall}")
    }
}
