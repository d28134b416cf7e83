//! Structured reports: per-check records with claim strings, suite
//! summaries, and the JSON schema for covering-number output.
//!
//! Reports are byte-identical across runs: measured wall times go to stderr,
//! and only the static per-suite budget is recorded in the artifact itself.

use serde::Serialize;

use conjcover::search::{Gamma, GammaResult};
use conjcover::table::GroupTable;
use conjcover::witness::CoveringWitness;

/// One verified claim instance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    /// The mathematical claim being checked, self-contained.
    pub claim: String,
    pub inputs: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        claim: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        pass: bool,
    ) -> CheckRecord {
        CheckRecord {
            claim: claim.into(),
            inputs: inputs.into(),
            expected: expected.into(),
            observed: observed.into(),
            pass,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub budget_seconds: u64,
    pub passed: usize,
    pub failed: usize,
    pub records: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn new(
        suite: impl Into<String>,
        budget_seconds: u64,
        records: Vec<CheckRecord>,
    ) -> SuiteReport {
        let passed = records.iter().filter(|r| r.pass).count();
        let failed = records.len() - passed;
        SuiteReport {
            suite: suite.into(),
            budget_seconds,
            passed,
            failed,
            records,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {}: {} passed, {} failed (budget {}s)\n",
            self.suite, self.passed, self.failed, self.budget_seconds
        ));
        for r in &self.records {
            out.push_str(&format!(
                "  [{}] {} | {} | expected {} | observed {}\n",
                if r.pass { "ok" } else { "FAIL" },
                r.claim,
                r.inputs,
                r.expected,
                r.observed
            ));
        }
        out
    }
}

/// Witness serialization: generator strings of the base plus conjugator
/// cycle strings, in factor order.
#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub base_generators: Vec<String>,
    pub conjugators: Vec<String>,
}

impl WitnessJson {
    pub fn from_witness(table: &GroupTable, witness: &CoveringWitness) -> WitnessJson {
        WitnessJson {
            base_generators: witness.base().generator_strings(table),
            conjugators: witness
                .conjugators()
                .iter()
                .map(|&g| table.element(g).to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub lower: u32,
    pub upper: f64,
    pub rank_plus_one: u32,
}

/// Output schema of the covering-number commands.
#[derive(Debug, Serialize)]
pub struct GammaJson {
    pub group: String,
    pub order: usize,
    pub gamma: serde_json::Value,
    pub witness: Option<WitnessJson>,
    pub bounds: Option<BoundsJson>,
}

pub fn gamma_value_json(value: Gamma) -> serde_json::Value {
    match value {
        Gamma::Finite(k) => serde_json::json!(k),
        Gamma::Infinite => serde_json::json!("infinity"),
    }
}

impl GammaJson {
    pub fn from_result(
        name: &str,
        table: &GroupTable,
        result: &GammaResult,
        extra_bounds: Option<(u32, f64)>,
    ) -> GammaJson {
        let witness = result
            .witness
            .as_ref()
            .map(|w| WitnessJson::from_witness(table, w));
        let bounds = if result.per_class.is_empty() {
            None
        } else {
            let rank_plus_one = result
                .per_class
                .iter()
                .map(|c| c.rank as u32 + 1)
                .min()
                .unwrap();
            let mut lower = result
                .per_class
                .iter()
                .map(|c| c.lower_bound)
                .min()
                .unwrap()
                .max(3);
            let mut upper = rank_plus_one as f64;
            if let Some((solvable_lower, solvable_upper)) = extra_bounds {
                lower = lower.max(solvable_lower);
                upper = upper.min(solvable_upper);
            }
            Some(BoundsJson {
                lower,
                upper,
                rank_plus_one,
            })
        };
        GammaJson {
            group: name.to_string(),
            order: table.order(),
            gamma: gamma_value_json(result.value),
            witness,
            bounds,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "group {} of order {}: gamma = {}\n",
            self.group, self.order, self.gamma
        );
        if let Some(b) = &self.bounds {
            out.push_str(&format!(
                "  bounds: {} <= gamma <= {:.3} (best rank + 1 = {})\n",
                b.lower, b.upper, b.rank_plus_one
            ));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("  base: {}\n", w.base_generators.join(", ")));
            out.push_str(&format!("  conjugators: {}\n", w.conjugators.join(", ")));
        }
        out
    }
}
