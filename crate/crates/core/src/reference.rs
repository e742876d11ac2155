//! Published ground-state energies at δ = 0.002, embedded for offline comparison.

use serde::{Deserialize, Serialize};

const TABLE1_JSON: &str = include_str!("../data/table1_reference.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub alpha: f64,
    /// Matrix mechanics at `matrix_rho`, `matrix_n_max`.
    pub matrix: f64,
    /// Transcendental (Tricomi-function) solution.
    pub tricomi: f64,
    /// −2c₀/δ² with the self-consistent c₀.
    pub c0_self_consistent: f64,
    /// −2c₀/δ² with the closed-form c₀.
    pub c0_closed_form: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmallWellValue {
    pub alpha: f64,
    pub rho: f64,
    pub n_max: usize,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct C0Endpoint {
    pub alpha: f64,
    pub self_consistent: f64,
    pub closed_form: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Reference {
    pub version: String,
    pub description: String,
    pub delta: f64,
    pub matrix_rho: f64,
    pub matrix_n_max: usize,
    pub rows: Vec<Table1Row>,
    pub matrix_small_well: SmallWellValue,
    pub four_c0_endpoint: C0Endpoint,
}

impl Table1Reference {
    pub fn row(&self, alpha: f64) -> Option<&Table1Row> {
        self.rows.iter().find(|r| (r.alpha - alpha).abs() < 1e-12)
    }

    pub fn alphas(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.alpha).collect()
    }
}

/// The embedded reference table.
pub fn table1() -> Table1Reference {
    serde_json::from_str(TABLE1_JSON).expect("embedded reference table is valid JSON")
}
