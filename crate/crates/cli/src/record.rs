use serde::Serialize;

/// One CSV row: a set, a plan, an algorithm and what it found.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub set_id: String,
    pub d: usize,
    pub card_lambda: usize,
    pub card_mirror: usize,
    pub plan: String,
    pub algo: String,
    pub n: Option<u64>,
    pub elapsed_ms: String,
    pub error: String,
}
