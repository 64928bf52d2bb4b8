pub mod det;
pub mod isogeny;
pub mod paper;
pub mod props;
pub mod weierstrass;

use serde_json::Value;

pub struct Outcome {
    pub context: Value,
    pub results: Value,
    pub failures: Vec<String>,
}
