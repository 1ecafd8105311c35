//! Benchmark inputs shared by the criterion benches.

use socle::embedding::integer_corpus;
use socle::partition::shapes_up_to;
use socle::tableau::enumerate;
use socle::{Embedding, ShapeTriple, SkewTableau, TableauKind};

/// Every socle tableau of a shape with `|β| = weight`.
pub fn socle_tableaux_of_weight(weight: usize) -> Vec<SkewTableau> {
    shapes_up_to(weight)
        .iter()
        .filter(|s| s.beta.weight() == weight)
        .flat_map(|s| enumerate(s, TableauKind::Socle))
        .collect()
}

/// A fixed seeded corpus of embeddings over `F_p`.
pub fn corpus(p: u32, count: usize, max_weight: usize) -> Vec<Embedding> {
    integer_corpus(7, count, max_weight)
        .iter()
        .map(|d| d.reduce(p).expect("valid data"))
        .collect()
}

pub fn shape(s: &str) -> ShapeTriple {
    s.parse().expect("shape literal")
}
