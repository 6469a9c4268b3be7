//! The two worked models used throughout the tests and the bundled fixtures.

use crate::kripke::{ArgumentModel, EpistemicModel, PointedArgumentModel, PointedEpistemicModel};
use crate::Signature;

fn pq_ab() -> Signature {
    Signature::new(["p", "q"], ["a", "b"]).expect("static signature")
}

/// Three worlds: `s1: p`, `s2: p, q`, `s3: q`. Agent `a` cannot tell `s1`
/// from `s2`; agent `b` cannot tell `s2` from `s3`. Pointed at `s2`.
pub fn example1() -> PointedEpistemicModel {
    let mut b = EpistemicModel::builder(pq_ab(), ["s1", "s2", "s3"]);
    b.partition("a", &[&["s1", "s2"], &["s3"]])
        .partition("b", &[&["s1"], &["s2", "s3"]])
        .set_true("p", "s1")
        .set_true("p", "s2")
        .set_true("q", "s2")
        .set_true("q", "s3");
    b.build().at("s2").expect("s2 is declared")
}

/// The mayoral debate: `B` attacks `A1` on `p`, `A2` attacks `B` on `q`.
/// `A1` and `A2` are available to `a`; nothing is available to `b`.
/// Pointed at the last argument `A2`.
pub fn example2() -> PointedArgumentModel {
    let mut b = ArgumentModel::builder(pq_ab(), ["A1", "B", "A2"]);
    b.attack("p", "A1", "B")
        .attack("q", "B", "A2")
        .available("a", "A1")
        .available("a", "A2");
    b.build().at("A2").expect("A2 is declared")
}
