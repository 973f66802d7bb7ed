//! Reducible elementary representations of so(4,2) induced from the maximal
//! cuspidal parabolic `P₁ = so(2) ⊕ sl(2,ℝ) ⊕ A₁ ⊕ N₁`.
//!
//! The pipeline is: [`symexpr`] expressions in `p, ν, n` → HC triples and
//! reflections in [`roots`] → orbit and members in [`multiplet`] → arrows and
//! Knapp–Stein pairs in [`graph`] → tags in [`classify`] → output in [`emit`].

pub mod classify;
pub mod cli;
pub mod emit;
mod error;
pub mod graph;
pub mod multiplet;
pub mod roots;
pub mod symexpr;
pub mod weights;

pub use classify::{
    classify, discrete_series_tag, p2_label, physics_tags, DiscreteSeries, NodeTags,
};
pub use emit::{Format, LabelStyle, RenderOptions};
pub use error::Error;
pub use graph::{DiffOpEdge, KsKind, KsPair, MultipletGraph};
pub use multiplet::{generate_orbit, members, permutation_oracle, MultipletSpec, Reduction};
pub use roots::{hc_parameter, reflect_root, reflect_simple, HcTriple, Root};
pub use symexpr::{LinExpr, SignClass, Symbol};
pub use weights::{from_p1_signature, to_p1_signature, P1Signature, WeightNode, WeylWord};
