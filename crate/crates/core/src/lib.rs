//! Recognition, decomposition and exact treewidth for graphs with no induced
//! theta, triangle or wheel with adjacent centres (wac), together with the
//! even-wheel-free, even-hole-free and bipartite subclasses.
//!
//! The pipeline is: [`decompose`] a graph along clique separators, proper
//! 2-separators and proper P3-separators, check that every leaf is basic
//! ([`recognize_basic`]), then read every verdict off the leaves
//! ([`analyze`]). Brute-force detectors in [`oracles`] serve as ground truth
//! for small graphs.

pub mod analysis;
pub mod basic;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod separators;
pub mod synthesis;
pub mod width;

pub use analysis::{analyze, planarity_verdict, Certificates, ClassReport, LeafCertificate, Rejection};
pub use basic::{classify_daisy, recognize_basic, verify_daisy, BasicKind, CubeLabels, DaisyClass, DaisyDescriptor, Petal};
pub use decompose::{decompose, decompose_with_budget, find_ears, node_type, potential, DecompositionTree, Ear, TreeNode};
pub use error::{Error, Result};
pub use graph::{Graph, Hole, InducedPath};
pub use oracles::{brute_force_verdict, find_pattern, hole_through, BruteVerdict, is_bipartite, kuratowski_witness, verify_witness, PatternKind, PatternWitness};
pub use separators::{
    find_clique_separator, find_proper_2_separator, find_proper_p3_separator, looseness, make_blocks, Block, Looseness,
    SeparatorSplit,
};
pub use synthesis::{Subclass, GluingRecipe};
pub use width::{exact_width, glue_treereps, treerep_basic, validate_treerep, TreeRepresentation, WidthClass};
