//! Inputs shared by the benchmarks.

use ttwfree::synthesis::random_member;
use ttwfree::Graph;

/// Fixed-seed members of the class, one per requested size.
pub fn members(sizes: &[usize]) -> Vec<Graph> {
    sizes
        .iter()
        .map(|&n| random_member(n as u64, n, None).expect("generator succeeds"))
        .collect()
}
