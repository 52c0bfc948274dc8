//! Shared inputs for the benchmarks.

use flatpart_core::{enumerate_avoiding, PatternSet, Permutation};

/// Sizes swept by the enumeration benchmarks.
pub const SIZES: [usize; 4] = [8, 10, 12, 14];

/// Pattern sets with very different class sizes: Bell-sized, Catalan,
/// Motzkin and linear.
pub fn pattern_sets() -> Vec<PatternSet> {
    ["", "321", "231", "213,312"].iter().map(|s| PatternSet::parse(s).expect("valid pattern set")).collect()
}

/// Every member of `F(n; ps)`, for feeding the maps.
pub fn members(n: usize, ps: &str) -> Vec<Permutation> {
    let ps = PatternSet::parse(ps).expect("valid pattern set");
    enumerate_avoiding(n, &ps).expect("n within limits").collect()
}
