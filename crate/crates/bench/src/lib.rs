//! Inputs shared by the benchmarks.

use unrep_core::{catalog, represent, TransSemigroup};

/// Named semigroups of increasing size with `|S| = |X|`.
pub fn workloads() -> Vec<(&'static str, TransSemigroup)> {
    vec![
        ("cyc4", catalog::cyc4()),
        ("cliff4", catalog::cliff4()),
        ("lz4", catalog::lz4()),
        ("reg_s3", catalog::reg_s3()),
        ("cyc8", catalog::cyclic_group(8)),
        (
            "c4xchain",
            represent(&catalog::product_table(
                &catalog::cyclic_table(4),
                &catalog::two_chain_table(),
            ))
            .semigroup,
        ),
    ]
}
