//! Enumeration and word building: partitions, multipartitions, the graded
//! composition pairs indexing the trace formula, hook multipartitions,
//! tableau counts and the standard-element words `w_mu`, `g_mu`.
//!
//! Every list is produced in a fixed order so outputs are diffable.

mod pairs;
mod partition;
mod tableau;
mod words;

pub use pairs::{list_graded_pairs, pair_stats, GradedPair, PairStats};
pub use partition::{list_multipartitions, partitions, MultiPartition, Partition};
pub use tableau::{
    count_semistandard, count_semistandard_single, count_standard_multitableaux,
    count_standard_tableaux, is_hook_partition, list_hook_multipartitions,
};
pub use words::{word_group, word_hecke, GeneratorWord, WordSymbol};
