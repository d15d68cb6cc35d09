//! Concrete graph, matching, permutation and triple-system families.

mod graphs;
pub(crate) mod matchings;
mod minor;
mod permutation;
mod triples;

pub use graphs::{complete, complete_multipartite_trivial, j_k, lex_product, monotone_path, path_power};
pub use matchings::{is_jumbled, jumbled_matching, random_matching, vdc_matching};
pub use minor::is_interval_minor;
pub use permutation::{
    interval_discrepancy, interval_discrepancy_capped, vdc_permutation, Permutation,
    DEFAULT_DISCREPANCY_CAP,
};
pub use triples::{
    complete_triple_system, s_family, s_family_capped, t_hypergraph, tight_path_3, TripleSystem,
    DEFAULT_S_FAMILY_CAP,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator behind every seeded routine in the crate: ChaCha8 keyed
/// through `SeedableRng::seed_from_u64`.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
