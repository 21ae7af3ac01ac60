/// Capacity bounds for the exhaustive operations.
///
/// Every enumeration in the crate checks its search space against one of
/// these fields and fails with [`Error::Capacity`](crate::Error::Capacity)
/// instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by poset enumeration.
    pub max_enumeration_size: usize,
    /// Largest upset family materialized by `all_upsets`.
    pub max_upsets: usize,
    /// Bound on `|Q|^|P|` for monotone map enumeration.
    pub max_maps: u128,
    /// Largest lattice handed to the subset-enumeration prime filter oracle.
    pub max_prime_filter_oracle: usize,
    /// Node budget for homomorphism search.
    pub max_hom_search_nodes: u64,
    /// Bound on the permutations tried while completing a canonical form.
    pub max_canonical_permutations: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration_size: 6,
            max_upsets: 1 << 16,
            max_maps: 1 << 24,
            max_prime_filter_oracle: 16,
            max_hom_search_nodes: 1 << 26,
            max_canonical_permutations: 1 << 22,
        }
    }
}

impl Limits {
    pub(crate) fn check(what: &'static str, needed: u128, limit: u128) -> crate::Result<()> {
        if needed > limit {
            Err(crate::Error::Capacity {
                what,
                needed,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
