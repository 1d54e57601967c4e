/// Counters collected by every algorithm run. Fields that an algorithm does
/// not track stay zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunStats {
    pub zero_reductions: u64,
    pub pairs_generated: u64,
    pub pruned_by_syzygy: u64,
    pub pruned_rewritable: u64,
    pub pruned_nonprimitive: u64,
    /// Pairs discarded by classical criteria (product/chain, staggered ideals).
    pub pruned_criteria: u64,
    pub reduction_steps: u64,
    pub iterations: u64,
    pub basis_size: u64,
}
