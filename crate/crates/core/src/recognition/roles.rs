use std::ops::Deref;

use crate::dta::StateId;

/// One bitset over cover states per target node, stored as a flat matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleSet {
    states: usize,
    width: usize,
    bits: Vec<u64>,
}

impl RoleSet {
    pub(crate) fn new(nodes: usize, states: usize) -> Self {
        let width = states.div_ceil(64).max(1);
        RoleSet { states, width, bits: vec![0; nodes * width] }
    }

    pub(crate) fn empty_row(&self) -> Vec<u64> {
        vec![0; self.width]
    }

    pub(crate) fn set_in(row: &mut [u64], q: StateId) {
        row[q / 64] |= 1 << (q % 64);
    }

    pub(crate) fn iter_row(row: &[u64]) -> impl Iterator<Item = StateId> + '_ {
        row.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub(crate) fn store(&mut self, node: StateId, row: &[u64]) {
        let at = node * self.width;
        self.bits[at..at + self.width].copy_from_slice(row);
    }

    pub fn num_nodes(&self) -> usize {
        self.bits.len() / self.width
    }

    /// Number of cover states each row ranges over.
    pub fn num_states(&self) -> usize {
        self.states
    }

    pub fn row(&self, node: StateId) -> &[u64] {
        &self.bits[node * self.width..(node + 1) * self.width]
    }

    pub fn contains(&self, node: StateId, q: StateId) -> bool {
        q < self.states && self.row(node)[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn iter(&self, node: StateId) -> impl Iterator<Item = StateId> + '_ {
        Self::iter_row(self.row(node))
    }

    /// Cover states of `node` in ascending order.
    pub fn roles(&self, node: StateId) -> Vec<StateId> {
        self.iter(node).collect()
    }

    pub fn is_subset_of(&self, other: &RoleSet) -> bool {
        self.bits.len() == other.bits.len() && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

/// Per target node, the cover states whose sub-automaton embeds there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvailabilityMap(pub(crate) RoleSet);

/// Per target node, the cover states it actually plays once occurrences are
/// anchored from the root down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedMap(pub(crate) RoleSet);

impl Deref for AvailabilityMap {
    type Target = RoleSet;

    fn deref(&self) -> &RoleSet {
        &self.0
    }
}

impl Deref for PrunedMap {
    type Target = RoleSet;

    fn deref(&self) -> &RoleSet {
        &self.0
    }
}
