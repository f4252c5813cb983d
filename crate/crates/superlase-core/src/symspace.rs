//! The fully symmetric subspace of N three-level atoms.
//!
//! States are labeled |1^m; 2^l>: l atoms in level 2, m atoms in level 1 and
//! N - m - l in the ground level. Collective operators S_ij map each basis
//! state to at most one other, with amplitudes fixed by the three-boson
//! (Schwinger) representation with occupations (N - m - l, m, l).
//!
//! Density matrices retain a single coherence label: triples (l, m, r) for
//! |1^m; 2^l><1^m; 2^r|, stored lexicographically in (m, l, r) so each m
//! block is contiguous.

use crate::error::{Error, Result};

/// A symmetric basis state |1^m; 2^l>.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateIndex {
    /// Atoms in level 2.
    pub l: u32,
    /// Atoms in level 1.
    pub m: u32,
}

/// A density-matrix entry label (l, m, r) for |1^m; 2^l><1^m; 2^r|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixIndex {
    pub l: u32,
    pub m: u32,
    pub r: u32,
}

impl MatrixIndex {
    /// The hermitian partner (r, m, l).
    pub fn transposed(self) -> Self {
        Self { l: self.r, m: self.m, r: self.l }
    }

    pub fn is_diagonal(self) -> bool {
        self.l == self.r
    }
}

/// Collective one-atom operators S_ij = sum_mu |i><j|_mu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CollectiveOp {
    S00,
    S01,
    S02,
    S10,
    S11,
    S12,
    S20,
    S21,
    S22,
}

impl CollectiveOp {
    /// S_ij^dagger = S_ji.
    pub fn adjoint(self) -> Self {
        use CollectiveOp::*;
        match self {
            S01 => S10,
            S10 => S01,
            S02 => S20,
            S20 => S02,
            S12 => S21,
            S21 => S12,
            diag => diag,
        }
    }
}

/// Enumeration of the symmetric subspace for a fixed atom number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Basis {
    n_atoms: u32,
}

/// Number of valid (l, m, r) triples: sum_{m=0}^{N} (N - m + 1)^2.
pub fn dim(n_atoms: u32) -> usize {
    (0..=n_atoms).map(|m| ((n_atoms - m + 1) as usize).pow(2)).sum()
}

impl Basis {
    pub fn new(n_atoms: u32) -> Self {
        Self { n_atoms }
    }

    pub fn n_atoms(&self) -> u32 {
        self.n_atoms
    }

    /// Number of (l, m, r) triples.
    pub fn dim(&self) -> usize {
        dim(self.n_atoms)
    }

    /// Number of states |1^m; 2^l>.
    pub fn n_states(&self) -> usize {
        let n = self.n_atoms as usize;
        (n + 1) * (n + 2) / 2
    }

    pub fn state_valid(&self, s: StateIndex) -> bool {
        s.l + s.m <= self.n_atoms
    }

    pub fn index_valid(&self, t: MatrixIndex) -> bool {
        t.m + t.l <= self.n_atoms && t.m + t.r <= self.n_atoms
    }

    /// Offset of the m block in the linear layout.
    pub fn block_offset(&self, m: u32) -> usize {
        debug_assert!(m <= self.n_atoms);
        (0..m).map(|mm| ((self.n_atoms - mm + 1) as usize).pow(2)).sum()
    }

    /// Side length of the m block: l, r = 0..=N-m.
    pub fn block_side(&self, m: u32) -> usize {
        (self.n_atoms - m + 1) as usize
    }

    /// Linear offset of a triple (lexicographic in (m, l, r)).
    pub fn offset(&self, t: MatrixIndex) -> usize {
        debug_assert!(self.index_valid(t));
        let side = self.block_side(t.m);
        self.block_offset(t.m) + t.l as usize * side + t.r as usize
    }

    /// Inverse of [`Basis::offset`].
    pub fn triple(&self, mut offset: usize) -> MatrixIndex {
        debug_assert!(offset < self.dim());
        for m in 0..=self.n_atoms {
            let block = self.block_side(m).pow(2);
            if offset < block {
                let side = self.block_side(m);
                return MatrixIndex {
                    l: (offset / side) as u32,
                    m,
                    r: (offset % side) as u32,
                };
            }
            offset -= block;
        }
        unreachable!("offset within dim() always falls in a block")
    }

    /// All triples in storage order.
    pub fn triples(&self) -> impl Iterator<Item = MatrixIndex> + '_ {
        (0..=self.n_atoms).flat_map(move |m| {
            (0..=self.n_atoms - m).flat_map(move |l| {
                (0..=self.n_atoms - m).map(move |r| MatrixIndex { l, m, r })
            })
        })
    }

    /// All states |1^m; 2^l>.
    pub fn states(&self) -> impl Iterator<Item = StateIndex> + '_ {
        (0..=self.n_atoms)
            .flat_map(move |m| (0..=self.n_atoms - m).map(move |l| StateIndex { l, m }))
    }

    /// Matrix element of a collective operator on a symmetric state.
    ///
    /// Returns the unique target state and (non-negative) amplitude, or
    /// `None` when the operator annihilates the state. Diagonal operators
    /// return the state itself with the corresponding occupation count.
    pub fn op_element(&self, which: CollectiveOp, state: StateIndex) -> Result<Option<(StateIndex, f64)>> {
        if !self.state_valid(state) {
            return Err(Error::InvalidParameter(format!(
                "state (l={}, m={}) invalid for N={}",
                state.l, state.m, self.n_atoms
            )));
        }
        Ok(self.op_element_unchecked(which, state))
    }

    /// As [`Basis::op_element`] but assumes a valid state (hot loops).
    pub fn op_element_unchecked(
        &self,
        which: CollectiveOp,
        state: StateIndex,
    ) -> Option<(StateIndex, f64)> {
        use CollectiveOp::*;
        let StateIndex { l, m } = state;
        let n0 = self.n_atoms - m - l; // ground-level occupation
        let amp2 = |a: u32, b: u32| (a as u64 * b as u64) as f64;
        match which {
            S00 => Some((state, n0 as f64)),
            S11 => Some((state, m as f64)),
            S22 => Some((state, l as f64)),
            S20 => (n0 > 0).then(|| {
                (StateIndex { l: l + 1, m }, amp2(n0, l + 1).sqrt())
            }),
            S02 => (l > 0).then(|| {
                (StateIndex { l: l - 1, m }, amp2(l, n0 + 1).sqrt())
            }),
            S12 => (l > 0).then(|| {
                (StateIndex { l: l - 1, m: m + 1 }, amp2(l, m + 1).sqrt())
            }),
            S21 => (m > 0).then(|| {
                (StateIndex { l: l + 1, m: m - 1 }, amp2(m, l + 1).sqrt())
            }),
            S01 => (m > 0).then(|| {
                (StateIndex { l, m: m - 1 }, amp2(m, n0 + 1).sqrt())
            }),
            S10 => (n0 > 0).then(|| {
                (StateIndex { l, m: m + 1 }, amp2(n0, m + 1).sqrt())
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force dimension oracle: count triples directly.
    fn dim_oracle(n: u32) -> usize {
        let mut count = 0;
        for m in 0..=n {
            for l in 0..=n {
                for r in 0..=n {
                    if m + l <= n && m + r <= n {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn dimension_matches_enumeration() {
        assert_eq!(dim(0), 1);
        assert_eq!(dim(1), 5);
        assert_eq!(dim(2), 14);
        for n in 0..=12 {
            assert_eq!(dim(n), dim_oracle(n), "N = {n}");
        }
        assert_eq!(dim(30), 10_416);
    }

    #[test]
    fn raising_from_ground_state() {
        let basis = Basis::new(3);
        let (tgt, amp) = basis
            .op_element(CollectiveOp::S20, StateIndex { l: 0, m: 0 })
            .unwrap()
            .unwrap();
        assert_eq!(tgt, StateIndex { l: 1, m: 0 });
        assert_eq!(amp, 3f64.sqrt());
    }

    #[test]
    fn lowering_level_one() {
        // S01 on (l=0, m=1) at N=2: amplitude sqrt(m (N - m - l + 1)) = sqrt 2
        let basis = Basis::new(2);
        let (tgt, amp) = basis
            .op_element(CollectiveOp::S01, StateIndex { l: 0, m: 1 })
            .unwrap()
            .unwrap();
        assert_eq!(tgt, StateIndex { l: 0, m: 0 });
        assert_eq!(amp, 2f64.sqrt());
    }

    #[test]
    fn annihilated_states() {
        let basis = Basis::new(4);
        assert!(basis
            .op_element(CollectiveOp::S12, StateIndex { l: 0, m: 0 })
            .unwrap()
            .is_none());
        // fully shifted state cannot be pumped further
        assert!(basis
            .op_element(CollectiveOp::S20, StateIndex { l: 4, m: 0 })
            .unwrap()
            .is_none());
    }

    #[test]
    fn invalid_state_is_an_error() {
        let basis = Basis::new(2);
        assert!(basis.op_element(CollectiveOp::S00, StateIndex { l: 2, m: 1 }).is_err());
    }

    #[test]
    fn occupations_sum_to_n() {
        for n in 1..=8u32 {
            let basis = Basis::new(n);
            for s in basis.states() {
                let mut total = 0.0;
                for op in [CollectiveOp::S00, CollectiveOp::S11, CollectiveOp::S22] {
                    let (tgt, amp) = basis.op_element(op, s).unwrap().unwrap();
                    assert_eq!(tgt, s);
                    total += amp;
                }
                assert_eq!(total, n as f64);
            }
        }
    }

    #[test]
    fn ladder_pairs_are_adjoint() {
        use CollectiveOp::*;
        for n in 1..=7u32 {
            let basis = Basis::new(n);
            for op in [S01, S10, S02, S20, S12, S21] {
                for s in basis.states() {
                    if let Some((tgt, amp)) = basis.op_element(op, s).unwrap() {
                        let back = basis.op_element(op.adjoint(), tgt).unwrap();
                        let (src, amp_back) = back.expect("adjoint must map back");
                        assert_eq!(src, s);
                        assert_eq!(amp, amp_back, "{op:?} on {s:?}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn offset_roundtrip(n in 0u32..12) {
            let basis = Basis::new(n);
            let mut seen = vec![false; basis.dim()];
            for (expected, t) in basis.triples().enumerate() {
                let off = basis.offset(t);
                prop_assert_eq!(off, expected);
                prop_assert_eq!(basis.triple(off), t);
                prop_assert!(!seen[off]);
                seen[off] = true;
            }
            prop_assert!(seen.into_iter().all(|x| x));
        }
    }
}
