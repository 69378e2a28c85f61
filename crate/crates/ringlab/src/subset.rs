//! Subset algebra over a parent ring.
//!
//! A [`Subset`] is a membership bitmask over the elements of a ring. The
//! operations here implement the set arithmetic used throughout the crate:
//! additive closures, subset products (always additively closed, so that a
//! product of sets is the set of finite sums of pairwise products),
//! ideal/subring classification, and exhaustive ideal enumeration.

use crate::ring::{BoundExceeded, FiniteRing};
use thiserror::Error;

/// Largest ring order supported by the bitmask representation.
pub const MAX_SUBSET_ORDER: usize = 128;

/// Default bound for ideal enumeration.
pub const DEFAULT_IDEAL_BOUND: usize = 16;

/// A subset of a ring's carrier, as plain bitmask data.
///
/// A subset remembers only the parent's order; operations take the parent
/// ring explicitly and reject subsets whose order disagrees. Values are
/// `Copy` and safe to share across threads.
///
/// Ordering is by mask value, which for subsets of one parent is the
/// deterministic "ascending bitmask" order used in enumeration output.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    mask: u128,
    order: usize,
}

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subset{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.order)
    }
}

impl Subset {
    pub fn empty(order: usize) -> Subset {
        assert!(
            (1..=MAX_SUBSET_ORDER).contains(&order),
            "subset parent order {order} out of range"
        );
        Subset { mask: 0, order }
    }

    pub fn full(order: usize) -> Subset {
        let mut s = Subset::empty(order);
        s.mask = if order == 128 {
            u128::MAX
        } else {
            (1u128 << order) - 1
        };
        s
    }

    /// The zero ideal `{0}`.
    pub fn zero(order: usize) -> Subset {
        Subset::empty(order).with(0)
    }

    pub fn singleton(order: usize, i: usize) -> Subset {
        Subset::empty(order).with(i)
    }

    pub fn from_indices(order: usize, indices: &[usize]) -> Subset {
        indices.iter().fold(Subset::empty(order), |s, &i| s.with(i))
    }

    pub fn with(mut self, i: usize) -> Subset {
        assert!(i < self.order, "element {i} out of range 0..{}", self.order);
        self.mask |= 1u128 << i;
        self
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        (self.mask >> i) & 1 == 1
    }

    pub fn card(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Iterates members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&i| self.contains(i))
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.order == other.order && self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        assert_eq!(self.order, other.order);
        Subset {
            mask: self.mask | other.mask,
            order: self.order,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        assert_eq!(self.order, other.order);
        Subset {
            mask: self.mask & other.mask,
            order: self.order,
        }
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    /// Order of the parent ring this subset indexes into.
    pub fn ring_order(&self) -> usize {
        self.order
    }
}

/// Exhaustively computed classification flags for one subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetClass {
    pub is_additive_subgroup: bool,
    pub is_subring: bool,
    pub is_left_ideal: bool,
    pub is_right_ideal: bool,
    pub is_ideal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SubsetError {
    #[error("PARENT_MISMATCH: subset over order {got}, ring has order {expected}")]
    ParentMismatch { expected: usize, got: usize },
    #[error("NOT_SUBRING: subset is not a subring of its parent")]
    NotSubring,
}

impl FiniteRing {
    fn expect_parent(&self, a: Subset) -> Result<(), SubsetError> {
        if a.ring_order() != self.order() {
            Err(SubsetError::ParentMismatch {
                expected: self.order(),
                got: a.ring_order(),
            })
        } else {
            Ok(())
        }
    }

    /// Smallest additive subgroup containing `a`. Always contains `0`.
    pub fn additive_closure(&self, a: Subset) -> Subset {
        self.expect_parent(a).expect("subset over the wrong ring");
        let mut closed = a.with(0);
        loop {
            let mut next = closed;
            let members: Vec<usize> = closed.iter().collect();
            for &x in &members {
                for &y in &members {
                    next = next.with(self.add(x, y));
                }
            }
            if next == closed {
                return closed;
            }
            closed = next;
        }
    }

    /// Additive closure of all pairwise products `a·b`, `a ∈ A`, `b ∈ B`.
    pub fn subset_product(&self, a: Subset, b: Subset) -> Result<Subset, SubsetError> {
        self.expect_parent(a)?;
        self.expect_parent(b)?;
        let mut products = Subset::empty(self.order());
        for x in a.iter() {
            for y in b.iter() {
                products = products.with(self.mul(x, y));
            }
        }
        Ok(self.additive_closure(products))
    }

    /// Triple product `A·B·C`, left associated; well defined up to additive
    /// closure either way.
    pub fn subset_product3(&self, a: Subset, b: Subset, c: Subset) -> Result<Subset, SubsetError> {
        let ab = self.subset_product(a, b)?;
        self.subset_product(ab, c)
    }

    /// Computes all five classification flags by exhaustive scans.
    pub fn classify_subset(&self, a: Subset) -> SubsetClass {
        self.expect_parent(a).expect("subset over the wrong ring");
        let members: Vec<usize> = a.iter().collect();
        let is_additive_subgroup = a.contains(0)
            && members
                .iter()
                .all(|&x| members.iter().all(|&y| a.contains(self.add(x, y))));
        let closed_under_mul = members
            .iter()
            .all(|&x| members.iter().all(|&y| a.contains(self.mul(x, y))));
        let absorbs_left = self
            .elements()
            .all(|r| members.iter().all(|&x| a.contains(self.mul(r, x))));
        let absorbs_right = self
            .elements()
            .all(|r| members.iter().all(|&x| a.contains(self.mul(x, r))));
        let is_subring = is_additive_subgroup && closed_under_mul;
        let is_left_ideal = is_additive_subgroup && absorbs_left;
        let is_right_ideal = is_additive_subgroup && absorbs_right;
        SubsetClass {
            is_additive_subgroup,
            is_subring,
            is_left_ideal,
            is_right_ideal,
            is_ideal: is_left_ideal && is_right_ideal,
        }
    }

    /// Whether the subring `a` satisfies `A·A = A`.
    pub fn is_idempotent_subset(&self, a: Subset) -> Result<bool, SubsetError> {
        if !self.classify_subset(a).is_subring {
            return Err(SubsetError::NotSubring);
        }
        Ok(self.subset_product(a, a)? == a)
    }

    /// Whether the whole ring satisfies `R·R = R`.
    pub fn is_idempotent_ring(&self) -> bool {
        let full = Subset::full(self.order());
        self.subset_product(full, full)
            .expect("full subset always matches its parent")
            == full
    }

    /// All additive subgroups, in ascending bitmask order.
    ///
    /// Grows subgroups one generator at a time from `{0}`; every subgroup is
    /// reached because any chain of generators realizes it.
    pub fn enumerate_additive_subgroups(&self) -> Vec<Subset> {
        let zero = Subset::zero(self.order());
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(zero);
        let mut queue = vec![zero];
        while let Some(h) = queue.pop() {
            for x in self.elements() {
                if !h.contains(x) {
                    let extended = self.additive_closure(h.with(x));
                    if seen.insert(extended) {
                        queue.push(extended);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// All subrings (additively closed, closed under multiplication), in
    /// ascending bitmask order.
    pub fn enumerate_subrings(&self) -> Vec<Subset> {
        self.enumerate_additive_subgroups()
            .into_iter()
            .filter(|&h| self.classify_subset(h).is_subring)
            .collect()
    }

    /// All two-sided ideals under the default bound; always contains `{0}`
    /// and the full carrier, in ascending bitmask order.
    pub fn enumerate_ideals(&self) -> Result<Vec<Subset>, BoundExceeded> {
        self.enumerate_ideals_bounded(DEFAULT_IDEAL_BOUND)
    }

    /// Ideal enumeration: additive subgroups filtered by two-sided
    /// absorption.
    pub fn enumerate_ideals_bounded(&self, bound: usize) -> Result<Vec<Subset>, BoundExceeded> {
        if self.order() > bound {
            return Err(BoundExceeded {
                order: self.order(),
                bound,
            });
        }
        Ok(self
            .enumerate_additive_subgroups()
            .into_iter()
            .filter(|&h| self.classify_subset(h).is_ideal)
            .collect())
    }

    /// Standalone ring on the members of the subring `a` (ascending index
    /// order), plus the index map into the parent.
    ///
    /// The map sends new index `i` to the `i`-th member; it is an injective
    /// ring homomorphism onto `a`.
    pub fn induced_ring(&self, a: Subset) -> Result<(FiniteRing, Vec<usize>), SubsetError> {
        if !self.classify_subset(a).is_subring {
            return Err(SubsetError::NotSubring);
        }
        let members: Vec<usize> = a.iter().collect();
        let mut back = vec![usize::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            back[m] = i;
        }
        let k = members.len();
        let mut add = vec![0u16; k * k];
        let mut mul = vec![0u16; k * k];
        for i in 0..k {
            for j in 0..k {
                add[i * k + j] = back[self.add(members[i], members[j])] as u16;
                mul[i * k + j] = back[self.mul(members[i], members[j])] as u16;
            }
        }
        let ring = FiniteRing::from_flat(k, add, mul)
            .expect("a subring inherits the ring axioms from its parent");
        Ok((ring, members))
    }

    /// Expresses `r` as a sum of pairwise products from `a`, or `None` when
    /// `r ∉ A·A`.
    ///
    /// The witness is found by breadth-first search over partial sums, with
    /// product pairs tried in lexicographic index order, so the output is
    /// reproducible. `r = 0` yields the empty sum.
    pub fn decompose_element(&self, a: Subset, r: usize) -> Option<Vec<(usize, usize)>> {
        self.expect_parent(a).expect("subset over the wrong ring");
        assert!(r < self.order());
        let members: Vec<usize> = a.iter().collect();
        let pairs: Vec<(usize, usize)> = members
            .iter()
            .flat_map(|&x| members.iter().map(move |&y| (x, y)))
            .collect();
        let mut pred: Vec<Option<(usize, (usize, usize))>> = vec![None; self.order()];
        let mut visited = vec![false; self.order()];
        visited[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            if s == r {
                break;
            }
            for &(x, y) in &pairs {
                let t = self.add(s, self.mul(x, y));
                if !visited[t] {
                    visited[t] = true;
                    pred[t] = Some((s, (x, y)));
                    queue.push_back(t);
                }
            }
        }
        if !visited[r] {
            return None;
        }
        let mut witness = Vec::new();
        let mut cur = r;
        while cur != 0 {
            let (prev, pair) = pred[cur].expect("reached states have predecessors");
            witness.push(pair);
            cur = prev;
        }
        witness.reverse();
        Some(witness)
    }

    /// Replays a decomposition witness: the sum of the pairwise products.
    pub fn replay_decomposition(&self, witness: &[(usize, usize)]) -> usize {
        witness
            .iter()
            .fold(0, |acc, &(x, y)| self.add(acc, self.mul(x, y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> FiniteRing {
        FiniteRing::cyclic(2).direct_product(&FiniteRing::cyclic(2))
    }

    #[test]
    fn closure_of_empty_set_is_zero() {
        let z4 = FiniteRing::cyclic(4);
        assert_eq!(z4.additive_closure(Subset::empty(4)), Subset::zero(4));
    }

    #[test]
    fn closure_of_two_in_z8() {
        let z8 = FiniteRing::cyclic(8);
        let c = z8.additive_closure(Subset::singleton(8, 2));
        assert_eq!(c, Subset::from_indices(8, &[0, 2, 4, 6]));
    }

    #[test]
    fn closure_fixes_subgroups() {
        let z8 = FiniteRing::cyclic(8);
        for h in z8.enumerate_additive_subgroups() {
            assert_eq!(z8.additive_closure(h), h);
        }
    }

    #[test]
    fn product_with_zero_is_zero() {
        let z4 = FiniteRing::cyclic(4);
        for b in [Subset::full(4), Subset::from_indices(4, &[0, 2])] {
            assert_eq!(z4.subset_product(Subset::zero(4), b).unwrap(), Subset::zero(4));
        }
    }

    #[test]
    fn two_z4_squares_to_zero() {
        let z4 = FiniteRing::cyclic(4);
        let s = Subset::from_indices(4, &[0, 2]);
        assert_eq!(z4.subset_product(s, s).unwrap(), Subset::zero(4));
    }

    #[test]
    fn rsr_recovers_ideal_in_klein() {
        // S = Z2 × {0}: indices 0 = (0,0) and 2 = (1,0).
        let r = klein();
        let s = Subset::from_indices(4, &[0, 2]);
        let full = Subset::full(4);
        let rsr = r.subset_product3(full, s, full).unwrap();
        assert_eq!(rsr, s);
    }

    #[test]
    fn parent_mismatch_is_rejected() {
        let z4 = FiniteRing::cyclic(4);
        let bad = Subset::zero(5);
        assert_eq!(
            z4.subset_product(bad, Subset::zero(4)),
            Err(SubsetError::ParentMismatch {
                expected: 4,
                got: 5
            })
        );
    }

    #[test]
    fn classification_of_named_subsets() {
        let r = klein();
        let full = r.classify_subset(Subset::full(4));
        assert!(full.is_ideal && full.is_subring && full.is_additive_subgroup);
        let zero = r.classify_subset(Subset::zero(4));
        assert!(zero.is_ideal && zero.is_subring);
        let comp = r.classify_subset(Subset::from_indices(4, &[0, 2]));
        assert!(comp.is_ideal);
        // {0, 1} in Z_4 is not additively closed.
        let z4 = FiniteRing::cyclic(4);
        let c = z4.classify_subset(Subset::from_indices(4, &[0, 1]));
        assert!(!c.is_additive_subgroup && !c.is_subring && !c.is_ideal);
    }

    #[test]
    fn idempotency_of_subsets() {
        let z4 = FiniteRing::cyclic(4);
        assert!(z4.is_idempotent_subset(Subset::full(4)).unwrap());
        let zero2 = FiniteRing::zero_ring(&[2]);
        assert!(!zero2.is_idempotent_subset(Subset::full(2)).unwrap());
        let z8 = FiniteRing::cyclic(8);
        let evens = Subset::from_indices(8, &[0, 2, 4, 6]);
        assert!(!z8.is_idempotent_subset(evens).unwrap());
        assert_eq!(
            z8.subset_product(evens, evens).unwrap(),
            Subset::from_indices(8, &[0, 4])
        );
        let not_subring = Subset::from_indices(4, &[0, 1]);
        assert_eq!(
            z4.is_idempotent_subset(not_subring),
            Err(SubsetError::NotSubring)
        );
    }

    #[test]
    fn ideals_of_z2() {
        let z2 = FiniteRing::cyclic(2);
        assert_eq!(
            z2.enumerate_ideals().unwrap(),
            vec![Subset::zero(2), Subset::full(2)]
        );
    }

    #[test]
    fn ideals_of_klein() {
        let r = klein();
        assert_eq!(
            r.enumerate_ideals().unwrap(),
            vec![
                Subset::zero(4),
                Subset::from_indices(4, &[0, 1]),
                Subset::from_indices(4, &[0, 2]),
                Subset::full(4),
            ]
        );
    }

    #[test]
    fn ideal_bound_is_enforced() {
        let big = FiniteRing::zero_ring(&[17]);
        assert_eq!(
            big.enumerate_ideals(),
            Err(BoundExceeded {
                order: 17,
                bound: 16
            })
        );
    }

    #[test]
    fn ideal_list_is_closed_under_intersection() {
        for r in [FiniteRing::cyclic(8), klein(), FiniteRing::zero_ring(&[2, 4])] {
            let ideals = r.enumerate_ideals().unwrap();
            for a in &ideals {
                for b in &ideals {
                    assert!(ideals.contains(&a.intersection(b)));
                }
            }
        }
    }

    #[test]
    fn induced_ring_of_full_carrier_is_the_parent() {
        let r = klein();
        let (induced, map) = r.induced_ring(Subset::full(4)).unwrap();
        assert_eq!(induced, r);
        assert_eq!(map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn induced_ring_of_klein_component_is_z2() {
        let r = klein();
        let (induced, map) = r.induced_ring(Subset::from_indices(4, &[0, 2])).unwrap();
        assert_eq!(induced, FiniteRing::cyclic(2));
        assert_eq!(map, vec![0, 2]);
    }

    #[test]
    fn induced_ring_of_evens_in_z4_is_zero_ring() {
        let z4 = FiniteRing::cyclic(4);
        let (induced, _) = z4.induced_ring(Subset::from_indices(4, &[0, 2])).unwrap();
        assert_eq!(induced, FiniteRing::zero_ring(&[2]));
    }

    #[test]
    fn decompose_zero_is_the_empty_sum() {
        let z4 = FiniteRing::cyclic(4);
        assert_eq!(z4.decompose_element(Subset::full(4), 0), Some(vec![]));
    }

    #[test]
    fn decompose_three_in_z4() {
        let z4 = FiniteRing::cyclic(4);
        let w = z4.decompose_element(Subset::full(4), 3).unwrap();
        assert_eq!(w, vec![(1, 3)]);
        assert_eq!(z4.replay_decomposition(&w), 3);
    }

    #[test]
    fn decompose_outside_product_set_is_none() {
        let z4 = FiniteRing::cyclic(4);
        let a = Subset::from_indices(4, &[0, 2]);
        assert_eq!(z4.decompose_element(a, 2), None);
    }

    #[test]
    fn decomposition_matches_membership_in_product() {
        for r in [FiniteRing::cyclic(8), klein(), FiniteRing::zero_ring(&[2, 4])] {
            for a in r.enumerate_subrings() {
                let aa = r.subset_product(a, a).unwrap();
                for x in r.elements() {
                    match r.decompose_element(a, x) {
                        Some(w) => {
                            assert!(aa.contains(x));
                            assert_eq!(r.replay_decomposition(&w), x);
                            assert!(w.iter().all(|&(p, q)| a.contains(p) && a.contains(q)));
                        }
                        None => assert!(!aa.contains(x)),
                    }
                }
            }
        }
    }
}
