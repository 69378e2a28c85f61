//! Ring homomorphisms: checking, constrained exhaustive enumeration, and
//! isomorphism testing.
//!
//! Homomorphism enumeration assigns images only to a minimal additive
//! generating set, extends additively, and prunes partial assignments that
//! already violate a relation or the multiplicative law on determined
//! elements. This turns the naive `|S|^|R|` search into `|S|^g` with `g`
//! the generator count.

use crate::ring::{BoundExceeded, FiniteRing, DEFAULT_CANON_BOUND};
use crate::subset::Subset;
use thiserror::Error;

/// Default bound on the domain order for homomorphism enumeration.
pub const DEFAULT_HOM_BOUND: usize = 16;

/// Default bound on the order for direct isomorphism search.
pub const DEFAULT_ISO_BOUND: usize = 16;

/// A verified ring homomorphism recorded elementwise.
#[derive(Clone, PartialEq, Eq)]
pub struct RingHom {
    domain: FiniteRing,
    codomain: FiniteRing,
    map: Vec<usize>,
    injective: bool,
    unital: bool,
}

impl std::fmt::Debug for RingHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RingHom{:?}", self.map)
    }
}

impl RingHom {
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn domain(&self) -> &FiniteRing {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteRing {
        &self.codomain
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    /// Whether both rings have units and the map sends unit to unit.
    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn is_bijective(&self) -> bool {
        self.injective && self.domain.order() == self.codomain.order()
    }

    /// The image as a subset of the codomain.
    pub fn image_subset(&self) -> Subset {
        let mut s = Subset::empty(self.codomain.order());
        for &v in &self.map {
            s = s.with(v);
        }
        s
    }

    pub fn identity(ring: &FiniteRing) -> RingHom {
        check_hom(&(0..ring.order()).collect::<Vec<_>>(), ring, ring)
            .expect("the identity map is a homomorphism")
    }

    /// Composition `other ∘ self` (apply `self` first).
    pub fn compose(&self, other: &RingHom) -> Result<RingHom, HomError> {
        if self.codomain != other.domain {
            return Err(HomError::ChainMismatch);
        }
        let map: Vec<usize> = self.map.iter().map(|&x| other.map[x]).collect();
        check_hom(&map, &self.domain, &other.codomain)
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Result<RingHom, HomError> {
        if !self.is_bijective() {
            return Err(HomError::NotBijective);
        }
        let mut inv = vec![0usize; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        check_hom(&inv, &self.codomain, &self.domain)
    }
}

/// The law a candidate map broke, with the offending pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomViolation {
    pub law: HomLaw,
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomLaw {
    Additivity,
    Multiplicativity,
}

impl std::fmt::Display for HomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let law = match self.law {
            HomLaw::Additivity => "additivity",
            HomLaw::Multiplicativity => "multiplicativity",
        };
        write!(f, "{law} fails at ({}, {})", self.pair.0, self.pair.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("SHAPE: {0}")]
    Shape(String),
    #[error("HOM_FAIL: {0}")]
    Violation(HomViolation),
    #[error("composition domains do not chain")]
    ChainMismatch,
    #[error("homomorphism is not bijective")]
    NotBijective,
}

/// Checks a total candidate map and derives the injectivity/unitality flags,
/// or returns the first violating pair in row-major scan order.
pub fn check_hom(
    map: &[usize],
    domain: &FiniteRing,
    codomain: &FiniteRing,
) -> Result<RingHom, HomError> {
    let n = domain.order();
    if map.len() != n {
        return Err(HomError::Shape(format!(
            "map has {} entries, domain has order {n}",
            map.len()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= codomain.order()) {
        return Err(HomError::Shape(format!(
            "image {bad} out of range 0..{}",
            codomain.order()
        )));
    }
    for x in 0..n {
        for y in 0..n {
            if map[domain.add(x, y)] != codomain.add(map[x], map[y]) {
                return Err(HomError::Violation(HomViolation {
                    law: HomLaw::Additivity,
                    pair: (x, y),
                }));
            }
            if map[domain.mul(x, y)] != codomain.mul(map[x], map[y]) {
                return Err(HomError::Violation(HomViolation {
                    law: HomLaw::Multiplicativity,
                    pair: (x, y),
                }));
            }
        }
    }
    let mut seen = vec![false; codomain.order()];
    let mut injective = true;
    for &v in map {
        if seen[v] {
            injective = false;
            break;
        }
        seen[v] = true;
    }
    let unital = match (domain.unit(), codomain.unit()) {
        (Some(u), Some(v)) => map[u] == v,
        _ => false,
    };
    Ok(RingHom {
        domain: domain.clone(),
        codomain: codomain.clone(),
        map: map.to_vec(),
        injective,
        unital,
    })
}

/// Constraints for homomorphism enumeration.
///
/// `fixed_points` pins images of individual elements (used to express
/// "restricts to the identity on an embedded copy"). `require_unital`
/// keeps only maps sending unit to unit; if either ring lacks a unit, no
/// map qualifies.
#[derive(Debug, Clone, Default)]
pub struct HomConstraint {
    pub fixed_points: Vec<(usize, usize)>,
    pub require_unital: bool,
    pub require_injective: bool,
}

impl HomConstraint {
    pub fn fixing(fixed_points: Vec<(usize, usize)>) -> Self {
        HomConstraint {
            fixed_points,
            ..Default::default()
        }
    }

    pub fn unital(mut self) -> Self {
        self.require_unital = true;
        self
    }

    pub fn injective(mut self) -> Self {
        self.require_injective = true;
        self
    }
}

/// A smallest additive generating set, found by trying element combinations
/// of increasing size in lexicographic order.
pub fn minimal_generating_set(ring: &FiniteRing) -> Vec<usize> {
    let n = ring.order();
    let generates = |gens: &[usize]| -> bool {
        let mut in_closure = vec![false; n];
        in_closure[0] = true;
        let mut members = vec![0usize];
        for &g in gens {
            if !in_closure[g] {
                in_closure[g] = true;
                members.push(g);
            }
        }
        let mut qi = 0;
        while qi < members.len() {
            let x = members[qi];
            qi += 1;
            let mut k = 0;
            while k < members.len() {
                let z = ring.add(x, members[k]);
                k += 1;
                if !in_closure[z] {
                    in_closure[z] = true;
                    members.push(z);
                }
            }
        }
        members.len() == n
    };
    if generates(&[]) {
        return Vec::new();
    }
    use itertools::Itertools;
    for k in 1..n {
        for combo in (1..n).combinations(k) {
            if generates(&combo) {
                return combo;
            }
        }
    }
    unreachable!("the full carrier generates the ring")
}

struct HomSearch<'a> {
    domain: &'a FiniteRing,
    codomain: &'a FiniteRing,
    gens: Vec<usize>,
    constraint: &'a HomConstraint,
    stop_after_first: bool,
    results: Vec<Vec<usize>>,
}

impl HomSearch<'_> {
    /// Extends the partial map additively to a fixed point, then checks the
    /// multiplicative law, pinned points, injectivity, and unitality on
    /// everything determined so far. `false` means the branch is dead.
    fn propagate(&self, partial: &mut [Option<usize>], defined: &mut Vec<usize>) -> bool {
        let dom = self.domain;
        let cod = self.codomain;
        let mut qi = 0;
        while qi < defined.len() {
            let x = defined[qi];
            qi += 1;
            let fx = partial[x].expect("defined elements have images");
            let mut k = 0;
            while k < defined.len() {
                let y = defined[k];
                k += 1;
                let z = dom.add(x, y);
                let img = cod.add(fx, partial[y].expect("defined elements have images"));
                match partial[z] {
                    None => {
                        partial[z] = Some(img);
                        defined.push(z);
                    }
                    Some(v) => {
                        if v != img {
                            return false;
                        }
                    }
                }
            }
        }
        for &x in defined.iter() {
            let fx = partial[x].unwrap();
            for &y in defined.iter() {
                if let Some(v) = partial[dom.mul(x, y)] {
                    if cod.mul(fx, partial[y].unwrap()) != v {
                        return false;
                    }
                }
            }
        }
        for &(x, v) in &self.constraint.fixed_points {
            if let Some(w) = partial[x] {
                if w != v {
                    return false;
                }
            }
        }
        if self.constraint.require_unital {
            match (dom.unit(), cod.unit()) {
                (Some(u), Some(v)) => {
                    if let Some(w) = partial[u] {
                        if w != v {
                            return false;
                        }
                    }
                }
                _ => return false,
            }
        }
        if self.constraint.require_injective {
            let mut seen = vec![false; cod.order()];
            for &x in defined.iter() {
                let fx = partial[x].unwrap();
                if seen[fx] {
                    return false;
                }
                seen[fx] = true;
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize, partial: &[Option<usize>], defined: &[usize]) {
        if self.stop_after_first && !self.results.is_empty() {
            return;
        }
        if depth == self.gens.len() {
            debug_assert_eq!(defined.len(), self.domain.order());
            let map: Vec<usize> = partial.iter().map(|v| v.expect("map is total")).collect();
            self.results.push(map);
            return;
        }
        let gen = self.gens[depth];
        for s in 0..self.codomain.order() {
            let mut p2 = partial.to_vec();
            let mut d2 = defined.to_vec();
            p2[gen] = Some(s);
            d2.push(gen);
            if self.propagate(&mut p2, &mut d2) {
                self.dfs(depth + 1, &p2, &d2);
            }
        }
    }

    fn run(mut self) -> Vec<Vec<usize>> {
        if self.constraint.require_unital
            && (self.domain.unit().is_none() || self.codomain.unit().is_none())
        {
            return Vec::new();
        }
        for &(x, v) in &self.constraint.fixed_points {
            assert!(x < self.domain.order(), "fixed point {x} out of range");
            assert!(v < self.codomain.order(), "fixed image {v} out of range");
        }
        let mut partial = vec![None; self.domain.order()];
        partial[0] = Some(0);
        let mut defined = vec![0usize];
        if !self.propagate(&mut partial, &mut defined) {
            return Vec::new();
        }
        self.dfs(0, &partial, &defined);
        self.results.sort();
        self.results
    }
}

/// All homomorphisms `domain → codomain` satisfying the constraint, sorted
/// by their image vectors.
pub fn enumerate_homs(
    domain: &FiniteRing,
    codomain: &FiniteRing,
    constraint: &HomConstraint,
) -> Result<Vec<RingHom>, BoundExceeded> {
    enumerate_homs_bounded(domain, codomain, constraint, DEFAULT_HOM_BOUND)
}

pub fn enumerate_homs_bounded(
    domain: &FiniteRing,
    codomain: &FiniteRing,
    constraint: &HomConstraint,
    bound: usize,
) -> Result<Vec<RingHom>, BoundExceeded> {
    if domain.order() > bound {
        return Err(BoundExceeded {
            order: domain.order(),
            bound,
        });
    }
    let search = HomSearch {
        domain,
        codomain,
        gens: minimal_generating_set(domain),
        constraint,
        stop_after_first: false,
        results: Vec::new(),
    };
    let maps = search.run();
    Ok(maps
        .into_iter()
        .map(|m| check_hom(&m, domain, codomain).expect("search output satisfies both laws"))
        .collect())
}

/// A bijective homomorphism `a → b` if one exists.
///
/// Within the canonicalization bound the test is canonical-form equality
/// (with the witness recovered from the two relabelings); above it, a
/// direct generator-image search runs up to [`DEFAULT_ISO_BOUND`]. A search
/// beyond that bound is refused rather than silently truncated.
pub fn find_isomorphism(
    a: &FiniteRing,
    b: &FiniteRing,
) -> Result<Option<RingHom>, BoundExceeded> {
    if a.order() != b.order() {
        return Ok(None);
    }
    if a.additive_exponent() != b.additive_exponent()
        || a.unit().is_some() != b.unit().is_some()
    {
        return Ok(None);
    }
    let mut orders_a: Vec<usize> = a.elements().map(|x| a.additive_order(x)).collect();
    let mut orders_b: Vec<usize> = b.elements().map(|x| b.additive_order(x)).collect();
    orders_a.sort_unstable();
    orders_b.sort_unstable();
    if orders_a != orders_b {
        return Ok(None);
    }

    if a.order() <= DEFAULT_CANON_BOUND {
        let ca = a.canonical_form().expect("within canon bound");
        let cb = b.canonical_form().expect("within canon bound");
        if ca.ring != cb.ring {
            return Ok(None);
        }
        let mut inv_b = vec![0usize; b.order()];
        for (old, &new) in cb.relabeling.iter().enumerate() {
            inv_b[new] = old;
        }
        let map: Vec<usize> = (0..a.order()).map(|x| inv_b[ca.relabeling[x]]).collect();
        let hom = check_hom(&map, a, b).expect("composed relabelings form an isomorphism");
        debug_assert!(hom.is_bijective());
        return Ok(Some(hom));
    }
    if a.order() > DEFAULT_ISO_BOUND {
        return Err(BoundExceeded {
            order: a.order(),
            bound: DEFAULT_ISO_BOUND,
        });
    }
    let constraint = HomConstraint {
        require_injective: true,
        ..Default::default()
    };
    let search = HomSearch {
        domain: a,
        codomain: b,
        gens: minimal_generating_set(a),
        constraint: &constraint,
        stop_after_first: true,
        results: Vec::new(),
    };
    let maps = search.run();
    Ok(maps.into_iter().next().map(|m| {
        let hom = check_hom(&m, a, b).expect("search output satisfies both laws");
        debug_assert!(hom.is_bijective());
        hom
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> FiniteRing {
        FiniteRing::cyclic(2).direct_product(&FiniteRing::cyclic(2))
    }

    #[test]
    fn identity_is_an_injective_hom() {
        let z4 = FiniteRing::cyclic(4);
        let id = RingHom::identity(&z4);
        assert!(id.is_injective());
        assert!(id.is_unital());
    }

    #[test]
    fn reduction_mod_two_is_a_non_injective_hom() {
        let z4 = FiniteRing::cyclic(4);
        let z2 = FiniteRing::cyclic(2);
        let hom = check_hom(&[0, 1, 0, 1], &z4, &z2).unwrap();
        assert!(!hom.is_injective());
        assert!(hom.is_unital());
    }

    #[test]
    fn violations_carry_a_replayable_pair() {
        let z4 = FiniteRing::cyclic(4);
        let z2 = FiniteRing::cyclic(2);
        // x ↦ x mod 2 with one entry corrupted.
        let err = check_hom(&[0, 1, 1, 1], &z4, &z2).unwrap_err();
        let HomError::Violation(v) = err else {
            panic!("expected violation");
        };
        let (x, y) = v.pair;
        let map = [0usize, 1, 1, 1];
        match v.law {
            HomLaw::Additivity => {
                assert_ne!(map[z4.add(x, y)], z2.add(map[x], map[y]));
            }
            HomLaw::Multiplicativity => {
                assert_ne!(map[z4.mul(x, y)], z2.mul(map[x], map[y]));
            }
        }
    }

    #[test]
    fn minimal_generators_of_small_rings() {
        assert_eq!(minimal_generating_set(&FiniteRing::cyclic(4)), vec![1]);
        assert_eq!(minimal_generating_set(&klein()), vec![1, 2]);
        assert_eq!(
            minimal_generating_set(&FiniteRing::zero_ring(&[1])),
            Vec::<usize>::new()
        );
        assert_eq!(
            minimal_generating_set(&FiniteRing::zero_ring(&[2, 2, 2])).len(),
            3
        );
    }

    #[test]
    fn z2_to_z2_has_exactly_two_homs() {
        let z2 = FiniteRing::cyclic(2);
        let homs = enumerate_homs(&z2, &z2, &HomConstraint::default()).unwrap();
        let maps: Vec<&[usize]> = homs.iter().map(|h| h.map()).collect();
        assert_eq!(maps, vec![&[0usize, 0][..], &[0usize, 1][..]]);
    }

    #[test]
    fn z2_to_z4_has_only_the_zero_hom() {
        let z2 = FiniteRing::cyclic(2);
        let z4 = FiniteRing::cyclic(4);
        let homs = enumerate_homs(&z2, &z4, &HomConstraint::default()).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].map(), &[0, 0]);
    }

    #[test]
    fn fixing_every_point_leaves_the_identity() {
        let r = klein();
        let constraint = HomConstraint::fixing((0..4).map(|x| (x, x)).collect());
        let homs = enumerate_homs(&r, &r, &constraint).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].map(), &[0, 1, 2, 3]);
    }

    #[test]
    fn zero_map_is_always_enumerated() {
        for (a, b) in [
            (FiniteRing::cyclic(4), klein()),
            (klein(), FiniteRing::cyclic(8)),
            (FiniteRing::zero_ring(&[4]), FiniteRing::cyclic(2)),
        ] {
            let homs = enumerate_homs(&a, &b, &HomConstraint::default()).unwrap();
            assert!(homs.iter().any(|h| h.map().iter().all(|&v| v == 0)));
        }
    }

    #[test]
    fn composition_of_enumerated_homs_is_a_hom() {
        let z4 = FiniteRing::cyclic(4);
        let z2 = FiniteRing::cyclic(2);
        let first = enumerate_homs(&z4, &z2, &HomConstraint::default()).unwrap();
        let second = enumerate_homs(&z2, &z2, &HomConstraint::default()).unwrap();
        for f in &first {
            for g in &second {
                f.compose(g).expect("chained homs compose to a hom");
            }
        }
    }

    #[test]
    fn hom_bound_is_enforced() {
        let big = FiniteRing::zero_ring(&[17]);
        let z2 = FiniteRing::cyclic(2);
        assert!(enumerate_homs(&big, &z2, &HomConstraint::default()).is_err());
    }

    #[test]
    fn ring_is_isomorphic_to_itself() {
        for r in [FiniteRing::cyclic(6), klein(), FiniteRing::zero_ring(&[2, 4])] {
            let iso = find_isomorphism(&r, &r).unwrap().expect("self-isomorphic");
            assert!(iso.is_bijective());
        }
    }

    #[test]
    fn z4_and_klein_are_not_isomorphic() {
        let z4 = FiniteRing::cyclic(4);
        assert_eq!(find_isomorphism(&z4, &klein()).unwrap(), None);
    }

    #[test]
    fn isomorphism_agrees_with_canonical_forms_at_small_order() {
        let rings = [
            FiniteRing::cyclic(4),
            klein(),
            FiniteRing::zero_ring(&[4]),
            FiniteRing::zero_ring(&[2, 2]),
            FiniteRing::cyclic(8),
        ];
        for a in &rings {
            for b in &rings {
                let by_canon = a.order() == b.order()
                    && a.canonical_form().unwrap().ring == b.canonical_form().unwrap().ring;
                let by_search = find_isomorphism(a, b).unwrap().is_some();
                assert_eq!(by_canon, by_search);
            }
        }
    }

    #[test]
    fn direct_search_beyond_canon_bound_finds_witness() {
        // Two relabelings of the same order-9 ring.
        let z9 = FiniteRing::cyclic(3).direct_product(&FiniteRing::cyclic(3));
        let mut perm: Vec<usize> = (0..9).collect();
        perm.swap(1, 7);
        perm.swap(2, 5);
        let relabeled = z9.relabel(&perm);
        let iso = find_isomorphism(&z9, &relabeled)
            .unwrap()
            .expect("relabelings are isomorphic");
        assert!(iso.is_bijective());
    }
}
