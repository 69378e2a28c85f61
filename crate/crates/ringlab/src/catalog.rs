//! Exhaustive generation of small rings up to isomorphism, plus the named
//! order-16 constructions injected alongside them.
//!
//! For each abelian group, ring multiplications are enumerated through
//! structure constants on the group's cyclic generators: bilinearity
//! determines the full table from the `k²` generator products, so
//! distributivity holds by construction and associativity is checked on
//! generator triples as soon as a partial assignment determines them.
//! Survivors are deduplicated by canonical form.
//!
//! Full enumeration is capped at order 8; order-16 ambients (the 2×2
//! matrix ring over F₂, cyclic and product rings, unitizations) are built
//! directly and injected, since raw enumeration at 16 is not desk-scale.

use crate::extension::dorroh_extension;
use crate::hom::find_isomorphism;
use crate::ring::{BoundExceeded, FiniteRing, DEFAULT_CANON_BOUND};
use crate::subset::Subset;
use crate::textio;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::LazyLock;
use thiserror::Error;

/// Default cap on full ring enumeration.
pub const DEFAULT_GENERATION_BOUND: usize = 8;

/// Cap on abelian-group enumeration.
pub const DEFAULT_GROUP_BOUND: usize = 16;

/// An abelian group presented as a product of cyclic prime-power factors,
/// with row-major mixed-radix element encoding (first factor most
/// significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<usize>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(mut factors: Vec<usize>) -> AbelianGroup {
        factors.retain(|&f| f > 1);
        let order = factors.iter().product::<usize>().max(1);
        AbelianGroup { factors, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn digits(&self, mut x: usize) -> Vec<usize> {
        let mut d = vec![0; self.factors.len()];
        for (i, &f) in self.factors.iter().enumerate().rev() {
            d[i] = x % f;
            x /= f;
        }
        d
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        self.factors
            .iter()
            .zip(digits)
            .fold(0, |x, (&f, &d)| x * f + d)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<usize> = da
            .iter()
            .zip(&db)
            .zip(&self.factors)
            .map(|((&x, &y), &f)| (x + y) % f)
            .collect();
        self.encode(&sum)
    }

    /// `t`-fold sum, computed digitwise.
    pub fn scalar(&self, t: usize, x: usize) -> usize {
        let d = self.digits(x);
        let scaled: Vec<usize> = d
            .iter()
            .zip(&self.factors)
            .map(|(&v, &f)| (t * v) % f)
            .collect();
        self.encode(&scaled)
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.digits(x)
            .iter()
            .zip(&self.factors)
            .fold(1, |o, (&d, &f)| crate::ring::lcm(o, f / crate::ring::gcd(d, f)))
    }

    /// Indices of the unit vectors, one generator per cyclic factor.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.factors.len())
            .map(|i| {
                let mut d = vec![0; self.factors.len()];
                d[i] = 1;
                self.encode(&d)
            })
            .collect()
    }

    pub fn add_table(&self) -> Vec<u16> {
        let n = self.order;
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.add(a, b) as u16;
            }
        }
        table
    }
}

fn prime_factorization(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One abelian group per isomorphism class of the given order, from the
/// integer partitions of the prime-power multiplicities. Sorted by their
/// ascending factor lists.
pub fn enumerate_abelian_groups(order: usize) -> Result<Vec<AbelianGroup>, BoundExceeded> {
    if order > DEFAULT_GROUP_BOUND {
        return Err(BoundExceeded {
            order,
            bound: DEFAULT_GROUP_BOUND,
        });
    }
    assert!(order >= 1);
    let mut factor_lists: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in prime_factorization(order) {
        let mut next = Vec::new();
        for partition in partitions(e) {
            for base in &factor_lists {
                let mut f = base.clone();
                f.extend(partition.iter().map(|&a| p.pow(a as u32)));
                next.push(f);
            }
        }
        factor_lists = next;
    }
    let mut groups: Vec<AbelianGroup> = factor_lists
        .into_iter()
        .map(|mut f| {
            f.sort_unstable();
            AbelianGroup::new(f)
        })
        .collect();
    groups.sort_by(|a, b| a.factors.cmp(&b.factors));
    groups.dedup();
    Ok(groups)
}

/// Structure-constant search state over one abelian group.
struct RingSearch<'g> {
    group: &'g AbelianGroup,
    k: usize,
    allowed: Vec<Vec<usize>>,
    digits: Vec<Vec<usize>>,
    add_table: Vec<u16>,
}

impl RingSearch<'_> {
    fn new(group: &AbelianGroup) -> RingSearch<'_> {
        let k = group.factors().len();
        let n = group.order();
        let digits: Vec<Vec<usize>> = (0..n).map(|x| group.digits(x)).collect();
        // g_i·g_j must be annihilated by both generator orders, so its
        // additive order divides gcd(d_i, d_j).
        let mut allowed = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let cap = crate::ring::gcd(group.factors()[i], group.factors()[j]);
                allowed.push(
                    (0..n)
                        .filter(|&x| cap.is_multiple_of(group.element_order(x)))
                        .collect(),
                );
            }
        }
        RingSearch {
            group,
            k,
            allowed,
            digits,
            add_table: group.add_table(),
        }
    }

    /// Checks every generator triple whose expansion is fully determined by
    /// the current partial assignment.
    fn triples_hold(&self, consts: &[Option<usize>]) -> bool {
        let k = self.k;
        let g = self.group;
        for a in 0..k {
            for b in 0..k {
                let Some(u) = consts[a * k + b] else { continue };
                for c in 0..k {
                    let Some(v) = consts[b * k + c] else { continue };
                    // (g_a·g_b)·g_c expands over the digits of u against
                    // column c; g_a·(g_b·g_c) over the digits of v against
                    // row a.
                    let mut left = Some(0usize);
                    for (m, &dm) in self.digits[u].iter().enumerate() {
                        if dm == 0 {
                            continue;
                        }
                        match consts[m * k + c] {
                            Some(cmc) => {
                                left = left.map(|acc| g.add(acc, g.scalar(dm, cmc)));
                            }
                            None => {
                                left = None;
                                break;
                            }
                        }
                    }
                    let Some(left) = left else { continue };
                    let mut right = Some(0usize);
                    for (m, &dm) in self.digits[v].iter().enumerate() {
                        if dm == 0 {
                            continue;
                        }
                        match consts[a * k + m] {
                            Some(cam) => {
                                right = right.map(|acc| g.add(acc, g.scalar(dm, cam)));
                            }
                            None => {
                                right = None;
                                break;
                            }
                        }
                    }
                    let Some(right) = right else { continue };
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&self, pos: usize, consts: &mut Vec<Option<usize>>, out: &mut Vec<FiniteRing>) {
        if pos == self.k * self.k {
            out.push(self.build(consts));
            return;
        }
        for &c in &self.allowed[pos] {
            consts[pos] = Some(c);
            if self.triples_hold(consts) {
                self.dfs(pos + 1, consts, out);
            }
        }
        consts[pos] = None;
    }

    /// Bilinear extension of a complete constant assignment.
    fn build(&self, consts: &[Option<usize>]) -> FiniteRing {
        let g = self.group;
        let n = g.order();
        let k = self.k;
        let mut mul = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                let mut acc = 0usize;
                for i in 0..k {
                    let a = self.digits[x][i];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..k {
                        let b = self.digits[y][j];
                        if b == 0 {
                            continue;
                        }
                        let c = consts[i * k + j].expect("assignment is complete");
                        acc = g.add(acc, g.scalar(a * b, c));
                    }
                }
                mul[x * n + y] = acc as u16;
            }
        }
        FiniteRing::from_flat(n, self.add_table.clone(), mul)
            .expect("bilinear tables associative on generators are rings")
    }
}

/// All raw (not yet deduplicated) ring multiplications on one group.
fn enumerate_on_group(group: &AbelianGroup) -> Vec<FiniteRing> {
    let search = RingSearch::new(group);
    let k = search.k;
    if k == 0 {
        return vec![FiniteRing::zero_ring(&[1])];
    }
    search.allowed[0]
        .par_iter()
        .flat_map_iter(|&c0| {
            let mut consts: Vec<Option<usize>> = vec![None; k * k];
            consts[0] = Some(c0);
            let mut out = Vec::new();
            if search.triples_hold(&consts) {
                search.dfs(1, &mut consts, &mut out);
            }
            out
        })
        .collect()
}

/// Property annotations carried by a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntryProps {
    pub idempotent: bool,
    pub unital: bool,
    pub non_degenerate: bool,
}

/// A ring plus its computed annotations and a stable table-hash id.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub ring: FiniteRing,
    pub props: EntryProps,
    pub ideals: Vec<Subset>,
    pub id: String,
}

/// Stable identifier: a truncated SHA-256 of the serialized tables.
pub fn ring_id(ring: &FiniteRing) -> String {
    let digest = Sha256::digest(textio::write_ring(ring).as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Computes all annotations for one ring.
pub fn annotate_entry(ring: &FiniteRing) -> Result<CatalogEntry, BoundExceeded> {
    let ideals = ring.enumerate_ideals()?;
    Ok(CatalogEntry {
        props: EntryProps {
            idempotent: ring.is_idempotent_ring(),
            unital: ring.has_unit(),
            non_degenerate: ring.is_non_degenerate(),
        },
        ideals,
        id: ring_id(ring),
        ring: ring.clone(),
    })
}

/// All rings of the given order up to isomorphism, in canonical form,
/// sorted by their canonical tables.
pub fn generate_rings(order: usize) -> Result<Vec<CatalogEntry>, BoundExceeded> {
    generate_rings_bounded(order, DEFAULT_GENERATION_BOUND)
}

pub fn generate_rings_bounded(
    order: usize,
    bound: usize,
) -> Result<Vec<CatalogEntry>, BoundExceeded> {
    if order > bound {
        return Err(BoundExceeded { order, bound });
    }
    let canon_bound = order.max(DEFAULT_CANON_BOUND);
    let groups = enumerate_abelian_groups(order)?;
    let raw: Vec<FiniteRing> = groups.iter().flat_map(enumerate_on_group).collect();
    let canonical: Vec<FiniteRing> = raw
        .par_iter()
        .map(|r| {
            r.canonical_form_bounded(canon_bound)
                .expect("generation stays within the canonicalization bound")
                .ring
        })
        .collect();
    let mut distinct: BTreeMap<(Vec<u16>, Vec<u16>), FiniteRing> = BTreeMap::new();
    for ring in canonical {
        distinct
            .entry((ring.add_table().to_vec(), ring.mul_table().to_vec()))
            .or_insert(ring);
    }
    distinct.into_values().map(|r| annotate_entry(&r)).collect()
}

/// The ring of 2×2 matrices over F₂, with `[[a,b],[c,d]]` encoded as
/// `a + 2b + 4c + 8d`.
pub fn matrix_ring_m2_f2() -> FiniteRing {
    let n = 16;
    let bits = |x: usize| [x & 1, (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1];
    let mut add = vec![vec![0usize; n]; n];
    let mut mul = vec![vec![0usize; n]; n];
    for x in 0..n {
        let [a1, b1, c1, d1] = bits(x);
        for y in 0..n {
            add[x][y] = x ^ y;
            let [a2, b2, c2, d2] = bits(y);
            let a = (a1 * a2 + b1 * c2) % 2;
            let b = (a1 * b2 + b1 * d2) % 2;
            let c = (c1 * a2 + d1 * c2) % 2;
            let d = (c1 * b2 + d1 * d2) % 2;
            mul[x][y] = a + 2 * b + 4 * c + 8 * d;
        }
    }
    FiniteRing::from_tables(&add, &mul).expect("M2(F2) is a ring")
}

/// The named order-16 rings injected into the catalog: the matrix ring,
/// cyclic and direct-product rings, and Dorroh unitizations of small zero
/// rings. Deduplicated by isomorphism, sorted by id.
pub fn injected_constructions() -> Vec<FiniteRing> {
    let z2 = FiniteRing::cyclic(2);
    let z4 = FiniteRing::cyclic(4);
    let z8 = FiniteRing::cyclic(8);
    let candidates = vec![
        matrix_ring_m2_f2(),
        FiniteRing::cyclic(16),
        z8.direct_product(&z2),
        z4.direct_product(&z4),
        z4.direct_product(&z2).direct_product(&z2),
        z2.direct_product(&z2)
            .direct_product(&z2)
            .direct_product(&z2),
        dorroh_extension(&FiniteRing::zero_ring(&[2]), Some(8))
            .expect("8 is a multiple of the exponent 2")
            .ring()
            .clone(),
        dorroh_extension(&FiniteRing::zero_ring(&[2, 2]), Some(4))
            .expect("4 is a multiple of the exponent 2")
            .ring()
            .clone(),
        dorroh_extension(&FiniteRing::zero_ring(&[4]), Some(4))
            .expect("4 is the exponent")
            .ring()
            .clone(),
    ];
    let mut kept: Vec<FiniteRing> = Vec::new();
    for r in candidates {
        let fresh = kept.iter().all(|k| {
            find_isomorphism(k, &r)
                .expect("order 16 is within the direct-search bound")
                .is_none()
        });
        if fresh {
            kept.push(r);
        }
    }
    kept.sort_by_key(ring_id);
    kept
}

static FULL_CATALOG: LazyLock<Vec<CatalogEntry>> = LazyLock::new(|| {
    build_catalog(DEFAULT_GROUP_BOUND).expect("default bounds cover the full catalog")
});

/// The shared instance pool: every ring of order ≤ 8 up to isomorphism plus
/// the injected order-16 constructions, sorted by (order, id).
pub fn full_catalog() -> &'static [CatalogEntry] {
    &FULL_CATALOG
}

/// Rings of [`full_catalog`] without annotations, in the same order.
pub fn full_catalog_rings() -> Vec<FiniteRing> {
    full_catalog().iter().map(|e| e.ring.clone()).collect()
}

/// Builds a catalog with enumerated orders up to `min(max_order, 8)` and,
/// when `max_order ≥ 16`, the injected constructions.
pub fn build_catalog(max_order: usize) -> Result<Vec<CatalogEntry>, BoundExceeded> {
    let mut entries = Vec::new();
    for order in 1..=max_order.min(DEFAULT_GENERATION_BOUND) {
        entries.extend(generate_rings(order)?);
    }
    if max_order >= 16 {
        for ring in injected_constructions() {
            entries.push(annotate_entry(&ring)?);
        }
    }
    entries.sort_by(|a, b| (a.ring.order(), &a.id).cmp(&(b.ring.order(), &b.id)));
    Ok(entries)
}

#[derive(Debug, Error)]
pub enum CatalogIoError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("index: {0}")]
    Index(String),
    #[error(transparent)]
    Text(#[from] textio::TextError),
    #[error(transparent)]
    Bound(#[from] BoundExceeded),
}

fn flags_string(props: &EntryProps) -> String {
    let mut flags = Vec::new();
    if props.idempotent {
        flags.push("idempotent");
    }
    if props.unital {
        flags.push("unital");
    }
    if props.non_degenerate {
        flags.push("non_degenerate");
    }
    if flags.is_empty() {
        "-".to_string()
    } else {
        flags.join(",")
    }
}

/// Writes a catalog directory: one `<id>.ring` file per entry plus an
/// `index` file with `<id> <order> <flags> <filename>` lines.
pub fn write_catalog(dir: &Path, entries: &[CatalogEntry]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut index = String::new();
    for e in entries {
        let filename = format!("{}.ring", e.id);
        std::fs::write(dir.join(&filename), textio::write_ring(&e.ring))?;
        index.push_str(&format!(
            "{} {} {} {}\n",
            e.id,
            e.ring.order(),
            flags_string(&e.props),
            filename
        ));
    }
    std::fs::write(dir.join("index"), index)
}

/// Reads a catalog directory back, revalidating every ring and recomputing
/// every annotation; stored ids must match the recomputed ones.
pub fn read_catalog(dir: &Path) -> Result<Vec<CatalogEntry>, CatalogIoError> {
    let index = std::fs::read_to_string(dir.join("index"))?;
    let mut entries = Vec::new();
    for (lineno, line) in index.lines().enumerate() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [id, order, _flags, filename] = parts[..] else {
            return Err(CatalogIoError::Index(format!(
                "line {} has {} fields, expected 4",
                lineno + 1,
                parts.len()
            )));
        };
        let text = std::fs::read_to_string(dir.join(filename))?;
        let ring = textio::parse_ring(&text)?;
        if order.parse() != Ok(ring.order()) {
            return Err(CatalogIoError::Index(format!(
                "line {}: declared order {order} does not match the ring file",
                lineno + 1
            )));
        }
        let entry = annotate_entry(&ring)?;
        if entry.id != id {
            return Err(CatalogIoError::Index(format!(
                "line {}: id {id} does not match the ring tables ({})",
                lineno + 1,
                entry.id
            )));
        }
        entries.push(entry);
    }
    Ok(entries)
}

/// Canonicalizes within the bound; beyond it the tables are kept as given.
pub fn normal_form_for_catalog(ring: &FiniteRing) -> FiniteRing {
    if ring.order() <= DEFAULT_CANON_BOUND {
        ring.canonical_form().expect("within bound").ring
    } else {
        ring.clone()
    }
}

/// Canonicalizes, deduplicates against the existing directory (by id within
/// the canonicalization bound, by isomorphism search above it), annotates,
/// and rewrites the index. Returns the entry and whether it was new.
pub fn add_to_catalog(
    dir: &Path,
    ring: &FiniteRing,
) -> Result<(CatalogEntry, bool), CatalogIoError> {
    let normalized = normal_form_for_catalog(ring);
    let entry = annotate_entry(&normalized)?;
    let mut entries = if dir.join("index").exists() {
        read_catalog(dir)?
    } else {
        Vec::new()
    };
    let duplicate = entries.iter().any(|e| {
        if e.id == entry.id {
            return true;
        }
        if e.ring.order() != normalized.order() || normalized.order() <= DEFAULT_CANON_BOUND {
            return false;
        }
        matches!(find_isomorphism(&e.ring, &normalized), Ok(Some(_)))
    });
    if !duplicate {
        entries.push(entry.clone());
        entries.sort_by(|a, b| (a.ring.order(), &a.id).cmp(&(b.ring.order(), &b.id)));
        write_catalog(dir, &entries)?;
    }
    Ok((entry, !duplicate))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_group_counts_match_partition_theory() {
        for (order, count) in [(1, 1), (2, 1), (4, 2), (6, 1), (8, 3), (12, 2), (16, 5)] {
            assert_eq!(
                enumerate_abelian_groups(order).unwrap().len(),
                count,
                "order {order}"
            );
        }
    }

    #[test]
    fn group_arithmetic_is_consistent() {
        let g = AbelianGroup::new(vec![2, 4]);
        assert_eq!(g.order(), 8);
        for x in 0..8 {
            assert_eq!(g.add(0, x), x);
            assert_eq!(g.scalar(0, x), 0);
            assert_eq!(g.scalar(g.element_order(x), x), 0);
        }
        assert_eq!(g.generators(), vec![4, 1]);
    }

    #[test]
    fn exactly_two_rings_of_order_two() {
        let entries = generate_rings(2).unwrap();
        assert_eq!(entries.len(), 2);
        let unital: Vec<bool> = entries.iter().map(|e| e.props.unital).collect();
        assert!(unital.contains(&true) && unital.contains(&false));
    }

    #[test]
    fn prime_orders_carry_exactly_two_rings() {
        for p in [2, 3, 5, 7] {
            assert_eq!(generate_rings(p).unwrap().len(), 2, "order {p}");
        }
    }

    #[test]
    fn generated_entries_are_pairwise_distinct() {
        for order in 1..=6 {
            let entries = generate_rings(order).unwrap();
            for (i, a) in entries.iter().enumerate() {
                for b in &entries[i + 1..] {
                    assert_ne!(a.id, b.id);
                    assert_ne!(a.ring, b.ring);
                }
            }
        }
    }

    #[test]
    fn generated_entries_equal_their_canonical_form() {
        for order in 1..=6 {
            for e in generate_rings(order).unwrap() {
                assert_eq!(e.ring.canonical_form().unwrap().ring, e.ring);
            }
        }
    }

    #[test]
    fn generation_bound_is_enforced() {
        assert!(generate_rings(9).is_err());
        assert!(generate_rings_bounded(9, 9).is_ok());
    }

    #[test]
    fn annotations_of_small_rings() {
        let z2 = annotate_entry(&FiniteRing::cyclic(2)).unwrap();
        assert!(z2.props.idempotent && z2.props.unital && z2.props.non_degenerate);
        assert_eq!(z2.ideals.len(), 2);
        let zero2 = annotate_entry(&FiniteRing::zero_ring(&[2])).unwrap();
        assert!(!zero2.props.idempotent && !zero2.props.unital && !zero2.props.non_degenerate);
        let klein =
            annotate_entry(&FiniteRing::cyclic(2).direct_product(&FiniteRing::cyclic(2))).unwrap();
        assert!(klein.props.idempotent && klein.props.unital && klein.props.non_degenerate);
        assert_eq!(klein.ideals.len(), 4);
    }

    #[test]
    fn matrix_ring_is_simple_and_unital() {
        let m2 = matrix_ring_m2_f2();
        assert_eq!(m2.order(), 16);
        // unit = [[1,0],[0,1]] = 1 + 8.
        assert_eq!(m2.unit(), Some(9));
        let ideals = m2.enumerate_ideals().unwrap();
        assert_eq!(ideals.len(), 2);
        assert_eq!(ideals[0], Subset::zero(16));
        assert_eq!(ideals[1], Subset::full(16));
    }

    #[test]
    fn injected_constructions_are_order_16_and_distinct() {
        let list = injected_constructions();
        assert!(list.len() >= 5);
        for r in &list {
            assert_eq!(r.order(), 16);
        }
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                assert!(find_isomorphism(a, b).unwrap().is_none());
            }
        }
        let m2_id = ring_id(&matrix_ring_m2_f2());
        assert!(list.iter().any(|r| ring_id(r) == m2_id));
    }

    #[test]
    fn catalog_round_trips_through_a_directory() {
        let dir = tempfile::tempdir().unwrap();
        let entries = build_catalog(4).unwrap();
        write_catalog(dir.path(), &entries).unwrap();
        let back = read_catalog(dir.path()).unwrap();
        assert_eq!(back.len(), entries.len());
        for (a, b) in entries.iter().zip(&back) {
            assert_eq!(a.ring, b.ring);
            assert_eq!(a.id, b.id);
            assert_eq!(a.props, b.props);
        }
    }

    #[test]
    fn add_to_catalog_dedupes_relabelings() {
        let dir = tempfile::tempdir().unwrap();
        let z4 = FiniteRing::cyclic(4);
        let (_, added) = add_to_catalog(dir.path(), &z4).unwrap();
        assert!(added);
        let relabeled = z4.relabel(&[0, 3, 2, 1]);
        let (_, added_again) = add_to_catalog(dir.path(), &relabeled).unwrap();
        assert!(!added_again, "a relabeling canonicalizes to the same entry");
    }
}
