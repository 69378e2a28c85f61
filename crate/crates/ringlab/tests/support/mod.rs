//! Independent oracles for the acceptance suite.
//!
//! Everything here deliberately avoids the library's own search strategies:
//! ring enumeration fills raw multiplication tables cell by cell instead of
//! going through structure constants, isomorphism is decided by scanning
//! every bijection, multipliers come from the full `|R|^|R|` map space, and
//! ideals from the full subset lattice. Agreement between these and the
//! library is what the cross-oracle criteria check.

use ringlab::catalog::AbelianGroup;
use ringlab::ring::FiniteRing;
use ringlab::subset::Subset;

/// All ring multiplications on the given abelian group, found by assigning
/// table cells in row-major order and pruning on any fully determined
/// distributivity or associativity instance. No bilinearity shortcut.
pub fn raw_table_rings(group: &AbelianGroup) -> Vec<FiniteRing> {
    let n = group.order();
    let add = |a: usize, b: usize| group.add(a, b);

    fn instances_hold(n: usize, add: &dyn Fn(usize, usize) -> usize, m: &[Option<usize>]) -> bool {
        let at = |x: usize, y: usize| m[x * n + y];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    // a·(b+c) = a·b + a·c
                    if let (Some(x), Some(y), Some(z)) = (at(a, add(b, c)), at(a, b), at(a, c)) {
                        if x != add(y, z) {
                            return false;
                        }
                    }
                    // (a+b)·c = a·c + b·c
                    if let (Some(x), Some(y), Some(z)) = (at(add(a, b), c), at(a, c), at(b, c)) {
                        if x != add(y, z) {
                            return false;
                        }
                    }
                    // (a·b)·c = a·(b·c)
                    if let (Some(p), Some(q)) = (at(a, b), at(b, c)) {
                        if let (Some(pc), Some(aq)) = (at(p, c), at(a, q)) {
                            if pc != aq {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn dfs(
        n: usize,
        add: &dyn Fn(usize, usize) -> usize,
        cell: usize,
        m: &mut Vec<Option<usize>>,
        out: &mut Vec<FiniteRing>,
    ) {
        if cell == n * n {
            let mul: Vec<Vec<usize>> = (0..n)
                .map(|i| (0..n).map(|j| m[i * n + j].expect("table complete")).collect())
                .collect();
            let addt: Vec<Vec<usize>> = (0..n)
                .map(|i| (0..n).map(|j| add(i, j)).collect())
                .collect();
            out.push(FiniteRing::from_tables(&addt, &mul).expect("all instances checked"));
            return;
        }
        for v in 0..n {
            m[cell] = Some(v);
            if instances_hold(n, add, m) {
                dfs(n, add, cell + 1, m, out);
            }
        }
        m[cell] = None;
    }

    let mut out = Vec::new();
    dfs(n, &add, 0, &mut vec![None; n * n], &mut out);
    out
}

/// Isomorphism by scanning every zero-fixing bijection.
pub fn isomorphic_by_bijection_scan(a: &FiniteRing, b: &FiniteRing) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    let mut tail: Vec<usize> = (1..n).collect();
    loop {
        let mut perm = vec![0usize; n];
        for (i, &t) in tail.iter().enumerate() {
            perm[i + 1] = t;
        }
        let matches = (0..n).all(|x| {
            (0..n).all(|y| {
                perm[a.add(x, y)] == b.add(perm[x], perm[y])
                    && perm[a.mul(x, y)] == b.mul(perm[x], perm[y])
            })
        });
        if matches {
            return true;
        }
        if !next_tail(&mut tail) {
            return false;
        }
    }
}

fn next_tail(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Keeps one representative per bijection-scan isomorphism class.
pub fn dedupe_by_bijection(rings: Vec<FiniteRing>) -> Vec<FiniteRing> {
    let mut kept: Vec<FiniteRing> = Vec::new();
    for r in rings {
        if !kept.iter().any(|k| isomorphic_by_bijection_scan(k, &r)) {
            kept.push(r);
        }
    }
    kept
}

/// Every pair of self-maps (not assumed additive) satisfying the
/// compatibility law, from the full `|R|^|R| × |R|^|R|` space. Only
/// sensible for orders ≤ 4.
pub fn raw_multiplier_pairs(ring: &FiniteRing) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = ring.order();
    let all_maps: Vec<Vec<usize>> = {
        let count = n.pow(n as u32);
        (0..count)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let digit = code % n;
                        code /= n;
                        digit
                    })
                    .collect()
            })
            .collect()
    };
    let mut pairs = Vec::new();
    for rho in &all_maps {
        for lam in &all_maps {
            let compatible = (0..n)
                .all(|r| (0..n).all(|s| ring.mul(rho[r], s) == ring.mul(r, lam[s])));
            if compatible {
                pairs.push((rho.clone(), lam.clone()));
            }
        }
    }
    pairs
}

/// Two-sided ideals by scanning every subset of the carrier.
pub fn naive_ideals(ring: &FiniteRing) -> Vec<Subset> {
    let n = ring.order();
    assert!(n <= 20, "subset scan is 2^n");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| (mask >> i) & 1 == 1).collect();
        if !members.contains(&0) {
            continue;
        }
        let has = |x: usize| (mask >> x) & 1 == 1;
        let closed_add = members
            .iter()
            .all(|&x| members.iter().all(|&y| has(ring.add(x, y))));
        let absorbs = (0..n).all(|r| {
            members
                .iter()
                .all(|&x| has(ring.mul(r, x)) && has(ring.mul(x, r)))
        });
        if closed_add && absorbs {
            out.push(Subset::from_indices(n, &members));
        }
    }
    out
}

/// Every homomorphism by filtering the full `|S|^|R|` map space.
pub fn raw_homs(domain: &FiniteRing, codomain: &FiniteRing) -> Vec<Vec<usize>> {
    let n = domain.order();
    let m = codomain.order();
    let count = m.pow(n as u32);
    assert!(count <= 1 << 24, "raw hom scan is |S|^|R|");
    (0..count)
        .filter_map(|mut code| {
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let digit = code % m;
                    code /= m;
                    digit
                })
                .collect();
            ringlab::hom::check_hom(&map, domain, codomain)
                .ok()
                .map(|h| h.map().to_vec())
        })
        .collect()
}
