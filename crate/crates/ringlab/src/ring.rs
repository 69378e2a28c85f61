//! Table-represented finite rings.
//!
//! A [`FiniteRing`] is a ring on the carrier `{0, …, n-1}` given by two
//! `n × n` tables, one for addition and one for multiplication. Element `0`
//! is always the additive zero. Rings are *not* assumed to have a unit;
//! when a two-sided identity exists it is detected and stored.
//!
//! Construction always runs the full axiom gauntlet (exhaustive triple
//! loops for associativity and distributivity), so every `FiniteRing` value
//! in the program is a genuine ring.

use thiserror::Error;

/// Default bound on the order for canonical-form search.
///
/// Canonicalization is brute force over the `(n-1)!` relabelings that fix
/// element `0`, so it is only offered for small orders.
pub const DEFAULT_CANON_BOUND: usize = 8;

/// Axiom families checked by [`FiniteRing::from_tables`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationCode {
    /// Addition is not commutative.
    NotAbelian,
    /// Element `0` is not the additive identity.
    ZeroNotAtZero,
    /// Some element has no additive inverse.
    NoInverse,
    /// Addition is not associative.
    AddAssocFail,
    /// Multiplication is not associative.
    MulAssocFail,
    /// Multiplication does not distribute over addition.
    DistribFail,
}

impl ViolationCode {
    /// Stable report token for this violation family.
    pub fn token(self) -> &'static str {
        match self {
            ViolationCode::NotAbelian => "NOT_ABELIAN",
            ViolationCode::ZeroNotAtZero => "ZERO_NOT_AT_0",
            ViolationCode::NoInverse => "NO_INVERSE",
            ViolationCode::AddAssocFail => "ADD_ASSOC_FAIL",
            ViolationCode::MulAssocFail => "MUL_ASSOC_FAIL",
            ViolationCode::DistribFail => "DISTRIB_FAIL",
        }
    }
}

impl std::fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// One axiom violation together with a witness triple of element indices.
///
/// The witness can be replayed against the offending tables: evaluating the
/// named axiom at those indices exhibits the failure. Families that need
/// fewer than three indices pad with `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    pub witness: (usize, usize, usize),
}

/// Outcome of the axiom gauntlet: empty means the tables form a ring.
///
/// At most one violation per family is recorded, each the first found in
/// row-major scan order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether the report contains a violation of the given family.
    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

/// Rejected input tables: either malformed or failing the ring axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidateError {
    #[error("SHAPE: {0}")]
    Shape(String),
    #[error("ring axioms violated ({} families)", .0.violations.len())]
    Invalid(ValidationReport),
}

/// An operation was asked to run above its configured order bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("BOUND_EXCEEDED: order {order} exceeds bound {bound}")]
pub struct BoundExceeded {
    pub order: usize,
    pub bound: usize,
}

/// Witness that a ring is degenerate: a nonzero element annihilating the
/// whole ring from one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegeneracyWitness {
    /// `r` with `rR = {0}` (row `r` of the multiplication table is zero).
    ZeroRow(usize),
    /// `r` with `Rr = {0}` (column `r` of the multiplication table is zero).
    ZeroColumn(usize),
}

impl DegeneracyWitness {
    pub fn element(&self) -> usize {
        match *self {
            DegeneracyWitness::ZeroRow(r) | DegeneracyWitness::ZeroColumn(r) => r,
        }
    }
}

impl std::fmt::Display for DegeneracyWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            DegeneracyWitness::ZeroRow(r) => write!(f, "r={r}, rR={{0}}"),
            DegeneracyWitness::ZeroColumn(r) => write!(f, "r={r}, Rr={{0}}"),
        }
    }
}

/// The canonical relabeling of a ring.
///
/// `ring` carries the lexicographically least `(add, mul)` table pair over
/// all relabelings fixing `0`, and `relabeling[old] = new` is a permutation
/// achieving it. Two rings of the same order are isomorphic exactly when
/// their canonical rings have equal tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub ring: FiniteRing,
    pub relabeling: Vec<usize>,
}

/// A finite ring on `{0, …, n-1}` given by addition and multiplication
/// tables, with the unit (if any) and the additive exponent derived at
/// construction.
///
/// Negation and the scalar action `k·x` are recomputed from the addition
/// table on demand rather than stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    unit: Option<usize>,
    additive_exponent: usize,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteRing(order={}, unit={:?}, exponent={})",
            self.order, self.unit, self.additive_exponent
        )
    }
}

impl FiniteRing {
    /// Validates a pair of `n × n` tables and builds the ring.
    ///
    /// Returns `ValidateError::Shape` for malformed input and
    /// `ValidateError::Invalid` with a replayable [`ValidationReport`] when
    /// the tables fail a ring axiom.
    pub fn from_tables(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self, ValidateError> {
        let n = add.len();
        if n == 0 {
            return Err(ValidateError::Shape("addition table is empty".into()));
        }
        if n > u16::MAX as usize {
            return Err(ValidateError::Shape(format!("order {n} too large")));
        }
        if mul.len() != n {
            return Err(ValidateError::Shape(format!(
                "multiplication table has {} rows, expected {n}",
                mul.len()
            )));
        }
        let flatten = |t: &[Vec<usize>], name: &str| -> Result<Vec<u16>, ValidateError> {
            let mut flat = Vec::with_capacity(n * n);
            for (i, row) in t.iter().enumerate() {
                if row.len() != n {
                    return Err(ValidateError::Shape(format!(
                        "{name} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (j, &e) in row.iter().enumerate() {
                    if e >= n {
                        return Err(ValidateError::Shape(format!(
                            "{name}[{i}][{j}] = {e} out of range 0..{n}"
                        )));
                    }
                    flat.push(e as u16);
                }
            }
            Ok(flat)
        };
        let addf = flatten(add, "add")?;
        let mulf = flatten(mul, "mul")?;
        Self::from_flat(n, addf, mulf)
    }

    /// Same gauntlet as [`from_tables`](Self::from_tables) on pre-flattened
    /// row-major tables with in-range entries.
    pub(crate) fn from_flat(n: usize, add: Vec<u16>, mul: Vec<u16>) -> Result<Self, ValidateError> {
        debug_assert_eq!(add.len(), n * n);
        debug_assert_eq!(mul.len(), n * n);
        let report = run_axiom_checks(n, &add, &mul);
        if !report.ok() {
            return Err(ValidateError::Invalid(report));
        }
        let unit = find_unit_raw(n, &mul);
        let additive_exponent = additive_exponent_raw(n, &add);
        Ok(FiniteRing {
            order: n,
            add,
            mul,
            unit,
            additive_exponent,
        })
    }

    /// Runs only the axiom gauntlet, exposing the full report.
    pub fn check_tables(n: usize, add: &[u16], mul: &[u16]) -> ValidationReport {
        run_axiom_checks(n, add, mul)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    /// Additive inverse, recovered by scanning the addition row of `a`.
    pub fn neg(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.add(a, b) == 0)
            .expect("every element of a validated ring has an inverse")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The `k`-fold sum `x + … + x` (`k = 0` gives `0`).
    pub fn scalar_mul(&self, k: usize, x: usize) -> usize {
        let k = k % self.additive_order(x);
        let mut acc = 0;
        for _ in 0..k {
            acc = self.add(acc, x);
        }
        acc
    }

    /// The two-sided identity, if one exists.
    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn has_unit(&self) -> bool {
        self.unit.is_some()
    }

    /// Least `m ≥ 1` with `m·x = 0` for every element `x`; divides the order.
    pub fn additive_exponent(&self) -> usize {
        self.additive_exponent
    }

    /// Additive order of a single element.
    pub fn additive_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `true` iff no nonzero element annihilates the ring from either side.
    pub fn is_non_degenerate(&self) -> bool {
        self.degeneracy_witness().is_none()
    }

    /// First nonzero element (in index order) with `rR = {0}` or `Rr = {0}`,
    /// if any; the row side is reported before the column side.
    pub fn degeneracy_witness(&self) -> Option<DegeneracyWitness> {
        for r in 1..self.order {
            if (0..self.order).all(|s| self.mul(r, s) == 0) {
                return Some(DegeneracyWitness::ZeroRow(r));
            }
            if (0..self.order).all(|s| self.mul(s, r) == 0) {
                return Some(DegeneracyWitness::ZeroColumn(r));
            }
        }
        None
    }

    /// Componentwise ring on pairs, with index `(i, j) ↦ i·|S| + j`.
    pub fn direct_product(&self, other: &FiniteRing) -> FiniteRing {
        let (n, m) = (self.order, other.order);
        let nm = n * m;
        let mut add = vec![0u16; nm * nm];
        let mut mul = vec![0u16; nm * nm];
        for i in 0..n {
            for j in 0..m {
                let x = i * m + j;
                for k in 0..n {
                    for l in 0..m {
                        let y = k * m + l;
                        add[x * nm + y] = (self.add(i, k) * m + other.add(j, l)) as u16;
                        mul[x * nm + y] = (self.mul(i, k) * m + other.mul(j, l)) as u16;
                    }
                }
            }
        }
        FiniteRing::from_flat(nm, add, mul)
            .expect("direct product of valid rings satisfies the ring axioms")
    }

    /// Canonical form under the default order bound.
    pub fn canonical_form(&self) -> Result<CanonicalForm, BoundExceeded> {
        self.canonical_form_bounded(DEFAULT_CANON_BOUND)
    }

    /// Brute-force canonicalization over all relabelings fixing `0`.
    ///
    /// Candidate relabelings are compared lazily cell by cell against the
    /// best pair found so far, so most permutations are cut after a few
    /// table entries.
    pub fn canonical_form_bounded(&self, bound: usize) -> Result<CanonicalForm, BoundExceeded> {
        let n = self.order;
        if n > bound {
            return Err(BoundExceeded { order: n, bound });
        }

        // inv[new] = old; the tail inv[1..] runs over permutations of 1..n
        // in lexicographic order, starting from the identity.
        let mut inv: Vec<usize> = (0..n).collect();
        let mut perm = vec![0usize; n];
        let mut best_add: Vec<u16> = Vec::new();
        let mut best_mul: Vec<u16> = Vec::new();
        let mut best_perm: Vec<usize> = Vec::new();

        loop {
            for (new, &old) in inv.iter().enumerate() {
                perm[old] = new;
            }
            let candidate_cell = |table: &[u16], i: usize, j: usize| -> u16 {
                perm[table[inv[i] * n + inv[j]] as usize] as u16
            };
            let better = if best_perm.is_empty() {
                true
            } else {
                let mut verdict = false;
                'cmp: for (table, best) in [(&self.add, &best_add), (&self.mul, &best_mul)] {
                    for i in 0..n {
                        for j in 0..n {
                            let c = candidate_cell(table, i, j);
                            let b = best[i * n + j];
                            if c != b {
                                verdict = c < b;
                                break 'cmp;
                            }
                        }
                    }
                }
                verdict
            };
            if better {
                let mut adt = vec![0u16; n * n];
                let mut mlt = vec![0u16; n * n];
                for i in 0..n {
                    for j in 0..n {
                        adt[i * n + j] = candidate_cell(&self.add, i, j);
                        mlt[i * n + j] = candidate_cell(&self.mul, i, j);
                    }
                }
                best_add = adt;
                best_mul = mlt;
                best_perm = perm.clone();
            }
            if !next_permutation(&mut inv[1..]) {
                break;
            }
        }

        let ring = FiniteRing::from_flat(n, best_add, best_mul)
            .expect("relabeling a valid ring preserves the ring axioms");
        Ok(CanonicalForm {
            ring,
            relabeling: best_perm,
        })
    }

    /// Relabels the ring along `perm` (`perm[old] = new`, `perm[0] = 0`).
    pub fn relabel(&self, perm: &[usize]) -> FiniteRing {
        let n = self.order;
        assert_eq!(perm.len(), n);
        assert_eq!(perm[0], 0, "relabelings must fix the zero element");
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[self.add(a, b)] as u16;
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u16;
            }
        }
        FiniteRing::from_flat(n, add, mul).expect("relabeling preserves the ring axioms")
    }

    /// Row-major addition table, for serialization.
    pub fn add_table(&self) -> &[u16] {
        &self.add
    }

    /// Row-major multiplication table, for serialization.
    pub fn mul_table(&self) -> &[u16] {
        &self.mul
    }

    // --- named constructions ---

    /// The ring `ℤ_n` of integers modulo `n`.
    pub fn cyclic(n: usize) -> FiniteRing {
        assert!(n > 0);
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u16;
                mul[a * n + b] = ((a * b) % n) as u16;
            }
        }
        FiniteRing::from_flat(n, add, mul).expect("Z_n is a ring")
    }

    /// The zero ring (all products `0`) on the abelian group
    /// `ℤ_{f₁} × … × ℤ_{f_k}` with row-major mixed-radix element encoding.
    pub fn zero_ring(factors: &[usize]) -> FiniteRing {
        assert!(factors.iter().all(|&f| f > 0));
        let n: usize = factors.iter().product::<usize>().max(1);
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; factors.len()];
            for (i, &f) in factors.iter().enumerate().rev() {
                d[i] = x % f;
                x /= f;
            }
            d
        };
        let encode = |d: &[usize]| -> usize {
            let mut x = 0;
            for (i, &f) in factors.iter().enumerate() {
                x = x * f + d[i];
            }
            x
        };
        let mut add = vec![0u16; n * n];
        let mul = vec![0u16; n * n];
        for a in 0..n {
            let da = digits(a);
            for b in 0..n {
                let db = digits(b);
                let sum: Vec<usize> = da
                    .iter()
                    .zip(&db)
                    .zip(factors)
                    .map(|((&x, &y), &f)| (x + y) % f)
                    .collect();
                add[a * n + b] = encode(&sum) as u16;
            }
        }
        FiniteRing::from_flat(n, add, mul).expect("zero multiplication is a ring")
    }
}

fn find_unit_raw(n: usize, mul: &[u16]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
}

fn additive_exponent_raw(n: usize, add: &[u16]) -> usize {
    let order_of = |x: usize| -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = add[acc * n + x] as usize;
            k += 1;
        }
        k
    };
    (0..n).fold(1usize, |e, x| lcm(e, order_of(x)))
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Advances `a` to its lexicographic successor; `false` once exhausted.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
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

fn run_axiom_checks(n: usize, add: &[u16], mul: &[u16]) -> ValidationReport {
    let mut violations = Vec::new();
    let ad = |a: usize, b: usize| add[a * n + b] as usize;
    let ml = |a: usize, b: usize| mul[a * n + b] as usize;

    // ZERO_NOT_AT_0
    if let Some(x) = (0..n).find(|&x| ad(0, x) != x || ad(x, 0) != x) {
        violations.push(Violation {
            code: ViolationCode::ZeroNotAtZero,
            witness: (x, 0, 0),
        });
    }

    // NOT_ABELIAN
    'ab: for x in 0..n {
        for y in 0..n {
            if ad(x, y) != ad(y, x) {
                violations.push(Violation {
                    code: ViolationCode::NotAbelian,
                    witness: (x, y, 0),
                });
                break 'ab;
            }
        }
    }

    // NO_INVERSE
    if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| ad(x, y) == 0)) {
        violations.push(Violation {
            code: ViolationCode::NoInverse,
            witness: (x, 0, 0),
        });
    }

    // ADD_ASSOC_FAIL
    'aa: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if ad(ad(x, y), z) != ad(x, ad(y, z)) {
                    violations.push(Violation {
                        code: ViolationCode::AddAssocFail,
                        witness: (x, y, z),
                    });
                    break 'aa;
                }
            }
        }
    }

    // MUL_ASSOC_FAIL
    'ma: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if ml(ml(x, y), z) != ml(x, ml(y, z)) {
                    violations.push(Violation {
                        code: ViolationCode::MulAssocFail,
                        witness: (x, y, z),
                    });
                    break 'ma;
                }
            }
        }
    }

    // DISTRIB_FAIL (both sides)
    'di: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = ml(x, ad(y, z)) != ad(ml(x, y), ml(x, z));
                let right = ml(ad(x, y), z) != ad(ml(x, z), ml(y, z));
                if left || right {
                    violations.push(Violation {
                        code: ViolationCode::DistribFail,
                        witness: (x, y, z),
                    });
                    break 'di;
                }
            }
        }
    }

    violations.sort_by_key(|v| v.code);
    ValidationReport { violations }
}

/// Replays a violation witness against raw tables; `true` when the witness
/// really exhibits the named failure.
pub fn replay_violation(n: usize, add: &[u16], mul: &[u16], v: &Violation) -> bool {
    let ad = |a: usize, b: usize| add[a * n + b] as usize;
    let ml = |a: usize, b: usize| mul[a * n + b] as usize;
    let (x, y, z) = v.witness;
    match v.code {
        ViolationCode::ZeroNotAtZero => ad(0, x) != x || ad(x, 0) != x,
        ViolationCode::NotAbelian => ad(x, y) != ad(y, x),
        ViolationCode::NoInverse => !(0..n).any(|w| ad(x, w) == 0),
        ViolationCode::AddAssocFail => ad(ad(x, y), z) != ad(x, ad(y, z)),
        ViolationCode::MulAssocFail => ml(ml(x, y), z) != ml(x, ml(y, z)),
        ViolationCode::DistribFail => {
            ml(x, ad(y, z)) != ad(ml(x, y), ml(x, z)) || ml(ad(x, y), z) != ad(ml(x, z), ml(y, z))
        }
    }
}
