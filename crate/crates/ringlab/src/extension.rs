//! Unitizations: the Dorroh extension and the multiplier ring, with their
//! canonical embeddings and the canonical maps into and out of an ambient
//! unital ring.
//!
//! Both constructions take a ring `R` without (necessarily) a unit and
//! build a unital ring containing an isomorphic copy of `R` as an ideal.
//! The Dorroh extension adjoins scalars `ℤ_m` for a multiple `m` of the
//! additive exponent; the multiplier ring collects all compatible pairs of
//! self-maps `(ρ, λ)` with `ρ(r)·s = r·λ(s)`.

use crate::hom::{
    check_hom, enumerate_homs, minimal_generating_set, HomConstraint, HomError, HomViolation,
    RingHom,
};
use crate::ring::{BoundExceeded, DegeneracyWitness, FiniteRing, ValidateError};
use thiserror::Error;

/// Default bound on the base-ring order for the multiplier construction.
pub const DEFAULT_MULTIPLIER_BOUND: usize = 16;

/// Cap on the number of multipliers for which the full ring table is built.
pub const MAX_MULTIPLIER_ELEMENTS: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("BAD_MODULUS: {modulus} is not a positive multiple of the additive exponent {exponent}")]
    BadModulus { modulus: usize, exponent: usize },
    #[error("DEGENERATE: {0}")]
    Degenerate(DegeneracyWitness),
    #[error(transparent)]
    Bound(#[from] BoundExceeded),
    #[error("NOT_UNITAL: ambient ring has no unit")]
    NotUnital,
    #[error("ring argument does not match the construction's base ring")]
    BaseMismatch,
    #[error("IMAGE_NOT_IDEAL: embedded image is not a two-sided ideal")]
    ImageNotIdeal,
    #[error("HOM_FAIL: {0}")]
    HomFail(HomViolation),
}

fn hom_fail(e: HomError) -> ExtensionError {
    match e {
        HomError::Violation(v) => ExtensionError::HomFail(v),
        other => panic!("candidate map has the right shape: {other}"),
    }
}

/// The unitization `R × ℤ_m` with multiplication
/// `(r, z)·(s, w) = (rs + z·s + w·r, zw)` and unit `(0, 1)`.
///
/// Pairs are encoded as `index(r, z) = index(r)·m + z`. The modulus must be
/// a positive multiple of the additive exponent of the base, so the scalar
/// action `z·s` is well defined.
#[derive(Debug, Clone)]
pub struct DorrohRing {
    base: FiniteRing,
    modulus: usize,
    ring: FiniteRing,
    iota: RingHom,
}

impl DorrohRing {
    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// The canonical embedding `r ↦ (r, 0)`.
    pub fn iota(&self) -> &RingHom {
        &self.iota
    }

    pub fn encode(&self, r: usize, z: usize) -> usize {
        debug_assert!(r < self.base.order() && z < self.modulus);
        r * self.modulus + z
    }

    pub fn decode(&self, index: usize) -> (usize, usize) {
        (index / self.modulus, index % self.modulus)
    }
}

/// Builds the Dorroh extension of `base`; the modulus defaults to the
/// additive exponent.
///
/// All structural invariants are verified on the fly: the result passes the
/// axiom gauntlet, `(0, 1)` is its unit, and the embedding is an injective
/// homomorphism whose image is a two-sided ideal.
pub fn dorroh_extension(
    base: &FiniteRing,
    modulus: Option<usize>,
) -> Result<DorrohRing, ExtensionError> {
    let exponent = base.additive_exponent();
    let m = modulus.unwrap_or(exponent);
    if m == 0 || !m.is_multiple_of(exponent) {
        return Err(ExtensionError::BadModulus {
            modulus: m,
            exponent,
        });
    }
    let n = base.order();
    let nm = n * m;
    let encode = |r: usize, z: usize| r * m + z;

    let mut add = vec![0u16; nm * nm];
    let mut mul = vec![0u16; nm * nm];
    for r1 in 0..n {
        for z1 in 0..m {
            let x = encode(r1, z1);
            for r2 in 0..n {
                for z2 in 0..m {
                    let y = encode(r2, z2);
                    add[x * nm + y] = encode(base.add(r1, r2), (z1 + z2) % m) as u16;
                    let first = base.add(
                        base.add(base.mul(r1, r2), base.scalar_mul(z1, r2)),
                        base.scalar_mul(z2, r1),
                    );
                    mul[x * nm + y] = encode(first, (z1 * z2) % m) as u16;
                }
            }
        }
    }
    let ring = match FiniteRing::from_flat(nm, add, mul) {
        Ok(ring) => ring,
        Err(ValidateError::Invalid(report)) => {
            panic!("Dorroh tables failed the axiom gauntlet: {report:?}")
        }
        Err(e) => panic!("Dorroh tables are well shaped: {e}"),
    };
    assert_eq!(
        ring.unit(),
        Some(encode(0, 1 % m)),
        "(0, 1) is the unit of the Dorroh extension"
    );

    let iota_map: Vec<usize> = (0..n).map(|r| encode(r, 0)).collect();
    let iota = check_hom(&iota_map, base, &ring).expect("r ↦ (r, 0) is a homomorphism");
    assert!(iota.is_injective());

    // The image {(r, 0)} absorbs multiplication from both sides.
    let in_image = |x: usize| x.is_multiple_of(m);
    for x in 0..nm {
        for r in 0..n {
            let e = encode(r, 0);
            assert!(in_image(ring.mul(x, e)) && in_image(ring.mul(e, x)));
        }
    }

    Ok(DorrohRing {
        base: base.clone(),
        modulus: m,
        ring,
        iota,
    })
}

/// A compatible pair of self-maps `(ρ, λ)` with `ρ(r)·s = r·λ(s)`.
///
/// Ordering is lexicographic on the `ρ` table, then the `λ` table; this is
/// the element order of [`MultiplierRing`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiplier {
    rho: Vec<usize>,
    lam: Vec<usize>,
}

impl Multiplier {
    pub fn new(rho: Vec<usize>, lam: Vec<usize>) -> Multiplier {
        Multiplier { rho, lam }
    }

    #[inline]
    pub fn rho(&self, x: usize) -> usize {
        self.rho[x]
    }

    #[inline]
    pub fn lam(&self, x: usize) -> usize {
        self.lam[x]
    }

    pub fn rho_table(&self) -> &[usize] {
        &self.rho
    }

    pub fn lam_table(&self) -> &[usize] {
        &self.lam
    }

    /// Exhaustive check of `ρ(r)·s = r·λ(s)`.
    pub fn is_compatible(&self, ring: &FiniteRing) -> bool {
        ring.elements()
            .all(|r| ring.elements().all(|s| ring.mul(self.rho[r], s) == ring.mul(r, self.lam[s])))
    }

    /// Whether both component maps preserve addition.
    pub fn is_additive(&self, ring: &FiniteRing) -> bool {
        let additive = |f: &[usize]| {
            ring.elements().all(|x| {
                ring.elements()
                    .all(|y| f[ring.add(x, y)] == ring.add(f[x], f[y]))
            })
        };
        additive(&self.rho) && additive(&self.lam)
    }

    /// `ρ` as a left-module map and `λ` as a right-module map:
    /// `ρ(a·x) = a·ρ(x)` and `λ(x·a) = λ(x)·a` for all `a`, `x`.
    pub fn is_bimodule_hom(&self, ring: &FiniteRing) -> bool {
        ring.elements().all(|a| {
            ring.elements().all(|x| {
                self.rho[ring.mul(a, x)] == ring.mul(a, self.rho[x])
                    && self.lam[ring.mul(x, a)] == ring.mul(self.lam[x], a)
            })
        })
    }

    fn zero(order: usize) -> Multiplier {
        Multiplier {
            rho: vec![0; order],
            lam: vec![0; order],
        }
    }

    fn identity(order: usize) -> Multiplier {
        Multiplier {
            rho: (0..order).collect(),
            lam: (0..order).collect(),
        }
    }
}

/// The multiplier `(ρ_x, λ_x)` of a single element: right and left
/// multiplication by `x`. Compatible by associativity.
pub fn element_multiplier(ring: &FiniteRing, x: usize) -> Multiplier {
    Multiplier {
        rho: ring.elements().map(|y| ring.mul(y, x)).collect(),
        lam: ring.elements().map(|y| ring.mul(x, y)).collect(),
    }
}

/// The complete multiplier ring of a non-degenerate base ring.
///
/// Elements are sorted by their `(ρ, λ)` tables, so index `0` is the zero
/// multiplier and the ring table is schedule-independent.
#[derive(Debug, Clone)]
pub struct MultiplierRing {
    base: FiniteRing,
    elements: Vec<Multiplier>,
    ring: FiniteRing,
    iota: RingHom,
}

impl MultiplierRing {
    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    pub fn elements(&self) -> &[Multiplier] {
        &self.elements
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// The canonical embedding `x ↦ (ρ_x, λ_x)`.
    pub fn iota(&self) -> &RingHom {
        &self.iota
    }

    pub fn index_of(&self, m: &Multiplier) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    /// Index of the unit `(id, id)`.
    pub fn unit_index(&self) -> usize {
        self.ring.unit().expect("multiplier rings are unital")
    }

    /// Runs the module-homomorphism law on every stored multiplier.
    pub fn multipliers_are_module_homs(&self) -> bool {
        self.elements.iter().all(|m| m.is_bimodule_hom(&self.base))
    }
}

/// Additive self-maps of `ring`, enumerated through generator images.
fn enumerate_additive_self_maps(ring: &FiniteRing) -> Vec<Vec<usize>> {
    let n = ring.order();
    let gens = minimal_generating_set(ring);
    let mut results = Vec::new();

    fn propagate(
        ring: &FiniteRing,
        partial: &mut [Option<usize>],
        defined: &mut Vec<usize>,
    ) -> bool {
        let mut qi = 0;
        while qi < defined.len() {
            let x = defined[qi];
            qi += 1;
            let fx = partial[x].expect("defined elements have images");
            let mut k = 0;
            while k < defined.len() {
                let y = defined[k];
                k += 1;
                let z = ring.add(x, y);
                let img = ring.add(fx, partial[y].expect("defined elements have images"));
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
        true
    }

    fn dfs(
        ring: &FiniteRing,
        gens: &[usize],
        depth: usize,
        partial: &[Option<usize>],
        defined: &[usize],
        results: &mut Vec<Vec<usize>>,
    ) {
        if depth == gens.len() {
            results.push(partial.iter().map(|v| v.expect("map is total")).collect());
            return;
        }
        for s in 0..ring.order() {
            let mut p2 = partial.to_vec();
            let mut d2 = defined.to_vec();
            p2[gens[depth]] = Some(s);
            d2.push(gens[depth]);
            if propagate(ring, &mut p2, &mut d2) {
                dfs(ring, gens, depth + 1, &p2, &d2, results);
            }
        }
    }

    let mut partial = vec![None; n];
    partial[0] = Some(0);
    dfs(ring, &gens, 0, &partial, &[0], &mut results);
    results.sort();
    results
}

/// Builds the multiplier ring under the default base-order bound.
pub fn multiplier_ring(base: &FiniteRing) -> Result<MultiplierRing, ExtensionError> {
    multiplier_ring_bounded(base, DEFAULT_MULTIPLIER_BOUND)
}

/// Builds the multiplier ring of a non-degenerate base.
///
/// Candidate `λ` maps are enumerated as additive self-maps through
/// generator images; compatibility plus non-degeneracy then forces a unique
/// partner `ρ` pointwise, solved on generators. This is complete because on
/// a non-degenerate ring every compatible pair is automatically additive.
pub fn multiplier_ring_bounded(
    base: &FiniteRing,
    bound: usize,
) -> Result<MultiplierRing, ExtensionError> {
    if let Some(w) = base.degeneracy_witness() {
        return Err(ExtensionError::Degenerate(w));
    }
    let n = base.order();
    if n > bound {
        return Err(BoundExceeded { order: n, bound }.into());
    }
    let gens = minimal_generating_set(base);

    let mut elements: Vec<Multiplier> = Vec::new();
    for lam in enumerate_additive_self_maps(base) {
        // ρ(r) is the unique x with x·g = r·λ(g) on all generators; checking
        // generators suffices because both sides are additive in g.
        let mut rho = Vec::with_capacity(n);
        let mut consistent = true;
        'solve: for r in 0..n {
            let mut found = None;
            for x in 0..n {
                if gens.iter().all(|&g| base.mul(x, g) == base.mul(r, lam[g])) {
                    if found.is_some() {
                        // Two solutions differ by an element annihilating R
                        // from the left, impossible here.
                        unreachable!("non-degeneracy forces a unique partner");
                    }
                    found = Some(x);
                }
            }
            match found {
                Some(x) => rho.push(x),
                None => {
                    consistent = false;
                    break 'solve;
                }
            }
        }
        if consistent {
            let m = Multiplier { rho, lam };
            debug_assert!(m.is_compatible(base));
            elements.push(m);
        }
    }
    elements.sort();
    elements.dedup();

    let count = elements.len();
    if count > MAX_MULTIPLIER_ELEMENTS {
        return Err(BoundExceeded {
            order: count,
            bound: MAX_MULTIPLIER_ELEMENTS,
        }
        .into());
    }
    assert_eq!(
        elements.first(),
        Some(&Multiplier::zero(n)),
        "the zero multiplier sorts first"
    );

    let index_of = |m: &Multiplier| -> usize {
        elements
            .binary_search(m)
            .expect("multiplier arithmetic stays inside the enumerated set")
    };
    let mut add = vec![0u16; count * count];
    let mut mul = vec![0u16; count * count];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let sum = Multiplier {
                rho: (0..n).map(|x| base.add(a.rho[x], b.rho[x])).collect(),
                lam: (0..n).map(|x| base.add(a.lam[x], b.lam[x])).collect(),
            };
            // (ρ, λ) * (ρ', λ') = (ρ' ∘ ρ, λ ∘ λ')
            let prod = Multiplier {
                rho: (0..n).map(|x| b.rho[a.rho[x]]).collect(),
                lam: (0..n).map(|x| a.lam[b.lam[x]]).collect(),
            };
            add[i * count + j] = index_of(&sum) as u16;
            mul[i * count + j] = index_of(&prod) as u16;
        }
    }
    let ring = match FiniteRing::from_flat(count, add, mul) {
        Ok(ring) => ring,
        Err(e) => panic!("multiplier tables failed the axiom gauntlet: {e}"),
    };
    assert_eq!(
        ring.unit(),
        Some(index_of(&Multiplier::identity(n))),
        "(id, id) is the unit of the multiplier ring"
    );

    let iota_map: Vec<usize> = (0..n).map(|x| index_of(&element_multiplier(base, x))).collect();
    let iota = check_hom(&iota_map, base, &ring).expect("x ↦ (ρ_x, λ_x) is a homomorphism");
    assert!(iota.is_injective(), "non-degeneracy makes ι injective");

    let image = iota.image_subset();
    assert!(
        ring.classify_subset(image).is_ideal,
        "the embedded copy of the base is an ideal"
    );

    Ok(MultiplierRing {
        base: base.clone(),
        elements,
        ring,
        iota,
    })
}

/// The canonical map `(r, z) ↦ embed(r) + z·1_S` out of a Dorroh extension
/// into a unital ring containing the base as an ideal.
///
/// Fails with `HOM_FAIL` when the Dorroh modulus is incompatible with the
/// additive order of `1_S`.
pub fn canonical_d(
    dorroh: &DorrohRing,
    ambient: &FiniteRing,
    embed: &RingHom,
) -> Result<RingHom, ExtensionError> {
    let Some(one) = ambient.unit() else {
        return Err(ExtensionError::NotUnital);
    };
    if embed.domain() != dorroh.base() || embed.codomain() != ambient {
        return Err(ExtensionError::BaseMismatch);
    }
    if !ambient.classify_subset(embed.image_subset()).is_ideal {
        return Err(ExtensionError::ImageNotIdeal);
    }
    let map: Vec<usize> = (0..dorroh.ring().order())
        .map(|idx| {
            let (r, z) = dorroh.decode(idx);
            ambient.add(embed.apply(r), ambient.scalar_mul(z, one))
        })
        .collect();
    let d = check_hom(&map, dorroh.ring(), ambient).map_err(hom_fail)?;
    debug_assert!((0..dorroh.base().order()).all(|r| d.apply(dorroh.encode(r, 0)) == embed.apply(r)));
    Ok(d)
}

/// The canonical map `s ↦ (_·s, s·_)` from a unital ring into the
/// multiplier ring of its ideal copy of the base.
///
/// Multiplication by `s` is transported through `embed` back to the base,
/// which lands inside the image because the image is an ideal.
pub fn canonical_m(
    ambient: &FiniteRing,
    embed: &RingHom,
    mring: &MultiplierRing,
) -> Result<RingHom, ExtensionError> {
    if embed.domain() != mring.base() || embed.codomain() != ambient {
        return Err(ExtensionError::BaseMismatch);
    }
    if !ambient.classify_subset(embed.image_subset()).is_ideal {
        return Err(ExtensionError::ImageNotIdeal);
    }
    let n = mring.base().order();
    let mut back = vec![None; ambient.order()];
    for x in 0..n {
        back[embed.apply(x)] = Some(x);
    }
    let transported = |y: usize| -> usize {
        back[y].expect("ideal image absorbs multiplication by the ambient ring")
    };
    let map: Vec<usize> = ambient
        .elements()
        .map(|s| {
            let m = Multiplier {
                rho: (0..n).map(|x| transported(ambient.mul(embed.apply(x), s))).collect(),
                lam: (0..n).map(|x| transported(ambient.mul(s, embed.apply(x)))).collect(),
            };
            mring
                .index_of(&m)
                .expect("the enumerated multiplier set is complete")
        })
        .collect();
    let m = check_hom(&map, ambient, mring.ring()).map_err(hom_fail)?;
    for x in 0..n {
        assert_eq!(
            m.apply(embed.apply(x)),
            mring.iota().apply(x),
            "m ∘ embed equals the canonical embedding into the multiplier ring"
        );
    }
    Ok(m)
}

/// Existence and uniqueness evidence for the canonical maps around one
/// embedding `R ⊴ S`.
#[derive(Debug, Clone)]
pub struct UniversalPropertyReport {
    /// Modulus used for the Dorroh leg (the additive exponent of `S`).
    pub dorroh_modulus: usize,
    pub d: RingHom,
    pub d_restricts_to_embed: bool,
    /// Homs `R' → S` that are unital and restrict to `embed` on the copy of `R`.
    pub d_count_identity_reading: usize,
    /// Homs `R' → S` that are merely unital.
    pub d_count_unital_only: usize,
    /// `None` when the base is degenerate and the multiplier side does not apply.
    pub multiplier_side: Option<MultiplierSideReport>,
}

#[derive(Debug, Clone)]
pub struct MultiplierSideReport {
    pub m: RingHom,
    pub m_extends_iota: bool,
    /// Homs `S → 𝓜(R)` that are unital and send `embed(r)` to `ι(r)`.
    pub m_count_identity_reading: usize,
    /// Homs `S → 𝓜(R)` that are merely unital.
    pub m_count_unital_only: usize,
}

/// Checks that the two canonical maps exist for `embed: R ⊴ S` and counts
/// competing homomorphisms under two readings of "unique".
///
/// Reading one constrains maps to restrict to the identity on the embedded
/// copy of `R`; reading two only requires unitality. Both counts are
/// reported; the identity reading is the one expected to give `1`.
pub fn verify_universal_property(
    base: &FiniteRing,
    ambient: &FiniteRing,
    embed: &RingHom,
) -> Result<UniversalPropertyReport, ExtensionError> {
    if embed.domain() != base || embed.codomain() != ambient {
        return Err(ExtensionError::BaseMismatch);
    }
    if ambient.unit().is_none() {
        return Err(ExtensionError::NotUnital);
    }
    if !ambient.classify_subset(embed.image_subset()).is_ideal {
        return Err(ExtensionError::ImageNotIdeal);
    }

    // The additive order of 1_S is the additive exponent of S, and the
    // exponent of R divides it, so this modulus makes d well defined.
    let modulus = ambient.additive_exponent();
    let dorroh = dorroh_extension(base, Some(modulus))?;
    let d = canonical_d(&dorroh, ambient, embed)?;
    let d_restricts_to_embed =
        (0..base.order()).all(|r| d.apply(dorroh.encode(r, 0)) == embed.apply(r));

    let fixed: Vec<(usize, usize)> = (0..base.order())
        .map(|r| (dorroh.encode(r, 0), embed.apply(r)))
        .collect();
    let d_count_identity_reading =
        enumerate_homs(dorroh.ring(), ambient, &HomConstraint::fixing(fixed).unital())?.len();
    let d_count_unital_only =
        enumerate_homs(dorroh.ring(), ambient, &HomConstraint::default().unital())?.len();

    let multiplier_side = if base.is_non_degenerate() {
        let mring = multiplier_ring(base)?;
        let m = canonical_m(ambient, embed, &mring)?;
        let m_extends_iota =
            (0..base.order()).all(|r| m.apply(embed.apply(r)) == mring.iota().apply(r));
        let fixed: Vec<(usize, usize)> = (0..base.order())
            .map(|r| (embed.apply(r), mring.iota().apply(r)))
            .collect();
        let m_count_identity_reading =
            enumerate_homs(ambient, mring.ring(), &HomConstraint::fixing(fixed).unital())?.len();
        let m_count_unital_only =
            enumerate_homs(ambient, mring.ring(), &HomConstraint::default().unital())?.len();
        Some(MultiplierSideReport {
            m,
            m_extends_iota,
            m_count_identity_reading,
            m_count_unital_only,
        })
    } else {
        None
    };

    Ok(UniversalPropertyReport {
        dorroh_modulus: modulus,
        d,
        d_restricts_to_embed,
        d_count_identity_reading,
        d_count_unital_only,
        multiplier_side,
    })
}
