//! Enlargements, joint-enlargement search, and the verification harnesses
//! built on them.
//!
//! A ring `T` is an enlargement of its subring `S` when `T = TST` and
//! `S = STS` (subset products with additive closure). A joint enlargement
//! of two rings is an enlargement of isomorphic copies of both. For
//! idempotent rings, joint-enlargement existence is taken as the working
//! definition of Morita equivalence, so a found witness is a proof while an
//! exhausted bounded search is evidence only — reports keep that
//! distinction explicit.

use crate::hom::{find_isomorphism, RingHom};
use crate::ring::FiniteRing;
use crate::subset::Subset;

/// Default bound on candidate ambient orders during search.
pub const DEFAULT_SEARCH_BOUND: usize = 16;

/// The two defining equations of an enlargement, evaluated for an ambient
/// ring `T` and a subset `S` of its carrier.
#[derive(Debug, Clone)]
pub struct EnlargementWitness {
    pub ambient: FiniteRing,
    pub inner: Subset,
    pub inner_is_subring: bool,
    pub tst_equals_t: bool,
    pub sts_equals_s: bool,
}

impl EnlargementWitness {
    /// Valid iff `S` is a subring and both subset equations hold.
    pub fn is_valid(&self) -> bool {
        self.inner_is_subring && self.tst_equals_t && self.sts_equals_s
    }
}

/// Evaluates `T = TST` and `S = STS` for the given subset.
pub fn is_enlargement(ambient: &FiniteRing, inner: Subset) -> EnlargementWitness {
    let (tst, sts) = enlargement_flags(ambient, inner);
    EnlargementWitness {
        ambient: ambient.clone(),
        inner,
        inner_is_subring: ambient.classify_subset(inner).is_subring,
        tst_equals_t: tst,
        sts_equals_s: sts,
    }
}

fn enlargement_flags(ambient: &FiniteRing, inner: Subset) -> (bool, bool) {
    let full = Subset::full(ambient.order());
    let tst = ambient
        .subset_product3(full, inner, full)
        .expect("subset over the ambient ring");
    let sts = ambient
        .subset_product3(inner, full, inner)
        .expect("subset over the ambient ring");
    (tst == full, sts == inner)
}

/// An ambient ring that is an enlargement of copies of two given rings,
/// together with the isomorphisms identifying the copies.
#[derive(Debug, Clone)]
pub struct JointEnlargement {
    pub ambient: FiniteRing,
    pub copy_a: Subset,
    pub copy_b: Subset,
    /// Isomorphism from the first ring onto the ring induced on `copy_a`.
    pub iso_a: RingHom,
    /// Isomorphism from the second ring onto the ring induced on `copy_b`.
    pub iso_b: RingHom,
}

/// Checks one candidate configuration; `None` unless both enlargement
/// witnesses are valid and both isomorphisms exist.
///
/// Isomorphism search beyond its order bound counts as not found, matching
/// the bounded-evidence reading used everywhere else in this module.
pub fn is_joint_enlargement(
    ambient: &FiniteRing,
    copy_a: Subset,
    copy_b: Subset,
    a: &FiniteRing,
    b: &FiniteRing,
) -> Option<JointEnlargement> {
    let wa = is_enlargement(ambient, copy_a);
    let wb = is_enlargement(ambient, copy_b);
    if !wa.is_valid() || !wb.is_valid() {
        return None;
    }
    let (ind_a, _) = ambient.induced_ring(copy_a).ok()?;
    let (ind_b, _) = ambient.induced_ring(copy_b).ok()?;
    let iso_a = find_isomorphism(a, &ind_a).ok().flatten()?;
    let iso_b = find_isomorphism(b, &ind_b).ok().flatten()?;
    Some(JointEnlargement {
        ambient: ambient.clone(),
        copy_a,
        copy_b,
        iso_a,
        iso_b,
    })
}

/// A candidate skipped because its order exceeded the search bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkippedCandidate {
    pub index: usize,
    pub order: usize,
}

/// Outcome of a bounded joint-enlargement search.
///
/// `result: Some(..)` is a proof of Morita equivalence (for idempotent
/// inputs); `None` only says no witness exists among the searched
/// candidates.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub result: Option<JointEnlargement>,
    pub candidates_total: usize,
    pub candidates_searched: usize,
    pub skipped: Vec<SkippedCandidate>,
    pub max_order: usize,
}

impl SearchReport {
    pub fn found(&self) -> bool {
        self.result.is_some()
    }
}

/// Scans candidates in order for the first joint enlargement of `a` and `b`.
pub fn search_joint_enlargement(
    a: &FiniteRing,
    b: &FiniteRing,
    candidates: &[FiniteRing],
) -> SearchReport {
    search_joint_enlargement_bounded(a, b, candidates, DEFAULT_SEARCH_BOUND)
}

/// Bounded search. Per candidate, subrings are enumerated once and pruned
/// by cardinality and additive exponent before any isomorphism search runs;
/// the returned witness is the first in (candidate, `copy_a` mask,
/// `copy_b` mask) order.
pub fn search_joint_enlargement_bounded(
    a: &FiniteRing,
    b: &FiniteRing,
    candidates: &[FiniteRing],
    max_order: usize,
) -> SearchReport {
    let mut skipped = Vec::new();
    let mut searched = 0;
    let mut result = None;

    'candidates: for (index, t) in candidates.iter().enumerate() {
        if t.order() > max_order {
            skipped.push(SkippedCandidate {
                index,
                order: t.order(),
            });
            continue;
        }
        searched += 1;
        if t.order() < a.order().max(b.order()) {
            continue;
        }
        let subrings = t.enumerate_subrings();
        let matching = |target: &FiniteRing| -> Vec<(Subset, RingHom)> {
            subrings
                .iter()
                .filter(|s| s.card() == target.order())
                .filter(|&&s| {
                    let exponent = s
                        .iter()
                        .fold(1, |e, x| crate::ring::lcm(e, t.additive_order(x)));
                    exponent == target.additive_exponent()
                })
                .filter(|&&s| {
                    let (tst, sts) = enlargement_flags(t, s);
                    tst && sts
                })
                .filter_map(|&s| {
                    let (induced, _) = t.induced_ring(s).expect("enumerated subrings induce rings");
                    find_isomorphism(target, &induced)
                        .ok()
                        .flatten()
                        .map(|iso| (s, iso))
                })
                .collect()
        };
        let copies_a = matching(a);
        if copies_a.is_empty() {
            continue;
        }
        let copies_b = matching(b);
        if let (Some((copy_a, iso_a)), Some((copy_b, iso_b))) =
            (copies_a.into_iter().next(), copies_b.into_iter().next())
        {
            result = Some(JointEnlargement {
                ambient: t.clone(),
                copy_a,
                copy_b,
                iso_a,
                iso_b,
            });
            break 'candidates;
        }
    }

    SearchReport {
        result,
        candidates_total: candidates.len(),
        candidates_searched: searched,
        skipped,
        max_order,
    }
}

/// Report for the ideal-product law `RSR = S` on an idempotent ideal.
///
/// When the preconditions hold (`S` is a two-sided ideal and idempotent)
/// the equality and both one-sided inclusions from its proof are asserted;
/// a failure would be an implementation bug, not a refutation.
#[derive(Debug, Clone)]
pub struct LemmaIdealProductReport {
    pub s_is_ideal: bool,
    pub s_is_idempotent: bool,
    pub rsr: Subset,
    pub rsr_contained_in_s: bool,
    pub sss_contained_in_rsr: bool,
    pub rsr_equals_s: bool,
}

impl LemmaIdealProductReport {
    pub fn preconditions_hold(&self) -> bool {
        self.s_is_ideal && self.s_is_idempotent
    }
}

pub fn verify_lemma_ideal_product(r: &FiniteRing, s: Subset) -> LemmaIdealProductReport {
    let class = r.classify_subset(s);
    let s_is_ideal = class.is_ideal;
    let s_is_idempotent =
        class.is_subring && r.subset_product(s, s).expect("same parent") == s;
    let full = Subset::full(r.order());
    let rsr = r.subset_product3(full, s, full).expect("same parent");
    let sss = r
        .subset_product3(s, s, s)
        .expect("same parent");
    let report = LemmaIdealProductReport {
        s_is_ideal,
        s_is_idempotent,
        rsr,
        rsr_contained_in_s: rsr.is_subset_of(&s),
        sss_contained_in_rsr: sss.is_subset_of(&rsr),
        rsr_equals_s: rsr == s,
    };
    if report.preconditions_hold() {
        assert!(
            report.rsr_contained_in_s,
            "ideals absorb products: RSR ⊆ S"
        );
        assert!(
            report.sss_contained_in_rsr,
            "idempotency gives S = SSS ⊆ RSR"
        );
        assert!(report.rsr_equals_s, "RSR = S for idempotent ideals");
    }
    report
}

/// Hypotheses of the chain replay, in check order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainHypothesis {
    /// `copy_r` is a subring of the ambient ring.
    CopyRSubring,
    /// `copy_s` is a subring of the ambient ring.
    CopySSubring,
    /// `copy_s ⊆ copy_r`.
    SInsideR,
    /// `copy_s` is a two-sided ideal of the ring induced on `copy_r`.
    SIdealInR,
    /// `copy_s` is idempotent.
    SIdempotent,
    /// `T = T·S·T`.
    TstEqualsT,
    /// `R = R·T·R`.
    RtrEqualsR,
}

impl std::fmt::Display for ChainHypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ChainHypothesis::CopyRSubring => "copy_r is a subring",
            ChainHypothesis::CopySSubring => "copy_s is a subring",
            ChainHypothesis::SInsideR => "copy_s is contained in copy_r",
            ChainHypothesis::SIdealInR => "copy_s is an ideal of copy_r",
            ChainHypothesis::SIdempotent => "copy_s is idempotent",
            ChainHypothesis::TstEqualsT => "T = TST",
            ChainHypothesis::RtrEqualsR => "R = RTR",
        };
        f.write_str(s)
    }
}

/// `PRECONDITION_FAIL`: the failed hypotheses, in check order; no chain
/// replay is attempted.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("PRECONDITION_FAIL: {0:?}")]
pub struct ChainPreconditionError(pub Vec<ChainHypothesis>);

/// One evaluated link of the substitution chain.
#[derive(Debug, Clone)]
pub struct ChainLink {
    pub label: &'static str,
    pub value: Subset,
}

/// Every intermediate subset of the chain
/// `R = RTR = R(TST)R = RT(RSR)TR = (RTR)S(RTR) = RSR = S`, each equal to
/// the previous one.
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub links: Vec<ChainLink>,
    pub final_equal: bool,
}

/// Replays the substitution chain concretely inside `ambient`.
///
/// Under the hypotheses every consecutive equality is a theorem, so each
/// link is asserted; the report carries the evaluated subsets for display.
pub fn verify_chain(
    ambient: &FiniteRing,
    copy_r: Subset,
    copy_s: Subset,
) -> Result<ChainReport, ChainPreconditionError> {
    let mut failed = Vec::new();
    let class_r = ambient.classify_subset(copy_r);
    let class_s = ambient.classify_subset(copy_s);
    if !class_r.is_subring {
        failed.push(ChainHypothesis::CopyRSubring);
    }
    if !class_s.is_subring {
        failed.push(ChainHypothesis::CopySSubring);
    }
    if !copy_s.is_subset_of(&copy_r) {
        failed.push(ChainHypothesis::SInsideR);
    }
    // Ideal of the induced ring, checked directly inside the ambient ring.
    if class_s.is_subring && copy_s.is_subset_of(&copy_r) {
        let absorbs = copy_r.iter().all(|r| {
            copy_s.iter().all(|s| {
                copy_s.contains(ambient.mul(r, s)) && copy_s.contains(ambient.mul(s, r))
            })
        });
        if !absorbs {
            failed.push(ChainHypothesis::SIdealInR);
        }
    }
    if class_s.is_subring
        && ambient.subset_product(copy_s, copy_s).expect("same parent") != copy_s
    {
        failed.push(ChainHypothesis::SIdempotent);
    }
    let full = Subset::full(ambient.order());
    let (tst_ok, _) = {
        let tst = ambient.subset_product3(full, copy_s, full).expect("same parent");
        (tst == full, ())
    };
    if !tst_ok {
        failed.push(ChainHypothesis::TstEqualsT);
    }
    let rtr = ambient.subset_product3(copy_r, full, copy_r).expect("same parent");
    if rtr != copy_r {
        failed.push(ChainHypothesis::RtrEqualsR);
    }
    if !failed.is_empty() {
        return Err(ChainPreconditionError(failed));
    }

    let product = |parts: &[Subset]| -> Subset {
        let mut acc = parts[0];
        for &p in &parts[1..] {
            acc = ambient.subset_product(acc, p).expect("same parent");
        }
        acc
    };

    let tst = product(&[full, copy_s, full]);
    assert_eq!(tst, full, "hypothesis T = TST was just checked");
    let rsr = product(&[copy_r, copy_s, copy_r]);
    assert_eq!(
        rsr, copy_s,
        "RSR = S holds for an idempotent ideal of the subring"
    );

    let links = vec![
        ChainLink {
            label: "R",
            value: copy_r,
        },
        ChainLink {
            label: "RTR",
            value: product(&[copy_r, full, copy_r]),
        },
        ChainLink {
            label: "R(TST)R",
            value: product(&[copy_r, tst, copy_r]),
        },
        ChainLink {
            label: "RT(RSR)TR",
            value: product(&[copy_r, full, rsr, full, copy_r]),
        },
        ChainLink {
            label: "(RTR)S(RTR)",
            value: product(&[rtr, copy_s, rtr]),
        },
        ChainLink {
            label: "RSR",
            value: rsr,
        },
        ChainLink {
            label: "S",
            value: copy_s,
        },
    ];
    for pair in links.windows(2) {
        assert_eq!(
            pair[0].value, pair[1].value,
            "chain link {} must equal {}",
            pair[0].label, pair[1].label
        );
    }
    let final_equal = copy_r == copy_s;
    assert!(final_equal, "the chain forces R = S");
    Ok(ChainReport { links, final_equal })
}

/// Verdict of one bounded theorem probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremVerdict {
    /// Preconditions hold, `S = R`, and a joint enlargement was found, as
    /// the statement predicts for the non-proper case.
    ConsistentSelf,
    /// Preconditions hold, `S` is proper, and the bounded search found
    /// nothing: evidence for the statement, not a proof.
    Evidence,
    /// Preconditions hold, `S` is proper, and a witness was found. The
    /// statement forbids this, so it signals an implementation bug.
    Fatal,
    /// Preconditions do not hold; the search outcome carries no weight.
    PreconditionsNotMet,
}

/// Report of [`verify_theorem_instance`].
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub r_idempotent: bool,
    pub s_is_ideal: bool,
    pub s_idempotent: bool,
    pub s_proper: bool,
    /// The zero ideal is flagged separately so reports can distinguish it.
    pub s_is_zero: bool,
    pub search: SearchReport,
    pub verdict: TheoremVerdict,
}

/// Probes one instance of the statement "an idempotent ring has no joint
/// enlargement with an idempotent proper ideal of itself" by bounded
/// search over the candidate list.
pub fn verify_theorem_instance(
    r: &FiniteRing,
    s: Subset,
    candidates: &[FiniteRing],
) -> TheoremReport {
    verify_theorem_instance_bounded(r, s, candidates, DEFAULT_SEARCH_BOUND)
}

pub fn verify_theorem_instance_bounded(
    r: &FiniteRing,
    s: Subset,
    candidates: &[FiniteRing],
    max_order: usize,
) -> TheoremReport {
    let class = r.classify_subset(s);
    let r_idempotent = r.is_idempotent_ring();
    let s_is_ideal = class.is_ideal;
    let s_idempotent =
        class.is_subring && r.subset_product(s, s).expect("same parent") == s;
    let s_proper = s != Subset::full(r.order());
    let s_is_zero = s == Subset::zero(r.order());

    let search = if class.is_subring {
        let (induced, _) = r.induced_ring(s).expect("classified subring");
        search_joint_enlargement_bounded(r, &induced, candidates, max_order)
    } else {
        SearchReport {
            result: None,
            candidates_total: candidates.len(),
            candidates_searched: 0,
            skipped: Vec::new(),
            max_order,
        }
    };

    let preconditions = r_idempotent && s_is_ideal && s_idempotent;
    let verdict = match (preconditions, s_proper, search.found()) {
        (false, _, _) => TheoremVerdict::PreconditionsNotMet,
        (true, true, true) => TheoremVerdict::Fatal,
        (true, true, false) => TheoremVerdict::Evidence,
        (true, false, true) => TheoremVerdict::ConsistentSelf,
        (true, false, false) => TheoremVerdict::Evidence,
    };
    TheoremReport {
        r_idempotent,
        s_is_ideal,
        s_idempotent,
        s_proper,
        s_is_zero,
        search,
        verdict,
    }
}
