//! Acceptance suite: one test per criterion, each asserting its stated
//! runtime budget and printing a pass line with the measured time
//! (visible with `cargo test --test acceptance -- --nocapture`).

mod support;

use ringlab::catalog::{
    enumerate_abelian_groups, full_catalog, full_catalog_rings, generate_rings, matrix_ring_m2_f2,
};
use ringlab::extension::{
    canonical_d, canonical_m, dorroh_extension, multiplier_ring, verify_universal_property,
    Multiplier,
};
use ringlab::hom::{check_hom, find_isomorphism};
use ringlab::morita::{
    is_joint_enlargement, search_joint_enlargement, verify_chain, verify_lemma_ideal_product,
    verify_theorem_instance, TheoremVerdict,
};
use ringlab::ring::{replay_violation, FiniteRing, ViolationCode};
use ringlab::subset::Subset;
use ringlab::textio;
use std::time::{Duration, Instant};

fn pass(criterion: &str, detail: String, elapsed: Duration, budget: Duration) {
    println!("criterion {criterion}: PASS — {detail} ({elapsed:.2?})");
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its budget: {elapsed:.2?} > {budget:.2?}"
    );
}

/// Searches for a single-entry mutation of the ring's tables whose
/// validation report contains the given violation family with a witness
/// that replays. Add-table families mutate `add`, the rest mutate `mul`.
fn find_single_mutation(ring: &FiniteRing, code: ViolationCode) -> Option<(Vec<u16>, Vec<u16>)> {
    let n = ring.order();
    let base_add = ring.add_table().to_vec();
    let base_mul = ring.mul_table().to_vec();
    let mutate_add = matches!(
        code,
        ViolationCode::NotAbelian
            | ViolationCode::ZeroNotAtZero
            | ViolationCode::NoInverse
            | ViolationCode::AddAssocFail
    );
    for cell in 0..n * n {
        for v in 0..n as u16 {
            let mut add = base_add.clone();
            let mut mul = base_mul.clone();
            let table = if mutate_add { &mut add } else { &mut mul };
            if table[cell] == v {
                continue;
            }
            table[cell] = v;
            let report = FiniteRing::check_tables(n, &add, &mul);
            if let Some(violation) = report.violations.iter().find(|viol| viol.code == code) {
                if replay_violation(n, &add, &mul, violation) {
                    return Some((add, mul));
                }
            }
        }
    }
    None
}

type MutatedTables = (Vec<u16>, Vec<u16>);

#[test]
fn criterion_1_axiom_gauntlet() {
    let catalog = full_catalog();
    let codes = [
        ViolationCode::NotAbelian,
        ViolationCode::ZeroNotAtZero,
        ViolationCode::NoInverse,
        ViolationCode::AddAssocFail,
        ViolationCode::MulAssocFail,
        ViolationCode::DistribFail,
    ];
    let start = Instant::now();

    let mut gauntlet: Vec<(&FiniteRing, Vec<(ViolationCode, MutatedTables)>)> = Vec::new();
    for entry in catalog {
        if entry.ring.order() < 2 {
            continue;
        }
        let mutations: Option<Vec<_>> = codes
            .iter()
            .map(|&code| find_single_mutation(&entry.ring, code).map(|t| (code, t)))
            .collect();
        if let Some(mutations) = mutations {
            gauntlet.push((&entry.ring, mutations));
            if gauntlet.len() == 10 {
                break;
            }
        }
    }
    assert_eq!(
        gauntlet.len(),
        10,
        "the catalog must supply 10 rings admitting all six mutations"
    );

    let mut rejections = 0;
    for (ring, mutations) in &gauntlet {
        let n = ring.order();
        for (code, (add, mul)) in mutations {
            let report = FiniteRing::check_tables(n, add, mul);
            assert!(!report.ok(), "mutated tables must be rejected");
            let violation = report
                .violations
                .iter()
                .find(|v| v.code == *code)
                .expect("expected violation family present");
            assert!(
                replay_violation(n, add, mul, violation),
                "witness for {code} must replay"
            );
            rejections += 1;
        }
    }
    assert_eq!(rejections, 60);
    pass(
        "1 (axiom gauntlet)",
        format!("{rejections}/60 mutations rejected with replayable witnesses"),
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_ideal_product_sweep() {
    let catalog = full_catalog();
    let start = Instant::now();
    let mut instances = 0;
    for entry in catalog {
        for &ideal in &entry.ideals {
            if !entry.ring.is_idempotent_subset(ideal).expect("ideals are subrings") {
                continue;
            }
            let report = verify_lemma_ideal_product(&entry.ring, ideal);
            assert!(report.preconditions_hold());
            assert!(report.rsr_equals_s);
            assert!(report.rsr_contained_in_s && report.sss_contained_in_rsr);
            instances += 1;
        }
    }
    assert!(instances > 100, "the sweep must cover a real instance pool");
    pass(
        "2 (ideal product sweep)",
        format!("RSR = S with both inclusions on {instances} idempotent ideals, zero failures"),
        start.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_3_chain_sweep() {
    let catalog = full_catalog();
    let start = Instant::now();
    let mut replayed = 0;
    let mut rejected = 0;
    for entry in catalog.iter().filter(|e| e.ring.order() <= 8) {
        let t = &entry.ring;
        let subrings = t.enumerate_subrings();
        for &copy_r in &subrings {
            for &copy_s in &subrings {
                if !copy_s.is_subset_of(&copy_r) {
                    continue;
                }
                match verify_chain(t, copy_r, copy_s) {
                    Ok(report) => {
                        assert!(report.final_equal, "hypotheses force R = S");
                        assert_eq!(report.links.len(), 7);
                        replayed += 1;
                    }
                    Err(_) => rejected += 1,
                }
            }
        }
    }
    assert!(replayed > 50, "the sweep must exercise real chains");
    assert!(rejected > 0, "some triples must fail the hypotheses");
    pass(
        "3 (chain sweep)",
        format!("{replayed} hypothesis-satisfying triples replayed to R = S, zero failures"),
        start.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_4_theorem_evidence_sweep() {
    let catalog = full_catalog();
    let candidates = full_catalog_rings();
    let start = Instant::now();
    let mut probes = 0;
    for entry in catalog.iter().filter(|e| e.ring.order() <= 8) {
        if !entry.props.idempotent {
            continue;
        }
        for &ideal in &entry.ideals {
            if ideal == Subset::full(entry.ring.order()) {
                continue;
            }
            if !entry.ring.is_idempotent_subset(ideal).expect("ideals are subrings") {
                continue;
            }
            let report = verify_theorem_instance(&entry.ring, ideal, &candidates);
            assert!(report.r_idempotent && report.s_is_ideal && report.s_idempotent);
            assert_ne!(
                report.verdict,
                TheoremVerdict::Fatal,
                "a witness for a proper idempotent ideal would be an implementation bug"
            );
            assert_eq!(report.verdict, TheoremVerdict::Evidence);
            assert!(report.search.result.is_none());
            probes += 1;
        }
    }
    assert!(probes >= 30, "the sweep must cover a real pair pool");
    pass(
        "4 (theorem evidence sweep)",
        format!("{probes} (ring, proper idempotent ideal) pairs, no joint enlargement found"),
        start.elapsed(),
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_5_positive_morita_control() {
    let catalog = full_catalog_rings();
    let z2 = FiniteRing::cyclic(2);
    let m2 = matrix_ring_m2_f2();
    let start = Instant::now();
    let report = search_joint_enlargement(&z2, &m2, &catalog);
    let witness = report.result.expect("the corner embedding must be found");
    assert_eq!(witness.ambient, m2, "the ambient is the matrix ring itself");
    assert_eq!(
        witness.copy_a,
        Subset::from_indices(16, &[0, 1]),
        "the first valid copy of Z_2 is the upper-left corner {{0, e11}}"
    );
    assert_eq!(witness.copy_b, Subset::full(16));
    let replay = is_joint_enlargement(&witness.ambient, witness.copy_a, witness.copy_b, &z2, &m2);
    assert!(replay.is_some(), "the witness must replay");
    pass(
        "5 (positive Morita control)",
        "joint enlargement of Z_2 and M2(F_2) found at the corner and replayed".to_string(),
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_6_dorroh_sweep() {
    let catalog = full_catalog();
    let start = Instant::now();
    let mut built = 0;
    for entry in catalog.iter().filter(|e| e.ring.order() <= 8) {
        let base = &entry.ring;
        let dorroh = dorroh_extension(base, None).expect("default modulus is the exponent");
        let ring = dorroh.ring();
        assert_eq!(ring.unit(), Some(dorroh.encode(0, 1 % dorroh.modulus())));
        // Replay the embedding through the homomorphism checker.
        let iota = check_hom(dorroh.iota().map(), base, ring).expect("iota is a homomorphism");
        assert!(iota.is_injective());
        let image = iota.image_subset();
        assert!(ring.classify_subset(image).is_ideal);
        assert_eq!(ring.order() / image.card(), dorroh.modulus());
        let (induced, _) = ring.induced_ring(image).expect("ideal image is a subring");
        assert_eq!(&induced, base, "the induced ring on the image is the base");
        assert!(find_isomorphism(&induced, base).expect("within bounds").is_some());
        built += 1;
    }
    assert!(built >= 70);
    pass(
        "6 (Dorroh construction sweep)",
        format!("{built} extensions validated: unit (0,1), injective iota, ideal image ≅ base"),
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_7_multiplier_sweep() {
    let catalog = full_catalog();
    let start = Instant::now();
    let mut built = 0;
    let mut oracle_checked = 0;
    let mut unital_isos = 0;
    for entry in catalog.iter().filter(|e| e.ring.order() <= 8) {
        if !entry.props.non_degenerate {
            continue;
        }
        let base = &entry.ring;
        let mring = multiplier_ring(base).expect("non-degenerate within bound");
        let n = base.order();
        let identity = Multiplier::new((0..n).collect(), (0..n).collect());
        assert_eq!(
            mring.elements()[mring.unit_index()],
            identity,
            "(id, id) is the unit"
        );
        let image = mring.iota().image_subset();
        assert!(mring.ring().classify_subset(image).is_ideal);
        assert!(
            mring.multipliers_are_module_homs(),
            "every rho is a left-module map and every lam a right-module map"
        );
        for m in mring.elements() {
            assert!(m.is_compatible(base));
        }
        built += 1;

        if n <= 4 {
            // Raw |R|^|R| pair oracle: same multiplier set, and additivity
            // is forced rather than assumed.
            let mut raw = support::raw_multiplier_pairs(base);
            raw.sort();
            let mut enumerated: Vec<(Vec<usize>, Vec<usize>)> = mring
                .elements()
                .iter()
                .map(|m| (m.rho_table().to_vec(), m.lam_table().to_vec()))
                .collect();
            enumerated.sort();
            assert_eq!(raw, enumerated, "generator enumeration matches the raw oracle");
            for (rho, lam) in &raw {
                assert!(Multiplier::new(rho.clone(), lam.clone()).is_additive(base));
            }
            oracle_checked += 1;
        }

        if entry.props.unital {
            assert!(
                find_isomorphism(base, mring.ring()).expect("within bounds").is_some(),
                "multiplier ring of a unital ring is the ring itself"
            );
            unital_isos += 1;
        }
    }
    assert!(built >= 10 && oracle_checked >= 5 && unital_isos >= 10);
    pass(
        "7 (multiplier construction sweep)",
        format!(
            "{built} multiplier rings validated, {oracle_checked} matched the raw map-pair oracle, {unital_isos} unital bases isomorphic to their multiplier ring"
        ),
        start.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_8_canonical_maps_at_tiny_scale() {
    let z2 = FiniteRing::cyclic(2);
    let start = Instant::now();

    let klein = FiniteRing::cyclic(2).direct_product(&FiniteRing::cyclic(2));
    let dorroh = dorroh_extension(&z2, Some(2)).expect("2 is the exponent");
    let mring = multiplier_ring(&z2).expect("Z_2 is non-degenerate");

    let ambients: Vec<(&str, FiniteRing, Vec<usize>)> = vec![
        ("Z2 x Z2", klein, vec![0, 2]),
        ("dorroh(Z2, 2)", dorroh.ring().clone(), dorroh.iota().map().to_vec()),
        ("M(Z2)", mring.ring().clone(), mring.iota().map().to_vec()),
    ];

    for (name, ambient, embed_map) in &ambients {
        let embed = check_hom(embed_map, &z2, ambient).expect("embedding is a homomorphism");
        let report = verify_universal_property(&z2, ambient, &embed)
            .unwrap_or_else(|e| panic!("universal property report for {name}: {e}"));
        assert!(report.d_restricts_to_embed, "{name}: d ∘ iota = embed");
        assert_eq!(
            report.d_count_identity_reading, 1,
            "{name}: d is unique among unital homs fixing the embedded copy"
        );
        let side = report.multiplier_side.expect("Z_2 is non-degenerate");
        assert!(side.m_extends_iota, "{name}: m ∘ embed = iota");
        assert_eq!(
            side.m_count_identity_reading, 1,
            "{name}: m is unique among unital homs fixing the embedded copy"
        );

        // The two canonical maps also replay directly.
        let d_again = canonical_d(&dorroh_extension(&z2, Some(ambient.additive_exponent())).unwrap(), ambient, &embed)
            .expect("canonical d exists");
        assert_eq!(d_again.map(), report.d.map());
        let m_again = canonical_m(ambient, &embed, &multiplier_ring(&z2).unwrap())
            .expect("canonical m exists");
        assert_eq!(m_again.map(), side.m.map());
    }

    // Generator-based hom enumeration agrees with the raw map filter on the
    // same tiny instances.
    for (_, ambient, _) in &ambients {
        let mut raw = support::raw_homs(ambient, &z2);
        raw.sort();
        let enumerated =
            ringlab::hom::enumerate_homs(ambient, &z2, &ringlab::hom::HomConstraint::default())
                .expect("within bounds");
        let enumerated: Vec<Vec<usize>> = enumerated.iter().map(|h| h.map().to_vec()).collect();
        assert_eq!(raw, enumerated, "generator enumeration matches the raw map filter");
    }

    pass(
        "8 (canonical maps at tiny scale)",
        "d and m exist, compose correctly, and are unique under the identity reading for all three ambients".to_string(),
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_9_enumeration_cross_oracle() {
    let start = Instant::now();
    for order in [2usize, 3, 4] {
        let mut oracle_canon: Vec<(Vec<u16>, Vec<u16>)> = Vec::new();
        for group in enumerate_abelian_groups(order).expect("within bounds") {
            let raw = support::raw_table_rings(&group);
            for ring in support::dedupe_by_bijection(raw) {
                let canon = ring.canonical_form().expect("within bounds").ring;
                oracle_canon.push((canon.add_table().to_vec(), canon.mul_table().to_vec()));
            }
        }
        oracle_canon.sort();
        oracle_canon.dedup();

        let generated: Vec<(Vec<u16>, Vec<u16>)> = generate_rings(order)
            .expect("within bounds")
            .iter()
            .map(|e| (e.ring.add_table().to_vec(), e.ring.mul_table().to_vec()))
            .collect();

        assert_eq!(
            oracle_canon, generated,
            "order {order}: raw-table and structure-constant enumerations disagree"
        );
        if order == 2 {
            assert_eq!(generated.len(), 2, "exactly two rings of order 2");
        }
    }
    pass(
        "9 (enumeration cross-oracle)",
        "identical canonical-form sets at orders 2, 3, 4; order 2 has exactly 2 rings".to_string(),
        start.elapsed(),
        Duration::from_secs(120),
    );
}

/// Supplementary oracle: the subgroup-walk ideal enumeration agrees with a
/// full scan of the subset lattice, including on the order-16 ambients.
#[test]
fn ideal_enumeration_matches_the_subset_scan_oracle() {
    let klein = FiniteRing::cyclic(2).direct_product(&FiniteRing::cyclic(2));
    for ring in [
        FiniteRing::cyclic(8),
        klein,
        FiniteRing::zero_ring(&[2, 4]),
        matrix_ring_m2_f2(),
    ] {
        let by_subgroups = ring.enumerate_ideals().expect("within bounds");
        let by_scan = support::naive_ideals(&ring);
        assert_eq!(by_subgroups, by_scan, "order {}", ring.order());
    }
}

#[test]
fn criterion_10_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_ringlab");
    let dir = tempfile::tempdir().expect("create temp dir");
    let path = |name: &str| dir.path().join(name);
    let write_ring_file = |name: &str, ring: &FiniteRing| {
        std::fs::write(path(name), textio::write_ring(ring)).expect("write ring file");
    };
    write_ring_file("z2.ring", &FiniteRing::cyclic(2));
    write_ring_file("zero2.ring", &FiniteRing::zero_ring(&[2]));
    write_ring_file(
        "k4.ring",
        &FiniteRing::cyclic(2).direct_product(&FiniteRing::cyclic(2)),
    );
    write_ring_file("m2.ring", &matrix_ring_m2_f2());
    write_ring_file("z4-relabeled.ring", &FiniteRing::cyclic(4).relabel(&[0, 3, 2, 1]));

    let start = Instant::now();

    let run = |args: &[&str], threads: &str| -> (String, Option<i32>) {
        let output = std::process::Command::new(bin)
            .args(args)
            .env("RAYON_NUM_THREADS", threads)
            .current_dir(dir.path())
            .output()
            .expect("run ringlab");
        (
            String::from_utf8(output.stdout).expect("utf-8 report"),
            output.status.code(),
        )
    };

    // Two catalogs generated under forced serial and forced parallel
    // execution must be byte-identical, stdout and files alike.
    let (gen_serial, code_a) = run(
        &["catalog", "generate", "--max-order", "16", "--out", "cat-serial"],
        "1",
    );
    let (gen_parallel, code_b) = run(
        &["catalog", "generate", "--max-order", "16", "--out", "cat-parallel"],
        "4",
    );
    assert_eq!(code_a, Some(0));
    assert_eq!(code_b, Some(0));
    assert_eq!(
        gen_serial.replace("cat-serial", "cat"),
        gen_parallel.replace("cat-parallel", "cat")
    );
    let index_serial = std::fs::read(path("cat-serial/index")).expect("index");
    let index_parallel = std::fs::read(path("cat-parallel/index")).expect("index");
    assert_eq!(index_serial, index_parallel, "catalog index must not depend on scheduling");
    for entry in std::fs::read_dir(path("cat-serial")).expect("read dir") {
        let name = entry.expect("dir entry").file_name();
        let a = std::fs::read(path("cat-serial").join(&name)).expect("serial file");
        let b = std::fs::read(path("cat-parallel").join(&name)).expect("parallel file");
        assert_eq!(a, b, "catalog file {name:?} must not depend on scheduling");
    }

    let commands: Vec<Vec<&str>> = vec![
        vec!["validate", "--in", "z2.ring"],
        vec!["validate", "--in", "zero2.ring"],
        vec!["analyze", "--in", "k4.ring"],
        vec!["ideals", "--in", "k4.ring"],
        vec!["dorroh", "--in", "zero2.ring", "--out", "zero2.dorroh.ring"],
        vec!["multiplier", "--in", "z2.ring", "--out", "z2.multiplier.ring"],
        vec!["enlargement", "--ambient", "k4.ring", "--subset", "subset 2: 0 1"],
        vec!["search", "--a", "z2.ring", "--b", "m2.ring", "--catalog", "cat-serial"],
        vec![
            "theorem-check",
            "--ring",
            "k4.ring",
            "--ideal",
            "subset 2: 0 1",
            "--catalog",
            "cat-serial",
        ],
    ];
    for args in &commands {
        let (first, code_first) = run(args, "4");
        let (second, code_second) = run(args, "1");
        assert_eq!(first, second, "report for {args:?} must be byte-stable");
        assert_eq!(code_first, code_second);
        assert!(first.starts_with("status: "), "report starts with a status line");
    }

    // `catalog add` twice into fresh copies must agree as well.
    for name in ["add-a", "add-b"] {
        let (out, code) = run(
            &["catalog", "add", "--in", "z4-relabeled.ring", "--out", name],
            "4",
        );
        assert_eq!(code, Some(0));
        assert!(out.contains("added: true"));
    }
    let a = std::fs::read(path("add-a/index")).expect("index");
    let b = std::fs::read(path("add-b/index")).expect("index");
    assert_eq!(a, b);

    pass(
        "10 (CLI determinism)",
        "all subcommand reports and catalog outputs byte-identical across runs and thread counts"
            .to_string(),
        start.elapsed(),
        Duration::from_secs(60),
    );
}
