//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Everything is exact; the only tolerances are runtime bounds.
//!
//! Criteria 6b, 6c and 7b assert the claimed automorphism data for the
//! dimension-3 tables exactly as published. The toolkit's exact computation
//! refutes parts of those claims (see PAPER-ERRATA.md), so those tests fail
//! with the refuting witnesses; the failures are the finding, not a defect
//! in the toolkit.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weakhopf::axioms::{cross_check, pass_vector, residual, verify, verify_pass, AxiomId, Level};
use weakhopf::catalog::{self, root_family_matrix, ClaimVerdict, Kind};
use weakhopf::constructions::{
    adjoin_two_units, adjoin_unit_to_bialgebra, adjoin_unit_to_hopf, chain_construction,
    group_bialgebra, max_algebra_whopf, sweedler5, taft_weak_hopf, two_unit_variant, RawAlgebra,
    TwoUnitVariant,
};
use weakhopf::exactmath::{Matrix, Scalar, Tensor3, Vector};
use weakhopf::fingerprint::fingerprint;
use weakhopf::search::{enumerate, ExecMode, SearchSpec};
use weakhopf::structure::WeakStructure;
use weakhopf::transport::{
    group_closure, is_automorphism, is_morphism_witness, stabilizer_tangent_dim, transport,
    BasisChange,
};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {:<4} {}  {}",
        criterion,
        if pass { "PASS" } else { "FAIL" },
        detail
    );
}

fn random_basis_change(rng: &mut ChaCha8Rng, n: usize) -> BasisChange {
    loop {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, Scalar::from_integer(rng.gen_range(-2..=2)));
            }
        }
        if let Ok(g) = BasisChange::new(m) {
            return g;
        }
    }
}

/// Random semigroup algebra: basis products are always basis elements, so
/// the grouplike extensions apply. Mixes left-zero, right-zero, constant,
/// cyclic-group and chain tables of dimension 1..=3.
fn random_semigroup_algebra(rng: &mut ChaCha8Rng) -> RawAlgebra {
    let n = rng.gen_range(1..=3usize);
    let kind = rng.gen_range(0..5u8);
    let mut table = vec![vec![0usize; n]; n];
    let perm: Vec<usize> = {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.gen_range(0..=i));
        }
        p
    };
    for i in 0..n {
        for j in 0..n {
            table[i][j] = match kind {
                0 => i,           // left zero
                1 => j,           // right zero
                2 => 0,           // constant
                3 => (i + j) % n, // cyclic group
                _ => {
                    // chain semilattice through a random relabeling
                    let a = perm[i];
                    let b = perm[j];
                    perm.iter().position(|&x| x == a.max(b)).unwrap()
                }
            };
        }
    }
    let mut mult = Tensor3::zeros(n);
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, table[i][j], Scalar::one());
        }
    }
    let raw = RawAlgebra::from_mult(mult);
    assert!(raw.is_associative());
    raw
}

/// Random strict bialgebra (in fact Hopf): a cyclic group algebra moved to a
/// random basis.
fn random_strict_hopf(rng: &mut ChaCha8Rng) -> WeakStructure {
    let k = rng.gen_range(1..=3usize);
    let h = group_bialgebra(k);
    let g = random_basis_change(rng, k);
    transport(&h, &g).unwrap()
}

#[test]
fn acceptance_01_catalog_soundness() {
    let start = Instant::now();
    let wbas: Vec<_> = catalog::entries(2, Kind::WeakBialgebra)
        .into_iter()
        .chain(catalog::entries(3, Kind::WeakBialgebra))
        .collect();
    assert_eq!(wbas.len(), 23);
    for e in &wbas {
        let r = verify(&e.structure, Level::WeakBialgebra);
        assert!(r.pass, "{} fails: {}", e.structure.label, r.to_text());
        for o in &r.outcomes {
            assert!(o.max_residual.is_zero());
        }
    }
    let whas: Vec<_> = catalog::entries(2, Kind::WeakHopf)
        .into_iter()
        .chain(catalog::entries(3, Kind::WeakHopf))
        .collect();
    assert_eq!(whas.len(), 5);
    for e in &whas {
        let r = verify(&e.structure, Level::WeakHopf);
        assert!(r.pass, "{} fails: {}", e.structure.label, r.to_text());
        for a in [AxiomId::Antipode1, AxiomId::Antipode2, AxiomId::Antipode3] {
            assert!(r.outcome(a).unwrap().pass);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {:?}", elapsed);
    report(
        "1",
        true,
        &format!(
            "23 weak bialgebras + 5 weak Hopf algebras, zero residuals, {:?}",
            elapsed
        ),
    );
}

#[test]
fn acceptance_02_constructions_verify() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    // adjoin_two_units over 20 randomized semigroup algebras (plus empty).
    let mut count = 0;
    let h = adjoin_two_units(&RawAlgebra::empty()).unwrap();
    assert!(verify_pass(&h, Level::WeakBialgebra));
    while count < 20 {
        let raw = random_semigroup_algebra(&mut rng);
        let h = adjoin_two_units(&raw).unwrap();
        assert!(verify_pass(&h, Level::WeakBialgebra));
        count += 1;
    }
    // chain_construction over 20 randomized (p, tail).
    for _ in 0..20 {
        let p = rng.gen_range(1..=4usize);
        let tail = random_semigroup_algebra(&mut rng);
        let h = chain_construction(p, &tail).unwrap();
        assert!(verify_pass(&h, Level::WeakBialgebra));
    }
    // max_algebra_whopf for n = 2..6.
    for n in 2..=6 {
        assert!(verify_pass(&max_algebra_whopf(n).unwrap(), Level::WeakHopf));
    }
    // one-unit extensions over 20 randomized strict inputs each.
    for _ in 0..20 {
        let b = random_strict_hopf(&mut rng);
        let wb = adjoin_unit_to_bialgebra(&b).unwrap();
        assert!(verify_pass(&wb, Level::WeakBialgebra));
        let wh = adjoin_unit_to_hopf(&b).unwrap();
        assert!(verify_pass(&wh, Level::WeakHopf));
    }
    // both two-unit variants over 20 randomized strict inputs. The antipode
    // extension S(1) = 1, S(e) = e only exists for the symmetric variant:
    // on variant (a) it breaks the first antipode axiom at the unit, and the
    // builder refuses (recorded in the errata).
    for _ in 0..20 {
        let b = random_strict_hopf(&mut rng);
        for variant in [TwoUnitVariant::A, TwoUnitVariant::B] {
            let wb = two_unit_variant(&b, variant, false).unwrap();
            assert!(verify_pass(&wb, Level::WeakBialgebra));
        }
        let wh = two_unit_variant(&b, TwoUnitVariant::B, true).unwrap();
        assert!(verify_pass(&wh, Level::WeakHopf));
        let refused = two_unit_variant(&b, TwoUnitVariant::A, true).unwrap_err();
        assert!(matches!(
            refused,
            weakhopf::constructions::ConstructionError::OutputFailedVerification {
                axiom: AxiomId::Antipode1,
                ..
            }
        ));
    }
    assert!(verify_pass(&sweedler5(), Level::WeakHopf));
    assert!(verify_pass(&taft_weak_hopf(2).unwrap(), Level::WeakHopf));
    assert!(verify_pass(&taft_weak_hopf(3).unwrap(), Level::WeakHopf));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {:?}", elapsed);
    report(
        "2",
        true,
        &format!("all construction outputs verify, {:?}", elapsed),
    );
}

#[test]
fn acceptance_03_reported_values() {
    // Chain counit values p - i + 1.
    for p in 1..=5 {
        let h = chain_construction(p, &RawAlgebra::empty()).unwrap();
        for i in 0..p {
            assert_eq!(
                h.coalgebra.counit.get(i),
                &Scalar::from_integer((p - i) as i64)
            );
        }
    }
    // Two-unit extension: ε(1) = 2, ε(e) = 1, and the strict counit law
    // fails with witness ε(a·1) = 1 vs ε(a)ε(1) = 2.
    let mut idem = Tensor3::zeros(1);
    idem.set(0, 0, 0, Scalar::one());
    let h = adjoin_two_units(&RawAlgebra::from_mult(idem)).unwrap();
    assert_eq!(h.counit(&h.algebra.unit), Scalar::from_integer(2));
    assert_eq!(h.coalgebra.counit.get(1), &Scalar::one());
    let a = Vector::basis(3, 2);
    let lhs = h.counit(&h.multiply(&a, &h.algebra.unit).unwrap());
    let rhs = &h.counit(&a) * &h.counit(&h.algebra.unit);
    assert_eq!(lhs, Scalar::one());
    assert_eq!(rhs, Scalar::from_integer(2));
    assert!(!residual(&h, AxiomId::StrictEpsMult).unwrap().pass());
    // One-unit extension dimension.
    for k in 1..=3 {
        let b = group_bialgebra(k);
        assert_eq!(adjoin_unit_to_bialgebra(&b).unwrap().dim(), b.dim() + 1);
    }
    // Taft dimension n² + 1.
    for n in 2..=3 {
        assert_eq!(taft_weak_hopf(n).unwrap().dim(), n * n + 1);
    }
    // The five-dimensional example is noncommutative and noncocommutative.
    let s5 = sweedler5();
    assert!(!s5.algebra.is_commutative());
    assert!(!s5.coalgebra.is_cocommutative());
    report(
        "3",
        true,
        "chain counits, strict-counit failure, dimensions, flags all exact",
    );
}

#[test]
fn acceptance_04_equivalences() {
    // taft(2) ↔ sweedler5 through an explicit permutation witness.
    let t2 = taft_weak_hopf(2).unwrap();
    let s5 = sweedler5();
    let id = BasisChange::identity(5);
    assert!(is_morphism_witness(&t2, &s5, &id).unwrap().pass);
    // Nontrivial route: scramble taft(2) by a permutation and use its
    // inverse as the witness back onto sweedler5.
    let sigma = BasisChange::permutation(&[2, 0, 4, 1, 3]).unwrap();
    let scrambled = transport(&t2, &sigma).unwrap();
    let check = is_morphism_witness(&scrambled, &s5, &sigma.inverse()).unwrap();
    assert!(check.pass, "{:?}", check.failure);
    // max_algebra_whopf(3) equals the dimension-3 weak Hopf entry (3).
    let m3 = max_algebra_whopf(3).unwrap();
    let e3 = catalog::get(3, Kind::WeakHopf, 3).unwrap().structure;
    assert_eq!(m3.algebra.mult, e3.algebra.mult);
    assert_eq!(m3.coalgebra.comult, e3.coalgebra.comult);
    assert_eq!(m3.coalgebra.counit, e3.coalgebra.counit);
    assert_eq!(m3.antipode, e3.antipode);
    report(
        "4",
        true,
        "taft(2)≅sweedler5 witnessed; max-algebra(3) equals catalog entry",
    );
}

#[test]
fn acceptance_05_gl_equivariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for (dim, kind) in [
        (2, Kind::WeakBialgebra),
        (2, Kind::WeakHopf),
        (3, Kind::WeakBialgebra),
        (3, Kind::WeakHopf),
    ] {
        for e in catalog::entries(dim, kind) {
            let before_pass = pass_vector(&e.structure, kind.level());
            let before_fp = fingerprint(&e.structure);
            for _ in 0..10 {
                let g = random_basis_change(&mut rng, dim);
                let moved = transport(&e.structure, &g).unwrap();
                assert_eq!(
                    before_pass,
                    pass_vector(&moved, kind.level()),
                    "{} pass vector not preserved",
                    e.structure.label
                );
                assert_eq!(
                    before_fp,
                    fingerprint(&moved),
                    "{} fingerprint not preserved",
                    e.structure.label
                );
                checked += 1;
            }
        }
    }
    report(
        "5",
        true,
        &format!(
            "pass vectors and fingerprints preserved over {} transports",
            checked
        ),
    );
}

#[test]
fn acceptance_06a_dim3_generator_closure_order() {
    let gens = match catalog::get(3, Kind::WeakBialgebra, 1).unwrap().claimed_aut {
        Some(catalog::ClaimedAut::FiniteGroup { generators, .. }) => generators,
        _ => panic!("entry (1) carries the finite-group claim"),
    };
    let els = group_closure(&gens, 100).unwrap();
    assert_eq!(els.len(), 6);
    report(
        "6a",
        true,
        "the two dimension-3 generators close to a group of order 6",
    );
}

#[test]
fn acceptance_06b_dim3_generators_fix_entries_1_to_11() {
    // As published: both generators are automorphisms of entries (1)-(11).
    let gens = match catalog::get(3, Kind::WeakBialgebra, 1).unwrap().claimed_aut {
        Some(catalog::ClaimedAut::FiniteGroup { generators, .. }) => generators,
        _ => unreachable!(),
    };
    let mut failures = Vec::new();
    for index in 1..=11 {
        let e = catalog::get(3, Kind::WeakBialgebra, index).unwrap();
        for (gi, m) in gens.iter().enumerate() {
            let g = BasisChange::new(m.clone()).unwrap();
            let check = is_automorphism(&e.structure, &g).unwrap();
            if !check.pass {
                failures.push(format!(
                    "entry ({}) generator {}: {}",
                    index,
                    gi + 1,
                    check.failure.unwrap()
                ));
            }
        }
    }
    let pass = failures.is_empty();
    report(
        "6b",
        pass,
        &if pass {
            "generators fix entries (1)-(11)".to_string()
        } else {
            format!(
                "refuted on {} generator/entry pairs, e.g. {}",
                failures.len(),
                failures[0]
            )
        },
    );
    assert!(
        pass,
        "the published order-6 claim is refuted by exact witnesses:\n{}",
        failures.join("\n")
    );
}

#[test]
fn acceptance_06c_diagonal_family_fixes_12_to_17_and_19() {
    // As published: diag(1,1,α) is an automorphism of (12)-(17),(19) for
    // every α ≠ 0; checked at 5 distinct rational α.
    let alphas = [
        Scalar::one(),
        Scalar::from_integer(2),
        Scalar::from_integer(3),
        Scalar::from_integer(-1),
        Scalar::ratio(1, 2),
    ];
    let mut failures = Vec::new();
    for index in [12, 13, 14, 15, 16, 17, 19] {
        let e = catalog::get(3, Kind::WeakBialgebra, index).unwrap();
        for alpha in &alphas {
            let mut m = Matrix::identity(3);
            m.set(2, 2, alpha.clone());
            let g = BasisChange::new(m).unwrap();
            let check = is_automorphism(&e.structure, &g).unwrap();
            if !check.pass {
                failures.push(format!(
                    "entry ({}) at alpha = {}: {}",
                    index,
                    alpha,
                    check.failure.unwrap()
                ));
            }
        }
    }
    let pass = failures.is_empty();
    report(
        "6c",
        pass,
        &if pass {
            "diagonal family fixes (12)-(17),(19) at 5 rational points".to_string()
        } else {
            format!(
                "refuted at {} entry/point pairs, e.g. {}",
                failures.len(),
                failures[0]
            )
        },
    );
    assert!(
        pass,
        "the published diagonal-family claim is refuted by exact witnesses:\n{}",
        failures.join("\n")
    );
}

#[test]
fn acceptance_06d_root_families_at_rational_points() {
    // Entries (18) and (20) at the r = 0 rational-root points (s = ±1).
    for (index, lower_sign) in [(18, true), (20, false)] {
        let e = catalog::get(3, Kind::WeakBialgebra, index).unwrap();
        for s in [Scalar::one(), Scalar::from_integer(-1)] {
            let m = root_family_matrix(&Scalar::zero(), &s, lower_sign);
            let g = BasisChange::new(m).unwrap();
            let check = is_automorphism(&e.structure, &g).unwrap();
            assert!(
                check.pass,
                "entry ({}) at (r, s) = (0, {}): {:?}",
                index, s, check.failure
            );
        }
    }
    // The sampled nonzero-r rational points are reported, not asserted: the
    // claims report carries their exact status.
    let statuses = catalog::verify_claims(3, Kind::WeakBialgebra);
    for index in [18, 20] {
        let st = statuses.iter().find(|s| s.index == index).unwrap();
        assert!(!st.detail.is_empty());
        println!(
            "         entry ({}) family status: {:?} — {}",
            index, st.verdict, st.detail
        );
    }
    report(
        "6d",
        true,
        "root-family matrices are automorphisms at r=0, s=±1",
    );
}

#[test]
fn acceptance_06e_dim2_matrix_statuses() {
    let statuses = catalog::verify_claims(2, Kind::WeakBialgebra);
    let verdict = |idx: usize| statuses.iter().find(|s| s.index == idx).unwrap();
    assert_eq!(
        verdict(3).verdict,
        ClaimVerdict::Confirmed,
        "{}",
        verdict(3).detail
    );
    for idx in [1, 2] {
        let st = verdict(idx);
        assert_eq!(st.verdict, ClaimVerdict::Refuted);
        // The verdict must be backed by an exact witness equation.
        assert!(
            st.detail.contains("counit equation"),
            "witness missing: {}",
            st.detail
        );
    }
    report(
        "6e",
        true,
        "dim-2 matrix confirmed on entry (3), refuted on (1),(2) with exact witnesses",
    );
}

#[test]
fn acceptance_07a_tangent_dimension_zero_for_1_to_11() {
    for index in 1..=11 {
        let e = catalog::get(3, Kind::WeakBialgebra, index).unwrap();
        let t = stabilizer_tangent_dim(&e.structure);
        assert_eq!(t.tangent_dim, 0, "entry ({})", index);
        assert_eq!(t.orbit_dim, 9 - t.tangent_dim);
    }
    report(
        "7a",
        true,
        "entries (1)-(11) have stabilizer tangent dimension 0, orbit dimension 9",
    );
}

#[test]
fn acceptance_07b_tangent_dimension_positive_for_12_to_17_and_19() {
    // As published: the diagonal family forces tangent dimension >= 1 on
    // (12)-(17),(19).
    let mut failures = Vec::new();
    for index in [12, 13, 14, 15, 16, 17, 19] {
        let e = catalog::get(3, Kind::WeakBialgebra, index).unwrap();
        let t = stabilizer_tangent_dim(&e.structure);
        assert_eq!(t.orbit_dim, 9 - t.tangent_dim);
        if t.tangent_dim < 1 {
            failures.push(format!(
                "entry ({}) has tangent dimension {}",
                index, t.tangent_dim
            ));
        }
    }
    let pass = failures.is_empty();
    report(
        "7b",
        pass,
        &if pass {
            "entries (12)-(17),(19) have tangent dimension >= 1".to_string()
        } else {
            format!("{}", failures.join("; "))
        },
    );
    assert!(
        pass,
        "the published family claim fails on:\n{}",
        failures.join("\n")
    );
}

#[test]
fn acceptance_08_search_rediscovery() {
    let start = Instant::now();
    let grid: Vec<Scalar> = [-1i64, 0, 1, 2]
        .iter()
        .map(|&v| Scalar::from_integer(v))
        .collect();
    let mut spec = SearchSpec::new(catalog::base_algebra(2, 2).unwrap(), grid.clone());
    spec.mode = ExecMode::Sequential;
    assert_eq!(spec.pre_prune_count().to_string(), "1048576");
    let out = enumerate(&spec).unwrap();
    assert!(!out.hits.is_empty());
    let catalog_fps: Vec<_> = catalog::entries(2, Kind::WeakBialgebra)
        .iter()
        .map(|e| (e.index, fingerprint(&e.structure)))
        .collect();
    // Every survivor matches a catalog fingerprint.
    for hit in &out.hits {
        assert!(
            catalog_fps.iter().any(|(_, f)| *f == hit.fingerprint),
            "survivor with unmatched fingerprint"
        );
    }
    // All three catalog fingerprints occur.
    for (idx, f) in &catalog_fps {
        assert!(
            out.hits.iter().any(|h| h.fingerprint == *f),
            "catalog entry ({}) not rediscovered",
            idx
        );
    }
    // The degenerate base algebra admits no weak bialgebra on this grid.
    let spec1 = SearchSpec::new(catalog::base_algebra(2, 1).unwrap(), grid);
    let out1 = enumerate(&spec1).unwrap();
    assert!(out1.hits.is_empty());
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {:?}", elapsed);
    report(
        "8",
        true,
        &format!(
            "4^10 grid: {} survivors covering all 3 classes; degenerate base: 0; {:?}",
            out.hits.len(),
            elapsed
        ),
    );
}

#[test]
fn acceptance_09_oracle_cross_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let entries: Vec<_> = catalog::entries(2, Kind::WeakBialgebra)
        .into_iter()
        .chain(catalog::entries(2, Kind::WeakHopf))
        .chain(catalog::entries(3, Kind::WeakBialgebra))
        .chain(catalog::entries(3, Kind::WeakHopf))
        .collect();
    for e in &entries {
        let cc = cross_check(&e.structure);
        assert!(cc.consistent, "{}: {:?}", e.structure.label, cc.items);
    }
    // 100 random single-constant perturbations.
    let values = [
        Scalar::one(),
        Scalar::from_integer(-1),
        Scalar::from_integer(2),
        Scalar::ratio(1, 2),
    ];
    for trial in 0..100 {
        let e = &entries[rng.gen_range(0..entries.len())];
        let mut h = e.structure.clone();
        let n = h.dim();
        let v = values[rng.gen_range(0..values.len())].clone();
        match rng.gen_range(0..3u8) {
            0 => {
                let (i, j, k) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                let cur = h.algebra.mult.get(i, j, k) + &v;
                h.algebra.mult.set(i, j, k, cur);
            }
            1 => {
                let (k, i, j) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                let cur = h.coalgebra.comult.get(k, i, j) + &v;
                h.coalgebra.comult.set(k, i, j, cur);
            }
            _ => {
                let k = rng.gen_range(0..n);
                let cur = h.coalgebra.counit.get(k) + &v;
                h.coalgebra.counit.set(k, cur);
            }
        }
        let cc = cross_check(&h);
        assert!(
            cc.consistent,
            "perturbation {} of {} diverges: {:?}",
            trial, e.structure.label, cc.items
        );
    }
    report(
        "9",
        true,
        "map-level and constant-level verdicts agree on 28 entries + 100 perturbations",
    );
}

#[test]
fn acceptance_10_fingerprint_separation() {
    // Dimension 2: the stated separating components.
    let f1 = fingerprint(&catalog::get(2, Kind::WeakBialgebra, 1).unwrap().structure);
    let f2 = fingerprint(&catalog::get(2, Kind::WeakBialgebra, 2).unwrap().structure);
    let f3 = fingerprint(&catalog::get(2, Kind::WeakBialgebra, 3).unwrap().structure);
    assert_eq!(f1.trace_mul_delta, Scalar::from_integer(2));
    assert_eq!(f2.trace_mul_delta, Scalar::one());
    assert_eq!(f1.first_difference(&f2), Some("trace-mul-delta"));
    assert_eq!(f1.first_difference(&f3), Some("eps-on-unit"));
    assert_eq!(f2.first_difference(&f3), Some("eps-on-unit"));
    let sep2 = catalog::pairwise_separation(2, Kind::WeakBialgebra);
    assert!(sep2.inconclusive_pairs.is_empty());
    // Dimension 3: generated matrix with inconclusive pairs listed.
    let sep3 = catalog::pairwise_separation(3, Kind::WeakBialgebra);
    assert_eq!(sep3.cells.len(), 190);
    for cell in &sep3.cells {
        if cell.separated_by.is_none() {
            assert!(sep3.inconclusive_pairs.contains(&(cell.first, cell.second)));
        }
    }
    // Mutation test: a duplicated entry (transported copy) must never be
    // claimed separated.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for index in [1, 5, 10, 13, 18, 20] {
        let e = catalog::get(3, Kind::WeakBialgebra, index)
            .unwrap()
            .structure;
        let g = random_basis_change(&mut rng, 3);
        let copy = transport(&e, &g).unwrap();
        assert_eq!(
            fingerprint(&e).first_difference(&fingerprint(&copy)),
            None,
            "false separation of entry ({}) from its own transported copy",
            index
        );
    }
    report(
        "10",
        true,
        &format!(
            "dim-2 fully separated; dim-3 matrix has {} inconclusive pair(s), none false",
            sep3.inconclusive_pairs.len()
        ),
    );
}
