//! Worked per-operation checks on catalog entries and the named examples,
//! with expected values computed independently where they are not forced.

use weakhopf::axioms::{residual, verify, AxiomId, Level};
use weakhopf::catalog::{self, Kind};
use weakhopf::constructions::{adjoin_two_units, chain_construction, sweedler5, RawAlgebra};
use weakhopf::exactmath::{trace_bilinear_rank, Scalar, Tensor3, Vector};
use weakhopf::structure::Endo;
use weakhopf::transport::{is_morphism_witness, stabilizer_tangent_dim, transport, BasisChange};

#[test]
fn trace_form_rank_of_the_unital_dim2_algebra() {
    // L_{e1} = id, L_{e2} = [[0,0],[1,1]]; Gram of traces = [[2,1],[1,1]],
    // which row-reduces to rank 2.
    let base = catalog::base_algebra(2, 2).unwrap();
    assert_eq!(trace_bilinear_rank(&base.mult), 2);
}

#[test]
fn multiply_examples() {
    let e = catalog::get(2, Kind::WeakBialgebra, 1).unwrap().structure;
    let e2 = Vector::basis(2, 1);
    assert_eq!(e.multiply(&e2, &e2).unwrap(), e2);
    let x = Vector::from_entries(vec![Scalar::ratio(3, 2), Scalar::from_integer(-5)]);
    assert_eq!(e.multiply(&e.algebra.unit, &x).unwrap(), x);
    // xc = -cx in the five-dimensional example.
    let s5 = sweedler5();
    let xc = s5
        .multiply(&Vector::basis(5, 2), &Vector::basis(5, 3))
        .unwrap();
    let mut expected = Vector::zeros(5);
    expected.set(4, Scalar::from_integer(-1));
    assert_eq!(xc, expected);
}

#[test]
fn comultiply_and_counit_examples() {
    // Two-unit extension over the empty algebra: Δ(1) = (1-e)⊗(1-e) + e⊗e,
    // ε(1) = 2.
    let h = adjoin_two_units(&RawAlgebra::empty()).unwrap();
    let d1 = h.delta_unit();
    let diff = Vector::basis(2, 0).sub(&Vector::basis(2, 1));
    let expected = h
        .outer(&diff, &diff)
        .add(&h.outer(&Vector::basis(2, 1), &Vector::basis(2, 1)));
    assert_eq!(d1, expected);
    assert_eq!(h.counit(&h.algebra.unit), Scalar::from_integer(2));
    assert!(h.comultiply(&Vector::zeros(2)).unwrap().is_zero());
    // Δ(x) = c⊗x + x⊗e in the five-dimensional example.
    let s5 = sweedler5();
    let dx = s5.comultiply(&Vector::basis(5, 2)).unwrap();
    let mut expected = weakhopf::exactmath::Tensor2::zeros(5);
    expected.set(3, 2, Scalar::one());
    expected.set(2, 1, Scalar::one());
    assert_eq!(dx, expected);
    // Chain counit values.
    let chain = chain_construction(4, &RawAlgebra::empty()).unwrap();
    assert_eq!(chain.counit(&Vector::basis(4, 1)), Scalar::from_integer(3));
}

#[test]
fn convolve_examples() {
    // Grouplike e2 in the strict dim-2 entry: (id ⋆ id)(e2) = e2·e2 = e2.
    let h = catalog::get(2, Kind::WeakBialgebra, 1).unwrap().structure;
    let id = Endo::identity(2);
    let conv = h.convolve(&id, &id).unwrap();
    assert_eq!(conv.apply(&Vector::basis(2, 1)), Vector::basis(2, 1));
    // (id ⋆ S)(c) = c·c = e in the five-dimensional example.
    let s5 = sweedler5();
    let s = Endo {
        matrix: s5.antipode.clone().unwrap(),
    };
    let conv = s5.convolve(&Endo::identity(5), &s).unwrap();
    assert_eq!(conv.apply(&Vector::basis(5, 3)), Vector::basis(5, 1));
}

#[test]
fn unit_axiom_on_the_chain_algebra() {
    let h = chain_construction(5, &RawAlgebra::empty()).unwrap();
    assert!(residual(&h, AxiomId::Unit).unwrap().pass());
}

#[test]
fn perturbed_compat_on_the_sweedler_example() {
    let mut h = sweedler5();
    let cur = h.coalgebra.comult.get(0, 0, 0) + &Scalar::one();
    h.coalgebra.comult.set(0, 0, 0, cur);
    let r = residual(&h, AxiomId::Compat).unwrap();
    assert!(!r.pass());
    let (witness, _) = r.first_witness().unwrap();
    assert_eq!(&witness[..2], &[1, 1]);
}

#[test]
fn strict_level_implies_weak_level() {
    for k in 1..=4 {
        let b = weakhopf::constructions::group_bialgebra(k);
        assert!(verify(&b, Level::StrictBialgebra).pass);
        assert!(verify(&b, Level::WeakBialgebra).pass);
    }
}

#[test]
fn transport_fixes_entry_three_under_the_claimed_matrix() {
    let e3 = catalog::get(2, Kind::WeakBialgebra, 3).unwrap().structure;
    let g = BasisChange::from_int_rows(&[&[1, 1], &[0, -1]]).unwrap();
    let moved = transport(&e3, &g).unwrap();
    assert_eq!(moved.algebra.mult, e3.algebra.mult);
    assert_eq!(moved.coalgebra.comult, e3.coalgebra.comult);
    assert_eq!(moved.coalgebra.counit, e3.coalgebra.counit);
    assert_eq!(moved.algebra.unit, e3.algebra.unit);
}

#[test]
fn counit_on_unit_obstructs_entry1_entry3_isomorphism() {
    // ε(1) is transport-invariant, so no invertible matrix carries entry (1)
    // to entry (3); spot-check a small rational grid.
    let h1 = catalog::get(2, Kind::WeakBialgebra, 1).unwrap().structure;
    let h3 = catalog::get(2, Kind::WeakBialgebra, 3).unwrap().structure;
    let vals = [-2i64, -1, 0, 1, 2];
    let mut tried = 0;
    for a in vals {
        for b in vals {
            for c in vals {
                for d in vals {
                    let m = weakhopf::exactmath::Matrix::from_int_rows(&[&[a, b], &[c, d]]);
                    let Ok(g) = BasisChange::new(m) else { continue };
                    let check = is_morphism_witness(&h1, &h3, &g).unwrap();
                    assert!(!check.pass);
                    tried += 1;
                    if tried >= 100 {
                        return;
                    }
                }
            }
        }
    }
}

#[test]
fn tangent_dimension_of_the_trivial_bialgebra_is_zero() {
    let b = weakhopf::constructions::group_bialgebra(1);
    let t = stabilizer_tangent_dim(&b);
    assert_eq!(t.tangent_dim, 0);
    assert_eq!(t.orbit_dim, 1);
}

#[test]
fn corrupting_one_catalog_constant_fails_exactly_one_entry() {
    let mut entries = catalog::entries(3, Kind::WeakBialgebra);
    let victim = 4;
    let cur = entries[victim].structure.coalgebra.comult.get(1, 1, 1) + &Scalar::one();
    entries[victim].structure.coalgebra.comult.set(1, 1, 1, cur);
    let failures: Vec<usize> = entries
        .iter()
        .enumerate()
        .filter(|(_, e)| !verify(&e.structure, Level::WeakBialgebra).pass)
        .map(|(i, _)| i)
        .collect();
    assert_eq!(failures, vec![victim]);
}

#[test]
fn truncated_polynomial_algebras_are_refused() {
    // Basis x, x², x³ with products x^i·x^j = x^(i+j) truncated above 3:
    // associative, but the two-unit extension violates the weak counit
    // identity, so the builder reports the axiom instead of emitting it.
    let mut mult = Tensor3::zeros(3);
    for i in 0..3usize {
        for j in 0..3usize {
            if i + j + 2 <= 3 {
                mult.set(i, j, i + j + 1, Scalar::one());
            }
        }
    }
    let raw = RawAlgebra::from_mult(mult);
    assert!(raw.is_associative());
    let err = adjoin_two_units(&raw).unwrap_err();
    assert!(matches!(
        err,
        weakhopf::constructions::ConstructionError::OutputFailedVerification {
            axiom: AxiomId::WeakCounitA | AxiomId::WeakCounitB,
            ..
        }
    ));
}

/// Product algebra K × ... × K: basis 1, then n-1 orthogonal idempotents,
/// with the grouplike comultiplication pattern around the chosen idempotent.
fn orthogonal_idempotent_structure(n: usize, chosen: usize) -> weakhopf::structure::WeakStructure {
    let mut mult = Tensor3::zeros(n);
    for i in 0..n {
        mult.set(0, i, i, Scalar::one());
        if i != 0 {
            mult.set(i, 0, i, Scalar::one());
            mult.set(i, i, i, Scalar::one());
        }
    }
    let mut comult = Tensor3::zeros(n);
    let diff = Vector::basis(n, 0).sub(&Vector::basis(n, chosen));
    for i in 0..n {
        for j in 0..n {
            if !diff.get(i).is_zero() && !diff.get(j).is_zero() {
                comult.add_to(0, i, j, &(diff.get(i) * diff.get(j)));
            }
        }
    }
    comult.add_to(0, chosen, chosen, &Scalar::one());
    for k in 1..n {
        comult.set(k, k, k, Scalar::one());
    }
    let mut counit = Vector::from_entries(vec![Scalar::one(); n]);
    counit.set(0, Scalar::from_integer(2));
    weakhopf::structure::WeakStructure::new(
        weakhopf::structure::AlgebraStruct::new(mult, Vector::basis(n, 0)),
        weakhopf::structure::CoalgebraStruct::new(comult, counit),
        None,
        format!("orthogonal-idempotents({})", n),
    )
}

#[test]
fn orthogonal_idempotent_structures_small_dims() {
    // The chosen idempotent is not a relative unit for the others
    // (e2·e3 = 0), so the idempotent builder rejects the product algebra;
    // the published recipe is a standalone structure, not an instance of it.
    let k3 = orthogonal_idempotent_structure(3, 1);
    let err = weakhopf::constructions::weak_from_idempotent(&k3.algebra, &Vector::basis(3, 1))
        .unwrap_err();
    assert_eq!(
        err,
        weakhopf::constructions::ConstructionError::NotRelativeUnit
    );
    // Built directly, the recipe verifies in dimension 3 ...
    assert!(verify(&k3, Level::WeakBialgebra).pass);
    // ... but in dimension 4 it breaks the weak counit identity on triples
    // avoiding the chosen idempotent.
    let k4 = orthogonal_idempotent_structure(4, 1);
    let r = residual(&k4, AxiomId::WeakCounitA).unwrap();
    assert!(!r.pass());
}

#[test]
fn grouplikes_on_a_grid_for_higher_dimensions() {
    let s5 = sweedler5();
    assert!(matches!(
        s5.grouplikes(),
        Err(weakhopf::structure::GrouplikeError::DimensionTooLarge(5))
    ));
    // On a supplied candidate grid the exact filter finds e and c.
    let mut grid: Vec<Vector> = (0..5).map(|i| Vector::basis(5, i)).collect();
    grid.push(Vector::basis(5, 1).add(&Vector::basis(5, 3)));
    let found = s5.grouplikes_on_grid(&grid);
    assert_eq!(found, vec![Vector::basis(5, 3), Vector::basis(5, 1)]);
}

#[test]
fn weak_counit_orders_pass_or_fail_together_on_the_catalog() {
    for (dim, kind) in [(2, Kind::WeakBialgebra), (3, Kind::WeakBialgebra)] {
        for e in catalog::entries(dim, kind) {
            let a = residual(&e.structure, AxiomId::WeakCounitA).unwrap().pass();
            let b = residual(&e.structure, AxiomId::WeakCounitB).unwrap().pass();
            assert_eq!(a, b, "{}", e.structure.label);
        }
    }
}
