//! Property tests for the exact kernel: field axioms, inverse laws, and
//! basis-invariance of the rank fingerprints.

use proptest::prelude::*;

use weakhopf::exactmath::{trace_bilinear_rank, Matrix, Scalar, Tensor2, Tensor3};
use weakhopf::structure::Endo;
use weakhopf::transport::{transport, BasisChange};

fn rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| Scalar::ratio(p, q))
}

/// Scalars in Q(zeta_N) for small N, including plain rationals.
fn cyclotomic() -> impl Strategy<Value = Scalar> {
    (
        prop::sample::select(vec![1u32, 3, 4, 5]),
        prop::collection::vec(-6i64..=6, 4),
    )
        .prop_map(|(n, coeffs)| {
            let z = Scalar::zeta(n);
            let mut acc = Scalar::zero();
            for (k, c) in coeffs.into_iter().enumerate() {
                let term = &Scalar::from_integer(c) * &z.pow(k as u64);
                acc = &acc + &term;
            }
            acc
        })
}

proptest! {
    #[test]
    fn field_axioms_hold_exactly(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        // Scalars of compatible conductor: promote through a common zeta.
        prop_assume!(a.conductor() == b.conductor() || a.conductor() == 1 || b.conductor() == 1);
        prop_assume!(b.conductor() == c.conductor() || b.conductor() == 1 || c.conductor() == 1);
        prop_assume!(a.conductor() == c.conductor() || a.conductor() == 1 || c.conductor() == 1);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, Scalar::one());
        }
    }

    #[test]
    fn rational_round_trip(a in rational()) {
        let text = a.to_string();
        let back: Scalar = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn cyclotomic_round_trip(a in cyclotomic()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |vals| {
        let mut m = Matrix::zeros(n, n);
        for (idx, v) in vals.into_iter().enumerate() {
            m.set(idx / n, idx % n, Scalar::from_integer(v));
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_times_matrix_is_identity(m in small_matrix(3)) {
        prop_assume!(m.is_invertible());
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
        prop_assert_eq!(inv.mul(&m), Matrix::identity(3));
    }

    #[test]
    fn tensor2_rank_is_basis_invariant(
        entries in prop::collection::vec(-2i64..=2, 9),
        g in small_matrix(3),
    ) {
        prop_assume!(g.is_invertible());
        let mut t = Tensor2::zeros(3);
        for (idx, v) in entries.into_iter().enumerate() {
            t.set(idx / 3, idx % 3, Scalar::from_integer(v));
        }
        // (g⊗g)t
        let mut moved = Tensor2::zeros(3);
        for (i, j, v) in t.iter_nonzero() {
            for a in 0..3 {
                for b in 0..3 {
                    let c = &(v * g.get(a, i)) * g.get(b, j);
                    moved.add_to(a, b, &c);
                }
            }
        }
        prop_assert_eq!(t.rank(), moved.rank());
    }

    #[test]
    fn trace_form_rank_is_isomorphism_invariant(g in small_matrix(3)) {
        prop_assume!(g.is_invertible());
        // Conjugate a fixed associative multiplication by g via transport.
        let e = weakhopf::catalog::get(3, weakhopf::catalog::Kind::WeakBialgebra, 12)
            .unwrap()
            .structure;
        let bc = BasisChange::new(g).unwrap();
        let moved = transport(&e, &bc).unwrap();
        prop_assert_eq!(
            trace_bilinear_rank(&e.algebra.mult),
            trace_bilinear_rank(&moved.algebra.mult)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Convolution is associative on endomorphisms whenever the underlying
    /// structure is a verified weak bialgebra.
    #[test]
    fn convolution_is_associative(
        idx in prop::sample::select(vec![1usize, 3, 7, 10, 12, 20]),
        a in small_matrix(3),
        b in small_matrix(3),
        c in small_matrix(3),
    ) {
        let h = weakhopf::catalog::get(3, weakhopf::catalog::Kind::WeakBialgebra, idx)
            .unwrap()
            .structure;
        let (ea, eb, ec) = (Endo { matrix: a }, Endo { matrix: b }, Endo { matrix: c });
        let left = h.convolve(&h.convolve(&ea, &eb).unwrap(), &ec).unwrap();
        let right = h.convolve(&ea, &h.convolve(&eb, &ec).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// The counit structure-constant equation agrees with the map-level
    /// counit axiom on arbitrary small coalgebras, passing or failing.
    #[test]
    fn sc2_matches_counit_axiom(
        dvals in prop::collection::vec(-1i64..=2, 8),
        fvals in prop::collection::vec(-1i64..=2, 2),
    ) {
        use weakhopf::axioms::{residual, sc_residual, AxiomId, ScEquation};
        use weakhopf::exactmath::Vector;
        use weakhopf::structure::{AlgebraStruct, CoalgebraStruct, WeakStructure};
        let mut comult = Tensor3::zeros(2);
        for (idx, v) in dvals.into_iter().enumerate() {
            comult.set(idx / 4, (idx / 2) % 2, idx % 2, Scalar::from_integer(v));
        }
        let counit = Vector::from_entries(fvals.into_iter().map(Scalar::from_integer).collect());
        let base = weakhopf::catalog::base_algebra(2, 2).unwrap();
        let h = WeakStructure::new(
            AlgebraStruct::new(base.mult.clone(), base.unit.clone()),
            CoalgebraStruct::new(comult, counit),
            None,
            "random-coalgebra",
        );
        let map_pass = residual(&h, AxiomId::Counit).unwrap().pass();
        let sc_pass = sc_residual(&h, ScEquation::Sc2).unwrap().pass();
        prop_assert_eq!(map_pass, sc_pass);
    }
}
