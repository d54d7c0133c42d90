//! Builders that extend plain algebras, bialgebras and Hopf algebras to weak
//! bialgebras or weak Hopf algebras by adjoining unit elements, plus the
//! Sweedler and Taft families and small generators for test inputs.
//!
//! Every builder re-verifies its output at the promised level and refuses to
//! emit a failing structure.

use thiserror::Error;

use crate::axioms::{is_strict_hopf, verify, AxiomId, Level};
use crate::exactmath::{Matrix, Scalar, Tensor2, Tensor3, Vector};
use crate::structure::{AlgebraStruct, CoalgebraStruct, WeakStructure};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("input algebra is not associative")]
    NotAssociative,
    #[error("input algebra is not unital")]
    NotUnital,
    #[error("designated unit must be a basis vector")]
    UnitNotBasisVector,
    #[error("complement of the unit is not a subalgebra")]
    NotSubalgebra,
    #[error("element lies outside the complement of the unit")]
    NotInComplement,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element is not a relative unit for the complement")]
    NotRelativeUnit,
    #[error("input does not verify as a strict bialgebra")]
    NotStrictBialgebra,
    #[error("input does not verify as a strict Hopf algebra")]
    NotStrictHopf,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("construction output `{label}` fails {axiom:?} at witness {witness:?}")]
    OutputFailedVerification {
        label: String,
        axiom: AxiomId,
        witness: Vec<usize>,
    },
}

/// Plain multiplication data, possibly non-unital; input type for the
/// unit-adjoining builders.
#[derive(Clone, Debug)]
pub struct RawAlgebra {
    pub dim: usize,
    pub mult: Tensor3,
    pub unit: Option<Vector>,
}

impl RawAlgebra {
    pub fn empty() -> RawAlgebra {
        RawAlgebra {
            dim: 0,
            mult: Tensor3::zeros(0),
            unit: None,
        }
    }

    pub fn from_mult(mult: Tensor3) -> RawAlgebra {
        RawAlgebra {
            dim: mult.dim(),
            mult,
            unit: None,
        }
    }

    pub fn is_associative(&self) -> bool {
        if self.dim == 0 {
            return true;
        }
        let alg = AlgebraStruct {
            dim: self.dim,
            mult: self.mult.clone(),
            unit: Vector::zeros(self.dim),
            unital: false,
        };
        alg.is_associative()
    }
}

fn check_output(h: WeakStructure, level: Level) -> Result<WeakStructure, ConstructionError> {
    let report = verify(&h, level);
    if report.pass {
        Ok(h)
    } else {
        let bad = report.outcomes.iter().find(|o| !o.pass).unwrap();
        Err(ConstructionError::OutputFailedVerification {
            label: h.label.clone(),
            axiom: bad.axiom,
            witness: bad.witness.clone().unwrap_or_default(),
        })
    }
}

/// Grouplike row of a comultiplication tensor: Δ(e_k) = v ⊗ v.
fn set_delta_outer(comult: &mut Tensor3, k: usize, v: &Vector) {
    for i in 0..v.dim() {
        if v.get(i).is_zero() {
            continue;
        }
        for j in 0..v.dim() {
            if !v.get(j).is_zero() {
                comult.add_to(k, i, j, &(v.get(i) * v.get(j)));
            }
        }
    }
}

/// Adjoins two successive unit elements to an associative algebra. Basis
/// order of the result: global unit, relative unit, then the input basis.
pub fn adjoin_two_units(a: &RawAlgebra) -> Result<WeakStructure, ConstructionError> {
    if !a.is_associative() {
        return Err(ConstructionError::NotAssociative);
    }
    let n = a.dim + 2;
    let mut mult = Tensor3::zeros(n);
    // index 0 = global unit, 1 = relative unit e, 2.. = input basis
    for i in 0..n {
        mult.set(0, i, i, Scalar::one());
        if i != 0 {
            mult.set(i, 0, i, Scalar::one());
        }
    }
    mult.set(1, 1, 1, Scalar::one());
    for i in 2..n {
        mult.set(1, i, i, Scalar::one());
        mult.set(i, 1, i, Scalar::one());
    }
    for ([i, j, k], v) in a.mult.iter_nonzero() {
        mult.set(i + 2, j + 2, k + 2, v.clone());
    }
    let unit = Vector::basis(n, 0);
    let mut comult = Tensor3::zeros(n);
    // Δ(1) = (1-e)⊗(1-e) + e⊗e, all other basis vectors grouplike.
    let one_minus_e = Vector::basis(n, 0).sub(&Vector::basis(n, 1));
    set_delta_outer(&mut comult, 0, &one_minus_e);
    set_delta_outer(&mut comult, 0, &Vector::basis(n, 1));
    for k in 1..n {
        set_delta_outer(&mut comult, k, &Vector::basis(n, k));
    }
    let mut counit = Vector::from_entries(vec![Scalar::one(); n]);
    counit.set(0, Scalar::from_integer(2));
    let h = WeakStructure::new(
        AlgebraStruct::new(mult, unit),
        CoalgebraStruct::new(comult, counit),
        None,
        format!("adjoin_two_units(dim {})", a.dim),
    );
    check_output(h, Level::WeakBialgebra)
}

/// Weak bialgebra structure on a unital algebra whose non-unit basis spans a
/// subalgebra with a relative unit `e`.
pub fn weak_from_idempotent(
    alg: &AlgebraStruct,
    e: &Vector,
) -> Result<WeakStructure, ConstructionError> {
    let n = alg.dim;
    if !alg.unit_law_holds() {
        return Err(ConstructionError::NotUnital);
    }
    if !alg.is_associative() {
        return Err(ConstructionError::NotAssociative);
    }
    // The unit must be a basis vector so that "the complement" makes sense.
    let unit_idx = (0..n)
        .find(|&i| alg.unit == Vector::basis(n, i))
        .ok_or(ConstructionError::UnitNotBasisVector)?;
    let complement: Vec<usize> = (0..n).filter(|&i| i != unit_idx).collect();
    // Subalgebra check: products of complement basis vectors avoid the unit axis.
    for &i in &complement {
        for &j in &complement {
            if !alg.mult.get(i, j, unit_idx).is_zero() {
                return Err(ConstructionError::NotSubalgebra);
            }
        }
    }
    if !e.get(unit_idx).is_zero() {
        return Err(ConstructionError::NotInComplement);
    }
    if alg.multiply(e, e).unwrap() != *e {
        return Err(ConstructionError::NotIdempotent);
    }
    for &i in &complement {
        let b = Vector::basis(n, i);
        if alg.multiply(e, &b).unwrap() != b || alg.multiply(&b, e).unwrap() != b {
            return Err(ConstructionError::NotRelativeUnit);
        }
    }
    let mut comult = Tensor3::zeros(n);
    let one_minus_e = alg.unit.sub(e);
    set_delta_outer(&mut comult, unit_idx, &one_minus_e);
    set_delta_outer(&mut comult, unit_idx, e);
    for &k in &complement {
        set_delta_outer(&mut comult, k, &Vector::basis(n, k));
    }
    let mut counit = Vector::from_entries(vec![Scalar::one(); n]);
    counit.set(unit_idx, Scalar::from_integer(2));
    let h = WeakStructure::new(
        alg.clone(),
        CoalgebraStruct::new(comult, counit),
        None,
        format!("weak_from_idempotent(dim {})", n),
    );
    check_output(h, Level::WeakBialgebra)
}

/// Weak bialgebra on a chain algebra e_i · e_j = e_max(i,j) glued to an
/// associative tail algebra on which every e_i acts as a unit.
pub fn chain_construction(p: usize, b2: &RawAlgebra) -> Result<WeakStructure, ConstructionError> {
    if p < 1 {
        return Err(ConstructionError::BadParameter(
            "chain length must be >= 1".into(),
        ));
    }
    if !b2.is_associative() {
        return Err(ConstructionError::NotAssociative);
    }
    let n = p + b2.dim;
    let mut mult = Tensor3::zeros(n);
    for i in 0..p {
        for j in 0..p {
            mult.set(i, j, i.max(j), Scalar::one());
        }
        for t in p..n {
            mult.set(i, t, t, Scalar::one());
            mult.set(t, i, t, Scalar::one());
        }
    }
    for ([i, j, k], v) in b2.mult.iter_nonzero() {
        mult.set(i + p, j + p, k + p, v.clone());
    }
    // Telescoping comultiplication:
    // Δ(e_i) = Σ_{t=i}^{p-2} (e_t - e_{t+1})⊗(e_t - e_{t+1}) + e_{p-1}⊗e_{p-1}.
    let mut comult = Tensor3::zeros(n);
    for i in 0..p {
        for t in i..p - 1 {
            let d = Vector::basis(n, t).sub(&Vector::basis(n, t + 1));
            set_delta_outer(&mut comult, i, &d);
        }
        set_delta_outer(&mut comult, i, &Vector::basis(n, p - 1));
    }
    for k in p..n {
        set_delta_outer(&mut comult, k, &Vector::basis(n, k));
    }
    let mut counit = Vector::zeros(n);
    for i in 0..p {
        counit.set(i, Scalar::from_integer((p - i) as i64));
    }
    for t in p..n {
        counit.set(t, Scalar::one());
    }
    let h = WeakStructure::new(
        AlgebraStruct::new(mult, Vector::basis(n, 0)),
        CoalgebraStruct::new(comult, counit),
        None,
        format!("chain(p={}, tail dim {})", p, b2.dim),
    );
    check_output(h, Level::WeakBialgebra)
}

/// The chain algebra of dimension n with identity antipode: a weak Hopf
/// algebra for every n >= 2.
pub fn max_algebra_whopf(n: usize) -> Result<WeakStructure, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::BadParameter(
            "dimension must be >= 2".into(),
        ));
    }
    let base = chain_construction(n, &RawAlgebra::empty())?;
    let h = WeakStructure::new(
        base.algebra,
        base.coalgebra,
        Some(Matrix::identity(n)),
        format!("max_algebra({})", n),
    );
    check_output(h, Level::WeakHopf)
}

/// Result of adjoining one global unit to a strict bialgebra. New basis
/// vector first, input basis shifted by one.
pub fn adjoin_unit_to_bialgebra(b: &WeakStructure) -> Result<WeakStructure, ConstructionError> {
    if !verify(b, Level::StrictBialgebra).pass {
        return Err(ConstructionError::NotStrictBialgebra);
    }
    let h = extend_by_one_unit(b)?;
    check_output(h, Level::WeakBialgebra)
}

/// Same extension for a strict Hopf algebra; the antipode fixes the new unit.
pub fn adjoin_unit_to_hopf(b: &WeakStructure) -> Result<WeakStructure, ConstructionError> {
    if b.antipode.is_none() || !is_strict_hopf(b) {
        return Err(ConstructionError::NotStrictHopf);
    }
    let mut h = extend_by_one_unit(b)?;
    let n = h.dim();
    let mut s = Matrix::identity(n);
    let old = b.antipode.as_ref().unwrap();
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            s.set(i + 1, j + 1, old.get(i, j).clone());
        }
        // clear the identity diagonal inside the block
        if old.get(i, i).is_zero() {
            s.set(i + 1, i + 1, Scalar::zero());
        }
    }
    h.antipode = Some(s);
    h.label = format!("adjoin_unit_to_hopf({})", b.label);
    check_output(h, Level::WeakHopf)
}

fn extend_by_one_unit(b: &WeakStructure) -> Result<WeakStructure, ConstructionError> {
    let m = b.dim();
    let n = m + 1;
    let mut mult = Tensor3::zeros(n);
    for i in 0..n {
        mult.set(0, i, i, Scalar::one());
        if i != 0 {
            mult.set(i, 0, i, Scalar::one());
        }
    }
    for ([i, j, k], v) in b.algebra.mult.iter_nonzero() {
        mult.set(i + 1, j + 1, k + 1, v.clone());
    }
    let mut comult = Tensor3::zeros(n);
    let mut old_unit = Vector::zeros(n);
    for i in 0..m {
        old_unit.set(i + 1, b.algebra.unit.get(i).clone());
    }
    let diff = Vector::basis(n, 0).sub(&old_unit);
    set_delta_outer(&mut comult, 0, &diff);
    set_delta_outer(&mut comult, 0, &old_unit);
    for ([k, i, j], v) in b.coalgebra.comult.iter_nonzero() {
        comult.set(k + 1, i + 1, j + 1, v.clone());
    }
    let mut counit = Vector::zeros(n);
    counit.set(0, Scalar::from_integer(2));
    for i in 0..m {
        counit.set(i + 1, b.coalgebra.counit.get(i).clone());
    }
    Ok(WeakStructure::new(
        AlgebraStruct::new(mult, Vector::basis(n, 0)),
        CoalgebraStruct::new(comult, counit),
        None,
        format!("adjoin_unit({})", b.label),
    ))
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum TwoUnitVariant {
    A,
    B,
}

/// Adjoins two successive units to a strict bialgebra, with the
/// comultiplication of the chosen variant. When `extend_antipode` is set the
/// input must be strict Hopf and the antipode fixes both new units.
pub fn two_unit_variant(
    b: &WeakStructure,
    variant: TwoUnitVariant,
    extend_antipode: bool,
) -> Result<WeakStructure, ConstructionError> {
    if !verify(b, Level::StrictBialgebra).pass {
        return Err(ConstructionError::NotStrictBialgebra);
    }
    if extend_antipode && (b.antipode.is_none() || !is_strict_hopf(b)) {
        return Err(ConstructionError::NotStrictHopf);
    }
    let m = b.dim();
    let n = m + 2;
    // index 0 = global unit 1, 1 = intermediate unit e, 2.. = input basis.
    let mut mult = Tensor3::zeros(n);
    for i in 0..n {
        mult.set(0, i, i, Scalar::one());
        if i != 0 {
            mult.set(i, 0, i, Scalar::one());
        }
    }
    mult.set(1, 1, 1, Scalar::one());
    for i in 2..n {
        mult.set(1, i, i, Scalar::one());
        mult.set(i, 1, i, Scalar::one());
    }
    for ([i, j, k], v) in b.algebra.mult.iter_nonzero() {
        mult.set(i + 2, j + 2, k + 2, v.clone());
    }
    let one = Vector::basis(n, 0);
    let e = Vector::basis(n, 1);
    let mut u = Vector::zeros(n);
    for i in 0..m {
        u.set(i + 2, b.algebra.unit.get(i).clone());
    }
    let mut comult = Tensor3::zeros(n);
    let add_outer_pair = |comult: &mut Tensor3, k: usize, left: &Vector, right: &Vector| {
        for i in 0..n {
            if left.get(i).is_zero() {
                continue;
            }
            for j in 0..n {
                if !right.get(j).is_zero() {
                    comult.add_to(k, i, j, &(left.get(i) * right.get(j)));
                }
            }
        }
    };
    match variant {
        TwoUnitVariant::A => {
            // Δ(1) = 1⊗(e-u) + u⊗(1-2e+2u), Δ(e) = e⊗(e-u) + u⊗(2u-e)
            let e_minus_u = e.sub(&u);
            let tail1 = one
                .sub(&e.scale(&Scalar::from_integer(2)))
                .add(&u.scale(&Scalar::from_integer(2)));
            add_outer_pair(&mut comult, 0, &one, &e_minus_u);
            add_outer_pair(&mut comult, 0, &u, &tail1);
            let tail_e = u.scale(&Scalar::from_integer(2)).sub(&e);
            add_outer_pair(&mut comult, 1, &e, &e_minus_u);
            add_outer_pair(&mut comult, 1, &u, &tail_e);
        }
        TwoUnitVariant::B => {
            // Δ(1) = (1-e)⊗(1-e) + (e-u)⊗(e-u) + u⊗u, Δ(e) = (e-u)⊗(e-u) + u⊗u
            let one_minus_e = one.sub(&e);
            let e_minus_u = e.sub(&u);
            set_delta_outer(&mut comult, 0, &one_minus_e);
            set_delta_outer(&mut comult, 0, &e_minus_u);
            for i in 0..n {
                if u.get(i).is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !u.get(j).is_zero() {
                        comult.add_to(0, i, j, &(u.get(i) * u.get(j)));
                    }
                }
            }
            set_delta_outer(&mut comult, 1, &e_minus_u);
            add_outer_pair(&mut comult, 1, &u, &u);
        }
    }
    for ([k, i, j], v) in b.coalgebra.comult.iter_nonzero() {
        comult.set(k + 2, i + 2, j + 2, v.clone());
    }
    let mut counit = Vector::zeros(n);
    let (eps_one, eps_e) = match variant {
        TwoUnitVariant::A => (2, 2),
        TwoUnitVariant::B => (3, 2),
    };
    counit.set(0, Scalar::from_integer(eps_one));
    counit.set(1, Scalar::from_integer(eps_e));
    for i in 0..m {
        counit.set(i + 2, b.coalgebra.counit.get(i).clone());
    }
    let antipode = if extend_antipode {
        let mut s = Matrix::identity(n);
        let old = b.antipode.as_ref().unwrap();
        for i in 0..m {
            for j in 0..m {
                s.set(i + 2, j + 2, old.get(i, j).clone());
            }
            if old.get(i, i).is_zero() {
                s.set(i + 2, i + 2, Scalar::zero());
            }
        }
        Some(s)
    } else {
        None
    };
    let tag = match variant {
        TwoUnitVariant::A => 'a',
        TwoUnitVariant::B => 'b',
    };
    let h = WeakStructure::new(
        AlgebraStruct::new(mult, Vector::basis(n, 0)),
        CoalgebraStruct::new(comult, counit),
        antipode,
        format!("two_unit_variant_{}({})", tag, b.label),
    );
    let level = if extend_antipode {
        Level::WeakHopf
    } else {
        Level::WeakBialgebra
    };
    check_output(h, level)
}

/// The five-dimensional weak Hopf algebra extending the four-dimensional
/// Hopf algebra with relations c² = e, x² = 0, xc = -cx.
/// Basis order: 1, e, x, c, cx.
pub fn sweedler5() -> WeakStructure {
    let n = 5;
    let one = Scalar::one;
    let mut mult = Tensor3::zeros(n);
    for i in 0..n {
        mult.set(0, i, i, one());
        if i != 0 {
            mult.set(i, 0, i, one());
        }
    }
    // e is a unit for the span of {e, x, c, cx}
    mult.set(1, 1, 1, one());
    for i in 2..n {
        mult.set(1, i, i, one());
        mult.set(i, 1, i, one());
    }
    // x=2, c=3, cx=4
    mult.set(2, 3, 4, Scalar::from_integer(-1)); // x·c = -cx
    mult.set(3, 2, 4, one()); // c·x = cx
    mult.set(3, 3, 1, one()); // c·c = e
    mult.set(3, 4, 2, one()); // c·cx = x
    mult.set(4, 3, 2, Scalar::from_integer(-1)); // cx·c = -x
    let mut comult = Tensor3::zeros(n);
    let one_minus_e = Vector::basis(n, 0).sub(&Vector::basis(n, 1));
    set_delta_outer(&mut comult, 0, &one_minus_e);
    set_delta_outer(&mut comult, 0, &Vector::basis(n, 1));
    set_delta_outer(&mut comult, 1, &Vector::basis(n, 1));
    // Δ(x) = c⊗x + x⊗e
    comult.set(2, 3, 2, one());
    comult.set(2, 2, 1, one());
    set_delta_outer(&mut comult, 3, &Vector::basis(n, 3));
    // Δ(cx) = e⊗cx + cx⊗c
    comult.set(4, 1, 4, one());
    comult.set(4, 4, 3, one());
    let counit = Vector::from_entries(vec![
        Scalar::from_integer(2),
        one(),
        Scalar::zero(),
        one(),
        Scalar::zero(),
    ]);
    let mut s = Matrix::identity(n);
    s.set(2, 2, Scalar::zero());
    s.set(2, 4, Scalar::from_integer(-1)); // S(x) = -cx
    s.set(4, 4, Scalar::zero());
    s.set(4, 2, one()); // S(cx) = x
    WeakStructure::new(
        AlgebraStruct::new(mult, Vector::basis(n, 0)),
        CoalgebraStruct::new(comult, counit),
        Some(s),
        "sweedler5",
    )
}

/// The (n²+1)-dimensional weak Hopf algebra built on the Taft algebra with a
/// primitive n-th root of unity. Basis order: the adjoined unit, then the
/// words c^i x^j in lexicographic (i, j) order.
pub fn taft_weak_hopf(n: usize) -> Result<WeakStructure, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::BadParameter(
            "taft parameter must be >= 2".into(),
        ));
    }
    let dim = n * n + 1;
    let lambda = Scalar::zeta(n as u32);
    let word = |i: usize, j: usize| 1 + i * n + j;
    let mut mult = Tensor3::zeros(dim);
    for t in 0..dim {
        mult.set(0, t, t, Scalar::one());
        if t != 0 {
            mult.set(t, 0, t, Scalar::one());
        }
    }
    // (c^i1 x^j1)(c^i2 x^j2) = λ^(j1·i2) c^(i1+i2 mod n) x^(j1+j2), zero past x^(n-1)
    for i1 in 0..n {
        for j1 in 0..n {
            for i2 in 0..n {
                for j2 in 0..n {
                    if j1 + j2 >= n {
                        continue;
                    }
                    let coeff = lambda.pow((j1 * i2) as u64);
                    mult.set(
                        word(i1, j1),
                        word(i2, j2),
                        word((i1 + i2) % n, j1 + j2),
                        coeff,
                    );
                }
            }
        }
    }
    let alg = AlgebraStruct::new(mult, Vector::basis(dim, 0));
    // Comultiplication: Δ(1) from the two-unit pattern, Δ on words generated
    // multiplicatively from Δ(c) = c⊗c and Δ(x) = c⊗x + x⊗e.
    let e_idx = word(0, 0);
    let c_idx = word(1, 0);
    let x_idx = word(0, 1);
    let mut comult = Tensor3::zeros(dim);
    let one_minus_e = Vector::basis(dim, 0).sub(&Vector::basis(dim, e_idx));
    set_delta_outer(&mut comult, 0, &one_minus_e);
    set_delta_outer(&mut comult, 0, &Vector::basis(dim, e_idx));
    // scratch structure for bullet products while Δ rows are being filled
    let scratch = WeakStructure::new(
        alg.clone(),
        CoalgebraStruct::new(Tensor3::zeros(dim), Vector::zeros(dim)),
        None,
        "taft-scratch",
    );
    let mut dc = Tensor2::zeros(dim);
    dc.set(c_idx, c_idx, Scalar::one());
    let mut dx = Tensor2::zeros(dim);
    dx.set(c_idx, x_idx, Scalar::one());
    dx.set(x_idx, e_idx, Scalar::one());
    let mut de = Tensor2::zeros(dim);
    de.set(e_idx, e_idx, Scalar::one());
    for i in 0..n {
        for j in 0..n {
            let mut acc = de.clone();
            for _ in 0..i {
                acc = scratch.bullet2(&acc, &dc);
            }
            for _ in 0..j {
                acc = scratch.bullet2(&acc, &dx);
            }
            for (a, b, v) in acc.iter_nonzero() {
                comult.set(word(i, j), a, b, v.clone());
            }
        }
    }
    let mut counit = Vector::zeros(dim);
    counit.set(0, Scalar::from_integer(2));
    for i in 0..n {
        counit.set(word(i, 0), Scalar::one());
    }
    // Antipode: S(1) = 1, S(c) = c^(n-1), S(x) = -(c^(n-1) x), extended as an
    // algebra anti-homomorphism: S(c^i x^j) = S(x)^j · S(c)^i.
    let s_c = Vector::basis(dim, word(n - 1, 0));
    let s_x = Vector::basis(dim, word(n - 1, 1)).scale(&Scalar::from_integer(-1));
    let mut s = Matrix::zeros(dim, dim);
    s.set(0, 0, Scalar::one());
    for i in 0..n {
        for j in 0..n {
            let mut acc = Vector::basis(dim, e_idx);
            for _ in 0..j {
                acc = alg.multiply(&acc, &s_x).unwrap();
            }
            for _ in 0..i {
                acc = alg.multiply(&acc, &s_c).unwrap();
            }
            for t in 0..dim {
                s.set(word(i, j), t, acc.get(t).clone());
            }
        }
    }
    let h = WeakStructure::new(
        alg,
        CoalgebraStruct::new(comult, counit),
        Some(s),
        format!("taft({})", n),
    );
    check_output(h, Level::WeakHopf)
}

/// Group algebra of Z/k with grouplike basis; a strict Hopf algebra.
pub fn group_bialgebra(k: usize) -> WeakStructure {
    assert!(k >= 1);
    let mut mult = Tensor3::zeros(k);
    for i in 0..k {
        for j in 0..k {
            mult.set(i, j, (i + j) % k, Scalar::one());
        }
    }
    let mut comult = Tensor3::zeros(k);
    for i in 0..k {
        comult.set(i, i, i, Scalar::one());
    }
    let counit = Vector::from_entries(vec![Scalar::one(); k]);
    let mut s = Matrix::zeros(k, k);
    for i in 0..k {
        s.set(i, (k - i) % k, Scalar::one());
    }
    WeakStructure::new(
        AlgebraStruct::new(mult, Vector::basis(k, 0)),
        CoalgebraStruct::new(comult, counit),
        Some(s),
        format!("group_bialgebra(Z/{})", k),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{residual, verify_pass};

    #[test]
    fn adjoin_two_units_to_empty_is_dim2() {
        let h = adjoin_two_units(&RawAlgebra::empty()).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(verify_pass(&h, Level::WeakBialgebra));
        assert_eq!(h.counit(&h.algebra.unit), Scalar::from_integer(2));
    }

    #[test]
    fn adjoin_two_units_to_idempotent_line() {
        let mut mult = Tensor3::zeros(1);
        mult.set(0, 0, 0, Scalar::one());
        let h = adjoin_two_units(&RawAlgebra::from_mult(mult)).unwrap();
        assert_eq!(h.dim(), 3);
        assert!(verify_pass(&h, Level::WeakBialgebra));
        // ε(e) = 1 and the strict counit law fails: ε(a·1) = 1 vs ε(a)ε(1) = 2.
        assert_eq!(h.coalgebra.counit.get(1), &Scalar::one());
        assert!(!verify_pass(&h, Level::StrictBialgebra));
    }

    #[test]
    fn adjoin_two_units_rejects_zero_products() {
        // 1-dim null algebra: the forced structure breaks the weak counit
        // identity at (a, e, a), so the builder must refuse.
        let raw = RawAlgebra::from_mult(Tensor3::zeros(1));
        let err = adjoin_two_units(&raw).unwrap_err();
        assert!(matches!(
            err,
            ConstructionError::OutputFailedVerification {
                axiom: AxiomId::WeakCounitA,
                ..
            } | ConstructionError::OutputFailedVerification {
                axiom: AxiomId::WeakCounitB,
                ..
            }
        ));
    }

    #[test]
    fn chain_matches_counit_values() {
        let h = chain_construction(3, &RawAlgebra::empty()).unwrap();
        for i in 0..3 {
            assert_eq!(
                h.coalgebra.counit.get(i),
                &Scalar::from_integer((3 - i) as i64)
            );
        }
        assert!(verify_pass(&h, Level::WeakBialgebra));
    }

    #[test]
    fn max_algebra_is_weak_hopf() {
        for n in 2..=6 {
            let h = max_algebra_whopf(n).unwrap();
            assert!(verify_pass(&h, Level::WeakHopf), "n={}", n);
        }
        assert!(max_algebra_whopf(1).is_err());
    }

    #[test]
    fn sweedler5_verifies_and_relations_hold() {
        let h = sweedler5();
        assert!(verify_pass(&h, Level::WeakHopf));
        let x = Vector::basis(5, 2);
        let c = Vector::basis(5, 3);
        let xc = h.multiply(&x, &c).unwrap();
        let cx = h.multiply(&c, &x).unwrap();
        assert_eq!(xc, cx.scale(&Scalar::from_integer(-1)));
        assert!(!h.algebra.is_commutative());
        assert!(!h.coalgebra.is_cocommutative());
        // S²(x) = c·x·c⁻¹ = -x
        let sx = h.apply_antipode(&x).unwrap();
        let ssx = h.apply_antipode(&sx).unwrap();
        let c_inv = c.clone(); // c² = e, so c is its own inverse in the e-unital part
        let conj = h.multiply(&h.multiply(&c, &x).unwrap(), &c_inv).unwrap();
        assert_eq!(ssx, conj);
        assert_eq!(ssx, x.scale(&Scalar::from_integer(-1)));
    }

    #[test]
    fn group_bialgebra_is_strict_hopf() {
        for k in 1..=4 {
            let h = group_bialgebra(k);
            assert!(is_strict_hopf(&h), "k={}", k);
        }
    }

    #[test]
    fn adjoin_unit_to_z2_bialgebra() {
        let b = group_bialgebra(2);
        let h = adjoin_unit_to_bialgebra(&b).unwrap();
        assert_eq!(h.dim(), 3);
        assert!(verify_pass(&h, Level::WeakBialgebra));
        // strict counit law fails on the output
        let r = residual(&h, AxiomId::StrictEpsMult).unwrap();
        assert!(!r.pass());
        let hopf = adjoin_unit_to_hopf(&b).unwrap();
        assert!(verify_pass(&hopf, Level::WeakHopf));
    }

    #[test]
    fn taft2_matches_sweedler5() {
        let t = taft_weak_hopf(2).unwrap();
        let s = sweedler5();
        assert_eq!(t.algebra.mult, s.algebra.mult);
        assert_eq!(t.coalgebra.comult, s.coalgebra.comult);
        assert_eq!(t.coalgebra.counit, s.coalgebra.counit);
        assert_eq!(t.antipode, s.antipode);
    }

    #[test]
    fn taft3_is_weak_hopf_with_conductor_3() {
        let t = taft_weak_hopf(3).unwrap();
        assert_eq!(t.dim(), 10);
        assert_eq!(t.conductor(), 3);
        assert!(verify_pass(&t, Level::WeakHopf));
        // x^n = 0
        let x = Vector::basis(10, 2); // word (0,1)
        let xx = t.multiply(&x, &x).unwrap();
        let xxx = t.multiply(&xx, &x).unwrap();
        assert!(!xx.is_zero());
        assert!(xxx.is_zero());
    }

    #[test]
    fn two_unit_variants_on_trivial_bialgebra() {
        let b = group_bialgebra(1);
        let ha = two_unit_variant(&b, TwoUnitVariant::A, false).unwrap();
        assert_eq!(ha.dim(), 3);
        let hb = two_unit_variant(&b, TwoUnitVariant::B, false).unwrap();
        assert_eq!(hb.dim(), 3);
        // variant b counit values: 3, 2, 1
        assert_eq!(hb.coalgebra.counit.get(0), &Scalar::from_integer(3));
        assert_eq!(hb.coalgebra.counit.get(1), &Scalar::from_integer(2));
        assert_eq!(hb.coalgebra.counit.get(2), &Scalar::one());
        let hhopf = two_unit_variant(&group_bialgebra(2), TwoUnitVariant::B, true).unwrap();
        assert!(verify_pass(&hhopf, Level::WeakHopf));
    }

    #[test]
    fn weak_from_idempotent_examples() {
        // 2-dim: unit e1, idempotent e2 absorbing.
        let mut mult = Tensor3::zeros(2);
        mult.set(0, 0, 0, Scalar::one());
        mult.set(0, 1, 1, Scalar::one());
        mult.set(1, 0, 1, Scalar::one());
        mult.set(1, 1, 1, Scalar::one());
        let alg = AlgebraStruct::new(mult, Vector::basis(2, 0));
        let h = weak_from_idempotent(&alg, &Vector::basis(2, 1)).unwrap();
        assert!(verify_pass(&h, Level::WeakBialgebra));
        // attaching the identity antipode gives a weak Hopf algebra
        let hopf = WeakStructure::new(
            h.algebra.clone(),
            h.coalgebra.clone(),
            Some(Matrix::identity(2)),
            "example-2dim",
        );
        assert!(verify_pass(&hopf, Level::WeakHopf));
        // e = 1 is rejected
        let err = weak_from_idempotent(&h.algebra, &Vector::basis(2, 0)).unwrap_err();
        assert_eq!(err, ConstructionError::NotInComplement);
    }
}
