//! Core data model: algebras, coalgebras and weak bialgebra candidates given
//! by structure constants, plus the elementary evaluation maps.
//!
//! Conventions, fixed once for the whole toolkit:
//! - basis indices are 0-based internally and 1-based in reports and files;
//! - `mult.get(i, j, k)` is the e_k-coefficient of e_i · e_j;
//! - `comult.get(k, i, j)` is the e_i⊗e_j-coefficient of Δ(e_k);
//! - antipode rows hold images: S(e_i) = Σ_j s[i][j] e_j.

use thiserror::Error;

use crate::exactmath::{solve_affine, Matrix, Poly, RootError, Scalar, Tensor2, Tensor3, Vector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("structure has no antipode")]
    NoAntipode,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrouplikeError {
    #[error("dimension {0} needs an explicit candidate grid")]
    DimensionTooLarge(usize),
    #[error("solution family is not zero-dimensional on a branch")]
    InfiniteFamily,
    #[error("root extraction incomplete over this coefficient field")]
    FieldRootsIncomplete,
}

impl From<RootError> for GrouplikeError {
    fn from(_: RootError) -> Self {
        GrouplikeError::FieldRootsIncomplete
    }
}

/// Multiplication constants with a designated unit vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraStruct {
    pub dim: usize,
    pub mult: Tensor3,
    pub unit: Vector,
    pub unital: bool,
}

impl AlgebraStruct {
    pub fn new(mult: Tensor3, unit: Vector) -> AlgebraStruct {
        let dim = mult.dim();
        assert_eq!(unit.dim(), dim);
        AlgebraStruct {
            dim,
            mult,
            unit,
            unital: true,
        }
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for k in 0..self.dim {
            out.set(k, self.mult.get(i, j, k).clone());
        }
        out
    }

    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector, StructureError> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(StructureError::DimensionMismatch {
                expected: self.dim,
                got: x.dim().max(y.dim()),
            });
        }
        let mut out = Vector::zeros(self.dim);
        for i in 0..self.dim {
            if x.get(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.get(j).is_zero() {
                    continue;
                }
                let c = x.get(i) * y.get(j);
                for k in 0..self.dim {
                    let m = self.mult.get(i, j, k);
                    if !m.is_zero() {
                        let cur = out.get(k) + &(&c * m);
                        out.set(k, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact check of the two-sided unit law on the basis.
    pub fn unit_law_holds(&self) -> bool {
        (0..self.dim).all(|i| {
            let e = Vector::basis(self.dim, i);
            self.multiply(&self.unit, &e).unwrap() == e
                && self.multiply(&e, &self.unit).unwrap() == e
        })
    }

    pub fn is_associative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul_basis(i, j);
                for k in 0..self.dim {
                    let e_k = Vector::basis(self.dim, k);
                    let jk = self.mul_basis(j, k);
                    let lhs = self.multiply(&ij, &e_k).unwrap();
                    let rhs = self.multiply(&Vector::basis(self.dim, i), &jk).unwrap();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.mul_basis(i, j) != self.mul_basis(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

/// Comultiplication constants and counit values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoalgebraStruct {
    pub dim: usize,
    pub comult: Tensor3,
    pub counit: Vector,
}

impl CoalgebraStruct {
    pub fn new(comult: Tensor3, counit: Vector) -> CoalgebraStruct {
        let dim = comult.dim();
        assert_eq!(counit.dim(), dim);
        CoalgebraStruct {
            dim,
            comult,
            counit,
        }
    }

    pub fn delta_basis(&self, k: usize) -> Tensor2 {
        let mut t = Tensor2::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(i, j, self.comult.get(k, i, j).clone());
            }
        }
        t
    }

    pub fn is_cocommutative(&self) -> bool {
        for k in 0..self.dim {
            for i in 0..self.dim {
                for j in 0..i {
                    if self.comult.get(k, i, j) != self.comult.get(k, j, i) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Structure constants of the dual algebra: (f·g)(e_k) = Σ D_k^{i,j} f_i g_j.
    pub fn dual_mult(&self) -> Tensor3 {
        let mut t = Tensor3::zeros(self.dim);
        for k in 0..self.dim {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    t.set(i, j, k, self.comult.get(k, i, j).clone());
                }
            }
        }
        t
    }
}

/// A linear endomorphism with images stored in rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Endo {
    pub matrix: Matrix,
}

impl Endo {
    pub fn identity(dim: usize) -> Endo {
        Endo {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn zero(dim: usize) -> Endo {
        Endo {
            matrix: Matrix::zeros(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        self.matrix.apply_row(x)
    }
}

/// Algebra + coalgebra + optional antipode: a weak bialgebra or weak Hopf
/// algebra candidate. Whether the axioms hold is the verifier's business.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeakStructure {
    pub algebra: AlgebraStruct,
    pub coalgebra: CoalgebraStruct,
    pub antipode: Option<Matrix>,
    pub label: String,
}

impl WeakStructure {
    pub fn new(
        algebra: AlgebraStruct,
        coalgebra: CoalgebraStruct,
        antipode: Option<Matrix>,
        label: impl Into<String>,
    ) -> WeakStructure {
        assert_eq!(algebra.dim, coalgebra.dim);
        if let Some(s) = &antipode {
            assert_eq!(s.rows(), algebra.dim);
            assert_eq!(s.cols(), algebra.dim);
        }
        WeakStructure {
            algebra,
            coalgebra,
            antipode,
            label: label.into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// Largest conductor appearing in any structure constant.
    pub fn conductor(&self) -> u32 {
        let mut n = 1;
        let mut see = |s: &Scalar| {
            if s.conductor() > n {
                n = s.conductor();
            }
        };
        for ([_, _, _], v) in self.algebra.mult.iter_nonzero() {
            see(v);
        }
        for ([_, _, _], v) in self.coalgebra.comult.iter_nonzero() {
            see(v);
        }
        for i in 0..self.dim() {
            see(self.algebra.unit.get(i));
            see(self.coalgebra.counit.get(i));
        }
        if let Some(s) = &self.antipode {
            for i in 0..s.rows() {
                for j in 0..s.cols() {
                    see(s.get(i, j));
                }
            }
        }
        n
    }

    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector, StructureError> {
        self.algebra.multiply(x, y)
    }

    pub fn comultiply(&self, x: &Vector) -> Result<Tensor2, StructureError> {
        if x.dim() != self.dim() {
            return Err(StructureError::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        let mut out = Tensor2::zeros(self.dim());
        for k in 0..self.dim() {
            let c = x.get(k);
            if c.is_zero() {
                continue;
            }
            for i in 0..self.dim() {
                for j in 0..self.dim() {
                    let d = self.coalgebra.comult.get(k, i, j);
                    if !d.is_zero() {
                        out.add_to(i, j, &(c * d));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn counit(&self, x: &Vector) -> Scalar {
        let mut acc = Scalar::zero();
        for k in 0..self.dim() {
            acc += &(x.get(k) * self.coalgebra.counit.get(k));
        }
        acc
    }

    pub fn apply_antipode(&self, x: &Vector) -> Result<Vector, StructureError> {
        let s = self.antipode.as_ref().ok_or(StructureError::NoAntipode)?;
        Ok(s.apply_row(x))
    }

    /// Δ of the designated unit.
    pub fn delta_unit(&self) -> Tensor2 {
        self.comultiply(&self.algebra.unit).unwrap()
    }

    /// Componentwise product on V⊗V: (a⊗b)•(c⊗d) = ac ⊗ bd.
    pub fn bullet2(&self, s: &Tensor2, t: &Tensor2) -> Tensor2 {
        let n = self.dim();
        let mut out = Tensor2::zeros(n);
        for (i, j, sv) in s.iter_nonzero() {
            for (p, q, tv) in t.iter_nonzero() {
                let c = sv * tv;
                for k in 0..n {
                    let m1 = self.algebra.mult.get(i, p, k);
                    if m1.is_zero() {
                        continue;
                    }
                    let cm = &c * m1;
                    for l in 0..n {
                        let m2 = self.algebra.mult.get(j, q, l);
                        if !m2.is_zero() {
                            out.add_to(k, l, &(&cm * m2));
                        }
                    }
                }
            }
        }
        out
    }

    /// Componentwise product on V⊗V⊗V.
    pub fn bullet3(&self, s: &Tensor3, t: &Tensor3) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(n);
        for ([i, j, k], sv) in s.iter_nonzero() {
            for ([p, q, r], tv) in t.iter_nonzero() {
                let c = sv * tv;
                for a in 0..n {
                    let m1 = self.algebra.mult.get(i, p, a);
                    if m1.is_zero() {
                        continue;
                    }
                    let c1 = &c * m1;
                    for b in 0..n {
                        let m2 = self.algebra.mult.get(j, q, b);
                        if m2.is_zero() {
                            continue;
                        }
                        let c2 = &c1 * m2;
                        for d in 0..n {
                            let m3 = self.algebra.mult.get(k, r, d);
                            if !m3.is_zero() {
                                out.add_to(a, b, d, &(&c2 * m3));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// (Δ ⊗ id) applied to an element of V⊗V.
    pub fn delta_left(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(n);
        for (i, c, tv) in t.iter_nonzero() {
            for a in 0..n {
                for b in 0..n {
                    let d = self.coalgebra.comult.get(i, a, b);
                    if !d.is_zero() {
                        out.add_to(a, b, c, &(tv * d));
                    }
                }
            }
        }
        out
    }

    /// (id ⊗ Δ) applied to an element of V⊗V.
    pub fn delta_right(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(n);
        for (a, j, tv) in t.iter_nonzero() {
            for b in 0..n {
                for c in 0..n {
                    let d = self.coalgebra.comult.get(j, b, c);
                    if !d.is_zero() {
                        out.add_to(a, b, c, &(tv * d));
                    }
                }
            }
        }
        out
    }

    /// (ε ⊗ id) applied to an element of V⊗V.
    pub fn eps_left(&self, t: &Tensor2) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for (i, j, tv) in t.iter_nonzero() {
            let f = self.coalgebra.counit.get(i);
            if !f.is_zero() {
                let cur = out.get(j) + &(tv * f);
                out.set(j, cur);
            }
        }
        out
    }

    /// (id ⊗ ε) applied to an element of V⊗V.
    pub fn eps_right(&self, t: &Tensor2) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for (i, j, tv) in t.iter_nonzero() {
            let f = self.coalgebra.counit.get(j);
            if !f.is_zero() {
                let cur = out.get(i) + &(tv * f);
                out.set(i, cur);
            }
        }
        out
    }

    /// m applied to an element of V⊗V.
    pub fn mul_tensor2(&self, t: &Tensor2) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for (i, j, tv) in t.iter_nonzero() {
            for k in 0..n {
                let m = self.algebra.mult.get(i, j, k);
                if !m.is_zero() {
                    let cur = out.get(k) + &(tv * m);
                    out.set(k, cur);
                }
            }
        }
        out
    }

    pub fn outer(&self, x: &Vector, y: &Vector) -> Tensor2 {
        let n = self.dim();
        let mut t = Tensor2::zeros(n);
        for i in 0..n {
            if x.get(i).is_zero() {
                continue;
            }
            for j in 0..n {
                if !y.get(j).is_zero() {
                    t.set(i, j, x.get(i) * y.get(j));
                }
            }
        }
        t
    }

    /// Convolution product of two endomorphisms: m ∘ (φ⊗ψ) ∘ Δ.
    pub fn convolve(&self, phi: &Endo, psi: &Endo) -> Result<Endo, StructureError> {
        let n = self.dim();
        if phi.dim() != n || psi.dim() != n {
            return Err(StructureError::DimensionMismatch {
                expected: n,
                got: phi.dim().max(psi.dim()),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for k in 0..n {
            let delta = self.delta_basis_t2(k);
            let mut acc = Vector::zeros(n);
            for (i, j, dv) in delta.iter_nonzero() {
                let a = phi.apply(&Vector::basis(n, i));
                let b = psi.apply(&Vector::basis(n, j));
                let prod = self.multiply(&a, &b).unwrap();
                acc = acc.add(&prod.scale(dv));
            }
            rows.push(acc.entries().to_vec());
        }
        Ok(Endo {
            matrix: Matrix::from_rows(rows),
        })
    }

    fn delta_basis_t2(&self, k: usize) -> Tensor2 {
        self.coalgebra.delta_basis(k)
    }

    /// All nonzero x with Δ(x) = x ⊗ x. Closed-form for dim ≤ 3.
    pub fn grouplikes(&self) -> Result<Vec<Vector>, GrouplikeError> {
        let n = self.dim();
        if n > 3 {
            return Err(GrouplikeError::DimensionTooLarge(n));
        }
        let candidates = grouplike_candidates(&self.coalgebra)?;
        let mut out: Vec<Vector> = Vec::new();
        for x in candidates {
            if !x.is_zero() && self.is_grouplike(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Grid fallback for dim > 3: filters the supplied candidates exactly.
    pub fn grouplikes_on_grid(&self, grid: &[Vector]) -> Vec<Vector> {
        let mut out: Vec<Vector> = grid
            .iter()
            .filter(|x| !x.is_zero() && self.is_grouplike(x))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn is_grouplike(&self, x: &Vector) -> bool {
        let delta = self.comultiply(x).unwrap();
        delta == self.outer(x, x)
    }
}

// ---------------------------------------------------------------------------
// Grouplike solving: the quadratic system  Σ_k x_k D_k^{i,j} = x_i x_j.
// Candidates are produced by case analysis on the support of x and exact
// elimination; the caller re-filters with the defining equation, so this
// routine only has to be complete, not minimal.
// ---------------------------------------------------------------------------

fn grouplike_candidates(co: &CoalgebraStruct) -> Result<Vec<Vector>, GrouplikeError> {
    let n = co.dim;
    let mut cands = Vec::new();
    for support in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| support >> i & 1 == 1).collect();
        if members.len() == n {
            match n {
                1 => full_support_dim1(co, &mut cands),
                2 => full_support_dim2(co, &mut cands)?,
                3 => full_support_dim3(co, &mut cands)?,
                _ => unreachable!(),
            }
        } else {
            proper_support(co, &members, &mut cands)?;
        }
    }
    Ok(cands)
}

/// Linear part: L_ij(x) = Σ_k x_k D_k^{i,j} restricted to the support.
fn lin_coeff(co: &CoalgebraStruct, members: &[usize], i: usize, j: usize) -> Vec<Scalar> {
    members
        .iter()
        .map(|&k| co.comult.get(k, i, j).clone())
        .collect()
}

fn full_support_dim1(co: &CoalgebraStruct, out: &mut Vec<Vector>) {
    // x^2 = d x, x != 0  =>  x = d.
    let d = co.comult.get(0, 0, 0).clone();
    out.push(Vector::from_entries(vec![d]));
}

fn full_support_dim2(co: &CoalgebraStruct, out: &mut Vec<Vector>) -> Result<(), GrouplikeError> {
    // Variables x1, x2, both nonzero. E_12: x1 x2 = L_12, linear in x2.
    let n = 2;
    let l = |i: usize, j: usize| lin_coeff(co, &[0, 1], i, j);
    let l12 = l(0, 1);
    // (x1 - a2) x2 = a1 x1.
    let branch_poly = Poly::from_coeffs(vec![l12[1].neg(), Scalar::one()]); // x1 - a2
                                                                            // Case x1 != a2: x2 = a1 x1 / (x1 - a2). Substitute into E_11 cleared by (x1-a2):
                                                                            // (x1^2 - c1 x1)(x1 - a2) - c2 a1 x1 = 0.
    let l11 = l(0, 0);
    let x = Poly::var();
    let e11 = x
        .mul(&x)
        .sub(&x.scale(&l11[0]))
        .mul(&branch_poly)
        .sub(&x.scale(&(&l11[1] * &l12[0])));
    if e11.is_zero() {
        return Err(GrouplikeError::InfiniteFamily);
    }
    for r in e11.field_roots()? {
        let denom = branch_poly.eval(&r);
        if denom.is_zero() {
            continue;
        }
        let x2 = (&l12[0] * &r).checked_div(&denom).unwrap();
        out.push(Vector::from_entries(vec![r, x2]));
    }
    // Case x1 = a2 (root of the branch polynomial): solve the rest in x2.
    let a2 = l12[1].clone();
    if !a2.is_zero() {
        let mut polys = Vec::new();
        for i in 0..n {
            for j in 0..n {
                // poly in x2 with x1 fixed to a2
                let c = lin_coeff(co, &[0, 1], i, j);
                let constant = &c[0] * &a2;
                let linear = c[1].clone();
                let quad_x2 = match (i, j) {
                    (0, 0) => Poly::constant((&a2 * &a2).neg()),
                    (0, 1) | (1, 0) => Poly::from_coeffs(vec![Scalar::zero(), a2.neg()]),
                    (1, 1) => Poly::from_coeffs(vec![
                        Scalar::zero(),
                        Scalar::zero(),
                        Scalar::from_integer(-1),
                    ]),
                    _ => unreachable!(),
                };
                let p = Poly::from_coeffs(vec![constant, linear]).add(&quad_x2);
                if !p.is_zero() {
                    polys.push(p);
                }
            }
        }
        append_univariate_solutions(&polys, &mut |x2| {
            out.push(Vector::from_entries(vec![a2.clone(), x2]));
        })?;
    }
    Ok(())
}

fn full_support_dim3(co: &CoalgebraStruct, out: &mut Vec<Vector>) -> Result<(), GrouplikeError> {
    // Variables x1, x2, x3 all nonzero. E_12 and E_13 are linear in (x2, x3)
    // with coefficients linear in x1; Cramer elimination against E_11.
    let l = |i: usize, j: usize| lin_coeff(co, &[0, 1, 2], i, j);
    let (a, b, c) = (l(0, 1), l(0, 2), l(0, 0));
    let x = Poly::var();
    // M = [[x1 - a2, -a3], [-b2, x1 - b3]], rhs = [a1 x1, b1 x1].
    let m11 = x.sub(&Poly::constant(a[1].clone()));
    let m12 = Poly::constant(a[2].neg());
    let m21 = Poly::constant(b[1].neg());
    let m22 = x.sub(&Poly::constant(b[2].clone()));
    let rhs1 = x.scale(&a[0]);
    let rhs2 = x.scale(&b[0]);
    let det = m11.mul(&m22).sub(&m12.mul(&m21));
    let n2 = rhs1.mul(&m22).sub(&m12.mul(&rhs2)); // x2 * det
    let n3 = m11.mul(&rhs2).sub(&rhs1.mul(&m21)); // x3 * det
                                                  // E_11 * det: x1^2 det - c1 x1 det - c2 n2 - c3 n3 = 0, monic of degree 4.
    let elim = x
        .mul(&x)
        .mul(&det)
        .sub(&x.scale(&c[0]).mul(&det))
        .sub(&n2.scale(&c[1]))
        .sub(&n3.scale(&c[2]));
    debug_assert!(!elim.is_zero());
    for r in elim.field_roots()? {
        let d = det.eval(&r);
        if d.is_zero() {
            continue;
        }
        let x2 = n2.eval(&r).checked_div(&d).unwrap();
        let x3 = n3.eval(&r).checked_div(&d).unwrap();
        out.push(Vector::from_entries(vec![r, x2, x3]));
    }
    // Branch det(x1) = 0: fix x1 at each root and solve the remaining
    // two-variable system through the generic support machinery.
    for r in det.field_roots()? {
        if r.is_zero() {
            continue;
        }
        solve_two_vars_fixed_first(co, &r, out)?;
    }
    Ok(())
}

/// With x1 fixed (nonzero), solve the remaining system in (x2, x3), both
/// nonzero. Linear equations first, then univariate or resultant elimination.
fn solve_two_vars_fixed_first(
    co: &CoalgebraStruct,
    x1: &Scalar,
    out: &mut Vec<Vector>,
) -> Result<(), GrouplikeError> {
    // Equations over t = (x2, x3): from E_ij with the substitution.
    // Each is quadratic; those with i=1 or j=1 (0-based 0) are affine.
    let mut affine: Vec<(Vec<Scalar>, Scalar)> = Vec::new(); // (coeffs on t, constant)
    let mut quads: Vec<BiPoly> = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let lc = lin_coeff(co, &[0, 1, 2], i, j);
            // constant + linear part of L - x_i x_j after substitution
            let constant = &lc[0] * x1;
            let lin = [lc[1].clone(), lc[2].clone()];
            let mut p = BiPoly::zero();
            p.add_term(0, 0, constant);
            p.add_term(1, 0, lin[0].clone());
            p.add_term(0, 1, lin[1].clone());
            // subtract x_i x_j
            let sub_term =
                |p: &mut BiPoly, a: usize, b: usize, c: Scalar| p.add_term(a, b, c.neg());
            match (i, j) {
                (0, 0) => sub_term(&mut p, 0, 0, x1 * x1),
                (0, 1) => sub_term(&mut p, 1, 0, x1.clone()),
                (1, 0) => sub_term(&mut p, 1, 0, x1.clone()),
                (0, 2) => sub_term(&mut p, 0, 1, x1.clone()),
                (2, 0) => sub_term(&mut p, 0, 1, x1.clone()),
                (1, 1) => sub_term(&mut p, 2, 0, Scalar::one()),
                (1, 2) => sub_term(&mut p, 1, 1, Scalar::one()),
                (2, 1) => sub_term(&mut p, 1, 1, Scalar::one()),
                (2, 2) => sub_term(&mut p, 0, 2, Scalar::one()),
                _ => unreachable!(),
            }
            if p.is_zero() {
                continue;
            }
            if p.degree_total() <= 1 {
                affine.push((vec![p.coeff(1, 0), p.coeff(0, 1)], p.coeff(0, 0)));
            } else {
                quads.push(p);
            }
        }
    }
    let push = |x2: Scalar, x3: Scalar, out: &mut Vec<Vector>| {
        out.push(Vector::from_entries(vec![x1.clone(), x2, x3]));
    };
    solve_bivariate(&affine, &quads, &mut |x2, x3| push(x2, x3, out))
}

/// Proper-support case: coordinates off the support are zero; linear
/// constraints come from equations touching them.
fn proper_support(
    co: &CoalgebraStruct,
    members: &[usize],
    out: &mut Vec<Vector>,
) -> Result<(), GrouplikeError> {
    let n = co.dim;
    let m = members.len();
    let in_support = |i: usize| members.contains(&i);
    // Linear system: rows for equations with i or j outside the support.
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if in_support(i) && in_support(j) {
                continue;
            }
            rows.push(lin_coeff(co, members, i, j));
        }
    }
    let (particular, kernel) = if rows.is_empty() {
        (
            Vector::zeros(m),
            (0..m).map(|i| Vector::basis(m, i)).collect::<Vec<_>>(),
        )
    } else {
        let mat = Matrix::from_rows(rows);
        let zero = Vector::zeros(mat.rows());
        match solve_affine(&mat, &zero) {
            Some(sol) => sol,
            None => return Ok(()),
        }
    };
    debug_assert!(particular.is_zero());
    let r = kernel.len();
    if r == 0 {
        return Ok(()); // only the zero vector on this support
    }
    // Quadratic equations on the support, expressed in kernel parameters.
    // x_{members[s]} = Σ_m t_m kernel[m][s].
    let coord = |mem_idx: usize| -> Vec<Scalar> {
        (0..r).map(|t| kernel[t].get(mem_idx).clone()).collect()
    };
    let mut quads: Vec<BiPoly> = Vec::new();
    let mut affine: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for (si, &i) in members.iter().enumerate() {
        for (sj, &j) in members.iter().enumerate() {
            let lc = lin_coeff(co, members, i, j);
            // Linear part in t: Σ_s lc[s] * x_s(t)
            let mut lin_t = vec![Scalar::zero(); r];
            for (s, c) in lc.iter().enumerate() {
                let xs = coord(s);
                for t in 0..r {
                    lin_t[t] = &lin_t[t] + &(c * &xs[t]);
                }
            }
            let xi = coord(si);
            let xj = coord(sj);
            if r == 1 {
                // univariate in t1: lin - xi*xj*t^2
                let p = Poly::from_coeffs(vec![Scalar::zero(), lin_t[0].clone()]).sub(
                    &Poly::from_coeffs(vec![Scalar::zero(), Scalar::zero(), &xi[0] * &xj[0]]),
                );
                if !p.is_zero() {
                    quads.push(BiPoly::from_poly_in_t1(&p));
                }
            } else {
                let mut p = BiPoly::zero();
                p.add_term(1, 0, lin_t[0].clone());
                p.add_term(0, 1, lin_t[1].clone());
                // minus (xi . t)(xj . t)
                p.add_term(2, 0, (&xi[0] * &xj[0]).neg());
                p.add_term(1, 1, (&(&xi[0] * &xj[1]) + &(&xi[1] * &xj[0])).neg());
                p.add_term(0, 2, (&xi[1] * &xj[1]).neg());
                if p.is_zero() {
                    continue;
                }
                if p.degree_total() <= 1 {
                    affine.push((vec![p.coeff(1, 0), p.coeff(0, 1)], p.coeff(0, 0)));
                } else {
                    quads.push(p);
                }
            }
        }
    }
    let build = |t: &[Scalar]| -> Vector {
        let mut x = Vector::zeros(n);
        for (s, &mem) in members.iter().enumerate() {
            let mut acc = Scalar::zero();
            for (m_idx, tv) in t.iter().enumerate() {
                acc += &(tv * kernel[m_idx].get(s));
            }
            let _ = mem;
            x.set(members[s], acc);
        }
        x
    };
    if r == 1 {
        let polys: Vec<Poly> = quads.iter().map(BiPoly::to_poly_in_t1).collect();
        append_univariate_solutions(&polys, &mut |t1| {
            out.push(build(&[t1]));
        })?;
        Ok(())
    } else {
        // r == 2 at most: supports are proper, so r <= members.len() <= n-1 <= 2.
        debug_assert!(r == 2);
        solve_bivariate(&affine, &quads, &mut |t1, t2| {
            out.push(build(&[t1, t2]));
        })
    }
}

/// All common roots of a set of univariate polynomials (at least one nonzero).
fn append_univariate_solutions(
    polys: &[Poly],
    sink: &mut dyn FnMut(Scalar),
) -> Result<(), GrouplikeError> {
    let nonzero: Vec<&Poly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(GrouplikeError::InfiniteFamily);
    }
    for root in nonzero[0].field_roots()? {
        if nonzero.iter().all(|p| p.eval(&root).is_zero()) {
            sink(root);
        }
    }
    Ok(())
}

/// Tiny bivariate polynomials over Scalar, dense in a (deg_t1, deg_t2) grid.
#[derive(Clone, Debug)]
struct BiPoly {
    // coeff[(a, b)] of t1^a t2^b, as map keyed by (a, b)
    terms: std::collections::BTreeMap<(usize, usize), Scalar>,
}

impl BiPoly {
    fn zero() -> BiPoly {
        BiPoly {
            terms: Default::default(),
        }
    }

    fn add_term(&mut self, a: usize, b: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(Scalar::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    fn coeff(&self, a: usize, b: usize) -> Scalar {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn degree_total(&self) -> usize {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    fn degree_t2(&self) -> usize {
        self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }

    fn from_poly_in_t1(p: &Poly) -> BiPoly {
        let mut out = BiPoly::zero();
        if let Some(d) = p.degree() {
            for a in 0..=d {
                out.add_term(a, 0, p.coeff(a));
            }
        }
        out
    }

    fn to_poly_in_t1(&self) -> Poly {
        let deg = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (&(a, b), c) in &self.terms {
            assert_eq!(b, 0);
            coeffs[a] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// Coefficients of powers of t2 as polynomials in t1, low first.
    fn coeffs_in_t2(&self) -> Vec<Poly> {
        let d2 = self.degree_t2();
        let d1 = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
        let mut out = vec![vec![Scalar::zero(); d1 + 1]; d2 + 1];
        for (&(a, b), c) in &self.terms {
            out[b][a] = c.clone();
        }
        out.into_iter().map(Poly::from_coeffs).collect()
    }

    fn eval_t1(&self, v: &Scalar) -> Poly {
        let d2 = self.degree_t2();
        let mut coeffs = vec![Scalar::zero(); d2 + 1];
        for (&(a, b), c) in &self.terms {
            let term = c * &v.pow(a as u64);
            coeffs[b] = &coeffs[b] + &term;
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Sylvester resultant eliminating t2; entries are polynomials in t1.
fn resultant_t2(f: &BiPoly, g: &BiPoly) -> Poly {
    let fc = f.coeffs_in_t2();
    let gc = g.coeffs_in_t2();
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    if m == 0 {
        return fc[0].clone(); // no t2 in f
    }
    if n == 0 {
        return gc[0].clone();
    }
    let size = m + n;
    let mut rows: Vec<Vec<Poly>> = vec![vec![Poly::zero(); size]; size];
    for r in 0..n {
        for (k, c) in fc.iter().enumerate() {
            rows[r][r + (m - k)] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gc.iter().enumerate() {
            rows[n + r][r + (n - k)] = c.clone();
        }
    }
    poly_det(&rows)
}

/// Determinant of a small matrix of polynomials by cofactor expansion.
fn poly_det(rows: &[Vec<Poly>]) -> Poly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].mul(&poly_det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Solves a system of affine + quadratic bivariate equations exactly.
fn solve_bivariate(
    affine: &[(Vec<Scalar>, Scalar)],
    quads: &[BiPoly],
    sink: &mut dyn FnMut(Scalar, Scalar),
) -> Result<(), GrouplikeError> {
    // Use affine equations to pin variables when possible.
    if !affine.is_empty() {
        let mat = Matrix::from_rows(affine.iter().map(|(c, _)| c.clone()).collect());
        let rhs = Vector::from_entries(affine.iter().map(|(_, k)| k.neg()).collect());
        let Some((part, kernel)) = solve_affine(&mat, &rhs) else {
            return Ok(()); // inconsistent linear part
        };
        match kernel.len() {
            0 => {
                let (t1, t2) = (part.get(0).clone(), part.get(1).clone());
                if quads.iter().all(|q| q.eval_t1(&t1).eval(&t2).is_zero()) {
                    sink(t1, t2);
                }
                return Ok(());
            }
            1 => {
                // One line of solutions: substitute (t1, t2) = part + s * dir.
                let dir = &kernel[0];
                let polys: Vec<Poly> = quads
                    .iter()
                    .map(|q| substitute_line(q, &part, dir))
                    .collect();
                append_univariate_solutions(&polys, &mut |s| {
                    let t1 = part.get(0) + &(&s * dir.get(0));
                    let t2 = part.get(1) + &(&s * dir.get(1));
                    sink(t1, t2);
                })?;
                return Ok(());
            }
            _ => {} // no information; fall through to resultants
        }
    }
    if quads.is_empty() {
        return Err(GrouplikeError::InfiniteFamily);
    }
    // Pivot on an equation of positive degree in t2.
    let Some(pivot) = quads.iter().find(|q| q.degree_t2() > 0) else {
        // all equations univariate in t1, t2 unconstrained
        return Err(GrouplikeError::InfiniteFamily);
    };
    let mut elim: Vec<Poly> = Vec::new();
    for q in quads {
        if std::ptr::eq(q, pivot) {
            continue;
        }
        let r = if q.degree_t2() == 0 {
            q.to_poly_in_t1()
        } else {
            resultant_t2(pivot, q)
        };
        if !r.is_zero() {
            elim.push(r);
        }
    }
    if elim.is_empty() {
        return Err(GrouplikeError::InfiniteFamily);
    }
    for t1 in elim[0].field_roots()? {
        if !elim.iter().all(|p| p.eval(&t1).is_zero()) {
            continue;
        }
        // Substitute and solve for t2.
        let polys: Vec<Poly> = quads.iter().map(|q| q.eval_t1(&t1)).collect();
        append_univariate_solutions(&polys, &mut |t2| sink(t1.clone(), t2))?;
    }
    Ok(())
}

fn substitute_line(q: &BiPoly, base: &Vector, dir: &Vector) -> Poly {
    // (t1, t2) = (b1 + s d1, b2 + s d2); expand q as polynomial in s.
    let b1 = Poly::constant(base.get(0).clone());
    let b2 = Poly::constant(base.get(1).clone());
    let s = Poly::var();
    let t1 = b1.add(&s.scale(dir.get(0)));
    let t2 = b2.add(&s.scale(dir.get(1)));
    let mut acc = Poly::zero();
    for (&(a, b), c) in &q.terms {
        let mut term = Poly::constant(c.clone());
        for _ in 0..a {
            term = term.mul(&t1);
        }
        for _ in 0..b {
            term = term.mul(&t2);
        }
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar(v: i64) -> Scalar {
        Scalar::from_integer(v)
    }

    /// dim-2 structure with both basis vectors grouplike over the algebra
    /// e1 unit, e2 idempotent absorbing.
    fn diag_grouplike_2() -> WeakStructure {
        let mut mult = Tensor3::zeros(2);
        mult.set(0, 0, 0, scalar(1));
        mult.set(0, 1, 1, scalar(1));
        mult.set(1, 0, 1, scalar(1));
        mult.set(1, 1, 1, scalar(1));
        let mut comult = Tensor3::zeros(2);
        comult.set(0, 0, 0, scalar(1));
        comult.set(1, 1, 1, scalar(1));
        let alg = AlgebraStruct::new(mult, Vector::basis(2, 0));
        let co = CoalgebraStruct::new(comult, Vector::from_entries(vec![scalar(1), scalar(1)]));
        WeakStructure::new(alg, co, None, "test")
    }

    #[test]
    fn multiply_and_unit() {
        let h = diag_grouplike_2();
        let e2 = Vector::basis(2, 1);
        assert_eq!(h.multiply(&e2, &e2).unwrap(), e2);
        assert_eq!(h.multiply(&h.algebra.unit, &e2).unwrap(), e2);
        assert!(h.algebra.unit_law_holds());
        assert!(h.algebra.is_associative());
    }

    #[test]
    fn grouplikes_of_diagonal_comult() {
        let h = diag_grouplike_2();
        let gs = h.grouplikes().unwrap();
        assert_eq!(gs.len(), 2);
        assert!(gs.contains(&Vector::basis(2, 0)));
        assert!(gs.contains(&Vector::basis(2, 1)));
    }

    #[test]
    fn grouplikes_of_zero_comult() {
        let mut h = diag_grouplike_2();
        h.coalgebra = CoalgebraStruct::new(Tensor3::zeros(2), Vector::zeros(2));
        assert!(h.grouplikes().unwrap().is_empty());
    }

    #[test]
    fn convolve_with_zero_is_zero() {
        let h = diag_grouplike_2();
        let conv = h.convolve(&Endo::zero(2), &Endo::identity(2)).unwrap();
        assert_eq!(conv, Endo::zero(2));
    }

    #[test]
    fn dimension_mismatch_reported() {
        let h = diag_grouplike_2();
        let bad = Vector::zeros(3);
        assert!(matches!(
            h.multiply(&bad, &bad),
            Err(StructureError::DimensionMismatch { .. })
        ));
    }
}
