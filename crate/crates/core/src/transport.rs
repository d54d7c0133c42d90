//! Transport of structure along invertible linear maps, isomorphism-witness
//! checking, automorphism verification (including parametric families),
//! finite matrix-group closure and the stabilizer tangent dimension.
//!
//! A `BasisChange` matrix acts on coordinate columns: g(e_j) is the j-th
//! column of the matrix. Under this reading the order-2 generator fixes the
//! dim-2 chain structure; the row reading validates on none of the
//! classified structures, and the errata generator records the comparison.

use thiserror::Error;

use crate::exactmath::{LinalgError, Matrix, Scalar, Tensor2, Tensor3, Vector};
use crate::structure::{AlgebraStruct, CoalgebraStruct, WeakStructure};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransportError {
    #[error("basis change is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group closure exceeded bound {0}")]
    BoundExceeded(usize),
    #[error("no admissible rational sample points: {0}")]
    NoAdmissibleSamples(String),
}

/// An invertible basis change with its exact inverse cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    mat: Matrix,
    inv: Matrix,
}

impl BasisChange {
    pub fn new(mat: Matrix) -> Result<BasisChange, TransportError> {
        let inv = mat.inverse().map_err(|e| match e {
            LinalgError::Singular => TransportError::Singular,
            LinalgError::DimensionMismatch(m) => TransportError::DimensionMismatch(m),
        })?;
        Ok(BasisChange { mat, inv })
    }

    pub fn identity(n: usize) -> BasisChange {
        BasisChange {
            mat: Matrix::identity(n),
            inv: Matrix::identity(n),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<BasisChange, TransportError> {
        BasisChange::new(Matrix::from_int_rows(rows))
    }

    /// Permutation sending basis vector i to basis vector perm[i].
    pub fn permutation(perm: &[usize]) -> Result<BasisChange, TransportError> {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.set(p, i, Scalar::one());
        }
        BasisChange::new(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inv
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn inverse(&self) -> BasisChange {
        BasisChange {
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        self.mat.apply_col(x)
    }

    pub fn apply_inverse(&self, x: &Vector) -> Vector {
        self.inv.apply_col(x)
    }
}

/// Transports every structure map along g: multiplication and
/// comultiplication by conjugation, counit by composition, antipode by
/// conjugation when present.
pub fn transport(h: &WeakStructure, g: &BasisChange) -> Result<WeakStructure, TransportError> {
    let n = h.dim();
    if g.dim() != n {
        return Err(TransportError::DimensionMismatch(format!(
            "structure dim {} vs matrix dim {}",
            n,
            g.dim()
        )));
    }
    let mut mult = Tensor3::zeros(n);
    for i in 0..n {
        let gi = g.mat.col(i);
        for j in 0..n {
            let gj = g.mat.col(j);
            let prod = h.multiply(&gi, &gj).unwrap();
            let back = g.apply_inverse(&prod);
            for k in 0..n {
                if !back.get(k).is_zero() {
                    mult.set(i, j, k, back.get(k).clone());
                }
            }
        }
    }
    let mut comult = Tensor3::zeros(n);
    for k in 0..n {
        let dk = h.comultiply(&g.mat.col(k)).unwrap();
        let pulled = conjugate_tensor2(&dk, &g.inv);
        for (a, b, v) in pulled.iter_nonzero() {
            comult.set(k, a, b, v.clone());
        }
    }
    let mut counit = Vector::zeros(n);
    for k in 0..n {
        counit.set(k, h.counit(&g.mat.col(k)));
    }
    let unit = g.apply_inverse(&h.algebra.unit);
    let antipode = h.antipode.as_ref().map(|s| {
        let mut out = Matrix::zeros(n, n);
        for k in 0..n {
            let img = g.apply_inverse(&s.apply_row(&g.mat.col(k)));
            for j in 0..n {
                out.set(k, j, img.get(j).clone());
            }
        }
        out
    });
    Ok(WeakStructure::new(
        AlgebraStruct::new(mult, unit),
        CoalgebraStruct::new(comult, counit),
        antipode,
        format!("transport({})", h.label),
    ))
}

/// (M ⊗ M) applied to a 2-tensor, with M acting on columns.
fn conjugate_tensor2(t: &Tensor2, m: &Matrix) -> Tensor2 {
    let n = t.dim();
    let mut out = Tensor2::zeros(n);
    for (i, j, v) in t.iter_nonzero() {
        for a in 0..n {
            let ma = m.get(a, i);
            if ma.is_zero() {
                continue;
            }
            let va = v * ma;
            for b in 0..n {
                let mb = m.get(b, j);
                if !mb.is_zero() {
                    out.add_to(a, b, &(&va * mb));
                }
            }
        }
    }
    out
}

/// One failed witness equation, with both exact sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFailure {
    pub family: &'static str,
    /// 1-based index tuple within the family.
    pub index: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl std::fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} equation at {:?}: transported value {} != target {}",
            self.family, self.index, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismCheck {
    pub pass: bool,
    pub failure: Option<WitnessFailure>,
}

/// Checks whether g carries h1 to h2: the transported structure must match
/// h2 componentwise. The first failing equation is reported exactly.
pub fn is_morphism_witness(
    h1: &WeakStructure,
    h2: &WeakStructure,
    g: &BasisChange,
) -> Result<MorphismCheck, TransportError> {
    if h1.dim() != h2.dim() {
        return Err(TransportError::DimensionMismatch(format!(
            "{} vs {}",
            h1.dim(),
            h2.dim()
        )));
    }
    let moved = transport(h1, g)?;
    let n = h1.dim();
    let fail = |family, index: Vec<usize>, lhs: &Scalar, rhs: &Scalar| MorphismCheck {
        pass: false,
        failure: Some(WitnessFailure {
            family,
            index: index.into_iter().map(|i| i + 1).collect(),
            lhs: lhs.clone(),
            rhs: rhs.clone(),
        }),
    };
    for k in 0..n {
        let lhs = moved.coalgebra.counit.get(k);
        let rhs = h2.coalgebra.counit.get(k);
        if lhs != rhs {
            return Ok(fail("counit", vec![k], lhs, rhs));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = moved.algebra.mult.get(i, j, k);
                let rhs = h2.algebra.mult.get(i, j, k);
                if lhs != rhs {
                    return Ok(fail("multiplication", vec![i, j, k], lhs, rhs));
                }
            }
        }
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                let lhs = moved.coalgebra.comult.get(k, a, b);
                let rhs = h2.coalgebra.comult.get(k, a, b);
                if lhs != rhs {
                    return Ok(fail("comultiplication", vec![k, a, b], lhs, rhs));
                }
            }
        }
    }
    for k in 0..n {
        let lhs = moved.algebra.unit.get(k);
        let rhs = h2.algebra.unit.get(k);
        if lhs != rhs {
            return Ok(fail("unit", vec![k], lhs, rhs));
        }
    }
    match (&moved.antipode, &h2.antipode) {
        (Some(a), Some(b)) => {
            for i in 0..n {
                for j in 0..n {
                    if a.get(i, j) != b.get(i, j) {
                        return Ok(fail("antipode", vec![i, j], a.get(i, j), b.get(i, j)));
                    }
                }
            }
        }
        (None, None) => {}
        // One-sided antipode: compare only the shared maps.
        _ => {}
    }
    Ok(MorphismCheck {
        pass: true,
        failure: None,
    })
}

pub fn is_automorphism(
    h: &WeakStructure,
    g: &BasisChange,
) -> Result<MorphismCheck, TransportError> {
    is_morphism_witness(h, h, g)
}

// ---------------------------------------------------------------------------
// Parametric automorphism families.
// ---------------------------------------------------------------------------

/// Polynomial in up to two named parameters with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoly {
    /// (exponent of param 0, exponent of param 1, coefficient)
    pub terms: Vec<(u32, u32, Scalar)>,
}

impl ParamPoly {
    pub fn constant(c: Scalar) -> ParamPoly {
        ParamPoly {
            terms: vec![(0, 0, c)],
        }
    }

    pub fn param(which: usize) -> ParamPoly {
        match which {
            0 => ParamPoly {
                terms: vec![(1, 0, Scalar::one())],
            },
            1 => ParamPoly {
                terms: vec![(0, 1, Scalar::one())],
            },
            _ => panic!("at most two parameters"),
        }
    }

    pub fn eval(&self, vals: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, b, c) in &self.terms {
            let mut term = c.clone();
            if *a > 0 {
                term = &term * &vals[0].pow(*a as u64);
            }
            if *b > 0 {
                term = &term
                    * &vals
                        .get(1)
                        .cloned()
                        .unwrap_or_else(Scalar::one)
                        .pow(*b as u64);
            }
            acc += &term;
        }
        acc
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(a, b, _)| a + b).max().unwrap_or(0)
    }
}

/// A matrix family over one or two parameters, with nonvanishing side
/// conditions (constraint polynomials that must stay nonzero).
#[derive(Clone, Debug)]
pub struct ParamMatrix {
    pub dim: usize,
    pub entries: Vec<ParamPoly>, // row-major
    pub nonvanishing: Vec<ParamPoly>,
    pub param_count: usize,
}

impl ParamMatrix {
    /// diag(1, ..., 1, α) with α = parameter 0, α ≠ 0.
    pub fn diagonal_scaling(dim: usize) -> ParamMatrix {
        let mut entries = vec![ParamPoly::constant(Scalar::zero()); dim * dim];
        for i in 0..dim - 1 {
            entries[i * dim + i] = ParamPoly::constant(Scalar::one());
        }
        entries[dim * dim - 1] = ParamPoly::param(0);
        ParamMatrix {
            dim,
            entries,
            nonvanishing: vec![ParamPoly::param(0)],
            param_count: 1,
        }
    }

    pub fn instantiate(&self, vals: &[Scalar]) -> Option<Matrix> {
        for c in &self.nonvanishing {
            if c.eval(vals).is_zero() {
                return None;
            }
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.entries[i * self.dim + j].eval(vals));
            }
        }
        if m.is_invertible() {
            Some(m)
        } else {
            None
        }
    }

    pub fn max_entry_degree(&self) -> u32 {
        self.entries
            .iter()
            .map(ParamPoly::degree)
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamCheck {
    /// Holds at enough distinct points to force the residual polynomials to
    /// vanish identically on each parameter line.
    Pass {
        samples_used: usize,
    },
    Fail {
        at: Vec<Scalar>,
        failure: WitnessFailure,
    },
    Inconclusive {
        reason: String,
    },
}

/// Substitutes distinct admissible rational parameter values and checks each
/// instance. The witness-equation residuals are polynomials of degree at
/// most 2·deg(entries) in each parameter, so deg+1 distinct zeros per
/// parameter force them to vanish; `samples` below that bound is rejected.
pub fn check_parametric_automorphism(
    h: &WeakStructure,
    pm: &ParamMatrix,
    samples: usize,
) -> Result<ParamCheck, TransportError> {
    let needed = (2 * pm.max_entry_degree() + 1) as usize;
    if samples < needed {
        return Err(TransportError::DimensionMismatch(format!(
            "need at least {} samples for the degree bound, got {}",
            needed, samples
        )));
    }
    // Candidate rational values, skipping inadmissible points.
    let mut points: Vec<Vec<Scalar>> = Vec::new();
    let mut k: i64 = 1;
    let mut tried = 0;
    while points.len() < samples && tried < 1000 {
        // alternate 1, -1, 2, -2, 3, 1/2, -3, ...
        let candidates = [
            Scalar::from_integer(k),
            Scalar::from_integer(-k),
            Scalar::ratio(1, k),
        ];
        for c in candidates {
            if points.len() >= samples {
                break;
            }
            let vals = if pm.param_count == 1 {
                vec![c.clone()]
            } else {
                vec![c.clone(), Scalar::from_integer(k + 1)]
            };
            if pm.instantiate(&vals).is_some() && !points.contains(&vals) {
                points.push(vals);
            }
        }
        k += 1;
        tried += 1;
    }
    if points.len() < samples {
        return Ok(ParamCheck::Inconclusive {
            reason: "not enough admissible rational sample points".into(),
        });
    }
    for vals in &points {
        let m = pm.instantiate(vals).unwrap();
        let g = BasisChange::new(m)?;
        let check = is_automorphism(h, &g)?;
        if !check.pass {
            return Ok(ParamCheck::Fail {
                at: vals.clone(),
                failure: check.failure.unwrap(),
            });
        }
    }
    Ok(ParamCheck::Pass {
        samples_used: points.len(),
    })
}

// ---------------------------------------------------------------------------
// Finite group closure and the stabilizer tangent space.
// ---------------------------------------------------------------------------

/// Breadth-first closure of the generated matrix group under exact
/// multiplication. Errors out beyond `bound` elements.
pub fn group_closure(gens: &[Matrix], bound: usize) -> Result<Vec<Matrix>, TransportError> {
    let n = match gens.first() {
        Some(g) => g.rows(),
        None => return Ok(vec![]),
    };
    for g in gens {
        if !g.is_invertible() {
            return Err(TransportError::Singular);
        }
    }
    let mut elements = vec![Matrix::identity(n)];
    let mut frontier = vec![Matrix::identity(n)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for g in gens {
                let prod = e.mul(g);
                if !elements.contains(&prod) {
                    if elements.len() + 1 > bound {
                        return Err(TransportError::BoundExceeded(bound));
                    }
                    elements.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    elements.sort();
    Ok(elements)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentReport {
    /// Kernel dimension of the linearized witness equations at the identity.
    pub tangent_dim: usize,
    /// n² minus the tangent dimension.
    pub orbit_dim: usize,
}

/// Linearizes the three witness-equation families at the identity and
/// returns the exact kernel dimension in the n² perturbation entries.
pub fn stabilizer_tangent_dim(h: &WeakStructure) -> TangentReport {
    let n = h.dim();
    let mu = &h.algebra.mult;
    let co = &h.coalgebra.comult;
    let f = &h.coalgebra.counit;
    let unknowns = n * n; // X row-major, acting on columns: (X e_j) = Σ_a X[a][j] e_a
    let xi = |a: usize, b: usize| a * n + b;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // multiplication: Σ_a X_{a,i} C_{a,j}^k + Σ_b X_{b,j} C_{i,b}^k - Σ_l C_{i,j}^l X_{k,l} = 0
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); unknowns];
                for a in 0..n {
                    let c = mu.get(a, j, k);
                    if !c.is_zero() {
                        row[xi(a, i)] = &row[xi(a, i)] + c;
                    }
                }
                for b in 0..n {
                    let c = mu.get(i, b, k);
                    if !c.is_zero() {
                        row[xi(b, j)] = &row[xi(b, j)] + c;
                    }
                }
                for l in 0..n {
                    let c = mu.get(i, j, l);
                    if !c.is_zero() {
                        row[xi(k, l)] = &row[xi(k, l)] - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    // comultiplication: Σ_c X_{c,k} D_c^{a,b} - Σ_i X_{a,i} D_k^{i,b} - Σ_j X_{b,j} D_k^{a,j} = 0
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                let mut row = vec![Scalar::zero(); unknowns];
                for c in 0..n {
                    let d = co.get(c, a, b);
                    if !d.is_zero() {
                        row[xi(c, k)] = &row[xi(c, k)] + d;
                    }
                }
                for i in 0..n {
                    let d = co.get(k, i, b);
                    if !d.is_zero() {
                        row[xi(a, i)] = &row[xi(a, i)] - d;
                    }
                }
                for j in 0..n {
                    let d = co.get(k, a, j);
                    if !d.is_zero() {
                        row[xi(b, j)] = &row[xi(b, j)] - d;
                    }
                }
                rows.push(row);
            }
        }
    }
    // counit: Σ_i X_{i,k} f_i = 0
    for k in 0..n {
        let mut row = vec![Scalar::zero(); unknowns];
        for i in 0..n {
            if !f.get(i).is_zero() {
                row[xi(i, k)] = f.get(i).clone();
            }
        }
        rows.push(row);
    }
    let mat = Matrix::from_rows(rows);
    let rank = mat.rank();
    TangentReport {
        tangent_dim: unknowns - rank,
        orbit_dim: rank,
    }
}

/// Basis change moving the designated unit onto the first basis vector.
pub fn normalize_unit_first(
    h: &WeakStructure,
) -> Result<(WeakStructure, BasisChange), TransportError> {
    let n = h.dim();
    let u = &h.algebra.unit;
    if *u == Vector::basis(n, 0) {
        return Ok((h.clone(), BasisChange::identity(n)));
    }
    let pivot = (0..n)
        .find(|&i| !u.get(i).is_zero())
        .expect("unit vector must be nonzero");
    // g(e_1) = unit, other basis vectors swapped in from the standard basis.
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m.set(i, 0, u.get(i).clone());
    }
    let mut col = 1;
    for j in 0..n {
        if j != pivot {
            m.set(j, col, Scalar::one());
            col += 1;
        }
    }
    let g = BasisChange::new(m)?;
    Ok((transport(h, &g)?, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{verify_pass, Level};
    use crate::constructions::{max_algebra_whopf, sweedler5};

    #[test]
    fn transport_by_identity_is_identity() {
        let h = sweedler5();
        let g = BasisChange::identity(5);
        let moved = transport(&h, &g).unwrap();
        assert_eq!(moved.algebra.mult, h.algebra.mult);
        assert_eq!(moved.coalgebra.comult, h.coalgebra.comult);
        assert_eq!(moved.coalgebra.counit, h.coalgebra.counit);
        assert_eq!(moved.antipode, h.antipode);
    }

    #[test]
    fn transport_round_trip() {
        let h = max_algebra_whopf(3).unwrap();
        let g = BasisChange::from_int_rows(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        let there = transport(&h, &g).unwrap();
        let back = transport(&there, &g.inverse()).unwrap();
        assert_eq!(back.algebra.mult, h.algebra.mult);
        assert_eq!(back.coalgebra.comult, h.coalgebra.comult);
        assert_eq!(back.coalgebra.counit, h.coalgebra.counit);
        assert_eq!(back.algebra.unit, h.algebra.unit);
    }

    #[test]
    fn transport_composition_law() {
        let h = max_algebra_whopf(3).unwrap();
        let a = BasisChange::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]).unwrap();
        let b = BasisChange::from_int_rows(&[&[1, 0, 1], &[1, 1, 0], &[0, 0, 1]]).unwrap();
        let seq = transport(&transport(&h, &a).unwrap(), &b).unwrap();
        let combined = BasisChange::new(a.matrix().mul(b.matrix())).unwrap();
        let direct = transport(&h, &combined).unwrap();
        assert_eq!(seq.algebra.mult, direct.algebra.mult);
        assert_eq!(seq.coalgebra.comult, direct.coalgebra.comult);
        assert_eq!(seq.coalgebra.counit, direct.coalgebra.counit);
    }

    #[test]
    fn transport_preserves_pass_vector() {
        let h = sweedler5();
        let g = BasisChange::from_int_rows(&[
            &[1, 0, 0, 0, 0],
            &[1, 1, 0, 0, 2],
            &[0, 0, 1, 0, 0],
            &[0, 2, 0, 1, 0],
            &[0, 0, 0, 0, 1],
        ])
        .unwrap();
        let moved = transport(&h, &g).unwrap();
        assert!(verify_pass(&moved, Level::WeakHopf));
    }

    #[test]
    fn group_closure_of_involution() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[0, -1]]);
        let els = group_closure(&[m], 10).unwrap();
        assert_eq!(els.len(), 2);
        // closed under multiplication
        for a in &els {
            for b in &els {
                assert!(els.contains(&a.mul(b)));
            }
        }
    }

    #[test]
    fn closure_bound_exceeded() {
        // A shear has infinite order.
        let m = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            group_closure(&[m], 16).unwrap_err(),
            TransportError::BoundExceeded(16)
        );
    }

    #[test]
    fn unit_normalization() {
        let h = sweedler5();
        let swap = BasisChange::permutation(&[2, 1, 0, 3, 4]).unwrap();
        let moved = transport(&h, &swap).unwrap();
        assert_ne!(moved.algebra.unit, Vector::basis(5, 0));
        let (fixed, _) = normalize_unit_first(&moved).unwrap();
        assert_eq!(fixed.algebra.unit, Vector::basis(5, 0));
        assert!(verify_pass(&fixed, Level::WeakHopf));
    }
}
