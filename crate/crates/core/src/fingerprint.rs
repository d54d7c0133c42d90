//! Basis-invariant fingerprints: a tuple of exact quantities preserved by
//! transport, used to separate structures without deciding isomorphism.

use serde::{Deserialize, Serialize};

use crate::exactmath::{trace_bilinear_rank, Matrix, Scalar};
use crate::structure::WeakStructure;

/// Grouplike data for small dimensions: how many, and the multiset of their
/// counit values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrouplikeData {
    pub count: usize,
    /// Sorted counit values of the grouplikes.
    pub counit_values: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub eps_on_unit: Scalar,
    pub trace_mul_delta: Scalar,
    pub trace_mul_delta_squared: Scalar,
    pub trace_mul_flip_delta: Scalar,
    pub commutative: bool,
    pub cocommutative: bool,
    pub algebra_trace_rank: usize,
    pub dual_trace_rank: usize,
    pub delta_unit_rank: usize,
    /// None when the dimension exceeds the closed-form solver or the
    /// coefficient field defeats exact root extraction.
    pub grouplikes: Option<GrouplikeData>,
}

impl Fingerprint {
    /// Name of the first component differing between two fingerprints.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        if self.eps_on_unit != other.eps_on_unit {
            return Some("eps-on-unit");
        }
        if self.trace_mul_delta != other.trace_mul_delta {
            return Some("trace-mul-delta");
        }
        if self.trace_mul_delta_squared != other.trace_mul_delta_squared {
            return Some("trace-mul-delta-squared");
        }
        if self.trace_mul_flip_delta != other.trace_mul_flip_delta {
            return Some("trace-mul-flip-delta");
        }
        if self.commutative != other.commutative {
            return Some("commutative");
        }
        if self.cocommutative != other.cocommutative {
            return Some("cocommutative");
        }
        if self.algebra_trace_rank != other.algebra_trace_rank {
            return Some("algebra-trace-rank");
        }
        if self.dual_trace_rank != other.dual_trace_rank {
            return Some("dual-trace-rank");
        }
        if self.delta_unit_rank != other.delta_unit_rank {
            return Some("delta-unit-rank");
        }
        match (&self.grouplikes, &other.grouplikes) {
            (Some(a), Some(b)) if a != b => Some("grouplikes"),
            _ => None,
        }
    }
}

/// The map m∘Δ (or m∘τ∘Δ) with images in rows.
fn mul_delta_matrix(h: &WeakStructure, flip: bool) -> Matrix {
    let n = h.dim();
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let d = h.coalgebra.delta_basis(k);
        let d = if flip { d.flip() } else { d };
        rows.push(h.mul_tensor2(&d).entries().to_vec());
    }
    Matrix::from_rows(rows)
}

fn trace(m: &Matrix) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..m.rows() {
        acc += m.get(i, i);
    }
    acc
}

pub fn fingerprint(h: &WeakStructure) -> Fingerprint {
    let md = mul_delta_matrix(h, false);
    let md_flip = mul_delta_matrix(h, true);
    let grouplikes = if h.dim() <= 3 {
        h.grouplikes().ok().map(|gs| {
            let mut counit_values: Vec<Scalar> = gs.iter().map(|g| h.counit(g)).collect();
            counit_values.sort();
            GrouplikeData {
                count: gs.len(),
                counit_values,
            }
        })
    } else {
        None
    };
    Fingerprint {
        eps_on_unit: h.counit(&h.algebra.unit),
        trace_mul_delta: trace(&md),
        trace_mul_delta_squared: trace(&md.mul(&md)),
        trace_mul_flip_delta: trace(&md_flip),
        commutative: h.algebra.is_commutative(),
        cocommutative: h.coalgebra.is_cocommutative(),
        algebra_trace_rank: trace_bilinear_rank(&h.algebra.mult),
        dual_trace_rank: trace_bilinear_rank(&h.coalgebra.dual_mult()),
        delta_unit_rank: h.delta_unit().rank(),
        grouplikes,
    }
}
