//! Small dense tensors with two and three slots, used both for structure
//! constants and for elements of V⊗V and V⊗V⊗V.

use std::fmt;

use super::linalg::Matrix;
use super::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor2 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zeros(dim: usize) -> Tensor2 {
        Tensor2 {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let cur = self.get(i, j) + v;
        self.set(i, j, cur);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        assert_eq!(self.dim, other.dim);
        Tensor2 {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        assert_eq!(self.dim, other.dim);
        Tensor2 {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Tensor2 {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Swap of the two slots.
    pub fn flip(&self) -> Tensor2 {
        let mut out = Tensor2::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn as_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Matrix rank of the coefficient array; invariant under g⊗g basis change.
    pub fn rank(&self) -> usize {
        self.as_matrix().rank()
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let dim = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / dim, idx % dim, v))
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, v) in self.iter_nonzero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})e{}⊗e{}", v, i + 1, j + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Tensor3 {
        Tensor3 {
            dim,
            entries: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.entries[(a * self.dim + b) * self.dim + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: Scalar) {
        self.entries[(a * self.dim + b) * self.dim + c] = v;
    }

    pub fn add_to(&mut self, a: usize, b: usize, c: usize, v: &Scalar) {
        let cur = self.get(a, b, c) + v;
        self.set(a, b, c, cur);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, other.dim);
        Tensor3 {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> {
        let dim = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| {
                let c = idx % dim;
                let b = (idx / dim) % dim;
                let a = idx / (dim * dim);
                ([a, b, c], v)
            })
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ([a, b, c], v) in self.iter_nonzero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})[{},{},{}]", v, a + 1, b + 1, c + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Rank of the Gram array of the trace form (a, b) -> trace(L_a L_b), where
/// L_a is left multiplication by e_a in the algebra with constants `mult`.
pub fn trace_bilinear_rank(mult: &Tensor3) -> usize {
    let n = mult.dim();
    // L_a as a matrix: (L_a)_{k,j} = mult[a,j,k] so that L_a e_j = sum_k mult[a,j,k] e_k.
    let left = |a: usize| -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, mult.get(a, j, k).clone());
            }
        }
        m
    };
    let ls: Vec<Matrix> = (0..n).map(left).collect();
    let mut gram = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let prod = ls[a].mul(&ls[b]);
            let mut tr = Scalar::zero();
            for i in 0..n {
                tr += prod.get(i, i);
            }
            gram.set(a, b, tr);
        }
    }
    gram.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::linalg::Vector;

    fn outer(x: &Vector, y: &Vector) -> Tensor2 {
        let mut t = Tensor2::zeros(x.dim());
        for i in 0..x.dim() {
            for j in 0..y.dim() {
                t.set(i, j, x.get(i) * y.get(j));
            }
        }
        t
    }

    #[test]
    fn tensor2_rank_examples() {
        let e1 = Vector::basis(2, 0);
        let e2 = Vector::basis(2, 1);
        assert_eq!(outer(&e1, &e1).rank(), 1);
        assert_eq!(outer(&e1, &e1).add(&outer(&e2, &e2)).rank(), 2);
        let d = e1.sub(&e2);
        assert_eq!(outer(&d, &d).add(&outer(&e2, &e2)).rank(), 2);
    }

    #[test]
    fn trace_form_rank_examples() {
        // e·e = e, one-dimensional.
        let mut idem = Tensor3::zeros(1);
        idem.set(0, 0, 0, Scalar::one());
        assert_eq!(trace_bilinear_rank(&idem), 1);
        // e·e = 0.
        let null = Tensor3::zeros(1);
        assert_eq!(trace_bilinear_rank(&null), 0);
    }
}
