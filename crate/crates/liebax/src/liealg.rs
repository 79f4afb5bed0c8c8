//! Lie algebras presented by structure constants: bracket evaluation, the
//! Jacobi check, and the classical structural subspaces (center, derived
//! subalgebra), plus the adjoint representation and the Killing form.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::linalg::{Matrix, Subspace};
use crate::scalars::{Quad, Rat, Scalar};

/// A finite-dimensional algebra with bracket `[e_i, e_j] = sum_k c_ijk e_k`.
///
/// Constructors fill the antisymmetric half automatically, so stored
/// constants always satisfy `c_ijk = -c_jik`; the Jacobi identity is a
/// checked property, not an assumption.
#[derive(Clone, PartialEq, Debug)]
pub struct LieAlgebra<S> {
    dim: usize,
    constants: Vec<S>,
    basis_names: Option<Vec<String>>,
}

impl<S: Scalar> LieAlgebra<S> {
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Build from a bracket on basis pairs `i < j`; the other half follows
    /// by antisymmetry.
    pub fn from_bracket_fn(
        dim: usize,
        basis_names: Option<Vec<String>>,
        mut bracket: impl FnMut(usize, usize) -> Vec<S>,
    ) -> Self {
        let mut constants = vec![S::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let v = bracket(i, j);
                assert_eq!(v.len(), dim, "bracket image of wrong length");
                for (k, x) in v.into_iter().enumerate() {
                    constants[(i * dim + j) * dim + k] = x.clone();
                    constants[(j * dim + i) * dim + k] = -x;
                }
            }
        }
        LieAlgebra {
            dim,
            constants,
            basis_names,
        }
    }

    /// Build from a sparse list of brackets `[e_i, e_j]` with `i < j`
    /// (0-based); unlisted pairs are zero.
    pub fn from_brackets(
        dim: usize,
        basis_names: Option<Vec<String>>,
        entries: &[(usize, usize, Vec<S>)],
    ) -> Result<Self> {
        for &(i, j, ref v) in entries {
            if i >= j || j >= dim {
                return Err(Error::InvalidInput(format!(
                    "bracket pair ({i}, {j}) must satisfy i < j < dim"
                )));
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(i, j, _) in entries {
            if !seen.insert((i, j)) {
                return Err(Error::InvalidInput(format!(
                    "duplicate bracket pair ({i}, {j})"
                )));
            }
        }
        Ok(Self::from_bracket_fn(dim, basis_names, |i, j| {
            entries
                .iter()
                .find(|&&(a, b, _)| (a, b) == (i, j))
                .map(|(_, _, v)| v.clone())
                .unwrap_or_else(|| vec![S::zero(); dim])
        }))
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_bracket_fn(dim, None, |_, _| vec![S::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = Some(names);
        self
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &S {
        &self.constants[self.idx(i, j, k)]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim];
        v[i] = S::one();
        v
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<S> {
        (0..self.dim)
            .map(|k| self.constants[self.idx(i, j, k)].clone())
            .collect()
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec![S::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    let c = &self.constants[self.idx(i, j, k)];
                    if !c.is_zero() {
                        out[k] = out[k].clone() + xi.clone() * yj.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `y -> [x, y]`.
    pub fn adjoint(&self, x: &[S]) -> Result<Matrix<S>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let mut acc = S::zero();
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() {
                        let c = &self.constants[self.idx(i, j, k)];
                        if !c.is_zero() {
                            acc = acc + xi.clone() * c.clone();
                        }
                    }
                }
                m.set(k, j, acc);
            }
        }
        Ok(m)
    }

    /// Adjoint matrix of the basis vector `e_i`.
    pub fn ad_basis(&self, i: usize) -> Matrix<S> {
        Matrix::from_fn(self.dim, self.dim, |k, j| {
            self.constants[self.idx(i, j, k)].clone()
        })
    }

    /// Antisymmetry and the Jacobi identity on all basis triples.
    pub fn jacobi_check(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = &self.constants[self.idx(i, j, k)];
                    let b = &self.constants[self.idx(j, i, k)];
                    if (a.clone() + b.clone()) != S::zero() {
                        return false;
                    }
                }
            }
        }
        // antisymmetry established, so i < j < k triples suffice
        for i in 0..n {
            for j in (i + 1)..n {
                let bij = self.bracket_basis(i, j);
                for k in (j + 1)..n {
                    let bjk = self.bracket_basis(j, k);
                    let bki = self.bracket_basis(k, i);
                    let t1 = self.bracket(&bij, &self.basis_vector(k)).expect("dims");
                    let t2 = self.bracket(&bjk, &self.basis_vector(i)).expect("dims");
                    let t3 = self.bracket(&bki, &self.basis_vector(j)).expect("dims");
                    for m in 0..n {
                        let s = t1[m].clone() + t2[m].clone() + t3[m].clone();
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `Z(g) = {x | [x, g] = 0}` as an echelon-canonical subspace.
    pub fn center(&self) -> Subspace<S> {
        let n = self.dim;
        // rows indexed by (j, k): sum_i c_ijk x_i = 0
        let m = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.constants[self.idx(i, j, k)].clone()
        });
        Subspace::from_spanning(n, &m.null_space())
    }

    /// Span of all brackets of basis pairs.
    pub fn derived_subalgebra(&self) -> Subspace<S> {
        let n = self.dim;
        let mut spanning = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    spanning.push(v);
                }
            }
        }
        Subspace::from_spanning(n, &spanning)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().is_full()
    }

    /// Killing form `k(x, y) = tr(ad_x ad_y)`; symmetric and invariant by
    /// construction.
    pub fn killing_form(&self) -> BilinearForm<S> {
        let n = self.dim;
        let ads: Vec<Matrix<S>> = (0..n).map(|i| self.ad_basis(i)).collect();
        let gram = Matrix::from_fn(n, n, |i, j| (&ads[i] * &ads[j]).trace());
        BilinearForm::new(gram).expect("square gram matrix")
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n1 = self.dim;
        let n = n1 + other.dim;
        let names = match (&self.basis_names, &other.basis_names) {
            (Some(a), Some(b)) => Some(a.iter().chain(b.iter()).cloned().collect()),
            _ => None,
        };
        Self::from_bracket_fn(n, names, |i, j| {
            let mut v = vec![S::zero(); n];
            if i < n1 && j < n1 {
                v[..n1].clone_from_slice(&self.bracket_basis(i, j));
            } else if i >= n1 && j >= n1 {
                v[n1..].clone_from_slice(&other.bracket_basis(i - n1, j - n1));
            }
            v
        })
    }

    pub fn map_scalars<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> LieAlgebra<T> {
        LieAlgebra {
            dim: self.dim,
            constants: self.constants.iter().map(&mut f).collect(),
            basis_names: self.basis_names.clone(),
        }
    }
}

/// Reinterpret a rational algebra over Q(sqrt(d)).
pub fn extend_scalars(alg: &LieAlgebra<Rat>, d: i64) -> LieAlgebra<Quad> {
    alg.map_scalars(|s| s.lift_to_quad(d))
}

/// Values of a bilinear vector-valued map on all basis pairs.
#[derive(Clone, PartialEq, Debug)]
pub struct PairTable<S> {
    dim: usize,
    entries: Vec<Vec<S>>,
}

impl<S: Scalar> PairTable<S> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<S>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim);
                entries.push(v);
            }
        }
        PairTable { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &[S] {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// Number of basis pairs with a nonzero value.
    pub fn nonzero_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .count()
    }
}
