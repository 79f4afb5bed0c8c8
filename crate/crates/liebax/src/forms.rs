//! Invariant bilinear forms and the tensor/operator correspondence on a
//! quadratic Lie algebra: `R_r(x) = sum_ij r^ij w(e_i, x) e_j`, its inverse,
//! and the adjoint of an operator with respect to the form.

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalars::Scalar;

/// An endomorphism in the fixed basis; column `j` is the image of `e_j`.
pub type LinearMap<S> = Matrix<S>;

/// A bilinear form by its Gram matrix `G_ij = w(e_i, e_j)`.
#[derive(Clone, PartialEq, Debug)]
pub struct BilinearForm<S> {
    gram: Matrix<S>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn new(gram: Matrix<S>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::InvalidInput("gram matrix must be square".into()));
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &Matrix<S> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, u: &[S], v: &[S]) -> S {
        let gv = self.gram.apply(v);
        u.iter()
            .zip(gv)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram.is_symmetric()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.gram.rows()
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> BilinearForm<T> {
        BilinearForm {
            gram: self.gram.map(f),
        }
    }
}

/// `w([a,b], c) = w(a, [b,c])` on all basis triples.
pub fn invariance_check<S: Scalar>(alg: &LieAlgebra<S>, form: &BilinearForm<S>) -> bool {
    let n = alg.dim();
    if form.dim() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let bij = alg.bracket_basis(i, j);
            for k in 0..n {
                let lhs = form.eval(&bij, &alg.basis_vector(k));
                let rhs = form.eval(&alg.basis_vector(i), &alg.bracket_basis(j, k));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Require a quadratic structure: symmetric, invariant, nondegenerate.
pub fn require_quadratic<S: Scalar>(alg: &LieAlgebra<S>, form: &BilinearForm<S>) -> Result<()> {
    if form.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            got: form.dim(),
        });
    }
    if !form.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !invariance_check(alg, form) {
        return Err(Error::NotInvariant);
    }
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    Ok(())
}

/// Adjoint with respect to the form: `w(R x, y) = w(x, R* y)`, in matrix
/// form `R* = G^-1 R^T G`.
pub fn adjoint_map<S: Scalar>(map: &LinearMap<S>, form: &BilinearForm<S>) -> Result<LinearMap<S>> {
    let ginv = form.gram.inverse().ok_or(Error::DegenerateForm)?;
    Ok(&(&ginv * &map.transpose()) * &form.gram)
}

/// Operator of a tensor `r = sum r^ij e_i (x) e_j`: the matrix `r^T G`.
pub fn map_from_tensor<S: Scalar>(r: &Matrix<S>, form: &BilinearForm<S>) -> Result<LinearMap<S>> {
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    Ok(&r.transpose() * &form.gram)
}

/// Exact inverse of [`map_from_tensor`]: `r = (R G^-1)^T`.
pub fn tensor_from_map<S: Scalar>(map: &LinearMap<S>, form: &BilinearForm<S>) -> Result<Matrix<S>> {
    let ginv = form.gram.inverse().ok_or(Error::DegenerateForm)?;
    Ok((map * &ginv).transpose())
}
