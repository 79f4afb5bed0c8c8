//! Tensors r in g⊗g: the flip, ad-invariance, the CYBE residual, the
//! cobracket delta_r(a) = [r, a] with its 1-cocycle property, the dual
//! algebra, the classical double, and the factorizable-form reconstruction.
//!
//! A tensor is stored as its n x n coefficient matrix in the algebra basis,
//! rows indexing the first slot. The diagonal action on g⊗g is
//! `[t, e_k] = -(A_k t + t A_k^T)` where `A_k = ad_{e_k}`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{adjoint_map, map_from_tensor, require_quadratic, BilinearForm, LinearMap};
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::rota::rb_check;
use crate::scalars::Scalar;

/// The flip `tau(sum a_i ⊗ b_i) = sum b_i ⊗ a_i`: the transpose.
pub fn tau<S: Scalar>(r: &Matrix<S>) -> Matrix<S> {
    r.transpose()
}

/// `r + tau(r)`.
pub fn symmetric_part<S: Scalar>(r: &Matrix<S>) -> Matrix<S> {
    r + &r.transpose()
}

pub fn is_skew<S: Scalar>(r: &Matrix<S>) -> bool {
    symmetric_part(r).is_zero()
}

/// Diagonal action `[t, e_k]` of a basis vector on a 2-tensor.
pub fn act_tensor<S: Scalar>(alg: &LieAlgebra<S>, t: &Matrix<S>, k: usize) -> Matrix<S> {
    let a = alg.ad_basis(k);
    -&(&(&a * t) + &(t * &a.transpose()))
}

/// `[t, e_k] = 0` for all k.
pub fn tensor_invariance_check<S: Scalar>(alg: &LieAlgebra<S>, t: &Matrix<S>) -> Result<bool> {
    if t.rows() != alg.dim() || t.cols() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            got: t.rows(),
        });
    }
    Ok((0..alg.dim()).all(|k| act_tensor(alg, t, k).is_zero()))
}

/// Cubic array of scalars, the shape of the CYBE residual.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor3<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> Tensor3<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, p: usize, q: usize, s: usize) -> &S {
        &self.data[(p * self.dim + q) * self.dim + s]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }
}

/// `C(r) = [r12, r13] - [r23, r12] + [r13, r23]`, with
/// `[r12,r13] = sum [a_i,a_j] ⊗ b_i ⊗ b_j`,
/// `[r23,r12] = sum a_i ⊗ [a_j,b_i] ⊗ b_j`,
/// `[r13,r23] = sum a_i ⊗ a_j ⊗ [b_i,b_j]`.
pub fn cybe_residual<S: Scalar>(alg: &LieAlgebra<S>, r: &Matrix<S>) -> Result<Tensor3<S>> {
    let n = alg.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: r.rows(),
        });
    }
    let mut data = vec![S::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            let rab = r.at(a, b);
            if rab.is_zero() {
                continue;
            }
            for c in 0..n {
                for d in 0..n {
                    let rcd = r.at(c, d);
                    if rcd.is_zero() {
                        continue;
                    }
                    let coef = rab.clone() * rcd.clone();
                    // [r12, r13]: (a,b), (c,d) -> [e_a, e_c] ⊗ e_b ⊗ e_d
                    for p in 0..n {
                        let s = alg.structure_constant(a, c, p);
                        if !s.is_zero() {
                            let idx = (p * n + b) * n + d;
                            data[idx] = data[idx].clone() + coef.clone() * s.clone();
                        }
                    }
                    // [r23, r12]: e_a ⊗ [e_c, e_b] ⊗ e_d  (subtracted)
                    for q in 0..n {
                        let s = alg.structure_constant(c, b, q);
                        if !s.is_zero() {
                            let idx = (a * n + q) * n + d;
                            data[idx] = data[idx].clone() - coef.clone() * s.clone();
                        }
                    }
                    // [r13, r23]: e_a ⊗ e_c ⊗ [e_b, e_d]
                    for t in 0..n {
                        let s = alg.structure_constant(b, d, t);
                        if !s.is_zero() {
                            let idx = (a * n + c) * n + t;
                            data[idx] = data[idx].clone() + coef.clone() * s.clone();
                        }
                    }
                }
            }
        }
    }
    Ok(Tensor3 { dim: n, data })
}

/// Contraction `psi_{e_x, e_y}(T) = sum_{a,b} w(e_x, e_a) w(e_y, e_b) T_ab.`,
/// the route that turns the CYBE residual into operator identities.
pub fn psi_contract<S: Scalar>(
    form: &BilinearForm<S>,
    t: &Tensor3<S>,
    x: usize,
    y: usize,
) -> Vec<S> {
    let n = t.dim();
    let gx = form.gram().row(x);
    let gy = form.gram().row(y);
    let mut out = vec![S::zero(); n];
    for a in 0..n {
        if gx[a].is_zero() {
            continue;
        }
        for b in 0..n {
            if gy[b].is_zero() {
                continue;
            }
            let w = gx[a].clone() * gy[b].clone();
            for c in 0..n {
                if !t.at(a, b, c).is_zero() {
                    out[c] = out[c].clone() + w.clone() * t.at(a, b, c).clone();
                }
            }
        }
    }
    out
}

/// The cobracket table `delta(e_k) = [r, e_k]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Cobracket<S> {
    tables: Vec<Matrix<S>>,
}

impl<S: Scalar> Cobracket<S> {
    pub fn from_tables(tables: Vec<Matrix<S>>) -> Self {
        Cobracket { tables }
    }

    pub fn dim(&self) -> usize {
        self.tables.len()
    }

    pub fn delta(&self, k: usize) -> &Matrix<S> {
        &self.tables[k]
    }

    pub fn is_zero(&self) -> bool {
        self.tables.iter().all(Matrix::is_zero)
    }

    /// delta extended linearly to an arbitrary vector.
    pub fn delta_of(&self, v: &[S]) -> Matrix<S> {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.tables[k].scale(c);
            }
        }
        out
    }
}

pub fn cobracket<S: Scalar>(alg: &LieAlgebra<S>, r: &Matrix<S>) -> Result<Cobracket<S>> {
    let n = alg.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: r.rows(),
        });
    }
    Ok(Cobracket {
        tables: (0..n).map(|k| act_tensor(alg, r, k)).collect(),
    })
}

/// 1-cocycle test `delta([a,b]) = [delta(a), b] + [a, delta(b)]` on basis
/// pairs, with `[a, T] = -[T, a]` the left module action.
pub fn cocycle_check<S: Scalar>(alg: &LieAlgebra<S>, delta: &Cobracket<S>) -> Result<bool> {
    let n = alg.dim();
    if delta.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: delta.dim(),
        });
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = delta.delta_of(&alg.bracket_basis(i, j));
            let rhs = &act_tensor(alg, delta.delta(i), j) - &act_tensor(alg, delta.delta(j), i);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Structure constants of the dual algebra of the coalgebra `(g, delta_r)`,
/// transported onto g through the form:
/// `[a*, b*] = (-[R a, b] - [a, R b] - mu([a, b]))*`.
///
/// When no weight is supplied, `mu = -(R + R*)` is derived, which makes the
/// displayed product the dual product for an arbitrary tensor.
pub fn dual_algebra<S: Scalar>(
    alg: &LieAlgebra<S>,
    form: &BilinearForm<S>,
    r: &Matrix<S>,
    weight: Option<&LinearMap<S>>,
) -> Result<LieAlgebra<S>> {
    let op = map_from_tensor(r, form)?;
    let derived;
    let mu = match weight {
        Some(m) => m,
        None => {
            derived = -&(&op + &adjoint_map(&op, form)?);
            &derived
        }
    };
    let n = alg.dim();
    Ok(LieAlgebra::from_bracket_fn(
        n,
        alg.basis_names().map(<[String]>::to_vec),
        |i, j| {
            let t1 = alg.bracket(&op.col(i), &alg.basis_vector(j)).expect("dims");
            let t2 = alg.bracket(&alg.basis_vector(i), &op.col(j)).expect("dims");
            let t3 = mu.apply(&alg.bracket_basis(i, j));
            (0..n)
                .map(|k| -(t1[k].clone() + t2[k].clone() + t3[k].clone()))
                .collect()
        },
    ))
}

/// A pair `(g, delta_r)` is a Lie coalgebra exactly when its dual algebra
/// is Lie, so the test is the Jacobi identity of the dual product.
pub fn lie_coalgebra_check<S: Scalar>(
    alg: &LieAlgebra<S>,
    form: &BilinearForm<S>,
    r: &Matrix<S>,
) -> Result<bool> {
    Ok(dual_algebra(alg, form, r, None)?.jacobi_check())
}

/// The classical double `D(g) = g ⊕ g*` of `(g, delta_r)`, with `g*`
/// identified with `g` through the form. Built purely from the cobracket by
/// Sweedler-style contractions, independently of the operator route, so the
/// isomorphism onto `D_{R,mu}(g)` is a genuine cross-check.
pub fn drinfeld_double<S: Scalar>(
    alg: &LieAlgebra<S>,
    form: &BilinearForm<S>,
    r: &Matrix<S>,
) -> Result<LieAlgebra<S>> {
    require_quadratic(alg, form)?;
    if !tensor_invariance_check(alg, &symmetric_part(r))? {
        return Err(Error::SymmetricPartNotInvariant);
    }
    if !lie_coalgebra_check(alg, form, r)? {
        return Err(Error::NotLieCoalgebra);
    }
    let n = alg.dim();
    let delta = cobracket(alg, r)?;
    let g = form.gram();
    let ginv = g.inverse().ok_or(Error::DegenerateForm)?;
    // [e_i, e_j*]: g-part  sum_pq delta_i^pq w(e_j, e_p) e_q
    //             g*-part  w* with w = -G^-1 A_i^T G e_j
    let mixed = |i: usize, j: usize| -> Vec<S> {
        let gj = g.col(j);
        let mut plain = delta.delta(i).transpose().apply(&gj);
        let ai = alg.ad_basis(i);
        let w = ginv.apply(&ai.transpose().apply(&gj));
        let mut out = Vec::with_capacity(2 * n);
        out.append(&mut plain);
        out.extend(w.into_iter().map(|c| -c));
        out
    };
    // [e_i*, e_j*]: the functional a -> w(e_i, a_(1)) w(e_j, a_(2)), as w*
    let dual = |i: usize, j: usize| -> Vec<S> {
        let gi = g.col(i);
        let gj = g.col(j);
        let vec: Vec<S> = (0..n)
            .map(|k| {
                let m = delta.delta(k);
                let mut acc = S::zero();
                for p in 0..n {
                    if gi[p].is_zero() {
                        continue;
                    }
                    for q in 0..n {
                        if !gj[q].is_zero() && !m.at(p, q).is_zero() {
                            acc = acc + gi[p].clone() * gj[q].clone() * m.at(p, q).clone();
                        }
                    }
                }
                acc
            })
            .collect();
        let w = ginv.apply(&vec);
        let mut out = vec![S::zero(); n];
        out.extend(w);
        out
    };
    let product = |i: usize, j: usize| -> Vec<S> {
        match (i < n, j < n) {
            (true, true) => {
                let mut v = alg.bracket_basis(i, j);
                v.extend(vec![S::zero(); n]);
                v
            }
            (true, false) => mixed(i, j - n),
            (false, true) => mixed(j, i - n).into_iter().map(|c| -c).collect(),
            (false, false) => dual(i - n, j - n),
        }
    };
    let names = alg.basis_names().map(|ns| {
        ns.iter()
            .cloned()
            .chain(ns.iter().map(|s| format!("{s}*")))
            .collect::<Vec<_>>()
    });
    Ok(LieAlgebra::from_bracket_fn(2 * n, names, product))
}

/// Proposition-3 cross-check: under `phi(x + y*) = x + ȳ` the classical
/// double's table must coincide entrywise with `build_double(g, R_r, mu)`
/// for `mu = -(R_r + R_r*)`.
pub fn double_iso_check<S: Scalar>(
    alg: &LieAlgebra<S>,
    form: &BilinearForm<S>,
    r: &Matrix<S>,
) -> Result<bool> {
    let classical = drinfeld_double(alg, form, r)?;
    let op = map_from_tensor(r, form)?;
    let mu = -&(&op + &adjoint_map(&op, form)?);
    let built = crate::rota::build_double(alg, &op, &mu)?;
    let n = 2 * alg.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if classical.structure_constant(i, j, k)
                    != built.algebra.structure_constant(i, j, k)
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The invariant form induced by a factorizable tensor: with
/// `I = r + tau(r)` nondegenerate, `beta(x, y) = <I^-1 x, y>` has Gram
/// matrix `-(r + tau(r))^-1`, and the operator of `r` with respect to beta
/// is a Rota-Baxter operator of weight 1 with `R + R* + id = 0`; both
/// claims are verified before returning.
pub fn factorizable_form<S: Scalar>(alg: &LieAlgebra<S>, r: &Matrix<S>) -> Result<BilinearForm<S>> {
    let s = symmetric_part(r);
    if s.is_zero() {
        return Err(Error::InvalidInput("tensor has zero symmetric part".into()));
    }
    if !tensor_invariance_check(alg, &s)? {
        return Err(Error::SymmetricPartNotInvariant);
    }
    let residual = cybe_residual(alg, r)?;
    if !residual.is_zero() {
        return Err(Error::CybeRejected {
            nonzero: residual.nonzero_count(),
        });
    }
    let s_inv = s.inverse().ok_or(Error::DegenerateForm)?;
    let beta = BilinearForm::new(-&s_inv)?;
    if !crate::forms::invariance_check(alg, &beta) || !beta.is_nondegenerate() {
        return Err(Error::Verification(
            "induced form is not invariant nondegenerate",
        ));
    }
    let op = map_from_tensor(r, &beta)?;
    let op_star = adjoint_map(&op, &beta)?;
    let n = alg.dim();
    if !(&(&op + &op_star) + &Matrix::identity(n)).is_zero() {
        return Err(Error::Verification("R + R* + id does not vanish"));
    }
    if !rb_check(alg, &op, &Matrix::identity(n))? {
        return Err(Error::Verification(
            "operator is not Rota-Baxter of weight 1",
        ));
    }
    Ok(beta)
}

/// Extra diagnostic: ad-invariance of the CYBE residual tensor.
pub fn cybe_invariance_check<S: Scalar>(alg: &LieAlgebra<S>, r: &Matrix<S>) -> Result<bool> {
    let res = cybe_residual(alg, r)?;
    let n = alg.dim();
    // [T, e_k] for a 3-tensor: the action hits each slot in turn
    for k in 0..n {
        let a = alg.ad_basis(k);
        for p in 0..n {
            for q in 0..n {
                for s in 0..n {
                    let mut acc = S::zero();
                    for m in 0..n {
                        if !res.at(m, q, s).is_zero() && !a.at(p, m).is_zero() {
                            acc = acc - a.at(p, m).clone() * res.at(m, q, s).clone();
                        }
                        if !res.at(p, m, s).is_zero() && !a.at(q, m).is_zero() {
                            acc = acc - a.at(q, m).clone() * res.at(p, m, s).clone();
                        }
                        if !res.at(p, q, m).is_zero() && !a.at(s, m).is_zero() {
                            acc = acc - a.at(s, m).clone() * res.at(p, q, m).clone();
                        }
                    }
                    if !acc.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::tests::omega_sl2;
    use crate::liealg::tests::sl2;
    use crate::scalars::{rat_int, Rat};
    use num_traits::Zero;

    fn wedge(i: usize, j: usize) -> Matrix<Rat> {
        let mut r = Matrix::zeros(3, 3);
        r.set(i, j, rat_int(1));
        r.set(j, i, rat_int(-1));
        r
    }

    fn r1() -> Matrix<Rat> {
        wedge(1, 0) // h ^ x
    }

    fn r2() -> Matrix<Rat> {
        wedge(0, 2) // x ^ y
    }

    fn r3() -> Matrix<Rat> {
        &wedge(1, 0) + &wedge(1, 2) // h ^ (x + y)
    }

    /// sl2 ⊕ sl2 with the block form, and a skew tensor mixing the blocks
    /// whose dual product fails the Jacobi identity.
    fn sl2_pair_with_bad_tensor() -> (
        crate::liealg::LieAlgebra<Rat>,
        BilinearForm<Rat>,
        Matrix<Rat>,
    ) {
        let l = sl2().direct_sum(&sl2());
        let mut g = Matrix::zeros(6, 6);
        for base in [0, 3] {
            g.set(base, base + 2, rat_int(1));
            g.set(base + 2, base, rat_int(1));
            g.set(base + 1, base + 1, rat_int(2));
        }
        let form = BilinearForm::new(g).unwrap();
        // r = x ∧ y' + h ∧ x'
        let mut r = Matrix::zeros(6, 6);
        r.set(0, 5, rat_int(1));
        r.set(5, 0, rat_int(-1));
        r.set(1, 3, rat_int(1));
        r.set(3, 1, rat_int(-1));
        (l, form, r)
    }

    #[test]
    fn invariance_examples() {
        let l = sl2();
        // x ⊗ y is not invariant: [t, x] = -x ⊗ h
        let mut t = Matrix::zeros(3, 3);
        t.set(0, 2, rat_int(1));
        assert!(!tensor_invariance_check(&l, &t).unwrap());
        assert!(tensor_invariance_check(&l, &Matrix::zeros(3, 3)).unwrap());
        // the Killing Casimir is invariant
        let kappa = l.killing_form();
        let cas = kappa.gram().inverse().unwrap();
        assert!(tensor_invariance_check(&l, &cas).unwrap());
    }

    #[test]
    fn cybe_residual_examples() {
        let l = sl2();
        assert!(cybe_residual(&l, &r1()).unwrap().is_zero());
        assert!(cybe_residual(&l, &Matrix::zeros(3, 3)).unwrap().is_zero());
        assert!(!cybe_residual(&l, &r3()).unwrap().is_zero());
        assert!(!cybe_residual(&l, &r2()).unwrap().is_zero());
    }

    #[test]
    fn cobracket_examples() {
        let l = sl2();
        assert!(cobracket(&l, &Matrix::zeros(3, 3)).unwrap().is_zero());
        // invariant tensors have zero cobracket
        let cas = l.killing_form().gram().inverse().unwrap();
        assert!(cobracket(&l, &cas).unwrap().is_zero());
        // delta_{r2}(h) = 0
        let d = cobracket(&l, &r2()).unwrap();
        assert!(d.delta(1).is_zero());
        assert!(!d.delta(0).is_zero());
    }

    #[test]
    fn cocycle_examples() {
        let l = sl2();
        for r in [r1(), r2(), r3()] {
            assert!(cocycle_check(&l, &cobracket(&l, &r).unwrap()).unwrap());
        }
        // delta(e_k) = e_k ⊗ e_k is not a cocycle
        let bad = Cobracket::from_tables(
            (0..3)
                .map(|k| {
                    let mut m = Matrix::zeros(3, 3);
                    m.set(k, k, rat_int(1));
                    m
                })
                .collect(),
        );
        assert!(!cocycle_check(&l, &bad).unwrap());
        let zero = Cobracket::from_tables(vec![Matrix::zeros(3, 3); 3]);
        assert!(cocycle_check(&l, &zero).unwrap());
    }

    #[test]
    fn dual_algebra_cases() {
        let l = sl2();
        let om = omega_sl2();
        // triangular r1 gives a Lie dual
        assert!(lie_coalgebra_check(&l, &om, &r1()).unwrap());
        // r = 0 gives the abelian dual
        let d0 = dual_algebra(&l, &om, &Matrix::zeros(3, 3), None).unwrap();
        assert!(d0.derived_subalgebra().is_zero());
        // all three fixture tensors give coalgebras; indeed every skew
        // tensor does on sl2, where the residual lands in the trivial
        // top exterior power
        assert!(lie_coalgebra_check(&l, &om, &r2()).unwrap());
        assert!(lie_coalgebra_check(&l, &om, &r3()).unwrap());
        assert!(lie_coalgebra_check(&l, &om, &(&wedge(1, 0) + &wedge(0, 2))).unwrap());
        // a skew tensor with nonzero co-Jacobi defect lives on sl2 ⊕ sl2
        let (pair, pair_form, bad) = sl2_pair_with_bad_tensor();
        assert!(!lie_coalgebra_check(&pair, &pair_form, &bad).unwrap());
    }

    #[test]
    fn drinfeld_double_matches_operator_double() {
        let l = sl2();
        let om = omega_sl2();
        for r in [r1(), r2()] {
            assert!(double_iso_check(&l, &om, &r).unwrap());
            let d = drinfeld_double(&l, &om, &r).unwrap();
            assert!(d.jacobi_check());
        }
    }

    #[test]
    fn drinfeld_double_zero_tensor_is_semidirect() {
        let l = sl2();
        let om = omega_sl2();
        let d = drinfeld_double(&l, &om, &Matrix::zeros(3, 3)).unwrap();
        assert!(d.jacobi_check());
        // the dual copy is abelian
        for i in 3..6 {
            for j in (i + 1)..6 {
                assert!(d.bracket_basis(i, j).iter().all(|x| x.is_zero()));
            }
        }
        // mixed products realize the coadjoint action
        assert!(!d.bracket_basis(1, 3).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn triangular_double_has_square_zero_part() {
        let l = sl2();
        let om = omega_sl2();
        let d = drinfeld_double(&l, &om, &r1()).unwrap();
        // i(x) = R(x) + x*: for the triangular tensor these span an ideal
        // with zero products
        let op = map_from_tensor(&r1(), &om).unwrap();
        let iv = |k: usize| {
            let mut v = op.col(k);
            v.extend(l.basis_vector(k));
            v
        };
        for a in 0..3 {
            for b in 0..3 {
                let p = d.bracket(&iv(a), &iv(b)).unwrap();
                assert!(p.iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn factorizable_form_rejects_and_accepts() {
        let l = sl2();
        // zero symmetric part is rejected
        assert!(matches!(
            factorizable_form(&l, &r1()),
            Err(Error::InvalidInput(_))
        ));
        // the Killing Casimir alone is symmetric and invariant but fails CYBE
        let cas = l.killing_form().gram().inverse().unwrap();
        assert!(matches!(
            factorizable_form(&l, &cas),
            Err(Error::CybeRejected { .. })
        ));
        // the tensor of 2B, B = (R2 - id)/2, solves CYBE with invariant
        // nondegenerate symmetric part
        let om = omega_sl2();
        let op2 = map_from_tensor(&r2(), &om).unwrap();
        let two_b = &op2 - &Matrix::identity(3);
        let rb_tensor = crate::forms::tensor_from_map(&two_b, &om).unwrap();
        let beta = factorizable_form(&l, &rb_tensor).unwrap();
        assert!(beta.is_nondegenerate());
    }

    #[test]
    fn factorizable_form_on_example7_tensor() {
        let f = crate::fixtures::fixture("sl2c6").unwrap();
        let r_b = f.tensor("rB").unwrap();
        // the induced form differs from the fixture form but is invariant
        // and nondegenerate, and the function verifies the weight-1
        // Rota-Baxter identity with R + R* + id = 0 before returning
        let beta = factorizable_form(&f.algebra, r_b).unwrap();
        assert!(beta.is_nondegenerate());
        assert!(crate::forms::invariance_check(&f.algebra, &beta));
        let op = map_from_tensor(r_b, &beta).unwrap();
        let op_star = adjoint_map(&op, &beta).unwrap();
        assert!((&(&op + &op_star) + &Matrix::identity(6)).is_zero());
        assert!(rb_check(&f.algebra, &op, &Matrix::identity(6)).unwrap());
    }

    #[test]
    fn psi_contraction_matches_t11_route() {
        let l = sl2();
        let om = omega_sl2();
        for r in [r1(), r2(), r3(), &wedge(1, 0) + &wedge(0, 2)] {
            let res = cybe_residual(&l, &r).unwrap();
            let op = map_from_tensor(&r, &om).unwrap();
            let op_star = adjoint_map(&op, &om).unwrap();
            for x in 0..3 {
                for y in 0..3 {
                    let via_psi = psi_contract(&om, &res, x, y);
                    // R([x, R*(y)] - [R(x), y]) + [R(x), R(y)]
                    let t1 = l.bracket(&l.basis_vector(x), &op_star.col(y)).unwrap();
                    let t2 = l.bracket(&op.col(x), &l.basis_vector(y)).unwrap();
                    let diff: Vec<Rat> = (0..3).map(|k| t1[k].clone() - t2[k].clone()).collect();
                    let mut direct = op.apply(&diff);
                    let t3 = l.bracket(&op.col(x), &op.col(y)).unwrap();
                    for k in 0..3 {
                        direct[k] = direct[k].clone() + t3[k].clone();
                    }
                    assert_eq!(via_psi, direct);
                }
            }
        }
    }

    #[test]
    fn cybe_invariance_diagnostic() {
        let l = sl2();
        assert!(cybe_invariance_check(&l, &r1()).unwrap());
        // r3 yields a coboundary bialgebra, so its residual is invariant
        assert!(cybe_invariance_check(&l, &r3()).unwrap());
        // the non-coalgebra tensor on sl2 ⊕ sl2 has a non-invariant residual
        let (pair, _, bad) = sl2_pair_with_bad_tensor();
        assert!(!cybe_invariance_check(&pair, &bad).unwrap());
    }
}
