//! The centroid Cent(g) of an algebra: exact computation, membership,
//! block-scalar centrum maps, and square roots mu^2 = target inside the
//! centroid.
//!
//! For a Lie algebra the defining conditions `mu([x,y]) = [mu(x),y] = [x,mu(y)]`
//! reduce to commutation with every adjoint map: if mu commutes with each
//! ad_x then `[mu(x),y] = -mu([y,x]) = mu([x,y])` by antisymmetry, so the
//! single family `{mu ad_i = ad_i mu}` cuts out the whole centroid.
//!
//! The square-root solver decomposes the centroid (a commutative matrix
//! algebra whenever the algebra is perfect, and checked in any case) into
//! primitive blocks via idempotent splitting, then solves per block: scalar
//! blocks by rational square roots with a quadratic-extension witness,
//! two-dimensional field blocks by reducing (a + b t)^2 = target to a
//! biquadratic in b, and nilpotent blocks directly. `Undecided` is the
//! honest answer whenever a block resists this analysis.

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{common_null_space, Matrix, Subspace};
use crate::scalars::{Quad, Scalar, ScalarSqrt};

/// Echelon-canonical basis of Cent(g).
#[derive(Clone, Debug)]
pub struct CentroidBasis<S> {
    pub elements: Vec<Matrix<S>>,
    /// Set when dim Cent > dim g; near-abelian algebras make the centroid
    /// huge and the square-root search meaningless.
    pub oversized: bool,
}

impl<S: Scalar> CentroidBasis<S> {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Coordinates of a map in the span of the basis, if it lies there.
    pub fn coords(&self, map: &Matrix<S>) -> Option<Vec<S>> {
        coords_in_span(&self.elements, map)
    }

    pub fn contains_identity(&self) -> bool {
        let n = self.elements.first().map_or(0, Matrix::rows);
        n > 0 && self.coords(&Matrix::identity(n)).is_some()
    }
}

/// Solve `target = sum c_t basis_t` in the linear span of matrices.
fn coords_in_span<S: Scalar>(basis: &[Matrix<S>], target: &Matrix<S>) -> Option<Vec<S>> {
    if basis.is_empty() {
        return target.is_zero().then(Vec::new);
    }
    let rows = basis[0].rows() * basis[0].cols();
    let system = Matrix::from_fn(rows, basis.len(), |r, c| basis[c].as_vec()[r].clone());
    let rhs: Vec<S> = target.as_vec().to_vec();
    system.solve(&rhs)
}

/// Exact basis of the centroid as the common null space of the commutation
/// constraints with every adjoint map.
pub fn centroid_basis<S: Scalar>(alg: &LieAlgebra<S>) -> CentroidBasis<S> {
    let n = alg.dim();
    let unknowns = n * n;
    let blocks = (0..n).filter_map(|i| {
        let a = alg.ad_basis(i);
        if a.is_zero() {
            return None;
        }
        // row (k,l), unknown (p,q): (mu A - A mu)[k][l] = 0
        Some(Matrix::from_fn(unknowns, unknowns, |row, col| {
            let (k, l) = (row / n, row % n);
            let (p, q) = (col / n, col % n);
            let mut v = S::zero();
            if p == k {
                v = v + a.at(q, l).clone();
            }
            if q == l {
                v = v - a.at(k, p).clone();
            }
            v
        }))
    });
    let kernel = common_null_space(unknowns, blocks);
    let elements: Vec<Matrix<S>> = kernel
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |p, q| v[p * n + q].clone()))
        .collect();
    let oversized = elements.len() > n;
    CentroidBasis {
        elements,
        oversized,
    }
}

/// `mu([e_i, e_j]) = [mu(e_i), e_j]` on all basis pairs.
pub fn is_centrum<S: Scalar>(alg: &LieAlgebra<S>, map: &Matrix<S>) -> bool {
    let n = alg.dim();
    if map.rows() != n || map.cols() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = map.apply(&alg.bracket_basis(i, j));
            let rhs = alg
                .bracket(&map.col(i), &alg.basis_vector(j))
                .expect("dimensions agree");
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The block-scalar map acting as `weights[k] * id` on the k-th ideal of a
/// direct-sum decomposition.
pub fn direct_sum_centrum<S: Scalar>(
    alg: &LieAlgebra<S>,
    ideals: &[Subspace<S>],
    weights: &[S],
) -> Result<Matrix<S>> {
    let n = alg.dim();
    if ideals.is_empty() || ideals.len() != weights.len() {
        return Err(Error::BadDecomposition);
    }
    let total: usize = ideals.iter().map(Subspace::dim).sum();
    if total != n {
        return Err(Error::BadDecomposition);
    }
    let mut columns: Vec<Vec<S>> = Vec::with_capacity(n);
    let mut diag: Vec<S> = Vec::with_capacity(n);
    for (ideal, w) in ideals.iter().zip(weights) {
        if ideal.ambient_dim() != n {
            return Err(Error::BadDecomposition);
        }
        for v in ideal.basis_vectors() {
            // closed under bracket with all of the algebra
            for j in 0..n {
                let b = alg.bracket(&alg.basis_vector(j), &v)?;
                if !ideal.contains(&b) {
                    return Err(Error::BadDecomposition);
                }
            }
            columns.push(v);
            diag.push(w.clone());
        }
    }
    let c = Matrix::from_fn(n, n, |i, j| columns[j][i].clone());
    let c_inv = c.inverse().ok_or(Error::BadDecomposition)?;
    let m = &(&c * &Matrix::from_diag(&diag)) * &c_inv;
    if !is_centrum(alg, &m) {
        return Err(Error::Verification("block-scalar map is not a centrum map"));
    }
    Ok(m)
}

/// Outcome of solving `mu^2 = target` inside the centroid.
#[derive(Clone, Debug)]
pub enum SqrtResult<S> {
    /// Exact solution over the base field.
    Found(Matrix<S>),
    /// Solution over Q(sqrt(d)), with the lifted map as witness.
    Extension { d: i64, map: Matrix<Quad> },
    /// Provably no solution over the base field or any single quadratic
    /// extension of Q.
    NoSolution,
    /// The decision procedure does not cover this centroid.
    Undecided,
}

/// Solve `mu^2 = target` with `mu` in the centroid of the algebra.
///
/// Errors when the target is not in the centroid span. The procedure covers
/// scalar centroids, two-dimensional field or nilpotent centroids, and any
/// centroid that splits into one-dimensional idempotent blocks over the base
/// field; everything else reports `Undecided`.
pub fn centroid_sqrt<S: Scalar>(alg: &LieAlgebra<S>, target: &Matrix<S>) -> Result<SqrtResult<S>> {
    let basis = centroid_basis(alg);
    if basis.coords(target).is_none() {
        return Err(Error::NotInCentroid);
    }
    let result = commutative_sqrt(&basis.elements, target);
    // FOUND/EXTENSION witnesses must square back to the target exactly
    match &result {
        SqrtResult::Found(m) => {
            if &(m * m) != target {
                debug_assert!(false, "in-field witness fails to square back");
                return Ok(SqrtResult::Undecided);
            }
        }
        SqrtResult::Extension { d, map } => {
            let lifted = target.map(|s| s.lift_to_quad(*d));
            if (map * map) != lifted {
                debug_assert!(false, "extension witness fails to square back");
                return Ok(SqrtResult::Undecided);
            }
        }
        _ => {}
    }
    Ok(result)
}

enum Block<S> {
    OneDim {
        p: Matrix<S>,
    },
    /// v^2 = e p + f v with X^2 - f X - e irreducible: a quadratic field.
    Field {
        p: Matrix<S>,
        v: Matrix<S>,
        e: S,
        f: S,
    },
    /// v^2 = 0 on the block.
    Nilpotent {
        p: Matrix<S>,
        v: Matrix<S>,
    },
    Opaque,
}

enum BlockSqrt<S> {
    InField(Matrix<S>),
    /// Alternative witnesses over distinct quadratic extensions.
    Candidates(Vec<(i64, Matrix<Quad>)>),
    ProvablyNone,
    Unknown,
}

/// `v = lambda p` proportionality test; zero counts as proportional.
fn proportional<S: Scalar>(v: &Matrix<S>, p: &Matrix<S>) -> Option<S> {
    let pos = p.as_vec().iter().position(|x| !x.is_zero())?;
    let lambda = v.as_vec()[pos].clone() / p.as_vec()[pos].clone();
    (v == &p.scale(&lambda)).then_some(lambda)
}

fn lift_matrix<S: Scalar>(m: &Matrix<S>, d: i64) -> Matrix<Quad> {
    m.map(|s| s.lift_to_quad(d))
}

/// Solve `s^2 = target` in the commutative matrix algebra spanned by
/// `basis`. The caller guarantees membership of the target.
pub(crate) fn commutative_sqrt<S: Scalar>(
    basis: &[Matrix<S>],
    target: &Matrix<S>,
) -> SqrtResult<S> {
    if basis.is_empty() {
        return SqrtResult::Undecided;
    }
    let n = basis[0].rows();
    // the splitting analysis needs a commutative algebra closed under
    // composition and containing the identity
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            let ab = a * b;
            if ab != b * a || coords_in_span(basis, &ab).is_none() {
                return SqrtResult::Undecided;
            }
        }
    }
    if coords_in_span(basis, &Matrix::identity(n)).is_none() {
        return SqrtResult::Undecided;
    }

    let blocks = split_blocks(basis, n);
    let mut onedim_only = true;
    let mut results = Vec::with_capacity(blocks.len());
    for block in &blocks {
        if !matches!(block, Block::OneDim { .. }) {
            onedim_only = false;
        }
        results.push(block_sqrt(block, target, basis));
    }

    if results.iter().any(|r| matches!(r, BlockSqrt::ProvablyNone)) {
        return SqrtResult::NoSolution;
    }
    if results.iter().any(|r| matches!(r, BlockSqrt::Unknown)) {
        return SqrtResult::Undecided;
    }
    if results.iter().all(|r| matches!(r, BlockSqrt::InField(_))) {
        let mut sum = Matrix::zeros(n, n);
        for r in &results {
            if let BlockSqrt::InField(m) = r {
                sum = &sum + m;
            }
        }
        return SqrtResult::Found(sum);
    }
    // pick one discriminant compatible with every block
    let mut chosen: Option<i64> = None;
    'd_loop: for (d, _) in results
        .iter()
        .find_map(candidate_list)
        .into_iter()
        .flatten()
    {
        for r in &results {
            if let BlockSqrt::Candidates(c) = r {
                if !c.iter().any(|(cd, _)| cd == d) {
                    continue 'd_loop;
                }
            }
        }
        chosen = Some(*d);
        break;
    }
    let Some(d) = chosen else {
        // scalar blocks enumerate their extensions exhaustively, so a
        // mismatch there is a proof; field blocks may admit solutions with
        // mixed coordinates that the biquadratic search does not see
        return if onedim_only {
            SqrtResult::NoSolution
        } else {
            SqrtResult::Undecided
        };
    };
    let mut sum: Matrix<Quad> = Matrix::zeros(n, n);
    for r in &results {
        match r {
            BlockSqrt::InField(m) => sum = &sum + &lift_matrix(m, d),
            BlockSqrt::Candidates(c) => {
                let (_, m) = c
                    .iter()
                    .find(|(cd, _)| *cd == d)
                    .expect("chosen d is common");
                sum = &sum + m;
            }
            _ => unreachable!(),
        }
    }
    SqrtResult::Extension { d, map: sum }
}

fn candidate_list<S>(r: &BlockSqrt<S>) -> Option<&Vec<(i64, Matrix<Quad>)>> {
    match r {
        BlockSqrt::Candidates(c) => Some(c),
        _ => None,
    }
}

/// Recursively split the identity into orthogonal idempotents using
/// degree-two minimal polynomials of basis elements restricted to each
/// block; blocks that stay two-dimensional are classified as field or
/// nilpotent, anything unresolved is opaque.
fn split_blocks<S: Scalar>(basis: &[Matrix<S>], n: usize) -> Vec<Block<S>> {
    let mut finished = Vec::new();
    let mut work = vec![Matrix::identity(n)];
    'outer: while let Some(p) = work.pop() {
        let span: Vec<Vec<S>> = basis.iter().map(|g| (&p * g).as_vec().to_vec()).collect();
        let block_dim = Subspace::from_spanning(n * n, &span).dim();
        if block_dim == 1 {
            finished.push(Block::OneDim { p });
            continue;
        }
        for g in basis {
            let v = &p * g;
            if proportional(&v, &p).is_some() {
                continue;
            }
            let v2 = &v * &v;
            let Some(coeffs) = coords_in_span(&[p.clone(), v.clone()], &v2) else {
                continue; // minimal polynomial of degree > 2; try another element
            };
            let (e, f) = (coeffs[0].clone(), coeffs[1].clone());
            let disc = f.clone() * f.clone() + S::from_int(4) * e.clone();
            match disc.try_sqrt() {
                Some(sq) if !sq.is_zero() => {
                    let two_inv = S::from_int(2).inv();
                    let s1 = (f.clone() + sq.clone()) * two_inv.clone();
                    let s2 = (f.clone() - sq) * two_inv;
                    let gap_inv = (s1.clone() - s2.clone()).inv();
                    let q1 = (&v - &p.scale(&s2)).scale(&gap_inv);
                    if &q1 * &q1 == q1 {
                        let q2 = &p - &q1;
                        work.push(q1);
                        work.push(q2);
                        continue 'outer;
                    }
                }
                Some(_) => {
                    if block_dim == 2 {
                        // double root f/2: the shifted element is nilpotent
                        let s = f.clone() * S::from_int(2).inv();
                        let nil = &v - &p.scale(&s);
                        finished.push(Block::Nilpotent { p, v: nil });
                        continue 'outer;
                    }
                }
                None => {
                    if block_dim == 2 {
                        finished.push(Block::Field { p, v, e, f });
                        continue 'outer;
                    }
                }
            }
        }
        finished.push(Block::Opaque);
    }
    finished
}

fn block_sqrt<S: Scalar>(
    block: &Block<S>,
    target: &Matrix<S>,
    basis: &[Matrix<S>],
) -> BlockSqrt<S> {
    let _ = basis;
    match block {
        Block::Opaque => BlockSqrt::Unknown,
        Block::OneDim { p } => {
            let component = target * p;
            let Some(lambda) = proportional(&component, p) else {
                return BlockSqrt::Unknown;
            };
            match lambda.sqrt_or_extend() {
                ScalarSqrt::InField(s) => BlockSqrt::InField(p.scale(&s)),
                ScalarSqrt::Adjoined { d, root } => {
                    BlockSqrt::Candidates(vec![(d, lift_matrix(p, d).scale(&root))])
                }
                ScalarSqrt::NoRoot => BlockSqrt::Unknown,
            }
        }
        Block::Nilpotent { p, v } => {
            let component = target * p;
            let Some(coords) = coords_in_span(&[p.clone(), v.clone()], &component) else {
                return BlockSqrt::Unknown;
            };
            let (alpha, beta) = (coords[0].clone(), coords[1].clone());
            // (a p + b v)^2 = a^2 p + 2ab v
            if alpha.is_zero() {
                return if beta.is_zero() {
                    BlockSqrt::InField(Matrix::zeros(p.rows(), p.cols()))
                } else {
                    // a^2 = 0 forces a = 0 over any field, leaving 0 = beta
                    BlockSqrt::ProvablyNone
                };
            }
            match alpha.sqrt_or_extend() {
                ScalarSqrt::InField(a) => {
                    let b = beta * (S::from_int(2) * a.clone()).inv();
                    BlockSqrt::InField(&p.scale(&a) + &v.scale(&b))
                }
                ScalarSqrt::Adjoined { d, root } => {
                    let two = Quad::from_rat(crate::scalars::rat_int(2));
                    let bq = beta.lift_to_quad(d) * (two * root.clone()).inv();
                    BlockSqrt::Candidates(vec![(
                        d,
                        &lift_matrix(p, d).scale(&root) + &lift_matrix(v, d).scale(&bq),
                    )])
                }
                ScalarSqrt::NoRoot => BlockSqrt::Unknown,
            }
        }
        Block::Field { p, v, e, f } => {
            let component = target * p;
            let Some(coords) = coords_in_span(&[p.clone(), v.clone()], &component) else {
                return BlockSqrt::Unknown;
            };
            let (alpha, beta) = (coords[0].clone(), coords[1].clone());
            // (a p + b v)^2 = (a^2 + e b^2) p + (2ab + f b^2) v
            if beta.is_zero() {
                if let Some(a) = alpha.try_sqrt() {
                    return BlockSqrt::InField(p.scale(&a));
                }
            }
            // substitute a = (beta - f u)/(2b), u = b^2:
            // (f^2 + 4e) u^2 - (2 beta f + 4 alpha) u + beta^2 = 0
            let big_a = f.clone() * f.clone() + S::from_int(4) * e.clone();
            let lin = S::from_int(2) * beta.clone() * f.clone() + S::from_int(4) * alpha.clone();
            let delta = lin.clone() * lin.clone()
                - S::from_int(4) * big_a.clone() * beta.clone() * beta.clone();
            let Some(sq) = delta.try_sqrt() else {
                return BlockSqrt::Unknown;
            };
            let denom_inv = (S::from_int(2) * big_a).inv();
            let mut candidates = Vec::new();
            for root in [
                (lin.clone() + sq.clone()) * denom_inv.clone(),
                (lin - sq) * denom_inv,
            ] {
                if root.is_zero() {
                    continue;
                }
                if let Some(b) = root.try_sqrt() {
                    let a = (beta.clone() - f.clone() * root.clone())
                        * (S::from_int(2) * b.clone()).inv();
                    return BlockSqrt::InField(&p.scale(&a) + &v.scale(&b));
                }
                if let ScalarSqrt::Adjoined { d, root: bq } = root.sqrt_or_extend() {
                    let two = Quad::from_rat(crate::scalars::rat_int(2));
                    let aq = (beta.lift_to_quad(d) - f.lift_to_quad(d) * root.lift_to_quad(d))
                        * (two * bq.clone()).inv();
                    candidates.push((
                        d,
                        &lift_matrix(p, d).scale(&aq) + &lift_matrix(v, d).scale(&bq),
                    ));
                }
            }
            if candidates.is_empty() {
                BlockSqrt::Unknown
            } else {
                BlockSqrt::Candidates(candidates)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::tests::sl2;
    use crate::scalars::{rat_int, Rat};
    use num_traits::Zero;

    #[test]
    fn centroid_of_sl2_is_scalar() {
        let cb = centroid_basis(&sl2());
        assert_eq!(cb.dim(), 1);
        assert!(cb.contains_identity());
        assert!(!cb.oversized);
        for m in &cb.elements {
            assert!(is_centrum(&sl2(), m));
        }
    }

    #[test]
    fn centroid_of_abelian_is_everything() {
        let ab = LieAlgebra::<Rat>::abelian(2);
        let cb = centroid_basis(&ab);
        assert_eq!(cb.dim(), 4);
        assert!(cb.oversized);
    }

    #[test]
    fn is_centrum_examples() {
        let l = sl2();
        assert!(is_centrum(&l, &Matrix::identity(3).scale(&rat_int(5))));
        // ad_h is not a centrum map: ad_h([x,y]) = 0 but [ad_h x, y] = 2h
        let ad_h = l.ad_basis(1);
        assert!(!is_centrum(&l, &ad_h));
    }

    #[test]
    fn direct_sum_centrum_three_blocks() {
        let l = sl2().direct_sum(&sl2()).direct_sum(&LieAlgebra::abelian(1));
        let n = 7;
        let span = |range: std::ops::Range<usize>| {
            let vs: Vec<Vec<Rat>> = range
                .map(|i| {
                    let mut v = vec![rat_int(0); n];
                    v[i] = rat_int(1);
                    v
                })
                .collect();
            Subspace::from_spanning(n, &vs)
        };
        let ideals = [span(0..3), span(3..6), span(6..7)];
        let weights = [rat_int(0), rat_int(1), rat_int(2)];
        let mu = direct_sum_centrum(&l, &ideals, &weights).unwrap();
        assert!(is_centrum(&l, &mu));
        // kernel is the first summand
        for i in 0..3 {
            assert!(mu.col(i).iter().all(|x| x.is_zero()));
        }
        assert_eq!(*mu.at(6, 6), rat_int(2));
        // non-spanning input is rejected
        assert!(direct_sum_centrum(&l, &ideals[..2], &weights[..2]).is_err());
    }

    #[test]
    fn direct_sum_centrum_whole_algebra() {
        let l = sl2();
        let full = Subspace::full(3);
        let mu = direct_sum_centrum(&l, &[full], &[rat_int(7)]).unwrap();
        assert_eq!(mu, Matrix::identity(3).scale(&rat_int(7)));
    }

    #[test]
    fn direct_sum_centrum_square_identity() {
        let l = sl2().direct_sum(&sl2());
        let span = |range: std::ops::Range<usize>| {
            let vs: Vec<Vec<Rat>> = range
                .map(|i| {
                    let mut v = vec![rat_int(0); 6];
                    v[i] = rat_int(1);
                    v
                })
                .collect();
            Subspace::from_spanning(6, &vs)
        };
        let mu =
            direct_sum_centrum(&l, &[span(0..3), span(3..6)], &[rat_int(1), rat_int(-1)]).unwrap();
        assert!((&mu * &mu).is_identity());
    }

    #[test]
    fn sqrt_scalar_cases() {
        let l = sl2();
        let id = Matrix::<Rat>::identity(3);
        match centroid_sqrt(&l, &id).unwrap() {
            SqrtResult::Found(m) => assert!(m.is_identity()),
            other => panic!("expected Found, got {other:?}"),
        }
        match centroid_sqrt(&l, &id.scale(&rat_int(-4))).unwrap() {
            SqrtResult::Extension { d, map } => {
                assert_eq!(d, -1);
                let expected = Matrix::identity(3)
                    .map(|s: &Rat| s.lift_to_quad(-1))
                    .scale(&Quad::new(Rat::zero(), rat_int(2), -1));
                assert_eq!(map, expected);
            }
            other => panic!("expected Extension, got {other:?}"),
        }
        // target outside the centroid span errors
        assert!(matches!(
            centroid_sqrt(&l, &l.ad_basis(1)),
            Err(Error::NotInCentroid)
        ));
    }

    #[test]
    fn sqrt_split_blocks() {
        let l = sl2().direct_sum(&sl2());
        // target = id on the first block, 4 id on the second
        let mut t = Matrix::<Rat>::identity(6);
        for i in 3..6 {
            t.set(i, i, rat_int(4));
        }
        match centroid_sqrt(&l, &t).unwrap() {
            SqrtResult::Found(m) => assert_eq!(&m * &m, t),
            other => panic!("expected Found, got {other:?}"),
        }
        // blocks demanding different extensions: 2 and 3
        let mut t2 = Matrix::<Rat>::identity(6).scale(&rat_int(2));
        for i in 3..6 {
            t2.set(i, i, rat_int(3));
        }
        assert!(matches!(
            centroid_sqrt(&l, &t2).unwrap(),
            SqrtResult::NoSolution
        ));
        // same extension on both blocks: 2 and 8 share d = 2
        let mut t3 = Matrix::<Rat>::identity(6).scale(&rat_int(2));
        for i in 3..6 {
            t3.set(i, i, rat_int(8));
        }
        match centroid_sqrt(&l, &t3).unwrap() {
            SqrtResult::Extension { d, map } => {
                assert_eq!(d, 2);
                assert_eq!(&map * &map, lift_matrix(&t3, 2));
            }
            other => panic!("expected Extension, got {other:?}"),
        }
    }

    #[test]
    fn sqrt_nilpotent_block_synthetic() {
        // dual numbers Q[eps]/(eps^2) as 2x2 matrices
        let id = Matrix::<Rat>::identity(2);
        let mut eps = Matrix::zeros(2, 2);
        eps.set(0, 1, rat_int(1));
        let basis = vec![id.clone(), eps.clone()];
        // 4 + 4 eps = (2 + eps)^2
        let t = &id.scale(&rat_int(4)) + &eps.scale(&rat_int(4));
        match commutative_sqrt(&basis, &t) {
            SqrtResult::Found(m) => assert_eq!(&m * &m, t),
            other => panic!("expected Found, got {other:?}"),
        }
        // eps itself has no square root over any field extension
        assert!(matches!(
            commutative_sqrt(&basis, &eps),
            SqrtResult::NoSolution
        ));
        // 2 + eps needs sqrt(2): extension witness
        let t2 = &id.scale(&rat_int(2)) + &eps;
        match commutative_sqrt(&basis, &t2) {
            SqrtResult::Extension { d, map } => {
                assert_eq!(d, 2);
                assert_eq!(&map * &map, lift_matrix(&t2, 2));
            }
            other => panic!("expected Extension, got {other:?}"),
        }
    }

    #[test]
    fn sqrt_field_block_synthetic() {
        // Q(i) as 2x2 matrices
        let id = Matrix::<Rat>::identity(2);
        let mut i_mat = Matrix::zeros(2, 2);
        i_mat.set(0, 1, rat_int(-1));
        i_mat.set(1, 0, rat_int(1));
        let basis = vec![id.clone(), i_mat.clone()];
        // sqrt(-4) = 2i in the field
        match commutative_sqrt(&basis, &id.scale(&rat_int(-4))) {
            SqrtResult::Found(m) => assert_eq!(m, i_mat.scale(&rat_int(2))),
            other => panic!("expected Found, got {other:?}"),
        }
        // sqrt(3 + 4i) = 2 + i
        let t = &id.scale(&rat_int(3)) + &i_mat.scale(&rat_int(4));
        match commutative_sqrt(&basis, &t) {
            SqrtResult::Found(m) => assert_eq!(&m * &m, t),
            other => panic!("expected Found, got {other:?}"),
        }
        // sqrt(i) lives in Q(sqrt(2)) (or Q(sqrt(-2))): extension
        match commutative_sqrt(&basis, &i_mat) {
            SqrtResult::Extension { d, map } => {
                assert!(d == 2 || d == -2);
                assert_eq!(&map * &map, lift_matrix(&i_mat, d));
            }
            other => panic!("expected Extension, got {other:?}"),
        }
        // sqrt(1 + i) needs a degree-4 field: undecided
        assert!(matches!(
            commutative_sqrt(&basis, &(&id + &i_mat)),
            SqrtResult::Undecided
        ));
    }

    #[test]
    fn is_centrum_phi_on_sl2c6() {
        let f = crate::fixtures::fixture("sl2c6").unwrap();
        assert!(is_centrum(&f.algebra, f.map("phi").unwrap()));
        assert!(is_centrum(&f.algebra, f.map("2phi").unwrap()));
        // psi is an automorphism but not a centrum map
        assert!(!is_centrum(&f.algebra, f.map("psi").unwrap()));
    }

    #[test]
    fn sqrt_on_sl2c6_centroid_field() {
        let f = crate::fixtures::fixture("sl2c6").unwrap();
        let two_phi = f.map("2phi").unwrap();
        // -4 id = (2 phi)^2 has an in-field root
        let target = Matrix::<Rat>::identity(6).scale(&rat_int(-4));
        match centroid_sqrt(&f.algebra, &target).unwrap() {
            SqrtResult::Found(mu) => {
                assert!(mu == *two_phi || mu == -two_phi);
                assert_eq!(&mu * &mu, target);
            }
            other => panic!("expected Found, got {other:?}"),
        }
        // phi itself needs one extension: sqrt(i)-like witness
        match centroid_sqrt(&f.algebra, f.map("phi").unwrap()).unwrap() {
            SqrtResult::Extension { d, map } => {
                assert!(d == 2 || d == -2);
                assert_eq!(&map * &map, lift_matrix(f.map("phi").unwrap(), d));
            }
            other => panic!("expected Extension, got {other:?}"),
        }
        // id + phi sits in a degree-4 extension: honest undecided
        let hard = &Matrix::identity(6) + f.map("phi").unwrap();
        assert!(matches!(
            centroid_sqrt(&f.algebra, &hard).unwrap(),
            SqrtResult::Undecided
        ));
    }

    #[test]
    fn sqrt_noncommutative_span_is_undecided() {
        // full 2x2 matrix algebra is not commutative
        let mut e01 = Matrix::<Rat>::zeros(2, 2);
        e01.set(0, 1, rat_int(1));
        let mut e10 = Matrix::<Rat>::zeros(2, 2);
        e10.set(1, 0, rat_int(1));
        let basis = vec![Matrix::identity(2), e01, e10];
        assert!(matches!(
            commutative_sqrt(&basis, &Matrix::identity(2)),
            SqrtResult::Undecided
        ));
    }
}
