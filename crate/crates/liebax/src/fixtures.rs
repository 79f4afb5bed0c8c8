//! Built-in fixtures over Q: sl2 with its three standard tensors, and the
//! six-dimensional simple-not-absolutely-simple algebra with its operator
//! data. Every fixture passes the Jacobi, invariance, and nondegeneracy
//! checks; tests pin the exact constants.

use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalars::{rat, rat_int, Rat};

/// A named algebra with its quadratic form and associated tensors and maps.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub algebra: LieAlgebra<Rat>,
    pub form: BilinearForm<Rat>,
    pub tensors: Vec<(String, Matrix<Rat>)>,
    pub maps: Vec<(String, Matrix<Rat>)>,
}

impl Fixture {
    pub fn tensor(&self, name: &str) -> Option<&Matrix<Rat>> {
        self.tensors.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn map(&self, name: &str) -> Option<&Matrix<Rat>> {
        self.maps.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

pub const FIXTURE_NAMES: &[&str] = &["sl2q", "sl2c6"];

/// Look up a built-in fixture by name.
pub fn fixture(name: &str) -> Result<Fixture> {
    match name {
        "sl2q" => Ok(sl2q()),
        "sl2c6" => Ok(sl2c6()),
        _ => Err(Error::InvalidInput(format!(
            "unknown fixture {name:?}; available: {}",
            FIXTURE_NAMES.join(", ")
        ))),
    }
}

fn wedge(n: usize, i: usize, j: usize) -> Matrix<Rat> {
    let mut r = Matrix::zeros(n, n);
    r.set(i, j, rat_int(1));
    r.set(j, i, rat_int(-1));
    r
}

/// sl2 over Q, basis (x, h, y), with the form w(x,y) = 1, w(h,h) = 2 and
/// the three tensors r1 = h∧x, r2 = x∧y, r3 = h∧(x+y).
pub fn sl2q() -> Fixture {
    let algebra = LieAlgebra::from_brackets(
        3,
        Some(vec!["x".into(), "h".into(), "y".into()]),
        &[
            // [x, h] = -2x, [x, y] = h, [h, y] = -2y
            (0, 1, vec![rat_int(-2), rat_int(0), rat_int(0)]),
            (0, 2, vec![rat_int(0), rat_int(1), rat_int(0)]),
            (1, 2, vec![rat_int(0), rat_int(0), rat_int(-2)]),
        ],
    )
    .expect("sl2 constants");
    let mut gram = Matrix::zeros(3, 3);
    gram.set(0, 2, rat_int(1));
    gram.set(2, 0, rat_int(1));
    gram.set(1, 1, rat_int(2));
    let form = BilinearForm::new(gram).expect("square gram");
    let r1 = wedge(3, 1, 0);
    let r2 = wedge(3, 0, 2);
    let r3 = &wedge(3, 1, 0) + &wedge(3, 1, 2);
    let maps = vec![
        (
            "R1".to_string(),
            crate::forms::map_from_tensor(&r1, &form).expect("nondegenerate"),
        ),
        (
            "R2".to_string(),
            crate::forms::map_from_tensor(&r2, &form).expect("nondegenerate"),
        ),
        (
            "R3".to_string(),
            crate::forms::map_from_tensor(&r3, &form).expect("nondegenerate"),
        ),
        ("id".to_string(), Matrix::identity(3)),
    ];
    Fixture {
        name: "sl2q".into(),
        algebra,
        form,
        tensors: vec![("r1".into(), r1), ("r2".into(), r2), ("r3".into(), r3)],
        maps,
    }
}

/// The six-dimensional algebra sl2 ⊕ i*sl2 over Q with basis
/// (x, h, y, ix, ih, iy), brackets extended by [ia, b] = i[a, b] and
/// [ia, ib] = -[a, b], with the split form
/// w(x,y) = 1, w(h,h) = 2, w(ix,iy) = -1, w(ih,ih) = -2.
///
/// Carries the operator R with R(x) = R(y) = -h, R(h) = 2(x + y) and its
/// imaginary copies, the centrum map phi (multiplication by i), the
/// conjugation automorphism psi, the Rota-Baxter operator
/// B = (R - 2 phi)/2 of weight 2 phi, and the tensors r (of R) and
/// rB (of B).
pub fn sl2c6() -> Fixture {
    // base sl2 brackets as (i, j) -> image over indices 0..3
    let base: &[(usize, usize, [i64; 3])] =
        &[(0, 1, [-2, 0, 0]), (0, 2, [0, 1, 0]), (1, 2, [0, 0, -2])];
    let mut entries: Vec<(usize, usize, Vec<Rat>)> = Vec::new();
    let mut push = |i: usize, j: usize, v: Vec<Rat>| {
        if i < j {
            entries.push((i, j, v));
        } else {
            entries.push((j, i, v.into_iter().map(|c| -c).collect()));
        }
    };
    for &(i, j, img) in base {
        let real: Vec<Rat> = {
            let mut v = vec![rat_int(0); 6];
            for (k, &c) in img.iter().enumerate() {
                v[k] = rat_int(c);
            }
            v
        };
        let imag: Vec<Rat> = {
            let mut v = vec![rat_int(0); 6];
            for (k, &c) in img.iter().enumerate() {
                v[k + 3] = rat_int(c);
            }
            v
        };
        let neg_real: Vec<Rat> = real.iter().map(|c| -c.clone()).collect();
        push(i, j, real); // [a, b]
        push(i + 3, j, imag.clone()); // [ia, b] = i[a, b]
        push(i, j + 3, imag); // [a, ib] = i[a, b]
        push(i + 3, j + 3, neg_real); // [ia, ib] = -[a, b]
    }
    let algebra = LieAlgebra::from_brackets(
        6,
        Some(vec![
            "x".into(),
            "h".into(),
            "y".into(),
            "ix".into(),
            "ih".into(),
            "iy".into(),
        ]),
        &entries,
    )
    .expect("sl2c6 constants");

    let mut gram = Matrix::zeros(6, 6);
    gram.set(0, 2, rat_int(1));
    gram.set(2, 0, rat_int(1));
    gram.set(1, 1, rat_int(2));
    gram.set(3, 5, rat_int(-1));
    gram.set(5, 3, rat_int(-1));
    gram.set(4, 4, rat_int(-2));
    let form = BilinearForm::new(gram).expect("square gram");

    // r = h ∧ (x + y) - (i ⊗ i)(h ∧ (x + y))
    let r = {
        let real = &wedge(6, 1, 0) + &wedge(6, 1, 2);
        let imag = &wedge(6, 4, 3) + &wedge(6, 4, 5);
        &real - &imag
    };
    let op_r = crate::forms::map_from_tensor(&r, &form).expect("nondegenerate");

    // phi: multiplication by i
    let mut phi = Matrix::zeros(6, 6);
    for a in 0..3 {
        phi.set(a + 3, a, rat_int(1));
        phi.set(a, a + 3, rat_int(-1));
    }
    let two_phi = phi.scale(&rat_int(2));
    // psi: conjugation a + ib -> a - ib
    let mut psi = Matrix::identity(6);
    for a in 3..6 {
        psi.set(a, a, rat_int(-1));
    }
    let b = (&op_r - &two_phi).scale(&rat(1, 2));
    let r_b = crate::forms::tensor_from_map(&b, &form).expect("nondegenerate");

    Fixture {
        name: "sl2c6".into(),
        algebra,
        form,
        tensors: vec![("r".into(), r), ("rB".into(), r_b)],
        maps: vec![
            ("R".into(), op_r),
            ("B".into(), b),
            ("phi".into(), phi),
            ("2phi".into(), two_phi),
            ("psi".into(), psi),
            ("id".into(), Matrix::identity(6)),
        ],
    }
}
