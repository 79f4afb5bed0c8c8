//! Exact scalars: arbitrary-precision rationals and single quadratic
//! extensions Q(sqrt(d)).
//!
//! Everything in this crate computes exactly; there is no floating point.
//! `Rat` is the base field. [`Quad`] adjoins one square root of a square-free
//! integer `d`, which is all the classification pipeline ever needs. A `Quad`
//! value carries the discriminant of the extension it lives in; purely
//! rational values carry the neutral tag `d == 1` and adopt the other
//! operand's tag under arithmetic, so lifted data keeps track of its ambient
//! field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored reduced. The base field.
pub type Rat = BigRational;

/// Small rational constant `num/den`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Small integer constant as a rational.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Outcome of a square-root search that may adjoin one square root to Q.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarSqrt<S> {
    /// The root lies in the field itself.
    InField(S),
    /// The root lies in Q(sqrt(d)) for the recorded square-free `d`.
    Adjoined { d: i64, root: Quad },
    /// No root in the field, and no further extension is available.
    NoRoot,
}

/// Exact field scalar the library is generic over.
///
/// The two instances are [`Rat`] and [`Quad`]. Division by zero panics, as
/// does mixing two distinct genuine quadratic extensions; exact elimination
/// always guards pivots, so neither occurs on valid inputs.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Exact square root within the field, if one exists.
    fn try_sqrt(&self) -> Option<Self>;

    /// Square root allowing one quadratic extension of Q. Over a `Quad`
    /// field this never adjoins a second root and reports `NoRoot` instead.
    fn sqrt_or_extend(&self) -> ScalarSqrt<Self>;

    /// Embed into Q(sqrt(d)). Panics if the value already lives in a
    /// different genuine extension.
    fn lift_to_quad(&self, d: i64) -> Quad;
}

impl Scalar for Rat {
    fn from_int(n: i64) -> Self {
        rat_int(n)
    }

    fn inv(&self) -> Self {
        self.recip()
    }

    fn try_sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn sqrt_or_extend(&self) -> ScalarSqrt<Self> {
        if self.is_zero() {
            return ScalarSqrt::InField(Rat::zero());
        }
        if let Some(s) = rational_sqrt(self) {
            return ScalarSqrt::InField(s);
        }
        let (d, f) = squarefree_part(self).expect("nonzero rational");
        ScalarSqrt::Adjoined {
            d,
            root: Quad::new(Rat::zero(), f, d),
        }
    }

    fn lift_to_quad(&self, d: i64) -> Quad {
        Quad::embed(self.clone(), d)
    }
}

/// Square root of a nonnegative rational, when it is rational.
pub fn rational_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let sn = q.numer().sqrt();
    if &(&sn * &sn) != q.numer() {
        return None;
    }
    let sd = q.denom().sqrt();
    if &(&sd * &sd) != q.denom() {
        return None;
    }
    Some(Rat::new(sn, sd))
}

/// Write a nonzero rational as `f^2 * d` with `d` a square-free integer.
///
/// `d` is the canonical discriminant witness for adjoining `sqrt(q)`; `f` is
/// positive. Errors on zero.
pub fn squarefree_part(q: &Rat) -> Result<(i64, Rat)> {
    if q.is_zero() {
        return Err(Error::InvalidInput("squarefree_part of zero".into()));
    }
    // q = p/s reduced, so q = (1/s)^2 * (|p| s) * sign.
    let m = q.numer().abs() * q.denom();
    let (square, free) = squarefree_decompose(&m);
    let d_mag = free
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("square-free discriminant exceeds i64".into()))?;
    let d = if q.is_negative() { -d_mag } else { d_mag };
    Ok((d, Rat::new(square, q.denom().clone())))
}

/// Factor a positive integer as `square^2 * free` with `free` square-free.
fn squarefree_decompose(m: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(m.is_positive());
    if let Some(small) = m.to_u128() {
        let (square, free) = squarefree_decompose_u128(small);
        return (BigInt::from(square), BigInt::from(free));
    }
    let mut rem = m.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rem {
        if rem.is_multiple_of(&p) {
            let mut exp = 0u32;
            while rem.is_multiple_of(&p) {
                rem /= &p;
                exp += 1;
            }
            for _ in 0..exp / 2 {
                square *= &p;
            }
            if exp % 2 == 1 {
                free *= &p;
            }
        }
        p += 1;
    }
    // whatever is left has no divisor up to its square root, hence is prime
    if rem > BigInt::one() {
        free *= rem;
    }
    (square, free)
}

fn squarefree_decompose_u128(m: u128) -> (u128, u128) {
    let mut rem = m;
    let mut square = 1u128;
    let mut free = 1u128;
    let mut trial = |p: u128, rem: &mut u128| {
        if rem.is_multiple_of(p) {
            let mut exp = 0u32;
            while rem.is_multiple_of(p) {
                *rem /= p;
                exp += 1;
            }
            for _ in 0..exp / 2 {
                square *= p;
            }
            if exp % 2 == 1 {
                free *= p;
            }
        }
    };
    trial(2, &mut rem);
    let mut p = 3u128;
    while p * p <= rem {
        trial(p, &mut rem);
        p += 2;
    }
    if rem > 1 {
        free *= rem;
    }
    (square, free)
}

/// The square-free discriminant naming the same field as Q(sqrt(d)):
/// `Q(sqrt(8)) = Q(sqrt(2))`, `Q(sqrt(4)) = Q(sqrt(0)) = Q` (tag 1).
pub fn squarefree_tag(d: i64) -> i64 {
    if d == 0 || d == 1 {
        return 1;
    }
    squarefree_part(&rat_int(d)).expect("nonzero d").0
}

/// Element `a + b*sqrt(d)` of a quadratic extension Q(sqrt(d)).
///
/// `d` is square-free; `d == 1` tags a purely rational value. Equality
/// ignores the tag on rational values, so `2 + 0*sqrt(-1)` equals `2`.
#[derive(Clone, Eq, Debug)]
pub struct Quad {
    a: Rat,
    b: Rat,
    d: i64,
}

impl Quad {
    /// Normalizing constructor: reduces `d` to its square-free part and
    /// folds degenerate radicands into the rational part.
    pub fn new(a: Rat, b: Rat, d: i64) -> Self {
        if d == 0 {
            return Quad {
                a,
                b: Rat::zero(),
                d: 1,
            };
        }
        if d == 1 {
            return Quad {
                a: a + b,
                b: Rat::zero(),
                d: 1,
            };
        }
        let (df, f) = squarefree_part(&rat_int(d)).expect("nonzero d");
        if df == 1 {
            // d was a perfect square
            return Quad {
                a: a + b * f,
                b: Rat::zero(),
                d: 1,
            };
        }
        Quad { a, b: b * f, d: df }
    }

    /// Embed a rational into Q(sqrt(d)), keeping the ambient tag even when
    /// the value itself is rational.
    pub fn embed(a: Rat, d: i64) -> Self {
        Quad {
            a,
            b: Rat::zero(),
            d: squarefree_tag(d),
        }
    }

    pub fn from_rat(a: Rat) -> Self {
        Quad {
            a,
            b: Rat::zero(),
            d: 1,
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_part(&self) -> &Rat {
        &self.b
    }

    pub fn discriminant(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, when the element is rational.
    pub fn as_rat(&self) -> Option<Rat> {
        self.b.is_zero().then(|| self.a.clone())
    }

    pub fn conjugate(&self) -> Self {
        Quad {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Field norm `a^2 - d b^2`; zero only for the zero element.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - rat_int(self.d) * &self.b * &self.b
    }

    fn join_tag(&self, other: &Quad) -> i64 {
        if self.d == other.d {
            self.d
        } else if self.d == 1 {
            other.d
        } else if other.d == 1 {
            self.d
        } else if self.b.is_zero() {
            other.d
        } else if other.b.is_zero() {
            self.d
        } else {
            panic!(
                "cannot mix elements of Q(sqrt({})) and Q(sqrt({}))",
                self.d, other.d
            );
        }
    }

    /// Square root within the same field Q(sqrt(d)), if one exists.
    ///
    /// Solves `(x + y sqrt(d))^2 = a + b sqrt(d)` exactly: the `y = 0` and
    /// `x = 0` branches, then the generic branch which requires the norm
    /// `a^2 - d b^2` to be a rational square.
    pub fn try_sqrt(&self) -> Option<Quad> {
        let d = self.d;
        let drat = rat_int(d);
        if self.b.is_zero() {
            if let Some(x) = rational_sqrt(&self.a) {
                return Some(Quad::embed(x, d));
            }
            if d != 1 {
                // x = 0 branch: y^2 d = a
                if let Some(y) = rational_sqrt(&(&self.a / &drat)) {
                    return Some(Quad::new(Rat::zero(), y, d));
                }
            }
            return None;
        }
        // b != 0: x = b/(2y), y^2 = (a ± sqrt(a^2 - d b^2)) / (2d)
        let n = rational_sqrt(&self.norm())?;
        for sign in [Rat::one(), -Rat::one()] {
            let y2 = (&self.a + sign * &n) / (rat_int(2) * &drat);
            if let Some(y) = rational_sqrt(&y2) {
                if y.is_zero() {
                    continue;
                }
                let x = &self.b / (rat_int(2) * &y);
                return Some(Quad::new(x, y, d));
            }
        }
        None
    }
}

impl PartialEq for Quad {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, rhs: Quad) -> Quad {
        let d = self.join_tag(&rhs);
        Quad {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            d,
        }
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, rhs: Quad) -> Quad {
        let d = self.join_tag(&rhs);
        Quad {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            d,
        }
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, rhs: Quad) -> Quad {
        let d = self.join_tag(&rhs);
        let a = &self.a * &rhs.a + rat_int(d) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Quad { a, b, d }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for Quad {
    type Output = Quad;
    fn div(self, rhs: Quad) -> Quad {
        self * rhs.inv()
    }
}

impl Zero for Quad {
    fn zero() -> Self {
        Quad::from_rat(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Quad {
    fn one() -> Self {
        Quad::from_rat(Rat::one())
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let radical = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if (-self.b.clone()).is_one() {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        if self.a.is_zero() {
            write!(f, "{radical}")
        } else if let Some(tail) = radical.strip_prefix('-') {
            write!(f, "{} - {}", self.a, tail)
        } else {
            write!(f, "{} + {}", self.a, radical)
        }
    }
}

impl Scalar for Quad {
    fn from_int(n: i64) -> Self {
        Quad::from_rat(rat_int(n))
    }

    fn inv(&self) -> Self {
        quad_inverse(self).expect("inverse of zero")
    }

    fn try_sqrt(&self) -> Option<Self> {
        Quad::try_sqrt(self)
    }

    fn sqrt_or_extend(&self) -> ScalarSqrt<Self> {
        // A single quadratic extension of Q is the whole supported tower, so
        // no second root is ever adjoined.
        match Quad::try_sqrt(self) {
            Some(r) => ScalarSqrt::InField(r),
            None => ScalarSqrt::NoRoot,
        }
    }

    fn lift_to_quad(&self, d: i64) -> Quad {
        if self.d == d {
            return self.clone();
        }
        if self.b.is_zero() {
            return Quad::embed(self.a.clone(), d);
        }
        panic!(
            "cannot lift an element of Q(sqrt({})) into Q(sqrt({}))",
            self.d, d
        );
    }
}

/// Inverse of a nonzero quadratic scalar, via the conjugate over the norm.
pub fn quad_inverse(z: &Quad) -> Result<Quad> {
    if z.is_zero() {
        return Err(Error::ZeroDivision);
    }
    let n = z.norm();
    // with d square-free and z nonzero the norm cannot vanish
    assert!(
        !n.is_zero(),
        "norm of a nonzero quadratic scalar is nonzero"
    );
    let c = z.conjugate();
    Ok(Quad {
        a: &c.a / &n,
        b: &c.b / &n,
        d: c.d,
    })
}
