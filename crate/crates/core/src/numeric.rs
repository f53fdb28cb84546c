//! Exact rational scalars, 3-vectors and the small determinants everything
//! else is built from.
//!
//! `Rat` wraps `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator after each operation, so structural equality
//! coincides with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Index, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`, reduced. Panics on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(format!("{numer}/{denom}")));
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn signum(&self) -> Ordering {
        self.0.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn recip(&self) -> Option<Rat> {
        (!self.is_zero()).then(|| Rat(self.0.recip()))
    }

    pub fn pow(&self, exp: i32) -> Rat {
        Rat(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with 12 significant digits. Display-only.
    pub fn approx_string(&self) -> String {
        format_sig(self.to_f64(), 12)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

pub(crate) fn format_sig(v: f64, digits: i32) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        return format!("{:.*e}", (digits - 1) as usize, v);
    }
    let decimals = (digits - 1 - exp).max(0) as usize;
    let s = format!("{:.*}", decimals, v);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigRational> for Rat {
    fn from(q: BigRational) -> Self {
        Rat(q)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Literal syntax: optional sign, integer, optional `/` integer.
impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let unsigned = num.strip_prefix(['+', '-']).unwrap_or(num);
        if !digits(unsigned) {
            return Err(bad());
        }
        let numer: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
        let denom: BigInt = match den {
            None => BigInt::one(),
            Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
        };
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(s.to_string()));
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($trait::$method(&self.0, rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// A rational point or direction in R^3.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vec3 {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Vec3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        Vec3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Vec3::new(x.into(), y.into(), z.into())
    }

    pub fn zero() -> Self {
        Vec3::from_ints(0, 0, 0)
    }

    pub fn e1() -> Self {
        Vec3::from_ints(1, 0, 0)
    }

    pub fn e2() -> Self {
        Vec3::from_ints(0, 1, 0)
    }

    pub fn e3() -> Self {
        Vec3::from_ints(0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, k: &Rat) -> Vec3 {
        Vec3::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn dot(&self, o: &Vec3) -> Rat {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3::new(
            det2(&self.y, &self.z, &o.y, &o.z),
            det2(&self.z, &self.x, &o.z, &o.x),
            det2(&self.x, &self.y, &o.x, &o.y),
        )
    }

    pub fn coords(&self) -> [&Rat; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Add<&Vec3> for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl Sub<&Vec3> for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-&self.x, -&self.y, -&self.z)
    }
}

/// `a·d − b·c`, the determinant of `[[a, b], [c, d]]`.
pub fn det2(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Rat {
    a * d - b * c
}

/// Determinant of the 3×3 matrix with columns `a`, `b`, `c`.
pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Rat {
    // cofactor expansion along the first row (x-coordinates)
    &a.x * det2(&b.y, &c.y, &b.z, &c.z) - &b.x * det2(&a.y, &c.y, &a.z, &c.z)
        + &c.x * det2(&a.y, &b.y, &a.z, &b.z)
}

/// A 3×m matrix stored column-wise. Column order is significant.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Mat3xM {
    columns: Vec<Vec3>,
}

impl Mat3xM {
    pub fn new(columns: Vec<Vec3>) -> Self {
        Mat3xM { columns }
    }

    pub fn columns(&self) -> &[Vec3] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Vec3> {
        self.columns
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// Row `r` (0 = x, 1 = y, 2 = z) as a vector of length m.
    pub fn row(&self, r: usize) -> Vec<Rat> {
        self.columns.iter().map(|c| c.coords()[r].clone()).collect()
    }

    /// Builds a matrix from its three rows, which must have equal length.
    pub fn from_rows(x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<Self> {
        for r in [y, z] {
            if r.len() != x.len() {
                return Err(Error::LengthMismatch { expected: x.len(), actual: r.len() });
            }
        }
        let columns = (0..x.len())
            .map(|i| Vec3::new(x[i].clone(), y[i].clone(), z[i].clone()))
            .collect();
        Ok(Mat3xM { columns })
    }
}

impl Index<usize> for Mat3xM {
    type Output = Vec3;
    fn index(&self, i: usize) -> &Vec3 {
        &self.columns[i]
    }
}

/// Determinant of the columns `idx` (0-based, strictly increasing).
pub fn minor3(m: &Mat3xM, idx: [usize; 3]) -> Result<Rat> {
    for &i in &idx {
        if i >= m.ncols() {
            return Err(Error::IndexOutOfRange { index: i, columns: m.ncols() });
        }
    }
    if !(idx[0] < idx[1] && idx[1] < idx[2]) {
        return Err(Error::NonDistinctIndices(idx));
    }
    Ok(det3(&m[idx[0]], &m[idx[1]], &m[idx[2]]))
}

/// A 3×3 rational matrix, row-major. Used for linear maps on zonotopes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat3(pub [[Rat; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Mat3::diag(Rat::one(), Rat::one(), Rat::one())
    }

    pub fn diag(a: Rat, b: Rat, c: Rat) -> Self {
        let z = Rat::zero;
        Mat3([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let r = |i: usize| &self.0[i][0] * &v.x + &self.0[i][1] * &v.y + &self.0[i][2] * &v.z;
        Vec3::new(r(0), r(1), r(2))
    }

    pub fn det(&self) -> Rat {
        let col = |j: usize| Vec3::new(self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone());
        det3(&col(0), &col(1), &col(2))
    }
}
