//! Exact arithmetic in the cyclotomic field Q(zeta_120).
//!
//! The field is large enough to hold every scalar the rest of the crate
//! needs: i = zeta^30, sqrt(2) = zeta^15 + zeta^105, sqrt(3) = zeta^10 +
//! zeta^110, sqrt(5) = 1 + 2(zeta^24 + zeta^96), and all roots of unity of
//! order dividing 120. Elements are stored in the power basis
//! zeta^0..zeta^31 reduced modulo the 120th cyclotomic polynomial
//!
//!   Phi_120(x) = x^32 + x^28 - x^20 - x^16 - x^12 + x^4 + 1,
//!
//! so equality is coordinate-wise rational equality and there are no zero
//! divisors. Rational coordinates are arbitrary-precision and always in
//! lowest terms; no floating point enters any decision path.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Order of the root of unity generating the field.
pub const ZETA_ORDER: u32 = 120;
/// Degree of Phi_120, i.e. the dimension of Q(zeta_120) over Q.
pub const FIELD_DIM: usize = 32;

/// x^32 expressed in lower powers: x^32 = -x^28 + x^20 + x^16 + x^12 - x^4 - 1.
const FOLD: [(usize, i64); 6] = [(28, -1), (20, 1), (16, 1), (12, 1), (4, -1), (0, -1)];

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An element of Q(zeta_120) in reduced canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    /// Coordinates in the power basis zeta^0..zeta^31, always length 32.
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum {
            coeffs: vec![BigRational::zero(); FIELD_DIM],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = q;
        c
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds an element directly from 32 power-basis coordinates.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Result<Self, Error> {
        if coeffs.len() != FIELD_DIM {
            return Err(Error::Certification(format!(
                "cyclotomic element needs {} coordinates, got {}",
                FIELD_DIM,
                coeffs.len()
            )));
        }
        Ok(CycloNum { coeffs })
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// zeta^k for any integer k (exponent taken mod 120).
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(ZETA_ORDER as i64) as usize;
        zeta_table()[k].clone()
    }

    /// The imaginary unit, zeta^30.
    pub fn i() -> Self {
        Self::zeta_pow(30)
    }

    pub fn sqrt2() -> Self {
        Self::zeta_pow(15) + Self::zeta_pow(105)
    }

    pub fn sqrt3() -> Self {
        Self::zeta_pow(10) + Self::zeta_pow(110)
    }

    pub fn sqrt5() -> Self {
        Self::one() + (Self::zeta_pow(24) + Self::zeta_pow(96)).scale_int(2)
    }

    /// zeta_n^k, an n-th root of unity; n must divide 120.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self, Error> {
        if n == 0 || ZETA_ORDER % n != 0 {
            return Err(Error::InvalidRootOrder(n));
        }
        let step = (ZETA_ORDER / n) as i64;
        Ok(Self::zeta_pow(step * k))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in the rational subfield.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, when `is_rational` holds.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&rat(n))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycloNum {
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Field multiplication: polynomial product reduced mod Phi_120.
    fn mul_ref(&self, other: &Self) -> Self {
        let mut acc = vec![BigRational::zero(); 2 * FIELD_DIM - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += a * b;
            }
        }
        reduce_mod_phi(acc)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm with
    /// Phi_120. Errors on zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Rational and pure-power shortcuts cover almost every call site.
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        let (g, u) = poly_half_ext_gcd(self.coeffs.clone(), phi_coeffs());
        // g is a nonzero constant since Phi_120 is irreducible.
        debug_assert!(g.len() == 1 && !g[0].is_zero());
        let scale = g[0].recip();
        let mut coeffs = vec![BigRational::zero(); FIELD_DIM];
        for (i, c) in u.into_iter().enumerate() {
            coeffs[i] = c * &scale;
        }
        Ok(CycloNum { coeffs })
    }

    /// The Galois automorphism zeta -> zeta^{-1} (complex conjugation in the
    /// standard embedding).
    pub fn conj(&self) -> Self {
        let table = zeta_table();
        let mut out = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &table[(ZETA_ORDER as usize - i) % ZETA_ORDER as usize];
            for (k, pk) in p.coeffs.iter().enumerate() {
                if !pk.is_zero() {
                    out.coeffs[k] += c * pk;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order when the element is a root of unity, else None.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let table = zeta_table();
        for (e, z) in table.iter().enumerate() {
            if self == z {
                let e = e as u32;
                return Some(ZETA_ORDER / gcd(ZETA_ORDER, e));
            }
        }
        None
    }

    /// Numerical embedding zeta -> exp(2 pi i / 120), for reports only;
    /// never used in decisions. Relative accuracy is better than 1e-12 for
    /// the coefficient sizes that occur here.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / (ZETA_ORDER as f64);
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Reduces a polynomial in zeta (low-to-high coefficients, any length not
/// exceeding 2*FIELD_DIM-1) modulo Phi_120.
fn reduce_mod_phi(mut acc: Vec<BigRational>) -> CycloNum {
    for d in (FIELD_DIM..acc.len()).rev() {
        if acc[d].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut acc[d], BigRational::zero());
        for &(off, sign) in FOLD.iter() {
            let term = &c * rat(sign);
            acc[d - FIELD_DIM + off] += term;
        }
    }
    acc.truncate(FIELD_DIM);
    acc.resize(FIELD_DIM, BigRational::zero());
    CycloNum { coeffs: acc }
}

fn phi_coeffs() -> Vec<BigRational> {
    let mut phi = vec![BigRational::zero(); FIELD_DIM + 1];
    phi[32] = rat(1);
    phi[28] = rat(1);
    phi[20] = rat(-1);
    phi[16] = rat(-1);
    phi[12] = rat(-1);
    phi[4] = rat(1);
    phi[0] = rat(1);
    phi
}

fn zeta_table() -> &'static Vec<CycloNum> {
    static TABLE: OnceLock<Vec<CycloNum>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Vec::with_capacity(ZETA_ORDER as usize);
        let mut cur = CycloNum::one();
        for _ in 0..ZETA_ORDER {
            table.push(cur.clone());
            // multiply by zeta: shift up one degree, then fold
            let mut next = vec![BigRational::zero(); FIELD_DIM + 1];
            for (i, c) in cur.coeffs.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            cur = reduce_mod_phi(next);
        }
        table
    })
}

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn poly_is_zero(p: &[BigRational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Remainder and quotient of a by b in Q[x].
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    let mut bt = b.to_vec();
    poly_trim(&mut bt);
    let db = bt.len() - 1;
    let lead = bt[db].clone();
    let mut quo = vec![BigRational::zero(); rem.len().saturating_sub(db).max(1)];
    while !poly_is_zero(&rem) && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let f = &rem[dr] / &lead;
        quo[dr - db] = f.clone();
        for i in 0..=db {
            let t = &bt[i] * &f;
            rem[dr - db + i] -= t;
        }
        poly_trim(&mut rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    (quo, rem)
}

/// Returns (g, u) with u*a = g (mod m) and g = gcd(a, m), both in Q[x].
fn poly_half_ext_gcd(
    a: Vec<BigRational>,
    m: Vec<BigRational>,
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = m;
    let mut r1 = a;
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut u0: Vec<BigRational> = vec![BigRational::zero()];
    let mut u1: Vec<BigRational> = vec![BigRational::one()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let qu = poly_mul(&q, &u1);
        let nu = poly_sub(&u0, &qu);
        r0 = std::mem::replace(&mut r1, r);
        poly_trim(&mut r1);
        u0 = std::mem::replace(&mut u1, nu);
    }
    (r0, u0)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "z^{}", i)?;
            } else {
                write!(f, "{}*z^{}", a, i)?;
            }
        }
        Ok(())
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, other: &CycloNum) -> CycloNum {
        let coeffs = self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| a + b)
            .collect();
        CycloNum { coeffs }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, other: &CycloNum) -> CycloNum {
        let coeffs = self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| a - b)
            .collect();
        CycloNum { coeffs }
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, other: &CycloNum) -> CycloNum {
        self.mul_ref(other)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycloNum {
            type Output = CycloNum;
            fn $method(self, other: CycloNum) -> CycloNum {
                (&self).$method(&other)
            }
        }
        impl $trait<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, other: &CycloNum) -> CycloNum {
                (&self).$method(other)
            }
        }
        impl $trait<CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, other: CycloNum) -> CycloNum {
                self.$method(&other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, other: &CycloNum) {
        for (a, b) in self.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, other: &CycloNum) {
        for (a, b) in self.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a -= b;
        }
    }
}

impl MulAssign<&CycloNum> for CycloNum {
    fn mul_assign(&mut self, other: &CycloNum) {
        *self = self.mul_ref(other);
    }
}

/// Exact n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Exact rational n!/(m!) for n >= m.
pub fn falling_factorial_ratio(n: u32, m: u32) -> BigRational {
    BigRational::from_integer(factorial(n)) / BigRational::from_integer(factorial(m))
}

/// A dense matrix over Q(zeta_120), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<CycloNum>,
}

impl CycloMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        CycloMatrix {
            rows,
            cols,
            entries: vec![CycloNum::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<CycloNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CycloMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<CycloNum>]) -> Self {
        let c = cols.len();
        let r = cols.first().map(|col| col.len()).unwrap_or(0);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = CycloMatrix::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloNum {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycloNum) {
        self.entries[r * self.cols + c] = v;
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row. Pivot choice is the first nonzero entry in column order;
    /// exactness makes magnitude irrelevant.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    let a = self.get(row, c).clone();
                    let b = self.get(p, c).clone();
                    self.set(row, c, b);
                    self.set(p, c, a);
                }
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &(self.get(row, c) * &f);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the right nullspace; empty when the kernel is trivial.
    pub fn nullspace(&self) -> Vec<Vec<CycloNum>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![CycloNum::zero(); self.cols];
            vec[free] = CycloNum::one();
            for (r, &pc) in pivots.iter().enumerate() {
                vec[pc] = -m.get(r, free);
            }
            basis.push(vec);
        }
        basis
    }

    /// Solves self * x = b exactly; None when inconsistent.
    pub fn solve(&self, b: &[CycloNum]) -> Option<Vec<CycloNum>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = CycloMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.last().is_some_and(|&c| c == self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![CycloNum::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn mul_vec(&self, v: &[CycloNum]) -> Vec<CycloNum> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = CycloNum::zero();
                for c in 0..self.cols {
                    if !self.get(r, c).is_zero() && !v[c].is_zero() {
                        acc += &(self.get(r, c) * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent reduction oracle: plain polynomial long division of x^k
    /// by Phi_120, no power table involved.
    fn zeta_pow_by_division(k: usize) -> Vec<BigRational> {
        let mut x_k = vec![BigRational::zero(); k + 1];
        x_k[k] = BigRational::one();
        let (_, mut rem) = poly_divmod(&x_k, &phi_coeffs());
        rem.resize(FIELD_DIM, BigRational::zero());
        rem
    }

    #[test]
    fn zeta_table_matches_long_division() {
        for k in [0usize, 1, 15, 31, 32, 60, 105, 119] {
            let expected = zeta_pow_by_division(k);
            assert_eq!(CycloNum::zeta_pow(k as i64).coeffs(), &expected[..], "k={k}");
        }
    }

    #[test]
    fn zeta_has_order_120() {
        assert!(CycloNum::zeta_pow(60).is_one() == false);
        assert_eq!(CycloNum::zeta_pow(60), -CycloNum::one());
        assert!(CycloNum::zeta_pow(1).pow(120).is_one());
        assert!(!CycloNum::zeta_pow(1).pow(60).is_one());
    }

    #[test]
    fn add_identities() {
        let x = CycloNum::zeta_pow(7) + CycloNum::from_ratio(3, 5);
        assert_eq!(&CycloNum::zero() + &x, x);
        assert!((CycloNum::i() + (-CycloNum::i())).is_zero());
        // sqrt2 + sqrt2 = 2 sqrt2 with the zeta^105 branch reduced mod Phi
        let two_sqrt2 = CycloNum::sqrt2() + CycloNum::sqrt2();
        let mut expected = CycloNum::zero();
        let z105 = zeta_pow_by_division(105);
        for (i, c) in z105.iter().enumerate() {
            expected.coeffs[i] = c * rat(2);
        }
        expected.coeffs[15] += rat(2);
        assert_eq!(two_sqrt2, expected);
    }

    #[test]
    fn mul_certifies_surd_constants() {
        assert_eq!(CycloNum::i() * CycloNum::i(), CycloNum::from_integer(-1));
        assert_eq!(
            CycloNum::sqrt2() * CycloNum::sqrt2(),
            CycloNum::from_integer(2)
        );
        assert_eq!(
            CycloNum::sqrt3() * CycloNum::sqrt3(),
            CycloNum::from_integer(3)
        );
        assert_eq!(
            CycloNum::sqrt5() * CycloNum::sqrt5(),
            CycloNum::from_integer(5)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(CycloNum::one().inv().unwrap(), CycloNum::one());
        assert_eq!(
            CycloNum::zeta_pow(1).inv().unwrap(),
            CycloNum::zeta_pow(119)
        );
        assert_eq!(
            CycloNum::from_integer(2).inv().unwrap(),
            CycloNum::from_ratio(1, 2)
        );
        assert!(CycloNum::zero().inv().is_err());
        // a nontrivial element exercises the extended gcd path
        let a = CycloNum::sqrt2() + CycloNum::i() + CycloNum::from_integer(3);
        let b = a.inv().unwrap();
        assert!((a * b).is_one());
    }

    #[test]
    fn root_of_unity_orders() {
        for n in [1u32, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120] {
            let z = CycloNum::root_of_unity(n, 1).unwrap();
            assert_eq!(z.root_of_unity_order(), Some(n), "order of zeta_{n}");
            assert!(z.pow(n as u64).is_one());
        }
        assert!(CycloNum::root_of_unity(7, 1).is_err());
        assert_eq!(CycloNum::root_of_unity(4, 1).unwrap(), CycloNum::i());
        // zeta_8 + zeta_8^{-1} = sqrt2
        let s = CycloNum::root_of_unity(8, 1).unwrap() + CycloNum::root_of_unity(8, -1).unwrap();
        assert_eq!(s, CycloNum::sqrt2());
    }

    #[test]
    fn conjugation() {
        assert_eq!(CycloNum::i().conj(), -CycloNum::i());
        let q = CycloNum::from_ratio(-7, 3);
        assert_eq!(q.conj(), q);
        assert_eq!(CycloNum::sqrt2().conj(), CycloNum::sqrt2());
        let a = CycloNum::zeta_pow(13) + CycloNum::from_ratio(2, 7);
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn approx_embedding() {
        let (re, im) = CycloNum::one().approx();
        assert!((re - 1.0).abs() < 1e-12 && im.abs() < 1e-12);
        let (re, im) = CycloNum::i().approx();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = CycloNum::sqrt5().approx();
        assert!((re - 5.0f64.sqrt()).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn field_axioms_on_pseudorandom_triples() {
        // deterministic LCG so the triple set is reproducible
        let mut state: u64 = 0x243F6A8885A308D3;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let rand_elem = |next: &mut dyn FnMut() -> u64| {
            let mut c = CycloNum::zero();
            for _ in 0..4 {
                let idx = (next() % FIELD_DIM as u64) as usize;
                let num = (next() % 19) as i64 - 9;
                let den = (next() % 7) as i64 + 1;
                c.coeffs[idx] += BigRational::new(BigInt::from(num), BigInt::from(den));
            }
            c
        };
        for _ in 0..40 {
            let a = rand_elem(&mut next);
            let b = rand_elem(&mut next);
            let c = rand_elem(&mut next);
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            if !a.is_zero() {
                assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn nullspace_trivial_and_simple() {
        let id = CycloMatrix::from_rows(vec![
            vec![CycloNum::one(), CycloNum::zero()],
            vec![CycloNum::zero(), CycloNum::one()],
        ]);
        assert!(id.nullspace().is_empty());
        assert_eq!(id.rank(), 2);

        let m = CycloMatrix::from_rows(vec![vec![
            CycloNum::one(),
            CycloNum::from_integer(-1),
        ]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![CycloNum::one(), CycloNum::one()]);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn nullspace_basis_is_independent_and_annihilated() {
        // 2x4 rank-2 matrix: kernel has dimension 2
        let m = CycloMatrix::from_rows(vec![
            vec![
                CycloNum::one(),
                CycloNum::from_integer(2),
                CycloNum::from_integer(3),
                CycloNum::zero(),
            ],
            vec![
                CycloNum::zero(),
                CycloNum::one(),
                CycloNum::i(),
                CycloNum::from_integer(-1),
            ],
        ]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(CycloMatrix::from_columns(&ns).rank(), ns.len());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = CycloMatrix::from_rows(vec![
            vec![CycloNum::one(), CycloNum::one()],
            vec![CycloNum::one(), -CycloNum::one()],
        ]);
        let b = vec![CycloNum::from_integer(3), CycloNum::from_integer(1)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);

        let singular = CycloMatrix::from_rows(vec![
            vec![CycloNum::one(), CycloNum::one()],
            vec![CycloNum::one(), CycloNum::one()],
        ]);
        assert!(singular
            .solve(&[CycloNum::zero(), CycloNum::one()])
            .is_none());
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(2, 5), BigInt::zero());
    }
}
