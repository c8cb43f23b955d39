//! Homogeneous binary forms in (s, t) over Q(zeta_120).
//!
//! A form of degree 2j is the highest-weight vector of a spin-j multiplet.
//! The module carries the normalized transvectant
//!
//!   (f, g)^k = (d1-k)! (d2-k)! / (d1! d2!) *
//!              sum_l (-1)^l C(k,l) (d_s^{k-l} d_t^l f) (d_s^l d_t^{k-l} g)
//!
//! together with its two classical specializations, the Hessian (k = 2) and
//! the cross product (k = 1). All proportionality constants that the
//! normalization produces are kept exactly as they come out; nothing is
//! rescaled to match classical tables.

use std::fmt;

use num::BigRational;

use crate::cyclo::{binomial, factorial, CycloNum};
use crate::error::Error;
use crate::groups::GroupElement;

/// A homogeneous binary form; `coeffs[a]` multiplies s^a t^(d-a).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<CycloNum>,
}

impl BinaryForm {
    /// The zero form of the given degree (each degree has its own zero).
    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![CycloNum::zero(); degree + 1],
        }
    }

    pub fn constant(c: CycloNum) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    pub fn from_coeffs(coeffs: Vec<CycloNum>) -> Self {
        assert!(!coeffs.is_empty(), "a form stores degree+1 coefficients");
        BinaryForm { coeffs }
    }

    /// c * s^a t^b.
    pub fn monomial(c: CycloNum, a: usize, b: usize) -> Self {
        let mut f = Self::zero(a + b);
        f.coeffs[a] = c;
        f
    }

    pub fn var_s() -> Self {
        Self::monomial(CycloNum::one(), 1, 0)
    }

    pub fn var_t() -> Self {
        Self::monomial(CycloNum::one(), 0, 1)
    }

    /// s^n + t^n.
    pub fn power_sum(n: usize) -> Self {
        let mut f = Self::zero(n);
        f.coeffs[n] = CycloNum::one();
        f.coeffs[0] += &CycloNum::one();
        f
    }

    /// s^n - t^n.
    pub fn power_difference(n: usize) -> Self {
        let mut f = Self::zero(n);
        f.coeffs[n] = CycloNum::one();
        f.coeffs[0] -= &CycloNum::one();
        f
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CycloNum] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize) -> &CycloNum {
        &self.coeffs[a]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.degree() + other.degree();
        let mut out = Self::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BinaryForm::constant(CycloNum::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative in s; degree drops by one (the derivative
    /// of a constant is the zero constant).
    pub fn diff_s(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero(0);
        }
        let mut out = Self::zero(d - 1);
        for a in 1..=d {
            if !self.coeffs[a].is_zero() {
                out.coeffs[a - 1] = self.coeffs[a].scale_int(a as i64);
            }
        }
        out
    }

    pub fn diff_t(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero(0);
        }
        let mut out = Self::zero(d - 1);
        for a in 0..d {
            let b = d - a; // exponent of t
            if !self.coeffs[a].is_zero() {
                out.coeffs[a] = self.coeffs[a].scale_int(b as i64);
            }
        }
        out
    }

    /// If `other` = c * self for a scalar c, returns c.
    pub fn proportionality_to(&self, other: &Self) -> Option<CycloNum> {
        if self.degree() != other.degree() {
            return None;
        }
        if self.is_zero() {
            return other.is_zero().then(CycloNum::one);
        }
        let pivot = self.coeffs.iter().position(|c| !c.is_zero())?;
        let ratio = &other.coeffs[pivot] * &self.coeffs[pivot].inv().ok()?;
        if &self.scale(&ratio) == other {
            Some(ratio)
        } else {
            None
        }
    }
}

/// The k-th transvectant of f and g with the normalized prefactor.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm, k: u32) -> Result<BinaryForm, Error> {
    let d1 = f.degree();
    let d2 = g.degree();
    if (k as usize) > d1 || (k as usize) > d2 {
        return Err(Error::ContractionOutOfRange { k, d1, d2 });
    }
    let ku = k as usize;
    // derivative tables d_s^{k-l} d_t^l f and d_s^l d_t^{k-l} g
    let mut fs = vec![f.clone()];
    let mut gs = vec![g.clone()];
    for _ in 0..ku {
        fs.push(fs.last().unwrap().diff_s());
        gs.push(gs.last().unwrap().diff_s());
    }
    let mut sum = BinaryForm::zero(d1 + d2 - 2 * ku);
    for l in 0..=ku {
        let mut df = fs[ku - l].clone();
        let mut dg = gs[l].clone();
        for _ in 0..l {
            df = df.diff_t();
        }
        for _ in 0..(ku - l) {
            dg = dg.diff_t();
        }
        let term = df.mul(&dg);
        let mut c = BigRational::from_integer(binomial(k, l as u32));
        if l % 2 == 1 {
            c = -c;
        }
        sum = sum.add(&term.scale(&CycloNum::from_rational(c)))?;
    }
    let prefactor = BigRational::new(
        factorial((d1 - ku) as u32) * factorial((d2 - ku) as u32),
        factorial(d1 as u32) * factorial(d2 as u32),
    );
    Ok(sum.scale(&CycloNum::from_rational(prefactor)))
}

/// Hessian-type covariant: the second transvectant of f with itself.
pub fn hessian(f: &BinaryForm) -> Result<BinaryForm, Error> {
    if f.degree() < 2 {
        return Err(Error::DegreeTooSmall {
            needed: 2,
            got: f.degree(),
        });
    }
    transvectant(f, f, 2)
}

/// Cross product of two forms: the first transvectant (a normalized
/// Jacobian). Antisymmetric in its arguments.
pub fn cross(f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm, Error> {
    if f.degree() < 1 || g.degree() < 1 {
        return Err(Error::DegreeTooSmall {
            needed: 1,
            got: f.degree().min(g.degree()),
        });
    }
    transvectant(f, g, 1)
}

/// Action of a group element on a form: substitutes the entries of g^{-1},
/// (s, t) -> (a s + b t, c s + d t). This makes `act` functorial,
/// act(gh, f) = act(g, act(h, f)), and preserves transvectants exactly
/// because det = 1.
pub fn act(g: &GroupElement, f: &BinaryForm) -> BinaryForm {
    let inv = g.inverse();
    substitute(f, inv.entry(0, 0), inv.entry(0, 1), inv.entry(1, 0), inv.entry(1, 1))
}

/// f(alpha s + beta t, gamma s + delta t), computed by iterated products of
/// the two substituted linear forms.
fn substitute(
    f: &BinaryForm,
    alpha: &CycloNum,
    beta: &CycloNum,
    gamma: &CycloNum,
    delta: &CycloNum,
) -> BinaryForm {
    let d = f.degree();
    let lin1 = BinaryForm::from_coeffs(vec![beta.clone(), alpha.clone()]);
    let lin2 = BinaryForm::from_coeffs(vec![delta.clone(), gamma.clone()]);
    // powers of the two linear forms up to the degree
    let mut p1 = vec![BinaryForm::constant(CycloNum::one())];
    let mut p2 = vec![BinaryForm::constant(CycloNum::one())];
    for j in 1..=d {
        p1.push(p1[j - 1].mul(&lin1));
        p2.push(p2[j - 1].mul(&lin2));
    }
    let mut out = BinaryForm::zero(d);
    for (a, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = p1[a].mul(&p2[d - a]).scale(c);
        out = out.add(&term).expect("degrees agree");
    }
    out
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let d = self.degree();
        let mut first = true;
        for a in (0..=d).rev() {
            let c = &self.coeffs[a];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let b = d - a;
            let is_constant_term = a == 0 && b == 0;
            if c.is_one() && !is_constant_term {
                // skip unit coefficient
            } else if c.is_rational() {
                write!(out, "{}", c)?;
                if !is_constant_term {
                    write!(out, "*")?;
                }
            } else {
                write!(out, "({})", c)?;
                if !is_constant_term {
                    write!(out, "*")?;
                }
            }
            if a > 0 {
                write!(out, "s")?;
                if a > 1 {
                    write!(out, "^{}", a)?;
                }
            }
            if b > 0 {
                write!(out, "t")?;
                if b > 1 {
                    write!(out, "^{}", b)?;
                }
            }
        }
        Ok(())
    }
}

/// The quartic tetrahedral seed s^4 + t^4 + 2 i sqrt3 s^2 t^2.
pub fn tetrahedral_quartic() -> BinaryForm {
    let mut f = BinaryForm::zero(4);
    f = f
        .add(&BinaryForm::monomial(CycloNum::one(), 4, 0))
        .unwrap();
    f = f
        .add(&BinaryForm::monomial(CycloNum::one(), 0, 4))
        .unwrap();
    let c = (CycloNum::i() * CycloNum::sqrt3()).scale_int(2);
    f.add(&BinaryForm::monomial(c, 2, 2)).unwrap()
}

/// Its conjugate-type partner s^4 + t^4 - 2 i sqrt3 s^2 t^2.
pub fn tetrahedral_quartic_conjugate() -> BinaryForm {
    let mut f = BinaryForm::zero(4);
    f = f
        .add(&BinaryForm::monomial(CycloNum::one(), 4, 0))
        .unwrap();
    f = f
        .add(&BinaryForm::monomial(CycloNum::one(), 0, 4))
        .unwrap();
    let c = (CycloNum::i() * CycloNum::sqrt3()).scale_int(-2);
    f.add(&BinaryForm::monomial(c, 2, 2)).unwrap()
}

/// st(s^4 - t^4), the degree-6 tetrahedral invariant.
pub fn tetrahedral_sextic() -> BinaryForm {
    let st = BinaryForm::monomial(CycloNum::one(), 1, 1);
    st.mul(&BinaryForm::power_difference(4))
}

/// st(s^10 + 11 s^5 t^5 - t^10), the degree-12 icosahedral invariant.
pub fn icosahedral_form() -> BinaryForm {
    let mut inner = BinaryForm::zero(10);
    inner = inner
        .add(&BinaryForm::monomial(CycloNum::one(), 10, 0))
        .unwrap();
    inner = inner
        .add(&BinaryForm::monomial(CycloNum::from_integer(11), 5, 5))
        .unwrap();
    inner = inner
        .add(&BinaryForm::monomial(CycloNum::from_integer(-1), 0, 10))
        .unwrap();
    BinaryForm::monomial(CycloNum::one(), 1, 1).mul(&inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st() -> BinaryForm {
        BinaryForm::monomial(CycloNum::one(), 1, 1)
    }

    #[test]
    fn ring_operations() {
        assert_eq!(
            BinaryForm::var_s().mul(&BinaryForm::var_t()),
            st()
        );
        let s4 = BinaryForm::monomial(CycloNum::one(), 4, 0);
        let sum = BinaryForm::power_sum(4).add(&s4.neg()).unwrap();
        assert_eq!(sum, BinaryForm::monomial(CycloNum::one(), 0, 4));
        // st * (s^4 - t^4) = s^5 t - s t^5
        let p = st().mul(&BinaryForm::power_difference(4));
        let mut expected = BinaryForm::zero(6);
        expected.coeffs[5] = CycloNum::one();
        expected.coeffs[1] = CycloNum::from_integer(-1);
        assert_eq!(p, expected);
        assert!(BinaryForm::var_s()
            .add(&BinaryForm::power_sum(2))
            .is_err());
    }

    #[test]
    fn derivatives() {
        let f = BinaryForm::monomial(CycloNum::one(), 2, 1); // s^2 t
        assert_eq!(
            f.diff_s(),
            BinaryForm::monomial(CycloNum::from_integer(2), 1, 1)
        );
        let s4 = BinaryForm::monomial(CycloNum::one(), 4, 0);
        assert!(s4.diff_t().is_zero());
        assert_eq!(
            st().diff_t().diff_s(),
            BinaryForm::constant(CycloNum::one())
        );
    }

    #[test]
    fn transvectant_order_zero_is_product() {
        let f = BinaryForm::power_sum(3);
        let g = st();
        assert_eq!(transvectant(&f, &g, 0).unwrap(), f.mul(&g));
    }

    #[test]
    fn transvectant_rejects_large_k() {
        assert!(transvectant(&st(), &st(), 3).is_err());
    }

    #[test]
    fn cyclic_pairings() {
        for n in 2..=8 {
            let e = BinaryForm::power_sum(n);
            // second contraction kills every term: all second derivatives of
            // st vanish except the mixed one, which meets a pure power
            let t2 = transvectant(&st(), &e, 2).unwrap();
            assert!(t2.is_zero(), "n={n}");
            // first contraction regenerates the odd combination
            let t1 = transvectant(&st(), &e, 1).unwrap();
            let expected =
                BinaryForm::power_difference(n).scale(&CycloNum::from_ratio(-1, 2));
            assert_eq!(t1, expected, "n={n}");
        }
    }

    #[test]
    fn hessian_frozen_values() {
        // hessian(st) = -1/2
        assert_eq!(
            hessian(&st()).unwrap(),
            BinaryForm::constant(CycloNum::from_ratio(-1, 2))
        );
        // hessian(s^2 t^2) = -(1/6) s^2 t^2
        let f = BinaryForm::monomial(CycloNum::one(), 2, 2);
        assert_eq!(
            hessian(&f).unwrap(),
            BinaryForm::monomial(CycloNum::from_ratio(-1, 6), 2, 2)
        );
        assert!(hessian(&BinaryForm::var_s()).is_err());
    }

    #[test]
    fn tetrahedral_quartic_covariants() {
        let v = tetrahedral_quartic();
        // (V, V)^4 = 0: the spin-0 part of the quadratic decomposition
        assert!(transvectant(&v, &v, 4).unwrap().is_zero());
        // hessian(V) = (2 i sqrt3 / 3) * (s^4 + t^4 - 2 i sqrt3 s^2 t^2)
        let c = (CycloNum::i() * CycloNum::sqrt3())
            .scale(&BigRational::new(2.into(), 3.into()));
        let expected = tetrahedral_quartic_conjugate().scale(&c);
        assert_eq!(hessian(&v).unwrap(), expected);
        // cross(hessian(V), V) = -4 st(s^4 - t^4)
        let got = cross(&hessian(&v).unwrap(), &v).unwrap();
        assert_eq!(got, tetrahedral_sextic().scale(&CycloNum::from_integer(-4)));
    }

    #[test]
    fn cross_basics() {
        let f = BinaryForm::power_sum(5);
        assert!(cross(&f, &f).unwrap().is_zero());
        assert_eq!(
            cross(&BinaryForm::var_s(), &BinaryForm::var_t()).unwrap(),
            BinaryForm::constant(CycloNum::one())
        );
        assert!(cross(&BinaryForm::constant(CycloNum::one()), &f).is_err());
    }

    #[test]
    fn act_preserves_transvectants() {
        use crate::groups::{FiniteSubgroup, GroupName};
        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        let f = tetrahedral_quartic();
        let g = BinaryForm::power_sum(3);
        for el in tetra.generators.iter().chain(tetra.elements.iter().take(6)) {
            for k in 0..=3u32 {
                let lhs = act(el, &transvectant(&f, &g, k).unwrap());
                let rhs = transvectant(&act(el, &f), &act(el, &g), k).unwrap();
                assert_eq!(lhs, rhs, "k={k}");
            }
        }
    }

    #[test]
    fn transvectant_symmetry_and_bilinearity() {
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let rand_form = |next: &mut dyn FnMut() -> u64, d: usize| {
            let mut f = BinaryForm::zero(d);
            for a in 0..=d {
                let n = (next() % 11) as i64 - 5;
                f.coeffs[a] = CycloNum::from_integer(n);
            }
            f
        };
        for _ in 0..10 {
            let f = rand_form(&mut next, 4);
            let g = rand_form(&mut next, 5);
            let h = rand_form(&mut next, 4);
            for k in 0..=4u32 {
                let fg = transvectant(&f, &g, k).unwrap();
                let gf = transvectant(&g, &f, k).unwrap();
                let sign = if k % 2 == 1 { -1 } else { 1 };
                assert_eq!(fg, gf.scale(&CycloNum::from_integer(sign)));
                // bilinearity in the first slot
                let fh = f.add(&h).unwrap();
                let lhs = transvectant(&fh, &g, k).unwrap();
                let rhs = transvectant(&f, &g, k)
                    .unwrap()
                    .add(&transvectant(&h, &g, k).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
                // degree bookkeeping
                assert_eq!(fg.degree(), 4 + 5 - 2 * k as usize);
            }
            // odd self-transvectants vanish
            assert!(transvectant(&f, &f, 1).unwrap().is_zero());
            assert!(transvectant(&f, &f, 3).unwrap().is_zero());
        }
    }
}
