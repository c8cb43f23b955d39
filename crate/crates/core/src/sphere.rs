//! Polynomial functions on the unit 3-sphere.
//!
//! Points of the sphere are unit quaternions written with complex
//! coordinates (s, t) subject to s sbar + t tbar = 1. Functions are
//! polynomials in (s, t, sbar, tbar) kept in a canonical form modulo that
//! relation: no stored monomial is divisible by t*tbar (the rewrite
//! t tbar -> 1 - s sbar runs to its fixed point, which is unique because a
//! single-rule rewriting system for the principal ideal is confluent).
//!
//! The six SU(2) generator actions (left and right) are first-order
//! differential operators applied exactly as written and reduced. A
//! [`Multiplet`] is the spin-j family grown from a highest weight by the
//! right lowering operator, stored in the un-normalized ladder basis with
//! integer matrix elements so that no square roots ever appear.

use std::collections::BTreeMap;
use std::fmt;

use num::BigRational;

use crate::binform::BinaryForm;
use crate::cyclo::{binomial, CycloMatrix, CycloNum};
use crate::error::Error;

/// Exponents (a, b, c, d) of s^a t^b sbar^c tbar^d. Ordering is
/// lexicographic, which fixes the serialization order of terms.
pub type Exponents = [u16; 4];

/// A function on the 3-sphere in canonical form; no zero coefficients and
/// no monomial divisible by t*tbar.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SphereFunction {
    terms: BTreeMap<Exponents, CycloNum>,
}

impl SphereFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: CycloNum) -> Self {
        let mut f = Self::zero();
        if !c.is_zero() {
            f.terms.insert([0, 0, 0, 0], c);
        }
        f
    }

    pub fn one() -> Self {
        Self::constant(CycloNum::one())
    }

    pub fn monomial(c: CycloNum, exp: Exponents) -> Self {
        let mut f = Self::zero();
        f.insert_reduced(exp, c);
        f
    }

    /// Builds a canonical function from arbitrary raw terms.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, CycloNum)>>(raw: I) -> Self {
        let mut f = Self::zero();
        for (exp, c) in raw {
            f.insert_reduced(exp, c);
        }
        f
    }

    /// Embeds a holomorphic binary form: s^a t^(d-a) -> exponents (a, d-a, 0, 0).
    pub fn from_binary_form(form: &BinaryForm) -> Self {
        let d = form.degree();
        let mut f = Self::zero();
        for (a, c) in form.coeffs().iter().enumerate() {
            if !c.is_zero() {
                f.terms.insert([a as u16, (d - a) as u16, 0, 0], c.clone());
            }
        }
        f
    }

    /// Adds one raw monomial, rewriting t tbar -> 1 - s sbar as needed.
    fn insert_reduced(&mut self, exp: Exponents, coeff: CycloNum) {
        if coeff.is_zero() {
            return;
        }
        let [a, b, c, d] = exp;
        if b >= 1 && d >= 1 {
            // (t tbar)^e = (1 - s sbar)^e with e = min(b, d); after the
            // substitution one of the two exponents is zero, so each
            // produced term is already canonical.
            let e = b.min(d);
            for m in 0..=e {
                let mut factor = BigRational::from_integer(binomial(e as u32, m as u32));
                if m % 2 == 1 {
                    factor = -factor;
                }
                self.insert_canonical(
                    [a + m, b - e, c + m, d - e],
                    coeff.scale(&factor),
                );
            }
        } else {
            self.insert_canonical(exp, coeff);
        }
    }

    fn insert_canonical(&mut self, exp: Exponents, coeff: CycloNum) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &CycloNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &Exponents) -> CycloNum {
        self.terms.get(exp).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (exp, c) in other.terms.iter() {
            out.insert_canonical(*exp, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SphereFunction {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &CycloNum) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SphereFunction {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        self.mul_scaled_into(other, None, &mut out);
        out
    }

    /// Accumulates scale * self * other into `acc` without intermediates.
    fn mul_scaled_into(&self, other: &Self, scale: Option<&CycloNum>, acc: &mut Self) {
        for (e1, c1) in self.terms.iter() {
            let c1 = match scale {
                Some(s) => c1 * s,
                None => c1.clone(),
            };
            for (e2, c2) in other.terms.iter() {
                let exp = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                acc.insert_reduced(exp, &c1 * c2);
            }
        }
    }

    /// Complex conjugation: swaps s <-> sbar, t <-> tbar and conjugates
    /// coefficients. An involution.
    pub fn conj(&self) -> Self {
        SphereFunction {
            terms: self
                .terms
                .iter()
                .map(|(&[a, b, c, d], v)| ([c, d, a, b], v.conj()))
                .collect(),
        }
    }

    /// The maximal total degree among stored monomials (None for zero).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }
}

impl fmt::Debug for SphereFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SphereFunction {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let vars = ["s", "t", "s~", "t~"];
        let mut first = true;
        for (exp, c) in self.terms.iter() {
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let is_const = exp.iter().all(|&e| e == 0);
            if is_const {
                write!(out, "({})", c)?;
                continue;
            }
            write!(out, "({})", c)?;
            for (v, &e) in vars.iter().zip(exp.iter()) {
                if e == 1 {
                    write!(out, "*{}", v)?;
                } else if e > 1 {
                    write!(out, "*{}^{}", v, e)?;
                }
            }
        }
        Ok(())
    }
}

/// The six Lie-algebra generator actions of SU(2)^L x SU(2)^R on sphere
/// functions, as first-order differential operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    LeftZ,
    LeftRaise,
    LeftLower,
    RightZ,
    RightRaise,
    RightLower,
}

/// Applies a generator exactly and reduces.
///
///   Jz^L = (s ds + tbar dtbar - t dt - sbar dsbar)/2
///   J+^L = s dt - tbar dsbar
///   J-^L = t ds - sbar dtbar
///   Jz^R = (s ds - tbar dtbar + t dt - sbar dsbar)/2
///   J+^R = -s dtbar + t dsbar
///   J-^R = -tbar ds + sbar dt
pub fn apply_generator(gen: Generator, f: &SphereFunction) -> SphereFunction {
    let mut out = SphereFunction::zero();
    for (&[a, b, c, d], coeff) in f.terms.iter() {
        match gen {
            Generator::LeftZ => {
                let w = a as i64 + d as i64 - b as i64 - c as i64;
                out.insert_reduced(
                    [a, b, c, d],
                    coeff.scale(&BigRational::new(w.into(), 2.into())),
                );
            }
            Generator::RightZ => {
                let w = a as i64 + b as i64 - c as i64 - d as i64;
                out.insert_reduced(
                    [a, b, c, d],
                    coeff.scale(&BigRational::new(w.into(), 2.into())),
                );
            }
            Generator::LeftRaise => {
                if b >= 1 {
                    out.insert_reduced([a + 1, b - 1, c, d], coeff.scale_int(b as i64));
                }
                if c >= 1 {
                    out.insert_reduced([a, b, c - 1, d + 1], coeff.scale_int(-(c as i64)));
                }
            }
            Generator::LeftLower => {
                if a >= 1 {
                    out.insert_reduced([a - 1, b + 1, c, d], coeff.scale_int(a as i64));
                }
                if d >= 1 {
                    out.insert_reduced([a, b, c + 1, d - 1], coeff.scale_int(-(d as i64)));
                }
            }
            Generator::RightRaise => {
                if d >= 1 {
                    out.insert_reduced([a + 1, b, c, d - 1], coeff.scale_int(-(d as i64)));
                }
                if c >= 1 {
                    out.insert_reduced([a, b + 1, c - 1, d], coeff.scale_int(c as i64));
                }
            }
            Generator::RightLower => {
                if a >= 1 {
                    out.insert_reduced([a - 1, b, c, d + 1], coeff.scale_int(-(a as i64)));
                }
                if b >= 1 {
                    out.insert_reduced([a, b - 1, c + 1, d], coeff.scale_int(b as i64));
                }
            }
        }
    }
    out
}

/// Commutator [g1, g2] applied to f.
pub fn commutator(g1: Generator, g2: Generator, f: &SphereFunction) -> SphereFunction {
    apply_generator(g1, &apply_generator(g2, f)).sub(&apply_generator(g2, &apply_generator(g1, f)))
}

/// A full spin-j family of sphere functions grown from a highest weight.
///
/// Component l holds the ladder vector of weight j - l: successive
/// components divide the raw lowering action by the running integer 2j - l,
/// so that (J-^R)^l (highest weight) = (2j)!/(2j-l)! * component(l).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplet {
    two_j: u32,
    highest_weight: BinaryForm,
    components: Vec<SphereFunction>,
}

impl Multiplet {
    /// Builds the multiplet of spin (degree/2) generated by a holomorphic
    /// highest weight. The zero form yields the zero multiplet of the same
    /// spin shape.
    pub fn from_highest_weight(hw: &BinaryForm) -> Self {
        let two_j = hw.degree() as u32;
        let mut components = Vec::with_capacity(two_j as usize + 1);
        components.push(SphereFunction::from_binary_form(hw));
        for l in 0..two_j {
            let lowered = apply_generator(Generator::RightLower, &components[l as usize]);
            let scaled = lowered.scale(&CycloNum::from_ratio(1, (two_j - l) as i64));
            components.push(scaled);
        }
        Multiplet {
            two_j,
            highest_weight: hw.clone(),
            components,
        }
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn highest_weight(&self) -> &BinaryForm {
        &self.highest_weight
    }

    pub fn component(&self, l: usize) -> &SphereFunction {
        &self.components[l]
    }

    pub fn components(&self) -> &[SphereFunction] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

/// Highest weight of the spin (j1 + j2 - k) part of a product of two
/// multiplets: the alternating sum
///
///   sum_l (-1)^l C(k, l) <j1, j1-l> <j2, j2-(k-l)>
///
/// reduced on the sphere. It is annihilated by J+^R, and it reproduces the
/// transvectant of the two highest weights exactly (the correspondence the
/// whole crate revolves around).
pub fn cg_highest(m1: &Multiplet, m2: &Multiplet, k: u32) -> Result<SphereFunction, Error> {
    if k > m1.two_j.min(m2.two_j) {
        return Err(Error::ContractionOutOfRange {
            k,
            d1: m1.two_j as usize,
            d2: m2.two_j as usize,
        });
    }
    let mut out = SphereFunction::zero();
    for l in 0..=k {
        let mut c = BigRational::from_integer(binomial(k, l));
        if l % 2 == 1 {
            c = -c;
        }
        m1.component(l as usize).mul_scaled_into(
            m2.component((k - l) as usize),
            Some(&CycloNum::from_rational(c)),
            &mut out,
        );
    }
    Ok(out)
}

/// Exact span membership over the monomial basis of the given functions.
pub fn in_span(target: &SphereFunction, basis: &[&SphereFunction]) -> bool {
    if target.is_zero() {
        return true;
    }
    let mut monomials: Vec<Exponents> = Vec::new();
    {
        let mut seen = std::collections::BTreeSet::new();
        for f in basis.iter().map(|f| *f).chain(std::iter::once(target)) {
            for (e, _) in f.terms() {
                seen.insert(*e);
            }
        }
        monomials.extend(seen);
    }
    let columns: Vec<Vec<CycloNum>> = basis
        .iter()
        .map(|f| monomials.iter().map(|e| f.coeff(e)).collect())
        .collect();
    if columns.is_empty() {
        return false;
    }
    let matrix = CycloMatrix::from_columns(&columns);
    let rhs: Vec<CycloNum> = monomials.iter().map(|e| target.coeff(e)).collect();
    matrix.solve(&rhs).is_some()
}
