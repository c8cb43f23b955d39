//! The finite subgroups of SU(2) as explicit lists of exact 2x2 matrices:
//! cyclic, binary dihedral, binary tetrahedral, binary octahedral, binary
//! icosahedral. Generator matrices are standard choices, never trusted:
//! `build` certifies determinant, unitarity, closure order and eigenvalue
//! structure before returning a group.
//!
//! The module also carries a Molien oracle counting (semi-)invariant binary
//! forms degree by degree via exact character averaging, plus an independent
//! elimination-based count used to cross-check it.

use std::collections::HashMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive};

use crate::binform::{act, BinaryForm};
use crate::cyclo::{CycloMatrix, CycloNum, ZETA_ORDER};
use crate::error::Error;

/// An element of SU(2): a 2x2 matrix over Q(zeta_120) with determinant 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    entries: [CycloNum; 4],
}

impl GroupElement {
    pub fn new(a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum) -> Self {
        GroupElement {
            entries: [a, b, c, d],
        }
    }

    pub fn identity() -> Self {
        Self::new(
            CycloNum::one(),
            CycloNum::zero(),
            CycloNum::zero(),
            CycloNum::one(),
        )
    }

    pub fn diagonal(a: CycloNum, d: CycloNum) -> Self {
        Self::new(a, CycloNum::zero(), CycloNum::zero(), d)
    }

    pub fn entry(&self, r: usize, c: usize) -> &CycloNum {
        &self.entries[2 * r + c]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e = |r: usize, c: usize| -> CycloNum {
            &(self.entry(r, 0) * other.entry(0, c)) + &(self.entry(r, 1) * other.entry(1, c))
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det(&self) -> CycloNum {
        &(self.entry(0, 0) * self.entry(1, 1)) - &(self.entry(0, 1) * self.entry(1, 0))
    }

    pub fn trace(&self) -> CycloNum {
        self.entry(0, 0) + self.entry(1, 1)
    }

    /// Inverse by the adjugate; for determinant-1 matrices this is exact
    /// without any division.
    pub fn inverse(&self) -> Self {
        let det = self.det();
        let adj = Self::new(
            self.entry(1, 1).clone(),
            -self.entry(0, 1),
            -self.entry(1, 0),
            self.entry(0, 0).clone(),
        );
        if det.is_one() {
            adj
        } else {
            let s = det.inv().expect("invertible group element");
            Self::new(
                &adj.entries[0] * &s,
                &adj.entries[1] * &s,
                &adj.entries[2] * &s,
                &adj.entries[3] * &s,
            )
        }
    }

    pub fn conjugate_transpose(&self) -> Self {
        Self::new(
            self.entry(0, 0).conj(),
            self.entry(1, 0).conj(),
            self.entry(0, 1).conj(),
            self.entry(1, 1).conj(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity()
    }

    pub fn is_special_unitary(&self) -> bool {
        self.det().is_one() && self.conjugate_transpose().mul(self).is_identity()
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0], self.entries[1], self.entries[2], self.entries[3]
        )
    }
}

/// Names of the five families.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum GroupName {
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupName {
    pub fn expected_order(&self) -> usize {
        match self {
            GroupName::Cyclic(n) => *n as usize,
            GroupName::BinaryDihedral(n) => 4 * *n as usize,
            GroupName::BinaryTetrahedral => 24,
            GroupName::BinaryOctahedral => 48,
            GroupName::BinaryIcosahedral => 120,
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "cyclic({})", n),
            GroupName::BinaryDihedral(n) => write!(f, "binary-dihedral({})", n),
            GroupName::BinaryTetrahedral => write!(f, "binary-tetrahedral"),
            GroupName::BinaryOctahedral => write!(f, "binary-octahedral"),
            GroupName::BinaryIcosahedral => write!(f, "binary-icosahedral"),
        }
    }
}

/// A finite subgroup of SU(2), fully enumerated and certified.
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    pub name: GroupName,
    pub generators: Vec<GroupElement>,
    pub elements: Vec<GroupElement>,
    /// Position of each generator in `elements`.
    generator_indices: Vec<usize>,
    /// For each non-identity element, (parent index, generator index) such
    /// that element = parent * generator. Entry 0 is unused.
    words: Vec<(usize, usize)>,
    /// Exponent e with eigenvalues zeta^e, zeta^-e for each element.
    eigen_exponents: Vec<u32>,
}

/// Breadth-first product closure with exact dedup. Errors when the closure
/// grows past `bound`.
pub fn closure(generators: &[GroupElement], bound: usize) -> Result<Vec<GroupElement>, Error> {
    Ok(closure_with_words(generators, bound)?.0)
}

fn closure_with_words(
    generators: &[GroupElement],
    bound: usize,
) -> Result<(Vec<GroupElement>, Vec<(usize, usize)>), Error> {
    let mut elements = vec![GroupElement::identity()];
    let mut words = vec![(usize::MAX, usize::MAX)];
    let mut seen: HashMap<GroupElement, usize> = HashMap::new();
    seen.insert(GroupElement::identity(), 0);
    let mut frontier = vec![0usize];
    while let Some(&idx) = frontier.first() {
        frontier.remove(0);
        for (gi, g) in generators.iter().enumerate() {
            let next = elements[idx].mul(g);
            if seen.contains_key(&next) {
                continue;
            }
            if elements.len() >= bound {
                return Err(Error::ClosureExceeded { bound });
            }
            let new_idx = elements.len();
            seen.insert(next.clone(), new_idx);
            elements.push(next);
            words.push((idx, gi));
            frontier.push(new_idx);
        }
    }
    Ok((elements, words))
}

impl FiniteSubgroup {
    /// Builds and certifies one of the five families. Parameters must keep
    /// all matrix entries inside Q(zeta_120): n | 120 for cyclic, 2n | 120
    /// for binary dihedral.
    pub fn build(name: GroupName) -> Result<Self, Error> {
        let generators = match name {
            GroupName::Cyclic(n) => {
                if n == 0 || ZETA_ORDER % n != 0 {
                    return Err(Error::UnsupportedParameter(format!(
                        "cyclic order {} does not divide 120",
                        n
                    )));
                }
                let z = CycloNum::root_of_unity(n, 1)?;
                vec![GroupElement::diagonal(z.clone(), z.conj())]
            }
            GroupName::BinaryDihedral(n) => {
                if n == 0 || ZETA_ORDER % (2 * n) != 0 {
                    return Err(Error::UnsupportedParameter(format!(
                        "binary dihedral parameter {} needs 2n | 120",
                        n
                    )));
                }
                let z = CycloNum::root_of_unity(2 * n, 1)?;
                vec![
                    GroupElement::diagonal(z.clone(), z.conj()),
                    rotation_j(),
                ]
            }
            GroupName::BinaryTetrahedral => tetrahedral_generators(),
            GroupName::BinaryOctahedral => {
                let mut gens = tetrahedral_generators();
                let z8 = CycloNum::root_of_unity(8, 1)?;
                gens.push(GroupElement::diagonal(z8.clone(), z8.conj()));
                gens
            }
            GroupName::BinaryIcosahedral => icosahedral_generators(),
        };
        let expected = name.expected_order();
        let (elements, words) = closure_with_words(&generators, expected)?;
        if elements.len() != expected {
            return Err(Error::Certification(format!(
                "{} closed at {} elements, expected {}",
                name,
                elements.len(),
                expected
            )));
        }
        let mut eigen_exponents = Vec::with_capacity(elements.len());
        for g in &elements {
            if !g.is_special_unitary() {
                return Err(Error::Certification(format!(
                    "element of {} is not special unitary: {:?}",
                    name, g
                )));
            }
            eigen_exponents.push(eigen_exponent(g).ok_or_else(|| {
                Error::Certification(format!(
                    "element trace of {} matches no 120th root of unity",
                    name
                ))
            })?);
        }
        let generator_indices = generators
            .iter()
            .map(|g| {
                elements
                    .iter()
                    .position(|e| e == g)
                    .expect("generator is in its own closure")
            })
            .collect();
        Ok(FiniteSubgroup {
            name,
            generators,
            elements,
            generator_indices,
            words,
            eigen_exponents,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.iter().any(|e| e == g)
    }

    pub fn contains_minus_identity(&self) -> bool {
        let minus = GroupElement::diagonal(CycloNum::from_integer(-1), CycloNum::from_integer(-1));
        self.contains(&minus)
    }

    /// Elements commuting with every generator (hence with the whole group).
    pub fn center(&self) -> Vec<GroupElement> {
        self.elements
            .iter()
            .filter(|e| {
                self.generators
                    .iter()
                    .all(|g| e.mul(g) == g.mul(e))
            })
            .cloned()
            .collect()
    }

    /// The scalar by which each element multiplies `f`, when `f` spans a
    /// one-dimensional representation; `None` when some element moves `f`
    /// off its own line.
    ///
    /// Semi-invariance is tested on the generators and the character is
    /// propagated along the closure words; `act` is functorial
    /// (act(gh, f) = act(g, act(h, f)), tested property), so the propagated
    /// value is exactly the scalar for every element.
    pub fn character_of(&self, f: &BinaryForm) -> Result<Option<Character>, Error> {
        if f.is_zero() {
            return Err(Error::ZeroForm);
        }
        let mut gen_values = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let image = act(g, f);
            let Some(scalar) = f.proportionality_to(&image) else {
                return Ok(None);
            };
            if scalar.root_of_unity_order().is_none() {
                return Ok(None);
            }
            gen_values.push(scalar);
        }
        let mut values = vec![CycloNum::one(); self.elements.len()];
        for idx in 1..self.elements.len() {
            let (parent, gi) = self.words[idx];
            values[idx] = &values[parent] * &gen_values[gi];
        }
        Ok(Some(Character { values }))
    }

    pub fn is_invariant(&self, f: &BinaryForm) -> Result<bool, Error> {
        Ok(self
            .character_of(f)?
            .map(|chi| chi.is_trivial())
            .unwrap_or(false))
    }

    /// Dimension of the space of degree-d forms that are semi-invariant with
    /// character chi (trivial when None), by exact character averaging:
    /// (1/|G|) sum_g conj(chi(g)) chi_d(g) with chi_d(g) the trace of g on
    /// degree-d forms, computed from the exact eigenvalue exponents. A
    /// non-integer or negative result aborts: it would mean the group or the
    /// character data is corrupt.
    pub fn molien_dim(&self, d: usize, chi: Option<&Character>) -> Result<usize, Error> {
        if let Some(c) = chi {
            assert_eq!(c.values.len(), self.elements.len(), "foreign character");
        }
        // group identical (eigenvalue, character value) classes
        let mut classes: HashMap<(u32, Option<CycloNum>), usize> = HashMap::new();
        for (idx, &e) in self.eigen_exponents.iter().enumerate() {
            let key = (e, chi.map(|c| c.values[idx].clone()));
            *classes.entry(key).or_insert(0) += 1;
        }
        let mut sum = CycloNum::zero();
        for ((e, chi_value), count) in classes {
            // trace of the element on degree-d forms: eigenvalues
            // zeta^{e(d-2a)} for a = 0..d
            let mut trace_d = CycloNum::zero();
            for a in 0..=d {
                let expo = e as i64 * (d as i64 - 2 * a as i64);
                trace_d += &CycloNum::zeta_pow(expo);
            }
            let term = match chi_value {
                Some(v) => &v.conj() * &trace_d,
                None => trace_d,
            };
            sum += &term.scale_int(count as i64);
        }
        let avg = sum.scale(&BigRational::new(
            BigInt::one(),
            BigInt::from(self.order()),
        ));
        let q = avg.as_rational().ok_or_else(|| {
            Error::Certification(format!(
                "Molien average for {} at degree {} is not rational: {}",
                self.name, d, avg
            ))
        })?;
        if !q.is_integer() || q.is_negative() {
            return Err(Error::Certification(format!(
                "Molien average for {} at degree {} is not a non-negative integer: {}",
                self.name, d, q
            )));
        }
        Ok(q.to_integer().to_usize().expect("desk-scale dimension"))
    }

    /// Independent oracle for `molien_dim`: dimension of the solution space
    /// of the exact linear system "act(g, f) = chi(g) f for every
    /// generator", solved by nullspace over Q(zeta_120).
    pub fn invariant_dim_by_elimination(&self, d: usize, chi: Option<&Character>) -> usize {
        let cols = d + 1;
        let mut rows: Vec<Vec<CycloNum>> = Vec::new();
        for (g, &gi) in self.generators.iter().zip(self.generator_indices.iter()) {
            let chi_g = match chi {
                Some(c) => c.values[gi].clone(),
                None => CycloNum::one(),
            };
            // columns: images of the basis monomials s^a t^(d-a)
            let mut block = vec![vec![CycloNum::zero(); cols]; cols];
            for a in 0..cols {
                let mono = BinaryForm::monomial(CycloNum::one(), a, d - a);
                let image = act(g, &mono);
                for r in 0..cols {
                    block[r][a] = image.coeff(r).clone();
                }
                block[a][a] -= &chi_g;
            }
            rows.extend(block);
        }
        CycloMatrix::from_rows(rows).nullspace().len()
    }
}

/// A one-dimensional character, stored as its value on every element in
/// enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<CycloNum>,
}

impl Character {
    pub fn trivial(group: &FiniteSubgroup) -> Self {
        Character {
            values: vec![CycloNum::one(); group.order()],
        }
    }

    pub fn values(&self) -> &[CycloNum] {
        &self.values
    }

    pub fn value(&self, element_index: usize) -> &CycloNum {
        &self.values[element_index]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    /// Order of the character in the dual group: lcm of the orders of its
    /// values.
    pub fn order(&self) -> u32 {
        let mut m = 1u32;
        for v in &self.values {
            let o = v
                .root_of_unity_order()
                .expect("character values are roots of unity");
            m = lcm(m, o);
        }
        m
    }

    /// Pointwise product (the character of a product of semi-invariants).
    pub fn product(&self, other: &Character) -> Character {
        assert_eq!(self.values.len(), other.values.len());
        Character {
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn power(&self, e: u32) -> Character {
        Character {
            values: self.values.iter().map(|v| v.pow(e as u64)).collect(),
        }
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The rotation [[0, 1], [-1, 0]].
fn rotation_j() -> GroupElement {
    GroupElement::new(
        CycloNum::zero(),
        CycloNum::one(),
        CycloNum::from_integer(-1),
        CycloNum::zero(),
    )
}

fn tetrahedral_generators() -> Vec<GroupElement> {
    let i = CycloNum::i();
    let half = CycloNum::from_ratio(1, 2);
    let one = CycloNum::one();
    vec![
        GroupElement::diagonal(i.clone(), -&i),
        rotation_j(),
        GroupElement::new(
            &(&one + &i) * &half,
            &(&(-&one) + &i) * &half,
            &(&one + &i) * &half,
            &(&one - &i) * &half,
        ),
    ]
}

fn icosahedral_generators() -> Vec<GroupElement> {
    let eps = CycloNum::root_of_unity(5, 1).expect("5 divides 120");
    let e2 = eps.pow(2);
    let e3 = eps.pow(3);
    let e4 = eps.pow(4);
    let inv_sqrt5 = CycloNum::sqrt5().inv().expect("sqrt5 is nonzero");
    let a = &(-&(&eps - &e4)) * &inv_sqrt5;
    let b = &(&e2 - &e3) * &inv_sqrt5;
    let d = &(&eps - &e4) * &inv_sqrt5;
    vec![
        GroupElement::diagonal(eps.pow(3), eps.pow(2)),
        GroupElement::new(a, b.clone(), b, d),
    ]
}

/// Finds e in 0..=60 with trace = zeta^e + zeta^-e; every element of a
/// finite subgroup of SU(2) inside Q(zeta_120) has such an exponent.
fn eigen_exponent(g: &GroupElement) -> Option<u32> {
    let tr = g.trace();
    (0..=ZETA_ORDER / 2).find(|&e| {
        let cand = CycloNum::zeta_pow(e as i64) + CycloNum::zeta_pow(-(e as i64));
        cand == tr
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::{tetrahedral_quartic, tetrahedral_sextic};

    #[test]
    fn closure_of_identity() {
        let els = closure(&[GroupElement::identity()], 4).unwrap();
        assert_eq!(els.len(), 1);
    }

    #[test]
    fn closure_orders() {
        for (name, order) in [
            (GroupName::Cyclic(5), 5),
            (GroupName::Cyclic(1), 1),
            (GroupName::BinaryDihedral(3), 12),
            (GroupName::BinaryTetrahedral, 24),
            (GroupName::BinaryOctahedral, 48),
            (GroupName::BinaryIcosahedral, 120),
        ] {
            let g = FiniteSubgroup::build(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
        }
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(FiniteSubgroup::build(GroupName::Cyclic(7)).is_err());
        assert!(FiniteSubgroup::build(GroupName::BinaryDihedral(45)).is_err());
    }

    #[test]
    fn closure_bound_signals_misconfigured_generators() {
        let gens = tetrahedral_generators();
        match closure(&gens, 4) {
            Err(Error::ClosureExceeded { bound: 4 }) => {}
            other => panic!("expected closure bound error, got {:?}", other.map(|v| v.len())),
        }
    }

    #[test]
    fn octahedral_contains_tetrahedral() {
        let octa = FiniteSubgroup::build(GroupName::BinaryOctahedral).unwrap();
        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        assert!(tetra.elements.iter().all(|e| octa.contains(e)));
    }

    #[test]
    fn elements_are_special_unitary() {
        let g = FiniteSubgroup::build(GroupName::BinaryIcosahedral).unwrap();
        for e in &g.elements {
            assert!(e.det().is_one());
            assert!(e.conjugate_transpose().mul(e).is_identity());
        }
    }

    #[test]
    fn centers() {
        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        assert_eq!(tetra.center().len(), 2); // {1, -1}
        let c6 = FiniteSubgroup::build(GroupName::Cyclic(6)).unwrap();
        assert_eq!(c6.center().len(), 6);
    }

    #[test]
    fn characters_and_invariance() {
        let st = BinaryForm::monomial(CycloNum::one(), 1, 1);
        let cyc = FiniteSubgroup::build(GroupName::Cyclic(6)).unwrap();
        let chi = cyc.character_of(&st).unwrap().unwrap();
        assert!(chi.is_trivial());

        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        let v = tetrahedral_quartic();
        let chi_v = tetra.character_of(&v).unwrap().unwrap();
        assert_eq!(chi_v.order(), 3);
        assert!(!tetra.is_invariant(&v).unwrap());
        assert!(tetra.is_invariant(&tetrahedral_sextic()).unwrap());

        let octa = FiniteSubgroup::build(GroupName::BinaryOctahedral).unwrap();
        let chi_p = octa.character_of(&tetrahedral_sextic()).unwrap().unwrap();
        assert_eq!(chi_p.order(), 2);

        let dihedral = FiniteSubgroup::build(GroupName::BinaryDihedral(4)).unwrap();
        let p = BinaryForm::monomial(CycloNum::one(), 2, 2);
        assert!(dihedral.is_invariant(&p).unwrap());

        // s alone is not semi-invariant under the rotation part swap
        assert_eq!(tetra.character_of(&BinaryForm::var_s()).unwrap(), None);
        assert!(tetra.character_of(&BinaryForm::zero(3)).is_err());
    }

    #[test]
    fn propagated_character_matches_per_element_action() {
        // spot-check the closure-word propagation against direct action for
        // every element of the two groups where direct action is cheap
        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        let v = tetrahedral_quartic();
        let chi = tetra.character_of(&v).unwrap().unwrap();
        for (idx, g) in tetra.elements.iter().enumerate() {
            assert_eq!(act(g, &v), v.scale(chi.value(idx)));
        }
        let octa = FiniteSubgroup::build(GroupName::BinaryOctahedral).unwrap();
        let p = tetrahedral_sextic();
        let chi = octa.character_of(&p).unwrap().unwrap();
        for (idx, g) in octa.elements.iter().enumerate() {
            assert_eq!(act(g, &p), p.scale(chi.value(idx)));
        }
    }

    #[test]
    fn character_is_homomorphism() {
        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        let chi = tetra.character_of(&tetrahedral_quartic()).unwrap().unwrap();
        let index_of = |g: &GroupElement| tetra.elements.iter().position(|e| e == g).unwrap();
        for (i, a) in tetra.elements.iter().enumerate() {
            for (j, b) in tetra.elements.iter().enumerate() {
                let ij = index_of(&a.mul(b));
                assert_eq!(
                    chi.value(ij).clone(),
                    chi.value(i) * chi.value(j)
                );
            }
        }
    }

    #[test]
    fn act_is_functorial() {
        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        let f = tetrahedral_quartic();
        for a in tetra.generators.iter() {
            for b in tetra.generators.iter() {
                assert_eq!(act(&a.mul(b), &f), act(a, &act(b, &f)));
            }
        }
        assert_eq!(act(&GroupElement::identity(), &f), f);
    }

    #[test]
    fn molien_examples() {
        let icosa = FiniteSubgroup::build(GroupName::BinaryIcosahedral).unwrap();
        assert_eq!(icosa.molien_dim(0, None).unwrap(), 1);
        assert_eq!(icosa.molien_dim(2, None).unwrap(), 0);
        assert_eq!(icosa.molien_dim(4, None).unwrap(), 0);
        assert_eq!(icosa.molien_dim(12, None).unwrap(), 1);

        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        assert_eq!(tetra.molien_dim(6, None).unwrap(), 1);
        assert_eq!(tetra.molien_dim(8, None).unwrap(), 1);
        assert_eq!(tetra.molien_dim(12, None).unwrap(), 2);
    }

    #[test]
    fn molien_agrees_with_elimination() {
        for name in [
            GroupName::Cyclic(4),
            GroupName::BinaryDihedral(2),
            GroupName::BinaryTetrahedral,
        ] {
            let g = FiniteSubgroup::build(name).unwrap();
            for d in 0..=10 {
                assert_eq!(
                    g.molien_dim(d, None).unwrap(),
                    g.invariant_dim_by_elimination(d, None),
                    "{name} degree {d}"
                );
            }
        }
    }

    #[test]
    fn odd_degrees_vanish_when_minus_one_present() {
        for name in [
            GroupName::Cyclic(4),
            GroupName::BinaryDihedral(3),
            GroupName::BinaryTetrahedral,
            GroupName::BinaryOctahedral,
            GroupName::BinaryIcosahedral,
        ] {
            let g = FiniteSubgroup::build(name).unwrap();
            assert!(g.contains_minus_identity());
            for d in (1..=15).step_by(2) {
                assert_eq!(g.molien_dim(d, None).unwrap(), 0, "{name} degree {d}");
            }
        }
    }

    #[test]
    fn semi_invariant_molien_with_character() {
        let tetra = FiniteSubgroup::build(GroupName::BinaryTetrahedral).unwrap();
        let chi = tetra.character_of(&tetrahedral_quartic()).unwrap().unwrap();
        // V itself spans the degree-4 semi-invariants of its character
        assert_eq!(tetra.molien_dim(4, Some(&chi)).unwrap(), 1);
        assert_eq!(tetra.invariant_dim_by_elimination(4, Some(&chi)), 1);
        // and there is no degree-2 semi-invariant there
        assert_eq!(tetra.molien_dim(2, Some(&chi)).unwrap(), 0);
    }
}
