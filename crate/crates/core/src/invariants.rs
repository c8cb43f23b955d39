//! Fundamental (semi-)invariant systems of the finite subgroups of SU(2).
//!
//! For the generic groups (tetrahedral, octahedral, icosahedral) the system
//! is the classical triple: a lowest-degree seed P, its Hessian Q, and the
//! cross product R of the two, tied by a single syzygy found here as an
//! exact one-dimensional nullspace. The cyclic and binary dihedral families
//! are the documented exceptions: the Hessian of the seed degenerates (a
//! constant, respectively a multiple of the seed) and a second independent
//! generator enters instead.
//!
//! Nothing is copied from classical tables: every stored form is certified
//! on the spot (semi-invariance, expected degree, Molien count) and every
//! proportionality constant is computed and kept exactly as the transvectant
//! normalization produces it.

use std::collections::HashMap;

use crate::binform::{cross, hessian, icosahedral_form, tetrahedral_quartic,
    tetrahedral_quartic_conjugate, tetrahedral_sextic, BinaryForm};
use crate::cyclo::{CycloMatrix, CycloNum};
use crate::error::Error;
use crate::groups::{Character, FiniteSubgroup, GroupName};
use crate::sphere::Multiplet;

/// A certified (semi-)invariant generator with its character.
#[derive(Clone, Debug)]
pub struct NamedForm {
    pub name: String,
    pub form: BinaryForm,
    pub character: Character,
}

impl NamedForm {
    fn certify(name: &str, form: BinaryForm, group: &FiniteSubgroup) -> Result<Self, Error> {
        let character = group.character_of(&form)?.ok_or_else(|| {
            Error::Certification(format!(
                "{} is not a semi-invariant of {}",
                name, group.name
            ))
        })?;
        Ok(NamedForm {
            name: name.to_string(),
            form,
            character,
        })
    }

    pub fn degree(&self) -> usize {
        self.form.degree()
    }

    pub fn is_invariant(&self) -> bool {
        self.character.is_trivial()
    }
}

/// How the Hessian of the seed behaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HessianBehavior {
    /// Nonzero with its own degree (the generic construction applies).
    Generic,
    /// A constant: the cyclic exception.
    Constant(CycloNum),
    /// Proportional to the seed itself: the dihedral exception.
    ProportionalToSeed(CycloNum),
}

/// The fundamental system of one group.
#[derive(Clone, Debug)]
pub struct InvariantSystem {
    pub group: FiniteSubgroup,
    /// P: the lowest-degree seed (fully invariant except octahedral).
    pub seed: NamedForm,
    /// Q = hessian(P), whatever it turns out to be.
    pub hessian_form: NamedForm,
    /// R = cross(P, Q) when the generic construction applies.
    pub cross_form: Option<NamedForm>,
    /// Second independent generator for the exceptional families.
    pub extra: Option<NamedForm>,
    /// The semi-invariant quartic seeding the projective embedding
    /// (tetrahedral V; the octahedral case reuses `seed`).
    pub quartic_seed: Option<NamedForm>,
    pub hessian_behavior: HessianBehavior,
    /// Fully invariant generators of the invariant ring, used by the
    /// generation cross-check.
    pub invariant_generators: Vec<NamedForm>,
}

impl InvariantSystem {
    /// All certified named (semi-)invariants, for span solving and reports.
    pub fn named_forms(&self) -> Vec<&NamedForm> {
        let mut out = vec![&self.seed, &self.hessian_form];
        if let Some(r) = &self.cross_form {
            out.push(r);
        }
        if let Some(e) = &self.extra {
            out.push(e);
        }
        if let Some(v) = &self.quartic_seed {
            out.push(v);
        }
        for g in &self.invariant_generators {
            if !out.iter().any(|f| f.name == g.name) {
                out.push(g);
            }
        }
        out
    }

    /// The multiplets whose products the scans decompose: one per
    /// fundamental (semi-)invariant of the family.
    pub fn seed_multiplets(&self) -> Vec<(String, Multiplet, Character)> {
        let mut out = Vec::new();
        let mut push = |nf: &NamedForm| {
            out.push((
                nf.name.clone(),
                Multiplet::from_highest_weight(&nf.form),
                nf.character.clone(),
            ));
        };
        match self.group.name {
            GroupName::Cyclic(_) | GroupName::BinaryDihedral(_) => {
                push(&self.seed);
                push(self.extra.as_ref().expect("exceptional family has extra"));
            }
            GroupName::BinaryTetrahedral => {
                push(self.quartic_seed.as_ref().expect("tetrahedral has V"));
                push(&self.seed);
                push(&self.hessian_form);
                push(self.cross_form.as_ref().expect("generic family has R"));
            }
            GroupName::BinaryOctahedral | GroupName::BinaryIcosahedral => {
                push(&self.seed);
                push(&self.hessian_form);
                push(self.cross_form.as_ref().expect("generic family has R"));
            }
        }
        out
    }
}

/// Builds and certifies the fundamental system of the group.
pub fn fundamental(group: &FiniteSubgroup) -> Result<InvariantSystem, Error> {
    let st = BinaryForm::monomial(CycloNum::one(), 1, 1);
    match group.name {
        GroupName::Cyclic(n) => {
            let seed = NamedForm::certify("P", st.clone(), group)?;
            expect_invariant(&seed, group)?;
            let hess = hessian(&seed.form)?;
            let behavior = HessianBehavior::Constant(hess.coeff(0).clone());
            let hessian_form = NamedForm::certify("Q", hess, group)?;
            let extra = NamedForm::certify("E", BinaryForm::power_sum(n as usize), group)?;
            expect_invariant(&extra, group)?;
            let f = cross(&seed.form, &extra.form)?;
            let derived = NamedForm::certify("F", f, group)?;
            expect_invariant(&derived, group)?;
            let invariant_generators = vec![seed.clone(), extra.clone(), derived];
            Ok(InvariantSystem {
                group: group.clone(),
                seed,
                hessian_form,
                cross_form: None,
                extra: Some(extra),
                quartic_seed: None,
                hessian_behavior: behavior,
                invariant_generators,
            })
        }
        GroupName::BinaryDihedral(n) => {
            let p = st.mul(&st);
            let seed = NamedForm::certify("P", p, group)?;
            expect_invariant(&seed, group)?;
            let hess = hessian(&seed.form)?;
            let ratio = seed.form.proportionality_to(&hess).ok_or_else(|| {
                Error::Certification(
                    "dihedral Hessian is expected to be proportional to the seed".into(),
                )
            })?;
            let behavior = HessianBehavior::ProportionalToSeed(ratio);
            let hessian_form = NamedForm::certify("Q", hess, group)?;
            let extra =
                NamedForm::certify("E", BinaryForm::power_sum(2 * n as usize), group)?;
            expect_invariant(&extra, group)?;
            let derived = NamedForm::certify("F", cross(&seed.form, &extra.form)?, group)?;
            expect_invariant(&derived, group)?;
            let invariant_generators = vec![seed.clone(), extra.clone(), derived];
            Ok(InvariantSystem {
                group: group.clone(),
                seed,
                hessian_form,
                cross_form: None,
                extra: Some(extra),
                quartic_seed: None,
                hessian_behavior: behavior,
                invariant_generators,
            })
        }
        GroupName::BinaryTetrahedral => {
            let quartic = NamedForm::certify("V", tetrahedral_quartic(), group)?;
            expect_character_order(&quartic, 3)?;
            let seed = NamedForm::certify("P", tetrahedral_sextic(), group)?;
            expect_invariant(&seed, group)?;
            let (hessian_form, cross_form) = generic_pair(&seed, group)?;
            // the conjugate-type quartic is kept as a named generator: the
            // spin-2 part of V x V lands on it
            let conj_quartic =
                NamedForm::certify("W", tetrahedral_quartic_conjugate(), group)?;
            expect_character_order(&conj_quartic, 3)?;
            let invariant_generators =
                vec![seed.clone(), hessian_form.clone(), cross_form.clone()];
            let mut sys = InvariantSystem {
                group: group.clone(),
                seed,
                hessian_form,
                cross_form: Some(cross_form),
                extra: Some(conj_quartic),
                quartic_seed: Some(quartic),
                hessian_behavior: HessianBehavior::Generic,
                invariant_generators,
            };
            certify_generic_degrees(&mut sys)?;
            Ok(sys)
        }
        GroupName::BinaryOctahedral => {
            let seed = NamedForm::certify("P", tetrahedral_sextic(), group)?;
            expect_character_order(&seed, 2)?;
            let (hessian_form, cross_form) = generic_pair(&seed, group)?;
            expect_invariant(&hessian_form, group)?;
            expect_character_order(&cross_form, 2)?;
            // fully invariant generators: Q (8), P^2 (12), P*R (18)
            let p_sq = NamedForm::certify("P^2", seed.form.mul(&seed.form), group)?;
            expect_invariant(&p_sq, group)?;
            let pr = NamedForm::certify("P*R", seed.form.mul(&cross_form.form), group)?;
            expect_invariant(&pr, group)?;
            let invariant_generators = vec![hessian_form.clone(), p_sq, pr];
            let mut sys = InvariantSystem {
                group: group.clone(),
                seed: seed.clone(),
                hessian_form,
                cross_form: Some(cross_form),
                extra: None,
                quartic_seed: Some(seed),
                hessian_behavior: HessianBehavior::Generic,
                invariant_generators,
            };
            certify_generic_degrees(&mut sys)?;
            Ok(sys)
        }
        GroupName::BinaryIcosahedral => {
            let seed = NamedForm::certify("P", icosahedral_form(), group)?;
            expect_invariant(&seed, group)?;
            if group.molien_dim(12, None)? != 1 {
                return Err(Error::Certification(
                    "icosahedral degree-12 invariants are not one-dimensional".into(),
                ));
            }
            let (hessian_form, cross_form) = generic_pair(&seed, group)?;
            expect_invariant(&hessian_form, group)?;
            expect_invariant(&cross_form, group)?;
            let invariant_generators =
                vec![seed.clone(), hessian_form.clone(), cross_form.clone()];
            let mut sys = InvariantSystem {
                group: group.clone(),
                seed,
                hessian_form,
                cross_form: Some(cross_form),
                extra: None,
                quartic_seed: None,
                hessian_behavior: HessianBehavior::Generic,
                invariant_generators,
            };
            certify_generic_degrees(&mut sys)?;
            Ok(sys)
        }
    }
}

fn generic_pair(
    seed: &NamedForm,
    group: &FiniteSubgroup,
) -> Result<(NamedForm, NamedForm), Error> {
    let q = hessian(&seed.form)?;
    if q.is_zero() {
        return Err(Error::Certification(format!(
            "Hessian of {} collapsed to zero",
            seed.name
        )));
    }
    let q = NamedForm::certify("Q", q, group)?;
    let r = cross(&seed.form, &q.form)?;
    if r.is_zero() {
        return Err(Error::Certification(
            "cross product of seed and Hessian collapsed to zero".into(),
        ));
    }
    let r = NamedForm::certify("R", r, group)?;
    Ok((q, r))
}

fn expect_invariant(nf: &NamedForm, group: &FiniteSubgroup) -> Result<(), Error> {
    if !nf.is_invariant() {
        return Err(Error::Certification(format!(
            "{} is not fully invariant under {}",
            nf.name, group.name
        )));
    }
    Ok(())
}

fn expect_character_order(nf: &NamedForm, order: u32) -> Result<(), Error> {
    if nf.character.order() != order {
        return Err(Error::Certification(format!(
            "{} has character order {}, expected {}",
            nf.name,
            nf.character.order(),
            order
        )));
    }
    Ok(())
}

fn certify_generic_degrees(sys: &mut InvariantSystem) -> Result<(), Error> {
    let dp = sys.seed.degree();
    let dq = sys.hessian_form.degree();
    let dr = sys.cross_form.as_ref().map(|r| r.degree()).unwrap_or(0);
    if dq != 2 * dp - 4 || dr != dp + dq - 2 {
        return Err(Error::Certification(format!(
            "degree arithmetic broke: P {} Q {} R {}",
            dp, dq, dr
        )));
    }
    for g in &sys.invariant_generators {
        let dim = sys.group.molien_dim(g.degree(), None)?;
        if dim == 0 {
            return Err(Error::Certification(format!(
                "Molien reports no invariant at degree {} but {} exists",
                g.degree(),
                g.name
            )));
        }
    }
    Ok(())
}

/// The single relation among P, Q, R at the degree of R^2.
#[derive(Clone, Debug)]
pub struct Syzygy {
    pub degree: usize,
    /// Exponent triples (a, b, c) of the monomials P^a Q^b R^c considered.
    pub monomials: Vec<(u32, u32, u32)>,
    /// Relation coefficients, normalized so R^2 carries coefficient 1.
    pub coefficients: Vec<CycloNum>,
}

impl Syzygy {
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &CycloNum)> {
        self.monomials.iter().zip(self.coefficients.iter())
    }
}

/// Finds the syzygy of a generic system by exact nullspace: enumerate the
/// monomials P^a Q^b R^c of degree deg(R^2), stack their coefficient
/// vectors, and demand a one-dimensional kernel.
pub fn syzygy(sys: &InvariantSystem) -> Result<Syzygy, Error> {
    let Some(cross_form) = &sys.cross_form else {
        return Err(Error::UnsupportedGroup(format!(
            "{} has a degenerate Hessian; no P,Q,R syzygy",
            sys.group.name
        )));
    };
    let dp = sys.seed.degree();
    let dq = sys.hessian_form.degree();
    let dr = cross_form.degree();
    let target = 2 * dr;
    let mut monomials = Vec::new();
    for a in 0..=(target / dp) as u32 {
        for b in 0..=(target / dq) as u32 {
            let partial = a as usize * dp + b as usize * dq;
            if partial > target {
                continue;
            }
            let rem = target - partial;
            if rem % dr == 0 {
                monomials.push((a, b, (rem / dr) as u32));
            }
        }
    }
    let columns: Vec<Vec<CycloNum>> = monomials
        .iter()
        .map(|&(a, b, c)| {
            let f = sys
                .seed
                .form
                .pow(a)
                .mul(&sys.hessian_form.form.pow(b))
                .mul(&cross_form.form.pow(c));
            f.coeffs().to_vec()
        })
        .collect();
    let kernel = CycloMatrix::from_columns(&columns).nullspace();
    if kernel.len() != 1 {
        return Err(Error::Certification(format!(
            "syzygy kernel for {} has dimension {}, expected 1",
            sys.group.name,
            kernel.len()
        )));
    }
    let mut coefficients = kernel.into_iter().next().unwrap();
    let r2 = monomials
        .iter()
        .position(|&(a, b, c)| (a, b, c) == (0, 0, 2))
        .ok_or_else(|| Error::Certification("R^2 missing from the monomial list".into()))?;
    let scale = coefficients[r2].inv().map_err(|_| {
        Error::Certification("relation does not involve R^2".into())
    })?;
    for c in coefficients.iter_mut() {
        *c = &*c * &scale;
    }
    // the relation must evaluate to the zero form exactly
    let mut acc = BinaryForm::zero(target);
    for (&(a, b, c), coeff) in monomials.iter().zip(coefficients.iter()) {
        let f = sys
            .seed
            .form
            .pow(a)
            .mul(&sys.hessian_form.form.pow(b))
            .mul(&cross_form.form.pow(c));
        acc = acc.add(&f.scale(coeff))?;
    }
    if !acc.is_zero() {
        return Err(Error::Certification(
            "syzygy does not evaluate to the zero form".into(),
        ));
    }
    Ok(Syzygy {
        degree: target,
        monomials,
        coefficients,
    })
}

/// One row of the generation cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationRow {
    pub degree: usize,
    pub products: usize,
    pub rank: usize,
    pub molien: usize,
}

/// Klein generation cross-check: at every degree up to the bound, the span
/// of products of the fully invariant generators must have exactly the
/// dimension the Molien oracle predicts. A mismatch is a certification
/// failure, not a report entry.
pub fn generation_check(
    sys: &InvariantSystem,
    max_degree: usize,
) -> Result<Vec<GenerationRow>, Error> {
    let gens = &sys.invariant_generators;
    let degrees: Vec<usize> = gens.iter().map(|g| g.degree()).collect();
    let mut power_cache: HashMap<(usize, u32), BinaryForm> = HashMap::new();
    let pow = |i: usize, e: u32, cache: &mut HashMap<(usize, u32), BinaryForm>| {
        if let Some(f) = cache.get(&(i, e)) {
            return f.clone();
        }
        let f = gens[i].form.pow(e);
        cache.insert((i, e), f.clone());
        f
    };
    let mut rows = Vec::new();
    for d in 0..=max_degree {
        let tuples = exponent_tuples(&degrees, d);
        let columns: Vec<Vec<CycloNum>> = tuples
            .iter()
            .map(|exps| {
                let mut f = BinaryForm::constant(CycloNum::one());
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        f = f.mul(&pow(i, e, &mut power_cache));
                    }
                }
                f.coeffs().to_vec()
            })
            .collect();
        let rank = if columns.is_empty() {
            0
        } else {
            CycloMatrix::from_columns(&columns).rank()
        };
        let molien = sys.group.molien_dim(d, None)?;
        if rank != molien {
            return Err(Error::Certification(format!(
                "generation check failed for {} at degree {}: rank {} vs Molien {}",
                sys.group.name, d, rank, molien
            )));
        }
        rows.push(GenerationRow {
            degree: d,
            products: tuples.len(),
            rank,
            molien,
        });
    }
    Ok(rows)
}

/// All exponent tuples with sum(e_i * degrees_i) = target. The degree-0
/// target yields the single empty product.
fn exponent_tuples(degrees: &[usize], target: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; degrees.len()];
    fn recurse(
        degrees: &[usize],
        idx: usize,
        remaining: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == degrees.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let d = degrees[idx];
        let max = if d == 0 { 0 } else { remaining / d };
        for e in 0..=max {
            current[idx] = e as u32;
            recurse(degrees, idx + 1, remaining - e * d, current, out);
        }
        current[idx] = 0;
    }
    recurse(degrees, 0, target, &mut current, &mut out);
    out
}
