//! Acceptance suite: one test per criterion, every check exact (zero
//! tolerance) unless a float appears explicitly. Each test prints its own
//! pass line; a panic is the fail line.

use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trisphere::algebra::{decompose_product, verify_group, Classification};
use trisphere::binform::{
    cross, hessian, icosahedral_form, tetrahedral_quartic, tetrahedral_quartic_conjugate,
    tetrahedral_sextic, transvectant, BinaryForm,
};
use trisphere::cyclo::{falling_factorial_ratio, CycloNum};
use trisphere::groups::{FiniteSubgroup, GroupName};
use trisphere::invariants::{fundamental, generation_check, syzygy, InvariantSystem};
use trisphere::sphere::{
    apply_generator, cg_highest, commutator, in_span, Generator, Multiplet, SphereFunction,
};

fn system(name: GroupName) -> InvariantSystem {
    fundamental(&FiniteSubgroup::build(name).unwrap()).unwrap()
}

fn family_representatives() -> Vec<GroupName> {
    vec![
        GroupName::Cyclic(5),
        GroupName::BinaryDihedral(3),
        GroupName::BinaryTetrahedral,
        GroupName::BinaryOctahedral,
        GroupName::BinaryIcosahedral,
    ]
}

/// Criterion 1: pairing multiplets on the sphere reproduces the form-side
/// transvectant of their highest weights -- for every pair of fundamental
/// seed multiplets of each family and every valid contraction order, as
/// exact equality of reduced functions.
#[test]
fn criterion_01_transvectant_correspondence() {
    for name in family_representatives() {
        let sys = system(name);
        let seeds = sys.seed_multiplets();
        for (i, (_, m1, _)) in seeds.iter().enumerate() {
            for (_, m2, _) in seeds.iter().skip(i) {
                for k in 0..=m1.two_j().min(m2.two_j()) {
                    let form_side =
                        transvectant(m1.highest_weight(), m2.highest_weight(), k).unwrap();
                    let sphere_side = cg_highest(m1, m2, k).unwrap();
                    assert_eq!(
                        sphere_side,
                        SphereFunction::from_binary_form(&form_side),
                        "{} k={}",
                        name,
                        k
                    );
                }
            }
        }
    }
    println!("criterion 1 (transvectant correspondence, all families, all k): PASS");
}

fn random_sphere_function(rng: &mut ChaCha8Rng) -> SphereFunction {
    let n_terms = rng.gen_range(1..=4);
    let mut terms = Vec::new();
    for _ in 0..n_terms {
        let exp = [
            rng.gen_range(0..4u16),
            rng.gen_range(0..4u16),
            rng.gen_range(0..4u16),
            rng.gen_range(0..4u16),
        ];
        let num = rng.gen_range(-6i64..=6);
        let den = rng.gen_range(1i64..=4);
        let mut c = CycloNum::from_ratio(num, den);
        if rng.gen_bool(0.3) {
            c = c * CycloNum::i();
        }
        terms.push((exp, c));
    }
    SphereFunction::from_terms(terms)
}

/// Criterion 2: the SU(2)^L x SU(2)^R commutation relations hold exactly on
/// a randomized suite of at least 100 sphere functions.
#[test]
fn criterion_02_operator_algebra() {
    use Generator::*;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_CAFE);
    let two = CycloNum::from_integer(2);
    for trial in 0..110 {
        let f = random_sphere_function(&mut rng);
        for (z, raise, lower) in [
            (LeftZ, LeftRaise, LeftLower),
            (RightZ, RightRaise, RightLower),
        ] {
            assert_eq!(commutator(z, raise, &f), apply_generator(raise, &f), "{trial}");
            assert_eq!(
                commutator(z, lower, &f),
                apply_generator(lower, &f).neg(),
                "{trial}"
            );
            assert_eq!(
                commutator(raise, lower, &f),
                apply_generator(z, &f).scale(&two),
                "{trial}"
            );
        }
        for l in [LeftZ, LeftRaise, LeftLower] {
            for r in [RightZ, RightRaise, RightLower] {
                assert!(commutator(l, r, &f).is_zero(), "{trial}");
            }
        }
    }
    println!("criterion 2 (operator algebra on 110 random functions): PASS");
}

/// Criterion 3: the lowering-operator factorial identity holds exactly for
/// multiplets up to spin 15.
#[test]
fn criterion_03_lowering_identity() {
    let sys = system(GroupName::BinaryIcosahedral);
    let hws = vec![
        BinaryForm::monomial(CycloNum::one(), 1, 1),
        tetrahedral_quartic(),
        tetrahedral_sextic(),
        icosahedral_form(),
        sys.hessian_form.form.clone(),
        sys.cross_form.as_ref().unwrap().form.clone(), // degree 30, spin 15
    ];
    for hw in hws {
        let m = Multiplet::from_highest_weight(&hw);
        let two_j = m.two_j();
        let mut lowered = SphereFunction::from_binary_form(&hw);
        for l in 0..=two_j {
            let factor = falling_factorial_ratio(two_j, two_j - l);
            assert_eq!(
                lowered,
                m.component(l as usize)
                    .scale(&CycloNum::from_rational(factor)),
                "degree {} l {}",
                two_j,
                l
            );
            lowered = apply_generator(Generator::RightLower, &lowered);
        }
        assert!(lowered.is_zero());
    }
    println!("criterion 3 (lowering identity up to spin 15): PASS");
}

/// Criterion 4: closure orders and exact special unitarity for every
/// element of every family.
#[test]
fn criterion_04_group_certification() {
    // cyclic orders must divide 120 for the entries to live in Q(zeta_120)
    let mut cases: Vec<(GroupName, usize)> = [2u32, 3, 4, 5, 6, 8, 10, 12]
        .into_iter()
        .map(|n| (GroupName::Cyclic(n), n as usize))
        .collect();
    cases.extend((2..=6).map(|n| (GroupName::BinaryDihedral(n), 4 * n as usize)));
    cases.push((GroupName::BinaryTetrahedral, 24));
    cases.push((GroupName::BinaryOctahedral, 48));
    cases.push((GroupName::BinaryIcosahedral, 120));
    for (name, expected) in cases {
        let g = FiniteSubgroup::build(name).unwrap();
        assert_eq!(g.order(), expected, "{name}");
        for e in &g.elements {
            assert!(e.det().is_one(), "{name}");
            assert!(e.conjugate_transpose().mul(e).is_identity(), "{name}");
        }
    }
    println!("criterion 4 (group certification n/4n/24/48/120): PASS");
}

/// Criterion 5: the cyclic-family pairings for n = 2..8 and the
/// pseudoreality span check for odd n.
#[test]
fn criterion_05_cyclic_family() {
    let st = BinaryForm::monomial(CycloNum::one(), 1, 1);
    for n in 2..=8usize {
        let e = BinaryForm::power_sum(n);
        assert!(transvectant(&st, &e, 2).unwrap().is_zero(), "n={n}");
        let t1 = transvectant(&st, &e, 1).unwrap();
        let ratio = BinaryForm::power_difference(n)
            .proportionality_to(&t1)
            .expect("proportional to s^n - t^n");
        assert!(!ratio.is_zero(), "n={n}");
        assert_eq!(ratio, CycloNum::from_ratio(-1, 2), "n={n}");
        if n % 2 == 1 {
            let plus = Multiplet::from_highest_weight(&e);
            let minus = Multiplet::from_highest_weight(&BinaryForm::power_difference(n));
            let basis: Vec<&SphereFunction> = minus.components().iter().collect();
            for comp in plus.components() {
                assert!(in_span(&comp.conj(), &basis), "n={n}");
            }
        }
    }
    println!("criterion 5 (cyclic pairings n=2..8 and odd pseudoreality): PASS");
}

/// Criterion 6: the tetrahedral battery.
#[test]
fn criterion_06_tetrahedral() {
    let sys = system(GroupName::BinaryTetrahedral);
    let v = tetrahedral_quartic();
    let chi_v = sys.quartic_seed.as_ref().unwrap().character.clone();
    assert_eq!(chi_v.order(), 3);
    assert!(transvectant(&v, &v, 4).unwrap().is_zero());

    let vv2 = transvectant(&v, &v, 2).unwrap();
    let ratio = tetrahedral_quartic_conjugate()
        .proportionality_to(&vv2)
        .expect("spin-2 block is the sign-flipped quartic");
    assert_eq!(
        ratio,
        (CycloNum::i() * CycloNum::sqrt3()).scale(&BigRational::new(2.into(), 3.into()))
    );

    // cubic blocks of the projective coordinates
    let v_sq = transvectant(&v, &v, 0).unwrap();
    assert!(transvectant(&vv2, &v, 2).unwrap().is_zero());
    assert!(transvectant(&v_sq, &v, 4).unwrap().is_zero());
    let spin0 = transvectant(&vv2, &v, 4).unwrap();
    assert_eq!(spin0.degree(), 0);
    assert!(!spin0.is_zero());

    let ch = cross(&hessian(&v).unwrap(), &v).unwrap();
    assert_eq!(
        ch,
        tetrahedral_sextic().scale(&CycloNum::from_integer(-4))
    );

    let g = &sys.group;
    assert_eq!(g.molien_dim(2, None).unwrap(), 0);
    assert_eq!(g.molien_dim(4, None).unwrap(), 0);
    assert_eq!(g.molien_dim(6, None).unwrap(), 1);
    assert_eq!(g.molien_dim(8, None).unwrap(), 1);
    assert_eq!(g.molien_dim(12, None).unwrap(), 2);
    let degrees: Vec<usize> = sys
        .invariant_generators
        .iter()
        .map(|f| f.degree())
        .collect();
    assert_eq!(degrees, vec![6, 8, 12]);
    println!("criterion 6 (tetrahedral battery): PASS");
}

/// Criterion 7: the octahedral battery.
#[test]
fn criterion_07_octahedral() {
    let sys = system(GroupName::BinaryOctahedral);
    assert_eq!(sys.seed.character.order(), 2);

    let m = Multiplet::from_highest_weight(&sys.seed.form);
    let comps = decompose_product(
        &sys,
        "P",
        &m,
        &sys.seed.character,
        "P",
        &m,
        &sys.seed.character,
    )
    .unwrap();
    let by_k = |k: u32| comps.iter().find(|c| c.k == k).unwrap();
    assert!(matches!(
        by_k(0).classification,
        Classification::DescendantOf { .. }
    ));
    assert!(matches!(
        by_k(2).classification,
        Classification::DescendantOf { .. }
    ));
    assert!(sys
        .hessian_form
        .form
        .proportionality_to(&by_k(2).highest_weight)
        .is_some());
    assert!(matches!(by_k(4).classification, Classification::Zero));
    assert!(matches!(
        by_k(6).classification,
        Classification::NormalizationConstant(_)
    ));

    // the spin-9 multiplet of the degree-18 invariant first appears among
    // quartic blocks of the projective coordinates: the verification
    // battery computes and checks the scan-reported degree
    let report = verify_group(GroupName::BinaryOctahedral, 60).unwrap();
    let spin9 = report
        .claims
        .iter()
        .find(|c| c.id == "spin9-first-block-degree")
        .unwrap();
    assert_eq!(spin9.status, trisphere::algebra::ClaimStatus::Pass);
    assert_eq!(spin9.witness["first_block"], 4);
    assert!(report.all_passed(), "octahedral battery has failures");
    println!("criterion 7 (octahedral battery, spin-9 block at degree 4): PASS");
}

/// Criterion 8: the icosahedral battery.
#[test]
fn criterion_08_icosahedral() {
    let sys = system(GroupName::BinaryIcosahedral);
    let m = Multiplet::from_highest_weight(&sys.seed.form);
    assert_eq!(m.dim(), 13);
    let comps = decompose_product(
        &sys,
        "P",
        &m,
        &sys.seed.character,
        "P",
        &m,
        &sys.seed.character,
    )
    .unwrap();
    let by_k = |k: u32| comps.iter().find(|c| c.k == k).unwrap();
    // spin 10: the degree-20 invariant
    let spin10 = by_k(2);
    let c10 = sys
        .hessian_form
        .form
        .proportionality_to(&spin10.highest_weight)
        .expect("spin-10 block is the degree-20 invariant");
    assert!(!c10.is_zero());
    // spins 8, 4, 2 vanish
    for k in [4u32, 8, 10] {
        assert!(
            matches!(by_k(k).classification, Classification::Zero),
            "k={k}"
        );
    }
    // spin 6 is a nonzero multiple of the fundamental
    let c6 = sys
        .seed
        .form
        .proportionality_to(&by_k(6).highest_weight)
        .expect("spin-6 block is the fundamental");
    assert!(!c6.is_zero());
    // spin 0 is a nonzero constant
    assert!(matches!(
        by_k(12).classification,
        Classification::NormalizationConstant(_)
    ));

    // cubic spin-15 descendant of the degree-30 invariant
    let cubic = transvectant(
        &transvectant(&sys.seed.form, &sys.seed.form, 2).unwrap(),
        &sys.seed.form,
        1,
    )
    .unwrap();
    assert_eq!(cubic.degree(), 30);
    let r = &sys.cross_form.as_ref().unwrap().form;
    let c15 = r
        .proportionality_to(&cubic)
        .expect("cubic spin-15 block is the degree-30 invariant");
    assert!(!c15.is_zero());

    let g = &sys.group;
    assert_eq!(g.molien_dim(0, None).unwrap(), 1);
    for d in 1..12 {
        assert_eq!(g.molien_dim(d, None).unwrap(), 0, "degree {d}");
    }
    for d in [12usize, 20, 30] {
        assert_eq!(g.molien_dim(d, None).unwrap(), 1, "degree {d}");
    }
    println!("criterion 8 (icosahedral battery): PASS");
}

/// Criterion 9: products of the fundamental invariants span exactly the
/// Molien dimension at every degree up to 60, for each generic family.
#[test]
fn criterion_09_generation_cross_check() {
    for name in [
        GroupName::BinaryTetrahedral,
        GroupName::BinaryOctahedral,
        GroupName::BinaryIcosahedral,
    ] {
        let sys = system(name);
        let rows = generation_check(&sys, 60).unwrap();
        assert_eq!(rows.len(), 61, "{name}");
        assert!(rows.iter().all(|r| r.rank == r.molien), "{name}");
    }
    println!("criterion 9 (generation matches Molien through degree 60): PASS");
}

/// Criterion 10: one-dimensional syzygy kernels at the expected degrees,
/// evaluating to the zero form.
#[test]
fn criterion_10_syzygies() {
    for (name, degree) in [
        (GroupName::BinaryTetrahedral, 24),
        (GroupName::BinaryOctahedral, 24),
        (GroupName::BinaryIcosahedral, 60),
    ] {
        let sys = system(name);
        // syzygy() aborts unless the kernel is exactly one-dimensional and
        // the relation evaluates to the zero form
        let syz = syzygy(&sys).unwrap();
        assert_eq!(syz.degree, degree, "{name}");
        let r2 = syz
            .terms()
            .find(|(&m, _)| m == (0, 0, 2))
            .map(|(_, c)| c.clone())
            .unwrap();
        assert!(r2.is_one(), "{name}");
    }
    println!("criterion 10 (syzygy kernels are one-dimensional): PASS");
}

/// Criterion 11: `verify all --json` is byte-identical across two
/// consecutive runs, and exits 0.
#[test]
fn criterion_11_determinism() {
    let exe = env!("CARGO_BIN_EXE_trisphere");
    let run = || {
        let out = std::process::Command::new(exe)
            .args(["verify", "all", "--json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "verify all failed");
        out.stdout
    };
    let first = run();
    let second = run();
    assert!(!first.is_empty());
    assert_eq!(first, second, "verify all --json must be byte-identical");
    println!("criterion 11 (verify all --json byte-identical): PASS");
}
