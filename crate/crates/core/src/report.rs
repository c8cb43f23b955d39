//! JSON encodings of the domain types.
//!
//! The JSON layer is for reports only; nothing is ever parsed back into a
//! decision path. Rational coordinates are emitted as decimal-string pairs
//! so consumers cannot overflow on big numerators, and every object routes
//! through `serde_json::Value`, whose map keys are sorted -- identical
//! inputs give byte-identical output.

use serde_json::{json, Map, Value};

use crate::algebra::{ClaimReport, ClaimStatus, Classification, GroupReport, SpinComponent};
use crate::binform::BinaryForm;
use crate::cyclo::CycloNum;
use crate::groups::{FiniteSubgroup, GroupElement};
use crate::invariants::{GenerationRow, HessianBehavior, InvariantSystem, NamedForm, Syzygy};
use crate::sphere::{Multiplet, SphereFunction};

/// `{"coeffs": [[num, den] x 32], "approx": [re, im]}`.
pub fn cyclo(c: &CycloNum) -> Value {
    let coeffs: Vec<Value> = c
        .coeffs()
        .iter()
        .map(|q| json!([q.numer().to_string(), q.denom().to_string()]))
        .collect();
    let (re, im) = c.approx();
    json!({"coeffs": coeffs, "approx": [re, im]})
}

/// `{"degree": d, "coeffs": [CycloNum x (d+1)]}` plus a rendered string.
pub fn binary_form(f: &BinaryForm) -> Value {
    json!({
        "degree": f.degree(),
        "coeffs": f.coeffs().iter().map(cyclo).collect::<Vec<_>>(),
        "text": f.to_string(),
    })
}

/// Sorted list of `{"exp": [a,b,c,d], "coeff": CycloNum}`.
pub fn sphere_function(f: &SphereFunction) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(exp, c)| {
            json!({
                "exp": [exp[0], exp[1], exp[2], exp[3]],
                "coeff": cyclo(c),
            })
        })
        .collect();
    Value::Array(terms)
}

/// `{"twoJ": n, "components": [SphereFunction...]}`.
pub fn multiplet(m: &Multiplet) -> Value {
    json!({
        "twoJ": m.two_j(),
        "components": m.components().iter().map(sphere_function).collect::<Vec<_>>(),
    })
}

pub fn group_element(e: &GroupElement) -> Value {
    json!([
        [cyclo(e.entry(0, 0)), cyclo(e.entry(0, 1))],
        [cyclo(e.entry(1, 0)), cyclo(e.entry(1, 1))],
    ])
}

pub fn group(g: &FiniteSubgroup) -> Value {
    json!({
        "name": g.name.to_string(),
        "order": g.order(),
        "element_count": g.order(),
        "center_size": g.center().len(),
        "generators": g.generators.iter().map(group_element).collect::<Vec<_>>(),
    })
}

fn named_form(nf: &NamedForm) -> Value {
    json!({
        "name": nf.name,
        "degree": nf.degree(),
        "character_order": nf.character.order(),
        "invariant": nf.is_invariant(),
        "form": binary_form(&nf.form),
    })
}

pub fn syzygy_value(s: &Syzygy) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .map(|(&(a, b, c), coeff)| {
            json!({
                "exponents": [a, b, c],
                "monomial": format!("P^{} Q^{} R^{}", a, b, c),
                "coefficient": cyclo(coeff),
            })
        })
        .collect();
    json!({"degree": s.degree, "terms": terms})
}

pub fn invariant_system(
    sys: &InvariantSystem,
    syz: Option<&Syzygy>,
    molien: &[(usize, usize)],
    generation: Option<&[GenerationRow]>,
) -> Value {
    let mut obj = Map::new();
    obj.insert("group".into(), json!(sys.group.name.to_string()));
    obj.insert(
        "forms".into(),
        Value::Array(sys.named_forms().into_iter().map(named_form).collect()),
    );
    obj.insert(
        "hessian_behavior".into(),
        match &sys.hessian_behavior {
            HessianBehavior::Generic => json!("generic"),
            HessianBehavior::Constant(c) => json!({"constant": cyclo(c)}),
            HessianBehavior::ProportionalToSeed(c) => {
                json!({"proportional_to_seed": cyclo(c)})
            }
        },
    );
    obj.insert(
        "invariant_generator_degrees".into(),
        json!(sys
            .invariant_generators
            .iter()
            .map(|g| g.degree())
            .collect::<Vec<_>>()),
    );
    obj.insert(
        "molien".into(),
        Value::Array(
            molien
                .iter()
                .map(|&(d, dim)| json!({"degree": d, "dim": dim}))
                .collect(),
        ),
    );
    if let Some(s) = syz {
        obj.insert("syzygy".into(), syzygy_value(s));
    }
    if let Some(rows) = generation {
        obj.insert(
            "generation".into(),
            Value::Array(
                rows.iter()
                    .map(|r| {
                        json!({
                            "degree": r.degree,
                            "products": r.products,
                            "rank": r.rank,
                            "molien": r.molien,
                        })
                    })
                    .collect(),
            ),
        );
    }
    Value::Object(obj)
}

fn classification(c: &Classification) -> Value {
    match c {
        Classification::Zero => json!({"kind": "zero"}),
        Classification::DescendantOf {
            expression,
            combination,
        } => json!({
            "kind": "descendant",
            "expression": expression,
            "combination": combination
                .iter()
                .map(|(name, coeff)| json!({"monomial": name, "coefficient": cyclo(coeff)}))
                .collect::<Vec<_>>(),
        }),
        Classification::NormalizationConstant(c) => {
            json!({"kind": "normalization-constant", "value": cyclo(c)})
        }
        Classification::Unclassified => json!({"kind": "unclassified"}),
    }
}

pub fn spin_component(c: &SpinComponent) -> Value {
    json!({
        "source": c.source,
        "source_two_spins": [c.source_two_spins.0, c.source_two_spins.1],
        "k": c.k,
        "result_two_spin": c.result_two_spin,
        "degree": c.degree(),
        "character_order": c.character_order(),
        "classification": classification(&c.classification),
        "highest_weight": binary_form(&c.highest_weight),
    })
}

pub fn claim(c: &ClaimReport) -> Value {
    json!({
        "id": c.id,
        "statement": c.statement,
        "status": match c.status {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
        },
        "witness": c.witness,
    })
}

pub fn group_report(r: &GroupReport) -> Value {
    json!({
        "group": r.group,
        "passed": r.all_passed(),
        "claims": r.claims.iter().map(claim).collect::<Vec<_>>(),
    })
}

/// Canonical serialization: sorted keys (Value maps are BTree-backed),
/// two-space indentation, trailing newline.
pub fn to_pretty_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}
