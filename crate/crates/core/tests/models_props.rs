mod common;

use std::collections::BTreeMap;

use boole_core::models::*;
use boole_core::term::{parse, Term};
use boole_core::VarName;
use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn assignments(vs: &[VarName], size: usize) -> Vec<ClassAssignment> {
    let u = Universe::new(size).unwrap();
    let n = 1u32 << size;
    (0..n.pow(vs.len() as u32))
        .map(|k| {
            let map: BTreeMap<VarName, u32> = vs
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), k / n.pow(i as u32) % n))
                .collect();
            ClassAssignment::new(u, map).unwrap()
        })
        .collect()
}

fn multi(t: &Term, a: &ClassAssignment) -> Multiset {
    eval_multiset(t, &MultisetAssignment::from_classes(a)).unwrap()
}

#[test]
fn characteristic_function_identities() {
    type SetOp = fn(u32, u32, u32) -> u32;
    let identities: [(&str, SetOp); 6] = [
        ("A*B", |x, y, _u| x & y),
        ("A + B - A*B", |x, y, _u| x | y),
        ("A + B - 2*A*B", |x, y, _u| x ^ y),
        ("1 - A", |x, _y, u| u & !x),
        ("1", |_x, _y, u| u),
        ("0", |_x, _y, _u| 0),
    ];
    for size in 0..=4 {
        let u = Universe::new(size).unwrap();
        for asg in assignments(&[var("A"), var("B")], size) {
            let (x, y) = (asg.get(&var("A")).unwrap(), asg.get(&var("B")).unwrap());
            for (text, op) in &identities {
                let got = multi(&parse(text).unwrap(), &asg);
                assert_eq!(got, chi(op(x, y, u.mask()), u).unwrap(), "{text} at {asg}");
            }
        }
    }
}

#[test]
fn square_idempotent_sum_forces_disjointness() {
    let square = parse("(A + B)^2").unwrap();
    let sum = parse("A + B").unwrap();
    let prod = parse("A*B").unwrap();
    for size in 0..=3 {
        for asg in assignments(&[var("A"), var("B")], size) {
            if multi(&square, &asg) == multi(&sum, &asg) {
                assert!(multi(&prod, &asg).is_zero());
            }
        }
    }
}

#[test]
fn definedness_is_not_idempotence() {
    let t = parse("(x + y) - x*y").unwrap();
    assert!(boole_core::term::term_to_poly(&t).is_idempotent());
    let overlapping = assignments(&[var("x"), var("y")], 1)
        .into_iter()
        .find(|a| a.get(&var("x")) == Some(1) && a.get(&var("y")) == Some(1))
        .unwrap();
    assert!(matches!(
        eval_partial(&t, &overlapping).unwrap(),
        PartialValue::Undefined(_)
    ));
}

#[test]
fn pow_semantics_agree_on_characteristic_functions() {
    let t = parse("(x*(1 - y))^3").unwrap();
    for asg in assignments(&[var("x"), var("y")], 2) {
        let PartialValue::Defined(s) = eval_partial(&t, &asg).unwrap() else {
            panic!("defined");
        };
        assert_eq!(multi(&t, &asg), chi(s, asg.universe()).unwrap());
    }
}

proptest! {
    #[test]
    fn partial_and_total_semantics_cohere(t in term_over(3, true)) {
        for size in 0..=2 {
            for a in assignments(&vars(3), size) {
                if let PartialValue::Defined(s) = eval_partial(&t, &a).unwrap() {
                    prop_assert_eq!(chi(s, a.universe()).unwrap(), multi(&t, &a));
                }
            }
        }
    }

    #[test]
    fn multiset_ring_is_torsion_free(vals in prop::collection::vec(-5i64..=5, 0..6), n in 1i64..=5) {
        let m = Multiset::new(vals.into_iter().map(BigInt::from).collect());
        prop_assert_eq!(m.scale(&BigInt::from(n)).is_zero(), m.is_zero());
    }
}
