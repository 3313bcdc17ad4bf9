mod common;

use std::collections::BTreeMap;

use boole_core::models::{eval_partial, ClassAssignment, PartialValue, Universe};
use boole_core::term::{
    format_term, is_totally_interpretable, parse, term_to_poly, to_set_expression,
};
use boole_core::VarName;
use common::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn format_parse_round_trip(t in term_over(4, true)) {
        let text = format_term(&t);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(term_to_poly(&back), term_to_poly(&t));
    }

    #[test]
    fn poly_rendering_round_trip(p in poly5()) {
        prop_assert_eq!(term_to_poly(&parse(&p.to_string()).unwrap()), p);
    }

    #[test]
    fn compilation_is_sound_at_01_points(t in term_over(4, true)) {
        let p = term_to_poly(&t);
        let vs = vars(4);
        for (_, a) in points(&vs) {
            prop_assert_eq!(eval(&p, &a), eval_term_int(&t, &a));
        }
    }

    #[test]
    fn totally_interpretable_implies_idempotent(t in term_over(3, false)) {
        if is_totally_interpretable(&t) {
            prop_assert!(term_to_poly(&t).is_idempotent());
        }
    }

    #[test]
    fn boolean_combinations_are_totally_interpretable(t in interpretable_term(3)) {
        prop_assert!(is_totally_interpretable(&t));
        prop_assert!(term_to_poly(&t).is_idempotent());
    }

    #[test]
    fn set_expression_agrees_with_partial_semantics(
        t in prop_oneof![term_over(3, false), interpretable_term(3)]
    ) {
        let Ok(set) = to_set_expression(&t) else {
            prop_assert!(!is_totally_interpretable(&t));
            return Ok(());
        };
        let vs = vars(3);
        for size in 0..=3 {
            let u = Universe::new(size).unwrap();
            let n = 1u32 << size;
            for k in 0..n.pow(3) {
                let map: BTreeMap<VarName, u32> = vs
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v.clone(), k / n.pow(i as u32) % n))
                    .collect();
                let a = ClassAssignment::new(u, map).unwrap();
                let expected = set.eval_with(u.mask(), &|v: &VarName| a.get(v)).unwrap();
                prop_assert_eq!(eval_partial(&t, &a).unwrap(), PartialValue::Defined(expected));
            }
        }
    }
}
