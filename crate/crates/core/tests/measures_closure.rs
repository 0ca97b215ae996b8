//! Algebraic properties of supports, bond and the bond closure.

mod common;

use common::{all_patterns, db_strategy, strict_subsets};
use proptest::prelude::*;
use rbm_core::{
    bond, conjunctive_support, cross_support_violates, disjunctive_support, f_bond_closure,
    is_minimal_correlated, negative_support, oracle_f_bond, ClosureTriple, Rational,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn support_monotonicity_and_prop_bond(db in db_strategy(5, 7)) {
        let t = db.num_transactions() as u64;
        let pats = all_patterns(&db);
        for x in &pats {
            let (cx, dx) = (conjunctive_support(&db, x).unwrap(), disjunctive_support(&db, x).unwrap());
            let bx = bond(&db, x).unwrap();
            prop_assert_eq!(negative_support(&db, x).unwrap() + dx, t);
            prop_assert!(bx >= Rational::new(cx, t).unwrap());
            for y in pats.iter().filter(|y| x.is_strict_subset_of(y)) {
                let (cy, dy) = (conjunctive_support(&db, y).unwrap(), disjunctive_support(&db, y).unwrap());
                let by = bond(&db, y).unwrap();
                prop_assert!(cx >= cy && dx <= dy && bx >= by);
                if bx == by && cx > 0 {
                    prop_assert_eq!((cx, dx), (cy, dy));
                }
            }
        }
    }

    #[test]
    fn cross_support_never_prunes_correlated(db in db_strategy(5, 7), tenths in 1u64..=10) {
        let minbond = Rational::new(tenths, 10).unwrap();
        for p in all_patterns(&db) {
            if cross_support_violates(&db, &p, minbond).unwrap() {
                prop_assert!(bond(&db, &p).unwrap() < minbond);
            }
        }
    }

    #[test]
    fn closure_axioms_and_measure_preservation(db in db_strategy(5, 7)) {
        let live: Vec<_> = all_patterns(&db)
            .into_iter()
            .filter(|p| conjunctive_support(&db, p).unwrap() > 0)
            .collect();
        for p in &live {
            let f = f_bond_closure(&db, p).unwrap();
            prop_assert!(p.is_subset_of(&f));
            prop_assert_eq!(f_bond_closure(&db, &f).unwrap(), f.clone());
            prop_assert_eq!(Some(f.clone()), oracle_f_bond(&db, p));
            let triple = ClosureTriple::compute(&db, p).unwrap();
            prop_assert!(triple.f_bond.is_subset_of(&triple.f_c) && triple.f_bond.is_subset_of(&triple.f_d));
            prop_assert_eq!(conjunctive_support(&db, &f).unwrap(), conjunctive_support(&db, p).unwrap());
            prop_assert_eq!(disjunctive_support(&db, &f).unwrap(), disjunctive_support(&db, p).unwrap());
            for q in live.iter().filter(|q| p.is_subset_of(q)) {
                prop_assert!(f.is_subset_of(&f_bond_closure(&db, q).unwrap()));
            }
        }
    }

    #[test]
    fn classes_have_one_closed_and_some_minimal(db in db_strategy(5, 7)) {
        let live: Vec<_> = all_patterns(&db)
            .into_iter()
            .filter(|p| conjunctive_support(&db, p).unwrap() > 0)
            .collect();
        let mut closed = 0usize;
        let mut minimal = 0usize;
        for p in &live {
            if f_bond_closure(&db, p).unwrap() == *p {
                closed += 1;
            }
            let direct = is_minimal_correlated(&db, p).unwrap();
            let b = bond(&db, p).unwrap();
            let literal = strict_subsets(p).iter().all(|s| bond(&db, s).unwrap() != b);
            prop_assert_eq!(direct, literal);
            if direct {
                minimal += 1;
                // Every minimal pattern generates a distinct-or-shared closed class.
                let f = f_bond_closure(&db, p).unwrap();
                prop_assert_eq!(f_bond_closure(&db, &f).unwrap(), f);
            }
        }
        prop_assert!(closed <= minimal);
    }
}
