//! Conjunctive, disjunctive and negative supports, and the bond measure.

use core::fmt;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::rational::Rational;
use crate::transactions::TransactionDatabase;

/// A pattern with its conjunctive and disjunctive supports.
///
/// `0 < conj ≤ disj` always holds; zero-support patterns are never
/// materialized. The negative support is `|T| − disj` and is not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MeasuredPattern {
    pub pattern: Pattern,
    pub conj: u64,
    pub disj: u64,
    pub bond: Rational,
}

impl MeasuredPattern {
    pub fn new(pattern: Pattern, conj: u64, disj: u64) -> Result<Self> {
        if conj == 0 {
            return Err(Error::UndefinedClosure);
        }
        if conj > disj {
            return Err(Error::CorruptRepresentation(alloc::format!(
                "{pattern}: conjunctive support {conj} exceeds disjunctive support {disj}"
            )));
        }
        Ok(MeasuredPattern {
            pattern,
            conj,
            disj,
            bond: Rational::from_counts(conj, disj),
        })
    }

    pub fn negative(&self, num_transactions: u64) -> u64 {
        num_transactions.saturating_sub(self.disj)
    }

    /// Measures `p` against `db`; `None` when `p` has zero conjunctive support.
    pub fn measure(db: &TransactionDatabase, p: &Pattern) -> Result<Option<Self>> {
        let conj = conjunctive_support(db, p)?;
        if conj == 0 {
            return Ok(None);
        }
        let disj = disjunctive_support(db, p)?;
        Ok(Some(MeasuredPattern {
            pattern: p.clone(),
            conj,
            disj,
            bond: Rational::from_counts(conj, disj),
        }))
    }
}

impl fmt::Display for MeasuredPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.pattern, self.conj, self.bond)
    }
}

/// `Supp(∧p)`: transactions containing every item of `p`.
pub fn conjunctive_support(db: &TransactionDatabase, p: &Pattern) -> Result<u64> {
    Ok(db.cover(p)?.count())
}

/// `Supp(∨p)`: transactions containing at least one item of `p`.
pub fn disjunctive_support(db: &TransactionDatabase, p: &Pattern) -> Result<u64> {
    Ok(db.universe(p)?.count())
}

/// `Supp(¬p) = |T| − Supp(∨p)`.
pub fn negative_support(db: &TransactionDatabase, p: &Pattern) -> Result<u64> {
    Ok(db.num_transactions() as u64 - disjunctive_support(db, p)?)
}

pub fn bond(db: &TransactionDatabase, p: &Pattern) -> Result<Rational> {
    let disj = disjunctive_support(db, p)?;
    if disj == 0 {
        return Err(Error::UndefinedMeasure);
    }
    Ok(Rational::from_counts(conjunctive_support(db, p)?, disj))
}

/// True iff some pair of items of `p` has a support ratio below `minbond`,
/// i.e. `min item support / max item support < minbond`. Such a pattern cannot
/// be correlated.
pub fn cross_support_violates(
    db: &TransactionDatabase,
    p: &Pattern,
    minbond: Rational,
) -> Result<bool> {
    let mut lo = u64::MAX;
    let mut hi = 0;
    for &i in p.items() {
        let s = db.item_support(i)?;
        lo = lo.min(s);
        hi = hi.max(s);
    }
    if hi == 0 {
        return Err(Error::UndefinedMeasure);
    }
    Ok(Rational::from_counts(lo, hi) < minbond)
}

/// `MinR = MinS / MaxS` over all items. For `minbond ≤ MinR` no pattern
/// violates the cross-support condition.
pub fn cross_support_trivial_threshold(db: &TransactionDatabase) -> Result<Rational> {
    let (lo, hi) = db
        .item_supports()
        .fold((u64::MAX, 0), |(lo, hi), s| (lo.min(s), hi.max(s)));
    if hi == 0 {
        return Err(Error::EmptyDatabase);
    }
    Ok(Rational::from_counts(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{pat, q, table1};
    use crate::Item;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn supports_on_worked_example() {
        let db = table1();
        assert_eq!(conjunctive_support(&db, &pat("AD")).unwrap(), 1);
        assert_eq!(conjunctive_support(&db, &pat("B")).unwrap(), 4);
        assert_eq!(conjunctive_support(&db, &pat("ABCDE")).unwrap(), 0);
        assert_eq!(disjunctive_support(&db, &pat("AD")).unwrap(), 3);
        assert_eq!(disjunctive_support(&db, &pat("ABCE")).unwrap(), 5);
        assert_eq!(negative_support(&db, &pat("AD")).unwrap(), 2);
        assert_eq!(negative_support(&db, &pat("ABCE")).unwrap(), 0);
        assert_eq!(negative_support(&db, &pat("D")).unwrap(), 4);
        for item in db.items() {
            let p = Pattern::singleton(*item);
            assert_eq!(
                conjunctive_support(&db, &p).unwrap(),
                disjunctive_support(&db, &p).unwrap()
            );
        }
    }

    #[test]
    fn bond_on_worked_example() {
        let db = table1();
        let b = bond(&db, &pat("BCE")).unwrap();
        assert_eq!((b.numer(), b.denom()), (3, 5));
        assert_eq!(bond(&db, &pat("AB")).unwrap(), q(2, 5));
        for item in db.items() {
            assert_eq!(
                bond(&db, &Pattern::singleton(*item)).unwrap(),
                Rational::ONE
            );
        }
    }

    #[test]
    fn unknown_items_are_rejected() {
        let db = table1();
        let p = Pattern::new([1, 6]).unwrap();
        assert_eq!(conjunctive_support(&db, &p), Err(Error::UnknownItem(6)));
        assert_eq!(bond(&db, &p), Err(Error::UnknownItem(6)));
        assert_eq!(
            cross_support_violates(&db, &p, q(1, 2)),
            Err(Error::UnknownItem(6))
        );
    }

    #[test]
    fn cross_support_examples() {
        let db = table1();
        assert!(cross_support_violates(&db, &pat("AD"), q(40, 100)).unwrap());
        assert!(cross_support_violates(&db, &pat("AC"), q(80, 100)).unwrap());
        assert_eq!(cross_support_trivial_threshold(&db).unwrap(), q(1, 4));
        for mask in 1u32..32 {
            let p = Pattern::new((0..5).filter(|b| mask & (1 << b) != 0).map(|b| b + 1)).unwrap();
            assert!(!cross_support_violates(&db, &p, q(20, 100)).unwrap());
        }
    }

    #[test]
    fn trivial_threshold_edge_cases() {
        let equal = TransactionDatabase::from_transactions(vec![vec![1, 2], vec![1, 2]]).unwrap();
        assert_eq!(
            cross_support_trivial_threshold(&equal).unwrap(),
            Rational::ONE
        );
        let single =
            TransactionDatabase::from_transactions(vec![vec![7], vec![7], vec![7]]).unwrap();
        let r = cross_support_trivial_threshold(&single).unwrap();
        assert_eq!((r.numer(), r.denom()), (3, 3));
    }

    #[test]
    fn measured_pattern_rejects_zero_support() {
        let db = table1();
        assert_eq!(MeasuredPattern::measure(&db, &pat("ABCDE")).unwrap(), None);
        let m = MeasuredPattern::measure(&db, &pat("AD")).unwrap().unwrap();
        assert_eq!((m.conj, m.disj, m.negative(5)), (1, 3, 2));
        assert!(MeasuredPattern::new(pat("A"), 0, 3).is_err());
        assert!(MeasuredPattern::new(pat("A"), 4, 3).is_err());
    }

    mod props {
        use super::*;
        use crate::TransactionDatabase;
        use proptest::prelude::*;

        fn small_db() -> impl Strategy<Value = TransactionDatabase> {
            prop::collection::vec(prop::collection::vec(0u32..6, 1..5), 1..10)
                .prop_map(|rows| TransactionDatabase::from_transactions(rows).unwrap())
        }

        fn all_patterns(db: &TransactionDatabase) -> Vec<Pattern> {
            let items = db.items();
            (1u32..(1 << items.len()))
                .map(|m| {
                    Pattern::new(
                        (0..items.len())
                            .filter(|b| m & (1 << b) != 0)
                            .map(|b| items[b] as Item),
                    )
                    .unwrap()
                })
                .collect()
        }

        proptest! {
            #[test]
            fn support_and_bond_monotonicity(db in small_db()) {
                let pats = all_patterns(&db);
                let t = db.num_transactions() as u64;
                for x in &pats {
                    let cx = conjunctive_support(&db, x).unwrap();
                    let dx = disjunctive_support(&db, x).unwrap();
                    let bx = bond(&db, x).unwrap();
                    prop_assert_eq!(negative_support(&db, x).unwrap() + dx, t);
                    prop_assert!(bx >= Rational::from_counts(cx, t));
                    for y in &pats {
                        if !x.is_strict_subset_of(y) { continue; }
                        let cy = conjunctive_support(&db, y).unwrap();
                        let dy = disjunctive_support(&db, y).unwrap();
                        let by = bond(&db, y).unwrap();
                        prop_assert!(cx >= cy);
                        prop_assert!(dx <= dy);
                        prop_assert!(bx >= by);
                        if bx == by && cx > 0 {
                            prop_assert_eq!(cx, cy);
                            prop_assert_eq!(dx, dy);
                        }
                    }
                }
            }

            #[test]
            fn cross_support_is_sound(db in small_db(), n in 1u64..10, d in 1u64..10) {
                prop_assume!(n <= d);
                let minbond = Rational::new(n, d).unwrap();
                let min_r = cross_support_trivial_threshold(&db).unwrap();
                for x in all_patterns(&db) {
                    let violates = cross_support_violates(&db, &x, minbond).unwrap();
                    if violates {
                        prop_assert!(bond(&db, &x).unwrap() < minbond);
                    }
                    if minbond <= min_r {
                        prop_assert!(!violates);
                    }
                }
            }
        }
    }
}
