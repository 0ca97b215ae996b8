//! Random small databases and lattice helpers shared by the property suites.
#![allow(dead_code)]

use proptest::prelude::*;
use rbm_core::{Item, MiningParams, Pattern, Rational, TransactionDatabase};

/// Rows over items `1..=max_items`; at least one row is non-empty.
pub fn db_strategy(max_items: u32, max_rows: usize) -> impl Strategy<Value = TransactionDatabase> {
    prop::collection::vec(
        prop::collection::btree_set(1..=max_items, 0..=max_items as usize),
        1..=max_rows,
    )
    .prop_filter_map("needs a non-empty row", |rows| {
        TransactionDatabase::from_transactions(
            rows.into_iter()
                .map(|r| r.into_iter().collect::<Vec<Item>>()),
        )
        .ok()
    })
}

/// Databases plus thresholds drawn relative to `|T|`.
pub fn mining_case(
    max_items: u32,
    max_rows: usize,
) -> impl Strategy<Value = (TransactionDatabase, MiningParams)> {
    db_strategy(max_items, max_rows).prop_flat_map(|db| {
        let t = db.num_transactions() as u64;
        (Just(db), 1..=t + 1, 1u64..=10).prop_map(move |(db, minsupp, tenths)| {
            let params =
                MiningParams::for_db(&db, minsupp, Rational::new(tenths, 10).unwrap()).unwrap();
            (db, params)
        })
    })
}

/// Every non-empty pattern over the database's items.
pub fn all_patterns(db: &TransactionDatabase) -> Vec<Pattern> {
    let items = db.items();
    (1u32..1 << items.len())
        .map(|mask| {
            Pattern::new(
                (0..items.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| items[b]),
            )
            .unwrap()
        })
        .collect()
}

/// Non-empty strict subsets of `p`.
pub fn strict_subsets(p: &Pattern) -> Vec<Pattern> {
    let items = p.items();
    let full = (1u32 << items.len()) - 1;
    (1..full)
        .map(|mask| {
            Pattern::new(
                (0..items.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| items[b]),
            )
            .unwrap()
        })
        .collect()
}
