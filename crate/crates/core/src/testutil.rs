//! Worked-example context: five transactions over A..E encoded as 1..5.

use crate::pattern::{Item, Pattern};
use crate::rational::Rational;
use crate::transactions::TransactionDatabase;

pub const A: Item = 1;
pub const B: Item = 2;
pub const C: Item = 3;
pub const D: Item = 4;
pub const E: Item = 5;

pub fn table1() -> TransactionDatabase {
    TransactionDatabase::from_transactions([
        alloc::vec![A, C, D],
        alloc::vec![B, C, E],
        alloc::vec![A, B, C, E],
        alloc::vec![B, E],
        alloc::vec![A, B, C, E],
    ])
    .unwrap()
}

/// `pat("ABE")` → {1, 2, 5}.
pub fn pat(letters: &str) -> Pattern {
    Pattern::new(letters.bytes().map(|b| (b - b'A' + 1) as Item)).unwrap()
}

pub fn q(n: u64, d: u64) -> Rational {
    Rational::new(n, d).unwrap()
}
