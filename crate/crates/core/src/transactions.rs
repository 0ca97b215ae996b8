use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pattern::{Item, Pattern};
use crate::tidset::TidSet;

/// An immutable transaction database with both row and column views.
///
/// Items are kept as given; internally each item gets a dense index into the
/// sorted item list so tidsets can be stored in a flat vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransactionDatabase {
    items: Vec<Item>,
    tidsets: Vec<TidSet>,
    transactions: Vec<Pattern>,
}

impl TransactionDatabase {
    /// Builds a database from rows of items. Duplicate items inside a row
    /// collapse, empty rows are skipped, duplicate rows are kept.
    pub fn from_transactions<R, I>(rows: R) -> Result<Self>
    where
        R: IntoIterator<Item = I>,
        I: IntoIterator<Item = Item>,
    {
        let transactions: Vec<Pattern> = rows
            .into_iter()
            .filter_map(|row| Pattern::new(row).ok())
            .collect();
        if transactions.is_empty() {
            return Err(Error::EmptyDatabase);
        }
        let mut items: Vec<Item> = transactions
            .iter()
            .flat_map(|t| t.items().iter().copied())
            .collect();
        items.sort_unstable();
        items.dedup();

        let n = transactions.len();
        let mut tidsets = alloc::vec![TidSet::empty(n); items.len()];
        for (tid, t) in transactions.iter().enumerate() {
            for item in t.items() {
                let idx = items.binary_search(item).expect("item collected above");
                tidsets[idx].insert(tid);
            }
        }
        Ok(TransactionDatabase {
            items,
            tidsets,
            transactions,
        })
    }

    /// `|T|`.
    pub fn num_transactions(&self) -> usize {
        self.transactions.len()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn transactions(&self) -> &[Pattern] {
        &self.transactions
    }

    pub fn item_index(&self, item: Item) -> Option<usize> {
        self.items.binary_search(&item).ok()
    }

    pub fn tidset(&self, item: Item) -> Result<&TidSet> {
        self.item_index(item)
            .map(|i| &self.tidsets[i])
            .ok_or(Error::UnknownItem(item))
    }

    /// Tidset by dense index.
    pub(crate) fn tidset_at(&self, idx: usize) -> &TidSet {
        &self.tidsets[idx]
    }

    pub(crate) fn item_supports(&self) -> impl Iterator<Item = u64> + '_ {
        self.tidsets.iter().map(TidSet::count)
    }

    pub fn item_support(&self, item: Item) -> Result<u64> {
        self.tidset(item).map(TidSet::count)
    }

    /// Transactions containing every item of `p`.
    pub fn cover(&self, p: &Pattern) -> Result<TidSet> {
        let mut items = p.items().iter();
        let first = *items.next().ok_or(Error::EmptyPattern)?;
        let mut acc = self.tidset(first)?.clone();
        for &i in items {
            acc.intersect_with(self.tidset(i)?);
        }
        Ok(acc)
    }

    /// Transactions containing at least one item of `p`.
    pub fn universe(&self, p: &Pattern) -> Result<TidSet> {
        let mut acc = TidSet::empty(self.num_transactions());
        if p.is_empty() {
            return Err(Error::EmptyPattern);
        }
        for &i in p.items() {
            acc.union_with(self.tidset(i)?);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{pat, table1, A, B, D};
    use alloc::vec;

    #[test]
    fn builds_row_and_column_views() {
        let db =
            TransactionDatabase::from_transactions(vec![vec![1, 3, 4], vec![2, 3, 5]]).unwrap();
        assert_eq!(db.num_transactions(), 2);
        assert_eq!(db.items(), &[1, 2, 3, 4, 5]);
        assert_eq!(db.tidset(3).unwrap().iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn dedups_within_rows_keeps_duplicate_rows_and_skips_empty() {
        let db = TransactionDatabase::from_transactions(vec![vec![2, 2, 1], vec![], vec![1, 2]])
            .unwrap();
        assert_eq!(db.num_transactions(), 2);
        assert_eq!(db.transactions()[0], db.transactions()[1]);
        assert_eq!(db.item_support(2).unwrap(), 2);
    }

    #[test]
    fn empty_input_is_an_error() {
        let rows: Vec<Vec<Item>> = vec![vec![], vec![]];
        assert_eq!(
            TransactionDatabase::from_transactions(rows),
            Err(Error::EmptyDatabase)
        );
    }

    #[test]
    fn table1_tidsets() {
        let db = table1();
        assert_eq!(db.num_transactions(), 5);
        // 1-based transaction ids in the worked example are 0-based here.
        assert_eq!(db.tidset(D).unwrap().iter().collect::<Vec<_>>(), vec![0]);
        assert_eq!(
            db.tidset(B).unwrap().iter().collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
        assert_eq!(db.tidset(6), Err(Error::UnknownItem(6)));
        assert_eq!(db.item_support(B).unwrap(), 4);
        assert_eq!(db.cover(&pat("AD")).unwrap().count(), 1);
        assert_eq!(db.universe(&pat("AD")).unwrap().count(), 3);
        let _ = A;
    }

    #[test]
    fn row_and_column_views_agree() {
        let db = table1();
        for (idx, &item) in db.items().iter().enumerate() {
            let rescan = db
                .transactions()
                .iter()
                .filter(|t| t.contains(item))
                .count() as u64;
            assert_eq!(db.tidset_at(idx).count(), rescan);
        }
    }
}
