//! The `f_bond` closure, computed as the intersection of the conjunctive and
//! disjunctive closures.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::measures::{conjunctive_support, disjunctive_support};
use crate::pattern::Pattern;
use crate::rational::Rational;
use crate::tidset::TidSet;
use crate::transactions::TransactionDatabase;

/// The three closures of one pattern. `f_bond = f_c ∩ f_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTriple {
    pub f_c: Pattern,
    pub f_d: Pattern,
    pub f_bond: Pattern,
}

impl ClosureTriple {
    pub fn compute(db: &TransactionDatabase, p: &Pattern) -> Result<Self> {
        let cover = db.cover(p)?;
        if cover.is_empty() {
            return Err(Error::UndefinedClosure);
        }
        let universe = db.universe(p)?;
        let f_c = items_where(db, |tids| cover.is_subset_of(tids));
        let f_d = items_where(db, |tids| tids.is_subset_of(&universe));
        let f_bond: Vec<crate::Item> = f_c
            .iter()
            .copied()
            .filter(|i| f_d.binary_search(i).is_ok())
            .collect();
        Ok(ClosureTriple {
            f_c: Pattern::from_sorted(f_c),
            f_d: Pattern::from_sorted(f_d),
            f_bond: Pattern::from_sorted(f_bond),
        })
    }
}

fn items_where(db: &TransactionDatabase, keep: impl Fn(&TidSet) -> bool) -> Vec<crate::Item> {
    db.items()
        .iter()
        .enumerate()
        .filter(|&(idx, _)| keep(db.tidset_at(idx)))
        .map(|(_, &item)| item)
        .collect()
}

/// Intersection of all transactions containing `p`.
pub fn conjunctive_closure(db: &TransactionDatabase, p: &Pattern) -> Result<Pattern> {
    let cover = db.cover(p)?;
    if cover.is_empty() {
        return Err(Error::UndefinedClosure);
    }
    Ok(Pattern::from_sorted(items_where(db, |tids| {
        cover.is_subset_of(tids)
    })))
}

/// Items occurring only in transactions that intersect `p`; the complement of
/// everything seen in transactions disjoint from `p`.
pub fn disjunctive_closure(db: &TransactionDatabase, p: &Pattern) -> Result<Pattern> {
    let universe = db.universe(p)?;
    if universe.is_empty() {
        return Err(Error::UndefinedMeasure);
    }
    Ok(Pattern::from_sorted(items_where(db, |tids| {
        tids.is_subset_of(&universe)
    })))
}

/// The largest superset of `p` with the same bond.
pub fn f_bond_closure(db: &TransactionDatabase, p: &Pattern) -> Result<Pattern> {
    ClosureTriple::compute(db, p).map(|t| t.f_bond)
}

/// True iff no direct subset of `p` has the same bond. Singletons always are.
///
/// Checking direct subsets suffices: bond is anti-monotone, so an equal-bond
/// strict subset forces an equal-bond direct subset.
pub fn is_minimal_correlated(db: &TransactionDatabase, p: &Pattern) -> Result<bool> {
    let conj = conjunctive_support(db, p)?;
    if conj == 0 {
        return Err(Error::UndefinedClosure);
    }
    let b = Rational::from_counts(conj, disjunctive_support(db, p)?);
    for sub in p.direct_subsets() {
        let sb = Rational::from_counts(
            conjunctive_support(db, &sub)?,
            disjunctive_support(db, &sub)?,
        );
        if sb == b {
            return Ok(false);
        }
    }
    Ok(true)
}
