//! Brute-force reference implementation of every mined set.
//!
//! Each set is computed straight from its definition over the whole lattice
//! of the item universe, using a bitmask per transaction and none of the
//! tidset machinery. Intended for tests and for deriving reference values on
//! small inputs.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::measures::MeasuredPattern;
use crate::miner::MiningParams;
use crate::pattern::{Item, Pattern};
use crate::rational::Rational;
use crate::representations::{Representation, RepresentationKind, RoleFlaggedPattern, Roles};
use crate::transactions::TransactionDatabase;

/// Largest item universe the oracle accepts.
pub const ORACLE_ITEM_LIMIT: usize = 24;

/// Up to this size, "no strict subset/superset" is checked against every
/// strict subset/superset. Beyond it only one-item neighbours are checked,
/// which is equivalent because bond is anti-monotone.
const LITERAL_LIMIT: usize = 14;

/// Every set the miners produce, computed exhaustively. All vectors are
/// sorted by pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSets {
    /// Correlated patterns with nonzero support.
    pub mc: Vec<MeasuredPattern>,
    /// Correlated patterns without a correlated strict superset.
    pub mc_max: Vec<MeasuredPattern>,
    /// Rare patterns (nonzero support) whose strict subsets are all frequent.
    pub mr_min: Vec<MeasuredPattern>,
    /// Rare correlated patterns.
    pub mcr: Vec<MeasuredPattern>,
    /// Rare correlated patterns without a strict superset of equal bond.
    pub mfcr: Vec<MeasuredPattern>,
    /// Rare correlated patterns without a strict subset of equal bond.
    pub mmcr: Vec<MeasuredPattern>,
    /// `MFCR ∩ MCMax`.
    pub mfcr_max: Vec<MeasuredPattern>,
    /// `MMCR ∩ MRMin`.
    pub mmcr_min: Vec<MeasuredPattern>,
}

struct Lattice {
    items: Vec<Item>,
    conj: Vec<u64>,
    disj: Vec<u64>,
}

impl Lattice {
    fn build(db: &TransactionDatabase) -> Result<Self> {
        let items = db.items().to_vec();
        if items.len() > ORACLE_ITEM_LIMIT {
            return Err(Error::Capacity {
                items: items.len(),
                limit: ORACLE_ITEM_LIMIT,
            });
        }
        let rows: Vec<u32> = db
            .transactions()
            .iter()
            .map(|t| {
                t.items().iter().fold(0u32, |acc, i| {
                    acc | 1
                        << items
                            .iter()
                            .position(|x| x == i)
                            .expect("row item is known")
                })
            })
            .collect();
        let size = 1usize << items.len();
        let mut conj = alloc::vec![0u64; size];
        let mut disj = alloc::vec![0u64; size];
        for mask in 1..size as u32 {
            for &r in &rows {
                if r & mask == mask {
                    conj[mask as usize] += 1;
                }
                if r & mask != 0 {
                    disj[mask as usize] += 1;
                }
            }
        }
        Ok(Lattice { items, conj, disj })
    }

    fn full(&self) -> u32 {
        ((1u64 << self.items.len()) - 1) as u32
    }

    fn bond(&self, mask: u32) -> Rational {
        Rational::from_counts(self.conj[mask as usize], self.disj[mask as usize])
    }

    fn pattern(&self, mask: u32) -> Pattern {
        let items = (0..self.items.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| self.items[b]);
        Pattern::new(items).expect("mask is non-empty")
    }

    fn measured(&self, mask: u32) -> MeasuredPattern {
        MeasuredPattern::new(
            self.pattern(mask),
            self.conj[mask as usize],
            self.disj[mask as usize],
        )
        .expect("only called on nonzero-support patterns")
    }

    fn literal(&self) -> bool {
        self.items.len() <= LITERAL_LIMIT
    }

    /// Non-empty strict subsets of `mask`.
    fn strict_subsets(&self, mask: u32) -> Vec<u32> {
        if self.literal() {
            let mut out = Vec::new();
            let mut s = (mask - 1) & mask;
            while s != 0 {
                out.push(s);
                s = (s - 1) & mask;
            }
            out
        } else {
            (0..self.items.len())
                .map(|b| 1u32 << b)
                .filter(|bit| mask & bit != 0 && mask != *bit)
                .map(|bit| mask & !bit)
                .collect()
        }
    }

    /// Strict supersets of `mask` within the universe.
    fn strict_supersets(&self, mask: u32) -> Vec<u32> {
        let rest = self.full() & !mask;
        if self.literal() {
            let mut out = Vec::new();
            let mut s = rest;
            while s != 0 {
                out.push(mask | s);
                s = (s - 1) & rest;
            }
            out
        } else {
            (0..self.items.len())
                .map(|b| 1u32 << b)
                .filter(|bit| rest & bit != 0)
                .map(|bit| mask | bit)
                .collect()
        }
    }
}

fn sorted(mut v: Vec<MeasuredPattern>) -> Vec<MeasuredPattern> {
    v.sort_by(|a, b| a.pattern.cmp(&b.pattern));
    v
}

/// The rare correlated set, by exhaustive enumeration.
pub fn oracle_mcr(db: &TransactionDatabase, params: &MiningParams) -> Result<Vec<MeasuredPattern>> {
    Ok(oracle_sets(db, params)?.mcr)
}

/// All reference sets at once.
pub fn oracle_sets(db: &TransactionDatabase, params: &MiningParams) -> Result<OracleSets> {
    params.validate()?;
    let lat = Lattice::build(db)?;
    let correlated = |m: u32| lat.conj[m as usize] > 0 && params.is_correlated(lat.bond(m));
    let rare = |m: u32| params.is_rare(lat.conj[m as usize]);

    let mut sets = OracleSets {
        mc: Vec::new(),
        mc_max: Vec::new(),
        mr_min: Vec::new(),
        mcr: Vec::new(),
        mfcr: Vec::new(),
        mmcr: Vec::new(),
        mfcr_max: Vec::new(),
        mmcr_min: Vec::new(),
    };
    for mask in 1..=lat.full() {
        let is_rare = rare(mask);
        let minimal_rare = is_rare
            && lat
                .strict_subsets(mask)
                .iter()
                .all(|&s| lat.conj[s as usize] >= params.minsupp);
        if minimal_rare {
            sets.mr_min.push(lat.measured(mask));
        }
        if !correlated(mask) {
            continue;
        }
        let m = lat.measured(mask);
        let supersets = lat.strict_supersets(mask);
        let maximal = !supersets.iter().any(|&s| correlated(s));
        sets.mc.push(m.clone());
        if maximal {
            sets.mc_max.push(m.clone());
        }
        if !is_rare {
            continue;
        }
        sets.mcr.push(m.clone());
        let bond = lat.bond(mask);
        let closed = !supersets.iter().any(|&s| lat.bond(s) == bond);
        let minimal = !lat
            .strict_subsets(mask)
            .iter()
            .any(|&s| lat.bond(s) == bond);
        if closed {
            sets.mfcr.push(m.clone());
            if maximal {
                sets.mfcr_max.push(m.clone());
            }
        }
        if minimal {
            sets.mmcr.push(m.clone());
            if minimal_rare {
                sets.mmcr_min.push(m);
            }
        }
    }
    sets.mc = sorted(sets.mc);
    sets.mc_max = sorted(sets.mc_max);
    sets.mr_min = sorted(sets.mr_min);
    sets.mcr = sorted(sets.mcr);
    sets.mfcr = sorted(sets.mfcr);
    sets.mmcr = sorted(sets.mmcr);
    sets.mfcr_max = sorted(sets.mfcr_max);
    sets.mmcr_min = sorted(sets.mmcr_min);
    Ok(sets)
}

/// Representation of the requested kind assembled from the oracle sets, with
/// the same role flags the miner and derivations set.
pub fn oracle_representation(
    db: &TransactionDatabase,
    params: &MiningParams,
    kind: RepresentationKind,
) -> Result<Representation> {
    let sets = oracle_sets(db, params)?;
    let has =
        |set: &[MeasuredPattern], p: &Pattern| set.binary_search_by(|m| m.pattern.cmp(p)).is_ok();
    let with_cmax = matches!(
        kind,
        RepresentationKind::RmMaxF | RepresentationKind::RMinMMaxF
    );
    let with_mmin = matches!(
        kind,
        RepresentationKind::RMinMF | RepresentationKind::RMinMMaxF
    );
    let mut entries = Vec::new();
    for m in &sets.mcr {
        let p = &m.pattern;
        let roles = if kind == RepresentationKind::Mcr {
            Roles::NONE
        } else {
            Roles {
                minimal: has(&sets.mmcr, p),
                closed: has(&sets.mfcr, p),
                closed_maximal: with_cmax && has(&sets.mfcr_max, p),
                minimal_minimal: with_mmin && has(&sets.mmcr_min, p),
            }
        };
        let keep = match kind {
            RepresentationKind::Mcr => true,
            RepresentationKind::Rmcr => roles.minimal || roles.closed,
            RepresentationKind::RmMaxF => roles.minimal || roles.closed_maximal,
            RepresentationKind::RMinMF => roles.closed || roles.minimal_minimal,
            RepresentationKind::RMinMMaxF => roles.closed_maximal || roles.minimal_minimal,
        };
        if keep {
            entries.push(RoleFlaggedPattern::new(m.clone(), roles));
        }
    }
    Representation::new(kind, params.clone(), entries)
}

/// `f_bond(p)` by the definition: `p` plus every item whose addition leaves
/// the bond unchanged. `None` when `p` has zero support or uses unknown items.
pub fn oracle_f_bond(db: &TransactionDatabase, p: &Pattern) -> Option<Pattern> {
    let base = MeasuredPattern::measure(db, p).ok()??;
    let mut items = p.items().to_vec();
    for &i in db.items() {
        if p.contains(i) {
            continue;
        }
        let ext = p.with(i);
        let conj = db
            .transactions()
            .iter()
            .filter(|t| ext.is_subset_of(t))
            .count() as u64;
        let disj = db
            .transactions()
            .iter()
            .filter(|t| ext.items().iter().any(|x| t.contains(*x)))
            .count() as u64;
        if Rational::from_counts(conj, disj) == base.bond {
            items.push(i);
        }
    }
    Pattern::new(items).ok()
}
