//! Level-wise extraction of the rare correlated set and of its concise
//! representations.
//!
//! Both miners start from the maximal correlated patterns, split them into a
//! rare and a frequent border, and then walk the lattice bottom-up. Each level
//! is generated from the previous level's retained candidates. Four prunes
//! apply, each of which can be switched off:
//!
//! * cross-support: a candidate whose item supports have a ratio below
//!   `minbond` is not correlated (skipped entirely when `minbond ≤ MinR`);
//! * rare border: a candidate contained in no rare maximal correlated pattern
//!   cannot be rare correlated;
//! * frequent border: a candidate strictly inside a frequent maximal
//!   correlated pattern is frequent, so it is not evaluated. It stays in the
//!   generation frontier because its supersets may still be rare;
//! * minimal ideal (RMCR only): a candidate with a non-minimal direct subset
//!   is not minimal.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::closure::ClosureTriple;
use crate::error::{Error, Result};
use crate::exec::{Executor, Sequential};
use crate::measures::{cross_support_trivial_threshold, MeasuredPattern};
use crate::pattern::Pattern;
use crate::rational::Rational;
use crate::representations::{Representation, RepresentationKind, RoleFlaggedPattern, Roles};
use crate::transactions::TransactionDatabase;

/// Thresholds of one mining run. `minsupp` is absolute; a pattern is rare when
/// `0 < conj < minsupp` and correlated when `bond ≥ minbond`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiningParams {
    pub minsupp: u64,
    pub minbond: Rational,
    pub num_transactions: u64,
}

impl MiningParams {
    pub fn new(minsupp: u64, minbond: Rational, num_transactions: u64) -> Result<Self> {
        let p = MiningParams {
            minsupp,
            minbond,
            num_transactions,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn for_db(db: &TransactionDatabase, minsupp: u64, minbond: Rational) -> Result<Self> {
        MiningParams::new(minsupp, minbond, db.num_transactions() as u64)
    }

    pub fn validate(&self) -> Result<()> {
        if self.minsupp == 0 {
            return Err(Error::InvalidParams("minsupp must be at least 1".into()));
        }
        if self.minbond.is_zero() || !self.minbond.is_unit() {
            return Err(Error::InvalidParams(format!(
                "minbond must lie in (0, 1], got {}",
                self.minbond
            )));
        }
        Ok(())
    }

    pub fn is_rare(&self, conj: u64) -> bool {
        conj > 0 && conj < self.minsupp
    }

    pub fn is_correlated(&self, bond: Rational) -> bool {
        bond >= self.minbond
    }

    /// `minsupp − 1`, the largest rare support.
    pub fn maxsupp(&self) -> u64 {
        self.minsupp - 1
    }

    /// `minsupp / |T|`.
    pub fn minsupp_rel(&self) -> Option<Rational> {
        Rational::new(self.minsupp, self.num_transactions).ok()
    }

    fn check_db(&self, db: &TransactionDatabase) -> Result<()> {
        if self.num_transactions != db.num_transactions() as u64 {
            return Err(Error::Inconsistent(format!(
                "parameters were built for {} transactions, database has {}",
                self.num_transactions,
                db.num_transactions()
            )));
        }
        Ok(())
    }
}

/// Which prunes a run applies. All are sound; disabling them only costs time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prunes {
    pub cross_support: bool,
    pub rare_border: bool,
    pub frequent_border: bool,
    pub minimal_ideal: bool,
}

impl Prunes {
    pub const ALL: Prunes = Prunes {
        cross_support: true,
        rare_border: true,
        frequent_border: true,
        minimal_ideal: true,
    };
    pub const NONE: Prunes = Prunes {
        cross_support: false,
        rare_border: false,
        frequent_border: false,
        minimal_ideal: false,
    };
}

impl Default for Prunes {
    fn default() -> Self {
        Prunes::ALL
    }
}

/// Counters collected during a run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MiningStats {
    pub levels: usize,
    pub generated: u64,
    pub pruned_cross_support: u64,
    pub pruned_rare_border: u64,
    pub skipped_frequent_border: u64,
    pub skipped_known: u64,
    pub pruned_non_minimal: u64,
    pub evaluated: u64,
    /// Number of correlated patterns with nonzero support (`|MC|`), from the
    /// maximal-pattern extraction.
    pub correlated_total: u64,
    pub maximal_rare: usize,
    pub maximal_frequent: usize,
}

impl MiningStats {
    /// `|MCF| = |MC| − |MCR|`.
    pub fn frequent_correlated(&self, mcr_len: usize) -> u64 {
        self.correlated_total.saturating_sub(mcr_len as u64)
    }
}

/// Classic Apriori candidate generation: join patterns sharing all but their
/// last item, then keep a candidate only if every direct subset is in `level`.
///
/// All inputs must have the same size. Output is sorted.
pub fn apriori_gen(level: &[Pattern]) -> Vec<Pattern> {
    let Some(first) = level.first() else {
        return Vec::new();
    };
    let k = first.len();
    assert!(
        level.iter().all(|p| p.len() == k),
        "apriori_gen needs one level"
    );
    let present: BTreeSet<&Pattern> = level.iter().collect();
    let sorted: Vec<&Pattern> = present.iter().copied().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let prefix = &sorted[i].items()[..k - 1];
        let mut j = i + 1;
        while j < sorted.len() && &sorted[j].items()[..k - 1] == prefix {
            j += 1;
        }
        for a in i..j {
            for b in a + 1..j {
                let mut items = sorted[a].items().to_vec();
                items.push(sorted[b].items()[k - 1]);
                let cand = Pattern::from_sorted(items);
                if cand.direct_subsets().all(|s| present.contains(&s)) {
                    out.push(cand);
                }
            }
        }
        i = j;
    }
    out
}

/// Mining driver bound to one database and one parameter set.
pub struct Miner<'a, E = Sequential> {
    db: &'a TransactionDatabase,
    params: MiningParams,
    prunes: Prunes,
    exec: E,
}

struct Borders {
    rare: Vec<MeasuredPattern>,
    frequent: Vec<MeasuredPattern>,
    correlated_total: u64,
}

impl<'a> Miner<'a, Sequential> {
    pub fn new(db: &'a TransactionDatabase, params: MiningParams) -> Result<Self> {
        params.validate()?;
        params.check_db(db)?;
        Ok(Miner {
            db,
            params,
            prunes: Prunes::ALL,
            exec: Sequential,
        })
    }
}

impl<'a, E: Executor> Miner<'a, E> {
    pub fn with_prunes(mut self, prunes: Prunes) -> Self {
        self.prunes = prunes;
        self
    }

    pub fn with_executor<F: Executor>(self, exec: F) -> Miner<'a, F> {
        Miner {
            db: self.db,
            params: self.params,
            prunes: self.prunes,
            exec,
        }
    }

    pub fn params(&self) -> &MiningParams {
        &self.params
    }

    fn cross_support_active(&self) -> bool {
        self.prunes.cross_support
            && cross_support_trivial_threshold(self.db)
                .is_ok_and(|min_r| self.params.minbond > min_r)
    }

    /// Support ratio test against precomputed item supports.
    fn violates_cross_support(&self, supports: &BTreeMap<crate::Item, u64>, p: &Pattern) -> bool {
        let (lo, hi) = p
            .items()
            .iter()
            .map(|i| supports[i])
            .fold((u64::MAX, 0), |(lo, hi), s| (lo.min(s), hi.max(s)));
        Rational::from_counts(lo, hi) < self.params.minbond
    }

    fn item_supports(&self) -> BTreeMap<crate::Item, u64> {
        self.db
            .items()
            .iter()
            .zip(self.db.item_supports())
            .map(|(&i, s)| (i, s))
            .collect()
    }

    fn evaluate(&self, patterns: &[Pattern]) -> Vec<Option<MeasuredPattern>> {
        let db = self.db;
        self.exec.map(patterns, |p| {
            MeasuredPattern::measure(db, p).expect("candidates only use database items")
        })
    }

    fn singletons(&self) -> Vec<MeasuredPattern> {
        let patterns: Vec<Pattern> = self
            .db
            .items()
            .iter()
            .map(|&i| Pattern::singleton(i))
            .collect();
        self.evaluate(&patterns).into_iter().flatten().collect()
    }

    /// Maximal correlated patterns (by inclusion), plus `|MC|`.
    ///
    /// Enumerates every correlated pattern level by level; bond is
    /// anti-monotone, so a pattern is maximal iff none of its one-item
    /// extensions is correlated.
    pub fn maximal_correlated(&self) -> (Vec<MeasuredPattern>, u64) {
        let supports = self.item_supports();
        let cross = self.cross_support_active();
        let mut level = self.singletons();
        let mut total = level.len() as u64;
        let mut maximal = Vec::new();
        loop {
            let patterns: Vec<Pattern> = level.iter().map(|m| m.pattern.clone()).collect();
            let mut cands = apriori_gen(&patterns);
            if cross {
                cands.retain(|c| !self.violates_cross_support(&supports, c));
            }
            let next: Vec<MeasuredPattern> = self
                .evaluate(&cands)
                .into_iter()
                .flatten()
                .filter(|m| self.params.is_correlated(m.bond))
                .collect();
            let covered: BTreeSet<Pattern> = next
                .iter()
                .flat_map(|m| m.pattern.direct_subsets())
                .collect();
            maximal.extend(level.into_iter().filter(|m| !covered.contains(&m.pattern)));
            total += next.len() as u64;
            if next.is_empty() {
                break;
            }
            level = next;
        }
        maximal.sort_by(|a, b| a.pattern.cmp(&b.pattern));
        (maximal, total)
    }

    fn borders(&self) -> Borders {
        let (maximal, correlated_total) = self.maximal_correlated();
        let (rare, frequent) = maximal
            .into_iter()
            .partition(|m| self.params.is_rare(m.conj));
        Borders {
            rare,
            frequent,
            correlated_total,
        }
    }

    /// Applies cross-support and rare-border prunes in place, then splits off
    /// the candidates that need no evaluation.
    fn prune_level(
        &self,
        cands: &mut Vec<Pattern>,
        borders: &Borders,
        supports: &BTreeMap<crate::Item, u64>,
        cross: bool,
        stats: &mut MiningStats,
    ) -> Vec<bool> {
        stats.generated += cands.len() as u64;
        if cross {
            let before = cands.len();
            cands.retain(|c| !self.violates_cross_support(supports, c));
            stats.pruned_cross_support += (before - cands.len()) as u64;
        }
        if self.prunes.rare_border {
            let before = cands.len();
            cands.retain(|c| borders.rare.iter().any(|z| c.is_subset_of(&z.pattern)));
            stats.pruned_rare_border += (before - cands.len()) as u64;
        }
        cands
            .iter()
            .map(|c| {
                let skip = self.prunes.frequent_border
                    && borders
                        .frequent
                        .iter()
                        .any(|z| c.is_strict_subset_of(&z.pattern));
                if skip {
                    stats.skipped_frequent_border += 1;
                }
                !skip
            })
            .collect()
    }

    /// The full rare correlated set.
    pub fn mine_mcr(&self) -> Result<(Representation, MiningStats)> {
        let borders = self.borders();
        let supports = self.item_supports();
        let cross = self.cross_support_active();
        let mut stats = MiningStats {
            correlated_total: borders.correlated_total,
            maximal_rare: borders.rare.len(),
            maximal_frequent: borders.frequent.len(),
            ..MiningStats::default()
        };

        let mut mcr: BTreeMap<Pattern, MeasuredPattern> = borders
            .rare
            .iter()
            .map(|m| (m.pattern.clone(), m.clone()))
            .collect();
        let singles = self.singletons();
        stats.evaluated += singles.len() as u64;
        stats.levels = 1;
        for m in &singles {
            if self.params.is_rare(m.conj) {
                mcr.insert(m.pattern.clone(), m.clone());
            }
        }
        let mut frontier: Vec<Pattern> = singles.into_iter().map(|m| m.pattern).collect();

        loop {
            let mut cands = apriori_gen(&frontier);
            if cands.is_empty() {
                break;
            }
            stats.levels += 1;
            let mut needs_eval =
                self.prune_level(&mut cands, &borders, &supports, cross, &mut stats);
            for (c, flag) in cands.iter().zip(needs_eval.iter_mut()) {
                if *flag && mcr.contains_key(c) {
                    *flag = false;
                    stats.skipped_known += 1;
                }
            }
            let to_eval: Vec<Pattern> = cands
                .iter()
                .zip(&needs_eval)
                .filter(|(_, &e)| e)
                .map(|(c, _)| c.clone())
                .collect();
            stats.evaluated += to_eval.len() as u64;
            let mut results = self.evaluate(&to_eval).into_iter();

            let mut next = Vec::with_capacity(cands.len());
            for (c, eval) in cands.into_iter().zip(needs_eval) {
                if !eval {
                    next.push(c);
                    continue;
                }
                let Some(m) = results.next().expect("one result per evaluated candidate") else {
                    continue;
                };
                if !self.params.is_correlated(m.bond) {
                    continue;
                }
                if self.params.is_rare(m.conj) {
                    mcr.insert(c.clone(), m);
                }
                next.push(c);
            }
            frontier = next;
        }

        let entries = mcr
            .into_values()
            .map(|m| RoleFlaggedPattern::new(m, Roles::NONE))
            .collect();
        let rep = Representation::new(RepresentationKind::Mcr, self.params.clone(), entries)?;
        Ok((rep, stats))
    }

    /// `RMCR`: minimal and closed rare correlated patterns, flagged by role.
    pub fn mine_rmcr(&self) -> Result<(Representation, MiningStats)> {
        let borders = self.borders();
        let supports = self.item_supports();
        let cross = self.cross_support_active();
        let mut stats = MiningStats {
            correlated_total: borders.correlated_total,
            maximal_rare: borders.rare.len(),
            maximal_frequent: borders.frequent.len(),
            ..MiningStats::default()
        };
        let mut entries: BTreeMap<Pattern, (MeasuredPattern, Roles)> = BTreeMap::new();

        let mut record_minimal = |m: MeasuredPattern| -> Result<()> {
            let closure = ClosureTriple::compute(self.db, &m.pattern)?.f_bond;
            let closed = MeasuredPattern {
                pattern: closure.clone(),
                ..m.clone()
            };
            entries
                .entry(m.pattern.clone())
                .or_insert_with(|| (m, Roles::NONE))
                .1
                .minimal = true;
            entries
                .entry(closure)
                .or_insert_with(|| (closed, Roles::NONE))
                .1
                .closed = true;
            Ok(())
        };

        let singles = self.singletons();
        stats.evaluated += singles.len() as u64;
        stats.levels = 1;
        // Bonds of the previous level's evaluated frontier members.
        let mut known: BTreeMap<Pattern, Rational> = BTreeMap::new();
        for m in &singles {
            known.insert(m.pattern.clone(), m.bond);
            if self.params.is_rare(m.conj) {
                record_minimal(m.clone())?;
            }
        }
        let mut frontier: Vec<Pattern> = singles.into_iter().map(|m| m.pattern).collect();

        loop {
            let mut cands = apriori_gen(&frontier);
            if cands.is_empty() {
                break;
            }
            stats.levels += 1;
            let needs_eval = self.prune_level(&mut cands, &borders, &supports, cross, &mut stats);
            let to_eval: Vec<Pattern> = cands
                .iter()
                .zip(&needs_eval)
                .filter(|(_, &e)| e)
                .map(|(c, _)| c.clone())
                .collect();
            stats.evaluated += to_eval.len() as u64;
            let mut results = self.evaluate(&to_eval).into_iter();

            let mut next = Vec::with_capacity(cands.len());
            let mut next_known = BTreeMap::new();
            for (c, eval) in cands.into_iter().zip(needs_eval) {
                if !eval {
                    // Known frequent, minimality unknown: keep for generation.
                    next.push(c);
                    continue;
                }
                let Some(m) = results.next().expect("one result per evaluated candidate") else {
                    continue;
                };
                if !self.params.is_correlated(m.bond) {
                    continue;
                }
                // Subsets missing from `known` were not evaluated, hence
                // frequent; an equal bond would force equal supports, which a
                // rare candidate cannot share with them.
                let non_minimal = c
                    .direct_subsets()
                    .any(|s| known.get(&s).is_some_and(|&b| b == m.bond));
                if self.params.is_rare(m.conj) && !non_minimal {
                    record_minimal(m.clone())?;
                }
                if non_minimal && self.prunes.minimal_ideal {
                    stats.pruned_non_minimal += 1;
                    continue;
                }
                next_known.insert(c.clone(), m.bond);
                next.push(c);
            }
            frontier = next;
            known = next_known;
        }

        let entries = entries
            .into_values()
            .map(|(m, roles)| RoleFlaggedPattern::new(m, roles))
            .collect();
        let rep = Representation::new(RepresentationKind::Rmcr, self.params.clone(), entries)?;
        Ok((rep, stats))
    }
}

/// Maximal correlated patterns of `db` at `minbond`.
pub fn extract_mcmax(db: &TransactionDatabase, minbond: Rational) -> Result<Vec<MeasuredPattern>> {
    let params = MiningParams::for_db(db, 1, minbond)?;
    Ok(Miner::new(db, params)?.maximal_correlated().0)
}

pub fn mine_mcr(db: &TransactionDatabase, params: &MiningParams) -> Result<Representation> {
    Ok(Miner::new(db, params.clone())?.mine_mcr()?.0)
}

pub fn mine_rmcr(db: &TransactionDatabase, params: &MiningParams) -> Result<Representation> {
    Ok(Miner::new(db, params.clone())?.mine_rmcr()?.0)
}

fn check_rmcr(db: &TransactionDatabase, rmcr: &Representation) -> Result<()> {
    if rmcr.kind() != RepresentationKind::Rmcr {
        return Err(Error::WrongKind {
            expected: "RMCR",
            found: rmcr.kind(),
        });
    }
    rmcr.params().check_db(db)?;
    for e in rmcr.entries() {
        let m = &e.measured;
        let actual = MeasuredPattern::measure(db, &m.pattern).map_err(|_| {
            Error::Inconsistent(format!("{} uses items absent from the database", m.pattern))
        })?;
        if actual.as_ref().map(|a| (a.conj, a.disj)) != Some((m.conj, m.disj)) {
            return Err(Error::Inconsistent(format!(
                "supports stored for {} do not match the database",
                m.pattern
            )));
        }
    }
    Ok(())
}

/// No one-item extension of `p` is correlated.
fn is_maximal_correlated(db: &TransactionDatabase, p: &Pattern, minbond: Rational) -> Result<bool> {
    let cover = db.cover(p)?;
    let universe = db.universe(p)?;
    let disj = universe.count();
    for (idx, &item) in db.items().iter().enumerate() {
        if p.contains(item) {
            continue;
        }
        let tids = db.tidset_at(idx);
        let conj = cover.intersection_count(tids);
        if conj == 0 {
            continue;
        }
        let ext_disj = disj + tids.count() - universe.intersection_count(tids);
        if Rational::from_counts(conj, ext_disj) >= minbond {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every direct subset of `p` is frequent.
fn is_minimal_rare(db: &TransactionDatabase, p: &Pattern, minsupp: u64) -> Result<bool> {
    for s in p.direct_subsets() {
        if db.cover(&s)?.count() < minsupp {
            return Ok(false);
        }
    }
    Ok(true)
}

fn flag_and_filter(
    db: &TransactionDatabase,
    rmcr: &Representation,
    kind: RepresentationKind,
    want_closed_max: bool,
    want_minimal_min: bool,
) -> Result<Representation> {
    check_rmcr(db, rmcr)?;
    let params = rmcr.params();
    let mut out = Vec::new();
    for e in rmcr.entries() {
        let mut roles = e.roles;
        let p = e.pattern();
        if want_closed_max && roles.closed {
            roles.closed_maximal = is_maximal_correlated(db, p, params.minbond)?;
        }
        if want_minimal_min && roles.minimal {
            roles.minimal_minimal = is_minimal_rare(db, p, params.minsupp)?;
        }
        let keep = match kind {
            RepresentationKind::RmMaxF => roles.minimal || roles.closed_maximal,
            RepresentationKind::RMinMF => roles.closed || roles.minimal_minimal,
            _ => roles.closed_maximal || roles.minimal_minimal,
        };
        if keep {
            out.push(RoleFlaggedPattern::new(e.measured.clone(), roles));
        }
    }
    Representation::new(kind, params.clone(), out)
}

/// `RMMaxF`: minimal entries plus the closed entries that are maximal
/// correlated.
pub fn derive_rmmaxf(db: &TransactionDatabase, rmcr: &Representation) -> Result<Representation> {
    flag_and_filter(db, rmcr, RepresentationKind::RmMaxF, true, false)
}

/// `RMinMF`: closed entries plus the minimal entries whose direct subsets are
/// all frequent.
pub fn derive_rminmf(db: &TransactionDatabase, rmcr: &Representation) -> Result<Representation> {
    flag_and_filter(db, rmcr, RepresentationKind::RMinMF, false, true)
}

/// `RMinMMaxF`: closed-maximal entries plus minimal-minimal-rare entries.
pub fn derive_rminmmaxf(db: &TransactionDatabase, rmcr: &Representation) -> Result<Representation> {
    flag_and_filter(db, rmcr, RepresentationKind::RMinMMaxF, true, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{pat, q, table1};
    use alloc::vec;

    fn pats(list: &[&str]) -> Vec<Pattern> {
        let mut v: Vec<Pattern> = list.iter().map(|s| pat(s)).collect();
        v.sort();
        v
    }

    fn names(rep: &Representation) -> Vec<Pattern> {
        rep.patterns().cloned().collect()
    }

    fn params(minsupp: u64) -> MiningParams {
        MiningParams::for_db(&table1(), minsupp, q(1, 5)).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(MiningParams::new(0, q(1, 2), 5).is_err());
        assert!(MiningParams::new(1, Rational::ZERO, 5).is_err());
        assert!(MiningParams::new(1, q(3, 2), 5).is_err());
        let p = MiningParams::new(3, q(1, 5), 5).unwrap();
        assert!(p.is_rare(2) && !p.is_rare(3) && !p.is_rare(0));
        assert!(p.is_correlated(q(1, 5)) && !p.is_correlated(q(1, 6)));
        assert_eq!(p.maxsupp(), 2);
        assert_eq!(p.minsupp_rel(), Some(q(3, 5)));
    }

    #[test]
    fn miner_rejects_mismatched_params() {
        let db = table1();
        assert!(matches!(
            Miner::new(&db, MiningParams::new(3, q(1, 5), 6).unwrap()),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn apriori_join_and_prune() {
        let level = pats(&["AB", "AC", "AD", "BC", "CD"]);
        assert_eq!(apriori_gen(&level), pats(&["ABC", "ACD"]));
        assert_eq!(
            apriori_gen(&pats(&["A", "B", "C"])),
            pats(&["AB", "AC", "BC"])
        );
        assert!(apriori_gen(&[]).is_empty());
        assert!(apriori_gen(&pats(&["AB", "CD"])).is_empty());
    }

    #[test]
    fn maximal_correlated_patterns() {
        let db = table1();
        let got: Vec<Pattern> = extract_mcmax(&db, q(1, 5))
            .unwrap()
            .into_iter()
            .map(|m| m.pattern)
            .collect();
        assert_eq!(got, pats(&["ACD", "ABCE"]));
        let got: Vec<Pattern> = extract_mcmax(&db, Rational::ONE)
            .unwrap()
            .into_iter()
            .map(|m| m.pattern)
            .collect();
        assert_eq!(got, pats(&["A", "C", "D", "BE"]));
    }

    #[test]
    fn mcr_reference_values() {
        let db = table1();
        let mcr3 = mine_mcr(&db, &params(3)).unwrap();
        assert_eq!(
            names(&mcr3),
            pats(&["D", "AD", "AB", "AE", "CD", "ACD", "ABC", "ABE", "ACE", "ABCE"])
        );
        let (mcr4, stats) = Miner::new(&db, params(4)).unwrap().mine_mcr().unwrap();
        assert_eq!(mcr4.len(), 15);
        let abe = mcr4.get(&pat("ABE")).unwrap();
        assert_eq!((abe.measured.conj, abe.measured.disj), (2, 5));
        assert_eq!(stats.maximal_rare, 2);
        assert_eq!(
            stats.frequent_correlated(mcr4.len()),
            stats.correlated_total - 15
        );
        let none = mine_mcr(&db, &params(1)).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn rmcr_reference_values() {
        let db = table1();
        let rmcr = mine_rmcr(&db, &params(4)).unwrap();
        assert_eq!(
            names(&rmcr),
            pats(&["A", "D", "AB", "AC", "AD", "AE", "BC", "CD", "CE", "ACD", "BCE", "ABCE"])
        );
        assert_eq!(rmcr.count_role(|r| r.minimal), 9);
        assert_eq!(rmcr.count_role(|r| r.closed), 7);
        let rmcr3 = mine_rmcr(&db, &params(3)).unwrap();
        let minimal: Vec<Pattern> = rmcr3
            .entries()
            .iter()
            .filter(|e| e.roles.minimal)
            .map(|e| e.pattern().clone())
            .collect();
        let closed: Vec<Pattern> = rmcr3
            .entries()
            .iter()
            .filter(|e| e.roles.closed)
            .map(|e| e.pattern().clone())
            .collect();
        assert_eq!(minimal, pats(&["D", "AB", "AE", "AD", "CD"]));
        assert_eq!(closed, pats(&["D", "AD", "ACD", "ABCE"]));
    }

    #[test]
    fn derived_representations() {
        let db = table1();
        let rmcr = mine_rmcr(&db, &params(4)).unwrap();
        let maxf = derive_rmmaxf(&db, &rmcr).unwrap();
        assert_eq!(
            names(&maxf),
            pats(&["A", "D", "AB", "AC", "AD", "AE", "BC", "CD", "CE", "ACD", "ABCE"])
        );
        let minf = derive_rminmf(&db, &rmcr).unwrap();
        assert_eq!(
            names(&minf),
            pats(&["A", "D", "AC", "AD", "BC", "CE", "ACD", "BCE", "ABCE"])
        );
        let both = derive_rminmmaxf(&db, &rmcr).unwrap();
        assert_eq!(names(&both), pats(&["A", "D", "BC", "CE", "ACD", "ABCE"]));
        assert!(matches!(
            derive_rmmaxf(&db, &maxf),
            Err(Error::WrongKind { .. })
        ));
    }

    #[test]
    fn derivation_checks_database() {
        let db = table1();
        let rmcr = mine_rmcr(&db, &params(4)).unwrap();
        let other = TransactionDatabase::from_transactions(vec![vec![1u32, 2], vec![3]]).unwrap();
        assert!(matches!(
            derive_rminmf(&other, &rmcr),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn prunes_do_not_change_results() {
        let db = table1();
        for minsupp in 1..=6 {
            for (n, d) in [(1, 5), (2, 5), (1, 2), (3, 5), (1, 1)] {
                let p = MiningParams::for_db(&db, minsupp, q(n, d)).unwrap();
                let miner = Miner::new(&db, p.clone()).unwrap();
                let bare = Miner::new(&db, p).unwrap().with_prunes(Prunes::NONE);
                assert_eq!(miner.mine_mcr().unwrap().0, bare.mine_mcr().unwrap().0);
                assert_eq!(miner.mine_rmcr().unwrap().0, bare.mine_rmcr().unwrap().0);
            }
        }
    }

    #[test]
    fn cross_support_is_idle_below_min_ratio() {
        let db = table1();
        // MinR on this database is 3/4.
        let (_, stats) = Miner::new(&db, params(4)).unwrap().mine_mcr().unwrap();
        assert_eq!(stats.pruned_cross_support, 0);
    }
}
