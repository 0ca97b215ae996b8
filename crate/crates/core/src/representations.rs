//! Concise representations of the rare correlated set, membership/support
//! queries against them, full regeneration, and interval bounds from the
//! approximate representation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::measures::MeasuredPattern;
use crate::miner::MiningParams;
use crate::pattern::Pattern;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepresentationKind {
    /// The full rare correlated set.
    Mcr,
    /// Minimal ∪ closed rare correlated patterns.
    Rmcr,
    /// Minimal ∪ closed-and-maximal.
    RmMaxF,
    /// Closed ∪ minimal-and-minimal-rare.
    RMinMF,
    /// Closed-and-maximal ∪ minimal-and-minimal-rare. Approximate.
    RMinMMaxF,
}

impl RepresentationKind {
    pub const ALL: [RepresentationKind; 5] = [
        RepresentationKind::Mcr,
        RepresentationKind::Rmcr,
        RepresentationKind::RmMaxF,
        RepresentationKind::RMinMF,
        RepresentationKind::RMinMMaxF,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RepresentationKind::Mcr => "MCR",
            RepresentationKind::Rmcr => "RMCR",
            RepresentationKind::RmMaxF => "RMMaxF",
            RepresentationKind::RMinMF => "RMinMF",
            RepresentationKind::RMinMMaxF => "RMinMMaxF",
        }
    }

    /// Exact kinds answer [`query_pattern`]; the approximate one answers
    /// [`approximate_query`].
    pub fn is_exact(self) -> bool {
        self != RepresentationKind::RMinMMaxF
    }
}

impl fmt::Display for RepresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepresentationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RepresentationKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::CorruptRepresentation(format!("unknown representation kind {s:?}"))
            })
    }
}

/// Role flags of a representation entry. One entry can play several roles
/// (a pattern that is both minimal and closed is stored once).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Roles {
    pub minimal: bool,
    pub closed: bool,
    pub closed_maximal: bool,
    pub minimal_minimal: bool,
}

impl Roles {
    pub const NONE: Roles = Roles {
        minimal: false,
        closed: false,
        closed_maximal: false,
        minimal_minimal: false,
    };

    pub fn is_empty(&self) -> bool {
        *self == Roles::NONE
    }
}

/// Comma-separated subset of `M,C,CMax,MMin`; `-` when no flag is set.
impl fmt::Display for Roles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            (self.minimal, "M"),
            (self.closed, "C"),
            (self.closed_maximal, "CMax"),
            (self.minimal_minimal, "MMin"),
        ];
        let mut wrote = false;
        for (_, name) in names.iter().filter(|(set, _)| *set) {
            if wrote {
                f.write_str(",")?;
            }
            f.write_str(name)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("-")?;
        }
        Ok(())
    }
}

impl FromStr for Roles {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut roles = Roles::NONE;
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(roles);
        }
        for flag in s.split(',') {
            match flag.trim() {
                "M" => roles.minimal = true,
                "C" => roles.closed = true,
                "CMax" => roles.closed_maximal = true,
                "MMin" => roles.minimal_minimal = true,
                other => {
                    return Err(Error::CorruptRepresentation(format!(
                        "unknown role flag {other:?}"
                    )))
                }
            }
        }
        Ok(roles)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoleFlaggedPattern {
    pub measured: MeasuredPattern,
    pub roles: Roles,
}

impl RoleFlaggedPattern {
    pub fn new(measured: MeasuredPattern, roles: Roles) -> Self {
        RoleFlaggedPattern { measured, roles }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.measured.pattern
    }
}

/// A mined set or representation together with the parameters that produced
/// it. Entries are distinct and sorted by size, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    kind: RepresentationKind,
    params: MiningParams,
    entries: Vec<RoleFlaggedPattern>,
    index: BTreeMap<Pattern, usize>,
}

impl Representation {
    /// Sorts `entries` and checks every structural invariant: distinct
    /// patterns, rare and correlated under `params`, consistent role flags.
    pub fn new(
        kind: RepresentationKind,
        params: MiningParams,
        mut entries: Vec<RoleFlaggedPattern>,
    ) -> Result<Self> {
        params.validate()?;
        entries.sort_by(|a, b| a.pattern().cmp(b.pattern()));
        let mut index = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            let m = &e.measured;
            let corrupt = |why: &str| {
                Err(Error::CorruptRepresentation(format!(
                    "{}: {why}",
                    m.pattern
                )))
            };
            if index.insert(m.pattern.clone(), i).is_some() {
                return corrupt("duplicate entry");
            }
            if m.conj == 0 || m.conj > m.disj || m.disj > params.num_transactions {
                return corrupt("supports violate 0 < conj <= disj <= |T|");
            }
            if m.bond != Rational::from_counts(m.conj, m.disj) {
                return corrupt("bond differs from conj/disj");
            }
            if !params.is_rare(m.conj) {
                return corrupt("pattern is not rare");
            }
            if !params.is_correlated(m.bond) {
                return corrupt("pattern is not correlated");
            }
            let r = e.roles;
            if (r.closed_maximal && !r.closed) || (r.minimal_minimal && !r.minimal) {
                return corrupt("inconsistent role flags");
            }
            if kind != RepresentationKind::Mcr && !(r.minimal || r.closed) {
                return corrupt("entry is neither minimal nor closed");
            }
        }
        Ok(Representation {
            kind,
            params,
            entries,
            index,
        })
    }

    pub fn kind(&self) -> RepresentationKind {
        self.kind
    }

    pub fn params(&self) -> &MiningParams {
        &self.params
    }

    pub fn entries(&self) -> &[RoleFlaggedPattern] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: &Pattern) -> Option<&RoleFlaggedPattern> {
        self.index.get(p).map(|&i| &self.entries[i])
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        self.index.contains_key(p)
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Pattern> {
        self.entries.iter().map(RoleFlaggedPattern::pattern)
    }

    pub fn measured(&self) -> impl Iterator<Item = &MeasuredPattern> {
        self.entries.iter().map(|e| &e.measured)
    }

    /// Number of entries carrying the given role.
    pub fn count_role(&self, role: impl Fn(&Roles) -> bool) -> usize {
        self.entries.iter().filter(|e| role(&e.roles)).count()
    }

    fn require(&self, expected: &'static str, ok: bool) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::WrongKind {
                expected,
                found: self.kind,
            })
        }
    }

    fn strict_subsets_of<'a>(
        &'a self,
        p: &'a Pattern,
    ) -> impl Iterator<Item = &'a RoleFlaggedPattern> + 'a {
        self.entries
            .iter()
            .take_while(move |e| e.pattern().len() < p.len())
            .filter(move |e| e.pattern().is_subset_of(p))
    }

    fn strict_supersets_of<'a>(
        &'a self,
        p: &'a Pattern,
    ) -> impl Iterator<Item = &'a RoleFlaggedPattern> + 'a {
        let start = self
            .entries
            .partition_point(|e| e.pattern().len() <= p.len());
        self.entries[start..]
            .iter()
            .filter(move |e| p.is_subset_of(e.pattern()))
    }

    /// The smallest closed-flagged entry containing `p`. The closed supersets
    /// of a rare correlated pattern always have a unique minimum (its
    /// closure); anything else means the representation is inconsistent.
    fn closure_of<'a>(
        &'a self,
        p: &'a Pattern,
        include_self: bool,
    ) -> Result<Option<&'a RoleFlaggedPattern>> {
        let mut closed: Vec<&RoleFlaggedPattern> = self
            .strict_supersets_of(p)
            .filter(|e| e.roles.closed)
            .collect();
        if include_self {
            if let Some(e) = self.get(p).filter(|e| e.roles.closed) {
                closed.insert(0, e);
            }
        }
        let Some(&smallest) = closed.first() else {
            return Ok(None);
        };
        if closed
            .iter()
            .any(|e| !smallest.pattern().is_subset_of(e.pattern()))
        {
            return Err(Error::CorruptRepresentation(format!(
                "closed supersets of {p} have no unique minimum"
            )));
        }
        Ok(Some(smallest))
    }
}

/// Result of an exact query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryAnswer {
    Member {
        conj: u64,
        disj: u64,
        neg: u64,
        bond: Rational,
    },
    NotRareCorrelated,
}

impl QueryAnswer {
    fn member(conj: u64, disj: u64, num_transactions: u64) -> Self {
        QueryAnswer::Member {
            conj,
            disj,
            neg: num_transactions - disj,
            bond: Rational::from_counts(conj, disj),
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, QueryAnswer::Member { .. })
    }
}

/// One TSV line: `member\tconj\tdisj\tneg\tbond` or `not-rare-correlated`.
impl fmt::Display for QueryAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryAnswer::Member {
                conj,
                disj,
                neg,
                bond,
            } => write!(f, "member\t{conj}\t{disj}\t{neg}\t{bond}"),
            QueryAnswer::NotRareCorrelated => f.write_str("not-rare-correlated"),
        }
    }
}

/// Answers membership and exact supports for `p` from an exact
/// representation (`MCR`, `RMCR`, `RMMaxF` or `RMinMF`).
pub fn query_pattern(rep: &Representation, p: &Pattern) -> Result<QueryAnswer> {
    rep.require("exact", rep.kind.is_exact())?;
    let t = rep.params.num_transactions;
    if let Some(e) = rep.get(p) {
        return Ok(QueryAnswer::member(e.measured.conj, e.measured.disj, t));
    }
    if rep.kind == RepresentationKind::Mcr {
        return Ok(QueryAnswer::NotRareCorrelated);
    }
    if rep.strict_subsets_of(p).next().is_none() || rep.strict_supersets_of(p).next().is_none() {
        return Ok(QueryAnswer::NotRareCorrelated);
    }
    match rep.kind {
        RepresentationKind::RmMaxF => {
            // Minimal generators of p's class are subsets of p and carry its
            // conj and bond; every other subset has conj and bond at least as
            // large.
            let mut conj = u64::MAX;
            let mut bond: Option<Rational> = None;
            for e in rep.strict_subsets_of(p) {
                conj = conj.min(e.measured.conj);
                bond = Some(bond.map_or(e.measured.bond, |b| b.min(e.measured.bond)));
            }
            let bond = bond.expect("subset existence checked above");
            let scaled = conj as u128 * bond.denom() as u128;
            if bond.is_zero() || !scaled.is_multiple_of(bond.numer() as u128) {
                return Err(Error::CorruptRepresentation(format!(
                    "minimum subset values {conj} and {bond} of {p} do not yield an integral disjunctive support"
                )));
            }
            let disj = (scaled / bond.numer() as u128) as u64;
            if disj > t || disj < conj {
                return Err(Error::CorruptRepresentation(format!(
                    "derived disjunctive support {disj} of {p} is out of range"
                )));
            }
            Ok(QueryAnswer::member(conj, disj, t))
        }
        _ => {
            let closure = rep.closure_of(p, false)?.ok_or_else(|| {
                Error::CorruptRepresentation(format!(
                    "{p} lies under a representation entry but has no closed superset"
                ))
            })?;
            Ok(QueryAnswer::member(
                closure.measured.conj,
                closure.measured.disj,
                t,
            ))
        }
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Ord + Copy> Range<T> {
    pub fn new(a: T, b: T) -> Self {
        Range {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn exact(v: T) -> Self {
        Range { lo: v, hi: v }
    }

    pub fn contains(&self, v: T) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl<T: fmt::Display> fmt::Display for Range<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Result of a query against the approximate representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundsAnswer {
    Member {
        conj: Range<u64>,
        disj: Range<u64>,
        bond: Range<Rational>,
    },
    NotRareCorrelated,
}

impl BoundsAnswer {
    pub fn is_member(&self) -> bool {
        matches!(self, BoundsAnswer::Member { .. })
    }
}

/// `member\t[lo,hi]\t[lo,hi]\t[lo,hi]` (conj, disj, bond) or
/// `not-rare-correlated`.
impl fmt::Display for BoundsAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsAnswer::Member { conj, disj, bond } => {
                write!(f, "member\t{conj}\t{disj}\t{bond}")
            }
            BoundsAnswer::NotRareCorrelated => f.write_str("not-rare-correlated"),
        }
    }
}

/// Membership and support/bond intervals from an `RMinMMaxF` representation.
///
/// With `F` ranging over closed-maximal supersets and `G` over
/// minimal-minimal-rare subsets of `p`: `R1 = max conj(F)`, `R2 = min conj(G)`,
/// `R3 = min disj(F)`, `R4 = max disj(G)`. Conj lies in `[min, max]` of
/// `R1, R2`, disj in that of `R3, R4`, and bond in
/// `[MinConj/MaxDisj, MaxConj/MinDisj]`.
pub fn approximate_query(rep: &Representation, p: &Pattern) -> Result<BoundsAnswer> {
    rep.require("RMinMMaxF", rep.kind == RepresentationKind::RMinMMaxF)?;
    if let Some(e) = rep.get(p) {
        let m = &e.measured;
        return Ok(BoundsAnswer::Member {
            conj: Range::exact(m.conj),
            disj: Range::exact(m.disj),
            bond: Range::exact(m.bond),
        });
    }
    if rep.strict_subsets_of(p).next().is_none() || rep.strict_supersets_of(p).next().is_none() {
        return Ok(BoundsAnswer::NotRareCorrelated);
    }
    let above: Vec<&MeasuredPattern> = rep
        .strict_supersets_of(p)
        .filter(|e| e.roles.closed_maximal)
        .map(|e| &e.measured)
        .collect();
    let below: Vec<&MeasuredPattern> = rep
        .strict_subsets_of(p)
        .filter(|e| e.roles.minimal_minimal)
        .map(|e| &e.measured)
        .collect();
    if above.is_empty() || below.is_empty() {
        return Err(Error::CorruptRepresentation(format!(
            "{p} lies between entries but lacks a closed-maximal superset or a minimal-rare subset"
        )));
    }
    let r1 = above.iter().map(|m| m.conj).max().unwrap_or(0);
    let r2 = below.iter().map(|m| m.conj).min().unwrap_or(0);
    let r3 = above.iter().map(|m| m.disj).min().unwrap_or(0);
    let r4 = below.iter().map(|m| m.disj).max().unwrap_or(0);
    let conj = Range::new(r1, r2);
    let disj = Range::new(r3, r4);
    let bond = Range {
        lo: Rational::from_counts(conj.lo, disj.hi),
        hi: Rational::from_counts(conj.hi, disj.lo),
    };
    Ok(BoundsAnswer::Member { conj, disj, bond })
}

/// Rebuilds the full rare correlated set from an `RMCR` representation by
/// emitting, for each minimal entry `M` with closure `F`, every pattern
/// between `M` and `F` with `F`'s supports.
pub fn regenerate_all(rmcr: &Representation) -> Result<Representation> {
    rmcr.require("RMCR", rmcr.kind == RepresentationKind::Rmcr)?;
    let mut out: BTreeMap<Pattern, MeasuredPattern> = rmcr
        .measured()
        .map(|m| (m.pattern.clone(), m.clone()))
        .collect();
    for e in rmcr.entries.iter().filter(|e| e.roles.minimal) {
        let m = e.pattern();
        let closure = rmcr.closure_of(m, true)?.ok_or_else(|| {
            Error::CorruptRepresentation(format!("minimal entry {m} has no covering closed entry"))
        })?;
        let f = &closure.measured;
        let extra = f.pattern.difference(m);
        if extra.len() >= 64 {
            return Err(Error::CorruptRepresentation(format!(
                "equivalence class of {m} is too wide to enumerate"
            )));
        }
        // Proper non-empty subsets of F∖M, in lexicographic-ish mask order.
        let full: u64 = (1u64 << extra.len()) - 1;
        for mask in 1..full {
            let mut x = m.clone();
            for (bit, &item) in extra.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    x = x.with(item);
                }
            }
            out.entry(x.clone()).or_insert_with(|| MeasuredPattern {
                pattern: x,
                conj: f.conj,
                disj: f.disj,
                bond: f.bond,
            });
        }
    }
    let entries = out
        .into_values()
        .map(|m| RoleFlaggedPattern::new(m, Roles::NONE))
        .collect();
    Representation::new(RepresentationKind::Mcr, rmcr.params.clone(), entries)
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .entries
            .iter()
            .map(|e| e.measured.to_string())
            .collect();
        write!(f, "{} {{{}}}", self.kind, items.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::miner::{derive_rminmf, derive_rminmmaxf, derive_rmmaxf, mine_mcr, mine_rmcr};
    use crate::testutil::{pat, q, table1};
    use alloc::vec;

    fn params() -> MiningParams {
        MiningParams::for_db(&table1(), 4, q(1, 5)).unwrap()
    }

    #[test]
    fn kind_and_roles_text() {
        for k in RepresentationKind::ALL {
            assert_eq!(k.name().parse::<RepresentationKind>().unwrap(), k);
        }
        assert_eq!(
            "rminmmaxf".parse::<RepresentationKind>().unwrap(),
            RepresentationKind::RMinMMaxF
        );
        assert!("xyz".parse::<RepresentationKind>().is_err());
        let r = Roles {
            minimal: true,
            closed: true,
            closed_maximal: true,
            minimal_minimal: false,
        };
        assert_eq!(r.to_string(), "M,C,CMax");
        assert_eq!("M,C,CMax".parse::<Roles>().unwrap(), r);
        assert_eq!(Roles::NONE.to_string(), "-");
        assert_eq!("-".parse::<Roles>().unwrap(), Roles::NONE);
        assert!("M,Q".parse::<Roles>().is_err());
    }

    #[test]
    fn construction_rejects_bad_entries() {
        let m = |p: &str, c, d| MeasuredPattern::new(pat(p), c, d).unwrap();
        let e = |p: &str, c, d, minimal| {
            RoleFlaggedPattern::new(
                m(p, c, d),
                Roles {
                    minimal,
                    ..Roles::NONE
                },
            )
        };
        let bad = |entries| Representation::new(RepresentationKind::Rmcr, params(), entries);
        assert!(bad(vec![e("A", 3, 3, true), e("A", 3, 3, true)]).is_err());
        assert!(bad(vec![e("B", 4, 4, true)]).is_err());
        assert!(bad(vec![e("AB", 1, 6, true)]).is_err());
        assert!(bad(vec![e("A", 3, 3, false)]).is_err());
        assert!(bad(vec![e("A", 3, 3, true)]).is_ok());
    }

    #[test]
    fn exact_queries() {
        let db = table1();
        let rmcr = mine_rmcr(&db, &params()).unwrap();
        let ans = query_pattern(&rmcr, &pat("ABE")).unwrap();
        assert_eq!(
            ans,
            QueryAnswer::Member {
                conj: 2,
                disj: 5,
                neg: 0,
                bond: q(2, 5)
            }
        );
        assert_eq!(ans.to_string(), "member\t2\t5\t0\t2/5");
        for rep in [
            rmcr.clone(),
            derive_rmmaxf(&db, &rmcr).unwrap(),
            derive_rminmf(&db, &rmcr).unwrap(),
            mine_mcr(&db, &params()).unwrap(),
        ] {
            assert_eq!(query_pattern(&rep, &pat("ABE")).unwrap(), ans);
            assert_eq!(
                query_pattern(&rep, &pat("BE")).unwrap(),
                QueryAnswer::NotRareCorrelated
            );
            assert_eq!(
                query_pattern(&rep, &pat("BD")).unwrap(),
                QueryAnswer::NotRareCorrelated
            );
        }
        let approx = derive_rminmmaxf(&db, &rmcr).unwrap();
        assert!(matches!(
            query_pattern(&approx, &pat("A")),
            Err(Error::WrongKind { .. })
        ));
    }

    #[test]
    fn approximate_bounds() {
        let db = table1();
        let rep = derive_rminmmaxf(&db, &mine_rmcr(&db, &params()).unwrap()).unwrap();
        // Bracketed by G = A (conj 3, disj 3) and F = ABCE (conj 2, disj 5);
        // the true values are conj 2, disj 5.
        let ans = approximate_query(&rep, &pat("ABE")).unwrap();
        assert_eq!(
            ans,
            BoundsAnswer::Member {
                conj: Range::new(2, 3),
                disj: Range::new(3, 5),
                bond: Range::new(q(2, 5), q(3, 3)),
            }
        );
        assert_eq!(ans.to_string(), "member\t[2,3]\t[3,5]\t[2/5,3/3]");
        let m = ans;
        let BoundsAnswer::Member { conj, disj, bond } = m else {
            unreachable!()
        };
        assert!(conj.contains(2) && disj.contains(5) && bond.contains(q(2, 5)));
        let abce = approximate_query(&rep, &pat("ABCE")).unwrap();
        assert_eq!(abce.to_string(), "member\t[2,2]\t[5,5]\t[2/5,2/5]");
        assert_eq!(
            approximate_query(&rep, &pat("BE")).unwrap(),
            BoundsAnswer::NotRareCorrelated
        );
    }

    #[test]
    fn regeneration_matches_mcr() {
        let db = table1();
        for minsupp in 1..=6 {
            let p = MiningParams::for_db(&db, minsupp, q(1, 5)).unwrap();
            let rmcr = mine_rmcr(&db, &p).unwrap();
            assert_eq!(regenerate_all(&rmcr).unwrap(), mine_mcr(&db, &p).unwrap());
        }
    }
}
