//! Antichains and support-tilting sets by backtracking over indecomposables.
//!
//! Indecomposables are visited in `(i,u)`-lexicographic order (the order of
//! `ModCategory::indecs`), so every walk is deterministic. Compatibility is a
//! `u128` mask per indecomposable, which caps a single search at 128
//! indecomposables. That covers every Dynkin type up to rank 8.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::ar_orbits::ModCategory;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

const MAX_INDECS: usize = 128;

/// A set of indecomposables (indices into `ModCategory::indecs`), sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecSet {
    members: Vec<usize>,
    support: VertexSet,
}

impl IndecSet {
    pub fn new(cat: &ModCategory, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let support = members
            .iter()
            .fold(VertexSet::EMPTY, |acc, &k| acc.union(cat.indecs()[k].support()));
        IndecSet { members, support }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn support(&self) -> VertexSet {
        self.support
    }

    pub fn support_rank(&self) -> usize {
        self.support.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members.binary_search(&idx).is_ok()
    }

    /// `{(i,u),…}` with 1-based vertices, e.g. `{(1,0),(2,0)}`.
    pub fn format_pairs(&self, cat: &ModCategory) -> String {
        let parts: Vec<String> = self
            .members
            .iter()
            .map(|&k| {
                let m = &cat.indecs()[k];
                format!("({},{})", m.vertex + 1, m.power)
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Antichain,
    SupportTilting,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "antichain" | "antichains" => Ok(Kind::Antichain),
            "tilting" | "support-tilting" | "support_tilting" => Ok(Kind::SupportTilting),
            _ => Err(Error::OutOfRange(format!(
                "unknown statistic `{s}` (expected antichain or tilting)"
            ))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Antichain => "antichain",
            Kind::SupportTilting => "tilting",
        })
    }
}

/// Counts of one kind of set, by support-rank and by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub label: String,
    pub n: usize,
    pub kind: Kind,
    pub by_support_rank: Vec<BigUint>,
    pub by_size: Vec<BigUint>,
    pub total: BigUint,
}

impl CountTable {
    fn from_tallies(cat: &ModCategory, kind: Kind, rank: Vec<u64>, size: Vec<u64>) -> Self {
        let total = rank.iter().map(|&c| BigUint::from(c)).sum();
        CountTable {
            label: cat.datum().label().to_string(),
            n: cat.rank(),
            kind,
            by_support_rank: rank.into_iter().map(BigUint::from).collect(),
            by_size: size.into_iter().map(BigUint::from).collect(),
            total,
        }
    }

    /// Same numbers, ignoring the label.
    pub fn same_counts(&self, other: &CountTable) -> bool {
        self.by_support_rank == other.by_support_rank
            && self.by_size == other.by_size
            && self.total == other.total
    }
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row: Vec<String> = self.by_support_rank.iter().map(|v| v.to_string()).collect();
        write!(f, "{} | total {}", row.join(" "), self.total)
    }
}

struct Search<'a> {
    cat: &'a ModCategory,
    kind: Kind,
    compat: Vec<u128>,
}

impl<'a> Search<'a> {
    fn new(cat: &'a ModCategory, kind: Kind) -> Result<Self> {
        let m = cat.len();
        if m > MAX_INDECS {
            return Err(Error::Infeasible {
                label: cat.datum().label().to_string(),
                reason: format!("{m} indecomposables exceed the {MAX_INDECS}-bit search masks"),
            });
        }
        let compat = (0..m)
            .map(|a| {
                (0..m)
                    .filter(|&b| {
                        b != a
                            && match kind {
                                Kind::Antichain => !cat.hom().get(a, b) && !cat.hom().get(b, a),
                                Kind::SupportTilting => !cat.ext().get(a, b) && !cat.ext().get(b, a),
                            }
                    })
                    .fold(0u128, |acc, b| acc | 1 << b)
            })
            .collect();
        Ok(Search { cat, kind, compat })
    }

    fn accepts(&self, len: usize, support: VertexSet) -> bool {
        match self.kind {
            Kind::Antichain => true,
            Kind::SupportTilting => len == support.len(),
        }
    }

    fn above(b: usize) -> u128 {
        if b + 1 >= 128 {
            0
        } else {
            !0u128 << (b + 1)
        }
    }

    /// Walks every compatible set whose members are all in `cand` and are
    /// added after the current `stack`.
    fn walk<F: FnMut(&[usize], VertexSet)>(
        &self,
        stack: &mut Vec<usize>,
        support: VertexSet,
        cand: u128,
        visit: &mut F,
    ) {
        if self.accepts(stack.len(), support) {
            visit(stack, support);
        }
        let mut rest = cand;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next_support = support.union(self.cat.indecs()[b].support());
            // a rigid set never has more summands than its support-rank
            if self.kind == Kind::SupportTilting && stack.len() + 1 > next_support.len() {
                continue;
            }
            stack.push(b);
            self.walk(stack, next_support, cand & self.compat[b] & Self::above(b), visit);
            stack.pop();
        }
    }

    fn all(&self) -> u128 {
        let m = self.cat.len();
        if m == 128 {
            !0
        } else {
            (1u128 << m) - 1
        }
    }
}

/// Visits every set of the given kind in lexicographic order, starting with
/// the empty set.
pub fn for_each_set<F: FnMut(&[usize], VertexSet)>(
    cat: &ModCategory,
    kind: Kind,
    mut visit: F,
) -> Result<()> {
    let search = Search::new(cat, kind)?;
    let mut stack = Vec::new();
    search.walk(&mut stack, VertexSet::EMPTY, search.all(), &mut visit);
    Ok(())
}

fn collect(cat: &ModCategory, kind: Kind) -> Result<Vec<IndecSet>> {
    let mut out = Vec::new();
    for_each_set(cat, kind, |members, support| {
        out.push(IndecSet {
            members: members.to_vec(),
            support,
        })
    })?;
    Ok(out)
}

/// Every set of pairwise Hom-orthogonal indecomposables, the empty set first.
pub fn enumerate_antichains(cat: &ModCategory) -> Result<Vec<IndecSet>> {
    collect(cat, Kind::Antichain)
}

/// Every Ext-free set `T` with `|T| = |supp T|`, the empty set first.
pub fn enumerate_support_tilting(cat: &ModCategory) -> Result<Vec<IndecSet>> {
    collect(cat, Kind::SupportTilting)
}

/// Tallies both statistics in one pass. The search tree is split at its
/// first level and the branches are counted in parallel.
pub fn count_tables(cat: &ModCategory, kind: Kind) -> Result<CountTable> {
    let search = Search::new(cat, kind)?;
    let n = cat.rank();
    let m = cat.len();
    let all = search.all();

    let tally = |first: Option<usize>| -> (Vec<u64>, Vec<u64>) {
        let mut rank = vec![0u64; n + 1];
        let mut size = vec![0u64; n + 1];
        let mut visit = |members: &[usize], support: VertexSet| {
            rank[support.len()] += 1;
            if members.len() >= size.len() {
                size.resize(members.len() + 1, 0);
            }
            size[members.len()] += 1;
        };
        match first {
            None => visit(&[], VertexSet::EMPTY),
            Some(a) => {
                let mut stack = vec![a];
                let support = cat.indecs()[a].support();
                search.walk(&mut stack, support, all & search.compat[a] & Search::above(a), &mut visit);
            }
        }
        (rank, size)
    };

    let parts: Vec<(Vec<u64>, Vec<u64>)> = std::iter::once(None)
        .chain((0..m).map(Some))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(tally)
        .collect();

    let mut rank = vec![0u64; n + 1];
    let mut size = vec![0u64; n + 1];
    for (r, s) in parts {
        for (k, c) in r.into_iter().enumerate() {
            rank[k] += c;
        }
        if s.len() > size.len() {
            size.resize(s.len(), 0);
        }
        for (k, c) in s.into_iter().enumerate() {
            size[k] += c;
        }
    }
    Ok(CountTable::from_tallies(cat, kind, rank, size))
}

pub fn is_antichain(cat: &ModCategory, members: &[usize]) -> bool {
    members.iter().enumerate().all(|(k, &a)| {
        members[k + 1..]
            .iter()
            .all(|&b| a != b && !cat.hom().get(a, b) && !cat.hom().get(b, a))
    })
}

pub fn is_rigid(cat: &ModCategory, members: &[usize]) -> bool {
    members
        .iter()
        .all(|&a| members.iter().all(|&b| !cat.ext().get(a, b)))
}

/// No indecomposable outside `t` with support inside `supp t` can be added
/// without creating an extension.
pub fn is_maximal_rigid_in_support(cat: &ModCategory, t: &IndecSet) -> bool {
    (0..cat.len())
        .filter(|&x| !t.contains(x) && cat.indecs()[x].support().is_subset(t.support()))
        .all(|x| {
            cat.ext().get(x, x)
                || t.members()
                    .iter()
                    .any(|&y| cat.ext().get(x, y) || cat.ext().get(y, x))
        })
}

/// Sincere antichains split by whether they contain a sincere indecomposable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SincereSplit {
    /// Sincere antichains containing a sincere indecomposable.
    pub u: u64,
    /// Sincere antichains without one.
    pub v: u64,
    /// `per_vertex[i]`: antichains whose sincere member lies in the orbit of `i`.
    pub per_vertex: Vec<u64>,
    /// Antichains with more than one sincere member.
    pub multiple: u64,
}

pub fn classify_sincere<'a, I>(cat: &ModCategory, antichains: I) -> SincereSplit
where
    I: IntoIterator<Item = &'a IndecSet>,
{
    let full = cat.full_support();
    let mut split = SincereSplit {
        per_vertex: vec![0; cat.rank()],
        ..SincereSplit::default()
    };
    for a in antichains {
        if a.support() != full {
            continue;
        }
        let sincere: Vec<usize> = a
            .members()
            .iter()
            .copied()
            .filter(|&k| cat.indecs()[k].support() == full)
            .collect();
        match sincere.len() {
            0 => split.v += 1,
            k => {
                split.u += 1;
                split.per_vertex[cat.indecs()[sincere[0]].vertex] += 1;
                if k > 1 {
                    split.multiple += 1;
                }
            }
        }
    }
    split
}

fn require_antichain(cat: &ModCategory, a: &IndecSet) -> Result<()> {
    if is_antichain(cat, a.members()) {
        Ok(())
    } else {
        Err(Error::NotAntichain(format!(
            "{} is not an antichain",
            a.format_pairs(cat)
        )))
    }
}

/// Sends a sincere antichain to an antichain without injectives by dropping
/// its injective member, if any (the one at the smallest vertex if several).
pub fn eta_map(cat: &ModCategory, a: &IndecSet) -> Result<IndecSet> {
    require_antichain(cat, a)?;
    if a.support() != cat.full_support() {
        return Err(Error::NotSincere);
    }
    let dropped = a
        .members()
        .iter()
        .copied()
        .filter_map(|k| cat.injective_vertex(k).map(|v| (v, k)))
        .min();
    Ok(match dropped {
        None => a.clone(),
        Some((_, k)) => IndecSet::new(
            cat,
            a.members().iter().copied().filter(|&x| x != k).collect(),
        ),
    })
}

/// Inverse of [`eta_map`]: a non-sincere antichain gets `I(i)` for the
/// smallest vertex `i` missing from its support.
pub fn eta_inverse(cat: &ModCategory, w: &IndecSet) -> Result<IndecSet> {
    require_antichain(cat, w)?;
    let full = cat.full_support();
    let Some(i) = (0..cat.rank()).find(|&v| !w.support().contains(v)) else {
        return Ok(w.clone());
    };
    let mut members = w.members().to_vec();
    members.push(cat.injective(i));
    let out = IndecSet::new(cat, members);
    require_antichain(cat, &out)?;
    if out.support() != full {
        return Err(Error::NotSincere);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar_orbits::knit_category;
    use crate::hom_calculus::{ext_nonzero, hom_nonzero};
    use crate::root_datum::{build_cartan, DynkinType, OrientationSpec, Series};

    fn cat(series: Series, n: usize) -> ModCategory {
        let d = build_cartan(DynkinType::new(series, n).unwrap(), &OrientationSpec::LinearDefault)
            .unwrap();
        knit_category(&d).unwrap()
    }

    fn ints(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    /// Brute force over all subsets, straight from the predicates.
    fn brute(c: &ModCategory, kind: Kind) -> Vec<Vec<usize>> {
        let keys: Vec<(usize, usize)> = c.indecs().iter().map(|m| (m.vertex, m.power)).collect();
        let m = keys.len();
        let mut out = Vec::new();
        for bits in 0u32..1 << m {
            let set: Vec<usize> = (0..m).filter(|&k| bits >> k & 1 == 1).collect();
            let ok = match kind {
                Kind::Antichain => set.iter().all(|&a| {
                    set.iter()
                        .all(|&b| a == b || (!hom_nonzero(c, keys[a], keys[b])))
                }),
                Kind::SupportTilting => {
                    let support = set
                        .iter()
                        .fold(VertexSet::EMPTY, |s, &k| s.union(c.indecs()[k].support()));
                    set.iter()
                        .all(|&a| set.iter().all(|&b| !ext_nonzero(c, keys[a], keys[b])))
                        && set.len() == support.len()
                }
            };
            if ok {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn a2_antichains_by_hand() {
        let c = cat(Series::A, 2);
        let sets: Vec<String> = enumerate_antichains(&c)
            .unwrap()
            .iter()
            .map(|s| s.format_pairs(&c))
            .collect();
        // S1 = (1,0), S2 = (1,1), P2 = (2,0)
        assert_eq!(sets, vec!["{}", "{(1,0)}", "{(1,0),(1,1)}", "{(1,1)}", "{(2,0)}"]);
        let t = count_tables(&c, Kind::Antichain).unwrap();
        assert_eq!(ints(&t.by_support_rank), vec![1, 2, 2]);
    }

    #[test]
    fn a2_support_tilting_by_hand() {
        let c = cat(Series::A, 2);
        let sets: Vec<String> = enumerate_support_tilting(&c)
            .unwrap()
            .iter()
            .map(|s| s.format_pairs(&c))
            .collect();
        // {}, {S1}, {P1,P2}, {S2}, {P2,I2}
        assert_eq!(sets, vec!["{}", "{(1,0)}", "{(1,0),(2,0)}", "{(1,1)}", "{(1,1),(2,0)}"]);
    }

    #[test]
    fn matches_brute_force() {
        for (s, n) in [
            (Series::A, 2),
            (Series::A, 3),
            (Series::B, 2),
            (Series::B, 3),
            (Series::C, 3),
            (Series::G, 2),
            (Series::D, 4),
        ] {
            let c = cat(s, n);
            for kind in [Kind::Antichain, Kind::SupportTilting] {
                let mut got: Vec<Vec<usize>> = collect(&c, kind)
                    .unwrap()
                    .into_iter()
                    .map(|x| x.members)
                    .collect();
                got.sort();
                assert_eq!(got, brute(&c, kind), "{s}{n} {kind}");
            }
        }
    }

    #[test]
    fn published_rows() {
        let row = |s, n, kind| ints(&count_tables(&cat(s, n), kind).unwrap().by_support_rank);
        assert_eq!(row(Series::A, 3, Kind::Antichain), vec![1, 3, 5, 5]);
        assert_eq!(row(Series::D, 4, Kind::SupportTilting), vec![1, 4, 9, 16, 20]);
        assert_eq!(row(Series::F, 4, Kind::SupportTilting), vec![1, 4, 10, 24, 66]);
        assert_eq!(row(Series::G, 2, Kind::Antichain), vec![1, 2, 5]);
        assert_eq!(row(Series::B, 3, Kind::SupportTilting), vec![1, 3, 6, 10]);
        assert_eq!(row(Series::E, 6, Kind::SupportTilting), vec![1, 6, 20, 50, 110, 228, 418]);
    }

    #[test]
    fn parallel_counts_match_stream() {
        let c = cat(Series::D, 5);
        for kind in [Kind::Antichain, Kind::SupportTilting] {
            let table = count_tables(&c, kind).unwrap();
            let sets = collect(&c, kind).unwrap();
            assert_eq!(table.total, BigUint::from(sets.len()));
            let mut by_size = vec![0u64; c.rank() + 1];
            for s in &sets {
                by_size[s.len()] += 1;
            }
            assert_eq!(ints(&table.by_size), by_size);
        }
    }

    #[test]
    fn support_tilting_is_maximal_rigid() {
        for (s, n) in [(Series::A, 4), (Series::B, 4), (Series::D, 5), (Series::G, 2)] {
            let c = cat(s, n);
            for t in enumerate_support_tilting(&c).unwrap() {
                assert!(is_rigid(&c, t.members()));
                assert!(is_maximal_rigid_in_support(&c, &t), "{}", t.format_pairs(&c));
            }
        }
    }

    #[test]
    fn sincere_split_b3() {
        let c = cat(Series::B, 3);
        let split = classify_sincere(&c, &enumerate_antichains(&c).unwrap());
        assert_eq!((split.u, split.v, split.multiple), (6, 4, 0));
    }

    #[test]
    fn eta_round_trip_b4() {
        let c = cat(Series::B, 4);
        let all = enumerate_antichains(&c).unwrap();
        let sincere: Vec<&IndecSet> = all.iter().filter(|a| a.support() == c.full_support()).collect();
        assert_eq!(sincere.len(), 35);
        let mut images = Vec::new();
        for a in &sincere {
            let w = eta_map(&c, a).unwrap();
            assert!(w.members().iter().all(|&k| !c.is_injective(k)));
            assert_eq!(&eta_inverse(&c, &w).unwrap(), *a);
            images.push(w);
        }
        images.sort();
        images.dedup();
        let without: usize = all
            .iter()
            .filter(|a| a.members().iter().all(|&k| !c.is_injective(k)))
            .count();
        assert_eq!((images.len(), without), (35, 35));
    }

    #[test]
    fn eta_errors() {
        let c = cat(Series::B, 2);
        let s1 = IndecSet::new(&c, vec![0]);
        assert!(matches!(eta_map(&c, &s1), Err(Error::NotSincere)));
        let chain = IndecSet::new(&c, vec![c.projective(0), c.projective(1)]);
        assert!(matches!(eta_map(&c, &chain), Err(Error::NotAntichain(_))));
    }
}
