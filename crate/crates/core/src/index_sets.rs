//! Index sets of OG(m, N): their types, the bijection with typed k-strict
//! partitions, and the closure orders `<=` (odd N) and `⪯` (even N).
//!
//! Elements are 1-based and kept sorted. The closure order on even spaces is
//! the combinatorial relation `preceq`; the geometric parity condition on
//! subspaces is not modelled.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate_kstrict, enumerate_typed, index_functions, GrassParams, Typed};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IndexSet {
    elements: Vec<u32>,
    #[serde(skip)]
    params: GrassParams,
}

impl IndexSet {
    pub fn new(mut elements: Vec<u32>, params: GrassParams) -> Result<Self> {
        elements.sort_unstable();
        let big_n = params.big_n;
        if elements.len() != params.m as usize {
            return Err(Error::Params(format!(
                "index set needs {} elements, got {}",
                params.m,
                elements.len()
            )));
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Params(format!("repeated element in {elements:?}")));
        }
        if elements.iter().any(|&p| p == 0 || p > big_n) {
            return Err(Error::Params(format!("elements of {elements:?} must lie in [1,{big_n}]")));
        }
        let set: BTreeSet<u32> = elements.iter().copied().collect();
        if elements.iter().any(|&p| set.contains(&(big_n + 1 - p))) {
            return Err(Error::Params(format!("{elements:?} contains a pair summing to {}", big_n + 1)));
        }
        Ok(IndexSet { elements, params })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn params(&self) -> &GrassParams {
        &self.params
    }

    fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Type in {0,1,2}. Odd spaces have no types; they report 0.
    pub fn type_of(&self) -> u8 {
        let n = self.params.n;
        if !self.params.is_even() || (!self.contains(n + 1) && !self.contains(n + 2)) {
            return 0;
        }
        let missing = (1..=n + 1).filter(|&x| !self.contains(x)).count();
        1 + (missing % 2) as u8
    }

    /// Replace n+1 by n+2.
    pub fn bar(&self) -> IndexSet {
        let n = self.params.n;
        let elements = self.elements.iter().map(|&p| if p == n + 1 { n + 2 } else { p }).collect();
        self.with(elements)
    }

    /// The involution exchanging n+1 and n+2 (the identity for odd N).
    pub fn iota(&self) -> IndexSet {
        if !self.params.is_even() {
            return self.clone();
        }
        let n = self.params.n;
        let elements = self
            .elements
            .iter()
            .map(|&p| match p {
                x if x == n + 1 => n + 2,
                x if x == n + 2 => n + 1,
                x => x,
            })
            .collect();
        self.with(elements)
    }

    /// `[P] = P ∪ {N+1-p}`.
    pub fn bracket(&self) -> BTreeSet<u32> {
        let big_n = self.params.big_n;
        self.elements.iter().flat_map(|&p| [p, big_n + 1 - p]).collect()
    }

    fn with(&self, mut elements: Vec<u32>) -> IndexSet {
        elements.sort_unstable();
        IndexSet { elements, params: self.params }
    }

    fn count_below(&self, c: u32) -> usize {
        self.elements.iter().filter(|&&p| p < c).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.elements)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.elements.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

fn same_space(q: &IndexSet, p: &IndexSet) {
    debug_assert_eq!(q.params, p.params, "index sets from different spaces");
}

/// Componentwise order `q_j <= p_j`.
pub fn leq(q: &IndexSet, p: &IndexSet) -> bool {
    same_space(q, p);
    q.elements.iter().zip(&p.elements).all(|(a, b)| a <= b)
}

/// Critical indices c <= n+1 of the pair (Q, P), in increasing order.
pub fn critical_indices(q: &IndexSet, p: &IndexSet) -> Vec<u32> {
    same_space(q, p);
    let n = p.params.n;
    let (bq, bp) = (q.bracket(), p.bracket());
    // [c, n+1] must sit inside both brackets, so c starts at the lowest
    // point of the common run ending at n+1.
    let mut lowest = n + 2;
    while lowest > 1 && bq.contains(&(lowest - 1)) && bp.contains(&(lowest - 1)) {
        lowest -= 1;
    }
    (lowest..=n + 1).filter(|&c| q.count_below(c) == p.count_below(c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreceqResult {
    pub holds: bool,
    /// Smallest critical index, when the pair is critical.
    pub critical: Option<u32>,
}

/// `Q ⪯ P`: `Q <= P`, and equal types whenever the pair is critical.
pub fn preceq(q: &IndexSet, p: &IndexSet) -> PreceqResult {
    let critical = critical_indices(q, p).first().copied();
    let holds = leq(q, p) && (critical.is_none() || q.type_of() == p.type_of());
    PreceqResult { holds, critical }
}

/// The closure order of the space: `⪯` for even N, `<=` for odd N.
pub fn closure_leq(q: &IndexSet, p: &IndexSet) -> bool {
    if p.params.is_even() {
        preceq(q, p).holds
    } else {
        leq(q, p)
    }
}

/// All index sets of OG(m, N) in lexicographic order.
pub fn all_index_sets(params: &GrassParams) -> Vec<IndexSet> {
    fn go(params: &GrassParams, start: u32, cur: &mut Vec<u32>, out: &mut Vec<IndexSet>) {
        if cur.len() == params.m as usize {
            out.push(IndexSet { elements: cur.clone(), params: *params });
            return;
        }
        for x in start..=params.big_n {
            if cur.contains(&(params.big_n + 1 - x)) || 2 * x == params.big_n + 1 {
                continue;
            }
            cur.push(x);
            go(params, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(params, 1, &mut Vec::new(), &mut out);
    out
}

/// Schubert class labels of the space: typed shapes for even N, untyped for odd N.
pub fn class_labels(params: &GrassParams) -> Vec<Typed> {
    if params.is_even() {
        enumerate_typed(params.k, params.rows(), params.cols())
    } else {
        enumerate_kstrict(params.k, params.rows(), params.cols())
            .into_iter()
            .map(Typed::untyped)
            .collect()
    }
}

/// Index set `{p_j}` of a typed partition.
pub fn from_partition(lambda: &Typed, params: &GrassParams) -> Result<IndexSet> {
    let (_, pj) = index_functions(lambda, params)?;
    IndexSet::new(pj, *params)
}

/// The bijection between index sets and class labels, tabulated in both directions.
pub struct Bijection {
    params: GrassParams,
    to_set: HashMap<Typed, IndexSet>,
    to_partition: HashMap<IndexSet, Typed>,
}

impl Bijection {
    pub fn new(params: &GrassParams) -> Result<Self> {
        let mut to_set = HashMap::new();
        let mut to_partition = HashMap::new();
        for lambda in class_labels(params) {
            let set = from_partition(&lambda, params)?;
            if let Some(prev) = to_partition.insert(set.clone(), lambda.clone()) {
                return Err(Error::Expansion(format!("{prev} and {lambda} share the index set {set}")));
            }
            to_set.insert(lambda, set);
        }
        let total = all_index_sets(params).len();
        if total != to_partition.len() {
            return Err(Error::Expansion(format!(
                "{} labels but {} index sets in {}",
                to_partition.len(),
                total,
                params
            )));
        }
        Ok(Bijection { params: *params, to_set, to_partition })
    }

    pub fn params(&self) -> &GrassParams {
        &self.params
    }

    pub fn index_set(&self, lambda: &Typed) -> Result<&IndexSet> {
        self.to_set
            .get(lambda)
            .ok_or_else(|| Error::OutsideRectangle(format!("{lambda} in {}", self.params)))
    }

    pub fn partition(&self, set: &IndexSet) -> Result<&Typed> {
        self.to_partition
            .get(set)
            .ok_or_else(|| Error::Params(format!("{set} is not an index set of {}", self.params)))
    }
}

/// Inverse of `from_partition`, by table lookup.
pub fn to_partition(set: &IndexSet) -> Result<Typed> {
    Bijection::new(set.params())?.partition(set).cloned()
}

#[derive(Clone, Debug, Serialize)]
pub struct Poset {
    pub space: String,
    pub order: &'static str,
    pub elements: Vec<PosetElement>,
    /// Cover relations (lower, upper) as positions in `elements`.
    pub covers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PosetElement {
    pub index_set: Vec<u32>,
    pub partition: Vec<u32>,
    #[serde(rename = "type")]
    pub ty: u8,
    pub codim: u32,
}

/// Hasse diagram of the closure order, with elements sorted by codimension.
pub fn poset(params: &GrassParams) -> Result<Poset> {
    let bij = Bijection::new(params)?;
    let mut sets = all_index_sets(params);
    sets.sort_by_key(|s| (bij.partition(s).map(|l| l.size()).unwrap_or(0), s.elements.clone()));
    let count = sets.len();
    let below: Vec<Vec<bool>> = sets
        .iter()
        .map(|p| sets.iter().map(|q| closure_leq(q, p)).collect())
        .collect();
    let mut covers = Vec::new();
    for (hi, row) in below.iter().enumerate() {
        for lo in (0..count).filter(|&lo| lo != hi && row[lo]) {
            let between = (0..count).any(|mid| mid != lo && mid != hi && row[mid] && below[mid][lo]);
            if !between {
                covers.push((lo, hi));
            }
        }
    }
    covers.sort_unstable();
    let elements = sets
        .iter()
        .map(|s| {
            let lambda = bij.partition(s)?;
            Ok(PosetElement {
                index_set: s.elements.clone(),
                partition: lambda.parts().to_vec(),
                ty: lambda.ty(),
                codim: lambda.size(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poset {
        space: params.to_string(),
        order: if params.is_even() { "preceq" } else { "leq" },
        elements,
        covers,
    })
}

impl Poset {
    /// One line per cover: `lower -> upper`, index sets as bracketed lists.
    pub fn edge_list(&self) -> String {
        let show = |i: usize| {
            let body: Vec<String> = self.elements[i].index_set.iter().map(u32::to_string).collect();
            format!("[{}]", body.join(","))
        };
        self.covers.iter().map(|&(lo, hi)| format!("{} -> {}\n", show(lo), show(hi))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spaces(big_n: u32) -> Vec<GrassParams> {
        (0..)
            .take_while(|m| 2 * m < big_n)
            .filter_map(|m| GrassParams::new(big_n, m).ok())
            .collect()
    }

    #[test]
    fn types_and_small_cases() {
        let p = GrassParams::new(4, 1).unwrap();
        let set = IndexSet::new(vec![2], p).unwrap();
        assert_eq!(set.type_of(), 2);
        assert_eq!(set.iota().type_of(), 1);
        assert!(IndexSet::new(vec![1, 6], GrassParams::new(6, 2).unwrap()).is_err());
        let p = GrassParams::new(10, 2).unwrap();
        let empty = Typed::from_parts(vec![], p.k, 0).unwrap();
        assert_eq!(from_partition(&empty, &p).unwrap().elements(), &[9, 10]);
    }

    #[test]
    fn bijection_round_trip_and_types() {
        for big_n in 3..=10 {
            for p in spaces(big_n) {
                let bij = Bijection::new(&p).unwrap();
                for set in all_index_sets(&p) {
                    let lambda = bij.partition(&set).unwrap();
                    assert_eq!(bij.index_set(lambda).unwrap(), &set);
                    if p.is_even() {
                        assert_eq!(lambda.ty(), set.type_of(), "{set} in {p}");
                    }
                    if set.type_of() > 0 {
                        assert_eq!(set.iota().type_of(), 3 - set.type_of());
                    }
                }
            }
        }
    }

    #[test]
    fn order_laws_even() {
        for big_n in [6, 8] {
            for p in spaces(big_n) {
                let sets = all_index_sets(&p);
                let bij = Bijection::new(&p).unwrap();
                for a in &sets {
                    assert!(preceq(a, a).holds);
                    assert_eq!(a.bar(), a.iota().bar());
                    for b in &sets {
                        let ab = preceq(a, b).holds;
                        assert_eq!(ab, preceq(&a.iota(), &b.iota()).holds);
                        assert_eq!(leq(a, &b.bar()), ab || preceq(a, &b.iota()).holds);
                        if ab {
                            let codim = |s| bij.partition(s).unwrap().size();
                            assert!(codim(a) >= codim(b));
                            if a != b {
                                assert!(!preceq(b, a).holds);
                            }
                            for c in &sets {
                                if preceq(b, c).holds {
                                    assert!(preceq(a, c).holds);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn middle_swap_is_never_below() {
        let p = GrassParams::new(8, 2).unwrap();
        let q = IndexSet::new(vec![1, 4], p).unwrap();
        let r = IndexSet::new(vec![1, 5], p).unwrap();
        assert!(leq(&q, &r));
        let res = preceq(&q, &r);
        assert!(!res.holds);
        assert!(res.critical.is_some());
    }

    #[test]
    fn poset_covers() {
        let p = GrassParams::new(7, 2).unwrap();
        let poset = poset(&p).unwrap();
        assert_eq!(poset.elements[0].codim, 0);
        for &(lo, hi) in &poset.covers {
            assert_eq!(poset.elements[lo].codim, poset.elements[hi].codim + 1);
        }
        assert!(poset.edge_list().lines().count() == poset.covers.len());
    }
}
