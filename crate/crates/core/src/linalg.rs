//! Exact sparse linear algebra over Q: an incremental echelon basis that
//! remembers how each reduced row was built from the inputs.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{accumulate, Q};

pub type SparseVec<K> = BTreeMap<K, Q>;

#[derive(Clone, Debug)]
struct Row<K> {
    vec: SparseVec<K>,
    combo: BTreeMap<usize, Q>,
}

/// Incremental row echelon form. Every stored row has its largest key as
/// pivot with coefficient 1, and no two rows share a pivot.
#[derive(Clone, Debug, Default)]
pub struct SpanSolver<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
    inputs: usize,
}

impl<K: Ord + Clone> SpanSolver<K> {
    pub fn new() -> Self {
        SpanSolver { rows: BTreeMap::new(), inputs: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Reduces `v` against the stored rows, tracking the combination of
    /// inputs subtracted along the way.
    fn reduce(&self, mut v: SparseVec<K>, combo: &mut BTreeMap<usize, Q>) -> SparseVec<K> {
        let mut cursor: Option<K> = None;
        loop {
            let next = v
                .iter()
                .rev()
                .filter(|(key, _)| cursor.as_ref().is_none_or(|c| *key < c))
                .find(|(key, _)| self.rows.contains_key(*key))
                .map(|(key, c)| (key.clone(), c.clone()));
            let Some((key, coef)) = next else { break };
            let row = &self.rows[&key];
            for (k2, x) in &row.vec {
                accumulate(&mut v, k2.clone(), -(x * &coef));
            }
            for (i, x) in &row.combo {
                accumulate(combo, *i, -(x * &coef));
            }
            cursor = Some(key);
        }
        v
    }

    /// Adds the next input vector (its index is the number of earlier inputs).
    /// Returns false when it is dependent on the earlier inputs.
    pub fn push(&mut self, v: SparseVec<K>) -> bool {
        let idx = self.inputs;
        self.inputs += 1;
        let mut combo = BTreeMap::new();
        combo.insert(idx, Q::from_integer(1.into()));
        let r = self.reduce(v, &mut combo);
        let Some((pivot, lead)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = Q::from_integer(1.into()) / lead;
        let vec: SparseVec<K> = r.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        let combo = combo.into_iter().map(|(i, c)| (i, c * &inv)).collect();
        self.rows.insert(pivot, Row { vec, combo });
        true
    }

    /// Coefficients expressing `target` through the inputs, or None if it is
    /// outside their span.
    pub fn express(&self, target: &SparseVec<K>) -> Option<BTreeMap<usize, Q>> {
        let mut combo = BTreeMap::new();
        let r = self.reduce(target.clone(), &mut combo);
        if !r.is_empty() {
            return None;
        }
        Some(combo.into_iter().map(|(i, c)| (i, -c)).filter(|(_, c)| !c.is_zero()).collect())
    }
}

/// Solves Σ a_i columns[i] = target, requiring the columns to be independent.
pub fn solve_unique<K: Ord + Clone>(
    columns: &[SparseVec<K>],
    target: &SparseVec<K>,
) -> crate::Result<Vec<Q>> {
    let mut s = SpanSolver::new();
    for (i, c) in columns.iter().enumerate() {
        if !s.push(c.clone()) {
            return Err(crate::Error::Singular(format!("column {i} is dependent on earlier columns")));
        }
    }
    let combo = s
        .express(target)
        .ok_or_else(|| crate::Error::NotInSpan("target is outside the column span".into()))?;
    let mut out = vec![Q::zero(); columns.len()];
    for (i, c) in combo {
        out[i] = c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn v(items: &[(u32, i64)]) -> SparseVec<u32> {
        items.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn solves_small_system() {
        let cols = vec![v(&[(1, 1), (2, 1)]), v(&[(1, 1), (2, -1)])];
        let sol = solve_unique(&cols, &v(&[(1, 3), (2, 1)])).unwrap();
        assert_eq!(sol, vec![int(2), int(1)]);
        let sol = solve_unique(&cols, &v(&[(1, 1)])).unwrap();
        assert_eq!(sol, vec![frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn detects_dependence_and_span() {
        let mut s = SpanSolver::new();
        assert!(s.push(v(&[(1, 2), (3, 1)])));
        assert!(!s.push(v(&[(1, 4), (3, 2)])));
        assert!(s.express(&v(&[(1, 1)])).is_none());
        let c = s.express(&v(&[(1, 6), (3, 3)])).unwrap();
        assert_eq!(c.get(&0), Some(&int(3)));
    }
}
