//! Grassmannian parameters, k-strict and typed k-strict partitions, derived
//! shapes and the index functions attached to a partition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Parameters of OG(m, N). `kk` is K = N - 2m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassParams {
    pub big_n: u32,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub kk: u32,
    pub parity: Parity,
}

impl GrassParams {
    /// OG(m, N). `m = 0` is accepted and describes a point.
    pub fn new(big_n: u32, m: u32) -> Result<Self> {
        if 2 * m >= big_n {
            return Err(Error::Params(format!("need m < N/2, got m={m}, N={big_n}")));
        }
        let kk = big_n - 2 * m;
        let (parity, n, k) = if big_n % 2 == 1 {
            (Parity::Odd, (big_n - 1) / 2, (kk - 1) / 2)
        } else {
            (Parity::Even, (big_n - 2) / 2, kk / 2)
        };
        if parity == Parity::Even && k == 0 {
            return Err(Error::Params(
                "maximal isotropic even case (k = 0) is not supported".into(),
            ));
        }
        debug_assert_eq!(n + k, big_n - m - 1);
        Ok(GrassParams { big_n, m, n, k, kk, parity })
    }

    /// The even Grassmannian OG(n+1-k, 2n+2).
    pub fn even(k: u32, n: u32) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::Params(format!("even case needs 1 <= k <= n, got k={k}, n={n}")));
        }
        Self::new(2 * n + 2, n + 1 - k)
    }

    /// The odd Grassmannian OG(n-k, 2n+1).
    pub fn odd(k: u32, n: u32) -> Result<Self> {
        if k > n {
            return Err(Error::Params(format!("odd case needs k <= n, got k={k}, n={n}")));
        }
        Self::new(2 * n + 1, n - k)
    }

    pub fn rows(&self) -> u32 {
        self.m
    }

    pub fn cols(&self) -> u32 {
        self.n + self.k
    }

    /// Degree of the quantum parameter q (each of q1, q2 when K = 2).
    pub fn qdeg(&self) -> u32 {
        self.n + self.k
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn fits(&self, parts: &[u32]) -> bool {
        fits(parts, self.rows(), self.cols())
    }

    /// OG(m-1, N-1), the odd space paired with an even one.
    pub fn odd_companion(&self) -> Result<Self> {
        if !self.is_even() || self.m == 0 {
            return Err(Error::Params("odd companion needs an even space with m >= 1".into()));
        }
        Self::new(self.big_n - 1, self.m - 1)
    }
}

impl fmt::Display for GrassParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OG({},{})", self.m, self.big_n)
    }
}

pub fn fits(parts: &[u32], rows: u32, cols: u32) -> bool {
    parts.len() as u32 <= rows && parts.first().is_none_or(|&p| p <= cols)
}

pub fn size(parts: &[u32]) -> u32 {
    parts.iter().sum()
}

/// Column lengths of a partition.
pub fn conjugate(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| parts.iter().take_while(|&&p| p >= c).count() as u32)
        .collect()
}

pub fn contains(outer: &[u32], inner: &[u32]) -> bool {
    inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b)
}

fn trim(mut parts: Vec<u32>) -> Vec<u32> {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// True if no part greater than `k` repeats and the sequence is weakly decreasing.
pub fn is_kstrict(parts: &[u32], k: u32) -> bool {
    parts.windows(2).all(|w| w[0] > w[1] || (w[0] == w[1] && w[0] <= k))
}

/// A k-strict partition; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KStrict {
    k: u32,
    parts: Vec<u32>,
}

impl KStrict {
    pub fn new(parts: Vec<u32>, k: u32) -> Result<Self> {
        let parts = trim(parts);
        let err = |reason: &str| Error::Partition { parts: parts.clone(), k, reason: reason.into() };
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(err("parts are not weakly decreasing"));
        }
        if !is_kstrict(&parts, k) {
            return Err(err("a part greater than k is repeated"));
        }
        Ok(KStrict { k, parts })
    }

    pub fn empty(k: u32) -> Self {
        KStrict { k, parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        size(&self.parts)
    }

    /// Number of parts strictly greater than k.
    pub fn ell_k(&self) -> usize {
        self.parts.iter().filter(|&&p| p > self.k).count()
    }

    /// Some part equals k (k >= 1).
    pub fn has_part_k(&self) -> bool {
        self.k > 0 && self.parts.contains(&self.k)
    }

    /// Part j (1-based); zero beyond the length.
    pub fn part(&self, j: usize) -> u32 {
        if j == 0 {
            return u32::MAX;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Vec<u32> {
        conjugate(&self.parts)
    }

    /// First row removed.
    pub fn star(&self) -> KStrict {
        KStrict { k: self.k, parts: self.parts.iter().skip(1).copied().collect() }
    }

    pub fn plus_k(&self) -> KStrict {
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p < self.k).unwrap_or(parts.len());
        parts.insert(pos, self.k);
        KStrict { k: self.k, parts }
    }

    pub fn minus_k(&self) -> Result<KStrict> {
        let pos = self.parts.iter().position(|&p| p == self.k).filter(|_| self.k > 0).ok_or_else(|| {
            Error::Partition {
                parts: self.parts.clone(),
                k: self.k,
                reason: "no part equal to k".into(),
            }
        })?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Ok(KStrict { k: self.k, parts })
    }

    /// (λ¹, λ²): the strict partition right of column k and the boxes in the first k columns.
    pub fn split(&self) -> (Vec<u32>, Vec<u32>) {
        let l1 = trim(self.parts.iter().map(|&p| p.saturating_sub(self.k)).collect());
        let l2 = trim(self.parts.iter().map(|&p| p.min(self.k)).collect());
        (l1, l2)
    }

    pub fn with_k(&self, k: u32) -> Result<KStrict> {
        KStrict::new(self.parts.clone(), k)
    }
}

impl fmt::Display for KStrict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}:{}", self.k, fmt_parts(&self.parts))
    }
}

pub fn fmt_parts(parts: &[u32]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// Parses "3,2,2" or "[3,2,2]" (empty string or "[]" is the empty partition).
pub fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
        .collect()
}

/// A k-strict partition with a type in {0,1,2}; the type is positive exactly
/// when some part equals k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Typed {
    shape: KStrict,
    ty: u8,
}

impl Typed {
    pub fn new(shape: KStrict, ty: u8) -> Result<Self> {
        let positive = shape.has_part_k();
        let ok = match ty {
            0 => !positive,
            1 | 2 => positive,
            _ => false,
        };
        if !ok {
            return Err(Error::Partition {
                parts: shape.parts.clone(),
                k: shape.k,
                reason: format!("type {ty} is inconsistent with the shape"),
            });
        }
        Ok(Typed { shape, ty })
    }

    pub fn from_parts(parts: Vec<u32>, k: u32, ty: u8) -> Result<Self> {
        Typed::new(KStrict::new(parts, k)?, ty)
    }

    /// A class of an odd space, where shapes carry no type; always type 0.
    pub fn untyped(shape: KStrict) -> Self {
        Typed { shape, ty: 0 }
    }

    /// Type 0 for shapes without a part k, type 1 otherwise.
    pub fn default_type(shape: KStrict) -> Self {
        let ty = if shape.has_part_k() { 1 } else { 0 };
        Typed { shape, ty }
    }

    pub fn shape(&self) -> &KStrict {
        &self.shape
    }

    pub fn parts(&self) -> &[u32] {
        &self.shape.parts
    }

    pub fn k(&self) -> u32 {
        self.shape.k
    }

    pub fn ty(&self) -> u8 {
        self.ty
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    /// The other type of the same shape (ι); type 0 is fixed.
    pub fn swapped(&self) -> Typed {
        let ty = match self.ty {
            1 => 2,
            2 => 1,
            t => t,
        };
        Typed { shape: self.shape.clone(), ty }
    }

    /// Parses "k=2:[3,2,2]:t1".
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected k=K:[parts]:tT, got {s:?}"));
        let mut it = s.trim().splitn(3, ':');
        let k = it.next().and_then(|t| t.strip_prefix("k=")).ok_or_else(bad)?;
        let k: u32 = k.parse().map_err(|_| bad())?;
        let parts = parse_parts(it.next().ok_or_else(bad)?)?;
        let ty = it.next().and_then(|t| t.strip_prefix('t')).ok_or_else(bad)?;
        let ty: u8 = ty.parse().map_err(|_| bad())?;
        Typed::from_parts(parts, k, ty)
    }
}

impl fmt::Display for Typed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:t{}", self.shape, self.ty)
    }
}

#[derive(Serialize, Deserialize)]
struct TypedJson {
    k: u32,
    parts: Vec<u32>,
    #[serde(rename = "type")]
    ty: u8,
}

impl Serialize for Typed {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TypedJson { k: self.k(), parts: self.parts().to_vec(), ty: self.ty }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Typed {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TypedJson::deserialize(d)?;
        Typed::from_parts(j.parts, j.k, j.ty).map_err(serde::de::Error::custom)
    }
}

/// All k-strict partitions inside a rows x cols rectangle, in lexicographic order.
pub fn enumerate_kstrict(k: u32, rows: u32, cols: u32) -> Vec<KStrict> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec_rect(k, rows, cols, &mut cur, &mut out);
    out.sort();
    out
}

fn rec_rect(k: u32, rows: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<KStrict>) {
    out.push(KStrict { k, parts: cur.clone() });
    if cur.len() as u32 == rows {
        return;
    }
    for p in 1..=cap {
        cur.push(p);
        let next_cap = if p > k { p - 1 } else { p };
        rec_rect(k, rows, next_cap, cur, out);
        cur.pop();
    }
}

/// All k-strict partitions of `total`, optionally bounded by a rectangle.
pub fn kstrict_of_size(k: u32, total: u32, rows: Option<u32>, cols: Option<u32>) -> Vec<KStrict> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let cap = cols.unwrap_or(total).min(total);
    rec_size(k, total, rows.unwrap_or(u32::MAX), cap, &mut cur, &mut out);
    out.sort();
    out
}

fn rec_size(k: u32, left: u32, rows: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<KStrict>) {
    if left == 0 {
        out.push(KStrict { k, parts: cur.clone() });
        return;
    }
    if cur.len() as u32 == rows {
        return;
    }
    for p in (1..=cap.min(left)).rev() {
        cur.push(p);
        let next_cap = if p > k { p - 1 } else { p };
        rec_size(k, left - p, rows, next_cap, cur, out);
        cur.pop();
    }
}

/// Expands shapes into typed partitions, listing positive-type shapes once per type.
pub fn typed_versions(shape: &KStrict) -> Vec<Typed> {
    if shape.has_part_k() {
        vec![
            Typed { shape: shape.clone(), ty: 1 },
            Typed { shape: shape.clone(), ty: 2 },
        ]
    } else {
        vec![Typed { shape: shape.clone(), ty: 0 }]
    }
}

/// Typed k-strict partitions inside a rows x cols rectangle.
pub fn enumerate_typed(k: u32, rows: u32, cols: u32) -> Vec<Typed> {
    enumerate_kstrict(k, rows, cols).iter().flat_map(typed_versions).collect()
}

/// The basis index set of H*(OG(n+1-k, 2n+2)).
pub fn enumerate_typed_even(k: u32, n: u32) -> Result<Vec<Typed>> {
    let p = GrassParams::even(k, n)?;
    Ok(enumerate_typed(k, p.rows(), p.cols()))
}

pub fn typed_of_size(k: u32, total: u32, rows: Option<u32>, cols: Option<u32>) -> Vec<Typed> {
    kstrict_of_size(k, total, rows, cols).iter().flat_map(typed_versions).collect()
}

/// p̄_j of a k-strict partition for 1 <= j <= m.
pub fn index_bar(shape: &KStrict, p: &GrassParams) -> Vec<u32> {
    let (k, kk) = (p.k as i64, p.kk as i64);
    (1..=p.m as usize)
        .map(|j| {
            let lj = shape.part(j) as i64;
            let count = (1..=j)
                .filter(|&i| {
                    let li = shape.part(i) as i64;
                    li + lj >= kk + j as i64 - i as i64 && li > k
                })
                .count() as i64;
            (p.big_n as i64 - p.m as i64 + j as i64 - lj - count) as u32
        })
        .collect()
}

/// (p̄_j, p_j) for a typed partition in an even space; p_j = p̄_j for odd spaces.
pub fn index_functions(lambda: &Typed, p: &GrassParams) -> Result<(Vec<u32>, Vec<u32>)> {
    if !p.fits(lambda.parts()) {
        return Err(Error::OutsideRectangle(lambda.to_string()));
    }
    if lambda.k() != p.k {
        return Err(Error::RingMismatch(format!("partition k={} vs space k={}", lambda.k(), p.k)));
    }
    let bar = index_bar(lambda.shape(), p);
    if !p.is_even() {
        return Ok((bar.clone(), bar));
    }
    let k = p.k;
    let pj = bar
        .iter()
        .enumerate()
        .map(|(idx, &b)| {
            let j = idx + 1;
            let lj = lambda.shape().part(j);
            let prev = lambda.shape().part(j - 1);
            let parity_even = (p.n as usize + j + lambda.ty() as usize).is_multiple_of(2);
            if lj == k && k < prev && parity_even {
                b - 1
            } else {
                b
            }
        })
        .collect();
    Ok((bar, pj))
}

/// Lengths of the related diagonals (r_1 < ... < r_k) and the positive
/// lengths of the non-related diagonals (u_1 < ... < u_t) of the staircase
/// with `n` rows attached to the right of the first k columns.
pub fn diagonal_lengths(shape: &KStrict, n: u32) -> (Vec<u32>, Vec<u32>) {
    let k = shape.k;
    let cols = shape.conjugate();
    let col_len = |c: u32| cols.get(c as usize - 1).copied().unwrap_or(0);
    let related: Vec<u32> = (1..=k).map(|c| 2 * k + 1 + col_len(c) - c).collect();
    let len_of = |s: u32| -> u32 {
        let cells = s.saturating_sub(k + 1).min(n);
        let inside = (1..=cells as usize)
            .filter(|&i| {
                let li = shape.part(i);
                li > k && li + i as u32 >= s
            })
            .count() as u32;
        cells - inside
    };
    let mut r: Vec<u32> = related.iter().map(|&s| len_of(s)).collect();
    r.sort_unstable();
    let mut u: Vec<u32> = (k + 1..=k + n + 1)
        .filter(|s| !related.contains(s))
        .map(len_of)
        .filter(|&l| l > 0)
        .collect();
    u.sort_unstable();
    (r, u)
}

/// Smallest n with the shape inside the even rectangle (n+1-k) x (n+k).
pub fn minimal_n(shape: &KStrict) -> u32 {
    let k = shape.k;
    let l = shape.len() as u32;
    let first = shape.part(1).min(u32::MAX - 1);
    let first = if shape.is_empty() { 0 } else { first };
    k.max((l + k).saturating_sub(1)).max(first.saturating_sub(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedShapes {
    pub lambda_star: Vec<u32>,
    pub lambda_plus_k: Vec<u32>,
    pub lambda_minus_k: Option<Vec<u32>>,
    pub lambda1: Vec<u32>,
    pub lambda2: Vec<u32>,
    pub lambda3: Option<Vec<u32>>,
    pub lambda4: Option<Vec<u32>>,
    pub conjugate: Vec<u32>,
}

pub fn derived_shapes(lambda: &Typed) -> DerivedShapes {
    let shape = lambda.shape();
    let (l1, l2) = shape.split();
    let (l3, l4) = if lambda.ty() == 2 {
        let (r, _) = diagonal_lengths(shape, minimal_n(shape));
        let r1 = r[0];
        let mut l3 = l1.clone();
        let pos = l3.iter().position(|&p| p < r1).unwrap_or(l3.len());
        l3.insert(pos, r1);
        let mut cols = conjugate(&l2);
        let kcol = shape.k() as usize - 1;
        cols[kcol] = cols[kcol].saturating_sub(r1);
        (Some(l3), Some(conjugate(&trim(cols))))
    } else {
        (None, None)
    };
    DerivedShapes {
        lambda_star: shape.star().parts,
        lambda_plus_k: shape.plus_k().parts,
        lambda_minus_k: shape.minus_k().ok().map(|s| s.parts),
        lambda1: l1,
        lambda2: l2,
        lambda3: l3,
        lambda4: l4,
        conjugate: shape.conjugate(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(parts: &[u32], k: u32) -> KStrict {
        KStrict::new(parts.to_vec(), k).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(KStrict::new(vec![3, 2, 2], 2).is_ok());
        assert!(KStrict::new(vec![3, 3, 1], 2).is_err());
        assert!(KStrict::new(vec![5, 5, 2], 5).is_ok());
        assert!(KStrict::new(vec![1, 2], 5).is_err());
        assert_eq!(ks(&[2, 1, 0, 0], 1).parts(), &[2, 1]);
    }

    #[test]
    fn ell_k_examples() {
        assert_eq!(ks(&[3, 2, 2], 2).ell_k(), 1);
        assert_eq!(KStrict::empty(2).ell_k(), 0);
        assert_eq!(ks(&[4, 3, 1], 2).ell_k(), 2);
    }

    #[test]
    fn enumerate_small_cases() {
        let v = enumerate_typed_even(1, 1).unwrap();
        let names: Vec<String> = v.iter().map(|t| t.to_string()).collect();
        assert_eq!(v.len(), 4, "{names:?}");
        let strip: Vec<String> = enumerate_typed(2, 1, 4).iter().map(|t| t.to_string()).collect();
        assert_eq!(
            strip,
            ["k=2:[]:t0", "k=2:[1]:t0", "k=2:[2]:t1", "k=2:[2]:t2", "k=2:[3]:t0", "k=2:[4]:t0"]
        );
    }

    #[test]
    fn enumerate_has_no_duplicates() {
        let v = enumerate_typed(2, 3, 5);
        let mut w = v.clone();
        w.dedup();
        assert_eq!(v.len(), w.len());
        for t in &v {
            assert!(Typed::new(t.shape().clone(), t.ty()).is_ok());
        }
    }

    #[test]
    fn sized_enumeration_matches_rectangle() {
        let rect = enumerate_kstrict(2, 3, 5);
        for total in 0..=10 {
            let a: Vec<_> = rect.iter().filter(|s| s.size() == total).cloned().collect();
            let b = kstrict_of_size(2, total, Some(3), Some(5));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn index_function_examples() {
        let p = GrassParams::even(2, 5).unwrap();
        let empty = Typed::default_type(KStrict::empty(2));
        let (bar, _) = index_functions(&empty, &p).unwrap();
        let expect: Vec<u32> = (1..=p.m).map(|j| p.big_n - p.m + j).collect();
        assert_eq!(bar, expect);
        // λ = (k): p̄_1 = n+2; for type 1 and n even p_1 = n+1.
        for n in 2..6 {
            let p = GrassParams::even(2, n).unwrap();
            let t1 = Typed::from_parts(vec![2], 2, 1).unwrap();
            let (bar, pj) = index_functions(&t1, &p).unwrap();
            assert_eq!(bar[0], n + 2);
            if n % 2 == 0 {
                assert_eq!(pj[0], n + 1);
            }
        }
    }

    #[test]
    fn pbar_avoids_n_plus_one() {
        for (k, n) in [(1, 3), (2, 4), (3, 5)] {
            let p = GrassParams::even(k, n).unwrap();
            for t in enumerate_typed(k, p.rows(), p.cols()) {
                let (bar, _) = index_functions(&t, &p).unwrap();
                assert!(!bar.contains(&(n + 1)), "{t}");
                for (j, &b) in bar.iter().enumerate() {
                    let lj = t.shape().part(j + 1);
                    let prev = t.shape().part(j);
                    assert_eq!(b == n + 2, lj == k && k < prev, "{t} j={}", j + 1);
                }
            }
        }
    }

    #[test]
    fn derived_shape_examples() {
        let t = Typed::from_parts(vec![7, 4, 3, 2], 3, 2).unwrap();
        let d = derived_shapes(&t);
        assert_eq!(d.lambda1, vec![4, 1]);
        assert_eq!(d.lambda2, vec![3, 3, 3, 2]);
        assert_eq!(d.lambda3, Some(vec![4, 2, 1]));
        assert_eq!(d.lambda4, Some(vec![3, 2, 2, 2]));
        let k = ks(&[2], 2);
        assert!(k.minus_k().unwrap().is_empty());
        assert_eq!(ks(&[5, 2], 2).star().parts(), &[2]);
    }

    #[test]
    fn plus_minus_k_round_trip() {
        for s in enumerate_kstrict(2, 3, 5) {
            if s.has_part_k() {
                assert_eq!(s.minus_k().unwrap().plus_k(), s);
            }
            let (a, b) = s.split();
            assert_eq!(size(&a) + size(&b), s.size());
        }
    }

    #[test]
    fn text_and_json_forms() {
        let t = Typed::parse("k=2:[3,2,2]:t1").unwrap();
        assert_eq!(t.to_string(), "k=2:[3,2,2]:t1");
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"{"k":2,"parts":[3,2,2],"type":1}"#);
        let back: Typed = serde_json::from_str(&j).unwrap();
        assert_eq!(back, t);
        assert!(Typed::parse("k=2:[3,1]:t1").is_err());
    }
}
