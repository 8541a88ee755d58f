//! Pieri rules for products with the Chern classes c_p.
//!
//! The core relation λ → μ removes a vertical strip from the first k columns
//! and adds a horizontal strip, subject to conditions on K-related boxes.
//! Everything else (typed, tilde, quantum, K = 2) is layered on top of it.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{conjugate, GrassParams, KStrict, Typed};

/// A box [r, c] of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

/// a.col ≤ k < b.col and a.col + b.col = K + 1 + a.row - b.row, with k = ⌊K/2⌋.
pub fn k_related(a: Cell, b: Cell, kk: u32) -> bool {
    let k = kk / 2;
    a.col <= k
        && k < b.col
        && (a.col + b.col) as i64 == kk as i64 + 1 + a.row as i64 - b.row as i64
}

/// "Positive type" of an untyped shape: some part equals K/2 for even K.
pub fn positive_type(parts: &[u32], kk: u32) -> bool {
    kk.is_multiple_of(2) && kk > 0 && parts.contains(&(kk / 2))
}

/// All μ with λ → μ and |μ| = |λ| + p, each with N(λ, μ).
///
/// `max_cols` optionally bounds μ_1; rows are unbounded.
pub fn strip_successors(lambda: &KStrict, p: u32, kk: u32, max_cols: Option<u32>) -> Vec<(KStrict, u32)> {
    let k = lambda.k();
    debug_assert_eq!(k, kk / 2);
    let mut candidates: BTreeSet<Vec<u32>> = BTreeSet::new();
    let parts = lambda.parts();
    let removable: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] >= 1 && parts[i] <= k).collect();
    for mask in 0u32..(1u32 << removable.len()) {
        let mut nu = parts.to_vec();
        let mut removed = 0;
        for (b, &i) in removable.iter().enumerate() {
            if mask & (1 << b) != 0 {
                nu[i] -= 1;
                removed += 1;
            }
        }
        if nu.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        while nu.last() == Some(&0) {
            nu.pop();
        }
        add_horizontal_strips(&nu, p + removed, k, max_cols, &mut candidates);
    }
    candidates
        .into_iter()
        .filter_map(|mu| {
            let mu = KStrict::new(mu, k).ok()?;
            relation_count(lambda, &mu, kk).map(|n| (mu, n))
        })
        .collect()
}

fn add_horizontal_strips(nu: &[u32], size: u32, k: u32, max_cols: Option<u32>, out: &mut BTreeSet<Vec<u32>>) {
    let rows = nu.len() + 1;
    let mut mu = vec![0u32; rows];
    fn rec(
        i: usize,
        left: u32,
        nu: &[u32],
        k: u32,
        max_cols: Option<u32>,
        mu: &mut Vec<u32>,
        out: &mut BTreeSet<Vec<u32>>,
    ) {
        let base = nu.get(i).copied().unwrap_or(0);
        if i == mu.len() {
            if left == 0 {
                let mut v = mu.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.insert(v);
            }
            return;
        }
        let upper = if i == 0 {
            max_cols.unwrap_or(u32::MAX)
        } else {
            nu[i - 1]
        };
        if upper < base {
            return;
        }
        let room = (upper - base).min(left);
        for add in 0..=room {
            let v = base + add;
            // k-strictness prunes early: a part above k may not repeat.
            if i > 0 && v == mu[i - 1] && v > k {
                continue;
            }
            mu[i] = v;
            rec(i + 1, left - add, nu, k, max_cols, mu, out);
        }
    }
    rec(0, size, nu, k, max_cols, &mut mu, out);
}

/// Checks the two K-related-box conditions for a pair where μ already arises
/// from λ by the strip operations, returning N(λ, μ) or None on failure.
fn relation_count(lambda: &KStrict, mu: &KStrict, kk: u32) -> Option<u32> {
    let k = lambda.k();
    let lam = lambda.parts();
    let m = mu.parts();
    let lam_cols = conjugate(lam);
    let mu_cols = conjugate(m);
    let col_len = |cols: &[u32], c: u32| cols.get(c as usize - 1).copied().unwrap_or(0);
    let part = |v: &[u32], r: u32| v.get(r as usize - 1).copied().unwrap_or(0);
    let added: Vec<Cell> = (1..=m.len() as u32)
        .flat_map(|r| {
            let from = part(lam, r) + 1;
            (from..=part(m, r)).map(move |c| Cell::new(r, c))
        })
        .collect();
    let related_in = |b: Cell| -> Vec<Cell> { added.iter().copied().filter(|&d| k_related(b, d, kk)).collect() };

    let mut mentioned: BTreeSet<Cell> = BTreeSet::new();
    for c in 1..=k {
        let (lc, mc) = (col_len(&lam_cols, c), col_len(&mu_cols, c));
        if lc == 0 || mc > lc {
            continue;
        }
        if mc == lc {
            let rel = related_in(Cell::new(lc, c));
            if rel.len() > 1 {
                return None;
            }
            mentioned.extend(rel);
        } else {
            let mut boxes: Vec<Cell> = (mc + 1..=lc).map(|r| Cell::new(r, c)).collect();
            if mc > 0 {
                boxes.push(Cell::new(mc, c));
            }
            let mut row: Option<u32> = None;
            for b in boxes {
                let rel = related_in(b);
                if rel.len() != 1 {
                    return None;
                }
                match row {
                    None => row = Some(rel[0].row),
                    Some(r) if r != rel[0].row => return None,
                    _ => {}
                }
                mentioned.insert(rel[0]);
            }
        }
    }
    let a: Vec<Cell> = added.iter().copied().filter(|d| d.col > k && !mentioned.contains(d)).collect();
    Some(components(&a))
}

/// Number of connected components under vertex-sharing adjacency.
fn components(cells: &[Cell]) -> u32 {
    let n = cells.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (cells[i], cells[j]);
            if a.row.abs_diff(b.row) <= 1 && a.col.abs_diff(b.col) <= 1 {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count() as u32
}

/// N̂(λ, μ): N plus one when λ has positive type and μ does not.
pub fn n_hat(lambda: &KStrict, mu: &KStrict, n: u32, kk: u32) -> u32 {
    if positive_type(lambda.parts(), kk) && !positive_type(mu.parts(), kk) {
        n + 1
    } else {
        n
    }
}

/// The basis family a Pieri term lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    /// [Y_μ], equal to τ̂_μ for even N and σ_μ for odd N.
    Hat,
    /// τ̃_μ = τ_μ - τ′_μ.
    Tilde,
    /// A typed Schubert class τ_μ of the given type.
    Typed(u8),
}

/// One term ± 2^pow2 · class_μ · q1^d1 q2^d2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PieriTerm {
    pub mu: Vec<u32>,
    pub class: ClassKind,
    pub sign: i8,
    pub pow2: i32,
    pub q: [u32; 2],
}

impl PieriTerm {
    fn new(mu: &KStrict, class: ClassKind, sign: i8, pow2: i32, q: [u32; 2]) -> Self {
        PieriTerm { mu: mu.parts().to_vec(), class, sign, pow2, q }
    }

    pub fn json(&self) -> serde_json::Value {
        let ty = match self.class {
            ClassKind::Typed(t) => serde_json::json!(t),
            _ => serde_json::Value::Null,
        };
        serde_json::json!({
            "mu": self.mu,
            "class": self.class,
            "type": ty,
            "sign": self.sign,
            "pow2": self.pow2,
            "q": self.q,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Hat,
    Typed,
    Tilde,
}

/// c_p · [Y_λ] in the stable ring for K (even or odd).
pub fn pieri_hat(lambda: &KStrict, p: u32, kk: u32) -> Vec<PieriTerm> {
    strip_successors(lambda, p, kk, None)
        .into_iter()
        .map(|(mu, n)| {
            let e = n_hat(lambda, &mu, n, kk);
            PieriTerm::new(&mu, ClassKind::Hat, 1, e as i32, [0, 0])
        })
        .collect()
}

/// c_p · τ_λ for a typed λ with K = 2k: keeps μ with type(λ) + type(μ) ≠ 3.
pub fn pieri_typed(lambda: &Typed, p: u32) -> Vec<PieriTerm> {
    let kk = 2 * lambda.k();
    let mut out = Vec::new();
    for (mu, n) in strip_successors(lambda.shape(), p, kk, None) {
        let types: Vec<u8> = if mu.has_part_k() { vec![1, 2] } else { vec![0] };
        for t in types {
            if lambda.ty() + t != 3 {
                out.push(PieriTerm::new(&mu, ClassKind::Typed(t), 1, n as i32, [0, 0]));
            }
        }
    }
    out
}

/// c_p · τ̃_λ for K = 2k; zero unless λ has positive type.
pub fn pieri_tilde(lambda: &KStrict, p: u32) -> Vec<PieriTerm> {
    if !lambda.has_part_k() {
        return Vec::new();
    }
    strip_successors(lambda, p, 2 * lambda.k(), None)
        .into_iter()
        .filter(|(mu, _)| mu.has_part_k())
        .map(|(mu, n)| PieriTerm::new(&mu, ClassKind::Tilde, 1, n as i32, [0, 0]))
        .collect()
}

/// Dispatches the three classical modes. `kk` is only read in hat mode.
pub fn chern_pieri(lambda: &Typed, p: u32, kk: u32, mode: Mode) -> Vec<PieriTerm> {
    match mode {
        Mode::Hat => pieri_hat(lambda.shape(), p, kk),
        Mode::Typed => pieri_typed(lambda, p),
        Mode::Tilde => pieri_tilde(lambda.shape(), p),
    }
}

/// Membership in P′(m, N): m+1 rows, ν_1 ≥ K-1, second column at most ν_1 - K + 2.
fn in_p_prime(nu: &KStrict, params: &GrassParams) -> bool {
    let parts = nu.parts();
    let kk = params.kk as i64;
    let nu1 = parts.first().copied().unwrap_or(0) as i64;
    let second = parts.iter().filter(|&&x| x >= 2).count() as i64;
    parts.len() as u32 == params.m + 1 && nu1 <= params.cols() as i64 && nu1 >= kk - 1 && second <= nu1 - kk + 2
}

/// ν̃ = (ν_2, …, ν_r) with r = ν_1 - K + 2.
pub fn nu_tilde(nu: &KStrict, kk: u32) -> Result<KStrict> {
    let r = (nu.part(1) as i64 - kk as i64 + 2).max(1) as usize;
    let parts: Vec<u32> = nu.parts().iter().skip(1).take(r - 1).copied().collect();
    KStrict::new(parts, nu.k())
}

fn check_bounded(lambda: &KStrict, params: &GrassParams) -> Result<()> {
    if lambda.k() != params.k {
        return Err(Error::RingMismatch(format!("partition k={} vs space k={}", lambda.k(), params.k)));
    }
    if !params.fits(lambda.parts()) {
        return Err(Error::OutsideRectangle(lambda.to_string()));
    }
    Ok(())
}

/// The quantum Pieri rule for c_p · [Y_λ] when K ≥ 3.
fn quantum_hat(lambda: &KStrict, p: u32, params: &GrassParams) -> Result<Vec<PieriTerm>> {
    let kk = params.kk;
    let top = params.cols();
    let mut out = Vec::new();
    if p == 0 {
        out.push(PieriTerm::new(lambda, ClassKind::Hat, 1, 0, [0, 0]));
        return Ok(out);
    }
    if p > top {
        return Ok(out);
    }
    for (mu, n) in strip_successors(lambda, p, kk, Some(top)) {
        let e = n_hat(lambda, &mu, n, kk) as i32;
        if params.fits(mu.parts()) {
            out.push(PieriTerm::new(&mu, ClassKind::Hat, 1, e, [0, 0]));
        } else if in_p_prime(&mu, params) {
            let t = nu_tilde(&mu, kk)?;
            out.push(PieriTerm::new(&t, ClassKind::Hat, 1, e, [1, 0]));
        }
    }
    if lambda.part(1) == top {
        let star = lambda.star();
        for (rho, n) in strip_successors(&star, p, kk, Some(top)) {
            if params.fits(rho.parts()) && rho.part(1) == top {
                let e = n_hat(&star, &rho, n, kk) as i32;
                out.push(PieriTerm::new(&rho.star(), ClassKind::Hat, 1, e, [2, 0]));
            }
        }
    }
    Ok(out)
}

/// c_p times a hat or tilde class in QH(OG(m, N)) for K ≥ 3 (tilde needs even K ≥ 4).
pub fn quantum_chern_pieri(lambda: &KStrict, p: u32, params: &GrassParams, mode: Mode) -> Result<Vec<PieriTerm>> {
    check_bounded(lambda, params)?;
    if params.kk < 3 {
        return Err(Error::Unsupported("K = 2 uses the dedicated rules".into()));
    }
    match mode {
        Mode::Hat => quantum_hat(lambda, p, params),
        Mode::Tilde => {
            if !params.is_even() {
                return Err(Error::Unsupported("tilde classes exist only for even N".into()));
            }
            if !lambda.has_part_k() {
                return Ok(Vec::new());
            }
            let odd = params.odd_companion()?;
            let base = lambda.minus_k()?;
            let terms = quantum_hat(&base, p, &odd)?;
            terms
                .into_iter()
                .map(|t| {
                    let mu = KStrict::new(t.mu, lambda.k())?.plus_k();
                    let sign = if t.q[0] % 2 == 1 { -t.sign } else { t.sign };
                    Ok(PieriTerm::new(&mu, ClassKind::Tilde, sign, t.pow2, t.q))
                })
                .collect()
        }
        Mode::Typed => Err(Error::Unsupported("quantum typed mode: use the hat/tilde split".into())),
    }
}

/// Pushes the pair of terms for 2^e · (a·q̂ - b·q̃) style combinations.
fn push_q(out: &mut Vec<PieriTerm>, mu: &KStrict, class: ClassKind, sign: i8, e: i32, q: QKind) {
    match q {
        QKind::Hat => {
            out.push(PieriTerm::new(mu, class, sign, e, [1, 0]));
            out.push(PieriTerm::new(mu, class, sign, e, [0, 1]));
        }
        QKind::Tilde => {
            out.push(PieriTerm::new(mu, class, sign, e, [1, 0]));
            out.push(PieriTerm::new(mu, class, -sign, e, [0, 1]));
        }
    }
}

#[derive(Clone, Copy)]
enum QKind {
    /// q1 + q2
    Hat,
    /// q1 - q2
    Tilde,
}

fn ones(len: u32) -> Vec<u32> {
    vec![1; len as usize]
}

/// The K = 2 quantum rules on OG(n, 2n+2). In tilde mode `lambda` is the
/// full partition (λ, 1) carrying the part k = 1.
pub fn k2_quantum_pieri(lambda: &KStrict, p: u32, n: u32, mode: Mode) -> Result<Vec<PieriTerm>> {
    let params = GrassParams::even(1, n)?;
    check_bounded(lambda, &params)?;
    let mut out = Vec::new();
    if p == 0 {
        let class = if mode == Mode::Tilde { ClassKind::Tilde } else { ClassKind::Hat };
        if mode != Mode::Tilde || lambda.has_part_k() {
            out.push(PieriTerm::new(lambda, class, 1, 0, [0, 0]));
        }
        return Ok(out);
    }
    if p > n + 1 {
        return Ok(out);
    }
    let empty = KStrict::empty(1);
    match mode {
        Mode::Hat => {
            if p == 1 && lambda.parts() == ones(n).as_slice() {
                out.push(PieriTerm::new(&KStrict::new(vec![n + 1], 1)?, ClassKind::Hat, 1, 1, [0, 0]));
                if n > 1 {
                    let mut v = vec![2];
                    v.extend(ones(n - 1));
                    out.push(PieriTerm::new(&KStrict::new(v, 1)?, ClassKind::Hat, 1, 1, [0, 0]));
                }
                push_q(&mut out, &empty, ClassKind::Hat, 1, 0, QKind::Hat);
                return Ok(out);
            }
            let kk = 2;
            for (mu, nn) in strip_successors(lambda, p, kk, Some(n + 1)) {
                let e = n_hat(lambda, &mu, nn, kk) as i32;
                if params.fits(mu.parts()) {
                    out.push(PieriTerm::new(&mu, ClassKind::Hat, 1, e, [0, 0]));
                } else if in_p_prime(&mu, &params) {
                    let t = nu_tilde(&mu, kk)?;
                    push_q(&mut out, &t, ClassKind::Hat, 1, e - 1, QKind::Hat);
                    if t.has_part_k() {
                        push_q(&mut out, &t, ClassKind::Tilde, -1, e - 1, QKind::Tilde);
                    }
                }
            }
            if lambda.part(1) == n + 1 {
                let star = lambda.star();
                for (rho, nn) in strip_successors(&star, p, kk, Some(n + 1)) {
                    if params.fits(rho.parts()) && rho.part(1) == n + 1 {
                        let e = n_hat(&star, &rho, nn, kk) as i32;
                        out.push(PieriTerm::new(&rho.star(), ClassKind::Hat, 1, e, [1, 1]));
                    }
                }
            }
        }
        Mode::Tilde => {
            if !lambda.has_part_k() {
                return Ok(out);
            }
            let base = lambda.minus_k()?;
            if p == 1 && base.parts() == ones(n - 1).as_slice() {
                let mut v = vec![2];
                v.extend(ones(n - 1));
                let mu = KStrict::new(v, 1)?;
                if mu.has_part_k() {
                    out.push(PieriTerm::new(&mu, ClassKind::Tilde, 1, 1, [0, 0]));
                }
                push_q(&mut out, &empty, ClassKind::Hat, 1, 0, QKind::Tilde);
                return Ok(out);
            }
            let odd = GrassParams::odd(1, n)?;
            let kk = 3;
            for (mu, nn) in strip_successors(&base, p, kk, Some(n + 1)) {
                let e = nn as i32;
                if odd.fits(mu.parts()) {
                    out.push(PieriTerm::new(&mu.plus_k(), ClassKind::Tilde, 1, e, [0, 0]));
                } else if in_p_prime(&mu, &odd) {
                    let t = nu_tilde(&mu, kk)?.plus_k();
                    push_q(&mut out, &t, ClassKind::Hat, 1, e - 1, QKind::Tilde);
                    push_q(&mut out, &t, ClassKind::Tilde, -1, e - 1, QKind::Hat);
                }
            }
            if base.part(1) == n + 1 {
                let star = base.star();
                for (rho, nn) in strip_successors(&star, p, kk, Some(n + 1)) {
                    if odd.fits(rho.parts()) && rho.part(1) == n + 1 {
                        out.push(PieriTerm::new(&rho.star().plus_k(), ClassKind::Tilde, 1, nn as i32, [1, 1]));
                    }
                }
            }
        }
        Mode::Typed => return Err(Error::Unsupported("K = 2 rules act on hat and tilde classes".into())),
    }
    Ok(out)
}

/// λ → μ with its N, if it holds.
pub fn arrow(lambda: &KStrict, mu: &KStrict, kk: u32) -> Option<u32> {
    if mu.size() <= lambda.size() {
        return None;
    }
    strip_successors(lambda, mu.size() - lambda.size(), kk, None)
        .into_iter()
        .find(|(m, _)| m == mu)
        .map(|(_, n)| n)
}

/// Collects terms into exact coefficients keyed by (class, μ, q).
pub fn collect(terms: &[PieriTerm]) -> BTreeMap<(ClassKind, Vec<u32>, [u32; 2]), crate::rational::Q> {
    let mut out = BTreeMap::new();
    for t in terms {
        let v = crate::rational::pow2(t.pow2) * crate::rational::int(t.sign as i64);
        crate::rational::accumulate(&mut out, (t.class, t.mu.clone(), t.q), v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_kstrict;

    fn ks(p: &[u32], k: u32) -> KStrict {
        KStrict::new(p.to_vec(), k).unwrap()
    }

    #[test]
    fn related_examples() {
        assert!(k_related(Cell::new(1, 2), Cell::new(1, 3), 4));
        assert!(!k_related(Cell::new(1, 2), Cell::new(2, 3), 4));
        assert!(k_related(Cell::new(2, 1), Cell::new(1, 6), 5));
    }

    #[test]
    fn empty_partition_successors() {
        for k in 1..=3 {
            for p in 1..=6 {
                let s = strip_successors(&KStrict::empty(k), p, 2 * k, None);
                let want = if p <= k { 0 } else { 1 };
                assert_eq!(s, vec![(ks(&[p], k), want)], "k={k} p={p}");
            }
        }
    }

    #[test]
    fn n_hat_cases() {
        let k = 2;
        assert_eq!(n_hat(&ks(&[2], k), &ks(&[3], k), 0, 4), 1);
        assert_eq!(n_hat(&ks(&[2, 1], k), &ks(&[2, 2], k), 0, 4), 0);
        assert_eq!(n_hat(&ks(&[2], k), &ks(&[3], k), 0, 5), 0);
    }

    #[test]
    fn typed_sum_reproduces_hat_rule() {
        // Summing the typed rule over both types gives the hat rule with N̂.
        for k in 1..=2 {
            for lam in enumerate_kstrict(k, 3, 4) {
                for p in 1..=4 {
                    let hat = collect(&pieri_hat(&lam, p, 2 * k));
                    let mut summed = BTreeMap::new();
                    let types: Vec<u8> = if lam.has_part_k() { vec![1, 2] } else { vec![0] };
                    for t in &types {
                        let typed = Typed::new(lam.clone(), *t).unwrap();
                        for term in pieri_typed(&typed, p) {
                            let v = crate::rational::pow2(term.pow2);
                            crate::rational::accumulate(&mut summed, (ClassKind::Hat, term.mu.clone(), term.q), v);
                        }
                    }
                    // τ̂_μ = τ_μ + τ′_μ counts positive μ twice.
                    let mut hat_weighted = BTreeMap::new();
                    for ((_, mu, q), v) in hat {
                        let m = ks(&mu, k);
                        let w = if m.has_part_k() { 2 } else { 1 };
                        crate::rational::accumulate(&mut hat_weighted, (ClassKind::Hat, mu, q), v * crate::rational::int(w));
                    }
                    assert_eq!(summed, hat_weighted, "λ={lam} p={p}");
                }
            }
        }
    }

    #[test]
    fn top_chern_class_vanishes_in_rectangle() {
        for (k, n) in [(1, 2), (2, 3), (2, 4)] {
            let params = GrassParams::even(k, n).unwrap();
            let p = n + k + 1;
            for lam in enumerate_kstrict(k, params.rows(), params.cols()) {
                let inside: Vec<_> =
                    pieri_hat(&lam, p, 2 * k).into_iter().filter(|t| params.fits(&t.mu)).collect();
                assert!(inside.is_empty(), "λ={lam}: {inside:?}");
            }
        }
    }

    #[test]
    fn special_products() {
        for n in 1..=3 {
            let lam = ks(&ones(n), 1);
            let hat = collect(&k2_quantum_pieri(&lam, 1, n, Mode::Hat).unwrap());
            let q_terms: Vec<_> = hat.iter().filter(|((_, _, q), _)| *q != [0, 0]).collect();
            assert_eq!(q_terms.len(), 2);
            let tilde = collect(&k2_quantum_pieri(&lam, 1, n, Mode::Tilde).unwrap());
            let minus = tilde.get(&(ClassKind::Hat, vec![], [0, 1])).cloned();
            assert_eq!(minus, Some(crate::rational::int(-1)));
        }
    }

    #[test]
    fn quantum_grading() {
        let params = GrassParams::even(2, 3).unwrap();
        for lam in enumerate_kstrict(2, params.rows(), params.cols()) {
            for p in 1..=params.cols() {
                for mode in [Mode::Hat, Mode::Tilde] {
                    for t in quantum_chern_pieri(&lam, p, &params, mode).unwrap() {
                        let deg: u32 = t.mu.iter().sum::<u32>() + (t.q[0] + t.q[1]) * params.qdeg();
                        assert_eq!(deg, lam.size() + p, "{lam} p={p} {t:?}");
                    }
                }
            }
        }
    }
}
