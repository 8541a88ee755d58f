//! The type D Weyl group as signed permutations, the k-Grassmannian elements
//! w_λ, Kraśkiewicz-Lam tableaux, Stanley symmetric functions and the
//! Billey-Haiman Schubert polynomials.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{diagonal_lengths, enumerate_typed_even, minimal_n, Typed};
use crate::rational::{accumulate, pow2, Q};
use crate::symfunc::{MPoly, Monomial, PsExpansion, Sym, XModel};

/// Longest words enumerated before giving up.
pub const LENGTH_GUARD: usize = 24;

/// A signed permutation in one-line notation; negative entries are barred.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedPerm(Vec<i32>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((1..=n as i32).collect())
    }

    /// Validates a type D element: |w| is a permutation of 1..n and the
    /// number of negative entries is even.
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!("{images:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        if images.iter().filter(|&&v| v < 0).count() % 2 == 1 {
            return Err(Error::Parse(format!("{images:?} has an odd number of bars")));
        }
        Ok(SignedPerm(images))
    }

    pub fn images(&self) -> &[i32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Pads with fixed points up to rank n.
    pub fn extended(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(self.0.len() as i32 + 1..=n as i32);
        SignedPerm(v)
    }

    /// Drops trailing fixed points.
    pub fn trimmed(&self) -> Self {
        let mut v = self.0.clone();
        while v.last().is_some_and(|&x| x == v.len() as i32) {
            v.pop();
        }
        SignedPerm(v)
    }

    fn image(&self, i: i32) -> i32 {
        let a = i.unsigned_abs() as usize;
        let v = if a <= self.0.len() { self.0[a - 1] } else { a as i32 };
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// w·u as maps: (w·u)(i) = w(u(i)).
    pub fn compose(&self, u: &SignedPerm) -> SignedPerm {
        let n = self.n().max(u.n());
        SignedPerm((1..=n as i32).map(|i| self.image(u.image(i))).collect())
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut v = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            let a = x.unsigned_abs() as usize;
            v[a - 1] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPerm(v)
    }

    /// w·s_i: s_0 swaps the first two entries and bars both, s_i (i ≥ 1)
    /// swaps entries i and i+1.
    pub fn times_s(&self, i: usize) -> SignedPerm {
        let need = if i == 0 { 2 } else { i + 1 };
        let mut v = self.extended(need.max(self.n())).0;
        if i == 0 {
            let (a, b) = (v[0], v[1]);
            v[0] = -b;
            v[1] = -a;
        } else {
            v.swap(i - 1, i);
        }
        SignedPerm(v)
    }

    /// inv(w) + #{i < j : w_i + w_j < 0}.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut l = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    l += 1;
                }
                if v[i] + v[j] < 0 {
                    l += 1;
                }
            }
        }
        l
    }

    /// Right descents r (0 ≤ r < n) with ℓ(w s_r) < ℓ(w).
    pub fn descents(&self) -> Vec<usize> {
        let l = self.length();
        (0..self.n().max(2)).filter(|&r| self.times_s(r).length() < l).collect()
    }

    /// True when every s_i with i ≠ k (i ≥ 2 when k = 1) raises the length.
    pub fn is_k_grassmannian(&self, k: usize) -> bool {
        self.descents().iter().all(|&r| if k == 1 { r <= 1 } else { r == k })
    }

    /// Unbarred elements lie in the symmetric group S_n.
    pub fn is_unsigned(&self) -> bool {
        self.0.iter().all(|&v| v > 0)
    }

    pub fn from_word(word: &[usize], n: usize) -> SignedPerm {
        word.iter().fold(SignedPerm::identity(n), |w, &a| w.times_s(a))
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

/// All reduced words of w, each as a sequence a_1..a_ℓ with w = s_{a_1}⋯s_{a_ℓ}.
pub fn reduced_words(w: &SignedPerm) -> Result<Vec<Vec<usize>>> {
    if w.length() > LENGTH_GUARD {
        return Err(Error::Guard(format!("ℓ(w) = {} exceeds {LENGTH_GUARD}", w.length())));
    }
    let mut memo: HashMap<SignedPerm, Vec<Vec<usize>>> = HashMap::new();
    Ok(words_rec(&w.trimmed(), &mut memo))
}

fn words_rec(w: &SignedPerm, memo: &mut HashMap<SignedPerm, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let out = if w.length() == 0 {
        vec![Vec::new()]
    } else {
        let mut out = Vec::new();
        for r in w.descents() {
            for mut word in words_rec(&w.times_s(r).trimmed(), memo) {
                word.push(r);
                out.push(word);
            }
        }
        out
    };
    memo.insert(w.clone(), out.clone());
    out
}

/// One reduced word, found by stripping the first right descent each time.
pub fn reduced_word(w: &SignedPerm) -> Vec<usize> {
    let mut cur = w.clone();
    let mut word = Vec::with_capacity(w.length());
    while let Some(&r) = cur.descents().first() {
        word.push(r);
        cur = cur.times_s(r);
    }
    word.reverse();
    word
}

/// Replaces every 0 by 1.
pub fn flatten(word: &[usize]) -> Vec<usize> {
    word.iter().map(|&a| a.max(1)).collect()
}

/// The element w_λ for a typed k-strict partition, of rank n+1 with n the
/// smallest value for which λ lies in the even rectangle.
pub fn partition_perm(lambda: &Typed) -> Result<SignedPerm> {
    let shape = lambda.shape();
    let k = shape.k();
    if k == 0 {
        return Err(Error::Unsupported("k-Grassmannian elements need k >= 1".into()));
    }
    let n = minimal_n(shape).max(k);
    let (r, u) = diagonal_lengths(shape, n);
    let (l1, _) = shape.split();
    let mut v: Vec<i32> = Vec::new();
    let hat_pos;
    match lambda.ty() {
        0 => {
            if r[0] != 0 {
                return Err(Error::Partition {
                    parts: shape.parts().to_vec(),
                    k,
                    reason: "type 0 needs a related diagonal of length 0".into(),
                });
            }
            hat_pos = 0;
            v.push(1);
            v.extend(r[1..].iter().map(|&x| x as i32 + 1));
            v.extend(l1.iter().map(|&x| -(x as i32 + 1)));
        }
        t => {
            v.extend(r.iter().map(|&x| x as i32 + 1));
            if t == 2 {
                v[0] = -v[0];
            }
            v.extend(l1.iter().map(|&x| -(x as i32 + 1)));
            hat_pos = v.len();
            v.push(1);
        }
    }
    v.extend(u.iter().map(|&x| x as i32 + 1));
    if v.iter().filter(|&&x| x < 0).count() % 2 == 1 {
        v[hat_pos] = -1;
    }
    let w = SignedPerm::new(v)?;
    if w.n() != n as usize + 1 {
        return Err(Error::Partition {
            parts: shape.parts().to_vec(),
            k,
            reason: format!("diagonal data gave rank {} instead of {}", w.n(), n + 1),
        });
    }
    Ok(w)
}

/// w_λ padded with fixed points to rank n+1, for λ in 𝒫̃(k, n).
pub fn partition_perm_in(lambda: &Typed, n: u32) -> Result<SignedPerm> {
    let w = partition_perm(lambda)?;
    if (w.n() as u32) > n + 1 {
        return Err(Error::OutsideRectangle(format!("{lambda} needs n >= {}", w.n() - 1)));
    }
    Ok(w.extended(n as usize + 1))
}

/// The 0-Grassmannian element of a strict partition λ with λ_1 ≤ n:
/// (λ̄_1+1, …, λ̄_ℓ+1, 1̂, μ_{n-ℓ}, …, μ_1), μ the remaining values.
pub fn strict_perm(lambda: &[u32], n: u32) -> Result<SignedPerm> {
    if !lambda.windows(2).all(|w| w[0] > w[1]) || lambda.first().is_some_and(|&p| p > n) {
        return Err(Error::Partition { parts: lambda.to_vec(), k: 0, reason: format!("not strict with parts <= {n}") });
    }
    let mut v: Vec<i32> = lambda.iter().map(|&p| -(p as i32 + 1)).collect();
    v.push(if lambda.len() % 2 == 1 { -1 } else { 1 });
    let used: Vec<i32> = lambda.iter().map(|&p| p as i32 + 1).chain([1]).collect();
    v.extend((1..=n as i32 + 1).filter(|x| !used.contains(x)));
    SignedPerm::new(v)
}

/// Inverse of [`partition_perm`] by search over 𝒫̃(k, n).
pub fn perm_partition(w: &SignedPerm, k: u32) -> Result<Typed> {
    let w = w.trimmed();
    let len = w.length() as u32;
    let n = (w.n() as u32).max(k + 1) - 1;
    for lambda in enumerate_typed_even(k, n)? {
        if lambda.size() == len && partition_perm(&lambda)?.trimmed() == w {
            return Ok(lambda);
        }
    }
    Err(Error::Unsupported(format!("{w} is not w_λ for any typed {k}-strict λ")))
}

/// The Grassmannian permutation with descent at k whose Schubert
/// polynomial is s_ρ(z_1..z_k), for ρ with at most k parts.
pub fn grassmannian_perm(rho: &[u32], k: usize) -> Result<SignedPerm> {
    if rho.len() > k {
        return Err(Error::Partition { parts: rho.to_vec(), k: k as u32, reason: "more than k parts".into() });
    }
    let n = k + rho.first().copied().unwrap_or(0) as usize;
    let mut first: Vec<i32> = (1..=k).map(|i| (i + rho.get(k - i).copied().unwrap_or(0) as usize) as i32).collect();
    first.sort_unstable();
    let rest: Vec<i32> = (1..=n as i32).filter(|x| !first.contains(x)).collect();
    first.extend(rest);
    SignedPerm::new(first)
}

/// True when the word is unimodal: a_1 > … > a_{r-1} ≥ a_r < … < a_m with
/// a_{r-1} = a_r only when a_r = 1.
pub fn is_unimodal(a: &[usize]) -> bool {
    let n = a.len();
    let mut i = 0;
    while i + 1 < n && a[i] > a[i + 1] {
        i += 1;
    }
    if i + 1 < n && a[i] == 1 && a[i + 1] == 1 {
        i += 1;
    }
    a[i.min(n)..].windows(2).all(|w| w[0] < w[1])
}

/// Length of the longest unimodal subsequence.
pub fn longest_unimodal(a: &[usize]) -> usize {
    let n = a.len();
    if n == 0 {
        return 0;
    }
    // dec[i]: longest strictly decreasing subsequence ending at i
    let mut dec = vec![1usize; n];
    for i in 0..n {
        for j in 0..i {
            if a[j] > a[i] {
                dec[i] = dec[i].max(dec[j] + 1);
            }
        }
    }
    // left[i]: longest valid prefix part ending at valley i
    let mut left = dec.clone();
    for i in 0..n {
        if a[i] == 1 {
            for j in 0..i {
                if a[j] == 1 {
                    left[i] = left[i].max(dec[j] + 1);
                }
            }
        }
    }
    let mut inc = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if a[j] > a[i] {
                inc[i] = inc[i].max(inc[j] + 1);
            }
        }
    }
    (0..n).map(|i| left[i] + inc[i] - 1).max().unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlTableau {
    /// Rows from top to bottom.
    pub rows: Vec<Vec<usize>>,
    pub m: u32,
}

impl KlTableau {
    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    /// t_r … t_1.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// m(T) = ℓ(shape) + 1 - p, p counting the distinct values u_j(1) over the
/// prefix products u_j = s_{a_1}⋯s_{a_j} of the row word (type A).
pub fn m_statistic(word: &[usize], rows: usize) -> i64 {
    let size = word.iter().copied().max().unwrap_or(0) + 2;
    let mut u: Vec<usize> = (1..=size).collect();
    let mut seen: HashSet<usize> = HashSet::from([u[0]]);
    for &a in word {
        u.swap(a - 1, a);
        seen.insert(u[0]);
    }
    rows as i64 + 1 - seen.len() as i64
}

/// Splits a flattened word into KL rows: the top row is the suffix whose
/// length is the longest unimodal subsequence of the whole word, and so on.
fn split_rows(word: &[usize]) -> Option<Vec<Vec<usize>>> {
    let mut rest = word;
    let mut rows = Vec::new();
    while !rest.is_empty() {
        let l = longest_unimodal(rest);
        let (head, row) = rest.split_at(rest.len() - l);
        if !is_unimodal(row) {
            return None;
        }
        rows.push(row.to_vec());
        rest = head;
    }
    Some(rows)
}

/// All Kraśkiewicz-Lam tableaux for w, optionally of a fixed shape.
pub fn kl_tableaux(w: &SignedPerm, shape: Option<&[u32]>) -> Result<Vec<KlTableau>> {
    let mut flat: Vec<Vec<usize>> = reduced_words(w)?.iter().map(|a| flatten(a)).collect();
    flat.sort();
    flat.dedup();
    let mut out = Vec::new();
    for word in flat {
        let Some(rows) = split_rows(&word) else { continue };
        let t = KlTableau { m: 0, rows };
        if shape.is_some_and(|s| t.shape() != s) {
            continue;
        }
        let m = m_statistic(&word, t.rows.len());
        if m < 0 {
            return Err(Error::Expansion(format!("negative m(T) for {word:?}")));
        }
        out.push(KlTableau { m: m as u32, ..t });
    }
    Ok(out)
}

/// d_w^λ = Σ_T 2^{m(T)} over KL tableaux of shape λ.
pub fn stanley_coefficients(w: &SignedPerm) -> Result<BTreeMap<Vec<u32>, Q>> {
    let mut out = BTreeMap::new();
    for t in kl_tableaux(w, None)? {
        accumulate(&mut out, t.shape(), pow2(t.m as i32));
    }
    Ok(out)
}

/// E_w(x) = Σ_λ d_w^λ P_λ(x).
pub fn stanley_e(w: &SignedPerm, sym: &Sym) -> Result<MPoly> {
    let mut acc = sym.zero();
    for (shape, d) in stanley_coefficients(w)? {
        acc.add_scaled(&sym.schur_p(&shape)?, &d);
    }
    Ok(acc)
}

/// E_w in explicit variables as the coefficient of u_w in the nilCoxeter
/// product Π_i (1+x_i u_{n-1})⋯(1+x_i u_1)(1+x_i u_0)(1+x_i u_2)⋯(1+x_i u_{n-1}).
pub fn stanley_e_monomial(w: &SignedPerm, sym: &Sym) -> Result<MPoly> {
    let cfg = sym.cfg();
    let XModel::Explicit(d) = cfg.x else {
        return Err(Error::Unsupported("the monomial expansion needs explicit x variables".into()));
    };
    let w = w.trimmed();
    let n = w.n().max(2);
    let target = w.length();
    let mut factors: Vec<usize> = (1..n).rev().collect();
    factors.push(0);
    factors.extend(2..n);
    let mut state: HashMap<SignedPerm, MPoly> = HashMap::from([(SignedPerm::identity(n), sym.one())]);
    for var in 0..d {
        let x = MPoly::x_var(cfg, var)?;
        for &j in &factors {
            let mut next = state.clone();
            for (v, poly) in &state {
                let vs = v.times_s(j);
                if vs.length() != v.length() + 1 {
                    continue;
                }
                // stay below w in the weak order
                if vs.inverse().compose(&w).length() + vs.length() != target {
                    continue;
                }
                next.entry(vs).or_insert_with(|| sym.zero()).add_scaled(&poly.mul(&x), &Q::one());
            }
            state = next;
        }
    }
    Ok(state.remove(&w.extended(n)).unwrap_or_else(|| sym.zero()))
}

/// Sparse polynomial in z_1, z_2, … used for divided differences.
type ZPoly = BTreeMap<Vec<u32>, Q>;

fn divided_difference(p: &ZPoly, i: usize) -> ZPoly {
    // ∂_i f = (f - s_i f)/(z_i - z_{i+1}), monomial by monomial
    let mut out = ZPoly::new();
    for (e, c) in p {
        let (a, b) = (e[i - 1], e[i]);
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, Q::one()) } else { (b, a, -Q::one()) };
        // (z_i^hi z_{i+1}^lo - z_i^lo z_{i+1}^hi)/(z_i - z_{i+1}) = Σ z_i^{hi-1-t} z_{i+1}^{lo+t}
        for t in 0..hi - lo {
            let mut f = e.clone();
            f[i - 1] = hi - 1 - t;
            f[i] = lo + t;
            accumulate(&mut out, f, c * &sign);
        }
    }
    out
}

/// The type A Schubert polynomial of an unsigned permutation, in y.
pub fn schubert_a(v: &SignedPerm, sym: &Sym) -> Result<MPoly> {
    if !v.is_unsigned() {
        return Err(Error::Unsupported(format!("{v} is not in the symmetric group")));
    }
    let v = v.trimmed();
    let n = v.n().max(1);
    let w0 = SignedPerm((1..=n as i32).rev().collect());
    let mut p: ZPoly = ZPoly::new();
    p.insert((0..n).map(|i| (n - 1 - i) as u32).collect(), Q::one());
    // w0 = v·s_{c_1}⋯s_{c_m}; apply ∂_{c_m} first
    let u = v.inverse().compose(&w0);
    for &c in reduced_word(&u).iter().rev() {
        p = divided_difference(&p, c);
    }
    let cfg = sym.cfg();
    let mut terms = Vec::new();
    for (e, c) in p {
        if e.iter().skip(cfg.k).any(|&x| x > 0) {
            return Err(Error::Unsupported(format!("𝔖_{v} needs more than {} variables", cfg.k)));
        }
        let mut y = vec![0; cfg.k];
        for (i, &x) in e.iter().take(cfg.k).enumerate() {
            y[i] = x;
        }
        let x = if let XModel::Explicit(d) = cfg.x { vec![0; d] } else { Vec::new() };
        terms.push((Monomial { x, y }, c));
    }
    Ok(MPoly::from_terms(cfg, terms))
}

/// Reduced factorizations w = u·v with v in the symmetric group, found by
/// stripping right descents s_i (i ≥ 1) from u.
pub fn right_symmetric_factors(w: &SignedPerm) -> Vec<(SignedPerm, SignedPerm)> {
    let w = w.trimmed();
    let n = w.n().max(2);
    let start = (w.extended(n), SignedPerm::identity(n));
    let mut seen: HashSet<SignedPerm> = HashSet::from([start.1.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some((u, v)) = queue.pop_front() {
        for i in 1..n {
            let us = u.times_s(i);
            if us.length() < u.length() {
                let v2 = SignedPerm::identity(n).times_s(i).compose(&v);
                if seen.insert(v2.clone()) {
                    queue.push_back((us, v2));
                }
            }
        }
        out.push((u, v));
    }
    out
}

/// 𝔇_w(x, y) = Σ_{uv=w} E_u(x) 𝔖_v(y).
pub fn billey_haiman_d(w: &SignedPerm, sym: &Sym) -> Result<MPoly> {
    let mut acc = sym.zero();
    for (u, v) in right_symmetric_factors(w) {
        let e = stanley_e(&u, sym)?;
        if e.is_zero() {
            continue;
        }
        acc.add_scaled(&e.mul(&schubert_a(&v, sym)?), &Q::one());
    }
    Ok(acc)
}

/// d^λ_{μν} counted on the Weyl side: the 2^{m(T)}-weighted KL tableaux of
/// w_λ w_ν^{-1} of shape μ, over ν with w_ν a right factor of w_λ.
pub fn kl_d_coefficients(lambda: &Typed) -> Result<PsExpansion> {
    let k = lambda.k() as usize;
    let w = partition_perm(lambda)?;
    let mut out = BTreeMap::new();
    for (u, v) in right_symmetric_factors(&w) {
        let rho = grassmannian_shape(&v, k).ok_or_else(|| {
            Error::Expansion(format!("right factor {v} of {w} is not Grassmannian at {k}"))
        })?;
        let nu = crate::partition::conjugate(&rho);
        for (mu, d) in stanley_coefficients(&u)? {
            if !d.is_zero() {
                out.insert((mu, nu.clone()), d);
            }
        }
    }
    Ok(out)
}

/// ρ with v the Grassmannian permutation of ρ at descent k, if it is one.
pub fn grassmannian_shape(v: &SignedPerm, k: usize) -> Option<Vec<u32>> {
    let v = v.trimmed();
    if !v.is_unsigned() {
        return None;
    }
    if v.n() == 0 {
        return Some(Vec::new());
    }
    let img = v.images();
    if img.len() < k {
        return None;
    }
    if !img[..k].windows(2).all(|p| p[0] < p[1]) || !img[k..].windows(2).all(|p| p[0] < p[1]) {
        return None;
    }
    let mut rho: Vec<u32> = (1..=k).rev().map(|i| (img[i - 1] - i as i32) as u32).filter(|&x| x > 0).collect();
    rho.sort_unstable_by(|a, b| b.cmp(a));
    Some(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::VarConfig;

    fn sp(v: &[i32]) -> SignedPerm {
        SignedPerm::new(v.to_vec()).unwrap()
    }

    fn t(parts: &[u32], k: u32, ty: u8) -> Typed {
        Typed::from_parts(parts.to_vec(), k, ty).unwrap()
    }

    #[test]
    fn lengths_and_words() {
        let w = sp(&[-1, 4, -3, 2]);
        assert_eq!(w.length(), 5);
        assert_eq!(SignedPerm::from_word(&[2, 3, 0, 1, 2], 4), w);
        assert!(reduced_words(&w).unwrap().contains(&vec![2, 3, 0, 1, 2]));
        assert_eq!(SignedPerm::from_word(&reduced_word(&w), 4), w);
        assert_eq!(flatten(&[2, 3, 0, 1, 2]), vec![2, 3, 1, 1, 2]);
        assert_eq!(SignedPerm::identity(3).length(), 0);
        for r in 0..4 {
            let d = w.times_s(r).length() as i64 - w.length() as i64;
            assert_eq!(d.abs(), 1);
        }
    }

    #[test]
    fn bijection_example() {
        let l = t(&[7, 4, 3, 2], 3, 2);
        let w = partition_perm_in(&l, 7).unwrap();
        assert_eq!(w.to_string(), "-3 6 7 -5 -2 -1 4 8");
        assert_eq!(perm_partition(&w, 3).unwrap(), l);
    }

    #[test]
    fn grassmannian_and_lengths() {
        for k in 1..=3u32 {
            for l in enumerate_typed_even(k, 3).unwrap() {
                let w = partition_perm(&l).unwrap();
                assert_eq!(w.length() as u32, l.size(), "{l}");
                assert!(w.is_k_grassmannian(k as usize), "{l} -> {w}");
            }
        }
    }

    #[test]
    fn single_row_words() {
        let k = 3u32;
        for r in 1..=k {
            let w = partition_perm(&t(&[r], k, if r == k { 1 } else { 0 })).unwrap();
            let want: Vec<usize> = ((k - r + 1) as usize..=k as usize).collect();
            assert!(reduced_words(&w).unwrap().contains(&want), "r={r}");
        }
        let w = partition_perm(&t(&[k], k, 2)).unwrap();
        assert!(reduced_words(&w).unwrap().contains(&vec![0, 2, 3]));
    }

    #[test]
    fn kl_example() {
        let w = strict_perm(&[6, 5, 2], 6).unwrap();
        assert_eq!(w, sp(&[-7, -6, -3, -1, 2, 4, 5]));
        let tabs = kl_tableaux(&w, None).unwrap();
        assert_eq!(tabs.len(), 1);
        assert_eq!(tabs[0].rows, vec![vec![6, 5, 4, 3, 2, 1], vec![5, 4, 3, 2, 1], vec![2, 1]]);
        assert_eq!(tabs[0].m, 0);
    }

    #[test]
    fn unimodal_rules() {
        assert!(is_unimodal(&[3, 1, 1, 2]));
        assert!(is_unimodal(&[3, 2, 4]));
        assert!(!is_unimodal(&[2, 2, 3]));
        assert!(!is_unimodal(&[1, 3, 2]));
        assert_eq!(longest_unimodal(&[2, 3, 1, 1, 2]), 4);
    }

    #[test]
    fn stanley_matches_nilcoxeter_product() {
        let ex = Sym::new(VarConfig::explicit(4, 0, 5));
        for word in [vec![2], vec![1], vec![0, 1], vec![2, 1, 0], vec![0, 2, 1, 3], vec![3, 1, 2, 0, 1]] {
            let w = SignedPerm::from_word(&word, 4);
            assert_eq!(stanley_e(&w, &ex).unwrap(), stanley_e_monomial(&w, &ex).unwrap(), "{word:?}");
        }
    }

    #[test]
    fn schubert_basics() {
        let s = Sym::new(VarConfig::power_sum(2, 6));
        assert_eq!(schubert_a(&SignedPerm::identity(3), &s).unwrap(), s.one());
        assert_eq!(schubert_a(&sp(&[2, 1]), &s).unwrap(), MPoly::y_var(s.cfg(), 0));
        let g = grassmannian_perm(&[1, 1], 2).unwrap();
        assert_eq!(schubert_a(&g, &s).unwrap(), s.e_y(2));
        assert_eq!(grassmannian_shape(&g, 2), Some(vec![1, 1]));
    }

    #[test]
    fn billey_haiman_single_rows() {
        let k = 2u32;
        let s = Sym::new(VarConfig::power_sum(k as usize, 6));
        for r in 1..=4 {
            let l = t(&[r], k, if r == k { 1 } else { 0 });
            assert_eq!(billey_haiman_d(&partition_perm(&l).unwrap(), &s).unwrap(), s.eta(r), "r={r}");
        }
        let w = partition_perm(&t(&[k], k, 2)).unwrap();
        assert_eq!(billey_haiman_d(&w, &s).unwrap(), s.eta_prime());
    }
}
