//! Raising-operator expansions and the Giambelli polynomials built from them.
//!
//! A raising operator acts on the subscript sequence, never on the monomial.
//! Every expansion here is consumed by a family of generators with
//! `g_0 = 1` and `g_r = 0` for `r < 0`, so terms with a negative final entry
//! are discarded. That lets the expansion prune partial terms early: once the
//! factors touching row `s` as the raised row have all been applied, the
//! first `s` entries are final, so their sum can never exceed `|λ|`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::{KStrict, Typed};
use crate::rational::{self, int, pow2, Q};

/// Which factor a pair (i,j) contributes to the operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairFactor {
    /// 1 - R_ij
    Plain,
    /// (1 - R_ij)/(1 + R_ij) = 1 + 2 Σ_{a≥1} (-1)^a R_ij^a
    Ratio,
}

/// Rule choosing the factor of each pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairRule {
    /// Denominator exactly when λ_i + λ_j ≥ K + j - i.
    Threshold(u32),
    /// Denominator for every pair (Schur Q-functions).
    AllRatio,
    /// No denominators (Schur S-functions via e-subscripts).
    Plain,
}

impl PairRule {
    fn factor(&self, lambda: &[u32], i: usize, j: usize) -> PairFactor {
        match *self {
            PairRule::Threshold(kk) => {
                if lambda[i] as i64 + lambda[j] as i64 >= kk as i64 + (j - i) as i64 {
                    PairFactor::Ratio
                } else {
                    PairFactor::Plain
                }
            }
            PairRule::AllRatio => PairFactor::Ratio,
            PairRule::Plain => PairFactor::Plain,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubscriptTerm {
    pub coeff: Q,
    pub alpha: Vec<u32>,
    /// Some applied R_ij had i or j equal to the tracked row.
    pub touched: bool,
}

/// Default series cap ℓ(|λ|+ℓ) for each geometric factor.
pub fn default_cap(lambda: &[u32]) -> u32 {
    let l = lambda.len() as u32;
    l * (lambda.iter().sum::<u32>() + l)
}

/// Expands the raising operator of `rule` applied to the subscript `lambda`.
///
/// `track` is a 0-based row whose involvement is recorded per term. Output
/// keeps only subscripts with nonnegative entries, sorted by subscript.
pub fn expand(
    lambda: &[u32],
    rule: PairRule,
    track: Option<usize>,
    cap: Option<u32>,
) -> Result<Vec<SubscriptTerm>> {
    let l = lambda.len();
    let total: i64 = lambda.iter().map(|&p| p as i64).sum();
    let cap = cap.unwrap_or_else(|| default_cap(lambda)) as i64;
    let start: Vec<i64> = lambda.iter().map(|&p| p as i64).collect();
    let mut state: HashMap<(Vec<i64>, bool), Q> = HashMap::new();
    state.insert((start, false), Q::one());
    for s in 0..l {
        for j in s + 1..l {
            let factor = rule.factor(lambda, s, j);
            let touches = track.is_some_and(|d| d == s || d == j);
            let mut next: HashMap<(Vec<i64>, bool), Q> = HashMap::with_capacity(state.len() * 2);
            for ((alpha, t), c) in state {
                let prefix: i64 = alpha[..=s].iter().sum();
                let mut a: i64 = 0;
                loop {
                    if prefix + a > total {
                        break;
                    }
                    let w = match (factor, a) {
                        (_, 0) => int(1),
                        (PairFactor::Plain, 1) => int(-1),
                        (PairFactor::Plain, _) => break,
                        (PairFactor::Ratio, a) => int(if a % 2 == 0 { 2 } else { -2 }),
                    };
                    if a > cap {
                        return Err(Error::Guard(format!(
                            "raising series for {lambda:?} reached the cap {cap} on pair ({},{})",
                            s + 1,
                            j + 1
                        )));
                    }
                    let mut beta = alpha.clone();
                    beta[s] += a;
                    beta[j] -= a;
                    let key = (beta, t || (touches && a > 0));
                    let v = &c * &w;
                    let e = next.entry(key).or_insert_with(Q::zero);
                    *e += v;
                    a += 1;
                }
            }
            next.retain(|_, v| !v.is_zero());
            state = next;
        }
        state.retain(|(alpha, _), _| alpha[s] >= 0);
    }
    let mut out: Vec<SubscriptTerm> = state
        .into_iter()
        .map(|((alpha, touched), coeff)| SubscriptTerm {
            coeff,
            alpha: alpha.into_iter().map(|a| a as u32).collect(),
            touched,
        })
        .collect();
    out.sort_by(|a, b| (&a.alpha, a.touched).cmp(&(&b.alpha, b.touched)));
    Ok(out)
}

/// The expansion of R^λ c_λ for the given K, merged over the touched flag.
pub fn expand_operator(lambda: &KStrict, kk: u32) -> Result<Vec<SubscriptTerm>> {
    check_k(lambda, kk)?;
    let raw = expand(lambda.parts(), PairRule::Threshold(kk), None, None)?;
    Ok(raw)
}

fn check_k(lambda: &KStrict, kk: u32) -> Result<()> {
    if lambda.k() != kk / 2 {
        return Err(Error::RingMismatch(format!(
            "partition has k={} but K={kk} needs k={}",
            lambda.k(),
            kk / 2
        )));
    }
    Ok(())
}

/// A special-class marker attached to a monomial: τ_k or τ′_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    None,
    Tau,
    TauPrime,
}

/// A monomial c_{a_1}⋯c_{a_r}, optionally times τ_k or τ′_k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    /// Indices in weakly decreasing order, no zeros.
    pub c: Vec<u32>,
    pub flag: Flag,
}

impl Mono {
    pub fn new(mut c: Vec<u32>, flag: Flag) -> Self {
        c.retain(|&x| x > 0);
        c.sort_unstable_by(|a, b| b.cmp(a));
        Mono { c, flag }
    }

    pub fn one() -> Self {
        Mono { c: Vec::new(), flag: Flag::None }
    }

    pub fn degree(&self, k: u32) -> u32 {
        self.c.iter().sum::<u32>() + if self.flag == Flag::None { 0 } else { k }
    }
}

/// An exact polynomial in c_1, c_2, … and the marker τ_k / τ′_k.
///
/// Markers appear at most once per monomial. The c-form uses only τ′_k;
/// the mixed form produced by the Giambelli routine uses whichever
/// marker the type dictates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SpecialPolynomial {
    pub k: u32,
    pub terms: BTreeMap<Mono, Q>,
}

impl SpecialPolynomial {
    pub fn zero(k: u32) -> Self {
        SpecialPolynomial { k, terms: BTreeMap::new() }
    }

    pub fn one(k: u32) -> Self {
        let mut p = Self::zero(k);
        p.add(Mono::one(), int(1));
        p
    }

    pub fn add(&mut self, m: Mono, v: Q) {
        rational::accumulate(&mut self.terms, m, v);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut out = Self::zero(self.k);
        for (m, v) in &self.terms {
            out.add(m.clone(), v * s);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add(m.clone(), v.clone());
        }
        out
    }

    /// Largest c index appearing, counting c_k hidden in a τ_k marker.
    pub fn max_c_index(&self) -> u32 {
        self.terms.keys().flat_map(|m| m.c.iter().copied()).max().unwrap_or(0)
    }

    /// Replaces τ_k by c_k - τ′_k.
    pub fn to_c_form(&self) -> Self {
        let mut out = Self::zero(self.k);
        for (m, v) in &self.terms {
            if m.flag == Flag::Tau {
                let mut c = m.c.clone();
                c.push(self.k);
                out.add(Mono::new(c, Flag::None), v.clone());
                out.add(Mono::new(m.c.clone(), Flag::TauPrime), -v.clone());
            } else {
                out.add(m.clone(), v.clone());
            }
        }
        out
    }

    /// Splits a c-form into (A, B) with the polynomial equal to A + B·τ′_k.
    pub fn split_c_form(&self) -> (SpecialPolynomial, SpecialPolynomial) {
        let c = self.to_c_form();
        let mut a = Self::zero(self.k);
        let mut b = Self::zero(self.k);
        for (m, v) in c.terms {
            match m.flag {
                Flag::TauPrime => b.add(Mono::new(m.c, Flag::None), v),
                _ => a.add(m, v),
            }
        }
        (a, b)
    }

    /// Exchanges the τ_k and τ′_k markers.
    pub fn swap_markers(&self) -> Self {
        let mut out = Self::zero(self.k);
        for (m, v) in &self.terms {
            let flag = match m.flag {
                Flag::Tau => Flag::TauPrime,
                Flag::TauPrime => Flag::Tau,
                Flag::None => Flag::None,
            };
            out.add(Mono { c: m.c.clone(), flag }, v.clone());
        }
        out
    }

    /// Coefficients after rewriting c_p = 2τ_p for p > k; the τ-form.
    pub fn tau_coefficients(&self) -> BTreeMap<Mono, Q> {
        self.terms
            .iter()
            .map(|(m, v)| {
                let big = m.c.iter().filter(|&&p| p > self.k).count() as i32;
                (m.clone(), v * pow2(big))
            })
            .collect()
    }

    pub fn has_integer_tau_coefficients(&self) -> bool {
        self.tau_coefficients().values().all(rational::is_integer)
    }

    /// Terms in display order: marked monomials first, then by subscript.
    pub fn ordered_terms(&self) -> Vec<(&Mono, &Q)> {
        let mut v: Vec<(&Mono, &Q)> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let ra = a.0.flag == Flag::None;
            let rb = b.0.flag == Flag::None;
            (ra, &a.0.c).cmp(&(rb, &b.0.c))
        });
        v
    }

    /// The τ-form using unicode, e.g. "τ₃τ′₂(τ₂+τ′₂) − τ₇".
    pub fn tau_string(&self) -> String {
        let coeffs = self.tau_coefficients();
        let terms: Vec<(String, Q)> = self
            .ordered_terms()
            .into_iter()
            .map(|(m, _)| (tau_monomial(m, self.k), coeffs[m].clone()))
            .collect();
        join_terms(&terms)
    }

    /// The c-form, e.g. "1/2c₃c₂τ′₂ − c₇".
    pub fn c_string(&self) -> String {
        let terms: Vec<(String, Q)> = self
            .ordered_terms()
            .into_iter()
            .map(|(m, v)| (c_monomial(m, self.k), v.clone()))
            .collect();
        join_terms(&terms)
    }

    /// JSON with c-form coefficients.
    pub fn to_json(&self) -> Value {
        self.json_with(|_, v| v.clone())
    }

    /// JSON with the coefficients of the τ-form, matching `tau_string`.
    pub fn to_json_tau(&self) -> Value {
        let coeffs = self.tau_coefficients();
        self.json_with(|m, _| coeffs[m].clone())
    }

    fn json_with(&self, coef: impl Fn(&Mono, &Q) -> Q) -> Value {
        let items: Vec<Value> = self
            .ordered_terms()
            .into_iter()
            .map(|(m, v)| {
                let mut mono = json!({ "c": m.c });
                match m.flag {
                    Flag::TauPrime => mono["tkp"] = json!(1),
                    Flag::Tau => mono["tk"] = json!(1),
                    Flag::None => {}
                }
                json!({ "mono": mono, "coef": rational::to_string(&coef(m, v)) })
            })
            .collect();
        Value::Array(items)
    }
}

const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn digits(v: u32, table: &[char; 10]) -> String {
    v.to_string().chars().map(|c| table[c.to_digit(10).unwrap() as usize]).collect()
}

fn power(base: String, e: usize) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}{}", digits(e as u32, &SUP))
    }
}

/// Groups equal indices of a decreasing list into (index, multiplicity).
fn runs(c: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &x in c {
        match out.last_mut() {
            Some((y, n)) if *y == x => *n += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

fn tau_monomial(m: &Mono, k: u32) -> String {
    let sk = digits(k, &SUB);
    let mut s = String::new();
    let mut flag_done = m.flag == Flag::None;
    let emit_flag = |s: &mut String| {
        match m.flag {
            Flag::Tau => s.push_str(&format!("τ{sk}")),
            Flag::TauPrime => s.push_str(&format!("τ′{sk}")),
            Flag::None => {}
        }
    };
    for (p, e) in runs(&m.c) {
        if !flag_done && p <= k {
            emit_flag(&mut s);
            flag_done = true;
        }
        let base = if p == k { format!("(τ{sk}+τ′{sk})") } else { format!("τ{}", digits(p, &SUB)) };
        s.push_str(&power(base, e));
    }
    if !flag_done {
        emit_flag(&mut s);
    }
    s
}

fn c_monomial(m: &Mono, k: u32) -> String {
    let mut s: String = runs(&m.c)
        .into_iter()
        .map(|(p, e)| power(format!("c{}", digits(p, &SUB)), e))
        .collect();
    match m.flag {
        Flag::Tau => s.push_str(&format!("τ{}", digits(k, &SUB))),
        Flag::TauPrime => s.push_str(&format!("τ′{}", digits(k, &SUB))),
        Flag::None => {}
    }
    s
}

fn join_terms(terms: &[(String, Q)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (mono, v)) in terms.iter().enumerate() {
        let neg = v.is_negative();
        let a = v.abs();
        if idx == 0 {
            if neg {
                out.push('−');
            }
        } else {
            out.push_str(if neg { " − " } else { " + " });
        }
        let coef = if a.is_one() && !mono.is_empty() {
            String::new()
        } else if rational::is_integer(&a) || mono.is_empty() {
            rational::to_string(&a)
        } else {
            format!("({})", rational::to_string(&a))
        };
        out.push_str(&coef);
        out.push_str(mono);
    }
    out
}

impl fmt::Display for SpecialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tau_string())
    }
}

/// 2^{-ℓ_k(λ)} R^λ c_λ with negative subscripts dropped and c_0 = 1.
pub fn giambelli_c(lambda: &KStrict, kk: u32) -> Result<SpecialPolynomial> {
    let terms = expand_operator(lambda, kk)?;
    let scale = pow2(-(lambda.ell_k() as i32));
    let mut p = SpecialPolynomial::zero(lambda.k());
    for t in terms {
        p.add(Mono::new(t.alpha, Flag::None), t.coeff * &scale);
    }
    Ok(p)
}

/// The Giambelli polynomial of a typed partition for K = 2k, in mixed form:
/// monomials in c_p times at most one τ_k (type 1) or τ′_k (type 2).
pub fn giambelli_special(lambda: &Typed) -> Result<SpecialPolynomial> {
    let shape = lambda.shape();
    let k = shape.k();
    if k == 0 {
        return Err(Error::Unsupported("typed Giambelli needs k >= 1".into()));
    }
    let kk = 2 * k;
    let scale = pow2(-(shape.ell_k() as i32));
    let mut p = SpecialPolynomial::zero(k);
    if lambda.ty() == 0 {
        for t in expand(shape.parts(), PairRule::Threshold(kk), None, None)? {
            p.add(Mono::new(t.alpha, Flag::None), t.coeff * &scale);
        }
        return Ok(p);
    }
    let d = shape.ell_k();
    let flag = if lambda.ty() == 1 { Flag::Tau } else { Flag::TauPrime };
    let half = rational::half();
    for t in expand(shape.parts(), PairRule::Threshold(kk), Some(d), None)? {
        if t.touched {
            p.add(Mono::new(t.alpha, Flag::None), t.coeff * &scale * &half);
        } else {
            let mut rest = t.alpha;
            debug_assert_eq!(rest[d], k);
            rest.remove(d);
            p.add(Mono::new(rest, flag), t.coeff * &scale);
        }
    }
    Ok(p)
}

/// The tilde class τ̃_λ = τ_λ - τ′_λ as (τ_k - τ′_k)·G̃(c), returning G̃.
///
/// G̃ is the odd Giambelli polynomial of λ - k with K = 2k+1.
pub fn giambelli_tilde(lambda: &KStrict) -> Result<SpecialPolynomial> {
    let rest = lambda.minus_k()?;
    giambelli_c(&rest, 2 * lambda.k() + 1)
}

/// The same class computed through the diamond rule: 2^{-ℓ_k(λ)} R^λ ⋄ c_λ,
/// again returning the c-polynomial multiplying (τ_k - τ′_k).
pub fn giambelli_tilde_diamond(lambda: &KStrict) -> Result<SpecialPolynomial> {
    let k = lambda.k();
    if !lambda.has_part_k() {
        return Ok(SpecialPolynomial::zero(k));
    }
    let d = lambda.ell_k();
    let scale = pow2(-(lambda.ell_k() as i32));
    let mut p = SpecialPolynomial::zero(k);
    for t in expand(lambda.parts(), PairRule::Threshold(2 * k), Some(d), None)? {
        if !t.touched {
            let mut rest = t.alpha;
            rest.remove(d);
            p.add(Mono::new(rest, Flag::None), t.coeff * &scale);
        }
    }
    Ok(p)
}

/// Renders (τ_k − τ′_k)·G̃ for display.
pub fn tilde_string(g: &SpecialPolynomial) -> String {
    let sk = digits(g.k, &SUB);
    format!("(τ{sk}−τ′{sk})·({})", g.c_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_typed;

    fn typed(parts: &[u32], k: u32, ty: u8) -> Typed {
        Typed::from_parts(parts.to_vec(), k, ty).unwrap()
    }

    #[test]
    fn single_row_has_no_pairs() {
        let l = KStrict::new(vec![5], 2).unwrap();
        let t = expand_operator(&l, 4).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].alpha, vec![5]);
        let g = giambelli_c(&l, 4).unwrap();
        assert_eq!(g.c_string(), "(1/2)c₅");
        let g = giambelli_c(&KStrict::new(vec![2], 2).unwrap(), 4).unwrap();
        assert_eq!(g.c_string(), "c₂");
    }

    #[test]
    fn ratio_factor_series() {
        // (1-R12)/(1+R12) on (3,2,2) restricted to the first pair.
        let t = expand(&[3, 2], PairRule::AllRatio, None, None).unwrap();
        let got: Vec<(Vec<u32>, String)> =
            t.iter().map(|s| (s.alpha.clone(), rational::to_string(&s.coeff))).collect();
        assert_eq!(
            got,
            vec![
                (vec![3, 2], "1".into()),
                (vec![4, 1], "-2".into()),
                (vec![5, 0], "2".into()),
            ]
        );
    }

    #[test]
    fn worked_example_terms() {
        let g = giambelli_special(&typed(&[3, 2, 2], 2, 2)).unwrap();
        let tau = g.tau_coefficients();
        let want = [
            (vec![3, 2], Flag::TauPrime, 1),
            (vec![4, 1], Flag::TauPrime, -1),
            (vec![6, 1], Flag::None, 1),
            (vec![3, 3, 1], Flag::None, -1),
            (vec![4, 3], Flag::None, 1),
            (vec![7], Flag::None, -1),
        ];
        assert_eq!(tau.len(), want.len(), "{}", g.tau_string());
        for (c, f, v) in want {
            assert_eq!(tau[&Mono::new(c, f)], int(v));
        }
    }

    #[test]
    fn type_symmetry_swaps_markers() {
        for t in enumerate_typed(2, 3, 5) {
            if t.ty() == 1 {
                let a = giambelli_special(&t).unwrap();
                let b = giambelli_special(&t.swapped()).unwrap();
                assert_eq!(a.swap_markers(), b);
            }
        }
    }

    #[test]
    fn integer_tau_coefficients() {
        for k in 1..=3 {
            for t in enumerate_typed(k, 3, 6) {
                let g = giambelli_special(&t).unwrap();
                assert!(g.has_integer_tau_coefficients(), "{t}: {g}");
            }
        }
    }

    #[test]
    fn one_row_typed_classes() {
        assert_eq!(giambelli_special(&typed(&[2], 2, 1)).unwrap().tau_string(), "τ₂");
        assert_eq!(giambelli_special(&typed(&[2], 2, 2)).unwrap().tau_string(), "τ′₂");
        assert_eq!(giambelli_special(&typed(&[1], 2, 0)).unwrap().tau_string(), "τ₁");
        assert_eq!(giambelli_special(&typed(&[4], 2, 0)).unwrap().tau_string(), "τ₄");
    }

    #[test]
    fn tilde_forms_agree() {
        for s in crate::partition::enumerate_kstrict(2, 4, 6) {
            if s.has_part_k() {
                let a = giambelli_tilde(&s).unwrap();
                let b = giambelli_tilde_diamond(&s).unwrap();
                assert_eq!(a, b, "{s}");
            }
        }
        let s = KStrict::new(vec![2], 2).unwrap();
        assert_eq!(tilde_string(&giambelli_tilde(&s).unwrap()), "(τ₂−τ′₂)·(1)");
    }

    #[test]
    fn cap_stability() {
        for s in crate::partition::enumerate_kstrict(2, 4, 5) {
            let cap = default_cap(s.parts());
            let a = expand(s.parts(), PairRule::Threshold(4), Some(1), Some(cap)).unwrap();
            let b = expand(s.parts(), PairRule::Threshold(4), Some(1), Some(cap + 5)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_mismatched_k() {
        let l = KStrict::new(vec![3], 1).unwrap();
        assert!(giambelli_c(&l, 4).is_err());
    }
}
