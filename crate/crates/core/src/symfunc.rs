//! Exact polynomials in x (symmetric) and y = (y_1..y_k), with the classical
//! families e, h, q, Schur S, Schur P/Q and the theta and eta generators.
//!
//! The x block has two realizations. `XModel::PowerSum` works in the ring Γ
//! generated by the odd power sums p_1, p_3, ...; a monomial is the multiset
//! of odd indices, and identities hold in infinitely many x variables.
//! `XModel::Explicit(d)` uses d honest variables and serves as an oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{SpanSolver, SparseVec};
use crate::raising::{expand, PairRule};
use crate::rational::{self, accumulate, int, pow2, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XModel {
    PowerSum,
    Explicit(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarConfig {
    pub x: XModel,
    /// Number of y variables.
    pub k: usize,
    /// Terms of higher total degree are dropped in products.
    pub degcap: u32,
}

impl VarConfig {
    pub fn power_sum(k: usize, degcap: u32) -> Self {
        VarConfig { x: XModel::PowerSum, k, degcap }
    }

    pub fn explicit(d: usize, k: usize, degcap: u32) -> Self {
        VarConfig { x: XModel::Explicit(d), k, degcap }
    }
}

/// x part: sorted odd indices (power sums) or an exponent vector (explicit).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

impl Monomial {
    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.x_degree() + self.y_degree()
    }

    fn times(&self, other: &Monomial, model: XModel) -> Monomial {
        let x = match model {
            XModel::PowerSum => {
                let mut v: Vec<u32> = self.x.iter().chain(&other.x).copied().collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            }
            XModel::Explicit(_) => self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
        };
        let y = self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect();
        Monomial { x, y }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub cfg: VarConfig,
    pub terms: BTreeMap<Monomial, Q>,
}

impl MPoly {
    pub fn zero(cfg: VarConfig) -> Self {
        MPoly { cfg, terms: BTreeMap::new() }
    }

    fn unit_monomial(cfg: VarConfig) -> Monomial {
        let x = match cfg.x {
            XModel::PowerSum => Vec::new(),
            XModel::Explicit(d) => vec![0; d],
        };
        Monomial { x, y: vec![0; cfg.k] }
    }

    pub fn constant(cfg: VarConfig, v: Q) -> Self {
        let mut p = Self::zero(cfg);
        accumulate(&mut p.terms, Self::unit_monomial(cfg), v);
        p
    }

    pub fn one(cfg: VarConfig) -> Self {
        Self::constant(cfg, Q::one())
    }

    pub fn y_var(cfg: VarConfig, i: usize) -> Self {
        let mut m = Self::unit_monomial(cfg);
        m.y[i] = 1;
        Self::from_terms(cfg, [(m, Q::one())])
    }

    pub fn x_var(cfg: VarConfig, i: usize) -> Result<Self> {
        match cfg.x {
            XModel::Explicit(d) if i < d => {
                let mut m = Self::unit_monomial(cfg);
                m.x[i] = 1;
                Ok(Self::from_terms(cfg, [(m, Q::one())]))
            }
            _ => Err(Error::Unsupported("x variables exist only in the explicit model".into())),
        }
    }

    /// The odd power sum p_j (power-sum model only).
    pub fn power_sum(cfg: VarConfig, j: u32) -> Result<Self> {
        if cfg.x != XModel::PowerSum || j.is_multiple_of(2) {
            return Err(Error::Unsupported(format!("p_{j} is not a generator of this model")));
        }
        let mut m = Self::unit_monomial(cfg);
        m.x = vec![j];
        Ok(Self::from_terms(cfg, [(m, Q::one())]))
    }

    pub fn from_terms(cfg: VarConfig, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero(cfg);
        for (m, v) in terms {
            if m.degree() <= cfg.degcap {
                accumulate(&mut p.terms, m, v);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &MPoly, s: &Q) {
        debug_assert_eq!(self.cfg, other.cfg);
        if s.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            accumulate(&mut self.terms, m.clone(), v * s);
        }
    }

    pub fn plus(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        out
    }

    pub fn minus(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_scaled(other, &int(-1));
        out
    }

    pub fn scale(&self, s: &Q) -> MPoly {
        let mut out = MPoly::zero(self.cfg);
        out.add_scaled(self, s);
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.cfg, other.cfg);
        let cap = self.cfg.degcap;
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (a, va) in &self.terms {
            let da = a.degree();
            for (b, vb) in &other.terms {
                if da + b.degree() > cap {
                    continue;
                }
                let m = a.times(b, self.cfg.x);
                *acc.entry(m).or_insert_with(Q::zero) += va * vb;
            }
        }
        MPoly { cfg: self.cfg, terms: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    /// The summand of the given x-degree.
    pub fn x_degree_part(&self, d: u32) -> MPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.x_degree() == d);
        MPoly { cfg: self.cfg, terms: terms.map(|(m, v)| (m.clone(), v.clone())).collect() }
    }

    pub fn x_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Monomial::x_degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn degree_part(&self, d: u32) -> MPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d);
        MPoly { cfg: self.cfg, terms: terms.map(|(m, v)| (m.clone(), v.clone())).collect() }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Sets every y variable to zero.
    pub fn at_y_zero(&self) -> MPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.y_degree() == 0);
        MPoly { cfg: self.cfg, terms: terms.map(|(m, v)| (m.clone(), v.clone())).collect() }
    }

    fn permuted(&self, f: impl Fn(&Monomial) -> Monomial) -> MPoly {
        MPoly::from_terms(self.cfg, self.terms.iter().map(|(m, v)| (f(m), v.clone())))
    }

    /// Invariance under adjacent transpositions of y, and of x in the
    /// explicit model (power-sum monomials are symmetric by construction).
    pub fn is_separately_symmetric(&self) -> bool {
        let y_ok = (0..self.cfg.k.saturating_sub(1)).all(|i| {
            self.permuted(|m| {
                let mut m = m.clone();
                m.y.swap(i, i + 1);
                m
            }) == *self
        });
        let x_ok = match self.cfg.x {
            XModel::PowerSum => true,
            XModel::Explicit(d) => (0..d.saturating_sub(1)).all(|i| {
                self.permuted(|m| {
                    let mut m = m.clone();
                    m.x.swap(i, i + 1);
                    m
                }) == *self
            }),
        };
        y_ok && x_ok
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, v)| {
                let key = if self.cfg.x == XModel::PowerSum { "p" } else { "x" };
                json!({ key: m.x, "y": m.y, "coef": rational::to_string(v) })
            })
            .collect();
        Value::Array(terms)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, v)) in self.terms.iter().enumerate() {
            let neg = v.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            match self.cfg.x {
                XModel::PowerSum => {
                    let mut i = 0;
                    while i < m.x.len() {
                        let j = m.x[i..].iter().take_while(|&&p| p == m.x[i]).count();
                        factors.push(power(&format!("p{}", m.x[i]), j as u32));
                        i += j;
                    }
                }
                XModel::Explicit(_) => {
                    for (i, &e) in m.x.iter().enumerate() {
                        if e > 0 {
                            factors.push(power(&format!("x{}", i + 1), e));
                        }
                    }
                }
            }
            for (i, &e) in m.y.iter().enumerate() {
                if e > 0 {
                    factors.push(power(&format!("y{}", i + 1), e));
                }
            }
            let a = v.abs();
            if factors.is_empty() {
                write!(f, "{}", rational::to_string(&a))?;
            } else if a.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", rational::to_string(&a), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

fn power(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
}

/// Strict partitions of n, each in decreasing order.
pub fn strict_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of n with all parts at most `max_part`.
pub fn partitions_bounded(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

fn is_strict(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1]) && parts.iter().all(|&p| p > 0)
}

/// Family selector for [`Sym::family`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    ElementaryX(u32),
    ElementaryY(u32),
    Q(u32),
    /// s_{ν'} in x, from the e-subscripts ν.
    SchurX(Vec<u32>),
    /// s_{ν'} in y, from the e-subscripts ν.
    SchurY(Vec<u32>),
    SchurQ(Vec<u32>),
    SchurP(Vec<u32>),
}

/// Coefficients keyed by (μ, ν) in the basis P_μ(x) s_ν(y).
pub type PsExpansion = BTreeMap<(Vec<u32>, Vec<u32>), Q>;

/// Polynomial factory with memoized generators for one configuration.
pub struct Sym {
    cfg: VarConfig,
    q_cache: Mutex<Vec<MPoly>>,
    ey_cache: Mutex<HashMap<u32, MPoly>>,
    theta_cache: Mutex<HashMap<u32, MPoly>>,
    p_cache: Mutex<HashMap<Vec<u32>, MPoly>>,
    sy_cache: Mutex<HashMap<Vec<u32>, MPoly>>,
}

impl Sym {
    pub fn new(cfg: VarConfig) -> Self {
        Sym {
            cfg,
            q_cache: Mutex::new(Vec::new()),
            ey_cache: Mutex::new(HashMap::new()),
            theta_cache: Mutex::new(HashMap::new()),
            p_cache: Mutex::new(HashMap::new()),
            sy_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn cfg(&self) -> VarConfig {
        self.cfg
    }

    pub fn zero(&self) -> MPoly {
        MPoly::zero(self.cfg)
    }

    pub fn one(&self) -> MPoly {
        MPoly::one(self.cfg)
    }

    /// e_r(y_1..y_k).
    pub fn e_y(&self, r: u32) -> MPoly {
        if let Some(p) = self.ey_cache.lock().unwrap().get(&r) {
            return p.clone();
        }
        let p = self.elementary_in_y(r, 1);
        self.ey_cache.lock().unwrap().insert(r, p.clone());
        p
    }

    /// e_r(y_1², ..., y_k²).
    pub fn e_y_squared(&self, r: u32) -> MPoly {
        self.elementary_in_y(r, 2)
    }

    fn elementary_in_y(&self, r: u32, exp: u32) -> MPoly {
        let k = self.cfg.k;
        let mut terms = Vec::new();
        for subset in subsets(k, r as usize) {
            let mut m = MPoly::unit_monomial(self.cfg);
            for i in subset {
                m.y[i] = exp;
            }
            terms.push((m, Q::one()));
        }
        MPoly::from_terms(self.cfg, terms)
    }

    fn explicit_d(&self) -> Result<usize> {
        match self.cfg.x {
            XModel::Explicit(d) => Ok(d),
            XModel::PowerSum => {
                Err(Error::Unsupported("e_r(x) and h_r(x) are outside the power-sum model".into()))
            }
        }
    }

    /// e_r(x), explicit model only.
    pub fn e_x(&self, r: u32) -> Result<MPoly> {
        let d = self.explicit_d()?;
        let terms = subsets(d, r as usize).into_iter().map(|s| {
            let mut m = MPoly::unit_monomial(self.cfg);
            for i in s {
                m.x[i] = 1;
            }
            (m, Q::one())
        });
        Ok(MPoly::from_terms(self.cfg, terms))
    }

    /// h_r(x), explicit model only.
    pub fn h_x(&self, r: u32) -> Result<MPoly> {
        let d = self.explicit_d()?;
        let terms = compositions(r, d).into_iter().map(|c| {
            let mut m = MPoly::unit_monomial(self.cfg);
            m.x = c;
            (m, Q::one())
        });
        Ok(MPoly::from_terms(self.cfg, terms))
    }

    /// q_r(x), the coefficient of t^r in Π (1 + x_i t)/(1 - x_i t).
    pub fn q(&self, r: u32) -> MPoly {
        {
            let cache = self.q_cache.lock().unwrap();
            if let Some(p) = cache.get(r as usize) {
                return p.clone();
            }
        }
        let mut cache = self.q_cache.lock().unwrap();
        while cache.len() <= r as usize {
            let s = cache.len() as u32;
            let next = if s == 0 {
                self.one()
            } else {
                match self.cfg.x {
                    // s q_s = Σ_{j odd ≤ s} 2 p_j q_{s-j}
                    XModel::PowerSum => {
                        let mut acc = self.zero();
                        for j in (1..=s).step_by(2) {
                            let pj = MPoly::power_sum(self.cfg, j).expect("odd index");
                            acc.add_scaled(&pj.mul(&cache[(s - j) as usize]), &int(2));
                        }
                        acc.scale(&(Q::one() / int(s as i64)))
                    }
                    XModel::Explicit(_) => {
                        let mut acc = self.zero();
                        for a in 0..=s {
                            let e = self.e_x(a).expect("explicit model");
                            let h = self.h_x(s - a).expect("explicit model");
                            acc.add_scaled(&e.mul(&h), &Q::one());
                        }
                        acc
                    }
                }
            };
            cache.push(next);
        }
        cache[r as usize].clone()
    }

    /// ϑ_r = Σ_i q_{r-i}(x) e_i(y).
    pub fn theta(&self, r: u32) -> MPoly {
        if let Some(p) = self.theta_cache.lock().unwrap().get(&r) {
            return p.clone();
        }
        let mut acc = self.zero();
        for i in 0..=r.min(self.cfg.k as u32) {
            acc.add_scaled(&self.q(r - i).mul(&self.e_y(i)), &Q::one());
        }
        self.theta_cache.lock().unwrap().insert(r, acc.clone());
        acc
    }

    /// P_r = q_r / 2 for r ≥ 1, P_0 = 1.
    pub fn p_single(&self, r: u32) -> MPoly {
        if r == 0 {
            self.one()
        } else {
            self.q(r).scale(&rational::half())
        }
    }

    /// η_r with the k of this configuration.
    pub fn eta(&self, r: u32) -> MPoly {
        let k = self.cfg.k as u32;
        let mut acc = self.zero();
        if r < k {
            acc.add_scaled(&self.e_y(r), &Q::one());
            for i in 0..r {
                acc.add_scaled(&self.p_single(r - i).mul(&self.e_y(i)), &int(2));
            }
        } else {
            for i in 0..=r.min(k) {
                acc.add_scaled(&self.p_single(r - i).mul(&self.e_y(i)), &Q::one());
            }
        }
        acc
    }

    /// η′_k = Σ_{i<k} P_{k-i}(x) e_i(y).
    pub fn eta_prime(&self) -> MPoly {
        let k = self.cfg.k as u32;
        let mut acc = self.zero();
        for i in 0..k {
            acc.add_scaled(&self.p_single(k - i).mul(&self.e_y(i)), &Q::one());
        }
        acc
    }

    /// Σ coeff · Π gen(α_i) over the raising expansion of `parts`.
    pub fn raise(&self, parts: &[u32], rule: PairRule, gen: impl Fn(u32) -> MPoly) -> Result<MPoly> {
        let mut table: HashMap<u32, MPoly> = HashMap::new();
        let mut acc = self.zero();
        for t in expand(parts, rule, None, None)? {
            let mut prod = self.one();
            for &a in &t.alpha {
                if a == 0 {
                    continue;
                }
                let g = table.entry(a).or_insert_with(|| gen(a));
                prod = prod.mul(g);
                if prod.is_zero() {
                    break;
                }
            }
            acc.add_scaled(&prod, &t.coeff);
        }
        Ok(acc)
    }

    /// Q_λ(x) for strict λ.
    pub fn schur_q(&self, lambda: &[u32]) -> Result<MPoly> {
        if !is_strict(lambda) {
            return Err(Error::Partition {
                parts: lambda.to_vec(),
                k: 0,
                reason: "Schur Q-functions need a strict partition".into(),
            });
        }
        self.raise(lambda, PairRule::AllRatio, |r| self.q(r))
    }

    /// P_λ(x) = 2^{-ℓ(λ)} Q_λ(x).
    pub fn schur_p(&self, lambda: &[u32]) -> Result<MPoly> {
        if let Some(p) = self.p_cache.lock().unwrap().get(lambda) {
            return Ok(p.clone());
        }
        let p = self.schur_q(lambda)?.scale(&pow2(-(lambda.len() as i32)));
        self.p_cache.lock().unwrap().insert(lambda.to_vec(), p.clone());
        Ok(p)
    }

    /// s_{ν'}(y) = Π(1 - R_ij) e_ν(y).
    pub fn schur_y(&self, nu: &[u32]) -> Result<MPoly> {
        if let Some(p) = self.sy_cache.lock().unwrap().get(nu) {
            return Ok(p.clone());
        }
        let p = self.raise(nu, PairRule::Plain, |r| self.e_y(r))?;
        self.sy_cache.lock().unwrap().insert(nu.to_vec(), p.clone());
        Ok(p)
    }

    /// s_{ν'}(x), explicit model only.
    pub fn schur_x(&self, nu: &[u32]) -> Result<MPoly> {
        self.explicit_d()?;
        self.raise(nu, PairRule::Plain, |r| self.e_x(r).expect("explicit model"))
    }

    pub fn family(&self, f: &Family) -> Result<MPoly> {
        match f {
            Family::ElementaryX(r) => self.e_x(*r),
            Family::ElementaryY(r) => Ok(self.e_y(*r)),
            Family::Q(r) => Ok(self.q(*r)),
            Family::SchurX(nu) => self.schur_x(nu),
            Family::SchurY(nu) => self.schur_y(nu),
            Family::SchurQ(l) => self.schur_q(l),
            Family::SchurP(l) => self.schur_p(l),
        }
    }

    /// The unique d_{μν} with f = Σ d_{μν} P_μ(x) s_{ν′}(y), μ strict and
    /// ν with parts at most k.
    pub fn expand_p_s(&self, f: &MPoly) -> Result<PsExpansion> {
        if !f.is_separately_symmetric() {
            return Err(Error::Expansion("input is not symmetric in x and in y separately".into()));
        }
        let mut out = BTreeMap::new();
        for deg in f.degrees() {
            let piece = f.degree_part(deg);
            let mut labels = Vec::new();
            let mut solver: SpanSolver<Monomial> = SpanSolver::new();
            for a in 0..=deg {
                for mu in strict_partitions(a) {
                    for nu in partitions_bounded(deg - a, self.cfg.k as u32) {
                        let col = self.schur_p(&mu)?.mul(&self.schur_y(&nu)?);
                        if !solver.push(col.terms) {
                            return Err(Error::Singular(format!(
                                "P_{mu:?} s_{nu:?}' is dependent in this variable model"
                            )));
                        }
                        labels.push((mu.clone(), nu));
                    }
                }
            }
            let target: SparseVec<Monomial> = piece.terms;
            let combo = solver
                .express(&target)
                .ok_or_else(|| Error::NotInSpan(format!("degree {deg} piece is outside the P·s span")))?;
            for (i, v) in combo {
                out.insert(labels[i].clone(), v);
            }
        }
        Ok(out)
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= n {
        go(0, n, r, &mut Vec::new(), &mut out);
    }
    out
}

/// Weak compositions of r into d parts.
fn compositions(r: u32, d: usize) -> Vec<Vec<u32>> {
    if d == 0 {
        return if r == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=r {
        for mut rest in compositions(r - first, d - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(k: usize, cap: u32) -> Sym {
        Sym::new(VarConfig::power_sum(k, cap))
    }

    #[test]
    fn q1_is_twice_e1() {
        let s = Sym::new(VarConfig::explicit(3, 0, 6));
        assert_eq!(s.q(1), s.e_x(1).unwrap().scale(&int(2)));
        let p = ps(0, 6);
        assert_eq!(p.q(1), MPoly::power_sum(p.cfg(), 1).unwrap().scale(&int(2)));
    }

    #[test]
    fn schur_single_column() {
        let s = Sym::new(VarConfig::explicit(3, 0, 6));
        assert_eq!(s.schur_x(&[2]).unwrap(), s.e_x(2).unwrap());
    }

    #[test]
    fn schur_q_matches_brute_force() {
        // Q_{21} = q_2 q_1 - 2 q_3 in explicit variables.
        let s = Sym::new(VarConfig::explicit(4, 0, 6));
        let brute = s.q(2).mul(&s.q(1)).minus(&s.q(3).scale(&int(2)));
        assert_eq!(s.schur_q(&[2, 1]).unwrap(), brute);
        assert!(s.schur_q(&[2, 2]).is_err());
    }

    #[test]
    fn power_sum_model_agrees_with_explicit_variables() {
        // Substitute p_j = Σ x_i^j and compare Q_{31}.
        let cap = 8;
        let ex = Sym::new(VarConfig::explicit(4, 0, cap));
        let pw = ps(0, cap);
        let q = pw.schur_q(&[3, 1]).unwrap();
        let mut sub = ex.zero();
        for (m, v) in &q.terms {
            let mut prod = ex.one();
            for &j in &m.x {
                let mut pj = ex.zero();
                for i in 0..4 {
                    let mut x = MPoly::unit_monomial(ex.cfg());
                    x.x[i] = j;
                    pj.add_scaled(&MPoly::from_terms(ex.cfg(), [(x, Q::one())]), &Q::one());
                }
                prod = prod.mul(&pj);
            }
            sub.add_scaled(&prod, v);
        }
        assert_eq!(sub, ex.schur_q(&[3, 1]).unwrap());
    }

    #[test]
    fn theta_at_y_zero_and_eta_difference() {
        let s = ps(2, 8);
        assert_eq!(s.theta(4).at_y_zero(), s.q(4));
        assert_eq!(s.eta(2).minus(&s.eta_prime()), s.e_y(2));
        assert_eq!(s.eta(2).plus(&s.eta_prime()), s.theta(2));
        assert_eq!(s.eta(3).scale(&int(2)), s.theta(3));
        assert_eq!(s.eta(1), s.theta(1));
    }

    #[test]
    fn theta_quadratic_identity() {
        let s = ps(2, 10);
        for r in 1..=5u32 {
            let mut lhs = s.theta(r).mul(&s.theta(r));
            for i in 1..=r {
                let sign = if i % 2 == 0 { int(2) } else { int(-2) };
                lhs.add_scaled(&s.theta(r + i).mul(&s.theta(r - i)), &sign);
            }
            assert_eq!(lhs, s.e_y_squared(r), "r={r}");
        }
    }

    #[test]
    fn p_s_expansion_round_trip() {
        let s = ps(2, 8);
        let f = s.schur_p(&[3, 1]).unwrap().mul(&s.schur_y(&[2, 1]).unwrap());
        let d = s.expand_p_s(&f).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.get(&(vec![3, 1], vec![2, 1])), Some(&Q::one()));
        let d = s.expand_p_s(&s.eta_prime()).unwrap();
        assert_eq!(d.get(&(vec![2], vec![])), Some(&Q::one()));
        assert_eq!(d.get(&(vec![1], vec![1])), Some(&Q::one()));
    }

    #[test]
    fn partition_helpers() {
        assert_eq!(strict_partitions(6).len(), 4);
        assert_eq!(partitions_bounded(4, 2), vec![vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }
}
