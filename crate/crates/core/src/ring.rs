//! Schubert-basis arithmetic for OG(m, N), its quantum deformation and the
//! stable ring.
//!
//! Products are computed in the split basis: hat classes τ̂_λ = τ_λ + τ′_λ
//! span the subring generated by the Chern classes, and tilde classes
//! τ̃_λ = τ_λ - τ′_λ form a module over it generated by τ̃_k. A product
//! τ_λ · b is the Giambelli polynomial of λ, written as A(c) + B(c)·τ′_k,
//! folded onto b one Chern class at a time through the Pieri rules, with
//! τ′_k = (c_k - τ̃_k)/2.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{solve_unique, SparseVec};
use crate::partition::{enumerate_kstrict, enumerate_typed, kstrict_of_size, GrassParams, KStrict, Typed};
use crate::pieri::{self, ClassKind, Mode, PieriTerm};
use crate::raising::{giambelli_c, giambelli_special, giambelli_tilde, Flag, Mono, SpecialPolynomial};
use crate::rational::{self, accumulate, half, int, pow2, Q};

/// Exponents of (q1, q2); single-q rings use the first slot only.
pub type QDeg = [u32; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingMode {
    Classical,
    Quantum,
    Stable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub kk: u32,
    pub params: Option<GrassParams>,
    pub mode: RingMode,
}

impl RingSpec {
    pub fn classical(params: GrassParams) -> Self {
        RingSpec { kk: params.kk, params: Some(params), mode: RingMode::Classical }
    }

    pub fn quantum(params: GrassParams) -> Result<Self> {
        if params.kk < 2 {
            return Err(Error::Unsupported("quantum rings need K >= 2".into()));
        }
        Ok(RingSpec { kk: params.kk, params: Some(params), mode: RingMode::Quantum })
    }

    /// The stable ring for a fixed K = N - 2m.
    pub fn stable(kk: u32) -> Result<Self> {
        if kk == 0 {
            return Err(Error::Unsupported("K = 0 is not supported".into()));
        }
        Ok(RingSpec { kk, params: None, mode: RingMode::Stable })
    }

    pub fn k(&self) -> u32 {
        self.kk / 2
    }

    pub fn is_even(&self) -> bool {
        self.kk.is_multiple_of(2)
    }

    pub fn fits(&self, parts: &[u32]) -> bool {
        self.params.is_none_or(|p| p.fits(parts))
    }

    /// Degree of q (and of each of q1, q2).
    pub fn q_weight(&self) -> u32 {
        self.params.map_or(0, |p| p.qdeg())
    }

    pub fn two_q(&self) -> bool {
        self.mode == RingMode::Quantum && self.kk == 2
    }

    pub fn json(&self) -> Value {
        let mut v = json!({ "k": self.k(), "K": self.kk, "mode": self.mode });
        if let Some(p) = self.params {
            v["n"] = json!(p.n);
            v["m"] = json!(p.m);
            v["N"] = json!(p.big_n);
        }
        v
    }
}

pub type SplitKey = (KStrict, QDeg);

/// An element written in hat and tilde classes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SplitExpr {
    pub hat: BTreeMap<SplitKey, Q>,
    pub tilde: BTreeMap<SplitKey, Q>,
}

impl SplitExpr {
    pub fn zero() -> Self {
        SplitExpr::default()
    }

    pub fn unit(k: u32) -> Self {
        let mut e = SplitExpr::zero();
        e.add_hat(KStrict::empty(k), [0, 0], int(1));
        e
    }

    pub fn add_hat(&mut self, mu: KStrict, q: QDeg, v: Q) {
        accumulate(&mut self.hat, (mu, q), v);
    }

    pub fn add_tilde(&mut self, mu: KStrict, q: QDeg, v: Q) {
        accumulate(&mut self.tilde, (mu, q), v);
    }

    pub fn is_zero(&self) -> bool {
        self.hat.is_empty() && self.tilde.is_empty()
    }

    /// self += s · other · q^shift
    pub fn add_scaled(&mut self, other: &SplitExpr, s: &Q, shift: QDeg) {
        if s.is_zero() {
            return;
        }
        for ((mu, d), v) in &other.hat {
            self.add_hat(mu.clone(), add_q(*d, shift), v * s);
        }
        for ((mu, d), v) in &other.tilde {
            self.add_tilde(mu.clone(), add_q(*d, shift), v * s);
        }
    }

    pub fn scaled(&self, s: &Q) -> Self {
        let mut out = SplitExpr::zero();
        out.add_scaled(self, s, [0, 0]);
        out
    }

    pub fn plus(&self, other: &SplitExpr) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &int(1), [0, 0]);
        out
    }
}

fn add_q(a: QDeg, b: QDeg) -> QDeg {
    [a[0] + b[0], a[1] + b[1]]
}

/// A ring element in the Schubert basis τ_λ q^d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertExpr {
    pub spec: RingSpec,
    pub terms: BTreeMap<(Typed, QDeg), Q>,
}

impl SchubertExpr {
    pub fn zero(spec: RingSpec) -> Self {
        SchubertExpr { spec, terms: BTreeMap::new() }
    }

    pub fn one(spec: RingSpec) -> Self {
        let mut e = Self::zero(spec);
        e.add(Typed::untyped(KStrict::empty(spec.k())), [0, 0], int(1));
        e
    }

    /// A single basis class τ_λ q^d, validated against the ring.
    pub fn basis(spec: RingSpec, lambda: Typed, q: QDeg) -> Result<Self> {
        if lambda.k() != spec.k() {
            return Err(Error::RingMismatch(format!("{lambda} in a ring with k={}", spec.k())));
        }
        if !spec.fits(lambda.parts()) {
            return Err(Error::OutsideRectangle(lambda.to_string()));
        }
        if !spec.is_even() && lambda.ty() != 0 {
            return Err(Error::RingMismatch("odd spaces have untyped classes".into()));
        }
        if spec.is_even() {
            Typed::new(lambda.shape().clone(), lambda.ty())?;
        }
        if q != [0, 0] && spec.mode != RingMode::Quantum || (q[1] != 0 && !spec.two_q()) {
            return Err(Error::RingMismatch(format!("q-degree {q:?} not available in this ring")));
        }
        let mut e = Self::zero(spec);
        e.add(lambda, q, int(1));
        Ok(e)
    }

    pub fn add(&mut self, lambda: Typed, q: QDeg, v: Q) {
        accumulate(&mut self.terms, (lambda, q), v);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_of(&self, lambda: &Typed, q: QDeg) -> u32 {
        lambda.size() + (q[0] + q[1]) * self.spec.q_weight()
    }

    /// The common degree of all terms, if the element is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(l, q)| self.degree_of(l, *q));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(rational::is_integer)
    }

    pub fn has_q_terms(&self) -> bool {
        self.terms.keys().any(|(_, q)| *q != [0, 0])
    }

    /// Exchanges types 1 and 2 (and q1, q2 in two-parameter rings).
    pub fn swap_types(&self) -> Self {
        let mut out = Self::zero(self.spec);
        for ((l, q), v) in &self.terms {
            let q = if self.spec.two_q() { [q[1], q[0]] } else { *q };
            out.add(l.swapped(), q, v.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((l, q), v)| {
                json!({ "mu": l.parts(), "type": l.ty(), "q": q, "coef": rational::to_string(v) })
            })
            .collect();
        json!({ "ring": self.spec.json(), "terms": terms })
    }

    pub fn from_json(v: &Value, spec: RingSpec) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("expression JSON: {m}"));
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut e = Self::zero(spec);
        for t in terms {
            let parts: Vec<u32> = serde_json::from_value(t["mu"].clone()).map_err(|_| bad("mu"))?;
            let ty = t["type"].as_u64().ok_or_else(|| bad("type"))? as u8;
            let q: QDeg = serde_json::from_value(t["q"].clone()).map_err(|_| bad("q"))?;
            let coef = rational::parse(t["coef"].as_str().ok_or_else(|| bad("coef"))?)?;
            let shape = KStrict::new(parts, spec.k())?;
            let lambda = if spec.is_even() { Typed::new(shape, ty)? } else { Typed::untyped(shape) };
            e.add(lambda, q, coef);
        }
        Ok(e)
    }
}

impl fmt::Display for SchubertExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let even = self.spec.is_even();
        for (idx, ((l, q), v)) in self.terms.iter().enumerate() {
            let neg = v.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = v.abs();
            if !a.is_one() {
                write!(f, "{}*", rational::to_string(&a))?;
            }
            let name = if even { "tau" } else { "sigma" };
            write!(f, "{name}{}", crate::partition::fmt_parts(l.parts()))?;
            if even && l.ty() > 0 {
                write!(f, "'{}", l.ty())?;
            }
            write!(f, "{}", q_string(*q, self.spec.two_q()))?;
        }
        Ok(())
    }
}

fn q_string(q: QDeg, two: bool) -> String {
    let pw = |name: &str, e: u32| match e {
        0 => String::new(),
        1 => format!("*{name}"),
        e => format!("*{name}^{e}"),
    };
    if two {
        format!("{}{}", pw("q1", q[0]), pw("q2", q[1]))
    } else {
        pw("q", q[0])
    }
}

/// Typed basis → split basis.
pub fn to_split(e: &SchubertExpr) -> SplitExpr {
    let mut out = SplitExpr::zero();
    for ((l, q), v) in &e.terms {
        let shape = l.shape().clone();
        match l.ty() {
            0 => out.add_hat(shape, *q, v.clone()),
            t => {
                let h = v * half();
                out.add_hat(shape.clone(), *q, h.clone());
                out.add_tilde(shape, *q, if t == 1 { h } else { -h });
            }
        }
    }
    out
}

/// Split basis → typed basis.
pub fn from_split(s: &SplitExpr, spec: RingSpec) -> Result<SchubertExpr> {
    let mut out = SchubertExpr::zero(spec);
    for ((mu, q), v) in &s.hat {
        if spec.is_even() && mu.has_part_k() {
            out.add(Typed::new(mu.clone(), 1)?, *q, v.clone());
            out.add(Typed::new(mu.clone(), 2)?, *q, v.clone());
        } else {
            out.add(Typed::untyped(mu.clone()), *q, v.clone());
        }
    }
    for ((mu, q), v) in &s.tilde {
        if !spec.is_even() || !mu.has_part_k() {
            return Err(Error::RingMismatch(format!("tilde class {mu} has no positive type")));
        }
        out.add(Typed::new(mu.clone(), 1)?, *q, v.clone());
        out.add(Typed::new(mu.clone(), 2)?, *q, -v.clone());
    }
    Ok(out)
}

/// Ring generators acting on split expressions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    C(u32),
    TauPrime,
    TauTilde,
}

/// A ring together with memo tables for the Pieri actions.
pub struct Ring {
    spec: RingSpec,
    c_hat: Mutex<HashMap<(u32, KStrict), SplitExpr>>,
    c_tilde: Mutex<HashMap<(u32, KStrict), SplitExpr>>,
    tt_hat: Mutex<HashMap<KStrict, SplitExpr>>,
    tt_tilde: Mutex<HashMap<KStrict, SplitExpr>>,
    giambelli: Mutex<HashMap<Typed, (SpecialPolynomial, SpecialPolynomial)>>,
}

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Self> {
        if spec.mode == RingMode::Quantum {
            let p = spec.params.ok_or_else(|| Error::Params("quantum ring needs parameters".into()))?;
            if !p.is_even() && p.kk < 3 {
                return Err(Error::Unsupported("quantum odd rings need K >= 3".into()));
            }
        }
        if spec.mode != RingMode::Stable && spec.params.is_none() {
            return Err(Error::Params("bounded ring needs parameters".into()));
        }
        Ok(Ring {
            spec,
            c_hat: Mutex::new(HashMap::new()),
            c_tilde: Mutex::new(HashMap::new()),
            tt_hat: Mutex::new(HashMap::new()),
            tt_tilde: Mutex::new(HashMap::new()),
            giambelli: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    fn k(&self) -> u32 {
        self.spec.k()
    }

    /// Basis classes of a bounded ring (q-degree zero).
    pub fn basis(&self) -> Result<Vec<Typed>> {
        let p = self.spec.params.ok_or_else(|| Error::Unsupported("the stable ring has no finite basis".into()))?;
        if self.spec.is_even() {
            Ok(enumerate_typed(p.k, p.rows(), p.cols()))
        } else {
            Ok(enumerate_kstrict(p.k, p.rows(), p.cols()).into_iter().map(Typed::untyped).collect())
        }
    }

    fn top(&self) -> Option<u32> {
        self.spec.params.map(|p| p.cols())
    }

    fn terms_to_split(&self, terms: Vec<PieriTerm>) -> Result<SplitExpr> {
        let mut out = SplitExpr::zero();
        for t in terms {
            if !self.spec.fits(&t.mu) {
                continue;
            }
            let mu = KStrict::new(t.mu, self.k())?;
            let v = pow2(t.pow2) * int(t.sign as i64);
            match t.class {
                ClassKind::Hat => out.add_hat(mu, t.q, v),
                ClassKind::Tilde => out.add_tilde(mu, t.q, v),
                ClassKind::Typed(_) => unreachable!("split rules never emit typed terms"),
            }
        }
        Ok(out)
    }

    fn c_on_hat(&self, p: u32, mu: &KStrict) -> Result<SplitExpr> {
        if let Some(v) = self.c_hat.lock().unwrap().get(&(p, mu.clone())) {
            return Ok(v.clone());
        }
        let spec = self.spec;
        let terms = if self.top().is_some_and(|t| p > t) {
            Vec::new()
        } else {
            match spec.mode {
                RingMode::Stable | RingMode::Classical => pieri::pieri_hat(mu, p, spec.kk),
                RingMode::Quantum => {
                    let params = spec.params.unwrap();
                    if spec.kk == 2 {
                        pieri::k2_quantum_pieri(mu, p, params.n, Mode::Hat)?
                    } else {
                        pieri::quantum_chern_pieri(mu, p, &params, Mode::Hat)?
                    }
                }
            }
        };
        let out = self.terms_to_split(terms)?;
        self.c_hat.lock().unwrap().insert((p, mu.clone()), out.clone());
        Ok(out)
    }

    fn c_on_tilde(&self, p: u32, mu: &KStrict) -> Result<SplitExpr> {
        if !self.spec.is_even() {
            return Err(Error::RingMismatch("odd rings have no tilde classes".into()));
        }
        if let Some(v) = self.c_tilde.lock().unwrap().get(&(p, mu.clone())) {
            return Ok(v.clone());
        }
        let spec = self.spec;
        let terms = if self.top().is_some_and(|t| p > t) {
            Vec::new()
        } else {
            match spec.mode {
                RingMode::Stable | RingMode::Classical => pieri::pieri_tilde(mu, p),
                RingMode::Quantum => {
                    let params = spec.params.unwrap();
                    if spec.kk == 2 {
                        pieri::k2_quantum_pieri(mu, p, params.n, Mode::Tilde)?
                    } else {
                        pieri::quantum_chern_pieri(mu, p, &params, Mode::Tilde)?
                    }
                }
            }
        };
        let out = self.terms_to_split(terms)?;
        self.c_tilde.lock().unwrap().insert((p, mu.clone()), out.clone());
        Ok(out)
    }

    /// c_p · e
    pub fn apply_c(&self, p: u32, e: &SplitExpr) -> Result<SplitExpr> {
        if p == 0 {
            return Ok(e.clone());
        }
        let mut out = SplitExpr::zero();
        for ((mu, d), v) in &e.hat {
            out.add_scaled(&self.c_on_hat(p, mu)?, v, *d);
        }
        for ((mu, d), v) in &e.tilde {
            out.add_scaled(&self.c_on_tilde(p, mu)?, v, *d);
        }
        Ok(out)
    }

    /// Applies a polynomial in the c_p (no markers) to e, sharing common
    /// prefixes of the monomials so each partial product is computed once.
    pub fn apply_poly(&self, poly: &SpecialPolynomial, e: &SplitExpr) -> Result<SplitExpr> {
        let mut monos: Vec<(&[u32], &Q)> = Vec::with_capacity(poly.terms.len());
        for (m, v) in &poly.terms {
            if m.flag != Flag::None {
                return Err(Error::Unsupported("apply_poly expects a pure c-polynomial".into()));
            }
            monos.push((&m.c, v));
        }
        monos.sort();
        self.apply_trie(&monos, 0, e)
    }

    fn apply_trie(&self, monos: &[(&[u32], &Q)], depth: usize, e: &SplitExpr) -> Result<SplitExpr> {
        let mut out = SplitExpr::zero();
        let mut i = 0;
        while i < monos.len() {
            let (m, v) = monos[i];
            if m.len() == depth {
                out.add_scaled(e, v, [0, 0]);
                i += 1;
                continue;
            }
            let p = m[depth];
            let mut j = i;
            while j < monos.len() && monos[j].0.len() > depth && monos[j].0[depth] == p {
                j += 1;
            }
            let next = self.apply_c(p, e)?;
            if !next.is_zero() {
                let sub = self.apply_trie(&monos[i..j], depth + 1, &next)?;
                out.add_scaled(&sub, &int(1), [0, 0]);
            }
            i = j;
        }
        Ok(out)
    }

    /// F(c) = c_k² + 2 Σ_{i=1}^k (-1)^i c_{k+i} c_{k-i}, the square of τ̃_k.
    pub fn tilde_square_poly(&self) -> SpecialPolynomial {
        let k = self.k();
        let mut f = SpecialPolynomial::zero(k);
        f.add(Mono::new(vec![k, k], Flag::None), int(1));
        for i in 1..=k {
            let s = if i % 2 == 0 { 2 } else { -2 };
            f.add(Mono::new(vec![k + i, k - i], Flag::None), int(s));
        }
        f
    }

    fn tt_on_hat(&self, mu: &KStrict) -> Result<SplitExpr> {
        if let Some(v) = self.tt_hat.lock().unwrap().get(mu) {
            return Ok(v.clone());
        }
        let k = self.k();
        let g = giambelli_c(mu, self.spec.kk)?;
        let mut start = SplitExpr::zero();
        start.add_tilde(KStrict::new(vec![k], k)?, [0, 0], int(1));
        let out = self.apply_poly(&g, &start)?;
        self.tt_hat.lock().unwrap().insert(mu.clone(), out.clone());
        Ok(out)
    }

    fn tt_on_tilde(&self, mu: &KStrict) -> Result<SplitExpr> {
        if let Some(v) = self.tt_tilde.lock().unwrap().get(mu) {
            return Ok(v.clone());
        }
        let k = self.k();
        let square = self.apply_poly(&self.tilde_square_poly(), &SplitExpr::unit(k))?;
        let g = giambelli_tilde(mu)?;
        let out = self.apply_poly(&g, &square)?;
        self.tt_tilde.lock().unwrap().insert(mu.clone(), out.clone());
        Ok(out)
    }

    /// τ̃_k · e
    pub fn apply_tau_tilde(&self, e: &SplitExpr) -> Result<SplitExpr> {
        if !self.spec.is_even() {
            return Err(Error::RingMismatch("τ̃_k exists only for even N".into()));
        }
        let mut out = SplitExpr::zero();
        for ((mu, d), v) in &e.hat {
            out.add_scaled(&self.tt_on_hat(mu)?, v, *d);
        }
        for ((mu, d), v) in &e.tilde {
            out.add_scaled(&self.tt_on_tilde(mu)?, v, *d);
        }
        Ok(out)
    }

    /// τ′_k · e = (c_k · e - τ̃_k · e) / 2
    pub fn apply_tau_prime(&self, e: &SplitExpr) -> Result<SplitExpr> {
        let a = self.apply_c(self.k(), e)?;
        let b = self.apply_tau_tilde(e)?;
        let mut out = a;
        out.add_scaled(&b, &int(-1), [0, 0]);
        Ok(out.scaled(&half()))
    }

    pub fn apply_generator(&self, e: &SplitExpr, g: Generator) -> Result<SplitExpr> {
        match g {
            Generator::C(p) => self.apply_c(p, e),
            Generator::TauPrime => self.apply_tau_prime(e),
            Generator::TauTilde => self.apply_tau_tilde(e),
        }
    }

    /// The Giambelli polynomial of τ_λ split as A(c) + B(c)·τ′_k.
    pub fn giambelli_parts(&self, lambda: &Typed) -> Result<(SpecialPolynomial, SpecialPolynomial)> {
        if let Some(v) = self.giambelli.lock().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let parts = if self.spec.is_even() {
            giambelli_special(lambda)?.split_c_form()
        } else {
            (giambelli_c(lambda.shape(), self.spec.kk)?, SpecialPolynomial::zero(self.k()))
        };
        self.giambelli.lock().unwrap().insert(lambda.clone(), parts.clone());
        Ok(parts)
    }

    /// Evaluates a mixed-form polynomial (c_p, τ_k, τ′_k) on an element.
    pub fn evaluate(&self, poly: &SpecialPolynomial, e: &SplitExpr) -> Result<SplitExpr> {
        let (a, b) = poly.split_c_form();
        let mut out = self.apply_poly(&a, e)?;
        if !b.is_zero() {
            let tp = self.apply_tau_prime(e)?;
            out.add_scaled(&self.apply_poly(&b, &tp)?, &int(1), [0, 0]);
        }
        Ok(out)
    }

    fn check_spec(&self, e: &SchubertExpr) -> Result<()> {
        if e.spec != self.spec {
            return Err(Error::RingMismatch("expressions from different rings".into()));
        }
        Ok(())
    }

    pub fn multiply(&self, a: &SchubertExpr, b: &SchubertExpr) -> Result<SchubertExpr> {
        self.check_spec(a)?;
        self.check_spec(b)?;
        let bs = to_split(b);
        let mut tp: Option<SplitExpr> = None;
        let mut out = SplitExpr::zero();
        for ((lambda, d), v) in &a.terms {
            let (pa, pb) = self.giambelli_parts(lambda)?;
            let mut part = self.apply_poly(&pa, &bs)?;
            if !pb.is_zero() {
                if tp.is_none() {
                    tp = Some(self.apply_tau_prime(&bs)?);
                }
                part.add_scaled(&self.apply_poly(&pb, tp.as_ref().unwrap())?, &int(1), [0, 0]);
            }
            out.add_scaled(&part, v, *d);
        }
        from_split(&out, self.spec)
    }

    /// Coefficients of τ_ν q^d in τ_λ · τ_μ.
    pub fn structure_constants(&self, lambda: &Typed, mu: &Typed) -> Result<BTreeMap<(Typed, QDeg), Q>> {
        let a = SchubertExpr::basis(self.spec, lambda.clone(), [0, 0])?;
        let b = SchubertExpr::basis(self.spec, mu.clone(), [0, 0])?;
        Ok(self.multiply(&a, &b)?.terms)
    }

    /// Evaluates the Giambelli polynomial of λ on 1 and compares with τ_λ.
    pub fn verify_giambelli(&self, lambda: &Typed) -> Result<GiambelliCheck> {
        let expected = SchubertExpr::basis(self.spec, lambda.clone(), [0, 0])?;
        let poly = if self.spec.is_even() {
            giambelli_special(lambda)?
        } else {
            giambelli_c(lambda.shape(), self.spec.kk)?
        };
        let got = from_split(&self.evaluate(&poly, &SplitExpr::unit(self.k()))?, self.spec)?;
        Ok(GiambelliCheck { lambda: lambda.clone(), ok: got == expected, got })
    }
}

#[derive(Clone, Debug)]
pub struct GiambelliCheck {
    pub lambda: Typed,
    pub ok: bool,
    pub got: SchubertExpr,
}

/// Evaluates every Giambelli polynomial of QH(OG(n+1-k, 2n+2)) on 1.
pub fn verify_quantum_giambelli(params: &GrassParams) -> Result<Vec<GiambelliCheck>> {
    let ring = Ring::new(RingSpec::quantum(*params)?)?;
    ring.basis()?.iter().map(|l| ring.verify_giambelli(l)).collect()
}

/// Coefficients a_{p,μ} of the stable recursion [Y_λ] = Σ a_{p,μ} c_p [Y_μ].
#[derive(Clone, Debug)]
pub struct Recursion {
    pub coeffs: BTreeMap<(u32, KStrict), Q>,
    /// Every μ in the support is contained in λ with its first row removed.
    pub inside_star: bool,
    /// Every p in the support is below 2n+2k (only when parameters are given).
    pub below_bound: Option<bool>,
}

/// Solves for the unique a_{p,μ} over p ≥ λ_1 and k-strict (p, μ) in the
/// stable ring, then checks where the support lands.
pub fn recursion_coefficients(lambda: &KStrict, kk: u32, params: Option<&GrassParams>) -> Result<Recursion> {
    let k = lambda.k();
    if k != kk / 2 {
        return Err(Error::RingMismatch(format!("partition k={k} vs K={kk}")));
    }
    let total = lambda.size();
    let mut unknowns: Vec<(u32, KStrict)> = Vec::new();
    if total > 0 {
        for p in lambda.part(1)..=total {
            for mu in kstrict_of_size(k, total - p, None, Some(p)) {
                // (p, μ) is k-strict: a repeated first part is allowed only up to k
                if mu.part(1) < p || p <= k {
                    unknowns.push((p, mu));
                }
            }
        }
    }
    let columns: Vec<SparseVec<KStrict>> = unknowns
        .iter()
        .map(|(p, mu)| {
            let mut col = SparseVec::new();
            for t in pieri::pieri_hat(mu, *p, kk) {
                let nu = KStrict::new(t.mu, k).expect("Pieri output is k-strict");
                accumulate(&mut col, nu, pow2(t.pow2));
            }
            col
        })
        .collect();
    let coeffs: BTreeMap<(u32, KStrict), Q> = if total == 0 {
        BTreeMap::new()
    } else {
        let mut target = SparseVec::new();
        target.insert(lambda.clone(), Q::one());
        let sol = solve_unique(&columns, &target)?;
        unknowns.into_iter().zip(sol).filter(|(_, v)| !v.is_zero()).collect()
    };
    let star = lambda.star();
    let inside_star = coeffs.keys().all(|(_, mu)| crate::partition::contains(star.parts(), mu.parts()));
    let below_bound = params
        .filter(|p| p.fits(lambda.parts()))
        .map(|p| coeffs.keys().all(|(q, _)| *q < 2 * p.n + 2 * p.k));
    Ok(Recursion { coeffs, inside_star, below_bound })
}

/// Maps σ_λ q^d in the odd ring OG(m-1, N-1) to τ̃_{λ+k} (±q)^d, the sign
/// being (-1)^d in quantum mode.
pub fn odd_even_transfer(e: &SchubertExpr) -> Result<SplitExpr> {
    if e.spec.is_even() {
        return Err(Error::RingMismatch("transfer starts from an odd ring".into()));
    }
    let quantum = e.spec.mode == RingMode::Quantum;
    let mut out = SplitExpr::zero();
    for ((l, q), v) in &e.terms {
        if !e.spec.fits(l.parts()) {
            return Err(Error::OutsideRectangle(l.to_string()));
        }
        let sign = if quantum && q[0] % 2 == 1 { int(-1) } else { int(1) };
        out.add_tilde(l.shape().plus_k(), *q, v * sign);
    }
    Ok(out)
}

/// The even ring paired with an odd one: OG(m+1, N+1).
pub fn even_partner(odd: &RingSpec) -> Result<RingSpec> {
    let p = odd.params.ok_or_else(|| Error::Params("transfer needs a bounded ring".into()))?;
    if p.is_even() {
        return Err(Error::RingMismatch("expected an odd space".into()));
    }
    let even = GrassParams::new(p.big_n + 1, p.m + 1)?;
    Ok(RingSpec { kk: even.kk, params: Some(even), mode: odd.mode })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(parts: &[u32], k: u32, ty: u8) -> Typed {
        Typed::from_parts(parts.to_vec(), k, ty).unwrap()
    }

    #[test]
    fn split_round_trip() {
        let spec = RingSpec::classical(GrassParams::even(2, 3).unwrap());
        let mut e = SchubertExpr::zero(spec);
        e.add(t(&[2], 2, 1), [0, 0], int(3));
        e.add(t(&[3, 2], 2, 2), [0, 0], int(-1));
        e.add(t(&[1], 2, 0), [0, 0], int(5));
        assert_eq!(from_split(&to_split(&e), spec).unwrap(), e);
        let s = to_split(&SchubertExpr::basis(spec, t(&[2], 2, 1), [0, 0]).unwrap());
        assert_eq!(s.hat.values().next(), Some(&half()));
        assert_eq!(s.tilde.values().next(), Some(&half()));
    }

    #[test]
    fn generators_on_one() {
        let ring = Ring::new(RingSpec::stable(4).unwrap()).unwrap();
        let one = SplitExpr::unit(2);
        let c3 = ring.apply_c(3, &one).unwrap();
        assert_eq!(c3.hat.values().collect::<Vec<_>>(), vec![&int(2)]);
        let tt = ring.apply_tau_tilde(&one).unwrap();
        assert_eq!(tt.tilde.keys().next().unwrap().0.parts(), &[2]);
    }

    #[test]
    fn stable_relation_tau_k_tau_prime() {
        // τ_k τ′_k = -Σ (-1)^i τ_{k+i} τ_{k-i}
        for k in 1..=2u32 {
            let spec = RingSpec::stable(2 * k).unwrap();
            let ring = Ring::new(spec).unwrap();
            let lhs = ring
                .multiply(
                    &SchubertExpr::basis(spec, t(&[k], k, 1), [0, 0]).unwrap(),
                    &SchubertExpr::basis(spec, t(&[k], k, 2), [0, 0]).unwrap(),
                )
                .unwrap();
            let mut rhs = SchubertExpr::zero(spec);
            for i in 1..=k {
                let a = SchubertExpr::basis(spec, Typed::default_type(KStrict::new(vec![k + i], k).unwrap()), [0, 0]).unwrap();
                let b = if i == k {
                    SchubertExpr::one(spec)
                } else {
                    SchubertExpr::basis(spec, Typed::default_type(KStrict::new(vec![k - i], k).unwrap()), [0, 0]).unwrap()
                };
                let prod = ring.multiply(&a, &b).unwrap();
                let s = if i % 2 == 1 { int(1) } else { int(-1) };
                for (key, v) in prod.terms {
                    rhs.add(key.0, key.1, v * &s);
                }
            }
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn giambelli_folds_to_basis_classically() {
        let ring = Ring::new(RingSpec::classical(GrassParams::even(2, 3).unwrap())).unwrap();
        for l in ring.basis().unwrap() {
            let c = ring.verify_giambelli(&l).unwrap();
            assert!(c.ok, "{l}: {}", c.got);
        }
    }

    #[test]
    fn recursion_small_cases() {
        let k = 2;
        let r = recursion_coefficients(&KStrict::new(vec![1], k).unwrap(), 4, None).unwrap();
        assert_eq!(r.coeffs.into_iter().collect::<Vec<_>>(), vec![((1, KStrict::empty(k)), int(1))]);
        let r = recursion_coefficients(&KStrict::new(vec![4], k).unwrap(), 4, None).unwrap();
        assert_eq!(r.coeffs.into_iter().collect::<Vec<_>>(), vec![((4, KStrict::empty(k)), half())]);
    }

    #[test]
    fn recursion_plugs_back_and_respects_support() {
        let params = GrassParams::even(2, 3).unwrap();
        let ring = Ring::new(RingSpec::stable(4).unwrap()).unwrap();
        for lambda in enumerate_kstrict(2, params.rows(), params.cols()).into_iter().filter(|l| l.size() <= 7) {
            let r = recursion_coefficients(&lambda, 4, Some(&params)).unwrap();
            assert!(r.inside_star, "{lambda}");
            assert_eq!(r.below_bound, Some(true), "{lambda}");
            if lambda.is_empty() {
                continue;
            }
            let mut sum = SplitExpr::zero();
            for ((p, mu), v) in &r.coeffs {
                let mut e = SplitExpr::zero();
                e.add_hat(mu.clone(), [0, 0], int(1));
                sum.add_scaled(&ring.apply_c(*p, &e).unwrap(), v, [0, 0]);
            }
            let mut want = SplitExpr::zero();
            want.add_hat(lambda.clone(), [0, 0], int(1));
            assert_eq!(sum, want, "{lambda}");
        }
    }

    #[test]
    fn special_quantum_product_n1() {
        let params = GrassParams::even(1, 1).unwrap();
        let spec = RingSpec::quantum(params).unwrap();
        let ring = Ring::new(spec).unwrap();
        let one = SplitExpr::unit(1);
        let tt = ring.apply_tau_tilde(&one).unwrap();
        let c1tt = ring.apply_c(1, &tt).unwrap();
        // c_1 τ̃_1 = q1 - q2 on OG(1,4).
        assert!(c1tt.tilde.is_empty());
        assert_eq!(c1tt.hat.get(&(KStrict::empty(1), [1, 0])), Some(&int(1)));
        assert_eq!(c1tt.hat.get(&(KStrict::empty(1), [0, 1])), Some(&int(-1)));
    }

    #[test]
    fn quantum_giambelli_has_no_q_terms() {
        for (k, n) in [(2, 3), (1, 1), (1, 2), (1, 3)] {
            let params = GrassParams::even(k, n).unwrap();
            for c in verify_quantum_giambelli(&params).unwrap() {
                assert!(c.ok, "k={k} n={n} {}: {}", c.lambda, c.got);
            }
        }
    }
}
