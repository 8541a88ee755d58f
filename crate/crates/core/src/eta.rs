//! Eta and theta polynomials, their S/Q closed forms, and the expansion of
//! H_λ in the basis P_μ(x) s_{ν′}(y).

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::SpanSolver;
use crate::partition::{contains, typed_of_size, KStrict, Typed};
use crate::raising::{expand, giambelli_special, Flag, PairRule};
use crate::rational::{self, half, pow2, Q};
use crate::symfunc::{MPoly, Monomial, PsExpansion, Sym, VarConfig};

/// Which closed form applies to a typed partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// λ_i + λ_j < 2k + j - i for all i < j.
    S,
    /// λ_i + λ_j ≥ 2k + j - i for all i < j.
    Q,
    Mixed,
}

#[derive(Clone, Debug)]
pub struct SqReport {
    pub regime: Regime,
    pub closed_form: Option<MPoly>,
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct DCoefficients {
    pub coeffs: PsExpansion,
    pub nonnegative_integers: bool,
    /// Every ν in the support lies inside λ² (the first k columns).
    pub inside_lambda2: bool,
}

/// H-basis labels of one degree with a solver over their monomials.
type DegreeSolver = (Vec<Typed>, SpanSolver<Monomial>);

/// Eta-polynomial factory for a fixed k (the number of y variables).
pub struct Eta {
    sym: Sym,
    k: u32,
    cache: Mutex<HashMap<Typed, MPoly>>,
    solvers: Mutex<HashMap<u32, DegreeSolver>>,
}

impl Eta {
    pub fn new(cfg: VarConfig) -> Result<Self> {
        if cfg.k == 0 {
            return Err(Error::Unsupported("eta polynomials need k >= 1".into()));
        }
        Ok(Eta {
            sym: Sym::new(cfg),
            k: cfg.k as u32,
            cache: Mutex::new(HashMap::new()),
            solvers: Mutex::new(HashMap::new()),
        })
    }

    pub fn sym(&self) -> &Sym {
        &self.sym
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    fn check(&self, lambda: &KStrict) -> Result<()> {
        if lambda.k() != self.k {
            return Err(Error::RingMismatch(format!("{lambda} used with {} y variables", self.k)));
        }
        Ok(())
    }

    fn theta_product(&self, alpha: &[u32]) -> MPoly {
        alpha.iter().fold(self.sym.one(), |acc, &a| if a == 0 { acc } else { acc.mul(&self.sym.theta(a)) })
    }

    /// Θ_λ = R̃^λ ϑ_λ, the raising operator with threshold 2k+1.
    pub fn theta_polynomial(&self, lambda: &KStrict) -> Result<MPoly> {
        self.check(lambda)?;
        self.sym.raise(lambda.parts(), PairRule::Threshold(2 * self.k + 1), |r| self.sym.theta(r))
    }

    /// Ĥ_λ = 2^{-ℓ_k(λ)} R^λ ϑ_λ.
    pub fn eta_hat(&self, lambda: &KStrict) -> Result<MPoly> {
        self.check(lambda)?;
        let raw = self.sym.raise(lambda.parts(), PairRule::Threshold(2 * self.k), |r| self.sym.theta(r))?;
        Ok(raw.scale(&pow2(-(lambda.ell_k() as i32))))
    }

    /// H̃_λ = 2^{-ℓ_k(λ)} e_k(y) Θ_{λ-k} for λ of positive type.
    pub fn eta_tilde(&self, lambda: &KStrict) -> Result<MPoly> {
        let theta = self.theta_polynomial(&lambda.minus_k()?)?;
        Ok(self.sym.e_y(self.k).mul(&theta).scale(&pow2(-(lambda.ell_k() as i32))))
    }

    /// H_λ = 2^{-ℓ_k(λ)} R^λ ⋆ ϑ_λ.
    pub fn eta_polynomial(&self, lambda: &Typed) -> Result<MPoly> {
        if let Some(p) = self.cache.lock().unwrap().get(lambda) {
            return Ok(p.clone());
        }
        let shape = lambda.shape();
        self.check(shape)?;
        let kk = 2 * self.k;
        let scale = pow2(-(shape.ell_k() as i32));
        let mut acc = self.sym.zero();
        if lambda.ty() == 0 {
            for t in expand(shape.parts(), PairRule::Threshold(kk), None, None)? {
                acc.add_scaled(&self.theta_product(&t.alpha), &(t.coeff * &scale));
            }
        } else {
            let d = shape.ell_k();
            let special = if lambda.ty() == 1 { self.sym.eta(self.k) } else { self.sym.eta_prime() };
            for t in expand(shape.parts(), PairRule::Threshold(kk), Some(d), None)? {
                if t.touched {
                    acc.add_scaled(&self.theta_product(&t.alpha), &(t.coeff * &scale * half()));
                } else {
                    let mut rest = t.alpha;
                    rest.remove(d);
                    acc.add_scaled(&special.mul(&self.theta_product(&rest)), &(t.coeff * &scale));
                }
            }
        }
        self.cache.lock().unwrap().insert(lambda.clone(), acc.clone());
        Ok(acc)
    }

    /// H_λ from the hat and tilde parts: Ĥ, or (Ĥ ± H̃)/2.
    pub fn eta_from_split(&self, lambda: &Typed) -> Result<MPoly> {
        let hat = self.eta_hat(lambda.shape())?;
        Ok(match lambda.ty() {
            0 => hat,
            t => {
                let tilde = self.eta_tilde(lambda.shape())?;
                let sum = if t == 1 { hat.plus(&tilde) } else { hat.minus(&tilde) };
                sum.scale(&half())
            }
        })
    }

    /// The Giambelli polynomial of λ with c_p ↦ ϑ_p, τ_k ↦ η_k, τ′_k ↦ η′_k.
    pub fn eta_from_giambelli(&self, lambda: &Typed) -> Result<MPoly> {
        self.check(lambda.shape())?;
        let g = giambelli_special(lambda)?;
        let mut acc = self.sym.zero();
        for (m, v) in &g.terms {
            let mut prod = self.theta_product(&m.c);
            match m.flag {
                Flag::None => {}
                Flag::Tau => prod = prod.mul(&self.sym.eta(self.k)),
                Flag::TauPrime => prod = prod.mul(&self.sym.eta_prime()),
            }
            acc.add_scaled(&prod, v);
        }
        Ok(acc)
    }

    /// S_λ(x;y) = Π(1 - R_ij) ϑ_λ.
    pub fn s_poly(&self, parts: &[u32]) -> Result<MPoly> {
        self.sym.raise(parts, PairRule::Plain, |r| self.sym.theta(r))
    }

    /// Q_λ(x;y) = Π(1 - R_ij)/(1 + R_ij) ϑ_λ.
    pub fn q_poly(&self, parts: &[u32]) -> Result<MPoly> {
        self.sym.raise(parts, PairRule::AllRatio, |r| self.sym.theta(r))
    }

    pub fn regime(&self, lambda: &KStrict) -> Regime {
        let p = lambda.parts();
        let kk = 2 * self.k as usize;
        let pairs = || (0..p.len()).flat_map(move |i| (i + 1..p.len()).map(move |j| (i, j)));
        let sum = |i: usize, j: usize| (p[i] + p[j]) as usize;
        if pairs().all(|(i, j)| sum(i, j) < kk + j - i) {
            Regime::S
        } else if pairs().all(|(i, j)| sum(i, j) >= kk + j - i) {
            Regime::Q
        } else {
            Regime::Mixed
        }
    }

    /// Recomputes H_λ from the S or Q closed form when one applies.
    pub fn sq_specialization(&self, lambda: &Typed) -> Result<SqReport> {
        let shape = lambda.shape();
        self.check(shape)?;
        let k = self.k;
        let regime = self.regime(shape);
        let ek = self.sym.e_y(k);
        let with_tilde = |main: MPoly, rest: MPoly, s: Q| -> MPoly {
            let t = ek.mul(&rest).scale(&s);
            if lambda.ty() == 1 {
                main.scale(&s).plus(&t)
            } else {
                main.scale(&s).minus(&t)
            }
        };
        let closed = match regime {
            Regime::Mixed => None,
            Regime::S => {
                let s = self.s_poly(shape.parts())?;
                Some(if lambda.ty() > 0 {
                    with_tilde(s, self.s_poly(shape.minus_k()?.parts())?, half())
                } else if shape.part(1) < k {
                    s
                } else {
                    s.scale(&half())
                })
            }
            Regime::Q => {
                let l = shape.len() as i32;
                let q = self.q_poly(shape.parts())?;
                let last = shape.parts().last().copied().unwrap_or(0);
                Some(if lambda.ty() > 0 {
                    with_tilde(q, self.q_poly(shape.minus_k()?.parts())?, pow2(-l))
                } else if shape.is_empty() || last > k {
                    q.scale(&pow2(-l))
                } else {
                    q.scale(&pow2(1 - l))
                })
            }
        };
        let agrees = match &closed {
            Some(c) => Some(*c == self.eta_polynomial(lambda)?),
            None => None,
        };
        Ok(SqReport { regime, closed_form: closed, agrees })
    }

    /// d^λ_{μν} with H_λ = Σ d^λ_{μν} P_μ(x) s_{ν′}(y).
    pub fn d_coefficients(&self, lambda: &Typed) -> Result<DCoefficients> {
        let h = self.eta_polynomial(lambda)?;
        let coeffs = self.sym.expand_p_s(&h)?;
        let (_, lambda2) = lambda.shape().split();
        let nonnegative_integers = coeffs.values().all(|v| rational::is_integer(v) && rational::is_nonneg(v));
        let inside_lambda2 = coeffs.keys().all(|(_, nu)| contains(&lambda2, nu));
        Ok(DCoefficients { coeffs, nonnegative_integers, inside_lambda2 })
    }

    /// Writes a homogeneous-by-degree element in the H_ν basis.
    pub fn expand_in_h_basis(&self, f: &MPoly) -> Result<BTreeMap<Typed, Q>> {
        let mut out = BTreeMap::new();
        for deg in f.degrees() {
            let piece = f.degree_part(deg);
            let mut solvers = self.solvers.lock().unwrap();
            if let std::collections::hash_map::Entry::Vacant(e) = solvers.entry(deg) {
                let basis = typed_of_size(self.k, deg, None, None);
                let mut solver = SpanSolver::new();
                for nu in &basis {
                    if !solver.push(self.eta_polynomial(nu)?.terms) {
                        return Err(Error::Singular(format!("H_{nu} is dependent in degree {deg}")));
                    }
                }
                e.insert((basis, solver));
            }
            let (basis, solver) = &solvers[&deg];
            let combo = solver
                .express(&piece.terms)
                .ok_or_else(|| Error::NotInSpan(format!("degree {deg} piece is not in the eta ring")))?;
            for (i, v) in combo {
                if !v.is_zero() {
                    out.insert(basis[i].clone(), v);
                }
            }
        }
        Ok(out)
    }

    /// The lowest x-degree summand predicted from the shape:
    /// P_{λ¹} s_{(λ²)′}, or P_{λ³} s_{(λ⁴)′} for type 2.
    pub fn lowest_x_prediction(&self, lambda: &Typed) -> Result<MPoly> {
        let shapes = crate::partition::derived_shapes(lambda);
        let (strict, inner) = if lambda.ty() == 2 {
            let missing = || Error::Unsupported("type 2 shape without λ³/λ⁴".into());
            (shapes.lambda3.clone().ok_or_else(missing)?, shapes.lambda4.clone().ok_or_else(missing)?)
        } else {
            (shapes.lambda1.clone(), shapes.lambda2.clone())
        };
        Ok(self.sym.schur_p(&strict)?.mul(&self.sym.schur_y(&inner)?))
    }
}

/// Solves `target = Σ a_i spanning[i]`, requiring the spanning set to be
/// independent so the answer is unique.
fn unique_combination<L: Clone + std::fmt::Display>(
    spanning: &[(L, MPoly)],
    target: &MPoly,
) -> Result<Vec<(L, Q)>> {
    let mut solver = SpanSolver::new();
    for (label, p) in spanning {
        if !solver.push(p.terms.clone()) {
            return Err(Error::Singular(format!("{label} is dependent on earlier terms")));
        }
    }
    let combo = solver
        .express(&target.terms)
        .ok_or_else(|| Error::NotInSpan("target is outside the span".into()))?;
    Ok(combo
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (spanning[i].0.clone(), v))
        .collect())
}

#[derive(Clone)]
struct StrictLabel(Vec<u32>, Vec<u32>);

impl std::fmt::Display for StrictLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "theta_{:?} e_{:?}(y^2)", self.0, self.1)
    }
}

/// Theta-part and e_k(y)-part of an element of the eta ring.
#[derive(Clone, Debug, Default)]
pub struct ThetaSplit {
    pub plain: BTreeMap<KStrict, Q>,
    pub with_ek: BTreeMap<KStrict, Q>,
}

impl Eta {
    /// Writes ϑ_λ as Σ a_{μν} ϑ_μ e_ν(y²) over strict μ and ν with parts at
    /// most k, |μ| + 2|ν| = |λ|. Fails if that family is dependent.
    pub fn strict_expansion(&self, lambda: &KStrict) -> Result<PsExpansion> {
        let k = self.k();
        let total = lambda.size();
        let mut spanning = Vec::new();
        for half_size in 0..=total / 2 {
            for nu in crate::symfunc::partitions_bounded(half_size, k) {
                let e = nu.iter().fold(self.sym.one(), |acc, &r| acc.mul(&self.sym.e_y_squared(r)));
                for mu in crate::symfunc::strict_partitions(total - 2 * half_size) {
                    let theta = self.theta_polynomial(&KStrict::new(mu.clone(), k)?)?;
                    spanning.push((StrictLabel(mu, nu.clone()), theta.mul(&e)));
                }
            }
        }
        let target = self.theta_polynomial(lambda)?;
        Ok(unique_combination(&spanning, &target)?
            .into_iter()
            .map(|(l, v)| ((l.0, l.1), v))
            .collect())
    }

    /// Splits a homogeneous f as Σ a_λ ϑ_λ + e_k(y) Σ b_μ ϑ_μ.
    pub fn theta_split(&self, f: &MPoly) -> Result<ThetaSplit> {
        let k = self.k();
        let ek = self.sym.e_y(k);
        let mut out = ThetaSplit::default();
        for deg in f.degrees() {
            let mut spanning = Vec::new();
            for l in crate::partition::kstrict_of_size(k, deg, None, None) {
                spanning.push(((l.clone(), false), self.theta_polynomial(&l)?));
            }
            if k > 0 && deg >= k {
                for l in crate::partition::kstrict_of_size(k, deg - k, None, None) {
                    spanning.push(((l.clone(), true), ek.mul(&self.theta_polynomial(&l)?)));
                }
            }
            let labelled: Vec<(SplitLabel, MPoly)> =
                spanning.into_iter().map(|((l, e), p)| (SplitLabel(l, e), p)).collect();
            for (SplitLabel(l, e), v) in unique_combination(&labelled, &f.degree_part(deg))? {
                let side = if e { &mut out.with_ek } else { &mut out.plain };
                side.insert(l, v);
            }
        }
        Ok(out)
    }
}

#[derive(Clone)]
struct SplitLabel(KStrict, bool);

impl std::fmt::Display for SplitLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.1 {
            write!(f, "e_k(y) theta_{}", self.0)
        } else {
            write!(f, "theta_{}", self.0)
        }
    }
}

/// True when the product of two eta polynomials, written in the H basis,
/// has only integer coefficients.
pub fn integral(expansion: &BTreeMap<Typed, Q>) -> bool {
    expansion.values().all(rational::is_integer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::typed_of_size;

    fn eta(k: usize, cap: u32) -> Eta {
        Eta::new(VarConfig::power_sum(k, cap)).unwrap()
    }

    fn t(parts: &[u32], k: u32, ty: u8) -> Typed {
        Typed::from_parts(parts.to_vec(), k, ty).unwrap()
    }

    #[test]
    fn strict_expansion_is_integral() {
        for k in 1..=2usize {
            let e = eta(k, 7);
            for size in 0..=6 {
                for l in crate::partition::kstrict_of_size(k as u32, size, None, None) {
                    let exp = e.strict_expansion(&l).unwrap();
                    assert!(exp.values().all(rational::is_integer), "{l}");
                    assert!(exp.keys().all(|(mu, nu)| mu.iter().sum::<u32>() + 2 * nu.iter().sum::<u32>() == size));
                }
            }
        }
    }

    #[test]
    fn eta_ring_splits_over_theta() {
        let e = eta(2, 6);
        for size in 0..=6 {
            for l in typed_of_size(2, size, None, None) {
                let h = e.eta_polynomial(&l).unwrap();
                let split = e.theta_split(&h).unwrap();
                let mut back = e.sym().zero();
                for (mu, v) in &split.plain {
                    back.add_scaled(&e.theta_polynomial(mu).unwrap(), v);
                }
                let ek = e.sym().e_y(2);
                for (mu, v) in &split.with_ek {
                    back.add_scaled(&ek.mul(&e.theta_polynomial(mu).unwrap()), v);
                }
                assert_eq!(back, h, "{l}");
            }
        }
    }

    #[test]
    fn single_rows() {
        let e = eta(2, 6);
        assert_eq!(e.eta_polynomial(&t(&[1], 2, 0)).unwrap(), e.sym().eta(1));
        assert_eq!(e.eta_polynomial(&t(&[2], 2, 1)).unwrap(), e.sym().eta(2));
        assert_eq!(e.eta_polynomial(&t(&[2], 2, 2)).unwrap(), e.sym().eta_prime());
        assert_eq!(e.eta_polynomial(&t(&[4], 2, 0)).unwrap(), e.sym().eta(4));
        assert_eq!(e.theta_polynomial(&KStrict::new(vec![3], 2).unwrap()).unwrap(), e.sym().theta(3));
    }

    #[test]
    fn three_constructions_agree() {
        for k in 1..=2u32 {
            let e = eta(k as usize, 7);
            for size in 0..=7 {
                for l in typed_of_size(k, size, None, None) {
                    let h = e.eta_polynomial(&l).unwrap();
                    assert_eq!(h, e.eta_from_split(&l).unwrap(), "{l}");
                    assert_eq!(h, e.eta_from_giambelli(&l).unwrap(), "{l}");
                }
            }
        }
    }

    #[test]
    fn sq_closed_forms() {
        let e = eta(2, 8);
        let mut seen = [false; 2];
        for size in 1..=7 {
            for l in typed_of_size(2, size, None, None) {
                let r = e.sq_specialization(&l).unwrap();
                match r.regime {
                    Regime::S => seen[0] = true,
                    Regime::Q => seen[1] = true,
                    Regime::Mixed => continue,
                }
                assert_eq!(r.agrees, Some(true), "{l}");
            }
        }
        assert_eq!(seen, [true, true]);
    }

    #[test]
    fn d_coefficients_and_lowest_term() {
        let e = eta(2, 7);
        let l = t(&[3, 2, 2], 2, 2);
        let d = e.d_coefficients(&l).unwrap();
        assert!(d.nonnegative_integers);
        assert!(d.inside_lambda2);
        let h = e.eta_polynomial(&l).unwrap();
        let low = *h.x_degrees().first().unwrap();
        assert_eq!(h.x_degree_part(low), e.lowest_x_prediction(&l).unwrap());
    }

    #[test]
    fn products_are_integral_in_h_basis() {
        let e = eta(1, 6);
        let a = t(&[1], 1, 1);
        let b = t(&[2, 1], 1, 2);
        let prod = e.eta_polynomial(&a).unwrap().mul(&e.eta_polynomial(&b).unwrap());
        let x = e.expand_in_h_basis(&prod).unwrap();
        assert!(integral(&x));
        assert!(!x.is_empty());
    }
}
