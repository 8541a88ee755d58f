//! Classical Pieri products c_p · τ_λ in all three modes, and a full
//! multiplication table for a small even orthogonal Grassmannian.

use og_schubert::partition::{GrassParams, Typed};
use og_schubert::pieri::{chern_pieri, Mode, PieriTerm};
use og_schubert::ring::{QDeg, Ring, RingSpec, SchubertExpr};

fn show(terms: &[PieriTerm]) -> String {
    let parts: Vec<String> = terms
        .iter()
        .map(|t| {
            let sign = if t.sign < 0 { "-" } else { "" };
            format!("{sign}2^{}*{:?}{:?}", t.pow2, t.class, t.mu)
        })
        .collect();
    parts.join(" + ")
}

fn main() -> og_schubert::Result<()> {
    let k = 1;
    let lambda = Typed::from_parts(vec![2, 1], k, 1)?;
    for p in 1..=3 {
        println!("c_{p} * {lambda}");
        for mode in [Mode::Hat, Mode::Typed, Mode::Tilde] {
            println!("  {mode:?}: {}", show(&chern_pieri(&lambda, p, 2 * k, mode)));
        }
    }

    let params = GrassParams::even(1, 2)?;
    let ring = Ring::new(RingSpec::classical(params))?;
    let basis = ring.basis()?;
    println!("\nH*({params}) has {} Schubert classes", basis.len());
    let zero: QDeg = [0, 0];
    for a in basis.iter().filter(|a| a.size() > 0) {
        for b in basis.iter().filter(|b| *b >= a && a.size() + b.size() <= 4) {
            let x = SchubertExpr::basis(ring.spec(), a.clone(), zero)?;
            let y = SchubertExpr::basis(ring.spec(), b.clone(), zero)?;
            let prod = ring.multiply(&x, &y)?;
            if !prod.is_zero() {
                println!("  {a} * {b} = {prod}");
            }
        }
    }
    Ok(())
}
