//! Quantum Pieri products and quantum multiplication in QH(OG(n+1-k, 2n+2)).
//!
//! cargo run --example quantum_ring -- 2 3

use og_schubert::partition::GrassParams;
use og_schubert::pieri::{k2_quantum_pieri, quantum_chern_pieri, Mode};
use og_schubert::ring::{verify_quantum_giambelli, Ring, RingSpec, SchubertExpr};

fn main() -> og_schubert::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>());
    let k = args.next().and_then(|r| r.ok()).unwrap_or(2);
    let n = args.next().and_then(|r| r.ok()).unwrap_or(3);
    let params = GrassParams::even(k, n)?;
    let spec = RingSpec::quantum(params)?;
    let ring = Ring::new(spec)?;
    println!("{params}: deg q = {}, two quantum parameters: {}", spec.q_weight(), spec.two_q());

    // c_p times the point class picks up q terms
    let basis = ring.basis()?;
    let top = basis.iter().max_by_key(|l| l.size()).unwrap().shape().clone();
    for p in 1..=2 {
        let terms = if 2 * k == 2 {
            k2_quantum_pieri(&top, p, n, Mode::Hat)?
        } else {
            quantum_chern_pieri(&top, p, &params, Mode::Hat)?
        };
        println!("c_{p} * [Y_{top}] has {} terms, {} with q", terms.len(), terms.iter().filter(|t| t.q != [0, 0]).count());
    }

    let a = SchubertExpr::basis(spec, basis[1].clone(), [0, 0])?;
    let b = SchubertExpr::basis(spec, basis.last().unwrap().clone(), [0, 0])?;
    println!("{} * {} = {}", basis[1], basis.last().unwrap(), ring.multiply(&a, &b)?);

    let checks = verify_quantum_giambelli(&params)?;
    let ok = checks.iter().filter(|c| c.ok).count();
    println!("quantum Giambelli holds for {ok} of {} classes", checks.len());
    Ok(())
}
