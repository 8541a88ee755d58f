//! Giambelli polynomials for a typed partition, in each of the three output
//! forms, and a check that evaluating one in the Pieri ring gives back τ_λ.
//!
//! cargo run --example giambelli -- 3,2,2 2

use og_schubert::partition::{GrassParams, Typed};
use og_schubert::raising::{giambelli_c, giambelli_special, giambelli_tilde, tilde_string};
use og_schubert::ring::{Ring, RingSpec};

fn main() -> og_schubert::Result<()> {
    let mut args = std::env::args().skip(1);
    let parts = args.next().unwrap_or_else(|| "3,2,2".into());
    let ty: u8 = args.next().and_then(|t| t.parse().ok()).unwrap_or(2);
    let k = 2;
    let lambda = Typed::from_parts(og_schubert::partition::parse_parts(&parts)?, k, ty)?;

    let special = giambelli_special(&lambda)?;
    println!("tau form:   {}", special.tau_string());
    println!("c form:     {}", giambelli_c(lambda.shape(), 2 * k)?.c_string());
    if lambda.ty() > 0 {
        println!("tilde form: {}", tilde_string(&giambelli_tilde(lambda.shape())?));
    }

    // OG(4,12) holds (3,2,2) for k=2
    let params = GrassParams::even(k, 5)?;
    let ring = Ring::new(RingSpec::classical(params))?;
    let check = ring.verify_giambelli(&lambda)?;
    println!("evaluated in {params}: {} ({})", check.got, if check.ok { "ok" } else { "mismatch" });
    Ok(())
}
