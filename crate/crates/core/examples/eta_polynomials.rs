//! Eta polynomials in the power-sum model: the generators, a few H_λ, their
//! d-coefficients and a product expanded back into the H basis.

use og_schubert::eta::{integral, Eta};
use og_schubert::partition::{KStrict, Typed};
use og_schubert::rational::to_string;
use og_schubert::symfunc::VarConfig;

fn main() -> og_schubert::Result<()> {
    let k = 1;
    let eta = Eta::new(VarConfig::power_sum(k, 6))?;
    for r in 1..=3 {
        println!("eta_{r} = {}", eta.sym().eta(r));
    }
    println!("eta'_1 = {}", eta.sym().eta_prime());

    for (parts, ty) in [(vec![2, 1], 1), (vec![2, 1], 2), (vec![3, 2], 0)] {
        let l = Typed::from_parts(parts, k as u32, ty)?;
        let d = eta.d_coefficients(&l)?;
        println!("\nH_{l} = {}", eta.eta_polynomial(&l)?);
        println!("  regime {:?}", eta.regime(l.shape()));
        for ((mu, nu), c) in &d.coeffs {
            println!("  d[{mu:?}; {nu:?}] = {}", to_string(c));
        }
    }

    let a = eta.eta_hat(&KStrict::new(vec![1], 1)?)?;
    let b = eta.eta_hat(&KStrict::new(vec![2], 1)?)?;
    let expansion = eta.expand_in_h_basis(&a.mul(&b))?;
    let terms: Vec<String> = expansion.iter().map(|(l, c)| format!("{} H_{l}", to_string(c))).collect();
    println!("\nH^_1 * H^_2 = {}  (integral: {})", terms.join(" + "), integral(&expansion));
    Ok(())
}
