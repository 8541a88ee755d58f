//! Signed permutations attached to typed k-strict partitions: reduced words,
//! Kraśkiewicz-Lam tableaux and the Billey-Haiman comparison.
//!
//! cargo run --example weyl_group -- 3,1 1

use og_schubert::eta::Eta;
use og_schubert::partition::{parse_parts, Typed};
use og_schubert::symfunc::VarConfig;
use og_schubert::weyl::{billey_haiman_d, kl_tableaux, partition_perm, perm_partition, reduced_word};

fn main() -> og_schubert::Result<()> {
    let mut args = std::env::args().skip(1);
    let parts = parse_parts(&args.next().unwrap_or_else(|| "3,1".into()))?;
    let k: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let lambda = Typed::default_type(og_schubert::partition::KStrict::new(parts, k)?);

    let w = partition_perm(&lambda)?;
    println!("w_{lambda} = {w}, length {}", w.length());
    println!("reduced word {:?}", reduced_word(&w));
    println!("back to {}", perm_partition(&w, k)?);

    let tableaux = kl_tableaux(&w, None)?;
    println!("{} KL tableaux", tableaux.len());
    for t in tableaux.iter().take(5) {
        println!("  shape {:?}, rows {:?}, m = {}", t.shape(), t.rows, t.m);
    }

    let eta = Eta::new(VarConfig::power_sum(k as usize, lambda.size()))?;
    let same = eta.eta_polynomial(&lambda)? == billey_haiman_d(&w, eta.sym())?;
    println!("H_lambda equals the type D Billey-Haiman polynomial: {same}");
    Ok(())
}
