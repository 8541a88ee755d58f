use og_schubert::eta::Eta;
use og_schubert::partition::typed_of_size;
use og_schubert::symfunc::VarConfig;
use og_schubert::weyl::{billey_haiman_d, kl_d_coefficients, partition_perm};

#[test]
fn eta_equals_billey_haiman_and_kl_counts() {
    for k in 1..=2u32 {
        let eta = Eta::new(VarConfig::power_sum(k as usize, 6)).unwrap();
        for size in 0..=6 {
            for l in typed_of_size(k, size, None, None) {
                let h = eta.eta_polynomial(&l).unwrap();
                let w = partition_perm(&l).unwrap();
                assert_eq!(h, billey_haiman_d(&w, eta.sym()).unwrap(), "{l}");
                let d = eta.d_coefficients(&l).unwrap();
                assert!(d.nonnegative_integers && d.inside_lambda2, "{l}");
                assert_eq!(d.coeffs, kl_d_coefficients(&l).unwrap(), "{l}");
            }
        }
    }
}
