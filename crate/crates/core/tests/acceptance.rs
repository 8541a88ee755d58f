//! Acceptance criteria, one PASS/FAIL line each. Bounds and time budgets are
//! fixed here; the sweeps themselves live in `og_schubert::verify`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use og_schubert::verify::{Options, Suite};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: Suite,
    opts: Options,
    budget: Option<Duration>,
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn criteria() -> Vec<Criterion> {
    let sized = |max: u32| Options { max_size: Some(max), ..Options::default() };
    vec![
        Criterion {
            id: 1,
            title: "worked Giambelli example for (3,2,2) type 2 in OG(4,12)",
            suite: Suite::WorkedGiambelli,
            opts: Options::default(),
            budget: secs(1),
        },
        Criterion {
            id: 2,
            title: "w_λ for (7,4,3,2) type 2, k=3, and back",
            suite: Suite::Bijection,
            opts: Options::default(),
            budget: secs(1),
        },
        Criterion {
            id: 3,
            title: "single KL tableau of (6,5,2) with m=0 and E_w = P_(6,5,2)",
            suite: Suite::KlExample,
            opts: Options::default(),
            budget: secs(10),
        },
        Criterion {
            id: 4,
            title: "Giambelli folded through Pieri, k<=2, n<=4",
            suite: Suite::GiambelliPieri,
            opts: Options { n: None, ..Options::default() },
            budget: secs(60),
        },
        Criterion {
            id: 5,
            title: "eta products equal stable structure constants, |λ|+|μ|<=8",
            suite: Suite::EtaRing,
            opts: sized(8),
            budget: secs(120),
        },
        Criterion {
            id: 6,
            title: "d-coefficients equal weighted KL counts, |λ|<=6",
            suite: Suite::DCoefficients,
            opts: sized(6),
            budget: secs(120),
        },
        Criterion {
            id: 7,
            title: "H_λ equals the Billey-Haiman polynomial of w_λ, |λ|<=6",
            suite: Suite::BilleyHaiman,
            opts: sized(6),
            budget: secs(120),
        },
        Criterion {
            id: 8,
            title: "quantum Giambelli, special products, associativity (100 triples)",
            suite: Suite::QuantumGiambelli,
            opts: Options { samples: Some(100), seed: Some(20_260_101), ..Options::default() },
            budget: secs(300),
        },
        Criterion {
            id: 9,
            title: "odd-to-even transfer commutes with c_p, classical and quantum",
            suite: Suite::Transfer,
            opts: Options::default(),
            budget: secs(60),
        },
        Criterion {
            id: 10,
            title: "index-set order laws for N in {6,8,10}",
            suite: Suite::OrderLaws,
            opts: Options::default(),
            budget: secs(60),
        },
        Criterion {
            id: 11,
            title: "Giambelli polynomials use only c_p with p <= 2n+2k-1",
            suite: Suite::DegreeBound,
            opts: Options::default(),
            budget: None,
        },
        Criterion {
            id: 12,
            title: "theta and eta generator identities, degcap 16, k<=3",
            suite: Suite::GeneratorIdentities,
            opts: sized(8),
            budget: secs(60),
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    let list = criteria();
    for c in &list {
        let start = Instant::now();
        let result = c.suite.run(&c.opts);
        let elapsed = start.elapsed();
        let in_time = c.budget.is_none_or(|b| elapsed <= b);
        let budget = c.budget.map_or("none".to_string(), |b| format!("{}s", b.as_secs()));
        let (ok, detail) = match &result {
            Ok(r) => (r.passed() && in_time, format!("{} checks, {} failures", r.checks, r.failed)),
            Err(e) => (false, format!("error: {e}")),
        };
        let status = if ok { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2} [{}] {} ({detail}; {:.2}s, budget {budget})",
            c.id,
            c.suite,
            c.title,
            elapsed.as_secs_f64()
        );
        if let Ok(r) = &result {
            for f in r.failures.iter().take(5) {
                println!("    {f}");
            }
        }
        if !in_time {
            println!("    over the time budget");
        }
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", list.len() - failed, list.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
