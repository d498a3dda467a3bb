//! `tracedet verify`: randomized identity suites at desk scale.
//!
//! Every trial is a pure function of its seed; a failure reports the seed,
//! and `tracedet verify --seed S` replays it as the first trial of each
//! identity.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tracedet_core::oracle::{
    aut_count, emb_as_hom_expansion, emb_count, evaluate_hom_combination, gauss_det, leibniz_det,
    partial_det, partial_det_via_covers, sub_count, verify_det_blowup, verify_hom_blowup,
    DirectedMultigraph, HomCombination,
};
use tracedet_core::{
    build_det_circuit, det_from_traces_dp, det_from_traces_partition_sum, enumerate_partitions,
    power_traces_sequential, power_traces_squaring, Field, Matrix, Partition, PrimeField,
    Rationals, Result, TraceVector,
};

use crate::{CliError, CliResult, RunConfig};

pub const DEFAULT_TRIALS: u64 = 20;

type Check = Box<dyn Fn(u64) -> Result<bool> + Sync>;

pub struct Identity {
    pub name: &'static str,
    pub trials: u64,
    pub check: Check,
}

impl Identity {
    pub fn new(
        name: &'static str,
        trials: u64,
        check: impl Fn(u64) -> Result<bool> + Sync + 'static,
    ) -> Self {
        Identity {
            name,
            trials,
            check: Box::new(check),
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gf101() -> PrimeField {
    PrimeField::new(101).expect("101 is prime")
}

fn formula_vs_leibniz<F: Field>(field: F, seed: u64) -> Result<bool> {
    let a = Matrix::random(field, (seed % 8) as usize, &mut rng(seed));
    Ok(det_from_traces_partition_sum(&power_traces_sequential(&a))? == leibniz_det(&a)?)
}

fn dp_vs_partition_sum<F: Field>(field: F, seed: u64) -> Result<bool> {
    let mut r = rng(seed);
    let n = (seed % 13) as usize;
    let traces = TraceVector::new(
        field.clone(),
        (0..n).map(|_| field.sample(&mut r)).collect(),
    );
    Ok(det_from_traces_dp(&traces)? == det_from_traces_partition_sum(&traces)?)
}

fn cycle_patterns(max_k: usize) -> Vec<(Partition, DirectedMultigraph)> {
    (1..=max_k)
        .flat_map(enumerate_partitions)
        .map(|l| {
            let h = DirectedMultigraph::cycle_union(&l);
            (l, h)
        })
        .collect()
}

/// The full suite.
pub fn identities() -> Vec<Identity> {
    let t = DEFAULT_TRIALS;
    let expansions: Vec<(DirectedMultigraph, HomCombination<i64>)> = cycle_patterns(4)
        .into_iter()
        .map(|(_, h)| {
            let e = emb_as_hom_expansion(&h).expect("patterns are below the cap");
            (h, e)
        })
        .collect();
    vec![
        Identity::new("formula-vs-leibniz/rational", t, |s| {
            formula_vs_leibniz(Rationals, s)
        }),
        Identity::new("formula-vs-leibniz/mod:101", t, |s| {
            formula_vs_leibniz(gf101(), s)
        }),
        Identity::new("dp-vs-partition-sum/rational", t, |s| {
            dp_vs_partition_sum(Rationals, s)
        }),
        Identity::new("dp-vs-partition-sum/mod:101", t, |s| {
            dp_vs_partition_sum(gf101(), s)
        }),
        Identity::new("trace-schedules", t, |s| {
            let a = Matrix::random(gf101(), (s % 17) as usize, &mut rng(s));
            Ok(power_traces_sequential(&a) == power_traces_squaring(&a))
        }),
        Identity::new("gauss-vs-leibniz", t, |s| {
            let a = Matrix::random(Rationals, (s % 8) as usize, &mut rng(s));
            Ok(gauss_det(&a) == leibniz_det(&a)?)
        }),
        Identity::new("partial-det-vs-cycle-covers", t, |s| {
            let a = Matrix::random(Rationals, (s % 6) as usize, &mut rng(s));
            for k in 0..=a.n() {
                if partial_det(&a, k)? != partial_det_via_covers(&a, k)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Identity::new("sub-times-aut-equals-emb", t, |s| {
            let a = Matrix::random(Rationals, 1 + (s % 5) as usize, &mut rng(s));
            for (lambda, h) in cycle_patterns(4) {
                let aut = Rationals.from_integer(&BigInt::from(aut_count(&lambda)));
                if Rationals.mul(&sub_count(&lambda, &a)?, &aut) != emb_count(&h, &a)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Identity::new("aut-formula-vs-enumeration", 1, |_| {
            for (lambda, h) in cycle_patterns(7) {
                if aut_count(&lambda) != h.automorphism_count()?.into() {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Identity::new("emb-as-hom-expansion", t, move |s| {
            let a = Matrix::random(Rationals, 1 + (s % 5) as usize, &mut rng(s));
            for (h, expansion) in &expansions {
                if evaluate_hom_combination(expansion, &a)? != emb_count(h, &a)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Identity::new("hom-blowup", t, |s| {
            let a = Matrix::random(Rationals, 1 + (s % 4) as usize, &mut rng(s));
            let mut patterns: Vec<_> = (1..=4).map(DirectedMultigraph::cycle).collect();
            patterns.push(DirectedMultigraph::cycle_union(&Partition::from_parts(&[
                1, 1,
            ])?));
            for f in &patterns {
                for t in 1..=3 {
                    if !verify_hom_blowup(f, &a, t)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        Identity::new("det-blowup", t, |s| {
            let mut r = rng(s);
            let n = 1 + (s % 3) as usize;
            let q = Matrix::random(Rationals, n, &mut r);
            let p = Matrix::random(gf101(), n, &mut r);
            for t in 1..=2 {
                if !verify_det_blowup(&q, t)? || !verify_det_blowup(&p, t)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Identity::new("circuit-vs-gauss", t, |s| {
            let a = Matrix::random(gf101(), 1 + (s % 10) as usize, &mut rng(s));
            Ok(build_det_circuit(a.n()).evaluate(&a)? == gauss_det(&a))
        }),
    ]
}

/// Runs each identity for its trials with seeds `seed, seed + 1, …` and
/// reports `name: passed/trials` per identity. Stops at the first failure.
pub fn run_suite(ids: &[Identity], seed: u64, report: &mut dyn FnMut(String)) -> CliResult<()> {
    for id in ids {
        let mut passed = 0;
        for trial in 0..id.trials {
            let s = seed.wrapping_add(trial);
            let failure = match (id.check)(s) {
                Ok(true) => None,
                Ok(false) => Some(String::new()),
                Err(e) => Some(format!(": {e}")),
            };
            if let Some(detail) = failure {
                report(format!(
                    "{}: FAIL at seed {s}{detail} ({passed}/{} passed)",
                    id.name, id.trials
                ));
                return Err(CliError::IdentityFailed {
                    identity: id.name.to_string(),
                    seed: s,
                });
            }
            passed += 1;
        }
        report(format!("{}: {passed}/{} passed", id.name, id.trials));
    }
    Ok(())
}

/// Prints progress as it goes; returns the closing summary line.
pub fn cmd_verify(config: &RunConfig) -> CliResult<String> {
    let ids = identities();
    run_suite(&ids, config.seed, &mut |line| println!("{line}"))?;
    Ok(format!("all {} identities passed\n", ids.len()))
}
