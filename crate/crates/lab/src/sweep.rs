use ewd_core::Budget;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::checks::check_instance;
use crate::gen;
use crate::report::{CheckReport, SweepReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`; known suites: {list}", list = gen::SUITES.join(", "))]
pub struct UnknownSuite(pub String);

/// The generator for instance `index` of a sweep: stream `index` of the seed.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// All reports of a sweep, in instance order. The result does not depend on
/// the thread count.
pub fn sweep_reports(suite: &str, count: u64, seed: u64, budget: &Budget) -> Result<Vec<CheckReport>, UnknownSuite> {
    if !gen::SUITES.contains(&suite) {
        return Err(UnknownSuite(suite.to_string()));
    }
    let per_instance: Vec<Vec<CheckReport>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let inst = gen::instance(suite, &mut instance_rng(seed, i)).expect("known suite");
            let mut reports = check_instance(&inst, budget);
            for r in &mut reports {
                r.seed = Some(seed);
                r.index = Some(i);
            }
            reports
        })
        .collect();
    Ok(per_instance.into_iter().flatten().collect())
}

/// Runs `count` seeded random instances of `suite` and aggregates them.
pub fn sweep(suite: &str, count: u64, seed: u64, budget: &Budget) -> Result<SweepReport, UnknownSuite> {
    let reports = sweep_reports(suite, count, seed, budget)?;
    Ok(SweepReport::from_reports(suite, count, seed, *budget, &reports))
}

/// Regenerates instance `index` of a sweep.
pub fn replay(suite: &str, seed: u64, index: u64) -> Result<crate::Instance, UnknownSuite> {
    gen::instance(suite, &mut instance_rng(seed, index)).ok_or_else(|| UnknownSuite(suite.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(sweep("bogus", 1, 0, &Budget::default()).unwrap_err(), UnknownSuite("bogus".into()));
    }

    #[test]
    fn deterministic() {
        let b = Budget::default();
        let a = sweep_reports("stepdown", 50, 9, &b).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = pool.install(|| sweep_reports("stepdown", 50, 9, &b).unwrap());
        assert_eq!(a, c);
        assert_eq!(replay("stepdown", 9, 17).unwrap(), a[17].instance);
    }
}
