//! Seeded classifier-vs-oracle run. Output depends only on the seed and the
//! sample count.

use polyclass::oracle::{self, OracleConfig};
use polyclass::poly::Quartic;
use polyclass::quartic::{classify_quartic_with, Nature};
use polyclass::reverse::{synthesize, NatureTarget, Strategy};
use polyclass::tolerance::Tolerance;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::SelftestOut;

/// Synthesis targets per nature.
const SYNTH_PER_NATURE: usize = 8;

pub fn run(seed: u64, samples: usize, tol: Tolerance) -> SelftestOut {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = OracleConfig::default();
    let mut out = SelftestOut {
        seed,
        samples,
        agreements: 0,
        fragile: 0,
        robust_disagreements: 0,
        oracle_failures: 0,
        synthesis_round_trips: 0,
        synthesis_failures: 0,
    };
    for _ in 0..samples {
        let c: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
        let q = Quartic::new(c[0], c[1], c[2], c[3]).expect("finite");
        let cls = classify_quartic_with(&q, tol);
        let fragile = cls.is_fragile();
        out.fragile += usize::from(fragile);
        match oracle::solve(&q, &cfg) {
            Ok(roots) if cls.nature.matches(&roots) => out.agreements += 1,
            Ok(_) => out.robust_disagreements += usize::from(!fragile),
            Err(_) => out.oracle_failures += 1,
        }
    }
    for nature in Nature::ALL {
        for _ in 0..SYNTH_PER_NATURE {
            let a = f64::from(rng.gen_range(-256i32..=256)) / 64.0;
            let target = NatureTarget { strategy: Strategy::RandomSeeded(rng.gen()), ..NatureTarget::new(nature, a) };
            match synthesize(&target) {
                Ok(_) => out.synthesis_round_trips += 1,
                Err(_) => out.synthesis_failures += 1,
            }
        }
    }
    out
}

impl SelftestOut {
    pub fn passed(&self) -> bool {
        self.robust_disagreements == 0 && self.oracle_failures == 0 && self.synthesis_failures == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = run(7, 200, Tolerance::default());
        assert_eq!(a, run(7, 200, Tolerance::default()));
        assert!(a.passed(), "{a:?}");
        assert_eq!(a.synthesis_round_trips, Nature::ALL.len() * SYNTH_PER_NATURE);
    }
}
