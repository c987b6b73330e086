//! Instance generation, the property suite and counterexample search.
//!
//! Every random choice flows from a 64-bit master seed. Instance `i` of a
//! run draws from its own generator seeded by `splitmix(master, i)`, so
//! results do not depend on evaluation order.

mod generate;
mod property;
mod run;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AxiomMode, FiniteField};

pub use generate::{
    arbitrary_bfs, chain_bfs, constructive_family, example46, generate_bfshvs, generate_hvs, repair, subhyperspace_bfs,
    BfssStream, GenerationStats, HvsStream, RANDOM_CARRIER_LIMIT,
};
pub use property::{evaluate, Instance, Outcome, PropertyId};
pub use run::{
    minimize, reverify, run_in_pool, run_property, run_suite, search_counterexamples, Counterexample, Pool,
    PoolSummary, PropertyResult, SuiteConfig, SuiteReport, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FieldChoice {
    Z2,
    Z3,
}

impl FieldChoice {
    pub fn order(self) -> usize {
        match self {
            FieldChoice::Z2 => 2,
            FieldChoice::Z3 => 3,
        }
    }

    pub fn field(self) -> FiniteField {
        FiniteField::prime(self.order()).expect("2 and 3 are prime")
    }
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "z2" | "2" => Ok(FieldChoice::Z2),
            "z3" | "3" => Ok(FieldChoice::Z3),
            _ => Err(format!("unknown field `{s}` (expected z2 or z3)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// The ℤ₄ over ℤ₂ example tables.
    Fixture,
    /// `a∘x = V`.
    Total,
    /// `a∘x = {a·x}` on `ℤₚᵏ`.
    Classical,
    /// `a∘x = a·x + W` for a coordinate subspace `W`.
    Inflated,
    /// Random tables kept only when every axiom holds.
    FilteredRandom,
}

impl Strategy {
    pub const ALL: [Strategy; 5] =
        [Strategy::Fixture, Strategy::Total, Strategy::Classical, Strategy::Inflated, Strategy::FilteredRandom];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Fixture => "fixture",
            Strategy::Total => "total",
            Strategy::Classical => "classical",
            Strategy::Inflated => "inflated",
            Strategy::FilteredRandom => "filtered-random",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Strategy::ALL.into_iter().find(|st| st.name() == s).ok_or_else(|| format!("unknown strategy `{s}`"))
    }
}

/// What to generate. Identical specs yield identical streams.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InstanceSpec {
    pub max_carrier: usize,
    pub field: FieldChoice,
    pub strategy: Strategy,
    pub mode: AxiomMode,
    pub seed: u64,
}

impl Default for InstanceSpec {
    fn default() -> Self {
        InstanceSpec {
            max_carrier: 9,
            field: FieldChoice::Z2,
            strategy: Strategy::Classical,
            mode: AxiomMode::STRICT,
            seed: 0,
        }
    }
}

/// SplitMix64 finalizer over `seed + (index + 1)·γ`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, index))
}
