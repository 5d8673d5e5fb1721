//! The main enumeration loop.
//!
//! The state holds the nondominated points found so far (`G`), the extremal
//! generators of the complementary cone `C(G)` (`A`), and the apices already
//! certified final (`Ω`). Each iteration picks a pending apex `a ∈ A∖Ω` and asks
//! the oracle for a nondominated point strictly below it. A hit grows `G` and
//! updates `A` with [`new_extremals`]; a miss moves `a` into `Ω`. The loop stops
//! when `A = Ω`, after exactly `n + m` oracle calls.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::upper_bound;
use crate::cone::{new_extremals_traced, ApexSet, GeneratorSet, NewExtremalsTrace};
use crate::error::{Error, Result};
use crate::scalarization::{next_nondominated, ProblemOracle};
use crate::tropical::{embed_outcome, ExtendedScalar, Outcome, TropicalPoint};

/// Order in which pending apices are processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QueueDiscipline {
    #[default]
    Fifo,
    Lifo,
    Random(u64),
}

impl FromStr for QueueDiscipline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fifo" => Ok(QueueDiscipline::Fifo),
            "lifo" => Ok(QueueDiscipline::Lifo),
            other => other
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(QueueDiscipline::Random)
                .ok_or_else(|| Error::Parse(format!("unknown queue discipline {other:?}"))),
        }
    }
}

impl fmt::Display for QueueDiscipline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueueDiscipline::Fifo => f.write_str("fifo"),
            QueueDiscipline::Lifo => f.write_str("lifo"),
            QueueDiscipline::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub queue: QueueDiscipline,
    /// Maximum number of oracle calls; `None` picks the default cap.
    pub max_iter: Option<u64>,
}

/// Hooks into the main loop, used by tests to check per-iteration invariants.
pub trait SolveObserver {
    fn on_new_extremals(&mut self, _generators: &GeneratorSet, _h: &TropicalPoint, _trace: &NewExtremalsTrace) {}
    fn on_iteration(&mut self, _state: &GeneratorState) {}
}

impl SolveObserver for () {}

/// The loop state `(G, A, Ω)` plus the queue of apices in `A∖Ω`.
#[derive(Debug, Clone)]
pub struct GeneratorState {
    generators: GeneratorSet,
    apices: ApexSet,
    confirmed: BTreeSet<TropicalPoint>,
    pending: VecDeque<TropicalPoint>,
}

impl GeneratorState {
    pub fn new(dim: usize) -> Self {
        let apices = ApexSet::initial(dim);
        let confirmed: BTreeSet<_> = (1..=dim).map(|i| TropicalPoint::unit(dim, i)).collect();
        let pending = apices.iter().filter(|a| !confirmed.contains(*a)).cloned().collect();
        GeneratorState {
            generators: GeneratorSet::new(dim),
            apices,
            confirmed,
            pending,
        }
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn apices(&self) -> &ApexSet {
        &self.apices
    }

    /// `Ω`, including the trivial generators.
    pub fn confirmed(&self) -> &BTreeSet<TropicalPoint> {
        &self.confirmed
    }

    pub fn pending(&self) -> impl Iterator<Item = &TropicalPoint> {
        self.pending.iter()
    }

    fn pop(&mut self, queue: QueueDiscipline, rng: &mut ChaCha8Rng) -> Option<TropicalPoint> {
        match queue {
            QueueDiscipline::Fifo => self.pending.pop_front(),
            QueueDiscipline::Lifo => self.pending.pop_back(),
            QueueDiscipline::Random(_) if self.pending.is_empty() => None,
            QueueDiscipline::Random(_) => {
                let k = rng.gen_range(0..self.pending.len());
                self.pending.remove(k)
            }
        }
    }

    fn replace_apices(&mut self, next: ApexSet, picked: &TropicalPoint) {
        self.pending.retain(|a| next.contains(a));
        let fresh: Vec<TropicalPoint> = next
            .iter()
            .filter(|a| !self.apices.contains(a) || *a == picked)
            .filter(|a| !self.confirmed.contains(*a))
            .cloned()
            .collect();
        self.pending.extend(fresh);
        self.apices = next;
    }
}

/// Counters of a finished run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStats {
    pub dim: usize,
    pub scalarization_calls: u64,
    /// Number of nondominated points.
    pub n: usize,
    /// Number of nontrivial final apices (`e^{(0)}` included when nothing was found).
    pub m: usize,
    /// `U(n + d, d)`.
    pub upper_bound: u64,
    pub wall_time: Duration,
}

/// Result of [`solve`].
#[derive(Debug, Clone)]
pub struct Solution {
    pub nondominated: BTreeSet<Outcome>,
    /// Nontrivial final apices without their 0th coordinate.
    pub local_upper_bounds: BTreeSet<Vec<ExtendedScalar>>,
    pub stats: RunStats,
}

/// Default iteration cap: `10·U(|Z| + d, d)` for materialized outcome sets,
/// `10^6` otherwise.
pub fn default_iteration_cap<O: ProblemOracle + ?Sized>(oracle: &O) -> u64 {
    let d = oracle.dim() as u64;
    match oracle.outcomes() {
        Some(z) => {
            let bound = upper_bound(z.len() as u64 + d, d);
            u64::try_from(bound).unwrap_or(u64::MAX / 10).max(1).saturating_mul(10)
        }
        None => 1_000_000,
    }
}

pub fn solve<O: ProblemOracle + ?Sized>(oracle: &O) -> Result<Solution> {
    solve_with(oracle, &SolveOptions::default(), &mut ())
}

/// Runs the enumeration loop until every apex is certified final.
pub fn solve_with<O: ProblemOracle + ?Sized>(
    oracle: &O,
    options: &SolveOptions,
    observer: &mut dyn SolveObserver,
) -> Result<Solution> {
    let start = Instant::now();
    let dim = oracle.dim();
    let cap = options.max_iter.unwrap_or_else(|| default_iteration_cap(oracle));
    let seed = match options.queue {
        QueueDiscipline::Random(seed) => seed,
        _ => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = GeneratorState::new(dim);
    let mut calls = 0u64;

    while let Some(a) = state.pop(options.queue, &mut rng) {
        if calls >= cap {
            return Err(Error::IterationCap { cap });
        }
        calls += 1;
        match next_nondominated(oracle, &a)? {
            Some(g) => {
                let h = embed_outcome(&g)?;
                let (next, trace) = new_extremals_traced(&state.generators, &state.apices, &h)?;
                observer.on_new_extremals(&state.generators, &h, &trace);
                state.replace_apices(next, &a);
                state.generators.insert(h)?;
            }
            None => {
                state.confirmed.insert(a);
            }
        }
        observer.on_iteration(&state);
    }

    let nondominated: BTreeSet<Outcome> = state
        .generators
        .iter()
        .map(|g| g.finite_tail().expect("generators found by the oracle are finite"))
        .collect();
    let local_upper_bounds = state.apices.local_upper_bounds();
    let n = nondominated.len();
    let m = local_upper_bounds.len();
    let bound = upper_bound((n + dim) as u64, dim as u64);
    let stats = RunStats {
        dim,
        scalarization_calls: calls,
        n,
        m,
        upper_bound: u64::try_from(bound).unwrap_or(u64::MAX),
        wall_time: start.elapsed(),
    };
    Ok(Solution {
        nondominated,
        local_upper_bounds,
        stats,
    })
}

/// Summary of a run for humans and for structured output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub scalarizations: u64,
    pub upper_bound_u: u64,
    pub calls_match: bool,
    pub wall_time_ms: f64,
}

pub fn run_report(stats: &RunStats) -> RunReport {
    RunReport {
        n: stats.n,
        m: stats.m,
        scalarizations: stats.scalarization_calls,
        upper_bound_u: stats.upper_bound,
        calls_match: stats.scalarization_calls == (stats.n + stats.m) as u64,
        wall_time_ms: stats.wall_time.as_secs_f64() * 1e3,
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nondominated points (n): {}", self.n)?;
        writeln!(f, "nontrivial apices (m):   {}", self.m)?;
        writeln!(
            f,
            "scalarizations:          {} ({})",
            self.scalarizations,
            if self.calls_match { "= n + m" } else { "!= n + m" }
        )?;
        writeln!(f, "U(n+d, d):               {}", self.upper_bound_u)?;
        write!(f, "wall time:               {:.3} ms", self.wall_time_ms)
    }
}
