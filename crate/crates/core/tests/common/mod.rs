#![allow(dead_code)]

use std::collections::BTreeSet;

use monocone::cone::{is_extremal_apex, is_extremal_inner, GeneratorSet, NewExtremalsTrace};
use monocone::pareto::{GeneratorState, SolveObserver};
use monocone::scalarization::{ExplicitSetOracle, Knapsack01Oracle};
use monocone::tropical::{int, outcome, ExtendedScalar, Outcome, Rational, TropicalPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn p(s: &str) -> TropicalPoint {
    s.parse().unwrap()
}

pub fn points(list: &[&str]) -> BTreeSet<TropicalPoint> {
    list.iter().map(|s| p(s)).collect()
}

pub fn ext(v: &[Option<i64>]) -> Vec<ExtendedScalar> {
    v.iter()
        .map(|x| x.map_or(ExtendedScalar::PlusInf, ExtendedScalar::from_int))
        .collect()
}

pub const INF: Option<i64> = None;

fn rows(m: &[&[i64]]) -> Vec<Vec<Rational>> {
    m.iter().map(|r| outcome(r)).collect()
}

/// Three objectives, four items, three knapsack constraints, outcomes shifted by `4·𝟏`.
pub fn three_objective_knapsack(translate: bool) -> Knapsack01Oracle {
    let objectives = rows(&[&[-1, -4, -3, -1], &[-4, -1, -2, -2], &[-4, -1, -2, -3]]);
    let weights = rows(&[&[2, 1, 1, 1], &[0, 3, 1, 0], &[0, 1, 1, 2]]);
    let capacity = outcome(&[2, 3, 2]);
    let shift = outcome(&[4, 4, 4]);
    Knapsack01Oracle::new(&objectives, &weights, &capacity, translate.then_some(shift.as_slice())).unwrap()
}

pub fn knapsack_nondominated() -> BTreeSet<Outcome> {
    BTreeSet::from([outcome(&[3, 0, 0]), outcome(&[0, 3, 3]), outcome(&[1, 2, 2])])
}

pub fn knapsack_apices() -> BTreeSet<Vec<ExtendedScalar>> {
    [
        [INF, Some(0), INF],
        [INF, INF, Some(0)],
        [Some(0), INF, INF],
        [Some(1), Some(3), INF],
        [Some(1), INF, Some(3)],
        [Some(3), Some(2), INF],
        [Some(3), INF, Some(2)],
    ]
    .iter()
    .map(|v| ext(v))
    .collect()
}

pub fn two_objective_cloud() -> ExplicitSetOracle {
    ExplicitSetOracle::from_ints(2, &[&[0, 0], &[1, 1], &[-3, 2], &[2, 2], &[-2, 3], &[-1, 4]]).unwrap()
}

/// A seed-fixed random integer cloud.
pub fn random_cloud(seed: u64, dim: usize, max_points: usize, lo: i64, hi: i64) -> Vec<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = rng.gen_range(0..=max_points);
    (0..size)
        .map(|_| (0..dim).map(|_| int(rng.gen_range(lo..=hi))).collect())
        .collect()
}

/// Compares both extremality tests on every candidate of every update.
#[derive(Default)]
pub struct ExtremalityAudit {
    pub candidates: usize,
    pub disagreements: Vec<String>,
}

impl ExtremalityAudit {
    pub fn check(&mut self, generators: &GeneratorSet, h: &TropicalPoint, trace: &NewExtremalsTrace) {
        let mut extended = generators.clone();
        extended.insert(h.clone()).unwrap();
        let pool: Vec<&TropicalPoint> = trace.kept.iter().chain(&trace.candidates).collect();
        for cand in &trace.candidates {
            self.candidates += 1;
            let exterior = is_extremal_apex(cand, &extended).unwrap();
            let interior = is_extremal_inner(cand, pool.iter().copied());
            if exterior != interior {
                self.disagreements.push(format!("{cand}: exterior {exterior}, interior {interior}"));
            }
        }
    }
}

impl SolveObserver for ExtremalityAudit {
    fn on_new_extremals(&mut self, generators: &GeneratorSet, h: &TropicalPoint, trace: &NewExtremalsTrace) {
        self.check(generators, h, trace);
    }
}

/// Records the state after every iteration.
#[derive(Default)]
pub struct StateLog {
    pub states: Vec<GeneratorState>,
}

impl SolveObserver for StateLog {
    fn on_iteration(&mut self, state: &GeneratorState) {
        self.states.push(state.clone());
    }
}
