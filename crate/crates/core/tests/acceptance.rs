//! Exit criteria. Run with `cargo test -p monocone --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use monocone::bounds::{check_run, upper_bound};
use monocone::cone::{complementary_apices, new_extremals_traced, ApexSet, GeneratorSet, NewExtremalsTrace};
use monocone::pareto::{solve_with, QueueDiscipline, Solution, SolveOptions};
use monocone::scalarization::ExplicitSetOracle;
use monocone::tropical::{outcome, ExtendedScalar, Outcome};
use monocone::verify::{brute_local_upper_bounds, brute_nondominated, OutcomeCloud};
use num_bigint::BigUint;

const RANDOM_INSTANCES: u64 = 500;
const MAX_POINTS: usize = 40;
const COORD_RANGE: (i64, i64) = (-20, 20);
const DISCIPLINES: [QueueDiscipline; 5] = [
    QueueDiscipline::Fifo,
    QueueDiscipline::Lifo,
    QueueDiscipline::Random(1),
    QueueDiscipline::Random(2),
    QueueDiscipline::Random(3),
];

struct Outcome_ {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn report(id: u32, name: &'static str, pass: bool, detail: String) -> Outcome_ {
    Outcome_ { id, name, pass, detail }
}

type Key = (BTreeSet<Outcome>, BTreeSet<Vec<ExtendedScalar>>, u64);

fn key(sol: &Solution) -> Key {
    (
        sol.nondominated.clone(),
        sol.local_upper_bounds.clone(),
        sol.stats.scalarization_calls,
    )
}

fn instance(seed: u64) -> (usize, Vec<Outcome>) {
    let dim = 1 + (seed % 4) as usize;
    (dim, random_cloud(seed, dim, MAX_POINTS, COORD_RANGE.0, COORD_RANGE.1))
}

fn criterion_knapsack(audit: &mut ExtremalityAudit) -> Outcome_ {
    let start = Instant::now();
    let oracle = three_objective_knapsack(true);
    let sol = solve_with(&oracle, &SolveOptions::default(), audit).unwrap();
    let elapsed = start.elapsed();
    let pass = sol.nondominated == knapsack_nondominated()
        && sol.local_upper_bounds == knapsack_apices()
        && sol.stats.scalarization_calls == 10
        && elapsed < Duration::from_secs(1);
    report(
        1,
        "knapsack golden run",
        pass,
        format!(
            "n={} m={} calls={} in {:?}",
            sol.stats.n, sol.stats.m, sol.stats.scalarization_calls, elapsed
        ),
    )
}

fn criterion_update_trace(audit: &mut ExtremalityAudit) -> Outcome_ {
    let accepted = |t: &NewExtremalsTrace| t.accepted.iter().cloned().collect::<BTreeSet<_>>();
    let gens = |list: &[&str]| GeneratorSet::from_points(3, list.iter().map(|s| p(s))).unwrap();

    let g0 = GeneratorSet::new(3);
    let h1 = p("(0,3,0,0)");
    let (a1, t1) = new_extremals_traced(&g0, &ApexSet::initial(3), &h1).unwrap();
    audit.check(&g0, &h1, &t1);
    let step1 = accepted(&t1) == points(&["(0,3,inf,inf)", "(0,inf,0,inf)", "(0,inf,inf,0)"]);

    let g1 = gens(&["(0,3,0,0)"]);
    let h2 = p("(0,0,3,3)");
    let (a2, t2) = new_extremals_traced(&g1, &a1, &h2).unwrap();
    audit.check(&g1, &h2, &t2);
    let step2 = accepted(&t2) == points(&["(0,3,3,inf)", "(0,3,inf,3)", "(0,0,inf,inf)"]);

    let g2 = gens(&["(0,3,0,0)", "(0,0,3,3)"]);
    let h3 = p("(0,1,2,2)");
    let (_, t3) = new_extremals_traced(&g2, &a2, &h3).unwrap();
    audit.check(&g2, &h3, &t3);
    let rejected = p("(0,3,2,3)");
    let step3 = t3.candidates.contains(&rejected)
        && accepted(&t3) == points(&["(0,1,3,inf)", "(0,1,inf,3)", "(0,3,2,inf)", "(0,3,inf,2)"]);

    report(
        2,
        "apex update trace",
        step1 && step2 && step3,
        format!("first={step1} second={step2} third={step3}"),
    )
}

fn criterion_two_objective(audit: &mut ExtremalityAudit) -> Outcome_ {
    let start = Instant::now();
    let sol = solve_with(&two_objective_cloud(), &SolveOptions::default(), audit).unwrap();
    let elapsed = start.elapsed();
    let pass = sol.nondominated == BTreeSet::from([outcome(&[0, 0]), outcome(&[-3, 2])])
        && elapsed < Duration::from_millis(10);
    report(3, "two-objective cloud", pass, format!("n={} in {:?}", sol.stats.n, elapsed))
}

fn criterion_duality() -> Outcome_ {
    let g = GeneratorSet::from_points(2, ["(0,1,-inf)", "(0,0,0)", "(0,-3,2)"].iter().map(|s| p(s))).unwrap();
    let apices = complementary_apices(&g).unwrap();
    let expected = points(&["(0,1,0)", "(0,0,2)", "(0,-3,inf)", "(inf,0,inf)", "(inf,inf,0)"]);
    let pass = apices.points() == &expected;
    let shown: Vec<String> = apices.iter().map(ToString::to_string).collect();
    report(4, "complementary cone apices", pass, shown.join(" "))
}

struct RandomSuite {
    equivalence_failures: Vec<String>,
    order_failures: Vec<String>,
    bound_failures: Vec<String>,
    fifo_time: Duration,
    total_time: Duration,
}

fn run_random_suite(audit: &mut ExtremalityAudit) -> RandomSuite {
    let mut suite = RandomSuite {
        equivalence_failures: Vec::new(),
        order_failures: Vec::new(),
        bound_failures: Vec::new(),
        fifo_time: Duration::ZERO,
        total_time: Duration::ZERO,
    };
    for seed in 0..RANDOM_INSTANCES {
        let (dim, z) = instance(seed);
        let oracle = ExplicitSetOracle::new(dim, z.clone()).unwrap();
        let cloud = OutcomeCloud::new(dim, z).unwrap();

        let mut reference: Option<Key> = None;
        for queue in DISCIPLINES {
            let options = SolveOptions { queue, max_iter: None };
            let start = Instant::now();
            let sol = solve_with(&oracle, &options, audit).unwrap();
            let elapsed = start.elapsed();
            suite.total_time += elapsed;

            if queue == QueueDiscipline::Fifo {
                suite.fifo_time += elapsed;
                let nd = brute_nondominated(&cloud);
                let apices = if nd.is_empty() {
                    BTreeSet::from([vec![ExtendedScalar::PlusInf; dim]])
                } else {
                    brute_local_upper_bounds(&nd).unwrap()
                };
                let calls_ok = sol.stats.scalarization_calls == (sol.stats.n + sol.stats.m) as u64;
                if sol.nondominated != nd || sol.local_upper_bounds != apices || !calls_ok {
                    suite.equivalence_failures.push(format!("seed {seed}"));
                }
                if sol.stats.n >= 1 && !check_run(&sol.stats, dim).passed() {
                    suite.bound_failures.push(format!("seed {seed}: m={} U={}", sol.stats.m, sol.stats.upper_bound));
                }
            }
            match &reference {
                None => reference = Some(key(&sol)),
                Some(r) if *r != key(&sol) => suite.order_failures.push(format!("seed {seed} under {queue}")),
                Some(_) => {}
            }
        }
    }
    suite
}

fn criterion_bound_values(suite: &RandomSuite) -> Outcome_ {
    let u = |m: u64, k: u64| upper_bound(m, k);
    let fixed = u(5, 2) == BigUint::from(5u32) && u(6, 3) == BigUint::from(8u32);
    let planar = (2..=50u64).all(|m| u(m, 2) == BigUint::from(m));
    let pass = fixed && planar && suite.bound_failures.is_empty();
    report(
        7,
        "upper bound theorem",
        pass,
        format!(
            "U(5,2)=5,U(6,3)=8: {fixed}; U(m,2)=m: {planar}; random violations: {:?}",
            suite.bound_failures
        ),
    )
}

#[test]
fn acceptance_criteria() {
    let mut audit = ExtremalityAudit::default();
    let mut results = vec![
        criterion_knapsack(&mut audit),
        criterion_update_trace(&mut audit),
        criterion_two_objective(&mut audit),
        criterion_duality(),
    ];

    let suite = run_random_suite(&mut audit);
    results.push(report(
        5,
        "oracle equivalence on random clouds",
        suite.equivalence_failures.is_empty() && suite.fifo_time < Duration::from_secs(60),
        format!(
            "{RANDOM_INSTANCES} instances, failures {:?}, {:?}",
            suite.equivalence_failures, suite.fifo_time
        ),
    ));
    results.push(report(
        6,
        "queue order independence",
        suite.order_failures.is_empty(),
        format!(
            "{} disciplines, failures {:?}, {:?}",
            DISCIPLINES.len(),
            suite.order_failures,
            suite.total_time
        ),
    ));
    results.push(criterion_bound_values(&suite));
    results.push(report(
        8,
        "extremality tests agree",
        audit.disagreements.is_empty(),
        format!(
            "{} candidates, disagreements {:?}",
            audit.candidates,
            audit.disagreements.iter().take(5).collect::<Vec<_>>()
        ),
    ));

    results.sort_by_key(|r| r.id);
    for r in &results {
        println!(
            "[{}] criterion {}: {} ({})",
            if r.pass { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.detail
        );
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.pass).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
