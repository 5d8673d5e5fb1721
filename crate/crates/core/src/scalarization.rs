//! Problem oracles and the two scalarizations used to find the next
//! nondominated point below an apex.
//!
//! Objective indices follow the tropical coordinates: `1..=d`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::tropical::{int, ExtendedScalar, Outcome, Rational, TropicalPoint};

/// Access to an (implicit) finite outcome set `Z ⊂ ℚ^d` through scalarizations.
pub trait ProblemOracle {
    fn dim(&self) -> usize;

    /// Minimizes `z_i` over `z ∈ Z` with `z_j < bound_j` for every given bound.
    /// Ties go to the lexicographically smallest vector.
    fn eps_constraint_min(&self, i: usize, strict_bounds: &BTreeMap<usize, Rational>) -> Result<Option<Outcome>>;

    /// Minimizes `Σ z_j` over `z ∈ Z` with `z <= w` componentwise.
    /// Ties go to the lexicographically smallest vector.
    fn hybrid_min(&self, w: &[Rational]) -> Result<Outcome>;

    /// The materialized outcome set, when the oracle has one.
    fn outcomes(&self) -> Option<&[Outcome]> {
        None
    }
}

/// An oracle over an explicitly listed outcome set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitSetOracle {
    dim: usize,
    points: Vec<Outcome>,
}

impl ExplicitSetOracle {
    /// Deduplicates and sorts the points. Every point must have length `dim`.
    pub fn new(dim: usize, points: impl IntoIterator<Item = Outcome>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut set = BTreeSet::new();
        for z in points {
            if z.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: z.len(),
                });
            }
            set.insert(z);
        }
        Ok(ExplicitSetOracle {
            dim,
            points: set.into_iter().collect(),
        })
    }

    pub fn from_ints(dim: usize, points: &[&[i64]]) -> Result<Self> {
        Self::new(dim, points.iter().map(|z| z.iter().map(|&v| int(v)).collect()))
    }

    pub fn points(&self) -> &[Outcome] {
        &self.points
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim,
            });
        }
        Ok(())
    }
}

impl ProblemOracle for ExplicitSetOracle {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eps_constraint_min(&self, i: usize, strict_bounds: &BTreeMap<usize, Rational>) -> Result<Option<Outcome>> {
        self.check_index(i)?;
        for &j in strict_bounds.keys() {
            self.check_index(j)?;
            if j == i {
                return Err(Error::IndexOutOfRange { index: j, dim: self.dim });
            }
        }
        // points are sorted, so the first minimum is the lexicographically smallest
        let mut best: Option<&Outcome> = None;
        for z in &self.points {
            if !strict_bounds.iter().all(|(&j, b)| z[j - 1] < *b) {
                continue;
            }
            if best.is_none_or(|w| z[i - 1] < w[i - 1]) {
                best = Some(z);
            }
        }
        Ok(best.cloned())
    }

    fn hybrid_min(&self, w: &[Rational]) -> Result<Outcome> {
        if w.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.len(),
            });
        }
        let mut best: Option<(Rational, &Outcome)> = None;
        for z in &self.points {
            if !z.iter().zip(w).all(|(a, b)| a <= b) {
                continue;
            }
            let sum: Rational = z.iter().sum();
            if best.as_ref().is_none_or(|(s, _)| sum < *s) {
                best = Some((sum, z));
            }
        }
        best.map(|(_, z)| z.clone()).ok_or_else(|| {
            let shown: Vec<String> = w.iter().map(|v| ExtendedScalar::Finite(v.clone()).to_string()).collect();
            Error::InfeasibleHybrid(format!("({})", shown.join(",")))
        })
    }

    fn outcomes(&self) -> Option<&[Outcome]> {
        Some(&self.points)
    }
}

/// Multiobjective 0/1 knapsack: minimize `P x + t` subject to `W x <= c`,
/// `x ∈ {0,1}^k`.
///
/// All `2^k` assignments are enumerated once at construction; afterwards the
/// oracle answers queries from the materialized outcome set.
#[derive(Debug, Clone)]
pub struct Knapsack01Oracle {
    inner: ExplicitSetOracle,
    feasible_assignments: usize,
}

/// Largest number of items the exhaustive enumeration accepts.
pub const MAX_KNAPSACK_ITEMS: usize = 26;

impl Knapsack01Oracle {
    /// `objectives` is `d × k`, `weights` is `r × k`, `capacity` has length `r`
    /// and `translate` (if any) has length `d`.
    pub fn new(
        objectives: &[Vec<Rational>],
        weights: &[Vec<Rational>],
        capacity: &[Rational],
        translate: Option<&[Rational]>,
    ) -> Result<Self> {
        let dim = objectives.len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let items = objectives[0].len();
        if objectives.iter().any(|row| row.len() != items) {
            return Err(Error::InvalidKnapsack("objective rows differ in length".into()));
        }
        if weights.iter().any(|row| row.len() != items) {
            return Err(Error::InvalidKnapsack(format!(
                "every constraint row needs {items} entries"
            )));
        }
        if weights.len() != capacity.len() {
            return Err(Error::InvalidKnapsack(format!(
                "{} constraint rows but {} capacities",
                weights.len(),
                capacity.len()
            )));
        }
        if let Some(t) = translate {
            if t.len() != dim {
                return Err(Error::InvalidKnapsack(format!(
                    "translation has length {}, expected {dim}",
                    t.len()
                )));
            }
        }
        if items > MAX_KNAPSACK_ITEMS {
            return Err(Error::InvalidKnapsack(format!(
                "{items} items exceed the enumeration limit of {MAX_KNAPSACK_ITEMS}"
            )));
        }

        let mut outcomes = Vec::new();
        for mask in 0u64..(1u64 << items) {
            let chosen = |col: usize| mask >> col & 1 == 1;
            let feasible = weights.iter().zip(capacity).all(|(row, cap)| {
                let load: Rational = (0..items).filter(|&col| chosen(col)).map(|col| &row[col]).sum();
                load <= *cap
            });
            if !feasible {
                continue;
            }
            let z: Outcome = objectives
                .iter()
                .enumerate()
                .map(|(obj, row)| {
                    let value: Rational = (0..items).filter(|&col| chosen(col)).map(|col| &row[col]).sum();
                    match translate {
                        Some(t) => value + &t[obj],
                        None => value,
                    }
                })
                .collect();
            outcomes.push(z);
        }
        let feasible_assignments = outcomes.len();
        Ok(Knapsack01Oracle {
            inner: ExplicitSetOracle::new(dim, outcomes)?,
            feasible_assignments,
        })
    }

    /// Number of feasible `x ∈ {0,1}^k` (before deduplicating outcomes).
    pub fn feasible_assignments(&self) -> usize {
        self.feasible_assignments
    }

    pub fn outcome_set(&self) -> &ExplicitSetOracle {
        &self.inner
    }
}

impl ProblemOracle for Knapsack01Oracle {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn eps_constraint_min(&self, i: usize, strict_bounds: &BTreeMap<usize, Rational>) -> Result<Option<Outcome>> {
        self.inner.eps_constraint_min(i, strict_bounds)
    }

    fn hybrid_min(&self, w: &[Rational]) -> Result<Outcome> {
        self.inner.hybrid_min(w)
    }

    fn outcomes(&self) -> Option<&[Outcome]> {
        self.inner.outcomes()
    }
}

/// The objective minimized by the ε-constraint step for apex `a`: the smallest
/// index with a finite entry, or `1` if there is none.
pub fn choose_objective(a: &TropicalPoint) -> usize {
    (1..=a.dim()).find(|&j| a.coord(j).is_finite()).unwrap_or(1)
}

/// A nondominated point strictly inside the open orthant below `a`, if any.
///
/// Runs the ε-constraint problem with bounds `z_j < a_j` for the finite
/// entries of `a` other than the minimized one, rejects an optimum that
/// violates the bound on the minimized objective, and polishes the optimum
/// with the hybrid step.
pub fn next_nondominated<O: ProblemOracle + ?Sized>(oracle: &O, a: &TropicalPoint) -> Result<Option<Outcome>> {
    if a.dim() != oracle.dim() {
        return Err(Error::DimensionMismatch {
            expected: oracle.dim(),
            found: a.dim(),
        });
    }
    if *a.coord(0) != ExtendedScalar::zero() || a.coords().contains(&ExtendedScalar::MinusInf) {
        return Err(Error::MalformedApex(a.to_string()));
    }
    let i = choose_objective(a);
    let bounds: BTreeMap<usize, Rational> = (1..=a.dim())
        .filter(|&j| j != i)
        .filter_map(|j| a.coord(j).as_finite().map(|v| (j, v.clone())))
        .collect();
    let Some(w) = oracle.eps_constraint_min(i, &bounds)? else {
        return Ok(None);
    };
    if let Some(limit) = a.coord(i).as_finite() {
        if w[i - 1] >= *limit {
            return Ok(None);
        }
    }
    oracle.hybrid_min(&w).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::outcome;

    fn knapsack_outcomes() -> ExplicitSetOracle {
        ExplicitSetOracle::from_ints(3, &[&[4, 4, 4], &[3, 0, 0], &[0, 3, 3], &[1, 2, 2], &[3, 2, 1]]).unwrap()
    }

    fn p(s: &str) -> TropicalPoint {
        s.parse().unwrap()
    }

    #[test]
    fn eps_constraint_examples() {
        let o = knapsack_outcomes();
        assert_eq!(o.eps_constraint_min(3, &BTreeMap::new()).unwrap(), Some(outcome(&[3, 0, 0])));
        let b = BTreeMap::from([(2, int(3))]);
        assert_eq!(o.eps_constraint_min(1, &b).unwrap(), Some(outcome(&[1, 2, 2])));
        let b = BTreeMap::from([(2, int(0))]);
        assert_eq!(o.eps_constraint_min(1, &b).unwrap(), None);
    }

    #[test]
    fn eps_constraint_index_errors() {
        let o = knapsack_outcomes();
        assert!(o.eps_constraint_min(0, &BTreeMap::new()).is_err());
        assert!(o.eps_constraint_min(4, &BTreeMap::new()).is_err());
        assert!(o.eps_constraint_min(1, &BTreeMap::from([(1, int(0))])).is_err());
        assert!(o.eps_constraint_min(1, &BTreeMap::from([(7, int(0))])).is_err());
    }

    #[test]
    fn eps_constraint_breaks_ties_lexicographically() {
        let o = ExplicitSetOracle::from_ints(2, &[&[0, 5], &[0, 3], &[1, 0]]).unwrap();
        assert_eq!(o.eps_constraint_min(1, &BTreeMap::new()).unwrap(), Some(outcome(&[0, 3])));
    }

    #[test]
    fn hybrid_examples() {
        let o = knapsack_outcomes();
        assert_eq!(o.hybrid_min(&outcome(&[3, 0, 0])).unwrap(), outcome(&[3, 0, 0]));
        assert_eq!(o.hybrid_min(&outcome(&[4, 4, 4])).unwrap(), outcome(&[3, 0, 0]));
        assert_eq!(o.hybrid_min(&outcome(&[1, 2, 2])).unwrap(), outcome(&[1, 2, 2]));
        assert!(matches!(
            o.hybrid_min(&outcome(&[-1, -1, -1])),
            Err(Error::InfeasibleHybrid(_))
        ));
    }

    #[test]
    fn next_nondominated_examples() {
        let o = knapsack_outcomes();
        let first = next_nondominated(&o, &TropicalPoint::unit(3, 0)).unwrap().unwrap();
        // i = 1 minimizes z_1 with no bounds
        assert_eq!(first, outcome(&[0, 3, 3]));
        assert_eq!(next_nondominated(&o, &p("(0,inf,0,inf)")).unwrap(), None);
        assert_eq!(next_nondominated(&o, &p("(0,3,3,inf)")).unwrap(), Some(outcome(&[1, 2, 2])));
    }

    #[test]
    fn post_check_rejects_points_on_the_boundary() {
        // the ε-optimum (0,3,3) has z_1 = a_1, so it is not strictly below a
        let o = knapsack_outcomes();
        assert_eq!(next_nondominated(&o, &p("(0,0,inf,inf)")).unwrap(), None);
    }

    #[test]
    fn next_nondominated_rejects_malformed_apex() {
        let o = knapsack_outcomes();
        assert!(next_nondominated(&o, &p("(1,inf,inf,inf)")).is_err());
        assert!(next_nondominated(&o, &p("(0,inf,inf)")).is_err());
    }

    #[test]
    fn knapsack_materialization() {
        let rows = |m: &[&[i64]]| -> Vec<Vec<Rational>> { m.iter().map(|r| outcome(r)).collect() };
        let p = rows(&[&[-1, -4, -3, -1], &[-4, -1, -2, -2], &[-4, -1, -2, -3]]);
        let w = rows(&[&[2, 1, 1, 1], &[0, 3, 1, 0], &[0, 1, 1, 2]]);
        let c = outcome(&[2, 3, 2]);
        let plain = Knapsack01Oracle::new(&p, &w, &c, None).unwrap();
        assert_eq!(plain.feasible_assignments(), 5);
        let expected: BTreeSet<Outcome> = [[0, 0, 0], [-1, -4, -4], [-4, -1, -1], [-3, -2, -2], [-1, -2, -3]]
            .iter()
            .map(|z| outcome(z))
            .collect();
        assert_eq!(plain.outcomes().unwrap().iter().cloned().collect::<BTreeSet<_>>(), expected);

        let t = outcome(&[4, 4, 4]);
        let shifted = Knapsack01Oracle::new(&p, &w, &c, Some(&t)).unwrap();
        assert_eq!(shifted.outcome_set(), &knapsack_outcomes());
    }

    #[test]
    fn knapsack_shape_errors() {
        let one = vec![vec![int(1), int(2)]];
        assert!(Knapsack01Oracle::new(&one, &[vec![int(1)]], &[int(1)], None).is_err());
        assert!(Knapsack01Oracle::new(&one, &one, &[], None).is_err());
        assert!(Knapsack01Oracle::new(&one, &one, &[int(1)], Some(&[int(0), int(0)])).is_err());
        assert!(Knapsack01Oracle::new(&[], &one, &[int(1)], None).is_err());
    }
}
