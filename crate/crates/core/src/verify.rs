//! Brute-force reference computations, independent of the cone machinery.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pareto::solve;
use crate::scalarization::ExplicitSetOracle;
use crate::tropical::{ExtendedScalar, Outcome};

/// A finite, deduplicated set of outcome vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeCloud {
    dim: usize,
    points: BTreeSet<Outcome>,
}

impl OutcomeCloud {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Outcome>) -> Result<Self> {
        let points: BTreeSet<Outcome> = points.into_iter().collect();
        if let Some(z) = points.iter().find(|z| z.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: z.len(),
            });
        }
        Ok(OutcomeCloud { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &BTreeSet<Outcome> {
        &self.points
    }
}

fn weakly_below(w: &Outcome, z: &Outcome) -> bool {
    w.iter().zip(z).all(|(a, b)| a <= b)
}

/// All points not weakly dominated by another point, by pairwise scan.
pub fn brute_nondominated(cloud: &OutcomeCloud) -> BTreeSet<Outcome> {
    cloud
        .points
        .iter()
        .filter(|z| !cloud.points.iter().any(|w| w != *z && weakly_below(w, z)))
        .cloned()
        .collect()
}

/// Apices of the maximal empty open orthants of a nondominated set.
///
/// Enumerates the grid of per-axis coordinate values of `nondominated` plus
/// `+∞`, keeping a candidate `a` when no point lies strictly below it and
/// every finite `a_j` is touched by a point `g` with `g_j = a_j` and
/// `g_ℓ < a_ℓ` for `ℓ ≠ j`.
pub fn brute_local_upper_bounds(nondominated: &BTreeSet<Outcome>) -> Result<BTreeSet<Vec<ExtendedScalar>>> {
    let first = nondominated.iter().next().ok_or(Error::EmptyNondominatedSet)?;
    let dim = first.len();
    let axes: Vec<Vec<ExtendedScalar>> = (0..dim)
        .map(|i| {
            let values: BTreeSet<ExtendedScalar> = nondominated
                .iter()
                .map(|g| ExtendedScalar::Finite(g[i].clone()))
                .chain(std::iter::once(ExtendedScalar::PlusInf))
                .collect();
            values.into_iter().collect()
        })
        .collect();

    let strictly_below = |g: &Outcome, a: &[ExtendedScalar], skip: Option<usize>| {
        (0..dim)
            .filter(|&l| Some(l) != skip)
            .all(|l| ExtendedScalar::Finite(g[l].clone()) < a[l])
    };

    let mut result = BTreeSet::new();
    let mut index = vec![0usize; dim];
    loop {
        let candidate: Vec<ExtendedScalar> = index.iter().enumerate().map(|(i, &k)| axes[i][k].clone()).collect();
        let empty = !nondominated.iter().any(|g| strictly_below(g, &candidate, None));
        let maximal = empty
            && (0..dim).all(|j| match &candidate[j] {
                ExtendedScalar::Finite(v) => nondominated
                    .iter()
                    .any(|g| g[j] == *v && strictly_below(g, &candidate, Some(j))),
                _ => true,
            });
        if maximal {
            result.insert(candidate);
        }

        // odometer over the grid
        let mut axis = 0;
        loop {
            if axis == dim {
                return Ok(result);
            }
            index[axis] += 1;
            if index[axis] < axes[axis].len() {
                break;
            }
            index[axis] = 0;
            axis += 1;
        }
    }
}

/// Result of comparing a full run with the brute-force references.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub scalarizations: u64,
    pub expected_scalarizations: u64,
    /// Found by brute force but not by the solver.
    pub nondominated_missing: Vec<Outcome>,
    /// Reported by the solver but not by brute force.
    pub nondominated_extra: Vec<Outcome>,
    pub apices_missing: Vec<Vec<ExtendedScalar>>,
    pub apices_extra: Vec<Vec<ExtendedScalar>>,
}

/// Reference answers for a cloud: nondominated set and local upper bounds.
/// An empty cloud has the single all-`+∞` apex.
pub fn reference_answers(cloud: &OutcomeCloud) -> Result<(BTreeSet<Outcome>, BTreeSet<Vec<ExtendedScalar>>)> {
    let nondominated = brute_nondominated(cloud);
    let apices = if nondominated.is_empty() {
        BTreeSet::from([vec![ExtendedScalar::PlusInf; cloud.dim]])
    } else {
        brute_local_upper_bounds(&nondominated)?
    };
    Ok((nondominated, apices))
}

/// Compares claimed answers with the brute-force references.
pub fn compare_answers(
    cloud: &OutcomeCloud,
    nondominated: &BTreeSet<Outcome>,
    apices: &BTreeSet<Vec<ExtendedScalar>>,
    scalarizations: u64,
) -> Result<Verdict> {
    let (ref_nd, ref_apices) = reference_answers(cloud)?;
    let expected_scalarizations = (ref_nd.len() + ref_apices.len()) as u64;
    let verdict = Verdict {
        pass: false,
        scalarizations,
        expected_scalarizations,
        nondominated_missing: ref_nd.difference(nondominated).cloned().collect(),
        nondominated_extra: nondominated.difference(&ref_nd).cloned().collect(),
        apices_missing: ref_apices.difference(apices).cloned().collect(),
        apices_extra: apices.difference(&ref_apices).cloned().collect(),
    };
    let pass = verdict.nondominated_missing.is_empty()
        && verdict.nondominated_extra.is_empty()
        && verdict.apices_missing.is_empty()
        && verdict.apices_extra.is_empty()
        && scalarizations == expected_scalarizations;
    Ok(Verdict { pass, ..verdict })
}

/// Solves the cloud as an explicit problem and checks the run against the
/// brute-force references and the `n + m` call count.
pub fn cross_check(cloud: &OutcomeCloud) -> Result<Verdict> {
    let oracle = ExplicitSetOracle::new(cloud.dim, cloud.points.iter().cloned())?;
    let solution = solve(&oracle)?;
    compare_answers(
        cloud,
        &solution.nondominated,
        &solution.local_upper_bounds,
        solution.stats.scalarization_calls,
    )
}
