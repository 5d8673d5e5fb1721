//! Monomial max-tropical cones and their complementary min-tropical cones.
//!
//! A [`GeneratorSet`] `G` describes the monomial max-cone `⟦G⟧`: the union over
//! `g ∈ G` of the sectors `{x : x_0 - g_0 <= min_{j ∈ supp(g)∖{0}} (x_j - g_j)}`.
//! The closure of its complement is a min-tropical cone `C(G)` whose extremal
//! generators form an [`ApexSet`]. The apex set always holds the `d` trivial
//! generators `e^{(1)}, …, e^{(d)}`; every other apex is stored normalized
//! (0th coordinate `0`). After dropping the 0th coordinate, the nontrivial
//! apices are exactly the local upper bounds of `G`.
//!
//! [`new_extremals`] is the incremental double-description step: given the
//! apices of `C(G)` and a new generator `h`, it returns the apices of
//! `C(G ∪ {h})`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::tropical::{embed_outcome, int, ExtendedScalar, Side, TropicalPoint};

/// Generators of a monomial max-tropical cone. Every generator has `g_0 = 0`
/// and no `+∞` entry; `-∞` entries are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    dim: usize,
    generators: BTreeSet<TropicalPoint>,
}

impl GeneratorSet {
    pub fn new(dim: usize) -> Self {
        GeneratorSet {
            dim,
            generators: BTreeSet::new(),
        }
    }

    pub fn from_points(dim: usize, points: impl IntoIterator<Item = TropicalPoint>) -> Result<Self> {
        let mut set = GeneratorSet::new(dim);
        for g in points {
            set.insert(g)?;
        }
        Ok(set)
    }

    /// Inserts a generator after checking its shape. Returns whether it was new.
    pub fn insert(&mut self, g: TropicalPoint) -> Result<bool> {
        check_generator(self.dim, &g)?;
        Ok(self.generators.insert(g))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &TropicalPoint> {
        self.generators.iter()
    }

    pub fn contains_generator(&self, g: &TropicalPoint) -> bool {
        self.generators.contains(g)
    }
}

fn check_generator(dim: usize, g: &TropicalPoint) -> Result<()> {
    if g.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: g.dim(),
        });
    }
    if *g.coord(0) != ExtendedScalar::zero() || g.coords().contains(&ExtendedScalar::PlusInf) {
        return Err(Error::MalformedGenerator(g.to_string()));
    }
    Ok(())
}

/// Extremal generators of a complementary cone `C(G)`.
///
/// Holds the trivial generators `e^{(1)}, …, e^{(d)}` plus normalized
/// nontrivial apices (0th coordinate `0`, entries in `ℚ ∪ {+∞}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexSet {
    dim: usize,
    apices: BTreeSet<TropicalPoint>,
}

impl ApexSet {
    /// The apices of `C(∅)`: the trivial generators and `e^{(0)}`.
    pub fn initial(dim: usize) -> Self {
        let apices = (0..=dim).map(|i| TropicalPoint::unit(dim, i)).collect();
        ApexSet { dim, apices }
    }

    /// Builds an apex set from explicit points; the trivial generators are added.
    pub fn from_points(dim: usize, points: impl IntoIterator<Item = TropicalPoint>) -> Result<Self> {
        let mut apices: BTreeSet<TropicalPoint> =
            (1..=dim).map(|i| TropicalPoint::unit(dim, i)).collect();
        for a in points {
            check_apex(dim, &a)?;
            if !a.is_trivial_unit() && *a.coord(0) != ExtendedScalar::zero() {
                return Err(Error::MalformedApex(a.to_string()));
            }
            apices.insert(a);
        }
        Ok(ApexSet { dim, apices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.apices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.apices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &TropicalPoint> {
        self.apices.iter()
    }

    pub fn contains(&self, a: &TropicalPoint) -> bool {
        self.apices.contains(a)
    }

    /// All apices except `e^{(1)}, …, e^{(d)}`.
    pub fn nontrivial(&self) -> impl Iterator<Item = &TropicalPoint> {
        self.apices.iter().filter(|a| !a.is_trivial_unit())
    }

    /// Nontrivial apices with the 0th coordinate dropped (local upper bounds).
    pub fn local_upper_bounds(&self) -> BTreeSet<Vec<ExtendedScalar>> {
        self.nontrivial().map(|a| a.tail().to_vec()).collect()
    }

    pub fn points(&self) -> &BTreeSet<TropicalPoint> {
        &self.apices
    }
}

fn check_apex(dim: usize, a: &TropicalPoint) -> Result<()> {
    if a.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: a.dim(),
        });
    }
    if a.coords().contains(&ExtendedScalar::MinusInf) {
        return Err(Error::MalformedApex(a.to_string()));
    }
    if *a.coord(0) == ExtendedScalar::PlusInf && !a.is_trivial_unit() {
        return Err(Error::MalformedApex(a.to_string()));
    }
    Ok(())
}

/// Membership of a real point `x` in `⟦G⟧`.
pub fn contains(generators: &GeneratorSet, x: &TropicalPoint) -> Result<bool> {
    if !x.is_real() {
        return Err(Error::NonFinitePoint(x.to_string()));
    }
    if x.dim() != generators.dim() {
        return Err(Error::DimensionMismatch {
            expected: generators.dim(),
            found: x.dim(),
        });
    }
    for g in generators.iter() {
        let lhs = x.coord(0).checked_sub(g.coord(0))?;
        let mut rhs = ExtendedScalar::PlusInf;
        for j in g.support(Side::Max).into_iter().filter(|&j| j != 0) {
            rhs = rhs.min(x.coord(j).checked_sub(g.coord(j))?);
        }
        if lhs <= rhs {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exterior extremality test: is `a` an extremal generator of `C(G)`?
///
/// Every `j ∈ supp(a)∖{0}` must be the unique index attaining
/// `min_ℓ (a_ℓ - g_ℓ) = a_0 - g_0` for some `g ∈ G`. Trivial generators are
/// extremal by definition.
pub fn is_extremal_apex(a: &TropicalPoint, generators: &GeneratorSet) -> Result<bool> {
    check_apex(generators.dim(), a)?;
    extremal_against(a, generators.iter())
}

fn extremal_against<'a>(
    a: &TropicalPoint,
    generators: impl Iterator<Item = &'a TropicalPoint>,
) -> Result<bool> {
    if *a.coord(0) == ExtendedScalar::PlusInf {
        return Ok(true);
    }
    let support: Vec<usize> = (1..=a.dim()).filter(|&j| a.coord(j).is_finite()).collect();
    let mut witnessed = vec![false; support.len()];
    let mut remaining = support.len();

    for g in generators {
        if remaining == 0 {
            break;
        }
        let lead = a.coord(0).checked_sub(g.coord(0))?;
        let mut best: Option<(usize, ExtendedScalar)> = None;
        let mut unique = true;
        for (slot, &l) in support.iter().enumerate() {
            let diff = a.coord(l).checked_sub(g.coord(l))?;
            match &best {
                Some((_, m)) if diff > *m => {}
                Some((_, m)) if diff == *m => unique = false,
                _ => {
                    best = Some((slot, diff));
                    unique = true;
                }
            }
        }
        if let Some((slot, min)) = best {
            if unique && min == lead && !witnessed[slot] {
                witnessed[slot] = true;
                remaining -= 1;
            }
        }
    }
    Ok(remaining == 0)
}

/// Interior extremality test: `b` is extremal among the generators `others`
/// unless some other generator `a` satisfies `a_0 - b_0 <= min_i (a_i - b_i)`,
/// i.e. `normalize(a) >= normalize(b)` coordinatewise.
///
/// Generators with infinite 0th coordinate never dominate a nontrivial `b`,
/// and a trivial `b` is always extremal.
pub fn is_extremal_inner<'a>(
    b: &TropicalPoint,
    others: impl IntoIterator<Item = &'a TropicalPoint>,
) -> bool {
    let Ok(nb) = b.normalize() else {
        return true;
    };
    !others.into_iter().any(|a| match a.normalize() {
        Ok(na) => na != nb && na.coords().iter().zip(nb.coords()).all(|(x, y)| x >= y),
        Err(_) => false,
    })
}

/// Intermediate sets of one [`new_extremals`] call.
#[derive(Debug, Clone, Default)]
pub struct NewExtremalsTrace {
    /// Apices kept unchanged (`a_0 >= min_i (a_i - h_i)`).
    pub kept: Vec<TropicalPoint>,
    /// Apices cut off by the new generator.
    pub cut: Vec<TropicalPoint>,
    /// Normalized, deduplicated pair candidates.
    pub candidates: Vec<TropicalPoint>,
    /// Candidates that passed the extremality test.
    pub accepted: Vec<TropicalPoint>,
}

/// Apices of `C(G ∪ {h})` from the apices `A` of `C(G)`.
pub fn new_extremals(generators: &GeneratorSet, apices: &ApexSet, h: &TropicalPoint) -> Result<ApexSet> {
    new_extremals_traced(generators, apices, h).map(|(set, _)| set)
}

/// [`new_extremals`], also returning the intermediate candidate sets.
pub fn new_extremals_traced(
    generators: &GeneratorSet,
    apices: &ApexSet,
    h: &TropicalPoint,
) -> Result<(ApexSet, NewExtremalsTrace)> {
    let dim = generators.dim();
    if apices.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: apices.dim(),
        });
    }
    check_generator(dim, h)?;

    // min_i (a_i - h_i) over i in [d], per apex
    let depth = |a: &TropicalPoint| -> Result<ExtendedScalar> {
        let mut m = ExtendedScalar::PlusInf;
        for i in 1..=dim {
            m = m.min(a.coord(i).checked_sub(h.coord(i))?);
        }
        Ok(m)
    };

    let mut kept = Vec::new();
    let mut cut = Vec::new();
    for a in apices.iter() {
        let m = depth(a)?;
        if *a.coord(0) >= m {
            kept.push((a, m));
        } else {
            cut.push(a);
        }
    }

    let mut candidates = BTreeSet::new();
    for (b, m) in &kept {
        // b never meets the boundary of h's sector
        let Some(m) = m.as_finite() else { continue };
        let lifted = b.shift_by(&-m);
        for c in &cut {
            candidates.insert(lifted.cw_min(c)?.normalize()?);
        }
    }

    let mut extended = generators.clone();
    extended.insert(h.clone())?;
    let mut accepted = Vec::new();
    for cand in &candidates {
        if extremal_against(cand, extended.iter())? {
            accepted.push(cand.clone());
        }
    }

    let next: BTreeSet<TropicalPoint> = kept
        .iter()
        .map(|(a, _)| (*a).clone())
        .chain(accepted.iter().cloned())
        .collect();
    let trace = NewExtremalsTrace {
        kept: kept.into_iter().map(|(a, _)| a.clone()).collect(),
        cut: cut.into_iter().cloned().collect(),
        candidates: candidates.into_iter().collect(),
        accepted,
    };
    Ok((ApexSet { dim, apices: next }, trace))
}

/// Drops generators whose sector is contained in another generator's
/// (`g' >= g` coordinatewise for some other `g`).
fn irredundant(generators: &GeneratorSet) -> Vec<TropicalPoint> {
    let all: Vec<&TropicalPoint> = generators.iter().collect();
    all.iter()
        .filter(|g| {
            !all.iter().any(|other| {
                other != *g && other.coords().iter().zip(g.coords()).all(|(o, x)| o <= x)
            })
        })
        .map(|g| (*g).clone())
        .collect()
}

/// Apices of `C(G)`, built by inserting the irredundant generators one at a
/// time into `C(∅)`.
pub fn complementary_apices(generators: &GeneratorSet) -> Result<ApexSet> {
    let dim = generators.dim();
    let mut current = GeneratorSet::new(dim);
    let mut apices = ApexSet::initial(dim);
    for g in irredundant(generators) {
        apices = new_extremals(&current, &apices, &g)?;
        current.insert(g)?;
    }
    Ok(apices)
}

/// Irreducible components of the monomial ideal generated by `x^e` for each
/// exponent vector `e`.
///
/// Each returned vector describes one component `⟨x_j^{a_j} : a_j finite⟩`;
/// `+∞` marks an absent variable. Apices with a coordinate `<= 0` do not
/// meet the positive orthant and are dropped, so the unit ideal has none.
pub fn irreducible_components(exponents: &[Vec<u64>]) -> Result<Vec<Vec<ExtendedScalar>>> {
    let first = exponents.first().ok_or(Error::ZeroIdeal)?;
    let dim = first.len();
    let mut generators = GeneratorSet::new(dim);
    for e in exponents {
        if e.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: e.len(),
            });
        }
        let z: Vec<_> = e.iter().map(|&v| int(v as i64)).collect();
        generators.insert(embed_outcome(&z)?)?;
    }
    let apices = complementary_apices(&generators)?;
    let zero = ExtendedScalar::zero();
    Ok(apices
        .local_upper_bounds()
        .into_iter()
        .filter(|a| a.iter().all(|c| *c > zero))
        .collect())
}
