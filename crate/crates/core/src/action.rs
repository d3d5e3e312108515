//! The action of the units mod `n` on a group of order `n` by exponentiation,
//! its orbits and fixed sets, and a generic weighted-orbit-count engine.
//!
//! Two elements lie in the same orbit of the units action exactly when they
//! generate the same cyclic subgroup, so the orbit count is the number of
//! cyclic subgroups and each orbit is the generator set of one of them.

use std::collections::HashMap;

use thiserror::Error;

use crate::arith;
use crate::groups::{Element, FiniteGroup};

/// The units mod `n = |G|` acting on `G` by `a . x = x^a`.
pub struct UnitsAction<'g> {
    group: &'g FiniteGroup,
    units: Vec<u64>,
}

impl<'g> UnitsAction<'g> {
    pub fn new(group: &'g FiniteGroup) -> UnitsAction<'g> {
        let units = arith::units_mod(group.order() as u64);
        UnitsAction { group, units }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// The acting units, ascending; there are `phi(n)` of them.
    pub fn units(&self) -> &[u64] {
        &self.units
    }

    /// Apply the unit `a`: returns `x^a`.
    ///
    /// Panics if `a` is not a unit mod `n`.
    pub fn act(&self, a: u64, x: Element) -> Element {
        self.assert_unit(a);
        self.group.power(x, a)
    }

    /// Elements fixed by the unit `a`: all `x` with `x^a = x`.
    ///
    /// Panics if `a` is not a unit mod `n`.
    pub fn fix_set(&self, a: u64) -> Vec<usize> {
        self.assert_unit(a);
        self.group
            .elements()
            .filter(|&x| self.group.power(x, a) == x)
            .map(Element::index)
            .collect()
    }

    /// Orbit partition, computed by expanding `{x^a : a unit}` from the least
    /// unvisited index. Orbits are ordered by representative and sorted
    /// internally.
    pub fn orbits(&self) -> OrbitDecomposition {
        let n = self.group.order();
        let mut assigned = vec![false; n];
        let mut orbits = Vec::new();
        let mut representatives = Vec::new();
        for rep in 0..n {
            if assigned[rep] {
                continue;
            }
            let mut orbit: Vec<usize> = self
                .units
                .iter()
                .map(|&a| self.group.power(self.group.element(rep), a).index())
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &x in &orbit {
                assigned[x] = true;
            }
            representatives.push(rep);
            orbits.push(orbit);
        }
        OrbitDecomposition {
            orbits,
            representatives,
        }
    }

    fn assert_unit(&self, a: u64) {
        assert!(
            self.units.binary_search(&a).is_ok(),
            "{a} is not a unit mod {}",
            self.group.order()
        );
    }
}

/// All `x` with `x^m = identity` (the set `G_m`), as sorted element indices.
///
/// The identities only ever use `m` dividing `n`, but any `m >= 1` is
/// accepted; the result is always `{x : order(x) divides gcd(m, n)}`.
pub fn power_subset(group: &FiniteGroup, m: u64) -> Vec<usize> {
    assert!(m >= 1, "power_subset requires m >= 1");
    let identity = group.identity();
    group
        .elements()
        .filter(|&x| group.power(x, m) == identity)
        .map(Element::index)
        .collect()
}

/// Orbit partition of the element indices `0..n` under a [`UnitsAction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Disjoint sorted index sets covering `0..n`.
    pub orbits: Vec<Vec<usize>>,
    /// Least element of each orbit, parallel to `orbits`.
    pub representatives: Vec<usize>,
}

impl OrbitDecomposition {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

/// Exact two-sided evaluation of the weighted orbit-count identity
/// `sum of orbit weights = (1/|G|) * sum over g of sum over Fix(g) of w(x)`.
///
/// Division is never performed blindly: the right side is reported as the
/// numerator together with the acting order, and `balanced` holds exactly
/// when `lhs * acting_order = rhs_numerator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBurnsideReport {
    /// Sum of the per-orbit weights.
    pub lhs: u128,
    /// `sum_g sum_{x in Fix(g)} w(x)`, before division by the acting order.
    pub rhs_numerator: u128,
    /// Number of acting elements.
    pub acting_order: u64,
    /// Whether the identity holds exactly.
    pub balanced: bool,
    /// Number of orbits found (the classical count when weights are all 1).
    pub orbit_count: u64,
}

impl WeightedBurnsideReport {
    /// `rhs_numerator / acting_order` when the division is exact.
    pub fn rhs_average(&self) -> Option<u128> {
        let order = u128::from(self.acting_order);
        self.rhs_numerator.is_multiple_of(order).then(|| self.rhs_numerator / order)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("points must be distinct; {point} appears twice")]
    DuplicatePoint { point: u64 },
    #[error("acting element {acting} does not act bijectively (point {point} maps to unknown {image})")]
    NotBijective { acting: u64, point: u64, image: u64 },
    #[error("acting element {acting} collapses two points onto {image}")]
    NotInjective { acting: u64, image: u64 },
    #[error("weight is not constant on the orbit of {representative}: w({representative}) = {expected} but w({point}) = {found}")]
    WeightNotOrbitConstant {
        representative: u64,
        expected: u64,
        point: u64,
        found: u64,
    },
    #[error("there are no acting elements")]
    EmptyActingSet,
}

/// Generic weighted orbit counting over an extensionally-given action.
///
/// `acting` must enumerate a group acting on `points` through `action`; this
/// is the caller's responsibility, but the engine verifies that every acting
/// element induces a bijection of the points and that `weight` is constant on
/// each orbit, rejecting the input otherwise instead of averaging silently.
pub fn weighted_burnside_check<A, W>(
    acting: &[u64],
    points: &[u64],
    action: A,
    weight: W,
) -> Result<WeightedBurnsideReport, BurnsideError>
where
    A: Fn(u64, u64) -> u64,
    W: Fn(u64) -> u64,
{
    if acting.is_empty() {
        return Err(BurnsideError::EmptyActingSet);
    }
    let mut position: HashMap<u64, usize> = HashMap::with_capacity(points.len());
    for (i, &p) in points.iter().enumerate() {
        if position.insert(p, i).is_some() {
            return Err(BurnsideError::DuplicatePoint { point: p });
        }
    }

    // image[g][i] = position of action(acting[g], points[i]), checked bijective
    let mut images: Vec<Vec<usize>> = Vec::with_capacity(acting.len());
    for &g in acting {
        let mut image = Vec::with_capacity(points.len());
        let mut hit = vec![false; points.len()];
        for &p in points {
            let q = action(g, p);
            let Some(&j) = position.get(&q) else {
                return Err(BurnsideError::NotBijective {
                    acting: g,
                    point: p,
                    image: q,
                });
            };
            if hit[j] {
                return Err(BurnsideError::NotInjective { acting: g, image: q });
            }
            hit[j] = true;
            image.push(j);
        }
        images.push(image);
    }

    // Orbits: reachability closure under all acting elements.
    let mut orbit_of = vec![usize::MAX; points.len()];
    let mut orbit_reps: Vec<usize> = Vec::new();
    for start in 0..points.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let orbit_id = orbit_reps.len();
        orbit_reps.push(start);
        let mut stack = vec![start];
        orbit_of[start] = orbit_id;
        while let Some(i) = stack.pop() {
            for image in &images {
                let j = image[i];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = orbit_id;
                    stack.push(j);
                }
            }
        }
    }

    // Weight must be constant on every orbit before either side is summed.
    let rep_weights: Vec<u64> = orbit_reps.iter().map(|&i| weight(points[i])).collect();
    for (i, &p) in points.iter().enumerate() {
        let expected = rep_weights[orbit_of[i]];
        let found = weight(p);
        if found != expected {
            return Err(BurnsideError::WeightNotOrbitConstant {
                representative: points[orbit_reps[orbit_of[i]]],
                expected,
                point: p,
                found,
            });
        }
    }

    let lhs: u128 = rep_weights.iter().map(|&w| u128::from(w)).sum();
    let mut rhs_numerator: u128 = 0;
    for image in &images {
        for (i, &j) in image.iter().enumerate() {
            if i == j {
                rhs_numerator += u128::from(weight(points[i]));
            }
        }
    }
    let acting_order = acting.len() as u64;
    Ok(WeightedBurnsideReport {
        lhs,
        rhs_numerator,
        acting_order,
        balanced: lhs * u128::from(acting_order) == rhs_numerator,
        orbit_count: orbit_reps.len() as u64,
    })
}
