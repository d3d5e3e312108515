//! The order-theoretic invariants psi and sigma, cyclic-subgroup censuses,
//! and exact verifiers for the identities this crate exists to check.
//!
//! For a group `G` of order `n`:
//!
//! * `psi(S) = sum of element orders over S` for any subset `S` of `G`. It is
//!   defined on subsets, not just subgroups, because the sets
//!   `G_m = {x : x^m = 1}` need not be subgroups when `G` is nonabelian.
//! * `sigma(G) = sum of |H| over the cyclic subgroups H of G`.
//! * `n_d(G) = number of cyclic subgroups of order d`.
//!
//! Every verifier works in exact integer arithmetic; inequality checks are
//! cross-multiplied rather than divided, so no rounding can flip a verdict.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use crate::action::{power_subset, weighted_burnside_check, UnitsAction};
use crate::arith;
use crate::groups::FiniteGroup;

/// Which identity a report speaks about. The `Display` form is the stable
/// token used by the CLI and in report streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `sum_a gcd(a-1, n) = phi(n) tau(n)` over the units mod n.
    MenonClassical,
    /// `sum_a psi(G_{gcd(a-1, n)}) = phi(n) sigma(G)`.
    Theorem1,
    /// The divisor-sum form `sum_a sum_{d | gcd(a-1, n)} d phi(d) n_d(G) = phi(n) sigma(G)`.
    Eq3,
    /// The cyclic specialization `sum_a psi(Z_{gcd(a-1, n)}) = phi(n) sigma(n)`.
    Corollary2,
    /// `(q/(p+1)) S <= phi(n) sigma(n) <= S` with `S = sum_a gcd(a-1, n)^2`.
    Corollary3,
    /// `(q/(p+1)) n^2 <= psi(Z_n) <= n^2`.
    PsiCyclicBounds,
    /// The weighted orbit-count engine reproduces `sigma(G)` and `|C(G)|`.
    Burnside,
}

impl Identity {
    pub fn token(self) -> &'static str {
        match self {
            Identity::MenonClassical => "menon",
            Identity::Theorem1 => "theorem1",
            Identity::Eq3 => "eq3",
            Identity::Corollary2 => "corollary2",
            Identity::Corollary3 => "corollary3",
            Identity::PsiCyclicBounds => "psi-bounds",
            Identity::Burnside => "burnside",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// One verification record: exact left and right sides plus the verdict.
///
/// For equality identities `ok` holds iff `lhs == rhs`. Inequality identities
/// set `lower_ok`/`upper_ok` for the two cross-multiplied bounds and `ok`
/// iff both hold; `lhs`/`rhs` then carry the two quantities being compared
/// (the unit sum and `phi(n) sigma(n)`, or `psi(Z_n)` and `n^2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub instance: String,
    pub n: u64,
    pub lhs: u128,
    pub rhs: u128,
    pub ok: bool,
    pub lower_ok: Option<bool>,
    pub upper_ok: Option<bool>,
    pub elapsed: Duration,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} n={} lhs={} rhs={}",
            if self.ok { "ok  " } else { "FAIL" },
            self.identity,
            self.instance,
            self.n,
            self.lhs,
            self.rhs
        )?;
        if let (Some(lower), Some(upper)) = (self.lower_ok, self.upper_ok) {
            write!(f, " lower_ok={lower} upper_ok={upper}")?;
        }
        Ok(())
    }
}

/// Cyclic-subgroup census: `by_order[d] = n_d(G)` (absent means zero) and the
/// deduplicated subgroups themselves as sorted element-index sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubgroupCensus {
    pub by_order: BTreeMap<u64, u64>,
    pub subgroups: Vec<Vec<usize>>,
}

impl CyclicSubgroupCensus {
    /// Total number of cyclic subgroups, `|C(G)|`.
    pub fn count(&self) -> u64 {
        self.subgroups.len() as u64
    }
}

/// `psi` on a subset: the sum of the orders of the listed elements.
pub fn psi_of_subset(group: &FiniteGroup, subset: &[usize]) -> u128 {
    let orders = group.element_orders();
    subset.iter().map(|&x| u128::from(orders[x])).sum()
}

/// `psi(G)`: the sum of the orders of all elements.
pub fn psi_of_group(group: &FiniteGroup) -> u128 {
    group
        .element_orders()
        .iter()
        .map(|&o| u128::from(o))
        .sum()
}

/// Enumerate the cyclic subgroups `<x>` of `G`, deduplicated by their element
/// sets. This is the explicit oracle path; [`n_d_counts`] is the cheap path.
pub fn cyclic_subgroups(group: &FiniteGroup) -> CyclicSubgroupCensus {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut subgroups = Vec::new();
    let mut by_order = BTreeMap::new();
    for x in group.elements() {
        let mut generated = Vec::new();
        let mut acc = group.identity();
        loop {
            generated.push(acc.index());
            acc = group.op(acc, x);
            if acc == group.identity() {
                break;
            }
        }
        generated.sort_unstable();
        if seen.insert(generated.clone()) {
            *by_order.entry(generated.len() as u64).or_insert(0u64) += 1;
            subgroups.push(generated);
        }
    }
    CyclicSubgroupCensus {
        by_order,
        subgroups,
    }
}

/// `n_d(G)` for each divisor `d` with a nonzero count, computed as
/// (number of elements of order d) / phi(d).
///
/// Each element of order `d` generates one cyclic subgroup of order `d`, and
/// each such subgroup has exactly `phi(d)` generators, so the division is
/// exact; a remainder would mean a bug and panics.
pub fn n_d_counts(group: &FiniteGroup) -> BTreeMap<u64, u64> {
    let mut order_census: BTreeMap<u64, u64> = BTreeMap::new();
    for &o in group.element_orders() {
        *order_census.entry(o).or_insert(0) += 1;
    }
    order_census
        .into_iter()
        .map(|(d, count)| {
            let phi = arith::euler_phi(d);
            assert_eq!(
                count % phi,
                0,
                "count of order-{d} elements ({count}) not divisible by phi({d}) = {phi}"
            );
            (d, count / phi)
        })
        .collect()
}

/// `sigma(G)`: the sum of the orders of the cyclic subgroups.
///
/// Computed two independent ways — `sum d * n_d(G)` from the element-order
/// census and a direct sum over the deduplicated subgroup list — and
/// cross-asserted; a mismatch means a bug and panics.
pub fn sigma_cyclic(group: &FiniteGroup) -> u128 {
    let via_counts: u128 = n_d_counts(group)
        .iter()
        .map(|(&d, &count)| u128::from(d) * u128::from(count))
        .sum();
    let via_subgroups: u128 = cyclic_subgroups(group)
        .subgroups
        .iter()
        .map(|h| h.len() as u128)
        .sum();
    assert_eq!(
        via_counts, via_subgroups,
        "sigma mismatch between census and subgroup enumeration on {}",
        group.name()
    );
    via_counts
}

/// Closed form for `psi` of the cyclic group of order `m`:
/// `sum over d | m of d * phi(d)`.
pub fn psi_cyclic_closed_form(m: u64) -> u128 {
    arith::divisors(m)
        .into_iter()
        .map(|d| u128::from(d) * u128::from(arith::euler_phi(d)))
        .sum()
}

fn report(
    identity: Identity,
    instance: String,
    n: u64,
    lhs: u128,
    rhs: u128,
    started: Instant,
) -> IdentityReport {
    IdentityReport {
        identity,
        instance,
        n,
        lhs,
        rhs,
        ok: lhs == rhs,
        lower_ok: None,
        upper_ok: None,
        elapsed: started.elapsed(),
    }
}

/// Classical identity: `sum over units a of gcd(a-1, n) = phi(n) tau(n)`.
pub fn verify_menon_classical(n: u64) -> IdentityReport {
    let started = Instant::now();
    let lhs: u128 = arith::units_mod(n)
        .into_iter()
        .map(|a| u128::from(arith::gcd(a - 1, n)))
        .sum();
    let rhs = u128::from(arith::euler_phi(n)) * u128::from(arith::tau(n));
    report(
        Identity::MenonClassical,
        n.to_string(),
        n,
        lhs,
        rhs,
        started,
    )
}

/// Group-level identity: `sum over units a mod n = |G| of
/// psi(G_{gcd(a-1, n)}) = phi(n) sigma(G)`.
pub fn verify_theorem1(group: &FiniteGroup) -> IdentityReport {
    let started = Instant::now();
    let n = group.order() as u64;
    let mut psi_by_m: BTreeMap<u64, u128> = BTreeMap::new();
    let mut lhs: u128 = 0;
    for a in arith::units_mod(n) {
        let m = arith::gcd(a - 1, n);
        let psi = *psi_by_m
            .entry(m)
            .or_insert_with(|| psi_of_subset(group, &power_subset(group, m)));
        lhs += psi;
    }
    let rhs = u128::from(arith::euler_phi(n)) * sigma_cyclic(group);
    report(Identity::Theorem1, group.name().to_string(), n, lhs, rhs, started)
}

/// Divisor-sum form of the group-level identity:
/// `sum over units a of sum over d | gcd(a-1, n) of d phi(d) n_d(G)
///  = phi(n) sigma(G)`,
/// additionally checking per unit that the inner sum equals
/// `psi(G_{gcd(a-1, n)})`.
pub fn verify_eq3(group: &FiniteGroup) -> IdentityReport {
    let started = Instant::now();
    let n = group.order() as u64;
    let nd = n_d_counts(group);
    let mut term_by_m: BTreeMap<u64, (u128, bool)> = BTreeMap::new();
    let mut lhs: u128 = 0;
    let mut per_unit_ok = true;
    for a in arith::units_mod(n) {
        let m = arith::gcd(a - 1, n);
        let (term, matches_psi) = *term_by_m.entry(m).or_insert_with(|| {
            let term: u128 = arith::divisors(m)
                .into_iter()
                .map(|d| {
                    u128::from(d)
                        * u128::from(arith::euler_phi(d))
                        * u128::from(nd.get(&d).copied().unwrap_or(0))
                })
                .sum();
            let psi = psi_of_subset(group, &power_subset(group, m));
            (term, term == psi)
        });
        per_unit_ok &= matches_psi;
        lhs += term;
    }
    let rhs = u128::from(arith::euler_phi(n)) * sigma_cyclic(group);
    let mut rep = report(Identity::Eq3, group.name().to_string(), n, lhs, rhs, started);
    rep.ok &= per_unit_ok;
    rep
}

/// Cyclic specialization: `sum over units a of psi(Z_{gcd(a-1, n)})
/// = phi(n) sigma(n)`, with `psi(Z_m)` in closed form.
pub fn verify_corollary2(n: u64) -> IdentityReport {
    let started = Instant::now();
    let mut psi_by_m: BTreeMap<u64, u128> = BTreeMap::new();
    let lhs: u128 = arith::units_mod(n)
        .into_iter()
        .map(|a| {
            let m = arith::gcd(a - 1, n);
            *psi_by_m
                .entry(m)
                .or_insert_with(|| psi_cyclic_closed_form(m))
        })
        .sum();
    let rhs = u128::from(arith::euler_phi(n)) * u128::from(arith::sigma_divisor_sum(n));
    report(Identity::Corollary2, n.to_string(), n, lhs, rhs, started)
}

/// Bounds `(q/(p+1)) * S / phi(n) <= sigma(n) <= S / phi(n)` with
/// `S = sum over units a of gcd(a-1, n)^2` and `q`, `p` the smallest and
/// largest prime divisor of `n >= 2`.
///
/// Both inequalities are checked cross-multiplied:
/// `q S <= (p+1) phi(n) sigma(n)` and `phi(n) sigma(n) <= S`.
/// The report carries `lhs = S` and `rhs = phi(n) sigma(n)`.
///
/// Panics if `n < 2` (no prime divisors).
pub fn verify_corollary3(n: u64) -> IdentityReport {
    let started = Instant::now();
    let (q, p) = arith::extreme_prime_divisors(n);
    let unit_square_sum: u128 = arith::units_mod(n)
        .into_iter()
        .map(|a| {
            let g = u128::from(arith::gcd(a - 1, n));
            g * g
        })
        .sum();
    let phi_sigma = u128::from(arith::euler_phi(n)) * u128::from(arith::sigma_divisor_sum(n));
    let lower_ok = u128::from(q) * unit_square_sum <= (u128::from(p) + 1) * phi_sigma;
    let upper_ok = phi_sigma <= unit_square_sum;
    IdentityReport {
        identity: Identity::Corollary3,
        instance: n.to_string(),
        n,
        lhs: unit_square_sum,
        rhs: phi_sigma,
        ok: lower_ok && upper_ok,
        lower_ok: Some(lower_ok),
        upper_ok: Some(upper_ok),
        elapsed: started.elapsed(),
    }
}

/// The cyclic-psi bounds backing the upper half of the corollary:
/// `q n^2 <= (p+1) psi(Z_n)` and `psi(Z_n) <= n^2`, checked exactly.
///
/// The report carries `lhs = psi(Z_n)` and `rhs = n^2`.
///
/// Panics if `n < 2`.
pub fn psi_cyclic_bounds_check(n: u64) -> IdentityReport {
    let started = Instant::now();
    let (q, p) = arith::extreme_prime_divisors(n);
    let psi = psi_cyclic_closed_form(n);
    let n_squared = u128::from(n) * u128::from(n);
    let lower_ok = u128::from(q) * n_squared <= (u128::from(p) + 1) * psi;
    let upper_ok = psi <= n_squared;
    IdentityReport {
        identity: Identity::PsiCyclicBounds,
        instance: n.to_string(),
        n,
        lhs: psi,
        rhs: n_squared,
        ok: lower_ok && upper_ok,
        lower_ok: Some(lower_ok),
        upper_ok: Some(upper_ok),
        elapsed: started.elapsed(),
    }
}

/// Run the weighted orbit-count engine on the units action twice — once with
/// weight = element order, once with weight 1 — and check the results against
/// the independently computed `sigma(G)` and `|C(G)|`.
///
/// The report carries `lhs` = the engine's weighted orbit sum and
/// `rhs = sigma(G)`; `ok` also requires the unweighted run to balance and to
/// count `|C(G)|` orbits.
pub fn verify_burnside(group: &FiniteGroup) -> IdentityReport {
    let started = Instant::now();
    let n = group.order() as u64;
    let action = UnitsAction::new(group);
    let points: Vec<u64> = (0..n).collect();
    let apply = |a: u64, x: u64| group.power(group.element(x as usize), a).index() as u64;

    let weighted = weighted_burnside_check(action.units(), &points, apply, |x| {
        group.element_order(group.element(x as usize))
    })
    .expect("units action on a valid group");
    let unweighted = weighted_burnside_check(action.units(), &points, apply, |_| 1)
        .expect("units action on a valid group");

    let sigma = sigma_cyclic(group);
    let subgroup_count = u128::from(cyclic_subgroups(group).count());
    let ok = weighted.balanced
        && weighted.lhs == sigma
        && unweighted.balanced
        && unweighted.lhs == subgroup_count;
    IdentityReport {
        identity: Identity::Burnside,
        instance: group.name().to_string(),
        n,
        lhs: weighted.lhs,
        rhs: sigma,
        ok,
        lower_ok: None,
        upper_ok: None,
        elapsed: started.elapsed(),
    }
}
