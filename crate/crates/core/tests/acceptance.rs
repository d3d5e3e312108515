//! Acceptance suite for the library: every identity the crate promises,
//! verified exactly at full sweep scale. One pass/fail line is printed per
//! criterion (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Scale of the sweeps:
//! * moduli identities over `n` in `1..=2000` (`2..=2000` for the bounds),
//! * group identities over the standard catalog of all orders `<= 200`
//!   (cyclic to 200, abelian products to 128, dihedral to `D100`, dicyclic
//!   to `Dic50`, symmetric/alternating to degree 5).

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use menonforge_core::groups::DEFAULT_MAX_ORDER;
use menonforge_core::identities::{
    self, cyclic_subgroups, n_d_counts, psi_of_group, psi_of_subset, sigma_cyclic,
};
use menonforge_core::{action, arith, build_group, catalog, BurnsideError, FiniteGroup, UnitsAction};

fn checkpoint(criterion: &str, pass: bool, elapsed: Duration) {
    println!(
        "[acceptance] {criterion}: {} ({:.2?})",
        if pass { "PASS" } else { "FAIL" },
        elapsed
    );
    assert!(pass, "{criterion} failed");
}

fn catalog_groups() -> Vec<FiniteGroup> {
    catalog::standard_catalog()
        .iter()
        .map(|spec| build_group(spec, DEFAULT_MAX_ORDER).expect("catalog group builds"))
        .collect()
}

#[test]
fn criterion_1_menon_classical() {
    let started = Instant::now();
    let failures: Vec<u64> = (1..=2000)
        .filter(|&n| !identities::verify_menon_classical(n).ok)
        .collect();
    let elapsed = started.elapsed();
    checkpoint(
        "criterion 1: classical Menon identity, n in 1..=2000",
        failures.is_empty() && elapsed < Duration::from_secs(5),
        elapsed,
    );
    assert_eq!(failures, Vec::<u64>::new());
}

#[test]
fn criterion_2_group_identity_over_catalog() {
    let started = Instant::now();
    let groups = catalog_groups();
    assert!(groups.len() > 400);
    let failures: Vec<String> = groups
        .iter()
        .filter(|g| !identities::verify_theorem1(g).ok)
        .map(|g| g.name().to_string())
        .collect();
    let elapsed = started.elapsed();
    checkpoint(
        "criterion 2: group-level identity over the full catalog",
        failures.is_empty() && elapsed < Duration::from_secs(30),
        elapsed,
    );
    assert_eq!(failures, Vec::<String>::new());
}

#[test]
fn criterion_3_divisor_sum_form_per_unit() {
    let started = Instant::now();
    let mut pass = true;
    for g in catalog_groups() {
        let n = g.order() as u64;
        let nd = n_d_counts(&g);
        // psi(G_m) = sum over d | m of d phi(d) n_d(G), for every divisor m
        // of n; the per-unit terms of the two sweep forms are the cases
        // m = gcd(a - 1, n)
        let mut term_ok: BTreeMap<u64, bool> = BTreeMap::new();
        for m in arith::divisors(n) {
            let term: u128 = arith::divisors(m)
                .into_iter()
                .map(|d| {
                    u128::from(d)
                        * u128::from(arith::euler_phi(d))
                        * u128::from(nd.get(&d).copied().unwrap_or(0))
                })
                .sum();
            let matches = term == psi_of_subset(&g, &action::power_subset(&g, m));
            term_ok.insert(m, matches);
            pass &= matches;
        }
        for a in arith::units_mod(n) {
            pass &= term_ok[&arith::gcd(a - 1, n)];
        }
        pass &= identities::verify_eq3(&g).ok;
    }
    checkpoint(
        "criterion 3: divisor-sum form agrees per unit over the catalog",
        pass,
        started.elapsed(),
    );
}

#[test]
fn criterion_4_cyclic_specialization() {
    let started = Instant::now();
    let sweep_ok = (1..=2000).all(|n| identities::verify_corollary2(n).ok);
    let closed_form_ok = (1..=64u64).all(|m| {
        let spec = menonforge_core::parse_group_spec(&format!("C{m}")).unwrap();
        let g = build_group(&spec, DEFAULT_MAX_ORDER).unwrap();
        identities::psi_cyclic_closed_form(m) == psi_of_group(&g)
    });
    checkpoint(
        "criterion 4: cyclic specialization, n in 1..=2000, closed form to 64",
        sweep_ok && closed_form_ok,
        started.elapsed(),
    );
}

#[test]
fn criterion_5_divisor_sum_bounds() {
    let started = Instant::now();
    let corollary_ok = (2..=2000).all(|n| identities::verify_corollary3(n).ok);
    let psi_bounds_ok = (2..=2000).all(|n| identities::psi_cyclic_bounds_check(n).ok);
    checkpoint(
        "criterion 5: cross-multiplied bounds, n in 2..=2000",
        corollary_ok && psi_bounds_ok,
        started.elapsed(),
    );
}

#[test]
fn criterion_6_fixed_sets_and_orbits() {
    let started = Instant::now();
    let mut pass = true;
    for g in catalog_groups() {
        let n = g.order() as u64;
        let action = UnitsAction::new(&g);
        // Fix(a) = G_{gcd(a-1, n)} for every unit a
        for &a in action.units() {
            let fixed = action.fix_set(a);
            let subset = action::power_subset(&g, arith::gcd(a - 1, n));
            if fixed != subset {
                eprintln!("fix set mismatch: {} a={a}", g.name());
                pass = false;
            }
        }
        // orbit count = |C(G)|; orbits = generator sets of cyclic subgroups
        let census = cyclic_subgroups(&g);
        let orbits = action.orbits();
        pass &= orbits.orbit_count() as u64 == census.count();
        let generator_sets: HashSet<Vec<usize>> = census
            .subgroups
            .iter()
            .map(|h| {
                let d = h.len() as u64;
                h.iter()
                    .copied()
                    .filter(|&x| g.element_order(g.element(x)) == d)
                    .collect()
            })
            .collect();
        let orbit_sets: HashSet<Vec<usize>> = orbits.orbits.iter().cloned().collect();
        pass &= generator_sets == orbit_sets;
    }
    checkpoint(
        "criterion 6: fixed sets, orbit counts and generator sets over the catalog",
        pass,
        started.elapsed(),
    );
}

#[test]
fn criterion_7_weighted_orbit_count_engine() {
    let started = Instant::now();
    let mut pass = true;
    for g in catalog_groups() {
        let n = g.order() as u64;
        let action = UnitsAction::new(&g);
        let points: Vec<u64> = (0..n).collect();
        let apply = |a: u64, x: u64| g.power(g.element(x as usize), a).index() as u64;

        let weighted = action::weighted_burnside_check(action.units(), &points, apply, |x| {
            g.element_order(g.element(x as usize))
        })
        .expect("valid action");
        let unweighted =
            action::weighted_burnside_check(action.units(), &points, apply, |_| 1)
                .expect("valid action");
        pass &= weighted.balanced && weighted.lhs == sigma_cyclic(&g);
        pass &= unweighted.balanced && unweighted.lhs == u128::from(cyclic_subgroups(&g).count());
    }
    // a deliberately non-orbit-constant weight must be rejected up front
    let g = build_group(&menonforge_core::parse_group_spec("C4").unwrap(), 100).unwrap();
    let action = UnitsAction::new(&g);
    let points: Vec<u64> = (0..4).collect();
    let rejected = matches!(
        action::weighted_burnside_check(
            action.units(),
            &points,
            |a, x| g.power(g.element(x as usize), a).index() as u64,
            |x| x,
        ),
        Err(BurnsideError::WeightNotOrbitConstant { .. })
    );
    pass &= rejected;
    checkpoint(
        "criterion 7: weighted orbit-count engine over the catalog",
        pass,
        started.elapsed(),
    );
}

#[test]
fn criterion_8_internal_oracle_agreement() {
    let started = Instant::now();
    let mut pass = true;
    for g in catalog_groups() {
        // sigma two ways, computed here from the two independent paths
        let nd = n_d_counts(&g);
        let via_counts: u128 = nd.iter().map(|(&d, &c)| u128::from(d) * u128::from(c)).sum();
        let census = cyclic_subgroups(&g);
        let via_subgroups: u128 = census.subgroups.iter().map(|h| h.len() as u128).sum();
        pass &= via_counts == via_subgroups;
        pass &= nd == census.by_order;

        // n_d * phi(d) = number of elements of order d, exactly
        let mut order_census: BTreeMap<u64, u64> = BTreeMap::new();
        for x in g.elements() {
            *order_census.entry(g.element_order(x)).or_insert(0) += 1;
        }
        for (&d, &count) in &order_census {
            let phi = arith::euler_phi(d);
            pass &= count % phi == 0;
            pass &= nd.get(&d) == Some(&(count / phi));
        }

        // every element generates exactly one cyclic subgroup
        let weighted_total: u64 = nd.iter().map(|(&d, &c)| c * arith::euler_phi(d)).sum();
        pass &= weighted_total == g.order() as u64;
    }
    checkpoint(
        "criterion 8: sigma route agreement and census divisibility",
        pass,
        started.elapsed(),
    );
}
