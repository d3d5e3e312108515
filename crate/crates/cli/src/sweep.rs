//! Sweep target generation and the worker pool.

use menonforge_core::catalog::{self, Family};
use menonforge_core::identities::{
    psi_cyclic_bounds_check, verify_burnside, verify_corollary2, verify_corollary3, verify_eq3,
    verify_menon_classical, verify_theorem1,
};
use menonforge_core::{build_group, GroupSpec, Identity, IdentityReport};

use crate::{FamilyArg, IdentityArg, UsageError};

/// A single unit of sweep work: one identity on one target.
pub enum WorkItem {
    Modulus(Identity, u64),
    Group(Identity, GroupSpec),
}

const MODULUS_IDENTITIES: &[Identity] = &[
    Identity::MenonClassical,
    Identity::Corollary2,
    Identity::Corollary3,
    Identity::PsiCyclicBounds,
];
const GROUP_IDENTITIES: &[Identity] = &[Identity::Theorem1, Identity::Eq3, Identity::Burnside];

/// True for identities defined only on moduli with a prime divisor.
fn needs_n_at_least_2(identity: Identity) -> bool {
    matches!(identity, Identity::Corollary3 | Identity::PsiCyclicBounds)
}

pub fn modulus_items(
    identity: IdentityArg,
    lo: u64,
    hi: u64,
) -> Result<Vec<WorkItem>, UsageError> {
    if lo < 1 || lo > hi {
        return Err(UsageError(format!("modulus range {lo}..{hi} is empty or starts below 1")));
    }
    let selected: Vec<Identity> = match identity.concrete() {
        None => MODULUS_IDENTITIES.to_vec(),
        Some(id) if MODULUS_IDENTITIES.contains(&id) => vec![id],
        Some(id) => {
            return Err(UsageError(format!(
                "identity `{id}` applies to group specs, not moduli"
            )))
        }
    };
    // under `all`, bounded identities silently skip n = 1; when asked for
    // explicitly they reject a range that includes it
    if identity.concrete().is_some() {
        if let Some(&id) = selected.iter().find(|&&id| needs_n_at_least_2(id)) {
            if lo < 2 {
                return Err(UsageError(format!("identity `{id}` needs moduli >= 2")));
            }
        }
    }
    let mut items = Vec::new();
    for n in lo..=hi {
        for &id in &selected {
            if n < 2 && needs_n_at_least_2(id) {
                continue;
            }
            items.push(WorkItem::Modulus(id, n));
        }
    }
    Ok(items)
}

pub fn family_items(
    identity: IdentityArg,
    family: FamilyArg,
    param: Option<(u64, u64)>,
    max_order: u64,
) -> Result<Vec<WorkItem>, UsageError> {
    let selected: Vec<Identity> = match identity.concrete() {
        None => GROUP_IDENTITIES.to_vec(),
        Some(id) if GROUP_IDENTITIES.contains(&id) => vec![id],
        Some(id) => {
            return Err(UsageError(format!(
                "identity `{id}` applies to moduli, not group specs"
            )))
        }
    };
    let specs = family_specs(family, param, max_order)?;
    for spec in &specs {
        if let Some(order) = spec.order_hint() {
            if order > max_order {
                return Err(UsageError(format!(
                    "{spec} has order {order}, above the cap {max_order}; raise --max-order"
                )));
            }
        }
    }
    let mut items = Vec::new();
    for spec in specs {
        for &id in &selected {
            items.push(WorkItem::Group(id, spec.clone()));
        }
    }
    Ok(items)
}

fn family_specs(
    family: FamilyArg,
    param: Option<(u64, u64)>,
    max_order: u64,
) -> Result<Vec<GroupSpec>, UsageError> {
    let parametric = |f: Family| {
        let (lo, hi) =
            param.ok_or_else(|| UsageError(format!("--family {} needs --param A..B", f.name())))?;
        catalog::family_specs(f, lo, hi).map_err(|e| UsageError(e.to_string()))
    };
    match family {
        FamilyArg::Cyclic => parametric(Family::Cyclic),
        FamilyArg::Dihedral => parametric(Family::Dihedral),
        FamilyArg::Dicyclic => parametric(Family::Dicyclic),
        FamilyArg::Symmetric => parametric(Family::Symmetric),
        FamilyArg::Alternating => parametric(Family::Alternating),
        FamilyArg::Abelian => {
            let (lo, hi) = param
                .ok_or_else(|| UsageError("--family abelian needs --param A..B (an order range)".into()))?;
            if hi > max_order {
                return Err(UsageError(format!(
                    "abelian order range reaches {hi}, above the cap {max_order}"
                )));
            }
            Ok(catalog::abelian_product_specs(lo, hi))
        }
        FamilyArg::Catalog => {
            if param.is_some() {
                return Err(UsageError("--family catalog takes no --param".into()));
            }
            Ok(catalog::standard_catalog())
        }
    }
}

pub fn execute(item: &WorkItem, max_order: u64) -> IdentityReport {
    match item {
        WorkItem::Modulus(id, n) => match id {
            Identity::MenonClassical => verify_menon_classical(*n),
            Identity::Corollary2 => verify_corollary2(*n),
            Identity::Corollary3 => verify_corollary3(*n),
            Identity::PsiCyclicBounds => psi_cyclic_bounds_check(*n),
            other => unreachable!("{other} is not a modulus identity"),
        },
        WorkItem::Group(id, spec) => {
            let group = build_group(spec, max_order).expect("sweep targets are pre-checked");
            match id {
                Identity::Theorem1 => verify_theorem1(&group),
                Identity::Eq3 => verify_eq3(&group),
                Identity::Burnside => verify_burnside(&group),
                other => unreachable!("{other} is not a group identity"),
            }
        }
    }
}

/// Fan `items` out over `jobs` workers; results come back in input order.
pub fn run_parallel<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut indexed: Vec<(usize, R)> = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        let Some(item) = items.get(i) else { break };
                        local.push((i, f(item)));
                    }
                    local
                })
            })
            .collect();
        workers
            .into_iter()
            .flat_map(|w| w.join().expect("worker panicked"))
            .collect()
    });
    indexed.sort_by_key(|&(i, _)| i);
    indexed.into_iter().map(|(_, r)| r).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_on_moduli_skips_bounded_identities_at_1() {
        let items = modulus_items(IdentityArg::All, 1, 1).unwrap();
        assert_eq!(items.len(), 2); // menon + corollary2 only
        let items = modulus_items(IdentityArg::All, 1, 2).unwrap();
        assert_eq!(items.len(), 6);
    }

    #[test]
    fn explicit_bounded_identity_rejects_n1() {
        assert!(modulus_items(IdentityArg::Corollary3, 1, 10).is_err());
        assert!(modulus_items(IdentityArg::Corollary3, 2, 10).is_ok());
        assert!(modulus_items(IdentityArg::PsiBounds, 1, 10).is_err());
    }

    #[test]
    fn identity_target_mismatch() {
        assert!(modulus_items(IdentityArg::Theorem1, 1, 10).is_err());
        assert!(family_items(IdentityArg::Menon, FamilyArg::Cyclic, Some((1, 5)), 5040).is_err());
    }

    #[test]
    fn family_cap_checked_up_front() {
        let err = family_items(IdentityArg::Theorem1, FamilyArg::Symmetric, Some((1, 7)), 100);
        assert!(err.is_err());
        let ok = family_items(IdentityArg::Theorem1, FamilyArg::Symmetric, Some((1, 4)), 100);
        assert_eq!(ok.unwrap().len(), 4);
    }

    #[test]
    fn catalog_family_takes_no_param() {
        assert!(family_items(IdentityArg::All, FamilyArg::Catalog, Some((1, 2)), 5040).is_err());
        let items = family_items(IdentityArg::Theorem1, FamilyArg::Catalog, None, 5040).unwrap();
        assert!(items.len() > 400);
    }

    #[test]
    fn parallel_results_keep_input_order() {
        let items: Vec<u64> = (0..100).collect();
        let doubled = run_parallel(&items, 4, |&x| 2 * x);
        assert_eq!(doubled, items.iter().map(|x| 2 * x).collect::<Vec<_>>());
    }
}
