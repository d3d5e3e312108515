//! Enumeration of sweep targets: parametric family ranges, abelian products,
//! and the standard small-order catalog the default verification sweep runs
//! over.

use thiserror::Error;

use crate::groups::GroupSpec;

/// Parametric group families addressable in sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
        }
    }

    fn parameter_range(self) -> (u64, u64) {
        match self {
            Family::Cyclic | Family::Dihedral => (1, u64::MAX),
            Family::Dicyclic => (2, u64::MAX),
            Family::Symmetric | Family::Alternating => (1, 7),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RangeError {
    #[error("empty parameter range {lo}..{hi}")]
    Empty { lo: u64, hi: u64 },
    #[error("{family} parameter must lie in {min}..={max}, got {value}")]
    OutOfRange {
        family: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },
}

/// Specs for `family` over the inclusive parameter range `lo..=hi`.
pub fn family_specs(family: Family, lo: u64, hi: u64) -> Result<Vec<GroupSpec>, RangeError> {
    if lo > hi {
        return Err(RangeError::Empty { lo, hi });
    }
    let (min, max) = family.parameter_range();
    for bound in [lo, hi] {
        if bound < min || bound > max {
            return Err(RangeError::OutOfRange {
                family: family.name(),
                value: bound,
                min,
                max,
            });
        }
    }
    Ok((lo..=hi)
        .map(|m| match family {
            Family::Cyclic => GroupSpec::Cyclic(m),
            Family::Dihedral => GroupSpec::Dihedral(m),
            Family::Dicyclic => GroupSpec::Dicyclic(m),
            Family::Symmetric => GroupSpec::Symmetric(m as u32),
            Family::Alternating => GroupSpec::Alternating(m as u32),
        })
        .collect())
}

/// All products of two or more cyclic factors `C_{m_1} x ... x C_{m_k}` with
/// nondecreasing factors `m_i >= 2` and order in `min_order..=max_order`.
///
/// Up to isomorphism this covers every non-cyclic abelian group in range
/// (some orders repeat under different factorizations; they are verified as
/// written).
pub fn abelian_product_specs(min_order: u64, max_order: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    let mut factors = Vec::new();
    fn recurse(
        factors: &mut Vec<u64>,
        product: u64,
        min_factor: u64,
        min_order: u64,
        max_order: u64,
        out: &mut Vec<GroupSpec>,
    ) {
        let mut f = min_factor;
        while product * f <= max_order {
            factors.push(f);
            let product = product * f;
            if factors.len() >= 2 && product >= min_order {
                out.push(GroupSpec::Product(
                    factors.iter().map(|&m| GroupSpec::Cyclic(m)).collect(),
                ));
            }
            recurse(factors, product, f, min_order, max_order, out);
            factors.pop();
            f += 1;
        }
    }
    recurse(&mut factors, 1, 2, min_order, max_order, &mut out);
    out
}

/// The standard sweep catalog of groups of order at most 200: cyclic groups
/// to order 200, abelian products to order 128, dihedral groups to `D100`,
/// dicyclic groups to `Dic50`, and the symmetric and alternating groups to
/// degree 5.
pub fn standard_catalog() -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    specs.extend(family_specs(Family::Cyclic, 1, 200).unwrap());
    specs.extend(abelian_product_specs(1, 128));
    specs.extend(family_specs(Family::Dihedral, 1, 100).unwrap());
    specs.extend(family_specs(Family::Dicyclic, 2, 50).unwrap());
    specs.extend(family_specs(Family::Symmetric, 1, 5).unwrap());
    specs.extend(family_specs(Family::Alternating, 1, 5).unwrap());
    specs
}
