//! Finite group construction and element arithmetic.
//!
//! Elements of a group of order `n` are the dense indices `0..n`, with the
//! identity canonicalized to index 0. Each family multiplies structurally
//! (cyclic: residues; products: mixed radix; dihedral/dicyclic:
//! rotation/flip pairs; symmetric/alternating: lexicographically ranked
//! permutations); no global Cayley table is materialized except for groups
//! loaded from table files.

mod perm;
mod spec;
mod table;

pub use perm::Perm;
pub use spec::{parse_group_spec, GroupSpec, SpecError};
pub use table::TableError;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::path::PathBuf;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith;

/// Hard default cap on group order; covers S7.
pub const DEFAULT_MAX_ORDER: u64 = 5040;

/// Full-scan associativity threshold; larger groups are spot-checked.
const ASSOC_EXHAUSTIVE_LIMIT: usize = 128;
const ASSOC_SAMPLE_TRIPLES: u64 = 1_000_000;
const ASSOC_SAMPLE_SEED: u64 = 0x0097_3df3;
const MAX_RECORDED_FAILURES: usize = 8;

/// An element handle: an index into `0..order` of the owning group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

/// An immutable finite group with elements `0..order` and identity 0.
pub struct FiniteGroup {
    name: String,
    order: usize,
    repr: Repr,
    orders: OnceLock<Vec<u64>>,
}

enum Repr {
    Cyclic {
        m: usize,
    },
    Product {
        parts: Vec<FiniteGroup>,
        // stride of each component in the mixed-radix element index
        strides: Vec<usize>,
    },
    Dihedral {
        m: usize,
    },
    Dicyclic {
        m: usize,
    },
    Permutation {
        elems: Vec<Perm>,
        index: HashMap<Perm, usize>,
    },
    Table {
        cells: Vec<usize>,
    },
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("group {name} has order {order}, above the cap {cap}")]
    OrderCapExceeded { name: String, order: u64, cap: u64 },
    #[error("permutation closure exceeded the order cap {cap}")]
    ClosureCapExceeded { cap: u64 },
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("`{path}` is not a group: {report}")]
    NotAGroup {
        path: PathBuf,
        report: ValidationReport,
    },
}

/// Build a validated group from a spec, refusing orders above `max_order`.
///
/// Catalog families are groups by construction; Cayley-table inputs are run
/// through [`validate_group`] and rejected on any axiom failure (including a
/// missing identity).
pub fn build_group(spec: &GroupSpec, max_order: u64) -> Result<FiniteGroup, BuildError> {
    let name = spec.canonical_name();
    if let Some(order) = spec.order_hint() {
        if order > max_order {
            return Err(BuildError::OrderCapExceeded {
                name,
                order,
                cap: max_order,
            });
        }
    }
    let group = match spec {
        GroupSpec::Cyclic(m) => FiniteGroup::new(name, *m as usize, Repr::Cyclic { m: *m as usize }),
        GroupSpec::Product(parts) => {
            let parts: Vec<FiniteGroup> = parts
                .iter()
                .map(|p| build_group(p, max_order))
                .collect::<Result<_, _>>()?;
            let mut strides = vec![1usize; parts.len()];
            let mut order = 1usize;
            for i in (0..parts.len()).rev() {
                strides[i] = order;
                order *= parts[i].order();
            }
            FiniteGroup::new(name, order, Repr::Product { parts, strides })
        }
        GroupSpec::Dihedral(m) => {
            let m = *m as usize;
            FiniteGroup::new(name, 2 * m, Repr::Dihedral { m })
        }
        GroupSpec::Dicyclic(m) => {
            let m = *m as usize;
            FiniteGroup::new(name, 4 * m, Repr::Dicyclic { m })
        }
        GroupSpec::Symmetric(k) => {
            let elems = perm::all_perms_lex(*k as usize);
            FiniteGroup::from_perms(name, elems)
        }
        GroupSpec::Alternating(k) => {
            let elems: Vec<Perm> = perm::all_perms_lex(*k as usize)
                .into_iter()
                .filter(Perm::is_even)
                .collect();
            FiniteGroup::from_perms(name, elems)
        }
        GroupSpec::Table(path) => {
            let raw = table::parse_table_file(path)?;
            let group = FiniteGroup::new(name, raw.order, Repr::Table { cells: raw.cells });
            if group.order() as u64 > max_order {
                return Err(BuildError::OrderCapExceeded {
                    name: group.name,
                    order: group.order as u64,
                    cap: max_order,
                });
            }
            let report = validate_group(&group);
            if !report.is_group() {
                return Err(BuildError::NotAGroup {
                    path: path.clone(),
                    report,
                });
            }
            group
        }
        GroupSpec::PermClosure(gens) => {
            let elems = close_generators(gens, max_order)?;
            FiniteGroup::from_perms(name, elems)
        }
    };
    if group.order() as u64 > max_order {
        return Err(BuildError::OrderCapExceeded {
            order: group.order as u64,
            name: group.name,
            cap: max_order,
        });
    }
    Ok(group)
}

/// Load the Cayley table at `path` without checking group axioms, so that
/// invalid tables can still be diagnosed via [`validate_group`].
pub fn load_cayley_table(path: &std::path::Path) -> Result<FiniteGroup, TableError> {
    let raw = table::parse_table_file(path)?;
    Ok(FiniteGroup::new(
        format!("table:{}", path.display()),
        raw.order,
        Repr::Table { cells: raw.cells },
    ))
}

// Breadth-first closure of the generators under composition, identity first.
fn close_generators(gens: &[Perm], max_order: u64) -> Result<Vec<Perm>, BuildError> {
    let degree = gens.iter().map(Perm::degree).max().unwrap_or(1);
    let gens: Vec<Perm> = gens.iter().map(|g| g.extended_to(degree)).collect();
    let identity = Perm::identity(degree);
    let mut elems = vec![identity.clone()];
    let mut seen: HashMap<Perm, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for gen in &gens {
            let next = elems[i].compose(gen);
            if !seen.contains_key(&next) {
                if elems.len() as u64 >= max_order {
                    return Err(BuildError::ClosureCapExceeded { cap: max_order });
                }
                seen.insert(next.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(next);
            }
        }
    }
    Ok(elems)
}

impl FiniteGroup {
    fn new(name: String, order: usize, repr: Repr) -> FiniteGroup {
        FiniteGroup {
            name,
            order,
            repr,
            orders: OnceLock::new(),
        }
    }

    fn from_perms(name: String, elems: Vec<Perm>) -> FiniteGroup {
        debug_assert!(elems[0].is_identity());
        let index = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let order = elems.len();
        FiniteGroup::new(name, order, Repr::Permutation { elems, index })
    }

    /// Canonical spec name this group was built from.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element (always index 0 after canonicalization).
    pub fn identity(&self) -> Element {
        Element(0)
    }

    /// Element with the given index.
    ///
    /// Panics if `index >= order`.
    pub fn element(&self, index: usize) -> Element {
        assert!(index < self.order, "element index {index} out of range");
        Element(index)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(Element)
    }

    /// Group product `x * y`.
    pub fn op(&self, x: Element, y: Element) -> Element {
        let (x, y) = (x.0, y.0);
        assert!(
            x < self.order && y < self.order,
            "element index out of range"
        );
        let z = match &self.repr {
            Repr::Cyclic { m } => (x + y) % m,
            Repr::Product { parts, strides } => {
                let mut z = 0;
                for (part, &stride) in parts.iter().zip(strides) {
                    let xi = x / stride % part.order();
                    let yi = y / stride % part.order();
                    z += part.op(Element(xi), Element(yi)).0 * stride;
                }
                z
            }
            Repr::Dihedral { m } => {
                // index = flip * m + rotation
                let (r1, f1) = (x % m, x / m);
                let (r2, f2) = (y % m, y / m);
                let r = if f1 == 0 {
                    (r1 + r2) % m
                } else {
                    (m + r1 - r2) % m
                };
                ((f1 + f2) % 2) * m + r
            }
            Repr::Dicyclic { m } => {
                // index = flip * 2m + rotation; the flip squares to rotation m
                let half = 2 * m;
                let (r1, f1) = (x % half, x / half);
                let (r2, f2) = (y % half, y / half);
                match (f1, f2) {
                    (0, f) => f * half + (r1 + r2) % half,
                    (_, 0) => half + (half + r1 - r2) % half,
                    (_, _) => (half + r1 - r2 + m) % half,
                }
            }
            Repr::Permutation { elems, index } => index[&elems[x].compose(&elems[y])],
            Repr::Table { cells } => cells[x * self.order + y],
        };
        Element(z)
    }

    /// `x` composed with itself `a` times by square-and-multiply;
    /// `power(x, 0)` is the identity.
    pub fn power(&self, x: Element, a: u64) -> Element {
        let mut result = Element(0);
        let mut base = x;
        let mut e = a;
        loop {
            if e & 1 == 1 {
                result = self.op(result, base);
            }
            e >>= 1;
            if e == 0 {
                return result;
            }
            base = self.op(base, base);
        }
    }

    pub fn inverse(&self, x: Element) -> Element {
        let i = x.0;
        assert!(i < self.order, "element index out of range");
        let z = match &self.repr {
            Repr::Cyclic { m } => (m - i) % m,
            Repr::Product { parts, strides } => {
                let mut z = 0;
                for (part, &stride) in parts.iter().zip(strides) {
                    let xi = i / stride % part.order();
                    z += part.inverse(Element(xi)).0 * stride;
                }
                z
            }
            Repr::Dihedral { m } => {
                let (r, f) = (i % m, i / m);
                if f == 0 {
                    (m - r) % m
                } else {
                    i // reflections are involutions
                }
            }
            Repr::Dicyclic { m } => {
                let half = 2 * m;
                let (r, f) = (i % half, i / half);
                if f == 0 {
                    (half - r) % half
                } else {
                    half + (r + m) % half
                }
            }
            Repr::Permutation { elems, index } => index[&elems[i].inverse()],
            Repr::Table { cells } => {
                let n = self.order;
                (0..n)
                    .find(|&j| cells[i * n + j] == 0 && cells[j * n + i] == 0)
                    .expect("element has no inverse; validate the table first")
            }
        };
        Element(z)
    }

    /// Least `d >= 1` with `x^d = identity`, found by scanning the divisors
    /// of the group order in ascending order.
    pub fn element_order(&self, x: Element) -> u64 {
        assert!(x.0 < self.order, "element index out of range");
        self.element_orders()[x.0]
    }

    /// Orders of all elements, indexed by element; computed once and cached.
    pub fn element_orders(&self) -> &[u64] {
        self.orders.get_or_init(|| {
            let divs = arith::divisors(self.order as u64);
            (0..self.order)
                .map(|i| {
                    *divs
                        .iter()
                        .find(|&&d| self.power(Element(i), d) == Element(0))
                        .expect("element order must divide the group order")
                })
                .collect()
        })
    }

    /// Underlying permutation of a symmetric/alternating/closure element.
    pub fn as_permutation(&self, x: Element) -> Option<&Perm> {
        match &self.repr {
            Repr::Permutation { elems, .. } => Some(&elems[x.0]),
            _ => None,
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

/// One structural failure found by [`validate_group`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomFailure {
    /// `op(0, x) != x` or `op(x, 0) != x`.
    IdentityLaw { x: usize },
    /// No `y` with `op(x, y) = op(y, x) = identity`.
    MissingInverse { x: usize },
    /// `op(op(x, y), z) != op(x, op(y, z))`.
    Associativity { x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::IdentityLaw { x } => {
                write!(f, "index 0 does not act as identity on {x}")
            }
            AxiomFailure::MissingInverse { x } => write!(f, "element {x} has no inverse"),
            AxiomFailure::Associativity { x, y, z } => {
                write!(f, "associativity fails on ({x}, {y}, {z})")
            }
        }
    }
}

/// How much of the `n^3` associativity space was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssociativityCoverage {
    Exhaustive { triples: u64 },
    Sampled { triples: u64, seed: u64 },
}

/// Structured result of [`validate_group`]; failures are capped at a small
/// count per axiom, with `truncated` set when more existed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub order: usize,
    pub failures: Vec<AxiomFailure>,
    pub associativity: AssociativityCoverage,
    pub truncated: bool,
}

impl ValidationReport {
    pub fn is_group(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_group() {
            return write!(f, "group axioms hold (order {})", self.order);
        }
        let descriptions: Vec<String> = self.failures.iter().map(AxiomFailure::to_string).collect();
        write!(f, "{}", descriptions.join("; "))?;
        if self.truncated {
            write!(f, "; further failures omitted")?;
        }
        Ok(())
    }
}

/// Check the group axioms on `g`: two-sided identity at index 0, existence of
/// inverses, and associativity (all `n^3` triples when `n <= 128`, otherwise
/// 1e6 seeded-uniform triples, with the coverage recorded in the report).
pub fn validate_group(g: &FiniteGroup) -> ValidationReport {
    let n = g.order();
    let mut failures = Vec::new();
    let mut truncated = false;
    let push = |failures: &mut Vec<AxiomFailure>, truncated: &mut bool, fail: AxiomFailure| {
        if failures.len() < MAX_RECORDED_FAILURES {
            failures.push(fail);
            true
        } else {
            *truncated = true;
            false
        }
    };

    let e = Element(0);
    for x in g.elements() {
        if (g.op(e, x) != x || g.op(x, e) != x)
            && !push(&mut failures, &mut truncated, AxiomFailure::IdentityLaw { x: x.0 }) {
                break;
            }
    }

    // Inverse scan is only meaningful against a genuine identity.
    let identity_ok = !failures
        .iter()
        .any(|f| matches!(f, AxiomFailure::IdentityLaw { .. }));
    if identity_ok {
        for x in g.elements() {
            let has_inverse = g
                .elements()
                .any(|y| g.op(x, y) == e && g.op(y, x) == e);
            if !has_inverse
                && !push(&mut failures, &mut truncated, AxiomFailure::MissingInverse { x: x.0 })
            {
                break;
            }
        }
    }

    let associativity;
    if n <= ASSOC_EXHAUSTIVE_LIMIT {
        associativity = AssociativityCoverage::Exhaustive {
            triples: (n as u64).pow(3),
        };
        'scan: for x in g.elements() {
            for y in g.elements() {
                let xy = g.op(x, y);
                for z in g.elements() {
                    if g.op(xy, z) != g.op(x, g.op(y, z)) {
                        let fail = AxiomFailure::Associativity {
                            x: x.0,
                            y: y.0,
                            z: z.0,
                        };
                        if !push(&mut failures, &mut truncated, fail) {
                            break 'scan;
                        }
                    }
                }
            }
        }
    } else {
        associativity = AssociativityCoverage::Sampled {
            triples: ASSOC_SAMPLE_TRIPLES,
            seed: ASSOC_SAMPLE_SEED,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SAMPLE_SEED);
        for _ in 0..ASSOC_SAMPLE_TRIPLES {
            let x = Element(rng.gen_range(0..n));
            let y = Element(rng.gen_range(0..n));
            let z = Element(rng.gen_range(0..n));
            if g.op(g.op(x, y), z) != g.op(x, g.op(y, z)) {
                let fail = AxiomFailure::Associativity {
                    x: x.0,
                    y: y.0,
                    z: z.0,
                };
                if !push(&mut failures, &mut truncated, fail) {
                    break;
                }
            }
        }
    }

    ValidationReport {
        order: n,
        failures,
        associativity,
        truncated,
    }
}
