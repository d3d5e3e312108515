//! Group family descriptors and the spec grammar.
//!
//! Grammar: `C<m>`, `D<m>` (order 2m), `Dic<m>` (order 4m), `Q8` (alias for
//! `Dic2`), `S<k>`, `A<k>`, `x`-separated products such as `C2xC4`,
//! `table:<path>` for a Cayley table file, and `perm:<gen>;<gen>;...` where
//! each generator is written in cycle notation over 1-based points, e.g.
//! `perm:(1 2 3);(1 2)`.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use super::perm::Perm;

/// Parsed descriptor of a finite group instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of order `m >= 1`.
    Cyclic(u64),
    /// Direct product of the component groups.
    Product(Vec<GroupSpec>),
    /// Dihedral group with `m >= 1` rotations (order `2m`).
    Dihedral(u64),
    /// Dicyclic group of order `4m`, `m >= 2`. `Dic2` is the quaternion group.
    Dicyclic(u64),
    /// Symmetric group on `k` points, `1 <= k <= 7`.
    Symmetric(u32),
    /// Alternating group on `k` points, `1 <= k <= 7`.
    Alternating(u32),
    /// Group given by a Cayley table file.
    Table(PathBuf),
    /// Closure of the listed permutations under composition.
    PermClosure(Vec<Perm>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("empty group spec")]
    Empty,
    #[error("unrecognized group family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter in `{token}`: {reason}")]
    BadParameter { token: String, reason: String },
    #[error("bad permutation spec: {0}")]
    BadPermutation(String),
    #[error("missing path after `table:`")]
    EmptyTablePath,
}

impl GroupSpec {
    /// Canonical spelling; parses back to an equal spec (`Q8` canonicalizes
    /// to `Dic2`).
    pub fn canonical_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(m) => format!("C{m}"),
            GroupSpec::Product(parts) => parts
                .iter()
                .map(GroupSpec::canonical_name)
                .collect::<Vec<_>>()
                .join("x"),
            GroupSpec::Dihedral(m) => format!("D{m}"),
            GroupSpec::Dicyclic(m) => format!("Dic{m}"),
            GroupSpec::Symmetric(k) => format!("S{k}"),
            GroupSpec::Alternating(k) => format!("A{k}"),
            GroupSpec::Table(path) => format!("table:{}", path.display()),
            GroupSpec::PermClosure(gens) => {
                let body = gens
                    .iter()
                    .map(Perm::to_string)
                    .collect::<Vec<_>>()
                    .join(";");
                format!("perm:{body}")
            }
        }
    }

    /// Group order when the spec alone determines it (`None` for table files
    /// and permutation closures, whose order is known only after building).
    pub fn order_hint(&self) -> Option<u64> {
        match self {
            GroupSpec::Cyclic(m) => Some(*m),
            GroupSpec::Product(parts) => {
                let mut order = 1u64;
                for part in parts {
                    order = order.checked_mul(part.order_hint()?)?;
                }
                Some(order)
            }
            GroupSpec::Dihedral(m) => Some(2 * m),
            GroupSpec::Dicyclic(m) => Some(4 * m),
            GroupSpec::Symmetric(k) => Some(factorial(*k)),
            GroupSpec::Alternating(k) => Some(factorial(*k).div_ceil(2)),
            GroupSpec::Table(_) | GroupSpec::PermClosure(_) => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_name())
    }
}

fn factorial(k: u32) -> u64 {
    (1..=u64::from(k)).product()
}

/// Parse the spec grammar described at module level.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(SpecError::Empty);
    }
    if let Some(path) = text.strip_prefix("table:") {
        if path.is_empty() {
            return Err(SpecError::EmptyTablePath);
        }
        return Ok(GroupSpec::Table(PathBuf::from(path)));
    }
    if let Some(gens) = text.strip_prefix("perm:") {
        return Ok(GroupSpec::PermClosure(parse_perm_generators(gens)?));
    }
    let atoms: Vec<GroupSpec> = text
        .split('x')
        .map(|tok| parse_atom(tok.trim()))
        .collect::<Result<_, _>>()?;
    if atoms.len() == 1 {
        Ok(atoms.into_iter().next().unwrap())
    } else {
        Ok(GroupSpec::Product(atoms))
    }
}

fn parse_atom(token: &str) -> Result<GroupSpec, SpecError> {
    if token.is_empty() {
        return Err(SpecError::Empty);
    }
    if token == "Q8" {
        return Ok(GroupSpec::Dicyclic(2));
    }
    let (family, digits) = if let Some(rest) = token.strip_prefix("Dic") {
        ("Dic", rest)
    } else {
        match token.split_at(1) {
            (f @ ("C" | "D" | "S" | "A"), rest) => (f, rest),
            _ => return Err(SpecError::UnknownFamily(token.to_string())),
        }
    };
    let param: u64 = digits.parse().map_err(|_| SpecError::BadParameter {
        token: token.to_string(),
        reason: format!("`{digits}` is not a positive integer"),
    })?;
    let out_of_range = |reason: &str| SpecError::BadParameter {
        token: token.to_string(),
        reason: reason.to_string(),
    };
    match family {
        "C" if param >= 1 => Ok(GroupSpec::Cyclic(param)),
        "C" => Err(out_of_range("cyclic groups need m >= 1")),
        "D" if param >= 1 => Ok(GroupSpec::Dihedral(param)),
        "D" => Err(out_of_range("dihedral groups need m >= 1")),
        "Dic" if param >= 2 => Ok(GroupSpec::Dicyclic(param)),
        "Dic" => Err(out_of_range("dicyclic groups need m >= 2")),
        "S" if (1..=7).contains(&param) => Ok(GroupSpec::Symmetric(param as u32)),
        "S" => Err(out_of_range("symmetric groups support 1 <= k <= 7")),
        "A" if (1..=7).contains(&param) => Ok(GroupSpec::Alternating(param as u32)),
        "A" => Err(out_of_range("alternating groups support 1 <= k <= 7")),
        _ => unreachable!(),
    }
}

// Generators are ';'-separated; each is a concatenation of parenthesized
// cycles over 1-based points, `()` meaning the identity.
fn parse_perm_generators(text: &str) -> Result<Vec<Perm>, SpecError> {
    let bad = |msg: String| SpecError::BadPermutation(msg);
    let mut cycles_per_gen: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 0usize;
    for gen_text in text.split(';') {
        let gen_text = gen_text.trim();
        if gen_text.is_empty() {
            return Err(bad("empty generator".to_string()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = gen_text;
        while !rest.is_empty() {
            let Some(after_open) = rest.strip_prefix('(') else {
                return Err(bad(format!("expected `(` at `{rest}`")));
            };
            let Some(close) = after_open.find(')') else {
                return Err(bad(format!("unclosed cycle in `{gen_text}`")));
            };
            let body = &after_open[..close];
            let mut cycle = Vec::new();
            for word in body.split_whitespace() {
                let point: usize = word
                    .parse()
                    .map_err(|_| bad(format!("`{word}` is not a point")))?;
                if point == 0 {
                    return Err(bad("points are 1-based".to_string()));
                }
                max_point = max_point.max(point);
                cycle.push(point - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = after_open[close + 1..].trim_start();
        }
        cycles_per_gen.push(cycles);
    }
    let degree = max_point.max(1);
    cycles_per_gen
        .into_iter()
        .map(|cycles| Perm::from_cycles(degree, &cycles).map_err(bad))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms() {
        assert_eq!(parse_group_spec("C12").unwrap(), GroupSpec::Cyclic(12));
        assert_eq!(parse_group_spec("D5").unwrap(), GroupSpec::Dihedral(5));
        assert_eq!(parse_group_spec("Dic3").unwrap(), GroupSpec::Dicyclic(3));
        assert_eq!(parse_group_spec("Q8").unwrap(), GroupSpec::Dicyclic(2));
        assert_eq!(parse_group_spec("S4").unwrap(), GroupSpec::Symmetric(4));
        assert_eq!(parse_group_spec("A5").unwrap(), GroupSpec::Alternating(5));
    }

    #[test]
    fn products() {
        assert_eq!(
            parse_group_spec("C2xC4").unwrap(),
            GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)])
        );
        assert_eq!(
            parse_group_spec("C2xS3xD4").unwrap(),
            GroupSpec::Product(vec![
                GroupSpec::Cyclic(2),
                GroupSpec::Symmetric(3),
                GroupSpec::Dihedral(4),
            ])
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_group_spec(""), Err(SpecError::Empty));
        assert!(matches!(
            parse_group_spec("Z5"),
            Err(SpecError::UnknownFamily(_))
        ));
        assert!(matches!(
            parse_group_spec("C0"),
            Err(SpecError::BadParameter { .. })
        ));
        assert!(matches!(
            parse_group_spec("S8"),
            Err(SpecError::BadParameter { .. })
        ));
        assert!(matches!(
            parse_group_spec("Dic1"),
            Err(SpecError::BadParameter { .. })
        ));
        assert!(matches!(
            parse_group_spec("C"),
            Err(SpecError::BadParameter { .. })
        ));
        assert_eq!(parse_group_spec("table:"), Err(SpecError::EmptyTablePath));
    }

    #[test]
    fn perm_specs() {
        let spec = parse_group_spec("perm:(1 2 3);(1 2)").unwrap();
        let GroupSpec::PermClosure(gens) = &spec else {
            panic!("expected perm closure");
        };
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].degree(), 3);
        assert_eq!(gens[0].apply(0), 1);
        assert_eq!(gens[1].apply(2), 2);

        // a generator written as a product of two cycles
        let spec = parse_group_spec("perm:(1 2)(3 4)").unwrap();
        let GroupSpec::PermClosure(gens) = &spec else {
            panic!("expected perm closure");
        };
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].apply(2), 3);

        assert!(parse_group_spec("perm:(1 2").is_err());
        assert!(parse_group_spec("perm:(0 1)").is_err());
        assert!(parse_group_spec("perm:(1 1)").is_err());
        assert!(parse_group_spec("perm:").is_err());
    }

    #[test]
    fn canonical_names_round_trip() {
        for name in ["C12", "C2xC4", "D9", "Dic2", "S7", "A4", "C2xS3xD4"] {
            let spec = parse_group_spec(name).unwrap();
            assert_eq!(spec.canonical_name(), name);
            assert_eq!(parse_group_spec(&spec.canonical_name()).unwrap(), spec);
        }
        // Q8 is an alias; its canonical spelling is Dic2.
        let q8 = parse_group_spec("Q8").unwrap();
        assert_eq!(q8.canonical_name(), "Dic2");
        assert_eq!(parse_group_spec("Dic2").unwrap(), q8);
        // perm specs reach a canonical fixed point after one round trip
        let spec = parse_group_spec("perm:(2 3 1);(1 2)").unwrap();
        let name = spec.canonical_name();
        assert_eq!(name, "perm:(1 2 3);(1 2)");
        assert_eq!(parse_group_spec(&name).unwrap().canonical_name(), name);
    }

    #[test]
    fn order_hints() {
        assert_eq!(parse_group_spec("C12").unwrap().order_hint(), Some(12));
        assert_eq!(parse_group_spec("D5").unwrap().order_hint(), Some(10));
        assert_eq!(parse_group_spec("Q8").unwrap().order_hint(), Some(8));
        assert_eq!(parse_group_spec("S7").unwrap().order_hint(), Some(5040));
        assert_eq!(parse_group_spec("A7").unwrap().order_hint(), Some(2520));
        assert_eq!(parse_group_spec("A1").unwrap().order_hint(), Some(1));
        assert_eq!(parse_group_spec("C2xC4").unwrap().order_hint(), Some(8));
        assert_eq!(
            parse_group_spec("perm:(1 2)").unwrap().order_hint(),
            None
        );
    }
}
