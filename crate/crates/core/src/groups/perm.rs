//! Permutations of `0..degree`, used by the symmetric/alternating families and
//! by generator-closure groups.

use std::fmt;

/// A permutation of the points `0..degree`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    /// The identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Perm {
        Perm {
            map: (0..degree).collect(),
        }
    }

    /// Build from an image table; `map[i]` is the image of point `i`.
    pub fn from_mapping(map: Vec<usize>) -> Result<Perm, String> {
        let mut seen = vec![false; map.len()];
        for &img in &map {
            if img >= map.len() {
                return Err(format!("image {img} out of range for degree {}", map.len()));
            }
            if seen[img] {
                return Err(format!("image {img} repeated; not a bijection"));
            }
            seen[img] = true;
        }
        Ok(Perm { map })
    }

    /// Build from disjoint cycles over 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, String> {
        let mut map: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(format!("point {pt} out of range for degree {degree}"));
                }
                if moved[pt] {
                    return Err(format!("point {pt} appears in more than one cycle"));
                }
                moved[pt] = true;
                map[pt] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.map[point]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `(self * other)(i) = self(other(i))` — `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &img) in self.map.iter().enumerate() {
            inv[img] = i;
        }
        Perm { map: inv }
    }

    /// Parity: true iff the permutation is a product of an even number of
    /// transpositions.
    pub fn is_even(&self) -> bool {
        let swaps: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        swaps.is_multiple_of(2)
    }

    /// Nontrivial cycles, each rotated to start at its smallest point, ordered
    /// by that point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut cycles = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.map[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.map[next];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Same permutation on a larger point set; the new points are fixed.
    pub fn extended_to(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut map = self.map.clone();
        map.extend(self.degree()..degree);
        Perm { map }
    }
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// All permutations of `0..degree` in lexicographic order of their image tables.
pub fn all_perms_lex(degree: usize) -> Vec<Perm> {
    let mut current: Vec<usize> = (0..degree).collect();
    let mut out = vec![Perm {
        map: current.clone(),
    }];
    while next_permutation(&mut current) {
        out.push(Perm {
            map: current.clone(),
        });
    }
    out
}

// Standard in-place next-permutation; returns false once `v` is the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        // a: 0->1->2->0, b: swap 0,1
        let a = Perm::from_mapping(vec![1, 2, 0]).unwrap();
        let b = Perm::from_mapping(vec![1, 0, 2]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), a.apply(b.apply(0)));
        assert_eq!(ab.apply(1), a.apply(b.apply(1)));
    }

    #[test]
    fn inverse_round_trip() {
        let p = Perm::from_mapping(vec![3, 0, 4, 1, 2]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn from_mapping_rejects_non_bijections() {
        assert!(Perm::from_mapping(vec![0, 0]).is_err());
        assert!(Perm::from_mapping(vec![2, 0]).is_err());
    }

    #[test]
    fn from_cycles_rejects_repeats() {
        assert!(Perm::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Perm::from_cycles(2, &[vec![0, 5]]).is_err());
    }

    #[test]
    fn parity() {
        assert!(Perm::identity(4).is_even());
        assert!(!Perm::from_cycles(3, &[vec![0, 1]]).unwrap().is_even());
        assert!(Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap().is_even());
    }

    #[test]
    fn lex_enumeration() {
        let perms = all_perms_lex(3);
        assert_eq!(perms.len(), 6);
        assert!(perms[0].is_identity());
        let maps: Vec<Vec<usize>> = perms.iter().map(|p| p.map.clone()).collect();
        let mut sorted = maps.clone();
        sorted.sort();
        assert_eq!(maps, sorted);
        assert_eq!(all_perms_lex(0).len(), 1);
        assert_eq!(all_perms_lex(1).len(), 1);
    }

    #[test]
    fn display_cycle_notation() {
        let p = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(Perm::identity(3).to_string(), "()");
    }
}
