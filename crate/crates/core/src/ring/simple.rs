//! Literal lookup of simple (ADE) hypersurface normal forms.
//!
//! Matching is up to renaming variables and rescaling coefficients only;
//! no coordinate changes are attempted.

use std::fmt;

use serde::Serialize;

use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableEntry {
    /// `x^(n+1)` plus squares of the remaining variables.
    A(u32),
    /// `x^2 y + y^(n-1)` plus squares.
    D(u32),
    E6,
    E7,
    E8,
    /// `w^2` in two variables, one of them absent: countable type.
    CountableA1,
}

impl TableEntry {
    /// Dimension of the singularity category recorded for this entry.
    pub fn dimension(&self) -> u32 {
        match self {
            TableEntry::CountableA1 => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableEntry::A(n) => write!(f, "A{n}"),
            TableEntry::D(n) => write!(f, "D{n}"),
            TableEntry::E6 => write!(f, "E6"),
            TableEntry::E7 => write!(f, "E7"),
            TableEntry::E8 => write!(f, "E8"),
            TableEntry::CountableA1 => write!(f, "countable A-infinity (w^2 in two variables)"),
        }
    }
}

fn pure_power(m: &Monomial) -> Option<(usize, u32)> {
    let mut support = m.support();
    let i = support.next()?;
    if support.next().is_some() {
        return None;
    }
    Some((i, m.exps()[i]))
}

/// Classifies `f` against the table. Every variable must occur in `f`,
/// except for the single two-variable countable-type entry.
pub fn lookup(f: &Polynomial) -> Option<TableEntry> {
    let n = f.ring().nvars();
    if f.terms().iter().any(|(m, _)| m.degree() < 2) {
        return None;
    }
    let monos: Vec<&Monomial> = f.terms().iter().map(|(m, _)| m).collect();
    let used: Vec<usize> = (0..n).filter(|&i| f.uses_variable(i)).collect();

    if used.len() < n {
        if n == 2 && monos.len() == 1 && pure_power(monos[0]).is_some_and(|(_, e)| e == 2) {
            return Some(TableEntry::CountableA1);
        }
        return None;
    }

    // squares of variables that occur nowhere else
    let occurrences = |i: usize| monos.iter().filter(|m| m.exps()[i] > 0).count();
    let square_vars: Vec<usize> = monos
        .iter()
        .filter_map(|m| pure_power(m))
        .filter(|&(i, e)| e == 2 && occurrences(i) == 1)
        .map(|(i, _)| i)
        .collect();
    let core: Vec<&Monomial> = monos
        .iter()
        .copied()
        .filter(|m| !pure_power(m).is_some_and(|(i, e)| e == 2 && square_vars.contains(&i)))
        .collect();

    let core_vars: Vec<usize> = (0..n)
        .filter(|&i| core.iter().any(|m| m.exps()[i] > 0))
        .collect();

    match (core.len(), core_vars.len()) {
        (0, 0) if !square_vars.is_empty() => Some(TableEntry::A(1)),
        (1, 1) => {
            let (_, e) = pure_power(core[0])?;
            Some(TableEntry::A(e - 1))
        }
        (2, 2) => {
            let (x, y) = (core_vars[0], core_vars[1]);
            let exps: Vec<(u32, u32)> = core.iter().map(|m| (m.exps()[x], m.exps()[y])).collect();
            classify_two(&exps).or_else(|| {
                let swapped: Vec<(u32, u32)> = exps.iter().map(|&(a, b)| (b, a)).collect();
                classify_two(&swapped)
            })
        }
        _ => None,
    }
}

/// Two-term cores in variables `(x, y)`, given as exponent pairs.
fn classify_two(exps: &[(u32, u32)]) -> Option<TableEntry> {
    let has = |p: (u32, u32)| exps.contains(&p);
    // x^2 y + y^k
    if has((2, 1)) {
        let other = exps.iter().find(|&&p| p != (2, 1))?;
        if other.0 == 0 && other.1 >= 3 {
            return Some(TableEntry::D(other.1 + 1));
        }
    }
    if has((3, 0)) && has((1, 3)) {
        return Some(TableEntry::E7);
    }
    if has((3, 0)) && has((0, 4)) {
        return Some(TableEntry::E6);
    }
    if has((3, 0)) && has((0, 5)) {
        return Some(TableEntry::E8);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    fn look(vars: &[&str], f: &str) -> Option<TableEntry> {
        let r = PolyRing::rational(vars);
        lookup(&parse_polynomial(f, &r).unwrap())
    }

    #[test]
    fn ade_patterns() {
        assert_eq!(look(&["y"], "y^5"), Some(TableEntry::A(4)));
        assert_eq!(look(&["y"], "y^2"), Some(TableEntry::A(1)));
        assert_eq!(
            look(&["x", "y", "z"], "x^2 + 3*y^2 - z^2"),
            Some(TableEntry::A(1))
        );
        assert_eq!(
            look(&["x", "y", "z"], "x^4 + y^2 + z^2"),
            Some(TableEntry::A(3))
        );
        assert_eq!(look(&["x", "y"], "x^2*y + y^4"), Some(TableEntry::D(5)));
        assert_eq!(look(&["x", "y"], "y^2*x - 2*x^3"), Some(TableEntry::D(4)));
        assert_eq!(look(&["x", "y"], "x^3 + y^4"), Some(TableEntry::E6));
        assert_eq!(
            look(&["u", "v", "w"], "v^3 + v*u^3 + w^2"),
            Some(TableEntry::E7)
        );
        assert_eq!(look(&["x", "y"], "y^3 - x^5"), Some(TableEntry::E8));
    }

    #[test]
    fn countable_entry_and_misses() {
        assert_eq!(look(&["z", "w"], "w^2"), Some(TableEntry::CountableA1));
        assert_eq!(look(&["x", "y"], "x^3 + y^6"), None);
        assert_eq!(look(&["x", "y", "z"], "x^2 + y^2"), None);
        assert_eq!(look(&["x", "y"], "x*y + x^3"), None);
        assert_eq!(look(&["x"], "x"), None);
    }
}
