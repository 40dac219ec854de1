use std::fmt;

use serde::{Deserialize, Serialize};

use super::JetError;

/// Highest derivative order of any potential jet coordinate.
pub const MAX_ORDER: u8 = 4;

/// Field labels of the potential multiplets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Field {
    /// electric potential `A_a`
    A,
    /// magnetic potential `C_a`
    C,
    /// complex potential `A_a + i C_a`
    Ac,
    /// its conjugate, treated as an independent field
    Acb,
}

impl Field {
    pub fn label(self) -> &'static str {
        match self {
            Field::A => "A",
            Field::C => "C",
            Field::Ac => "Ac",
            Field::Acb => "Acb",
        }
    }

    pub fn conjugate(self) -> Field {
        match self {
            Field::Ac => Field::Acb,
            Field::Acb => Field::Ac,
            f => f,
        }
    }
}

/// Sorted derivative multi-index, stored as counts per direction so that
/// every mixed partial has exactly one representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Derivs(pub [u8; 4]);

impl Derivs {
    pub fn none() -> Self {
        Derivs([0; 4])
    }

    pub fn from_dirs(dirs: &[usize]) -> Self {
        let mut c = [0u8; 4];
        for &d in dirs {
            c[d] += 1;
        }
        Derivs(c)
    }

    pub fn order(&self) -> u8 {
        self.0.iter().sum()
    }

    pub fn with(&self, dir: usize) -> Self {
        let mut c = self.0;
        c[dir] += 1;
        Derivs(c)
    }

    /// Directions in ascending order, with repetition.
    pub fn dirs(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.order() as usize);
        for (d, &n) in self.0.iter().enumerate() {
            for _ in 0..n {
                v.push(d);
            }
        }
        v
    }

    /// All multi-indices of exactly the given order.
    pub fn all_of_order(order: u8) -> Vec<Derivs> {
        let mut out = Vec::new();
        for a in 0..=order {
            for b in 0..=order - a {
                for c in 0..=order - a - b {
                    let d = order - a - b - c;
                    out.push(Derivs([a, b, c, d]));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Derivs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.dirs() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A coordinate `u_{c,J}` of the jet space: one derivative of one component
/// of one potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetCoordinate {
    pub field: Field,
    pub component: u8,
    pub derivs: Derivs,
}

impl JetCoordinate {
    pub fn new(field: Field, component: usize, dirs: &[usize]) -> Self {
        debug_assert!(component < 4);
        Self {
            field,
            component: component as u8,
            derivs: Derivs::from_dirs(dirs),
        }
    }

    pub fn order(&self) -> u8 {
        self.derivs.order()
    }

    pub fn differentiate(&self, dir: usize) -> Result<Self, JetError> {
        if self.order() >= MAX_ORDER {
            return Err(JetError::OrderOverflow {
                coordinate: self.to_string(),
                max: MAX_ORDER,
            });
        }
        Ok(Self {
            derivs: self.derivs.with(dir),
            ..*self
        })
    }
}

impl fmt::Display for JetCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{};{}]", self.field.label(), self.component, self.derivs)
    }
}

/// A deferred magnetic field-strength symbol `G_{ab,K}` with `a < b`.
///
/// Expands to `C_{b,aK} - C_{a,bK}`; kept symbolic so that the duality
/// constraint can replace it by the matching derivative of `*F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrengthCoordinate {
    pub a: u8,
    pub b: u8,
    pub derivs: Derivs,
}

impl StrengthCoordinate {
    pub fn differentiate(&self, dir: usize) -> Result<Self, JetError> {
        if self.derivs.order() + 1 >= MAX_ORDER {
            return Err(JetError::OrderOverflow {
                coordinate: self.to_string(),
                max: MAX_ORDER,
            });
        }
        Ok(Self {
            derivs: self.derivs.with(dir),
            ..*self
        })
    }
}

impl fmt::Display for StrengthCoordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G[{}{};{}]", self.a, self.b, self.derivs)
    }
}

/// A polynomial variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// explicit spacetime coordinate `x^a`
    Coord(u8),
    Jet(JetCoordinate),
    Strength(StrengthCoordinate),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Coord(a) => write!(f, "x[{a}]"),
            Var::Jet(j) => j.fmt(f),
            Var::Strength(s) => s.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiindex_is_order_independent() {
        let a = JetCoordinate::new(Field::A, 0, &[2, 1, 2]);
        let b = JetCoordinate::new(Field::A, 0, &[1, 2, 2]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "A[0;122]");
    }

    #[test]
    fn differentiation_caps_at_four() {
        let j = JetCoordinate::new(Field::C, 3, &[0, 1, 2, 3]);
        assert!(matches!(j.differentiate(0), Err(JetError::OrderOverflow { .. })));
    }

    #[test]
    fn counts_multiindices() {
        assert_eq!(Derivs::all_of_order(0).len(), 1);
        assert_eq!(Derivs::all_of_order(1).len(), 4);
        assert_eq!(Derivs::all_of_order(2).len(), 10);
        assert_eq!(Derivs::all_of_order(3).len(), 20);
    }
}
