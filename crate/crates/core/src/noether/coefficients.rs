use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ring::{q, Rational};

/// Numeric coefficients of the symmetry generator, boundary term and
/// modified current. The defaults are the correct values; the mutation
/// harness perturbs one at a time to prove the identity checks can fail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    /// `U_ab^c` coefficient of `delta G^de_,b F_de`.
    pub u_first: Rational,
    /// `U_ab^c` coefficient of `delta F^de_,b G_de`.
    pub u_second: Rational,
    /// `Q_abc = q G_c(a,b)`.
    pub q: Rational,
    /// `P_abc = p F_c(a,b)`.
    pub p: Rational,
    /// Modified current coefficient of `G_(a^e kappa_b)e^cd M_d`.
    pub zmod_g: Rational,
    /// Modified current coefficient of `F_(a^e kappa_b)e^cd N_d`.
    pub zmod_f: Rational,
    /// Keep the `delta` terms of the trivial difference current.
    pub delta_terms: bool,
    /// Sign `s` in the complex characteristic `s 4i F_c(a,b)`.
    pub complex_q_sign: i64,
}

impl Default for Coefficients {
    fn default() -> Self {
        Self {
            u_first: q(-1, 2),
            u_second: q(1, 2),
            q: q(-2, 1),
            p: q(2, 1),
            zmod_g: q(4, 1),
            zmod_f: q(-4, 1),
            delta_terms: true,
            complex_q_sign: 1,
        }
    }
}

/// A documented single-coefficient mutation and the identity it must break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// `U`: `-1/2 -> -1` on the first term.
    BoundaryTerm,
    /// `Q`: `-2 -> -1`.
    Characteristic,
    /// modified current: `4 -> 2` on the `G M` term.
    ModifiedCurrent,
    /// trivial difference current without its `delta` terms.
    DropDeltaTerms,
    /// complex characteristic with the opposite overall sign.
    ComplexCharacteristicSign,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::BoundaryTerm,
        Mutation::Characteristic,
        Mutation::ModifiedCurrent,
        Mutation::DropDeltaTerms,
        Mutation::ComplexCharacteristicSign,
    ];

    pub fn apply(self, c: Coefficients) -> Coefficients {
        match self {
            Mutation::BoundaryTerm => Coefficients { u_first: q(-1, 1), ..c },
            Mutation::Characteristic => Coefficients { q: q(-1, 1), ..c },
            Mutation::ModifiedCurrent => Coefficients { zmod_g: q(2, 1), ..c },
            Mutation::DropDeltaTerms => Coefficients {
                delta_terms: false,
                ..c
            },
            Mutation::ComplexCharacteristicSign => Coefficients {
                complex_q_sign: -c.complex_q_sign,
                ..c
            },
        }
    }

    /// Identity that must report a nonzero witness under this mutation.
    pub fn target(self) -> &'static str {
        match self {
            Mutation::BoundaryTerm => "symmetry.real",
            Mutation::Characteristic => "symmetry.real",
            Mutation::ModifiedCurrent => "characteristic.real",
            Mutation::DropDeltaTerms => "trivial.noether_minus_modified",
            Mutation::ComplexCharacteristicSign => "characteristic.complex",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mutation::BoundaryTerm => "boundary-term",
            Mutation::Characteristic => "characteristic",
            Mutation::ModifiedCurrent => "modified-current",
            Mutation::DropDeltaTerms => "drop-delta-terms",
            Mutation::ComplexCharacteristicSign => "complex-characteristic-sign",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Mutation::ALL.iter().map(|m| m.name()).collect();
                format!("unknown mutation `{s}`; expected one of {}", names.join(", "))
            })
    }
}
