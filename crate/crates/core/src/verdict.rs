use crate::csw::SignPattern;
use crate::representatives::ColumnSelector;
use crate::{RatVector, Rational};

/// Data that lets a caller re-check a failed (or, for some oracles, a held) property.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// One column representative and its determinant.
    Selector { selector: ColumnSelector, det: Rational },
    /// Two column representatives whose determinants have opposite strict signs.
    OppositeSigns {
        first: ColumnSelector,
        first_det: Rational,
        second: ColumnSelector,
        second_det: Rational,
    },
    /// A matrix entry that breaks a sign condition (0-based indices).
    Entry { row: usize, col: usize, value: Rational },
    /// An entry of the inverse that breaks a sign condition.
    InverseEntry { row: usize, col: usize, value: Rational },
    /// The matrix has no inverse.
    Singular,
    /// A principal minor (0-based index set) and its value.
    PrincipalMinor { index_set: Vec<usize>, value: Rational },
    /// A realizable sign pattern with a concrete vector tuple `(x₀, …, x_k)`.
    Vectors { pattern: SignPattern, xs: Vec<RatVector> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyVerdict {
    pub property_name: String,
    pub holds: bool,
    /// Present whenever `holds` is false.
    pub witness: Option<Witness>,
    /// The rule that decided the verdict.
    pub certificate: String,
    /// Every violation found, filled only by exhaustive scans.
    pub all_violations: Vec<Witness>,
}

impl PropertyVerdict {
    pub fn holds(name: impl Into<String>, certificate: impl Into<String>) -> Self {
        PropertyVerdict {
            property_name: name.into(),
            holds: true,
            witness: None,
            certificate: certificate.into(),
            all_violations: Vec::new(),
        }
    }

    pub fn fails(name: impl Into<String>, witness: Witness, certificate: impl Into<String>) -> Self {
        PropertyVerdict {
            property_name: name.into(),
            holds: false,
            witness: Some(witness),
            certificate: certificate.into(),
            all_violations: Vec::new(),
        }
    }

    pub fn relabeled(mut self, name: impl Into<String>) -> Self {
        self.property_name = name.into();
        self
    }
}
