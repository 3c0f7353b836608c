//! The 26 product families: 13 elementary factors h(z) times J_ν or I_ν.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The elementary factor h(z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HKind {
    /// e^{pz}
    Exp,
    /// sinh(pz) as (e^{pz} − e^{−pz})/2, two coupled sequences.
    SinhViaExp,
    /// cosh(pz) as (e^{pz} + e^{−pz})/2, two coupled sequences.
    CoshViaExp,
    /// sin(pz) as (e^{ipz} − e^{−ipz})/(2i), two coupled sequences.
    SinViaExp,
    /// cos(pz) as (e^{ipz} + e^{−ipz})/2, two coupled sequences.
    CosViaExp,
    /// (1 − θz)^p
    Power,
    /// e^{−p arctan z}
    ExpArctan,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Arcsin,
    Arccos,
}

impl HKind {
    pub const ALL: [HKind; 13] = [
        HKind::Exp,
        HKind::SinhViaExp,
        HKind::CoshViaExp,
        HKind::SinViaExp,
        HKind::CosViaExp,
        HKind::Power,
        HKind::ExpArctan,
        HKind::Sin,
        HKind::Cos,
        HKind::Sinh,
        HKind::Cosh,
        HKind::Arcsin,
        HKind::Arccos,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HKind::Exp => "exp",
            HKind::SinhViaExp => "sinh_via_exp",
            HKind::CoshViaExp => "cosh_via_exp",
            HKind::SinViaExp => "sin_via_exp",
            HKind::CosViaExp => "cos_via_exp",
            HKind::Power => "power",
            HKind::ExpArctan => "exp_arctan",
            HKind::Sin => "sin",
            HKind::Cos => "cos",
            HKind::Sinh => "sinh",
            HKind::Cosh => "cosh",
            HKind::Arcsin => "arcsin",
            HKind::Arccos => "arccos",
        }
    }

    /// Which coefficients vanish identically because h is odd or even.
    pub fn parity(self) -> Parity {
        match self {
            HKind::Sin | HKind::Sinh | HKind::Arcsin | HKind::SinViaExp | HKind::SinhViaExp => Parity::EvenZero,
            HKind::Cos | HKind::Cosh | HKind::CosViaExp | HKind::CoshViaExp => Parity::OddZero,
            HKind::Exp | HKind::Power | HKind::ExpArctan | HKind::Arccos => Parity::None,
        }
    }

    /// Families stated as a combination of two exp-type sequences.
    pub fn is_two_sequence(self) -> bool {
        matches!(self, HKind::SinhViaExp | HKind::CoshViaExp | HKind::SinViaExp | HKind::CosViaExp)
    }

    /// Families whose β denominators carry the factor 4ν² − 1.
    pub fn excludes_half_integer(self) -> bool {
        matches!(self, HKind::Sin | HKind::Cos | HKind::Sinh | HKind::Cosh | HKind::Arcsin | HKind::Arccos)
    }

    /// Families whose single recurrence runs on the nonzero parity subsequence.
    pub fn is_parity_recurrence(self) -> bool {
        matches!(self, HKind::Sin | HKind::Cos | HKind::Sinh | HKind::Cosh)
    }

    pub fn uses_theta(self) -> bool {
        self == HKind::Power
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BesselKind {
    J,
    I,
}

impl BesselKind {
    pub fn name(self) -> &'static str {
        match self {
            BesselKind::J => "J",
            BesselKind::I => "I",
        }
    }

    /// Sign of the core ratio: c_{2n+2} = sign · c_{2n} / (4(n+1)(ν+n+1)).
    pub fn core_sign(self) -> i64 {
        match self {
            BesselKind::J => -1,
            BesselKind::I => 1,
        }
    }
}

/// Which coefficients of a sequence vanish identically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    None,
    /// u_{2k} = 0 for all k.
    EvenZero,
    /// u_{2k+1} = 0 for all k.
    OddZero,
}

impl Parity {
    /// Whether index `n` is forced to zero.
    pub fn forces_zero(self, n: usize) -> bool {
        match self {
            Parity::None => false,
            Parity::EvenZero => n.is_multiple_of(2),
            Parity::OddZero => n % 2 == 1,
        }
    }
}

/// One of the 26 (h, Bessel kind) product families, written `exp-J`, `sin_via_exp-I`, ….
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct FamilyId {
    pub h: HKind,
    pub bessel: BesselKind,
}

impl FamilyId {
    pub const fn new(h: HKind, bessel: BesselKind) -> Self {
        Self { h, bessel }
    }

    /// All 26 families, J side first, in the order of `HKind::ALL`.
    pub fn all() -> Vec<FamilyId> {
        [BesselKind::J, BesselKind::I]
            .into_iter()
            .flat_map(|b| HKind::ALL.into_iter().map(move |h| FamilyId::new(h, b)))
            .collect()
    }

    pub fn parity(self) -> Parity {
        self.h.parity()
    }

    /// The same h with the other Bessel kind.
    pub fn mirror(self) -> FamilyId {
        let bessel = match self.bessel {
            BesselKind::J => BesselKind::I,
            BesselKind::I => BesselKind::J,
        };
        FamilyId::new(self.h, bessel)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.h.name(), self.bessel.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let (h, b) = s.trim().rsplit_once('-').ok_or_else(unknown)?;
        let bessel = match b {
            "J" | "j" => BesselKind::J,
            "I" | "i" => BesselKind::I,
            _ => return Err(unknown()),
        };
        let h = HKind::ALL.into_iter().find(|k| k.name() == h).ok_or_else(unknown)?;
        Ok(FamilyId::new(h, bessel))
    }
}

impl From<FamilyId> for String {
    fn from(f: FamilyId) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for FamilyId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}
