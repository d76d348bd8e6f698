use std::fmt;
use std::str::FromStr;

use crate::syntax::LanguageFragment;

/// Which truth clauses and which consequence relation apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsVariant {
    /// Base-state models; `A ⊃ B` reads `A` at the base and `B` locally.
    S,
    /// Base-state models; `A ⊃ B` reads both sides at the base.
    T,
    /// Base-free models; `A ⊃ B` holds if `A` fails somewhere or `B` holds locally.
    SMinusBot,
    /// Base-state models with a persistent ⊥ that is false at the base.
    SBotW,
    /// Base-free models with a global box.
    L4,
    /// Base-free intuitionistic models with ⊥ as an ordinary persistent entry.
    Mpc,
    /// `A ⇒ B` holds at w iff some w' ≤ w refutes `A` or verifies `B`.
    CipcA,
    /// `A ⇒ B` holds at w iff the base refutes `A` or w verifies `B`.
    CipcB,
    /// `A ⇒ B` read with the base-free clause of `SMinusBot`.
    CipcC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConsequenceMode {
    /// Truth preservation at the base state. On models without a base the
    /// test is applied pointwise at every world.
    AtBase,
    /// Premises true at every world imply the conclusion true at every world.
    Global,
}

/// How ⊥ is interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BottomMode {
    /// ⊥ is false everywhere.
    Constant,
    /// ⊥ reads the model's persistent ⊥ entry.
    Valuation,
    /// ⊥ is not part of the language.
    Absent,
}

impl SemanticsVariant {
    pub const ALL: [SemanticsVariant; 9] = [
        SemanticsVariant::S,
        SemanticsVariant::T,
        SemanticsVariant::SMinusBot,
        SemanticsVariant::SBotW,
        SemanticsVariant::L4,
        SemanticsVariant::Mpc,
        SemanticsVariant::CipcA,
        SemanticsVariant::CipcB,
        SemanticsVariant::CipcC,
    ];

    pub fn requires_base(self) -> bool {
        matches!(self, Self::S | Self::T | Self::SBotW | Self::CipcB)
    }

    pub fn consequence_mode(self) -> ConsequenceMode {
        match self {
            Self::L4 | Self::Mpc | Self::SMinusBot => ConsequenceMode::Global,
            _ => ConsequenceMode::AtBase,
        }
    }

    pub fn bottom_mode(self) -> BottomMode {
        match self {
            Self::S | Self::SMinusBot | Self::L4 => BottomMode::Constant,
            Self::SBotW | Self::Mpc => BottomMode::Valuation,
            Self::T | Self::CipcA | Self::CipcB | Self::CipcC => BottomMode::Absent,
        }
    }

    pub fn is_cipc(self) -> bool {
        matches!(self, Self::CipcA | Self::CipcB | Self::CipcC)
    }

    pub fn language(self) -> LanguageFragment {
        match self {
            Self::S | Self::SMinusBot | Self::SBotW => LanguageFragment::L_BOT_SUP,
            Self::T | Self::CipcA | Self::CipcB | Self::CipcC => LanguageFragment::L_SUP,
            Self::L4 => LanguageFragment::L_BOT_BOX,
            Self::Mpc => LanguageFragment::L_BOT,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::S => "s",
            Self::T => "t",
            Self::SMinusBot => "sminus-bot",
            Self::SBotW => "sbot-w",
            Self::L4 => "l4",
            Self::Mpc => "mpc",
            Self::CipcA => "cipc-a",
            Self::CipcB => "cipc-b",
            Self::CipcC => "cipc-c",
        }
    }
}

impl fmt::Display for SemanticsVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemanticsVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown variant `{s}`"))
    }
}
