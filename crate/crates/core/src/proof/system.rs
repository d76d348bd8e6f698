use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::semantics::SemanticsVariant;
use crate::syntax::{instantiate, parse_schematic, Assignment, Atom, Formula, LanguageFragment, Schema, SideCondition};

/// Inference rules. `Sub` is not listed here: it is a justification of its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// `A`, `A ⊃ B` / `B`
    MP,
    /// `A`, `A → B` / `B`
    MP2,
    /// `A`, `A ⇒ B` / `B`
    CMP,
    /// `A`, `A → B` / `B` (CIPC's name for MP2)
    IMP,
    /// `A` / `□A`
    RN,
}

impl Rule {
    pub const ALL: [Rule; 5] = [Rule::MP, Rule::MP2, Rule::CMP, Rule::IMP, Rule::RN];

    pub fn name(self) -> &'static str {
        match self {
            Rule::MP => "MP",
            Rule::MP2 => "MP2",
            Rule::CMP => "CMP",
            Rule::IMP => "IMP",
            Rule::RN => "RN",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Rule::RN => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Rule::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemId {
    S,
    T,
    SBot,
    SBot2,
    SMinusBot,
    SMinusBot2,
    SMinus,
    SBotW,
    L4,
    Mpc,
    Cipc,
}

const SCHEMATA: &[(&str, &str)] = &[
    ("Ax1", "A -> (B -> A)"),
    ("Ax2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"),
    ("Ax3", "(A & B) -> A"),
    ("Ax4", "(A & B) -> B"),
    ("Ax5", "(C -> A) -> ((C -> B) -> (C -> (A & B)))"),
    ("Ax6", "A -> (A | B)"),
    ("Ax7", "B -> (A | B)"),
    ("Ax8", "(A -> C) -> ((B -> C) -> ((A | B) -> C))"),
    ("AxM1", "(A -> B) => (A => B)"),
    ("AxM2", "(A => (B => C)) -> ((A => B) => (A => C))"),
    ("AxM3", "(A => (B -> C)) -> (B -> (A => C))"),
    ("AxM4", "(A -> (B => C)) -> (B => (A -> C))"),
    ("AxM5", "((A => B) => C) -> ((A => C) -> C)"),
    ("AxM6", "(A => C) -> ((B => C) -> ((A | B) => C))"),
    ("Ax0", "bot -> A"),
    ("AxE", "bot => A"),
    ("Ksup", "A => (B => A)"),
    ("MP3", "A => ((A => B) -> B)"),
    ("T1", "(A => B) -> (((P -> P) => A) -> B)"),
    ("T2", "(A => B) -> (C => (A => B))"),
    ("□1", "[](A -> B) -> ([]A -> []B)"),
    ("□2", "[]A -> A"),
    ("□3", "[]A -> [][]A"),
    ("□4", "[]A | []([]A -> B)"),
    ("C1", "A => (B => A)"),
    ("C2", "(A => (B => C)) => ((A => B) => (A => C))"),
    ("C3", "((A => B) => A) => A"),
    ("I1", "A -> (B -> A)"),
    ("I2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"),
    ("X1", "A -> (B => A)"),
    ("X2", "(A => B) -> (A -> B)"),
    ("X3", "A => ((A => B) -> (A -> B))"),
    ("X4", "(X => (A -> B)) -> ((X => A) -> (X => B))"),
];

const INT: [&str; 8] = ["Ax1", "Ax2", "Ax3", "Ax4", "Ax5", "Ax6", "Ax7", "Ax8"];
const MIX: [&str; 6] = ["AxM1", "AxM2", "AxM3", "AxM4", "AxM5", "AxM6"];

fn build_schema(name: &str, text: &str) -> Schema {
    let s = Schema::new(name, parse_schematic(text).expect("built-in schema parses"));
    match name {
        "X2" => s.with_side_condition(SideCondition::Classical(Atom::new("A"))),
        "T1" => s.with_side_condition(SideCondition::Atomic(Atom::new("P"))),
        _ => s,
    }
}

fn registry() -> &'static BTreeMap<String, Schema> {
    static REG: OnceLock<BTreeMap<String, Schema>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut m: BTreeMap<String, Schema> =
            SCHEMATA.iter().map(|(n, t)| (n.to_string(), build_schema(n, t))).collect();
        // concrete axioms of the "2" systems: A, B, C become p, q, r
        let concrete: Assignment =
            [("A", "p"), ("B", "q"), ("C", "r")].iter().map(|(k, v)| (Atom::new(k), Formula::atom(v))).collect();
        for n in INT.iter().chain(&MIX).chain(&["Ax0"]) {
            let pattern = instantiate(&m[*n].pattern, &concrete);
            let name = format!("{n}'");
            m.insert(name.clone(), Schema::new(name, pattern));
        }
        m
    })
}

/// A built-in schema or concrete axiom by its label (`Ax1`, `AxM6'`, `□2`, ...).
/// `[]1` … `[]4` are accepted as ASCII spellings of `□1` … `□4`.
pub fn schema(name: &str) -> Option<&'static Schema> {
    let reg = registry();
    reg.get(name).or_else(|| name.strip_prefix("[]").and_then(|rest| reg.get(&format!("□{rest}"))))
}

impl SystemId {
    pub const ALL: [SystemId; 11] = [
        SystemId::S,
        SystemId::T,
        SystemId::SBot,
        SystemId::SBot2,
        SystemId::SMinusBot,
        SystemId::SMinusBot2,
        SystemId::SMinus,
        SystemId::SBotW,
        SystemId::L4,
        SystemId::Mpc,
        SystemId::Cipc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SystemId::S => "s",
            SystemId::T => "t",
            SystemId::SBot => "s-bot",
            SystemId::SBot2 => "s-bot-2",
            SystemId::SMinusBot => "sminus-bot",
            SystemId::SMinusBot2 => "sminus-bot-2",
            SystemId::SMinus => "sminus",
            SystemId::SBotW => "sbot-w",
            SystemId::L4 => "l4",
            SystemId::Mpc => "mpc",
            SystemId::Cipc => "cipc",
        }
    }

    /// Labels of the axioms, schematic or concrete.
    pub fn axiom_names(self) -> Vec<&'static str> {
        let s: Vec<&str> = INT.iter().chain(&MIX).copied().collect();
        let without = |v: Vec<&'static str>, x: &str| v.into_iter().filter(|n| *n != x).collect::<Vec<_>>();
        let primed = |v: Vec<&'static str>| -> Vec<&'static str> {
            v.into_iter().map(|n| registry().get_key_value(&format!("{n}'")).expect("primed").0.as_str()).collect()
        };
        match self {
            SystemId::S => s,
            SystemId::T => {
                let mut v = without(without(s, "AxM3"), "AxM4");
                v.extend(["Ksup", "MP3", "T1", "T2"]);
                v
            }
            SystemId::SBot => [s, vec!["Ax0"]].concat(),
            SystemId::SMinusBot => without([s, vec!["Ax0"]].concat(), "AxM6"),
            SystemId::SBot2 => primed([s, vec!["Ax0"]].concat()),
            SystemId::SMinusBot2 => primed(without([s, vec!["Ax0"]].concat(), "AxM6")),
            SystemId::SMinus => without(s, "AxM6"),
            SystemId::SBotW => [s, vec!["AxE"]].concat(),
            SystemId::L4 => [INT.to_vec(), vec!["Ax0", "□1", "□2", "□3", "□4"]].concat(),
            SystemId::Mpc => INT.to_vec(),
            SystemId::Cipc => vec!["C1", "C2", "C3", "I1", "I2", "X1", "X2", "X3", "X4"],
        }
    }

    pub fn axioms(self) -> Vec<&'static Schema> {
        self.axiom_names().into_iter().map(|n| schema(n).expect("registered")).collect()
    }

    pub fn has_axiom(self, name: &str) -> bool {
        schema(name).is_some_and(|s| self.axiom_names().contains(&s.name.as_str()))
    }

    pub fn rules(self) -> &'static [Rule] {
        match self {
            SystemId::L4 => &[Rule::RN, Rule::MP2],
            SystemId::Mpc => &[Rule::MP2],
            SystemId::Cipc => &[Rule::CMP, Rule::IMP],
            _ => &[Rule::MP],
        }
    }

    /// Whether the substitution rule is available.
    pub fn has_sub(self) -> bool {
        matches!(self, SystemId::SBot2 | SystemId::SMinusBot2)
    }

    /// MP is the only rule, so the deduction theorem for ⊃ applies.
    pub fn mp_only(self) -> bool {
        self.rules() == [Rule::MP] && !self.has_sub()
    }

    pub fn language(self) -> LanguageFragment {
        match self {
            SystemId::S | SystemId::T | SystemId::SMinus => LanguageFragment::L_SUP,
            SystemId::SBot | SystemId::SBot2 | SystemId::SMinusBot | SystemId::SMinusBot2 | SystemId::SBotW => {
                LanguageFragment::L_BOT_SUP
            }
            SystemId::L4 => LanguageFragment::L_BOT_BOX,
            SystemId::Mpc => LanguageFragment::L_BOT,
            SystemId::Cipc => LanguageFragment::CIPC,
        }
    }

    /// The semantics the system is sound for, with whether its models are rooted.
    pub fn semantics(self) -> (SemanticsVariant, bool) {
        match self {
            SystemId::S | SystemId::SBot | SystemId::SBot2 => (SemanticsVariant::S, true),
            SystemId::T => (SemanticsVariant::T, true),
            SystemId::SMinusBot | SystemId::SMinusBot2 | SystemId::SMinus => (SemanticsVariant::SMinusBot, false),
            SystemId::SBotW => (SemanticsVariant::SBotW, true),
            SystemId::L4 => (SemanticsVariant::L4, false),
            SystemId::Mpc => (SemanticsVariant::Mpc, false),
            SystemId::Cipc => (SemanticsVariant::CipcB, true),
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        // separators are optional: `S_BOT_W`, `sbot-w` and `s-bot-w` all work
        let key = |t: &str| t.to_ascii_lowercase().replace(['_', '-'], "");
        SystemId::ALL
            .into_iter()
            .find(|x| key(x.name()) == key(s))
            .ok_or_else(|| format!("unknown system `{s}`"))
    }
}
