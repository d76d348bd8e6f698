//! Formulas, the ASCII/UTF-8 grammar, language fragments and axiom schemata.
//!
//! Grammar, tightest binding first:
//!
//! * prefix `[]` (□), `-` (¬A := A → ⊥), `~` (~A := A ⊃ ⊥)
//! * `&` (left associative)
//! * `|` (left associative)
//! * `->` and `=>`, right associative, sharing one level; mixing the two
//!   at one level without parentheses is rejected.
//!
//! Atoms are `[a-z][a-z0-9_]*`, `bot` is ⊥. The UTF-8 symbols
//! `∧ ∨ → ⊃ ⇒ ⊥ □ ¬` are accepted on input.

mod formula;
mod fragment;
mod parser;
mod schema;

pub use formula::{substitute, substitute_all, Atom, Connective, Formula};
pub use fragment::{check_fragment, LanguageFragment};
pub use schema::{instantiate, is_classical, match_schema, Assignment, SideCondition, Schema};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("syntax error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("`{connective}` is not allowed in fragment {fragment}")]
    FragmentViolation { connective: String, fragment: String },
}

/// Parses a formula and checks it lies inside `frag`.
pub fn parse_formula(text: &str, frag: &LanguageFragment) -> Result<Formula, SyntaxError> {
    let f = parser::parse(text, false)?;
    if let Some(c) = frag.violation(&f) {
        return Err(SyntaxError::FragmentViolation { connective: c.to_string(), fragment: frag.to_string() });
    }
    Ok(f)
}

/// Parses a formula that may contain single-letter uppercase metavariables.
/// Metavariables become atoms with uppercase names.
pub fn parse_schematic(text: &str) -> Result<Formula, SyntaxError> {
    parser::parse(text, true)
}

/// Canonical rendering with the fewest parentheses the grammar allows.
pub fn render_formula(f: &Formula) -> String {
    parser::render(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Formula {
        parse_formula(s, &LanguageFragment::FULL).unwrap()
    }
    fn a(s: &str) -> Formula {
        Formula::atom(s)
    }

    #[test]
    fn ax1_shape() {
        assert_eq!(p("p -> (q -> p)"), Formula::imp(a("p"), Formula::imp(a("q"), a("p"))));
    }

    #[test]
    fn bottom_outside_sup_fragment() {
        let e = parse_formula("bot", &LanguageFragment::L_SUP).unwrap_err();
        assert_eq!(
            e,
            SyntaxError::FragmentViolation { connective: "bot".into(), fragment: "L_sup".into() }
        );
    }

    #[test]
    fn grammar_table() {
        let (p_, q, r, s) = (a("p"), a("q"), a("r"), a("s"));
        let table: Vec<(&str, Formula)> = vec![
            ("p => q | r", Formula::sup(p_.clone(), Formula::or(q.clone(), r.clone()))),
            ("p & q | r", Formula::or(Formula::and(p_.clone(), q.clone()), r.clone())),
            ("p | q & r", Formula::or(p_.clone(), Formula::and(q.clone(), r.clone()))),
            ("p -> q -> r", Formula::imp(p_.clone(), Formula::imp(q.clone(), r.clone()))),
            ("p => q => r", Formula::sup(p_.clone(), Formula::sup(q.clone(), r.clone()))),
            ("(p -> q) => r", Formula::sup(Formula::imp(p_.clone(), q.clone()), r.clone())),
            ("p -> (q => r)", Formula::imp(p_.clone(), Formula::sup(q.clone(), r.clone()))),
            ("p & q & r", Formula::and(Formula::and(p_.clone(), q.clone()), r.clone())),
            ("p | q | r", Formula::or(Formula::or(p_.clone(), q.clone()), r.clone())),
            ("~p", Formula::sup(p_.clone(), Formula::Bottom)),
            ("-p", Formula::imp(p_.clone(), Formula::Bottom)),
            ("[]p -> p", Formula::imp(Formula::nec(p_.clone()), p_.clone())),
            ("[][]p", Formula::nec(Formula::nec(p_.clone()))),
            ("~~p & q", Formula::and(Formula::eneg(Formula::eneg(p_.clone())), q.clone())),
            ("-(p | q)", Formula::neg(Formula::or(p_.clone(), q.clone()))),
            ("bot => p", Formula::sup(Formula::Bottom, p_.clone())),
            ("p ∧ q → r ⊃ s", Formula::imp(Formula::and(p_.clone(), q.clone()), Formula::sup(r.clone(), s.clone()))),
            ("□(p ∨ ⊥)", Formula::nec(Formula::or(p_.clone(), Formula::Bottom))),
            ("((p))", p_.clone()),
            ("x_1 -> y2", Formula::imp(a("x_1"), a("y2"))),
        ];
        // the mixed UTF-8 case must be rejected, since → and ⊃ share one level
        let (mixed, _) = &table[16];
        assert!(parse_formula(mixed, &LanguageFragment::FULL).is_err());
        for (text, want) in table.iter().filter(|(t, _)| t != mixed) {
            assert_eq!(&p(text), want, "{text}");
            assert_eq!(&p(&render_formula(want)), want, "{text}");
        }
    }

    #[test]
    fn mixed_implications_need_parens() {
        let e = parse_formula("p -> q => r", &LanguageFragment::FULL).unwrap_err();
        assert!(matches!(e, SyntaxError::Parse { pos: 7, .. }), "{e}");
        assert!(parse_formula("p => q -> r", &LanguageFragment::FULL).is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            parse_formula("p & ", &LanguageFragment::FULL),
            Err(SyntaxError::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            parse_formula("p $ q", &LanguageFragment::FULL),
            Err(SyntaxError::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_formula("(p", &LanguageFragment::FULL),
            Err(SyntaxError::Parse { .. })
        ));
        assert!(matches!(
            parse_formula("A -> p", &LanguageFragment::FULL),
            Err(SyntaxError::Parse { pos: 0, .. })
        ));
    }

    #[test]
    fn render_examples() {
        assert_eq!(render_formula(&Formula::imp(a("p"), a("p"))), "p -> p");
        assert_eq!(render_formula(&Formula::sup(Formula::Bottom, a("p"))), "bot => p");
        let nested = Formula::imp(Formula::imp(a("p"), a("q")), a("r"));
        assert_eq!(render_formula(&nested), "(p -> q) -> r");
        assert_eq!(render_formula(&Formula::nec(Formula::and(a("p"), a("q")))), "[](p & q)");
    }

    #[test]
    fn substitute_examples() {
        let qr = Formula::and(a("q"), a("r"));
        assert_eq!(
            substitute(&p("p -> p"), &Atom::new("p"), &qr),
            Formula::imp(qr.clone(), qr)
        );
        let axm6 = p("(p => r) -> ((q => r) -> ((p | q) => r))");
        assert_eq!(
            substitute(&axm6, &Atom::new("r"), &Formula::Bottom),
            p("(p => bot) -> ((q => bot) -> ((p | q) => bot))")
        );
    }

    #[test]
    fn match_schema_examples() {
        let ax1 = Schema::new("Ax1", parse_schematic("A -> (B -> A)").unwrap());
        let none = BTreeSet::new();
        let sigma = match_schema(&ax1, &p("(p | q) -> (r -> (p | q))"), &none).unwrap();
        assert_eq!(sigma[&Atom::new("A")], p("p | q"));
        assert_eq!(sigma[&Atom::new("B")], p("r"));
        assert!(match_schema(&ax1, &p("p -> (q -> q)"), &none).is_none());

        let x2 = Schema::new("X2", parse_schematic("(A => B) -> (A -> B)").unwrap())
            .with_side_condition(SideCondition::Classical(Atom::new("A")));
        let classical: BTreeSet<Atom> = [Atom::new("c")].into();
        assert!(match_schema(&x2, &p("((p -> q) => r) -> ((p -> q) -> r)"), &classical).is_none());
        assert!(match_schema(&x2, &p("((c => c) => r) -> ((c => c) -> r)"), &classical).is_some());
    }

    #[test]
    fn fragment_examples() {
        assert!(!check_fragment(&p("p | q"), &LanguageFragment::L_MINUS_BOT_SUP));
        assert!(check_fragment(&p("(p => bot) => bot"), &LanguageFragment::L_BOT_SUP));
        assert!(!check_fragment(&p("[]p"), &LanguageFragment::L_SUP));
    }

    #[test]
    fn fragment_names_round_trip() {
        for (n, f) in LanguageFragment::NAMED {
            assert_eq!(LanguageFragment::from_name(n), Some(f));
        }
    }
}
