//! Finite Kripke models and the evaluator for every truth-clause variant.
//!
//! All connectives are computed on truth sets (bitmasks of worlds), so a
//! formula is evaluated once per model rather than once per world.

mod eval;
mod model;
mod variant;

pub use eval::{
    check_persistence, consequence_on_model, evaluate, holds_everywhere, refuting_world, truth_set, EvalError,
    Persistence,
};
pub(crate) use model::next_permutation;
pub use model::{build_model, KripkeModel, ModelDescription, ModelError, World, WorldSet, MAX_WORLDS};
pub use variant::{BottomMode, ConsequenceMode, SemanticsVariant};

impl ModelDescription {
    /// Parses the JSON model format.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Formula, LanguageFragment};
    use SemanticsVariant::*;

    fn f(s: &str) -> Formula {
        parse_formula(s, &LanguageFragment::FULL).unwrap()
    }

    fn model(json: &str, v: SemanticsVariant) -> KripkeModel {
        build_model(&ModelDescription::from_json(json).unwrap(), v).unwrap()
    }

    fn cor418() -> KripkeModel {
        model(r#"{"worlds":["w","v"],"valuation":{"w":["p"],"v":["q"]}}"#, SMinusBot)
    }

    fn gw() -> KripkeModel {
        model(r#"{"worlds":["g","w"],"order":[["g","w"]],"base":"g","valuation":{"w":["p"]}}"#, S)
    }

    #[test]
    fn persistence_error_has_witness() {
        let d = ModelDescription::from_json(
            r#"{"worlds":["g","w"],"order":[["g","w"]],"base":"g","valuation":{"g":["p"]}}"#,
        )
        .unwrap();
        assert_eq!(
            build_model(&d, S).unwrap_err(),
            ModelError::Persistence { from: "g".into(), to: "w".into(), atom: "p".into() }
        );
    }

    #[test]
    fn single_world_closure() {
        let m = model(r#"{"worlds":["g"],"base":"g"}"#, S);
        assert!(m.le(World(0), World(0)));
    }

    #[test]
    fn closure_is_transitive() {
        let m = model(r#"{"worlds":["a","b","c"],"order":[["a","b"],["b","c"]],"base":"a"}"#, S);
        assert!(m.le(World(0), World(2)));
        assert!(!m.le(World(2), World(0)));
    }

    #[test]
    fn model_errors() {
        let d = |s: &str| ModelDescription::from_json(s).unwrap();
        assert!(matches!(
            build_model(&d(r#"{"worlds":["g","w"],"base":"g"}"#), S),
            Err(ModelError::NonLeastBase { .. })
        ));
        assert_eq!(build_model(&d(r#"{"worlds":["w"]}"#), S), Err(ModelError::MissingBase(S)));
        assert_eq!(
            build_model(&d(r#"{"worlds":["g"],"base":"g","bot_true_at":["g"]}"#), SBotW),
            Err(ModelError::BottomAtBase("g".into()))
        );
        assert_eq!(
            build_model(&d(r#"{"worlds":["g"],"base":"g","bot_true_at":["g"]}"#), S),
            Err(ModelError::BottomNotAllowed(S))
        );
        assert_eq!(
            build_model(
                &d(r#"{"worlds":["g","w"],"order":[["g","w"]],"base":"g","valuation":{"w":["c"]},"classical_atoms":["c"]}"#),
                CipcB
            ),
            Err(ModelError::NonConstantClassical("c".into()))
        );
        assert_eq!(build_model(&d(r#"{"worlds":["g","g"]}"#), Mpc), Err(ModelError::DuplicateWorld("g".into())));
        assert_eq!(
            build_model(&d(r#"{"worlds":["g"],"order":[["g","x"]]}"#), Mpc),
            Err(ModelError::UnknownWorld("x".into()))
        );
        assert!(build_model(&d(r#"{"worlds":["g","w"],"order":[["g","w"]],"bot_true_at":["w"]}"#), Mpc).is_ok());
    }

    #[test]
    fn disjunction_countermodel_values() {
        let m = cor418();
        let w = m.world("w").unwrap();
        assert!(evaluate(&m, w, &f("p => r"), SMinusBot).unwrap());
        assert!(evaluate(&m, w, &f("q => r"), SMinusBot).unwrap());
        assert!(!evaluate(&m, w, &f("(p | q) => r"), SMinusBot).unwrap());
    }

    #[test]
    fn base_reading_of_classical_conditional() {
        let m = gw();
        let g = m.world("g").unwrap();
        assert!(evaluate(&m, g, &f("p => q"), S).unwrap());
        assert!(!evaluate(&m, g, &f("p -> q"), S).unwrap());
    }

    #[test]
    fn holds_everywhere_examples() {
        let m = cor418();
        assert!(holds_everywhere(&m, &f("p -> p"), SMinusBot).unwrap());
        assert!(holds_everywhere(&m, &f("p | q"), SMinusBot).unwrap());
        assert!(!holds_everywhere(&m, &f("p"), SMinusBot).unwrap());
    }

    #[test]
    fn consequence_examples() {
        let m = model(r#"{"worlds":["g","w"],"order":[["g","w"]],"base":"g","valuation":{"g":["p"],"w":["p","q"]}}"#, S);
        let m2 = model(r#"{"worlds":["g","w"],"order":[["g","w"]],"base":"g","valuation":{"g":["p","q"],"w":["p","q"]}}"#, S);
        for m in [&m, &m2] {
            // MP is sound at the base: whenever p => q holds there, so does q
            let g = m.world("g").unwrap();
            assert!(consequence_on_model(m, &[f("p => q")], &f("q"), S).unwrap());
            let prem = evaluate(m, g, &f("p => q"), S).unwrap();
            assert!(!prem || evaluate(m, g, &f("q"), S).unwrap());
        }
        for m in [gw(), m, m2] {
            assert!(consequence_on_model(&m, &[], &f("p | (p => q)"), S).unwrap());
        }
        let l4 = model(r#"{"worlds":["a","b"],"valuation":{"a":["p"],"b":["p"]}}"#, L4);
        assert!(consequence_on_model(&l4, &[f("p")], &f("[]p"), L4).unwrap());
        // p holds only somewhere: premise not global, so vacuous
        assert!(consequence_on_model(&cor418(), &[f("p")], &f("q"), SMinusBot).unwrap());
    }

    #[test]
    fn persistence_checks() {
        let broken = KripkeModel::from_description_unvalidated(
            &ModelDescription::from_json(
                r#"{"worlds":["g","w"],"order":[["g","w"]],"base":"g","valuation":{"g":["p"]}}"#,
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(check_persistence(&broken, &f("p"), S).unwrap(), Persistence::Violated(World(0), World(1)));
        assert_eq!(check_persistence(&cor418(), &f("(p | q) => r"), SMinusBot).unwrap(), Persistence::Ok);
    }

    #[test]
    fn evaluation_errors() {
        let m = cor418();
        assert_eq!(
            truth_set(&m, &f("[]p"), SMinusBot),
            Err(EvalError::Language { variant: SMinusBot, connective: "[]".into() })
        );
        assert_eq!(truth_set(&m, &f("p => q"), S), Err(EvalError::MissingBase(S)));
        assert_eq!(truth_set(&m, &f("p => q"), Mpc).unwrap_err().to_string(), "`=>` is outside the language of variant mpc");
        assert_eq!(evaluate(&m, World(7), &f("p"), SMinusBot), Err(EvalError::NoSuchWorld(7)));
    }

    #[test]
    fn weak_absurdity_reads_valuation() {
        let m = model(
            r#"{"worlds":["g","w"],"order":[["g","w"]],"base":"g","bot_true_at":["w"]}"#,
            SBotW,
        );
        assert_eq!(truth_set(&m, &Formula::Bottom, SBotW).unwrap(), WorldSet(0b10));
        assert_eq!(truth_set(&m, &f("bot => p"), SBotW).unwrap(), m.all());
        // ¬⊥ fails at w, so (⊥ → p) fails at g as well
        assert_eq!(truth_set(&m, &f("bot -> p"), SBotW).unwrap(), WorldSet::EMPTY);
    }

    #[test]
    fn json_round_trip() {
        let m = cor418();
        let back = build_model(&ModelDescription::from_json(&m.to_description().to_json()).unwrap(), SMinusBot).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let a = cor418();
        let b = model(r#"{"worlds":["x","y"],"valuation":{"y":["p"],"x":["q"]}}"#, SMinusBot);
        assert!(a.is_isomorphic(&b));
        let c = model(r#"{"worlds":["x","y"],"valuation":{"y":["p"],"x":["q","r"]}}"#, SMinusBot);
        assert!(!a.is_isomorphic(&c));
    }
}
