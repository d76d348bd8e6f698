//! Bounded model enumeration and countermodel search.
//!
//! Frames are preorders on at most five points, one per isomorphism class.
//! Valuations range over up-sets, so every emitted model is persistent.
//! Enumeration order is fixed: frame size, then canonical frame order, then
//! valuations with the first atom varying slowest.

mod claims;
mod enumerate;
mod frames;
mod space;

pub use claims::{
    axm6_countermodel, base_addition_sweep, cipc_disjunction, cipc_readings_sweep, disjunction_model,
    disjunction_violation, matrix3_refutation, for_each_mutant, mpc_transport, persistence_sweep, proof_corpus_check,
    random_mp_proof, run_paper_claims, run_paper_claims_with, soundness_sweep, st_incomparability, translation_sweep,
    weak_absurdity_model, weak_absurdity_probe, x3_divergence, ClaimBounds, ClaimResult, ClaimStatus, Report, Sweep,
    AXM6_INSTANCE, CLAIM_SEED, X3_INSTANCE,
};
pub use enumerate::{
    bounded_consequence, bounded_consequence_jobs, bounded_valid, enumerate_models, frame_models, SearchBounds,
    SearchError, SearchResult,
};
pub use frames::{canonical_frames, frames_up_to, labelled_preorders, Frame, MAX_FRAME_SIZE};
pub use space::{all_formulas, class_representatives, random_formula, FormulaSpace};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{build_model, evaluate, ModelDescription, SemanticsVariant::*};
    use crate::syntax::{parse_formula, Formula, LanguageFragment};

    fn f(s: &str) -> Formula {
        parse_formula(s, &LanguageFragment::FULL).unwrap()
    }

    #[test]
    fn one_world_one_atom() {
        let b = SearchBounds::new(S).max_worlds(1).atoms(["p"]);
        assert_eq!(enumerate_models(&b).unwrap().count(), 2);
    }

    #[test]
    fn two_point_frames_without_atoms() {
        let b = SearchBounds::new(Mpc).max_worlds(2).rooted(false);
        // Mpc also ranges over ⊥ entries, so use a variant without them
        let b0 = SearchBounds { variant: SMinusBot, ..b };
        assert_eq!(enumerate_models(&b0).unwrap().count(), 1 + 3);
    }

    #[test]
    fn emitted_models_validate() {
        for v in [S, T, SMinusBot, SBotW, L4, Mpc, CipcA, CipcB, CipcC] {
            for rooted in [true, false] {
                let b = SearchBounds::new(v).max_worlds(3).rooted(rooted).atoms(["p", "c"]).classical(["c"]);
                if v.requires_base() && !rooted {
                    assert_eq!(enumerate_models(&b).err(), Some(SearchError::NeedsRoot(v)));
                    continue;
                }
                for m in enumerate_models(&b).unwrap() {
                    let back = build_model(&m.to_description(), v).unwrap();
                    assert_eq!(back, m);
                }
            }
        }
    }

    #[test]
    fn sbotw_bottom_avoids_base() {
        let b = SearchBounds::new(SBotW).max_worlds(2);
        let ms: Vec<_> = enumerate_models(&b).unwrap().collect();
        assert!(ms.iter().any(|m| !m.bot_set().is_empty()));
        assert!(ms.iter().all(|m| !m.bot_set().contains(m.base().unwrap())));
    }

    #[test]
    fn disjunction_countermodel() {
        let axm6 = f("(p => r) -> ((q => r) -> ((p | q) => r))");
        let b = SearchBounds::new(SMinusBot).rooted(false).max_worlds(2);
        let res = bounded_valid(&axm6, &b).unwrap();
        let (m, _) = res.countermodel().expect("countermodel");
        let want = build_model(
            &ModelDescription::from_json(r#"{"worlds":["w","v"],"valuation":{"w":["p"],"v":["q"]}}"#).unwrap(),
            SMinusBot,
        )
        .unwrap();
        assert!(m.is_isomorphic(&want), "{m}");
        assert!(bounded_valid(&axm6, &SearchBounds::new(S)).unwrap().is_valid());
        assert!(bounded_valid(&axm6, &b.rooted(true).max_worlds(3)).unwrap().is_valid());
    }

    #[test]
    fn consequence_examples() {
        let b = SearchBounds::new(S);
        assert!(bounded_consequence(&[f("p"), f("p => q")], &f("q"), &b).unwrap().is_valid());
        let res = bounded_consequence(&[f("p => q")], &f("p -> q"), &b.clone().max_worlds(2)).unwrap();
        let (m, w) = res.countermodel().unwrap();
        assert!(evaluate(m, w, &f("p => q"), S).unwrap() && !evaluate(m, w, &f("p -> q"), S).unwrap());
        let (m, _) = bounded_valid(&f("p"), &b).unwrap().countermodel().map(|(m, w)| (m.clone(), w)).unwrap();
        assert_eq!(m.len(), 1);
        assert!(bounded_valid(&f("p -> p"), &b).unwrap().is_valid());
    }

    #[test]
    fn parallel_search_agrees() {
        let x3 = f("p => ((p => q) -> (p -> q))");
        let b = SearchBounds::new(CipcA).rooted(false).max_worlds(4);
        let seq = bounded_valid(&x3, &b).unwrap();
        assert!(!seq.is_valid());
        for jobs in [2, 4] {
            assert_eq!(bounded_consequence_jobs(&[], &x3, &b, jobs).unwrap(), seq);
        }
    }

    #[test]
    fn language_errors_surface() {
        let b = SearchBounds::new(Mpc).rooted(false);
        assert!(matches!(bounded_valid(&f("p => p"), &b), Err(SearchError::Eval(_))));
        assert_eq!(bounded_valid(&f("p"), &SearchBounds::new(S).max_worlds(0)), Err(SearchError::Bound(0)));
    }
}
