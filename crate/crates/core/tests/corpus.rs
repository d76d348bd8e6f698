use mixlogic::proof::{check_proof, load_corpus, proof_from_json, to_substitution_system, SystemId};
use mixlogic::search::{bounded_consequence, SearchBounds};
use mixlogic::syntax::{Assignment, Atom, Formula};

fn pqr() -> Assignment {
    [("A", "p"), ("B", "q"), ("C", "r")].into_iter().map(|(k, v)| (Atom::new(k), Formula::atom(v))).collect()
}

/// Proven formulas are consequences of the hypotheses in the system's own
/// semantics, checked up to 3 worlds.
#[test]
fn corpus_is_sound_up_to_three_worlds() {
    let corpus = load_corpus().unwrap();
    assert!(corpus.len() >= 10);
    for e in corpus {
        let p = e.proof.instantiate(&pqr());
        let (v, rooted) = p.system.semantics();
        let b = SearchBounds::new(v).rooted(rooted).max_worlds(3);
        let res = bounded_consequence(&p.hypotheses, p.conclusion().unwrap(), &b).unwrap();
        assert!(res.is_valid(), "{} has a countermodel: {:?}", e.name, res.countermodel());
        for step in &p.steps {
            assert!(bounded_consequence(&p.hypotheses, &step.formula, &b.clone().max_worlds(2)).unwrap().is_valid());
        }
    }
}

#[test]
fn shipped_kmix_checks_in_s() {
    let text = include_str!("../corpus/kmix.json");
    let p = proof_from_json(text, Some(SystemId::S)).unwrap();
    assert!(check_proof(&p).accepted);
    let sub = to_substitution_system(&p.instantiate(&pqr())).unwrap();
    assert_eq!(sub.system, SystemId::SBot2);
    assert!(check_proof(&sub).accepted);
}
