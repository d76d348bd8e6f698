mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use mixlogic::matrix3::{chain2_correspondence, eval3, ThreeValue, ThreeValuedAssignment};
use mixlogic::search::{
    all_formulas, bounded_consequence_jobs, class_representatives, enumerate_models, FormulaSpace, SearchBounds,
};
use mixlogic::semantics::{check_persistence, evaluate, truth_set, KripkeModel, Persistence, SemanticsVariant};
use mixlogic::syntax::{
    check_fragment, instantiate, match_schema, parse_formula, render_formula, substitute, Assignment, Atom, Formula,
    LanguageFragment, Schema,
};
use mixlogic::translate::{add_base, add_fresh_root_mpc, truncate};
use oracle::Naive;
use proptest::prelude::*;
use proptest::test_runner::Config;
use SemanticsVariant::*;

fn formula_in(frag: LanguageFragment, atoms: &'static [&'static str], depth: u32) -> BoxedStrategy<Formula> {
    let mut leaves: Vec<BoxedStrategy<Formula>> = vec![proptest::sample::select(atoms).prop_map(Formula::atom).boxed()];
    if frag.bottom {
        leaves.push(Just(Formula::Bottom).boxed());
    }
    let leaf = proptest::strategy::Union::new(leaves).boxed();
    let conns = frag.connectives();
    leaf.prop_recursive(depth, 64, 2, move |inner| {
        let conns = conns.clone();
        (proptest::sample::select(conns), inner.clone(), inner)
            .prop_map(|(c, l, r)| if c.is_binary() { c.apply2(l, r) } else { Formula::nec(l) })
            .boxed()
    })
    .boxed()
}

const PQR: &[&str] = &["p", "q", "r"];
const PQ: &[&str] = &["p", "q"];
const PC: &[&str] = &["p", "c"];

/// Models with at most 3 worlds over `p`, `q` (or `p` and classical `c` for
/// the CIPC readings), computed once per variant and rooting.
fn models(v: SemanticsVariant, rooted: bool) -> &'static [KripkeModel] {
    static CACHE: OnceLock<BTreeMap<(SemanticsVariant, bool), Vec<KripkeModel>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        let mut out = BTreeMap::new();
        for v in SemanticsVariant::ALL {
            for rooted in [true, false] {
                if v.requires_base() && !rooted {
                    continue;
                }
                let b = SearchBounds::new(v).rooted(rooted).max_worlds(3);
                let b = if v.is_cipc() { b.atoms(["p", "c"]).classical(["c"]) } else { b.atoms(["p", "q"]) };
                out.insert((v, rooted), enumerate_models(&b).unwrap().collect());
            }
        }
        out
    });
    &cache[&(v, rooted)]
}

fn naive_subst(f: &Formula, x: &Atom, g: &Formula) -> Formula {
    match f {
        Formula::Atom(a) if a == x => g.clone(),
        Formula::Atom(_) | Formula::Bottom => f.clone(),
        Formula::And(a, b) => Formula::and(naive_subst(a, x, g), naive_subst(b, x, g)),
        Formula::Or(a, b) => Formula::or(naive_subst(a, x, g), naive_subst(b, x, g)),
        Formula::IntImp(a, b) => Formula::imp(naive_subst(a, x, g), naive_subst(b, x, g)),
        Formula::ClsImp(a, b) => Formula::sup(naive_subst(a, x, g), naive_subst(b, x, g)),
        Formula::Nec(a) => Formula::nec(naive_subst(a, x, g)),
    }
}

fn three_valued(atoms: &'static [&'static str], values: Vec<ThreeValue>) -> BoxedStrategy<ThreeValuedAssignment> {
    proptest::collection::vec(proptest::sample::select(values), atoms.len())
        .prop_map(move |vs| atoms.iter().map(Atom::new).zip(vs).collect())
        .boxed()
}

proptest! {
    #![proptest_config(Config::with_cases(512))]

    #[test]
    fn render_then_parse_is_identity(f in formula_in(LanguageFragment::FULL, PQR, 5)) {
        let text = render_formula(&f);
        prop_assert_eq!(parse_formula(&text, &LanguageFragment::FULL).unwrap(), f);
    }

    #[test]
    fn substitution_matches_naive(f in formula_in(LanguageFragment::FULL, PQR, 4),
                                  g in formula_in(LanguageFragment::FULL, PQR, 2),
                                  x in proptest::sample::select(PQR)) {
        let x = Atom::new(x);
        let out = substitute(&f, &x, &g);
        prop_assert_eq!(&out, &naive_subst(&f, &x, &g));
        if !g.atoms().contains(&x) {
            prop_assert!(!out.atoms().contains(&x));
        }
    }

    #[test]
    fn matching_recovers_the_instance(pattern in formula_in(LanguageFragment::FULL, &["A", "B", "C"], 3),
                                      a in formula_in(LanguageFragment::FULL, PQR, 2),
                                      b in formula_in(LanguageFragment::FULL, PQR, 2),
                                      c in formula_in(LanguageFragment::FULL, PQR, 2)) {
        let sigma: Assignment = [("A", a), ("B", b), ("C", c)].into_iter().map(|(k, v)| (Atom::new(k), v)).collect();
        let inst = instantiate(&pattern, &sigma);
        let found = match_schema(&Schema::new("x", pattern.clone()), &inst, &BTreeSet::new());
        prop_assert!(found.is_some());
        let found = found.unwrap();
        prop_assert_eq!(instantiate(&pattern, &found), inst);
        for m in pattern.atoms() {
            prop_assert_eq!(&found[&m], &sigma[&m]);
        }
    }

    #[test]
    fn fragments_are_monotone(f in formula_in(LanguageFragment::FULL, PQR, 4)) {
        for (_, small) in LanguageFragment::NAMED {
            for (_, big) in LanguageFragment::NAMED {
                if small.is_subset_of(&big) && check_fragment(&f, &small) {
                    prop_assert!(check_fragment(&f, &big), "{} in {} but not {}", f, small, big);
                }
            }
        }
    }

    #[test]
    fn matrix_matches_two_world_chain(f in formula_in(LanguageFragment::L_SUP, PQ, 5),
                                      a in three_valued(PQ, ThreeValue::ALL.to_vec())) {
        prop_assert_eq!(chain2_correspondence(&f, &a), Ok(true));
    }

    #[test]
    fn one_and_i_are_closed(f in formula_in(LanguageFragment::L_SUP, PQ, 5),
                            a in three_valued(PQ, vec![ThreeValue::One, ThreeValue::I])) {
        prop_assert_ne!(eval3(&f, &a).unwrap(), ThreeValue::Zero);
    }
}

/// For every variant: the library evaluator agrees with the naive oracle
/// world by world, and every formula is persistent.
#[test]
fn evaluator_matches_oracle_and_persists() {
    for v in SemanticsVariant::ALL {
        for rooted in [true, false] {
            if v.requires_base() && !rooted {
                continue;
            }
            let ms = models(v, rooted);
            let atoms = if v.is_cipc() { PC } else { PQ };
            proptest!(Config::with_cases(256), |(i in 0..ms.len(), f in formula_in(v.language(), atoms, 4))| {
                let m = &ms[i];
                let naive = Naive::new(&m.to_description());
                let set = truth_set(m, &f, v).unwrap();
                for w in m.worlds() {
                    prop_assert_eq!(set.contains(w), naive.eval(w.0, &f, v), "{} at {} under {} on {}", f, m.world_name(w), v, m);
                }
                prop_assert_eq!(check_persistence(m, &f, v).unwrap(), Persistence::Ok);
            });
        }
    }
}

#[test]
fn cipc_readings_agree_on_rooted_models() {
    let ms = models(CipcB, true);
    proptest!(Config::with_cases(512), |(i in 0..ms.len(), f in formula_in(LanguageFragment::L_SUP, PC, 5))| {
        let m = &ms[i];
        let b = truth_set(m, &f, CipcB).unwrap();
        prop_assert_eq!(truth_set(m, &f, CipcA).unwrap(), b);
        prop_assert_eq!(truth_set(m, &f, CipcC).unwrap(), b);
    });
}

#[test]
fn search_is_deterministic_and_countermodels_recheck() {
    proptest!(Config::with_cases(64), |(f in formula_in(LanguageFragment::L_BOT_SUP, PQ, 3), rooted in any::<bool>())| {
        let v = if rooted { S } else { SMinusBot };
        let b = SearchBounds::new(v).rooted(rooted).max_worlds(3);
        let one = bounded_consequence_jobs(&[], &f, &b, 1).unwrap();
        prop_assert_eq!(&bounded_consequence_jobs(&[], &f, &b, 3).unwrap(), &one);
        if let Some((m, w)) = one.countermodel() {
            let naive = Naive::new(&m.to_description());
            prop_assert!(!naive.eval(w.0, &f, v) && !naive.valid(&f, v));
        }
    });
}

#[test]
fn truncation_and_fresh_roots_preserve_old_worlds() {
    let ms = models(Mpc, false);
    proptest!(Config::with_cases(256), |(i in 0..ms.len(), k in 0usize..3, f in formula_in(LanguageFragment::L_BOT, PQ, 4))| {
        let m = &ms[i];
        let w = mixlogic::semantics::World(k % m.len());
        let cut = truncate(m, Mpc, w).unwrap();
        let name = m.world_name(w);
        prop_assert_eq!(evaluate(&cut, cut.world(name).unwrap(), &f, Mpc), evaluate(m, w, &f, Mpc));
        let rooted = add_fresh_root_mpc(&cut, Mpc).unwrap();
        for u in cut.worlds() {
            let n = cut.world_name(u);
            prop_assert_eq!(evaluate(&rooted, rooted.world(n).unwrap(), &f, SBotW), evaluate(&cut, u, &f, Mpc));
        }
    });
}

#[test]
fn base_addition_preserves_disjunction_free_formulas() {
    let ms = models(SMinusBot, false);
    proptest!(Config::with_cases(256), |(i in 0..ms.len(), f in formula_in(LanguageFragment::L_MINUS_BOT_SUP, PQ, 5))| {
        let m = &ms[i];
        let ext = add_base(m).unwrap();
        prop_assert!(ext.validate(S).is_ok());
        let old = truth_set(m, &f, SMinusBot).unwrap();
        for w in m.worlds() {
            let n = m.world_name(w);
            prop_assert_eq!(evaluate(&ext, ext.world(n).unwrap(), &f, S).unwrap(), old.contains(w));
        }
        prop_assert_eq!(evaluate(&ext, ext.base().unwrap(), &f, S).unwrap(), old == m.all());
    });
}

/// Exhaustive cross-check of the representative-based sweeps: on every
/// rooted S model with at most 3 worlds, the truth sets of all 6087
/// formulas of depth ≤ 2 are exactly those of the representatives, and the
/// naive oracle agrees on each of them.
#[test]
fn representatives_cover_all_depth_two_formulas() {
    let space = FormulaSpace::new(&LanguageFragment::L_BOT_SUP, ["p", "q"]);
    let all = all_formulas(&space, 2);
    assert_eq!(all.len(), 6087);
    for m in models(S, true) {
        let naive = Naive::new(&m.to_description());
        let key = |f: &Formula| truth_set(m, f, S).unwrap();
        let reps: BTreeSet<_> = class_representatives(&space, 2, key).iter().map(key).collect();
        let every: BTreeSet<_> = all.iter().map(key).collect();
        assert_eq!(reps, every);
        for f in &all {
            let set = key(f);
            assert!(m.upset_violation(set).is_none());
            for w in m.worlds() {
                assert_eq!(set.contains(w), naive.eval(w.0, f, S));
            }
        }
    }
}
