//! The registry of checkable claims about the logics.
//!
//! Each claim is a finite check: a sweep over every enumerated model within a
//! bound, a targeted countermodel search, or a seeded random probe. Sweeps
//! over "all formulas of depth ≤ d" use [`class_representatives`] keyed by
//! truth sets on the model at hand, which covers every formula exactly.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::enumerate::{bounded_consequence_jobs, enumerate_models, SearchBounds, SearchResult};
use super::space::{class_representatives, random_formula, FormulaSpace};
use crate::matrix3::{valid3, Validity3};
use crate::proof::{
    check_proof, deduction_transform, load_corpus, Justification, Proof, Rule, Step, SystemId,
};
use crate::semantics::{
    build_model, evaluate, holds_everywhere, refuting_world, truth_set, KripkeModel, ModelDescription,
    SemanticsVariant, World, WorldSet,
};
use crate::syntax::{
    parse_formula, render_formula, Assignment, Atom, Connective, Formula, LanguageFragment, SideCondition,
};
use crate::translate::{add_base, add_fresh_root_mpc, box_translate, sup_translate, truncate, TranslationDirection};

use SemanticsVariant::*;

/// Seed of every random probe in the registry.
pub const CLAIM_SEED: u64 = 0x6d69_786c;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Nothing found within the bound; not a failure.
    Unresolved,
}

impl ClaimStatus {
    pub fn name(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Unresolved => "unresolved",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClaimResult {
    pub claim: String,
    pub status: ClaimStatus,
    pub detail: String,
    pub witness: Value,
}

impl ClaimResult {
    fn new(claim: impl Into<String>, ok: bool, detail: impl Into<String>, witness: Value) -> Self {
        let status = if ok { ClaimStatus::Pass } else { ClaimStatus::Fail };
        ClaimResult { claim: claim.into(), status, detail: detail.into(), witness }
    }

    pub fn to_json(&self) -> Value {
        json!({"claim": self.claim, "status": self.status.name(), "detail": self.detail, "witness": self.witness})
    }
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<10} {:<36} {}", self.status.name().to_uppercase(), self.claim, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub claims: Vec<ClaimResult>,
}

impl Report {
    /// No claim failed. Unresolved claims do not count against this.
    pub fn ok(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn get(&self, claim: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim == claim)
    }

    pub fn text(&self) -> String {
        self.claims.iter().map(|c| format!("{c}\n")).collect()
    }

    /// One JSON object per line.
    pub fn json_lines(&self) -> String {
        self.claims.iter().map(|c| format!("{}\n", c.to_json())).collect()
    }
}

/// Tally of a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sweep {
    pub models: usize,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn absorb(&mut self, other: Sweep) {
        self.models += other.models;
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    fn summary(&self) -> String {
        match &self.first_failure {
            None => {
                let plural = if self.models == 1 { "" } else { "s" };
                format!("{} checks on {} model{plural}, 0 failures", self.checks, self.models)
            }
            Some(f) => format!("{} of {} checks failed; first: {f}", self.failures, self.checks),
        }
    }

    fn into_claim(self, claim: &str) -> ClaimResult {
        let witness = match &self.first_failure {
            Some(f) => json!({"first_failure": f}),
            None => json!({"models": self.models, "checks": self.checks}),
        };
        ClaimResult::new(claim, self.passed(), self.summary(), witness)
    }
}

/// Runs `per` on every model in parallel and merges in enumeration order.
fn over_models(models: Vec<KripkeModel>, per: impl Fn(&KripkeModel) -> Sweep + Sync) -> Sweep {
    let parts: Vec<Sweep> = models.par_iter().map(|m| Sweep { models: 1, ..per(m) }).collect();
    let mut total = Sweep::default();
    parts.into_iter().for_each(|p| total.absorb(p));
    total
}

fn models(b: &SearchBounds) -> Vec<KripkeModel> {
    enumerate_models(b).expect("bounds are valid").collect()
}

fn f(text: &str) -> Formula {
    parse_formula(text, &LanguageFragment::FULL).expect("built-in formula parses")
}

fn ts(m: &KripkeModel, a: &Formula, v: SemanticsVariant) -> WorldSet {
    truth_set(m, a, v).expect("formula within the variant's language")
}

fn model_json(m: &KripkeModel) -> Value {
    serde_json::to_value(m.to_description()).expect("plain data")
}

fn countermodel_json(m: &KripkeModel, w: World, formula: &Formula) -> Value {
    json!({"formula": render_formula(formula), "world": m.world_name(w), "model": model_json(m)})
}

fn fail_on(m: &KripkeModel, what: impl fmt::Display) -> String {
    format!("{what} on {}", m.to_description().to_json())
}

/// Bounds under which `v` is swept: its natural rooting, atoms `p` and a
/// second atom that is classical for the CIPC readings.
fn sweep_bounds(v: SemanticsVariant, rooted: bool, max_worlds: usize) -> (SearchBounds, FormulaSpace) {
    let b = SearchBounds::new(v).rooted(rooted).max_worlds(max_worlds);
    if v.is_cipc() {
        (b.atoms(["p", "c"]).classical(["c"]), FormulaSpace::new(&v.language(), ["p", "c"]))
    } else {
        (b.atoms(["p", "q"]), FormulaSpace::new(&v.language(), ["p", "q"]))
    }
}

/// Every formula of depth ≤ `depth` over two atoms is persistent on every
/// model of `v` with at most `max_worlds` worlds.
pub fn persistence_sweep(v: SemanticsVariant, rooted: bool, max_worlds: usize, depth: usize) -> Sweep {
    let (b, space) = sweep_bounds(v, rooted, max_worlds);
    over_models(models(&b), |m| {
        let mut s = Sweep::default();
        for a in class_representatives(&space, depth, |a| ts(m, a, v)) {
            let set = ts(m, &a, v);
            s.check(m.upset_violation(set).is_none(), || fail_on(m, format!("{a} is not persistent")));
        }
        s
    })
}

/// Every axiom instance of `system`, metavariables ranging over formulas of
/// depth ≤ `inst_depth`, is valid on every model of its semantics.
pub fn soundness_sweep(system: SystemId, max_worlds: usize, inst_depth: usize) -> Sweep {
    let (v, rooted) = system.semantics();
    let (b, _) = sweep_bounds(v, rooted, max_worlds);
    let atoms: Vec<&str> = if v.is_cipc() { vec!["p", "c"] } else { vec!["p", "q"] };
    let space = FormulaSpace::new(&system.language(), atoms.iter().copied());
    let classical_space = FormulaSpace { atoms: vec![Atom::new("c")], bottom: false, connectives: vec![Connective::ClsImp] };
    let axioms = system.axioms();
    over_models(models(&b), |m| {
        let key = |a: &Formula| ts(m, a, v);
        let reps = class_representatives(&space, inst_depth, key);
        let classical = if v.is_cipc() { class_representatives(&classical_space, inst_depth, key) } else { Vec::new() };
        let atomic: Vec<Formula> = space.atoms.iter().cloned().map(Formula::Atom).collect();
        let mut s = Sweep::default();
        for ax in &axioms {
            let metas: Vec<Atom> = ax.metavariables().into_iter().collect();
            let pools: Vec<&[Formula]> = metas
                .iter()
                .map(|x| {
                    if ax.side_conditions.contains(&SideCondition::Classical(x.clone())) {
                        &classical[..]
                    } else if ax.side_conditions.contains(&SideCondition::Atomic(x.clone())) {
                        &atomic[..]
                    } else {
                        &reps[..]
                    }
                })
                .collect();
            for_each_choice(&pools, |choice| {
                let sigma: Assignment = metas.iter().cloned().zip(choice.iter().map(|x| (*x).clone())).collect();
                let inst = ax.instantiate(&sigma);
                let refuted = refuting_world(m, &[], &inst, v).expect("axiom within the language");
                s.check(refuted.is_none(), || fail_on(m, format!("{} instance {inst}", ax.name)));
            });
        }
        s
    })
}

/// Calls `visit` on every element of the product of `pools`.
fn for_each_choice<'a>(pools: &[&'a [Formula]], mut visit: impl FnMut(&[&'a Formula])) {
    if pools.iter().any(|p| p.is_empty()) {
        return;
    }
    let mut idx = vec![0; pools.len()];
    loop {
        let choice: Vec<&Formula> = idx.iter().zip(pools).map(|(&i, p)| &p[i]).collect();
        visit(&choice);
        let mut k = pools.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < pools[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The translations preserve truth pointwise on base-free models:
/// `A` under the base-free ⊃ clause matches `A^□` in L4, `B` in L4 matches
/// `B^⊃`, and `A` matches `(A^□)^⊃`.
pub fn translation_sweep(max_worlds: usize, depth: usize) -> Sweep {
    let b = SearchBounds::new(SMinusBot).rooted(false).max_worlds(max_worlds).atoms(["p", "q"]);
    let sup_space = FormulaSpace::new(&TranslationDirection::ToBox.source(), ["p", "q"]);
    let box_space = FormulaSpace::new(&TranslationDirection::ToSup.source(), ["p", "q"]);
    over_models(models(&b), |m| {
        let mut s = Sweep::default();
        let sup_key = |a: &Formula| {
            let boxed = box_translate(a).expect("source fragment");
            let back = sup_translate(&boxed).expect("target fragment");
            (ts(m, a, SMinusBot), ts(m, &boxed, L4), ts(m, &back, SMinusBot))
        };
        for a in class_representatives(&sup_space, depth, sup_key) {
            let (x, y, z) = sup_key(&a);
            s.check(x == y, || fail_on(m, format!("{a} differs from its box translation")));
            s.check(x == z, || fail_on(m, format!("{a} differs from its round trip")));
        }
        let box_key = |a: &Formula| (ts(m, a, L4), ts(m, &sup_translate(a).expect("source fragment"), SMinusBot));
        for a in class_representatives(&box_space, depth, box_key) {
            let (x, y) = box_key(&a);
            s.check(x == y, || fail_on(m, format!("{a} differs from its sup translation")));
        }
        s
    })
}

/// Adding a base below a base-free model preserves disjunction-free
/// formulas at old worlds, and the base verifies exactly the formulas that
/// held everywhere.
pub fn base_addition_sweep(max_worlds: usize, depth: usize) -> Sweep {
    let b = SearchBounds::new(SMinusBot).rooted(false).max_worlds(max_worlds).atoms(["p", "q"]);
    let space = FormulaSpace::new(&LanguageFragment::L_MINUS_BOT_SUP, ["p", "q"]);
    over_models(models(&b), |m| {
        let mut s = Sweep::default();
        let ext = add_base(m).expect("base-free model");
        s.check(ext.validate(S).is_ok(), || fail_on(m, "extension is not an S model"));
        let g = ext.base().expect("new base");
        let key = |a: &Formula| (ts(m, a, SMinusBot), ts(&ext, a, S));
        for a in class_representatives(&space, depth, key) {
            let (old, new) = key(&a);
            // the new base is world 0, old world i is now i + 1
            s.check(WorldSet(new.0 >> 1) == old, || fail_on(m, format!("{a} changes at old worlds")));
            s.check((old == m.all()) == new.contains(g), || fail_on(m, format!("{a} at the new base")));
        }
        s
    })
}

/// The two-world model with incomparable worlds verifying `p` and `q`.
pub fn disjunction_model() -> KripkeModel {
    let d = ModelDescription::from_json(r#"{"worlds":["w","v"],"valuation":{"w":["p"],"v":["q"]}}"#).expect("json");
    build_model(&d, SMinusBot).expect("valid model")
}

/// `p ∨ q` holds everywhere in [`disjunction_model`] but fails at the added base.
pub fn disjunction_violation() -> ClaimResult {
    let m = disjunction_model();
    let pq = f("p | q");
    let ext = add_base(&m).expect("base-free");
    let g = ext.base().expect("base");
    let everywhere = holds_everywhere(&m, &pq, SMinusBot).expect("language");
    let at_g = evaluate(&ext, g, &pq, S).expect("language");
    ClaimResult::new(
        "base-addition-disjunction-violation",
        everywhere && !at_g,
        format!("p | q holds everywhere before: {everywhere}; at the new base: {at_g}"),
        countermodel_json(&ext, g, &pq),
    )
}

pub const AXM6_INSTANCE: &str = "(p => r) -> ((q => r) -> ((p | q) => r))";
pub const X3_INSTANCE: &str = "p => ((p => q) -> (p -> q))";

fn search(premises: &[Formula], a: &Formula, b: &SearchBounds, jobs: usize) -> SearchResult {
    bounded_consequence_jobs(premises, a, b, jobs).expect("valid search")
}

/// Re-checks a countermodel independently of the search.
fn reverifies(premises: &[Formula], a: &Formula, m: &KripkeModel, w: World, v: SemanticsVariant) -> bool {
    m.validate(v).is_ok()
        && premises.iter().all(|p| evaluate(m, w, p, v) == Ok(true) || holds_everywhere(m, p, v) == Ok(true))
        && evaluate(m, w, a, v) == Ok(false)
}

/// AxM6 fails on the two-world base-free model and nowhere on rooted models.
pub fn axm6_countermodel(jobs: usize) -> ClaimResult {
    let a = f(AXM6_INSTANCE);
    let b = SearchBounds::new(SMinusBot).rooted(false).max_worlds(2);
    let res = search(&[], &a, &b, jobs);
    let rooted_ok = [S, SMinusBot].iter().all(|&v| search(&[], &a, &SearchBounds::new(v).rooted(true).max_worlds(3), jobs).is_valid());
    match res.countermodel() {
        Some((m, w)) => {
            let iso = m.is_isomorphic(&disjunction_model());
            ClaimResult::new(
                "axm6-unrooted-countermodel",
                iso && rooted_ok && reverifies(&[], &a, m, w, SMinusBot),
                format!("{}-world countermodel, isomorphic to the expected one: {iso}; valid on rooted models <= 3: {rooted_ok}", m.len()),
                countermodel_json(m, w, &a),
            )
        }
        None => ClaimResult::new("axm6-unrooted-countermodel", false, "no countermodel within 2 worlds", Value::Null),
    }
}

/// `(p ⊃ q) → (p → q)` is refuted by the three-valued matrix and by a Kripke
/// model, while every S axiom takes the designated value.
pub fn matrix3_refutation(jobs: usize) -> ClaimResult {
    let a = f("(p => q) -> (p -> q)");
    let m3 = match valid3(&a).expect("positive formula") {
        Validity3::Refuted(asg) => Some(asg),
        Validity3::Valid => None,
    };
    let kripke = search(&[f("p => q")], &f("p -> q"), &SearchBounds::new(S).max_worlds(2), jobs);
    let axioms_ok: Vec<&str> = SystemId::S
        .axioms()
        .into_iter()
        .filter(|ax| valid3(&ax.pattern) != Ok(Validity3::Valid))
        .map(|ax| ax.name.as_str())
        .collect();
    let ok = m3.is_some() && !kripke.is_valid() && axioms_ok.is_empty();
    let witness = json!({
        "assignment": m3.as_ref().map(|asg| asg.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect::<std::collections::BTreeMap<_, _>>()),
        "kripke": kripke.countermodel().map(|(m, w)| countermodel_json(m, w, &a)),
    });
    ClaimResult::new(
        "sup-does-not-give-imp",
        ok,
        format!(
            "matrix refutes: {}; Kripke countermodel: {}; S axioms not valid in the matrix: {:?}",
            m3.is_some(),
            !kripke.is_valid(),
            axioms_ok
        ),
        witness,
    )
}

/// The three-world weak-absurdity model: base `g` below `a` and `b`, with ⊥
/// and every atom true exactly off the base.
pub fn weak_absurdity_model() -> KripkeModel {
    let d = ModelDescription::from_json(
        r#"{"worlds":["g","a","b"],"order":[["g","a"],["g","b"]],"base":"g",
            "valuation":{"a":["p","q"],"b":["p","q"]},"bot_true_at":["a","b"]}"#,
    )
    .expect("json");
    build_model(&d, SBotW).expect("valid model")
}

/// Random formulas on [`weak_absurdity_model`] are true everywhere or
/// exactly off the base; none is false everywhere.
pub fn weak_absurdity_probe(samples: usize, depth: usize, seed: u64) -> Sweep {
    let m = weak_absurdity_model();
    let g = m.base().expect("base");
    let off_base = WorldSet(m.all().0 & !WorldSet::singleton(g).0);
    let space = FormulaSpace::new(&SBotW.language(), ["p", "q"]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Sweep { models: 1, ..Sweep::default() };
    for _ in 0..samples {
        let a = random_formula(&space, depth, &mut rng);
        let set = ts(&m, &a, SBotW);
        s.check(set == m.all() || set == off_base, || format!("{a} has truth set {set:?}"));
    }
    s
}

/// MPC countermodels found by search, truncated at the refuting world and
/// given a fresh root, are weak-absurdity models refuting the same formula.
pub fn mpc_transport(count: usize, seed: u64) -> Sweep {
    let space = FormulaSpace::new(&LanguageFragment::L_BOT, ["p", "q"]);
    let b = SearchBounds::new(Mpc).rooted(false).max_worlds(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Sweep::default();
    let mut attempts = 0;
    while s.models < count && attempts < 100 * count {
        attempts += 1;
        let a = random_formula(&space, 3, &mut rng);
        let Some((m, w)) = search(&[], &a, &b, 1).countermodel().map(|(m, w)| (m.clone(), w)) else {
            continue;
        };
        s.models += 1;
        let name = m.world_name(w).to_string();
        let cut = truncate(&m, Mpc, w).expect("mpc model");
        let w1 = cut.world(&name).expect("kept");
        s.check(evaluate(&cut, w1, &a, Mpc) == Ok(false), || fail_on(&m, format!("{a} after truncation")));
        let rooted = add_fresh_root_mpc(&cut, Mpc).expect("mpc model");
        let r = rooted.base().expect("root");
        let w2 = rooted.world(&name).expect("kept");
        s.check(rooted.validate(SBotW).is_ok(), || fail_on(&rooted, "not a weak-absurdity model"));
        s.check(evaluate(&rooted, w2, &a, SBotW) == Ok(false), || fail_on(&rooted, format!("{a} at {name}")));
        s.check(refuting_world(&rooted, &[], &a, SBotW) == Ok(Some(r)), || fail_on(&rooted, format!("{a} at the root")));
    }
    if s.models < count {
        let found = s.models;
        s.check(false, || format!("only {found} countermodels in {attempts} attempts"));
    }
    s
}

/// The three readings of ⇒ agree on rooted models.
pub fn cipc_readings_sweep(max_worlds: usize, depth: usize) -> Sweep {
    let (b, space) = sweep_bounds(CipcB, true, max_worlds);
    over_models(models(&b), |m| {
        let mut s = Sweep::default();
        let key = |a: &Formula| (ts(m, a, CipcA), ts(m, a, CipcB), ts(m, a, CipcC));
        for a in class_representatives(&space, depth, key) {
            let (x, y, z) = key(&a);
            s.check(x == y && y == z, || fail_on(m, format!("readings differ on {a}")));
        }
        s
    })
}

/// X3 fails under reading (a) on base-free models and holds under (c).
pub fn x3_divergence(jobs: usize) -> ClaimResult {
    let a = f(X3_INSTANCE);
    let ra = search(&[], &a, &SearchBounds::new(CipcA).rooted(false).max_worlds(3), jobs);
    let rc = search(&[], &a, &SearchBounds::new(CipcC).rooted(false).max_worlds(3), jobs);
    let reverified = ra.countermodel().is_some_and(|(m, w)| reverifies(&[], &a, m, w, CipcA));
    ClaimResult::new(
        "x3-divergence",
        reverified && rc.is_valid(),
        format!("countermodel under reading a: {}; valid up to 3 worlds under reading c: {}", reverified, rc.is_valid()),
        ra.countermodel().map(|(m, w)| countermodel_json(m, w, &a)).unwrap_or(Value::Null),
    )
}

/// Distribution of ⇒ over ∨ fails under reading (c) without a root.
pub fn cipc_disjunction(jobs: usize) -> ClaimResult {
    let a = f(AXM6_INSTANCE);
    let res = search(&[], &a, &SearchBounds::new(CipcC).rooted(false).max_worlds(3), jobs);
    let ok = res.countermodel().is_some_and(|(m, w)| reverifies(&[], &a, m, w, CipcC));
    ClaimResult::new(
        "cipc-disjunction-distribution",
        ok,
        format!("unrooted countermodel under reading c: {ok}"),
        res.countermodel().map(|(m, w)| countermodel_json(m, w, &a)).unwrap_or(Value::Null),
    )
}

/// Instances of `name` with metavariables mapped to atoms among `p`, `q`, `r`.
fn atomic_instances(name: &str) -> Vec<Formula> {
    let s = crate::proof::schema(name).expect("registered");
    let metas: Vec<Atom> = s.metavariables().into_iter().collect();
    let atoms: Vec<Formula> = ["p", "q", "r"].iter().map(Formula::atom).collect();
    let pools: Vec<&[Formula]> = metas.iter().map(|_| &atoms[..]).collect();
    let mut out = Vec::new();
    for_each_choice(&pools, |choice| {
        let sigma: Assignment = metas.iter().cloned().zip(choice.iter().map(|x| (*x).clone())).collect();
        out.push(s.instantiate(&sigma));
    });
    out
}

/// Searches S-models refuting T1/T2 and T-models refuting AxM3/AxM4.
/// Without witnesses in both directions the claim stays unresolved.
pub fn st_incomparability(max_worlds: usize, jobs: usize) -> ClaimResult {
    let probe = |names: &[&str], v: SemanticsVariant| -> Option<(String, Formula, KripkeModel, World)> {
        let b = SearchBounds::new(v).max_worlds(max_worlds);
        names.iter().find_map(|n| {
            atomic_instances(n).into_iter().find_map(|a| {
                let (m, w) = search(&[], &a, &b, jobs).countermodel().map(|(m, w)| (m.clone(), w))?;
                reverifies(&[], &a, &m, w, v).then(|| (n.to_string(), a, m, w))
            })
        })
    };
    let s_side = probe(&["T1", "T2"], S);
    let t_side = probe(&["AxM3", "AxM4"], T);
    let describe = |x: &Option<(String, Formula, KripkeModel, World)>| match x {
        Some((n, a, m, _)) => format!("{n} refuted by {a} on {} worlds", m.len()),
        None => format!("no witness at bound {max_worlds}"),
    };
    let detail = format!("S vs T axioms: {}; T vs S axioms: {}", describe(&s_side), describe(&t_side));
    let wit = |x: &Option<(String, Formula, KripkeModel, World)>| {
        x.as_ref().map(|(n, a, m, w)| json!({"axiom": n, "countermodel": countermodel_json(m, *w, a)}))
    };
    let witness = json!({"s_model_refuting_t_axiom": wit(&s_side), "t_model_refuting_s_axiom": wit(&t_side)});
    let status = if s_side.is_some() && t_side.is_some() { ClaimStatus::Pass } else { ClaimStatus::Unresolved };
    ClaimResult { claim: "s-t-incomparability".into(), status, detail, witness }
}

/// Visits the single-step mutants of a proof. At step `i` these are: the
/// formula of a step within distance 3 of `i`, every other axiom label of
/// the system, each premise moved to a neighbouring earlier step or to
/// `i - 1`, every other hypothesis index, and a changed substituend.
/// Mutants equal to the original are skipped.
pub fn for_each_mutant(p: &Proof, mut visit: impl FnMut(&Proof)) {
    let names = p.system.axiom_names();
    let mut q = p.clone();
    for i in 0..p.steps.len() {
        let step = &p.steps[i];
        let mut alternatives: Vec<Step> = Vec::new();
        let near = i.saturating_sub(3)..(i + 4).min(p.steps.len());
        let formulas: BTreeSet<&Formula> = p.steps[near].iter().map(|o| &o.formula).filter(|x| **x != step.formula).collect();
        alternatives.extend(formulas.into_iter().map(|x| Step { formula: x.clone(), by: step.by.clone() }));
        let same = |by: Justification| Step { formula: step.formula.clone(), by };
        match &step.by {
            Justification::Axiom { name, assign } => {
                for n in names.iter().filter(|n| **n != name.as_str()) {
                    alternatives.push(same(Justification::Axiom { name: n.to_string(), assign: assign.clone() }));
                }
            }
            Justification::Rule { rule, premises } => {
                for k in 0..premises.len() {
                    let targets: BTreeSet<usize> = [premises[k].wrapping_sub(1), premises[k] + 1, i.wrapping_sub(1)].into();
                    for j in targets.into_iter().filter(|j| *j < i && !premises.contains(j)) {
                        let mut ps = premises.clone();
                        ps[k] = j;
                        alternatives.push(same(Justification::Rule { rule: *rule, premises: ps }));
                    }
                }
            }
            Justification::Hypothesis(h) => {
                for j in (0..p.hypotheses.len()).filter(|j| j != h) {
                    alternatives.push(same(Justification::Hypothesis(j)));
                }
            }
            Justification::Substitution { step: from, atom, .. } => {
                alternatives.push(same(Justification::Substitution { step: *from, atom: atom.clone(), by: Formula::atom("z") }));
            }
        }
        for alt in alternatives {
            if alt != *step {
                q.steps[i] = alt;
                visit(&q);
            }
        }
        q.steps[i] = step.clone();
    }
}

/// A random proof in an MP-only system from hypotheses `A`, `A ⊃ B`,
/// `B ⊃ C` and one more, mixing hypotheses, axiom instances and MP.
pub fn random_mp_proof(system: SystemId, rng: &mut impl Rng) -> Proof {
    assert!(system.mp_only());
    let space = FormulaSpace::new(&system.language(), ["p", "q", "r"]);
    let [a, b, c, d] = std::array::from_fn(|_| random_formula(&space, 2, rng));
    let mut hyps = vec![a.clone(), Formula::sup(a, b.clone()), Formula::sup(b, c), d];
    hyps.shuffle(rng);
    hyps.dedup();
    let axioms = system.axioms();
    let mut steps: Vec<Step> = Vec::new();
    let len = rng.gen_range(3..12);
    while steps.len() < len {
        let pairs: Vec<(usize, usize)> = (0..steps.len())
            .flat_map(|i| (0..steps.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| matches!(&steps[j].formula, Formula::ClsImp(x, _) if **x == steps[i].formula))
            .collect();
        match rng.gen_range(0..3) {
            0 if !pairs.is_empty() => {
                let (i, j) = pairs[rng.gen_range(0..pairs.len())];
                let Formula::ClsImp(_, y) = &steps[j].formula else { unreachable!() };
                steps.push(Step { formula: (**y).clone(), by: Justification::Rule { rule: Rule::MP, premises: vec![i, j] } });
            }
            1 => {
                let ax = axioms[rng.gen_range(0..axioms.len())];
                let sigma: Assignment = ax
                    .metavariables()
                    .into_iter()
                    .map(|x| {
                        let atomic = ax.side_conditions.contains(&SideCondition::Atomic(x.clone()));
                        let val = random_formula(&space, if atomic { 0 } else { 1 }, rng);
                        (x, val)
                    })
                    .collect();
                let formula = ax.instantiate(&sigma);
                steps.push(Step { formula, by: Justification::Axiom { name: ax.name.clone(), assign: sigma } });
            }
            _ => {
                let h = rng.gen_range(0..hyps.len());
                steps.push(Step { formula: hyps[h].clone(), by: Justification::Hypothesis(h) });
            }
        }
    }
    Proof { system, hypotheses: hyps, classical_atoms: BTreeSet::new(), steps }
}

/// Corpus acceptance, mutant rejection, and deduction round trips on
/// `random` seeded random proofs.
pub fn proof_corpus_check(random: usize, seed: u64) -> (Sweep, Sweep, Sweep) {
    let mut accepted = Sweep::default();
    let mut mutation = Sweep::default();
    match load_corpus() {
        Ok(entries) => {
            for e in &entries {
                accepted.models += 1;
                accepted.check(check_proof(&e.proof).accepted, || format!("{} rejected", e.name));
                for_each_mutant(&e.proof, |q| {
                    let v = check_proof(q);
                    mutation.check(!v.accepted, || format!("mutant of {} accepted: {}", e.name, crate::proof::proof_to_json(q)));
                });
            }
            mutation.models = entries.len();
        }
        Err(err) => accepted.check(false, || err.to_string()),
    }
    let mut deduction = Sweep::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let systems = [SystemId::S, SystemId::T, SystemId::SBot, SystemId::SMinusBot, SystemId::SBotW];
    for k in 0..random {
        let p = random_mp_proof(systems[k % systems.len()], &mut rng);
        deduction.models += 1;
        let input_ok = check_proof(&p).accepted;
        deduction.check(input_ok, || format!("generated proof rejected: {}", check_proof(&p)));
        if !input_ok {
            continue;
        }
        let a = p.hypotheses[rng.gen_range(0..p.hypotheses.len())].clone();
        let b = p.conclusion().expect("nonempty").clone();
        let out = match deduction_transform(&p, &a) {
            Ok(out) => out,
            Err(e) => {
                deduction.check(false, || e.to_string());
                continue;
            }
        };
        let want = Formula::sup(a.clone(), b.clone());
        deduction.check(check_proof(&out).accepted && out.conclusion() == Some(&want), || {
            format!("transform of proof {k} is wrong: {}", check_proof(&out))
        });
        // and back: re-adding A and detaching gives B again
        let mut back = out.clone();
        back.hypotheses.push(a.clone());
        let n = back.steps.len();
        back.steps.push(Step { formula: a, by: Justification::Hypothesis(back.hypotheses.len() - 1) });
        back.steps.push(Step { formula: b.clone(), by: Justification::Rule { rule: Rule::MP, premises: vec![n, n - 1] } });
        deduction.check(check_proof(&back).accepted && back.conclusion() == Some(&b), || format!("round trip {k} fails"));
    }
    (accepted, mutation, deduction)
}

/// Bounds used by [`run_paper_claims`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimBounds {
    pub max_worlds: usize,
    /// Depth of swept formulas.
    pub depth: usize,
    /// Depth of axiom-instance formulas.
    pub inst_depth: usize,
}

impl Default for ClaimBounds {
    fn default() -> Self {
        ClaimBounds { max_worlds: 3, depth: 3, inst_depth: 2 }
    }
}

/// Runs every claim with `jobs` worker threads.
pub fn run_paper_claims(jobs: usize) -> Report {
    run_paper_claims_with(ClaimBounds::default(), jobs)
}

pub fn run_paper_claims_with(bounds: ClaimBounds, jobs: usize) -> Report {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    pool.install(|| claims(bounds, jobs))
}

fn claims(cb: ClaimBounds, jobs: usize) -> Report {
    let ClaimBounds { max_worlds: n, depth, inst_depth } = cb;
    let mut out = Vec::new();
    for v in SemanticsVariant::ALL {
        out.push(persistence_sweep(v, v.requires_base(), n, depth).into_claim(&format!("persistence-{v}")));
    }
    for s in [
        SystemId::S,
        SystemId::T,
        SystemId::SBot,
        SystemId::SMinusBot,
        SystemId::SBotW,
        SystemId::L4,
        SystemId::Mpc,
        SystemId::Cipc,
    ] {
        out.push(soundness_sweep(s, n, inst_depth).into_claim(&format!("soundness-{s}")));
    }
    out.push(matrix3_refutation(jobs));
    out.push(axm6_countermodel(jobs));
    out.push(base_addition_sweep(n, depth).into_claim("base-addition"));
    out.push(disjunction_violation());
    out.push(translation_sweep(n, depth).into_claim("translation-correspondence"));
    out.push(weak_absurdity_probe(200, 4, CLAIM_SEED).into_claim("weak-absurdity-no-falsum"));
    out.push(mpc_transport(50, CLAIM_SEED).into_claim("mpc-transport"));
    out.push(cipc_readings_sweep(n, depth).into_claim("cipc-readings-agree"));
    out.push(x3_divergence(jobs));
    out.push(cipc_disjunction(jobs));
    out.push(st_incomparability(n, jobs));
    let (accepted, mutation, deduction) = proof_corpus_check(50, CLAIM_SEED);
    out.push(accepted.into_claim("proof-corpus-accepted"));
    out.push(mutation.into_claim("proof-corpus-mutants-rejected"));
    out.push(deduction.into_claim("deduction-round-trips"));
    Report { claims: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        let r = run_paper_claims_with(ClaimBounds { max_worlds: 2, depth: 2, inst_depth: 1 }, 2);
        assert!(r.ok(), "{}", r.text());
        assert_eq!(r.json_lines().lines().count(), r.claims.len());
        for line in r.json_lines().lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert!(["pass", "fail", "unresolved"].contains(&v["status"].as_str().unwrap()));
        }
    }

    #[test]
    fn sweeps_detect_a_broken_claim() {
        // the same sweep machinery reports genuine failures: ⊥ → p is not
        // valid in MPC, so MPC's models refute the S⊥ axiom Ax0
        let (b, _) = sweep_bounds(Mpc, false, 1);
        let bad = over_models(models(&b), |m| {
            let mut s = Sweep::default();
            s.check(refuting_world(m, &[], &f("bot -> p"), Mpc).unwrap().is_none(), || fail_on(m, "Ax0"));
            s
        });
        assert!(!bad.passed() && bad.first_failure.is_some());
    }

    #[test]
    fn every_corpus_mutant_is_distinct_and_rejected() {
        let (acc, mutation, _) = proof_corpus_check(0, 1);
        assert!(acc.passed(), "{acc:?}");
        assert!(mutation.passed() && mutation.checks > 1000, "{mutation:?}");
    }

    #[test]
    fn random_proofs_round_trip() {
        let (_, _, d) = proof_corpus_check(20, 7);
        assert!(d.passed(), "{d:?}");
    }
}
