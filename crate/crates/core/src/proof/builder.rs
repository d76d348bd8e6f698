//! Incremental proof construction with the derived rules and theorems used by
//! the corpus and by the deduction transformer.
//!
//! Every helper returns the index of a step proving the named formula. Steps
//! are memoized by formula, so asking for the same theorem twice costs nothing.

use std::collections::HashMap;

use super::check::{Justification, Proof, Step};
use super::system::{schema, Rule, SystemId};
use crate::syntax::{match_schema, Atom, Formula};

pub struct ProofBuilder {
    proof: Proof,
    index: HashMap<Formula, usize>,
}

fn imp_parts(f: &Formula) -> (Formula, Formula) {
    match f {
        Formula::IntImp(a, b) | Formula::ClsImp(a, b) => ((**a).clone(), (**b).clone()),
        _ => panic!("expected an implication, got {f}"),
    }
}

impl ProofBuilder {
    pub fn new(system: SystemId) -> Self {
        ProofBuilder { proof: Proof::new(system), index: HashMap::new() }
    }

    pub fn with_hypotheses(system: SystemId, hyps: Vec<Formula>) -> Self {
        let mut b = Self::new(system);
        b.proof.hypotheses = hyps;
        b
    }

    pub fn system(&self) -> SystemId {
        self.proof.system
    }

    pub fn formula(&self, i: usize) -> &Formula {
        &self.proof.steps[i].formula
    }

    fn push(&mut self, formula: Formula, by: Justification) -> usize {
        if let Some(&i) = self.index.get(&formula) {
            return i;
        }
        let i = self.proof.steps.len();
        self.index.insert(formula.clone(), i);
        self.proof.steps.push(Step { formula, by });
        i
    }

    pub fn hyp(&mut self, f: &Formula) -> usize {
        let h = self.proof.hypotheses.iter().position(|x| x == f).unwrap_or_else(|| panic!("{f} is not a hypothesis"));
        self.push(f.clone(), Justification::Hypothesis(h))
    }

    /// An axiom instance; `assign` maps metavariable names to formulas.
    pub fn axiom(&mut self, name: &str, assign: &[(&str, &Formula)]) -> usize {
        assert!(self.proof.system.has_axiom(name), "{name} is not an axiom of {}", self.proof.system);
        let s = schema(name).expect("registered");
        let sigma = assign.iter().map(|(k, v)| (Atom::new(k), (*v).clone())).collect();
        let f = s.instantiate(&sigma);
        let sigma = match_schema(s, &f, &self.proof.classical_atoms).expect("instance matches its schema");
        self.push(f, Justification::Axiom { name: s.name.clone(), assign: sigma })
    }

    /// The axiom step for a given instance formula.
    pub fn axiom_instance(&mut self, name: &str, f: &Formula) -> usize {
        let s = schema(name).expect("registered");
        let sigma = match_schema(s, f, &self.proof.classical_atoms).expect("instance matches its schema");
        self.push(f.clone(), Justification::Axiom { name: s.name.clone(), assign: sigma })
    }

    fn rule(&mut self, rule: Rule, premises: Vec<usize>, formula: Formula) -> usize {
        self.push(formula, Justification::Rule { rule, premises })
    }

    /// From `A` and `A ⊃ B`, infer `B` (MP, or CMP in CIPC).
    pub fn mp(&mut self, minor: usize, major: usize) -> usize {
        let (a, b) = imp_parts(self.formula(major));
        assert!(matches!(self.formula(major), Formula::ClsImp(..)) && a == *self.formula(minor));
        let rule = if self.proof.system == SystemId::Cipc { Rule::CMP } else { Rule::MP };
        self.rule(rule, vec![minor, major], b)
    }

    /// From `A` and `A → B`, infer `B`: primitive in L4, MPC and CIPC, and
    /// expanded through AxM1 and MP elsewhere.
    pub fn mp2(&mut self, minor: usize, major: usize) -> usize {
        let (a, b) = imp_parts(self.formula(major));
        assert!(matches!(self.formula(major), Formula::IntImp(..)) && a == *self.formula(minor));
        match self.proof.system {
            SystemId::L4 | SystemId::Mpc => self.rule(Rule::MP2, vec![minor, major], b),
            SystemId::Cipc => self.rule(Rule::IMP, vec![minor, major], b),
            _ => {
                let m1 = self.axiom("AxM1", &[("A", &a), ("B", &b)]);
                let sup = self.mp(major, m1);
                self.mp(minor, sup)
            }
        }
    }

    /// Detaches whichever conditional `major` is.
    pub fn detach(&mut self, minor: usize, major: usize) -> usize {
        match self.formula(major) {
            Formula::ClsImp(..) => self.mp(minor, major),
            _ => self.mp2(minor, major),
        }
    }

    /// Ends the proof at step `target`, dropping every step it does not
    /// depend on.
    pub fn finish(self, target: usize) -> Proof {
        let steps = &self.proof.steps;
        let mut needed = vec![false; target + 1];
        needed[target] = true;
        for i in (0..=target).rev() {
            if !needed[i] {
                continue;
            }
            match &steps[i].by {
                Justification::Rule { premises, .. } => premises.iter().for_each(|&j| needed[j] = true),
                Justification::Substitution { step, .. } => needed[*step] = true,
                _ => {}
            }
        }
        let mut renumber = vec![usize::MAX; target + 1];
        let mut kept = Vec::new();
        for (i, step) in steps[..=target].iter().enumerate().filter(|(i, _)| needed[*i]) {
            renumber[i] = kept.len();
            let by = match &step.by {
                Justification::Rule { rule, premises } => {
                    Justification::Rule { rule: *rule, premises: premises.iter().map(|&j| renumber[j]).collect() }
                }
                Justification::Substitution { step, atom, by } => {
                    Justification::Substitution { step: renumber[*step], atom: atom.clone(), by: by.clone() }
                }
                other => other.clone(),
            };
            kept.push(Step { formula: step.formula.clone(), by });
        }
        Proof { steps: kept, ..self.proof }
    }

    // ---- intuitionistic helpers (Ax1, Ax2, Ax5) ----

    /// `X → X`
    pub fn id_imp(&mut self, x: &Formula) -> usize {
        let xx = Formula::imp(x.clone(), x.clone());
        let a2 = self.axiom("Ax2", &[("A", x), ("B", &xx), ("C", x)]);
        let a1 = self.axiom("Ax1", &[("A", x), ("B", &xx)]);
        let s = self.mp2(a1, a2);
        let k = self.axiom("Ax1", &[("A", x), ("B", x)]);
        self.mp2(k, s)
    }

    /// From `X → Y` and `Y → Z`, infer `X → Z`.
    pub fn imp_chain(&mut self, xy: usize, yz: usize) -> usize {
        let (x, y) = imp_parts(self.formula(xy));
        let (_, z) = imp_parts(self.formula(yz));
        let yz_f = self.formula(yz).clone();
        let k = self.axiom("Ax1", &[("A", &yz_f), ("B", &x)]);
        let x_yz = self.mp2(yz, k);
        let s = self.axiom("Ax2", &[("A", &x), ("B", &y), ("C", &z)]);
        let d = self.mp2(x_yz, s);
        self.mp2(xy, d)
    }

    /// `(Y → Z) → ((X → Y) → (X → Z))`
    pub fn comp(&mut self, x: &Formula, y: &Formula, z: &Formula) -> usize {
        let s = self.axiom("Ax2", &[("A", x), ("B", y), ("C", z)]);
        let yz = Formula::imp(y.clone(), z.clone());
        let k = self.axiom("Ax1", &[("A", &yz), ("B", x)]);
        self.imp_chain(k, s)
    }

    /// From `X → (Y → Z)`, infer `Y → (X → Z)`.
    pub fn perm(&mut self, i: usize) -> usize {
        let (x, yz) = imp_parts(self.formula(i));
        let (y, z) = imp_parts(&yz);
        let s = self.axiom("Ax2", &[("A", &x), ("B", &y), ("C", &z)]);
        let d = self.mp2(i, s);
        let k = self.axiom("Ax1", &[("A", &y), ("B", &x)]);
        self.imp_chain(k, d)
    }

    /// `X → ((X → Y) → Y)`
    pub fn tcomb(&mut self, x: &Formula, y: &Formula) -> usize {
        let id = self.id_imp(&Formula::imp(x.clone(), y.clone()));
        self.perm(id)
    }

    /// From `X` and `Y`, infer `X ∧ Y`.
    pub fn conj_intro(&mut self, i: usize, j: usize) -> usize {
        let x = self.formula(i).clone();
        let y = self.formula(j).clone();
        let a5 = self.axiom("Ax5", &[("A", &x), ("B", &y), ("C", &x)]);
        let id = self.id_imp(&x);
        let d = self.mp2(id, a5);
        let k = self.axiom("Ax1", &[("A", &y), ("B", &x)]);
        let xy = self.mp2(j, k);
        let x_and = self.mp2(xy, d);
        self.mp2(i, x_and)
    }

    // ---- mixed helpers ----

    /// `A → (B ⊃ A)`, via AxM1 and AxM3.
    pub fn kmix(&mut self, a: &Formula, b: &Formula) -> usize {
        let aa = Formula::imp(a.clone(), a.clone());
        let id = self.id_imp(a);
        let k = self.axiom("Ax1", &[("A", &aa), ("B", b)]);
        let b_aa = self.mp2(id, k);
        let m1 = self.axiom("AxM1", &[("A", b), ("B", &aa)]);
        let sup = self.mp(b_aa, m1);
        let m3 = self.axiom("AxM3", &[("A", b), ("B", a), ("C", a)]);
        self.mp2(sup, m3)
    }

    /// `A ⊃ (B ⊃ A)`: an axiom of T, derived from Kmix elsewhere.
    pub fn ksup(&mut self, a: &Formula, b: &Formula) -> usize {
        if self.proof.system.has_axiom("Ksup") {
            return self.axiom("Ksup", &[("A", a), ("B", b)]);
        }
        let km = self.kmix(a, b);
        let ba = Formula::sup(b.clone(), a.clone());
        let m1 = self.axiom("AxM1", &[("A", a), ("B", &ba)]);
        self.mp(km, m1)
    }

    /// `(A ⊃ (B ⊃ C)) ⊃ ((A ⊃ B) ⊃ (A ⊃ C))`
    pub fn ssup(&mut self, a: &Formula, b: &Formula, c: &Formula) -> usize {
        let m2 = self.axiom("AxM2", &[("A", a), ("B", b), ("C", c)]);
        let (l, r) = imp_parts(self.formula(m2));
        let m1 = self.axiom("AxM1", &[("A", &l), ("B", &r)]);
        self.mp(m2, m1)
    }

    /// `A ⊃ ((A ⊃ B) → B)`: an axiom of T, from AxM4 elsewhere.
    pub fn mp3(&mut self, a: &Formula, b: &Formula) -> usize {
        if self.proof.system.has_axiom("MP3") {
            return self.axiom("MP3", &[("A", a), ("B", b)]);
        }
        let ab = Formula::sup(a.clone(), b.clone());
        let id = self.id_imp(&ab);
        let m4 = self.axiom("AxM4", &[("A", &ab), ("B", a), ("C", b)]);
        self.mp2(id, m4)
    }

    /// `X ⊃ X` from K⊃ and S⊃.
    pub fn id_sup(&mut self, x: &Formula) -> usize {
        let xx = Formula::sup(x.clone(), x.clone());
        let s = self.ssup(x, &xx, x);
        let k1 = self.ksup(x, &xx);
        let d = self.mp(k1, s);
        let k2 = self.ksup(x, x);
        self.mp(k2, d)
    }

    /// From `A ⊃ (X ⊃ Y)` and `A ⊃ X`, infer `A ⊃ Y`.
    pub fn sup_mp(&mut self, axy: usize, ax: usize) -> usize {
        let (a, xy) = imp_parts(self.formula(axy));
        let (x, y) = imp_parts(&xy);
        let s = self.ssup(&a, &x, &y);
        let d = self.mp(axy, s);
        self.mp(ax, d)
    }

    /// From `C`, infer `A ⊃ C`.
    pub fn weaken(&mut self, c: usize, a: &Formula) -> usize {
        let cf = self.formula(c).clone();
        let k = self.ksup(&cf, a);
        self.mp(c, k)
    }

    /// From `X → Y` and `A ⊃ X`, infer `A ⊃ Y`.
    pub fn lift(&mut self, xy: usize, ax: usize) -> usize {
        let (x, y) = imp_parts(self.formula(xy));
        let (a, _) = imp_parts(self.formula(ax));
        let m1 = self.axiom("AxM1", &[("A", &x), ("B", &y)]);
        let sup = self.mp(xy, m1);
        let a_sup = self.weaken(sup, &a);
        self.sup_mp(a_sup, ax)
    }

    /// From `A ⊃ B` and `B ⊃ C`, infer `A ⊃ C`.
    pub fn trans(&mut self, ab: usize, bc: usize) -> usize {
        let (a, _) = imp_parts(self.formula(ab));
        let a_bc = self.weaken(bc, &a);
        self.sup_mp(a_bc, ab)
    }

    /// `(A ⊃ (B ⊃ C)) → (B ⊃ (A ⊃ C))`
    pub fn ex(&mut self, a: &Formula, b: &Formula, c: &Formula) -> usize {
        let ab = Formula::sup(a.clone(), b.clone());
        let bc = Formula::sup(b.clone(), c.clone());
        let a_bc = Formula::sup(a.clone(), bc);
        let ac = Formula::sup(a.clone(), c.clone());
        let k = self.ksup(b, a);
        let m2 = self.axiom("AxM2", &[("A", a), ("B", b), ("C", c)]);
        let m4 = self.axiom("AxM4", &[("A", &a_bc), ("B", &ab), ("C", &ac)]);
        let step = self.mp2(m2, m4);
        let t = self.trans(k, step);
        let m3 = self.axiom("AxM3", &[("A", b), ("B", &a_bc), ("C", &ac)]);
        self.mp2(t, m3)
    }

    /// `(B → C) → ((A ⊃ B) → (A ⊃ C))`
    pub fn pfix(&mut self, a: &Formula, b: &Formula, c: &Formula) -> usize {
        let ab = Formula::sup(a.clone(), b.clone());
        let bc = Formula::imp(b.clone(), c.clone());
        let abc = Formula::imp(ab.clone(), c.clone());
        let m3 = self.mp3(a, b);
        let cp = self.comp(&ab, b, c);
        let t = self.perm(cp);
        let l = self.lift(t, m3);
        let x = self.axiom("AxM3", &[("A", a), ("B", &bc), ("C", &abc)]);
        let x = self.mp2(l, x);
        let y = self.axiom("AxM3", &[("A", a), ("B", &ab), ("C", c)]);
        self.imp_chain(x, y)
    }

    /// `A ∨ (A ⊃ B)`
    pub fn excluded_middle(&mut self, a: &Formula, b: &Formula) -> usize {
        let ab = Formula::sup(a.clone(), b.clone());
        let goal = Formula::or(a.clone(), ab.clone());
        let m5 = self.axiom("AxM5", &[("A", a), ("B", b), ("C", &goal)]);
        let a7 = self.axiom("Ax7", &[("A", a), ("B", &ab)]);
        let m1 = self.axiom("AxM1", &[("A", &ab), ("B", &goal)]);
        let r = self.mp(a7, m1);
        let a6 = self.axiom("Ax6", &[("A", a), ("B", &ab)]);
        let m1b = self.axiom("AxM1", &[("A", a), ("B", &goal)]);
        let l = self.mp(a6, m1b);
        let d = self.mp2(r, m5);
        self.mp2(l, d)
    }

    /// `B ⊃ ~~B`
    pub fn sup_dne(&mut self, b: &Formula) -> usize {
        let nb = Formula::eneg(b.clone());
        let id = self.id_sup(&nb);
        let e = self.ex(&nb, b, &Formula::Bottom);
        self.mp2(id, e)
    }

    /// `(B ⊃ C) ↔ (~~B → C)`
    pub fn sup_dne_equiv(&mut self, b: &Formula, c: &Formula) -> usize {
        let bot = Formula::Bottom;
        let nb = Formula::eneg(b.clone());
        let nnb = Formula::eneg(nb.clone());
        let bc = Formula::sup(b.clone(), c.clone());
        let nnb_c = Formula::imp(nnb.clone(), c.clone());
        let d = Formula::imp(bc.clone(), nnb_c.clone());

        // left to right, by cases on B with AxM5
        let m3b = self.mp3(b, c);
        let cp = self.comp(&bc, c, &nnb_c);
        let k = self.axiom("Ax1", &[("A", c), ("B", &nnb)]);
        let widen = self.mp2(k, cp);
        let case_b = self.lift(widen, m3b);
        let m3nb = self.mp3(&nb, &bot);
        let cp2 = self.comp(&nnb, &bot, c);
        let x0 = self.axiom("Ax0", &[("A", c)]);
        let efq = self.mp2(x0, cp2);
        let nb_nnbc = self.lift(efq, m3nb);
        let k2 = self.axiom("Ax1", &[("A", &nnb_c), ("B", &bc)]);
        let case_nb = self.lift(k2, nb_nnbc);
        let m5 = self.axiom("AxM5", &[("A", b), ("B", &bot), ("C", &d)]);
        let step = self.mp2(case_nb, m5);
        let ltr = self.mp2(case_b, step);

        // right to left, from B ⊃ ~~B
        let dne = self.sup_dne(b);
        let t = self.tcomb(&nnb, c);
        let pf = self.pfix(b, &nnb, &Formula::imp(nnb_c.clone(), c.clone()));
        let pf = self.mp2(t, pf);
        let b_res = self.mp2(dne, pf);
        let m3 = self.axiom("AxM3", &[("A", b), ("B", &nnb_c), ("C", c)]);
        let rtl = self.mp2(b_res, m3);
        self.conj_intro(ltr, rtl)
    }

    /// `□A ↔ ¬□¬□A` in L4.
    pub fn box_dneg(&mut self, a: &Formula) -> usize {
        let bot = Formula::Bottom;
        let ba = Formula::nec(a.clone());
        let dd = Formula::nec(Formula::neg(ba.clone()));
        let n = Formula::neg(dd.clone());
        let goal = Formula::imp(n.clone(), ba.clone());

        let b2 = self.axiom("□2", &[("A", &Formula::neg(ba.clone()))]);
        let ltr = self.perm(b2);

        let case1 = self.axiom("Ax1", &[("A", &ba), ("B", &n)]);
        let t = self.tcomb(&dd, &bot);
        let cp = self.comp(&n, &bot, &ba);
        let x0 = self.axiom("Ax0", &[("A", &ba)]);
        let widen = self.mp2(x0, cp);
        let case2 = self.imp_chain(t, widen);
        let a8 = self.axiom("Ax8", &[("A", &ba), ("B", &dd), ("C", &goal)]);
        let s1 = self.mp2(case1, a8);
        let s2 = self.mp2(case2, s1);
        let b4 = self.axiom("□4", &[("A", a), ("B", &bot)]);
        let rtl = self.mp2(b4, s2);
        self.conj_intro(ltr, rtl)
    }
}
