//! Replayable elimination scripts over the isomorphism equations.
//!
//! A script fixes a dimension, a deformation direction, a matrix stage, an
//! optional component restriction of the parameters, a multiplicative set of
//! declared-nonzero polynomials, and a list of named variety generators. It
//! then replays elimination steps:
//!
//! * `Expand` introduces a defect coefficient `E[i,j]^k` as a named fact,
//!   with all bindings accumulated so far already substituted;
//! * `SolveLinear` turns a fact into a binding `var = num/den` whose
//!   denominator is certified against the multiplicative set, and rewrites
//!   every stored fact and binding;
//! * `Combine` forms a polynomial combination of facts and variety
//!   generators with explicit cofactors;
//! * `AssertFact` / `Substitute` check a fact or an accumulated binding
//!   against a transcribed expected value;
//! * `ConcludeVarZero` finishes: the fact must be a certified unit times a
//!   single variable, which therefore vanishes on the solution set.
//!
//! Every fact is kept as a reduced fraction whose denominator is a
//! certified unit of the localization, so a fact vanishes exactly where its
//! numerator does. `AssertFact` compares numerators, i.e. identities with
//! denominators cleared. Replay is deterministic.

use super::defect::{iso_defect, EqLabel};
use super::matrix::{generic_g, Stage};
use crate::deform::{derivation, phi_from_derivation, DerivationSpec};
use crate::exactalg::{solve_linear, Fraction, MultiplicativeSet, Polynomial, SolveError, VarId};
use crate::liecore::SubspaceSplit;
use crate::vergne::generic_filiform;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, thiserror::Error)]
pub enum ScriptError {
    #[error("step failed ({desc}): {reason}")]
    StepFailed { desc: String, reason: String },
    #[error("unknown fact `{0}`")]
    UnknownFact(String),
    #[error("duplicate fact name `{0}`")]
    DuplicateFact(String),
    #[error("unknown variety generator `{0}`")]
    UnknownGenerator(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("denominator lost certification after rewrite: {0}")]
    DenominatorUncertified(String),
    #[error(transparent)]
    Iso(#[from] super::matrix::IsoError),
    #[error(transparent)]
    Deform(#[from] crate::deform::DeformError),
}

/// Execution context of a script.
#[derive(Clone, Debug)]
pub struct ScriptContext {
    pub n: usize,
    pub derivation: DerivationSpec,
    pub stage: Stage,
    /// Component restriction applied to the parameters before anything else.
    pub parameter_subs: Vec<(VarId, Polynomial)>,
    /// Declared-nonzero polynomials (open-set generators, diagonal entries).
    pub nonzero: MultiplicativeSet,
    /// Named variety generators usable in `Combine`.
    pub variety: Vec<(String, Polynomial)>,
    /// Bindings established by earlier scripts, applied at start-up.
    pub assumptions: Vec<(VarId, Fraction)>,
}

#[derive(Clone, Debug)]
pub enum Step {
    Expand(EqLabel),
    /// Check the (denominator-cleared) value of a fact.
    AssertFact {
        fact: String,
        expected: Polynomial,
    },
    SolveLinear {
        fact: String,
        var: VarId,
    },
    /// Checkpoint: the accumulated binding of `var` equals `num/den`.
    Substitute {
        var: VarId,
        num: Polynomial,
        den: Polynomial,
    },
    Combine {
        name: String,
        facts: Vec<(Polynomial, String)>,
        generators: Vec<(Polynomial, String)>,
    },
    ConcludeVarZero {
        fact: String,
        var: VarId,
    },
    /// The raw matrix with all bindings applied equals `generic_g(n, stage)`.
    AssertNormalForm {
        stage: Stage,
    },
}

impl Step {
    pub fn describe(&self) -> String {
        match self {
            Step::Expand(l) => format!("expand {l}"),
            Step::AssertFact { fact, .. } => format!("assert {fact}"),
            Step::SolveLinear { fact, var } => format!("solve {fact} for {var}"),
            Step::Substitute { var, .. } => format!("substitute {var}"),
            Step::Combine { name, .. } => format!("combine {name}"),
            Step::ConcludeVarZero { fact, var } => format!("conclude {var} = 0 from {fact}"),
            Step::AssertNormalForm { stage } => format!("normal form `{}`", stage.name()),
        }
    }
}

/// A proof script: context, steps, goal, and recorded discrepancies between
/// the transcription it certifies and the oracle.
#[derive(Clone, Debug)]
pub struct ProofScript {
    pub name: String,
    pub context: ScriptContext,
    pub steps: Vec<Step>,
    /// Variable the script is meant to force to zero (usually `t`).
    pub goal: Option<VarId>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub desc: String,
    pub detail: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub script: String,
    pub dim: usize,
    pub passed: bool,
    pub goal_reached: bool,
    pub steps: Vec<StepReport>,
    pub concluded: Vec<String>,
    pub notes: Vec<String>,
}

struct Interpreter {
    ctx: ScriptContext,
    defects: BTreeMap<EqLabel, Polynomial>,
    facts: BTreeMap<String, Fraction>,
    bindings: Vec<(VarId, Fraction)>,
    concluded: Vec<VarId>,
}

impl Interpreter {
    fn new(ctx: &ScriptContext) -> Result<Self, ScriptError> {
        let n = ctx.n;
        let model = generic_filiform(n);
        let subs: BTreeMap<VarId, Polynomial> = ctx.parameter_subs.iter().cloned().collect();
        let mu = model.mu.substitute(&subs);
        let d = derivation(&ctx.derivation)?;
        let split = SubspaceSplit::standard(n);
        let phi = phi_from_derivation(&mu, &split, &d)?;
        let mu_t = mu
            .add(&phi.scale_poly(&Polynomial::var(VarId::Time)))
            .expect("same dimension");
        let g = generic_g(n, ctx.stage)?;
        let defects = iso_defect(&mu_t, &mu, &g)?;
        let mut interp = Interpreter {
            ctx: ctx.clone(),
            defects,
            facts: BTreeMap::new(),
            bindings: Vec::new(),
            concluded: Vec::new(),
        };
        for (var, frac) in ctx.assumptions.clone() {
            interp.bind(var, frac)?;
        }
        Ok(interp)
    }

    fn binding_of(&self, var: VarId) -> Option<&Fraction> {
        self.bindings
            .iter()
            .find(|(v, _)| *v == var)
            .map(|(_, f)| f)
    }

    fn check_den(&self, f: &Fraction) -> Result<(), ScriptError> {
        if !f.is_polynomial() && self.ctx.nonzero.certify(&f.den).is_none() {
            return Err(ScriptError::DenominatorUncertified(f.den.to_string()));
        }
        Ok(())
    }

    /// Install `var = frac` and rewrite every fact and binding value.
    fn bind(&mut self, var: VarId, frac: Fraction) -> Result<(), ScriptError> {
        let ms = self.ctx.nonzero.clone();
        for fact in self.facts.values_mut() {
            *fact = fact.substitute_var(var, &frac, &ms);
        }
        for fact in self.facts.values() {
            self.check_den(fact)?;
        }
        let existing = std::mem::take(&mut self.bindings);
        for (v, f) in existing {
            if v == var {
                continue;
            }
            let new = f.substitute_var(var, &frac, &ms);
            self.check_den(&new)?;
            self.bindings.push((v, new));
        }
        self.bindings.push((var, frac));
        Ok(())
    }

    /// Current value of a defect label with all bindings applied.
    fn expand_label(&self, label: EqLabel) -> Result<Fraction, ScriptError> {
        let mut f = Fraction::from_poly(self.defects.get(&label).cloned().unwrap_or_default());
        for (var, val) in &self.bindings {
            f = f.substitute_var(*var, val, &self.ctx.nonzero);
        }
        self.check_den(&f)?;
        Ok(f)
    }

    fn run_step(&mut self, step: &Step) -> Result<String, ScriptError> {
        match step {
            Step::Expand(label) => {
                let name = label.to_string();
                if self.facts.contains_key(&name) {
                    return Err(ScriptError::DuplicateFact(name));
                }
                let f = self.expand_label(*label)?;
                let detail = format!("{name} = {f}");
                self.facts.insert(name, f);
                Ok(detail)
            }
            Step::AssertFact { fact, expected } => {
                let f = self
                    .facts
                    .get(fact)
                    .ok_or_else(|| ScriptError::UnknownFact(fact.clone()))?;
                if &f.num != expected {
                    let diff = &f.num - expected;
                    return Err(ScriptError::StepFailed {
                        desc: format!("assert {fact}"),
                        reason: format!("expected {expected}, got {} (difference {diff})", f.num),
                    });
                }
                Ok(format!("{fact} = {f}"))
            }
            Step::SolveLinear { fact, var } => {
                let f = self
                    .facts
                    .get(fact)
                    .cloned()
                    .ok_or_else(|| ScriptError::UnknownFact(fact.clone()))?;
                let sol = solve_linear(&f.num, *var, &self.ctx.nonzero)?;
                let detail = format!(
                    "{var} = {} (cofactor {} = {})",
                    sol.value, sol.cofactor, sol.certificate
                );
                self.facts
                    .insert(fact.clone(), Fraction::from_poly(Polynomial::zero()));
                self.bind(*var, sol.value)?;
                Ok(detail)
            }
            Step::Substitute { var, num, den } => {
                let bound = self
                    .binding_of(*var)
                    .ok_or_else(|| ScriptError::StepFailed {
                        desc: format!("substitute {var}"),
                        reason: "variable has no accumulated binding".into(),
                    })?;
                // cross-multiplied comparison, robust to common factors
                let lhs = &bound.num * den;
                let rhs = num * &bound.den;
                if lhs != rhs {
                    return Err(ScriptError::StepFailed {
                        desc: format!("substitute {var}"),
                        reason: format!("binding is {bound}, expected ({num})/({den})"),
                    });
                }
                Ok(format!("{var} = {bound}"))
            }
            Step::Combine {
                name,
                facts,
                generators,
            } => {
                if self.facts.contains_key(name) {
                    return Err(ScriptError::DuplicateFact(name.clone()));
                }
                let ms = self.ctx.nonzero.clone();
                let mut acc = Fraction::from_poly(Polynomial::zero());
                let add = |acc: &Fraction, coeff: &Polynomial, part: &Fraction| -> Fraction {
                    // acc + coeff * part, over a common denominator
                    let num = &(&acc.num * &part.den) + &(&(coeff * &part.num) * &acc.den);
                    let den = &acc.den * &part.den;
                    Fraction { num, den }.reduced(&ms)
                };
                for (coeff, fname) in facts {
                    let part = self
                        .facts
                        .get(fname)
                        .ok_or_else(|| ScriptError::UnknownFact(fname.clone()))?;
                    acc = add(&acc, coeff, part);
                }
                for (cofactor, gname) in generators {
                    let g = self
                        .ctx
                        .variety
                        .iter()
                        .find(|(n, _)| n == gname)
                        .map(|(_, g)| Fraction::from_poly(g.clone()))
                        .ok_or_else(|| ScriptError::UnknownGenerator(gname.clone()))?;
                    acc = add(&acc, cofactor, &g);
                }
                self.check_den(&acc)?;
                let detail = format!("{name} = {acc}");
                self.facts.insert(name.clone(), acc);
                Ok(detail)
            }
            Step::ConcludeVarZero { fact, var } => {
                let f = self
                    .facts
                    .get(fact)
                    .ok_or_else(|| ScriptError::UnknownFact(fact.clone()))?;
                let var_poly = Polynomial::var(*var);
                let quotient = f
                    .num
                    .try_div(&var_poly)
                    .ok_or_else(|| ScriptError::StepFailed {
                        desc: format!("conclude {var} = 0"),
                        reason: format!("fact {fact} = {} is not a multiple of {var}", f.num),
                    })?;
                let cert =
                    self.ctx
                        .nonzero
                        .certify(&quotient)
                        .ok_or_else(|| ScriptError::StepFailed {
                            desc: format!("conclude {var} = 0"),
                            reason: format!("cofactor {quotient} is not a certified unit"),
                        })?;
                let detail =
                    format!("{fact} = ({quotient}) * {var}, unit = {cert}, hence {var} = 0");
                self.concluded.push(*var);
                self.facts
                    .insert(fact.clone(), Fraction::from_poly(Polynomial::zero()));
                self.bind(*var, Fraction::from_poly(Polynomial::zero()))?;
                Ok(detail)
            }
            Step::AssertNormalForm { stage } => {
                let raw = generic_g(self.ctx.n, Stage::Raw)?;
                let target = generic_g(self.ctx.n, *stage)?;
                let mut current = raw;
                for (var, frac) in &self.bindings {
                    if !frac.is_polynomial() {
                        return Err(ScriptError::StepFailed {
                            desc: "normal form".into(),
                            reason: format!("binding for {var} is a proper fraction: {frac}"),
                        });
                    }
                    let mut only = BTreeMap::new();
                    only.insert(*var, frac.num.clone());
                    current = current.substitute(&only);
                }
                if current != target {
                    return Err(ScriptError::StepFailed {
                        desc: "normal form".into(),
                        reason: format!(
                            "matrix after bindings differs from `{}`:\n{current}",
                            stage.name()
                        ),
                    });
                }
                Ok(format!("matrix matches `{}` normal form", stage.name()))
            }
        }
    }
}

/// Replay a script and collect a step-by-step report. `passed` requires
/// every step to succeed and, when a goal variable is set, that it was
/// concluded zero.
pub fn run_script(script: &ProofScript) -> VerificationReport {
    let mut steps = Vec::new();
    let mut passed = true;
    let mut concluded = Vec::new();
    match Interpreter::new(&script.context) {
        Ok(mut interp) => {
            for (index, step) in script.steps.iter().enumerate() {
                let desc = step.describe();
                match interp.run_step(step) {
                    Ok(detail) => {
                        steps.push(StepReport {
                            index,
                            desc,
                            detail,
                            ok: true,
                        });
                    }
                    Err(err) => {
                        steps.push(StepReport {
                            index,
                            desc,
                            detail: err.to_string(),
                            ok: false,
                        });
                        passed = false;
                        break;
                    }
                }
            }
            concluded = interp.concluded.iter().map(|v| v.to_string()).collect();
        }
        Err(err) => {
            steps.push(StepReport {
                index: 0,
                desc: "context setup".into(),
                detail: err.to_string(),
                ok: false,
            });
            passed = false;
        }
    }
    let goal_reached = match script.goal {
        None => passed,
        Some(goal) => passed && concluded.contains(&goal.to_string()),
    };
    VerificationReport {
        script: script.name.clone(),
        dim: script.context.n,
        passed: passed && goal_reached,
        goal_reached,
        steps,
        concluded,
        notes: script.notes.clone(),
    }
}

/// Expand every defect coefficient of a context with its assumptions
/// applied; exploration and export helper.
pub fn expanded_defects(ctx: &ScriptContext) -> Result<BTreeMap<EqLabel, Fraction>, ScriptError> {
    let interp = Interpreter::new(ctx)?;
    let labels: Vec<EqLabel> = interp.defects.keys().copied().collect();
    labels
        .into_iter()
        .map(|l| interp.expand_label(l).map(|f| (l, f)))
        .collect()
}
