//! Truth of formulas at the current point of a model.
//!
//! Formulas are first bound against the model's signature (names resolved to
//! indices) and then evaluated by direct structural recursion.

use alloc::boxed::Box;
use alloc::vec::Vec;

use thiserror::Error;

use crate::formula::{ArgumentFormula, EpistemicFormula};
use crate::kripke::{ArgumentModel, EpistemicModel, PointedArgumentModel, PointedEpistemicModel};
use crate::{BindError, Signature};

enum Bound {
    Atom(usize),
    Not(Box<Bound>),
    And(Box<Bound>, Box<Bound>),
    Box(usize, Box<Bound>),
}

fn bind_epistemic(f: &EpistemicFormula, sig: &Signature) -> Result<Bound, BindError> {
    Ok(match f {
        EpistemicFormula::Prop(p) => Bound::Atom(
            sig.proposition_index(p)
                .ok_or_else(|| BindError::UnknownProposition(p.clone()))?,
        ),
        EpistemicFormula::Not(g) => Bound::Not(Box::new(bind_epistemic(g, sig)?)),
        EpistemicFormula::And(a, b) => Bound::And(Box::new(bind_epistemic(a, sig)?), Box::new(bind_epistemic(b, sig)?)),
        EpistemicFormula::Knows(i, g) => Bound::Box(
            sig.agent_index(i).ok_or_else(|| BindError::UnknownAgent(i.clone()))?,
            Box::new(bind_epistemic(g, sig)?),
        ),
    })
}

fn bind_argument(f: &ArgumentFormula, sig: &Signature) -> Result<Bound, BindError> {
    Ok(match f {
        ArgumentFormula::Agent(i) => Bound::Atom(sig.agent_index(i).ok_or_else(|| BindError::UnknownAgent(i.clone()))?),
        ArgumentFormula::Not(g) => Bound::Not(Box::new(bind_argument(g, sig)?)),
        ArgumentFormula::And(a, b) => Bound::And(Box::new(bind_argument(a, sig)?), Box::new(bind_argument(b, sig)?)),
        ArgumentFormula::Attacked(p, g) => Bound::Box(
            sig.proposition_index(p)
                .ok_or_else(|| BindError::UnknownProposition(p.clone()))?,
            Box::new(bind_argument(g, sig)?),
        ),
    })
}

fn holds_epistemic(m: &EpistemicModel, s: usize, f: &Bound) -> bool {
    match f {
        Bound::Atom(p) => m.holds(*p, s),
        Bound::Not(g) => !holds_epistemic(m, s, g),
        Bound::And(a, b) => holds_epistemic(m, s, a) && holds_epistemic(m, s, b),
        Bound::Box(i, g) => m.relation(*i).successors(s).iter().all(|&t| holds_epistemic(m, t, g)),
    }
}

fn holds_argument(m: &ArgumentModel, u: usize, f: &Bound) -> bool {
    match f {
        Bound::Atom(i) => m.availability(*i).contains(u),
        Bound::Not(g) => !holds_argument(m, u, g),
        Bound::And(a, b) => holds_argument(m, u, a) && holds_argument(m, u, b),
        Bound::Box(p, g) => m.attackers(*p, u).iter().all(|&v| holds_argument(m, v, g)),
    }
}

/// Truth of `f` at world `world` of `model`.
pub fn eval_epistemic_at(model: &EpistemicModel, world: usize, f: &EpistemicFormula) -> Result<bool, BindError> {
    let bound = bind_epistemic(f, model.signature())?;
    Ok(holds_epistemic(model, world, &bound))
}

pub fn eval_epistemic(model: &PointedEpistemicModel, f: &EpistemicFormula) -> Result<bool, BindError> {
    eval_epistemic_at(model.model(), model.current(), f)
}

/// Truth of `f` at argument `argument`: `A[p] x` quantifies over the
/// arguments that attack this one with respect to `p`.
pub fn eval_argument_at(model: &ArgumentModel, argument: usize, f: &ArgumentFormula) -> Result<bool, BindError> {
    let bound = bind_argument(f, model.signature())?;
    Ok(holds_argument(model, argument, &bound))
}

pub fn eval_argument(model: &PointedArgumentModel, f: &ArgumentFormula) -> Result<bool, BindError> {
    eval_argument_at(model.model(), model.current(), f)
}

/// A pointed model paired with the formula language interpreted over it.
pub trait PointedModel {
    type Formula;

    fn eval(&self, f: &Self::Formula) -> Result<bool, BindError>;
}

impl PointedModel for PointedEpistemicModel {
    type Formula = EpistemicFormula;

    fn eval(&self, f: &EpistemicFormula) -> Result<bool, BindError> {
        eval_epistemic(self, f)
    }
}

impl PointedModel for PointedArgumentModel {
    type Formula = ArgumentFormula;

    fn eval(&self, f: &ArgumentFormula) -> Result<bool, BindError> {
        eval_argument(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("formula #{index}: {source}")]
pub struct BatchError {
    pub index: usize,
    pub source: BindError,
}

/// Evaluates every formula in order; the first binding failure aborts.
pub fn eval_batch<M: PointedModel>(model: &M, formulas: &[M::Formula]) -> Result<Vec<bool>, BatchError> {
    formulas
        .iter()
        .enumerate()
        .map(|(index, f)| model.eval(f).map_err(|source| BatchError { index, source }))
        .collect()
}
