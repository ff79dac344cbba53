//! The closed universe of codes over finite sets.
//!
//! Codes are W-trees over [`VSignature`], decoded to canonical finite sets by
//! [`el`]. Paths between codes are pairs of a bijection of the decodings and
//! an equality code over it, computed by the generic engine with the
//! predicate read through the decoding. Equality of codes is nonemptiness of
//! that set.

pub mod codec;
mod code;
mod enumerate;
mod predicate;
mod verify;
mod vsig;

use std::sync::Arc;

pub use code::{el, Code, MAX_EL};
pub use enumerate::{enumerate_code_ids, enumerate_codes, MAX_CODES};
pub use predicate::PredicateSpec;
pub use verify::{
    check_coherence, check_oracle_agreement, negative_control, retains_suite, verify_partial_univalence,
    verify_structural, verify_truncated, verify_truncated_forced, CodeBudget, CodeUniverse,
};
pub use vsig::{Former, NullarySignature, VShape, VSignature, MAX_IDENTS};

use crate::error::{KernelError, Result};
use crate::fincore::{Bij, FinSet};
use crate::wtrees::{EqEngine, TreeId, Witness, WitnessSet};

/// An equality session: one signature, one predicate, shared memo tables.
pub struct Universe<'s> {
    engine: EqEngine<'s, VSignature>,
    pred: PredicateSpec,
}

impl<'s> Universe<'s> {
    pub fn new(sig: &'s VSignature, pred: PredicateSpec) -> Self {
        Universe {
            engine: EqEngine::new(sig, pred.to_pred()),
            pred,
        }
    }

    pub fn sig(&self) -> &'s VSignature {
        self.engine.sig()
    }

    pub fn pred(&self) -> PredicateSpec {
        self.pred
    }

    pub fn engine(&mut self) -> &mut EqEngine<'s, VSignature> {
        &mut self.engine
    }

    pub fn insert(&mut self, c: &Code) -> Result<TreeId> {
        let t = self.sig().to_tree(c)?;
        self.engine.insert(&t)
    }

    pub fn code(&self, t: TreeId) -> Code {
        self.sig().from_tree(&self.engine.forest().tree(t))
    }

    pub fn el_of(&self, t: TreeId) -> FinSet {
        *self.engine.index(t)
    }

    pub fn eqv_witnesses(&mut self, p: &Bij, c0: &Code, c1: &Code) -> Result<Arc<WitnessSet<Bij>>> {
        let (t0, t1) = (self.insert(c0)?, self.insert(c1)?);
        if p.dom() != self.el_of(t0) || p.cod() != self.el_of(t1) {
            return Err(KernelError::precondition(format!(
                "bijection {p} does not go from {} to {}",
                self.el_of(t0),
                self.el_of(t1)
            )));
        }
        self.engine.eq_witnesses(p, t0, t1)
    }

    pub fn eqv_total(&mut self, c0: &Code, c1: &Code) -> Result<Vec<(Bij, Witness<Bij>)>> {
        let (t0, t1) = (self.insert(c0)?, self.insert(c1)?);
        self.engine.total_witnesses(t0, t1)
    }

    /// `eqv_total(..).len()` without building witnesses.
    pub fn eqv_count(&mut self, c0: &Code, c1: &Code) -> Result<u64> {
        let (t0, t1) = (self.insert(c0)?, self.insert(c1)?);
        self.engine.total_count(t0, t1)
    }

    pub fn is_equal(&mut self, c0: &Code, c1: &Code) -> Result<bool> {
        Ok(self.eqv_count(c0, c1)? > 0)
    }
}

pub fn eqv_witnesses(
    sig: &VSignature,
    pred: PredicateSpec,
    p: &Bij,
    c0: &Code,
    c1: &Code,
) -> Result<Arc<WitnessSet<Bij>>> {
    Universe::new(sig, pred).eqv_witnesses(p, c0, c1)
}

pub fn eqv_total(
    sig: &VSignature,
    pred: PredicateSpec,
    c0: &Code,
    c1: &Code,
) -> Result<Vec<(Bij, Witness<Bij>)>> {
    Universe::new(sig, pred).eqv_total(c0, c1)
}

pub fn is_equal(sig: &VSignature, pred: PredicateSpec, c0: &Code, c1: &Code) -> Result<bool> {
    Universe::new(sig, pred).is_equal(c0, c1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincore::enum_bijs;

    fn sig() -> VSignature {
        VSignature::standard()
    }

    fn bool_() -> Code {
        Code::n("bool")
    }

    fn swap() -> Bij {
        Bij::from_targets(vec![1, 0]).unwrap()
    }

    #[test]
    fn empty_collapses() {
        let s = sig();
        let w = eqv_witnesses(&s, PredicateSpec::IsProp, &Bij::identity(FinSet(0)), &Code::Empty, &Code::Empty).unwrap();
        assert_eq!(w.witnesses, vec![Witness::Collapsed]);
    }

    #[test]
    fn names_have_one_path() {
        let s = sig();
        let id = Bij::identity(FinSet(2));
        let mut u = Universe::new(&s, PredicateSpec::IsProp);
        assert_eq!(u.eqv_witnesses(&id, &bool_(), &bool_()).unwrap().len(), 1);
        assert_eq!(u.eqv_witnesses(&swap(), &bool_(), &bool_()).unwrap().len(), 0);
        assert_eq!(u.eqv_total(&bool_(), &bool_()).unwrap().len(), 1);
    }

    #[test]
    fn pi_over_unit_has_one_path() {
        let s = sig();
        let c = Code::pi(Code::Unit, vec![bool_()]);
        let total = eqv_total(&s, PredicateSpec::IsProp, &c, &c).unwrap();
        assert_eq!(total.len(), 1);
        assert!(total[0].0.is_identity());
    }

    #[test]
    fn mixed_and_collapsed_cases() {
        let s = sig();
        let p = PredicateSpec::IsProp;
        assert!(eqv_total(&s, p, &Code::Empty, &Code::Unit).unwrap().is_empty());
        assert_eq!(eqv_total(&s, p, &Code::Unit, &Code::id(bool_(), 0, 0)).unwrap().len(), 1);
        assert!(is_equal(&s, p, &Code::Unit, &Code::Unit).unwrap());
        assert!(!is_equal(&s, p, &bool_(), &Code::pi(Code::Unit, vec![bool_()])).unwrap());
        assert!(is_equal(&s, p, &Code::Empty, &Code::id(bool_(), 0, 1)).unwrap());
    }

    #[test]
    fn non_prop_predicates_give_many_paths() {
        let s = sig();
        for p in [PredicateSpec::SizeEq(2), PredicateSpec::All] {
            assert_eq!(eqv_total(&s, p, &bool_(), &bool_()).unwrap().len(), 2);
        }
    }

    #[test]
    fn sum_swap_is_not_a_path() {
        // Σ over bool of (unit, unit) and bool itself both have two elements,
        // but the former is a Σ-code and the latter a name.
        let s = sig();
        let c = Code::sigma(bool_(), vec![Code::Unit, Code::Unit]);
        let mut u = Universe::new(&s, PredicateSpec::None);
        assert!(!u.is_equal(&c, &bool_()).unwrap());
        // The swap of the domain induces the swap of the total space.
        let total = u.eqv_total(&c, &c).unwrap();
        assert_eq!(total.len(), 1);
        let sum = Code::sum(Code::Unit, Code::Unit);
        assert_eq!(u.eqv_total(&sum, &sum).unwrap().len(), 1);
    }

    #[test]
    fn wrong_path_is_rejected() {
        let s = sig();
        let bad = enum_bijs(FinSet(3), FinSet(3)).unwrap().remove(0);
        let err = eqv_witnesses(&s, PredicateSpec::IsProp, &bad, &bool_(), &bool_()).unwrap_err();
        assert!(matches!(err, KernelError::PreconditionViolated(_)));
    }
}
