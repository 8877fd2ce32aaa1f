//! Variable contexts: the ordered partition of variables into unknowns and
//! parameters, optionally augmented by one auxiliary variable used for
//! saturation.
//!
//! The monomial order everywhere is lex with
//! `aux > x_1 > … > x_n > p_1 > … > p_k`; slot 0 in every exponent vector is
//! the greatest variable.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    aux: Option<String>,
    x_vars: Vec<String>,
    p_vars: Vec<String>,
}

impl VariableContext {
    /// A context of unknowns `x_vars` and parameters `p_vars`, no auxiliary
    /// variable. Names must be pairwise distinct.
    pub fn new<S: Into<String>>(x_vars: Vec<S>, p_vars: Vec<S>) -> Result<Self> {
        let x_vars: Vec<String> = x_vars.into_iter().map(Into::into).collect();
        let p_vars: Vec<String> = p_vars.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for name in x_vars.iter().chain(p_vars.iter()) {
            if name.is_empty() {
                return Err(Error::InvalidArgument("empty variable name".into()));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(VariableContext { aux: None, x_vars, p_vars })
    }

    /// The same context with an auxiliary variable prepended as the largest
    /// variable. The name `y` is used unless taken.
    pub fn augmented(&self) -> VariableContext {
        if self.aux.is_some() {
            return self.clone();
        }
        let mut name = "y".to_string();
        let mut n = 0u32;
        while self.slot_of(&name).is_some() {
            name = format!("y{n}");
            n += 1;
        }
        VariableContext { aux: Some(name), x_vars: self.x_vars.clone(), p_vars: self.p_vars.clone() }
    }

    /// The context without the auxiliary variable.
    pub fn base(&self) -> VariableContext {
        VariableContext { aux: None, x_vars: self.x_vars.clone(), p_vars: self.p_vars.clone() }
    }

    /// The context with all parameters removed (used after specialization).
    pub fn without_params(&self) -> VariableContext {
        VariableContext { aux: self.aux.clone(), x_vars: self.x_vars.clone(), p_vars: Vec::new() }
    }

    pub fn has_aux(&self) -> bool {
        self.aux.is_some()
    }

    pub fn aux_name(&self) -> Option<&str> {
        self.aux.as_deref()
    }

    pub fn x_vars(&self) -> &[String] {
        &self.x_vars
    }

    pub fn p_vars(&self) -> &[String] {
        &self.p_vars
    }

    pub fn num_x(&self) -> usize {
        self.x_vars.len()
    }

    pub fn num_params(&self) -> usize {
        self.p_vars.len()
    }

    /// Total number of variable slots.
    pub fn len(&self) -> usize {
        self.aux.iter().count() + self.x_vars.len() + self.p_vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of the first parameter slot; slots before it form the
    /// `{aux} ∪ x` block.
    pub fn first_param_slot(&self) -> usize {
        self.aux.iter().count() + self.x_vars.len()
    }

    pub fn is_param_slot(&self, slot: usize) -> bool {
        slot >= self.first_param_slot()
    }

    /// Variable names from greatest to least.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.aux
            .iter()
            .map(String::as_str)
            .chain(self.x_vars.iter().map(String::as_str))
            .chain(self.p_vars.iter().map(String::as_str))
    }

    pub fn name_of(&self, slot: usize) -> &str {
        self.names().nth(slot).expect("slot in range")
    }

    pub fn slot_of(&self, name: &str) -> Option<usize> {
        self.names().position(|n| n == name)
    }

    /// Names of the non-parameter block ({aux} ∪ x), greatest first.
    pub fn block_names(&self) -> Vec<&str> {
        self.names().take(self.first_param_slot()).collect()
    }

    /// Lex comparison of two monomials of this context.
    pub fn lex_compare(&self, a: &Monomial, b: &Monomial) -> Result<std::cmp::Ordering> {
        if a.len() != self.len() || b.len() != self.len() {
            return Err(Error::ContextMismatch("monomials from a different context".into()));
        }
        Ok(a.cmp(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_aux_then_x_then_p() {
        let ctx = VariableContext::new(vec!["x1", "x2"], vec!["a"]).unwrap();
        assert_eq!(ctx.names().collect::<Vec<_>>(), vec!["x1", "x2", "a"]);
        let aug = ctx.augmented();
        assert_eq!(aug.names().collect::<Vec<_>>(), vec!["y", "x1", "x2", "a"]);
        assert_eq!(aug.first_param_slot(), 3);
        assert!(aug.is_param_slot(3));
        assert!(!aug.is_param_slot(2));
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(matches!(
            VariableContext::new(vec!["x", "x"], vec![]),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            VariableContext::new(vec!["x"], vec!["x"]),
            Err(Error::DuplicateVariable(_))
        ));
    }

    #[test]
    fn aux_name_avoids_collision() {
        let ctx = VariableContext::new(vec!["y"], vec!["a"]).unwrap();
        let aug = ctx.augmented();
        assert_eq!(aug.aux_name(), Some("y0"));
    }

    #[test]
    fn base_round_trip() {
        let ctx = VariableContext::new(vec!["x"], vec!["a", "b", "c"]).unwrap();
        assert_eq!(ctx.augmented().base(), ctx);
    }

    #[test]
    fn lex_compare_checks_context() {
        let ctx = VariableContext::new(vec!["x", "y"], vec![]).unwrap();
        let a = Monomial::from_exponents(vec![2, 1]);
        let b = Monomial::from_exponents(vec![1, 3]);
        assert_eq!(ctx.lex_compare(&a, &b).unwrap(), std::cmp::Ordering::Greater);
        assert_eq!(ctx.lex_compare(&a, &a).unwrap(), std::cmp::Ordering::Equal);
        let foreign = Monomial::from_exponents(vec![1, 1, 1]);
        assert!(matches!(ctx.lex_compare(&a, &foreign), Err(Error::ContextMismatch(_))));
    }
}
