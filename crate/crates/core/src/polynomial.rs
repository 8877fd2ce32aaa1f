//! Sparse multivariate polynomials over [`Rational`] with terms kept strictly
//! descending in the context's lex order.
//!
//! The zero polynomial is the empty term list; no zero coefficients and no
//! duplicate monomials ever appear, so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::context::VariableContext;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rational::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coefficient: Rational,
    pub monomial: Monomial,
}

#[derive(Debug, Clone)]
pub struct Polynomial {
    ctx: Arc<VariableContext>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

/// A full assignment of rational values to the parameters of a context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterPoint {
    ctx: Arc<VariableContext>,
    values: Vec<Rational>,
}

impl ParameterPoint {
    /// Values aligned with `ctx.p_vars()`.
    pub fn from_values(ctx: &Arc<VariableContext>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != ctx.num_params() {
            let name = ctx.p_vars().get(values.len()).cloned().unwrap_or_else(|| "?".into());
            return Err(Error::MissingAssignment(name));
        }
        Ok(ParameterPoint { ctx: ctx.clone(), values })
    }

    /// Build from `name = value` pairs; every parameter must be assigned
    /// exactly once.
    pub fn from_assignments(ctx: &Arc<VariableContext>, pairs: &[(String, Rational)]) -> Result<Self> {
        let mut values: Vec<Option<Rational>> = vec![None; ctx.num_params()];
        for (name, value) in pairs {
            let pos = ctx
                .p_vars()
                .iter()
                .position(|p| p == name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            if values[pos].is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
            values[pos] = Some(value.clone());
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::MissingAssignment(ctx.p_vars()[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(ParameterPoint { ctx: ctx.clone(), values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    /// Checks the point assigns exactly the parameters of `ctx`.
    fn compatible_with(&self, ctx: &VariableContext) -> Result<()> {
        if self.ctx.p_vars() != ctx.p_vars() {
            return Err(Error::ContextMismatch("parameter point built for a different context".into()));
        }
        Ok(())
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, value) in self.ctx.p_vars().iter().zip(&self.values) {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{name} = {value}")?;
            first = false;
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn zero(ctx: &Arc<VariableContext>) -> Self {
        Polynomial { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &Arc<VariableContext>) -> Self {
        Polynomial::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Arc<VariableContext>, value: Rational) -> Self {
        if value.is_zero() {
            return Polynomial::zero(ctx);
        }
        let len = ctx.len();
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![Term { coefficient: value, monomial: Monomial::one(len) }],
        }
    }

    pub fn var(ctx: &Arc<VariableContext>, name: &str) -> Result<Self> {
        let slot = ctx.slot_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial {
            ctx: ctx.clone(),
            terms: vec![Term { coefficient: Rational::one(), monomial: Monomial::var(ctx.len(), slot) }],
        })
    }

    /// Canonicalize an arbitrary term list: sort descending, merge duplicates,
    /// drop zeros.
    pub fn from_terms(ctx: &Arc<VariableContext>, terms: Vec<(Rational, Monomial)>) -> Result<Self> {
        let len = ctx.len();
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (coefficient, monomial) in terms {
            if monomial.len() != len {
                return Err(Error::ContextMismatch(format!(
                    "monomial with {} slots in a context of {} variables",
                    monomial.len(),
                    len
                )));
            }
            let entry = map.entry(monomial).or_insert_with(Rational::zero);
            *entry = entry.add(&coefficient);
        }
        Ok(Self::from_map(ctx, map))
    }

    fn from_map(ctx: &Arc<VariableContext>, map: BTreeMap<Monomial, Rational>) -> Self {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coefficient)| Term { coefficient, monomial })
            .collect();
        Polynomial { ctx: ctx.clone(), terms }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    /// Terms in strictly descending lex order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].monomial.is_constant())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_constant() && self.terms[0].coefficient.is_one()
    }

    /// Constant value when the polynomial is constant.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return Some(self.terms[0].coefficient.clone());
        }
        None
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.monomial.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, slot: usize) -> u32 {
        self.terms.iter().map(|t| t.monomial.exponent(slot)).max().unwrap_or(0)
    }

    pub fn uses_slot(&self, slot: usize) -> bool {
        self.terms.iter().any(|t| t.monomial.uses_slot(slot))
    }

    /// True when supported entirely on parameter slots.
    pub fn is_parameter_only(&self) -> bool {
        let first_param = self.ctx.first_param_slot();
        self.terms.iter().all(|t| t.monomial.block_part(first_param).is_constant())
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(&self.leading_term()?.monomial)
    }

    pub fn leading_coefficient(&self) -> Result<&Rational> {
        Ok(&self.leading_term()?.coefficient)
    }

    fn ensure_same_context(&self, other: &Polynomial) -> Result<()> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch("operands from different contexts".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ensure_same_context(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ensure_same_context(other)?;
        Ok(self.merge(other, true))
    }

    /// Merge of two descending term lists; `negate` subtracts `other`.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(ta), Some(tb)) => match ta.monomial.cmp(&tb.monomial) {
                    std::cmp::Ordering::Greater => {
                        out.push((*ta).clone());
                        a.next();
                    }
                    std::cmp::Ordering::Less => {
                        let tb = b.next().unwrap();
                        let coefficient =
                            if negate { tb.coefficient.neg() } else { tb.coefficient.clone() };
                        out.push(Term { coefficient, monomial: tb.monomial.clone() });
                    }
                    std::cmp::Ordering::Equal => {
                        let ta = a.next().unwrap();
                        let tb = b.next().unwrap();
                        let coefficient = if negate {
                            ta.coefficient.sub(&tb.coefficient)
                        } else {
                            ta.coefficient.add(&tb.coefficient)
                        };
                        if !coefficient.is_zero() {
                            out.push(Term { coefficient, monomial: ta.monomial.clone() });
                        }
                    }
                },
                (Some(_), None) => {
                    out.push(a.next().unwrap().clone());
                }
                (None, Some(_)) => {
                    let tb = b.next().unwrap();
                    let coefficient = if negate { tb.coefficient.neg() } else { tb.coefficient.clone() };
                    out.push(Term { coefficient, monomial: tb.monomial.clone() });
                }
                (None, None) => break,
            }
        }
        Polynomial { ctx: self.ctx.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coefficient: t.coefficient.neg(), monomial: t.monomial.clone() })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ensure_same_context(other)?;
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for ta in &self.terms {
            for tb in &other.terms {
                let monomial = ta.monomial.checked_mul(&tb.monomial)?;
                let product = ta.coefficient.mul(&tb.coefficient);
                let entry = map.entry(monomial).or_insert_with(Rational::zero);
                *entry = entry.add(&product);
            }
        }
        Ok(Self::from_map(&self.ctx, map))
    }

    pub fn pow(&self, exp: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coefficient: t.coefficient.mul(factor), monomial: t.monomial.clone() })
                .collect(),
        }
    }

    /// `self * c * m` for a single term `c·m`.
    pub fn mul_term(&self, coefficient: &Rational, monomial: &Monomial) -> Result<Polynomial> {
        if coefficient.is_zero() {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coefficient: t.coefficient.mul(coefficient),
                monomial: t.monomial.checked_mul(monomial)?,
            });
        }
        Ok(Polynomial { ctx: self.ctx.clone(), terms })
    }

    /// Formal partial derivative with respect to `name`.
    pub fn partial_derivative(&self, name: &str) -> Result<Polynomial> {
        let slot = self.ctx.slot_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.monomial.exponent(slot);
            if e == 0 {
                continue;
            }
            let mut exps = t.monomial.exponents().to_vec();
            exps[slot] = e - 1;
            terms.push(Term {
                coefficient: t.coefficient.mul(&Rational::from_integer(e as i64)),
                monomial: Monomial::from_exponents(exps),
            });
        }
        // Descending order is preserved term by term only within equal
        // exponents of `slot`; re-canonicalize to be safe.
        Polynomial::from_terms(&self.ctx, terms.into_iter().map(|t| (t.coefficient, t.monomial)).collect())
    }

    /// Substitute the parameter point `q`, producing a polynomial over the
    /// parameter-free context.
    pub fn evaluate_parameters(&self, q: &ParameterPoint) -> Result<Polynomial> {
        q.compatible_with(&self.ctx)?;
        let stripped = Arc::new(self.ctx.without_params());
        let first_param = self.ctx.first_param_slot();
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for t in &self.terms {
            let mut coefficient = t.coefficient.clone();
            for (j, value) in q.values.iter().enumerate() {
                let e = t.monomial.exponent(first_param + j);
                if e > 0 {
                    coefficient = coefficient.mul(&value.pow(e));
                }
            }
            let monomial =
                Monomial::from_exponents(t.monomial.exponents()[..first_param].to_vec());
            let entry = map.entry(monomial).or_insert_with(Rational::zero);
            *entry = entry.add(&coefficient);
        }
        Ok(Self::from_map(&stripped, map))
    }

    /// Evaluate a parameter-supported polynomial at `q` to a scalar.
    pub fn evaluate_at_parameters(&self, q: &ParameterPoint) -> Result<Rational> {
        let value = self.evaluate_parameters(q)?;
        value.constant_value().ok_or_else(|| {
            Error::InvalidArgument("polynomial is not supported on the parameters alone".into())
        })
    }

    /// Split off the lex-greatest `{aux} ∪ x` block part: returns that block
    /// monomial together with the full parameter polynomial multiplying it.
    ///
    /// `block` must name exactly the non-parameter block of the context.
    pub fn block_leading_coefficient(&self, block: &[&str]) -> Result<(Monomial, Polynomial)> {
        let expected = self.ctx.block_names();
        let mut given: Vec<&str> = block.to_vec();
        given.sort_unstable();
        let mut want = expected.clone();
        want.sort_unstable();
        if given != want {
            return Err(Error::ContextMismatch(format!(
                "block {{{}}} is not the non-parameter block {{{}}}",
                block.join(", "),
                expected.join(", ")
            )));
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let first_param = self.ctx.first_param_slot();
        let best = self
            .terms
            .iter()
            .map(|t| t.monomial.block_part(first_param))
            .max()
            .expect("nonzero polynomial");
        let mut coeff_terms = Vec::new();
        for t in &self.terms {
            if t.monomial.block_part(first_param) == best {
                coeff_terms.push((t.coefficient.clone(), t.monomial.param_part(first_param)));
            }
        }
        let coefficient = Polynomial::from_terms(&self.ctx, coeff_terms)?;
        Ok((best, coefficient))
    }

    /// Content-free integer form with positive leading coefficient. This is
    /// the canonical scaling used for reduced Gröbner bases and discriminant
    /// factors.
    pub fn canonical_scaled(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = Integer::one();
        for t in &self.terms {
            denom_lcm = denom_lcm.lcm(t.coefficient.denom());
        }
        let mut content = Integer::zero();
        for t in &self.terms {
            let scaled = t.coefficient.numer() * (&denom_lcm / t.coefficient.denom());
            content = content.gcd(&scaled);
        }
        debug_assert!(!content.is_zero());
        let mut factor = Rational::new(denom_lcm, content).expect("nonzero content");
        if self.terms[0].coefficient.mul(&factor).is_negative() {
            factor = factor.neg();
        }
        self.scale(&factor)
    }

    /// Embed into the augmented context (one extra greatest slot).
    pub fn lift_to(&self, augmented: &Arc<VariableContext>) -> Result<Polynomial> {
        if augmented.base() != self.ctx.base() || !augmented.has_aux() || self.ctx.has_aux() {
            return Err(Error::ContextMismatch("not an augmentation of this context".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coefficient: t.coefficient.clone(), monomial: t.monomial.prepend_slots(1) })
            .collect();
        Ok(Polynomial { ctx: augmented.clone(), terms })
    }

    /// Drop an unused auxiliary slot, returning to the base context.
    pub fn drop_aux(&self, base: &Arc<VariableContext>) -> Result<Polynomial> {
        if !self.ctx.has_aux() || *base.as_ref() != self.ctx.base() {
            return Err(Error::ContextMismatch("not the base of this context".into()));
        }
        if self.uses_slot(0) {
            return Err(Error::InvalidArgument("polynomial involves the auxiliary variable".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coefficient: t.coefficient.clone(), monomial: t.monomial.drop_leading_slots(1) })
            .collect();
        Ok(Polynomial { ctx: base.clone(), terms })
    }

    /// Multivariate division: `self = Σ q_i·divisors_i + r` with no term of
    /// `r` divisible by any divisor's leading monomial and
    /// `LT(q_i·divisors_i) ≤ LT(self)`. The leading term is always reduced
    /// first, scanning divisors in the given order.
    pub fn divide(&self, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
        for d in divisors {
            self.ensure_same_context(d)?;
            if d.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        let mut work: BTreeMap<Monomial, Rational> =
            self.terms.iter().map(|t| (t.monomial.clone(), t.coefficient.clone())).collect();
        let mut quotients: Vec<BTreeMap<Monomial, Rational>> = vec![BTreeMap::new(); divisors.len()];
        let mut remainder: Vec<Term> = Vec::new();

        while let Some((monomial, coefficient)) = work.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))
        {
            work.remove(&monomial);
            let mut reduced = false;
            for (i, d) in divisors.iter().enumerate() {
                let d_lead = &d.terms[0];
                if let Some(shift) = d_lead.monomial.div_into(&monomial) {
                    let factor = coefficient.div(&d_lead.coefficient).expect("nonzero leading coefficient");
                    let q = quotients[i].entry(shift.clone()).or_insert_with(Rational::zero);
                    *q = q.add(&factor);
                    // Cancel factor·shift·d from the working tail.
                    for t in &d.terms[1..] {
                        let m = t.monomial.checked_mul(&shift)?;
                        let delta = factor.mul(&t.coefficient);
                        match work.entry(m) {
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let c = e.get().sub(&delta);
                                if c.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = c;
                                }
                            }
                            std::collections::btree_map::Entry::Vacant(v) => {
                                v.insert(delta.neg());
                            }
                        }
                    }
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                remainder.push(Term { coefficient, monomial });
            }
        }

        let quotients = quotients
            .into_iter()
            .map(|map| Self::from_map(&self.ctx, map))
            .collect();
        Ok((quotients, Polynomial { ctx: self.ctx.clone(), terms: remainder }))
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, ctx: &VariableContext, term: &Term, lead: bool) -> fmt::Result {
    let coefficient = if lead {
        if term.coefficient.is_negative() {
            write!(f, "-")?;
        }
        term.coefficient.abs()
    } else {
        if term.coefficient.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        term.coefficient.abs()
    };
    // Variable factors sorted by name; the coefficient is omitted when it is
    // 1 and a variable part exists.
    let mut factors: Vec<(usize, u32)> = term
        .monomial
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(slot, &e)| (slot, e))
        .collect();
    factors.sort_by(|a, b| ctx.name_of(a.0).cmp(ctx.name_of(b.0)));
    if factors.is_empty() {
        return write!(f, "{coefficient}");
    }
    let mut wrote = false;
    if !coefficient.is_one() {
        write!(f, "{coefficient}")?;
        wrote = true;
    }
    for (slot, e) in factors {
        if wrote {
            write!(f, "*")?;
        }
        write!(f, "{}", ctx.name_of(slot))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        wrote = true;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            write_term(f, &self.ctx, term, i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;
    use proptest::prelude::*;

    fn ctx_xp() -> Arc<VariableContext> {
        Arc::new(VariableContext::new(vec!["x"], vec!["a", "b", "c"]).unwrap())
    }

    fn ctx2() -> Arc<VariableContext> {
        Arc::new(VariableContext::new(vec!["x1", "x2"], vec!["a"]).unwrap())
    }

    fn p(ctx: &Arc<VariableContext>, src: &str) -> Polynomial {
        parse_polynomial(ctx, src).unwrap()
    }

    #[test]
    fn product_expands() {
        let ctx = ctx_xp();
        let lhs = p(&ctx, "x + 1").mul(&p(&ctx, "x + 2")).unwrap();
        assert_eq!(lhs, p(&ctx, "x^2 + 3*x + 2"));
    }

    #[test]
    fn additive_inverse_cancels() {
        let ctx = ctx_xp();
        let f = p(&ctx, "a*x^2 + b*x + c");
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn curve_factor_product_matches_hand_expansion() {
        let ctx = ctx2();
        let f1 = p(&ctx, "(x1 - a) * (x1 - 1) * (x1^2 + x2^2 - 1)");
        let expected = p(
            &ctx,
            "x1^4 - a*x1^3 - x1^3 + x1^2*x2^2 + a*x1^2 - x1^2 - a*x1*x2^2 - x1*x2^2 + a*x1 + x1 + a*x2^2 - a",
        );
        assert_eq!(f1, expected);
        assert_eq!(f1.total_degree(), 4);
    }

    #[test]
    fn leading_terms() {
        let ctx = ctx_xp();
        let f = p(&ctx, "x^2 + 3*x + 2");
        assert!(f.leading_term().unwrap().coefficient.is_one());
        assert_eq!(f.leading_monomial().unwrap().exponents(), &[2, 0, 0, 0]);

        let g = p(&ctx, "a*x^2 + b*x + c");
        // Greatest term is the x^2·a one.
        assert_eq!(g.leading_monomial().unwrap().exponents(), &[2, 1, 0, 0]);
        assert!(g.leading_coefficient().unwrap().is_one());

        let ctx = ctx2();
        let h = p(&ctx, "x2 - 3");
        assert_eq!(h.leading_monomial().unwrap().exponents(), &[0, 1, 0]);

        assert!(matches!(Polynomial::zero(&ctx).leading_term(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn block_leading_coefficient_examples() {
        let ctx = ctx_xp();
        let f = p(&ctx, "a*x^2 + b*x + c");
        let (m, c) = f.block_leading_coefficient(&["x"]).unwrap();
        assert_eq!(m.exponents(), &[2, 0, 0, 0]);
        assert_eq!(c, p(&ctx, "a"));

        let aug = Arc::new(ctx.augmented());
        let g = p(&aug, "4*a*c*y - b^2*y + 2*a*x + b");
        let (m, c) = g.block_leading_coefficient(&["y", "x"]).unwrap();
        assert_eq!(m.exponents(), &[1, 0, 0, 0, 0]);
        assert_eq!(c, p(&aug, "4*a*c - b^2"));

        assert!(g.block_leading_coefficient(&["x"]).is_err());
    }

    #[test]
    fn block_leading_coefficient_reconstructs() {
        let aug = Arc::new(ctx_xp().augmented());
        let g = p(&aug, "4*a*c*y - b^2*y + 2*a*x + b");
        let (m, c) = g.block_leading_coefficient(&["y", "x"]).unwrap();
        let head = c.mul_term(&Rational::one(), &m).unwrap();
        let rest = g.sub(&head).unwrap();
        let first_param = aug.first_param_slot();
        for t in rest.terms() {
            assert!(t.monomial.block_part(first_param) < m);
        }
    }

    #[test]
    fn division_examples() {
        let ctx = ctx_xp();
        let f = p(&ctx, "x^2 + 3*x + 2");
        let (q, r) = f.divide(std::slice::from_ref(&p(&ctx, "x + 1"))).unwrap();
        assert_eq!(q[0], p(&ctx, "x + 2"));
        assert!(r.is_zero());

        let (q, r) = f.divide(&[]).unwrap();
        assert!(q.is_empty());
        assert_eq!(r, f);

        let (q, r) = f.divide(std::slice::from_ref(&f)).unwrap();
        assert!(q[0].is_one());
        assert!(r.is_zero());
    }

    #[test]
    fn derivative_examples() {
        let ctx = ctx_xp();
        assert_eq!(
            p(&ctx, "a*x^2 + b*x + c").partial_derivative("x").unwrap(),
            p(&ctx, "2*a*x + b")
        );
        assert!(p(&ctx, "c").partial_derivative("x").unwrap().is_zero());
        let ctx = ctx2();
        assert_eq!(
            p(&ctx, "x1^2 + x2^2 - 1").partial_derivative("x1").unwrap(),
            p(&ctx, "2*x1")
        );
        assert!(p(&ctx, "x1").partial_derivative("zz").is_err());
    }

    #[test]
    fn parameter_evaluation_examples() {
        let ctx = ctx_xp();
        let f = p(&ctx, "a*x^2 + b*x + c");
        let q1 = ParameterPoint::from_values(&ctx, vec![1.into(), 3.into(), 2.into()]).unwrap();
        let q2 = ParameterPoint::from_values(&ctx, vec![1.into(), (-2).into(), 1.into()]).unwrap();
        let xonly = Arc::new(ctx.without_params());
        assert_eq!(f.evaluate_parameters(&q1).unwrap(), p(&xonly, "x^2 + 3*x + 2"));
        assert_eq!(f.evaluate_parameters(&q2).unwrap(), p(&xonly, "x^2 - 2*x + 1"));

        let free = p(&ctx, "x^2 - 1");
        assert_eq!(free.evaluate_parameters(&q1).unwrap(), p(&xonly, "x^2 - 1"));

        assert!(ParameterPoint::from_values(&ctx, vec![1.into()]).is_err());
    }

    #[test]
    fn canonical_scaling() {
        let ctx = ctx_xp();
        let f = p(&ctx, "x + 1").scale(&Rational::new(-3, 4).unwrap());
        assert_eq!(f.canonical_scaled(), p(&ctx, "x + 1"));
        let g = p(&ctx, "4*x + 6");
        assert_eq!(g.canonical_scaled(), p(&ctx, "2*x + 3"));
    }

    #[test]
    fn display_canonical_form() {
        let ctx = ctx2();
        let f = p(&ctx, "x1^2 - a*x1 - x1 + a");
        assert_eq!(f.to_string(), "x1^2 - a*x1 - x1 + a");
        assert_eq!(Polynomial::zero(&ctx).to_string(), "0");
        let g = p(&ctx, "1/2*x1 - 5");
        assert_eq!(g.to_string(), "1/2*x1 - 5");
    }

    fn arb_poly(ctx: Arc<VariableContext>) -> impl Strategy<Value = Polynomial> {
        let len = ctx.len();
        proptest::collection::vec(
            ((-9i64..=9), proptest::collection::vec(0u32..3, len)),
            0..5,
        )
        .prop_map(move |raw| {
            Polynomial::from_terms(
                &ctx,
                raw.into_iter()
                    .map(|(c, e)| (Rational::from_integer(c), Monomial::from_exponents(e)))
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn division_reassembles(
            f in arb_poly(ctx_xp()),
            g1 in arb_poly(ctx_xp()),
            g2 in arb_poly(ctx_xp()),
        ) {
            let divisors: Vec<Polynomial> =
                [g1, g2].into_iter().filter(|g| !g.is_zero()).collect();
            let (quotients, remainder) = f.divide(&divisors).unwrap();
            let mut sum = remainder.clone();
            for (q, d) in quotients.iter().zip(&divisors) {
                sum = sum.add(&q.mul(d).unwrap()).unwrap();
            }
            prop_assert_eq!(&sum, &f);
            // No term of the remainder is reducible.
            for t in remainder.terms() {
                for d in &divisors {
                    prop_assert!(!d.leading_monomial().unwrap().divides(&t.monomial));
                }
            }
            if !f.is_zero() {
                for (q, d) in quotients.iter().zip(&divisors) {
                    if !q.is_zero() {
                        let prod = q.mul(d).unwrap();
                        prop_assert!(prod.leading_monomial().unwrap() <= f.leading_monomial().unwrap());
                    }
                }
            }
        }

        #[test]
        fn evaluation_is_ring_homomorphism(
            f in arb_poly(ctx_xp()),
            g in arb_poly(ctx_xp()),
            qa in -5i64..5,
            qb in -5i64..5,
            qc in -5i64..5,
        ) {
            let ctx = ctx_xp();
            let q = ParameterPoint::from_values(&ctx, vec![qa.into(), qb.into(), qc.into()]).unwrap();
            let fs = f.evaluate_parameters(&q).unwrap();
            let gs = g.evaluate_parameters(&q).unwrap();
            prop_assert_eq!(
                f.add(&g).unwrap().evaluate_parameters(&q).unwrap(),
                fs.add(&gs).unwrap()
            );
            prop_assert_eq!(
                f.mul(&g).unwrap().evaluate_parameters(&q).unwrap(),
                fs.mul(&gs).unwrap()
            );
        }

        #[test]
        fn block_decomposition_reconstructs(f in arb_poly(ctx_xp())) {
            prop_assume!(!f.is_zero());
            let (m, c) = f.block_leading_coefficient(&["x"]).unwrap();
            let head = c.mul_term(&Rational::one(), &m).unwrap();
            let rest = f.sub(&head).unwrap();
            let fp = f.context().first_param_slot();
            for t in rest.terms() {
                prop_assert!(t.monomial.block_part(fp) < m);
            }
        }
    }
}
