//! Buchberger's algorithm for reduced lex Gröbner bases, normal forms, and
//! ideal-membership tests.
//!
//! Reduced bases are canonically normalized: every element is content-free
//! with integer coefficients and a positive leading coefficient, and elements
//! are sorted by leading monomial ascending. This makes the output unique for
//! a given ideal, independent of generator order.

use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BinaryHeap, HashSet};
use std::sync::Arc;

use crate::context::VariableContext;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::polynomial::{Polynomial, Term};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ctx: Arc<VariableContext>,
    elements: Vec<Polynomial>,
}

/// S-polynomial `(lcm/LT(f))·f − (lcm/LT(g))·g` over the lcm of the leading
/// monomials; the leading terms cancel by construction.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if **f.context() != **g.context() {
        return Err(Error::ContextMismatch("operands from different contexts".into()));
    }
    let ft = f.leading_term()?;
    let gt = g.leading_term()?;
    let lcm = ft.monomial.lcm(&gt.monomial);
    let f_shift = ft.monomial.div_into(&lcm).expect("lcm divisible");
    let g_shift = gt.monomial.div_into(&lcm).expect("lcm divisible");
    let left = f.mul_term(&ft.coefficient.inv()?, &f_shift)?;
    let right = g.mul_term(&gt.coefficient.inv()?, &g_shift)?;
    left.sub(&right)
}

/// Remainder of `f` under division by `divisors`, scanning in the given
/// order. Divisors must be nonzero.
fn remainder(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let ctx = f.context();
    let mut work: BTreeMap<Monomial, Rational> =
        f.terms().iter().map(|t| (t.monomial.clone(), t.coefficient.clone())).collect();
    let mut rem: Vec<(Rational, Monomial)> = Vec::new();

    while let Some((monomial, coefficient)) = work.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        work.remove(&monomial);
        let mut reduced = false;
        for d in divisors {
            let d_lead = d.leading_term().expect("nonzero divisor");
            if let Some(shift) = d_lead.monomial.div_into(&monomial) {
                let factor = coefficient.div(&d_lead.coefficient).expect("nonzero leading coefficient");
                for t in &d.terms()[1..] {
                    let m = t.monomial.checked_mul(&shift).expect("bounded degrees");
                    let delta = factor.mul(&t.coefficient);
                    match work.entry(m) {
                        Entry::Occupied(mut e) => {
                            let c = e.get().sub(&delta);
                            if c.is_zero() {
                                e.remove();
                            } else {
                                *e.get_mut() = c;
                            }
                        }
                        Entry::Vacant(v) => {
                            v.insert(delta.neg());
                        }
                    }
                }
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem.push((coefficient, monomial));
        }
    }
    Polynomial::from_terms(ctx, rem).expect("terms from the same context")
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators` under the
/// context's lex order.
pub fn buchberger(generators: &[Polynomial]) -> Result<GroebnerBasis> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    let ctx = first.context().clone();
    for g in generators {
        if **g.context() != *ctx {
            return Err(Error::ContextMismatch("generators from different contexts".into()));
        }
    }

    let mut basis: Vec<Polynomial> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(Polynomial::canonical_scaled)
        .collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis { ctx, elements: Vec::new() });
    }

    // Pair queue in normal strategy: smallest lcm of leading monomials first.
    let mut queue: BinaryHeap<Reverse<(Monomial, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |queue: &mut BinaryHeap<Reverse<(Monomial, usize, usize)>>,
                          pending: &mut HashSet<(usize, usize)>,
                          basis: &[Polynomial],
                          new: usize| {
        let lm_new = basis[new].leading_monomial().expect("nonzero").clone();
        for k in 0..new {
            let lcm = basis[k].leading_monomial().expect("nonzero").lcm(&lm_new);
            queue.push(Reverse((lcm, k, new)));
            pending.insert((k, new));
        }
    };
    for i in 1..basis.len() {
        push_pairs(&mut queue, &mut pending, &basis, i);
    }

    while let Some(Reverse((lcm, i, j))) = queue.pop() {
        if !pending.remove(&pair_key(i, j)) {
            continue;
        }
        let lm_i = basis[i].leading_monomial().expect("nonzero");
        let lm_j = basis[j].leading_monomial().expect("nonzero");
        // First criterion: coprime leading monomials.
        if lcm == lm_i.checked_mul(lm_j)? {
            continue;
        }
        // Chain criterion: some other leading monomial divides the lcm and
        // both companion pairs are already settled.
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            if g.leading_monomial().expect("nonzero").divides(&lcm)
                && !pending.contains(&pair_key(i, k))
                && !pending.contains(&pair_key(j, k))
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j])?;
        let refs: Vec<&Polynomial> = basis.iter().collect();
        let r = remainder(&s, &refs);
        if !r.is_zero() {
            let r = r.canonical_scaled();
            basis.push(r);
            push_pairs(&mut queue, &mut pending, &basis, basis.len() - 1);
        }
    }

    Ok(finalize_reduced(&ctx, basis))
}

/// Minimize, inter-reduce, canonically scale, and sort a Gröbner basis. The
/// input must already be a Gröbner basis of its ideal.
pub(crate) fn finalize_reduced(ctx: &Arc<VariableContext>, elements: Vec<Polynomial>) -> GroebnerBasis {
    let elems: Vec<Polynomial> = elements.into_iter().filter(|g| !g.is_zero()).collect();
    // Minimize: drop any element whose leading monomial is divisible by
    // another's. Ties (equal leading monomials) keep the earliest.
    let mut keep: Vec<bool> = vec![true; elems.len()];
    for i in 0..elems.len() {
        if !keep[i] {
            continue;
        }
        let lm_i = elems[i].leading_monomial().expect("nonzero").clone();
        for (j, g) in elems.iter().enumerate() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_j = g.leading_monomial().expect("nonzero");
            if lm_j.divides(&lm_i) && (lm_j != &lm_i || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut elems: Vec<Polynomial> =
        elems.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();
    elems.sort_by(|a, b| {
        a.leading_monomial().expect("nonzero").cmp(b.leading_monomial().expect("nonzero"))
    });

    // Inter-reduce tails until stable.
    loop {
        let mut changed = false;
        for i in 0..elems.len() {
            let others: Vec<&Polynomial> =
                elems.iter().enumerate().filter_map(|(j, g)| (j != i).then_some(g)).collect();
            let reduced = remainder(&elems[i], &others).canonical_scaled();
            if reduced != elems[i] {
                elems[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in elems.iter_mut() {
        *g = g.canonical_scaled();
    }
    elems.sort_by(|a, b| {
        a.leading_monomial().expect("nonzero").cmp(b.leading_monomial().expect("nonzero"))
    });
    GroebnerBasis { ctx: ctx.clone(), elements: elems }
}

impl GroebnerBasis {
    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    /// Basis elements, sorted by leading monomial ascending.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Unique remainder of `f` modulo the basis; zero iff `f` is in the
    /// ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if **f.context() != *self.ctx {
            return Err(Error::ContextMismatch("polynomial from a different context".into()));
        }
        let refs: Vec<&Polynomial> = self.elements.iter().collect();
        Ok(remainder(f, &refs))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// True iff the reduced basis is `{1}`.
    pub fn contains_one(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    /// Restrict to the subring of the kept variables, which must form a
    /// downward-closed tail of the context order. By the elimination property
    /// of lex, the result is a Gröbner basis of the elimination ideal.
    pub fn intersect_with_subring(&self, keep: &[&str]) -> Result<GroebnerBasis> {
        let names: Vec<&str> = self.ctx.names().collect();
        if keep.len() > names.len() {
            return Err(Error::NotAnOrderTail(keep.join(", ")));
        }
        let offset = names.len() - keep.len();
        let tail = &names[offset..];
        let mut sorted_keep: Vec<&str> = keep.to_vec();
        sorted_keep.sort_unstable();
        let mut sorted_tail: Vec<&str> = tail.to_vec();
        sorted_tail.sort_unstable();
        if sorted_keep != sorted_tail {
            return Err(Error::NotAnOrderTail(keep.join(", ")));
        }

        if offset == 0 {
            return Ok(self.clone());
        }
        // A proper tail never contains the auxiliary variable, which is the
        // greatest slot; the restricted context therefore has no aux.
        let kept_x: Vec<String> = self
            .ctx
            .x_vars()
            .iter()
            .filter(|v| tail.contains(&v.as_str()))
            .cloned()
            .collect();
        let kept_p: Vec<String> = self
            .ctx
            .p_vars()
            .iter()
            .filter(|v| tail.contains(&v.as_str()))
            .cloned()
            .collect();
        let sub_ctx = Arc::new(VariableContext::new(kept_x, kept_p)?);

        let mut elements = Vec::new();
        for g in &self.elements {
            if (0..offset).any(|slot| g.uses_slot(slot)) {
                continue;
            }
            let terms: Vec<(Rational, Monomial)> = g
                .terms()
                .iter()
                .map(|t: &Term| (t.coefficient.clone(), t.monomial.drop_leading_slots(offset)))
                .collect();
            elements.push(Polynomial::from_terms(&sub_ctx, terms)?);
        }
        Ok(GroebnerBasis { ctx: sub_ctx, elements })
    }
}
