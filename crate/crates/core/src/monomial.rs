//! Exponent-vector monomials.
//!
//! A monomial stores one exponent per context slot, slot 0 being the greatest
//! variable. `Ord` is the lex order of the ambient context, so
//! `m1 > m2` means `m1` is lex-greater. Comparisons assume equal lengths,
//! which every polynomial operation enforces at its boundary.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The constant monomial 1 over `len` slots.
    pub fn one(len: usize) -> Self {
        Monomial { exps: vec![0; len] }
    }

    /// The monomial `v` for the variable in `slot`.
    pub fn var(len: usize, slot: usize) -> Self {
        let mut exps = vec![0; len];
        exps[slot] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, slot: usize) -> u32 {
        self.exps[slot]
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn uses_slot(&self, slot: usize) -> bool {
        self.exps[slot] > 0
    }

    /// Product of monomials, with overflow detection.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.len(), other.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    pub fn checked_pow(&self, n: u32) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for a in &self.exps {
            exps.push(a.checked_mul(n).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// The part of the monomial supported on slots `0..first_param_slot`,
    /// padded with zeros on the parameter slots.
    pub fn block_part(&self, first_param_slot: usize) -> Monomial {
        let mut exps = self.exps.clone();
        for e in exps.iter_mut().skip(first_param_slot) {
            *e = 0;
        }
        Monomial { exps }
    }

    /// Complement of [`Monomial::block_part`].
    pub fn param_part(&self, first_param_slot: usize) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        exps[first_param_slot..].copy_from_slice(&self.exps[first_param_slot..]);
        Monomial { exps }
    }

    /// Some(slot, exp) when the monomial is a pure power of one variable.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (slot, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((slot, e));
            }
        }
        found
    }

    /// Embed into a context with `extra` new greatest slots.
    pub fn prepend_slots(&self, extra: usize) -> Monomial {
        let mut exps = vec![0; extra];
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    /// Drop the first `count` slots; they must all carry exponent zero.
    pub fn drop_leading_slots(&self, count: usize) -> Monomial {
        debug_assert!(self.exps[..count].iter().all(|&e| e == 0));
        Monomial { exps: self.exps[count..].to_vec() }
    }

    /// Keep only the listed slots, in the given order.
    pub fn select_slots(&self, slots: &[usize]) -> Monomial {
        Monomial { exps: slots.iter().map(|&s| self.exps[s]).collect() }
    }
}
