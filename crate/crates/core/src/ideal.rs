//! Ideal-level constructions for parameterized families: the Jacobian
//! determinant, saturation through an auxiliary variable, and specialization
//! with the leading-coefficient guard.

use std::sync::Arc;

use crate::context::VariableContext;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, finalize_reduced, GroebnerBasis};
use crate::monomial::Monomial;
use crate::polynomial::{ParameterPoint, Polynomial};

/// A square family: `n` polynomials in the `n` unknowns of the context,
/// depending on its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    ctx: Arc<VariableContext>,
    polynomials: Vec<Polynomial>,
}

impl FamilySpec {
    pub fn new(ctx: &Arc<VariableContext>, polynomials: Vec<Polynomial>) -> Result<Self> {
        if ctx.has_aux() {
            return Err(Error::ContextMismatch("family context must not carry the auxiliary variable".into()));
        }
        if polynomials.len() != ctx.num_x() || ctx.num_x() == 0 {
            return Err(Error::NonSquareFamily {
                polynomials: polynomials.len(),
                variables: ctx.num_x(),
            });
        }
        for f in &polynomials {
            if **f.context() != **ctx {
                return Err(Error::ContextMismatch("family member from a different context".into()));
            }
        }
        Ok(FamilySpec { ctx: ctx.clone(), polynomials })
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    /// Saturation of `⟨f_1, …, f_n⟩` by the Jacobian determinant. A zero
    /// Jacobian yields the unit ideal: saturating by zero removes everything.
    pub fn saturate(&self) -> Result<SaturationResult> {
        let h = jacobian_determinant(self)?;
        saturate_impl(&self.ctx, &self.polynomials, &h)
    }
}

/// Exact symbolic determinant of the matrix of partials with respect to the
/// unknowns.
pub fn jacobian_determinant(family: &FamilySpec) -> Result<Polynomial> {
    let ctx = family.context();
    let n = ctx.num_x();
    let mut rows = Vec::with_capacity(n);
    for f in family.polynomials() {
        let mut row = Vec::with_capacity(n);
        for x in ctx.x_vars() {
            row.push(f.partial_derivative(x)?);
        }
        rows.push(row);
    }
    determinant(ctx, &rows)
}

/// Laplace expansion along the first row; fine at the small sizes families
/// have.
fn determinant(ctx: &Arc<VariableContext>, rows: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = rows.len();
    if n == 0 {
        return Ok(Polynomial::one(ctx));
    }
    if n == 1 {
        return Ok(rows[0][0].clone());
    }
    let mut acc = Polynomial::zero(ctx);
    for (j, pivot) in rows[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(jj, p)| (jj != j).then(|| p.clone()))
                    .collect()
            })
            .collect();
        let cofactor = pivot.mul(&determinant(ctx, &minor)?)?;
        acc = if j % 2 == 0 { acc.add(&cofactor)? } else { acc.sub(&cofactor)? };
    }
    Ok(acc)
}

/// One recorded parameter leading coefficient `c_i(p)` of an augmented-basis
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamLeadingCoeff {
    /// Index into the augmented basis.
    pub source_index: usize,
    /// Lex-greatest `{aux} ∪ x` block monomial of the source element, in the
    /// augmented context.
    pub block_monomial: Monomial,
    /// The parameter polynomial multiplying that block monomial, in the base
    /// context.
    pub coeff: Polynomial,
}

/// Output of the saturation construction `I : ⟨h⟩^∞ = (I + ⟨1 − y·h⟩) ∩ ℂ[x, p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationResult {
    augmented_basis: GroebnerBasis,
    saturated_basis: GroebnerBasis,
    parameter_leading_coeffs: Vec<ParamLeadingCoeff>,
}

impl SaturationResult {
    /// Reduced basis of `I + ⟨1 − y·h⟩` in the augmented context.
    pub fn augmented_basis(&self) -> &GroebnerBasis {
        &self.augmented_basis
    }

    /// Reduced basis of `I : ⟨h⟩^∞` in the base context.
    pub fn saturated_basis(&self) -> &GroebnerBasis {
        &self.saturated_basis
    }

    /// One entry per augmented-basis element, each nonzero.
    pub fn parameter_leading_coeffs(&self) -> &[ParamLeadingCoeff] {
        &self.parameter_leading_coeffs
    }

    /// True when no recorded parameter leading coefficient vanishes at `q`.
    pub fn guard_passes(&self, q: &ParameterPoint) -> Result<bool> {
        for plc in &self.parameter_leading_coeffs {
            if plc.coeff.evaluate_at_parameters(q)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The coefficients vanishing at `q`.
    pub fn vanishing_at(&self, q: &ParameterPoint) -> Result<Vec<ParamLeadingCoeff>> {
        let mut out = Vec::new();
        for plc in &self.parameter_leading_coeffs {
            if plc.coeff.evaluate_at_parameters(q)?.is_zero() {
                out.push(plc.clone());
            }
        }
        Ok(out)
    }
}

/// Saturate `⟨gens⟩` by the principal ideal `⟨h⟩`, `h ≠ 0`.
pub fn saturate(gens: &[Polynomial], h: &Polynomial) -> Result<SaturationResult> {
    if h.is_zero() {
        return Err(Error::SaturationByZero);
    }
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    let ctx = first.context().clone();
    saturate_impl(&ctx, gens, h)
}

/// Shared pipeline; also covers `h = 0`, where `1 − y·h = 1` makes the
/// saturation the unit ideal.
fn saturate_impl(ctx: &Arc<VariableContext>, gens: &[Polynomial], h: &Polynomial) -> Result<SaturationResult> {
    for g in gens {
        if **g.context() != **ctx {
            return Err(Error::ContextMismatch("generators from different contexts".into()));
        }
    }
    if **h.context() != **ctx {
        return Err(Error::ContextMismatch("saturating polynomial from a different context".into()));
    }
    let aug_ctx = Arc::new(ctx.augmented());
    let mut lifted: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.lift_to(&aug_ctx))
        .collect::<Result<_>>()?;
    let aux = Polynomial::var(&aug_ctx, aug_ctx.aux_name().expect("augmented"))?;
    let relation = Polynomial::one(&aug_ctx).sub(&aux.mul(&h.lift_to(&aug_ctx)?)?)?;
    lifted.push(relation);

    let augmented_basis = buchberger(&lifted)?;
    let keep: Vec<&str> = ctx.names().collect();
    let saturated_basis = augmented_basis.intersect_with_subring(&keep)?;

    let block: Vec<&str> = aug_ctx.block_names();
    let mut parameter_leading_coeffs = Vec::with_capacity(augmented_basis.elements().len());
    for (source_index, g) in augmented_basis.elements().iter().enumerate() {
        let (block_monomial, coeff) = g.block_leading_coefficient(&block)?;
        let coeff = coeff.drop_aux(ctx)?;
        debug_assert!(!coeff.is_zero());
        parameter_leading_coeffs.push(ParamLeadingCoeff { source_index, block_monomial, coeff });
    }

    Ok(SaturationResult { augmented_basis, saturated_basis, parameter_leading_coeffs })
}

/// True iff no element of the saturated basis lies entirely in the parameter
/// subring. A failure means no parameter value gives the family regular
/// zeros through this construction (the generic count is zero).
pub fn check_generic_regularity(sat: &SaturationResult) -> bool {
    !sat.saturated_basis.elements().iter().any(Polynomial::is_parameter_only)
}

/// Specialize the family at `q` and saturate from scratch in the unknowns:
/// the reduced basis of `φ_q(I) : φ_q(J)^∞`. This is the oracle side of the
/// commutation property.
pub fn specialize_saturated(family: &FamilySpec, q: &ParameterPoint) -> Result<GroebnerBasis> {
    let specialized: Vec<Polynomial> = family
        .polynomials()
        .iter()
        .map(|f| f.evaluate_parameters(q))
        .collect::<Result<_>>()?;
    let xctx = specialized
        .first()
        .map(|f| f.context().clone())
        .unwrap_or_else(|| Arc::new(family.context().without_params()));
    let h = jacobian_determinant(family)?.evaluate_parameters(q)?;
    if h.is_zero() {
        // J_q = ⟨0⟩: every zero is singular and the saturation is the unit
        // ideal.
        return buchberger(&[Polynomial::one(&xctx)]);
    }
    let sat = saturate_impl(&xctx, &specialized, &h)?;
    Ok(sat.saturated_basis.clone())
}

/// A specialization rejected because recorded leading coefficients vanish at
/// the point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardFailure {
    pub point: ParameterPoint,
    pub vanishing: Vec<ParamLeadingCoeff>,
}

/// Outcome of the guarded fast path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Specialization {
    Basis(GroebnerBasis),
    GuardFailure(GuardFailure),
}

impl Specialization {
    pub fn basis(&self) -> Option<&GroebnerBasis> {
        match self {
            Specialization::Basis(b) => Some(b),
            Specialization::GuardFailure(_) => None,
        }
    }
}

/// Specialize the saturated basis by substitution alone. When every recorded
/// parameter leading coefficient is nonzero at `q`, the image is guaranteed
/// to be a Gröbner basis of `φ_q(I) : φ_q(J)^∞` and is returned in reduced
/// canonical form; otherwise the vanishing coefficients are reported.
pub fn specialize_basis(sat: &SaturationResult, q: &ParameterPoint) -> Result<Specialization> {
    let vanishing = sat.vanishing_at(q)?;
    if !vanishing.is_empty() {
        return Ok(Specialization::GuardFailure(GuardFailure { point: q.clone(), vanishing }));
    }
    let elements: Vec<Polynomial> = sat
        .saturated_basis
        .elements()
        .iter()
        .map(|g| g.evaluate_parameters(q))
        .collect::<Result<_>>()?;
    let xctx = Arc::new(sat.saturated_basis.context().without_params());
    Ok(Specialization::Basis(finalize_reduced(&xctx, elements)))
}
