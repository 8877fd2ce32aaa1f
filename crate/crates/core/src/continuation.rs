//! Discriminants, standard-monomial counting, and the end-to-end
//! verification pipeline: outside the discriminant hypersurface the number of
//! regular zeros of a family is one constant value, and that value is the
//! maximum over all parameters.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::ideal::{check_generic_regularity, specialize_basis, specialize_saturated, FamilySpec, Specialization};
use crate::monomial::Monomial;
use crate::polynomial::{ParameterPoint, Polynomial};
use crate::rational::{Integer, Rational};
use crate::sampling::{sample_generic_point, sample_parameter_point, trial_rng};

/// Monomials not divisible by any leading monomial of a zero-dimensional
/// basis; their number counts solutions with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomialSet {
    monomials: Vec<Monomial>,
}

impl StandardMonomialSet {
    /// Ascending lex order.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn count(&self) -> usize {
        self.monomials.len()
    }
}

/// Enumerate the standard monomials of a basis in the unknowns alone. The
/// ideal must be zero-dimensional: every variable needs a pure power among
/// the leading monomials. The unit ideal yields the empty set.
pub fn standard_monomials(basis: &GroebnerBasis) -> Result<StandardMonomialSet> {
    let ctx = basis.context();
    if ctx.num_params() != 0 || ctx.has_aux() {
        return Err(Error::ContextMismatch("basis involves variables other than the unknowns".into()));
    }
    if basis.elements().iter().any(|g| g.is_constant() && !g.is_zero()) {
        return Ok(StandardMonomialSet { monomials: Vec::new() });
    }
    let n = ctx.len();
    let leading: Vec<&Monomial> = basis
        .elements()
        .iter()
        .map(|g| g.leading_monomial())
        .collect::<Result<_>>()?;

    // Degree bound per variable from the pure-power leading monomials.
    let mut bounds = vec![None; n];
    for lm in &leading {
        if let Some((slot, exp)) = lm.as_pure_power() {
            let entry = &mut bounds[slot];
            *entry = Some(entry.map_or(exp, |b: u32| b.min(exp)));
        }
    }
    let bounds: Vec<u32> = bounds
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::PositiveDimensional)?;

    let mut monomials = Vec::new();
    let mut exps = vec![0u32; n];
    'grid: loop {
        let candidate = Monomial::from_exponents(exps.clone());
        if !leading.iter().any(|lm| lm.divides(&candidate)) {
            monomials.push(candidate);
        }
        // Advance odometer, last slot fastest, so output is lex ascending.
        for slot in (0..n).rev() {
            exps[slot] += 1;
            if exps[slot] < bounds[slot] {
                continue 'grid;
            }
            exps[slot] = 0;
        }
        break;
    }
    monomials.sort();
    Ok(StandardMonomialSet { monomials })
}

/// Number of regular zeros of the system at `q`: the standard-monomial count
/// of the specialized saturated ideal.
pub fn regular_zero_count(family: &FamilySpec, q: &ParameterPoint) -> Result<usize> {
    let basis = specialize_saturated(family, q)?;
    Ok(standard_monomials(&basis)?.count())
}

/// The computed discriminant data of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantReport {
    /// Nonconstant parameter leading coefficients, deduplicated up to scalar
    /// and canonically scaled.
    pub raw_factors: Vec<Polynomial>,
    /// Product of the raw factors; its zero set is the discriminant. Never
    /// the zero polynomial.
    pub raw_product: Polynomial,
    /// Squarefree, pairwise-coprime factors with the same zero set as
    /// `raw_product`; only computed for one-parameter families.
    pub squarefree_factors: Option<Vec<Polynomial>>,
    /// Count of regular zeros at generic parameters.
    pub generic_count: usize,
    /// Set when the family admits no regular zeros at all (count 0); the
    /// discriminant is then empty by convention.
    pub diagnostic: Option<String>,
}

/// Compute the discriminant of the family: the product of the parameter
/// leading coefficients of the augmented basis, plus the generic
/// regular-zero count taken at a seeded random generic point.
pub fn discriminant(family: &FamilySpec, seed: u64) -> Result<DiscriminantReport> {
    let sat = family.saturate()?;
    let ctx = family.context();
    if !check_generic_regularity(&sat) {
        return Ok(DiscriminantReport {
            raw_factors: Vec::new(),
            raw_product: Polynomial::one(ctx),
            squarefree_factors: (ctx.num_params() == 1).then(Vec::new),
            generic_count: 0,
            diagnostic: Some(
                "the saturated ideal meets the parameter subring; no parameter value yields regular zeros"
                    .into(),
            ),
        });
    }

    let mut raw_factors: Vec<Polynomial> = Vec::new();
    for plc in sat.parameter_leading_coeffs() {
        if plc.coeff.is_constant() {
            continue;
        }
        let scaled = plc.coeff.canonical_scaled();
        if !raw_factors.contains(&scaled) {
            raw_factors.push(scaled);
        }
    }
    raw_factors.sort_by(|a, b| {
        a.leading_monomial().expect("nonzero").cmp(b.leading_monomial().expect("nonzero"))
    });

    let mut raw_product = Polynomial::one(ctx);
    for f in &raw_factors {
        raw_product = raw_product.mul(f)?;
    }
    let raw_product = raw_product.canonical_scaled();

    let squarefree_factors = if ctx.num_params() == 1 {
        if raw_product.is_constant() {
            Some(Vec::new())
        } else {
            Some(split_squarefree(&raw_product)?)
        }
    } else {
        None
    };

    // Generic count at a seeded guard-passing point.
    let mut rng = trial_rng(seed, u64::MAX);
    let (q, _) = sample_generic_point(&sat, ctx, &mut rng)?;
    let basis = match specialize_basis(&sat, &q)? {
        Specialization::Basis(b) => b,
        Specialization::GuardFailure(_) => unreachable!("sampled point passed the guard"),
    };
    let generic_count = standard_monomials(&basis)?.count();

    Ok(DiscriminantReport {
        raw_factors,
        raw_product,
        squarefree_factors,
        generic_count,
        diagnostic: None,
    })
}

fn single_used_slot(f: &Polynomial) -> Result<usize> {
    let len = f.context().len();
    let used: Vec<usize> = (0..len).filter(|&s| f.uses_slot(s)).collect();
    match used.as_slice() {
        [slot] => Ok(*slot),
        [] => Err(Error::InvalidArgument("constant polynomial".into())),
        _ => Err(Error::UnsupportedShape("polynomial is not univariate".into())),
    }
}

/// Euclidean gcd of univariate polynomials (in the same single variable),
/// returned in canonical scaling.
pub fn univariate_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = a.divide(std::slice::from_ref(&b))?;
        a = b;
        b = r;
    }
    Ok(a.canonical_scaled())
}

/// `f / gcd(f, f')`: same zero set, all multiplicities one.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    let slot = single_used_slot(f)?;
    let name = f.context().name_of(slot).to_string();
    let df = f.partial_derivative(&name)?;
    let g = univariate_gcd(f, &df)?;
    let (q, r) = f.divide(std::slice::from_ref(&g))?;
    debug_assert!(r.is_zero());
    let _ = r;
    Ok(q[0].canonical_scaled())
}

fn to_small(n: &Integer) -> Result<i128> {
    n.to_i128()
        .filter(|v| v.abs() <= 1_000_000_000_000)
        .ok_or_else(|| Error::UnsupportedShape("coefficients too large for rational-root search".into()))
}

fn positive_divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

fn eval_univariate(f: &Polynomial, slot: usize, value: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for t in f.terms() {
        let e = t.monomial.exponent(slot);
        acc = acc.add(&t.coefficient.mul(&value.pow(e)));
    }
    acc
}

/// All rational roots of a univariate polynomial, ascending. Exact: found by
/// the rational-root bound on the primitive integer form.
pub fn rational_roots(f: &Polynomial) -> Result<Vec<Rational>> {
    let slot = single_used_slot(f)?;
    let mut f = f.canonical_scaled();
    let mut roots = Vec::new();

    // Roots at zero: strip powers of the variable.
    let var_mono = Monomial::var(f.context().len(), slot);
    let var = Polynomial::from_terms(f.context(), vec![(Rational::one(), var_mono)])?;
    if f.terms().iter().all(|t| t.monomial.exponent(slot) > 0) {
        roots.push(Rational::zero());
        while f.terms().iter().all(|t| t.monomial.exponent(slot) > 0) {
            let (q, r) = f.divide(std::slice::from_ref(&var))?;
            debug_assert!(r.is_zero());
            f = q[0].clone();
            if f.is_constant() {
                break;
            }
        }
    }
    if f.is_constant() {
        roots.sort();
        return Ok(roots);
    }

    let lead = to_small(f.leading_coefficient()?.numer())?;
    let constant = f
        .terms()
        .iter()
        .find(|t| t.monomial.exponent(slot) == 0)
        .map(|t| t.coefficient.clone())
        .expect("nonzero constant term after stripping");
    let constant = to_small(constant.numer())?;

    for u in positive_divisors(constant) {
        for v in positive_divisors(lead) {
            for sign in [1i128, -1] {
                let candidate = Rational::new(sign * u, v).expect("v > 0");
                if roots.contains(&candidate) {
                    continue;
                }
                if eval_univariate(&f, slot, &candidate).is_zero() {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// Split a univariate polynomial into its rational linear factors plus one
/// squarefree cofactor without rational roots. Factors are pairwise coprime,
/// squarefree, and share their zero set with the input.
pub fn split_squarefree(f: &Polynomial) -> Result<Vec<Polynomial>> {
    let slot = single_used_slot(f)?;
    let s = squarefree_part(f)?;
    let ctx = s.context().clone();
    let name = ctx.name_of(slot).to_string();
    let mut factors = Vec::new();
    let mut rest = s;
    for root in rational_roots(&rest)? {
        let linear = Polynomial::var(&ctx, &name)?
            .sub(&Polynomial::constant(&ctx, root))?
            .canonical_scaled();
        let (q, r) = rest.divide(std::slice::from_ref(&linear))?;
        debug_assert!(r.is_zero());
        rest = q[0].clone();
        factors.push(linear);
    }
    if !rest.is_constant() {
        factors.push(rest.canonical_scaled());
    }
    factors.sort_by_key(|f| (f.total_degree(), f.to_string()));
    Ok(factors)
}

/// One sampled parameter point and its regular-zero count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSample {
    pub point: ParameterPoint,
    pub count: usize,
    pub resamples: u32,
}

/// Outcome of the empirical check that the regular-zero count is the constant
/// generic value off the discriminant and never exceeds it anywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub generic_count: usize,
    pub trials: u32,
    pub off_discriminant: Vec<CountSample>,
    pub on_discriminant: Vec<CountSample>,
    pub guard_resamples: u32,
    pub violations: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sample `trials` random rational parameter points off the discriminant
/// (resampling on guard failure) and check the count equals the generic
/// count; for one-parameter families also probe the rational points on the
/// discriminant and check the count never exceeds it. Trials are
/// deterministic per (seed, trial index), so `jobs` only changes wall time.
pub fn verify_continuation_theorem(
    family: &FamilySpec,
    trials: u32,
    seed: u64,
    jobs: usize,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let report = discriminant(family, seed)?;
    let sat = family.saturate()?;
    let degenerate = report.diagnostic.is_some();
    let generic_count = report.generic_count;
    let ctx = family.context();

    let run_trial = |t: u32| -> Result<CountSample> {
        let mut rng = trial_rng(seed, t as u64);
        let (point, resamples) = if degenerate {
            (sample_parameter_point(ctx, &mut rng), 0)
        } else {
            sample_generic_point(&sat, ctx, &mut rng)?
        };
        let count = regular_zero_count(family, &point)?;
        Ok(CountSample { point, count, resamples })
    };

    let mut off_discriminant: Vec<CountSample> = Vec::with_capacity(trials as usize);
    if jobs <= 1 {
        for t in 0..trials {
            off_discriminant.push(run_trial(t)?);
        }
    } else {
        let mut buckets: Vec<Vec<(u32, Result<CountSample>)>> = Vec::new();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..jobs {
                let run_trial = &run_trial;
                handles.push(scope.spawn(move || {
                    (w..trials as usize)
                        .step_by(jobs)
                        .map(|t| (t as u32, run_trial(t as u32)))
                        .collect::<Vec<_>>()
                }));
            }
            for h in handles {
                buckets.push(h.join().expect("trial worker panicked"));
            }
        });
        let mut merged: Vec<(u32, Result<CountSample>)> = buckets.into_iter().flatten().collect();
        merged.sort_by_key(|(t, _)| *t);
        for (_, sample) in merged {
            off_discriminant.push(sample?);
        }
    }

    let guard_resamples = off_discriminant.iter().map(|s| s.resamples).sum();
    let mut violations = Vec::new();
    for sample in &off_discriminant {
        if sample.count != generic_count {
            violations.push(format!(
                "off-discriminant point ({}) gave {} regular zeros, expected {}",
                sample.point, sample.count, generic_count
            ));
        }
    }

    // Rational points on the discriminant, single-parameter families only.
    let mut on_discriminant = Vec::new();
    if !degenerate && ctx.num_params() == 1 && !report.raw_product.is_constant() {
        let probe = squarefree_part(&report.raw_product)?;
        for root in rational_roots(&probe)? {
            let point = ParameterPoint::from_values(ctx, vec![root])?;
            let count = regular_zero_count(family, &point)?;
            if count > generic_count {
                violations.push(format!(
                    "on-discriminant point ({point}) gave {count} regular zeros, above the generic count {generic_count}"
                ));
            }
            on_discriminant.push(CountSample { point, count, resamples: 0 });
        }
    }

    Ok(VerificationReport {
        generic_count,
        trials,
        off_discriminant,
        on_discriminant,
        guard_resamples,
        violations,
    })
}
