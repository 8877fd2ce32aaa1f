//! Floating-point cross-validation of the symbolic layer: Aberth–Ehrlich
//! univariate root finding, back-substitution for triangular lex bases, and a
//! predictor–corrector tracker for the parameter homotopy
//! `H(x, t) = F(x; (1−t)·q_target + t·q_start)` from `t = 1` to `t = 0`.
//!
//! Everything here is a witness in double precision; the symbolic layer is
//! the source of truth.

pub use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::ideal::{specialize_saturated, FamilySpec};
use crate::polynomial::{ParameterPoint, Polynomial};

/// One point of ℂⁿ, one coordinate per unknown. Always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoint {
    coordinates: Vec<Complex64>,
}

impl ComplexPoint {
    pub fn new(coordinates: Vec<Complex64>) -> Result<Self> {
        if coordinates.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(ComplexPoint { coordinates })
    }

    pub fn coordinates(&self) -> &[Complex64] {
        &self.coordinates
    }

    pub fn distance(&self, other: &ComplexPoint) -> f64 {
        self.coordinates
            .iter()
            .zip(&other.coordinates)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// A polynomial compiled to doubles for fast repeated evaluation. Variable
/// slots follow the originating context.
#[derive(Debug, Clone)]
struct CompiledPoly {
    terms: Vec<(f64, Vec<u32>)>,
}

impl CompiledPoly {
    fn compile(poly: &Polynomial) -> Result<Self> {
        let mut terms = Vec::with_capacity(poly.terms().len());
        for t in poly.terms() {
            let c = t.coefficient.to_f64();
            if !c.is_finite() {
                return Err(Error::NonFinite);
            }
            terms.push((c, t.monomial.exponents().to_vec()));
        }
        Ok(CompiledPoly { terms })
    }

    fn eval(&self, values: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, exps) in &self.terms {
            let mut term = Complex64::new(*c, 0.0);
            for (v, &e) in values.iter().zip(exps) {
                if e > 0 {
                    term *= v.powu(e);
                }
            }
            acc += term;
        }
        acc
    }
}

/// Numeric view of a family: the system plus its partials with respect to
/// unknowns and parameters, compiled once.
#[derive(Debug, Clone)]
pub struct NumericFamily {
    n: usize,
    k: usize,
    system: Vec<CompiledPoly>,
    jac_x: Vec<Vec<CompiledPoly>>,
    jac_p: Vec<Vec<CompiledPoly>>,
}

impl NumericFamily {
    pub fn new(family: &FamilySpec) -> Result<Self> {
        let ctx = family.context();
        let n = ctx.num_x();
        let k = ctx.num_params();
        let mut system = Vec::with_capacity(n);
        let mut jac_x = Vec::with_capacity(n);
        let mut jac_p = Vec::with_capacity(n);
        for f in family.polynomials() {
            system.push(CompiledPoly::compile(f)?);
            let mut row_x = Vec::with_capacity(n);
            for x in ctx.x_vars() {
                row_x.push(CompiledPoly::compile(&f.partial_derivative(x)?)?);
            }
            jac_x.push(row_x);
            let mut row_p = Vec::with_capacity(k);
            for p in ctx.p_vars() {
                row_p.push(CompiledPoly::compile(&f.partial_derivative(p)?)?);
            }
            jac_p.push(row_p);
        }
        Ok(NumericFamily { n, k, system, jac_x, jac_p })
    }

    pub fn num_unknowns(&self) -> usize {
        self.n
    }

    fn stacked(&self, x: &[Complex64], p: &[Complex64]) -> Vec<Complex64> {
        let mut values = Vec::with_capacity(self.n + self.k);
        values.extend_from_slice(x);
        values.extend_from_slice(p);
        values
    }

    pub fn eval_system(&self, x: &[Complex64], p: &[Complex64]) -> Vec<Complex64> {
        let values = self.stacked(x, p);
        self.system.iter().map(|f| f.eval(&values)).collect()
    }

    /// Max-norm residual of the system at (x, p).
    pub fn residual(&self, x: &[Complex64], p: &[Complex64]) -> f64 {
        self.eval_system(x, p).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn jacobian_x(&self, x: &[Complex64], p: &[Complex64]) -> Vec<Vec<Complex64>> {
        let values = self.stacked(x, p);
        self.jac_x
            .iter()
            .map(|row| row.iter().map(|f| f.eval(&values)).collect())
            .collect()
    }

    fn t_derivative(&self, x: &[Complex64], p: &[Complex64], dp: &[Complex64]) -> Vec<Complex64> {
        let values = self.stacked(x, p);
        self.jac_p
            .iter()
            .map(|row| row.iter().zip(dp).map(|(f, d)| f.eval(&values) * d).sum())
            .collect()
    }

    /// Determinant of the Jacobian in the unknowns at (x, p).
    pub fn jacobian_det(&self, x: &[Complex64], p: &[Complex64]) -> Complex64 {
        let (det, _) = lu_decompose(self.jacobian_x(x, p));
        det
    }

    /// Parameter point as complex doubles.
    pub fn parameter_values(&self, q: &ParameterPoint) -> Vec<Complex64> {
        q.values().iter().map(|v| Complex64::new(v.to_f64(), 0.0)).collect()
    }
}

/// In-place LU with partial pivoting; returns the determinant and the
/// factorization (None when a pivot vanishes exactly).
fn lu_decompose(mut a: Vec<Vec<Complex64>>) -> (Complex64, Option<(Vec<Vec<Complex64>>, Vec<usize>)>) {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let (pivot_row, pivot_norm) = (col..n)
            .map(|r| (r, a[r][col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("nonempty column");
        if pivot_norm == 0.0 {
            return (Complex64::new(0.0, 0.0), None);
        }
        if pivot_row != col {
            a.swap(pivot_row, col);
            perm.swap(pivot_row, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let factor = a[r][col] / a[col][col];
            a[r][col] = factor;
            for c in col + 1..n {
                let delta = factor * a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    (det, Some((a, perm)))
}

/// Solve `A·x = b`; None when `A` is numerically singular.
fn solve_linear(a: Vec<Vec<Complex64>>, b: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = b.len();
    let (_, lu) = lu_decompose(a);
    let (lu, perm) = lu?;
    let mut x: Vec<Complex64> = perm.iter().map(|&i| b[i]).collect();
    for col in 0..n {
        for r in col + 1..n {
            let delta = lu[r][col] * x[col];
            x[r] -= delta;
        }
    }
    for col in (0..n).rev() {
        for c in col + 1..n {
            let delta = lu[col][c] * x[c];
            x[col] -= delta;
        }
        x[col] /= lu[col][col];
    }
    x.iter().all(|z| z.re.is_finite() && z.im.is_finite()).then_some(x)
}

const ABERTH_MAX_ITERATIONS: usize = 400;
const ABERTH_CORRECTION_TOL: f64 = 1e-13;
const ROOT_RESIDUAL_TOL: f64 = 1e-10;

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Aberth–Ehrlich simultaneous iteration on dense ascending coefficients.
fn aberth(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    if degree == 1 {
        return Ok(vec![-coeffs[0] / lead]);
    }
    let deriv: Vec<Complex64> =
        coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Complex64::new(i as f64, 0.0)).collect();

    // Initial guesses on a circle sized by the Cauchy bound, centered at the
    // root centroid, with perturbed angles and alternating radii to break
    // symmetry.
    let cauchy = 1.0
        + coeffs[..degree].iter().map(|c| (c / lead).norm()).fold(0.0, f64::max);
    let center = -coeffs[degree - 1] / (lead * degree as f64);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / degree as f64 + 0.45;
            let radius = cauchy * (0.65 + 0.15 * (j % 2) as f64);
            center + Complex64::from_polar(radius, angle)
        })
        .collect();

    for _ in 0..ABERTH_MAX_ITERATIONS {
        let mut worst = 0.0f64;
        for j in 0..degree {
            let z = roots[j];
            let pz = horner(coeffs, z);
            let dz = horner(&deriv, z);
            let newton = if dz.norm() == 0.0 {
                // A stationary guess; nudge instead of dividing by zero.
                Complex64::new(1e-8, 1e-8)
            } else {
                pz / dz
            };
            let repulsion: Complex64 = (0..degree)
                .filter(|&k| k != j)
                .map(|k| (z - roots[k]).finv())
                .sum();
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let correction = if denom.norm() == 0.0 { newton } else { newton / denom };
            roots[j] = z - correction;
            if !roots[j].re.is_finite() || !roots[j].im.is_finite() {
                return Err(Error::RootsDidNotConverge { partial: roots });
            }
            worst = worst.max(correction.norm() / (1.0 + roots[j].norm()));
        }
        if worst < ABERTH_CORRECTION_TOL {
            break;
        }
    }

    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    for &z in &roots {
        if horner(coeffs, z).norm() > ROOT_RESIDUAL_TOL * scale {
            return Err(Error::RootsDidNotConverge { partial: roots });
        }
    }
    Ok(roots)
}

/// All complex roots (with multiplicity) of a univariate polynomial of
/// degree ≥ 1, by Aberth–Ehrlich simultaneous iteration. Each returned root
/// satisfies `|f(z)| ≤ 1e-10 · max|coeff|`.
pub fn univariate_roots(f: &Polynomial) -> Result<Vec<Complex64>> {
    let len = f.context().len();
    let used: Vec<usize> = (0..len).filter(|&s| f.uses_slot(s)).collect();
    let slot = match used.as_slice() {
        [slot] => *slot,
        [] => return Err(Error::InvalidArgument("constant polynomial has no roots".into())),
        _ => return Err(Error::UnsupportedShape("polynomial is not univariate".into())),
    };
    let degree = f.degree_in(slot) as usize;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); degree + 1];
    for t in f.terms() {
        let c = t.coefficient.to_f64();
        if !c.is_finite() {
            return Err(Error::NonFinite);
        }
        coeffs[t.monomial.exponent(slot) as usize] = Complex64::new(c, 0.0);
    }
    if coeffs[degree].norm() == 0.0 {
        return Err(Error::NonFinite);
    }
    aberth(&coeffs)
}

/// Solve a zero-dimensional triangular lex basis in the unknowns by
/// back-substitution: ordering the unknowns last to first, each is solved by
/// exactly one element univariate in it given the later values. Roots are
/// returned with multiplicity.
pub fn solve_triangular(basis: &GroebnerBasis) -> Result<Vec<ComplexPoint>> {
    let ctx = basis.context();
    if ctx.num_params() != 0 || ctx.has_aux() {
        return Err(Error::ContextMismatch("basis involves variables other than the unknowns".into()));
    }
    if basis.contains_one() {
        return Ok(Vec::new());
    }
    let n = ctx.len();
    if basis.elements().len() != n {
        return Err(Error::UnsupportedShape(format!(
            "{} basis elements for {} unknowns",
            basis.elements().len(),
            n
        )));
    }
    // One element per unknown, leading monomial a pure power, involving only
    // that unknown and later ones.
    let mut by_slot: Vec<Option<&Polynomial>> = vec![None; n];
    for g in basis.elements() {
        let (slot, _) = g
            .leading_monomial()?
            .as_pure_power()
            .ok_or_else(|| Error::UnsupportedShape("leading monomial is not a pure power".into()))?;
        if (0..slot).any(|s| g.uses_slot(s)) {
            return Err(Error::UnsupportedShape("element involves earlier unknowns".into()));
        }
        if by_slot[slot].replace(g).is_some() {
            return Err(Error::UnsupportedShape("two elements solve the same unknown".into()));
        }
    }

    let mut partials: Vec<Vec<Complex64>> = vec![Vec::new()];
    for slot in (0..n).rev() {
        let g = by_slot[slot].expect("one element per unknown");
        let degree = g.degree_in(slot) as usize;
        let mut next = Vec::new();
        for partial in &partials {
            // Coefficients of powers of the current unknown after
            // substituting the already-solved later ones.
            let mut coeffs = vec![Complex64::new(0.0, 0.0); degree + 1];
            for t in g.terms() {
                let c = t.coefficient.to_f64();
                if !c.is_finite() {
                    return Err(Error::NonFinite);
                }
                let mut value = Complex64::new(c, 0.0);
                for s in slot + 1..n {
                    let e = t.monomial.exponent(s);
                    if e > 0 {
                        value *= partial[n - 1 - s].powu(e);
                    }
                }
                coeffs[t.monomial.exponent(slot) as usize] += value;
            }
            for root in aberth(&coeffs)? {
                let mut extended = partial.clone();
                extended.push(root);
                next.push(extended);
            }
        }
        partials = next;
    }

    partials
        .into_iter()
        .map(|mut rev| {
            rev.reverse();
            ComplexPoint::new(rev)
        })
        .collect()
}

pub const REGULAR_JACOBIAN_TOL: f64 = 1e-8;
pub const CLUSTER_DISTANCE: f64 = 1e-6;

/// Solve the specialized saturated system numerically, discard points with a
/// near-singular Jacobian, merge clusters closer than [`CLUSTER_DISTANCE`],
/// and return the count of surviving points.
pub fn verify_count_numerically(family: &FamilySpec, q: &ParameterPoint) -> Result<usize> {
    let basis = specialize_saturated(family, q)?;
    if basis.contains_one() {
        return Ok(0);
    }
    let points = solve_triangular(&basis)?;
    let nf = NumericFamily::new(family)?;
    let p = nf.parameter_values(q);
    let mut kept: Vec<ComplexPoint> = Vec::new();
    for point in points {
        if nf.jacobian_det(point.coordinates(), &p).norm() <= REGULAR_JACOBIAN_TOL {
            continue;
        }
        if kept.iter().any(|other| point.distance(other) < CLUSTER_DISTANCE) {
            continue;
        }
        kept.push(point);
    }
    Ok(kept.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrackStatus {
    Converged,
    Diverged,
    SingularEncounter,
}

#[derive(Debug, Clone)]
pub struct TrackResult {
    pub start: ComplexPoint,
    pub end: ComplexPoint,
    pub status: TrackStatus,
    pub steps: usize,
    pub final_residual: f64,
}

/// Tracker settings; the defaults are conventional continuation heuristics.
#[derive(Debug, Clone)]
pub struct TrackerConfig {
    pub newton_tol: f64,
    pub end_tol: f64,
    pub start_tol: f64,
    pub initial_step: f64,
    pub min_step: f64,
    pub max_step: f64,
    pub max_newton_iters: usize,
    pub max_steps: usize,
    /// Threshold on |det J| below which a failed step is classified as a
    /// singular encounter rather than divergence.
    pub singular_det_threshold: f64,
    /// Interpolation detour: the straight parameter segment is traversed
    /// through `s(τ) = γτ/(γτ + 1 − τ)`, which fixes both endpoints and keeps
    /// the interior of the path off the real parameter slice, where families
    /// with real coefficients place their singular instances.
    pub detour: Complex64,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        TrackerConfig {
            newton_tol: 1e-12,
            end_tol: 1e-8,
            start_tol: 1e-6,
            initial_step: 1e-2,
            min_step: 1e-12,
            max_step: 0.1,
            max_newton_iters: 12,
            max_steps: 100_000,
            singular_det_threshold: 1e-6,
            detour: Complex64::new(0.6, 0.8),
        }
    }
}

fn newton_correct(
    nf: &NumericFamily,
    x: &mut Vec<Complex64>,
    p: &[Complex64],
    cfg: &TrackerConfig,
) -> (bool, bool) {
    let mut singular = false;
    for _ in 0..cfg.max_newton_iters {
        let residual = nf.eval_system(x, p);
        let scale = 1.0 + x.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if residual.iter().map(|z| z.norm()).fold(0.0, f64::max) < cfg.newton_tol * scale {
            return (true, singular);
        }
        let rhs: Vec<Complex64> = residual.iter().map(|z| -z).collect();
        match solve_linear(nf.jacobian_x(x, p), &rhs) {
            Some(delta) => {
                for (xi, d) in x.iter_mut().zip(&delta) {
                    *xi += d;
                }
                if x.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                    return (false, singular);
                }
            }
            None => {
                singular = true;
                return (false, singular);
            }
        }
    }
    let residual = nf.residual(x, p);
    let scale = 1.0 + x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    (residual < cfg.newton_tol * scale, singular)
}

/// Track one zero of the start system `F(·; q_start)` to the target system
/// `F(·; q_target)`: fourth-order Runge–Kutta prediction on the Davidenko
/// ODE `J_x·ẋ + ∂H/∂t = 0` with adaptive step control, followed by Newton
/// correction on `H(·, t)` after every step.
pub fn track_path(
    family: &FamilySpec,
    q_target: &ParameterPoint,
    q_start: &ParameterPoint,
    x0: &ComplexPoint,
    cfg: &TrackerConfig,
) -> Result<TrackResult> {
    let nf = NumericFamily::new(family)?;
    if x0.coordinates().len() != nf.num_unknowns() {
        return Err(Error::InvalidArgument("start point dimension mismatch".into()));
    }
    let target = nf.parameter_values(q_target);
    let start = nf.parameter_values(q_start);

    let start_residual = nf.residual(x0.coordinates(), &start);
    if start_residual > cfg.start_tol * (1.0 + x0.coordinates().iter().map(|z| z.norm()).fold(0.0, f64::max))
    {
        return Err(Error::InvalidArgument(format!(
            "start point is not an approximate zero of the start system (residual {start_residual:.3e})"
        )));
    }

    let mut x = x0.coordinates().to_vec();

    // Constant homotopy: a single corrective step.
    if q_start == q_target {
        let (ok, _) = newton_correct(&nf, &mut x, &target, cfg);
        let final_residual = nf.residual(&x, &target);
        let status = if ok && final_residual < cfg.end_tol {
            TrackStatus::Converged
        } else {
            TrackStatus::Diverged
        };
        return Ok(TrackResult {
            start: x0.clone(),
            end: ComplexPoint::new(x)?,
            status,
            steps: 1,
            final_residual,
        });
    }

    let direction: Vec<Complex64> = start.iter().zip(&target).map(|(s, t)| s - t).collect();
    let gamma = cfg.detour;
    let arc = |tau: f64| -> Complex64 {
        let tau = Complex64::new(tau, 0.0);
        gamma * tau / (gamma * tau + (Complex64::new(1.0, 0.0) - tau))
    };
    let arc_rate = |tau: f64| -> Complex64 {
        let tau = Complex64::new(tau, 0.0);
        let denom = gamma * tau + (Complex64::new(1.0, 0.0) - tau);
        gamma / (denom * denom)
    };
    let params_at = |tau: f64| -> Vec<Complex64> {
        let s = arc(tau);
        target.iter().zip(&direction).map(|(t, d)| t + s * d).collect()
    };

    // dx/dτ from the Davidenko ODE along the arc.
    let slope = |x: &[Complex64], tau: f64| -> Option<Vec<Complex64>> {
        let p = params_at(tau);
        let rate = arc_rate(tau);
        let dp: Vec<Complex64> = direction.iter().map(|d| d * rate).collect();
        let rhs: Vec<Complex64> = nf.t_derivative(x, &p, &dp).iter().map(|z| -z).collect();
        solve_linear(nf.jacobian_x(x, &p), &rhs)
    };

    let mut tau = 1.0f64;
    let mut step = cfg.initial_step;
    let mut steps = 0usize;
    let mut successes = 0u32;
    let mut status = None;

    while tau > 0.0 {
        if steps >= cfg.max_steps {
            status = Some(TrackStatus::Diverged);
            break;
        }
        let dt = step.min(tau);
        let attempt = (|| -> Option<Vec<Complex64>> {
            let h = -dt;
            let k1 = slope(&x, tau)?;
            let mid: Vec<Complex64> =
                x.iter().zip(&k1).map(|(xi, k)| xi + k * (h / 2.0)).collect();
            let k2 = slope(&mid, tau + h / 2.0)?;
            let mid: Vec<Complex64> =
                x.iter().zip(&k2).map(|(xi, k)| xi + k * (h / 2.0)).collect();
            let k3 = slope(&mid, tau + h / 2.0)?;
            let endp: Vec<Complex64> = x.iter().zip(&k3).map(|(xi, k)| xi + k * h).collect();
            let k4 = slope(&endp, tau + h)?;
            let mut predicted = x.clone();
            for i in 0..predicted.len() {
                predicted[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (h / 6.0);
            }
            predicted
                .iter()
                .all(|z| z.re.is_finite() && z.im.is_finite())
                .then_some(predicted)
        })();

        let next_tau = tau - dt;
        let corrected = attempt.and_then(|mut predicted| {
            let p = params_at(next_tau);
            let (ok, _) = newton_correct(&nf, &mut predicted, &p, cfg);
            ok.then_some(predicted)
        });

        match corrected {
            Some(next) => {
                x = next;
                tau = next_tau;
                steps += 1;
                successes += 1;
                if successes >= 3 {
                    step = (step * 2.0).min(cfg.max_step);
                    successes = 0;
                }
            }
            None => {
                successes = 0;
                step /= 2.0;
                if step < cfg.min_step {
                    let p = params_at(tau);
                    let det = nf.jacobian_det(&x, &p).norm();
                    status = Some(if det < cfg.singular_det_threshold {
                        TrackStatus::SingularEncounter
                    } else {
                        TrackStatus::Diverged
                    });
                    break;
                }
            }
        }
    }

    let status = match status {
        Some(s) => s,
        None => {
            // Final polish on the target system itself.
            let (ok, singular) = newton_correct(&nf, &mut x, &target, cfg);
            let final_residual = nf.residual(&x, &target);
            if final_residual < cfg.end_tol {
                TrackStatus::Converged
            } else if singular
                || (!ok && nf.jacobian_det(&x, &target).norm() < cfg.singular_det_threshold)
            {
                TrackStatus::SingularEncounter
            } else {
                TrackStatus::Diverged
            }
        }
    };

    let final_residual = nf.residual(&x, &target);
    Ok(TrackResult {
        start: x0.clone(),
        end: ComplexPoint::new(x)?,
        status,
        steps,
        final_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VariableContext;
    use std::sync::Arc;
    use crate::groebner::buchberger;
    use crate::text::parse_polynomial;

    fn xctx() -> Arc<VariableContext> {
        Arc::new(VariableContext::new(vec!["x"], vec![]).unwrap())
    }

    fn quad_family() -> FamilySpec {
        let ctx = Arc::new(VariableContext::new(vec!["x"], vec!["a", "b", "c"]).unwrap());
        let f = parse_polynomial(&ctx, "a*x^2 + b*x + c").unwrap();
        FamilySpec::new(&ctx, vec![f]).unwrap()
    }

    fn point(family: &FamilySpec, values: &[i64]) -> ParameterPoint {
        ParameterPoint::from_values(family.context(), values.iter().map(|&v| v.into()).collect())
            .unwrap()
    }

    fn sorted_real(mut roots: Vec<Complex64>) -> Vec<Complex64> {
        roots.sort_by(|a, b| a.re.total_cmp(&b.re));
        roots
    }

    #[test]
    fn quadratic_roots_match_formula() {
        let ctx = xctx();
        let f = parse_polynomial(&ctx, "x^2 + 3*x + 2").unwrap();
        // Quadratic formula: (−3 ± √(9 − 8)) / 2.
        let expected = [(-3.0 - 1.0) / 2.0, (-3.0 + 1.0) / 2.0];
        let roots = sorted_real(univariate_roots(&f).unwrap());
        assert_eq!(roots.len(), 2);
        for (z, e) in roots.iter().zip(expected) {
            assert!((z - Complex64::new(e, 0.0)).norm() < 1e-9, "{z} vs {e}");
        }
    }

    #[test]
    fn double_root_counted_with_multiplicity() {
        let ctx = xctx();
        let f = parse_polynomial(&ctx, "x^2 - 2*x + 1").unwrap();
        let roots = univariate_roots(&f).unwrap();
        assert_eq!(roots.len(), 2);
        for z in roots {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-5, "{z}");
        }
    }

    #[test]
    fn monomial_root() {
        let ctx = xctx();
        let f = parse_polynomial(&ctx, "x").unwrap();
        let roots = univariate_roots(&f).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].norm() < 1e-12);
        assert!(univariate_roots(&parse_polynomial(&ctx, "7").unwrap()).is_err());
    }

    #[test]
    fn root_count_is_degree() {
        let ctx = xctx();
        for src in ["x^5 - 1", "x^3 + 2*x - 9", "x^4 + x^2 + 1", "3*x^2 + 1"] {
            let f = parse_polynomial(&ctx, src).unwrap();
            let degree = f.degree_in(0) as usize;
            assert_eq!(univariate_roots(&f).unwrap().len(), degree, "{src}");
        }
    }

    #[test]
    fn triangular_solve_examples() {
        let ctx2 = Arc::new(VariableContext::new(vec!["x1", "x2"], vec![]).unwrap());
        let basis = buchberger(&[
            parse_polynomial(&ctx2, "x2 - 3").unwrap(),
            parse_polynomial(&ctx2, "x1^2 - 3*x1 + 2").unwrap(),
        ])
        .unwrap();
        let mut points = solve_triangular(&basis).unwrap();
        points.sort_by(|a, b| a.coordinates()[0].re.total_cmp(&b.coordinates()[0].re));
        assert_eq!(points.len(), 2);
        for (point, x1) in points.iter().zip([1.0, 2.0]) {
            assert!((point.coordinates()[0] - Complex64::new(x1, 0.0)).norm() < 1e-9);
            assert!((point.coordinates()[1] - Complex64::new(3.0, 0.0)).norm() < 1e-9);
        }

        let basis = buchberger(&[parse_polynomial(&xctx(), "x^2 + 3*x + 2").unwrap()]).unwrap();
        assert_eq!(solve_triangular(&basis).unwrap().len(), 2);

        let basis = buchberger(&[
            parse_polynomial(&ctx2, "x1 - 5").unwrap(),
            parse_polynomial(&ctx2, "x2 - 7").unwrap(),
        ])
        .unwrap();
        let points = solve_triangular(&basis).unwrap();
        assert_eq!(points.len(), 1);
        assert!((points[0].coordinates()[0] - Complex64::new(5.0, 0.0)).norm() < 1e-12);
        assert!((points[0].coordinates()[1] - Complex64::new(7.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn non_triangular_shape_rejected() {
        let ctx2 = Arc::new(VariableContext::new(vec!["x1", "x2"], vec![]).unwrap());
        // V(x1·x2, x1² − x2²) is {0} but the basis is not triangular.
        let basis = buchberger(&[
            parse_polynomial(&ctx2, "x1*x2").unwrap(),
            parse_polynomial(&ctx2, "x1^2 - x2^2").unwrap(),
        ])
        .unwrap();
        assert!(matches!(solve_triangular(&basis), Err(Error::UnsupportedShape(_))));
    }

    #[test]
    fn numeric_counts_match_examples() {
        let family = quad_family();
        assert_eq!(verify_count_numerically(&family, &point(&family, &[1, 3, 2])).unwrap(), 2);
        assert_eq!(verify_count_numerically(&family, &point(&family, &[1, -2, 1])).unwrap(), 0);
    }

    #[test]
    fn track_between_regular_targets() {
        let family = quad_family();
        let q_start = point(&family, &[1, 3, 2]);
        let q_target = point(&family, &[1, -5, 6]);
        let cfg = TrackerConfig::default();
        // Target roots by factoring: x² − 5x + 6 = (x − 2)(x − 3).
        let mut ends = Vec::new();
        for start_root in [-1.0, -2.0] {
            let x0 = ComplexPoint::new(vec![Complex64::new(start_root, 0.0)]).unwrap();
            let result = track_path(&family, &q_target, &q_start, &x0, &cfg).unwrap();
            assert_eq!(result.status, TrackStatus::Converged);
            assert!(result.final_residual < cfg.end_tol);
            ends.push(result.end.coordinates()[0]);
        }
        let mut reals: Vec<f64> = ends.iter().map(|z| z.re).collect();
        reals.sort_by(f64::total_cmp);
        assert!((reals[0] - 2.0).abs() < 1e-6);
        assert!((reals[1] - 3.0).abs() < 1e-6);
        assert!((ends[0] - ends[1]).norm() > 1e-6);
    }

    #[test]
    fn constant_homotopy_is_one_step() {
        let family = quad_family();
        let q = point(&family, &[1, 3, 2]);
        let x0 = ComplexPoint::new(vec![Complex64::new(-1.0, 0.0)]).unwrap();
        let result = track_path(&family, &q, &q, &x0, &TrackerConfig::default()).unwrap();
        assert_eq!(result.status, TrackStatus::Converged);
        assert_eq!(result.steps, 1);
        assert!((result.end.coordinates()[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn track_into_singular_target() {
        let family = quad_family();
        let q_start = point(&family, &[1, 3, 2]);
        let q_target = point(&family, &[1, -2, 1]);
        let cfg = TrackerConfig::default();
        let nf = NumericFamily::new(&family).unwrap();
        let p = nf.parameter_values(&q_target);
        let x0 = ComplexPoint::new(vec![Complex64::new(-1.0, 0.0)]).unwrap();
        let result = track_path(&family, &q_target, &q_start, &x0, &cfg).unwrap();
        let det = nf.jacobian_det(result.end.coordinates(), &p).norm();
        assert!(
            result.status == TrackStatus::SingularEncounter || det < 1e-4,
            "status {:?}, |det J| = {det:.3e}",
            result.status
        );
    }

    #[test]
    fn start_point_must_be_a_zero() {
        let family = quad_family();
        let q = point(&family, &[1, 3, 2]);
        let x0 = ComplexPoint::new(vec![Complex64::new(10.0, 0.0)]).unwrap();
        assert!(track_path(&family, &q, &q, &x0, &TrackerConfig::default()).is_err());
    }
}
