//! The `.fam` family file format.
//!
//! ```text
//! # comment
//! vars: x1, x2
//! params: a
//! let gamma = x1^2 + x2^2 - 1
//! f1 = (x1 - a) * (x1 - 1) * gamma
//! f2 = (x2 - 3) * (x2 - 4)^2 * gamma
//! ```
//!
//! One statement per line; the equation count must match the number of
//! variables (square system).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use parcont::text::parse_polynomial_with;
use parcont::{FamilySpec, Polynomial, Rational, VariableContext};

#[derive(Debug, Clone)]
pub struct FamilyFileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for FamilyFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for FamilyFileError {}

/// A parsed family file: the spec plus the equation names for display.
#[derive(Debug, Clone)]
pub struct FamilyFile {
    pub spec: FamilySpec,
    pub equation_names: Vec<String>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> FamilyFileError {
    FamilyFileError { line, column, message: message.into() }
}

fn parse_id_list(line_no: usize, rest: &str, offset: usize) -> Result<Vec<String>, FamilyFileError> {
    let mut out = Vec::new();
    if rest.trim().is_empty() {
        return Ok(out);
    }
    let mut col = offset;
    for piece in rest.split(',') {
        let name = piece.trim();
        if name.is_empty() || !name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(err(line_no, col + 1, format!("invalid identifier `{name}`")));
        }
        out.push(name.to_string());
        col += piece.len() + 1;
    }
    Ok(out)
}

/// Strip a `#` comment and trailing whitespace.
fn logical_line(raw: &str) -> &str {
    let body = raw.split('#').next().unwrap_or("");
    body.trim_end()
}

pub fn parse_family(text: &str) -> Result<FamilyFile, FamilyFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, logical_line(raw)))
        .filter(|(_, l)| !l.trim().is_empty());

    let (vars_line_no, vars_line) = lines
        .next()
        .ok_or_else(|| err(1, 1, "missing `vars:` declaration"))?;
    let vars = match vars_line.trim_start().strip_prefix("vars:") {
        Some(rest) => parse_id_list(vars_line_no, rest, vars_line.find("vars:").unwrap_or(0) + 5)?,
        None => return Err(err(vars_line_no, 1, "expected `vars:` declaration")),
    };
    if vars.is_empty() {
        return Err(err(vars_line_no, 1, "at least one variable is required"));
    }

    let (params_line_no, params_line) = lines
        .next()
        .ok_or_else(|| err(vars_line_no, 1, "missing `params:` declaration"))?;
    let params = match params_line.trim_start().strip_prefix("params:") {
        Some(rest) => parse_id_list(params_line_no, rest, params_line.find("params:").unwrap_or(0) + 7)?,
        None => return Err(err(params_line_no, 1, "expected `params:` declaration")),
    };

    let ctx = Arc::new(
        VariableContext::new(vars.clone(), params)
            .map_err(|e| err(vars_line_no, 1, e.to_string()))?,
    );

    let mut bindings: HashMap<String, Polynomial> = HashMap::new();
    let mut equations: Vec<(String, Polynomial)> = Vec::new();
    let mut seen_equation = false;

    for (line_no, line) in lines {
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("let ") {
            if seen_equation {
                return Err(err(line_no, indent + 1, "`let` bindings must precede equations"));
            }
            let (name, expr) = rest
                .split_once('=')
                .ok_or_else(|| err(line_no, indent + 1, "expected `let name = expression`"))?;
            let name = name.trim().to_string();
            if name.is_empty() {
                return Err(err(line_no, indent + 1, "missing binding name"));
            }
            if ctx.slot_of(&name).is_some() || bindings.contains_key(&name) {
                return Err(err(line_no, indent + 1, format!("identifier `{name}` already declared")));
            }
            let col_base = line.find('=').unwrap_or(0) + 1;
            let poly = parse_polynomial_with(&ctx, &bindings, expr)
                .map_err(|e| err(line_no, col_base + e.column, e.message))?;
            bindings.insert(name, poly);
        } else {
            let (name, expr) = trimmed
                .split_once('=')
                .ok_or_else(|| err(line_no, indent + 1, "expected `name = expression`"))?;
            let name = name.trim().to_string();
            if name.is_empty() {
                return Err(err(line_no, indent + 1, "missing equation name"));
            }
            if ctx.slot_of(&name).is_some()
                || bindings.contains_key(&name)
                || equations.iter().any(|(n, _)| n == &name)
            {
                return Err(err(line_no, indent + 1, format!("identifier `{name}` already declared")));
            }
            let col_base = line.find('=').unwrap_or(0) + 1;
            let poly = parse_polynomial_with(&ctx, &bindings, expr)
                .map_err(|e| err(line_no, col_base + e.column, e.message))?;
            equations.push((name, poly));
            seen_equation = true;
        }
    }

    if equations.len() != vars.len() {
        return Err(err(
            0,
            0,
            format!("nonsquare system: {} equations for {} variables", equations.len(), vars.len()),
        ));
    }
    let equation_names: Vec<String> = equations.iter().map(|(n, _)| n.clone()).collect();
    let polys: Vec<Polynomial> = equations.into_iter().map(|(_, p)| p).collect();
    let spec = FamilySpec::new(&ctx, polys).map_err(|e| err(0, 0, e.to_string()))?;
    Ok(FamilyFile { spec, equation_names })
}

/// Canonical text form of a family; `parse_family(print_family(F))` gives
/// back `F`. Test-only for now.
#[allow(dead_code)]
pub fn print_family(file: &FamilyFile) -> String {
    let ctx = file.spec.context();
    let mut out = String::new();
    out.push_str("vars: ");
    out.push_str(&ctx.x_vars().join(", "));
    out.push('\n');
    out.push_str("params: ");
    out.push_str(&ctx.p_vars().join(", "));
    out.push('\n');
    for (name, poly) in file.equation_names.iter().zip(file.spec.polynomials()) {
        out.push_str(&format!("{name} = {poly}\n"));
    }
    out
}

/// Parse a `name=value,name=value` assignment list into a parameter point.
pub fn parse_point(
    spec: &FamilySpec,
    text: &str,
) -> Result<parcont::ParameterPoint, parcont::Error> {
    let mut pairs = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (name, value) = piece
            .split_once('=')
            .ok_or_else(|| parcont::Error::InvalidArgument(format!("expected `name=value`, got `{piece}`")))?;
        let value: Rational = value.trim().parse()?;
        pairs.push((name.trim().to_string(), value));
    }
    parcont::ParameterPoint::from_assignments(spec.context(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use parcont::text::parse_polynomial;

    const CURVES: &str = "\
# two plane curves with a shared circle factor
vars: x1, x2
params: a
let gamma = x1^2 + x2^2 - 1
f1 = (x1 - a) * (x1 - 1) * gamma
f2 = (x2 - 3) * (x2 - 4)^2 * gamma
";

    #[test]
    fn parses_curve_family() {
        let file = parse_family(CURVES).unwrap();
        let ctx = file.spec.context();
        assert_eq!(ctx.x_vars(), &["x1".to_string(), "x2".to_string()]);
        assert_eq!(ctx.p_vars(), &["a".to_string()]);
        let expected =
            parse_polynomial(ctx, "(x1 - a) * (x1 - 1) * (x1^2 + x2^2 - 1)").unwrap();
        assert_eq!(file.spec.polynomials()[0], expected);
        assert_eq!(file.equation_names, vec!["f1", "f2"]);
    }

    #[test]
    fn parses_quadratic_family() {
        let file = parse_family("vars: x\nparams: a,b,c\nf1 = a*x^2+b*x+c\n").unwrap();
        assert_eq!(file.spec.polynomials().len(), 1);
        assert_eq!(file.spec.context().p_vars().len(), 3);
    }

    #[test]
    fn syntax_error_at_end_of_input() {
        let e = parse_family("vars: x\nparams: a\nf1 = x +\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("end of input"), "{e}");
    }

    #[test]
    fn undeclared_identifier_rejected() {
        let e = parse_family("vars: x\nparams: a\nf1 = x + q\n").unwrap_err();
        assert!(e.message.contains("undeclared identifier"), "{e}");
        assert_eq!(e.line, 3);
    }

    #[test]
    fn nonsquare_rejected() {
        let e = parse_family("vars: x1, x2\nparams: a\nf1 = x1\n").unwrap_err();
        assert!(e.message.contains("nonsquare"), "{e}");
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(parse_family("vars: x\nparams: a\nlet x = 1\nf1 = x\n").is_err());
        assert!(parse_family("vars: x\nparams: a\nf1 = x\nf1 = x\n").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let file = parse_family(CURVES).unwrap();
        let printed = print_family(&file);
        let reparsed = parse_family(&printed).unwrap();
        assert_eq!(reparsed.spec, file.spec);
        assert_eq!(reparsed.equation_names, file.equation_names);
    }

    #[test]
    fn point_parsing() {
        let file = parse_family("vars: x\nparams: a,b,c\nf1 = a*x^2+b*x+c\n").unwrap();
        let q = parse_point(&file.spec, "a=1, b=-2, c=1/2").unwrap();
        assert_eq!(q.values()[2], Rational::new(1, 2).unwrap());
        assert!(parse_point(&file.spec, "a=1").is_err());
        assert!(parse_point(&file.spec, "a=1, b=2, zz=3").is_err());
    }
}
