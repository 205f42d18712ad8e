use crate::syntax::{Cursor, ParseError, Pos};

use super::{Equation, Presentation, Signature, Term};

enum Raw {
    Var(usize),
    App(String, Vec<Raw>, Pos),
}

/// Parses `theory NAME { op f:2; eq lhs = rhs; ... }`.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut cur = Cursor::new(text)?;
    let name = cur.header("theory")?;
    let mut sig = Signature::new(name);
    let mut raw_eqs = Vec::new();
    while !cur.eat_punct("}") {
        if cur.is_keyword("op") {
            cur.expect_keyword("op")?;
            let (sym, pos) = cur.ident()?;
            cur.expect_punct(":")?;
            let arity = cur.usize()?;
            cur.expect_punct(";")?;
            sig.add_op(&sym, arity).map_err(|e| ParseError::new(pos, e.to_string()))?;
        } else if cur.is_keyword("eq") {
            cur.expect_keyword("eq")?;
            let lhs = parse_raw(&mut cur)?;
            cur.expect_punct("=")?;
            let rhs = parse_raw(&mut cur)?;
            cur.expect_punct(";")?;
            raw_eqs.push((lhs, rhs));
        } else {
            return Err(cur.error("expected `op`, `eq` or `}`"));
        }
    }
    cur.finish()?;
    let mut equations = Vec::new();
    for (lhs, rhs) in raw_eqs {
        let lhs = resolve(&lhs, &sig)?;
        let rhs = resolve(&rhs, &sig)?;
        equations.push(Equation::inferred(lhs, rhs).expect("variables are positive"));
    }
    Ok(Presentation { signature: sig, equations })
}

/// Parses a single term over `sig`.
pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, ParseError> {
    let mut cur = Cursor::new(text)?;
    let raw = parse_raw(&mut cur)?;
    cur.finish()?;
    resolve(&raw, sig)
}

fn var_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn parse_raw(cur: &mut Cursor) -> Result<Raw, ParseError> {
    let (name, pos) = cur.ident()?;
    if !cur.is_punct("(") {
        return match var_index(&name) {
            Some(0) => Err(ParseError::new(pos, "variable indices are 1-based")),
            Some(i) => Ok(Raw::Var(i)),
            None => Err(ParseError::new(pos, format!("`{name}` is not a variable; write `{name}()` for a constant"))),
        };
    }
    cur.expect_punct("(")?;
    let mut args = Vec::new();
    if !cur.eat_punct(")") {
        loop {
            args.push(parse_raw(cur)?);
            if cur.eat_punct(")") {
                break;
            }
            cur.expect_punct(",")?;
        }
    }
    Ok(Raw::App(name, args, pos))
}

fn resolve(raw: &Raw, sig: &Signature) -> Result<Term, ParseError> {
    match raw {
        Raw::Var(i) => Ok(Term::Var(*i)),
        Raw::App(sym, args, pos) => {
            let arity = sig.arity(sym).ok_or_else(|| ParseError::new(*pos, format!("undeclared symbol `{sym}`")))?;
            if arity != args.len() {
                return Err(ParseError::new(
                    *pos,
                    format!("arity mismatch: `{sym}` has arity {arity} but was applied to {} arguments", args.len()),
                ));
            }
            let args = args.iter().map(|a| resolve(a, sig)).collect::<Result<_, _>>()?;
            Ok(Term::App(sym.clone(), args))
        }
    }
}

/// Canonical text form: one item per line, operations before equations,
/// each group sorted lexicographically.
pub fn render_presentation(p: &Presentation) -> String {
    let mut ops: Vec<String> = p.signature.ops().map(|(s, a)| format!("  op {s}:{a};")).collect();
    ops.sort();
    let mut eqs: Vec<String> = p.equations.iter().map(|e| format!("  eq {e};")).collect();
    eqs.sort();
    let mut out = format!("theory {} {{\n", p.signature.name);
    for line in ops.into_iter().chain(eqs) {
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MONOID: &str = "theory m { op mul:2; op e:0;
        eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);
        eq mul(e(),x1) = x1;
        eq mul(x1,e()) = x1; }";

    #[test]
    fn parses_monoid() {
        let p = parse_presentation(MONOID).unwrap();
        assert_eq!(p.signature.len(), 2);
        assert_eq!(p.equations.len(), 3);
        assert_eq!(p.equations[0].var_count, 3);
        assert_eq!(p.equations[1].lhs, Term::app("mul", vec![Term::constant("e"), Term::Var(1)]));
    }

    #[test]
    fn parses_semilattice() {
        let p = parse_presentation(
            "theory sl { op join:2; eq join(x1,x1)=x1; eq join(x1,x2)=join(x2,x1); \
             eq join(join(x1,x2),x3)=join(x1,join(x2,x3)); }",
        )
        .unwrap();
        assert_eq!(p.name(), "sl");
        assert_eq!(p.equations.len(), 3);
    }

    #[test]
    fn undeclared_symbol() {
        let err = parse_presentation("theory bad { eq f(x1)=x1; }").unwrap_err();
        assert!(err.message.contains("undeclared symbol `f`"), "{err}");
        assert_eq!((err.line, err.column), (1, 17));
    }

    #[test]
    fn arity_mismatch() {
        let err = parse_presentation("theory bad { op f:2; eq f(x1)=x1; }").unwrap_err();
        assert!(err.message.contains("arity mismatch"), "{err}");
    }

    #[test]
    fn syntax_error_position() {
        let err = parse_presentation("theory t {\n op f 2; }").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.column, 7);
    }

    #[test]
    fn render_is_canonical_and_reparses() {
        let p = parse_presentation(MONOID).unwrap();
        let text = render_presentation(&p);
        assert_eq!(
            text,
            "theory m {\n  op e:0;\n  op mul:2;\n  eq mul(e(),x1) = x1;\n  eq mul(x1,e()) = x1;\n  eq mul(x1,mul(x2,x3)) = mul(mul(x1,x2),x3);\n}\n"
        );
        let q = parse_presentation(&text).unwrap();
        assert_eq!(render_presentation(&q), text);
    }
}
