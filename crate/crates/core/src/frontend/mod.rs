//! Surface syntax for signatures and codes, and the command-line driver.
//!
//! A signature file holds one form:
//!
//! ```text
//! ; comments run to end of line
//! (signature
//!   (nullary bool 2)
//!   (nullary tri 3)
//!   (formers unit empty sum sigma pi id po0)
//!   (flags nbad))          ; optional
//! ```
//!
//! Codes are written as `(n bool)`, `(unit)`, `(empty)`, `(sum a b)`,
//! `(sigma a (b0 b1 ..))`, `(pi a (b0 b1 ..))`, `(id a x y)` and
//! `(po0 a b c (f0 ..) (g0 ..))`, with `(nbad)` available when the flag is set.
//! [`Code`]'s `Display` prints exactly this syntax.

pub mod cli;
pub mod sexpr;

use std::fmt::Write as _;

use self::sexpr::{read_one, Sexp};
use crate::error::Result;
use crate::fincore::FinSet;
use crate::universe::{Code, Former, NullarySignature, VSignature};

pub fn parse_signature(text: &str) -> Result<VSignature> {
    let form = read_one(text)?;
    let items = form.expect_list("`(signature ...)`")?;
    if form.head() != Some("signature") {
        return Err(form.pos().error("expected `(signature ...)`"));
    }
    let mut nullary = Vec::new();
    let mut formers = Vec::new();
    let mut nbad = false;
    for clause in &items[1..] {
        let parts = clause.expect_list("a signature clause")?;
        match clause.head() {
            Some("nullary") => {
                if parts.len() != 3 {
                    return Err(clause.pos().error("expected `(nullary NAME SIZE)`"));
                }
                let name = parts[1].expect_atom("a name")?;
                if name.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(parts[1].pos().error(format!("`{name}` is not a name")));
                }
                nullary.push((name.to_string(), FinSet(parts[2].expect_nat()?)));
            }
            Some("formers") => {
                for f in &parts[1..] {
                    formers.push(Former::parse(f.expect_atom("a former name")?)?);
                }
            }
            Some("flags") => {
                for f in &parts[1..] {
                    match f.expect_atom("a flag")? {
                        "nbad" => nbad = true,
                        other => return Err(f.pos().error(format!("unknown flag `{other}`"))),
                    }
                }
            }
            _ => {
                return Err(clause
                    .pos()
                    .error("expected `(nullary ..)`, `(formers ..)` or `(flags ..)`"))
            }
        }
    }
    Ok(VSignature::new(NullarySignature::new(nullary)?, formers).with_nbad(nbad))
}

/// The canonical text of a signature; [`parse_signature`] reads it back.
pub fn print_signature(sig: &VSignature) -> String {
    let mut out = String::from("(signature");
    for (name, size) in sig.nullary().entries() {
        write!(out, "\n  (nullary {name} {})", size.size()).expect("string write");
    }
    out.push_str("\n  (formers");
    for f in sig.formers() {
        write!(out, " {f}").expect("string write");
    }
    out.push(')');
    if sig.nbad() {
        out.push_str("\n  (flags nbad)");
    }
    out.push_str(")\n");
    out
}

fn nats(s: &Sexp) -> Result<Vec<usize>> {
    s.expect_list("a list of naturals")?.iter().map(Sexp::expect_nat).collect()
}

fn code_of(sig: &VSignature, s: &Sexp) -> Result<Code> {
    let items = s.expect_list("a code")?;
    let head = s.head().ok_or_else(|| s.pos().error("expected a former name"))?;
    let args = &items[1..];
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(s.pos().error(format!("`{head}` takes {n} argument(s), found {}", args.len())))
        }
    };
    let sub = |k: usize| code_of(sig, &args[k]).map(Box::new);
    let family = |k: usize| -> Result<Vec<Code>> {
        args[k]
            .expect_list("a family `(code ...)`")?
            .iter()
            .map(|c| code_of(sig, c))
            .collect()
    };
    Ok(match head {
        "n" => {
            arity(1)?;
            let name = args[0].expect_atom("a name")?;
            if sig.nullary().lookup(name).is_none() {
                return Err(args[0].pos().error(format!("unknown name `{name}`")));
            }
            Code::N(name.to_string())
        }
        "unit" => arity(0).map(|_| Code::Unit)?,
        "empty" => arity(0).map(|_| Code::Empty)?,
        "nbad" => arity(0).map(|_| Code::Bad)?,
        "sum" => {
            arity(2)?;
            Code::Sum(sub(0)?, sub(1)?)
        }
        "sigma" => {
            arity(2)?;
            Code::Sigma(sub(0)?, family(1)?)
        }
        "pi" => {
            arity(2)?;
            Code::Pi(sub(0)?, family(1)?)
        }
        "id" => {
            arity(3)?;
            Code::Id(sub(0)?, args[1].expect_nat()?, args[2].expect_nat()?)
        }
        "po0" => {
            arity(5)?;
            Code::Po0(sub(0)?, sub(1)?, sub(2)?, nats(&args[3])?, nats(&args[4])?)
        }
        other => return Err(items[0].pos().error(format!("unknown code former `{other}`"))),
    })
}

/// Reads a code and checks it against `sig`: names, enabled formers,
/// family lengths and element ranges.
pub fn parse_expr(text: &str, sig: &VSignature) -> Result<Code> {
    let code = code_of(sig, &read_one(text)?)?;
    sig.to_tree(&code)?;
    Ok(code)
}

pub fn print_expr(c: &Code) -> String {
    c.to_string()
}
