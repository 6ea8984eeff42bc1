//! Expressions over named objects and morphisms.
//!
//! Binary operators, loosest first: `∨` (or `|`) and `+`, then `∧` (or `&`),
//! then `⊗` (or `@`), then `∘` (or `.`). Postfix `†` (or `^`) is the dagger.
//! Calls: `compose`, `dagger`, `join`, `meet`, `tensor`, `sum`, `name`,
//! `coname`, `star`, `trace`, and on objects `id`, `top`, `bottom`, `eta`,
//! `epsilon`.

use std::collections::HashMap;

use qlab::biproduct::superposition_sum;
use qlab::compact::{coname, name, star, trace};
use qlab::{Biproducts, CompactQuantaloid, Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Name(String),
    Call(String, Vec<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
    Dagger(Box<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Compose,
    Tensor,
    Meet,
    Join,
    Sum,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Op(Op),
    Dagger,
    Open,
    Close,
    Comma,
}

fn parse_error(col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column: col,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        let tok = match c {
            ' ' | '\t' | '\n' => {
                k += 1;
                continue;
            }
            '∘' | '.' => Tok::Op(Op::Compose),
            '⊗' | '@' => Tok::Op(Op::Tensor),
            '∧' | '&' => Tok::Op(Op::Meet),
            '∨' | '|' => Tok::Op(Op::Join),
            '+' => Tok::Op(Op::Sum),
            '†' | '^' => Tok::Dagger,
            '(' => Tok::Open,
            ')' => Tok::Close,
            ',' => Tok::Comma,
            c if c.is_alphanumeric() || c == '_' => {
                let start = k;
                while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                out.push((Tok::Ident(chars[start..k].iter().collect()), col));
                continue;
            }
            other => return Err(parse_error(col, format!("unexpected character {other:?}"))),
        };
        out.push((tok, col));
        k += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end)
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_error(self.col(), format!("expected {want:?}")))
        }
    }

    fn level(&mut self, ops: &[&[Op]]) -> Result<Expr> {
        let Some((these, tighter)) = ops.split_first() else {
            return self.postfix();
        };
        let mut lhs = self.level(tighter)?;
        while let Some(Tok::Op(op)) = self.peek().cloned() {
            if !these.contains(&op) {
                break;
            }
            self.pos += 1;
            let rhs = self.level(tighter)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while self.peek() == Some(&Tok::Dagger) {
            self.pos += 1;
            e = Expr::Dagger(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::Close)?;
                Ok(e)
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                if self.peek() != Some(&Tok::Open) {
                    return Ok(Expr::Name(id));
                }
                self.pos += 1;
                let mut args = Vec::new();
                if self.peek() != Some(&Tok::Close) {
                    args.push(self.expr()?);
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        args.push(self.expr()?);
                    }
                }
                self.expect(Tok::Close)?;
                Ok(Expr::Call(id, args))
            }
            _ => Err(parse_error(self.col(), "expected a name, a call or '('")),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        self.level(&[&[Op::Join, Op::Sum], &[Op::Meet], &[Op::Tensor], &[Op::Compose]])
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        end: src.chars().count() + 1,
        toks,
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_error(p.col(), "trailing input"));
    }
    Ok(e)
}

/// Named values of one instance.
pub struct Env<C: CompactQuantaloid> {
    pub objects: HashMap<String, C::Obj>,
    pub morphisms: HashMap<String, C::Mor>,
}

enum Val<C: CompactQuantaloid> {
    Obj(C::Obj),
    Mor(C::Mor),
}

fn arity(f: &str, args: &[Expr], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::Precondition(format!("{f} takes {n} argument(s), got {}", args.len())));
    }
    Ok(())
}

pub fn eval<C: CompactQuantaloid + Biproducts>(c: &C, env: &Env<C>, e: &Expr) -> Result<C::Mor> {
    match value(c, env, e)? {
        Val::Mor(m) => Ok(m),
        Val::Obj(_) => Err(Error::Precondition("expression denotes an object, not a morphism".into())),
    }
}

fn object<C: CompactQuantaloid + Biproducts>(c: &C, env: &Env<C>, e: &Expr) -> Result<C::Obj> {
    match value(c, env, e)? {
        Val::Obj(o) => Ok(o),
        Val::Mor(_) => Err(Error::Precondition("expected an object".into())),
    }
}

fn value<C: CompactQuantaloid + Biproducts>(c: &C, env: &Env<C>, e: &Expr) -> Result<Val<C>> {
    let mor = |e: &Expr| eval(c, env, e);
    Ok(match e {
        Expr::Name(n) => match (env.morphisms.get(n), env.objects.get(n)) {
            (Some(m), _) => Val::Mor(m.clone()),
            (None, Some(o)) => Val::Obj(o.clone()),
            (None, None) => return Err(Error::Precondition(format!("unknown name {n:?}"))),
        },
        Expr::Dagger(a) => Val::Mor(c.dagger(&mor(a)?)),
        Expr::Bin(op, a, b) => {
            let (f, g) = (mor(a)?, mor(b)?);
            Val::Mor(match op {
                Op::Compose => c.compose(&f, &g)?,
                Op::Tensor => c.tensor(&f, &g),
                Op::Meet => c.meet(&f, &g)?,
                Op::Join => c.join(&f, &g)?,
                Op::Sum => superposition_sum(c, &c.source(&f), &c.target(&f), &[f.clone(), g])?,
            })
        }
        Expr::Call(f, args) => {
            let ms = || args.iter().map(mor).collect::<Result<Vec<_>>>();
            let one = || -> Result<C::Mor> {
                arity(f, args, 1)?;
                mor(&args[0])
            };
            let obj = |k: usize| object(c, env, &args[k]);
            Val::Mor(match f.as_str() {
                "compose" => {
                    let ms = ms()?;
                    c.chain(&ms.iter().collect::<Vec<_>>())?
                }
                "join" | "meet" | "sum" => {
                    let ms = ms()?;
                    let first = ms.first().ok_or_else(|| Error::Precondition(format!("{f} needs arguments")))?;
                    let (x, y) = (c.source(first), c.target(first));
                    match f.as_str() {
                        "join" => c.sup(&x, &y, &ms)?,
                        "sum" => superposition_sum(c, &x, &y, &ms)?,
                        _ => {
                            let mut acc = first.clone();
                            for m in &ms[1..] {
                                acc = c.meet(&acc, m)?;
                            }
                            acc
                        }
                    }
                }
                "tensor" => {
                    arity(f, args, 2)?;
                    c.tensor(&mor(&args[0])?, &mor(&args[1])?)
                }
                "dagger" => c.dagger(&one()?),
                "name" => name(c, &one()?)?,
                "coname" => coname(c, &one()?)?,
                "star" => star(c, &one()?)?,
                "trace" => trace(c, &one()?)?,
                "id" => {
                    arity(f, args, 1)?;
                    c.identity(&obj(0)?)
                }
                "eta" => {
                    arity(f, args, 1)?;
                    c.eta(&obj(0)?)
                }
                "epsilon" => {
                    arity(f, args, 1)?;
                    c.epsilon(&obj(0)?)
                }
                "top" | "bottom" => {
                    arity(f, args, 2)?;
                    let (x, y) = (obj(0)?, obj(1)?);
                    if f == "top" {
                        c.top(&x, &y)
                    } else {
                        c.bottom(&x, &y)
                    }
                }
                other => return Err(Error::Precondition(format!("unknown operation {other:?}"))),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(s: &str) -> Box<Expr> {
        Box::new(Expr::Name(s.into()))
    }

    #[test]
    fn precedence() {
        let e = parse("A ∨ B∘C†").unwrap();
        let bc = Expr::Bin(Op::Compose, name("B"), Box::new(Expr::Dagger(name("C"))));
        assert_eq!(e, Expr::Bin(Op::Join, name("A"), Box::new(bc)));
        assert_eq!(parse("A | B . C^").unwrap(), e);
    }

    #[test]
    fn calls() {
        let e = parse("trace(compose(S, R))").unwrap();
        assert_eq!(
            e,
            Expr::Call("trace".into(), vec![Expr::Call("compose".into(), vec![Expr::Name("S".into()), Expr::Name("R".into())])])
        );
    }

    #[test]
    fn errors_carry_columns() {
        match parse("A ∘ ∘").unwrap_err() {
            Error::Parse { column, .. } => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse("A B").is_err());
    }
}
