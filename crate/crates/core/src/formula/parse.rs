//! Concrete text syntax (ASCII, whitespace-insensitive).
//!
//! ```text
//! formula := "~" formula | "(" formula ")" | formula ("&"|"|"|"->"|"<->") formula
//!          | ("ex1"|"all1") lowerid "." formula | ("ex2"|"all2") upperid "." formula
//!          | "U" upperid "." formula | "P" upperid "." formula
//!          | "W" "(" upperid ")" | "U2" "(" upperid "," upperid ")"
//!          | lowerid "in" upperid | lowerid "<" lowerid | lowerid "=" lowerid
//!          | "succ" "(" lowerid "," lowerid ")" | letter "(" lowerid ")"
//!          | upperid "=" upperid | macroid "(" upperid { "," upperid } ")"
//! ```
//!
//! Precedence: `~` > `&` > `|` > `->` > `<->`; quantifier scope extends
//! maximally to the right. `X = Y` between set variables is surface syntax
//! expanded at parse time to `all1 z. (z in X <-> z in Y)`.
//!
//! User identifiers start with a letter. A leading underscore is reserved
//! for variables introduced by the rewriters; the parser accepts it so
//! that printed rewrite outputs reparse.

use super::{macro_arity, order_of_name, Formula, VarOrder};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at {line}:{col}: {msg}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub msg: String,
}

const KEYWORDS: &[&str] = &["ex1", "all1", "ex2", "all2", "U", "P", "W", "U2", "succ", "in"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Dot,
    Comma,
    Less,
    Equals,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: u32,
    col: u32,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut toks = vec![];
    let mut line = 1u32;
    let mut col = 1u32;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let tok = match c {
            '~' => {
                bump(&mut chars);
                Tok::Not
            }
            '&' => {
                bump(&mut chars);
                Tok::And
            }
            '|' => {
                bump(&mut chars);
                Tok::Or
            }
            '(' => {
                bump(&mut chars);
                Tok::LParen
            }
            ')' => {
                bump(&mut chars);
                Tok::RParen
            }
            '.' => {
                bump(&mut chars);
                Tok::Dot
            }
            ',' => {
                bump(&mut chars);
                Tok::Comma
            }
            '#' => {
                bump(&mut chars);
                Tok::Ident("#".to_string())
            }
            '-' => {
                bump(&mut chars);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    Tok::Implies
                } else {
                    return Err(ParseError {
                        line: tline,
                        col: tcol,
                        msg: "expected '->'".to_string(),
                    });
                }
            }
            '<' => {
                bump(&mut chars);
                if chars.peek() == Some(&'-') {
                    bump(&mut chars);
                    if chars.peek() == Some(&'>') {
                        bump(&mut chars);
                        Tok::Iff
                    } else {
                        return Err(ParseError {
                            line: tline,
                            col: tcol,
                            msg: "expected '<->'".to_string(),
                        });
                    }
                } else {
                    Tok::Less
                }
            }
            '=' => {
                bump(&mut chars);
                Tok::Equals
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                if c == '_' {
                    s.push(bump(&mut chars));
                    match chars.peek() {
                        Some(c2) if c2.is_ascii_alphabetic() => {}
                        _ => {
                            return Err(ParseError {
                                line: tline,
                                col: tcol,
                                msg: "identifier must contain a letter".to_string(),
                            })
                        }
                    }
                }
                while let Some(&c2) = chars.peek() {
                    if c2.is_ascii_alphanumeric() || c2 == '_' {
                        s.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                Tok::Ident(s)
            }
            other => {
                return Err(ParseError {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        toks.push(Token { tok, line: tline, col: tcol });
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    alphabet: &'a [char],
    fresh: u32,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, off: usize) -> Option<&Tok> {
        self.toks.get(self.pos + off).map(|t| &t.tok)
    }

    fn here(&self) -> (u32, u32) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .or_else(|| self.toks.last().map(|t| (t.line, t.col + 1)))
            .unwrap_or((1, 1))
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let (line, col) = self.here();
        Err(ParseError { line, col, msg: msg.into() })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn var(&mut self, order: VarOrder, what: &str) -> Result<String, ParseError> {
        let save = self.pos;
        let name = self.ident(what)?;
        if KEYWORDS.contains(&name.as_str()) || macro_arity(&name).is_some() {
            self.pos = save;
            return self.err(format!("'{name}' is reserved and cannot name a variable"));
        }
        if order_of_name(&name) != order {
            self.pos = save;
            let want = match order {
                VarOrder::First => "a first-order (lowercase) variable",
                VarOrder::Second => "a second-order (uppercase) variable",
            };
            return self.err(format!("'{name}' is not {want}"));
        }
        Ok(name)
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.implies()?;
        if self.peek() == Some(&Tok::Iff) {
            self.pos += 1;
            let rhs = self.iff()?;
            Ok(Formula::iff(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Implies) {
            self.pos += 1;
            let rhs = self.implies()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Ident(name)) => {
                // Quantifiers bind maximally to the right, so their body is
                // a full formula.
                let quant: Option<fn(String, Box<Formula>) -> Formula> = match name.as_str() {
                    "ex1" => Some(Formula::Exists1),
                    "all1" => Some(Formula::Forall1),
                    "ex2" => Some(Formula::Exists2),
                    "all2" => Some(Formula::Forall2),
                    "U" if matches!(self.peek_at(1), Some(Tok::Ident(_))) => Some(Formula::QuantU),
                    "P" if matches!(self.peek_at(1), Some(Tok::Ident(_))) => Some(Formula::QuantP),
                    _ => None,
                };
                if let Some(build) = quant {
                    let second = !matches!(name.as_str(), "ex1" | "all1");
                    self.pos += 1;
                    let order = if second { VarOrder::Second } else { VarOrder::First };
                    let v = self.var(order, "a bound variable")?;
                    self.expect(Tok::Dot, "'.' after the bound variable")?;
                    let body = self.formula()?;
                    Ok(build(v, Box::new(body)))
                } else {
                    self.primary()
                }
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Some(Tok::Ident(name)) => self.atom(name),
            _ => self.err("expected a formula"),
        }
    }

    fn atom(&mut self, name: String) -> Result<Formula, ParseError> {
        match name.as_str() {
            "W" => {
                self.pos += 1;
                self.expect(Tok::LParen, "'(' after W")?;
                let x = self.var(VarOrder::Second, "a second-order argument to W")?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Formula::W(x));
            }
            "U2" => {
                self.pos += 1;
                self.expect(Tok::LParen, "'(' after U2")?;
                let r = self.var(VarOrder::Second, "a second-order argument to U2")?;
                self.expect(Tok::Comma, "','")?;
                let i = self.var(VarOrder::Second, "a second-order argument to U2")?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Formula::U2(r, i));
            }
            "succ" => {
                self.pos += 1;
                self.expect(Tok::LParen, "'(' after succ")?;
                let x = self.var(VarOrder::First, "a first-order argument to succ")?;
                self.expect(Tok::Comma, "','")?;
                let y = self.var(VarOrder::First, "a first-order argument to succ")?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Formula::Succ(x, y));
            }
            _ => {}
        }
        if let Some(arity) = macro_arity(&name) {
            self.pos += 1;
            self.expect(Tok::LParen, &format!("'(' after {name}"))?;
            let mut args = vec![];
            loop {
                args.push(self.var(VarOrder::Second, "a second-order macro argument")?);
                match self.peek() {
                    Some(Tok::Comma) => {
                        self.pos += 1;
                    }
                    _ => break,
                }
            }
            self.expect(Tok::RParen, "')'")?;
            if args.len() != arity {
                return self.err(format!("{name} takes {arity} arguments, got {}", args.len()));
            }
            return Ok(Formula::Macro(name, args));
        }
        match order_of_name(&name) {
            VarOrder::First => {
                let x = self.var(VarOrder::First, "a variable")?;
                match self.next() {
                    Some(Tok::Ident(kw)) if kw == "in" => {
                        let set = self.var(VarOrder::Second, "a set variable after 'in'")?;
                        Ok(Formula::Membership(x, set))
                    }
                    Some(Tok::Less) => {
                        let y = self.var(VarOrder::First, "a first-order variable after '<'")?;
                        Ok(Formula::Less(x, y))
                    }
                    Some(Tok::Equals) => {
                        let y = self.var(VarOrder::First, "a first-order variable after '='")?;
                        Ok(Formula::Equal(x, y))
                    }
                    Some(Tok::LParen) => {
                        // letter atom: the name must be a single declared letter
                        let mut cs = x.chars();
                        let letter = cs.next().unwrap();
                        if cs.next().is_some() || !self.alphabet.contains(&letter) {
                            self.pos -= 2;
                            return self.err(format!("unknown letter '{x}'"));
                        }
                        let arg = self.var(VarOrder::First, "a first-order argument")?;
                        self.expect(Tok::RParen, "')'")?;
                        Ok(Formula::Letter(letter, arg))
                    }
                    _ => {
                        self.pos -= 1;
                        self.err("expected 'in', '<', '=' or '(' after a first-order variable")
                    }
                }
            }
            VarOrder::Second => {
                let lhs = self.var(VarOrder::Second, "a variable")?;
                match self.next() {
                    Some(Tok::Equals) => {
                        let rhs = self.var(VarOrder::Second, "a set variable after '='")?;
                        // Set equality is surface syntax; expand to an
                        // extensionality formula with a fresh bound variable.
                        let z = format!("_eq{}", self.fresh);
                        self.fresh += 1;
                        Ok(Formula::all1(
                            z.clone(),
                            Formula::iff(
                                Formula::member(z.clone(), lhs),
                                Formula::member(z, rhs),
                            ),
                        ))
                    }
                    _ => {
                        self.pos -= 1;
                        self.err("expected '=' after a set variable (or an unregistered macro name)")
                    }
                }
            }
        }
    }
}

/// Parse a formula from concrete syntax over the given alphabet of letters.
pub fn parse_formula(text: &str, alphabet: &[char]) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, alphabet, fresh: 0 };
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return p.err("trailing input after formula");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Dialect;

    fn parse(s: &str) -> Formula {
        parse_formula(s, &['a', 'b', 'c']).unwrap()
    }

    #[test]
    fn direct_productions() {
        assert_eq!(
            parse("ex2 X. W(X)"),
            Formula::ex2("X", Formula::W("X".into()))
        );
        assert_eq!(
            parse("U2(R, I)"),
            Formula::U2("R".into(), "I".into())
        );
        assert_eq!(parse("succ(x,y)"), Formula::Succ("x".into(), "y".into()));
        assert_eq!(parse("a(x)"), Formula::Letter('a', "x".into()));
    }

    #[test]
    fn order_errors() {
        let e = parse_formula("W(x)", &[]).unwrap_err();
        assert!(e.msg.contains("second-order"), "{e}");
        let e = parse_formula("x in y", &[]).unwrap_err();
        assert!(e.msg.contains("second-order"), "{e}");
    }

    #[test]
    fn unknown_letter() {
        let e = parse_formula("d(x)", &['a', 'b']).unwrap_err();
        assert!(e.msg.contains("unknown letter"), "{e}");
    }

    #[test]
    fn precedence_and_scope() {
        // ~ binds tighter than &, & tighter than |, quantifier scope is maximal.
        let f = parse("~a(x) & b(x) | c(x)");
        assert_eq!(
            f,
            Formula::or(
                Formula::and(Formula::not(Formula::Letter('a', "x".into())), Formula::Letter('b', "x".into())),
                Formula::Letter('c', "x".into())
            )
        );
        let g = parse("ex1 x. a(x) & b(x)");
        assert_eq!(
            g,
            Formula::ex1("x", Formula::and(Formula::Letter('a', "x".into()), Formula::Letter('b', "x".into())))
        );
    }

    #[test]
    fn quantifier_u_vs_predicate_u2() {
        let f = parse("U X. (x in X)");
        assert!(matches!(f, Formula::QuantU(..)));
        assert_eq!(f.dialect(), Dialect::MsoU);
        let g = parse("W(X) & U2(R,I)");
        assert_eq!(g.dialect(), Dialect::Mixed);
    }

    #[test]
    fn set_equality_expands() {
        let f = parse("X = Y");
        match &f {
            Formula::Forall1(z, body) => match body.as_ref() {
                Formula::Iff(l, r) => {
                    assert_eq!(**l, Formula::member(z.clone(), "X"));
                    assert_eq!(**r, Formula::member(z.clone(), "Y"));
                }
                other => panic!("unexpected body {other:?}"),
            },
            other => panic!("unexpected expansion {other:?}"),
        }
        assert_eq!(f.dialect(), Dialect::Mso);
    }

    #[test]
    fn periodic_set_example_sentence() {
        let f = parse("ex2 X. (all1 x. (x in X <-> a(x))) & ~(P Y. ~(X = Y))");
        assert_eq!(f.dialect(), Dialect::MsoP);
        assert!(f.is_sentence());
    }

    #[test]
    fn error_has_location() {
        let e = parse_formula("W(X) &", &[]).unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.col >= 7, "{e:?}");
    }
}
