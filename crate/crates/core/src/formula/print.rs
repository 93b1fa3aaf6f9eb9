//! Canonical printing.
//!
//! Binary connectives are always parenthesized and quantified operands get
//! an extra pair of parentheses, so the printed form reparses to a
//! structurally identical AST and is stable enough for golden files.

use super::Formula;

pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out);
    out
}

fn is_quantifier(f: &Formula) -> bool {
    matches!(
        f,
        Formula::Exists1(..)
            | Formula::Forall1(..)
            | Formula::Exists2(..)
            | Formula::Forall2(..)
            | Formula::QuantU(..)
            | Formula::QuantP(..)
    )
}

/// Operand of a binary connective or of `~`: quantifiers would otherwise
/// swallow the rest of the line, so they are wrapped.
fn write_operand(f: &Formula, out: &mut String) {
    if is_quantifier(f) {
        out.push('(');
        write(f, out);
        out.push(')');
    } else {
        write(f, out);
    }
}

fn write_binary(a: &Formula, op: &str, b: &Formula, out: &mut String) {
    out.push('(');
    write_operand(a, out);
    out.push(' ');
    out.push_str(op);
    out.push(' ');
    write_operand(b, out);
    out.push(')');
}

fn write_quant(kw: &str, v: &str, body: &Formula, out: &mut String) {
    out.push_str(kw);
    out.push(' ');
    out.push_str(v);
    out.push_str(". ");
    write(body, out);
}

fn write(f: &Formula, out: &mut String) {
    match f {
        Formula::Membership(x, set) => {
            out.push_str(x);
            out.push_str(" in ");
            out.push_str(set);
        }
        Formula::Less(x, y) => {
            out.push_str(x);
            out.push_str(" < ");
            out.push_str(y);
        }
        Formula::Equal(x, y) => {
            out.push_str(x);
            out.push_str(" = ");
            out.push_str(y);
        }
        Formula::Succ(x, y) => {
            out.push_str("succ(");
            out.push_str(x);
            out.push(',');
            out.push_str(y);
            out.push(')');
        }
        Formula::Letter(a, x) => {
            out.push(*a);
            out.push('(');
            out.push_str(x);
            out.push(')');
        }
        Formula::W(x) => {
            out.push_str("W(");
            out.push_str(x);
            out.push(')');
        }
        Formula::U2(r, i) => {
            out.push_str("U2(");
            out.push_str(r);
            out.push(',');
            out.push_str(i);
            out.push(')');
        }
        Formula::Macro(name, args) => {
            out.push_str(name);
            out.push('(');
            for (k, a) in args.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                out.push_str(a);
            }
            out.push(')');
        }
        Formula::Not(a) => {
            out.push('~');
            write_operand(a, out);
        }
        Formula::And(a, b) => write_binary(a, "&", b, out),
        Formula::Or(a, b) => write_binary(a, "|", b, out),
        Formula::Implies(a, b) => write_binary(a, "->", b, out),
        Formula::Iff(a, b) => write_binary(a, "<->", b, out),
        Formula::Exists1(v, body) => write_quant("ex1", v, body, out),
        Formula::Forall1(v, body) => write_quant("all1", v, body, out),
        Formula::Exists2(v, body) => write_quant("ex2", v, body, out),
        Formula::Forall2(v, body) => write_quant("all2", v, body, out),
        Formula::QuantU(v, body) => write_quant("U", v, body, out),
        Formula::QuantP(v, body) => write_quant("P", v, body, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    #[test]
    fn prints_spec_shapes() {
        let w = Formula::W("X".into());
        assert_eq!(print_formula(&w), "W(X)");
        let f = Formula::and(Formula::W("X".into()), Formula::not(Formula::W("Y".into())));
        assert_eq!(print_formula(&f), "(W(X) & ~W(Y))");
    }

    #[test]
    fn roundtrips() {
        let cases = [
            "ex2 X. W(X)",
            "((ex1 x. a(x)) & b(y))",
            "~(ex1 x. a(x) & ~b(x))",
            "U X. all1 x. (x in X -> a(x))",
            "P Y. (ex1 y. y in Y) -> W(Y)",
            "all1 x. all1 y. succ(x,y) -> (x < y & ~(x = y))",
            "UltConstDim(R,I) & U2(R,I)",
        ];
        for case in cases {
            let f = parse_formula(case, &['a', 'b', 'c']).unwrap();
            let printed = print_formula(&f);
            let g = parse_formula(&printed, &['a', 'b', 'c']).unwrap();
            assert_eq!(f, g, "roundtrip failed for {case}: printed {printed}");
        }
    }
}
