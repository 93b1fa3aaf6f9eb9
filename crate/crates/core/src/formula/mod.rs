//! Extended-MSO abstract syntax and structural analyses.
//!
//! Formulas cover five dialects over a shared core: plain MSO, MSO+U
//! (the quantifier over arbitrarily large finite sets), MSO+W (the
//! unbounded-distance predicate), MSO+U2 (the two-set unboundedness
//! predicate) and MSO+P (the quantifier over ultimately periodic sets).

mod parse;
mod print;
mod vars;

pub use parse::{parse_formula, ParseError};
pub use vars::{alpha_eq, free_variables, rename_apart, FreshNames};

use std::fmt;

/// Order of a variable: first-order variables range over positions,
/// second-order variables over sets of positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarOrder {
    First,
    Second,
}

/// Order of a name per the concrete syntax: the first alphabetic character
/// decides (lowercase = position, uppercase = set). Names generated during
/// rewriting carry a leading `_` which is skipped.
pub fn order_of_name(name: &str) -> VarOrder {
    let c = name
        .chars()
        .find(|c| c.is_ascii_alphabetic())
        .unwrap_or('x');
    if c.is_ascii_uppercase() {
        VarOrder::Second
    } else {
        VarOrder::First
    }
}

/// Named opaque predicates usable as atoms. The registry is closed; each
/// entry fixes the arity (all arguments second-order) and the dialect
/// features the macro contributes.
pub const MACRO_REGISTRY: &[(&str, usize)] = &[
    // Holds when the vector sequence encoded by its two set arguments is
    // defined, tends to infinity, and has ultimately constant dimension.
    // The defining formula lives in MSO+U; it is kept opaque here and
    // evaluated semantically.
    ("UltConstDim", 2),
];

pub const ULT_CONST_DIM: &str = "UltConstDim";

pub fn macro_arity(name: &str) -> Option<usize> {
    MACRO_REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, k)| *k)
}

/// AST of extended-MSO formulas.
///
/// Variables are plain names; their order is determined by
/// [`order_of_name`]. Letters come from a per-formula alphabet of single
/// ASCII characters ('#' is reserved for the padding letter ♭).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `x in X`
    Membership(String, String),
    /// `x < y`
    Less(String, String),
    /// `x = y` (first-order equality)
    Equal(String, String),
    /// `succ(x, y)`: y is the immediate successor of x. Kept primitive so
    /// translations that rewrite successor specially can see it.
    Succ(String, String),
    /// `a(x)`: position x carries letter a.
    Letter(char, String),
    /// `W(X)`: consecutive members of X occur at arbitrarily large distances.
    W(String),
    /// `U2(R, I)`: the number sequence encoded by (R, I) is defined and
    /// unbounded.
    U2(String, String),
    /// Registered opaque predicate over second-order arguments.
    Macro(String, Vec<String>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// `ex1 x. φ`
    Exists1(String, Box<Formula>),
    /// `all1 x. φ`
    Forall1(String, Box<Formula>),
    /// `ex2 X. φ`
    Exists2(String, Box<Formula>),
    /// `all2 X. φ`
    Forall2(String, Box<Formula>),
    /// `U X. φ`: φ holds for finite sets X of arbitrarily large size.
    QuantU(String, Box<Formula>),
    /// `P X. φ`: φ holds for every ultimately periodic set X.
    QuantP(String, Box<Formula>),
}

/// The five dialects plus the catch-all for formulas mixing extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dialect {
    Mso,
    MsoU,
    MsoW,
    MsoU2,
    MsoP,
    Mixed,
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Dialect::Mso => "MSO",
            Dialect::MsoU => "MSO_U",
            Dialect::MsoW => "MSO_W",
            Dialect::MsoU2 => "MSO_U2",
            Dialect::MsoP => "MSO_P",
            Dialect::Mixed => "MIXED",
        };
        write!(f, "{s}")
    }
}

impl Dialect {
    pub fn parse(s: &str) -> Option<Dialect> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "MSO" => Some(Dialect::Mso),
            "MSO_U" | "U" => Some(Dialect::MsoU),
            "MSO_W" | "W" => Some(Dialect::MsoW),
            "MSO_U2" | "U2" => Some(Dialect::MsoU2),
            "MSO_P" | "P" => Some(Dialect::MsoP),
            "MIXED" => Some(Dialect::Mixed),
            _ => None,
        }
    }
}

/// Extension features appearing in a formula.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Features {
    pub quant_u: bool,
    pub w: bool,
    pub u2: bool,
    pub quant_p: bool,
}

impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }
    pub fn ex1(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Exists1(v.into(), Box::new(f))
    }
    pub fn all1(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Forall1(v.into(), Box::new(f))
    }
    pub fn ex2(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Exists2(v.into(), Box::new(f))
    }
    pub fn all2(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Forall2(v.into(), Box::new(f))
    }
    pub fn quant_u(v: impl Into<String>, f: Formula) -> Formula {
        Formula::QuantU(v.into(), Box::new(f))
    }
    pub fn quant_p(v: impl Into<String>, f: Formula) -> Formula {
        Formula::QuantP(v.into(), Box::new(f))
    }
    pub fn member(x: impl Into<String>, set: impl Into<String>) -> Formula {
        Formula::Membership(x.into(), set.into())
    }
    pub fn less(x: impl Into<String>, y: impl Into<String>) -> Formula {
        Formula::Less(x.into(), y.into())
    }

    /// Conjunction of a non-empty list (right-nested).
    pub fn conj(mut fs: Vec<Formula>) -> Formula {
        let last = fs.pop().expect("conj of empty list");
        fs.into_iter()
            .rev()
            .fold(last, |acc, f| Formula::and(f, acc))
    }

    /// Disjunction of a non-empty list (right-nested).
    pub fn disj(mut fs: Vec<Formula>) -> Formula {
        let last = fs.pop().expect("disj of empty list");
        fs.into_iter().rev().fold(last, |acc, f| Formula::or(f, acc))
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Membership(..)
            | Formula::Less(..)
            | Formula::Equal(..)
            | Formula::Succ(..)
            | Formula::Letter(..)
            | Formula::W(..)
            | Formula::U2(..)
            | Formula::Macro(..) => vec![],
            Formula::Not(a) => vec![a],
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => vec![a, b],
            Formula::Exists1(_, a)
            | Formula::Forall1(_, a)
            | Formula::Exists2(_, a)
            | Formula::Forall2(_, a)
            | Formula::QuantU(_, a)
            | Formula::QuantP(_, a) => vec![a],
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(|c| c.node_count()).sum::<usize>()
    }

    pub fn features(&self) -> Features {
        let mut feats = Features::default();
        self.collect_features(&mut feats);
        feats
    }

    fn collect_features(&self, feats: &mut Features) {
        match self {
            Formula::W(_) => feats.w = true,
            Formula::U2(..) => feats.u2 = true,
            // The only registered macro abbreviates an MSO+U formula.
            Formula::Macro(..) => feats.quant_u = true,
            Formula::QuantU(..) => feats.quant_u = true,
            Formula::QuantP(..) => feats.quant_p = true,
            _ => {}
        }
        for c in self.children() {
            c.collect_features(feats);
        }
    }

    /// Dialect classification: MSO when no extension feature occurs, a
    /// single-extension dialect when exactly one feature family occurs,
    /// MIXED otherwise.
    pub fn dialect(&self) -> Dialect {
        let f = self.features();
        match (f.quant_u, f.w, f.u2, f.quant_p) {
            (false, false, false, false) => Dialect::Mso,
            (true, false, false, false) => Dialect::MsoU,
            (false, true, false, false) => Dialect::MsoW,
            (false, false, true, false) => Dialect::MsoU2,
            (false, false, false, true) => Dialect::MsoP,
            _ => Dialect::Mixed,
        }
    }

    /// Letters appearing in `Letter` atoms.
    pub fn letters(&self) -> Vec<char> {
        let mut out = vec![];
        self.collect_letters(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_letters(&self, out: &mut Vec<char>) {
        if let Formula::Letter(a, _) = self {
            out.push(*a);
        }
        for c in self.children() {
            c.collect_letters(out);
        }
    }

    pub fn is_sentence(&self) -> bool {
        let (fo, so) = free_variables(self);
        fo.is_empty() && so.is_empty()
    }

    /// Number of nodes matching a predicate.
    pub fn count_nodes(&self, pred: &dyn Fn(&Formula) -> bool) -> usize {
        let mut n = usize::from(pred(self));
        for c in self.children() {
            n += c.count_nodes(pred);
        }
        n
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print::print_formula(self))
    }
}

pub use print::print_formula;
