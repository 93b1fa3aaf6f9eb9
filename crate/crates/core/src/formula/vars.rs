//! Free variables, fresh names and capture-avoiding renaming.

use super::{order_of_name, Formula, VarOrder};
use std::collections::{BTreeSet, HashMap};

/// Free first-order and second-order variable names of a formula.
pub fn free_variables(f: &Formula) -> (BTreeSet<String>, BTreeSet<String>) {
    let mut fo = BTreeSet::new();
    let mut so = BTreeSet::new();
    let mut bound = Vec::new();
    collect_free(f, &mut bound, &mut fo, &mut so);
    (fo, so)
}

fn note(name: &str, bound: &[String], fo: &mut BTreeSet<String>, so: &mut BTreeSet<String>) {
    if bound.iter().any(|b| b == name) {
        return;
    }
    match order_of_name(name) {
        VarOrder::First => fo.insert(name.to_string()),
        VarOrder::Second => so.insert(name.to_string()),
    };
}

fn collect_free(
    f: &Formula,
    bound: &mut Vec<String>,
    fo: &mut BTreeSet<String>,
    so: &mut BTreeSet<String>,
) {
    match f {
        Formula::Membership(x, set) => {
            note(x, bound, fo, so);
            note(set, bound, fo, so);
        }
        Formula::Less(x, y) | Formula::Equal(x, y) | Formula::Succ(x, y) => {
            note(x, bound, fo, so);
            note(y, bound, fo, so);
        }
        Formula::Letter(_, x) => note(x, bound, fo, so),
        Formula::W(x) => note(x, bound, fo, so),
        Formula::U2(r, i) => {
            note(r, bound, fo, so);
            note(i, bound, fo, so);
        }
        Formula::Macro(_, args) => {
            for a in args {
                note(a, bound, fo, so);
            }
        }
        Formula::Not(a) => collect_free(a, bound, fo, so),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            collect_free(a, bound, fo, so);
            collect_free(b, bound, fo, so);
        }
        Formula::Exists1(v, a)
        | Formula::Forall1(v, a)
        | Formula::Exists2(v, a)
        | Formula::Forall2(v, a)
        | Formula::QuantU(v, a)
        | Formula::QuantP(v, a) => {
            bound.push(v.clone());
            collect_free(a, bound, fo, so);
            bound.pop();
        }
    }
}

/// Generator of variable names guaranteed not to collide with a given set
/// of used names. Generated names carry a leading underscore, which the
/// user-facing grammar does not produce.
#[derive(Debug, Clone)]
pub struct FreshNames {
    used: BTreeSet<String>,
    counter: u32,
}

impl FreshNames {
    pub fn new(used: BTreeSet<String>) -> Self {
        FreshNames { used, counter: 0 }
    }

    /// Collects every name occurring in the formula (free or bound).
    pub fn avoiding(f: &Formula) -> Self {
        let mut used = BTreeSet::new();
        collect_names(f, &mut used);
        FreshNames::new(used)
    }

    pub fn reserve(&mut self, name: &str) {
        self.used.insert(name.to_string());
    }

    pub fn fresh(&mut self, order: VarOrder, hint: &str) -> String {
        let mut base: String = hint.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        let lead_ok = base
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic())
            && order_of_name(&base) == order;
        if !lead_ok {
            let lead = match order {
                VarOrder::First => 'x',
                VarOrder::Second => 'X',
            };
            base.insert(0, lead);
        }
        loop {
            let candidate = if self.counter == 0 {
                format!("_{base}")
            } else {
                format!("_{base}{}", self.counter)
            };
            self.counter += 1;
            if order_of_name(&candidate) == order && !self.used.contains(&candidate) {
                self.used.insert(candidate.clone());
                return candidate;
            }
        }
    }

    pub fn fresh1(&mut self, hint: &str) -> String {
        self.fresh(VarOrder::First, hint)
    }

    pub fn fresh2(&mut self, hint: &str) -> String {
        self.fresh(VarOrder::Second, hint)
    }
}

fn collect_names(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Membership(x, y)
        | Formula::Less(x, y)
        | Formula::Equal(x, y)
        | Formula::Succ(x, y)
        | Formula::U2(x, y) => {
            out.insert(x.clone());
            out.insert(y.clone());
        }
        Formula::Letter(_, x) | Formula::W(x) => {
            out.insert(x.clone());
        }
        Formula::Macro(_, args) => out.extend(args.iter().cloned()),
        Formula::Exists1(v, a)
        | Formula::Forall1(v, a)
        | Formula::Exists2(v, a)
        | Formula::Forall2(v, a)
        | Formula::QuantU(v, a)
        | Formula::QuantP(v, a) => {
            out.insert(v.clone());
            collect_names(a, out);
        }
        _ => {
            for c in f.children() {
                collect_names(c, out);
            }
        }
    }
}

/// α-renames bound variables so they are pairwise distinct and avoid both
/// `reserved` and the free variables of `f`. Free occurrences are left
/// untouched; the result is α-equivalent to the input.
pub fn rename_apart(f: &Formula, reserved: &BTreeSet<String>) -> Formula {
    let (fo, so) = free_variables(f);
    let mut used: BTreeSet<String> = reserved.clone();
    used.extend(fo);
    used.extend(so);
    let mut fresh = FreshNames::new(used.clone());
    let mut env = HashMap::new();
    rename_walk(f, &mut env, &mut used, &mut fresh)
}

fn lookup(env: &HashMap<String, Vec<String>>, name: &str) -> String {
    env.get(name)
        .and_then(|stack| stack.last().cloned())
        .unwrap_or_else(|| name.to_string())
}

fn rename_walk(
    f: &Formula,
    env: &mut HashMap<String, Vec<String>>,
    used: &mut BTreeSet<String>,
    fresh: &mut FreshNames,
) -> Formula {
    let binder = |v: &String,
                      a: &Formula,
                      env: &mut HashMap<String, Vec<String>>,
                      used: &mut BTreeSet<String>,
                      fresh: &mut FreshNames|
     -> (String, Formula) {
        let new = if used.contains(v) {
            fresh.fresh(order_of_name(v), v)
        } else {
            v.clone()
        };
        used.insert(new.clone());
        env.entry(v.clone()).or_default().push(new.clone());
        let body = rename_walk(a, env, used, fresh);
        env.get_mut(v).unwrap().pop();
        (new, body)
    };
    match f {
        Formula::Membership(x, set) => Formula::Membership(lookup(env, x), lookup(env, set)),
        Formula::Less(x, y) => Formula::Less(lookup(env, x), lookup(env, y)),
        Formula::Equal(x, y) => Formula::Equal(lookup(env, x), lookup(env, y)),
        Formula::Succ(x, y) => Formula::Succ(lookup(env, x), lookup(env, y)),
        Formula::Letter(a, x) => Formula::Letter(*a, lookup(env, x)),
        Formula::W(x) => Formula::W(lookup(env, x)),
        Formula::U2(r, i) => Formula::U2(lookup(env, r), lookup(env, i)),
        Formula::Macro(name, args) => {
            Formula::Macro(name.clone(), args.iter().map(|a| lookup(env, a)).collect())
        }
        Formula::Not(a) => Formula::not(rename_walk(a, env, used, fresh)),
        Formula::And(a, b) => Formula::and(
            rename_walk(a, env, used, fresh),
            rename_walk(b, env, used, fresh),
        ),
        Formula::Or(a, b) => Formula::or(
            rename_walk(a, env, used, fresh),
            rename_walk(b, env, used, fresh),
        ),
        Formula::Implies(a, b) => Formula::implies(
            rename_walk(a, env, used, fresh),
            rename_walk(b, env, used, fresh),
        ),
        Formula::Iff(a, b) => Formula::iff(
            rename_walk(a, env, used, fresh),
            rename_walk(b, env, used, fresh),
        ),
        Formula::Exists1(v, a) => {
            let (v, body) = binder(v, a, env, used, fresh);
            Formula::Exists1(v, Box::new(body))
        }
        Formula::Forall1(v, a) => {
            let (v, body) = binder(v, a, env, used, fresh);
            Formula::Forall1(v, Box::new(body))
        }
        Formula::Exists2(v, a) => {
            let (v, body) = binder(v, a, env, used, fresh);
            Formula::Exists2(v, Box::new(body))
        }
        Formula::Forall2(v, a) => {
            let (v, body) = binder(v, a, env, used, fresh);
            Formula::Forall2(v, Box::new(body))
        }
        Formula::QuantU(v, a) => {
            let (v, body) = binder(v, a, env, used, fresh);
            Formula::QuantU(v, Box::new(body))
        }
        Formula::QuantP(v, a) => {
            let (v, body) = binder(v, a, env, used, fresh);
            Formula::QuantP(v, Box::new(body))
        }
    }
}

/// Structural equality up to α-renaming of bound variables.
pub fn alpha_eq(f: &Formula, g: &Formula) -> bool {
    alpha_walk(f, g, &mut vec![])
}

fn var_eq(x: &str, y: &str, stack: &[(String, String)]) -> bool {
    for (a, b) in stack.iter().rev() {
        let xa = a == x;
        let yb = b == y;
        if xa || yb {
            return xa && yb;
        }
    }
    x == y
}

fn alpha_walk(f: &Formula, g: &Formula, stack: &mut Vec<(String, String)>) -> bool {
    use Formula::*;
    match (f, g) {
        (Membership(a, b), Membership(c, d))
        | (Less(a, b), Less(c, d))
        | (Equal(a, b), Equal(c, d))
        | (Succ(a, b), Succ(c, d))
        | (U2(a, b), U2(c, d)) => var_eq(a, c, stack) && var_eq(b, d, stack),
        (Letter(a, x), Letter(b, y)) => a == b && var_eq(x, y, stack),
        (W(x), W(y)) => var_eq(x, y, stack),
        (Macro(n, xs), Macro(m, ys)) => {
            n == m && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| var_eq(x, y, stack))
        }
        (Not(a), Not(b)) => alpha_walk(a, b, stack),
        (And(a, b), And(c, d))
        | (Or(a, b), Or(c, d))
        | (Implies(a, b), Implies(c, d))
        | (Iff(a, b), Iff(c, d)) => alpha_walk(a, c, stack) && alpha_walk(b, d, stack),
        (Exists1(v, a), Exists1(w, b))
        | (Forall1(v, a), Forall1(w, b))
        | (Exists2(v, a), Exists2(w, b))
        | (Forall2(v, a), Forall2(w, b))
        | (QuantU(v, a), QuantU(w, b))
        | (QuantP(v, a), QuantP(w, b)) => {
            stack.push((v.clone(), w.clone()));
            let r = alpha_walk(a, b, stack);
            stack.pop();
            r
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn parse(s: &str) -> Formula {
        parse_formula(s, &['a', 'b', 'c']).unwrap()
    }

    #[test]
    fn free_variable_sets() {
        let f = parse("U2(R, I)");
        let (fo, so) = free_variables(&f);
        assert!(fo.is_empty());
        assert_eq!(so.into_iter().collect::<Vec<_>>(), vec!["I", "R"]);

        let g = parse("U X. (x in X)");
        let (fo, so) = free_variables(&g);
        assert_eq!(fo.into_iter().collect::<Vec<_>>(), vec!["x"]);
        assert!(so.is_empty());
    }

    #[test]
    fn rename_apart_avoids_reserved() {
        let f = parse("ex2 X. (ex1 x. x in X)");
        let reserved: BTreeSet<String> = ["X".to_string()].into();
        let g = rename_apart(&f, &reserved);
        match &g {
            Formula::Exists2(v, _) => assert_ne!(v, "X"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(alpha_eq(&f, &g));
    }

    #[test]
    fn rename_apart_makes_binders_distinct() {
        let f = parse("(ex2 X. ex2 X. y in X) & (ex2 X. W(X))");
        let g = rename_apart(&f, &BTreeSet::new());
        let mut names = vec![];
        fn binders(f: &Formula, out: &mut Vec<String>) {
            if let Formula::Exists1(v, _)
            | Formula::Forall1(v, _)
            | Formula::Exists2(v, _)
            | Formula::Forall2(v, _)
            | Formula::QuantU(v, _)
            | Formula::QuantP(v, _) = f
            {
                out.push(v.clone());
            }
            for c in f.children() {
                binders(c, out);
            }
        }
        binders(&g, &mut names);
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(names.len(), dedup.len(), "binders not distinct: {names:?}");
        assert!(alpha_eq(&f, &g));
        assert_eq!(free_variables(&f), free_variables(&g));
    }

    #[test]
    fn rename_apart_idempotent() {
        let f = parse("ex2 X. ((ex2 X. W(X)) & (ex1 z. z in X))");
        let once = rename_apart(&f, &BTreeSet::new());
        let twice = rename_apart(&once, &BTreeSet::new());
        assert!(alpha_eq(&once, &twice));
        assert_eq!(free_variables(&once), free_variables(&twice));
    }
}
