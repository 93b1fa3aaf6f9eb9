//! Text formats for sets, sequences, words and assignments.
//!
//! Sets: `finite{3,5,8}` | `lasso{prefix=0110;period=10}` |
//! `proc{name=pow2}` | `proc{name=squares}` | `proc{name=multiples;k=10}`
//! | `proc{name=pidigits}` | `proc{name=triangular}`.
//! Vector prefix: `[(2,1),(3,2,1),()]`. Number prefix: `[1,1,3,1,5]`.
//! Words: `lasso{stem=ab;loop=ba}` | `pad{word=lasso{...};gen=identity}` |
//! `blocks{unit=ac;sep=b;growth=identity}`.
//! Assignments: one `name = value` per line.

use crate::eval::{Assignment, BlocksWord, GapGen, LassoWord, PaddedWord, Word};
use crate::formula::order_of_name;
use crate::vecseq::{Generator, NumberSeqPrefix, OmegaSet, VectorSeqPrefix};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("format error: {0}")]
pub struct FormatError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

/// Splits `kind{body}` and returns (kind, body).
fn braced(text: &str) -> Result<(&str, &str), FormatError> {
    let text = text.trim();
    let open = text
        .find('{')
        .ok_or_else(|| FormatError(format!("expected '{{' in '{text}'")))?;
    if !text.ends_with('}') {
        return err(format!("expected trailing '}}' in '{text}'"));
    }
    Ok((&text[..open], &text[open + 1..text.len() - 1]))
}

/// Parses `key=value;key=value` bodies. Values may contain nested braces.
fn fields(body: &str) -> Result<Vec<(&str, &str)>, FormatError> {
    let mut out = vec![];
    let mut depth = 0usize;
    let mut start = 0usize;
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'{' => depth += 1,
            b'}' => depth = depth.saturating_sub(1),
            b';' if depth == 0 => {
                out.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&body[start..]);
    out.into_iter()
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            let eq = kv
                .find('=')
                .ok_or_else(|| FormatError(format!("expected key=value in '{kv}'")))?;
            Ok((kv[..eq].trim(), kv[eq + 1..].trim()))
        })
        .collect()
}

fn bits(s: &str) -> Result<Vec<bool>, FormatError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => err(format!("expected bit string, found '{other}'")),
        })
        .collect()
}

pub fn parse_set(text: &str) -> Result<OmegaSet, FormatError> {
    let (kind, body) = braced(text)?;
    match kind.trim() {
        "finite" => {
            let members: Vec<u64> = body
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| FormatError(format!("bad number '{s}'")))
                })
                .collect::<Result<_, _>>()?;
            Ok(OmegaSet::finite(&members))
        }
        "lasso" => {
            let mut prefix = vec![];
            let mut period = None;
            for (k, v) in fields(body)? {
                match k {
                    "prefix" => prefix = bits(v)?,
                    "period" => period = Some(bits(v)?),
                    other => return err(format!("unknown lasso field '{other}'")),
                }
            }
            let period = period.ok_or_else(|| FormatError("lasso needs period=".into()))?;
            if period.is_empty() {
                return err("lasso period must be nonempty");
            }
            Ok(OmegaSet::lasso(prefix, period))
        }
        "proc" => {
            let fs = fields(body)?;
            let name = fs
                .iter()
                .find(|(k, _)| *k == "name")
                .map(|(_, v)| *v)
                .ok_or_else(|| FormatError("proc needs name=".into()))?;
            let gen = match name {
                "pow2" => Generator::Pow2,
                "squares" => Generator::Squares,
                "triangular" => Generator::Triangular,
                "pidigits" => Generator::PiDigits,
                "multiples" => {
                    let k = fs
                        .iter()
                        .find(|(k, _)| *k == "k")
                        .map(|(_, v)| *v)
                        .ok_or_else(|| FormatError("multiples needs k=".into()))?;
                    let k: u64 =
                        k.parse().map_err(|_| FormatError(format!("bad k '{k}'")))?;
                    if k == 0 {
                        return err("multiples needs k >= 1");
                    }
                    Generator::Multiples { k }
                }
                other => return err(format!("unknown generator '{other}'")),
            };
            Ok(OmegaSet::procedural(gen))
        }
        other => err(format!("unknown set kind '{other}'")),
    }
}

pub fn parse_gap_gen(text: &str) -> Result<GapGen, FormatError> {
    let text = text.trim();
    match text {
        "identity" => Ok(GapGen::Identity),
        "pow2" => Ok(GapGen::Pow2),
        _ => {
            if let Some(rest) = text.strip_prefix("constant") {
                let rest = rest.trim_start_matches(';');
                if let Some(k) = rest.strip_prefix("k=") {
                    let k = k
                        .parse()
                        .map_err(|_| FormatError(format!("bad constant k '{k}'")))?;
                    return Ok(GapGen::Constant(k));
                }
            }
            err(format!("unknown generator '{text}' (identity | pow2 | constant;k=N)"))
        }
    }
}

pub fn parse_word(text: &str) -> Result<Word, FormatError> {
    let (kind, body) = braced(text)?;
    match kind.trim() {
        "lasso" => {
            let mut stem = "";
            let mut looping = None;
            for (k, v) in fields(body)? {
                match k {
                    "stem" => stem = v,
                    "loop" => looping = Some(v),
                    other => return err(format!("unknown lasso word field '{other}'")),
                }
            }
            let looping = looping.ok_or_else(|| FormatError("lasso word needs loop=".into()))?;
            if looping.is_empty() {
                return err("lasso loop must be nonempty");
            }
            Ok(Word::Lasso(LassoWord::new(stem, looping)))
        }
        "pad" => {
            let mut word = None;
            let mut gen = None;
            for (k, v) in fields(body)? {
                match k {
                    "word" => word = Some(parse_word(v)?),
                    "gen" => gen = Some(parse_gap_gen(v)?),
                    other => return err(format!("unknown pad field '{other}'")),
                }
            }
            let base = match word.ok_or_else(|| FormatError("pad needs word=".into()))? {
                Word::Lasso(w) => w,
                _ => return err("pad takes a lasso base word"),
            };
            let gen = gen.ok_or_else(|| FormatError("pad needs gen=".into()))?;
            PaddedWord::new(base, gen)
                .map(Word::Padded)
                .map_err(FormatError)
        }
        "blocks" => {
            let mut unit = None;
            let mut sep = None;
            let mut growth = None;
            for (k, v) in fields(body)? {
                match k {
                    "unit" => unit = Some(v),
                    "sep" => {
                        let mut cs = v.chars();
                        sep = cs.next();
                        if cs.next().is_some() {
                            return err("sep must be a single letter");
                        }
                    }
                    "growth" => growth = Some(parse_gap_gen(v)?),
                    other => return err(format!("unknown blocks field '{other}'")),
                }
            }
            let unit = unit.ok_or_else(|| FormatError("blocks needs unit=".into()))?;
            let sep = sep.ok_or_else(|| FormatError("blocks needs sep=".into()))?;
            let growth = growth.ok_or_else(|| FormatError("blocks needs growth=".into()))?;
            BlocksWord::new(unit, sep, growth)
                .map(Word::Blocks)
                .map_err(FormatError)
        }
        other => err(format!("unknown word kind '{other}'")),
    }
}

pub fn parse_number_seq(text: &str) -> Result<NumberSeqPrefix, FormatError> {
    let text = text.trim();
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| FormatError(format!("expected [..] in '{text}'")))?;
    let values: Vec<u64> = inner
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| FormatError(format!("bad number '{s}'")))
        })
        .collect::<Result<_, _>>()?;
    Ok(NumberSeqPrefix::new(values))
}

pub fn parse_vector_seq(text: &str) -> Result<VectorSeqPrefix, FormatError> {
    let text = text.trim();
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| FormatError(format!("expected [..] in '{text}'")))?;
    let mut vectors = vec![];
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| FormatError(format!("expected '(' in '{rest}'")))?;
        let close = rest[open..]
            .find(')')
            .map(|i| i + open)
            .ok_or_else(|| FormatError(format!("missing ')' in '{rest}'")))?;
        let tuple = &rest[open + 1..close];
        let coords: Vec<u64> = tuple
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| FormatError(format!("bad coordinate '{s}'")))
            })
            .collect::<Result<_, _>>()?;
        vectors.push(coords);
        rest = rest[close + 1..].trim_start_matches(',').trim();
    }
    Ok(VectorSeqPrefix::new(vectors))
}

pub fn format_number_seq(seq: &NumberSeqPrefix) -> String {
    let vals: Vec<String> = seq.values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", vals.join(","))
}

pub fn format_vector_seq(seq: &VectorSeqPrefix) -> String {
    let vecs: Vec<String> = seq
        .vectors
        .iter()
        .map(|v| {
            let cs: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            format!("({})", cs.join(","))
        })
        .collect();
    format!("[{}]", vecs.join(","))
}

/// Assignment files: one `name = value` per line; `#` starts a comment.
/// Lowercase names take positions, uppercase names take sets.
pub fn parse_assignment(text: &str) -> Result<Assignment, FormatError> {
    let mut env = Assignment::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let eq = line
            .find('=')
            .ok_or_else(|| FormatError(format!("line {}: expected name = value", lineno + 1)))?;
        let name = line[..eq].trim();
        let value = line[eq + 1..].trim();
        if name.is_empty() {
            return err(format!("line {}: empty name", lineno + 1));
        }
        match order_of_name(name) {
            crate::formula::VarOrder::First => {
                let v: u64 = value.parse().map_err(|_| {
                    FormatError(format!("line {}: bad position '{value}'", lineno + 1))
                })?;
                env = env.bind_first(name, v);
            }
            crate::formula::VarOrder::Second => {
                let s = parse_set(value)
                    .map_err(|e| FormatError(format!("line {}: {e}", lineno + 1)))?;
                env = env.bind_second(name, s);
            }
        }
    }
    Ok(env)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_formats() {
        assert_eq!(parse_set("finite{3,5,8}").unwrap().members_below(10), vec![3, 5, 8]);
        let s = parse_set("lasso{prefix=0110;period=10}").unwrap();
        assert_eq!(s.members_below(8), vec![1, 2, 4, 6]);
        assert_eq!(
            parse_set("proc{name=multiples;k=10}").unwrap().members_below(25),
            vec![0, 10, 20]
        );
        assert!(parse_set("proc{name=nope}").is_err());
        assert_eq!(parse_set("finite{}").unwrap(), OmegaSet::empty());
    }

    #[test]
    fn word_formats() {
        let w = parse_word("lasso{stem=ab;loop=ba}").unwrap();
        assert_eq!(w.prefix(6).iter().collect::<String>(), "abbaba");
        let w = parse_word("pad{word=lasso{stem=;loop=a};gen=identity}").unwrap();
        assert_eq!(w.prefix(6).iter().collect::<String>(), "aa#a##");
        let w = parse_word("blocks{unit=ac;sep=b;growth=identity}").unwrap();
        assert_eq!(w.prefix(4).iter().collect::<String>(), "bacb");
        assert!(parse_word("pad{word=lasso{stem=#;loop=a};gen=identity}").is_err());
    }

    #[test]
    fn sequence_formats_roundtrip() {
        let v = parse_vector_seq("[(2,1),(3,2,1),()]").unwrap();
        assert_eq!(v.vectors, vec![vec![2, 1], vec![3, 2, 1], vec![]]);
        assert_eq!(format_vector_seq(&v), "[(2,1),(3,2,1),()]");
        let n = parse_number_seq("[1,1,3,1,5]").unwrap();
        assert_eq!(n.values, vec![1, 1, 3, 1, 5]);
        assert_eq!(format_number_seq(&n), "[1,1,3,1,5]");
    }

    #[test]
    fn assignment_lines() {
        let env = parse_assignment("X = lasso{prefix=;period=01}\nx = 17\n# comment\n").unwrap();
        assert_eq!(env.first, vec![("x".to_string(), 17)]);
        assert_eq!(env.second.len(), 1);
    }
}
