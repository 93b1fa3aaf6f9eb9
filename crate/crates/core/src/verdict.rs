//! Three-valued verdicts with the horizon at which they were established.

use std::fmt;

/// Kleene truth value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }

    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    pub fn or(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::True, _) | (_, Truth::True) => Truth::True,
            (Truth::False, Truth::False) => Truth::False,
            _ => Truth::Unknown,
        }
    }

    pub fn implies(self, other: Truth) -> Truth {
        self.not().or(other)
    }

    pub fn iff(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::Unknown, _) | (_, Truth::Unknown) => Truth::Unknown,
            (a, b) if a == b => Truth::True,
            _ => Truth::False,
        }
    }

    pub fn is_decided(self) -> bool {
        self != Truth::Unknown
    }

    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truth::True => write!(f, "TRUE"),
            Truth::False => write!(f, "FALSE"),
            Truth::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

/// Evidence attached to a decided verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Pairs (position, gap length) showing gaps growing along the prefix.
    GapGrowth(Vec<(u64, u64)>),
    /// A bound certifying eventual periodicity / boundedness.
    Bound(u64),
    /// An index set on which two sequences have different boundedness.
    IndexSet(Vec<usize>),
    /// A position witnessing a violation (for example a shared member of
    /// two sets that were supposed to be disjoint).
    Position(u64),
    /// Free-form note for certificates with no numeric shape.
    Note(String),
}

/// A three-valued answer plus the horizon used to establish it.
///
/// `True`/`False` are only produced when the defining property is decided
/// by the prefix together with tail-class knowledge; verdicts must never
/// flip when the horizon grows, they may only resolve `Unknown`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict3 {
    pub truth: Truth,
    pub horizon: u64,
    pub witness: Option<Witness>,
    /// True when the value was decided by exhausting a restricted domain
    /// (bounded-domain evaluation) rather than by a certificate or a
    /// genuine witness.
    pub relative: bool,
}

impl Verdict3 {
    pub fn new(truth: Truth, horizon: u64) -> Self {
        Verdict3 { truth, horizon, witness: None, relative: false }
    }

    pub fn with_witness(truth: Truth, horizon: u64, witness: Witness) -> Self {
        Verdict3 { truth, horizon, witness: Some(witness), relative: false }
    }

    pub fn unknown(horizon: u64) -> Self {
        Verdict3::new(Truth::Unknown, horizon)
    }

    pub fn is_true(&self) -> bool {
        self.truth == Truth::True
    }

    pub fn is_false(&self) -> bool {
        self.truth == Truth::False
    }
}

impl fmt::Display for Verdict3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (horizon {})", self.truth, self.horizon)?;
        if self.relative {
            write!(f, " [relative]")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kleene_tables() {
        use Truth::*;
        assert_eq!(Unknown.not(), Unknown);
        assert_eq!(False.and(Unknown), False);
        assert_eq!(True.and(Unknown), Unknown);
        assert_eq!(True.or(Unknown), True);
        assert_eq!(False.or(Unknown), Unknown);
        assert_eq!(Unknown.implies(True), True);
        assert_eq!(False.implies(Unknown), True);
        assert_eq!(Unknown.iff(Unknown), Unknown);
        assert_eq!(True.iff(False), False);
    }

    #[test]
    fn de_morgan() {
        use Truth::*;
        for a in [True, False, Unknown] {
            for b in [True, False, Unknown] {
                assert_eq!(a.and(b).not(), a.not().or(b.not()));
                assert_eq!(a.or(b).not(), a.not().and(b.not()));
                assert_eq!(a.not().not(), a);
            }
        }
    }
}
