use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// An indeterminate, identified by its name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Symbol {
    fn from(name: &str) -> Self {
        Symbol::new(name)
    }
}

impl From<&Symbol> for Symbol {
    fn from(s: &Symbol) -> Self {
        s.clone()
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A power product of symbols.
///
/// Stored sparsely as `(symbol, exponent)` pairs sorted by symbol name, with
/// every exponent strictly positive. The empty product is the unit monomial.
///
/// Monomials are ordered lexicographically on their dense exponent vectors,
/// where the symbol with the greatest name is the most significant
/// coordinate. For a single symbol this is ordering by degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(sym: impl Into<Symbol>, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(sym.into(), exp)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<Symbol>,
    {
        let mut m = Monomial::one();
        for (s, e) in pairs {
            m = m.mul(&Monomial::var(s, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Symbol, u32)> {
        self.0.iter().map(|(s, e)| (s, *e))
    }

    pub fn exponent(&self, sym: &str) -> u32 {
        self.0.iter().find(|(s, _)| s.name() == sym).map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Splits off the power of `sym`: returns `(e, rest)` with
    /// `self = sym^e * rest`.
    pub fn split(&self, sym: &str) -> (u32, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for (s, e) in &self.0 {
            if s.name() == sym {
                exp = *e;
            } else {
                rest.push((s.clone(), *e));
            }
        }
        (exp, Monomial(rest))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (sa, ea) = &self.0[i];
            let (sb, eb) = &other.0[j];
            match sa.cmp(sb) {
                Ordering::Less => {
                    out.push((sa.clone(), *ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((sb.clone(), *eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((sa.clone(), ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0.iter().rev().peekable();
        let mut b = other.0.iter().rev().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((sa, ea)), Some((sb, eb))) => match sa.cmp(sb) {
                    // the side holding the larger symbol has a positive
                    // exponent where the other has zero
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Less => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        // single-character names read unambiguously when juxtaposed
        let sep = if self.0.iter().all(|(s, _)| s.name().chars().count() == 1) {
            ""
        } else {
            "*"
        };
        for (i, (s, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}
