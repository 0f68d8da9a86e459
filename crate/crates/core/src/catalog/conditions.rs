use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polyring::Weights;

/// `p·a + q·b + r·c` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Linear([i64; 3]);

impl Linear {
    fn eval(&self, w: &Weights) -> i64 {
        (0..3).map(|i| self.0[i] * w.of(i)).sum()
    }
}

impl FromStr for Linear {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Catalog(format!("bad linear expression `{s}`"));
        let mut coeffs = [0i64; 3];
        for term in s.split('+') {
            let term = term.trim();
            let var = term.chars().last().ok_or_else(bad)?;
            let slot = "abc".find(var).ok_or_else(bad)?;
            let head = &term[..term.len() - 1];
            let k = if head.is_empty() { 1 } else { head.parse::<i64>().map_err(|_| bad())? };
            coeffs[slot] += k;
        }
        Ok(Linear(coeffs))
    }
}

/// An arithmetic side condition on the weights of a table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    Equal(Linear, Linear, bool),
    Divides(Linear, Linear, bool),
    /// `c` is a positive multiple of `a`.
    MultipleOfA(bool),
    /// `c = m a + n b` for some integers `m, n >= -1`.
    Semigroup(bool),
}

impl Condition {
    pub fn holds(&self, w: &Weights) -> bool {
        let (a, b, c) = (w.of(0), w.of(1), w.of(2));
        match self {
            Condition::Equal(l, r, want) => (l.eval(w) == r.eval(w)) == *want,
            Condition::Divides(l, r, want) => {
                let d = l.eval(w);
                (d != 0 && r.eval(w) % d == 0) == *want
            }
            Condition::MultipleOfA(want) => (c % a == 0) == *want,
            Condition::Semigroup(want) => {
                let found = (-1..=c / a + 1).any(|m| {
                    let rest = c - m * a;
                    rest % b == 0 && rest / b >= -1
                });
                found == *want
            }
        }
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (lhs, rhs, positive, divides) = if let Some((l, r)) = s.split_once("!|") {
            (l, r, false, true)
        } else if let Some((l, r)) = s.split_once('|') {
            (l, r, true, true)
        } else if let Some((l, r)) = s.split_once("!=") {
            (l, r, false, false)
        } else if let Some((l, r)) = s.split_once('=') {
            (l, r, true, false)
        } else {
            return Err(Error::Catalog(format!("unrecognised condition `{s}`")));
        };
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        if divides {
            return Ok(Condition::Divides(lhs.parse()?, rhs.parse()?, positive));
        }
        match (lhs, rhs) {
            ("c", "ka") => Ok(Condition::MultipleOfA(positive)),
            ("c", "ma+nb") => Ok(Condition::Semigroup(positive)),
            _ => Ok(Condition::Equal(lhs.parse()?, rhs.parse()?, positive)),
        }
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, v) in self.0.iter().zip(["a", "b", "c"]) {
            match k {
                0 => {}
                1 => parts.push(v.to_string()),
                _ => parts.push(format!("{k}{v}")),
            }
        }
        f.write_str(&parts.join("+"))
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = |p: bool| if p { "" } else { "!" };
        match self {
            Condition::Equal(l, r, p) => write!(f, "{l}{}={r}", neg(*p)),
            Condition::Divides(l, r, p) => write!(f, "{l}{}|{r}", neg(*p)),
            Condition::MultipleOfA(p) => write!(f, "c{}=ka", neg(*p)),
            Condition::Semigroup(p) => write!(f, "c{}=ma+nb", neg(*p)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds(c: &str, a: u32, b: u32, cc: u32) -> bool {
        c.parse::<Condition>().unwrap().holds(&Weights::new(a, b, cc).unwrap())
    }

    #[test]
    fn side_conditions() {
        assert!(holds("c=ka", 1, 1, 3));
        assert!(holds("c!=ka", 2, 2, 3));
        assert!(holds("c!=2a", 1, 1, 3));
        assert!(holds("a|b", 2, 4, 5));
        assert!(holds("a!|b", 2, 3, 5));
        assert!(holds("a|2b", 2, 3, 5));
        assert!(holds("c=a+b", 2, 3, 5));
        assert!(!holds("c=a+b", 1, 2, 5));
        // 9 is not m*5 + n*8 with m, n >= -1
        assert!(holds("c!=ma+nb", 5, 8, 9));
        assert!(holds("c!=ma+nb", 2, 4, 5));
        // 5 = 3*3 - 4
        assert!(holds("c=ma+nb", 3, 4, 5));
        assert!(holds("c=ma+nb", 1, 2, 5));
        assert!("c<a".parse::<Condition>().is_err());
        assert!("c=kq".parse::<Condition>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["c=ka", "c!=ma+nb", "a!|b", "a|2b", "c!=2a", "c=a+b"] {
            assert_eq!(s.parse::<Condition>().unwrap().to_string(), s);
        }
    }
}
