//! Text front end: a small recursive-descent parser for polynomials and
//! generator maps, and the canonical printer.
//!
//! Grammar (ASCII, whitespace between tokens ignored):
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := ("+" | "-")? factor ("*" factor)*
//! factor   := base ("^" uint)?
//! base     := rational | "x" | "y" | "z" | "s" | "(" expr ")"
//! rational := uint ("/" uint)?
//! ```
//!
//! Multiplication is always explicit: `x*y`, never `xy`. The symbol `s` is the
//! generator of an extension field and is rejected over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Field, FieldElement, Monomial, Polynomial, Weights};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u64 = 1_000_000;

pub fn parse_poly(text: &str, weights: Weights, field: &Field) -> Result<Polynomial> {
    let mut p = Parser::new(text, 0, weights, field.clone(), Mode::Poly);
    p.parse_all()
}

/// Parses a generator map `x->expr; y->expr; z->expr` into the images of
/// `x`, `y`, `z`. Order of the clauses is free; each generator exactly once.
pub fn parse_map(text: &str, weights: Weights, field: &Field) -> Result<[Polynomial; 3]> {
    let mut images: [Option<Polynomial>; 3] = [None, None, None];
    let mut offset = 0;
    for clause in text.split(';') {
        let start = offset;
        offset += clause.len() + 1;
        if clause.trim().is_empty() {
            continue;
        }
        let arrow = clause.find("->").ok_or_else(|| Error::Parse {
            offset: start,
            message: "expected `v->expr`".into(),
        })?;
        let lhs = clause[..arrow].trim();
        let v = match lhs {
            "x" => 0,
            "y" => 1,
            "z" => 2,
            _ => {
                return Err(Error::Parse {
                    offset: start,
                    message: format!("unknown generator `{lhs}`"),
                })
            }
        };
        if images[v].is_some() {
            return Err(Error::Parse {
                offset: start,
                message: format!("duplicate generator `{lhs}`"),
            });
        }
        let rhs = &clause[arrow + 2..];
        let mut p = Parser::new(rhs, start + arrow + 2, weights, field.clone(), Mode::Poly);
        images[v] = Some(p.parse_all()?);
    }
    let mut out = Vec::with_capacity(3);
    for (v, img) in images.into_iter().enumerate() {
        match img {
            Some(p) => out.push(p),
            None => {
                return Err(Error::Parse {
                    offset: text.len(),
                    message: format!("missing generator `{}`", ["x", "y", "z"][v]),
                })
            }
        }
    }
    let [a, b, c]: [Polynomial; 3] = out.try_into().expect("three images");
    Ok([a, b, c])
}

/// Parses a univariate polynomial in `s` with integer coefficients, such as
/// `s^2+s+1`, returning its coefficients constant term first.
pub fn parse_modulus(text: &str) -> Result<Vec<BigInt>> {
    let mut p = Parser::new(text, 0, Weights::standard(), Field::rationals(), Mode::Modulus);
    let poly = p.parse_all()?;
    let deg = poly.degree_in(0).unwrap_or(0) as usize;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (m, c) in poly.terms() {
        let r = c.as_rational().expect("rational");
        if !r.is_integer() {
            return Err(Error::Parse { offset: 0, message: "modulus coefficients must be integers".into() });
        }
        out[m.0[0] as usize] = r.to_integer();
    }
    Ok(out)
}

/// Parses `a,b,c` into validated weights.
pub fn parse_weights(text: &str) -> Result<Weights> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Parse { offset: 0, message: format!("expected `a,b,c`, got `{text}`") });
    }
    let mut w = [0u32; 3];
    let mut offset = 0;
    for (i, part) in parts.iter().enumerate() {
        w[i] = part.parse().map_err(|_| Error::Parse {
            offset,
            message: format!("`{part}` is not a positive integer"),
        })?;
        offset += part.len() + 1;
    }
    Weights::new(w[0], w[1], w[2])
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Poly,
    /// `s` is read as the sole variable; `x, y, z` are rejected.
    Modulus,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    base_offset: usize,
    weights: Weights,
    field: Field,
    mode: Mode,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, base_offset: usize, weights: Weights, field: Field, mode: Mode) -> Self {
        Parser { src: text.as_bytes(), pos: 0, base_offset, weights, field, mode }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.base_offset + self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_all(&mut self) -> Result<Polynomial> {
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let e = self.expr()?;
        match self.peek() {
            None => Ok(e),
            Some(ch) => self.err(format!("unexpected `{}`", ch as char)),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') | Some(b'-') => {
                    // the sign is consumed by `term`
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(if negate { -&acc } else { acc })
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.uint()?;
            if e > BigInt::from(MAX_EXPONENT) {
                self.pos = start;
                return self.err(format!("exponent exceeds {MAX_EXPONENT}"));
            }
            let e: u32 = e.try_into().expect("bounded exponent");
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let ch = match self.peek() {
            Some(ch) => ch,
            None => return self.err("unexpected end of input"),
        };
        let w = self.weights;
        let k = self.field.clone();
        match ch {
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            b'x' | b'y' | b'z' => {
                if self.mode == Mode::Modulus {
                    return self.err("only `s` may appear in a modulus");
                }
                self.pos += 1;
                self.reject_identifier_tail()?;
                Ok(Polynomial::var(w, k, (ch - b'x') as usize))
            }
            b's' => {
                if self.mode == Mode::Modulus {
                    self.pos += 1;
                    self.reject_identifier_tail()?;
                    return Ok(Polynomial::var(w, k, 0));
                }
                let Some(gen) = self.field.generator() else {
                    return self.err("`s` requires an extension field");
                };
                self.pos += 1;
                self.reject_identifier_tail()?;
                Ok(Polynomial::constant(w, k, gen))
            }
            b'0'..=b'9' => {
                let num = self.uint()?;
                let mut r = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.uint()?;
                    if den.is_zero() {
                        return self.err("division by zero");
                    }
                    r /= BigRational::from_integer(den);
                }
                Ok(Polynomial::constant(w, k.clone(), k.from_rational(r)))
            }
            other => self.err(format!("unexpected `{}`", other as char)),
        }
    }

    /// Implicit products such as `xy` or `2x` are not part of the grammar.
    fn reject_identifier_tail(&self) -> Result<()> {
        match self.src.get(self.pos) {
            Some(ch) if ch.is_ascii_alphanumeric() => {
                self.err("implicit multiplication is not allowed; write `*`")
            }
            _ => Ok(()),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an unsigned integer");
        }
        if self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            return self.err("implicit multiplication is not allowed; write `*`");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }
}

/// Canonical text: terms from largest to smallest in the fixed monomial
/// order, reduced fractions, explicit `*`. Parsing the output gives back `f`.
pub fn format_poly(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (m, c) in f.sorted_terms() {
        let t = format_term(&m, &c, f.num_terms() == 1);
        if !out.is_empty() && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    out
}

fn format_term(m: &Monomial, c: &FieldElement, alone: bool) -> String {
    let coeff = if c.is_compound() && !(alone && m.is_one()) {
        format!("({c})")
    } else {
        c.to_string()
    };
    if m.is_one() {
        return coeff;
    }
    if c.is_one() {
        return m.to_string();
    }
    if c.as_rational().is_some_and(|r| (-r).is_one()) {
        return format!("-{m}");
    }
    format!("{coeff}*{m}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn parses_examples() {
        let w = Weights::standard();
        let f = parse_poly("x^3+y^3+z^3+3*x*y*z", w, &q()).unwrap();
        assert_eq!(f.num_terms(), 4);
        assert_eq!(f.coeff(&Monomial::new(1, 1, 1)), q().from_int(3));
        assert!(parse_poly("0", w, &q()).unwrap().is_zero());
        let g = parse_poly("z^2 + 1/2*x^3*y", Weights::new(1, 1, 2).unwrap(), &q()).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(g.coeff(&Monomial::new(3, 1, 0)), q().from_rational(half));
        assert_eq!(g.coeff(&Monomial::new(0, 0, 2)), q().one());
    }

    #[test]
    fn formats_canonically() {
        let w = Weights::standard();
        assert_eq!(format_poly(&parse_poly("y+x", w, &q()).unwrap()), "x+y");
        assert_eq!(format_poly(&Polynomial::zero(w, q())), "0");
        assert_eq!(format_poly(&parse_poly("-(1/2)*x^3*y + 2", w, &q()).unwrap()), "-1/2*x^3*y+2");
        assert_eq!(format_poly(&parse_poly("x*y*z+z^3+y^3+x^3", w, &q()).unwrap()), "x^3+y^3+x*y*z+z^3");
    }

    #[test]
    fn extension_coefficients_round_trip() {
        let k = Field::extension(&[1, 1, 1]).unwrap();
        let w = Weights::standard();
        let f = parse_poly("(1+2*s)*x - s*y + s^2*z + 3", w, &k).unwrap();
        let text = format_poly(&f);
        assert_eq!(parse_poly(&text, w, &k).unwrap(), f);
        assert!(parse_poly("s*x", w, &q()).is_err());
        // s^2 = -s - 1 in this field
        assert_eq!(parse_poly("s^2", w, &k).unwrap(), parse_poly("-s-1", w, &k).unwrap());
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let w = Weights::standard();
        match parse_poly("x+xy", w, &q()) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("2x", w, &q()), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_poly("x^2000000", w, &q()), Err(Error::Parse { offset: 2, .. })));
        assert!(parse_poly("(x+y", w, &q()).is_err());
        assert!(parse_poly("", w, &q()).is_err());
        assert!(parse_poly("x/2", w, &q()).is_err());
        assert!(parse_poly("1/0", w, &q()).is_err());
    }

    #[test]
    fn generator_maps() {
        let w = Weights::new(1, 1, 2).unwrap();
        let phi = parse_map("x->x; y->y-x^3-2*z; z->z+x^3", w, &q()).unwrap();
        assert_eq!(format_poly(&phi[1]), "-x^3-2*z+y");
        let id = parse_map("x->x;y->y;z->z", w, &q()).unwrap();
        assert_eq!(id[2], Polynomial::var(w, q(), 2));
        let err = parse_map("x->x; x->y; z->z", w, &q()).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
        assert!(parse_map("x->x; y->y", w, &q()).unwrap_err().to_string().contains("missing"));
    }

    #[test]
    fn moduli_and_weights() {
        let m = parse_modulus("s^2+s+1").unwrap();
        assert_eq!(m, vec![BigInt::one(), BigInt::one(), BigInt::one()]);
        assert!(parse_modulus("x+1").is_err());
        assert_eq!(parse_weights("1, 2,3").unwrap(), Weights::new(1, 2, 3).unwrap());
        assert!(parse_weights("2,4,6").is_err());
        assert!(parse_weights("1,2").is_err());
    }
}
