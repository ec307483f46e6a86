//! Text input: polynomials, generating functions and integer matrices.
//!
//! Polynomial grammar (no implicit multiplication):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' INT]
//! atom   := INT | IDENT | '(' expr ')'
//! ```

use std::fmt;

use cubeforge_core::cfinite::RationalGF;
use cubeforge_core::kernel::{MultiPoly, UniPoly};
use num_bigint::BigInt;

/// A syntax error at a 1-based character position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("decimal digits")), pos));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return err(pos, format!("unexpected character `{c}`")),
        };
        out.push((tok, pos));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Int(n), pos) => match u32::try_from(&n) {
                Ok(e) => Ok(base.pow(e)),
                Err(_) => err(pos, "exponent too large"),
            },
            (t, pos) => err(pos, format!("expected a nonnegative integer exponent, found {}", t.describe())),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.bump() {
            (Tok::Int(n), _) => Ok(MultiPoly::constant(self.vars, n)),
            (Tok::Ident(name), pos) => MultiPoly::var(self.vars, &name).or_else(|_| {
                err(pos, format!("unknown variable `{name}` (expected one of {})", self.vars.join(", ")))
            }),
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (t, pos) => err(pos, format!("expected `)`, found {}", t.describe())),
                }
            }
            (t, pos) => err(pos, format!("expected a number, variable or `(`, found {}", t.describe())),
        }
    }
}

/// Parses a polynomial over the given variables.
pub fn parse_poly<S: AsRef<str>>(src: &str, vars: &[S]) -> Result<MultiPoly, ParseError> {
    let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_owned()).collect();
    let mut p = Parser { toks: tokenize(src)?, at: 0, vars: &vars };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        t => err(p.pos(), format!("expected an operator or end of input, found {}", t.describe())),
    }
}

/// Comma-separated integers; `offset` is the 1-based position of `src[0]`
/// in the surrounding text.
fn parse_int_list(src: &str, offset: usize) -> Result<Vec<BigInt>, ParseError> {
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in src.split(',') {
        let trimmed = piece.trim();
        let lead = piece.chars().take_while(|c| c.is_whitespace()).count();
        match trimmed.parse::<BigInt>() {
            Ok(v) => out.push(v),
            Err(_) => return err(pos + lead, format!("expected an integer, found `{trimmed}`")),
        }
        pos += piece.chars().count() + 1;
    }
    Ok(out)
}

/// `"num;den"` with ascending coefficient lists, e.g. `"1,53,9;1,-82,-82,1"`.
pub fn parse_gf(src: &str) -> Result<RationalGF, ParseError> {
    let Some((num_src, den_src)) = src.split_once(';') else {
        return err(src.chars().count() + 1, "expected `;` between numerator and denominator");
    };
    let num = parse_int_list(num_src, 1)?;
    let den_pos = num_src.chars().count() + 2;
    let den = parse_int_list(den_src, den_pos)?;
    RationalGF::new(UniPoly::new(num), UniPoly::new(den)).map_err(|e| ParseError { position: den_pos, message: e.to_string() })
}

/// `"a,b,c;d,e,f;g,h,i"`.
pub fn parse_matrix(src: &str) -> Result<[[BigInt; 3]; 3], ParseError> {
    let mut rows = Vec::new();
    let mut pos = 1;
    for row in src.split(';') {
        let vals = parse_int_list(row, pos)?;
        if vals.len() != 3 {
            return err(pos, format!("expected 3 entries in row, found {}", vals.len()));
        }
        rows.push([vals[0].clone(), vals[1].clone(), vals[2].clone()]);
        pos += row.chars().count() + 1;
    }
    match <[[BigInt; 3]; 3]>::try_from(rows) {
        Ok(m) => Ok(m),
        Err(rows) => err(1, format!("expected 3 rows, found {}", rows.len())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirschhorn_form() {
        let p = parse_poly("m^2 - 9*m*n - n^2", &["m", "n"]).unwrap();
        assert_eq!(p, MultiPoly::from_i64_terms(&["m", "n"], &[(&[2, 0], 1), (&[1, 1], -9), (&[0, 2], -1)]));
        let q = parse_poly("-(A^2) + 9*A*B + B^2", &["A", "B"]).unwrap();
        assert_eq!(q, MultiPoly::from_i64_terms(&["A", "B"], &[(&[2, 0], -1), (&[1, 1], 9), (&[0, 2], 1)]));
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_poly("m++n", &["m", "n"]).unwrap_err().position, 3);
        assert_eq!(parse_poly("2m", &["m"]).unwrap_err().position, 2);
        assert_eq!(parse_poly("m^x", &["m"]).unwrap_err().position, 3);
        assert_eq!(parse_poly("(m + 1", &["m"]).unwrap_err().position, 7);
        assert_eq!(parse_poly("q", &["m"]).unwrap_err().position, 1);
        assert_eq!(parse_poly("m $ n", &["m", "n"]).unwrap_err().position, 3);
    }

    #[test]
    fn nested_powers() {
        let p = parse_poly("(m - n)^3 - (m^3 - 3*m^2*n + 3*m*n^2 - n^3)", &["m", "n"]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn gf_and_matrix() {
        let g = parse_gf("1,53,9;1,-82,-82,1").unwrap();
        assert_eq!(g, RationalGF::from_i64(&[1, 53, 9], &[1, -82, -82, 1]).unwrap());
        assert!(parse_gf("1,2").is_err());
        assert_eq!(parse_gf("1,x;1").unwrap_err().position, 3);
        let m = parse_matrix("6,7,-9;6,-5,4;-8,-3,3").unwrap();
        assert_eq!(m[2][0], BigInt::from(-8));
        assert!(parse_matrix("1,2;3,4").is_err());
    }
}
