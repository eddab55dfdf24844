//! Accepts `k,l,p,q` or a polynomial such as `x*y*(x^2+y^3)` / `x^6+y^9`.
//! Whitespace is ignored. Specs with `p > q` are normalized by swapping `x`
//! and `y`.

use crate::error::{Error, Result};
use crate::quasihomogeneous::QuasihomogeneousSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Comma,
    X,
    Y,
    Star,
    Caret,
    Plus,
    LParen,
    RParen,
}

fn describe(t: Option<&(usize, Tok)>) -> String {
    match t {
        None => "end of input".into(),
        Some((_, Tok::Int(n))) => format!("integer {n}"),
        Some((_, t)) => {
            let s = match t {
                Tok::Comma => ",",
                Tok::X => "x",
                Tok::Y => "y",
                Tok::Star => "*",
                Tok::Caret => "^",
                Tok::Plus => "+",
                Tok::LParen => "(",
                Tok::RParen => ")",
                Tok::Int(_) => unreachable!(),
            };
            format!("'{s}'")
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                let n = text[i..end].parse().map_err(|_| Error::Parse {
                    position: i,
                    message: "integer too large".into(),
                })?;
                Tok::Int(n)
            }
            ',' => Tok::Comma,
            'x' | 'X' => Tok::X,
            'y' | 'Y' => Tok::Y,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '+' => Tok::Plus,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((i, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn error<T>(&self, expected: &str) -> Result<T> {
        let position = self.toks.get(self.pos).map_or(self.len, |t| t.0);
        Err(Error::Parse {
            position,
            message: format!(
                "expected {expected}, found {}",
                describe(self.toks.get(self.pos))
            ),
        })
    }

    fn eat(&mut self, t: Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.error("an integer"),
        }
    }

    fn end(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.error("end of input")
        }
    }

    fn tuple(&mut self) -> Result<[u64; 4]> {
        let mut v = [0; 4];
        for (i, slot) in v.iter_mut().enumerate() {
            if i > 0 && !self.eat(Tok::Comma) {
                return self.error("','");
            }
            *slot = self.int()?;
        }
        self.end()?;
        Ok(v)
    }

    /// `x` or `y`, optionally raised to a power.
    fn term(&mut self) -> Result<(Tok, u64)> {
        let var = match self.peek() {
            Some(t @ (Tok::X | Tok::Y)) => {
                self.pos += 1;
                t
            }
            _ => return self.error("'x' or 'y'"),
        };
        let exp = if self.eat(Tok::Caret) { self.int()? } else { 1 };
        Ok((var, exp))
    }

    fn polynomial(&mut self) -> Result<[u64; 4]> {
        let (mut k, mut l) = (0, 0);
        // leading factors `x*` / `y*`
        loop {
            let save = self.pos;
            let var = match self.peek() {
                Some(t @ (Tok::X | Tok::Y)) => t,
                _ => break,
            };
            self.pos += 1;
            if !self.eat(Tok::Star) {
                self.pos = save;
                break;
            }
            let slot = if var == Tok::X { &mut k } else { &mut l };
            if *slot == 1 {
                self.pos = save;
                return self.error("each of x and y at most once as a factor");
            }
            *slot = 1;
        }
        let paren = self.eat(Tok::LParen);
        let first_at = self.pos;
        let a = self.term()?;
        if !self.eat(Tok::Plus) {
            return self.error("'+'");
        }
        let second_at = self.pos;
        let b = self.term()?;
        if paren && !self.eat(Tok::RParen) {
            return self.error("')'");
        }
        self.end()?;
        let (p, q) = match (a, b) {
            ((Tok::X, p), (Tok::Y, q)) => (p, q),
            ((Tok::Y, q), (Tok::X, p)) => (p, q),
            _ => {
                self.pos = if a.0 == Tok::X { second_at } else { first_at };
                return self.error("one power of x and one power of y");
            }
        };
        Ok([k, l, p, q])
    }
}

fn small(v: u64, name: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::InvalidSpec(format!("{name} = {v} is too large")))
}

pub fn parse_spec(text: &str) -> Result<QuasihomogeneousSpec> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty input".into(),
        });
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        len: text.len(),
    };
    let [k, l, p, q] = if matches!(parser.peek(), Some(Tok::Int(_))) {
        parser.tuple()?
    } else {
        parser.polynomial()?
    };
    if k > 1 || l > 1 {
        return Err(Error::InvalidSpec(format!(
            "k and l must be 0 or 1, got k={k}, l={l}"
        )));
    }
    QuasihomogeneousSpec::normalized(k as u8, l as u8, small(p, "p")?, small(q, "q")?)
}
