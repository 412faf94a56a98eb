//! The spec mini-language for the CLI and tests.
//!
//! Grammar (names case-insensitive, whitespace free-form):
//!
//! ```text
//! expr     := atom | unary | binary | roster-like
//! atom     := O(n) | LO(n) | RO(n) | CH(n) | K1(n) | Z(n) | Zmn(m,n)
//!           | Onk(m,n,k) | LOO(l,m,n,k) | LORO(l,m,n,k) | OROP(n)
//!           | OLO3(l,m,n) | LOZ(n) | OG(expr, m) | OGmn(expr, m, n)
//!           | group(NAME)
//! unary    := e(expr) | theta(expr) | mutant(expr) | op(expr)
//!           | clone(expr, x=i) | idemclone(expr, x=i)
//! binary   := prod(expr, expr) | stack(expr, expr) | twist(expr, expr)
//!           | unite(expr, expr)
//!           | semistack(n, expr, phi=[p0 p1 ...; ...])
//! roster-like := roster(expr, x=i, H={..}, K={..})
//!           | rosterhat(expr, x=i, H={..})
//! ```

use super::{Family, FamilyError};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(u128),
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
}

fn lex(input: &str) -> Result<Vec<Token>, FamilyError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            '{' => {
                chars.next();
                tokens.push(Token::LBrace);
            }
            '}' => {
                chars.next();
                tokens.push(Token::RBrace);
            }
            '[' => {
                chars.next();
                tokens.push(Token::LBracket);
            }
            ']' => {
                chars.next();
                tokens.push(Token::RBracket);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            ';' => {
                chars.next();
                tokens.push(Token::Semi);
            }
            '=' => {
                chars.next();
                tokens.push(Token::Eq);
            }
            c if c.is_ascii_digit() => {
                let mut value: u128 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        value = value
                            .checked_mul(10)
                            .and_then(|x| x.checked_add(v as u128))
                            .ok_or_else(|| FamilyError::Parse("integer overflow".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Int(value));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        word.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(word));
            }
            other => {
                return Err(FamilyError::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token, FamilyError> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| FamilyError::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: Token) -> Result<(), FamilyError> {
        let got = self.next()?;
        if got == t {
            Ok(())
        } else {
            Err(FamilyError::Parse(format!("expected {t:?}, got {got:?}")))
        }
    }

    fn int(&mut self) -> Result<u128, FamilyError> {
        match self.next()? {
            Token::Int(v) => Ok(v),
            other => Err(FamilyError::Parse(format!("expected integer, got {other:?}"))),
        }
    }

    fn small(&mut self) -> Result<usize, FamilyError> {
        let v = self.int()?;
        usize::try_from(v).map_err(|_| FamilyError::Parse(format!("{v} too large")))
    }

    /// `name = INT` with the given key.
    fn named_int(&mut self, key: &str) -> Result<usize, FamilyError> {
        match self.next()? {
            Token::Ident(w) if w.eq_ignore_ascii_case(key) => {}
            other => {
                return Err(FamilyError::Parse(format!(
                    "expected `{key}=`, got {other:?}"
                )))
            }
        }
        self.expect(Token::Eq)?;
        self.small()
    }

    /// `name = { i, j, ... }` with the given key.
    fn named_set(&mut self, key: &str) -> Result<Vec<usize>, FamilyError> {
        match self.next()? {
            Token::Ident(w) if w.eq_ignore_ascii_case(key) => {}
            other => {
                return Err(FamilyError::Parse(format!(
                    "expected `{key}=`, got {other:?}"
                )))
            }
        }
        self.expect(Token::Eq)?;
        self.expect(Token::LBrace)?;
        let mut out = Vec::new();
        if self.peek() == Some(&Token::RBrace) {
            self.next()?;
            return Ok(out);
        }
        loop {
            out.push(self.small()?);
            match self.next()? {
                Token::Comma => {}
                Token::RBrace => break,
                other => {
                    return Err(FamilyError::Parse(format!(
                        "expected `,` or `}}` in set, got {other:?}"
                    )))
                }
            }
        }
        Ok(out)
    }

    fn family(&mut self) -> Result<Family, FamilyError> {
        let name = match self.next()? {
            Token::Ident(w) => w.to_ascii_lowercase(),
            other => return Err(FamilyError::Parse(format!("expected a name, got {other:?}"))),
        };
        self.expect(Token::LParen)?;
        let fam = match name.as_str() {
            "o" => Family::O(self.small()?),
            "lo" => Family::LO(self.small()?),
            "ro" => Family::RO(self.small()?),
            "ch" => Family::CH(self.small()?),
            "k1" => Family::K1(self.small()?),
            "z" => Family::Z(self.small()?),
            "zmn" => {
                let m = self.small()?;
                self.expect(Token::Comma)?;
                Family::Zmn(m, self.small()?)
            }
            "onk" => {
                let m = self.small()?;
                self.expect(Token::Comma)?;
                let n = self.small()?;
                self.expect(Token::Comma)?;
                Family::Onk(m, n, self.int()?)
            }
            "loo" | "loro" => {
                let l = self.small()?;
                self.expect(Token::Comma)?;
                let m = self.small()?;
                self.expect(Token::Comma)?;
                let n = self.small()?;
                self.expect(Token::Comma)?;
                let k = self.int()?;
                if name == "loo" {
                    Family::LOO(l, m, n, k)
                } else {
                    Family::LORO(l, m, n, k)
                }
            }
            "orop" => Family::OROP(self.small()?),
            "olo3" => {
                let l = self.small()?;
                self.expect(Token::Comma)?;
                let m = self.small()?;
                self.expect(Token::Comma)?;
                Family::OLO3(l, m, self.small()?)
            }
            "loz" => Family::LOZ(self.small()?),
            "og" => {
                let base = self.family()?;
                self.expect(Token::Comma)?;
                Family::OG(Box::new(base), self.small()?)
            }
            // Sugar for the ideal extensions of a null semigroup by a named
            // family: ORO(m,n) is O_m over RO_n, and so on.
            "oro" | "olo" | "oz" | "oo" | "och" | "ok1" => {
                let m = self.small()?;
                self.expect(Token::Comma)?;
                let n = self.small()?;
                let inner = match name.as_str() {
                    "oro" => Family::RO(n),
                    "olo" => Family::LO(n),
                    "oz" => Family::Z(n),
                    "oo" => Family::O(n),
                    "och" => Family::CH(n),
                    _ => Family::K1(n),
                };
                Family::OG(Box::new(inner), m)
            }
            "ogmn" => {
                let base = self.family()?;
                self.expect(Token::Comma)?;
                let m = self.small()?;
                self.expect(Token::Comma)?;
                Family::OGmn(Box::new(base), m, self.small()?)
            }
            "group" => match self.next()? {
                Token::Ident(w) => Family::Group(w),
                other => {
                    return Err(FamilyError::Parse(format!(
                        "expected a group name, got {other:?}"
                    )))
                }
            },
            "e" => Family::AdjoinIdentity(Box::new(self.family()?)),
            "theta" => Family::AdjoinZero(Box::new(self.family()?)),
            "mutant" => Family::Mutant(Box::new(self.family()?)),
            "op" => Family::Opposite(Box::new(self.family()?)),
            "clone" | "idemclone" => {
                let base = Box::new(self.family()?);
                self.expect(Token::Comma)?;
                let x = self.named_int("x")?;
                if name == "clone" {
                    Family::Clone { base, x }
                } else {
                    Family::IdemClone { base, x }
                }
            }
            "prod" | "stack" | "twist" | "unite" => {
                let a = Box::new(self.family()?);
                self.expect(Token::Comma)?;
                let b = Box::new(self.family()?);
                match name.as_str() {
                    "prod" => Family::DirectProduct(a, b),
                    "stack" => Family::Stack(a, b),
                    "twist" => Family::Twist(a, b),
                    _ => Family::Unite(a, b),
                }
            }
            "semistack" => {
                let n = self.small()?;
                self.expect(Token::Comma)?;
                let base = Box::new(self.family()?);
                self.expect(Token::Comma)?;
                match self.next()? {
                    Token::Ident(w) if w.eq_ignore_ascii_case("phi") => {}
                    other => {
                        return Err(FamilyError::Parse(format!(
                            "expected `phi=`, got {other:?}"
                        )))
                    }
                }
                self.expect(Token::Eq)?;
                self.expect(Token::LBracket)?;
                let mut phi = Vec::new();
                let mut current = Vec::new();
                loop {
                    match self.next()? {
                        Token::Int(v) => current.push(usize::try_from(v).map_err(|_| {
                            FamilyError::Parse(format!("{v} too large for a permutation image"))
                        })?),
                        Token::Semi => {
                            phi.push(std::mem::take(&mut current));
                        }
                        Token::RBracket => {
                            phi.push(current);
                            break;
                        }
                        other => {
                            return Err(FamilyError::Parse(format!(
                                "expected permutation images, got {other:?}"
                            )))
                        }
                    }
                }
                Family::SemiStack { n, base, phi }
            }
            "roster" => {
                let base = Box::new(self.family()?);
                self.expect(Token::Comma)?;
                let x = self.named_int("x")?;
                self.expect(Token::Comma)?;
                let h = self.named_set("H")?;
                self.expect(Token::Comma)?;
                let k = self.named_set("K")?;
                Family::Roster { base, x, h, k }
            }
            "rosterhat" => {
                let base = Box::new(self.family()?);
                self.expect(Token::Comma)?;
                let x = self.named_int("x")?;
                self.expect(Token::Comma)?;
                let h = self.named_set("H")?;
                Family::RosterHat { base, x, h }
            }
            other => return Err(FamilyError::Parse(format!("unknown constructor `{other}`"))),
        };
        self.expect(Token::RParen)?;
        Ok(fam)
    }
}

/// Parses a family expression in the spec mini-language.
pub fn parse(input: &str) -> Result<Family, FamilyError> {
    let tokens = lex(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    let fam = parser.family()?;
    if parser.pos != parser.tokens.len() {
        return Err(FamilyError::Parse(format!(
            "trailing input after expression: {:?}",
            &parser.tokens[parser.pos..]
        )));
    }
    Ok(fam)
}
