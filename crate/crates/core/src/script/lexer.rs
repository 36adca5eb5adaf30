use std::fmt;

use num_bigint::BigInt;

use super::{ParseError, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Assign,
    EqEq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Assign => write!(f, "`=`"),
            Tok::EqEq => write!(f, "`==`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

/// Splits source text into tokens. `#` and `//` start line comments.
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    let mut line = 1usize;
    let mut line_start = 0usize;
    while let Some(&(i, c)) = chars.peek() {
        let pos = Pos { line, col: src[line_start..i].chars().count() + 1 };
        if c == '\n' {
            chars.next();
            line += 1;
            line_start = i + 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c == '#' || (c == '/' && src[i..].starts_with("//")) {
            while let Some(&(_, d)) = chars.peek() {
                if d == '\n' {
                    break;
                }
                chars.next();
            }
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            let n: BigInt = src[i..end].parse().expect("digits");
            out.push(Token { tok: Tok::Int(n), pos });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            out.push(Token { tok: Tok::Ident(src[i..end].to_string()), pos });
            continue;
        }
        chars.next();
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '=' => {
                if matches!(chars.peek(), Some(&(_, '='))) {
                    chars.next();
                    Tok::EqEq
                } else {
                    Tok::Assign
                }
            }
            other => {
                return Err(ParseError::syntax(pos, format!("unexpected character `{other}`"), vec![]));
            }
        };
        out.push(Token { tok, pos });
    }
    let pos = Pos { line, col: src[line_start..].chars().count() + 1 };
    out.push(Token { tok: Tok::Eof, pos });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_comments() {
        let toks = tokenize("ring R = F101[x];  # comment\n  ideal I == (x^2);").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|t| &t.tok).collect();
        assert_eq!(kinds[0], &Tok::Ident("ring".into()));
        assert!(kinds.contains(&&Tok::EqEq));
        let ideal = toks.iter().find(|t| t.tok == Tok::Ident("ideal".into())).unwrap();
        assert_eq!(ideal.pos, Pos { line: 2, col: 3 });
    }

    #[test]
    fn rejects_stray_characters() {
        let err = tokenize("x $ y").unwrap_err();
        assert_eq!(err.pos(), Some(Pos { line: 1, col: 3 }));
    }
}
