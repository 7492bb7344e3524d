use std::fmt;

use super::ast::Func;
use super::SyntaxError;
use crate::Brick;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Int(i64),
    Float(f64),
    Ident(String),
    Brick(Brick),
    Func(Func),
    True,
    False,
    If,
    Then,
    Else,
    Let,
    In,
    And,
    Or,
    Xor,
    Not,
    Div,
    Mod,
    Plus,
    Minus,
    Star,
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Int(v) => return write!(f, "integer `{v}`"),
            Tok::Float(v) => return write!(f, "float `{v:?}`"),
            Tok::Ident(s) => return write!(f, "identifier `{s}`"),
            Tok::Brick(b) => return write!(f, "brick `{b}`"),
            Tok::Func(func) => return write!(f, "function `{}`", func.name()),
            Tok::True => "`true`",
            Tok::False => "`false`",
            Tok::If => "`if`",
            Tok::Then => "`then`",
            Tok::Else => "`else`",
            Tok::Let => "`let`",
            Tok::In => "`in`",
            Tok::And => "`and`",
            Tok::Or => "`or`",
            Tok::Xor => "`xor`",
            Tok::Not => "`not`",
            Tok::Div => "`div`",
            Tok::Mod => "`mod`",
            Tok::Plus => "`+`",
            Tok::Minus => "`-`",
            Tok::Star => "`*`",
            Tok::Lt => "`<`",
            Tok::Le => "`<=`",
            Tok::Eq => "`=`",
            Tok::Ne => "`<>`",
            Tok::Ge => "`>=`",
            Tok::Gt => "`>`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

pub(crate) fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "true" => Tok::True,
        "false" => Tok::False,
        "if" => Tok::If,
        "then" => Tok::Then,
        "else" => Tok::Else,
        "let" => Tok::Let,
        "in" => Tok::In,
        "and" => Tok::And,
        "or" => Tok::Or,
        "xor" => Tok::Xor,
        "not" => Tok::Not,
        "div" => Tok::Div,
        "mod" => Tok::Mod,
        _ => {
            if let Some(f) = Func::from_name(word) {
                Tok::Func(f)
            } else {
                Tok::Brick(Brick::from_name(word)?)
            }
        }
    })
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Lexer<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn take_while(&mut self, buf: &mut String, pred: impl Fn(char) -> bool) {
        while let Some(c) = self.peek().filter(|&c| pred(c)) {
            buf.push(c);
            self.bump();
        }
    }

    fn error(&self, at: Pos, message: String) -> SyntaxError {
        SyntaxError {
            pos: at,
            message,
            expected: Vec::new(),
        }
    }

    fn number(&mut self, start: Pos, negative: bool) -> Result<Tok, SyntaxError> {
        let mut text = String::new();
        self.take_while(&mut text, |c| c.is_ascii_digit());
        let mut is_float = false;
        if self.peek() == Some('.') {
            is_float = true;
            text.push('.');
            self.bump();
            let before = text.len();
            self.take_while(&mut text, |c| c.is_ascii_digit());
            if text.len() == before {
                return Err(self.error(self.pos, "expected digits after `.`".into()));
            }
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            is_float = true;
            text.push('e');
            self.bump();
            if let Some(sign @ ('+' | '-')) = self.peek() {
                text.push(sign);
                self.bump();
            }
            let before = text.len();
            self.take_while(&mut text, |c| c.is_ascii_digit());
            if text.len() == before {
                return Err(self.error(self.pos, "expected exponent digits".into()));
            }
        }
        if is_float {
            let v: f64 = text
                .parse()
                .map_err(|_| self.error(start, format!("invalid float literal `{text}`")))?;
            if !v.is_finite() {
                return Err(self.error(start, format!("float literal `{text}` is out of range")));
            }
            Ok(Tok::Float(if negative { -v } else { v }))
        } else {
            let v: i128 = text
                .parse()
                .map_err(|_| self.error(start, format!("invalid integer literal `{text}`")))?;
            let v = if negative { -v } else { v };
            i64::try_from(v)
                .map(Tok::Int)
                .map_err(|_| self.error(start, format!("integer literal `{text}` is out of range")))
        }
    }

    fn next_token(&mut self) -> Result<(Tok, Pos), SyntaxError> {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while self.peek().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                }
                _ => break,
            }
        }
        let start = self.pos;
        let Some(c) = self.peek() else {
            return Ok((Tok::Eof, start));
        };
        let tok = if c.is_ascii_digit() {
            self.number(start, false)?
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            self.take_while(&mut word, |c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
            // `Pieces.BLUE` style qualified brick names.
            if word == "Pieces" && self.peek() == Some('.') {
                self.bump();
                let mut name = String::new();
                self.take_while(&mut name, |c| c.is_ascii_alphanumeric() || c == '_');
                match Brick::from_name(&name) {
                    Some(b) => Tok::Brick(b),
                    None => return Err(self.error(start, format!("unknown brick `Pieces.{name}`"))),
                }
            } else {
                keyword(&word).unwrap_or(Tok::Ident(word))
            }
        } else {
            self.bump();
            match c {
                '~' => {
                    if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.number(start, true)?
                    } else {
                        return Err(self.error(start, "`~` must prefix a numeric literal".into()));
                    }
                }
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '=' => Tok::Eq,
                '<' => match self.peek() {
                    Some('=') => {
                        self.bump();
                        Tok::Le
                    }
                    Some('>') => {
                        self.bump();
                        Tok::Ne
                    }
                    _ => Tok::Lt,
                },
                '>' => {
                    if self.peek() == Some('=') {
                        self.bump();
                        Tok::Ge
                    } else {
                        Tok::Gt
                    }
                }
                other => return Err(self.error(start, format!("unexpected character `{other}`"))),
            }
        };
        Ok((tok, start))
    }
}

/// Splits source text into tokens, ending with [`Tok::Eof`].
pub(crate) fn tokenize(src: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut lx = Lexer {
        chars: src.chars().peekable(),
        pos: Pos { line: 1, col: 1 },
    };
    let mut out = Vec::new();
    loop {
        let (tok, pos) = lx.next_token()?;
        let done = tok == Tok::Eof;
        out.push((tok, pos));
        if done {
            return Ok(out);
        }
    }
}
