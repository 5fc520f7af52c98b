use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Num(u64),
    OplusOp,
    OdotOp,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Plus,
    Minus,
    Star,
    Caret,
    Eq,
    Le,
    Ge,
    And,
    Or,
    Turnstile,
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Num(n) => format!("`{n}`"),
            Tok::End => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::OplusOp => "(+)",
            Tok::OdotOp => "(.)",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Dot => ".",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Caret => "^",
            Tok::Eq => "=",
            Tok::Le => "<=",
            Tok::Ge => ">=",
            Tok::And => "/\\",
            Tok::Or => "\\/",
            Tok::Turnstile => "|-",
            _ => "",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub fn syntax_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let rest = |k: usize| chars.get(i + k).copied();
        let (tok, width) = if c.is_ascii_digit() {
            let start = i;
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let text: String = chars[start..j].iter().collect();
            let n = text
                .parse()
                .map_err(|_| syntax_error(line, col, format!("numeral `{text}` out of range")))?;
            (Tok::Num(n), j - start)
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            (Tok::Ident(chars[start..j].iter().collect()), j - start)
        } else {
            match (c, rest(1), rest(2)) {
                ('(', Some('+'), Some(')')) => (Tok::OplusOp, 3),
                ('(', Some('.'), Some(')')) => (Tok::OdotOp, 3),
                ('<', Some('='), _) => (Tok::Le, 2),
                ('>', Some('='), _) => (Tok::Ge, 2),
                ('/', Some('\\'), _) => (Tok::And, 2),
                ('\\', Some('/'), _) => (Tok::Or, 2),
                ('|', Some('-'), _) => (Tok::Turnstile, 2),
                ('(', ..) => (Tok::LParen, 1),
                (')', ..) => (Tok::RParen, 1),
                ('[', ..) => (Tok::LBracket, 1),
                (']', ..) => (Tok::RBracket, 1),
                (',', ..) => (Tok::Comma, 1),
                ('.', ..) => (Tok::Dot, 1),
                ('+', ..) => (Tok::Plus, 1),
                ('-', ..) => (Tok::Minus, 1),
                ('*', ..) => (Tok::Star, 1),
                ('^', ..) => (Tok::Caret, 1),
                ('=', ..) => (Tok::Eq, 1),
                _ => return Err(syntax_error(line, col, format!("unexpected character `{c}`"))),
            }
        };
        out.push(Token { tok, line, column: col });
        i += width;
        col += width;
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}
