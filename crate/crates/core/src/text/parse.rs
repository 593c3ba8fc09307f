use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::lang::{Program, Rule, SymbolTable};

/// A syntax error, located at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {expected}, found {found}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Atom(String),
    Not,
    Neck,
    Comma,
    Period,
    Eof,
    Invalid(String),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Atom(name) => write!(f, "atom `{name}`"),
            Token::Not => f.write_str("`not`"),
            Token::Neck => f.write_str("`:-`"),
            Token::Comma => f.write_str("`,`"),
            Token::Period => f.write_str("`.`"),
            Token::Eof => f.write_str("end of input"),
            Token::Invalid(text) => write!(f, "`{text}`"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Returns the next token with the position of its first character.
    fn next_token(&mut self) -> (Token, usize, usize) {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('%') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
        let (line, column) = (self.line, self.column);
        let token = match self.bump() {
            None => Token::Eof,
            Some(',') => Token::Comma,
            Some('.') => Token::Period,
            Some(':') => {
                if self.chars.peek() == Some(&'-') {
                    self.bump();
                    Token::Neck
                } else {
                    Token::Invalid(":".into())
                }
            }
            Some(c) if c.is_ascii_alphanumeric() || c == '_' => {
                let mut word = String::from(c);
                while let Some(&c) = self.chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if word == "not" {
                    Token::Not
                } else if c.is_ascii_lowercase() {
                    Token::Atom(word)
                } else {
                    Token::Invalid(word)
                }
            }
            Some(c) => Token::Invalid(c.to_string()),
        };
        (token, line, column)
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    current: (Token, usize, usize),
    symbols: SymbolTable,
}

impl Parser<'_> {
    fn advance(&mut self) -> Token {
        let next = self.lexer.next_token();
        std::mem::replace(&mut self.current, next).0
    }

    fn error(&self, expected: &str) -> ParseError {
        let (token, line, column) = &self.current;
        ParseError {
            line: *line,
            column: *column,
            expected: expected.to_owned(),
            found: token.to_string(),
        }
    }

    fn atom(&mut self) -> Result<crate::lang::Atom, ParseError> {
        match &self.current.0 {
            Token::Atom(_) => match self.advance() {
                Token::Atom(name) => Ok(self.symbols.intern(&name)),
                _ => unreachable!(),
            },
            _ => Err(self.error("an atom")),
        }
    }

    fn rule(&mut self) -> Result<Rule, ParseError> {
        let head = self.atom()?;
        let mut rule = Rule::fact(head);
        match self.current.0 {
            Token::Period => {}
            Token::Neck => loop {
                self.advance();
                if self.current.0 == Token::Not {
                    self.advance();
                    let atom = self.atom()?;
                    rule.neg.insert(atom);
                } else {
                    let atom = self.atom()?;
                    rule.pos.insert(atom);
                }
                match self.current.0 {
                    Token::Comma => continue,
                    Token::Period => break,
                    _ => return Err(self.error("`,` or `.`")),
                }
            },
            _ => return Err(self.error("`:-` or `.`")),
        }
        self.advance();
        Ok(rule)
    }
}

/// Parses the `.lp` format:
///
/// ```text
/// rule    := atom (":-" literal ("," literal)*)? "."
/// literal := atom | "not" atom
/// atom    := [a-z][a-zA-Z0-9_]*
/// ```
///
/// `%` starts a comment running to the end of the line. Atoms are interned
/// in order of first appearance.
pub fn parse(text: &str) -> Result<Program, ParseError> {
    let mut lexer = Lexer::new(text);
    let current = lexer.next_token();
    let mut parser = Parser {
        lexer,
        current,
        symbols: SymbolTable::new(),
    };
    let mut rules = Vec::new();
    while parser.current.0 != Token::Eof {
        rules.push(parser.rule()?);
    }
    Ok(Program::new(Arc::new(parser.symbols), rules))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dix_program() {
        let p = parse("a :- not b.\nb :- c, not a.\nc :- a.").unwrap();
        assert_eq!(p.len(), 3);
        let (a, b, c) = (
            p.atom("a").unwrap(),
            p.atom("b").unwrap(),
            p.atom("c").unwrap(),
        );
        assert!(p.contains(&Rule::new(a, [], [b])));
        assert!(p.contains(&Rule::new(b, [c], [a])));
        assert!(p.contains(&Rule::new(c, [a], [])));
        // interned in order of first appearance
        assert_eq!((a.index(), b.index(), c.index()), (0, 1, 2));
    }

    #[test]
    fn parses_fact_and_comments() {
        let p = parse("% a fact\nc. % trailing\n").unwrap();
        let c = p.atom("c").unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.contains(&Rule::fact(c)));
        assert!(parse("  \n% nothing\n").unwrap().is_empty());
    }

    #[test]
    fn missing_period_reports_end_of_input() {
        let err = parse("a :- not b").unwrap_err();
        assert_eq!((err.line, err.column), (1, 11));
        assert_eq!(err.found, "end of input");
    }

    #[test]
    fn reports_line_and_column() {
        let err = parse("a.\nb :- c,, d.").unwrap_err();
        assert_eq!((err.line, err.column), (2, 8));
        assert_eq!(err.found, "`,`");
        assert_eq!(err.expected, "an atom");

        let err = parse("Foo.").unwrap_err();
        assert_eq!((err.line, err.column), (1, 1));
        assert_eq!(err.found, "`Foo`");

        let err = parse("a :- not not b.").unwrap_err();
        assert_eq!(err.column, 10);

        let err = parse("not.").unwrap_err();
        assert_eq!(err.found, "`not`");

        let err = parse("a : b.").unwrap_err();
        assert_eq!((err.column, err.found.as_str()), (3, "`:`"));

        let err = parse("a b.").unwrap_err();
        assert_eq!(err.expected, "`:-` or `.`");
    }

    #[test]
    fn not_prefix_is_an_ordinary_atom() {
        let p = parse("nota :- not notb.").unwrap();
        assert!(p.atom("nota").is_some());
        assert!(p.atom("notb").is_some());
    }
}
