//! Arithmetic expressions for numeric arguments, e.g. `(log 7)/2`,
//! `pi/2 - 0.1`, `2*asinh(0.5)` or `1e-3`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := apply ('^' unary)?
//! apply := NAME apply | atom        (NAME a function)
//! atom  := NUMBER | NAME | '(' expr ')'
//! ```
//!
//! A function applies to the next atom, so `log 7/2` is `(log 7)/2`.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub input: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse {:?}: {}", self.input, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(f64),
    Name(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            // Exponent, only when followed by digits so that `2e` stays an error.
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            let v = text.parse::<f64>().map_err(|_| format!("bad number {text:?}"))?;
            out.push(Token::Num(v));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Name(chars[start..i].iter().collect::<String>().to_lowercase()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

fn function(name: &str) -> Option<fn(f64) -> f64> {
    Some(match name {
        "log" | "ln" => f64::ln,
        "exp" => f64::exp,
        "sqrt" => f64::sqrt,
        "sin" => f64::sin,
        "cos" => f64::cos,
        "tan" => f64::tan,
        "sinh" => f64::sinh,
        "cosh" => f64::cosh,
        "tanh" => f64::tanh,
        "asinh" => f64::asinh,
        "acosh" => f64::acosh,
        "atanh" => f64::atanh,
        "acos" => f64::acos,
        "asin" => f64::asin,
        "atan" => f64::atan,
        _ => return None,
    })
}

fn constant(name: &str) -> Option<f64> {
    match name {
        "pi" => Some(std::f64::consts::PI),
        "e" => Some(std::f64::consts::E),
        _ => None,
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<f64, String> {
        let mut v = self.term()?;
        loop {
            if self.eat('+') {
                v += self.term()?;
            } else if self.eat('-') {
                v -= self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<f64, String> {
        let mut v = self.unary()?;
        loop {
            if self.eat('*') {
                v *= self.unary()?;
            } else if self.eat('/') {
                v /= self.unary()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> Result<f64, String> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<f64, String> {
        let base = self.apply()?;
        if self.eat('^') {
            Ok(base.powf(self.unary()?))
        } else {
            Ok(base)
        }
    }

    fn apply(&mut self) -> Result<f64, String> {
        if let Some(Token::Name(n)) = self.peek() {
            if let Some(f) = function(n) {
                self.pos += 1;
                return Ok(f(self.apply()?));
            }
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<f64, String> {
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(v)
            }
            Some(Token::Name(n)) => {
                self.pos += 1;
                constant(&n).ok_or_else(|| format!("unknown name {n:?}"))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err("missing ')'".into());
                }
                Ok(v)
            }
            Some(Token::Op(c)) => Err(format!("unexpected {c:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

/// Evaluates an arithmetic expression to a finite number.
pub fn eval(input: &str) -> Result<f64, ParseError> {
    let err = |message: String| ParseError {
        input: input.to_string(),
        message,
    };
    let tokens = tokenize(input).map_err(err)?;
    let mut p = Parser { tokens, pos: 0 };
    let v = p.expr().map_err(err)?;
    if p.pos != p.tokens.len() {
        return Err(err(format!("trailing input after token {}", p.pos)));
    }
    if !v.is_finite() {
        return Err(err(format!("value {v} is not finite")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let l7 = 7f64.ln();
        assert_eq!(eval("(log 7)/2").unwrap(), l7 / 2.0);
        assert_eq!(eval("log 7/2").unwrap(), l7 / 2.0);
        assert_eq!(eval("log(7) / 2").unwrap(), l7 / 2.0);
        assert_eq!(eval("0.97296").unwrap(), 0.97296);
        assert_eq!(eval("-1.5e-3").unwrap(), -1.5e-3);
        assert_eq!(eval("2^-1").unwrap(), 0.5);
        assert_eq!(eval("-2^2").unwrap(), -4.0);
        assert_eq!(eval("1 - 2 - 3").unwrap(), -4.0);
        assert_eq!(eval("8/2/2").unwrap(), 2.0);
        assert_eq!(eval("pi/2").unwrap(), std::f64::consts::FRAC_PI_2);
        assert_eq!(eval("2*asinh(0.5)").unwrap(), 2.0 * 0.5f64.asinh());
        assert!((eval("cosh log 2").unwrap() - 1.25).abs() < 1e-15);
    }

    #[test]
    fn errors() {
        for bad in ["", "(1", "1)", "2e", "foo", "1 2", "log", "1/0", "log 0", "3 $ 4"] {
            assert!(eval(bad).is_err(), "{bad}");
        }
    }
}
