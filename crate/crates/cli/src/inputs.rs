//! Parsers for the small declarative input languages of the CLI: named
//! relations and sequences, named predicates, rational expressions, and
//! file loading.

use std::path::Path;

use exactlab_core::analysis::{sampled_from_csv, sampled_from_json, SampledFunction};
use exactlab_core::metric::CauchyPoint;
use exactlab_core::numbers::{CauchyReal, Rational};
use exactlab_core::quotient::EquivalenceRelation;

use crate::DomainError;

pub fn load_text(path: &str) -> Result<String, DomainError> {
    std::fs::read_to_string(path)
        .map_err(|e| DomainError(format!("cannot read {path}: {e}")))
}

pub fn load_json(path: &str) -> Result<serde_json::Value, DomainError> {
    serde_json::from_str(&load_text(path)?)
        .map_err(|e| DomainError(format!("cannot parse {path} as JSON: {e}")))
}

/// Loads a sampled function from `.json` or `.csv` by extension.
pub fn load_sampled(path: &str) -> Result<SampledFunction, DomainError> {
    let text = load_text(path)?;
    let is_csv = Path::new(path)
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let parsed = if is_csv {
        sampled_from_csv(&text)
    } else {
        sampled_from_json(&text)
    };
    parsed.map_err(|e| DomainError(format!("cannot load {path}: {e}")))
}

pub fn parse_rational(s: &str) -> Result<Rational, DomainError> {
    s.parse()
        .map_err(|e| DomainError(format!("bad rational {s:?}: {e}")))
}

/// Comma-separated integers, e.g. `-2,-1,0,1,2`.
pub fn parse_carrier(s: &str) -> Result<Vec<i64>, DomainError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| DomainError(format!("bad carrier element {t:?}: {e}")))
        })
        .collect()
}

/// Named relations on integers: `equality`, `square`, `mod:<k>`, `le`.
pub fn parse_relation(name: &str) -> Result<EquivalenceRelation<i64>, DomainError> {
    if let Some(k) = name.strip_prefix("mod:") {
        let k: i64 = k
            .parse()
            .map_err(|e| DomainError(format!("bad modulus {k:?}: {e}")))?;
        if k < 1 {
            return Err(DomainError("modulus must be >= 1".into()));
        }
        return Ok(EquivalenceRelation::new(move |x: &i64, y: &i64| {
            (x - y).rem_euclid(k) == 0
        }));
    }
    match name {
        "equality" => Ok(EquivalenceRelation::new(|x: &i64, y: &i64| x == y)),
        "square" => Ok(EquivalenceRelation::new(|x: &i64, y: &i64| x * x == y * y)),
        "le" => Ok(EquivalenceRelation::new(|x: &i64, y: &i64| x <= y)),
        other => Err(DomainError(format!(
            "unknown relation {other:?}; expected equality, square, mod:<k> or le"
        ))),
    }
}

/// Named computable reals: `const:<q>` and `recip-succ` (the sequence
/// `1/(k+1)` with its explicit modulus).
pub fn parse_real(spec: &str) -> Result<CauchyReal, DomainError> {
    if let Some(q) = spec.strip_prefix("const:") {
        return Ok(CauchyReal::constant(parse_rational(q)?));
    }
    match spec {
        "recip-succ" => Ok(CauchyReal::from_sequence(
            |k| Rational::ratio(1, k as i64 + 1),
            recip_succ_modulus,
        )
        .expect("the shrinking sequence satisfies its modulus")),
        other => Err(DomainError(format!(
            "unknown real {other:?}; expected const:<q> or recip-succ"
        ))),
    }
}

/// `N(eps) = max(ceil(3/eps), 1)` for the sequence `1/(k+1)`.
pub fn recip_succ_modulus(eps: &Rational) -> u64 {
    (&Rational::from_int(3) / eps).ceil_u64().max(1)
}

/// Named Cauchy points on the rational line, mirroring [`parse_real`].
pub fn parse_cauchy_point(spec: &str) -> Result<CauchyPoint<Rational>, DomainError> {
    if let Some(q) = spec.strip_prefix("const:") {
        return Ok(CauchyPoint::constant(parse_rational(q)?));
    }
    match spec {
        "recip-succ" => Ok(exactlab_core::metric::vanishing_sequence()),
        other => Err(DomainError(format!(
            "unknown point {other:?}; expected const:<q> or recip-succ"
        ))),
    }
}

pub type RationalPredicate = Box<dyn Fn(&Rational) -> bool + Send + Sync>;

/// Named monotone predicates for the bisection supremum:
/// `ge:<q>` is `q' >= q`, and `sq_ge:<c>` is `q' >= 0 and q'^2 >= c`.
pub fn parse_predicate(spec: &str) -> Result<RationalPredicate, DomainError> {
    if let Some(q) = spec.strip_prefix("ge:") {
        let bound = parse_rational(q)?;
        return Ok(Box::new(move |x: &Rational| x >= &bound));
    }
    if let Some(c) = spec.strip_prefix("sq_ge:") {
        let bound = parse_rational(c)?;
        return Ok(Box::new(move |x: &Rational| {
            !x.is_negative() && (x * x) >= bound
        }));
    }
    Err(DomainError(format!(
        "unknown predicate {spec:?}; expected ge:<q> or sq_ge:<c>"
    )))
}

/// A little exact calculator: `+ - * /`, unary minus, parentheses and
/// integer literals. Division is exact, so `1/2 + 1/3` is `5/6`.
pub fn eval_rational_expr(text: &str) -> Result<Rational, DomainError> {
    let tokens = tokenize(text)?;
    let mut parser = ExprParser { tokens, pos: 0 };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(DomainError(format!(
            "unexpected trailing input near token {}",
            parser.pos
        )));
    }
    Ok(value)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>, DomainError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            d if d.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n: i64 = digits
                    .parse()
                    .map_err(|e| DomainError(format!("bad integer {digits:?}: {e}")))?;
                out.push(Token::Number(Rational::from_int(n)));
            }
            other => {
                return Err(DomainError(format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(out)
}

struct ExprParser {
    tokens: Vec<Token>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<Rational, DomainError> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Token::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Rational, DomainError> {
        let mut acc = self.factor()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Token::Star => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Token::Slash => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc
                        .checked_div(&rhs)
                        .map_err(|e| DomainError(e.to_string()))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Rational, DomainError> {
        match self.peek().cloned() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(Token::Number(q)) => {
                self.pos += 1;
                Ok(q)
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::Close) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(DomainError("missing closing parenthesis".into())),
                }
            }
            other => Err(DomainError(format!("expected a value, found {other:?}"))),
        }
    }
}
