//! Recursive-descent parsers for set expressions and grade expressions.
//!
//! ```text
//! expr   := term ("|" term)*
//! term   := factor ("&" factor)*
//! factor := "!" factor | "(" expr ")" | interval | points | "QQ" | "II"
//! interval := ("[" | "(") rat "," rat ("]" | ")")
//! points := "{" rat ("," rat)* "}"
//! rat    := decimal | int "/" int
//!
//! grade  := "id" | "const(" rat ")" | "singleton(" rat ")" | "below(" rat ")"
//!         | "chi(" expr ")" | "delta(" expr ")"
//!         | "max(" grade "," grade ")" | "min(" grade "," grade ")"
//!         | "pw(" piece (";" piece)* ")"
//! piece  := atom ":" map
//! atom   := interval ("&" ("QQ" | "II"))? | "{" rat "}"
//! map    := ["-"] mterm (("+" | "-") mterm)*
//! mterm  := rat | "t" | rat "*" "t"
//! ```
//!
//! Positions in errors are 1-based character columns.

use fuzzlat::piecewise::{characteristic, delta_of_set, grade_constructor, pw_max, pw_min, Affine, GradeShape, Piece, PiecewiseFn};
use fuzzlat::{Atom, Rat, RealSubset, Tag};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("value {value} at column {pos} lies outside [0,1]")]
    Range { pos: usize, value: String },
    #[error("empty atom at column {pos}: {text}")]
    EmptyAtom { pos: usize, text: String },
    #[error("invalid grade at column {pos}: {msg}")]
    Grade { pos: usize, msg: String },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::Range { pos, .. }
            | ParseError::EmptyAtom { pos, .. }
            | ParseError::Grade { pos, .. } => *pos,
        }
    }
}

/// Abstract syntax of a set expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetExpr {
    Interval { lo: Rat, hi: Rat, lo_closed: bool, hi_closed: bool },
    Points(Vec<Rat>),
    Rationals,
    Irrationals,
    Union(Box<SetExpr>, Box<SetExpr>),
    Intersect(Box<SetExpr>, Box<SetExpr>),
    Complement(Box<SetExpr>),
}

impl SetExpr {
    pub fn eval(&self) -> RealSubset {
        match self {
            SetExpr::Interval { lo, hi, lo_closed, hi_closed } => {
                RealSubset::interval(lo.clone(), hi.clone(), *lo_closed, *hi_closed, Tag::All).expect("checked by the parser")
            }
            SetExpr::Points(ps) => RealSubset::points(ps.iter().cloned()).expect("checked by the parser"),
            SetExpr::Rationals => RealSubset::rationals(),
            SetExpr::Irrationals => RealSubset::irrationals(),
            SetExpr::Union(a, b) => a.eval().union(&b.eval()),
            SetExpr::Intersect(a, b) => a.eval().intersect(&b.eval()),
            SetExpr::Complement(a) => a.eval().complement(),
        }
    }
}

pub fn parse_set_ast(text: &str) -> Result<SetExpr, ParseError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses and canonicalizes a set expression.
pub fn parse_set_expr(text: &str) -> Result<RealSubset, ParseError> {
    parse_set_ast(text).map(|e| e.eval())
}

pub fn parse_grade_expr(text: &str) -> Result<PiecewiseFn, ParseError> {
    let mut p = Parser::new(text);
    let g = p.grade()?;
    p.finish()?;
    Ok(g)
}

/// A single rational in `[0,1]`.
pub fn parse_unit_rat(text: &str) -> Result<Rat, ParseError> {
    let mut p = Parser::new(text);
    let r = p.unit_rat()?;
    p.finish()?;
    Ok(r)
}

/// A cursor over the input shared by the set, grade and document parsers.
pub(crate) struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    pub(crate) fn new(src: &str) -> Parser {
        Parser { chars: src.chars().collect(), pos: 0 }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.column(), msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.syntax(format!("expected `{c}`, found `{found}`")),
                None => self.syntax(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let w: Vec<char> = word.chars().collect();
        if self.chars[self.pos..].starts_with(&w) {
            let next = self.chars.get(self.pos + w.len());
            if !next.is_some_and(|c| c.is_alphanumeric() || *c == '_') {
                self.pos += w.len();
                return true;
            }
        }
        false
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.syntax(format!("unexpected `{c}`")),
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// An identifier: letters, digits and `_`.
    pub(crate) fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected a name");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn rat(&mut self) -> Result<(usize, Rat), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == '.' || *c == '/') {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if text.is_empty() || text == "-" {
            self.pos = start;
            return self.syntax("expected a number");
        }
        match text.parse::<Rat>() {
            Ok(r) => Ok((start + 1, r)),
            Err(e) => Err(ParseError::Syntax { pos: start + 1, msg: e.to_string() }),
        }
    }

    pub(crate) fn unit_rat(&mut self) -> Result<Rat, ParseError> {
        let (pos, r) = self.rat()?;
        if !r.in_unit() {
            return Err(ParseError::Range { pos, value: r.to_string() });
        }
        Ok(r)
    }

    pub(crate) fn expr(&mut self) -> Result<SetExpr, ParseError> {
        let mut e = self.term()?;
        while self.eat('|') {
            e = SetExpr::Union(Box::new(e), Box::new(self.term()?));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<SetExpr, ParseError> {
        let mut e = self.factor()?;
        while self.eat('&') {
            e = SetExpr::Intersect(Box::new(e), Box::new(self.factor()?));
        }
        Ok(e)
    }

    /// Does a `(` at the cursor open an interval rather than a group?
    fn paren_starts_interval(&mut self) -> bool {
        let mut k = self.pos + 1;
        while self.chars.get(k).is_some_and(|c| c.is_whitespace()) {
            k += 1;
        }
        self.chars.get(k).is_some_and(|c| c.is_ascii_digit() || *c == '.' || *c == '-')
    }

    fn factor(&mut self) -> Result<SetExpr, ParseError> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(SetExpr::Complement(Box::new(self.factor()?)))
            }
            Some('(') if !self.paren_starts_interval() => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[' | '(') => self.interval(),
            Some('{') => self.points(),
            Some('Q') if self.eat_word("QQ") => Ok(SetExpr::Rationals),
            Some('I') if self.eat_word("II") => Ok(SetExpr::Irrationals),
            Some(c) => self.syntax(format!("unexpected `{c}`")),
            None => self.syntax("unexpected end of input"),
        }
    }

    fn interval(&mut self) -> Result<SetExpr, ParseError> {
        self.skip_ws();
        let start = self.column();
        let lo_closed = self.chars[self.pos] == '[';
        self.pos += 1;
        let lo = self.unit_rat()?;
        self.expect(',')?;
        let hi = self.unit_rat()?;
        let hi_closed = match self.peek() {
            Some(']') => true,
            Some(')') => false,
            _ => return self.syntax("expected `]` or `)`"),
        };
        self.pos += 1;
        if lo > hi || (lo == hi && !(lo_closed && hi_closed)) {
            let text = format!("{}{lo},{hi}{}", if lo_closed { '[' } else { '(' }, if hi_closed { ']' } else { ')' });
            return Err(ParseError::EmptyAtom { pos: start, text });
        }
        Ok(SetExpr::Interval { lo, hi, lo_closed, hi_closed })
    }

    fn points(&mut self) -> Result<SetExpr, ParseError> {
        let start = self.column();
        self.expect('{')?;
        if self.eat('}') {
            return Err(ParseError::EmptyAtom { pos: start, text: "{}".into() });
        }
        let mut ps = vec![self.unit_rat()?];
        while self.eat(',') {
            ps.push(self.unit_rat()?);
        }
        self.expect('}')?;
        Ok(SetExpr::Points(ps))
    }

    pub(crate) fn grade(&mut self) -> Result<PiecewiseFn, ParseError> {
        self.skip_ws();
        let start = self.column();
        let name = self.ident()?;
        if name == "id" {
            return Ok(PiecewiseFn::identity());
        }
        self.expect('(')?;
        let g = match name.as_str() {
            "const" | "singleton" | "below" => {
                let shape = match name.as_str() {
                    "const" => GradeShape::Const,
                    "singleton" => GradeShape::Singleton,
                    _ => GradeShape::Below,
                };
                let a = self.unit_rat()?;
                grade_constructor(&a, shape).expect("checked range")
            }
            "chi" => characteristic(&self.expr()?.eval()),
            "delta" => {
                let set = self.expr()?.eval();
                delta_of_set(&set).map_err(|e| ParseError::Grade { pos: start, msg: e.to_string() })?
            }
            "max" | "min" => {
                let f = self.grade()?;
                self.expect(',')?;
                let g = self.grade()?;
                if name == "max" {
                    pw_max(&f, &g)
                } else {
                    pw_min(&f, &g)
                }
            }
            "pw" => {
                let mut pieces = vec![self.piece()?];
                while self.eat(';') {
                    pieces.push(self.piece()?);
                }
                PiecewiseFn::from_pieces(&pieces).map_err(|e| ParseError::Grade { pos: start, msg: e.to_string() })?
            }
            other => {
                return Err(ParseError::Syntax { pos: start, msg: format!("unknown grade constructor `{other}`") });
            }
        };
        self.expect(')')?;
        Ok(g)
    }

    fn piece(&mut self) -> Result<Piece, ParseError> {
        let start = self.column();
        let atom = match self.peek() {
            Some('{') => {
                self.pos += 1;
                let p = self.unit_rat()?;
                self.expect('}')?;
                Atom::point(p).expect("checked range")
            }
            Some('[' | '(') => {
                let SetExpr::Interval { lo, hi, lo_closed, hi_closed } = self.interval()? else {
                    unreachable!("interval() returns intervals")
                };
                let tag = if !self.eat('&') {
                    Tag::All
                } else if self.eat_word("QQ") {
                    Tag::QOnly
                } else if self.eat_word("II") {
                    Tag::IOnly
                } else {
                    return self.syntax("expected `QQ` or `II`");
                };
                Atom::new(lo, hi, lo_closed, hi_closed, tag).map_err(|e| ParseError::EmptyAtom { pos: start, text: e.to_string() })?
            }
            _ => return self.syntax("expected a piece atom"),
        };
        self.expect(':')?;
        let map = self.map()?;
        Ok(Piece { atom, map })
    }

    fn map(&mut self) -> Result<Affine, ParseError> {
        let (mut slope, mut offset) = (Rat::zero(), Rat::zero());
        let mut negate = self.eat('-');
        loop {
            let (s, o) = self.map_term()?;
            if negate {
                slope = slope - s;
                offset = offset - o;
            } else {
                slope = slope + s;
                offset = offset + o;
            }
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(Affine::new(slope, offset));
            }
        }
    }

    fn map_term(&mut self) -> Result<(Rat, Rat), ParseError> {
        if self.eat_word("t") {
            return Ok((Rat::one(), Rat::zero()));
        }
        if self.peek() == Some('-') {
            return self.syntax("unexpected `-`");
        }
        let (_, c) = self.rat()?;
        if self.eat('*') {
            if !self.eat_word("t") {
                return self.syntax("expected `t`");
            }
            return Ok((c, Rat::zero()));
        }
        Ok((Rat::zero(), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fuzzlat::grade_lattices::{xi, Interval};
    use fuzzlat::rat;

    #[test]
    fn decimals_are_exact() {
        let s = parse_set_expr("[0.3, 0.7]").unwrap();
        assert_eq!(s, RealSubset::closed_interval(rat(3, 10), rat(7, 10)).unwrap());
        assert_eq!(s.to_string(), "[3/10,7/10]");
    }

    #[test]
    fn xi_image_parses() {
        let s = parse_set_expr("([0,1/5]&QQ)|([0,1/2]&II)").unwrap();
        assert_eq!(s, xi(&Interval::new(rat(1, 5), rat(1, 2)).unwrap()));
    }

    #[test]
    fn paren_after_number_is_an_interval() {
        assert_eq!(parse_set_expr("(0.2,0.5)").unwrap().to_string(), "(1/5,1/2)");
        assert_eq!(parse_set_expr("( [0,1] & QQ )").unwrap(), RealSubset::rationals());
    }

    #[test]
    fn complement_binds_tighter_than_operators() {
        let s = parse_set_expr("![0,1/2] | {1/4}").unwrap();
        assert_eq!(s.to_string(), "{1/4} | (1/2,1]");
    }

    #[test]
    fn errors_are_classified() {
        assert!(matches!(parse_set_expr("[0.4,0.2]"), Err(ParseError::EmptyAtom { pos: 1, .. })));
        assert!(matches!(parse_set_expr("{}"), Err(ParseError::EmptyAtom { .. })));
        assert!(matches!(parse_set_expr("(1/2,1/2]"), Err(ParseError::EmptyAtom { .. })));
        assert!(matches!(parse_set_expr("[0, 1.5]"), Err(ParseError::Range { pos: 5, .. })));
        assert!(matches!(parse_set_expr("[-0.1,0]"), Err(ParseError::Range { .. })));
        assert!(matches!(parse_set_expr("[0,1] |"), Err(ParseError::Syntax { pos: 8, .. })));
        assert!(matches!(parse_set_expr("[0,1/0]"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_set_expr("QQQ"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn grade_expressions_round_trip() {
        for text in ["const(1/2)", "delta([0.3,0.4]|{0.6})", "max(id, const(0.2))", "chi((0,1/2)&II)", "min(singleton(1), below(1/3))"] {
            let g = parse_grade_expr(text).unwrap();
            assert_eq!(parse_grade_expr(&g.to_string()).unwrap(), g, "{text} -> {g}");
        }
    }

    #[test]
    fn pw_maps_parse() {
        let g = parse_grade_expr("pw([0,1/2]: 2*t; (1/2,1]: -t + 3/2)").unwrap();
        assert_eq!(g.eval(&rat(1, 4)), rat(1, 2));
        assert_eq!(g.eval(&rat(3, 4)), rat(3, 4));
        assert!(matches!(parse_grade_expr("pw([0,1/2]: t)"), Err(ParseError::Grade { .. })));
        assert!(matches!(parse_grade_expr("pw([0,1]: 2*t)"), Err(ParseError::Grade { .. })));
        assert!(matches!(parse_grade_expr("const(2)"), Err(ParseError::Range { .. })));
        assert!(matches!(parse_grade_expr("tri(1)"), Err(ParseError::Syntax { pos: 1, .. })));
    }
}
