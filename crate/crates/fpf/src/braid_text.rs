//! Braid words as text.
//!
//! Whitespace-separated signed generator indices, `4 3 -2` for σ₄σ₃σ₂⁻¹.
//! `D2` is the full twist and `D-2`, `D4`, ... its powers. A parenthesised
//! group takes a `^k` suffix, `(1 2)^5`. A free-standing `^k` raises the whole
//! word so far, so `1 2 3 4 ^3` is (σ₁σ₂σ₃σ₄)³.

use fpf_core::braid::{BraidError, BraidWord};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidParseError {
    #[error("at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("strand count needed for the full twist (use --strands)")]
    NoStrands,
    #[error("{0}")]
    Braid(#[from] BraidError),
}

#[derive(Debug, Clone)]
enum Item {
    Letter(i32),
    Twist(i64),
    Group(Vec<Item>),
    Power(Box<Item>, i64),
}

struct Lexer<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, BraidParseError> {
        Err(BraidParseError::Syntax { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.s[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.s[self.pos..].chars().next().unwrap().len_utf8();
        }
        self.pos > start
    }

    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn int(&mut self) -> Result<i64, BraidParseError> {
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        match self.s[start..self.pos].parse::<i64>() {
            Ok(v) => Ok(v),
            Err(_) => self.err(start, "expected an integer"),
        }
    }

    fn suffix(&mut self, item: Item) -> Result<Item, BraidParseError> {
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.int()?;
            return Ok(Item::Power(Box::new(item), k));
        }
        Ok(item)
    }

    fn items(&mut self, depth: usize) -> Result<Vec<Item>, BraidParseError> {
        let mut out: Vec<Item> = Vec::new();
        loop {
            let spaced = self.skip_ws();
            let pos = self.pos;
            match self.peek() {
                None => {
                    if depth > 0 {
                        return self.err(pos, "unclosed parenthesis");
                    }
                    return Ok(out);
                }
                Some(')') => {
                    if depth == 0 {
                        return self.err(pos, "unmatched ')'");
                    }
                    self.pos += 1;
                    return Ok(out);
                }
                Some('(') => {
                    self.pos += 1;
                    let g = self.items(depth + 1)?;
                    let g = self.suffix(Item::Group(g))?;
                    out.push(g);
                }
                Some('^') => {
                    if !spaced && !out.is_empty() {
                        return self.err(pos, "attach powers to a parenthesised group");
                    }
                    self.pos += 1;
                    let k = self.int()?;
                    let all = Item::Group(std::mem::take(&mut out));
                    out.push(Item::Power(Box::new(all), k));
                }
                Some('D') => {
                    self.pos += 1;
                    let k = self.int()?;
                    if k % 2 != 0 {
                        return self.err(pos, "full twist powers are D2, D-2, D4, ...");
                    }
                    let t = self.suffix(Item::Twist(k / 2))?;
                    out.push(t);
                }
                Some(c) if c == '-' || c == '+' || c.is_ascii_digit() => {
                    let v = self.int()?;
                    if v == 0 || v.unsigned_abs() > i32::MAX as u64 {
                        return self.err(pos, "generator index out of range");
                    }
                    if self.peek() == Some('^') {
                        return self.err(self.pos, "attach powers to a parenthesised group");
                    }
                    out.push(Item::Letter(v as i32));
                }
                Some(c) => return self.err(pos, format!("unexpected character {c:?}")),
            }
        }
    }
}

fn max_letter(items: &[Item]) -> (u32, bool) {
    let mut m = 0;
    let mut twist = false;
    for it in items {
        let (x, t) = match it {
            Item::Letter(l) => (l.unsigned_abs(), false),
            Item::Twist(_) => (0, true),
            Item::Group(g) => max_letter(g),
            Item::Power(i, _) => max_letter(std::slice::from_ref(i)),
        };
        m = m.max(x);
        twist |= t;
    }
    (m, twist)
}

fn expand(items: &[Item], n: usize, out: &mut Vec<i32>) {
    for it in items {
        match it {
            Item::Letter(l) => out.push(*l),
            Item::Twist(k) => out.extend_from_slice(BraidWord::full_twist(n).pow(*k).letters()),
            Item::Group(g) => expand(g, n, out),
            Item::Power(i, k) => {
                let mut inner = Vec::new();
                expand(std::slice::from_ref(i), n, &mut inner);
                let w = if *k < 0 { inner.iter().rev().map(|l| -l).collect() } else { inner };
                for _ in 0..k.unsigned_abs() {
                    out.extend_from_slice(&w);
                }
            }
        }
    }
}

/// Parse with an explicit strand count, or the smallest one the letters
/// need (at least 2).
pub fn parse_braid(s: &str, strands: Option<usize>) -> Result<BraidWord, BraidParseError> {
    let mut lx = Lexer { s, pos: 0 };
    let items = lx.items(0)?;
    let (m, twist) = max_letter(&items);
    let n = match strands {
        Some(n) => n,
        None if twist && m == 0 => return Err(BraidParseError::NoStrands),
        None => (m as usize + 1).max(2),
    };
    let mut letters = Vec::new();
    if n >= 2 {
        expand(&items, n, &mut letters);
    }
    Ok(BraidWord::new(n, letters)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(s: &str, n: Option<usize>) -> Vec<i32> {
        parse_braid(s, n).unwrap().letters().to_vec()
    }

    #[test]
    fn forms() {
        assert_eq!(letters("4 3 4 3 -2 -1 -2 -1", None), vec![4, 3, 4, 3, -2, -1, -2, -1]);
        assert_eq!(parse_braid("1 2 3 4 ^3", None).unwrap().len(), 12);
        assert_eq!(letters("(1 2)^2 3", None), vec![1, 2, 1, 2, 3]);
        assert_eq!(letters("(1 -2)^-1", None), vec![2, -1]);
        assert_eq!(parse_braid("D2", Some(3)).unwrap().letters(), BraidWord::full_twist(3).letters());
        assert_eq!(parse_braid("D-2 1", None).unwrap().len(), 3);
        assert_eq!(parse_braid("", None).unwrap().strands(), 2);
        assert_eq!(parse_braid("1", Some(5)).unwrap().strands(), 5);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_braid("1 2 x", None), Err(BraidParseError::Syntax { pos: 4, msg: "unexpected character 'x'".into() }));
        assert!(matches!(parse_braid("(1 2", None), Err(BraidParseError::Syntax { pos: 4, .. })));
        assert!(matches!(parse_braid("1 0", None), Err(BraidParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_braid("1^2", None), Err(BraidParseError::Syntax { pos: 1, .. })));
        assert_eq!(parse_braid("D2", None), Err(BraidParseError::NoStrands));
        assert!(matches!(parse_braid("4", Some(3)), Err(BraidParseError::Braid(_))));
    }
}
