//! Text syntax for signed words.
//!
//! A word is a whitespace separated list of tokens `sK` or `sK^-1`
//! (1-based `K`). Tokens `Δ^k`, `D^k`, `Δ` and `D` stand for powers of the
//! Garside element, and the characters `·`, `(` and `)` are ignored, so the
//! printed normal form of an element parses back to the same element.

use crate::context::Group;
use crate::coxeter::GeneratorId;
use crate::error::{Error, Result};

use super::{GroupElement, Letter};

enum Token {
    Letter(Letter),
    Delta(i64),
}

fn parse_token(ctx: &Group, tok: &str) -> Result<Token> {
    let bad = || Error::Parse(format!("invalid token `{tok}`"));
    for prefix in ["Δ", "D"] {
        if let Some(rest) = tok.strip_prefix(prefix) {
            if rest.is_empty() {
                return Ok(Token::Delta(1));
            }
            let exp = rest.strip_prefix('^').ok_or_else(bad)?;
            return exp.parse().map(Token::Delta).map_err(|_| bad());
        }
    }
    let body = tok.strip_prefix('s').ok_or_else(bad)?;
    let (digits, inverse) = match body.split_once('^') {
        Some((d, "-1")) => (d, true),
        Some((d, "1")) => (d, false),
        Some(_) => return Err(bad()),
        None => (body, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let k: usize = digits.parse().map_err(|_| bad())?;
    if k == 0 || k > ctx.rank() {
        return Err(Error::Parse(format!("generator `{tok}` out of range for rank {}", ctx.rank())));
    }
    Ok(Token::Letter(Letter { generator: GeneratorId((k - 1) as u8), inverse }))
}

/// Parses a word into its letters, expanding `Δ` tokens.
pub fn parse_letters(ctx: &Group, text: &str) -> Result<Vec<Letter>> {
    let cleaned: String = text.chars().map(|c| if matches!(c, '·' | '(' | ')' | ',') { ' ' } else { c }).collect();
    let dw = ctx.simple_word(ctx.delta_simple());
    let mut out = Vec::new();
    for tok in cleaned.split_whitespace() {
        if tok == "1" || tok == "e" {
            continue;
        }
        match parse_token(ctx, tok)? {
            Token::Letter(l) => out.push(l),
            Token::Delta(k) if k >= 0 => {
                for _ in 0..k {
                    out.extend(dw.iter().copied().map(Letter::pos));
                }
            }
            Token::Delta(k) => {
                for _ in 0..-k {
                    out.extend(dw.iter().rev().copied().map(Letter::neg));
                }
            }
        }
    }
    Ok(out)
}

impl GroupElement {
    pub fn parse(ctx: &Group, text: &str) -> Result<Self> {
        Ok(Self::from_letters(ctx, &parse_letters(ctx, text)?))
    }
}

/// Formats a positive word as `s1 s2 ...`, or `1` when empty.
pub fn format_positive_word(word: &[GeneratorId]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn format_letters(word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}
