//! Compact word notation: `[a]` is 1..a, `[a,b]` is a..b, `(d1d2...)` lists
//! single digits, a bare digit stands for itself.

use super::word::Word;
use crate::error::{Error, Result};

pub fn parse_compact_word(text: &str) -> Result<Word> {
    let bytes = text.as_bytes();
    let mut out: Vec<u8> = Vec::new();
    let mut i = 0;
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.to_string(),
    };
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' => i += 1,
            b'[' => {
                let close = text[i..]
                    .find(']')
                    .map(|k| i + k)
                    .ok_or_else(|| err(i, "unclosed '['"))?;
                let inner = &text[i + 1..close];
                let (a, b) = match inner.split_once(',') {
                    Some((a, b)) => (parse_letter(a, i + 1)?, parse_letter(b, i + 1)?),
                    None => (1, parse_letter(inner, i + 1)?),
                };
                if a > b {
                    return Err(err(i, "empty interval"));
                }
                out.extend(a..=b);
                i = close + 1;
            }
            b'(' => {
                let close = text[i..]
                    .find(')')
                    .map(|k| i + k)
                    .ok_or_else(|| err(i, "unclosed '('"))?;
                if close == i + 1 {
                    return Err(err(i, "empty group"));
                }
                for (k, ch) in text[i + 1..close].bytes().enumerate() {
                    out.push(digit(ch, i + 1 + k)?);
                }
                i = close + 1;
            }
            ch @ b'0'..=b'9' => {
                out.push(digit(ch, i)?);
                i += 1;
            }
            _ => return Err(err(i, "unexpected character")),
        }
    }
    if out.is_empty() {
        return Err(err(0, "empty word"));
    }
    Word::new(out)
}

fn digit(ch: u8, offset: usize) -> Result<u8> {
    match ch {
        b'1'..=b'9' => Ok(ch - b'0'),
        b'0' => Err(Error::Parse {
            offset,
            message: "letter 0 is not allowed".into(),
        }),
        _ => Err(Error::Parse {
            offset,
            message: format!("expected a digit, found {:?}", ch as char),
        }),
    }
}

fn parse_letter(s: &str, offset: usize) -> Result<u8> {
    let v: u8 = s.trim().parse().map_err(|_| Error::Parse {
        offset,
        message: format!("bad interval bound {s:?}"),
    })?;
    if v == 0 {
        return Err(Error::Parse {
            offset,
            message: "letter 0 is not allowed".into(),
        });
    }
    Ok(v)
}
