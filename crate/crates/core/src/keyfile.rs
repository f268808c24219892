//! Plain-text key files.
//!
//! The format is four LF-terminated ASCII lines, chosen for inspectability
//! over compactness:
//!
//! ```text
//! rsa-toy v1
//! kind: public
//! n: 760812959
//! e: 11723299
//! ```
//!
//! Private keys carry a `d:` line instead of `e:`. The parser accepts CRLF
//! line endings as the one permitted variation, and never panics on
//! arbitrary input bytes.

use std::fmt;

use crate::error::{Error, Result};
use crate::rsa::{PrivateKey, PublicKey};

/// First line of every key file.
pub const MAGIC: &str = "rsa-toy v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeyKind {
    Public,
    Private,
}

impl fmt::Display for KeyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeyKind::Public => f.write_str("public"),
            KeyKind::Private => f.write_str("private"),
        }
    }
}

/// One key as it appears on disk: a kind tag plus the exponent/modulus pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyDocument {
    pub kind: KeyKind,
    pub exponent: u64,
    pub modulus: u64,
}

impl KeyDocument {
    pub fn from_public(key: &PublicKey) -> Self {
        Self {
            kind: KeyKind::Public,
            exponent: key.e,
            modulus: key.n,
        }
    }

    pub fn from_private(key: &PrivateKey) -> Self {
        Self {
            kind: KeyKind::Private,
            exponent: key.d,
            modulus: key.n,
        }
    }

    pub fn as_public(&self) -> Result<PublicKey> {
        match self.kind {
            KeyKind::Public => Ok(PublicKey {
                e: self.exponent,
                n: self.modulus,
            }),
            KeyKind::Private => Err(Error::WrongKeyKind {
                expected: KeyKind::Public,
            }),
        }
    }

    pub fn as_private(&self) -> Result<PrivateKey> {
        match self.kind {
            KeyKind::Private => Ok(PrivateKey {
                d: self.exponent,
                n: self.modulus,
            }),
            KeyKind::Public => Err(Error::WrongKeyKind {
                expected: KeyKind::Private,
            }),
        }
    }
}

fn exponent_label(kind: KeyKind) -> char {
    match kind {
        KeyKind::Public => 'e',
        KeyKind::Private => 'd',
    }
}

/// Render a key document in the exact on-disk format (LF line endings,
/// decimal integers without leading zeros, no trailing whitespace).
pub fn write_key(doc: &KeyDocument) -> String {
    format!(
        "{MAGIC}\nkind: {}\nn: {}\n{}: {}\n",
        doc.kind,
        doc.modulus,
        exponent_label(doc.kind),
        doc.exponent
    )
}

/// Parse a key file. Strict: the four lines must appear exactly as written
/// by [`write_key`], except that each line may end in CRLF instead of LF.
pub fn read_key(bytes: &[u8]) -> Result<KeyDocument> {
    let text = std::str::from_utf8(bytes).map_err(|_| Error::UnrecognizedFormat)?;

    let mut segments: Vec<&str> = text.split('\n').collect();
    // a well-formed file ends in a newline, leaving one empty segment
    match segments.pop() {
        Some("") => {}
        Some(_) => {
            return Err(Error::KeyParse {
                line: segments.len() + 1,
                reason: "missing final newline".to_string(),
            })
        }
        None => return Err(Error::UnrecognizedFormat),
    }
    let lines: Vec<&str> = segments
        .iter()
        .map(|line| line.strip_suffix('\r').unwrap_or(line))
        .collect();

    if lines.first().copied() != Some(MAGIC) {
        return Err(Error::UnrecognizedFormat);
    }
    if lines.len() != 4 {
        // point at the first missing line, or at the start of the excess
        let line = if lines.len() < 4 { lines.len() + 1 } else { 5 };
        return Err(Error::KeyParse {
            line,
            reason: format!("expected 4 lines, found {}", lines.len()),
        });
    }

    let kind = match lines[1] {
        "kind: public" => KeyKind::Public,
        "kind: private" => KeyKind::Private,
        _ => {
            return Err(Error::KeyParse {
                line: 2,
                reason: "expected `kind: public` or `kind: private`".to_string(),
            })
        }
    };

    let modulus = match lines[2].strip_prefix("n: ") {
        Some(digits) => parse_decimal(digits, 3)?,
        None => {
            return Err(Error::KeyParse {
                line: 3,
                reason: "expected `n: <decimal>`".to_string(),
            })
        }
    };
    if modulus < 6 {
        return Err(Error::KeyParse {
            line: 3,
            reason: format!("modulus {modulus} below minimum of 6"),
        });
    }

    let expected = exponent_label(kind);
    let other = exponent_label(match kind {
        KeyKind::Public => KeyKind::Private,
        KeyKind::Private => KeyKind::Public,
    });
    let exponent = if let Some(digits) = lines[3].strip_prefix(&format!("{expected}: ")) {
        parse_decimal(digits, 4)?
    } else if lines[3].starts_with(&format!("{other}: ")) {
        return Err(Error::InconsistentKey { kind, label: other });
    } else {
        return Err(Error::KeyParse {
            line: 4,
            reason: format!("expected `{expected}: <decimal>`"),
        });
    };
    if exponent < 1 {
        return Err(Error::KeyParse {
            line: 4,
            reason: "exponent must be at least 1".to_string(),
        });
    }

    Ok(KeyDocument {
        kind,
        exponent,
        modulus,
    })
}

/// Decimal u64 with no sign, no leading zeros, no stray characters.
fn parse_decimal(s: &str, line: usize) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::KeyParse {
            line,
            reason: "expected an unsigned decimal integer".to_string(),
        });
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(Error::KeyParse {
            line,
            reason: "leading zeros are not allowed".to_string(),
        });
    }
    s.parse::<u64>().map_err(|_| Error::KeyParse {
        line,
        reason: "integer does not fit in 64 bits".to_string(),
    })
}
