//! Plain-text dense matrix format.
//!
//! ```text
//! n p
//! a11 a12 ... a1n
//! ...
//! ```
//!
//! `p = 0` selects `ℚ`, with entries written as `num` or `num/den`.

use super::field::Field;
use super::matrix::ExactMatrix;
use crate::error::{Error, Result};

pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, p] = head[..] else {
        return Err(Error::Parse(format!("expected header \"n p\", got {header:?}")));
    };
    let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad dimension {n:?}")))?;
    let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad characteristic {p:?}")))?;
    let field = Field::new(p)?;
    let mut rows = Vec::with_capacity(n);
    for line in lines.by_ref().take(n) {
        let row = line.split_whitespace().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!("row {} has {} entries, expected {n}", rows.len() + 1, row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Parse(format!("expected {n} rows, got {}", rows.len())));
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing data after matrix".into()));
    }
    ExactMatrix::from_rows(field, rows)
}

pub fn format_matrix(m: &ExactMatrix) -> String {
    format!("{} {}\n{m}", m.n(), m.field().characteristic())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "2 0\n1/2 -3\n0 4\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(format_matrix(&m), text);
        let m = parse_matrix("3 7\n1 2 3\n4 5 6\n7 8 9").unwrap();
        assert_eq!(m.get(2, 0), &m.field().zero());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("2 4\n1 0\n0 1").is_err());
        assert!(parse_matrix("2 5\n1 0\n0").is_err());
        assert!(parse_matrix("1 5\n1\n2").is_err());
    }
}
