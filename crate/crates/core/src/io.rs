//! Matrix text formats.
//!
//! The native format is a line holding `n` followed by `n` lines of `n`
//! whitespace-separated scalars (`-?[0-9]+` or `-?[0-9]+/[1-9][0-9]*`).
//! Matrix Market dense files (`%%MatrixMarket matrix array real general`)
//! are also read, provided every entry is integer valued.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{parse_rational, Field};
use crate::matrix::Matrix;

/// Reads either supported format, chosen by the `%%MatrixMarket` banner.
pub fn parse_matrix<F: Field>(field: &F, text: &str) -> Result<Matrix<F>> {
    if text.trim_start().starts_with("%%MatrixMarket") {
        parse_matrix_market(field, text)
    } else {
        parse_native(field, text)
    }
}

pub fn parse_native<F: Field>(field: &F, text: &str) -> Result<Matrix<F>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing dimension line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid dimension {header:?}")))?;
    let mut entries = Vec::with_capacity(n * n);
    for row in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(line_no + row + 1, format!("missing row {}", row + 1)))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != n {
            return Err(Error::parse(
                line_no,
                format!("expected {n} entries, found {}", tokens.len()),
            ));
        }
        for tok in tokens {
            let q = parse_rational(tok)
                .ok_or_else(|| Error::parse(line_no, format!("invalid scalar {tok:?}")))?;
            entries.push(field.from_rational(&q)?);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(line_no, "trailing content after matrix"));
    }
    Matrix::new(field.clone(), n, entries)
}

/// Dense (array) Matrix Market reader. Entries are stored column-major in
/// the file; only square matrices with integer-valued entries are accepted.
pub fn parse_matrix_market<F: Field>(field: &F, text: &str) -> Result<Matrix<F>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, banner) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let words: Vec<String> = banner
        .split_whitespace()
        .map(|w| w.to_ascii_lowercase())
        .collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" || words[1] != "matrix" {
        return Err(Error::parse(1, "malformed Matrix Market banner"));
    }
    if words[2] != "array" {
        return Err(Error::parse(
            1,
            format!("unsupported layout {:?}", words[2]),
        ));
    }
    if words[3] != "real" && words[3] != "integer" {
        return Err(Error::parse(
            1,
            format!("unsupported value type {:?}", words[3]),
        ));
    }
    if words[4] != "general" {
        return Err(Error::parse(
            1,
            format!("unsupported symmetry {:?}", words[4]),
        ));
    }

    let mut data = lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));
    let (size_line, size) = data
        .next()
        .ok_or_else(|| Error::parse(2, "missing size line"))?;
    let dims: Vec<usize> = size
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(size_line, format!("invalid size line {size:?}")))?;
    let n = match dims.as_slice() {
        [rows, cols] if rows == cols => *rows,
        [_, _] => return Err(Error::parse(size_line, "matrix is not square")),
        _ => return Err(Error::parse(size_line, "size line must hold two integers")),
    };

    let mut column_major = Vec::with_capacity(n * n);
    let mut last_line = size_line;
    for (line_no, line) in data {
        last_line = line_no;
        for tok in line.split_whitespace() {
            let z = parse_integral_decimal(tok).ok_or_else(|| {
                Error::parse(
                    line_no,
                    format!("entry {tok:?} is not an integer-valued real"),
                )
            })?;
            column_major.push(field.from_integer(&z));
        }
    }
    if column_major.len() != n * n {
        return Err(Error::parse(
            last_line,
            format!("expected {} entries, found {}", n * n, column_major.len()),
        ));
    }
    let entries = (0..n * n)
        .map(|idx| column_major[(idx % n) * n + idx / n].clone())
        .collect();
    Matrix::new(field.clone(), n, entries)
}

/// Exact value of a decimal literal such as `-12`, `3.000` or `1.5e1`, if it
/// is an integer.
fn parse_integral_decimal(tok: &str) -> Option<BigInt> {
    let (mantissa, exponent) = match tok.find(['e', 'E']) {
        Some(pos) => (&tok[..pos], tok[pos + 1..].parse::<i32>().ok()?),
        None => (tok, 0),
    };
    let (neg, mantissa) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("0{int_part}{frac_part}").parse().ok()?;
    let scale = exponent.checked_sub(frac_part.len() as i32)?;
    if scale.unsigned_abs() > 10_000 {
        return None;
    }
    let ten = BigInt::from(10);
    let mut q = BigRational::from_integer(digits);
    if scale >= 0 {
        q *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        q /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    if !q.denom().is_one() {
        return None;
    }
    let z = q.to_integer();
    Some(if neg && !z.is_zero() { -z } else { z })
}

/// Writes a matrix in the native text format.
pub fn format_matrix<F: Field>(m: &Matrix<F>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", m.n());
    for i in 0..m.n() {
        let row: Vec<String> = m.row(i).iter().map(|x| m.field().format(x)).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn native_round_trip() {
        let text = "3\n1 -2 1/2\n0 0 0\n7/3 4 -5/6\n";
        let m = parse_matrix(&Rationals, text).unwrap();
        assert_eq!(m.get(0, 2), &BigRational::new(1.into(), 2.into()));
        assert_eq!(format_matrix(&m), text);
    }

    #[test]
    fn native_into_prime_field() {
        let f = PrimeField::new(7).unwrap();
        let m = parse_matrix(&f, "2\n-1 1/2\n8 0\n").unwrap();
        assert_eq!(m.entries(), &[6, 4, 1, 0]);
        assert!(matches!(
            parse_matrix(&f, "1\n1/7\n"),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn native_errors() {
        let f = Rationals;
        assert!(matches!(
            parse_matrix(&f, ""),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_matrix(&f, "x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_matrix(&f, "2\n1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_matrix(&f, "2\n1 2\n3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_matrix(&f, "1\n1.5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix(&f, "1\n1\n2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert_eq!(parse_matrix(&f, "0\n").unwrap().n(), 0);
    }

    #[test]
    fn matrix_market_is_column_major() {
        let text = "%%MatrixMarket matrix array real general\n% comment\n2 2\n1\n3\n2.0\n4e0\n";
        let m = parse_matrix(&Rationals, text).unwrap();
        assert_eq!(
            m,
            Matrix::from_rows(Rationals, &[vec![1, 2], vec![3, 4]]).unwrap()
        );
    }

    #[test]
    fn matrix_market_rejects_fractions_and_shapes() {
        let f = Rationals;
        let frac = "%%MatrixMarket matrix array real general\n1 1\n0.5\n";
        assert!(matches!(
            parse_matrix(&f, frac),
            Err(Error::Parse { line: 3, .. })
        ));
        let rect = "%%MatrixMarket matrix array real general\n1 2\n1\n2\n";
        assert!(parse_matrix(&f, rect).is_err());
        let coord = "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1\n";
        assert!(parse_matrix(&f, coord).is_err());
        let short = "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n";
        assert!(parse_matrix(&f, short).is_err());
    }

    #[test]
    fn integral_decimals() {
        let z = |s: &str| parse_integral_decimal(s).map(|b| b.to_string());
        assert_eq!(z("-12"), Some("-12".into()));
        assert_eq!(z("3.000"), Some("3".into()));
        assert_eq!(z("1.5e1"), Some("15".into()));
        assert_eq!(z("-0.0"), Some("0".into()));
        assert_eq!(z("250E-2"), None);
        assert_eq!(z("2500e-2"), Some("25".into()));
        assert_eq!(z("."), None);
        assert_eq!(z("1e"), None);
        assert_eq!(z("nan"), None);
    }
}
