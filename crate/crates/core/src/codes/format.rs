//! String-family text format: a `t k` header, then one member per line as `k`
//! space-separated letters. Lines starting with `#` are comments.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use super::{Letter, StringFamily};
use crate::error::{Error, Result};

impl FromStr for StringFamily {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut strings = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| Error::parse(lineno, format!("not a non-negative integer: {p:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            match header {
                None => {
                    if nums.len() != 2 {
                        return Err(Error::parse(lineno, "header must be \"t k\""));
                    }
                    header = Some((nums[0], nums[1]));
                }
                Some((t, k)) => {
                    if nums.len() != k {
                        return Err(Error::parse(
                            lineno,
                            format!("expected {k} letters, found {}", nums.len()),
                        ));
                    }
                    let x = nums
                        .iter()
                        .map(|&a| {
                            if a == 0 || a > t {
                                Err(Error::parse(lineno, format!("letter {a} outside 1..={t}")))
                            } else {
                                Ok(a as Letter)
                            }
                        })
                        .collect::<Result<Vec<_>>>()?;
                    strings.push((lineno, x));
                }
            }
        }
        let (t, k) = header.ok_or_else(|| Error::parse(0, "missing \"t k\" header"))?;
        let mut seen = std::collections::HashSet::new();
        for (lineno, x) in &strings {
            if !seen.insert(x.as_slice()) {
                return Err(Error::parse(*lineno, "duplicate string"));
            }
        }
        StringFamily::new(t, k, strings.into_iter().map(|(_, x)| x).collect())
            .map_err(|e| Error::parse(0, e.to_string()))
    }
}

impl fmt::Display for StringFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.t(), self.k())?;
        for x in self.strings() {
            let mut first = true;
            for a in x {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl StringFamily {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        fs::read_to_string(path)?.parse()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_string())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let f: StringFamily = "# cyclic\n3 3\n1 2 3\n2 3 1\n\n3 1 2\n".parse().unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_string(), "3 3\n1 2 3\n2 3 1\n3 1 2\n");
    }

    #[test]
    fn rejects_malformed() {
        assert!("3 3\n1 2\n".parse::<StringFamily>().is_err());
        assert!("3 2\n1 4\n".parse::<StringFamily>().is_err());
        assert!("3 2\n0 1\n".parse::<StringFamily>().is_err());
        let dup = "3 2\n1 2\n1 2\n".parse::<StringFamily>().unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 3, .. }));
        assert!("3\n".parse::<StringFamily>().is_err());
        assert!("".parse::<StringFamily>().is_err());
    }

    #[test]
    fn header_only_is_empty_family() {
        let f: StringFamily = "2 4\n".parse().unwrap();
        assert!(f.is_empty());
    }
}
