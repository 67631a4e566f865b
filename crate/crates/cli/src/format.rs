//! Plain-text digraph and colouring files.
//!
//! Digraph file: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-based vertex ids. Colouring file: the header is `n K` for a
//! vertex colouring or `m K arc` for an arc colouring, followed by one
//! colour id per line. Arc colours follow the sorted `(u, v)` arc order.
//! In both formats, lines whose first non-blank character is `#` and blank
//! lines are ignored.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rainbow_core::{ArcColouring, Digraph, VertexColouring};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Digraph(#[from] rainbow_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| {
                syntax(
                    line,
                    format!("expected a non-negative integer, found {t:?}"),
                )
            })
        })
        .collect()
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), FormatError> {
    std::fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn parse_digraph(text: &str) -> Result<Digraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| syntax(0, "missing header"))?;
    let (n, m) = match numbers(hl, header)?[..] {
        [n, m] => (n, m),
        _ => return Err(syntax(hl, "header must be \"n m\"")),
    };
    let mut arcs = Vec::with_capacity(m);
    let mut last = hl;
    for (l, text) in lines {
        match numbers(l, text)?[..] {
            [u, v] => arcs.push((u, v)),
            _ => return Err(syntax(l, "arc line must be \"u v\"")),
        }
        last = l;
    }
    if arcs.len() != m {
        return Err(syntax(
            last,
            format!("header announces {m} arcs, found {}", arcs.len()),
        ));
    }
    let d = Digraph::new(n, arcs)?;
    if d.arc_count() != m {
        return Err(syntax(hl, "repeated arc"));
    }
    Ok(d)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.order(), d.arc_count());
    for &(u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn read_digraph(path: &Path) -> Result<Digraph, FormatError> {
    parse_digraph(&read(path)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colouring {
    Vertex(VertexColouring),
    Arc(ArcColouring),
}

impl Colouring {
    pub fn len(&self) -> usize {
        match self {
            Colouring::Vertex(c) => c.len(),
            Colouring::Arc(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn palette(&self) -> usize {
        match self {
            Colouring::Vertex(c) => c.palette(),
            Colouring::Arc(c) => c.palette(),
        }
    }

    fn colours(&self) -> &[u32] {
        match self {
            Colouring::Vertex(c) => c.colours(),
            Colouring::Arc(c) => c.colours(),
        }
    }
}

pub fn parse_colouring(text: &str) -> Result<Colouring, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| syntax(0, "missing header"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let arc = match tokens.get(2) {
        None => false,
        Some(&"arc") if tokens.len() == 3 => true,
        Some(&"vertex") if tokens.len() == 3 => false,
        _ => return Err(syntax(hl, "header must be \"n K\" or \"m K arc\"")),
    };
    let (count, palette) = match numbers(hl, &tokens[..2].join(" "))?[..] {
        [c, k] => (c, k),
        _ => return Err(syntax(hl, "header must be \"n K\" or \"m K arc\"")),
    };
    let mut colours = Vec::with_capacity(count);
    let mut last = hl;
    for (l, text) in lines {
        match numbers(l, text)?[..] {
            [c] => colours.push(u32::try_from(c).map_err(|_| syntax(l, "colour id too large"))?),
            _ => return Err(syntax(l, "expected one colour id")),
        }
        last = l;
    }
    if colours.len() != count {
        return Err(syntax(
            last,
            format!("header announces {count} colours, found {}", colours.len()),
        ));
    }
    Ok(if arc {
        Colouring::Arc(ArcColouring::new(colours, palette)?)
    } else {
        Colouring::Vertex(VertexColouring::new(colours, palette)?)
    })
}

pub fn write_colouring(c: &Colouring) -> String {
    let flag = match c {
        Colouring::Vertex(_) => "",
        Colouring::Arc(_) => " arc",
    };
    let mut s = format!("{} {}{flag}\n", c.len(), c.palette());
    for x in c.colours() {
        let _ = writeln!(s, "{x}");
    }
    s
}

pub fn read_colouring(path: &Path) -> Result<Colouring, FormatError> {
    parse_colouring(&read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_with_comments() {
        let text = "# directed triangle\n3 3\n0 1\n\n1 2\n  # inline\n2 0\n";
        let d = parse_digraph(text).unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(write_digraph(&d), "3 3\n0 1\n1 2\n2 0\n");
    }

    #[test]
    fn digraph_errors() {
        for bad in [
            "",
            "3\n",
            "3 2\n0 1\n",
            "3 1\n0 1 2\n",
            "3 1\n0 x\n",
            "3 1\n0 3\n",
            "3 1\n1 1\n",
            "3 2\n0 1\n0 1\n",
            "0 0\n",
        ] {
            assert!(parse_digraph(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn colourings() {
        let v = parse_colouring("4 2\n0\n1\n0\n1\n").unwrap();
        assert_eq!(
            v,
            Colouring::Vertex(VertexColouring::new(vec![0, 1, 0, 1], 2).unwrap())
        );
        let a = parse_colouring("# arcs\n2 3 arc\n2\n0\n").unwrap();
        assert!(matches!(a, Colouring::Arc(_)));
        assert_eq!(write_colouring(&a), "2 3 arc\n2\n0\n");
        assert_eq!(write_colouring(&v), "4 2\n0\n1\n0\n1\n");
        for bad in ["2 2\n0\n", "2 2\n0\n2\n", "1 1 edge\n0\n", "1 1\n0 0\n"] {
            assert!(parse_colouring(bad).is_err(), "{bad:?}");
        }
    }
}
