//! Tree decompositions in the PACE `.td` format (1-based ids).

use std::fmt::Write as _;

use ttwfree::TreeRepresentation;

use crate::error::CliError;

pub fn write_pace(rep: &TreeRepresentation, n: usize) -> String {
    let max_bag = rep.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut s = format!("s td {} {} {}\n", rep.bags.len(), max_bag, n);
    for (i, bag) in rep.bags.iter().enumerate() {
        let _ = write!(s, "b {}", i + 1);
        for v in bag {
            let _ = write!(s, " {}", v + 1);
        }
        s.push('\n');
    }
    for &(i, j) in &rep.edges {
        let _ = writeln!(s, "{} {}", i + 1, j + 1);
    }
    s
}

/// Reads a `.td` file back; returns the representation and the declared
/// vertex count.
pub fn parse_pace(text: &str) -> Result<(TreeRepresentation, usize), CliError> {
    let err = |line: usize, message: String| CliError::Parse { line, column: 1, message };
    let mut header = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let t: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(ln, format!("expected a number, found '{s}'")));
        match t.as_slice() {
            [] | ["c", ..] => {}
            ["s", "td", nb, _, n] => {
                let nb = num(nb)?;
                header = Some((nb, num(n)?));
                bags = vec![None; nb];
            }
            ["b", id, vs @ ..] => {
                let id = num(id)?;
                if id == 0 || id > bags.len() {
                    return Err(err(ln, format!("bag {id} is not declared")));
                }
                let mut bag = Vec::new();
                for v in vs {
                    bag.push(num(v)?.checked_sub(1).ok_or_else(|| err(ln, "vertex ids are 1-based".into()))?);
                }
                bags[id - 1] = Some(bag);
            }
            [a, b] if header.is_some() => {
                let (a, b) = (num(a)?, num(b)?);
                if a == 0 || b == 0 || a > bags.len() || b > bags.len() {
                    return Err(err(ln, "tree edge names an undeclared bag".into()));
                }
                edges.push((a - 1, b - 1));
            }
            _ => return Err(err(ln, format!("unexpected line '{line}'"))),
        }
    }
    let (_, n) = header.ok_or_else(|| err(1, "missing 's td' header".into()))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| err(1, format!("bag {} is missing", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((TreeRepresentation::new(bags, edges), n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let rep = TreeRepresentation::new(vec![vec![0, 1, 2], vec![0, 2, 3]], vec![(0, 1)]);
        let text = write_pace(&rep, 4);
        assert_eq!(text, "s td 2 3 4\nb 1 1 2 3\nb 2 1 3 4\n1 2\n");
        let (back, n) = parse_pace(&text).unwrap();
        assert_eq!((back, n), (rep, 4));
        assert!(parse_pace("s td 1 1 1\nb 2 1\n").is_err());
    }
}
