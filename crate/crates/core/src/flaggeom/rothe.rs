use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::space::FlagType;
use crate::error::Result;
use crate::weylgroups::{pm_less, GroupFamily, SignedPerm};

/// Nature of one coefficient of a canonical basis with a given permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cell {
    /// Necessarily zero.
    Blank,
    /// The pivot coefficient 1.
    Bullet,
    /// Free coefficient counted by an inversion.
    Cross,
    /// Free coefficient attached to the negative value in row `i` (1-based).
    Tensor(usize),
    /// Determined by isotropy or orthogonality.
    Perp,
}

/// Grid of [`Cell`]s: one row per basis vector, one column per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotheDiagram {
    pub kind: FlagType,
    pub perm: SignedPerm,
    /// Signed coordinate indices in column order.
    pub columns: Vec<i32>,
    pub cells: Vec<Vec<Cell>>,
}

fn columns(kind: FlagType, d: usize) -> Vec<i32> {
    let d = d as i32;
    let pos = 1..=d;
    let neg = (-d..=-1).filter(|_| kind != FlagType::A);
    match kind {
        FlagType::B => pos.chain([0]).chain(neg).collect(),
        _ => pos.chain(neg).collect(),
    }
}

/// Builds the diagram of `perm` for flags of type `kind`.
pub fn rothe_diagram(perm: &SignedPerm, kind: FlagType) -> Result<RotheDiagram> {
    let d = perm.rank();
    GroupFamily::new(kind.family(), d).check(perm)?;
    let v = perm.images();
    let cols = columns(kind, d);
    let row_of = |k: i32| v.iter().position(|&x| x == k);
    let mut cells = vec![vec![Cell::Blank; cols.len()]; d];
    for (i, row) in cells.iter_mut().enumerate() {
        let s = v[i];
        for (c, &k) in cols.iter().enumerate() {
            row[c] = if kind == FlagType::A {
                match row_of(k) {
                    _ if k == s => Cell::Bullet,
                    Some(j) if j > i && k < s => Cell::Cross,
                    _ => Cell::Blank,
                }
            } else if k == s {
                Cell::Bullet
            } else if k == 0 {
                if s < 0 { Cell::Tensor(i + 1) } else { Cell::Blank }
            } else if row_of(k).is_some_and(|j| j < i) {
                Cell::Blank
            } else if row_of(-k).is_some_and(|j| j < i) || (k == -s && kind != FlagType::C) {
                Cell::Perp
            } else if !pm_less(k, s)? {
                Cell::Blank
            } else if row_of(k).is_some_and(|j| j > i) {
                Cell::Cross
            } else {
                // k = -σ(j) with j ≥ i
                let j = row_of(-k).expect("every index or its negative is an image");
                let tag = if s < 0 && (k < 0 || k >= -s) { i + 1 } else { j + 1 };
                Cell::Tensor(tag)
            };
        }
    }
    Ok(RotheDiagram { kind, perm: perm.clone(), columns: cols, cells })
}

impl RotheDiagram {
    /// Cell of row `i` and column position `c`, both 0-based.
    pub fn cell(&self, i: usize, c: usize) -> Cell {
        self.cells[i][c]
    }

    pub fn cross_count(&self) -> usize {
        self.cells.iter().flatten().filter(|&&c| c == Cell::Cross).count()
    }

    /// Number of `⊗_i` cells for each tag `i`.
    pub fn tensor_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in self.cells.iter().flatten() {
            if let Cell::Tensor(i) = c {
                *out.entry(*i).or_default() += 1;
            }
        }
        out
    }

    /// Number of free cells: the dimension of the space of canonical bases.
    pub fn free_count(&self) -> usize {
        self.cross_count() + self.tensor_counts().values().sum::<usize>()
    }

    /// UTF-8 grid with a header row of column indices.
    pub fn render_text(&self) -> String {
        let label = |c: Cell| match c {
            Cell::Blank => String::new(),
            Cell::Bullet => "●".to_string(),
            Cell::Cross => "×".to_string(),
            Cell::Tensor(i) => format!("⊗{i}"),
            Cell::Perp => "⊥".to_string(),
        };
        let mut grid: Vec<Vec<String>> = vec![self.columns.iter().map(i32::to_string).collect()];
        grid.extend(self.cells.iter().map(|r| r.iter().map(|&c| label(c)).collect()));
        let width = grid.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        let row_w = self.cells.len().to_string().len();
        let mut out = String::new();
        for (r, row) in grid.iter().enumerate() {
            let head = if r == 0 { String::new() } else { r.to_string() };
            let _ = write!(out, "{head:>row_w$} |");
            for s in row {
                let _ = write!(out, " {s:>width$}");
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }

    /// LaTeX `array` with double bars between the positive, zero and
    /// negative column blocks.
    pub fn render_latex(&self) -> String {
        let mut spec = String::from("c||");
        for (c, &k) in self.columns.iter().enumerate() {
            spec.push_str("c|");
            let next = self.columns.get(c + 1);
            if next.is_some_and(|&n| (k > 0 && n <= 0) || (k == 0 && n < 0)) {
                spec.push('|');
            }
        }
        let var = if self.kind == FlagType::A { "\\lambda" } else { "\\sigma" };
        let mut out = format!("\\begin{{array}}{{{spec}}}\n");
        let header: Vec<String> = self.columns.iter().map(i32::to_string).collect();
        let _ = writeln!(out, "i\\backslash {var}(i)&{}\\\\", header.join("&"));
        out.push_str("\\hline\\hline\n");
        for (i, row) in self.cells.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Blank => String::new(),
                    Cell::Bullet => "\\bullet".into(),
                    Cell::Cross => "\\times".into(),
                    Cell::Tensor(t) => format!("\\otimes_{t}"),
                    Cell::Perp => "\\perp".into(),
                })
                .collect();
            let _ = writeln!(out, "{}&{}\\\\", i + 1, cells.join("&"));
            out.push_str("\\hline\n");
        }
        out.push_str("\\end{array}");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylgroups::{enumerate_group, inversions, length, Family};

    fn perm(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    fn parse_rows(rows: &[&str]) -> Vec<Vec<Cell>> {
        rows.iter()
            .map(|r| {
                r.split('&')
                    .map(|c| match c.trim() {
                        "" => Cell::Blank,
                        "b" => Cell::Bullet,
                        "x" => Cell::Cross,
                        "p" => Cell::Perp,
                        t => Cell::Tensor(t.trim_start_matches('o').parse().unwrap()),
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn type_a_example() {
        let r = rothe_diagram(&perm("6,3,8,1,4,9,7,2,5"), FlagType::A).unwrap();
        assert_eq!(r.cross_count(), 18);
        assert!(r.tensor_counts().is_empty());
        assert_eq!(r.cells[3], parse_rows(&["b&&&&&&&&"])[0]);
        assert_eq!(r.cells[0], parse_rows(&["x&x&x&x&x&b&&&"])[0]);
    }

    #[test]
    fn symplectic_example_cell_by_cell() {
        let r = rothe_diagram(&perm("-5,3,-1,6,4,-2"), FlagType::C).unwrap();
        let expect = parse_rows(&[
            "o3&o6&x&x&o1&x&o1&b& & & & ",
            "o3&o6&b& &p& & & & & & & ",
            "o3&o3& &x&p&x&o3& &o3&p&x&b",
            "p&o6& &x&p&b& & & &p& & ",
            "p&o6& &b&p& &p& & &p& & ",
            "p&o6& & &p& &p& &p&p&b& ",
        ]);
        assert_eq!(r.cells, expect);
        assert_eq!(r.cross_count(), 7);
        assert_eq!(r.tensor_counts(), BTreeMap::from([(1, 2), (3, 6), (6, 5)]));
    }

    #[test]
    fn odd_orthogonal_example_cell_by_cell() {
        let r = rothe_diagram(&perm("-5,3,-1,6,4,-2"), FlagType::B).unwrap();
        let expect = parse_rows(&[
            "o3&o6&x&x&p&x&o1&o1&b& & & & ",
            "o3&o6&b& &p& & & & & &p& & ",
            "p&o3& &x&p&x&o3&o3& &o3&p&x&b",
            "p&o6& &x&p&b& &p& & &p& & ",
            "p&o6& &b&p& & &p& &p&p& & ",
            "p&p& & &p& &o6&p& &p&p&b& ",
        ]);
        assert_eq!(r.cells, expect);
    }

    #[test]
    fn tallies_follow_the_length() {
        for kind in FlagType::ALL {
            for d in 1..=4 {
                let fam = GroupFamily::new(kind.family(), d);
                for p in enumerate_group(&fam).unwrap() {
                    let r = rothe_diagram(&p, kind).unwrap();
                    assert_eq!(r.cross_count(), inversions(&p));
                    assert_eq!(r.free_count(), length(&p, &fam).unwrap());
                    let extra = match kind {
                        FlagType::D => 0,
                        _ => 1,
                    };
                    for (i, &s) in p.images().iter().enumerate() {
                        let n = r.tensor_counts().get(&(i + 1)).copied().unwrap_or(0);
                        let expect = if s < 0 { (d as i32 + extra + s) as usize } else { 0 };
                        assert_eq!(n, expect, "{kind} {p}");
                    }
                    for row in &r.cells {
                        assert_eq!(row.iter().filter(|&&c| c == Cell::Bullet).count(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn d_example_tallies() {
        let r = rothe_diagram(&perm("-5,3,-1,-6,4,-2"), FlagType::D).unwrap();
        assert_eq!(r.tensor_counts(), BTreeMap::from([(1, 1), (3, 5), (6, 4)]));
        assert_eq!(r.free_count(), length(&r.perm, &GroupFamily::new(Family::D, 6)).unwrap());
    }

    #[test]
    fn renderings() {
        let r = rothe_diagram(&perm("2,1"), FlagType::A).unwrap();
        assert_eq!(r.render_text(), "  | 1 2\n1 | × ●\n2 | ●\n");
        let c = rothe_diagram(&perm("-1"), FlagType::C).unwrap();
        assert_eq!(
            c.render_latex(),
            "\\begin{array}{c||c||c|}\ni\\backslash \\sigma(i)&1&-1\\\\\n\\hline\\hline\n1&\\otimes_1&\\bullet\\\\\n\\hline\n\\end{array}"
        );
        let b = rothe_diagram(&perm("1"), FlagType::B).unwrap();
        assert!(b.render_latex().starts_with("\\begin{array}{c||c||c||c|}"));
        assert!(rothe_diagram(&perm("-1,2"), FlagType::D).is_err());
    }
}
