//! Textual group labels such as `A5`, `I2(7)`, `U3` or `A1xA1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::CoxeterMatrix;

/// A parsed group label.
///
/// Generator numbering follows the usual diagram labelling: `D_n` branches at
/// `r_{n-2}`, `E_n` branches at `r_4` with `r_2` attached, and the
/// non-simply-laced edge of `B_n`, `H_3`, `H_4` sits between `r_{n-1}` and `r_n`.
/// `F_4` has its 4-edge between `r_2` and `r_3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
    /// Universal Coxeter group: every off-diagonal entry is `∞`. `U(2)` is the
    /// infinite dihedral group `Ã1`.
    Universal(usize),
    Product(Vec<GroupSpec>),
    Custom(CoxeterMatrix),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut start = 0;
        for (pos, c) in text.char_indices() {
            if c == 'x' || c == '×' {
                factors.push(parse_factor(&text[start..pos], start)?);
                start = pos + c.len_utf8();
            }
        }
        factors.push(parse_factor(&text[start..], start)?);
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { GroupSpec::Product(factors) })
    }

    pub fn from_matrix_json(text: &str) -> Result<Self> {
        CoxeterMatrix::from_json(text).map(GroupSpec::Custom)
    }

    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        use GroupSpec::*;
        let chain = |n: usize, last: u32| -> Vec<(usize, usize, Option<u32>)> {
            (1..n).map(|i| (i, i + 1, Some(if i + 1 == n { last } else { 3 }))).collect()
        };
        match self {
            A(n) => CoxeterMatrix::from_edges(*n, &chain(*n, 3)),
            B(n) => CoxeterMatrix::from_edges(*n, &chain(*n, 4)),
            H(n) => CoxeterMatrix::from_edges(*n, &chain(*n, 5)),
            D(n) => {
                let mut edges = chain(n - 1, 3);
                edges.push((n - 2, *n, Some(3)));
                CoxeterMatrix::from_edges(*n, &edges)
            }
            E(n) => {
                let mut edges = vec![(1, 3, Some(3)), (2, 4, Some(3))];
                edges.extend((3..*n).map(|i| (i, i + 1, Some(3))));
                CoxeterMatrix::from_edges(*n, &edges)
            }
            F4 => CoxeterMatrix::from_edges(4, &[(1, 2, Some(3)), (2, 3, Some(4)), (3, 4, Some(3))]),
            I2(m) => CoxeterMatrix::from_edges(2, &[(1, 2, Some(*m))]),
            Universal(n) => {
                let edges: Vec<_> = (1..=*n).flat_map(|i| ((i + 1)..=*n).map(move |j| (i, j, None))).collect();
                CoxeterMatrix::from_edges(*n, &edges)
            }
            Product(factors) => {
                let blocks: Vec<_> = factors.iter().map(GroupSpec::coxeter_matrix).collect();
                CoxeterMatrix::block_diagonal(&blocks)
            }
            Custom(m) => m.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        use GroupSpec::*;
        match self {
            A(n) | B(n) | D(n) | E(n) | H(n) | Universal(n) => *n,
            F4 => 4,
            I2(_) => 2,
            Product(f) => f.iter().map(GroupSpec::rank).sum(),
            Custom(m) => m.rank(),
        }
    }

    /// Whether the label names a finite group. Custom matrices are decided by
    /// attempting the root closure.
    pub fn is_finite(&self) -> bool {
        use GroupSpec::*;
        match self {
            Universal(_) => false,
            Product(f) => f.iter().all(GroupSpec::is_finite),
            Custom(m) => crate::roots::RootSystem::generate(m, None).is_ok(),
            _ => true,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        !matches!(self, GroupSpec::Product(_) | GroupSpec::Custom(_))
    }

    /// The factors of a product, or the spec itself.
    pub fn factors(&self) -> Vec<GroupSpec> {
        match self {
            GroupSpec::Product(f) => f.clone(),
            other => vec![other.clone()],
        }
    }
}

fn parse_factor(raw: &str, offset: usize) -> Result<GroupSpec> {
    let lead = raw.len() - raw.trim_start().len();
    let s = raw.trim();
    let pos = offset + lead;
    let err = |at: usize, msg: &str| Error::Parse { pos: pos + at, msg: msg.to_string() };
    if s.is_empty() {
        return Err(err(0, "expected a group type"));
    }
    if matches!(s, "~A1" | "Ã1" | "At1") {
        return Ok(GroupSpec::Universal(2));
    }
    let mut chars = s.chars();
    let kind = chars.next().expect("non-empty").to_ascii_uppercase();
    let rest = chars.as_str();

    // Strips an optional pair of parentheses.
    let number = |text: &str, at: usize| -> Result<u64> {
        let inner = text
            .strip_prefix('(')
            .map(|t| t.strip_suffix(')').ok_or_else(|| err(at + text.len(), "missing ')'")))
            .transpose()?
            .unwrap_or(text)
            .trim();
        if inner.is_empty() {
            return Err(err(at, "expected a rank"));
        }
        inner.parse::<u64>().map_err(|_| err(at, &format!("invalid number {inner:?}")))
    };

    let unsupported = |what: String| Err(Error::Unsupported(what));
    match kind {
        'I' => {
            let Some(tail) = rest.strip_prefix('2') else {
                return Err(err(1, "dihedral groups are written I2(m)"));
            };
            let m = number(tail, 2)?;
            if m < 3 {
                return unsupported(format!("I2({m}): m must be at least 3"));
            }
            Ok(GroupSpec::I2(m as u32))
        }
        'A' | 'B' | 'D' | 'E' | 'F' | 'H' | 'U' => {
            let n = number(rest, 1)? as usize;
            match kind {
                'A' if n >= 1 => Ok(GroupSpec::A(n)),
                'B' if n >= 2 => Ok(GroupSpec::B(n)),
                'D' if n >= 4 => Ok(GroupSpec::D(n)),
                'E' if (6..=8).contains(&n) => Ok(GroupSpec::E(n)),
                'F' if n == 4 => Ok(GroupSpec::F4),
                'H' if n == 3 || n == 4 => Ok(GroupSpec::H(n)),
                'U' if n >= 2 => Ok(GroupSpec::Universal(n)),
                _ => unsupported(format!("{kind}{n}: rank not supported for type {kind}")),
            }
        }
        _ => Err(err(0, &format!("unknown group type {kind:?}"))),
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E(n) => write!(f, "E{n}"),
            F4 => write!(f, "F4"),
            H(n) => write!(f, "H{n}"),
            I2(m) => write!(f, "I2({m})"),
            Universal(n) => write!(f, "U{n}"),
            Product(factors) => {
                let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("x"))
            }
            Custom(m) => write!(f, "custom{}", m.to_json()),
        }
    }
}
