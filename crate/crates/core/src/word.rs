//! Words in the generators, written `[i_1,...,i_k]` with 1-based labels.
//!
//! Ranges are accepted on input: `[2..5]` is `[2,3,4,5]` and `[5..2]` is
//! `[5,4,3,2]`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A sequence of 1-based generator labels. Need not be reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `[i ↗ j]` for `i <= j`, or `[i ↘ j]` for `i > j`.
    pub fn run(from: usize, to: usize) -> Self {
        if from <= to {
            Word((from..=to).collect())
        } else {
            Word((to..=from).rev().collect())
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Checks every letter lies in `1..=rank`.
    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l == 0 || l > rank) {
            Some(&index) => Err(Error::GeneratorOutOfRange { index, rank }),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let offset = text.len() - text.trim_start().len();
        let (body, body_start) = match trimmed.strip_prefix('[') {
            Some(rest) => {
                let Some(body) = rest.strip_suffix(']') else {
                    return Err(Error::Parse { pos: offset + trimmed.len(), msg: "missing ']'".into() });
                };
                (body, offset + 1)
            }
            None => (trimmed, offset),
        };
        let mut letters = Vec::new();
        if body.trim().is_empty() {
            return Ok(Word(letters));
        }
        let mut pos = body_start;
        for item in body.split(',') {
            let parse = |t: &str, at: usize| -> Result<usize> {
                t.trim().parse::<usize>().map_err(|_| Error::Parse {
                    pos: at,
                    msg: format!("expected a generator index, found {:?}", t.trim()),
                })
            };
            match item.split_once("..") {
                Some((a, b)) => {
                    let from = parse(a, pos)?;
                    let to = parse(b, pos + a.len() + 2)?;
                    letters.extend(Word::run(from, to).0);
                }
                None => letters.push(parse(item, pos)?),
            }
            pos += item.len() + 1;
        }
        if let Some(i) = letters.iter().position(|&l| l == 0) {
            return Err(Error::Parse { pos: body_start, msg: format!("letter {} is 0; labels are 1-based", i + 1) });
        }
        Ok(Word(letters))
    }
}
