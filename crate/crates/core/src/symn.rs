//! Type A specifics: involutions of `Sym(n)` and the valency `δ(m, n)` of a
//! product of `m` commuting fundamental reflections.
//!
//! `Sym(n)` is `W(A_{n−1})` with `r_i = (i, i+1)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::finite::{Element, FiniteGroup};
use crate::graph::E0Graph;
use crate::spec::GroupSpec;
use crate::word::Word;

/// Brute-force oracles build the whole graph of `Sym(n)`; beyond this the
/// vertex count grows past desk scale.
pub const BRUTE_FORCE_MAX_N: usize = 9;

/// `|I(Sym(n))| = T(n) − 1`, with `T` the telephone numbers.
pub fn involution_count(n: usize) -> Result<u128> {
    let (mut prev, mut cur) = (1u128, 1u128); // T(0), T(1)
    for k in 2..=n {
        let next = (k as u128 - 1)
            .checked_mul(prev)
            .and_then(|v| v.checked_add(cur))
            .ok_or_else(|| Error::OutOfRange(format!("involution count of Sym({n}) overflows")))?;
        prev = cur;
        cur = next;
    }
    Ok(cur - 1)
}

/// Memoized `δ(m, n)`. Safe to share between threads.
#[derive(Debug, Default)]
pub struct DeltaTable {
    values: Mutex<HashMap<(usize, usize), u128>>,
}

impl DeltaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `δ(0,n) = |I(Sym(n))|`, `δ(1,n) = (|I(Sym(n))| − 1)/2`, and for `m ≥ 2`
    /// `δ(m,n) = ½(δ(m−1,n) + (m−1)δ(m−2,n−4) + m−2)`. `δ(0,0) = 0`.
    pub fn get(&self, m: usize, n: usize) -> Result<u128> {
        if m >= 1 && n < 2 * m {
            return Err(Error::OutOfRange(format!("δ({m},{n}) needs n ≥ 2m")));
        }
        if let Some(&v) = self.values.lock().expect("memo lock").get(&(m, n)) {
            return Ok(v);
        }
        let value = match m {
            0 => involution_count(n)?,
            1 => halve(involution_count(n)? - 1, m, n)?,
            _ => {
                let sum = self.get(m - 1, n)? + (m as u128 - 1) * self.get(m - 2, n - 4)? + (m as u128 - 2);
                halve(sum, m, n)?
            }
        };
        self.values.lock().expect("memo lock").insert((m, n), value);
        Ok(value)
    }
}

fn halve(v: u128, m: usize, n: usize) -> Result<u128> {
    if v % 2 == 1 {
        return Err(Error::NonIntegral(format!("δ({m},{n}) = {v}/2")));
    }
    Ok(v / 2)
}

/// `δ(m, n)` via the recursion.
pub fn delta(m: usize, n: usize) -> Result<u128> {
    DeltaTable::new().get(m, n)
}

/// Closed forms for `m ≤ 4`, each valid for `n ≥ 2m`.
pub fn delta_closed_form(m: usize, n: usize) -> Result<u128> {
    if !(1..=4).contains(&m) || n < 2 * m {
        return Err(Error::OutOfRange(format!("no closed form for δ({m},{n})")));
    }
    let i = |k: usize| involution_count(k).map(|v| v as i128);
    let (num, den) = match m {
        1 => (i(n)? - 1, 2),
        2 => (i(n)? + 2 * i(n - 4)? - 1, 4),
        3 => (i(n)? + 6 * i(n - 4)? - 1, 8),
        _ => (i(n)? + 12 * i(n - 4)? + 12 * i(n - 8)? + 9, 16),
    };
    if num % den != 0 || num < 0 {
        return Err(Error::NonIntegral(format!("closed form δ({m},{n}) = {num}/{den}")));
    }
    Ok((num / den) as u128)
}

/// A product of disjoint transpositions `(a b)` of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matching {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
            let (a, b) = *p;
            if a == 0 || b > n || a == b || seen[a] || seen[b] {
                return Err(Error::OutOfRange(format!("({a} {b}) is not a valid disjoint transposition in Sym({n})")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        pairs.sort_unstable();
        Ok(Matching { n, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The number of transpositions.
    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    /// A word for the involution: `(a b) = [a ↗ b−1, b−2 ↘ a]` per pair.
    /// Reduced for a single pair; crossing pairs give a longer word.
    pub fn word(&self) -> Word {
        let mut letters = Vec::new();
        for &(a, b) in &self.pairs {
            letters.extend_from_slice(Word::run(a, b - 1).letters());
            if b >= a + 2 {
                letters.extend_from_slice(Word::run(b - 2, a).letters());
            }
        }
        Word::new(letters)
    }

    /// The matching of an element of `W(A_{n−1})`, read off its action on
    /// the positions `1..n`.
    pub fn from_element(group: &FiniteGroup, w: &Element) -> Result<Self> {
        let n = match group.spec() {
            GroupSpec::A(k) => k + 1,
            other => return Err(Error::Unsupported(format!("matchings live in type A, got {other}"))),
        };
        if !group.is_involution(w) {
            return Err(Error::NotInvolution(group.reduced_word(w).to_string()));
        }
        let perm = permutation(group, w, n)?;
        let pairs = (1..=n).filter(|&a| perm[a] > a).map(|a| (a, perm[a])).collect();
        Matching::new(n, pairs)
    }

    pub fn to_element(&self, group: &FiniteGroup) -> Result<Element> {
        group.element_from_word(&self.word())
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "()");
        }
        for (a, b) in &self.pairs {
            write!(f, "({a}{}{b})", if self.n >= 10 { " " } else { "" })?;
        }
        Ok(())
    }
}

/// The permutation of `1..n` given by `w`, obtained by multiplying out a
/// reduced word (index 0 unused).
fn permutation(group: &FiniteGroup, w: &Element, n: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..=n).collect();
    for &l in group.reduced_word(w).letters() {
        // right multiplication by (l, l+1) swaps the images of l and l+1
        perm.swap(l, l + 1);
    }
    // this tracks w or its inverse depending on convention; for an
    // involution they coincide
    Ok(perm)
}

/// Products of `m` distinct mutually commuting fundamental reflections of
/// `Sym(n)`: choices of `m` pairwise non-adjacent indices in `1..n−1`.
pub fn min_length_class_representatives(m: usize, n: usize) -> Result<Vec<Matching>> {
    if m == 0 || n < 2 * m {
        return Err(Error::OutOfRange(format!("need n ≥ 2m ≥ 2, got m={m}, n={n}")));
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn extend(start: usize, m: usize, n: usize, chosen: &mut Vec<usize>, out: &mut Vec<Matching>) {
        if chosen.len() == m {
            let pairs = chosen.iter().map(|&i| (i, i + 1)).collect();
            out.push(Matching::new(n, pairs).expect("non-adjacent indices are disjoint"));
            return;
        }
        for i in start..n {
            chosen.push(i);
            extend(i + 2, m, n, chosen, out);
            chosen.pop();
        }
    }
    extend(1, m, n, &mut chosen, &mut out);
    Ok(out)
}

fn type_a_graph(n: usize) -> Result<(FiniteGroup, E0Graph)> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::OutOfRange(format!("brute force limited to n ≤ {BRUTE_FORCE_MAX_N}, got {n}")));
    }
    if n < 2 {
        return Err(Error::OutOfRange(format!("Sym({n}) has no fundamental reflections")));
    }
    let group = FiniteGroup::new(&GroupSpec::A(n - 1))?;
    let graph = E0Graph::build(&group);
    Ok((group, graph))
}

fn degree_of(group: &FiniteGroup, graph: &E0Graph, x: &Matching) -> Result<usize> {
    Ok(graph.degree(graph.vertex(&x.to_element(group)?)?))
}

/// `δ(m, n)` as the degree of `(1 2)(3 4)⋯(2m−1 2m)` in the graph of `Sym(n)`.
pub fn delta_bruteforce(m: usize, n: usize) -> Result<usize> {
    if m == 0 || n < 2 * m {
        return Err(Error::OutOfRange(format!("need n ≥ 2m ≥ 2, got m={m}, n={n}")));
    }
    let (group, graph) = type_a_graph(n)?;
    let x = Matching::new(n, (0..m).map(|k| (2 * k + 1, 2 * k + 2)).collect())?;
    degree_of(&group, &graph, &x)
}

/// Whether all minimal-length `m`-transposition involutions share one degree.
pub fn wlog_check(m: usize, n: usize) -> Result<bool> {
    let reps = min_length_class_representatives(m, n)?;
    let (group, graph) = type_a_graph(n)?;
    let degrees = reps.iter().map(|x| degree_of(&group, &graph, x)).collect::<Result<Vec<_>>>()?;
    Ok(degrees.windows(2).all(|w| w[0] == w[1]))
}
