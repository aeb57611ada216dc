//! Root systems of the geometric representation.
//!
//! Roots are stored in coordinates over the simple roots. Indices `0..N` are
//! the positive roots (the simple roots first, in generator order) and
//! `N..2N` their negatives, so `-root(i) = root(i ± N)`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::matrix::CoxeterMatrix;

/// Coordinates are rounded to this grid for deduplication.
pub const KEY_SCALE: f64 = 1e6;
/// Sign tolerance for deciding positivity.
pub const SIGN_EPS: f64 = 1e-9;
/// Closure without a depth limit gives up after this many positive roots.
const MAX_ROOTS: usize = 200_000;

pub type RootKey = Vec<i64>;

pub fn root_key(coords: &[f64]) -> RootKey {
    coords
        .iter()
        .map(|&c| {
            let k = (c * KEY_SCALE).round() as i64;
            // -0 and 0 must agree
            if k == 0 {
                0
            } else {
                k
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Debug, Clone)]
pub struct Root {
    pub coords: Vec<f64>,
    pub sign: Sign,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    rank: usize,
    form: Vec<f64>,
    roots: Vec<Root>,
    positive_count: usize,
    complete: bool,
    lookup: HashMap<RootKey, usize>,
}

impl RootSystem {
    /// Closure of the simple roots under the simple reflections.
    ///
    /// With `max_depth = None` the closure must terminate (finite group); an
    /// infinite group is reported as [`Error::InfiniteGroup`]. With a depth
    /// limit, roots reachable by at most `max_depth` reflections are kept and
    /// [`RootSystem::is_complete`] tells whether the closure terminated.
    pub fn generate(matrix: &CoxeterMatrix, max_depth: Option<usize>) -> Result<Self> {
        let rank = matrix.rank();
        let form = matrix.bilinear_form();
        let mut positive: Vec<Vec<f64>> = Vec::new();
        let mut lookup = HashMap::new();
        let mut queue = VecDeque::new();
        for s in 0..rank {
            let mut v = vec![0.0; rank];
            v[s] = 1.0;
            lookup.insert(root_key(&v), s);
            positive.push(v);
            queue.push_back((s, 0usize));
        }
        let mut complete = true;
        while let Some((idx, depth)) = queue.pop_front() {
            for s in 0..rank {
                if idx == s {
                    continue;
                }
                let pairing = pair(&form, rank, &positive[idx], s);
                if pairing.abs() < SIGN_EPS {
                    continue;
                }
                if max_depth.is_some_and(|d| depth >= d) {
                    complete = false;
                    continue;
                }
                let mut v = positive[idx].clone();
                v[s] -= 2.0 * pairing;
                if v.iter().any(|&c| c < -SIGN_EPS) {
                    // s permutes the positive roots other than α_s.
                    return Err(Error::NonConvergence(depth + 1));
                }
                let key = root_key(&v);
                if lookup.contains_key(&key) {
                    continue;
                }
                if max_depth.is_none() && positive.len() >= MAX_ROOTS {
                    return Err(Error::InfiniteGroup(format!(
                        "rank {rank} matrix (root closure exceeded {MAX_ROOTS})"
                    )));
                }
                lookup.insert(key, positive.len());
                queue.push_back((positive.len(), depth + 1));
                positive.push(v);
            }
        }
        let n = positive.len();
        let mut roots = Vec::with_capacity(2 * n);
        for (index, coords) in positive.iter().enumerate() {
            roots.push(Root { coords: coords.clone(), sign: Sign::Positive, index });
        }
        for (i, coords) in positive.into_iter().enumerate() {
            let neg: Vec<f64> = coords.iter().map(|c| -c).collect();
            lookup.insert(root_key(&neg), n + i);
            roots.push(Root { coords: neg, sign: Sign::Negative, index: n + i });
        }
        Ok(RootSystem { rank, form, roots, positive_count: n, complete, lookup })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Index of `α_s` for the 0-based generator `s`.
    pub fn simple_index(&self, s: usize) -> usize {
        s
    }

    pub fn negate(&self, index: usize) -> usize {
        if index < self.positive_count {
            index + self.positive_count
        } else {
            index - self.positive_count
        }
    }

    pub fn is_positive(&self, index: usize) -> bool {
        index < self.positive_count
    }

    pub fn index_of(&self, coords: &[f64]) -> Option<usize> {
        self.lookup.get(&root_key(coords)).copied()
    }

    /// `⟨u, α_s⟩`.
    pub fn pairing(&self, v: &[f64], s: usize) -> f64 {
        pair(&self.form, self.rank, v, s)
    }

    /// `r_s · v = v − 2⟨v, α_s⟩ α_s`.
    pub fn reflect(&self, s: usize, v: &[f64]) -> Vec<f64> {
        let mut out = v.to_vec();
        out[s] -= 2.0 * self.pairing(v, s);
        out
    }

    /// Index of `r_s · root(index)`, if it was generated.
    pub fn reflect_index(&self, s: usize, index: usize) -> Option<usize> {
        if index == s {
            return Some(self.negate(s));
        }
        if index == self.negate(s) {
            return Some(s);
        }
        self.index_of(&self.reflect(s, &self.roots[index].coords))
    }

    pub fn form(&self) -> &[f64] {
        &self.form
    }
}

fn pair(form: &[f64], rank: usize, v: &[f64], s: usize) -> f64 {
    v.iter().enumerate().map(|(j, c)| c * form[j * rank + s]).sum()
}

/// Positive iff every coordinate is at least `-ε`.
pub fn sign_of(coords: &[f64]) -> Option<Sign> {
    if coords.iter().all(|&c| c >= -SIGN_EPS) {
        Some(Sign::Positive)
    } else if coords.iter().all(|&c| c <= SIGN_EPS) {
        Some(Sign::Negative)
    } else {
        None
    }
}
