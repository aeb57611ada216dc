//! Finite Coxeter groups acting on their root systems.
//!
//! An element is stored as the permutation it induces on the root indices.
//! Since `w · (−α) = −(w · α)`, only the images of the positive roots are
//! kept; everything after construction is exact integer arithmetic.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::matrix::CoxeterMatrix;
use crate::roots::RootSystem;
use crate::spec::GroupSpec;
use crate::word::Word;

/// A group element: images of the positive roots `0..N` as root indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Box<[u16]>);

impl Element {
    pub fn images(&self) -> &[u16] {
        &self.0
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{:?}", &self.0)
    }
}

/// Which cosets of `W_J` a representative set is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `X_J = {w : ℓ(sw) > ℓ(w) for all s ∈ J}`, representatives of `W_J w`.
    Right,
    /// The inverses of `X_J`, representatives of `w W_J`.
    Left,
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    spec: GroupSpec,
    matrix: CoxeterMatrix,
    roots: RootSystem,
    /// `actions[s][i]` is the index of `r_s · root(i)` for all `2N` roots.
    actions: Vec<Vec<u16>>,
}

impl FiniteGroup {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let matrix = spec.coxeter_matrix();
        let roots = RootSystem::generate(&matrix, None).map_err(|e| match e {
            Error::InfiniteGroup(_) => Error::InfiniteGroup(spec.to_string()),
            other => other,
        })?;
        if roots.len() > u16::MAX as usize {
            return Err(Error::Unsupported(format!("{spec}: {} roots exceed the index width", roots.len())));
        }
        let actions = (0..matrix.rank())
            .map(|s| {
                (0..roots.len())
                    .map(|i| roots.reflect_index(s, i).map(|j| j as u16).ok_or(Error::NonConvergence(0)))
                    .collect::<Result<Vec<u16>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { spec: spec.clone(), matrix, roots, actions })
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(&GroupSpec::parse(label)?)
    }

    pub fn from_matrix(matrix: CoxeterMatrix) -> Result<Self> {
        Self::new(&GroupSpec::Custom(matrix))
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn positive_count(&self) -> usize {
        self.roots.positive_count()
    }

    fn n(&self) -> usize {
        self.roots.positive_count()
    }

    /// Index of `w · root(i)`.
    #[inline]
    pub fn apply(&self, w: &Element, i: usize) -> usize {
        let n = self.n();
        if i < n {
            w.0[i] as usize
        } else {
            let j = w.0[i - n] as usize;
            if j < n {
                j + n
            } else {
                j - n
            }
        }
    }

    /// The generator `r_label`.
    pub fn generator(&self, label: usize) -> Result<Element> {
        self.element_from_word(&Word::new(vec![label]))
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        Element(y.0.iter().map(|&j| self.apply(x, j as usize) as u16).collect())
    }

    /// `r_s · w` for 0-based `s`.
    pub fn mul_generator_left(&self, s: usize, w: &Element) -> Element {
        let act = &self.actions[s];
        Element(w.0.iter().map(|&j| act[j as usize]).collect())
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let n = self.n();
        let mut inv = vec![0u16; n];
        for (i, &j) in w.0.iter().enumerate() {
            let j = j as usize;
            if j < n {
                inv[j] = i as u16;
            } else {
                inv[j - n] = (i + n) as u16;
            }
        }
        Element(inv.into_boxed_slice())
    }

    pub fn conjugate(&self, w: &Element, by: &Element) -> Element {
        self.mul(&self.mul(&self.inverse(by), w), by)
    }

    pub fn is_identity(&self, w: &Element) -> bool {
        w.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn is_involution(&self, w: &Element) -> bool {
        !self.is_identity(w) && (0..self.n()).all(|i| self.apply(w, w.0[i] as usize) == i)
    }

    /// `ℓ(w) = |N(w)|`.
    pub fn length(&self, w: &Element) -> usize {
        let n = self.n();
        w.0.iter().filter(|&&j| j as usize >= n).count()
    }

    /// `N(w)`: indices of the positive roots sent negative, ascending.
    pub fn n_set(&self, w: &Element) -> Vec<usize> {
        let n = self.n();
        (0..n).filter(|&i| w.0[i] as usize >= n).collect()
    }

    pub fn n_set_bits(&self, w: &Element) -> FixedBitSet {
        let n = self.n();
        let mut bits = FixedBitSet::with_capacity(n);
        for (i, &j) in w.0.iter().enumerate() {
            if j as usize >= n {
                bits.insert(i);
            }
        }
        bits
    }

    /// Right descent labels `{r : ℓ(wr) < ℓ(w)}`, 1-based.
    pub fn right_descents(&self, w: &Element) -> BTreeSet<usize> {
        (0..self.rank()).filter(|&s| self.is_right_descent(w, s)).map(|s| s + 1).collect()
    }

    /// Left descent labels `{r : ℓ(rw) < ℓ(w)}`, 1-based.
    pub fn left_descents(&self, w: &Element) -> BTreeSet<usize> {
        self.right_descents(&self.inverse(w))
    }

    /// `(left, right)` descent sets.
    pub fn descent_sets(&self, w: &Element) -> (BTreeSet<usize>, BTreeSet<usize>) {
        (self.left_descents(w), self.right_descents(w))
    }

    /// Lexicographically least reduced word: peel off the smallest left
    /// descent at each step.
    pub fn reduced_word(&self, w: &Element) -> Word {
        let mut letters = Vec::with_capacity(self.length(w));
        // Left descents of w are right descents of w⁻¹.
        let mut inv = self.inverse(w);
        while let Some(s) = (0..self.rank()).find(|&s| self.is_right_descent(&inv, s)) {
            letters.push(s + 1);
            inv = self.mul_generator(&inv, s);
        }
        Word::new(letters)
    }

    /// Labels occurring in (every) reduced word of `w`.
    pub fn support(&self, w: &Element) -> BTreeSet<usize> {
        self.reduced_word(w).letters().iter().copied().collect()
    }

    /// `w_0`, reached by greedy ascent with lowest-index tie-breaking.
    pub fn longest_element(&self) -> Element {
        self.longest_word_and_element().1
    }

    pub fn longest_word(&self) -> Word {
        self.longest_word_and_element().0
    }

    fn longest_word_and_element(&self) -> (Word, Element) {
        let mut w = self.identity();
        let mut word = Word::empty();
        while let Some(s) = (0..self.rank()).find(|&s| !self.is_right_descent(&w, s)) {
            w = self.mul_generator(&w, s);
            word.push(s + 1);
        }
        (word, w)
    }

    /// Visits the group one length layer at a time, in increasing length.
    /// Layers are in deterministic discovery order.
    pub fn for_each_layer(&self, mut visit: impl FnMut(usize, &[Element])) {
        let mut layer = vec![self.identity()];
        let mut len = 0;
        while !layer.is_empty() {
            visit(len, &layer);
            let mut seen = HashSet::with_capacity(layer.len() * 2);
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.rank() {
                    if !self.is_right_descent(w, s) {
                        let ws = self.mul_generator(w, s);
                        if seen.insert(ws.clone()) {
                            next.push(ws);
                        }
                    }
                }
            }
            layer = next;
            len += 1;
        }
    }

    /// All elements, ordered by length.
    pub fn elements(&self) -> Vec<Element> {
        let mut all = Vec::new();
        self.for_each_layer(|_, layer| all.extend_from_slice(layer));
        all
    }

    pub fn order(&self) -> usize {
        let mut count = 0;
        self.for_each_layer(|_, layer| count += layer.len());
        count
    }

    /// Order of the standard parabolic subgroup `W_J` (1-based labels).
    pub fn parabolic_order(&self, labels: &[usize]) -> Result<usize> {
        if labels.is_empty() {
            return Ok(1);
        }
        let idx = self.labels_to_indices(labels)?;
        Ok(FiniteGroup::from_matrix(self.matrix.submatrix(&idx))?.order())
    }

    fn labels_to_indices(&self, labels: &[usize]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|&l| {
                if l == 0 || l > self.rank() {
                    Err(Error::GeneratorOutOfRange { index: l, rank: self.rank() })
                } else {
                    Ok(l - 1)
                }
            })
            .collect()
    }

    /// Distinguished coset representatives of `W_J`, ordered by length.
    ///
    /// Built by right multiplication from the identity; every prefix of a
    /// member of `X_J` is again in `X_J`, so the search is closed.
    pub fn coset_representatives(&self, labels: &[usize], side: Side) -> Result<Vec<Element>> {
        let j = self.labels_to_indices(labels)?;
        let mut out = vec![self.identity()];
        let mut layer = vec![self.identity()];
        while !layer.is_empty() {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.rank() {
                    if self.is_right_descent(w, s) {
                        continue;
                    }
                    let ws = self.mul_generator(w, s);
                    let inv = self.inverse(&ws);
                    if j.iter().any(|&t| self.is_right_descent(&inv, t)) {
                        continue;
                    }
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
            out.extend_from_slice(&next);
            layer = next;
        }
        if side == Side::Left {
            out = out.iter().map(|w| self.inverse(w)).collect();
        }
        Ok(out)
    }
}

impl CoxeterSystem for FiniteGroup {
    type Elem = Element;

    fn rank(&self) -> usize {
        self.matrix.rank()
    }

    fn identity(&self) -> Element {
        Element((0..self.n() as u16).collect())
    }

    fn mul_generator(&self, w: &Element, s: usize) -> Element {
        let act = &self.actions[s];
        Element(act[..self.n()].iter().map(|&j| self.apply(w, j as usize) as u16).collect())
    }

    #[inline]
    fn is_right_descent(&self, w: &Element, s: usize) -> bool {
        w.0[s] as usize >= self.n()
    }
}
