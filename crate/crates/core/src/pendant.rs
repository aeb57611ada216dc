//! Pendant elements: involutions of valency one.
//!
//! Every pendant element of a finite irreducible group has the form `w_0 x`
//! with `x^{w_0} = x^{-1}`, and the admissible `x` are known type by type.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::finite::{Element, FiniteGroup};
use crate::graph::{E0Graph, InvolutionSet};
use crate::spec::GroupSpec;
use crate::word::Word;

/// The words `x` such that the pendant elements are exactly `{w_0 x}`.
pub fn predicted_pendant_suffixes(spec: &GroupSpec) -> Result<Vec<Word>> {
    let generators = |n: usize| (1..=n).map(|i| Word::new(vec![i])).collect::<Vec<_>>();
    let words = match *spec {
        GroupSpec::A(n) if n >= 2 => {
            let mut out = Vec::new();
            for i in 1..=n.div_ceil(2) {
                out.push(Word::run(i, n + 1 - i));
                out.push(Word::run(n + 1 - i, i));
            }
            out
        }
        GroupSpec::B(n) | GroupSpec::H(n) => generators(n),
        GroupSpec::F4 => generators(4),
        GroupSpec::E(7) | GroupSpec::E(8) => generators(spec.rank()),
        GroupSpec::D(n) if n % 2 == 0 => generators(n),
        GroupSpec::D(n) => {
            let mut out = generators(n - 2);
            out.push(Word::new(vec![n, n - 2, n - 1]));
            out.push(Word::new(vec![n - 1, n - 2, n]));
            out
        }
        GroupSpec::E(6) => vec![
            Word::new(vec![2]),
            Word::new(vec![4]),
            Word::new(vec![5, 4, 3]),
            Word::new(vec![3, 4, 5]),
            Word::new(vec![6, 5, 4, 3, 1]),
            Word::new(vec![1, 3, 4, 5, 6]),
        ],
        GroupSpec::I2(m) if m % 2 == 0 => generators(2),
        GroupSpec::I2(_) => vec![Word::new(vec![1, 2]), Word::new(vec![2, 1])],
        _ => {
            return Err(Error::Unsupported(format!(
                "pendant prediction needs a finite irreducible group of rank at least 2, got {spec}"
            )))
        }
    };
    Ok(words)
}

/// The predicted pendant set as elements, deduplicated and sorted.
pub fn predicted_pendants(group: &FiniteGroup) -> Result<BTreeSet<Element>> {
    let w0 = group.longest_element();
    predicted_pendant_suffixes(group.spec())?.iter().map(|x| Ok(group.mul(&w0, &group.element_from_word(x)?))).collect()
}

/// Computed versus predicted pendant elements.
#[derive(Debug, Clone, Serialize)]
pub struct PendantReport {
    pub group: String,
    pub computed: Vec<Word>,
    pub predicted: Vec<Word>,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl PendantReport {
    pub fn new(group: &FiniteGroup, graph: &E0Graph) -> Result<Self> {
        let computed: BTreeSet<Element> = graph.pendant_elements().into_iter().collect();
        let predicted = predicted_pendants(group)?;
        let words = |set: &BTreeSet<Element>| {
            let mut w: Vec<Word> = set.iter().map(|e| group.reduced_word(e)).collect();
            w.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            w
        };
        Ok(PendantReport {
            group: group.spec().to_string(),
            computed: words(&computed),
            predicted: words(&predicted),
            matches: computed == predicted,
        })
    }
}

/// `Δ₁(w_0 x) = {w ∈ I(W) : ℓ(xw) = ℓ(x) − ℓ(w)}`, computed without the graph.
pub fn delta1_of_w0x(group: &FiniteGroup, involutions: &InvolutionSet, x: &Element) -> Result<Vec<Element>> {
    let w0x = group.mul(&group.longest_element(), x);
    if !group.is_involution(&w0x) {
        return Err(Error::NotInvolution(group.reduced_word(&w0x).to_string()));
    }
    let lx = group.length(x);
    Ok(involutions
        .elements()
        .iter()
        .filter(|w| {
            let lw = group.length(w);
            lw <= lx && group.length(&group.mul(x, w)) == lx - lw
        })
        .cloned()
        .collect())
}

/// Parameters `(a, λ, μ)` of a sequential element `[a−μ ↗ a−1, a+λ ↘ a]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sequential {
    pub a: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl Sequential {
    pub fn word(&self) -> Word {
        let mut letters =
            if self.mu > 0 { Word::run(self.a - self.mu, self.a - 1).letters().to_vec() } else { Vec::new() };
        letters.extend_from_slice(Word::run(self.a + self.lambda, self.a).letters());
        Word::new(letters)
    }
}

/// Lookup of every sequential element of `W(A_n)`.
///
/// Each family member `[a−μ ↗ a−1, a+λ ↘ a]` is reduced, so an element is
/// sequential iff it equals one of them; comparing elements settles this
/// without searching braid moves.
pub struct SequentialIndex {
    group: FiniteGroup,
    table: HashMap<Element, Sequential>,
}

impl SequentialIndex {
    pub fn new(rank: usize) -> Result<Self> {
        let group = FiniteGroup::new(&GroupSpec::A(rank))?;
        let mut table = HashMap::new();
        for a in 1..=rank {
            for mu in 0..a {
                for lambda in 0..=rank - a {
                    let seq = Sequential { a, lambda, mu };
                    let e = group.element_from_word(&seq.word())?;
                    table.entry(e).or_insert(seq);
                }
            }
        }
        Ok(SequentialIndex { group, table })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lookup(&self, x: &Element) -> Option<Sequential> {
        self.table.get(x).copied()
    }

    pub fn is_sequential(&self, word: &Word) -> Result<Option<Sequential>> {
        Ok(self.lookup(&self.group.element_from_word(word)?))
    }
}

/// Whether the element of `word` in `W(A_rank)` is sequential.
pub fn is_sequential(word: &Word, rank: usize) -> Result<Option<Sequential>> {
    SequentialIndex::new(rank)?.is_sequential(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn b3_prediction() {
        let g = FiniteGroup::from_label("B3").unwrap();
        let w0 = g.longest_element();
        let expected: BTreeSet<Element> = (1..=3).map(|i| g.mul(&w0, &g.generator(i).unwrap())).collect();
        assert_eq!(predicted_pendants(&g).unwrap(), expected);
    }

    #[test]
    fn a3_prediction_collapses() {
        let g = FiniteGroup::from_label("A3").unwrap();
        let predicted = predicted_pendants(&g).unwrap();
        assert_eq!(predicted.len(), 3);
        let w0 = g.longest_element();
        for x in [w(&[1, 2, 3]), w(&[3, 2, 1]), w(&[2])] {
            assert!(predicted.contains(&g.mul(&w0, &g.element_from_word(&x).unwrap())));
        }
    }

    #[test]
    fn reports_match_in_small_groups() {
        for label in ["A2", "A4", "B2", "D5", "I2(5)", "I2(8)", "H3"] {
            let g = FiniteGroup::from_label(label).unwrap();
            let graph = E0Graph::build(&g);
            let report = PendantReport::new(&g, &graph).unwrap();
            assert!(report.matches, "{label}: {report:?}");
            assert_eq!(report.computed.len(), g.spec().rank());
        }
    }

    #[test]
    fn unsupported_types() {
        assert!(predicted_pendant_suffixes(&GroupSpec::parse("A1xA1").unwrap()).is_err());
        assert!(predicted_pendant_suffixes(&GroupSpec::A(1)).is_err());
        assert!(predicted_pendant_suffixes(&GroupSpec::Universal(3)).is_err());
    }

    #[test]
    fn delta1_examples() {
        let g = FiniteGroup::from_label("B3").unwrap();
        let inv = InvolutionSet::enumerate(&g);
        let r2 = g.generator(2).unwrap();
        assert_eq!(delta1_of_w0x(&g, &inv, &r2).unwrap(), vec![r2]);

        let g = FiniteGroup::from_label("D5").unwrap();
        let inv = InvolutionSet::enumerate(&g);
        let x = g.element_from_word(&w(&[5, 3, 4])).unwrap();
        assert_eq!(delta1_of_w0x(&g, &inv, &x).unwrap(), vec![g.generator(4).unwrap()]);

        let g = FiniteGroup::from_label("A5").unwrap();
        let inv = InvolutionSet::enumerate(&g);
        for i in 1..=3 {
            let x = g.element_from_word(&Word::run(6 - i, i)).unwrap();
            assert_eq!(delta1_of_w0x(&g, &inv, &x).unwrap(), vec![g.generator(i).unwrap()]);
        }
        let not = g.element_from_word(&w(&[1])).unwrap();
        let w0 = g.longest_element();
        assert!(!g.is_involution(&g.mul(&w0, &not)));
        assert!(matches!(delta1_of_w0x(&g, &inv, &not), Err(Error::NotInvolution(_))));
    }

    #[test]
    fn delta1_agrees_with_graph() {
        let g = FiniteGroup::from_label("A4").unwrap();
        let graph = E0Graph::build(&g);
        let w0 = g.longest_element();
        for (i, v) in graph.vertices().elements().iter().enumerate() {
            let x = g.mul(&w0, v);
            let mut via: Vec<Element> = delta1_of_w0x(&g, graph.vertices(), &x).unwrap();
            let mut direct: Vec<Element> =
                graph.neighborhood_indices(i).into_iter().map(|j| graph.vertices().element(j).clone()).collect();
            via.sort();
            direct.sort();
            assert_eq!(via, direct);
        }
    }

    #[test]
    fn sequential_examples() {
        assert_eq!(is_sequential(&w(&[2]), 3).unwrap(), Some(Sequential { a: 2, lambda: 0, mu: 0 }));
        assert_eq!(is_sequential(&w(&[3, 2, 1]), 3).unwrap(), Some(Sequential { a: 1, lambda: 2, mu: 0 }));
        assert_eq!(is_sequential(&w(&[1, 3]), 3).unwrap(), None);
        assert_eq!(is_sequential(&w(&[]), 3).unwrap(), None);
        // a different reduced word of a sequential element is still recognised
        assert_eq!(is_sequential(&w(&[1, 3, 2]), 3).unwrap(), Some(Sequential { a: 2, lambda: 1, mu: 1 }));
        assert_eq!(Sequential { a: 3, lambda: 1, mu: 2 }.word(), w(&[1, 2, 4, 3]));
    }
}
